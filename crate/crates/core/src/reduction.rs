//! Star-to-split-graph construction and the accompanying coloring
//! extension.
//!
//! A subset strong rainbow connectivity instance on a star is turned into
//! a split graph whose strong rainbow colorability with k colors is
//! equivalent; the instance size does not depend on k.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{recognize, Graph};
use crate::oracle::{is_strong_rainbow_connected, star_center, PairSet};

/// The split graph produced from a star plus a pair set.
#[derive(Debug, Clone)]
pub struct SplitInstance {
    pub graph: Graph,
    pub star: Graph,
    pub center: usize,
    pub pairs: PairSet,
    /// `(leaf v, x_v)` in leaf order.
    pub leaf_gadgets: Vec<(usize, usize)>,
    /// `((u, v), x_{(u,v)})` for every leaf pair not in P, in
    /// lexicographic pair order.
    pub pair_gadgets: Vec<((usize, usize), usize)>,
    pub clique_part: Vec<usize>,
    pub independent_part: Vec<usize>,
}

/// Builds the split instance: per leaf a gadget triangle through the
/// center, per non-P leaf pair a gadget vertex adjacent to both leaves and
/// the center, and all gadget vertices pairwise adjacent.
pub fn build_split_instance(star: &Graph, p: &PairSet) -> Result<SplitInstance> {
    let (center, leaves) = star_center(star)?;
    for &(u, v) in p.pairs() {
        if u == center || v == center {
            return Err(Error::InvalidInput(format!(
                "pair ({u}, {v}) is not a leaf pair"
            )));
        }
    }

    let base = star.vertex_count();
    let mut edges: Vec<(usize, usize)> = star.edges().to_vec();
    let mut gadgets: Vec<usize> = Vec::new();

    let mut leaf_gadgets = Vec::with_capacity(leaves.len());
    for &v in &leaves {
        let x = base + gadgets.len();
        gadgets.push(x);
        leaf_gadgets.push((v, x));
        edges.push((v, x));
        edges.push((center, x));
    }

    let mut pair_gadgets = Vec::new();
    for (i, &u) in leaves.iter().enumerate() {
        for &v in &leaves[i + 1..] {
            let (u, v) = (u.min(v), u.max(v));
            if p.contains(u, v) {
                continue;
            }
            let x = base + gadgets.len();
            gadgets.push(x);
            pair_gadgets.push(((u, v), x));
            edges.push((u, x));
            edges.push((v, x));
            edges.push((center, x));
        }
    }

    for (i, &x) in gadgets.iter().enumerate() {
        for &y in &gadgets[i + 1..] {
            edges.push((x, y));
        }
    }

    let graph = Graph::from_edges(base + gadgets.len(), &edges)?;

    let mut clique_part = vec![center];
    clique_part.extend(&gadgets);
    clique_part.sort_unstable();
    let independent_part = leaves.clone();

    let report = recognize(&graph);
    if !report.is_split() {
        return Err(Error::Internal("constructed instance is not split".into()));
    }
    // Every P-pair must keep a unique geodesic (through the center).
    for &(u, v) in p.pairs() {
        let (count, dist) = geodesic_count(&graph, u, v);
        if dist != 2 || count != 1 {
            return Err(Error::Internal(format!(
                "pair ({u}, {v}) has {count} geodesics of length {dist}"
            )));
        }
    }

    Ok(SplitInstance {
        graph,
        star: star.clone(),
        center,
        pairs: p.clone(),
        leaf_gadgets,
        pair_gadgets,
        clique_part,
        independent_part,
    })
}

fn geodesic_count(g: &Graph, s: usize, t: usize) -> (u64, usize) {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut count = vec![0u64; n];
    dist[s] = 0;
    count[s] = 1;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            let w = w as usize;
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                count[w] = count[v];
                queue.push_back(w);
            } else if dist[w] == dist[v] + 1 {
                count[w] += count[v];
            }
        }
    }
    (count[t], dist[t])
}

/// Extends a star coloring that subset-strong-rainbow-connects P to a
/// strong rainbow coloring of the split instance, using colors c1 = 0 and
/// c2 = 1 on the gadget edges. The result is run through the strong
/// verifier; a precondition violation therefore surfaces as an error
/// rather than an invalid coloring.
pub fn extend_star_coloring(
    inst: &SplitInstance,
    chi: &EdgeColoring,
    k: usize,
) -> Result<EdgeColoring> {
    if k < 3 {
        return Err(Error::InvalidInput("extension requires k >= 3".into()));
    }
    if chi.len() != inst.star.edge_count() {
        return Err(Error::InvalidInput("star coloring does not match the star".into()));
    }
    if chi.color_count() > k {
        return Err(Error::InvalidInput(format!(
            "star coloring uses {} colors, more than k = {k}",
            chi.color_count()
        )));
    }
    let g = &inst.graph;
    let (c1, c2) = (0usize, 1usize);
    let mut colors = vec![usize::MAX; g.edge_count()];
    for (i, &(u, v)) in inst.star.edges().iter().enumerate() {
        colors[g.edge_index(u, v).unwrap()] = chi.color_of_index(i);
    }
    for &(v, x) in &inst.leaf_gadgets {
        colors[g.edge_index(v, x).unwrap()] = c1;
        colors[g.edge_index(inst.center, x).unwrap()] = c1;
    }
    for &((u, v), x) in &inst.pair_gadgets {
        colors[g.edge_index(u, x).unwrap()] = c1;
        colors[g.edge_index(v, x).unwrap()] = c2;
        colors[g.edge_index(inst.center, x).unwrap()] = c2;
    }
    // Clique edges among gadget vertices.
    for e in 0..g.edge_count() {
        if colors[e] == usize::MAX {
            colors[e] = c2;
        }
    }
    let coloring = EdgeColoring::from_raw(colors);
    if !is_strong_rainbow_connected(g, &coloring)? {
        return Err(Error::InvalidInput(
            "extended coloring is not strong rainbow connected; the star coloring does not subset-connect P"
                .into(),
        ));
    }
    Ok(coloring)
}

/// Writes the instance file: graph lines, then `# pair u v` lines for P
/// and the split partition as comments.
pub fn instance_to_text(inst: &SplitInstance) -> String {
    let mut out = inst.graph.to_text();
    for &(u, v) in inst.pairs.pairs() {
        out.push_str(&format!("# pair {u} {v}\n"));
    }
    let join = |vs: &[usize]| {
        vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    };
    out.push_str(&format!("# part clique {}\n", join(&inst.clique_part)));
    out.push_str(&format!("# part independent {}\n", join(&inst.independent_part)));
    out
}

/// Reads a graph file with trailing `# pair u v` comment lines.
pub fn parse_graph_with_pairs(text: &str) -> Result<(Graph, PairSet)> {
    let g = Graph::parse(text)?;
    let mut raw = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("# pair") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            let [u, v] = parts.as_slice() else {
                return Err(Error::Parse { line: idx + 1, msg: "expected '# pair u v'".into() });
            };
            let parse_num = |tok: &str| -> Result<usize> {
                tok.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("invalid vertex id '{tok}'"),
                })
            };
            raw.push((parse_num(u)?, parse_num(v)?));
        }
    }
    let pairs = PairSet::new(&g, &raw)?;
    Ok((g, pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{generate, FamilySpec};
    use crate::oracle::subset_src_color;

    fn star(n: usize) -> Graph {
        generate(FamilySpec::Star(n)).unwrap()
    }

    fn pairs(g: &Graph, raw: &[(usize, usize)]) -> PairSet {
        PairSet::new(g, raw).unwrap()
    }

    #[test]
    fn three_leaf_instance_shape() {
        let s = star(3);
        let inst = build_split_instance(&s, &pairs(&s, &[(1, 2), (2, 3)])).unwrap();
        assert_eq!(inst.graph.vertex_count(), 8);
        assert_eq!(inst.graph.edge_count(), 18);
        assert_eq!(inst.leaf_gadgets.len(), 3);
        // Only the (1, 3) pair is outside P.
        assert_eq!(inst.pair_gadgets.len(), 1);
        assert_eq!(inst.pair_gadgets[0].0, (1, 3));
        assert_eq!(inst.independent_part, vec![1, 2, 3]);
        assert_eq!(inst.clique_part.len(), 5);
    }

    #[test]
    fn two_leaf_instance_shape() {
        let s = star(2);
        let inst = build_split_instance(&s, &pairs(&s, &[(1, 2)])).unwrap();
        assert_eq!(inst.graph.vertex_count(), 5);
        assert_eq!(inst.graph.edge_count(), 7);
        assert!(inst.pair_gadgets.is_empty());
    }

    #[test]
    fn single_leaf_instance_is_a_triangle() {
        let s = star(1);
        let inst = build_split_instance(&s, &pairs(&s, &[])).unwrap();
        assert_eq!(inst.graph.vertex_count(), 3);
        assert_eq!(inst.graph.edge_count(), 3);
    }

    #[test]
    fn build_rejects_non_leaf_pairs() {
        let s = star(3);
        let p = pairs(&s, &[(0, 1)]);
        assert!(build_split_instance(&s, &p).is_err());
        let path = generate(FamilySpec::Path(4)).unwrap();
        assert!(build_split_instance(&path, &PairSet::default()).is_err());
    }

    #[test]
    fn extension_of_the_three_leaf_coloring() {
        let s = star(3);
        let inst = build_split_instance(&s, &pairs(&s, &[(1, 2), (2, 3)])).unwrap();
        // chi(a,1) = c1, chi(a,2) = c2, chi(a,3) = c1.
        let chi = EdgeColoring::new(vec![0, 1, 0]).unwrap();
        let extended = extend_star_coloring(&inst, &chi, 3).unwrap();
        assert!(extended.color_count() <= 3);
        assert!(is_strong_rainbow_connected(&inst.graph, &extended).unwrap());
    }

    #[test]
    fn extension_of_the_single_leaf_instance() {
        let s = star(1);
        let inst = build_split_instance(&s, &pairs(&s, &[])).unwrap();
        let chi = EdgeColoring::new(vec![0]).unwrap();
        let extended = extend_star_coloring(&inst, &chi, 3).unwrap();
        assert!(is_strong_rainbow_connected(&inst.graph, &extended).unwrap());
    }

    #[test]
    fn extension_with_all_pairs_and_rainbow_star() {
        let s = star(3);
        let all = pairs(&s, &[(1, 2), (1, 3), (2, 3)]);
        let inst = build_split_instance(&s, &all).unwrap();
        let chi = EdgeColoring::new(vec![0, 1, 2]).unwrap();
        let extended = extend_star_coloring(&inst, &chi, 3).unwrap();
        assert!(is_strong_rainbow_connected(&inst.graph, &extended).unwrap());
    }

    #[test]
    fn extension_guards() {
        let s = star(3);
        let p = pairs(&s, &[(1, 2)]);
        let inst = build_split_instance(&s, &p).unwrap();
        let chi = EdgeColoring::new(vec![0, 1, 0]).unwrap();
        assert!(extend_star_coloring(&inst, &chi, 2).is_err());
        let short = EdgeColoring::new(vec![0, 1]).unwrap();
        assert!(extend_star_coloring(&inst, &short, 3).is_err());
        // A star coloring that fails to subset-connect P surfaces as a
        // verifier failure.
        let mono = EdgeColoring::new(vec![0, 0, 0]).unwrap();
        assert!(extend_star_coloring(&inst, &mono, 3).is_err());
    }

    #[test]
    fn restriction_property_on_small_stars() {
        // A strong rainbow coloring of G' restricted to the star edges
        // must subset-connect P: P-pair geodesics are unique and run
        // through the center.
        let s = star(3);
        let p = pairs(&s, &[(1, 2), (2, 3)]);
        let inst = build_split_instance(&s, &p).unwrap();
        let chi = subset_src_color(&s, &p, 3).unwrap().unwrap();
        let extended = extend_star_coloring(&inst, &chi, 3).unwrap();
        for &(u, v) in p.pairs() {
            let cu = extended.color_of(&inst.graph, inst.center, u).unwrap();
            let cv = extended.color_of(&inst.graph, inst.center, v).unwrap();
            assert_ne!(cu, cv);
        }
    }

    #[test]
    fn instance_text_includes_pairs_and_partition() {
        let s = star(2);
        let p = pairs(&s, &[(1, 2)]);
        let inst = build_split_instance(&s, &p).unwrap();
        let text = instance_to_text(&inst);
        assert!(text.contains("# pair 1 2"));
        assert!(text.contains("# part clique"));
        assert!(text.contains("# part independent 1 2"));
        let (g2, p2) = parse_graph_with_pairs(&text).unwrap();
        assert_eq!(g2, inst.graph);
        assert_eq!(p2.pairs(), p.pairs());
    }
}
