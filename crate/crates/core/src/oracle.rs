//! Brute-force ground truth: rainbow/strong-rainbow verifiers and exact
//! rc/src solvers for desk-scale instances.

use std::collections::VecDeque;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Color-set states are fixed-width bit sets.
pub const MAX_ORACLE_COLORS: usize = 24;
/// Hard guard for the exact solvers.
pub const MAX_ORACLE_EDGES: usize = 20;

/// A set of unordered vertex pairs.
#[derive(Debug, Clone, Default)]
pub struct PairSet {
    pairs: Vec<(usize, usize)>,
}

impl PairSet {
    pub fn new(g: &Graph, raw: &[(usize, usize)]) -> Result<Self> {
        let n = g.vertex_count();
        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(raw.len());
        for &(u, v) in raw {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!("pair ({u}, {v}) references a missing vertex")));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("pair ({u}, {u}) is degenerate")));
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(PairSet { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

fn check_total(g: &Graph, c: &EdgeColoring) -> Result<()> {
    if c.len() != g.edge_count() {
        return Err(Error::InvalidInput(format!(
            "coloring covers {} edges, graph has {}",
            c.len(),
            g.edge_count()
        )));
    }
    Ok(())
}

/// True iff every vertex pair is joined by a path with pairwise-distinct
/// edge colors. Exact search over (vertex, used-color-set) states.
pub fn is_rainbow_connected(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    check_total(g, c)?;
    if c.color_count() > MAX_ORACLE_COLORS {
        return Err(Error::TooManyColors);
    }
    let order: Vec<usize> = (0..g.vertex_count()).collect();
    Ok(rainbow_connected_impl(g, c.as_slice(), &order))
}

/// Shared search core; `sources` only tunes the order failures are found
/// in, each unordered pair is still checked exactly once.
fn rainbow_connected_impl(g: &Graph, colors: &[usize], sources: &[usize]) -> bool {
    let n = g.vertex_count();
    for &s in sources {
        let mut remaining = n - 1 - s; // targets t > s
        if remaining == 0 {
            continue;
        }
        let mut masks: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut reached = vec![false; n];
        reached[s] = true;
        masks[s].push(0);
        let mut queue: VecDeque<(usize, u32)> = VecDeque::from([(s, 0u32)]);
        'search: while let Some((v, mask)) = queue.pop_front() {
            for &w in g.neighbors(v) {
                let w = w as usize;
                let e = g.edge_index(v, w).unwrap();
                let bit = 1u32 << colors[e];
                if mask & bit != 0 {
                    continue;
                }
                let nm = mask | bit;
                if masks[w].iter().any(|&m0| m0 & nm == m0) {
                    continue;
                }
                masks[w].retain(|&m1| nm & m1 != nm);
                masks[w].push(nm);
                if !reached[w] {
                    reached[w] = true;
                    if w > s {
                        remaining -= 1;
                        if remaining == 0 {
                            break 'search;
                        }
                    }
                }
                queue.push_back((w, nm));
            }
        }
        if remaining != 0 {
            return false;
        }
    }
    true
}

/// True iff every vertex pair has at least one shortest path with
/// pairwise-distinct colors.
///
/// When all geodesics from a source are unique (always the case on block
/// graphs) the check walks the shortest-path tree and imposes no limit on
/// the number of colors; otherwise color sets are propagated through the
/// shortest-path DAG, which requires `color_count <= MAX_ORACLE_COLORS`.
pub fn is_strong_rainbow_connected(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    check_total(g, c)?;
    strong_rainbow_connected_impl(g, c.as_slice(), c.color_count())
}

fn strong_rainbow_connected_impl(g: &Graph, colors: &[usize], color_count: usize) -> Result<bool> {
    let n = g.vertex_count();
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parents: Vec<Vec<usize>> = vec![Vec::new(); n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut bfs_order = vec![s];
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parents[w].push(v);
                    queue.push_back(w);
                    bfs_order.push(w);
                } else if dist[w] == dist[v] + 1 {
                    parents[w].push(v);
                }
            }
        }
        let unique = parents.iter().all(|p| p.len() <= 1);
        if unique {
            // DFS along the shortest-path tree, tracking color usage on
            // the current root path.
            let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
            for v in 0..n {
                if let Some(&p) = parents[v].first() {
                    children[p].push(v);
                }
            }
            let mut used = vec![0usize; color_count];
            // (vertex, entering) pairs; entering == false pops the color.
            let mut stack: Vec<(usize, bool)> = vec![(s, true)];
            while let Some((v, entering)) = stack.pop() {
                let col = parents[v].first().map(|&p| {
                    colors[g.edge_index(p, v).unwrap()]
                });
                if entering {
                    if let Some(col) = col {
                        if used[col] > 0 {
                            return Ok(false);
                        }
                        used[col] += 1;
                    }
                    stack.push((v, false));
                    for &w in &children[v] {
                        stack.push((w, true));
                    }
                } else if let Some(col) = col {
                    used[col] -= 1;
                }
            }
        } else {
            if color_count > MAX_ORACLE_COLORS {
                return Err(Error::TooManyColors);
            }
            let mut masks: Vec<Vec<u32>> = vec![Vec::new(); n];
            masks[s].push(0);
            for &v in bfs_order.iter().skip(1) {
                let mut out: Vec<u32> = Vec::new();
                for &p in &parents[v] {
                    let bit = 1u32 << colors[g.edge_index(p, v).unwrap()];
                    for &m in &masks[p] {
                        if m & bit == 0 {
                            let nm = m | bit;
                            if !out.contains(&nm) {
                                out.push(nm);
                            }
                        }
                    }
                }
                if out.is_empty() {
                    return Ok(false);
                }
                masks[v] = out;
            }
        }
    }
    Ok(true)
}

fn diameter_and_source_order(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let ecc: Vec<usize> = (0..n)
        .map(|s| g.bfs_distances(s).into_iter().max().unwrap())
        .collect();
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(ecc[v]), v));
    (diameter, order)
}

fn guard_edges(g: &Graph) -> Result<()> {
    if g.edge_count() > MAX_ORACLE_EDGES {
        return Err(Error::InvalidInput(format!(
            "exact search limited to {MAX_ORACLE_EDGES} edges, graph has {}",
            g.edge_count()
        )));
    }
    Ok(())
}

/// Smallest `k <= cap` admitting a rainbow-connecting `k`-coloring, or
/// `cap + 1` if there is none. Colorings are enumerated in canonical
/// first-occurrence form to quotient out color permutations.
pub fn exact_rc(g: &Graph, cap: usize) -> Result<usize> {
    guard_edges(g)?;
    let m = g.edge_count();
    if m == 0 {
        return Ok(0);
    }
    let (diameter, order) = diameter_and_source_order(g);
    let mut colors = vec![0usize; m];
    for k in diameter.max(1)..=cap.min(m) {
        if search_rc(g, k, &mut colors, 0, 0, &order) {
            return Ok(k);
        }
    }
    Ok(cap + 1)
}

fn search_rc(
    g: &Graph,
    k: usize,
    colors: &mut Vec<usize>,
    i: usize,
    used: usize,
    order: &[usize],
) -> bool {
    let m = colors.len();
    if i == m {
        return used == k && rainbow_connected_impl(g, colors, order);
    }
    if used + (m - i) < k {
        return false; // not enough edges left to introduce k colors
    }
    let limit = (used + 1).min(k);
    for c in 0..limit {
        colors[i] = c;
        let next_used = used.max(c + 1);
        if search_rc(g, k, colors, i + 1, next_used, order) {
            return true;
        }
    }
    false
}

/// Smallest `k <= cap` admitting a strong-rainbow-connecting `k`-coloring,
/// or `cap + 1` if there is none.
pub fn exact_src(g: &Graph, cap: usize) -> Result<usize> {
    guard_edges(g)?;
    let m = g.edge_count();
    if m == 0 {
        return Ok(0);
    }
    let (diameter, _) = diameter_and_source_order(g);

    // On geodetic inputs the unique geodesics can be frozen up front and
    // partial colorings pruned as soon as a geodesic repeats a color.
    let geodesics = unique_geodesics(g);
    let mut colors = vec![0usize; m];
    for k in diameter.max(1)..=cap.min(m) {
        let found = match &geodesics {
            Some(paths) => {
                let mut by_last: Vec<Vec<usize>> = vec![Vec::new(); m];
                for (id, path) in paths.iter().enumerate() {
                    let last = *path.iter().max().unwrap();
                    by_last[last].push(id);
                }
                search_src_geodetic(k, &mut colors, 0, 0, paths, &by_last)
            }
            None => search_src_general(g, k, &mut colors, 0, 0),
        };
        if found {
            return Ok(k);
        }
    }
    Ok(cap + 1)
}

/// Edge-index lists of the unique geodesic of every pair at distance >= 2,
/// or `None` when some pair has several geodesics.
fn unique_geodesics(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let mut paths = Vec::new();
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut multi = false;
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if dist[w] == dist[v] + 1 {
                    multi = true;
                }
            }
        }
        if multi {
            return None;
        }
        for t in (s + 1)..n {
            if dist[t] < 2 {
                continue;
            }
            let mut path = Vec::with_capacity(dist[t]);
            let mut v = t;
            while v != s {
                let p = parent[v];
                path.push(g.edge_index(p, v).unwrap());
                v = p;
            }
            paths.push(path);
        }
    }
    Some(paths)
}

fn search_src_geodetic(
    k: usize,
    colors: &mut Vec<usize>,
    i: usize,
    used: usize,
    paths: &[Vec<usize>],
    by_last: &[Vec<usize>],
) -> bool {
    let m = colors.len();
    if i == m {
        return used == k;
    }
    if used + (m - i) < k {
        return false;
    }
    let limit = (used + 1).min(k);
    'next_color: for c in 0..limit {
        colors[i] = c;
        for &pid in &by_last[i] {
            let mut mask = 0u32;
            for &e in &paths[pid] {
                let bit = 1u32 << colors[e];
                if mask & bit != 0 {
                    continue 'next_color;
                }
                mask |= bit;
            }
        }
        if search_src_geodetic(k, colors, i + 1, used.max(c + 1), paths, by_last) {
            return true;
        }
    }
    false
}

fn search_src_general(g: &Graph, k: usize, colors: &mut Vec<usize>, i: usize, used: usize) -> bool {
    let m = colors.len();
    if i == m {
        return used == k
            && strong_rainbow_connected_impl(g, colors, k).unwrap_or(false);
    }
    if used + (m - i) < k {
        return false;
    }
    let limit = (used + 1).min(k);
    for c in 0..limit {
        colors[i] = c;
        if search_src_general(g, k, colors, i + 1, used.max(c + 1)) {
            return true;
        }
    }
    false
}

/// Center and leaves of a star graph, or an error if `g` is not a star.
pub fn star_center(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    if n == 1 {
        return Ok((0, Vec::new()));
    }
    let center = (0..n)
        .find(|&v| g.degree(v) == n - 1)
        .ok_or(Error::NotStar)?;
    if g.edge_count() != n - 1 {
        return Err(Error::NotStar);
    }
    let leaves = (0..n).filter(|&v| v != center).collect();
    Ok((center, leaves))
}

/// Decides whether some `k`-coloring of the star's edges connects every
/// pair in `p` by a rainbow (length-2) path, i.e. gives the two incident
/// edges distinct colors.
pub fn subset_src_decide(star: &Graph, p: &PairSet, k: usize) -> Result<bool> {
    Ok(subset_src_color(star, p, k)?.is_some())
}

/// Like [`subset_src_decide`], but returns a witness coloring when one
/// exists (the reduction tests feed it to the coloring extension).
pub fn subset_src_color(star: &Graph, p: &PairSet, k: usize) -> Result<Option<EdgeColoring>> {
    let (center, leaves) = star_center(star)?;
    if leaves.len() > 12 {
        return Err(Error::InvalidInput("subset search limited to 12 leaves".into()));
    }
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    for &(u, v) in p.pairs() {
        if u == center || v == center {
            return Err(Error::InvalidInput(format!(
                "pair ({u}, {v}) touches the star center"
            )));
        }
    }
    // Conflicts between star edges, keyed by the later edge index.
    let m = star.edge_count();
    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(u, v) in p.pairs() {
        let eu = star.edge_index(center, u).unwrap();
        let ev = star.edge_index(center, v).unwrap();
        conflicts[eu.max(ev)].push(eu.min(ev));
    }
    let mut colors = vec![0usize; m];
    if search_subset(k, &mut colors, 0, 0, &conflicts) {
        Ok(Some(EdgeColoring::from_raw(colors)))
    } else {
        Ok(None)
    }
}

fn search_subset(
    k: usize,
    colors: &mut Vec<usize>,
    i: usize,
    used: usize,
    conflicts: &[Vec<usize>],
) -> bool {
    if i == colors.len() {
        return true;
    }
    let limit = (used + 1).min(k);
    'next: for c in 0..limit {
        for &j in &conflicts[i] {
            if colors[j] == c {
                continue 'next;
            }
        }
        colors[i] = c;
        if search_subset(k, colors, i + 1, used.max(c + 1), conflicts) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{generate, random_block_graph, FamilySpec};

    fn path(n: usize) -> Graph {
        generate(FamilySpec::Path(n)).unwrap()
    }

    fn coloring(colors: &[usize]) -> EdgeColoring {
        EdgeColoring::from_raw(colors.to_vec())
    }

    #[test]
    fn rainbow_verifier_on_paths() {
        let p3 = path(3);
        assert!(is_rainbow_connected(&p3, &coloring(&[0, 1])).unwrap());
        assert!(!is_rainbow_connected(&p3, &coloring(&[0, 0])).unwrap());
    }

    #[test]
    fn rainbow_verifier_on_bowtie() {
        let g = generate(FamilySpec::Bowtie).unwrap();
        let per_block: Vec<usize> = crate::graph::block_decomposition(&g).block_of_edge;
        assert!(is_rainbow_connected(&g, &coloring(&per_block)).unwrap());
    }

    #[test]
    fn verifier_input_guards() {
        let p3 = path(3);
        assert!(matches!(
            is_rainbow_connected(&p3, &coloring(&[0])),
            Err(Error::InvalidInput(_))
        ));
        let wide: Vec<usize> = (0..30).collect();
        let p31 = path(31);
        assert!(matches!(
            is_rainbow_connected(&p31, &EdgeColoring::new(wide).unwrap()),
            Err(Error::TooManyColors)
        ));
    }

    #[test]
    fn strong_verifier_on_paths_and_bowtie() {
        let p3 = path(3);
        assert!(is_strong_rainbow_connected(&p3, &coloring(&[0, 1])).unwrap());
        assert!(!is_strong_rainbow_connected(&p3, &coloring(&[0, 0])).unwrap());
        let g = generate(FamilySpec::Bowtie).unwrap();
        assert!(!is_strong_rainbow_connected(&g, &coloring(&[0; 6])).unwrap());
    }

    #[test]
    fn strong_verifier_on_windmill() {
        let g = generate(FamilySpec::Windmill { copies: 3, size: 4 }).unwrap();
        let per_block = crate::graph::block_decomposition(&g).block_of_edge;
        assert!(is_strong_rainbow_connected(&g, &coloring(&per_block)).unwrap());
    }

    #[test]
    fn strong_verifier_handles_many_colors_on_geodetic_inputs() {
        // A long path needs one color per edge; the unique-geodesic walk
        // must cope with color counts far beyond the mask width.
        let g = path(60);
        let rainbow: Vec<usize> = (0..59).collect();
        assert!(is_strong_rainbow_connected(&g, &EdgeColoring::new(rainbow).unwrap()).unwrap());
        let mut bad: Vec<usize> = (0..59).collect();
        bad[58] = 0;
        assert!(!is_strong_rainbow_connected(&g, &EdgeColoring::from_raw(bad)).unwrap());
    }

    /// Naive cross-check: enumerate every geodesic explicitly.
    fn strong_rainbow_naive(g: &Graph, c: &EdgeColoring) -> bool {
        let n = g.vertex_count();
        let dists: Vec<Vec<usize>> = (0..n).map(|s| g.bfs_distances(s)).collect();
        for s in 0..n {
            for t in (s + 1)..n {
                let mut found = false;
                // DFS over the shortest-path DAG from t back to s.
                let mut stack: Vec<(usize, Vec<usize>)> = vec![(t, Vec::new())];
                while let Some((v, used)) = stack.pop() {
                    if v == s {
                        found = true;
                        break;
                    }
                    for &w in g.neighbors(v) {
                        let w = w as usize;
                        if dists[s][w] + 1 == dists[s][v] {
                            let col = c.color_of(g, v, w).unwrap();
                            if !used.contains(&col) {
                                let mut next = used.clone();
                                next.push(col);
                                stack.push((w, next));
                            }
                        }
                    }
                }
                if !found {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn strong_verifier_agrees_with_naive_enumeration() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 60 {
            let n = rng.gen_range(4..=8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let Ok(g) = Graph::from_edges(n, &edges) else { continue };
            let colors: Vec<usize> = (0..g.edge_count()).map(|_| rng.gen_range(0..3)).collect();
            let c = EdgeColoring::from_raw(colors);
            assert_eq!(
                is_strong_rainbow_connected(&g, &c).unwrap(),
                strong_rainbow_naive(&g, &c),
                "disagreement on {:?} with {:?}",
                g.edges(),
                c.as_slice()
            );
            checked += 1;
        }
    }

    #[test]
    fn strong_implies_rainbow_on_samples() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for seed in 0..40 {
            let g = random_block_graph(seed, 3, 4, false).unwrap();
            let colors: Vec<usize> = (0..g.edge_count()).map(|_| rng.gen_range(0..4)).collect();
            let c = EdgeColoring::from_raw(colors);
            if is_strong_rainbow_connected(&g, &c).unwrap() {
                assert!(is_rainbow_connected(&g, &c).unwrap(), "seed {seed}");
            }
        }
    }

    #[test]
    fn exact_rc_examples() {
        assert_eq!(exact_rc(&path(3), 5).unwrap(), 2);
        assert_eq!(exact_rc(&generate(FamilySpec::Bowtie).unwrap(), 5).unwrap(), 2);
        let triangle = generate(FamilySpec::Clique(3)).unwrap();
        assert_eq!(exact_rc(&triangle, 5).unwrap(), 1);
    }

    #[test]
    fn exact_rc_respects_the_cap() {
        // Path on 5 vertices has rc 4; with cap 2 the sentinel comes back.
        assert_eq!(exact_rc(&path(5), 2).unwrap(), 3);
        assert_eq!(exact_rc(&path(5), 4).unwrap(), 4);
    }

    #[test]
    fn exact_src_examples() {
        let triangle = generate(FamilySpec::Clique(3)).unwrap();
        assert_eq!(exact_src(&triangle, 3).unwrap(), 1);
        assert_eq!(exact_src(&generate(FamilySpec::Star(3)).unwrap(), 3).unwrap(), 3);
        assert_eq!(exact_src(&generate(FamilySpec::Bowtie).unwrap(), 6).unwrap(), 2);
    }

    #[test]
    fn exact_solvers_guard_edge_count() {
        let g = generate(FamilySpec::Clique(7)).unwrap();
        assert!(exact_rc(&g, 3).is_err());
        assert!(exact_src(&g, 3).is_err());
    }

    #[test]
    fn rc_src_diameter_order_on_small_samples() {
        for seed in 0..30 {
            let g = random_block_graph(seed, 3, 3, false).unwrap();
            if g.edge_count() > 12 {
                continue;
            }
            let m = g.edge_count();
            let rc = exact_rc(&g, m).unwrap();
            let src = exact_src(&g, m).unwrap();
            let diam = g
                .bfs_distances(0)
                .iter()
                .copied()
                .max()
                .unwrap();
            assert!(rc <= src, "seed {seed}");
            assert!(diam <= rc, "seed {seed}: diam from one source only");
        }
    }

    #[test]
    fn star_center_detection() {
        let star = generate(FamilySpec::Star(4)).unwrap();
        let (center, leaves) = star_center(&star).unwrap();
        assert_eq!(center, 0);
        assert_eq!(leaves, vec![1, 2, 3, 4]);
        assert!(matches!(star_center(&path(4)), Err(Error::NotStar)));
        assert!(matches!(
            star_center(&generate(FamilySpec::Clique(3)).unwrap()),
            Err(Error::NotStar)
        ));
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(star_center(&k1).unwrap(), (0, vec![]));
    }

    #[test]
    fn subset_src_examples() {
        let star3 = generate(FamilySpec::Star(3)).unwrap();
        let p = PairSet::new(&star3, &[(1, 2), (2, 3)]).unwrap();
        assert!(subset_src_decide(&star3, &p, 2).unwrap());
        let witness = subset_src_color(&star3, &p, 2).unwrap().unwrap();
        let e = |v: usize| star3.edge_index(0, v).unwrap();
        assert_ne!(witness.color_of_index(e(1)), witness.color_of_index(e(2)));
        assert_ne!(witness.color_of_index(e(2)), witness.color_of_index(e(3)));

        let star2 = generate(FamilySpec::Star(2)).unwrap();
        let p = PairSet::new(&star2, &[(1, 2)]).unwrap();
        assert!(!subset_src_decide(&star2, &p, 1).unwrap());

        let empty = PairSet::new(&star3, &[]).unwrap();
        assert!(subset_src_decide(&star3, &empty, 1).unwrap());
    }

    #[test]
    fn subset_src_guards() {
        let star3 = generate(FamilySpec::Star(3)).unwrap();
        let touching = PairSet::new(&star3, &[(0, 1)]).unwrap();
        assert!(subset_src_decide(&star3, &touching, 2).is_err());
        assert!(subset_src_decide(&star3, &PairSet::default(), 0).is_err());
        assert!(subset_src_decide(&path(4), &PairSet::default(), 2).is_err());
    }

    #[test]
    fn pair_set_construction() {
        let g = path(4);
        let p = PairSet::new(&g, &[(3, 1), (1, 3), (0, 2)]).unwrap();
        assert_eq!(p.pairs(), &[(0, 2), (1, 3)]);
        assert!(p.contains(3, 1));
        assert!(!p.contains(0, 3));
        assert!(PairSet::new(&g, &[(0, 4)]).is_err());
        assert!(PairSet::new(&g, &[(2, 2)]).is_err());
    }
}
