//! Exact strong rainbow coloring of block graphs.
//!
//! The strong rainbow connection number of a block graph equals the number
//! of clique-tree nodes with labeled degree below 3; blocks behind such
//! nodes get fresh colors and every other block borrows three of them.

use crate::chordal::{build_clique_tree, CliqueTree};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// For every clique-tree node and incident tree edge, a node of labeled
/// degree < 3 lying in the component of `T - node` entered through that
/// edge. Representatives are the smallest-id qualifying node.
#[derive(Debug, Clone)]
pub struct RepresentativeTable {
    /// `flat[start[node] + k]` pairs up with `tree.incident(node)[k]`.
    flat: Vec<usize>,
    start: Vec<usize>,
}

impl RepresentativeTable {
    /// Representative for the `k`-th incident edge of `node`.
    pub fn get(&self, node: usize, incident_idx: usize) -> usize {
        debug_assert!(incident_idx < self.start[node + 1] - self.start[node]);
        self.flat[self.start[node] + incident_idx]
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }
}

/// Two-pass rooted dynamic program: a downward pass collects the best
/// low-degree node inside each subtree, an upward pass covers the
/// direction towards the root. Every component of `T - C` contains a leaf
/// of `T`, and leaves have labeled degree at most 1, so a representative
/// always exists.
pub fn component_representatives(tree: &CliqueTree, ldeg: &[usize]) -> RepresentativeTable {
    let nc = tree.node_count();
    let low: Vec<bool> = ldeg.iter().map(|&d| d < 3).collect();

    if nc <= 1 {
        return RepresentativeTable { flat: Vec::new(), start: vec![0; nc + 1] };
    }

    // Iterative rooted traversal from node 0.
    let mut parent = vec![usize::MAX; nc];
    let mut order = Vec::with_capacity(nc);
    let mut stack = vec![0usize];
    let mut seen = vec![false; nc];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &(w, _) in tree.incident(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }

    // Downward: smallest low-degree node id within each subtree.
    let mut down = vec![usize::MAX; nc];
    for &v in order.iter().rev() {
        let mut best = if low[v] { v } else { usize::MAX };
        for &(w, _) in tree.incident(v) {
            if parent[w] == v {
                best = best.min(down[w]);
            }
        }
        down[v] = best;
    }

    // Upward: smallest low-degree node id outside each subtree.
    let mut up = vec![usize::MAX; nc];
    let mut children: Vec<usize> = Vec::new();
    let mut prefix: Vec<usize> = Vec::new();
    let mut suffix: Vec<usize> = Vec::new();
    for &v in &order {
        children.clear();
        children.extend(
            tree.incident(v).iter().map(|&(w, _)| w).filter(|&w| parent[w] == v),
        );
        let mut base = if low[v] { v } else { usize::MAX };
        if parent[v] != usize::MAX {
            base = base.min(up[v]);
        }
        // Prefix/suffix minima over the children's subtree values.
        let k = children.len();
        prefix.clear();
        prefix.resize(k + 1, usize::MAX);
        for i in 0..k {
            prefix[i + 1] = prefix[i].min(down[children[i]]);
        }
        suffix.clear();
        suffix.resize(k + 1, usize::MAX);
        for i in (0..k).rev() {
            suffix[i] = suffix[i + 1].min(down[children[i]]);
        }
        for (i, &c) in children.iter().enumerate() {
            up[c] = base.min(prefix[i]).min(suffix[i + 1]);
        }
    }

    let mut start = Vec::with_capacity(nc + 1);
    start.push(0usize);
    for v in 0..nc {
        start.push(start[v] + tree.incident(v).len());
    }
    let mut flat = Vec::with_capacity(start[nc]);
    for v in 0..nc {
        flat.extend(
            tree.incident(v)
                .iter()
                .map(|&(w, _)| if parent[w] == v { down[w] } else { up[v] }),
        );
    }
    debug_assert!(flat.iter().all(|&r| r != usize::MAX));
    RepresentativeTable { flat, start }
}

/// A connected chordal graph is a block graph exactly when every minimal
/// separator is a single cut vertex, i.e. every clique-tree label is a
/// singleton (a 2-element separator sits inside a non-complete block).
fn block_graph_clique_tree(g: &Graph) -> Result<CliqueTree> {
    let tree = match build_clique_tree(g, None) {
        Ok(tree) => tree,
        Err(Error::NotChordal) => return Err(Error::NotBlockGraph),
        Err(e) => return Err(e),
    };
    if (0..tree.tree_edge_count()).any(|e| tree.label(e).len() != 1) {
        return Err(Error::NotBlockGraph);
    }
    Ok(tree)
}

/// Strong rainbow connection number of a connected block graph: the number
/// of clique-tree nodes with labeled degree < 3 (0 for the edgeless K1).
pub fn src_number(g: &Graph) -> Result<usize> {
    if g.edge_count() == 0 {
        return Ok(0);
    }
    let tree = block_graph_clique_tree(g)?;
    Ok(tree.labeled_degrees().iter().filter(|&&d| d < 3).count())
}

/// An optimal strong rainbow coloring of a connected block graph with at
/// least one edge, using exactly `src_number(g)` colors.
pub fn strong_rainbow_color(g: &Graph) -> Result<EdgeColoring> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidInput("coloring requires at least one edge".into()));
    }
    let tree = block_graph_clique_tree(g)?;
    let ldeg = tree.labeled_degrees();
    let reps = component_representatives(&tree, &ldeg);

    // Fresh colors in clique-tree node order.
    let mut fresh = vec![usize::MAX; tree.node_count()];
    let mut next = 0usize;
    for (node, &d) in ldeg.iter().enumerate() {
        if d < 3 {
            fresh[node] = next;
            next += 1;
        }
    }

    // Per-node coloring rule, packed small. A fresh rule repeats its one
    // color; its sentinel borrow vertices match no real endpoint.
    const NONE: u32 = u32::MAX;
    #[derive(Clone, Copy)]
    struct Rule {
        x1: u32,
        x2: u32,
        c: [u32; 3],
    }
    let mut rules: Vec<Rule> = Vec::with_capacity(tree.node_count());
    let mut by_label: Vec<(usize, usize)> = Vec::new(); // (separator vertex, incident idx)
    for node in 0..tree.node_count() {
        if ldeg[node] < 3 {
            let c = fresh[node] as u32;
            rules.push(Rule { x1: NONE, x2: NONE, c: [c, c, c] });
            continue;
        }
        // Pick the three lexicographically smallest distinct labels; for
        // each label, the smallest-id neighbor reached through it.
        by_label.clear();
        for (k, &(_, e)) in tree.incident(node).iter().enumerate() {
            let sep = tree.label(e)[0];
            match by_label.iter_mut().find(|(s, _)| *s == sep) {
                Some(entry) => {
                    let cur = tree.incident(node)[entry.1].0;
                    let cand = tree.incident(node)[k].0;
                    if cand < cur {
                        entry.1 = k;
                    }
                }
                None => by_label.push((sep, k)),
            }
        }
        by_label.sort_unstable();
        let (x1, k1) = by_label[0];
        let (x2, k2) = by_label[1];
        let (_x3, k3) = by_label[2];
        let borrowed = [k1, k2, k3].map(|k| fresh[reps.get(node, k)]);
        debug_assert!(borrowed.iter().all(|&c| c != usize::MAX));
        rules.push(Rule {
            x1: x1 as u32,
            x2: x2 as u32,
            c: [borrowed[0] as u32, borrowed[1] as u32, borrowed[2] as u32],
        });
    }

    // Clique-tree nodes of a block graph are exactly its blocks, and the
    // blocks partition the edge set: one sequential pass over the edges.
    let colors: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            // Edges are stored with u < v.
            let r = rules[tree.node_of_edge(u, v)];
            let (a, b) = (u as u32, v as u32);
            let c = if (a, b) == (r.x1.min(r.x2), r.x1.max(r.x2)) {
                r.c[2]
            } else if a == r.x1 || b == r.x1 {
                r.c[1]
            } else {
                r.c[0]
            };
            c as usize
        })
        .collect();

    debug_assert!(colors.iter().all(|&c| c != usize::MAX));
    let coloring = EdgeColoring::new(colors)?;
    debug_assert_eq!(coloring.color_count(), next);
    Ok(coloring)
}
