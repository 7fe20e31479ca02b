//! Maximum-cardinality search, clique-tree construction with separator
//! labels, and the reduced clique graph for small instances.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Maximum-cardinality search visit order in O(n + m) via weight buckets.
///
/// `permutation`, when given, supplies a rank per vertex; vertices start
/// out in rank order (the default rank is the vertex id), so the first
/// pick and all later ties are deterministic functions of the ranks.
/// Distinct permutations can produce distinct valid clique trees of the
/// same chordal graph, which never affects labeled degrees on block graphs.
pub fn mcs_order(g: &Graph, permutation: Option<&[usize]>) -> Vec<usize> {
    let n = g.vertex_count();
    let mut by_rank: Vec<usize> = (0..n).collect();
    if let Some(p) = permutation {
        by_rank.sort_unstable_by_key(|&v| p[v]);
    }

    // Doubly linked bucket lists indexed by weight; one packed record per
    // vertex keeps each touch inside a single cache line. A weight of NIL
    // marks the vertex as already visited.
    const NIL: u32 = u32::MAX;
    #[derive(Clone, Copy)]
    struct Cell {
        weight: u32,
        prev: u32,
        next: u32,
    }
    let mut cell = vec![Cell { weight: 0, prev: NIL, next: NIL }; n];
    let mut head = vec![NIL; n + 1];
    for &v in by_rank.iter().rev() {
        let v = v as u32;
        cell[v as usize].next = head[0];
        if head[0] != NIL {
            cell[head[0] as usize].prev = v;
        }
        head[0] = v;
    }

    let mut order = Vec::with_capacity(n);
    let mut maxw = 0usize;
    for _ in 0..n {
        while head[maxw] == NIL {
            maxw -= 1;
        }
        let v = head[maxw] as usize;
        let vnext = cell[v].next;
        head[maxw] = vnext;
        if vnext != NIL {
            cell[vnext as usize].prev = NIL;
        }
        cell[v].weight = NIL;
        order.push(v);
        for &u in g.neighbors(v) {
            let c = cell[u as usize];
            if c.weight == NIL {
                continue;
            }
            // Move u from its bucket into the next heavier one.
            let w = c.weight as usize;
            if c.prev == NIL {
                head[w] = c.next;
            } else {
                cell[c.prev as usize].next = c.next;
            }
            if c.next != NIL {
                cell[c.next as usize].prev = c.prev;
            }
            cell[u as usize].weight = c.weight + 1;
            cell[u as usize].next = head[w + 1];
            if head[w + 1] != NIL {
                cell[head[w + 1] as usize].prev = u;
            }
            cell[u as usize].prev = NIL;
            head[w + 1] = u;
        }
        maxw += 1;
    }
    order
}

/// Checks whether `elim` (first-eliminated first) is a perfect elimination
/// ordering: for each vertex, its later neighbors minus the earliest of
/// them must all be adjacent to that earliest one.
pub fn is_perfect_elimination_ordering(g: &Graph, elim: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut pos = vec![0u32; n];
    for (i, &v) in elim.iter().enumerate() {
        pos[v] = i as u32;
    }
    // For each v, the later neighbors minus the first of them, p, must all
    // be adjacent to p. Defer that test: collect the vertices on p and
    // check them against N(p) with one marker sweep when p comes up. The
    // deferred lists live in one flat buffer bucketed by p.
    let mut p_of = vec![usize::MAX; n];
    let mut start = vec![0usize; n + 1];
    for (i, &v) in elim.iter().enumerate() {
        let mut p = usize::MAX;
        let mut later = 0usize;
        for &w in g.neighbors(v) {
            let w = w as usize;
            if pos[w] as usize > i {
                later += 1;
                if p == usize::MAX || pos[w] < pos[p] {
                    p = w;
                }
            }
        }
        if later >= 2 {
            p_of[v] = p;
            start[p + 1] += later - 1;
        }
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut flat = vec![0u32; start[n]];
    let mut cursor = start.clone();
    for (i, &v) in elim.iter().enumerate() {
        let p = p_of[v];
        if p == usize::MAX {
            continue;
        }
        for &w in g.neighbors(v) {
            if pos[w as usize] as usize > i && w as usize != p {
                flat[cursor[p]] = w;
                cursor[p] += 1;
            }
        }
    }
    let mut mark = vec![u32::MAX; n];
    for (i, &v) in elim.iter().enumerate() {
        if start[v] == start[v + 1] {
            continue;
        }
        for &w in g.neighbors(v) {
            mark[w as usize] = i as u32;
        }
        if flat[start[v]..start[v + 1]].iter().any(|&w| mark[w as usize] != i as u32) {
            return false;
        }
    }
    true
}

/// A clique tree: maximal cliques as nodes, tree edges labeled with the
/// minimal separator (the intersection of the endpoint cliques).
///
/// Everything is stored in flat arrays so that building and walking the
/// tree of a large graph stays allocation-light and cache-friendly.
#[derive(Debug, Clone)]
pub struct CliqueTree {
    /// Sorted vertices of node `i`: `clique_flat[clique_start[i]..clique_start[i + 1]]`.
    clique_flat: Vec<usize>,
    clique_start: Vec<usize>,
    /// Tree edge `e` joins `edge_nodes[e].0` and `.1`; its sorted non-empty
    /// label is `label_flat[label_start[e]..label_start[e + 1]]`.
    edge_nodes: Vec<(usize, usize)>,
    label_flat: Vec<usize>,
    label_start: Vec<usize>,
    /// Incidence lists: `(neighbor node, tree edge index)` pairs.
    adj_flat: Vec<(usize, usize)>,
    adj_start: Vec<usize>,
    /// Per vertex, the node whose clique received it during construction,
    /// kept so that the node containing a given edge can be looked up with
    /// a single access.
    node_of: Vec<u32>,
}

impl CliqueTree {
    pub fn node_count(&self) -> usize {
        self.clique_start.len() - 1
    }

    /// Sorted vertex list of a node.
    pub fn clique(&self, node: usize) -> &[usize] {
        &self.clique_flat[self.clique_start[node]..self.clique_start[node + 1]]
    }

    /// All cliques in node order.
    pub fn cliques(&self) -> impl Iterator<Item = &[usize]> + '_ {
        (0..self.node_count()).map(move |i| self.clique(i))
    }

    pub fn tree_edge_count(&self) -> usize {
        self.edge_nodes.len()
    }

    /// Endpoint nodes of a tree edge.
    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edge_nodes[edge]
    }

    pub fn label(&self, edge: usize) -> &[usize] {
        &self.label_flat[self.label_start[edge]..self.label_start[edge + 1]]
    }

    /// All tree edges as `(node, node, label)`.
    pub fn tree_edges(&self) -> impl Iterator<Item = (usize, usize, &[usize])> + '_ {
        (0..self.tree_edge_count()).map(move |e| {
            let (a, b) = self.edge_nodes[e];
            (a, b, self.label(e))
        })
    }

    /// Incident `(neighbor, edge index)` pairs of a node.
    pub fn incident(&self, node: usize) -> &[(usize, usize)] {
        &self.adj_flat[self.adj_start[node]..self.adj_start[node + 1]]
    }

    /// A node whose clique contains the edge `(u, v)`. The construction
    /// puts every earlier-visited neighbor of a vertex into that vertex's
    /// node, and assigned nodes only ever grow along the visit order, so
    /// the edge lies in the larger of the two endpoint nodes.
    pub fn node_of_edge(&self, u: usize, v: usize) -> usize {
        self.node_of[u].max(self.node_of[v]) as usize
    }

    /// Number of distinct separator labels on edges incident to each node.
    pub fn labeled_degrees(&self) -> Vec<usize> {
        let mut labels: Vec<&[usize]> = Vec::new();
        (0..self.node_count())
            .map(|node| {
                labels.clear();
                labels.extend(self.incident(node).iter().map(|&(_, e)| self.label(e)));
                labels.sort_unstable();
                labels.dedup();
                labels.len()
            })
            .collect()
    }
}

/// Builds a clique tree of a connected chordal graph via MCS and the
/// classic one-pass clique-tree assembly over the visit order.
pub fn build_clique_tree(g: &Graph, permutation: Option<&[usize]>) -> Result<CliqueTree> {
    let n = g.vertex_count();
    let order = mcs_order(g, permutation);

    // Cliques only ever grow at the tail, so the flat array is append-only.
    let mut clique_flat: Vec<usize> = Vec::with_capacity(n + n / 2);
    let mut clique_start: Vec<usize> = vec![0];
    let mut edge_nodes: Vec<(usize, usize)> = Vec::new();
    let mut label_flat: Vec<usize> = Vec::new();
    let mut label_start: Vec<usize> = vec![0];
    let mut prev_card = 0usize;

    // Visit position (high half) and assigned node (low half) per vertex,
    // filled as vertices are visited; unvisited entries stay at the
    // sentinel, whose position half exceeds every real position.
    let mut pos_node = vec![u64::MAX; n];

    let mut scratch: Vec<u32> = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let pos = (i as u64) << 32;
        scratch.clear();
        let mut anchor = u32::MAX;
        for &u in g.neighbors(v) {
            if pos_node[u as usize] < pos {
                scratch.push(u);
                if anchor == u32::MAX || pos_node[u as usize] > pos_node[anchor as usize] {
                    anchor = u;
                }
            }
        }
        let card = scratch.len();
        if card >= 2 {
            // The reversed MCS order is a perfect elimination ordering
            // (and g is chordal) iff for every v the earlier-visited
            // neighbors minus the anchor are all adjacent to the anchor.
            // The anchor was visited recently, so its list is still warm.
            let anchor_adj = g.neighbors(anchor as usize);
            for &u in &scratch {
                if u != anchor && anchor_adj.binary_search(&u).is_err() {
                    return Err(Error::NotChordal);
                }
            }
        }
        if i == 0 {
            clique_flat.push(v);
            pos_node[v] = pos;
        } else if card > prev_card {
            // v extends the clique under construction.
            clique_flat.push(v);
            pos_node[v] = pos | (clique_start.len() - 1) as u64;
        } else {
            // v starts a new maximal clique; attach it to the clique of
            // the last-visited vertex of the separator.
            debug_assert!(anchor != u32::MAX, "connected graph: every later vertex has an earlier neighbor");
            let parent = (pos_node[anchor as usize] & 0xffff_ffff) as usize;
            let node = clique_start.len();
            clique_start.push(clique_flat.len());
            scratch.sort_unstable();
            clique_flat.extend(scratch.iter().map(|&u| u as usize));
            clique_flat.push(v);
            pos_node[v] = pos | node as u64;
            edge_nodes.push((node, parent));
            label_flat.extend(scratch.iter().map(|&u| u as usize));
            label_start.push(label_flat.len());
        }
        prev_card = card;
    }
    clique_start.push(clique_flat.len());

    let nc = clique_start.len() - 1;
    for i in 0..nc {
        clique_flat[clique_start[i]..clique_start[i + 1]].sort_unstable();
    }
    let mut adj_start = vec![0usize; nc + 1];
    for &(a, b) in &edge_nodes {
        adj_start[a + 1] += 1;
        adj_start[b + 1] += 1;
    }
    for i in 0..nc {
        adj_start[i + 1] += adj_start[i];
    }
    let mut adj_flat = vec![(0usize, 0usize); 2 * edge_nodes.len()];
    let mut cursor = adj_start.clone();
    for (e, &(a, b)) in edge_nodes.iter().enumerate() {
        adj_flat[cursor[a]] = (b, e);
        cursor[a] += 1;
        adj_flat[cursor[b]] = (a, e);
        cursor[b] += 1;
    }
    Ok(CliqueTree {
        clique_flat,
        clique_start,
        edge_nodes,
        label_flat,
        label_start,
        adj_flat,
        adj_start,
        node_of: pos_node.iter().map(|&pn| pn as u32).collect(),
    })
}

/// The union of all clique trees: maximal cliques, with an edge wherever
/// two cliques intersect in a minimal separator separating them.
#[derive(Debug, Clone)]
pub struct ReducedCliqueGraph {
    pub cliques: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize, Vec<usize>)>,
}

/// Size guard for the quadratic reduced-clique-graph construction.
pub const MAX_REDUCED_CLIQUES: usize = 32;

pub fn reduced_clique_graph(g: &Graph) -> Result<ReducedCliqueGraph> {
    let tree = build_clique_tree(g, None)?;
    if tree.node_count() > MAX_REDUCED_CLIQUES {
        return Err(Error::ReducedCliqueGraphTooLarge);
    }
    let cliques: Vec<Vec<usize>> = tree.cliques().map(|c| c.to_vec()).collect();
    let mut edges = Vec::new();
    for i in 0..cliques.len() {
        for j in (i + 1)..cliques.len() {
            let sep: Vec<usize> = cliques[i]
                .iter()
                .copied()
                .filter(|v| cliques[j].binary_search(v).is_ok())
                .collect();
            if sep.is_empty() {
                continue;
            }
            if separates(g, &sep, &cliques[i], &cliques[j]) {
                edges.push((i, j, sep));
            }
        }
    }
    Ok(ReducedCliqueGraph { cliques, edges })
}

/// Does removing `sep` disconnect `a_side \ sep` from `b_side \ sep`?
fn separates(g: &Graph, sep: &[usize], a_side: &[usize], b_side: &[usize]) -> bool {
    let n = g.vertex_count();
    let blocked: HashSet<usize> = sep.iter().copied().collect();
    let start = match a_side.iter().find(|v| !blocked.contains(v)) {
        Some(&v) => v,
        None => return false,
    };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            let w = w as usize;
            if !seen[w] && !blocked.contains(&w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    !b_side.iter().any(|&v| !blocked.contains(&v) && seen[v])
}
