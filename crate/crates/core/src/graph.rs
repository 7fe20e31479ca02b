//! Simple undirected connected graphs with dense vertex ids, plus the
//! structural primitives the rest of the library is built on: block
//! decomposition, all-pairs hop distances, and class recognition.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An immutable simple undirected connected graph.
///
/// Vertices are `0..n`. Edges are stored canonically as `(min, max)` in
/// ascending order, so an edge has a stable dense index used by colorings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Adjacency in compressed form: the neighbors of `v` are the sorted
    /// slice `adj_flat[adj_start[v]..adj_start[v + 1]]`. Vertex ids are
    /// kept as u32 so traversals touch half the memory.
    adj_flat: Vec<u32>,
    adj_start: Vec<u32>,
    /// `edge_start[u]..edge_start[u + 1]` is the range of edge indices
    /// whose smaller endpoint is `u`.
    edge_start: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an edge list, enforcing simplicity and connectivity.
    pub fn from_edges(n: usize, raw_edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("graph must have at least one vertex".into()));
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        for &(u, v) in raw_edges {
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) references a vertex >= {n}"
                )));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("duplicate edge".into()));
        }
        if n > u32::MAX as usize || 2 * edges.len() > u32::MAX as usize {
            return Err(Error::InvalidInput("graph too large for 32-bit indexing".into()));
        }
        let mut adj_start = vec![0u32; n + 1];
        let mut edge_start = vec![0u32; n + 1];
        for &(u, v) in &edges {
            adj_start[u + 1] += 1;
            adj_start[v + 1] += 1;
            edge_start[u + 1] += 1;
        }
        for i in 0..n {
            adj_start[i + 1] += adj_start[i];
            edge_start[i + 1] += edge_start[i];
        }
        let mut adj_flat = vec![0u32; 2 * edges.len()];
        let mut cursor = adj_start.clone();
        for &(u, v) in &edges {
            adj_flat[cursor[u] as usize] = v as u32;
            cursor[u] += 1;
            adj_flat[cursor[v] as usize] = u as u32;
            cursor[v] += 1;
        }
        for v in 0..n {
            adj_flat[adj_start[v] as usize..adj_start[v + 1] as usize].sort_unstable();
        }
        let g = Graph { n, edges, adj_flat, adj_start, edge_start };
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor ids of `v`, as u32 to keep traversals compact.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj_flat[self.adj_start[v] as usize..self.adj_start[v + 1] as usize]
    }

    pub fn degree(&self, v: usize) -> usize {
        (self.adj_start[v + 1] - self.adj_start[v]) as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Dense index of the canonical edge `(min, max)`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let key = (u.min(v), u.max(v));
        let lo = self.edge_start[key.0] as usize;
        let hi = self.edge_start[key.0 + 1] as usize;
        self.edges[lo..hi].binary_search(&key).ok().map(|i| lo + i)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Hop distances from `s` by breadth-first traversal.
    pub fn bfs_distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Parses the shared graph text format: one `u v` edge per line,
    /// `#`-prefixed comment lines, a lone integer declares an isolated
    /// vertex (needed to express the single-vertex graph).
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut max_id: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parse_id = |tok: &str| -> Result<usize> {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("invalid vertex id '{tok}'"),
                })
            };
            match parts.as_slice() {
                [u] => {
                    let u = parse_id(u)?;
                    max_id = Some(max_id.map_or(u, |m| m.max(u)));
                }
                [u, v] => {
                    let u = parse_id(u)?;
                    let v = parse_id(v)?;
                    if u == v {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("self-loop at vertex {u}"),
                        });
                    }
                    let e = (u.min(v), u.max(v));
                    if edges.contains(&e) {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("duplicate edge ({u}, {v})"),
                        });
                    }
                    edges.push(e);
                    max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
                }
                _ => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: "expected 'u v' or a single vertex id".into(),
                    });
                }
            }
        }
        let max_id = max_id.ok_or_else(|| Error::InvalidInput("empty graph file".into()))?;
        Graph::from_edges(max_id + 1, &edges)
    }

    /// Renders the graph in the shared text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.edges.is_empty() {
            for v in 0..self.n {
                out.push_str(&format!("{v}\n"));
            }
        } else {
            for &(u, v) in &self.edges {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
        out
    }
}

/// Maximal biconnected components and cut vertices.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, each sorted; blocks ordered by smallest
    /// contained vertex id.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<usize>,
    /// For each edge index, the block it belongs to.
    pub block_of_edge: Vec<usize>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

/// Computes the block decomposition of a connected graph.
///
/// Blocks are reported in a deterministic order (by smallest contained
/// vertex id, ties broken by the full sorted vertex list).
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return BlockDecomposition {
            blocks: Vec::new(),
            cut_vertices: Vec::new(),
            block_of_edge: Vec::new(),
        };
    }

    // Iterative Tarjan; one packed record per vertex for the DFS state.
    const UNSET: u32 = u32::MAX;
    #[derive(Clone, Copy)]
    struct DfsCell {
        disc: u32,
        low: u32,
        parent: u32,
        next_child: u32,
    }
    let mut cell = vec![DfsCell { disc: UNSET, low: 0, parent: UNSET, next_child: 0 }; n];
    let mut timer = 0u32;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut raw_blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of_edge = vec![usize::MAX; m];
    let mut is_cut = vec![false; n];
    let mut root_children = 0usize;

    let mut stack = vec![0usize];
    cell[0].disc = timer;
    cell[0].low = timer;
    timer += 1;

    while let Some(&v) = stack.last() {
        if (cell[v].next_child as usize) < g.neighbors(v).len() {
            let w = g.neighbors(v)[cell[v].next_child as usize] as usize;
            cell[v].next_child += 1;
            if cell[w].disc == UNSET {
                cell[w].parent = v as u32;
                cell[w].disc = timer;
                cell[w].low = timer;
                timer += 1;
                edge_stack.push(g.edge_index(v, w).unwrap());
                if v == 0 {
                    root_children += 1;
                }
                stack.push(w);
            } else if w as u32 != cell[v].parent && cell[w].disc < cell[v].disc {
                edge_stack.push(g.edge_index(v, w).unwrap());
                cell[v].low = cell[v].low.min(cell[w].disc);
            }
        } else {
            stack.pop();
            if let Some(&u) = stack.last() {
                cell[u].low = cell[u].low.min(cell[v].low);
                if cell[v].low >= cell[u].disc {
                    // Edges down to and including (u, v) form one block.
                    let marker = g.edge_index(u, v).unwrap();
                    let block_id = raw_blocks.len();
                    let mut verts = Vec::new();
                    loop {
                        let e = edge_stack.pop().expect("edge stack underflow");
                        block_of_edge[e] = block_id;
                        let (a, b) = g.edges()[e];
                        verts.push(a);
                        verts.push(b);
                        if e == marker {
                            break;
                        }
                    }
                    verts.sort_unstable();
                    verts.dedup();
                    raw_blocks.push(verts);
                    if u != 0 {
                        is_cut[u] = true;
                    }
                }
            }
        }
    }
    if root_children >= 2 {
        is_cut[0] = true;
    }

    // Deterministic block order.
    let mut order: Vec<usize> = (0..raw_blocks.len()).collect();
    order.sort_by(|&a, &b| raw_blocks[a].cmp(&raw_blocks[b]));
    let mut remap = vec![0usize; raw_blocks.len()];
    for (new_id, &old_id) in order.iter().enumerate() {
        remap[old_id] = new_id;
    }
    let blocks: Vec<Vec<usize>> =
        order.iter().map(|&i| std::mem::take(&mut raw_blocks[i])).collect();
    for b in &mut block_of_edge {
        *b = remap[*b];
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();

    BlockDecomposition { blocks, cut_vertices, block_of_edge }
}

/// All-pairs hop distances plus derived eccentricity statistics.
#[derive(Debug, Clone)]
pub struct DistanceProfile {
    pub dist: Vec<Vec<usize>>,
    pub eccentricities: Vec<usize>,
    pub diameter: usize,
    pub radius: usize,
    pub centers: Vec<usize>,
}

pub fn distance_profile(g: &Graph) -> DistanceProfile {
    let n = g.vertex_count();
    let dist: Vec<Vec<usize>> = (0..n).map(|s| g.bfs_distances(s)).collect();
    let eccentricities: Vec<usize> = dist
        .iter()
        .map(|row| row.iter().copied().max().unwrap_or(0))
        .collect();
    let diameter = eccentricities.iter().copied().max().unwrap_or(0);
    let radius = eccentricities.iter().copied().min().unwrap_or(0);
    let centers = (0..n).filter(|&v| eccentricities[v] == radius).collect();
    DistanceProfile { dist, eccentricities, diameter, radius, centers }
}

/// Recognition flags for the graph classes the library cares about.
#[derive(Debug, Clone)]
pub struct RecognitionReport {
    pub is_chordal: bool,
    /// Perfect elimination ordering, present iff chordal.
    pub peo: Option<Vec<usize>>,
    pub is_block_graph: bool,
    /// `(clique_part, independent_part)` when the graph is split.
    pub split_partition: Option<(Vec<usize>, Vec<usize>)>,
    pub is_bridgeless: bool,
    pub bridge_edges: Vec<(usize, usize)>,
}

impl RecognitionReport {
    pub fn is_split(&self) -> bool {
        self.split_partition.is_some()
    }
}

pub fn recognize(g: &Graph) -> RecognitionReport {
    let order = crate::chordal::mcs_order(g, None);
    let mut elim: Vec<usize> = order.clone();
    elim.reverse();
    let is_chordal = crate::chordal::is_perfect_elimination_ordering(g, &elim);
    let peo = if is_chordal { Some(elim) } else { None };

    let bd = block_decomposition(g);
    let is_block_graph = is_chordal && blocks_are_cliques(g, &bd);

    let bridge_edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| bd.blocks[bd.block_of_edge[i]].len() == 2)
        .map(|(_, &e)| e)
        .collect();
    let is_bridgeless = bridge_edges.is_empty();

    RecognitionReport {
        is_chordal,
        peo,
        is_block_graph,
        split_partition: split_partition(g),
        is_bridgeless,
        bridge_edges,
    }
}

/// Every block must induce a complete subgraph. Since every edge lies in
/// exactly one block, it suffices to compare per-block edge counts.
pub fn blocks_are_cliques(_g: &Graph, bd: &BlockDecomposition) -> bool {
    let mut edge_counts = vec![0usize; bd.blocks.len()];
    for &b in &bd.block_of_edge {
        edge_counts[b] += 1;
    }
    bd.blocks
        .iter()
        .zip(&edge_counts)
        .all(|(verts, &cnt)| cnt == verts.len() * (verts.len() - 1) / 2)
}

/// Split-graph test by the degree-sequence characterization, returning the
/// witness partition when it exists.
fn split_partition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    // Largest m with d_m >= m - 1 (1-indexed).
    let mut split_point = 0;
    for i in 0..n {
        if degs[i] >= i {
            split_point = i + 1;
        }
    }
    let lhs: usize = degs[..split_point].iter().sum();
    let rhs: usize = split_point * (split_point - 1) + degs[split_point..].iter().sum::<usize>();
    if lhs != rhs {
        return None;
    }
    let mut clique: Vec<usize> = by_degree[..split_point].to_vec();
    let mut independent: Vec<usize> = by_degree[split_point..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    debug_assert!(clique.iter().all(|&u| clique.iter().all(|&v| u == v || g.has_edge(u, v))));
    debug_assert!(independent.iter().all(|&u| independent.iter().all(|&v| !g.has_edge(u, v))));
    Some((clique, independent))
}

/// True iff every ordered vertex pair is joined by exactly one shortest path.
pub fn is_geodetic(g: &Graph) -> bool {
    let n = g.vertex_count();
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut count = vec![0u64; n];
        dist[s] = 0;
        count[s] = 1;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    count[w] = count[v];
                    queue.push_back(w);
                } else if dist[w] == dist[v] + 1 {
                    count[w] = count[w].saturating_add(count[v]);
                }
            }
        }
        if count.iter().any(|&c| c != 1) {
            return false;
        }
    }
    true
}
