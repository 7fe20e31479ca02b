//! Deterministic generators for the named graph families, seeded random
//! block graphs, and the exhaustive small corpus used by the oracle tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{block_decomposition, Graph};

/// A named graph family with parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `n` vertices.
    Path(usize),
    /// Star with `n` leaves (K_{1,n}), hub = vertex 0.
    Star(usize),
    /// Complete graph on `n` vertices.
    Clique(usize),
    /// `copies` cliques of `size` vertices sharing vertex 0.
    Windmill { copies: usize, size: usize },
    /// K_n (vertices 0..n) with a triangle glued to each of its vertices.
    KnTriangles(usize),
    /// Chain of `count` triangles sharing cut vertices.
    TriangleChain(usize),
    /// Two triangles sharing vertex 2.
    Bowtie,
}

pub fn generate(spec: FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path(n) => {
            if n < 1 {
                return Err(Error::InvalidInput("path needs n >= 1".into()));
            }
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Star(n) => {
            if n < 1 {
                return Err(Error::InvalidInput("star needs n >= 1 leaves".into()));
            }
            let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
            Graph::from_edges(n + 1, &edges)
        }
        FamilySpec::Clique(n) => {
            if n < 1 {
                return Err(Error::InvalidInput("clique needs n >= 1".into()));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Windmill { copies, size } => {
            if copies < 2 || size < 2 {
                return Err(Error::InvalidInput("windmill needs copies >= 2 and size >= 2".into()));
            }
            let mut edges = Vec::new();
            let mut next = 1;
            for _ in 0..copies {
                let verts: Vec<usize> =
                    std::iter::once(0).chain(next..next + size - 1).collect();
                next += size - 1;
                for i in 0..verts.len() {
                    for j in (i + 1)..verts.len() {
                        edges.push((verts[i], verts[j]));
                    }
                }
            }
            Graph::from_edges(next, &edges)
        }
        FamilySpec::KnTriangles(n) => {
            if n < 1 {
                return Err(Error::InvalidInput("kn_triangles needs n >= 1".into()));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            for i in 0..n {
                let (p, q) = (n + 2 * i, n + 2 * i + 1);
                edges.push((i, p));
                edges.push((i, q));
                edges.push((p, q));
            }
            Graph::from_edges(3 * n, &edges)
        }
        FamilySpec::TriangleChain(count) => {
            if count < 1 {
                return Err(Error::InvalidInput("triangle_chain needs count >= 1".into()));
            }
            let mut edges = Vec::new();
            for t in 0..count {
                let b = 2 * t;
                edges.push((b, b + 1));
                edges.push((b + 1, b + 2));
                edges.push((b, b + 2));
            }
            Graph::from_edges(2 * count + 1, &edges)
        }
        FamilySpec::Bowtie => {
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        }
    }
}

/// Seeded random connected block graph built by gluing random-size
/// cliques at uniformly chosen existing vertices.
pub fn random_block_graph(
    seed: u64,
    block_count: usize,
    max_block_size: usize,
    bridgeless: bool,
) -> Result<Graph> {
    let min_size = if bridgeless { 3 } else { 2 };
    if block_count < 1 {
        return Err(Error::InvalidInput("need at least one block".into()));
    }
    if max_block_size < min_size {
        return Err(Error::InvalidInput(format!(
            "max_block_size must be at least {min_size}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut n = 0usize;
    for b in 0..block_count {
        let size = rng.gen_range(min_size..=max_block_size);
        let attach = if b == 0 { None } else { Some(rng.gen_range(0..n)) };
        let fresh = size - attach.map_or(0, |_| 1);
        let verts: Vec<usize> = attach.into_iter().chain(n..n + fresh).collect();
        n += fresh;
        for i in 0..verts.len() {
            for j in (i + 1)..verts.len() {
                edges.push((verts[i], verts[j]));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// All connected block graphs with at most `max_edges` edges, one per
/// isomorphism class (blocks of size >= 3 only when `bridgeless_only`).
///
/// Enumeration glues cliques one at a time; duplicates are rejected by a
/// canonical code of the block-cut tree with block sizes, which determines
/// a block graph up to isomorphism.
pub fn enumerate_block_graphs(max_edges: usize, bridgeless_only: bool) -> Vec<Graph> {
    let min_size = if bridgeless_only { 3 } else { 2 };
    let mut sizes = Vec::new();
    let mut s = min_size;
    while s * (s - 1) / 2 <= max_edges {
        sizes.push(s);
        s += 1;
    }

    let mut out: Vec<Graph> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut frontier: Vec<Graph> = Vec::new();
    for &s in &sizes {
        let g = generate(FamilySpec::Clique(s)).unwrap();
        if seen.insert(canonical_code(&g)) {
            frontier.push(g.clone());
            out.push(g);
        }
    }
    while let Some(g) = frontier.pop() {
        let m = g.edge_count();
        for &s in &sizes {
            let extra = s * (s - 1) / 2;
            if m + extra > max_edges {
                continue;
            }
            for attach in 0..g.vertex_count() {
                let n = g.vertex_count();
                let mut edges = g.edges().to_vec();
                let verts: Vec<usize> =
                    std::iter::once(attach).chain(n..n + s - 1).collect();
                for i in 0..verts.len() {
                    for j in (i + 1)..verts.len() {
                        edges.push((verts[i], verts[j]));
                    }
                }
                let h = Graph::from_edges(n + s - 1, &edges).unwrap();
                if seen.insert(canonical_code(&h)) {
                    frontier.push(h.clone());
                    out.push(h);
                }
            }
        }
    }
    out.sort_by_key(|g| (g.edge_count(), g.vertex_count()));
    out
}

/// Canonical code of the block-cut tree (block nodes labeled with their
/// size), rooted at the tree center.
fn canonical_code(g: &Graph) -> String {
    let bd = block_decomposition(g);
    if bd.blocks.is_empty() {
        return "K1".into();
    }
    // Tree nodes: blocks first, then cut vertices.
    let nb = bd.blocks.len();
    let cut_index: std::collections::HashMap<usize, usize> = bd
        .cut_vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, nb + i))
        .collect();
    let total = nb + bd.cut_vertices.len();
    let mut adj = vec![Vec::new(); total];
    for (b, verts) in bd.blocks.iter().enumerate() {
        for v in verts {
            if let Some(&c) = cut_index.get(v) {
                adj[b].push(c);
                adj[c].push(b);
            }
        }
    }
    let label = |v: usize| -> String {
        if v < nb {
            format!("B{}", bd.blocks[v].len())
        } else {
            "C".into()
        }
    };

    // Tree center: repeatedly strip leaves.
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; total];
    let mut layer: Vec<usize> = (0..total).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = total;
    let mut centers = layer.clone();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
        centers = layer.clone();
    }
    centers.retain(|&v| !removed[v]);
    if centers.is_empty() {
        centers = (0..total).filter(|&v| !removed[v]).collect();
    }

    fn encode(v: usize, parent: usize, adj: &[Vec<usize>], label: &dyn Fn(usize) -> String) -> String {
        let mut parts: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(w, v, adj, label))
            .collect();
        parts.sort();
        format!("{}({})", label(v), parts.join(","))
    }

    let mut codes: Vec<String> = centers
        .iter()
        .map(|&c| encode(c, usize::MAX, &adj, &label))
        .collect();
    codes.sort();
    codes.join("|")
}
