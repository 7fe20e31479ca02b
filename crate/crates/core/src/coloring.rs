//! Total edge colorings with dense color ids.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total assignment from edge indices to dense color ids `0..color_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<usize>,
    color_count: usize,
}

impl EdgeColoring {
    /// Wraps per-edge colors, requiring ids to already be dense.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let color_count = colors.iter().copied().max().map_or(0, |m| m + 1);
        let mut used = vec![false; color_count];
        for &c in &colors {
            used[c] = true;
        }
        if used.iter().any(|&u| !u) {
            return Err(Error::InvalidInput("color ids are not contiguous from 0".into()));
        }
        Ok(EdgeColoring { colors, color_count })
    }

    /// Wraps per-edge colors, compacting ids order-preservingly so they
    /// become dense.
    pub fn from_raw(colors: Vec<usize>) -> Self {
        let mut distinct: Vec<usize> = colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let compact: Vec<usize> = colors
            .iter()
            .map(|c| distinct.binary_search(c).unwrap())
            .collect();
        let color_count = distinct.len();
        EdgeColoring { colors: compact, color_count }
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn color_of_index(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    pub fn color_of(&self, g: &Graph, u: usize, v: usize) -> Option<usize> {
        g.edge_index(u, v).map(|e| self.colors[e])
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    /// Renders `u v c` lines in canonical ascending edge order.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            out.push_str(&format!("{u} {v} {}\n", self.colors[i]));
        }
        out
    }

    /// Parses a coloring file against a graph; every edge must be covered
    /// exactly once.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut colors = vec![usize::MAX; g.edge_count()];
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [u, v, c] = parts.as_slice() else {
                return Err(Error::Parse { line: idx + 1, msg: "expected 'u v c'".into() });
            };
            let parse_num = |tok: &str| -> Result<usize> {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("invalid number '{tok}'"),
                })
            };
            let (u, v, c) = (parse_num(u)?, parse_num(v)?, parse_num(c)?);
            let e = g.edge_index(u, v).ok_or_else(|| Error::Parse {
                line: idx + 1,
                msg: format!("edge ({u}, {v}) not in graph"),
            })?;
            if colors[e] != usize::MAX {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("edge ({u}, {v}) colored twice"),
                });
            }
            colors[e] = c;
        }
        if let Some(e) = colors.iter().position(|&c| c == usize::MAX) {
            let (u, v) = g.edges()[e];
            return Err(Error::InvalidInput(format!("edge ({u}, {v}) is uncolored")));
        }
        Ok(EdgeColoring::from_raw(colors))
    }
}
