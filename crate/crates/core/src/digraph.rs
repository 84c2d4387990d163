//! Immutable digraph with per-vertex in/out adjacency bitsets.
//!
//! Vertices are `0..n`. Loops are rejected; repeated arcs collapse. A pair of
//! opposite arcs `u -> v`, `v -> u` is allowed and is called symmetric.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
}

/// Minimum and maximum in/out-degrees; `min_degree = min(min_out, min_in)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min_out: usize,
    pub min_in: usize,
    pub max_out: usize,
    pub max_in: usize,
    pub min_degree: usize,
}

impl Digraph {
    /// Builds a digraph on `n` vertices. Duplicate arcs collapse silently.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Self::empty(n)?;
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// The arcless digraph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        Ok(Self {
            n,
            out_adj: vec![VertexSet::empty(n); n],
            in_adj: vec![VertexSet::empty(n); n],
        })
    }

    fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.out_adj[u].insert(v);
        self.in_adj[v].insert(u);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(VertexSet::len).sum()
    }

    /// Arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, out)| out.iter().map(move |v| (u, v)))
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].contains(v)
    }

    /// `N+(u)`.
    pub fn out_neighbors(&self, u: usize) -> &VertexSet {
        &self.out_adj[u]
    }

    /// `N-(u)`.
    pub fn in_neighbors(&self, u: usize) -> &VertexSet {
        &self.in_adj[u]
    }

    /// `N+[u]`.
    pub fn closed_out(&self, u: usize) -> VertexSet {
        let mut s = self.out_adj[u].clone();
        s.insert(u);
        s
    }

    /// `N-[u]`.
    pub fn closed_in(&self, u: usize) -> VertexSet {
        let mut s = self.in_adj[u].clone();
        s.insert(u);
        s
    }

    /// Neighbors of `u` in the underlying graph.
    pub fn neighbors(&self, u: usize) -> VertexSet {
        self.out_adj[u].union(&self.in_adj[u])
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_adj[u].len()
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.in_adj[u].len()
    }

    pub fn reverse(&self) -> Self {
        Self {
            n: self.n,
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
        }
    }

    /// The underlying graph, as a symmetric digraph.
    pub fn symmetric_closure(&self) -> Self {
        let adj: Vec<VertexSet> = (0..self.n).map(|u| self.neighbors(u)).collect();
        Self {
            n: self.n,
            out_adj: adj.clone(),
            in_adj: adj,
        }
    }

    /// Copy of the digraph with the arc `u -> v` deleted (if present).
    pub fn without_arc(&self, u: usize, v: usize) -> Self {
        let mut d = self.clone();
        d.out_adj[u].remove(v);
        d.in_adj[v].remove(u);
        d
    }

    /// Copy of the digraph with the arc `u -> v` added.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Self> {
        let mut d = self.clone();
        d.add_arc(u, v)?;
        Ok(d)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let outs = (0..self.n).map(|u| self.out_degree(u));
        let ins = (0..self.n).map(|u| self.in_degree(u));
        let min_out = outs.clone().min().unwrap_or(0);
        let max_out = outs.max().unwrap_or(0);
        let min_in = ins.clone().min().unwrap_or(0);
        let max_in = ins.max().unwrap_or(0);
        DegreeStats {
            min_out,
            min_in,
            max_out,
            max_in,
            min_degree: min_out.min(min_in),
        }
    }

    pub fn has_symmetric_arcs(&self) -> bool {
        (0..self.n).any(|u| self.out_adj[u].intersects(&self.in_adj[u]))
    }

    /// Every arc has its opposite arc.
    pub fn is_symmetric(&self) -> bool {
        self.out_adj == self.in_adj
    }

    /// Exactly one arc between every pair of distinct vertices.
    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|u| !self.out_adj[u].intersects(&self.in_adj[u]) && self.neighbors(u).len() == self.n - 1)
    }

    /// Connected underlying graph.
    pub fn is_weakly_connected(&self) -> bool {
        let mut seen = VertexSet::empty(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    pub fn sources(&self) -> VertexSet {
        self.vertices_where(|u| self.in_degree(u) == 0)
    }

    pub fn sinks(&self) -> VertexSet {
        self.vertices_where(|u| self.out_degree(u) == 0)
    }

    pub fn isolated(&self) -> VertexSet {
        self.vertices_where(|u| self.in_degree(u) == 0 && self.out_degree(u) == 0)
    }

    fn vertices_where(&self, pred: impl Fn(usize) -> bool) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        for u in (0..self.n).filter(|&u| pred(u)) {
            s.insert(u);
        }
        s
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}
