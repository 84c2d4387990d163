//! Undirected graphs, their orientations, and the min/max of a parameter
//! over all orientations.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::kinds::{ParamKind, SetKind};
use crate::solver::{self, SolveConfig};
use crate::verify;
use crate::vertex_set::VertexSet;

/// Most edges an exhaustive orientation scan accepts.
pub const ORIENTATION_EDGE_CAP: usize = 22;

/// Simple undirected graph; edges stored as sorted `(low, high)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    /// Repeated edges collapse; loops and out-of-range endpoints are errors.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self { n, edges: list })
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize {
                family: "cycle",
                size: n,
                reason: "a cycle needs at least 3 vertices",
            });
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Self::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    /// The `index`-th graph on `n` vertices: bit `i` selects the `i`-th
    /// pair `u < v` in lexicographic order.
    pub fn from_index(n: usize, index: u64) -> Self {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges = pairs.enumerate().filter(|(i, _)| index >> i & 1 == 1).map(|(_, e)| e);
        Self::new(n, edges).expect("pairs are valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// The graph as a symmetric digraph.
    pub fn to_symmetric_digraph(&self) -> Digraph {
        Digraph::new(self.n, self.edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)])).expect("edges were validated")
    }

    pub fn is_connected(&self) -> bool {
        self.to_symmetric_digraph().is_weakly_connected()
    }

    /// Orients each edge `(a, b)` as `a -> b` when `toward(a, b)` is true,
    /// otherwise `b -> a`.
    fn orient_by(&self, toward: impl Fn(usize, usize) -> bool) -> Digraph {
        let arcs = self
            .edges
            .iter()
            .map(|&(a, b)| if toward(a, b) { (a, b) } else { (b, a) });
        Digraph::new(self.n, arcs).expect("edges were validated")
    }
}

fn check_edge_cap(g: &UndirectedGraph) -> Result<()> {
    let m = g.edges().len();
    if m > ORIENTATION_EDGE_CAP {
        return Err(Error::EdgeCap {
            count: m,
            cap: ORIENTATION_EDGE_CAP,
        });
    }
    Ok(())
}

/// The `index`-th orientation: bit `i` clear orients edge `i` from its
/// lower to its higher endpoint.
pub fn orientation(g: &UndirectedGraph, index: u64) -> Digraph {
    let arcs = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| if index >> i & 1 == 0 { (a, b) } else { (b, a) });
    Digraph::new(g.order(), arcs).expect("edges were validated")
}

/// All `2^m` orientations in index order.
pub fn enumerate_orientations(g: &UndirectedGraph) -> Result<impl Iterator<Item = Digraph> + '_> {
    check_edge_cap(g)?;
    Ok((0..1u64 << g.edges().len()).map(move |i| orientation(g, i)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationSpectrum {
    pub kind: ParamKind,
    pub dom: usize,
    #[serde(rename = "DOM")]
    pub dom_max: usize,
    pub achieved: Vec<usize>,
    pub is_interval: bool,
    pub orientations_evaluated: u64,
}

/// Values of `kind` over every orientation of `g`.
pub fn spectrum(g: &UndirectedGraph, kind: ParamKind, config: &SolveConfig) -> Result<OrientationSpectrum> {
    check_edge_cap(g)?;
    let inner = SolveConfig { threads: 1, ..*config };
    let total = 1u64 << g.edges().len();
    let values: Vec<usize> = (0..total)
        .into_par_iter()
        .map(|i| solver::solve_min(&orientation(g, i), kind, &inner).map(|r| r.value))
        .collect::<Result<_>>()?;
    let achieved: BTreeSet<usize> = values.into_iter().collect();
    let dom = *achieved.first().expect("at least one orientation");
    let dom_max = *achieved.last().expect("at least one orientation");
    Ok(OrientationSpectrum {
        kind,
        dom,
        dom_max,
        is_interval: achieved.len() == dom_max - dom + 1,
        achieved: achieved.into_iter().collect(),
        orientations_evaluated: total,
    })
}

/// Breadth-first 2-colouring; each component starts its colouring in `X`.
pub fn bipartition(g: &UndirectedGraph) -> Result<(VertexSet, VertexSet)> {
    let n = g.order();
    let adj = g.to_symmetric_digraph();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let s = side[u].expect("queued vertices are coloured");
            for w in adj.out_neighbors(u).iter() {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return Err(Error::NotBipartite),
                    Some(_) => {}
                }
            }
        }
    }
    let x = VertexSet::from_indices(n, (0..n).filter(|&v| side[v] == Some(false)))?;
    Ok((x.clone(), x.complement()))
}

/// Every edge directed from `Y` into `X`, so each vertex is a source or a sink.
pub fn bipartite_full_orientation(g: &UndirectedGraph, parts: Option<(VertexSet, VertexSet)>) -> Result<Digraph> {
    let (x, y) = match parts {
        Some(p) => p,
        None => bipartition(g)?,
    };
    let n = g.order();
    if x.universe() != n || y.universe() != n || x.intersects(&y) || x.union(&y).len() != n {
        return Err(Error::Precondition("parts must split the vertex set".into()));
    }
    if g.edges().iter().any(|&(a, b)| x.contains(a) == x.contains(b)) {
        return Err(Error::NotBipartite);
    }
    Ok(g.orient_by(|a, _| y.contains(a)))
}

/// A minimum secure dominating set `S` of `g` with every edge between `S`
/// and the rest directed out of `S`; all other edges go low to high.
pub fn orientation_from_sds(g: &UndirectedGraph, config: &SolveConfig) -> Result<(Digraph, VertexSet)> {
    let s = solver::solve_min(&g.to_symmetric_digraph(), ParamKind::GammaS, config)?.witness;
    let d = g.orient_by(|a, b| !(s.contains(b) && !s.contains(a)));
    Ok((d, s))
}

/// Edges touching the independent set `i` point into it; all other edges
/// go low to high. `V \ I` is then an out-secure dominating set.
pub fn orientation_from_independent_set(g: &UndirectedGraph, i: &VertexSet) -> Result<Digraph> {
    if g.edges().iter().any(|&(a, b)| i.contains(a) && i.contains(b)) {
        return Err(Error::Precondition("set is not independent".into()));
    }
    if let Some(v) = i.iter().find(|&v| g.degree(v) < 2) {
        return Err(Error::Precondition(format!(
            "vertex {} of the independent set has degree below 2",
            v + 1
        )));
    }
    Ok(g.orient_by(|a, _| !i.contains(a)))
}

/// Whether `V \ I` verifies as an out-secure dominating set of `d`.
pub fn complement_is_osds(d: &Digraph, i: &VertexSet) -> bool {
    verify::is_set(d, &i.complement(), SetKind::Osds)
}
