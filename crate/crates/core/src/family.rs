//! Generators for the standard digraph families.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::rng::SeededRng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Dipath,
    Dicycle,
    TransitiveTournament,
    /// `size` is the leg count `k`; order is `2k + 1`.
    Spider,
    RandomTournament,
    RandomDigraph,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParams {
    pub seed: Option<u64>,
    pub arc_prob: f64,
    pub allow_symmetric: bool,
}

impl Default for FamilyParams {
    fn default() -> Self {
        Self {
            seed: None,
            arc_prob: 0.5,
            allow_symmetric: false,
        }
    }
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Dipath => "dipath",
            Family::Dicycle => "dicycle",
            Family::TransitiveTournament => "transitive_tournament",
            Family::Spider => "spider",
            Family::RandomTournament => "random_tournament",
            Family::RandomDigraph => "random_digraph",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "dipath" | "path" => Family::Dipath,
            "dicycle" | "cycle" => Family::Dicycle,
            "transitive_tournament" | "transtour" => Family::TransitiveTournament,
            "spider" => Family::Spider,
            "random_tournament" | "tournament" => Family::RandomTournament,
            "random_digraph" | "random" => Family::RandomDigraph,
            _ => return Err(format!("unknown family '{s}'")),
        })
    }
}

pub fn gen_family(kind: Family, size: usize, params: &FamilyParams) -> Result<Digraph> {
    let invalid = |reason| Error::InvalidSize {
        family: kind.name(),
        size,
        reason,
    };
    if size == 0 {
        return Err(invalid("must be at least 1"));
    }
    match kind {
        Family::Dipath => dipath(size),
        Family::Dicycle => {
            if size < 3 {
                return Err(invalid("a directed cycle needs at least 3 vertices"));
            }
            dicycle(size)
        }
        Family::TransitiveTournament => transitive_tournament(size),
        Family::Spider => spider(size),
        Family::RandomTournament => {
            let seed = params.seed.ok_or(Error::MissingSeed("random_tournament"))?;
            random_tournament(size, &mut SeededRng::new(seed))
        }
        Family::RandomDigraph => {
            let seed = params.seed.ok_or(Error::MissingSeed("random_digraph"))?;
            random_digraph(size, params.arc_prob, params.allow_symmetric, &mut SeededRng::new(seed))
        }
    }
}

pub fn dipath(n: usize) -> Result<Digraph> {
    Digraph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn dicycle(n: usize) -> Result<Digraph> {
    Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn transitive_tournament(n: usize) -> Result<Digraph> {
    Digraph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Hub `w = 0`, legs `u_i = i`, `v_i = k + i`, arcs `u_i -> v_i -> w`.
pub fn spider(k: usize) -> Result<Digraph> {
    Digraph::new(2 * k + 1, (1..=k).flat_map(|i| [(i, k + i), (k + i, 0)]))
}

/// One coin per pair `u < v` in lexicographic order; heads orients `v -> u`.
pub fn random_tournament(n: usize, rng: &mut SeededRng) -> Result<Digraph> {
    let mut arcs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            arcs.push(if rng.coin() { (v, u) } else { (u, v) });
        }
    }
    Digraph::new(n, arcs)
}

/// Two uniform draws per pair `u < v` decide `u -> v` and `v -> u`; when
/// both survive and symmetric arcs are disallowed a coin keeps one.
pub fn random_digraph(n: usize, arc_prob: f64, allow_symmetric: bool, rng: &mut SeededRng) -> Result<Digraph> {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let fwd = rng.unit() < arc_prob;
            let back = rng.unit() < arc_prob;
            match (fwd, back) {
                (true, true) if !allow_symmetric => {
                    arcs.push(if rng.coin() { (v, u) } else { (u, v) });
                }
                _ => {
                    if fwd {
                        arcs.push((u, v));
                    }
                    if back {
                        arcs.push((v, u));
                    }
                }
            }
        }
    }
    Digraph::new(n, arcs)
}

/// Number of labeled digraphs on `n` vertices: `4^(n choose 2)`, or
/// `3^(n choose 2)` without symmetric arcs.
pub fn labeled_count(n: usize, allow_symmetric: bool) -> u64 {
    let pairs = (n * n.saturating_sub(1) / 2) as u32;
    if allow_symmetric {
        4u64.pow(pairs)
    } else {
        3u64.pow(pairs)
    }
}

/// The `index`-th labeled digraph. Pairs `u < v` are read in lexicographic
/// order as base-4 (or base-3) digits, least significant first: 0 no arc,
/// 1 `u -> v`, 2 `v -> u`, 3 both.
pub fn labeled_digraph(n: usize, index: u64, allow_symmetric: bool) -> Digraph {
    let base = if allow_symmetric { 4 } else { 3 };
    let mut rest = index;
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let digit = rest % base;
            rest /= base;
            if digit & 1 == 1 {
                arcs.push((u, v));
            }
            if digit & 2 == 2 {
                arcs.push((v, u));
            }
        }
    }
    Digraph::new(n, arcs).expect("pairs are in range and loop free")
}

/// Every labeled digraph on `n` vertices, in index order.
pub fn all_digraphs(n: usize, allow_symmetric: bool) -> impl Iterator<Item = Digraph> {
    (0..labeled_count(n, allow_symmetric)).map(move |i| labeled_digraph(n, i, allow_symmetric))
}

/// The 7-vertex example digraph, with `v_i` stored as `i - 1`.
pub fn reference_fixture() -> Digraph {
    const ARCS: [(usize, usize); 11] = [
        (4, 1),
        (4, 2),
        (4, 5),
        (4, 6),
        (4, 7),
        (5, 3),
        (5, 6),
        (5, 7),
        (1, 5),
        (2, 5),
        (3, 4),
    ];
    Digraph::new(7, ARCS.iter().map(|&(u, v)| (u - 1, v - 1))).expect("fixture is well formed")
}
