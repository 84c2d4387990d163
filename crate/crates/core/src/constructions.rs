//! Explicit witness sets for paths, cycles, tournaments and the spider.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::family;
use crate::kinds::ParamKind;
use crate::solver::{self, SolveConfig};
use crate::verify;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecipeFamily {
    Path,
    Cycle,
    Tournament,
    Spider,
}

/// Where a recipe's set came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecipeSource {
    Pattern,
    Solver,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRecipe {
    pub kind: ParamKind,
    pub family: RecipeFamily,
    pub n: usize,
    pub set: VertexSet,
    pub claimed_size: usize,
    pub source: RecipeSource,
}

/// Closed-form value on directed paths and cycles, for the kinds that have one.
pub fn closed_form(kind: ParamKind, n: usize) -> Option<usize> {
    match kind {
        ParamKind::GammaPlus | ParamKind::GammaOs => Some(n.div_ceil(2)),
        ParamKind::GammaOso | ParamKind::GammaIso => Some((2 * n).div_ceil(3)),
        ParamKind::GammaSo => Some((3 * n).div_ceil(5)),
        _ => None,
    }
}

/// Pattern on `v_1 .. v_n` (1-based positions), returned 0-based.
fn path_pattern(kind: ParamKind, n: usize) -> Vec<usize> {
    let keep = |i: usize| match kind {
        ParamKind::GammaPlus | ParamKind::GammaOs => i % 2 == 1,
        ParamKind::GammaOso => matches!(i % 3, 1 | 2),
        ParamKind::GammaSo => matches!(i % 5, 1 | 3 | 4) || (i == n && n % 5 == 2),
        ParamKind::GammaIso => matches!(i % 3, 0 | 1) || (i == n && n % 3 == 2),
        _ => false,
    };
    (1..=n).filter(|&i| keep(i)).map(|i| i - 1).collect()
}

fn unsupported(kind: ParamKind) -> Error {
    Error::Precondition(format!("no path or cycle pattern for {kind}"))
}

pub fn path_witness(kind: ParamKind, n: usize) -> Result<WitnessRecipe> {
    if n == 0 {
        return Err(Error::InvalidSize {
            family: "path",
            size: n,
            reason: "must be at least 1",
        });
    }
    let claimed = closed_form(kind, n).ok_or_else(|| unsupported(kind))?;
    Ok(WitnessRecipe {
        kind,
        family: RecipeFamily::Path,
        n,
        set: VertexSet::from_indices(n, path_pattern(kind, n))?,
        claimed_size: claimed,
        source: RecipeSource::Pattern,
    })
}

/// The path pattern laid along the cycle; if it ever failed to verify the
/// solver's witness would be used instead.
pub fn cycle_witness(kind: ParamKind, n: usize) -> Result<WitnessRecipe> {
    if n < 3 {
        return Err(Error::InvalidSize {
            family: "cycle",
            size: n,
            reason: "a directed cycle needs at least 3 vertices",
        });
    }
    let claimed = closed_form(kind, n).ok_or_else(|| unsupported(kind))?;
    let cycle = family::dicycle(n)?;
    let pattern = VertexSet::from_indices(n, path_pattern(kind, n))?;
    let (set, source) = if verify::is_set(&cycle, &pattern, kind.set_kind()) {
        (pattern, RecipeSource::Pattern)
    } else {
        let r = solver::solve_min(&cycle, kind, &SolveConfig::default())?;
        (r.witness, RecipeSource::Solver)
    };
    Ok(WitnessRecipe {
        kind,
        family: RecipeFamily::Cycle,
        n,
        set,
        claimed_size: claimed,
        source,
    })
}

fn require_tournament(t: &Digraph) -> Result<()> {
    if t.is_tournament() {
        Ok(())
    } else {
        Err(Error::NotTournament)
    }
}

/// Greedy out-dominating set plus the number of uncovered vertices left
/// after each pick.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    pub set: VertexSet,
    pub remaining: Vec<usize>,
}

/// Greedy restricted to `pool`: pick the vertex of largest out-degree
/// inside what is still uncovered (smallest index on ties) and drop its
/// closed out-neighborhood.
fn greedy_within(t: &Digraph, pool: &VertexSet) -> GreedyTrace {
    let mut left = pool.clone();
    let mut set = VertexSet::empty(t.order());
    let mut remaining = Vec::new();
    while let Some(first) = left.first() {
        let mut best = (t.out_neighbors(first).intersection(&left).len(), first);
        for u in left.iter().skip(1) {
            let deg = t.out_neighbors(u).intersection(&left).len();
            if deg > best.0 {
                best = (deg, u);
            }
        }
        let u = best.1;
        set.insert(u);
        left = left.difference(&t.closed_out(u));
        remaining.push(left.len());
    }
    GreedyTrace { set, remaining }
}

pub fn tournament_greedy_trace(t: &Digraph) -> Result<GreedyTrace> {
    require_tournament(t)?;
    Ok(greedy_within(t, &VertexSet::full(t.order())))
}

pub fn tournament_greedy_outdom(t: &Digraph) -> Result<VertexSet> {
    Ok(tournament_greedy_trace(t)?.set)
}

/// Greedy set plus the smallest vertex outside it.
pub fn tournament_sods(t: &Digraph) -> Result<VertexSet> {
    require_tournament(t)?;
    if t.order() < 2 {
        return Err(Error::InvalidSize {
            family: "tournament",
            size: t.order(),
            reason: "needs at least 2 vertices",
        });
    }
    let mut s = tournament_greedy_outdom(t)?;
    let extra = s
        .complement()
        .first()
        .expect("greedy never takes every vertex when n >= 2");
    s.insert(extra);
    Ok(s)
}

/// The source together with a greedy out-dominating set of the rest.
pub fn tournament_osods_with_source(t: &Digraph) -> Result<VertexSet> {
    require_tournament(t)?;
    if t.order() < 3 {
        return Err(Error::InvalidSize {
            family: "tournament",
            size: t.order(),
            reason: "needs at least 3 vertices",
        });
    }
    let source = t
        .sources()
        .first()
        .ok_or_else(|| Error::Precondition("tournament has no source".into()))?;
    let mut rest = VertexSet::full(t.order());
    rest.remove(source);
    let mut s = greedy_within(t, &rest).set;
    s.insert(source);
    Ok(s)
}

/// Hamiltonian path by insertion: each vertex goes to the first slot
/// whose neighbors on the path allow it.
pub fn tournament_hamiltonian_path(t: &Digraph) -> Result<Vec<usize>> {
    require_tournament(t)?;
    let mut path: Vec<usize> = Vec::with_capacity(t.order());
    for x in 0..t.order() {
        let slot = (0..=path.len())
            .find(|&i| (i == 0 || t.has_arc(path[i - 1], x)) && (i == path.len() || t.has_arc(x, path[i])))
            .expect("a tournament always admits an insertion slot");
        path.insert(slot, x);
    }
    Ok(path)
}

/// The OSODS path pattern (positions 1, 2 mod 3) along a hamiltonian path.
pub fn tournament_osods_via_hampath(t: &Digraph) -> Result<VertexSet> {
    let path = tournament_hamiltonian_path(t)?;
    if t.order() < 2 {
        return Err(Error::InvalidSize {
            family: "tournament",
            size: t.order(),
            reason: "needs at least 2 vertices",
        });
    }
    VertexSet::from_indices(
        t.order(),
        path_pattern(ParamKind::GammaOso, path.len())
            .into_iter()
            .map(|p| path[p]),
    )
}

/// Hub plus all leg starts on the spider with `k` legs.
pub fn spider_isods_witness(k: usize) -> Result<VertexSet> {
    if k == 0 {
        return Err(Error::InvalidSize {
            family: "spider",
            size: k,
            reason: "needs at least one leg",
        });
    }
    VertexSet::from_indices(2 * k + 1, 0..=k)
}

/// First `(u, v)` in lexicographic order where `u` reaches every other
/// vertex but `v` and `v` is reached from every other vertex but `u`.
pub fn dominating_source_sink_pair(d: &Digraph) -> Option<(usize, usize)> {
    let n = d.order();
    if n < 2 {
        return None;
    }
    for u in 0..n {
        for v in (0..n).filter(|&v| v != u) {
            let mut rest = VertexSet::full(n);
            rest.remove(u);
            rest.remove(v);
            let mut out_u = d.out_neighbors(u).clone();
            out_u.remove(v);
            let mut in_v = d.in_neighbors(v).clone();
            in_v.remove(u);
            if out_u == rest && in_v == rest {
                return Some((u, v));
            }
        }
    }
    None
}
