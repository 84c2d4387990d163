//! Bound catalogue, longest paths and cycles, and the two-thirds hunt.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::dominating_source_sink_pair;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::family;
use crate::io::serialize_digraph;
use crate::kinds::ParamKind;
use crate::rng::SeededRng;
use crate::solver::{self, SolveConfig};

/// Cap for the exponential path and cycle searches.
pub const LONGEST_CAP: usize = 20;
/// Cap for exhaustive hunting.
pub const HUNT_EXHAUSTIVE_CAP: usize = 5;

fn check_longest_cap(d: &Digraph) -> Result<()> {
    if d.order() > LONGEST_CAP {
        return Err(Error::SizeCap {
            n: d.order(),
            cap: LONGEST_CAP,
        });
    }
    Ok(())
}

fn out_masks(d: &Digraph) -> Vec<u32> {
    (0..d.order()).map(|u| d.out_neighbors(u).to_mask() as u32).collect()
}

/// Arc count of a longest directed path.
pub fn longest_dipath_length(d: &Digraph) -> Result<usize> {
    check_longest_cap(d)?;
    let n = d.order();
    let out = out_masks(d);
    // ends[mask]: vertices where a path through exactly `mask` can end
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 0;
    for mask in 1..1usize << n {
        let mut e = ends[mask];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize - 1);
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = out[v] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    Ok(best)
}

/// Length of a longest directed cycle, 0 when acyclic. Opposite arcs form
/// a cycle of length 2.
pub fn longest_dicycle_length(d: &Digraph) -> Result<usize> {
    check_longest_cap(d)?;
    let n = d.order();
    let out = out_masks(d);
    let inn: Vec<u32> = (0..n).map(|u| d.in_neighbors(u).to_mask() as u32).collect();
    // paths start at the lowest vertex of their mask and only climb above it
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 0;
    for mask in 1..1usize << n {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let start = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        if size >= 2 && e & inn[start] != 0 {
            best = best.max(size);
        }
        let above = !((1u32 << (start + 1)) - 1);
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut next = out[v] & !(mask as u32) & above;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    Ok(best)
}

/// Every vertex is a source or a sink.
pub fn equals_n_characterization(d: &Digraph) -> bool {
    (0..d.order()).all(|u| d.in_degree(u) == 0 || d.out_degree(u) == 0)
}

/// Underlying graph is a star (a tree with a vertex adjacent to all others).
pub fn underlying_is_star(d: &Digraph) -> bool {
    let n = d.order();
    let und = d.symmetric_closure();
    let edges = und.arc_count() / 2;
    edges + 1 == n && (0..n).any(|u| und.out_degree(u) + 1 == n)
}

/// Exactly the directed 3-cycle.
pub fn is_directed_triangle(d: &Digraph) -> bool {
    d.order() == 3 && d.arc_count() == 3 && d.is_tournament() && d.sources().is_empty()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `lhs <= rhs`.
    Le,
    /// `lhs == rhs`.
    Eq,
    /// Predicted and actual truth values (0 or 1) agree.
    Iff,
}

/// Hypotheses that entries may require.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cond {
    NoSymmetricArcs,
    MaxOutPositive,
    Tournament,
    HasSource,
    OrderAtLeast(usize),
    WeaklyConnected,
    MinDegreePositive,
    HasArc,
    SourceSinkPair,
    WithinLongestCap,
}

impl Cond {
    fn describe(self) -> String {
        match self {
            Cond::NoSymmetricArcs => "no symmetric arcs".into(),
            Cond::MaxOutPositive => "max out-degree >= 1".into(),
            Cond::Tournament => "tournament".into(),
            Cond::HasSource => "has a vertex of in-degree 0".into(),
            Cond::OrderAtLeast(k) => format!("n >= {k}"),
            Cond::WeaklyConnected => "weakly connected".into(),
            Cond::MinDegreePositive => "min degree >= 1".into(),
            Cond::HasArc => "at least one arc".into(),
            Cond::SourceSinkPair => "has a dominating source-sink pair".into(),
            Cond::WithinLongestCap => format!("n <= {LONGEST_CAP}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub bound_id: &'static str,
    pub statement: &'static str,
    pub relation: Relation,
    pub applicable: bool,
    /// The hypotheses checked, or the first one that failed.
    pub reason: String,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub holds: Option<bool>,
    pub slack: Option<i64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.holds == Some(false))
    }

    pub fn entry(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.bound_id == id)
    }
}

/// Quantities the catalogue is evaluated on.
struct Facts<'a> {
    d: &'a Digraph,
    g: &'a BTreeMap<ParamKind, usize>,
    n: i64,
    max_out: i64,
    min_in: i64,
    min_degree: i64,
    path: Option<i64>,
    cycle: Option<i64>,
}

impl Facts<'_> {
    fn holds(&self, c: Cond) -> bool {
        let d = self.d;
        match c {
            Cond::NoSymmetricArcs => !d.has_symmetric_arcs(),
            Cond::MaxOutPositive => self.max_out >= 1,
            Cond::Tournament => d.is_tournament(),
            Cond::HasSource => !d.sources().is_empty(),
            Cond::OrderAtLeast(k) => d.order() >= k,
            Cond::WeaklyConnected => d.is_weakly_connected(),
            Cond::MinDegreePositive => self.min_degree >= 1,
            Cond::HasArc => d.arc_count() > 0,
            Cond::SourceSinkPair => dominating_source_sink_pair(d).is_some(),
            Cond::WithinLongestCap => self.path.is_some(),
        }
    }

    fn gamma(&self, k: ParamKind) -> i64 {
        self.g[&k] as i64
    }
}

fn ceil_log2(n: usize) -> i64 {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as i64
    }
}

type Eval = fn(&Facts) -> (i64, i64);

struct Rule {
    id: &'static str,
    statement: &'static str,
    relation: Relation,
    guard: &'static [Cond],
    eval: Eval,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1) / b
}

fn b(v: bool) -> i64 {
    v as i64
}

use Cond::*;
use ParamKind::*;

const CATALOGUE: &[Rule] = &[
    Rule {
        id: "chain_s_os",
        statement: "gamma_s <= gamma_os",
        relation: Relation::Le,
        guard: &[],
        eval: |f| (f.gamma(GammaS), f.gamma(GammaOs)),
    },
    Rule {
        id: "chain_s_so",
        statement: "gamma_s <= gamma_so",
        relation: Relation::Le,
        guard: &[],
        eval: |f| (f.gamma(GammaS), f.gamma(GammaSo)),
    },
    Rule {
        id: "chain_plus_os",
        statement: "gamma_plus <= gamma_os",
        relation: Relation::Le,
        guard: &[],
        eval: |f| (f.gamma(GammaPlus), f.gamma(GammaOs)),
    },
    Rule {
        id: "chain_plus_so",
        statement: "gamma_plus <= gamma_so",
        relation: Relation::Le,
        guard: &[],
        eval: |f| (f.gamma(GammaPlus), f.gamma(GammaSo)),
    },
    Rule {
        id: "chain_so_oso",
        statement: "gamma_so <= gamma_oso",
        relation: Relation::Le,
        guard: &[],
        eval: |f| (f.gamma(GammaSo), f.gamma(GammaOso)),
    },
    Rule {
        id: "chain_so_iso",
        statement: "gamma_so <= gamma_iso",
        relation: Relation::Le,
        guard: &[],
        eval: |f| (f.gamma(GammaSo), f.gamma(GammaIso)),
    },
    Rule {
        id: "chain_os_oso",
        statement: "gamma_os <= gamma_oso",
        relation: Relation::Le,
        guard: &[],
        eval: |f| (f.gamma(GammaOs), f.gamma(GammaOso)),
    },
    Rule {
        id: "chain_os_iso",
        statement: "gamma_os <= gamma_iso",
        relation: Relation::Le,
        guard: &[NoSymmetricArcs],
        eval: |f| (f.gamma(GammaOs), f.gamma(GammaIso)),
    },
    Rule {
        id: "oso_lower_out_degree",
        statement: "ceil(2n / (2 max_out + 1)) <= gamma_oso",
        relation: Relation::Le,
        guard: &[NoSymmetricArcs, MaxOutPositive],
        eval: |f| (ceil_div(2 * f.n, 2 * f.max_out + 1), f.gamma(GammaOso)),
    },
    Rule {
        id: "oso_upper_min_degree",
        statement: "gamma_oso <= n - min_degree",
        relation: Relation::Le,
        guard: &[],
        eval: |f| (f.gamma(GammaOso), f.n - f.min_degree),
    },
    Rule {
        id: "oso_equals_n_iff_sources_sinks",
        statement: "gamma_oso = n iff every vertex has out-degree 0 or in-degree 0",
        relation: Relation::Iff,
        guard: &[],
        eval: |f| (b(equals_n_characterization(f.d)), b(f.gamma(GammaOso) == f.n)),
    },
    Rule {
        id: "oso_longest_path",
        statement: "gamma_oso <= n - floor((l + 1) / 3)",
        relation: Relation::Le,
        guard: &[WithinLongestCap],
        eval: |f| (f.gamma(GammaOso), f.n - (f.path.unwrap() + 1) / 3),
    },
    Rule {
        id: "oso_longest_cycle",
        statement: "gamma_oso <= n - floor(c / 3)",
        relation: Relation::Le,
        guard: &[WithinLongestCap],
        eval: |f| (f.gamma(GammaOso), f.n - f.cycle.unwrap() / 3),
    },
    Rule {
        id: "os_longest_path",
        statement: "gamma_os <= n - floor((l + 1) / 2)",
        relation: Relation::Le,
        guard: &[WithinLongestCap],
        eval: |f| (f.gamma(GammaOs), f.n - (f.path.unwrap() + 1) / 2),
    },
    Rule {
        id: "os_longest_cycle",
        statement: "gamma_os <= n - floor(c / 2)",
        relation: Relation::Le,
        guard: &[WithinLongestCap],
        eval: |f| (f.gamma(GammaOs), f.n - f.cycle.unwrap() / 2),
    },
    Rule {
        id: "so_longest_path",
        statement: "gamma_so <= n - floor((2l + 2) / 5)",
        relation: Relation::Le,
        guard: &[WithinLongestCap],
        eval: |f| (f.gamma(GammaSo), f.n - (2 * f.path.unwrap() + 2) / 5),
    },
    Rule {
        id: "so_longest_cycle",
        statement: "gamma_so <= n - floor(2c / 5)",
        relation: Relation::Le,
        guard: &[WithinLongestCap],
        eval: |f| (f.gamma(GammaSo), f.n - (2 * f.cycle.unwrap()) / 5),
    },
    Rule {
        id: "iso_longest_path",
        statement: "gamma_iso <= n - floor((l + 1) / 3)",
        relation: Relation::Le,
        guard: &[WithinLongestCap],
        eval: |f| (f.gamma(GammaIso), f.n - (f.path.unwrap() + 1) / 3),
    },
    Rule {
        id: "iso_longest_cycle",
        statement: "gamma_iso <= n - floor(c / 3)",
        relation: Relation::Le,
        guard: &[WithinLongestCap],
        eval: |f| (f.gamma(GammaIso), f.n - f.cycle.unwrap() / 3),
    },
    Rule {
        id: "os_sum_out_in",
        statement: "gamma_os <= gamma_plus + gamma_minus",
        relation: Relation::Le,
        guard: &[NoSymmetricArcs],
        eval: |f| (f.gamma(GammaOs), f.gamma(GammaPlus) + f.gamma(GammaMinus)),
    },
    Rule {
        id: "os_at_most_n_minus_1",
        statement: "gamma_os <= n - 1",
        relation: Relation::Le,
        guard: &[OrderAtLeast(2), HasArc],
        eval: |f| (f.gamma(GammaOs), f.n - 1),
    },
    Rule {
        id: "os_n_minus_1_iff_triangle_or_star",
        statement: "gamma_os = n - 1 iff D is the directed 3-cycle or its underlying graph is a star",
        relation: Relation::Iff,
        guard: &[OrderAtLeast(2), WeaklyConnected],
        eval: |f| {
            (
                b(is_directed_triangle(f.d) || underlying_is_star(f.d)),
                b(f.gamma(GammaOs) == f.n - 1),
            )
        },
    },
    Rule {
        id: "tournament_os_one_iff_source",
        statement: "gamma_os(T) = 1 iff T has a vertex of in-degree 0",
        relation: Relation::Iff,
        guard: &[Tournament],
        eval: |f| (b(!f.d.sources().is_empty()), b(f.gamma(GammaOs) == 1)),
    },
    Rule {
        id: "tournament_os_log",
        statement: "gamma_os(T) <= ceil(log2 n)",
        relation: Relation::Le,
        guard: &[Tournament, OrderAtLeast(2)],
        eval: |f| (f.gamma(GammaOs), ceil_log2(f.d.order())),
    },
    Rule {
        id: "os_at_most_twin",
        statement: "gamma_os <= gamma_twin",
        relation: Relation::Le,
        guard: &[NoSymmetricArcs],
        eval: |f| (f.gamma(GammaOs), f.gamma(GammaTwin)),
    },
    Rule {
        id: "twin_two_thirds",
        statement: "gamma_twin <= floor(2n / 3)",
        relation: Relation::Le,
        guard: &[MinDegreePositive],
        eval: |f| (f.gamma(GammaTwin), 2 * f.n / 3),
    },
    Rule {
        id: "os_two_thirds",
        statement: "gamma_os <= floor(2n / 3)",
        relation: Relation::Le,
        guard: &[MinDegreePositive, NoSymmetricArcs],
        eval: |f| (f.gamma(GammaOs), 2 * f.n / 3),
    },
    Rule {
        id: "so_lower_out_degree",
        statement: "ceil((n + 1) / (max_out + 1)) <= gamma_so",
        relation: Relation::Le,
        guard: &[NoSymmetricArcs, MaxOutPositive],
        eval: |f| (ceil_div(f.n + 1, f.max_out + 1), f.gamma(GammaSo)),
    },
    Rule {
        id: "oso_lower_out_degree_plus_one",
        statement: "ceil((n + 1) / (max_out + 1)) <= gamma_oso",
        relation: Relation::Le,
        guard: &[NoSymmetricArcs, MaxOutPositive],
        eval: |f| (ceil_div(f.n + 1, f.max_out + 1), f.gamma(GammaOso)),
    },
    Rule {
        id: "iso_lower_out_degree",
        statement: "ceil((n + 1) / (max_out + 1)) <= gamma_iso",
        relation: Relation::Le,
        guard: &[NoSymmetricArcs, MaxOutPositive],
        eval: |f| (ceil_div(f.n + 1, f.max_out + 1), f.gamma(GammaIso)),
    },
    Rule {
        id: "so_equals_n_iff_sources_sinks",
        statement: "gamma_so = n iff every vertex has out-degree 0 or in-degree 0",
        relation: Relation::Iff,
        guard: &[],
        eval: |f| (b(equals_n_characterization(f.d)), b(f.gamma(GammaSo) == f.n)),
    },
    Rule {
        id: "tournament_so_plus_one",
        statement: "gamma_so(T) <= gamma_plus(T) + 1",
        relation: Relation::Le,
        guard: &[Tournament],
        eval: |f| (f.gamma(GammaSo), f.gamma(GammaPlus) + 1),
    },
    Rule {
        id: "tournament_so_log",
        statement: "gamma_so(T) <= ceil(log2 n) + 1",
        relation: Relation::Le,
        guard: &[Tournament, OrderAtLeast(2)],
        eval: |f| (f.gamma(GammaSo), ceil_log2(f.d.order()) + 1),
    },
    Rule {
        id: "iso_upper_min_in",
        statement: "gamma_iso <= n - min_in",
        relation: Relation::Le,
        guard: &[],
        eval: |f| (f.gamma(GammaIso), f.n - f.min_in),
    },
    Rule {
        id: "iso_equals_n_iff_sources_sinks",
        statement: "gamma_iso = n iff every vertex has out-degree 0 or in-degree 0",
        relation: Relation::Iff,
        guard: &[],
        eval: |f| (b(equals_n_characterization(f.d)), b(f.gamma(GammaIso) == f.n)),
    },
    Rule {
        id: "iso_two_for_source_sink_pair",
        statement: "gamma_iso = 2 when a dominating source-sink pair exists",
        relation: Relation::Eq,
        guard: &[SourceSinkPair, NoSymmetricArcs],
        eval: |f| (2, f.gamma(GammaIso)),
    },
    Rule {
        id: "tournament_oso_at_least_2",
        statement: "2 <= gamma_oso(T)",
        relation: Relation::Le,
        guard: &[Tournament, OrderAtLeast(2)],
        eval: |f| (2, f.gamma(GammaOso)),
    },
    Rule {
        id: "tournament_oso_two_thirds",
        statement: "gamma_oso(T) <= ceil(2n / 3)",
        relation: Relation::Le,
        guard: &[Tournament, OrderAtLeast(2)],
        eval: |f| (f.gamma(GammaOso), ceil_div(2 * f.n, 3)),
    },
    Rule {
        id: "tournament_oso_source_log",
        statement: "gamma_oso(T) <= ceil(log2 (n - 1)) + 1",
        relation: Relation::Le,
        guard: &[Tournament, HasSource, OrderAtLeast(3)],
        eval: |f| (f.gamma(GammaOso), ceil_log2(f.d.order() - 1) + 1),
    },
    Rule {
        id: "so_at_least_2",
        statement: "2 <= gamma_so",
        relation: Relation::Le,
        guard: &[NoSymmetricArcs, OrderAtLeast(2)],
        eval: |f| (2, f.gamma(GammaSo)),
    },
    Rule {
        id: "oso_at_least_2",
        statement: "2 <= gamma_oso",
        relation: Relation::Le,
        guard: &[NoSymmetricArcs, OrderAtLeast(2)],
        eval: |f| (2, f.gamma(GammaOso)),
    },
    Rule {
        id: "iso_at_least_2",
        statement: "2 <= gamma_iso",
        relation: Relation::Le,
        guard: &[NoSymmetricArcs, OrderAtLeast(2)],
        eval: |f| (2, f.gamma(GammaIso)),
    },
];

/// Stable ids of every catalogue entry, in report order.
pub fn catalogue_ids() -> Vec<&'static str> {
    CATALOGUE.iter().map(|s| s.id).collect()
}

/// Evaluates the catalogue on `d` given all eight parameter values.
pub fn bound_report(d: &Digraph, params: &BTreeMap<ParamKind, usize>) -> Result<BoundReport> {
    for k in ParamKind::ALL {
        if !params.contains_key(&k) {
            return Err(Error::MissingParameter { param: k.name() });
        }
    }
    let st = d.degree_stats();
    let (path, cycle) = if d.order() <= LONGEST_CAP {
        (
            Some(longest_dipath_length(d)? as i64),
            Some(longest_dicycle_length(d)? as i64),
        )
    } else {
        (None, None)
    };
    let facts = Facts {
        d,
        g: params,
        n: d.order() as i64,
        max_out: st.max_out as i64,
        min_in: st.min_in as i64,
        min_degree: st.min_degree as i64,
        path,
        cycle,
    };
    let entries = CATALOGUE
        .iter()
        .map(|rule| {
            let failed = rule.guard.iter().find(|&&c| !facts.holds(c));
            let mut e = BoundEntry {
                bound_id: rule.id,
                statement: rule.statement,
                relation: rule.relation,
                applicable: failed.is_none(),
                reason: String::new(),
                lhs: None,
                rhs: None,
                holds: None,
                slack: None,
            };
            if let Some(c) = failed {
                e.reason = format!("requires {}", c.describe());
                return e;
            }
            e.reason = if rule.guard.is_empty() {
                "unconditional".into()
            } else {
                rule.guard.iter().map(|c| c.describe()).collect::<Vec<_>>().join(", ")
            };
            let (lhs, rhs) = (rule.eval)(&facts);
            e.lhs = Some(lhs);
            e.rhs = Some(rhs);
            e.slack = Some(rhs - lhs);
            e.holds = Some(match rule.relation {
                Relation::Le => lhs <= rhs,
                Relation::Eq | Relation::Iff => lhs == rhs,
            });
            e
        })
        .collect();
    Ok(BoundReport { entries })
}

/// Values of all eight parameters from a solver run.
pub fn parameter_values(d: &Digraph, config: &SolveConfig) -> Result<BTreeMap<ParamKind, usize>> {
    Ok(solver::solve_all(d, config)?
        .into_iter()
        .map(|(k, r)| (k, r.value))
        .collect())
}

/// Report for `d`, or an error carrying the serialized digraph and the
/// first violated entry.
pub fn check_catalogue(d: &Digraph, config: &SolveConfig) -> Result<BoundReport> {
    let params = parameter_values(d, config)?;
    let report = bound_report(d, &params)?;
    if let Some(v) = report.violations().next() {
        return Err(Error::Invariant(format!(
            "bound {} violated (lhs {:?}, rhs {:?}) on\n{}",
            v.bound_id,
            v.lhs,
            v.rhs,
            serialize_digraph(d)
        )));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub digraph: String,
    pub value: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HuntReport {
    pub conjecture_id: String,
    pub search_mode: SearchMode,
    pub n_range: [usize; 2],
    pub seed: Option<u64>,
    pub digraphs_checked: u64,
    /// Checked digraphs per order, keyed by `n`.
    pub checked_by_order: BTreeMap<usize, u64>,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HuntMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

/// Arc density range for sampled hunting.
const HUNT_DENSITY: (f64, f64) = (0.15, 0.6);

/// Looks for digraphs with min degree >= 1 where `kind` exceeds
/// `ceil(2n / 3)`. Hits are confirmed by the brute-force oracle.
pub fn conjecture_hunt(kind: ParamKind, mode: HuntMode, n_lo: usize, n_hi: usize) -> Result<HuntReport> {
    if !matches!(kind, GammaOso | GammaIso) {
        return Err(Error::Precondition(format!("no two-thirds conjecture for {kind}")));
    }
    if n_lo == 0 || n_lo > n_hi {
        return Err(Error::Precondition(format!("bad order range {n_lo}..={n_hi}")));
    }
    let config = SolveConfig {
        threads: 1,
        ..SolveConfig::default()
    };
    let mut checked_by_order = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let seed = match mode {
        HuntMode::Exhaustive => {
            if n_hi > HUNT_EXHAUSTIVE_CAP {
                return Err(Error::SizeCap {
                    n: n_hi,
                    cap: HUNT_EXHAUSTIVE_CAP,
                });
            }
            None
        }
        HuntMode::Sampled { seed, .. } => {
            if n_hi > solver::ORACLE_CAP {
                return Err(Error::SizeCap {
                    n: n_hi,
                    cap: solver::ORACLE_CAP,
                });
            }
            Some(seed)
        }
    };
    let mut rng = seed.map(SeededRng::new);
    for n in n_lo..=n_hi {
        let corpus: Vec<Digraph> = match mode {
            HuntMode::Exhaustive => (0..family::labeled_count(n, true))
                .into_par_iter()
                .map(|i| family::labeled_digraph(n, i, true))
                .filter(|d| d.degree_stats().min_degree >= 1)
                .collect(),
            HuntMode::Sampled { samples, .. } => {
                let rng = rng.as_mut().expect("sampled mode has a seed");
                sample_min_degree_one(n, samples, rng)?
            }
        };
        checked_by_order.insert(n, corpus.len() as u64);
        let bound = (2 * n).div_ceil(3);
        let hits: Vec<Result<Option<Counterexample>>> = corpus
            .par_iter()
            .map(|d| {
                let value = solver::solve_min(d, kind, &config)?.value;
                if value <= bound {
                    return Ok(None);
                }
                let oracle = solver::brute_oracle(d, kind)?.value;
                if oracle != value {
                    return Err(Error::Invariant(format!(
                        "solver {value} and oracle {oracle} disagree on\n{}",
                        serialize_digraph(d)
                    )));
                }
                Ok(Some(Counterexample {
                    n,
                    digraph: serialize_digraph(d),
                    value,
                    bound,
                }))
            })
            .collect();
        for h in hits {
            if let Some(c) = h? {
                counterexamples.push(c);
            }
        }
    }
    Ok(HuntReport {
        conjecture_id: format!("{}_two_thirds", &kind.name()["gamma_".len()..]),
        search_mode: match mode {
            HuntMode::Exhaustive => SearchMode::Exhaustive,
            HuntMode::Sampled { .. } => SearchMode::Sampled,
        },
        n_range: [n_lo, n_hi],
        seed,
        digraphs_checked: checked_by_order.values().sum(),
        checked_by_order,
        counterexamples,
    })
}

/// Random digraphs with min degree >= 1; each draw picks its own density.
fn sample_min_degree_one(n: usize, samples: usize, rng: &mut SeededRng) -> Result<Vec<Digraph>> {
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(samples);
    let max_attempts = samples.saturating_mul(1000).max(1000);
    let mut attempts = 0;
    while out.len() < samples {
        attempts += 1;
        if attempts > max_attempts {
            return Err(Error::Invariant(format!(
                "could not draw {samples} digraphs with min degree >= 1 on {n} vertices"
            )));
        }
        let p = rng.uniform(HUNT_DENSITY.0, HUNT_DENSITY.1);
        let d = family::random_digraph(n, p, true, rng)?;
        if d.degree_stats().min_degree >= 1 {
            out.push(d);
        }
    }
    Ok(out)
}

/// Random digraph corpus used by the catalogue scans.
pub fn random_corpus(n: usize, count: usize, seed: u64) -> Result<Vec<Digraph>> {
    let mut rng = SeededRng::new(seed);
    (0..count)
        .map(|_| {
            let p = rng.uniform(0.1, 0.7);
            let sym = rng.coin();
            family::random_digraph(n, p, sym, &mut rng)
        })
        .collect()
}

/// Random tournament corpus used by the catalogue scans.
pub fn tournament_corpus(n: usize, count: usize, seed: u64) -> Result<Vec<Digraph>> {
    let mut rng = SeededRng::new(seed);
    (0..count).map(|_| family::random_tournament(n, &mut rng)).collect()
}
