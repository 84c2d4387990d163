//! Definition-level verifiers: domination, defense, private neighbors and
//! the closed-form defense characterizations.
//!
//! Everything here follows the definitions literally and is used as the
//! ground truth by the solver tests.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::kinds::SetKind;
use crate::vertex_set::VertexSet;

/// Defender chosen for each vertex outside the set, in ascending order of
/// the defended vertex. `None` marks an undefended vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DefenseWitness {
    pub defenders: Vec<(usize, Option<usize>)>,
}

impl DefenseWitness {
    pub fn defender_of(&self, v: usize) -> Option<usize> {
        self.defenders.iter().find(|&&(w, _)| w == v).and_then(|&(_, u)| u)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    NotDominated,
    Undefended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Failure {
    pub vertex: usize,
    pub reason: FailureReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub defense: DefenseWitness,
    pub failure: Option<Failure>,
}

fn require_member(s: &VertexSet, u: usize, what: &str) -> Result<()> {
    if u >= s.universe() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: s.universe(),
        });
    }
    if !s.contains(u) {
        return Err(Error::Precondition(format!("{what} {} is not in S", u + 1)));
    }
    Ok(())
}

/// `{v : N-[v] ∩ S = {u}}`.
pub fn pn_plus(d: &Digraph, s: &VertexSet, u: usize) -> Result<VertexSet> {
    require_member(s, u, "vertex")?;
    Ok(private(d, s, u, |v| d.closed_in(v)))
}

/// `{v : N+[v] ∩ S = {u}}`.
pub fn pn_minus(d: &Digraph, s: &VertexSet, u: usize) -> Result<VertexSet> {
    require_member(s, u, "vertex")?;
    Ok(private(d, s, u, |v| d.closed_out(v)))
}

fn private(d: &Digraph, s: &VertexSet, u: usize, closed: impl Fn(usize) -> VertexSet) -> VertexSet {
    let mut out = VertexSet::empty(d.order());
    for v in 0..d.order() {
        let hit = closed(v).intersection(s);
        if hit.len() == 1 && hit.contains(u) {
            out.insert(v);
        }
    }
    out
}

/// Whether `v` (assumed outside `s`) is dominated under `kind`'s base rule.
fn dominated(d: &Digraph, s: &VertexSet, v: usize, kind: SetKind) -> bool {
    match kind.base() {
        SetKind::OutDominating => d.in_neighbors(v).intersects(s),
        SetKind::InDominating => d.out_neighbors(v).intersects(s),
        SetKind::UnderlyingDominating => d.neighbors(v).intersects(s),
        SetKind::TwinDominating => d.in_neighbors(v).intersects(s) && d.out_neighbors(v).intersects(s),
        _ => unreachable!("base() only returns plain domination kinds"),
    }
}

fn first_undominated(d: &Digraph, s: &VertexSet, kind: SetKind) -> Option<usize> {
    (0..d.order()).find(|&v| !s.contains(v) && !dominated(d, s, v, kind))
}

/// Plain membership test for any kind, including the secure ones.
pub fn is_set(d: &Digraph, s: &VertexSet, kind: SetKind) -> bool {
    verify(d, s, kind).valid
}

/// Vertices allowed to defend `v` under `kind`, before the swap test.
fn defender_candidates(d: &Digraph, v: usize, kind: SetKind) -> VertexSet {
    match kind {
        SetKind::Sods | SetKind::Sds => d.neighbors(v),
        SetKind::Osds | SetKind::Osods => d.in_neighbors(v).clone(),
        SetKind::Isods => d.out_neighbors(v).clone(),
        _ => VertexSet::empty(d.order()),
    }
}

/// Does `u ∈ S` defend `v ∉ S`? Checked by performing the swap.
pub fn defends(d: &Digraph, s: &VertexSet, u: usize, v: usize, kind: SetKind) -> Result<bool> {
    if !kind.is_secure() {
        return Err(Error::Precondition(format!("{kind} has no defense notion")));
    }
    require_member(s, u, "defender")?;
    if v >= d.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: d.order(),
        });
    }
    if s.contains(v) {
        return Err(Error::Precondition(format!("vertex {} is already in S", v + 1)));
    }
    Ok(defends_unchecked(d, s, u, v, kind))
}

fn defends_unchecked(d: &Digraph, s: &VertexSet, u: usize, v: usize, kind: SetKind) -> bool {
    if !defender_candidates(d, v, kind).contains(u) {
        return false;
    }
    let swapped = s.swapped(u, v);
    first_undominated(d, &swapped, kind).is_none()
}

/// Full verdict for `s` under `kind`. For secure kinds every outside vertex
/// gets its smallest valid defender. The reported failure is the first
/// undominated vertex if there is one, else the first undefended vertex.
pub fn verify(d: &Digraph, s: &VertexSet, kind: SetKind) -> Verdict {
    if kind == SetKind::Sds && !d.is_symmetric() {
        return verify(&d.symmetric_closure(), s, kind);
    }
    let undominated = first_undominated(d, s, kind);
    let mut defense = DefenseWitness::default();
    let mut undefended = None;
    if kind.is_secure() {
        for v in (0..d.order()).filter(|&v| !s.contains(v)) {
            let cands = defender_candidates(d, v, kind).intersection(s);
            let u = cands.iter().find(|&u| defends_unchecked(d, s, u, v, kind));
            if u.is_none() && undefended.is_none() {
                undefended = Some(v);
            }
            defense.defenders.push((v, u));
        }
    }
    let failure = match (undominated, undefended) {
        (Some(v), _) => Some(Failure {
            vertex: v,
            reason: FailureReason::NotDominated,
        }),
        (None, Some(v)) => Some(Failure {
            vertex: v,
            reason: FailureReason::Undefended,
        }),
        (None, None) => None,
    };
    Verdict {
        valid: failure.is_none(),
        defense,
        failure,
    }
}

/// Same as [`verify`]; kept as the name used for the secure kinds.
pub fn is_secure_set(d: &Digraph, s: &VertexSet, kind: SetKind) -> Verdict {
    verify(d, s, kind)
}

/// Closed-form defense predicates, named by the set kind and the side of
/// `v` the defender sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharForm {
    /// OSODS, `u ∈ N-(v)`: `N-(u) ∩ S ≠ ∅` and `pn+(u,S) ⊆ N+[v]`.
    OsodsInDefender,
    /// OSDS, `u ∈ N-(v)`: `pn+(u,S) ∪ pn-(u,S) ⊆ N+[v] ∪ N-[v]`.
    OsdsInDefender,
    /// SODS, `u ∈ N+(v)`: `pn+(u,S) ⊆ N+[v]`.
    SodsOutDefender,
    /// SODS, `u ∈ N-(v)`: as for the OSODS in-defender.
    SodsInDefender,
    /// ISODS, `u ∈ N+(v)`: `pn+(u,S) ⊆ N+[v]`.
    IsodsOutDefender,
}

impl CharForm {
    pub const ALL: [CharForm; 5] = [
        CharForm::OsodsInDefender,
        CharForm::OsdsInDefender,
        CharForm::SodsOutDefender,
        CharForm::SodsInDefender,
        CharForm::IsodsOutDefender,
    ];

    pub fn kind(self) -> SetKind {
        match self {
            CharForm::OsodsInDefender => SetKind::Osods,
            CharForm::OsdsInDefender => SetKind::Osds,
            CharForm::SodsOutDefender | CharForm::SodsInDefender => SetKind::Sods,
            CharForm::IsodsOutDefender => SetKind::Isods,
        }
    }

    /// Whether the defender must be an in-neighbor of `v` (else out-neighbor).
    pub fn defender_is_in_neighbor(self) -> bool {
        matches!(
            self,
            CharForm::OsodsInDefender | CharForm::OsdsInDefender | CharForm::SodsInDefender
        )
    }

    pub fn adjacency_holds(self, d: &Digraph, u: usize, v: usize) -> bool {
        if self.defender_is_in_neighbor() {
            d.has_arc(u, v)
        } else {
            d.has_arc(v, u)
        }
    }
}

/// Evaluates a closed-form predicate without performing the swap.
pub fn char_defense(d: &Digraph, s: &VertexSet, u: usize, v: usize, form: CharForm) -> Result<bool> {
    require_member(s, u, "defender")?;
    if s.contains(v) {
        return Err(Error::Precondition(format!("vertex {} is already in S", v + 1)));
    }
    if !form.adjacency_holds(d, u, v) {
        return Err(Error::Precondition(format!(
            "{} is not an {} of {}",
            u + 1,
            if form.defender_is_in_neighbor() {
                "in-neighbor"
            } else {
                "out-neighbor"
            },
            v + 1
        )));
    }
    Ok(char_unchecked(d, s, u, v, form))
}

fn char_unchecked(d: &Digraph, s: &VertexSet, u: usize, v: usize, form: CharForm) -> bool {
    let pn = private(d, s, u, |w| d.closed_in(w));
    match form {
        CharForm::OsodsInDefender | CharForm::SodsInDefender => {
            d.in_neighbors(u).intersects(s) && pn.is_subset(&d.closed_out(v))
        }
        CharForm::SodsOutDefender | CharForm::IsodsOutDefender => pn.is_subset(&d.closed_out(v)),
        CharForm::OsdsInDefender => {
            let pn_both = pn.union(&private(d, s, u, |w| d.closed_out(w)));
            pn_both.is_subset(&d.closed_out(v).union(&d.closed_in(v)))
        }
    }
}

/// Whole-set test built from the closed forms: base domination plus, for
/// every outside `v`, some adjacent `u ∈ S` passing a form for `kind`.
pub fn corollary_check(d: &Digraph, s: &VertexSet, kind: SetKind) -> Result<bool> {
    let forms: &[CharForm] = match kind {
        SetKind::Osods => &[CharForm::OsodsInDefender],
        SetKind::Osds => &[CharForm::OsdsInDefender],
        SetKind::Sods => &[CharForm::SodsOutDefender, CharForm::SodsInDefender],
        SetKind::Isods => &[CharForm::IsodsOutDefender],
        _ => return Err(Error::Precondition(format!("no closed form for {kind}"))),
    };
    if first_undominated(d, s, kind).is_some() {
        return Ok(false);
    }
    Ok((0..d.order()).filter(|&v| !s.contains(v)).all(|v| {
        s.iter().any(|u| {
            forms
                .iter()
                .any(|&f| f.adjacency_holds(d, u, v) && char_unchecked(d, s, u, v, f))
        })
    }))
}
