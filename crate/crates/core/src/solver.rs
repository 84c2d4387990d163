//! Exact minimum sets by cardinality-ordered branch and bound.
//!
//! For each size `k` from a proven lower bound upward, the supersets of the
//! forced vertices are enumerated in lexicographic order. A branch is cut
//! when the chosen vertices together with every later candidate cannot
//! cover the digraph. The secure condition is tested only at full size.
//!
//! The first size is split by its smallest element; the parts can run on a
//! rayon pool and are merged in element order, so value, witness and node
//! count are the same for every thread count.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::kinds::{ParamKind, SetKind};
use crate::verify::{self, DefenseWitness};
use crate::vertex_set::VertexSet;

pub const DEFAULT_SIZE_CAP: usize = 26;
pub const ORACLE_CAP: usize = 20;
const MASK_LIMIT: usize = 64;
/// Below this order the split is not worth a thread hop.
const PARALLEL_MIN_ORDER: usize = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveConfig {
    pub size_cap: usize,
    /// Worker count; `0` lets rayon decide, `1` runs inline.
    pub threads: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            size_cap: DEFAULT_SIZE_CAP,
            threads: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: ParamKind,
    pub value: usize,
    /// Lexicographically smallest set of minimum size.
    pub witness: VertexSet,
    /// Empty for the non-secure kinds.
    pub defense: DefenseWitness,
    pub nodes_explored: u64,
    pub forced: VertexSet,
    /// Size the search started from.
    pub lower_bound: usize,
}

fn mask_of(s: &VertexSet) -> u64 {
    s.to_mask()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Vertices that belong to every set of the given kind.
pub fn forced_vertices(d: &Digraph, kind: ParamKind) -> VertexSet {
    match kind {
        ParamKind::GammaPlus | ParamKind::GammaSo | ParamKind::GammaOso | ParamKind::GammaOs => d.sources(),
        ParamKind::GammaMinus => d.sinks(),
        ParamKind::GammaIso | ParamKind::GammaTwin => d.sources().union(&d.sinks()),
        ParamKind::GammaS => d.isolated(),
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Largest applicable proven lower bound, never below 1.
pub fn lower_bound(d: &Digraph, kind: ParamKind) -> usize {
    let n = d.order();
    let st = d.degree_stats();
    let max_und = (0..n).map(|u| d.neighbors(u).len()).max().unwrap_or(0);
    let cover_out = ceil_div(n, st.max_out + 1);
    let mut lb = match kind {
        ParamKind::GammaMinus => ceil_div(n, st.max_in + 1),
        ParamKind::GammaS => ceil_div(n, max_und + 1),
        ParamKind::GammaTwin => cover_out.max(ceil_div(n, st.max_in + 1)),
        _ => cover_out,
    };
    let secure_out = matches!(kind, ParamKind::GammaSo | ParamKind::GammaOso | ParamKind::GammaIso);
    if secure_out && !d.has_symmetric_arcs() && st.max_out >= 1 {
        lb = lb.max(ceil_div(n + 1, st.max_out + 1));
        if n >= 2 {
            lb = lb.max(2);
        }
        if kind == ParamKind::GammaOso {
            lb = lb.max(ceil_div(2 * n, 2 * st.max_out + 1));
        }
    }
    lb.max(1)
}

/// Bitmask tables for one digraph and kind.
struct Kernel {
    n: usize,
    full: u64,
    forced: u64,
    /// One or two closed-cover tables; a set is valid only if the union of
    /// its covers is `full` in every table.
    covers: Vec<Vec<u64>>,
    /// `suffix[t][e]` = union of `covers[t][w]` for `w >= e`.
    suffix: Vec<Vec<u64>>,
    /// `defenders[v]`: vertices adjacent to `v` in the way the kind demands.
    defenders: Option<Vec<u64>>,
}

impl Kernel {
    fn new(d: &Digraph, kind: ParamKind) -> Self {
        let n = d.order();
        let closed =
            |f: &dyn Fn(usize) -> VertexSet| -> Vec<u64> { (0..n).map(|u| mask_of(&f(u)) | (1u64 << u)).collect() };
        let out_cover = closed(&|u| d.out_neighbors(u).clone());
        let in_cover = closed(&|u| d.in_neighbors(u).clone());
        let und_cover = closed(&|u| d.neighbors(u));
        let und_adj: Vec<u64> = (0..n).map(|v| mask_of(&d.neighbors(v))).collect();
        let in_adj: Vec<u64> = (0..n).map(|v| mask_of(d.in_neighbors(v))).collect();
        let out_adj: Vec<u64> = (0..n).map(|v| mask_of(d.out_neighbors(v))).collect();
        let (covers, defenders) = match kind.set_kind() {
            SetKind::OutDominating => (vec![out_cover], None),
            SetKind::InDominating => (vec![in_cover], None),
            SetKind::TwinDominating => (vec![out_cover, in_cover], None),
            SetKind::Sds => (vec![und_cover], Some(und_adj)),
            SetKind::Sods => (vec![out_cover], Some(und_adj)),
            SetKind::Osds => (vec![und_cover], Some(in_adj)),
            SetKind::Osods => (vec![out_cover], Some(in_adj)),
            SetKind::Isods => (vec![out_cover], Some(out_adj)),
            SetKind::UnderlyingDominating => (vec![und_cover], None),
        };
        let suffix = covers
            .iter()
            .map(|c| {
                let mut s = vec![0u64; n + 1];
                for e in (0..n).rev() {
                    s[e] = s[e + 1] | c[e];
                }
                s
            })
            .collect();
        Self {
            n,
            full: full_mask(n),
            forced: mask_of(&forced_vertices(d, kind)),
            covers,
            suffix,
            defenders,
        }
    }

    fn covered(&self, cov: &[u64; 2]) -> bool {
        (0..self.covers.len()).all(|t| cov[t] == self.full)
    }

    /// Secure condition for a set whose base domination already holds.
    fn secure(&self, set: u64) -> bool {
        let Some(defenders) = &self.defenders else {
            return true;
        };
        let cover = &self.covers[0];
        let mut elems = [0usize; MASK_LIMIT];
        let mut k = 0;
        let mut rest = set;
        while rest != 0 {
            elems[k] = rest.trailing_zeros() as usize;
            k += 1;
            rest &= rest - 1;
        }
        // without[j]: cover of the set minus its j-th element
        let mut without = [0u64; MASK_LIMIT];
        let mut acc = 0u64;
        for j in 0..k {
            without[j] = acc;
            acc |= cover[elems[j]];
        }
        acc = 0;
        for j in (0..k).rev() {
            without[j] |= acc;
            acc |= cover[elems[j]];
        }
        let mut outside = self.full & !set;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let cand = defenders[v] & set;
            let ok = (0..k).any(|j| cand >> elems[j] & 1 == 1 && (without[j] | cover[v]) == self.full);
            if !ok {
                return false;
            }
        }
        true
    }

    /// Candidates for the next element after `start` with `left` picks to go.
    fn next_range(&self, start: usize, left: usize) -> std::ops::Range<usize> {
        if left == 0 || self.n < left || start > self.n - left {
            return 0..0;
        }
        let pending = self.forced & !((1u64 << start) - 1);
        let mut hi = self.n - left;
        if pending != 0 {
            hi = hi.min(pending.trailing_zeros() as usize);
        }
        start..hi + 1
    }

    fn forced_above(&self, e: usize) -> u32 {
        if e + 1 >= MASK_LIMIT {
            return 0;
        }
        (self.forced >> (e + 1)).count_ones()
    }

    /// Lexicographic search below a node; `stop` is polled once per node.
    fn dfs(
        &self,
        set: u64,
        cov: [u64; 2],
        next: usize,
        left: usize,
        nodes: &mut u64,
        stop: &dyn Fn() -> bool,
    ) -> Option<u64> {
        *nodes += 1;
        if left == 0 {
            return (self.covered(&cov) && self.secure(set)).then_some(set);
        }
        if stop() {
            return None;
        }
        for e in self.next_range(next, left) {
            if let Some(found) = self.child(set, cov, e, left, nodes, stop) {
                return Some(found);
            }
        }
        None
    }

    fn child(
        &self,
        set: u64,
        cov: [u64; 2],
        e: usize,
        left: usize,
        nodes: &mut u64,
        stop: &dyn Fn() -> bool,
    ) -> Option<u64> {
        if self.forced_above(e) as usize > left - 1 {
            return None;
        }
        let mut c = cov;
        for (t, ct) in c.iter_mut().enumerate().take(self.covers.len()) {
            *ct |= self.covers[t][e];
            if (*ct | self.suffix[t][e + 1]) != self.full {
                return None;
            }
        }
        self.dfs(set | 1u64 << e, c, e + 1, left - 1, nodes, stop)
    }

    /// Searches size `k`; returns the first set and the nodes it took.
    fn level(&self, k: usize, parallel: bool) -> (Option<u64>, u64) {
        let never = || false;
        if !parallel || k == 0 {
            let mut nodes = 0;
            let found = self.dfs(0, [0; 2], 0, k, &mut nodes, &never);
            return (found, nodes);
        }
        let firsts: Vec<usize> = self.next_range(0, k).collect();
        let best = AtomicUsize::new(usize::MAX);
        let parts: Vec<(Option<u64>, u64)> = firsts
            .par_iter()
            .enumerate()
            .map(|(i, &e)| {
                let stop = || best.load(Ordering::Relaxed) < i;
                let mut nodes = 0;
                let found = self.child(0, [0; 2], e, k, &mut nodes, &stop);
                if found.is_some() {
                    best.fetch_min(i, Ordering::Relaxed);
                }
                (found, nodes)
            })
            .collect();
        // the root node, then every part up to and including the winner
        let mut nodes = 1;
        for (found, part) in parts {
            nodes += part;
            if found.is_some() {
                return (found, nodes);
            }
        }
        (None, nodes)
    }
}

fn check_order(d: &Digraph, cap: usize) -> Result<()> {
    let n = d.order();
    let cap = cap.min(MASK_LIMIT);
    if n > cap {
        return Err(Error::SizeCap { n, cap });
    }
    Ok(())
}

fn finish(
    d: &Digraph,
    kind: ParamKind,
    set: u64,
    nodes: u64,
    forced: VertexSet,
    lower_bound: usize,
) -> Result<SolveResult> {
    let witness = VertexSet::from_mask(d.order(), set);
    let verdict = verify::verify(d, &witness, kind.set_kind());
    if !verdict.valid {
        return Err(Error::Invariant(format!(
            "search returned {:?}, which fails {}",
            witness.to_one_based(),
            kind.set_kind()
        )));
    }
    Ok(SolveResult {
        kind,
        value: witness.len(),
        witness,
        defense: verdict.defense,
        nodes_explored: nodes,
        forced,
        lower_bound,
    })
}

/// Exact minimum with the lexicographically smallest witness.
pub fn solve_min(d: &Digraph, kind: ParamKind, config: &SolveConfig) -> Result<SolveResult> {
    check_order(d, config.size_cap)?;
    let forced = forced_vertices(d, kind);
    let lb = lower_bound(d, kind);
    let start = lb.max(forced.len());
    let kernel = Kernel::new(d, kind);
    let parallel = config.threads != 1 && d.order() >= PARALLEL_MIN_ORDER;
    let search = || -> Result<SolveResult> {
        let mut nodes = 0;
        for k in start..=d.order() {
            let (found, used) = kernel.level(k, parallel);
            nodes += used;
            if let Some(set) = found {
                return finish(d, kind, set, nodes, forced.clone(), start);
            }
        }
        Err(Error::Invariant(format!("no {} found", kind.set_kind())))
    };
    if parallel && config.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
        pool.install(search)
    } else {
        search()
    }
}

/// Plain enumeration by size then lexicographic order, using only the
/// definition-level verifiers.
pub fn brute_oracle(d: &Digraph, kind: ParamKind) -> Result<SolveResult> {
    let n = d.order();
    if n > ORACLE_CAP {
        return Err(Error::SizeCap { n, cap: ORACLE_CAP });
    }
    let sk = kind.set_kind();
    let closure;
    let target = if sk == SetKind::Sds {
        closure = d.symmetric_closure();
        &closure
    } else {
        d
    };
    let mut checked = 0u64;
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            checked += 1;
            let s = VertexSet::from_indices(n, combo.iter().copied())?;
            let verdict = verify::verify(target, &s, sk);
            if verdict.valid {
                return Ok(SolveResult {
                    kind,
                    value: k,
                    witness: s,
                    defense: verdict.defense,
                    nodes_explored: checked,
                    forced: forced_vertices(d, kind),
                    lower_bound: 0,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Err(Error::Invariant(format!("no {sk} exists")))
}

/// Advances to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every parameter, checked against the known ordering between them.
pub fn solve_all(d: &Digraph, config: &SolveConfig) -> Result<BTreeMap<ParamKind, SolveResult>> {
    let mut out = BTreeMap::new();
    for kind in ParamKind::ALL {
        out.insert(kind, solve_min(d, kind, config)?);
    }
    let values: BTreeMap<ParamKind, usize> = out.iter().map(|(&k, r)| (k, r.value)).collect();
    if let Some((a, b)) = chain_violation(&values, d.has_symmetric_arcs()) {
        return Err(Error::Invariant(format!(
            "{a} = {} exceeds {b} = {}",
            values[&a], values[&b]
        )));
    }
    Ok(out)
}

/// Pairs `(a, b)` with `a <= b` required between the parameters.
pub fn chain_pairs(has_symmetric_arcs: bool) -> Vec<(ParamKind, ParamKind)> {
    use ParamKind::*;
    let mut pairs = vec![
        (GammaS, GammaOs),
        (GammaS, GammaSo),
        (GammaPlus, GammaOs),
        (GammaPlus, GammaSo),
        (GammaSo, GammaOso),
        (GammaSo, GammaIso),
        (GammaOs, GammaOso),
    ];
    if !has_symmetric_arcs {
        pairs.push((GammaOs, GammaIso));
    }
    pairs
}

/// First violated pair of the ordering, if any.
pub fn chain_violation(
    values: &BTreeMap<ParamKind, usize>,
    has_symmetric_arcs: bool,
) -> Option<(ParamKind, ParamKind)> {
    chain_pairs(has_symmetric_arcs)
        .into_iter()
        .find(|(a, b)| match (values.get(a), values.get(b)) {
            (Some(x), Some(y)) => x > y,
            _ => false,
        })
}
