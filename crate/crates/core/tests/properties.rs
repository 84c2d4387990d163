use proptest::prelude::*;

use secdom::bounds;
use secdom::constructions::{self, RecipeSource};
use secdom::family::{self, FamilyParams};
use secdom::io;
use secdom::orient::{self, UndirectedGraph};
use secdom::rng::SeededRng;
use secdom::solver::{self, SolveConfig};
use secdom::verify::{self, CharForm};
use secdom::{Digraph, ParamKind, SetKind, VertexSet};

fn build(n: usize, digits: &[u8]) -> Digraph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let mut arcs = Vec::new();
    for ((u, v), &d) in pairs.zip(digits) {
        if d & 1 == 1 {
            arcs.push((u, v));
        }
        if d & 2 == 2 {
            arcs.push((v, u));
        }
    }
    Digraph::new(n, arcs).unwrap()
}

/// Digraph on 1..=max vertices, each pair drawn from none / one way / other
/// way / both.
fn digraph(max: usize) -> impl Strategy<Value = Digraph> {
    (1..=max)
        .prop_flat_map(|n| proptest::collection::vec(0u8..4, n * (n - 1) / 2).prop_map(move |digits| build(n, &digits)))
}

fn oriented(max: usize) -> impl Strategy<Value = Digraph> {
    (1..=max)
        .prop_flat_map(|n| proptest::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |digits| build(n, &digits)))
}

fn with_set(d: impl Strategy<Value = Digraph>) -> impl Strategy<Value = (Digraph, VertexSet)> {
    d.prop_flat_map(|d| {
        let n = d.order();
        (Just(d), 0u64..1 << n).prop_map(move |(d, mask)| (d, VertexSet::from_mask(n, mask)))
    })
}

fn cfg() -> SolveConfig {
    SolveConfig::default()
}

const SECURE_SETS: [SetKind; 5] = [
    SetKind::Sds,
    SetKind::Sods,
    SetKind::Osds,
    SetKind::Osods,
    SetKind::Isods,
];

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn reversal_and_closure(d in digraph(9)) {
        prop_assert_eq!(d.reverse().reverse(), d.clone());
        prop_assert_eq!(d.symmetric_closure(), d.reverse().symmetric_closure());
        prop_assert!(d.symmetric_closure().is_symmetric());
    }

    #[test]
    fn degree_sums(d in digraph(9)) {
        let mut outs = 0;
        let mut ins = 0;
        for v in 0..d.order() {
            prop_assert_eq!(d.out_degree(v), d.out_neighbors(v).len());
            prop_assert_eq!(d.in_degree(v), d.in_neighbors(v).len());
            outs += d.out_degree(v);
            ins += d.in_degree(v);
        }
        prop_assert_eq!(outs, d.arc_count());
        prop_assert_eq!(ins, d.arc_count());
    }

    #[test]
    fn text_round_trip(d in digraph(9)) {
        let text = io::serialize_digraph(&d);
        let back = io::parse_digraph(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(io::serialize_digraph(&back), text);
    }

    #[test]
    fn random_tournaments_are_tournaments(n in 1usize..20, seed in any::<u64>()) {
        let t = family::random_tournament(n, &mut SeededRng::new(seed)).unwrap();
        prop_assert_eq!(t.arc_count(), n * (n - 1) / 2);
        prop_assert!(!t.has_symmetric_arcs());
        prop_assert!(t.is_tournament());
    }

    #[test]
    fn generation_is_seeded(n in 1usize..12, seed in any::<u64>()) {
        let params = FamilyParams { seed: Some(seed), arc_prob: 0.4, allow_symmetric: true };
        let a = family::gen_family(family::Family::RandomDigraph, n, &params).unwrap();
        let b = family::gen_family(family::Family::RandomDigraph, n, &params).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn solver_matches_oracle(d in digraph(7)) {
        for kind in ParamKind::ALL {
            let fast = solver::solve_min(&d, kind, &cfg()).unwrap();
            let slow = solver::brute_oracle(&d, kind).unwrap();
            prop_assert_eq!(fast.value, slow.value, "{}", kind);
            prop_assert_eq!(&fast.witness, &slow.witness, "{}", kind);
            prop_assert!(verify::is_set(&d, &fast.witness, kind.set_kind()));
        }
    }

    #[test]
    fn thread_count_is_invisible(d in digraph(14)) {
        for kind in [ParamKind::GammaOso, ParamKind::GammaS, ParamKind::GammaIso] {
            let one = solver::solve_min(&d, kind, &SolveConfig { threads: 1, ..cfg() }).unwrap();
            let many = solver::solve_min(&d, kind, &SolveConfig { threads: 4, ..cfg() }).unwrap();
            prop_assert_eq!(one.value, many.value);
            prop_assert_eq!(one.witness, many.witness);
            prop_assert_eq!(one.nodes_explored, many.nodes_explored);
        }
    }

    #[test]
    fn reversal_duality(d in digraph(9)) {
        let minus = solver::solve_min(&d, ParamKind::GammaMinus, &cfg()).unwrap().value;
        let plus = solver::solve_min(&d.reverse(), ParamKind::GammaPlus, &cfg()).unwrap().value;
        prop_assert_eq!(minus, plus);
    }

    #[test]
    fn arc_deletion_never_helps(d in digraph(8), pick in any::<prop::sample::Index>()) {
        let arcs: Vec<_> = d.arcs().collect();
        prop_assume!(!arcs.is_empty());
        let (u, v) = arcs[pick.index(arcs.len())];
        let smaller = d.without_arc(u, v);
        for kind in [ParamKind::GammaSo, ParamKind::GammaOs, ParamKind::GammaOso, ParamKind::GammaIso] {
            let before = solver::solve_min(&d, kind, &cfg()).unwrap().value;
            let after = solver::solve_min(&smaller, kind, &cfg()).unwrap().value;
            prop_assert!(after >= before, "{} went from {} to {}", kind, before, after);
        }
    }

    #[test]
    fn secure_sets_survive_added_arcs((d, s) in with_set(digraph(7)), u in 0usize..7, v in 0usize..7) {
        let n = d.order();
        prop_assume!(u < n && v < n && u != v);
        let bigger = d.with_arc(u, v).unwrap();
        for kind in SECURE_SETS {
            if verify::is_set(&d, &s, kind) {
                prop_assert!(verify::is_set(&bigger, &s, kind), "{}", kind);
            }
        }
    }

    #[test]
    fn symmetric_kinds_agree((d, s) in with_set(digraph(7))) {
        let sym = d.symmetric_closure();
        let verdicts: Vec<bool> = SECURE_SETS.iter().map(|&k| verify::is_set(&sym, &s, k)).collect();
        prop_assert!(verdicts.iter().all(|&x| x == verdicts[0]), "{:?}", verdicts);
    }

    #[test]
    fn all_but_one_vertex(d in digraph(8)) {
        let n = d.order();
        for w in 0..n {
            let (Some(x), Some(y)) = (d.in_neighbors(w).first(), d.out_neighbors(w).first()) else { continue };
            prop_assume!(x != w && y != w);
            let mut no_y = VertexSet::full(n);
            no_y.remove(y);
            let mut no_w = VertexSet::full(n);
            no_w.remove(w);
            prop_assert!(verify::is_set(&d, &no_y, SetKind::Osods));
            prop_assert!(verify::is_set(&d, &no_w, SetKind::Isods));
        }
    }

    #[test]
    fn characterizations_are_sufficient((d, s) in with_set(digraph(8))) {
        for form in CharForm::ALL {
            if !verify::is_set(&d, &s, form.kind().base()) {
                continue;
            }
            for u in s.iter() {
                for v in (0..d.order()).filter(|&v| !s.contains(v) && form.adjacency_holds(&d, u, v)) {
                    if verify::char_defense(&d, &s, u, v, form).unwrap() {
                        prop_assert!(verify::defends(&d, &s, u, v, form.kind()).unwrap(), "{:?}", form);
                    }
                }
            }
        }
    }

    #[test]
    fn corollary_matches_verifier((d, s) in with_set(oriented(8))) {
        for kind in [SetKind::Osods, SetKind::Sods, SetKind::Isods] {
            prop_assert_eq!(verify::corollary_check(&d, &s, kind).unwrap(), verify::is_set(&d, &s, kind), "{}", kind);
        }
    }

    #[test]
    fn chain_holds(d in digraph(8)) {
        let all = solver::solve_all(&d, &cfg()).unwrap();
        let values = all.iter().map(|(&k, r)| (k, r.value)).collect();
        prop_assert!(solver::chain_violation(&values, d.has_symmetric_arcs()).is_none());
    }

    #[test]
    fn catalogue_holds(d in digraph(8)) {
        let report = bounds::check_catalogue(&d, &cfg()).unwrap();
        prop_assert_eq!(report.violations().count(), 0);
    }

    #[test]
    fn greedy_halves(n in 1usize..40, seed in any::<u64>()) {
        let t = family::random_tournament(n, &mut SeededRng::new(seed)).unwrap();
        let trace = constructions::tournament_greedy_trace(&t).unwrap();
        let mut m = n;
        for &left in &trace.remaining {
            prop_assert!(left <= (m - 1).div_ceil(2), "{} left from {}", left, m);
            m = left;
        }
        prop_assert_eq!(m, 0);
        prop_assert!(verify::is_set(&t, &trace.set, SetKind::OutDominating));
    }

    #[test]
    fn hamiltonian_path_osods(n in 2usize..40, seed in any::<u64>()) {
        let t = family::random_tournament(n, &mut SeededRng::new(seed)).unwrap();
        let path = constructions::tournament_hamiltonian_path(&t).unwrap();
        prop_assert_eq!(path.len(), n);
        prop_assert!(path.windows(2).all(|w| t.has_arc(w[0], w[1])));
        let s = constructions::tournament_osods_via_hampath(&t).unwrap();
        prop_assert!(verify::is_set(&t, &s, SetKind::Osods));
        prop_assert!(s.len() <= (2 * n).div_ceil(3));
    }

    #[test]
    fn orientations_sit_above_undirected(idx in 0u64..1 << 10, n in 2usize..6) {
        let g = UndirectedGraph::from_index(n, idx & ((1 << (n * (n - 1) / 2)) - 1));
        prop_assume!(g.edges().len() <= 6);
        let floor = solver::solve_min(&g.to_symmetric_digraph(), ParamKind::GammaS, &cfg()).unwrap().value;
        for kind in ParamKind::SECURE {
            if kind == ParamKind::GammaS {
                continue;
            }
            let range = orient::spectrum(&g, kind, &cfg()).unwrap();
            prop_assert!(range.dom >= floor, "{} dips to {} below {}", kind, range.dom, floor);
        }
    }
}

#[test]
fn spider_degrees() {
    for k in 1..=8 {
        let d = family::spider(k).unwrap();
        let stats = d.degree_stats();
        assert_eq!(stats.max_out, 1);
        assert_eq!(d.in_degree(0), k);
        assert_eq!(d.order(), 2 * k + 1);
    }
}

#[test]
fn recipes_match_closed_forms() {
    let kinds = [
        ParamKind::GammaPlus,
        ParamKind::GammaOs,
        ParamKind::GammaSo,
        ParamKind::GammaOso,
        ParamKind::GammaIso,
    ];
    for kind in kinds {
        for n in 1..=30 {
            let r = constructions::path_witness(kind, n).unwrap();
            let d = family::dipath(n).unwrap();
            assert_eq!(
                r.set.len(),
                constructions::closed_form(kind, n).unwrap(),
                "{kind} path {n}"
            );
            assert!(verify::is_set(&d, &r.set, kind.set_kind()), "{kind} path {n}");
        }
        for n in 3..=30 {
            let r = constructions::cycle_witness(kind, n).unwrap();
            let d = family::dicycle(n).unwrap();
            assert_eq!(r.source, RecipeSource::Pattern, "{kind} cycle {n}");
            assert_eq!(
                r.set.len(),
                constructions::closed_form(kind, n).unwrap(),
                "{kind} cycle {n}"
            );
            assert!(verify::is_set(&d, &r.set, kind.set_kind()), "{kind} cycle {n}");
        }
    }
}

#[test]
fn equals_n_exactly_on_sources_and_sinks() {
    for n in 1..=4 {
        for d in family::all_digraphs(n, true) {
            let flat = bounds::equals_n_characterization(&d);
            for kind in [ParamKind::GammaOso, ParamKind::GammaSo, ParamKind::GammaIso] {
                let v = solver::solve_min(&d, kind, &cfg()).unwrap().value;
                assert_eq!(v == n, flat, "{kind}\n{}", io::serialize_digraph(&d));
            }
        }
    }
}

#[test]
fn os_n_minus_one_only_on_triangle_or_star() {
    let mut hits = 0;
    for n in 2..=6 {
        for d in bounds::random_corpus(n, 300, 0x05_0000 + n as u64).unwrap() {
            if !d.is_weakly_connected() {
                continue;
            }
            let v = solver::solve_min(&d, ParamKind::GammaOs, &cfg()).unwrap().value;
            let shape = bounds::is_directed_triangle(&d) || bounds::underlying_is_star(&d);
            assert_eq!(v == n - 1, shape, "{}", io::serialize_digraph(&d));
            hits += usize::from(shape);
        }
    }
    assert!(hits > 0);
}

#[test]
fn four_vertex_corpus_with_min_degree_one() {
    let count = family::all_digraphs(4, true)
        .filter(|d| {
            let s = d.degree_stats();
            s.min_out.min(s.min_in) >= 1
        })
        .count();
    assert_eq!(count, 1699);
}
