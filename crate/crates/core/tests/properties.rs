//! Cross-cutting invariants of the core types, checkers, and oracles.

use locopt_core::climb::{climb, Instance, ProblemKind, Solution};
use locopt_core::cnf::{Assignment, Clause, CnfFormula, Literal};
use locopt_core::graph::{Cut, Graph, Matching, MultiGraph, VertexSet};
use locopt_core::local;
use locopt_core::matching::{is_k_maximal_matching_fast, maximum_matching};
use locopt_core::oracle::{self, raw};

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    })
}

fn arb_formula(max_vars: usize) -> impl Strategy<Value = CnfFormula> {
    (2..=max_vars, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = StdRng::seed_from_u64(seed);
        let clause_count = rng.gen_range(1..=2 * n);
        let clauses = (0..clause_count)
            .map(|_| {
                let width = rng.gen_range(1..=3.min(n));
                let mut vars: Vec<usize> = (0..n).collect();
                for i in 0..width {
                    let j = rng.gen_range(i..n);
                    vars.swap(i, j);
                }
                Clause::new(vars[..width].iter().map(|&v| {
                    if rng.gen_bool(0.5) {
                        Literal::positive(v)
                    } else {
                        Literal::negative(v)
                    }
                }))
                .unwrap()
            })
            .collect();
        CnfFormula::new(n, clauses).unwrap()
    })
}

proptest! {
    #[test]
    fn independence_cover_clique_trilogy(g in arb_graph(9), code in any::<u32>()) {
        let n = g.vertex_count();
        let s = VertexSet::new((0..n).filter(|&v| code >> v & 1 == 1));
        let independent = g.is_independent_set(&s).unwrap();
        prop_assert_eq!(independent, g.is_vertex_cover(&s.complement(n)).unwrap());
        prop_assert_eq!(independent, g.complement().is_clique(&s).unwrap());
    }

    #[test]
    fn complement_is_involutive(g in arb_graph(10)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn cut_weight_flip_invariant(g in arb_graph(9), code in any::<u32>()) {
        let mg = MultiGraph::from_graph(&g);
        let sides: Vec<bool> = (0..g.vertex_count()).map(|v| code >> v & 1 == 1).collect();
        let cut = Cut::ordered(sides);
        prop_assert_eq!(mg.cut_weight(&cut).unwrap(), mg.cut_weight(&cut.flipped()).unwrap());
    }

    #[test]
    fn deltas_match_recomputation(f in arb_formula(7), code in any::<u64>(), x in 0usize..7) {
        let x = x % f.num_vars();
        let a = Assignment::from_bits(f.num_vars(), code & ((1 << f.num_vars()) - 1));
        let flipped = a.flip(x);
        let sat = f.count_satisfied(&flipped).unwrap() as i64
            - f.count_satisfied(&a).unwrap() as i64;
        prop_assert_eq!(f.sat_delta(&a, x).unwrap(), sat);
        let nae = f.count_nae_satisfied(&flipped).unwrap() as i64
            - f.count_nae_satisfied(&a).unwrap() as i64;
        prop_assert_eq!(f.nae_delta(&a, x).unwrap(), nae);
    }

    #[test]
    fn nae_counts_are_complement_symmetric(f in arb_formula(7), code in any::<u64>()) {
        let a = Assignment::from_bits(f.num_vars(), code & ((1 << f.num_vars()) - 1));
        let nae = f.count_nae_satisfied(&a).unwrap();
        prop_assert!(nae <= f.count_satisfied(&a).unwrap());
        prop_assert_eq!(nae, f.count_nae_satisfied(&a.complement()).unwrap());
        prop_assert_eq!(
            local::find_nae_flip(&f, &a).unwrap().is_none(),
            local::find_nae_flip(&f, &a.complement()).unwrap().is_none()
        );
    }

    #[test]
    fn climbs_reach_checker_optima(g in arb_graph(10), k in 1usize..=3) {
        let instance = Instance::Graph(g.clone());
        for problem in [
            ProblemKind::IndependentSet,
            ProblemKind::Clique,
            ProblemKind::VertexCover,
            ProblemKind::DominatingSet,
            ProblemKind::FeedbackVertexSet,
            ProblemKind::Matching,
        ] {
            let report = climb(problem, &instance, k, None, true).unwrap();
            prop_assert!(report.steps <= g.vertex_count());
            prop_assert_eq!(report.steps, report.trace.as_ref().unwrap().len());
        }
    }

    #[test]
    fn matching_characterization_agrees_with_checker(
        g in arb_graph(9),
        seed in any::<u64>(),
        k in 1usize..=3,
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        // A random matching: random greedy over a shuffled edge list.
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        for i in (1..edges.len()).rev() {
            edges.swap(i, rng.gen_range(0..=i));
        }
        let mut covered = vec![false; g.vertex_count()];
        let mut picked = Vec::new();
        for (u, v) in edges {
            if !covered[u] && !covered[v] && rng.gen_bool(0.7) {
                covered[u] = true;
                covered[v] = true;
                picked.push((u, v));
            }
        }
        let m = Matching::new(picked).unwrap();
        let fast = is_k_maximal_matching_fast(&g, &m, k).unwrap();
        let definition = local::find_matching_improvement(&g, &m, k).unwrap().is_none();
        prop_assert_eq!(fast, definition);
    }
}

/// The surplus-one restriction in the checkers and the oracle filters
/// is equivalent to the literal any-surplus definitions: verified
/// exhaustively on all graphs with up to 4 vertices and on seeded
/// random graphs with 5 and 6 vertices, for k up to 3.
#[test]
fn surplus_one_swaps_suffice() {
    let mut graphs = Vec::new();
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for code in 0..1u32 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| code >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            graphs.push(Graph::new(n, &edges).unwrap());
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..240 {
        let n = rng.gen_range(5..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.45) {
                    edges.push((u, v));
                }
            }
        }
        graphs.push(Graph::new(n, &edges).unwrap());
    }

    for g in &graphs {
        let n = g.vertex_count();
        for code in 0..1u32 << n {
            let s = VertexSet::new((0..n).filter(|&v| code >> v & 1 == 1));
            for k in 1..=3 {
                check_agreement(g, &s, k);
            }
        }
    }
}

fn check_agreement(g: &Graph, s: &VertexSet, k: usize) {
    if g.is_independent_set(s).unwrap() {
        let restricted = raw::is_k_maximal_independent_set(g, s, k).unwrap();
        assert_eq!(restricted, raw::is_k_maximal_independent_set_all_sizes(g, s, k).unwrap());
        assert_eq!(restricted, local::find_is_improvement(g, s, k).unwrap().is_none());
    }
    if g.is_clique(s).unwrap() {
        let restricted = raw::is_k_maximal_clique(g, s, k).unwrap();
        assert_eq!(restricted, raw::is_k_maximal_clique_all_sizes(g, s, k).unwrap());
        assert_eq!(restricted, local::find_clique_improvement(g, s, k).unwrap().is_none());
    }
    if g.is_vertex_cover(s).unwrap() {
        let restricted = raw::is_k_minimal_vertex_cover(g, s, k).unwrap();
        assert_eq!(restricted, raw::is_k_minimal_vertex_cover_all_sizes(g, s, k).unwrap());
        assert_eq!(restricted, local::find_vc_improvement(g, s, k).unwrap().is_none());
    }
    if g.is_dominating_set(s).unwrap() {
        let restricted = raw::is_k_minimal_dominating_set(g, s, k).unwrap();
        assert_eq!(restricted, raw::is_k_minimal_dominating_set_all_sizes(g, s, k).unwrap());
        assert_eq!(restricted, local::find_ds_improvement(g, s, k).unwrap().is_none());
    }
    if g.is_feedback_vertex_set(s).unwrap() {
        let restricted = raw::is_k_minimal_feedback_vertex_set(g, s, k).unwrap();
        assert_eq!(
            restricted,
            raw::is_k_minimal_feedback_vertex_set_all_sizes(g, s, k).unwrap()
        );
        assert_eq!(restricted, local::find_fvs_improvement(g, s, k).unwrap().is_none());
    }
}

/// Matching swaps: surplus-one agreement on all matchings of small
/// random graphs.
#[test]
fn matching_surplus_one_swaps_suffice() {
    let mut rng = StdRng::seed_from_u64(0xabcd);
    for _ in 0..150 {
        let n = rng.gen_range(2..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let all: Vec<(usize, usize)> = g.edges().collect();
        for code in 0..1u32 << all.len() {
            let picked: Vec<_> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| code >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let m = Matching::new(picked).unwrap();
            if !g.is_matching(&m).unwrap() {
                continue;
            }
            for k in 1..=3 {
                let restricted = raw::is_k_maximal_matching(&g, &m, k).unwrap();
                assert_eq!(restricted, raw::is_k_maximal_matching_all_sizes(&g, &m, k).unwrap());
                assert_eq!(
                    restricted,
                    local::find_matching_improvement(&g, &m, k).unwrap().is_none()
                );
            }
        }
    }
}

/// Oracle membership agrees with the checkers: everything enumerated
/// passes, everything feasible but absent fails.
#[test]
fn oracle_agrees_with_checkers_on_small_graphs() {
    let mut rng = StdRng::seed_from_u64(42);
    for _ in 0..60 {
        let n = rng.gen_range(1..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let instance = Instance::Graph(g.clone());
        for k in 1..=2 {
            for problem in [
                ProblemKind::IndependentSet,
                ProblemKind::VertexCover,
                ProblemKind::DominatingSet,
                ProblemKind::FeedbackVertexSet,
            ] {
                let list = oracle::enumerate_local_optima(problem, &instance, k, None).unwrap();
                for code in 0..1u32 << n {
                    let s = VertexSet::new((0..n).filter(|&v| code >> v & 1 == 1));
                    let checker_none = match problem {
                        ProblemKind::IndependentSet => g
                            .is_independent_set(&s)
                            .unwrap()
                            .then(|| local::find_is_improvement(&g, &s, k).unwrap().is_none()),
                        ProblemKind::VertexCover => g
                            .is_vertex_cover(&s)
                            .unwrap()
                            .then(|| local::find_vc_improvement(&g, &s, k).unwrap().is_none()),
                        ProblemKind::DominatingSet => g
                            .is_dominating_set(&s)
                            .unwrap()
                            .then(|| local::find_ds_improvement(&g, &s, k).unwrap().is_none()),
                        ProblemKind::FeedbackVertexSet => {
                            g.is_feedback_vertex_set(&s).unwrap().then(|| {
                                local::find_fvs_improvement(&g, &s, k).unwrap().is_none()
                            })
                        }
                        _ => unreachable!(),
                    };
                    let optimal = checker_none == Some(true);
                    assert_eq!(
                        optimal,
                        list.contains(&Solution::Vertices(s.clone())),
                        "{problem} k={k} disagreement on {s:?} in {g:?}"
                    );
                }
            }
        }
    }
}

/// The independent-set solution family transports through complements:
/// k-maximal independent sets = complements of k-minimal vertex covers
/// = k-maximal cliques of the complement graph.
#[test]
fn oracle_families_are_complement_consistent() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..40 {
        let n = rng.gen_range(1..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        for k in 1..=3 {
            let is_list = oracle::enumerate_local_optima(
                ProblemKind::IndependentSet,
                &Instance::Graph(g.clone()),
                k,
                None,
            )
            .unwrap();
            let vc_list = oracle::enumerate_local_optima(
                ProblemKind::VertexCover,
                &Instance::Graph(g.clone()),
                k,
                None,
            )
            .unwrap();
            let clique_list = oracle::enumerate_local_optima(
                ProblemKind::Clique,
                &Instance::Graph(g.complement()),
                k,
                None,
            )
            .unwrap();
            let from_vc: Vec<VertexSet> =
                vc_list.vertex_sets().map(|s| s.complement(n)).collect();
            let mut from_vc = from_vc;
            from_vc.sort();
            let is_sets: Vec<VertexSet> = is_list.vertex_sets().cloned().collect();
            assert_eq!(is_sets, from_vc);
            let clique_sets: Vec<VertexSet> = clique_list.vertex_sets().cloned().collect();
            assert_eq!(is_sets, clique_sets);
        }
    }
}

/// NAE-unflippable assignment lists are closed under complementation.
#[test]
fn nae_optima_closed_under_complement() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..40 {
        let n = rng.gen_range(2..=5);
        let clauses: Vec<Clause> = (0..rng.gen_range(1..=6))
            .map(|_| {
                let width = rng.gen_range(2..=3.min(n));
                let mut vars: Vec<usize> = (0..n).collect();
                for i in 0..width {
                    let j = rng.gen_range(i..n);
                    vars.swap(i, j);
                }
                Clause::positive(vars[..width].iter().copied()).unwrap()
            })
            .collect();
        let f = CnfFormula::new(n, clauses).unwrap();
        let list = oracle::enumerate_local_optima(
            ProblemKind::MaxNaeSat,
            &Instance::Formula(f),
            1,
            None,
        )
        .unwrap();
        for s in &list.solutions {
            let Solution::Assignment(a) = s else { panic!() };
            assert!(list.contains(&Solution::Assignment(a.complement())));
        }
    }
}

/// Symmetric differences of matchings of different sizes contain an
/// augmenting path for the smaller one.
#[test]
fn symmetric_difference_contains_augmenting_path() {
    let mut rng = StdRng::seed_from_u64(0xfeed);
    for _ in 0..200 {
        let n = rng.gen_range(2..=9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let big = maximum_matching(&g);
        // A random strictly smaller matching.
        let mut covered = vec![false; n];
        let mut small = Vec::new();
        for &(u, v) in &edges {
            if small.len() + 1 >= big.len() {
                break;
            }
            if !covered[u] && !covered[v] && rng.gen_bool(0.5) {
                covered[u] = true;
                covered[v] = true;
                small.push((u, v));
            }
        }
        let small = Matching::new(small).unwrap();
        if small.len() >= big.len() {
            continue;
        }
        // An augmenting path for `small` inside the symmetric
        // difference has at most |small| + |big| edges.
        let bound = 2 * (small.len() + big.len()) + 1;
        let path = locopt_core::matching::find_augmenting_path_upto(&g, &small, bound).unwrap();
        assert!(path.is_some(), "smaller matching must admit an augmenting path");
    }
}
