//! The property suites.
//!
//! Suites verify what each construction actually guarantees, on random
//! instances small enough for the exhaustive oracles. The failure
//! strings embed the offending instance in its file format together
//! with the offending solution, so every report is replayable.

use locopt_core::climb::{Instance, ProblemKind, Solution};
use locopt_core::cnf::Assignment;
use locopt_core::graph::{Graph, Matching, VertexSet};
use locopt_core::local;
use locopt_core::matching::{
    is_k_maximal_matching_fast, maximum_matching, second_maximum_matching,
    two_k_maximal_matchings,
};
use locopt_core::oracle::{
    self, enumerate_local_optima, enumerate_local_optima_with, enumerate_stable_cuts, raw,
    solve_mise, EnumerationBudget,
};
use locopt_core::reduce::{
    build_dom_fvs_graph, build_h, build_maxcut, build_naesat, build_2sat, positivize,
    HGadgetMap, MiseInstance,
};

use rand::Rng;

use super::{run_trials, Scale, SuiteReport};
use crate::gen;
use crate::io;

pub(super) type SuiteFn = fn(&Scale) -> SuiteReport;

pub(super) const REGISTRY: &[(&str, SuiteFn)] = &[
    ("two-maximal-witness", two_maximal_witness),
    ("h-b-side", h_b_side),
    ("h-a-side", h_a_side),
    ("h-four-cycles", h_four_cycles),
    ("h-unique-a", h_unique_a),
    ("h-lift", h_lift),
    ("h-project", h_project),
    ("blowup", blowup_suite),
    ("dom-reduction", dom_reduction),
    ("fvs-reduction", fvs_reduction),
    ("matching-char", matching_char),
    ("matching-almost-max", matching_almost_max),
    ("two-matchings", two_matchings_suite),
    ("nae-type1", nae_type1),
    ("nae-type2", nae_type2),
    ("positivize", positivize_suite),
    ("cut-bijection", cut_bijection),
    ("maxcut-threshold", maxcut_threshold),
    ("two-sat", two_sat),
];

/// Budget that admits the gadget graphs built from suite-scale sources
/// (the maximal-set enumeration is output-sensitive, not `2^n`).
fn gadget_budget() -> EnumerationBudget {
    EnumerationBudget { max_vertices: 64, max_edges: 64, max_variables: 24 }
}

fn fail(context: &str, artifacts: &[(&str, String)]) -> String {
    let mut out = String::from(context);
    for (name, body) in artifacts {
        out.push_str(&format!("\n--- {name} ---\n{body}"));
    }
    out
}

fn two_max_sets_of(h: &Graph) -> Result<Vec<VertexSet>, String> {
    let list = enumerate_local_optima_with(
        ProblemKind::IndependentSet,
        &Instance::Graph(h.clone()),
        2,
        None,
        &gadget_budget(),
    )
    .map_err(|e| e.to_string())?;
    Ok(list.vertex_sets().cloned().collect())
}

fn random_mise(scale: &Scale, seed: u64) -> Result<MiseInstance, String> {
    let mut rng = gen::rng_from_seed(seed);
    let n = rng.gen_range(2..=scale.max_n.max(2));
    let forbidden = rng.gen_range(0..=(n / 2).min(2));
    gen::mise_instance(n, 0.5, forbidden, &mut rng).map_err(|e| e.to_string())
}

/// Maximal independent sets of the source graph avoiding the forbidden
/// set (exactly the solutions of the extension instance).
fn extension_solutions(inst: &MiseInstance) -> Result<Vec<VertexSet>, String> {
    let list = enumerate_local_optima(
        ProblemKind::IndependentSet,
        &Instance::Graph(inst.graph().clone()),
        1,
        None,
    )
    .map_err(|e| e.to_string())?;
    Ok(list
        .vertex_sets()
        .filter(|d| d.is_disjoint(inst.forbidden()))
        .cloned()
        .collect())
}

/// Improvements of maximal-but-not-2-maximal independent sets have the
/// single-vertex-out, two-neighbors-in shape.
fn two_maximal_witness(scale: &Scale) -> SuiteReport {
    run_trials("two-maximal-witness", scale, |seed| {
        let mut rng = gen::rng_from_seed(seed);
        let n = rng.gen_range(1..=scale.max_n.max(1));
        let g = gen::gnp(n, 0.45, &mut rng);
        let maximal = enumerate_local_optima(
            ProblemKind::IndependentSet,
            &Instance::Graph(g.clone()),
            1,
            None,
        )
        .map_err(|e| e.to_string())?;
        for s in maximal.vertex_sets() {
            let Some(mv) = local::find_is_improvement(&g, s, 2).map_err(|e| e.to_string())?
            else {
                continue;
            };
            let ok = mv.remove.len() == 1
                && mv.add.len() == 2
                && mv.add.iter().all(|&u| g.has_edge(mv.remove[0], u))
                && g.is_independent_set(&s.apply_swap(&mv.remove, &mv.add))
                    .unwrap_or(false);
            if !ok {
                return Err(fail(
                    &format!("witness {mv:?} for {s:?} lacks the out-vertex/two-neighbor shape"),
                    &[("graph", io::write_graph(&g))],
                ));
            }
        }
        Ok(())
    })
}

fn h_structural(
    name: &'static str,
    scale: &Scale,
    check: fn(&Graph, &HGadgetMap, &VertexSet) -> Result<(), String>,
) -> SuiteReport {
    run_trials(name, scale, move |seed| {
        let inst = random_mise(scale, seed)?;
        let (h, map) = build_h(&inst).map_err(|e| e.to_string())?;
        for s in two_max_sets_of(&h)? {
            check(&h, &map, &s).map_err(|detail| {
                fail(&detail, &[
                    ("source graph", io::write_graph(inst.graph())),
                    ("forbidden", io::write_vertex_set(inst.forbidden())),
                    ("solution", io::write_vertex_set(&s)),
                ])
            })?;
        }
        Ok(())
    })
}

/// Solutions containing b also contain b' and avoid the forbidden and
/// z-vertices.
fn h_b_side(scale: &Scale) -> SuiteReport {
    h_structural("h-b-side", scale, |_, map, s| {
        if !s.contains(map.b) {
            return Ok(());
        }
        if !s.contains(map.b_prime) {
            return Err("b in solution but b' missing".into());
        }
        if map.x.iter().any(|&x| s.contains(x)) {
            return Err("b-side solution meets the forbidden set".into());
        }
        if map.z.iter().chain(&map.z_prime).any(|&z| s.contains(z)) {
            return Err("b-side solution meets the z-vertices".into());
        }
        Ok(())
    })
}

/// Solutions without b contain the apex triple plus the forbidden and
/// z-vertices and avoid all of Y.
fn h_a_side(scale: &Scale) -> SuiteReport {
    h_structural("h-a-side", scale, |_, map, s| {
        if s.contains(map.b) {
            return Ok(());
        }
        for v in [map.a, map.c, map.c_prime] {
            if !s.contains(v) {
                return Err("apex triple incomplete on the a-side".into());
            }
        }
        if map.y.iter().any(|&y| s.contains(y)) {
            return Err("a-side solution meets Y".into());
        }
        let all_in = map.x.iter().chain(&map.z).chain(&map.z_prime).all(|&v| s.contains(v));
        if !all_in {
            return Err("a-side solution misses a forbidden or z vertex".into());
        }
        Ok(())
    })
}

/// Every attached 4-cycle contributes one of its two diagonals.
fn h_four_cycles(scale: &Scale) -> SuiteReport {
    h_structural("h-four-cycles", scale, |_, map, s| {
        for i in 0..map.y.len() {
            let y_diag = s.contains(map.y[i]) && s.contains(map.y_prime[i]);
            let c_diag = s.contains(map.c_i[i]) && s.contains(map.c_i_prime[i]);
            if !y_diag && !c_diag {
                return Err(format!("gadget {i} contributes neither diagonal"));
            }
        }
        Ok(())
    })
}

/// The canonical solution is 2-maximal and is the only solution
/// containing the apex.
fn h_unique_a(scale: &Scale) -> SuiteReport {
    run_trials("h-unique-a", scale, |seed| {
        let inst = random_mise(scale, seed)?;
        let (h, map) = build_h(&inst).map_err(|e| e.to_string())?;
        let canonical = map.canonical_solution();
        if local::find_is_improvement(&h, &canonical, 2)
            .map_err(|e| e.to_string())?
            .is_some()
        {
            return Err(fail("canonical solution is improvable", &[
                ("source graph", io::write_graph(inst.graph())),
                ("forbidden", io::write_vertex_set(inst.forbidden())),
            ]));
        }
        let with_apex: Vec<VertexSet> = two_max_sets_of(&h)?
            .into_iter()
            .filter(|s| s.contains(map.a))
            .collect();
        if with_apex != vec![canonical] {
            return Err(fail(
                &format!("{} solutions contain the apex", with_apex.len()),
                &[("source graph", io::write_graph(inst.graph()))],
            ));
        }
        Ok(())
    })
}

/// Lifting any extension solution yields a 2-maximal independent set.
fn h_lift(scale: &Scale) -> SuiteReport {
    run_trials("h-lift", scale, |seed| {
        let inst = random_mise(scale, seed)?;
        let (h, map) = build_h(&inst).map_err(|e| e.to_string())?;
        for d in extension_solutions(&inst)? {
            let lifted = map.lift(&d).map_err(|e| e.to_string())?;
            if local::find_is_improvement(&h, &lifted, 2)
                .map_err(|e| e.to_string())?
                .is_some()
            {
                return Err(fail("lift is not 2-maximal", &[
                    ("source graph", io::write_graph(inst.graph())),
                    ("forbidden", io::write_vertex_set(inst.forbidden())),
                    ("extension solution", io::write_vertex_set(&d)),
                ]));
            }
        }
        Ok(())
    })
}

/// Projection of every non-canonical solution solves the extension
/// instance; the repair swaps preserve 2-maximality step by step; and
/// the built graph has a second solution exactly when the extension
/// instance is solvable.
fn h_project(scale: &Scale) -> SuiteReport {
    run_trials("h-project", scale, |seed| {
        let inst = random_mise(scale, seed)?;
        let g = inst.graph();
        let (h, map) = build_h(&inst).map_err(|e| e.to_string())?;
        let solutions = two_max_sets_of(&h)?;
        let solvable = solve_mise(g, inst.forbidden()).map_err(|e| e.to_string())?.is_some();
        if (solutions.len() >= 2) != solvable {
            return Err(fail(
                &format!("{} solutions but solvable = {solvable}", solutions.len()),
                &[
                    ("source graph", io::write_graph(g)),
                    ("forbidden", io::write_vertex_set(inst.forbidden())),
                ],
            ));
        }
        let canonical = map.canonical_solution();
        for s in solutions.iter().filter(|s| **s != canonical) {
            let projection = map.project(&h, s).map_err(|e| e.to_string())?;
            let artifacts = [
                ("source graph", io::write_graph(g)),
                ("forbidden", io::write_vertex_set(inst.forbidden())),
                ("solution", io::write_vertex_set(s)),
            ];
            let d = &projection.solution;
            let valid = g.is_independent_set(d).unwrap_or(false)
                && local::find_is_improvement(g, d, 1).map_err(|e| e.to_string())?.is_none()
                && d.is_disjoint(inst.forbidden());
            if !valid {
                return Err(fail("projection is not an extension solution", &artifacts));
            }
            // Replay the repair swaps: 2-maximality must hold after
            // every intermediate step.
            let mut current = s.clone();
            for &i in &projection.swaps {
                current = current.apply_swap(
                    &[map.c_i[i], map.c_i_prime[i]],
                    &[map.y[i], map.y_prime[i]],
                );
                if local::find_is_improvement(&h, &current, 2)
                    .map_err(|e| e.to_string())?
                    .is_some()
                {
                    return Err(fail("a repair swap broke 2-maximality", &artifacts));
                }
            }
            if current != projection.repaired {
                return Err(fail("repair replay diverged", &artifacts));
            }
        }
        Ok(())
    })
}

/// Blow-up counts and the lift/project bijection between solution sets.
fn blowup_suite(scale: &Scale) -> SuiteReport {
    run_trials("blowup", scale, |seed| {
        let mut rng = gen::rng_from_seed(seed);
        let n = rng.gen_range(1..=scale.max_n.max(1));
        let h = gen::gnp(n, 0.5, &mut rng);
        for k in 2..=4usize {
            if (k - 1) * n > 24 {
                continue;
            }
            let (hk, map) = locopt_core::reduce::blowup(&h, k).map_err(|e| e.to_string())?;
            let base = two_max_sets_of(&h)?;
            let list = enumerate_local_optima_with(
                ProblemKind::IndependentSet,
                &Instance::Graph(hk.clone()),
                k,
                None,
                &gadget_budget(),
            )
            .map_err(|e| e.to_string())?;
            let lifted_base: Vec<VertexSet> = {
                let mut v: Vec<VertexSet> = base
                    .iter()
                    .map(|s| map.lift(s))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                v.sort();
                v
            };
            let image: Vec<VertexSet> = list.vertex_sets().cloned().collect();
            if lifted_base != image {
                return Err(fail(
                    &format!(
                        "level-{k} blow-up: {} base vs {} image solutions",
                        base.len(),
                        image.len()
                    ),
                    &[("graph", io::write_graph(&h))],
                ));
            }
            for s in &base {
                let round =
                    map.project(&map.lift(s).map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                if round != *s {
                    return Err(fail("project(lift) is not the identity", &[(
                        "graph",
                        io::write_graph(&h),
                    )]));
                }
            }
        }
        Ok(())
    })
}

fn covering_reduction(
    name: &'static str,
    scale: &Scale,
    problem: ProblemKind,
) -> SuiteReport {
    run_trials(name, scale, move |seed| {
        let mut rng = gen::rng_from_seed(seed);
        let n = rng.gen_range(2..=scale.max_n.max(2));
        for k in [2usize, 3] {
            let max_edges = ((24usize.saturating_sub(n)) / k).max(1);
            let m = rng.gen_range(1..=max_edges.min(n * (n - 1) / 2).max(1));
            let g = loop {
                let g = gen::gnm(n, m, &mut rng);
                if !g.has_isolated_vertex() && g.edge_count() >= 1 {
                    break g;
                }
            };
            let (built, map) = build_dom_fvs_graph(&g, k).map_err(|e| e.to_string())?;
            let covers = enumerate_local_optima(
                ProblemKind::VertexCover,
                &Instance::Graph(g.clone()),
                k,
                None,
            )
            .map_err(|e| e.to_string())?;
            let image = enumerate_local_optima_with(
                problem,
                &Instance::Graph(built.clone()),
                k,
                None,
                &gadget_budget(),
            )
            .map_err(|e| e.to_string())?;
            let cover_sets: Vec<&VertexSet> = covers.vertex_sets().collect();
            let image_sets: Vec<&VertexSet> = image.vertex_sets().collect();
            if image_sets
                .iter()
                .any(|s| s.iter().any(|v| map.is_gadget_vertex(v)))
            {
                return Err(fail("a gadget vertex appears in a solution", &[(
                    "graph",
                    io::write_graph(&g),
                )]));
            }
            if cover_sets != image_sets {
                return Err(fail(
                    &format!(
                        "k={k}: {} covers vs {} image solutions",
                        cover_sets.len(),
                        image_sets.len()
                    ),
                    &[("graph", io::write_graph(&g))],
                ));
            }
        }
        Ok(())
    })
}

/// k-minimal vertex covers of the source equal the k-minimal dominating
/// sets of the built graph.
fn dom_reduction(scale: &Scale) -> SuiteReport {
    covering_reduction("dom-reduction", scale, ProblemKind::DominatingSet)
}

/// k-minimal vertex covers of the source equal the k-minimal feedback
/// vertex sets of the built graph.
fn fvs_reduction(scale: &Scale) -> SuiteReport {
    covering_reduction("fvs-reduction", scale, ProblemKind::FeedbackVertexSet)
}

/// The bounded augmenting-path characterization agrees with the
/// definition-level matching checker.
fn matching_char(scale: &Scale) -> SuiteReport {
    run_trials("matching-char", scale, |seed| {
        let mut rng = gen::rng_from_seed(seed);
        let n = rng.gen_range(2..=(scale.max_n + 4).min(10));
        let g = gen::gnp(n, 0.45, &mut rng);
        let m = gen::random_matching(&g, &mut rng);
        for k in 1..=3 {
            let fast = is_k_maximal_matching_fast(&g, &m, k).map_err(|e| e.to_string())?;
            let checker = local::find_matching_improvement(&g, &m, k)
                .map_err(|e| e.to_string())?
                .is_none();
            if fast != checker {
                return Err(fail(&format!("k={k}: fast={fast}, checker={checker}"), &[
                    ("graph", io::write_graph(&g)),
                    ("matching", io::write_matching(&m)),
                ]));
            }
        }
        Ok(())
    })
}

/// When the maximum matching is unique and a second k-maximal matching
/// exists, one of size one below maximum exists whose difference with
/// the maximum is a single augmenting path.
fn matching_almost_max(scale: &Scale) -> SuiteReport {
    run_trials("matching-almost-max", scale, |seed| {
        let mut rng = gen::rng_from_seed(seed);
        let n = rng.gen_range(3..=(scale.max_n + 2).min(9));
        let g = gen::gnp(n, 0.35, &mut rng);
        let mstar = maximum_matching(&g);
        if second_maximum_matching(&g, &mstar).map_err(|e| e.to_string())?.is_some() {
            return Ok(());
        }
        for k in 1..=3 {
            let two = oracle::count_at_least(
                ProblemKind::Matching,
                &Instance::Graph(g.clone()),
                k,
                2,
            )
            .map_err(|e| e.to_string())?;
            if !two {
                continue;
            }
            let Some((_, second)) =
                two_k_maximal_matchings(&g, k).map_err(|e| e.to_string())?
            else {
                return Err(fail(&format!("k={k}: second solution exists but none found"), &[
                    ("graph", io::write_graph(&g)),
                ]));
            };
            let artifacts =
                [("graph", io::write_graph(&g)), ("matching", io::write_matching(&second))];
            if second.len() + 1 != mstar.len() {
                return Err(fail("second matching is not one below maximum", &artifacts));
            }
            let diff: Vec<(usize, usize)> = mstar
                .iter()
                .filter(|e| !second.contains(e.0, e.1))
                .chain(second.iter().filter(|e| !mstar.contains(e.0, e.1)))
                .collect();
            if !is_single_augmenting_path(&g, &second, &diff) {
                return Err(fail(
                    "difference with the maximum is not a single augmenting path",
                    &artifacts,
                ));
            }
        }
        Ok(())
    })
}

/// True iff `diff` forms one path that augments `m`.
fn is_single_augmenting_path(g: &Graph, m: &Matching, diff: &[(usize, usize)]) -> bool {
    let n = g.vertex_count();
    let mut degree = vec![0usize; n];
    for &(u, v) in diff {
        degree[u] += 1;
        degree[v] += 1;
    }
    let endpoints: Vec<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    if endpoints.len() != 2 || degree.iter().any(|&d| d > 2) {
        return false;
    }
    // Connected: walk from one endpoint.
    let mut used = vec![false; diff.len()];
    let mut at = endpoints[0];
    let mut steps = 0;
    loop {
        let Some(i) = (0..diff.len()).find(|&i| {
            !used[i] && (diff[i].0 == at || diff[i].1 == at)
        }) else {
            break;
        };
        used[i] = true;
        at = if diff[i].0 == at { diff[i].1 } else { diff[i].0 };
        steps += 1;
    }
    steps == diff.len() && endpoints.iter().all(|&v| !m.covers(v))
}

/// The decision algorithm agrees with oracle threshold-2 counting.
fn two_matchings_suite(scale: &Scale) -> SuiteReport {
    run_trials("two-matchings", scale, |seed| {
        let mut rng = gen::rng_from_seed(seed);
        let n = rng.gen_range(1..=(scale.max_n + 2).min(10));
        let g = gen::gnp(n, 0.4, &mut rng);
        for k in 1..=3 {
            let verdict =
                two_k_maximal_matchings(&g, k).map_err(|e| e.to_string())?.is_some();
            let threshold = oracle::count_at_least(
                ProblemKind::Matching,
                &Instance::Graph(g.clone()),
                k,
                2,
            )
            .map_err(|e| e.to_string())?;
            if verdict != threshold {
                return Err(fail(
                    &format!("k={k}: algorithm={verdict}, oracle={threshold}"),
                    &[("graph", io::write_graph(&g))],
                ));
            }
        }
        Ok(())
    })
}

/// Extension instances small enough for exhaustive assignment scans.
fn small_nae_instance(scale: &Scale, seed: u64) -> Result<Option<MiseInstance>, String> {
    let mut rng = gen::rng_from_seed(seed);
    let n = rng.gen_range(2..=scale.max_n.min(4).max(2));
    let forbidden = rng.gen_range(0..=1usize);
    let inst = gen::mise_instance(n, 0.5, forbidden, &mut rng).map_err(|e| e.to_string())?;
    let m = inst.graph().edge_count();
    let vars = 2 * n + 4 * m * inst.forbidden().len() + m + 2;
    Ok((vars <= 18).then_some(inst))
}

/// Exactly two selector-splitting locally optimal assignments: the
/// canonical pair.
fn nae_type1(scale: &Scale) -> SuiteReport {
    run_trials("nae-type1", scale, |seed| {
        let Some(inst) = small_nae_instance(scale, seed)? else { return Ok(()) };
        let (f, map) = build_naesat(&inst).map_err(|e| e.to_string())?;
        let optima = enumerate_local_optima(
            ProblemKind::MaxNaeSat,
            &Instance::Formula(f.clone()),
            1,
            None,
        )
        .map_err(|e| e.to_string())?;
        let split: Vec<&Assignment> = optima
            .solutions
            .iter()
            .filter_map(|s| match s {
                Solution::Assignment(a) if a.value(map.x_star) != a.value(map.y_star) => {
                    Some(a)
                }
                _ => None,
            })
            .collect();
        let (first, second) = map.canonical_pair();
        let ok = split.len() == 2
            && split.contains(&&first)
            && split.contains(&&second)
            && *split[0] == split[1].complement();
        if !ok {
            return Err(fail(
                &format!("{} selector-splitting optima", split.len()),
                &[
                    ("source graph", io::write_graph(inst.graph())),
                    ("forbidden", io::write_vertex_set(inst.forbidden())),
                    ("formula", io::write_cnf(&f)),
                ],
            ));
        }
        Ok(())
    })
}

/// Equal-selector optima are exactly the lifted extension solutions
/// (and their complements), so a third optimum exists iff the instance
/// is solvable.
fn nae_type2(scale: &Scale) -> SuiteReport {
    run_trials("nae-type2", scale, |seed| {
        let Some(inst) = small_nae_instance(scale, seed)? else { return Ok(()) };
        let g = inst.graph();
        let (f, map) = build_naesat(&inst).map_err(|e| e.to_string())?;
        let optima = enumerate_local_optima(
            ProblemKind::MaxNaeSat,
            &Instance::Formula(f.clone()),
            1,
            None,
        )
        .map_err(|e| e.to_string())?;
        let artifacts = [
            ("source graph", io::write_graph(g)),
            ("forbidden", io::write_vertex_set(inst.forbidden())),
            ("formula", io::write_cnf(&f)),
        ];
        let solutions = extension_solutions(&inst)?;
        let solvable = !solutions.is_empty();
        if (optima.len() >= 3) != solvable {
            return Err(fail(
                &format!("{} optima but solvable = {solvable}", optima.len()),
                &artifacts,
            ));
        }
        if optima.len() != 2 + 2 * solutions.len() {
            return Err(fail(
                &format!("{} optima for {} extension solutions", optima.len(), solutions.len()),
                &artifacts,
            ));
        }
        for d in &solutions {
            let lifted = map.lift(&map.pad_solution(d)).map_err(|e| e.to_string())?;
            if !optima.contains(&Solution::Assignment(lifted.clone())) {
                return Err(fail("a lifted solution is missing from the optima", &artifacts));
            }
            let back = map.project(&f, &lifted).map_err(|e| e.to_string())?;
            if back != *d {
                return Err(fail("project(lift) is not the identity", &artifacts));
            }
            // Projection normalizes complements to the same solution.
            let back = map.project(&f, &lifted.complement()).map_err(|e| e.to_string())?;
            if back != *d {
                return Err(fail("projection does not normalize complements", &artifacts));
            }
        }
        Ok(())
    })
}

/// Positivization: image optima are exactly the partner-consistent
/// assignments; lift embeds the source optima with project as inverse.
fn positivize_suite(scale: &Scale) -> SuiteReport {
    run_trials("positivize", scale, |seed| {
        let mut rng = gen::rng_from_seed(seed);
        let vars = rng.gen_range(2..=scale.max_n.min(8).max(2));
        let clauses = rng.gen_range(1..=2 * vars);
        let f = gen::random_cnf(vars, clauses, 1..=3.min(vars), false, &mut rng)
            .map_err(|e| e.to_string())?;
        let (pos, map) = positivize(&f).map_err(|e| e.to_string())?;
        let artifacts = [("formula", io::write_cnf(&f))];
        for code in 0..1u64 << (2 * vars) {
            let a = Assignment::from_bits(2 * vars, code);
            let consistent = (0..vars).all(|x| a.value(x) != a.value(map.partner(x)));
            let optimal = raw::is_nae_unflippable(&pos, &a).map_err(|e| e.to_string())?;
            if optimal != consistent {
                return Err(fail(
                    &format!("assignment {a:?}: optimal={optimal}, consistent={consistent}"),
                    &artifacts,
                ));
            }
        }
        for code in 0..1u64 << vars {
            let a = Assignment::from_bits(vars, code);
            if !raw::is_nae_unflippable(&f, &a).map_err(|e| e.to_string())? {
                continue;
            }
            let lifted = map.lift(&a).map_err(|e| e.to_string())?;
            if !raw::is_nae_unflippable(&pos, &lifted).map_err(|e| e.to_string())? {
                return Err(fail("lift of a source optimum is not optimal", &artifacts));
            }
            if map.project(&lifted).map_err(|e| e.to_string())? != a {
                return Err(fail("project(lift) is not the identity", &artifacts));
            }
        }
        Ok(())
    })
}

fn random_positive_23(scale: &Scale, seed: u64) -> Result<locopt_core::cnf::CnfFormula, String> {
    let mut rng = gen::rng_from_seed(seed);
    let vars = rng.gen_range(2..=(scale.max_n + 4).min(10));
    let clauses = rng.gen_range(1..=2 * vars);
    gen::random_cnf(vars, clauses, 2..=3.min(vars), true, &mut rng).map_err(|e| e.to_string())
}

/// Assignments and ordered cuts correspond pointwise: locally optimal
/// iff stable, with twice the NAE count as cut weight.
fn cut_bijection(scale: &Scale) -> SuiteReport {
    run_trials("cut-bijection", scale, |seed| {
        let f = random_positive_23(scale, seed)?;
        let (mg, map) = build_maxcut(&f).map_err(|e| e.to_string())?;
        let artifacts =
            [("formula", io::write_cnf(&f)), ("multigraph", io::write_multigraph(&mg))];
        let vars = f.num_vars();
        let mut optima = 0usize;
        let mut stable = 0usize;
        for code in 0..1u64 << vars {
            let a = Assignment::from_bits(vars, code);
            let cut = map.cut_of_assignment(&a).map_err(|e| e.to_string())?;
            let unflippable = raw::is_nae_unflippable(&f, &a).map_err(|e| e.to_string())?;
            let cut_stable = raw::is_stable_cut(&mg, &cut).map_err(|e| e.to_string())?;
            if unflippable != cut_stable {
                return Err(fail(
                    &format!("{a:?}: unflippable={unflippable}, stable={cut_stable}"),
                    &artifacts,
                ));
            }
            optima += unflippable as usize;
            stable += cut_stable as usize;
            let weight = mg.cut_weight(&cut).map_err(|e| e.to_string())?;
            let nae = f.count_nae_satisfied(&a).map_err(|e| e.to_string())? as u64;
            if weight != 2 * nae {
                return Err(fail(
                    &format!("{a:?}: weight {weight} is not twice the NAE count {nae}"),
                    &artifacts,
                ));
            }
            if map.assignment_of_cut(&cut).map_err(|e| e.to_string())? != a {
                return Err(fail("round trip is not the identity", &artifacts));
            }
        }
        if optima != stable {
            return Err(fail(
                &format!("{optima} optima vs {stable} ordered stable cuts"),
                &artifacts,
            ));
        }
        Ok(())
    })
}

/// Threshold transfer: at least three locally optimal assignments iff
/// at least two unordered stable cuts.
fn maxcut_threshold(scale: &Scale) -> SuiteReport {
    run_trials("maxcut-threshold", scale, |seed| {
        let f = random_positive_23(scale, seed)?;
        let (mg, _) = build_maxcut(&f).map_err(|e| e.to_string())?;
        let optima = enumerate_local_optima(
            ProblemKind::MaxNaeSat,
            &Instance::Formula(f.clone()),
            1,
            None,
        )
        .map_err(|e| e.to_string())?;
        let cuts = enumerate_stable_cuts(&mg, false, None).map_err(|e| e.to_string())?;
        if (optima.len() >= 3) != (cuts.len() >= 2) {
            return Err(fail(
                &format!("{} optima vs {} unordered stable cuts", optima.len(), cuts.len()),
                &[("formula", io::write_cnf(&f)), ("multigraph", io::write_multigraph(&mg))],
            ));
        }
        Ok(())
    })
}

/// The 2-CNF translation: locally optimal assignments are exactly the
/// anchor-true orientations of the cuts stable at every non-anchor
/// vertex; stable cuts orient to optima; the flip delta equals the cut
/// delta at every non-anchor vertex.
fn two_sat(scale: &Scale) -> SuiteReport {
    run_trials("two-sat", scale, |seed| {
        let mut rng = gen::rng_from_seed(seed);
        let n = rng.gen_range(2..=(scale.max_n + 2).min(10));
        let total = rng.gen_range(1..=16u64);
        let mg = gen::random_multigraph(n, total, &mut rng).map_err(|e| e.to_string())?;
        let (f, map) = build_2sat(&mg).map_err(|e| e.to_string())?;
        let artifacts =
            [("multigraph", io::write_multigraph(&mg)), ("formula", io::write_cnf(&f))];
        for code in 0..1u64 << n {
            let a = Assignment::from_bits(n, code);
            let cut = map.cut_of_assignment(&a).map_err(|e| e.to_string())?;
            let unflippable = raw::is_unflippable(&f, &a).map_err(|e| e.to_string())?;
            let weight = mg.cut_weight(&cut).map_err(|e| e.to_string())? as i64;
            let stable_away = (0..n).filter(|&v| v != map.v_star).all(|v| {
                mg.cut_weight(&cut.flip_vertex(v)).unwrap_or(0) as i64 <= weight
            });
            let expected = a.value(map.v_star) && stable_away;
            if unflippable != expected {
                return Err(fail(
                    &format!("{a:?}: unflippable={unflippable}, expected={expected}"),
                    &artifacts,
                ));
            }
            if raw::is_stable_cut(&mg, &cut).map_err(|e| e.to_string())?
                && a.value(map.v_star)
                && !unflippable
            {
                return Err(fail("a stable cut's orientation is not optimal", &artifacts));
            }
            // Flip delta = cut delta away from the anchor.
            let sat = f.count_satisfied(&a).map_err(|e| e.to_string())? as i64;
            for u in (0..n).filter(|&u| u != map.v_star) {
                let sat_u = f.count_satisfied(&a.flip(u)).map_err(|e| e.to_string())? as i64;
                let w_u = mg.cut_weight(&cut.flip_vertex(u)).map_err(|e| e.to_string())? as i64;
                if sat - sat_u != weight - w_u {
                    return Err(fail(
                        &format!("delta identity fails at vertex {u} for {a:?}"),
                        &artifacts,
                    ));
                }
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use locopt_core::matching::find_augmenting_path_upto;

    /// Matching-side sanity for the augmenting-path helper.
    #[test]
    fn single_augmenting_path_helper() {
        let g = Graph::path(4);
        let m = Matching::new([(1, 2)]).unwrap();
        let diff = [(0, 1), (1, 2), (2, 3)];
        assert!(is_single_augmenting_path(&g, &m, &diff));
        // Two separate edges are not a single path.
        let diff = [(0, 1), (2, 3)];
        assert!(!is_single_augmenting_path(&g, &m, &diff));
    }

    /// The path characterization used by the almost-maximum suite is
    /// exercised against a concrete unique-maximum instance.
    #[test]
    fn almost_max_on_long_path() {
        let g = Graph::path(6);
        let mstar = maximum_matching(&g);
        assert_eq!(second_maximum_matching(&g, &mstar).unwrap(), None);
        let (_, second) = two_k_maximal_matchings(&g, 2).unwrap().unwrap();
        assert_eq!(second.len() + 1, mstar.len());
        assert!(find_augmenting_path_upto(&g, &second, 3).unwrap().is_none());
    }
}
