//! Subcommand implementations. Each returns the process exit code:
//! 0 = yes / success, 1 = no, 2 = error (mapped from `Err` by `main`).

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use rand::Rng;
use serde_json::json;

use locopt_core::climb::{climb, Instance, Move, ProblemKind, Solution};
use locopt_core::cnf::Assignment;
use locopt_core::graph::{Cut, Graph, VertexSet};
use locopt_core::local::{self, EdgeSwapMove, FlipMove, SwapMove};
use locopt_core::matching::{two_k_maximal_matchings, two_k_maximal_matchings_unbounded};
use locopt_core::oracle::{
    enumerate_local_optima_with, enumerate_stable_cuts_with, EnumerationBudget,
};
use locopt_core::reduce::{
    blowup, build_dom_fvs_graph, build_h, build_maxcut, build_naesat, build_2sat, positivize,
    MiseInstance,
};

use crate::gen;
use crate::io::{self, GadgetMapFile};
use crate::verify::{self, Scale};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    fs::write(path, body).with_context(|| format!("writing {}", path.display()))
}

/// Loads the instance kind the problem expects.
fn load_instance(problem: ProblemKind, path: &Path) -> Result<Instance> {
    let text = read(path)?;
    Ok(match problem {
        ProblemKind::MaxCut => Instance::MultiGraph(io::parse_multigraph(&text)?),
        ProblemKind::MaxSat | ProblemKind::MaxNaeSat => {
            Instance::Formula(io::parse_cnf(&text)?)
        }
        _ => Instance::Graph(io::parse_graph(&text)?),
    })
}

fn load_solution(problem: ProblemKind, path: &Path, instance: &Instance) -> Result<Solution> {
    let text = read(path)?;
    Ok(match (problem, instance) {
        (ProblemKind::Matching, Instance::Graph(g)) => {
            Solution::Edges(io::parse_matching(&text, g.vertex_count())?)
        }
        (ProblemKind::MaxCut, Instance::MultiGraph(mg)) => {
            Solution::Cut(io::parse_cut(&text, mg.vertex_count(), false)?)
        }
        (ProblemKind::MaxSat | ProblemKind::MaxNaeSat, Instance::Formula(f)) => {
            Solution::Assignment(io::parse_assignment(&text, f.num_vars())?)
        }
        (_, Instance::Graph(g)) => {
            Solution::Vertices(io::parse_vertex_set(&text, g.vertex_count())?)
        }
        _ => bail!("solution kind does not fit problem {problem}"),
    })
}

fn one_indexed(ids: &[usize]) -> Vec<usize> {
    ids.iter().map(|&v| v + 1).collect()
}

fn edges_one_indexed(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect()
}

fn format_move(mv: &Move) -> String {
    match mv {
        Move::Swap(SwapMove { remove, add }) => format!(
            "swap: remove {:?} add {:?}",
            one_indexed(remove),
            one_indexed(add)
        ),
        Move::EdgeSwap(EdgeSwapMove { remove, add }) => format!(
            "edge swap: remove {:?} add {:?}",
            edges_one_indexed(remove),
            edges_one_indexed(add)
        ),
        Move::Flip(FlipMove { target }) => format!("flip {}", target + 1),
    }
}

fn move_json(mv: &Move) -> serde_json::Value {
    match mv {
        Move::Swap(SwapMove { remove, add }) => {
            json!({"kind": "swap", "remove": remove, "add": add})
        }
        Move::EdgeSwap(EdgeSwapMove { remove, add }) => {
            json!({"kind": "edge-swap", "remove": remove, "add": add})
        }
        Move::Flip(FlipMove { target }) => json!({"kind": "flip", "target": target}),
    }
}

fn solution_text(solution: &Solution) -> String {
    match solution {
        Solution::Vertices(s) => io::write_vertex_set(s),
        Solution::Edges(m) => io::write_matching(m),
        Solution::Cut(c) => io::write_cut(c),
        Solution::Assignment(a) => io::write_assignment(a),
    }
}

fn solution_json(solution: &Solution) -> serde_json::Value {
    match solution {
        Solution::Vertices(s) => json!({"vertices": s.as_slice()}),
        Solution::Edges(m) => json!({"edges": m.edges()}),
        Solution::Cut(c) => json!({"x_side": c.x_side().as_slice(), "ordered": c.is_ordered()}),
        Solution::Assignment(a) => json!({"values": a.values()}),
    }
}

/// Runs the matching local-optimality checker for the problem.
fn run_checker(
    problem: ProblemKind,
    instance: &Instance,
    solution: &Solution,
    k: usize,
    force: bool,
) -> Result<Option<Move>> {
    let mismatch = || anyhow!("solution kind does not fit problem {problem}");
    let mv = match (problem, instance, solution) {
        (ProblemKind::IndependentSet, Instance::Graph(g), Solution::Vertices(s)) => {
            swap_checker(local::find_is_improvement, local::find_is_improvement_unbounded)(
                g, s, k, force,
            )?
        }
        (ProblemKind::Clique, Instance::Graph(g), Solution::Vertices(s)) => swap_checker(
            local::find_clique_improvement,
            local::find_clique_improvement_unbounded,
        )(g, s, k, force)?,
        (ProblemKind::VertexCover, Instance::Graph(g), Solution::Vertices(s)) => {
            swap_checker(local::find_vc_improvement, local::find_vc_improvement_unbounded)(
                g, s, k, force,
            )?
        }
        (ProblemKind::DominatingSet, Instance::Graph(g), Solution::Vertices(s)) => {
            swap_checker(local::find_ds_improvement, local::find_ds_improvement_unbounded)(
                g, s, k, force,
            )?
        }
        (ProblemKind::FeedbackVertexSet, Instance::Graph(g), Solution::Vertices(s)) => {
            swap_checker(local::find_fvs_improvement, local::find_fvs_improvement_unbounded)(
                g, s, k, force,
            )?
        }
        (ProblemKind::Matching, Instance::Graph(g), Solution::Edges(m)) => {
            let found = if force {
                local::find_matching_improvement_unbounded(g, m, k)?
            } else {
                local::find_matching_improvement(g, m, k)?
            };
            found.map(Move::EdgeSwap)
        }
        (ProblemKind::MaxCut, Instance::MultiGraph(mg), Solution::Cut(c)) => {
            local::find_cut_improvement(mg, c)?.map(Move::Flip)
        }
        (ProblemKind::MaxSat, Instance::Formula(f), Solution::Assignment(a)) => {
            local::find_sat_flip(f, a)?.map(Move::Flip)
        }
        (ProblemKind::MaxNaeSat, Instance::Formula(f), Solution::Assignment(a)) => {
            local::find_nae_flip(f, a)?.map(Move::Flip)
        }
        _ => return Err(mismatch()),
    };
    Ok(mv)
}

type SwapFn = fn(&Graph, &VertexSet, usize) -> Result<Option<SwapMove>, local::LocalError>;

fn swap_checker(
    guarded: SwapFn,
    unbounded: SwapFn,
) -> impl Fn(&Graph, &VertexSet, usize, bool) -> Result<Option<Move>> {
    move |g, s, k, force| {
        let found = if force { unbounded(g, s, k)? } else { guarded(g, s, k)? };
        Ok(found.map(Move::Swap))
    }
}

pub fn cmd_check(
    problem: ProblemKind,
    k: usize,
    instance_path: &Path,
    solution_path: &Path,
    json: bool,
    force: bool,
) -> Result<i32> {
    let instance = load_instance(problem, instance_path)?;
    let solution = load_solution(problem, solution_path, &instance)?;
    let mv = run_checker(problem, &instance, &solution, k, force)?;
    if json {
        let body = json!({
            "command": "check",
            "problem": problem.name(),
            "k": k,
            "verdict": if mv.is_some() { "improvable" } else { "locally-optimal" },
            "move": mv.as_ref().map(move_json),
        });
        println!("{}", serde_json::to_string_pretty(&body)?);
    } else if let Some(mv) = &mv {
        println!("improvable");
        println!("{}", format_move(mv));
    } else {
        println!("locally optimal");
    }
    Ok(if mv.is_some() { 1 } else { 0 })
}

/// A random feasible start for seeded climbs.
fn random_start(problem: ProblemKind, instance: &Instance, seed: u64) -> Result<Solution> {
    let mut rng = gen::rng_from_seed(seed);
    Ok(match (problem, instance) {
        (ProblemKind::MaxCut, Instance::MultiGraph(mg)) => {
            let sides = (0..mg.vertex_count()).map(|_| rng.gen_bool(0.5)).collect();
            Solution::Cut(Cut::unordered(sides))
        }
        (ProblemKind::MaxSat | ProblemKind::MaxNaeSat, Instance::Formula(f)) => {
            let values = (0..f.num_vars()).map(|_| rng.gen_bool(0.5)).collect();
            Solution::Assignment(Assignment::new(values))
        }
        (ProblemKind::Matching, Instance::Graph(g)) => {
            Solution::Edges(gen::random_matching(g, &mut rng))
        }
        (_, Instance::Graph(g)) => {
            let n = g.vertex_count();
            let mut order: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                order.swap(i, rng.gen_range(0..=i));
            }
            let feasible: fn(&Graph, &VertexSet) -> bool = match problem {
                ProblemKind::IndependentSet => |g, s| g.is_independent_set(s).unwrap_or(false),
                ProblemKind::Clique => |g, s| g.is_clique(s).unwrap_or(false),
                ProblemKind::VertexCover => |g, s| g.is_vertex_cover(s).unwrap_or(false),
                ProblemKind::DominatingSet => |g, s| g.is_dominating_set(s).unwrap_or(false),
                ProblemKind::FeedbackVertexSet => {
                    |g, s| g.is_feedback_vertex_set(s).unwrap_or(false)
                }
                _ => bail!("problem {problem} needs a graph"),
            };
            match problem {
                // Grow from empty in random order.
                ProblemKind::IndependentSet | ProblemKind::Clique => {
                    let mut s = VertexSet::empty();
                    for &v in &order {
                        s.insert(v);
                        if !feasible(g, &s) {
                            s.remove(v);
                        }
                    }
                    Solution::Vertices(s)
                }
                // Shrink from full in random order.
                _ => {
                    let mut s = VertexSet::full(n);
                    for &v in &order {
                        if rng.gen_bool(0.5) {
                            continue;
                        }
                        s.remove(v);
                        if !feasible(g, &s) {
                            s.insert(v);
                        }
                    }
                    Solution::Vertices(s)
                }
            }
        }
        _ => bail!("instance kind does not fit problem {problem}"),
    })
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_climb(
    problem: ProblemKind,
    k: usize,
    instance_path: &Path,
    start_path: Option<&Path>,
    seed: Option<u64>,
    trace: bool,
    json: bool,
) -> Result<i32> {
    let instance = load_instance(problem, instance_path)?;
    let start = match (start_path, seed) {
        (Some(_), Some(_)) => bail!("--start and --seed are mutually exclusive"),
        (Some(path), None) => Some(load_solution(problem, path, &instance)?),
        (None, Some(seed)) => Some(random_start(problem, &instance, seed)?),
        (None, None) => None,
    };
    let report = climb(problem, &instance, k, start, trace)?;
    if json {
        let body = json!({
            "command": "climb",
            "problem": problem.name(),
            "k": k,
            "steps": report.steps,
            "solution": solution_json(&report.solution),
            "trace": report.trace.as_ref().map(|t| {
                t.iter().map(move_json).collect::<Vec<_>>()
            }),
        });
        println!("{}", serde_json::to_string_pretty(&body)?);
    } else {
        print!("{}", solution_text(&report.solution));
        println!("steps: {}", report.steps);
        if let Some(trace) = &report.trace {
            for mv in trace {
                println!("{}", format_move(mv));
            }
        }
    }
    Ok(0)
}

fn budget_for(max_n: Option<usize>, force: bool) -> EnumerationBudget {
    if force {
        EnumerationBudget::unlimited()
    } else if let Some(max) = max_n {
        EnumerationBudget { max_vertices: max, max_edges: max, max_variables: max }
    } else {
        EnumerationBudget::default()
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_enumerate(
    problem: ProblemKind,
    k: usize,
    instance_path: &Path,
    limit: Option<usize>,
    at_least: Option<usize>,
    ordered: bool,
    max_n: Option<usize>,
    json: bool,
    force: bool,
) -> Result<i32> {
    if ordered && problem != ProblemKind::MaxCut {
        bail!("--ordered applies only to the cut problem");
    }
    let instance = load_instance(problem, instance_path)?;
    let budget = budget_for(max_n, force);
    let effective_limit = match (limit, at_least) {
        (Some(l), Some(t)) => Some(l.max(t)),
        (Some(l), None) => Some(l),
        (None, Some(t)) => Some(t),
        (None, None) => None,
    };
    let list = if problem == ProblemKind::MaxCut && ordered {
        let mg = instance.as_multigraph().expect("checked by load_instance");
        enumerate_stable_cuts_with(mg, true, effective_limit, &budget)?
    } else {
        enumerate_local_optima_with(problem, &instance, k, effective_limit, &budget)?
    };
    let truncated = effective_limit.is_some_and(|l| list.len() >= l);
    if json {
        let body = json!({
            "command": "enumerate",
            "problem": problem.name(),
            "k": k,
            "count": list.len(),
            "exhaustive": !truncated,
            "solutions": list.solutions.iter().map(solution_json).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&body)?);
    } else {
        for solution in &list.solutions {
            print!("{}", solution_text(solution));
        }
        if truncated {
            println!("count: >= {}", list.len());
        } else {
            println!("count: {}", list.len());
        }
    }
    Ok(match at_least {
        Some(threshold) => {
            if list.len() >= threshold {
                0
            } else {
                1
            }
        }
        None => 0,
    })
}

pub fn cmd_two_matchings(k: usize, instance_path: &Path, json: bool, force: bool) -> Result<i32> {
    let text = read(instance_path)?;
    let g = io::parse_graph(&text)?;
    let found = if force {
        two_k_maximal_matchings_unbounded(&g, k)?
    } else {
        two_k_maximal_matchings(&g, k)?
    };
    if json {
        let body = json!({
            "command": "two-matchings",
            "k": k,
            "verdict": if found.is_some() { "two" } else { "unique" },
            "matchings": found.as_ref().map(|(a, b)| vec![a.edges(), b.edges()]),
        });
        println!("{}", serde_json::to_string_pretty(&body)?);
    } else {
        match &found {
            Some((a, b)) => {
                print!("{}", io::write_matching(a));
                print!("{}", io::write_matching(b));
            }
            None => println!("unique"),
        }
    }
    Ok(if found.is_some() { 0 } else { 1 })
}

/// The reductions the CLI can build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionName {
    H,
    Blowup,
    DomFvs,
    Naesat,
    Positivize,
    Maxcut,
    Max2Sat,
}

impl ReductionName {
    pub fn as_str(&self) -> &'static str {
        match self {
            ReductionName::H => "h",
            ReductionName::Blowup => "blowup",
            ReductionName::DomFvs => "dom-fvs",
            ReductionName::Naesat => "naesat",
            ReductionName::Positivize => "positivize",
            ReductionName::Maxcut => "maxcut",
            ReductionName::Max2Sat => "max2sat",
        }
    }
}

fn load_mise(graph_path: &Path, forbidden_path: Option<&Path>) -> Result<MiseInstance> {
    let g = io::parse_graph(&read(graph_path)?)?;
    let forbidden = match forbidden_path {
        Some(path) => io::parse_vertex_set(&read(path)?, g.vertex_count())?,
        None => VertexSet::empty(),
    };
    Ok(MiseInstance::new(g, forbidden)?)
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_reduce(
    name: ReductionName,
    graph: Option<&Path>,
    cnf: Option<&Path>,
    multigraph: Option<&Path>,
    forbidden: Option<&Path>,
    k: Option<usize>,
    out_prefix: &str,
    json: bool,
) -> Result<i32> {
    let need_graph = || graph.ok_or_else(|| anyhow!("{} needs --graph", name.as_str()));
    let need_cnf = || cnf.ok_or_else(|| anyhow!("{} needs --cnf", name.as_str()));
    let need_k = || k.ok_or_else(|| anyhow!("{} needs --target-k", name.as_str()));
    let (instance_path, instance_body, map): (PathBuf, String, GadgetMapFile) = match name {
        ReductionName::H => {
            let inst = load_mise(need_graph()?, forbidden)?;
            let (h, map) = build_h(&inst)?;
            (
                PathBuf::from(format!("{out_prefix}.graph")),
                io::write_graph(&h),
                GadgetMapFile::H(map),
            )
        }
        ReductionName::Blowup => {
            let g = io::parse_graph(&read(need_graph()?)?)?;
            let (built, map) = blowup(&g, need_k()?)?;
            (
                PathBuf::from(format!("{out_prefix}.graph")),
                io::write_graph(&built),
                GadgetMapFile::Blowup(map),
            )
        }
        ReductionName::DomFvs => {
            let g = io::parse_graph(&read(need_graph()?)?)?;
            let (built, map) = build_dom_fvs_graph(&g, need_k()?)?;
            (
                PathBuf::from(format!("{out_prefix}.graph")),
                io::write_graph(&built),
                GadgetMapFile::DomFvs(map),
            )
        }
        ReductionName::Naesat => {
            let inst = load_mise(need_graph()?, forbidden)?;
            let (f, map) = build_naesat(&inst)?;
            (
                PathBuf::from(format!("{out_prefix}.cnf")),
                io::write_cnf(&f),
                GadgetMapFile::Naesat(map),
            )
        }
        ReductionName::Positivize => {
            let f = io::parse_cnf(&read(need_cnf()?)?)?;
            let (pos, map) = positivize(&f)?;
            (
                PathBuf::from(format!("{out_prefix}.cnf")),
                io::write_cnf(&pos),
                GadgetMapFile::Positivize(map),
            )
        }
        ReductionName::Maxcut => {
            let f = io::parse_cnf(&read(need_cnf()?)?)?;
            let (mg, map) = build_maxcut(&f)?;
            (
                PathBuf::from(format!("{out_prefix}.graph")),
                io::write_multigraph(&mg),
                GadgetMapFile::Maxcut(map),
            )
        }
        ReductionName::Max2Sat => {
            let path =
                multigraph.ok_or_else(|| anyhow!("{} needs --multigraph", name.as_str()))?;
            let mg = io::parse_multigraph(&read(path)?)?;
            let (f, map) = build_2sat(&mg)?;
            (
                PathBuf::from(format!("{out_prefix}.cnf")),
                io::write_cnf(&f),
                GadgetMapFile::Max2Sat(map),
            )
        }
    };
    let map_path = PathBuf::from(format!("{out_prefix}.map.json"));
    write_file(&instance_path, &instance_body)?;
    write_file(&map_path, &format!("{}\n", serde_json::to_string_pretty(&map)?))?;
    if json {
        let body = json!({
            "command": "reduce",
            "reduction": name.as_str(),
            "instance": instance_path,
            "map": map_path,
        });
        println!("{}", serde_json::to_string_pretty(&body)?);
    } else {
        println!("wrote {}", instance_path.display());
        println!("wrote {}", map_path.display());
    }
    Ok(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapDirection {
    Lift,
    Project,
}

/// Applies a solution map and verifies the image with the appropriate
/// checker before writing; a failing image is an error (exit 2).
#[allow(clippy::too_many_arguments)]
pub fn cmd_map(
    direction: MapDirection,
    map_path: &Path,
    solution_path: &Path,
    from: Option<&Path>,
    to: Option<&Path>,
    out: Option<&Path>,
    json: bool,
) -> Result<i32> {
    let map_file: GadgetMapFile = serde_json::from_str(&read(map_path)?)
        .with_context(|| format!("parsing gadget map {}", map_path.display()))?;
    let text = read(solution_path)?;
    let need_from = || {
        from.ok_or_else(|| anyhow!("this map direction needs --from <source instance file>"))
    };
    let need_to =
        || to.ok_or_else(|| anyhow!("this map needs --to <built instance file>"));

    let image: Solution = match (&map_file, direction) {
        (GadgetMapFile::H(map), MapDirection::Lift) => {
            let d = io::parse_vertex_set(&text, map.original_n)?;
            let lifted = map.lift(&d)?;
            let h = io::parse_graph(&read(need_to()?)?)?;
            verify_none(
                local::find_is_improvement(&h, &lifted, 2)?.map(Move::Swap),
                "lift is not a 2-maximal independent set of the built graph",
            )?;
            Solution::Vertices(lifted)
        }
        (GadgetMapFile::H(map), MapDirection::Project) => {
            let h = io::parse_graph(&read(need_to()?)?)?;
            let s = io::parse_vertex_set(&text, h.vertex_count())?;
            let projection = map.project(&h, &s)?;
            let g = io::parse_graph(&read(need_from()?)?)?;
            let d = projection.solution;
            let ok = g.is_independent_set(&d)?
                && local::find_is_improvement(&g, &d, 1)?.is_none()
                && d.iter().all(|v| !map.x.contains(&v));
            if !ok {
                bail!("projection is not a maximal independent set avoiding the forbidden set");
            }
            Solution::Vertices(d)
        }
        (GadgetMapFile::Blowup(map), MapDirection::Lift) => {
            let s = io::parse_vertex_set(&text, map.original_n)?;
            let lifted = map.lift(&s)?;
            let built = io::parse_graph(&read(need_to()?)?)?;
            verify_none(
                local::find_is_improvement_unbounded(&built, &lifted, map.k)?.map(Move::Swap),
                "lift is not a k-maximal independent set of the blow-up",
            )?;
            Solution::Vertices(lifted)
        }
        (GadgetMapFile::Blowup(map), MapDirection::Project) => {
            let s = io::parse_vertex_set(&text, map.original_n * (map.k - 1))?;
            let projected = map.project(&s)?;
            let base = io::parse_graph(&read(need_from()?)?)?;
            verify_none(
                local::find_is_improvement(&base, &projected, 2)?.map(Move::Swap),
                "projection is not a 2-maximal independent set of the base graph",
            )?;
            Solution::Vertices(projected)
        }
        (GadgetMapFile::DomFvs(map), MapDirection::Lift) => {
            let s = io::parse_vertex_set(&text, map.original_n)?;
            let built = io::parse_graph(&read(need_to()?)?)?;
            verify_none(
                local::find_ds_improvement(&built, &s, map.k)?.map(Move::Swap),
                "image is not a k-minimal dominating set of the built graph",
            )?;
            verify_none(
                local::find_fvs_improvement(&built, &s, map.k)?.map(Move::Swap),
                "image is not a k-minimal feedback vertex set of the built graph",
            )?;
            Solution::Vertices(s)
        }
        (GadgetMapFile::DomFvs(map), MapDirection::Project) => {
            let built_n = map.original_n + map.k * map.edges.len();
            let s = io::parse_vertex_set(&text, built_n)?;
            if s.iter().any(|v| map.is_gadget_vertex(v)) {
                bail!("solution touches gadget vertices; it does not project");
            }
            let g = io::parse_graph(&read(need_from()?)?)?;
            verify_none(
                local::find_vc_improvement(&g, &s, map.k)?.map(Move::Swap),
                "projection is not a k-minimal vertex cover of the source graph",
            )?;
            Solution::Vertices(s)
        }
        (GadgetMapFile::Naesat(map), MapDirection::Lift) => {
            let d = io::parse_vertex_set(&text, map.original_n)?;
            let lifted = map.lift(&map.pad_solution(&d))?;
            let f = io::parse_cnf(&read(need_to()?)?)?;
            verify_none(
                local::find_nae_flip(&f, &lifted)?.map(Move::Flip),
                "lift is not NAE-unflippable for the built formula",
            )?;
            Solution::Assignment(lifted)
        }
        (GadgetMapFile::Naesat(map), MapDirection::Project) => {
            let f = io::parse_cnf(&read(need_to()?)?)?;
            let a = io::parse_assignment(&text, f.num_vars())?;
            let d = map.project(&f, &a)?;
            let g = io::parse_graph(&read(need_from()?)?)?;
            let ok = g.is_independent_set(&d)?
                && local::find_is_improvement(&g, &d, 1)?.is_none()
                && d.iter().all(|v| !map.x.contains(&v));
            if !ok {
                bail!("projection is not a maximal independent set avoiding the forbidden set");
            }
            Solution::Vertices(d)
        }
        (GadgetMapFile::Positivize(map), MapDirection::Lift) => {
            let a = io::parse_assignment(&text, map.original_vars)?;
            let lifted = map.lift(&a)?;
            let f = io::parse_cnf(&read(need_to()?)?)?;
            verify_none(
                local::find_nae_flip(&f, &lifted)?.map(Move::Flip),
                "lift is not NAE-unflippable for the positivized formula",
            )?;
            Solution::Assignment(lifted)
        }
        (GadgetMapFile::Positivize(map), MapDirection::Project) => {
            let a = io::parse_assignment(&text, 2 * map.original_vars)?;
            let projected = map.project(&a)?;
            let f = io::parse_cnf(&read(need_from()?)?)?;
            verify_none(
                local::find_nae_flip(&f, &projected)?.map(Move::Flip),
                "projection is not NAE-unflippable for the source formula",
            )?;
            Solution::Assignment(projected)
        }
        (GadgetMapFile::Maxcut(map), MapDirection::Lift) => {
            let a = io::parse_assignment(&text, map.vars)?;
            let cut = map.cut_of_assignment(&a)?;
            let mg = io::parse_multigraph(&read(need_to()?)?)?;
            verify_none(
                local::find_cut_improvement(&mg, &cut)?.map(Move::Flip),
                "lift is not a stable cut of the built multigraph",
            )?;
            Solution::Cut(cut)
        }
        (GadgetMapFile::Maxcut(map), MapDirection::Project) => {
            let cut = io::parse_cut(&text, map.vars, true)?;
            let a = map.assignment_of_cut(&cut)?;
            let f = io::parse_cnf(&read(need_from()?)?)?;
            verify_none(
                local::find_nae_flip(&f, &a)?.map(Move::Flip),
                "projection is not NAE-unflippable for the source formula",
            )?;
            Solution::Assignment(a)
        }
        (GadgetMapFile::Max2Sat(map), MapDirection::Lift) => {
            let cut = io::parse_cut(&text, map.vertices, false)?;
            let a = map.assignment_of_cut(&cut)?;
            let f = io::parse_cnf(&read(need_to()?)?)?;
            verify_none(
                local::find_sat_flip(&f, &a)?.map(Move::Flip),
                "lift is not unflippable for the built formula",
            )?;
            Solution::Assignment(a)
        }
        (GadgetMapFile::Max2Sat(map), MapDirection::Project) => {
            let a = io::parse_assignment(&text, map.vertices)?;
            let cut = map.cut_of_assignment(&a)?;
            let mg = io::parse_multigraph(&read(need_from()?)?)?;
            verify_none(
                local::find_cut_improvement(&mg, &cut)?.map(Move::Flip),
                "projection is not a stable cut of the source multigraph",
            )?;
            Solution::Cut(cut)
        }
    };

    let body = solution_text(&image);
    match out {
        Some(path) => write_file(path, &body)?,
        None => print!("{body}"),
    }
    if json {
        let report = json!({
            "command": "map",
            "reduction": map_file.reduction_name(),
            "direction": match direction {
                MapDirection::Lift => "lift",
                MapDirection::Project => "project",
            },
            "verified": true,
            "image": solution_json(&image),
        });
        println!("{}", serde_json::to_string_pretty(&report)?);
    }
    Ok(0)
}

fn verify_none(found: Option<Move>, message: &str) -> Result<()> {
    match found {
        Some(mv) => bail!("{message} ({})", format_move(&mv)),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenModel {
    Gnp,
    Mise,
    Cnf,
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_gen(
    model: GenModel,
    n: usize,
    p: f64,
    forbidden_size: usize,
    vars: usize,
    clauses: usize,
    width_min: usize,
    width_max: usize,
    positive: bool,
    seed: u64,
    out: Option<&Path>,
    json: bool,
) -> Result<i32> {
    let mut rng = gen::rng_from_seed(seed);
    let (body, extra): (String, Option<(PathBuf, String)>) = match model {
        GenModel::Gnp => (io::write_graph(&gen::gnp(n, p, &mut rng)), None),
        GenModel::Mise => {
            let inst = gen::mise_instance(n, p, forbidden_size, &mut rng)?;
            let forbidden_body = io::write_vertex_set(inst.forbidden());
            let forbidden_path = out.map(|path| {
                let mut sidecar = path.as_os_str().to_owned();
                sidecar.push(".forbidden");
                (PathBuf::from(sidecar), forbidden_body.clone())
            });
            (io::write_graph(inst.graph()), forbidden_path)
        }
        GenModel::Cnf => {
            let f = gen::random_cnf(vars, clauses, width_min..=width_max, positive, &mut rng)?;
            (io::write_cnf(&f), None)
        }
    };
    match out {
        Some(path) => {
            write_file(path, &body)?;
            if let Some((sidecar, sidecar_body)) = &extra {
                write_file(sidecar, sidecar_body)?;
            }
            if json {
                let report = json!({
                    "command": "gen",
                    "seed": seed,
                    "instance": out,
                    "forbidden": extra.as_ref().map(|(p, _)| p),
                });
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("wrote {}", path.display());
                if let Some((sidecar, _)) = &extra {
                    println!("wrote {}", sidecar.display());
                }
            }
        }
        None => {
            print!("{body}");
            if let Some((_, sidecar_body)) = &extra {
                print!("c forbidden set (1-indexed):\n{sidecar_body}");
            }
        }
    }
    Ok(0)
}

pub fn cmd_verify(suite: &str, max_n: usize, trials: usize, seed: u64, json: bool) -> Result<i32> {
    let scale = Scale { max_n, trials, seed };
    let reports = if suite == "all" {
        verify::run_all(&scale)
    } else {
        match verify::run_suite(suite, &scale) {
            Some(report) => vec![report],
            None => bail!(
                "unknown suite '{suite}'; available: all, {}",
                verify::suite_names().join(", ")
            ),
        }
    };
    let all_pass = reports.iter().all(|r| r.passed);
    if json {
        println!("{}", serde_json::to_string_pretty(&reports)?);
    } else {
        for report in &reports {
            if report.passed {
                println!("suite {}: pass ({} trials)", report.suite, report.trials);
            } else {
                println!(
                    "suite {}: FAIL ({} of {} trials)",
                    report.suite,
                    report.failures.len(),
                    report.trials
                );
                if let Some(first) = report.failures.first() {
                    println!("first failure (trial {}, seed {}):", first.trial, first.seed);
                    println!("{}", first.detail);
                }
            }
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}
