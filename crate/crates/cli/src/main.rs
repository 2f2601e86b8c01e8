//! `locopt` — local-search toolkit for unweighted combinatorial
//! problems: check local optimality, hill-climb, enumerate all local
//! optima, decide two k-maximal matchings, build gadget instances and
//! map solutions across them, generate seeded instances, and run the
//! verification suites.
//!
//! Exit codes: 0 = yes / success, 1 = no, 2 = error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use locopt_cli::commands::{self, GenModel, MapDirection, ReductionName};
use locopt_core::climb::ProblemKind;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProblemArg {
    Is,
    Clique,
    Vc,
    Ds,
    Fvs,
    Matching,
    Cut,
    Sat,
    Naesat,
}

impl From<ProblemArg> for ProblemKind {
    fn from(p: ProblemArg) -> Self {
        match p {
            ProblemArg::Is => ProblemKind::IndependentSet,
            ProblemArg::Clique => ProblemKind::Clique,
            ProblemArg::Vc => ProblemKind::VertexCover,
            ProblemArg::Ds => ProblemKind::DominatingSet,
            ProblemArg::Fvs => ProblemKind::FeedbackVertexSet,
            ProblemArg::Matching => ProblemKind::Matching,
            ProblemArg::Cut => ProblemKind::MaxCut,
            ProblemArg::Sat => ProblemKind::MaxSat,
            ProblemArg::Naesat => ProblemKind::MaxNaeSat,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReductionArg {
    H,
    Blowup,
    DomFvs,
    Naesat,
    Positivize,
    Maxcut,
    Max2sat,
}

impl From<ReductionArg> for ReductionName {
    fn from(r: ReductionArg) -> Self {
        match r {
            ReductionArg::H => ReductionName::H,
            ReductionArg::Blowup => ReductionName::Blowup,
            ReductionArg::DomFvs => ReductionName::DomFvs,
            ReductionArg::Naesat => ReductionName::Naesat,
            ReductionArg::Positivize => ReductionName::Positivize,
            ReductionArg::Maxcut => ReductionName::Maxcut,
            ReductionArg::Max2sat => ReductionName::Max2Sat,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DirectionArg {
    Lift,
    Project,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    Gnp,
    Mise,
    Cnf,
}

#[derive(Parser)]
#[command(name = "locopt", version, about = "Local-search toolkit for unweighted problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a solution for local optimality; print a witness move if
    /// one exists (exit 0 = locally optimal, 1 = improvable).
    Check {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        /// Swap level for the subset problems (ignored by cut/sat).
        #[arg(short, long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        solution: PathBuf,
        #[arg(long)]
        json: bool,
        /// Lift the k guardrail.
        #[arg(long)]
        force: bool,
    },
    /// Hill-climb to a local optimum from the canonical, given, or
    /// seeded random start.
    Climb {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(short, long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        instance: PathBuf,
        /// Start solution file (mutually exclusive with --seed).
        #[arg(long)]
        start: Option<PathBuf>,
        /// Seed for a random feasible start.
        #[arg(long)]
        seed: Option<u64>,
        /// Keep and print the move trace.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all local optima in canonical order.
    Enumerate {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(short, long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        instance: PathBuf,
        /// Stop after this many optima.
        #[arg(long)]
        limit: Option<usize>,
        /// Decision mode: exit 0 iff at least this many optima exist.
        #[arg(long)]
        at_least: Option<usize>,
        /// Enumerate ordered cuts (cut problem only).
        #[arg(long)]
        ordered: bool,
        /// Raise the enumeration size budget to this many units.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Remove the enumeration size budget entirely.
        #[arg(long)]
        force: bool,
    },
    /// Decide whether the graph has at least two k-maximal matchings
    /// and print a witness pair (exit 0 = two exist, 1 = unique).
    TwoMatchings {
        #[arg(short, long)]
        k: usize,
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        force: bool,
    },
    /// Build a gadget instance and its solution map.
    Reduce {
        #[arg(long, value_enum)]
        name: ReductionArg,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        cnf: Option<PathBuf>,
        #[arg(long)]
        multigraph: Option<PathBuf>,
        /// Forbidden vertex set file for the extension-based builders.
        #[arg(long)]
        forbidden: Option<PathBuf>,
        /// Target swap level for blowup / dom-fvs.
        #[arg(long)]
        target_k: Option<usize>,
        /// Output prefix: writes PREFIX.graph or PREFIX.cnf plus
        /// PREFIX.map.json.
        #[arg(long)]
        out: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply a solution map (lift: source to target, project: target
    /// to source) and verify the image before writing it.
    Map {
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// Gadget map JSON produced by `reduce`.
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        solution: PathBuf,
        /// Source-side instance file (for project verification).
        #[arg(long)]
        from: Option<PathBuf>,
        /// Built-instance file (for lift verification and the maps
        /// that check their input against the built instance).
        #[arg(long)]
        to: Option<PathBuf>,
        /// Write the image here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded random instance.
    Gen {
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Vertex count (gnp / mise).
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Edge probability (gnp / mise).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Forbidden-set size (mise).
        #[arg(long, default_value_t = 0)]
        forbidden_size: usize,
        /// Variable count (cnf).
        #[arg(long, default_value_t = 6)]
        vars: usize,
        /// Clause count (cnf).
        #[arg(long, default_value_t = 12)]
        clauses: usize,
        #[arg(long, default_value_t = 2)]
        width_min: usize,
        #[arg(long, default_value_t = 3)]
        width_max: usize,
        /// Only positive literals (cnf).
        #[arg(long)]
        positive: bool,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run the property-verification suites (exit 0 iff all pass).
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the verification suite names.
    Suites,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { problem, k, instance, solution, json, force } => {
            commands::cmd_check(problem.into(), k, &instance, &solution, json, force)
        }
        Command::Climb { problem, k, instance, start, seed, trace, json } => {
            commands::cmd_climb(
                problem.into(),
                k,
                &instance,
                start.as_deref(),
                seed,
                trace,
                json,
            )
        }
        Command::Enumerate {
            problem,
            k,
            instance,
            limit,
            at_least,
            ordered,
            max_n,
            json,
            force,
        } => commands::cmd_enumerate(
            problem.into(),
            k,
            &instance,
            limit,
            at_least,
            ordered,
            max_n,
            json,
            force,
        ),
        Command::TwoMatchings { k, instance, json, force } => {
            commands::cmd_two_matchings(k, &instance, json, force)
        }
        Command::Reduce { name, graph, cnf, multigraph, forbidden, target_k, out, json } => {
            commands::cmd_reduce(
                name.into(),
                graph.as_deref(),
                cnf.as_deref(),
                multigraph.as_deref(),
                forbidden.as_deref(),
                target_k,
                &out,
                json,
            )
        }
        Command::Map { direction, map, solution, from, to, out, json } => commands::cmd_map(
            match direction {
                DirectionArg::Lift => MapDirection::Lift,
                DirectionArg::Project => MapDirection::Project,
            },
            &map,
            &solution,
            from.as_deref(),
            to.as_deref(),
            out.as_deref(),
            json,
        ),
        Command::Gen {
            model,
            n,
            p,
            forbidden_size,
            vars,
            clauses,
            width_min,
            width_max,
            positive,
            seed,
            out,
            json,
        } => commands::cmd_gen(
            match model {
                ModelArg::Gnp => GenModel::Gnp,
                ModelArg::Mise => GenModel::Mise,
                ModelArg::Cnf => GenModel::Cnf,
            },
            n,
            p,
            forbidden_size,
            vars,
            clauses,
            width_min,
            width_max,
            positive,
            seed,
            out.as_deref(),
            json,
        ),
        Command::Verify { suite, max_n, trials, seed, json } => {
            commands::cmd_verify(&suite, max_n, trials, seed, json)
        }
        Command::Suites => {
            for name in locopt_cli::verify::suite_names() {
                println!("{name}");
            }
            Ok(0)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
