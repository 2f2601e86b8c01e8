//! Seeded instance generators. All generators take an explicit RNG so
//! per-trial seeds reproduce instances exactly; the CLI derives its RNG
//! from the `--seed` flag via ChaCha8, which is stable across
//! platforms.

use anyhow::{bail, Result};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

use locopt_core::cnf::{Clause, CnfFormula, Literal};
use locopt_core::graph::{Graph, Matching, MultiGraph, VertexSet};
use locopt_core::reduce::MiseInstance;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph: each pair independently an edge with probability `p`.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated pairs are valid")
}

/// Uniform graph with exactly `m` edges (capped at the pair count).
pub fn gnm(n: usize, m: usize, rng: &mut impl Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = m.min(pairs.len());
    for i in 0..m {
        let j = rng.gen_range(i..pairs.len());
        pairs.swap(i, j);
    }
    Graph::new(n, &pairs[..m]).expect("generated pairs are valid")
}

/// Extension instance: a graph without isolated vertices plus an
/// independent forbidden set of the requested size. Resamples until
/// valid, up to a bounded number of retries.
pub fn mise_instance(
    n: usize,
    p: f64,
    forbidden_size: usize,
    rng: &mut impl Rng,
) -> Result<MiseInstance> {
    for _ in 0..1000 {
        let g = gnp(n, p, rng);
        if (0..n).any(|v| g.degree(v) == 0) {
            continue;
        }
        // Greedy random independent set of the requested size.
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        let mut x = VertexSet::empty();
        for &v in &order {
            if x.len() == forbidden_size {
                break;
            }
            if g.neighbors(v).iter().all(|&u| !x.contains(u)) {
                x.insert(v);
            }
        }
        if x.len() != forbidden_size {
            continue;
        }
        return Ok(MiseInstance::new(g, x)?);
    }
    bail!("no valid extension instance with n={n}, p={p}, |X|={forbidden_size} after 1000 tries");
}

/// Random CNF formula with clause widths in `widths`, no repeated
/// variable inside a clause, and (optionally) only positive literals.
pub fn random_cnf(
    vars: usize,
    clauses: usize,
    widths: std::ops::RangeInclusive<usize>,
    positive: bool,
    rng: &mut impl Rng,
) -> Result<CnfFormula> {
    if *widths.start() == 0 || *widths.end() > vars {
        bail!("clause widths {widths:?} do not fit {vars} variables");
    }
    let mut out = Vec::with_capacity(clauses);
    for _ in 0..clauses {
        let width = rng.gen_range(widths.clone());
        let mut pool: Vec<usize> = (0..vars).collect();
        for i in 0..width {
            let j = rng.gen_range(i..vars);
            pool.swap(i, j);
        }
        let clause = Clause::new(pool[..width].iter().map(|&v| {
            if positive || rng.gen_bool(0.5) {
                Literal::positive(v)
            } else {
                Literal::negative(v)
            }
        }))?;
        out.push(clause);
    }
    Ok(CnfFormula::new(vars, out)?)
}

/// Random multigraph with the given total edge multiplicity spread
/// over uniformly chosen vertex pairs.
pub fn random_multigraph(n: usize, total: u64, rng: &mut impl Rng) -> Result<MultiGraph> {
    if n < 2 && total > 0 {
        bail!("a multigraph with edges needs at least two vertices");
    }
    let mut entries = Vec::new();
    for _ in 0..total {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        entries.push((u, v, 1));
    }
    Ok(MultiGraph::new(n, &entries)?)
}

/// Random matching: a random subset of a randomized greedy pass.
pub fn random_matching(g: &Graph, rng: &mut impl Rng) -> Matching {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in (1..edges.len()).rev() {
        edges.swap(i, rng.gen_range(0..=i));
    }
    let mut covered = vec![false; g.vertex_count()];
    let mut picked = Vec::new();
    for (u, v) in edges {
        if !covered[u] && !covered[v] && rng.gen_bool(0.6) {
            covered[u] = true;
            covered[v] = true;
            picked.push((u, v));
        }
    }
    Matching::new(picked).expect("graph edges are valid pairs")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_seed_deterministic() {
        let g1 = gnp(10, 0.4, &mut rng_from_seed(5));
        let g2 = gnp(10, 0.4, &mut rng_from_seed(5));
        assert_eq!(g1, g2);
        let f1 = random_cnf(6, 10, 2..=3, true, &mut rng_from_seed(9)).unwrap();
        let f2 = random_cnf(6, 10, 2..=3, true, &mut rng_from_seed(9)).unwrap();
        assert_eq!(f1, f2);
    }

    #[test]
    fn mise_instances_are_valid() {
        for seed in 0..20 {
            let mut rng = rng_from_seed(seed);
            let inst = mise_instance(6, 0.5, 2, &mut rng).unwrap();
            assert_eq!(inst.forbidden().len(), 2);
            assert!(inst.graph().is_independent_set(inst.forbidden()).unwrap());
            assert!(!inst.graph().has_isolated_vertex());
        }
    }

    #[test]
    fn random_multigraph_total() {
        let mg = random_multigraph(5, 12, &mut rng_from_seed(3)).unwrap();
        assert_eq!(mg.total_multiplicity(), 12);
    }
}
