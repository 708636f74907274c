use anyhow::{Context, Result};
use plrk_core::cohomology::{complex_iso_h, induced_rep_on_c1, lie_coboundary, prelie_coboundary, ComplexKind};
use plrk_core::crossed::three_cocycle_from_extension;
use plrk_core::freeprelie::{enumerate_trees, TreePoly};
use plrk_core::gen;
use plrk_core::twoalg::{crossed_to_strict, strict_to_crossed};
use plrk_core::Report;
use rand::Rng;
use serde_json::json;

use crate::commands::Outcome;

/// The seed actually used: `PLRK_SEED` wins over `--seed`.
pub fn effective_seed(flag: u64) -> Result<u64> {
    match std::env::var("PLRK_SEED") {
        Ok(s) => s.trim().parse().with_context(|| format!("PLRK_SEED={s:?} is not an unsigned integer")),
        Err(_) => Ok(flag),
    }
}

pub fn run(seed: u64, cases: usize, json: bool) -> Result<Outcome> {
    let seed = effective_seed(seed)?;
    let mut rng = gen::rng(seed);
    let mut report = Report::new();

    let mut square = vec![];
    let mut lie_square = vec![];
    let mut chain = vec![];
    for k in 0..cases {
        let alg = gen::random_prelie_rinehart(&mut rng);
        let rep = gen::random_representation(&mut rng, &alg);
        let deg = rng.gen_range(1..=2);
        let phi = gen::random_cochain(&mut rng, ComplexKind::Prelie, deg, rep.ring(), rep.rank(), rep.target_rank(), 2);
        let dd = prelie_coboundary(&prelie_coboundary(&phi, &rep)?, &rep)?;
        square.push((vec![k], dd.is_zero()));
        let lie = rep.lie_part();
        let w = gen::random_cochain(&mut rng, ComplexKind::Lie, deg, rep.ring(), rep.rank(), rep.target_rank(), 2);
        lie_square.push((vec![k], lie_coboundary(&lie_coboundary(&w, &lie)?, &lie)?.is_zero()));
        let c1 = induced_rep_on_c1(&rep)?;
        let psi = gen::random_cochain(&mut rng, ComplexKind::Lie, deg - 1, rep.ring(), rep.rank(), c1.target_rank(), 1);
        let lhs = complex_iso_h(&lie_coboundary(&psi, &c1)?, &rep)?;
        chain.push((vec![k], lhs == prelie_coboundary(&complex_iso_h(&psi, &rep)?, &rep)?));
    }
    report.check("delta_squared", square);
    report.check("d_squared", lie_square);
    report.check("chain_map", chain);

    let mut crossed = vec![];
    let mut strict = vec![];
    for k in 0..cases {
        let xd = gen::random_crossed_extension(&mut rng);
        let ok = xd.check().passed() && three_cocycle_from_extension(&xd).map(|(_, r)| r.passed()).unwrap_or(false);
        crossed.push((vec![k], ok));
        let cm = gen::random_crossed_module(&mut rng);
        let back = crossed_to_strict(&cm).and_then(|x| strict_to_crossed(&x));
        strict.push((vec![k], back.map(|b| b == cm).unwrap_or(false)));
    }
    report.check("crossed_extension_cocycle", crossed);
    report.check("strict_round_trip", strict);

    let trees: Vec<_> = (1..=2).flat_map(|n| enumerate_trees(2, n)).collect();
    let random_poly = |rng: &mut gen::SeededRng| {
        let mut p = TreePoly::zero(6);
        for _ in 0..3 {
            let t = trees[rng.gen_range(0..trees.len())].clone();
            p.add_term(t, gen::small_rational(rng));
        }
        p
    };
    let mut assoc = vec![];
    for k in 0..cases {
        let (x, y, z) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
        let a = |a: &TreePoly, b: &TreePoly| a.graft(&b.graft(&z)).sub(&a.graft(b).graft(&z));
        assoc.push((vec![k], a(&x, &y) == a(&y, &x)));
    }
    report.check("free_prelie_associator", assoc);

    let code = if report.passed() { 0 } else { 1 };
    let text = if json {
        plrk_core::io::render_value(&json!({ "seed": seed, "cases": cases, "report": report.finalized() }))
    } else {
        format!("fuzz seed {seed}, {cases} cases: {report}")
    };
    Ok(Outcome { text, code })
}
