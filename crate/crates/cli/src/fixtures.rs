//! The fixture corpus behind the golden tests, regenerated by `plrk gen-fixtures DIR`.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::Result;
use plrk_core::coeffring::{Element, Poly, Rational, Ring};
use plrk_core::cohomology::{prelie_coboundary, Cochain, ComplexKind, Representation};
use plrk_core::crossed::{CrossedExtensionData, CrossedModuleData};
use plrk_core::extensions::ExtensionData;
use plrk_core::gen;
use plrk_core::io::{self, AnyRep, Structure};
use plrk_core::rmatrix::RMatrix;
use plrk_core::structures::{dn, sl2_action};
use plrk_core::twoalg::{crossed_to_strict, sub_adjacent_2, triple_to_skeletal};

use crate::commands::Outcome;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A representation over ℚ whose degree-2 and degree-3 coboundaries are not identically zero.
fn field_rep(seed: u64) -> Representation {
    let mut rng = gen::rng(seed);
    loop {
        let alg = gen::random_field_prelie(&mut rng);
        if alg.rank() < 2 {
            continue;
        }
        let rep = gen::random_representation(&mut rng, &alg);
        let c = gen::random_cochain(&mut rng, ComplexKind::Prelie, 2, rep.ring(), rep.rank(), rep.target_rank(), 0);
        if !prelie_coboundary(&c, &rep).unwrap().is_zero() {
            return rep;
        }
    }
}

fn files() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = vec![];
    let mut put = |name: &str, s: &Structure| out.push((name.to_string(), io::render(s)));

    for n in 1..=3 {
        let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
        put(&format!("d{n}.json"), &Structure::PreLie(dn(&Ring::polynomial(&vars))));
    }
    put("kt.json", &Structure::PreLie(dn(&Ring::polynomial(&["t"]))));
    put("laurent.json", &Structure::PreLie(dn(&Ring::laurent(&["z"]))));
    let ring2 = Ring::polynomial(&["x1", "x2"]);
    let mut d2 = dn(&ring2);
    d2.product[0][1] = Element::from_coeffs(vec![Poly::var(&ring2, 0), Poly::zero(&ring2)]);
    put("d2_mutated.json", &Structure::PreLie(d2));

    put("sl2.json", &Structure::RMatrix(RMatrix::sl2(q(1), q(1), q(2)), sl2_action()));

    let rep = field_rep(101);
    put("rep_field.json", &Structure::Rep(AnyRep::Prelie(rep.clone())));
    put("rep_lie.json", &Structure::Rep(AnyRep::Lie(rep.lie_part())));
    let with_rep = |c: Cochain| Structure::Cochain(c, Some(AnyRep::Prelie(rep.clone())));
    put(
        "cochain_zero.json",
        &with_rep(Cochain::zero(ComplexKind::Prelie, 2, rep.ring(), rep.rank(), rep.target_rank()).unwrap()),
    );
    let mut rng = gen::rng(102);
    put("cocycle.json", &with_rep(gen::random_cocycle_field(&mut rng, &rep, 2)));
    let non = loop {
        let c = gen::random_cochain(&mut rng, ComplexKind::Prelie, 2, rep.ring(), rep.rank(), rep.target_rank(), 0);
        if !prelie_coboundary(&c, &rep).unwrap().is_zero() {
            break c;
        }
    };
    put("noncocycle.json", &with_rep(non));
    let d2rep = Representation::regular(&dn(&ring2));
    let c = gen::random_cochain(&mut rng, ComplexKind::Prelie, 1, &ring2, 2, 2, 2);
    put("cochain_d2.json", &Structure::Cochain(c, Some(AnyRep::Prelie(d2rep))));

    let mut rng = gen::rng(103);
    let ext = gen::random_extension(&mut rng, None);
    put("extension.json", &Structure::Extension(ext.clone()));
    put("ext_rep.json", &Structure::Rep(AnyRep::Prelie(ext.rep.clone())));
    put("ext_kernel.json", &Structure::PreLie(ext.kernel.clone()));
    put("ext_omega.json", &Structure::Cochain(ext.omega.clone(), None));
    put("extension_bad.json", &Structure::Extension(gen::random_extension(&mut rng, Some(2))));
    put("semidirect.json", &Structure::Extension(ExtensionData::semidirect(&rep)));

    let mut rng = gen::rng(104);
    let ideal = gen::random_ideal_crossed_module(&mut rng);
    put("crossed_ideal.json", &Structure::CrossedModule(ideal.clone()));
    let mut bad = ideal.clone();
    let ring = bad.base.ring().clone();
    bad.boundary.set(0, 0, &bad.boundary.entry(0, 0).clone() + &Poly::one(&ring));
    put("crossed_bad.json", &Structure::CrossedModule(bad));
    put("crossed_split.json", &Structure::CrossedExtension(CrossedExtensionData::split(&rep)));
    put("crossed_from_ext.json", &Structure::CrossedExtension(CrossedExtensionData::from_extension(&ext).unwrap()));
    let field = Ring::field();
    let mut f0 = Cochain::zero(ComplexKind::Prelie, 3, &field, 2, 1).unwrap();
    f0.values.insert(vec![0, 1, 0], Element::from_coeffs(vec![Poly::from_int(&field, 1)]));
    put("crossed_realizing.json", &Structure::CrossedExtension(CrossedExtensionData::realizing(&f0).unwrap()));
    put("crossed_trivial.json", &Structure::CrossedModule(CrossedModuleData::trivial(&rep)));

    let strict = crossed_to_strict(&ideal).unwrap();
    put("two_strict.json", &Structure::PreLie2(strict.clone()));
    let m3 = gen::random_cocycle_field(&mut gen::rng(105), &rep, 3);
    let skeletal = triple_to_skeletal(&rep, &m3).unwrap();
    put("two_skeletal.json", &Structure::PreLie2(skeletal.clone()));
    put("triple.json", &with_rep(m3));
    put("lie2.json", &Structure::Lie2(sub_adjacent_2(&skeletal).unwrap()));
    let mut broken = strict;
    let u = broken.rep.target.basis_element(0);
    let key = broken.m3.values.keys().next().unwrap().clone();
    broken.m3.values.insert(key, u);
    put("two_bad.json", &Structure::PreLie2(broken));

    out.push(("malformed.json".into(), "{\"kind\": \"prelie_rinehart\", \"ring\": \n".into()));
    out.push(("unknown_kind.json".into(), "{\"kind\": \"quux\"}\n".into()));
    out
}

/// `name expected-exit args...`, one invocation per line.
fn manifest() -> String {
    let mut m = String::new();
    let mut add = |name: &str, code: u8, args: &str| writeln!(m, "{name} {code} {args}").unwrap();
    for f in ["d1", "d2", "d3", "kt", "laurent"] {
        add(&format!("verify_{f}"), 0, &format!("verify {f}.json"));
    }
    add("verify_d2_json", 0, "--json verify d2.json");
    add("verify_d2_mutated", 1, "verify d2_mutated.json");
    add("verify_d2_mutated_json", 1, "--json verify d2_mutated.json");
    add("verify_malformed", 2, "verify malformed.json");
    add("verify_unknown_kind", 2, "verify unknown_kind.json");
    add("verify_missing", 2, "verify missing.json");

    add("verify_sl2", 0, "verify sl2.json");
    let mut grid: Vec<(i64, i64, i64)> = vec![];
    for a in -1..=1 {
        for b in -1..=1 {
            for c in -1..=1 {
                grid.push((a, b, c));
            }
        }
    }
    grid.extend([(1, 1, 2), (1, 1, -2), (-1, -1, 2), (2, 2, 2)]);
    for (a, b, c) in grid {
        let code = if c * c == 4 * a * b { 0 } else { 1 };
        add(&format!("rmatrix_{a}_{b}_{c}").replace('-', "m"), code, &format!("rmatrix sl2.json --r {a},{b},{c}"));
    }
    add("rmatrix_json_1_1_2", 0, "--json rmatrix sl2.json --r 1,1,2");
    add("rmatrix_json_0_0_1", 1, "--json rmatrix sl2.json --r 0,0,1");
    add("rmatrix_bad_r", 2, "rmatrix sl2.json --r 1,x,2");
    add("rmatrix_short_r", 2, "rmatrix sl2.json --r 1,1");

    add("verify_rep_field", 0, "verify rep_field.json");
    add("cohomology_field", 0, "cohomology rep_field.json --max-degree 3");
    add("cohomology_field_json", 0, "--json cohomology rep_field.json --max-degree 3");
    add("cohomology_lie", 0, "cohomology rep_lie.json --max-degree 3");
    add("cohomology_polynomial", 2, "cohomology cochain_d2.json");
    add("delta_zero", 0, "delta cochain_zero.json");
    add("delta_d2", 0, "delta cochain_d2.json");
    add("delta_no_rep", 2, "delta ext_omega.json");
    add("cocycle_check_closed", 0, "cocycle-check cocycle.json");
    add("cocycle_check_open", 1, "cocycle-check noncocycle.json");
    add("cocycle_check_open_json", 1, "--json cocycle-check noncocycle.json");

    add("verify_extension", 0, "verify extension.json");
    add("verify_extension_bad", 1, "verify extension_bad.json");
    add("extend_file", 0, "extend extension.json");
    add("extend_file_json", 0, "--json extend extension.json");
    add("extend_flags", 0, "extend --rep ext_rep.json --kernel ext_kernel.json --cocycle ext_omega.json");
    add("extend_bad", 1, "extend extension_bad.json");
    add("extend_semidirect", 0, "extend semidirect.json");
    add("extend_missing_args", 2, "extend --rep ext_rep.json");

    add("crossed_verify_ideal", 0, "crossed verify crossed_ideal.json");
    add("crossed_verify_bad", 1, "crossed verify crossed_bad.json");
    add("crossed_verify_trivial", 0, "crossed verify crossed_trivial.json");
    add("crossed_total_ideal", 0, "crossed total crossed_ideal.json");
    add("crossed_total_bad", 1, "crossed total crossed_bad.json");
    for f in ["split", "from_ext", "realizing"] {
        add(&format!("crossed_verify_{f}"), 0, &format!("crossed verify crossed_{f}.json"));
        add(&format!("crossed_cocycle3_{f}"), 0, &format!("crossed cocycle3 crossed_{f}.json"));
    }
    add("crossed_cocycle3_module", 2, "crossed cocycle3 crossed_ideal.json");

    add("verify_two_strict", 0, "verify two_strict.json");
    add("verify_two_skeletal", 0, "verify two_skeletal.json");
    add("verify_two_bad", 1, "verify two_bad.json");
    add("verify_lie2", 0, "verify lie2.json");
    add("twoalg_to_crossed", 0, "twoalg two_strict.json --to-crossed");
    add("twoalg_from_crossed", 0, "twoalg crossed_ideal.json --from-crossed");
    add("twoalg_to_crossed_not_strict", 1, "twoalg two_skeletal.json --to-crossed");
    add("twoalg_to_triple", 0, "twoalg two_skeletal.json --to-triple");
    add("twoalg_from_triple", 0, "twoalg triple.json --from-triple");
    add("twoalg_sub_adjacent", 0, "twoalg two_skeletal.json --sub-adjacent");
    add("twoalg_bad", 1, "twoalg two_bad.json --to-crossed");
    add("twoalg_no_direction", 2, "twoalg two_strict.json");

    add("fuzz_seed_0", 0, "fuzz --seed 0 --cases 3");
    m
}

pub fn write_all(dir: &Path) -> Result<Outcome> {
    std::fs::create_dir_all(dir)?;
    let files = files();
    for (name, text) in &files {
        std::fs::write(dir.join(name), text)?;
    }
    std::fs::write(dir.join("manifest.txt"), manifest())?;
    Ok(Outcome { text: format!("wrote {} fixtures and manifest.txt to {}\n", files.len(), dir.display()), code: 0 })
}
