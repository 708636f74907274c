use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use plrk_core::coeffring::{parse_rational, Poly, Ring};
use plrk_core::cohomology::{coboundary, cocycle_check as closed, cohomology_dims_field, ComplexKind};
use plrk_core::crossed::{three_cocycle_from_extension, total_algebra_unchecked, verify_crossed_module};
use plrk_core::extensions::{build_extension, check_extension_conditions, ExtensionData};
use plrk_core::io::{self, AnyRep, Structure};
use plrk_core::rmatrix::{cybe_residual, induced_poisson, omega1_prelie, RMatrix};
use plrk_core::structures::{ActionData, LieAlgebraFD, PreLieRinehart};
use plrk_core::twoalg::{
    crossed_to_strict, skeletal_to_triple, strict_to_crossed, sub_adjacent_2, triple_to_skeletal, verify_lie2,
    verify_prelie2,
};
use plrk_core::Report;
use serde_json::json;

use crate::{CrossedAction, ExtendArgs, TwoalgArgs};

pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

pub fn load(path: &Path) -> Result<Structure> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn code(report: &Report) -> u8 {
    if report.passed() {
        0
    } else {
        1
    }
}

fn report_outcome(kind: &str, report: Report, json: bool) -> Outcome {
    let code = code(&report);
    let text = if json {
        io::render_value(&json!({ "kind": kind, "report": report.finalized() }))
    } else {
        format!("{kind}: {report}")
    };
    Outcome { text, code }
}

fn algebra_and_rep(rep: &AnyRep) -> Report {
    let mut report = Report::new();
    match rep {
        AnyRep::Prelie(r) => {
            report.absorb("algebra.", r.algebra.verify());
            report.absorb("rep.", r.check());
        }
        AnyRep::Lie(r) => {
            report.absorb("algebra.", r.algebra.verify());
            report.absorb("rep.", r.check());
        }
    }
    report
}

/// The report `verify` prints for a structure.
pub fn verification(s: &Structure) -> Report {
    match s {
        Structure::PreLie(a) => a.verify(),
        Structure::Lie(a) => a.verify(),
        Structure::Rep(r) => algebra_and_rep(r),
        Structure::Cochain(_, Some(r)) => algebra_and_rep(r),
        Structure::Cochain(_, None) => {
            let mut report = Report::new();
            report.pass("shape");
            report
        }
        Structure::Extension(x) => {
            let mut report = check_extension_conditions(x);
            if report.passed() {
                report.absorb("total.", build_extension(x).total.verify());
            }
            report
        }
        Structure::CrossedModule(cm) => verify_crossed_module(cm),
        Structure::CrossedExtension(xd) => xd.check(),
        Structure::PreLie2(x) => verify_prelie2(x),
        Structure::Lie2(x) => verify_lie2(x),
        Structure::RMatrix(r, a) => rmatrix_report(r, a).map(|(_, rep)| rep).unwrap_or_else(|e| {
            let mut report = Report::new();
            report.fail("action", vec![], e.to_string());
            report
        }),
    }
}

pub fn verify(path: &Path, json: bool) -> Result<Outcome> {
    let s = load(path)?;
    Ok(report_outcome(s.kind(), verification(&s), json))
}

fn rmatrix_report(r: &RMatrix, action: &ActionData<LieAlgebraFD>) -> plrk_core::Result<(PreLieRinehart, Report)> {
    let residual = cybe_residual(r);
    let mut report = Report::new();
    report.check(
        "cybe_residual",
        residual.coeffs.iter().map(|((i, j, k), c)| (vec![*i, *j, *k], Poly::constant(&Ring::field(), c.clone()))),
    );
    let (omega1, checks) = omega1_prelie(r, action)?;
    report.absorb("omega1.", checks);
    Ok((omega1, report))
}

pub fn rmatrix(path: &Path, r: Option<&str>, json: bool) -> Result<Outcome> {
    let Structure::RMatrix(mut rm, action) = load(path)? else { bail!("expected an rmatrix_input file") };
    if let Some(r) = r {
        let upper = r.split(',').map(|s| parse_rational(s.trim())).collect::<plrk_core::Result<Vec<_>>>()?;
        rm = RMatrix::from_upper(rm.algebra, &upper)?;
    }
    let residual = cybe_residual(&rm);
    let poisson = induced_poisson(&rm, &action)?;
    let (omega1, report) = rmatrix_report(&rm, &action)?;
    let code = code(&report);
    let vars = &poisson.ring.vars;
    let n = vars.len();
    let upper: Vec<String> = (0..rm.algebra.dim)
        .flat_map(|i| (i + 1..rm.algebra.dim).map(move |j| (i, j)))
        .map(|(i, j)| rm.coeffs[i][j].to_string())
        .collect();
    if json {
        let res: Vec<_> = residual.coeffs.iter().map(|((i, j, k), c)| json!([i, j, k, c.to_string()])).collect();
        let table: Vec<Vec<String>> =
            poisson.table.iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect();
        let out = json!({
            "r": upper,
            "cybe_residual": res,
            "poisson_table": table,
            "omega1": io::encode(&Structure::PreLie(omega1)),
            "report": report.finalized(),
        });
        return Ok(Outcome { text: io::render_value(&out), code });
    }
    let mut text = String::new();
    writeln!(text, "r = ({})", upper.join(", "))?;
    if residual.is_zero() {
        writeln!(text, "cybe_residual: 0")?;
    } else {
        let terms: Vec<String> =
            residual.coeffs.iter().map(|((i, j, k), c)| format!("{c}*e{}^e{}^e{}", i + 1, j + 1, k + 1)).collect();
        writeln!(text, "cybe_residual: {}", terms.join(" + "))?;
    }
    for i in 0..n {
        for j in i + 1..n {
            writeln!(text, "{{{}, {}}} = {}", vars[i], vars[j], poisson.table[i][j])?;
        }
    }
    write!(text, "omega1: {report}")?;
    Ok(Outcome { text, code })
}

fn rep_of(s: Structure) -> Result<AnyRep> {
    match s {
        Structure::Rep(r) => Ok(r),
        Structure::Cochain(_, Some(r)) => Ok(r),
        other => bail!("expected a representation, found {}", other.kind()),
    }
}

pub fn cohomology(path: &Path, max_degree: usize, json: bool) -> Result<Outcome> {
    let rep = rep_of(load(path)?)?;
    if !rep.ring().is_field() {
        bail!("cohomology dimensions are computed over the ground field only");
    }
    let report = algebra_and_rep(&rep);
    if !report.passed() {
        return Ok(report_outcome("representation", report, json));
    }
    let dims = cohomology_dims_field(rep.as_ref(), max_degree)?;
    let complex = match rep {
        AnyRep::Prelie(_) => "prelie",
        AnyRep::Lie(_) => "lie",
    };
    let text = if json {
        io::render_value(&json!({ "complex": complex, "degrees": (1..=max_degree).collect::<Vec<_>>(), "dims": dims }))
    } else {
        let parts: Vec<String> = dims.iter().enumerate().map(|(i, d)| format!("H^{} = {d}", i + 1)).collect();
        format!("{complex}: {}\n", parts.join(", "))
    };
    Ok(Outcome::ok(text))
}

fn cochain_with_rep(path: &Path) -> Result<(plrk_core::cohomology::Cochain, AnyRep)> {
    match load(path)? {
        Structure::Cochain(c, Some(r)) => Ok((c, r)),
        Structure::Cochain(_, None) => bail!("the cochain file carries no representation"),
        other => bail!("expected a cochain, found {}", other.kind()),
    }
}

pub fn delta(path: &Path) -> Result<Outcome> {
    let (c, rep) = cochain_with_rep(path)?;
    let d = coboundary(&c, rep.as_ref())?;
    Ok(Outcome::ok(io::render(&Structure::Cochain(d, Some(rep)))))
}

pub fn cocycle_check(path: &Path, json: bool) -> Result<Outcome> {
    let (c, rep) = cochain_with_rep(path)?;
    Ok(report_outcome("cochain", closed(&c, rep.as_ref())?, json))
}

fn extension_input(args: &ExtendArgs) -> Result<ExtensionData> {
    if let Some(file) = &args.file {
        if args.rep.is_some() || args.cocycle.is_some() || args.kernel.is_some() || args.algebra.is_some() {
            bail!("give either an extension file or --rep/--cocycle, not both");
        }
        let Structure::Extension(x) = load(file)? else { bail!("expected an extension file") };
        return Ok(x);
    }
    let (Some(rep), Some(cocycle)) = (&args.rep, &args.cocycle) else {
        bail!("extend needs an extension file or both --rep and --cocycle");
    };
    let AnyRep::Prelie(rep) = rep_of(load(rep)?)? else { bail!("--rep must represent a pre-Lie-Rinehart algebra") };
    let omega = match load(cocycle)? {
        Structure::Cochain(c, _) => c,
        other => bail!("--cocycle must be a cochain, found {}", other.kind()),
    };
    if let Some(a) = &args.algebra {
        let Structure::PreLie(q) = load(a)? else { bail!("--algebra must be a prelie_rinehart file") };
        if q != rep.algebra {
            bail!("--algebra differs from the algebra of --rep");
        }
    }
    let kernel = match &args.kernel {
        Some(k) => {
            let Structure::PreLie(k) = load(k)? else { bail!("--kernel must be a prelie_rinehart file") };
            k
        }
        None => PreLieRinehart::zero(rep.target.clone()),
    };
    Ok(ExtensionData::new(kernel, rep, omega)?)
}

pub fn extend(args: &ExtendArgs, json: bool) -> Result<Outcome> {
    let x = extension_input(args)?;
    let report = verification(&Structure::Extension(x.clone()));
    let code = code(&report);
    let total = Structure::PreLie(build_extension(&x).total);
    let text = if json {
        io::render_value(&json!({ "report": report.finalized(), "total": io::encode(&total) }))
    } else {
        format!("extension: {report}\n{}", io::render(&total))
    };
    Ok(Outcome { text, code })
}

pub fn crossed(action: CrossedAction, path: &Path, json: bool) -> Result<Outcome> {
    let s = load(path)?;
    let (cm, xd) = match &s {
        Structure::CrossedModule(cm) => (cm.clone(), None),
        Structure::CrossedExtension(xd) => (xd.cm.clone(), Some(xd)),
        other => bail!("expected a crossed module or crossed extension, found {}", other.kind()),
    };
    match action {
        CrossedAction::Verify => Ok(report_outcome(s.kind(), verification(&s), json)),
        CrossedAction::Total => {
            let report = verify_crossed_module(&cm);
            if !report.passed() {
                return Ok(report_outcome(s.kind(), report, json));
            }
            Ok(Outcome::ok(io::render(&Structure::PreLie(total_algebra_unchecked(&cm)))))
        }
        CrossedAction::Cocycle3 => {
            let xd = xd.ok_or_else(|| anyhow!("cocycle3 needs a crossed extension"))?;
            let report = xd.check();
            if !report.passed() {
                return Ok(report_outcome(s.kind(), report, json));
            }
            let (f, report) = three_cocycle_from_extension(xd)?;
            if !report.passed() {
                return Ok(report_outcome("cochain", report, json));
            }
            let rep = xd.induced_representation()?;
            Ok(Outcome::ok(io::render(&Structure::Cochain(f, Some(AnyRep::Prelie(rep))))))
        }
    }
}

pub fn twoalg(args: &TwoalgArgs, json: bool) -> Result<Outcome> {
    let s = load(&args.file)?;
    let fail = |kind: &str, report: Report| Ok(report_outcome(kind, report, json));
    if args.from_crossed {
        let Structure::CrossedModule(cm) = s else { bail!("--from-crossed needs a crossed_module file") };
        let report = verify_crossed_module(&cm);
        if !report.passed() {
            return fail("crossed_module", report);
        }
        return Ok(Outcome::ok(io::render(&Structure::PreLie2(crossed_to_strict(&cm)?))));
    }
    if args.from_triple {
        let Structure::Cochain(m3, Some(AnyRep::Prelie(rep))) = s else {
            bail!("--from-triple needs a pre-Lie cochain file carrying its representation")
        };
        if m3.kind != ComplexKind::Prelie || m3.degree != 3 {
            bail!("--from-triple needs a degree-3 pre-Lie cochain");
        }
        let report = algebra_and_rep(&AnyRep::Prelie(rep.clone()));
        if !report.passed() {
            return fail("representation", report);
        }
        return Ok(Outcome::ok(io::render(&Structure::PreLie2(triple_to_skeletal(&rep, &m3)?))));
    }
    let Structure::PreLie2(x) = s else { bail!("expected a pre-Lie two_algebra file") };
    let mut report = verify_prelie2(&x);
    if args.to_crossed {
        report.check("strict", x.m3.values.iter().map(|(t, v)| (t.clone(), v.clone())));
    } else if args.to_triple {
        report.check("skeletal", (0..x.m1.cols()).map(|c| (vec![c], x.m1.column(c))));
    }
    if !report.passed() {
        return fail("two_algebra", report);
    }
    let out = if args.to_crossed {
        Structure::CrossedModule(strict_to_crossed(&x)?)
    } else if args.to_triple {
        let (_, rep, m3) = skeletal_to_triple(&x)?;
        Structure::Cochain(m3, Some(AnyRep::Prelie(rep)))
    } else {
        Structure::Lie2(sub_adjacent_2(&x)?)
    };
    Ok(Outcome::ok(io::render(&out)))
}
