//! `atriv`: checks, classifies and transforms truncated operads and graded
//! algebras stored as JSON structure constants.

mod output;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use atriv_core::format::{self, Object};
use atriv_core::functors::{self, StructureDiff};
use atriv_core::series::{as_coefficients, gk_estimate, gk_heuristic, rational_fit};
use atriv_core::symgroup::verify_sign_lemma;
use atriv_core::{algebra, catalog, linalg, Field, GradedAlgebra, TruncatedOperad, WindowedSubset};
use clap::{Parser, Subcommand, ValueEnum};

use output::Out;

#[derive(Parser)]
#[command(name = "atriv", version, about = "Exact computations with truncated operads and Perm-type algebras")]
struct Cli {
    /// Output style. `machine` prints stable key=value records.
    #[arg(long, value_enum, global = true, default_value_t = Style::Text)]
    format: Style,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Style {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Check operad axioms, or an algebra against one of the algebra rules.
    Check {
        /// Input file, `-` or nothing for stdin.
        file: Option<PathBuf>,
        /// Rule set for algebras. Defaults to pgperm for typed algebras
        /// and gperm otherwise.
        #[arg(long = "as", value_enum)]
        rules: Option<AlgebraRules>,
    },
    /// Symmetry type of each arity and the global flags.
    Classify { file: Option<PathBuf> },
    /// Apply one of the functors and write the result.
    Functor {
        #[arg(value_enum)]
        name: FunctorName,
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare an object with its image under both functors of a pair.
    Roundtrip {
        file: Option<PathBuf>,
        /// `gperm`: GPerm algebras and Sigma-trivial operads.
        /// `pgperm`: typed PGPerm algebras and A-trivial operads.
        #[arg(long, value_enum)]
        pair: Pair,
    },
    /// Hilbert series coefficients, with an optional rational fit.
    Hilbert {
        file: Option<PathBuf>,
        /// Largest numerator/denominator degree to try.
        #[arg(long)]
        fit: Option<usize>,
        /// Estimate the GK dimension from the fit.
        #[arg(long)]
        gk: bool,
    },
    /// Torsion dimensions per arity (or degree) inside the truncation.
    Torsion {
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long)]
        window: usize,
    },
    /// Which basis elements of an operad are central.
    Center { file: Option<PathBuf> },
    /// Emit a catalog object.
    Catalog {
        #[command(subcommand)]
        object: CatalogObject,
        /// Field, `Q` or `Fp:<p>`.
        #[arg(long, global = true, default_value = "Q")]
        field: String,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Exhaustive check of the block-permutation sign identities.
    Signlemma {
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraRules {
    Assoc,
    Gperm,
    Pgperm,
    Pgc,
    GradedCommutative,
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctorName {
    Forget,
    GSigmaTriv,
    #[value(name = "g-a-triv")]
    GATriv,
    #[value(name = "f-a-triv")]
    FATriv,
    GSigmaSign,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pair {
    Gperm,
    Pgperm,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    L,
    R,
    Br,
}

#[derive(Subcommand)]
enum CatalogObject {
    /// Nonunital commutative operad.
    Com {
        #[arg(long, default_value_t = 7)]
        max_arity: usize,
    },
    /// Odd-arity operad with the sign action.
    Ope {
        #[arg(long, default_value_t = 7)]
        max_arity: usize,
    },
    /// Free graded-commutative algebra on `a` odd degree-1 and `b` even
    /// degree-2 generators, typed odd.
    Massey {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Algebra with basis x_{i,s}, s <= i+1, where only x_{i,1} multiplies.
    Shift {
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// k<x,y>/(xy, y^2) with both generators in degree 1.
    Xy {
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Free GPerm algebra on generators of the given degrees.
    FreeGperm {
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// k[x] with deg x = `degree`.
    Polynomial {
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Type every positive-degree basis element odd.
        #[arg(long)]
        odd: bool,
    },
}

fn read_input(file: &Option<PathBuf>) -> anyhow::Result<Object> {
    let (text, name) = match file {
        Some(p) if p != Path::new("-") => (
            fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?,
            p.display().to_string(),
        ),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("cannot read stdin")?;
            (s, "<stdin>".to_string())
        }
    };
    format::object_from_json(&text).with_context(|| format!("in {name}"))
}

fn operad_input(file: &Option<PathBuf>) -> anyhow::Result<TruncatedOperad> {
    match read_input(file)? {
        Object::Operad(p) => Ok(p),
        Object::Algebra(_) => Err(atriv_core::Error::WrongKind {
            expected: "operad".into(),
            found: "algebra".into(),
        }
        .into()),
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))
        }
        _ => {
            // a closed pipe downstream is not our error
            let _ = io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn report_violations(out: &Out, kind: &str, lines: Vec<(String, String)>) -> u8 {
    for (rule, text) in &lines {
        out.record(&[("violation", rule.clone()), ("detail", text.clone())]);
        out.text(format!("  {text}"));
    }
    let ok = lines.is_empty();
    out.record(&[
        ("status", if ok { "clean" } else { "violations" }.into()),
        ("count", lines.len().to_string()),
    ]);
    out.text(format!(
        "{kind}: {} ({} violations)",
        out.verdict(ok, "clean", "FAILED"),
        lines.len()
    ));
    u8::from(!ok)
}

fn check(out: &Out, file: &Option<PathBuf>, rules: Option<AlgebraRules>) -> anyhow::Result<u8> {
    match read_input(file)? {
        Object::Operad(p) => {
            if rules.is_some() {
                bail!("--as applies to algebras only");
            }
            let v = p.check_axioms();
            Ok(report_violations(
                out,
                "operad axioms",
                v.iter().map(|x| (x.axiom.name().to_string(), x.to_string())).collect(),
            ))
        }
        Object::Algebra(a) => {
            let rules = rules.unwrap_or(if a.is_typed() { AlgebraRules::Pgperm } else { AlgebraRules::Gperm });
            let (label, v) = match rules {
                AlgebraRules::Assoc => ("associative algebra", a.check_associativity()),
                AlgebraRules::Gperm => ("GPerm", a.check_gperm()),
                AlgebraRules::Pgperm => ("PGPerm", a.check_pgperm()?),
                AlgebraRules::Pgc => ("PGC", a.check_pgc()?),
                AlgebraRules::GradedCommutative => ("graded commutative", a.check_graded_commutative()),
            };
            Ok(report_violations(
                out,
                label,
                v.iter().map(|x| (x.rule.name().to_string(), x.to_string())).collect(),
            ))
        }
    }
}

fn classify(out: &Out, file: &Option<PathBuf>) -> anyhow::Result<u8> {
    let p = operad_input(file)?;
    let r = p.classify_symmetry();
    for (k, class) in r.classes.iter().enumerate() {
        let n = k + 1;
        out.record(&[("arity", n.to_string()), ("dim", p.dim(n).to_string()), ("class", class.name().into())]);
        out.text(format!("arity {n:>2}  dim {:>3}  {class}", p.dim(n)));
    }
    let window = |w: Option<usize>| w.map_or("none".to_string(), |w| w.to_string());
    let flags = [
        ("sigma_trivial", r.sigma_trivial.to_string()),
        ("sigma_sign", r.sigma_sign.to_string()),
        ("a_trivial", r.a_trivial.to_string()),
        ("almost_sigma_trivial_from", window(r.almost_sigma_trivial)),
        ("almost_a_trivial_from", window(r.almost_a_trivial)),
    ];
    out.record(&flags);
    for (k, v) in &flags {
        out.text(format!("{k}: {v}"));
    }
    Ok(0)
}

fn functor(name: FunctorName, file: &Option<PathBuf>, output: &Option<PathBuf>) -> anyhow::Result<u8> {
    let input = read_input(file)?;
    let need_operad = |o: Object| match o {
        Object::Operad(p) => Ok(p),
        Object::Algebra(_) => Err(atriv_core::Error::WrongKind {
            expected: "operad".into(),
            found: "algebra".into(),
        }),
    };
    let need_algebra = |o: Object| match o {
        Object::Algebra(a) => Ok(a),
        Object::Operad(_) => Err(atriv_core::Error::WrongKind {
            expected: "algebra".into(),
            found: "operad".into(),
        }),
    };
    let result = match name {
        FunctorName::Forget => Object::Algebra(functors::forget_f(&need_operad(input)?)?),
        FunctorName::FATriv => Object::Algebra(functors::f_a_triv(&need_operad(input)?)?),
        FunctorName::GSigmaTriv => Object::Operad(functors::g_sigma_triv(&need_algebra(input)?)?),
        FunctorName::GATriv => Object::Operad(functors::g_a_triv(&need_algebra(input)?)?),
        FunctorName::GSigmaSign => Object::Operad(functors::g_sigma_sign(&need_algebra(input)?)?),
    };
    write_output(output, &format::object_to_json(&result))?;
    Ok(0)
}

fn roundtrip(out: &Out, file: &Option<PathBuf>, pair: Pair) -> anyhow::Result<u8> {
    let (label, diff): (&str, StructureDiff) = match (read_input(file)?, pair) {
        (Object::Algebra(a), Pair::Gperm) => ("algebra -> operad -> algebra", functors::roundtrip_gperm(&a)?),
        (Object::Algebra(a), Pair::Pgperm) => ("algebra -> operad -> algebra", functors::roundtrip_pgperm(&a)?),
        (Object::Operad(p), Pair::Gperm) => ("operad -> algebra -> operad", functors::roundtrip_sigma_trivial(&p)?),
        (Object::Operad(p), Pair::Pgperm) => ("operad -> algebra -> operad", functors::roundtrip_a_trivial(&p)?),
    };
    for d in &diff.differences {
        out.record(&[
            ("difference", d.location.clone()),
            ("expected", d.expected.clone()),
            ("found", d.found.clone()),
        ]);
        out.text(format!("  {d}"));
    }
    let ok = diff.is_empty();
    out.record(&[("status", if ok { "identical" } else { "differs" }.into()), ("count", diff.differences.len().to_string())]);
    out.text(format!(
        "{label}: {} ({} differences)",
        out.verdict(ok, "identical", "DIFFERS"),
        diff.differences.len()
    ));
    Ok(u8::from(!ok))
}

fn hilbert(out: &Out, file: &Option<PathBuf>, fit: Option<usize>, gk: bool) -> anyhow::Result<u8> {
    let dims = match read_input(file)? {
        Object::Operad(p) => p.hilbert(),
        Object::Algebra(a) => a.hilbert(),
    };
    out.record(&[("coefficients", list(&dims))]);
    out.text(format!("coefficients: {}", list(&dims)));
    let coeffs = as_coefficients(&dims);
    if fit.is_none() && !gk {
        return Ok(0);
    }
    // without --fit, use the largest order the data supports
    let order = fit.unwrap_or((coeffs.len().saturating_sub(4) / 2).max(1));
    let series = rational_fit(&coeffs, order)?;
    match &series {
        Some(s) => {
            out.record(&[("fit", s.to_string()), ("order", order.to_string())]);
            out.text(format!("rational fit: {s}"));
        }
        None => {
            out.record(&[("fit", "none".into()), ("order", order.to_string())]);
            out.text(format!("no rational fit with numerator and denominator degree <= {order}"));
        }
    }
    if gk {
        match series.as_ref().map(gk_estimate) {
            Some(Ok(d)) => {
                out.record(&[("gk", d.to_string())]);
                out.text(format!("GK dimension: {d}"));
            }
            Some(Err(e)) => {
                out.record(&[("gk", "none".into()), ("reason", e.to_string())]);
                out.text(format!("GK dimension: not determined ({e})"));
            }
            None => {
                out.record(&[("gk", "none".into()), ("reason", "no fit".into())]);
                out.text("GK dimension: not determined (no fit)");
            }
        }
        if let Some(h) = gk_heuristic(&coeffs) {
            out.record(&[("gk_heuristic_float", format!("{h:.3}"))]);
            out.text(format!("GK heuristic (floating point, log-log slope): {h:.3}"));
        }
    }
    Ok(0)
}

fn print_windowed(out: &Out, grade: &str, w: &WindowedSubset) {
    for g in w.subset.first()..=w.subset.last() {
        let dim = w.subset.component(g).dim();
        if w.is_decided(g) {
            out.record(&[(grade, g.to_string()), ("dim", dim.to_string())]);
            out.text(format!("{grade} {g:>2}: {dim}"));
        } else {
            out.record(&[(grade, g.to_string()), ("dim", "undecided".into())]);
            out.text(format!("{grade} {g:>2}: undecided (truncation too small)"));
        }
    }
}

fn torsion(out: &Out, file: &Option<PathBuf>, side: Side, window: usize) -> anyhow::Result<u8> {
    let (grade, t) = match read_input(file)? {
        Object::Operad(p) => (
            "arity",
            match side {
                Side::L => p.left_torsion(window)?,
                Side::R => p.right_torsion(window)?,
                Side::Br => p.bullet_right_torsion(window)?,
            },
        ),
        Object::Algebra(a) => (
            "degree",
            match side {
                Side::L => a.left_torsion(window)?,
                Side::R => a.right_torsion(window)?,
                Side::Br => bail!("--side br needs an operad"),
            },
        ),
    };
    out.text(format!("window {window}"));
    print_windowed(out, grade, &t);
    Ok(0)
}

fn center(out: &Out, file: &Option<PathBuf>) -> anyhow::Result<u8> {
    let p = operad_input(file)?;
    for m in 1..=p.max_arity() {
        for b in 0..p.dim(m) {
            let fields = |status: &str| vec![("arity", m.to_string()), ("basis", b.to_string()), ("central", status.to_string())];
            if m >= p.max_arity() {
                out.record(&fields("undecided"));
                out.text(format!("arity {m} basis {b}: undecided"));
                continue;
            }
            match p.centrality_witness(m, &p.basis_vector(m, b))? {
                None => {
                    out.record(&fields("yes"));
                    out.text(format!("arity {m} basis {b}: {}", out.verdict(true, "central", "")));
                }
                Some(w) => {
                    let mut f = fields("no");
                    f.push(("other", format!("{},{}", w.other.0, w.other.1)));
                    f.push(("i", w.i.to_string()));
                    f.push(("j", w.j.to_string()));
                    out.record(&f);
                    out.text(format!(
                        "arity {m} basis {b}: {} against arity {} basis {} at slots {},{}: {} vs {}",
                        out.verdict(false, "", "not central"),
                        w.other.0,
                        w.other.1,
                        w.i,
                        w.j,
                        linalg::format_vector(&w.left),
                        linalg::format_vector(&w.right)
                    ));
                }
            }
        }
    }
    out.text("center dimension per arity:");
    print_windowed(out, "arity", &p.center());
    Ok(0)
}

fn build_catalog(object: &CatalogObject, field: Field) -> atriv_core::Result<Object> {
    Ok(match object {
        CatalogObject::Com { max_arity } => Object::Operad(catalog::build_com(field, *max_arity)?),
        CatalogObject::Ope { max_arity } => Object::Operad(catalog::build_ope(field, *max_arity)?),
        CatalogObject::Massey { a, b, max_degree } => Object::Algebra(catalog::build_massey(field, *a, *b, *max_degree)?),
        CatalogObject::Shift { max_degree } => Object::Algebra(catalog::build_shift_algebra(field, *max_degree)?),
        CatalogObject::Xy { max_degree } => Object::Algebra(catalog::build_xy_algebra(field, *max_degree)?),
        CatalogObject::FreeGperm { degrees, max_degree } => {
            Object::Algebra(algebra::free_gperm(field, degrees, *max_degree)?)
        }
        CatalogObject::Polynomial { degree, max_degree, odd } => {
            let a: GradedAlgebra = catalog::polynomial(field, *degree, *max_degree)?;
            Object::Algebra(if *odd { a.with_typing(a.uniform_typing(true))? } else { a })
        }
    })
}

fn signlemma(out: &Out, m: usize, n: usize) -> anyhow::Result<u8> {
    let report = verify_sign_lemma(m, n)?;
    for case in &report.cases {
        out.record(&[
            ("case", case.label.to_string()),
            ("checked", case.checked.to_string()),
            ("failures", case.failures.len().to_string()),
        ]);
        out.text(format!(
            "{} {}: {} identities, {} ({})",
            out.verdict(case.passed(), "ok  ", "FAIL"),
            case.label,
            case.checked,
            case.failures.len(),
            case.statement
        ));
        for f in case.failures.iter().take(5) {
            out.text(format!("    {f}"));
        }
    }
    let ok = report.all_pass();
    out.record(&[
        ("status", if ok { "pass" } else { "fail" }.into()),
        ("m_max", m.to_string()),
        ("n_max", n.to_string()),
        ("checked", report.total_checked().to_string()),
    ]);
    out.text(if ok {
        format!("all sign identities hold for m <= {m}, n <= {n}")
    } else {
        "some sign identities fail".to_string()
    });
    Ok(u8::from(!ok))
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let out = Out::new(cli.format == Style::Machine);
    match cli.command {
        Command::Check { file, rules } => check(&out, &file, rules),
        Command::Classify { file } => classify(&out, &file),
        Command::Functor { name, file, output } => functor(name, &file, &output),
        Command::Roundtrip { file, pair } => roundtrip(&out, &file, pair),
        Command::Hilbert { file, fit, gk } => hilbert(&out, &file, fit, gk),
        Command::Torsion { file, side, window } => torsion(&out, &file, side, window),
        Command::Center { file } => center(&out, &file),
        Command::Catalog { object, field, output } => {
            let field: Field = field.parse()?;
            write_output(&output, &format::object_to_json(&build_catalog(&object, field)?))?;
            Ok(0)
        }
        Command::Signlemma { m, n } => signlemma(&out, m, n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
