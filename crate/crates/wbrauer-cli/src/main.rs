use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wbrauer::algcore::WalledBrauer;
use wbrauer::bmod::{BModules, LambdaLabel};
use wbrauer::coeffs::{parse_field_and_delta, Field, FieldSpec, PrimeField, Rationals, Scalar};
use wbrauer::suites::{run_suite, CaseResult};
use wbrauer::walled::WalledDiagram;
use wbrauer::{Error, ErrorClass};

#[derive(Parser, Debug)]
#[command(name = "wbrauer", version, about = "Walled Brauer algebras: products, Young decompositions and verification suites")]
struct Cli {
    /// Field and parameter, e.g. `Q;5` or `F5;2`.
    #[arg(long, global = true, default_value = "Q;5")]
    field: String,
    /// Points left and right of the wall, e.g. `2,1`.
    #[arg(long, global = true)]
    rt: Option<String>,
    /// Label `l:(λ|μ)`, e.g. `0:(2|1)`.
    #[arg(long, global = true)]
    label: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format; `mul` defaults to pretty, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiply two diagrams written as `wbd r,t : edges`.
    Mul { lhs: String, rhs: String },
    /// Labelled Young decomposition of `M(l, (λ, μ))` with its cell filtration.
    Decompose,
    /// Cell filtration of `M(l, (λ, μ))`.
    Filtration,
    /// Run a verification suite.
    Verify { suite: String },
}

#[derive(Serialize)]
struct MulJson {
    algebra: String,
    product: String,
    seed: u64,
}

fn exit_code(class: ErrorClass) -> u8 {
    match class {
        ErrorClass::Computation => 1,
        ErrorClass::Hypothesis => 2,
        ErrorClass::Ambiguity => 3,
        ErrorClass::Parse => 4,
    }
}

fn parse_rt(text: &str) -> Result<(usize, usize), Error> {
    let (a, b) = text.split_once(',').ok_or_else(|| Error::parse(0, "expected `r,t`"))?;
    let r = a.trim().parse().map_err(|_| Error::parse(0, format!("bad r `{a}`")))?;
    let t = b.trim().parse().map_err(|_| Error::parse(a.len() + 1, format!("bad t `{b}`")))?;
    Ok((r, t))
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable report"));
}

struct Run<'a> {
    cli: &'a Cli,
}

impl Run<'_> {
    fn format(&self, default: Format) -> Format {
        self.cli.format.unwrap_or(default)
    }

    fn rt(&self) -> Result<(usize, usize), Error> {
        parse_rt(self.cli.rt.as_deref().ok_or_else(|| Error::parse(0, "missing --rt"))?)
    }

    fn label(&self) -> Result<LambdaLabel, Error> {
        LambdaLabel::parse(self.cli.label.as_deref().ok_or_else(|| Error::parse(0, "missing --label"))?)
    }

    fn with_field<F: Field>(&self, f: F, delta: &Scalar) -> Result<bool, Error> {
        let d = f.from_scalar(delta)?;
        match &self.cli.command {
            Command::Mul { lhs, rhs } => self.mul(&f, d, lhs, rhs),
            Command::Decompose => self.decompose(&f, d, true),
            Command::Filtration => self.decompose(&f, d, false),
            Command::Verify { .. } => unreachable!("verify does not take a field"),
        }
    }

    fn mul<F: Field>(&self, f: &F, delta: F::Elem, lhs: &str, rhs: &str) -> Result<bool, Error> {
        let x = WalledDiagram::parse(lhs)?;
        let y = WalledDiagram::parse(rhs)?;
        x.check_shape(&y)?;
        if let Some(text) = &self.cli.rt {
            let (r, t) = parse_rt(text)?;
            x.check_shape(&WalledDiagram::identity(r, t))?;
        }
        let b = WalledBrauer::new(f, x.r(), x.t(), delta)?;
        let alg = b.algebra();
        let p = alg.multiply(&b.element(&x)?, &b.element(&y)?)?;
        let text = alg.format(&p);
        match self.format(Format::Pretty) {
            Format::Pretty => println!("{text}"),
            Format::Csv => println!("algebra,product\n\"{}\",\"{}\"", b.tag(), text),
            Format::Json => print_json(&MulJson { algebra: b.tag().to_string(), product: text, seed: self.cli.seed }),
        }
        Ok(true)
    }

    fn decompose<F: Field>(&self, f: &F, delta: F::Elem, young: bool) -> Result<bool, Error> {
        f.spec().require_char_not_2_3()?;
        let (r, t) = self.rt()?;
        let label = self.label()?;
        label.check(r, t)?;
        let seed = self.cli.seed;
        let b = BModules::new(WalledBrauer::new(f, r, t, delta)?, seed);
        eprintln!("building M({label}) over {}", b.algebra().tag());
        let m = b.perm_module(&label)?;
        eprintln!("dim M({label}) = {}", m.dim());
        let (yd, ok) = if young {
            eprintln!("decomposing");
            match b.young_decomposition(&label, seed) {
                Ok(y) => {
                    let ok = y.is_valid();
                    for v in &y.violations {
                        eprintln!("violation: {v}");
                    }
                    (Some(y), ok)
                }
                Err(e @ Error::LabelAmbiguous(_)) => {
                    self.emit(&b.report_json(&label, None, None, seed));
                    return Err(e);
                }
                Err(e) => return Err(e),
            }
        } else {
            (None, true)
        };
        eprintln!("filtering");
        let fr = match b.cell_filtration(&m) {
            Ok(fr) => fr,
            Err(e @ Error::LabelAmbiguous(_)) => {
                self.emit(&b.report_json(&label, yd.as_ref(), None, seed));
                return Err(e);
            }
            Err(e) => return Err(e),
        };
        self.emit(&b.report_json(&label, yd.as_ref(), Some(&fr), seed));
        Ok(ok)
    }

    fn emit(&self, rep: &wbrauer::bmod::BReportJson) {
        match self.format(Format::Json) {
            Format::Json => print_json(rep),
            Format::Csv => {
                println!("kind,label,multiplicity,dim");
                for s in &rep.summands {
                    println!("summand,\"{}\",{},{}", s.label, s.multiplicity, s.dim);
                }
                for s in &rep.filtration {
                    println!("subquotient,\"{}\",1,{}", s.label, s.dim);
                }
            }
            Format::Pretty => {
                let a = &rep.algebra;
                println!("B_{{{},{}}}(δ={}) over {}, seed {}", a.r, a.t, a.delta, a.field, rep.seed);
                for s in &rep.summands {
                    println!("  summand {:<16} x{:<3} dim {}", s.label, s.multiplicity, s.dim);
                }
                for s in &rep.filtration {
                    println!("  subquotient {:<12} dim {}", s.label, s.dim);
                }
            }
        }
    }

    fn verify(&self, suite: &str) -> Result<bool, Error> {
        let progress = |m: &str| eprintln!("{m}");
        let mut rows: Vec<CaseResult> = run_suite(suite, &progress)?;
        rows.sort_by(|a, b| a.case.cmp(&b.case));
        let ok = rows.iter().all(|r| r.passed);
        match self.format(Format::Json) {
            Format::Json => print_json(&serde_json::json!({ "suite": suite, "passed": ok, "cases": rows })),
            Format::Csv => {
                println!("suite,case,passed,detail");
                for r in &rows {
                    println!("{},\"{}\",{},\"{}\"", r.suite, r.case, r.passed, r.detail.replace('"', "'"));
                }
            }
            Format::Pretty => {
                for r in &rows {
                    println!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.case);
                }
                println!("{suite}: {}", if ok { "PASS" } else { "FAIL" });
            }
        }
        Ok(ok)
    }
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let run = Run { cli };
    if let Command::Verify { suite } = &cli.command {
        return run.verify(suite);
    }
    let (spec, delta) = parse_field_and_delta(&cli.field)?;
    match spec {
        FieldSpec::Rationals => run.with_field(Rationals, &delta),
        FieldSpec::PrimeField(p) => run.with_field(PrimeField::new(p), &delta),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(e.class()))
        }
    }
}
