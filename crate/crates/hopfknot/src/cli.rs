//! Command dispatch, run reports and exit codes.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use hopfknot_core::chromatic::{f_double_prime, FlatHeegaardDiagram};
use hopfknot_core::double::DrinfeldDouble;
use hopfknot_core::hkr::{hkr_invariant, MorseLinkDiagram, RibbonData};
use hopfknot_core::{integrals, zoo, Error, Field, HopfAlgebra, Rational, Scalar};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::format::{self, coords, scalar_to_json, AlgebraFile, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hopfknot", version, about = "Exact Hopf-algebraic invariants of links and 3-manifolds")]
pub struct Cli {
    /// Compact single-line JSON instead of pretty-printed.
    #[arg(long, global = true)]
    pub json: bool,
    /// Run the full invariant suites where a command supports them.
    #[arg(long, global = true)]
    pub check: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Hopf algebra axioms and the spherical structure.
    VerifyHopf { algebra: PathBuf },
    /// Integrals, distinguished group-likes and structure flags.
    Integrals { algebra: PathBuf },
    /// Build the Drinfeld double and write it as an algebra file.
    Double {
        algebra: PathBuf,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Evaluate the surgery invariant of a link diagram.
    Hkr {
        link: PathBuf,
        #[arg(long)]
        algebra: PathBuf,
        /// Build D(H) from the algebra first.
        #[arg(long)]
        double: bool,
    },
    /// Evaluate F″ on a Heegaard diagram.
    Chromatic {
        heegaard: PathBuf,
        #[arg(long)]
        algebra: PathBuf,
    },
    /// F″ with H against the link invariant with D(H) on the surgery link.
    Compare {
        heegaard: PathBuf,
        #[arg(long)]
        algebra: PathBuf,
        /// Also write the surgery link here.
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Write a built-in algebra: group-z2, group-s3, uq-sl2, sweedler.
    Zoo {
        name: String,
        /// Root-of-unity order for uq-sl2.
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Integral normalization constant for uq-sl2.
        #[arg(long, default_value = "1")]
        c: String,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct Input {
    path: String,
    sha256: String,
}

/// Record of one invocation. Everything except `timing_ms` depends only
/// on the arguments and input contents.
#[derive(Serialize, Default)]
pub struct RunReport {
    command: Vec<String>,
    inputs: Vec<Input>,
    outputs: Vec<Input>,
    results: BTreeMap<String, Value>,
    checks: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<Value>,
    threads: usize,
    timing_ms: u128,
}

impl RunReport {
    fn result(&mut self, key: &str, v: Value) {
        self.results.insert(key.into(), v);
    }

    fn check(&mut self, key: &str, ok: bool) {
        self.checks.insert(key.into(), ok);
    }

    fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
        self.inputs.push(Input { path: path.display().to_string(), sha256: sha256(&bytes) });
        String::from_utf8(bytes).map_err(|_| CliError::input("format", path, "file is not UTF-8"))
    }

    fn write(&mut self, path: &Path, v: &Value) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(v).expect("serializable") + "\n";
        std::fs::write(path, &text).map_err(|e| CliError::io(path, e))?;
        self.outputs.push(Input { path: path.display().to_string(), sha256: sha256(text.as_bytes()) });
        Ok(())
    }
}

fn sha256(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

#[derive(Debug)]
pub struct CliError {
    module: &'static str,
    location: Option<String>,
    message: String,
    code: i32,
}

impl CliError {
    fn io(path: &Path, e: std::io::Error) -> CliError {
        CliError { module: "io", location: Some(path.display().to_string()), message: e.to_string(), code: EXIT_INPUT }
    }

    fn input(module: &'static str, path: &Path, msg: impl Into<String>) -> CliError {
        CliError { module, location: Some(path.display().to_string()), message: msg.into(), code: EXIT_INPUT }
    }

    fn core(e: Error, location: Option<&Path>) -> CliError {
        use Error::*;
        let (module, code) = match &e {
            MixedFields | DivisionByZero => ("scalar", EXIT_INPUT),
            AlgebraMismatch | OrderMismatch { .. } => ("hopf", EXIT_INPUT),
            AxiomFailure { .. } => ("hopf", EXIT_FAILED),
            NoIntegral(_) | AmbiguousIntegral { .. } | DegeneratePairing | InconsistentSystem(_) => {
                ("integrals", EXIT_FAILED)
            }
            MissingPivot | NotSpherical(_) | NotQuasitriangular(_) => ("integrals", EXIT_FAILED),
            NotNondegenerate | UnnormalizedIntegral => ("hkr", EXIT_FAILED),
            MalformedEvents { .. } | BasepointError(_) => ("hkr", EXIT_INPUT),
            SlotMismatch(_) | UnbalancedExtrema(_) | NonAdjacentCrossing(_) | NotNormalForm(_) | NotFlat => {
                ("chromatic", EXIT_INPUT)
            }
            InvalidGroup(_) | BadRoot => ("zoo", EXIT_INPUT),
            Invalid(_) => ("input", EXIT_INPUT),
        };
        CliError { module, location: location.map(|p| p.display().to_string()), message: e.to_string(), code }
    }

    fn format(e: FormatError, path: &Path) -> CliError {
        match e {
            FormatError::Core(c) => CliError::core(c, Some(path)),
            other => CliError::input("format", path, other.to_string()),
        }
    }

    pub fn code(&self) -> i32 {
        self.code
    }
}

/// Worker threads allowed by `HOPFKNOT_THREADS`, defaulting to the
/// available parallelism.
pub fn thread_cap() -> Result<usize, String> {
    match std::env::var("HOPFKNOT_THREADS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(format!("HOPFKNOT_THREADS must be a positive integer, found {s:?}")),
        },
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

fn load_algebra(report: &mut RunReport, path: &Path) -> Result<AlgebraFile, CliError> {
    let text = report.read(path)?;
    format::algebra_from_json(&text).map_err(|e| CliError::format(e, path))
}

fn load_link(report: &mut RunReport, path: &Path) -> Result<MorseLinkDiagram, CliError> {
    let text = report.read(path)?;
    format::link_from_json(&text).map_err(|e| CliError::format(e, path))
}

fn load_heegaard(report: &mut RunReport, path: &Path) -> Result<FlatHeegaardDiagram, CliError> {
    let text = report.read(path)?;
    format::heegaard_from_json(&text).map_err(|e| CliError::format(e, path))
}

fn scalar(x: &Scalar) -> Value {
    scalar_to_json(x)
}

fn ribbon_from_double(h: &HopfAlgebra, at: &Path) -> Result<RibbonData, CliError> {
    let d = DrinfeldDouble::build(h).map_err(|e| CliError::core(e, Some(at)))?;
    RibbonData::from_double(&d).map_err(|e| CliError::core(e, Some(at)))
}

fn linking_json(link: &MorseLinkDiagram) -> Value {
    let l = link.linking();
    json!({ "matrix": l.matrix, "signature": l.signature })
}

fn run_command(cli: &Cli, threads: usize, report: &mut RunReport) -> Result<i32, CliError> {
    match &cli.command {
        Command::VerifyHopf { algebra } => {
            let h = load_algebra(report, algebra)?.algebra;
            let axioms = h.verify_axioms();
            for c in &axioms.checks {
                report.check(c.axiom, c.passed);
            }
            let failures: Vec<Value> =
                axioms.failures().map(|c| json!({ "axiom": c.axiom, "witness": c.witness })).collect();
            report.result("failures", Value::from(failures));
            let sph = integrals::spherical_report(&h).map_err(|e| CliError::core(e, Some(algebra)))?;
            report.result(
                "spherical",
                json!({
                    "pivotal": sph.pivotal,
                    "unimodular": sph.unimodular,
                    "pivot_squared_is_a": sph.pivot_squared_is_a,
                    "spherical": sph.spherical(),
                }),
            );
            if cli.check {
                report.check("spherical", sph.spherical());
            }
            let ok = report.checks.values().all(|b| *b);
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Integrals { algebra } => {
            let file = load_algebra(report, algebra)?;
            let h = &file.algebra;
            let err = |e| CliError::core(e, Some(algebra));
            let data = integrals::integral_data(h).map_err(err)?;
            report.result("lambda", coords(data.lambda.coeffs()));
            report.result("Lambda", coords(data.cointegral.coeffs()));
            report.result("alpha", coords(data.alpha.coeffs()));
            report.result("a", coords(data.a.coeffs()));
            report.result("mu", data.mu.as_ref().map_or(Value::Null, |m| coords(m.coeffs())));
            let sph = integrals::spherical_report(h).map_err(err)?;
            let mut flags = json!({
                "unimodular": sph.unimodular,
                "pivotal": sph.pivotal,
                "spherical": sph.spherical(),
            });
            if let Some(block) = &file.double {
                let q = integrals::verify_quasitriangular(h, &block.r, None).map_err(err)?;
                let ribbon = integrals::ribbon_check(h, &block.r).map_err(err)?;
                flags["quasitriangular"] = Value::Bool(q.passed());
                flags["ribbon"] = Value::Bool(ribbon.ribbon());
                if cli.check {
                    report.check("quasitriangular", q.passed());
                    report.check("ribbon", ribbon.ribbon());
                }
            }
            report.result("flags", flags);
            let ok = report.checks.values().all(|b| *b);
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Double { algebra, output } => {
            let h = load_algebra(report, algebra)?.algebra;
            let d = DrinfeldDouble::build(&h).map_err(|e| CliError::core(e, Some(algebra)))?;
            report.result("dim", Value::from(d.dim()));
            let (delta, delta_inv) = d.delta_constants().map_err(|e| CliError::core(e, Some(algebra)))?;
            report.result("delta", scalar(&delta));
            report.result("delta_inverse_side", scalar(&delta_inv));
            let mut code = EXIT_OK;
            if cli.check {
                let verdict = d.verify().into_result();
                report.check("double", verdict.is_ok());
                if let Err(e) = verdict {
                    report.result("failure", Value::from(e.to_string()));
                    code = EXIT_FAILED;
                }
            }
            let out = format::double_to_json(&d);
            match output {
                Some(p) => report.write(p, &out)?,
                None => report.result("double", out),
            }
            Ok(code)
        }
        Command::Hkr { link, algebra, double } => {
            let diagram = load_link(report, link)?;
            let file = load_algebra(report, algebra)?;
            let rd = if *double {
                ribbon_from_double(&file.algebra, algebra)?
            } else {
                let block = file.double.as_ref().ok_or_else(|| {
                    CliError::input("hkr", algebra, "algebra has no R-matrix block; pass --double to build D(H)")
                })?;
                RibbonData::new(&file.algebra, &block.r).map_err(|e| CliError::core(e, Some(algebra)))?
            };
            let v = hkr_invariant(&diagram, &rd).map_err(|e| CliError::core(e, Some(link)))?;
            report.result("value", scalar(&v));
            report.result("components", Value::from(diagram.n_components()));
            report.result("linking", linking_json(&diagram));
            Ok(EXIT_OK)
        }
        Command::Chromatic { heegaard, algebra } => {
            let diagram = load_heegaard(report, heegaard)?;
            let h = load_algebra(report, algebra)?.algebra;
            let flat = diagram.flatten().map_err(|e| CliError::core(e, Some(heegaard)))?;
            let v = f_double_prime(&flat, &h).map_err(|e| CliError::core(e, Some(heegaard)))?;
            report.result("value", scalar(&v));
            Ok(EXIT_OK)
        }
        Command::Compare { heegaard, algebra, output } => {
            let diagram = load_heegaard(report, heegaard)?;
            let h = load_algebra(report, algebra)?.algebra;
            let at = Some(heegaard.as_path());
            let flat = diagram.flatten().map_err(|e| CliError::core(e, at))?;
            let link = diagram.to_surgery_link().map_err(|e| CliError::core(e, at))?;
            let chromatic = || f_double_prime(&flat, &h).map_err(|e| CliError::core(e, at));
            let surgery = || -> Result<Scalar, CliError> {
                let rd = ribbon_from_double(&h, algebra)?;
                hkr_invariant(&link, &rd).map_err(|e| CliError::core(e, at))
            };
            let (f, k) = if threads >= 2 {
                std::thread::scope(|s| {
                    let side = s.spawn(surgery);
                    (chromatic(), side.join().expect("evaluation thread panicked"))
                })
            } else {
                (chromatic(), surgery())
            };
            let (f, k) = (f?, k?);
            report.result("chromatic", scalar(&f));
            report.result("hkr", scalar(&k));
            report.result("linking", linking_json(&link));
            report.check("equal", f == k);
            if let Some(p) = output {
                report.write(p, &format::link_to_json(&link))?;
            }
            Ok(if f == k { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Zoo { name, r, c, output } => {
            let here = Path::new(name);
            let err = |e| CliError::core(e, Some(here));
            let h = match name.as_str() {
                "group-z2" => zoo::cyclic_group_algebra(2, &Field::Rational).map_err(err)?,
                "group-s3" => zoo::group_algebra(&zoo::GroupTable::symmetric3(), &Field::Rational).map_err(err)?,
                "sweedler" => zoo::sweedler_algebra(&Field::Rational).map_err(err)?,
                "uq-sl2" => {
                    let cr: Rational =
                        c.parse().map_err(|_| CliError::input("zoo", here, format!("bad constant {c:?}")))?;
                    let field = Field::cyclotomic(2 * (*r).max(1) as u32);
                    let cs = field.from_rational(&cr).map_err(err)?;
                    if cs.is_zero() {
                        return Err(CliError::input("zoo", here, "constant c must be nonzero"));
                    }
                    zoo::small_quantum_sl2(*r, &cs).map_err(err)?.algebra
                }
                other => {
                    return Err(CliError::input(
                        "zoo",
                        here,
                        format!("unknown algebra {other:?}; expected group-z2, group-s3, uq-sl2 or sweedler"),
                    ))
                }
            };
            report.result("dim", Value::from(h.dim()));
            let out = format::algebra_to_json(&h);
            match output {
                Some(p) => report.write(p, &out)?,
                None => report.result("algebra", out),
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs one invocation, prints its report and returns the exit code.
pub fn run(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let start = Instant::now();
    let mut report = RunReport { command: args.iter().skip(1).cloned().collect(), ..Default::default() };
    let outcome = thread_cap()
        .map_err(|m| CliError { module: "cli", location: None, message: m, code: EXIT_INPUT })
        .and_then(|threads| {
            report.threads = threads;
            run_command(&cli, threads, &mut report)
        });
    let code = match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!(
                "error [{}]{}: {}",
                e.module,
                e.location.as_deref().map(|l| format!(" {l}")).unwrap_or_default(),
                e.message
            );
            report.error = Some(json!({ "module": e.module, "location": e.location, "message": e.message }));
            e.code
        }
    };
    report.timing_ms = start.elapsed().as_millis();
    let text = if cli.json { serde_json::to_string(&report) } else { serde_json::to_string_pretty(&report) };
    println!("{}", text.expect("serializable"));
    code
}
