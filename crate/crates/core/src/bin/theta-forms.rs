use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use theta_forms::export::{export_form, parse_form, Format};
use theta_forms::forms::{build_km_explicit, build_km_nabla, build_mixed, build_psi_cup, build_psi_orth, build_psi_q, GKCochain};
use theta_forms::oscillator::upq::calibrate_structure;
use theta_forms::oscillator::{Family, Signature};
use theta_forms::theta::{eisenstein_check_with, fourier_assemble, rep_numbers, Convention, GramMatrix, WhittakerPoint};
use theta_forms::verify::{run_all, run_suite, Suite, SuiteReport, VerifyOptions};
use theta_forms::Error;

#[derive(Parser)]
#[command(name = "theta-forms", version, about = "Build and verify Fock and Schwartz cohomology forms")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Construct a form and write it as JSON or LaTeX.
    Build {
        #[command(flatten)]
        sig: SigArgs,
        #[arg(long, value_enum)]
        form: FormKind,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run one verification suite, or all of them.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        sig: OptSigArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        nmax: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit the realization constants and check the bracket relations.
    Calibrate {
        #[command(flatten)]
        sig: SigArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Representation numbers and Fourier coefficients of a lattice theta series.
    Theta {
        /// Gram matrix JSON `{dim, gram}`; defaults to E8.
        #[arg(long)]
        gram: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        nmax: u64,
        #[arg(long, value_enum)]
        check: Option<ThetaCheck>,
        #[arg(long, default_value = "literal")]
        convention: String,
        /// Imaginary part of the genus-one point.
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        /// Real part of the genus-one point.
        #[arg(long, default_value_t = 0.0)]
        u: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert a JSON form artifact to another format.
    Export {
        /// Input JSON artifact.
        input: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct SigArgs {
    #[arg(long)]
    p: u16,
    #[arg(long)]
    q: u16,
    #[arg(long, default_value_t = 1)]
    r: u16,
    #[arg(long, default_value_t = 0)]
    s: u16,
    #[arg(long, default_value = "unitary")]
    family: String,
}

impl SigArgs {
    fn signature(&self) -> Result<Signature, Error> {
        Signature::new(self.p, self.q, self.r, self.s, self.family.parse::<Family>()?)
    }
}

#[derive(Args)]
struct OptSigArgs {
    #[arg(long, requires = "q")]
    p: Option<u16>,
    #[arg(long, requires = "p")]
    q: Option<u16>,
    #[arg(long, requires = "p")]
    r: Option<u16>,
    #[arg(long, requires = "p")]
    s: Option<u16>,
    #[arg(long, default_value = "unitary")]
    family: String,
}

impl OptSigArgs {
    fn signature(&self) -> Result<Option<Signature>, Error> {
        let (Some(p), Some(q)) = (self.p, self.q) else { return Ok(None) };
        let family = self.family.parse::<Family>()?;
        Signature::new(p, q, self.r.unwrap_or(1), self.s.unwrap_or(0), family).map(Some)
    }
}

#[derive(Args)]
struct OutArgs {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormKind {
    PsiQ,
    PsiCup,
    PsiOrth,
    KmNabla,
    KmExplicit,
    Mixed,
}

#[derive(Clone, Copy, ValueEnum)]
enum ThetaCheck {
    Eisenstein,
}

enum Failure {
    /// Invalid input detected after flag parsing.
    Usage(Error),
    /// A check ran and did not hold.
    Verification(Value),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidSignature(_) => Failure::Usage(e),
            other => Failure::Runtime(other),
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")).map_err(|e| Failure::Runtime(Error::Io(e.to_string()))),
        None => match writeln!(io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::Runtime(Error::Io(e.to_string()))),
            _ => Ok(()),
        },
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(Error::Io(format!("{}: {e}", path.display()))))
}

fn build(sig: Signature, form: FormKind) -> Result<GKCochain, Error> {
    match form {
        FormKind::PsiQ => build_psi_q(sig, 1),
        FormKind::PsiCup => build_psi_cup(sig),
        FormKind::PsiOrth => build_psi_orth(sig),
        FormKind::KmNabla => build_km_nabla(sig),
        FormKind::KmExplicit => build_km_explicit(sig),
        FormKind::Mixed => build_mixed(sig),
    }
}

fn report_json(reports: &[SuiteReport]) -> Value {
    let passed = reports.iter().all(|r| r.passed);
    json!({ "passed": passed, "suites": reports })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.verb {
        Verb::Build { sig, form, out } => {
            let format: Format = out.format.parse()?;
            let c = build(sig.signature()?, form)?;
            emit(&export_form(&c, format), out.out.as_ref())
        }
        Verb::Export { input, out } => {
            let format: Format = out.format.parse()?;
            let c = parse_form(&read(&input)?)?;
            emit(&export_form(&c, format), out.out.as_ref())
        }
        Verb::Verify { suite, sig, seed, nmax, out } => {
            let opts = VerifyOptions { seed, eisenstein_n: nmax, signature: sig.signature()?, ..VerifyOptions::default() };
            let reports = if suite == "all" { run_all(&opts) } else { vec![run_suite(suite.parse::<Suite>()?, &opts)] };
            let v = report_json(&reports);
            emit(&pretty(&v), out.as_ref())?;
            if reports.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(Failure::Verification(failures_only(&reports)))
            }
        }
        Verb::Calibrate { sig, out } => {
            let cal = calibrate_structure(sig.signature()?)?;
            let v = json!({
                "signature": cal.sig.to_string(),
                "c_plus": cal.c_plus.to_string(),
                "c_minus": cal.c_minus.to_string(),
                "brackets": cal.report,
            });
            emit(&pretty(&v), out.as_ref())
        }
        Verb::Theta { gram, nmax, check, convention, t, u, out } => {
            let conv: Convention = convention.parse()?;
            let g = match &gram {
                Some(path) => GramMatrix::from_json(&read(path)?)?,
                None => GramMatrix::e8().clone(),
            };
            let counts = rep_numbers(&g, nmax);
            let point = WhittakerPoint::scalar(t, u)?;
            let coeffs = fourier_assemble(&g, |_| BigRational::one(), &point, nmax, g.dim() as u32, conv)?;
            let coeffs: Vec<Value> = coeffs.iter().map(|z| json!({ "re": z.re, "im": z.im })).collect();
            let mut v = json!({ "dim": g.dim(), "rep_numbers": counts, "fourier": coeffs });
            let mut failed = None;
            if let Some(ThetaCheck::Eisenstein) = check {
                let rep = eisenstein_check_with(&g, nmax)?;
                v["eisenstein"] = serde_json::to_value(&rep).expect("report serializes");
                if !rep.passed() {
                    failed = Some(json!({ "check": "eisenstein", "report": rep }));
                }
            }
            emit(&pretty(&v), out.as_ref())?;
            failed.map_or(Ok(()), |f| Err(Failure::Verification(f)))
        }
    }
}

fn failures_only(reports: &[SuiteReport]) -> Value {
    let failed: Vec<Value> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| json!({ "suite": r.suite, "failures": r.failures().collect::<Vec<_>>() }))
        .collect();
    json!({ "passed": false, "failed": failed })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("{}", json!({ "error": "usage", "message": e.to_string() }));
            ExitCode::from(2)
        }
        Err(Failure::Verification(v)) => {
            eprintln!("{v}");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("{}", json!({ "error": "runtime", "message": e.to_string() }));
            ExitCode::from(1)
        }
    }
}
