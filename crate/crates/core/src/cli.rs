//! The `orzech` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failed or not certifiable,
//! 2 input error, 3 map not surjective.

use std::io::{Read, Write};

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::charpoly::{cayley_hamilton_check, charpoly, determinant};
use crate::engine::{inverse_hom, orzech_certify, reduce_to_fingen, verify_certificate};
use crate::error::Error;
use crate::format::{self, Document};
use crate::linsolve::{hnf, kernel_gens, snf, solve};
use crate::module::Hom;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NOT_SURJECTIVE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Charpoly,
    ChCheck,
    Det,
    Hnf,
    Snf,
    Solve,
    Kernel,
    Certify,
    Verify,
    Invert,
    Reduce,
}

#[derive(Debug, Parser)]
#[command(
    name = "orzech",
    version,
    about = "Exact linear algebra and injectivity certificates for surjective module maps"
)]
pub struct Args {
    pub command: Command,
    /// Input document, or `-` for standard input.
    pub input: String,
    #[arg(short = 'o', long = "output")]
    pub output: Option<String>,
    /// Accepted for scripting compatibility; every command is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Result of a command: machine output plus exit code, or a diagnostic.
struct Outcome {
    code: i32,
    output: Value,
    message: Option<String>,
}

impl Outcome {
    fn ok(output: Value) -> Outcome {
        Outcome { code: EXIT_OK, output, message: None }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotSurjective(_) => EXIT_NOT_SURJECTIVE,
        Error::ChainFailure { .. } | Error::InternalContradiction(_) => EXIT_FAILED,
        _ => EXIT_INPUT,
    }
}

fn need<T>(x: Option<T>, what: &str) -> Result<T, Error> {
    x.ok_or_else(|| Error::Parse(format!("input document has no \"{what}\"")))
}

fn with_ring(doc: &Document, key: &str, v: Value) -> Value {
    let mut o = Map::new();
    o.insert("ring".into(), format::ring_to_json(doc.ring.expect("parsed documents carry a ring")));
    o.insert(key.into(), v);
    Value::Object(o)
}

fn dispatch(cmd: Command, doc: Document) -> Result<Outcome, Error> {
    let ring = doc.ring.expect("parsed documents carry a ring");
    let matrix = || need(doc.matrix.clone(), "matrix");
    let module = || need(doc.module.clone(), "module");
    let out = |key: &str, v: Value| with_ring(&doc, key, v);
    Ok(match cmd {
        Command::Charpoly => {
            let p = charpoly(&matrix()?)?;
            Outcome::ok(out("polynomial", format::vector_to_json(p.coeffs())))
        }
        Command::ChCheck => {
            let holds = cayley_hamilton_check(&matrix()?)?;
            let code = if holds { EXIT_OK } else { EXIT_FAILED };
            let message = (!holds).then(|| "characteristic polynomial does not vanish at the matrix".to_string());
            Outcome { code, output: out("cayley_hamilton", json!(holds)), message }
        }
        Command::Det => Outcome::ok(out("determinant", format::element_to_json(&determinant(&matrix()?)?))),
        Command::Hnf => {
            let r = hnf(&matrix()?)?;
            Outcome::ok(out("hnf", json!({ "H": format::matrix_to_json(&r.h), "U": format::matrix_to_json(&r.u) })))
        }
        Command::Snf => {
            let r = snf(&matrix()?)?;
            Outcome::ok(out(
                "snf",
                json!({
                    "S": format::matrix_to_json(&r.s),
                    "U": format::matrix_to_json(&r.u),
                    "V": format::matrix_to_json(&r.v),
                }),
            ))
        }
        Command::Solve => {
            let b = need(doc.vector.clone(), "vector")?;
            match solve(&matrix()?, &b)? {
                Some(x) => Outcome::ok(out("solution", format::vector_to_json(&x))),
                None => Outcome {
                    code: EXIT_FAILED,
                    output: out("solution", Value::Null),
                    message: Some("system has no solution".into()),
                },
            }
        }
        Command::Kernel => Outcome::ok(out("kernel", format::matrix_to_json(&kernel_gens(&matrix()?)?))),
        Command::Certify => {
            let f = module()?;
            let cert = orzech_certify(&f)?;
            let mut d = Document::new(ring);
            d.certificate = Some((f, cert));
            Outcome::ok(d.to_json())
        }
        Command::Verify => {
            let (f, cert) = need(doc.certificate.clone(), "certificate")?;
            match verify_certificate(&f, &cert) {
                Ok(()) => Outcome::ok(json!({ "verified": true })),
                Err(rej) => Outcome {
                    code: EXIT_FAILED,
                    output: json!({ "verified": false, "reason": rej.reason.code(), "detail": rej.detail }),
                    message: Some(format!("certificate rejected: {rej}")),
                },
            }
        }
        Command::Invert => {
            let inv: Hom = inverse_hom(&module()?)?;
            let mut d = Document::new(ring);
            d.module = Some(inv);
            Outcome::ok(d.to_json())
        }
        Command::Reduce => {
            let v = need(doc.vector.clone(), "vector")?;
            let r = reduce_to_fingen(&module()?, &v)?;
            let mut d = Document::new(ring);
            d.reduction = Some(r);
            Outcome::ok(d.to_json())
        }
    })
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

/// Runs one command, writing machine output to `stdout` (or the `-o`
/// file) and diagnostics to `stderr`.
pub fn run_with<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let text = match read_input(&args.input) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot read {}: {e}", args.input);
            return EXIT_INPUT;
        }
    };
    let outcome = match Document::parse(&text).and_then(|doc| dispatch(args.command, doc)) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    if let Some(msg) = &outcome.message {
        let _ = writeln!(stderr, "{msg}");
    }
    let text = format::to_pretty(&outcome.output);
    let written = match &args.output {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_INPUT;
    }
    outcome.code
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
