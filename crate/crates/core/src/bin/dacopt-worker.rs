//! Objective worker speaking the line protocol on stdin/stdout.
//!
//! Usage: `dacopt-worker <sphere|schwefel12|rosenbrock> <dim>` for the plain
//! functions, or `dacopt-worker <f1..f5|...> <dim> <m> <seed>` for an instance.

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use dacopt::objectives::protocol::{Request, Response, PROTOCOL_VERSION};
use dacopt::objectives::{make_instance, rosenbrock, schwefel12, sphere, FunctionId};
use dacopt::{Error, Result};

type Eval = Box<dyn Fn(&[f64]) -> Result<f64>>;

fn build(args: &[String]) -> Result<(Eval, usize)> {
    let usage = || Error::Usage("usage: dacopt-worker <function> <dim> [<m> <seed>]".into());
    let id: FunctionId = args.first().ok_or_else(usage)?.parse()?;
    let dim: usize = args.get(1).and_then(|s| s.parse().ok()).ok_or_else(usage)?;
    if args.len() == 2 {
        let f: fn(&[f64]) -> Result<f64> = match id {
            FunctionId::Sphere => sphere,
            FunctionId::Schwefel12 => schwefel12,
            FunctionId::Rosenbrock => rosenbrock,
            _ => return Err(usage()),
        };
        return Ok((Box::new(f), dim));
    }
    let m: usize = args.get(2).and_then(|s| s.parse().ok()).ok_or_else(usage)?;
    let seed: u64 = args.get(3).and_then(|s| s.parse().ok()).ok_or_else(usage)?;
    let inst = make_instance(id, dim, m, seed)?;
    Ok((Box::new(move |x| inst.evaluate(x)), dim))
}

fn serve(f: &Eval, dim: usize) -> Result<()> {
    let stdin = io::stdin();
    let mut out = io::stdout().lock();
    for line in stdin.lock().lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let reply = match Request::parse(&line)? {
            Request::Hello { version } if version == PROTOCOL_VERSION => Response::Ready { dimension: dim },
            Request::Hello { version } => {
                return Err(Error::Protocol(format!("unsupported version {version}")));
            }
            Request::Eval { id, values } => {
                if values.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: values.len() });
                }
                Response::Result { id, value: f(&values)? }
            }
            Request::Bye => return Ok(()),
        };
        writeln!(out, "{reply}")?;
        out.flush()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let result = build(&args).and_then(|(f, dim)| serve(&f, dim));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dacopt-worker: {e}");
            ExitCode::from(if matches!(e, Error::Usage(_)) { 2 } else { 3 })
        }
    }
}
