//! Line protocol spoken between the optimizer and an external objective
//! worker over the worker's stdin/stdout.
//!
//! ```text
//! -> HELLO dacopt 1
//! <- READY <dimension>
//! -> EVAL <id> <v1> ... <vD>
//! <- RESULT <id> <value>
//! -> BYE
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::fmt_real;

pub const PROTOCOL_NAME: &str = "dacopt";
pub const PROTOCOL_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub enum Request {
    Hello { version: u32 },
    Eval { id: u64, values: Vec<f64> },
    Bye,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Response {
    Ready { dimension: usize },
    Result { id: u64, value: f64 },
}

fn field<T: std::str::FromStr>(tok: Option<&str>, what: &str, line: &str) -> Result<T> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Protocol(format!("bad {what} in '{line}'")))
}

impl Request {
    pub fn parse(line: &str) -> Result<Self> {
        let mut toks = line.split_ascii_whitespace();
        match toks.next() {
            Some("HELLO") => {
                if toks.next() != Some(PROTOCOL_NAME) {
                    return Err(Error::Protocol(format!("unknown protocol in '{line}'")));
                }
                let version = field(toks.next(), "version", line)?;
                Ok(Request::Hello { version })
            }
            Some("EVAL") => {
                let id = field(toks.next(), "id", line)?;
                let values = toks
                    .map(|t| field(Some(t), "value", line))
                    .collect::<Result<Vec<f64>>>()?;
                Ok(Request::Eval { id, values })
            }
            Some("BYE") => Ok(Request::Bye),
            _ => Err(Error::Protocol(format!("unrecognized request '{line}'"))),
        }
    }
}

impl fmt::Display for Request {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Request::Hello { version } => write!(f, "HELLO {PROTOCOL_NAME} {version}"),
            Request::Eval { id, values } => {
                write!(f, "EVAL {id}")?;
                for &v in values {
                    write!(f, " {}", fmt_real(v))?;
                }
                Ok(())
            }
            Request::Bye => f.write_str("BYE"),
        }
    }
}

impl Response {
    pub fn parse(line: &str) -> Result<Self> {
        let mut toks = line.split_ascii_whitespace();
        let response = match toks.next() {
            Some("READY") => Response::Ready {
                dimension: field(toks.next(), "dimension", line)?,
            },
            Some("RESULT") => Response::Result {
                id: field(toks.next(), "id", line)?,
                value: field(toks.next(), "value", line)?,
            },
            _ => return Err(Error::Protocol(format!("unrecognized response '{line}'"))),
        };
        if toks.next().is_some() {
            return Err(Error::Protocol(format!("trailing tokens in '{line}'")));
        }
        Ok(response)
    }
}

impl fmt::Display for Response {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Response::Ready { dimension } => write!(f, "READY {dimension}"),
            Response::Result { id, value } => write!(f, "RESULT {id} {}", fmt_real(*value)),
        }
    }
}
