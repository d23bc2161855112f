use std::io::{self, BufRead};

use harris::properties::{is_harris, HarrisVerdict, VERIFY_MAX_ORDER};
use harris::{parse_graph6, Error, Graph};

pub const USAGE: u8 = 1;
pub const INVALID: u8 = 2;
pub const CEILING: u8 = 3;

/// A message and the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: USAGE,
            message: message.into(),
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: INVALID,
            message: message.into(),
        }
    }

    pub fn ceiling(message: impl Into<String>) -> Self {
        Failure {
            code: CEILING,
            message: message.into(),
        }
    }

    /// Exit code already chosen, message already printed.
    pub fn silent(code: u8) -> Self {
        Failure {
            code,
            message: String::new(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooManyVertices { .. } | Error::Unsupported { .. } => CEILING,
            Error::InvalidFamily(_) | Error::TooSmall { .. } => USAGE,
            _ => INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::invalid(e.to_string())
    }
}

/// Reads a graph argument: a graph6 string, or `-` for the first line of stdin.
pub fn graph_arg(arg: &str) -> Result<(String, Graph), Failure> {
    let text = if arg == "-" {
        let mut line = String::new();
        io::stdin().lock().read_line(&mut line)?;
        line.trim_end_matches(['\r', '\n']).to_string()
    } else {
        arg.to_string()
    };
    let g = parse_graph6(&text)?;
    Ok((text, g))
}

pub fn within_ceiling(g: &Graph) -> Result<(), Failure> {
    if g.n() > VERIFY_MAX_ORDER {
        return Err(Failure::ceiling(format!(
            "order {} is above the verification ceiling of {VERIFY_MAX_ORDER}",
            g.n()
        )));
    }
    Ok(())
}

pub fn verify(g: &Graph) -> Result<HarrisVerdict, Failure> {
    within_ceiling(g)?;
    Ok(is_harris(g))
}

pub fn verdict_line(v: &HarrisVerdict) -> String {
    format!(
        "harris={} eulerian={} tough={} hamiltonian={}",
        v.is_harris, v.eulerian, v.toughness.tough, v.hamiltonicity.hamiltonian
    )
}
