use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};

use rayon::prelude::*;
use serde_json::json;

use harris::properties::VERIFY_MAX_ORDER;
use harris::{parse_graph6, Report};

use crate::failure::{Failure, CEILING, INVALID};
use crate::CheckArgs;

const CHUNK: usize = 512;

enum Record {
    Blank,
    Report(Box<Report>),
    Error { line: usize, code: u8, message: String },
}

fn process(line: usize, text: &str) -> Record {
    let text = text.trim_end_matches(['\r', '\n']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    if text.trim().is_empty() {
        return Record::Blank;
    }
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => {
            return Record::Error {
                line,
                code: INVALID,
                message: e.to_string(),
            }
        }
    };
    if g.n() > VERIFY_MAX_ORDER {
        return Record::Error {
            line,
            code: CEILING,
            message: format!("order {} is above the verification ceiling of {VERIFY_MAX_ORDER}", g.n()),
        };
    }
    Record::Report(Box::new(Report::new(text, &g)))
}

pub fn run(args: &CheckArgs) -> Result<(), Failure> {
    let reader: Box<dyn BufRead> = match &args.input {
        Some(p) if p.as_os_str() != "-" => {
            let f = File::open(p).map_err(|e| Failure::invalid(format!("{}: {e}", p.display())))?;
            Box::new(BufReader::new(f))
        }
        _ => Box::new(io::stdin().lock()),
    };
    let mut out = BufWriter::new(io::stdout().lock());
    let mut worst: Option<u8> = None;
    let mut chunk: Vec<(usize, String)> = Vec::with_capacity(CHUNK);
    let mut lines = reader.lines().enumerate();
    loop {
        chunk.clear();
        for (i, line) in lines.by_ref() {
            chunk.push((i + 1, line?));
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        // indexed collect keeps input order
        let records: Vec<Record> = chunk.par_iter().map(|(i, t)| process(*i, t)).collect();
        for rec in records {
            match rec {
                Record::Blank => {}
                Record::Report(r) => {
                    if !args.harris_only || r.harris {
                        serde_json::to_writer(&mut out, &r).map_err(io::Error::from)?;
                        out.write_all(b"\n")?;
                    }
                }
                Record::Error { line, code, message } => {
                    writeln!(out, "{}", json!({ "line": line, "error": message }))?;
                    eprintln!("line {line}: {message}");
                    // parse failures outrank ceiling failures
                    worst = Some(match worst {
                        Some(INVALID) => INVALID,
                        _ => code,
                    });
                    if args.strict {
                        out.flush()?;
                        return Err(Failure::silent(code));
                    }
                }
            }
        }
        out.flush()?;
    }
    match worst {
        Some(code) => Err(Failure::silent(code)),
        None => Ok(()),
    }
}
