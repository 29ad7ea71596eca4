//! Subcommand implementations. Each writes its result to `out`; an error
//! carries its own exit code.

use std::io::Write;

use serde::Serialize;

use abt_core::abh::enumerate_abh;
use abt_core::abt::for_each_abt;
use abt_core::conformance::{self, Suite};
use abt_core::counting::{crosscheck, Family};
use abt_core::ssb::enumerate_ssb;
use abt_core::tsscpp::{abt_to_boolean, enumerate_magog, BooleanTriangle};

use crate::envelope::{parse_object, Object};
use crate::error::CliError;
use crate::render::{render, Kind, Style};
use crate::route::convert;

/// Families `enumerate` accepts.
pub const ENUMERABLE: [&str; 5] = ["abt", "boolean", "magog", "ssb", "abh"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamFormat {
    Jsonl,
    Json,
    Count,
}

fn emit_stream(
    out: &mut dyn Write,
    format: StreamFormat,
    items: impl IntoIterator<Item = Object>,
) -> Result<(), CliError> {
    match format {
        StreamFormat::Jsonl => {
            for o in items {
                writeln!(out, "{}", o.to_json())?;
            }
        }
        StreamFormat::Json => {
            let all: Vec<_> = items.into_iter().map(|o| o.to_envelope()).collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string(&all).expect("serializable")
            )?;
        }
        StreamFormat::Count => writeln!(out, "{}", items.into_iter().count())?,
    }
    Ok(())
}

pub fn enumerate(
    out: &mut dyn Write,
    family: &str,
    size: usize,
    format: StreamFormat,
) -> Result<(), CliError> {
    match family {
        // Streams straight from the search so size 6 never materializes.
        "abt" => {
            let mut count = 0u64;
            let mut first = true;
            let mut io: std::io::Result<()> = Ok(());
            if format == StreamFormat::Json {
                write!(out, "[")?;
            }
            for_each_abt(size, |a| {
                count += 1;
                if io.is_err() {
                    return;
                }
                io = match format {
                    StreamFormat::Jsonl => writeln!(out, "{}", Object::abt(a).to_json()),
                    StreamFormat::Json => {
                        let sep = if first { "" } else { "," };
                        first = false;
                        write!(out, "{sep}{}", Object::abt(a).to_json())
                    }
                    StreamFormat::Count => Ok(()),
                };
            })?;
            io?;
            match format {
                StreamFormat::Json => writeln!(out, "]")?,
                StreamFormat::Count => writeln!(out, "{count}")?,
                StreamFormat::Jsonl => {}
            }
            Ok(())
        }
        "boolean" => {
            // Boolean triangles of order n pair with ABTs of size n - 1.
            if size < 2 {
                return Err(CliError::Usage(
                    "boolean triangles need order at least 2".into(),
                ));
            }
            let mut all: Vec<BooleanTriangle> = Vec::new();
            for_each_abt(size - 1, |a| all.push(abt_to_boolean(a)))?;
            all.sort_by_key(BooleanTriangle::to_rows);
            emit_stream(out, format, all.into_iter().map(Object::Boolean))
        }
        "magog" => emit_stream(
            out,
            format,
            enumerate_magog(size)?.into_iter().map(Object::Magog),
        ),
        "ssb" => emit_stream(
            out,
            format,
            enumerate_ssb(size)?.into_iter().map(Object::Ssb),
        ),
        "abh" => emit_stream(
            out,
            format,
            enumerate_abh(size)?.into_iter().map(Object::Abh),
        ),
        other => Err(CliError::Usage(format!(
            "cannot enumerate {other:?} (expected one of {})",
            ENUMERABLE.join(", ")
        ))),
    }
}

#[derive(Serialize)]
struct CountReport {
    family: &'static str,
    n: usize,
    formula: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    exhaustive: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

/// Closed-form count, optionally checked against exhaustive enumeration.
/// A mismatch is a validation failure.
pub fn count(
    out: &mut dyn Write,
    family: &str,
    n: usize,
    exhaustive: bool,
    json: bool,
) -> Result<(), CliError> {
    let fam: Family = family.parse()?;
    let report = if exhaustive {
        let c = crosscheck(fam, n)?;
        CountReport {
            family: fam.name(),
            n,
            formula: c.formula.to_string(),
            exhaustive: Some(c.exhaustive.to_string()),
            matches: Some(c.matches()),
        }
    } else {
        CountReport {
            family: fam.name(),
            n,
            formula: fam.formula(n as u64).to_string(),
            exhaustive: None,
            matches: None,
        }
    };
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("serializable")
        )?;
    } else {
        match &report.exhaustive {
            Some(e) => writeln!(out, "{} (exhaustive {e})", report.formula)?,
            None => writeln!(out, "{}", report.formula)?,
        }
    }
    if report.matches == Some(false) {
        return Err(CliError::Invalid(format!(
            "{family} n={n}: formula {} but enumeration found {}",
            report.formula,
            report.exhaustive.unwrap_or_default()
        )));
    }
    Ok(())
}

fn load(input: &str, family: Option<&str>) -> Result<Object, CliError> {
    let obj = parse_object(input)?;
    if let Some(f) = family {
        if f != obj.family() {
            return Err(CliError::Parse(format!(
                "expected a {f} object, found {}",
                obj.family()
            )));
        }
    }
    Ok(obj)
}

pub fn convert_cmd(
    out: &mut dyn Write,
    input: &str,
    from: Option<&str>,
    to: &str,
) -> Result<(), CliError> {
    let obj = load(input, from)?;
    writeln!(out, "{}", convert(obj, to)?.to_json())?;
    Ok(())
}

/// Prints `valid <family>` or the first violated condition.
pub fn validate(out: &mut dyn Write, input: &str, family: Option<&str>) -> Result<(), CliError> {
    let obj = load(input, family)?;
    match obj.violation()? {
        None => {
            writeln!(out, "valid {}", obj.family())?;
            Ok(())
        }
        Some(v) => {
            writeln!(out, "invalid {}: {v}", obj.family())?;
            Err(CliError::Invalid(format!("invalid {}: {v}", obj.family())))
        }
    }
}

pub fn render_cmd(
    out: &mut dyn Write,
    input: &str,
    kind: Kind,
    style: Style,
) -> Result<(), CliError> {
    let obj = parse_object(input)?.validated()?;
    write!(out, "{}", render(obj, kind, style)?)?;
    Ok(())
}

#[derive(Serialize)]
struct CheckLine<'a> {
    suite: &'a str,
    name: &'a str,
    passed: bool,
    detail: &'a str,
}

#[derive(Serialize)]
struct Summary<'a> {
    suite: &'a str,
    passed: usize,
    failed: usize,
}

/// One JSON line per check, then a summary line.
pub fn check(out: &mut dyn Write, suite: Suite) -> Result<(), CliError> {
    let rows = conformance::run(suite);
    for r in &rows {
        let line = CheckLine {
            suite: r.suite,
            name: &r.name,
            passed: r.passed,
            detail: &r.detail,
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string(&line).expect("serializable")
        )?;
    }
    let failed = rows.iter().filter(|r| !r.passed).count();
    let summary = Summary {
        suite: suite.name(),
        passed: rows.len() - failed,
        failed,
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&serde_json::json!({ "summary": summary })).expect("serializable")
    )?;
    if failed > 0 {
        return Err(CliError::Invalid(format!("{failed} check(s) failed")));
    }
    Ok(())
}
