//! Command-line front end for `abt-core`: enumerate, count, convert,
//! validate, render and self-check, over a tagged JSON interchange format.

pub mod commands;
pub mod envelope;
pub mod error;
pub mod render;
pub mod route;

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use abt_core::conformance::Suite;

use commands::StreamFormat;
pub use error::CliError;
use render::{Kind, Style};

#[derive(Debug, Parser)]
#[command(
    name = "abt",
    version,
    about = "Approval ballot triangles and their relatives"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Io {
    /// Read input from this file instead of stdin.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Write output to this file instead of stdout.
    #[arg(long = "out", value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every object of a family and size in canonical order.
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        size: usize,
        /// jsonl, json or count.
        #[arg(long, default_value = "jsonl")]
        format: String,
        #[command(flatten)]
        io: Io,
    },
    /// Closed-form count for a family.
    Count {
        #[arg(long)]
        family: String,
        #[arg(long)]
        size: usize,
        /// Also enumerate and compare.
        #[arg(long)]
        exhaustive: bool,
        /// text or json.
        #[arg(long, default_value = "text")]
        format: String,
        #[command(flatten)]
        io: Io,
    },
    /// Map an object along the bijection graph.
    Convert {
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: String,
        #[command(flatten)]
        io: Io,
    },
    /// Exit 0 if the object is valid, 1 with the first violation otherwise.
    Validate {
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        io: Io,
    },
    /// Draw an object as ASCII or SVG.
    Render {
        /// triangle, paths or heights.
        #[arg(long, default_value = "triangle")]
        kind: String,
        /// ascii or svg.
        #[arg(long, default_value = "ascii")]
        format: String,
        #[command(flatten)]
        io: Io,
    },
    /// Run the built-in conformance suites.
    Check {
        /// counts, roundtrips, figures or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        io: Io,
    },
}

fn read_input(io: &Io, stdin: &mut dyn Read) -> Result<String, CliError> {
    match &io.input {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn stream_format(s: &str) -> Result<StreamFormat, CliError> {
    match s {
        "jsonl" => Ok(StreamFormat::Jsonl),
        "json" => Ok(StreamFormat::Json),
        "count" => Ok(StreamFormat::Count),
        _ => Err(CliError::Usage(format!(
            "enumerate writes jsonl, json or count, not {s:?}"
        ))),
    }
}

fn style(s: &str) -> Result<Style, CliError> {
    match s {
        "ascii" => Ok(Style::Ascii),
        "svg" => Ok(Style::Svg),
        _ => Err(CliError::Usage(format!(
            "render writes ascii or svg, not {s:?}"
        ))),
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), CliError> {
    let io = match &cmd {
        Command::Enumerate { io, .. }
        | Command::Count { io, .. }
        | Command::Convert { io, .. }
        | Command::Validate { io, .. }
        | Command::Render { io, .. }
        | Command::Check { io, .. } => io,
    };
    let mut file;
    let out: &mut dyn Write = match &io.output {
        Some(p) => {
            file = BufWriter::new(
                fs::File::create(p)
                    .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", p.display())))?,
            );
            &mut file
        }
        None => stdout,
    };
    match &cmd {
        Command::Enumerate {
            family,
            size,
            format,
            ..
        } => commands::enumerate(out, family, *size, stream_format(format)?)?,
        Command::Count {
            family,
            size,
            exhaustive,
            format,
            ..
        } => {
            let json = match format.as_str() {
                "text" => false,
                "json" => true,
                f => {
                    return Err(CliError::Usage(format!(
                        "count writes text or json, not {f:?}"
                    )))
                }
            };
            commands::count(out, family, *size, *exhaustive, json)?
        }
        Command::Convert { from, to, .. } => {
            let input = read_input(io, stdin)?;
            commands::convert_cmd(out, &input, from.as_deref(), to)?
        }
        Command::Validate { family, .. } => {
            let input = read_input(io, stdin)?;
            commands::validate(out, &input, family.as_deref())?
        }
        Command::Render { kind, format, .. } => {
            let (kind, style) = (kind.parse::<Kind>()?, style(format)?);
            let input = read_input(io, stdin)?;
            commands::render_cmd(out, &input, kind, style)?
        }
        Command::Check { suite, .. } => {
            let suite: Suite = suite
                .parse()
                .map_err(|e: abt_core::Error| CliError::Usage(e.to_string()))?;
            commands::check(out, suite)?
        }
    }
    out.flush()?;
    Ok(())
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = stdout.flush();
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Convenience for tests: run with a string as stdin, capture both streams.
pub fn run_captured(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["abt"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 output"),
        String::from_utf8(err).expect("utf-8 output"),
    )
}

/// Reads stdin and writes stdout for the binary.
pub fn main_with_std() -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut out,
        &mut io::stderr(),
    );
    let _ = out.flush();
    code
}
