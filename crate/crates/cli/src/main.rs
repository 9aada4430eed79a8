//! Command-line front end: classify and synthesize interval partitions,
//! compare refinement types, and work with the sine-arc graph family.
//!
//! Every error exits nonzero, printing a machine-parsable reason code on the
//! first stderr line and human-readable detail after it.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use lineclass::classify;
use lineclass::interval::{parse_rational, Interval, Rational};
use lineclass::partition::{PartitionDesc, PartitionError, TypeQuadruple};
use lineclass::sinegraph::{
    components, decode, encode, gamma, sample_rows, DigitWindow, GSeq, SinegraphError,
};

#[derive(Parser)]
#[command(
    name = "lineclass",
    version,
    about = "Classify locally connected refinements of the real line and explore the sine-arc graph family"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Clone)]
enum Command {
    /// Validate a partition file; report its type, admissibility class and
    /// separability/discreteness flags
    Classify {
        /// Partition file (JSON with a "blocks" array)
        #[arg(long)]
        partition: PathBuf,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Produce a partition file realizing an admissible type
    Synthesize {
        /// Type quadruple, e.g. "(continuum,1,1,1)" or "(0,0,aleph0,0)"
        #[arg(long = "type")]
        type_: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide homeomorphism and two-way embeddability of two types
    Compare {
        /// First type quadruple
        t1: String,
        /// Second type quadruple
        t2: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the digit-string window of F[g] around the anchor
    FgEncode {
        /// Sequence spec "prefix=<word>;tail=<word>" over {1,2}
        #[arg(long)]
        g: String,
        /// Digits to show on each side of the anchor
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover the visible values of g from a digit-string window
    FgDecode {
        /// Space-separated digits with the anchor marked, e.g. "1 0 ^2 0 2"
        window: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit CSV rows "x,y" sampling F[g] over a window
    FgSample {
        #[arg(long)]
        g: String,
        /// Closed window "lo:hi" with rational endpoints
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// Positive rational step, e.g. "1/4"
        #[arg(long)]
        step: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the discontinuity set of F[g] within a window
    FgGamma {
        #[arg(long)]
        g: String,
        /// Closed window "lo:hi" with rational endpoints
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the ordered path components of F[g] for an index range
    FgComponents {
        #[arg(long)]
        g: String,
        /// Inclusive index range "lo:hi", integers; index 0 is the base segment
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every request listed in a manifest file, one per line, in order
    Batch {
        #[arg(long)]
        manifest: PathBuf,
    },
}

struct Failure {
    code: &'static str,
    detail: String,
}

impl Failure {
    fn new(code: &'static str, detail: impl Into<String>) -> Failure {
        Failure {
            code,
            detail: detail.into(),
        }
    }
}

fn partition_failure(e: PartitionError) -> Failure {
    let code = match &e {
        PartitionError::Invalid(_) => "validation-failed",
        PartitionError::Inadmissible(_) => "inadmissible-type",
        PartitionError::NoCarvable => "carve-impossible",
        PartitionError::BadCarveTarget { .. } => "bad-carve-target",
        PartitionError::Interval(_) | PartitionError::Format(_) => "parse-error",
    };
    match e {
        PartitionError::Invalid(violations) => {
            let mut detail = String::from("partition is not a valid description:");
            for v in violations {
                let _ = write!(detail, "\n  {v}");
            }
            Failure::new(code, detail)
        }
        other => Failure::new(code, other.to_string()),
    }
}

fn sinegraph_failure(e: SinegraphError) -> Failure {
    let code = match &e {
        SinegraphError::NotInOmega => "not-in-omega",
        SinegraphError::ParseGSeq(_) => "parse-error",
        SinegraphError::OutsideArc { .. } => "outside-domain",
        SinegraphError::UnboundedWindow => "bad-window",
        SinegraphError::BadStep => "bad-step",
        SinegraphError::MalformedWindow(_) => "malformed-digit-window",
        SinegraphError::AnchorMissing => "anchor-missing",
        SinegraphError::NonChainable(_) => "non-chainable",
        SinegraphError::OrientationUndecidable => "orientation-undecidable",
    };
    Failure::new(code, e.to_string())
}

fn parse_type(s: &str) -> Result<TypeQuadruple, Failure> {
    TypeQuadruple::from_str(s).map_err(partition_failure)
}

fn parse_g(s: &str) -> Result<GSeq, Failure> {
    GSeq::from_str(s).map_err(sinegraph_failure)
}

fn parse_window(s: &str) -> Result<Interval, Failure> {
    let bad = || {
        Failure::new(
            "parse-error",
            format!("not a window: {s:?} (expected lo:hi)"),
        )
    };
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo = parse_rational(lo).map_err(|e| Failure::new("parse-error", e.to_string()))?;
    let hi = parse_rational(hi).map_err(|e| Failure::new("parse-error", e.to_string()))?;
    if lo == hi {
        Ok(Interval::point(lo))
    } else if lo < hi {
        Ok(Interval::segment(lo, hi))
    } else {
        Err(bad())
    }
}

fn parse_index_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || {
        Failure::new(
            "parse-error",
            format!("not an index range: {s:?} (expected lo:hi, integers)"),
        )
    };
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new("io-error", format!("{}: {e}", path.display())))
}

fn classify_report(desc: &PartitionDesc) -> Result<String, Failure> {
    let t = desc.compute_type().map_err(partition_failure)?;
    let class = if classify::in_q1(&t) { "Q1" } else { "Q2" };
    let mut line = format!("{t} {class}");
    let inadmissible =
        |e: classify::InadmissibleType| Failure::new("inadmissible-type", e.to_string());
    if classify::is_separable(&t).map_err(inadmissible)? {
        line.push_str(" separable");
    }
    if classify::is_discrete(&t).map_err(inadmissible)? {
        line.push_str(" discrete");
    }
    line.push('\n');
    Ok(line)
}

fn run(cmd: &Command) -> Result<String, Failure> {
    match cmd {
        Command::Classify { partition, .. } => {
            let text = read_file(partition)?;
            let desc = PartitionDesc::from_json(&text).map_err(partition_failure)?;
            classify_report(&desc)
        }
        Command::Synthesize { type_, .. } => {
            let t = parse_type(type_)?;
            let desc = lineclass::partition::synthesize(&t).map_err(partition_failure)?;
            Ok(desc.to_json() + "\n")
        }
        Command::Compare { t1, t2, .. } => {
            let t1 = parse_type(t1)?;
            let t2 = parse_type(t2)?;
            let v = classify::compare(&t1, &t2)
                .map_err(|e| Failure::new("inadmissible-type", e.to_string()))?;
            Ok(format!(
                "forward={} backward={} homeomorphic={}\n",
                v.forward, v.backward, v.homeomorphic
            ))
        }
        Command::FgEncode { g, n, .. } => {
            let g = parse_g(g)?;
            Ok(format!("{}\n", encode(&g, *n)))
        }
        Command::FgDecode { window, .. } => {
            let w = DigitWindow::from_str(window).map_err(sinegraph_failure)?;
            let values = decode(&w).map_err(sinegraph_failure)?;
            let text: Vec<String> = values.iter().map(|d| d.to_string()).collect();
            Ok(text.join(" ") + "\n")
        }
        Command::FgSample {
            g, window, step, ..
        } => {
            let g = parse_g(g)?;
            let w = parse_window(window)?;
            let step: Rational =
                parse_rational(step).map_err(|e| Failure::new("parse-error", e.to_string()))?;
            let rows = sample_rows(&g, &w, &step).map_err(sinegraph_failure)?;
            let mut out = String::with_capacity(rows.len() * 16);
            for (x, y) in rows {
                let _ = writeln!(out, "{x},{y}");
            }
            Ok(out)
        }
        Command::FgGamma { g, window, .. } => {
            let g = parse_g(g)?;
            let w = parse_window(window)?;
            let points = gamma(&g, &w).map_err(sinegraph_failure)?;
            let text: Vec<String> = points.iter().map(|p| p.to_string()).collect();
            Ok(text.join(" ") + "\n")
        }
        Command::FgComponents { g, window, .. } => {
            let g = parse_g(g)?;
            let (lo, hi) = parse_index_range(window)?;
            let mut out = String::new();
            for c in components(&g, lo, hi) {
                let _ = writeln!(
                    out,
                    "index={} noncuts={} footprint={}",
                    c.position_index, c.noncuts, c.footprint
                );
            }
            Ok(out)
        }
        Command::Batch { manifest } => run_batch(manifest),
    }
}

fn run_batch(manifest: &Path) -> Result<String, Failure> {
    let text = read_file(manifest)?;
    let requests: Vec<(usize, String)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results = lineclass::par::indexed_map(requests.len(), |i| {
        let (_, line) = &requests[i];
        let args = std::iter::once("lineclass").chain(line.split_whitespace());
        match Cli::try_parse_from(args) {
            Err(e) => Err(Failure::new("bad-request", e.to_string())),
            Ok(cli) => match cli.cmd {
                Command::Batch { .. } => {
                    Err(Failure::new("bad-request", "batch cannot nest".to_string()))
                }
                cmd => run(&cmd),
            },
        }
    });
    let mut out = String::new();
    let mut failures = 0usize;
    for ((line_no, line), result) in requests.iter().zip(results) {
        match result {
            Ok(text) => {
                let _ = writeln!(out, "## {line_no} ok: {line}");
                out.push_str(&text);
            }
            Err(f) => {
                failures += 1;
                let _ = writeln!(out, "## {line_no} failed: {line}");
                let _ = writeln!(out, "{}", f.code);
                let _ = writeln!(out, "{}", f.detail);
            }
        }
    }
    if failures > 0 {
        let _ = writeln!(out, "## {failures} request(s) failed");
        // the stream itself is the report; still exit nonzero
        print!("{out}");
        return Err(Failure::new(
            "batch-failed",
            format!("{failures} request(s) failed"),
        ));
    }
    Ok(out)
}

fn deliver(cmd: &Command, output: String) -> Result<(), Failure> {
    let out_path = match cmd {
        Command::Classify { out, .. }
        | Command::Synthesize { out, .. }
        | Command::Compare { out, .. }
        | Command::FgEncode { out, .. }
        | Command::FgDecode { out, .. }
        | Command::FgSample { out, .. }
        | Command::FgGamma { out, .. }
        | Command::FgComponents { out, .. } => out.as_ref(),
        Command::Batch { .. } => None,
    };
    match out_path {
        Some(path) => std::fs::write(path, output)
            .map_err(|e| Failure::new("io-error", format!("{}: {e}", path.display()))),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd).and_then(|output| deliver(&cli.cmd, output)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.code);
            eprintln!("{}", f.detail);
            ExitCode::FAILURE
        }
    }
}
