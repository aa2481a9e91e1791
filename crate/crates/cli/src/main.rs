use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use domino_cli::doc::{PairDocument, PermutationDocument, TableauDocument};
use domino_cli::verify::{verify_parallel, worker_count};
use domino_cli::{parse_signed_permutation, render_ascii};
use domino_core::cycles::{all_cycles, classify_cycle, delta_cycles};
use domino_core::extended::{correspondence_components, gamma, mmt};
use domino_core::insertion::{robinson_schensted, rs_inverse, rs_partial};
use domino_core::rankmaps::{stabilization_rank, t_map};
use domino_core::{Cycle, DominoTableau, ExtendedCyclePair, Square, TableauPair};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "domino",
    version,
    about = "Domino Robinson-Schensted correspondences of any rank"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Write to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// JSON document to read; `-` or nothing reads stdin.
    #[arg(value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Tableau pair of a signed permutation given in one-line notation.
    Rs {
        #[arg(long, default_value_t = 0)]
        rank: u32,
        /// Also print the pair after each insertion.
        #[arg(long)]
        steps: bool,
        #[arg(allow_hyphen_values = true)]
        permutation: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Signed permutation of a tableau pair.
    RsInverse {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Moves through the minimal set of extended cycles and raises the rank.
    Mmt {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Cycles of a tableau, or extended cycles of a pair.
    Cycles {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Cycles meeting the core-adjacent diagonal; for a pair, the extended
    /// cycles moved by `mmt`.
    Delta {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Carries a tableau to another rank through its involution.
    Tmap {
        #[arg(long)]
        to_rank: u32,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Checks mmt(G_r(s)) = G_{r+1}(s) for every signed permutation.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Inclusive rank range `A..B`, or a single rank.
        #[arg(long, default_value = "0..4", value_parser = parse_ranks)]
        ranks: (u32, u32),
        /// Also report the rank from which placements stop changing.
        #[arg(long)]
        stabilization: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Draws a tableau or pair.
    Render {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

fn parse_ranks(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: u32 = a.trim().parse().map_err(|_| format!("bad rank `{a}`"))?;
    let b: u32 = b.trim().parse().map_err(|_| format!("bad rank `{b}`"))?;
    if a > b {
        return Err(format!("empty rank range {a}..{b}"));
    }
    Ok((a, b))
}

enum Document {
    Tableau(DominoTableau),
    Pair(TableauPair),
}

fn read_document(input: &InputArgs) -> Result<Document> {
    let text = match input.input.as_deref() {
        None => read_stdin()?,
        Some(p) if p == Path::new("-") => read_stdin()?,
        Some(p) => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
    };
    let value: Value = serde_json::from_str(&text).context("input is not JSON")?;
    if value.get("left").is_some() {
        let doc: PairDocument = serde_json::from_value(value).context("not a pair document")?;
        Ok(Document::Pair(doc.to_pair()?))
    } else {
        let doc: TableauDocument =
            serde_json::from_value(value).context("not a tableau document")?;
        Ok(Document::Tableau(doc.to_tableau()?))
    }
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
    Ok(s)
}

fn read_pair(input: &InputArgs) -> Result<TableauPair> {
    match read_document(input)? {
        Document::Pair(p) => Ok(p),
        Document::Tableau(_) => bail!("expected a pair document with `left` and `right`"),
    }
}

fn read_tableau(input: &InputArgs) -> Result<DominoTableau> {
    match read_document(input)? {
        Document::Tableau(t) => Ok(t),
        Document::Pair(_) => bail!("expected a single tableau document"),
    }
}

fn ascii_tableau(out: &mut String, name: &str, t: &DominoTableau) {
    let _ = writeln!(out, "{name} (rank {}, n = {})", t.rank(), t.len());
    for line in render_ascii(t).lines {
        let _ = writeln!(out, "{line}");
    }
}

fn ascii_pair(out: &mut String, p: &TableauPair) {
    ascii_tableau(out, "T", &p.left);
    out.push('\n');
    ascii_tableau(out, "S", &p.right);
}

fn json_text(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}

fn pos(s: Option<Square>) -> Value {
    s.map_or(Value::Null, |s| json!([s.row, s.col]))
}

fn cycle_json(t: &DominoTableau, c: &Cycle) -> Result<Value> {
    let class = classify_cycle(t, c)?;
    Ok(json!({
        "labels": c.labels(),
        "open": class.is_open(),
        "back": pos(class.back),
        "front": pos(class.front),
    }))
}

fn cycle_ascii(t: &DominoTableau, c: &Cycle) -> Result<String> {
    let class = classify_cycle(t, c)?;
    let labels: Vec<String> = c.labels().iter().map(u32::to_string).collect();
    let mut s = format!("{{{}}}", labels.join(","));
    match (class.back, class.front) {
        (Some(b), Some(f)) => {
            let _ = write!(s, " open {b} -> {f}");
        }
        _ => s.push_str(" closed"),
    }
    Ok(s)
}

fn component_json(b: &ExtendedCyclePair) -> Value {
    let side = |cs: &[Cycle]| cs.iter().map(|c| c.labels().clone()).collect::<Vec<_>>();
    json!({ "left": side(b.in_left.cycles()), "right": side(b.in_right.cycles()) })
}

fn component_ascii(b: &ExtendedCyclePair) -> String {
    let side = |cs: &[Cycle]| {
        let parts: Vec<String> = cs
            .iter()
            .map(|c| {
                let ls: Vec<String> = c.labels().iter().map(u32::to_string).collect();
                format!("{{{}}}", ls.join(","))
            })
            .collect();
        if parts.is_empty() {
            "-".to_string()
        } else {
            parts.join(" ")
        }
    };
    format!("T: {} | S: {}", side(b.in_left.cycles()), side(b.in_right.cycles()))
}

fn describe_cycles(
    doc: Document,
    format: Format,
    tableau_cycles: fn(&DominoTableau) -> Vec<Cycle>,
    pair_components: fn(&TableauPair) -> domino_core::Result<Vec<ExtendedCyclePair>>,
) -> Result<String> {
    let mut out = String::new();
    match doc {
        Document::Tableau(t) => {
            let cycles = tableau_cycles(&t);
            match format {
                Format::Json => {
                    let list =
                        cycles.iter().map(|c| cycle_json(&t, c)).collect::<Result<Vec<_>>>()?;
                    out = json_text(&json!({ "cycles": list }));
                }
                Format::Ascii => {
                    for c in &cycles {
                        let _ = writeln!(out, "{}", cycle_ascii(&t, c)?);
                    }
                }
            }
        }
        Document::Pair(p) => {
            let components = pair_components(&p)?;
            match format {
                Format::Json => {
                    let list: Vec<Value> = components.iter().map(component_json).collect();
                    out = json_text(&json!({ "components": list }));
                }
                Format::Ascii => {
                    for b in &components {
                        let _ = writeln!(out, "{}", component_ascii(b));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Outcome of a subcommand: its text and whether every check passed.
struct Outcome {
    text: String,
    ok: bool,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn run(command: &Command) -> Result<Outcome> {
    Ok(match command {
        Command::Rs { rank, steps, permutation, out } => {
            let sigma = parse_signed_permutation(permutation)?;
            let pair = robinson_schensted(&sigma, *rank);
            match out.format {
                Format::Json if *steps => {
                    let all = (1..=sigma.len())
                        .map(|k| rs_partial(&sigma, *rank, k).map(|p| PairDocument::from_pair(&p)))
                        .collect::<domino_core::Result<Vec<_>>>()?;
                    json_text(&json!({ "steps": all }))
                }
                Format::Json => json_text(&PairDocument::from_pair(&pair)),
                Format::Ascii => {
                    let mut text = String::new();
                    if *steps {
                        for k in 1..sigma.len() {
                            let _ = writeln!(text, "after {k}:");
                            ascii_pair(&mut text, &rs_partial(&sigma, *rank, k)?);
                            text.push('\n');
                        }
                    }
                    ascii_pair(&mut text, &pair);
                    text
                }
            }
            .into()
        }
        Command::RsInverse { input, out } => {
            let sigma = rs_inverse(&read_pair(input)?)?;
            match out.format {
                Format::Json => json_text(&PermutationDocument::from_permutation(&sigma)),
                Format::Ascii => format!("{sigma}\n"),
            }
            .into()
        }
        Command::Mmt { input, out } => {
            let pair = mmt(&read_pair(input)?)?;
            match out.format {
                Format::Json => json_text(&PairDocument::from_pair(&pair)),
                Format::Ascii => {
                    let mut text = String::new();
                    ascii_pair(&mut text, &pair);
                    text
                }
            }
            .into()
        }
        Command::Cycles { input, out } => describe_cycles(
            read_document(input)?,
            out.format,
            all_cycles,
            correspondence_components,
        )?
        .into(),
        Command::Delta { input, out } => {
            describe_cycles(read_document(input)?, out.format, delta_cycles, gamma)?.into()
        }
        Command::Tmap { to_rank, input, out } => {
            let t = t_map(&read_tableau(input)?, *to_rank)?;
            match out.format {
                Format::Json => json_text(&TableauDocument::from_tableau(&t)),
                Format::Ascii => {
                    let mut text = String::new();
                    ascii_tableau(&mut text, "T", &t);
                    text
                }
            }
            .into()
        }
        Command::Verify { max_n, ranks, stabilization, out } => {
            verify(*max_n, *ranks, *stabilization, out.format)
        }
        Command::Render { input, .. } => {
            let mut text = String::new();
            match read_document(input)? {
                Document::Tableau(t) => {
                    for line in render_ascii(&t).lines {
                        let _ = writeln!(text, "{line}");
                    }
                }
                Document::Pair(p) => ascii_pair(&mut text, &p),
            }
            text.into()
        }
    })
}

const SHOWN_FAILURES: usize = 10;

fn verify(max_n: usize, (lo, hi): (u32, u32), stabilization: bool, format: Format) -> Outcome {
    let workers = worker_count();
    let mut rows = Vec::new();
    let mut text = String::new();
    let (mut checked, mut failed) = (0u64, 0u64);
    for n in 0..=max_n {
        for r in lo..=hi {
            let report = verify_parallel(n, r, workers);
            checked += report.count_checked;
            failed += report.count_failed;
            let _ = writeln!(
                text,
                "n = {n}, rank {r} -> {}: {} checked, {} failed",
                r + 1,
                report.count_checked,
                report.count_failed
            );
            for (sigma, why) in report.failures.iter().take(SHOWN_FAILURES) {
                let _ = writeln!(text, "  FAIL {sigma}: {why}");
            }
            rows.push(json!({
                "n": n,
                "rank_from": r,
                "checked": report.count_checked,
                "failed": report.count_failed,
                "failures": report.failures.iter().take(SHOWN_FAILURES)
                    .map(|(s, why)| json!({ "window": s.window(), "reason": why }))
                    .collect::<Vec<_>>(),
            }));
        }
    }
    let _ = writeln!(text, "total: {checked} checked, {failed} failed");
    let mut stab = Vec::new();
    if stabilization {
        for n in 0..=max_n {
            let ceiling = 2 * n as u32 + 2;
            let value = stabilization_rank(n, ceiling);
            match &value {
                Ok(r0) => {
                    let _ = writeln!(text, "n = {n}: placements stable from rank {r0}");
                }
                Err(e) => {
                    failed += 1;
                    let _ = writeln!(text, "n = {n}: {e}");
                }
            }
            stab.push(json!({ "n": n, "ceiling": ceiling, "rank": value.ok() }));
        }
    }
    if format == Format::Json {
        let mut doc = json!({ "runs": rows, "checked": checked, "failed": failed });
        if stabilization {
            doc["stabilization"] = Value::Array(stab);
        }
        text = json_text(&doc);
    }
    Outcome { text, ok: failed == 0 }
}

/// Writes `text` to `path` through a sibling temporary file so readers
/// never see a partial file.
fn write_atomically(path: &Path, text: &str) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| anyhow!("bad output path {}", path.display()))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    std::fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))
}

fn output_path(command: &Command) -> Option<&Path> {
    match command {
        Command::Rs { out, .. }
        | Command::RsInverse { out, .. }
        | Command::Mmt { out, .. }
        | Command::Cycles { out, .. }
        | Command::Delta { out, .. }
        | Command::Tmap { out, .. }
        | Command::Verify { out, .. } => out.output.as_deref(),
        Command::Render { output, .. } => output.as_deref(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match output_path(&cli.command) {
        Some(path) => write_atomically(path, &outcome.text),
        None => {
            std::io::stdout().lock().write_all(outcome.text.as_bytes()).context("writing stdout")
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
