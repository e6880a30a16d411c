//! `srvan`: face-counting vanishing criteria and graded local cohomology of
//! Stanley–Reisner rings from the command line.
//!
//! Exit codes: 0 when the queried property holds, 1 when it does not, 2 on
//! any input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use srvan_core::audit::{run_audit, AuditSummary, TOOL_VERSION};
use srvan_core::corpus::{CorpusSpec, SubcomplexStrategy};
use srvan_core::io::{emit_text, parse_complex, ComplexJson};
use srvan_core::local::{
    criterion_violations, local_cohomology_vanishes, CriterionLevels, VanishingQuery,
};
use srvan_core::subdivision::{barycentric, collapse_sweep, sd_minus, Subdivision};
use srvan_core::{FieldSpec, SimplicialComplex};

#[derive(Parser, Debug)]
#[command(name = "srvan", version, about = "Vanishing criteria for local cohomology of Stanley-Reisner rings")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads for parallel evaluation.
    #[arg(long, env = "SRVAN_WORKERS", global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the level-n face-counting criterion; exit 0 iff it holds.
    Check {
        delta: PathBuf,
        sigma: PathBuf,
        #[arg(long)]
        n: i32,
    },
    /// Graded pieces of H^index_J(k[delta]); exit 0 iff all vanish.
    Cohomology {
        delta: PathBuf,
        sigma: PathBuf,
        #[arg(long)]
        index: i32,
        /// Q, F<p> or Fp:<p>.
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
    },
    /// Compare criterion and computation on a seeded corpus; exit 1 on any disagreement.
    Audit {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex range `A..B` (inclusive) or a single count.
        #[arg(long, default_value = "4..6", value_parser = parse_range)]
        vertices: (u32, u32),
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, value_delimiter = ',', default_value = "Q,F2")]
        fields: Vec<FieldSpec>,
        #[arg(long, default_value = "mixed")]
        strategy: SubcomplexStrategy,
        /// Also write the report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Barycentric subdivision of delta, or Sd(delta - sigma) with --sigma.
    Subdivide {
        delta: PathBuf,
        #[arg(long)]
        sigma: Option<PathBuf>,
    },
    /// Greedy collapse sweep clearing the target dimensions; exit 0 iff it succeeds.
    ///
    /// With --sigma the sweep runs on Sd(delta - sigma).
    Collapse {
        delta: PathBuf,
        #[arg(long)]
        sigma: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        targets: Vec<i32>,
    },
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((parse(a)?, parse(b)?))
        }
        None => parse(s).map(|v| (v, v)),
    }
}

/// Errors that map to exit code 2.
struct InputError(String);

impl From<srvan_core::Error> for InputError {
    fn from(e: srvan_core::Error) -> Self {
        InputError(e.to_string())
    }
}

struct Report {
    json: Value,
    text: String,
    ok: bool,
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_complex(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn complex_json(k: &SimplicialComplex) -> Value {
    serde_json::to_value(ComplexJson::from(k)).expect("complex serializes")
}

fn check(delta: &Path, sigma: &Path, n: i32) -> Result<Report, InputError> {
    let (d_cx, s_cx) = (read_complex(delta)?, read_complex(sigma)?);
    if !s_cx.is_subcomplex_of(&d_cx)? {
        return Err(InputError("sigma is not a subcomplex of delta".into()));
    }
    let levels = CriterionLevels::new(&d_cx, n)?;
    let violations = criterion_violations(&d_cx, &s_cx, n)?;
    let holds = violations.is_empty();
    let mut text = format!(
        "d = {}, n = {n}, index {}{}: criterion {}\n",
        levels.d,
        levels.cohomological_index(),
        if levels.admissible() { "" } else { " (n outside 1..d-1)" },
        if holds { "holds" } else { "fails" }
    );
    for v in &violations {
        let _ = writeln!(
            text,
            "  {}-face {} has {} vertices of sigma, needs {}",
            v.face_dim, v.face, v.sigma_vertices, v.required
        );
    }
    Ok(Report {
        json: json!({
            "tool_version": TOOL_VERSION,
            "query": { "delta": complex_json(&d_cx), "sigma": complex_json(&s_cx), "n": n },
            "d": levels.d,
            "index": levels.cohomological_index(),
            "admissible": levels.admissible(),
            "holds": holds,
            "violations": violations,
        }),
        text,
        ok: holds,
    })
}

fn cohomology(delta: &Path, sigma: &Path, index: i32, field: FieldSpec) -> Result<Report, InputError> {
    let (d_cx, s_cx) = (read_complex(delta)?, read_complex(sigma)?);
    let query = VanishingQuery::new(d_cx.clone(), s_cx.clone(), index, field)?;
    let out = local_cohomology_vanishes(&query)?;
    let mut text = format!(
        "H^{index}_J over {field}: {}\n",
        if out.vanishes { "vanishes" } else { "nonzero" }
    );
    for p in out.per_pair_dims.iter().filter(|p| p.dim != 0) {
        let _ = writeln!(text, "  (F+ = {}, F- = {}): {}", p.f_plus, p.f_minus, p.dim);
    }
    Ok(Report {
        json: json!({
            "tool_version": TOOL_VERSION,
            "query": {
                "delta": complex_json(&d_cx),
                "sigma": complex_json(&s_cx),
                "index": index,
                "field": field,
            },
            "vanishes": out.vanishes,
            "witness": out.witness,
            "pieces": out.per_pair_dims,
        }),
        text,
        ok: out.vanishes,
    })
}

fn audit_text(s: &AuditSummary) -> String {
    let mut text = format!(
        "{} instances, {}/{} comparisons agree\n",
        s.instances, s.agreements, s.comparisons
    );
    for t in &s.totals {
        let _ = writeln!(text, "  n = {} over {}: {} agree, {} disagree", t.n, t.field, t.agree, t.disagree);
    }
    for d in &s.disagreements {
        let _ = writeln!(
            text,
            "  instance {} n = {} over {}: criterion {}, vanishing {}",
            d.instance_id, d.n, d.field, d.criterion_verdict, d.cohomology_verdict
        );
    }
    for c in &s.field_conflicts {
        let _ = writeln!(text, "  instance {} index {}: fields disagree {:?}", c.instance_id, c.index, c.verdicts);
    }
    text
}

fn audit(spec: CorpusSpec, fields: &[FieldSpec], output: Option<&Path>) -> Result<Report, InputError> {
    if fields.is_empty() {
        return Err(InputError("at least one field is required".into()));
    }
    let summary = run_audit(&spec, fields)?;
    let json = serde_json::to_value(&summary).expect("summary serializes");
    if let Some(path) = output {
        let body = serde_json::to_string_pretty(&json).expect("summary serializes");
        std::fs::write(path, body + "\n").map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    }
    Ok(Report { text: audit_text(&summary), ok: summary.all_agree() && summary.field_conflicts.is_empty(), json })
}

fn subdivision_of(delta: &Path, sigma: Option<&Path>) -> Result<(SimplicialComplex, Subdivision), InputError> {
    let d_cx = read_complex(delta)?;
    let sd = match sigma {
        Some(s) => sd_minus(&d_cx, &read_complex(s)?)?,
        None => barycentric(&d_cx),
    };
    Ok((d_cx, sd))
}

fn subdivide(delta: &Path, sigma: Option<&Path>) -> Result<Report, InputError> {
    let (_, sd) = subdivision_of(delta, sigma)?;
    let mut text = emit_text(&sd.complex);
    for (i, b) in sd.barycenters.iter().enumerate() {
        let _ = writeln!(text, "# {} = b{}", i + 1, b);
    }
    Ok(Report {
        json: json!({
            "tool_version": TOOL_VERSION,
            "complex": complex_json(&sd.complex),
            "barycenters": sd.barycenters,
        }),
        text,
        ok: true,
    })
}

fn collapse(delta: &Path, sigma: Option<&Path>, targets: &[i32]) -> Result<Report, InputError> {
    let (x, barycenters) = match sigma {
        Some(_) => {
            let (_, sd) = subdivision_of(delta, sigma)?;
            (sd.complex, Some(sd.barycenters))
        }
        None => (read_complex(delta)?, None),
    };
    let state = collapse_sweep(&x, targets);
    let mut text = format!(
        "{} elementary collapses, {}\n",
        state.removed_pairs.len(),
        if state.stuck { "stuck" } else { "targets cleared" }
    );
    for (tau, sigma) in &state.removed_pairs {
        let _ = writeln!(text, "  {tau} < {sigma}");
    }
    for f in &state.remaining_targets {
        let _ = writeln!(text, "  left: {f}");
    }
    Ok(Report {
        json: json!({
            "tool_version": TOOL_VERSION,
            "targets": targets,
            "input": complex_json(&x),
            "barycenters": barycenters,
            "removed_pairs": state.removed_pairs,
            "stuck": state.stuck,
            "remaining_targets": state.remaining_targets,
            "result": complex_json(&state.current),
        }),
        text,
        ok: !state.stuck,
    })
}

fn run(cli: Cli) -> Result<Report, InputError> {
    if let Some(w) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| InputError(format!("worker pool: {e}")))?;
    }
    match cli.command {
        Command::Check { delta, sigma, n } => check(&delta, &sigma, n),
        Command::Cohomology { delta, sigma, index, field } => cohomology(&delta, &sigma, index, field),
        Command::Audit { seed, vertices, count, fields, strategy, output } => {
            let spec = CorpusSpec {
                seed,
                vertex_min: vertices.0,
                vertex_max: vertices.1,
                instance_count: count,
                strategy,
            };
            audit(spec, &fields, output.as_deref())
        }
        Command::Subdivide { delta, sigma } => subdivide(&delta, sigma.as_deref()),
        Command::Collapse { delta, sigma, targets } => collapse(&delta, sigma.as_deref(), &targets),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(report) => {
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report.json).expect("report serializes"))
                }
                Format::Text => print!("{}", report.text),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
