use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use unimap::autgroup::{aut_data, is_regular, is_strictly_edge_transitive};
use unimap::census::{brute_census, census_row, census_table, class_representatives, CensusConfig, CensusRow};
use unimap::classify::{classify_edge_transitive, classify_regular, scan, Classification};
use unimap::maps::{DartMap, OneVertexMap};
use unimap::perm::parse_cycles;
use unimap::verify::{run_all, SuiteReport};

mod text;

const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// One-vertex maps: analysis, census by automorphism group, and
/// classification against the classical curves.
#[derive(Debug, Parser)]
#[command(name = "unimap", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text", env = "UNIMAP_FORMAT")]
    format: Format,
    /// Largest k for the exhaustive oracle.
    #[arg(long, global = true, default_value_t = CensusConfig::default().brute_cap, env = "UNIMAP_BRUTE_CAP")]
    brute_cap: usize,
    /// Largest k for explicit enumeration of commuting involutions.
    #[arg(long, global = true, default_value_t = CensusConfig::default().gen_cap, env = "UNIMAP_GEN_CAP")]
    gen_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Profile a map given by cycle notation.
    Analyze(AnalyzeArgs),
    /// Counts of maps by automorphism group.
    Census(CensusArgs),
    /// Classify regular or strictly edge-transitive one-vertex maps.
    Classify(ClassifyArgs),
    /// Run the self-verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Edge count of a one-vertex map; x is then (0 1 ... 2k-1).
    #[arg(long, env = "UNIMAP_K", conflicts_with_all = ["x", "degree"])]
    k: Option<usize>,
    /// Edge involution.
    #[arg(long, env = "UNIMAP_Y")]
    y: String,
    /// Vertex rotation for a general map.
    #[arg(long, env = "UNIMAP_X", requires = "degree")]
    x: Option<String>,
    #[arg(long, env = "UNIMAP_DEGREE", requires = "x")]
    degree: Option<usize>,
}

#[derive(Debug, Args)]
struct CensusArgs {
    #[arg(long, env = "UNIMAP_K")]
    k: usize,
    /// Restrict to one divisor p of 2k.
    #[arg(long, env = "UNIMAP_P")]
    p: Option<usize>,
    /// Compare against exhaustive enumeration.
    #[arg(long, env = "UNIMAP_ORACLE")]
    oracle: bool,
    /// List one canonical representative per class.
    #[arg(long, env = "UNIMAP_REPS")]
    reps: bool,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long, env = "UNIMAP_K", required_unless_present = "scan", conflicts_with = "scan")]
    k: Option<u64>,
    /// Shift parameter of a strictly edge-transitive map.
    #[arg(long, env = "UNIMAP_T", conflicts_with_all = ["regular", "scan"], required_unless_present_any = ["regular", "scan"])]
    t: Option<u64>,
    /// The regular map y = x^k.
    #[arg(long, env = "UNIMAP_REGULAR", conflicts_with = "scan")]
    regular: bool,
    /// Every regular and strictly edge-transitive map up to this genus.
    #[arg(long, env = "UNIMAP_SCAN")]
    scan: Option<u64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 6, env = "UNIMAP_KMAX")]
    kmax: usize,
}

struct Report {
    result: Value,
    text: String,
    warnings: Vec<String>,
    ok: bool,
}

impl Report {
    fn new<T: Serialize>(result: &T, text: String) -> Result<Report> {
        Ok(Report {
            result: serde_json::to_value(result)?,
            text,
            warnings: Vec::new(),
            ok: true,
        })
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: &'static str,
    command: &'a str,
    result: Value,
    warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn analyze(args: &AnalyzeArgs) -> Result<Report> {
    if let Some(k) = args.k {
        let m = OneVertexMap::parse(k, &args.y)?;
        let profile = m.profile();
        let faces = m.as_dart_map().face_circuits();
        let aut = aut_data(&m);
        let (regular, strict) = (is_regular(&m), is_strictly_edge_transitive(&m));
        let result = json!({
            "form": "one-vertex",
            "k": k,
            "x": m.x(),
            "y": m.y(),
            "faces": faces,
            "profile": profile,
            "aut": aut,
            "regular": regular,
            "strictly_edge_transitive": strict,
        });
        let text = text::analyze(&text::MapView {
            x: m.x().to_string(),
            y: m.y().to_string(),
            faces: faces.to_string(),
            profile: &profile,
            aut: Some((&aut, regular, strict)),
        });
        return Report::new(&result, text);
    }
    let (Some(x), Some(degree)) = (&args.x, args.degree) else {
        bail!("give either --k with --y, or --x, --y and --degree");
    };
    let x = parse_cycles(x, degree).context("parsing --x")?;
    let y = parse_cycles(&args.y, degree).context("parsing --y")?;
    let m = DartMap::new(x, y)?;
    let profile = m.profile();
    let faces = m.face_circuits();
    let result = json!({
        "form": "general",
        "x": m.x(),
        "y": m.y(),
        "faces": faces,
        "profile": profile,
    });
    let text = text::analyze(&text::MapView {
        x: m.x().to_string(),
        y: m.y().to_string(),
        faces: faces.to_string(),
        profile: &profile,
        aut: None,
    });
    let mut report = Report::new(&result, text)?;
    report
        .warnings
        .push("automorphism data is computed for one-vertex maps only".to_string());
    Ok(report)
}

#[derive(Serialize)]
struct CensusLine {
    #[serde(flatten)]
    row: CensusRow,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute: Option<u64>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    representatives: Option<Vec<String>>,
}

fn census(args: &CensusArgs, config: &CensusConfig) -> Result<Report> {
    let k = args.k;
    let rows = match args.p {
        Some(p) => vec![census_row(k, p)?],
        None => census_table(k)?,
    };
    let brute = if args.oracle {
        Some(brute_census(k, config.brute_cap)?)
    } else {
        None
    };
    let mut lines = Vec::with_capacity(rows.len());
    for row in rows {
        let count = brute.as_ref().map(|b| b[&row.p]);
        let representatives = if args.reps {
            let reps = class_representatives(k, row.p, config.gen_cap)?;
            Some(reps.iter().map(|m| m.y().to_string()).collect())
        } else {
            None
        };
        lines.push(CensusLine {
            matches: count.map(|c| row.nu == c.into()),
            brute: count,
            row,
            representatives,
        });
    }
    let mut report = Report::new(&lines, text::census(&lines))?;
    for line in lines.iter().filter(|l| l.matches == Some(false)) {
        report.warnings.push(format!(
            "k = {}, p = {}: formula gives {} but exhaustive count is {}",
            k,
            line.row.p,
            line.row.nu,
            line.brute.unwrap_or_default()
        ));
        report.ok = false;
    }
    Ok(report)
}

fn classify(args: &ClassifyArgs) -> Result<Report> {
    if let Some(g) = args.scan {
        let all: Vec<Classification> = scan(g)?;
        return Report::new(&all, text::classifications(&all));
    }
    let k = args.k.context("--k is required")?;
    let c = if args.regular {
        classify_regular(k)?
    } else {
        classify_edge_transitive(k, args.t.context("--t or --regular is required")?)?
    };
    Report::new(&c, text::classification(&c))
}

fn verify(args: &VerifyArgs, config: &CensusConfig) -> Result<Report> {
    let suites: Vec<SuiteReport> = run_all(args.kmax, config);
    let ok = suites.iter().all(|s| s.passed);
    let mut report = Report::new(&suites, text::suites(&suites))?;
    if args.kmax > config.brute_cap {
        report.warnings.push(format!(
            "oracle equality limited to k <= {} by --brute-cap",
            config.brute_cap
        ));
    }
    if args.kmax > config.gen_cap {
        report.warnings.push(format!(
            "generator completeness limited to k <= {} by --gen-cap",
            config.gen_cap
        ));
    }
    report.ok = ok;
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = CensusConfig {
        brute_cap: cli.brute_cap,
        gen_cap: cli.gen_cap,
    };
    let (name, outcome) = match &cli.command {
        Command::Analyze(a) => ("analyze", analyze(a)),
        Command::Census(a) => ("census", census(a, &config)),
        Command::Classify(a) => ("classify", classify(a)),
        Command::Verify(a) => ("verify", verify(a, &config)),
    };
    let (ok, envelope, body) = match outcome {
        Ok(r) => (
            r.ok,
            Envelope {
                schema_version: SCHEMA_VERSION,
                command: name,
                result: r.result,
                warnings: r.warnings,
                error: None,
            },
            r.text,
        ),
        Err(e) => (
            false,
            Envelope {
                schema_version: SCHEMA_VERSION,
                command: name,
                result: Value::Null,
                warnings: Vec::new(),
                error: Some(format!("{e:#}")),
            },
            String::new(),
        ),
    };
    match cli.format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&envelope).expect("envelope serializes"));
        }
        Format::Text => {
            print!("{body}");
            for w in &envelope.warnings {
                eprintln!("warning: {w}");
            }
            if let Some(e) = &envelope.error {
                eprintln!("error: {e}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
