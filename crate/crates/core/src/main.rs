use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use multiwheel::constructors::{parse_spec, Built, FamilySpec};
use multiwheel::graph::io::{parse_graph, to_dot, to_graph6, to_json};
use multiwheel::minors::has_minor;
use multiwheel::report::{
    render_bundle, render_csv, render_table, sweep, sweep_specs, verify, Check, Family, SweepBounds, VerifyOptions,
    DEFAULT_CAP,
};
use multiwheel::topology::{certify_projective_quadrangulation, validate_embedding, Embedding};
use multiwheel::Graph;

#[derive(Parser)]
#[command(name = "multiwheel", version, about = "Build multiwheel graphs and certify their properties")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a graph from a spec literal such as w:1rr-3ss-3sr, g:q=2 or p:c=1;s=1,1,2
    Construct {
        spec: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
        /// Also emit the sum configuration (JSON)
        #[arg(long)]
        with_config: bool,
        /// Also emit the bundled embedding (JSON)
        #[arg(long)]
        with_embedding: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a graph given as a file (graph6 or JSON) or a spec literal
    Verify {
        target: String,
        /// Comma-separated subset of color,critical,planar,quad,bracket
        #[arg(long, value_delimiter = ',', default_value = "color,critical,planar,quad,bracket")]
        checks: Vec<Check>,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFormat,
        /// Projective embedding (JSON face list) for the quad check
        #[arg(long)]
        embedding: Option<PathBuf>,
        /// Record χ after contracting every edge
        #[arg(long)]
        contractions: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify every instance of a family within bounds
    Sweep {
        #[arg(value_parser = parse_family)]
        family: Family,
        /// Sections per plane multiwheel
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        max_q: u32,
        /// Largest central order for projective multiwheels
        #[arg(long, default_value_t = 1)]
        max_central: u32,
        /// Use all four section types instead of rr only
        #[arg(long)]
        all_types: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Required for a cap above the default
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_delimiter = ',', default_value = "color,critical,planar,quad,bracket")]
        checks: Vec<Check>,
        #[arg(long, value_enum, default_value = "table")]
        format: SweepFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate an embedding file
    Embed {
        #[arg(long)]
        check: PathBuf,
    },
    /// Minor containment
    Minor {
        /// O, O- or any spec literal
        #[arg(long)]
        pattern: String,
        /// File or spec literal
        #[arg(long)]
        host: String,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

/// Input error; exit status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), InputError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// A file path if one exists, otherwise a spec literal.
fn load(target: &str) -> Result<(Option<FamilySpec>, Built), InputError> {
    let path = Path::new(target);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| InputError(format!("{target}: {e}")))?;
        let g = parse_graph(&text).map_err(|e| InputError(format!("{target}: {e}")))?;
        return Ok((None, Built::plain(g)));
    }
    let spec = parse_spec(target).map_err(|e| InputError(format!("not a file, and {e}")))?;
    let built = spec.build()?;
    Ok((Some(spec), built))
}

fn pattern(s: &str) -> Result<Graph, InputError> {
    Ok(load(s)?.1.graph)
}

fn run(cli: Cli) -> Result<bool, InputError> {
    match cli.cmd {
        Cmd::Construct { spec, format, with_config, with_embedding, out } => {
            let built = parse_spec(&spec)?.build()?;
            let g = &built.graph;
            let text = match format {
                GraphFormat::Graph6 | GraphFormat::Dot if with_config || with_embedding => {
                    return Err(InputError("--with-config and --with-embedding need --format json".into()))
                }
                GraphFormat::Graph6 => format!("{}\n", to_graph6(g)),
                GraphFormat::Dot => to_dot(g, &built.ghosts),
                GraphFormat::Json if !(with_config || with_embedding) => format!("{}\n", to_json(g)),
                GraphFormat::Json => {
                    let mut doc = serde_json::Map::new();
                    doc.insert("graph".into(), serde_json::to_value(g)?);
                    if with_config {
                        doc.insert("configuration".into(), serde_json::to_value(&built.configuration)?);
                    }
                    if with_embedding {
                        doc.insert("embedding".into(), serde_json::to_value(&built.embedding)?);
                    }
                    format!("{}\n", serde_json::to_string_pretty(&doc)?)
                }
            };
            emit(out.as_deref(), &text)?;
            Ok(true)
        }
        Cmd::Verify { target, checks, format, embedding, contractions, out } => {
            let (spec, built) = load(&target)?;
            let supplied: Option<Embedding> = match &embedding {
                Some(p) => Some(serde_json::from_str(&fs::read_to_string(p)?)?),
                None => built
                    .embedding
                    .clone()
                    .filter(|e| validate_embedding(e).is_ok_and(|s| s.euler_characteristic == 1)),
            };
            if let Some(e) = &supplied {
                if e.graph != built.graph {
                    return Err(InputError("embedding does not belong to the graph".into()));
                }
            }
            let opts = VerifyOptions {
                spec: spec.map(|s| s.to_string()),
                checks: &checks,
                embedding: supplied.as_ref(),
                contractions,
                timestamp: true,
            };
            let bundle = verify(&built.graph, &opts);
            let text = match format {
                ReportFormat::Table => render_bundle(&bundle),
                ReportFormat::Json => format!("{}\n", serde_json::to_string_pretty(&bundle)?),
            };
            emit(out.as_deref(), &text)?;
            Ok(bundle.all_pass())
        }
        Cmd::Sweep { family, k, max_q, max_central, all_types, cap, allow_large, jobs, checks, format, out } => {
            if cap > DEFAULT_CAP && !allow_large {
                return Err(InputError(format!("--cap above {DEFAULT_CAP} needs --allow-large")));
            }
            let bounds = SweepBounds { k, max_q, max_central, all_types, cap };
            let specs = sweep_specs(family, &bounds)?;
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                pool = pool.num_threads(j.max(1));
            }
            let rows = pool.build()?.install(|| sweep(family, &specs, &checks));
            let text = match format {
                SweepFormat::Table => render_table(&rows),
                SweepFormat::Csv => render_csv(&rows),
                SweepFormat::Json => format!("{}\n", serde_json::to_string_pretty(&rows)?),
            };
            emit(out.as_deref(), &text)?;
            Ok(rows.iter().all(|r| !r.flagged))
        }
        Cmd::Embed { check } => {
            let text = fs::read_to_string(&check).map_err(|e| InputError(format!("{}: {e}", check.display())))?;
            let e: Embedding = serde_json::from_str(&text)?;
            match validate_embedding(&e) {
                Ok(s) => {
                    println!("valid embedding");
                    println!("euler characteristic {}", s.euler_characteristic);
                    println!("orientable {}", s.orientable);
                    for (len, count) in &s.face_lengths {
                        println!("faces of length {len}: {count}");
                    }
                    let quad = certify_projective_quadrangulation(&e)?;
                    println!("projective quadrangulation {quad}");
                    Ok(true)
                }
                Err(err) => {
                    println!("invalid embedding: {err}");
                    Ok(false)
                }
            }
        }
        Cmd::Minor { pattern: p, host } => {
            let pat = pattern(&p)?;
            let host = load(&host)?.1.graph;
            match has_minor(&host, &pat) {
                Some(w) => {
                    w.validate(&host, &pat).map_err(InputError)?;
                    println!("{}", serde_json::to_string_pretty(&w)?);
                    Ok(true)
                }
                None => {
                    println!("absent");
                    Ok(false)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
