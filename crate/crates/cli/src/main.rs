mod error;
mod sample;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arcknot_core::arc::SpatialArc;
use arcknot_core::chord::{chord_code, chord_diagram_of, enumerate_adjoints, reduce_clean_chord};
use arcknot_core::diagram::{build_diagram, diagram_along, project, projection_code, render_svg};
use arcknot_core::geom::{Direction, Rat};
use arcknot_core::io::{parse_arc_json, parse_direction};
use arcknot_core::knotting::{
    adjoint_verdicts, probability_of_diagram, probability_pair, ClassificationTable, FiniteGroup,
    KnottingProbability, OracleConfig, TypeProbability, DEFAULT_GROUP_BOUND,
};
use arcknot_core::trace::{canonical_direction, sign_vector, trace_circles};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use error::CliError;

#[derive(Parser)]
#[command(name = "arcknot", version, about = "Canonical arc diagrams of polygonal arcs and their knotting probabilities")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct ArcDir {
    /// Arc file: {"vertices": [["x","y","z"], ...]}.
    #[arg(long)]
    arc: PathBuf,
    /// Projection direction "x,y,z" with rational components.
    #[arg(long)]
    dir: String,
}

#[derive(Args)]
struct Oracle {
    /// Comma-separated groups: S3, D4, A4, C<n>, or paths to multiplication-table files.
    #[arg(long, default_value = "S3,D4,A4")]
    groups: String,
    /// Classification table file.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Largest group order used for hom counting.
    #[arg(long, default_value_t = DEFAULT_GROUP_BOUND)]
    group_bound: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the canonical diagram code for a direction.
    Project {
        #[command(flatten)]
        at: ArcDir,
        /// Code the projection along the direction itself, which must be generic.
        #[arg(long)]
        direct: bool,
        /// Also write an SVG drawing.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// List the trace walls: great circles, then triple-point cones.
    Trace {
        #[arg(long)]
        arc: PathBuf,
    },
    /// Region fingerprint of a direction, or the walls it lies on.
    Region {
        #[command(flatten)]
        at: ArcDir,
    },
    /// Chord diagram code.
    Chord {
        #[command(flatten)]
        at: ArcDir,
        /// Merge loops joined by clean chords first.
        #[arg(long)]
        reduce: bool,
    },
    /// One line per adjoint chord diagram: type, index, code.
    Adjoints {
        #[command(flatten)]
        at: ArcDir,
    },
    /// Knotting probability quadruple.
    Prob {
        #[command(flatten)]
        at: ArcDir,
        #[command(flatten)]
        oracle: Oracle,
        /// Report the pair for both orientations and its average.
        #[arg(long)]
        pair: bool,
        /// List the verdict of every adjoint.
        #[arg(long)]
        verdicts: bool,
    },
    /// Sample directions and count distinct diagrams.
    Sample {
        #[arg(long)]
        arc: PathBuf,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Largest absolute coordinate of the sampled integer vectors.
        #[arg(long, default_value_t = 20)]
        height: i64,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))
}

fn load_arc(path: &Path) -> Result<SpatialArc, CliError> {
    Ok(parse_arc_json(&read(path)?)?)
}

fn load(at: &ArcDir) -> Result<(SpatialArc, Direction), CliError> {
    Ok((load_arc(&at.arc)?, parse_direction(&at.dir)?))
}

fn oracle_config(o: &Oracle) -> Result<OracleConfig, CliError> {
    let mut groups = Vec::new();
    for item in o.groups.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let g = match FiniteGroup::by_name(item) {
            Some(g) => g,
            None => FiniteGroup::parse_table(item, &read(Path::new(item))?)?,
        };
        groups.push(g);
    }
    let table = match &o.table {
        Some(p) => ClassificationTable::parse(&read(p)?)?,
        None => ClassificationTable::default(),
    };
    Ok(OracleConfig {
        groups,
        table,
        plugin: None,
        group_bound: o.group_bound,
    })
}

fn inline(text: &str) -> String {
    text.replace('\n', ";")
}

fn type_json(t: &TypeProbability) -> Value {
    if t.vacuous() {
        return Value::Null;
    }
    json!({
        "total": t.total,
        "knotted": t.knotted,
        "unknotted": t.unknotted,
        "lower": t.lower().to_string(),
        "upper": t.upper().to_string(),
    })
}

fn prob_json(p: &KnottingProbability) -> Value {
    let names = ["I", "II", "III", "IV"];
    let mut m = serde_json::Map::new();
    for (n, t) in names.iter().zip(&p.types) {
        m.insert(n.to_string(), type_json(t));
    }
    Value::Object(m)
}

fn show_average(avg: &[Option<(Rat, Rat)>; 4]) -> String {
    let parts: Vec<String> = avg
        .iter()
        .map(|a| match a {
            None => "-".to_string(),
            Some((lo, hi)) if lo == hi => lo.to_string(),
            Some((lo, hi)) => format!("[{},{}]", lo, hi),
        })
        .collect();
    format!("({})", parts.join(", "))
}

/// Output of one command: plain text and its JSON form.
struct Report {
    text: String,
    json: Value,
}

fn run(cmd: &Cmd) -> Result<Report, CliError> {
    match cmd {
        Cmd::Project { at, direct, svg } => {
            let (arc, u) = load(at)?;
            let used = if *direct { u.clone() } else { canonical_direction(&arc, &u)? };
            let scene = project(&arc, &used)?;
            let d = build_diagram(&scene);
            let code = if *direct { projection_code(&arc, &u)? } else { d.code() };
            if let Some(p) = svg {
                std::fs::write(p, render_svg(&scene)).map_err(|e| CliError::Io(format!("{}: {}", p.display(), e)))?;
            }
            Ok(Report {
                text: code.to_string(),
                json: json!({
                    "code": code.as_str(),
                    "direction": used.vec().to_string(),
                    "crossings": d.crossing_count(),
                    "inbound": d.is_inbound(),
                }),
            })
        }
        Cmd::Trace { arc } => {
            let ts = trace_circles(&load_arc(arc)?);
            let circles: Vec<Vec<String>> = ts
                .circles
                .iter()
                .map(|c| c.int_coords().iter().map(|x| x.to_string()).collect())
                .collect();
            let cones: Vec<Vec<String>> = ts.cones.iter().map(|c| c.coeffs().iter().map(|x| x.to_string()).collect()).collect();
            let mut lines: Vec<String> = circles.iter().map(|c| c.join(" ")).collect();
            lines.extend(cones.iter().map(|c| format!("cone {}", c.join(" "))));
            Ok(Report {
                text: lines.join("\n"),
                json: json!({ "circles": circles, "cones": cones }),
            })
        }
        Cmd::Region { at } => {
            let (arc, u) = load(at)?;
            let ts = trace_circles(&arc);
            match sign_vector(&ts, &u) {
                Ok(fp) => Ok(Report {
                    text: format!("fingerprint: {}", fp),
                    json: json!({ "fingerprint": fp.to_string(), "on_walls": Value::Null }),
                }),
                Err(_) => {
                    let walls = ts.walls_through(u.vec());
                    let list: Vec<String> = walls.iter().map(|w| w.to_string()).collect();
                    Ok(Report {
                        text: format!("on walls: {}", list.join(" ")),
                        json: json!({ "fingerprint": Value::Null, "on_walls": walls }),
                    })
                }
            }
        }
        Cmd::Chord { at, reduce } => {
            let (arc, u) = load(at)?;
            let mut c = chord_diagram_of(&diagram_along(&arc, &u)?);
            let mut merges = 0;
            if *reduce {
                let (r, log) = reduce_clean_chord(&c);
                c = r;
                merges = log.len();
            }
            let code = chord_code(&c);
            Ok(Report {
                text: code.to_string(),
                json: json!({ "code": code.as_str(), "merges": merges }),
            })
        }
        Cmd::Adjoints { at } => {
            let (arc, u) = load(at)?;
            let d = diagram_along(&arc, &u)?;
            let adj = enumerate_adjoints(&chord_diagram_of(&d), d.crossing_count());
            let rows: Vec<(String, usize, String)> = adj
                .iter()
                .map(|a| (a.type_tag.to_string(), a.index, chord_code(&a.diagram).to_string()))
                .collect();
            Ok(Report {
                text: rows.iter().map(|(t, i, c)| format!("{} {} {}", t, i, inline(c))).collect::<Vec<_>>().join("\n"),
                json: json!({
                    "adjoints": rows.iter().map(|(t, i, c)| json!({"type": t, "index": i, "code": c})).collect::<Vec<_>>()
                }),
            })
        }
        Cmd::Prob { at, oracle, pair, verdicts } => {
            let (arc, u) = load(at)?;
            let cfg = oracle_config(oracle)?;
            if *pair {
                let pp = probability_pair(&arc, &u, &cfg)?;
                let avg = pp.average();
                return Ok(Report {
                    text: format!("{}\n{}\naverage: {}", pp.pair[0], pp.pair[1], show_average(&avg)),
                    json: json!({
                        "pair": [prob_json(&pp.pair[0]), prob_json(&pp.pair[1])],
                        "average": avg.iter().map(|a| a.as_ref().map(|(lo, hi)| json!({"lower": lo.to_string(), "upper": hi.to_string()}))).collect::<Vec<_>>(),
                    }),
                });
            }
            let d = diagram_along(&arc, &u)?;
            let p = probability_of_diagram(&d, &cfg);
            let mut text = p.to_string();
            let mut list = Vec::new();
            if *verdicts {
                for (a, v) in adjoint_verdicts(&d, &cfg) {
                    text.push_str(&format!("\n{} {} {}", a.type_tag, a.index, v));
                    list.push(json!({"type": a.type_tag.to_string(), "index": a.index, "verdict": v.to_string()}));
                }
            }
            let mut j = json!({ "probability": prob_json(&p), "display": p.to_string() });
            if *verdicts {
                j["verdicts"] = Value::Array(list);
            }
            Ok(Report { text, json: j })
        }
        Cmd::Sample { arc, count, seed, height } => {
            if *count == 0 || *height < 1 {
                return Err(CliError::Argument("--count and --height must be at least 1".into()));
            }
            let r = sample::run(&load_arc(arc)?, *count, *seed, *height)?;
            Ok(Report {
                text: r.text(),
                json: r.json(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok(r) => {
            let out = if cli.json {
                serde_json::to_string_pretty(&r.json).unwrap()
            } else {
                r.text
            };
            // a closed pipe downstream is not an error
            match writeln!(std::io::stdout().lock(), "{}", out) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error[Io]: {}", e);
                    ExitCode::from(3)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            if cli.json {
                eprintln!("{}", json!({ "error": { "kind": e.kind(), "message": e.to_string() } }));
            } else {
                eprintln!("error[{}]: {}", e.kind(), e);
            }
            ExitCode::from(e.exit_code())
        }
    }
}
