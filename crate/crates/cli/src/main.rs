//! Command-line surface. Every verb loads an algebra file, computes, and
//! prints either human-readable text or a JSON envelope with a fixed field
//! order. Exit codes: 0 success (and passing checks), 1 failing check,
//! 2 bad input or usage.

mod output;

use clap::{Parser, Subcommand, ValueEnum};
use output::Outcome;
use qtilt_core::algebra::{Algebra, VertexIdempotent, DEFAULT_WORD_CAP};
use qtilt_core::checkers;
use qtilt_core::constructions::{
    preprojective_algebra_A, subset_algebra, SubsetCollection,
};
use qtilt_core::enumerate::enumerate_indecomposables;
use qtilt_core::error::{Error, Result};
use qtilt_core::expr;
use qtilt_core::homology::{
    ext_dim, injective_coresolution_summands, projective_resolution_summands,
    tau_d, tau_d_inv, translate_closure,
};
use qtilt_core::report::Condition;
use qtilt_core::rep::Representation;
use qtilt_core::scalar::Field;
use qtilt_core::textfmt;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "qtilt",
    version,
    about = "Exact computations with bound quiver algebras: Ext groups, \
             higher translates, idempotent quotients, and tilting checks"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutFormat,

    /// Seed recorded in reports; randomized sweeps derive from it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Include wall-clock timings in the JSON envelope. Off by default so
    /// identical invocations are byte-identical.
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Field, vertex and arrow counts, and dimension of an algebra file.
    Info { file: PathBuf },

    /// The path basis of the algebra, one word per line.
    Basis { file: PathBuf },

    /// Dimension of Ext^i(M, N); i = 0 gives Hom.
    Ext {
        file: PathBuf,
        /// Cohomological degree.
        #[arg(short = 'i', default_value_t = 1)]
        degree: usize,
        /// Left module expression, e.g. "S(1)" or "sum(P(1),I(2))".
        #[arg(short = 'M')]
        m: String,
        /// Right module expression.
        #[arg(short = 'N')]
        n: String,
    },

    /// Terms of the minimal projective resolution (or injective
    /// coresolution) of a module.
    Resolve {
        file: PathBuf,
        #[arg(short = 'M')]
        m: String,
        /// How many terms to compute.
        #[arg(long, default_value_t = 8)]
        length: usize,
        /// Walk the injective coresolution instead.
        #[arg(long)]
        injective: bool,
    },

    /// The higher translate tau_d of a module (or its inverse).
    Tau {
        file: PathBuf,
        #[arg(short = 'M')]
        m: String,
        #[arg(short = 'd', default_value_t = 1)]
        d: usize,
        /// Apply tau_d^- instead of tau_d.
        #[arg(long)]
        inverse: bool,
    },

    /// Quotient by the two-sided ideal generated by vertex idempotents.
    Quotient {
        file: PathBuf,
        /// Vertices to delete, comma-separated names.
        #[arg(short = 'e', value_delimiter = ',', required = true)]
        e: Vec<String>,
        /// Write the quotient as an algebra file.
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },

    /// Build an algebra from a named construction.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },

    /// Run a decision procedure and report per-condition verdicts.
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },

    /// Render the quiver as a DOT graph; relations become dashed edges.
    ExportDot {
        file: PathBuf,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Preprojective algebra of the linear quiver with `rank` vertices.
    Preprojective {
        #[arg(long)]
        rank: usize,
        /// "Q" or a prime p.
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Algebra of an ordered collection of k-subsets of {1..n}: one vertex
    /// per subset, arrows along element shifts, squares commute, lone
    /// two-step paths vanish.
    Subsets {
        #[arg(long)]
        n: usize,
        /// Comma-separated subsets: digit strings ("135") for n <= 9,
        /// dot-separated ("1.3.5") for larger n.
        #[arg(long, value_delimiter = ',', required = true)]
        sets: Vec<String>,
        /// Wrap element shifts mod n.
        #[arg(long)]
        cyclic: bool,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Generator-cogenerator, d-rigid, closed under both d-translates.
    Precluster {
        file: PathBuf,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
        /// Collection as a module-expression list, e.g. "P(*),S(1),S(3)".
        #[arg(long)]
        modules: Option<String>,
        /// Use the translate closure of the projectives instead.
        #[arg(long)]
        closure: bool,
    },

    /// Cluster tilting against an enumerated list of indecomposables
    /// (prime fields only).
    Cluster {
        file: PathBuf,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
        #[arg(long)]
        modules: Option<String>,
        #[arg(long)]
        closure: bool,
        /// Dimension bound for the indecomposable enumeration.
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },

    /// Descent of a precluster-tilting collection to the idempotent
    /// quotient; hypotheses and conclusion verified independently.
    #[command(name = "theorem1")]
    Theorem1 {
        file: PathBuf,
        #[arg(short = 'e', value_delimiter = ',', required = true)]
        e: Vec<String>,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
        #[arg(long)]
        modules: Option<String>,
        #[arg(long)]
        closure: bool,
    },

    /// Ascent of a precluster-tilting collection from the idempotent
    /// quotient; module expressions are evaluated over the quotient.
    #[command(name = "theorem2")]
    Theorem2 {
        file: PathBuf,
        #[arg(short = 'e', value_delimiter = ',', required = true)]
        e: Vec<String>,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
        #[arg(long)]
        modules: Option<String>,
        #[arg(long)]
        closure: bool,
        /// Read the translate-set condition with a universal quantifier
        /// over the test injectives instead of existential.
        #[arg(long)]
        forall: bool,
    },

    /// Projectivity/injectivity hypotheses and the idempotent-ideal and
    /// cluster-tilting conclusions over the quotient.
    Jk {
        file: PathBuf,
        #[arg(short = 'e', value_delimiter = ',', required = true)]
        e: Vec<String>,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
        #[arg(long)]
        modules: Option<String>,
        #[arg(long)]
        closure: bool,
        /// When set, enumerate quotient indecomposables up to this
        /// dimension bound to close the cluster-tilting conclusion.
        #[arg(long)]
        bound: Option<usize>,
    },

    /// Is the ideal generated by the idempotent k-idempotent?
    Ideal {
        file: PathBuf,
        #[arg(short = 'e', value_delimiter = ',', required = true)]
        e: Vec<String>,
        #[arg(short = 'k', default_value_t = 1)]
        k: usize,
    },

    /// Equivalence of Ext-vanishing from the quotient with Ext agreement
    /// between quotient and ambient algebra, for one module.
    Apt {
        file: PathBuf,
        #[arg(short = 'e', value_delimiter = ',', required = true)]
        e: Vec<String>,
        #[arg(short = 'N')]
        n: String,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
    },

    /// Exactness and injectivity of the transported coresolution.
    Coresolution {
        file: PathBuf,
        #[arg(short = 'e', value_delimiter = ',', required = true)]
        e: Vec<String>,
        #[arg(short = 'N')]
        n: String,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
    },

    /// Membership in the class of modules whose coresolution starts with
    /// d terms injective at the idempotent.
    InjectiveClass {
        file: PathBuf,
        #[arg(short = 'e', value_delimiter = ',', required = true)]
        e: Vec<String>,
        #[arg(short = 'N')]
        n: String,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
    },

    /// Both orientations of the second-cosyzygy membership statement.
    BoundaryLemma {
        file: PathBuf,
        #[arg(short = 'e', value_delimiter = ',', required = true)]
        e: Vec<String>,
        #[arg(short = 'M')]
        m: String,
    },

    /// Dimension duality between Ext^i(M,N) and Ext^(d-i) against the
    /// translate, on a collection.
    Duality {
        file: PathBuf,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
        #[arg(long)]
        modules: Option<String>,
        #[arg(long)]
        closure: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok((outcome, command, inputs)) => {
            let code = outcome.exit_code();
            match cli.format {
                OutFormat::Text => println!("{}", outcome.text.trim_end()),
                OutFormat::Json => {
                    let timings = cli.timings.then(|| {
                        let mut t = BTreeMap::new();
                        t.insert(
                            "total_ms".to_string(),
                            start.elapsed().as_millis() as u64,
                        );
                        t
                    });
                    let envelope = outcome.envelope(command, inputs, timings);
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&envelope)
                            .expect("report serialization")
                    );
                }
            }
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn load(file: &Path) -> Result<Arc<Algebra>> {
    let text = std::fs::read_to_string(file)?;
    Ok(Arc::new(textfmt::build_from_text(&text, DEFAULT_WORD_CAP)?))
}

fn idempotent(
    alg: &Arc<Algebra>,
    names: &[String],
) -> Result<VertexIdempotent> {
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    VertexIdempotent::from_names(&alg.quiver, &refs)
}

/// The collection a check runs on: an explicit expression list, or the
/// translate closure of the projectives.
fn collection(
    alg: &Arc<Algebra>,
    modules: &Option<String>,
    closure: bool,
    d: usize,
) -> Result<Vec<Representation>> {
    match (modules, closure) {
        (Some(text), false) => expr::eval_collection(alg, text),
        (None, true) => translate_closure(alg, d),
        (None, false) => Err(Error::Input(
            "pass --modules or --closure to name the collection".into(),
        )),
        (Some(_), true) => Err(Error::Input(
            "--modules and --closure are mutually exclusive".into(),
        )),
    }
}

fn field_arg(text: &str) -> Result<Field> {
    if text == "Q" || text == "q" {
        return Ok(Field::Rationals);
    }
    let p: u64 = text
        .parse()
        .map_err(|_| Error::Input(format!("field must be Q or a prime, got '{text}'")))?;
    let prime = p >= 2 && (2..=p.isqrt()).all(|k| p % k != 0);
    if !prime {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    Ok(Field::Prime(p))
}

fn parse_set(text: &str) -> Result<Vec<usize>> {
    if text.contains('.') {
        text.split('.')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| {
                    Error::Input(format!("bad element '{t}' in '{text}'"))
                })
            })
            .collect()
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                    Error::Input(format!("bad digit '{c}' in '{text}'"))
                })
            })
            .collect()
    }
}

fn algebra_summary(alg: &Algebra) -> (String, Value) {
    let text = format!(
        "field: {}\nvertices: {}\narrows: {}\nrelations: {}\ndimension: {}",
        alg.field,
        alg.num_vertices(),
        alg.quiver.arrows.len(),
        alg.relations.len(),
        alg.dim()
    );
    let output = json!({
        "field": alg.field.to_string(),
        "vertices": alg.num_vertices(),
        "arrows": alg.quiver.arrows.len(),
        "relations": alg.relations.len(),
        "dimension": alg.dim(),
    });
    (text, output)
}

/// Write a constructed algebra out (or print it) and summarize it.
fn deliver_algebra(alg: &Algebra, out: &Option<PathBuf>) -> Result<Outcome> {
    let rendered = textfmt::print_algebra(alg);
    let (summary, mut output) = algebra_summary(alg);
    match out {
        Some(path) => {
            std::fs::write(path, &rendered)?;
            output["wrote"] = json!(path.display().to_string());
            Ok(Outcome::plain(
                format!("{summary}\nwrote {}", path.display()),
                output,
            ))
        }
        None => {
            output["wrote"] = Value::Null;
            Ok(Outcome::plain(rendered, output))
        }
    }
}

type Inputs = BTreeMap<String, Value>;
type RunResult = Result<(Outcome, String, BTreeMap<String, Value>)>;

fn put(inputs: &mut Inputs, k: &str, v: Value) {
    inputs.insert(k.to_string(), v);
}

fn run(cli: &Cli) -> RunResult {
    let mut inputs = BTreeMap::new();
    put(&mut inputs, "seed", json!(cli.seed));
    macro_rules! arg {
        ($k:expr, $v:expr $(,)?) => {
            put(&mut inputs, $k, $v)
        };
    }

    let outcome_command = match &cli.verb {
        Verb::Info { file } => {
            arg!("file", json!(file.display().to_string()));
            let alg = load(file)?;
            let (text, output) = algebra_summary(&alg);
            (Outcome::plain(text, output), "info".to_string())
        }

        Verb::Basis { file } => {
            arg!("file", json!(file.display().to_string()));
            let alg = load(file)?;
            let words: Vec<String> = alg
                .basis
                .iter()
                .map(|w| w.display(&alg.quiver).to_string())
                .collect();
            let text = words.join("\n");
            let output = json!({"dimension": alg.dim(), "basis": words});
            (Outcome::plain(text, output), "basis".to_string())
        }

        Verb::Ext { file, degree, m, n } => {
            arg!("file", json!(file.display().to_string()));
            arg!("i", json!(degree));
            arg!("M", json!(m));
            arg!("N", json!(n));
            let alg = load(file)?;
            let mm = expr::eval_module(&alg, m)?;
            let nn = expr::eval_module(&alg, n)?;
            let dim = ext_dim(&mm, &nn, *degree)?;
            (
                Outcome::plain(dim.to_string(), json!({ "dim": dim })),
                "ext".to_string(),
            )
        }

        Verb::Resolve { file, m, length, injective } => {
            arg!("file", json!(file.display().to_string()));
            arg!("M", json!(m));
            arg!("length", json!(length));
            arg!("injective", json!(injective));
            let alg = load(file)?;
            let module = expr::eval_module(&alg, m)?;
            let summands = if *injective {
                injective_coresolution_summands(&module, *length)?
            } else {
                projective_resolution_summands(&module, *length)?
            };
            let tag = if *injective { "I" } else { "P" };
            let mut lines = Vec::new();
            let mut terms = Vec::new();
            for (k, verts) in summands.iter().enumerate() {
                let term: Vec<String> = verts
                    .iter()
                    .map(|&v| format!("{tag}({})", alg.quiver.vertices[v]))
                    .collect();
                lines.push(format!("{k}: {}", term.join(" + ")));
                terms.push(
                    verts
                        .iter()
                        .map(|&v| alg.quiver.vertices[v].clone())
                        .collect::<Vec<_>>(),
                );
            }
            let finite = summands.len() < *length;
            if finite {
                lines.push(format!("terms from {} on vanish", summands.len()));
            }
            let output = json!({
                "direction": if *injective { "injective" } else { "projective" },
                "terms": terms,
                "finite": finite,
            });
            (Outcome::plain(lines.join("\n"), output), "resolve".to_string())
        }

        Verb::Tau { file, m, d, inverse } => {
            arg!("file", json!(file.display().to_string()));
            arg!("M", json!(m));
            arg!("d", json!(d));
            arg!("inverse", json!(inverse));
            let alg = load(file)?;
            let module = expr::eval_module(&alg, m)?;
            let t = if *inverse {
                tau_d_inv(&module, *d)?
            } else {
                tau_d(&module, *d)?
            };
            let name = checkers::describe_module(&t)?;
            let dims: Vec<String> =
                t.dims.iter().map(|x| x.to_string()).collect();
            let text = format!("{name}  dims: ({})", dims.join(","));
            let output =
                json!({"module": name, "dims": t.dims, "zero": t.is_zero()});
            (Outcome::plain(text, output), "tau".to_string())
        }

        Verb::Quotient { file, e, out } => {
            arg!("file", json!(file.display().to_string()));
            arg!("e", json!(e.join(",")));
            let alg = load(file)?;
            let idem = idempotent(&alg, e)?;
            let quo = alg.quotient_by_idempotent_ideal(&idem)?;
            arg!(
                "out",
                out.as_ref()
                    .map(|p| json!(p.display().to_string()))
                    .unwrap_or(Value::Null),
            );
            let outcome = deliver_algebra(&quo.algebra, out)?;
            (outcome, "quotient".to_string())
        }

        Verb::Construct { what } => match what {
            ConstructCmd::Preprojective { rank, field, out } => {
                arg!("rank", json!(rank));
                arg!("field", json!(field));
                arg!(
                    "out",
                    out.as_ref()
                        .map(|p| json!(p.display().to_string()))
                        .unwrap_or(Value::Null),
                );
                let alg = preprojective_algebra_A(*rank, field_arg(field)?)?;
                (
                    deliver_algebra(&alg, out)?,
                    "construct preprojective".to_string(),
                )
            }
            ConstructCmd::Subsets { n, sets, cyclic, field, out } => {
                arg!("n", json!(n));
                arg!("sets", json!(sets.join(",")));
                arg!("cyclic", json!(cyclic));
                arg!("field", json!(field));
                arg!(
                    "out",
                    out.as_ref()
                        .map(|p| json!(p.display().to_string()))
                        .unwrap_or(Value::Null),
                );
                let parsed: Vec<Vec<usize>> = sets
                    .iter()
                    .map(|s| parse_set(s))
                    .collect::<Result<_>>()?;
                let k = parsed
                    .first()
                    .ok_or_else(|| Error::Input("no subsets given".into()))?
                    .len();
                if k == 0 {
                    return Err(Error::Input("empty subset".into()));
                }
                let coll =
                    SubsetCollection::new(*n, k - 1, parsed, *cyclic)?;
                let alg = subset_algebra(&coll, field_arg(field)?)?;
                (deliver_algebra(&alg, out)?, "construct subsets".to_string())
            }
        },

        Verb::Check { what } => run_check(what, &mut inputs)?,

        Verb::ExportDot { file, out } => {
            arg!("file", json!(file.display().to_string()));
            arg!(
                "out",
                out.as_ref()
                    .map(|p| json!(p.display().to_string()))
                    .unwrap_or(Value::Null),
            );
            let alg = load(file)?;
            let name = file
                .file_stem()
                .map(|s| s.to_string_lossy().to_string())
                .unwrap_or_else(|| "algebra".to_string());
            let mut dot = format!("digraph \"{name}\" {{\n  rankdir=LR;\n");
            for v in &alg.quiver.vertices {
                dot.push_str(&format!("  \"{v}\";\n"));
            }
            for a in &alg.quiver.arrows {
                dot.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                    alg.quiver.vertices[a.src],
                    alg.quiver.vertices[a.tgt],
                    a.name
                ));
            }
            for r in &alg.relations {
                let w = &r.terms[0].1;
                dot.push_str(&format!(
                    "  \"{}\" -> \"{}\" [style=dashed, arrowhead=none];\n",
                    alg.quiver.vertices[w.src],
                    alg.quiver.vertices[w.tgt(&alg.quiver)]
                ));
            }
            dot.push_str("}\n");
            let output = json!({
                "nodes": alg.quiver.vertices.len(),
                "solid_edges": alg.quiver.arrows.len(),
                "dashed_edges": alg.relations.len(),
            });
            let outcome = match out {
                Some(path) => {
                    std::fs::write(path, &dot)?;
                    Outcome::plain(
                        format!(
                            "{} nodes, {} solid, {} dashed\nwrote {}",
                            alg.quiver.vertices.len(),
                            alg.quiver.arrows.len(),
                            alg.relations.len(),
                            path.display()
                        ),
                        output,
                    )
                }
                None => Outcome::plain(dot, output),
            };
            (outcome, "export-dot".to_string())
        }
    };

    let (outcome, command) = outcome_command;
    Ok((outcome, command, inputs))
}

fn run_check(
    cmd: &CheckCmd,
    inputs: &mut Inputs,
) -> Result<(Outcome, String)> {
    Ok(match cmd {
        CheckCmd::Precluster { file, d, modules, closure } => {
            put(inputs, "file", json!(file.display().to_string()));
            put(inputs, "d", json!(d));
            put(inputs, "modules", modules.as_ref().map(|m| json!(m)).unwrap_or(Value::Null));
            put(inputs, "closure", json!(closure));
            let alg = load(file)?;
            let coll = collection(&alg, modules, *closure, *d)?;
            let report = checkers::is_precluster_tilting(*d, &coll)?;
            (Outcome::check(report), "check precluster".to_string())
        }
        CheckCmd::Cluster { file, d, modules, closure, bound } => {
            put(inputs, "file", json!(file.display().to_string()));
            put(inputs, "d", json!(d));
            put(inputs, "modules", modules.as_ref().map(|m| json!(m)).unwrap_or(Value::Null));
            put(inputs, "closure", json!(closure));
            put(inputs, "bound", json!(bound));
            let alg = load(file)?;
            let coll = collection(&alg, modules, *closure, *d)?;
            let enumerated = enumerate_indecomposables(&alg, *bound)?;
            let mut report =
                checkers::is_cluster_tilting(*d, &coll, &enumerated.modules)?;
            if enumerated.partial {
                report.push(Condition::skipped(
                    "enumeration",
                    format!(
                        "the indecomposable list may be incomplete at \
                         dimension bound {bound}"
                    ),
                ));
            }
            (Outcome::check(report), "check cluster".to_string())
        }
        CheckCmd::Theorem1 { file, e, d, modules, closure } => {
            put(inputs, "file", json!(file.display().to_string()));
            put(inputs, "e", json!(e.join(",")));
            put(inputs, "d", json!(d));
            put(inputs, "modules", modules.as_ref().map(|m| json!(m)).unwrap_or(Value::Null));
            put(inputs, "closure", json!(closure));
            let alg = load(file)?;
            let idem = idempotent(&alg, e)?;
            let coll = collection(&alg, modules, *closure, *d)?;
            let report = checkers::check_theorem1(&alg, &idem, &coll, *d)?;
            (Outcome::check(report), "check theorem1".to_string())
        }
        CheckCmd::Theorem2 { file, e, d, modules, closure, forall } => {
            put(inputs, "file", json!(file.display().to_string()));
            put(inputs, "e", json!(e.join(",")));
            put(inputs, "d", json!(d));
            put(inputs, "modules", modules.as_ref().map(|m| json!(m)).unwrap_or(Value::Null));
            put(inputs, "closure", json!(closure));
            put(inputs, "quantifier", json!(if *forall { "every" } else { "some" }));
            let alg = load(file)?;
            let idem = idempotent(&alg, e)?;
            let quo = alg.quotient_by_idempotent_ideal(&idem)?;
            let coll = collection(&quo.algebra, modules, *closure, *d)?;
            let report =
                checkers::check_theorem2(&alg, &idem, &coll, *d, !*forall)?;
            (Outcome::check(report), "check theorem2".to_string())
        }
        CheckCmd::Jk { file, e, d, modules, closure, bound } => {
            put(inputs, "file", json!(file.display().to_string()));
            put(inputs, "e", json!(e.join(",")));
            put(inputs, "d", json!(d));
            put(inputs, "modules", modules.as_ref().map(|m| json!(m)).unwrap_or(Value::Null));
            put(inputs, "closure", json!(closure));
            put(inputs, "bound", bound.map(|b| json!(b)).unwrap_or(Value::Null));
            let alg = load(file)?;
            let idem = idempotent(&alg, e)?;
            let coll = collection(&alg, modules, *closure, *d)?;
            let enumerated = match bound {
                None => None,
                Some(b) => {
                    let quo = alg.quotient_by_idempotent_ideal(&idem)?;
                    Some(enumerate_indecomposables(&quo.algebra, *b)?)
                }
            };
            let report = checkers::check_jk_criterion(
                &alg,
                *d,
                &idem,
                &coll,
                enumerated.as_ref().map(|c| c.modules.as_slice()),
            )?;
            (Outcome::check(report), "check jk".to_string())
        }
        CheckCmd::Ideal { file, e, k } => {
            put(inputs, "file", json!(file.display().to_string()));
            put(inputs, "e", json!(e.join(",")));
            put(inputs, "k", json!(k));
            let alg = load(file)?;
            let idem = idempotent(&alg, e)?;
            let report = checkers::is_k_idempotent_ideal(&alg, &idem, *k)?;
            (Outcome::check(report), "check ideal".to_string())
        }
        CheckCmd::Apt { file, e, n, d } => {
            put(inputs, "file", json!(file.display().to_string()));
            put(inputs, "e", json!(e.join(",")));
            put(inputs, "N", json!(n));
            put(inputs, "d", json!(d));
            let alg = load(file)?;
            let idem = idempotent(&alg, e)?;
            let module = expr::eval_module(&alg, n)?;
            let report =
                checkers::check_apt_equivalence(&alg, &idem, &module, *d)?;
            (Outcome::check(report), "check apt".to_string())
        }
        CheckCmd::Coresolution { file, e, n, d } => {
            put(inputs, "file", json!(file.display().to_string()));
            put(inputs, "e", json!(e.join(",")));
            put(inputs, "N", json!(n));
            put(inputs, "d", json!(d));
            let alg = load(file)?;
            let idem = idempotent(&alg, e)?;
            let module = expr::eval_module(&alg, n)?;
            let report =
                checkers::check_f_coresolution(&alg, &idem, &module, *d)?;
            (Outcome::check(report), "check coresolution".to_string())
        }
        CheckCmd::InjectiveClass { file, e, n, d } => {
            put(inputs, "file", json!(file.display().to_string()));
            put(inputs, "e", json!(e.join(",")));
            put(inputs, "N", json!(n));
            put(inputs, "d", json!(d));
            let alg = load(file)?;
            let idem = idempotent(&alg, e)?;
            let module = expr::eval_module(&alg, n)?;
            let report = checkers::in_I_d(&alg, &idem, &module, *d)?;
            (Outcome::check(report), "check injective-class".to_string())
        }
        CheckCmd::BoundaryLemma { file, e, m } => {
            put(inputs, "file", json!(file.display().to_string()));
            put(inputs, "e", json!(e.join(",")));
            put(inputs, "M", json!(m));
            let alg = load(file)?;
            let idem = idempotent(&alg, e)?;
            let module = expr::eval_module(&alg, m)?;
            let report =
                checkers::check_boundary_lemma(&alg, &idem, &module)?;
            (Outcome::check(report), "check boundary-lemma".to_string())
        }
        CheckCmd::Duality { file, d, modules, closure } => {
            put(inputs, "file", json!(file.display().to_string()));
            put(inputs, "d", json!(d));
            put(inputs, "modules", modules.as_ref().map(|m| json!(m)).unwrap_or(Value::Null));
            put(inputs, "closure", json!(closure));
            let alg = load(file)?;
            let coll = collection(&alg, modules, *closure, *d)?;
            let report = checkers::check_iyama_duality(*d, &coll)?;
            (Outcome::check(report), "check duality".to_string())
        }
    })
}
