//! Command-line surface over `op2-chow`.
//!
//! Every command writes to the supplied streams and returns the process exit
//! code: 0 on success, 1 on failure or bad usage, 2 for an unknown class name,
//! 3 when the two product engines disagree.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use op2_chow::acceptance::{run_all, Context};
use op2_chow::borel::BorelEngine;
use op2_chow::bundles::{chern_normal, chern_projected, degree_y8_from_segre, segre_projected, ChernVector};
use op2_chow::chowring::{ChowClass, ChowRing};
use op2_chow::jordan::self_test_seeded;
use op2_chow::lattice::{build_e6, printed_fundamental_weights, Weight};
use op2_chow::minuscule::{cayley_plane, spinor_variety, ClassNames, WeightDiagram};
use op2_chow::rational::fmt_q;
use op2_chow::Error;

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_UNKNOWN_CLASS: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "op2", version, about = "Exact intersection theory on the Cayley plane")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root and weight data of E6 as JSON.
    Roots,
    /// The Hasse diagram with lengths and degrees.
    Hasse {
        #[arg(long, value_enum, default_value_t = Space::Op2)]
        space: Space,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Text)]
        format: DiagramFormat,
    },
    /// Degrees of all 27 Schubert classes.
    Degrees {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Product of two classes, e.g. `s4p` or `2*s4p + h`.
    Multiply {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Engine::Solver)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The full 27 x 27 multiplication table as JSON.
    Table,
    /// Schubert expansions of the invariant generators.
    Invariants {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Chern classes of the normal bundle, or of its quotient by O(-1) with `--projected`.
    Chern {
        #[arg(long)]
        projected: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Segre classes s0..s15 of the projected normal bundle.
    Segre {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Degree of Y8 with its term-by-term breakdown.
    DegY8 {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Octonion and Jordan-algebra property checks.
    JordanSelftest {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The full acceptance suite.
    Selftest {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Op2,
    S10,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiagramFormat {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Solver,
    Borel,
    Both,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_FAILURE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(Failure::Core(Error::UnknownClass(name))) => {
            let names = diagram(Space::Op2)
                .map(|(d, names)| {
                    (0..=d.max_length())
                        .flat_map(|l| sorted_level(&d, &names, l))
                        .map(|id| names.name(id).to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default();
            let _ = writeln!(err, "unknown class `{name}`; valid names: h {names}");
            EXIT_UNKNOWN_CLASS
        }
        Err(Failure::Disagreement { solver, borel }) => {
            let _ = writeln!(err, "engines disagree\nsolver: {solver}\nborel: {borel}");
            EXIT_DISAGREEMENT
        }
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(std::io::Error),
    Disagreement { solver: String, borel: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn execute(command: &Command, out: &mut dyn Write) -> Outcome {
    match *command {
        Command::Roots => roots(out),
        Command::Hasse { space, format } => hasse(space, format, out),
        Command::Degrees { format } => degrees(format, out),
        Command::Multiply {
            ref a,
            ref b,
            engine,
            format,
        } => multiply(a, b, engine, format, out),
        Command::Table => table(out),
        Command::Invariants { format } => invariants(format, out),
        Command::Chern { projected, format } => chern(projected, format, out),
        Command::Segre { format } => segre(format, out),
        Command::DegY8 { format } => deg_y8(format, out),
        Command::JordanSelftest { seed, samples, format } => jordan_selftest(seed, samples, format, out),
        Command::Selftest { format } => selftest(format, out),
    }
}

/// Pretty JSON with a trailing newline. `serde_json::Map` keeps keys sorted.
fn emit_json(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(v).expect("values built here always serialise");
    writeln!(out, "{text}")
}

/// `{name: "coefficient"}` with exact rational strings.
pub fn class_json(c: &ChowClass, names: &ClassNames) -> Value {
    let m: Map<String, Value> = c
        .support()
        .map(|(id, x)| (names.name(id).to_string(), Value::String(fmt_q(x))))
        .collect();
    Value::Object(m)
}

fn weight_json(w: &Weight) -> Value {
    serde_json::to_value(w).expect("weights serialise")
}

fn roots(out: &mut dyn Write) -> Outcome {
    let rs = build_e6();
    let positive: Vec<Value> = rs
        .roots()
        .iter()
        .filter(|r| rs.height(r) > op2_chow::rational::zero())
        .map(weight_json)
        .collect();
    let v = json!({
        "name": rs.name,
        "coordinates": "(c1..c5, u) with the e6 coefficient equal to u*sqrt(3)",
        "gram": [1, 1, 1, 1, 1, 3],
        "cartan": rs.cartan,
        "simple_roots": rs.simple_roots.iter().map(weight_json).collect::<Vec<_>>(),
        "fundamental_weights": rs.fundamental_weights.iter().map(weight_json).collect::<Vec<_>>(),
        "printed_fundamental_weights": printed_fundamental_weights().iter().map(weight_json).collect::<Vec<_>>(),
        "rho": weight_json(&rs.rho()),
        "positive_roots": positive,
    });
    emit_json(out, &v)?;
    Ok(0)
}

fn diagram(space: Space) -> Result<(WeightDiagram, ClassNames), Error> {
    match space {
        Space::Op2 => {
            let d = cayley_plane();
            let names = ClassNames::cayley(&d)?;
            Ok((d, names))
        }
        Space::S10 => {
            let d = spinor_variety();
            let names = ClassNames::generic(&d);
            Ok((d, names))
        }
    }
}

fn hasse(space: Space, format: DiagramFormat, out: &mut dyn Write) -> Outcome {
    let (d, names) = diagram(space)?;
    match format {
        DiagramFormat::Dot => write!(out, "{}", d.to_dot(Some(&names)))?,
        DiagramFormat::Json => emit_json(out, &serde_json::to_value(d.export(Some(&names))).expect("export"))?,
        DiagramFormat::Text => {
            writeln!(out, "# {} nodes, levels {:?}", d.len(), d.level_sizes())?;
            for len in 0..=d.max_length() {
                for &id in d.level(len) {
                    let down: Vec<String> = d
                        .node(id)
                        .down
                        .iter()
                        .map(|e| format!("{}({})", names.name(e.target), e.label))
                        .collect();
                    writeln!(
                        out,
                        "{} length={} dimension={} degree={} down=[{}]",
                        names.name(id),
                        d.length(id),
                        d.dimension(id),
                        d.degree(id),
                        down.join(" ")
                    )?;
                }
            }
        }
    }
    Ok(0)
}

fn degrees(format: Format, out: &mut dyn Write) -> Outcome {
    let (d, names) = diagram(Space::Op2)?;
    let order: Vec<usize> = (0..=d.max_length()).flat_map(|l| sorted_level(&d, &names, l)).collect();
    match format {
        Format::Text => {
            for id in order {
                writeln!(out, "{}: {}", names.name(id), d.degree(id))?;
            }
        }
        Format::Json => {
            let m: Map<String, Value> = order.iter().map(|&id| (names.name(id).to_string(), json!(d.degree(id)))).collect();
            emit_json(out, &Value::Object(m))?;
        }
    }
    Ok(0)
}

/// Nodes of one level with unprimed names before primed ones.
fn sorted_level(d: &WeightDiagram, names: &ClassNames, len: usize) -> Vec<usize> {
    let mut ids = d.level(len).to_vec();
    ids.sort_by_key(|&id| names.name(id).len());
    ids
}

fn borel_product(engine: &BorelEngine, a: &ChowClass, b: &ChowClass) -> Result<ChowClass, Error> {
    let mut acc = ChowClass::zero(a.len());
    for (u, x) in a.support() {
        for (v, y) in b.support() {
            acc = &acc + &engine.multiply_borel(u, v)?.scale(&(x * y));
        }
    }
    Ok(acc)
}

fn multiply(a: &str, b: &str, engine: Engine, format: Format, out: &mut dyn Write) -> Outcome {
    let ring = ChowRing::cayley()?;
    let (x, y) = (ring.parse_class(a)?, ring.parse_class(b)?);
    let solver = (engine != Engine::Borel).then(|| ring.multiply(&x, &y).class);
    let borel = match engine {
        Engine::Solver => None,
        _ => Some(borel_product(&BorelEngine::cayley()?, &x, &y)?),
    };
    if let (Some(s), Some(b)) = (&solver, &borel) {
        if s != b {
            return Err(Failure::Disagreement {
                solver: s.format(&ring.names),
                borel: b.format(&ring.names),
            });
        }
    }
    let product = solver.as_ref().or(borel.as_ref()).expect("at least one engine ran");
    match format {
        Format::Text => writeln!(out, "{}", product.format(&ring.names))?,
        Format::Json => {
            let mut m = Map::new();
            m.insert("a".into(), class_json(&x, &ring.names));
            m.insert("b".into(), class_json(&y, &ring.names));
            if let Some(s) = &solver {
                m.insert("solver".into(), class_json(s, &ring.names));
            }
            if let Some(b) = &borel {
                m.insert("borel".into(), class_json(b, &ring.names));
            }
            emit_json(out, &Value::Object(m))?;
        }
    }
    Ok(0)
}

fn table(out: &mut dyn Write) -> Outcome {
    let ring = ChowRing::cayley()?;
    let n = ring.len();
    let mut rows = Map::new();
    for u in 0..n {
        let row: Map<String, Value> = (0..n)
            .map(|v| (ring.names.name(v).to_string(), class_json(ring.multiply_schubert(u, v), &ring.names)))
            .collect();
        rows.insert(ring.names.name(u).to_string(), Value::Object(row));
    }
    emit_json(out, &Value::Object(rows))?;
    Ok(0)
}

fn invariants(format: Format, out: &mut dyn Write) -> Outcome {
    let engine = BorelEngine::cayley()?;
    let list = engine.invariant_expansions()?;
    match format {
        Format::Text => {
            for (g, c) in &list {
                writeln!(out, "{} = {}", g.name(), c.format(&engine.names))?;
            }
        }
        Format::Json => {
            let m: Map<String, Value> = list
                .iter()
                .map(|(g, c)| (g.name().to_string(), class_json(c, &engine.names)))
                .collect();
            emit_json(out, &Value::Object(m))?;
        }
    }
    Ok(0)
}

fn class_list(prefix: &str, classes: &[ChowClass], names: &ClassNames, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Text => {
            for (k, c) in classes.iter().enumerate() {
                writeln!(out, "{prefix}{k} = {}", c.format(names))?;
            }
            Ok(())
        }
        Format::Json => {
            let list: Vec<Value> = classes.iter().map(|c| class_json(c, names)).collect();
            emit_json(out, &json!({ "prefix": prefix, "classes": list }))
        }
    }
}

fn chern(projected: bool, format: Format, out: &mut dyn Write) -> Outcome {
    let engine = BorelEngine::cayley()?;
    let normal = chern_normal(&engine)?;
    let c: ChernVector = if projected {
        chern_projected(&engine, &normal)?
    } else {
        normal
    };
    match format {
        Format::Text => {
            writeln!(out, "# rank {}", c.rank)?;
            class_list("c", &c.classes, &engine.names, format, out)?;
        }
        Format::Json => {
            let list: Vec<Value> = c.classes.iter().map(|x| class_json(x, &engine.names)).collect();
            emit_json(out, &json!({ "rank": c.rank, "classes": list }))?;
        }
    }
    Ok(0)
}

fn segre(format: Format, out: &mut dyn Write) -> Outcome {
    let engine = BorelEngine::cayley()?;
    let s = segre_projected(&engine)?;
    class_list("s", &s, &engine.names, format, out)?;
    Ok(0)
}

fn deg_y8(format: Format, out: &mut dyn Write) -> Outcome {
    let engine = BorelEngine::cayley()?;
    let d = degree_y8_from_segre(&engine, &segre_projected(&engine)?)?;
    match format {
        Format::Text => writeln!(out, "{}", d.total)?,
        Format::Json => {
            let terms: Vec<Value> = d
                .terms
                .iter()
                .map(|t| {
                    json!({
                        "k": t.k,
                        "intersection": t.intersection.to_string(),
                        "contribution": t.contribution.to_string(),
                    })
                })
                .collect();
            emit_json(
                out,
                &json!({ "leading": d.leading.to_string(), "terms": terms, "total": d.total.to_string() }),
            )?;
        }
    }
    Ok(0)
}

fn jordan_selftest(seed: u64, samples: usize, format: Format, out: &mut dyn Write) -> Outcome {
    let t = self_test_seeded(seed, samples);
    match format {
        Format::Text => {
            writeln!(out, "seed {seed}, {} samples", t.samples)?;
            writeln!(out, "composition failures: {}", t.composition_failures)?;
            writeln!(out, "cell failures: {:?}", t.cell_failures)?;
            writeln!(out, "infinity failures: {}", t.infinity_failures)?;
            writeln!(
                out,
                "infinity conditions read in plain order, failures (diagnostic): {}",
                t.infinity_plain_order_failures
            )?;
            writeln!(out, "multiplication image failures: {}", t.mult_image_failures)?;
            writeln!(out, "nu2 failures: {}", t.nu2_failures)?;
            writeln!(out, "{}", if t.passed() { "PASS" } else { "FAIL" })?;
        }
        Format::Json => {
            let mut v = serde_json::to_value(&t).expect("self-test report");
            v["seed"] = json!(seed);
            v["passed"] = json!(t.passed());
            emit_json(out, &v)?;
        }
    }
    Ok(if t.passed() { 0 } else { EXIT_FAILURE })
}

fn selftest(format: Format, out: &mut dyn Write) -> Outcome {
    let ctx = Context::new()?;
    let results = run_all(&ctx);
    match format {
        Format::Text => {
            for r in &results {
                writeln!(out, "{}", r.line())?;
            }
        }
        Format::Json => emit_json(out, &serde_json::to_value(&results).expect("results"))?,
    }
    Ok(if results.iter().all(|r| r.passed) { 0 } else { EXIT_FAILURE })
}
