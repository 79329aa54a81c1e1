use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use ordered_hopf::complexes::{
    order_decomposability_witness, DecompositionFailure, DecompositionPart,
};
use ordered_hopf::ground::{descent_composition, naturalize, naturalize_shuffled};
use ordered_hopf::hopf::{
    gp_antipode_formula, ogp_antipode_formula, ogp_antipode_formula_unchecked, takeuchi_antipode,
    LStarMonoid,
};
use ordered_hopf::json::{
    self as doc, OrderedComplexDoc, PolytopeDoc, PreposetDoc, ScropeDoc, TermDoc,
};
use ordered_hopf::scrope::gamma_complex;
use ordered_hopf::verify::{run_suite, SuiteOptions, SuiteReport, DEFAULT_SEED, SUITES};
use ordered_hopf::{Error, FormalSum, GpMonoid, GroundSet, OgpElement, OgpMonoid};

/// Exact antipodes of ordered generalized permutahedra and related tools.
#[derive(Parser, Debug)]
#[command(name = "ordhopf", version)]
struct Cli {
    /// Input document (defaults to stdin).
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Largest ground set for enumerations (default 7; 5 for verify).
    #[arg(long, global = true)]
    max_n: Option<usize>,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Takeuchi,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Antipode of a basis element of L*, GP or OGP.
    Antipode {
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Run the cancellation-free formula even when dim p < n - 1.
        #[arg(long)]
        allow_low_dim: bool,
    },
    /// Descent composition of w relative to u.
    Descent,
    /// Naturalization of a preposet with respect to an order.
    Naturalize,
    /// The complex Γ(Q, w, u) with its audit data.
    Gamma,
    /// Reduced Euler characteristic of a scrope complex.
    ScropeEuler,
    /// Order-decomposability of an ordered complex.
    Decompose,
    /// Run verification suites (all of them when none is named).
    Verify {
        suites: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
        /// Generators of the hopf-class closure audit.
        #[arg(long, default_value = "matroids")]
        generators: String,
    },
}

enum Failure {
    Input(String),
    Cap(String),
    Dimension(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EnumerationTooLarge { .. } => Failure::Cap(e.to_string()),
            Error::DimensionHypothesis { .. } => Failure::Dimension(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("pool is configured once");
    }
    if cli.max_n == Some(0) {
        eprintln!("error: --max-n must be at least 1");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Dimension(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(4)
        }
    }
}

fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Verify {
            suites,
            max_k,
            generators,
        } => verify(cli, suites, *max_k, generators),
        Command::Antipode {
            method,
            allow_low_dim,
        } => antipode(cli, &read_input(cli)?, *method, *allow_low_dim),
        Command::Descent => descent(cli, &read_input(cli)?),
        Command::Naturalize => naturalize_cmd(cli, &read_input(cli)?),
        Command::Gamma => gamma(cli, &read_input(cli)?),
        Command::ScropeEuler => scrope_euler(cli, &read_input(cli)?),
        Command::Decompose => decompose(cli, &read_input(cli)?),
    }
}

fn read_input(cli: &Cli) -> CliResult<Value> {
    let text = match &cli.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(e.to_string()))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("invalid JSON: {e}")))
}

fn field<D: for<'de> Deserialize<'de>>(v: &Value, name: &str) -> CliResult<D> {
    let x = v
        .get(name)
        .ok_or_else(|| Failure::Input(format!("missing field {name:?}")))?;
    doc::from_value(x).map_err(|e| Failure::Input(format!("field {name:?}: {e}")))
}

fn check_cap(cli: &Cli, g: &GroundSet) -> CliResult<usize> {
    let cap = cli.max_n.unwrap_or(ordered_hopf::gp::DEFAULT_FACE_CAP);
    if g.len() > cap {
        return Err(Error::EnumerationTooLarge { n: g.len(), cap }.into());
    }
    Ok(cap)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn render_sum(cli: &Cli, g: &GroundSet, terms: &[TermDoc]) -> String {
    match cli.format {
        Format::Latex => doc::render_latex(g, terms),
        _ => doc::render_text(g, terms),
    }
}

fn antipode(
    cli: &Cli,
    input: &Value,
    method: Option<Method>,
    allow_low_dim: bool,
) -> CliResult<String> {
    let monoid: String = field(input, "monoid")?;
    let method = match method {
        Some(m) => m,
        None => match input.get("method").and_then(Value::as_str) {
            None | Some("formula") => Method::Formula,
            Some("takeuchi") => Method::Takeuchi,
            Some("both") => Method::Both,
            Some(other) => return Err(Failure::Input(format!("unknown method {other:?}"))),
        },
    };

    let (g, formula, oracle): (GroundSet, Option<Vec<TermDoc>>, Option<Vec<TermDoc>>) =
        match monoid.as_str() {
            "lstar" => {
                let word: Vec<String> = field(input, "order")?;
                let g = doc::ground_of_word(&word)?;
                let cap = check_cap(cli, &g)?;
                let w = doc::parse_order(&g, &word)?;
                let sign = if w.len() % 2 == 0 { 1 } else { -1 };
                let f = wants_formula(method).then(|| FormalSum::term(w.reversed(), sign));
                let o = wants_oracle(method)
                    .then(|| takeuchi_antipode(&LStarMonoid, &w, cap))
                    .transpose()?;
                (
                    g.clone(),
                    f.map(|s| doc::emit_lstar_sum(&g, &s)),
                    o.map(|s| doc::emit_lstar_sum(&g, &s)),
                )
            }
            "gp" => {
                let pdoc: PolytopeDoc = field(input, "polytope")?;
                let g = doc::polytope_ground(&pdoc)?;
                let cap = check_cap(cli, &g)?;
                let p = doc::parse_polytope(&g, &pdoc)?;
                let f = wants_formula(method)
                    .then(|| gp_antipode_formula(&p, cap))
                    .transpose()?;
                let o = wants_oracle(method)
                    .then(|| takeuchi_antipode(&GpMonoid::new(), &p, cap))
                    .transpose()?;
                (
                    g,
                    f.map(|s| doc::emit_gp_sum(&s)),
                    o.map(|s| doc::emit_gp_sum(&s)),
                )
            }
            "ogp" => {
                let pdoc: PolytopeDoc = field(input, "polytope")?;
                let g = doc::polytope_ground(&pdoc)?;
                let cap = check_cap(cli, &g)?;
                let p = doc::parse_polytope(&g, &pdoc)?;
                let word: Vec<String> = field(input, "order")?;
                let w = doc::parse_order(&g, &word)?;
                let x = OgpElement::new(w.clone(), p.clone())?;
                let f = if wants_formula(method) {
                    let e = if allow_low_dim {
                        ogp_antipode_formula_unchecked(&w, &p, cap)?
                    } else {
                        ogp_antipode_formula(&w, &p, cap)?
                    };
                    Some(doc::emit_ogp_sum(&g, &e.sum))
                } else {
                    None
                };
                let o = wants_oracle(method)
                    .then(|| takeuchi_antipode(&OgpMonoid::new(), &x, cap))
                    .transpose()?;
                (g.clone(), f, o.map(|s| doc::emit_ogp_sum(&g, &s)))
            }
            other => {
                return Err(Failure::Input(format!(
                    "unknown monoid {other:?}; expected lstar, gp or ogp"
                )))
            }
        };

    let method_name = match method {
        Method::Formula => "formula",
        Method::Takeuchi => "takeuchi",
        Method::Both => "both",
    };
    let sum = formula
        .clone()
        .or_else(|| oracle.clone())
        .expect("one method ran");
    let comparison = match (&formula, &oracle) {
        (Some(f), Some(o)) => Some(diff_terms(f, o)),
        _ => None,
    };
    if cli.format == Format::Json {
        let mut out = json!({
            "monoid": monoid,
            "method": method_name,
            "ground": doc::emit_ground(&g),
            "sum": sum,
        });
        if let Some(d) = &comparison {
            out["agree"] = json!(d.is_empty());
            out["diff"] = doc::to_value(d);
        }
        return Ok(pretty(&out));
    }
    let mut out = render_sum(cli, &g, &sum);
    if let Some(d) = &comparison {
        out.push_str(&format!("agree: {}\n", d.is_empty()));
        if !d.is_empty() {
            out.push_str("formula - takeuchi:\n");
            out.push_str(&render_sum(cli, &g, d));
        }
    }
    Ok(out)
}

fn wants_formula(m: Method) -> bool {
    m != Method::Takeuchi
}

fn wants_oracle(m: Method) -> bool {
    m != Method::Formula
}

/// `formula − oracle` on the serialized terms (keys compare structurally).
fn diff_terms(formula: &[TermDoc], oracle: &[TermDoc]) -> Vec<TermDoc> {
    let key = |t: &TermDoc| {
        serde_json::to_string(&TermDoc {
            coeff: 0,
            ..t.clone()
        })
        .expect("terms serialize")
    };
    let mut acc: std::collections::BTreeMap<String, TermDoc> = std::collections::BTreeMap::new();
    for (terms, sign) in [(formula, 1), (oracle, -1)] {
        for t in terms {
            acc.entry(key(t))
                .or_insert_with(|| TermDoc {
                    coeff: 0,
                    ..t.clone()
                })
                .coeff += sign * t.coeff;
        }
    }
    acc.into_values().filter(|t| t.coeff != 0).collect()
}

fn descent(cli: &Cli, input: &Value) -> CliResult<String> {
    let w_word: Vec<String> = field(input, "w")?;
    let u_word: Vec<String> = field(input, "u")?;
    let g = doc::ground_of_word(&w_word)?;
    let w = doc::parse_order(&g, &w_word)?;
    let u = doc::parse_order(&g, &u_word)?;
    let d = descent_composition(&w, &u)?;
    Ok(match cli.format {
        Format::Json => pretty(&json!({ "composition": doc::emit_composition(&g, &d) })),
        _ => format!("{}\n", g.fmt_composition(&d)),
    })
}

fn fmt_preposet_text(g: &GroundSet, q: &PreposetDoc) -> String {
    let compact = g.labels().iter().all(|l| l.chars().count() == 1);
    let sep = if compact { "" } else { "," };
    let blocks: Vec<String> = q.blocks.iter().map(|b| b.join(sep)).collect();
    let mut out = format!("{}\n", blocks.join("|"));
    for [x, y] in &q.relations {
        out.push_str(&format!("{} ≺ {}\n", blocks[*x], blocks[*y]));
    }
    out
}

fn naturalize_cmd(cli: &Cli, input: &Value) -> CliResult<String> {
    let word: Vec<String> = field(input, "order")?;
    let qdoc: PreposetDoc = field(input, "preposet")?;
    let g = doc::ground_of_word(&word)?;
    let w = doc::parse_order(&g, &word)?;
    let q = doc::parse_preposet(&g, &qdoc)?;
    if q.ground() != w.ground() {
        return Err(Error::GroundMismatch.into());
    }
    let nat = naturalize(&q, &w)?;
    debug_assert_eq!(naturalize_shuffled(&q, &w, cli.seed)?, nat);
    let out = doc::emit_preposet(&g, &nat, Some(&w));
    Ok(match cli.format {
        Format::Json => pretty(&json!({ "preposet": out })),
        _ => fmt_preposet_text(&g, &out),
    })
}

fn gamma(cli: &Cli, input: &Value) -> CliResult<String> {
    let w_word: Vec<String> = field(input, "w")?;
    let u_word: Vec<String> = field(input, "u")?;
    let qdoc: PreposetDoc = field(input, "preposet")?;
    let g = doc::ground_of_word(&w_word)?;
    let w = doc::parse_order(&g, &w_word)?;
    let u = doc::parse_order(&g, &u_word)?;
    let q = doc::parse_preposet(&g, &qdoc)?;
    let gamma = gamma_complex(&q, &w, &u)?;
    let d = doc::emit_gamma(&g, &gamma, &w);
    if cli.format == Format::Json {
        return Ok(pretty(&doc::to_value(&d)));
    }
    let comp = |s| g.fmt_composition(s);
    let mut out = format!(
        "N = {}\nD = {}\n",
        comp(&gamma.blocks),
        comp(&gamma.descent)
    );
    let pairs: Vec<String> = d.pairs.iter().map(|[a, b]| format!("{a}≺{b}")).collect();
    out.push_str(&format!("pairs: {}\n", pairs.join(", ")));
    out.push_str(&format!("intervals: {:?}\n", gamma.complex.intervals()));
    for (i, s) in gamma.merged.iter().enumerate() {
        out.push_str(&format!("S{} = {}\n", i + 1, comp(s)));
    }
    let faces: Vec<String> = gamma.face_compositions().iter().map(comp).collect();
    out.push_str(&format!("faces ({}): {}\n", faces.len(), faces.join(", ")));
    out.push_str(&format!(
        "reduced euler: {}\ncoefficient: {}\n",
        d.reduced_euler, d.coefficient
    ));
    Ok(out)
}

fn scrope_euler(cli: &Cli, input: &Value) -> CliResult<String> {
    let sdoc: ScropeDoc = doc::from_value(input)?;
    let s = doc::parse_scrope(&sdoc)?;
    let chi = s.reduced_euler();
    Ok(match cli.format {
        Format::Json => {
            let mut v = doc::to_value(&doc::emit_scrope(&s));
            v["facets"] = json!(s.facets());
            v["reduced_euler"] = json!(chi);
            pretty(&v)
        }
        _ => {
            let facets: Vec<String> = s
                .facets()
                .iter()
                .map(|f| f.iter().map(|x| x.to_string()).collect::<String>())
                .collect();
            format!("facets: ⟨{}⟩\nreduced euler: {chi}\n", facets.join(","))
        }
    })
}

fn decompose(cli: &Cli, input: &Value) -> CliResult<String> {
    let cdoc: OrderedComplexDoc = doc::from_value(input)?;
    let (g, c) = doc::parse_ordered_complex(&cdoc)?;
    check_cap(cli, &g)?;
    let witness = order_decomposability_witness(&c)?;
    let Some(w) = witness else {
        return Ok(match cli.format {
            Format::Json => pretty(&json!({ "decomposable": true })),
            _ => "order-decomposable\n".into(),
        });
    };
    let path: Vec<Value> = w
        .path
        .iter()
        .map(|(s, part)| {
            let part = match part {
                DecompositionPart::Restriction => "restriction",
                DecompositionPart::Contraction => "contraction",
            };
            json!({ "prefix": doc::emit_order(&g, &c.order.restrict(*s)), "part": part })
        })
        .collect();
    let failure = match w.failure {
        DecompositionFailure::Void => "void",
        DecompositionFailure::Impure => "impure",
    };
    let inner = doc::emit_ordered_complex(&g, &w.complex);
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "decomposable": false,
            "witness": { "path": path, "complex": inner, "failure": failure },
        })),
        _ => {
            let steps: Vec<String> = path
                .iter()
                .map(|p| format!("{} of {}", p["part"].as_str().unwrap(), p["prefix"]))
                .collect();
            let facets: Vec<String> = inner.facets.iter().map(|f| f.concat()).collect();
            format!(
                "not order-decomposable: {} gives ⟨{}⟩, which is {failure}\n",
                steps.join(" then "),
                facets.join(",")
            )
        }
    })
}

fn verify(cli: &Cli, suites: &[String], max_k: usize, generators: &str) -> CliResult<String> {
    if generators != "matroids" {
        return Err(Failure::Input(format!(
            "unsupported generators {generators:?}; only \"matroids\" is available"
        )));
    }
    let names: Vec<String> = if suites.is_empty() || suites.iter().any(|s| s == "all") {
        SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        suites.to_vec()
    };
    let opts = SuiteOptions {
        max_n: cli.max_n.unwrap_or(5),
        max_k,
        seed: cli.seed,
    };
    let reports: Vec<SuiteReport> = names
        .iter()
        .map(|n| run_suite(n, &opts))
        .collect::<Result<_, _>>()?;
    let passed = reports.iter().all(SuiteReport::passed);
    let out = match cli.format {
        Format::Json => pretty(&Value::Array(
            reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite,
                        "passed": r.passed(),
                        "checks": r.checks,
                        "failures": r.failures,
                        "notes": r.notes,
                    })
                })
                .collect(),
        )),
        _ => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&format!("{r}\n"));
                for n in &r.notes {
                    s.push_str(&format!("  {n}\n"));
                }
                for f in r.failures.iter().take(20) {
                    s.push_str(&format!("  failure: {f}\n"));
                }
            }
            s
        }
    };
    if passed {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verification)
    }
}
