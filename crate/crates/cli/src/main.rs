//! `wordavoid` command-line front end.
//!
//! Exit codes: 0 success (avoided, divisible, certified, all rows match),
//! 1 negative result (occurrence found, refuted, mismatch), 2 usage or
//! input error, 3 node budget exhausted.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wordavoid::catalog::Catalog;
use wordavoid::morphic::{certify, MorphicWordSpec, Morphism, Verdict, VerifyConfig};
use wordavoid::occurrence::divisibility_witness;
use wordavoid::search::{
    enumerate_avoiders, essential_avoidance_check, AvoidanceTable, ConstraintSet, GrowthRule, SearchConfig,
    SearchStatus, DEFAULT_LIMIT, DEFAULT_NODE_BUDGET, FIGURE_CONVENTION, GROWTH_LIMIT,
};
use wordavoid::{find_occurrence, Alphabet, Error, Formula, Word};

#[derive(Parser)]
#[command(name = "wordavoid", version, about = "Avoidance of binary formulas: search, morphic words, certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for parallel search.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args, Clone)]
struct Constraints {
    /// Formula to avoid (repeatable).
    #[arg(long = "formula")]
    formulas: Vec<String>,
    /// Factor to avoid (repeatable).
    #[arg(long = "forbid")]
    forbid: Vec<String>,
    /// Forbid every square of period at least this value.
    #[arg(long)]
    sq: Option<usize>,
    #[arg(long, default_value_t = 2)]
    alphabet: u8,
}

#[derive(Subcommand)]
enum Command {
    /// Does a word avoid a formula?
    Check {
        #[arg(long)]
        formula: String,
        #[arg(long)]
        word: String,
        /// Alphabet of the word (default: smallest holding its letters, at least 2).
        #[arg(long)]
        alphabet: Option<u8>,
        #[command(flatten)]
        out: Output,
    },
    /// Is BIG divisible by SMALL?
    Divides {
        #[arg(long)]
        big: String,
        #[arg(long)]
        small: String,
        #[command(flatten)]
        out: Output,
    },
    /// Count words satisfying a constraint set, length by length.
    Enumerate {
        #[command(flatten)]
        c: Constraints,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Label the growth of the number of avoiding words.
    Classify {
        #[arg(long)]
        formula: String,
        #[arg(long, default_value_t = 2)]
        alphabet: u8,
        #[arg(long, default_value_t = GROWTH_LIMIT)]
        limit: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Recompute the longest avoiders and counts of the maximally
    /// 2-unavoidable formulas and compare with the built-in values.
    Figure1 {
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Prefix of a morphic word such as `b3` or `g_y(b3)`.
    Morphic {
        #[arg(long)]
        name: String,
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Image of a word under a morphism.
    Image {
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        out: Output,
    },
    /// Certify that a uniform morphism avoids formulas and large squares.
    Verify {
        /// Built-in name or morphism file.
        #[arg(long, required_unless_present = "all")]
        morphism: Option<String>,
        #[arg(long = "formula")]
        formulas: Vec<String>,
        /// Also certify the reverse of each formula.
        #[arg(long)]
        reverse: bool,
        #[arg(long, required_unless_present = "all")]
        sq: Option<usize>,
        /// Largest |X| in the aXbXc reduction for tough formulas.
        #[arg(long, default_value_t = 8)]
        x_bound: usize,
        /// Count a passing reduction check as a full certificate.
        #[arg(long)]
        accept_reduction: bool,
        /// Verify every built-in claim.
        #[arg(long, conflicts_with_all = ["morphism", "formulas", "sq"])]
        all: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Bounded check that morphic words essentially avoid a constraint set.
    Essential {
        /// Morphic word (repeatable), e.g. `g_x(b3)`.
        #[arg(long = "generator", required = true)]
        generators: Vec<String>,
        #[command(flatten)]
        c: Constraints,
        #[arg(long, default_value_t = 20)]
        length: usize,
        #[arg(long, default_value_t = 20)]
        margin: usize,
        /// Use length = margin = 100 (slow).
        #[arg(long)]
        long: bool,
        #[command(flatten)]
        out: Output,
    },
    /// List built-in formulas, morphisms and claims.
    Catalog {
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted(_) => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Payload plus exit code.
struct Outcome {
    results: Value,
    csv: Option<Vec<String>>,
    code: u8,
}

impl Outcome {
    fn ok(results: Value) -> Self {
        Outcome {
            results,
            csv: None,
            code: 0,
        }
    }
}

fn formula(s: &str) -> Result<Formula, Failure> {
    Ok(Formula::parse(s)?)
}

fn constraint_set(c: &Constraints) -> Result<ConstraintSet, Failure> {
    let k = Alphabet::new(c.alphabet)?;
    let mut set = ConstraintSet::default();
    for f in &c.formulas {
        set = set.with_formula(formula(f)?);
    }
    for w in &c.forbid {
        set = set.forbid(Word::parse(w, k)?);
    }
    if let Some(t) = c.sq {
        set = set.squares_from(t);
    }
    if set.is_empty() {
        return Err(Failure::Usage("give at least one of --formula, --forbid, --sq".into()));
    }
    Ok(set)
}

/// `--threads` configures the global pool in `main`.
fn search_config(limit: usize, node_budget: u64) -> SearchConfig {
    SearchConfig {
        limit,
        node_budget,
        ..SearchConfig::default()
    }
}

fn table_code(t: &AvoidanceTable) -> u8 {
    if t.status == SearchStatus::BudgetExhausted {
        3
    } else {
        0
    }
}

fn run(cmd: &Command, cat: &Catalog) -> Result<Outcome, Failure> {
    match cmd {
        Command::Check {
            formula: f,
            word,
            alphabet,
            ..
        } => {
            let f = formula(f)?;
            let w = match alphabet {
                Some(k) => Word::parse(word, Alphabet::new(*k)?)?,
                None => Word::parse_auto(word)?,
            };
            Ok(match find_occurrence(&w, &f) {
                None => Outcome::ok(json!({"avoids": true, "formula": f.to_string(), "word": w.to_string()})),
                Some(o) => Outcome {
                    results: json!({"avoids": false, "formula": f.to_string(), "word": w.to_string(), "witness": o}),
                    csv: None,
                    code: 1,
                },
            })
        }
        Command::Divides { big, small, .. } => {
            let (b, s) = (formula(big)?, formula(small)?);
            let wit = divisibility_witness(&b, &s);
            Ok(Outcome {
                code: if wit.is_some() { 0 } else { 1 },
                results: json!({"big": b.to_string(), "small": s.to_string(), "divisible": wit.is_some(), "witness": wit}),
                csv: None,
            })
        }
        Command::Enumerate {
            c,
            limit,
            node_budget,
            ..
        } => {
            let set = constraint_set(c)?;
            let t = enumerate_avoiders(&set, c.alphabet, &search_config(*limit, *node_budget))?;
            Ok(Outcome {
                code: table_code(&t),
                csv: Some(vec![
                    AvoidanceTable::CSV_HEADER.to_string(),
                    t.to_csv_row(set.to_string().trim_matches(['{', '}']).replace(", ", " ").as_str(), FIGURE_CONVENTION),
                ]),
                results: t.to_json(FIGURE_CONVENTION),
            })
        }
        Command::Classify {
            formula: f,
            alphabet,
            limit,
            node_budget,
            ..
        } => {
            let f = formula(f)?;
            let t = enumerate_avoiders(
                &ConstraintSet::formula(f.clone()),
                *alphabet,
                &search_config(*limit, *node_budget),
            )?;
            match t.status {
                SearchStatus::BudgetExhausted => Err(Failure::Budget(format!("node budget of {node_budget} exhausted"))),
                SearchStatus::Exhausted => Ok(Outcome {
                    results: json!({
                        "formula": f.to_string(),
                        "alphabet": alphabet,
                        "label": "unavoidable",
                        "max_length": t.max_length,
                    }),
                    csv: Some(vec!["formula,label".into(), format!("{f},unavoidable")]),
                    code: 1,
                }),
                SearchStatus::LimitReached => {
                    let v = GrowthRule::default().classify(&t.counts);
                    Ok(Outcome {
                        csv: Some(vec!["formula,label".into(), format!("{f},{}", v.label)]),
                        results: json!({
                            "formula": f.to_string(),
                            "alphabet": alphabet,
                            "limit": limit,
                            "label": v.label,
                            "mean_ratio": v.mean_ratio,
                            "degree": v.degree,
                            "counts": v.counts,
                        }),
                        code: 0,
                    })
                }
            }
        }
        Command::Figure1 { node_budget, .. } => {
            let mut rows = Vec::new();
            let mut csv = vec!["formula,max_length,total,expected_max_length,expected_total,match".to_string()];
            let mut mismatch = false;
            let mut budget = false;
            for e in cat.figure_rows() {
                let f = e.formula()?;
                let t = enumerate_avoiders(&ConstraintSet::formula(f), 2, &search_config(DEFAULT_LIMIT, *node_budget))?;
                budget |= t.status == SearchStatus::BudgetExhausted;
                let total = t.total(FIGURE_CONVENTION);
                let ok = t.max_length == e.max_length && Some(total) == e.count;
                mismatch |= !ok;
                let max = t.max_length.map_or_else(String::new, |m| m.to_string());
                csv.push(format!(
                    "{},{max},{total},{},{},{ok}",
                    e.text,
                    e.max_length.unwrap_or(0),
                    e.count.unwrap_or(0)
                ));
                rows.push(json!({
                    "formula": e.text,
                    "max_length": t.max_length,
                    "total": total,
                    "expected": {"max_length": e.max_length, "total": e.count},
                    "match": ok,
                    "witness_longest": t.witness_longest.to_string(),
                }));
            }
            Ok(Outcome {
                results: json!({"rows": rows, "all_match": !mismatch}),
                csv: Some(csv),
                code: if budget { 3 } else if mismatch { 1 } else { 0 },
            })
        }
        Command::Morphic { name, length, .. } => {
            let spec = MorphicWordSpec::parse(name, cat)?;
            let w = spec.prefix(*length)?;
            Ok(Outcome::ok(json!({"name": spec.to_string(), "length": length, "prefix": w.to_string()})))
        }
        Command::Image { morphism, word, .. } => {
            let g = cat.resolve_morphism(morphism)?;
            let w = Word::parse(word, g.domain())?;
            let img = g.apply(&w)?;
            Ok(Outcome::ok(json!({"morphism": g.name(), "word": w.to_string(), "image": img.to_string()})))
        }
        Command::Verify {
            morphism,
            formulas,
            reverse,
            sq,
            x_bound,
            accept_reduction,
            all,
            ..
        } => {
            let cfg = VerifyConfig {
                x_bound: *x_bound,
                accept_reduction: *accept_reduction,
            };
            let jobs: Vec<(Morphism, Vec<Formula>, usize)> = if *all {
                cat.claims
                    .iter()
                    .map(|c| Ok((cat.morphism(&c.morphism)?, c.formulas()?, c.sq)))
                    .collect::<Result<_, Error>>()?
            } else {
                let g = cat.resolve_morphism(morphism.as_deref().unwrap_or_default())?;
                let mut fs = Vec::new();
                for f in formulas {
                    let f = formula(f)?;
                    fs.push(f.clone());
                    if *reverse {
                        fs.push(f.reversed());
                    }
                }
                vec![(g, fs, sq.unwrap_or(1))]
            };
            let mut certs = Vec::new();
            let mut refuted = false;
            for (g, fs, t) in &jobs {
                let cert = certify(g, fs, *t, &cfg)?;
                refuted |= cert.verdict == Verdict::Refuted;
                certs.push(cert);
            }
            let results = if *all {
                serde_json::to_value(&certs).expect("serializable")
            } else {
                serde_json::to_value(&certs[0]).expect("serializable")
            };
            Ok(Outcome {
                results,
                csv: None,
                code: u8::from(refuted),
            })
        }
        Command::Essential {
            generators,
            c,
            length,
            margin,
            long,
            ..
        } => {
            let (n, m) = if *long { (100, 100) } else { (*length, *margin) };
            let gens = generators
                .iter()
                .map(|g| MorphicWordSpec::parse(g, cat))
                .collect::<Result<Vec<_>, _>>()?;
            let k = gens[0].alphabet()?.size();
            let c = Constraints {
                alphabet: k,
                ..c.clone()
            };
            let set = constraint_set(&c)?;
            let r = essential_avoidance_check(&gens, &set, n, m)?;
            Ok(Outcome {
                code: u8::from(!r.passed),
                results: serde_json::to_value(&r).expect("serializable"),
                csv: None,
            })
        }
        Command::Catalog { .. } => {
            let formulas: Vec<Value> = cat
                .formulas
                .iter()
                .map(|e| {
                    json!({
                        "formula": e.text,
                        "index": e.index,
                        "growth": e.growth,
                        "list": e.list,
                        "max_length": e.max_length,
                        "count": e.count,
                    })
                })
                .collect();
            let morphisms: Vec<Value> = cat
                .morphisms()
                .iter()
                .map(|m| {
                    json!({
                        "name": m.name(),
                        "uniform_width": m.uniform_width(),
                        "images": m.images().iter().map(|i| wordavoid::words::render(i)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut csv = vec!["formula,index,growth,list".to_string()];
            csv.extend(cat.formulas.iter().map(|e| {
                let g = e.growth.map_or("", |g| match g {
                    wordavoid::catalog::Growth::Polynomial => "polynomial",
                    wordavoid::catalog::Growth::Exponential => "exponential",
                });
                format!("{},{},{g},{}", e.text, e.index, e.list)
            }));
            Ok(Outcome {
                results: json!({"formulas": formulas, "morphisms": morphisms, "claims": cat.claims}),
                csv: Some(csv),
                code: 0,
            })
        }
    }
}

fn name_and_output(cmd: &Command) -> (&'static str, &Output) {
    match cmd {
        Command::Check { out, .. } => ("check", out),
        Command::Divides { out, .. } => ("divides", out),
        Command::Enumerate { out, .. } => ("enumerate", out),
        Command::Classify { out, .. } => ("classify", out),
        Command::Figure1 { out, .. } => ("figure1", out),
        Command::Morphic { out, .. } => ("morphic", out),
        Command::Image { out, .. } => ("image", out),
        Command::Verify { out, .. } => ("verify", out),
        Command::Essential { out, .. } => ("essential", out),
        Command::Catalog { out } => ("catalog", out),
    }
}

/// Writes lines to stdout, ignoring a closed pipe.
fn emit(lines: &[String]) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    for l in lines {
        if writeln!(out, "{l}").is_err() {
            return;
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, out) = name_and_output(&cli.command);
    let out = out.clone();
    if let Some(n) = out.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let cat = match Catalog::builtin() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let params: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    match run(&cli.command, &cat) {
        Ok(o) => {
            match out.format {
                Format::Json => {
                    let report = json!({
                        "command": name,
                        "params": params,
                        "results": o.results,
                        "version": env!("CARGO_PKG_VERSION"),
                        "convention": FIGURE_CONVENTION.as_str(),
                        "wall_time_ms": start.elapsed().as_secs_f64() * 1000.0,
                    });
                    emit(&[serde_json::to_string_pretty(&report).expect("serializable")]);
                }
                Format::Csv => match o.csv {
                    Some(lines) => emit(&lines),
                    None => {
                        eprintln!("error: --format csv is not available for `{name}`");
                        return ExitCode::from(2);
                    }
                },
            }
            ExitCode::from(o.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
