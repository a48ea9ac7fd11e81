use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use semilab::algebra::{
    canonical_form, congruences, green_data, parse_sgp, to_sgp, CanonicalMode, FiniteSemigroup, Relation,
    DEFAULT_CONGRUENCE_BOUND,
};
use semilab::classes::classify_with;
use semilab::eqsys::{
    bindings_to_fixed, catalog, catalog_entry, parse, satisfies, satisfies_with, EquationSystem, CATALOG,
};
use semilab::freeprod::{canonical_check, extract_epsilon_c, parse_script, search_scripts, ScriptBudget};
use semilab::smallsemi::{enumerate_semigroups, save_corpus, verify_battery, CorpusSource};
use semilab::wordeq::{holds_in_all_semigroups, HarnessBudget};

/// Finite semigroups and quantified equation systems.
#[derive(Parser)]
#[command(name = "semilab", version)]
struct Cli {
    /// Worker threads for enumerate and verify.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SystemArg {
    /// Equation system file.
    eqs: Option<PathBuf>,
    /// Catalog id instead of a file.
    #[arg(long)]
    id: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Class membership and Green's relations of a semigroup.
    Classify { sgp: PathBuf },
    /// Decide whether a semigroup satisfies a system.
    Check {
        sgp: PathBuf,
        #[command(flatten)]
        system: SystemArg,
        /// Include the replayed assignment.
        #[arg(long)]
        trace: bool,
    },
    /// Enumerate all semigroups of one order into a corpus directory.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "iso")]
        mode: CanonicalMode,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a verification battery over the corpus.
    Verify {
        #[arg(long)]
        battery: String,
        #[arg(long)]
        max_order: usize,
        /// Corpus directory; enumerated and saved there when missing.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Does a system hold in every semigroup?
    Allsgp {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long, default_value_t = HarnessBudget::default().max_len)]
        max_len: usize,
        #[arg(long, default_value_t = HarnessBudget::default().extra_letters)]
        extra_letters: usize,
        #[arg(long, default_value_t = HarnessBudget::default().max_order)]
        max_order: usize,
        #[arg(long, default_value_t = HarnessBudget::default().len_cap)]
        len_cap: usize,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Canonical check of a witness script and the extracted run system.
    Epsc {
        sgp: PathBuf,
        #[command(flatten)]
        system: SystemArg,
        /// Witness script (.ws).
        #[arg(long, conflicts_with = "search")]
        script: Option<PathBuf>,
        /// Search for scripts instead of reading one.
        #[arg(long)]
        search: bool,
        /// Segment and letter budget per variable for --search.
        #[arg(long, default_value_t = 2)]
        budget: usize,
        /// With --search, collect the extracted systems of every passing script.
        #[arg(long)]
        all: bool,
    },
    /// Every congruence and its quotient.
    Quotients { sgp: PathBuf },
    /// The built-in named systems.
    Catalog {
        #[arg(long, conflicts_with = "id")]
        list: bool,
        #[arg(long)]
        id: Option<String>,
    },
}

#[derive(Serialize)]
struct Report {
    command: String,
    inputs: Value,
    result: Value,
    elapsed_ms: u128,
}

/// A finished command: its payload and whether it found a violation.
struct Outcome {
    inputs: Value,
    result: Value,
    violation: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(err) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    }
    let name = command_name(&cli.command);
    let start = Instant::now();
    match run(cli.command) {
        Ok(outcome) => {
            let report = Report {
                command: name.to_owned(),
                inputs: outcome.inputs,
                result: outcome.result,
                elapsed_ms: start.elapsed().as_millis(),
            };
            let text = serde_json::to_string_pretty(&report).expect("reports serialise");
            // a closed pipe downstream is not our failure
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(u8::from(outcome.violation))
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Check { .. } => "check",
        Command::Enumerate { .. } => "enumerate",
        Command::Verify { .. } => "verify",
        Command::Allsgp { .. } => "allsgp",
        Command::Epsc { .. } => "epsc",
        Command::Quotients { .. } => "quotients",
        Command::Catalog { .. } => "catalog",
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_sgp(path: &Path) -> Result<FiniteSemigroup> {
    parse_sgp(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_system(arg: &SystemArg) -> Result<(EquationSystem, Value)> {
    match (&arg.eqs, &arg.id) {
        (Some(path), None) => {
            let e = parse(&read(path)?).with_context(|| format!("{}", path.display()))?;
            Ok((e, json!({ "eqs": path.display().to_string() })))
        }
        (None, Some(id)) => Ok((catalog(id)?, json!({ "id": id }))),
        (Some(_), Some(_)) => bail!("give either an .eqs file or --id, not both"),
        (None, None) => bail!("an .eqs file or --id is required"),
    }
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Some(a), Value::Object(b)) = (a.as_object_mut(), b) {
        a.extend(b);
    }
    a
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payloads serialise")
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Classify { sgp } => {
            let s = load_sgp(&sgp)?;
            let green = green_data(&s);
            let report = classify_with(&s, &green);
            let violations = report.entailment_violations();
            let invariants = green.check_invariants().map_err(|v| format!("{v:?}")).err();
            let classes = |rel| green.classes(rel);
            let result = json!({
                "order": s.order(),
                "name": s.name(),
                "classes": to_value(&report),
                "green": {
                    "R": classes(Relation::R),
                    "L": classes(Relation::L),
                    "H": classes(Relation::H),
                    "D": classes(Relation::D),
                    "J": classes(Relation::J),
                    "invariant_violation": invariants,
                },
                "entailment_violations": violations,
            });
            let violation = !violations.is_empty() || invariants.is_some();
            Ok(Outcome { inputs: json!({ "sgp": sgp.display().to_string() }), result, violation })
        }
        Command::Check { sgp, system, trace } => {
            let s = load_sgp(&sgp)?;
            let (e, sys_inputs) = load_system(&system)?;
            let v = satisfies(&s, &e);
            let mut result = json!({
                "system": e.to_string(),
                "satisfied": v.satisfied,
                "counterexample": v.counterexample,
                "witness": v.witness,
                "nodes": v.stats.nodes,
            });
            if trace {
                let pinned = v.counterexample.as_ref().or(v.witness.as_ref());
                let replay = pinned.map(|b| {
                    let fixed = bindings_to_fixed(&e, b).expect("bindings name system symbols");
                    satisfies_with(&s, &e, &fixed).satisfied
                });
                result["trace"] = json!({ "pinned": pinned, "replayed_satisfied": replay });
            }
            let inputs = merge(json!({ "sgp": sgp.display().to_string(), "trace": trace }), sys_inputs);
            Ok(Outcome { inputs, result, violation: false })
        }
        Command::Enumerate { order, mode, out } => {
            let corpus = enumerate_semigroups(order, mode)?;
            save_corpus(&corpus, &out)?;
            let inputs = json!({ "order": order, "mode": mode, "out": out.display().to_string() });
            Ok(Outcome { inputs, result: to_value(&corpus.summary()), violation: false })
        }
        Command::Verify { battery, max_order, corpus } => {
            let source = corpus.as_ref().map_or_else(CorpusSource::in_memory, CorpusSource::on_disk);
            let report = verify_battery(&battery, max_order, &source)?;
            let inputs = json!({
                "battery": battery,
                "max_order": max_order,
                "corpus": corpus.map(|c| c.display().to_string()),
            });
            let violation = !report.mismatches.is_empty();
            Ok(Outcome { inputs, result: to_value(&report), violation })
        }
        Command::Allsgp { system, max_len, extra_letters, max_order, len_cap, corpus } => {
            let (e, sys_inputs) = load_system(&system)?;
            let budget = HarnessBudget { max_len, extra_letters, max_order, len_cap };
            let source = corpus.as_ref().map_or_else(CorpusSource::in_memory, CorpusSource::on_disk);
            let verdict = holds_in_all_semigroups(&e, budget, &source)?;
            let inputs = merge(to_value(&budget), sys_inputs);
            Ok(Outcome { inputs, result: json!({ "system": e.to_string(), "verdict": verdict }), violation: false })
        }
        Command::Epsc { sgp, system, script, search, budget, all } => {
            let s = load_sgp(&sgp)?;
            let (e, sys_inputs) = load_system(&system)?;
            let mut inputs = merge(json!({ "sgp": sgp.display().to_string() }), sys_inputs);
            match (script, search) {
                (Some(path), false) => {
                    let ws = parse_script(&read(&path)?, &s).with_context(|| format!("{}", path.display()))?;
                    inputs["script"] = json!(path.display().to_string());
                    match canonical_check(&s, &e, &ws) {
                        Ok(rs) => {
                            let eps = extract_epsilon_c(&rs);
                            let result = json!({
                                "passed": true,
                                "run_system": rs,
                                "epsilon_c": eps.to_string(),
                                "epsilon_c_holds": satisfies(&s, &eps).satisfied,
                            });
                            Ok(Outcome { inputs, result, violation: false })
                        }
                        Err(err) => {
                            let result = json!({ "passed": false, "failure": err.to_string() });
                            Ok(Outcome { inputs, result, violation: true })
                        }
                    }
                }
                (None, true) => {
                    let b = ScriptBudget { max_segments: budget, max_free_len: budget, collect_all: all };
                    let found = search_scripts(&s, &e, b);
                    inputs["budget"] = to_value(&b);
                    let result = json!({
                        "found": found.script.is_some(),
                        "script": found.script.as_ref().map(|w| w.to_text()),
                        "epsilon_c": found.epsilon_c,
                        "passing": found.passing,
                        "nodes": found.nodes,
                    });
                    Ok(Outcome { inputs, result, violation: false })
                }
                _ => Err(anyhow!("epsc needs --script <file.ws> or --search")),
            }
        }
        Command::Quotients { sgp } => {
            let s = load_sgp(&sgp)?;
            let list = congruences(&s, DEFAULT_CONGRUENCE_BOUND)?;
            let items: Vec<Value> = list
                .iter()
                .map(|(c, q)| {
                    json!({
                        "blocks": c.blocks(),
                        "order": q.order(),
                        "sgp": to_sgp(q),
                        "iso_hash": canonical_form(q, CanonicalMode::Isomorphism).ok().map(|f| f.hash_hex()),
                    })
                })
                .collect();
            let result = json!({ "count": items.len(), "quotients": items });
            Ok(Outcome { inputs: json!({ "sgp": sgp.display().to_string() }), result, violation: false })
        }
        Command::Catalog { list, id } => {
            let describe = |id: &str| -> Result<Value> {
                let entry = catalog_entry(id)?;
                Ok(json!({
                    "id": entry.id,
                    "text": entry.text,
                    "description": entry.description,
                    "desugared": catalog(id)?.to_string(),
                }))
            };
            let (inputs, result) = match id {
                Some(id) if !list => (json!({ "id": id }), describe(&id)?),
                _ => {
                    let all: Vec<Value> = CATALOG.iter().map(|e| describe(e.id)).collect::<Result<_>>()?;
                    (json!({ "list": true }), Value::Array(all))
                }
            };
            Ok(Outcome { inputs, result, violation: false })
        }
    }
}
