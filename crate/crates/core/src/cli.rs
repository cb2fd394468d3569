//! Command-line front end. The binary only forwards to [`run`].
//!
//! Exit codes: 0 on success, 2 on unreadable or invalid input (including
//! bad flags), 1 on internal failure. Results go to `out`, diagnostics to
//! `err`.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::axioms::{self, Axiom, AxiomVerdict, FuzzConfig, MajorityCriterion, MethodId, Violation};
use crate::ballots::{parse_profile, BallotProfile};
use crate::charfun::{self, CharFn, Coalition};
use crate::classic::{self, ScoreSystem};
use crate::matrix_game::{pure_maximin, solve_zero_sum, PayoffMatrix};
use crate::rational::{self, to_decimal_string, to_exact_string};
use crate::report::{align, approx, ranking_json, Report};
use crate::shapley::{rank_by_scores, shapley, RankingResult};

#[derive(Debug, Parser)]
#[command(name = "shapley-rank", version, about = "Shapley-value rankings of ranked-ballot elections")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Input file, or `-` for stdin.
    #[arg(long, global = true, visible_alias = "profile", default_value = "-")]
    pub input: String,
    /// Output format (default: table; json for `shapley` and `axioms`, csv
    /// for `charfun`).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Decimal places in rounded values.
    #[arg(long, global = true, default_value_t = 3)]
    pub decimals: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pairwise tallies h(i,j).
    Tournament,
    /// Scores and collective ranking under one method.
    Rank {
        #[arg(long, default_value = "v")]
        method: String,
    },
    /// Shapley values of one characteristic function.
    Shapley {
        #[arg(long, default_value = "v")]
        method: String,
    },
    /// Every characteristic function over every coalition.
    Charfun,
    /// A classical rule.
    Classic {
        #[arg(long, value_enum)]
        method: ClassicMethod,
        /// Points per position for `positional`, e.g. `25,18,15,12,10`.
        #[arg(long, value_delimiter = ',')]
        scores: Vec<String>,
    },
    /// Solve a matrix game given as JSON rows, e.g. `[["0","1"],["1","0"]]`.
    Game,
    /// Check axioms on a profile, or fuzz for counterexamples.
    Axioms(AxiomArgs),
    /// Every method side by side.
    Report,
    /// Convert between the native and PrefLib soc formats.
    Convert {
        #[arg(long, value_enum)]
        to: ProfileFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassicMethod {
    Borda,
    Copeland,
    Maximin,
    Schulze,
    Positional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileFormat {
    Native,
    Soc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    Strict,
    Coarsening,
}

#[derive(Debug, Args)]
pub struct AxiomArgs {
    #[arg(long, default_value = "v")]
    pub method: String,
    /// One of unanimity, monotonicity, majority, condorcet, strong-condorcet;
    /// all applicable axioms when omitted.
    #[arg(long)]
    pub axiom: Option<String>,
    /// Order flooded into the profile for the majority rule, e.g. `a>b>c`.
    #[arg(long)]
    pub order: Option<String>,
    /// Largest number of added ballots tried for the majority rule.
    #[arg(long)]
    pub cap: Option<u64>,
    #[arg(long, value_enum, default_value = "strict")]
    pub criterion: CriterionArg,
    /// Search random profiles instead of reading one.
    #[arg(long)]
    pub fuzz: bool,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Candidate count: `K` (meaning 2..=K) or `A..B`.
    #[arg(long, default_value = "3..5")]
    pub m: String,
    /// Voter count: `K` (meaning 1..=K) or `A..B`.
    #[arg(long, default_value = "1..15")]
    pub n: String,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Err(e) => {
            let (CliError::Input(msg) | CliError::Internal(msg)) = &e;
            let _ = writeln!(err, "error: {msg}");
            e.code()
        }
    }
}

fn read_input(path: &str) -> CliResult<String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(input_err)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn read_profile(path: &str) -> CliResult<BallotProfile> {
    let text = read_input(path)?;
    parse_profile(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn execute(cli: &Cli) -> CliResult<String> {
    let g = &cli.global;
    let format = |default| g.format.unwrap_or(default);
    match &cli.command {
        Command::Tournament => cmd_tournament(&read_profile(&g.input)?, format(Format::Table)),
        Command::Rank { method } => {
            let method: MethodId = method.parse().map_err(CliError::Input)?;
            let profile = read_profile(&g.input)?;
            Ok(render_ranking(method.tag(), &method.rank(&profile), &profile, format(Format::Table), g.decimals))
        }
        Command::Shapley { method } => {
            let f: CharFn = method.parse().map_err(CliError::Input)?;
            let profile = read_profile(&g.input)?;
            let ranking = rank_by_scores(&shapley(&charfun::build(f, &profile.tournament_matrix())));
            Ok(render_ranking(f.tag(), &ranking, &profile, format(Format::Json), g.decimals))
        }
        Command::Charfun => cmd_charfun(&read_profile(&g.input)?, format(Format::Csv), g.decimals),
        Command::Classic { method, scores } => {
            let profile = read_profile(&g.input)?;
            cmd_classic(&profile, *method, scores, format(Format::Table), g.decimals)
        }
        Command::Game => cmd_game(&read_input(&g.input)?, format(Format::Table), g.decimals),
        Command::Axioms(args) => cmd_axioms(args, &g.input, format(Format::Json)),
        Command::Report => {
            let report = Report::build(&read_profile(&g.input)?);
            Ok(match format(Format::Table) {
                Format::Table => report.to_table(g.decimals),
                Format::Csv => report.to_csv(),
                Format::Json => to_json_string(&report.to_json(g.decimals))?,
            })
        }
        Command::Convert { to } => {
            let profile = read_profile(&g.input)?;
            Ok(match to {
                ProfileFormat::Native => profile.to_native_string(),
                ProfileFormat::Soc => profile.to_soc_string(),
            })
        }
    }
}

fn to_json_string(value: &Value) -> CliResult<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Internal(e.to_string()))
}

fn cmd_tournament(profile: &BallotProfile, format: Format) -> CliResult<String> {
    let t = profile.tournament_matrix();
    let ids: Vec<String> = profile.candidates().iter().map(|c| c.to_string()).collect();
    let m = t.m();
    Ok(match format {
        Format::Json => to_json_string(&json!({ "candidates": ids, "n": t.n(), "matrix": t.rows() }))?,
        Format::Csv => {
            let mut out = format!(",{}\n", ids.join(","));
            for i in 0..m {
                let cells: Vec<String> = (0..m).map(|j| t.get(i, j).to_string()).collect();
                out.push_str(&format!("{},{}\n", ids[i], cells.join(",")));
            }
            out
        }
        Format::Table => {
            let mut lines = vec![std::iter::once(String::new()).chain(ids.iter().cloned()).collect::<Vec<_>>()];
            for i in 0..m {
                let mut line = vec![ids[i].clone()];
                line.extend((0..m).map(|j| if i == j { "-".to_string() } else { t.get(i, j).to_string() }));
                lines.push(line);
            }
            format!("n = {}\n{}", t.n(), align(&lines))
        }
    })
}

fn render_ranking(
    method: &str,
    ranking: &RankingResult,
    profile: &BallotProfile,
    format: Format,
    decimals: u32,
) -> String {
    let candidates = profile.candidates();
    match format {
        Format::Json => serde_json::to_string_pretty(&ranking_json(method, ranking, candidates, decimals))
            .expect("json values serialize")
            + "\n",
        Format::Csv => {
            let mut out = String::from("candidate,exact,approx\n");
            for (c, v) in candidates.iter().zip(&ranking.scores.values) {
                out.push_str(&format!("{},{},{}\n", c, to_exact_string(v), to_decimal_string(v, decimals)));
            }
            out
        }
        Format::Table => {
            let mut lines = vec![vec!["candidate".to_string(), "exact".to_string(), "approx".to_string()]];
            for (c, v) in candidates.iter().zip(&ranking.scores.values) {
                lines.push(vec![c.to_string(), to_exact_string(v), to_decimal_string(v, decimals)]);
            }
            format!("method: {method}\n{}ranking: {}\n", align(&lines), ranking.render(candidates))
        }
    }
}

fn cmd_charfun(profile: &BallotProfile, format: Format, decimals: u32) -> CliResult<String> {
    let t = profile.tournament_matrix();
    let m = t.m();
    let tables: Vec<_> = CharFn::ALL.iter().map(|&f| charfun::build(f, &t)).collect();
    let order = Coalition::by_size(m);
    let candidates = profile.candidates();
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("coalition");
            for f in CharFn::ALL {
                out.push(',');
                out.push_str(f.tag());
            }
            out.push('\n');
            for k in &order {
                out.push_str(&k.label(candidates));
                for table in &tables {
                    out.push(',');
                    out.push_str(&to_exact_string(table.value(*k)));
                }
                out.push('\n');
            }
            out
        }
        Format::Table => {
            let mut lines = vec![std::iter::once("K".to_string())
                .chain(CharFn::ALL.iter().map(|f| f.tag().to_string()))
                .collect::<Vec<_>>()];
            for k in &order {
                let mut line = vec![k.label(candidates)];
                line.extend(tables.iter().map(|t| to_decimal_string(t.value(*k), decimals)));
                lines.push(line);
            }
            align(&lines)
        }
        Format::Json => {
            let rows: Vec<Value> = order
                .iter()
                .map(|k| {
                    let mut row = serde_json::Map::new();
                    row.insert("coalition".into(), json!(k.label(candidates)));
                    for (f, table) in CharFn::ALL.iter().zip(&tables) {
                        row.insert(f.tag().into(), json!(to_exact_string(table.value(*k))));
                    }
                    Value::Object(row)
                })
                .collect();
            to_json_string(&Value::Array(rows))?
        }
    })
}

fn cmd_classic(
    profile: &BallotProfile,
    method: ClassicMethod,
    scores: &[String],
    format: Format,
    decimals: u32,
) -> CliResult<String> {
    let t = profile.tournament_matrix();
    let (label, ranking) = match method {
        ClassicMethod::Borda => ("borda", rank_by_scores(&classic::borda(&t))),
        ClassicMethod::Copeland => ("copeland", rank_by_scores(&classic::copeland(&t))),
        ClassicMethod::Maximin => ("maximin", rank_by_scores(&classic::maximin_rule(&t))),
        ClassicMethod::Schulze => ("schulze", classic::schulze(&t)),
        ClassicMethod::Positional => {
            if scores.is_empty() {
                return Err(CliError::Input("positional scoring needs --scores".into()));
            }
            let points = scores
                .iter()
                .map(|s| rational::parse(s).map_err(input_err))
                .collect::<CliResult<Vec<_>>>()?;
            let system = ScoreSystem::new("positional", points);
            let s = classic::positional(profile, &system).map_err(input_err)?;
            ("positional", rank_by_scores(&s))
        }
    };
    Ok(render_ranking(label, &ranking, profile, format, decimals))
}

fn cmd_game(text: &str, format: Format, decimals: u32) -> CliResult<String> {
    let raw: Vec<Vec<Value>> =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("matrix JSON: {e}")))?;
    let rows = raw
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| match cell {
                    Value::String(s) => rational::parse(s).map_err(input_err),
                    Value::Number(n) => rational::parse(&n.to_string()).map_err(input_err),
                    other => Err(CliError::Input(format!("matrix entry {other} is not a number"))),
                })
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    let game = PayoffMatrix::new(rows).map_err(input_err)?;
    let solution = solve_zero_sum(&game);
    let pure = pure_maximin(&game);
    let exact = |v: &[rational::Rational]| v.iter().map(to_exact_string).collect::<Vec<_>>();
    Ok(match format {
        Format::Json => to_json_string(&json!({
            "value": to_exact_string(&solution.value),
            "approx": approx(&solution.value, decimals),
            "pure_maximin": to_exact_string(&pure),
            "row_strategy": exact(&solution.row_strategy),
            "col_strategy": exact(&solution.col_strategy),
        }))?,
        Format::Csv => format!(
            "value,pure_maximin,row_strategy,col_strategy\n{},{},{},{}\n",
            to_exact_string(&solution.value),
            to_exact_string(&pure),
            exact(&solution.row_strategy).join(" "),
            exact(&solution.col_strategy).join(" ")
        ),
        Format::Table => format!(
            "value: {} ({})\npure maximin: {}\nrow strategy: ({})\ncolumn strategy: ({})\n",
            to_exact_string(&solution.value),
            to_decimal_string(&solution.value, decimals),
            to_exact_string(&pure),
            exact(&solution.row_strategy).join(", "),
            exact(&solution.col_strategy).join(", ")
        ),
    })
}

fn parse_range<T>(text: &str, low: T) -> CliResult<RangeInclusive<T>>
where
    T: std::str::FromStr + PartialOrd + Copy,
{
    let parse = |s: &str| s.trim().parse::<T>().map_err(|_| CliError::Input(format!("invalid range `{text}`")));
    let range = match text.split_once("..") {
        Some((a, b)) => parse(a)?..=parse(b.trim_start_matches('='))?,
        None => low..=parse(text)?,
    };
    if range.start() > range.end() || *range.start() < low {
        return Err(CliError::Input(format!("invalid range `{text}`")));
    }
    Ok(range)
}

fn cmd_axioms(args: &AxiomArgs, input: &str, format: Format) -> CliResult<String> {
    let method: MethodId = args.method.parse().map_err(CliError::Input)?;
    let axiom: Option<Axiom> = args.axiom.as_deref().map(str::parse).transpose().map_err(CliError::Input)?;
    let criterion = match args.criterion {
        CriterionArg::Strict => MajorityCriterion::Strict,
        CriterionArg::Coarsening => MajorityCriterion::Coarsening,
    };
    if args.fuzz {
        let candidates = parse_range(&args.m, 2usize)?;
        if *candidates.end() > 6 {
            return Err(CliError::Input("fuzzing supports at most 6 candidates".into()));
        }
        let config = FuzzConfig {
            trials: args.trials,
            seed: args.seed,
            candidates,
            voters: parse_range(&args.n, 1u64)?,
            cap: args.cap,
            criterion,
        };
        let axioms: Vec<Axiom> = axiom.map_or_else(|| Axiom::ALL.to_vec(), |a| vec![a]);
        let results: Vec<Value> = axioms
            .iter()
            .map(|&a| {
                let report = axioms::fuzz(method, a, &config);
                let mut v = json!({
                    "method": method.tag(),
                    "axiom": a.tag(),
                    "seed": config.seed,
                    "trials_run": report.trials_run,
                    "violation_found": report.finding.is_some(),
                });
                if let Some(f) = &report.finding {
                    v["trial"] = json!(f.trial);
                    v["original_profile"] = json!(f.original.to_native_string());
                    v["verdict"] = verdict_json(&f.verdict);
                }
                v
            })
            .collect();
        return render_verdicts(results, format);
    }

    let profile = read_profile(input)?;
    let order = args
        .order
        .as_deref()
        .map(|o| profile.parse_order(o).map_err(|e| CliError::Input(format!("--order: {e}"))))
        .transpose()?;
    let cap = args.cap.unwrap_or(4 * profile.n() * profile.m() as u64 + 4);
    let axioms: Vec<Axiom> = match axiom {
        Some(a) => vec![a],
        None => Axiom::ALL.into_iter().filter(|a| *a != Axiom::Majority || order.is_some()).collect(),
    };
    let mut results = Vec::new();
    for a in axioms {
        let verdict = match a {
            Axiom::Majority => {
                let order = order
                    .as_ref()
                    .ok_or_else(|| CliError::Input("the majority rule needs --order".into()))?;
                axioms::check_majority_with(&profile, order, method, cap, criterion)
            }
            _ => axioms::check(a, &profile, method),
        };
        results.push(verdict_json(&verdict));
    }
    render_verdicts(results, format)
}

fn render_verdicts(results: Vec<Value>, format: Format) -> CliResult<String> {
    match format {
        Format::Json => to_json_string(&Value::Array(results)),
        Format::Csv | Format::Table => {
            let mut out = String::new();
            for r in &results {
                let holds = r
                    .get("holds")
                    .or_else(|| r.get("verdict").and_then(|v| v.get("holds")))
                    .and_then(Value::as_bool)
                    .unwrap_or(true);
                out.push_str(&format!(
                    "{} {}: {}",
                    r["method"].as_str().unwrap_or_default(),
                    r["axiom"].as_str().unwrap_or_default(),
                    if holds { "holds" } else { "VIOLATED" }
                ));
                if let Some(t) = r.get("trials_run") {
                    out.push_str(&format!(" ({t} trials)"));
                }
                if let Some(n) = r.get("minimal_n").filter(|v| !v.is_null()) {
                    out.push_str(&format!(" (N = {n})"));
                }
                out.push('\n');
                let witness = r.get("witness").or_else(|| r.get("verdict").and_then(|v| v.get("witness")));
                if let Some(w) = witness.filter(|w| !w.is_null()) {
                    out.push_str(&format!("  {}\n", w["description"].as_str().unwrap_or_default()));
                    for line in w["profile"].as_str().unwrap_or_default().lines() {
                        out.push_str(&format!("    {line}\n"));
                    }
                }
            }
            Ok(out)
        }
    }
}

fn verdict_json(verdict: &AxiomVerdict) -> Value {
    let witness = verdict.witness.as_ref().map(|w| {
        let cands = w.profile.candidates();
        let mut v = json!({
            "description": w.describe(cands),
            "profile": w.profile.to_native_string(),
        });
        if let Violation::Majority { order, cap, trajectory, .. } = &w.violation {
            v["order"] = json!(w.profile.render_order(order));
            v["cap"] = json!(cap);
            v["trajectory"] = json!(trajectory);
        }
        v
    });
    json!({
        "method": verdict.method.tag(),
        "axiom": verdict.axiom.tag(),
        "holds": verdict.holds,
        "minimal_n": verdict.minimal_n,
        "witness": witness,
    })
}
