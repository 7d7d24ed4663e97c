//! Argument parsing and subcommand dispatch.

use std::fs;
use std::io::Read;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use ifd_core::density::{girth, girth_bound, mad_exact, thresholds};
use ifd_core::discharge::{discharge, Account, SolveParams, Theorem};
use ifd_core::graph::{generate, GeneratorSpec};
use ifd_core::lightforest::build_light_forest;
use ifd_core::oracle::{oracle_find, OracleOutcome, SearchBudget};
use ifd_core::orientation::{check_feasible, orient, Feasibility};
use ifd_core::partition::{normalize, verify_good, verify_ifd};
use ifd_core::{solve, Graph, Rational, SolveOutcome};

use crate::batch::{load_manifest, run_batch};
use crate::corpus::{corpus_graph, Family};
use crate::format::{load_graph, parse_omega, parse_partition, write_graph, write_partition};

#[derive(Debug, Parser)]
#[command(name = "ifd", version, about = "Independent set plus bounded-degree forest partitions of sparse graphs")]
pub struct Cli {
    /// Print a single JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact maximum average degree as `p/q`.
    Mad {
        graph: String,
        /// Also print the densest vertex set.
        #[arg(long)]
        witness: bool,
    },
    /// Length of a shortest cycle, or `none`.
    Girth { graph: String },
    /// Least `d` granted by each theorem for `mad < bound`.
    Threshold(ThresholdArgs),
    /// Build an (I, F_d)-partition.
    Solve {
        #[command(flatten)]
        params: ParamArgs,
        graph: String,
        /// Print the applied reductions to stderr, one per line.
        #[arg(long)]
        trace: bool,
    },
    /// Check a partition; `-` reads a file from stdin.
    Verify {
        graph: String,
        partition: String,
        #[arg(long)]
        d: usize,
        /// Check the weaker good-partition condition instead.
        #[arg(long)]
        good: bool,
    },
    /// Turn a good partition into an (I, F_d)-partition.
    Normalize {
        graph: String,
        partition: String,
        #[arg(long)]
        d: usize,
    },
    /// Exhaustive search; exit 0 found, 3 refuted, 4 budget exhausted.
    Oracle {
        graph: String,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
        budget_nodes: u64,
        #[arg(long, default_value_t = SearchBudget::default().max_millis)]
        budget_millis: u64,
    },
    /// Generate a graph in edge-list format.
    Gen {
        #[command(subcommand)]
        spec: GenSpec,
    },
    /// Dump the light forest as `child father tag` lines and a bud table.
    Lightforest {
        graph: String,
        #[arg(long)]
        d: usize,
    },
    /// Orient edges so that out-degrees meet the weights in `--omega`.
    Orient {
        graph: String,
        #[arg(long)]
        omega: String,
    },
    /// Replay a discharging procedure with exact charges.
    Discharge {
        #[arg(long = "M")]
        m: Rational,
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        graph: String,
    },
    /// Solve and verify every `SOURCE M D THEOREM` line of a manifest.
    Batch {
        manifest: String,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub mad_bound: Option<Rational>,
    #[arg(long)]
    pub girth: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long = "M")]
    pub m: Rational,
    /// Defaults to the least admissible value.
    #[arg(long)]
    pub d: Option<usize>,
    /// `1`, `2` or `auto`.
    #[arg(long, default_value = "auto")]
    pub theorem: String,
}

#[derive(Debug, Subcommand)]
pub enum GenSpec {
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Replace every edge by a path with `k` interior vertices.
    Subdivide {
        graph: String,
        #[arg(long)]
        k: usize,
    },
    /// A corpus graph gated to `mad < M`.
    Corpus {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n_max: usize,
        #[arg(long = "M")]
        m: Rational,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    match s {
        "1" => Ok(Theorem::T1),
        "2" => Ok(Theorem::T2),
        _ => Err(format!("expected 1 or 2, got {s:?}")),
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| {
        let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// Picks the theorem and `d` for a solve request. `auto` prefers the
/// theorem with the smaller threshold that admits the requested `d`.
pub fn resolve_params(m: &Rational, d: Option<usize>, theorem: &str) -> Result<SolveParams, Failure> {
    let invalid = |msg: String| Failure::domain("InvalidParams", msg);
    let explicit = |t: Theorem, d: Option<usize>| -> Result<SolveParams, Failure> {
        let report = thresholds(m);
        let least = match t {
            Theorem::T1 => report.d_thm1,
            Theorem::T2 => report.d_thm2,
        };
        let d = match (d, least) {
            (Some(d), _) => d,
            (None, Some(l)) => l as usize,
            (None, None) => return Err(invalid(format!("no admissible d for M = {m}"))),
        };
        SolveParams::new(m.clone(), d, t).map_err(|e| invalid(e.to_string()))
    };
    match theorem {
        "1" => explicit(Theorem::T1, d),
        "2" => explicit(Theorem::T2, d),
        "auto" => {
            let report = thresholds(m);
            let order = if report.d_thm2 < report.d_thm1 {
                [Theorem::T2, Theorem::T1]
            } else {
                [Theorem::T1, Theorem::T2]
            };
            let mut last = None;
            for t in order {
                // the second theorem reads `mad < M` for M below 8/3 as `mad < 8/3`
                let m_eff = if t == Theorem::T2 { m.clone().max(Rational::new(8, 3)) } else { m.clone() };
                let least = match t {
                    Theorem::T1 => report.d_thm1,
                    Theorem::T2 => report.d_thm2,
                };
                let Some(d) = d.or(least.map(|l| l as usize)) else { continue };
                match SolveParams::new(m_eff, d, t) {
                    Ok(p) => return Ok(p),
                    Err(e) => last = Some(e.to_string()),
                }
            }
            Err(invalid(last.unwrap_or_else(|| format!("no admissible d for M = {m}"))))
        }
        other => Err(Failure::usage(format!("--theorem must be 1, 2 or auto, got {other:?}"))),
    }
}

/// A failed command: usage errors exit with 2, domain errors with 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub name: String,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            name: "UsageError".into(),
            message: message.into(),
        }
    }

    pub fn domain(name: &str, message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            name: name.into(),
            message: message.into(),
        }
    }

    /// Wraps a library error whose message starts with `Name: `.
    pub fn from_error(e: impl std::fmt::Display) -> Self {
        let text = e.to_string();
        match text.split_once(": ") {
            Some((name, rest)) if !name.contains(' ') => Failure::domain(name, rest),
            _ => Failure::domain("Error", text),
        }
    }
}

/// What a finished command reports: the text form, the same values as
/// JSON, and the exit status.
#[derive(Debug, Clone)]
pub struct Done {
    pub outcome: String,
    pub text: String,
    pub data: Value,
    pub code: i32,
}

impl Done {
    fn ok(outcome: &str, text: String, data: Value) -> Self {
        Done {
            outcome: outcome.into(),
            text,
            data,
            code: 0,
        }
    }
}

/// Collected streams and status of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
    hasher: Sha256,
}

impl Inputs<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        let text = if path == "-" {
            if self.stdin_used {
                return Err(Failure::usage("stdin (`-`) can be read only once"));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::domain("IoError", format!("stdin: {e}")))?;
            s
        } else {
            fs::read_to_string(path).map_err(|e| Failure::domain("IoError", format!("{path}: {e}")))?
        };
        self.hasher.update(text.as_bytes());
        Ok(text)
    }

    fn graph(&mut self, path: &str) -> Result<Graph, Failure> {
        let text = self.read(path)?;
        load_graph(&text).map_err(Failure::from_error)
    }
}

/// Runs one invocation. `argv` includes the program name.
pub fn run(argv: &[String], stdin: &mut dyn Read) -> Output {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Output {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let echo = argv.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    let mut inputs = Inputs {
        stdin,
        stdin_used: false,
        hasher: Sha256::new(),
    };
    let start = Instant::now();
    let (result, trace) = dispatch(&cli.command, &mut inputs);
    let millis = start.elapsed().as_millis() as u64;
    let input_sha = format!("{:x}", inputs.hasher.finalize());

    let mut out = Output::default();
    match result {
        Ok(done) => {
            out.code = done.code;
            if cli.json {
                let report = json!({
                    "command": echo,
                    "input_sha": input_sha,
                    "outcome": done.outcome,
                    "data": done.data,
                    "millis": millis,
                });
                out.stdout = format!("{report}\n");
            } else {
                out.stdout = done.text;
            }
            out.stderr = trace;
        }
        Err(f) => {
            out.code = f.code;
            if cli.json {
                let report = json!({
                    "command": echo,
                    "input_sha": input_sha,
                    "outcome": f.name,
                    "data": { "message": f.message },
                    "millis": millis,
                });
                out.stdout = format!("{report}\n");
            }
            out.stderr = format!("{trace}{}: {}\n", f.name, f.message);
        }
    }
    out
}

fn lines<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| format!("{x}\n")).collect()
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn dispatch(cmd: &Command, io: &mut Inputs) -> (Result<Done, Failure>, String) {
    let mut trace = String::new();
    let r = match cmd {
        Command::Mad { graph, witness } => cmd_mad(io, graph, *witness),
        Command::Girth { graph } => cmd_girth(io, graph),
        Command::Threshold(t) => cmd_threshold(t),
        Command::Solve { params, graph, trace: want } => cmd_solve(io, params, graph, want.then_some(&mut trace)),
        Command::Verify { graph, partition, d, good } => cmd_verify(io, graph, partition, *d, *good),
        Command::Normalize { graph, partition, d } => cmd_normalize(io, graph, partition, *d),
        Command::Oracle {
            graph,
            d,
            budget_nodes,
            budget_millis,
        } => cmd_oracle(io, graph, *d, *budget_nodes, *budget_millis),
        Command::Gen { spec } => cmd_gen(io, spec),
        Command::Lightforest { graph, d } => cmd_lightforest(io, graph, *d),
        Command::Orient { graph, omega } => cmd_orient(io, graph, omega),
        Command::Discharge { m, d, theorem, graph } => cmd_discharge(io, m, *d, *theorem, graph),
        Command::Batch { manifest, threads } => cmd_batch(io, manifest, *threads),
    };
    (r, trace)
}

fn cmd_mad(io: &mut Inputs, path: &str, witness: bool) -> Result<Done, Failure> {
    let g = io.graph(path)?;
    let w = mad_exact(&g).map_err(Failure::from_error)?;
    let mut text = format!("{}\n", w.value);
    let mut data = json!({ "mad": w.value.to_string() });
    if witness {
        text.push_str(&format!("{}\n", join(&w.subset)));
        data["witness"] = json!(w.subset);
    }
    Ok(Done::ok("ok", text, data))
}

fn cmd_girth(io: &mut Inputs, path: &str) -> Result<Done, Failure> {
    let g = io.graph(path)?;
    let gi = girth(&g);
    let shown = gi.map_or("none".to_string(), |x| x.to_string());
    Ok(Done::ok("ok", format!("{shown}\n"), json!({ "girth": gi })))
}

fn cmd_threshold(t: &ThresholdArgs) -> Result<Done, Failure> {
    let bound = match (&t.mad_bound, t.girth) {
        (Some(b), _) => b.clone(),
        (None, Some(g)) => girth_bound(g).ok_or_else(|| Failure::usage("--girth must be at least 3"))?,
        (None, None) => return Err(Failure::usage("give --mad-bound or --girth")),
    };
    let r = thresholds(&bound);
    let show = |x: Option<u64>| x.map_or("none".to_string(), |v| v.to_string());
    let text = format!(
        "d_thm1={} d_thm2={} d_min={}\n",
        show(r.d_thm1),
        show(r.d_thm2),
        show(r.d_min)
    );
    let data = json!({
        "bound": bound.to_string(),
        "d_thm1": r.d_thm1,
        "d_thm2": r.d_thm2,
        "d_min": r.d_min,
    });
    Ok(Done::ok("ok", text, data))
}

fn cmd_solve(io: &mut Inputs, args: &ParamArgs, path: &str, trace: Option<&mut String>) -> Result<Done, Failure> {
    let params = resolve_params(&args.m, args.d, &args.theorem)?;
    let g = io.graph(path)?;
    let r = solve(&g, &params);
    let trace_lines: Vec<String> = r.trace.iter().map(|e| e.to_string()).collect();
    if let Some(t) = trace {
        *t = lines(&trace_lines);
    }
    let base = json!({
        "M": params.m.to_string(),
        "d": params.d,
        "theorem": params.theorem.to_string(),
        "trace": trace_lines,
    });
    match r.outcome {
        SolveOutcome::Partition(p) => {
            let mut data = base;
            data["partition"] = json!(p.to_string());
            Ok(Done::ok("Partition", write_partition(&p), data))
        }
        SolveOutcome::PreconditionViolated(w) => Err(Failure::domain(
            "PreconditionViolated",
            format!("vertices {} have density {} >= {}", join(&w.subset), w.value, params.m),
        )),
        SolveOutcome::InternalError(msg) => Err(Failure::domain("InternalError", msg)),
    }
}

fn cmd_verify(io: &mut Inputs, gpath: &str, ppath: &str, d: usize, good: bool) -> Result<Done, Failure> {
    let g = io.graph(gpath)?;
    let p = parse_partition(&io.read(ppath)?).map_err(Failure::from_error)?;
    let report = if good { verify_good(&g, &p, d) } else { verify_ifd(&g, &p, d) }.map_err(Failure::from_error)?;
    let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
    let verdict = if report.valid { "valid" } else { "invalid" };
    let text = format!("{verdict}\n{}", lines(&violations));
    let mut done = Done::ok(verdict, text, json!({ "valid": report.valid, "violations": violations }));
    if !report.valid {
        done.code = 1;
    }
    Ok(done)
}

fn cmd_normalize(io: &mut Inputs, gpath: &str, ppath: &str, d: usize) -> Result<Done, Failure> {
    let g = io.graph(gpath)?;
    let p = parse_partition(&io.read(ppath)?).map_err(Failure::from_error)?;
    let q = normalize(&g, &p, d).map_err(Failure::from_error)?;
    let moved: Vec<usize> = g.vertices().filter(|&v| p.side(v) != q.side(v)).collect();
    let data = json!({ "partition": q.to_string(), "moved": moved });
    Ok(Done::ok("Partition", write_partition(&q), data))
}

fn cmd_oracle(io: &mut Inputs, path: &str, d: usize, nodes: u64, millis: u64) -> Result<Done, Failure> {
    let g = io.graph(path)?;
    let budget = SearchBudget {
        max_nodes: nodes,
        max_millis: millis,
    };
    Ok(match oracle_find(&g, d, budget) {
        OracleOutcome::Found(p) => Done::ok("Found", write_partition(&p), json!({ "partition": p.to_string() })),
        OracleOutcome::NoneExists => Done {
            code: 3,
            ..Done::ok("NoneExists", "refuted\n".into(), json!({}))
        },
        OracleOutcome::BudgetExhausted => Done {
            code: 4,
            ..Done::ok("BudgetExhausted", "exhausted\n".into(), json!({}))
        },
    })
}

fn cmd_gen(io: &mut Inputs, spec: &GenSpec) -> Result<Done, Failure> {
    let (g, seed) = match spec {
        GenSpec::Cycle { n } => (generate(&GeneratorSpec::Cycle(*n)), None),
        GenSpec::Path { n } => (generate(&GeneratorSpec::Path(*n)), None),
        GenSpec::Complete { n } => (generate(&GeneratorSpec::Complete(*n)), None),
        GenSpec::Random { n, m, seed } => (generate(&GeneratorSpec::Random { n: *n, m: *m, seed: *seed }), Some(*seed)),
        GenSpec::Subdivide { graph, k } => {
            let base = io.graph(graph)?;
            (generate(&GeneratorSpec::Subdivide(base, *k)), None)
        }
        GenSpec::Corpus {
            family,
            n_max,
            m,
            d,
            seed,
        } => {
            if *n_max == 0 {
                return Err(Failure::usage("--n-max must be positive"));
            }
            (Ok(corpus_graph(*family, *n_max, m, *d, *seed)), Some(*seed))
        }
    };
    let g = g.map_err(Failure::from_error)?;
    let text = write_graph(&g);
    let data = json!({ "n": g.n(), "m": g.m(), "edges": g.edges(), "seed": seed });
    Ok(Done::ok("ok", text, data))
}

fn cmd_lightforest(io: &mut Inputs, path: &str, d: usize) -> Result<Done, Failure> {
    let g = io.graph(path)?;
    let l = build_light_forest(&g, d).map_err(Failure::from_error)?;
    let mut text = String::new();
    let mut members = Vec::new();
    for v in l.member_list() {
        let father = l.father[v].map_or("-".to_string(), |f| f.to_string());
        let tag = l.tag[v].map_or("?", |t| t.name());
        text.push_str(&format!("{v} {father} {tag}\n"));
        members.push(json!({ "vertex": v, "father": l.father[v], "tag": tag }));
    }
    let mut buds = Vec::new();
    for b in &l.buds {
        text.push_str(&format!("bud father={} gate={} vertices={}\n", b.father, b.gate, join(&b.vertices)));
        buds.push(json!({ "father": b.father, "gate": b.gate, "vertices": b.vertices }));
    }
    Ok(Done::ok("ok", text, json!({ "members": members, "buds": buds, "roots": l.roots })))
}

fn cmd_orient(io: &mut Inputs, path: &str, wpath: &str) -> Result<Done, Failure> {
    let g = io.graph(path)?;
    let omega = parse_omega(&io.read(wpath)?, g.n()).map_err(Failure::from_error)?;
    match check_feasible(&g, &omega).map_err(Failure::from_error)? {
        Feasibility::Feasible => {
            let o = orient(&g, &omega).map_err(Failure::from_error)?;
            let text = format!("feasible\n{}", lines(o.arcs.iter().map(|(t, h)| format!("{t} {h}"))));
            Ok(Done::ok("Feasible", text, json!({ "arcs": o.arcs })))
        }
        Feasibility::Violating(x) => Err(Failure::domain(
            "Infeasible",
            format!(
                "set {} has weight {} but only {} incident edges",
                join(&x.set),
                x.omega_sum,
                x.incident_edges
            ),
        )),
    }
}

fn account_name(a: &Account) -> String {
    match a {
        Account::Vertex(v) => format!("v{v}"),
        Account::Pool(i) => format!("pool{i}"),
        Account::Pot => "pot".into(),
    }
}

fn cmd_discharge(io: &mut Inputs, m: &Rational, d: usize, t: Theorem, path: &str) -> Result<Done, Failure> {
    let params = SolveParams::new(m.clone(), d, t).map_err(Failure::from_error)?;
    let g = io.graph(path)?;
    let ledger = discharge(&g, &params).map_err(Failure::from_error)?;
    let mut text = String::new();
    let mut charges = Vec::new();
    for v in g.vertices() {
        text.push_str(&format!("charge {v} {} {}\n", ledger.initial[v], ledger.final_charge[v]));
        charges.push(json!({
            "vertex": v,
            "initial": ledger.initial[v].to_string(),
            "final": ledger.final_charge[v].to_string(),
        }));
    }
    let mut pools = Vec::new();
    for (i, p) in ledger.pools.iter().enumerate() {
        let total = ledger.pool_total(i);
        text.push_str(&format!("pool {i} delta={} total={} vertices={}\n", p.delta, total, join(&p.vertices)));
        pools.push(json!({
            "vertices": p.vertices,
            "delta": p.delta.to_string(),
            "total": total.to_string(),
        }));
    }
    let conserved = ledger.is_conserved();
    let nonneg = ledger.all_nonnegative();
    text.push_str(&format!("pot {}\n", ledger.pot));
    text.push_str(&format!(
        "initial={} final={} conserved={conserved} nonnegative={nonneg}\n",
        ledger.total_initial(),
        ledger.total_final()
    ));
    let transfers: Vec<Value> = ledger
        .transfers
        .iter()
        .map(|tr| json!({ "from": account_name(&tr.from), "to": account_name(&tr.to), "amount": tr.amount.to_string() }))
        .collect();
    let data = json!({
        "charges": charges,
        "pools": pools,
        "pot": ledger.pot.to_string(),
        "total_initial": ledger.total_initial().to_string(),
        "total_final": ledger.total_final().to_string(),
        "conserved": conserved,
        "nonnegative": nonneg,
        "transfers": transfers,
    });
    Ok(Done::ok("ok", text, data))
}

fn cmd_batch(io: &mut Inputs, path: &str, threads: usize) -> Result<Done, Failure> {
    let text = io.read(path)?;
    let base = std::path::Path::new(path).parent().map(|p| p.to_path_buf()).unwrap_or_default();
    let entries = load_manifest(&text, &base).map_err(Failure::from_error)?;
    let report = run_batch(&entries, threads).map_err(Failure::from_error)?;
    let mut out = String::new();
    let mut rows = Vec::new();
    for r in &report.rows {
        out.push_str(&format!("{} {} {} verified={}\n", r.index, r.source, r.outcome, r.verified));
        rows.push(json!({
            "index": r.index,
            "source": r.source,
            "outcome": r.outcome,
            "verified": r.verified,
            "detail": r.detail,
        }));
    }
    let c = &report.counts;
    out.push_str(&format!(
        "Partition={} PreconditionViolated={} InternalError={}\n",
        c.partition, c.precondition_violated, c.internal_error
    ));
    let data = json!({
        "rows": rows,
        "counts": {
            "Partition": c.partition,
            "PreconditionViolated": c.precondition_violated,
            "InternalError": c.internal_error,
        },
    });
    let mut done = Done::ok("ok", out, data);
    if c.internal_error > 0 {
        done.code = 1;
        done.outcome = "InternalError".into();
    }
    Ok(done)
}
