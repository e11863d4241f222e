//! Command-line surface of the `totpos` binary.
//!
//! Every command prints one JSON report on standard output and exits with 0
//! for an affirmative verdict or a successful construction, 1 for a negative
//! verdict, and 2 for an input or precondition error. Reports carry a
//! `timing` object that is the only part allowed to differ between runs with
//! the same arguments.

mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bruhat::{
    bruhat_leq_ars, bruhat_leq_perm, cycle_positive_iff_bruhat, cycle_to_permutation_pair,
    Permutation, RSClass,
};
use crate::config::{
    configuration, has_all_ones_2x2, kth_smallest_value, multiplicity, smallest_k_audit,
    BinaryConfiguration,
};
use crate::cycles::{
    collection_is_positive, exists_positive_collection, pattern_obstruction, CycleCollection,
    FeasibilityCertificate, PartialPattern, PatternVerdict,
};
use crate::equal_minors::{alpha_set, forbidden_quadruples, realize_outerplanar, OuterplanarInput};
use crate::error::{Error, Result};
use crate::exact::{
    classify, is_tp, kth_compound, parse_rational, ExactMatrix, MatrixClass, Rational,
};
use crate::geometry::{
    above_below_counts, exp_matrix_tp, grid_arrangement, incidence_matrix,
    normalize_general_position, Arrangement, DEFAULT_NORMALIZE_BUDGET,
};
use crate::tns::{fill_to_tns, TnsFillRequest, DEFAULT_RETRY_BUDGET};
use report::{rational, rational_table, table, witness, Report};

#[derive(Debug, Parser)]
#[command(name = "totpos", version, about = "Exact tools for equal entries in totally positive matrices")]
pub struct Cli {
    /// Write the command's main artifact (matrix, configuration, arrangement) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide membership in tp, tn, tp2, tpk:<k> or tns.
    Check {
        #[arg(long)]
        class: String,
        matrix: PathBuf,
    },
    /// Configuration and multiplicity of one entry value.
    Config {
        /// Value to locate.
        #[arg(long, conflicts_with = "rank", required_unless_present = "rank")]
        value: Option<String>,
        /// Use the k-th smallest distinct value instead.
        #[arg(long)]
        rank: Option<usize>,
        /// With --rank, count from the largest value.
        #[arg(long)]
        largest: bool,
        matrix: PathBuf,
    },
    /// Diagonal audit of the k smallest (anti-diagonal audit of the k largest) values.
    Audit {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        largest: bool,
        matrix: PathBuf,
    },
    /// Matrix of all k x k minors.
    Compound {
        #[arg(long)]
        k: usize,
        matrix: PathBuf,
    },
    /// Orthogonal cycles: weight tables, positivity, LP feasibility.
    #[command(subcommand)]
    Cycles(CyclesCommand),
    /// Bruhat order on permutations and on A(R,S).
    #[command(subcommand)]
    Bruhat(BruhatCommand),
    /// Point-line arrangements and the incidence-to-TP construction.
    #[command(subcommand)]
    Geom(GeomCommand),
    /// Totally nonsingular fills of 0-1 masks.
    #[command(subcommand)]
    Tns(TnsCommand),
    /// Realize an outerplanar graph by equal 2x2 minors.
    Realize { graph: PathBuf },
    /// Partial-matrix patterns.
    #[command(subcommand)]
    Pattern(PatternCommand),
}

#[derive(Debug, Subcommand)]
pub enum CyclesCommand {
    /// Weight table of each cycle and of their sum.
    Eval { input: PathBuf },
    /// Whether the cycle collection is positive.
    Positive { input: PathBuf },
    /// Whether a matrix E exists for the configuration (no positive collection).
    Feasible { input: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum BruhatCommand {
    /// Compare two permutations in one-line notation.
    Perm { p: String, q: String },
    /// Compare two members of the same A(R,S) class.
    Ars { a1: PathBuf, a2: PathBuf },
    /// Permutation pair of a two-regular cycle and both sides of the criterion.
    Cycle { cycle: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum GeomCommand {
    /// Grid arrangement with k^4 incidences.
    Grid {
        #[arg(long)]
        k: usize,
    },
    /// Move an arrangement into general position keeping its incidences.
    Normalize {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_NORMALIZE_BUDGET)]
        budget: usize,
        arrangement: PathBuf,
    },
    /// TP matrix equal to 1 exactly at the incidences.
    ToMatrix {
        #[arg(long, default_value = "2")]
        base: String,
        #[arg(long, default_value_t = 64)]
        cap: u32,
        arrangement: PathBuf,
    },
    /// Counts of points below, above and on lines.
    Stats { arrangement: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum TnsCommand {
    /// Fill a mask into a totally nonsingular matrix equal to b on the ones.
    Fill(TnsFillArgs),
}

#[derive(Debug, Args)]
pub struct TnsFillArgs {
    #[arg(long, default_value = "1")]
    pub b: String,
    /// Perturbation radius; defaults to |b|/2.
    #[arg(long)]
    pub eps: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_RETRY_BUDGET)]
    pub retries: usize,
    pub mask: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum PatternCommand {
    /// Cycle obstruction to TP2 completion.
    Obstruct {
        /// Also report the verdict for each pattern with one specified cell removed.
        #[arg(long)]
        single_removals: bool,
        pattern: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Config { .. } => "config",
            Command::Audit { .. } => "audit",
            Command::Compound { .. } => "compound",
            Command::Cycles(CyclesCommand::Eval { .. }) => "cycles eval",
            Command::Cycles(CyclesCommand::Positive { .. }) => "cycles positive",
            Command::Cycles(CyclesCommand::Feasible { .. }) => "cycles feasible",
            Command::Bruhat(BruhatCommand::Perm { .. }) => "bruhat perm",
            Command::Bruhat(BruhatCommand::Ars { .. }) => "bruhat ars",
            Command::Bruhat(BruhatCommand::Cycle { .. }) => "bruhat cycle",
            Command::Geom(GeomCommand::Grid { .. }) => "geom grid",
            Command::Geom(GeomCommand::Normalize { .. }) => "geom normalize",
            Command::Geom(GeomCommand::ToMatrix { .. }) => "geom to-matrix",
            Command::Geom(GeomCommand::Stats { .. }) => "geom stats",
            Command::Tns(_) => "tns fill",
            Command::Realize { .. } => "realize",
            Command::Pattern(_) => "pattern obstruct",
        }
    }
}

/// Runs one command; returns the exit code and the JSON report.
pub fn run(cli: &Cli) -> (i32, Value) {
    let start = Instant::now();
    let name = cli.command.name();
    let report = dispatch(cli).unwrap_or_else(|e| Report::error(name, &e));
    let code = report.code;
    (code, report.into_value(start.elapsed().as_secs_f64() * 1000.0))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| Error::input(format!("{} is not valid JSON: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<ExactMatrix> {
    ExactMatrix::parse_json(&read(path)?)
}

fn read_configuration(path: &Path) -> Result<BinaryConfiguration> {
    BinaryConfiguration::parse_text(&read(path)?)
}

fn write_out(out: Option<&Path>, contents: &str) -> Result<()> {
    if let Some(path) = out {
        std::fs::write(path, contents)
            .map_err(|e| Error::input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn verdict(flag: bool, yes: &str, no: &str) -> (String, i32) {
    if flag { (yes.to_string(), 0) } else { (no.to_string(), 1) }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let out = cli.out.as_deref();
    let name = cli.command.name();
    match &cli.command {
        Command::Check { class, matrix } => {
            let cls: MatrixClass = class.parse()?;
            let a = read_matrix(matrix)?;
            let c = classify(&a, cls)?;
            let (v, code) = verdict(c.member, "member", "not_member");
            let mut r = Report::new(name, &v, code);
            r.set("class", json!(cls.to_string()))
                .set("rows", json!(a.rows()))
                .set("cols", json!(a.cols()))
                .set("witness", c.witness.as_ref().map_or(Value::Null, witness));
            Ok(r)
        }
        Command::Config { value, rank, largest, matrix } => {
            let a = read_matrix(matrix)?;
            let x = match (value, rank) {
                (Some(v), _) => parse_rational(v)?,
                (None, Some(k)) => kth_smallest_value(&a, *k, *largest)?,
                (None, None) => return Err(Error::input("give --value or --rank")),
            };
            let conf = configuration(&a, &x);
            let mult = multiplicity(&a, &x);
            write_out(out, &conf.to_string())?;
            let (v, code) = verdict(mult > 0, "present", "absent");
            let mut r = Report::new(name, &v, code);
            let block = has_all_ones_2x2(&conf);
            r.set("value", rational(&x))
                .set("multiplicity", json!(mult))
                .set("configuration", json!(conf.to_string().lines().collect::<Vec<_>>()))
                .set(
                    "all_ones_2x2",
                    block.map_or(Value::Null, |b| {
                        json!({ "rows": b.rows.map(|i| i + 1), "cols": b.cols.map(|j| j + 1) })
                    }),
                );
            Ok(r)
        }
        Command::Audit { k, largest, matrix } => {
            let a = read_matrix(matrix)?;
            let rep = smallest_k_audit(&a, *k, *largest)?;
            let ok = rep.diagonals_within_bound() && rep.total_within_bound();
            let (v, code) = verdict(ok, "within_bounds", "bound_violated");
            let mut r = Report::new(name, &v, code);
            let per: serde_json::Map<String, Value> =
                rep.per_diagonal.iter().map(|(c, n)| (c.to_string(), json!(n))).collect();
            r.set("k", json!(rep.k))
                .set("largest", json!(rep.largest))
                .set("values", rep.values.iter().map(rational).collect())
                .set("per_diagonal", Value::Object(per))
                .set("total", json!(rep.total))
                .set("per_diagonal_bound", json!(rep.per_diagonal_bound))
                .set("total_bound", json!(rep.total_bound));
            Ok(r)
        }
        Command::Compound { k, matrix } => {
            let a = read_matrix(matrix)?;
            let c = kth_compound(&a, *k)?;
            write_out(out, &pretty(&c.to_json()))?;
            let mut r = Report::new(name, "computed", 0);
            r.set("k", json!(k)).set("compound", c.to_json()).set("compound_is_tp", json!(is_tp(&c)));
            Ok(r)
        }
        Command::Cycles(cmd) => cycles_command(name, cmd, out),
        Command::Bruhat(cmd) => bruhat_command(name, cmd),
        Command::Geom(cmd) => geom_command(name, cmd, out),
        Command::Tns(TnsCommand::Fill(args)) => {
            let mask = read_configuration(&args.mask)?;
            let b = parse_rational(&args.b)?;
            let mut req = TnsFillRequest::new(mask, b, args.seed);
            req.eps = args.eps.as_deref().map(parse_rational).transpose()?;
            req.retry_budget = args.retries;
            let fill = fill_to_tns(&req)?;
            write_out(out, &pretty(&fill.matrix.to_json()))?;
            let mut r = Report::new(name, "filled", 0);
            r.set("matrix", fill.matrix.to_json())
                .set("attempts", json!(fill.attempts))
                .set("eps", rational(&fill.eps))
                .set("seed", json!(args.seed));
            Ok(r)
        }
        Command::Realize { graph } => {
            let g = OuterplanarInput::parse_text(&read(graph)?)?;
            let real = realize_outerplanar(&g)?;
            write_out(out, &pretty(&real.matrix.to_json()))?;
            let s = alpha_set(&real.matrix, &real.alpha)?;
            let requested: Vec<Value> = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = real.column_pair(u, v).expect("every vertex has a column");
                    json!({ "edge": [u, v], "columns": [a, b], "in_alpha_set": s.contains(a, b) })
                })
                .collect();
            let mut r = Report::new(name, "realized", 0);
            r.set("matrix", real.matrix.to_json())
                .set("alpha", rational(&real.alpha))
                .set("labeling", json!(real.labeling))
                .set("triangulation_chords", json!(real.triangulation.chords().iter().collect::<Vec<_>>()))
                .set("edges", Value::Array(requested))
                .set("alpha_pairs", json!(s.pairs.iter().collect::<Vec<_>>()))
                .set("forbidden_quadruples", json!(forbidden_quadruples(&s, real.matrix.cols()).len()));
            Ok(r)
        }
        Command::Pattern(PatternCommand::Obstruct { single_removals, pattern }) => {
            let p = PartialPattern::parse_text(&read(pattern)?)?;
            let (v, cert) = pattern_obstruction(&p)?;
            let code = if v == PatternVerdict::Obstructed { 0 } else { 1 };
            let mut r = Report::new(name, &v.to_string(), code);
            r.set("certificate", certificate(&cert));
            if *single_removals {
                let mut variants = Vec::new();
                for (i, j) in p.indicator().ones() {
                    let (vv, _) = pattern_obstruction(&p.without(i, j))?;
                    variants.push(json!({ "removed": [i + 1, j + 1], "verdict": vv.to_string() }));
                }
                r.set("single_removals", Value::Array(variants));
            }
            Ok(r)
        }
    }
}

fn certificate(cert: &FeasibilityCertificate) -> Value {
    match cert {
        FeasibilityCertificate::Feasible { e, margin } => {
            json!({ "kind": "feasible", "e": e.to_json(), "margin": rational(margin) })
        }
        FeasibilityCertificate::Infeasible { weights } => {
            json!({ "kind": "farkas", "weights": rational_table(weights) })
        }
    }
}

fn cycles_command(name: &str, cmd: &CyclesCommand, out: Option<&Path>) -> Result<Report> {
    match cmd {
        CyclesCommand::Eval { input } => {
            let o = CycleCollection::from_json(&read_json(input)?)?;
            let mut r = Report::new(name, "computed", 0);
            r.set("frame", json!([o.rows(), o.cols()]))
                .set("cycles", o.cycles().iter().map(|c| table(&c.weight_table())).collect())
                .set("total", table(&o.weight_table()));
            Ok(r)
        }
        CyclesCommand::Positive { input } => {
            let o = CycleCollection::from_json(&read_json(input)?)?;
            let (v, code) = verdict(collection_is_positive(&o), "positive", "not_positive");
            let mut r = Report::new(name, &v, code);
            r.set("total", table(&o.weight_table()));
            Ok(r)
        }
        CyclesCommand::Feasible { input } => {
            let m = read_configuration(input)?;
            let (exists, cert) = exists_positive_collection(&m);
            if let FeasibilityCertificate::Feasible { e, .. } = &cert {
                write_out(out, &pretty(&e.to_json()))?;
            }
            let (v, code) = verdict(!exists, "feasible", "positive_collection_exists");
            let mut r = Report::new(name, &v, code);
            r.set("positive_collection_exists", json!(exists))
                .set("certificate", certificate(&cert))
                .set("certificate_verified", json!(cert.verify(&m)));
            Ok(r)
        }
    }
}

fn bruhat_command(name: &str, cmd: &BruhatCommand) -> Result<Report> {
    match cmd {
        BruhatCommand::Perm { p, q } => {
            let (p, q): (Permutation, Permutation) = (p.parse()?, q.parse()?);
            let (v, code) = verdict(bruhat_leq_perm(&p, &q)?, "leq", "not_leq");
            let mut r = Report::new(name, &v, code);
            r.set("p", json!(p.to_string())).set("q", json!(q.to_string()));
            Ok(r)
        }
        BruhatCommand::Ars { a1, a2 } => {
            let (m1, m2) = (read_configuration(a1)?, read_configuration(a2)?);
            let cls = RSClass::of(&m1);
            let (v, code) = verdict(bruhat_leq_ars(&m1, &m2, &cls)?, "leq", "not_leq");
            let mut r = Report::new(name, &v, code);
            r.set("row_sums", json!(cls.r)).set("col_sums", json!(cls.s));
            Ok(r)
        }
        BruhatCommand::Cycle { cycle } => {
            let o = CycleCollection::from_json(&read_json(cycle)?)?;
            let [c] = o.cycles() else {
                return Err(Error::input("expected a single cycle"));
            };
            let (pi, sigma) = cycle_to_permutation_pair(c)?;
            let (positive, leq) = cycle_positive_iff_bruhat(c)?;
            let (v, code) = verdict(positive, "positive", "not_positive");
            let mut r = Report::new(name, &v, code);
            r.set("pi", json!(pi.to_string()))
                .set("sigma", json!(sigma.to_string()))
                .set("positive", json!(positive))
                .set("pi_leq_sigma", json!(leq))
                .set("sides_agree", json!(positive == leq));
            Ok(r)
        }
    }
}

fn geom_command(name: &str, cmd: &GeomCommand, out: Option<&Path>) -> Result<Report> {
    let read_arr = |p: &Path| -> Result<Arrangement> { Arrangement::parse_json(&read(p)?) };
    match cmd {
        GeomCommand::Grid { k } => {
            let g = grid_arrangement(*k)?;
            write_out(out, &pretty(&g.to_json()))?;
            let mut r = Report::new(name, "generated", 0);
            r.set("points", json!(g.points.len()))
                .set("lines", json!(g.lines.len()))
                .set("incidences", json!(g.incidence_count()))
                .set("arrangement", g.to_json());
            Ok(r)
        }
        GeomCommand::Normalize { seed, budget, arrangement } => {
            let arr = read_arr(arrangement)?;
            let n = normalize_general_position(&arr, *seed, *budget)?;
            write_out(out, &pretty(&n.arrangement.to_json()))?;
            let mut r = Report::new(name, "normalized", 0);
            let map: Vec<Vec<Value>> = n.map.h.iter().map(|row| row.iter().map(rational).collect()).collect();
            r.set("seed", json!(seed))
                .set("map", json!(map))
                .set("candidates", json!(n.candidates))
                .set("accepted", json!(n.accepted))
                .set("spread", rational(&n.spread))
                .set("incidences", json!(n.arrangement.incidence_count()))
                .set("arrangement", n.arrangement.to_json());
            Ok(r)
        }
        GeomCommand::ToMatrix { base, cap, arrangement } => {
            let arr = read_arr(arrangement)?;
            let t: Rational = parse_rational(base)?;
            let c = exp_matrix_tp(&arr, &t, *cap)?;
            write_out(out, &pretty(&c.matrix.to_json()))?;
            let ones = multiplicity(&c.matrix, &Rational::from_integer(1.into()));
            let mut r = Report::new(name, "constructed", 0);
            // Entries are t^(hadamard * e); the exponents are reported instead
            // of the (possibly enormous) entries themselves.
            r.set("base", rational(&t))
                .set("scale", rational(&c.scale))
                .set("hadamard", json!(c.hadamard))
                .set("exponents", c.exponents.to_json())
                .set("point_order", json!(c.point_order.iter().map(|i| i + 1).collect::<Vec<_>>()))
                .set("line_order", json!(c.line_order.iter().map(|i| i + 1).collect::<Vec<_>>()))
                .set("multiplicity_of_one", json!(ones))
                .set("incidences", json!(incidence_matrix(&arr)?.weight()))
                .set("is_tp", json!(is_tp(&c.matrix)));
            Ok(r)
        }
        GeomCommand::Stats { arrangement } => {
            let arr = read_arr(arrangement)?;
            let (below, above, incident) = above_below_counts(&arr)?;
            let mut r = Report::new(name, "computed", 0);
            r.set("below", json!(below)).set("above", json!(above)).set("incident", json!(incident));
            Ok(r)
        }
    }
}

/// Parses `args`, runs the command and returns the exit code. The report is
/// printed to standard output.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let err = Error::input(e.to_string());
            emit(&Report::error("usage", &err).into_value(0.0));
            return 2;
        }
    };
    let (code, report) = run(&cli);
    emit(&report);
    code
}

fn emit(report: &Value) {
    use std::io::Write;
    // A closed pipe downstream is not an error of the command itself.
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{}", pretty(report).trim_end());
}
