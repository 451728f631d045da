//! Command-line front end for the `sumprod-core` experiments.
//!
//! [`parse`] turns an argument list into a [`Cli`], [`execute`] runs it and
//! writes human-readable or JSON output, and [`exit_code`] maps failures to
//! the process status: 1 for invalid input or failed checks, 2 when a
//! randomized search ran out of attempts.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use sumprod_core::arith::{format_rational, parse_integer, parse_rational};
use sumprod_core::constructions::{
    interval_matching_experiment, real_matching_family, sparse_from_dense, triangle_family,
};
use sumprod_core::elliptic::{
    curve_from_values, genus_of_system, matching_from_family, naive_height, translate_family_from_curve,
    CurvePoint, CurveRecord, SquareTriple, DEFAULT_SCAN_DENOMINATOR,
};
use sumprod_core::expander::{cayley_sum_experiment, char_sum_max, CayleyReport};
use sumprod_core::fixtures::{parse_pairs_csv, TABLE9_CSV};
use sumprod_core::graphs::{
    ceil_sqrt, dense_graph_conditional_bounds, fk_sp_lower, kst_max_edges, min_sumset_from_diameter,
    odd_cycle_bound, sp_oracle_matching, sp_profile, sqrt_edge_bound, sum_set,
};
use sumprod_core::translates::{
    brute_force_translates, euler_chain, pair_translates, FamilyRecord, TranslateFamily,
};
use sumprod_core::{Error, Graph, Integer, Labeling, Rational};

#[derive(Debug, Parser)]
#[command(name = "sumprod", version, about = "Sums and products along graphs: constructions, bounds and checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sum set, product set and sp of a labelled graph.
    Eval {
        /// Edge list, one `u v` pair per line.
        #[arg(long)]
        graph: PathBuf,
        /// Labels, one `v value` pair per line.
        #[arg(long)]
        labels: PathBuf,
    },
    /// Check the nine-pair family with three sums and three products and
    /// replay it from the curve S² = T³ − 63T + 162.
    Table9 {
        /// Read pairs from this CSV (header `x,y`) instead of the shipped fixture.
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Write the rows as CSV with columns x,y,sum,product.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Euler's chain of square translates of {0, 2, 6}.
    Euler {
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// The curve attached to three values and its small rational points.
    Curve {
        /// Comma-separated values a1,a2,a3 (integers or p/q).
        #[arg(long)]
        triple: String,
        /// Scan integer numerators |m| ≤ bound.
        #[arg(long, default_value_t = 20)]
        bound: u64,
        /// Scan T = m/e² for e up to this value.
        #[arg(long, default_value_t = DEFAULT_SCAN_DENOMINATOR)]
        denominator: u64,
        /// Write the curve record (alpha, beta, points) as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Translates of a set into the squares.
    Translates {
        #[command(subcommand)]
        command: TranslatesCommand,
    },
    /// Explicit constructions with few sums or products.
    Construct {
        #[command(subcommand)]
        command: ConstructCommand,
    },
    /// Lower-bound calculators.
    Bounds {
        #[command(subcommand)]
        command: BoundsCommand,
    },
    /// Cayley sum graph over Z_n with a certified random connection set.
    Expander {
        #[arg(long)]
        n: usize,
        /// Size of the connection set; defaults to ⌈8 ln n⌉.
        #[arg(long)]
        d: Option<usize>,
        /// Defaults to 0, reported in the output.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 200)]
        attempts: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive sp search for a matching with at most 3 edges.
    Oracle {
        #[arg(long)]
        n: usize,
        /// Labels range over [-bound, bound].
        #[arg(long, default_value_t = 12)]
        bound: i64,
    },
    /// Re-check an artifact written by another subcommand.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum TranslatesCommand {
    /// All integer x with a + x and b + x both squares (divisor method).
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Integer translates of a set found by scanning squares up to a bound.
    Scan {
        /// Comma-separated integers.
        #[arg(long, allow_hyphen_values = true)]
        base: String,
        #[arg(long)]
        bound: u64,
    },
    /// Translates of three squares from multiples of a curve point.
    Curve {
        /// Comma-separated squares a1,a2,a3 (integers or p/q).
        #[arg(long)]
        triple: String,
        /// Generator as `T,S`.
        #[arg(long, allow_hyphen_values = true)]
        generator: String,
        #[arg(long, default_value_t = 3)]
        count: usize,
        /// Write the integral family record as JSON.
        #[arg(long)]
        family_out: Option<PathBuf>,
        /// Also build a matching with this many sums (needs --products).
        #[arg(long, requires = "products")]
        sums: Option<usize>,
        #[arg(long, requires = "sums")]
        products: Option<usize>,
        /// Write the matching pairs as CSV with columns x,y,sum,product.
        #[arg(long, requires = "sums")]
        pairs_csv: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConstructCommand {
    /// C(m,3) disjoint triangles with exactly m edge sums.
    Triangles {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        graph_out: Option<PathBuf>,
        #[arg(long)]
        labels_out: Option<PathBuf>,
    },
    /// Matching from the interval construction on {1..N}.
    Interval {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random restriction of a dense labelled graph to a matching.
    Reduce {
        #[arg(long, requires = "labels", conflicts_with = "complete")]
        graph: Option<PathBuf>,
        #[arg(long, requires = "graph")]
        labels: Option<PathBuf>,
        /// Use K_N labelled 1..N.
        #[arg(long)]
        complete: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 20)]
        retries: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        pairs_csv: Option<PathBuf>,
    },
    /// Matching labelled by quadratic irrationals with ⌈√n⌉ sums and products.
    RealMatching {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// Maximum edges of a K_{k,r}-free subgraph of K_{m,m}.
    Kst {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: u64,
    },
    /// Lower bound on sp of a matching from translate counts.
    Fk {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: u64,
    },
    /// Bounds for graphs with n vertices and sum-product k.
    Dense {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Least sum-set size allowed for n vertices and diameter r.
    Diameter {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// Genus of the system Y_i² = X + a_i, i = 1..k.
    Genus {
        #[arg(long)]
        k: u32,
    },
    /// Sum-set lower bound from the number of odd k-cycles.
    OddCycle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Naive height max(ln|p|, ln|q|) of T = p/q.
    Height {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// A family record written by `translates curve --family-out`.
    Family { path: PathBuf },
    /// A curve record written by `curve --out`.
    Curve { path: PathBuf },
    /// A pairs CSV (header x,y with optional sum,product columns).
    Pairs { path: PathBuf },
    /// An expander report written by `expander --out`.
    Expander { path: PathBuf },
}

/// A failed run: an error from the library or from reading/writing files.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Io { path: PathBuf, source: std::io::Error },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl std::error::Error for Failure {}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

pub type Outcome = std::result::Result<(), Failure>;

/// 2 for exhausted randomized searches, 1 for everything else.
pub fn exit_code(f: &Failure) -> i32 {
    match f {
        Failure::Core(e) if e.is_stochastic() => 2,
        _ => 1,
    }
}

/// Parses arguments that follow the program name.
pub fn parse<I, T>(args: I) -> std::result::Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("sumprod")).chain(args.into_iter().map(Into::into));
    Cli::try_parse_from(argv)
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|source| Failure::Io {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|source| Failure::Io {
        path: path.to_owned(),
        source,
    })
}

fn io(out: std::io::Result<()>) -> Outcome {
    out.map_err(|source| Failure::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Writes JSON to `path` when given, otherwise to `out`.
fn emit(out: &mut dyn Write, path: Option<&Path>, v: &impl serde::Serialize) -> Outcome {
    let text = pretty(v);
    match path {
        Some(p) => {
            write_file(p, &text)?;
            io(writeln!(out, "wrote {}", p.display()))
        }
        None => io(out.write_all(text.as_bytes())),
    }
}

fn rationals(list: &str) -> std::result::Result<Vec<Rational>, Error> {
    list.split(',').map(|x| parse_rational(x.trim())).collect()
}

fn integers(list: &str) -> std::result::Result<Vec<Integer>, Error> {
    list.split(',').map(|x| parse_integer(x.trim())).collect()
}

fn triple(list: &str) -> std::result::Result<[Rational; 3], Error> {
    let v = rationals(list)?;
    v.try_into()
        .map_err(|v: Vec<Rational>| Error::Validation(format!("expected three values, got {}", v.len())))
}

fn strings(xs: impl IntoIterator<Item = impl std::borrow::Borrow<Rational>>) -> Vec<String> {
    xs.into_iter().map(|x| format_rational(x.borrow())).collect()
}

fn seed_or_default(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        eprintln!("no --seed given, using 0");
        0
    })
}

fn write_pairs_csv(path: &Path, pairs: &[(Integer, Integer)]) -> Outcome {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Failure::Core(Error::Internal(e.to_string()));
    w.write_record(["x", "y", "sum", "product"]).map_err(csv_err)?;
    for (x, y) in pairs {
        let row = [x.to_string(), y.to_string(), (x + y).to_string(), (x * y).to_string()];
        w.write_record(&row).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Core(Error::Internal(e.to_string())))?;
    write_file(path, &String::from_utf8(bytes).expect("ascii"))
}

fn int_pairs(l: &Labeling) -> Vec<(Integer, Integer)> {
    l.values()
        .chunks(2)
        .map(|c| (c[0].to_integer(), c[1].to_integer()))
        .collect()
}

fn to_rational_pairs(pairs: &[(Integer, Integer)]) -> Vec<(Rational, Rational)> {
    pairs
        .iter()
        .map(|(x, y)| (Rational::from_integer(x.clone()), Rational::from_integer(y.clone())))
        .collect()
}

/// Runs a parsed command, writing its report to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Eval { graph, labels } => {
            let l = Labeling::parse(&read(labels)?)?;
            let g = Graph::parse_edge_list(&read(graph)?, l.len())?;
            let profile = sp_profile(&g, &l)?;
            let report = json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "sqrt_edge_bound": sqrt_edge_bound(&g),
                "profile": profile.summary(),
            });
            emit(out, None, &report)
        }
        Command::Table9 { fixture, csv } => table9(fixture.as_deref(), csv.as_deref(), out),
        Command::Euler { depth } => {
            for (i, x) in euler_chain(*depth)?.iter().enumerate() {
                io(writeln!(out, "{i} {}", format_rational(x)))?;
            }
            Ok(())
        }
        Command::Curve {
            triple: t,
            bound,
            denominator,
            out: path,
        } => {
            let curve = curve_from_values(&triple(t)?)?;
            let points = curve.scan_rational_points(*bound, *denominator)?;
            let mut listed = Vec::new();
            for p in &points {
                let torsion = curve.is_torsion(p)?;
                listed.push(json!({
                    "T": format_rational(p.x().expect("affine")),
                    "S": match p { CurvePoint::Affine { y, .. } => format_rational(y), _ => unreachable!() },
                    "torsion": torsion,
                    "height": naive_height(p)?,
                }));
            }
            if let Some(path) = path {
                emit(out, Some(path), &curve.to_record(&points))?;
            }
            let report = json!({
                "alpha": format_rational(curve.alpha()),
                "beta": format_rational(curve.beta()),
                "discriminant": format_rational(&curve.discriminant()),
                "points": listed,
            });
            emit(out, None, &report)
        }
        Command::Translates { command } => translates(command, out),
        Command::Construct { command } => construct(command, out),
        Command::Bounds { command } => bounds(command, out),
        Command::Expander {
            n,
            d,
            seed,
            attempts,
            out: path,
        } => {
            let d = d.unwrap_or_else(|| (8.0 * (*n as f64).ln()).ceil() as usize);
            let seed = seed_or_default(*seed);
            let report = cayley_sum_experiment(*n, d, seed, *attempts)?;
            let mut v = serde_json::to_value(&report).expect("serializable");
            v["seed"] = json!(seed);
            emit(out, path.as_deref(), &v)
        }
        Command::Oracle { n, bound } => emit(out, None, &sp_oracle_matching(*n, *bound)?),
        Command::Verify { command } => verify(command, out),
    }
}

fn table9(fixture: Option<&Path>, csv_out: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let text = match fixture {
        Some(p) => read(p)?,
        None => TABLE9_CSV.to_string(),
    };
    let pairs = parse_pairs_csv(&text)?;
    let (g, l) = Labeling::matching_from_pairs(&to_rational_pairs(&pairs))?;
    let profile = sp_profile(&g, &l)?;
    io(writeln!(out, "{:>12} {:>12} {:>12} {:>18}", "x", "y", "sum", "product"))?;
    for (x, y) in &pairs {
        io(writeln!(out, "{x:>12} {y:>12} {:>12} {:>18}", x + y, x * y))?;
    }
    let labels = l.len();
    let target = ceil_sqrt(pairs.len() as u64) as usize;
    io(writeln!(
        out,
        "distinct labels: {labels}, sums: {}, products: {}, sp: {} (lower bound {target})",
        profile.sum_count(),
        profile.product_count(),
        profile.sp()
    ))?;

    let t = SquareTriple::new(triple("4/9,16/9,1/9")?)?;
    let family = translate_family_from_curve(&t, &CurvePoint::from_ints(1, 10), 3)?;
    let m = matching_from_family(&family.cleared, 3, 3)?;
    let mut replayed = m.pairs();
    replayed.sort();
    let mut given = pairs.clone();
    given.sort();
    let matches_curve = replayed == given;
    io(writeln!(
        out,
        "replayed from (1,10) on S^2 = T^3 - 63T + 162: {}",
        if matches_curve { "identical" } else { "different" }
    ))?;
    if let Some(p) = csv_out {
        write_pairs_csv(p, &pairs)?;
    }
    if fixture.is_none() && !matches_curve {
        return Err(Error::Internal("shipped fixture differs from the curve replay".into()).into());
    }
    if profile.sp() != target {
        return Err(Error::Validation(format!("sp is {}, expected {target}", profile.sp())).into());
    }
    Ok(())
}

fn translates(command: &TranslatesCommand, out: &mut dyn Write) -> Outcome {
    match command {
        TranslatesCommand::Pair { a, b } => {
            let xs = pair_translates(&parse_integer(a)?, &parse_integer(b)?)?;
            emit(out, None, &xs.iter().map(ToString::to_string).collect::<Vec<_>>())
        }
        TranslatesCommand::Scan { base, bound } => {
            let xs = brute_force_translates(&integers(base)?, *bound)?;
            emit(out, None, &xs.iter().map(ToString::to_string).collect::<Vec<_>>())
        }
        TranslatesCommand::Curve {
            triple: t,
            generator,
            count,
            family_out,
            sums,
            products,
            pairs_csv,
        } => {
            let t = SquareTriple::new(triple(t)?)?;
            let [x, y]: [Rational; 2] = rationals(generator)?
                .try_into()
                .map_err(|_| Error::Validation("generator must be `T,S`".into()))?;
            let family = translate_family_from_curve(&t, &CurvePoint::affine(x, y), *count)?;
            if let Some(p) = family_out {
                write_file(p, &pretty(&family.cleared.to_record()))?;
            }
            let mut report = json!({
                "translates": strings(family.raw.translates()),
                "scale": family.cleared.scale().to_string(),
                "cleared_base": strings(family.cleared.base()),
                "cleared_translates": strings(family.cleared.translates()),
                "multiples": family.multiples,
                "skipped": family.skipped.iter().map(|(k, why)| json!({"k": k, "reason": why})).collect::<Vec<_>>(),
                "complete": family.complete,
            });
            if let (Some(s), Some(p)) = (sums, products) {
                let m = matching_from_family(&family.cleared, *s, *p)?;
                report["matching"] = json!({
                    "edges": m.graph.edge_count(),
                    "summary": m,
                    "pairs": m.pairs().iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
                });
                if let Some(path) = pairs_csv {
                    write_pairs_csv(path, &m.pairs())?;
                }
            }
            emit(out, None, &report)
        }
    }
}

fn construct(command: &ConstructCommand, out: &mut dyn Write) -> Outcome {
    match command {
        ConstructCommand::Triangles {
            m,
            graph_out,
            labels_out,
        } => {
            let (g, l) = triangle_family(*m)?;
            if let Some(p) = graph_out {
                write_file(p, &g.to_edge_list())?;
            }
            if let Some(p) = labels_out {
                write_file(p, &l.to_text())?;
            }
            let profile = sp_profile(&g, &l)?;
            let report = json!({
                "triangles": g.edge_count() / 3,
                "vertices": g.vertex_count(),
                "sum_count": profile.sum_count(),
                "sums": strings(&profile.sum_set),
                "odd_cycle_bound": odd_cycle_bound(&g, 3)?,
            });
            emit(out, None, &report)
        }
        ConstructCommand::Interval { n, eps, out: path } => {
            emit(out, path.as_deref(), &interval_matching_experiment(*n, *eps)?)
        }
        ConstructCommand::Reduce {
            graph,
            labels,
            complete,
            seed,
            retries,
            out: path,
            pairs_csv,
        } => {
            let (g, l) = match (graph, labels, complete) {
                (Some(gp), Some(lp), None) => {
                    let l = Labeling::parse(&read(lp)?)?;
                    (Graph::parse_edge_list(&read(gp)?, l.len())?, l)
                }
                (None, None, Some(n)) => (Graph::complete(*n), Labeling::from_integers(1..=*n as u64)?),
                _ => return Err(Error::Validation("give --graph and --labels, or --complete".into()).into()),
            };
            let seed = seed_or_default(*seed);
            let r = sparse_from_dense(&g, &l, seed, *retries)?;
            if let Some(p) = pairs_csv {
                if !r.labeling.is_integral() {
                    return Err(Error::Validation("pairs CSV needs integer labels".into()).into());
                }
                write_pairs_csv(p, &int_pairs(&r.labeling))?;
            }
            let pairs: Vec<[String; 2]> = r
                .labeling
                .values()
                .chunks(2)
                .map(|c| [format_rational(&c[0]), format_rational(&c[1])])
                .collect();
            let report = json!({
                "seed": seed,
                "report": r.report,
                "stats": r.stats,
                "pairs": pairs,
            });
            emit(out, path.as_deref(), &report)
        }
        ConstructCommand::RealMatching { n, seed } => {
            let seed = seed_or_default(*seed);
            let r = real_matching_family(*n, seed)?;
            let labels: Vec<String> = r
                .labels
                .iter()
                .map(|x| {
                    let sign = if x.sign() > 0 { '+' } else { '-' };
                    format!("({} {sign} sqrt({}))/2", format_rational(x.s()), format_rational(&x.discriminant()))
                })
                .collect();
            let report = json!({
                "seed": seed,
                "summary": r.summary(),
                "sums": strings(&r.sums),
                "products": strings(&r.products),
                "labels": labels,
            });
            emit(out, None, &report)
        }
    }
}

fn bounds(command: &BoundsCommand, out: &mut dyn Write) -> Outcome {
    let value = match command {
        BoundsCommand::Kst { m, k, r } => json!({ "max_edges": kst_max_edges(*m, *k, *r)?.to_string() }),
        BoundsCommand::Fk { n, k, r } => json!({ "sp_lower": fk_sp_lower(*n, *k, *r)?.to_string() }),
        BoundsCommand::Dense { n, k } => serde_json::to_value(dense_graph_conditional_bounds(*n, *k)?).expect("serializable"),
        BoundsCommand::Diameter { n, r } => json!({ "min_sumset": min_sumset_from_diameter(*n, *r)? }),
        BoundsCommand::Genus { k } => json!({ "genus": genus_of_system(*k)?.to_string() }),
        BoundsCommand::OddCycle { graph, k } => {
            let g = Graph::parse_edge_list(&read(graph)?, 0)?;
            json!({ "odd_cycle_bound": odd_cycle_bound(&g, *k)? })
        }
        BoundsCommand::Height { t } => {
            let p = CurvePoint::affine(parse_rational(t)?, Rational::from_integer(0.into()));
            json!({ "height": naive_height(&p)? })
        }
    };
    emit(out, None, &value)
}

fn verify(command: &VerifyCommand, out: &mut dyn Write) -> Outcome {
    let parse_json = |path: &Path| -> std::result::Result<Value, Failure> {
        serde_json::from_str(&read(path)?)
            .map_err(|e| Failure::Core(Error::Parse(format!("{}: {e}", path.display()))))
    };
    match command {
        VerifyCommand::Family { path } => {
            let record: FamilyRecord = serde_json::from_value(parse_json(path)?)
                .map_err(|e| Error::Parse(e.to_string()))?;
            let family = TranslateFamily::from_record(&record)?;
            io(writeln!(
                out,
                "ok: {} translates of a {}-element base",
                family.translates().len(),
                family.base().len()
            ))
        }
        VerifyCommand::Curve { path } => {
            let record: CurveRecord = serde_json::from_value(parse_json(path)?)
                .map_err(|e| Error::Parse(e.to_string()))?;
            let (_, points) = record.load()?;
            io(writeln!(out, "ok: {} points on the curve", points.len()))
        }
        VerifyCommand::Pairs { path } => {
            let mut reader = csv::Reader::from_path(path).map_err(|e| Error::Parse(e.to_string()))?;
            let headers = reader.headers().map_err(|e| Error::Parse(e.to_string()))?.clone();
            let col = |name: &str| headers.iter().position(|h| h == name);
            let (Some(xi), Some(yi)) = (col("x"), col("y")) else {
                return Err(Error::Parse("pairs CSV needs x and y columns".into()).into());
            };
            let (si, pi) = (col("sum"), col("product"));
            let mut pairs = Vec::new();
            for (row, record) in reader.records().enumerate() {
                let record = record.map_err(|e| Error::Parse(e.to_string()))?;
                let field = |i: usize| parse_integer(record.get(i).unwrap_or(""));
                let (x, y) = (field(xi)?, field(yi)?);
                if let Some(i) = si {
                    if field(i)? != &x + &y {
                        return Err(Error::Validation(format!("row {}: sum column disagrees", row + 1)).into());
                    }
                }
                if let Some(i) = pi {
                    if field(i)? != &x * &y {
                        return Err(Error::Validation(format!("row {}: product column disagrees", row + 1)).into());
                    }
                }
                pairs.push((x, y));
            }
            let (g, l) = Labeling::matching_from_pairs(&to_rational_pairs(&pairs))?;
            let profile = sp_profile(&g, &l)?;
            io(writeln!(
                out,
                "ok: {} pairs, {} distinct labels, {} sums, {} products",
                pairs.len(),
                l.len(),
                profile.sum_count(),
                profile.product_count()
            ))
        }
        VerifyCommand::Expander { path } => {
            let report: CayleyReport =
                serde_json::from_value(parse_json(path)?).map_err(|e| Error::Parse(e.to_string()))?;
            let t = report.t.iter().copied().collect();
            let cert = char_sum_max(report.n, &t)?;
            if cert.value + cert.radius > report.threshold {
                return Err(Error::Validation(format!(
                    "character sum {} exceeds threshold {}",
                    cert.value, report.threshold
                ))
                .into());
            }
            let cayley = sumprod_core::expander::CayleySumGraph::new(report.n, report.t.iter().copied())?;
            let sums = sum_set(&cayley.graph(), &cayley.labeling())?.len();
            if sums != report.sum_set_size || sums > 2 * report.t.len() {
                return Err(Error::Validation(format!(
                    "sum set has {sums} elements, report says {}",
                    report.sum_set_size
                ))
                .into());
            }
            io(writeln!(
                out,
                "ok: certificate {:.6} ≤ {:.6}, sum set {sums} ≤ {}",
                cert.value,
                report.threshold,
                2 * report.t.len()
            ))
        }
    }
}
