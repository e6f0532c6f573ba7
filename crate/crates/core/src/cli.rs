//! Command-line front end. Exit status 0 on success, 1 for input errors and
//! 2 for computation errors (including corpus or oracle mismatches).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::apolarity::{graded_basis, reduce_essential};
use crate::constructions::{concat, coproduct, perazzo_example, rank_drop_family, BigradedForm};
use crate::corpus::run_corpus;
use crate::error::{Error, Result};
use crate::hessian::{generic_rank, mixed_hessian, GenericRankConfig, RankTable, DEFAULT_SEED};
use crate::jordan::{jordan_type_at, Partition};
use crate::lefschetz::LefschetzReport;
use crate::oracle::{cross_check, oracle_jordan_type};
use crate::pipeline::{analyze, analyze_at, Analysis};
use crate::poly::{parse_poly, LinearForm, Poly};

#[derive(Parser, Debug)]
#[command(
    name = "gorenstein",
    version,
    about = "Jordan types and Lefschetz properties of Q/Ann_f"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct RankArgs {
    /// Seed for the random linear forms.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random points per rank computation.
    #[arg(long, default_value_t = 3)]
    trials: usize,
    /// Coordinates are drawn from [-bound, bound].
    #[arg(long, default_value_t = 10_000)]
    bound: u64,
    /// Ranks over the fraction field instead of at random points.
    #[arg(long)]
    exact: bool,
}

impl RankArgs {
    fn config(&self) -> Result<GenericRankConfig> {
        let cfg = GenericRankConfig {
            trials: self.trials,
            coeff_bound: self.bound,
            seed: self.seed,
            exact: self.exact,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args, Debug, Clone)]
struct PolyArgs {
    /// Homogeneous form, e.g. "x*u^2+y*u*v+z*v^2".
    #[arg(short = 'f', long = "poly")]
    poly: String,
    /// Variable order, comma separated (default: order of appearance).
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    #[command(flatten)]
    rank: RankArgs,
    /// Replace f by an equivalent form in dim A_1 variables first.
    #[arg(long)]
    reduce: bool,
    /// Use this linear form (e.g. "X+2*Y") instead of a generic one.
    #[arg(long)]
    at: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    PerazzoExample,
    Coproduct,
    Concat,
    RankDrop,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert vector of A.
    Hilbert(PolyArgs),
    /// One mixed Hessian (with -k and -t) or the whole rank table.
    Hessian {
        #[command(flatten)]
        p: PolyArgs,
        #[arg(short = 'k')]
        k: Option<usize>,
        #[arg(short = 't')]
        t: Option<usize>,
    },
    /// Jordan type of a generic (or the given) linear form.
    Jordan(PolyArgs),
    /// Weak and strong Lefschetz verdicts.
    Lefschetz(PolyArgs),
    /// String diagram.
    Diagram(PolyArgs),
    /// Compare the Hessian formula with the brute-force oracle.
    Verify(PolyArgs),
    /// Run the built-in examples.
    Corpus {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long)]
        json: bool,
    },
    /// Build a form from the constructions.
    Construct {
        kind: ConstructKind,
        #[arg(short = 'd')]
        degree: Option<u32>,
        #[arg(long)]
        delta: Option<usize>,
        /// Operand forms, repeatable.
        #[arg(short = 'f', long = "poly")]
        polys: Vec<String>,
        /// x-variables of the operands of concat, comma separated.
        #[arg(long, value_delimiter = ',')]
        x_vars: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, err) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                1
            } else {
                2
            }
        }
    }
}

fn load(p: &PolyArgs, err: &mut dyn Write) -> Result<Poly> {
    let f = parse_poly(&p.poly, p.vars.as_deref())?;
    if !p.reduce {
        return Ok(f);
    }
    let g = reduce_essential(&f)?;
    if g.names() != f.names() {
        if p.at.is_some() {
            return Err(Error::InvalidArgument(
                "--at refers to the original variables; drop --reduce or pass an essential form"
                    .into(),
            ));
        }
        let _ = writeln!(err, "reduced to {} variables: {}", g.num_vars(), g);
    }
    Ok(g)
}

fn linear_form(p: &PolyArgs, f: &Poly) -> Result<Option<LinearForm>> {
    p.at.as_deref()
        .map(|text| LinearForm::parse(text, f.names()))
        .transpose()
}

fn analysis(p: &PolyArgs, err: &mut dyn Write) -> Result<Analysis> {
    let f = load(p, err)?;
    match linear_form(p, &f)? {
        Some(l) => analyze_at(&f, &l),
        None => analyze(&f, &p.rank.config()?),
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn render_table(rt: &RankTable) -> String {
    let d = rt.socle_degree();
    let mut s = String::from("r(i,j)");
    for j in 1..=d {
        let _ = write!(s, "\tj={j}");
    }
    s.push('\n');
    for i in 0..d {
        let _ = write!(s, "i={i}");
        for j in 1..=d - i {
            let _ = write!(s, "\t{}", rt.r(i as isize, j as isize));
        }
        s.push('\n');
    }
    s
}

fn render_lefschetz(l: &LefschetzReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "WLP: {}", l.wlp);
    let _ = writeln!(s, "SLP: {}", l.slp);
    let _ = writeln!(s, "Sperner number: {}", l.sperner);
    let _ = writeln!(s, "Jordan type: {}", l.jordan);
    let _ = writeln!(s, "Hilbert dual: {}", l.hilbert_dual);
    if let Some(gap) = l.cubic_gap {
        let _ = writeln!(s, "Delta: {gap}");
    }
    for m in &l.failing_maps {
        let _ = writeln!(
            s,
            "deficient: l^{} : A_{} -> A_{} has rank {}, needs {}",
            m.j,
            m.i,
            m.i + m.j,
            m.rank,
            m.required
        );
    }
    s
}

fn execute(cmd: &Command, err: &mut dyn Write) -> Result<(String, i32)> {
    let ok = |s: String| Ok((s, 0));
    match cmd {
        Command::Hilbert(p) => {
            let b = graded_basis(&load(p, err)?)?;
            if p.json {
                ok(to_json(&json!({ "hilbert": b.hilbert() })))
            } else {
                ok(format!("{}\n", join(b.hilbert(), " ")))
            }
        }
        Command::Hessian { p, k, t } => match (k, t) {
            (Some(k), Some(t)) => {
                let f = load(p, err)?;
                let b = graded_basis(&f)?;
                let h = mixed_hessian(&b, *k, *t)?;
                let rank = match linear_form(p, &f)? {
                    Some(l) => h.rank_at(l.point())?,
                    None => generic_rank(&h, &p.rank.config()?)?,
                };
                let rows: Vec<Vec<String>> = h
                    .entries()
                    .iter_rows()
                    .map(|r| r.iter().map(ToString::to_string).collect())
                    .collect();
                if p.json {
                    return ok(to_json(&json!({
                        "k": k, "t": t, "rank": rank,
                        "rows": h.entries().rows(), "cols": h.entries().cols(),
                        "entries": rows,
                    })));
                }
                let mut s = format!(
                    "Hess^({k},{t}): {}x{}, rank {rank}\n",
                    h.entries().rows(),
                    h.entries().cols()
                );
                for r in rows {
                    let _ = writeln!(s, "[{}]", r.join(", "));
                }
                ok(s)
            }
            (None, None) => {
                let a = analysis(p, err)?;
                if p.json {
                    ok(to_json(&a.rank_table))
                } else {
                    ok(render_table(&a.rank_table))
                }
            }
            _ => Err(Error::InvalidArgument(
                "give both -k and -t, or neither".into(),
            )),
        },
        Command::Jordan(p) => {
            let a = analysis(p, err)?;
            if p.json {
                ok(to_json(&json!({
                    "hilbert": a.jordan.hilbert,
                    "ranks": a.rank_table.cells().map(|(i, j, r)| [i, j, r]).collect::<Vec<_>>(),
                    "string_counts": a.jordan.string_counts(),
                    "jordan": a.jordan.jordan,
                    "hilbert_dual": a.jordan.hilbert_dual,
                })))
            } else {
                ok(format!("{}\n", a.jordan.jordan))
            }
        }
        Command::Lefschetz(p) => {
            let a = analysis(p, err)?;
            if p.json {
                ok(to_json(&a.lefschetz))
            } else {
                ok(render_lefschetz(&a.lefschetz))
            }
        }
        Command::Diagram(p) => {
            let a = analysis(p, err)?;
            if p.json {
                ok(to_json(&a.diagram))
            } else {
                ok(crate::diagram::render_ascii(&a.diagram))
            }
        }
        Command::Verify(p) => {
            let f = load(p, err)?;
            let b = graded_basis(&f)?;
            let (points, consensus): (usize, Partition) = match linear_form(p, &f)? {
                Some(l) => {
                    let formula = jordan_type_at(&b, &l)?.jordan;
                    let oracle = oracle_jordan_type(&b, &l)?;
                    if formula != oracle {
                        return Err(Error::Mismatch {
                            point: p.at.clone().unwrap_or_default(),
                            oracle: oracle.to_string(),
                            formula: formula.to_string(),
                        });
                    }
                    (1, formula)
                }
                None => {
                    let report = cross_check(&b, &p.rank.config()?)?;
                    if p.json {
                        return ok(to_json(&report));
                    }
                    (report.points.len(), report.consensus)
                }
            };
            if p.json {
                return ok(to_json(
                    &json!({ "points": points, "consensus": consensus }),
                ));
            }
            ok(format!("agree at {points} point(s): {consensus}\n"))
        }
        Command::Corpus { rank, json } => {
            let results = run_corpus(&rank.config()?)?;
            let code = if results.iter().all(|r| r.passed()) {
                0
            } else {
                2
            };
            if *json {
                return Ok((to_json(&results), code));
            }
            let mut s = String::from("name\thilbert\trk Hess\tjordan\tWLP\tSLP\tstatus\n");
            for r in &results {
                let status = if !r.passed() {
                    format!("MISMATCH: {}", r.mismatches.join("; "))
                } else if r.oracle_adjudicated {
                    "ok (oracle-adjudicated)".to_string()
                } else {
                    "ok".to_string()
                };
                let _ = writeln!(
                    s,
                    "{}\t({})\t{}\t{}\t{}\t{}\t{}",
                    r.name,
                    join(&r.hilbert, ","),
                    r.hessian_rank.map_or("-".into(), |v| v.to_string()),
                    r.jordan,
                    r.wlp,
                    r.slp,
                    status
                );
            }
            Ok((s, code))
        }
        Command::Construct {
            kind,
            degree,
            delta,
            polys,
            x_vars,
            vars,
            json,
        } => {
            let need_degree =
                || degree.ok_or_else(|| Error::InvalidArgument("-d is required".into()));
            let operands = || -> Result<Vec<Poly>> {
                if polys.len() < 2 {
                    return Err(Error::InvalidArgument(
                        "give at least two -f operands".into(),
                    ));
                }
                polys
                    .iter()
                    .map(|t| parse_poly(t, vars.as_deref()))
                    .collect()
            };
            let f = match kind {
                ConstructKind::PerazzoExample => perazzo_example(need_degree()?)?.to_poly(),
                ConstructKind::RankDrop => rank_drop_family(need_degree()?, delta.unwrap_or(1))?,
                ConstructKind::Coproduct => {
                    let ops = operands()?;
                    let mut acc = ops[0].clone();
                    for g in &ops[1..] {
                        acc = coproduct(&acc, g)?;
                    }
                    acc
                }
                ConstructKind::Concat => {
                    let split = |g: &Poly| {
                        let xs: Option<Vec<String>> = x_vars.as_ref().map(|list| {
                            list.iter()
                                .filter(|x| g.names().contains(x))
                                .cloned()
                                .collect()
                        });
                        BigradedForm::from_poly(g, xs.as_deref())
                    };
                    let ops = operands()?;
                    let mut acc = split(&ops[0])?;
                    for g in &ops[1..] {
                        acc = concat(&acc, &split(g)?)?;
                    }
                    acc.to_poly()
                }
            };
            if *json {
                ok(to_json(
                    &json!({ "poly": f.to_string(), "vars": &f.names()[..] }),
                ))
            } else {
                ok(format!("{f}\n"))
            }
        }
    }
}
