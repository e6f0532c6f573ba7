//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gorenstein::constructions::{concat, coproduct, perazzo_example};
use gorenstein::corpus::CORPUS;
use gorenstein::hessian::{generic_rank, mixed_hessian, GenericRankConfig};
use gorenstein::jordan::{closed_form, ej_closed_form, Partition};
use gorenstein::lefschetz::sperner;
use gorenstein::oracle::cross_check;
use gorenstein::pipeline::{analyze, Analysis};
use gorenstein::{graded_basis, parse_poly, Poly};

const TIME_LIMIT: Duration = Duration::from_secs(10);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&mut Audit) -> Outcome);

/// Invariant checks gathered from every analysis the suite runs.
#[derive(Default)]
struct Audit {
    checked: usize,
    violations: Vec<String>,
}

impl Audit {
    fn record(&mut self, label: &str, a: &Analysis) {
        self.checked += 1;
        if let Err(e) = invariants(a) {
            self.violations.push(format!("{label}: {e}"));
        }
    }
}

fn invariants(a: &Analysis) -> Result<(), String> {
    let rt = &a.rank_table;
    let h = rt.hilbert();
    let d = rt.socle_degree();
    let eij = &a.jordan.eij;
    let dim: usize = h.iter().sum();
    let tiled: usize = (1..=d + 1).map(|j| j * eij.e_j(j)).sum();
    if tiled != dim {
        return Err(format!("sum j*e_j = {tiled}, dim A = {dim}"));
    }
    for i in 0..=d {
        for j in 1..=d + 1 - i {
            if eij.e(i, j) != eij.e(d + 1 - i - j, j) {
                return Err(format!("e({i},{j}) != e({},{j})", d + 1 - i - j));
            }
        }
    }
    for i in 0..=d {
        for j in 0..=d - i {
            let (ii, jj) = (i as isize, j as isize);
            if rt.r(ii, jj) != rt.r((d - i - j) as isize, jj) {
                return Err(format!("r({i},{j}) != r({},{j})", d - i - j));
            }
        }
    }
    for j in 1..=d + 1 {
        if eij.e_j(j) as i64 != ej_closed_form(rt, j) {
            return Err(format!(
                "e_{j}: summed {} vs closed form {}",
                eij.e_j(j),
                ej_closed_form(rt, j)
            ));
        }
    }
    let jt = &a.jordan.jordan;
    if a.lefschetz.wlp != (jt.num_parts() == sperner(h)) {
        return Err("WLP verdict disagrees with number of parts".into());
    }
    if a.lefschetz.slp != (*jt == Partition::from_hilbert(h).dual()) {
        return Err("SLP verdict disagrees with the Hilbert conjugate".into());
    }
    for (i, &hi) in h.iter().enumerate() {
        if a.diagram.cells_in_degree(i) != hi {
            return Err(format!(
                "diagram row {i} has {} cells, h_{i} = {hi}",
                a.diagram.cells_in_degree(i)
            ));
        }
    }
    a.check_invariants()
}

fn cfg() -> GenericRankConfig {
    GenericRankConfig::default()
}

fn poly(text: &str) -> Result<Poly, String> {
    parse_poly(text, None).map_err(|e| e.to_string())
}

fn run(audit: &mut Audit, label: &str, f: &Poly) -> Result<Analysis, String> {
    let a = analyze(f, &cfg()).map_err(|e| format!("{label}: {e}"))?;
    audit.record(label, &a);
    Ok(a)
}

fn hessian_rank(f: &Poly) -> Result<usize, String> {
    let b = graded_basis(f).map_err(|e| e.to_string())?;
    let h = mixed_hessian(&b, 1, 1).map_err(|e| e.to_string())?;
    generic_rank(&h, &cfg()).map_err(|e| e.to_string())
}

fn partition(text: &str) -> Partition {
    text.parse().expect("valid partition literal")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Hilbert vector, Hessian rank, Jordan type and Lefschetz verdicts.
struct Expected<'a> {
    poly: &'a str,
    hilbert: &'a [usize],
    hessian_rank: usize,
    jordan: &'a str,
    wlp: Option<bool>,
    slp: Option<bool>,
}

fn example(audit: &mut Audit, label: &str, want: Expected) -> Result<Analysis, String> {
    let a = run(audit, label, &poly(want.poly)?)?;
    ensure(a.jordan.hilbert == want.hilbert, || {
        format!("Hilbert {:?}", a.jordan.hilbert)
    })?;
    let rank = a.hessian_rank().unwrap_or(0);
    ensure(rank == want.hessian_rank, || format!("rk Hess = {rank}"))?;
    let jt = &a.jordan.jordan;
    ensure(*jt == partition(want.jordan), || {
        format!("Jordan type {jt}")
    })?;
    if let Some(w) = want.wlp {
        ensure(a.lefschetz.wlp == w, || format!("WLP {}", a.lefschetz.wlp))?;
    }
    if let Some(s) = want.slp {
        ensure(a.lefschetz.slp == s, || format!("SLP {}", a.lefschetz.slp))?;
    }
    Ok(a)
}

fn gap(a: &Analysis) -> Option<usize> {
    a.lefschetz.cubic_gap
}

fn c1(audit: &mut Audit) -> Outcome {
    let a = example(
        audit,
        "perazzo cubic",
        Expected {
            poly: "x*u^2+y*u*v+z*v^2",
            hilbert: &[1, 5, 5, 1],
            hessian_rank: 4,
            jordan: "4^1 + 2^3 + 1^2",
            wlp: Some(false),
            slp: Some(false),
        },
    )?;
    ensure(gap(&a) == Some(1), || format!("Delta = {:?}", gap(&a)))?;
    Ok(format!("Jordan type {}, Delta 1", a.jordan.jordan))
}

fn c2(audit: &mut Audit) -> Outcome {
    let a = example(
        audit,
        "8-variable cubic",
        Expected {
            poly: "x1*u^2+x2*u*v+x3*v^2+x4*v*w+x5*w^2",
            hilbert: &[1, 8, 8, 1],
            hessian_rank: 6,
            jordan: "4^1 + 2^5 + 1^4",
            wlp: None,
            slp: None,
        },
    )?;
    Ok(format!("Jordan type {}, rk Hess 6", a.jordan.jordan))
}

fn c3(audit: &mut Audit) -> Outcome {
    let a = example(
        audit,
        "9-variable cubic",
        Expected {
            poly: "x1*u1^2+x2*u1*u2+x3*u2^2+x4*u2*u3+x5*u3^2+x6*u3*u1",
            hilbert: &[1, 9, 9, 1],
            hessian_rank: 6,
            jordan: "4^1 + 2^5 + 1^6",
            wlp: None,
            slp: None,
        },
    )?;
    let corank = 9 - a.hessian_rank().unwrap_or(0);
    ensure(corank == 3, || format!("corank {corank}"))?;
    ensure(gap(&a) == Some(3), || format!("Delta = {:?}", gap(&a)))?;
    Ok(format!("Jordan type {}, corank 3", a.jordan.jordan))
}

fn c4(audit: &mut Audit) -> Outcome {
    let a = example(
        audit,
        "quartic",
        Expected {
            poly: "x1*u^2*v+x2*u*v^2+x3*u^3+x4*u*w^2+x5*u^2*w",
            hilbert: &[1, 8, 10, 8, 1],
            hessian_rank: 6,
            jordan: "5^1 + 3^5 + 2^4",
            wlp: Some(true),
            slp: None,
        },
    )?;
    Ok(format!("Jordan type {}, WLP true", a.jordan.jordan))
}

fn c5(audit: &mut Audit) -> Outcome {
    let f = poly("x*u*v^3+y*u^3*v")?;
    let b = graded_basis(&f).map_err(|e| e.to_string())?;
    let h = mixed_hessian(&b, 2, 2).map_err(|e| e.to_string())?;
    let det = h.determinant().ok_or("Hess^2 is not square")?;
    ensure(det.is_zero(), || format!("det Hess^2 = {det}"))?;
    let rank = generic_rank(&h, &cfg()).map_err(|e| e.to_string())?;
    ensure(rank <= 6, || format!("rk Hess^2 = {rank}"))?;
    let a = run(audit, "second Hessian example", &f)?;
    ensure(!a.lefschetz.wlp, || "WLP holds".into())?;
    Ok(format!(
        "{0}x{0} det Hess^2 = 0, rank {rank}, WLP false",
        h.row_basis().len()
    ))
}

fn c6(audit: &mut Audit) -> Outcome {
    let f = poly("x*u^3*v+y*u*v^3")?;
    let a = run(audit, "quintic", &f)?;
    ensure(a.jordan.hilbert == [1, 4, 7, 7, 4, 1], || {
        format!("Hilbert {:?}", a.jordan.hilbert)
    })?;
    let formula = a.jordan.jordan.clone();
    let closed = closed_form(&a.rank_table)
        .ok_or("no closed form for this socle degree")?
        .map_err(|e| e.to_string())?;
    let oracle = cross_check(&a.basis, &cfg())
        .map_err(|e| e.to_string())?
        .consensus;
    ensure(formula == closed && closed == oracle, || {
        format!("formula {formula}, closed form {closed}, oracle {oracle}")
    })?;
    let want = partition("6^1 + 4^3 + 2^2 + 1^2");
    ensure(formula == want, || {
        format!("consensus {formula}, expected {want}")
    })?;
    Ok(format!(
        "formula, closed form and oracle agree on {formula}"
    ))
}

fn c7(audit: &mut Audit) -> Outcome {
    let mut rng = common::rng(7_007);
    let mut points = 0;
    let mut shapes = [[0usize; 3]; 4];
    for k in 0..200 {
        let f = common::essential_form(&mut rng, 4, 3..=5);
        let b = graded_basis(&f).map_err(|e| e.to_string())?;
        let report = cross_check(&b, &cfg()).map_err(|e| format!("form {k} ({f}): {e}"))?;
        for p in &report.points {
            ensure(p.oracle == p.formula, || {
                format!("form {k} ({f}) at {:?}", p.point)
            })?;
        }
        points += report.points.len();
        let a = run(audit, &format!("random form {k}"), &f)?;
        ensure(a.jordan.jordan == report.consensus, || {
            format!(
                "form {k}: pipeline {} vs oracle {}",
                a.jordan.jordan, report.consensus
            )
        })?;
        shapes[f.num_vars() - 1][b.socle_degree() - 3] += 1;
    }
    Ok(format!(
        "200 forms, {points} points agree; forms per (n, d = 3..5): {shapes:?}"
    ))
}

fn c8(audit: &mut Audit) -> Outcome {
    let mut compared = 0;
    for entry in CORPUS {
        let a = run(audit, entry.name, &poly(entry.poly)?)?;
        let Some(closed) = closed_form(&a.rank_table) else {
            continue;
        };
        let closed = closed.map_err(|e| format!("{}: {e}", entry.name))?;
        ensure(closed == a.jordan.jordan, || {
            format!(
                "{}: closed form {closed}, Jordan type {}",
                entry.name, a.jordan.jordan
            )
        })?;
        compared += 1;
    }
    ensure(compared == CORPUS.len(), || {
        format!(
            "only {compared} of {} entries have a closed form",
            CORPUS.len()
        )
    })?;
    Ok(format!("{compared} corpus entries"))
}

fn c9(_: &mut Audit) -> Outcome {
    let mut rng = common::rng(9_009);
    let mut seen = Vec::new();
    for k in 0..20 {
        let d = [3, 4][k % 2];
        let m = 2 + (k / 2) % 2;
        let f = common::random_perazzo(&mut rng, ("x", "u"), d, m, false, true);
        let f2 = common::random_perazzo(&mut rng, ("y", "v"), d, 2, true, false);
        let (p, p2) = (f.to_poly(), f2.to_poly());
        let (r, r2) = (hessian_rank(&p)?, hessian_rank(&p2)?);
        let sum = coproduct(&p, &p2).map_err(|e| e.to_string())?;
        let glued = concat(&f, &f2).map_err(|e| e.to_string())?.to_poly();
        let (rs, rg) = (hessian_rank(&sum)?, hessian_rank(&glued)?);
        ensure(rs == r + r2 && rg + 2 == r + r2, || {
            format!("pair {k}: rk f = {r}, rk f' = {r2}, coproduct {rs}, concatenation {rg}")
        })?;
        seen.push((r, r2));
    }
    seen.sort_unstable();
    seen.dedup();
    Ok(format!("20 pairs, (rk f, rk f') in {seen:?}"))
}

fn c10(audit: &mut Audit) -> Outcome {
    for d in 3..=8u32 {
        let f = perazzo_example(d).map_err(|e| e.to_string())?.to_poly();
        let b = graded_basis(&f).map_err(|e| e.to_string())?;
        let h = mixed_hessian(&b, 1, 1).map_err(|e| e.to_string())?;
        let rank = generic_rank(&h, &cfg()).map_err(|e| e.to_string())?;
        ensure(rank == 4, || format!("d = {d}: rk Hess = {rank}"))?;
        if d <= 6 {
            let det = h.determinant().ok_or("Hessian is not square")?;
            ensure(det.is_zero(), || format!("d = {d}: det Hess = {det}"))?;
        }
        run(audit, &format!("perazzo example d = {d}"), &f)?;
    }
    Ok("d = 3..8 rank 4, symbolic det Hess = 0 for d <= 6".into())
}

fn c11(audit: &mut Audit) -> Outcome {
    let mut rng = common::rng(11_011);
    for k in 0..50 {
        let f = common::essential_form(&mut rng, 4, 3..=4);
        let a = run(audit, &format!("desk form {k}"), &f)?;
        let dual = Partition::from_hilbert(&a.jordan.hilbert).dual();
        ensure(a.lefschetz.slp && a.jordan.jordan == dual, || {
            format!(
                "form {k} ({f}): SLP {}, Jordan type {}, conjugate {dual}",
                a.lefschetz.slp, a.jordan.jordan
            )
        })?;
    }
    Ok("50 forms have SLP".into())
}

fn c12(audit: &mut Audit) -> Outcome {
    ensure(audit.checked > 0, || "no analyses recorded".into())?;
    if audit.violations.is_empty() {
        Ok(format!("{} analyses", audit.checked))
    } else {
        Err(audit.violations.join("; "))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("Perazzo cubic", c1),
        ("8-variable cubic", c2),
        ("9-variable cubic", c3),
        ("quartic with WLP", c4),
        ("vanishing second Hessian", c5),
        ("quintic consensus", c6),
        ("oracle equivalence", c7),
        ("closed forms", c8),
        ("rank additivity", c9),
        ("Perazzo family", c10),
        ("forms in at most four variables", c11),
        ("structural invariants", c12),
    ];
    let mut audit = Audit::default();
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check(&mut audit);
        let took = start.elapsed();
        if outcome.is_ok() && took > TIME_LIMIT {
            outcome = Err(format!("took {took:.2?}, limit {TIME_LIMIT:?}"));
        }
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail} ({took:.2?})", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} ({took:.2?})", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
