//! The ten acceptance criteria, run in sequence. Each prints one line.
//!
//! All comparisons are exact; the only tolerances are the wall-clock budgets
//! below. AC-07 is known not to hold at q != 1 (the cubic trace loses its
//! `R_2` component under the full symmetrizer); it is checked to fail in
//! exactly that way and nowhere else.

use std::time::{Duration, Instant};

use braided_orbits::error::Error;
use braided_orbits::hecke::{
    birank, hecke_residual, skew_residual, solve_skew_inverse, ybe_residual, HeckeSymmetry,
};
use braided_orbits::koszul::{conjecture1_check, p2_action_identity, ProjectorSet};
use braided_orbits::orbit::{
    cotangent, gl2_classical_line, gl2_predicate_lines, gl2_remark_lines, hankel_det_check,
    higher_power_reduction, same_lines, Strategy, ENTRYWISE_CAP,
};
use braided_orbits::rea::{centrality_check, ch_verify, ReaQuotient};
use braided_orbits::scalar::{parse, Scalar};
use braided_orbits::symfun::{
    ch_factorized, ch_terms, power_sums_param, quantum_dims, schur_param, vieta_residuals,
    EigenvalueProfile, Partition,
};

const AC1_BUDGET: Duration = Duration::from_secs(30);
const AC3_CASE_BUDGET: Duration = Duration::from_secs(60);
const HANKEL_SEED: u64 = 42;
const HANKEL_POINTS: usize = 7;

/// Criteria that are implemented faithfully but do not hold.
const KNOWN_UNATTAINABLE: &[&str] = &["AC-07"];

type Outcome = std::result::Result<String, String>;

fn s(t: &str) -> Scalar {
    parse(t).unwrap_or_else(|e| panic!("{t}: {e}"))
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn ensure(ok: bool, what: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

/// (symmetry, bi-rank) for every braiding named in AC-01 and AC-02.
fn validation_set() -> Vec<(HeckeSymmetry, (usize, usize))> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((HeckeSymmetry::flip(n).unwrap(), (n, 0)));
    }
    for total in 2..=4 {
        for m in 1..total {
            out.push((
                HeckeSymmetry::superflip(m, total - m).unwrap(),
                (m, total - m),
            ));
        }
    }
    for n in 1..=3 {
        out.push((
            HeckeSymmetry::dj_gl(n, Scalar::ratio(7, 5)).unwrap(),
            (n, 0),
        ));
    }
    for (m, n) in [(1, 1), (2, 1)] {
        out.push((
            HeckeSymmetry::q_super(m, n, Scalar::ratio(9, 7)).unwrap(),
            (m, n),
        ));
    }
    out
}

fn ac01() -> Outcome {
    let start = Instant::now();
    let set = validation_set();
    for (hs, _) in &set {
        let r = hs.r();
        ensure(
            ybe_residual(r).map_err(e2s)?.matrix().is_zero(),
            format!("{}: Yang-Baxter", hs.label()),
        )?;
        ensure(
            hecke_residual(r, hs.q()).map_err(e2s)?.matrix().is_zero(),
            format!("{}: Hecke", hs.label()),
        )?;
        let psi = solve_skew_inverse(r).map_err(e2s)?;
        ensure(
            skew_residual(r, &psi).map_err(e2s)?.matrix().is_zero(),
            format!("{}: skew-inverse", hs.label()),
        )?;
    }
    let t = start.elapsed();
    ensure(t < AC1_BUDGET, format!("took {t:?}"))?;
    Ok(format!("{} braidings, zero residuals", set.len()))
}

fn ac02() -> Outcome {
    let set = validation_set();
    for (hs, (m, n)) in &set {
        let rep = birank(hs, m + n + 3).map_err(e2s)?;
        ensure(
            (rep.m, rep.n) == (*m, *n),
            format!("{}: got ({}|{})", hs.label(), rep.m, rep.n),
        )?;
    }
    Ok(format!("{} bi-ranks exact", set.len()))
}

fn ac03() -> Outcome {
    let cases = [
        (HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5)).unwrap(), 2, 0),
        (
            HeckeSymmetry::q_super(1, 1, Scalar::ratio(9, 7)).unwrap(),
            1,
            1,
        ),
        (HeckeSymmetry::flip(2).unwrap(), 2, 0),
    ];
    let mut parts = Vec::new();
    for (hs, m, n) in &cases {
        let start = Instant::now();
        let rea = ReaQuotient::new(hs).map_err(e2s)?;
        let rep = ch_verify(hs, *m, *n, &rea).map_err(e2s)?;
        let t = start.elapsed();
        ensure(t < AC3_CASE_BUDGET, format!("{} took {t:?}", hs.label()))?;
        parts.push(format!(
            "{} deg {} in {:.1}s",
            hs.label(),
            rep.degree,
            t.as_secs_f64()
        ));
    }
    Ok(parts.join(", "))
}

fn ac04() -> Outcome {
    for hs in [
        HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5)).unwrap(),
        HeckeSymmetry::q_super(1, 1, Scalar::ratio(9, 7)).unwrap(),
    ] {
        let rea = ReaQuotient::new(&hs).map_err(e2s)?;
        for k in [1, 2] {
            let rep = centrality_check(k, &hs, &rea).map_err(e2s)?;
            ensure(
                rep.is_central(),
                format!("{} k={k}: {:?}", hs.label(), rep.failures),
            )?;
        }
    }
    Ok("Tr_R L, Tr_R L^2 central".into())
}

fn ac05() -> Outcome {
    for (m, n) in [(2, 0), (1, 1), (2, 1)] {
        hankel_det_check(m, n, Strategy::Symbolic).map_err(|e| format!("({m}|{n}): {e}"))?;
    }
    let c = hankel_det_check(
        3,
        2,
        Strategy::Sampled {
            seed: HANKEL_SEED,
            trials: HANKEL_POINTS,
        },
    )
    .map_err(|e| format!("(3|2): {e}"))?;
    ensure(c.points_checked == HANKEL_POINTS, "sample count")?;
    Ok(format!("symbolic x3, (3|2) at {HANKEL_POINTS} points"))
}

fn ac06() -> Outcome {
    let (m, n) = (3, 2);
    // coefficient of L^{5-i}: (k, r, coefficient of s_{[3|2]^k_r})
    let display: [&[(usize, usize, &str)]; 6] = [
        &[(0, 0, "1")],
        &[(0, 1, "1/q"), (1, 0, "-q")],
        &[(0, 2, "1/q^2"), (1, 1, "-1"), (2, 0, "q^2")],
        &[(1, 2, "-1/q"), (2, 1, "q"), (3, 0, "-q^3")],
        &[(2, 2, "1"), (3, 1, "-q^2")],
        &[(3, 2, "-q")],
    ];
    for (i, want) in display.iter().enumerate() {
        let mut got: Vec<(usize, usize, Scalar)> = ch_terms(m, n, i)
            .into_iter()
            .map(|t| (t.k, t.r, t.coef))
            .collect();
        got.sort_by_key(|x| (x.0, x.1));
        let want: Vec<(usize, usize, Scalar)> =
            want.iter().map(|&(k, r, c)| (k, r, s(c))).collect();
        ensure(got == want, format!("coefficient of L^{}", 5 - i))?;
        for t in ch_terms(m, n, i) {
            ensure(t.shape == Partition::upper_lower(m, n, t.k, t.r), "shape")?;
        }
    }

    let f = ch_factorized(m, n).map_err(e2s)?;
    let even: Vec<Scalar> = f.even.iter().map(|t| t.coef.clone()).collect();
    let odd: Vec<Scalar> = f.odd.iter().map(|t| t.coef.clone()).collect();
    ensure(even == ["1", "-q", "q^2", "-q^3"].map(s), "even factor")?;
    ensure(odd == ["1", "1/q", "1/q^2"].map(s), "odd factor")?;

    let p = EigenvalueProfile::symbolic(m, n);
    let vieta = vieta_residuals(&p).map_err(e2s)?;
    ensure(vieta.len() == 6, "five Vieta relations plus the rectangle")?;
    for (label, r) in &vieta {
        ensure(r.is_zero(), format!("Vieta {label}"))?;
    }

    let rect = "(mu1/q - q*nu1)*(mu1/q - q*nu2)*(mu2/q - q*nu1)*(mu2/q - q*nu2)*(mu3/q - q*nu1)*(mu3/q - q*nu2)";
    let upper = schur_param(&Partition::upper(m, n, 3), &p).map_err(e2s)?;
    ensure(
        upper == s(&format!("mu1*mu2*mu3/q^3*{rect}")),
        "s^3 parametrization",
    )?;
    let lower = schur_param(&Partition::lower(m, n, 2), &p).map_err(e2s)?;
    ensure(
        lower == s(&format!("q^2*nu1*nu2*{rect}")),
        "s_2 parametrization",
    )?;
    Ok("6 coefficients, 2 factors, 5 Vieta, 2 shapes".into())
}

/// The parts of AC-07 other than the cubic trace.
fn ac07_rest(hs: &HeckeSymmetry, ps: &ProjectorSet) -> std::result::Result<(), String> {
    let rep = conjecture1_check(2, hs, ps).map_err(|e| format!("{} k=2: {e}", hs.label()))?;
    ensure(rep.holds(), format!("{} k=2", hs.label()))?;
    let act = p2_action_identity(hs, ps).map_err(|e| format!("{}: {e}", hs.label()))?;
    ensure(act.holds(), format!("{}: action table", hs.label()))?;
    Ok(())
}

fn ac07_cases() -> Vec<HeckeSymmetry> {
    vec![
        HeckeSymmetry::flip(2).unwrap(),
        HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5)).unwrap(),
        HeckeSymmetry::dj_gl(3, Scalar::ratio(7, 5)).unwrap(),
        HeckeSymmetry::q_super(1, 1, Scalar::ratio(9, 7)).unwrap(),
    ]
}

fn ac07() -> Outcome {
    let mut failed = Vec::new();
    for hs in ac07_cases() {
        let ps = ProjectorSet::build(&hs).map_err(e2s)?;
        ac07_rest(&hs, &ps)?;
        match conjecture1_check(3, &hs, &ps) {
            Ok(r) if r.holds() => {}
            Ok(_) | Err(Error::ConjectureFailed(_)) => failed.push(hs.label().to_string()),
            Err(e) => return Err(e.to_string()),
        }
    }
    if failed.is_empty() {
        Ok("k=2,3, action rows, invariance, table".into())
    } else {
        Err(format!(
            "k=3 trace not P+^(3)-symmetric for {}",
            failed.join(", ")
        ))
    }
}

/// The documented shape of the AC-07 failure: everything except the cubic
/// trace holds, and the cubic trace fails exactly where ξ != 0.
fn ac07_fails_as_documented() -> std::result::Result<(), String> {
    for hs in ac07_cases() {
        let ps = ProjectorSet::build(&hs).map_err(e2s)?;
        ac07_rest(&hs, &ps)?;
        let cubic = matches!(conjecture1_check(3, &hs, &ps), Ok(r) if r.holds());
        ensure(
            cubic == hs.xi().is_zero(),
            format!("{}: cubic trace", hs.label()),
        )?;
    }
    Ok(())
}

fn ac08() -> Outcome {
    let q = Scalar::ratio(7, 5);
    let one_two = vec![Scalar::from_int(1), Scalar::from_int(2)];
    let cases = [
        (
            HeckeSymmetry::dj_gl(1, Scalar::q()).unwrap(),
            EigenvalueProfile::symbolic(1, 0),
        ),
        (
            HeckeSymmetry::flip(2).unwrap(),
            EigenvalueProfile::numeric(one_two.clone(), vec![], Scalar::one()),
        ),
        (
            HeckeSymmetry::dj_gl(2, q.clone()).unwrap(),
            EigenvalueProfile::numeric(one_two, vec![], q),
        ),
    ];
    let mut parts = Vec::new();
    for (hs, p) in &cases {
        let data = cotangent(hs, p, ENTRYWISE_CAP).map_err(|e| format!("{}: {e}", hs.label()))?;
        for (name, ok) in &data.checks {
            ensure(*ok, format!("{}: {name}", hs.label()))?;
        }
        parts.push(format!("{} {:?}", hs.label(), data.certificate));
    }
    Ok(parts.join(", "))
}

fn ac09() -> Outcome {
    for (m, n) in [(2, 0), (1, 1), (2, 1)] {
        let p = EigenvalueProfile::symbolic(m, n);
        let top = m + n + 2;
        let got = higher_power_reduction(&p, top).map_err(|e| format!("({m}|{n}): {e}"))?;
        ensure(got.len() == 2, "two reduced powers")?;
        // p_k = Σ d_i μ_i^k + Σ d'_j ν_j^k term by term
        let qd = quantum_dims(&p).map_err(e2s)?;
        for (idx, k) in (m + n + 1..=top).enumerate() {
            let mut want = Scalar::zero();
            for (i, d) in qd.d.iter().enumerate() {
                want += &(d * &s(&format!("mu{}", i + 1)).powu(k as u32));
            }
            for (j, d) in qd.dd.iter().enumerate() {
                want += &(d * &s(&format!("nu{}", j + 1)).powu(k as u32));
            }
            ensure(got[idx] == want, format!("({m}|{n}) p_{k}"))?;
        }
        ensure(
            power_sums_param(top, &p).map_err(e2s)?[m + n + 1..] == got[..],
            "parametrized powers",
        )?;
    }
    Ok("p_{m+n+1}, p_{m+n+2} for (2|0), (1|1), (2|1)".into())
}

/// The q = 1 hatted dimensions written out as rational functions of `h`.
fn classical_hatted_dims(m: usize, n: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let mu = |i: usize| format!("mu{i}");
    let nu = |j: usize| format!("nu{j}");
    let d = (1..=m)
        .map(|i| {
            let mut f = vec!["1".to_string()];
            for p in (1..=m).filter(|&p| p != i) {
                f.push(format!("({a} - {b} - h)/({a} - {b})", a = mu(i), b = mu(p)));
            }
            for j in 1..=n {
                f.push(format!("({a} - {b} + h)/({a} - {b})", a = mu(i), b = nu(j)));
            }
            s(&f.join("*"))
        })
        .collect();
    let dd = (1..=n)
        .map(|j| {
            let mut f = vec!["-1".to_string()];
            for i in 1..=m {
                f.push(format!("({a} - {b} - h)/({a} - {b})", a = nu(j), b = mu(i)));
            }
            for p in (1..=n).filter(|&p| p != j) {
                f.push(format!("({a} - {b} + h)/({a} - {b})", a = nu(j), b = nu(p)));
            }
            s(&f.join("*"))
        })
        .collect();
    (d, dd)
}

fn ac10() -> Outcome {
    for (m, n) in [(2, 0), (1, 1), (2, 1), (1, 2)] {
        let p = EigenvalueProfile::symbolic_hatted(m, n).with_q(Scalar::one());
        let qd = quantum_dims(&p).map_err(e2s)?;
        let (d, dd) = classical_hatted_dims(m, n);
        ensure(qd.d == d && qd.dd == dd, format!("hatted dims ({m}|{n})"))?;
    }
    let h = Scalar::h();
    let one = Scalar::one();
    ensure(
        same_lines(&gl2_predicate_lines(&one, &h), &gl2_remark_lines(&one, &h)),
        "gl(2) remark lines at q = 1",
    )?;
    let diag = [gl2_classical_line()];
    let pts = [
        (one.clone(), Scalar::zero(), true),
        (one.clone(), Scalar::one(), false),
        (one.clone(), h.clone(), false),
        (Scalar::ratio(7, 5), Scalar::zero(), false),
        (Scalar::ratio(7, 5), h, false),
    ];
    for (q, hv, classical) in pts {
        ensure(
            same_lines(&gl2_predicate_lines(&q, &hv), &diag) == classical,
            format!("classical coincidence at q = {q}, h = {hv}"),
        )?;
    }
    Ok("dims for 4 ranks, gl(2) lines".into())
}

#[test]
fn acceptance_suite() {
    let criteria: [(&str, &str, fn() -> Outcome); 10] = [
        ("AC-01", "braiding validation", ac01),
        ("AC-02", "bi-rank detection", ac02),
        ("AC-03", "Cayley-Hamilton in the REA", ac03),
        ("AC-04", "centrality", ac04),
        ("AC-05", "Hankel determinant", ac05),
        ("AC-06", "the (3|2) example", ac06),
        ("AC-07", "trace symmetrization", ac07),
        ("AC-08", "cotangent idempotent", ac08),
        ("AC-09", "power sums from CH", ac09),
        ("AC-10", "modified REA at q = 1", ac10),
    ];
    let mut unexpected = Vec::new();
    for (id, title, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_UNATTAINABLE.contains(&id);
        match &outcome {
            Ok(detail) => println!("{id} PASS {title} ({secs:.1}s): {detail}"),
            Err(why) => println!(
                "{id} FAIL {title} ({secs:.1}s): {why}{}",
                if known { " [known]" } else { "" }
            ),
        }
        if outcome.is_ok() == known {
            unexpected.push(id);
        }
    }
    if let Err(why) = ac07_fails_as_documented() {
        unexpected.push("AC-07 shape");
        println!("AC-07 failure differs from the documented one: {why}");
    }
    assert!(unexpected.is_empty(), "unexpected outcomes: {unexpected:?}");
}
