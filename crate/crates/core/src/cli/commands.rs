use crate::error::{Error, Result};
use crate::hecke::{
    birank, hecke_residual, read_rmatrix, skew_residual, solve_skew_inverse, ybe_residual,
    HeckeSymmetry,
};
use crate::koszul::{
    conjecture1_check, d_squared_check_r2, differential_d1, p2_action_identity, ProjectorSet,
};
use crate::linalg::{Matrix, TensorOp};
use crate::orbit::{
    cotangent, gl2_classical_line, gl2_predicate_lines, gl2_remark_lines, gradient_matrices,
    hankel, hankel_det_check, hankel_det_formula, higher_power_reduction, regularity, same_lines,
    Certificate, Strategy,
};
use crate::rea::{
    ch_verify, classical_limit, hatted_ch_coefficients, is_zero_mod, matrix_identity, NormalForm,
    ReaQuotient, ShiftedQuotient, SuperPbw,
};
use crate::scalar::{parse, Scalar};
use crate::symfun::{
    ch_terms, power_sums_param, quantum_dims, rect_schur_param, vieta_residuals, EigenvalueProfile,
};

use super::report::{Check, Report};
use super::{Command, KoszulCheck, ProfileArgs, SymArgs};

type Outcome = std::result::Result<Report, (Report, Error)>;

pub fn dispatch(cmd: &Command) -> Outcome {
    let (name, f): (&str, Box<dyn Fn(&mut Report) -> Result<()> + '_>) = match cmd {
        Command::CheckR { sym } => ("check-r", Box::new(move |r| check_r(sym, r))),
        Command::Birank { sym, depth } => ("birank", Box::new(move |r| birank_cmd(sym, *depth, r))),
        Command::Ch { sym } => ("ch", Box::new(move |r| ch(sym, r))),
        Command::Param { sym, profile, k } => {
            ("param", Box::new(move |r| param(sym, profile, *k, r)))
        }
        Command::Orbit {
            sym,
            profile,
            h,
            sampled,
            seed,
            trials,
        } => (
            "orbit",
            Box::new(move |r| {
                let strategy = sampled.then_some(Strategy::Sampled {
                    seed: *seed,
                    trials: *trials,
                });
                orbit(sym, profile, h.as_deref(), strategy, r)
            }),
        ),
        Command::Cotangent {
            sym,
            profile,
            h,
            cap,
        } => (
            "cotangent",
            Box::new(move |r| cotangent_cmd(sym, profile, h.as_deref(), *cap, r)),
        ),
        Command::Koszul {
            sym,
            check,
            k,
            seed,
        } => (
            "koszul",
            Box::new(move |r| koszul(sym, *check, *k, *seed, r)),
        ),
        Command::Mrea { sym, profile, h } => (
            "mrea",
            Box::new(move |r| mrea(sym, profile, h.as_deref(), r)),
        ),
    };
    let mut report = Report::new(name);
    match f(&mut report) {
        Ok(()) => Ok(report),
        Err(e) => Err((report, e)),
    }
}

fn record_sym(sym: &SymArgs, r: &mut Report) -> Result<()> {
    r.input("symmetry", sym.kind()?);
    Ok(())
}

/// Bi-rank: known for built-ins, otherwise taken from `--m`/`--n`.
fn rank_of(sym: &SymArgs) -> Result<(usize, usize)> {
    if let Some(rank) = sym.expected_birank() {
        return Ok(rank);
    }
    match (sym.m, sym.n) {
        (Some(m), Some(n)) => Ok((m, n)),
        _ => Err(Error::Parse(
            "--m and --n give the bi-rank for file symmetries".into(),
        )),
    }
}

fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let r: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
            format!("[{}]", r.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn support(op: &TensorOp) -> usize {
    op.matrix()
        .entries()
        .iter()
        .filter(|x| !x.is_zero())
        .count()
}

fn zero_check(name: &str, op: &TensorOp) -> Check {
    match support(op) {
        0 => Check::pass(name),
        k => Check::fail(name, format!("{k} nonzero entries")),
    }
}

fn check_r(sym: &SymArgs, r: &mut Report) -> Result<()> {
    record_sym(sym, r)?;
    let (n, mat, q) = match &sym.file {
        Some(path) => {
            let f = read_rmatrix(path)?;
            (f.dim, f.matrix, f.q)
        }
        None => {
            let hs = sym.build()?;
            (hs.dim(), hs.r().matrix().clone(), hs.q().clone())
        }
    };
    r.input("q", &q);
    let op = TensorOp::new(n, 2, mat.clone())?;
    r.push(zero_check("Yang-Baxter", &ybe_residual(&op)?));
    r.push(zero_check("Hecke", &hecke_residual(&op, &q)?));
    match solve_skew_inverse(&op) {
        Ok(psi) => r.push(zero_check("skew-invertible", &skew_residual(&op, &psi)?)),
        Err(e) => r.push_err("skew-invertible", &e),
    }
    if r.all_pass() {
        let hs = HeckeSymmetry::from_matrix(n, mat, q, String::new())?;
        r.push(Check::info("B", matrix_text(hs.b())));
        r.push(Check::info("C", matrix_text(hs.c())));
    }
    Ok(())
}

fn birank_cmd(sym: &SymArgs, depth: Option<usize>, r: &mut Report) -> Result<()> {
    record_sym(sym, r)?;
    let hs = sym.build()?;
    let depth = depth.unwrap_or_else(|| match sym.expected_birank() {
        Some((m, n)) => m + n + 3,
        None => hs.dim() + 3,
    });
    r.input("depth", depth);
    let rep = birank(&hs, depth)?;
    let list = |v: &[usize]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    r.push(Check::info("dim Sym^k", list(&rep.sym_dims)));
    r.push(Check::info("dim Lambda^k", list(&rep.wedge_dims)));
    let got = format!("({}|{})", rep.m, rep.n);
    match sym.expected_birank() {
        Some(want) if want != (rep.m, rep.n) => r.push(Check::fail(
            "bi-rank",
            format!("got {got}, expected ({}|{})", want.0, want.1),
        )),
        _ => r.push(Check::pass("bi-rank").with_certificate(got)),
    }
    Ok(())
}

fn ch(sym: &SymArgs, r: &mut Report) -> Result<()> {
    record_sym(sym, r)?;
    let hs = sym.build()?;
    let (m, n) = rank_of(sym)?;
    r.input("birank", format!("({m}|{n})"));
    for i in 0..=m + n {
        let terms: Vec<String> = ch_terms(m, n, i)
            .iter()
            .map(|t| format!("({})*{}", t.coef, t.label(m, n)))
            .collect();
        r.push(Check::info(
            format!("coefficient of L^{}", m + n - i),
            terms.join(" + "),
        ));
    }
    let rea = ReaQuotient::new(&hs)?;
    match ch_verify(&hs, m, n, &rea) {
        Ok(rep) => r.push(
            Check::pass("Cayley-Hamilton in the REA").with_certificate(format!(
                "degree {}, {} entries",
                rep.degree, rep.entries_checked
            )),
        ),
        Err(Error::ChFailed(s)) => r.push(Check::fail("Cayley-Hamilton in the REA", s)),
        Err(e) => return Err(e),
    }
    Ok(())
}

fn param(sym: &SymArgs, profile: &ProfileArgs, k: Option<usize>, r: &mut Report) -> Result<()> {
    let (m, n) = rank_of(sym)?;
    let q = sym.scalar_q()?.unwrap_or_else(Scalar::q);
    let p = profile.profile((m, n), q.clone(), None)?;
    r.input("birank", format!("({m}|{n})"));
    r.input("q", &q);
    let kmax = k.unwrap_or(m + n + 2);
    let dims = quantum_dims(&p)?;
    for (i, d) in dims.d.iter().enumerate() {
        r.push(Check::info(format!("d_{}", i + 1), d.to_string()));
    }
    for (j, d) in dims.dd.iter().enumerate() {
        r.push(Check::info(format!("d'_{}", j + 1), d.to_string()));
    }
    for (i, x) in power_sums_param(kmax, &p)?.iter().enumerate() {
        r.push(Check::info(format!("p_{i}"), x.to_string()));
    }
    r.push(Check::info("s_[m|n]", rect_schur_param(&p)?.to_string()));
    for (label, res) in vieta_residuals(&p)? {
        r.push(if res.is_zero() {
            Check::pass(label)
        } else {
            Check::fail(label, res.to_string())
        });
    }
    if kmax > m + n {
        match higher_power_reduction(&p, kmax) {
            Ok(_) => r.push(Check::pass(format!("CH recurrence up to p_{kmax}"))),
            Err(e) => r.push_err("CH recurrence", &e),
        }
    }
    Ok(())
}

fn parse_h(h: Option<&str>) -> Result<Option<Scalar>> {
    h.map(parse).transpose()
}

fn orbit(
    sym: &SymArgs,
    profile: &ProfileArgs,
    h: Option<&str>,
    strategy: Option<Strategy>,
    r: &mut Report,
) -> Result<()> {
    let (m, n) = rank_of(sym)?;
    let q = sym.scalar_q()?.unwrap_or_else(Scalar::one);
    let h = parse_h(h)?;
    let p = profile.profile((m, n), q.clone(), h)?;
    r.input("birank", format!("({m}|{n})"));
    r.input("q", &q);
    let verdict = regularity(&p);
    if verdict.regular {
        r.push(Check::pass("regular"));
    } else {
        let v: Vec<String> = verdict
            .violations()
            .map(|c| format!("{} ({}, {})", c.kind, c.i, c.j))
            .collect();
        r.push(Check::fail("regular", v.join("; ")));
        return Ok(());
    }
    let det = hankel(&p)?.det()?;
    r.push(Check::info("det H", det.to_string()));
    r.push(Check::from_bool("det H nonzero", !det.is_zero()));
    if p.h.is_none() {
        let want = hankel_det_formula(&p)?;
        r.push(if det == want {
            Check::pass("det H factorization")
        } else {
            Check::fail("det H factorization", (&det - &want).to_string())
        });
    }
    if let Some(s) = strategy {
        match hankel_det_check(m, n, s) {
            Ok(c) => r.push(
                Check::pass("det H factorization at sampled points")
                    .with_certificate(format!("{} points", c.points_checked)),
            ),
            Err(e) => r.push_err("det H factorization at sampled points", &e),
        }
    }
    Ok(())
}

fn cotangent_cmd(
    sym: &SymArgs,
    profile: &ProfileArgs,
    h: Option<&str>,
    cap: usize,
    r: &mut Report,
) -> Result<()> {
    record_sym(sym, r)?;
    let hs = sym.build()?;
    let rank = rank_of(sym)?;
    let p = profile.profile(rank, hs.q().clone(), parse_h(h)?)?;
    match cotangent(&hs, &p, cap) {
        Ok(data) => {
            let cert = match data.certificate {
                Certificate::Entrywise { degree, entries } => {
                    format!("entrywise, degree {degree}, {entries} entries")
                }
                Certificate::Structural => "structural".to_string(),
            };
            for (name, ok) in &data.checks {
                r.push(Check::from_bool(name.clone(), *ok));
            }
            r.push(Check::info("certificate", cert));
            r.push(Check::info("H", matrix_text(&data.h)));
        }
        Err(e @ (Error::ExceptionalProfile(_) | Error::IdentityFailed(_))) => {
            r.push_err("cotangent", &e)
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn koszul(
    sym: &SymArgs,
    check: KoszulCheck,
    k: Option<usize>,
    seed: u64,
    r: &mut Report,
) -> Result<()> {
    record_sym(sym, r)?;
    let hs = sym.build()?;
    let ps = match ProjectorSet::build(&hs) {
        Ok(ps) => ps,
        Err(e @ Error::ProjectorAxiomFailed(_)) => {
            r.push_err("arity-2 projector axioms", &e);
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let all = check == KoszulCheck::All;
    if all || check == KoszulCheck::Projectors {
        r.push(Check::pass("arity-2 projector axioms"));
        match ps.verify_arity3(seed) {
            Ok(count) => r.push(
                Check::pass("arity-3 projector axioms")
                    .with_certificate(format!("{count} vectors")),
            ),
            Err(e) => r.push_err("arity-3 projector axioms", &e),
        }
    }
    if all || check == KoszulCheck::Conjecture1 {
        let ks = match k {
            Some(k) => vec![k],
            None => vec![2, 3],
        };
        for k in ks {
            let name = format!("trace conjecture, k = {k}");
            match conjecture1_check(k, &hs, &ps) {
                Ok(_) => r.push(Check::pass(name)),
                Err(e @ Error::ConjectureFailed(_)) => r.push_err(&name, &e),
                Err(e) => return Err(e),
            }
        }
    }
    if all || check == KoszulCheck::P2Action {
        match p2_action_identity(&hs, &ps) {
            Ok(rep) => {
                for (name, ok) in rep.rows {
                    r.push(Check::from_bool(name, ok));
                }
            }
            Err(e @ Error::IdentityFailed(_)) => r.push_err("P+ action table", &e),
            Err(e) => return Err(e),
        }
    }
    if all || check == KoszulCheck::D1 {
        let kmax = k.unwrap_or(3);
        let n = hs.dim();
        let (a, _) = gradient_matrices(n, hs.c(), kmax)?;
        for k in 1..=kmax {
            let ok = differential_d1(&hs, k)?
                .iter()
                .all(|((i, j), x)| x == a.get((j - 1) * n + (i - 1), k - 1));
            r.push(Check::from_bool(
                format!("d_1 Tr_R L^{k} matches the gradient column"),
                ok,
            ));
        }
    }
    if all || check == KoszulCheck::D2 {
        match d_squared_check_r2(&ps) {
            Ok(()) => r.push(Check::pass("d^2 = 0 at r = 2")),
            Err(e) => r.push_err("d^2 = 0 at r = 2", &e),
        }
    }
    Ok(())
}

fn verify_matrix(
    name: &str,
    mat: &crate::rea::NCMatrix,
    nf: &dyn NormalForm,
    r: &mut Report,
) -> Result<()> {
    for x in mat.entries() {
        let t = is_zero_mod(x, nf)?;
        if !t.is_zero {
            r.push(Check::fail(name, t.residual.display()));
            return Ok(());
        }
    }
    r.push(Check::pass(name));
    Ok(())
}

fn mrea(sym: &SymArgs, profile: &ProfileArgs, h: Option<&str>, r: &mut Report) -> Result<()> {
    record_sym(sym, r)?;
    let hs = sym.build()?;
    let (m, n) = rank_of(sym)?;
    let h = parse_h(h)?.unwrap_or_else(Scalar::h);
    r.input("h", &h);
    let size = hs.dim();
    let at_one = hs.q().is_one();
    if !at_one {
        let p0 = hs.rtrace(&Matrix::identity(size))?;
        let coefs = hatted_ch_coefficients(m, n, hs.q(), &h, &p0)?;
        let nf = ShiftedQuotient::new(&hs, &h)?;
        verify_matrix(
            "hatted Cayley-Hamilton via the shift",
            &matrix_identity(&coefs, size, hs.c())?,
            &nf,
            r,
        )?;
    } else {
        let hs_q = HeckeSymmetry::q_super(m, n, Scalar::q())?;
        let p0 = hs_q.rtrace(&Matrix::identity(m + n))?;
        let lim = classical_limit(&hatted_ch_coefficients(m, n, &Scalar::q(), &h, &p0)?)?;
        let pbw = SuperPbw::new(&hs, &h)?;
        verify_matrix(
            "q -> 1 hatted Cayley-Hamilton in U(gl)",
            &matrix_identity(&lim, size, hs.c())?,
            &pbw,
            r,
        )?;
    }
    let sym_profile = EigenvalueProfile::symbolic_hatted(m, n)
        .with_q(Scalar::q())
        .with_h(Some(h.clone()));
    let dims = quantum_dims(&sym_profile)?;
    let at = |x: &Scalar| -> Result<Scalar> {
        if at_one {
            x.compose(crate::scalar::Symbol::q(), &Scalar::one())
        } else {
            x.compose(crate::scalar::Symbol::q(), hs.q())
        }
    };
    for (i, d) in dims.d.iter().enumerate() {
        r.push(Check::info(
            format!("hatted d_{}", i + 1),
            at(d)?.to_string(),
        ));
    }
    for (j, d) in dims.dd.iter().enumerate() {
        r.push(Check::info(
            format!("hatted d'_{}", j + 1),
            at(d)?.to_string(),
        ));
    }
    if (m, n) == (2, 0) {
        let same = same_lines(
            &gl2_predicate_lines(hs.q(), &h),
            &gl2_remark_lines(hs.q(), &h),
        );
        r.push(Check::info(
            "exceptional lines equal the gl(2) remark",
            same.to_string(),
        ));
        let classical = same_lines(&gl2_predicate_lines(hs.q(), &h), &[gl2_classical_line()]);
        r.push(Check::info(
            "exceptional lines equal the classical diagonal",
            classical.to_string(),
        ));
    }
    if profile.mu.is_some() || profile.nu.is_some() {
        let p = profile.profile((m, n), hs.q().clone(), Some(h))?;
        match cotangent(&hs, &p, crate::orbit::ENTRYWISE_CAP) {
            Ok(data) => {
                for (name, ok) in &data.checks {
                    r.push(Check::from_bool(format!("NC orbit: {name}"), *ok));
                }
            }
            Err(e @ (Error::ExceptionalProfile(_) | Error::IdentityFailed(_))) => {
                r.push_err("NC orbit", &e)
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
