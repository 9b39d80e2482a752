use crate::error::{Error, Result};
use crate::hecke::HeckeSymmetry;
use crate::linalg::Matrix;
use crate::rea::{power_sum_element, NCPoly};
use crate::scalar::{qnumber_at, Scalar};

use super::basis::{dense, r_at, structure_coefficients, structure_element};
use super::projectors::{P3Form, ProjectorSet};

/// `Tr_R L^k` in both bases.
#[derive(Clone, Debug)]
pub struct TraceVector {
    pub k: usize,
    /// Coefficients in the basis `(L_1 ... L_k̄)_I^J`, indexed `(I, J)`.
    pub hatted: Matrix,
    /// Coefficients in the word basis of `L^{⊗k}`.
    pub words: Vec<Scalar>,
}

/// The numeric factor under the R-trace: `R_1` for `k = 2`, `R_2 R_1` for
/// `k = 3`.
fn trailing_structure(hs: &HeckeSymmetry, k: usize) -> Result<Matrix> {
    match k {
        2 => Ok(r_at(hs, 1, 2)),
        3 => r_at(hs, 2, 3).mul(&r_at(hs, 1, 3)),
        _ => Err(Error::IndexOutOfRange { index: k, max: 3 }),
    }
}

/// Builds `Tr_R L^k` from its hatted-basis coefficients and checks the
/// result against the direct word expansion.
pub fn trace_vector(k: usize, hs: &HeckeSymmetry) -> Result<TraceVector> {
    let s = trailing_structure(hs, k)?;
    let hatted = structure_coefficients(hs, k, &s)?;
    let via = structure_element(hs, k, &s)?;
    let direct = power_sum_element(k, hs.dim(), hs.c())?;
    if via != direct {
        return Err(Error::IdentityFailed(format!(
            "Tr_R L^{k}: hatted route leaves {}",
            via.sub(&direct).display()
        )));
    }
    Ok(TraceVector {
        k,
        hatted,
        words: dense(&direct, k)?,
    })
}

fn nonzero_count(x: &[Scalar], y: &[Scalar]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureReport {
    pub k: usize,
    /// Number of word coordinates where the two sides differ.
    pub residual_support: usize,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.residual_support == 0
    }
}

/// `P_+^{(k)} Tr_R L^k = P_{+2}^{(k-1)} Tr_R L^k` for `k = 2, 3`; for `k = 2`
/// the right side is `Tr_R L^2` itself.
pub fn conjecture1_check(
    k: usize,
    hs: &HeckeSymmetry,
    ps: &ProjectorSet,
) -> Result<ConjectureReport> {
    let v = trace_vector(k, hs)?.words;
    let (lhs, rhs) = match k {
        2 => (ps.plus2(&v)?, v),
        3 => (ps.plus3(P3Form::Second, &v), ps.plus_at(2, &v)),
        _ => return Err(Error::IndexOutOfRange { index: k, max: 3 }),
    };
    let report = ConjectureReport {
        k,
        residual_support: nonzero_count(&lhs, &rhs),
    };
    if !report.holds() {
        return Err(Error::ConjectureFailed(format!(
            "k = {k}: {} coordinates differ",
            report.residual_support
        )));
    }
    Ok(report)
}

/// The matrix structures on `V^{⊗3}` appearing in the action of `P_{+i}^{(2)}`
/// on `Tr_{R(123)}(L_1 L_2̄ L_3̄ ·)`.
pub struct Structures {
    pub r1: Matrix,
    pub r2: Matrix,
    pub r121: Matrix,
    pub r12_21: Matrix,
    pub ia: Matrix,
    pub ib: Matrix,
    pub xi: Scalar,
}

impl Structures {
    pub fn new(hs: &HeckeSymmetry) -> Result<Self> {
        let r1 = r_at(hs, 1, 3);
        let r2 = r_at(hs, 2, 3);
        let xi = hs.xi();
        let r12 = r1.mul(&r2)?;
        let r21 = r2.mul(&r1)?;
        let r121 = r12.mul(&r1)?;
        let r12_21 = r12.add(&r21)?;
        let ia = r121.add(&r1)?.add(&r2)?;
        let ib = r12_21.sub(&r1.add(&r2)?.scale(&xi))?;
        Ok(Structures {
            r1,
            r2,
            r121,
            r12_21,
            ia,
            ib,
            xi,
        })
    }

    fn swapped(&self) -> Result<Self> {
        Ok(Structures {
            r1: self.r2.clone(),
            r2: self.r1.clone(),
            r121: self.r2.mul(&self.r1)?.mul(&self.r2)?,
            r12_21: self.r12_21.clone(),
            ia: self.ia.clone(),
            ib: self.ib.clone(),
            xi: self.xi.clone(),
        })
    }
}

/// Named rows of the action of the symmetrizers on trace structures, each
/// with its outcome.
#[derive(Clone, Debug, PartialEq)]
pub struct P2ActionReport {
    pub rows: Vec<(String, bool)>,
}

impl P2ActionReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|(_, ok)| *ok)
    }
}

/// Checks the action of `P_{+2}^{(2)}` on `Tr_R L^3`, the invariance of the
/// structures `I_A`, `I_B`, and the transformation table of `P_{+1}^{(2)}`
/// together with its mirror for `P_{+2}^{(2)}`.
pub fn p2_action_identity(hs: &HeckeSymmetry, ps: &ProjectorSet) -> Result<P2ActionReport> {
    let st = Structures::new(hs)?;
    let two = qnumber_at(2, hs.q());
    let inv2 = (&two * &two).inv()?;
    let elem = |m: &Matrix| -> Result<Vec<Scalar>> { dense(&structure_element(hs, 3, m)?, 3) };
    let xi = &st.xi;
    let xi2 = xi * xi;
    let xi2p2 = &xi2 + &Scalar::from_int(2);
    let mut rows = Vec::new();

    let v3 = trace_vector(3, hs)?.words;
    let s = st
        .r12_21
        .scale(&Scalar::from_int(2))
        .sub(&st.r1.scale(xi))?
        .add(&st.r121.scale(xi))?;
    rows.push((
        "P+2 Tr_R L^3".to_string(),
        ps.plus_at(2, &v3) == elem(&s.scale(&inv2))?,
    ));
    let rewritten = st
        .ia
        .scale(xi)
        .add(&st.ib.scale(&Scalar::from_int(2)))?
        .add(&st.r2.scale(xi))?;
    rows.push((
        "structure rewritten through I_A, I_B".to_string(),
        rewritten == s,
    ));

    // powers of T = P+2 P+1 on ξ I_A + 2 I_B + ξ R_2
    let c = &two * &two;
    let c2 = &c * &c;
    let c4 = &c2 * &c2;
    let cm2 = &c - &Scalar::from_int(2);
    let combo = |x: &Scalar, y: &Scalar, z: &Scalar| -> Result<Matrix> {
        st.ia
            .scale(&(x * xi))
            .add(&st.ib.scale(&(y * &Scalar::from_int(2))))?
            .add(&st.r2.scale(&(z * xi)))
    };
    let t_once = combo(
        &(&c2 + &Scalar::from_int(4)).checked_div(&c2)?,
        &(&c2 - &xi2).checked_div(&c2)?,
        &(&cm2 * &cm2).checked_div(&c2)?,
    )?;
    let inner = &Scalar::from_int(2) + &(&c * &cm2);
    let t_twice = combo(
        &(&Scalar::one() + &(&Scalar::from_int(8) * &inner).checked_div(&c4)?),
        &(&Scalar::one() - &(&(&Scalar::from_int(2) * &xi2) * &inner).checked_div(&c4)?),
        &cm2.pow(4)?.checked_div(&c4)?,
    )?;
    let start = elem(&rewritten)?;
    let once = ps.plus_at(2, &ps.plus_at(1, &start));
    let twice = ps.plus_at(2, &ps.plus_at(1, &once));
    rows.push((
        "P+2 P+1 on the P+2 structure".to_string(),
        once == elem(&t_once)?,
    ));
    rows.push((
        "(P+2 P+1)^2 on the P+2 structure".to_string(),
        twice == elem(&t_twice)?,
    ));

    for pos in [1, 2] {
        for (name, m) in [("I_A", &st.ia), ("I_B", &st.ib)] {
            let v = elem(m)?;
            rows.push((format!("P+{pos} fixes {name}"), ps.plus_at(pos, &v) == v));
        }
    }

    for (pos, t) in [(1, Structures::new(hs)?), (2, st.swapped()?)] {
        let (a, b) = (pos, 3 - pos);
        let table = [
            (format!("P+{a}: R{a}"), &t.r1, t.r1.clone()),
            (
                format!("P+{a}: R{b}"),
                &t.r2,
                t.ia.scale(&Scalar::from_int(2))
                    .sub(&t.ib.scale(xi))?
                    .sub(&t.r1.scale(&xi2p2))?
                    .scale(&inv2),
            ),
            (
                format!("P+{a}: R{a}R{b}R{a}"),
                &t.r121,
                t.ia.scale(&xi2p2)
                    .add(&t.ib.scale(xi))?
                    .sub(&t.r1.scale(&Scalar::from_int(2)))?
                    .scale(&inv2),
            ),
            (
                format!("P+{a}: R1R2+R2R1"),
                &t.r12_21,
                t.ia.scale(&(&Scalar::from_int(2) * xi))
                    .add(&t.ib.scale(&Scalar::from_int(4)))?
                    .add(&t.r1.scale(&(&Scalar::from_int(2) * xi)))?
                    .scale(&inv2),
            ),
        ];
        for (name, from, to) in table {
            rows.push((name, ps.plus_at(pos, &elem(from)?) == elem(&to)?));
        }
    }
    let report = P2ActionReport { rows };
    if let Some((name, _)) = report.rows.iter().find(|(_, ok)| !ok) {
        return Err(Error::IdentityFailed(name.clone()));
    }
    Ok(report)
}

/// `d_1(Tr_R L^k) = Σ d(l_i^j) ⊗ a_j^i(k)`: for each generator `(i, j)`
/// (1-based) the cofactor obtained by stripping the first letter of every
/// word of `Tr_R L^k`.
pub fn differential_d1(hs: &HeckeSymmetry, k: usize) -> Result<Vec<((usize, usize), NCPoly)>> {
    if k == 0 {
        return Err(Error::IndexOutOfRange {
            index: 0,
            max: usize::MAX,
        });
    }
    let n = hs.dim();
    let t = power_sum_element(k, n, hs.c())?;
    let mut cof = vec![NCPoly::zero(n); n * n];
    for (w, c) in t.terms() {
        let letters = w.letters();
        let rest = crate::rea::Word::from_letters(&letters[1..]);
        cof[letters[0] as usize].add_term(rest, c.clone());
    }
    Ok(cof
        .into_iter()
        .enumerate()
        .map(|(g, x)| ((g / n + 1, g % n + 1), x))
        .collect())
}

/// `d² = 0` on `Λ^0 ⊗ Sym^2 → Λ^1 ⊗ Sym^1 → Λ^2 ⊗ Sym^0`: for every word
/// `v`, `d(1 ⊗ P_+ v) = 2 P_+ v` read in `L ⊗ L`, and the second `d`
/// skew-symmetrizes it with `P_-`.
pub fn d_squared_check_r2(ps: &ProjectorSet) -> Result<()> {
    let dim = ps.p_plus.rows();
    for i in 0..dim {
        let mut v = vec![Scalar::zero(); dim];
        v[i] = Scalar::one();
        let sym = ps.plus2(&v)?;
        let once: Vec<Scalar> = sym.iter().map(|x| x * &Scalar::from_int(2)).collect();
        let twice = ps.minus2(&once)?;
        if twice.iter().any(|x| !x.is_zero()) {
            return Err(Error::IdentityFailed(format!("d^2 on word {i}")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::gradient_matrices;

    fn cases() -> Vec<HeckeSymmetry> {
        vec![
            HeckeSymmetry::flip(2).unwrap(),
            HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5)).unwrap(),
            HeckeSymmetry::q_super(1, 1, Scalar::ratio(9, 7)).unwrap(),
        ]
    }

    #[test]
    fn trace_vectors_agree() {
        for hs in cases() {
            for k in [2, 3] {
                let t = trace_vector(k, &hs).unwrap();
                assert_eq!(t.words.len(), 4usize.pow(k as u32));
            }
        }
    }

    #[test]
    fn conjecture_for_squares() {
        for hs in cases() {
            let ps = ProjectorSet::build(&hs).unwrap();
            assert!(
                conjecture1_check(2, &hs, &ps).unwrap().holds(),
                "{}",
                hs.label()
            );
        }
    }

    #[test]
    fn conjecture_for_cubes_at_xi_zero() {
        for hs in [
            HeckeSymmetry::flip(2).unwrap(),
            HeckeSymmetry::superflip(1, 1).unwrap(),
        ] {
            let ps = ProjectorSet::build(&hs).unwrap();
            assert!(
                conjecture1_check(3, &hs, &ps).unwrap().holds(),
                "{}",
                hs.label()
            );
        }
    }

    #[test]
    fn cubes_lose_the_r2_component_when_deformed() {
        // P+^(3) Tr_R L^3 lands in span(I_A, I_B) while P+2 Tr_R L^3 keeps
        // ξ R_2 / 2_q^2, and the three structures are independent
        for hs in cases().into_iter().skip(1) {
            let ps = ProjectorSet::build(&hs).unwrap();
            assert!(matches!(
                conjecture1_check(3, &hs, &ps),
                Err(Error::ConjectureFailed(_))
            ));
            let v = trace_vector(3, &hs).unwrap().words;
            let st = Structures::new(&hs).unwrap();
            let e = |m: &Matrix| dense(&structure_element(&hs, 3, m).unwrap(), 3).unwrap();
            let (ia, ib, r2) = (e(&st.ia), e(&st.ib), e(&st.r2));
            let span = |extra: &[Scalar]| {
                Matrix::from_fn(64, 3, |r, c| [&ia, &ib, extra][c][r].clone()).rank()
            };
            assert_eq!(span(&r2), 3);
            assert_eq!(span(&ps.plus3(P3Form::First, &v)), 2);
            assert_eq!(span(&ps.plus_at(2, &v)), 3);
        }
    }

    #[test]
    fn conjecture_is_not_vacuous() {
        // a non-symmetric element must fail the k = 2 test
        let hs = HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5)).unwrap();
        let ps = ProjectorSet::build(&hs).unwrap();
        let x = dense(&NCPoly::gen(2, 1, 2).mul(&NCPoly::gen(2, 2, 1)), 2).unwrap();
        assert_ne!(ps.plus2(&x).unwrap(), x);
        let r2 = r_at(&hs, 2, 3);
        let y = dense(&structure_element(&hs, 3, &r2).unwrap(), 3).unwrap();
        assert_ne!(ps.plus_at(1, &y), y);
    }

    #[test]
    fn action_table() {
        for hs in cases() {
            let ps = ProjectorSet::build(&hs).unwrap();
            let rep = p2_action_identity(&hs, &ps).unwrap();
            assert_eq!(rep.rows.len(), 4 + 4 + 8);
        }
    }

    #[test]
    fn d1_matches_gradient() {
        let hs = HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5)).unwrap();
        let (a, _) = gradient_matrices(2, hs.c(), 3).unwrap();
        for k in 1..=3 {
            for ((i, j), x) in differential_d1(&hs, k).unwrap() {
                // position (j, i) of column k
                assert_eq!(&x, a.get((j - 1) * 2 + (i - 1), k - 1));
            }
        }
    }

    #[test]
    fn d1_of_classical_square() {
        // d(Tr L^2) for commuting variables is 2 Σ l_j^i dl_i^j; the first
        // letter cofactor carries half of it
        let hs = HeckeSymmetry::flip(2).unwrap();
        for ((i, j), x) in differential_d1(&hs, 2).unwrap() {
            assert_eq!(x, NCPoly::gen(2, j, i));
        }
    }

    #[test]
    fn d_squared() {
        for hs in cases() {
            d_squared_check_r2(&ProjectorSet::build(&hs).unwrap()).unwrap();
        }
    }
}
