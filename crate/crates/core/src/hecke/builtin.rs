//! Matrices of the built-in braidings, in braid form.

use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Parity vector with `m` even indices followed by `n` odd ones.
pub fn parities(m: usize, n: usize) -> Vec<bool> {
    (0..m + n).map(|i| i >= m).collect()
}

/// `e_i ⊗ e_j -> (-1)^{p(i)p(j)} e_j ⊗ e_i`.
pub fn superflip_matrix(parity: &[bool]) -> Matrix {
    let n = parity.len();
    let mut r = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let s = if parity[i] && parity[j] { -1 } else { 1 };
            r[(j * n + i, i * n + j)] = Scalar::from_int(s);
        }
    }
    r
}

/// Graded Drinfeld-Jimbo braiding
/// `Σ_i q_i e_ii⊗e_ii + Σ_{i≠j} (-1)^{p(i)p(j)} e_ji⊗e_ij + ξ Σ_{i<j} e_ii⊗e_jj`
/// with `q_i = q` on even and `-q^{-1}` on odd indices. All parities even
/// gives the GL(N) braiding.
pub fn q_super_matrix(parity: &[bool], q: &Scalar) -> Matrix {
    let n = parity.len();
    let qinv = q.inv().expect("q must be nonzero");
    let xi = q - &qinv;
    let mut r = superflip_matrix(parity);
    for i in 0..n {
        r[(i * n + i, i * n + i)] = if parity[i] { -&qinv } else { q.clone() };
        for j in i + 1..n {
            r[(i * n + j, i * n + j)] = xi.clone();
        }
    }
    r
}
