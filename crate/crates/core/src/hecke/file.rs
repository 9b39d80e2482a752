//! R-matrix files.
//!
//! JSON (or TOML, chosen by the `.toml` extension) with fields `dim`,
//! optional `q` (defaults to 1) and `entries`, each entry being
//! `{out_pair: [k, l], in_pair: [i, j], value: "<scalar>"}` with 1-based
//! indices, meaning `R(e_i ⊗ e_j) = Σ value · e_k ⊗ e_l`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{parse, Scalar};

#[derive(Debug, Deserialize, Serialize)]
struct RawFile {
    dim: usize,
    #[serde(default)]
    q: Option<String>,
    entries: Vec<RawEntry>,
}

#[derive(Debug, Deserialize, Serialize)]
struct RawEntry {
    out_pair: [usize; 2],
    in_pair: [usize; 2],
    value: String,
}

/// A parsed, not yet validated, R-matrix file.
#[derive(Clone, Debug)]
pub struct RMatrixFile {
    pub dim: usize,
    pub q: Scalar,
    pub matrix: Matrix,
}

pub fn read_rmatrix(path: &Path) -> Result<RMatrixFile> {
    let text = std::fs::read_to_string(path)?;
    let toml = path.extension().is_some_and(|e| e == "toml");
    parse_rmatrix(&text, toml)
}

pub fn parse_rmatrix(text: &str, toml_format: bool) -> Result<RMatrixFile> {
    let raw: RawFile = if toml_format {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?
    } else {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?
    };
    let n = raw.dim;
    if n == 0 {
        return Err(Error::Parse("dim must be positive".into()));
    }
    let q = match &raw.q {
        Some(s) => parse(s)?,
        None => Scalar::one(),
    };
    let mut matrix = Matrix::zeros(n * n, n * n);
    let check = |i: usize| {
        if i == 0 || i > n {
            Err(Error::IndexOutOfRange { index: i, max: n })
        } else {
            Ok(i - 1)
        }
    };
    for e in &raw.entries {
        let (k, l) = (check(e.out_pair[0])?, check(e.out_pair[1])?);
        let (i, j) = (check(e.in_pair[0])?, check(e.in_pair[1])?);
        let v = parse(&e.value)?;
        let slot = &mut matrix[(k * n + l, i * n + j)];
        *slot += &v;
    }
    Ok(RMatrixFile { dim: n, q, matrix })
}

/// Serializes an `N² × N²` matrix as a JSON R-matrix file.
pub fn write_rmatrix_json(n: usize, q: &Scalar, matrix: &Matrix) -> String {
    let mut entries = Vec::new();
    for row in 0..n * n {
        for col in 0..n * n {
            let v = &matrix[(row, col)];
            if !v.is_zero() {
                entries.push(RawEntry {
                    out_pair: [row / n + 1, row % n + 1],
                    in_pair: [col / n + 1, col % n + 1],
                    value: v.to_string(),
                });
            }
        }
    }
    let raw = RawFile {
        dim: n,
        q: Some(q.to_string()),
        entries,
    };
    serde_json::to_string_pretty(&raw).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{parities, q_super_matrix};

    #[test]
    fn json_roundtrip() {
        let r = q_super_matrix(&parities(2, 0), &Scalar::q());
        let text = write_rmatrix_json(2, &Scalar::q(), &r);
        let f = parse_rmatrix(&text, false).unwrap();
        assert_eq!(f.matrix, r);
        assert_eq!(f.q, Scalar::q());
    }

    #[test]
    fn toml_and_errors() {
        let text = r#"
dim = 1
q = "1"
[[entries]]
out_pair = [1, 1]
in_pair = [1, 1]
value = "1"
"#;
        let f = parse_rmatrix(text, true).unwrap();
        assert_eq!(f.matrix, Matrix::identity(1));
        let bad =
            r#"{"dim": 2, "entries": [{"out_pair": [3, 1], "in_pair": [1, 1], "value": "1"}]}"#;
        assert!(matches!(
            parse_rmatrix(bad, false),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(parse_rmatrix("{", false), Err(Error::Parse(_))));
    }
}
