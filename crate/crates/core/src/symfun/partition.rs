use std::fmt;

use crate::error::{Error, Result};

/// Integer partition, stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// `[m|n] = (n^m)`.
    pub fn rect(m: usize, n: usize) -> Partition {
        Partition::upper_lower(m, n, 0, 0)
    }

    /// `[m|n]_r = (n^m, r)`.
    pub fn lower(m: usize, n: usize, r: usize) -> Partition {
        Partition::upper_lower(m, n, 0, r)
    }

    /// `[m|n]^k = ((n+1)^k, n^{m-k})`.
    pub fn upper(m: usize, n: usize, k: usize) -> Partition {
        Partition::upper_lower(m, n, k, 0)
    }

    /// `[m|n]^k_r = ((n+1)^k, n^{m-k}, r)`, requires `k <= m`, `r <= n`.
    pub fn upper_lower(m: usize, n: usize, k: usize, r: usize) -> Partition {
        assert!(
            k <= m && r <= n,
            "shape [{m}|{n}]^{k}_{r} is not a partition"
        );
        let mut parts = vec![(n + 1) as u32; k];
        parts.extend(std::iter::repeat(n as u32).take(m - k));
        parts.push(r as u32);
        Partition::new(parts).expect("weakly decreasing by construction")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Human-readable label of the shape `[m|n]^k_r`.
pub fn shape_label(m: usize, n: usize, k: usize, r: usize) -> String {
    let mut s = format!("[{m}|{n}]");
    if k > 0 {
        s.push_str(&format!("^{k}"));
    }
    if r > 0 {
        s.push_str(&format!("_{r}"));
    }
    s
}
