use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `{b_0, …, b_{d−1}; c_1, …, c_d}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionArray {
    b: Vec<usize>,
    c: Vec<usize>,
}

impl IntersectionArray {
    /// Validates the usual feasibility conditions: `c_1 = 1`, `b` weakly
    /// decreasing and `c` weakly increasing with positive entries,
    /// `b_i + c_i ≤ k`, and every `k_i` integral.
    pub fn new(b: Vec<usize>, c: Vec<usize>) -> Result<Self> {
        let d = b.len();
        if d == 0 || c.len() != d {
            return Err(Error::InvalidArray(format!("need d ≥ 1 entries on each side, got {} and {}", b.len(), c.len())));
        }
        if c[0] != 1 {
            return Err(Error::InvalidArray(format!("c_1 = {} (must be 1)", c[0])));
        }
        let k = b[0];
        if b.iter().chain(&c).any(|&x| x == 0 || x > k) {
            return Err(Error::InvalidArray("entries must lie in [1, k]".into()));
        }
        if b.windows(2).any(|w| w[0] < w[1]) || c.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArray("b must be non-increasing and c non-decreasing".into()));
        }
        for i in 1..d {
            if b[i] + c[i - 1] > k {
                return Err(Error::InvalidArray(format!("b_{i} + c_{i} exceeds k")));
            }
        }
        let mut ki = 1usize;
        for i in 0..d {
            let num = ki * b[i];
            if !num.is_multiple_of(c[i]) {
                return Err(Error::InvalidArray(format!("k_{} = {num}/{} is not an integer", i + 1, c[i])));
            }
            ki = num / c[i];
        }
        Ok(IntersectionArray { b, c })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> usize {
        self.b[0]
    }

    /// `b_0, …, b_{d−1}`.
    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// `c_1, …, c_d`.
    pub fn c(&self) -> &[usize] {
        &self.c
    }

    /// `b_i` with `b_d = 0`.
    pub fn b_at(&self, i: usize) -> usize {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` with `c_0 = 0`.
    pub fn c_at(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = k − b_i − c_i`.
    pub fn a_at(&self, i: usize) -> usize {
        self.valency() - self.b_at(i) - self.c_at(i)
    }

    pub fn a(&self) -> Vec<usize> {
        (0..=self.diameter()).map(|i| self.a_at(i)).collect()
    }

    /// `k_0, …, k_d` from `k_{i+1} = k_i b_i / c_{i+1}`.
    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut out = vec![1];
        for i in 0..self.diameter() {
            let last = out[i];
            out.push(last * self.b[i] / self.c[i]);
        }
        out
    }

    /// Number of vertices, `Σ k_i`.
    pub fn order(&self) -> usize {
        self.layer_sizes().iter().sum()
    }

    pub fn lambda(&self) -> usize {
        self.a_at(1)
    }

    /// `c_2`, when `d ≥ 2`.
    pub fn mu(&self) -> Option<usize> {
        (self.diameter() >= 2).then(|| self.c[1])
    }
}

/// Brace notation, e.g. `{8,7,4,1;1,4,7,8}`.
impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArray(format!("cannot parse {s:?}; expected {{b0,...;c1,...}}"));
        let inner = s.trim().strip_prefix('{').and_then(|x| x.strip_suffix('}')).ok_or_else(bad)?;
        let (bs, cs) = inner.split_once(';').ok_or_else(bad)?;
        let parse = |t: &str| -> Result<Vec<usize>> {
            t.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect()
        };
        Self::new(parse(bs)?, parse(cs)?)
    }
}
