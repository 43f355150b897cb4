//! Subsets of and functions on `Z_m`: autocorrelation, convolution, the
//! Fourier transform and the decomposition of `Z_m` into unit orbits.

mod fourier;
mod orbits;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use fourier::{coset_profile, dft, dft_complex, ComplexVectorOf};
pub use orbits::{is_union_of_unit_orbits, unit_orbits, UnitOrbit};

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The units of `Z_m`, ascending.
pub fn units(m: usize) -> Vec<usize> {
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|&a| gcd(a, m) == 1).collect()
}

/// A subset of `Z_m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    modulus: usize,
    bits: FixedBitSet,
}

impl ResidueSet {
    pub fn empty(modulus: usize) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        ResidueSet { modulus, bits: FixedBitSet::with_capacity(modulus) }
    }

    pub fn full(modulus: usize) -> Self {
        let mut s = Self::empty(modulus);
        s.bits.insert_range(..);
        s
    }

    /// Builds a set from arbitrary integers, reducing each modulo `m`.
    pub fn from_residues(modulus: usize, residues: impl IntoIterator<Item = i64>) -> Self {
        let mut s = Self::empty(modulus);
        for r in residues {
            s.bits.insert(r.rem_euclid(modulus as i64) as usize);
        }
        s
    }

    /// Builds a set, rejecting values outside `[0, m)`.
    pub fn try_from_residues(modulus: usize, residues: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(modulus);
        for r in residues {
            if r >= modulus {
                return Err(Error::ResidueOutOfRange { value: r, modulus });
            }
            s.bits.insert(r);
        }
        Ok(s)
    }

    /// Parses `"a,b,c"`; the empty string is the empty set. Values are
    /// reduced modulo `m`.
    pub fn parse(modulus: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "∅" {
            return Ok(Self::empty(modulus));
        }
        let mut values = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("not an integer residue: {tok:?}")))?;
            values.push(v);
        }
        Ok(Self::from_residues(modulus, values))
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x % self.modulus)
    }

    pub fn insert(&mut self, x: usize) {
        self.bits.insert(x % self.modulus);
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    /// `{a·x : x ∈ A}` for any integer `a` (not necessarily a unit).
    pub fn scaled(&self, a: i64) -> Self {
        let m = self.modulus as i64;
        Self::from_residues(self.modulus, self.iter().map(|x| (x as i64 * a).rem_euclid(m)))
    }

    /// `b + A`.
    pub fn shifted(&self, b: i64) -> Self {
        let m = self.modulus;
        let b = b.rem_euclid(m as i64) as usize;
        let mut s = Self::empty(m);
        for x in self.iter() {
            s.bits.insert((x + b) % m);
        }
        s
    }

    /// `−A`.
    pub fn negated(&self) -> Self {
        self.scaled(-1)
    }

    /// `b + aA`, requiring `a` to be a unit modulo `m`.
    pub fn affine_image(&self, a: i64, b: i64) -> Result<Self> {
        let m = self.modulus;
        let a_red = a.rem_euclid(m as i64) as usize;
        if gcd(a_red, m) != 1 {
            return Err(Error::NotAUnit { value: a_red, modulus: m });
        }
        Ok(self.scaled(a).shifted(b))
    }

    pub fn intersection_count(&self, other: &Self) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.bits.union_with(&other.bits);
        s
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        s.bits.toggle_range(..);
        s
    }

    /// Members not present in `other`.
    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.bits.difference_with(&other.bits);
        s
    }

    /// Characteristic function `Δ_A` as an integer vector.
    pub fn indicator(&self) -> IntVector {
        let mut v = vec![0; self.modulus];
        for x in self.iter() {
            v[x] = 1;
        }
        IntVector::new(v)
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}} mod {}", self, self.modulus)
    }
}

impl PartialOrd for ResidueSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the ascending member lists.
impl Ord for ResidueSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.modulus.cmp(&other.modulus).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl Serialize for ResidueSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// An exact integer-valued function on `Z_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IntVector {
    values: Vec<i64>,
}

impl IntVector {
    pub fn new(values: Vec<i64>) -> Self {
        assert!(!values.is_empty(), "modulus must be positive");
        IntVector { values }
    }

    pub fn zeros(modulus: usize) -> Self {
        Self::new(vec![0; modulus])
    }

    /// `Δ_x`, the indicator of a single residue.
    pub fn delta(modulus: usize, x: usize) -> Self {
        let mut v = Self::zeros(modulus);
        v.values[x % modulus] = 1;
        v
    }

    pub fn modulus(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, z: usize) -> i64 {
        self.values[z % self.values.len()]
    }

    /// `z ↦ f(−z)`.
    pub fn reflected(&self) -> Self {
        let m = self.modulus();
        Self::new((0..m).map(|z| self.values[(m - z) % m]).collect())
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }
}

/// Cyclic convolution `(f*g)(z) = Σ_i f(i) g(z − i)`, exact.
pub fn convolve(f: &IntVector, g: &IntVector) -> Result<IntVector> {
    let m = f.modulus();
    if g.modulus() != m {
        return Err(Error::ModulusMismatch { left: m, right: g.modulus() });
    }
    let mut out = vec![0i64; m];
    for (i, &fi) in f.values.iter().enumerate().filter(|(_, &v)| v != 0) {
        for (z, slot) in out.iter_mut().enumerate() {
            *slot += fi * g.values[(z + m - i) % m];
        }
    }
    Ok(IntVector::new(out))
}

/// `output[i] = |A ∩ (i + A)|` for every `i ∈ Z_m`.
pub fn autocorrelation(a: &ResidueSet) -> IntVector {
    let m = a.modulus();
    let values = (0..m).map(|i| a.intersection_count(&a.shifted(i as i64)) as i64).collect();
    IntVector::new(values)
}
