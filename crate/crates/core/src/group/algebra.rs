use std::ops::{Add, Sub};

use super::{Group, GroupElement};

/// An element of the integer group algebra `ZG`, one coefficient per
/// group element (indexed like [`GroupElement::index`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    coeffs: Vec<i64>,
}

impl GroupAlgebraElement {
    pub fn zero(group: &Group) -> Self {
        GroupAlgebraElement { coeffs: vec![0; group.order()] }
    }

    /// The identity element `1` of the algebra.
    pub fn one(group: &Group) -> Self {
        let mut x = Self::zero(group);
        x.coeffs[0] = 1;
        x
    }

    /// The class sum of a set of elements.
    pub fn from_set<'a>(group: &Group, set: impl IntoIterator<Item = &'a GroupElement>) -> Self {
        let mut x = Self::zero(group);
        for g in set {
            x.coeffs[g.index()] += 1;
        }
        x
    }

    pub fn from_indices(group: &Group, set: impl IntoIterator<Item = usize>) -> Self {
        let mut x = Self::zero(group);
        for i in set {
            x.coeffs[i] += 1;
        }
        x
    }

    pub fn coeff(&self, index: usize) -> i64 {
        self.coeffs[index]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn scale(&self, k: i64) -> Self {
        GroupAlgebraElement { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// `x^(−1) = Σ x_g g⁻¹`.
    pub fn inverted(&self, group: &Group) -> Self {
        let mut out = vec![0; self.coeffs.len()];
        for (g, &c) in self.coeffs.iter().enumerate() {
            out[group.inv_index(g)] += c;
        }
        GroupAlgebraElement { coeffs: out }
    }

    /// Product in `ZG`, exact.
    pub fn mul(&self, other: &Self, group: &Group) -> Self {
        let mut out = vec![0; self.coeffs.len()];
        for (g, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (h, &b) in other.coeffs.iter().enumerate().filter(|(_, &b)| b != 0) {
                out[group.mul_index(g, h)] += a * b;
            }
        }
        GroupAlgebraElement { coeffs: out }
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn add(self, rhs: Self) -> GroupAlgebraElement {
        GroupAlgebraElement { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn sub(self, rhs: Self) -> GroupAlgebraElement {
        GroupAlgebraElement { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}
