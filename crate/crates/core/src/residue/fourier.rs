use num_complex::Complex;
use num_traits::{Float, FloatConst};

use super::{IntVector, ResidueSet};
use crate::error::{Error, Result};

/// A complex-valued function on `Z_m`. Diagnostic only: nothing in the
/// crate accepts or rejects an object on the strength of these values.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVectorOf<F> {
    pub values: Vec<Complex<F>>,
    pub tolerance: F,
}

impl<F: Float> ComplexVectorOf<F> {
    pub fn modulus(&self) -> usize {
        self.values.len()
    }

    /// Pointwise comparison within `tol` (absolute, per component modulus).
    pub fn approx_eq(&self, other: &Self, tol: F) -> bool {
        self.values.len() == other.values.len()
            && self.values.iter().zip(&other.values).all(|(a, b)| (*a - *b).norm() <= tol)
    }

    /// True when every value is within `tol` of an integer on the real axis.
    pub fn is_integral(&self, tol: F) -> bool {
        self.values.iter().all(|v| v.im.abs() <= tol && (v.re - v.re.round()).abs() <= tol)
    }

    pub fn pointwise_mul(&self, other: &Self) -> Self {
        ComplexVectorOf {
            values: self.values.iter().zip(&other.values).map(|(a, b)| *a * *b).collect(),
            tolerance: self.tolerance.max(other.tolerance),
        }
    }
}

/// `ω^k` with `ω = exp(2πi/m)`; the exponent is reduced first so the
/// angle stays in `[0, 2π)`.
fn root_of_unity<F: Float + FloatConst>(k: usize, m: usize) -> Complex<F> {
    let k = k % m;
    let angle = F::TAU() * F::from(k).unwrap() / F::from(m).unwrap();
    Complex::new(angle.cos(), angle.sin())
}

fn default_tolerance<F: Float>() -> F {
    F::from(1e-9).unwrap().max(F::epsilon() * F::from(64.0).unwrap())
}

/// `(F f)(z) = Σ_i f(i) ω^{iz}`, computed directly in `O(m²)`.
pub fn dft<F: Float + FloatConst>(f: &IntVector) -> ComplexVectorOf<F> {
    let values: Vec<Complex<F>> = f.values().iter().map(|&v| Complex::new(F::from(v).unwrap(), F::zero())).collect();
    dft_complex(&ComplexVectorOf { values, tolerance: default_tolerance() })
}

/// The same transform applied to a complex input, so it can be iterated.
pub fn dft_complex<F: Float + FloatConst>(f: &ComplexVectorOf<F>) -> ComplexVectorOf<F> {
    let m = f.modulus();
    let values = (0..m)
        .map(|z| {
            f.values
                .iter()
                .enumerate()
                .fold(Complex::new(F::zero(), F::zero()), |acc, (i, &v)| acc + v * root_of_unity::<F>(i * z, m))
        })
        .collect();
    ComplexVectorOf { values, tolerance: f.tolerance }
}

/// Coset counts `e_i = |A ∩ (i + rZ_m)|` for `0 <= i < r` together with
/// `Σ e_i ξ^i`, `ξ = ω^{m/r}`, which equals `(F Δ_A)(m/r)`.
pub fn coset_profile<F: Float + FloatConst>(a: &ResidueSet, r: usize) -> Result<(Vec<usize>, Complex<F>)> {
    let m = a.modulus();
    if r == 0 || !m.is_multiple_of(r) {
        return Err(Error::NotADivisor { divisor: r, modulus: m });
    }
    let mut e = vec![0usize; r];
    for x in a.iter() {
        e[x % r] += 1;
    }
    let value = e
        .iter()
        .enumerate()
        .fold(Complex::new(F::zero(), F::zero()), |acc, (i, &c)| {
            acc + root_of_unity::<F>(i, r) * F::from(c).unwrap()
        });
    Ok((e, value))
}
