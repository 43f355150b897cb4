use num_traits::Float;
use serde::Serialize;

use super::IntersectionArray;
use crate::error::{Error, Result};

/// Distinct eigenvalues in decreasing order with their multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReportOf<F> {
    pub eigenvalues: Vec<F>,
    pub multiplicities: Vec<usize>,
}

impl<F: Float> SpectrumReportOf<F> {
    /// `Σ m_j θ_j`, the trace of the adjacency matrix (zero for a graph).
    pub fn trace(&self) -> F {
        self.eigenvalues
            .iter()
            .zip(&self.multiplicities)
            .fold(F::zero(), |acc, (&t, &m)| acc + t * F::from(m).unwrap())
    }
}

/// Eigenvalues of a symmetric tridiagonal matrix by implicit QL with
/// Wilkinson shifts. `off[i]` couples rows `i` and `i + 1`.
pub(crate) fn tridiagonal_eigenvalues<F: Float>(diag: &[F], off: &[F]) -> Result<Vec<F>> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = vec![F::zero(); n];
    e[..n.saturating_sub(1)].copy_from_slice(&off[..n.saturating_sub(1)]);
    let two = F::one() + F::one();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= F::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 64 {
                return Err(Error::InvalidArray("eigenvalue iteration did not converge".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(F::one());
            g = d[m] - d[l] + e[l] / (g + if g >= F::zero() { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (F::one(), F::one(), F::zero());
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == F::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = F::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = F::zero();
        }
    }
    Ok(d)
}

/// Spectrum of a distance-regular graph from its intersection array.
///
/// The eigenvalues are those of the tridiagonal matrix with rows
/// `(c_i, a_i, b_i)`, computed on its symmetrization (off-diagonals
/// `√(b_i c_{i+1})`). For each eigenvalue `θ` the standard sequence
/// `u_0 = 1`, `u_1 = θ/k`, `c_i u_{i−1} + a_i u_i + b_i u_{i+1} = θ u_i`
/// gives the multiplicity `|V| / Σ k_i u_i²`.
pub fn intersection_matrix_spectrum<F: Float>(array: &IntersectionArray, order: usize) -> Result<SpectrumReportOf<F>> {
    if array.order() != order {
        return Err(Error::InvalidArray(format!("array describes {} vertices, not {order}", array.order())));
    }
    let d = array.diameter();
    let f = |x: usize| F::from(x).unwrap();
    let diag: Vec<F> = (0..=d).map(|i| f(array.a_at(i))).collect();
    let off: Vec<F> = (0..d).map(|i| (f(array.b_at(i)) * f(array.c_at(i + 1))).sqrt()).collect();
    let mut thetas = tridiagonal_eigenvalues(&diag, &off)?;
    thetas.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));

    let k = f(array.valency());
    let ks = array.layer_sizes();
    let n = f(order);
    let tie = F::from(1e-9).unwrap().max(F::epsilon() * F::from(64.0).unwrap() * k);
    let int_tol = F::from(1e-6).unwrap().max(F::epsilon().sqrt() * F::from(16.0).unwrap());
    let mut eigenvalues: Vec<F> = Vec::new();
    let mut multiplicities: Vec<usize> = Vec::new();
    for theta in thetas {
        let mut u = vec![F::one(), theta / k];
        for i in 1..d {
            let next = ((theta - f(array.a_at(i))) * u[i] - f(array.c_at(i)) * u[i - 1]) / f(array.b_at(i));
            u.push(next);
        }
        let norm = u.iter().zip(&ks).fold(F::zero(), |acc, (&ui, &ki)| acc + ui * ui * f(ki));
        let m = n / norm;
        let rounded = m.round();
        if (m - rounded).abs() > int_tol * F::one().max(m) || rounded < F::one() {
            return Err(Error::InvalidArray(format!(
                "eigenvalue {} has non-integral multiplicity {}",
                theta.to_f64().unwrap_or(f64::NAN),
                m.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let m = rounded.to_usize().expect("positive multiplicity");
        match eigenvalues.last() {
            Some(&prev) if (prev - theta).abs() <= tie => *multiplicities.last_mut().unwrap() += m,
            _ => {
                eigenvalues.push(theta);
                multiplicities.push(m);
            }
        }
    }
    if multiplicities.iter().sum::<usize>() != order {
        return Err(Error::InvalidArray("multiplicities do not sum to the number of vertices".into()));
    }
    Ok(SpectrumReportOf { eigenvalues, multiplicities })
}
