use std::collections::BTreeMap;

use serde::Serialize;

use crate::cayley::{build_from_spec, ConnectionSpec};
use crate::drg::{check_cayley, IntersectionArray};
use crate::error::{Error, Result};
use crate::group::{Group, GroupFamily};
use crate::residue::ResidueSet;

/// The exact data behind a Hadamard pair `(R, T)`: the structural
/// constraints and `|R∩(i+R)| + |T∩(i+T)|` for every even `i ∉ {0, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HadamardCertificate {
    pub family: GroupFamily,
    pub n: usize,
    #[serde(rename = "R")]
    pub r: ResidueSet,
    #[serde(rename = "T")]
    pub t: ResidueSet,
    pub mu_check: BTreeMap<usize, usize>,
    pub accepted: bool,
    /// The verified array `{n, n−1, n/2, 1; 1, n/2, n−1, n}` when accepted.
    pub array: Option<String>,
}

/// `{n, n−1, n/2, 1; 1, n/2, n−1, n}`.
pub fn hadamard_array(n: usize) -> IntersectionArray {
    IntersectionArray::new(vec![n, n - 1, n / 2, 1], vec![1, n / 2, n - 1, n]).expect("valid for even n ≥ 4")
}

fn violation(msg: impl Into<String>) -> Error {
    Error::StructuralViolation(msg.into())
}

/// Checks the structural constraints for `family ∈ {SD, PSD}`:
/// `R = −R` odd, `|R| = |T| = n/2`, `R∩(n+R) = T∩(n+T) = ∅`, and `T` even
/// (SD) or `T = n − T` odd (PSD).
pub(crate) fn structural_check(family: GroupFamily, r: &ResidueSet, t: &ResidueSet) -> Result<()> {
    let n = family.parameter();
    let m = 2 * n;
    if r.len() != n / 2 {
        return Err(violation(format!("|R| = {} (must be n/2 = {})", r.len(), n / 2)));
    }
    if t.len() != n / 2 {
        return Err(violation(format!("|T| = {} (must be n/2 = {})", t.len(), n / 2)));
    }
    if let Some(x) = r.iter().find(|x| x % 2 == 0) {
        return Err(violation(format!("R contains the even residue {x}")));
    }
    if r.negated() != *r {
        return Err(violation("R is not equal to -R"));
    }
    if !r.is_disjoint(&r.shifted(n as i64)) {
        return Err(violation("R meets n+R"));
    }
    if !t.is_disjoint(&t.shifted(n as i64)) {
        return Err(violation("T meets n+T"));
    }
    match family {
        GroupFamily::SemiDihedral(_) => {
            if let Some(x) = t.iter().find(|x| x % 2 == 1) {
                return Err(violation(format!("T contains the odd residue {x}")));
            }
        }
        GroupFamily::PseudoSemiDihedral(_) => {
            if let Some(x) = t.iter().find(|x| x % 2 == 0) {
                return Err(violation(format!("T contains the even residue {x}")));
            }
            let reflected = ResidueSet::from_residues(m, t.iter().map(|x| n as i64 - x as i64));
            if reflected != *t {
                return Err(violation("T is not equal to n-T"));
            }
        }
        _ => unreachable!("family checked by caller"),
    }
    Ok(())
}

/// `|R∩(i+R)| + |T∩(i+T)|` for every `i ∈ 2Z_2n ∖ {0, n}`.
pub(crate) fn mu_check(n: usize, r: &ResidueSet, t: &ResidueSet) -> BTreeMap<usize, usize> {
    (2..2 * n)
        .step_by(2)
        .filter(|&i| i != n)
        .map(|i| (i, r.intersection_count(&r.shifted(i as i64)) + t.intersection_count(&t.shifted(i as i64))))
        .collect()
}

/// Builds the full certificate. A failed structural constraint is an
/// error naming it; a failed count gives `accepted = false`. On acceptance
/// the graph is built and must have the Hadamard array, otherwise the
/// result is [`Error::Inconsistency`].
pub fn verify_hadamard_certificate(
    family: GroupFamily,
    r: &ResidueSet,
    t: &ResidueSet,
) -> Result<HadamardCertificate> {
    if !matches!(family, GroupFamily::SemiDihedral(_) | GroupFamily::PseudoSemiDihedral(_)) {
        return Err(Error::InvalidParameter(format!("Hadamard pairs are defined for sd and psd, not {}", family.name())));
    }
    let group = Group::new(family)?;
    let n = family.parameter();
    for set in [r, t] {
        if set.modulus() != group.modulus() {
            return Err(Error::ModulusMismatch { left: group.modulus(), right: set.modulus() });
        }
    }
    structural_check(family, r, t)?;
    let checks = mu_check(n, r, t);
    let accepted = checks.values().all(|&v| v == n / 2);
    let mut array = None;
    if accepted {
        let x = build_from_spec(&ConnectionSpec::new(family, r.clone(), t.clone())?)?;
        let report = check_cayley(&x)?;
        let want = hadamard_array(n);
        if report.array.as_ref() != Some(&want) || !report.antipodal || !report.bipartite {
            return Err(Error::Inconsistency(format!(
                "{family} pair ({r}; {t}) passes every count but the graph is not {want}"
            )));
        }
        array = Some(want.to_string());
    }
    Ok(HadamardCertificate { family, n, r: r.clone(), t: t.clone(), mu_check: checks, accepted, array })
}
