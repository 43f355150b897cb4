//! Classification of semi-dihedrants and pseudo-semi-dihedrants, and the
//! exhaustive search for Hadamard pairs.

mod hadamard;
mod search;

use serde::Serialize;

use crate::cayley::{build_from_spec, CayleyGraph, ConnectionSpec};
use crate::design::{check_symmetry_condition, verify_difference_set, DesignReport};
use crate::drg::{check_cayley, distance_partition, recognize_named, NamedGraph, StructureReport};
use crate::error::{Error, Result};
use crate::group::{index2_subgroups, Group, GroupElement, GroupFamily};
use crate::residue::{units, ResidueSet};

pub use hadamard::{hadamard_array, verify_hadamard_certificate, HadamardCertificate};
pub use search::{reference_search_hadamard_pairs, search_hadamard_pairs, SearchResult, MAX_REFERENCE_N, MAX_SEARCH_N};

/// Which graph a distance-regular semi-dihedrant or pseudo-semi-dihedrant is,
/// with the data that proves it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all_fields = "camelCase")]
pub enum TheoremCase {
    /// `K_{4n}`.
    Complete { order: usize },
    /// `K_{t×m}`, `tm = 4n`.
    CompleteMultipartite { parts: usize, size: usize },
    /// `K_{2n,2n} − 2nK_2`.
    CompleteBipartiteMinusMatching { m: usize },
    /// Bipartition class `⟨ρ⟩`; `D = τS = ρ^{sT}` is a difference set.
    DiffSetOverRho { subgroup: String, design: DesignReport },
    /// Bipartition class `⟨ρ²,τ⟩`; `D = ρ^{−1}S` is a difference set. For
    /// PSD the same set is also checked in `Z_n ⊕ Z_2` via
    /// `ρ^{2j}τ^e ↦ (j, e)`.
    DiffSetOverH2 { subgroup: String, design: DesignReport, product_form: Option<DesignReport> },
    /// Bipartition class `⟨ρ²,ρτ⟩`; `D = ρ^{−1}S` is a difference set.
    DiffSetOverH3 { subgroup: String, design: DesignReport },
    /// Diameter 4: an accepted Hadamard certificate for `(R, T)`.
    HadamardPair { certificate: HadamardCertificate },
    NotDistanceRegular,
}

impl TheoremCase {
    pub fn name(&self) -> &'static str {
        match self {
            TheoremCase::Complete { .. } => "Complete",
            TheoremCase::CompleteMultipartite { .. } => "CompleteMultipartite",
            TheoremCase::CompleteBipartiteMinusMatching { .. } => "CompleteBipartiteMinusMatching",
            TheoremCase::DiffSetOverRho { .. } => "DiffSetOverRho",
            TheoremCase::DiffSetOverH2 { .. } => "DiffSetOverH2",
            TheoremCase::DiffSetOverH3 { .. } => "DiffSetOverH3",
            TheoremCase::HadamardPair { .. } => "HadamardPair",
            TheoremCase::NotDistanceRegular => "NotDistanceRegular",
        }
    }

    pub fn is_distance_regular(&self) -> bool {
        !matches!(self, TheoremCase::NotDistanceRegular)
    }
}

fn check_family(family: GroupFamily) -> Result<usize> {
    if !matches!(family, GroupFamily::SemiDihedral(_) | GroupFamily::PseudoSemiDihedral(_)) {
        return Err(Error::InvalidParameter(format!("classification covers sd and psd, not {}", family.name())));
    }
    let n = family.parameter();
    if !n.is_power_of_two() || n < 8 {
        return Err(Error::UnsupportedN(n));
    }
    Ok(n)
}

/// Least `(R', T')` in the isomorphism class given by the affine maps.
///
/// SD: `(aR, b + aT)` over units `a` and even `b`; every such map keeps
/// `T = (n+1)T`. PSD: `(R, T)` and `(R, n + T)`.
pub fn canonicalize(family: GroupFamily, r: &ResidueSet, t: &ResidueSet) -> Result<(ResidueSet, ResidueSet)> {
    let n = family.parameter();
    let m = 2 * n;
    for set in [r, t] {
        if set.modulus() != m {
            return Err(Error::ModulusMismatch { left: m, right: set.modulus() });
        }
    }
    match family {
        GroupFamily::SemiDihedral(_) => {
            let mut best: Option<(ResidueSet, ResidueSet)> = None;
            for a in units(m) {
                let ra = r.scaled(a as i64);
                let ta = t.scaled(a as i64);
                for b in (0..m).step_by(2) {
                    let cand = (ra.clone(), ta.shifted(b as i64));
                    if best.as_ref().is_none_or(|cur| cand < *cur) {
                        best = Some(cand);
                    }
                }
            }
            Ok(best.expect("units are non-empty"))
        }
        GroupFamily::PseudoSemiDihedral(_) => {
            let shifted = (r.clone(), t.shifted(n as i64));
            let own = (r.clone(), t.clone());
            Ok(own.min(shifted))
        }
        _ => Err(Error::InvalidParameter(format!("canonical forms cover sd and psd, not {}", family.name()))),
    }
}

/// Classifies the spec; see [`classify_with_report`].
pub fn classify(spec: &ConnectionSpec) -> Result<TheoremCase> {
    classify_with_report(spec).map(|(case, _)| case)
}

/// Builds the graph, decides distance-regularity and, when it holds, names
/// the case with a verified witness. The report is `None` for a
/// disconnected graph.
///
/// Trivial graphs are recognized first. A bipartite graph of diameter 3 is
/// matched by its bipartition class `H = N_0 ∪ N_2`, which must be one of
/// the index-2 subgroups, and `D = a⁻¹S` (least `a ∉ H`) must be a
/// non-trivial difference set in `H` with `D⁽⁻¹⁾ = aDa`. Diameter 4 needs an
/// accepted Hadamard certificate. A distance-regular graph that fits none
/// of these is an [`Error::Inconsistency`].
pub fn classify_with_report(spec: &ConnectionSpec) -> Result<(TheoremCase, Option<StructureReport>)> {
    check_family(spec.family())?;
    let x = build_from_spec(spec)?;
    if !x.is_connected() {
        return Ok((TheoremCase::NotDistanceRegular, None));
    }
    let report = check_cayley(&x)?;
    let Some(array) = report.array.clone() else {
        return Ok((TheoremCase::NotDistanceRegular, Some(report)));
    };
    let case = match recognize_named(x.graph()) {
        NamedGraph::Complete { order } => TheoremCase::Complete { order },
        NamedGraph::CompleteMultipartite { parts, size } => TheoremCase::CompleteMultipartite { parts, size },
        NamedGraph::CompleteBipartiteMinusMatching { m } => TheoremCase::CompleteBipartiteMinusMatching { m },
        named @ (NamedGraph::Cycle { .. } | NamedGraph::ConferenceParameters { .. }) => {
            return Err(Error::Inconsistency(format!("{} is distance-regular but recognized as {named}", spec.descriptor_text())));
        }
        NamedGraph::Other => match (array.diameter(), report.bipartite) {
            (3, true) => bipartite_case(spec, &x)?,
            (4, true) if report.antipodal_index == Some(2) => {
                let certificate = verify_hadamard_certificate(spec.family(), spec.r(), spec.t()).map_err(|e| {
                    Error::Inconsistency(format!("{} has array {array} but fails the pair conditions: {e}", spec.descriptor_text()))
                })?;
                if !certificate.accepted {
                    return Err(Error::Inconsistency(format!(
                        "{} has array {array} but fails the autocorrelation counts",
                        spec.descriptor_text()
                    )));
                }
                TheoremCase::HadamardPair { certificate }
            }
            _ => {
                return Err(Error::Inconsistency(format!(
                    "{} is distance-regular with array {array} outside every listed case",
                    spec.descriptor_text()
                )));
            }
        },
    };
    Ok((case, Some(report)))
}

fn bipartite_case(spec: &ConnectionSpec, x: &CayleyGraph) -> Result<TheoremCase> {
    let group = x.group();
    let part = distance_partition(x.graph(), 0)?;
    let mut class = part.layer(2).clone();
    class.insert(0);
    let subgroups = index2_subgroups(group);
    let Some(pos) = subgroups.iter().position(|h| *h.mask() == class) else {
        return Err(Error::Inconsistency(format!(
            "{}: the bipartition class of the identity is not an index-2 subgroup",
            spec.descriptor_text()
        )));
    };
    let h = &subgroups[pos];
    let a = h.first_non_member().expect("proper subgroup");
    let ai = group.inv_index(a.index());
    let d: Vec<GroupElement> = x.connection().iter().map(|s| group.wrap(group.mul_index(ai, s.index()))).collect();
    let design = verify_difference_set(h, &d)?;
    let design = match design {
        Some(r) if !r.trivial && check_symmetry_condition(group, &d, a)? => r,
        _ => {
            return Err(Error::Inconsistency(format!(
                "{}: bipartite of diameter 3 over {} but a⁻¹S is not a non-trivial difference set",
                spec.descriptor_text(),
                h.label()
            )));
        }
    };
    let subgroup = h.label().to_string();
    Ok(match pos {
        0 => TheoremCase::DiffSetOverRho { subgroup, design },
        1 => {
            let product_form = match spec.family() {
                GroupFamily::PseudoSemiDihedral(n) => Some(product_form(spec, n, &d, &design)?),
                _ => None,
            };
            TheoremCase::DiffSetOverH2 { subgroup, design, product_form }
        }
        _ => TheoremCase::DiffSetOverH3 { subgroup, design },
    })
}

/// `D ⊆ ⟨ρ², τ⟩ ≤ PSD_n` carried to `Z_n ⊕ Z_2` by `ρ^{2j}τ^e ↦ (j, e)`.
fn product_form(spec: &ConnectionSpec, n: usize, d: &[GroupElement], design: &DesignReport) -> Result<DesignReport> {
    let target = Group::new(GroupFamily::CyclicTimesZ2(n))?;
    let mapped = d
        .iter()
        .map(|g| {
            let (i, e) = g.parts();
            target.element(i / 2 + if e { n } else { 0 })
        })
        .collect::<Result<Vec<_>>>()?;
    match verify_difference_set(&target.full(), &mapped)? {
        Some(r) if r.parameters == design.parameters => Ok(r),
        _ => Err(Error::Inconsistency(format!(
            "{}: the difference set in ⟨ρ²,τ⟩ does not carry over to Z_{n}+Z_2",
            spec.descriptor_text()
        ))),
    }
}

impl ConnectionSpec {
    fn descriptor_text(&self) -> String {
        format!("{}(R = {{{}}}, T = {{{}}})", self.family(), self.r(), self.t())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(m: usize, xs: &[i64]) -> ResidueSet {
        ResidueSet::from_residues(m, xs.iter().copied())
    }

    #[test]
    fn known_pairs() {
        let c = classify(&ConnectionSpec::sd(8, &[5, 7, 9, 11], &[4, 8, 10, 14]).unwrap()).unwrap();
        let TheoremCase::HadamardPair { certificate } = c else { panic!("{c:?}") };
        assert!(certificate.accepted);
        let c = classify(&ConnectionSpec::psd(8, &[5, 7, 9, 11], &[3, 5, 9, 15]).unwrap()).unwrap();
        assert_eq!(c.name(), "HadamardPair");
    }

    #[test]
    fn trivial_cases() {
        let all: Vec<i64> = (1..16).collect();
        let every: Vec<i64> = (0..16).collect();
        let c = classify(&ConnectionSpec::sd(8, &all, &every).unwrap()).unwrap();
        assert_eq!(c, TheoremCase::Complete { order: 32 });
        let c = classify(&ConnectionSpec::sd(8, &[], &all).unwrap()).unwrap();
        assert_eq!(c, TheoremCase::CompleteBipartiteMinusMatching { m: 16 });
        // SD_8 ∖ ⟨ρ²⟩: the cosets of ⟨ρ²⟩ are the parts
        let odd: Vec<i64> = (1..16).step_by(2).collect();
        let c = classify(&ConnectionSpec::sd(8, &odd, &every).unwrap()).unwrap();
        assert_eq!(c, TheoremCase::CompleteMultipartite { parts: 4, size: 8 });
    }

    #[test]
    fn not_distance_regular() {
        let c = classify(&ConnectionSpec::sd(8, &[1, 15], &[0]).unwrap()).unwrap();
        assert_eq!(c, TheoremCase::NotDistanceRegular);
        // a 16-cycle component: disconnected
        let (c, report) = classify_with_report(&ConnectionSpec::sd(8, &[1, 15], &[]).unwrap()).unwrap();
        assert_eq!(c, TheoremCase::NotDistanceRegular);
        assert!(report.is_none());
    }

    #[test]
    fn rejects_other_families() {
        let spec = ConnectionSpec::from_slices(GroupFamily::Dihedral(8), &[1, 7], &[]).unwrap();
        assert!(matches!(classify(&spec), Err(Error::InvalidParameter(_))));
        let spec = ConnectionSpec::sd(4, &[1, 7], &[0]).unwrap();
        assert_eq!(classify(&spec), Err(Error::UnsupportedN(4)));
    }

    #[test]
    fn canonical_forms() {
        let f = GroupFamily::SemiDihedral(8);
        let (r, t) = (set(16, &[5, 7, 9, 11]), set(16, &[4, 8, 10, 14]));
        let c = canonicalize(f, &r, &t).unwrap();
        assert_eq!(canonicalize(f, &c.0, &c.1).unwrap(), c);
        let image = canonicalize(f, &r.scaled(3), &t.scaled(3).shifted(2)).unwrap();
        assert_eq!(image, c);

        let f = GroupFamily::PseudoSemiDihedral(8);
        let a = canonicalize(f, &r, &set(16, &[3, 5, 9, 15])).unwrap();
        let b = canonicalize(f, &r, &set(16, &[11, 13, 1, 7])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn json_tag() {
        let v = serde_json::to_value(TheoremCase::CompleteBipartiteMinusMatching { m: 16 }).unwrap();
        assert_eq!(v["case"], "CompleteBipartiteMinusMatching");
        assert_eq!(v["m"], 16);
    }
}
