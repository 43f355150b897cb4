use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, GroupFamily};
use crate::residue::ResidueSet;

/// The residue pair `(R, T)` describing the connection set `ρ^R ∪ ρ^T τ`.
///
/// `R` and `T` live in `Z_M` where `M` is the order of `⟨ρ⟩` (so `Z_2n` for
/// the order-`4n` families). For cyclic groups `T` must be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConnectionSpec {
    group: Group,
    r: ResidueSet,
    t: ResidueSet,
}

impl ConnectionSpec {
    /// Validates and builds a spec. The closure rule for `T` depends on the
    /// family: `T = (n+1)T` for SD, `T = (n−1)T` for PSD, `T = n + T` for
    /// dicyclic, `T = −T` for `Z_n ⊕ Z_2`, unrestricted for dihedral.
    pub fn new(family: GroupFamily, r: ResidueSet, t: ResidueSet) -> Result<Self> {
        let group = Group::new(family)?;
        let m = group.modulus();
        for set in [&r, &t] {
            if set.modulus() != m {
                return Err(Error::ModulusMismatch { left: m, right: set.modulus() });
            }
        }
        if r.contains(0) {
            return Err(Error::ZeroInR);
        }
        if let Some(x) = r.iter().find(|&x| !r.contains((m - x) % m)) {
            return Err(Error::BadClosure(format!("R is not inverse-closed: missing {}", (m - x) % m)));
        }
        if !group.has_tau() && !t.is_empty() {
            return Err(Error::BadClosure(format!("T must be empty for the cyclic group Z_{m}")));
        }
        if let Some(x) = t.iter().find(|&x| !t.contains(tau_inverse_exponent(&group, x))) {
            let missing = tau_inverse_exponent(&group, x);
            let n = family.parameter();
            let rule = match family {
                GroupFamily::SemiDihedral(_) => format!("T is not closed under multiplication by n+1 = {}", n + 1),
                GroupFamily::PseudoSemiDihedral(_) => {
                    format!("T is not closed under multiplication by n-1 = {}", n - 1)
                }
                GroupFamily::Dicyclic(_) => format!("T is not closed under translation by n = {n}"),
                _ => "T is not inverse-closed".to_string(),
            };
            return Err(Error::BadClosure(format!("{rule}: missing {missing}")));
        }
        if r.is_empty() && t.is_empty() {
            return Err(Error::EmptyConnectionSet);
        }
        Ok(ConnectionSpec { group, r, t })
    }

    /// Parses `R` and `T` from comma-separated residue lists.
    pub fn parse(family: GroupFamily, r: &str, t: &str) -> Result<Self> {
        let m = Group::new(family)?.modulus();
        Self::new(family, ResidueSet::parse(m, r)?, ResidueSet::parse(m, t)?)
    }

    pub fn sd(n: usize, r: &[i64], t: &[i64]) -> Result<Self> {
        Self::from_slices(GroupFamily::SemiDihedral(n), r, t)
    }

    pub fn psd(n: usize, r: &[i64], t: &[i64]) -> Result<Self> {
        Self::from_slices(GroupFamily::PseudoSemiDihedral(n), r, t)
    }

    pub fn from_slices(family: GroupFamily, r: &[i64], t: &[i64]) -> Result<Self> {
        let m = Group::new(family)?.modulus();
        Self::new(family, ResidueSet::from_residues(m, r.iter().copied()), ResidueSet::from_residues(m, t.iter().copied()))
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn family(&self) -> GroupFamily {
        self.group.family()
    }

    pub fn n(&self) -> usize {
        self.group.family().parameter()
    }

    pub fn r(&self) -> &ResidueSet {
        &self.r
    }

    pub fn t(&self) -> &ResidueSet {
        &self.t
    }

    pub fn valency(&self) -> usize {
        self.r.len() + self.t.len()
    }

    /// `ρ^R ∪ ρ^T τ` as group elements.
    pub fn connection_set(&self) -> Vec<GroupElement> {
        let g = &self.group;
        self.r
            .iter()
            .map(|i| g.rho(i as i64))
            .chain(self.t.iter().map(|i| g.rho_tau(i as i64)))
            .collect()
    }

    pub fn descriptor(&self) -> GraphDescriptor {
        GraphDescriptor {
            family: self.family().name().to_string(),
            n: self.n(),
            r: self.r.to_vec(),
            t: self.t.to_vec(),
            order: self.group.order(),
            valency: self.valency(),
        }
    }
}

/// `(ρ^x τ)⁻¹ = ρ^y τ`; returns `y = −s(x + z)`.
fn tau_inverse_exponent(group: &Group, x: usize) -> usize {
    let m = group.modulus();
    let y = (group.twist() * ((x + group.tau_square()) % m)) % m;
    (m - y) % m
}

/// JSON shape `{family, n, R, T, order, valency}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphDescriptor {
    pub family: String,
    pub n: usize,
    #[serde(rename = "R")]
    pub r: Vec<usize>,
    #[serde(rename = "T")]
    pub t: Vec<usize>,
    pub order: usize,
    pub valency: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_pairs_are_valid() {
        let s = ConnectionSpec::sd(8, &[5, 7, 9, 11], &[4, 8, 10, 14]).unwrap();
        assert_eq!(s.valency(), 8);
        let p = ConnectionSpec::psd(8, &[5, 7, 9, 11], &[3, 5, 9, 15]).unwrap();
        assert_eq!(p.valency(), 8);
    }

    #[test]
    fn closure_diagnostics() {
        let err = ConnectionSpec::sd(8, &[1, 2], &[]).unwrap_err();
        assert_eq!(err, Error::BadClosure("R is not inverse-closed: missing 15".into()));
        let err = ConnectionSpec::parse(GroupFamily::SemiDihedral(8), "5,7,9", "").unwrap_err();
        assert_eq!(err, Error::BadClosure("R is not inverse-closed: missing 11".into()));
        assert_eq!(ConnectionSpec::sd(8, &[0, 1, 15], &[]).unwrap_err(), Error::ZeroInR);
        // 9·1 = 9 mod 16
        let err = ConnectionSpec::sd(8, &[], &[1]).unwrap_err();
        assert_eq!(err, Error::BadClosure("T is not closed under multiplication by n+1 = 9: missing 9".into()));
        let err = ConnectionSpec::psd(8, &[], &[3]).unwrap_err();
        assert_eq!(err, Error::BadClosure("T is not closed under multiplication by n-1 = 7: missing 5".into()));
        assert_eq!(ConnectionSpec::sd(8, &[], &[]).unwrap_err(), Error::EmptyConnectionSet);
        assert!(matches!(
            ConnectionSpec::from_slices(GroupFamily::Cyclic(8), &[1, 7], &[1]),
            Err(Error::BadClosure(_))
        ));
        assert!(matches!(
            ConnectionSpec::from_slices(GroupFamily::Dicyclic(4), &[], &[1]),
            Err(Error::BadClosure(_))
        ));
        assert!(ConnectionSpec::from_slices(GroupFamily::Dicyclic(4), &[], &[1, 5]).is_ok());
        assert!(ConnectionSpec::from_slices(GroupFamily::Dihedral(5), &[1, 4], &[2]).is_ok());
    }

    #[test]
    fn even_t_is_always_sd_closed() {
        // (n+1)t = t for even t
        assert!(ConnectionSpec::sd(8, &[], &[2]).is_ok());
        assert!(ConnectionSpec::sd(8, &[], &[1, 9]).is_ok());
    }
}
