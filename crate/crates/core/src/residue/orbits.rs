use serde::Serialize;

use super::{units, ResidueSet};

/// `O_r = {c·(m/r) : c ∈ Z_m^*}`, the residues of additive order `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitOrbit {
    pub modulus: usize,
    pub divisor: usize,
    pub members: ResidueSet,
}

/// The orbits of `Z_m^*` acting on `Z_m` by multiplication, one for each
/// divisor `r` of `m`, in increasing order of `r`.
pub fn unit_orbits(m: usize) -> Vec<UnitOrbit> {
    let us = units(m);
    (1..=m)
        .filter(|r| m.is_multiple_of(*r))
        .map(|r| {
            let base = (m / r) % m;
            let members = ResidueSet::from_residues(m, us.iter().map(|&c| ((c * base) % m) as i64));
            UnitOrbit { modulus: m, divisor: r, members }
        })
        .collect()
}

/// True when `A` is a union of unit orbits, i.e. `cA = A` for every unit `c`.
pub fn is_union_of_unit_orbits(a: &ResidueSet) -> bool {
    let m = a.modulus();
    units(m).into_iter().all(|c| a.scaled(c as i64) == *a)
}
