#![allow(dead_code)]

use drgforge_core::cayley::build_from_spec;
use drgforge_core::{ConnectionSpec, GroupFamily, ResidueSet};
use rand::Rng;

pub fn set(m: usize, xs: &[i64]) -> ResidueSet {
    ResidueSet::from_residues(m, xs.iter().copied())
}

pub const SD8: ([i64; 4], [i64; 4]) = ([5, 7, 9, 11], [4, 8, 10, 14]);
pub const PSD8: ([i64; 4], [i64; 4]) = ([5, 7, 9, 11], [3, 5, 9, 15]);
pub const SD32_R: [i64; 16] = [9, 11, 15, 19, 25, 27, 29, 31, 33, 35, 37, 39, 45, 49, 53, 55];
pub const SD32_T: [i64; 16] = [8, 12, 14, 22, 24, 30, 34, 36, 38, 42, 48, 50, 52, 58, 60, 64];

/// Image of `x` under the map that fixes the `T`-closure of the family.
fn closure_partner(family: GroupFamily, x: usize) -> usize {
    let n = family.parameter();
    let m = 2 * n;
    match family {
        GroupFamily::SemiDihedral(_) => (n + 1) * x % m,
        GroupFamily::PseudoSemiDihedral(_) => (n - 1) * x % m,
        _ => unreachable!(),
    }
}

/// A random valid spec: `R` symmetrized, `T` closed, density drawn per spec.
pub fn random_spec(rng: &mut impl Rng, family: GroupFamily) -> ConnectionSpec {
    let m = 2 * family.parameter();
    loop {
        let p: f64 = rng.gen_range(0.05..0.95);
        let mut r = Vec::new();
        for x in 1..m {
            if rng.gen_bool(p) {
                r.push(x as i64);
                r.push((m - x) as i64);
            }
        }
        let mut t = Vec::new();
        for x in 0..m {
            if rng.gen_bool(p) {
                t.push(x as i64);
                t.push(closure_partner(family, x) as i64);
            }
        }
        if let Ok(spec) = ConnectionSpec::new(family, set(m, &r), set(m, &t)) {
            return spec;
        }
    }
}

pub fn random_connected_spec(rng: &mut impl Rng, family: GroupFamily) -> ConnectionSpec {
    loop {
        let spec = random_spec(rng, family);
        if build_from_spec(&spec).unwrap().is_connected() {
            return spec;
        }
    }
}

/// Subsets of size `k` of `pool`, by brute force over bitmasks.
fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << pool.len())
        .filter(|b| b.count_ones() as usize == k)
        .map(|b| (0..pool.len()).filter(|j| b >> j & 1 == 1).map(|j| pool[j]).collect())
        .collect()
}

/// Every `(R, T)` meeting the structural part of the Hadamard conditions,
/// found by filtering all `n/2`-subsets (independent of the library's
/// candidate enumeration).
pub fn structured_specs(family: GroupFamily) -> Vec<ConnectionSpec> {
    let n = family.parameter();
    let m = 2 * n;
    let odd: Vec<usize> = (1..m).step_by(2).collect();
    let even: Vec<usize> = (0..m).step_by(2).collect();
    let has = |s: &[usize], x: usize| s.contains(&(x % m));
    let rs: Vec<Vec<usize>> = subsets(&odd, n / 2)
        .into_iter()
        .filter(|r| r.iter().all(|&x| has(r, m - x) && !has(r, x + n)))
        .collect();
    let psd = matches!(family, GroupFamily::PseudoSemiDihedral(_));
    let ts: Vec<Vec<usize>> = subsets(if psd { &odd } else { &even }, n / 2)
        .into_iter()
        .filter(|t| t.iter().all(|&x| !has(t, x + n) && (!psd || has(t, m + n - x))))
        .collect();
    let mut out = Vec::new();
    for r in &rs {
        for t in &ts {
            let to = |s: &[usize]| ResidueSet::from_residues(m, s.iter().map(|&x| x as i64));
            out.push(ConnectionSpec::new(family, to(r), to(t)).expect("structured specs are valid"));
        }
    }
    out
}
