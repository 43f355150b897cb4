//! A fast, deterministic subset of the acceptance checks, for `drgforge
//! selfcheck`.

use std::time::Instant;

use serde::Serialize;

use crate::cayley::{build_cayley, build_from_spec, ConnectionSpec};
use crate::classify::{
    canonicalize, reference_search_hadamard_pairs, search_hadamard_pairs, verify_hadamard_certificate,
};
use crate::design::{check_antipodal_d4_equivalence, search_difference_sets};
use crate::drg::{check_cayley, check_distance_regular, distance_module_oracle, recognize_named, BaseMode, NamedGraph};
use crate::error::Result;
use crate::group::{Group, GroupFamily};
use crate::residue::ResidueSet;

/// One named check and its outcome.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u64,
}

fn line(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> CheckLine {
    let start = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckLine { name: name.to_string(), passed, detail, elapsed_ms: start.elapsed().as_millis() as u64 }
}

fn set(m: usize, xs: &[i64]) -> ResidueSet {
    ResidueSet::from_residues(m, xs.iter().copied())
}

pub const SD8_R: [i64; 4] = [5, 7, 9, 11];
pub const SD8_T: [i64; 4] = [4, 8, 10, 14];
pub const PSD8_R: [i64; 4] = [5, 7, 9, 11];
pub const PSD8_T: [i64; 4] = [3, 5, 9, 15];
pub const SD32_R: [i64; 16] = [9, 11, 15, 19, 25, 27, 29, 31, 33, 35, 37, 39, 45, 49, 53, 55];
pub const SD32_T: [i64; 16] = [8, 12, 14, 22, 24, 30, 34, 36, 38, 42, 48, 50, 52, 58, 60, 64];

fn array_check(spec: &ConnectionSpec, want: &str) -> Result<(bool, String)> {
    let report = check_cayley(&build_from_spec(spec)?)?;
    let got = report.array.as_ref().map(|a| a.to_string()).unwrap_or_default();
    let ok = report.is_drg
        && report.bipartite
        && report.antipodal_index == Some(2)
        && report.diameter == 4
        && got == want;
    Ok((ok, format!("array {got}, bipartite {}, antipodal index {:?}", report.bipartite, report.antipodal_index)))
}

fn search_check(family: GroupFamily, known: Option<(&[i64], &[i64])>) -> Result<(bool, String)> {
    let result = search_hadamard_pairs(family, 0)?;
    let n = family.parameter();
    let ok = match known {
        Some((r, t)) => result.pairs.contains(&canonicalize(family, &set(2 * n, r), &set(2 * n, t))?),
        None => result.pairs.is_empty() && result.raw_matches == 0,
    };
    Ok((ok, format!("{} canonical pairs, {} raw matches", result.pairs.len(), result.raw_matches)))
}

/// The specs built from the structured candidates at `n = 8`, plus the
/// known pairs.
fn oracle_specs() -> Result<Vec<ConnectionSpec>> {
    let mut specs = vec![
        ConnectionSpec::sd(8, &SD8_R, &SD8_T)?,
        ConnectionSpec::psd(8, &PSD8_R, &PSD8_T)?,
    ];
    let odd: Vec<i64> = (1..16).step_by(2).collect();
    for family in [GroupFamily::SemiDihedral(8), GroupFamily::PseudoSemiDihedral(8)] {
        for &x in &odd {
            for &y in &odd {
                let r = [x, 16 - x];
                let t: Vec<i64> = match family {
                    GroupFamily::SemiDihedral(_) => vec![(x + 1) % 16, (y + 1) % 16],
                    _ => vec![y, (8 + 16 - y) % 16],
                };
                if let Ok(spec) = ConnectionSpec::new(family, set(16, &r), set(16, &t)) {
                    specs.push(spec);
                }
            }
        }
    }
    Ok(specs)
}

/// Runs every check; each line reports pass or fail independently.
pub fn run_selfcheck() -> Vec<CheckLine> {
    let mut out = Vec::new();
    out.push(line("SD(8) known pair has array {8,7,4,1;1,4,7,8}", || {
        array_check(&ConnectionSpec::sd(8, &SD8_R, &SD8_T)?, "{8,7,4,1;1,4,7,8}")
    }));
    out.push(line("PSD(8) known pair has array {8,7,4,1;1,4,7,8}", || {
        array_check(&ConnectionSpec::psd(8, &PSD8_R, &PSD8_T)?, "{8,7,4,1;1,4,7,8}")
    }));
    out.push(line("SD(32) known pair is a Hadamard pair", || {
        let c = verify_hadamard_certificate(GroupFamily::SemiDihedral(32), &set(64, &SD32_R), &set(64, &SD32_T))?;
        Ok((c.accepted && c.array.as_deref() == Some("{32,31,16,1;1,16,31,32}"), format!("array {:?}", c.array)))
    }));
    out.push(line("search SD 8 contains the known pair", || {
        search_check(GroupFamily::SemiDihedral(8), Some((&SD8_R, &SD8_T)))
    }));
    out.push(line("search SD 16 is empty", || search_check(GroupFamily::SemiDihedral(16), None)));
    out.push(line("search SD 32 contains the known pair", || {
        search_check(GroupFamily::SemiDihedral(32), Some((&SD32_R, &SD32_T)))
    }));
    out.push(line("search PSD 8 contains the known pair", || {
        search_check(GroupFamily::PseudoSemiDihedral(8), Some((&PSD8_R, &PSD8_T)))
    }));
    out.push(line("search PSD 16 is empty", || search_check(GroupFamily::PseudoSemiDihedral(16), None)));
    out.push(line("search PSD 32 is empty", || search_check(GroupFamily::PseudoSemiDihedral(32), None)));
    out.push(line("trivial constructions over SD_8", || {
        let g = Group::new(GroupFamily::SemiDihedral(8))?;
        let all: Vec<_> = g.elements().skip(1).collect();
        let k = build_cayley(&g, &all)?;
        let kr = check_cayley(&k)?;
        let half: Vec<_> = (1..16).map(|i| g.rho_tau(i)).collect();
        let b = build_cayley(&g, &half)?;
        let br = check_cayley(&b)?;
        let h = g.rho_power_subgroup(2);
        let outside: Vec<_> = g.elements().filter(|&x| !h.contains(x)).collect();
        let mp = build_cayley(&g, &outside)?;
        let ok = kr.array.as_ref().map(|a| a.to_string()).as_deref() == Some("{31;1}")
            && recognize_named(k.graph()) == NamedGraph::Complete { order: 32 }
            && recognize_named(b.graph()) == NamedGraph::CompleteBipartiteMinusMatching { m: 16 }
            && br.diameter == 3
            && recognize_named(mp.graph()) == NamedGraph::CompleteMultipartite { parts: 4, size: 8 };
        Ok((ok, format!("K_32 {:?}, bipartite minus matching diameter {}", kr.array.map(|a| a.to_string()), br.diameter)))
    }));
    out.push(line("distance-module oracle agrees with the direct check", || {
        let specs = oracle_specs()?;
        let mut disagreements = 0;
        for spec in &specs {
            let x = build_from_spec(spec)?;
            if !x.is_connected() {
                continue;
            }
            let direct = check_distance_regular(x.graph(), BaseMode::Single)?.is_drg;
            if direct != distance_module_oracle(&x)? {
                disagreements += 1;
            }
        }
        Ok((disagreements == 0, format!("{} specs, {disagreements} disagreements", specs.len())))
    }));
    out.push(line("reference and hashed searches agree at n = 8, 16", || {
        let mut ok = true;
        for family in [
            GroupFamily::SemiDihedral(8),
            GroupFamily::PseudoSemiDihedral(8),
            GroupFamily::SemiDihedral(16),
            GroupFamily::PseudoSemiDihedral(16),
        ] {
            ok &= reference_search_hadamard_pairs(family)?.pairs == search_hadamard_pairs(family, 0)?.pairs;
        }
        Ok((ok, String::new()))
    }));
    out.push(line("known pairs give (n,2,n,n/2) relative difference sets", || {
        let mut ok = true;
        for spec in [
            ConnectionSpec::sd(8, &SD8_R, &SD8_T)?,
            ConnectionSpec::psd(8, &PSD8_R, &PSD8_T)?,
            ConnectionSpec::sd(32, &SD32_R, &SD32_T)?,
        ] {
            let n = spec.n();
            let r = check_antipodal_d4_equivalence(&build_from_spec(&spec)?, false)?;
            ok &= r.consistent()
                && r.design_side
                && r.design.as_ref().map(|d| d.parameters.clone()) == Some(vec![n, 2, n, n / 2]);
        }
        Ok((ok, String::new()))
    }));
    out.push(line("no (16,6,2) difference set in Z_16", || {
        let found = search_difference_sets(&Group::new(GroupFamily::Cyclic(16))?.full(), 6)?;
        Ok((found.is_empty(), format!("{} found", found.len())))
    }));
    out
}
