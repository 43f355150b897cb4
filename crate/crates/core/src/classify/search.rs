use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use super::canonicalize;
use super::hadamard::mu_check;
use crate::error::{Error, Result};
use crate::group::GroupFamily;
use crate::residue::ResidueSet;

/// Largest `n` the searches accept.
pub const MAX_SEARCH_N: usize = 64;
/// Largest `n` the unhashed reference search accepts.
pub const MAX_REFERENCE_N: usize = 16;

/// Outcome of an exhaustive Hadamard-pair search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub family: GroupFamily,
    pub n: usize,
    /// Canonical pairs, sorted, pairwise distinct.
    pub pairs: Vec<(ResidueSet, ResidueSet)>,
    /// Matches found by the join before canonical deduplication.
    pub raw_matches: usize,
    /// R-candidates plus T-candidates enumerated.
    pub candidates_examined: u64,
    pub elapsed_ms: u64,
}

impl SearchResult {
    /// Zeroes the timing field so that output is byte-stable.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }
}

struct PairJson<'a>(&'a ResidueSet, &'a ResidueSet);

impl Serialize for PairJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("R", self.0)?;
        map.serialize_entry("T", self.1)?;
        map.end()
    }
}

impl Serialize for SearchResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<PairJson<'_>> = self.pairs.iter().map(|(r, t)| PairJson(r, t)).collect();
        let mut s = serializer.serialize_struct("SearchResult", 6)?;
        s.serialize_field("family", self.family.name())?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("pairCount", &self.pairs.len())?;
        s.serialize_field("pairs", &pairs)?;
        s.serialize_field("candidatesExamined", &self.candidates_examined)?;
        s.serialize_field("elapsedMs", &self.elapsed_ms)?;
        s.end()
    }
}

fn check_n(family: GroupFamily, max: usize) -> Result<usize> {
    let n = family.parameter();
    if !matches!(family, GroupFamily::SemiDihedral(_) | GroupFamily::PseudoSemiDihedral(_)) {
        return Err(Error::InvalidParameter(format!("Hadamard pairs are defined for sd and psd, not {}", family.name())));
    }
    if !n.is_power_of_two() || !(8..=max).contains(&n) {
        return Err(Error::UnsupportedN(n));
    }
    Ok(n)
}

/// Residues mod `2n ≤ 128` as a bitmask.
type Mask = u128;

fn rotate(mask: Mask, i: usize, m: usize) -> Mask {
    if i == 0 {
        return mask;
    }
    let full = if m == 128 { Mask::MAX } else { (1 << m) - 1 };
    ((mask << i) | (mask >> (m - i))) & full
}

fn to_set(mask: Mask, m: usize) -> ResidueSet {
    ResidueSet::from_residues(m, (0..m).filter(|&x| mask >> x & 1 == 1).map(|x| x as i64))
}

/// One pair from each odd quadruple `{x, −x, n+x, n−x}`, `x < n/2`; bit `j`
/// of `bits` is passed to `pick` for the `j`-th quadruple.
fn quadruple_candidate(n: usize, bits: u64, pick: impl Fn(usize, bool) -> [usize; 2]) -> Mask {
    let mut mask = 0;
    for (j, x) in (1..n / 2).step_by(2).enumerate() {
        for y in pick(x, bits >> j & 1 == 1) {
            mask |= 1 << y;
        }
    }
    mask
}

/// `R`: `{x, −x}` or `{n+x, n−x}` from every odd quadruple.
fn r_candidate(n: usize, bits: u64) -> Mask {
    quadruple_candidate(n, bits, |x, hi| if hi { [n + x, n - x] } else { [x, 2 * n - x] })
}

/// SD `T`: `t` or `t+n` from every even couple.
fn sd_t_candidate(n: usize, bits: u64) -> Mask {
    let mut mask = 0;
    for j in 0..n / 2 {
        let t = 2 * j + if bits >> j & 1 == 1 { n } else { 0 };
        mask |= 1 << t;
    }
    mask
}

/// PSD `T`: `{x, n−x}` or `{−x, n+x}` from every odd quadruple.
fn psd_t_candidate(n: usize, bits: u64) -> Mask {
    quadruple_candidate(n, bits, |x, hi| if hi { [2 * n - x, n + x] } else { [x, n - x] })
}

/// `|A∩(i+A)|` for even `0 < i < n`; the rest follow from `c[i] = c[−i]`.
type Profile = [u8; 32];

fn profile(mask: Mask, n: usize) -> Profile {
    let mut p = [0u8; 32];
    for (j, i) in (2..n).step_by(2).enumerate() {
        p[j] = (mask & rotate(mask, i, 2 * n)).count_ones() as u8;
    }
    p
}

fn complement_profile(mask: Mask, n: usize) -> Profile {
    let mut p = profile(mask, n);
    let half = (n / 2) as u8;
    for (j, _) in (2..n).step_by(2).enumerate() {
        // a value above n/2 can never be matched
        p[j] = half.checked_sub(p[j]).unwrap_or(u8::MAX);
    }
    p
}

fn finish(
    family: GroupFamily,
    n: usize,
    raw: Vec<(ResidueSet, ResidueSet)>,
    candidates_examined: u64,
    start: Instant,
) -> Result<SearchResult> {
    let raw_matches = raw.len();
    let mut pairs = BTreeSet::new();
    for (r, t) in raw {
        pairs.insert(canonicalize(family, &r, &t)?);
    }
    Ok(SearchResult {
        family,
        n,
        pairs: pairs.into_iter().collect(),
        raw_matches,
        candidates_examined,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Exhaustive search for pairs `(R, T)` with `|R∩(i+R)| + |T∩(i+T)| = n/2`
/// for every even `i ∉ {0, n}`, among the structurally valid candidates.
///
/// Each `R` is stored under its autocorrelation profile; each `T` probes the
/// table with `n/2` minus its own profile. `T`-candidates are split across
/// `threads` workers (0 uses the rayon default).
pub fn search_hadamard_pairs(family: GroupFamily, threads: usize) -> Result<SearchResult> {
    let n = check_n(family, MAX_SEARCH_N)?;
    let start = Instant::now();
    let m = 2 * n;
    let r_count = 1u64 << (n / 4);
    let psd = matches!(family, GroupFamily::PseudoSemiDihedral(_));
    let t_count = if psd { 1u64 << (n / 4) } else { 1u64 << (n / 2) };

    let mut table: HashMap<Profile, Vec<Mask>> = HashMap::new();
    for bits in 0..r_count {
        let r = r_candidate(n, bits);
        table.entry(profile(r, n)).or_default().push(r);
    }
    let probe = |bits: u64| -> Vec<(Mask, Mask)> {
        let t = if psd { psd_t_candidate(n, bits) } else { sd_t_candidate(n, bits) };
        match table.get(&complement_profile(t, n)) {
            Some(rs) => rs.iter().map(|&r| (r, t)).collect(),
            None => Vec::new(),
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let mut hits: Vec<(Mask, Mask)> = pool.install(|| (0..t_count).into_par_iter().flat_map_iter(probe).collect());
    hits.sort_unstable();
    let raw = hits.into_iter().map(|(r, t)| (to_set(r, m), to_set(t, m))).collect();
    finish(family, n, raw, r_count + t_count, start)
}

/// Every `k`-subset of the residues mod `2n` of the given parity.
fn parity_subsets(n: usize, odd: bool, k: usize) -> Vec<ResidueSet> {
    let m = 2 * n;
    let slots: Vec<usize> = (0..m).filter(|x| (x % 2 == 1) == odd).collect();
    (0u64..1 << slots.len())
        .filter(|b| b.count_ones() as usize == k)
        .map(|b| {
            ResidueSet::from_residues(
                m,
                slots.iter().enumerate().filter(|&(j, _)| b >> j & 1 == 1).map(|(_, &x)| x as i64),
            )
        })
        .collect()
}

/// The same search without candidate structure or hashing: every `n/2`-subset
/// of the right parities is filtered by the structural constraints, then all
/// surviving pairs get the full count over `i ∈ 2Z_2n ∖ {0, n}`.
/// Limited to `n ≤ 16`.
pub fn reference_search_hadamard_pairs(family: GroupFamily) -> Result<SearchResult> {
    let n = check_n(family, MAX_REFERENCE_N)?;
    let start = Instant::now();
    let m = 2 * n;
    let psd = matches!(family, GroupFamily::PseudoSemiDihedral(_));
    let odd_sets = parity_subsets(n, true, n / 2);
    let t_pool = if psd { odd_sets.clone() } else { parity_subsets(n, false, n / 2) };
    let rs: Vec<_> = odd_sets
        .into_iter()
        .filter(|r| r.negated() == *r && r.is_disjoint(&r.shifted(n as i64)))
        .collect();
    let ts: Vec<_> = t_pool
        .into_iter()
        .filter(|t| t.is_disjoint(&t.shifted(n as i64)))
        .filter(|t| !psd || ResidueSet::from_residues(m, t.iter().map(|x| n as i64 - x as i64)) == *t)
        .collect();
    let mut raw = Vec::new();
    for r in &rs {
        for t in &ts {
            if mu_check(n, r, t).values().all(|&v| v == n / 2) {
                raw.push((r.clone(), t.clone()));
            }
        }
    }
    let examined = (rs.len() + ts.len()) as u64;
    finish(family, n, raw, examined, start)
}
