//! Difference sets and relative difference sets in subgroups of the
//! supported groups, verified by exact difference counting.

mod equivalence;
mod search;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, GroupAlgebraElement, GroupElement, Subgroup};

pub use equivalence::{check_antipodal_d4_equivalence, check_bipartite_d3_equivalence, EquivalenceReport};
pub use search::{canonical_translate, search_difference_sets, MAX_SEARCH_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DesignKind {
    DifferenceSet,
    RelativeDifferenceSet,
}

/// Parameters are `(n, k, λ)` for a difference set and `(m, r, k, μ)` for a
/// relative difference set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DesignReport {
    pub kind: DesignKind,
    pub parameters: Vec<usize>,
    pub ambient: String,
    pub forbidden: Option<String>,
    pub symmetric: bool,
    pub trivial: bool,
}

impl DesignReport {
    pub fn k(&self) -> usize {
        self.parameters[self.parameters.len() - 2]
    }

    /// `λ` for a difference set, `μ` for a relative difference set.
    pub fn multiplicity(&self) -> usize {
        self.parameters[self.parameters.len() - 1]
    }
}

/// Distinct element indices of `d`, after checking every element lies in `h`.
fn members_in(h: &Subgroup, d: &[GroupElement]) -> Result<Vec<usize>> {
    let group = h.parent();
    let mut out = Vec::with_capacity(d.len());
    for &g in d {
        group.inv(g)?;
        if !h.contains(g) {
            return Err(Error::NotASubset);
        }
        out.push(g.index());
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `counts[g] = #{(d1, d2) ∈ D² : d1·d2⁻¹ = g}`.
pub(crate) fn difference_counts(group: &Group, d: &[usize]) -> Vec<usize> {
    let mut counts = vec![0; group.order()];
    let inv: Vec<usize> = d.iter().map(|&x| group.inv_index(x)).collect();
    for &x in d {
        for &yi in &inv {
            counts[group.mul_index(x, yi)] += 1;
        }
    }
    counts
}

/// The common count on the non-identity members of `h`, if there is one.
fn uniform_on(h: &Subgroup, counts: &[usize], skip: impl Fn(usize) -> bool) -> Option<Option<usize>> {
    let mut value = None;
    for g in h.members().map(|g| g.index()).filter(|&g| g != 0 && !skip(g)) {
        match value {
            None => value = Some(counts[g]),
            Some(v) if v != counts[g] => return None,
            _ => {}
        }
    }
    Some(value)
}

fn is_trivial(order: usize, k: usize) -> bool {
    k == 0 || k == 1 || k + 1 == order || k == order
}

fn inverse_set(group: &Group, d: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = d.iter().map(|&x| group.inv_index(x)).collect();
    out.sort_unstable();
    out
}

/// Checks that every non-identity `g ∈ H` has the same number `λ` of
/// representations `d1·d2⁻¹`; returns `(|H|, |D|, λ)`.
pub fn verify_difference_set(h: &Subgroup, d: &[GroupElement]) -> Result<Option<DesignReport>> {
    let group = h.parent();
    let d = members_in(h, d)?;
    let Some(lambda) = uniform_on(h, &difference_counts(group, &d), |_| false) else {
        return Ok(None);
    };
    let lambda = lambda.unwrap_or(0);
    let inv = inverse_set(group, &d);
    let symmetric = uniform_on(h, &difference_counts(group, &inv), |_| false).is_some();
    Ok(Some(DesignReport {
        kind: DesignKind::DifferenceSet,
        parameters: vec![h.order(), d.len(), lambda],
        ambient: h.label().to_string(),
        forbidden: None,
        symmetric,
        trivial: is_trivial(h.order(), d.len()),
    }))
}

/// `{1} ∪ {g ∈ H : g has no representation d1·d2⁻¹}` when that set is a
/// proper subgroup of `H` and the remaining counts are uniform.
fn forbidden_subgroup_of(h: &Subgroup, d: &[usize]) -> Option<Subgroup> {
    let group = h.parent();
    let counts = difference_counts(group, d);
    let zeros: Vec<GroupElement> = h.members().filter(|g| g.index() == 0 || counts[g.index()] == 0).collect();
    let n = Subgroup::from_elements(*group, &zeros, "N").ok()?;
    let n = match group.elements().skip(1).take(group.modulus() - 1).find(|g| n.contains(*g)) {
        Some(g) if group.rho_power_subgroup(g.index()).mask() == n.mask() => group.rho_power_subgroup(g.index()),
        _ => n,
    };
    if n.order() == h.order() {
        return None;
    }
    uniform_on(h, &counts, |g| n.contains_index(g))?;
    Some(n)
}

/// Checks `D·D⁽⁻¹⁾ = k·1 + μ·(H∖N)` by counting: the identity is hit `k`
/// times, `N∖{1}` never, and `H∖N` exactly `μ` times each. Returns
/// `(m, r, k, μ)` with `r = |N|`, `m = [H:N]`. `symmetric` records whether
/// `D⁽⁻¹⁾` is a relative difference set for some forbidden subgroup.
pub fn verify_relative_difference_set(h: &Subgroup, n: &Subgroup, d: &[GroupElement]) -> Result<Option<DesignReport>> {
    let group = h.parent();
    if n.parent() != group {
        return Err(Error::MixedGroups { left: group.family().to_string(), right: n.parent().family().to_string() });
    }
    if !n.is_subset_of(h) || n.order() == h.order() {
        return Err(Error::NotASubgroupChain);
    }
    let d = members_in(h, d)?;
    let counts = difference_counts(group, &d);
    if n.members().any(|g| g.index() != 0 && counts[g.index()] != 0) {
        return Ok(None);
    }
    let Some(mu) = uniform_on(h, &counts, |g| n.contains_index(g)) else {
        return Ok(None);
    };
    let inv = inverse_set(group, &d);
    let symmetric = forbidden_subgroup_of(h, &inv).is_some() || (d.len() <= 1);
    Ok(Some(DesignReport {
        kind: DesignKind::RelativeDifferenceSet,
        parameters: vec![h.order() / n.order(), n.order(), d.len(), mu.unwrap_or(0)],
        ambient: h.label().to_string(),
        forbidden: Some(n.label().to_string()),
        symmetric,
        trivial: is_trivial(h.order(), d.len()),
    }))
}

/// Group-algebra form of the difference-set identity,
/// `D·D⁽⁻¹⁾ = (k − λ)·1 + λ·H`.
pub fn difference_set_identity(h: &Subgroup, d: &[GroupElement], lambda: usize) -> Result<bool> {
    let group = h.parent();
    let d = members_in(h, d)?;
    let x = GroupAlgebraElement::from_indices(group, d.iter().copied());
    let lhs = x.mul(&x.inverted(group), group);
    let k = d.len() as i64;
    let l = lambda as i64;
    let rhs = &GroupAlgebraElement::one(group).scale(k - l)
        + &GroupAlgebraElement::from_indices(group, h.members().map(|g| g.index())).scale(l);
    Ok(lhs == rhs)
}

/// Group-algebra form of the relative-difference-set identity,
/// `D·D⁽⁻¹⁾ = k·1 + μ·(H∖N)`.
pub fn relative_difference_identity(h: &Subgroup, n: &Subgroup, d: &[GroupElement], mu: usize) -> Result<bool> {
    let group = h.parent();
    let d = members_in(h, d)?;
    let x = GroupAlgebraElement::from_indices(group, d.iter().copied());
    let lhs = x.mul(&x.inverted(group), group);
    let outside = h.members().map(|g| g.index()).filter(|&g| !n.contains_index(g));
    let rhs = &GroupAlgebraElement::one(group).scale(d.len() as i64)
        + &GroupAlgebraElement::from_indices(group, outside).scale(mu as i64);
    Ok(lhs == rhs)
}

/// `D⁽⁻¹⁾ = aDa`.
pub fn check_symmetry_condition(group: &Group, d: &[GroupElement], a: GroupElement) -> Result<bool> {
    group.inv(a)?;
    let mut lhs = Vec::with_capacity(d.len());
    let mut rhs = Vec::with_capacity(d.len());
    for &x in d {
        lhs.push(group.inv(x)?.index());
        rhs.push(group.mul_index(group.mul_index(a.index(), x.index()), a.index()));
    }
    lhs.sort_unstable();
    lhs.dedup();
    rhs.sort_unstable();
    rhs.dedup();
    Ok(lhs == rhs)
}
