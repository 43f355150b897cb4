//! Finite groups with a cyclic subgroup of index at most two.
//!
//! Every element is written `ρ^i τ^e` with `0 <= i < M` and `e ∈ {0, 1}` and
//! encoded as a single index: `i` for `e = 0`, `M + i` for `e = 1`. The
//! families differ only in three integers:
//!
//! | family                 | M    | τρτ⁻¹ = ρ^s   | τ² = ρ^z |
//! |------------------------|------|---------------|----------|
//! | `Cyclic(m)`            | m    | (no τ)        |          |
//! | `CyclicTimesZ2(n)`     | n    | s = 1         | z = 0    |
//! | `Dihedral(n)`          | n    | s = −1        | z = 0    |
//! | `Dicyclic(n)`          | 2n   | s = −1        | z = n    |
//! | `SemiDihedral(n)`      | 2n   | s = n − 1     | z = 0    |
//! | `PseudoSemiDihedral(n)`| 2n   | s = n + 1     | z = 0    |
//!
//! so that `(ρ^a τ^e)(ρ^b τ^f) = ρ^(a + s^e b + e f z) τ^(e + f mod 2)`.

mod algebra;
mod table;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use algebra::GroupAlgebraElement;
pub use table::CayleyTable;

/// One of the six supported families together with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", content = "n", rename_all = "kebab-case")]
pub enum GroupFamily {
    /// Cyclic group of order `m`.
    Cyclic(usize),
    /// `Z_n ⊕ Z_2`, order `2n`.
    #[serde(rename = "cyclic-x-z2")]
    CyclicTimesZ2(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    /// Dicyclic group of order `4n`.
    Dicyclic(usize),
    /// Semi-dihedral group of order `4n`, `n = 2^r`, `r >= 2`.
    #[serde(rename = "sd")]
    SemiDihedral(usize),
    /// Pseudo-semi-dihedral (modular maximal-cyclic) group of order `4n`.
    #[serde(rename = "psd")]
    PseudoSemiDihedral(usize),
}

impl GroupFamily {
    /// Parses the family names used on the command line and in JSON.
    pub fn from_name(name: &str, n: usize) -> Result<Self> {
        Ok(match name {
            "cyclic" => GroupFamily::Cyclic(n),
            "cyclic-x-z2" => GroupFamily::CyclicTimesZ2(n),
            "dihedral" => GroupFamily::Dihedral(n),
            "dicyclic" => GroupFamily::Dicyclic(n),
            "sd" => GroupFamily::SemiDihedral(n),
            "psd" => GroupFamily::PseudoSemiDihedral(n),
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown group family {other:?} (expected cyclic, cyclic-x-z2, dihedral, dicyclic, sd or psd)"
                )))
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            GroupFamily::Cyclic(_) => "cyclic",
            GroupFamily::CyclicTimesZ2(_) => "cyclic-x-z2",
            GroupFamily::Dihedral(_) => "dihedral",
            GroupFamily::Dicyclic(_) => "dicyclic",
            GroupFamily::SemiDihedral(_) => "sd",
            GroupFamily::PseudoSemiDihedral(_) => "psd",
        }
    }

    pub fn parameter(&self) -> usize {
        match *self {
            GroupFamily::Cyclic(n)
            | GroupFamily::CyclicTimesZ2(n)
            | GroupFamily::Dihedral(n)
            | GroupFamily::Dicyclic(n)
            | GroupFamily::SemiDihedral(n)
            | GroupFamily::PseudoSemiDihedral(n) => n,
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupFamily::Cyclic(m) => write!(f, "Z_{m}"),
            GroupFamily::CyclicTimesZ2(n) => write!(f, "Z_{n}+Z_2"),
            GroupFamily::Dihedral(n) => write!(f, "D_{n}"),
            GroupFamily::Dicyclic(n) => write!(f, "Dic_{n}"),
            GroupFamily::SemiDihedral(n) => write!(f, "SD_{n}"),
            GroupFamily::PseudoSemiDihedral(n) => write!(f, "PSD_{n}"),
        }
    }
}

/// An element of a [`Group`], tagged with the family it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    family: GroupFamily,
    index: u32,
}

impl GroupElement {
    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    /// Splits the element into `(i, e)` with the element equal to `ρ^i τ^e`.
    pub fn parts(&self) -> (usize, bool) {
        let m = rotation_modulus(self.family);
        let i = self.index as usize;
        if i < m {
            (i, false)
        } else {
            (i - m, true)
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parts() {
            (0, false) => write!(f, "1"),
            (0, true) => write!(f, "τ"),
            (1, false) => write!(f, "ρ"),
            (1, true) => write!(f, "ρτ"),
            (i, false) => write!(f, "ρ^{i}"),
            (i, true) => write!(f, "ρ^{i}τ"),
        }
    }
}

fn rotation_modulus(family: GroupFamily) -> usize {
    match family {
        GroupFamily::Cyclic(m) => m,
        GroupFamily::CyclicTimesZ2(n) | GroupFamily::Dihedral(n) => n,
        GroupFamily::Dicyclic(n) | GroupFamily::SemiDihedral(n) | GroupFamily::PseudoSemiDihedral(n) => 2 * n,
    }
}

/// A concrete group. Cheap to copy; multiplication uses closed-form
/// modular formulas rather than a stored table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Group {
    family: GroupFamily,
    modulus: usize,
    twist: usize,
    tau_square: usize,
    has_tau: bool,
}

/// Largest group order the crate accepts. Elements are stored as `u32`
/// and graphs as dense bit matrices, so this is a practical ceiling.
pub const MAX_ORDER: usize = 1 << 16;

pub fn make_group(family: GroupFamily) -> Result<Group> {
    Group::new(family)
}

impl Group {
    pub fn new(family: GroupFamily) -> Result<Self> {
        let n = family.parameter();
        if n == 0 {
            return Err(Error::InvalidParameter(format!("{}: parameter must be positive", family.name())));
        }
        if let GroupFamily::SemiDihedral(n) | GroupFamily::PseudoSemiDihedral(n) = family {
            if n < 4 || !n.is_power_of_two() {
                return Err(Error::InvalidParameter(format!(
                    "{}: n must be a power of two with n >= 4, got {n}",
                    family.name()
                )));
            }
        }
        let modulus = rotation_modulus(family);
        let (twist, tau_square, has_tau) = match family {
            GroupFamily::Cyclic(_) => (1 % modulus, 0, false),
            GroupFamily::CyclicTimesZ2(_) => (1 % modulus, 0, true),
            GroupFamily::Dihedral(_) => (modulus - 1, 0, true),
            GroupFamily::Dicyclic(n) => (modulus - 1, n % modulus, true),
            GroupFamily::SemiDihedral(n) => (n - 1, 0, true),
            GroupFamily::PseudoSemiDihedral(n) => (n + 1, 0, true),
        };
        let group = Group { family, modulus, twist, tau_square, has_tau };
        if group.order() > MAX_ORDER {
            return Err(Error::InvalidParameter(format!("group order {} exceeds {MAX_ORDER}", group.order())));
        }
        Ok(group)
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    /// Order of the cyclic subgroup `⟨ρ⟩`.
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// The exponent `s` with `τρτ⁻¹ = ρ^s`.
    pub fn twist(&self) -> usize {
        self.twist
    }

    /// The exponent `z` with `τ² = ρ^z`.
    pub fn tau_square(&self) -> usize {
        self.tau_square
    }

    pub fn has_tau(&self) -> bool {
        self.has_tau
    }

    pub fn order(&self) -> usize {
        if self.has_tau {
            2 * self.modulus
        } else {
            self.modulus
        }
    }

    pub fn identity(&self) -> GroupElement {
        self.wrap(0)
    }

    /// `ρ^i`, with `i` reduced modulo the rotation modulus.
    pub fn rho(&self, i: i64) -> GroupElement {
        self.wrap(self.reduce(i))
    }

    /// `ρ^i τ`. Panics for cyclic groups, which have no `τ`.
    pub fn rho_tau(&self, i: i64) -> GroupElement {
        assert!(self.has_tau, "{} has no element τ", self.family);
        self.wrap(self.modulus + self.reduce(i))
    }

    pub fn tau(&self) -> GroupElement {
        self.rho_tau(0)
    }

    pub fn element(&self, index: usize) -> Result<GroupElement> {
        if index >= self.order() {
            return Err(Error::ElementOutOfRange { index, order: self.order() });
        }
        Ok(self.wrap(index))
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.wrap(i))
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        g.family == self.family && g.index() < self.order()
    }

    pub fn mul(&self, g: GroupElement, h: GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.wrap(self.mul_index(g.index(), h.index())))
    }

    pub fn inv(&self, g: GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.wrap(self.inv_index(g.index())))
    }

    /// Product on raw indices. Both indices must be below [`Group::order`].
    #[inline]
    pub fn mul_index(&self, g: usize, h: usize) -> usize {
        let m = self.modulus;
        let (a, e) = if g < m { (g, false) } else { (g - m, true) };
        let (b, f) = if h < m { (h, false) } else { (h - m, true) };
        let b = if e { (self.twist * b) % m } else { b };
        let mut rot = a + b;
        if e && f {
            rot += self.tau_square;
        }
        let rot = rot % m;
        if e != f {
            m + rot
        } else {
            rot
        }
    }

    /// Inverse on raw indices: `(ρ^a)⁻¹ = ρ^(−a)`, `(ρ^a τ)⁻¹ = ρ^(−s(a+z)) τ`.
    #[inline]
    pub fn inv_index(&self, g: usize) -> usize {
        let m = self.modulus;
        if g < m {
            (m - g) % m
        } else {
            let a = g - m;
            let t = (self.twist * ((a + self.tau_square) % m)) % m;
            m + (m - t) % m
        }
    }

    /// `g^k` for `k >= 0`.
    pub fn pow_index(&self, g: usize, k: usize) -> usize {
        let mut acc = 0;
        let mut base = g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_index(acc, base);
            }
            base = self.mul_index(base, base);
            k >>= 1;
        }
        acc
    }

    /// Subgroup generated by `generators`, found by closure under right
    /// multiplication by the generators (finite group, so this suffices).
    pub fn generated(&self, generators: &[GroupElement]) -> Result<Subgroup> {
        for &g in generators {
            self.check(g)?;
        }
        let mut mask = FixedBitSet::with_capacity(self.order());
        mask.insert(0);
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for g in generators {
                let y = self.mul_index(x, g.index());
                if !mask.put(y) {
                    stack.push(y);
                }
            }
        }
        let label = format!(
            "⟨{}⟩",
            generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
        );
        Ok(Subgroup::from_mask(*self, mask, label))
    }

    /// The whole group as a subgroup of itself.
    pub fn full(&self) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(self.order());
        mask.insert_range(..);
        Subgroup::from_mask(*self, mask, self.family.to_string())
    }

    /// The cyclic subgroup `⟨ρ^d⟩`.
    pub fn rho_power_subgroup(&self, d: usize) -> Subgroup {
        let step = d % self.modulus;
        let mut sub = self.generated(&[self.wrap(step)]).expect("own element");
        sub.label = match step {
            0 => "⟨1⟩".to_string(),
            1 => "⟨ρ⟩".to_string(),
            s => format!("⟨ρ^{s}⟩"),
        };
        sub
    }

    /// Builds a [`CayleyTable`] by rewriting words generator by generator.
    /// This is independent of [`Group::mul_index`] and is used to cross-check it.
    pub fn cayley_table(&self) -> Result<CayleyTable> {
        CayleyTable::build(self)
    }

    /// `true` when `sub` is normal: `g x g⁻¹ ∈ sub` for all `g`, `x ∈ sub`.
    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        self.elements().all(|g| {
            let gi = self.inv_index(g.index());
            sub.members().all(|x| sub.contains_index(self.mul_index(self.mul_index(g.index(), x.index()), gi)))
        })
    }

    pub(crate) fn wrap(&self, index: usize) -> GroupElement {
        debug_assert!(index < self.order());
        GroupElement { family: self.family, index: index as u32 }
    }

    pub(crate) fn reduce(&self, i: i64) -> usize {
        i.rem_euclid(self.modulus as i64) as usize
    }

    fn check(&self, g: GroupElement) -> Result<()> {
        if g.family != self.family {
            return Err(Error::MixedGroups { left: self.family.to_string(), right: g.family.to_string() });
        }
        if g.index() >= self.order() {
            return Err(Error::ElementOutOfRange { index: g.index(), order: self.order() });
        }
        Ok(())
    }
}

/// A subgroup of a [`Group`], stored as a membership mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: Group,
    mask: FixedBitSet,
    label: String,
}

impl Subgroup {
    fn from_mask(parent: Group, mask: FixedBitSet, label: String) -> Self {
        Subgroup { parent, mask, label }
    }

    /// Builds a subgroup from an explicit element list, verifying closure.
    pub fn from_elements(parent: Group, elements: &[GroupElement], label: impl Into<String>) -> Result<Self> {
        let mut mask = FixedBitSet::with_capacity(parent.order());
        for &g in elements {
            parent.check(g)?;
            mask.insert(g.index());
        }
        let sub = Subgroup { parent, mask, label: label.into() };
        if !sub.is_closed() {
            return Err(Error::InvalidParameter(format!("{} is not a subgroup", sub.label)));
        }
        Ok(sub)
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.mask.count_ones(..)
    }

    pub fn index_in_parent(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        self.parent.contains(g) && self.mask.contains(g.index())
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.mask.contains(i)
    }

    pub fn members(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.mask.ones().map(|i| self.parent.wrap(i))
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    /// The element of least index in the parent that is not a member.
    pub fn first_non_member(&self) -> Option<GroupElement> {
        (0..self.parent.order()).find(|&i| !self.mask.contains(i)).map(|i| self.parent.wrap(i))
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.mask.is_subset(&other.mask)
    }

    /// Closure test: contains 1 and `x y⁻¹` for all members `x`, `y`.
    pub fn is_closed(&self) -> bool {
        if !self.mask.contains(0) {
            return false;
        }
        let g = &self.parent;
        self.mask
            .ones()
            .all(|x| self.mask.ones().all(|y| self.mask.contains(g.mul_index(x, g.inv_index(y)))))
    }

    /// Is the subgroup cyclic? Checks for an element of full order.
    pub fn is_cyclic(&self) -> bool {
        let order = self.order();
        let g = &self.parent;
        self.mask.ones().any(|x| {
            let mut y = x;
            let mut k = 1;
            while y != 0 {
                y = g.mul_index(y, x);
                k += 1;
            }
            k == order
        })
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// All subgroups of index 2.
///
/// Index-2 subgroups are kernels of surjections onto `Z_2`. A map is fixed
/// by the images `(x, y)` of `ρ` and `τ`, and it is well defined exactly
/// when it respects `ρ^M = 1`, `τρτ⁻¹ = ρ^s` and `τ² = ρ^z` modulo 2.
/// The kernels come out in the order `⟨ρ⟩`, `⟨ρ²,τ⟩`, `⟨ρ²,ρτ⟩`.
pub fn index2_subgroups(group: &Group) -> Vec<Subgroup> {
    let m = group.modulus;
    let candidates: &[(usize, usize, &str)] = if group.has_tau {
        &[(0, 1, "⟨ρ⟩"), (1, 0, "⟨ρ²,τ⟩"), (1, 1, "⟨ρ²,ρτ⟩")]
    } else {
        &[(1, 0, "⟨ρ²⟩")]
    };
    let mut out = Vec::new();
    for &(x, y, label) in candidates {
        let respects = (m * x).is_multiple_of(2)
            && ((group.twist + 1) * x).is_multiple_of(2) // s·x ≡ x
            && (2 * y + group.tau_square * x).is_multiple_of(2);
        if !respects {
            continue;
        }
        let mut mask = FixedBitSet::with_capacity(group.order());
        for idx in 0..group.order() {
            let (i, e) = if idx < m { (idx, 0) } else { (idx - m, 1) };
            if (i * x + e * y) % 2 == 0 {
                mask.insert(idx);
            }
        }
        out.push(Subgroup::from_mask(*group, mask, label.to_string()));
    }
    out
}
