use crate::error::{Error, Result};

use super::Group;

/// Largest order for which a full multiplication table is built.
pub const MAX_TABLE_ORDER: usize = 128;

/// Dense multiplication table, built independently of the closed-form
/// product by rewriting `ρ^a τ^e · g` one generator of `g` at a time with
/// the rules `τρ → ρ^s τ`, `ττ → ρ^z`, `ρ^M → 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<u32>,
}

impl CayleyTable {
    pub(super) fn build(group: &Group) -> Result<Self> {
        let order = group.order();
        if order > MAX_TABLE_ORDER {
            return Err(Error::TooLarge(format!("Cayley table for order {order} (limit {MAX_TABLE_ORDER})")));
        }
        let m = group.modulus();
        let mut entries = Vec::with_capacity(order * order);
        for g in 0..order {
            for h in 0..order {
                let (mut a, mut e) = if g < m { (g, false) } else { (g - m, true) };
                let (b, f) = if h < m { (h, false) } else { (h - m, true) };
                for _ in 0..b {
                    // right multiplication by ρ
                    a = if e { (a + group.twist()) % m } else { (a + 1) % m };
                }
                if f {
                    // right multiplication by τ
                    if e {
                        a = (a + group.tau_square()) % m;
                        e = false;
                    } else {
                        e = true;
                    }
                }
                entries.push(if e { m + a } else { a } as u32);
            }
        }
        Ok(CayleyTable { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn product(&self, g: usize, h: usize) -> usize {
        self.entries[g * self.order + h] as usize
    }

    pub fn is_associative(&self) -> bool {
        (0..self.order).all(|a| {
            (0..self.order).all(|b| {
                let ab = self.product(a, b);
                (0..self.order).all(|c| self.product(ab, c) == self.product(a, self.product(b, c)))
            })
        })
    }

    /// Each row and column is a permutation and index 0 is a two-sided identity.
    pub fn is_latin_with_identity(&self) -> bool {
        let n = self.order;
        let rows_ok = (0..n).all(|g| {
            let mut seen = vec![false; n];
            (0..n).all(|h| !std::mem::replace(&mut seen[self.product(g, h)], true))
        });
        let cols_ok = (0..n).all(|h| {
            let mut seen = vec![false; n];
            (0..n).all(|g| !std::mem::replace(&mut seen[self.product(g, h)], true))
        });
        rows_ok && cols_ok && (0..n).all(|g| self.product(0, g) == g && self.product(g, 0) == g)
    }
}
