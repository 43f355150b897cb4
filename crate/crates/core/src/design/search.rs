use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{GroupElement, Subgroup};

/// Largest ambient subgroup [`search_difference_sets`] accepts.
pub const MAX_SEARCH_ORDER: usize = 64;

/// The lexicographically least right translate `Dg`, `g ∈ H`, as sorted
/// element indices. Right translates have the same differences
/// `(Dg)(Dg)⁻¹ = DD⁻¹`, so they are difference sets together.
pub fn canonical_translate(h: &Subgroup, d: &[GroupElement]) -> Vec<usize> {
    let group = h.parent();
    h.members()
        .map(|g| {
            let mut t: Vec<usize> = d.iter().map(|x| group.mul_index(x.index(), g.index())).collect();
            t.sort_unstable();
            t
        })
        .min()
        .unwrap_or_default()
}

struct Search<'a> {
    h: &'a Subgroup,
    members: Vec<usize>,
    k: usize,
    lambda: usize,
    counts: Vec<usize>,
    chosen: Vec<usize>,
    found: BTreeSet<Vec<usize>>,
}

impl Search<'_> {
    /// Adds `x`, updating difference counts; returns false (with counts
    /// restored) when some count would exceed `λ`.
    fn push(&mut self, x: usize) -> bool {
        let group = self.h.parent();
        let xi = group.inv_index(x);
        let mut touched = Vec::with_capacity(2 * self.chosen.len());
        let mut ok = true;
        for &y in &self.chosen {
            for g in [group.mul_index(x, group.inv_index(y)), group.mul_index(y, xi)] {
                self.counts[g] += 1;
                touched.push(g);
                if self.counts[g] > self.lambda {
                    ok = false;
                }
            }
            if !ok {
                break;
            }
        }
        if ok {
            self.chosen.push(x);
        } else {
            for g in touched {
                self.counts[g] -= 1;
            }
        }
        ok
    }

    fn pop(&mut self) {
        let group = self.h.parent();
        let x = self.chosen.pop().expect("non-empty");
        let xi = group.inv_index(x);
        for &y in &self.chosen {
            self.counts[group.mul_index(x, group.inv_index(y))] -= 1;
            self.counts[group.mul_index(y, xi)] -= 1;
        }
    }

    fn run(&mut self, start: usize) {
        if self.chosen.len() == self.k {
            let group = self.h.parent();
            let d: Vec<GroupElement> = self.chosen.iter().map(|&i| group.element(i).expect("member")).collect();
            self.found.insert(canonical_translate(self.h, &d));
            return;
        }
        let remaining = self.k - self.chosen.len();
        for pos in start..self.members.len() {
            if self.members.len() - pos < remaining {
                break;
            }
            if self.push(self.members[pos]) {
                self.run(pos + 1);
                self.pop();
            }
        }
    }
}

/// All `k`-subsets of `H` that are difference sets, one per class of right
/// translates (each reported as its least translate, sorted element indices,
/// results in lexicographic order).
///
/// A set passes the counting filter `k(k−1) = λ(|H|−1)` first. The search
/// fixes the identity (every difference set has a translate containing it)
/// and extends in increasing index order, pruning as soon as some
/// difference occurs more than `λ` times. Once `k` elements are placed with
/// every count at most `λ`, the counting identity forces every count to be
/// exactly `λ`.
pub fn search_difference_sets(h: &Subgroup, k: usize) -> Result<Vec<Vec<usize>>> {
    let order = h.order();
    if order > MAX_SEARCH_ORDER {
        return Err(Error::TooLarge(format!("subgroup of order {order} (limit {MAX_SEARCH_ORDER})")));
    }
    if k > order {
        return Ok(Vec::new());
    }
    if k == 0 {
        return Ok(vec![Vec::new()]);
    }
    let lambda = if order == 1 {
        0
    } else {
        if !(k * (k - 1)).is_multiple_of(order - 1) {
            return Ok(Vec::new());
        }
        k * (k - 1) / (order - 1)
    };
    let members: Vec<usize> = h.members().map(|g| g.index()).collect();
    let mut s = Search {
        h,
        members,
        k,
        lambda,
        counts: vec![0; h.parent().order()],
        chosen: Vec::with_capacity(k),
        found: BTreeSet::new(),
    };
    // the identity has index 0 and is the first member
    s.push(0);
    s.run(1);
    Ok(s.found.into_iter().collect())
}
