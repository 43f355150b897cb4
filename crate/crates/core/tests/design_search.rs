//! The backtracking difference-set search against plain enumeration of all
//! k-subsets.

use std::collections::BTreeSet;

use drgforge_core::design::{canonical_translate, search_difference_sets, verify_difference_set};
use drgforge_core::{Group, GroupFamily, Subgroup};

/// All k-subsets with constant difference counts, reduced to least right
/// translates, by direct counting.
fn naive(h: &Subgroup, k: usize) -> BTreeSet<Vec<usize>> {
    let g = h.parent();
    let members: Vec<usize> = h.members().map(|x| x.index()).collect();
    let mut out = BTreeSet::new();
    let mut pick = Vec::with_capacity(k);
    fn rec(g: &Group, h: &Subgroup, members: &[usize], k: usize, start: usize, pick: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if pick.len() == k {
            let mut counts = vec![0usize; g.order()];
            for &x in pick.iter() {
                for &y in pick.iter() {
                    if x != y {
                        counts[g.mul_index(x, g.inv_index(y))] += 1;
                    }
                }
            }
            let mut vals = members.iter().filter(|&&m| m != 0).map(|&m| counts[m]);
            let first = vals.next();
            if vals.all(|v| Some(v) == first) {
                let d: Vec<_> = pick.iter().map(|&i| g.element(i).unwrap()).collect();
                out.insert(canonical_translate(h, &d));
            }
            return;
        }
        for i in start..members.len() {
            pick.push(members[i]);
            rec(g, h, members, k, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(g, h, &members, k, 0, &mut pick, &mut out);
    out
}

#[test]
fn search_matches_enumeration() {
    let cases = [
        (GroupFamily::Cyclic(7), 3),
        (GroupFamily::Cyclic(13), 4),
        (GroupFamily::Cyclic(15), 7),
        (GroupFamily::Cyclic(16), 6),
        (GroupFamily::Dihedral(8), 6),
        (GroupFamily::SemiDihedral(4), 6),
        (GroupFamily::PseudoSemiDihedral(4), 6),
        (GroupFamily::Dicyclic(4), 6),
        (GroupFamily::CyclicTimesZ2(8), 6),
        (GroupFamily::Cyclic(11), 5),
    ];
    for (family, k) in cases {
        let g = Group::new(family).unwrap();
        let h = g.full();
        let found: BTreeSet<Vec<usize>> = search_difference_sets(&h, k).unwrap().into_iter().collect();
        assert_eq!(found, naive(&h, k), "{family} k = {k}");
        for d in &found {
            let elems: Vec<_> = d.iter().map(|&i| g.element(i).unwrap()).collect();
            assert!(verify_difference_set(&h, &elems).unwrap().is_some());
        }
    }
}

#[test]
fn known_counts() {
    let g = Group::new(GroupFamily::Cyclic(16)).unwrap();
    assert!(search_difference_sets(&g.full(), 6).unwrap().is_empty());
    let g = Group::new(GroupFamily::Dihedral(8)).unwrap();
    assert!(search_difference_sets(&g.full(), 6).unwrap().is_empty());
    let g = Group::new(GroupFamily::CyclicTimesZ2(8)).unwrap();
    assert!(!search_difference_sets(&g.full(), 6).unwrap().is_empty());
}
