mod common;

use common::random_spec;
use drgforge_core::cayley::{build_from_spec, neighborhood_formula};
use drgforge_core::classify::{canonicalize, classify_with_report};
use drgforge_core::design::{difference_set_identity, verify_difference_set};
use drgforge_core::drg::IntersectionArray;
use drgforge_core::residue::{autocorrelation, units};
use drgforge_core::{Group, GroupFamily, ResidueSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn family() -> impl Strategy<Value = GroupFamily> {
    prop_oneof![
        (1usize..20).prop_map(GroupFamily::Cyclic),
        (1usize..12).prop_map(GroupFamily::CyclicTimesZ2),
        (1usize..12).prop_map(GroupFamily::Dihedral),
        (1usize..8).prop_map(GroupFamily::Dicyclic),
        prop_oneof![Just(4usize), Just(8), Just(16)].prop_map(GroupFamily::SemiDihedral),
        prop_oneof![Just(4usize), Just(8), Just(16)].prop_map(GroupFamily::PseudoSemiDihedral),
    ]
}

fn residue_set() -> impl Strategy<Value = ResidueSet> {
    (1usize..=128).prop_flat_map(|m| {
        prop::collection::vec(any::<bool>(), m)
            .prop_map(move |bits| ResidueSet::from_residues(m, (0..m as i64).filter(|&x| bits[x as usize])))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn group_axioms(f in family(), seed in any::<u64>()) {
        let g = Group::new(f).unwrap();
        let o = g.order();
        let (a, b, c) = ((seed % o as u64) as usize, ((seed >> 16) % o as u64) as usize, ((seed >> 32) % o as u64) as usize);
        prop_assert_eq!(g.mul_index(g.mul_index(a, b), c), g.mul_index(a, g.mul_index(b, c)));
        prop_assert_eq!(g.mul_index(a, g.inv_index(a)), 0);
        prop_assert_eq!(g.mul_index(0, a), a);
        prop_assert_eq!(g.pow_index(a, o), 0);
    }

    #[test]
    fn autocorrelation_is_symmetric_with_mass_k_squared(a in residue_set()) {
        let m = a.modulus();
        let c = autocorrelation(&a);
        let k = a.len() as i64;
        prop_assert_eq!(c.get(0), k);
        prop_assert_eq!(c.sum(), k * k);
        for z in 0..m {
            prop_assert_eq!(c.get(z), c.get((m - z) % m));
        }
    }

    #[test]
    fn affine_maps_invert(a in residue_set(), b in any::<i64>(), pick in any::<usize>()) {
        let m = a.modulus();
        let us = units(m);
        let u = us[pick % us.len()] as i64;
        let inv = us.iter().map(|&v| v as i64).find(|&v| (u * v - 1).rem_euclid(m as i64) == 0).unwrap();
        let image = a.affine_image(u, b).unwrap();
        prop_assert_eq!(image.len(), a.len());
        prop_assert_eq!(image.shifted(-b).scaled(inv), a.clone());
        prop_assert_eq!(a.negated().negated(), a);
    }

    #[test]
    fn array_text_round_trips(k in 2usize..12, mu in 1usize..6) {
        // {k, k−1, k−μ; 1, μ, k} when feasible
        prop_assume!(mu < k && (k * (k - 1)) % mu == 0);
        let text = format!("{{{k},{},{};1,{mu},{k}}}", k - 1, k - mu);
        if let Ok(a) = text.parse::<IntersectionArray>() {
            prop_assert_eq!(a.to_string(), text);
        }
    }

    #[test]
    fn neighborhoods_match_formula(seed in any::<u64>(), which in 0usize..4) {
        let f = [GroupFamily::SemiDihedral(8), GroupFamily::PseudoSemiDihedral(8), GroupFamily::SemiDihedral(16), GroupFamily::PseudoSemiDihedral(4)][which];
        let spec = random_spec(&mut ChaCha8Rng::seed_from_u64(seed), f);
        let x = build_from_spec(&spec).unwrap();
        for v in x.group().elements() {
            prop_assert_eq!(x.neighborhood(v).unwrap(), neighborhood_formula(&spec, v).unwrap());
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_invariant(seed in any::<u64>(), psd in any::<bool>(), pick in any::<usize>(), b in 0i64..8) {
        let f = if psd { GroupFamily::PseudoSemiDihedral(8) } else { GroupFamily::SemiDihedral(8) };
        let spec = random_spec(&mut ChaCha8Rng::seed_from_u64(seed), f);
        let c = canonicalize(f, spec.r(), spec.t()).unwrap();
        prop_assert_eq!(canonicalize(f, &c.0, &c.1).unwrap(), c.clone());
        let image = if psd {
            (spec.r().clone(), spec.t().shifted(8))
        } else {
            let us = units(16);
            let a = us[pick % us.len()] as i64;
            (spec.r().scaled(a), spec.t().scaled(a).shifted(2 * b))
        };
        prop_assert_eq!(canonicalize(f, &image.0, &image.1).unwrap(), c);
    }

    #[test]
    fn classification_is_affine_invariant(seed in any::<u64>(), pick in any::<usize>(), b in 0i64..8) {
        let f = GroupFamily::SemiDihedral(8);
        let spec = random_spec(&mut ChaCha8Rng::seed_from_u64(seed), f);
        let us = units(16);
        let a = us[pick % us.len()] as i64;
        let image = drgforge_core::ConnectionSpec::new(f, spec.r().scaled(a), spec.t().scaled(a).shifted(2 * b)).unwrap();
        let (c1, r1) = classify_with_report(&spec).unwrap();
        let (c2, r2) = classify_with_report(&image).unwrap();
        prop_assert_eq!(c1.name(), c2.name());
        prop_assert_eq!(r1.and_then(|r| r.array), r2.and_then(|r| r.array));
    }

    #[test]
    fn counting_and_group_algebra_agree(f in family(), bits in any::<u64>()) {
        let g = Group::new(f).unwrap();
        let h = g.full();
        let d: Vec<_> = g.elements().filter(|x| bits >> (x.index() % 64) & 1 == 1).collect();
        let verdict = verify_difference_set(&h, &d).unwrap();
        let k = d.len();
        let lambda_candidates: Vec<usize> = (0..=k).collect();
        let identity = lambda_candidates.iter().find(|&&l| difference_set_identity(&h, &d, l).unwrap());
        prop_assert_eq!(verdict.map(|r| r.multiplicity()), identity.copied());
    }
}
