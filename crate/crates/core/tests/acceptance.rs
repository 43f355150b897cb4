//! One PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{random_connected_spec, set, structured_specs, PSD8, SD32_R, SD32_T, SD8};
use drgforge_core::cayley::{build_cayley, build_from_spec};
use drgforge_core::classify::{
    canonicalize, classify_with_report, reference_search_hadamard_pairs, search_hadamard_pairs,
    verify_hadamard_certificate,
};
use drgforge_core::design::{
    check_antipodal_d4_equivalence, search_difference_sets, verify_relative_difference_set,
};
use drgforge_core::drg::{check_cayley, check_distance_regular, distance_module_oracle, recognize_named, BaseMode, NamedGraph};
use drgforge_core::group::index2_subgroups;
use drgforge_core::residue::{autocorrelation, convolve, dft, dft_complex, units};
use drgforge_core::{ConnectionSpec, Group, GroupFamily, IntVector, ResidueSet, Result, SearchResult};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SD: fn(usize) -> GroupFamily = GroupFamily::SemiDihedral;
const PSD: fn(usize) -> GroupFamily = GroupFamily::PseudoSemiDihedral;

fn timed<T>(limit: Duration, f: impl FnOnce() -> Result<T>) -> Result<(T, Duration, bool)> {
    let start = Instant::now();
    let out = f()?;
    let dt = start.elapsed();
    Ok((out, dt, dt < limit))
}

fn hadamard_drg(spec: &ConnectionSpec, want: &str) -> Result<(bool, String)> {
    let x = build_from_spec(spec)?;
    let fast = check_cayley(&x)?;
    let full = check_distance_regular(x.graph(), BaseMode::All)?;
    let got = fast.array.as_ref().map(|a| a.to_string()).unwrap_or_default();
    let ok = fast.is_drg
        && fast == full
        && fast.bipartite
        && fast.antipodal_index == Some(2)
        && fast.diameter == 4
        && got == want;
    Ok((ok, format!("array {got}, bipartite {}, antipodal index {:?}, diameter {}", fast.bipartite, fast.antipodal_index, fast.diameter)))
}

fn criterion_1() -> Result<(bool, String)> {
    let ((ok, detail), dt, fast) = timed(Duration::from_secs(1), || {
        hadamard_drg(&ConnectionSpec::sd(8, &SD8.0, &SD8.1)?, "{8,7,4,1;1,4,7,8}")
    })?;
    Ok((ok && fast, format!("{detail}; {dt:?}")))
}

fn criterion_2() -> Result<(bool, String)> {
    let ((ok, detail), dt, fast) = timed(Duration::from_secs(1), || {
        hadamard_drg(&ConnectionSpec::psd(8, &PSD8.0, &PSD8.1)?, "{8,7,4,1;1,4,7,8}")
    })?;
    Ok((ok && fast, format!("{detail}; {dt:?}")))
}

fn criterion_3() -> Result<(bool, String)> {
    let ((ok, detail), dt, fast) = timed(Duration::from_secs(1), || {
        let c = verify_hadamard_certificate(SD(32), &set(64, &SD32_R), &set(64, &SD32_T))?;
        let counts_ok = c.mu_check.len() == 30 && c.mu_check.values().all(|&v| v == 16);
        let (drg, detail) = hadamard_drg(&ConnectionSpec::sd(32, &SD32_R, &SD32_T)?, "{32,31,16,1;1,16,31,32}")?;
        Ok((c.accepted && counts_ok && drg, detail))
    })?;
    Ok((ok && fast, format!("{detail}; {dt:?}")))
}

/// Every pair re-verifies, and emptiness agrees before and after dedup.
fn search_sound(result: &SearchResult) -> Result<bool> {
    let n = result.n;
    let mut ok = result.pairs.is_empty() == (result.raw_matches == 0);
    for (r, t) in &result.pairs {
        let c = verify_hadamard_certificate(result.family, r, t)?;
        let x = build_from_spec(&ConnectionSpec::new(result.family, r.clone(), t.clone())?)?;
        let report = check_distance_regular(x.graph(), BaseMode::Single)?;
        ok &= c.accepted
            && report.array.map(|a| a.to_string()) == Some(format!("{{{n},{},{},1;1,{},{},{n}}}", n - 1, n / 2, n / 2, n - 1));
    }
    Ok(ok)
}

type Run<'a> = (GroupFamily, Option<(&'a [i64], &'a [i64])>, u64);

fn criterion_4() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    let runs: [Run; 6] = [
        (SD(8), Some((&SD8.0, &SD8.1)), 60),
        (SD(16), None, 1),
        (SD(32), Some((&SD32_R, &SD32_T)), 60),
        (PSD(8), Some((&PSD8.0, &PSD8.1)), 60),
        (PSD(16), None, 60),
        (PSD(32), None, 60),
    ];
    for (family, known, limit) in runs {
        let (result, dt, fast) = timed(Duration::from_secs(limit), || search_hadamard_pairs(family, 0))?;
        let n = family.parameter();
        let expected = match known {
            Some((r, t)) => result.pairs.contains(&canonicalize(family, &set(2 * n, r), &set(2 * n, t))?),
            None => result.pairs.is_empty(),
        };
        let sound = search_sound(&result)?;
        ok &= expected && sound && fast;
        notes.push(format!("{family}: {} pair(s) in {dt:?}", result.pairs.len()));
    }
    // optional extended run, expected empty
    let (result, dt, fast) = timed(Duration::from_secs(600), || search_hadamard_pairs(PSD(64), 0))?;
    ok &= result.pairs.is_empty() && result.raw_matches == 0 && fast;
    notes.push(format!("PSD_64: {} pair(s) in {dt:?}", result.pairs.len()));
    Ok((ok, notes.join(", ")))
}

fn criterion_5() -> Result<(bool, String)> {
    let g = Group::new(SD(8))?;
    let limit = Duration::from_secs(1);
    let (complete, dt1, f1) = timed(limit, || {
        let all: Vec<_> = g.elements().skip(1).collect();
        let x = build_cayley(&g, &all)?;
        let r = check_cayley(&x)?;
        Ok(recognize_named(x.graph()) == NamedGraph::Complete { order: 32 }
            && r.array.map(|a| a.to_string()).as_deref() == Some("{31;1}"))
    })?;
    let (matching, dt2, f2) = timed(limit, || {
        let s: Vec<_> = (1..16).map(|i| g.rho_tau(i)).collect();
        let x = build_cayley(&g, &s)?;
        let r = check_cayley(&x)?;
        Ok(recognize_named(x.graph()) == NamedGraph::CompleteBipartiteMinusMatching { m: 16 }
            && r.diameter == 3
            && r.array.map(|a| a.to_string()).as_deref() == Some("{15,14,1;1,14,15}"))
    })?;
    let (multipartite, dt3, f3) = timed(limit, || {
        let mut ok = true;
        // complement of a subgroup B: the cosets of B are the parts
        for d in [2usize, 4, 8] {
            let b = g.rho_power_subgroup(d);
            let s: Vec<_> = g.elements().filter(|&x| !b.contains(x)).collect();
            let x = build_cayley(&g, &s)?;
            let parts = 32 / b.order();
            ok &= recognize_named(x.graph()) == NamedGraph::CompleteMultipartite { parts, size: b.order() }
                && check_cayley(&x)?.array.map(|a| a.to_string()) == Some(format!("{{{},{};1,{}}}", 32 - b.order(), b.order() - 1, 32 - b.order()));
        }
        Ok(ok)
    })?;
    Ok((
        complete && matching && multipartite && f1 && f2 && f3,
        format!("K_32 {complete} ({dt1:?}), K_{{16,16}}-16K_2 {matching} ({dt2:?}), K_{{t×m}} {multipartite} ({dt3:?})"),
    ))
}

fn criteria_specs() -> Result<Vec<ConnectionSpec>> {
    let all: Vec<i64> = (1..16).collect();
    let every: Vec<i64> = (0..16).collect();
    let odd: Vec<i64> = (1..16).step_by(2).collect();
    let mut specs = vec![
        ConnectionSpec::sd(8, &SD8.0, &SD8.1)?,
        ConnectionSpec::psd(8, &PSD8.0, &PSD8.1)?,
        ConnectionSpec::sd(32, &SD32_R, &SD32_T)?,
        ConnectionSpec::sd(8, &all, &every)?,
        ConnectionSpec::sd(8, &[], &all)?,
        ConnectionSpec::sd(8, &odd, &every)?,
    ];
    for family in [SD(8), PSD(8)] {
        for (r, t) in search_hadamard_pairs(family, 0)?.pairs {
            specs.push(ConnectionSpec::new(family, r, t)?);
        }
    }
    Ok(specs)
}

fn criterion_6() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut specs = criteria_specs()?;
    let listed = specs.len();
    for i in 0..600 {
        specs.push(random_connected_spec(&mut rng, if i % 2 == 0 { SD(8) } else { PSD(8) }));
    }
    let mut disagreements = 0;
    let mut drgs = 0;
    for spec in &specs {
        let x = build_from_spec(spec)?;
        let direct = check_distance_regular(x.graph(), BaseMode::All)?.is_drg;
        let oracle = distance_module_oracle(&x)?;
        drgs += direct as usize;
        disagreements += (direct != oracle) as usize;
    }
    Ok((
        disagreements == 0,
        format!("{} specs ({listed} from criteria 1-5, 600 random), {drgs} distance-regular, {disagreements} disagreements", specs.len()),
    ))
}

fn random_set(rng: &mut impl Rng, m: usize) -> ResidueSet {
    let p: f64 = rng.gen_range(0.0..1.0);
    ResidueSet::from_residues(m, (0..m as i64).filter(|_| rng.gen_bool(p)))
}

fn autocorrelation_checks(rng: &mut impl Rng) -> bool {
    (0..1000).all(|_| {
        let m = rng.gen_range(1..=128);
        let a = random_set(rng, m);
        let c = autocorrelation(&a);
        let k = a.len() as i64;
        let brute = |z: usize| a.iter().filter(|&x| a.contains((x + z) % m)).count() as i64;
        (0..m).all(|z| c.get(z) == c.get((m - z) % m) && c.get(z) == brute(z)) && c.get(0) == k && c.sum() == k * k
    })
}

fn random_vector(rng: &mut impl Rng, m: usize) -> IntVector {
    IntVector::new((0..m).map(|_| rng.gen_range(-9..=9)).collect())
}

fn fourier_checks(rng: &mut impl Rng) -> bool {
    (0..200).all(|_| {
        let m = rng.gen_range(1..=64);
        let f = random_vector(rng, m);
        let g = random_vector(rng, m);
        let ff = dft_complex(&dft::<f64>(&f));
        let inversion = (0..m).all(|z| (ff.values[z] / m as f64 - Complex::new(f.get((m - z) % m) as f64, 0.0)).norm() < 1e-9);
        let fg = dft::<f64>(&convolve(&f, &g).unwrap());
        let product = dft::<f64>(&f).pointwise_mul(&dft::<f64>(&g));
        let convolution = fg.approx_eq(&product, 1e-6);
        let a = random_set(rng, m);
        let fa = dft::<f64>(&a.indicator());
        let fc = dft::<f64>(&autocorrelation(&a));
        let wiener = (0..m).all(|z| (fc.values[z] - Complex::new(fa.values[z].norm_sqr(), 0.0)).norm() < 1e-6);
        inversion && convolution && wiener
    })
}

/// `(aR, b + aT)`: `b` even for SD; `b ∈ {0, n}` for PSD, where `ρ ↦ ρ^a`,
/// `τ ↦ ρ^b τ` is an automorphism exactly for those `b`.
fn random_image(rng: &mut impl Rng, spec: &ConnectionSpec) -> Result<ConnectionSpec> {
    let n = spec.n();
    let m = 2 * n;
    let us = units(m);
    let a = us[rng.gen_range(0..us.len())] as i64;
    let b = match spec.family() {
        GroupFamily::SemiDihedral(_) => 2 * rng.gen_range(0..n) as i64,
        _ => n as i64 * rng.gen_range(0..2),
    };
    ConnectionSpec::new(spec.family(), spec.r().scaled(a), spec.t().scaled(a).shifted(b))
}

fn invariance_checks(rng: &mut impl Rng) -> Result<(bool, usize)> {
    let mut specs = criteria_specs()?;
    specs.extend(structured_specs(SD(8)).into_iter().step_by(4));
    specs.extend(structured_specs(PSD(8)));
    for i in 0..40 {
        specs.push(random_connected_spec(rng, if i % 2 == 0 { SD(8) } else { PSD(8) }));
    }
    let mut ok = true;
    for spec in &specs {
        let (case, report) = classify_with_report(spec)?;
        let array = report.and_then(|r| r.array);
        for _ in 0..50 {
            let image = random_image(rng, spec)?;
            let (c2, r2) = classify_with_report(&image)?;
            ok &= c2.name() == case.name() && r2.and_then(|r| r.array) == array;
        }
        if matches!(spec.family(), GroupFamily::PseudoSemiDihedral(_)) {
            let shifted = ConnectionSpec::new(spec.family(), spec.r().clone(), spec.t().shifted(spec.n() as i64))?;
            ok &= classify_with_report(&shifted)?.0.name() == case.name();
        }
    }
    Ok((ok, specs.len()))
}

fn criterion_7() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let auto = autocorrelation_checks(&mut rng);
    let fourier = fourier_checks(&mut rng);
    let (invariant, count) = invariance_checks(&mut rng)?;
    Ok((
        auto && fourier && invariant,
        format!("autocorrelation {auto}, Fourier {fourier}, affine invariance {invariant} ({count} specs x 50 maps)"),
    ))
}

fn criterion_8() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for family in [SD(8), SD(16), PSD(8), PSD(16)] {
        let hashed = search_hadamard_pairs(family, 0)?;
        let reference = reference_search_hadamard_pairs(family)?;
        let same = hashed.pairs == reference.pairs && hashed.raw_matches == reference.raw_matches;
        ok &= same;
        notes.push(format!("{family}: {} raw / {} canonical", reference.raw_matches, reference.pairs.len()));
    }
    Ok((ok, notes.join(", ")))
}

fn criterion_9() -> Result<(bool, String)> {
    let mut ok = true;
    let mut checked = 0;
    for family in [SD(8), SD(32), PSD(8)] {
        let n = family.parameter();
        for (r, t) in search_hadamard_pairs(family, 0)?.pairs {
            let x = build_from_spec(&ConnectionSpec::new(family, r, t)?)?;
            let g = x.group();
            let rep = check_antipodal_d4_equivalence(&x, false)?;
            ok &= rep.graph_side && rep.design_side && rep.consistent();
            ok &= rep.design.as_ref().is_some_and(|d| d.parameters == vec![n, 2, n, n / 2] && d.symmetric);
            // D = ρ^{-1}S directly, relative to ⟨ρ^n⟩
            let rho_inv = g.rho(-1);
            let d: Vec<_> = x.connection().iter().map(|&s| g.mul(rho_inv, s)).collect::<Result<_>>()?;
            let forbidden = g.rho_power_subgroup(n);
            let h = index2_subgroups(g).into_iter().find(|h| d.iter().all(|&e| h.contains(e)));
            let direct = match h {
                Some(h) => verify_relative_difference_set(&h, &forbidden, &d)?,
                None => None,
            };
            ok &= direct.is_some_and(|r| r.parameters == vec![n, 2, n, n / 2] && r.symmetric);
            checked += 1;
        }
    }
    let (found, dt, fast) = timed(Duration::from_secs(1), || search_difference_sets(&Group::new(GroupFamily::Cyclic(16))?.full(), 6))?;
    ok &= found.is_empty() && fast && checked > 0;
    Ok((ok, format!("{checked} pairs as (n,2,n,n/2) relative difference sets; (16,6,2) in Z_16: {} found in {dt:?}", found.len())))
}

type Criterion = (u8, &'static str, fn() -> Result<(bool, String)>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "SD(8) known pair is a Hadamard graph", criterion_1),
        (2, "PSD(8) known pair is a Hadamard graph", criterion_2),
        (3, "SD(32) known pair is a Hadamard pair", criterion_3),
        (4, "search finds exactly the expected pairs", criterion_4),
        (5, "trivial constructions are recognized", criterion_5),
        (6, "distance-module oracle agrees with the direct check", criterion_6),
        (7, "property suites", criterion_7),
        (8, "reference and hashed searches agree", criterion_8),
        (9, "design-theory checks", criterion_9),
    ];
    let mut failures = 0;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let (pass, detail) = match outcome {
            Ok(Ok(v)) => v,
            Ok(Err(e)) => (false, format!("error: {e}")),
            Err(_) => (false, "panicked".to_string()),
        };
        failures += !pass as usize;
        println!(
            "criterion {id}: {} {title} [{:.2?}] {detail}",
            if pass { "PASS" } else { "FAIL" },
            start.elapsed()
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criterion(s) failed");
        ExitCode::FAILURE
    }
}
