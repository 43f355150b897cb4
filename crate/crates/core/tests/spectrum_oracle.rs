//! Spectra from intersection arrays against dense eigenvalues of the
//! adjacency matrix.

mod common;

use common::{PSD8, SD32_R, SD32_T, SD8};
use drgforge_core::cayley::{build_from_spec, Graph};
use drgforge_core::drg::{antipodal_quotient, check_distance_regular, halved_graphs, intersection_matrix_spectrum, BaseMode};
use drgforge_core::{ConnectionSpec, GroupFamily, SpectrumReport, SpectrumReport32};
use nalgebra::DMatrix;

fn dense_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let a = DMatrix::from_fn(n, n, |i, j| if g.is_adjacent(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = a.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    ev
}

fn check(g: &Graph) {
    let report = check_distance_regular(g, BaseMode::All).unwrap();
    let array = report.array.expect("distance-regular");
    let s: SpectrumReport = intersection_matrix_spectrum(&array, g.order()).unwrap();
    let expanded: Vec<f64> = s
        .eigenvalues
        .iter()
        .zip(&s.multiplicities)
        .flat_map(|(&t, &m)| std::iter::repeat_n(t, m))
        .collect();
    let dense = dense_eigenvalues(g);
    assert_eq!(expanded.len(), dense.len());
    for (a, b) in expanded.iter().zip(&dense) {
        assert!((a - b).abs() < 1e-6, "{array}: {a} vs {b}");
    }
    assert!(s.trace().abs() < 1e-6);
    let s32: SpectrumReport32 = intersection_matrix_spectrum(&array, g.order()).unwrap();
    assert_eq!(s32.multiplicities, s.multiplicities);
}

fn graphs() -> Vec<Graph> {
    let all: Vec<i64> = (1..16).collect();
    let every: Vec<i64> = (0..16).collect();
    let odd: Vec<i64> = (1..16).step_by(2).collect();
    let specs = [
        ConnectionSpec::sd(8, &SD8.0, &SD8.1).unwrap(),
        ConnectionSpec::psd(8, &PSD8.0, &PSD8.1).unwrap(),
        ConnectionSpec::sd(32, &SD32_R, &SD32_T).unwrap(),
        ConnectionSpec::sd(8, &all, &every).unwrap(),
        ConnectionSpec::sd(8, &[], &all).unwrap(),
        ConnectionSpec::sd(8, &odd, &every).unwrap(),
        ConnectionSpec::from_slices(GroupFamily::Dihedral(7), &[], &[1, 2, 4]).unwrap(),
        ConnectionSpec::from_slices(GroupFamily::Cyclic(13), &[1, 3, 4, 9, 10, 12], &[]).unwrap(),
    ];
    let mut out: Vec<Graph> = specs.iter().map(|s| build_from_spec(s).unwrap().graph().clone()).collect();
    let h = build_from_spec(&specs[0]).unwrap();
    out.push(antipodal_quotient(h.graph()).unwrap());
    let (a, b) = halved_graphs(h.graph()).unwrap();
    out.extend([a, b]);
    out.push(Graph::cycle(9));
    out
}

#[test]
fn array_spectra_match_dense_eigenvalues() {
    for g in graphs() {
        check(&g);
    }
}
