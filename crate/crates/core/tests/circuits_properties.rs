use std::collections::BTreeSet;

use hypercell::circuits::{
    circuit_40_obstruction, circuit_signature, find_circuits, gram_matrix, relative_gap, symmetric_eigenvalues,
    GramParams,
};
use hypercell::lattice::{canonical_24cell, hypercube};
use nalgebra::Matrix4;
use proptest::prelude::*;

fn rho() -> impl Strategy<Value = f64> {
    // (0, 20], keeping cosh distinguishable from 1.
    (1e-6f64..=20.0).prop_map(|x| x)
}

fn nalgebra_spectrum(p: GramParams) -> Vec<f64> {
    let g = gram_matrix(p);
    let m = Matrix4::from_fn(|i, j| g[i][j]);
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[test]
fn documented_spectra() {
    let o = circuit_40_obstruction(GramParams::new(1.0, 1.0).unwrap());
    let want = [-0.5430806348152437, -0.5430806348152437, 2.5430806348152437, 2.5430806348152437];
    for (a, b) in o.eigenvalues.iter().zip(want) {
        assert!((a - b).abs() < 1e-15);
    }
    let o = circuit_40_obstruction(GramParams::new(1.0, 2.0).unwrap());
    let want = [-2.7621956910836314, -0.5430806348152437, 2.5430806348152437, 4.762195691083631];
    for (a, b) in o.eigenvalues.iter().zip(want) {
        assert!((a - b).abs() < 1e-14);
    }
}

#[test]
fn tesseract_circuits_are_its_coordinate_squares() {
    let h = hypercube(4).unwrap();
    let circuits = find_circuits(&h, 4, 0).unwrap();
    // Facets x_i = 0 / 1 for two coordinates i, j form one square circuit.
    let sigs: BTreeSet<BTreeSet<Vec<u32>>> = circuits.iter().map(|c| circuit_signature(&h, c)).collect();
    assert_eq!(sigs.len(), 6);
    for s in &sigs {
        let facets: Vec<&Vec<u32>> = s.iter().collect();
        for i in 0..4 {
            for j in i + 1..4 {
                let common = facets[i].iter().filter(|v| facets[j].contains(v)).count();
                assert!(common == 0 || common == 4);
            }
        }
    }
    assert!(find_circuits(&h, 2, 1).unwrap().is_empty());
}

#[test]
fn cell24_has_none_of_the_forbidden_types() {
    let c = canonical_24cell();
    for (k, l) in [(3, 0), (4, 0), (2, 1)] {
        assert!(find_circuits(&c, k, l).unwrap().is_empty(), "({k}, {l})");
    }
}

#[test]
fn short_circuits_are_rejected() {
    assert!(find_circuits(&canonical_24cell(), 1, 1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn gram_matrix_shape(a in rho(), b in rho()) {
        let g = gram_matrix(GramParams::new(a, b).unwrap());
        for (i, row) in g.iter().enumerate() {
            prop_assert_eq!(row[i], 1.0);
            for (j, x) in row.iter().enumerate() {
                prop_assert_eq!(*x, g[j][i]);
            }
        }
        prop_assert!((g[0][2] + a.cosh()).abs() <= 1e-15 * a.cosh());
        prop_assert_eq!(g[0][1], 0.0);
    }

    #[test]
    fn spectra_agree_and_two_are_negative(a in rho(), b in rho()) {
        let p = GramParams::new(a, b).unwrap();
        let o = circuit_40_obstruction(p);
        prop_assert_eq!(o.negative_count, 2);
        prop_assert!(o.violates_lorentzian);
        prop_assert!(o.max_relative_gap <= 1e-12);
        for (x, y) in o.eigenvalues.iter().zip(nalgebra_spectrum(p)) {
            // Independent solver; its rounding is relative to the matrix norm.
            prop_assert!((x - y).abs() <= 1e-12 * a.cosh().max(b.cosh()), "{x} vs {y}");
        }
        let again = symmetric_eigenvalues(&gram_matrix(p));
        for (x, y) in o.eigenvalues.iter().zip(again) {
            prop_assert!(relative_gap(*x, y) <= 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn circuits_survive_relabeling(seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let h = hypercube(4).unwrap();
        let mut p: Vec<u32> = (0..16).collect();
        p.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let r = h.relabeled(&p).unwrap();
        let mapped: BTreeSet<BTreeSet<Vec<u32>>> = find_circuits(&h, 4, 0)
            .unwrap()
            .iter()
            .map(|c| {
                circuit_signature(&h, c)
                    .into_iter()
                    .map(|f| {
                        let mut g: Vec<u32> = f.iter().map(|&v| p[v as usize]).collect();
                        g.sort_unstable();
                        g
                    })
                    .collect()
            })
            .collect();
        let found: BTreeSet<BTreeSet<Vec<u32>>> =
            find_circuits(&r, 4, 0).unwrap().iter().map(|c| circuit_signature(&r, c)).collect();
        prop_assert_eq!(found, mapped);
    }
}
