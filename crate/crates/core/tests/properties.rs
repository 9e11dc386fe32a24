use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use fusionkit::fusion::{fusion_matrix, ring_axioms_check, su2_oracle_matrix, Spin};
use fusionkit::modular::{verlinde_tensor, verlinde_with_deviation};
use fusionkit::nimrep::{
    canonical_form, expected_nv, find_relabeling, psi_matrix, twisted_eigenvalue_targets,
    TwistedSolution,
};
use fusionkit::weights::enumerate_alphabet;
use fusionkit::{AlgebraParams, ModularData, Weight};
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

/// SU(3) quantum dimension from the q-number product over positive roots.
fn su3_qdim(k: u32, a: u32, b: u32) -> f64 {
    let h = (k + 3) as f64;
    let q = |x: f64| (PI * x / h).sin();
    q((a + 1) as f64) * q((b + 1) as f64) * q((a + b + 2) as f64) / (q(1.0) * q(1.0) * q(2.0))
}

#[test]
fn su3_level3_global_dimension() {
    let md = ModularData::for_level(3, 3).unwrap();
    let oracle: f64 = (0..=3u32)
        .flat_map(|a| (0..=3 - a).map(move |b| (a, b)))
        .map(|(a, b)| su3_qdim(3, a, b).powi(2))
        .sum();
    assert_abs_diff_eq!(oracle, 36.0, epsilon = 1e-9);
    assert_abs_diff_eq!(md.global_dimension_squared(), 36.0, epsilon = 1e-9);
}

#[test]
fn su3_dims_match_product_formula() {
    for k in 1..=8 {
        let md = ModularData::for_level(3, k).unwrap();
        for (w, d) in md.weights().iter().zip(md.dims()) {
            let l = w.labels();
            assert_abs_diff_eq!(*d, su3_qdim(k, l[0], l[1]), epsilon = 1e-10);
        }
    }
}

#[test]
fn su2_verlinde_matches_oracle() {
    for k in 1..=8 {
        let n = verlinde_tensor(&ModularData::for_level(2, k).unwrap()).unwrap();
        for twice in 0..=k {
            let spin = Spin::from_twice(twice);
            let got = fusion_matrix(&spin.weight(), &n).unwrap().matrix;
            assert_eq!(got, su2_oracle_matrix(k, spin).unwrap(), "k={k} spin={spin}");
        }
    }
}

#[test]
fn ring_axioms_on_small_grid() {
    for n in 2..=4 {
        for k in 1..=4 {
            let t = verlinde_tensor(&ModularData::for_level(n, k).unwrap()).unwrap();
            let r = ring_axioms_check(&t);
            assert!(r.all_passed(), "{r}");
        }
    }
}

#[test]
fn self_conjugate_eigenvalues_are_simple() {
    for k in 1..=12 {
        let md = ModularData::for_level(3, k).unwrap();
        let t = twisted_eigenvalue_targets(&md);
        assert!(t.windows(2).all(|w| w[0] - w[1] > 1e-6), "k={k}: {t:?}");
    }
}

#[test]
fn expected_matrices_are_relabelings_of_solutions() {
    for k in 1..=10 {
        let sol = TwistedSolution::compute(k).unwrap();
        let expected = expected_nv(k).unwrap();
        assert_eq!(sol.nv, expected, "k={k}");
        let perm = find_relabeling(&sol.report.classes[0].nv, &expected).unwrap();
        assert_eq!(perm.len(), expected.nrows());
    }
}

#[test]
fn psi_is_real_orthogonal() {
    for k in 1..=8 {
        let md = ModularData::for_level(3, k).unwrap();
        let psi = psi_matrix(&expected_nv(k).unwrap(), &md).unwrap();
        let m = psi.matrix.nrows();
        let prod = &psi.matrix * psi.matrix.adjoint();
        for i in 0..m {
            for j in 0..m {
                let want = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(prod[(i, j)].re, want, epsilon = 1e-10);
                assert_abs_diff_eq!(prod[(i, j)].im, 0.0, epsilon = 1e-12);
            }
        }
        // the vacuum column is the Perron–Frobenius vector
        assert!(psi.matrix.column(0).iter().all(|z| z.re > 0.0));
    }
}

fn grid_params() -> impl Strategy<Value = (usize, u32)> {
    (2usize..=4, 1u32..=6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verlinde_is_integral((n, k) in grid_params()) {
        let md = ModularData::for_level(n, k).unwrap();
        let out = verlinde_with_deviation(&md).unwrap();
        prop_assert!(out.max_deviation < 1e-6);
    }

    #[test]
    fn ratios_are_characters((n, k) in grid_params(), seed in any::<u64>()) {
        let md = ModularData::for_level(n, k).unwrap();
        let t = verlinde_tensor(&md).unwrap();
        let r = md.rank();
        let (a, b, mu) = ((seed % r as u64) as usize, ((seed >> 16) % r as u64) as usize, ((seed >> 32) % r as u64) as usize);
        // λ ↦ S_λμ / S_1μ is multiplicative on the fusion ring
        let lhs = md.ratio(a, mu) * md.ratio(b, mu);
        let rhs: Complex64 = (0..r).map(|c| md.ratio(c, mu) * t.get(a, b, c) as f64).sum();
        prop_assert!((lhs - rhs).norm() < 1e-9);
        // columns of S are common eigenvectors of the fusion matrices
        let w: Weight = md.weights()[a].clone();
        let nm = fusion_matrix(&w, &t).unwrap().matrix;
        let nc = nm.map(|x| Complex64::new(x as f64, 0.0));
        let col = md.s().column(mu).into_owned();
        let diff = &nc * &col - &col * md.ratio(a, mu);
        prop_assert!(diff.camax() < 1e-9);
    }

    #[test]
    fn canonical_form_ignores_labelling(m in 1usize..7, bits in any::<u64>(), shift in any::<usize>()) {
        let mut a = DMatrix::<i64>::zeros(m, m);
        let mut b = bits;
        for i in 0..m {
            for j in i..m {
                let v = (b & 1) as i64;
                b >>= 1;
                a[(i, j)] = v;
                a[(j, i)] = v;
            }
        }
        let perm: Vec<usize> = (0..m).map(|i| (i + shift) % m).rev().collect();
        let p = DMatrix::from_fn(m, m, |i, j| a[(perm[i], perm[j])]);
        prop_assert_eq!(canonical_form(&a).0, canonical_form(&p).0);
        let l = find_relabeling(&a, &p).unwrap();
        for i in 0..m {
            for j in 0..m {
                prop_assert_eq!(a[(l[i], l[j])], p[(i, j)]);
            }
        }
    }
}

#[test]
fn alphabet_sizes() {
    for n in 2..=5 {
        for k in 1..=5 {
            let p = AlgebraParams::new(n, k).unwrap();
            assert_eq!(enumerate_alphabet(&p).len(), p.alphabet_size());
        }
    }
}
