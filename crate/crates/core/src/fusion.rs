//! Fusion-ring structure on top of the Verlinde tensor.

use std::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::modular::FusionTensor;
use crate::par::map_indices;
use crate::report::{Check, Report};
use crate::weights::{AlgebraParams, Weight};

/// Matrix `(N_λ)_{μν} = N_{λμ}^ν` in alphabet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionMatrix {
    pub label: Weight,
    pub matrix: DMatrix<i64>,
}

/// An SU(2) spin stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spin(u32);

impl Spin {
    pub fn from_twice(twice: u32) -> Self {
        Spin(twice)
    }

    pub fn integer(j: u32) -> Self {
        Spin(2 * j)
    }

    pub fn twice(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    /// The SU(2) weight with Dynkin label `2j`.
    pub fn weight(self) -> Weight {
        Weight::new(vec![self.0])
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Non-zero terms of `λ × μ` as `(ν, N_{λμ}^ν)`.
pub fn fuse(lambda: &Weight, mu: &Weight, n: &FusionTensor) -> Result<Vec<(Weight, u32)>> {
    let l = index(n, lambda)?;
    let m = index(n, mu)?;
    Ok((0..n.rank())
        .filter_map(|nu| {
            let c = n.get(l, m, nu);
            (c > 0).then(|| (n.weights()[nu].clone(), c))
        })
        .collect())
}

pub fn fusion_matrix(lambda: &Weight, n: &FusionTensor) -> Result<FusionMatrix> {
    let l = index(n, lambda)?;
    let r = n.rank();
    Ok(FusionMatrix {
        label: lambda.clone(),
        matrix: DMatrix::from_fn(r, r, |m, nu| n.get(l, m, nu) as i64),
    })
}

fn index(n: &FusionTensor, w: &Weight) -> Result<usize> {
    n.index_of(w).ok_or_else(|| {
        let (rank, k) = tensor_params(n);
        Error::InvalidWeight {
            labels: w.labels().to_vec(),
            n: rank,
            k,
        }
    })
}

/// `(n, k)` recovered from the alphabet a tensor is indexed by.
pub fn tensor_params(n: &FusionTensor) -> (usize, u32) {
    let rank = n.weights().first().map_or(0, |w| w.labels().len()) + 1;
    let k = n.weights().iter().map(Weight::level).max().unwrap_or(0);
    (rank, k)
}

/// Truncated Clebsch–Gordan rule of SU(2)_k:
/// `i × j = ⊕ l` for `|i−j| ≤ l ≤ min(i+j, k−i−j)` in integer steps.
pub fn su2_fusion_oracle(k: u32, i: Spin, j: Spin) -> Result<Vec<Spin>> {
    for s in [i, j] {
        if s.0 > k {
            return Err(Error::InvalidSpin { twice: s.0, k });
        }
    }
    let lo = i.0.abs_diff(j.0);
    let sum = i.0 + j.0;
    if sum > 2 * k {
        return Ok(Vec::new());
    }
    let hi = sum.min(2 * k - sum);
    if lo > hi {
        return Ok(Vec::new());
    }
    Ok((lo..=hi).step_by(2).map(Spin).collect())
}

/// Restriction of an SU(2) fusion matrix to the integer spins `0, 1, …`.
pub fn restrict_to_integer_spins(m: &FusionMatrix) -> DMatrix<i64> {
    let r = m.matrix.nrows();
    let keep: Vec<usize> = (0..r).step_by(2).collect();
    DMatrix::from_fn(keep.len(), keep.len(), |a, b| m.matrix[(keep[a], keep[b])])
}

/// Associativity, commutativity, unit and conjugation symmetry, plus
/// `N_{m−1}² = N_1 + I` on integer spins for SU(2) at odd level `2m−1`.
pub fn ring_axioms_check(n: &FusionTensor) -> Report {
    let r = n.rank();
    let conj = n.conj();
    let (rank, k) = tensor_params(n);
    let mut report = Report::new(format!("fusion ring axioms for SU({rank})_{k}"));

    let mut comm = true;
    let mut unit = true;
    let mut conj_sym = true;
    let mut duality = true;
    for l in 0..r {
        for m in 0..r {
            for nu in 0..r {
                let v = n.get(l, m, nu);
                comm &= v == n.get(m, l, nu);
                conj_sym &= v == n.get(conj[m], conj[l], conj[nu]);
            }
            unit &= n.get(0, l, m) == u32::from(l == m);
            duality &= n.get(l, m, 0) == u32::from(conj[l] == m);
        }
    }
    report.push(Check::boolean("commutativity", comm));
    report.push(Check::boolean("vacuum is unit", unit));
    report.push(Check::boolean("conjugation symmetry", conj_sym));
    report.push(Check::boolean("duality N_{l,m}^1 = delta(m, conj l)", duality));

    // sparse supports of each product λ×μ
    let support: Vec<Vec<(usize, u32)>> = (0..r * r)
        .map(|lm| {
            let (l, m) = (lm / r, lm % r);
            (0..r)
                .filter_map(|s| {
                    let c = n.get(l, m, s);
                    (c > 0).then_some((s, c))
                })
                .collect()
        })
        .collect();
    let assoc_failures: usize = map_indices(r, |l| {
        let mut bad = 0usize;
        let mut lhs = vec![0u64; r];
        let mut rhs = vec![0u64; r];
        for m in 0..r {
            for nu in 0..r {
                lhs.iter_mut().for_each(|x| *x = 0);
                rhs.iter_mut().for_each(|x| *x = 0);
                for &(s, c) in &support[l * r + m] {
                    for &(t, d) in &support[s * r + nu] {
                        lhs[t] += (c * d) as u64;
                    }
                }
                for &(s, c) in &support[m * r + nu] {
                    for &(t, d) in &support[l * r + s] {
                        rhs[t] += (c * d) as u64;
                    }
                }
                if lhs != rhs {
                    bad += 1;
                }
            }
        }
        bad
    })
    .into_iter()
    .sum();
    report.push(
        Check::boolean("associativity", assoc_failures == 0)
            .with_detail(format!("{assoc_failures} failing (l,m,n) triples")),
    );

    if rank == 2 && k % 2 == 1 && k >= 3 {
        let m = k.div_ceil(2);
        let ok = su2_odd_level_square_identity(n, m).unwrap_or(false);
        report.push(Check::boolean(
            format!("N_{}^2 = N_1 + I on integer spins", m - 1),
            ok,
        ));
    }
    report
}

/// `N_{m−1}² == N_1 + I` restricted to integer spins of SU(2)_{2m−1}.
fn su2_odd_level_square_identity(n: &FusionTensor, m: u32) -> Result<bool> {
    let top = restrict_to_integer_spins(&fusion_matrix(&Spin::integer(m - 1).weight(), n)?);
    let one = restrict_to_integer_spins(&fusion_matrix(&Spin::integer(1).weight(), n)?);
    let id = DMatrix::<i64>::identity(one.nrows(), one.ncols());
    Ok(&top * &top == one + id)
}

/// Fusion matrix of SU(2)_k for a spin, straight from the closed-form rule.
pub fn su2_oracle_matrix(k: u32, spin: Spin) -> Result<DMatrix<i64>> {
    let r = k as usize + 1;
    let mut out = DMatrix::zeros(r, r);
    for a in 0..r {
        for l in su2_fusion_oracle(k, spin, Spin(a as u32))? {
            out[(a, l.0 as usize)] += 1;
        }
    }
    Ok(out)
}

/// Convenience: `AlgebraParams` for SU(2)_k.
pub fn su2(k: u32) -> Result<AlgebraParams> {
    AlgebraParams::new(2, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::{verlinde_tensor, ModularData};

    fn tensor(n: usize, k: u32) -> FusionTensor {
        verlinde_tensor(&ModularData::for_level(n, k).unwrap()).unwrap()
    }

    fn spins(v: &[u32]) -> Vec<Spin> {
        v.iter().map(|&t| Spin(t)).collect()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            su2_fusion_oracle(4, Spin(1), Spin(2)).unwrap(),
            spins(&[1, 3])
        );
        assert_eq!(
            su2_fusion_oracle(2, Spin(2), Spin(2)).unwrap(),
            spins(&[0])
        );
        assert_eq!(
            su2_fusion_oracle(3, Spin(2), Spin(2)).unwrap(),
            spins(&[0, 2])
        );
        assert!(su2_fusion_oracle(2, Spin(3), Spin(0)).is_err());
    }

    #[test]
    fn vacuum_fusion_is_identity() {
        let n = tensor(3, 2);
        for w in n.weights().to_vec() {
            assert_eq!(
                fuse(&Weight::new(vec![0, 0]), &w, &n).unwrap(),
                vec![(w.clone(), 1)]
            );
        }
        let id = fusion_matrix(&Weight::new(vec![0, 0]), &n).unwrap();
        assert_eq!(id.matrix, DMatrix::identity(6, 6));
    }

    #[test]
    fn su2_level1_fundamental_matrix() {
        let n = tensor(2, 1);
        let m = fusion_matrix(&Spin(1).weight(), &n).unwrap();
        assert_eq!(m.matrix, DMatrix::from_row_slice(2, 2, &[0, 1, 1, 0]));
    }

    #[test]
    fn su3_level1_product() {
        let n = tensor(3, 1);
        let out = fuse(&Weight::new(vec![1, 0]), &Weight::new(vec![0, 1]), &n).unwrap();
        assert_eq!(out, vec![(Weight::new(vec![0, 0]), 1)]);
    }

    #[test]
    fn printed_su2_families() {
        for k in 1..=8u32 {
            let n = tensor(2, k);
            // 1/2 × i = (i−1/2) ⊕ (i+1/2), 0 ≤ i ≤ (k−1)/2
            for twice_i in 0..k {
                let got = fuse(&Spin(1).weight(), &Spin(twice_i).weight(), &n).unwrap();
                let mut expect = Vec::new();
                if twice_i >= 1 {
                    expect.push((Spin(twice_i - 1).weight(), 1));
                }
                expect.push((Spin(twice_i + 1).weight(), 1));
                assert_eq!(got, expect, "k={k} i={twice_i}/2");
            }
            // 1 × i = (i−1) ⊕ i ⊕ (i+1), 0 ≤ i ≤ (k−2)/2
            if k >= 2 {
                for twice_i in 0..=(k - 2) {
                    let got = fuse(&Spin(2).weight(), &Spin(twice_i).weight(), &n).unwrap();
                    let mut expect = Vec::new();
                    if twice_i >= 2 {
                        expect.push((Spin(twice_i - 2).weight(), 1));
                    }
                    if twice_i >= 1 {
                        expect.push((Spin(twice_i).weight(), 1));
                    }
                    expect.push((Spin(twice_i + 2).weight(), 1));
                    assert_eq!(got, expect, "k={k} i={twice_i}/2");
                }
            }
        }
    }

    #[test]
    fn su2_level3_square_identity() {
        let n = tensor(2, 3);
        let report = ring_axioms_check(&n);
        assert!(report.all_passed(), "{report}");
        assert!(report.get("N_1^2 = N_1 + I on integer spins").unwrap().passed);
    }

    #[test]
    fn su3_level2_axioms() {
        assert!(ring_axioms_check(&tensor(3, 2)).all_passed());
    }

    #[test]
    fn perturbed_tensor_breaks_associativity() {
        let n = tensor(3, 2).with_entry(1, 1, 3, 1 + tensor(3, 2).get(1, 1, 3));
        let report = ring_axioms_check(&n);
        assert!(!report.get("associativity").unwrap().passed);
    }

    #[test]
    fn spin_display() {
        assert_eq!(Spin(3).to_string(), "3/2");
        assert_eq!(Spin(4).to_string(), "2");
    }
}
