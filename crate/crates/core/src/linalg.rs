//! Small dense helpers shared by the modules.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub(crate) type CMatrix = DMatrix<Complex64>;

/// Eigen-decomposition of a real symmetric matrix with eigenvalues sorted
/// in descending order; eigenvectors are the matching columns.
pub(crate) fn sorted_symmetric_eigen(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let eig = m.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..m.nrows()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(m.nrows(), m.ncols(), |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

pub(crate) fn sorted_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    sorted_symmetric_eigen(m).0
}

pub(crate) fn to_real(m: &DMatrix<i64>) -> DMatrix<f64> {
    m.map(|x| x as f64)
}

pub(crate) fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Max deviation between two multisets given as descending-sorted slices.
pub(crate) fn spectrum_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub(crate) fn sort_desc(v: &mut [f64]) {
    v.sort_by(|a, b| b.total_cmp(a));
}

/// Rounds `x` and returns `(rounded, |x − rounded|)`.
pub(crate) fn round_with_residual(x: f64) -> (i64, f64) {
    let r = x.round();
    (r as i64, (x - r).abs())
}

pub(crate) fn unit(v: DVector<f64>) -> DVector<f64> {
    let n = v.norm();
    v / n
}
