//! Genus-0 modular data of SU(n)_k and the Verlinde fusion tensor.
//!
//! The S matrix has two independent constructions:
//!
//! * [`s_matrix`]: the Weyl-determinant form of the Kac–Peterson formula,
//!   `S_{λμ} = c · Σ_{w∈S_n} ε(w) exp(−2πi (w(λ+ρ), μ+ρ)/(k+n))`, with the
//!   constant `c` fixed by a unit-norm vacuum row with positive entries.
//! * [`s_matrix_character_route`]: the character ratio
//!   `S_{λμ}/S_{1μ} = exp(2πi t(λ) t(μ+ρ)/(n(k+n))) · s_{λ′}(x₁,…,x_{n−1},1)`
//!   with `xᵢ = exp(−2πi μ′ᵢ/(k+n))`, the Schur polynomial evaluated through
//!   the Jacobi–Trudi determinant, times a vacuum row built from the Weyl
//!   q-dimension product.
//!
//! A third route, `|a|⁻¹·Y` with `Y` built from fusion rules, twists and
//! dimensions, is checked in [`verify_modular`].

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::linalg::{max_abs_diff, round_with_residual, CMatrix};
use crate::par::map_indices;
use crate::report::{Check, Report};
use crate::weights::{conjugation_permutation, enumerate_alphabet, AlgebraParams, Weight};
use crate::INTEGRALITY_TOL;

/// Tolerance for the unitary/modular relations.
pub const RELATION_TOL: f64 = 1e-9;
/// Tolerance for agreement between independent S constructions.
pub const ROUTE_TOL: f64 = 1e-8;

/// `exp(2πi · num/den)` with the numerator reduced first.
fn root_of_unity(num: i64, den: i64) -> Complex64 {
    let r = num.rem_euclid(den);
    Complex64::from_polar(1.0, 2.0 * PI * r as f64 / den as f64)
}

/// `λ + ρ` in the orthogonal basis of ℝⁿ (before removing the trace).
fn shifted_vector(w: &Weight) -> Vec<i64> {
    let mut v: Vec<i64> = w.shifted_components().iter().map(|&x| x as i64).collect();
    v.push(0);
    v
}

/// Complete data of the modular category attached to SU(n)_k.
#[derive(Debug, Clone)]
pub struct ModularData {
    params: AlgebraParams,
    weights: Vec<Weight>,
    s: CMatrix,
    conformal_weights: Vec<Rational64>,
    twists: Vec<Complex64>,
    dims: Vec<f64>,
    gauss_sum: Complex64,
    c0: f64,
    t: CMatrix,
    conj_perm: Vec<usize>,
}

impl ModularData {
    pub fn compute(p: AlgebraParams) -> Result<Self> {
        let weights = enumerate_alphabet(&p);
        let s = kac_peterson_s(&p, &weights);
        let conformal_weights = conformal_weights_of(&p, &weights);
        let twists: Vec<Complex64> = conformal_weights
            .iter()
            .map(|h| root_of_unity(*h.numer(), *h.denom()))
            .collect();
        let dims: Vec<f64> = (0..weights.len())
            .map(|j| (s[(0, j)] / s[(0, 0)]).re)
            .collect();
        let (gauss_sum, c0) = gauss_sum_of(&dims, &twists)?;
        let central = Complex64::from_polar(1.0, -2.0 * PI * c0 / 24.0);
        let t = CMatrix::from_fn(weights.len(), weights.len(), |i, j| {
            if i == j {
                central * twists[i]
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let conj_perm = conjugation_permutation(&weights);
        Ok(Self {
            params: p,
            weights,
            s,
            conformal_weights,
            twists,
            dims,
            gauss_sum,
            c0,
            t,
            conj_perm,
        })
    }

    pub fn for_level(n: usize, k: u32) -> Result<Self> {
        Self::compute(AlgebraParams::new(n, k)?)
    }

    pub fn params(&self) -> AlgebraParams {
        self.params
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.weights.iter().position(|x| x == w)
    }

    pub(crate) fn require_index(&self, w: &Weight) -> Result<usize> {
        self.index_of(w).ok_or_else(|| Error::InvalidWeight {
            labels: w.labels().to_vec(),
            n: self.params.n(),
            k: self.params.k(),
        })
    }

    pub fn s(&self) -> &CMatrix {
        &self.s
    }

    pub fn t(&self) -> &CMatrix {
        &self.t
    }

    pub fn twists(&self) -> &[Complex64] {
        &self.twists
    }

    pub fn conformal_weights(&self) -> &[Rational64] {
        &self.conformal_weights
    }

    pub fn dims(&self) -> &[f64] {
        &self.dims
    }

    pub fn gauss_sum(&self) -> Complex64 {
        self.gauss_sum
    }

    /// Central charge modulo 8, in `[0, 8)`.
    pub fn c0(&self) -> f64 {
        self.c0
    }

    pub fn conj_perm(&self) -> &[usize] {
        &self.conj_perm
    }

    /// The conjugation matrix `Ĉ_{λμ} = δ_{λ,μ̄}`.
    pub fn conjugation_matrix(&self) -> CMatrix {
        let r = self.rank();
        CMatrix::from_fn(r, r, |i, j| {
            Complex64::new(if self.conj_perm[i] == j { 1.0 } else { 0.0 }, 0.0)
        })
    }

    /// `Σ_λ d_λ²`.
    pub fn global_dimension_squared(&self) -> f64 {
        self.dims.iter().map(|d| d * d).sum()
    }

    /// `S_{λμ}/S_{1μ}`.
    pub fn ratio(&self, lambda: usize, mu: usize) -> Complex64 {
        self.s[(lambda, mu)] / self.s[(0, mu)]
    }

    /// Indices of the self-conjugate weights in alphabet order.
    pub fn self_conjugate_indices(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.conj_perm[i] == i)
            .collect()
    }

    /// Same data with S replaced, for what-if checks of [`verify_modular`].
    pub fn with_s_matrix(mut self, s: CMatrix) -> Self {
        self.s = s;
        self
    }
}

fn kac_peterson_s(p: &AlgebraParams, weights: &[Weight]) -> CMatrix {
    let n = p.n();
    let h = p.height() as i64;
    let vecs: Vec<Vec<i64>> = weights.iter().map(shifted_vector).collect();
    let r = weights.len();
    let rows: Vec<Vec<Complex64>> = map_indices(r, |i| {
        (0..r)
            .map(|j| {
                let (a, b) = (&vecs[i], &vecs[j]);
                let det = CMatrix::from_fn(n, n, |x, y| root_of_unity(-a[x] * b[y], h))
                    .determinant();
                let sa: i64 = a.iter().sum();
                let sb: i64 = b.iter().sum();
                det * root_of_unity(sa * sb, n as i64 * h)
            })
            .collect()
    });
    let raw = CMatrix::from_fn(r, r, |i, j| rows[i][j]);
    let norm = raw.row(0).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let phase = raw[(0, 0)] / raw[(0, 0)].norm();
    raw.map(|z| z / (phase * norm))
}

/// S matrix from the Weyl-determinant form of the Kac–Peterson formula.
pub fn s_matrix(p: &AlgebraParams) -> CMatrix {
    kac_peterson_s(p, &enumerate_alphabet(p))
}

/// Complete homogeneous symmetric polynomials `h_0..=h_max` at `x`.
fn complete_homogeneous(x: &[Complex64], max: usize) -> Vec<Complex64> {
    let mut h = vec![Complex64::new(0.0, 0.0); max + 1];
    h[0] = Complex64::new(1.0, 0.0);
    for &xi in x {
        for r in 1..=max {
            let prev = h[r - 1];
            h[r] += xi * prev;
        }
    }
    h
}

/// Schur polynomial `s_λ(x)` by the Jacobi–Trudi identity `det[h_{λᵢ−i+j}]`.
pub fn schur_jacobi_trudi(parts: &[u32], x: &[Complex64]) -> Complex64 {
    let l = parts.len();
    if l == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let max = parts[0] as usize + l;
    let h = complete_homogeneous(x, max);
    let m = CMatrix::from_fn(l, l, |i, j| {
        let idx = parts[i] as i64 - i as i64 + j as i64;
        if idx < 0 {
            Complex64::new(0.0, 0.0)
        } else {
            h[idx as usize]
        }
    });
    m.determinant()
}

/// `S_{λμ}/S_{1μ}` as a character value of the finite group SU(n).
pub fn character_ratio(p: &AlgebraParams, lambda: &Weight, mu: &Weight) -> Complex64 {
    let h = p.height() as i64;
    let shifted = mu.shifted_components();
    let mut x: Vec<Complex64> = shifted
        .iter()
        .map(|&m| root_of_unity(-(m as i64), h))
        .collect();
    x.push(Complex64::new(1.0, 0.0));
    let t_rho: i64 = shifted.iter().map(|&m| m as i64).sum();
    let prefactor = root_of_unity(lambda.t_invariant() as i64 * t_rho, p.n() as i64 * h);
    prefactor * schur_jacobi_trudi(lambda.partition().parts(), &x)
}

/// Weyl q-dimension product `Π_{α>0} sin(π(μ+ρ,α)/(k+n)) / sin(π(ρ,α)/(k+n))`.
pub fn weyl_q_dimension(p: &AlgebraParams, mu: &Weight) -> f64 {
    let v = shifted_vector(mu);
    let h = p.height() as f64;
    let n = p.n();
    let mut d = 1.0;
    for i in 0..n {
        for j in i + 1..n {
            d *= (PI * (v[i] - v[j]) as f64 / h).sin() / (PI * (j - i) as f64 / h).sin();
        }
    }
    d
}

/// S matrix assembled from character ratios and the q-dimension vacuum row.
pub fn s_matrix_character_route(p: &AlgebraParams) -> CMatrix {
    let weights = enumerate_alphabet(p);
    let qd: Vec<f64> = weights.iter().map(|w| weyl_q_dimension(p, w)).collect();
    let s00 = 1.0 / qd.iter().map(|d| d * d).sum::<f64>().sqrt();
    let r = weights.len();
    let rows: Vec<Vec<Complex64>> = map_indices(r, |i| {
        (0..r)
            .map(|j| character_ratio(p, &weights[i], &weights[j]) * (s00 * qd[j]))
            .collect()
    });
    CMatrix::from_fn(r, r, |i, j| rows[i][j])
}

/// `h_λ = (λ, λ+2ρ) / (2(k+n))`, exact.
pub fn conformal_weights(p: &AlgebraParams) -> Vec<Rational64> {
    conformal_weights_of(p, &enumerate_alphabet(p))
}

fn conformal_weights_of(p: &AlgebraParams, weights: &[Weight]) -> Vec<Rational64> {
    let n = p.n() as i64;
    // n·|v|² in the trace-free projection, an integer
    let scaled_norm = |v: &[i64]| {
        let s: i64 = v.iter().sum();
        n * v.iter().map(|x| x * x).sum::<i64>() - s * s
    };
    let rho = scaled_norm(&shifted_vector(&Weight::vacuum(p)));
    weights
        .iter()
        .map(|w| {
            let num = scaled_norm(&shifted_vector(w)) - rho;
            Rational64::new(num, 2 * n * p.height() as i64)
        })
        .collect()
}

/// `a = Σ d² ω⁻¹` and `c₀ ∈ [0, 8)` with `a = |a| exp(−2πi c₀/8)`.
pub fn gauss_sum_of(dims: &[f64], twists: &[Complex64]) -> Result<(Complex64, f64)> {
    let a: Complex64 = dims
        .iter()
        .zip(twists)
        .map(|(d, w)| d * d / w)
        .sum();
    let expected = dims.iter().map(|d| d * d).sum::<f64>().sqrt();
    if (a.norm() - expected).abs() > 1e-8 * expected.max(1.0) {
        return Err(Error::DegenerateGaussSum {
            modulus: a.norm(),
            expected,
        });
    }
    let mut c0 = (-8.0 * a.arg() / (2.0 * PI)).rem_euclid(8.0);
    if (8.0 - c0) < 1e-9 {
        c0 = 0.0;
    }
    Ok((a, c0))
}

pub fn gauss_sum(md: &ModularData) -> (Complex64, f64) {
    (md.gauss_sum, md.c0)
}

pub fn quantum_dims(md: &ModularData) -> &[f64] {
    md.dims()
}

/// Fusion coefficients `N_{λμ}^ν` over the canonical alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTensor {
    weights: Vec<Weight>,
    conj: Vec<usize>,
    entries: Vec<u32>,
}

impl FusionTensor {
    /// Builds a tensor from raw entries laid out as `[λ][μ][ν]`.
    pub fn from_entries(weights: Vec<Weight>, entries: Vec<u32>) -> Result<Self> {
        let r = weights.len();
        if entries.len() != r * r * r {
            return Err(Error::LengthMismatch {
                expected: r * r * r,
                actual: entries.len(),
            });
        }
        let conj = conjugation_permutation(&weights);
        Ok(Self {
            weights,
            conj,
            entries,
        })
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn conj(&self) -> &[usize] {
        &self.conj
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.weights.iter().position(|x| x == w)
    }

    #[inline]
    pub fn get(&self, lambda: usize, mu: usize, nu: usize) -> u32 {
        let r = self.rank();
        self.entries[(lambda * r + mu) * r + nu]
    }

    /// Copy with one entry replaced.
    pub fn with_entry(mut self, lambda: usize, mu: usize, nu: usize, value: u32) -> Self {
        let r = self.rank();
        self.entries[(lambda * r + mu) * r + nu] = value;
        self
    }
}

/// Result of the Verlinde sum together with its worst rounding residual.
#[derive(Debug, Clone)]
pub struct VerlindeOutcome {
    pub tensor: FusionTensor,
    pub max_deviation: f64,
}

/// Verlinde formula, returning the worst rounding residual as well.
pub fn verlinde_with_deviation(md: &ModularData) -> Result<VerlindeOutcome> {
    let s = &md.s;
    let r = md.rank();
    let s_dag = s.adjoint();
    let per_lambda: Vec<Result<(Vec<u32>, f64)>> = map_indices(r, |l| {
        let a = CMatrix::from_fn(r, r, |m, d| s[(m, d)] * s[(l, d)] / s[(0, d)]);
        let n_l = a * &s_dag;
        let mut out = Vec::with_capacity(r * r);
        let mut worst = 0.0f64;
        for m in 0..r {
            for nu in 0..r {
                let z = n_l[(m, nu)];
                let (v, res) = round_with_residual(z.re);
                let dev = res.max(z.im.abs());
                worst = worst.max(dev);
                if dev > INTEGRALITY_TOL || v < 0 {
                    return Err(Error::IntegralityViolation {
                        entry: vec![l, m, nu],
                        value: z.re,
                        deviation: dev,
                    });
                }
                out.push(v as u32);
            }
        }
        Ok((out, worst))
    });
    let mut entries = Vec::with_capacity(r * r * r);
    let mut max_deviation = 0.0f64;
    for block in per_lambda {
        let (e, w) = block?;
        entries.extend(e);
        max_deviation = max_deviation.max(w);
    }
    Ok(VerlindeOutcome {
        tensor: FusionTensor {
            weights: md.weights.clone(),
            conj: md.conj_perm.clone(),
            entries,
        },
        max_deviation,
    })
}

/// `N_{λμ}^ν = Σ_δ S_{λδ} S_{μδ} S*_{νδ} / S_{1δ}`, rounded and checked.
pub fn verlinde_tensor(md: &ModularData) -> Result<FusionTensor> {
    verlinde_with_deviation(md).map(|o| o.tensor)
}

/// `Y_{λμ} = Σ_ν N_{λμ}^ν ω_λ ω_μ / ω_ν · d_ν`.
pub fn y_matrix(n: &FusionTensor, md: &ModularData) -> CMatrix {
    let r = md.rank();
    let w = &md.twists;
    CMatrix::from_fn(r, r, |l, m| {
        (0..r)
            .filter(|&nu| n.get(l, m, nu) > 0)
            .map(|nu| w[l] * w[m] / w[nu] * (n.get(l, m, nu) as f64 * md.dims[nu]))
            .sum()
    })
}

/// Checks the unitary and modular relations of `(S, T)` plus the
/// cross-route agreements, each with its worst deviation.
pub fn verify_modular(md: &ModularData) -> Report {
    verify_modular_with(md, RELATION_TOL, ROUTE_TOL)
}

pub fn verify_modular_with(md: &ModularData, relation_tol: f64, route_tol: f64) -> Report {
    let r = md.rank();
    let s = &md.s;
    let t = &md.t;
    let id = CMatrix::identity(r, r);
    let c = md.conjugation_matrix();
    let mut report = Report::new(format!("modular relations for {}", md.params));

    report.push(Check::within(
        "S S^dagger = I",
        max_abs_diff(&(s * s.adjoint()), &id),
        relation_tol,
    ));
    report.push(Check::within(
        "S symmetric",
        max_abs_diff(s, &s.transpose()),
        relation_tol,
    ));
    report.push(Check::within(
        "T T^dagger = I",
        max_abs_diff(&(t * t.adjoint()), &id),
        relation_tol,
    ));
    let t_inv = t.adjoint();
    report.push(Check::within(
        "S T S = T^-1 S T^-1",
        max_abs_diff(&(s * t * s), &(&t_inv * s * &t_inv)),
        relation_tol,
    ));
    report.push(Check::within("S^2 = C", max_abs_diff(&(s * s), &c), relation_tol));
    // T commutes with conjugation; T Ĉ is not T itself unless Ĉ = I.
    report.push(Check::within(
        "T C = C T",
        max_abs_diff(&(t * &c), &(&c * t)),
        relation_tol,
    ));
    let worst_vac = (0..r)
        .map(|j| {
            let z = s[(0, j)];
            if z.re > 0.0 {
                z.im.abs()
            } else {
                f64::INFINITY
            }
        })
        .fold(0.0, f64::max);
    report.push(Check::within("vacuum row positive", worst_vac, relation_tol));

    let sum_d2 = md.global_dimension_squared();
    report.push(Check::within(
        "|a|^2 = sum d^2",
        (md.gauss_sum.norm_sqr() - sum_d2).abs() / sum_d2,
        relation_tol,
    ));

    let char_route = s_matrix_character_route(&md.params);
    report.push(Check::within(
        "Kac-Peterson S = character-ratio S",
        max_abs_diff(s, &char_route),
        route_tol,
    ));

    match verlinde_with_deviation(md) {
        Ok(out) => {
            report.push(Check::within(
                "Verlinde integrality",
                out.max_deviation,
                INTEGRALITY_TOL,
            ));
            let y = y_matrix(&out.tensor, md);
            let a_inv = 1.0 / md.gauss_sum.norm();
            report.push(Check::within(
                "|a|^-1 Y = S",
                max_abs_diff(&y.map(|z| z * a_inv), s),
                route_tol,
            ));
        }
        Err(e) => {
            let dev = match &e {
                Error::IntegralityViolation { deviation, .. } => *deviation,
                _ => f64::INFINITY,
            };
            report.push(
                Check::within("Verlinde integrality", dev, INTEGRALITY_TOL)
                    .with_detail(e.to_string()),
            );
            report.push(Check::boolean("|a|^-1 Y = S", false).with_detail("no fusion tensor"));
        }
    }
    report
}

/// Real part of the vacuum row, `S_{1λ}`.
pub fn vacuum_row(md: &ModularData) -> Vec<f64> {
    (0..md.rank()).map(|j| md.s[(0, j)].re).collect()
}

/// `S` as a real matrix of moduli, convenient for plotting.
pub fn s_moduli(md: &ModularData) -> DMatrix<f64> {
    md.s.map(|z| z.norm())
}
