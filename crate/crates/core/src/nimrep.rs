//! Twisted NIM-reps of SU(3)_k.
//!
//! The conjugation-twisted solitons of SU(3)_k are `m = ⌊k/2⌋ + 1` in
//! number. The matrix `N_v` by which the vector representation acts on them
//! is recovered by a constrained search: `M = N_v − I` is symmetric with
//! off-diagonal entries in `{0, 1}`, diagonal entries in `{−1, 0, 1}`, at
//! most three non-zero entries per row, prescribed `tr M` and `tr M²`, a
//! connected graph, and a prescribed spectrum. The unique class found is
//! compared with the SU(2) fusion matrices it is expected to reproduce,
//! then diagonalised to obtain the ψ-matrix, the whole twisted NIM-rep and
//! the soliton dimensions normalised by the sum rule
//! `Σ_ρ d_ρ² = Σ_λ d_λ²`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fusion::{fusion_matrix, restrict_to_integer_spins, Spin};
use crate::linalg::{
    round_with_residual, sort_desc, sorted_eigenvalues, sorted_symmetric_eigen,
    spectrum_distance, to_real, unit, CMatrix,
};
use crate::modular::{verlinde_tensor, FusionTensor, ModularData};
use crate::par::map_indices;
use crate::report::{Check, Report};
use crate::weights::Weight;
use crate::{DEFAULT_TOL, INTEGRALITY_TOL};

/// Number of twisted solitons of SU(3)_k.
pub fn soliton_count(k: u32) -> usize {
    (k / 2 + 1) as usize
}

fn is_odd(k: u32) -> bool {
    k % 2 == 1
}

/// Spectrum of `M = N_v − I`, descending.
///
/// Odd `k = 2m−1`: `2cos(π(i+1)/(m+1))`; even `k = 2m−2`:
/// `2cos(2π(i+1)/(2m+1))`, for `0 ≤ i < m`.
pub fn target_m_spectrum(k: u32) -> Vec<f64> {
    let m = soliton_count(k);
    let mut out: Vec<f64> = (0..m)
        .map(|i| {
            let i = i as f64;
            if is_odd(k) {
                2.0 * (PI * (i + 1.0) / (m as f64 + 1.0)).cos()
            } else {
                2.0 * (2.0 * PI * (i + 1.0) / (2.0 * m as f64 + 1.0)).cos()
            }
        })
        .collect();
    sort_desc(&mut out);
    out
}

/// The constraint set the search enforces.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConstraints {
    pub level: u32,
    pub m: usize,
    pub trace: i32,
    pub trace_sq: i32,
    pub max_row_support: usize,
    pub target_spectrum: Vec<f64>,
}

impl SolverConstraints {
    pub fn for_level(k: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParams { n: 3, k });
        }
        let m = soliton_count(k) as i32;
        let (trace, trace_sq) = if is_odd(k) { (0, 2 * m - 2) } else { (-1, 2 * m - 1) };
        Ok(Self {
            level: k,
            m: m as usize,
            trace,
            trace_sq,
            max_row_support: 3,
            target_spectrum: target_m_spectrum(k),
        })
    }
}

/// Numbers of rows of `M` with 0, 1, 2 and 3 non-zero entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RowCensus {
    pub k0: usize,
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
}

impl RowCensus {
    pub fn of(m: &DMatrix<i64>) -> Self {
        let mut c = RowCensus::default();
        for row in m.row_iter() {
            match row.iter().filter(|&&x| x != 0).count() {
                0 => c.k0 += 1,
                1 => c.k1 += 1,
                2 => c.k2 += 1,
                _ => c.k3 += 1,
            }
        }
        c
    }

    /// `k₁ = k₃ + 2` (odd level) or `k₁ = k₃ + 1` (even level), corrected
    /// by `−2k₀` for empty rows, which only occur for the 1×1 zero matrix.
    pub fn satisfies_level_identity(&self, k: u32) -> bool {
        let offset = if is_odd(k) { 2 } else { 1 };
        self.k1 + 2 * self.k0 == self.k3 + offset
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdeType {
    A,
    D,
    E,
}

/// Positive-definiteness witness for `2I − M` and, for zero diagonal, the
/// ADE type of the graph.
#[derive(Debug, Clone, PartialEq)]
pub struct CoxeterCertificate {
    /// Largest eigenvalue of `M`.
    pub norm: f64,
    pub ade: Option<(AdeType, usize)>,
    pub coxeter_number: Option<usize>,
}

impl CoxeterCertificate {
    pub fn name(&self) -> Option<String> {
        self.ade.map(|(t, r)| format!("{t:?}{r}"))
    }
}

fn adjacency(m: &DMatrix<i64>) -> Vec<Vec<usize>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).filter(|&j| j != i && m[(i, j)] != 0).collect())
        .collect()
}

fn is_connected(adj: &[Vec<usize>]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Certifies `2I − M > 0` and classifies zero-diagonal graphs as A, D or E.
pub fn coxeter_certificate(m: &DMatrix<i64>) -> Result<CoxeterCertificate> {
    let size = m.nrows();
    let real = to_real(m);
    let shifted = DMatrix::<f64>::identity(size, size) * 2.0 - &real;
    let norm = sorted_eigenvalues(&real)[0];
    if shifted.cholesky().is_none() || norm > 2.0 - 1e-9 {
        return Err(Error::NotPositiveDefinite);
    }
    if (0..size).any(|i| m[(i, i)] != 0) {
        return Ok(CoxeterCertificate {
            norm,
            ade: None,
            coxeter_number: None,
        });
    }
    let adj = adjacency(m);
    if !is_connected(&adj) {
        return Err(Error::NotAde("graph is disconnected".into()));
    }
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edges + 1 != size || (0..size).any(|i| (0..size).any(|j| m[(i, j)].abs() > 1)) {
        return Err(Error::NotAde("not a simply-laced tree".into()));
    }
    let branch: Vec<usize> = (0..size).filter(|&v| adj[v].len() >= 3).collect();
    let ty = match branch.as_slice() {
        [] => AdeType::A,
        [c] if adj[*c].len() == 3 => {
            // arm lengths from the branch vertex
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => AdeType::D,
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => AdeType::E,
                _ => return Err(Error::NotAde(format!("arms {arms:?}"))),
            }
        }
        _ => return Err(Error::NotAde("more than one branch vertex".into())),
    };
    let h = match ty {
        AdeType::A => size + 1,
        AdeType::D => 2 * size - 2,
        AdeType::E => match size {
            6 => 12,
            7 => 18,
            _ => 30,
        },
    };
    Ok(CoxeterCertificate {
        norm,
        ade: Some((ty, size)),
        coxeter_number: Some(h),
    })
}

/// One permutation class of solutions.
#[derive(Debug, Clone, PartialEq)]
pub struct NimRepSolution {
    pub level: u32,
    /// Canonical representative of the class.
    pub nv: DMatrix<i64>,
    pub m_matrix: DMatrix<i64>,
    /// `labeling[i]` is the row of `nv` carrying soliton label `i + 1`, so
    /// that `nv[labeling[i], labeling[j]]` is the expected matrix. Empty
    /// if the class does not match the expected matrix.
    pub labeling: Vec<usize>,
    pub coxeter: Option<CoxeterCertificate>,
    pub census: RowCensus,
    /// Number of labelled matrices found in this class.
    pub multiplicity: usize,
}

impl NimRepSolution {
    pub fn matches_expected(&self) -> bool {
        !self.labeling.is_empty()
    }

    /// `nv` with rows and columns ordered by soliton label.
    pub fn relabeled(&self) -> Option<DMatrix<i64>> {
        if self.labeling.is_empty() {
            return None;
        }
        let l = &self.labeling;
        Some(DMatrix::from_fn(l.len(), l.len(), |i, j| self.nv[(l[i], l[j])]))
    }
}

/// Outcome of the exhaustive search.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub constraints: SolverConstraints,
    pub classes: Vec<NimRepSolution>,
    pub raw_solutions: usize,
    pub nodes_visited: u64,
}

impl SolveReport {
    pub fn is_unique(&self) -> bool {
        self.classes.len() == 1
    }
}

struct Search<'a> {
    c: &'a SolverConstraints,
    positions: Vec<(usize, usize)>,
    m: usize,
}

struct SearchState {
    entries: Vec<i8>,
    support: Vec<usize>,
    trace: i32,
    sumsq: i32,
    nodes: u64,
    found: Vec<Vec<i8>>,
}

impl SearchState {
    fn new(m: usize) -> Self {
        Self {
            entries: vec![0; m * m],
            support: vec![0; m],
            trace: 0,
            sumsq: 0,
            nodes: 0,
            found: Vec::new(),
        }
    }
}

impl<'a> Search<'a> {
    fn new(c: &'a SolverConstraints) -> Self {
        let m = c.m;
        let positions = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
        Self { c, positions, m }
    }

    fn domain(&self, pos: usize) -> &'static [i8] {
        let (i, j) = self.positions[pos];
        if i == j {
            &[0, 1, -1]
        } else {
            &[0, 1]
        }
    }

    /// Remaining diagonal and off-diagonal slots strictly after `pos`.
    fn remaining(&self, pos: usize) -> (i32, i32) {
        let mut d = 0;
        let mut o = 0;
        for &(i, j) in &self.positions[pos + 1..] {
            if i == j {
                d += 1;
            } else {
                o += 1;
            }
        }
        (d, o)
    }

    fn feasible_budget(&self, st: &SearchState, pos: usize) -> bool {
        let (rd, ro) = self.remaining(pos);
        let need_tr = self.c.trace - st.trace;
        let need_sq = self.c.trace_sq - st.sumsq;
        if need_sq < 0 || need_tr.abs() > rd {
            return false;
        }
        // need_sq = d' + 2e' with |need_tr| ≤ d' ≤ rd, d' ≡ need_tr (mod 2), e' ≤ ro
        (0..=rd).any(|d| {
            d >= need_tr.abs()
                && (d - need_tr).rem_euclid(2) == 0
                && need_sq >= d
                && (need_sq - d) % 2 == 0
                && (need_sq - d) / 2 <= ro
        })
    }

    fn set(&self, st: &mut SearchState, pos: usize, v: i8) {
        let (i, j) = self.positions[pos];
        let m = self.m;
        st.entries[i * m + j] = v;
        st.entries[j * m + i] = v;
        if v != 0 {
            st.support[i] += 1;
            if i != j {
                st.support[j] += 1;
                st.sumsq += 2;
            } else {
                st.sumsq += 1;
                st.trace += v as i32;
            }
        }
    }

    fn unset(&self, st: &mut SearchState, pos: usize, v: i8) {
        let (i, j) = self.positions[pos];
        let m = self.m;
        st.entries[i * m + j] = 0;
        st.entries[j * m + i] = 0;
        if v != 0 {
            st.support[i] -= 1;
            if i != j {
                st.support[j] -= 1;
                st.sumsq -= 2;
            } else {
                st.sumsq -= 1;
                st.trace -= v as i32;
            }
        }
    }

    /// Checks run once every entry of rows `0..=row` is fixed.
    fn row_complete_ok(&self, st: &SearchState, row: usize) -> bool {
        let m = self.m;
        if m > 1 && (0..m).all(|j| j == row || st.entries[row * m + j] == 0) {
            return false;
        }
        if row + 1 < m && !self.prefix_can_connect(st, row) {
            return false;
        }
        let r = row + 1;
        let sub = DMatrix::from_fn(r, r, |a, b| st.entries[a * m + b] as f64);
        let beta = sorted_eigenvalues(&sub);
        let alpha = &self.c.target_spectrum;
        // Cauchy interlacing: α_j ≥ β_j ≥ α_{j+m−r}
        beta.iter().enumerate().all(|(j, &b)| {
            alpha[j] + 1e-9 >= b && b + 1e-9 >= alpha[j + m - r]
        })
    }

    /// Every component of the decided graph on vertices `0..=row` must
    /// still reach a later vertex.
    fn prefix_can_connect(&self, st: &SearchState, row: usize) -> bool {
        let m = self.m;
        let mut comp: Vec<usize> = (0..=row).collect();
        fn find(c: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while c[x] != x {
                c[x] = c[c[x]];
                x = c[x];
            }
            x
        }
        for a in 0..=row {
            for b in a + 1..=row {
                if st.entries[a * m + b] != 0 {
                    let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                    comp[ra] = rb;
                }
            }
        }
        let mut escapes = vec![false; row + 1];
        for a in 0..=row {
            if (row + 1..m).any(|b| st.entries[a * m + b] != 0) {
                let r = find(&mut comp, a);
                escapes[r] = true;
            }
        }
        (0..=row).all(|a| {
            let r = find(&mut comp, a);
            escapes[r]
        })
    }

    fn leaf_ok(&self, st: &SearchState) -> bool {
        if st.trace != self.c.trace || st.sumsq != self.c.trace_sq {
            return false;
        }
        let m = self.m;
        let mat = DMatrix::from_fn(m, m, |a, b| st.entries[a * m + b] as i64);
        if !is_connected(&adjacency(&mat)) {
            return false;
        }
        let spec = sorted_eigenvalues(&to_real(&mat));
        spectrum_distance(&spec, &self.c.target_spectrum) <= DEFAULT_TOL
    }

    fn dfs(&self, st: &mut SearchState, pos: usize) {
        st.nodes += 1;
        if pos == self.positions.len() {
            if self.leaf_ok(st) {
                st.found.push(st.entries.clone());
            }
            return;
        }
        let (i, j) = self.positions[pos];
        for &v in self.domain(pos) {
            if v != 0
                && (st.support[i] >= self.c.max_row_support
                    || (i != j && st.support[j] >= self.c.max_row_support))
            {
                continue;
            }
            self.set(st, pos, v);
            let ok = self.feasible_budget(st, pos)
                && (j + 1 < self.m || self.row_complete_ok(st, i));
            if ok {
                self.dfs(st, pos + 1);
            }
            self.unset(st, pos, v);
        }
    }

    /// All assignments of the first row, used to split the search.
    fn first_row_prefixes(&self) -> Vec<Vec<i8>> {
        let m = self.m;
        let mut out = Vec::new();
        let mut st = SearchState::new(m);
        fn rec(s: &Search, st: &mut SearchState, pos: usize, out: &mut Vec<Vec<i8>>) {
            if pos == s.m {
                out.push((0..s.m).map(|j| st.entries[j]).collect());
                return;
            }
            let (i, j) = s.positions[pos];
            for &v in s.domain(pos) {
                if v != 0
                    && (st.support[i] >= s.c.max_row_support
                        || (i != j && st.support[j] >= s.c.max_row_support))
                {
                    continue;
                }
                s.set(st, pos, v);
                let ok = s.feasible_budget(st, pos) && (j + 1 < s.m || s.row_complete_ok(st, i));
                if ok {
                    rec(s, st, pos + 1, out);
                }
                s.unset(st, pos, v);
            }
        }
        rec(self, &mut st, 0, &mut out);
        out
    }

    fn run(&self) -> (Vec<Vec<i8>>, u64) {
        let prefixes = self.first_row_prefixes();
        let m = self.m;
        let parts = map_indices(prefixes.len(), |p| {
            let mut st = SearchState::new(m);
            for (pos, &v) in prefixes[p].iter().enumerate() {
                self.set(&mut st, pos, v);
            }
            self.dfs(&mut st, m);
            (st.found, st.nodes)
        });
        let mut found = Vec::new();
        let mut nodes = 0;
        for (f, n) in parts {
            found.extend(f);
            nodes += n;
        }
        (found, nodes)
    }
}

/// Lexicographically smallest lower-triangular row-major listing of `m`
/// over all simultaneous row/column permutations, with the permutation
/// achieving it (`perm[p]` is the original index placed at position `p`).
pub fn canonical_form(m: &DMatrix<i64>) -> (DMatrix<i64>, Vec<usize>) {
    let size = m.nrows();
    let mut best_key: Option<Vec<i64>> = None;
    let mut best_perm = Vec::new();
    let mut perm = Vec::with_capacity(size);
    let mut used = vec![false; size];
    let mut key = Vec::with_capacity(size * (size + 1) / 2);

    #[allow(clippy::too_many_arguments)]
    fn rec(
        m: &DMatrix<i64>,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        key: &mut Vec<i64>,
        best_key: &mut Option<Vec<i64>>,
        best_perm: &mut Vec<usize>,
        tight: bool,
    ) {
        let size = m.nrows();
        if perm.len() == size {
            if best_key.as_ref().is_none_or(|b| &**key < b.as_slice()) {
                *best_key = Some(key.clone());
                *best_perm = perm.clone();
            }
            return;
        }
        for v in 0..size {
            if used[v] {
                continue;
            }
            let start = key.len();
            for &u in perm.iter() {
                key.push(m[(v, u)]);
            }
            key.push(m[(v, v)]);
            // compare the new segment against the incumbent
            let mut still_tight = tight;
            let mut prune = false;
            if tight {
                if let Some(b) = best_key.as_ref() {
                    match key[start..].cmp(&b[start..key.len()]) {
                        std::cmp::Ordering::Greater => prune = true,
                        std::cmp::Ordering::Less => still_tight = false,
                        std::cmp::Ordering::Equal => {}
                    }
                } else {
                    still_tight = false;
                }
            }
            if !prune {
                used[v] = true;
                perm.push(v);
                rec(m, perm, used, key, best_key, best_perm, still_tight);
                perm.pop();
                used[v] = false;
            }
            key.truncate(start);
        }
    }

    // `tight` means the current prefix equals the incumbent's prefix; once a
    // prefix is strictly smaller every completion improves on it.
    rec(
        m,
        &mut perm,
        &mut used,
        &mut key,
        &mut best_key,
        &mut best_perm,
        true,
    );
    let p = best_perm;
    (DMatrix::from_fn(size, size, |a, b| m[(p[a], p[b])]), p)
}

/// A permutation `l` with `a[l[i], l[j]] = b[i, j]`, if one exists.
pub fn find_relabeling(a: &DMatrix<i64>, b: &DMatrix<i64>) -> Option<Vec<usize>> {
    if a.shape() != b.shape() {
        return None;
    }
    let (ca, pa) = canonical_form(a);
    let (cb, pb) = canonical_form(b);
    if ca != cb {
        return None;
    }
    // position p of the canonical form holds a's row pa[p] and b's row pb[p]
    let mut l = vec![0; a.nrows()];
    for p in 0..a.nrows() {
        l[pb[p]] = pa[p];
    }
    Some(l)
}

/// `N_v` built from SU(2) fusion matrices: `I + N_{1/2}` of SU(2)_{m−1}
/// for odd `k = 2m−1`, and `N_1` of SU(2)_{2m−1} on integer spins for even
/// `k = 2m−2`. Rows are in soliton-label order.
pub fn expected_nv(k: u32) -> Result<DMatrix<i64>> {
    if k < 1 {
        return Err(Error::InvalidParams { n: 3, k });
    }
    let m = soliton_count(k);
    if is_odd(k) {
        if m == 1 {
            return Ok(DMatrix::identity(1, 1));
        }
        let n = su2_tensor(m as u32 - 1)?;
        let half = fusion_matrix(&Spin::from_twice(1).weight(), &n)?;
        Ok(half.matrix + DMatrix::identity(m, m))
    } else {
        let n = su2_tensor(2 * m as u32 - 1)?;
        Ok(restrict_to_integer_spins(&fusion_matrix(
            &Spin::integer(1).weight(),
            &n,
        )?))
    }
}

fn su2_tensor(k: u32) -> Result<FusionTensor> {
    verlinde_tensor(&ModularData::for_level(2, k)?)
}

/// Exhaustive search for `N_v`, grouped into permutation classes.
pub fn solve_nv(k: u32) -> Result<SolveReport> {
    let constraints = SolverConstraints::for_level(k)?;
    let search = Search::new(&constraints);
    let (found, nodes_visited) = search.run();
    let m = constraints.m;
    let raw_solutions = found.len();
    let canon: Vec<(DMatrix<i64>, Vec<usize>)> = map_indices(found.len(), |i| {
        let mat = DMatrix::from_fn(m, m, |a, b| found[i][a * m + b] as i64);
        canonical_form(&mat)
    });
    let mut classes: BTreeMap<Vec<i64>, (DMatrix<i64>, usize)> = BTreeMap::new();
    for (c, _) in canon {
        let key: Vec<i64> = c.iter().copied().collect();
        classes.entry(key).or_insert((c, 0)).1 += 1;
    }
    if classes.is_empty() {
        return Err(Error::NoSolution(k));
    }
    let expected = expected_nv(k)?;
    let identity = DMatrix::<i64>::identity(m, m);
    let classes = classes
        .into_values()
        .map(|(mm, multiplicity)| {
            let nv = &mm + &identity;
            let labeling = find_relabeling(&nv, &expected).unwrap_or_default();
            NimRepSolution {
                level: k,
                census: RowCensus::of(&mm),
                coxeter: coxeter_certificate(&mm).ok(),
                m_matrix: mm,
                nv,
                labeling,
                multiplicity,
            }
        })
        .collect();
    Ok(SolveReport {
        constraints,
        classes,
        raw_solutions,
        nodes_visited,
    })
}

/// `{S_{vμ}/S_{1μ} : μ = μ̄}` sorted descending.
pub fn twisted_eigenvalue_targets(md: &ModularData) -> Vec<f64> {
    let v = md
        .index_of(&Weight::vector(&md.params()))
        .expect("vector weight exists for k >= 1");
    let mut t: Vec<f64> = md
        .self_conjugate_indices()
        .into_iter()
        .map(|mu| md.ratio(v, mu).re)
        .collect();
    sort_desc(&mut t);
    t
}

/// Spectrum of `nv` against `{S_{vμ}/S_{1μ} : μ = μ̄}`.
pub fn spectrum_check(nv: &DMatrix<i64>, md: &ModularData) -> Check {
    let got = sorted_eigenvalues(&to_real(nv));
    let want = twisted_eigenvalue_targets(md);
    Check::within(
        "spec(N_v) = {S_v,mu/S_1,mu : mu self-conjugate}",
        spectrum_distance(&got, &want),
        DEFAULT_TOL,
    )
}

fn require_su3(md: &ModularData) -> Result<()> {
    if md.params().n() != 3 {
        return Err(Error::UnsupportedRank(md.params().n()));
    }
    Ok(())
}

/// Unit Perron–Frobenius eigenvector of `nv` and its eigenvalue, which must
/// equal `d_v`.
pub fn pf_vector(nv: &DMatrix<i64>, md: &ModularData) -> Result<(DVector<f64>, f64)> {
    require_su3(md)?;
    if nv != &nv.transpose()
        || nv.iter().any(|&x| x < 0)
        || !is_connected(&adjacency(nv))
    {
        return Err(Error::NotIrreducible);
    }
    let (values, vectors) = sorted_symmetric_eigen(&to_real(nv));
    let mut v = vectors.column(0).into_owned();
    if v.sum() < 0.0 {
        v = -v;
    }
    if v.iter().any(|&x| x <= 0.0) {
        return Err(Error::NotIrreducible);
    }
    let v_idx = md.require_index(&Weight::vector(&md.params()))?;
    let expected = md.dims()[v_idx];
    if (values[0] - expected).abs() > DEFAULT_TOL {
        return Err(Error::EigenvalueMismatch {
            found: values[0],
            expected,
        });
    }
    Ok((unit(v), values[0]))
}

/// Unitary ψ with `N_v = ψ · diag(S_{vμ}/S_{1μ}) · ψ†`; columns follow the
/// self-conjugate weights in alphabet order.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiMatrix {
    pub matrix: CMatrix,
    /// Alphabet index of the weight labelling each column.
    pub columns: Vec<usize>,
}

/// First non-negligible entry of every column made positive; on the
/// Perron–Frobenius column this makes every entry positive.
fn fix_column_phases(vectors: &mut DMatrix<f64>) {
    for mut col in vectors.column_iter_mut() {
        let lead = col.iter().copied().find(|x| x.abs() > 1e-9).unwrap_or(1.0);
        if lead < 0.0 {
            col.neg_mut();
        }
    }
}

/// Assigns eigenvectors of `h` to weights by matching sorted eigenvalues
/// against the sorted `targets[μ]`.
fn match_eigenvectors(
    h: &DMatrix<f64>,
    targets: &[(usize, f64)],
) -> Result<PsiMatrix> {
    let (values, mut vectors) = sorted_symmetric_eigen(h);
    let mut sorted: Vec<(usize, f64)> = targets.to_vec();
    sorted.sort_by(|a, b| b.1.total_cmp(&a.1));
    let want: Vec<f64> = sorted.iter().map(|t| t.1).collect();
    if spectrum_distance(&values, &want) > DEFAULT_TOL {
        return Err(Error::SpectrumMismatch {
            found: values,
            expected: want,
        });
    }
    if values.windows(2).any(|w| (w[0] - w[1]).abs() <= DEFAULT_TOL) {
        return Err(Error::DegenerateSpectrum(values));
    }
    fix_column_phases(&mut vectors);
    let mut columns: Vec<usize> = targets.iter().map(|t| t.0).collect();
    columns.sort_unstable();
    let size = h.nrows();
    let matrix = CMatrix::from_fn(size, columns.len(), |r, c| {
        let src = sorted.iter().position(|t| t.0 == columns[c]).unwrap();
        Complex64::new(vectors[(r, src)], 0.0)
    });
    Ok(PsiMatrix { matrix, columns })
}

pub fn psi_matrix(nv: &DMatrix<i64>, md: &ModularData) -> Result<PsiMatrix> {
    psi_matrix_joint(nv, &[], md)
}

/// ψ from `N_v` plus further known twisted matrices `N_λ`, diagonalising a
/// generic real combination so that eigenvalue collisions of `N_v` alone
/// are split.
pub fn psi_matrix_joint(
    nv: &DMatrix<i64>,
    companions: &[(Weight, DMatrix<i64>)],
    md: &ModularData,
) -> Result<PsiMatrix> {
    require_su3(md)?;
    let v = md.require_index(&Weight::vector(&md.params()))?;
    let weights: Vec<f64> = (0..companions.len())
        .map(|i| std::f64::consts::SQRT_2 / (i as f64 + 2.0).powf(1.5))
        .collect();
    let mut h = to_real(nv);
    let mut idx = Vec::with_capacity(companions.len());
    for ((w, mat), c) in companions.iter().zip(&weights) {
        idx.push(md.require_index(w)?);
        let sym = (to_real(mat) + to_real(&mat.transpose())) * 0.5;
        h += sym * *c;
    }
    let targets: Vec<(usize, f64)> = md
        .self_conjugate_indices()
        .into_iter()
        .map(|mu| {
            let mut t = md.ratio(v, mu).re;
            for (&l, c) in idx.iter().zip(&weights) {
                t += c * md.ratio(l, mu).re;
            }
            (mu, t)
        })
        .collect();
    match_eigenvectors(&h, &targets)
}

/// `N_{λρ₁}^{ρ₂} = Σ_{μ=μ̄} (S_{λμ}/S_{1μ}) ψ_{ρ₁}^{(μ)} ψ_{ρ₂}^{(μ)*}`,
/// rounded to integers.
pub fn twisted_nimrep(lambda: &Weight, psi: &PsiMatrix, md: &ModularData) -> Result<DMatrix<i64>> {
    let l = md.require_index(lambda)?;
    let size = psi.matrix.nrows();
    let mut out = DMatrix::zeros(size, size);
    for a in 0..size {
        for b in 0..size {
            let z: Complex64 = psi
                .columns
                .iter()
                .enumerate()
                .map(|(c, &mu)| md.ratio(l, mu) * psi.matrix[(a, c)] * psi.matrix[(b, c)].conj())
                .sum();
            let (v, res) = round_with_residual(z.re);
            let dev = res.max(z.im.abs());
            if dev > INTEGRALITY_TOL || v < 0 {
                return Err(Error::IntegralityViolation {
                    entry: vec![l, a, b],
                    value: z.re,
                    deviation: dev,
                });
            }
            out[(a, b)] = v;
        }
    }
    Ok(out)
}

/// The whole twisted NIM-rep, one matrix per weight in alphabet order.
pub fn twisted_nimreps(psi: &PsiMatrix, md: &ModularData) -> Result<Vec<DMatrix<i64>>> {
    md.weights()
        .iter()
        .map(|w| twisted_nimrep(w, psi, md))
        .collect()
}

/// Sum-rule normalisation of the Perron–Frobenius vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Normalization {
    /// PF vector scaled so its smallest entry is 1.
    pub pattern: Vec<f64>,
    pub delta: f64,
}

/// `δ = sqrt(Σ_λ d_λ² / Σᵢ patternᵢ²)` with the pattern's smallest entry 1.
pub fn delta_normalization(md: &ModularData, pf: &DVector<f64>) -> Normalization {
    let min = pf.iter().copied().fold(f64::INFINITY, f64::min);
    let pattern: Vec<f64> = pf.iter().map(|x| x / min).collect();
    let norm2: f64 = pattern.iter().map(|x| x * x).sum();
    Normalization {
        delta: (md.global_dimension_squared() / norm2).sqrt(),
        pattern,
    }
}

/// Perron–Frobenius data of the twisted sector.
#[derive(Debug, Clone, PartialEq)]
pub struct SolitonSpectrum {
    pub pf_vector: DVector<f64>,
    pub pf_eigenvalue: f64,
    pub delta: f64,
    pub pattern: Vec<f64>,
    pub dims: Vec<f64>,
    pub indices: Vec<f64>,
    pub psi: PsiMatrix,
}

/// End-to-end twisted-sector data of SU(3)_k.
#[derive(Debug, Clone)]
pub struct TwistedSolution {
    pub level: u32,
    pub modular: ModularData,
    pub report: SolveReport,
    /// `N_v` of the surviving class in soliton-label order.
    pub nv: DMatrix<i64>,
    pub spectrum: SolitonSpectrum,
}

impl TwistedSolution {
    pub fn compute(k: u32) -> Result<Self> {
        let modular = ModularData::for_level(3, k)?;
        let report = solve_nv(k)?;
        let class = report
            .classes
            .iter()
            .find(|c| c.matches_expected())
            .unwrap_or(&report.classes[0]);
        let nv = class.relabeled().unwrap_or_else(|| class.nv.clone());
        let (pf, eigenvalue) = pf_vector(&nv, &modular)?;
        let psi = psi_matrix(&nv, &modular)?;
        let norm = delta_normalization(&modular, &pf);
        let dims: Vec<f64> = norm.pattern.iter().map(|x| x * norm.delta).collect();
        let indices = dims.iter().map(|d| d * d).collect();
        Ok(Self {
            level: k,
            modular,
            report,
            nv,
            spectrum: SolitonSpectrum {
                pf_vector: pf,
                pf_eigenvalue: eigenvalue,
                delta: norm.delta,
                pattern: norm.pattern,
                dims,
                indices,
                psi,
            },
        })
    }
}

/// Soliton indices `d_ρ² = δ² · patternᵢ²` in soliton-label order.
pub fn soliton_indices(k: u32) -> Result<Vec<f64>> {
    Ok(TwistedSolution::compute(k)?.spectrum.indices)
}

/// Closed-form index lists and δ as printed for SU(3)_k, compared
/// entrywise with the sum-rule values.
#[derive(Debug, Clone, PartialEq)]
pub struct PrintedComparison {
    pub level: u32,
    pub printed: Vec<f64>,
    pub sum_rule: Vec<f64>,
    /// `printed[i] / sum_rule[i]`.
    pub ratios: Vec<f64>,
    pub printed_delta: f64,
    pub sum_rule_delta: f64,
}

impl PrintedComparison {
    pub fn delta_ratio(&self) -> f64 {
        self.printed_delta / self.sum_rule_delta
    }

    pub fn agrees(&self, tol: f64) -> bool {
        self.ratios.iter().all(|r| (r - 1.0).abs() <= tol)
    }
}

/// The printed closed forms for the soliton indices, evaluated verbatim.
pub fn printed_indices(k: u32) -> (Vec<f64>, f64) {
    let m = soliton_count(k) as f64;
    if is_odd(k) {
        let s = (PI / (2.0 * m + 2.0)).sin();
        let pre = 3.0 * (m + 1.0) / (4.0 * s.powi(4));
        let delta = (3.0 * (m + 1.0)).sqrt() / (2.0 * s * s);
        let list = (1..=soliton_count(k))
            .map(|i| pre * (i as f64 * PI / (m + 1.0)).sin() / (PI / (m + 1.0)).sin())
            .collect();
        (list, delta)
    } else {
        let a = (PI / (2.0 * m + 1.0)).sin();
        let b = (2.0 * PI / (2.0 * m + 1.0)).sin();
        let pre = 3.0 * (2.0 * m + 1.0) / (16.0 * a * a * b * b);
        let delta = (3.0 * (2.0 * m + 1.0)).sqrt() / (4.0 * a * b);
        let list = (1..=soliton_count(k))
            .map(|i| pre * ((2 * i - 1) as f64 * PI / (2.0 * m + 1.0)).sin() / a)
            .collect();
        (list, delta)
    }
}

pub fn printed_index_formulas(k: u32) -> Result<PrintedComparison> {
    let sol = TwistedSolution::compute(k)?;
    Ok(compare_printed(&sol))
}

pub fn compare_printed(sol: &TwistedSolution) -> PrintedComparison {
    let (printed, printed_delta) = printed_indices(sol.level);
    let ratios = printed
        .iter()
        .zip(&sol.spectrum.indices)
        .map(|(p, s)| p / s)
        .collect();
    PrintedComparison {
        level: sol.level,
        printed,
        sum_rule: sol.spectrum.indices.clone(),
        ratios,
        printed_delta,
        sum_rule_delta: sol.spectrum.delta,
    }
}

/// For even `k = 2m−2`: `M′ = N_{m−1}` of SU(2)_{2m−1} on integer spins
/// satisfies `M′² = N_v + I` with `N_v` in soliton-label order.
pub fn even_level_square_root(k: u32, nv: &DMatrix<i64>) -> Result<Check> {
    if is_odd(k) {
        return Ok(Check::boolean("M'^2 = N_v + I (even level only)", true)
            .with_detail("not applicable at odd level"));
    }
    let m = soliton_count(k);
    let n = su2_tensor(2 * m as u32 - 1)?;
    let root = restrict_to_integer_spins(&fusion_matrix(
        &Spin::integer(m as u32 - 1).weight(),
        &n,
    )?);
    let id = DMatrix::<i64>::identity(m, m);
    let ok = root == root.transpose() && &root * &root == nv + id;
    Ok(Check::boolean("M'^2 = N_v + I", ok))
}

/// Invariants of a computed twisted sector: integrality and the
/// representation property of every `N_λ`, the solver output, the
/// Perron–Frobenius equation, the sum rule and the trace census.
pub fn nimrep_report(sol: &TwistedSolution, tol: f64) -> Result<Report> {
    let md = &sol.modular;
    let k = sol.level;
    let m = sol.nv.nrows();
    let mut r = Report::new(format!("twisted NIM-rep of {}", md.params()));

    r.push(Check::boolean("unique solution class", sol.report.is_unique()).with_detail(
        format!("{} class(es), {} labelled solutions", sol.report.classes.len(), sol.report.raw_solutions),
    ));
    let expected = expected_nv(k)?;
    r.push(Check::boolean("N_v = expected SU(2) matrix up to permutation", sol.report.classes.iter().any(|c| c.matches_expected())));
    r.push(Check::boolean("soliton count = floor(k/2) + 1", m == soliton_count(k) && m == md.self_conjugate_indices().len()));
    r.push(spectrum_check(&sol.nv, md));

    let mm = &sol.nv - DMatrix::<i64>::identity(m, m);
    let c = SolverConstraints::for_level(k)?;
    let tr: i64 = mm.diagonal().sum();
    let tr2: i64 = (&mm * &mm).diagonal().sum();
    r.push(Check::boolean("tr M, tr M^2", tr == c.trace as i64 && tr2 == c.trace_sq as i64)
        .with_detail(format!("{tr}, {tr2}")));
    let census = RowCensus::of(&mm);
    r.push(Check::boolean("row census identity", census.satisfies_level_identity(k))
        .with_detail(format!("k0={} k1={} k2={} k3={}", census.k0, census.k1, census.k2, census.k3)));
    r.push(even_level_square_root(k, &expected)?);

    let psi = &sol.spectrum.psi;
    let unitary = &psi.matrix * psi.matrix.adjoint() - CMatrix::identity(m, m);
    r.push(Check::within("psi psi^dagger = I", unitary.iter().map(|z| z.norm()).fold(0.0, f64::max), tol));

    let reps = twisted_nimreps(psi, md);
    let reps = match reps {
        Ok(x) => {
            r.push(Check::boolean("N_lambda non-negative integral", true));
            x
        }
        Err(e) => {
            r.push(Check::boolean("N_lambda non-negative integral", false).with_detail(e.to_string()));
            return Ok(r);
        }
    };
    let v = md.require_index(&Weight::vector(&md.params()))?;
    let vbar = md.conj_perm()[v];
    r.push(Check::boolean("N_vacuum = I", reps[0] == DMatrix::identity(m, m)));
    r.push(Check::boolean("N_v reproduces solver output", reps[v] == sol.nv));
    r.push(Check::boolean("N_v = N_vbar", reps[v] == reps[vbar]));
    r.push(Check::boolean(
        "N_conj(lambda) = N_lambda^T",
        (0..reps.len()).all(|l| reps[md.conj_perm()[l]] == reps[l].transpose()),
    ));
    let fusion = verlinde_tensor(md)?;
    let rank = md.rank();
    let homomorphism = map_indices(rank, |a| {
        (0..rank).all(|b| {
            let mut rhs = DMatrix::<i64>::zeros(m, m);
            for (nu, rep) in reps.iter().enumerate() {
                let c = fusion.get(a, b, nu);
                if c != 0 {
                    rhs += rep * c as i64;
                }
            }
            &reps[a] * &reps[b] == rhs
        })
    });
    r.push(Check::boolean("N_lambda N_mu = sum_nu N_lambda,mu^nu N_nu", homomorphism.into_iter().all(|x| x)));

    let dims = DVector::from_vec(sol.spectrum.dims.clone());
    let pfe = to_real(&sol.nv) * &dims - &dims * md.dims()[v];
    r.push(Check::within("N_v d = d_v d", pfe.amax(), tol));
    let sum: f64 = sol.spectrum.indices.iter().sum();
    let mu = md.global_dimension_squared();
    r.push(Check::within("sum of soliton indices = sum d_lambda^2", (sum - mu).abs(), tol)
        .with_detail(format!("{sum:.11e} vs {mu:.11e}")));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn mat(m: usize, v: &[i64]) -> DMatrix<i64> {
        DMatrix::from_row_slice(m, m, v)
    }

    fn path(m: usize) -> DMatrix<i64> {
        DMatrix::from_fn(m, m, |i, j| i64::from(i.abs_diff(j) == 1))
    }

    #[test]
    fn target_spectra() {
        assert_eq!(target_m_spectrum(1).len(), 1);
        assert_abs_diff_eq!(target_m_spectrum(1)[0], 0.0, epsilon = 1e-15);
        let s = target_m_spectrum(3);
        assert_abs_diff_eq!(s[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s[1], -1.0, epsilon = 1e-12);
        let s = target_m_spectrum(2);
        assert_abs_diff_eq!(s[0], 2.0 * (2.0 * PI / 5.0).cos(), epsilon = 1e-12);
        assert_abs_diff_eq!(s[1], 2.0 * (4.0 * PI / 5.0).cos(), epsilon = 1e-12);
    }

    #[test]
    fn constraints_traces() {
        let c = SolverConstraints::for_level(5).unwrap();
        assert_eq!((c.m, c.trace, c.trace_sq), (3, 0, 4));
        let c = SolverConstraints::for_level(6).unwrap();
        assert_eq!((c.m, c.trace, c.trace_sq), (4, -1, 7));
    }

    #[test]
    fn small_solutions() {
        let r = solve_nv(1).unwrap();
        assert!(r.is_unique());
        assert_eq!(r.classes[0].nv, mat(1, &[1]));
        let r = solve_nv(3).unwrap();
        assert!(r.is_unique());
        assert_eq!(r.classes[0].nv, mat(2, &[1, 1, 1, 1]));
        let r = solve_nv(2).unwrap();
        assert!(r.is_unique());
        assert_eq!(r.classes[0].relabeled().unwrap(), mat(2, &[0, 1, 1, 1]));
    }

    #[test]
    fn expected_small_levels() {
        assert_eq!(expected_nv(1).unwrap(), mat(1, &[1]));
        assert_eq!(expected_nv(3).unwrap(), mat(2, &[1, 1, 1, 1]));
        assert_eq!(expected_nv(2).unwrap(), mat(2, &[0, 1, 1, 1]));
    }

    #[test]
    fn coxeter_examples() {
        for m in 1..=6 {
            let cert = coxeter_certificate(&path(m)).unwrap();
            assert_eq!(cert.ade, Some((AdeType::A, m)));
            assert_abs_diff_eq!(cert.norm, 2.0 * (PI / (m as f64 + 1.0)).cos(), epsilon = 1e-12);
        }
        let d4 = mat(4, &[0, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0]);
        let cert = coxeter_certificate(&d4).unwrap();
        assert_eq!(cert.ade, Some((AdeType::D, 4)));
        assert_eq!(cert.coxeter_number, Some(6));
        // affine D4 star: norm 2, not positive definite
        let star5 = DMatrix::from_fn(5, 5, |i, j| i64::from((i == 0) ^ (j == 0)));
        assert_eq!(coxeter_certificate(&star5), Err(Error::NotPositiveDefinite));
        // E6 as a tree with arms (1, 2, 2)
        let mut e6 = DMatrix::zeros(6, 6);
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)] {
            e6[(a, b)] = 1;
            e6[(b, a)] = 1;
        }
        assert_eq!(coxeter_certificate(&e6).unwrap().name().as_deref(), Some("E6"));
        // a loop on the diagonal skips classification
        let looped = mat(2, &[-1, 1, 1, 0]);
        assert_eq!(coxeter_certificate(&looped).unwrap().ade, None);
    }

    #[test]
    fn canonical_form_is_permutation_invariant() {
        let a = mat(3, &[0, 1, 0, 1, 0, 1, 0, 1, -1]);
        let p = [2usize, 0, 1];
        let b = DMatrix::from_fn(3, 3, |i, j| a[(p[i], p[j])]);
        assert_eq!(canonical_form(&a).0, canonical_form(&b).0);
        let l = find_relabeling(&a, &b).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a[(l[i], l[j])], b[(i, j)]);
            }
        }
        assert!(find_relabeling(&a, &path(3)).is_none());
    }

    #[test]
    fn pf_examples() {
        let md = ModularData::for_level(3, 3).unwrap();
        let (v, e) = pf_vector(&mat(2, &[1, 1, 1, 1]), &md).unwrap();
        assert_abs_diff_eq!(e, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[0], v[1], epsilon = 1e-12);
        let md = ModularData::for_level(3, 2).unwrap();
        let (v, e) = pf_vector(&mat(2, &[0, 1, 1, 1]), &md).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert_abs_diff_eq!(e, phi, epsilon = 1e-12);
        assert_abs_diff_eq!(v[1] / v[0], phi, epsilon = 1e-12);
        // wrong matrix for the level
        let md = ModularData::for_level(3, 5).unwrap();
        assert!(matches!(
            pf_vector(&mat(2, &[1, 1, 1, 1]), &md),
            Err(Error::EigenvalueMismatch { .. })
        ));
    }

    #[test]
    fn psi_level3() {
        let md = ModularData::for_level(3, 3).unwrap();
        let psi = psi_matrix(&mat(2, &[1, 1, 1, 1]), &md).unwrap();
        let h = 1.0 / 2f64.sqrt();
        assert_abs_diff_eq!(psi.matrix[(0, 0)].re, h, epsilon = 1e-12);
        assert_abs_diff_eq!(psi.matrix[(1, 0)].re, h, epsilon = 1e-12);
        assert_abs_diff_eq!(psi.matrix[(0, 1)].re, h, epsilon = 1e-12);
        assert_abs_diff_eq!(psi.matrix[(1, 1)].re, -h, epsilon = 1e-12);
        let adj = twisted_nimrep(&Weight::new(vec![1, 1]), &psi, &md).unwrap();
        let pf = DVector::from_vec(vec![1.0, 1.0]);
        let d = md.dims()[md.index_of(&Weight::new(vec![1, 1])).unwrap()];
        assert_abs_diff_eq!(d, 3.0, epsilon = 1e-12);
        assert_eq!(to_real(&adj) * &pf, pf * 3.0);
    }

    #[test]
    fn psi_spectrum_mismatch() {
        let md = ModularData::for_level(3, 3).unwrap();
        assert!(matches!(
            psi_matrix(&mat(2, &[0, 1, 1, 1]), &md),
            Err(Error::SpectrumMismatch { .. })
        ));
    }

    #[test]
    fn joint_diagonalisation_agrees() {
        let md = ModularData::for_level(3, 4).unwrap();
        let nv = expected_nv(4).unwrap();
        let psi = psi_matrix(&nv, &md).unwrap();
        let adj = Weight::new(vec![1, 1]);
        let n_adj = twisted_nimrep(&adj, &psi, &md).unwrap();
        let joint = psi_matrix_joint(&nv, &[(adj, n_adj)], &md).unwrap();
        for w in md.weights() {
            assert_eq!(
                twisted_nimrep(w, &psi, &md).unwrap(),
                twisted_nimrep(w, &joint, &md).unwrap()
            );
        }
    }

    #[test]
    fn soliton_indices_small() {
        let i = soliton_indices(1).unwrap();
        assert_abs_diff_eq!(i[0], 3.0, epsilon = 1e-9);
        let i = soliton_indices(3).unwrap();
        assert_abs_diff_eq!(i[0], 18.0, epsilon = 1e-9);
        assert_abs_diff_eq!(i[1], 18.0, epsilon = 1e-9);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let i = soliton_indices(2).unwrap();
        assert_abs_diff_eq!(i[0], 3.0, epsilon = 1e-9);
        assert_abs_diff_eq!(i[1], 3.0 * phi * phi, epsilon = 1e-9);
    }

    #[test]
    fn printed_small() {
        let c = printed_index_formulas(1).unwrap();
        assert_abs_diff_eq!(c.printed[0], 6.0, epsilon = 1e-9);
        assert_abs_diff_eq!(c.sum_rule[0], 3.0, epsilon = 1e-9);
        assert_abs_diff_eq!(c.ratios[0], 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(c.delta_ratio(), 2f64.sqrt(), epsilon = 1e-9);
        let c = printed_index_formulas(3).unwrap();
        assert_abs_diff_eq!(c.printed[0], 36.0, epsilon = 1e-9);
        assert_abs_diff_eq!(c.printed[1], 36.0, epsilon = 1e-9);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let c = printed_index_formulas(2).unwrap();
        assert_abs_diff_eq!(c.printed[0], 3.0, epsilon = 1e-9);
        assert_abs_diff_eq!(c.printed[1], 3.0 * phi, epsilon = 1e-9);
        assert!(!c.agrees(1e-6));
    }

    #[test]
    fn census_identity() {
        let c = RowCensus::of(&mat(1, &[0]));
        assert_eq!(c.k0, 1);
        assert!(c.satisfies_level_identity(1));
        let c = RowCensus::of(&mat(2, &[-1, 1, 1, 0]));
        assert_eq!((c.k1, c.k2, c.k3), (1, 1, 0));
        assert!(c.satisfies_level_identity(2));
    }

    #[test]
    fn rejects_other_ranks() {
        let md = ModularData::for_level(2, 3).unwrap();
        assert_eq!(
            pf_vector(&mat(1, &[1]), &md),
            Err(Error::UnsupportedRank(2))
        );
    }
}
