//! The alphabet of dominant integrable highest weights of su(n) at level k.
//!
//! Weights are stored as Dynkin labels `(λ₁, …, λ_{n−1})`. The alphabet is
//! ordered by total level `Σλᵢ` first and then by descending lexicographic
//! order on the labels, so the vacuum comes first and for n = 3 the two
//! fundamentals appear as `(1,0), (0,1)`. Every matrix in the crate is
//! indexed in this order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Rank and level of the affine algebra su(n) at level k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraParams {
    n: usize,
    k: u32,
}

impl AlgebraParams {
    pub fn new(n: usize, k: u32) -> Result<Self> {
        if n < 2 || k < 1 {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The shifted level `k + n` appearing in every denominator.
    pub fn height(&self) -> u32 {
        self.k + self.n as u32
    }

    /// Number of Dynkin labels of a weight, `n − 1`.
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    /// `true` when `w` has the right number of labels and level at most k.
    pub fn contains(&self, w: &Weight) -> bool {
        w.labels.len() == self.rank() && w.level() <= self.k
    }

    pub fn check(&self, w: &Weight) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::InvalidWeight {
                labels: w.labels.clone(),
                n: self.n,
                k: self.k,
            })
        }
    }

    /// Size of the alphabet, `C(n−1+k, n−1)`.
    pub fn alphabet_size(&self) -> usize {
        let r = self.rank() as u64;
        let mut c = 1u64;
        for i in 1..=r {
            c = c * (self.k as u64 + i) / i;
        }
        c as usize
    }
}

impl fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SU({})_{}", self.n, self.k)
    }
}

/// A highest weight given by its Dynkin labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    labels: Vec<u32>,
}

impl Weight {
    pub fn new(labels: impl Into<Vec<u32>>) -> Self {
        Self {
            labels: labels.into(),
        }
    }

    pub fn vacuum(p: &AlgebraParams) -> Self {
        Self::new(vec![0; p.rank()])
    }

    /// The vector representation `(1, 0, …, 0)`.
    pub fn vector(p: &AlgebraParams) -> Self {
        let mut labels = vec![0; p.rank()];
        labels[0] = 1;
        Self::new(labels)
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn is_vacuum(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// Sum of the labels.
    pub fn level(&self) -> u32 {
        self.labels.iter().sum()
    }

    /// Label-reversed weight.
    pub fn conjugate(&self) -> Self {
        Self::new(self.labels.iter().rev().copied().collect::<Vec<_>>())
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.labels.iter().eq(self.labels.iter().rev())
    }

    /// `t(λ) = Σ i·λᵢ`; also the number of boxes of the Young diagram.
    pub fn t_invariant(&self) -> u64 {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (i as u64 + 1) * l as u64)
            .sum()
    }

    /// Row lengths `λ′ᵢ = Σ_{j≥i} λⱼ` of the Young diagram, trailing zeros dropped.
    pub fn partition(&self) -> Partition {
        let mut parts: Vec<u32> = self
            .labels
            .iter()
            .rev()
            .scan(0, |acc, &l| {
                *acc += l;
                Some(*acc)
            })
            .collect();
        parts.reverse();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Shifted components `μ′ᵢ = Σ_{i≤j≤n−1}(μⱼ + 1)` of `μ + ρ`, for i = 1..n−1.
    pub fn shifted_components(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .labels
            .iter()
            .rev()
            .scan(0u64, |acc, &l| {
                *acc += l as u64 + 1;
                Some(*acc)
            })
            .collect();
        out.reverse();
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// Canonical alphabet order: level ascending, then labels descending.
pub fn alphabet_cmp(a: &Weight, b: &Weight) -> Ordering {
    a.level()
        .cmp(&b.level())
        .then_with(|| b.labels.cmp(&a.labels))
}

/// A Young diagram given by weakly decreasing row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Every weight of the level-k alphabet exactly once, vacuum first.
pub fn enumerate_alphabet(p: &AlgebraParams) -> Vec<Weight> {
    fn rec(pos: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Weight>) {
        if pos == cur.len() {
            out.push(Weight::new(cur.clone()));
            return;
        }
        for v in 0..=budget {
            cur[pos] = v;
            rec(pos + 1, budget - v, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::with_capacity(p.alphabet_size());
    rec(0, p.k(), &mut vec![0; p.rank()], &mut out);
    out.sort_by(alphabet_cmp);
    out
}

pub fn conjugate(w: &Weight) -> Weight {
    w.conjugate()
}

pub fn t_invariant(w: &Weight) -> u64 {
    w.t_invariant()
}

pub fn partition_of(w: &Weight) -> Partition {
    w.partition()
}

/// Number of self-conjugate weights in the alphabet.
pub fn self_conjugate_count(p: &AlgebraParams) -> usize {
    enumerate_alphabet(p)
        .iter()
        .filter(|w| w.is_self_conjugate())
        .count()
}

/// Position of each weight's conjugate in the canonical alphabet.
pub fn conjugation_permutation(alphabet: &[Weight]) -> Vec<usize> {
    alphabet
        .iter()
        .map(|w| {
            let c = w.conjugate();
            alphabet
                .iter()
                .position(|x| *x == c)
                .expect("alphabet closed under conjugation")
        })
        .collect()
}
