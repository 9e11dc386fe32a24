//! Twisted-sector counting and the sector inventory of the Z₂ orbifold.
//!
//! The conjugation-twisted solitons are counted by the self-conjugate
//! weights (`a = b`). The orbifold has, for every self-conjugate λ, two
//! sectors `λ±` of dimension `d_λ`; for every conjugate pair `{λ, λ̄}` one
//! sector of dimension `2d_λ`; and for every twisted soliton ρ two sectors
//! `ρ±` of dimension `d_ρ`.

use crate::error::{Error, Result};
use crate::modular::ModularData;
use crate::report::{Check, Report};
use crate::weights::{self_conjugate_count, AlgebraParams, Weight};

/// Tolerance for the dimension-square identities.
pub const INDEX_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplitSector {
    pub weight: Weight,
    pub sign: Sign,
    pub dim: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MergedSector {
    pub pair: (Weight, Weight),
    pub dim: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwistedSector {
    /// Soliton label, 1-based.
    pub soliton: usize,
    pub sign: Sign,
    pub dim: f64,
}

/// Sectors of the Z₂ orbifold with their dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbifoldInventory {
    pub params: AlgebraParams,
    pub split: Vec<SplitSector>,
    pub merged: Vec<MergedSector>,
    pub twisted: Vec<TwistedSector>,
}

impl OrbifoldInventory {
    /// Number of self-conjugate weights.
    pub fn b(&self) -> usize {
        self.split.len() / 2
    }

    /// Number of non-self-conjugate weights.
    pub fn c(&self) -> usize {
        self.merged.len() * 2
    }

    /// Number of twisted solitons.
    pub fn a(&self) -> usize {
        self.twisted.len() / 2
    }

    pub fn sector_count(&self) -> usize {
        self.split.len() + self.merged.len() + self.twisted.len()
    }

    pub fn dims(&self) -> Vec<f64> {
        self.split
            .iter()
            .map(|s| s.dim)
            .chain(self.merged.iter().map(|s| s.dim))
            .chain(self.twisted.iter().map(|s| s.dim))
            .collect()
    }

    pub fn dim_square_sum(&self) -> f64 {
        self.dims().iter().map(|d| d * d).sum()
    }
}

/// `a`, the number of conjugation-twisted solitons.
pub fn twisted_soliton_count(p: &AlgebraParams) -> usize {
    self_conjugate_count(p)
}

/// `Σ_λ d_λ²`.
pub fn mu_index(md: &ModularData) -> f64 {
    md.global_dimension_squared()
}

pub fn orbifold_inventory(md: &ModularData, soliton_dims: &[f64]) -> Result<OrbifoldInventory> {
    let p = md.params();
    let a = twisted_soliton_count(&p);
    if soliton_dims.len() != a {
        return Err(Error::LengthMismatch {
            expected: a,
            actual: soliton_dims.len(),
        });
    }
    let conj = md.conj_perm();
    let mut split = Vec::new();
    let mut merged = Vec::new();
    for (i, w) in md.weights().iter().enumerate() {
        let d = md.dims()[i];
        if conj[i] == i {
            for sign in [Sign::Plus, Sign::Minus] {
                split.push(SplitSector {
                    weight: w.clone(),
                    sign,
                    dim: d,
                });
            }
        } else if i < conj[i] {
            merged.push(MergedSector {
                pair: (w.clone(), md.weights()[conj[i]].clone()),
                dim: 2.0 * d,
            });
        }
    }
    let twisted = soliton_dims
        .iter()
        .enumerate()
        .flat_map(|(i, &d)| {
            [Sign::Plus, Sign::Minus].map(|sign| TwistedSector {
                soliton: i + 1,
                sign,
                dim: d,
            })
        })
        .collect();
    Ok(OrbifoldInventory {
        params: p,
        split,
        merged,
        twisted,
    })
}

/// Counting identities and `Σ dim² = |Z₂|² · Σ_λ d_λ²`.
pub fn orbifold_mu_check(inv: &OrbifoldInventory, md: &ModularData) -> Report {
    let mut report = Report::new(format!("orbifold index identity for {}", inv.params));
    let total = md.rank();
    report.push(Check::boolean("a = b", inv.a() == inv.b()));
    report.push(Check::boolean(
        "b + c = |alphabet|, c even",
        inv.b() + inv.c() == total && inv.c().is_multiple_of(2),
    ));
    report.push(Check::boolean(
        "sector count = 2b + c/2 + 2a",
        inv.sector_count() == 2 * inv.b() + inv.c() / 2 + 2 * inv.a(),
    ));
    let lhs = inv.dim_square_sum();
    let rhs = 4.0 * mu_index(md);
    report.push(
        Check::within("sum dim^2 = 4 mu", (lhs - rhs).abs(), INDEX_TOL)
            .with_detail(format!("{lhs:.11e} vs {rhs:.11e}")),
    );
    report
}

/// Compares the SU(3)_1 orbifold dimensions with the sector dimensions of
/// SU(2)_4, which describes the same orbifold.
pub fn su3_level1_cross_check(soliton_dims: &[f64]) -> Result<Check> {
    let su3 = ModularData::for_level(3, 1)?;
    let inv = orbifold_inventory(&su3, soliton_dims)?;
    let su2 = ModularData::for_level(2, 4)?;
    let mut ours = inv.dims();
    let mut theirs = su2.dims().to_vec();
    ours.sort_by(f64::total_cmp);
    theirs.sort_by(f64::total_cmp);
    let dev = if ours.len() == theirs.len() {
        ours.iter()
            .zip(&theirs)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    Ok(Check::within("SU(3)_1 orbifold dims = SU(2)_4 dims", dev, INDEX_TOL))
}
