//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits non-zero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fusionkit::fusion::{fuse, Spin};
use fusionkit::modular::{verify_modular_with, verlinde_with_deviation, y_matrix};
use fusionkit::nimrep::{
    canonical_form, expected_nv, nimrep_report, printed_index_formulas, soliton_count, solve_nv,
    spectrum_check, twisted_nimreps, RowCensus, SolverConstraints, TwistedSolution,
};
use fusionkit::twisted::{orbifold_inventory, orbifold_mu_check, twisted_soliton_count};
use fusionkit::{AlgebraParams, ModularData};
use nalgebra::DMatrix;

const GRID_N: [usize; 3] = [2, 3, 4];
const GRID_K: std::ops::RangeInclusive<u32> = 1..=6;

type Outcome = Result<String, String>;

fn grid() -> impl Iterator<Item = (usize, u32)> {
    GRID_N.into_iter().flat_map(|n| GRID_K.map(move |k| (n, k)))
}

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

const RELATIONS: [&str; 6] = [
    "S S^dagger = I",
    "S symmetric",
    "T T^dagger = I",
    "S T S = T^-1 S T^-1",
    "S^2 = C",
    "T C = C T",
];

fn modular_relations() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for (n, k) in grid() {
        let md = ModularData::for_level(n, k).map_err(|e| e.to_string())?;
        let report = verify_modular_with(&md, 1e-9, 1e-8);
        for name in RELATIONS {
            let c = report.get(name).ok_or(format!("missing check {name}"))?;
            worst = worst.max(c.max_deviation);
            if !c.passed || c.max_deviation >= 1e-9 {
                return fail(format!("SU({n})_{k}: {name} deviation {:.3e}", c.max_deviation));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(10) {
        return fail(format!("runtime {elapsed:?} exceeds 10 s"));
    }
    Ok(format!("max deviation {worst:.2e}, runtime {elapsed:.2?}"))
}

/// Truncated Clebsch–Gordan rule in twice-spin units.
fn su2_closed_form(k: u32, a: u32, b: u32, c: u32) -> u32 {
    let ok = (a + b + c).is_multiple_of(2)
        && c >= a.abs_diff(b)
        && c <= a + b
        && a + b + c <= 2 * k;
    u32::from(ok)
}

fn verlinde_integrality() -> Outcome {
    let mut worst: f64 = 0.0;
    for (n, k) in grid() {
        let md = ModularData::for_level(n, k).map_err(|e| e.to_string())?;
        let out = verlinde_with_deviation(&md).map_err(|e| format!("SU({n})_{k}: {e}"))?;
        worst = worst.max(out.max_deviation);
        if out.max_deviation >= 1e-6 {
            return fail(format!("SU({n})_{k}: deviation {:.3e}", out.max_deviation));
        }
        if n != 2 {
            continue;
        }
        let t = &out.tensor;
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    let got = t.get(a as usize, b as usize, c as usize);
                    if got != su2_closed_form(k, a, b, c) {
                        return fail(format!("SU(2)_{k}: N[{a},{b},{c}]/2 = {got}"));
                    }
                }
            }
        }
        // 1/2 × i = (i − 1/2) ⊕ (i + 1/2) and 1 × i = (i − 1) ⊕ i ⊕ (i + 1)
        for twice_i in 0..k {
            let got: Vec<u32> = fuse(&Spin::from_twice(1).weight(), &Spin::from_twice(twice_i).weight(), t)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|(w, _)| w.labels()[0])
                .collect();
            let want: Vec<u32> = [twice_i.checked_sub(1), Some(twice_i + 1)].into_iter().flatten().collect();
            if got != want {
                return fail(format!("SU(2)_{k}: 1/2 x {twice_i}/2 = {got:?}"));
            }
        }
        for twice_i in 0..=k.saturating_sub(2) {
            if k < 2 {
                break;
            }
            let got: Vec<u32> = fuse(&Spin::integer(1).weight(), &Spin::from_twice(twice_i).weight(), t)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|(w, _)| w.labels()[0])
                .collect();
            let want: Vec<u32> = [twice_i.checked_sub(2), (twice_i >= 1).then_some(twice_i), Some(twice_i + 2)]
                .into_iter()
                .flatten()
                .collect();
            if got != want {
                return fail(format!("SU(2)_{k}: 1 x {twice_i}/2 = {got:?}"));
            }
        }
    }
    Ok(format!("max deviation {worst:.2e}; SU(2) tensors equal the closed form"))
}

fn two_route_s() -> Outcome {
    let mut worst: f64 = 0.0;
    for (n, k) in grid() {
        let md = ModularData::for_level(n, k).map_err(|e| e.to_string())?;
        let t = verlinde_with_deviation(&md).map_err(|e| e.to_string())?.tensor;
        let y = y_matrix(&t, &md);
        let scale = md.gauss_sum().norm();
        let dev = (y / num_complex::Complex64::new(scale, 0.0) - md.s())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        worst = worst.max(dev);
        if dev >= 1e-8 {
            return fail(format!("SU({n})_{k}: deviation {dev:.3e}"));
        }
    }
    Ok(format!("max deviation {worst:.2e}"))
}

fn counting() -> Outcome {
    for k in 1..=12 {
        let p = AlgebraParams::new(3, k).map_err(|e| e.to_string())?;
        let m = (k / 2 + 1) as usize;
        let a = twisted_soliton_count(&p);
        let size = expected_nv(k).map_err(|e| e.to_string())?.nrows();
        if a != m || soliton_count(k) != m || size != m {
            return fail(format!("k={k}: a={a}, m={m}, N_v size {size}"));
        }
    }
    Ok("a = floor(k/2)+1 = size of N_v for k = 1..12".into())
}

fn solver_reproduction() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    for k in 1..=12 {
        let r = solve_nv(k).map_err(|e| format!("k={k}: {e}"))?;
        if !r.is_unique() {
            return fail(format!("k={k}: {} classes", r.classes.len()));
        }
        let (want, _) = canonical_form(&expected_nv(k).map_err(|e| e.to_string())?);
        if r.classes[0].nv != want {
            return fail(format!("k={k}: class differs from the expected matrix"));
        }
        summary.push(r.raw_solutions);
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        return fail(format!("runtime {elapsed:?} exceeds 60 s"));
    }
    Ok(format!("one class for k = 1..12, labelled counts {summary:?}, runtime {elapsed:.2?}"))
}

fn spectrum_and_census() -> Outcome {
    for k in 1..=12 {
        let md = ModularData::for_level(3, k).map_err(|e| e.to_string())?;
        let c = SolverConstraints::for_level(k).map_err(|e| e.to_string())?;
        let r = solve_nv(k).map_err(|e| e.to_string())?;
        for class in &r.classes {
            let check = spectrum_check(&class.nv, &md);
            if !check.passed {
                return fail(format!("k={k}: spectrum deviation {:.3e}", check.max_deviation));
            }
            let m = &class.m_matrix;
            let tr: i64 = m.diagonal().sum();
            let tr2: i64 = (m * m).diagonal().sum();
            if tr != c.trace as i64 || tr2 != c.trace_sq as i64 {
                return fail(format!("k={k}: tr M = {tr}, tr M^2 = {tr2}"));
            }
            if m.iter().any(|&x| !(-1..=1).contains(&x))
                || (0..m.nrows()).any(|i| (0..m.ncols()).any(|j| i != j && m[(i, j)] < 0))
            {
                return fail(format!("k={k}: entry outside the allowed domain"));
            }
            let census = RowCensus::of(m);
            if census.k1 + census.k2 + census.k3 + census.k0 != m.nrows() || !census.satisfies_level_identity(k) {
                return fail(format!("k={k}: census {census:?}"));
            }
            // with no empty rows the identity is k1 = k3 + 2 (odd) or k3 + 1 (even)
            if census.k0 == 0 {
                let offset = if k % 2 == 1 { 2 } else { 1 };
                if census.k1 != census.k3 + offset {
                    return fail(format!("k={k}: census {census:?}"));
                }
            } else if m.nrows() != 1 {
                return fail(format!("k={k}: empty row in a {}x{} matrix", m.nrows(), m.nrows()));
            }
        }
    }
    Ok("spectra within 1e-8; traces and row census exact for k = 1..12".into())
}

fn nimrep_property() -> Outcome {
    for k in 1..=8 {
        let sol = TwistedSolution::compute(k).map_err(|e| format!("k={k}: {e}"))?;
        let md = &sol.modular;
        let reps = twisted_nimreps(&sol.spectrum.psi, md).map_err(|e| format!("k={k}: {e}"))?;
        if reps.iter().any(|r| r.iter().any(|&x| x < 0)) {
            return fail(format!("k={k}: negative entry"));
        }
        let fusion = verlinde_with_deviation(md).map_err(|e| e.to_string())?.tensor;
        let m = sol.nv.nrows();
        let rank = md.rank();
        for a in 0..rank {
            for b in 0..rank {
                let mut rhs = DMatrix::<i64>::zeros(m, m);
                for (c, rep) in reps.iter().enumerate() {
                    rhs += rep * fusion.get(a, b, c) as i64;
                }
                if &reps[a] * &reps[b] != rhs {
                    return fail(format!("k={k}: N_{a} N_{b} differs from the fusion expansion"));
                }
            }
        }
        let report = nimrep_report(&sol, 1e-8).map_err(|e| e.to_string())?;
        let failed: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
        if !failed.is_empty() {
            return fail(format!("k={k}: {}", failed.join(", ")));
        }
    }
    Ok("all N_lambda non-negative integral and multiplicative for k = 1..8".into())
}

fn sum_rule() -> Outcome {
    let mut k1_index = 0.0;
    for k in 1..=12 {
        let sol = TwistedSolution::compute(k).map_err(|e| format!("k={k}: {e}"))?;
        let total: f64 = sol.spectrum.indices.iter().sum();
        let mu = sol.modular.global_dimension_squared();
        if (total - mu).abs() >= 1e-8 {
            return fail(format!("k={k}: {total} vs {mu}"));
        }
        if k == 1 {
            k1_index = sol.spectrum.indices[0];
        }
    }
    // SU(2)_4 sector dimensions sin((j+1)π/6)/sin(π/6), minus the
    // untwisted orbifold sectors of SU(3)_1 (two of dimension 1, one of 2)
    let mut su2: Vec<f64> = (0..5)
        .map(|j| ((j + 1) as f64 * PI / 6.0).sin() / (PI / 6.0).sin())
        .collect();
    for d in [1.0, 1.0, 2.0] {
        let pos = su2
            .iter()
            .position(|x| (x - d).abs() < 1e-12)
            .ok_or("SU(2)_4 oracle is missing an untwisted dimension")?;
        su2.remove(pos);
    }
    if su2.len() != 2 || (su2[0] - su2[1]).abs() > 1e-12 {
        return fail(format!("SU(2)_4 oracle leaves {su2:?}"));
    }
    let oracle = su2[0] * su2[0];
    if (oracle - 3.0).abs() > 1e-12 || (k1_index - oracle).abs() >= 1e-8 {
        return fail(format!("k=1 index {k1_index} vs oracle {oracle}"));
    }
    Ok(format!("sum rule holds for k = 1..12; k=1 index {k1_index:.12} = SU(2)_4 value {oracle:.12}"))
}

fn orbifold_identity() -> Outcome {
    for k in 1..=8 {
        let sol = TwistedSolution::compute(k).map_err(|e| e.to_string())?;
        let inv = orbifold_inventory(&sol.modular, &sol.spectrum.dims).map_err(|e| e.to_string())?;
        let report = orbifold_mu_check(&inv, &sol.modular);
        let failed: Vec<String> = report
            .failures()
            .map(|c| format!("{} ({})", c.name, c.detail.clone().unwrap_or_default()))
            .collect();
        if !failed.is_empty() {
            return fail(format!("k={k}: {}", failed.join(", ")));
        }
    }
    Ok("sum dim^2 = 4 mu for k = 1..8".into())
}

fn audit_report() -> Outcome {
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for k in 1..=12 {
        let c = printed_index_formulas(k).map_err(|e| format!("k={k}: {e}"))?;
        if c.printed.len() != soliton_count(k) || c.ratios.iter().any(|r| !r.is_finite() || *r <= 0.0) {
            return fail(format!("k={k}: malformed comparison"));
        }
        if k == 1 {
            let (p, s) = (c.printed[0], c.sum_rule[0]);
            if (p - 6.0).abs() >= 1e-8 || (s - 3.0).abs() >= 1e-8 {
                return fail(format!("k=1: printed {p}, sum rule {s}"));
            }
        }
        let summary = format!("k={k} delta ratio {:.6}", c.delta_ratio());
        if k % 2 == 1 { odd.push(summary) } else { even.push(summary) }
    }
    Ok(format!(
        "k=1 printed 6 vs sum rule 3; odd: {}; even: {}",
        odd.join(", "),
        even.join(", ")
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 modular relations on n in {2,3,4}, k in 1..6", modular_relations),
        ("2 Verlinde integrality and SU(2) closed form", verlinde_integrality),
        ("3 |a|^-1 Y = Kac-Peterson S", two_route_s),
        ("4 twisted soliton count", counting),
        ("5 solver reproduces the SU(2) matrices", solver_reproduction),
        ("6 spectrum, traces and row census", spectrum_and_census),
        ("7 twisted NIM-rep is a fusion representation", nimrep_property),
        ("8 sum rule and the SU(2)_4 check at k=1", sum_rule),
        ("9 orbifold index identity", orbifold_identity),
        ("10 printed-formula audit report", audit_report),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        match f() {
            Ok(detail) => println!("[PASS] criterion {name} ({:.2?}): {detail}", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {name} ({:.2?}): {detail}", start.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
