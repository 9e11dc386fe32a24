use std::path::Path;

use fusionkit::fusion::ring_axioms_check;
use fusionkit::modular::{verify_modular_with, verlinde_tensor, verlinde_with_deviation};
use fusionkit::nimrep::{
    compare_printed, nimrep_report, twisted_nimreps, PrintedComparison, RowCensus,
    TwistedSolution,
};
use fusionkit::twisted::{
    mu_index, orbifold_inventory, orbifold_mu_check, twisted_soliton_count,
};
use fusionkit::{Check, FusionTensor, ModularData, Report, Weight};
use serde_json::{json, Value};

use crate::render::{
    complex, complex_text, csv, envelope, int_matrix, labels, num, report_json, sig, table,
};
use crate::{CliError, Common, Format, Outcome, Status};

type Run = Result<Outcome, CliError>;

fn ok(output: String) -> Run {
    Ok(Outcome {
        status: Status::Success,
        output,
    })
}

fn json_out(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are serialisable");
    s.push('\n');
    s
}

fn modular_data(c: &Common) -> Result<ModularData, CliError> {
    Ok(ModularData::for_level(c.n, c.level)?)
}

fn names(ws: &[Weight]) -> Vec<String> {
    ws.iter().map(Weight::to_string).collect()
}

pub fn reps(c: &Common) -> Run {
    let md = modular_data(c)?;
    let rows: Vec<Vec<String>> = md
        .weights()
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let t = md.twists()[i];
            vec![
                i.to_string(),
                w.to_string(),
                md.weights()[md.conj_perm()[i]].to_string(),
                md.conformal_weights()[i].to_string(),
                sig(md.dims()[i]),
                complex_text(t.re, t.im),
            ]
        })
        .collect();
    let header = ["index", "weight", "conjugate", "h", "dimension", "twist"];
    match c.format {
        Format::Table => ok(format!(
            "{} : {} weights\n{}",
            md.params(),
            md.rank(),
            table(&header, &rows)
        )),
        Format::Csv => ok(csv(&header, &rows)),
        Format::Json => {
            let data: Vec<Value> = md
                .weights()
                .iter()
                .enumerate()
                .map(|(i, w)| {
                    let t = md.twists()[i];
                    json!({
                        "labels": labels(w),
                        "conjugate": md.conj_perm()[i],
                        "self_conjugate": w.is_self_conjugate(),
                        "conformal_weight": md.conformal_weights()[i].to_string(),
                        "dimension": num(md.dims()[i]),
                        "twist": complex(t.re, t.im),
                    })
                })
                .collect();
            ok(json_out(&envelope(&md.params(), md.weights(), Value::Array(data))))
        }
    }
}

pub fn modular(c: &Common) -> Run {
    let md = modular_data(c)?;
    let r = md.rank();
    let a = md.gauss_sum();
    match c.format {
        Format::Json => {
            let s: Vec<Value> = (0..r)
                .map(|i| Value::Array((0..r).map(|j| complex(md.s()[(i, j)].re, md.s()[(i, j)].im)).collect()))
                .collect();
            let t: Vec<Value> = (0..r).map(|i| complex(md.t()[(i, i)].re, md.t()[(i, i)].im)).collect();
            let data = json!({
                "S": s,
                "T_diagonal": t,
                "dimensions": md.dims().iter().map(|&d| num(d)).collect::<Vec<_>>(),
                "gauss_sum": complex(a.re, a.im),
                "c0": num(md.c0()),
                "global_dimension_squared": num(md.global_dimension_squared()),
            });
            ok(json_out(&envelope(&md.params(), md.weights(), data)))
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for i in 0..r {
                for j in 0..r {
                    let z = md.s()[(i, j)];
                    rows.push(vec!["S".into(), i.to_string(), j.to_string(), sig(z.re), sig(z.im)]);
                }
            }
            for i in 0..r {
                let z = md.t()[(i, i)];
                rows.push(vec!["T".into(), i.to_string(), i.to_string(), sig(z.re), sig(z.im)]);
            }
            ok(csv(&["matrix", "row", "col", "re", "im"], &rows))
        }
        Format::Table => {
            let ws = names(md.weights());
            let mut header = vec![String::from("S")];
            header.extend(ws.iter().cloned());
            let rows: Vec<Vec<String>> = (0..r)
                .map(|i| {
                    let mut row = vec![ws[i].clone()];
                    row.extend((0..r).map(|j| complex_text(md.s()[(i, j)].re, md.s()[(i, j)].im)));
                    row
                })
                .collect();
            let mut out = format!("{}\n", md.params());
            out.push_str(&table(&header.iter().map(String::as_str).collect::<Vec<_>>(), &rows));
            out.push('\n');
            let trows: Vec<Vec<String>> = (0..r)
                .map(|i| {
                    let z = md.t()[(i, i)];
                    vec![ws[i].clone(), complex_text(z.re, z.im), sig(md.dims()[i])]
                })
                .collect();
            out.push_str(&table(&["weight", "T", "dimension"], &trows));
            out.push_str(&format!(
                "\nGauss sum a = {}\n|a|^2 = {} = sum d^2\nc0 (mod 8) = {}\n",
                complex_text(a.re, a.im),
                sig(a.norm_sqr()),
                sig(md.c0())
            ));
            ok(out)
        }
    }
}

fn fusion_json(t: &FusionTensor, md: &ModularData) -> Value {
    let r = t.rank();
    let n: Vec<Value> = (0..r)
        .map(|a| json!((0..r).map(|b| (0..r).map(|c| t.get(a, b, c)).collect::<Vec<_>>()).collect::<Vec<_>>()))
        .collect();
    envelope(&md.params(), md.weights(), json!({ "N": n }))
}

pub fn fusion(c: &Common) -> Run {
    let md = modular_data(c)?;
    let t = verlinde_tensor(&md)?;
    let ws = names(md.weights());
    let r = t.rank();
    match c.format {
        Format::Json => ok(json_out(&fusion_json(&t, &md))),
        Format::Csv => {
            let mut rows = Vec::new();
            for a in 0..r {
                for b in 0..r {
                    for nu in 0..r {
                        let v = t.get(a, b, nu);
                        if v != 0 {
                            rows.push(vec![ws[a].clone(), ws[b].clone(), ws[nu].clone(), v.to_string()]);
                        }
                    }
                }
            }
            ok(csv(&["lambda", "mu", "nu", "N"], &rows))
        }
        Format::Table => {
            let mut out = format!("{} fusion rules\n", md.params());
            for a in 0..r {
                for b in a..r {
                    let terms: Vec<String> = (0..r)
                        .filter(|&nu| t.get(a, b, nu) != 0)
                        .map(|nu| match t.get(a, b, nu) {
                            1 => ws[nu].clone(),
                            m => format!("{m}{}", ws[nu]),
                        })
                        .collect();
                    out.push_str(&format!("{} x {} = {}\n", ws[a], ws[b], terms.join(" + ")));
                }
            }
            ok(out)
        }
    }
}

/// Reads a fusion tensor exported with `fusion --format json`.
pub fn import_fusion_tensor(text: &str, md: &ModularData) -> Result<FusionTensor, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let n = v["algebra"]["n"].as_u64();
    let k = v["algebra"]["k"].as_u64();
    let p = md.params();
    if n != Some(p.n() as u64) || k != Some(p.k() as u64) {
        return Err(format!("tensor is for n={n:?} k={k:?}, expected {p}"));
    }
    let weights: Vec<Weight> = v["weights"]
        .as_array()
        .ok_or("missing weights")?
        .iter()
        .map(|w| {
            w.as_array()
                .ok_or("weight is not an array")?
                .iter()
                .map(|l| l.as_u64().map(|x| x as u32).ok_or("label is not an integer"))
                .collect::<Result<Vec<u32>, _>>()
                .map(Weight::new)
        })
        .collect::<Result<_, &str>>()?;
    if weights != md.weights() {
        return Err("weights differ from the canonical alphabet".into());
    }
    let mut entries = Vec::new();
    for a in v["data"]["N"].as_array().ok_or("missing data.N")? {
        for b in a.as_array().ok_or("data.N is not 3-dimensional")? {
            for c in b.as_array().ok_or("data.N is not 3-dimensional")? {
                entries.push(c.as_u64().ok_or("fusion coefficient is not a non-negative integer")? as u32);
            }
        }
    }
    FusionTensor::from_entries(weights, entries).map_err(|e| e.to_string())
}

fn inventory_rows(md: &ModularData, dims: Option<&[f64]>) -> (Vec<Vec<String>>, Value) {
    let a = twisted_soliton_count(&md.params());
    let mut rows = Vec::new();
    let mut split = Vec::new();
    let mut merged = Vec::new();
    for (i, w) in md.weights().iter().enumerate() {
        let j = md.conj_perm()[i];
        let d = md.dims()[i];
        if i == j {
            for s in ['+', '-'] {
                rows.push(vec![format!("{w}{s}"), "untwisted".into(), sig(d)]);
                split.push(json!({ "weight": labels(w), "sign": s.to_string(), "dim": num(d) }));
            }
        } else if i < j {
            let pair = format!("{w}+{}", md.weights()[j]);
            rows.push(vec![pair, "untwisted".into(), sig(2.0 * d)]);
            merged.push(json!({ "pair": [labels(w), labels(&md.weights()[j])], "dim": num(2.0 * d) }));
        }
    }
    let mut twisted = Vec::new();
    for rho in 0..a {
        let d = dims.map(|x| x[rho]);
        for s in ['+', '-'] {
            rows.push(vec![
                format!("rho_{}{s}", rho + 1),
                "twisted".into(),
                d.map(sig).unwrap_or_else(|| "unknown".into()),
            ]);
            twisted.push(json!({ "soliton": rho + 1, "sign": s.to_string(), "dim": d.map(num) }));
        }
    }
    (rows, json!({ "split": split, "merged": merged, "twisted": twisted }))
}

pub fn twisted(c: &Common) -> Run {
    let md = modular_data(c)?;
    let a = twisted_soliton_count(&md.params());
    let b = md.self_conjugate_indices().len();
    let cc = md.rank() - b;
    let sol = if c.n == 3 { Some(TwistedSolution::compute(c.level)?) } else { None };
    let dims = sol.as_ref().map(|s| s.spectrum.dims.as_slice());
    let (rows, sectors) = inventory_rows(&md, dims);
    let check = match dims {
        Some(d) => Some(orbifold_mu_check(&orbifold_inventory(&md, d)?, &md)),
        None => None,
    };
    let sector_count = 2 * b + cc / 2 + 2 * a;
    match c.format {
        Format::Json => {
            let data = json!({
                "a": a, "b": b, "c": cc,
                "sector_count": sector_count,
                "mu": num(mu_index(&md)),
                "sectors": sectors,
                "checks": check.as_ref().map(report_json),
            });
            ok(json_out(&envelope(&md.params(), md.weights(), data)))
        }
        Format::Csv => ok(csv(&["sector", "kind", "dim"], &rows)),
        Format::Table => {
            let mut out = format!(
                "{}: a = {a} twisted solitons, b = {b} self-conjugate weights, c = {cc} others\n\
                 orbifold sectors: {sector_count}, mu = {}\n",
                md.params(),
                sig(mu_index(&md))
            );
            if dims.is_none() {
                out.push_str("soliton dimensions are only computed for n = 3\n");
            }
            out.push('\n');
            out.push_str(&table(&["sector", "kind", "dim"], &rows));
            if let Some(r) = check {
                out.push('\n');
                out.push_str(&r.to_string());
            }
            ok(out)
        }
    }
}

fn int_rows(size: usize, get: impl Fn(usize, usize) -> i64) -> Vec<Vec<i64>> {
    (0..size).map(|i| (0..size).map(|j| get(i, j)).collect()).collect()
}

fn soliton_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| i.to_string()).collect()
}

pub fn nimrep(c: &Common, all: bool) -> Run {
    let sol = TwistedSolution::compute(c.level)?;
    let md = &sol.modular;
    let m = sol.nv.nrows();
    let nv = int_rows(m, |i, j| sol.nv[(i, j)]);
    let mm = int_rows(m, |i, j| sol.nv[(i, j)] - i64::from(i == j));
    let census = RowCensus::of(&sol.report.classes[0].m_matrix);
    let coxeter = sol.report.classes[0].coxeter.as_ref().and_then(|c| c.name());
    let reps = if all || c.format != Format::Table {
        Some(twisted_nimreps(&sol.spectrum.psi, md)?)
    } else {
        None
    };
    let psi = &sol.spectrum.psi;
    match c.format {
        Format::Json => {
            let data = json!({
                "m": m,
                "labels": (1..=m).collect::<Vec<_>>(),
                "N_v": nv,
                "M": mm,
                "classes": sol.report.classes.len(),
                "labelled_solutions": sol.report.raw_solutions,
                "census": { "k0": census.k0, "k1": census.k1, "k2": census.k2, "k3": census.k3 },
                "coxeter": coxeter,
                "pf_vector": sol.spectrum.pf_vector.iter().map(|&x| num(x)).collect::<Vec<_>>(),
                "psi_columns": psi.columns.iter().map(|&i| labels(&md.weights()[i])).collect::<Vec<_>>(),
                "psi": (0..m).map(|i| (0..psi.columns.len()).map(|j| complex(psi.matrix[(i, j)].re, psi.matrix[(i, j)].im)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "N": reps.as_ref().map(|rs| rs.iter().zip(md.weights()).map(|(r, w)| json!({
                    "weight": labels(w),
                    "matrix": int_rows(m, |i, j| r[(i, j)]),
                })).collect::<Vec<_>>()),
            });
            ok(json_out(&envelope(&md.params(), md.weights(), data)))
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (r, w) in reps.as_ref().expect("computed for csv").iter().zip(md.weights()) {
                for i in 0..m {
                    for j in 0..m {
                        rows.push(vec![w.to_string(), (i + 1).to_string(), (j + 1).to_string(), r[(i, j)].to_string()]);
                    }
                }
            }
            ok(csv(&["lambda", "rho1", "rho2", "N"], &rows))
        }
        Format::Table => {
            let mut out = format!(
                "twisted NIM-rep of {}: m = {m} solitons labelled 1..{m}\n\
                 solution classes: {}, labelled solutions: {}\n\nN_v\n",
                md.params(),
                sol.report.classes.len(),
                sol.report.raw_solutions
            );
            out.push_str(&int_matrix(soliton_names(m), |i, j| sol.nv[(i, j)], m));
            out.push_str("\nM = N_v - I\n");
            out.push_str(&int_matrix(soliton_names(m), |i, j| mm[i][j], m));
            out.push_str(&format!(
                "\nrow census: k0={} k1={} k2={} k3={}\nCoxeter graph: {}\n",
                census.k0,
                census.k1,
                census.k2,
                census.k3,
                coxeter.unwrap_or_else(|| "not classified (non-zero diagonal)".into())
            ));
            let pf: Vec<String> = sol.spectrum.pf_vector.iter().map(|&x| sig(x)).collect();
            out.push_str(&format!(
                "Perron-Frobenius eigenvalue {} with vector ({})\n",
                sig(sol.spectrum.pf_eigenvalue),
                pf.join(", ")
            ));
            if let Some(rs) = reps {
                for (r, w) in rs.iter().zip(md.weights()) {
                    out.push_str(&format!("\nN_{w}\n"));
                    out.push_str(&int_matrix(soliton_names(m), |i, j| r[(i, j)], m));
                }
            }
            ok(out)
        }
    }
}

fn comparison_rows(cmp: &PrintedComparison, sol: &TwistedSolution) -> Vec<Vec<String>> {
    (0..cmp.printed.len())
        .map(|i| {
            vec![
                (i + 1).to_string(),
                sig(sol.spectrum.pattern[i]),
                sig(sol.spectrum.dims[i]),
                sig(cmp.sum_rule[i]),
                sig(cmp.printed[i]),
                sig(cmp.ratios[i]),
            ]
        })
        .collect()
}

const COMPARISON_HEADER: [&str; 6] = ["soliton", "pattern", "dim", "index", "printed", "printed/index"];

fn comparison_table(cmp: &PrintedComparison, sol: &TwistedSolution) -> String {
    let mut out = table(&COMPARISON_HEADER, &comparison_rows(cmp, sol));
    out.push_str(&format!(
        "delta: sum rule {}, printed {}, ratio {}\n",
        sig(cmp.sum_rule_delta),
        sig(cmp.printed_delta),
        sig(cmp.delta_ratio())
    ));
    out
}

fn comparison_json(cmp: &PrintedComparison) -> Value {
    json!({
        "printed_indices": cmp.printed.iter().map(|&x| num(x)).collect::<Vec<_>>(),
        "printed_delta": num(cmp.printed_delta),
        "ratios": cmp.ratios.iter().map(|&x| num(x)).collect::<Vec<_>>(),
        "delta_ratio": num(cmp.delta_ratio()),
    })
}

pub fn indices(c: &Common) -> Run {
    let sol = TwistedSolution::compute(c.level)?;
    let cmp = compare_printed(&sol);
    let md = &sol.modular;
    let total: f64 = sol.spectrum.indices.iter().sum();
    match c.format {
        Format::Json => {
            let s = &sol.spectrum;
            let data = json!({
                "delta": num(s.delta),
                "pattern": s.pattern.iter().map(|&x| num(x)).collect::<Vec<_>>(),
                "dims": s.dims.iter().map(|&x| num(x)).collect::<Vec<_>>(),
                "indices": s.indices.iter().map(|&x| num(x)).collect::<Vec<_>>(),
                "index_sum": num(total),
                "mu": num(md.global_dimension_squared()),
                "printed": comparison_json(&cmp),
            });
            ok(json_out(&envelope(&md.params(), md.weights(), data)))
        }
        Format::Csv => ok(csv(&COMPARISON_HEADER, &comparison_rows(&cmp, &sol))),
        Format::Table => ok(format!(
            "soliton indices of {} (sum rule normalisation)\n{}sum of indices {} = sum d^2 {}\n",
            md.params(),
            comparison_table(&cmp, &sol),
            sig(total),
            sig(md.global_dimension_squared())
        )),
    }
}

pub fn verify(c: &Common, fusion_input: Option<&Path>) -> Run {
    let md = modular_data(c)?;
    let tol = c.tolerance;
    let computed = verlinde_with_deviation(&md)?.tensor;
    let tensor = match fusion_input {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            import_fusion_tensor(&text, &md).map_err(CliError::Usage)?
        }
        None => computed.clone(),
    };
    let mut reports = vec![verify_modular_with(&md, tol, tol)];
    let mut fusion = ring_axioms_check(&tensor);
    fusion.push(Check::boolean("tensor = Verlinde tensor", tensor == computed));
    reports.push(fusion);
    let mut comparison = None;
    if c.n == 3 {
        let sol = TwistedSolution::compute(c.level)?;
        reports.push(nimrep_report(&sol, tol)?);
        let inv = orbifold_inventory(&md, &sol.spectrum.dims)?;
        reports.push(orbifold_mu_check(&inv, &md));
        comparison = Some((compare_printed(&sol), sol));
    }
    let passed = reports.iter().all(Report::all_passed);
    let status = if passed { Status::Success } else { Status::Failed };
    let output = match c.format {
        Format::Json => {
            let data = json!({
                "passed": passed,
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
                "printed_comparison": comparison.as_ref().map(|(cmp, _)| comparison_json(cmp)),
            });
            json_out(&envelope(&md.params(), md.weights(), data))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(move |ch| {
                        vec![
                            r.title.clone(),
                            ch.name.clone(),
                            if ch.passed { "pass" } else { "fail" }.into(),
                            sig(ch.max_deviation),
                            sig(ch.tolerance),
                        ]
                    })
                })
                .collect();
            csv(&["report", "check", "result", "deviation", "tolerance"], &rows)
        }
        Format::Table => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.to_string());
                out.push('\n');
            }
            if let Some((cmp, sol)) = &comparison {
                out.push_str("printed index formulas vs sum rule (reported, not asserted)\n");
                out.push_str(&comparison_table(cmp, sol));
                out.push('\n');
            }
            let failures: usize = reports.iter().map(|r| r.failures().count()).sum();
            out.push_str(&format!(
                "{}: {} checks, {failures} failed\n",
                if passed { "PASS" } else { "FAIL" },
                reports.iter().map(|r| r.checks.len()).sum::<usize>()
            ));
            out
        }
    };
    Ok(Outcome { status, output })
}
