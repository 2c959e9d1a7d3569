// Copyright 2026 The lgt-cost Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are computed in full and reported as FAIL; the process
//! only exits nonzero when some other criterion fails, or when a known failure starts passing
//! (so the list cannot go stale).

use std::time::{Duration, Instant};

use lgt_cost::cost::{assemble_total, cc_block_total, EncodingModel, EstimateOptions, TimeScaling};
use lgt_cost::lieb_robinson::{
    all_sign_configs, lieb_robinson_for, perron_root_power, spectral_radius_dense, u1_majorana_model, velocity_bound, CoeffMatrix,
    FormKind, KappaSearch,
};
use lgt_cost::model::{GaugeGroup, PhysicalParams};
use lgt_cost::pauli::{build_vc_hamiltonian, symplectic_product, Boundary, Lattice2D, TermOrigin};
use lgt_cost::report::{
    emit_table, interval_check, parse_table_csv, su3_qrom_cheaper_up_to, u1_fastforward_crossover, write_table_csv, SweepConfig,
    TrotterReference,
};
use lgt_cost::verify;

const LR_WINDOW: (f64, f64) = (52.0, 54.0);
const LR_BUDGET: Duration = Duration::from_secs(5);
const U1_TABLE_FACTOR: f64 = 2.0;
const U1_TABLE_BUDGET: Duration = Duration::from_secs(1);
const SU_TABLE_FACTOR: f64 = 3.0;
const CROSSOVER_WINDOW: (u64, u64) = (30, 50);
const SU3_QROM_AT_LEAST: u64 = 80;
const SU3_ARITH_BY: u64 = 100;
const BLOCK_RATIO_WINDOW: (f64, f64) = (2.5, 3.5);
const BLOCK_SIDES: [u64; 5] = [4, 8, 16, 32, 64];
const CIRCUIT_BUDGET: Duration = Duration::from_secs(10);
const SCALE_TOL: f64 = 1e-9;
const DUAL_RADIUS_TOL: f64 = 1e-8;

const KNOWN_FAILURES: &[(u32, &str)] = &[
    (2, "at eps = 1e-1 the printed T column is about twice what the printed formulas give; the eps = 1e-3 rows agree"),
    (4, "two U(1) rows print an improvement outside the range reachable from their own rounded inputs"),
    (6, "ceiled register widths put the low end of the sparse/LCU ratio just under 2.5"),
];

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: Vec<String>,
}

/// Truncates to two significant figures: how integer block sizes appear in the printed table.
fn truncate_two_sig(x: f64) -> f64 {
    let e = x.log10().floor() as i32 - 1;
    let scale = 10f64.powi(e);
    ((x / scale) + 1e-9).floor() * scale
}

fn lieb_robinson() -> Outcome {
    let reference = TrotterReference::bundled();
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for a in [1.0, 0.1, 0.01] {
        let p = PhysicalParams { a, m: 10.0, d: 2, group: GaugeGroup::U1, ..Default::default() };
        let v = lieb_robinson_for(&p, &KappaSearch::default()).expect("velocity bound").v_lr;
        let printed = reference.lookup(GaugeGroup::U1, 1e-3, 100, a).and_then(|r| r.v_lr.clone()).expect("printed v_LR");
        let shown = truncate_two_sig(v.ceil());
        let ok = if a == 0.1 { v >= LR_WINDOW.0 && v <= LR_WINDOW.1 } else { (shown - printed.value).abs() < 1e-9 * printed.value };
        pass &= ok;
        detail.push(format!("a={a}: v_LR={v:.6} block side {} shown {shown} printed {}", v.ceil(), printed.text));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < LR_BUDGET;
    detail.push(format!("runtime {elapsed:.2?}"));
    Outcome { id: 1, title: "Lieb-Robinson bound", pass, detail }
}

fn table_check(group: GaugeGroup, factor: f64, budget: Option<Duration>) -> (bool, Vec<String>) {
    let reference = TrotterReference::bundled();
    let start = Instant::now();
    let table = emit_table(&SweepConfig::reference(group), &reference).expect("table");
    let elapsed = start.elapsed();
    let mut pass = table.rows.len() == 12 && table.residuals.len() == 12;
    let mut detail = Vec::new();
    for r in &table.residuals {
        let ok = (r.t_ratio <= factor && r.t_ratio >= 1.0 / factor) && (r.q_ratio <= factor && r.q_ratio >= 1.0 / factor);
        pass &= ok;
        detail.push(format!(
            "eps={:e} N={} a={}: T ours/printed {:.3}, Q ours/printed {:.3}{}",
            r.epsilon,
            r.n,
            r.a,
            r.t_ratio,
            r.q_ratio,
            if ok { "" } else { "  <-- outside tolerance" }
        ));
    }
    if let Some(b) = budget {
        pass &= elapsed < b;
    }
    detail.push(format!("runtime {elapsed:.2?}; conventions: {}", table.meta.conventions.len()));
    (pass, detail)
}

fn u1_table() -> Outcome {
    let (pass, detail) = table_check(GaugeGroup::U1, U1_TABLE_FACTOR, Some(U1_TABLE_BUDGET));
    Outcome { id: 2, title: "U(1) table reproduction (LCU, HHKL, per unit time)", pass, detail }
}

fn su_tables() -> Outcome {
    let (p2, mut d2) = table_check(GaugeGroup::SU2, SU_TABLE_FACTOR, None);
    let (p3, d3) = table_check(GaugeGroup::SU3, SU_TABLE_FACTOR, None);
    d2.iter_mut().for_each(|l| l.insert_str(0, "su2 "));
    d2.extend(d3.into_iter().map(|l| format!("su3 {l}")));
    Outcome { id: 3, title: "SU(2) and SU(3) table reproduction (sparse, whole lattice)", pass: p2 && p3, detail: d2 }
}

fn improvement_column() -> Outcome {
    let reference = TrotterReference::bundled();
    let mut consistent = 0;
    let mut point = 0;
    let mut detail = Vec::new();
    for r in &reference.rows {
        let c = interval_check(&r.t_trotter, &r.q_trotter, &r.t_qubit, &r.q_qubit, &r.improvement).expect("positive counts");
        consistent += c.consistent as usize;
        point += c.point_match as usize;
        if !c.consistent {
            detail.push(format!(
                "{} eps={:e} N={} a={}: printed {} but inputs allow only [{:.4e}, {:.4e}] (point {:.4e})",
                r.table, r.epsilon, r.n, r.a, r.improvement.text, c.lo, c.hi, c.point
            ));
        }
    }
    let n = reference.rows.len();
    detail.insert(0, format!("{consistent}/{n} rows consistent within input rounding; {point}/{n} point estimates round to the printed value"));
    Outcome { id: 4, title: "Improvement column arithmetic", pass: n == 36 && consistent == n, detail }
}

fn crossovers() -> Outcome {
    let u1 = u1_fastforward_crossover(1e-3, 100).expect("fast-forward costs");
    let su3 = su3_qrom_cheaper_up_to(1e-3, SU3_ARITH_BY).expect("fast-forward costs");
    let pass = u1.is_some_and(|l| (CROSSOVER_WINDOW.0..=CROSSOVER_WINDOW.1).contains(&l)) && (SU3_QROM_AT_LEAST..SU3_ARITH_BY).contains(&su3);
    let detail = vec![
        format!("U(1) arithmetic strictly cheaper for every truncation from {u1:?} to 100"),
        format!("SU(3) QROM no dearer up to {su3}; arithmetic cheaper at {}", su3 + 1),
    ];
    Outcome { id: 5, title: "Fast-forward crossovers", pass, detail }
}

fn block_ratio() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for nb in BLOCK_SIDES {
        let s = cc_block_total(EncodingModel::Sparse, GaugeGroup::U1, nb, 2, 5, 1e-3).expect("sparse");
        let l = cc_block_total(EncodingModel::Lcu, GaugeGroup::U1, nb, 2, 5, 1e-3).expect("lcu");
        let r = s.total as f64 / l.total as f64;
        let ok = r >= BLOCK_RATIO_WINDOW.0 && r <= BLOCK_RATIO_WINDOW.1;
        pass &= ok;
        detail.push(format!("N_B={nb}: sparse {} / LCU {} = {r:.4}{}", s.total, l.total, if ok { "" } else { "  <-- outside window" }));
    }
    Outcome { id: 6, title: "Sparse/LCU block-encoding ratio", pass, detail }
}

fn circuits() -> Outcome {
    let start = Instant::now();
    let reports = [
        verify::check_sid(4),
        verify::check_matrix_element_phase(3),
        verify::check_fastforward(15, &verify::probe_times(20)),
    ];
    let elapsed = start.elapsed();
    let mut detail: Vec<String> = reports
        .iter()
        .map(|r| format!("{}: {} cases, {} failures{}", r.name, r.cases, r.failures.len(), r.failures.first().map(|f| format!(" (first: {f})")).unwrap_or_default()))
        .collect();
    detail.push(format!("runtime {elapsed:.2?}"));
    Outcome { id: 7, title: "Circuit-kernel oracles", pass: reports.iter().all(|r| r.passed()) && elapsed < CIRCUIT_BUDGET, detail }
}

fn symplectic() -> Outcome {
    let comm = verify::check_commutation(3);
    let mut detail = vec![format!("{}: {} cases, {} failures", comm.name, comm.cases, comm.failures.len())];
    let mut pass = comm.passed();
    let couplings = PhysicalParams::default().couplings();
    for (n, boundary) in [(2, Boundary::Open), (4, Boundary::Open), (4, Boundary::Periodic)] {
        let lat = Lattice2D::new(n, 1, boundary).expect("lattice");
        let terms = build_vc_hamiltonian(&lat, GaugeGroup::U1, &couplings).expect("terms");
        let aux: Vec<_> = terms.iter().filter(|t| t.origin == TermOrigin::Aux).collect();
        let fermionic: Vec<_> = terms.iter().filter(|t| t.origin.is_fermionic()).collect();
        let mut bad = 0;
        for s in &aux {
            for t in &fermionic {
                if symplectic_product(&s.pauli, &t.pauli).expect("same width") {
                    bad += 1;
                }
            }
        }
        pass &= bad == 0 && !aux.is_empty();
        detail.push(format!("N={n} {boundary:?}: {} stabilisers x {} fermionic terms, {bad} anticommuting pairs", aux.len(), fermionic.len()));
    }
    Outcome { id: 8, title: "Symplectic algebra and VC stabilisers", pass, detail }
}

fn monotone(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[1] >= w[0])
}

fn properties() -> Outcome {
    let mut detail = Vec::new();

    // nondecreasing in N, T, Λ and 1/ε for every model
    let ns = [4u64, 16, 64];
    let ts = [1.0, 5.0, 10.0];
    let lambdas = [2u64, 10, 50];
    let inv_eps = [1e-1, 1e-3, 1e-8];
    let setups = [
        (GaugeGroup::U1, EncodingModel::Lcu, true),
        (GaugeGroup::U1, EncodingModel::Sparse, true),
        (GaugeGroup::SU2, EncodingModel::Sparse, false),
        (GaugeGroup::SU3, EncodingModel::Sparse, false),
    ];
    let mut violations = 0;
    let mut evaluated = 0;
    for (group, model, hhkl) in setups {
        let opts = EstimateOptions { model, hhkl, v_lr: hhkl.then_some(52.2), time_scaling: TimeScaling::Evolution, ..Default::default() };
        let eval = |n: u64, time: f64, lambda: u64, epsilon: f64| {
            let p = PhysicalParams { group, d: if group == GaugeGroup::U1 { 2 } else { 3 }, n, time, lambda, epsilon, ..Default::default() };
            let r = assemble_total(&p, &opts).expect("estimate");
            (r.total.value, r.qubits_total.value)
        };
        for &n in &ns {
            for &t in &ts {
                for &l in &lambdas {
                    for &e in &inv_eps {
                        evaluated += 1;
                        let axes: [Vec<(f64, f64)>; 4] = [
                            ns.iter().map(|&x| eval(x, t, l, e)).collect(),
                            ts.iter().map(|&x| eval(n, x, l, e)).collect(),
                            lambdas.iter().map(|&x| eval(n, t, x, e)).collect(),
                            inv_eps.iter().map(|&x| eval(n, t, l, x)).collect(),
                        ];
                        for axis in &axes {
                            let tc: Vec<f64> = axis.iter().map(|v| v.0).collect();
                            let qc: Vec<f64> = axis.iter().map(|v| v.1).collect();
                            violations += (!monotone(&tc)) as usize + (!monotone(&qc)) as usize;
                        }
                    }
                }
            }
        }
    }
    let mono = violations == 0;
    detail.push(format!("monotonicity: {evaluated} grid points x 4 axes x 4 models, {violations} violations"));

    // scale covariance of the velocity bound under h -> s h
    let mut model = u1_majorana_model(2, &PhysicalParams::default().couplings()).expect("model");
    let c = model.coefficients();
    let signs = all_sign_configs(2);
    let search = KappaSearch::default();
    let base = velocity_bound(&model.sigma, &c, &signs, &search).expect("bound").v_lr;
    let h = model.h.clone();
    let mut worst_scale: f64 = 0.0;
    for s in [0.37, 2.5, 10.0] {
        model.h = h.iter().map(|x| x * s).collect();
        let v = velocity_bound(&model.sigma, &model.coefficients(), &signs, &search).expect("bound").v_lr;
        worst_scale = worst_scale.max((v - s * base).abs() / (s * base));
    }
    let scale_ok = worst_scale <= SCALE_TOL;
    detail.push(format!("scale covariance: worst relative deviation {worst_scale:.2e}"));

    // dense eigenvalues against power iteration
    let cm = CoeffMatrix::new(&model.sigma, &c, FormKind::Majorana).expect("coefficient matrix");
    let mut worst_dual: f64 = 0.0;
    let mut matrices = 0;
    for j in 0..60 {
        let kappa = 1e-3 * 10f64.powf(j as f64 * 4.7 / 59.0);
        for sg in &signs {
            let m = cm.at_imag(kappa, sg).expect("matrix");
            let dense = spectral_radius_dense(&m);
            let power = perron_root_power(&m, 1e-13, 200_000).expect("power iteration");
            worst_dual = worst_dual.max((dense - power).abs() / dense.max(f64::MIN_POSITIVE));
            matrices += 1;
        }
    }
    let dual_ok = worst_dual <= DUAL_RADIUS_TOL;
    detail.push(format!("spectral radius: {matrices} matrices, worst relative gap {worst_dual:.2e}"));

    // CSV round trip of emitted tables
    let reference = TrotterReference::bundled();
    let mut csv_ok = true;
    for group in GaugeGroup::ALL {
        let t = emit_table(&SweepConfig::reference(group), &reference).expect("table");
        let mut buf = Vec::new();
        write_table_csv(&t.rows, &mut buf).expect("write");
        let back = parse_table_csv(std::str::from_utf8(&buf).expect("utf8")).expect("parse");
        csv_ok &= back == t.rows;
    }
    detail.push(format!("CSV round trip: {}", if csv_ok { "lossless" } else { "mismatch" }));

    Outcome { id: 9, title: "Property suites", pass: mono && scale_ok && dual_ok && csv_ok, detail }
}

fn main() {
    let outcomes = [lieb_robinson(), u1_table(), su_tables(), improvement_column(), crossovers(), block_ratio(), circuits(), symplectic(), properties()];
    let mut unexpected = Vec::new();
    for o in &outcomes {
        let known = KNOWN_FAILURES.iter().find(|(id, _)| *id == o.id);
        println!("{} criterion {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.id, o.title);
        for line in &o.detail {
            println!("    {line}");
        }
        match (o.pass, known) {
            (false, Some((_, why))) => println!("    known failure: {why}"),
            (false, None) => unexpected.push(format!("criterion {} failed", o.id)),
            (true, Some(_)) => unexpected.push(format!("criterion {} now passes; remove it from KNOWN_FAILURES", o.id)),
            (true, None) => {}
        }
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("{passed}/{} criteria pass", outcomes.len());
    if !unexpected.is_empty() {
        eprintln!("unexpected acceptance results: {}", unexpected.join("; "));
        std::process::exit(1);
    }
}
