//! Reproduction driver behind `tpkit verify-paper`.
//!
//! Every case returns a [`Report`]. Fixture checks compare against the
//! embedded reference matrices; corpus checks run `trials` seeded instances,
//! where trial `t` uses [`trial_seed`]`(seed, t)`.

use rayon::prelude::*;

use crate::compound::{compound, k_subsets};
use crate::condensation::{condense, corner_minor_check, sylvester_check};
use crate::corpus::{random_integer_matrix, random_sylvester_instance, trial_seed};
use crate::determinant::minor;
use crate::error::{Result, TpError};
use crate::fixtures::{condensation6, condensation6_d1, hilbert4, hilbert4_compound2};
use crate::hankel::{check_hankel_condensations, moment_spec, HankelSpec};
use crate::matrix::{ExactMatrix, IndexSet};
use crate::netfact::{
    assemble, build_s_matrix, displayed_minors, generate_tp, lindstrom_minor, random_tp_params, s_matrix_formulas,
    PlanarNetwork, SMatrixParams, TopWeights,
};
use crate::positivity::{
    check_compound_not_tp3, check_condensation_inherits, check_condensation_lifts, check_ordering_invariance,
    check_singular_perturbation, is_tp_k, PositivityVerdict,
};
use crate::rational::{format_rational, int, ratio, Rational};
use crate::report::{Detail, Report, Status};
use crate::rng::SplitMix64;

pub const CASES: [&str; 10] = [
    "exampleA",
    "exampleB",
    "thmA",
    "thmB",
    "thmC",
    "thmD",
    "remark33",
    "remark37",
    "sylvester",
    "lindstrom",
];

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_TRIALS: u64 = 10;

/// Parameter magnitude for generated matrices.
const MAGNITUDE: u64 = 9;

/// Runs one case, or every case for `"all"` (reports in [`CASES`] order).
pub fn verify(case: &str, seed: u64, trials: u64) -> Result<Vec<Report>> {
    if case == "all" {
        return CASES.par_iter().map(|c| run_case(c, seed, trials)).collect();
    }
    Ok(vec![run_case(case, seed, trials)?])
}

pub fn run_case(case: &str, seed: u64, trials: u64) -> Result<Report> {
    let report = Report::new(case).with_seed(seed, trials);
    match case {
        "exampleA" => example_a(report),
        "exampleB" => example_b(report),
        "thmA" => compound_not_tp3(report, seed, trials),
        "thmB" => condensation_inherits(report, seed, trials),
        "thmC" => hankel_condensations(report, seed, trials),
        "thmD" => condensation_lifts(report, seed, trials),
        "remark33" => ordering(report, seed, trials),
        "remark37" => perturbation(report, seed, trials),
        "sylvester" => sylvester(report, seed, trials),
        "lindstrom" => lindstrom(report, seed, trials),
        other => Err(TpError::Usage(format!(
            "unknown case {other:?}; expected one of {} or all",
            CASES.join(", ")
        ))),
    }
}

fn holds_text(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "fails"
    }
}

pub fn witness_text(v: &PositivityVerdict) -> Option<String> {
    v.witness
        .as_ref()
        .map(|w| format!("rows {} cols {} value {}", w.rows, w.cols, format_rational(&w.value)))
}

fn verdict_detail(check: impl Into<String>, v: &PositivityVerdict, expect: bool) -> Detail {
    let d = Detail::expect(check, v.holds == expect, holds_text(expect), holds_text(v.holds));
    match witness_text(v) {
        Some(w) => d.with_witness(w),
        None => d,
    }
}

fn matching_entries(a: &ExactMatrix, b: &ExactMatrix) -> usize {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return 0;
    }
    a.entries().iter().zip(b.entries()).filter(|(x, y)| x == y).count()
}

fn count_detail(check: &str, good: usize, total: usize) -> Detail {
    Detail::expect(check, good == total, format!("{total}/{total}"), format!("{good}/{total}"))
}

fn trials_par<T: Send>(trials: u64, f: impl Fn(u64) -> Result<T> + Sync + Send) -> Result<Vec<T>> {
    (0..trials).into_par_iter().map(f).collect()
}

fn example_a(mut r: Report) -> Result<Report> {
    let a = hilbert4();
    let c = compound(&a, 2)?;
    let printed = hilbert4_compound2();
    r.push(count_detail("C_2 entries equal the printed matrix", matching_entries(&c, &printed), 36));
    r.push(verdict_detail("A is TP_4", &is_tp_k(&a, 4)?, true));
    r.push(verdict_detail("C_2(A) is TP_2", &is_tp_k(&c, 2)?, true));
    r.push(verdict_detail("C_2(A) is TP_3", &is_tp_k(&c, 3)?, false));
    Ok(r)
}

fn example_b(mut r: Report) -> Result<Report> {
    let a = condensation6();
    let d = condense(&a, 1)?;
    r.push(count_detail("D_1 entries equal the printed matrix", matching_entries(&d, &condensation6_d1()), 25));
    r.push(verdict_detail("A is TP_6", &is_tp_k(&a, 6)?, true));
    r.push(verdict_detail("D_1(A) is TP_3", &is_tp_k(&d, 3)?, true));
    let tp4 = is_tp_k(&d, 4)?;
    r.push(verdict_detail("D_1(A) is TP_4", &tp4, false));
    let leading = tp4.witness.as_ref().is_some_and(|w| {
        w.rows.indices() == [1, 2, 3, 4] && w.cols.indices() == [1, 2, 3, 4]
    });
    r.push(Detail::expect(
        "TP_4 witness is the order-4 leading principal minor",
        leading,
        "rows {1,2,3,4} cols {1,2,3,4}",
        witness_text(&tp4).unwrap_or_else(|| "none".into()),
    ));
    Ok(r)
}

/// `n` cycles through 4, 5, 6; `k` through the valid range for that `n`.
fn cycle_order(t: u64) -> usize {
    4 + (t % 3) as usize
}

fn compound_not_tp3(mut r: Report, seed: u64, trials: u64) -> Result<Report> {
    let fixture = check_compound_not_tp3(&hilbert4(), 2)?;
    r.push(verdict_detail("1/(i+j) order 4: C_2 is TP_3", &fixture.compound_tp3, false));
    r.push(verdict_detail("1/(i+j) order 4: C_2 is TP_2", &fixture.compound_tp2, true));
    let outcomes = trials_par(trials, |t| {
        let n = cycle_order(t);
        let k = 2 + (t / 3) as usize % (n - 3);
        let (a, _) = generate_tp(n, trial_seed(seed, t), MAGNITUDE)?;
        let c = check_compound_not_tp3(&a, k)?;
        Ok((t, n, k, c))
    })?;
    let good = outcomes.iter().filter(|o| o.3.status() == Status::Pass).count();
    r.push(count_detail("generated TP matrices with C_k not TP_3", good, outcomes.len()));
    for (t, n, k, c) in &outcomes {
        if c.status() != Status::Pass || !c.contrapositive_consistent() {
            r.push(verdict_detail(format!("trial {t} (n={n}, k={k}): C_k is TP_3"), &c.compound_tp3, false));
        }
    }
    Ok(r)
}

fn condensation_inherits(mut r: Report, seed: u64, trials: u64) -> Result<Report> {
    let fixture = check_condensation_inherits(&condensation6(), 1)?;
    for imp in &fixture.implications {
        match &imp.conclusion {
            Some(v) => r.push(verdict_detail(format!("6x6 fixture: {}", imp.label), v, true)),
            None => r.push(Detail::new(
                format!("6x6 fixture: {}", imp.label),
                Status::HypothesisNotMet,
                "hypothesis",
                "not met",
            )),
        }
    }
    if let Some(v) = &fixture.tp4_of_condensed {
        r.push(verdict_detail("6x6 fixture: D_1 is TP_4", v, false));
    }
    let outcomes = trials_par(trials, |t| {
        let n = cycle_order(t);
        let k = 1 + (t / 3) as usize % (n - 1);
        let (a, _) = generate_tp(n, trial_seed(seed, t), MAGNITUDE)?;
        Ok((t, n, k, check_condensation_inherits(&a, k)?))
    })?;
    let met: usize = outcomes.iter().map(|o| o.3.implications.iter().filter(|i| i.hypothesis_met).count()).sum();
    let violated: Vec<_> = outcomes
        .iter()
        .flat_map(|(t, n, k, c)| c.implications.iter().filter(|i| i.violated()).map(move |i| (t, n, k, i)))
        .collect();
    r.push(count_detail("implications with met hypothesis that hold", met - violated.len(), met));
    for (t, n, k, imp) in violated {
        let v = imp.conclusion.as_ref().expect("violated implies evaluated");
        r.push(verdict_detail(format!("trial {t} (n={n}, k={k}): {}", imp.label), v, true));
    }
    Ok(r)
}

fn hilbert_spec(len: i64) -> HankelSpec {
    HankelSpec::new((0..len).map(|k| ratio(1, k + 2)).collect()).expect("odd length")
}

fn hankel_condensations(mut r: Report, seed: u64, trials: u64) -> Result<Report> {
    for len in [7, 9] {
        let c = check_hankel_condensations(&hilbert_spec(len))?;
        let good = c.stages.iter().filter(|s| s.ok()).count();
        r.push(count_detail(
            &format!("1/(i+j) order {}: stages Hankel, TP, shift-compatible", len / 2 + 1),
            good,
            c.stages.len(),
        ));
    }
    let outcomes = trials_par(trials, |t| {
        let nodes = 3 + (t % 4) as usize;
        Ok((t, nodes, check_hankel_condensations(&moment_spec(nodes, trial_seed(seed, t), MAGNITUDE)?)?))
    })?;
    let good = outcomes.iter().filter(|o| o.2.status() == Status::Pass).count();
    r.push(count_detail("moment Hankel matrices with all stages passing", good, outcomes.len()));
    for (t, nodes, c) in &outcomes {
        for s in c.stages.iter().filter(|s| !s.ok()) {
            r.push(Detail::expect(
                format!("trial {t} (order {nodes}): D_{}", s.k),
                false,
                "Hankel, TP, shift-compatible",
                format!("hankel={} tp={:?} shift={:?}", s.hankel, s.tp.as_ref().map(|v| v.holds), s.shift_commutes),
            ));
        }
    }
    Ok(r)
}

fn condensation_lifts(mut r: Report, seed: u64, trials: u64) -> Result<Report> {
    let fixture = check_condensation_lifts(&hilbert4(), 2)?;
    for imp in [&fixture.via_condensation, &fixture.via_compound] {
        match &imp.conclusion {
            Some(v) => r.push(verdict_detail(format!("1/(i+j) order 4: {}", imp.label), v, true)),
            None => r.push(Detail::expect(format!("1/(i+j) order 4: {}", imp.label), false, "hypothesis met", "not met")),
        }
    }
    let id = check_condensation_lifts(&ExactMatrix::identity(4)?, 1)?;
    r.push(Detail::new(
        "identity order 4, k=1: hypothesis",
        id.status(),
        "hypothesis-not-met",
        id.status().as_str(),
    ));
    let outcomes = trials_par(trials, |t| {
        let (a, _) = generate_tp(6, trial_seed(seed, t), MAGNITUDE)?;
        (1..=4).map(|k| Ok((t, k, check_condensation_lifts(&a, k)?))).collect::<Result<Vec<_>>>()
    })?;
    let all: Vec<_> = outcomes.into_iter().flatten().collect();
    let imps: Vec<_> = all
        .iter()
        .flat_map(|(t, k, c)| [(t, k, &c.via_condensation), (t, k, &c.via_compound)])
        .collect();
    let met = imps.iter().filter(|i| i.2.hypothesis_met).count();
    let violated: Vec<_> = imps.iter().filter(|i| i.2.violated()).collect();
    r.push(count_detail("implications with met hypothesis that hold", met - violated.len(), met));
    for (t, k, imp) in violated {
        let v = imp.conclusion.as_ref().expect("evaluated");
        r.push(verdict_detail(format!("trial {t} (k={k}): {}", imp.label), v, true));
    }
    Ok(r)
}

fn s_matrix_trial(seed: u64) -> Result<(bool, usize)> {
    let mut rng = SplitMix64::new(seed);
    let top = TopWeights::random(&mut rng, MAGNITUDE);
    let fill = rng.next_u64();
    let mut base = random_tp_params(4, fill, MAGNITUDE);
    let diag = std::mem::replace(&mut base.diag, vec![int(1); 4]);
    let unit_d = SMatrixParams::new(top.clone(), base.clone())?;
    let (s, _) = build_s_matrix(&unit_d)?;
    let formulas_ok = s == s_matrix_formulas(&top);
    base.diag = diag;
    let (sd, _) = build_s_matrix(&SMatrixParams::new(top.clone(), base)?)?;
    let mut signs = 0;
    for m in displayed_minors(&top) {
        if m.has_expected_sign(&minor(&sd, &m.row_set(), &m.col_set())?) {
            signs += 1;
        }
    }
    Ok((formulas_ok, signs))
}

fn ordering(mut r: Report, seed: u64, trials: u64) -> Result<Report> {
    let top = TopWeights::constant(int(1));
    let (s, _) = build_s_matrix(&SMatrixParams::with_unit_fill(4, top.clone())?)?;
    r.push(count_detail("S entries equal their path polynomials", matching_entries(&s, &s_matrix_formulas(&top)), 16));
    let mut exact = 0;
    for m in displayed_minors(&top) {
        if minor(&s, &m.row_set(), &m.col_set())? == m.value {
            exact += 1;
        }
    }
    r.push(count_detail("displayed minors equal their closed forms", exact, 8));
    let inv = check_ordering_invariance(&s)?;
    r.push(count_detail("orderings of S that fail TP_3", inv.failing_tp3(), inv.cases.len()));
    let identity = &inv.cases[0];
    r.push(verdict_detail("identity ordering: S is TP_3", &identity.verdict, false));
    let outcomes = trials_par(trials, |t| s_matrix_trial(trial_seed(seed, t)))?;
    let formulas = outcomes.iter().filter(|o| o.0).count();
    r.push(count_detail("random draws with D = I matching all 16 formulas", formulas, outcomes.len()));
    let signs: usize = outcomes.iter().map(|o| o.1).sum();
    r.push(count_detail("displayed minors with the expected sign under random D", signs, 8 * outcomes.len()));
    Ok(r)
}

fn perturbation(mut r: Report, seed: u64, trials: u64) -> Result<Report> {
    let push = |r: &mut Report, label: &str, c: &crate::positivity::PerturbationCheck| {
        r.push(Detail::expect(format!("{label}: det B"), c.det == int(0), "0", format_rational(&c.det)));
        r.push(verdict_detail(format!("{label}: B is TP_5"), &c.tp_n_minus_1, true));
        r.push(verdict_detail(format!("{label}: B is TP_6"), &c.tp_n, false));
        r.push(verdict_detail(format!("{label}: D_3(B) is TP_3"), &c.condensed_tp3, true));
    };
    let fixture = check_singular_perturbation(&condensation6())?;
    push(&mut r, "6x6 fixture", &fixture);
    let outcomes = trials_par(trials, |t| {
        let (a, _) = generate_tp(6, trial_seed(seed, t), MAGNITUDE)?;
        Ok((t, check_singular_perturbation(&a)?))
    })?;
    let good = outcomes.iter().filter(|o| o.1.status() == Status::Pass).count();
    r.push(count_detail("generated 6x6 matrices with the full pattern", good, outcomes.len()));
    for (t, c) in outcomes.iter().filter(|o| o.1.status() != Status::Pass) {
        push(&mut r, &format!("trial {t}"), c);
    }
    Ok(r)
}

fn sylvester(mut r: Report, seed: u64, trials: u64) -> Result<Report> {
    let outcomes = trials_par(trials, |t| {
        let n = 3 + (t % 4) as usize;
        let inst = random_sylvester_instance(n, trial_seed(seed, t))?;
        let out = sylvester_check(&inst.a, &inst.alpha, &inst.delta, &inst.gamma)?;
        let mut rng = SplitMix64::new(trial_seed(seed, t)).fork(1);
        let m = 4 + (t % 2) as usize;
        let corner = corner_minor_check(&random_integer_matrix(&mut rng, m, m, -9, 9))?;
        Ok((t, inst, out, corner))
    })?;
    let good = outcomes.iter().filter(|o| o.2.holds).count();
    r.push(count_detail("bordered-minor identity instances", good, outcomes.len()));
    let corners = outcomes.iter().filter(|o| o.3.holds).count();
    r.push(count_detail("corner-minor identity instances", corners, outcomes.len()));
    for (t, inst, out, _) in outcomes.iter().filter(|o| !o.2.holds) {
        r.push(
            Detail::expect(
                format!("trial {t}"),
                false,
                format_rational(&out.rhs),
                format_rational(&out.lhs),
            )
            .with_witness(format!("alpha {} delta {} gamma {}", inst.alpha, inst.delta, inst.gamma)),
        );
    }
    Ok(r)
}

fn lindstrom(mut r: Report, seed: u64, trials: u64) -> Result<Report> {
    let params = random_tp_params(4, seed, MAGNITUDE);
    let a = assemble(&params)?;
    let net = PlanarNetwork::from_params(&params)?;
    let mut pairs = Vec::new();
    for k in 1..=4 {
        for rows in k_subsets(4, k) {
            for cols in k_subsets(4, k) {
                pairs.push((IndexSet::new(rows.clone(), 4)?, IndexSet::new(cols, 4)?));
            }
        }
    }
    let agree = pairs
        .par_iter()
        .map(|(rs, cs)| Ok(lindstrom_minor(&net, rs, cs)? == minor(&a, rs, cs)?))
        .collect::<Result<Vec<bool>>>()?;
    r.push(count_detail("order 4: all minors equal path sums", agree.iter().filter(|x| **x).count(), agree.len()));
    let outcomes = trials_par(trials, |t| {
        let mut rng = SplitMix64::new(trial_seed(seed, t));
        let p = random_tp_params(5, rng.next_u64(), MAGNITUDE);
        let size = rng.range_usize(1, 3);
        let rs = IndexSet::new(rng.subset(5, size), 5)?;
        let cs = IndexSet::new(rng.subset(5, size), 5)?;
        let lhs: Rational = lindstrom_minor(&PlanarNetwork::from_params(&p)?, &rs, &cs)?;
        let rhs = minor(&assemble(&p)?, &rs, &cs)?;
        Ok((t, rs, cs, lhs, rhs))
    })?;
    let good = outcomes.iter().filter(|o| o.3 == o.4).count();
    r.push(count_detail("order 5: sampled minors equal path sums", good, outcomes.len()));
    for (t, rs, cs, lhs, rhs) in outcomes.iter().filter(|o| o.3 != o.4) {
        r.push(
            Detail::expect(format!("trial {t}"), false, format_rational(rhs), format_rational(lhs))
                .with_witness(format!("rows {rs} cols {cs}")),
        );
    }
    Ok(r)
}
