//! Checkers that evaluate the vanishing statements for products of two,
//! three and four one-row-headed Schur functions and package the evidence
//! as [`ClaimReport`]s.
//!
//! Every check is pointwise: the value at `n` uses `f_n, f_{n−m}, …`. A
//! vanishing claim with bound `N` passes when every admissible
//! `N < n ≤ n_max` gives the zero expansion and, when minimality is part of
//! the claim, removing any single operator leaves a nonzero value at each of
//! the first `W` admissible indices past `N`. Non-vanishing "for all n"
//! cannot be decided by finite computation; the window is the checkable
//! surrogate. Indices below `floor + Σ m_i` would need `f` at negative
//! arguments and are never evaluated.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::SchurExpansion;
use crate::sequence::{
    apply_pointwise, compose, detect_stabilization, eval_composed, onset_of, DiffOp, PointRecord, SequenceFamily,
};

/// Default width of the minimality window.
pub const DEFAULT_WINDOW: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    /// Used for the open fourfold statement: everything computed agrees
    /// with it, which is evidence and not a proof.
    SupportingEvidence,
    CounterexampleCandidate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
            Verdict::SupportingEvidence => "supporting-evidence",
            Verdict::CounterexampleCandidate => "counterexample-candidate",
        }
    }

    /// Whether a run with this verdict counts as successful.
    pub fn is_success(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::SupportingEvidence)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The composite with one operator removed, evaluated over the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityRecord {
    pub removed_op: DiffOp,
    pub window_nonzero: bool,
    pub window: Vec<PointRecord>,
}

/// The evidence behind one verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub params: Value,
    /// The threshold the verdict is judged against.
    pub paper_bound: Option<i64>,
    /// Every bound formula evaluated for this instance, by name.
    pub bounds: BTreeMap<String, i64>,
    pub per_n: Vec<PointRecord>,
    pub onset: Option<i64>,
    pub minimality: Vec<MinimalityRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
    pub verdict: Verdict,
}

impl ClaimReport {
    fn new(claim_id: &str, params: Value) -> Self {
        ClaimReport {
            claim_id: claim_id.to_string(),
            params,
            paper_bound: None,
            bounds: BTreeMap::new(),
            per_n: Vec::new(),
            onset: None,
            minimality: Vec::new(),
            details: None,
            diagnostics: Vec::new(),
            verdict: Verdict::Inconclusive,
        }
    }

    /// A report for a check that could not be carried out.
    pub fn from_error(claim_id: &str, params: Value, err: &Error) -> Self {
        let mut r = Self::new(claim_id, params);
        r.verdict = Verdict::Fail;
        r.diagnostics.push(err.to_string());
        r
    }
}

/// Knobs shared by the vanishing checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub n_max: u32,
    pub window: u32,
}

impl CheckOptions {
    pub fn new(n_max: u32) -> Self {
        CheckOptions {
            n_max,
            window: DEFAULT_WINDOW,
        }
    }
}

fn op(step: u32, parts: &[u32]) -> DiffOp {
    DiffOp::new(Partition::new(parts.to_vec()).expect("valid partition"), step).expect("valid operator")
}

/// `{Δ^{(2)}, Δ^{(1,1)}}`.
pub fn pair_operators() -> Vec<DiffOp> {
    vec![op(1, &[2]), op(1, &[1, 1])]
}

/// `{Δ_2^{(3,3)}, Δ^{(3)}, Δ^{(2,1)}, Δ^{(1,1,1)}}`.
pub fn triple_operators() -> Vec<DiffOp> {
    vec![op(2, &[3, 3]), op(1, &[3]), op(1, &[2, 1]), op(1, &[1, 1, 1])]
}

/// The nine operators of the fourfold statement, repeats included.
pub fn fourfold_operators() -> Vec<DiffOp> {
    vec![
        op(3, &[4, 4, 4]),
        op(2, &[3, 3, 2]),
        op(1, &[4]),
        op(1, &[3, 1]),
        op(1, &[2, 2]),
        op(1, &[2, 2]),
        op(1, &[2, 1, 1]),
        op(1, &[2, 1, 1]),
        op(1, &[1, 1, 1, 1]),
    ]
}

fn ensure_decreasing(alpha: &[u32]) -> Result<()> {
    if alpha.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::UnsortedAlpha(alpha.to_vec()));
    }
    Ok(())
}

fn point(n: u32, v: &SchurExpansion) -> PointRecord {
    PointRecord {
        n,
        zero: v.is_zero(),
        term_count: v.len(),
    }
}

/// Evaluates `ops` on `seq` at every admissible `n ≤ n_max`.
fn scan(ops: &[DiffOp], seq: &SequenceFamily, n_max: u32) -> Result<(Vec<PointRecord>, u32)> {
    let family = compose(ops, seq)?;
    let first = family.floor();
    let per_n = (first..=n_max)
        .map(|n| Ok(point(n, &*family.at(n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok((per_n, first))
}

fn minimality(ops: &[DiffOp], seq: &SequenceFamily, start: u32, window: u32) -> Result<Vec<MinimalityRecord>> {
    // prefixes[i] = Δ_1 ⋯ Δ_i f, shared by every removal after position i.
    let mut prefixes = vec![seq.clone()];
    for op in ops {
        let next = apply_pointwise(op, prefixes.last().expect("non-empty"))?;
        prefixes.push(next);
    }
    let mut out: Vec<MinimalityRecord> = Vec::with_capacity(ops.len());
    for i in 0..ops.len() {
        if let Some(prev) = out.iter().find(|r| r.removed_op == ops[i]) {
            out.push(prev.clone());
            continue;
        }
        let mut family = prefixes[i].clone();
        for op in &ops[i + 1..] {
            family = apply_pointwise(op, &family)?;
        }
        let lo = start.max(family.floor());
        let hi = lo + window.saturating_sub(1);
        let records = (lo..=hi)
            .map(|n| Ok(point(n, &*family.at(n)?)))
            .collect::<Result<Vec<_>>>()?;
        out.push(MinimalityRecord {
            removed_op: ops[i].clone(),
            window_nonzero: !records.is_empty() && records.iter().all(|r| !r.zero),
            window: records,
        });
    }
    Ok(out)
}

/// Shared protocol for a vanishing claim with a known threshold.
fn judge_vanishing(
    report: &mut ClaimReport,
    ops: &[DiffOp],
    seq: &SequenceFamily,
    threshold: i64,
    opts: CheckOptions,
    with_minimality: bool,
) -> Result<()> {
    report.paper_bound = Some(threshold);
    let (per_n, first) = scan(ops, seq, opts.n_max)?;
    report.onset = onset_of(&per_n, first);
    report.per_n = per_n;
    let start = (threshold + 1).max(0) as u32;
    if with_minimality {
        report.minimality = minimality(ops, seq, start, opts.window)?;
    }

    let beyond: Vec<&PointRecord> = report.per_n.iter().filter(|r| r.n as i64 > threshold).collect();
    let vanishes = beyond.iter().all(|r| r.zero);
    let minimal = report.minimality.iter().all(|m| m.window_nonzero);
    report.verdict = if !vanishes {
        let first_bad = beyond.iter().find(|r| !r.zero).map(|r| r.n);
        report.diagnostics.push(format!(
            "nonzero beyond the bound at n = {}",
            first_bad.unwrap_or_default()
        ));
        Verdict::Fail
    } else if !minimal {
        for m in report.minimality.iter().filter(|m| !m.window_nonzero) {
            report.diagnostics.push(format!(
                "with {} removed the value vanishes somewhere in the window",
                m.removed_op
            ));
        }
        Verdict::Fail
    } else if (opts.n_max as i64) < threshold + opts.window as i64 || beyond.is_empty() {
        report
            .diagnostics
            .push("n_max does not reach past the bound by a full window".to_string());
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    Ok(())
}

/// Bound for the pair statement: `|λ1| + |λ2| + 1 − α2`.
pub fn pair_bound(alpha: [u32; 2], lambdas: &[Partition; 2]) -> i64 {
    (lambdas[0].weight() + lambdas[1].weight()) as i64 + 1 - alpha[1] as i64
}

/// `Δ^{(2)}Δ^{(1,1)}(s_{(n+α1,λ1)} s_{(n+α2,λ2)}) = 0` beyond
/// [`pair_bound`], and neither operator alone suffices.
pub fn check_pair_theorem(alpha: [u32; 2], lambdas: [Partition; 2], opts: CheckOptions) -> Result<ClaimReport> {
    ensure_decreasing(&alpha)?;
    let params = json!({
        "alpha": alpha,
        "lambdas": lambdas,
        "n_max": opts.n_max,
        "window": opts.window,
    });
    let mut report = ClaimReport::new("pair", params);
    let bound = pair_bound(alpha, &lambdas);
    report.bounds.insert("pair".into(), bound);
    let seq = SequenceFamily::hooks(alpha.to_vec(), lambdas.to_vec())?;
    judge_vanishing(&mut report, &pair_operators(), &seq, bound, opts, true)?;
    Ok(report)
}

/// The two bounds for the triple statement: the general one
/// `max{4, α1 − α2 + l(λ1)} + 2(Σ|λ_i| + 1) − α3` and the one for plain
/// one-row products `max{4, α1 − α2 + 2}`.
pub fn triple_bounds(alpha: [u32; 3], lambdas: &[Partition; 3]) -> (i64, i64) {
    let a = alpha.map(i64::from);
    let total: i64 = lambdas.iter().map(|l| l.weight() as i64).sum();
    let general = 4.max(a[0] - a[1] + lambdas[0].length() as i64) + 2 * (total + 1) - a[2];
    let one_row = 4.max(a[0] - a[1] + 2);
    (general, one_row)
}

/// `Δ_2^{(3,3)}Δ^{(3)}Δ^{(2,1)}Δ^{(1,1,1)}` annihilates the triple hook
/// product beyond the larger of the two [`triple_bounds`].
pub fn check_triple_theorem(alpha: [u32; 3], lambdas: [Partition; 3], opts: CheckOptions) -> Result<ClaimReport> {
    ensure_decreasing(&alpha)?;
    let params = json!({
        "alpha": alpha,
        "lambdas": lambdas,
        "n_max": opts.n_max,
        "window": opts.window,
    });
    let mut report = ClaimReport::new("triple", params);
    let (general, one_row) = triple_bounds(alpha, &lambdas);
    report.bounds.insert("triple".into(), general);
    report.bounds.insert("triple-one-row".into(), one_row);
    let seq = SequenceFamily::hooks(alpha.to_vec(), lambdas.to_vec())?;
    judge_vanishing(&mut report, &triple_operators(), &seq, general.max(one_row), opts, true)?;
    Ok(report)
}

/// The closed form left after `Δ^{(3)}Δ^{(2,1)}Δ^{(1,1,1)}` acts on
/// `h_{n+α1} h_{n+α2} h_{n+α3}`, with `d = 3n + |α|`:
/// `s_{(d/2+1, d/2−1)} + s_{(d/2, d/2)}` for even `d`,
/// `s_{((d+1)/2, (d−1)/2)}` for odd `d`.
pub fn triple_residual_closed_form(alpha: [u32; 3], n: u32) -> SchurExpansion {
    let d = 3 * n + alpha.iter().sum::<u32>();
    let terms = if d.is_multiple_of(2) {
        let h = d / 2;
        vec![(vec![h + 1, h - 1], 1), (vec![h, h], 1)]
    } else {
        vec![(vec![d.div_ceil(2), (d - 1) / 2], 1)]
    };
    SchurExpansion::from_terms(
        d,
        terms
            .into_iter()
            .map(|(p, c)| (Partition::new(p).expect("decreasing"), c)),
    )
    .expect("degrees match")
}

fn residual_operators() -> Vec<DiffOp> {
    vec![op(1, &[3]), op(1, &[2, 1]), op(1, &[1, 1, 1])]
}

/// The three-operator value at `n` for the triple product (defined for
/// `n ≥ 3`).
pub fn triple_residual(alpha: [u32; 3], n: u32) -> Result<SchurExpansion> {
    ensure_decreasing(&alpha)?;
    let seq = SequenceFamily::homogeneous(alpha.to_vec());
    eval_composed(&residual_operators(), &seq, n)
}

/// Compares the three-operator value with its closed form at `n` and
/// checks that `Δ_2^{(3,3)}` annihilates it.
pub fn check_triple_residual(alpha: [u32; 3], n: u32) -> Result<ClaimReport> {
    ensure_decreasing(&alpha)?;
    if n < 5 {
        return Err(Error::BelowFloor { n: n as i64, min: 5 });
    }
    let mut report = ClaimReport::new("triple-residual", json!({ "alpha": alpha, "n": n }));
    let seq = SequenceFamily::homogeneous(alpha.to_vec());
    let observed = eval_composed(&residual_operators(), &seq, n)?;
    let expected = triple_residual_closed_form(alpha, n);
    let full = eval_composed(&triple_operators(), &seq, n)?;
    let matches = observed == expected;
    let annihilated = full.is_zero();
    report.per_n.push(point(n, &full));
    report.details = Some(json!({
        "observed": observed,
        "expected": expected,
        "matches_closed_form": matches,
        "annihilated": annihilated,
    }));
    if !matches {
        report
            .diagnostics
            .push(format!("residual {observed} differs from closed form {expected}"));
    }
    if !annihilated {
        report.diagnostics.push(format!("Δ_2^(3,3) leaves {full}"));
    }
    report.verdict = if matches && annihilated {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

/// `n + 1 − (n − 1 + min{1, α2}) − (n − 2) + (n − 2) = 2 − min{1, α2}`:
/// the count of `s_{(2n+|α|, n)}` obtained by counting lattice points of
/// the four shifted faces without the row-2 prefix-sum constraint.
pub fn expected_multiplicity(alpha: [u32; 3]) -> i64 {
    2 - alpha[1].min(1) as i64
}

/// The same count with the prefix-sum constraint `a21 + a22 ≤ a11 + a12`
/// on the second family of matrices, which caps `a21` at
/// `n − 2 + α1 + α2`: `max{2 − min{1, α2}, 3 − α1 − α2}`. The two agree
/// unless `α1 = α2 = 0`, where the true multiplicity is 3.
pub fn corrected_multiplicity(alpha: [u32; 3]) -> i64 {
    expected_multiplicity(alpha).max(3 - alpha[0] as i64 - alpha[1] as i64)
}

/// Multiplicity of `s_{(2n+|α|, n)}` in
/// `Δ_2^{(3,3)}Δ^{(3)}Δ^{(1,1,1)}(h_{n+α1} h_{n+α2} h_n)`, compared with
/// [`expected_multiplicity`]. The report also carries
/// [`corrected_multiplicity`]; the verdict follows the stated count.
pub fn check_multiplicity_count(alpha: [u32; 3], n: u32) -> Result<ClaimReport> {
    ensure_decreasing(&alpha)?;
    if alpha[2] != 0 {
        return Err(Error::InvalidParameter(format!(
            "the multiplicity count is for products with a plain s_(n) factor; got α3 = {}",
            alpha[2]
        )));
    }
    if n < 4 {
        return Err(Error::BelowFloor { n: n as i64, min: 4 });
    }
    let mut report = ClaimReport::new("multiplicity", json!({ "alpha": alpha, "n": n }));
    let seq = SequenceFamily::homogeneous(alpha.to_vec());
    let ops = [op(2, &[3, 3]), op(1, &[3]), op(1, &[1, 1, 1])];
    let value = eval_composed(&ops, &seq, n)?;
    let weight: u32 = alpha.iter().sum();
    let target = Partition::new(vec![2 * n + weight, n])?;
    let observed = value.multiplicity(&target);
    let expected = expected_multiplicity(alpha);
    let corrected = corrected_multiplicity(alpha);
    report.per_n.push(point(n, &value));
    report.details = Some(json!({
        "partition": target,
        "observed": observed,
        "expected": expected,
        "expected_with_prefix_constraint": corrected,
        "at_least_one": observed >= 1,
    }));
    if observed != expected {
        report.diagnostics.push(format!(
            "multiplicity {observed}, stated count {expected}, count with prefix constraint {corrected}"
        ));
    }
    if observed < 1 {
        report.diagnostics.push("multiplicity is not positive".into());
    }
    report.verdict = if observed == expected && observed >= 1 {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

/// A stabilizing input to the corollary check: `f_n ∈ Λ_{n+m}` is declared
/// to stabilize at `N`.
#[derive(Clone, Debug)]
pub struct StableInput {
    pub family: SequenceFamily,
    pub m: u32,
    pub declared: u32,
}

/// Corollary bounds. For two inputs: `max{N1, N2, m1+m2+N1+N2+max N − 2}`.
/// For three: the stated `max{N_i, 2(Σm + max m) + 3ΣN − 7}` and the value
/// `4m1 + 2m2 + 2m3 + 3ΣN − 7` produced by the derivation.
pub fn corollary_bounds(inputs: &[(u32, u32)]) -> Result<BTreeMap<String, i64>> {
    let m: Vec<i64> = inputs.iter().map(|x| x.0 as i64).collect();
    let big_n: Vec<i64> = inputs.iter().map(|x| x.1 as i64).collect();
    let max_n = big_n.iter().copied().max().unwrap_or(0);
    let sum_n: i64 = big_n.iter().sum();
    let sum_m: i64 = m.iter().sum();
    let max_m = m.iter().copied().max().unwrap_or(0);
    let mut out = BTreeMap::new();
    match inputs.len() {
        2 => {
            out.insert("corollary-pair".into(), max_n.max(sum_m + sum_n + max_n - 2));
        }
        3 => {
            out.insert(
                "corollary-triple".into(),
                max_n.max(2 * (sum_m + max_m) + 3 * sum_n - 7),
            );
            out.insert(
                "corollary-triple-derivation".into(),
                max_n.max(4 * m[0] + 2 * m[1] + 2 * m[2] + 3 * sum_n - 7),
            );
        }
        k => {
            return Err(Error::InvalidParameter(format!(
                "the corollary covers two or three inputs, got {k}"
            )))
        }
    }
    Ok(out)
}

/// Products of two or three stabilizing sequences are annihilated by the
/// pair / triple operators beyond the corollary bound.
pub fn check_corollary(inputs: &[StableInput], opts: CheckOptions) -> Result<ClaimReport> {
    let params = json!({
        "inputs": inputs
            .iter()
            .map(|i| json!({ "family": i.family.label(), "m": i.m, "declared_stable_at": i.declared }))
            .collect::<Vec<_>>(),
        "n_max": opts.n_max,
        "window": opts.window,
    });
    let claim = if inputs.len() == 3 {
        "corollary-triple"
    } else {
        "corollary-pair"
    };
    let mut report = ClaimReport::new(claim, params);
    report.bounds = corollary_bounds(&inputs.iter().map(|i| (i.m, i.declared)).collect::<Vec<_>>())?;

    let mut observed = Vec::with_capacity(inputs.len());
    for input in inputs {
        let f = &input.family;
        if f.slope() != 1 || f.offset() != input.m {
            return Err(Error::InvalidParameter(format!(
                "{} has offset {} and slope {}, expected offset {} and slope 1",
                f.label(),
                f.offset(),
                f.slope(),
                input.m
            )));
        }
        let n = detect_stabilization(f, opts.n_max)?;
        match n {
            Some(n) if n <= input.declared => observed.push(n),
            other => {
                return Err(Error::NotStabilizing {
                    declared: input.declared,
                    observed: other.map_or_else(|| format!("n_max = {}", opts.n_max), |n| n.to_string()),
                })
            }
        }
    }
    report.details = Some(json!({ "observed_stable_at": observed }));

    let ops = if inputs.len() == 3 {
        triple_operators()
    } else {
        pair_operators()
    };
    let threshold = report.bounds.values().copied().max().unwrap_or(0);
    let product = SequenceFamily::product(inputs.iter().map(|i| i.family.clone()).collect())?;
    judge_vanishing(&mut report, &ops, &product, threshold, opts, true)?;
    Ok(report)
}

/// Evidence for the fourfold statement: the nine operators applied to the
/// hook product (or `h_{n+α1} ⋯ h_{n+α4}` when `lambdas` is `None`).
///
/// The verdict is never `Pass`: with all values zero from some onset up to
/// `n_max` and every single removal nonzero on the window after that onset,
/// it is `SupportingEvidence`; otherwise `CounterexampleCandidate`.
pub fn explore_conjecture(alpha: [u32; 4], lambdas: Option<[Partition; 4]>, opts: CheckOptions) -> Result<ClaimReport> {
    ensure_decreasing(&alpha)?;
    let params = json!({
        "alpha": alpha,
        "lambdas": lambdas,
        "n_max": opts.n_max,
        "window": opts.window,
    });
    let mut report = ClaimReport::new("conjecture", params);
    let seq = match &lambdas {
        Some(l) => SequenceFamily::hooks(alpha.to_vec(), l.to_vec())?,
        None => SequenceFamily::homogeneous(alpha.to_vec()),
    };
    let ops = fourfold_operators();
    let (per_n, first) = scan(&ops, &seq, opts.n_max)?;
    report.onset = onset_of(&per_n, first);
    report.per_n = per_n;
    report.bounds.insert("first-admissible".into(), first as i64);
    let start = match report.onset {
        Some(onset) => (onset + 1).max(0) as u32,
        None => first,
    };
    report.minimality = minimality(&ops, &seq, start, opts.window)?;
    report.verdict = if report.onset.is_some() && report.minimality.iter().all(|m| m.window_nonzero) {
        Verdict::SupportingEvidence
    } else {
        if report.onset.is_none() {
            report.diagnostics.push(format!("nonzero at n_max = {}", opts.n_max));
        }
        for m in report.minimality.iter().filter(|m| !m.window_nonzero) {
            report.diagnostics.push(format!(
                "with {} removed the value vanishes in the window",
                m.removed_op
            ));
        }
        Verdict::CounterexampleCandidate
    };
    Ok(report)
}

/// Restricting to Schur indices of length at most `l` and keeping only
/// operators with `l(λ_i) ≤ l` preserves vanishing: returns, for each
/// `n` in `ns` where the full composite vanishes, whether the restricted
/// composite vanishes too.
pub fn length_split_check(
    ops: &[DiffOp],
    seq: &SequenceFamily,
    max_len: usize,
    ns: &[u32],
) -> Result<Vec<(u32, bool)>> {
    let kept: Vec<DiffOp> = ops.iter().filter(|o| o.shift().length() <= max_len).cloned().collect();
    let restricted = seq.restrict_length(max_len);
    let full = compose(ops, seq)?;
    let part = compose(&kept, &restricted)?;
    let mut out = Vec::new();
    for &n in ns {
        if n < full.floor() || !full.at(n)?.is_zero() {
            continue;
        }
        out.push((n, part.at(n)?.is_zero()));
    }
    Ok(out)
}

/// Compares the hook family evaluated by Jacobi–Trudi + Pieri with the one
/// assembled through the bordered-product centre sums, value by value and
/// in its vanishing pattern under `ops`, for `n` in `ns`.
pub fn reduction_consistency(alpha: &[u32], lambdas: &[Partition], ops: &[DiffOp], ns: &[u32]) -> Result<bool> {
    let direct = SequenceFamily::hooks(alpha.to_vec(), lambdas.to_vec())?;
    let via = SequenceFamily::hooks_via_borders(alpha.to_vec(), lambdas.to_vec())?;
    let a = compose(ops, &direct)?;
    let b = compose(ops, &via)?;
    for &n in ns {
        if n < direct.floor() || direct.at(n)? != via.at(n)? {
            return Ok(false);
        }
        if n >= a.floor() && a.at(n)?.is_zero() != b.at(n)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
