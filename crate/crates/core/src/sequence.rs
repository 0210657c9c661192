//! Sequences `{f_n}` with `f_n ∈ Λ_{nk + n0}` and the difference operators
//! `Δ^λ_m f_n = f_n − (f_{n−m} + λ)`.
//!
//! Values are computed lazily and memoized per family. Composite operators
//! are evaluated pointwise by expanding `Π (1 − T^{m_i} S_{λ_i})` into a
//! signed sum of (index step, shift) pairs, which touches each `f_{n−j}`
//! once instead of recursing through nested families.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::polytope;
use crate::schur::{checked_add, jacobi_trudi_hook_terms, Accumulator, SchurExpansion};

/// The operator `Δ^λ_m`. `m` divides `|λ|` and the operator acts on
/// sequences of slope `|λ| / m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiffOp {
    shift: Partition,
    step: u32,
}

impl DiffOp {
    pub fn new(shift: Partition, step: u32) -> Result<Self> {
        if step == 0 {
            return Err(Error::InvalidOperator("step m must be positive".into()));
        }
        if shift.is_empty() {
            return Err(Error::InvalidOperator("shift partition must be nonempty".into()));
        }
        if !shift.weight().is_multiple_of(step) {
            return Err(Error::InvalidOperator(format!(
                "step {step} does not divide |{shift}| = {}",
                shift.weight()
            )));
        }
        Ok(DiffOp { shift, step })
    }

    /// `Δ^λ = Δ^λ_1`.
    pub fn unit(shift: Partition) -> Result<Self> {
        Self::new(shift, 1)
    }

    pub fn shift(&self) -> &Partition {
        &self.shift
    }

    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn slope(&self) -> u32 {
        self.shift.weight() / self.step
    }

    /// Parses a whitespace-tolerant list `"m|λ ; m|λ"`.
    pub fn parse_list(s: &str) -> Result<Vec<DiffOp>> {
        s.split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect()
    }
}

/// `"m|λ"`, e.g. `"2|(3,3)"` or `"1|2,1"`.
impl FromStr for DiffOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (m, lambda) = s
            .split_once('|')
            .ok_or_else(|| Error::InvalidOperator(format!("expected m|λ, got {s:?}")))?;
        let step = m
            .trim()
            .parse()
            .map_err(|_| Error::InvalidOperator(format!("bad step in {s:?}")))?;
        Self::new(lambda.parse()?, step)
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|({})", self.step, self.shift)
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ_{}^({})", self.step, self.shift)
    }
}

impl Serialize for DiffOp {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

type Evaluator = dyn Fn(u32) -> Result<SchurExpansion> + Send + Sync;

struct Inner {
    offset: u32,
    slope: u32,
    floor: u32,
    label: String,
    eval: Box<Evaluator>,
    cache: Mutex<HashMap<u32, Arc<SchurExpansion>>>,
}

/// A lazily evaluated sequence `n ↦ f_n ∈ Λ_{n·slope + offset}`, defined for
/// `n ≥ floor`. Cloning shares the memo.
#[derive(Clone)]
pub struct SequenceFamily {
    inner: Arc<Inner>,
}

impl fmt::Debug for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (offset {}, slope {}, n ≥ {})",
            self.inner.label, self.inner.offset, self.inner.slope, self.inner.floor
        )
    }
}

impl SequenceFamily {
    pub fn from_fn<F>(label: impl Into<String>, offset: u32, slope: u32, floor: u32, eval: F) -> Self
    where
        F: Fn(u32) -> Result<SchurExpansion> + Send + Sync + 'static,
    {
        SequenceFamily {
            inner: Arc::new(Inner {
                offset,
                slope,
                floor,
                label: label.into(),
                eval: Box::new(eval),
                cache: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn offset(&self) -> u32 {
        self.inner.offset
    }

    pub fn slope(&self) -> u32 {
        self.inner.slope
    }

    pub fn floor(&self) -> u32 {
        self.inner.floor
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn degree_at(&self, n: u32) -> u32 {
        n * self.inner.slope + self.inner.offset
    }

    /// `f_n`, memoized.
    pub fn at(&self, n: u32) -> Result<Arc<SchurExpansion>> {
        if n < self.inner.floor {
            return Err(Error::BelowFloor {
                n: n as i64,
                min: self.inner.floor,
            });
        }
        if let Some(v) = self.inner.cache.lock().expect("cache poisoned").get(&n) {
            return Ok(Arc::clone(v));
        }
        let value = (self.inner.eval)(n)?;
        if value.degree() != self.degree_at(n) {
            return Err(Error::DegreeMismatch {
                left: self.degree_at(n),
                right: value.degree(),
            });
        }
        let value = Arc::new(value);
        self.inner
            .cache
            .lock()
            .expect("cache poisoned")
            .insert(n, Arc::clone(&value));
        Ok(value)
    }

    /// Drops memoized values, e.g. after a long scan.
    pub fn clear_cache(&self) {
        self.inner.cache.lock().expect("cache poisoned").clear();
    }

    pub fn zero(offset: u32, slope: u32) -> Self {
        Self::from_fn("0", offset, slope, 0, move |n| {
            Ok(SchurExpansion::zero(n * slope + offset))
        })
    }

    /// `h_{n+α_1} ⋯ h_{n+α_k}` by iterated Pieri.
    pub fn homogeneous(alpha: Vec<u32>) -> Self {
        let label = format!("hom:alpha={}", join(&alpha));
        let offset = alpha.iter().sum();
        let slope = alpha.len() as u32;
        let mut sorted = alpha;
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_fn(label, offset, slope, 0, move |n| {
            let rows: Vec<u32> = sorted.iter().map(|a| n + a).collect();
            SchurExpansion::one().multiply_by_homogeneous(&rows)
        })
    }

    /// The same product read off the integer points of `P_{k,n,α}`.
    pub fn homogeneous_by_lattice_points(alpha: Vec<u32>) -> Result<Self> {
        let mut sorted = alpha.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        polytope::count_points(0, &sorted)?;
        let label = format!("hom-lattice:alpha={}", join(&alpha));
        let offset = alpha.iter().sum();
        Ok(Self::from_fn(label, offset, alpha.len() as u32, 0, move |n| {
            polytope::homogeneous_product(n, &sorted)
        }))
    }

    /// `Π_q s_{(n+α_q, λ_q)}`, defined once every `n + α_q ≥ (λ_q)_1`.
    pub fn hooks(alpha: Vec<u32>, lambdas: Vec<Partition>) -> Result<Self> {
        if alpha.len() != lambdas.len() || alpha.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "need one partition per alpha entry, got {} and {}",
                alpha.len(),
                lambdas.len()
            )));
        }
        let floor = hook_floor(&alpha, &lambdas);
        let offset = alpha.iter().sum::<u32>() + lambdas.iter().map(Partition::weight).sum::<u32>();
        let label = format!(
            "hook:alpha={};lambdas={}",
            join(&alpha),
            lambdas.iter().map(ToString::to_string).collect::<Vec<_>>().join("|")
        );
        let combos = hook_combinations(&lambdas)?;
        let slope = alpha.len() as u32;
        Ok(Self::from_fn(label, offset, slope, floor, move |n| {
            hook_product(n, &alpha, &combos, n * slope + offset)
        }))
    }

    /// The hook product assembled through the bordered-product centre sum:
    /// each factor is expanded by Jacobi–Trudi, and every resulting
    /// `h ⋯ h · s_β` is computed by [`polytope::product_with_border`].
    pub fn hooks_via_borders(alpha: Vec<u32>, lambdas: Vec<Partition>) -> Result<Self> {
        let plain = Self::hooks(alpha.clone(), lambdas.clone())?;
        let combos = hook_combinations(&lambdas)?;
        let (offset, slope, floor) = (plain.offset(), plain.slope(), plain.floor());
        let label = plain.label().replacen("hook:", "hook-border:", 1);
        Ok(Self::from_fn(label, offset, slope, floor, move |n| {
            let mut acc = Accumulator::default();
            for combo in &combos {
                let mut shifted: Vec<u32> = alpha.iter().zip(&combo.offsets).map(|(a, i)| a + i).collect();
                shifted.sort_unstable_by(|a, b| b.cmp(a));
                for (beta, c) in combo.minor_product.terms() {
                    let piece = polytope::product_with_border(n, &shifted, beta)?;
                    acc.add_expansion(&piece, c * combo.sign)?;
                }
            }
            Ok(acc.finish(n * slope + offset))
        }))
    }

    /// `h_{n+α_1} ⋯ h_{n+α_k} · s_β`.
    pub fn bordered(alpha: Vec<u32>, beta: Partition) -> Self {
        let label = format!("border:alpha={};beta={beta}", join(&alpha));
        let offset = alpha.iter().sum::<u32>() + beta.weight();
        let slope = alpha.len() as u32;
        let mut sorted = alpha;
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let base = SchurExpansion::basis(beta);
        Self::from_fn(label, offset, slope, 0, move |n| {
            let rows: Vec<u32> = sorted.iter().map(|a| n + a).collect();
            base.multiply_by_homogeneous(&rows)
        })
    }

    /// A slope-1 family `Σ_j c_j s_{(n + a_j, λ_j)}` where every term has
    /// the same degree offset `a_j + |λ_j|`. Offsets may be negative.
    pub fn stable(terms: Vec<StableTerm>) -> Result<Self> {
        let Some(first) = terms.first() else {
            return Err(Error::InvalidParameter(
                "a stable family needs at least one term".into(),
            ));
        };
        let m = first.row_offset + first.tail.weight() as i64;
        if m < 0 || terms.iter().any(|t| t.row_offset + t.tail.weight() as i64 != m) {
            return Err(Error::InvalidParameter(
                "all terms of a stable family must share a nonnegative degree offset".into(),
            ));
        }
        let floor = terms
            .iter()
            .map(|t| (t.tail.first() as i64 - t.row_offset).max(-t.row_offset).max(0))
            .max()
            .unwrap_or(0) as u32;
        let label = terms.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + ");
        let m = m as u32;
        Ok(Self::from_fn(label, m, 1, floor, move |n| {
            let mut acc = Accumulator::default();
            for t in &terms {
                let row = (n as i64 + t.row_offset) as u32;
                acc.add(t.tail.prepend_row(row)?, t.coefficient)?;
            }
            Ok(acc.finish(n + m))
        }))
    }

    /// Pointwise product `n ↦ Π f^{(i)}_n`.
    pub fn product(factors: Vec<SequenceFamily>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("empty product".into()));
        }
        let offset = factors.iter().map(Self::offset).sum();
        let slope = factors.iter().map(Self::slope).sum();
        let floor = factors.iter().map(Self::floor).max().unwrap_or(0);
        let label = factors
            .iter()
            .map(|f| format!("[{}]", f.label()))
            .collect::<Vec<_>>()
            .join(" * ");
        Ok(Self::from_fn(label, offset, slope, floor, move |n| {
            let mut value = (*factors[0].at(n)?).clone();
            for f in &factors[1..] {
                value = value.schur_multiply(&*f.at(n)?)?;
            }
            Ok(value)
        }))
    }

    /// `Σ c_i f^{(i)}` over families sharing offset and slope.
    pub fn linear_combination(parts: Vec<(i64, SequenceFamily)>) -> Result<Self> {
        let Some((_, first)) = parts.first() else {
            return Err(Error::InvalidParameter("empty linear combination".into()));
        };
        let (offset, slope) = (first.offset(), first.slope());
        if parts.iter().any(|(_, f)| f.offset() != offset || f.slope() != slope) {
            return Err(Error::InvalidParameter(
                "linear combination of families with different grading".into(),
            ));
        }
        let floor = parts.iter().map(|(_, f)| f.floor()).max().unwrap_or(0);
        let label = parts
            .iter()
            .map(|(c, f)| format!("{c}·[{}]", f.label()))
            .collect::<Vec<_>>()
            .join(" + ");
        Ok(Self::from_fn(label, offset, slope, floor, move |n| {
            let mut acc = SchurExpansion::zero(n * slope + offset);
            for (c, f) in &parts {
                acc = acc.combine(&*f.at(n)?, *c)?;
            }
            Ok(acc)
        }))
    }

    /// `n ↦ (f_n)_{≤ l}`.
    pub fn restrict_length(&self, max_len: usize) -> Self {
        let base = self.clone();
        Self::from_fn(
            format!("({})<={max_len}", self.label()),
            self.offset(),
            self.slope(),
            self.floor(),
            move |n| Ok(base.at(n)?.restrict_length(max_len).0),
        )
    }
}

/// One term `c · s_{(n + a, λ)}` of a stable family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableTerm {
    pub coefficient: i64,
    pub row_offset: i64,
    pub tail: Partition,
}

impl fmt::Display for StableTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*s(n{:+},{})", self.coefficient, self.row_offset, self.tail)
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn hook_floor(alpha: &[u32], lambdas: &[Partition]) -> u32 {
    alpha
        .iter()
        .zip(lambdas)
        .map(|(&a, l)| l.first().saturating_sub(a))
        .max()
        .unwrap_or(0)
}

/// One choice of Jacobi–Trudi column per hook factor.
struct HookCombination {
    sign: i64,
    offsets: Vec<u32>,
    minor_product: SchurExpansion,
}

fn hook_combinations(lambdas: &[Partition]) -> Result<Vec<HookCombination>> {
    let mut combos = vec![HookCombination {
        sign: 1,
        offsets: Vec::new(),
        minor_product: SchurExpansion::one(),
    }];
    for lambda in lambdas {
        let terms = jacobi_trudi_hook_terms(lambda)?;
        let mut next = Vec::with_capacity(combos.len() * terms.len());
        for c in &combos {
            for t in &terms {
                let mut offsets = c.offsets.clone();
                offsets.push(t.offset);
                next.push(HookCombination {
                    sign: c.sign * t.sign,
                    offsets,
                    minor_product: c.minor_product.schur_multiply(&t.minor)?,
                });
            }
        }
        combos = next;
    }
    combos.retain(|c| !c.minor_product.is_zero());
    Ok(combos)
}

/// `Π_q s_{(n+α_q, λ_q)} = Σ_combos ± (Π_q h_{n+α_q+i_q}) · (Π_q minor_q)`.
/// The small minor products are grouped per tuple of rows. The long
/// one-row factors are then applied one factor at a time, merging groups
/// that agree on the factors still to come, so the largest Pieri steps run
/// once per distinct last row rather than once per combination.
fn hook_product(n: u32, alpha: &[u32], combos: &[HookCombination], degree: u32) -> Result<SchurExpansion> {
    let mut level: BTreeMap<Vec<u32>, SchurExpansion> = BTreeMap::new();
    for c in combos {
        let rows: Vec<u32> = alpha.iter().zip(&c.offsets).map(|(a, i)| n + a + i).collect();
        merge_into(&mut level, rows, &c.minor_product, c.sign)?;
    }
    for _ in 0..alpha.len() {
        let mut next: BTreeMap<Vec<u32>, SchurExpansion> = BTreeMap::new();
        for (rows, small) in level {
            if small.is_zero() {
                continue;
            }
            let grown = small.pieri_multiply(rows[0])?;
            merge_into(&mut next, rows[1..].to_vec(), &grown, 1)?;
        }
        level = next;
    }
    Ok(level
        .remove(&Vec::new())
        .unwrap_or_else(|| SchurExpansion::zero(degree)))
}

fn merge_into(
    map: &mut BTreeMap<Vec<u32>, SchurExpansion>,
    key: Vec<u32>,
    value: &SchurExpansion,
    scale: i64,
) -> Result<()> {
    match map.get_mut(&key) {
        Some(existing) => *existing = existing.combine(value, scale)?,
        None => {
            map.insert(key, value.scale(scale)?);
        }
    }
    Ok(())
}

fn check_slope(op: &DiffOp, seq: &SequenceFamily) -> Result<()> {
    if op.slope() != seq.slope() {
        return Err(Error::SlopeMismatch {
            op: op.slope(),
            seq: seq.slope(),
        });
    }
    Ok(())
}

/// `Δ^λ_m f_n = f_n − (f_{n−m} + λ)`.
pub fn eval_pointwise(op: &DiffOp, seq: &SequenceFamily, n: u32) -> Result<SchurExpansion> {
    check_slope(op, seq)?;
    let min = seq.floor() + op.step();
    if n < min {
        return Err(Error::BelowFloor { n: n as i64, min });
    }
    let current = seq.at(n)?;
    let earlier = seq.at(n - op.step())?;
    current.sub(&earlier.shift(op.shift()))
}

/// The re-indexed image `{Δ^λ_m f_{n+m}}_n`. Its `n`-th value lies in
/// `Λ_{(n+m)k + n0}`, so the offset grows by `m·k`.
pub fn apply(op: &DiffOp, seq: &SequenceFamily) -> Result<SequenceFamily> {
    check_slope(op, seq)?;
    let (op2, base) = (op.clone(), seq.clone());
    Ok(SequenceFamily::from_fn(
        format!("{op:?}[{}]", seq.label()),
        seq.offset() + op.step() * seq.slope(),
        seq.slope(),
        seq.floor(),
        move |n| eval_pointwise(&op2, &base, n + op2.step()),
    ))
}

/// `n ↦ Δ^λ_m f_n`, defined for `n ≥ floor + m`.
pub fn apply_pointwise(op: &DiffOp, seq: &SequenceFamily) -> Result<SequenceFamily> {
    check_slope(op, seq)?;
    let (op2, base) = (op.clone(), seq.clone());
    Ok(SequenceFamily::from_fn(
        format!("{op:?}[{}]", seq.label()),
        seq.offset(),
        seq.slope(),
        seq.floor() + op.step(),
        move |n| eval_pointwise(&op2, &base, n),
    ))
}

/// `Π_i (1 − T^{m_i} S_{λ_i})` as a signed sum over (total step, total shift).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorExpansion {
    terms: Vec<(u32, Partition, i64)>,
}

impl OperatorExpansion {
    pub fn new(ops: &[DiffOp]) -> Result<Self> {
        let mut terms: HashMap<(u32, Partition), i64> = HashMap::from([((0, Partition::empty()), 1)]);
        for op in ops {
            let mut next = terms.clone();
            for ((step, shift), c) in &terms {
                let key = (step + op.step(), shift.componentwise_sum(op.shift()));
                let slot = next.entry(key).or_insert(0);
                *slot = checked_add(*slot, -c)?;
            }
            next.retain(|_, c| *c != 0);
            terms = next;
        }
        let mut terms: Vec<_> = terms.into_iter().map(|((s, p), c)| (s, p, c)).collect();
        terms.sort();
        Ok(OperatorExpansion { terms })
    }

    pub fn terms(&self) -> &[(u32, Partition, i64)] {
        &self.terms
    }

    /// The largest index step, i.e. `Σ m_i`.
    pub fn reach(&self) -> u32 {
        self.terms.iter().map(|t| t.0).max().unwrap_or(0)
    }
}

fn check_ops(ops: &[DiffOp], seq: &SequenceFamily) -> Result<u32> {
    for op in ops {
        check_slope(op, seq)?;
    }
    Ok(ops.iter().map(DiffOp::step).sum())
}

/// First index at which the composite of `ops` can be evaluated.
pub fn first_valid_index(ops: &[DiffOp], seq: &SequenceFamily) -> u32 {
    seq.floor() + ops.iter().map(DiffOp::step).sum::<u32>()
}

/// Pointwise value of the composite operator at `n`.
pub fn eval_composed(ops: &[DiffOp], seq: &SequenceFamily, n: u32) -> Result<SchurExpansion> {
    let reach = check_ops(ops, seq)?;
    let min = seq.floor() + reach;
    if n < min {
        return Err(Error::BelowFloor { n: n as i64, min });
    }
    let expansion = OperatorExpansion::new(ops)?;
    eval_expansion(&expansion, seq, n)
}

fn eval_expansion(expansion: &OperatorExpansion, seq: &SequenceFamily, n: u32) -> Result<SchurExpansion> {
    let mut acc = Accumulator::default();
    for (step, shift, c) in expansion.terms() {
        let value = seq.at(n - step)?;
        for (p, coeff) in value.terms() {
            acc.add(p.componentwise_sum(shift), crate::schur::checked_mul(coeff, *c)?)?;
        }
    }
    Ok(acc.finish(seq.degree_at(n)))
}

/// The pointwise composite family `n ↦ (Π_i Δ_i) f_n`. The order of `ops`
/// does not matter.
///
/// The operators are applied one at a time through cached intermediate
/// families, so each value costs `2·|ops|` passes over an expansion rather
/// than the `2^|ops|` terms of [`OperatorExpansion`] used by
/// [`eval_composed`].
pub fn compose(ops: &[DiffOp], seq: &SequenceFamily) -> Result<SequenceFamily> {
    check_ops(ops, seq)?;
    if ops.is_empty() {
        return Ok(seq.clone());
    }
    let label = format!(
        "{}[{}]",
        ops.iter().map(|o| format!("{o:?}")).collect::<String>(),
        seq.label()
    );
    let mut current = seq.clone();
    for op in ops {
        current = apply_pointwise(op, &current)?;
    }
    let (offset, slope, floor) = (current.offset(), current.slope(), current.floor());
    Ok(SequenceFamily::from_fn(label, offset, slope, floor, move |n| {
        current.at(n).map(|v| (*v).clone())
    }))
}

/// Whether the composite vanishes at a given index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointRecord {
    pub n: u32,
    pub zero: bool,
    pub term_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub per_n: Vec<PointRecord>,
    /// Smallest `N` with the composite zero at every evaluated `n > N`;
    /// absent when the last evaluated value is nonzero.
    pub onset: Option<i64>,
}

/// Evaluates the composite at every admissible `n ≤ n_max`.
pub fn vanishing_onset(ops: &[DiffOp], seq: &SequenceFamily, n_max: u32) -> Result<VanishingReport> {
    let family = compose(ops, seq)?;
    let first = family.floor();
    if n_max < first {
        return Err(Error::BelowFloor {
            n: n_max as i64,
            min: first,
        });
    }
    let per_n = (first..=n_max)
        .map(|n| {
            let v = family.at(n)?;
            Ok(PointRecord {
                n,
                zero: v.is_zero(),
                term_count: v.len(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VanishingReport {
        onset: onset_of(&per_n, first),
        per_n,
    })
}

pub(crate) fn onset_of(per_n: &[PointRecord], first: u32) -> Option<i64> {
    if !per_n.last()?.zero {
        return None;
    }
    let last_nonzero = per_n.iter().rev().find(|r| !r.zero).map(|r| r.n as i64);
    Some(last_nonzero.unwrap_or(first as i64 - 1))
}

/// Smallest `N` such that `Δ^{(1)} f_n = 0` for every admissible
/// `N < n ≤ n_max`; `None` if `f` is still moving at `n_max`.
pub fn detect_stabilization(seq: &SequenceFamily, n_max: u32) -> Result<Option<u32>> {
    if seq.slope() != 1 {
        return Err(Error::SlopeMismatch {
            op: 1,
            seq: seq.slope(),
        });
    }
    let op = DiffOp::unit(Partition::row(1))?;
    let report = vanishing_onset(&[op], seq, n_max)?;
    Ok(report.onset.map(|n| n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn op(m: u32, p: Partition) -> DiffOp {
        DiffOp::new(p, m).unwrap()
    }

    #[test]
    fn parse_ops() {
        let ops = DiffOp::parse_list("2|(3,3) ; 1|(1,1,1)").unwrap();
        assert_eq!(ops, vec![op(2, partition![3, 3]), op(1, partition![1, 1, 1])]);
        assert_eq!(ops[0].slope(), 3);
        assert!("2|(3)".parse::<DiffOp>().is_err());
        assert!("0|(3)".parse::<DiffOp>().is_err());
        assert!("1|-".parse::<DiffOp>().is_err());
        assert!("(3)".parse::<DiffOp>().is_err());
        assert_eq!(op(2, partition![3, 3]).to_string(), "2|(3,3)");
    }

    #[test]
    fn single_operator_on_pair_product() {
        // (s3 s2) − ((s2 s1) + (1,1)) = s5
        let seq = SequenceFamily::homogeneous(vec![1, 0]);
        let v = eval_pointwise(&op(1, partition![1, 1]), &seq, 2).unwrap();
        assert_eq!(v, SchurExpansion::basis(partition![5]));
    }

    #[test]
    fn pair_operators_vanish_at_three() {
        let seq = SequenceFamily::homogeneous(vec![1, 0]);
        let ops = [op(1, partition![2]), op(1, partition![1, 1])];
        assert!(eval_composed(&ops, &seq, 3).unwrap().is_zero());
    }

    #[test]
    fn unit_shift_kills_single_rows() {
        let seq = SequenceFamily::homogeneous(vec![0]);
        for n in 1..6 {
            assert!(eval_pointwise(&op(1, partition![1]), &seq, n).unwrap().is_zero());
        }
    }

    #[test]
    fn errors() {
        let seq = SequenceFamily::homogeneous(vec![1, 0]);
        assert_eq!(
            eval_pointwise(&op(1, partition![1]), &seq, 3),
            Err(Error::SlopeMismatch { op: 1, seq: 2 })
        );
        assert_eq!(
            eval_pointwise(&op(2, partition![3, 1]), &seq, 1),
            Err(Error::BelowFloor { n: 1, min: 2 })
        );
        assert!(compose(&[op(1, partition![1])], &seq).is_err());
    }

    #[test]
    fn apply_reindexes() {
        let seq = SequenceFamily::homogeneous(vec![0]);
        let d = apply(&op(1, partition![1]), &seq).unwrap();
        assert_eq!(d.offset(), 1);
        for n in 0..5 {
            assert!(d.at(n).unwrap().is_zero());
            assert_eq!(d.at(n).unwrap().degree(), n + 1);
        }
        let pair = SequenceFamily::homogeneous(vec![1, 0]);
        let inner = apply(&op(1, partition![1, 1]), &pair).unwrap();
        let outer = apply(&op(1, partition![2]), &inner).unwrap();
        for n in 0..8 {
            let v = outer.at(n).unwrap();
            // outer_n = Δ^(2)Δ^(1,1) f_{n+2}
            assert_eq!(v.is_zero(), n + 2 >= 2, "n = {n}");
        }
    }

    #[test]
    fn compose_matches_operator_expansion() {
        let seq = SequenceFamily::homogeneous(vec![2, 0, 0]);
        let ops = [
            op(2, partition![3, 3]),
            op(1, partition![3]),
            op(1, partition![2, 1]),
            op(1, partition![1, 1, 1]),
        ];
        let chained = compose(&ops, &seq).unwrap();
        assert_eq!(chained.floor(), first_valid_index(&ops, &seq));
        for n in chained.floor()..chained.floor() + 6 {
            assert_eq!(*chained.at(n).unwrap(), eval_composed(&ops, &seq, n).unwrap());
        }
        assert!(compose(&[], &seq).unwrap().at(3).unwrap() == seq.at(3).unwrap());
    }

    #[test]
    fn operator_expansion_cancels_repeats() {
        // (1 − T S)(1 − T S) = 1 − 2TS + T²S²
        let e = OperatorExpansion::new(&[op(1, partition![1]), op(1, partition![1])]).unwrap();
        assert_eq!(
            e.terms(),
            &[
                (0, Partition::empty(), 1),
                (1, partition![1], -2),
                (2, partition![2], 1)
            ]
        );
        assert_eq!(e.reach(), 2);
    }

    #[test]
    fn onset_examples() {
        let pair = SequenceFamily::homogeneous(vec![1, 0]);
        let ops = [op(1, partition![2]), op(1, partition![1, 1])];
        let r = vanishing_onset(&ops, &pair, 12).unwrap();
        assert_eq!(r.onset, Some(1));
        assert_eq!(r.per_n.first().unwrap().n, 2);

        let r = vanishing_onset(&ops[1..], &pair, 12).unwrap();
        assert_eq!(r.onset, None);
        assert!(r.per_n.iter().all(|p| !p.zero));

        let single = SequenceFamily::homogeneous(vec![0]);
        let r = vanishing_onset(&[op(1, partition![1])], &single, 6).unwrap();
        assert_eq!(r.onset, Some(0));
        assert!(vanishing_onset(&ops, &pair, 1).is_err());
    }

    #[test]
    fn stabilization_examples() {
        let hook = SequenceFamily::stable(vec![StableTerm {
            coefficient: 1,
            row_offset: 0,
            tail: partition![2, 1],
        }])
        .unwrap();
        assert_eq!(hook.floor(), 2);
        assert_eq!(detect_stabilization(&hook, 10).unwrap(), Some(2));

        let zero = SequenceFamily::zero(0, 1);
        assert_eq!(detect_stabilization(&zero, 10).unwrap(), Some(0));

        // s_(n) + s_(n−1,1): the second term needs n ≥ 2
        let sum = SequenceFamily::stable(vec![
            StableTerm {
                coefficient: 1,
                row_offset: 0,
                tail: Partition::empty(),
            },
            StableTerm {
                coefficient: 1,
                row_offset: -1,
                tail: partition![1],
            },
        ])
        .unwrap();
        assert_eq!(sum.floor(), 2);
        assert_eq!(detect_stabilization(&sum, 10).unwrap(), Some(2));

        let growing = SequenceFamily::from_fn("n·s(n)", 0, 1, 0, |n| {
            SchurExpansion::basis(Partition::row(n)).scale(n as i64)
        });
        assert_eq!(detect_stabilization(&growing, 10).unwrap(), None);

        let pair = SequenceFamily::homogeneous(vec![0, 0]);
        assert!(detect_stabilization(&pair, 5).is_err());
    }

    #[test]
    fn hooks_family_matches_direct_product() {
        let fam = SequenceFamily::hooks(vec![1, 0], vec![partition![1], partition![2, 1]]).unwrap();
        assert_eq!(fam.floor(), 2);
        assert_eq!(fam.offset(), 5);
        for n in 2..6 {
            let a = SchurExpansion::basis(partition![1].prepend_row(n + 1).unwrap());
            let b = SchurExpansion::basis(partition![2, 1].prepend_row(n).unwrap());
            assert_eq!(*fam.at(n).unwrap(), a.schur_multiply(&b).unwrap());
        }
        assert!(fam.at(1).is_err());
    }

    #[test]
    fn lattice_and_pieri_homogeneous_agree() {
        let a = SequenceFamily::homogeneous(vec![0, 2, 1]);
        let b = SequenceFamily::homogeneous_by_lattice_points(vec![0, 2, 1]).unwrap();
        for n in 0..5 {
            assert_eq!(*a.at(n).unwrap(), *b.at(n).unwrap());
        }
    }

    #[test]
    fn product_and_combination() {
        let a = SequenceFamily::homogeneous(vec![1]);
        let b = SequenceFamily::homogeneous(vec![0]);
        let prod = SequenceFamily::product(vec![a.clone(), b.clone()]).unwrap();
        let direct = SequenceFamily::homogeneous(vec![1, 0]);
        for n in 0..5 {
            assert_eq!(*prod.at(n).unwrap(), *direct.at(n).unwrap());
        }
        assert!(SequenceFamily::linear_combination(vec![(1, a.clone()), (1, b.clone())]).is_err());
        let twice = SequenceFamily::linear_combination(vec![(3, a.clone()), (-1, a.clone())]).unwrap();
        assert_eq!(*twice.at(4).unwrap(), a.at(4).unwrap().scale(2).unwrap());
    }

    #[test]
    fn bordered_family_degree() {
        let f = SequenceFamily::bordered(vec![1, 0], partition![2, 1]);
        assert_eq!(f.offset(), 4);
        assert_eq!(f.at(3).unwrap().degree(), 10);
    }
}
