//! Integer combinations of Schur functions of a single degree.
//!
//! Products are computed with the Pieri rule. A general product `f · s_ν`
//! expands `s_ν` by the Jacobi–Trudi determinant into signed products of
//! one-row functions `h_r = s_(r)` and multiplies `f` by each of them.

use std::collections::{BTreeMap, HashMap};

use rustc_hash::FxHashMap;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// An element of `Λ_degree` in the Schur basis. Zero coefficients are never
/// stored; the zero element keeps its degree.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: u32,
    terms: BTreeMap<Partition, i64>,
}

pub(crate) fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Hash-map accumulator used inside the multiplication loops.
#[derive(Default)]
pub(crate) struct Accumulator {
    terms: FxHashMap<Partition, i64>,
}

impl Accumulator {
    pub(crate) fn add(&mut self, key: Partition, c: i64) -> Result<()> {
        let slot = self.terms.entry(key).or_insert(0);
        *slot = checked_add(*slot, c)?;
        Ok(())
    }

    /// Adds `c · s_parts`, where `parts` is weakly decreasing and may carry
    /// trailing zeros. Allocates only when the shape is new.
    pub(crate) fn add_parts(&mut self, parts: &[u32], c: i64) -> Result<()> {
        let end = parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        let parts = &parts[..end];
        match self.terms.get_mut(parts) {
            Some(slot) => *slot = checked_add(*slot, c)?,
            None => {
                self.terms.insert(Partition::from_sorted(parts.to_vec()), c);
            }
        }
        Ok(())
    }

    pub(crate) fn add_expansion(&mut self, f: &SchurExpansion, scale: i64) -> Result<()> {
        for (p, &c) in &f.terms {
            self.add(p.clone(), checked_mul(c, scale)?)?;
        }
        Ok(())
    }

    pub(crate) fn finish(self, degree: u32) -> SchurExpansion {
        let terms = self.terms.into_iter().filter(|&(_, c)| c != 0).collect();
        SchurExpansion { degree, terms }
    }
}

impl SchurExpansion {
    pub fn zero(degree: u32) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `s_λ`.
    pub fn basis(p: Partition) -> Self {
        let degree = p.weight();
        SchurExpansion {
            degree,
            terms: BTreeMap::from([(p, 1)]),
        }
    }

    /// `s_∅ = 1`.
    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    /// Collects `(λ, c)` pairs, summing repeated keys. Every key must have
    /// weight `degree`.
    pub fn from_terms<I>(degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        let mut acc = Accumulator::default();
        for (p, c) in terms {
            if p.weight() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: p.weight(),
                });
            }
            acc.add(p, c)?;
        }
        Ok(acc.finish(degree))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// The coefficient of `s_λ`, zero if absent.
    pub fn multiplicity(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    /// Terms in canonical order: descending lexicographic by partition.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, i64)> + '_ {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn add(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        self.combine(other, -1)
    }

    /// `self + scale · other`.
    pub fn combine(&self, other: &SchurExpansion, scale: i64) -> Result<SchurExpansion> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut terms = self.terms.clone();
        for (p, &c) in &other.terms {
            let add = checked_mul(c, scale)?;
            let slot = terms.entry(p.clone()).or_insert(0);
            *slot = checked_add(*slot, add)?;
            if *slot == 0 {
                terms.remove(p);
            }
        }
        Ok(SchurExpansion {
            degree: self.degree,
            terms,
        })
    }

    pub fn scale(&self, factor: i64) -> Result<SchurExpansion> {
        if factor == 0 {
            return Ok(Self::zero(self.degree));
        }
        let terms = self
            .terms
            .iter()
            .map(|(p, &c)| Ok((p.clone(), checked_mul(c, factor)?)))
            .collect::<Result<_>>()?;
        Ok(SchurExpansion {
            degree: self.degree,
            terms,
        })
    }

    /// `f + λ`: replaces each `s_μ` by `s_{μ+λ}`. The map `μ ↦ μ + λ` is
    /// injective, so no coefficients merge.
    pub fn shift(&self, by: &Partition) -> SchurExpansion {
        if by.is_empty() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(p, &c)| (p.componentwise_sum(by), c)).collect();
        SchurExpansion {
            degree: self.degree + by.weight(),
            terms,
        }
    }

    /// Splits into the parts with `l(λ) ≤ max_len` and `l(λ) > max_len`.
    pub fn restrict_length(&self, max_len: usize) -> (SchurExpansion, SchurExpansion) {
        let (short, long): (BTreeMap<_, _>, BTreeMap<_, _>) = self
            .terms
            .iter()
            .map(|(p, &c)| (p.clone(), c))
            .partition(|(p, _)| p.length() <= max_len);
        (
            SchurExpansion {
                degree: self.degree,
                terms: short,
            },
            SchurExpansion {
                degree: self.degree,
                terms: long,
            },
        )
    }

    /// `f · s_(r)` by the Pieri rule.
    pub fn pieri_multiply(&self, r: u32) -> Result<SchurExpansion> {
        if r == 0 {
            return Ok(self.clone());
        }
        let mut acc = Accumulator::default();
        let mut buf = Vec::new();
        for (mu, &c) in &self.terms {
            for_each_horizontal_strip(mu, r, &mut buf, &mut |nu| acc.add_parts(nu, c))?;
        }
        Ok(acc.finish(self.degree + r))
    }

    /// `f · h_{r_1} ⋯ h_{r_j}`.
    pub fn multiply_by_homogeneous(&self, rows: &[u32]) -> Result<SchurExpansion> {
        // The factors commute; shorter rows first keeps intermediates small,
        // and intermediates stay unsorted until the last step.
        let mut rows: Vec<u32> = rows.iter().copied().filter(|&r| r > 0).collect();
        rows.sort_unstable();
        let mut current: Vec<(Partition, i64)> = self.terms.iter().map(|(p, &c)| (p.clone(), c)).collect();
        let mut buf = Vec::new();
        for &r in &rows {
            let mut acc = Accumulator::default();
            for (mu, c) in &current {
                for_each_horizontal_strip(mu, r, &mut buf, &mut |nu| acc.add_parts(nu, *c))?;
            }
            current = acc.terms.into_iter().filter(|&(_, c)| c != 0).collect();
        }
        let degree = self.degree + rows.iter().sum::<u32>();
        Ok(SchurExpansion {
            degree,
            terms: current.into_iter().collect(),
        })
    }

    /// The Schur expansion of `f · g`.
    pub fn schur_multiply(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        // Expand the cheaper operand through Jacobi–Trudi.
        let (base, expanded) = if (other.degree, other.len()) <= (self.degree, self.len()) {
            (self, other)
        } else {
            (other, self)
        };
        let mut products: HashMap<Vec<u32>, i64> = HashMap::new();
        for (p, &c) in &expanded.terms {
            for (rows, sign) in jacobi_trudi_rows(p) {
                let slot = products.entry(rows).or_insert(0);
                *slot = checked_add(*slot, checked_mul(sign, c)?)?;
            }
        }
        let mut keys: Vec<_> = products.into_iter().filter(|&(_, c)| c != 0).collect();
        keys.sort();
        let mut acc = Accumulator::default();
        for (rows, c) in keys {
            acc.add_expansion(&base.multiply_by_homogeneous(&rows)?, c)?;
        }
        Ok(acc.finish(self.degree + other.degree))
    }
}

/// Calls `visit` with every `ν ⊇ μ` such that `ν / μ` is a horizontal strip
/// of `r` cells.
fn for_each_horizontal_strip<F>(mu: &Partition, r: u32, buf: &mut Vec<u32>, visit: &mut F) -> Result<()>
where
    F: FnMut(&[u32]) -> Result<()>,
{
    let parts = mu.parts();
    let l = parts.len();
    // Row 0 is unbounded, rows 1..=l are capped by the row above.
    buf.clear();
    buf.extend_from_slice(parts);
    buf.push(0);
    strips_from_row(parts, l, r, buf, visit)
}

fn strips_from_row<F>(parts: &[u32], row: usize, remaining: u32, buf: &mut Vec<u32>, visit: &mut F) -> Result<()>
where
    F: FnMut(&[u32]) -> Result<()>,
{
    if row == 0 {
        buf[0] = parts.first().copied().unwrap_or(0) + remaining;
        visit(buf)?;
        return Ok(());
    }
    let below = parts.get(row).copied().unwrap_or(0);
    let gap = parts[row - 1] - below;
    for add in 0..=gap.min(remaining) {
        buf[row] = below + add;
        strips_from_row(parts, row - 1, remaining - add, buf, visit)?;
    }
    Ok(())
}

/// Expands `s_ν = det(h_{ν_i − i + j})` into signed products of one-row
/// functions. Each product is returned as its nonzero row lengths in
/// decreasing order; `h_0 = 1` and negative indices vanish.
pub fn jacobi_trudi_rows(nu: &Partition) -> Vec<(Vec<u32>, i64)> {
    let rows: Vec<i64> = nu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 - i as i64)
        .collect();
    let columns: Vec<i64> = (0..rows.len() as i64).collect();
    let mut out: HashMap<Vec<u32>, i64> = HashMap::new();
    let mut used = vec![false; columns.len()];
    let mut chosen = Vec::with_capacity(rows.len());
    determinant_terms(&rows, &columns, 0, &mut used, &mut chosen, 1, &mut out);
    let mut v: Vec<_> = out.into_iter().filter(|&(_, c)| c != 0).collect();
    v.sort();
    v
}

/// Leibniz expansion of `det(h_{rows[i] + columns[j]})`, pruning zero entries.
fn determinant_terms(
    rows: &[i64],
    columns: &[i64],
    row: usize,
    used: &mut [bool],
    chosen: &mut Vec<u32>,
    sign: i64,
    out: &mut HashMap<Vec<u32>, i64>,
) {
    if row == rows.len() {
        let mut key: Vec<u32> = chosen.iter().copied().filter(|&d| d > 0).collect();
        key.sort_unstable_by(|a, b| b.cmp(a));
        *out.entry(key).or_insert(0) += sign;
        return;
    }
    for j in 0..columns.len() {
        if used[j] {
            continue;
        }
        let d = rows[row] + columns[j];
        if d < 0 {
            continue;
        }
        let inversions = used[j + 1..].iter().filter(|&&u| u).count();
        let s = if inversions % 2 == 0 { sign } else { -sign };
        used[j] = true;
        chosen.push(d as u32);
        determinant_terms(rows, columns, row + 1, used, chosen, s, out);
        chosen.pop();
        used[j] = false;
    }
}

/// One summand of the first-row expansion of the Jacobi–Trudi determinant of
/// `s_{(n, μ)}`: `s_{(n,μ)} = Σ sign · s_{(n + offset)} · minor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookTerm {
    pub sign: i64,
    pub offset: u32,
    pub minor: SchurExpansion,
}

/// Laplace expansion of the Jacobi–Trudi matrix of `(n, μ)` along its first
/// row. The minors do not depend on `n`.
pub fn jacobi_trudi_hook_terms(mu: &Partition) -> Result<Vec<HookTerm>> {
    let l = mu.length();
    // Rows of the matrix below the first: h_{μ_r − r + c} for c = 0..=l,
    // r counted from 1.
    let rows: Vec<i64> = mu
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &p)| p as i64 - (r as i64 + 1))
        .collect();
    (0..=l)
        .map(|deleted| {
            let columns: Vec<i64> = (0..=l as i64).filter(|&c| c != deleted as i64).collect();
            let mut products = HashMap::new();
            let mut used = vec![false; columns.len()];
            let mut chosen = Vec::with_capacity(l);
            determinant_terms(&rows, &columns, 0, &mut used, &mut chosen, 1, &mut products);
            let degree = mu.weight() - deleted as u32;
            let mut acc = Accumulator::default();
            let mut keys: Vec<_> = products.into_iter().filter(|&(_, c)| c != 0).collect();
            keys.sort();
            for (rows, c) in keys {
                acc.add_expansion(&SchurExpansion::one().multiply_by_homogeneous(&rows)?, c)?;
            }
            Ok(HookTerm {
                sign: if deleted % 2 == 0 { 1 } else { -1 },
                offset: deleted as u32,
                minor: acc.finish(degree),
            })
        })
        .collect()
}

impl std::fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0[deg {}]", self.degree);
        }
        for (i, (p, c)) in self.terms().enumerate() {
            let sign = match (i, c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}s({p})")?;
            } else {
                write!(f, "{sign}{mag}s({p})")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    partition: &'a Partition,
    coefficient: i64,
}

struct TermList<'a>(&'a SchurExpansion);

impl Serialize for TermList<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (partition, coefficient) in self.0.terms() {
            seq.serialize_element(&TermRecord { partition, coefficient })?;
        }
        seq.end()
    }
}

/// JSON form: `{"degree": d, "terms": [{"partition": "3,2", "coefficient": 1}, …]}`
/// with terms in canonical order.
impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SchurExpansion", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &TermList(self))?;
        st.end()
    }
}
