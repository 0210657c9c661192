//! The staircase polytope `P_{k,n,α}`.
//!
//! A point is a partial matrix `(a_ij)`, `1 ≤ i ≤ k`, `1 ≤ j ≤ k − i + 1`,
//! where `a_ij` counts the entries `i + j − 1` in row `i` of a semistandard
//! tableau of weight `(n + α_1, …, n + α_k)`. The constraints are
//!
//! * `0 ≤ a_ij ≤ n + α_{i+j−1}`,
//! * `Σ_{j≤m} a_ij ≤ Σ_{j≤m} a_{i−1,j}` for `2 ≤ i ≤ k` (column strictness),
//! * `Σ_{i≤m} a_{i,m+1−i} = n + α_m` (the weight).
//!
//! Integer points are in bijection with those tableaux, so summing
//! `s_{(|a_1|, …, |a_k|)}` over them gives `h_{n+α_1} ⋯ h_{n+α_k}`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::{Accumulator, SchurExpansion};

pub const MAX_K: usize = 5;

/// A staircase array of nonnegative integers. Row `i` (0-based) has
/// `k − i` entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMatrix {
    k: usize,
    entries: Vec<u32>,
}

fn row_start(k: usize, i: usize) -> usize {
    // Σ_{t<i} (k − t)
    i * k - i * (i.saturating_sub(1)) / 2
}

impl PartialMatrix {
    pub fn zeros(k: usize) -> Self {
        PartialMatrix {
            k,
            entries: vec![0; k * (k + 1) / 2],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::InvalidParameter("a partial matrix needs k ≥ 1".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k - i {
                return Err(Error::InvalidParameter(format!(
                    "row {} of a staircase with k = {k} must have {} entries, found {}",
                    i + 1,
                    k - i,
                    row.len()
                )));
            }
        }
        Ok(PartialMatrix {
            k,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Entry `a_{i+1, j+1}` (0-based arguments).
    pub fn get(&self, i: usize, j: usize) -> u32 {
        debug_assert!(j < self.k - i);
        self.entries[row_start(self.k, i) + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        debug_assert!(j < self.k - i);
        self.entries[row_start(self.k, i) + j] = value;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        let start = row_start(self.k, i);
        &self.entries[start..start + self.k - i]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.k).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn row_sum(&self, i: usize) -> u32 {
        self.row(i).iter().sum()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.k).map(|i| self.row_sum(i)).collect()
    }

    /// `(|a_1|, …, |a_k|)` with trailing zero rows removed.
    pub fn shape(&self) -> Partition {
        Partition::from_sorted(self.row_sums())
    }

    /// The entries as a flat vector, row-major.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }
}

impl fmt::Debug for PartialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl Serialize for PartialMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

fn check_alpha(alpha: &[u32]) -> Result<()> {
    if alpha.is_empty() || alpha.len() > MAX_K {
        return Err(Error::UnsupportedK(alpha.len()));
    }
    if alpha.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::UnsortedAlpha(alpha.to_vec()));
    }
    Ok(())
}

fn weights(n: u32, alpha: &[u32]) -> Vec<u32> {
    alpha.iter().map(|a| n + a).collect()
}

/// Membership test for `P_{k,n,α}`.
pub fn is_member(a: &PartialMatrix, n: u32, alpha: &[u32]) -> Result<bool> {
    if a.k() != alpha.len() {
        return Err(Error::ShapeMismatch {
            matrix_k: a.k(),
            alpha_len: alpha.len(),
        });
    }
    check_alpha(alpha)?;
    Ok(satisfies(a, &weights(n, alpha)))
}

fn satisfies(a: &PartialMatrix, weights: &[u32]) -> bool {
    let k = a.k();
    for i in 0..k {
        for j in 0..k - i {
            if a.get(i, j) > weights[i + j] {
                return false;
            }
        }
    }
    for i in 1..k {
        let (mut upper, mut lower) = (0u64, 0u64);
        for j in 0..k - i {
            upper += a.get(i - 1, j) as u64;
            lower += a.get(i, j) as u64;
            if lower > upper {
                return false;
            }
        }
    }
    (0..k).all(|m| {
        let diag: u64 = (0..=m).map(|i| a.get(i, m - i) as u64).sum();
        diag == weights[m] as u64
    })
}

/// Extra restrictions used by the bordered product: rows at or beyond
/// `max_rows` are empty, and row `i` holds no entry smaller than
/// `row_floor[i]`.
#[derive(Clone, Debug)]
struct Restriction {
    max_rows: usize,
    row_floor: Vec<u32>,
}

impl Restriction {
    fn none(k: usize) -> Self {
        Restriction {
            max_rows: k,
            row_floor: vec![0; k],
        }
    }

    /// Whether cell `(i, j)` (0-based) is forced to zero.
    fn forced_zero(&self, i: usize, j: usize) -> bool {
        // The cell counts entries equal to i + j + 1 (1-based symbol).
        i >= self.max_rows || ((i + j + 1) as u32) < self.row_floor[i]
    }
}

/// Depth-first fill, one antidiagonal at a time. The `m`-th antidiagonal
/// must sum to `weights[m]`; within it rows `2..=m+1` are chosen subject to
/// their prefix-sum caps and row 1 takes the remainder.
fn visit_points<F: FnMut(&PartialMatrix)>(weights: &[u32], restriction: &Restriction, visit: &mut F) {
    let k = weights.len();
    let mut a = PartialMatrix::zeros(k);
    // prefix[i] = sum of the entries of row i filled so far
    let mut prefix = vec![0u32; k];
    fill_diagonal(0, weights, restriction, &mut a, &mut prefix, visit);
}

fn fill_diagonal<F: FnMut(&PartialMatrix)>(
    m: usize,
    weights: &[u32],
    restriction: &Restriction,
    a: &mut PartialMatrix,
    prefix: &mut [u32],
    visit: &mut F,
) {
    if m == weights.len() {
        visit(a);
        return;
    }
    fill_cell(m, m, weights[m], weights, restriction, a, prefix, visit);
}

/// Chooses `a_{i, m−i}` for row `i` of antidiagonal `m`, descending from the
/// bottom row of the diagonal to row 0.
#[allow(clippy::too_many_arguments)]
fn fill_cell<F: FnMut(&PartialMatrix)>(
    m: usize,
    i: usize,
    remaining: u32,
    weights: &[u32],
    restriction: &Restriction,
    a: &mut PartialMatrix,
    prefix: &mut [u32],
    visit: &mut F,
) {
    let j = m - i;
    if i == 0 {
        if remaining > 0 && restriction.forced_zero(0, j) {
            return;
        }
        a.set(0, j, remaining);
        prefix[0] += remaining;
        fill_diagonal(m + 1, weights, restriction, a, prefix, visit);
        prefix[0] -= remaining;
        return;
    }
    // Row i's prefix through column j may not exceed row i−1's prefix
    // through column j; row i−1's cell (i−1, j) lies on diagonal m−1, so
    // prefix[i−1] already covers it.
    let cap = if restriction.forced_zero(i, j) {
        0
    } else {
        (prefix[i - 1] - prefix[i]).min(remaining)
    };
    for v in 0..=cap {
        a.set(i, j, v);
        prefix[i] += v;
        fill_cell(m, i - 1, remaining - v, weights, restriction, a, prefix, visit);
        prefix[i] -= v;
    }
    a.set(i, j, 0);
}

/// Calls `visit` on every integer point of `P_{k,n,α}` without collecting.
pub fn for_each_point<F: FnMut(&PartialMatrix)>(n: u32, alpha: &[u32], visit: F) -> Result<()> {
    check_alpha(alpha)?;
    let mut visit = visit;
    visit_points(&weights(n, alpha), &Restriction::none(alpha.len()), &mut visit);
    Ok(())
}

/// All integer points of `P_{k,n,α}`, sorted lexicographically by their
/// row-major entries.
pub fn enumerate_points(n: u32, alpha: &[u32]) -> Result<Vec<PartialMatrix>> {
    let mut points = Vec::new();
    for_each_point(n, alpha, |a| points.push(a.clone()))?;
    points.sort();
    Ok(points)
}

pub fn count_points(n: u32, alpha: &[u32]) -> Result<u64> {
    let mut count = 0u64;
    for_each_point(n, alpha, |_| count += 1)?;
    Ok(count)
}

/// `Σ_{A ∈ P^ℤ} s_{(|a_1|, …, |a_k|)}`, i.e. `h_{n+α_1} ⋯ h_{n+α_k}`.
pub fn homogeneous_product(n: u32, alpha: &[u32]) -> Result<SchurExpansion> {
    check_alpha(alpha)?;
    let w = weights(n, alpha);
    shape_sum(&w, &Restriction::none(w.len()))
}

fn shape_sum(weights: &[u32], restriction: &Restriction) -> Result<SchurExpansion> {
    let mut acc = Accumulator::default();
    let mut err = None;
    visit_points(weights, restriction, &mut |a| {
        if err.is_none() {
            if let Err(e) = acc.add(a.shape(), 1) {
                err = Some(e);
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(acc.finish(weights.iter().sum())),
    }
}

/// Faces cut out by successive difference operators. Each filter keeps the
/// points not hit by the injection `P_{n−1} → P_n` of the corresponding
/// operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    /// `Δ^{(1^k)}`: `a_{k,1} = 0`.
    D1K,
    /// `Δ^{(2,1^{k−2})}` after `Δ^{(1^k)}`: `a_{1,k} = 0 ∨ a_{k−1,1} = 0`.
    D21,
    /// The second `Δ^{(2,1,1)}` for `k = 4`.
    D211Second,
    /// `Δ^{(2,2)}` after `(Δ^{(2,1,1)})² Δ^{(1^4)}` for `k = 4`.
    D22,
}

impl Face {
    pub const ALL: [Face; 4] = [Face::D1K, Face::D21, Face::D211Second, Face::D22];

    pub fn name(self) -> &'static str {
        match self {
            Face::D1K => "D1K",
            Face::D21 => "D21",
            Face::D211Second => "D211_SECOND",
            Face::D22 => "D22",
        }
    }

    pub fn check_k(self, k: usize) -> Result<()> {
        let ok = match self {
            Face::D1K => k >= 1,
            Face::D21 => k >= 2,
            Face::D211Second | Face::D22 => k == 4,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::FaceNotDefinedForK { face: self.name(), k })
        }
    }

    /// Whether `p` lies on this face. `p.k()` must be valid for the face.
    pub fn contains(self, p: &PartialMatrix) -> bool {
        let k = p.k();
        // 1-based access, matching the usual a_ij notation.
        let a = |i: usize, j: usize| p.get(i - 1, j - 1);
        match self {
            Face::D1K => a(k, 1) == 0,
            Face::D21 => a(1, k) == 0 || a(k - 1, 1) == 0,
            Face::D211Second => {
                a(1, 3) == 0
                    || a(3, 2) == 0
                    || a(3, 1) == a(2, 1)
                    || a(2, 1) + a(2, 2) + a(2, 3) == a(1, 1) + a(1, 2) + a(1, 3)
            }
            Face::D22 => {
                a(1, 2) == 0
                    || a(2, 2) == 0
                    || a(2, 3) == 0
                    || a(2, 1) + a(2, 2) == a(1, 1) + a(1, 2)
                    || a(3, 1) + a(3, 2) == a(2, 1) + a(2, 2)
            }
        }
    }
}

impl std::str::FromStr for Face {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Face::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown face {s:?}")))
    }
}

/// The points of `points` lying on `face`.
pub fn face_filter(points: &[PartialMatrix], face: Face) -> Result<Vec<PartialMatrix>> {
    let Some(first) = points.first() else {
        return Ok(Vec::new());
    };
    let k = first.k();
    face.check_k(k)?;
    if let Some(p) = points.iter().find(|p| p.k() != k) {
        return Err(Error::ShapeMismatch {
            matrix_k: p.k(),
            alpha_len: k,
        });
    }
    Ok(points.iter().filter(|p| face.contains(p)).cloned().collect())
}

/// The diagonal-shift points of `P_{k,n,α}`: `1 + 1 + 2 + ⋯ + (k−1)`
/// lattice points.
///
/// For each `i ∈ {0, …, k−1}` start from the point whose first row is
/// `(n+α_1, 0, …, 0, n+α_{k−i+1}, …, n+α_k)` and whose first column is
/// `(n+α_1, …, n+α_{k−i}, 0, …)`. Then repeatedly shift the trailing
/// entries of row 1 one step down-left along their antidiagonals, one more
/// entry each time, until `i` points have been produced (one point for
/// `i = 0`).
///
/// For `k ≤ 3` these points are affinely independent. From `k = 4` on they
/// are not: the first shift of the `i`-th family and of the `(i+1)`-th
/// family move the same entry by the same vector, so the affine span has
/// dimension `C(k,2) − C(k−2,2)`. [`affine_witnesses`] repairs this.
pub fn diagonal_shift_points(n: u32, alpha: &[u32]) -> Result<Vec<PartialMatrix>> {
    check_alpha(alpha)?;
    if n == 0 {
        return Err(Error::InvalidParameter("affine witnesses need n ≥ 1".into()));
    }
    let k = alpha.len();
    let w = weights(n, alpha);
    let mut out = Vec::new();
    for i in 0..k {
        let mut base = PartialMatrix::zeros(k);
        base.set(0, 0, w[0]);
        for (r, &weight) in w.iter().enumerate().take(k - i).skip(1) {
            base.set(r, 0, weight);
        }
        for (c, &weight) in w.iter().enumerate().skip(k - i) {
            if c > 0 {
                base.set(0, c, weight);
            }
        }
        out.push(base.clone());
        // Step t moves the last t weights of row 1 into column k − t,
        // stacked in rows 2..=t+1.
        for t in 1..i {
            let mut p = base.clone();
            for s in 0..t {
                let value_index = k - 1 - s;
                p.set(0, value_index, 0);
            }
            for s in 0..t {
                let value_index = k - 1 - s;
                let row = t - s;
                p.set(row, k - 1 - t, w[value_index]);
            }
            out.push(p);
        }
    }
    Ok(out)
}

/// `C(k,2) + 1` affinely independent lattice points of `P_{k,n,α}`,
/// certifying that the polytope is `C(k,2)`-dimensional.
///
/// The independent points among [`diagonal_shift_points`] are kept in
/// order; the rest of the list is filled greedily from the lattice points
/// in enumeration order. Errors with `InvalidParameter` if the lattice
/// points do not reach full dimension.
pub fn affine_witnesses(n: u32, alpha: &[u32]) -> Result<Vec<PartialMatrix>> {
    let k = alpha.len();
    let target = k * (k - 1) / 2;
    let mut out: Vec<PartialMatrix> = Vec::with_capacity(target + 1);
    let try_add = |p: &PartialMatrix, out: &mut Vec<PartialMatrix>| {
        if out.len() <= target && !out.contains(p) {
            out.push(p.clone());
            if affine_dimension(out) + 1 < out.len() {
                out.pop();
            }
        }
    };
    for p in diagonal_shift_points(n, alpha)? {
        try_add(&p, &mut out);
    }
    if out.len() <= target {
        for_each_point(n, alpha, |p| try_add(p, &mut out))?;
    }
    if out.len() != target + 1 {
        return Err(Error::InvalidParameter(format!(
            "lattice points of P_{{{k},{n},{alpha:?}}} span only {} dimensions",
            out.len().saturating_sub(1)
        )));
    }
    Ok(out)
}

/// Dimension of the affine hull of `points` over ℚ.
pub fn affine_dimension(points: &[PartialMatrix]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let rows: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| {
            p.entries()
                .iter()
                .zip(first.entries())
                .map(|(&x, &y)| x as i128 - y as i128)
                .collect()
        })
        .collect();
    rank(rows)
}

/// Rank by fraction-free elimination; rows are reduced by their gcd so the
/// entries stay small.
fn rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&p) {
                *x = *x * p[col] - f * y;
            }
            let g = row.iter().fold(0i128, |g, &x| gcd(g, x.abs()));
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The part of a skew tableau of shape `ν/β` lying in the first `β_1`
/// columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentreTableau {
    /// `min(ν_i, β_1)` row by row; contains `β`.
    pub shape: Partition,
    /// Row `i` holds the entries of columns `β_i + 1 ..= shape_i`.
    pub filling: Vec<Vec<u32>>,
    /// `counts[s]` is the number of entries equal to `s + 1`.
    pub counts: Vec<u32>,
}

impl CentreTableau {
    /// Number of rows of the shape with full length `β_1`; the arm of a
    /// tableau with this centre lives in these rows.
    pub fn full_rows(&self, beta: &Partition) -> usize {
        self.shape.parts().iter().filter(|&&p| p == beta.first()).count()
    }

    /// For each full row, the smallest entry allowed in the arm: the centre
    /// entry in column `β_1`, or 0 when that cell belongs to `β`.
    pub fn arm_floor(&self, beta: &Partition) -> Vec<u32> {
        (0..self.full_rows(beta))
            .map(|i| {
                if beta.part(i) == beta.first() {
                    0
                } else {
                    *self.filling[i].last().expect("full row has a filled cell")
                }
            })
            .collect()
    }
}

/// All centres `c ∈ c_k(β)`: semistandard fillings with entries in
/// `{1..k}` of `ρ/β` over every partition `ρ ⊇ β` with `ρ_1 = β_1`.
/// Sorted and duplicate-free.
pub fn enumerate_centres(k: usize, beta: &Partition) -> Vec<CentreTableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    centre_rows(k as u32, beta, &mut rows, &mut out);
    out.sort();
    out.dedup();
    out
}

fn centre_rows(k: u32, beta: &Partition, rows: &mut Vec<Vec<u32>>, out: &mut Vec<CentreTableau>) {
    let i = rows.len();
    let width = beta.first();
    let row_len = |r: usize, rows: &[Vec<u32>]| beta.part(r) + rows[r].len() as u32;
    // Record the tableau made of rows so far (remaining rows of β must be
    // present, so only once every row of β has been visited).
    if i >= beta.length() {
        let mut counts = vec![0u32; k as usize];
        for v in rows.iter().flatten() {
            counts[*v as usize - 1] += 1;
        }
        let shape = Partition::from_sorted((0..i).map(|r| row_len(r, rows)).collect());
        out.push(CentreTableau {
            shape,
            filling: rows.clone(),
            counts,
        });
    }
    let cap = if i == 0 { width } else { row_len(i - 1, rows) };
    let start = beta.part(i);
    if i >= beta.length() && cap == 0 {
        return;
    }
    // Row i may stay at β_i; below β a zero-length row ends the shape.
    let min_len = start.max(if i >= beta.length() { 1 } else { 0 });
    for len in min_len..=cap {
        let mut row = Vec::with_capacity((len - start) as usize);
        let mut fillings = Vec::new();
        fill_centre_row(k, beta, rows, start, len, &mut row, &mut |filled| {
            fillings.push(filled.to_vec());
        });
        for filled in fillings {
            rows.push(filled);
            centre_rows(k, beta, rows, out);
            rows.pop();
        }
    }
}

/// Fills columns `start+1 ..= end` of the next row: weakly increasing,
/// strictly greater than the filled cell above.
fn fill_centre_row(
    k: u32,
    beta: &Partition,
    rows: &[Vec<u32>],
    start: u32,
    end: u32,
    row: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    let col = start + row.len() as u32; // 0-based column of the next cell
    if col == end {
        emit(row);
        return;
    }
    let i = rows.len();
    let above = if i == 0 {
        0
    } else {
        let r = i - 1;
        let b = beta.part(r);
        if col < b {
            0
        } else {
            rows[r][(col - b) as usize]
        }
    };
    let left = row.last().copied().unwrap_or(1);
    let lo = left.max(above + 1);
    for v in lo..=k {
        row.push(v);
        fill_centre_row(k, beta, rows, start, end, row, emit);
        row.pop();
    }
}

/// `h_{n+α_1} ⋯ h_{n+α_k} · s_β` assembled from centres: for each centre
/// `c`, the arms are tableaux of weight `(n+α_i − c(i))_i` with at most as
/// many rows as `c` has rows of length `β_1`, each such row `i` holding no
/// entry below the centre's entry in column `β_1`; their shapes are shifted
/// by `shape(c)`.
///
/// Centres that use a symbol more often than the weight allows contribute
/// nothing.
pub fn product_with_border(n: u32, alpha: &[u32], beta: &Partition) -> Result<SchurExpansion> {
    bordered_sum(n, alpha, beta, true)
}

/// The same centre sum without the row condition linking each arm row to
/// the centre entry beside it. This equals the bordered product when
/// `k ≤ 2` but overcounts from `k = 3` on (for example `k = 3`, `n = 1`,
/// `α = 0`, `β = (1)` gives `3 s_{(2,2)}` instead of `2 s_{(2,2)}`).
pub fn product_with_border_uncoupled(n: u32, alpha: &[u32], beta: &Partition) -> Result<SchurExpansion> {
    bordered_sum(n, alpha, beta, false)
}

fn bordered_sum(n: u32, alpha: &[u32], beta: &Partition, coupled: bool) -> Result<SchurExpansion> {
    check_alpha(alpha)?;
    if beta.is_empty() {
        return homogeneous_product(n, alpha);
    }
    let k = alpha.len();
    let w = weights(n, alpha);
    let degree = w.iter().sum::<u32>() + beta.weight();
    let mut acc = Accumulator::default();
    for centre in enumerate_centres(k, beta) {
        if centre.counts.iter().zip(&w).any(|(c, w)| c > w) {
            continue;
        }
        let reduced: Vec<u32> = w.iter().zip(&centre.counts).map(|(w, c)| w - c).collect();
        let full = centre.full_rows(beta);
        let mut row_floor = vec![0; k];
        if coupled {
            for (slot, f) in row_floor.iter_mut().zip(centre.arm_floor(beta)) {
                *slot = f;
            }
        }
        let restriction = Restriction {
            max_rows: full.min(k),
            row_floor,
        };
        let arms = shape_sum(&reduced, &restriction)?;
        acc.add_expansion(&arms.shift(&centre.shape), 1)?;
    }
    Ok(acc.finish(degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn pm(rows: &[&[u32]]) -> PartialMatrix {
        PartialMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&pm(&[&[2, 0], &[2]]), 2, &[0, 0]).unwrap());
        assert!(!is_member(&pm(&[&[2, 0], &[3]]), 2, &[0, 0]).unwrap());
        assert!(is_member(&pm(&[&[3, 2], &[0]]), 2, &[1, 0]).unwrap());
        assert_eq!(
            is_member(&pm(&[&[3, 2], &[0]]), 2, &[1, 0, 0]),
            Err(Error::ShapeMismatch {
                matrix_k: 2,
                alpha_len: 3
            })
        );
        assert_eq!(
            is_member(&pm(&[&[3, 2], &[0]]), 2, &[0, 1]),
            Err(Error::UnsortedAlpha(vec![0, 1]))
        );
    }

    #[test]
    fn enumeration_examples() {
        let pts = enumerate_points(2, &[0, 0]).unwrap();
        assert_eq!(
            pts,
            vec![pm(&[&[2, 0], &[2]]), pm(&[&[2, 1], &[1]]), pm(&[&[2, 2], &[0]])]
        );
        assert_eq!(enumerate_points(3, &[0]).unwrap(), vec![pm(&[&[3]])]);
        let zero = enumerate_points(0, &[0, 0, 0]).unwrap();
        assert_eq!(zero, vec![PartialMatrix::zeros(3)]);
        assert_eq!(enumerate_points(1, &[0; 6]), Err(Error::UnsupportedK(6)));
    }

    #[test]
    fn enumerated_points_are_members() {
        for alpha in [vec![2, 1, 0], vec![1, 1, 1, 0], vec![0, 0, 0, 0, 0]] {
            for p in enumerate_points(3, &alpha).unwrap() {
                assert!(is_member(&p, 3, &alpha).unwrap(), "{p:?}");
            }
        }
    }

    #[test]
    fn homogeneous_product_examples() {
        let s = |p: Partition| SchurExpansion::basis(p);
        let expect = s(partition![4])
            .add(&s(partition![3, 1]))
            .unwrap()
            .add(&s(partition![2, 2]))
            .unwrap();
        assert_eq!(homogeneous_product(2, &[0, 0]).unwrap(), expect);
        let expect = s(partition![5])
            .add(&s(partition![4, 1]))
            .unwrap()
            .add(&s(partition![3, 2]))
            .unwrap();
        assert_eq!(homogeneous_product(2, &[1, 0]).unwrap(), expect);
        assert_eq!(homogeneous_product(3, &[0]).unwrap(), s(partition![3]));
    }

    #[test]
    fn face_filter_examples() {
        let pts = enumerate_points(2, &[0, 0]).unwrap();
        let d1k = face_filter(&pts, Face::D1K).unwrap();
        assert_eq!(d1k, vec![pm(&[&[2, 2], &[0]])]);
        assert!(face_filter(&d1k, Face::D21).unwrap().is_empty());
        let single = enumerate_points(3, &[0]).unwrap();
        assert!(face_filter(&single, Face::D1K).unwrap().is_empty());
        assert_eq!(
            face_filter(&pts, Face::D22),
            Err(Error::FaceNotDefinedForK { face: "D22", k: 2 })
        );
        assert_eq!(face_filter(&[], Face::D22).unwrap(), vec![]);
    }

    #[test]
    fn witnesses_k2() {
        let w = affine_witnesses(2, &[0, 0]).unwrap();
        assert_eq!(w, vec![pm(&[&[2, 0], &[2]]), pm(&[&[2, 2], &[0]])]);
        assert_eq!(affine_dimension(&w), 1);
        let w = affine_witnesses(5, &[3, 1]).unwrap();
        assert_eq!(w, vec![pm(&[&[8, 0], &[6]]), pm(&[&[8, 6], &[0]])]);
    }

    #[test]
    fn witnesses_k3() {
        let w = affine_witnesses(2, &[0, 0, 0]).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(affine_dimension(&w), 3);
        for p in &w {
            assert!(is_member(p, 2, &[0, 0, 0]).unwrap());
        }
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]), 2);
        assert_eq!(rank(vec![vec![0, 0], vec![0, 0]]), 0);
    }

    #[test]
    fn centres_small_cases() {
        let empty = enumerate_centres(3, &Partition::empty());
        assert_eq!(empty.len(), 1);
        assert!(empty[0].shape.is_empty());

        let one = enumerate_centres(1, &partition![1]);
        assert_eq!(one.len(), 2);
        assert_eq!(one[0].shape, partition![1]);
        assert_eq!(one[1].shape, partition![1, 1]);
        assert_eq!(one[1].filling, vec![vec![], vec![1]]);
        assert_eq!(one[1].counts, vec![1]);

        // column 1 below the cell: nothing, 1, 2, or 1 over 2
        assert_eq!(enumerate_centres(2, &partition![1]).len(), 4);
    }

    #[test]
    fn bordered_product_trivial_border() {
        assert_eq!(
            product_with_border(3, &[1, 0], &Partition::empty()).unwrap(),
            homogeneous_product(3, &[1, 0]).unwrap()
        );
    }

    #[test]
    fn bordered_product_k1() {
        // h_n · s_1 = s_(n+1) + s_(n,1)
        let got = product_with_border(3, &[0], &partition![1]).unwrap();
        let want = SchurExpansion::from_terms(4, [(partition![4], 1), (partition![3, 1], 1)]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn uncoupled_centre_sum_overcounts_for_three_factors() {
        let coupled = product_with_border(1, &[0, 0, 0], &partition![1]).unwrap();
        let uncoupled = product_with_border_uncoupled(1, &[0, 0, 0], &partition![1]).unwrap();
        assert_eq!(coupled.multiplicity(&partition![2, 2]), 2);
        assert_eq!(uncoupled.multiplicity(&partition![2, 2]), 3);
    }
}
