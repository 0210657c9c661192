//! Brute-force oracles that share no code with the library's multiplication
//! routines: Littlewood–Richardson coefficients by enumerating skew
//! tableaux with lattice reading words, and Kostka numbers by enumerating
//! semistandard tableaux.

#![allow(dead_code)]

use std::collections::BTreeMap;

use stabprod::{Partition, SchurExpansion};

/// Every partition `ν ⊇ inner` with `|ν/inner| = cells`, at most
/// `max_len` rows and `ν_1 ≤ max_first`.
pub fn supersets(inner: &[u32], cells: u32, max_len: usize, max_first: u32) -> Vec<Vec<u32>> {
    fn go(inner: &[u32], i: usize, left: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let base = inner.get(i).copied().unwrap_or(0);
        if i >= max_len || (base == 0 && left == 0) {
            if left == 0 && i >= inner.len() {
                out.push(cur.clone());
            }
            return;
        }
        if cap < base {
            return;
        }
        for extra in 0..=left.min(cap - base) {
            let part = base + extra;
            if part == 0 {
                continue;
            }
            cur.push(part);
            go(inner, i + 1, left - extra, part, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(inner, 0, cells, max_first, max_len, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard fillings of `outer / inner` with content
/// `content` whose right-to-left, top-to-bottom reading word is a lattice
/// word.
pub fn lr_coefficient(outer: &[u32], inner: &[u32], content: &[u32]) -> u64 {
    let rows = outer.len();
    let inner_at = |r: usize| inner.get(r).copied().unwrap_or(0) as usize;
    if (0..rows).any(|r| inner_at(r) > outer[r] as usize) || inner.len() > rows {
        return 0;
    }
    let cells: usize =
        outer.iter().map(|&x| x as usize).sum::<usize>() - inner.iter().map(|&x| x as usize).sum::<usize>();
    if cells != content.iter().map(|&x| x as usize).sum::<usize>() {
        return 0;
    }
    // Fill row by row, each row right to left, so that the order of
    // assignment is the reading order.
    let order: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (inner_at(r)..outer[r] as usize).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = outer.iter().map(|&l| vec![0; l as usize]).collect();
    let mut used = vec![0u32; content.len()];
    fn go(
        idx: usize,
        order: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        used: &mut Vec<u32>,
        content: &[u32],
        inner_at: &dyn Fn(usize) -> usize,
    ) -> u64 {
        let Some(&(r, c)) = order.get(idx) else {
            return 1;
        };
        let mut total = 0;
        for v in 1..=content.len() as u32 {
            let vi = v as usize - 1;
            if used[vi] == content[vi] {
                continue;
            }
            // Lattice condition: after placing v, count(v) ≤ count(v−1).
            if vi > 0 && used[vi] + 1 > used[vi - 1] {
                continue;
            }
            // Rows weakly increase: the cell to the right (already filled) is ≥ v.
            if c + 1 < grid[r].len() && grid[r][c + 1] < v {
                continue;
            }
            // Columns strictly increase: the cell above (already filled or in inner).
            if r > 0 && c >= inner_at(r - 1) && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            used[vi] += 1;
            total += go(idx + 1, order, grid, used, content, inner_at);
            used[vi] -= 1;
            grid[r][c] = 0;
        }
        total
    }
    go(0, &order, &mut grid, &mut used, content, &inner_at)
}

/// `s_λ · s_μ` by Littlewood–Richardson tableaux.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    let degree = lambda.weight() + mu.weight();
    let mut terms = BTreeMap::new();
    for nu in supersets(
        lambda.parts(),
        mu.weight(),
        lambda.length() + mu.length(),
        lambda.first() + mu.first(),
    ) {
        let c = lr_coefficient(&nu, lambda.parts(), mu.parts());
        if c > 0 {
            terms.insert(Partition::new(nu).unwrap(), c as i64);
        }
    }
    SchurExpansion::from_terms(degree, terms).unwrap()
}

/// `f · g` term by term through [`lr_product`].
pub fn lr_multiply(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    let mut acc = SchurExpansion::zero(f.degree() + g.degree());
    for (a, ca) in f.terms() {
        for (b, cb) in g.terms() {
            acc = acc.combine(&lr_product(a, b), ca * cb).unwrap();
        }
    }
    acc
}

/// `h_{r_1} ⋯ h_{r_m} · f` by repeated LR products with one-row shapes.
pub fn lr_homogeneous(f: &SchurExpansion, rows: &[u32]) -> SchurExpansion {
    rows.iter().fold(f.clone(), |acc, &r| {
        lr_multiply(&acc, &SchurExpansion::basis(Partition::row(r)))
    })
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub fn kostka(shape: &[u32], content: &[u32]) -> u64 {
    lr_free_count(shape, content)
}

fn lr_free_count(shape: &[u32], content: &[u32]) -> u64 {
    if shape.iter().sum::<u32>() != content.iter().sum::<u32>() {
        return 0;
    }
    let order: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    let mut used = vec![0u32; content.len()];
    fn go(idx: usize, order: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, used: &mut Vec<u32>, content: &[u32]) -> u64 {
        let Some(&(r, c)) = order.get(idx) else {
            return 1;
        };
        let mut total = 0;
        for v in 1..=content.len() as u32 {
            let vi = v as usize - 1;
            if used[vi] == content[vi] {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            used[vi] += 1;
            total += go(idx + 1, order, grid, used, content);
            used[vi] -= 1;
            grid[r][c] = 0;
        }
        total
    }
    go(0, &order, &mut grid, &mut used, content)
}

/// `h_{r_1} ⋯ h_{r_m} = Σ_λ K_{λ r} s_λ` by counting tableaux.
pub fn kostka_homogeneous(rows: &[u32]) -> SchurExpansion {
    let degree: u32 = rows.iter().sum();
    let mut terms = BTreeMap::new();
    for lambda in supersets(&[], degree, rows.iter().filter(|&&r| r > 0).count(), degree) {
        let k = kostka(&lambda, rows);
        if k > 0 {
            terms.insert(Partition::new(lambda).unwrap(), k as i64);
        }
    }
    SchurExpansion::from_terms(degree, terms).unwrap()
}
