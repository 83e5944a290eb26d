//! Dense linear algebra over a prime field, sized for class matrices.

#![allow(clippy::needless_range_loop)]

use crate::modp::{add_mod, inv_mod, mul_mod, sub_mod};

pub(crate) type Mat = Vec<Vec<u64>>;

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(rows: &mut Mat, p: u64) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..nrows {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let t = mul_mod(f, rows[r][j], p);
                    rows[i][j] = sub_mod(rows[i][j], t, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}`.
pub(crate) fn nullspace(a: &Mat, p: u64) -> Mat {
    let n = a.first().map_or(0, Vec::len);
    let mut m = a.clone();
    let pivots = rref(&mut m, p);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = sub_mod(0, row[free], p);
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial `det(xI - A)`, constant term first, via
/// reduction to upper Hessenberg form.
pub(crate) fn charpoly(a: &Mat, p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], p);
        for i in m + 1..n {
            let u = mul_mod(h[i][m - 1], inv, p);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let t = mul_mod(u, h[m][j], p);
                h[i][j] = sub_mod(h[i][j], t, p);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], p);
                row[m] = add_mod(row[m], t, p);
            }
        }
    }

    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for mm in 1..=n {
        let prev = &polys[mm - 1];
        let mut next = vec![0u64; mm + 1];
        // (x - h[mm-1][mm-1]) * prev
        let d = h[mm - 1][mm - 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = add_mod(next[k + 1], c, p);
            next[k] = sub_mod(next[k], mul_mod(d, c, p), p);
        }
        let mut t = 1u64;
        for i in 1..mm {
            t = mul_mod(t, h[mm - i][mm - i - 1], p);
            let coef = mul_mod(h[mm - 1 - i][mm - 1], t, p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[mm - 1 - i].iter().enumerate() {
                next[k] = sub_mod(next[k], mul_mod(coef, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub(crate) fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter()
        .rev()
        .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

/// All roots in the prime field, ascending, found by exhaustive scan.
pub(crate) fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| eval_poly(poly, x, p) == 0).collect()
}

#[cfg(test)]
pub(crate) fn det(a: &Mat, p: u64) -> u64 {
    let n = a.len();
    let mut m = a.clone();
    let mut acc = 1u64;
    for c in 0..n {
        let Some(r) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if r != c {
            m.swap(r, c);
            acc = sub_mod(0, acc, p);
        }
        acc = mul_mod(acc, m[c][c], p);
        let inv = inv_mod(m[c][c], p);
        for i in c + 1..n {
            let f = mul_mod(m[i][c], inv, p);
            for j in c..n {
                let t = mul_mod(f, m[c][j], p);
                m[i][j] = sub_mod(m[i][j], t, p);
            }
        }
    }
    acc
}
