//! Integer Smith normal form with the column transform retained.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors `d_1 | d_2 | …`, all positive. Their count
    /// is the rank of the input.
    pub diagonal: Vec<BigInt>,
    /// Unimodular `V` (columns × columns) with `U · A · V = D` for some
    /// unimodular `U`.
    pub col_transform: Vec<Vec<BigInt>>,
}

fn min_nonzero(a: &[Vec<BigInt>], from: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(from) {
        for (c, v) in row.iter().enumerate().take(cols).skip(from) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((br, bc)) if a[br][bc].abs() <= v.abs() => {}
                _ => best = Some((r, c)),
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x == y {
        return;
    }
    for row in a.iter_mut().chain(v.iter_mut()) {
        row.swap(x, y);
    }
}

/// `col_c -= q · col_t` on both the working matrix and `V`.
fn sub_col(a: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], c: usize, t: usize, q: &BigInt) {
    for row in a.iter_mut().chain(v.iter_mut()) {
        if !row[t].is_zero() {
            let delta = q * &row[t];
            row[c] -= delta;
        }
    }
}

/// Smith normal form of the `rows × cols` matrix `a`.
pub fn smith_normal_form(a: &[Vec<BigInt>], cols: usize) -> SmithForm {
    let mut a: Vec<Vec<BigInt>> = a
        .iter()
        .filter(|row| row.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let rows = a.len();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((r, c)) = min_nonzero(&a, t, cols) else {
            break;
        };
        a.swap(t, r);
        swap_cols(&mut a, &mut v, t, c);
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = a[r][t].div_floor(&a[t][t]);
                let pivot_row = a[t].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &q * p;
                    }
                }
                dirty |= !a[r][t].is_zero();
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = a[t][c].div_floor(&a[t][t]);
                sub_col(&mut a, &mut v, c, t, &q);
                dirty |= !a[t][c].is_zero();
            }
            if dirty {
                // bring the smallest remainder in row/column t to the pivot
                let mut best = (t, t);
                for r in t + 1..rows {
                    if !a[r][t].is_zero() && a[r][t].abs() < a[best.0][best.1].abs() {
                        best = (r, t);
                    }
                }
                for c in t + 1..cols {
                    if !a[t][c].is_zero() && a[t][c].abs() < a[best.0][best.1].abs() {
                        best = (t, c);
                    }
                }
                a.swap(t, best.0);
                swap_cols(&mut a, &mut v, t, best.1);
                continue;
            }
            // divisibility d_t | every remaining entry
            let bad_row = (t + 1..rows).find(|&r| {
                (t + 1..cols).any(|c| !a[r][c].is_zero() && !a[r][c].is_multiple_of(&a[t][t]))
            });
            match bad_row {
                Some(r) => {
                    let src = a[r].clone();
                    for (x, s) in a[t].iter_mut().zip(&src) {
                        *x += s;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
        }
        t += 1;
    }
    SmithForm {
        diagonal: (0..t).map(|i| a[i][i].clone()).collect(),
        col_transform: v,
    }
}
