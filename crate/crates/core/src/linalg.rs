//! Dense linear algebra over the prime field Z_p.
//!
//! Matrices are plain row-major `Vec<Vec<u32>>` with every entry in `[0, p)`.
//! Sizes here are tiny (at most a few thousand columns) so nothing is blocked
//! or vectorized.

use crate::error::{Error, Result};

#[inline]
pub fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

#[inline]
pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub fn neg_mod(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn pow_mod(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p` (Fermat).
pub fn inv_mod(a: u32, p: u32) -> Result<u32> {
    if a.is_multiple_of(p) {
        return Err(Error::DivisionByZero);
    }
    Ok(pow_mod(a, p as u64 - 2, p))
}

/// Reduces `m` to reduced row echelon form in place and returns the pivot
/// column of each nonzero row, in order.
pub fn rref(m: &mut [Vec<u32>], p: u32) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(sel) = (row..rows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(row, sel);
        let inv = inv_mod(m[row][col], p).expect("pivot is nonzero");
        for x in m[row].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = m[row].clone();
        for (i, other) in m.iter_mut().enumerate() {
            if i == row || other[col] == 0 {
                continue;
            }
            let factor = other[col];
            for (x, &y) in other.iter_mut().zip(&pivot_row).skip(col) {
                *x = sub_mod(*x, mul_mod(factor, y, p), p);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<u32>], p: u32) -> usize {
    let mut work = m.to_vec();
    rref(&mut work, p).len()
}

/// Inverse of a square matrix, or `SingularBasis` when it has none.
pub fn inverse(m: &[Vec<u32>], p: u32) -> Result<Vec<Vec<u32>>> {
    let n = m.len();
    let mut aug: Vec<Vec<u32>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.iter().map(|&x| x % p).collect::<Vec<_>>();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    let pivots = rref(&mut aug, p);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::SingularBasis);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn transpose(m: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j]).collect())
        .collect()
}

pub fn mat_vec(m: &[Vec<u32>], v: &[u32], p: u32) -> Vec<u32> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p as u64) as u32
        })
        .collect()
}

/// A nonzero solution of `m · x = 0`, chosen deterministically: the first
/// free column is set to 1, the remaining free columns to 0, and the result is
/// scaled so that its first nonzero entry is 1.
pub fn null_vector(m: &[Vec<u32>], cols: usize, p: u32) -> Option<Vec<u32>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work, p);
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut x = vec![0u32; cols];
    x[free] = 1;
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = neg_mod(work[row][free], p);
    }
    let lead = *x.iter().find(|&&v| v != 0).expect("free entry is 1");
    let scale = inv_mod(lead, p).expect("nonzero lead");
    for v in &mut x {
        *v = mul_mod(*v, scale, p);
    }
    Some(x)
}
