//! Exact linear algebra over a [`Field`], plus the integer signature.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational, Scalar};

/// Incremental row echelon form: rows are reduced against the pivots
/// found so far, so a tall system never has to be held in memory.
pub struct RowEchelon {
    field: Field,
    ncols: usize,
    /// (pivot column, row normalized so the pivot is 1)
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl RowEchelon {
    pub fn new(field: &Field, ncols: usize) -> Self {
        RowEchelon { field: field.clone(), ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn push(&mut self, mut row: Vec<Scalar>) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        if self.rows.len() == self.ncols {
            return false;
        }
        for (col, piv) in &self.rows {
            if row[*col].is_zero() {
                continue;
            }
            let c = row[*col].clone();
            for (r, p) in row.iter_mut().zip(piv) {
                if !p.is_zero() {
                    *r = &*r - &(&c * p);
                }
            }
        }
        let Some(col) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[col].inv().expect("nonzero pivot");
        for r in row.iter_mut() {
            if !r.is_zero() {
                *r = &*r * &inv;
            }
        }
        // keep earlier pivot rows reduced in the new column
        for (_, piv) in self.rows.iter_mut() {
            if piv[col].is_zero() {
                continue;
            }
            let c = piv[col].clone();
            for (p, r) in piv.iter_mut().zip(&row) {
                if !r.is_zero() {
                    *p = &*p - &(&c * r);
                }
            }
        }
        self.rows.push((col, row));
        true
    }

    /// A basis of the solution space of the homogeneous system.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.ncols];
        for (c, _) in &self.rows {
            is_pivot[*c] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![self.field.zero(); self.ncols];
                v[free] = self.field.one();
                for (c, row) in &self.rows {
                    v[*c] = row[free].neg();
                }
                v
            })
            .collect()
    }
}

/// Inverse of a square matrix given as rows.
pub fn inverse(field: &Field, m: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
        a.swap(col, p);
        let inv = a[col][col].inv()?;
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&c * p);
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Signature of a symmetric integer matrix by congruence diagonalization,
/// using 2×2 blocks when every remaining diagonal entry vanishes.
pub fn signature(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut sig = 0i64;
    while !alive.is_empty() {
        if let Some(pos) = alive.iter().position(|&k| !a[k][k].is_zero()) {
            let k = alive.remove(pos);
            let d = a[k][k].clone();
            sig += d.signum() as i64;
            let dinv = d.recip().expect("nonzero");
            for &i in &alive {
                let f = a[i][k].mul(&dinv);
                if f.is_zero() {
                    continue;
                }
                for &j in &alive {
                    a[i][j] = a[i][j].sub(&f.mul(&a[k][j]));
                }
            }
            continue;
        }
        let pair = alive
            .iter()
            .enumerate()
            .find_map(|(x, &i)| alive[x + 1..].iter().find(|&&j| !a[i][j].is_zero()).map(|&j| (i, j)));
        let Some((p, q)) = pair else { break };
        // the block [[0,b],[b,0]] has one positive and one negative eigenvalue
        let binv = a[p][q].recip().expect("nonzero");
        alive.retain(|&k| k != p && k != q);
        for &i in &alive {
            for &j in &alive {
                // subtract [a_ip a_iq] E⁻¹ [a_pj a_qj]ᵀ with E⁻¹ = [[0,1/b],[1/b,0]]
                let t = a[i][p].mul(&a[q][j]).add(&a[i][q].mul(&a[p][j])).mul(&binv);
                a[i][j] = a[i][j].sub(&t);
            }
        }
    }
    sig
}
