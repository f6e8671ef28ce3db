//! Exact Gauss–Jordan elimination over a field.

use crate::error::{Error, Result};
use crate::scalar::Field;

struct Echelon<F> {
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

/// Reduced row echelon form of an augmented or plain matrix.
fn reduce<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> Echelon<F> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.clone() * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - f.clone() * p;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Echelon { rows, pivots }
}

/// Solves `matrix · x = rhs` exactly.
///
/// Returns `Ok(None)` for an inconsistent system. Underdetermined systems
/// yield the solution with every free variable set to zero.
pub fn solve_linear<F: Field>(matrix: &[Vec<F>], rhs: &[F]) -> Result<Option<Vec<F>>> {
    if matrix.len() != rhs.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} rows but {} right-hand sides",
            matrix.len(),
            rhs.len()
        )));
    }
    let ncols = matrix.first().map_or(0, Vec::len);
    if let Some(bad) = matrix.iter().find(|row| row.len() != ncols) {
        return Err(Error::DimensionMismatch(format!(
            "ragged matrix: row of length {} in a {ncols}-column system",
            bad.len()
        )));
    }
    let augmented = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let ech = reduce(augmented, ncols);
    // a pivot in the rhs column, or a zero row with nonzero rhs, means no solution
    let rank = ech.pivots.len();
    if ech.rows[rank..].iter().any(|row| !row[ncols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![F::zero(); ncols];
    for (row, &col) in ech.rows.iter().zip(&ech.pivots) {
        x[col] = row[ncols].clone();
    }
    Ok(Some(x))
}

/// Basis of the right kernel `{x : matrix · x = 0}`, one vector per free column.
pub fn nullspace<F: Field>(matrix: &[Vec<F>], ncols: usize) -> Result<Vec<Vec<F>>> {
    if let Some(bad) = matrix.iter().find(|row| row.len() != ncols) {
        return Err(Error::DimensionMismatch(format!(
            "row of length {} in a {ncols}-column matrix",
            bad.len()
        )));
    }
    let ech = reduce(matrix.to_vec(), ncols);
    let free = (0..ncols).filter(|c| !ech.pivots.contains(c));
    Ok(free
        .map(|f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &col) in ech.rows.iter().zip(&ech.pivots) {
                v[col] = -row[f].clone();
            }
            v
        })
        .collect())
}
