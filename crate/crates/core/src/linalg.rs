//! Dense Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::rational::{one, Q};
use crate::{Error, Result};

pub type Matrix = Vec<Vec<Q>>;

/// Reduced row echelon form together with the pivot columns.
pub fn rref(mut m: Matrix) -> (Matrix, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m.clone()).1.len()
}

/// Solves `a x = b`, setting free variables to zero. `None` if inconsistent.
pub fn solve(a: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    let cols = a.first().map_or(0, Vec::len);
    let aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = red[r][cols].clone();
    }
    Some(x)
}

/// Solves `a x = b` for a square nonsingular `a`.
pub fn solve_unique(a: &Matrix, b: &[Q]) -> Result<Vec<Q>> {
    if rank(a) != a.len() || a.iter().any(|r| r.len() != a.len()) {
        return Err(Error::Singular(format!("{}x{} system", a.len(), a.len())));
    }
    solve(a, b).ok_or_else(|| Error::Singular("inconsistent system".into()))
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// A basis of the span of the given vectors, in echelon form.
pub fn span_basis(vectors: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let (red, pivots) = rref(vectors.to_vec());
    red.into_iter().take(pivots.len()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn solves_square_system() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve_unique(&a, &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![frac(4, 5), frac(7, 5)]);
    }

    #[test]
    fn singular_is_rejected() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(solve_unique(&a, &[int(1), int(2)]).is_err());
        assert!(solve(&a, &[int(1), int(3)]).is_none());
        assert_eq!(solve(&a, &[int(1), int(2)]).unwrap(), vec![int(1), int(0)]);
    }

    #[test]
    fn span_of_dependent_vectors() {
        let v = m(&[&[1, 0, 1], &[2, 0, 2], &[0, 1, 1]]);
        assert_eq!(span_basis(&v).len(), 2);
    }
}
