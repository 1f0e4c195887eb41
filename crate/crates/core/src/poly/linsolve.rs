use alloc::vec::Vec;

use num_traits::Zero;

use super::Rational;

/// Solves `A x = b` exactly by Gauss–Jordan elimination.
///
/// Returns `None` when the system is inconsistent or the solution is not
/// unique (rank below the number of unknowns).
pub fn solve_exact(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(cols);
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            return None;
        };
        a.swap(pivot_row, p);
        b.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for x in a[pivot_row].iter_mut() {
            *x *= &inv;
        }
        b[pivot_row] *= &inv;
        for r in 0..rows {
            if r == pivot_row || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..cols {
                let delta = &factor * &a[pivot_row][c];
                a[r][c] -= delta;
            }
            let delta = &factor * &b[pivot_row];
            b[r] -= delta;
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    // Remaining rows must be consistent (all-zero left side).
    if b[pivot_row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(pivots.into_iter().map(|r| b[r].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use alloc::vec;

    #[test]
    fn solves_overdetermined_consistent_system() {
        // x + y = 3, x - y = 1, 2x = 4
        let a = vec![
            vec![rat(1, 1), rat(1, 1)],
            vec![rat(1, 1), rat(-1, 1)],
            vec![rat(2, 1), rat(0, 1)],
        ];
        let b = vec![rat(3, 1), rat(1, 1), rat(4, 1)];
        assert_eq!(solve_exact(a, b).unwrap(), vec![rat(2, 1), rat(1, 1)]);
    }

    #[test]
    fn rejects_inconsistent_and_singular() {
        let a = vec![vec![rat(1, 1)], vec![rat(1, 1)]];
        assert!(solve_exact(a, vec![rat(1, 1), rat(2, 1)]).is_none());
        let a = vec![vec![rat(1, 1), rat(1, 1)]];
        assert!(solve_exact(a, vec![rat(1, 1)]).is_none());
    }
}

/// Some solution of `A x = b` (free unknowns set to zero), or `None` if inconsistent.
pub fn solve_particular(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut x = alloc::vec![Rational::zero(); cols];
    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, p);
        b.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for v in a[pivot_row].iter_mut() {
            *v *= &inv;
        }
        b[pivot_row] *= &inv;
        for r in 0..rows {
            if r == pivot_row || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..cols {
                let delta = &factor * &a[pivot_row][c];
                a[r][c] -= delta;
            }
            let delta = &factor * &b[pivot_row];
            b[r] -= delta;
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    if b[pivot_row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = b[r].clone();
    }
    Some(x)
}
