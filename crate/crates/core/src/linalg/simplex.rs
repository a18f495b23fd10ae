//! Exact conical feasibility via phase-1 simplex.
//!
//! The single entry point answers: is a target vector a *nonnegative*
//! rational combination of given columns? This is the computational core
//! of every "does element e lie in a directed circuit" query, so it has to
//! be exact and deterministic:
//!
//! * arithmetic is arbitrary-precision rational — no tolerances anywhere,
//! * pivoting follows Bland's least-index rule, which both prevents
//!   cycling and fixes the returned coefficient vector deterministically.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::tu::Rational;

fn rat(v: i8) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Decide whether `target = Σ_j α_j · cols[j]` admits a solution with all
/// `α_j ≥ 0`, and return one exact coefficient vector if so.
///
/// All columns and the target must share one dimension. Infeasibility is
/// reported as `None`; the phase-1 optimum being zero is exactly conical
/// feasibility, so the answer is decisive in both directions.
pub fn conical_feasibility(cols: &[Vec<i8>], target: &[i8]) -> Option<Vec<Rational>> {
    let m = target.len();
    let n = cols.len();
    for (j, col) in cols.iter().enumerate() {
        assert_eq!(col.len(), m, "column {j} has wrong dimension");
    }

    // Tableau layout: columns 0..n are the requested coefficients,
    // n..n+m the artificial variables, and column n+m the right-hand
    // side. Rows are scaled so the right-hand side is nonnegative and the
    // artificial variables form a feasible starting basis.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = target[i] < 0;
        let mut row: Vec<Rational> = Vec::with_capacity(width);
        for col in cols {
            let v = rat(col[i]);
            row.push(if flip { -v } else { v });
        }
        for k in 0..m {
            row.push(if k == i { rat(1) } else { rat(0) });
        }
        row.push(rat(if flip { -target[i] } else { target[i] }));
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced-cost row for "minimise the sum of the artificials": with
    // the artificial basis, the reduced cost of column j is minus the
    // column sum, and the objective cell is minus the right-hand-side sum.
    let mut z: Vec<Rational> = vec![Rational::zero(); width];
    for row in &t {
        for (zj, v) in z.iter_mut().zip(row) {
            *zj -= v;
        }
    }
    for zj in &mut z[n..n + m] {
        *zj = Rational::zero();
    }

    // Bland: entering variable is the least index with negative reduced cost.
    while let Some(entering) = (0..n + m).find(|&j| z[j].is_negative()) {
        // Ratio test; ties broken by least basic-variable index (Bland).
        let mut leaving: Option<(usize, Rational)> = None;
        for (i, row) in t.iter().enumerate() {
            if !row[entering].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[entering];
            let better = match &leaving {
                None => true,
                Some((li, best)) => {
                    ratio < *best || (ratio == *best && basis[i] < basis[*li])
                }
            };
            if better {
                leaving = Some((i, ratio));
            }
        }
        let (pivot_row, _) = leaving
            .expect("phase-1 objective is bounded below; an unbounded ray is impossible");

        // Pivot.
        let scale = t[pivot_row][entering].clone();
        for v in &mut t[pivot_row] {
            *v /= &scale;
        }
        let prow = t[pivot_row].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == pivot_row || row[entering].is_zero() {
                continue;
            }
            let factor = row[entering].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                *v -= &factor * pv;
            }
        }
        if !z[entering].is_zero() {
            let factor = z[entering].clone();
            for (v, pv) in z.iter_mut().zip(&prow) {
                *v -= &factor * pv;
            }
        }
        basis[pivot_row] = entering;
    }

    // Objective cell holds minus the artificial sum at optimum.
    if z[width - 1].is_negative() {
        return None;
    }

    let mut alpha = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            alpha[b] = t[i][width - 1].clone();
        }
    }
    debug_assert!(resubstitutes(cols, target, &alpha), "coefficients must reproduce the target");
    Some(alpha)
}

/// Exact re-substitution check: `Σ α_j cols[j] == target`.
pub fn resubstitutes(cols: &[Vec<i8>], target: &[i8], alpha: &[Rational]) -> bool {
    if alpha.len() != cols.len() || alpha.iter().any(Signed::is_negative) {
        return false;
    }
    let m = target.len();
    for i in 0..m {
        let mut acc = Rational::zero();
        for (col, a) in cols.iter().zip(alpha) {
            if !a.is_zero() {
                acc += a * rat(col[i]);
            }
        }
        if acc != rat(target[i]) {
            return false;
        }
    }
    true
}
