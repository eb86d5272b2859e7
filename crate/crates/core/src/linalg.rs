//! Dense complex LU with partial pivoting and a 1-norm condition estimate.

use faer::dyn_stack::{MemBuffer, MemStack};
use faer::linalg::lu::partial_pivoting::{factor, solve};
use faer::perm::PermRef;
use faer::{Conj, Mat, MatMut, MatRef, Par};
use num_complex::Complex64 as c64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix is singular (zero or non-finite pivot at {pivot})")]
    Singular { pivot: usize },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

/// Packed `LU = PA` factors; both triangles live in one matrix.
pub struct Lu {
    lu: Mat<c64>,
    fwd: Vec<usize>,
    bwd: Vec<usize>,
    norm1: f64,
}

pub fn one_norm(a: MatRef<'_, c64>) -> f64 {
    (0..a.ncols())
        .map(|j| a.col(j).iter().map(|v| v.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

impl Lu {
    /// Factors `a` in place (consumed).
    pub fn factor(mut a: Mat<c64>) -> Result<Self, LinalgError> {
        let (rows, cols) = a.shape();
        if rows != cols {
            return Err(LinalgError::NotSquare { rows, cols });
        }
        let norm1 = one_norm(a.as_ref());
        let mut fwd = vec![0usize; rows];
        let mut bwd = vec![0usize; rows];
        let par = Par::Seq;
        let mut buf = MemBuffer::new(factor::lu_in_place_scratch::<usize, c64>(rows, cols, par, Default::default()));
        factor::lu_in_place(
            a.as_mut(),
            &mut fwd,
            &mut bwd,
            par,
            MemStack::new(&mut buf),
            Default::default(),
        );
        for i in 0..rows {
            let d = a[(i, i)];
            if d.norm() == 0.0 || !d.norm().is_finite() {
                return Err(LinalgError::Singular { pivot: i });
            }
        }
        Ok(Self { lu: a, fwd, bwd, norm1 })
    }

    pub fn dim(&self) -> usize {
        self.lu.nrows()
    }

    fn perm(&self) -> PermRef<'_, usize> {
        PermRef::new_checked(&self.fwd, &self.bwd, self.fwd.len())
    }

    /// Overwrites `rhs` with `A⁻¹ rhs`.
    pub fn solve_in_place(&self, rhs: MatMut<'_, c64>) {
        let par = Par::Seq;
        let mut buf = MemBuffer::new(solve::solve_in_place_scratch::<usize, c64>(self.dim(), rhs.ncols(), par));
        solve::solve_in_place_with_conj(
            self.lu.as_ref(),
            self.lu.as_ref(),
            self.perm(),
            Conj::No,
            rhs,
            par,
            MemStack::new(&mut buf),
        );
    }

    /// Overwrites `rhs` with `A⁻ᴴ rhs`.
    pub fn solve_adjoint_in_place(&self, rhs: MatMut<'_, c64>) {
        let par = Par::Seq;
        let mut buf = MemBuffer::new(solve::solve_transpose_in_place_scratch::<usize, c64>(
            self.dim(),
            rhs.ncols(),
            par,
        ));
        solve::solve_transpose_in_place_with_conj(
            self.lu.as_ref(),
            self.lu.as_ref(),
            self.perm(),
            Conj::Yes,
            rhs,
            par,
            MemStack::new(&mut buf),
        );
    }

    pub fn solve(&self, rhs: MatRef<'_, c64>) -> Mat<c64> {
        let mut x = rhs.to_owned();
        self.solve_in_place(x.as_mut());
        x
    }

    pub fn inverse(&self) -> Mat<c64> {
        let n = self.dim();
        let mut x = Mat::<c64>::identity(n, n);
        self.solve_in_place(x.as_mut());
        x
    }

    /// Hager–Higham estimate of `‖A‖₁ ‖A⁻¹‖₁`.
    pub fn condition_estimate(&self) -> f64 {
        let n = self.dim();
        if n == 0 {
            return 1.0;
        }
        let mut x = Mat::<c64>::from_fn(n, 1, |_, _| c64::new(1.0 / n as f64, 0.0));
        let mut est = 0.0f64;
        for iter in 0..5 {
            let mut y = x.clone();
            self.solve_in_place(y.as_mut());
            let norm: f64 = y.col(0).iter().map(|v| v.norm()).sum();
            if iter > 0 && norm <= est {
                break;
            }
            est = norm;
            let mut z = Mat::<c64>::from_fn(n, 1, |i, _| {
                let v = y[(i, 0)];
                if v.norm() == 0.0 {
                    c64::new(1.0, 0.0)
                } else {
                    v / v.norm()
                }
            });
            self.solve_adjoint_in_place(z.as_mut());
            let (jmax, zmax) = (0..n)
                .map(|i| (i, z[(i, 0)].norm()))
                .fold((0, -1.0), |acc, v| if v.1 > acc.1 { v } else { acc });
            let ztx: f64 = (0..n).map(|i| (z[(i, 0)].conj() * x[(i, 0)]).re).sum();
            if iter > 0 && zmax <= ztx {
                break;
            }
            x = Mat::<c64>::zeros(n, 1);
            x[(jmax, 0)] = c64::new(1.0, 0.0);
        }
        est * self.norm1
    }
}

/// Inverse of a small dense matrix together with its exact 1-norm condition number.
pub fn inverse_with_condition(a: &Mat<c64>) -> Result<(Mat<c64>, f64), LinalgError> {
    let lu = Lu::factor(a.clone())?;
    let inv = lu.inverse();
    let cond = one_norm(a.as_ref()) * one_norm(inv.as_ref());
    if !cond.is_finite() {
        return Err(LinalgError::Singular { pivot: 0 });
    }
    Ok((inv, cond))
}
