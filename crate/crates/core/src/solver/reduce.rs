use faer::Mat;
use num_complex::Complex64 as c64;

use super::SolveError;
use crate::geometry::{Connection, CrossSection};
use crate::linalg::Lu;

fn check_square(z: &Mat<c64>) -> Result<usize, SolveError> {
    if z.nrows() != z.ncols() {
        return Err(SolveError::Dimension(format!(
            "expected square matrix, got {}x{}",
            z.nrows(),
            z.ncols()
        )));
    }
    Ok(z.nrows())
}

/// Loop impedances with conductor `reference` as common return:
/// `Z̃_pq = Z_pq − Z_p,ref − Z_ref,q + Z_ref,ref` over the remaining indices.
pub fn reference_reduce(z: &Mat<c64>, reference: usize) -> Result<Mat<c64>, SolveError> {
    let p = check_square(z)?;
    if p < 2 || reference >= p {
        return Err(SolveError::InvalidReference(reference));
    }
    let keep: Vec<usize> = (0..p).filter(|&i| i != reference).collect();
    let r = reference;
    Ok(Mat::from_fn(p - 1, p - 1, |i, j| {
        let (a, b) = (keep[i], keep[j]);
        z[(a, b)] - z[(a, r)] - z[(r, b)] + z[(r, r)]
    }))
}

/// Eliminates the `grounded` indices (zero voltage) by Schur complement:
/// `Z_kk − Z_kg Z_gg⁻¹ Z_gk`. Kept indices stay in ascending order.
pub fn kron_reduce(z: &Mat<c64>, grounded: &[usize]) -> Result<Mat<c64>, SolveError> {
    let p = check_square(z)?;
    let mut is_grounded = vec![false; p];
    for &g in grounded {
        if g >= p {
            return Err(SolveError::Dimension(format!("grounded index {g} >= {p}")));
        }
        is_grounded[g] = true;
    }
    let kept: Vec<usize> = (0..p).filter(|&i| !is_grounded[i]).collect();
    let gnd: Vec<usize> = (0..p).filter(|&i| is_grounded[i]).collect();
    if kept.is_empty() {
        return Err(SolveError::Dimension("at least one conductor must be kept".into()));
    }
    let zkk = Mat::from_fn(kept.len(), kept.len(), |i, j| z[(kept[i], kept[j])]);
    if gnd.is_empty() {
        return Ok(zkk);
    }
    let zgg = Mat::from_fn(gnd.len(), gnd.len(), |i, j| z[(gnd[i], gnd[j])]);
    let zgk = Mat::from_fn(gnd.len(), kept.len(), |i, j| z[(gnd[i], kept[j])]);
    let zkg = Mat::from_fn(kept.len(), gnd.len(), |i, j| z[(kept[i], gnd[j])]);
    let lu = Lu::factor(zgg).map_err(|_| SolveError::GroundedSingular)?;
    if !(lu.condition_estimate() < super::CONDITION_FAIL) {
        return Err(SolveError::GroundedSingular);
    }
    let x = lu.solve(zgk.as_ref());
    Ok(zkk - zkg * x)
}

/// Impedance seen by the kept conductors when every grounded conductor is
/// bonded to the same zero-voltage return and carries the return current.
#[derive(Debug, Clone)]
pub struct GroundedReduction {
    pub z: Mat<c64>,
    /// Cross-section indices of the rows/columns of `z`.
    pub kept: Vec<usize>,
    /// Grounded conductor used as voltage reference.
    pub reference: Option<usize>,
}

/// Takes the first grounded conductor as reference (so the common-mode gauge
/// of the partial matrix cancels), then Kron-eliminates the other grounded ones.
/// Without grounded conductors the partial matrix is returned unchanged.
pub fn reduce_grounded(z: &Mat<c64>, cs: &CrossSection) -> Result<GroundedReduction, SolveError> {
    let p = check_square(z)?;
    if p != cs.len() {
        return Err(SolveError::Dimension(format!(
            "impedance is {p}x{p} but the cross-section has {} conductors",
            cs.len()
        )));
    }
    let grounded = cs.indices_with(Connection::Grounded);
    let kept = cs.indices_with(Connection::Kept);
    let Some(&reference) = grounded.first() else {
        return Ok(GroundedReduction {
            z: z.clone(),
            kept,
            reference: None,
        });
    };
    let loop_z = reference_reduce(z, reference)?;
    // indices in loop_z skip `reference`
    let shift = |i: usize| if i > reference { i - 1 } else { i };
    let others: Vec<usize> = grounded[1..].iter().map(|&g| shift(g)).collect();
    Ok(GroundedReduction {
        z: kron_reduce(&loop_z, &others)?,
        kept,
        reference: Some(reference),
    })
}

/// Positive- and zero-sequence impedances `(s − m, s + 2m)` of a 3×3 phase
/// matrix, `s` and `m` being the mean self and mutual terms.
pub fn sequence_impedances(z3: &Mat<c64>) -> Result<(c64, c64), SolveError> {
    if z3.nrows() != 3 || z3.ncols() != 3 {
        return Err(SolveError::Dimension(format!(
            "sequence impedances need a 3x3 matrix, got {}x{}",
            z3.nrows(),
            z3.ncols()
        )));
    }
    let s = (z3[(0, 0)] + z3[(1, 1)] + z3[(2, 2)]) / 3.0;
    let m = (z3[(0, 1)] + z3[(0, 2)] + z3[(1, 0)] + z3[(1, 2)] + z3[(2, 0)] + z3[(2, 1)]) / 6.0;
    Ok((s - m, s + 2.0 * m))
}
