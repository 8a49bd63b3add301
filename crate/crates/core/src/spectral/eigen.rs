use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Imaginary parts at or below this are treated as rounding noise.
pub const IMAG_TRUNCATION: f64 = 1e-8;

/// All eigenvalues of a symmetric matrix, sorted descending.
///
/// Symmetry is checked exactly; callers building floating-point matrices must
/// fill `(i, j)` and `(j, i)` from the same expression.
pub fn sym_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let n = m.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            if m[(i, j)] != m[(j, i)] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut eigs: Vec<f64> = SymmetricEigen::new(m.clone()).eigenvalues.iter().copied().collect();
    sort_descending(&mut eigs);
    Ok(eigs)
}

pub fn sym_eigenvalues_int(m: &IntMatrix) -> Result<Vec<f64>> {
    if let Some((row, col)) = m.asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    sym_eigenvalues(&m.to_f64())
}

/// Eigenvalues of a small general real matrix whose spectrum is known to be
/// real. Imaginary parts up to [`IMAG_TRUNCATION`] are dropped silently,
/// larger ones are dropped with a warning.
pub fn real_eigenvalues_general(m: &DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let mut eigs: Vec<f64> = m
        .clone()
        .complex_eigenvalues()
        .iter()
        .map(|z| {
            if z.im.abs() > IMAG_TRUNCATION {
                log::warn!("discarding imaginary part {:e} of eigenvalue {}", z.im, z.re);
            }
            z.re
        })
        .collect();
    sort_descending(&mut eigs);
    eigs
}

pub(crate) fn sort_descending(v: &mut [f64]) {
    v.sort_by(|a, b| b.total_cmp(a));
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn small_known_spectra() {
        let k2 = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let e = sym_eigenvalues_int(&k2).unwrap();
        assert_abs_diff_eq!(e[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e[1], -1.0, epsilon = 1e-14);

        let p3 = IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let e = sym_eigenvalues_int(&p3).unwrap();
        let s3 = 3f64.sqrt();
        for (got, want) in e.iter().zip([1.0 + s3, 1.0 - s3, -2.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0 + 1e-15, 0.0]);
        assert!(matches!(sym_eigenvalues(&m), Err(Error::NotSymmetric { .. })));
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![2, 0]]).unwrap();
        assert!(sym_eigenvalues_int(&m).is_err());
    }

    #[test]
    fn general_solver_on_real_spectrum() {
        // similar to diag(3, 1, -2) via an upper-triangular change of basis
        let m = DMatrix::from_row_slice(3, 3, &[3.0, 2.0, 1.0, 0.0, 1.0, 5.0, 0.0, 0.0, -2.0]);
        let e = real_eigenvalues_general(&m);
        for (got, want) in e.iter().zip([3.0, 1.0, -2.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }
}
