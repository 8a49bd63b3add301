use nalgebra::DMatrix;

use crate::error::{Error, Result};

use super::eigen::{real_eigenvalues_general, sym_eigenvalues};
use super::spectrum::Spectrum;

/// A block matrix whose `(i, j)` block is `s[i][j] * J` off the diagonal and
/// `s[i][i] * J + p[i] * I` on it, with block sizes `sizes`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientSpec {
    sizes: Vec<usize>,
    s: Vec<Vec<f64>>,
    p: Vec<f64>,
}

impl QuotientSpec {
    pub fn new(sizes: Vec<usize>, s: Vec<Vec<f64>>, p: Vec<f64>) -> Result<Self> {
        let k = sizes.len();
        if s.len() != k || s.iter().any(|row| row.len() != k) {
            return Err(Error::NotSquare {
                rows: s.len(),
                cols: s.first().map_or(0, Vec::len),
            });
        }
        if p.len() != k {
            return Err(Error::Param {
                name: "p".into(),
                reason: format!("expected {k} diagonal shifts, got {}", p.len()),
            });
        }
        if let Some(i) = sizes.iter().position(|&n| n == 0) {
            return Err(Error::Param {
                name: "sizes".into(),
                reason: format!("block {i} is empty"),
            });
        }
        Ok(Self { sizes, s, p })
    }

    /// Block pattern with no diagonal shift.
    pub fn without_shift(sizes: Vec<usize>, s: Vec<Vec<f64>>) -> Result<Self> {
        let k = sizes.len();
        Self::new(sizes, s, vec![0.0; k])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    fn is_symmetric_pattern(&self) -> bool {
        let k = self.sizes.len();
        (0..k).all(|i| (0..k).all(|j| self.s[i][j] == self.s[j][i]))
    }

    /// `q_ij = s_ij n_j` plus `p_i` on the diagonal.
    pub fn quotient_matrix(&self) -> DMatrix<f64> {
        let k = self.sizes.len();
        DMatrix::from_fn(k, k, |i, j| {
            let base = self.s[i][j] * self.sizes[j] as f64;
            if i == j {
                base + self.p[i]
            } else {
                base
            }
        })
    }

    /// Eigenvalues of the quotient matrix, descending. A symmetric pattern is
    /// diagonalised through the similar matrix `s_ij sqrt(n_i n_j)`.
    pub fn quotient_eigenvalues(&self) -> Vec<f64> {
        let k = self.sizes.len();
        if self.is_symmetric_pattern() {
            let b = DMatrix::from_fn(k, k, |i, j| {
                let (lo, hi) = (i.min(j), i.max(j));
                let base = self.s[lo][hi] * ((self.sizes[lo] * self.sizes[hi]) as f64).sqrt();
                if i == j {
                    base + self.p[i]
                } else {
                    base
                }
            });
            sym_eigenvalues(&b).expect("symmetric by construction")
        } else {
            real_eigenvalues_general(&self.quotient_matrix())
        }
    }

    /// Full spectrum: the quotient eigenvalues plus `p_i` with multiplicity `n_i - 1`.
    pub fn spectrum(&self) -> Spectrum {
        let mut pairs: Vec<(f64, usize)> = self.quotient_eigenvalues().into_iter().map(|v| (v, 1)).collect();
        pairs.extend(
            self.sizes
                .iter()
                .zip(&self.p)
                .filter(|(&n, _)| n > 1)
                .map(|(&n, &p)| (p, n - 1)),
        );
        Spectrum::from_pairs(&pairs)
    }

    /// The full block matrix.
    pub fn expand(&self) -> DMatrix<f64> {
        let block: Vec<usize> = self
            .sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat_n(i, n))
            .collect();
        let n = block.len();
        DMatrix::from_fn(n, n, |a, b| {
            let (i, j) = (block[a], block[b]);
            let v = self.s[i][j];
            if a == b {
                v + self.p[i]
            } else {
                v
            }
        })
    }
}

/// Full spectrum of the block matrix described by `spec`.
pub fn quotient_spectrum(spec: &QuotientSpec) -> Spectrum {
    spec.spectrum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn complete_multipartite_adjacency() {
        // K_{2,3}: s = [[0,1],[1,0]]
        let q = QuotientSpec::without_shift(vec![2, 3], vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let s = q.spectrum();
        let r6 = 6f64.sqrt();
        let want = Spectrum::from_pairs(&[(r6, 1), (0.0, 3), (-r6, 1)]);
        assert!(s.max_deviation(&want).unwrap() < 1e-12);
    }

    #[test]
    fn matches_expanded_matrix() {
        let s = vec![
            vec![1.0, 2.0, 0.0],
            vec![2.0, -1.0, 3.0],
            vec![0.0, 3.0, 0.5],
        ];
        let q = QuotientSpec::new(vec![1, 3, 2], s, vec![0.0, -2.0, 4.0]).unwrap();
        let direct = Spectrum::from_values(&sym_eigenvalues(&q.expand()).unwrap());
        assert!(q.spectrum().max_deviation(&direct).unwrap() < 1e-10);
    }

    #[test]
    fn asymmetric_pattern_uses_general_solver() {
        // quotient [[0, 2*3], [1*1, 0]] has eigenvalues ±sqrt(6)
        let q = QuotientSpec::without_shift(vec![1, 3], vec![vec![0.0, 2.0], vec![1.0, 0.0]]).unwrap();
        let e = q.quotient_eigenvalues();
        assert_abs_diff_eq!(e[0], 6f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(e[1], -(6f64.sqrt()), epsilon = 1e-12);
    }

    #[test]
    fn validation() {
        assert!(QuotientSpec::without_shift(vec![1, 2], vec![vec![0.0]]).is_err());
        assert!(QuotientSpec::without_shift(vec![0], vec![vec![0.0]]).is_err());
        assert!(QuotientSpec::new(vec![1], vec![vec![0.0]], vec![]).is_err());
    }
}
