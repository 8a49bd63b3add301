use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One distinct eigenvalue with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigen {
    pub value: f64,
    pub mult: usize,
}

/// Counts of positive, zero and negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_zero: usize, n_minus: usize) -> Self {
        Self {
            n_plus,
            n_zero,
            n_minus,
        }
    }

    pub fn total(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.n_plus, self.n_zero, self.n_minus]
    }
}

impl Serialize for Inertia {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_array().serialize(s)
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_zero, self.n_minus)
    }
}

/// Distinct eigenvalues in strictly decreasing order with multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigs: Vec<Eigen>,
    order: usize,
}

/// Default grouping tolerance: `1e-6 * max(1, max |λ|)`.
pub fn default_tol<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    1e-6 * values.into_iter().fold(1.0_f64, |acc, v| acc.max(v.abs()))
}

/// Groups an eigenvalue list: after sorting descending, runs of consecutive
/// values within `tol` of their neighbour merge into one entry whose value is
/// the run's mean.
pub fn group_spectrum(eigs: &[f64], tol: f64) -> Spectrum {
    let pairs: Vec<(f64, usize)> = eigs.iter().map(|&v| (v, 1)).collect();
    group_pairs(pairs, tol)
}

fn group_pairs(mut pairs: Vec<(f64, usize)>, tol: f64) -> Spectrum {
    pairs.retain(|&(_, m)| m > 0);
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut eigs: Vec<Eigen> = Vec::new();
    let mut last = f64::NAN;
    let mut sum = 0.0;
    for (v, m) in pairs {
        match eigs.last_mut() {
            Some(e) if (last - v).abs() <= tol => {
                sum += v * m as f64;
                e.mult += m;
                e.value = sum / e.mult as f64;
            }
            _ => {
                sum = v * m as f64;
                eigs.push(Eigen { value: v, mult: m });
            }
        }
        last = v;
    }
    let order = eigs.iter().map(|e| e.mult).sum();
    Spectrum { eigs, order }
}

impl Spectrum {
    /// Groups raw eigenvalues with [`default_tol`].
    pub fn from_values(values: &[f64]) -> Self {
        group_spectrum(values, default_tol(values.iter().copied()))
    }

    /// Builds a spectrum from `(value, multiplicity)` pairs in any order,
    /// merging equal values under [`default_tol`].
    pub fn from_pairs(pairs: &[(f64, usize)]) -> Self {
        let tol = default_tol(pairs.iter().map(|p| p.0));
        group_pairs(pairs.to_vec(), tol)
    }

    pub fn empty() -> Self {
        Self {
            eigs: Vec::new(),
            order: 0,
        }
    }

    pub fn eigs(&self) -> &[Eigen] {
        &self.eigs
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// All eigenvalues with repetition, descending.
    pub fn values(&self) -> Vec<f64> {
        self.eigs
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.mult))
            .collect()
    }

    pub fn trace(&self) -> f64 {
        self.eigs.iter().map(|e| e.value * e.mult as f64).sum()
    }

    /// `Σ λ²`, which equals the squared Frobenius norm of a symmetric source matrix.
    pub fn second_moment(&self) -> f64 {
        self.eigs.iter().map(|e| e.value * e.value * e.mult as f64).sum()
    }

    pub fn energy(&self) -> f64 {
        self.eigs.iter().map(|e| e.value.abs() * e.mult as f64).sum()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigs.iter().fold(0.0, |acc, e| acc.max(e.value.abs()))
    }

    pub fn largest(&self) -> f64 {
        self.eigs.first().map_or(f64::NAN, |e| e.value)
    }

    pub fn least_eigenvalue(&self) -> f64 {
        self.eigs.last().map_or(f64::NAN, |e| e.value)
    }

    /// Inertia with `|λ| <= tol` counted as zero.
    pub fn inertia(&self, tol: f64) -> Inertia {
        let mut out = Inertia::new(0, 0, 0);
        for e in &self.eigs {
            if e.value > tol {
                out.n_plus += e.mult;
            } else if e.value < -tol {
                out.n_minus += e.mult;
            } else {
                out.n_zero += e.mult;
            }
        }
        out
    }

    /// Inertia at tolerance `1e-8 * max(1, ρ)`.
    pub fn inertia_default(&self) -> Inertia {
        self.inertia(1e-8 * self.spectral_radius().max(1.0))
    }

    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.eigs
            .iter()
            .filter(|e| (e.value - value).abs() <= tol)
            .map(|e| e.mult)
            .sum()
    }

    /// Multiset union.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let pairs: Vec<(f64, usize)> = self
            .eigs
            .iter()
            .chain(other.eigs.iter())
            .map(|e| (e.value, e.mult))
            .collect();
        Self::from_pairs(&pairs)
    }

    pub fn scaled(&self, factor: f64) -> Spectrum {
        let pairs: Vec<(f64, usize)> = self.eigs.iter().map(|e| (e.value * factor, e.mult)).collect();
        Self::from_pairs(&pairs)
    }

    pub fn mapped(&self, f: impl Fn(f64) -> f64) -> Spectrum {
        let pairs: Vec<(f64, usize)> = self.eigs.iter().map(|e| (f(e.value), e.mult)).collect();
        Self::from_pairs(&pairs)
    }

    /// Removes one copy of the eigenvalue closest to `value`, which must lie within `tol`.
    pub fn without_one(&self, value: f64, tol: f64) -> Result<Spectrum> {
        let idx = self
            .eigs
            .iter()
            .enumerate()
            .filter(|(_, e)| (e.value - value).abs() <= tol)
            .min_by(|a, b| (a.1.value - value).abs().total_cmp(&(b.1.value - value).abs()))
            .map(|(i, _)| i)
            .ok_or_else(|| Error::SpectrumMismatch(format!("{value} is not an eigenvalue")))?;
        let mut eigs = self.eigs.clone();
        eigs[idx].mult -= 1;
        eigs.retain(|e| e.mult > 0);
        Ok(Spectrum {
            eigs,
            order: self.order - 1,
        })
    }

    /// Largest absolute difference between the sorted expanded eigenvalue
    /// lists, or `None` when the orders differ.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        (self.order == other.order).then(|| {
            self.values()
                .iter()
                .zip(other.values())
                .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()))
        })
    }

    pub fn report(&self) -> SpectrumReport {
        SpectrumReport {
            order: self.order,
            eigs: self.eigs.clone(),
            energy: self.energy(),
            rho: self.spectral_radius(),
            xi: self.least_eigenvalue(),
            inertia: self.inertia_default(),
        }
    }
}

/// JSON spectrum report.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub order: usize,
    pub eigs: Vec<Eigen>,
    pub energy: f64,
    pub rho: f64,
    pub xi: f64,
    pub inertia: Inertia,
}

pub fn energy(s: &Spectrum) -> f64 {
    s.energy()
}

pub fn spectral_radius(s: &Spectrum) -> f64 {
    s.spectral_radius()
}

pub fn least_eigenvalue(s: &Spectrum) -> f64 {
    s.least_eigenvalue()
}

pub fn inertia(s: &Spectrum, tol: f64) -> Inertia {
    s.inertia(tol)
}

/// Spectrum of `A ⊗ B` from the spectra of `A` and `B`: all pairwise products.
pub fn kronecker_spectrum(a: &Spectrum, b: &Spectrum) -> Spectrum {
    let pairs: Vec<(f64, usize)> = a
        .eigs()
        .iter()
        .flat_map(|x| b.eigs().iter().map(move |y| (x.value * y.value, x.mult * y.mult)))
        .collect();
    Spectrum::from_pairs(&pairs)
}

/// Adjacency spectrum of the complement of an `r`-regular graph on `n`
/// vertices: one copy of `r` becomes `n - r - 1`, every other `λ` becomes `-(λ + 1)`.
pub fn complement_regular_spectrum(n: usize, r: usize, adj: &Spectrum) -> Result<Spectrum> {
    if adj.order() != n {
        return Err(Error::SpectrumMismatch(format!(
            "spectrum has {} eigenvalues, expected {n}",
            adj.order()
        )));
    }
    let rest = adj.without_one(r as f64, 1e-6 * (r as f64).max(1.0))?;
    let mut pairs: Vec<(f64, usize)> = rest.eigs().iter().map(|e| (-(e.value + 1.0), e.mult)).collect();
    pairs.push(((n - r - 1) as f64, 1));
    Ok(Spectrum::from_pairs(&pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn assert_spec(s: &Spectrum, want: &[(f64, usize)]) {
        assert_eq!(s.eigs().len(), want.len(), "{s:?}");
        for (e, &(v, m)) in s.eigs().iter().zip(want) {
            assert_abs_diff_eq!(e.value, v, epsilon = 1e-9);
            assert_eq!(e.mult, m);
        }
    }

    #[test]
    fn grouping() {
        let s = group_spectrum(&[2.0, 2.0 - 1e-12, -2.0, -2.0], 1e-6);
        assert_spec(&s, &[(2.0, 2), (-2.0, 2)]);
        let s = group_spectrum(&[3.0, 1.0, 0.0, -4.0], 1e-6);
        assert_eq!(s.values(), vec![3.0, 1.0, 0.0, -4.0]);
        assert_eq!(s.order(), 4);
        // unsorted input is sorted first
        let s = group_spectrum(&[-1.0, 5.0, -1.0], 1e-6);
        assert_spec(&s, &[(5.0, 1), (-1.0, 2)]);
    }

    #[test]
    fn scalars() {
        let s = Spectrum::from_values(&[4.0, 1.0, -1.0, -4.0]);
        assert_abs_diff_eq!(s.energy(), 10.0);
        assert_abs_diff_eq!(s.spectral_radius(), 4.0);
        assert_abs_diff_eq!(s.least_eigenvalue(), -4.0);
        assert_eq!(s.inertia(1e-9), Inertia::new(2, 0, 2));
        let c6 = Spectrum::from_pairs(&[(3.0, 3), (-3.0, 3)]);
        assert_abs_diff_eq!(c6.energy(), 18.0);
        let k2 = Spectrum::from_values(&[1.0, -1.0]);
        assert_abs_diff_eq!(k2.energy(), 2.0);
        assert_abs_diff_eq!(k2.spectral_radius(), 1.0);
        let s3 = 3f64.sqrt();
        let p3 = Spectrum::from_values(&[1.0 + s3, 1.0 - s3, -2.0]);
        assert_eq!(p3.inertia_default(), Inertia::new(1, 0, 2));
    }

    #[test]
    fn kronecker() {
        let c6 = Spectrum::from_pairs(&[(3.0, 3), (-3.0, 3)]);
        let j2 = Spectrum::from_pairs(&[(2.0, 1), (0.0, 1)]);
        assert_spec(&kronecker_spectrum(&c6, &j2), &[(6.0, 3), (0.0, 6), (-6.0, 3)]);
        let one = Spectrum::from_pairs(&[(1.0, 1)]);
        assert_eq!(kronecker_spectrum(&c6, &one), c6);
        let a = Spectrum::from_pairs(&[(7.5, 1)]);
        let z = Spectrum::from_pairs(&[(0.0, 4)]);
        assert_spec(&kronecker_spectrum(&a, &z), &[(0.0, 4)]);
    }

    #[test]
    fn complement_of_regular() {
        let c4 = Spectrum::from_pairs(&[(2.0, 1), (0.0, 2), (-2.0, 1)]);
        assert_spec(&complement_regular_spectrum(4, 2, &c4).unwrap(), &[(1.0, 2), (-1.0, 2)]);
        let k5 = Spectrum::from_pairs(&[(4.0, 1), (-1.0, 4)]);
        assert_spec(&complement_regular_spectrum(5, 4, &k5).unwrap(), &[(0.0, 5)]);
        let c72 = 2.0 * (72f64).to_radians().cos();
        let c144 = 2.0 * (144f64).to_radians().cos();
        let c5 = Spectrum::from_pairs(&[(2.0, 1), (c72, 2), (c144, 2)]);
        let comp = complement_regular_spectrum(5, 2, &c5).unwrap();
        let want = Spectrum::from_pairs(&[(2.0, 1), (-(c72 + 1.0), 2), (-(c144 + 1.0), 2)]);
        assert!(comp.max_deviation(&want).unwrap() < 1e-12);
        // C5 is self-complementary
        assert!(comp.max_deviation(&c5).unwrap() < 1e-12);
        assert!(complement_regular_spectrum(5, 3, &c5).is_err());
    }

    #[test]
    fn removal_and_union() {
        let s = Spectrum::from_pairs(&[(2.0, 2), (0.0, 1)]);
        let r = s.without_one(2.0, 1e-9).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.multiplicity_of(2.0, 1e-9), 1);
        let u = r.union(&Spectrum::from_pairs(&[(0.0, 2)]));
        assert_eq!(u.multiplicity_of(0.0, 1e-9), 3);
        assert!(s.without_one(5.0, 1e-9).is_err());
    }
}
