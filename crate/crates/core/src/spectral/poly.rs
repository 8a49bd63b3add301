//! Exact integer polynomials, characteristic polynomials and real root finding.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Polynomial with integer coefficients, stored lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64(&[c])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `λ - root`.
    pub fn linear(root: i64) -> Self {
        Self::from_i64(&[-root, 1])
    }

    /// `λ^d`.
    pub fn monomial(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[d] = BigInt::one();
        Self { coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        horner(&self.coeffs_f64(), x)
    }

    /// `Σ |c_i| |x|^i`, the natural scale for judging `|p(x)|`.
    pub fn eval_scale(&self, x: f64) -> f64 {
        let abs: Vec<f64> = self.coeffs_f64().iter().map(|c| c.abs()).collect();
        horner(&abs, x.abs())
    }

    /// Coefficients as `i64`, lowest degree first.
    pub fn coeffs_i64(&self) -> Result<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.to_i64()
                    .ok_or_else(|| Error::Overflow(format!("coefficient {c} exceeds i64")))
            })
            .collect()
    }

    /// `{"coeffs": [c0, ..., cn]}`; coefficients outside `i64` are written as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            })
            .collect();
        serde_json::json!({ "coeffs": coeffs })
    }

    /// Real roots with multiplicity, descending. Every root is assumed real;
    /// complex pairs contribute their real parts.
    pub fn real_roots(&self) -> Result<Vec<f64>> {
        if self.is_zero() {
            return Err(Error::Param {
                name: "polynomial".into(),
                reason: "zero polynomial has no finite root set".into(),
            });
        }
        let mut roots = Vec::with_capacity(self.degree());
        for (factor, mult) in square_free_decomposition(&RatPoly::from_int(self)) {
            for r in simple_roots(&factor) {
                roots.extend(std::iter::repeat_n(r, mult));
            }
        }
        super::eigen::sort_descending(&mut roots);
        Ok(roots)
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

/// Monic characteristic polynomial `det(λI - M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly(IntPoly);

impl CharPoly {
    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn into_poly(self) -> IntPoly {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn coeffs_i64(&self) -> Result<Vec<i64>> {
        self.0.coeffs_i64()
    }

    pub fn real_roots(&self) -> Result<Vec<f64>> {
        self.0.real_roots()
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.0.to_json()
    }
}

impl std::fmt::Display for CharPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Characteristic polynomial by Berkowitz's division-free algorithm.
pub fn char_poly(m: &IntMatrix) -> CharPoly {
    let n = m.order();
    let at = |i: usize, j: usize| BigInt::from(m.get(i, j));
    // descending coefficients of the leading principal block's char poly
    let mut v: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let mut t: Vec<BigInt> = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-at(r, r));
        let mut x: Vec<BigInt> = (0..r).map(|i| at(i, r)).collect();
        for _ in 0..r {
            let rx: BigInt = (0..r).map(|j| at(r, j) * &x[j]).sum();
            t.push(-rx);
            x = (0..r)
                .map(|i| (0..r).map(|j| at(i, j) * &x[j]).sum())
                .collect();
        }
        v = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &t[i - j] * &v[j]).sum())
            .collect();
    }
    v.reverse();
    CharPoly(IntPoly::new(v))
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn exact_determinant(m: &IntMatrix) -> BigInt {
    let n = m.order();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(m.get(i, j))).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

/// Polynomial over the rationals, lowest degree first, without trailing zeros.
#[derive(Debug, Clone, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn trimmed(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self(c)
    }

    fn from_int(p: &IntPoly) -> Self {
        Self::trimmed(p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            Some(lead) => Self(self.0.iter().map(|c| c / lead).collect()),
            None => self.clone(),
        }
    }

    fn derivative(&self) -> Self {
        Self::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let z = BigRational::zero();
        Self::trimmed(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree();
        let lead = d.0.last().expect("division by zero polynomial").clone();
        let mut rem = self.0.clone();
        if rem.len() < d.0.len() {
            return (Self(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            for (j, dc) in d.0.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::trimmed(quot), Self::trimmed(rem))
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Sign of `p(x)` evaluated exactly at a finite float.
    fn sign_at(&self, x: f64) -> i8 {
        let xr = BigRational::from_float(x).expect("finite");
        let v = self
            .0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &xr + c);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

/// Yun's square-free decomposition: pairs `(factor, multiplicity)` with
/// `p = Π factor^multiplicity` up to a constant.
fn square_free_decomposition(p: &RatPoly) -> Vec<(RatPoly, usize)> {
    let mut out = Vec::new();
    if p.degree() == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let c = dp.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        if a.degree() > 0 {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    out
}

/// Roots of a square-free polynomial whose roots are all real.
fn simple_roots(p: &RatPoly) -> Vec<f64> {
    let p = p.monic();
    let d = p.degree();
    let c = p.to_f64();
    if d == 1 {
        return vec![(-&p.0[0]).to_f64().unwrap_or(f64::NAN)];
    }
    let mut comp = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        comp[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        comp[(i, d - 1)] = -c[i];
    }
    let dc: Vec<f64> = (1..=d).map(|i| c[i] * i as f64).collect();
    comp.complex_eigenvalues()
        .iter()
        .map(|z| refine_root(&p, &c, &dc, z.re))
        .collect()
}

fn refine_root(p: &RatPoly, c: &[f64], dc: &[f64], mut x: f64) -> f64 {
    for _ in 0..100 {
        let fx = horner(c, x);
        let dfx = horner(dc, x);
        if dfx == 0.0 || !fx.is_finite() {
            break;
        }
        let step = fx / dfx;
        if !step.is_finite() {
            break;
        }
        x -= step;
        if step.abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            break;
        }
    }
    // exact-sign bisection when a sign change brackets the estimate
    let delta = 1e-9 * x.abs().max(1.0);
    let (mut lo, mut hi) = (x - delta, x + delta);
    let (slo, shi) = (p.sign_at(lo), p.sign_at(hi));
    if slo == 0 {
        return lo;
    }
    if shi == 0 {
        return hi;
    }
    if slo != shi {
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            match p.sign_at(mid) {
                0 => return mid,
                s if s == slo => lo = mid,
                _ => hi = mid,
            }
        }
        x = 0.5 * (lo + hi);
    }
    x
}
