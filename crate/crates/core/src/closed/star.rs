//! Star joins `K_{1,m}[G_0, G_1, ..., G_m]` whose factor complements are regular.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{Inertia, IntPoly, Spectrum};

use super::{
    adjacency_spectrum, doubled, ids, is_regular_spectrum, ClosedFormOutput, ClosedFormResult,
    FactoredCharPoly, RegularFactorParams,
};

/// A factor of a star join: its parameters and the adjacency spectrum of its complement.
#[derive(Debug, Clone, PartialEq)]
pub struct StarJoinFactor {
    pub params: RegularFactorParams,
    pub complement_spectrum: Spectrum,
}

impl StarJoinFactor {
    pub fn new(params: RegularFactorParams, complement_spectrum: Spectrum) -> Self {
        Self {
            params,
            complement_spectrum,
        }
    }

    pub fn of_graph(g: &Graph) -> Result<Self> {
        Ok(Self::new(
            RegularFactorParams::of_graph(g)?,
            adjacency_spectrum(&g.complement()),
        ))
    }

    fn order(&self) -> usize {
        self.params.order
    }

    fn degree(&self) -> usize {
        self.params.complement_degree
    }

    fn regular(&self) -> bool {
        is_regular_spectrum(&self.complement_spectrum, self.order(), self.degree())
    }

    /// `Spec(2A(Ḡ))` with one copy of `2k` removed.
    fn reduced(&self) -> Result<Spectrum> {
        let k = self.degree() as f64;
        Ok(doubled(&self.complement_spectrum.without_one(k, 1e-6 * k.max(1.0))?))
    }

    /// `2(k - n)`, the pole of this leaf's term.
    fn pole(&self) -> i64 {
        2 * (self.degree() as i64 - self.order() as i64)
    }
}

/// `Σ n_i / (λ - d_i)` kept as a numerator over `Π (λ - d_i)`.
struct RationalTerm {
    numer: IntPoly,
    denom: IntPoly,
}

impl RationalTerm {
    fn zero() -> Self {
        Self {
            numer: IntPoly::zero(),
            denom: IntPoly::one(),
        }
    }

    fn simple(weight: i64, pole: i64) -> Self {
        Self {
            numer: IntPoly::constant(weight),
            denom: IntPoly::linear(pole),
        }
    }

    fn plus(&self, other: &Self) -> Self {
        Self {
            numer: &(&self.numer * &other.denom) + &(&other.numer * &self.denom),
            denom: &self.denom * &other.denom,
        }
    }
}

fn leaf_sum(leaves: &[StarJoinFactor]) -> RationalTerm {
    leaves.iter().fold(RationalTerm::zero(), |acc, f| {
        acc.plus(&RationalTerm::simple(f.order() as i64, f.pole()))
    })
}

fn union_all<'a>(specs: impl IntoIterator<Item = &'a Spectrum>) -> Spectrum {
    specs.into_iter().fold(Spectrum::empty(), |acc, s| acc.union(s))
}

fn param_err(name: &str, reason: impl Into<String>) -> Error {
    Error::Param {
        name: name.into(),
        reason: reason.into(),
    }
}

/// Whether the single-leaf block layout is the one the formula assumes.
fn single_leaf_ok(hub_complete: bool, leaves: &[StarJoinFactor]) -> bool {
    match leaves {
        [leaf] if hub_complete => leaf.degree() >= 1 || leaf.order() == 1,
        [leaf] => leaf.degree() >= 1,
        _ => true,
    }
}

/// Characteristic polynomial of `ε(K_{1,m}[G_0, G_1, ..., G_m])` with each
/// `Ḡ_i` regular.
///
/// With a complete hub of order `ℓ >= 2` the stated polynomial is defective;
/// `corrected` then carries `(λ+1)^{ℓ-1} [(λ-c)Π(λ-d_i) - (2(λ-c)+ℓ) Σ n_i Π_{j≠i}(λ-d_j)]`
/// with `c = ℓ - 1`, which agrees with the stated one at `ℓ = 1`.
pub fn charpoly_star_join(hub: &StarJoinFactor, leaves: &[StarJoinFactor]) -> Result<ClosedFormResult> {
    if leaves.is_empty() {
        return Err(param_err("leaves", "at least one leaf is required"));
    }
    let psi = leaves.iter().map(StarJoinFactor::reduced).collect::<Result<Vec<_>>>()?;
    let psi = union_all(&psi);
    let sum = leaf_sum(leaves);
    let lam = IntPoly::monomial(1);
    let ell = hub.order() as i64;
    let hub_complete = hub.params.is_complete();

    let mut res = if hub_complete {
        let stated_bracket = &(&lam * &sum.denom) - &(&IntPoly::from_i64(&[ell, 2]) * &sum.numer);
        let stated = &IntPoly::monomial(hub.order() - 1) * &stated_bracket;
        let mut res = ClosedFormResult::new(
            ids::STAR_JOIN_HUB_COMPLETE,
            ClosedFormOutput::CharPoly(FactoredCharPoly::new(stated, &psi)),
        );
        if ell >= 2 {
            let c = ell - 1;
            let shifted = IntPoly::linear(c);
            let bracket = &(&shifted * &sum.denom) - &(&IntPoly::from_i64(&[ell - 2 * c, 2]) * &sum.numer);
            let corrected = &IntPoly::linear(-1).pow(hub.order() - 1) * &bracket;
            res.corrected = Some(ClosedFormOutput::CharPoly(FactoredCharPoly::new(corrected, &psi)));
        }
        res
    } else {
        let bracket = &sum.denom - &sum.numer.scale(&2.into());
        let roots = doubled(&hub.complement_spectrum).union(&psi);
        ClosedFormResult::new(
            ids::STAR_JOIN_HUB_NONCOMPLETE,
            ClosedFormOutput::CharPoly(FactoredCharPoly::new(bracket, &roots)),
        )
    };
    res = res.require("hub complement is regular", hub.regular());
    for (i, leaf) in leaves.iter().enumerate() {
        res = res.require(&format!("leaf {} complement is regular", i + 1), leaf.regular());
    }
    Ok(res.require("single leaf has no dominating vertex", single_leaf_ok(hub_complete, leaves)))
}

/// Spectrum of `ε(K_{1,m}[G_0, G_1, ..., G_m])` where `Ḡ_0` is `r`-regular on
/// `ell` vertices and every `Ḡ_i` is `k`-regular on `n` vertices, together
/// with the predicted spectral radius, energy and inertia.
pub fn spec_uniform_star_join(
    ell: usize,
    r: usize,
    m: usize,
    n: usize,
    k: usize,
    leaf_complement_spectra: &[Spectrum],
    hub_complement_spectrum: &Spectrum,
) -> Result<ClosedFormResult> {
    let hub = StarJoinFactor::new(RegularFactorParams::new(ell, r)?, hub_complement_spectrum.clone());
    let leaf_params = RegularFactorParams::new(n, k)?;
    if m == 0 {
        return Err(param_err("m", "at least one leaf is required"));
    }
    if leaf_complement_spectra.len() != m {
        return Err(param_err(
            "leaf_complement_spectra",
            format!("expected {m} spectra, got {}", leaf_complement_spectra.len()),
        ));
    }
    let leaves: Vec<StarJoinFactor> = leaf_complement_spectra
        .iter()
        .map(|s| StarJoinFactor::new(leaf_params, s.clone()))
        .collect();
    let psi = leaves.iter().map(StarJoinFactor::reduced).collect::<Result<Vec<_>>>()?;
    let psi = union_all(&psi);

    let (lf, mf, nf, kf) = (ell as f64, m as f64, n as f64, k as f64);
    let b = kf + nf * (mf - 1.0);
    let leaf_shift = (2.0 * (kf - nf), m - 1);
    let leaves_complete = k == 0;
    let leaf_inertia: Vec<Inertia> = leaves.iter().map(|f| f.complement_spectrum.inertia_default()).collect();
    let leaf_energy: f64 = leaves.iter().map(|f| 2.0 * f.complement_spectrum.energy()).sum();
    let sum_inertia = |extra: Option<Inertia>| {
        leaf_inertia.iter().chain(extra.iter()).fold(Inertia::new(0, 0, 0), |acc, i| {
            Inertia::new(acc.n_plus + i.n_plus, acc.n_zero + i.n_zero, acc.n_minus + i.n_minus)
        })
    };

    let mut res = if r == 0 {
        let root = (b * b + lf * mf * nf).sqrt();
        let mut pairs = vec![(0.0, ell - 1), leaf_shift, (b + root, 1), (b - root, 1)];
        let stated = Spectrum::from_pairs(&pairs).union(&psi);
        let mut res = ClosedFormResult::new(ids::UNIFORM_STAR_JOIN_HUB_COMPLETE, ClosedFormOutput::Spectrum(stated));
        let rho = b + root;
        res.predicted.rho = Some(rho);
        if leaves_complete {
            res.predicted.energy = Some(2.0 * rho);
            res.predicted.inertia = Some(Inertia::new(1, m * (n - 1) + ell - 1, m));
        } else {
            let s = sum_inertia(None);
            res.predicted.energy = Some(leaf_energy + 2.0 * rho - 4.0 * kf * mf);
            res.predicted.inertia = Some(Inertia::new(s.n_plus + 1 - m, s.n_zero + ell - 1, s.n_minus + m));
        }
        if ell >= 2 {
            let c = lf - 1.0;
            let lin = c + 2.0 * b;
            let cst = 2.0 * c * (kf - nf) + (lf - 2.0) * mf * nf;
            let disc = (lin * lin - 4.0 * cst).sqrt();
            pairs = vec![(-1.0, ell - 1), leaf_shift, ((lin + disc) / 2.0, 1), ((lin - disc) / 2.0, 1)];
            res.corrected = Some(ClosedFormOutput::Spectrum(Spectrum::from_pairs(&pairs).union(&psi)));
        }
        res.constants.push(("b", b));
        res
    } else {
        let hub_doubled = doubled(hub_complement_spectrum);
        let stated = Spectrum::from_pairs(&[leaf_shift, (2.0 * b, 1)]).union(&psi).union(&hub_doubled);
        let mut res = ClosedFormResult::new(ids::UNIFORM_STAR_JOIN_HUB_NONCOMPLETE, ClosedFormOutput::Spectrum(stated));
        let rho = 2.0 * b;
        let hub_inertia = hub_complement_spectrum.inertia_default();
        let hub_energy = hub_doubled.energy();
        // the tabulated radius assumes the hub block does not dominate
        if b >= r as f64 {
            res.predicted.rho = Some(rho);
        }
        if leaves_complete {
            res.predicted.energy = Some(hub_energy + 2.0 * rho);
            res.predicted.inertia = Some(Inertia::new(
                hub_inertia.n_plus + 1,
                hub_inertia.n_zero + m * (n - 1),
                hub_inertia.n_minus + m - 1,
            ));
        } else {
            let s = sum_inertia(Some(hub_inertia));
            res.predicted.energy = Some(hub_energy + leaf_energy + 2.0 * rho - 4.0 * kf * mf);
            res.predicted.inertia = Some(Inertia::new(s.n_plus + 1 - m, s.n_zero, s.n_minus + m - 1));
        }
        res.constants.push(("b", b));
        res
    };
    res = res.require("hub complement is regular", hub.regular());
    res = res.require("leaf complements are regular", leaves.iter().all(StarJoinFactor::regular));
    Ok(res.require("single leaf has no dominating vertex", single_leaf_ok(r == 0, &leaves)))
}

/// `K_1 ∨ G` with `G` `r`-regular on `n` vertices and `r <= n - 2`.
pub fn spec_k1_join_regular(g: &Graph) -> Result<ClosedFormResult> {
    let r = g
        .is_regular()
        .ok_or_else(|| Error::Precondition("graph is not regular".into()))?;
    let n = g.order();
    let adj = adjacency_spectrum(g);
    let s = k1_join_spectrum(n, r, &adj)?;
    Ok(ClosedFormResult::new(ids::K1_JOIN_REGULAR, ClosedFormOutput::Spectrum(s))
        .require("no dominating vertex (r <= n - 2)", r + 2 <= n))
}

fn k1_join_spectrum(n: usize, r: usize, adj: &Spectrum) -> Result<Spectrum> {
    let c = (n - r) as f64 - 1.0;
    let root = (c * c + n as f64).sqrt();
    let rest = adj.without_one(r as f64, 1e-6 * (r as f64).max(1.0))?;
    Ok(rest
        .mapped(|l| -2.0 * (l + 1.0))
        .union(&Spectrum::from_pairs(&[(c + root, 1), (c - root, 1)])))
}

/// Wheel `W_{n+1} = K_1 ∨ C_n`.
pub fn spec_wheel(n: usize) -> Result<ClosedFormResult> {
    if n < 3 {
        return Err(param_err("n", "wheel needs n >= 3"));
    }
    let adj: Vec<f64> = (0..n).map(|j| 2.0 * (2.0 * PI * j as f64 / n as f64).cos()).collect();
    let s = k1_join_spectrum(n, 2, &Spectrum::from_values(&adj))?;
    let mut res = ClosedFormResult::new(ids::WHEEL, ClosedFormOutput::Spectrum(s)).require("n >= 4", n >= 4);
    let c = n as f64 - 3.0;
    res.predicted.rho = Some(c + (c * c + n as f64).sqrt());
    Ok(res)
}

/// Star `K_{1,m}`.
pub fn spec_star(m: usize) -> Result<ClosedFormResult> {
    if m == 0 {
        return Err(param_err("m", "star needs m >= 1"));
    }
    let mf = m as f64;
    let root = ((mf + 1.0).powi(2) - 3.0 * (mf + 1.0) + 3.0).sqrt();
    let s = Spectrum::from_pairs(&[(mf - 1.0 + root, 1), (mf - 1.0 - root, 1), (-2.0, m - 1)]);
    let mut res = ClosedFormResult::new(ids::STAR, ClosedFormOutput::Spectrum(s));
    res.constants.push(("det", (-1f64).powi(m as i32) * mf * 2f64.powi(m as i32 - 1)));
    if m >= 2 {
        res.predicted.xi = Some(-2.0);
    }
    Ok(res)
}

/// Windmill `W_{n+1}^{(m)}`: `m` copies of `K_{n+1}` sharing one vertex.
pub fn spec_windmill(n: usize, m: usize) -> Result<ClosedFormResult> {
    if n == 0 || m == 0 {
        return Err(param_err("n, m", "windmill needs n, m >= 1"));
    }
    let (nf, mf) = (n as f64, m as f64);
    let b = nf * (mf - 1.0);
    let root = (b * b + mf * nf).sqrt();
    let s = Spectrum::from_pairs(&[(b + root, 1), (0.0, m * (n - 1)), (b - root, 1), (-2.0 * nf, m - 1)]);
    let mut res = ClosedFormResult::new(ids::WINDMILL, ClosedFormOutput::Spectrum(s))
        .require("at least two blades unless n = 1", m >= 2 || n == 1);
    res.constants.push(("b", b));
    res.predicted.rho = Some(b + root);
    res.predicted.energy = Some(2.0 * (b + root));
    res.predicted.inertia = Some(Inertia::new(1, m * (n - 1), m));
    Ok(res)
}

/// `K_a ∗ K_b`, two cliques sharing a vertex, with the non-trivial part given
/// by the trigonometric roots `2√R cos((θ + 2πj)/3)`.
pub fn spec_coalesced_cliques(a: usize, b: usize) -> Result<ClosedFormResult> {
    if a < 2 || b < 2 {
        return Err(param_err("a, b", "both cliques need at least 2 vertices"));
    }
    let (af, bf) = (a as f64, b as f64);
    let r = (4.0 * af * bf - 3.0 * (af + bf) + 2.0) / 3.0;
    let theta = (2.0 * (af - 1.0) * (bf - 1.0) / r.powf(1.5)).clamp(-1.0, 1.0).acos();
    let roots: Vec<(f64, usize)> = (0..3)
        .map(|j| (2.0 * r.sqrt() * ((theta + 2.0 * PI * j as f64) / 3.0).cos(), 1))
        .collect();
    let mut pairs = roots;
    pairs.push((0.0, a + b - 4));
    let mut res = ClosedFormResult::new(ids::COALESCED_CLIQUES, ClosedFormOutput::Spectrum(Spectrum::from_pairs(&pairs)));
    let rho = 2.0 * r.sqrt() * (theta / 3.0).cos();
    res.constants = vec![("R", r), ("theta", theta)];
    res.predicted.rho = Some(rho);
    res.predicted.energy = Some(4.0 * r.sqrt() * (theta / 3.0).cos());
    Ok(res)
}

/// `λ³ + (8-2n)λ² + (25-9n)λ + (8-4n)`.
fn s_n3_cubic(n: i64) -> IntPoly {
    IntPoly::from_i64(&[8 - 4 * n, 25 - 9 * n, 8 - 2 * n, 1])
}

fn check_s_n3(n: usize) -> Result<()> {
    if n < 5 {
        return Err(param_err("n", "S_{n,3} needs n >= 5"));
    }
    Ok(())
}

/// `S_{n,3} = K_{1,2}[K_1, K_2, K̄_{n-3}]`: `-2` with multiplicity `n - 4`,
/// a zero and the three cubic roots.
pub fn spec_s_n3(n: usize) -> Result<ClosedFormResult> {
    check_s_n3(n)?;
    let mut pairs: Vec<(f64, usize)> = s_n3_cubic(n as i64).real_roots()?.into_iter().map(|v| (v, 1)).collect();
    pairs.push((0.0, 1));
    pairs.push((-2.0, n - 4));
    Ok(ClosedFormResult::new(ids::S_N3, ClosedFormOutput::Spectrum(Spectrum::from_pairs(&pairs))))
}

/// Characteristic polynomial of `ε(S_{n,3})` as printed, with the factor
/// `(λ - 2)^{n-4}`; `corrected` carries `(λ + 2)^{n-4}`.
pub fn charpoly_s_n3_printed(n: usize) -> Result<ClosedFormResult> {
    check_s_n3(n)?;
    let base = &IntPoly::monomial(1) * &s_n3_cubic(n as i64);
    let printed = &base * &IntPoly::linear(2).pow(n - 4);
    let mut res = ClosedFormResult::new(
        ids::S_N3_CHARPOLY,
        ClosedFormOutput::CharPoly(FactoredCharPoly::new(printed, &Spectrum::empty())),
    );
    res.corrected = Some(ClosedFormOutput::CharPoly(charpoly_s_n3_exact(n)));
    Ok(res)
}

/// Characteristic polynomial of `ε(S_{n,3})`: `λ (λ + 2)^{n-4}` times the cubic.
pub fn charpoly_s_n3(n: usize) -> Result<FactoredCharPoly> {
    check_s_n3(n)?;
    Ok(charpoly_s_n3_exact(n))
}

fn charpoly_s_n3_exact(n: usize) -> FactoredCharPoly {
    let base = &IntPoly::monomial(1) * &s_n3_cubic(n as i64);
    FactoredCharPoly::new(&base * &IntPoly::linear(-2).pow(n - 4), &Spectrum::empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecc::ecc_matrix;
    use crate::operators::{coalescence, h_join, JoinScheme};
    use crate::spectral::{char_poly, sym_eigenvalues_int};

    fn oracle(g: &Graph) -> Spectrum {
        Spectrum::from_values(&sym_eigenvalues_int(ecc_matrix(g).unwrap().as_int_matrix()).unwrap())
    }

    fn close(a: &Spectrum, b: &Spectrum) -> bool {
        a.max_deviation(b).is_some_and(|d| d <= 1e-8)
    }

    fn star_join(factors: &[Graph]) -> Graph {
        let host = Graph::star(factors.len() - 1).unwrap();
        h_join(&JoinScheme::new(host, factors.to_vec()).unwrap())
    }

    fn factors_of(gs: &[Graph]) -> (StarJoinFactor, Vec<StarJoinFactor>) {
        let f: Vec<StarJoinFactor> = gs.iter().map(|g| StarJoinFactor::of_graph(g).unwrap()).collect();
        (f[0].clone(), f[1..].to_vec())
    }

    #[test]
    fn wheel_charpoly_is_exact() {
        let gs = [Graph::complete(1).unwrap(), Graph::cycle(4).unwrap()];
        let (hub, leaves) = factors_of(&gs);
        let r = charpoly_star_join(&hub, &leaves).unwrap();
        assert!(r.preconditions_hold());
        assert!(r.corrected.is_none());
        let p = r.output.charpoly().unwrap();
        assert!(p.is_exact());
        let w5 = ecc_matrix(&Graph::wheel(4).unwrap()).unwrap();
        assert_eq!(p.exact(), char_poly(w5.as_int_matrix()).poly());
        let s5 = 5f64.sqrt();
        let want = Spectrum::from_values(&[1.0 + s5, 1.0 - s5, 2.0, -2.0, -2.0]);
        assert!(close(&r.spectrum().unwrap(), &want));
        assert!(close(&spec_wheel(4).unwrap().spectrum().unwrap(), &want));
    }

    #[test]
    fn coalesced_cliques_charpoly() {
        let (a, b) = (3, 3);
        let gs = [
            Graph::complete(1).unwrap(),
            Graph::complete(a - 1).unwrap(),
            Graph::complete(b - 1).unwrap(),
        ];
        let (hub, leaves) = factors_of(&gs);
        let r = charpoly_star_join(&hub, &leaves).unwrap();
        let cubic = IntPoly::from_i64(&[-16, -20, 0, 1]);
        let want = &cubic * &IntPoly::monomial(2);
        assert_eq!(r.output.charpoly().unwrap().exact(), &want);
        let g = coalescence(&Graph::complete(a).unwrap(), 0, &Graph::complete(b).unwrap(), 0).unwrap();
        let c = spec_coalesced_cliques(a, b).unwrap();
        let o = oracle(&g);
        assert!(close(&c.spectrum().unwrap(), &o));
        assert!((c.predicted.energy.unwrap() - o.energy()).abs() < 1e-8);
        assert!((c.predicted.energy.unwrap() - 2.0 * c.predicted.rho.unwrap()).abs() < 1e-12);
        let p3 = spec_coalesced_cliques(2, 2).unwrap().spectrum().unwrap();
        assert!(close(&p3, &oracle(&Graph::path(3).unwrap())));
    }

    #[test]
    fn s_n3_forms() {
        let gs = [
            Graph::complete(1).unwrap(),
            Graph::complete(2).unwrap(),
            Graph::empty(2).unwrap(),
        ];
        let (hub, leaves) = factors_of(&gs);
        let r = charpoly_star_join(&hub, &leaves).unwrap();
        let exact = r.output.charpoly().unwrap().exact().clone();
        assert_eq!(&exact, charpoly_s_n3(5).unwrap().exact());
        let cubic = IntPoly::from_i64(&[-12, -20, -2, 1]);
        assert_eq!(s_n3_cubic(5), cubic);
        for n in 5..9 {
            let g = Graph::s_n3(n).unwrap();
            let o = oracle(&g);
            assert!(close(&spec_s_n3(n).unwrap().spectrum().unwrap(), &o));
            let truth = char_poly(ecc_matrix(&g).unwrap().as_int_matrix());
            assert_eq!(charpoly_s_n3(n).unwrap().exact(), truth.poly());
            let printed = charpoly_s_n3_printed(n).unwrap();
            assert_ne!(printed.output.charpoly().unwrap().exact(), truth.poly());
        }
    }

    #[test]
    fn hub_complete_correction() {
        // K_{1,2}[K_2, K_1, K_1] is K_4 minus an edge
        let gs = [Graph::complete(2).unwrap(), Graph::complete(1).unwrap(), Graph::complete(1).unwrap()];
        let (hub, leaves) = factors_of(&gs);
        let r = charpoly_star_join(&hub, &leaves).unwrap();
        let o = oracle(&star_join(&gs));
        let s17 = 17f64.sqrt();
        assert!(close(&o, &Spectrum::from_values(&[(3.0 + s17) / 2.0, (3.0 - s17) / 2.0, -1.0, -2.0])));
        assert!(!close(&r.spectrum().unwrap(), &o));
        let fixed = r.corrected.as_ref().unwrap().spectrum().unwrap();
        assert!(close(&fixed, &o));
    }

    #[test]
    fn hub_noncomplete_charpoly() {
        // hub C4 (complement 2K2 is 1-regular), leaves C5 and C5
        let gs = [Graph::cycle(4).unwrap(), Graph::cycle(5).unwrap(), Graph::cycle(5).unwrap()];
        let (hub, leaves) = factors_of(&gs);
        let r = charpoly_star_join(&hub, &leaves).unwrap();
        assert_eq!(r.theorem, ids::STAR_JOIN_HUB_NONCOMPLETE);
        assert!(r.preconditions_hold());
        let o = oracle(&star_join(&gs));
        let p = r.output.charpoly().unwrap();
        for e in o.eigs() {
            assert!(p.scaled_residual(e.value) < 1e-9);
        }
        assert!(close(&r.spectrum().unwrap(), &o));
    }

    #[test]
    fn uniform_tables() {
        // windmill with two blades of K_3
        let zero = |n| Spectrum::from_pairs(&[(0.0, n)]);
        let r = spec_uniform_star_join(1, 0, 2, 2, 0, &[zero(2), zero(2)], &zero(1)).unwrap();
        let s8 = 8f64.sqrt();
        let want = Spectrum::from_values(&[2.0 + s8, 0.0, 0.0, 2.0 - s8, -4.0]);
        assert!(close(&r.spectrum().unwrap(), &want));
        let rho = r.predicted.rho.unwrap();
        assert!((rho - (2.0 + s8)).abs() < 1e-12);
        assert_eq!(r.predicted.energy, Some(2.0 * rho));
        assert_eq!(r.predicted.inertia, Some(Inertia::new(1, 2, 2)));
        let w = spec_windmill(2, 2).unwrap().spectrum().unwrap();
        assert!(close(&w, &want));

        // star K_{1,2}
        let r = spec_uniform_star_join(1, 0, 2, 1, 0, &[zero(1), zero(1)], &zero(1)).unwrap();
        let s3 = 3f64.sqrt();
        assert!(close(&r.spectrum().unwrap(), &Spectrum::from_values(&[1.0 + s3, 1.0 - s3, -2.0])));
        assert!(close(&spec_star(2).unwrap().spectrum().unwrap(), &r.spectrum().unwrap()));
    }

    #[test]
    fn uniform_against_oracle() {
        let cases: Vec<(Graph, Graph, usize)> = vec![
            (Graph::complete(1).unwrap(), Graph::cycle(5).unwrap(), 3),
            (Graph::complete(3).unwrap(), Graph::cycle(4).unwrap(), 2),
            (Graph::cycle(4).unwrap(), Graph::complete(2).unwrap(), 3),
            (Graph::cycle(6).unwrap(), Graph::cycle(4).unwrap(), 2),
            (Graph::complete(2).unwrap(), Graph::complete(3).unwrap(), 3),
        ];
        for (hub, leaf, m) in cases {
            let mut gs = vec![hub.clone()];
            gs.extend(std::iter::repeat_n(leaf.clone(), m));
            let o = oracle(&star_join(&gs));
            let hp = RegularFactorParams::of_graph(&hub).unwrap();
            let lp = RegularFactorParams::of_graph(&leaf).unwrap();
            let leaf_spec = adjacency_spectrum(&leaf.complement());
            let r = spec_uniform_star_join(
                hp.order,
                hp.complement_degree,
                m,
                lp.order,
                lp.complement_degree,
                &vec![leaf_spec; m],
                &adjacency_spectrum(&hub.complement()),
            )
            .unwrap();
            assert!(r.preconditions_hold());
            let auth = r.authoritative().spectrum().unwrap();
            assert!(close(&auth, &o), "{hub:?} {leaf:?} {m}");
            if hp.order == 1 {
                assert!((r.predicted.rho.unwrap() - o.spectral_radius()).abs() < 1e-8);
                assert!((r.predicted.energy.unwrap() - o.energy()).abs() < 1e-8);
                assert_eq!(r.predicted.inertia.unwrap(), o.inertia_default());
            } else if hp.complement_degree > 0 {
                assert_eq!(r.predicted.inertia.unwrap(), o.inertia_default());
                assert!((r.predicted.energy.unwrap() - o.energy()).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn k1_join() {
        let r = spec_k1_join_regular(&Graph::cycle(4).unwrap()).unwrap();
        let s5 = 5f64.sqrt();
        assert!(close(&r.spectrum().unwrap(), &Spectrum::from_values(&[1.0 + s5, 1.0 - s5, 2.0, -2.0, -2.0])));
        let r = spec_k1_join_regular(&Graph::empty(3).unwrap()).unwrap();
        assert!(close(&r.spectrum().unwrap(), &spec_star(3).unwrap().spectrum().unwrap()));
        let pet = Graph::petersen();
        let r = spec_k1_join_regular(&pet).unwrap();
        let s46 = 46f64.sqrt();
        let want = Spectrum::from_pairs(&[(6.0 + s46, 1), (6.0 - s46, 1), (-4.0, 5), (2.0, 4)]);
        assert!(close(&r.spectrum().unwrap(), &want));
        let g = crate::operators::join(&Graph::complete(1).unwrap(), &pet);
        assert!(close(&want, &oracle(&g)));
        assert!(spec_k1_join_regular(&Graph::path(3).unwrap()).is_err());
        assert!(!spec_k1_join_regular(&Graph::complete(3).unwrap()).unwrap().preconditions_hold());
    }
}
