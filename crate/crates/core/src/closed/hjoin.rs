use std::f64::consts::PI;

use crate::ecc::ecc_matrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{kronecker_spectrum, sym_eigenvalues_int, Inertia, QuotientSpec, Spectrum};

use super::{adjacency_spectrum, doubled, ids, ClosedFormOutput, ClosedFormResult};

struct HostData {
    a: Vec<Vec<f64>>,
    spectrum: Spectrum,
    ecc: Vec<u32>,
    radius: u32,
}

fn host_data(h: &Graph) -> Result<HostData> {
    if h.order() < 2 {
        return Err(Error::HostTooSmall(h.order()));
    }
    let profile = h.metric_profile()?;
    let eps = ecc_matrix(h)?;
    let spectrum = Spectrum::from_values(&sym_eigenvalues_int(eps.as_int_matrix())?);
    let a = eps
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as f64).collect())
        .collect();
    Ok(HostData {
        a,
        spectrum,
        ecc: profile.ecc,
        radius: profile.radius,
    })
}

fn check_sizes(sizes: &[usize], k: usize) -> Result<()> {
    if sizes.len() != k {
        return Err(Error::FactorCount {
            expected: k,
            got: sizes.len(),
        });
    }
    if sizes.contains(&0) {
        return Err(Error::Param {
            name: "sizes".into(),
            reason: "factor sizes must be positive".into(),
        });
    }
    Ok(())
}

/// Spectrum of the block matrix `(a_ij J)` plus the inertia it inherits from `ε(H)`.
fn quotient_result(theorem: &'static str, host: &HostData, sizes: &[usize]) -> Result<ClosedFormResult> {
    let q = QuotientSpec::without_shift(sizes.to_vec(), host.a.clone())?;
    let n: usize = sizes.iter().sum();
    let k = sizes.len();
    let hi = host.spectrum.inertia_default();
    let mut res = ClosedFormResult::new(theorem, ClosedFormOutput::Spectrum(q.spectrum()));
    res.predicted.inertia = Some(Inertia::new(hi.n_plus, hi.n_zero + n - k, hi.n_minus));
    Ok(res)
}

/// `H[G_1, ..., G_k]` with `rad(H) >= 3`: the spectrum depends only on the
/// factor sizes.
pub fn spec_hjoin_rad3(h: &Graph, sizes: &[usize]) -> Result<ClosedFormResult> {
    let host = host_data(h)?;
    check_sizes(sizes, h.order())?;
    Ok(quotient_result(ids::RAD3_QUOTIENT, &host, sizes)?.require("rad(H) >= 3", host.radius >= 3))
}

fn lex_spectrum(host: &HostData, m: usize) -> Result<Spectrum> {
    if m == 0 {
        return Err(Error::Param {
            name: "m".into(),
            reason: "factor order must be positive".into(),
        });
    }
    let j = Spectrum::from_pairs(&[(m as f64, 1), (0.0, m - 1)]);
    Ok(kronecker_spectrum(&host.spectrum, &j))
}

/// `H[G]` with `rad(H) >= 3` and `|G| = m`: `m·Spec(ε(H))` plus `k(m-1)` zeros.
pub fn spec_lex_rad3(h: &Graph, m: usize) -> Result<ClosedFormResult> {
    let host = host_data(h)?;
    let s = lex_spectrum(&host, m)?;
    Ok(ClosedFormResult::new(ids::LEX_RAD3, ClosedFormOutput::Spectrum(s))
        .require("rad(H) >= 3", host.radius >= 3))
}

/// `H[K_m]` with `rad(H) >= 2`.
pub fn spec_lex_complete(h: &Graph, m: usize) -> Result<ClosedFormResult> {
    let host = host_data(h)?;
    let s = lex_spectrum(&host, m)?;
    Ok(ClosedFormResult::new(ids::LEX_COMPLETE, ClosedFormOutput::Spectrum(s))
        .require("rad(H) >= 2", host.radius >= 2))
}

/// `C_{2t}`: `t` and `-t`, each `t` times.
pub fn spec_even_cycle(t: usize) -> Result<ClosedFormResult> {
    if t < 2 {
        return Err(Error::Param {
            name: "t".into(),
            reason: "even cycles need t >= 2".into(),
        });
    }
    let tf = t as f64;
    let s = Spectrum::from_pairs(&[(tf, t), (-tf, t)]);
    let mut res = ClosedFormResult::new(ids::EVEN_CYCLE, ClosedFormOutput::Spectrum(s));
    res.predicted.rho = Some(tf);
    res.predicted.energy = Some(2.0 * tf * tf);
    Ok(res)
}

/// `C_{2t+1}`: `2t cos(2πj/(2t+1))` for `j = 0..2t`.
pub fn spec_odd_cycle(t: usize) -> Result<ClosedFormResult> {
    if t < 1 {
        return Err(Error::Param {
            name: "t".into(),
            reason: "odd cycles need t >= 1".into(),
        });
    }
    let n = 2 * t + 1;
    let vals: Vec<f64> = (0..n)
        .map(|j| 2.0 * t as f64 * (2.0 * PI * j as f64 / n as f64).cos())
        .collect();
    let mut res = ClosedFormResult::new(ids::ODD_CYCLE, ClosedFormOutput::Spectrum(Spectrum::from_values(&vals)));
    res.predicted.rho = Some(2.0 * t as f64);
    Ok(res)
}

/// `K_k[G_1, ..., G_k]` with no factor having a dominating vertex: the union
/// of the spectra of `2A(Ḡ_i)`.
pub fn spec_complete_host_join(factors: &[Graph]) -> Result<ClosedFormResult> {
    complete_host_join(ids::COMPLETE_HOST_JOIN, factors)
}

/// `G_1 ∨ G_2` with neither factor having a dominating vertex.
pub fn spec_join(g1: &Graph, g2: &Graph) -> Result<ClosedFormResult> {
    complete_host_join(ids::JOIN, &[g1.clone(), g2.clone()])
}

fn complete_host_join(theorem: &'static str, factors: &[Graph]) -> Result<ClosedFormResult> {
    if factors.len() < 2 {
        return Err(Error::HostTooSmall(factors.len()));
    }
    let s = factors
        .iter()
        .map(|g| doubled(&adjacency_spectrum(&g.complement())))
        .fold(Spectrum::empty(), |acc, s| acc.union(&s));
    let ok = factors.iter().all(|g| g.max_degree() + 2 <= g.order());
    Ok(ClosedFormResult::new(theorem, ClosedFormOutput::Spectrum(s)).require("max degree of each factor <= n_i - 2", ok))
}

/// `K_{n_1, ..., n_k}`: `-2` with multiplicity `n - k` and `2(n_i - 1)` for each part.
pub fn spec_complete_multipartite(parts: &[usize]) -> Result<ClosedFormResult> {
    if parts.len() < 2 {
        return Err(Error::HostTooSmall(parts.len()));
    }
    if parts.contains(&0) {
        return Err(Error::Param {
            name: "parts".into(),
            reason: "part sizes must be positive".into(),
        });
    }
    let n: usize = parts.iter().sum();
    let mut pairs: Vec<(f64, usize)> = parts.iter().map(|&p| (2.0 * (p as f64 - 1.0), 1)).collect();
    pairs.push((-2.0, n - parts.len()));
    Ok(
        ClosedFormResult::new(ids::COMPLETE_MULTIPARTITE, ClosedFormOutput::Spectrum(Spectrum::from_pairs(&pairs)))
            .require("every part has at least 2 vertices", parts.iter().all(|&p| p >= 2)),
    )
}

/// `H[G_1, ..., G_k]` with `rad(H) >= 2` and `G_i` complete whenever `e_H(i) = 2`.
pub fn spec_hjoin_rad2_complete(h: &Graph, sizes: &[usize], complete: &[bool]) -> Result<ClosedFormResult> {
    let host = host_data(h)?;
    check_sizes(sizes, h.order())?;
    check_sizes(&vec![1; complete.len()], h.order())?;
    let flagged = host
        .ecc
        .iter()
        .zip(complete)
        .all(|(&e, &c)| e != 2 || c);
    Ok(quotient_result(ids::RAD2_COMPLETE, &host, sizes)?
        .require("rad(H) >= 2", host.radius >= 2)
        .require("factors at host eccentricity 2 are complete", flagged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{h_join, lexicographic, JoinScheme};

    fn oracle(g: &Graph) -> Spectrum {
        Spectrum::from_values(&sym_eigenvalues_int(ecc_matrix(g).unwrap().as_int_matrix()).unwrap())
    }

    fn close(a: &Spectrum, b: &Spectrum) -> bool {
        a.max_deviation(b).is_some_and(|d| d <= 1e-8)
    }

    #[test]
    fn rad3_examples() {
        let c6 = Graph::cycle(6).unwrap();
        let r = spec_hjoin_rad3(&c6, &[1; 6]).unwrap();
        assert!(r.preconditions_hold());
        assert!(close(&r.spectrum().unwrap(), &Spectrum::from_pairs(&[(3.0, 3), (-3.0, 3)])));
        let r = spec_hjoin_rad3(&c6, &[2; 6]).unwrap();
        assert!(close(&r.spectrum().unwrap(), &Spectrum::from_pairs(&[(6.0, 3), (0.0, 6), (-6.0, 3)])));
        assert_eq!(r.predicted.inertia, Some(Inertia::new(3, 6, 3)));

        let sizes = [2, 1, 1, 1, 1, 1];
        let factors: Vec<Graph> = sizes.iter().map(|&n| Graph::complete(n).unwrap()).collect();
        let g = h_join(&JoinScheme::new(c6.clone(), factors).unwrap());
        let r = spec_hjoin_rad3(&c6, &sizes).unwrap();
        assert!(close(&r.spectrum().unwrap(), &oracle(&g)));

        let p5 = Graph::path(5).unwrap();
        assert!(!spec_hjoin_rad3(&p5, &[1; 5]).unwrap().preconditions_hold());
        assert!(spec_hjoin_rad3(&c6, &[1; 5]).is_err());
    }

    #[test]
    fn lex_examples() {
        let c7 = Graph::cycle(7).unwrap();
        let r = spec_lex_rad3(&c7, 2).unwrap();
        let mut pairs: Vec<(f64, usize)> = (0..7).map(|j| (12.0 * (2.0 * PI * j as f64 / 7.0).cos(), 1)).collect();
        pairs.push((0.0, 7));
        assert!(close(&r.spectrum().unwrap(), &Spectrum::from_pairs(&pairs)));
        let c6 = Graph::cycle(6).unwrap();
        let r = spec_lex_rad3(&c6, 3).unwrap();
        assert!(close(&r.spectrum().unwrap(), &Spectrum::from_pairs(&[(9.0, 3), (0.0, 12), (-9.0, 3)])));
        let r = spec_lex_rad3(&c6, 1).unwrap();
        assert!(close(&r.spectrum().unwrap(), &oracle(&c6)));
        // the factor structure is irrelevant
        let g = lexicographic(&c6, &Graph::path(3).unwrap()).unwrap();
        assert!(close(&r.spectrum().unwrap().scaled(3.0).union(&Spectrum::from_pairs(&[(0.0, 12)])), &oracle(&g)));
    }

    #[test]
    fn cycles() {
        for t in 2..6 {
            let r = spec_even_cycle(t).unwrap();
            assert!(close(&r.spectrum().unwrap(), &oracle(&Graph::cycle(2 * t).unwrap())));
        }
        for t in 1..6 {
            let r = spec_odd_cycle(t).unwrap();
            assert!(close(&r.spectrum().unwrap(), &oracle(&Graph::cycle(2 * t + 1).unwrap())));
        }
        assert!((spec_even_cycle(3).unwrap().spectrum().unwrap().energy() - 18.0).abs() < 1e-12);
    }

    #[test]
    fn complete_host() {
        let r = spec_complete_multipartite(&[2, 3]).unwrap();
        assert!(close(&r.spectrum().unwrap(), &Spectrum::from_pairs(&[(4.0, 1), (2.0, 1), (-2.0, 3)])));
        let kbar = |n| Graph::empty(n).unwrap();
        let r = spec_complete_host_join(&[kbar(2), kbar(3)]).unwrap();
        assert!(r.preconditions_hold());
        assert!(close(&r.spectrum().unwrap(), &Spectrum::from_pairs(&[(4.0, 1), (2.0, 1), (-2.0, 3)])));
        let c4 = Graph::cycle(4).unwrap();
        let r = spec_join(&c4, &c4).unwrap();
        assert!(close(&r.spectrum().unwrap(), &Spectrum::from_pairs(&[(2.0, 4), (-2.0, 4)])));
        assert!(close(&r.spectrum().unwrap(), &oracle(&crate::operators::join(&c4, &c4))));
        let r = spec_complete_host_join(&[Graph::complete(2).unwrap(), kbar(2)]).unwrap();
        assert!(!r.preconditions_hold());
    }

    #[test]
    fn rad2_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let r = spec_lex_complete(&c5, 2).unwrap();
        assert!(r.preconditions_hold());
        let g = lexicographic(&c5, &Graph::complete(2).unwrap()).unwrap();
        assert!(close(&r.spectrum().unwrap(), &oracle(&g)));

        let p4 = Graph::path(4).unwrap();
        let r = spec_hjoin_rad2_complete(&p4, &[2, 1, 1, 3], &[false, true, true, false]).unwrap();
        assert!(r.preconditions_hold());
        let ds = Graph::double_star(2, 3).unwrap();
        assert!(close(&r.spectrum().unwrap(), &oracle(&ds)));
        let r = spec_hjoin_rad2_complete(&p4, &[1, 2, 1, 1], &[true, false, true, true]).unwrap();
        assert!(!r.preconditions_hold());
    }
}
