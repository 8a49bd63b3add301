use crate::error::{Error, Result};
use crate::spectral::Spectrum;

use super::{ids, ClosedFormOutput, ClosedFormResult};

/// `P4[G_1, K_1, K_1, G_4]` with `|G_1| = n1`, `|G_4| = n4`; the end factors
/// are arbitrary.
pub fn spec_p4_join(n1: usize, n4: usize) -> Result<ClosedFormResult> {
    p4_join(ids::P4_JOIN, n1, n4)
}

/// Double star `S_{a,b}`.
pub fn spec_double_star(a: usize, b: usize) -> Result<ClosedFormResult> {
    p4_join(ids::DOUBLE_STAR, a, b)
}

fn p4_join(theorem: &'static str, n1: usize, n4: usize) -> Result<ClosedFormResult> {
    for (name, v) in [("n1", n1), ("n4", n4)] {
        if v == 0 {
            return Err(Error::Param {
                name: name.into(),
                reason: "must be at least 1".into(),
            });
        }
    }
    let (a, b) = (n1 as f64, n4 as f64);
    let alpha = 4.0 * a + 4.0 * b + 9.0 * a * b;
    let beta = alpha * alpha - 64.0 * a * b;
    let big = ((alpha + beta.sqrt()) / 2.0).sqrt();
    let small = ((alpha - beta.sqrt()) / 2.0).sqrt();
    let s = Spectrum::from_pairs(&[(big, 1), (small, 1), (-small, 1), (-big, 1), (0.0, n1 + n4 - 2)]);
    let mut res = ClosedFormResult::new(theorem, ClosedFormOutput::Spectrum(s));
    res.constants = vec![("alpha", alpha), ("beta", beta)];
    res.predicted.rho = Some(big);
    res.predicted.xi = Some(-big);
    res.predicted.energy = Some(p4_join_energy(n1, n4));
    res.predicted.inertia = Some(crate::spectral::Inertia::new(2, n1 + n4 - 2, 2));
    Ok(res)
}

/// `√(2(α + √β)) + √(2(α - √β))`.
pub fn p4_join_energy(n1: usize, n4: usize) -> f64 {
    let (a, b) = (n1 as f64, n4 as f64);
    let alpha = 4.0 * a + 4.0 * b + 9.0 * a * b;
    let root_beta = (alpha * alpha - 64.0 * a * b).sqrt();
    (2.0 * (alpha + root_beta)).sqrt() + (2.0 * (alpha - root_beta)).sqrt()
}

/// Barbell `B_{n,n} = P4[K_{n-1}, K_1, K_1, K_{n-1}]`:
/// `(±3(n-1) ± √(9n² - 2n - 7))/2` and `2(n-2)` zeros.
pub fn spec_barbell(n: usize) -> Result<ClosedFormResult> {
    if n < 2 {
        return Err(Error::Param {
            name: "n".into(),
            reason: "barbell needs n >= 2".into(),
        });
    }
    let nf = n as f64;
    let root = (9.0 * nf * nf - 2.0 * nf - 7.0).sqrt();
    let c = 3.0 * (nf - 1.0);
    let s = Spectrum::from_pairs(&[
        ((c + root) / 2.0, 1),
        ((c - root) / 2.0, 1),
        ((-c + root) / 2.0, 1),
        ((-c - root) / 2.0, 1),
        (0.0, 2 * (n - 2)),
    ]);
    let mut res = ClosedFormResult::new(ids::BARBELL, ClosedFormOutput::Spectrum(s));
    res.predicted.rho = Some((c + root) / 2.0);
    Ok(res)
}
