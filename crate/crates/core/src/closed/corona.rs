use crate::error::{Error, Result};
use crate::spectral::Spectrum;

use super::{ids, ClosedFormOutput, ClosedFormResult};

/// Generalized corona of `K_k` with `k` factors of order `n`.
///
/// The stated spectrum pairs `(-3n ± √(9n²+16n))/2` (each `k - 1` times) with
/// `(k-1)(-3n ± √(9n²+16n))/2`; it does not sum to zero. `corrected` replaces
/// the scaled pair by `(k-1)(3n ± √(9n²+16n))/2`.
pub fn spec_complete_corona(k: usize, n: usize) -> Result<ClosedFormResult> {
    if k < 2 {
        return Err(Error::HostTooSmall(k));
    }
    if n == 0 {
        return Err(Error::Param {
            name: "n".into(),
            reason: "factor order must be positive".into(),
        });
    }
    let (kf, nf) = (k as f64, n as f64);
    let root = (9.0 * nf * nf + 16.0 * nf).sqrt();
    let base = [((-3.0 * nf + root) / 2.0, k - 1), ((-3.0 * nf - root) / 2.0, k - 1), (0.0, k * (n - 1))];
    let mut stated = base.to_vec();
    stated.push(((kf - 1.0) * (-3.0 * nf + root) / 2.0, 1));
    stated.push(((kf - 1.0) * (-3.0 * nf - root) / 2.0, 1));
    let mut corrected = base.to_vec();
    corrected.push(((kf - 1.0) * (3.0 * nf + root) / 2.0, 1));
    corrected.push(((kf - 1.0) * (3.0 * nf - root) / 2.0, 1));
    let mut res = ClosedFormResult::new(ids::CORONA, ClosedFormOutput::Spectrum(Spectrum::from_pairs(&stated)));
    res.corrected = Some(ClosedFormOutput::Spectrum(Spectrum::from_pairs(&corrected)));
    Ok(res)
}
