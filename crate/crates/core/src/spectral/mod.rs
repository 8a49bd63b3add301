//! Eigenvalues, spectra, exact characteristic polynomials and quotient matrices.

pub mod eigen;
pub mod poly;
pub mod quotient;
pub mod spectrum;

pub use eigen::{real_eigenvalues_general, sym_eigenvalues, sym_eigenvalues_int};
pub use poly::{char_poly, exact_determinant, CharPoly, IntPoly};
pub use quotient::{quotient_spectrum, QuotientSpec};
pub use spectrum::{
    complement_regular_spectrum, default_tol, energy, group_spectrum, inertia, kronecker_spectrum,
    least_eigenvalue, spectral_radius, Eigen, Inertia, Spectrum, SpectrumReport,
};
