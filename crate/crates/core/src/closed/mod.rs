//! Closed-form spectra and characteristic polynomials of eccentricity
//! matrices, each paired with the hypotheses under which it is claimed.
//!
//! Every function evaluates its formula even when a hypothesis fails; the
//! failing hypothesis is recorded in [`ClosedFormResult::preconditions`] so a
//! caller can treat the result as unsupported.

mod corona;
mod hjoin;
mod p4;
mod star;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{Eigen, Inertia, IntPoly, Spectrum};

pub use corona::spec_complete_corona;
pub use hjoin::{
    spec_complete_host_join, spec_complete_multipartite, spec_even_cycle, spec_hjoin_rad2_complete,
    spec_hjoin_rad3, spec_join, spec_lex_complete, spec_lex_rad3, spec_odd_cycle,
};
pub use p4::{spec_barbell, spec_double_star, spec_p4_join};
pub use star::{
    charpoly_s_n3, charpoly_s_n3_printed, charpoly_star_join, spec_coalesced_cliques,
    spec_k1_join_regular, spec_s_n3, spec_star, spec_uniform_star_join, spec_wheel, spec_windmill,
    StarJoinFactor,
};

/// Stable identifiers of every closed form.
pub mod ids {
    pub const RAD3_QUOTIENT: &str = "cor-rad3-quotient";
    pub const LEX_RAD3: &str = "thm-lex-rad3";
    pub const EVEN_CYCLE: &str = "lem-even-cycle";
    pub const ODD_CYCLE: &str = "lem-odd-cycle";
    pub const COMPLETE_HOST_JOIN: &str = "thm-complete-host-join";
    pub const COMPLETE_MULTIPARTITE: &str = "cor-complete-multipartite";
    pub const JOIN: &str = "cor-join";
    pub const RAD2_COMPLETE: &str = "thm-rad2-complete-quotient";
    pub const LEX_COMPLETE: &str = "cor-lex-complete";
    pub const P4_JOIN: &str = "thm-p4-join";
    pub const DOUBLE_STAR: &str = "cor-double-star";
    pub const BARBELL: &str = "cor-barbell";
    pub const STAR_JOIN_HUB_COMPLETE: &str = "thm-star-join-hub-complete";
    pub const STAR_JOIN_HUB_NONCOMPLETE: &str = "thm-star-join-hub-noncomplete";
    pub const UNIFORM_STAR_JOIN_HUB_COMPLETE: &str = "thm-uniform-star-join-hub-complete";
    pub const UNIFORM_STAR_JOIN_HUB_NONCOMPLETE: &str = "thm-uniform-star-join-hub-noncomplete";
    pub const COALESCED_CLIQUES: &str = "cor-coalesced-cliques";
    pub const K1_JOIN_REGULAR: &str = "cor-k1-join-regular";
    pub const WHEEL: &str = "cor-wheel";
    pub const S_N3: &str = "lem-s-n3";
    pub const S_N3_CHARPOLY: &str = "lem-s-n3-charpoly";
    pub const STAR: &str = "cor-star";
    pub const WINDMILL: &str = "cor-windmill";
    pub const CORONA: &str = "thm-corona";
}

/// Order of a factor and the regularity degree of its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularFactorParams {
    pub order: usize,
    pub complement_degree: usize,
}

impl RegularFactorParams {
    pub fn new(order: usize, complement_degree: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Param {
                name: "order".into(),
                reason: "must be at least 1".into(),
            });
        }
        if complement_degree >= order {
            return Err(Error::Param {
                name: "complement_degree".into(),
                reason: format!("{complement_degree} exceeds order - 1 = {}", order - 1),
            });
        }
        Ok(Self {
            order,
            complement_degree,
        })
    }

    /// Parameters of `g`, which must have a regular complement.
    pub fn of_graph(g: &Graph) -> Result<Self> {
        let k = g.complement().is_regular().ok_or_else(|| {
            Error::Precondition("factor complement is not regular".into())
        })?;
        Self::new(g.order(), k)
    }

    pub fn is_complete(&self) -> bool {
        self.complement_degree == 0
    }
}

/// A named hypothesis and whether it holds for the given parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precondition {
    pub name: String,
    pub holds: bool,
}

impl Precondition {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Self {
            name: name.into(),
            holds,
        }
    }
}

/// Characteristic polynomial split into an exact integer part and linear
/// factors `(λ - μ)` whose roots are only known numerically.
#[derive(Debug, Clone, PartialEq)]
pub struct FactoredCharPoly {
    exact: IntPoly,
    numeric_roots: Vec<Eigen>,
}

impl FactoredCharPoly {
    /// Roots within `1e-9` of an integer are folded into the exact part.
    pub fn new(mut exact: IntPoly, roots: &Spectrum) -> Self {
        let mut numeric_roots = Vec::new();
        for e in roots.eigs() {
            let r = e.value.round();
            if (e.value - r).abs() <= 1e-9 && r.abs() < 1e15 {
                exact = &exact * &IntPoly::linear(r as i64).pow(e.mult);
            } else {
                numeric_roots.push(*e);
            }
        }
        Self {
            exact,
            numeric_roots,
        }
    }

    pub fn exact(&self) -> &IntPoly {
        &self.exact
    }

    pub fn numeric_roots(&self) -> &[Eigen] {
        &self.numeric_roots
    }

    pub fn is_exact(&self) -> bool {
        self.numeric_roots.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.exact.degree() + self.numeric_roots.iter().map(|e| e.mult).sum::<usize>()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.numeric_roots
            .iter()
            .fold(self.exact.eval_f64(x), |acc, e| acc * (x - e.value).powi(e.mult as i32))
    }

    /// The product of the natural magnitudes of every factor at `max(|x|, 1)`.
    pub fn scale(&self, x: f64) -> f64 {
        let y = x.abs().max(1.0);
        self.numeric_roots
            .iter()
            .fold(self.exact.eval_scale(y), |acc, e| acc * (y + e.value.abs()).powi(e.mult as i32))
    }

    /// `|φ(x)| / scale(x)`.
    pub fn scaled_residual(&self, x: f64) -> f64 {
        let s = self.scale(x);
        if s == 0.0 {
            self.eval(x).abs()
        } else {
            self.eval(x).abs() / s
        }
    }

    pub fn roots(&self) -> Result<Spectrum> {
        let mut pairs: Vec<(f64, usize)> = self.exact.real_roots()?.into_iter().map(|r| (r, 1)).collect();
        pairs.extend(self.numeric_roots.iter().map(|e| (e.value, e.mult)));
        Ok(Spectrum::from_pairs(&pairs))
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.exact.to_json();
        v["numeric_roots"] = serde_json::to_value(&self.numeric_roots).unwrap_or(Value::Null);
        v
    }
}

/// Either a full spectrum or a characteristic polynomial.
#[derive(Debug, Clone, PartialEq)]
pub enum ClosedFormOutput {
    Spectrum(Spectrum),
    CharPoly(FactoredCharPoly),
}

impl ClosedFormOutput {
    pub fn spectrum(&self) -> Result<Spectrum> {
        match self {
            Self::Spectrum(s) => Ok(s.clone()),
            Self::CharPoly(p) => p.roots(),
        }
    }

    pub fn charpoly(&self) -> Option<&FactoredCharPoly> {
        match self {
            Self::CharPoly(p) => Some(p),
            Self::Spectrum(_) => None,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Self::Spectrum(s) => s.order(),
            Self::CharPoly(p) => p.degree(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Self::Spectrum(s) => json!({ "spectrum": s.report() }),
            Self::CharPoly(p) => json!({ "charpoly": p.to_json() }),
        }
    }
}

/// Scalar predictions a theorem makes beyond the spectrum itself.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Predicted {
    pub rho: Option<f64>,
    pub energy: Option<f64>,
    pub xi: Option<f64>,
    pub inertia: Option<Inertia>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormResult {
    pub theorem: &'static str,
    /// The formula as stated.
    pub output: ClosedFormOutput,
    /// A repaired formula, present only where the stated one is known to be defective.
    pub corrected: Option<ClosedFormOutput>,
    pub preconditions: Vec<Precondition>,
    pub predicted: Predicted,
    /// Named intermediate constants of the formula.
    pub constants: Vec<(&'static str, f64)>,
}

impl ClosedFormResult {
    fn new(theorem: &'static str, output: ClosedFormOutput) -> Self {
        Self {
            theorem,
            output,
            corrected: None,
            preconditions: Vec::new(),
            predicted: Predicted::default(),
            constants: Vec::new(),
        }
    }

    fn require(mut self, name: &str, holds: bool) -> Self {
        self.preconditions.push(Precondition::new(name, holds));
        self
    }

    pub fn preconditions_hold(&self) -> bool {
        self.preconditions.iter().all(|p| p.holds)
    }

    /// Spectrum of the stated formula.
    pub fn spectrum(&self) -> Result<Spectrum> {
        self.output.spectrum()
    }

    /// The corrected formula when one exists, else the stated one.
    pub fn authoritative(&self) -> &ClosedFormOutput {
        self.corrected.as_ref().unwrap_or(&self.output)
    }

    pub fn constant(&self, name: &str) -> Option<f64> {
        self.constants.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    pub fn to_json(&self) -> Value {
        let pre: Map<String, Value> = self
            .preconditions
            .iter()
            .map(|p| (p.name.clone(), Value::Bool(p.holds)))
            .collect();
        let constants: Map<String, Value> = self
            .constants
            .iter()
            .map(|(n, v)| (n.to_string(), json!(v)))
            .collect();
        let mut out = json!({
            "theorem": self.theorem,
            "preconditions": pre,
            "preconditions_hold": self.preconditions_hold(),
            "stated": self.output.to_json(),
            "predicted": {
                "rho": self.predicted.rho,
                "energy": self.predicted.energy,
                "xi": self.predicted.xi,
                "inertia": self.predicted.inertia.map(|i| i.as_array()),
            },
            "constants": constants,
        });
        if let Some(c) = &self.corrected {
            out["corrected"] = c.to_json();
        }
        out
    }
}

/// Adjacency spectrum of a graph.
pub fn adjacency_spectrum(g: &Graph) -> Spectrum {
    let eigs = crate::spectral::sym_eigenvalues_int(&g.adjacency_matrix()).expect("adjacency is symmetric");
    Spectrum::from_values(&eigs)
}

/// Spectrum of `2A(Ḡ)` for the complement adjacency spectrum `adj`.
fn doubled(adj: &Spectrum) -> Spectrum {
    adj.scaled(2.0)
}

/// Whether `adj` is the adjacency spectrum of a `k`-regular graph on `n`
/// vertices: largest eigenvalue `k` and `Σλ² = nk`.
fn is_regular_spectrum(adj: &Spectrum, n: usize, k: usize) -> bool {
    let tol = 1e-6 * (n as f64 * k as f64).max(1.0);
    adj.order() == n
        && (adj.largest() - k as f64).abs() <= tol
        && (adj.second_moment() - (n * k) as f64).abs() <= tol
}
