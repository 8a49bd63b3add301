//! Eccentricity matrices, built two independent ways.
//!
//! [`ecc_matrix`] applies the definition entry by entry from BFS distances.
//! [`ecc_matrix_hjoin`] assembles the matrix of an H-join purely from `ε(H)`,
//! host eccentricities and the dominating-vertex split of each factor, without
//! ever computing distances in the joined graph.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::IntMatrix;
use crate::operators::JoinScheme;

/// `ε(G)`: symmetric, zero diagonal, entry `d(u,v)` when it equals
/// `min(e(u), e(v))` and zero otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccMatrix {
    inner: IntMatrix,
}

impl EccMatrix {
    pub fn order(&self) -> usize {
        self.inner.order()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.inner.get(i, j)
    }

    pub fn as_int_matrix(&self) -> &IntMatrix {
        &self.inner
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.inner.rows()
    }

    /// Text dump: `n`, then one line of space-separated entries per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for i in 0..self.order() {
            let row: Vec<String> = self.inner.row(i).iter().map(i64::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatrixDump {
            n: self.order(),
            rows: self.rows(),
        })
        .expect("matrix dump serializes")
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let bad = |message: String| Error::Parse { offset: 0, message };
        let n: usize = lines
            .next()
            .ok_or_else(|| bad("missing order line".into()))?
            .parse()
            .map_err(|e| bad(format!("order: {e}")))?;
        let rows = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|e| bad(format!("entry `{t}`: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != n {
            return Err(bad(format!("expected {n} rows, got {}", rows.len())));
        }
        Self::from_rows(&rows)
    }

    /// Wraps explicit rows, checking symmetry, zero diagonal and non-negativity.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let inner = IntMatrix::from_rows(rows)?;
        if let Some((row, col)) = inner.asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        for i in 0..inner.order() {
            if inner.get(i, i) != 0 || inner.row(i).iter().any(|&v| v < 0) {
                return Err(Error::Parse {
                    offset: i,
                    message: "eccentricity matrix needs zero diagonal and non-negative entries".into(),
                });
            }
        }
        Ok(Self { inner })
    }

    /// Reorders rows and columns: `out[a][b] = self[perm[a]][perm[b]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            inner: self.inner.permuted(perm),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixDump {
    n: usize,
    rows: Vec<Vec<i64>>,
}

/// Definitional construction of `ε(G)` from all-pairs BFS distances.
pub fn ecc_matrix(g: &Graph) -> Result<EccMatrix> {
    let profile = g.metric_profile()?;
    let n = g.order();
    let mut m = IntMatrix::zeros(n);
    for u in 0..n {
        for v in 0..n {
            let d = profile.dist(u, v);
            if u != v && d == profile.ecc[u].min(profile.ecc[v]) {
                m.set(u, v, i64::from(d));
            }
        }
    }
    Ok(EccMatrix { inner: m })
}

/// Dominating (`U_{i1}`) and non-dominating (`U_{i2}`) vertices of one factor,
/// as local indices in the factor's vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorSplit {
    pub dominating: Vec<usize>,
    pub rest: Vec<usize>,
}

impl FactorSplit {
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let (dominating, rest) = (0..n).partition(|&u| g.degree(u) + 1 == n);
        Self { dominating, rest }
    }

    /// `U_{i1}` followed by `U_{i2}`.
    pub fn ordered(&self) -> impl Iterator<Item = usize> + '_ {
        self.dominating.iter().chain(self.rest.iter()).copied()
    }
}

pub type FactorPartition = Vec<FactorSplit>;

pub fn factor_partition(scheme: &JoinScheme) -> FactorPartition {
    scheme.factors().iter().map(FactorSplit::of).collect()
}

/// `ε(H[G_1..G_k])` laid out in partition order, plus the map back to the
/// natural vertex order of [`crate::operators::h_join`].
#[derive(Debug, Clone)]
pub struct HJoinEcc {
    /// Rows/columns: factor blocks in index order, `U_{i1}` before `U_{i2}` inside each.
    pub matrix: EccMatrix,
    /// `permutation[p]` is the natural-order vertex at partition position `p`.
    pub permutation: Vec<usize>,
    pub partition: FactorPartition,
}

impl HJoinEcc {
    /// The same matrix in the joined graph's natural vertex order.
    pub fn to_natural_order(&self) -> EccMatrix {
        let mut inverse = vec![0; self.permutation.len()];
        for (p, &v) in self.permutation.iter().enumerate() {
            inverse[v] = p;
        }
        self.matrix.permuted(&inverse)
    }
}

/// Which part of a factor a vertex belongs to.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    Dominating,
    Rest,
}

/// Block-structure construction of the eccentricity matrix of an H-join.
pub fn ecc_matrix_hjoin(scheme: &JoinScheme) -> Result<HJoinEcc> {
    let host = scheme.host();
    let eh = ecc_matrix(host)?;
    let host_ecc = host.metric_profile()?.ecc;
    let partition = factor_partition(scheme);

    // (factor, local vertex, part) per partition position
    let mut slots = Vec::with_capacity(scheme.total_order());
    let mut permutation = Vec::with_capacity(scheme.total_order());
    for (i, split) in partition.iter().enumerate() {
        for &u in &split.dominating {
            slots.push((i, u, Part::Dominating));
        }
        for &u in &split.rest {
            slots.push((i, u, Part::Rest));
        }
        permutation.extend(split.ordered().map(|u| scheme.offsets()[i] + u));
    }

    let n = slots.len();
    let mut m = IntMatrix::zeros(n);
    for (p, &(i, x, px)) in slots.iter().enumerate() {
        for (q, &(j, y, py)) in slots.iter().enumerate() {
            if p == q {
                continue;
            }
            let v = if i == j {
                diagonal_block_entry(host_ecc[i], &scheme.factors()[i], x, px, y, py)
            } else {
                off_diagonal_block_entry(eh.get(i, j), host_ecc[i], host_ecc[j], px, py)
            };
            m.set(p, q, v);
        }
    }
    Ok(HJoinEcc {
        matrix: EccMatrix { inner: m },
        permutation,
        partition,
    })
}

fn off_diagonal_block_entry(a_ij: i64, ecc_i: u32, ecc_j: u32, px: Part, py: Part) -> i64 {
    use Part::*;
    match a_ij {
        0 => 0,
        1 => match (ecc_i == 1, ecc_j == 1) {
            (true, true) => i64::from(!(px == Rest && py == Rest)),
            (true, false) => i64::from(px == Dominating),
            (false, true) => i64::from(py == Dominating),
            // a_ij = 1 forces one endpoint of host eccentricity 1
            (false, false) => unreachable!("a_ij = 1 with both host eccentricities >= 2"),
        },
        a => a,
    }
}

fn diagonal_block_entry(ecc_i: u32, g: &Graph, x: usize, px: Part, y: usize, py: Part) -> i64 {
    // 2·A(complement of <U_{i2}>) on the non-dominating block
    let rest_entry = || if g.has_edge(x, y) { 0 } else { 2 };
    match (ecc_i, px, py) {
        (1, Part::Rest, Part::Rest) => rest_entry(),
        (1, _, _) => 1,
        (2, Part::Rest, Part::Rest) => rest_entry(),
        _ => 0,
    }
}
