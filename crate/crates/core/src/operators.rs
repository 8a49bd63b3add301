//! Graph composition: H-join, lexicographic product, join, generalized corona
//! and coalescence.
//!
//! Composite graphs keep a fixed block layout: host vertices (when the host is
//! kept, as in the corona) come first, then each factor's vertices in factor
//! index order, each factor in its own vertex order.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A host graph `H` on `k >= 2` vertices together with one factor per host vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinScheme {
    host: Graph,
    factors: Vec<Graph>,
    offsets: Vec<usize>,
}

impl JoinScheme {
    pub fn new(host: Graph, factors: Vec<Graph>) -> Result<Self> {
        let k = host.order();
        if k < 2 {
            return Err(Error::HostTooSmall(k));
        }
        if factors.len() != k {
            return Err(Error::FactorCount {
                expected: k,
                got: factors.len(),
            });
        }
        if !host.is_connected() {
            return Err(Error::Disconnected);
        }
        let offsets = factors
            .iter()
            .scan(0, |acc, g| {
                let start = *acc;
                *acc += g.order();
                Some(start)
            })
            .collect();
        Ok(Self {
            host,
            factors,
            offsets,
        })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn factors(&self) -> &[Graph] {
        &self.factors
    }

    /// Index of the first vertex of factor `i` in the joined graph.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.factors.iter().map(Graph::order).collect()
    }

    pub fn total_order(&self) -> usize {
        self.factors.iter().map(Graph::order).sum()
    }
}

/// `H[G_1, ..., G_k]`.
pub fn h_join(scheme: &JoinScheme) -> Graph {
    let off = scheme.offsets();
    let mut edges = Vec::new();
    for (i, g) in scheme.factors().iter().enumerate() {
        edges.extend(g.edges().map(|(u, v)| (u + off[i], v + off[i])));
    }
    for (i, j) in scheme.host().edges() {
        let (gi, gj) = (&scheme.factors()[i], &scheme.factors()[j]);
        for u in 0..gi.order() {
            for v in 0..gj.order() {
                edges.push((off[i] + u, off[j] + v));
            }
        }
    }
    Graph::new(scheme.total_order(), edges).expect("h-join of valid graphs")
}

/// `H[G]`, the H-join with every factor equal to `g`.
pub fn lexicographic(h: &Graph, g: &Graph) -> Result<Graph> {
    let scheme = JoinScheme::new(h.clone(), vec![g.clone(); h.order()])?;
    Ok(h_join(&scheme))
}

/// `G_1 ∨ G_2`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut edges: Vec<(usize, usize)> = g1.disjoint_union(g2).edges().collect();
    for u in 0..n1 {
        for v in 0..g2.order() {
            edges.push((u, n1 + v));
        }
    }
    Graph::new(n1 + g2.order(), edges).expect("join of valid graphs")
}

/// Generalized corona: host vertices `0..k` first, then `G_1..G_k`; host
/// vertex `i` is joined to every vertex of `G_i`.
pub fn generalized_corona(h: &Graph, factors: &[Graph]) -> Result<Graph> {
    let k = h.order();
    if factors.len() != k {
        return Err(Error::FactorCount {
            expected: k,
            got: factors.len(),
        });
    }
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    let mut start = k;
    for (i, g) in factors.iter().enumerate() {
        edges.extend(g.edges().map(|(u, v)| (u + start, v + start)));
        edges.extend((0..g.order()).map(|u| (i, start + u)));
        start += g.order();
    }
    Graph::new(start, edges)
}

/// Glues `g1` at `v1` to `g2` at `v2`. Vertices of `g1` keep their labels;
/// `g2`'s vertices other than `v2` follow in order.
pub fn coalescence(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    for (g, v) in [(g1, v1), (g2, v2)] {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    let n1 = g1.order();
    let map = |u: usize| -> usize {
        match u.cmp(&v2) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => n1 + u,
            std::cmp::Ordering::Greater => n1 + u - 1,
        }
    };
    let edges = g1
        .edges()
        .chain(g2.edges().map(|(u, v)| (map(u), map(v))));
    Graph::new(n1 + g2.order() - 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }
    fn kbar(n: usize) -> Graph {
        Graph::empty(n).unwrap()
    }

    #[test]
    fn scheme_validation() {
        assert_eq!(
            JoinScheme::new(k(1), vec![k(2)]),
            Err(Error::HostTooSmall(1))
        );
        assert!(matches!(
            JoinScheme::new(k(3), vec![k(1)]),
            Err(Error::FactorCount { expected: 3, got: 1 })
        ));
        assert_eq!(
            JoinScheme::new(kbar(2), vec![k(1), k(1)]),
            Err(Error::Disconnected)
        );
        let s = JoinScheme::new(Graph::path(3).unwrap(), vec![k(2), kbar(3), k(1)]).unwrap();
        assert_eq!(s.offsets(), &[0, 2, 5]);
    }

    #[test]
    fn h_join_examples() {
        let star = Graph::star(2).unwrap();
        let s = JoinScheme::new(star.clone(), vec![k(1), k(1), k(1)]).unwrap();
        assert_eq!(h_join(&s), star);

        let p4 = Graph::path(4).unwrap();
        let s = JoinScheme::new(p4, vec![kbar(2), k(1), k(1), kbar(3)]).unwrap();
        assert_eq!(
            h_join(&s).signature().unwrap(),
            Graph::double_star(2, 3).unwrap().signature().unwrap()
        );

        let s = JoinScheme::new(star, vec![k(1), k(2), k(2)]).unwrap();
        assert_eq!(h_join(&s), Graph::windmill(2, 2).unwrap());
    }

    #[test]
    fn lexicographic_examples() {
        let c6k2 = lexicographic(&Graph::cycle(6).unwrap(), &k(2)).unwrap();
        assert_eq!((c6k2.order(), c6k2.edge_count()), (12, 30));
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(lexicographic(&k(2), &c4).unwrap(), join(&c4, &c4));
        let p5 = Graph::path(5).unwrap();
        assert_eq!(lexicographic(&p5, &k(1)).unwrap(), p5);
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&k(1), &Graph::cycle(4).unwrap()), Graph::wheel(4).unwrap());
        assert_eq!(
            join(&kbar(2), &kbar(3)),
            Graph::complete_multipartite(&[2, 3]).unwrap()
        );
        assert_eq!(join(&k(1), &kbar(4)), Graph::star(4).unwrap());
    }

    #[test]
    fn corona_examples() {
        let p4 = generalized_corona(&k(2), &[k(1), k(1)]).unwrap();
        assert_eq!(p4.signature().unwrap(), Graph::path(4).unwrap().signature().unwrap());
        let kc = generalized_corona(&k(3), &vec![Graph::cycle(4).unwrap(); 3]).unwrap();
        assert_eq!(kc.order(), 3 * 5);
        let net = generalized_corona(&k(3), &[k(1), k(1), k(1)]).unwrap();
        assert_eq!(net.edge_count(), 6);
        let mut degs: Vec<usize> = (0..6).map(|u| net.degree(u)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 3, 3, 3]);
        assert!(generalized_corona(&k(3), &[k(1)]).is_err());
    }

    #[test]
    fn coalescence_examples() {
        let g = coalescence(&k(3), 0, &k(4), 0).unwrap();
        assert_eq!(g.order(), 6);
        let alt = h_join(&JoinScheme::new(Graph::star(2).unwrap(), vec![k(1), k(2), k(3)]).unwrap());
        assert_eq!(g.signature().unwrap(), alt.signature().unwrap());

        let mut w = k(4);
        for _ in 1..3 {
            w = coalescence(&w, 0, &k(4), 0).unwrap();
        }
        assert_eq!(w, Graph::windmill(3, 3).unwrap());
        assert!(coalescence(&k(2), 2, &k(2), 0).is_err());
    }
}
