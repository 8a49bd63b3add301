//! Simple undirected graphs, named families and BFS metrics.
//!
//! Vertices are the dense labels `0..n`. Every family constructor fixes a
//! vertex order (documented on the constructor) so that matrices built from
//! the same family are byte-identical across runs.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A finite simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate pairs (in either orientation) collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![false; n * n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Self::from_dense(n, adj))
    }

    fn from_dense(n: usize, adj: Vec<bool>) -> Self {
        let nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| adj[u * n + v]).collect())
            .collect();
        Self { n, adj, nbrs }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.nbrs[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.nbrs[u].len()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.nbrs[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// The common degree if the graph is regular.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Vertices adjacent to every other vertex.
    pub fn dominating_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&u| self.degree(u) == self.n - 1).collect()
    }

    pub fn complement(&self) -> Self {
        let n = self.n;
        let adj = (0..n * n)
            .map(|idx| idx / n != idx % n && !self.adj[idx])
            .collect();
        Self::from_dense(n, adj)
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let m = vertices.len();
        if m == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::new();
        for a in 0..m {
            for b in (a + 1)..m {
                if self.has_edge(vertices[a], vertices[b]) {
                    edges.push((a, b));
                }
            }
        }
        Self::new(m, edges)
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for (u, v) in self.edges() {
            m.set(u, v, 1);
            m.set(v, u, 1);
        }
        m
    }

    fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.nbrs[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// All-pairs hop distances with eccentricities, radius and diameter.
    pub fn metric_profile(&self) -> Result<MetricProfile> {
        let n = self.n;
        let rows: Vec<Vec<u32>> = (0..n)
            .into_par_iter()
            .map(|s| {
                self.bfs(s)
                    .into_iter()
                    .map(|d| d.ok_or(Error::Disconnected))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<_>>()?;
        let ecc: Vec<u32> = rows
            .iter()
            .map(|r| r.iter().copied().max().unwrap_or(0))
            .collect();
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        Ok(MetricProfile {
            n,
            dist: rows.concat(),
            ecc,
            radius,
            diameter,
        })
    }

    /// Isomorphism-invariant signature: for each vertex its degree and sorted
    /// distance row, the whole list sorted. Equal signatures are necessary (not
    /// sufficient) for isomorphism.
    pub fn signature(&self) -> Result<Vec<(usize, Vec<u32>)>> {
        let profile = self.metric_profile()?;
        let mut sig: Vec<(usize, Vec<u32>)> = (0..self.n)
            .map(|u| {
                let mut row = profile.row(u).to_vec();
                row.sort_unstable();
                (self.degree(u), row)
            })
            .collect();
        sig.sort();
        Ok(sig)
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::new(self.n + other.n, edges).expect("union of valid graphs")
    }

    // ---- families ----

    /// `P_n`: vertices in path order.
    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `C_n`, `n >= 3`: vertices in cyclic order.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(family_err("cycle", "needs n >= 3"));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, all_pairs(0..n))
    }

    /// `K̄_n`, the edgeless graph.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    /// `K_{1,m}`: center is vertex 0.
    pub fn star(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(family_err("star", "needs m >= 1"));
        }
        Self::new(m + 1, (1..=m).map(|i| (0, i)))
    }

    /// `K_{n_1,...,n_k}`: parts laid out consecutively.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(family_err("multipartite", "needs non-empty positive part sizes"));
        }
        let mut part_of = Vec::new();
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let n = part_of.len();
        Self::new(
            n,
            all_pairs(0..n).filter(|&(u, v)| part_of[u] != part_of[v]),
        )
    }

    /// Double star `S_{a,b}`: center of the `a`-star is 0, its leaves `1..=a`,
    /// the second center `a+1`, its leaves after it.
    pub fn double_star(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(family_err("double_star", "needs a, b >= 1"));
        }
        let c2 = a + 1;
        let edges = (1..=a)
            .map(|i| (0, i))
            .chain(std::iter::once((0, c2)))
            .chain((1..=b).map(|i| (c2, c2 + i)));
        Self::new(a + b + 2, edges)
    }

    /// Barbell `B_{n,n}`: clique 1 on `0..n` with bridge vertex `n-1`,
    /// clique 2 on `n..2n` with bridge vertex `n`.
    pub fn barbell(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(family_err("barbell", "needs n >= 2"));
        }
        let edges = all_pairs(0..n)
            .chain(all_pairs(n..2 * n))
            .chain(std::iter::once((n - 1, n)));
        Self::new(2 * n, edges)
    }

    /// Windmill `W_{n+1}^{(t)}`: `t` copies of `K_{n+1}` sharing vertex 0;
    /// copy `c` owns vertices `1 + c*n ..= (c+1)*n`.
    pub fn windmill(n: usize, t: usize) -> Result<Self> {
        if n == 0 || t == 0 {
            return Err(family_err("windmill", "needs n, t >= 1"));
        }
        let mut edges = Vec::new();
        for c in 0..t {
            let block: Vec<usize> = (1 + c * n..=(c + 1) * n).collect();
            edges.extend(block.iter().map(|&v| (0, v)));
            edges.extend(all_pairs_of(&block));
        }
        Self::new(1 + n * t, edges)
    }

    /// Wheel `W_{n+1}`: hub 0, rim `1..=n` in cyclic order. Needs `n >= 3`.
    pub fn wheel(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(family_err("wheel", "needs n >= 3"));
        }
        let edges = (1..=n)
            .map(|i| (0, i))
            .chain((1..=n).map(|i| (i, i % n + 1)));
        Self::new(n + 1, edges)
    }

    /// `S_{n,3}`: triangle on 0,1,2 with pendants `3..n` attached to vertex 2.
    pub fn s_n3(n: usize) -> Result<Self> {
        if n < 5 {
            return Err(family_err("s_n3", "needs n >= 5"));
        }
        let edges = [(0, 1), (1, 2), (0, 2)]
            .into_iter()
            .chain((3..n).map(|i| (2, i)));
        Self::new(n, edges)
    }

    /// Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let edges = (0..5)
            .map(|i| (i, (i + 1) % 5))
            .chain((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)))
            .chain((0..5).map(|i| (i, i + 5)));
        Self::new(10, edges).expect("petersen")
    }

    /// Circulant `k`-regular graph on `n` vertices: `i ~ i±1..=i±k/2`, plus the
    /// antipodal vertex when `k` is odd. Needs `k < n` and `n*k` even.
    pub fn regular(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k >= n || (n * k) % 2 == 1 {
            return Err(family_err("regular", "needs k < n and n*k even"));
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for s in 1..=k / 2 {
                edges.push((i, (i + s) % n));
            }
            if k % 2 == 1 {
                edges.push((i, (i + n / 2) % n));
            }
        }
        Self::new(n, edges)
    }

    /// Builds a named family from integer parameters. Accepts short names
    /// (`P`, `C`, `K`, `Kbar`, `Star`, `S`, `Kmp`, `B`, `Wd`, `W`, `Sn3`, `R`)
    /// and long names (`path`, `cycle`, ...).
    pub fn family(name: &str, params: &[usize]) -> Result<Self> {
        let want = |count: usize| -> Result<()> {
            if params.len() == count {
                Ok(())
            } else {
                Err(family_err(name, &format!("expected {count} parameter(s), got {}", params.len())))
            }
        };
        match canonical_family(name) {
            Some("path") => want(1).and_then(|_| Self::path(params[0])),
            Some("cycle") => want(1).and_then(|_| Self::cycle(params[0])),
            Some("complete") => want(1).and_then(|_| Self::complete(params[0])),
            Some("empty") => want(1).and_then(|_| Self::empty(params[0])),
            Some("star") => want(1).and_then(|_| Self::star(params[0])),
            Some("multipartite") => Self::complete_multipartite(params),
            Some("double_star") => want(2).and_then(|_| Self::double_star(params[0], params[1])),
            Some("barbell") => want(1).and_then(|_| Self::barbell(params[0])),
            Some("windmill") => want(2).and_then(|_| Self::windmill(params[0], params[1])),
            Some("wheel") => want(1).and_then(|_| Self::wheel(params[0])),
            Some("s_n3") => want(1).and_then(|_| Self::s_n3(params[0])),
            Some("petersen") => want(0).map(|_| Self::petersen()),
            Some("regular") => want(2).and_then(|_| Self::regular(params[0], params[1])),
            _ => Err(Error::UnknownFamily(name.to_string())),
        }
    }
}

/// Family names known to [`Graph::family`], short and long forms.
pub const FAMILY_NAMES: &[(&str, &str)] = &[
    ("P", "path"),
    ("path", "path"),
    ("C", "cycle"),
    ("cycle", "cycle"),
    ("K", "complete"),
    ("complete", "complete"),
    ("Kbar", "empty"),
    ("empty", "empty"),
    ("Star", "star"),
    ("star", "star"),
    ("Kmp", "multipartite"),
    ("multipartite", "multipartite"),
    ("S", "double_star"),
    ("double_star", "double_star"),
    ("B", "barbell"),
    ("barbell", "barbell"),
    ("Wd", "windmill"),
    ("windmill", "windmill"),
    ("W", "wheel"),
    ("wheel", "wheel"),
    ("Sn3", "s_n3"),
    ("s_n3", "s_n3"),
    ("Petersen", "petersen"),
    ("petersen", "petersen"),
    ("R", "regular"),
    ("regular", "regular"),
];

fn canonical_family(name: &str) -> Option<&'static str> {
    FAMILY_NAMES
        .iter()
        .find(|(alias, _)| *alias == name)
        .map(|(_, canon)| *canon)
}

fn family_err(family: &str, reason: &str) -> Error {
    Error::FamilyParams {
        family: family.to_string(),
        reason: reason.to_string(),
    }
}

fn all_pairs(range: std::ops::Range<usize>) -> impl Iterator<Item = (usize, usize)> {
    let r2 = range.clone();
    range.flat_map(move |u| (u + 1..r2.end).map(move |v| (u, v)))
}

fn all_pairs_of(vs: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, &u) in vs.iter().enumerate() {
        for &v in &vs[a + 1..] {
            out.push((u, v));
        }
    }
    out
}

/// Hop distances and eccentricities of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricProfile {
    n: usize,
    dist: Vec<u32>,
    pub ecc: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
}

impl MetricProfile {
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

/// Parses the edge-list text format: a header `n m`, then `m` lines `u v`
/// (0-based). `#` starts a comment that runs to the end of the line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::EdgeList {
        line: 0,
        message: "missing header".into(),
    })?;
    let nums = parse_pair(hline, header)?;
    let (n, m) = (nums.0, nums.1);
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        edges.push(parse_pair(line, body)?);
    }
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: 0,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let err = |message: String| Error::EdgeList { line, message };
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(format!("expected two integers, got `{body}`")));
    }
    let parse = |s: &str| s.parse::<usize>().map_err(|e| err(format!("`{s}`: {e}")));
    Ok((parse(fields[0])?, parse(fields[1])?))
}

/// Writes the edge-list format parsed by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_pairs() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert_eq!(Graph::new(0, []), Err(Error::EmptyGraph));
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(3, [(0, 1), (1, 0), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g, Graph::path(3).unwrap());
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.is_complete());
        assert_eq!(Graph::new(1, []).unwrap().edge_count(), 0);
    }

    #[test]
    fn families() {
        let w = Graph::windmill(2, 2).unwrap();
        assert_eq!((w.order(), w.edge_count()), (5, 6));
        let s = Graph::s_n3(5).unwrap();
        assert_eq!(s.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4)]);
        assert_eq!(
            Graph::double_star(1, 1).unwrap().signature().unwrap(),
            Graph::path(4).unwrap().signature().unwrap()
        );
        assert_eq!(Graph::barbell(2).unwrap(), Graph::path(4).unwrap());
        assert_eq!(Graph::wheel(4).unwrap().edge_count(), 8);
        assert_eq!(Graph::petersen().is_regular(), Some(3));
        assert_eq!(Graph::regular(6, 3).unwrap().is_regular(), Some(3));
        assert_eq!(Graph::regular(7, 4).unwrap().is_regular(), Some(4));
        assert!(Graph::regular(5, 3).is_err());
        assert!(Graph::s_n3(4).is_err());
        assert!(Graph::barbell(1).is_err());
        assert_eq!(
            Graph::family("Kmp", &[2, 3]).unwrap().edge_count(),
            6
        );
        assert!(matches!(Graph::family("nope", &[1]), Err(Error::UnknownFamily(_))));
        assert!(matches!(Graph::family("P", &[1, 2]), Err(Error::FamilyParams { .. })));
    }

    #[test]
    fn complement_cases() {
        let kn = Graph::complete(5).unwrap();
        assert_eq!(kn.complement(), Graph::empty(5).unwrap());
        let c4c = Graph::cycle(4).unwrap().complement();
        assert_eq!(c4c.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        let p = Graph::petersen();
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn metrics() {
        let p4 = Graph::path(4).unwrap().metric_profile().unwrap();
        assert_eq!(p4.ecc, vec![3, 2, 2, 3]);
        assert_eq!((p4.radius, p4.diameter), (2, 3));
        for t in 2..7 {
            let c = Graph::cycle(2 * t).unwrap().metric_profile().unwrap();
            assert!(c.ecc.iter().all(|&e| e as usize == t));
        }
        let star = Graph::star(4).unwrap().metric_profile().unwrap();
        assert_eq!(star.ecc, vec![1, 2, 2, 2, 2]);
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.metric_profile(), Err(Error::Disconnected));
    }

    #[test]
    fn regularity_and_degree() {
        assert_eq!(Graph::cycle(5).unwrap().is_regular(), Some(2));
        assert_eq!(Graph::path(4).unwrap().is_regular(), None);
        assert_eq!(Graph::star(3).unwrap().max_degree(), 3);
    }

    #[test]
    fn edge_list_roundtrip_and_comments() {
        let text = "# a path\n3 2\n0 1 # first\n\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::EdgeList { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::EdgeList { line: 2, .. })));
        assert_eq!(parse_edge_list("3 1\n1 1\n"), Err(Error::SelfLoop(1)));
    }
}
