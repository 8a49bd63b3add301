//! Every closed form, addressable by id, with a default parameter sweep and a
//! way to build the graph it describes.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::closed::{self, adjacency_spectrum, ids, ClosedFormResult, StarJoinFactor};
use crate::error::{Error, Result};
use crate::expr::GraphExpr;
use crate::graph::Graph;
use crate::operators::{coalescence, generalized_corona, h_join, join, lexicographic, JoinScheme};

use super::params::{Params, Resolved};
use super::random::{
    describe, random_complement_degree, random_factor, random_without_dominating, regular_complement_factor,
};

/// One point of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub label: Vec<(String, String)>,
    ints: Vec<usize>,
    graphs: Vec<GraphExpr>,
}

impl Case {
    fn new(label: &[(&str, String)], ints: Vec<usize>, graphs: Vec<GraphExpr>) -> Self {
        Self {
            label: label.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            ints,
            graphs,
        }
    }

    fn of_ints(names: &[&str], ints: &[usize]) -> Self {
        let label: Vec<(&str, String)> = names.iter().zip(ints).map(|(n, v)| (*n, v.to_string())).collect();
        Self::new(&label, ints.to_vec(), Vec::new())
    }
}

/// A closed form applied to a concrete graph.
#[derive(Debug, Clone)]
pub struct Instance {
    pub result: ClosedFormResult,
    pub graph: Graph,
    /// Randomly drawn choices, reported next to the case label.
    pub drawn: Vec<(String, String)>,
}

impl Instance {
    fn new(result: ClosedFormResult, graph: Graph) -> Self {
        Self {
            result,
            graph,
            drawn: Vec::new(),
        }
    }

    fn drew(mut self, name: &str, value: String) -> Self {
        self.drawn.push((name.to_string(), value));
        self
    }
}

type CasesFn = fn(&Resolved) -> Result<Vec<Case>>;
type BuildFn = fn(&Case, &mut ChaCha8Rng) -> Result<Instance>;

pub struct Theorem {
    pub id: &'static str,
    pub summary: &'static str,
    /// Accepted parameters and their defaults.
    pub params: &'static [(&'static str, &'static str)],
    cases: CasesFn,
    build: BuildFn,
}

impl Theorem {
    pub fn cases(&self, params: &Params) -> Result<Vec<Case>> {
        (self.cases)(&Resolved::new(params, self.params)?)
    }

    pub fn instantiate(&self, case: &Case, rng: &mut ChaCha8Rng) -> Result<Instance> {
        (self.build)(case, rng)
    }
}

impl std::fmt::Debug for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Theorem").field("id", &self.id).finish()
    }
}

pub fn theorems() -> &'static [Theorem] {
    THEOREMS
}

pub fn theorem(id: &str) -> Result<&'static Theorem> {
    THEOREMS
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

fn product(lists: &[Vec<usize>]) -> Vec<Vec<usize>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect()
    })
}

fn grid(p: &Resolved, names: &[&str], keep: impl Fn(&[usize]) -> bool) -> Result<Vec<Case>> {
    let lists = names.iter().map(|n| p.ints(n)).collect::<Result<Vec<_>>>()?;
    Ok(product(&lists)
        .into_iter()
        .filter(|t| keep(t))
        .map(|t| Case::of_ints(names, &t))
        .collect())
}

/// One case per host and trial; explicit `sizes` replace the random draw.
fn host_trials(p: &Resolved) -> Result<Vec<Case>> {
    let max = p.int("max_size")?;
    let sizes = p.ints("sizes")?;
    let mut out = Vec::new();
    for host in p.graphs("host")? {
        if !sizes.is_empty() {
            out.push(Case::new(&[("host", host.to_string()), ("sizes", fmt_list(&sizes))], sizes.clone(), vec![host]));
            continue;
        }
        for t in 0..p.int("trials")? {
            out.push(Case::new(&[("host", host.to_string()), ("trial", t.to_string())], vec![max], vec![host.clone()]));
        }
    }
    Ok(out)
}

fn host_and_m(p: &Resolved) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for host in p.graphs("host")? {
        for m in p.ints("m")? {
            out.push(Case::new(&[("host", host.to_string()), ("m", m.to_string())], vec![m], vec![host.clone()]));
        }
    }
    Ok(out)
}

fn fmt_list(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", s.join(","))
}

fn fmt_graphs(gs: &[Graph]) -> String {
    gs.iter().map(describe).collect::<Vec<_>>().join(" | ")
}

/// Sizes from the case, or drawn uniformly from `1..=max_size`.
fn case_sizes(case: &Case, k: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    if case.label.iter().any(|(n, _)| n == "sizes") {
        case.ints.clone()
    } else {
        (0..k).map(|_| rng.random_range(1..=case.ints[0])).collect()
    }
}

fn build_rad3(case: &Case, rng: &mut ChaCha8Rng) -> Result<Instance> {
    let h = case.graphs[0].build()?;
    let sizes = case_sizes(case, h.order(), rng);
    let factors: Vec<Graph> = sizes.iter().map(|&s| random_factor(s, rng)).collect();
    let g = h_join(&JoinScheme::new(h.clone(), factors.clone())?);
    Ok(Instance::new(closed::spec_hjoin_rad3(&h, &sizes)?, g)
        .drew("sizes", fmt_list(&sizes))
        .drew("factors", fmt_graphs(&factors)))
}

fn build_rad2(case: &Case, rng: &mut ChaCha8Rng) -> Result<Instance> {
    let h = case.graphs[0].build()?;
    let sizes = case_sizes(case, h.order(), rng);
    let ecc = h.metric_profile()?.ecc;
    let factors = sizes
        .iter()
        .zip(&ecc)
        .map(|(&s, &e)| if e == 2 { Graph::complete(s) } else { Ok(random_factor(s, rng)) })
        .collect::<Result<Vec<_>>>()?;
    let complete: Vec<bool> = factors.iter().map(Graph::is_complete).collect();
    let g = h_join(&JoinScheme::new(h.clone(), factors.clone())?);
    Ok(Instance::new(closed::spec_hjoin_rad2_complete(&h, &sizes, &complete)?, g)
        .drew("sizes", fmt_list(&sizes))
        .drew("factors", fmt_graphs(&factors)))
}

fn build_lex_rad3(case: &Case, rng: &mut ChaCha8Rng) -> Result<Instance> {
    let h = case.graphs[0].build()?;
    let f = random_factor(case.ints[0], rng);
    let g = lexicographic(&h, &f)?;
    Ok(Instance::new(closed::spec_lex_rad3(&h, case.ints[0])?, g).drew("factor", describe(&f)))
}

fn build_lex_complete(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let h = case.graphs[0].build()?;
    let g = lexicographic(&h, &Graph::complete(case.ints[0])?)?;
    Ok(Instance::new(closed::spec_lex_complete(&h, case.ints[0])?, g))
}

fn build_even_cycle(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let t = case.ints[0];
    Ok(Instance::new(closed::spec_even_cycle(t)?, Graph::cycle(2 * t)?))
}

fn build_odd_cycle(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let t = case.ints[0];
    Ok(Instance::new(closed::spec_odd_cycle(t)?, Graph::cycle(2 * t + 1)?))
}

fn complete_host_cases(p: &Resolved) -> Result<Vec<Case>> {
    let max = p.int("max_size")?;
    let mut out = Vec::new();
    for k in p.ints("k")? {
        for t in 0..p.int("trials")? {
            out.push(Case::new(&[("k", k.to_string()), ("trial", t.to_string())], vec![k, max], Vec::new()));
        }
    }
    Ok(out)
}

fn build_complete_host(case: &Case, rng: &mut ChaCha8Rng) -> Result<Instance> {
    let (k, max) = (case.ints[0], case.ints[1].max(2));
    let factors: Vec<Graph> = (0..k).map(|_| random_without_dominating(rng.random_range(2..=max), rng)).collect();
    let g = h_join(&JoinScheme::new(Graph::complete(k)?, factors.clone())?);
    Ok(Instance::new(closed::spec_complete_host_join(&factors)?, g).drew("factors", fmt_graphs(&factors)))
}

fn multipartite_cases(p: &Resolved) -> Result<Vec<Case>> {
    let mut sizes = p.ints("size")?;
    sizes.sort_unstable();
    sizes.dedup();
    let mut out = Vec::new();
    for k in p.ints("k")? {
        for parts in product(&vec![sizes.clone(); k]) {
            if parts.windows(2).all(|w| w[0] <= w[1]) {
                out.push(Case::new(&[("parts", fmt_list(&parts))], parts, Vec::new()));
            }
        }
    }
    Ok(out)
}

fn build_multipartite(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    Ok(Instance::new(
        closed::spec_complete_multipartite(&case.ints)?,
        Graph::complete_multipartite(&case.ints)?,
    ))
}

fn build_join(case: &Case, rng: &mut ChaCha8Rng) -> Result<Instance> {
    let g1 = random_without_dominating(case.ints[0], rng);
    let g2 = random_without_dominating(case.ints[1], rng);
    Ok(Instance::new(closed::spec_join(&g1, &g2)?, join(&g1, &g2)).drew("factors", fmt_graphs(&[g1, g2])))
}

fn p4_with(ends: [Graph; 2]) -> Result<Graph> {
    let [a, b] = ends;
    Ok(h_join(&JoinScheme::new(Graph::path(4)?, vec![a, Graph::complete(1)?, Graph::complete(1)?, b])?))
}

fn build_p4(case: &Case, rng: &mut ChaCha8Rng) -> Result<Instance> {
    let g1 = random_factor(case.ints[0], rng);
    let g4 = random_factor(case.ints[1], rng);
    let g = p4_with([g1.clone(), g4.clone()])?;
    Ok(Instance::new(closed::spec_p4_join(case.ints[0], case.ints[1])?, g).drew("factors", fmt_graphs(&[g1, g4])))
}

fn build_double_star(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let (a, b) = (case.ints[0], case.ints[1]);
    Ok(Instance::new(closed::spec_double_star(a, b)?, Graph::double_star(a, b)?))
}

fn build_barbell(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let n = case.ints[0];
    Ok(Instance::new(closed::spec_barbell(n)?, Graph::barbell(n)?))
}

/// Random star-join cases, or one case from an explicit `factors` list (hub first).
fn star_join_cases(p: &Resolved) -> Result<Vec<Case>> {
    let given = p.graphs("factors")?;
    if !given.is_empty() {
        let label = given.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ");
        return Ok(vec![Case::new(&[("factors", label)], Vec::new(), given)]);
    }
    let max = p.int("max_order")?;
    let mut out = Vec::new();
    for ell in p.ints("ell")? {
        for m in p.ints("m")? {
            for t in 0..p.int("trials")? {
                let label = [("ell", ell.to_string()), ("m", m.to_string()), ("trial", t.to_string())];
                out.push(Case::new(&label, vec![ell, m, max], Vec::new()));
            }
        }
    }
    Ok(out)
}

fn star_join_factors(case: &Case, hub_complete: bool, rng: &mut ChaCha8Rng) -> Result<Vec<Graph>> {
    if !case.graphs.is_empty() {
        return case.graphs.iter().map(GraphExpr::build).collect();
    }
    let (ell, m, max) = (case.ints[0], case.ints[1], case.ints[2]);
    let r = if hub_complete { 0 } else { random_complement_degree(ell, 1, rng) };
    let mut factors = vec![regular_complement_factor(ell, r)?];
    for _ in 0..m {
        let lo = if m == 1 && !hub_complete { 2 } else { 1 };
        let n = rng.random_range(lo..=max.max(lo));
        let min = usize::from(m == 1);
        factors.push(regular_complement_factor(n, random_complement_degree(n, min, rng))?);
    }
    Ok(factors)
}

fn build_star_join(case: &Case, hub_complete: bool, rng: &mut ChaCha8Rng) -> Result<Instance> {
    let factors = star_join_factors(case, hub_complete, rng)?;
    if factors.len() < 2 {
        return Err(Error::Param {
            name: "factors".into(),
            reason: "need a hub and at least one leaf".into(),
        });
    }
    let parts = factors.iter().map(StarJoinFactor::of_graph).collect::<Result<Vec<_>>>()?;
    let g = h_join(&JoinScheme::new(Graph::star(factors.len() - 1)?, factors.clone())?);
    Ok(Instance::new(closed::charpoly_star_join(&parts[0], &parts[1..])?, g).drew("factors", fmt_graphs(&factors)))
}

fn build_star_join_complete(case: &Case, rng: &mut ChaCha8Rng) -> Result<Instance> {
    build_star_join(case, true, rng)
}

fn build_star_join_noncomplete(case: &Case, rng: &mut ChaCha8Rng) -> Result<Instance> {
    build_star_join(case, false, rng)
}

/// A single leaf needs a non-complete factor unless everything is `K_1`.
fn uniform_ok(ell: usize, r: usize, m: usize, n: usize, k: usize) -> bool {
    r < ell && (ell * r) % 2 == 0 && k < n && (n * k) % 2 == 0 && (m > 1 || k >= 1 || (n == 1 && r == 0))
}

fn uniform_complete_cases(p: &Resolved) -> Result<Vec<Case>> {
    grid(p, &["ell", "m", "n", "k"], |t| uniform_ok(t[0], 0, t[1], t[2], t[3]))
}

fn uniform_noncomplete_cases(p: &Resolved) -> Result<Vec<Case>> {
    grid(p, &["ell", "r", "m", "n", "k"], |t| t[1] >= 1 && uniform_ok(t[0], t[1], t[2], t[3], t[4]))
}

fn build_uniform(ell: usize, r: usize, m: usize, n: usize, k: usize) -> Result<Instance> {
    let hub_bar = Graph::regular(ell, r)?;
    let leaf_bar = Graph::regular(n, k)?;
    let mut factors = vec![hub_bar.complement()];
    factors.extend(std::iter::repeat_n(leaf_bar.complement(), m));
    let leaf_spectra = vec![adjacency_spectrum(&leaf_bar); m];
    let res = closed::spec_uniform_star_join(ell, r, m, n, k, &leaf_spectra, &adjacency_spectrum(&hub_bar))?;
    let g = h_join(&JoinScheme::new(Graph::star(m)?, factors)?);
    Ok(Instance::new(res, g))
}

fn build_uniform_complete(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let t = &case.ints;
    build_uniform(t[0], 0, t[1], t[2], t[3])
}

fn build_uniform_noncomplete(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let t = &case.ints;
    build_uniform(t[0], t[1], t[2], t[3], t[4])
}

fn k1_join_cases(p: &Resolved) -> Result<Vec<Case>> {
    let given = p.graphs("graph")?;
    if !given.is_empty() {
        return Ok(given
            .into_iter()
            .map(|g| Case::new(&[("graph", g.to_string())], Vec::new(), vec![g]))
            .collect());
    }
    grid(p, &["n", "r"], |t| t[1] + 2 <= t[0] && (t[0] * t[1]) % 2 == 0)
}

fn build_k1_join(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let g = match case.graphs.first() {
        Some(e) => e.build()?,
        None => Graph::regular(case.ints[0], case.ints[1])?,
    };
    Ok(Instance::new(closed::spec_k1_join_regular(&g)?, join(&Graph::complete(1)?, &g)))
}

fn build_wheel(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let n = case.ints[0];
    Ok(Instance::new(closed::spec_wheel(n)?, Graph::wheel(n)?))
}

fn build_s_n3(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let n = case.ints[0];
    Ok(Instance::new(closed::spec_s_n3(n)?, Graph::s_n3(n)?))
}

fn build_s_n3_charpoly(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let n = case.ints[0];
    Ok(Instance::new(closed::charpoly_s_n3_printed(n)?, Graph::s_n3(n)?))
}

fn build_star(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let m = case.ints[0];
    Ok(Instance::new(closed::spec_star(m)?, Graph::star(m)?))
}

fn build_windmill(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let (n, m) = (case.ints[0], case.ints[1]);
    Ok(Instance::new(closed::spec_windmill(n, m)?, Graph::windmill(n, m)?))
}

fn build_coalesced(case: &Case, _: &mut ChaCha8Rng) -> Result<Instance> {
    let (a, b) = (case.ints[0], case.ints[1]);
    let g = coalescence(&Graph::complete(a)?, 0, &Graph::complete(b)?, 0)?;
    Ok(Instance::new(closed::spec_coalesced_cliques(a, b)?, g))
}

fn build_corona(case: &Case, rng: &mut ChaCha8Rng) -> Result<Instance> {
    let (k, n) = (case.ints[0], case.ints[1]);
    let factors: Vec<Graph> = (0..k).map(|_| random_factor(n, rng)).collect();
    let g = generalized_corona(&Graph::complete(k)?, &factors)?;
    Ok(Instance::new(closed::spec_complete_corona(k, n)?, g).drew("factors", fmt_graphs(&factors)))
}

macro_rules! grid_cases {
    ($($name:literal),+) => {
        |p: &Resolved| grid(p, &[$($name),+], |_| true)
    };
}

const HOST_TRIAL_PARAMS: &[(&str, &str)] = &[("host", "C6|C7|P7"), ("max_size", "3"), ("trials", "2"), ("sizes", "")];
const STAR_JOIN_PARAMS_COMPLETE: &[(&str, &str)] =
    &[("ell", "1..3"), ("m", "1..3"), ("max_order", "4"), ("trials", "2"), ("factors", "")];
const STAR_JOIN_PARAMS_NONCOMPLETE: &[(&str, &str)] =
    &[("ell", "2..4"), ("m", "1..3"), ("max_order", "4"), ("trials", "2"), ("factors", "")];

static THEOREMS: &[Theorem] = &[
    Theorem {
        id: ids::RAD3_QUOTIENT,
        summary: "H-join over a host of radius >= 3: quotient spectrum and inherited inertia",
        params: HOST_TRIAL_PARAMS,
        cases: host_trials,
        build: build_rad3,
    },
    Theorem {
        id: ids::LEX_RAD3,
        summary: "lexicographic product H[G], rad(H) >= 3",
        params: &[("host", "C6|C7|P7"), ("m", "1..3")],
        cases: host_and_m,
        build: build_lex_rad3,
    },
    Theorem {
        id: ids::EVEN_CYCLE,
        summary: "even cycle C_2t",
        params: &[("t", "2..8")],
        cases: grid_cases!("t"),
        build: build_even_cycle,
    },
    Theorem {
        id: ids::ODD_CYCLE,
        summary: "odd cycle C_2t+1",
        params: &[("t", "1..6")],
        cases: grid_cases!("t"),
        build: build_odd_cycle,
    },
    Theorem {
        id: ids::COMPLETE_HOST_JOIN,
        summary: "K_k-join of factors without dominating vertices",
        params: &[("k", "2..4"), ("max_size", "4"), ("trials", "2")],
        cases: complete_host_cases,
        build: build_complete_host,
    },
    Theorem {
        id: ids::COMPLETE_MULTIPARTITE,
        summary: "complete multipartite graph, every non-decreasing part tuple",
        params: &[("k", "2..4"), ("size", "2..4")],
        cases: multipartite_cases,
        build: build_multipartite,
    },
    Theorem {
        id: ids::JOIN,
        summary: "join G_1 v G_2 of factors without dominating vertices",
        params: &[("n1", "2..4"), ("n2", "2..4")],
        cases: grid_cases!("n1", "n2"),
        build: build_join,
    },
    Theorem {
        id: ids::RAD2_COMPLETE,
        summary: "H-join over a host of radius >= 2, complete factors at eccentricity 2",
        params: &[("host", "P4|C4|C5|P5"), ("max_size", "3"), ("trials", "2"), ("sizes", "")],
        cases: host_trials,
        build: build_rad2,
    },
    Theorem {
        id: ids::LEX_COMPLETE,
        summary: "H[K_m], rad(H) >= 2",
        params: &[("host", "P4|C4|C5|C6|P5"), ("m", "1..3")],
        cases: host_and_m,
        build: build_lex_complete,
    },
    Theorem {
        id: ids::P4_JOIN,
        summary: "P4[G_1, K_1, K_1, G_4]",
        params: &[("n1", "1..5"), ("n4", "1..5")],
        cases: grid_cases!("n1", "n4"),
        build: build_p4,
    },
    Theorem {
        id: ids::DOUBLE_STAR,
        summary: "double star S_a,b",
        params: &[("a", "1..5"), ("b", "1..5")],
        cases: grid_cases!("a", "b"),
        build: build_double_star,
    },
    Theorem {
        id: ids::BARBELL,
        summary: "barbell B_n,n",
        params: &[("n", "2..6")],
        cases: grid_cases!("n"),
        build: build_barbell,
    },
    Theorem {
        id: ids::STAR_JOIN_HUB_COMPLETE,
        summary: "star join with complete hub and regular-complement leaves: characteristic polynomial",
        params: STAR_JOIN_PARAMS_COMPLETE,
        cases: star_join_cases,
        build: build_star_join_complete,
    },
    Theorem {
        id: ids::STAR_JOIN_HUB_NONCOMPLETE,
        summary: "star join with non-complete hub and regular-complement leaves: characteristic polynomial",
        params: STAR_JOIN_PARAMS_NONCOMPLETE,
        cases: star_join_cases,
        build: build_star_join_noncomplete,
    },
    Theorem {
        id: ids::UNIFORM_STAR_JOIN_HUB_COMPLETE,
        summary: "star join with complete hub and identical k-regular-complement leaves",
        params: &[("ell", "1..3"), ("m", "1..3"), ("n", "1..4"), ("k", "0..3")],
        cases: uniform_complete_cases,
        build: build_uniform_complete,
    },
    Theorem {
        id: ids::UNIFORM_STAR_JOIN_HUB_NONCOMPLETE,
        summary: "star join with r-regular-complement hub and identical k-regular-complement leaves",
        params: &[("ell", "2..4"), ("r", "1..3"), ("m", "1..3"), ("n", "1..4"), ("k", "0..3")],
        cases: uniform_noncomplete_cases,
        build: build_uniform_noncomplete,
    },
    Theorem {
        id: ids::COALESCED_CLIQUES,
        summary: "two cliques K_a, K_b sharing a vertex",
        params: &[("a", "3..6"), ("b", "3..6")],
        cases: grid_cases!("a", "b"),
        build: build_coalesced,
    },
    Theorem {
        id: ids::K1_JOIN_REGULAR,
        summary: "K_1 v G with G r-regular, r <= n - 2",
        params: &[("n", "3..8"), ("r", "0..4"), ("graph", "")],
        cases: k1_join_cases,
        build: build_k1_join,
    },
    Theorem {
        id: ids::WHEEL,
        summary: "wheel W_n+1",
        params: &[("n", "4..8")],
        cases: grid_cases!("n"),
        build: build_wheel,
    },
    Theorem {
        id: ids::S_N3,
        summary: "S_n,3 = K_1,2[K_1, K_2, Kbar_n-3]: spectrum",
        params: &[("n", "5..8")],
        cases: grid_cases!("n"),
        build: build_s_n3,
    },
    Theorem {
        id: ids::S_N3_CHARPOLY,
        summary: "S_n,3: characteristic polynomial as printed",
        params: &[("n", "5..8")],
        cases: grid_cases!("n"),
        build: build_s_n3_charpoly,
    },
    Theorem {
        id: ids::STAR,
        summary: "star K_1,m",
        params: &[("m", "1..6")],
        cases: grid_cases!("m"),
        build: build_star,
    },
    Theorem {
        id: ids::WINDMILL,
        summary: "windmill: m copies of K_n+1 sharing a vertex",
        params: &[("n", "2..4"), ("m", "2..4")],
        cases: grid_cases!("n", "m"),
        build: build_windmill,
    },
    Theorem {
        id: ids::CORONA,
        summary: "generalized corona of K_k with k factors of order n",
        params: &[("k", "2..4"), ("n", "1..3")],
        cases: grid_cases!("k", "n"),
        build: build_corona,
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn registry_covers_every_id() {
        let all = [
            ids::RAD3_QUOTIENT,
            ids::LEX_RAD3,
            ids::EVEN_CYCLE,
            ids::ODD_CYCLE,
            ids::COMPLETE_HOST_JOIN,
            ids::COMPLETE_MULTIPARTITE,
            ids::JOIN,
            ids::RAD2_COMPLETE,
            ids::LEX_COMPLETE,
            ids::P4_JOIN,
            ids::DOUBLE_STAR,
            ids::BARBELL,
            ids::STAR_JOIN_HUB_COMPLETE,
            ids::STAR_JOIN_HUB_NONCOMPLETE,
            ids::UNIFORM_STAR_JOIN_HUB_COMPLETE,
            ids::UNIFORM_STAR_JOIN_HUB_NONCOMPLETE,
            ids::COALESCED_CLIQUES,
            ids::K1_JOIN_REGULAR,
            ids::WHEEL,
            ids::S_N3,
            ids::S_N3_CHARPOLY,
            ids::STAR,
            ids::WINDMILL,
            ids::CORONA,
        ];
        assert_eq!(theorems().len(), all.len());
        for id in all {
            assert_eq!(theorem(id).unwrap().id, id);
        }
        assert!(matches!(theorem("nope"), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn default_sweeps_build() {
        for t in theorems() {
            let cases = t.cases(&Params::new()).unwrap();
            assert!(!cases.is_empty(), "{}", t.id);
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            for c in &cases {
                let inst = t.instantiate(c, &mut rng).unwrap();
                assert_eq!(inst.result.output.order(), inst.graph.order(), "{} {:?}", t.id, c.label);
            }
        }
    }

    #[test]
    fn case_counts() {
        assert_eq!(theorem(ids::P4_JOIN).unwrap().cases(&Params::new()).unwrap().len(), 25);
        assert_eq!(theorem(ids::CORONA).unwrap().cases(&Params::new()).unwrap().len(), 9);
        // k = 2: 6 tuples, k = 3: 10, k = 4: 15
        assert_eq!(theorem(ids::COMPLETE_MULTIPARTITE).unwrap().cases(&Params::new()).unwrap().len(), 31);
        let p = Params::new().with("host", "C7").with("sizes", "1,2,3,1,2,3,1");
        let cases = theorem(ids::RAD3_QUOTIENT).unwrap().cases(&p).unwrap();
        assert_eq!(cases.len(), 1);
        let inst = theorem(ids::RAD3_QUOTIENT)
            .unwrap()
            .instantiate(&cases[0], &mut ChaCha8Rng::seed_from_u64(0))
            .unwrap();
        assert_eq!(inst.graph.order(), 13);
    }
}
