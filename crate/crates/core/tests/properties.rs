use ecc_spectra::closed::{spec_double_star, spec_hjoin_rad3};
use ecc_spectra::spectral::{char_poly, exact_determinant, sym_eigenvalues, sym_eigenvalues_int, QuotientSpec};
use ecc_spectra::verify::random::{random_connected_graph, random_factor, random_join_scheme};
use ecc_spectra::{ecc_matrix, ecc_matrix_hjoin, h_join, Graph, IntMatrix, JoinScheme};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Floyd-Warshall distances.
fn distances(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Eccentricity matrix straight from the all-pairs distance table.
fn ecc_reference(g: &Graph) -> Vec<Vec<i64>> {
    let d = distances(g);
    let e: Vec<u64> = d.iter().map(|r| *r.iter().max().unwrap()).collect();
    (0..d.len())
        .map(|u| {
            (0..d.len())
                .map(|v| if d[u][v] == e[u].min(e[v]) && u != v { d[u][v] as i64 } else { 0 })
                .collect()
        })
        .collect()
}

fn connected() -> impl Strategy<Value = Graph> {
    (1usize..=10, any::<u64>(), 0.0f64..0.7).prop_map(|(n, seed, p)| random_connected_graph(n, p, &mut rng(seed)))
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ecc_matches_distance_table(g in connected()) {
        prop_assert_eq!(ecc_matrix(&g).unwrap().rows(), ecc_reference(&g));
    }

    #[test]
    fn block_construction_matches_definition(k in 2usize..=6, seed in any::<u64>()) {
        let scheme = random_join_scheme(k, 5, &mut rng(seed));
        let block = ecc_matrix_hjoin(&scheme).unwrap();
        let direct = ecc_matrix(&h_join(&scheme)).unwrap();
        prop_assert_eq!(block.to_natural_order().rows(), direct.rows());
        prop_assert_eq!(block.matrix.rows(), direct.permuted(&block.permutation).rows());
    }

    #[test]
    fn distances_satisfy_triangle_inequality(g in connected()) {
        let prof = g.metric_profile().unwrap();
        let n = g.order();
        for u in 0..n {
            prop_assert_eq!(prof.dist(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(prof.dist(u, v), prof.dist(v, u));
                for w in 0..n {
                    prop_assert!(prof.dist(u, w) <= prof.dist(u, v) + prof.dist(v, w));
                }
            }
        }
        prop_assert!(prof.radius <= prof.diameter && prof.diameter <= 2 * prof.radius);
    }

    #[test]
    fn complement_is_an_involution(g in connected()) {
        let c = g.complement();
        prop_assert_eq!(&c.complement(), &g);
        let n = g.order();
        for u in 0..n {
            prop_assert_eq!(g.degree(u) + c.degree(u), n - 1);
        }
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn ecc_spectrum_has_zero_trace(g in connected()) {
        let eps = ecc_matrix(&g).unwrap();
        let eigs = sym_eigenvalues_int(eps.as_int_matrix()).unwrap();
        let scale = eigs.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        prop_assert!(eigs.iter().sum::<f64>().abs() <= 1e-9 * scale * eigs.len() as f64);
        let moment: f64 = eigs.iter().map(|v| v * v).sum();
        prop_assert!((moment - eps.as_int_matrix().frobenius_sq()).abs() <= 1e-8 * moment.max(1.0));
    }

    #[test]
    fn charpoly_roots_are_the_eigenvalues(g in connected()) {
        let m = ecc_matrix(&g).unwrap();
        let roots = sorted_desc(char_poly(m.as_int_matrix()).real_roots().unwrap());
        let eigs = sym_eigenvalues_int(m.as_int_matrix()).unwrap();
        prop_assert_eq!(roots.len(), eigs.len());
        for (r, e) in roots.iter().zip(&eigs) {
            prop_assert!((r - e).abs() <= 1e-7 * e.abs().max(1.0), "{} vs {}", r, e);
        }
    }

    #[test]
    fn charpoly_constant_is_signed_determinant(n in 1usize..=8, seed in any::<u64>()) {
        let mut r = rng(seed);
        let rows: Vec<Vec<i64>> = {
            use rand::Rng;
            let mut a = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in i..n {
                    let v = r.random_range(-5..=5);
                    a[i][j] = v;
                    a[j][i] = v;
                }
            }
            a
        };
        let m = IntMatrix::from_rows(&rows).unwrap();
        let p = char_poly(&m);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(p.poly().coeff(0), exact_determinant(&m) * BigInt::from(sign));
        prop_assert_eq!(p.poly().coeff(n - 1), BigInt::from(-m.trace()));
        prop_assert_eq!(p.poly().leading(), BigInt::from(1));
    }

    #[test]
    fn quotient_spectrum_matches_expanded_matrix(
        sizes in prop::collection::vec(1usize..=4, 1..=4),
        entries in prop::collection::vec(-4i32..=4, 16),
        shifts in prop::collection::vec(-3i32..=3, 4),
    ) {
        let k = sizes.len();
        let s: Vec<Vec<f64>> = (0..k)
            .map(|i| (0..k).map(|j| f64::from(entries[4 * i.min(j) + i.max(j)])).collect())
            .collect();
        let p: Vec<f64> = shifts[..k].iter().map(|&x| f64::from(x)).collect();
        let q = QuotientSpec::new(sizes.clone(), s.clone(), p.clone()).unwrap();
        let n: usize = sizes.iter().sum();
        let block: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i, m)).collect();
        let full = DMatrix::from_fn(n, n, |a, b| s[block[a]][block[b]] + if a == b { p[block[a]] } else { 0.0 });
        let want = sym_eigenvalues(&full).unwrap();
        let got = q.spectrum().values();
        prop_assert_eq!(got.len(), want.len());
        for (a, b) in got.iter().zip(&want) {
            prop_assert!((a - b).abs() <= 1e-8 * b.abs().max(1.0), "{:?} vs {:?}", got, want);
        }
    }

    #[test]
    fn rad3_inertia_is_inherited(host in 0usize..3, sizes in prop::collection::vec(1usize..=4, 7), seed in any::<u64>()) {
        let h = [Graph::cycle(6).unwrap(), Graph::cycle(7).unwrap(), Graph::path(7).unwrap()][host].clone();
        let sizes = &sizes[..h.order()];
        let mut r = rng(seed);
        let factors: Vec<Graph> = sizes.iter().map(|&m| random_factor(m, &mut r)).collect();
        let g = h_join(&JoinScheme::new(h.clone(), factors).unwrap());
        let eigs = sym_eigenvalues_int(ecc_matrix(&g).unwrap().as_int_matrix()).unwrap();
        let zero = 1e-8 * eigs.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        let got = [
            eigs.iter().filter(|&&v| v > zero).count(),
            eigs.iter().filter(|&&v| v.abs() <= zero).count(),
            eigs.iter().filter(|&&v| v < -zero).count(),
        ];
        let predicted = spec_hjoin_rad3(&h, sizes).unwrap().predicted.inertia.unwrap();
        prop_assert_eq!(predicted.as_array(), got);
    }

    #[test]
    fn double_star_shape(a in 1usize..=8, b in 1usize..=8) {
        let g = Graph::double_star(a, b).unwrap();
        prop_assert_eq!(g.order(), a + b + 2);
        prop_assert_eq!(g.edge_count(), a + b + 1);
        let r = spec_double_star(a, b).unwrap();
        prop_assert_eq!(r.spectrum().unwrap().order(), a + b + 2);
        prop_assert_eq!(r.predicted.inertia.unwrap().as_array(), [2, a + b - 2, 2]);
    }
}
