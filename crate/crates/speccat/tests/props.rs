//! Property tests: round trips, relabeling invariance, and the random-point
//! determinant cross-check of the characteristic polynomial.

use num_bigint::BigInt;
use proptest::prelude::*;
use speccat::canon::canonical_form;
use speccat::graph::Graph;
use speccat::graph6::{from_graph6, to_graph6};
use speccat::poly::{factor_spectrum, IntPolynomial};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut g = Graph::empty(n);
            let mut idx = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if bits[idx] {
                        g.add_edge(i, j);
                    }
                    idx += 1;
                }
            }
            g
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let text = to_graph6(&g);
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(g in arb_graph(10), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let j = (state % (i as u64 + 1)) as usize;
            perm.swap(i, j);
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn components_partition_vertices(g in arb_graph(12)) {
        let comps = g.components();
        let mut seen = vec![false; g.n()];
        for c in &comps {
            for &v in c {
                prop_assert!(!seen[v]);
                seen[v] = true;
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
        prop_assert_eq!(g.is_connected(), comps.len() == 1);
    }

    #[test]
    fn char_poly_matches_dets_at_random_points(g in arb_graph(8), points in proptest::collection::vec(-6i64..=6, 10)) {
        let a = g.adjacency_matrix();
        let p = a.char_poly();
        for x in points {
            let xb = BigInt::from(x);
            prop_assert_eq!(p.eval(&xb), a.det_shifted(&xb));
        }
    }

    #[test]
    fn char_poly_trace_identity(g in arb_graph(9)) {
        let a = g.adjacency_matrix();
        let p = a.char_poly();
        let n = g.n();
        // -coeff[n-1] equals the trace (zero for adjacency matrices)
        prop_assert_eq!(-p.coeff(n - 1), a.trace());
        // and the numeric eigenvalues sum to it as well
        let eigs = speccat::eigenvalues_symmetric(&a, 1e-12).unwrap();
        prop_assert!(eigs.iter().sum::<f64>().abs() < 1e-6);
    }

    #[test]
    fn disjoint_union_multiplies_char_polys(g in arb_graph(6), h in arb_graph(6)) {
        let u = g.disjoint_union(&h);
        let pu = u.adjacency_matrix().char_poly();
        let pg = g.adjacency_matrix().char_poly();
        let ph = h.adjacency_matrix().char_poly();
        prop_assert_eq!(pu, pg.mul(&ph));
    }

    #[test]
    fn factor_spectrum_round_trip(p in 0usize..4, q in 0usize..4, t in -4i64..=4, d in -6i64..=6) {
        // assemble (x-2)^p (x+1)^q g with g avoiding both roots
        let g = IntPolynomial::quadratic(t, d);
        prop_assume!(g.eval_i64(2) != BigInt::from(0));
        prop_assume!(g.eval_i64(-1) != BigInt::from(0));
        let mut poly = g.clone();
        for _ in 0..p {
            poly = poly.mul(&IntPolynomial::linear(2));
        }
        for _ in 0..q {
            poly = poly.mul(&IntPolynomial::linear(-1));
        }
        let s = factor_spectrum(&poly);
        prop_assert_eq!(s.mult_two, p);
        prop_assert_eq!(s.mult_minus_one, q);
        prop_assert_eq!(s.reconstruct(), poly);
        prop_assert_eq!(s.residual, g);
    }

    #[test]
    fn symmetric_and_division_free_routes_agree(g in arb_graph(7)) {
        let a = g.adjacency_matrix();
        prop_assert_eq!(a.char_poly(), a.char_poly_faddeev_leverrier());
    }

    #[test]
    fn psd_certificate_matches_eigenvalues(g in arb_graph(7)) {
        // A^2 - A - 2I has eigenvalues (x+1)(x-2) for adjacency eigenvalues x,
        // so PSD holds iff no eigenvalue lies strictly inside (-1, 2)
        let m = g.band_certificate_matrix();
        let (is_psd, rank) = m.psd_rank_certificate().unwrap();
        let eigs = speccat::eigenvalues_symmetric(&m, 1e-12).unwrap();
        let numeric_psd = eigs.iter().all(|&e| e > -1e-7);
        prop_assert_eq!(is_psd, numeric_psd);
        let numeric_rank = eigs.iter().filter(|&&e| e.abs() > 1e-6).count();
        prop_assert_eq!(rank, numeric_rank);
    }
}

#[test]
fn deterministic_relabeling_invariance_sample() {
    // the 1000-trial spot check at n <= 10
    let base = Graph::with_edges(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 6), (6, 7), (7, 8), (8, 9), (9, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ],
    );
    let reference = canonical_form(&base).unwrap();
    let mut perm: Vec<usize> = (0..10).collect();
    let mut state = 0x9e3779b97f4a7c15u64;
    for _ in 0..1000 {
        // Fisher-Yates with a little xorshift
        for i in (1..10).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let j = (state % (i as u64 + 1)) as usize;
            perm.swap(i, j);
        }
        let h = base.relabel(&perm);
        assert_eq!(canonical_form(&h).unwrap(), reference);
    }
}
