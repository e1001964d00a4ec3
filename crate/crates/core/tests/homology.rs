mod common;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{bareiss_det, naive_mul, rows};
use rsets::algebra::{complex_chains, homology_all, smith_normal_form, SparseMatrix};
use rsets::complex::{clique_complex, order_complex};
use rsets::corpus::random_complex;
use rsets::{Guards, Homology, IntMatrix, SimplicialComplex};

fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_simplices((0..n).map(|i| i.to_string()).collect(), facets.iter().map(|f| f.to_vec()).collect())
        .unwrap()
}

fn groups(h: &Homology) -> Vec<String> {
    h.groups.iter().map(|g| g.to_string()).collect()
}

#[test]
fn torus() {
    let mut facets = Vec::new();
    for i in 0..7 {
        facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    let facets: Vec<&[usize]> = facets.iter().map(Vec::as_slice).collect();
    let h = homology_all(&complex_chains(&complex(7, &facets)));
    assert_eq!(groups(&h), ["H_0 = Z", "H_1 = Z^2", "H_2 = Z"]);
}

#[test]
fn projective_plane_has_two_torsion() {
    let facets: [&[usize]; 10] = [
        &[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 5], &[0, 5, 1],
        &[1, 2, 4], &[2, 3, 5], &[3, 4, 1], &[4, 5, 2], &[5, 1, 3],
    ];
    let h = homology_all(&complex_chains(&complex(6, &facets)));
    assert_eq!(groups(&h), ["H_0 = Z", "H_1 = Z/2", "H_2 = 0"]);
}

#[test]
fn sphere_and_disjoint_union() {
    let sphere = complex(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
    assert_eq!(groups(&homology_all(&complex_chains(&sphere))), ["H_0 = Z", "H_1 = 0", "H_2 = Z"]);
    let two_circles = complex(6, &[&[0, 1], &[1, 2], &[0, 2], &[3, 4], &[4, 5], &[3, 5]]);
    assert_eq!(groups(&homology_all(&complex_chains(&two_circles))), ["H_0 = Z^2", "H_1 = Z^2"]);
}

#[test]
fn clique_complex_of_octahedron_graph_is_a_sphere() {
    // K_{2,2,2} with loops: its clique complex is the octahedron.
    let n = 6;
    let tuples: Vec<Vec<usize>> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a / 2 != b / 2 || a == b)
        .map(|(a, b)| vec![a, b])
        .collect();
    let x = rsets::RSet::from_indices(2, (0..n).map(|i| i.to_string()).collect(), tuples).unwrap();
    let h = homology_all(&complex_chains(&clique_complex(&x, &Guards::default()).unwrap()));
    assert_eq!(groups(&h), ["H_0 = Z", "H_1 = 0", "H_2 = Z"]);
}

fn matrix(entries: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(entries.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()).unwrap()
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_postconditions(entries in small_matrix()) {
        let m = matrix(&entries);
        let s = smith_normal_form(&m);
        let um = IntMatrix::from_rows(naive_mul(&s.u, &m)).unwrap();
        prop_assert_eq!(naive_mul(&um, &s.v), rows(&s.d));
        prop_assert_eq!(bareiss_det(&s.u).abs(), BigInt::from(1));
        prop_assert_eq!(bareiss_det(&s.v).abs(), BigInt::from(1));
        let f = s.invariant_factors();
        prop_assert!(f.iter().all(|x| x.is_positive()));
        prop_assert!(f.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        // For square matrices the factors multiply to |det|.
        if m.rows() == m.cols() {
            let det = bareiss_det(&m).abs();
            let prod: BigInt = if f.len() == m.rows() { f.iter().product() } else { BigInt::zero() };
            prop_assert_eq!(prod, det);
        }
    }

    #[test]
    fn sparse_elimination_matches_dense(entries in small_matrix()) {
        let (r, c) = (entries.len(), entries[0].len());
        let columns: Vec<Vec<(u32, i64)>> = (0..c)
            .map(|j| (0..r).map(|i| (i as u32, entries[i][j])).collect())
            .collect();
        let sparse = SparseMatrix::from_columns(r, columns);
        let dense = smith_normal_form(&matrix(&entries)).invariant_factors();
        prop_assert_eq!(sparse.invariant_factors::<BigInt>(), dense.clone());
        prop_assert_eq!(sparse.rank(), dense.len());
    }

    #[test]
    fn subdivision_preserves_homology(seed in any::<u64>()) {
        let k = random_complex(&mut ChaCha8Rng::seed_from_u64(seed), 6);
        let guards = Guards::default();
        let chains = complex_chains(&k);
        prop_assert!(chains.is_complex());
        let h: Homology = homology_all(&chains);
        let sd = order_complex(&k.face_poset(), &guards).unwrap();
        let h_sd: Homology = homology_all(&complex_chains(&sd));
        prop_assert!(h.same_groups(&h_sd), "{} vs {}", h, h_sd);
        let euler: i64 = chains.ranks().iter().enumerate().map(|(i, &r)| if i % 2 == 0 { r as i64 } else { -(r as i64) }).sum();
        let from_betti: i64 = h.betti_numbers().iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(euler, from_betti);
    }
}
