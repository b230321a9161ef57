//! The dart generator against the slow adjacency-matrix oracle.

use hypercell::generator::{canonical_codes, graphs_from_codes, SearchParams};
use hypercell::octahedrites::{enumerate_octahedrites, is_antiprism, is_octahedrite};
use hypercell::oracle::{self, isomorphic, MaskGraph};
use hypercell::planar::antiprism_graph;
use hypercell::PlanarGraph;
use proptest::prelude::*;

fn mask(g: &PlanarGraph) -> MaskGraph {
    let edges: Vec<(u32, u32)> = g.edges();
    MaskGraph::from_edges(g.num_vertices(), &edges)
}

#[test]
fn octahedrite_counts_match_oracle_up_to_ten() {
    let cat = enumerate_octahedrites(10).unwrap();
    for n in 6..=10 {
        let ours = cat.graphs(n);
        let theirs = oracle::octahedrites(n);
        assert_eq!(ours.len(), theirs.len(), "n = {n}");
        // Each generated graph matches exactly one oracle class.
        for g in ours {
            assert!(is_octahedrite(g));
            let m = mask(g);
            assert_eq!(theirs.iter().filter(|o| isomorphic(&o.graph, &m)).count(), 1, "n = {n}");
        }
    }
}

#[test]
fn quartic_polyhedra_counts_match_oracle_up_to_ten() {
    for n in 6..=10 {
        let ours = canonical_codes(SearchParams::all_quartic(n)).len();
        let theirs = oracle::quartic_polyhedra(n, &|_| true).len();
        assert_eq!(ours, theirs, "n = {n}");
    }
}

#[test]
fn small_octahedrites_are_the_known_ones() {
    let cat = enumerate_octahedrites(9).unwrap();
    assert_eq!(cat.counts_by_n().values().copied().collect::<Vec<_>>(), vec![1, 0, 1, 1]);
    assert_eq!(is_antiprism(&cat.graphs(6)[0]), Some(3));
    assert_eq!(is_antiprism(&cat.graphs(8)[0]), Some(4));
}

#[test]
fn generator_output_is_canonical_and_sorted() {
    let codes = canonical_codes(SearchParams::octahedrites(12));
    for (code, g) in codes.iter().zip(graphs_from_codes(&codes)) {
        assert_eq!(&g.canonical_code(), code);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn canonical_code_ignores_labels_and_orientation(k in 3usize..10, seed in any::<u64>(), mirror in any::<bool>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let g = antiprism_graph(k).unwrap();
        let mut p: Vec<u32> = (0..2 * k as u32).collect();
        p.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let mut h = g.relabeled(&p);
        if mirror {
            h = h.mirrored();
        }
        prop_assert_eq!(h.canonical_code(), g.canonical_code());
        prop_assert_eq!(h.automorphisms().len(), g.automorphisms().len());
        prop_assert_eq!(is_antiprism(&h), Some(k));
    }

    #[test]
    fn catalog_members_relabel_to_themselves(idx in 0usize..5, seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let cat = enumerate_octahedrites(12).unwrap();
        let g = &cat.graphs(12)[idx];
        let mut p: Vec<u32> = (0..12).collect();
        p.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = g.relabeled(&p);
        prop_assert_eq!(&h.canonical_form(), g);
    }
}
