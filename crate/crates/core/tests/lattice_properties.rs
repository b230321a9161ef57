use hypercell::lattice::{
    antiprism, canonical_24cell, combinatorially_isomorphic, hypercube, octahedron, simplex, FaceLattice,
};
use hypercell::VertexId;
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Vec<VertexId>> {
    Just((0..n as VertexId).collect::<Vec<_>>()).prop_shuffle()
}

#[test]
fn euler_relation_on_4d_lattices() {
    for l in [canonical_24cell(), hypercube(4).unwrap(), simplex(4).unwrap()] {
        assert_eq!(l.f_vector().euler_sum(), 0);
    }
}

#[test]
fn every_24cell_vertex_figure_is_a_cube() {
    let c = canonical_24cell();
    let cube = hypercube(3).unwrap();
    for v in 0..24 {
        assert!(combinatorially_isomorphic(&c.vertex_figure(v).unwrap(), &cube).unwrap());
    }
}

#[test]
fn antiprisms_have_two_more_faces_than_vertices() {
    for k in 3..=32 {
        let f = antiprism(k).unwrap().f_vector();
        assert_eq!(f.0, vec![2 * k, 4 * k, 2 * k + 2]);
        assert_eq!(f.get(2), f.get(0) + 2);
    }
}

#[test]
fn antiprism3_is_the_octahedron_and_antiprism4_is_not_a_cube() {
    assert!(combinatorially_isomorphic(&antiprism(3).unwrap(), &octahedron()).unwrap());
    assert!(!combinatorially_isomorphic(&antiprism(4).unwrap(), &hypercube(3).unwrap()).unwrap());
}

#[test]
fn rebuilding_from_facets_is_identity() {
    for l in [canonical_24cell(), antiprism(7).unwrap(), hypercube(4).unwrap()] {
        let again = FaceLattice::from_facets(l.dim(), l.facets().to_vec()).unwrap();
        assert_eq!(again, l);
        assert_eq!(FaceLattice::from_text(&l.to_text()).unwrap(), l);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn isomorphism_survives_relabeling(p in perm(24)) {
        let c = canonical_24cell();
        let r = c.relabeled(&p).unwrap();
        prop_assert_eq!(r.f_vector(), c.f_vector());
        prop_assert!(combinatorially_isomorphic(&c, &r).unwrap());
        prop_assert!(combinatorially_isomorphic(&r, &c).unwrap());
        prop_assert!(r.is_simple_at_edges());
    }

    #[test]
    fn antiprism_relabelings_stay_isomorphic(k in 3usize..9, seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let a = antiprism(k).unwrap();
        let mut p: Vec<VertexId> = (0..2 * k as VertexId).collect();
        p.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let r = a.relabeled(&p).unwrap();
        prop_assert!(combinatorially_isomorphic(&a, &r).unwrap());
        if k > 3 {
            prop_assert!(!combinatorially_isomorphic(&antiprism(k - 1).unwrap(), &r).unwrap());
        }
    }
}
