mod common;

use proptest::prelude::*;

use common::*;
use vnum_core::classify::{regularity, v_number_algebraic, v_number_combinatorial};
use vnum_core::linalg::{rank_gf2, rank_gf2_dense, rank_rational, rank_rational_dense, SparseColumns};
use vnum_core::{Clutter, FieldTag, Graph, SimplicialComplex, VertexSet};

fn ok(r: Result<(), String>) {
    if let Err(e) = r {
        panic!("{e}");
    }
}

#[test]
fn corpus_matches_known_counts() {
    let mut per_n = [0usize; 8];
    for g in corpus() {
        assert!(g.is_connected());
        per_n[g.vertex_count()] += 1;
    }
    // connected graphs up to isomorphism on 2..=7 vertices
    assert_eq!(&per_n[2..], &[1, 2, 6, 21, 112, 853]);
}

#[test]
fn v_between_i_and_beta0() {
    ok(check_v_between_i_and_beta0(&all_graphs()));
}

#[test]
fn reg_at_most_dim() {
    ok(check_reg_at_most_dim(&all_graphs()));
}

#[test]
fn additive_under_disjoint_union() {
    ok(check_additivity(corpus()));
}

#[test]
fn complete_intersections() {
    ok(check_complete_intersections(16, 0x5eed));
}

#[test]
fn whisker_v_is_independent_domination() {
    ok(check_whisker(&all_graphs(), 5));
}

#[test]
fn w2_iff_v_equals_dim() {
    ok(check_w2_iff_v_equals_dim(&all_graphs()));
}

#[test]
fn chordal_complement_is_linear() {
    ok(check_chordal_complement(&all_graphs()));
}

#[test]
fn vertex_decomposable_bound() {
    ok(check_vertex_decomposable_bound(&all_graphs()));
}

#[test]
fn beta0_two() {
    ok(check_beta0_two(&all_graphs()));
}

#[test]
fn w2_heredity() {
    ok(check_w2_heredity(&all_graphs()));
}

#[test]
fn colon_comparisons() {
    ok(check_colon_comparisons(&all_graphs()));
}

#[test]
fn colon_dimension() {
    ok(check_colon_dimension(&all_graphs()));
}

#[test]
fn cover_ideal() {
    let small: Vec<_> = all_graphs().into_iter().filter(|(_, g)| g.vertex_count() <= 7).collect();
    ok(check_cover_ideal(&small, 7));
}

#[test]
fn square_containment() {
    ok(check_square_containment(&all_graphs()));
}

#[test]
fn symbolic_square_consequences() {
    ok(check_symbolic_square_consequences(&all_graphs()));
}

#[test]
fn unicyclic_five_vertex_count() {
    let canon = corpus().iter().filter(|g| g.vertex_count() == 5 && g.edge_count() == 5).count();
    // C5 plus the four unicyclic shapes with a shorter cycle
    assert_eq!(canon, 5);
}

fn clutter_strategy() -> impl Strategy<Value = Clutter> {
    (1usize..=8).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 1..6)
            .prop_map(move |masks| Clutter::minimal_sets(n, masks.into_iter().map(|m| VertexSet::from_bits(n, m))).unwrap())
    })
}

fn matrix_strategy() -> impl Strategy<Value = SparseColumns> {
    (1usize..9, 1usize..9).prop_flat_map(|(rows, cols)| {
        prop::collection::vec(prop::collection::vec(-2i8..=2, rows), cols).prop_map(move |dense| SparseColumns {
            rows,
            cols: dense
                .into_iter()
                .map(|col| col.into_iter().enumerate().filter(|&(_, x)| x != 0).collect())
                .collect(),
        })
    })
}

fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(0u64..(1 << n), 1..6).prop_map(move |masks| {
            SimplicialComplex::from_faces(n, masks.into_iter().map(|m| VertexSet::from_bits(n, m))).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sparse_rank_matches_dense(m in matrix_strategy()) {
        prop_assert_eq!(rank_rational(&m), rank_rational_dense(&m));
        prop_assert_eq!(rank_gf2(&m), rank_gf2_dense(&m));
        prop_assert!(rank_gf2(&m) <= rank_rational(&m));
    }

    #[test]
    fn blocker_is_an_involution(c in clutter_strategy()) {
        let b = c.blocker().unwrap();
        prop_assert_eq!(b.blocker().unwrap(), c);
    }

    #[test]
    fn clutter_routes_agree(c in clutter_strategy()) {
        prop_assert_eq!(v_number_combinatorial(&c).unwrap(), v_number_algebraic(&c).unwrap());
        prop_assert_eq!(c.independence_number() + c.cover_number(), c.vertex_count());
        let v = c.v_number().unwrap();
        prop_assert!(v <= c.independent_domination());
        for f in FieldTag::ALL {
            prop_assert!(regularity(&c, f) <= c.independence_number());
        }
    }

    #[test]
    fn homology_matches_euler_characteristic(k in complex_strategy()) {
        for f in FieldTag::ALL {
            let h = k.reduced_homology(f);
            prop_assert_eq!(h.euler_characteristic(), k.reduced_euler_characteristic());
            prop_assert_eq!(&h, &k.reduced_homology_direct(f));
        }
    }

    #[test]
    fn stanley_reisner_round_trip(k in complex_strategy()) {
        let i = k.stanley_reisner_ideal();
        prop_assert_eq!(SimplicialComplex::stanley_reisner_complex(&i).unwrap(), k);
    }

    #[test]
    fn domination_chain(g in (2usize..=8).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|j| (1..j).map(move |i| (i, j)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })) {
        let (gamma, i, beta0) = (g.domination_number(), g.independent_domination(), g.independence_number());
        prop_assert!(gamma <= i && i <= beta0);
        if g.is_claw_free() {
            prop_assert_eq!(gamma, i);
        }
    }
}
