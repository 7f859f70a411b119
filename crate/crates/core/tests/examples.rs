use vnum_core::classify::{full_report, ReportOptions};
use vnum_core::formats::catalog::{EXAMPLE_11, EXAMPLE_9};
use vnum_core::FieldTag::{Gf2, Rationals};

#[test]
fn eleven_vertex_example_depends_on_characteristic() {
    let g = EXAMPLE_11.graph().unwrap();
    let r = full_report(&g, &ReportOptions::default()).unwrap();
    assert_eq!((r.v, r.dim, r.beta0), (3, 3, 3));
    assert_eq!(r.reg[&Rationals], 2);
    assert_eq!(r.reg[&Gf2], 3);
    assert_eq!(r.w2, Some(true));
    assert_eq!(r.edge_critical, Some(true));
    assert!(r.cm[&Rationals]);
    assert!(!r.cm[&Gf2]);
    let sq = r.symbolic_square_cm.unwrap();
    assert!(!sq[&Rationals].cohen_macaulay);
    assert_eq!(sq[&Rationals].oracle, None);
}

#[test]
fn nine_vertex_example_has_cm_symbolic_square() {
    let g = EXAMPLE_9.graph().unwrap();
    let r = full_report(&g, &ReportOptions::with_fields(&[Rationals])).unwrap();
    assert_eq!((r.v, r.reg[&Rationals], r.beta0), (3, 3, 3));
    assert_eq!(r.w2, Some(true));
    assert_eq!(r.edge_critical, Some(true));
    assert!(r.symbolic_square_cm.unwrap()[&Rationals].cohen_macaulay);
}
