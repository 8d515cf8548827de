use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use powerlap::closed_form::{spectrum_containment_zpmn, ZpmnParams};
use powerlap::oracle::{
    char_poly_faddeev_leverrier, char_poly_modular, graph_spectrum, integer_root_factor, laplacian_matrix,
};
use powerlap::verify::SpectrumRoute;
use powerlap::{build_power_graph, make_group, verify_group, Graph, GraphExpr, Spectrum, VerifyOptions};

fn spectrum_strategy() -> impl Strategy<Value = Spectrum> {
    prop::collection::btree_map(0u64..25, 1u64..5, 1..6).prop_map(Spectrum::from_pairs)
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..14).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..n * 2).prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
    })
}

fn expr_strategy() -> impl Strategy<Value = GraphExpr> {
    let leaf = (1u32..5).prop_map(|k| GraphExpr::Complete(BigUint::from(k)));
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec((1u32..3, inner.clone()), 1..3)
                .prop_map(|p| GraphExpr::Union(p.into_iter().map(|(c, e)| (BigUint::from(c), e)).collect())),
            (inner.clone(), inner).prop_map(|(l, r)| GraphExpr::join(l, r)),
        ]
    })
}

proptest! {
    #[test]
    fn expand_then_factor_round_trips(s in spectrum_strategy()) {
        prop_assert_eq!(integer_root_factor(&s.expand(), 25).unwrap(), s);
    }

    #[test]
    fn char_poly_routes_agree(g in graph_strategy()) {
        let m = laplacian_matrix(&g);
        let fl = char_poly_faddeev_leverrier(&m);
        let modular = char_poly_modular(&m);
        prop_assert_eq!(&fl, &modular);
        let d = g.vertex_count();
        prop_assert_eq!(fl.degree(), Some(d));
        prop_assert_eq!(fl.coeff(d - 1), -m.trace());
        prop_assert_eq!(fl.coeff(0), BigInt::from(0));
    }

    #[test]
    fn calculus_matches_oracle(e in expr_strategy()) {
        prop_assume!(e.vertex_count() <= BigUint::from(40u32));
        let graph = e.realize(40).unwrap();
        prop_assert_eq!(BigUint::from(graph.edge_count()), e.edge_count());
        prop_assert_eq!(graph_spectrum(&graph, 40).unwrap(), e.spectrum().unwrap());
    }

    #[test]
    fn spectrum_json_round_trips(s in spectrum_strategy()) {
        let text = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Spectrum>(&text).unwrap(), s.clone());
        prop_assert_eq!(s.to_compact().parse::<Spectrum>().unwrap(), s.clone());
        prop_assert_eq!(s.to_string().parse::<Spectrum>().unwrap(), s);
    }
}

#[test]
fn containment_depends_on_the_prime() {
    // Z_2^2 is a star: the eigenvalue 2 is absent.
    assert!(!spectrum_containment_zpmn(&ZpmnParams::new(2, 1, 2).unwrap()));
    assert!(spectrum_containment_zpmn(&ZpmnParams::new(3, 1, 2).unwrap()));
    assert!(spectrum_containment_zpmn(&ZpmnParams::new(2, 2, 2).unwrap()));
}

#[test]
fn reordered_factors_use_closed_forms() {
    let report = verify_group(&make_group(&[4, 2, 2]).unwrap(), &VerifyOptions::default());
    assert!(report.passed());
    assert!(report.spectrum(SpectrumRoute::ClosedFormRs).is_some());
    assert_eq!(
        report.spectrum(SpectrumRoute::ClosedFormRs),
        report.spectrum(SpectrumRoute::Oracle)
    );
}

#[test]
fn power_graph_of_non_family_groups() {
    // Z6 = Z2 x Z3: identity and the two generators are universal, the order-3
    // elements see each other, the involution sees only the universal vertices.
    let graph = build_power_graph(&make_group(&[2, 3]).unwrap(), 100).unwrap();
    assert_eq!(graph.degree_sequence(), vec![5, 5, 5, 4, 4, 3]);
    let report = verify_group(&make_group(&[2, 3]).unwrap(), &VerifyOptions::default());
    assert!(report.passed());
    assert_eq!(report.spectra.len(), 1);
}
