mod common;

#[test]
fn irrep_homomorphism_200_pairs() {
    common::irrep_homomorphism(200).unwrap();
}

#[test]
fn rcf_idempotent_and_row_space_preserving() {
    common::rcf_properties(100).unwrap();
}

#[test]
fn lll_preserves_lattice() {
    common::lll_properties(50).unwrap();
}

#[test]
fn rewrite_strategies_confluent() {
    assert!(common::rewrite_confluence().unwrap() > 0);
}

#[test]
fn envelope_diamond_property() {
    assert!(common::diamond_property().unwrap() > 0);
}

#[test]
fn envelope_normal_form_is_projection() {
    common::normal_form_projection(200).unwrap();
}
