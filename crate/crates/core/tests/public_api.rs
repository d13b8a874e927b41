use bitrans_core::reduce::{random_bi_instance, RandomParams};
use bitrans_core::{
    bi_transversals, bidual_check, brute_force_btr, dual_check, formula_to_instance, instance_to_formula,
    minimal_bsets, minimal_models, reduce_dim2, BiInstance, BitSet, Completeness, Formula3, Hypergraph, Literal,
    SatInstance,
};

fn example() -> BiInstance {
    BiInstance::from_lists(4, &[&[0, 3], &[0, 1], &[1, 2, 3]], &[&[0, 1, 2], &[1, 3], &[3]])
}

#[test]
fn example_end_to_end() {
    let inst = example();
    let sols = bi_transversals(&inst).unwrap();
    assert_eq!(sols.len(), 1);
    assert_eq!(sols[0].s, BitSet::from([0, 2]));
    assert_eq!(sols[0].b, BitSet::from([0]));
    assert_eq!(
        bidual_check(&inst, &[BitSet::from([0, 2])]).unwrap(),
        Completeness::Complete
    );
    assert_eq!(bidual_check(&inst, &[]).unwrap().witness(), Some(sols[0].clone()));
}

#[test]
fn formula_view_agrees_with_bsets() {
    let inst = example();
    let phi = instance_to_formula(&inst);
    let reparsed: Formula3 = phi.to_string().parse().unwrap();
    assert_eq!(minimal_models(&reparsed).unwrap(), minimal_bsets(&inst).unwrap());
    let leaves = formula_to_instance(&reparsed);
    assert_eq!(minimal_bsets(&leaves).unwrap(), minimal_bsets(&inst).unwrap());
}

#[test]
fn dual_check_on_red_edges() {
    let red: Hypergraph = example().red().clone();
    let known = [BitSet::from([0, 1]), BitSet::from([0, 2]), BitSet::from([0, 3])];
    assert_eq!(dual_check(&red, &known).unwrap().witness(), Some(BitSet::from([1, 3])));
}

#[test]
fn gadget_of_satisfiable_cnf_has_a_witness() {
    let sat = SatInstance::new(
        2,
        vec![
            vec![Literal::pos(0), Literal::pos(1)],
            vec![Literal::neg(0)],
            vec![Literal::pos(1)],
        ],
    )
    .unwrap();
    let gadget = reduce_dim2(&sat).unwrap();
    assert!(!bidual_check(&gadget.instance, gadget.known.sets())
        .unwrap()
        .is_complete());
}

#[test]
fn random_instances_match_brute_force() {
    let params = RandomParams {
        vertices: 9,
        red_edges: 4,
        blue_edges: 5,
        density: 0.35,
    };
    for seed in 0..50 {
        let inst = random_bi_instance(&params, seed).unwrap();
        assert_eq!(
            bi_transversals(&inst).unwrap(),
            brute_force_btr(&inst).unwrap(),
            "seed {seed}"
        );
    }
}
