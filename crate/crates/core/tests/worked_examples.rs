//! The rank-two example with two lines through the base point, and SL2.

mod common;

use affsph::adapted::{
    check_prop_cut, enumerate_n_adapted_subsets, is_adapted_singleton, is_adapted_subset, is_n_adapted_singleton,
    is_n_adapted_subset, tangent_space, Condition, DEFAULT_SUBSET_CAP,
};
use affsph::linalg::q;
use affsph::oracle::{oracle_tangent, weyl_dimension, ChevalleyAlgebra, DEFAULT_DIM_CAP};
use affsph::sphroots::{enumerate_sc_roots, find_in_catalog, SphericalRoot};
use affsph::{Functional, RootSystem, RootVector, Weight, WeightMonoidContext};
use common::two_lines;
use num_bigint::BigInt;
use std::collections::BTreeSet;

fn f(v: &[i64]) -> Functional {
    Functional(v.iter().map(|&x| q(x)).collect())
}

fn root(ctx: &WeightMonoidContext, v: &[i64]) -> SphericalRoot {
    find_in_catalog(&enumerate_sc_roots(ctx.root_system()), &RootVector(v.to_vec())).expect("catalog root").clone()
}

fn sl2() -> WeightMonoidContext {
    WeightMonoidContext::new(&RootSystem::parse("A1").unwrap(), vec![Weight(vec![2])]).unwrap()
}

#[test]
fn lattice_coordinates() {
    let ctx = two_lines();
    assert!(ctx.sp_gamma().is_empty());
    assert_eq!(ctx.in_lattice(&Weight(vec![2, 0])), Some(vec![1, 0]));
    assert_eq!(ctx.in_lattice(&Weight(vec![0, 2])), Some(vec![-2, 1]));
    assert_eq!(ctx.in_lattice(&Weight(vec![1, 0])), None);
    assert_eq!(ctx.coroot_functional(0), f(&[2, 4]));
    assert_eq!(ctx.coroot_functional(1), f(&[0, 2]));
}

#[test]
fn a_sets() {
    let ctx = two_lines();
    assert_eq!(ctx.a_set(0).unwrap(), vec![f(&[1, 0]), f(&[1, 4])]);
    assert_eq!(ctx.a_set(1).unwrap(), vec![f(&[0, 1])]);
    assert_eq!(sl2().a_set(0).unwrap(), vec![f(&[1])]);
}

#[test]
fn singleton_verdicts() {
    let ctx = two_lines();
    assert_eq!(is_n_adapted_singleton(&ctx, &root(&ctx, &[1, 0])), Ok(()));
    assert_eq!(is_n_adapted_singleton(&ctx, &root(&ctx, &[0, 2])), Ok(()));
    assert_eq!(is_n_adapted_singleton(&ctx, &root(&ctx, &[0, 1])), Err(Condition::ASize));
    assert_eq!(is_adapted_singleton(&ctx, &root(&ctx, &[1, 1])), Err(Condition::Orthogonal));
    assert_eq!(is_n_adapted_singleton(&ctx, &root(&ctx, &[2, 0])), Err(Condition::ColorRays));

    let s = sl2();
    assert_eq!(is_adapted_singleton(&s, &root(&s, &[1])), Ok(()));
    assert_eq!(is_adapted_singleton(&s, &root(&s, &[2])), Err(Condition::Double));
    assert_eq!(is_n_adapted_singleton(&s, &root(&s, &[2])), Ok(()));
}

#[test]
fn tangent_spaces() {
    let t = tangent_space(&two_lines());
    assert_eq!(t.dimension, 2);
    assert_eq!(t.weight_vectors(), [RootVector(vec![1, 0]), RootVector(vec![0, 2])].into_iter().collect());
    let t = tangent_space(&sl2());
    assert_eq!(t.weight_vectors(), [RootVector(vec![2])].into_iter().collect());
}

#[test]
fn subsets() {
    let ctx = two_lines();
    let a1 = root(&ctx, &[1, 0]);
    let b2 = root(&ctx, &[0, 2]);
    assert!(is_adapted_subset(&ctx, &[]).is_spherical_system());
    assert!(is_adapted_subset(&ctx, std::slice::from_ref(&a1)).is_spherical_system());
    assert!(is_n_adapted_subset(&ctx, &[a1.clone(), b2.clone()]).is_none());
    assert!(is_n_adapted_subset(&ctx, &[root(&ctx, &[0, 1])]).is_none());

    let found = enumerate_n_adapted_subsets(&ctx, 2, DEFAULT_SUBSET_CAP).unwrap();
    let all: BTreeSet<Vec<RootVector>> =
        found.subsets.iter().map(|s| s.roots.iter().map(|r| r.vector.clone()).collect()).collect();
    let want: BTreeSet<Vec<RootVector>> =
        [vec![], vec![a1.vector.clone()], vec![b2.vector.clone()]].into_iter().collect();
    assert_eq!(all, want);
    assert_eq!(found.maximal().count(), 2);

    let s = sl2();
    let witness = is_n_adapted_subset(&s, &[root(&s, &[2])]).expect("doubling branch");
    assert_eq!(witness.tilde[0].vector, RootVector(vec![1]));
    let found = enumerate_n_adapted_subsets(&s, 1, DEFAULT_SUBSET_CAP).unwrap();
    let maximal: Vec<_> = found.maximal().map(|m| m.roots[0].vector.clone()).collect();
    assert_eq!(maximal, vec![RootVector(vec![2])]);
}

#[test]
fn prop_cut() {
    let ctx = two_lines();
    assert_eq!(check_prop_cut(&ctx, &[root(&ctx, &[1, 0])]), Ok(true));
    assert_eq!(check_prop_cut(&ctx, &[]), Ok(true));
    assert_eq!(check_prop_cut(&ctx, &[root(&ctx, &[1, 0]), root(&ctx, &[0, 2])]), Ok(true));
}

#[test]
fn module_dimensions() {
    let rs = RootSystem::parse("A1xA1").unwrap();
    assert_eq!(weyl_dimension(&rs, &Weight(vec![4, 2])), BigInt::from(15));
    let rs = RootSystem::parse("A2").unwrap();
    assert_eq!(weyl_dimension(&rs, &Weight(vec![1, 1])), BigInt::from(8));
}

#[test]
fn oracle_reproduces_both_examples() {
    for ctx in [two_lines(), sl2()] {
        let alg = ChevalleyAlgebra::new(ctx.root_system()).unwrap();
        let t = oracle_tangent(&alg, &ctx, DEFAULT_DIM_CAP).unwrap();
        assert!(t.dimensions.values().all(|&d| d == 1));
        assert_eq!(t.weights(), tangent_space(&ctx).weight_vectors());
    }
}
