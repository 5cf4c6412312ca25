//! Structural checks over the seeded battery that the acceptance run does not
//! already print.

mod common;

use affsph::adapted::{enumerate_n_adapted_subsets, is_n_adapted_subset, tangent_space, DEFAULT_SUBSET_CAP};
use affsph::linalg::rank_of;
use affsph::oracle::{
    invariant_quotient_weights, oracle_tangent, oracle_tangent_weights, AmbientModel, ChevalleyAlgebra,
};
use affsph::{RootSystem, RootVector, Weight, WeightMonoidContext};
use common::{battery, BATTERY_DIM_CAP};
use std::collections::{BTreeSet, HashMap};

#[test]
fn battery_is_large_enough() {
    let cases = battery();
    assert!(cases.len() >= 30);
    let groups: BTreeSet<&str> = cases.iter().map(|c| c.group).collect();
    assert_eq!(groups.len(), common::GROUPS.len());
}

#[test]
fn oracle_spaces() {
    let mut algebras: HashMap<&str, ChevalleyAlgebra> = HashMap::new();
    for case in battery() {
        let alg = algebras.entry(case.group).or_insert_with(|| ChevalleyAlgebra::new(&case.rs).unwrap());
        let model = AmbientModel::new(alg, &case.ctx, BATTERY_DIM_CAP).unwrap();

        let gx0 = model.gx0_basis();
        let by_weight: BTreeSet<&RootVector> = gx0.iter().map(|(t, _)| t).collect();
        for tau in by_weight {
            let vs: Vec<_> = gx0.iter().filter(|(t, _)| t == tau).map(|(_, v)| v.clone()).collect();
            assert_eq!(rank_of(&vs), vs.len(), "{}: g.x0 at {}", case.label(), tau.tag());
        }

        let quotients = invariant_quotient_weights(&model);
        let tangent = oracle_tangent_weights(&model, &quotients);
        for (gamma, &d) in &tangent.dimensions {
            assert!(d <= 1, "{}: {} has dimension {d}", case.label(), gamma.tag());
            // necessary conditions on a simple-root tangent weight
            if let Some(i) = gamma.as_simple() {
                let moved = case.ctx.basis().iter().filter(|w| w.0[i] != 0).count();
                assert!(moved >= 2, "{}: {}", case.label(), gamma.tag());
                let c = case.ctx.root_in_lattice(gamma).unwrap();
                assert!(c.iter().all(|&x| x <= 1), "{}: {}", case.label(), gamma.tag());
            }
        }
    }
}

#[test]
fn tangent_weights_are_compatible() {
    for case in battery() {
        let t = tangent_space(&case.ctx);
        for sigma in &t.weights {
            assert!(sigma.compatible_with_sp(&case.rs, case.ctx.sp_gamma()), "{}", case.label());
        }
    }
}

#[test]
fn components_live_in_the_tangent_space() {
    for case in battery() {
        let tangent = tangent_space(&case.ctx).weight_vectors();
        let found = enumerate_n_adapted_subsets(&case.ctx, case.ctx.rank(), DEFAULT_SUBSET_CAP).unwrap();
        assert!(found.subsets.iter().any(|s| s.roots.is_empty()), "{}", case.label());
        assert!(is_n_adapted_subset(&case.ctx, &[]).is_some());
        for s in &found.subsets {
            assert!(s.roots.iter().all(|r| tangent.contains(&r.vector)), "{}", case.label());
        }
        if tangent.is_empty() {
            assert_eq!(found.subsets.len(), 1);
            assert!(found.subsets[0].maximal);
        }
    }
}

/// Reordering the factors of `A2xA1` reorders the simple roots; the oracle and
/// the combinatorial side must follow.
#[test]
fn factor_order_does_not_matter() {
    let ab = RootSystem::parse("A2xA1").unwrap();
    let ba = RootSystem::parse("A1xA2").unwrap();
    let to_ba = |v: &[i64]| vec![v[2], v[0], v[1]];
    let bases: [&[&[i64]]; 4] =
        [&[&[1, 0, 1], &[0, 1, 1]], &[&[1, 1, 0]], &[&[0, 0, 2], &[1, 1, 0]], &[&[2, 0, 2], &[0, 2, 0]]];
    let alg_ab = ChevalleyAlgebra::new(&ab).unwrap();
    let alg_ba = ChevalleyAlgebra::new(&ba).unwrap();
    for basis in bases {
        let c1 = WeightMonoidContext::new(&ab, basis.iter().map(|w| Weight(w.to_vec())).collect()).unwrap();
        let c2 = WeightMonoidContext::new(&ba, basis.iter().map(|w| Weight(to_ba(w))).collect()).unwrap();
        let t1: BTreeSet<Vec<i64>> = tangent_space(&c1).weight_vectors().iter().map(|v| to_ba(&v.0)).collect();
        let t2: BTreeSet<Vec<i64>> = tangent_space(&c2).weight_vectors().iter().map(|v| v.0.clone()).collect();
        assert_eq!(t1, t2, "{basis:?}");
        let o1: BTreeSet<Vec<i64>> =
            oracle_tangent(&alg_ab, &c1, BATTERY_DIM_CAP).unwrap().weights().iter().map(|v| to_ba(&v.0)).collect();
        let o2: BTreeSet<Vec<i64>> =
            oracle_tangent(&alg_ba, &c2, BATTERY_DIM_CAP).unwrap().weights().iter().map(|v| v.0.clone()).collect();
        assert_eq!(o1, o2, "{basis:?}");
        assert_eq!(o1, t1, "{basis:?}");
    }
}
