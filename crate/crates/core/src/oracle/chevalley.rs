//! Chevalley basis and structure constants.
//!
//! Root vectors are generated from the simple ones along extraspecial pairs:
//! for a positive non-simple `beta`, take the smallest `i` with
//! `beta - alpha_i` a root `beta'`, and set
//! `X_beta = [e_i, X_beta'] / (p + 1)`, `X_-beta = -[f_i, X_-beta'] / (p + 1)`,
//! where `p` is the largest integer with `beta' - p alpha_i` a root. This
//! keeps `[X_beta, X_-beta] = h_beta`. The constants themselves are read off
//! from commutators in a faithful module of each simple factor.

use super::irrep::{IrrepModule, Op};
use super::weyl::weyl_dimension;
use super::OracleError;
use crate::linalg::Q;
use crate::rootsys::{RootSystem, RootVector, Weight};
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;

/// How a positive non-simple root is obtained from a shorter one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootRecipe {
    pub root: RootVector,
    pub simple: usize,
    pub rest: RootVector,
    pub p: i64,
}

/// Largest `p >= 0` with `beta - p alpha` a root (`beta` itself a root).
pub fn string_below(rs: &RootSystem, alpha: &RootVector, beta: &RootVector) -> i64 {
    let mut p = 0;
    while rs.is_root(&beta.sub(&alpha.scale(p + 1))) {
        p += 1;
    }
    p
}

pub fn extraspecial_recipes(rs: &RootSystem) -> Vec<RootRecipe> {
    let n = rs.rank();
    rs.positive_roots()
        .iter()
        .filter(|b| b.height() > 1)
        .map(|beta| {
            let i = (0..n)
                .find(|&i| rs.is_positive_root(&beta.sub(&RootVector::simple(n, i))))
                .expect("non-simple positive roots have a simple predecessor");
            let alpha = RootVector::simple(n, i);
            let rest = beta.sub(&alpha);
            let p = string_below(rs, &alpha, &rest);
            RootRecipe { root: beta.clone(), simple: i, rest, p }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    recipes: Vec<RootRecipe>,
    /// `c[(b1, b2)]` with `[X_b1, X_b2] = c X_{b1+b2}` whenever `b1 + b2` is a root.
    constants: BTreeMap<(RootVector, RootVector), i64>,
}

impl ChevalleyAlgebra {
    pub fn new(rs: &RootSystem) -> Result<Self, OracleError> {
        let recipes = extraspecial_recipes(rs);
        let n = rs.rank();
        let mut constants = BTreeMap::new();
        for comp in rs.components() {
            let range = comp.indices();
            // smallest fundamental module of the factor
            let k = range
                .clone()
                .min_by_key(|&k| {
                    let mut w = vec![0; n];
                    w[k] = 1;
                    weyl_dimension(rs, &Weight(w)).to_u64().unwrap_or(u64::MAX)
                })
                .expect("components are nonempty");
            let mut w = vec![0; n];
            w[k] = 1;
            let module = IrrepModule::build(rs, &recipes, &Weight(w), usize::MAX)?;
            let roots: Vec<RootVector> = rs
                .positive_roots()
                .iter()
                .filter(|b| b.support().iter().all(|i| range.contains(i)))
                .flat_map(|b| [b.clone(), b.scale(-1)])
                .collect();
            for b1 in &roots {
                for b2 in &roots {
                    let sum = b1.add(b2);
                    if !rs.is_root(&sum) {
                        continue;
                    }
                    let c = module.commutator(module.root_op(b1).unwrap(), module.root_op(b2).unwrap());
                    let target = module.root_op(&sum).unwrap();
                    let ratio = proportionality(&c, target).expect("bracket of root vectors is a root vector");
                    assert!(ratio.is_integer(), "non-integral structure constant");
                    constants.insert((b1.clone(), b2.clone()), ratio.to_integer().to_i64().unwrap());
                }
            }
        }
        Ok(ChevalleyAlgebra { rs: rs.clone(), recipes, constants })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn recipes(&self) -> &[RootRecipe] {
        &self.recipes
    }

    /// `c_{b1,b2}`, zero when `b1 + b2` is not a root.
    pub fn constant(&self, b1: &RootVector, b2: &RootVector) -> i64 {
        self.constants.get(&(b1.clone(), b2.clone())).copied().unwrap_or(0)
    }

    pub fn constants(&self) -> &BTreeMap<(RootVector, RootVector), i64> {
        &self.constants
    }

    pub fn check_antisymmetry(&self) -> bool {
        self.constants.iter().all(|((a, b), &c)| self.constant(b, a) == -c)
    }

    /// `|c_{b1,b2}| = p + 1` with `p` the largest integer such that
    /// `b2 - p b1` is a root.
    pub fn check_string_norms(&self) -> bool {
        self.constants.iter().all(|((a, b), &c)| c.abs() == string_below(&self.rs, a, b) + 1)
    }

    /// Jacobi identity on the constants, for all triples of roots none of whose
    /// partial sums vanish.
    pub fn check_jacobi(&self) -> bool {
        let roots: Vec<RootVector> = self.rs.positive_roots().iter().flat_map(|b| [b.clone(), b.scale(-1)]).collect();
        let zero = RootVector::zero(self.rs.rank());
        for a in &roots {
            for b in &roots {
                for c in &roots {
                    let total = a.add(b).add(c);
                    if a.add(b) == zero || b.add(c) == zero || a.add(c) == zero || total == zero {
                        continue;
                    }
                    // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] as a multiple of X_total
                    let term = |x: &RootVector, y: &RootVector, z: &RootVector| {
                        self.constant(y, z) * self.constant(x, &y.add(z))
                    };
                    if term(a, b, c) + term(b, c, a) + term(c, a, b) != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `t` with `a = t b` blockwise, if it exists and `b` is not zero.
fn proportionality(a: &Op, b: &Op) -> Option<Q> {
    let mut ratio: Option<Q> = None;
    let keys: std::collections::BTreeSet<usize> = a.blocks.keys().chain(b.blocks.keys()).copied().collect();
    for s in keys {
        let (ma, mb) = (a.blocks.get(&s), b.blocks.get(&s));
        let rows = ma.or(mb).unwrap().rows();
        let cols = ma.or(mb).unwrap().cols();
        for r in 0..rows {
            for c in 0..cols {
                let x = ma.map_or_else(Q::zero, |m| m[(r, c)].clone());
                let y = mb.map_or_else(Q::zero, |m| m[(r, c)].clone());
                match (x.is_zero(), y.is_zero()) {
                    (true, true) => {}
                    (false, true) => return None,
                    (_, false) => {
                        let t = x / y;
                        match &ratio {
                            None => ratio = Some(t),
                            Some(prev) if *prev == t => {}
                            Some(_) => return None,
                        }
                    }
                }
            }
        }
    }
    ratio
}
