//! Weyl's dimension formula and Freudenthal's multiplicity formula.
//!
//! Weights of `V(lambda)` are indexed by `kappa = lambda - mu` written in the
//! simple-root basis, which keeps every inner product integral.

use crate::rootsys::{RootSystem, RootVector, Weight};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use std::collections::BTreeMap;

/// `(beta, mu)` for a root-lattice element `beta` and a weight `mu`.
fn pair(rs: &RootSystem, beta: &RootVector, mu: &[i64]) -> i64 {
    let d = rs.symmetrizer();
    beta.0.iter().zip(mu).zip(d).map(|((b, m), di)| b * m * di).sum()
}

/// `dim V(lambda)`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> BigInt {
    let shifted: Vec<i64> = lambda.0.iter().map(|x| x + 1).collect();
    let rho = vec![1i64; rs.rank()];
    let mut acc = BigRational::one();
    for beta in rs.positive_roots() {
        acc *= BigRational::new(pair(rs, beta, &shifted).into(), pair(rs, beta, &rho).into());
    }
    debug_assert!(acc.is_integer());
    acc.to_integer()
}

/// `dim V(lambda)` if it fits in a `usize`.
pub fn weyl_dimension_usize(rs: &RootSystem, lambda: &Weight) -> Option<usize> {
    weyl_dimension(rs, lambda).to_usize()
}

/// Weight multiplicities of `V(lambda)` keyed by `kappa = lambda - mu`.
pub fn freudenthal(rs: &RootSystem, lambda: &Weight) -> BTreeMap<RootVector, u64> {
    let n = rs.rank();
    let lam_rho: Vec<i64> = lambda.0.iter().map(|x| x + 1).collect();
    let mut mult: BTreeMap<RootVector, u64> = BTreeMap::new();
    mult.insert(RootVector::zero(n), 1);
    let mut layer = vec![RootVector::zero(n)];
    while !layer.is_empty() {
        let mut next: Vec<RootVector> = Vec::new();
        for kappa in &layer {
            for i in 0..n {
                let cand = kappa.add(&RootVector::simple(n, i));
                if !next.contains(&cand) {
                    next.push(cand);
                }
            }
        }
        let mut kept = Vec::new();
        for kappa in next {
            // |lambda + rho|^2 - |mu + rho|^2
            let den = 2 * pair(rs, &kappa, &lam_rho) - rs.root_inner(&kappa, &kappa);
            if den <= 0 {
                continue;
            }
            let mut num: i64 = 0;
            for beta in rs.positive_roots() {
                let mut k = 1;
                loop {
                    let prev = kappa.sub(&beta.scale(k));
                    if !prev.is_nonnegative() {
                        break;
                    }
                    if let Some(&m) = mult.get(&prev) {
                        // (mu + k beta, beta) with mu + k beta = lambda - prev
                        let ip = pair(rs, beta, &lambda.0) - rs.root_inner(&prev, beta);
                        num += m as i64 * ip;
                    }
                    k += 1;
                }
            }
            let num = 2 * num;
            assert_eq!(num % den, 0, "Freudenthal recursion produced a fraction");
            let m = num / den;
            if m > 0 {
                mult.insert(kappa.clone(), m as u64);
                kept.push(kappa);
            }
        }
        layer = kept;
    }
    mult
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(s: &str, w: &[i64]) -> BigInt {
        weyl_dimension(&RootSystem::parse(s).unwrap(), &Weight(w.to_vec()))
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim("A1", &[2]), 3.into());
        assert_eq!(dim("A1xA1", &[4, 2]), 15.into());
        assert_eq!(dim("A2", &[1, 1]), 8.into());
        assert_eq!(dim("B2", &[1, 0]), 5.into());
        assert_eq!(dim("B2", &[0, 1]), 4.into());
        assert_eq!(dim("G2", &[1, 0]), 7.into());
        assert_eq!(dim("G2", &[0, 1]), 14.into());
        assert_eq!(dim("E8", &[0, 0, 0, 0, 0, 0, 0, 1]), 248.into());
        assert_eq!(dim("F4", &[0, 0, 0, 1]), 26.into());
    }

    #[test]
    fn multiplicities_sum_to_dimension() {
        for (s, w) in
            [("A2", vec![1, 1]), ("B2", vec![1, 1]), ("G2", vec![1, 0]), ("C3", vec![0, 1, 0]), ("A3", vec![1, 0, 1])]
        {
            let rs = RootSystem::parse(s).unwrap();
            let lambda = Weight(w);
            let m = freudenthal(&rs, &lambda);
            let total: u64 = m.values().sum();
            assert_eq!(BigInt::from(total), weyl_dimension(&rs, &lambda), "{s}");
        }
    }

    #[test]
    fn adjoint_zero_weight() {
        let rs = RootSystem::parse("A2").unwrap();
        let m = freudenthal(&rs, &Weight(vec![1, 1]));
        assert_eq!(m[&RootVector(vec![1, 1])], 2);
        let g2 = RootSystem::parse("G2").unwrap();
        let m = freudenthal(&g2, &Weight(vec![1, 0]));
        // the 7-dimensional module: zero weight has multiplicity 1
        assert_eq!(m[&RootVector(vec![2, 1])], 1);
    }
}
