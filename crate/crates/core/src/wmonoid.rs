//! Free monoids of dominant weights.
//!
//! A [`WeightMonoidContext`] holds the basis `F = {lambda_1, ..., lambda_r}`
//! of `Gamma`. Because `Gamma` is free, `(Z Gamma)^*` is canonically `Z^r` via
//! evaluation on `F`, so a [`Functional`] is stored as its value vector on the
//! basis and the primitive ray generators of the dual cone are exactly the dual
//! basis `lambda_i^#`.

use crate::linalg::{positive_multiple, q, Matrix, Q};
use crate::rootsys::{RootSystem, RootVector, Weight};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightMonoidError {
    #[error("weight #{index} has {got} coordinates, expected {expected}")]
    WrongLength { index: usize, expected: usize, got: usize },
    #[error("weight #{index} is not dominant")]
    NonDominantWeight { index: usize },
    #[error("the weights are linearly dependent over Q")]
    DependentBasis,
    #[error("simple root a{} is not in the lattice Z Gamma", .index + 1)]
    LatticeMembership { index: usize },
}

/// An element of `(Z Gamma)^* (x) Q`, given by its values on the basis `F`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Functional(pub Vec<Q>);

impl Functional {
    pub fn values(&self) -> &[Q] {
        &self.0
    }

    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![Q::zero(); r];
        v[i] = Q::one();
        Functional(v)
    }

    /// Lies in `(Z Gamma)^*`.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Lies in the dual cone `Gamma^vee` (nonnegative on the free basis).
    pub fn in_dual_cone(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Value on the element with coordinates `coeffs` in the basis `F`.
    pub fn eval(&self, coeffs: &[Q]) -> Q {
        self.0.iter().zip(coeffs).map(|(a, b)| a * b).sum()
    }

    pub fn eval_int(&self, coeffs: &[i64]) -> Q {
        self.0.iter().zip(coeffs).map(|(a, &b)| a * q(b)).sum()
    }

    pub fn sub(&self, other: &Functional) -> Functional {
        Functional(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Q) -> Functional {
        Functional(self.0.iter().map(|a| a * s).collect())
    }

    /// `self = t * other` for some rational `t > 0`.
    pub fn is_positive_multiple_of(&self, other: &Functional) -> bool {
        positive_multiple(&self.0, &other.0).is_some()
    }
}

/// The free monoid `Gamma` with basis `F` together with derived constants.
#[derive(Clone, Debug)]
pub struct WeightMonoidContext {
    rs: RootSystem,
    basis: Vec<Weight>,
    sp: BTreeSet<usize>,
    f_perp: Vec<RootVector>,
    // r independent rows of the n x r matrix with columns lambda_i, and the
    // inverse of the corresponding square block
    pivot_rows: Vec<usize>,
    pivot_inverse: Matrix,
}

impl WeightMonoidContext {
    pub fn new(rs: &RootSystem, basis: Vec<Weight>) -> Result<Self, WeightMonoidError> {
        let n = rs.rank();
        for (index, w) in basis.iter().enumerate() {
            if w.0.len() != n {
                return Err(WeightMonoidError::WrongLength { index, expected: n, got: w.0.len() });
            }
            if !w.is_dominant() {
                return Err(WeightMonoidError::NonDominantWeight { index });
            }
        }
        let r = basis.len();
        let (pivot_rows, pivot_inverse) = if r == 0 {
            (Vec::new(), Matrix::zeros(0, 0))
        } else {
            // rows of F^T are the weights; pivot columns of F^T are independent rows of F
            let ft = Matrix::from_i64(&basis.iter().map(|w| w.0.clone()).collect::<Vec<_>>());
            let pivots = ft.clone().rref();
            if pivots.len() < r {
                return Err(WeightMonoidError::DependentBasis);
            }
            let mut block = Matrix::zeros(r, r);
            for (a, &row) in pivots.iter().enumerate() {
                for (j, w) in basis.iter().enumerate() {
                    block[(a, j)] = q(w.0[row]);
                }
            }
            let mut inverse = Matrix::zeros(r, r);
            for c in 0..r {
                let mut e = vec![Q::zero(); r];
                e[c] = Q::one();
                let x = block.solve(&e).expect("pivot block is invertible");
                for (row, v) in x.into_iter().enumerate() {
                    inverse[(row, c)] = v;
                }
            }
            (pivots, inverse)
        };
        let sp: BTreeSet<usize> = (0..n).filter(|&i| basis.iter().all(|w| w.0[i] == 0)).collect();
        let f_perp = rs
            .positive_roots()
            .iter()
            .filter(|beta| basis.iter().all(|w| rs.coroot_pairing(beta, w) == 0))
            .cloned()
            .collect();
        Ok(WeightMonoidContext { rs: rs.clone(), basis, sp, f_perp, pivot_rows, pivot_inverse })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    /// `r = |F|`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `S^p(Gamma)`: simple roots whose coroot vanishes on every basis weight.
    pub fn sp_gamma(&self) -> &BTreeSet<usize> {
        &self.sp
    }

    /// Positive roots `beta` with `<lambda, beta^vee> = 0` for all `lambda` in `F`.
    pub fn f_perp(&self) -> &[RootVector] {
        &self.f_perp
    }

    /// `E(Gamma)`, the dual basis of `F`.
    pub fn e_gamma(&self) -> Vec<Functional> {
        (0..self.rank()).map(|i| Functional::unit(self.rank(), i)).collect()
    }

    /// Coordinates of `v` in the basis `F` over `Q`, if `v` lies in `Q Gamma`.
    pub fn rational_coords(&self, v: &Weight) -> Option<Vec<Q>> {
        let r = self.rank();
        let rhs: Vec<Q> = self.pivot_rows.iter().map(|&row| q(v.0[row])).collect();
        let c = if r == 0 { Vec::new() } else { self.pivot_inverse.mul_vec(&rhs) };
        for i in 0..self.rs.rank() {
            let mut acc = Q::zero();
            for (cj, w) in c.iter().zip(&self.basis) {
                acc += cj * q(w.0[i]);
            }
            if acc != q(v.0[i]) {
                return None;
            }
        }
        Some(c)
    }

    /// Integer coordinates of `v` in the basis `F`, if `v` lies in `Z Gamma`.
    pub fn in_lattice(&self, v: &Weight) -> Option<Vec<i64>> {
        let c = self.rational_coords(v)?;
        c.iter().map(|x| if x.is_integer() { i64::try_from(x.to_integer()).ok() } else { None }).collect()
    }

    pub fn root_coords(&self, v: &RootVector) -> Option<Vec<Q>> {
        self.rational_coords(&self.rs.root_to_weight(v))
    }

    pub fn root_in_lattice(&self, v: &RootVector) -> Option<Vec<i64>> {
        self.in_lattice(&self.rs.root_to_weight(v))
    }

    /// `alpha_i^vee` restricted to `Z Gamma`.
    pub fn coroot_functional(&self, i: usize) -> Functional {
        Functional(self.basis.iter().map(|w| q(w.0[i])).collect())
    }

    /// The set `a(alpha_i)` of functionals taking value 1 on `alpha_i` with
    /// either themselves or `alpha_i^vee` minus them in `E(Gamma)`.
    pub fn a_set(&self, i: usize) -> Result<Vec<Functional>, WeightMonoidError> {
        let n = self.rs.rank();
        let coeffs =
            self.root_in_lattice(&RootVector::simple(n, i)).ok_or(WeightMonoidError::LatticeMembership { index: i })?;
        let coroot = self.coroot_functional(i);
        let mut out: BTreeSet<Functional> = BTreeSet::new();
        for (j, &c) in coeffs.iter().enumerate() {
            if c == 1 {
                let dual = Functional::unit(self.rank(), j);
                out.insert(coroot.sub(&dual));
                out.insert(dual);
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Context with the basis reordered: `new[k] = old[perm[k]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let basis = perm.iter().map(|&k| self.basis[k].clone()).collect();
        WeightMonoidContext::new(&self.rs, basis).expect("a permutation of a valid basis is valid")
    }
}
