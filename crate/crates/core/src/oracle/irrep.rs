//! Explicit irreducible highest-weight modules.
//!
//! `V(lambda)` is built weight space by weight space, going down from the
//! highest weight. The candidates in weight `mu` are the vectors `f_j b` for
//! `b` in the basis of `mu + alpha_j`; their images under all raising
//! operators are computed from the commutation relation
//! `e_i f_j b = f_j e_i b + delta_ij <alpha_i^vee, wt b> b`. In an irreducible
//! module a vector below the top is zero exactly when every `e_i` kills it,
//! so a maximal family of candidates with independent raising images is a
//! basis, and everything else is expressed in it.

use super::chevalley::RootRecipe;
use super::weyl::weyl_dimension;
use super::OracleError;
use crate::linalg::{q, Matrix, Q};
use crate::rootsys::{RootSystem, RootVector, Weight};
use num_traits::{ToPrimitive, Zero};
use std::collections::{BTreeMap, HashMap};

pub const DEFAULT_DIM_CAP: usize = 5000;

#[derive(Clone, Debug)]
pub struct WeightSpace {
    /// `lambda - mu` in the simple-root basis.
    pub kappa: RootVector,
    pub weight: Weight,
    pub dim: usize,
}

/// A weight-homogeneous operator raising T-weights by `shift`; `blocks[s]`
/// maps weight space `s` into the space with `kappa - shift`.
#[derive(Clone, Debug)]
pub struct Op {
    pub shift: RootVector,
    pub blocks: BTreeMap<usize, Matrix>,
}

impl Op {
    pub fn scale(&self, t: &Q) -> Op {
        Op { shift: self.shift.clone(), blocks: self.blocks.iter().map(|(&s, m)| (s, m.scale(t))).collect() }
    }
}

#[derive(Clone, Debug)]
pub struct IrrepModule {
    rs: RootSystem,
    highest: Weight,
    spaces: Vec<WeightSpace>,
    index: HashMap<RootVector, usize>,
    e: Vec<Op>,
    f: Vec<Op>,
    gram: Vec<Matrix>,
    root_ops: BTreeMap<RootVector, Op>,
}

impl IrrepModule {
    pub fn build(rs: &RootSystem, recipes: &[RootRecipe], lambda: &Weight, cap: usize) -> Result<Self, OracleError> {
        let n = rs.rank();
        if lambda.0.len() != n || !lambda.is_dominant() {
            return Err(OracleError::NotDominant { weight: lambda.0.clone() });
        }
        let expected = weyl_dimension(rs, lambda);
        if expected.to_usize().is_none_or(|d| d > cap) {
            return Err(OracleError::DimensionBudgetExceeded {
                weight: lambda.0.clone(),
                dimension: expected.to_string(),
                cap,
            });
        }
        let simple: Vec<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
        let mut m = IrrepModule {
            rs: rs.clone(),
            highest: lambda.clone(),
            spaces: vec![WeightSpace { kappa: RootVector::zero(n), weight: lambda.clone(), dim: 1 }],
            index: HashMap::from([(RootVector::zero(n), 0)]),
            e: simple.iter().map(|a| Op { shift: a.clone(), blocks: BTreeMap::new() }).collect(),
            f: simple.iter().map(|a| Op { shift: a.scale(-1), blocks: BTreeMap::new() }).collect(),
            gram: vec![Matrix::identity(1)],
            root_ops: BTreeMap::new(),
        };
        let mut layer = vec![0usize];
        while !layer.is_empty() {
            let mut kappas: Vec<RootVector> = Vec::new();
            for &s in &layer {
                for a in &simple {
                    let k = m.spaces[s].kappa.add(a);
                    if !kappas.contains(&k) {
                        kappas.push(k);
                    }
                }
            }
            kappas.sort();
            let mut next = Vec::new();
            for kappa in kappas {
                if let Some(s) = m.add_space(&kappa) {
                    next.push(s);
                }
            }
            layer = next;
        }
        m.build_root_ops(recipes);
        Ok(m)
    }

    fn weight_of(&self, kappa: &RootVector) -> Weight {
        let w = self.rs.root_to_weight(kappa);
        Weight(self.highest.0.iter().zip(&w.0).map(|(l, x)| l - x).collect())
    }

    /// Adds the weight space `kappa` if it is nonzero; returns its index.
    fn add_space(&mut self, kappa: &RootVector) -> Option<usize> {
        let n = self.rs.rank();
        let below = |j: usize| -> Option<usize> {
            let k = kappa.sub(&RootVector::simple(n, j));
            if k.is_nonnegative() {
                self.index.get(&k).copied()
            } else {
                None
            }
        };
        // targets of the raising operators
        let targets: Vec<(usize, usize)> = (0..n).filter_map(|i| below(i).map(|t| (i, t))).collect();
        let image_len: usize = targets.iter().map(|&(_, t)| self.spaces[t].dim).sum();
        let mut cands: Vec<(usize, usize, usize)> = Vec::new();
        for j in 0..n {
            if let Some(src) = below(j) {
                for b in 0..self.spaces[src].dim {
                    cands.push((j, src, b));
                }
            }
        }
        let mut images: Vec<Vec<Q>> = Vec::with_capacity(cands.len());
        for &(j, src, b) in &cands {
            let mut img = Vec::with_capacity(image_len);
            let src_weight = self.spaces[src].weight.clone();
            for &(i, t) in &targets {
                let mut part = vec![Q::zero(); self.spaces[t].dim];
                // f_j (e_i b)
                if let Some(ei) = self.e[i].blocks.get(&src) {
                    let eb = ei.col(b);
                    let mid = self.target(src, &self.e[i].shift).expect("block has a target");
                    if let Some(fj) = self.f[j].blocks.get(&mid) {
                        part = fj.mul_vec(&eb);
                    }
                }
                if i == j {
                    // t == src here
                    part[b] += q(src_weight.0[i]);
                }
                img.extend(part);
            }
            images.push(img);
        }
        if image_len == 0 {
            return None;
        }
        let mut reduced = Matrix::from_cols(image_len, &images);
        let pivots = reduced.rref();
        if pivots.is_empty() {
            return None;
        }
        let dim = pivots.len();
        let s = self.spaces.len();
        let weight = self.weight_of(kappa);
        self.spaces.push(WeightSpace { kappa: kappa.clone(), weight, dim });
        self.index.insert(kappa.clone(), s);

        // f_j blocks: candidate (j, src, b) has coordinates = column of the rref
        let mut fblocks: BTreeMap<(usize, usize), Matrix> = BTreeMap::new();
        for (c, &(j, src, b)) in cands.iter().enumerate() {
            let blk = fblocks.entry((j, src)).or_insert_with(|| Matrix::zeros(dim, self.spaces[src].dim));
            for r in 0..dim {
                blk[(r, b)] = reduced[(r, c)].clone();
            }
        }
        for ((j, src), blk) in fblocks {
            self.f[j].blocks.insert(src, blk);
        }
        // e_i blocks: columns are the image parts of the basis candidates
        let mut offset = 0;
        for &(i, t) in &targets {
            let td = self.spaces[t].dim;
            let mut blk = Matrix::zeros(td, dim);
            for (col, &p) in pivots.iter().enumerate() {
                for r in 0..td {
                    blk[(r, col)] = images[p][offset + r].clone();
                }
            }
            self.e[i].blocks.insert(s, blk);
            offset += td;
        }
        // contravariant form: <f_j b, w> = <b, e_j w>
        let mut g = Matrix::zeros(dim, dim);
        for (row, &p) in pivots.iter().enumerate() {
            let (j, src, b) = cands[p];
            let ej = &self.e[j].blocks[&s];
            let gs = &self.gram[src];
            for col in 0..dim {
                let mut acc = Q::zero();
                for k in 0..gs.cols() {
                    if !gs[(b, k)].is_zero() && !ej[(k, col)].is_zero() {
                        acc += &gs[(b, k)] * &ej[(k, col)];
                    }
                }
                g[(row, col)] = acc;
            }
        }
        self.gram.push(g);
        Some(s)
    }

    fn build_root_ops(&mut self, recipes: &[RootRecipe]) {
        for (i, op) in self.e.clone().into_iter().enumerate() {
            self.root_ops.insert(op.shift.clone(), op);
            let f = self.f[i].clone();
            self.root_ops.insert(f.shift.clone(), f);
        }
        for rec in recipes {
            let norm = q(rec.p + 1).recip();
            let up = self.commutator(&self.e[rec.simple], &self.root_ops[&rec.rest]).scale(&norm);
            let down = self.commutator(&self.f[rec.simple], &self.root_ops[&rec.rest.scale(-1)]).scale(&(-norm));
            self.root_ops.insert(rec.root.clone(), up);
            self.root_ops.insert(rec.root.scale(-1), down);
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    pub fn dim(&self) -> usize {
        self.spaces.iter().map(|s| s.dim).sum()
    }

    pub fn spaces(&self) -> &[WeightSpace] {
        &self.spaces
    }

    pub fn space_index(&self, kappa: &RootVector) -> Option<usize> {
        self.index.get(kappa).copied()
    }

    /// Multiplicities keyed by `kappa = lambda - mu`.
    pub fn multiplicities(&self) -> BTreeMap<RootVector, u64> {
        self.spaces.iter().map(|s| (s.kappa.clone(), s.dim as u64)).collect()
    }

    pub fn gram(&self, s: usize) -> &Matrix {
        &self.gram[s]
    }

    pub fn e(&self, i: usize) -> &Op {
        &self.e[i]
    }

    pub fn f(&self, i: usize) -> &Op {
        &self.f[i]
    }

    /// `X_beta` for a (positive or negative) root `beta`.
    pub fn root_op(&self, beta: &RootVector) -> Option<&Op> {
        self.root_ops.get(beta)
    }

    /// Index of the space `kappa(s) - shift`, if nonzero.
    pub fn target(&self, s: usize, shift: &RootVector) -> Option<usize> {
        let k = self.spaces[s].kappa.sub(shift);
        if k.is_nonnegative() {
            self.index.get(&k).copied()
        } else {
            None
        }
    }

    /// `op` applied to a vector of space `s`; `None` when the result is zero
    /// for weight reasons.
    pub fn apply(&self, op: &Op, s: usize, v: &[Q]) -> Option<(usize, Vec<Q>)> {
        let t = self.target(s, &op.shift)?;
        let blk = op.blocks.get(&s)?;
        Some((t, blk.mul_vec(v)))
    }

    /// `a b` as an operator.
    pub fn compose(&self, a: &Op, b: &Op) -> Op {
        let shift = a.shift.add(&b.shift);
        let mut blocks = BTreeMap::new();
        for (&s, bb) in &b.blocks {
            let Some(mid) = self.target(s, &b.shift) else { continue };
            let Some(ab) = a.blocks.get(&mid) else { continue };
            blocks.insert(s, ab.mul(bb));
        }
        Op { shift, blocks }
    }

    pub fn commutator(&self, a: &Op, b: &Op) -> Op {
        let ab = self.compose(a, b);
        let ba = self.compose(b, a);
        let mut blocks = ab.blocks;
        for (s, m) in ba.blocks {
            match blocks.remove(&s) {
                Some(x) => {
                    blocks.insert(s, x.sub(&m));
                }
                None => {
                    blocks.insert(s, m.scale(&q(-1)));
                }
            }
        }
        Op { shift: ab.shift, blocks }
    }

    /// `<e_i u, w> = <u, f_i w>` on every pair of basis vectors, and the form
    /// is symmetric.
    pub fn check_contravariance(&self) -> bool {
        for g in &self.gram {
            if *g != g.transpose() {
                return false;
            }
        }
        for i in 0..self.rs.rank() {
            for (&s, e) in &self.e[i].blocks {
                let t = self.target(s, &self.e[i].shift).expect("block has a target");
                let lhs = e.transpose().mul(&self.gram[t]);
                let rhs = match self.f[i].blocks.get(&t) {
                    Some(f) => self.gram[s].mul(f),
                    None => Matrix::zeros(self.spaces[s].dim, self.spaces[t].dim),
                };
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// `[X_beta, X_-beta]` acts on every weight space by `<beta^vee, mu>`.
    pub fn check_coroot_action(&self) -> bool {
        for beta in self.rs.positive_roots() {
            let c = self.commutator(&self.root_ops[beta], &self.root_ops[&beta.scale(-1)]);
            for (s, space) in self.spaces.iter().enumerate() {
                let expected = Matrix::identity(space.dim).scale(&q(self.rs.coroot_pairing(beta, &space.weight)));
                let got = c.blocks.get(&s).cloned().unwrap_or_else(|| Matrix::zeros(space.dim, space.dim));
                if got != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Whether every block of `op` is zero.
    pub fn is_zero_op(op: &Op) -> bool {
        op.blocks.values().all(Matrix::is_zero)
    }
}
