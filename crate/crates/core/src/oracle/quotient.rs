//! The `g_{x0}`-invariants of `V / g.x0` and the extension criterion over the
//! orbits of codimension one.
//!
//! For a `T_ad`-weight `gamma` the ambient weight space is
//! `V_gamma = (+)_i V(lambda_i)_{lambda_i - gamma}`; a vector there is stored
//! as the concatenation of its components, in the order of `F`.

use super::chevalley::ChevalleyAlgebra;
use super::irrep::IrrepModule;
use super::OracleError;
use crate::linalg::{independent_subset, intersect_spans, q, rank_of, span_basis, Matrix, Q};
use crate::rootsys::RootVector;
use crate::wmonoid::WeightMonoidContext;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// Where each module's piece of `V_gamma` sits in the concatenated vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub gamma: RootVector,
    /// `(module, weight space, offset, dim)`
    pub parts: Vec<(usize, usize, usize, usize)>,
    pub len: usize,
}

impl Layout {
    /// Unit vectors of the coordinates belonging to module `k`.
    pub fn block_basis(&self, k: usize) -> Vec<Vec<Q>> {
        let mut out = Vec::new();
        for &(m, _, off, dim) in &self.parts {
            if m != k {
                continue;
            }
            for c in 0..dim {
                let mut v = vec![Q::zero(); self.len];
                v[off + c] = q(1);
                out.push(v);
            }
        }
        out
    }
}

/// `V = V(lambda_1) + ... + V(lambda_r)` with `x0 = sum of v_{lambda_i}`.
#[derive(Clone, Debug)]
pub struct AmbientModel {
    ctx: WeightMonoidContext,
    modules: Vec<IrrepModule>,
}

impl AmbientModel {
    pub fn new(alg: &ChevalleyAlgebra, ctx: &WeightMonoidContext, cap: usize) -> Result<Self, OracleError> {
        let modules = ctx
            .basis()
            .iter()
            .map(|w| IrrepModule::build(alg.root_system(), alg.recipes(), w, cap))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AmbientModel { ctx: ctx.clone(), modules })
    }

    pub fn context(&self) -> &WeightMonoidContext {
        &self.ctx
    }

    pub fn modules(&self) -> &[IrrepModule] {
        &self.modules
    }

    pub fn layout(&self, gamma: &RootVector) -> Layout {
        let mut parts = Vec::new();
        let mut len = 0;
        if gamma.is_nonnegative() {
            for (k, m) in self.modules.iter().enumerate() {
                if let Some(s) = m.space_index(gamma) {
                    let dim = m.spaces()[s].dim;
                    parts.push((k, s, len, dim));
                    len += dim;
                }
            }
        }
        Layout { gamma: gamma.clone(), parts, len }
    }

    /// `X_beta v` for `v` in `V_gamma`; the result lies in `V_{gamma - beta}`.
    pub fn apply_root(&self, beta: &RootVector, from: &Layout, v: &[Q]) -> (Layout, Vec<Q>) {
        let to = self.layout(&from.gamma.sub(beta));
        let mut out = vec![Q::zero(); to.len];
        for &(k, s, off, dim) in &from.parts {
            let m = &self.modules[k];
            let op = m.root_op(beta).expect("every root has an operator");
            if let Some((t, w)) = m.apply(op, s, &v[off..off + dim]) {
                let &(_, _, toff, _) = to.parts.iter().find(|p| p.0 == k && p.1 == t).expect("target in layout");
                for (c, x) in w.into_iter().enumerate() {
                    out[toff + c] += x;
                }
            }
        }
        (to, out)
    }

    /// `x0` as a vector of `V_0`.
    pub fn x0(&self) -> (Layout, Vec<Q>) {
        let l = self.layout(&RootVector::zero(self.ctx.root_system().rank()));
        let v = vec![q(1); l.len];
        (l, v)
    }

    /// Spanning vectors of `(g.x0)_tau`: the highest weight vectors for
    /// `tau = 0`, `X_{-tau} x0` for a positive root `tau`, nothing otherwise.
    pub fn gx0_component(&self, tau: &RootVector) -> Vec<Vec<Q>> {
        let layout = self.layout(tau);
        if tau.0.iter().all(|&c| c == 0) {
            return layout.block_basis_all();
        }
        if !self.ctx.root_system().is_positive_root(tau) {
            return Vec::new();
        }
        let (l0, x0) = self.x0();
        let (_, v) = self.apply_root(&tau.scale(-1), &l0, &x0);
        if v.iter().all(Zero::is_zero) {
            Vec::new()
        } else {
            vec![v]
        }
    }

    /// The listed basis of `g.x0`: `v_lambda` for `lambda` in `F` and
    /// `X_{-beta} x0` for positive roots outside `F^perp`, each with its weight.
    pub fn gx0_basis(&self) -> Vec<(RootVector, Vec<Q>)> {
        let rs = self.ctx.root_system();
        let (l0, _) = self.x0();
        let mut out: Vec<(RootVector, Vec<Q>)> =
            l0.block_basis_all().into_iter().map(|v| (l0.gamma.clone(), v)).collect();
        let (l0, x0) = self.x0();
        for beta in rs.positive_roots() {
            if self.ctx.f_perp().contains(beta) {
                continue;
            }
            let (_, v) = self.apply_root(&beta.scale(-1), &l0, &x0);
            out.push((beta.clone(), v));
        }
        out
    }

    /// All `T_ad`-weights of `V`.
    pub fn ambient_weights(&self) -> BTreeSet<RootVector> {
        self.modules.iter().flat_map(|m| m.spaces().iter().map(|s| s.kappa.clone())).collect()
    }
}

impl Layout {
    fn block_basis_all(&self) -> Vec<Vec<Q>> {
        (0..self.len)
            .map(|c| {
                let mut v = vec![Q::zero(); self.len];
                v[c] = q(1);
                v
            })
            .collect()
    }
}

/// `(V/g.x0)^{g_{x0}}` in one `T_ad`-weight.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    pub layout: Layout,
    /// Basis of `{v in V_gamma : X_beta v in g.x0 for the required beta}`.
    pub invariant: Vec<Vec<Q>>,
    /// Basis of `(g.x0)_gamma`.
    pub gx0: Vec<Vec<Q>>,
    /// Vectors of `invariant` completing `gx0` to a basis; their classes form
    /// a basis of the quotient.
    pub representatives: Vec<Vec<Q>>,
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

/// Nonzero weight spaces of `(V/g.x0)^{g_{x0}}`, keyed by `T_ad`-weight.
pub fn invariant_quotient_weights(model: &AmbientModel) -> BTreeMap<RootVector, QuotientSpace> {
    let ctx = model.context();
    let rs = ctx.root_system();
    let n = rs.rank();
    let mut out = BTreeMap::new();
    for gamma in model.ambient_weights() {
        if gamma.0.iter().all(|&c| c == 0) || ctx.root_in_lattice(&gamma).is_none() {
            continue;
        }
        let layout = model.layout(&gamma);
        let mut betas: Vec<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
        betas.extend(ctx.sp_gamma().iter().map(|&i| RootVector::simple(n, i).scale(-1)));

        // unknowns: v, then for each constraint the coefficients on (g.x0)_{gamma - beta}
        let mut blocks: Vec<(Matrix, Vec<Vec<Q>>)> = Vec::new();
        for beta in &betas {
            let cols: Vec<Vec<Q>> = layout.block_basis_all();
            let mut images = Vec::new();
            let mut to_len = 0;
            for e in &cols {
                let (to, w) = model.apply_root(beta, &layout, e);
                to_len = to.len;
                images.push(w);
            }
            if to_len == 0 {
                continue;
            }
            let allowed = model.gx0_component(&gamma.sub(beta));
            blocks.push((Matrix::from_cols(to_len, &images), allowed));
        }
        let extra: usize = blocks.iter().map(|(_, a)| a.len()).sum();
        let rows: usize = blocks.iter().map(|(m, _)| m.rows()).sum();
        let invariant = if rows == 0 {
            layout.block_basis_all()
        } else {
            let mut big = Matrix::zeros(rows, layout.len + extra);
            let (mut r0, mut c0) = (0, layout.len);
            for (m, allowed) in &blocks {
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        big[(r0 + r, c)] = m[(r, c)].clone();
                    }
                    for (a, u) in allowed.iter().enumerate() {
                        big[(r0 + r, c0 + a)] = -u[r].clone();
                    }
                }
                r0 += m.rows();
                c0 += allowed.len();
            }
            let kernel: Vec<Vec<Q>> = big.nullspace().into_iter().map(|x| x[..layout.len].to_vec()).collect();
            span_basis(&kernel)
        };
        let gx0 = span_basis(&model.gx0_component(&gamma));
        let mut stacked = gx0.clone();
        stacked.extend(invariant.iter().cloned());
        let representatives: Vec<Vec<Q>> =
            independent_subset(&stacked).into_iter().filter(|&k| k >= gx0.len()).map(|k| stacked[k].clone()).collect();
        if representatives.is_empty() {
            continue;
        }
        out.insert(gamma, QuotientSpace { layout, invariant, gx0, representatives });
    }
    out
}

/// Indices `k` such that `G.z_{lambda_k}` has codimension one in `X0`.
pub fn codim1_orbit_weights(ctx: &WeightMonoidContext) -> Vec<usize> {
    let basis = ctx.basis();
    let n = ctx.root_system().rank();
    (0..basis.len())
        .filter(|&k| {
            (0..n).all(|a| basis[k].0[a] == 0 || basis.iter().enumerate().any(|(m, mu)| m != k && mu.0[a] != 0))
        })
        .collect()
}

/// Tangent weights recomputed from the modules, with the dimension of each
/// weight space.
#[derive(Clone, Debug, Default)]
pub struct OracleTangent {
    pub dimensions: BTreeMap<RootVector, usize>,
}

impl OracleTangent {
    pub fn weights(&self) -> BTreeSet<RootVector> {
        self.dimensions.keys().cloned().collect()
    }

    /// Weights whose space has dimension at least two.
    pub fn multiplicity_violations(&self) -> Vec<RootVector> {
        self.dimensions.iter().filter(|(_, &d)| d > 1).map(|(g, _)| g.clone()).collect()
    }
}

/// Restricts each invariant weight space to the classes whose section
/// extends over every orbit of codimension one.
pub fn oracle_tangent_weights(model: &AmbientModel, quotients: &BTreeMap<RootVector, QuotientSpace>) -> OracleTangent {
    let ctx = model.context();
    let codim1 = codim1_orbit_weights(ctx);
    let mut dimensions = BTreeMap::new();
    for (gamma, space) in quotients {
        let coeffs = ctx.root_in_lattice(gamma).expect("quotient weights lie in the lattice");
        let mut current = space.invariant.clone();
        for &k in &codim1 {
            let a = coeffs[k];
            if a <= 0 {
                continue;
            }
            if a > 1 {
                current.clear();
                break;
            }
            let mut allowed = space.layout.block_basis(k);
            allowed.extend(space.gx0.iter().cloned());
            current = intersect_spans(space.layout.len, &current, &allowed);
        }
        // current always contains (g.x0)_gamma unless it was cleared
        let mut with_n = current.clone();
        with_n.extend(space.gx0.iter().cloned());
        let dim = if current.is_empty() { 0 } else { rank_of(&with_n) - rank_of(&space.gx0) };
        if dim > 0 {
            dimensions.insert(gamma.clone(), dim);
        }
    }
    OracleTangent { dimensions }
}

/// Builds the modules and returns the oracle tangent weights in one call.
pub fn oracle_tangent(
    alg: &ChevalleyAlgebra,
    ctx: &WeightMonoidContext,
    cap: usize,
) -> Result<OracleTangent, OracleError> {
    let model = AmbientModel::new(alg, ctx, cap)?;
    let quotients = invariant_quotient_weights(&model);
    Ok(oracle_tangent_weights(&model, &quotients))
}
