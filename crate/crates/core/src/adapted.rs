//! Adaptedness of spherical roots and of sets of spherical roots to a free
//! weight monoid, the combinatorial tangent space, and the enumeration of
//! N-adapted subsets.

use crate::linalg::{q, rank_of, Q};
use crate::rootsys::{RootSystem, RootVector};
use crate::sphroots::{enumerate_sc_roots, SphericalRoot};
use crate::wmonoid::{Functional, WeightMonoidContext};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Which singleton condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    /// `sigma` is not in `Z Gamma`.
    #[serde(rename = "1")]
    Lattice,
    /// `sigma` is not compatible with `S^p(Gamma)`.
    #[serde(rename = "2")]
    Compatibility,
    /// A dual basis vector positive on `sigma` is not proportional to any coroot.
    #[serde(rename = "3")]
    ColorRays,
    #[serde(rename = "4a")]
    ASize,
    #[serde(rename = "4b")]
    ADualCone,
    #[serde(rename = "4c")]
    EBound,
    #[serde(rename = "5")]
    Double,
    #[serde(rename = "6")]
    Orthogonal,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::Lattice => "1",
            Condition::Compatibility => "2",
            Condition::ColorRays => "3",
            Condition::ASize => "4a",
            Condition::ADualCone => "4b",
            Condition::EBound => "4c",
            Condition::Double => "5",
            Condition::Orthogonal => "6",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// `Ok` or the first failing condition.
pub type Verdict = Result<(), Condition>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Adapted,
    NAdapted,
}

fn singleton_check(ctx: &WeightMonoidContext, sigma: &SphericalRoot, mode: Mode) -> Verdict {
    let rs = ctx.root_system();
    let r = ctx.rank();
    let coeffs = ctx.root_in_lattice(&sigma.vector).ok_or(Condition::Lattice)?;
    if !sigma.compatible_with_sp(rs, ctx.sp_gamma()) {
        return Err(Condition::Compatibility);
    }
    match sigma.as_simple() {
        None => {
            let outside: Vec<Functional> =
                (0..rs.rank()).filter(|i| !ctx.sp_gamma().contains(i)).map(|i| ctx.coroot_functional(i)).collect();
            for (j, &c) in coeffs.iter().enumerate() {
                let delta = Functional::unit(r, j);
                if c > 0 && !outside.iter().any(|b| b.is_positive_multiple_of(&delta)) {
                    return Err(Condition::ColorRays);
                }
            }
        }
        Some(i) => {
            let a = ctx.a_set(i).map_err(|_| Condition::Lattice)?;
            let size_ok = match mode {
                Mode::Adapted => a.len() == 1 || a.len() == 2,
                Mode::NAdapted => a.len() == 2,
            };
            if !size_ok {
                return Err(Condition::ASize);
            }
            if !a.iter().all(Functional::in_dual_cone) {
                return Err(Condition::ADualCone);
            }
            if coeffs.iter().any(|&c| c > 1) {
                return Err(Condition::EBound);
            }
        }
    }
    if let Some(i) = sigma.as_double() {
        let in_lattice = ctx.root_in_lattice(&RootVector::simple(rs.rank(), i)).is_some();
        let even = ctx.basis().iter().all(|w| w.0[i] % 2 == 0);
        if (mode == Mode::Adapted && in_lattice) || !even {
            return Err(Condition::Double);
        }
    }
    if let Some((i, j)) = sigma.as_orthogonal_pair() {
        if ctx.coroot_functional(i) != ctx.coroot_functional(j) {
            return Err(Condition::Orthogonal);
        }
    }
    Ok(())
}

/// Whether the single spherical root `sigma` is adapted to `Gamma`.
pub fn is_adapted_singleton(ctx: &WeightMonoidContext, sigma: &SphericalRoot) -> Verdict {
    singleton_check(ctx, sigma, Mode::Adapted)
}

/// Whether the single spherical root `sigma` is N-adapted to `Gamma`.
pub fn is_n_adapted_singleton(ctx: &WeightMonoidContext, sigma: &SphericalRoot) -> Verdict {
    singleton_check(ctx, sigma, Mode::NAdapted)
}

/// The N-adapted spherically closed spherical roots with the reason every
/// other catalog root was rejected.
#[derive(Clone, Debug)]
pub struct TangentReport {
    pub weights: Vec<SphericalRoot>,
    pub dimension: usize,
    pub diagnostics: Vec<(SphericalRoot, Condition)>,
}

impl TangentReport {
    pub fn weight_vectors(&self) -> BTreeSet<RootVector> {
        self.weights.iter().map(|s| s.vector.clone()).collect()
    }
}

pub fn tangent_space(ctx: &WeightMonoidContext) -> TangentReport {
    let mut weights = Vec::new();
    let mut diagnostics = Vec::new();
    for sigma in enumerate_sc_roots(ctx.root_system()) {
        match is_n_adapted_singleton(ctx, &sigma) {
            Ok(()) => weights.push(sigma),
            Err(c) => diagnostics.push((sigma, c)),
        }
    }
    TangentReport { dimension: weights.len(), weights, diagnostics }
}

// ---------------------------------------------------------------------------
// Spherical systems

/// An axiom or condition evaluated by the subset checker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axiom {
    /// every element of the set lies in `Z Gamma`
    Lattice,
    A1,
    A2,
    A3,
    Sigma1,
    Sigma2,
    S,
    AugA1,
    AugA2,
    AugSigma1,
    AugSigma2,
    AugS,
    /// dual basis vectors positive on the set are proportional to a color
    Rays,
    /// every color lies in the dual cone
    DualCone,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::Lattice => "lattice",
            Axiom::A1 => "A1",
            Axiom::A2 => "A2",
            Axiom::A3 => "A3",
            Axiom::Sigma1 => "Σ1",
            Axiom::Sigma2 => "Σ2",
            Axiom::S => "S",
            Axiom::AugA1 => "a1",
            Axiom::AugA2 => "a2",
            Axiom::AugSigma1 => "σ1",
            Axiom::AugSigma2 => "σ2",
            Axiom::AugS => "s",
            Axiom::Rays => "3",
            Axiom::DualCone => "4",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColorKind {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "b")]
    B,
}

/// A color together with its Cartan pairing on `Z Gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Color {
    pub kind: ColorKind,
    /// Simple roots the color is attached to: the roots of `Sigma ∩ S` whose
    /// `A`-slot it fills (kind `a`), the root `alpha` with `2 alpha` in the
    /// set (kind `2a`), or an equivalence class of simple roots (kind `b`).
    pub anchors: Vec<usize>,
    pub functional: Functional,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColorSet {
    pub colors: Vec<Color>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdaptedError {
    #[error("pairing values for color {id} have length {got}, expected {expected}")]
    MalformedPairing { id: usize, expected: usize, got: usize },
    #[error("{} is not N-adapted to the monoid", .tag)]
    Precondition { tag: String },
    #[error("subset search examined more than {cap} subsets")]
    SearchBudgetExceeded { cap: usize, partial: Box<SubsetEnumeration> },
}

/// Verdicts of the spherical-system axioms for a triple `(S^p, Sigma, A)`.
///
/// `pairing[id][k]` is `c(D_id, sigma_k)`.
pub fn check_system_axioms(
    rs: &RootSystem,
    sp: &BTreeSet<usize>,
    sigma: &[SphericalRoot],
    pairing: &BTreeMap<usize, Vec<Q>>,
) -> Result<Vec<(Axiom, bool)>, AdaptedError> {
    for (&id, values) in pairing {
        if values.len() != sigma.len() {
            return Err(AdaptedError::MalformedPairing { id, expected: sigma.len(), got: values.len() });
        }
    }
    let one = Q::one();
    let a1 = pairing
        .values()
        .all(|vals| vals.iter().zip(sigma).all(|(c, s)| *c <= one && (*c != one || s.as_simple().is_some())));
    let mut a2 = true;
    let mut covered: BTreeSet<usize> = BTreeSet::new();
    for (k, s) in sigma.iter().enumerate() {
        let Some(i) = s.as_simple() else { continue };
        let a_alpha: Vec<usize> = pairing.iter().filter(|(_, vals)| vals[k] == one).map(|(&id, _)| id).collect();
        covered.extend(a_alpha.iter().copied());
        if a_alpha.len() != 2 {
            a2 = false;
            continue;
        }
        for (m, t) in sigma.iter().enumerate() {
            let sum = &pairing[&a_alpha[0]][m] + &pairing[&a_alpha[1]][m];
            if sum != q(rs.root_pairing(i, &t.vector)) {
                a2 = false;
            }
        }
    }
    let a3 = pairing.keys().all(|id| covered.contains(id));
    let mut sigma1 = true;
    for s in sigma {
        let Some(i) = s.as_double() else { continue };
        for t in sigma {
            if t.vector == s.vector {
                continue;
            }
            let p = rs.root_pairing(i, &t.vector);
            if p % 2 != 0 || p > 0 {
                sigma1 = false;
            }
        }
    }
    let mut sigma2 = true;
    for s in sigma {
        let Some((i, j)) = s.as_orthogonal_pair() else { continue };
        if sigma.iter().any(|t| rs.root_pairing(i, &t.vector) != rs.root_pairing(j, &t.vector)) {
            sigma2 = false;
        }
    }
    let s_ok = sigma.iter().all(|s| s.compatible_with_sp(rs, sp));
    Ok(vec![
        (Axiom::A1, a1),
        (Axiom::A2, a2),
        (Axiom::A3, a3),
        (Axiom::Sigma1, sigma1),
        (Axiom::Sigma2, sigma2),
        (Axiom::S, s_ok),
    ])
}

/// The candidate spherical system attached to `(Gamma, Sigma)` and its verdicts.
#[derive(Clone, Debug)]
pub struct SphericalSystemCheck {
    pub sp: BTreeSet<usize>,
    pub sigma: Vec<SphericalRoot>,
    /// The abstract set `A`: one functional on `Z Gamma` per color id.
    pub a_colors: Vec<Functional>,
    pub colors: ColorSet,
    pub verdicts: Vec<(Axiom, bool)>,
    /// Number of color identifications examined.
    pub identifications: usize,
}

impl SphericalSystemCheck {
    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<Axiom> {
        self.verdicts.iter().filter(|(_, ok)| !ok).map(|(a, _)| *a).collect()
    }

    pub fn verdict(&self, axiom: Axiom) -> Option<bool> {
        self.verdicts.iter().find(|(a, _)| *a == axiom).map(|(_, ok)| *ok)
    }

    /// Whether the spherical-system axioms hold (ignoring the augmentation and
    /// the monoid conditions).
    pub fn is_spherical_system(&self) -> bool {
        self.verdicts
            .iter()
            .filter(|(a, _)| matches!(a, Axiom::A1 | Axiom::A2 | Axiom::A3 | Axiom::Sigma1 | Axiom::Sigma2 | Axiom::S))
            .all(|(_, ok)| *ok)
    }
}

struct Slot {
    alpha: usize,
    functional: Functional,
}

/// All partitions of the slots into blocks of equal functionals, never
/// putting two slots of the same simple root together.
fn identifications(slots: &[Slot], cap: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(slots: &[Slot], k: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>, cap: usize) {
        if out.len() >= cap {
            return;
        }
        if k == slots.len() {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            let head = blocks[b][0];
            if slots[head].functional == slots[k].functional
                && blocks[b].iter().all(|&m| slots[m].alpha != slots[k].alpha)
            {
                blocks[b].push(k);
                rec(slots, k + 1, blocks, out, cap);
                blocks[b].pop();
            }
        }
        blocks.push(vec![k]);
        rec(slots, k + 1, blocks, out, cap);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(slots, 0, &mut Vec::new(), &mut out, cap);
    out
}

const IDENTIFICATION_CAP: usize = 4096;

fn dedup_sigma(sigma: &[SphericalRoot]) -> Vec<SphericalRoot> {
    let mut seen = BTreeSet::new();
    let mut out: Vec<SphericalRoot> = sigma.iter().filter(|s| seen.insert(s.vector.clone())).cloned().collect();
    out.sort_by(|a, b| a.vector.cmp(&b.vector));
    out
}

/// Every candidate system (one per admissible identification of colors) for
/// `Sigma`, with its verdicts.
pub fn identification_checks(ctx: &WeightMonoidContext, sigma: &[SphericalRoot]) -> Vec<SphericalSystemCheck> {
    let rs = ctx.root_system();
    let n = rs.rank();
    let r = ctx.rank();
    let sigma = dedup_sigma(sigma);
    let sp = ctx.sp_gamma().clone();
    let bare = |verdicts: Vec<(Axiom, bool)>| SphericalSystemCheck {
        sp: sp.clone(),
        sigma: sigma.clone(),
        a_colors: Vec::new(),
        colors: ColorSet::default(),
        verdicts,
        identifications: 0,
    };

    let mut coords: Vec<Vec<i64>> = Vec::new();
    for s in &sigma {
        match ctx.root_in_lattice(&s.vector) {
            Some(c) => coords.push(c),
            None => return vec![bare(vec![(Axiom::Lattice, false)])],
        }
    }
    let mut slots = Vec::new();
    for s in &sigma {
        let Some(i) = s.as_simple() else { continue };
        let a = ctx.a_set(i).expect("simple root in the lattice");
        match a.len() {
            1 => {
                slots.push(Slot { alpha: i, functional: a[0].clone() });
                slots.push(Slot { alpha: i, functional: a[0].clone() });
            }
            2 => {
                slots.push(Slot { alpha: i, functional: a[0].clone() });
                slots.push(Slot { alpha: i, functional: a[1].clone() });
            }
            _ => return vec![bare(vec![(Axiom::Lattice, true), (Axiom::A2, false)])],
        }
    }

    // colors independent of the identification
    let simple_in: BTreeSet<usize> = sigma.iter().filter_map(SphericalRoot::as_simple).collect();
    let halves: BTreeSet<usize> = sigma.iter().filter_map(SphericalRoot::as_double).collect();
    let mut fixed = Vec::new();
    for &i in &halves {
        fixed.push(Color {
            kind: ColorKind::TwoA,
            anchors: vec![i],
            functional: ctx.coroot_functional(i).scale(&Q::new(1.into(), 2.into())),
        });
    }
    let b_roots: Vec<usize> =
        (0..n).filter(|i| !sp.contains(i) && !simple_in.contains(i) && !halves.contains(i)).collect();
    let mut class_of: BTreeMap<usize, usize> = b_roots.iter().map(|&i| (i, i)).collect();
    for s in &sigma {
        if let Some((i, j)) = s.as_orthogonal_pair() {
            if let (Some(&ci), Some(&cj)) = (class_of.get(&i), class_of.get(&j)) {
                let (lo, hi) = (ci.min(cj), ci.max(cj));
                for c in class_of.values_mut() {
                    if *c == hi {
                        *c = lo;
                    }
                }
            }
        }
    }
    let mut b_classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (&i, &c) in &class_of {
        b_classes.entry(c).or_default().push(i);
    }
    for (rep, members) in b_classes {
        fixed.push(Color { kind: ColorKind::B, anchors: members, functional: ctx.coroot_functional(rep) });
    }

    // augmentation axioms that do not involve A
    let mut aug_sigma1 = true;
    for &i in &halves {
        let in_lattice = ctx.root_in_lattice(&RootVector::simple(n, i)).is_some();
        if in_lattice || ctx.basis().iter().any(|w| w.0[i] % 2 != 0) {
            aug_sigma1 = false;
        }
    }
    let aug_sigma2 = sigma
        .iter()
        .filter_map(SphericalRoot::as_orthogonal_pair)
        .all(|(i, j)| ctx.coroot_functional(i) == ctx.coroot_functional(j));
    let aug_s = sp.iter().all(|&i| ctx.coroot_functional(i).is_zero());

    let partitions = identifications(&slots, IDENTIFICATION_CAP);
    let total = partitions.len();
    let mut out = Vec::new();
    for blocks in partitions {
        let a_colors: Vec<Functional> = blocks.iter().map(|b| slots[b[0]].functional.clone()).collect();
        let pairing: BTreeMap<usize, Vec<Q>> =
            a_colors.iter().enumerate().map(|(id, f)| (id, coords.iter().map(|c| f.eval_int(c)).collect())).collect();
        let mut verdicts = vec![(Axiom::Lattice, true)];
        verdicts.extend(check_system_axioms(rs, &sp, &sigma, &pairing).expect("well-formed pairing"));

        // (a2) on all of Z Gamma for the colors taking value 1 on alpha
        let mut aug_a2 = true;
        for (k, s) in sigma.iter().enumerate() {
            let Some(i) = s.as_simple() else { continue };
            let ids: Vec<usize> = (0..a_colors.len()).filter(|&id| pairing[&id][k] == Q::one()).collect();
            if ids.len() != 2 {
                aug_a2 = false;
                continue;
            }
            let sum = Functional(a_colors[ids[0]].0.iter().zip(&a_colors[ids[1]].0).map(|(x, y)| x + y).collect());
            if sum != ctx.coroot_functional(i) {
                aug_a2 = false;
            }
        }
        verdicts.push((Axiom::AugA1, true));
        verdicts.push((Axiom::AugA2, aug_a2));
        verdicts.push((Axiom::AugSigma1, aug_sigma1));
        verdicts.push((Axiom::AugSigma2, aug_sigma2));
        verdicts.push((Axiom::AugS, aug_s));

        let mut colors: Vec<Color> = blocks
            .iter()
            .zip(&a_colors)
            .map(|(b, f)| Color {
                kind: ColorKind::A,
                anchors: b.iter().map(|&m| slots[m].alpha).collect(),
                functional: f.clone(),
            })
            .collect();
        colors.extend(fixed.iter().cloned());

        let rays = (0..r).all(|j| {
            let positive = coords.iter().any(|c| c[j] > 0);
            let delta = Functional::unit(r, j);
            !positive || colors.iter().any(|d| d.functional.is_positive_multiple_of(&delta))
        });
        let dual_cone = colors.iter().all(|d| d.functional.in_dual_cone());
        verdicts.push((Axiom::Rays, rays));
        verdicts.push((Axiom::DualCone, dual_cone));

        out.push(SphericalSystemCheck {
            sp: sp.clone(),
            sigma: sigma.clone(),
            a_colors,
            colors: ColorSet { colors },
            verdicts,
            identifications: total,
        });
    }
    out
}

/// Whether `Sigma` is adapted to `Gamma`. Returns a passing system when one
/// exists, otherwise the first candidate examined.
pub fn is_adapted_subset(ctx: &WeightMonoidContext, sigma: &[SphericalRoot]) -> SphericalSystemCheck {
    let mut checks = identification_checks(ctx, sigma);
    match checks.iter().position(SphericalSystemCheck::holds) {
        Some(k) => checks.swap_remove(k),
        None => checks.swap_remove(0),
    }
}

/// The preimage candidate and its check when `Sigma` is N-adapted.
#[derive(Clone, Debug)]
pub struct NAdaptedWitness {
    pub tilde: Vec<SphericalRoot>,
    pub check: SphericalSystemCheck,
}

/// Whether `Sigma` is N-adapted: some `Sigma~` obtained by halving doubled
/// simple roots is adapted and doubles back to `Sigma`.
pub fn is_n_adapted_subset(ctx: &WeightMonoidContext, sigma: &[SphericalRoot]) -> Option<NAdaptedWitness> {
    let rs = ctx.root_system();
    let n = rs.rank();
    let sigma = dedup_sigma(sigma);
    let target: BTreeSet<RootVector> = sigma.iter().map(|s| s.vector.clone()).collect();
    let doubles: Vec<usize> = (0..sigma.len()).filter(|&k| sigma[k].as_double().is_some()).collect();
    let catalog = enumerate_sc_roots(rs);
    for mask in 0u64..(1u64 << doubles.len()) {
        let tilde: Vec<SphericalRoot> = sigma
            .iter()
            .enumerate()
            .map(|(k, s)| match doubles.iter().position(|&d| d == k) {
                Some(b) if mask & (1 << b) != 0 => {
                    let alpha = RootVector::simple(n, s.as_double().unwrap());
                    catalog.iter().find(|c| c.vector == alpha).expect("simple roots are in the catalog").clone()
                }
                _ => s.clone(),
            })
            .collect();
        let mut image = BTreeSet::new();
        let mut ok = true;
        for s in &tilde {
            match s.as_simple() {
                Some(i) => match ctx.a_set(i) {
                    Ok(a) if a.len() == 1 => {
                        image.insert(s.vector.scale(2));
                    }
                    Ok(_) => {
                        image.insert(s.vector.clone());
                    }
                    Err(_) => ok = false,
                },
                None => {
                    image.insert(s.vector.clone());
                }
            }
        }
        if !ok || image != target {
            continue;
        }
        let check = is_adapted_subset(ctx, &tilde);
        if check.holds() {
            return Some(NAdaptedWitness { tilde: dedup_sigma(&tilde), check });
        }
    }
    None
}

/// One N-adapted subset found by the enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedSubset {
    pub roots: Vec<SphericalRoot>,
    /// Inclusion-maximal among the subsets found: a candidate irreducible
    /// component of dimension `roots.len()`.
    pub maximal: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubsetEnumeration {
    pub subsets: Vec<AdaptedSubset>,
    pub examined: usize,
}

impl SubsetEnumeration {
    pub fn maximal(&self) -> impl Iterator<Item = &AdaptedSubset> {
        self.subsets.iter().filter(|s| s.maximal)
    }
}

fn finish(mut found: Vec<Vec<SphericalRoot>>, examined: usize) -> SubsetEnumeration {
    found.sort_by(|a, b| {
        a.len().cmp(&b.len()).then_with(|| {
            let va: Vec<_> = a.iter().map(|s| &s.vector).collect();
            let vb: Vec<_> = b.iter().map(|s| &s.vector).collect();
            va.cmp(&vb)
        })
    });
    let sets: Vec<BTreeSet<RootVector>> = found.iter().map(|s| s.iter().map(|x| x.vector.clone()).collect()).collect();
    let subsets = found
        .into_iter()
        .enumerate()
        .map(|(k, roots)| {
            let maximal = !sets.iter().any(|t| t.len() > sets[k].len() && sets[k].is_subset(t));
            AdaptedSubset { roots, maximal }
        })
        .collect();
    SubsetEnumeration { subsets, examined }
}

pub const DEFAULT_SUBSET_CAP: usize = 100_000;

/// All N-adapted sets of linearly independent catalog roots of size at most
/// `max_size` (clamped to `r`), with inclusion-maximal ones flagged.
///
/// Only roots lying in `Z Gamma` and compatible with `S^p(Gamma)` are
/// considered; both properties are necessary for membership.
pub fn enumerate_n_adapted_subsets(
    ctx: &WeightMonoidContext,
    max_size: usize,
    cap: usize,
) -> Result<SubsetEnumeration, AdaptedError> {
    let rs = ctx.root_system();
    let max_size = max_size.min(ctx.rank());
    let pool: Vec<SphericalRoot> = enumerate_sc_roots(rs)
        .into_iter()
        .filter(|s| ctx.root_in_lattice(&s.vector).is_some() && s.compatible_with_sp(rs, ctx.sp_gamma()))
        .collect();
    let mut found = Vec::new();
    let mut examined = 0usize;
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((chosen, next)) = stack.pop() {
        if examined >= cap {
            let partial = finish(found, examined);
            return Err(AdaptedError::SearchBudgetExceeded { cap, partial: Box::new(partial) });
        }
        examined += 1;
        let roots: Vec<SphericalRoot> = chosen.iter().map(|&k| pool[k].clone()).collect();
        if is_n_adapted_subset(ctx, &roots).is_some() {
            found.push(roots);
        }
        if chosen.len() == max_size {
            continue;
        }
        for k in (next..pool.len()).rev() {
            let mut vecs: Vec<Vec<Q>> =
                chosen.iter().map(|&m| pool[m].vector.0.iter().map(|&x| q(x)).collect()).collect();
            vecs.push(pool[k].vector.0.iter().map(|&x| q(x)).collect());
            if rank_of(&vecs) == vecs.len() {
                let mut grown = chosen.clone();
                grown.push(k);
                stack.push((grown, k + 1));
            }
        }
    }
    Ok(finish(found, examined))
}

/// Whether `target` is a nonnegative integer combination of `gens`.
pub fn in_monoid(gens: &[RootVector], target: &RootVector) -> bool {
    fn rec(gens: &[RootVector], rest: &RootVector) -> bool {
        if rest.0.iter().all(|&c| c == 0) {
            return true;
        }
        let Some((g, tail)) = gens.split_first() else { return false };
        let bound =
            g.0.iter()
                .zip(&rest.0)
                .filter(|(&gi, _)| gi > 0)
                .map(|(&gi, &ri)| if ri < 0 { -1 } else { ri / gi })
                .min()
                .unwrap_or(0);
        (0..=bound).any(|k| rec(tail, &rest.sub(&g.scale(k))))
    }
    if !target.is_nonnegative() || gens.iter().any(|g| !g.is_nonnegative() || g.0.iter().all(|&c| c == 0)) {
        return false;
    }
    rec(gens, target)
}

/// No catalog root outside `Sigma` lies in `N Sigma` and is N-adapted.
pub fn check_prop_cut(ctx: &WeightMonoidContext, sigma: &[SphericalRoot]) -> Result<bool, AdaptedError> {
    for s in sigma {
        if is_n_adapted_singleton(ctx, s).is_err() {
            return Err(AdaptedError::Precondition { tag: s.vector.tag() });
        }
    }
    let gens: Vec<RootVector> = sigma.iter().map(|s| s.vector.clone()).collect();
    for c in enumerate_sc_roots(ctx.root_system()) {
        if gens.contains(&c.vector) {
            continue;
        }
        if in_monoid(&gens, &c.vector) && is_n_adapted_singleton(ctx, &c).is_ok() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Weight;
    use crate::sphroots::find_in_catalog;

    fn ctx(group: &str, weights: &[&[i64]]) -> WeightMonoidContext {
        let rs = RootSystem::parse(group).unwrap();
        WeightMonoidContext::new(&rs, weights.iter().map(|w| Weight(w.to_vec())).collect()).unwrap()
    }

    fn root(c: &WeightMonoidContext, v: &[i64]) -> SphericalRoot {
        let cat = enumerate_sc_roots(c.root_system());
        find_in_catalog(&cat, &RootVector(v.to_vec())).unwrap().clone()
    }

    #[test]
    fn two_lines_singletons() {
        let c = ctx("A1xA1", &[&[2, 0], &[4, 2]]);
        assert_eq!(is_n_adapted_singleton(&c, &root(&c, &[1, 0])), Ok(()));
        assert_eq!(is_n_adapted_singleton(&c, &root(&c, &[0, 2])), Ok(()));
        assert_eq!(is_n_adapted_singleton(&c, &root(&c, &[0, 1])), Err(Condition::ASize));
        assert_eq!(is_n_adapted_singleton(&c, &root(&c, &[2, 0])), Err(Condition::ColorRays));
        assert_eq!(is_n_adapted_singleton(&c, &root(&c, &[1, 1])), Err(Condition::Orthogonal));
        assert_eq!(is_adapted_singleton(&c, &root(&c, &[0, 1])), Ok(()));
        let t = tangent_space(&c);
        assert_eq!(t.dimension, 2);
        assert_eq!(t.weight_vectors(), BTreeSet::from([RootVector(vec![1, 0]), RootVector(vec![0, 2])]));
    }

    #[test]
    fn sl2_singletons() {
        let c = ctx("A1", &[&[2]]);
        assert_eq!(is_adapted_singleton(&c, &root(&c, &[1])), Ok(()));
        assert_eq!(is_adapted_singleton(&c, &root(&c, &[2])), Err(Condition::Double));
        assert_eq!(is_n_adapted_singleton(&c, &root(&c, &[2])), Ok(()));
        assert_eq!(is_n_adapted_singleton(&c, &root(&c, &[1])), Err(Condition::ASize));
    }

    #[test]
    fn empty_basis_has_trivial_tangent_space() {
        let c = ctx("B3", &[]);
        assert_eq!(tangent_space(&c).dimension, 0);
        let e = enumerate_n_adapted_subsets(&c, 3, DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(e.subsets.len(), 1);
        assert!(e.subsets[0].roots.is_empty() && e.subsets[0].maximal);
    }

    #[test]
    fn system_axioms_basic() {
        let rs = RootSystem::parse("A2").unwrap();
        let cat = enumerate_sc_roots(&rs);
        let empty = check_system_axioms(&rs, &BTreeSet::new(), &[], &BTreeMap::new()).unwrap();
        assert!(empty.iter().all(|(_, ok)| *ok));
        // 2 alpha1 and alpha2: <alpha1^vee, alpha2> = -1 is odd
        let s = vec![
            find_in_catalog(&cat, &RootVector(vec![2, 0])).unwrap().clone(),
            find_in_catalog(&cat, &RootVector(vec![0, 1])).unwrap().clone(),
        ];
        let pairing = BTreeMap::from([(0, vec![q(-1), q(1)]), (1, vec![q(-1), q(1)])]);
        let v = check_system_axioms(&rs, &BTreeSet::new(), &s, &pairing).unwrap();
        assert!(v.contains(&(Axiom::Sigma1, false)));
        // the two colors of alpha2 sum to <alpha2^vee, 2 alpha1> = -2 and to 2
        assert!(v.contains(&(Axiom::A2, true)));
        let bad = BTreeMap::from([(0, vec![q(1)])]);
        assert!(check_system_axioms(&rs, &BTreeSet::new(), &s, &bad).is_err());
    }

    #[test]
    fn a2_requires_both_colors_at_one() {
        let rs = RootSystem::parse("A1").unwrap();
        let s = vec![enumerate_sc_roots(&rs)[0].clone()];
        let split = BTreeMap::from([(0, vec![q(1)]), (1, vec![q(1)])]);
        let v = check_system_axioms(&rs, &BTreeSet::new(), &s, &split).unwrap();
        assert!(v.iter().all(|(_, ok)| *ok));
        let lopsided = BTreeMap::from([(0, vec![q(2)]), (1, vec![q(0)])]);
        let v = check_system_axioms(&rs, &BTreeSet::new(), &s, &lopsided).unwrap();
        assert!(v.contains(&(Axiom::A1, false)) && v.contains(&(Axiom::A2, false)));
    }

    #[test]
    fn two_lines_subsets() {
        let c = ctx("A1xA1", &[&[2, 0], &[4, 2]]);
        assert!(is_adapted_subset(&c, &[]).holds());
        assert!(is_adapted_subset(&c, &[root(&c, &[1, 0])]).holds());
        let both = [root(&c, &[1, 0]), root(&c, &[0, 2])];
        assert!(is_n_adapted_subset(&c, &both).is_none());
        assert!(is_n_adapted_subset(&c, &[root(&c, &[0, 1])]).is_none());
        let w = is_n_adapted_subset(&c, &[root(&c, &[0, 2])]).unwrap();
        assert_eq!(w.tilde[0].vector, RootVector(vec![0, 1]));
        let e = enumerate_n_adapted_subsets(&c, 2, DEFAULT_SUBSET_CAP).unwrap();
        let max: Vec<Vec<RootVector>> =
            e.maximal().map(|s| s.roots.iter().map(|x| x.vector.clone()).collect()).collect();
        assert_eq!(max, vec![vec![RootVector(vec![0, 2])], vec![RootVector(vec![1, 0])]]);
    }

    #[test]
    fn sl2_subsets() {
        let c = ctx("A1", &[&[2]]);
        let w = is_n_adapted_subset(&c, &[root(&c, &[2])]).unwrap();
        assert_eq!(w.tilde[0].vector, RootVector(vec![1]));
        let e = enumerate_n_adapted_subsets(&c, 1, DEFAULT_SUBSET_CAP).unwrap();
        let max: Vec<_> = e.maximal().collect();
        assert_eq!(max.len(), 1);
        assert_eq!(max[0].roots[0].vector, RootVector(vec![2]));
    }

    #[test]
    fn subset_budget() {
        let c = ctx("A1xA1", &[&[2, 0], &[4, 2]]);
        match enumerate_n_adapted_subsets(&c, 2, 2) {
            Err(AdaptedError::SearchBudgetExceeded { cap, partial }) => {
                assert_eq!(cap, 2);
                assert_eq!(partial.examined, 2);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn prop_cut_examples() {
        let c = ctx("A1xA1", &[&[2, 0], &[4, 2]]);
        assert_eq!(check_prop_cut(&c, &[root(&c, &[1, 0])]), Ok(true));
        assert_eq!(check_prop_cut(&c, &[]), Ok(true));
        assert!(matches!(check_prop_cut(&c, &[root(&c, &[0, 1])]), Err(AdaptedError::Precondition { .. })));
    }

    #[test]
    fn monoid_membership() {
        let g = [RootVector(vec![1, 0]), RootVector(vec![1, 1])];
        assert!(in_monoid(&g, &RootVector(vec![3, 1])));
        assert!(!in_monoid(&g, &RootVector(vec![0, 1])));
        assert!(in_monoid(&[], &RootVector(vec![0, 0])));
    }
}
