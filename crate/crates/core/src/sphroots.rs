//! The catalog of spherically closed spherical roots of a semisimple group
//! and their compatibility with a set of simple roots `S^p`.

use crate::rootsys::{DynkinType, RootSystem, RootVector};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Which catalog row produced a spherical root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    /// `alpha`
    #[serde(rename = "A1")]
    A1,
    /// `2 alpha`
    #[serde(rename = "2xA1")]
    TwoA1,
    /// `alpha + alpha'` with orthogonal simple roots
    #[serde(rename = "A1xA1")]
    A1xA1,
    #[serde(rename = "An-sum")]
    ASum,
    /// `alpha_1 + 2 alpha_2 + alpha_3` on `A3`
    #[serde(rename = "A3-middle")]
    A3Middle,
    #[serde(rename = "Bn-sum")]
    BSum,
    #[serde(rename = "Bn-double")]
    BDouble,
    /// `alpha_1 + 2 alpha_2 + 3 alpha_3` on `B3`
    #[serde(rename = "B3-special")]
    B3Special,
    #[serde(rename = "Cn")]
    C,
    #[serde(rename = "Dn")]
    D,
    #[serde(rename = "F4")]
    F4,
    /// `4 alpha_1 + 2 alpha_2`
    #[serde(rename = "G2-double")]
    G2Double,
    /// `alpha_1 + alpha_2`
    #[serde(rename = "G2-sum")]
    G2Sum,
}

impl RootType {
    pub fn name(self) -> &'static str {
        match self {
            RootType::A1 => "A1",
            RootType::TwoA1 => "2xA1",
            RootType::A1xA1 => "A1xA1",
            RootType::ASum => "An-sum",
            RootType::A3Middle => "A3-middle",
            RootType::BSum => "Bn-sum",
            RootType::BDouble => "Bn-double",
            RootType::B3Special => "B3-special",
            RootType::C => "Cn",
            RootType::D => "Dn",
            RootType::F4 => "F4",
            RootType::G2Double => "G2-double",
            RootType::G2Sum => "G2-sum",
        }
    }

    /// Dynkin type of the support, e.g. `A3` or `A1xA1`.
    pub fn support_type(self, support_size: usize) -> String {
        match self {
            RootType::A1 | RootType::TwoA1 => "A1".into(),
            RootType::A1xA1 => "A1xA1".into(),
            RootType::ASum | RootType::A3Middle => format!("A{support_size}"),
            RootType::BSum | RootType::BDouble | RootType::B3Special => format!("B{support_size}"),
            RootType::C => format!("C{support_size}"),
            RootType::D => format!("D{support_size}"),
            RootType::F4 => "F4".into(),
            RootType::G2Double | RootType::G2Sum => "G2".into(),
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An element of the catalog together with how it was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalRoot {
    pub vector: RootVector,
    pub table_type: RootType,
    pub support: BTreeSet<usize>,
    /// Global index of each Bourbaki label of the support (for `A1xA1`, the
    /// two orthogonal simple roots in increasing order).
    pub labeling: Vec<usize>,
}

impl SphericalRoot {
    /// `a1+2*a2+a3 (A3)`
    pub fn display_tag(&self) -> String {
        format!("{} ({})", self.vector.tag(), self.table_type.support_type(self.support.len()))
    }

    /// The simple root when `self = alpha`.
    pub fn as_simple(&self) -> Option<usize> {
        (self.table_type == RootType::A1).then(|| self.labeling[0])
    }

    /// The simple root when `self = 2 alpha`.
    pub fn as_double(&self) -> Option<usize> {
        (self.table_type == RootType::TwoA1).then(|| self.labeling[0])
    }

    /// The two orthogonal simple roots when `self = alpha + alpha'`.
    pub fn as_orthogonal_pair(&self) -> Option<(usize, usize)> {
        (self.table_type == RootType::A1xA1).then(|| (self.labeling[0], self.labeling[1]))
    }

    /// Compatibility with `S^p`: a sandwich condition between the simple roots
    /// of the support orthogonal to `self` and all simple roots orthogonal to it.
    pub fn compatible_with_sp(&self, rs: &RootSystem, sp: &BTreeSet<usize>) -> bool {
        let orth: BTreeSet<usize> = (0..rs.rank()).filter(|&i| rs.root_pairing(i, &self.vector) == 0).collect();
        let mut lower: BTreeSet<usize> = self.support.intersection(&orth).copied().collect();
        let mut upper = orth;
        match self.table_type {
            RootType::BSum => {
                let last = *self.labeling.last().unwrap();
                lower.remove(&last);
                upper.remove(&last);
            }
            RootType::C => {
                lower.remove(&self.labeling[0]);
            }
            _ => {}
        }
        lower.is_subset(sp) && sp.is_subset(&upper)
    }
}

/// The vectors a catalog row prescribes for a support of the given type under
/// one Bourbaki labeling.
fn table_rows(kind: DynkinType, k: usize, labeling: &[usize], n: usize) -> Vec<(RootType, RootVector)> {
    let with = |coeffs: &[i64]| {
        let mut v = vec![0i64; n];
        for (&node, &c) in labeling.iter().zip(coeffs) {
            v[node] = c;
        }
        RootVector(v)
    };
    let mut out = Vec::new();
    match (kind, k) {
        (DynkinType::A, 1) => {
            out.push((RootType::A1, with(&[1])));
            out.push((RootType::TwoA1, with(&[2])));
        }
        (DynkinType::A, _) => {
            out.push((RootType::ASum, with(&vec![1; k])));
            if k == 3 {
                out.push((RootType::A3Middle, with(&[1, 2, 1])));
            }
        }
        (DynkinType::B, _) => {
            out.push((RootType::BSum, with(&vec![1; k])));
            out.push((RootType::BDouble, with(&vec![2; k])));
            if k == 3 {
                out.push((RootType::B3Special, with(&[1, 2, 3])));
            }
        }
        (DynkinType::C, _) => {
            let mut c = vec![2; k];
            c[0] = 1;
            c[k - 1] = 1;
            out.push((RootType::C, with(&c)));
        }
        (DynkinType::D, _) => {
            let mut c = vec![2; k];
            c[k - 2] = 1;
            c[k - 1] = 1;
            out.push((RootType::D, with(&c)));
        }
        (DynkinType::F, _) => out.push((RootType::F4, with(&[1, 2, 3, 2]))),
        (DynkinType::G, _) => {
            out.push((RootType::G2Double, with(&[4, 2])));
            out.push((RootType::G2Sum, with(&[1, 1])));
        }
        (DynkinType::E, _) => {}
    }
    out
}

fn connected_subsets(rs: &RootSystem) -> Vec<BTreeSet<usize>> {
    let n = rs.rank();
    assert!(n <= 64, "rank above 64 is not supported");
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut frontier: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    seen.extend(frontier.iter().copied());
    while let Some(mask) = frontier.pop() {
        for i in 0..n {
            if mask & (1 << i) != 0 {
                continue;
            }
            let touches = (0..n).any(|j| mask & (1 << j) != 0 && rs.adjacent(i, j));
            let grown = mask | (1 << i);
            if touches && seen.insert(grown) {
                frontier.push(grown);
            }
        }
    }
    seen.into_iter().map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect()).collect()
}

/// All spherically closed spherical roots of `rs`, sorted by vector.
pub fn enumerate_sc_roots(rs: &RootSystem) -> Vec<SphericalRoot> {
    let n = rs.rank();
    let mut found: BTreeMap<RootVector, SphericalRoot> = BTreeMap::new();
    for subset in connected_subsets(rs) {
        let parts = rs.classify_subdiagram(&subset);
        debug_assert_eq!(parts.len(), 1);
        let part = &parts[0];
        for labeling in &part.labelings {
            for (table_type, vector) in table_rows(part.kind, part.rank, labeling, n) {
                found.entry(vector.clone()).or_insert_with(|| SphericalRoot {
                    vector,
                    table_type,
                    support: subset.clone(),
                    labeling: labeling.clone(),
                });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if rs.cartan_entry(i, j) == 0 {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = 1;
                let vector = RootVector(v);
                found.entry(vector.clone()).or_insert_with(|| SphericalRoot {
                    vector,
                    table_type: RootType::A1xA1,
                    support: BTreeSet::from([i, j]),
                    labeling: vec![i, j],
                });
            }
        }
    }
    found.into_values().collect()
}

/// Looks a vector up in a catalog.
pub fn find_in_catalog<'a>(catalog: &'a [SphericalRoot], v: &RootVector) -> Option<&'a SphericalRoot> {
    catalog.iter().find(|s| &s.vector == v)
}
