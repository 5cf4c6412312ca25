//! Root systems of semisimple groups given by Dynkin type.
//!
//! Simple roots carry one global index `0..n` in component order, and within
//! each simple component they follow the Bourbaki numbering. Weights are
//! written in the basis of fundamental weights (simply connected group), so
//! the weight lattice is exactly `Z^n`.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("cannot parse Dynkin token `{token}` (expected a type letter A-G followed by a rank)")]
    Parse { token: String },
    #[error("invalid rank in `{token}`: {reason}")]
    Rank { token: String, reason: &'static str },
    #[error("empty Dynkin type string")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl DynkinType {
    pub const ALL: [DynkinType; 7] =
        [DynkinType::A, DynkinType::B, DynkinType::C, DynkinType::D, DynkinType::E, DynkinType::F, DynkinType::G];

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => DynkinType::A,
            'B' => DynkinType::B,
            'C' => DynkinType::C,
            'D' => DynkinType::D,
            'E' => DynkinType::E,
            'F' => DynkinType::F,
            'G' => DynkinType::G,
            _ => return None,
        })
    }

    /// Checks the rank constraints of the classification.
    pub fn check_rank(self, rank: usize) -> Result<(), &'static str> {
        let ok = match self {
            DynkinType::A => rank >= 1,
            DynkinType::B => rank >= 2,
            DynkinType::C => rank >= 3,
            DynkinType::D => rank >= 4,
            DynkinType::E => (6..=8).contains(&rank),
            DynkinType::F => rank == 4,
            DynkinType::G => rank == 2,
        };
        if ok {
            return Ok(());
        }
        Err(match self {
            DynkinType::A => "type A needs rank >= 1",
            DynkinType::B => "type B needs rank >= 2",
            DynkinType::C => "type C needs rank >= 3",
            DynkinType::D => "type D needs rank >= 4",
            DynkinType::E => "type E needs rank 6, 7 or 8",
            DynkinType::F => "type F needs rank 4",
            DynkinType::G => "type G needs rank 2",
        })
    }

    /// Number of positive roots of the simple system of this type.
    pub fn positive_root_count(self, rank: usize) -> usize {
        match self {
            DynkinType::A => rank * (rank + 1) / 2,
            DynkinType::B | DynkinType::C => rank * rank,
            DynkinType::D => rank * (rank - 1),
            DynkinType::E => match rank {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            DynkinType::F => 24,
            DynkinType::G => 6,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Cartan matrix `a_ij = <alpha_i^vee, alpha_j>` of a simple type in Bourbaki numbering.
pub fn bourbaki_cartan(kind: DynkinType, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match kind {
        DynkinType::A | DynkinType::B | DynkinType::C => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        DynkinType::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        DynkinType::E => {
            link(0, 2);
            link(2, 3);
            link(1, 3);
            for i in 3..n - 1 {
                link(i, i + 1);
            }
        }
        DynkinType::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        DynkinType::G => link(0, 1),
    }
    match kind {
        // alpha_n short
        DynkinType::B => a[n - 1][n - 2] = -2,
        // alpha_n long
        DynkinType::C => a[n - 2][n - 1] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        DynkinType::F => a[2][1] = -2,
        // alpha_1 short
        DynkinType::G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// Coefficients of an element of the root lattice in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(n: usize) -> Self {
        RootVector(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> RootVector {
        RootVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Index of the simple root when `self` is one.
    pub fn as_simple(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// Human-readable tag such as `a1+2*a2+a3` (1-based global indices).
    pub fn tag(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { format!("a{}", i + 1) } else { format!("{}*a{}", c, i + 1) })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

/// A weight in fundamental-weight coordinates: `coords[i] = <alpha_i^vee, lambda>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub kind: DynkinType,
    pub rank: usize,
    /// Global index of this component's Bourbaki `alpha_1`.
    pub offset: usize,
}

impl Component {
    pub fn indices(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.rank
    }
}

/// Cartan data of a product of simple Dynkin types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    components: Vec<Component>,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive: Vec<RootVector>,
}

impl RootSystem {
    /// Parses strings such as `"A1xA1"`, `"B3"` or `"A2 x G2"`.
    pub fn parse(type_string: &str) -> Result<Self, RootSystemError> {
        let mut parts = Vec::new();
        for token in type_string.split(|c: char| c == 'x' || c == 'X' || c == '*' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let mut chars = token.chars();
            let letter = chars.next().and_then(DynkinType::from_letter);
            let rank: Option<usize> = chars.as_str().parse().ok();
            let (Some(kind), Some(rank)) = (letter, rank) else {
                return Err(RootSystemError::Parse { token: token.to_string() });
            };
            kind.check_rank(rank).map_err(|reason| RootSystemError::Rank { token: token.to_string(), reason })?;
            parts.push((kind, rank));
        }
        if parts.is_empty() {
            return Err(RootSystemError::Empty);
        }
        Ok(Self::from_components(&parts))
    }

    /// Builds the product of the given (already validated) simple types.
    pub fn from_components(parts: &[(DynkinType, usize)]) -> Self {
        let n: usize = parts.iter().map(|p| p.1).sum();
        let mut cartan = vec![vec![0i64; n]; n];
        let mut components = Vec::new();
        let mut offset = 0;
        for &(kind, rank) in parts {
            let block = bourbaki_cartan(kind, rank);
            for i in 0..rank {
                for j in 0..rank {
                    cartan[offset + i][offset + j] = block[i][j];
                }
            }
            components.push(Component { kind, rank, offset });
            offset += rank;
        }
        let symmetrizer = symmetrizer_of(&cartan);
        let mut rs = RootSystem { components, cartan, symmetrizer, positive: Vec::new() };
        rs.positive = rs.close_positive_roots();
        rs
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Type string in the parse syntax, e.g. `A1xA1`.
    pub fn type_string(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(|c| format!("{}{}", c.kind, c.rank)).collect();
        parts.join("x")
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.components.iter().position(|c| c.indices().contains(&i)).expect("index out of range")
    }

    /// All positive roots, sorted by height and then lexicographically.
    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn is_positive_root(&self, v: &RootVector) -> bool {
        self.positive.binary_search_by(|r| root_order(r, v)).is_ok()
    }

    pub fn is_root(&self, v: &RootVector) -> bool {
        self.is_positive_root(v) || self.is_positive_root(&v.scale(-1))
    }

    pub fn positive_root_index(&self, v: &RootVector) -> Option<usize> {
        self.positive.binary_search_by(|r| root_order(r, v)).ok()
    }

    /// `<alpha_i^vee, v> = sum_j a_ij v_j`.
    pub fn root_pairing(&self, i: usize, v: &RootVector) -> i64 {
        self.cartan[i].iter().zip(&v.0).map(|(a, b)| a * b).sum()
    }

    /// Fundamental-weight coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, v: &RootVector) -> Weight {
        Weight((0..self.rank()).map(|i| self.root_pairing(i, v)).collect())
    }

    /// `(alpha_i, alpha_j) = d_i a_ij`, symmetric.
    pub fn root_inner(&self, a: &RootVector, b: &RootVector) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a.0[i] * b.0[j] * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `(beta, mu)` for a root-lattice element and a weight: `sum_i b_i d_i mu_i`.
    pub fn root_weight_inner(&self, beta: &RootVector, mu: &Weight) -> i64 {
        beta.0.iter().zip(&self.symmetrizer).zip(&mu.0).map(|((b, d), m)| b * d * m).sum()
    }

    /// `<beta^vee, mu>` for a root `beta`.
    pub fn coroot_pairing(&self, beta: &RootVector, mu: &Weight) -> i64 {
        let num = 2 * self.root_weight_inner(beta, mu);
        let den = self.root_inner(beta, beta);
        assert!(den > 0 && num % den == 0, "coroot pairing of a non-root or non-integral weight");
        num / den
    }

    /// Two simple roots are joined in the Dynkin diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    fn close_positive_roots(&self) -> Vec<RootVector> {
        let n = self.rank();
        let mut known: HashSet<RootVector> = HashSet::new();
        let mut layer: Vec<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
        let mut all = Vec::new();
        known.extend(layer.iter().cloned());
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let alpha = RootVector::simple(n, i);
                    // length of the alpha_i-string below beta
                    let mut p = 0;
                    let mut cur = beta.sub(&alpha);
                    while known.contains(&cur) {
                        p += 1;
                        cur = cur.sub(&alpha);
                    }
                    let q = p - self.root_pairing(i, beta);
                    if q > 0 {
                        let up = beta.add(&alpha);
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.append(&mut layer);
            layer = next;
        }
        all.sort_by(root_order);
        all
    }

    /// Connected components of the induced Dynkin subdiagram on `subset`,
    /// each with its type and every Bourbaki labeling.
    pub fn classify_subdiagram(&self, subset: &BTreeSet<usize>) -> Vec<SubdiagramComponent> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in subset {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(i) = queue.pop_front() {
                comp.push(i);
                for &j in subset {
                    if self.adjacent(i, j) && seen.insert(j) {
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(self.classify_connected(&comp));
        }
        out
    }

    fn classify_connected(&self, nodes: &[usize]) -> SubdiagramComponent {
        let k = nodes.len();
        for kind in DynkinType::ALL {
            if kind.check_rank(k).is_err() {
                continue;
            }
            let model = bourbaki_cartan(kind, k);
            let labelings = self.labelings(nodes, &model);
            if !labelings.is_empty() {
                return SubdiagramComponent { kind, rank: k, labelings };
            }
        }
        unreachable!("induced subdiagram on {nodes:?} is not of finite type")
    }

    /// All bijections `label -> node` carrying `model` onto the induced Cartan submatrix.
    fn labelings(&self, nodes: &[usize], model: &[Vec<i64>]) -> Vec<Vec<usize>> {
        let k = nodes.len();
        // Visit labels in breadth-first order of the model diagram so every label
        // after the first has an already placed neighbour.
        let mut order = vec![0usize];
        let mut parent = vec![usize::MAX; k];
        let mut placed = vec![false; k];
        placed[0] = true;
        let mut head = 0;
        while head < order.len() {
            let a = order[head];
            head += 1;
            for b in 0..k {
                if !placed[b] && model[a][b] != 0 {
                    placed[b] = true;
                    parent[b] = a;
                    order.push(b);
                }
            }
        }
        let mut results = Vec::new();
        let mut assign = vec![usize::MAX; k];
        let mut used = vec![false; k];
        self.extend_labeling(nodes, model, &order, &parent, 0, &mut assign, &mut used, &mut results);
        results
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_labeling(
        &self,
        nodes: &[usize],
        model: &[Vec<i64>],
        order: &[usize],
        parent: &[usize],
        depth: usize,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        results: &mut Vec<Vec<usize>>,
    ) {
        if depth == order.len() {
            results.push(assign.iter().map(|&p| nodes[p]).collect());
            return;
        }
        let label = order[depth];
        for pos in 0..nodes.len() {
            if used[pos] {
                continue;
            }
            if depth > 0 && !self.adjacent(nodes[assign[parent[label]]], nodes[pos]) {
                continue;
            }
            let consistent = order[..depth].iter().all(|&other| {
                let node = nodes[assign[other]];
                self.cartan[nodes[pos]][node] == model[label][other]
                    && self.cartan[node][nodes[pos]] == model[other][label]
            }) && self.cartan[nodes[pos]][nodes[pos]] == model[label][label];
            if !consistent {
                continue;
            }
            assign[label] = pos;
            used[pos] = true;
            self.extend_labeling(nodes, model, order, parent, depth + 1, assign, used, results);
            used[pos] = false;
            assign[label] = usize::MAX;
        }
    }
}

fn root_order(a: &RootVector, b: &RootVector) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0))
}

/// One connected piece of an induced subdiagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdiagramComponent {
    pub kind: DynkinType,
    pub rank: usize,
    /// `labelings[l][k]` is the global index carrying Bourbaki label `k + 1`.
    pub labelings: Vec<Vec<usize>>,
}

fn symmetrizer_of(cartan: &[Vec<i64>]) -> Vec<i64> {
    use num_integer::Integer;
    let n = cartan.len();
    // rational d_i as (num, den)
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut queue = VecDeque::from([start]);
        let mut members = vec![start];
        while let Some(i) = queue.pop_front() {
            let (ni, di) = d[i].unwrap();
            for j in 0..n {
                if j != i && cartan[i][j] != 0 && d[j].is_none() {
                    // d_j a_ji = d_i a_ij
                    let num = ni * cartan[i][j];
                    let den = di * cartan[j][i];
                    let g = num.gcd(&den);
                    let (mut num, mut den) = (num / g, den / g);
                    if den < 0 {
                        num = -num;
                        den = -den;
                    }
                    d[j] = Some((num, den));
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        let l = members.iter().fold(1i64, |acc, &m| acc.lcm(&d[m].unwrap().1));
        let ints: Vec<i64> = members.iter().map(|&m| d[m].unwrap().0 * (l / d[m].unwrap().1)).collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&m, &x) in members.iter().zip(&ints) {
            d[m] = Some((x / g, 1));
        }
    }
    d.into_iter().map(|x| x.unwrap().0).collect()
}
