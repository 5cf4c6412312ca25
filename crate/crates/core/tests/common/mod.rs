#![allow(dead_code)]

use affsph::oracle::weyl_dimension;
use affsph::sphroots::enumerate_sc_roots;
use affsph::{RootSystem, Weight, WeightMonoidContext};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const GROUPS: [&str; 10] = ["A1", "A1xA1", "A2", "A1xA1xA1", "A2xA1", "A3", "B2", "B3", "C3", "G2"];
pub const PER_GROUP: usize = 4;
pub const BATTERY_DIM_CAP: usize = 1000;
pub const SEED: u64 = 0x5eed_2024;

pub struct Case {
    pub group: &'static str,
    pub rs: RootSystem,
    pub ctx: WeightMonoidContext,
}

impl Case {
    pub fn label(&self) -> String {
        format!("{} {:?}", self.group, self.ctx.basis().iter().map(|w| w.0.clone()).collect::<Vec<_>>())
    }
}

pub fn two_lines() -> WeightMonoidContext {
    let rs = RootSystem::parse("A1xA1").unwrap();
    WeightMonoidContext::new(&rs, vec![Weight(vec![2, 0]), Weight(vec![4, 2])]).unwrap()
}

fn fits(rs: &RootSystem, w: &Weight) -> bool {
    weyl_dimension(rs, w).to_usize().is_some_and(|d| d <= BATTERY_DIM_CAP)
}

const CURATED: &[(&str, &[&[i64]])] = &[
    ("A1xA1", &[&[2, 0], &[4, 2]]),
    ("A1", &[&[2]]),
    ("A1xA1", &[&[1, 1]]),
    ("A2", &[&[2, 0], &[0, 2]]),
    ("A2", &[&[1, 0], &[0, 1]]),
    ("A2", &[&[1, 1]]),
    ("A1xA1xA1", &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
    ("A2xA1", &[&[1, 0, 1], &[0, 1, 1]]),
    ("A3", &[&[0, 1, 0]]),
    ("A3", &[&[1, 0, 1], &[0, 1, 0]]),
    ("A3", &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]),
    ("B2", &[&[1, 0], &[0, 2]]),
    ("B2", &[&[0, 1]]),
    ("B3", &[&[1, 0, 0]]),
    ("B3", &[&[0, 0, 1]]),
    ("C3", &[&[0, 1, 0]]),
    ("C3", &[&[1, 0, 0], &[0, 1, 0]]),
    ("G2", &[&[1, 0]]),
    ("G2", &[&[1, 0], &[0, 1]]),
];

fn sample_weight(rng: &mut ChaCha8Rng, rs: &RootSystem, roots: &[Vec<i64>]) -> Vec<i64> {
    let n = rs.rank();
    if !roots.is_empty() && rng.gen_bool(0.5) {
        return roots[rng.gen_range(0..roots.len())].clone();
    }
    (0..n).map(|_| rng.gen_range(0..=2)).collect()
}

/// Curated contexts plus seeded random ones over the groups of rank at most 3.
/// Half of the sampled weights are dominant weights of catalog roots, which
/// makes nonzero tangent spaces common.
pub fn battery() -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cases: Vec<Case> = CURATED
        .iter()
        .map(|&(group, basis)| {
            let rs = RootSystem::parse(group).unwrap();
            let ctx = WeightMonoidContext::new(&rs, basis.iter().map(|w| Weight(w.to_vec())).collect()).unwrap();
            Case { group: GROUPS.iter().find(|g| **g == group).unwrap(), rs, ctx }
        })
        .collect();
    for group in GROUPS {
        let rs = RootSystem::parse(group).unwrap();
        let n = rs.rank();
        let roots: Vec<Vec<i64>> = enumerate_sc_roots(&rs)
            .iter()
            .map(|s| rs.root_to_weight(&s.vector).0)
            .filter(|w| w.iter().all(|&c| c >= 0))
            .collect();
        let mut seen: Vec<Vec<Vec<i64>>> =
            CURATED.iter().filter(|(g, _)| *g == group).map(|(_, b)| b.iter().map(|w| w.to_vec()).collect()).collect();
        let target = seen.len() + PER_GROUP;
        let mut attempts = 0;
        while seen.len() < target && attempts < 10_000 {
            attempts += 1;
            let r = rng.gen_range(1..=n);
            let basis: Vec<Vec<i64>> = (0..r).map(|_| sample_weight(&mut rng, &rs, &roots)).collect();
            if seen.contains(&basis) || basis.iter().any(|w| w.iter().all(|&c| c == 0)) {
                continue;
            }
            let weights: Vec<Weight> = basis.iter().cloned().map(Weight).collect();
            if !weights.iter().all(|w| fits(&rs, w)) {
                continue;
            }
            let Ok(ctx) = WeightMonoidContext::new(&rs, weights) else { continue };
            seen.push(basis);
            cases.push(Case { group, rs: rs.clone(), ctx });
        }
    }
    cases
}

/// Cartan matrix `<alpha_i^vee, alpha_j>` of a simple type, written out by hand.
fn simple_cartan(letter: char, k: usize) -> Option<Vec<Vec<i64>>> {
    let mut c = vec![vec![0; k]; k];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |c: &mut Vec<Vec<i64>>| {
        for i in 0..k.saturating_sub(1) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    };
    match (letter, k) {
        ('A', _) if k >= 1 => chain(&mut c),
        ('B', _) if k >= 2 => {
            chain(&mut c);
            c[k - 1][k - 2] = -2;
        }
        ('C', _) if k >= 3 => {
            chain(&mut c);
            c[k - 2][k - 1] = -2;
        }
        ('G', 2) => {
            c[0][1] = -3;
            c[1][0] = -1;
        }
        _ => return None,
    }
    Some(c)
}

/// Catalog formulas in the Bourbaki numbering of the support.
fn table_formulas(letter: char, k: usize) -> Vec<Vec<i64>> {
    match (letter, k) {
        ('A', 1) => vec![vec![1], vec![2]],
        ('A', 3) => vec![vec![1, 1, 1], vec![1, 2, 1]],
        ('A', _) => vec![vec![1; k]],
        ('B', 3) => vec![vec![1; 3], vec![2; 3], vec![1, 2, 3]],
        ('B', _) => vec![vec![1; k], vec![2; k]],
        ('C', _) => {
            let mut v = vec![2; k];
            v[0] = 1;
            v[k - 1] = 1;
            vec![v]
        }
        ('G', 2) => vec![vec![4, 2], vec![1, 1]],
        _ => vec![],
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Decides membership in the catalog straight from the table, for types of rank at most 3.
pub fn brute_force_is_sc_root(rs: &RootSystem, v: &[i64]) -> bool {
    let support: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
    if support.is_empty() || v.iter().any(|&c| c < 0) {
        return false;
    }
    let k = support.len();
    let connected = {
        let mut reached = vec![support[0]];
        let mut grew = true;
        while grew {
            grew = false;
            for &j in &support {
                if !reached.contains(&j) && reached.iter().any(|&i| rs.cartan_entry(i, j) != 0) {
                    reached.push(j);
                    grew = true;
                }
            }
        }
        reached.len() == k
    };
    if !connected {
        return k == 2 && v[support[0]] == 1 && v[support[1]] == 1;
    }
    for letter in ['A', 'B', 'C', 'G'] {
        let Some(want) = simple_cartan(letter, k) else { continue };
        for p in permutations(&support) {
            let same = (0..k).all(|a| (0..k).all(|b| rs.cartan_entry(p[a], p[b]) == want[a][b]));
            if !same {
                continue;
            }
            let coeffs: Vec<i64> = p.iter().map(|&i| v[i]).collect();
            if table_formulas(letter, k).contains(&coeffs) {
                return true;
            }
        }
    }
    false
}

/// All vectors with coefficients in `0..=4` that pass the table.
pub fn brute_force_catalog(rs: &RootSystem) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let mut out = Vec::new();
    let mut v = vec![0i64; n];
    loop {
        if brute_force_is_sc_root(rs, &v) {
            out.push(v.clone());
        }
        let mut i = 0;
        while i < n && v[i] == 4 {
            v[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        v[i] += 1;
    }
    out.sort();
    out
}
