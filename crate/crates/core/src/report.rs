//! Requests and reports for the command line front end.

use crate::adapted::{
    enumerate_n_adapted_subsets, is_adapted_singleton, is_n_adapted_singleton, tangent_space, AdaptedError, Condition,
    DEFAULT_SUBSET_CAP,
};
use crate::linalg::fmt_q;
use crate::oracle::{oracle_tangent, ChevalleyAlgebra, OracleError, DEFAULT_DIM_CAP};
use crate::rootsys::{RootSystem, RootSystemError, RootVector, Weight};
use crate::sphroots::{enumerate_sc_roots, RootType};
use crate::wmonoid::{WeightMonoidContext, WeightMonoidError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRequest {
    pub group: String,
    pub weights: Vec<Vec<i64>>,
    pub run_oracle: bool,
    pub enumerate_subsets: bool,
    /// Defaults to the rank of the monoid.
    pub max_subset_size: Option<usize>,
    pub subset_cap: usize,
    pub output_format: OutputFormat,
    pub irrep_dim_cap: usize,
    /// An empty basis is rejected unless this is set.
    pub allow_empty: bool,
}

impl AnalysisRequest {
    pub fn new(group: &str, weights: Vec<Vec<i64>>) -> Self {
        AnalysisRequest {
            group: group.to_string(),
            weights,
            run_oracle: false,
            enumerate_subsets: false,
            max_subset_size: None,
            subset_cap: DEFAULT_SUBSET_CAP,
            output_format: OutputFormat::Text,
            irrep_dim_cap: DEFAULT_DIM_CAP,
            allow_empty: false,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("group: {0}")]
    Group(#[from] RootSystemError),
    #[error("weights: {0}")]
    Weights(#[from] WeightMonoidError),
    #[error("weights: could not parse {input:?} as a JSON list of integer lists ({reason})")]
    WeightSyntax { input: String, reason: String },
    #[error("weights: the basis is empty (pass \"[]\" explicitly to allow this)")]
    EmptyBasis,
    #[error("oracle: {0}")]
    Oracle(#[from] OracleError),
}

impl ReportError {
    pub fn kind(&self) -> &'static str {
        match self {
            ReportError::Group(_) => "group",
            ReportError::Weights(_) => "weights",
            ReportError::WeightSyntax { .. } => "weight_syntax",
            ReportError::EmptyBasis => "empty_basis",
            ReportError::Oracle(_) => "oracle",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "error": { "kind": self.kind(), "message": self.to_string() }
        })
    }
}

/// Parses `"[[2,0],[4,2]]"`.
pub fn parse_weights(input: &str) -> Result<Vec<Vec<i64>>, ReportError> {
    serde_json::from_str(input)
        .map_err(|e| ReportError::WeightSyntax { input: input.to_string(), reason: e.to_string() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestEcho {
    pub group: String,
    pub weights: Vec<Vec<i64>>,
    pub oracle: bool,
    pub subsets: bool,
    pub max_subset_size: Option<usize>,
    pub irrep_dim_cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub vector: Vec<i64>,
    pub tag: String,
    pub label: String,
    pub table_type: RootType,
    pub adapted: bool,
    pub adapted_failure: Option<Condition>,
    pub n_adapted: bool,
    pub n_adapted_failure: Option<Condition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentSection {
    pub dimension: usize,
    pub weights: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetEntry {
    pub roots: Vec<String>,
    pub size: usize,
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetSection {
    pub max_size: usize,
    pub examined: usize,
    pub budget_exceeded: bool,
    pub subsets: Vec<SubsetEntry>,
    /// Inclusion-maximal N-adapted sets: candidate irreducible components.
    pub candidate_components: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSection {
    pub weights: Vec<String>,
    pub dimensions: Vec<(String, usize)>,
    pub multiplicity_violations: Vec<String>,
    pub agreement: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub request: RequestEcho,
    pub rank: usize,
    pub monoid_rank: usize,
    pub sp_gamma: Vec<String>,
    /// The dual basis, as values on `F`.
    pub e_gamma: Vec<Vec<String>>,
    pub catalog: Vec<CatalogEntry>,
    pub tangent: TangentSection,
    pub subsets: Option<SubsetSection>,
    pub oracle: Option<OracleSection>,
}

impl AnalysisReport {
    /// The oracle ran and disagreed with the combinatorial answer.
    pub fn oracle_disagrees(&self) -> bool {
        self.oracle.as_ref().is_some_and(|o| !o.agreement)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "group: {} (rank {})", self.request.group, self.rank);
        let _ = writeln!(s, "weights: {:?}", self.request.weights);
        let _ = writeln!(s, "S^p(Gamma): {{{}}}", self.sp_gamma.join(", "));
        let e: Vec<String> = self.e_gamma.iter().map(|v| format!("({})", v.join(", "))).collect();
        let _ = writeln!(s, "E(Gamma): {}", e.join(" "));
        let _ = writeln!(s, "catalog ({} roots):", self.catalog.len());
        for c in &self.catalog {
            let a = match c.adapted_failure {
                None => "adapted".to_string(),
                Some(f) => format!("not adapted {f}"),
            };
            let na = match c.n_adapted_failure {
                None => "N-adapted".to_string(),
                Some(f) => format!("not N-adapted {f}"),
            };
            let _ = writeln!(s, "  {:<28} {:?}  {}; {}", c.label, c.vector, a, na);
        }
        let _ = writeln!(s, "tangent dimension: {}", self.tangent.dimension);
        let _ = writeln!(s, "tangent weights: {{{}}}", self.tangent.weights.join(", "));
        if let Some(sub) = &self.subsets {
            let _ = writeln!(
                s,
                "N-adapted subsets (size <= {}, {} examined{}):",
                sub.max_size,
                sub.examined,
                if sub.budget_exceeded { ", budget exceeded, partial" } else { "" }
            );
            for e in &sub.subsets {
                let _ = writeln!(
                    s,
                    "  {{{}}}{}",
                    e.roots.join(", "),
                    if e.maximal { "  [maximal: candidate component]" } else { "" }
                );
            }
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(s, "oracle weights: {{{}}}", o.weights.join(", "));
            if !o.multiplicity_violations.is_empty() {
                let _ = writeln!(s, "oracle multiplicity > 1 at: {{{}}}", o.multiplicity_violations.join(", "));
            }
            let _ = writeln!(s, "oracle agreement: {}", o.agreement);
        }
        s
    }
}

fn tags(vs: &BTreeSet<RootVector>) -> Vec<String> {
    vs.iter().map(RootVector::tag).collect()
}

pub fn run(req: &AnalysisRequest) -> Result<AnalysisReport, ReportError> {
    let rs = RootSystem::parse(&req.group)?;
    if req.weights.is_empty() && !req.allow_empty {
        return Err(ReportError::EmptyBasis);
    }
    let ctx = WeightMonoidContext::new(&rs, req.weights.iter().map(|w| Weight(w.clone())).collect())?;
    let catalog = enumerate_sc_roots(&rs)
        .into_iter()
        .map(|sigma| {
            let a = is_adapted_singleton(&ctx, &sigma).err();
            let na = is_n_adapted_singleton(&ctx, &sigma).err();
            CatalogEntry {
                vector: sigma.vector.0.clone(),
                tag: sigma.vector.tag(),
                label: sigma.display_tag(),
                table_type: sigma.table_type,
                adapted: a.is_none(),
                adapted_failure: a,
                n_adapted: na.is_none(),
                n_adapted_failure: na,
            }
        })
        .collect();
    let tangent = tangent_space(&ctx);
    let tangent_set = tangent.weight_vectors();

    let subsets = if req.enumerate_subsets {
        let max_size = req.max_subset_size.unwrap_or(ctx.rank()).min(ctx.rank());
        let (found, exceeded) = match enumerate_n_adapted_subsets(&ctx, max_size, req.subset_cap) {
            Ok(e) => (e, false),
            Err(AdaptedError::SearchBudgetExceeded { partial, .. }) => (*partial, true),
            Err(other) => unreachable!("enumeration only fails on budget: {other}"),
        };
        let entries: Vec<SubsetEntry> = found
            .subsets
            .iter()
            .map(|s| SubsetEntry {
                roots: s.roots.iter().map(|r| r.vector.tag()).collect(),
                size: s.roots.len(),
                maximal: s.maximal,
            })
            .collect();
        Some(SubsetSection {
            max_size,
            examined: found.examined,
            budget_exceeded: exceeded,
            candidate_components: entries.iter().filter(|e| e.maximal).map(|e| e.roots.clone()).collect(),
            subsets: entries,
        })
    } else {
        None
    };

    let oracle = if req.run_oracle {
        let alg = ChevalleyAlgebra::new(&rs)?;
        let t = oracle_tangent(&alg, &ctx, req.irrep_dim_cap)?;
        let weights = t.weights();
        Some(OracleSection {
            weights: tags(&weights),
            dimensions: t.dimensions.iter().map(|(g, &d)| (g.tag(), d)).collect(),
            multiplicity_violations: t.multiplicity_violations().iter().map(RootVector::tag).collect(),
            agreement: weights == tangent_set && t.multiplicity_violations().is_empty(),
        })
    } else {
        None
    };

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        request: RequestEcho {
            group: req.group.clone(),
            weights: req.weights.clone(),
            oracle: req.run_oracle,
            subsets: req.enumerate_subsets,
            max_subset_size: req.max_subset_size,
            irrep_dim_cap: req.irrep_dim_cap,
        },
        rank: rs.rank(),
        monoid_rank: ctx.rank(),
        sp_gamma: ctx.sp_gamma().iter().map(|&i| format!("a{}", i + 1)).collect(),
        e_gamma: ctx.e_gamma().iter().map(|f| f.values().iter().map(fmt_q).collect()).collect(),
        catalog,
        tangent: TangentSection { dimension: tangent.dimension, weights: tags(&tangent_set) },
        subsets,
        oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_lines_json() {
        let req = AnalysisRequest::new("A1xA1", vec![vec![2, 0], vec![4, 2]]);
        let r = run(&req).unwrap();
        assert_eq!(r.tangent.dimension, 2);
        assert_eq!(r.tangent.weights, vec!["2*a2".to_string(), "a1".to_string()]);
        let json = r.to_json();
        assert!(json.contains("\"schema_version\": 1"));
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.e_gamma, vec![vec!["1/1".to_string(), "0/1".to_string()], vec!["0/1".into(), "1/1".into()]]);
    }

    #[test]
    fn empty_basis_needs_permission() {
        let mut req = AnalysisRequest::new("B3", vec![]);
        assert_eq!(run(&req).unwrap_err(), ReportError::EmptyBasis);
        req.allow_empty = true;
        assert_eq!(run(&req).unwrap().tangent.dimension, 0);
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(run(&AnalysisRequest::new("D3", vec![vec![1, 0, 0]])), Err(ReportError::Group(_))));
        assert!(matches!(
            run(&AnalysisRequest::new("A2", vec![vec![1, -1]])),
            Err(ReportError::Weights(WeightMonoidError::NonDominantWeight { index: 0 }))
        ));
        assert!(parse_weights("[[1,2],").is_err());
        assert_eq!(parse_weights("[]").unwrap(), Vec::<Vec<i64>>::new());
    }
}
