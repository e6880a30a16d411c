//! Corpus-wide audit of the face-counting criteria against computed vanishing.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::FieldSpec;
use crate::complex::SimplicialComplex;
use crate::corpus::{generate, CorpusSpec, Instance};
use crate::error::Result;
use crate::io::ComplexJson;
use crate::local::{vanishing_criterion, CriterionLevels, PieceEngine, PieceTable};
use crate::sr::{krull_dimension, SupportPair};

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

/// Piece tables of one instance over several fields.
#[derive(Clone, Debug)]
pub struct InstanceEvaluation {
    pub id: usize,
    pub delta: SimplicialComplex,
    pub sigma: SimplicialComplex,
    pub d: i32,
    pub tables: Vec<PieceTable>,
}

impl InstanceEvaluation {
    pub fn table(&self, field: FieldSpec) -> Option<&PieceTable> {
        self.tables.iter().find(|t| t.field == field)
    }

    /// Levels `1 ≤ n ≤ d − 1`.
    pub fn admissible_levels(&self) -> std::ops::RangeInclusive<i32> {
        1..=(self.d - 1)
    }
}

pub fn evaluate_instance(inst: &Instance, fields: &[FieldSpec]) -> Result<InstanceEvaluation> {
    let engine = PieceEngine::new(&inst.delta, &inst.sigma)?;
    Ok(InstanceEvaluation {
        id: inst.id,
        delta: inst.delta.clone(),
        sigma: inst.sigma.clone(),
        d: krull_dimension(&inst.delta)?,
        tables: fields.iter().map(|&f| engine.table(f)).collect(),
    })
}

/// Evaluate instances in parallel; output order follows input order.
pub fn evaluate_all(instances: &[Instance], fields: &[FieldSpec]) -> Result<Vec<InstanceEvaluation>> {
    instances.par_iter().map(|inst| evaluate_instance(inst, fields)).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub n: i32,
    pub field: String,
    pub agree: usize,
    pub disagree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub instance_id: usize,
    pub delta: ComplexJson,
    pub sigma: ComplexJson,
    pub n: i32,
    pub d: i32,
    pub index: i32,
    pub field: FieldSpec,
    pub criterion_verdict: bool,
    pub cohomology_verdict: bool,
    pub witness: Option<SupportPair>,
}

/// Verdicts at one cohomological index that differ between fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldConflict {
    pub instance_id: usize,
    pub delta: ComplexJson,
    pub sigma: ComplexJson,
    pub index: i32,
    pub verdicts: Vec<(FieldSpec, bool)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub tool_version: String,
    pub corpus: CorpusSpec,
    pub fields: Vec<FieldSpec>,
    pub instances: usize,
    pub comparisons: usize,
    pub agreements: usize,
    pub totals: Vec<Tally>,
    pub disagreements: Vec<Disagreement>,
    pub field_conflicts: Vec<FieldConflict>,
}

impl AuditSummary {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Criterion-vs-computation comparisons for every admissible level.
pub fn compare(eval: &InstanceEvaluation) -> Result<Vec<Disagreement>> {
    let mut out = Vec::new();
    for n in eval.admissible_levels() {
        out.extend(compare_level(eval, n)?);
    }
    Ok(out)
}

/// Comparisons at level `n`, returned whether or not they agree.
pub fn compare_level(eval: &InstanceEvaluation, n: i32) -> Result<Vec<Disagreement>> {
    let levels = CriterionLevels::new(&eval.delta, n)?;
    let index = levels.cohomological_index();
    let criterion = vanishing_criterion(&eval.delta, &eval.sigma, n)?;
    Ok(eval
        .tables
        .iter()
        .map(|t| {
            let witness = t.witness(index);
            Disagreement {
                instance_id: eval.id,
                delta: (&eval.delta).into(),
                sigma: (&eval.sigma).into(),
                n,
                d: eval.d,
                index,
                field: t.field,
                criterion_verdict: criterion,
                cohomology_verdict: witness.is_none(),
                witness,
            }
        })
        .collect())
}

/// Indices at which the fields disagree about vanishing.
pub fn field_conflicts(eval: &InstanceEvaluation) -> Vec<FieldConflict> {
    let mut out = Vec::new();
    for index in 0..=eval.d {
        let verdicts: Vec<(FieldSpec, bool)> =
            eval.tables.iter().map(|t| (t.field, t.vanishes(index))).collect();
        if verdicts.windows(2).any(|w| w[0].1 != w[1].1) {
            out.push(FieldConflict {
                instance_id: eval.id,
                delta: (&eval.delta).into(),
                sigma: (&eval.sigma).into(),
                index,
                verdicts,
            });
        }
    }
    out
}

pub fn summarize(spec: &CorpusSpec, fields: &[FieldSpec], evals: &[InstanceEvaluation]) -> Result<AuditSummary> {
    let mut totals: BTreeMap<(i32, usize), Tally> = BTreeMap::new();
    let mut disagreements = Vec::new();
    let mut conflicts = Vec::new();
    let (mut comparisons, mut agreements) = (0, 0);
    for eval in evals {
        for n in eval.admissible_levels() {
            for c in compare_level(eval, n)? {
                let fi = fields.iter().position(|f| *f == c.field).unwrap_or(usize::MAX);
                let t = totals.entry((n, fi)).or_insert_with(|| Tally {
                    n,
                    field: c.field.to_string(),
                    ..Tally::default()
                });
                comparisons += 1;
                if c.criterion_verdict == c.cohomology_verdict {
                    t.agree += 1;
                    agreements += 1;
                } else {
                    t.disagree += 1;
                    disagreements.push(c);
                }
            }
        }
        conflicts.extend(field_conflicts(eval));
    }
    Ok(AuditSummary {
        tool_version: TOOL_VERSION.to_string(),
        corpus: spec.clone(),
        fields: fields.to_vec(),
        instances: evals.len(),
        comparisons,
        agreements,
        totals: totals.into_values().collect(),
        disagreements,
        field_conflicts: conflicts,
    })
}

/// Generate the corpus, evaluate it and tally agreement per level and field.
pub fn run_audit(spec: &CorpusSpec, fields: &[FieldSpec]) -> Result<AuditSummary> {
    let instances = generate(spec)?;
    let evals = evaluate_all(&instances, fields)?;
    summarize(spec, fields, &evals)
}
