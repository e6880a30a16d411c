//! Graded pieces of `H^i_J(k[Δ])` for `J` the image of `I_Σ`, and the
//! face-counting vanishing criteria they are audited against.
//!
//! A graded piece in support class `(F₊, F₋)` is the relative cohomology
//!
//! ```text
//! H^i_J(k[Δ])_a = H̃^{i−1}( Sd(star_Δ F₊ − Σ), Sd(del_{star_Δ F₊}(F₋) − Σ) )
//! ```
//!
//! which turns an infinite grading into finitely many simplicial
//! computations. Pieces outside `F₊ ∪ F₋ ∈ Δ` are zero and skipped.
//!
//! Index bookkeeping for the criteria lives in [`CriterionLevels`]: with
//! `d = dim Δ + 1`, level `n` targets cohomological index `d − n + 1` and for
//! each `1 ≤ i ≤ n` asks every `(d − i)`-face of `Δ` to contain at least
//! `n − i + 1` vertices of `Σ`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::{
    chain_complex, relative_cohomology_dims, ChainComplexData, CohomologyDims, FieldSpec,
};
use crate::complex::{DeletionRule, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::sr::{krull_dimension, support_pair_classes, SupportPair};
use crate::subdivision::{sd_minus, Subdivision};

/// `H^index_J(k[delta])` over `field`, with `J` the image of `I_sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingQuery {
    pub delta: SimplicialComplex,
    pub sigma: SimplicialComplex,
    pub index: i32,
    pub field: FieldSpec,
}

impl VanishingQuery {
    pub fn new(
        delta: SimplicialComplex,
        sigma: SimplicialComplex,
        index: i32,
        field: FieldSpec,
    ) -> Result<Self> {
        check_pair(&delta, &sigma)?;
        let d = krull_dimension(&delta)?;
        if index < 0 || index > d {
            return Err(Error::InvalidArgument(format!(
                "cohomological index {index} outside 0..={d}"
            )));
        }
        Ok(VanishingQuery { delta, sigma, index, field })
    }
}

fn check_pair(delta: &SimplicialComplex, sigma: &SimplicialComplex) -> Result<()> {
    if delta.is_void() {
        return Err(Error::VoidDimension);
    }
    if !sigma.is_subcomplex_of(delta)? {
        return Err(Error::NotSubcomplex { what: "sigma" });
    }
    Ok(())
}

/// The index arithmetic of the vanishing criteria at level `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriterionLevels {
    /// Krull dimension `d = dim Δ + 1`.
    pub d: i32,
    pub n: i32,
}

impl CriterionLevels {
    pub fn new(delta: &SimplicialComplex, n: i32) -> Result<Self> {
        Ok(CriterionLevels { d: krull_dimension(delta)?, n })
    }

    /// `d − n + 1`.
    pub fn cohomological_index(&self) -> i32 {
        self.d - self.n + 1
    }

    /// `1 ≤ n ≤ d − 1`.
    pub fn admissible(&self) -> bool {
        1 <= self.n && self.n < self.d
    }

    /// `(i, face dimension d − i, required Σ-vertex count n − i + 1)` for `1 ≤ i ≤ n`.
    pub fn levels(&self) -> impl Iterator<Item = (i32, i32, usize)> + '_ {
        (1..=self.n).map(move |i| (i, self.d - i, (self.n - i + 1) as usize))
    }

    /// Face dimensions the matching collapse sweep must clear.
    pub fn collapse_targets(&self) -> Vec<i32> {
        self.levels().map(|(_, q, _)| q).collect()
    }
}

/// A face that has too few vertices of `Σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub face: Face,
    pub face_dim: i32,
    pub sigma_vertices: usize,
    pub required: usize,
}

/// Every face of `Δ` failing the level-`n` criterion, level by level.
pub fn criterion_violations(
    delta: &SimplicialComplex,
    sigma: &SimplicialComplex,
    n: i32,
) -> Result<Vec<Violation>> {
    let levels = CriterionLevels::new(delta, n)?;
    // only 0-faces of Σ count
    let sigma_vertices = Face::new(sigma.vertices());
    let mut out = Vec::new();
    for (_, q, required) in levels.levels() {
        for face in delta.faces_of_dim(q) {
            let count = face.intersection(&sigma_vertices).len();
            if count < required {
                out.push(Violation { face, face_dim: q, sigma_vertices: count, required });
            }
        }
    }
    Ok(out)
}

/// Level-`n` criterion: for every `1 ≤ i ≤ n`, each `(d − i)`-face of `Δ`
/// contains at least `n − i + 1` vertices of `Σ`.
pub fn vanishing_criterion(delta: &SimplicialComplex, sigma: &SimplicialComplex, n: i32) -> Result<bool> {
    Ok(criterion_violations(delta, sigma, n)?.is_empty())
}

/// The `n = 1` reading stated directly: every `(d − 1)`-face meets `Σ` in a vertex.
pub fn top_faces_meet_sigma(delta: &SimplicialComplex, sigma: &SimplicialComplex) -> Result<bool> {
    let d = krull_dimension(delta)?;
    let sv = sigma.vertices();
    Ok(delta
        .faces_of_dim(d - 1)
        .iter()
        .all(|f| f.vertices().iter().any(|v| sv.contains(v))))
}

/// The pair `(X, A)` whose relative cohomology is the graded piece at `pair`,
/// with `A` relabelled into `X`'s barycentric labels.
pub fn graded_piece_pair(
    delta: &SimplicialComplex,
    sigma: &SimplicialComplex,
    pair: &SupportPair,
    rule: DeletionRule,
) -> Result<(Subdivision, SimplicialComplex)> {
    check_pair(delta, sigma)?;
    SupportPair::new(pair.f_plus.clone(), pair.f_minus.clone())?;
    let star = delta.star(&pair.f_plus);
    let del = star.deletion_with(&pair.f_minus, rule);
    let x = sd_minus(&star, &sigma.intersection(&star))?;
    let a = sd_minus(&del, &sigma.intersection(&del))?;
    let ground = x.complex.ground_size();
    let a_in_x = if a.complex.is_void() {
        SimplicialComplex::void(ground)
    } else {
        let facets: Vec<Face> = a
            .complex
            .facets()
            .iter()
            .map(|f| {
                Face::new(f.vertices().iter().map(|&v| {
                    x.label_of(a.source(v)).expect("deletion lies inside the star")
                }))
            })
            .collect();
        SimplicialComplex::from_checked(ground, facets)
    };
    Ok((x, a_in_x))
}

/// `dim_k H^i_J(k[Δ])_a` for `a` in support class `pair`.
pub fn graded_piece_dim(
    delta: &SimplicialComplex,
    sigma: &SimplicialComplex,
    i: i32,
    pair: &SupportPair,
    field: FieldSpec,
) -> Result<usize> {
    graded_piece_dim_with(delta, sigma, i, pair, field, DeletionRule::NotContaining)
}

pub fn graded_piece_dim_with(
    delta: &SimplicialComplex,
    sigma: &SimplicialComplex,
    i: i32,
    pair: &SupportPair,
    field: FieldSpec,
    rule: DeletionRule,
) -> Result<usize> {
    let (x, a) = graded_piece_pair(delta, sigma, pair, rule)?;
    if x.complex.is_void() {
        return Ok(0);
    }
    Ok(relative_cohomology_dims(&x.complex, &a, field)?.degree(i - 1))
}

/// Evaluates graded pieces for one `(Δ, Σ)` in bulk.
///
/// Every `Sd(star F₊ − Σ)` and `Sd(del(F₋) − Σ)` is a full subcomplex of
/// `Y = Sd(Δ − Σ)` on the barycentres of the faces involved, so the chain
/// complex of `Y` is built once and each pair selects the chains of `X`
/// that are not in `A`. A chain lies in `X` iff its top face is in the star,
/// and in `A` iff additionally its top face misses `F₋`.
pub struct PieceEngine {
    delta: SimplicialComplex,
    y: Subdivision,
    chains: ChainComplexData,
    /// top source-face index per basis element, `None` for `∅`
    tops: Vec<Vec<Option<usize>>>,
}

impl PieceEngine {
    pub fn new(delta: &SimplicialComplex, sigma: &SimplicialComplex) -> Result<Self> {
        check_pair(delta, sigma)?;
        let y = sd_minus(delta, sigma)?;
        let chains = chain_complex(&y.complex, FieldSpec::Q, true);
        let tops = chains
            .bases
            .iter()
            .map(|basis| basis.iter().map(|c| c.vertices().last().map(|&v| v as usize - 1)).collect())
            .collect();
        Ok(PieceEngine { delta: delta.clone(), y, chains, tops })
    }

    /// Relative cohomology dimensions, all degrees, for one support class.
    pub fn piece_dims(&self, pair: &SupportPair, field: FieldSpec) -> CohomologyDims {
        if !self.delta.contains(&pair.f_plus) {
            return CohomologyDims::default();
        }
        let in_star: Vec<bool> =
            self.y.barycenters.iter().map(|g| self.delta.contains(&g.union(&pair.f_plus))).collect();
        let minus_empty = pair.f_minus.is_empty();
        let relative: Vec<bool> = self
            .y
            .barycenters
            .iter()
            .map(|g| minus_empty || pair.f_minus.is_subset(g))
            .collect();
        let selected: Vec<Vec<bool>> = self
            .tops
            .iter()
            .map(|tops| {
                tops.iter()
                    .map(|top| match top {
                        None => minus_empty,
                        Some(t) => in_star[*t] && relative[*t],
                    })
                    .collect()
            })
            .collect();
        self.chains.quotient_dims_over(&selected, field)
    }

    /// Piece dimensions for every support class of `Δ`, sorted by pair.
    pub fn table(&self, field: FieldSpec) -> PieceTable {
        let pairs = support_pair_classes(&self.delta);
        let entries = pairs
            .into_par_iter()
            .map(|p| {
                let dims = self.piece_dims(&p, field);
                (p, dims)
            })
            .collect();
        PieceTable { field, entries }
    }
}

/// Cohomology of every support-class pair over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceTable {
    pub field: FieldSpec,
    pub entries: Vec<(SupportPair, CohomologyDims)>,
}

impl PieceTable {
    /// `dim H^i_J(k[Δ])_a` per pair.
    pub fn dims_at(&self, i: i32) -> Vec<PairDim> {
        self.entries
            .iter()
            .map(|(p, dims)| PairDim {
                f_plus: p.f_plus.clone(),
                f_minus: p.f_minus.clone(),
                dim: dims.degree(i - 1),
            })
            .collect()
    }

    /// First pair (in sorted order) with a nonzero piece at index `i`.
    pub fn witness(&self, i: i32) -> Option<SupportPair> {
        self.entries.iter().find(|(_, dims)| dims.degree(i - 1) != 0).map(|(p, _)| p.clone())
    }

    pub fn vanishes(&self, i: i32) -> bool {
        self.witness(i).is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDim {
    pub f_plus: Face,
    pub f_minus: Face,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingOutcome {
    pub vanishes: bool,
    pub witness: Option<SupportPair>,
    pub per_pair_dims: Vec<PairDim>,
}

/// Whether `H^i_J(k[Δ]) = 0`, i.e. every support-class piece vanishes.
pub fn local_cohomology_vanishes(query: &VanishingQuery) -> Result<VanishingOutcome> {
    let engine = PieceEngine::new(&query.delta, &query.sigma)?;
    let table = engine.table(query.field);
    let witness = table.witness(query.index);
    Ok(VanishingOutcome {
        vanishes: witness.is_none(),
        witness,
        per_pair_dims: table.dims_at(query.index),
    })
}

/// Piece dimensions at every disjoint pair on the ground set, including pairs
/// with `F₊ ∪ F₋ ∉ Δ`. Returns the excluded pairs whose piece is nonzero in
/// some degree; the list is expected to be empty.
pub fn nonzero_excluded_pairs(
    delta: &SimplicialComplex,
    sigma: &SimplicialComplex,
    field: FieldSpec,
) -> Result<Vec<SupportPair>> {
    let engine = PieceEngine::new(delta, sigma)?;
    Ok(crate::sr::all_support_pairs(delta.ground_size())
        .into_iter()
        .filter(|p| !delta.contains(&p.support()))
        .filter(|p| !engine.piece_dims(p, field).is_zero())
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldOutcome {
    pub field: FieldSpec,
    pub cohomology_verdict: bool,
    pub agree: bool,
    pub witness: Option<SupportPair>,
    pub per_pair_dims: Vec<PairDim>,
}

/// Criterion verdict against the computed verdict, one outcome per field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub delta: crate::io::ComplexJson,
    pub sigma: crate::io::ComplexJson,
    pub n: i32,
    pub d: i32,
    pub index: i32,
    pub admissible: bool,
    pub criterion_verdict: bool,
    pub outcomes: Vec<FieldOutcome>,
    /// Criterion and computation agree over every field.
    pub agree: bool,
}

pub fn audit_equivalence(
    delta: &SimplicialComplex,
    sigma: &SimplicialComplex,
    n: i32,
    fields: &[FieldSpec],
) -> Result<AuditReport> {
    let engine = PieceEngine::new(delta, sigma)?;
    let tables: Vec<PieceTable> = fields.iter().map(|&f| engine.table(f)).collect();
    audit_from_tables(delta, sigma, n, &tables)
}

/// As [`audit_equivalence`], reusing precomputed piece tables.
pub fn audit_from_tables(
    delta: &SimplicialComplex,
    sigma: &SimplicialComplex,
    n: i32,
    tables: &[PieceTable],
) -> Result<AuditReport> {
    let levels = CriterionLevels::new(delta, n)?;
    let index = levels.cohomological_index();
    let criterion_verdict = vanishing_criterion(delta, sigma, n)?;
    let outcomes: Vec<FieldOutcome> = tables
        .iter()
        .map(|t| {
            let witness = t.witness(index);
            let verdict = witness.is_none();
            FieldOutcome {
                field: t.field,
                cohomology_verdict: verdict,
                agree: verdict == criterion_verdict,
                witness,
                per_pair_dims: t.dims_at(index),
            }
        })
        .collect();
    Ok(AuditReport {
        delta: delta.into(),
        sigma: sigma.into(),
        n,
        d: levels.d,
        index,
        admissible: levels.admissible(),
        criterion_verdict,
        agree: outcomes.iter().all(|o| o.agree),
        outcomes,
    })
}
