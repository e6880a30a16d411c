//! Simplicial (co)homology over exact fields.
//!
//! Over a field, `dim H̃^q = dim H̃_q`, so every dimension here comes from
//! ranks of boundary matrices:
//! `dim H^q = |basis_q| − rank ∂_q − rank ∂_{q+1}`.
//!
//! Reduced conventions: the augmented complex has `∅` in degree −1, so
//! `H̃^{-1}({∅}) = k` and the void complex has the zero chain complex. A pair
//! `(K, A)` uses the quotient of augmented complexes: when `A` is void this is
//! reduced cohomology of `K`, otherwise `∅` cancels and it is the ordinary
//! relative cohomology (for `A = {∅}` that is unreduced cohomology of `K`).

pub mod field;
pub mod linalg;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
pub use field::FieldSpec;
pub use linalg::{SparseColumn, SparseMatrix};

/// Cohomology dimensions indexed by degree `q ≥ -1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CohomologyDims {
    /// `dims[q + 1]`
    pub dims: Vec<usize>,
}

impl CohomologyDims {
    /// Dimension in degree `q`; zero outside the stored range.
    pub fn degree(&self, q: i32) -> usize {
        if q < -1 {
            return 0;
        }
        self.dims.get((q + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ_q (−1)^q dim H^q`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if (i as i64 - 1) % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Oriented bases and boundary matrices of a simplicial chain complex.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    pub field: FieldSpec,
    pub reduced: bool,
    /// `bases[q + 1]`: the `q`-simplices, vertex-sorted, in lexicographic order.
    pub bases: Vec<Vec<Face>>,
    /// `boundaries[q]` is `∂_q : C_q → C_{q−1}` for `q ≥ 0`.
    pub boundaries: Vec<SparseMatrix>,
}

impl ChainComplexData {
    pub fn top_dim(&self) -> i32 {
        self.bases.len() as i32 - 2
    }

    pub fn basis(&self, q: i32) -> &[Face] {
        if q < -1 {
            return &[];
        }
        self.bases.get((q + 1) as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn boundary(&self, q: i32) -> Option<&SparseMatrix> {
        if q < 0 {
            return None;
        }
        self.boundaries.get(q as usize)
    }

    /// Cohomology of the whole complex.
    pub fn dims(&self) -> CohomologyDims {
        let all: Vec<Vec<bool>> = self.bases.iter().map(|b| vec![true; b.len()]).collect();
        self.quotient_dims(&all)
    }

    /// Cohomology of the subquotient spanned by the selected basis elements.
    ///
    /// The selection must be closed in the sense that the unselected faces
    /// span a subcomplex; then this is the relative cohomology of the pair.
    pub fn quotient_dims(&self, selected: &[Vec<bool>]) -> CohomologyDims {
        self.quotient_dims_over(selected, self.field)
    }

    /// As [`quotient_dims`](Self::quotient_dims), with the integer boundary
    /// matrices read over `field`.
    pub fn quotient_dims_over(&self, selected: &[Vec<bool>], field: FieldSpec) -> CohomologyDims {
        let counts: Vec<usize> =
            selected.iter().map(|s| s.iter().filter(|&&b| b).count()).collect();
        let ranks: Vec<usize> = (0..self.boundaries.len())
            .map(|q| self.restricted_rank(q, &selected[q + 1], &selected[q], field))
            .collect();
        let rank_at = |q: i32| -> usize {
            if q < 0 {
                0
            } else {
                ranks.get(q as usize).copied().unwrap_or(0)
            }
        };
        let mut dims: Vec<usize> = (0..counts.len())
            .map(|i| {
                let q = i as i32 - 1;
                counts[i] - rank_at(q) - rank_at(q + 1)
            })
            .collect();
        while dims.last() == Some(&0) {
            dims.pop();
        }
        CohomologyDims { dims }
    }

    fn restricted_rank(&self, q: usize, cols: &[bool], rows: &[bool], field: FieldSpec) -> usize {
        let m = &self.boundaries[q];
        // renumber selected rows so pivots stay compact
        let mut row_index = vec![u32::MAX; rows.len()];
        let mut next = 0u32;
        for (r, &keep) in rows.iter().enumerate() {
            if keep {
                row_index[r] = next;
                next += 1;
            }
        }
        if next == 0 {
            return 0;
        }
        let columns: Vec<SparseColumn> = m
            .columns
            .iter()
            .zip(cols)
            .filter(|(_, &keep)| keep)
            .map(|(col, _)| {
                col.iter()
                    .filter(|(r, _)| row_index[*r as usize] != u32::MAX)
                    .map(|&(r, v)| (row_index[r as usize], v))
                    .collect()
            })
            .collect();
        linalg::rank(columns, field)
    }
}

/// Chain complex of `K` with simplices oriented by increasing vertex label.
///
/// `∂[v_0 … v_q] = Σ_j (−1)^j [v_0 … v̂_j … v_q]`; in reduced mode `∂_0`
/// maps every vertex to `∅`.
pub fn chain_complex(k: &SimplicialComplex, field: FieldSpec, reduced: bool) -> ChainComplexData {
    let mut bases: Vec<Vec<Face>> = Vec::new();
    if !k.is_void() {
        for face in k.faces() {
            let i = face.len();
            if bases.len() <= i {
                bases.resize(i + 1, Vec::new());
            }
            bases[i].push(face);
        }
        if !reduced {
            bases[0].clear();
        }
    }
    let boundaries = boundary_matrices(&bases);
    ChainComplexData { field, reduced, bases, boundaries }
}

pub(crate) fn boundary_matrices(bases: &[Vec<Face>]) -> Vec<SparseMatrix> {
    let mut boundaries = Vec::new();
    for i in 1..bases.len() {
        let index: HashMap<&Face, u32> =
            bases[i - 1].iter().enumerate().map(|(r, f)| (f, r as u32)).collect();
        let mut m = SparseMatrix::zeros(bases[i - 1].len(), bases[i].len());
        for (c, face) in bases[i].iter().enumerate() {
            let mut col: SparseColumn = (0..face.len())
                .filter_map(|j| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    index.get(&face.without_index(j)).map(|&r| (r, sign))
                })
                .collect();
            col.sort_unstable();
            m.columns[c] = col;
        }
        boundaries.push(m);
    }
    boundaries
}

/// Reduced cohomology dimensions of `K`. Void gives all zeros.
pub fn reduced_cohomology_dims(k: &SimplicialComplex, field: FieldSpec) -> CohomologyDims {
    chain_complex(k, field, true).dims()
}

/// Unreduced cohomology dimensions of `K`.
pub fn cohomology_dims(k: &SimplicialComplex, field: FieldSpec) -> CohomologyDims {
    chain_complex(k, field, false).dims()
}

/// Relative reduced cohomology of the pair `(K, A)` in every degree.
pub fn relative_cohomology_dims(
    k: &SimplicialComplex,
    a: &SimplicialComplex,
    field: FieldSpec,
) -> Result<CohomologyDims> {
    if !a.is_subcomplex_of(k)? {
        return Err(Error::NotSubcomplex { what: "second member of the pair" });
    }
    let cc = chain_complex(k, field, true);
    let selected: Vec<Vec<bool>> = cc
        .bases
        .iter()
        .map(|basis| basis.iter().map(|f| !a.contains(f)).collect())
        .collect();
    Ok(cc.quotient_dims(&selected))
}

/// `dim H̃^q(K, A)`.
pub fn relative_cohomology_dim(
    k: &SimplicialComplex,
    a: &SimplicialComplex,
    q: i32,
    field: FieldSpec,
) -> Result<usize> {
    Ok(relative_cohomology_dims(k, a, field)?.degree(q))
}
