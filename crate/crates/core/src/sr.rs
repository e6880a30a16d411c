//! Stanley–Reisner side: minimal non-faces and multidegree support classes.
//!
//! A multidegree `a ∈ ℤⁿ` enters only through its positive and negative
//! supports, so a graded piece is indexed by a [`SupportPair`] rather than by
//! an integer vector.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// `(supp₊ a, supp₋ a)`. Ordered lexicographically by `(f_plus, f_minus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SupportPair {
    pub f_plus: Face,
    pub f_minus: Face,
}

impl SupportPair {
    pub fn new(f_plus: Face, f_minus: Face) -> Result<Self> {
        if let Some(&v) = f_plus.vertices().iter().find(|v| f_minus.contains_vertex(**v)) {
            return Err(Error::OverlappingSupport(v));
        }
        Ok(SupportPair { f_plus, f_minus })
    }

    /// Support class of an explicit multidegree; entry `j` is the exponent of `x_{j+1}`.
    pub fn of_multidegree(a: &[i64]) -> Self {
        let pick = |pred: fn(i64) -> bool| {
            Face::new(a.iter().enumerate().filter(|(_, &x)| pred(x)).map(|(j, _)| j as u32 + 1))
        };
        SupportPair { f_plus: pick(|x| x > 0), f_minus: pick(|x| x < 0) }
    }

    /// `supp a = F₊ ∪ F₋`.
    pub fn support(&self) -> Face {
        self.f_plus.union(&self.f_minus)
    }
}

impl fmt::Display for SupportPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f_plus, self.f_minus)
    }
}

/// Minimal generators of a square-free monomial ideal, as exponent supports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdealGens {
    pub generators: Vec<Face>,
}

impl MonomialIdealGens {
    /// Whether the monomial `x^F` lies in the ideal.
    pub fn contains_monomial(&self, face: &Face) -> bool {
        self.generators.iter().any(|g| g.is_subset(face))
    }
}

/// Generators of the Stanley–Reisner ideal: the inclusion-minimal non-faces.
pub fn minimal_nonfaces(k: &SimplicialComplex) -> MonomialIdealGens {
    let n = k.ground_size();
    if k.is_void() {
        return MonomialIdealGens { generators: vec![Face::empty()] };
    }
    let vertices: BTreeSet<u32> = k.vertices().into_iter().collect();
    let mut gens: BTreeSet<Face> =
        (1..=n).filter(|v| !vertices.contains(v)).map(|v| Face::new([v])).collect();
    // every other minimal non-face is a face plus one vertex with all its
    // codimension-one subsets present
    for face in k.faces() {
        let top = face.vertices().last().copied().unwrap_or(0);
        for &v in vertices.range(top + 1..) {
            let cand = Face::new(face.vertices().iter().copied().chain([v]));
            if !k.contains(&cand) && (0..cand.len()).all(|j| k.contains(&cand.without_index(j))) {
                gens.insert(cand);
            }
        }
    }
    // each candidate has all proper subsets as faces, hence is minimal
    MonomialIdealGens { generators: gens.into_iter().collect() }
}

/// All disjoint pairs `(F₊, F₋)` with `F₊ ∪ F₋ ∈ K`, sorted.
pub fn support_pair_classes(k: &SimplicialComplex) -> Vec<SupportPair> {
    let mut pairs = Vec::new();
    for g in k.faces() {
        for plus in g.subsets() {
            let minus = g.difference(&plus);
            pairs.push(SupportPair { f_plus: plus, f_minus: minus });
        }
    }
    pairs.sort();
    pairs
}

/// Every disjoint pair of subsets of `1..=n` (there are `3ⁿ`).
pub fn all_support_pairs(n: u32) -> Vec<SupportPair> {
    let all = Face::new(1..=n);
    let mut pairs = Vec::new();
    for g in all.subsets() {
        for plus in g.subsets() {
            let minus = g.difference(&plus);
            pairs.push(SupportPair { f_plus: plus, f_minus: minus });
        }
    }
    pairs.sort();
    pairs
}

/// `dim k[K] = dim K + 1`.
pub fn krull_dimension(k: &SimplicialComplex) -> Result<i32> {
    Ok(k.dim()? + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: u32, facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn minimal_nonfaces_examples() {
        assert!(minimal_nonfaces(&SimplicialComplex::simplex(3)).generators.is_empty());
        assert_eq!(
            minimal_nonfaces(&SimplicialComplex::simplex_boundary(3)).generators,
            vec![Face::from([1, 2, 3])]
        );
        assert_eq!(minimal_nonfaces(&cx(3, &[&[1, 2]])).generators, vec![Face::from([3])]);
        assert_eq!(
            minimal_nonfaces(&cx(4, &[&[1, 2], &[2, 3], &[3, 4]])).generators,
            vec![Face::from([1, 3]), Face::from([1, 4]), Face::from([2, 4])]
        );
        // {∅}: every variable is a generator
        assert_eq!(minimal_nonfaces(&SimplicialComplex::empty(2)).generators.len(), 2);
    }

    #[test]
    fn support_pair_examples() {
        let point = cx(1, &[&[1]]);
        let pairs = support_pair_classes(&point);
        assert_eq!(pairs.len(), 3);
        assert!(pairs.contains(&SupportPair::new(Face::empty(), Face::empty()).unwrap()));
        assert!(pairs.contains(&SupportPair::new(Face::from([1]), Face::empty()).unwrap()));
        assert!(pairs.contains(&SupportPair::new(Face::empty(), Face::from([1])).unwrap()));
        assert_eq!(support_pair_classes(&SimplicialComplex::simplex(3)).len(), 27);
        assert_eq!(support_pair_classes(&SimplicialComplex::simplex_boundary(3)).len(), 19);
        assert_eq!(all_support_pairs(3).len(), 27);
    }

    #[test]
    fn support_pair_rejects_overlap() {
        assert_eq!(
            SupportPair::new(Face::from([1, 2]), Face::from([2])),
            Err(Error::OverlappingSupport(2))
        );
        let p = SupportPair::of_multidegree(&[2, 0, -1, -3]);
        assert_eq!(p.f_plus, Face::from([1]));
        assert_eq!(p.f_minus, Face::from([3, 4]));
    }

    #[test]
    fn krull_dimension_examples() {
        assert_eq!(krull_dimension(&SimplicialComplex::simplex(3)), Ok(3));
        assert_eq!(krull_dimension(&SimplicialComplex::simplex_boundary(4)), Ok(3));
        assert_eq!(krull_dimension(&SimplicialComplex::empty(2)), Ok(0));
        assert!(krull_dimension(&SimplicialComplex::void(2)).is_err());
    }
}
