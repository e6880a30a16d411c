//! Abstract simplicial complexes on the ground set `1..=n`.
//!
//! A complex is stored by its facets. Two complexes without vertices are
//! distinguished: the *void* complex has no faces at all, while the *empty*
//! complex `{∅}` has exactly the empty face. Reduced cohomology tells them
//! apart, so every operator here defines its behaviour on both.
//!
//! Dimension convention: a `q`-face has `q + 1` vertices, the empty face has
//! dimension `-1`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite vertex set, kept sorted and free of duplicates.
///
/// Ordering is lexicographic on the sorted vertex list, so `∅ < {1} < {1,2} < {1,2,3} < {1,3}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<u32>);

impl Face {
    pub fn new(vertices: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains_vertex(*v)).collect())
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains_vertex(*v)).collect())
    }

    /// The face with the vertex at position `j` removed.
    pub fn without_index(&self, j: usize) -> Face {
        let mut v = self.0.clone();
        v.remove(j);
        Face(v)
    }

    /// All subsets, the empty one included.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let k = self.0.len();
        assert!(k < 32, "face too large to enumerate subsets");
        (0u32..(1u32 << k)).map(move |mask| {
            Face((0..k).filter(|j| mask >> j & 1 == 1).map(|j| self.0[j]).collect())
        })
    }

    /// Graded-lexicographic key: size first, then lexicographic.
    pub fn graded_key(&self) -> (usize, &[u32]) {
        (self.0.len(), &self.0)
    }
}

impl From<Vec<u32>> for Face {
    fn from(v: Vec<u32>) -> Self {
        Face::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for Face {
    fn from(v: [u32; N]) -> Self {
        Face::new(v)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Which reading of the deletion operator to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeletionRule {
    /// `{G : F ⊄ G}`, the faces that do not contain `F`.
    #[default]
    NotContaining,
    /// The complex generated by `{G : G ⊄ F}`. Kept for auditing only; this
    /// family is not closed under subsets, so its downward closure is used.
    NotContainedIn,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground_size: u32,
    facets: Vec<Face>,
    void: bool,
}

/// Keep only inclusion-maximal sets, sorted lexicographically.
pub(crate) fn maximal_only(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// Smallest complex containing every listed set. An empty list gives `{∅}`.
    pub fn from_facets<I, F>(ground_size: u32, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: Into<Face>,
    {
        let facets: Vec<Face> = facets.into_iter().map(Into::into).collect();
        for f in &facets {
            if let Some(&v) = f.vertices().iter().find(|&&v| v == 0 || v > ground_size) {
                return Err(Error::VertexOutOfRange { vertex: v, ground_size });
            }
        }
        Ok(Self::from_checked(ground_size, facets))
    }

    pub(crate) fn from_checked(ground_size: u32, facets: Vec<Face>) -> Self {
        let mut facets = maximal_only(facets);
        if facets.is_empty() {
            facets.push(Face::empty());
        }
        SimplicialComplex { ground_size, facets, void: false }
    }

    /// The complex with no faces at all.
    pub fn void(ground_size: u32) -> Self {
        SimplicialComplex { ground_size, facets: Vec::new(), void: true }
    }

    /// The complex `{∅}`.
    pub fn empty(ground_size: u32) -> Self {
        SimplicialComplex { ground_size, facets: vec![Face::empty()], void: false }
    }

    /// The full simplex on `1..=n`.
    pub fn simplex(n: u32) -> Self {
        Self::from_checked(n, vec![Face::new(1..=n)])
    }

    /// Boundary of the simplex on `1..=n`.
    pub fn simplex_boundary(n: u32) -> Self {
        let top = Face::new(1..=n);
        let facets = (0..top.len()).map(|j| top.without_index(j)).collect();
        Self::from_checked(n, facets)
    }

    pub fn ground_size(&self) -> u32 {
        self.ground_size
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// True for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        !self.void && self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    pub fn dim(&self) -> Result<i32> {
        if self.void {
            return Err(Error::VoidDimension);
        }
        Ok(self.facets.iter().map(Face::dim).max().unwrap_or(-1))
    }

    /// Every face, ordered by dimension and then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let set: BTreeSet<Face> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        let mut faces: Vec<Face> = set.into_iter().collect();
        faces.sort_by(|a, b| a.graded_key().cmp(&b.graded_key()));
        faces
    }

    /// Faces with exactly `q + 1` vertices, in lexicographic order.
    pub fn faces_of_dim(&self, q: i32) -> Vec<Face> {
        if q < -1 {
            return Vec::new();
        }
        let k = (q + 1) as usize;
        let mut set = BTreeSet::new();
        for f in &self.facets {
            if f.len() >= k {
                set.extend(f.subsets().filter(|s| s.len() == k));
            }
        }
        set.into_iter().collect()
    }

    /// Number of faces per dimension, index 0 holding dimension -1.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut fv = Vec::new();
        for face in self.faces() {
            let i = face.len();
            if fv.len() <= i {
                fv.resize(i + 1, 0);
            }
            fv[i] += 1;
        }
        fv
    }

    /// Vertex labels `v` such that `{v}` is a face.
    pub fn vertices(&self) -> Vec<u32> {
        let set: BTreeSet<u32> =
            self.facets.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        set.into_iter().collect()
    }

    /// `{G ∈ K : G ∪ F ∈ K}`; void when `F ∉ K`.
    pub fn star(&self, face: &Face) -> SimplicialComplex {
        if !self.contains(face) {
            return Self::void(self.ground_size);
        }
        let facets = self.facets.iter().filter(|m| face.is_subset(m)).cloned().collect();
        Self::from_checked(self.ground_size, facets)
    }

    /// `{G ∈ K : F ⊄ G}`. Deleting `∅` leaves the void complex.
    pub fn deletion(&self, face: &Face) -> SimplicialComplex {
        if self.void || face.is_empty() {
            return Self::void(self.ground_size);
        }
        let mut facets = Vec::new();
        for m in &self.facets {
            if face.is_subset(m) {
                facets.extend(face.vertices().iter().map(|&v| {
                    Face(m.vertices().iter().copied().filter(|&w| w != v).collect())
                }));
            } else {
                facets.push(m.clone());
            }
        }
        Self::from_checked(self.ground_size, facets)
    }

    /// Downward closure of `{G ∈ K : G ⊄ F}`.
    pub fn deletion_not_contained_in(&self, face: &Face) -> SimplicialComplex {
        let facets: Vec<Face> =
            self.facets.iter().filter(|m| !m.is_subset(face)).cloned().collect();
        if facets.is_empty() {
            return Self::void(self.ground_size);
        }
        Self::from_checked(self.ground_size, facets)
    }

    pub fn deletion_with(&self, face: &Face, rule: DeletionRule) -> SimplicialComplex {
        match rule {
            DeletionRule::NotContaining => self.deletion(face),
            DeletionRule::NotContainedIn => self.deletion_not_contained_in(face),
        }
    }

    /// `{G ∈ K : G ∩ F = ∅, G ∪ F ∈ K}`.
    pub fn link(&self, face: &Face) -> SimplicialComplex {
        if !self.contains(face) {
            return Self::void(self.ground_size);
        }
        let facets = self
            .facets
            .iter()
            .filter(|m| face.is_subset(m))
            .map(|m| m.difference(face))
            .collect();
        Self::from_checked(self.ground_size, facets)
    }

    /// Faces of dimension at most `q`. A negative `q` below -1 gives void.
    pub fn skeleton(&self, q: i32) -> SimplicialComplex {
        if self.void || q < -1 {
            return Self::void(self.ground_size);
        }
        let mut facets = Vec::new();
        for m in &self.facets {
            if m.dim() <= q {
                facets.push(m.clone());
            } else {
                facets.extend(m.subsets().filter(|s| s.dim() == q));
            }
        }
        Self::from_checked(self.ground_size, facets)
    }

    /// Faces contained in `vertices`.
    pub fn induced(&self, vertices: &Face) -> SimplicialComplex {
        if self.void {
            return self.clone();
        }
        let facets = self.facets.iter().map(|m| m.intersection(vertices)).collect();
        Self::from_checked(self.ground_size, facets)
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        if self.void || other.void {
            return Self::void(self.ground_size);
        }
        let mut facets = Vec::new();
        for a in &self.facets {
            for b in &other.facets {
                facets.push(a.intersection(b));
            }
        }
        Self::from_checked(self.ground_size, facets)
    }

    /// Whether `self ⊆ other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> Result<bool> {
        if self.ground_size != other.ground_size {
            return Err(Error::GroundSizeMismatch {
                left: self.ground_size,
                right: other.ground_size,
            });
        }
        if self.void {
            return Ok(true);
        }
        if other.void {
            return Ok(false);
        }
        Ok(self.facets.iter().all(|f| other.contains(f)))
    }
}

/// `is_subcomplex(S, K)`: every facet of `S` is a face of `K`.
pub fn is_subcomplex(sub: &SimplicialComplex, complex: &SimplicialComplex) -> Result<bool> {
    sub.is_subcomplex_of(complex)
}
