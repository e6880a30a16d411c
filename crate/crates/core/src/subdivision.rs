//! Barycentric subdivisions and greedy elementary collapse.
//!
//! A subdivision is a [`SimplicialComplex`] on `1..=m` together with the table
//! of source faces: vertex `i` is the barycentre of `barycenters[i - 1]`. The
//! table is sorted by (size, lexicographic), so label order is the order of
//! the source faces and a chain of faces is an increasing label sequence.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// Source face of each barycentric vertex, by label − 1.
    pub barycenters: Vec<Face>,
}

impl Subdivision {
    /// The source face of barycentric vertex `label`.
    pub fn source(&self, label: u32) -> &Face {
        &self.barycenters[label as usize - 1]
    }

    /// Translate a face of the subdivision into its chain of source faces.
    pub fn chain(&self, face: &Face) -> Vec<Face> {
        face.vertices().iter().map(|&v| self.source(v).clone()).collect()
    }

    pub fn label_of(&self, source: &Face) -> Option<u32> {
        self.barycenters
            .binary_search_by(|b| b.graded_key().cmp(&source.graded_key()))
            .ok()
            .map(|i| i as u32 + 1)
    }
}

/// `Sd(K)`: vertices are the nonempty faces of `K`, faces are chains.
pub fn barycentric(k: &SimplicialComplex) -> Subdivision {
    subdivide_avoiding(k, |_| false)
}

/// `Sd(D − S)`: the full subcomplex of `Sd(D)` on barycentres of faces not in `S`.
pub fn sd_minus(d: &SimplicialComplex, s: &SimplicialComplex) -> Result<Subdivision> {
    if !s.is_subcomplex_of(d)? {
        return Err(Error::NotSubcomplex { what: "excluded complex" });
    }
    Ok(subdivide_avoiding(d, |f| s.contains(f)))
}

fn subdivide_avoiding(d: &SimplicialComplex, excluded: impl Fn(&Face) -> bool) -> Subdivision {
    if d.is_void() {
        return Subdivision { complex: SimplicialComplex::void(0), barycenters: Vec::new() };
    }
    let barycenters: Vec<Face> =
        d.faces().into_iter().filter(|f| !f.is_empty() && !excluded(f)).collect();
    let m = barycenters.len();
    // covers[i]: labels j > i whose face covers face i inside the kept poset
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            if barycenters[j].len() > barycenters[i].len()
                && barycenters[i].is_subset(&barycenters[j])
            {
                above[i].push(j);
            }
        }
    }
    let covers: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            above[i]
                .iter()
                .copied()
                .filter(|&j| !above[i].iter().any(|&k| k != j && above[k].contains(&j)))
                .collect()
        })
        .collect();
    let has_below: Vec<bool> = {
        let mut hb = vec![false; m];
        for cs in &above {
            for &j in cs {
                hb[j] = true;
            }
        }
        hb
    };
    // maximal chains are cover paths from minimal to maximal elements
    let mut facets = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..m).filter(|&i| !has_below[i]).map(|i| vec![i]).collect();
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        if covers[last].is_empty() {
            facets.push(Face::new(path.iter().map(|&i| i as u32 + 1)));
        } else {
            for &j in &covers[last] {
                let mut next = path.clone();
                next.push(j);
                stack.push(next);
            }
        }
    }
    Subdivision { complex: SimplicialComplex::from_checked(m as u32, facets), barycenters }
}

/// Progress of a greedy collapse sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseState {
    pub current: SimplicialComplex,
    /// `(free face, coface)` in removal order.
    pub removed_pairs: Vec<(Face, Face)>,
    pub stuck: bool,
    /// Faces of target dimensions left at the end.
    pub remaining_targets: Vec<Face>,
}

/// Remove free pairs `(τ, σ)` with `dim σ = D` for each target `D`, largest first.
///
/// `τ` is free when `σ` is its only proper coface. Candidates are taken in
/// lexicographic order, always the smallest free face first. The sweep is
/// stuck if a face of some target dimension survives.
pub fn collapse_sweep(x: &SimplicialComplex, target_dims: &[i32]) -> CollapseState {
    let targets: BTreeSet<i32> = target_dims.iter().copied().collect();
    let mut faces: BTreeSet<Face> = x.faces().into_iter().filter(|f| !f.is_empty()).collect();
    // immediate cofaces of every face
    let mut cofaces: BTreeMap<Face, BTreeSet<Face>> =
        faces.iter().map(|f| (f.clone(), BTreeSet::new())).collect();
    for f in &faces {
        if f.len() >= 2 {
            for j in 0..f.len() {
                cofaces.get_mut(&f.without_index(j)).unwrap().insert(f.clone());
            }
        }
    }
    let is_free = |tau: &Face, cofaces: &BTreeMap<Face, BTreeSet<Face>>, d: i32| -> Option<Face> {
        let up = cofaces.get(tau)?;
        if up.len() != 1 {
            return None;
        }
        let sigma = up.iter().next().unwrap();
        (sigma.dim() == d && cofaces[sigma].is_empty()).then(|| sigma.clone())
    };

    let mut removed_pairs = Vec::new();
    for &d in targets.iter().rev() {
        if d < 1 {
            continue;
        }
        let mut free: BTreeSet<Face> = faces
            .iter()
            .filter(|f| f.dim() == d - 1 && is_free(f, &cofaces, d).is_some())
            .cloned()
            .collect();
        while let Some(tau) = free.pop_first() {
            let Some(sigma) = is_free(&tau, &cofaces, d) else { continue };
            for j in 0..sigma.len() {
                let facet = sigma.without_index(j);
                cofaces.get_mut(&facet).unwrap().remove(&sigma);
            }
            if tau.len() >= 2 {
                for j in 0..tau.len() {
                    cofaces.get_mut(&tau.without_index(j)).unwrap().remove(&tau);
                }
            }
            faces.remove(&sigma);
            faces.remove(&tau);
            cofaces.remove(&sigma);
            cofaces.remove(&tau);
            for j in 0..sigma.len() {
                let facet = sigma.without_index(j);
                if facet != tau && is_free(&facet, &cofaces, d).is_some() {
                    free.insert(facet);
                }
            }
            removed_pairs.push((tau, sigma));
        }
    }

    let remaining_targets: Vec<Face> =
        faces.iter().filter(|f| targets.contains(&f.dim())).cloned().collect();
    let maximal: Vec<Face> =
        faces.iter().filter(|f| cofaces[*f].is_empty()).cloned().collect();
    let current = if x.is_void() {
        x.clone()
    } else {
        SimplicialComplex::from_checked(x.ground_size(), maximal)
    };
    CollapseState {
        current,
        removed_pairs,
        stuck: !remaining_targets.is_empty(),
        remaining_targets,
    }
}

/// Whether no face of dimension `≥ q` is left.
pub fn collapsed_below(state: &CollapseState, q: i32) -> bool {
    match state.current.dim() {
        Ok(d) => d < q,
        Err(_) => true,
    }
}

/// Replay a collapse log on `x`, checking every pair was free when removed.
pub fn replay_collapse(x: &SimplicialComplex, pairs: &[(Face, Face)]) -> Option<SimplicialComplex> {
    let mut faces: BTreeSet<Face> = x.faces().into_iter().filter(|f| !f.is_empty()).collect();
    for (tau, sigma) in pairs {
        if !faces.contains(tau) || !faces.contains(sigma) || !tau.is_subset(sigma) {
            return None;
        }
        if sigma.len() != tau.len() + 1 {
            return None;
        }
        let proper_cofaces = faces.iter().filter(|f| f.len() > tau.len() && tau.is_subset(f)).count();
        if proper_cofaces != 1 {
            return None;
        }
        faces.remove(tau);
        faces.remove(sigma);
    }
    let maximal = faces
        .iter()
        .filter(|f| !faces.iter().any(|g| g.len() > f.len() && f.is_subset(g)))
        .cloned()
        .collect();
    Some(SimplicialComplex::from_checked(x.ground_size(), maximal))
}
