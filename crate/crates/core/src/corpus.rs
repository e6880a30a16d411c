//! Seeded and exhaustive corpora of pairs `Σ ⊆ Δ`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubcomplexStrategy {
    /// Σ generated by a few random faces of Δ.
    RandomFacetSubset,
    /// Σ is Δ restricted to a random vertex set.
    VertexInduced,
    /// Σ is a random skeleton of Δ.
    FullSkeleton,
    /// Cycle through the three strategies above.
    Mixed,
}

impl std::str::FromStr for SubcomplexStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random_facet_subset" => Ok(Self::RandomFacetSubset),
            "vertex_induced" => Ok(Self::VertexInduced),
            "full_skeleton" => Ok(Self::FullSkeleton),
            "mixed" => Ok(Self::Mixed),
            other => Err(Error::InvalidArgument(format!("unknown subcomplex strategy `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub vertex_min: u32,
    pub vertex_max: u32,
    pub instance_count: usize,
    pub strategy: SubcomplexStrategy,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: usize,
    pub delta: SimplicialComplex,
    pub sigma: SimplicialComplex,
}

/// Deterministic corpus: an equal `CorpusSpec` always yields the same instances.
pub fn generate(spec: &CorpusSpec) -> Result<Vec<Instance>> {
    if spec.vertex_min == 0 || spec.vertex_min > spec.vertex_max {
        return Err(Error::InvalidArgument(format!(
            "vertex range {}..{} must be nonempty and start at 1 or more",
            spec.vertex_min, spec.vertex_max
        )));
    }
    if spec.vertex_max > 16 {
        return Err(Error::InvalidArgument("at most 16 vertices per instance".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let strategies = [
        SubcomplexStrategy::RandomFacetSubset,
        SubcomplexStrategy::VertexInduced,
        SubcomplexStrategy::FullSkeleton,
    ];
    let mut out = Vec::with_capacity(spec.instance_count);
    for id in 0..spec.instance_count {
        let n = rng.gen_range(spec.vertex_min..=spec.vertex_max);
        let delta = random_complex(&mut rng, n);
        let strategy = match spec.strategy {
            SubcomplexStrategy::Mixed => strategies[id % 3],
            s => s,
        };
        let sigma = random_subcomplex(&mut rng, &delta, strategy);
        out.push(Instance { id, delta, sigma });
    }
    Ok(out)
}

fn random_nonempty_subset(rng: &mut ChaCha8Rng, n: u32) -> Face {
    loop {
        let f = Face::new((1..=n).filter(|_| rng.gen_bool(0.5)));
        if !f.is_empty() {
            return f;
        }
    }
}

/// A complex generated by between 1 and `n` random nonempty facets.
pub fn random_complex(rng: &mut ChaCha8Rng, n: u32) -> SimplicialComplex {
    let k = rng.gen_range(1..=n);
    let facets: Vec<Face> = (0..k).map(|_| random_nonempty_subset(rng, n)).collect();
    SimplicialComplex::from_checked(n, facets)
}

pub fn random_subcomplex(
    rng: &mut ChaCha8Rng,
    delta: &SimplicialComplex,
    strategy: SubcomplexStrategy,
) -> SimplicialComplex {
    match strategy {
        SubcomplexStrategy::RandomFacetSubset | SubcomplexStrategy::Mixed => {
            let faces: Vec<Face> = delta.faces().into_iter().filter(|f| !f.is_empty()).collect();
            let k = rng.gen_range(0..=faces.len().min(4));
            let chosen: Vec<Face> = faces.choose_multiple(rng, k).cloned().collect();
            SimplicialComplex::from_checked(delta.ground_size(), chosen)
        }
        SubcomplexStrategy::VertexInduced => {
            let w = Face::new(delta.vertices().into_iter().filter(|_| rng.gen_bool(0.5)));
            delta.induced(&w)
        }
        SubcomplexStrategy::FullSkeleton => {
            let top = delta.dim().unwrap_or(-1);
            delta.skeleton(rng.gen_range(-1..=top))
        }
    }
}

/// Every non-void complex on the ground set `1..=n`.
pub fn all_complexes(n: u32) -> Vec<SimplicialComplex> {
    let mut subsets: Vec<Face> = Face::new(1..=n).subsets().filter(|f| !f.is_empty()).collect();
    subsets.sort_by(|a, b| a.graded_key().cmp(&b.graded_key()));
    let mut out = Vec::new();
    let mut chosen: Vec<Face> = Vec::new();
    extend_complexes(n, &subsets, 0, &mut chosen, &mut out);
    out
}

fn extend_complexes(
    n: u32,
    subsets: &[Face],
    next: usize,
    chosen: &mut Vec<Face>,
    out: &mut Vec<SimplicialComplex>,
) {
    if next == subsets.len() {
        out.push(SimplicialComplex::from_checked(n, chosen.clone()));
        return;
    }
    extend_complexes(n, subsets, next + 1, chosen, out);
    let cand = &subsets[next];
    // subsets come in graded order, so all boundary faces were already decided
    let closed = cand.len() == 1
        || (0..cand.len()).all(|j| chosen.contains(&cand.without_index(j)));
    if closed {
        chosen.push(cand.clone());
        extend_complexes(n, subsets, next + 1, chosen, out);
        chosen.pop();
    }
}

/// All pairs `Σ ⊆ Δ` of non-void complexes on `1..=n`.
pub fn exhaustive_pairs(n: u32) -> Vec<Instance> {
    let all = all_complexes(n);
    let mut out = Vec::new();
    for delta in &all {
        for sigma in &all {
            if sigma.is_subcomplex_of(delta).unwrap_or(false) {
                out.push(Instance { id: out.len(), delta: delta.clone(), sigma: sigma.clone() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complexes_on_small_ground_sets() {
        // antichains of the Boolean lattice minus the empty one
        assert_eq!(all_complexes(1).len(), 2);
        assert_eq!(all_complexes(2).len(), 5);
        assert_eq!(all_complexes(3).len(), 19);
        assert_eq!(all_complexes(4).len(), 167);
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = CorpusSpec {
            seed: 42,
            vertex_min: 4,
            vertex_max: 6,
            instance_count: 30,
            strategy: SubcomplexStrategy::Mixed,
        };
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a, b);
        for inst in &a {
            assert!(inst.sigma.is_subcomplex_of(&inst.delta).unwrap());
            assert!((4..=6).contains(&inst.delta.ground_size()));
        }
        let other = generate(&CorpusSpec { seed: 43, ..spec.clone() }).unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn bad_ranges_rejected() {
        let spec = CorpusSpec {
            seed: 0,
            vertex_min: 5,
            vertex_max: 4,
            instance_count: 1,
            strategy: SubcomplexStrategy::Mixed,
        };
        assert!(generate(&spec).is_err());
    }
}
