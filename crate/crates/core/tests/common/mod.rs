#![allow(dead_code)]

//! Test-only oracles that do not go through barycentric subdivisions.

use srvan_core::cohomology::linalg::{rank, SparseColumn};
use srvan_core::sr::minimal_nonfaces;
use srvan_core::{Face, FieldSpec, SimplicialComplex, SupportPair};

/// `dim H^i_J(k[Δ])_a` from the Čech complex on the generators of `J`.
///
/// For generators `x^{G_1}, …, x^{G_r}` and `T ⊆ [r]` with `U = ∪_{j∈T} G_j`,
/// the degree-`a` part of `k[Δ]_{x^U}` is one-dimensional iff `U ∈ Δ`,
/// `F₋ ⊆ U` and `F₊ ∪ F₋ ∪ U ∈ Δ`, and zero otherwise; the Čech maps
/// between nonzero parts are `±1`.
pub fn cech_piece_dims(
    delta: &SimplicialComplex,
    sigma: &SimplicialComplex,
    pair: &SupportPair,
    field: FieldSpec,
) -> Vec<usize> {
    // generators that vanish in k[Δ] only contribute zero terms
    let gens: Vec<Face> = minimal_nonfaces(sigma)
        .generators
        .into_iter()
        .filter(|g| delta.contains(g))
        .collect();
    let r = gens.len();
    assert!(r <= 20, "too many generators for the Čech oracle");
    let support = pair.support();
    let alive = |mask: u32| -> bool {
        let mut u = Face::empty();
        for (j, g) in gens.iter().enumerate() {
            if mask >> j & 1 == 1 {
                u = u.union(g);
            }
        }
        delta.contains(&u) && pair.f_minus.is_subset(&u) && delta.contains(&u.union(&support))
    };
    // basis of C^t: alive subsets of size t
    let mut basis: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
    for mask in 0u32..(1u32 << r) {
        if alive(mask) {
            basis[mask.count_ones() as usize].push(mask);
        }
    }
    let ranks: Vec<usize> = (0..r)
        .map(|t| {
            let index: std::collections::HashMap<u32, u32> =
                basis[t + 1].iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
            let columns: Vec<SparseColumn> = basis[t]
                .iter()
                .map(|&m| {
                    let mut col: SparseColumn = (0..r)
                        .filter(|j| m >> j & 1 == 0)
                        .filter_map(|j| {
                            let target = m | 1 << j;
                            let before = (m & ((1u32 << j) - 1)).count_ones();
                            let sign = if before.is_multiple_of(2) { 1 } else { -1 };
                            index.get(&target).map(|&row| (row, sign))
                        })
                        .collect();
                    col.sort_unstable();
                    col
                })
                .collect();
            rank(columns, field)
        })
        .collect();
    (0..=r)
        .map(|t| {
            let into = if t > 0 { ranks[t - 1] } else { 0 };
            let out = if t < r { ranks[t] } else { 0 };
            basis[t].len() - into - out
        })
        .collect()
}

/// `H^i_J(k[Δ]) = 0` according to the Čech oracle.
pub fn cech_vanishes(
    delta: &SimplicialComplex,
    sigma: &SimplicialComplex,
    i: i32,
    field: FieldSpec,
) -> bool {
    srvan_core::sr::support_pair_classes(delta).iter().all(|p| {
        let dims = cech_piece_dims(delta, sigma, p, field);
        dims.get(i as usize).copied().unwrap_or(0) == 0
    })
}

pub fn cx(n: u32, facets: &[&[u32]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(n, facets.iter().map(|f| f.to_vec())).unwrap()
}

pub fn pair(plus: &[u32], minus: &[u32]) -> SupportPair {
    SupportPair::new(Face::new(plus.iter().copied()), Face::new(minus.iter().copied())).unwrap()
}
