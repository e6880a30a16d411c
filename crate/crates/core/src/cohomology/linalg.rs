//! Exact rank of sparse integer matrices over ℚ or `F_p`.
//!
//! Matrices are handed in column-major as sorted `(row, value)` lists. Column
//! reduction pivots on the lowest nonzero row of each column. Over ℚ the
//! reduction is fraction-free: `c ← b·c − a·c'` followed by division by the
//! column content, first in checked `i64` and, on overflow, again in
//! arbitrary precision.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::FieldSpec;

pub type SparseColumn = Vec<(u32, i64)>;

/// Column-major sparse matrix with integer entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<SparseColumn>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .iter()
            .find(|(r, _)| *r as usize == row)
            .map(|(_, v)| *v)
            .unwrap_or(0)
    }

    /// Entries as `(row, col, value)` triplets, column by column.
    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r as usize, c, v)))
            .collect()
    }

    /// Exact product `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = SparseMatrix::zeros(self.rows, other.cols);
        for (c, col) in other.columns.iter().enumerate() {
            let mut acc: HashMap<u32, i64> = HashMap::new();
            for &(k, b) in col {
                for &(r, a) in &self.columns[k as usize] {
                    *acc.entry(r).or_insert(0) += a * b;
                }
            }
            let mut entries: SparseColumn = acc.into_iter().filter(|(_, v)| *v != 0).collect();
            entries.sort_unstable();
            out.columns[c] = entries;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|(_, v)| *v == 0))
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        rank(self.columns.clone(), field)
    }
}

/// Rank of the matrix whose columns are given, over `field`.
pub fn rank(columns: Vec<SparseColumn>, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => match rank_integer_checked(&columns) {
            Some(r) => r,
            None => rank_integer_big(&columns),
        },
        FieldSpec::Prime(p) => rank_mod_p(columns, p as u64),
    }
}

fn rank_mod_p(columns: Vec<SparseColumn>, p: u64) -> usize {
    let norm = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut c: Vec<(u32, u64)> =
            col.into_iter().map(|(r, v)| (r, norm(v))).filter(|(_, v)| *v != 0).collect();
        while let Some(&(low, a)) = c.last() {
            let Some(piv) = pivots.get(&low) else { break };
            // pivot columns are stored with low entry 1
            c = axpy_mod(&c, piv, p - a, p);
        }
        if let Some(&(low, a)) = c.last() {
            let inv = mod_pow(a, p - 2, p);
            for e in c.iter_mut() {
                e.1 = e.1 * inv % p;
            }
            pivots.insert(low, c);
            rank += 1;
        }
    }
    rank
}

/// `x + s·y` mod p on sorted sparse vectors.
fn axpy_mod(x: &[(u32, u64)], y: &[(u32, u64)], s: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            out.push((y[j].0, y[j].1 * s % p));
            j += 1;
        } else {
            let v = (x[i].1 + y[j].1 * s) % p;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Integer arithmetic needed by fraction-free column reduction.
trait Exact: Clone + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `b·x − a·y`, or `None` on overflow.
    fn combine(x: &Self, b: &Self, y: &Self, a: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Exact for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn combine(x: &Self, b: &Self, y: &Self, a: &Self) -> Option<Self> {
        b.checked_mul(*x)?.checked_sub(a.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn combine(x: &Self, b: &Self, y: &Self, a: &Self) -> Option<Self> {
        Some(b * x - a * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

fn rank_integer_checked(columns: &[SparseColumn]) -> Option<usize> {
    rank_integer::<i64>(columns)
}

fn rank_integer_big(columns: &[SparseColumn]) -> usize {
    rank_integer::<BigInt>(columns).expect("arbitrary precision cannot overflow")
}

fn rank_integer<T: Exact>(columns: &[SparseColumn]) -> Option<usize> {
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut c: Vec<(u32, T)> =
            col.iter().filter(|(_, v)| *v != 0).map(|&(r, v)| (r, T::from_i64(v))).collect();
        while let Some((low, _)) = c.last() {
            let Some(piv) = pivots.get(low) else { break };
            let a = c.last().unwrap().1.clone();
            let b = piv.last().unwrap().1.clone();
            c = combine_columns(&c, &b, piv, &a)?;
            normalize(&mut c);
        }
        if let Some(&(low, _)) = c.last() {
            pivots.insert(low, c);
            rank += 1;
        }
    }
    Some(rank)
}

/// `b·x − a·y` on sorted sparse vectors, dropping zeros.
fn combine_columns<T: Exact>(x: &[(u32, T)], b: &T, y: &[(u32, T)], a: &T) -> Option<Vec<(u32, T)>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (row, v) = if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            (x[i - 1].0, T::combine(&x[i - 1].1, b, &zero, &zero)?)
        } else if i >= x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, T::combine(&zero, &zero, &y[j - 1].1, a)?)
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, T::combine(&x[i - 1].1, b, &y[j - 1].1, a)?)
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    Some(out)
}

fn normalize<T: Exact>(c: &mut [(u32, T)]) {
    let Some(first) = c.first() else { return };
    let mut g = first.1.clone();
    for (_, v) in c.iter().skip(1) {
        if g.is_unit() {
            return;
        }
        g = g.gcd(v);
    }
    if g.is_unit() || g.is_zero() {
        return;
    }
    for e in c.iter_mut() {
        e.1 = e.1.div_exact(&g);
    }
}
