//! Zariski tangent dimensions of `X_w` at torus-fixed points, counted by
//! transpositions, and the singular locus they determine.
//!
//! `m(w, v) = #{t : v·t <= w}`. The fixed point `e_v` is singular exactly when
//! `m(w, v) > l(w)`; since `m` is constant along the cell of `v`, the singular
//! locus is the union of the `X_v` with positive excess and its components are
//! the Bruhat-maximal such `v`.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{bruhat_leq, bruhat_leq_unchecked, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangentReport {
    pub v: Permutation,
    pub w: Permutation,
    /// Tangent dimension `m(w, v)`.
    pub m: usize,
    /// `m - l(w)`; positive exactly at singular points.
    pub excess: i64,
}

pub fn tangent_dimension(v: &Permutation, w: &Permutation) -> Result<TangentReport> {
    if !bruhat_leq(v, w)? {
        return Err(Error::NotBruhatBelow {
            v: v.clone(),
            w: w.clone(),
        });
    }
    let m = tangent_count(v, w);
    Ok(TangentReport {
        v: v.clone(),
        w: w.clone(),
        m,
        excess: m as i64 - w.length() as i64,
    })
}

fn tangent_count(v: &Permutation, w: &Permutation) -> usize {
    (1..=v.n())
        .tuple_combinations()
        .filter(|&(i, j)| bruhat_leq_unchecked(&v.swap_positions(i, j), w))
        .count()
}

/// The lower interval `[e, w]`, in lexicographic order.
pub fn lower_interval(w: &Permutation) -> Vec<Permutation> {
    Permutation::all(w.n())
        .filter(|v| bruhat_leq_unchecked(v, w))
        .collect()
}

/// Every `v <= w` at which `X_w` is singular.
pub fn singular_points(w: &Permutation) -> BTreeSet<Permutation> {
    let lw = w.length();
    lower_interval(w)
        .into_iter()
        .filter(|v| tangent_count(v, w) > lw)
        .collect()
}

/// Bruhat-maximal elements of [`singular_points`]: one per irreducible
/// component of the singular locus.
pub fn singular_components_oracle(w: &Permutation) -> BTreeSet<Permutation> {
    maximal_elements(&singular_points(w))
}

pub(crate) fn maximal_elements(set: &BTreeSet<Permutation>) -> BTreeSet<Permutation> {
    set.iter()
        .filter(|v| !set.iter().any(|u| u != *v && bruhat_leq_unchecked(v, u)))
        .cloned()
        .collect()
}
