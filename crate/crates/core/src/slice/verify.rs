//! Exact-rational sampling checks of a slice model against `X_w`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{build_slice, embed_point, in_schubert, ConeShape, SliceModel};
use crate::component::Component;
use crate::error::Result;
use crate::perm::Permutation;
use crate::rational::{jacobian, q, rank, Q};
use crate::tangent::tangent_dimension;

const DRAW: std::ops::RangeInclusive<i64> = -9..=9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceVerdict {
    /// `|free| = m(w, v) - l(v)` and the cone equations have no linear part.
    pub tangent_ok: bool,
    /// Jacobian rank of the parametrization equals `l(w) - l(v)`.
    pub dim_ok: bool,
    /// Every cone sample lies in `X_w`.
    pub containment_ok: bool,
    /// No off-cone sample lies in `X_w`.
    pub exclusion_ok: bool,
    /// Cone equations and rank minors vanish on exactly the same samples.
    pub equivalence_ok: bool,
    pub samples: usize,
    pub dimension: usize,
    pub seed: u64,
    /// First failed check, with the assignment that broke it.
    pub witness: Option<SliceWitness>,
}

impl SliceVerdict {
    pub fn all_ok(&self) -> bool {
        self.tangent_ok
            && self.dim_ok
            && self.containment_ok
            && self.exclusion_ok
            && self.equivalence_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceWitness {
    pub check: String,
    pub assignment: Vec<String>,
}

fn draw(rng: &mut impl Rng, nonzero: bool) -> Q {
    loop {
        let x = rng.random_range(DRAW);
        if x != 0 || !nonzero {
            return q(x);
        }
    }
}

/// Parameters for one cone point. `generic` makes every parameter nonzero,
/// which keeps the Jacobian at full rank.
fn draw_params(s: &SliceModel, rng: &mut impl Rng, generic: bool) -> Vec<Q> {
    // The quadric parametrization divides by its first parameter.
    let quadric = matches!(s.shape, ConeShape::Quadric { .. });
    (0..s.parameter_count())
        .map(|i| draw(rng, generic || (quadric && i == 0)))
        .collect()
}

fn cone_samples(s: &SliceModel, trials: usize, rng: &mut impl Rng) -> Vec<Vec<Q>> {
    (0..trials)
        .map(|_| {
            if s.free.is_empty() {
                return Vec::new();
            }
            loop {
                let x = s.parametrize(&draw_params(s, rng, false));
                if x.iter().any(|c| !c.is_zero()) {
                    return x;
                }
            }
        })
        .collect()
}

fn off_cone_samples(s: &SliceModel, trials: usize, rng: &mut impl Rng) -> Vec<Vec<Q>> {
    if s.closed_equations.is_empty() {
        return Vec::new();
    }
    (0..trials)
        .map(|_| loop {
            let x: Vec<Q> = (0..s.free.len()).map(|_| draw(rng, false)).collect();
            if !s.satisfies_closed(&x) {
                return x;
            }
        })
        .collect()
}

/// `trials` nonzero points of the cone, each satisfying every closed equation.
pub fn sample_cone(s: &SliceModel, trials: usize, seed: u64) -> Vec<Vec<Q>> {
    cone_samples(s, trials, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// `trials` integer points of the free span violating some closed equation.
pub fn sample_off_cone(s: &SliceModel, trials: usize, seed: u64) -> Vec<Vec<Q>> {
    off_cone_samples(s, trials, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Derives the stream for one `(v, w)` pair from the sweep seed.
pub(crate) fn pair_seed(seed: u64, v: &Permutation, w: &Permutation) -> u64 {
    // FNV-1a over the seed and both one-line notations.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let bytes = seed
        .to_le_bytes()
        .into_iter()
        .chain(v.values().iter().chain(w.values()).map(|&x| x as u8));
    for b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn verify_slice(
    c: &Component,
    w: &Permutation,
    trials: usize,
    seed: u64,
) -> Result<SliceVerdict> {
    let s = build_slice(c, w)?;
    verify_slice_model(&s, trials, seed)
}

/// Runs all five checks on `s`. `seed` is split per `(v, w)`.
pub fn verify_slice_model(s: &SliceModel, trials: usize, seed: u64) -> Result<SliceVerdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(pair_seed(seed, &s.v, &s.w));
    let codim = s.w.length() - s.v.length();
    let mut witness: Option<SliceWitness> = None;
    let mut fail = |check: &str, x: &[Q]| {
        if witness.is_none() {
            witness = Some(SliceWitness {
                check: check.into(),
                assignment: x.iter().map(ToString::to_string).collect(),
            });
        }
        false
    };

    let m = tangent_dimension(&s.v, &s.w)?.m;
    let tangent_ok = s.free.len() + s.v.length() == m
        && s.closed_equations
            .iter()
            .all(|p| p.homogeneous_degree() == Some(2))
        || fail("tangent", &[]);

    let dim_ok = if s.free.is_empty() {
        codim == 0
    } else {
        let point = draw_params(s, &mut rng, true);
        let jac = jacobian(|p| s.parametrize(p), &point);
        let r = rank(jac);
        (r == codim && r == s.cone_dimension()) || fail("dimension", &point)
    };

    let cone = cone_samples(s, trials, &mut rng);
    let off = off_cone_samples(s, trials, &mut rng);

    let mut containment_ok = true;
    for x in &cone {
        let f = embed_point(s, x)?;
        let ok = s.satisfies_closed(x) && f.has_shape_of(&s.v) && in_schubert(&s.w, &f);
        containment_ok &= ok || fail("containment", x);
    }

    let mut exclusion_ok = true;
    for x in &off {
        exclusion_ok &= !in_schubert(&s.w, &embed_point(s, x)?) || fail("exclusion", x);
    }

    let mut equivalence_ok = true;
    for x in cone.iter().chain(&off) {
        equivalence_ok &=
            s.satisfies_closed(x) == s.satisfies_determinantal(x) || fail("equivalence", x);
    }

    Ok(SliceVerdict {
        tangent_ok,
        dim_ok,
        containment_ok,
        exclusion_ok,
        equivalence_ok,
        samples: cone.len() + off.len(),
        dimension: s.cone_dimension(),
        seed,
        witness,
    })
}
