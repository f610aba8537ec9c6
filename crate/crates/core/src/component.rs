//! Irreducible components of `Sing(X_w)` and their generic singularity type.
//!
//! Components come from the tangent oracle. The type and its parameters are
//! recovered from the codimension `d = l(w) - l(v)` and the tangent excess
//! `e = m(w, v) - l(w)`:
//!
//! | type      | `d`         | `e`         |
//! |-----------|-------------|-------------|
//! | 4231      | `l + m + 1` | `l m`       |
//! | 34*12     | `2l + 3`    | `1`         |
//! | 34∅12     | `l + m + 3` | `l + m + 1` |
//!
//! The signatures overlap (4231 with `l = 1` looks like 34∅12), so one
//! feature of the diagram breaks the tie: in a 4231 frame the leftmost moved
//! point of `w` is also the highest moved point.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{bruhat_leq, region_d, Permutation, Region};
use crate::tangent::{singular_components_oracle, tangent_dimension};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentType {
    /// Cone over `(l+1) × (m+1)` matrices of rank at most one.
    T4231,
    /// Quadratic cone of dimension `2l + 3`.
    T3412Star,
    /// Cone over `2 × (l+m+2)` matrices of rank at most one.
    T3412Empty,
}

impl ComponentType {
    pub fn label(self) -> &'static str {
        match self {
            Self::T4231 => "4231",
            Self::T3412Star => "3412*",
            Self::T3412Empty => "3412empty",
        }
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for ComponentType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// A component `X_v` of the singular locus of `X_w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub v: Permutation,
    pub w: Permutation,
    #[serde(rename = "type")]
    pub ctype: ComponentType,
    /// 4231: the smaller of the two parameters. 34*12: the single parameter.
    /// 34∅12: the aggregate `l + m`, the split being undetermined.
    pub l: usize,
    /// Only present for 4231, where `l <= m`.
    pub m: Option<usize>,
    /// Codimension `l(w) - l(v)`.
    #[serde(rename = "codim")]
    pub d: usize,
    /// Tangent excess `m(w, v) - l(w)`.
    #[serde(rename = "excess")]
    pub e: usize,
    #[serde(skip)]
    pub region: Region,
}

impl Component {
    /// Free slice coordinates predicted by the type, `m(w, v) - l(v)`.
    pub fn expected_free(&self) -> usize {
        match self.ctype {
            ComponentType::T4231 => (self.l + 1) * (self.m.unwrap_or(0) + 1),
            ComponentType::T3412Star => 2 * self.l + 4,
            ComponentType::T3412Empty => 2 * (self.l + 2),
        }
    }

    #[cfg(test)]
    pub(crate) fn synthetic(ctype: ComponentType, l: usize, m: Option<usize>) -> Self {
        let id = Permutation::identity(1);
        Self {
            v: id.clone(),
            w: id,
            ctype,
            l,
            m,
            d: 0,
            e: 0,
            region: Region::new(),
        }
    }
}

/// Classifies a component pair. Expects `v` to be one of
/// [`singular_components_oracle`]`(w)`; only `v < w` and `e > 0` are checked.
pub fn classify_component(v: &Permutation, w: &Permutation) -> Result<Component> {
    let fail = |reason: String| Error::Classification {
        v: v.clone(),
        w: w.clone(),
        reason,
    };
    let report = tangent_dimension(v, w)?;
    if report.excess <= 0 {
        return Err(fail(format!("no tangent excess (e = {})", report.excess)));
    }
    let d = w.length() - v.length();
    let e = report.excess as usize;

    let moved: Vec<usize> = (1..=w.n()).filter(|&i| v.at(i) != w.at(i)).collect();
    let top = moved.iter().map(|&i| w.at(i)).max().expect("v != w");
    let leading_is_top = w.at(moved[0]) == top;

    let (ctype, l, m) = if leading_is_top {
        // {l, m} are the roots of x^2 - (d - 1) x + e.
        let sum = d as i64 - 1;
        let disc = sum * sum - 4 * e as i64;
        let root = integer_sqrt(disc).ok_or_else(|| {
            fail(format!(
                "4231 frame with d = {d}, e = {e}: no integral split"
            ))
        })?;
        if (sum - root) % 2 != 0 || sum - root < 2 {
            return Err(fail(format!(
                "4231 frame with d = {d}, e = {e}: bad parameters"
            )));
        }
        let small = ((sum - root) / 2) as usize;
        let large = ((sum + root) / 2) as usize;
        (ComponentType::T4231, small, Some(large))
    } else if e == 1 {
        if d < 3 || !(d - 3).is_multiple_of(2) {
            return Err(fail(format!(
                "34*12 frame with even or small codimension {d}"
            )));
        }
        (ComponentType::T3412Star, (d - 3) / 2, None)
    } else {
        if d < 3 || e + 2 != d {
            return Err(fail(format!(
                "34∅12 frame needs e = d - 2, got d = {d}, e = {e}"
            )));
        }
        (ComponentType::T3412Empty, d - 3, None)
    };

    Ok(Component {
        v: v.clone(),
        w: w.clone(),
        ctype,
        l,
        m,
        d,
        e,
        region: region_d(v, w)?,
    })
}

fn integer_sqrt(x: i64) -> Option<i64> {
    if x < 0 {
        return None;
    }
    let r = (x as f64).sqrt().round() as i64;
    (r - 1..=r + 1).find(|&s| s >= 0 && s * s == x)
}

/// All components of `Sing(X_w)`, sorted by `v`.
pub fn enumerate_components(w: &Permutation) -> Result<Vec<Component>> {
    singular_components_oracle(w)
        .iter()
        .map(|v| classify_component(v, w))
        .collect()
}

/// Checks the codimension formula and both sides of the tangent-dimension
/// identity for the component's type against the oracle.
pub fn verify_formulas(c: &Component, w: &Permutation) -> bool {
    let Ok(true) = bruhat_leq(&c.v, w) else {
        return false;
    };
    let Ok(report) = tangent_dimension(&c.v, w) else {
        return false;
    };
    let oracle = report.m;
    let (lw, lv) = (w.length(), c.v.length());
    let d = lw - lv;
    let l = c.l;
    match c.ctype {
        ComponentType::T4231 => {
            let Some(m) = c.m else { return false };
            d == l + m + 1 && lw + l * m == oracle && lv + (l + 1) * (m + 1) == oracle
        }
        ComponentType::T3412Star => d == 2 * l + 3 && lw + 1 == oracle && lv + 2 * l + 4 == oracle,
        ComponentType::T3412Empty => {
            d == l + 3 && lw + l + 1 == oracle && lv + 2 * (l + 2) == oracle
        }
    }
}
