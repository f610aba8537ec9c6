//! Kazhdan–Lusztig polynomials: closed forms for singular-locus components
//! and the general recursion they are checked against.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::component::{Component, ComponentType};
use crate::error::{Error, Result};
use crate::perm::{bruhat_leq, bruhat_leq_unchecked, Permutation};

/// Polynomial in `q` with nonnegative integer coefficients; `coeffs[i]` is the
/// coefficient of `q^i`. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct KlPoly {
    pub coeffs: Vec<u64>,
}

impl KlPoly {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for KlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".into(),
                (1, c) => format!("{c}q"),
                (i, 1) => format!("q^{i}"),
                (i, c) => format!("{c}q^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// The closed form attached to a classified component.
pub fn kl_closed_form(c: &Component) -> KlPoly {
    match c.ctype {
        ComponentType::T4231 => {
            let k = c.l.min(c.m.unwrap_or(c.l));
            KlPoly::new(vec![1; k + 1])
        }
        ComponentType::T3412Star => {
            let mut coeffs = vec![0; c.l + 2];
            coeffs[0] = 1;
            coeffs[c.l + 1] = 1;
            KlPoly::new(coeffs)
        }
        ComponentType::T3412Empty => KlPoly::new(vec![1, 1]),
    }
}

/// Convenience wrapper around a fresh [`KlTable`].
pub fn kl_recursion(v: &Permutation, w: &Permutation) -> Result<KlPoly> {
    KlTable::new().polynomial(v, w)
}

type Coeffs = Vec<i64>;

/// Memoized Kazhdan–Lusztig recursion over `S_n`.
///
/// Each table is single-owner state; sweeps give every worker its own table.
#[derive(Debug, Default)]
pub struct KlTable {
    memo: HashMap<(Permutation, Permutation), Coeffs>,
    mu: HashMap<Permutation, Vec<(Permutation, i64)>>,
}

impl KlTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized pairs.
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// `P_{v,w}`, exact. Errors unless `v <= w`.
    pub fn polynomial(&mut self, v: &Permutation, w: &Permutation) -> Result<KlPoly> {
        if !bruhat_leq(v, w)? {
            return Err(Error::NotBruhatBelow {
                v: v.clone(),
                w: w.clone(),
            });
        }
        let coeffs = self.p(v, w);
        let coeffs = coeffs
            .into_iter()
            .map(|c| u64::try_from(c).expect("negative Kazhdan-Lusztig coefficient"))
            .collect();
        Ok(KlPoly::new(coeffs))
    }

    fn p(&mut self, x: &Permutation, w: &Permutation) -> Coeffs {
        if !bruhat_leq_unchecked(x, w) {
            return Vec::new();
        }
        if x == w {
            return vec![1];
        }
        let key = (x.clone(), w.clone());
        if let Some(c) = self.memo.get(&key) {
            return c.clone();
        }

        // Smallest left descent s = s_i of w: i + 1 precedes i in w.
        let winv = w.inverse();
        let i = (1..w.n())
            .find(|&i| winv.at(i + 1) < winv.at(i))
            .expect("w > x has a left descent");
        let v = w.swap_values(i, i + 1);
        let sx = x.swap_values(i, i + 1);
        let xinv = x.inverse();
        let sx_below_x = xinv.at(i + 1) < xinv.at(i);

        let (shift_sx, shift_x) = if sx_below_x { (0, 1) } else { (1, 0) };
        let mut out = Vec::new();
        add_shifted(&mut out, &self.p(&sx, &v), shift_sx, 1);
        add_shifted(&mut out, &self.p(x, &v), shift_x, 1);

        let lw = w.length();
        for (z, mu) in self.mu_list(&v) {
            let zinv = z.inverse();
            let sz_below_z = zinv.at(i + 1) < zinv.at(i);
            if !sz_below_z || !bruhat_leq_unchecked(x, &z) {
                continue;
            }
            let pxz = self.p(x, &z);
            add_shifted(&mut out, &pxz, (lw - z.length()) / 2, -mu);
        }
        trim(&mut out);
        self.memo.insert(key, out.clone());
        out
    }

    /// All `z < v` with nonzero `μ(z, v)`, the coefficient of
    /// `q^{(l(v) - l(z) - 1) / 2}` in `P_{z,v}`.
    fn mu_list(&mut self, v: &Permutation) -> Vec<(Permutation, i64)> {
        if let Some(list) = self.mu.get(v) {
            return list.clone();
        }
        let lv = v.length();
        let below: Vec<Permutation> = Permutation::all(v.n())
            .filter(|z| z != v && bruhat_leq_unchecked(z, v))
            .filter(|z| (lv - z.length()) % 2 == 1)
            .collect();
        let mut list = Vec::new();
        for z in below {
            let k = (lv - z.length() - 1) / 2;
            let mu = self.p(&z, v).get(k).copied().unwrap_or(0);
            if mu != 0 {
                list.push((z, mu));
            }
        }
        self.mu.insert(v.clone(), list.clone());
        list
    }
}

fn add_shifted(out: &mut Coeffs, poly: &[i64], shift: usize, scale: i64) {
    if poly.is_empty() {
        return;
    }
    if out.len() < poly.len() + shift {
        out.resize(poly.len() + shift, 0);
    }
    for (k, &c) in poly.iter().enumerate() {
        out[k + shift] += scale * c;
    }
}

fn trim(c: &mut Coeffs) {
    while c.last() == Some(&0) {
        c.pop();
    }
}
