//! Sparse multivariate polynomials with integer coefficients, enough to write
//! down minors and quadrics over the free slice coordinates.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_traits::Zero;

use crate::rational::{q, Q};

/// Multiset of variable indices, sorted ascending.
pub type Monomial = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, i64>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        if c != 0 {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn var(i: usize) -> Self {
        Self {
            terms: BTreeMap::from([(vec![i], 1)]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Vec::is_empty)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    /// `Some(d)` when every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).all_equal_value().ok()
    }

    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().flatten().copied().unique()
    }

    /// Normalizes the sign so the leading term is positive.
    pub fn normalized(self) -> Self {
        match self.terms.values().next() {
            Some(&c) if c < 0 => -self,
            _ => self,
        }
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        self.terms
            .iter()
            .map(|(mono, &c)| mono.iter().fold(q(c), |acc, &i| acc * &x[i]))
            .fold(Q::zero(), |a, b| a + b)
    }

    /// Renders as a sum of monomials with `name(i)` for variable `i`.
    pub fn render(&self, name: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (mono, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let body = mono
                .iter()
                .chunk_by(|&&i| i)
                .into_iter()
                .map(|(i, g)| match g.count() {
                    1 => name(i),
                    e => format!("{}^{e}", name(i)),
                })
                .join("*");
            let a = c.abs();
            match (a, body.is_empty()) {
                (_, true) => out.push_str(&a.to_string()),
                (1, false) => out.push_str(&body),
                (_, false) => out.push_str(&format!("{a}*{body}")),
            }
        }
        out
    }

    fn add_term(&mut self, mono: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, &c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, &c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &o.terms {
                let mut m: Monomial = a.iter().chain(b).copied().collect();
                m.sort_unstable();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -*c;
        }
        self
    }
}

/// Determinant by cofactor expansion along the first row, skipping zeros.
pub fn determinant(m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => Poly::constant(1),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        k => {
            let mut acc = Poly::zero();
            for c in 0..k {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][c] * &determinant(&minor);
                acc = if c % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_render() {
        let (x, y) = (Poly::var(0), Poly::var(1));
        let p = &(&x * &y) - &(&y * &x);
        assert!(p.is_zero());
        let p = &(&x * &x) - &Poly::constant(3);
        assert_eq!(p.render(|i| format!("x{i}")), "-3 + x0^2");
        let p = &(&x * &y) + &(&Poly::constant(-2) * &y);
        assert_eq!(p.render(|i| format!("x{i}")), "x0*x1 - 2*x1");
        assert_eq!(p.homogeneous_degree(), None);
        assert_eq!((&x * &y).homogeneous_degree(), Some(2));
        assert_eq!(p.eval(&[q(3), q(5)]), q(5));
    }

    #[test]
    fn determinants() {
        let v = |i| Poly::var(i);
        let one = Poly::constant(1);
        let z = Poly::zero();
        // det [[a, b, 0], [0, 1, c], [1, 0, d]] = a d + b c
        let m = vec![
            vec![v(0), v(1), z.clone()],
            vec![z.clone(), one.clone(), v(2)],
            vec![one, z, v(3)],
        ];
        let d = determinant(&m);
        let expect = &(&v(0) * &v(3)) + &(&v(1) * &v(2));
        assert_eq!(d, expect);
    }
}
