//! Exact rational arithmetic helpers: rank by Gaussian elimination and dual
//! numbers for exact Jacobians.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rank of a dense matrix given by rows.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            let (top, rest) = rows.split_at_mut(r);
            for (x, y) in rest[0][col..].iter_mut().zip(&top[rank][col..]) {
                *x -= &factor * y;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Row-echelon basis that grows one vector at a time and reports its rank.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    /// `(pivot column, row)`, each row normalized to 1 at its pivot.
    basis: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self { basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Inserts `row`; returns whether it raised the rank.
    pub fn push(&mut self, mut row: Vec<Q>) -> bool {
        for (pc, b) in &self.basis {
            if row[*pc].is_zero() {
                continue;
            }
            let f = row[*pc].clone();
            for (x, y) in row.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[pc].recip();
        for x in &mut row {
            *x *= &inv;
        }
        self.basis.push((pc, row));
        true
    }
}

/// Operations needed to evaluate a parametrization over `Q` and over dual
/// numbers alike.
pub trait Scalar:
    Clone
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn constant(c: Q) -> Self;
}

impl Scalar for Q {
    fn constant(c: Q) -> Self {
        c
    }
}

/// `re + eps·ε` with `ε² = 0`; the `eps` part carries an exact directional
/// derivative through rational expressions.
#[derive(Debug, Clone, PartialEq)]
pub struct Dual {
    pub re: Q,
    pub eps: Q,
}

impl Dual {
    pub fn new(re: Q, eps: Q) -> Self {
        Self { re, eps }
    }
}

impl Scalar for Dual {
    fn constant(c: Q) -> Self {
        Self::new(c, Q::zero())
    }
}

impl Add for Dual {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.eps + o.eps)
    }
}

impl Sub for Dual {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.eps - o.eps)
    }
}

impl Mul for Dual {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let eps = &self.re * &o.eps + &self.eps * &o.re;
        Self::new(self.re * o.re, eps)
    }
}

impl Div for Dual {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let eps = (&self.eps * &o.re - &self.re * &o.eps) / (&o.re * &o.re);
        Self::new(self.re / o.re, eps)
    }
}

impl Neg for Dual {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.eps)
    }
}

/// Exact Jacobian of `f` at `point`, one row per output coordinate.
pub fn jacobian<F>(f: F, point: &[Q]) -> Vec<Vec<Q>>
where
    F: Fn(&[Dual]) -> Vec<Dual>,
{
    let columns: Vec<Vec<Q>> = (0..point.len())
        .map(|i| {
            let seeded: Vec<Dual> = point
                .iter()
                .enumerate()
                .map(|(k, x)| Dual::new(x.clone(), if k == i { Q::one() } else { Q::zero() }))
                .collect();
            f(&seeded).into_iter().map(|d| d.eps).collect()
        })
        .collect();
    let nout = columns.first().map_or(0, Vec::len);
    (0..nout)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(m(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])), 2);
        assert_eq!(rank(Vec::new()), 0);
    }

    #[test]
    fn echelon_tracks_rank() {
        let rows = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1], &[1, 3, 4]]);
        let mut e = Echelon::new();
        let grew: Vec<bool> = rows.into_iter().map(|r| e.push(r)).collect();
        assert_eq!(grew, [true, false, true, false]);
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn dual_jacobian_of_rational_map() {
        // f(x, y) = (x y, x / y) at (2, 3)
        let f = |p: &[Dual]| vec![p[0].clone() * p[1].clone(), p[0].clone() / p[1].clone()];
        let j = jacobian(f, &[q(2), q(3)]);
        assert_eq!(j[0], vec![q(3), q(2)]);
        assert_eq!(
            j[1],
            vec![Q::new(1.into(), 3.into()), Q::new((-2).into(), 9.into())]
        );
    }
}
