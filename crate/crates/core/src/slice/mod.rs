//! Transversal slices to `Ω_v` inside `X_w` in matrix coordinates.
//!
//! A point near `e_v` is a matrix whose row `j` is the `j`-th flag generator
//! `e_{v(j)} + Σ_{k > v(j)} m_{jk} e_k`, with `m_{jk} = 0` unless row `v⁻¹(k)`
//! comes later. The flag meets the reference flag as
//! `dim(W_p ∩ V_q) = p - rank(rows 1..=p, columns q+1..=n)`.
//!
//! Only the free coordinates can be nonzero on the slice, and the slice
//! inside their span is one of three cones. [`SliceModel`] carries both the
//! closed-form cone equations and the minors coming straight from the rank
//! conditions, so one can be sampled against the other.

mod verify;

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::component::{Component, ComponentType};
use crate::error::{Error, Result};
use crate::perm::{bruhat_leq, check_sizes, region_d, Permutation};
use crate::poly::{determinant, Poly};
use crate::rational::{Echelon, Scalar, Q};

pub use verify::{
    sample_cone, sample_off_cone, verify_slice, verify_slice_model, SliceVerdict, SliceWitness,
};

/// Matrix position `(row j, column k)`, 1-indexed.
pub type Position = (usize, usize);

/// Positions of the `v`-shaped coordinate chart allowed to be nonzero on the
/// slice: `k > v(j)`, `j < v⁻¹(k)`, and the rectangle
/// `[j, v⁻¹(k)) × [v(j), k)` inside the region where `r_v > r_w`.
pub fn free_coordinates(v: &Permutation, w: &Permutation) -> Result<Vec<Position>> {
    check_sizes(v, w)?;
    let d = region_d(v, w)?;
    let vinv = v.inverse();
    let n = v.n();
    Ok((1..=n)
        .cartesian_product(1..=n)
        .filter(|&(j, k)| k > v.at(j) && j < vinv.at(k))
        .filter(|&(j, k)| {
            (j..vinv.at(k))
                .cartesian_product(v.at(j)..k)
                .all(|cell| d.contains(&cell))
        })
        .collect())
}

/// Square matrix of exact rationals; row `j` holds the coordinates of the
/// `j`-th generator of the flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagMatrix {
    rows: Vec<Vec<Q>>,
}

impl FlagMatrix {
    /// The coordinate flag of `v`: a 1 at `(j, v(j))`.
    pub fn of_permutation(v: &Permutation) -> Self {
        let n = v.n();
        let rows = (1..=n)
            .map(|j| {
                (1..=n)
                    .map(|k| if k == v.at(j) { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Entry at 1-indexed `(j, k)`.
    pub fn get(&self, j: usize, k: usize) -> &Q {
        &self.rows[j - 1][k - 1]
    }

    /// Whether the matrix lies in the chart of `v`: 1 at `(j, v(j))`, zero left
    /// of it and in every column whose pivot row is not later than `j`.
    pub fn has_shape_of(&self, v: &Permutation) -> bool {
        let vinv = v.inverse();
        let n = self.n();
        n == v.n()
            && (1..=n).all(|j| {
                self.get(j, v.at(j)).is_one()
                    && (1..=n)
                        .filter(|&k| k != v.at(j))
                        .filter(|&k| k < v.at(j) || vinv.at(k) <= j)
                        .all(|k| self.get(j, k).is_zero())
            })
    }
}

/// Whether the flag satisfies `dim(W_p ∩ V_q) >= r_w(p, q)` for all `p, q`.
pub fn in_schubert(w: &Permutation, f: &FlagMatrix) -> bool {
    let n = w.n();
    if f.n() != n {
        return false;
    }
    let r = w.rank_table();
    (0..n).all(|q| {
        let mut echelon = Echelon::new();
        (1..=n).all(|p| {
            echelon.push(f.rows[p - 1][q..].to_vec());
            p - echelon.rank() >= r.get(p, q)
        })
    })
}

/// How the free coordinates (by index into [`SliceModel::free`]) are laid out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "cone", rename_all = "kebab-case")]
pub enum ConeShape {
    /// No free coordinates (`v = w`).
    Point,
    /// Full grid of free entries; the slice is the rank ≤ 1 locus.
    RankOne {
        rows: Vec<usize>,
        cols: Vec<usize>,
        grid: Vec<Vec<usize>>,
    },
    /// One row and one column of free entries. Row entry in column `k` pairs
    /// with the column entry in row `v⁻¹(k)`; the slice is `Σ x y = 0`.
    Quadric {
        pairs: Vec<(usize, usize)>,
        unpaired: Vec<usize>,
    },
    /// `A`: rows × two columns `(c₁, c₂)`; `B`: rows `(v⁻¹(c₁), v⁻¹(c₂))` ×
    /// columns. The slice is `rank A <= 1`, `rank B <= 1`, `A·B = 0`.
    BlockPair {
        a: Vec<[usize; 2]>,
        b: [Vec<usize>; 2],
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceModel {
    pub v: Permutation,
    pub w: Permutation,
    pub ctype: Option<ComponentType>,
    pub free: Vec<Position>,
    pub shape: ConeShape,
    pub closed_equations: Vec<Poly>,
    pub determinantal_equations: Vec<Poly>,
}

impl SliceModel {
    /// The one-point slice at `v = w`.
    pub fn point(w: &Permutation) -> Self {
        Self {
            v: w.clone(),
            w: w.clone(),
            ctype: None,
            free: Vec::new(),
            shape: ConeShape::Point,
            closed_equations: Vec::new(),
            determinantal_equations: Vec::new(),
        }
    }

    pub fn variable_name(&self, i: usize) -> String {
        let (j, k) = self.free[i];
        format!("m_{j}_{k}")
    }

    pub fn render(&self, p: &Poly) -> String {
        p.render(|i| self.variable_name(i))
    }

    /// Dimension of the cone: `l + m + 1`, `|free| - 1`, `l + m + 3`.
    pub fn cone_dimension(&self) -> usize {
        match &self.shape {
            ConeShape::Point => 0,
            ConeShape::RankOne { rows, cols, .. } => rows.len() + cols.len() - 1,
            ConeShape::Quadric { .. } => self.free.len() - 1,
            ConeShape::BlockPair { a, b } => a.len() + b[0].len() + 1,
        }
    }

    /// Number of parameters taken by [`parametrize`](Self::parametrize).
    pub fn parameter_count(&self) -> usize {
        match &self.shape {
            ConeShape::Point => 0,
            ConeShape::RankOne { rows, cols, .. } => rows.len() + cols.len(),
            ConeShape::Quadric { .. } => self.free.len() - 1,
            ConeShape::BlockPair { a, b } => 2 + a.len() + b[0].len(),
        }
    }

    /// Maps parameters onto a point of the cone, as values of the free
    /// coordinates.
    ///
    /// * rank one: `u ⊗ x`;
    /// * quadric: every coordinate but the first paired row entry, which is
    ///   solved for (the first paired column entry must be nonzero);
    /// * block pair: `(u₁, u₂, s, t)` ↦ `A = s ⊗ (u₁, u₂)`,
    ///   `B = (-u₂, u₁) ⊗ t`, i.e. the rank-one `2 × (l+m+2)` matrix
    ///   `[a  b'; a'  -b]` written back into the two blocks.
    pub fn parametrize<T: Scalar>(&self, params: &[T]) -> Vec<T> {
        assert_eq!(params.len(), self.parameter_count(), "parameter count");
        let zero = T::constant(Q::zero());
        let mut out = vec![zero.clone(); self.free.len()];
        match &self.shape {
            ConeShape::Point => {}
            ConeShape::RankOne { rows, grid, .. } => {
                let (u, x) = params.split_at(rows.len());
                for (a, row) in grid.iter().enumerate() {
                    for (b, &idx) in row.iter().enumerate() {
                        out[idx] = u[a].clone() * x[b].clone();
                    }
                }
            }
            ConeShape::Quadric { pairs, unpaired } => {
                let mut it = params.iter().cloned();
                let (x0, y0) = pairs[0];
                out[y0] = it.next().expect("param");
                let mut rest = zero;
                for &(x, y) in &pairs[1..] {
                    out[x] = it.next().expect("param");
                    out[y] = it.next().expect("param");
                    rest = rest + out[x].clone() * out[y].clone();
                }
                for &i in unpaired {
                    out[i] = it.next().expect("param");
                }
                out[x0] = -(rest / out[y0].clone());
            }
            ConeShape::BlockPair { a, b } => {
                let (u1, u2) = (params[0].clone(), params[1].clone());
                let (s, t) = params[2..].split_at(a.len());
                for (i, &[c1, c2]) in a.iter().enumerate() {
                    out[c1] = s[i].clone() * u1.clone();
                    out[c2] = s[i].clone() * u2.clone();
                }
                for (k, (&r1, &r2)) in b[0].iter().zip(&b[1]).enumerate() {
                    out[r1] = -(u2.clone() * t[k].clone());
                    out[r2] = u1.clone() * t[k].clone();
                }
            }
        }
        out
    }

    pub fn satisfies_closed(&self, x: &[Q]) -> bool {
        self.closed_equations.iter().all(|p| p.eval(x).is_zero())
    }

    pub fn satisfies_determinantal(&self, x: &[Q]) -> bool {
        self.determinantal_equations
            .iter()
            .all(|p| p.eval(x).is_zero())
    }

    /// Human-readable summary for reports.
    pub fn summary(&self) -> SliceSummary {
        SliceSummary {
            ctype: self.ctype,
            free: self.free.iter().map(|&(j, k)| [j, k]).collect(),
            cone: self.shape.clone(),
            dimension: self.cone_dimension(),
            equations: self
                .closed_equations
                .iter()
                .map(|p| format!("{} = 0", self.render(p)))
                .collect(),
            determinantal_equation_count: self.determinantal_equations.len(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SliceSummary {
    #[serde(rename = "type")]
    pub ctype: Option<ComponentType>,
    pub free: Vec<[usize; 2]>,
    pub cone: ConeShape,
    pub dimension: usize,
    pub equations: Vec<String>,
    pub determinantal_equation_count: usize,
}

/// Lays out the free coordinates of a component and writes down the cone
/// equations for its type. A layout that does not match the type is an error.
pub fn build_slice(c: &Component, w: &Permutation) -> Result<SliceModel> {
    let v = &c.v;
    let free = free_coordinates(v, w)?;
    let index: BTreeMap<Position, usize> = free.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let shape_err = |reason: String| Error::SliceShape {
        v: v.clone(),
        w: w.clone(),
        reason,
    };
    let var = |i: usize| Poly::var(i);
    let minor2 = |a: usize, b: usize, c: usize, d: usize| {
        (&(&var(a) * &var(d)) - &(&var(b) * &var(c))).normalized()
    };

    let (shape, closed_equations) = match c.ctype {
        ComponentType::T4231 => {
            let rows: Vec<usize> = free.iter().map(|p| p.0).unique().sorted().collect();
            let cols: Vec<usize> = free.iter().map(|p| p.1).unique().sorted().collect();
            if rows.len() * cols.len() != free.len() {
                return Err(shape_err(format!(
                    "free positions {free:?} do not fill a rectangle"
                )));
            }
            let sides = BTreeSet::from([rows.len(), cols.len()]);
            let want = BTreeSet::from([c.l + 1, c.m.unwrap_or(0) + 1]);
            if sides != want {
                return Err(shape_err(format!(
                    "rectangle is {}x{}, expected sides {want:?}",
                    rows.len(),
                    cols.len()
                )));
            }
            let grid: Vec<Vec<usize>> = rows
                .iter()
                .map(|&j| cols.iter().map(|&k| index[&(j, k)]).collect())
                .collect();
            let mut eqs = Vec::new();
            for (r1, r2) in (0..rows.len()).tuple_combinations() {
                for (k1, k2) in (0..cols.len()).tuple_combinations() {
                    eqs.push(minor2(
                        grid[r1][k1],
                        grid[r1][k2],
                        grid[r2][k1],
                        grid[r2][k2],
                    ));
                }
            }
            (ConeShape::RankOne { rows, cols, grid }, eqs)
        }
        ComponentType::T3412Star => {
            let vinv = v.inverse();
            let top = free.iter().map(|p| p.0).min().expect("nonempty slice");
            let last = free.iter().map(|p| p.1).max().expect("nonempty slice");
            if let Some(p) = free.iter().find(|p| p.0 != top && p.1 != last) {
                return Err(shape_err(format!(
                    "{p:?} is neither in row {top} nor column {last}"
                )));
            }
            let mut pairs = Vec::new();
            let mut paired = BTreeSet::new();
            for &(j, k) in free.iter().filter(|p| p.0 == top) {
                if let Some(&partner) = index.get(&(vinv.at(k), last)) {
                    pairs.push((index[&(j, k)], partner));
                    paired.extend([index[&(j, k)], partner]);
                }
            }
            if pairs.is_empty() {
                return Err(shape_err("no paired coordinates".into()));
            }
            let unpaired: Vec<usize> = (0..free.len()).filter(|i| !paired.contains(i)).collect();
            let quadric = pairs
                .iter()
                .fold(Poly::zero(), |acc, &(x, y)| &acc + &(&var(x) * &var(y)));
            (ConeShape::Quadric { pairs, unpaired }, vec![quadric])
        }
        ComponentType::T3412Empty => {
            let (a, b) = find_block_pair(v, &free, &index, c.l + 2)
                .ok_or_else(|| shape_err(format!("no A/B block split of {free:?}")))?;
            let mut eqs = Vec::new();
            for (r1, r2) in a.iter().tuple_combinations() {
                eqs.push(minor2(r1[0], r1[1], r2[0], r2[1]));
            }
            for (k1, k2) in (0..b[0].len()).tuple_combinations() {
                eqs.push(minor2(b[0][k1], b[0][k2], b[1][k1], b[1][k2]));
            }
            for row in &a {
                for (&top, &bottom) in b[0].iter().zip(&b[1]) {
                    let entry = &(&var(row[0]) * &var(top)) + &(&var(row[1]) * &var(bottom));
                    eqs.push(entry);
                }
            }
            (ConeShape::BlockPair { a, b }, eqs)
        }
    };

    let determinantal_equations = determinantal_model(v, w)?;
    Ok(SliceModel {
        v: v.clone(),
        w: w.clone(),
        ctype: Some(c.ctype),
        free,
        shape,
        closed_equations,
        determinantal_equations,
    })
}

/// Index blocks `(A, B)` of a [`ConeShape::BlockPair`].
type Blocks = (Vec<[usize; 2]>, [Vec<usize>; 2]);

/// Searches for columns `c₁ < c₂` such that the free set is exactly
/// `rows × {c₁, c₂}` together with `{v⁻¹(c₁), v⁻¹(c₂)} × cols`, with
/// `|rows| + |cols| = width`.
fn find_block_pair(
    v: &Permutation,
    free: &[Position],
    index: &BTreeMap<Position, usize>,
    width: usize,
) -> Option<Blocks> {
    let vinv = v.inverse();
    let columns: Vec<usize> = free.iter().map(|p| p.1).unique().sorted().collect();
    let all: BTreeSet<Position> = free.iter().copied().collect();
    for (&c1, &c2) in columns.iter().tuple_combinations() {
        let rows_of = |c: usize| -> Vec<usize> {
            free.iter()
                .filter(|p| p.1 == c)
                .map(|p| p.0)
                .sorted()
                .collect()
        };
        let a_rows = rows_of(c1);
        if a_rows.is_empty() || a_rows != rows_of(c2) {
            continue;
        }
        let (r1, r2) = (vinv.at(c1), vinv.at(c2));
        let cols_of = |r: usize| -> Vec<usize> {
            free.iter()
                .filter(|p| p.0 == r && p.1 != c1 && p.1 != c2)
                .map(|p| p.1)
                .sorted()
                .collect()
        };
        let b_cols = cols_of(r1);
        if b_cols.is_empty() || b_cols != cols_of(r2) || a_rows.len() + b_cols.len() != width {
            continue;
        }
        let a_set: BTreeSet<Position> = a_rows.iter().flat_map(|&j| [(j, c1), (j, c2)]).collect();
        let b_set: BTreeSet<Position> = b_cols.iter().flat_map(|&k| [(r1, k), (r2, k)]).collect();
        if !a_set.is_disjoint(&b_set)
            || a_set.union(&b_set).copied().collect::<BTreeSet<_>>() != all
        {
            continue;
        }
        let a = a_rows
            .iter()
            .map(|&j| [index[&(j, c1)], index[&(j, c2)]])
            .collect();
        let b = [
            b_cols.iter().map(|&k| index[&(r1, k)]).collect(),
            b_cols.iter().map(|&k| index[&(r2, k)]).collect(),
        ];
        return Some((a, b));
    }
    None
}

/// Minors expressing `rank(rows 1..=p, columns q+1..=n) <= p - r_w(p, q)` on
/// the free coordinates of `(v, w)`, for every cell `(p, q)`. Identically zero
/// and constant minors are dropped, signs normalized, duplicates removed.
pub fn determinantal_model(v: &Permutation, w: &Permutation) -> Result<Vec<Poly>> {
    if !bruhat_leq(v, w)? {
        return Err(Error::NotBruhatBelow {
            v: v.clone(),
            w: w.clone(),
        });
    }
    let n = v.n();
    let free = free_coordinates(v, w)?;
    let index: BTreeMap<Position, usize> = free.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let entry = |j: usize, k: usize| -> Poly {
        if v.at(j) == k {
            Poly::constant(1)
        } else if let Some(&i) = index.get(&(j, k)) {
            Poly::var(i)
        } else {
            Poly::zero()
        }
    };
    let r = w.rank_table();
    let mut out = BTreeSet::new();
    for p in 1..n {
        for q in 1..n {
            let size = p + 1 - r.get(p, q);
            let block: Vec<Vec<Poly>> = (1..=p)
                .map(|j| (q + 1..=n).map(|k| entry(j, k)).collect())
                .filter(|row: &Vec<Poly>| row.iter().any(|x| !x.is_zero()))
                .collect();
            let live_cols: Vec<usize> = (0..n - q)
                .filter(|&c| block.iter().any(|row| !row[c].is_zero()))
                .collect();
            if size > block.len() || size > live_cols.len() {
                continue;
            }
            for rows in (0..block.len()).combinations(size) {
                for cols in live_cols.iter().combinations(size) {
                    let m: Vec<Vec<Poly>> = rows
                        .iter()
                        .map(|&a| cols.iter().map(|&&b| block[a][b].clone()).collect())
                        .collect();
                    let det = determinant(&m);
                    if !det.is_constant() {
                        out.insert(det.normalized());
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// The chart matrix of `s` with the given values on its free coordinates.
pub fn embed_point(s: &SliceModel, assignment: &[Q]) -> Result<FlagMatrix> {
    if assignment.len() != s.free.len() {
        return Err(Error::AssignmentLength {
            expected: s.free.len(),
            got: assignment.len(),
        });
    }
    let mut f = FlagMatrix::of_permutation(&s.v);
    for (&(j, k), x) in s.free.iter().zip(assignment) {
        f.rows[j - 1][k - 1] = x.clone();
    }
    Ok(f)
}

#[cfg(test)]
mod tests;
