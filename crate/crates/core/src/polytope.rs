//! Brute-force ground truth for faces of the lifted multicut polytope.
//!
//! Validity, face dimension and facet status of an arbitrary integer
//! inequality are read off the enumerated feasible set. Ranks are computed by
//! fraction-free (Bareiss) elimination, so no tolerances are involved.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::multicut::{enumerate_feasible, LiftedInstance, MulticutVector};

/// `Σ coeffs[e]·x_e ≤ rhs`. Absent pairs have coefficient zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearInequality {
    coeffs: BTreeMap<Edge, i64>,
    rhs: i64,
}

impl LinearInequality {
    pub fn new(coeffs: BTreeMap<Edge, i64>, rhs: i64) -> Self {
        let coeffs = coeffs.into_iter().filter(|&(_, c)| c != 0).collect();
        LinearInequality { coeffs, rhs }
    }

    /// `0 ≤ x_e`, stored as `-x_e ≤ 0`.
    pub fn lower_box(e: Edge) -> Self {
        Self::new(BTreeMap::from([(e, -1)]), 0)
    }

    /// `x_e ≤ 1`.
    pub fn upper_box(e: Edge) -> Self {
        Self::new(BTreeMap::from([(e, 1)]), 1)
    }

    /// `1 - x_f ≤ Σ_{e∈δ} (1 - x_e)`, normalised to
    /// `Σ_{e∈δ} x_e - x_f ≤ |δ| - 1`. No validation.
    pub fn cut(f: Edge, delta: &[Edge]) -> Self {
        let mut coeffs: BTreeMap<Edge, i64> = delta.iter().map(|&e| (e, 1)).collect();
        *coeffs.entry(f).or_insert(0) -= 1;
        Self::new(coeffs, delta.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &BTreeMap<Edge, i64> {
        &self.coeffs
    }

    pub fn rhs(&self) -> i64 {
        self.rhs
    }

    fn check_domain(&self, inst: &LiftedInstance) -> Result<()> {
        match self.coeffs.keys().find(|&&e| !inst.contains_pair(e)) {
            Some(e) => Err(Error::InvalidInput(format!(
                "coefficient on {e}, which is not in E ∪ F"
            ))),
            None => Ok(()),
        }
    }

    /// Coefficients in coordinate order.
    pub fn dense(&self, inst: &LiftedInstance) -> Result<Vec<i64>> {
        self.check_domain(inst)?;
        let mut out = vec![0; inst.dimension()];
        for (&e, &c) in &self.coeffs {
            out[inst.coord_index(e).unwrap()] = c;
        }
        Ok(out)
    }

    /// Left-hand side at `x`.
    pub fn evaluate(&self, inst: &LiftedInstance, x: &MulticutVector) -> Result<i64> {
        let dense = self.dense(inst)?;
        if x.len() != dense.len() {
            return Err(Error::InvalidVector("vector length differs from E ∪ F".into()));
        }
        Ok(dense
            .iter()
            .zip(x.values())
            .map(|(&c, &v)| c * i64::from(v))
            .sum())
    }
}

impl fmt::Display for LinearInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, &c)) in self.coeffs.iter().enumerate() {
            let mag = c.unsigned_abs();
            let term = if mag == 1 {
                format!("x[{e}]")
            } else {
                format!("{mag}*x[{e}]")
            };
            match (i, c < 0) {
                (0, false) => write!(f, "{term}")?,
                (0, true) => write!(f, "-{term}")?,
                (_, false) => write!(f, " + {term}")?,
                (_, true) => write!(f, " - {term}")?,
            }
        }
        write!(f, " <= {}", self.rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxSide {
    Lower,
    Upper,
}

/// Box inequality on a pair of `E ∪ F`.
pub fn box_inequality(inst: &LiftedInstance, e: Edge, side: BoxSide) -> Result<LinearInequality> {
    if !inst.contains_pair(e) {
        return Err(Error::InvalidInput(format!("{e} is not in E ∪ F")));
    }
    Ok(match side {
        BoxSide::Lower => LinearInequality::lower_box(e),
        BoxSide::Upper => LinearInequality::upper_box(e),
    })
}

/// Cut inequality for `f ∈ F` and a `uw`-cut `δ ⊆ E`.
pub fn cut_to_inequality(inst: &LiftedInstance, f: Edge, delta: &[Edge]) -> Result<LinearInequality> {
    if !inst.is_lifted(f) {
        return Err(Error::InvalidCut(format!("{f} is not in F")));
    }
    let mut sorted = delta.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidCut("cut lists an edge twice".into()));
    }
    if let Some(e) = sorted.iter().find(|&&e| inst.graph().edge_index(e).is_none()) {
        return Err(Error::InvalidCut(format!("{e} is not an edge of G")));
    }
    if !crate::cut_facet::disconnects(inst, f, &sorted)? {
        return Err(Error::InvalidCut(format!("removing the edges does not separate {f}")));
    }
    Ok(LinearInequality::cut(f, &sorted))
}

/// Validity and face dimension of one inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceReport {
    pub valid: bool,
    pub tight_count: usize,
    /// `-1` for the empty face.
    pub face_dim: i64,
    pub is_facet: bool,
    /// `|E ∪ F|`, the dimension of the polytope.
    pub ambient_dim: usize,
}

impl fmt::Display for FaceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "valid: {}; tight vectors: {}; face dim: {} of {}; facet: {}",
            self.valid, self.tight_count, self.face_dim, self.ambient_dim, self.is_facet
        )
    }
}

pub fn face_report(inst: &LiftedInstance, ineq: &LinearInequality) -> Result<FaceReport> {
    let feasible = enumerate_feasible(inst)?;
    face_report_in(inst, &feasible, ineq)
}

/// [`face_report`] against a precomputed feasible set.
pub fn face_report_in(
    inst: &LiftedInstance,
    feasible: &[MulticutVector],
    ineq: &LinearInequality,
) -> Result<FaceReport> {
    let coeffs = ineq.dense(inst)?;
    let mut valid = true;
    let mut tight = Vec::new();
    for x in feasible {
        let lhs: i64 = coeffs
            .iter()
            .zip(x.values())
            .map(|(&c, &v)| c * i64::from(v))
            .sum();
        if lhs > ineq.rhs() {
            valid = false;
        } else if lhs == ineq.rhs() {
            tight.push(x.values().iter().map(|&v| i64::from(v)).collect::<Vec<_>>());
        }
    }
    let face_dim = affine_rank(&tight)?;
    let ambient_dim = inst.dimension();
    Ok(FaceReport {
        valid,
        tight_count: tight.len(),
        face_dim,
        is_facet: valid && face_dim == ambient_dim as i64 - 1,
        ambient_dim,
    })
}

/// Dimension of the affine hull: `-1` for no points, otherwise the rank of
/// `{v - v₀}`.
pub fn affine_rank(vectors: &[Vec<i64>]) -> Result<i64> {
    let Some(first) = vectors.first() else {
        return Ok(-1);
    };
    if let Some(v) = vectors.iter().find(|v| v.len() != first.len()) {
        return Err(Error::InvalidInput(format!(
            "vectors of length {} and {}",
            first.len(),
            v.len()
        )));
    }
    let diffs: Vec<Vec<i64>> = vectors[1..]
        .iter()
        .map(|v| v.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Ok(rank(&diffs) as i64)
}

/// Exact rank of an integer matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let wide: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| i128::from(v)).collect())
        .collect();
    match bareiss_rank_i128(wide) {
        Some(r) => r,
        None => bareiss_rank_big(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        ),
    }
}

/// Bareiss elimination in `i128`; `None` if an intermediate overflows.
fn bareiss_rank_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(p, r);
        let pivot = a[r][c];
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom {
            let factor = row[c];
            for (x, &y) in row[c + 1..].iter_mut().zip(&pivot_row[c + 1..]) {
                let num = pivot.checked_mul(*x)?.checked_sub(factor.checked_mul(y)?)?;
                debug_assert_eq!(num % prev, 0, "Bareiss division is exact");
                *x = num / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let pivot = a[r][c].clone();
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom {
            let factor = row[c].clone();
            for (x, y) in row[c + 1..].iter_mut().zip(&pivot_row[c + 1..]) {
                *x = (&pivot * &*x - &factor * y) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn affine_rank_examples() {
        assert_eq!(affine_rank(&[]).unwrap(), -1);
        assert_eq!(affine_rank(&[vec![1, 1, 1]]).unwrap(), 0);
        assert_eq!(
            affine_rank(&[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap(),
            2
        );
        assert!(affine_rank(&[vec![0, 0], vec![1]]).is_err());
    }

    #[test]
    fn triangle_is_full_dimensional() {
        let inst = fixtures::triangle().instance;
        let pts: Vec<Vec<i64>> = enumerate_feasible(&inst)
            .unwrap()
            .iter()
            .map(|x| x.values().iter().map(|&v| v as i64).collect())
            .collect();
        assert_eq!(affine_rank(&pts).unwrap(), 3);
    }

    #[test]
    fn triangle_face_reports() {
        let ex = fixtures::triangle();
        let inst = &ex.instance;
        let f = ex.edge("b", "c");
        let e1 = ex.edge("a", "b");

        let r = face_report(inst, &LinearInequality::lower_box(f)).unwrap();
        assert_eq!((r.valid, r.tight_count, r.face_dim, r.is_facet), (true, 1, 0, false));

        let r = face_report(inst, &LinearInequality::lower_box(e1)).unwrap();
        assert_eq!((r.valid, r.tight_count, r.face_dim, r.is_facet), (true, 2, 1, false));

        let r = face_report(inst, &LinearInequality::upper_box(f)).unwrap();
        assert_eq!((r.valid, r.tight_count, r.face_dim, r.is_facet), (true, 3, 2, true));
    }

    #[test]
    fn invalid_inequality_still_reports_face() {
        let ex = fixtures::triangle();
        // x_f <= 0 is violated by three feasible points; tight only at zero
        let ineq = LinearInequality::new(BTreeMap::from([(ex.edge("b", "c"), 1)]), 0);
        let r = face_report(&ex.instance, &ineq).unwrap();
        assert!(!r.valid && !r.is_facet);
        assert_eq!((r.tight_count, r.face_dim), (1, 0));
        // nothing is tight for x_f <= -1
        let ineq = LinearInequality::new(BTreeMap::from([(ex.edge("b", "c"), 1)]), -1);
        let r = face_report(&ex.instance, &ineq).unwrap();
        assert_eq!((r.tight_count, r.face_dim), (0, -1));
    }

    #[test]
    fn inequality_builders() {
        let ex = fixtures::triangle();
        let inst = &ex.instance;
        let f = ex.edge("b", "c");
        let (ab, ca) = (ex.edge("a", "b"), ex.edge("c", "a"));
        let lower = box_inequality(inst, f, BoxSide::Lower).unwrap();
        assert_eq!(lower.coeffs(), &BTreeMap::from([(f, -1)]));
        assert_eq!(lower.rhs(), 0);
        let upper = box_inequality(inst, ab, BoxSide::Upper).unwrap();
        assert_eq!((upper.coeffs(), upper.rhs()), (&BTreeMap::from([(ab, 1)]), 1));

        let cut = cut_to_inequality(inst, f, &[ab, ca]).unwrap();
        assert_eq!(cut.coeffs(), &BTreeMap::from([(ab, 1), (ca, 1), (f, -1)]));
        assert_eq!(cut.rhs(), 1);

        assert!(matches!(cut_to_inequality(inst, f, &[]), Err(Error::InvalidCut(_))));
        assert!(matches!(cut_to_inequality(inst, ab, &[ca]), Err(Error::InvalidCut(_))));
        assert!(matches!(
            cut_to_inequality(inst, f, &[ab, ab, ca]),
            Err(Error::InvalidCut(_))
        ));
        assert!(box_inequality(inst, Edge::new(0, 5), BoxSide::Lower).is_err());
    }

    #[test]
    fn big_fallback_agrees_with_i128() {
        let rows: Vec<Vec<i64>> = (0..6)
            .map(|i| (0..6).map(|j| ((i * 7 + j * 3) % 5) as i64 - 2).collect())
            .collect();
        let wide = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
        let big = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        assert_eq!(bareiss_rank_i128(wide), Some(bareiss_rank_big(big)));
    }
}
