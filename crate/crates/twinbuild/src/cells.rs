//! Schubert cells as combinatorics: cell dimensions, Poincaré series of
//! Schubert varieties `Σ_{vW_J ⪯ wW_J} t^{2m(vW_J)}`, the series of the
//! affine Grassmannian, and the comparison behind Bott periodicity.
//!
//! Labels follow [`coxeter`](crate::coxeter): in `Ã_{n-1}` node 1 is the
//! affine node, so the finite Weyl group is `W_{2..n}` and the vertex
//! stabilizers are `W_{I∖{k+1}}`.

use std::fmt;

use crate::coxeter::{
    bruhat_leq, coxeter_matrix, generalized_length, length, min_coset_reps, min_double_coset_rep, CoxeterMatrix,
    Kind, LengthWeights, Word,
};
use crate::error::{Error, Result};

/// Coefficients of `t^0, t^1, …`, exact up to `truncation` (inclusive) when
/// that is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareSeries {
    pub coeffs: Vec<u64>,
    pub truncation: Option<usize>,
}

impl PoincareSeries {
    fn from_degrees(degrees: impl IntoIterator<Item = usize>, truncation: Option<usize>) -> Self {
        let mut coeffs = vec![0u64; truncation.map_or(0, |t| t + 1)];
        for d in degrees {
            if truncation.is_some_and(|t| d > t) {
                continue;
            }
            if d >= coeffs.len() {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += 1;
        }
        PoincareSeries { coeffs, truncation }
    }

    pub fn coeff(&self, d: usize) -> u64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    /// Same series cut off after degree `t`.
    pub fn truncate(&self, t: usize) -> Self {
        let mut coeffs: Vec<u64> = (0..=t).map(|d| self.coeff(d)).collect();
        if self.truncation.is_none() {
            while coeffs.len() > 1 && coeffs.last() == Some(&0) {
                coeffs.pop();
            }
        }
        PoincareSeries {
            coeffs,
            truncation: Some(self.truncation.map_or(t, |s| s.min(t))),
        }
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match d {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{d}"),
            };
            terms.push(match (c, d) {
                (c, 0) => c.to_string(),
                (1, _) => mono,
                (c, _) => format!("{c}{mono}"),
            });
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        if self.truncation.is_some() {
            terms.push("…".into());
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// Shortest representative of `wW_J`.
pub fn min_coset_rep(w: &Word, j: &[usize], cm: &CoxeterMatrix) -> Result<Word> {
    min_double_coset_rep(&[], w, j, cm)
}

/// `panel_dim · m(wW_J)`, the real dimension of the Schubert cell.
pub fn cell_dim(w: &Word, j: &[usize], cm: &CoxeterMatrix, panel_dim: usize) -> Result<usize> {
    Ok(panel_dim * length(&min_coset_rep(w, j, cm)?, cm)?)
}

/// Cell dimension with per-type panel dimensions; the weights must agree
/// across odd bonds.
pub fn cell_dim_weighted(w: &Word, j: &[usize], cm: &CoxeterMatrix, panel_dims: &LengthWeights) -> Result<i64> {
    generalized_length(&min_coset_rep(w, j, cm)?, cm, panel_dims)
}

/// Shortest representatives `v` of the cosets `vW_J ⪯ wW_J`, sorted by
/// length then lexicographically.
pub fn bruhat_interval(cm: &CoxeterMatrix, j: &[usize], w: &Word) -> Result<Vec<Word>> {
    let w = min_coset_rep(w, j, cm)?;
    let reps = min_coset_reps(cm, j, w.len())?;
    let mut out = Vec::new();
    for v in reps {
        if bruhat_leq(&v, &w, cm)? {
            out.push(v);
        }
    }
    Ok(out)
}

/// Covering pairs `(a, b)`, `reps[a] ⋖ reps[b]`, among shortest coset
/// representatives.
pub fn bruhat_covers(cm: &CoxeterMatrix, reps: &[Word]) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (a, v) in reps.iter().enumerate() {
        for (b, w) in reps.iter().enumerate() {
            if w.len() == v.len() + 1 && bruhat_leq(v, w, cm)? {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

/// Poincaré series of the Schubert variety of `wW_J`, optionally
/// truncated.
pub fn schubert_poincare(cm: &CoxeterMatrix, j: &[usize], w: &Word, truncation: Option<usize>) -> Result<PoincareSeries> {
    let interval = bruhat_interval(cm, j, w)?;
    Ok(PoincareSeries::from_degrees(interval.iter().map(|v| 2 * v.len()), truncation))
}

/// Series `Σ t^{2m(vW_J)}` over all of `W/W_J` through degree `truncation`.
pub fn quotient_poincare(cm: &CoxeterMatrix, j: &[usize], truncation: usize) -> Result<PoincareSeries> {
    let reps = min_coset_reps(cm, j, truncation / 2)?;
    Ok(PoincareSeries::from_degrees(reps.iter().map(|v| 2 * v.len()), Some(truncation)))
}

/// Full-flag series of `W`, which must be finite.
pub fn flag_poincare(cm: &CoxeterMatrix) -> Result<PoincareSeries> {
    let w0 = crate::coxeter::longest_element(cm)?;
    schubert_poincare(cm, &[], &w0, None)
}

/// `Σ t^{2m(wW_J)}` over `Ã_{n-1}/W_{2..n}`: the cell structure of the
/// algebraic based loop group of `SU(n)`.
pub fn loop_poincare(n: usize, truncation: usize) -> Result<PoincareSeries> {
    if n < 2 {
        return Err(Error::InvalidRank(format!("n = {n}, need n >= 2")));
    }
    let cm = coxeter_matrix(Kind::AffineA, n)?;
    let j: Vec<usize> = (2..=n).collect();
    quotient_poincare(&cm, &j, truncation)
}

/// The two series compared in the Bott periodicity argument for `n = 2k`:
/// `W_K/W_{J∩K}` (cells of `Gr_k(C^{2k})`) and `W/W_J` (cells of the vertex
/// set `V_k`), with `J = {2..n}` and `K = I∖{k+1}`.
pub fn bott_series(k: usize, through_degree: usize) -> Result<(PoincareSeries, PoincareSeries)> {
    if k == 0 {
        return Err(Error::InvalidRank("k must be positive".into()));
    }
    let n = 2 * k;
    let cm = coxeter_matrix(Kind::AffineA, n)?;
    let j: Vec<usize> = (2..=n).collect();
    let kk: Vec<usize> = (1..=n).filter(|&l| l != k + 1).collect();
    let jk: Vec<usize> = j.iter().copied().filter(|l| kk.contains(l)).collect();
    let ck = cm.restrict(&kk)?;
    let grass = quotient_poincare(&ck, &jk, through_degree)?;
    let affine = quotient_poincare(&cm, &j, through_degree)?;
    Ok((grass, affine))
}

/// True iff the two Bott series agree through `through_degree`.
pub fn bott_equivalence_check(k: usize, through_degree: usize) -> Result<bool> {
    let (a, b) = bott_series(k, through_degree)?;
    Ok((0..=through_degree).all(|d| a.coeff(d) == b.coeff(d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn grassmannian_cells() {
        let cm = coxeter_matrix(Kind::FiniteA, 4).unwrap();
        let reps = min_coset_reps(&cm, &[1, 3], 10).unwrap();
        let mut dims: Vec<usize> = reps.iter().map(|v| cell_dim(v, &[1, 3], &cm, 2).unwrap()).collect();
        dims.sort();
        assert_eq!(dims, vec![0, 2, 4, 4, 6, 8]);
        assert_eq!(cell_dim(&Word::empty(), &[1, 3], &cm, 2).unwrap(), 0);
        let top = reps.last().unwrap();
        let s = schubert_poincare(&cm, &[1, 3], top, None).unwrap();
        assert_eq!(s.coeffs, vec![1, 0, 1, 0, 2, 0, 1, 0, 1]);
        assert_eq!(s.to_string(), "1 + t^2 + 2t^4 + t^6 + t^8");
    }

    #[test]
    fn trivial_schubert_variety() {
        let cm = coxeter_matrix(Kind::FiniteA, 4).unwrap();
        let s = schubert_poincare(&cm, &[2, 3], &Word::empty(), None).unwrap();
        assert_eq!(s.to_string(), "1");
    }

    #[test]
    fn loop_series() {
        assert_eq!(loop_poincare(2, 8).unwrap().coeffs, vec![1, 0, 1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(loop_poincare(4, 6).unwrap().coeffs, vec![1, 0, 1, 0, 2, 0, 3]);
    }

    #[test]
    fn affine_cells_of_v2() {
        let cm = coxeter_matrix(Kind::AffineA, 4).unwrap();
        let reps = min_coset_reps(&cm, &[2, 3, 4], 3).unwrap();
        let dims: Vec<usize> = reps.iter().map(|v| cell_dim(v, &[2, 3, 4], &cm, 2).unwrap()).collect();
        assert_eq!(dims, vec![0, 2, 4, 4, 6, 6, 6]);
    }

    #[test]
    fn bott() {
        assert!(bott_equivalence_check(1, 1).unwrap());
        assert!(bott_equivalence_check(2, 5).unwrap());
        assert!(!bott_equivalence_check(1, 4).unwrap());
    }

    #[test]
    fn weighted_dims_need_compatible_weights() {
        let cm = coxeter_matrix(Kind::FiniteA, 3).unwrap();
        let good = LengthWeights::uniform(&cm, 2);
        assert_eq!(cell_dim_weighted(&w("1 2"), &[], &cm, &good).unwrap(), 4);
        let bad = LengthWeights([(1, 2), (2, 4)].into_iter().collect());
        assert!(matches!(cell_dim_weighted(&w("1 2"), &[], &cm, &bad), Err(Error::InvalidWeights(_))));
    }
}
