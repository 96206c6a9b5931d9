//! Two-sided elimination of `X ∈ SL_n(A)` to monomial form.
//!
//! Index the `Q(i)`-basis `z^m e_i` of `A^n` by `a = i + n m` (`i` 1-based).
//! Then `B⁺` is the group of periodic lower triangular and `B⁻` of periodic
//! upper triangular infinite matrices. Left multiplication by a lower
//! (upper) triangular matrix preserves the top (bottom) nonzero row of every
//! column. Right moves clear pivot collisions until the pivot rows of the `n`
//! columns are distinct mod `n`; the pivots then spell the affine
//! permutation of the double coset.

use crate::coxeter::AffineWeylElt;
use crate::exactalg::{GaussRat, LaurentMatrix, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Pivot {
    /// Smallest infinite row index: invariant under left `B⁺`.
    Top,
    /// Largest infinite row index: invariant under left `B⁻`.
    Bottom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Modify {
    /// Right `B⁺` moves add larger-index columns to smaller ones.
    Smaller,
    /// Right `B⁻` moves add smaller-index columns to larger ones.
    Larger,
}

/// `x · right = left · mono`, with `mono` the monomial matrix of `w` (scalars
/// included) and `left`, `right` in the appropriate Borel subgroups.
#[derive(Clone, Debug)]
pub(crate) struct Decomposition {
    pub w: AffineWeylElt,
    pub left: LaurentMatrix,
    #[allow(dead_code)]
    pub mono: LaurentMatrix,
    #[allow(dead_code)]
    pub right: LaurentMatrix,
}

struct ColPivot {
    index: i64,
    row: usize,
    exp: i64,
    coef: GaussRat,
}

fn column_pivot(x: &LaurentMatrix, j: usize, mode: Pivot) -> ColPivot {
    let n = x.dim() as i64;
    let mut best: Option<ColPivot> = None;
    for i in 0..x.dim() {
        let e = x.get(i, j);
        let term = match mode {
            Pivot::Top => e.low_term(),
            Pivot::Bottom => e.high_term(),
        };
        let Some((exp, coef)) = term else { continue };
        let index = i as i64 + 1 + n * exp;
        let better = match (&best, mode) {
            (None, _) => true,
            (Some(b), Pivot::Top) => index < b.index,
            (Some(b), Pivot::Bottom) => index > b.index,
        };
        if better {
            best = Some(ColPivot {
                index,
                row: i,
                exp,
                coef: coef.clone(),
            });
        }
    }
    best.expect("column of an invertible matrix is nonzero")
}

pub(crate) fn decompose(x: &LaurentMatrix, pivot: Pivot, modify: Modify) -> Decomposition {
    let n = x.dim();
    let ni = n as i64;
    let mut y = x.clone();
    let mut right = LaurentMatrix::identity(n);
    loop {
        let piv: Vec<ColPivot> = (0..n).map(|j| column_pivot(&y, j, pivot)).collect();
        let clash = (0..n)
            .flat_map(|j| (j + 1..n).map(move |k| (j, k)))
            .find(|&(j, k)| (piv[j].index - piv[k].index).rem_euclid(ni) == 0);
        let Some((j, k)) = clash else {
            let window: Vec<i64> = piv.iter().map(|p| p.index).collect();
            let w = AffineWeylElt::from_window(&window).expect("determinant-one input");
            let mut mono = LaurentMatrix::zero(n);
            let mut mono_inv = LaurentMatrix::zero(n);
            for (c, p) in piv.iter().enumerate() {
                mono.set(p.row, c, LaurentPoly::monomial(p.coef.clone(), p.exp));
                mono_inv.set(c, p.row, LaurentPoly::monomial(p.coef.inv(), -p.exp));
            }
            let left = &y * &mono_inv;
            return Decomposition {
                w,
                left,
                mono,
                right,
            };
        };
        // z^m · col_k has its pivot in the same infinite row as col_j
        let m = (piv[j].index - piv[k].index) / ni;
        let shifted_k = k as i64 + 1 + ni * m;
        let j_smaller = (j as i64 + 1) < shifted_k;
        let modify_j = match modify {
            Modify::Smaller => j_smaller,
            Modify::Larger => !j_smaller,
        };
        let (dst, src, shift, ratio) = if modify_j {
            (j, k, m, &piv[j].coef * &piv[k].coef.inv())
        } else {
            (k, j, -m, &piv[k].coef * &piv[j].coef.inv())
        };
        let f = LaurentPoly::monomial(-ratio, shift);
        y.add_col_multiple(dst, src, &f);
        right.add_col_multiple(dst, src, &f);
    }
}

/// Entry of the infinite periodic matrix of `x` at 1-based indices.
pub(crate) fn inf_entry(x: &LaurentMatrix, row: i64, col: i64) -> GaussRat {
    let n = x.dim() as i64;
    let (ri, rm) = ((row - 1).rem_euclid(n), (row - 1).div_euclid(n));
    let (ci, cm) = ((col - 1).rem_euclid(n), (col - 1).div_euclid(n));
    x.get(ri as usize, ci as usize).coeff(rm - cm)
}
