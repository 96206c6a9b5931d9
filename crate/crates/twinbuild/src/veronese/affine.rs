//! The affine Veronese map `[gE_k] ↦ gΠ_k^tls g^# + (z∂_z g)g^#` on
//! unitary loops, the gauge action, and the truncated eigenvector test for
//! operators outside the image.
//!
//! Operators are stored as their `𝔛`-part; the `D` summand is implicit.

use num_rational::BigRational;
use num_traits::One;

use super::check_weights;
use crate::error::{Error, Result};
use crate::exactalg::{GaussRat, LaurentMatrix, LaurentPoly, QMat};
use crate::lattice::standard_diag;

/// `Π_k - (k/n)·1`.
pub fn pi_tls(n: usize, k: usize) -> LaurentMatrix {
    let c = GaussRat::from_frac(k as i64, n as i64);
    LaurentMatrix::diag(
        (0..n)
            .map(|i| {
                let d = if i < k { &GaussRat::one() - &c } else { -&c };
                LaurentPoly::constant(d)
            })
            .collect(),
    )
}

fn check_projector(p: &QMat) -> Result<()> {
    if p.nrows() != p.ncols() || &(p * p) != p || *p != p.star() {
        return Err(Error::NotProjector);
    }
    Ok(())
}

/// `g_P(z) = 1 + (z - 1)P` for a hermitian projector `P`.
pub fn unitary_loop(p: &QMat) -> Result<LaurentMatrix> {
    check_projector(p)?;
    let n = p.nrows();
    let zm1 = LaurentPoly::from_terms([(1, GaussRat::one()), (0, -GaussRat::one())]);
    Ok(&LaurentMatrix::identity(n) + &p.to_laurent().scale(&zm1))
}

/// `g_P · g_Q^{-1}`, of determinant one when `rank P = rank Q`.
pub fn sl_unitary_loop(p: &QMat, q: &QMat) -> Result<LaurentMatrix> {
    let gp = unitary_loop(p)?;
    let gq = unitary_loop(q)?;
    if p.nrows() != q.nrows() {
        return Err(Error::Dimension("projectors of different size".into()));
    }
    if p.trace() != q.trace() {
        return Err(Error::Rank(format!("projector ranks {} and {} differ", p.trace(), q.trace())));
    }
    Ok(&gp * &gq.sharp())
}

pub fn is_unitary_loop(g: &LaurentMatrix) -> bool {
    (g * &g.sharp()).is_identity()
}

/// Membership in `𝔛`: `#`-fixed and traceless.
pub fn in_x(x: &LaurentMatrix) -> bool {
    x.sharp() == *x && x.trace().is_zero()
}

/// `X ↦ gXg^# + (z∂_z g)g^#`.
pub fn gauge(g: &LaurentMatrix, x: &LaurentMatrix) -> Result<LaurentMatrix> {
    if g.dim() != x.dim() {
        return Err(Error::Dimension("loop and operator of different size".into()));
    }
    if !is_unitary_loop(g) {
        return Err(Error::NotUnitary);
    }
    let gs = g.sharp();
    Ok(&(&(g * x) * &gs) + &(&g.z_d_dz() * &gs))
}

/// `Φ([gE_k]) = gΠ_k^tls g^# + (z∂_z g)g^#`.
pub fn affine_veronese_vertex(g: &LaurentMatrix, k: usize) -> Result<LaurentMatrix> {
    let n = g.dim();
    if k >= n {
        return Err(Error::Rank(format!("vertex type {k} out of range for n = {n}")));
    }
    gauge(g, &pi_tls(n, k))
}

/// Convex combination of the vertex images `Φ([gE_k])` with the given
/// weights per type.
pub fn barycentric_affine_veronese(g: &LaurentMatrix, weights: &[(usize, BigRational)]) -> Result<LaurentMatrix> {
    let n = g.dim();
    let w: Vec<BigRational> = weights.iter().map(|(_, p)| p.clone()).collect();
    check_weights(&w, weights.len())?;
    if weights.is_empty() {
        return Err(Error::WeightMismatch("no vertices".into()));
    }
    let mut types: Vec<usize> = weights.iter().map(|(k, _)| *k).collect();
    types.sort_unstable();
    types.dedup();
    if types.len() != weights.len() || types.iter().any(|&k| k >= n) {
        return Err(Error::WeightMismatch("types must be distinct and below n".into()));
    }
    let mut x = LaurentMatrix::zero(n);
    for (k, p) in weights {
        x = &x + &pi_tls(n, *k).scale(&LaurentPoly::constant(GaussRat::from_rational(p.clone())));
    }
    gauge(g, &x)
}

/// Checks `(z∂_z - Φ)(g z^m e_j) = (m - [j ≤ k] + k/n)·g z^m e_j` for all
/// `j` and `|m| ≤ m_bound`, where `Φ = Φ([gE_k])`.
pub fn eigen_identity_holds(g: &LaurentMatrix, k: usize, m_bound: i64) -> Result<bool> {
    let n = g.dim();
    let phi = affine_veronese_vertex(g, k)?;
    for j in 0..n {
        for m in -m_bound..=m_bound {
            let f: Vec<LaurentPoly> = g.column(j).iter().map(|x| x.shift(m)).collect();
            let phi_f = phi.apply(&f);
            let c = &GaussRat::from_int(m - (j < k) as i64) + &GaussRat::from_frac(k as i64, n as i64);
            for (fi, pi) in f.iter().zip(&phi_f) {
                if &(&fi.z_d_dz() - pi) != &fi.scale(&c) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The lattice `g E_k^+` whose class [`affine_veronese_vertex`] represents.
pub fn vertex_lattice(g: &LaurentMatrix, k: usize) -> crate::lattice::Lattice {
    crate::lattice::Lattice {
        side: crate::lattice::Side::Plus,
        gens: g * &standard_diag(g.dim(), k),
    }
}

/// `diag(ra, …, ra, (1 - n)ra)` with `a = z + 1/z`.
pub fn caveat_operator(n: usize, r: &BigRational) -> LaurentMatrix {
    let a = |c: BigRational| {
        let c = GaussRat::from_rational(c);
        LaurentPoly::from_terms([(1, c.clone()), (-1, c)])
    };
    let last = r * BigRational::from_integer((1 - n as i64).into());
    LaurentMatrix::diag((0..n).map(|i| if i + 1 < n { a(r.clone()) } else { a(last.clone()) }).collect())
}

/// A Laurent vector `f` with support in `[-N + 2, N - 2]` and
/// `(z∂_z - X)f = λf` for some `λ ∈ (1/n)Z`, `|λ| ≤ N`, if one exists.
pub fn truncated_eigenvector(x: &LaurentMatrix, big_n: i64) -> Option<(BigRational, Vec<LaurentPoly>)> {
    let n = x.dim();
    let (lo, hi) = (-big_n + 2, big_n - 2);
    if lo > hi {
        return None;
    }
    let (dmin, dmax) = (x.min_exp().unwrap_or(0).min(0), x.max_exp().unwrap_or(0).max(0));
    let (out_lo, out_hi) = (lo + dmin, hi + dmax);
    let width = (hi - lo + 1) as usize;
    let out_width = (out_hi - out_lo + 1) as usize;
    let col = |m: i64, j: usize| (m - lo) as usize * n + j;
    let row = |e: i64, i: usize| (e - out_lo) as usize * n + i;
    let mut base = QMat::zeros(out_width * n, width * n);
    for m in lo..=hi {
        for j in 0..n {
            for i in 0..n {
                for (d, c) in x.get(i, j).terms() {
                    let r = row(m + d, i);
                    let v = base.get(r, col(m, j)) - c;
                    base.set(r, col(m, j), v);
                }
            }
        }
    }
    let nn = n as i64;
    for num in -big_n * nn..=big_n * nn {
        let lambda = BigRational::new(num.into(), nn.into());
        let mut a = base.clone();
        for m in lo..=hi {
            let c = GaussRat::from_rational(BigRational::from_integer(m.into()) - &lambda);
            for j in 0..n {
                let v = a.get(row(m, j), col(m, j)) + &c;
                a.set(row(m, j), col(m, j), v);
            }
        }
        if let Some(v) = a.kernel().into_iter().next() {
            let f = (0..n)
                .map(|j| LaurentPoly::from_terms((lo..=hi).map(|m| (m, v[col(m, j)].clone()))))
                .collect();
            return Some((lambda, f));
        }
    }
    None
}

/// True when `diag(ra, …, ra, (1 - n)ra)` has no eigenvector in the
/// window `N`.
pub fn caveat_check_scaled(n: usize, r: &BigRational, big_n: i64) -> bool {
    truncated_eigenvector(&caveat_operator(n, r), big_n).is_none()
}

pub fn caveat_check(n: usize, big_n: i64) -> bool {
    caveat_check_scaled(n, &BigRational::one(), big_n)
}
