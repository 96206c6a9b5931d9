//! Veronese representations: flags of `Q(i)^n` as traceless hermitian
//! matrices, and vertices of the plus half of the twin building as
//! `#`-fixed Laurent matrices via gauge transformations.
//!
//! The hermitian form is `<x, y> = Σ conj(x_i) y_i`. Unitary groups are
//! sampled from `Q(i)`-rational elements only (permutations, phases, Cayley
//! transforms, loops `1 + (z - 1)P`), so everything stays exact.

mod affine;
mod roots;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{GaussRat, QMat};

pub use affine::{
    affine_veronese_vertex, barycentric_affine_veronese, caveat_check, caveat_check_scaled, caveat_operator,
    eigen_identity_holds, gauge, in_x, is_unitary_loop, pi_tls, sl_unitary_loop, truncated_eigenvector,
    unitary_loop, vertex_lattice,
};

/// A subspace of `Q(i)^n`, stored as the nonzero rows of its reduced row
/// echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    rows: QMat,
}

impl Subspace {
    /// Span of the given vectors.
    pub fn span(n: usize, vectors: &[Vec<GaussRat>]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != n) {
            return Err(Error::Dimension(format!("vectors must have length {n}")));
        }
        let m = QMat::from_fn(vectors.len(), n, |i, j| vectors[i][j].clone());
        Ok(Subspace::from_rows(n, &m))
    }

    fn from_rows(n: usize, m: &QMat) -> Self {
        let (r, pivots) = m.rref();
        let rows = QMat::from_fn(pivots.len(), n, |i, j| r.get(i, j).clone());
        Subspace { n, rows }
    }

    /// `span{e_1, …, e_k}`.
    pub fn coordinate(n: usize, k: usize) -> Self {
        let rows = QMat::from_fn(k, n, |i, j| if i == j { GaussRat::one() } else { GaussRat::zero() });
        Subspace { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.nrows()
    }

    /// Reduced row echelon basis, one vector per row.
    pub fn basis(&self) -> &QMat {
        &self.rows
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        let stacked: Vec<Vec<GaussRat>> = (0..self.dim())
            .map(|i| self.rows.row(i))
            .chain((0..other.dim()).map(|i| other.rows.row(i)))
            .collect();
        stacked.is_empty() || QMat::from_rows(stacked).rank() == self.dim()
    }

    /// Image of the subspace under a constant matrix.
    pub fn transform(&self, g: &QMat) -> Self {
        let cols: Vec<Vec<GaussRat>> = (0..self.dim()).map(|i| g.apply(&self.rows.row(i))).collect();
        let m = QMat::from_fn(cols.len(), self.n, |i, j| cols[i][j].clone());
        Subspace::from_rows(self.n, &m)
    }
}

/// Orthogonal complement for the standard hermitian form.
pub fn perp(v: &Subspace) -> Subspace {
    let conj = QMat::from_fn(v.dim(), v.n, |i, j| v.rows.get(i, j).conj());
    let ker = if v.dim() == 0 {
        (0..v.n)
            .map(|i| (0..v.n).map(|j| if i == j { GaussRat::one() } else { GaussRat::zero() }).collect())
            .collect()
    } else {
        conj.kernel()
    };
    let m = QMat::from_fn(ker.len(), v.n, |i, j| ker[i][j].clone());
    Subspace::from_rows(v.n, &m)
}

/// A strictly increasing chain of proper nonzero subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceFlag {
    parts: Vec<Subspace>,
}

impl SubspaceFlag {
    pub fn new(parts: Vec<Subspace>) -> Result<Self> {
        let Some(n) = parts.first().map(|p| p.n) else {
            return Err(Error::Dimension("a flag needs at least one subspace".into()));
        };
        for p in &parts {
            if p.n != n {
                return Err(Error::Dimension("subspaces of different ambient spaces".into()));
            }
            if p.dim() == 0 || p.dim() == n {
                return Err(Error::TrivialSubspace);
            }
        }
        for w in parts.windows(2) {
            if w[0].dim() >= w[1].dim() || !w[1].contains(&w[0]) {
                return Err(Error::Dimension("flag parts must be strictly nested".into()));
            }
        }
        Ok(SubspaceFlag { parts })
    }

    /// The coordinate flag with the given dimensions.
    pub fn standard(n: usize, dims: &[usize]) -> Result<Self> {
        SubspaceFlag::new(dims.iter().map(|&k| Subspace::coordinate(n, k)).collect())
    }

    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts[0].n
    }

    /// Type set: the dimensions of the parts.
    pub fn types(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.dim()).collect()
    }

    pub fn transform(&self, g: &QMat) -> Self {
        SubspaceFlag {
            parts: self.parts.iter().map(|p| p.transform(g)).collect(),
        }
    }

    /// Complementary flag, inclusions reversed.
    pub fn perp(&self) -> Self {
        SubspaceFlag {
            parts: self.parts.iter().rev().map(perp).collect(),
        }
    }
}

/// The hermitian projector with kernel `v`.
pub fn projector_of(v: &Subspace) -> Result<QMat> {
    let (n, k) = (v.n, v.dim());
    if k == 0 || k == n {
        return Err(Error::TrivialSubspace);
    }
    let a = v.rows.transpose();
    let a_star = a.star();
    let inv = (&a_star * &a).inverse().expect("positive definite Gram matrix");
    let p = &(&a * &inv) * &a_star;
    Ok(&QMat::identity(n) - &p)
}

/// `X - (tr X / n)·1`.
pub fn traceless(x: &QMat) -> QMat {
    let n = x.nrows();
    let c = &x.trace() * &GaussRat::from_frac(1, n as i64);
    x - &QMat::diag(&vec![c; n])
}

fn check_weights(weights: &[BigRational], count: usize) -> Result<()> {
    if weights.len() != count {
        return Err(Error::WeightMismatch(format!("{} weights for {} parts", weights.len(), count)));
    }
    if weights.iter().any(|w| !w.is_positive()) {
        return Err(Error::WeightMismatch("weights must be positive".into()));
    }
    if weights.iter().fold(BigRational::zero(), |a, b| a + b) != BigRational::one() {
        return Err(Error::WeightMismatch("weights must sum to 1".into()));
    }
    Ok(())
}

/// `Φ(U, p) = Σ p_i (X_{U_i})^tls`.
pub fn spherical_veronese(flag: &SubspaceFlag, weights: &[BigRational]) -> Result<QMat> {
    check_weights(weights, flag.parts.len())?;
    let n = flag.n();
    let mut acc = QMat::zeros(n, n);
    for (u, p) in flag.parts.iter().zip(weights) {
        let phi = traceless(&projector_of(u)?);
        acc = &acc + &phi.scale(&GaussRat::from_rational(p.clone()));
    }
    Ok(acc)
}

/// Sorted eigenvalues and eigenspaces of a hermitian matrix whose
/// characteristic polynomial splits over `Q`.
pub fn eigen_decomposition(x: &QMat) -> Result<Vec<(BigRational, Subspace)>> {
    let n = x.nrows();
    if x.ncols() != n || *x != x.star() {
        return Err(Error::NotInImage("matrix is not hermitian".into()));
    }
    let p = roots::char_poly(x).ok_or_else(|| Error::NotInImage("characteristic polynomial is not rational".into()))?;
    let roots = roots::rational_roots(&p)
        .ok_or_else(|| Error::NotInImage("characteristic polynomial does not split over Q".into()))?;
    let mut out = Vec::with_capacity(roots.len());
    for r in roots {
        let shifted = x - &QMat::diag(&vec![GaussRat::from_rational(r.clone()); n]);
        let ker = shifted.kernel();
        out.push((r, Subspace::span(n, &ker)?));
    }
    Ok(out)
}

/// Flag and weights of a point in the image of [`spherical_veronese`]:
/// `U_k = ker(X - λ_1) ⊕ ⋯ ⊕ ker(X - λ_k)` for the ascending eigenvalues.
pub fn recover_flag_with_weights(x: &QMat) -> Result<(SubspaceFlag, Vec<BigRational>)> {
    let eig = eigen_decomposition(x)?;
    if eig.len() < 2 {
        return Err(Error::NotInImage("a scalar matrix represents no flag".into()));
    }
    let n = x.nrows();
    let mut parts = Vec::new();
    let mut acc: Vec<Vec<GaussRat>> = Vec::new();
    for (_, space) in &eig[..eig.len() - 1] {
        acc.extend((0..space.dim()).map(|i| space.rows.row(i)));
        parts.push(Subspace::span(n, &acc)?);
    }
    let weights = eig.windows(2).map(|w| &w[1].0 - &w[0].0).collect();
    Ok((SubspaceFlag::new(parts)?, weights))
}

pub fn recover_flag(x: &QMat) -> Result<SubspaceFlag> {
    recover_flag_with_weights(x).map(|(f, _)| f)
}

/// Squared euclidean norm `tr(A* A)`.
pub fn norm_sqr(a: &QMat) -> BigRational {
    (&a.star() * a).trace().re
}

/// `|Φ(span{e_1..e_i}) - Φ(span{e_1..e_j})|²`, the minimum over incident
/// pairs of dimensions `i`, `j`.
pub fn incidence_distance_sqr(n: usize, i: usize, j: usize) -> Result<BigRational> {
    let a = traceless(&projector_of(&Subspace::coordinate(n, i))?);
    let b = traceless(&projector_of(&Subspace::coordinate(n, j))?);
    Ok(norm_sqr(&(&a - &b)))
}

/// Cayley transform `(1 + iH)(1 - iH)^{-1}` of a hermitian `H`: a unitary
/// matrix over `Q(i)`.
pub fn cayley(h: &QMat) -> Result<QMat> {
    if *h != h.star() {
        return Err(Error::NotInImage("Cayley transform needs a hermitian matrix".into()));
    }
    let n = h.nrows();
    let ih = h.scale(&GaussRat::i());
    let num = &QMat::identity(n) + &ih;
    let den = (&QMat::identity(n) - &ih).inverse().expect("1 - iH is invertible for hermitian H");
    Ok(&num * &den)
}

pub fn is_unitary(g: &QMat) -> bool {
    (g * &g.star()) == QMat::identity(g.nrows())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn diag(d: &[(i64, i64)]) -> QMat {
        QMat::diag(&d.iter().map(|&(a, b)| GaussRat::from_frac(a, b)).collect::<Vec<_>>())
    }

    #[test]
    fn coordinate_projectors() {
        for n in 2..=4 {
            for k in 1..n {
                let x = projector_of(&Subspace::coordinate(n, k)).unwrap();
                let d: Vec<(i64, i64)> = (0..n).map(|i| ((i >= k) as i64, 1)).collect();
                assert_eq!(x, diag(&d));
            }
        }
        assert_eq!(projector_of(&Subspace::coordinate(3, 0)), Err(Error::TrivialSubspace));
        assert_eq!(projector_of(&Subspace::coordinate(3, 3)), Err(Error::TrivialSubspace));
    }

    #[test]
    fn line_in_the_plane() {
        let flag = SubspaceFlag::standard(2, &[1]).unwrap();
        let x = spherical_veronese(&flag, &[q(1, 1)]).unwrap();
        assert_eq!(x, diag(&[(-1, 2), (1, 2)]));
        assert_eq!(recover_flag(&x).unwrap(), flag);
        assert!(matches!(recover_flag(&QMat::zeros(3, 3)), Err(Error::NotInImage(_))));
    }

    #[test]
    fn standard_full_flag() {
        // Φ(span e1) = diag(-2/3, 1/3, 1/3), Φ(span e1,e2) = diag(-1/3, -1/3, 2/3)
        let flag = SubspaceFlag::standard(3, &[1, 2]).unwrap();
        let x = spherical_veronese(&flag, &[q(1, 2), q(1, 2)]).unwrap();
        assert_eq!(x, diag(&[(-1, 2), (0, 1), (1, 2)]));
    }

    #[test]
    fn perp_of_a_line() {
        let l = Subspace::coordinate(4, 1);
        let p = perp(&l);
        let e = |i: usize| (0..4).map(|j| GaussRat::from_int((i == j) as i64)).collect::<Vec<_>>();
        assert_eq!(p, Subspace::span(4, &[e(1), e(2), e(3)]).unwrap());
        assert_eq!(perp(&p), l);
    }

    #[test]
    fn non_split_is_rejected() {
        // eigenvalues ±√2
        let x = QMat::from_rows(vec![
            vec![GaussRat::from_int(1), GaussRat::from_int(1)],
            vec![GaussRat::from_int(1), GaussRat::from_int(-1)],
        ]);
        assert!(matches!(recover_flag(&x), Err(Error::NotInImage(_))));
    }

    #[test]
    fn cayley_is_unitary() {
        let h = QMat::from_rows(vec![
            vec![GaussRat::from_int(2), GaussRat::complex(1, -1)],
            vec![GaussRat::complex(1, 1), GaussRat::from_frac(-1, 3)],
        ]);
        assert!(is_unitary(&cayley(&h).unwrap()));
    }
}
