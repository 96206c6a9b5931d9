//! Random test objects: Borel elements, `SL_n(A)` elements, bases, words,
//! subspaces, flags, unitary matrices and unitary loops.
//! All samplers take an explicit RNG so runs are reproducible from a seed.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::coxeter::Word;
use crate::exactalg::{GaussRat, LaurentMatrix, LaurentPoly, QMat};
use crate::lattice::Side;
use crate::veronese::{cayley, projector_of, sl_unitary_loop, Subspace, SubspaceFlag};

/// Small Gaussian rational, real and imaginary parts with numerators in
/// `[-bound, bound]` and denominators in `1..=2`.
pub fn gauss<R: Rng>(rng: &mut R, bound: i64) -> GaussRat {
    let re = GaussRat::from_frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=2));
    if rng.gen_bool(0.3) {
        let im = GaussRat::from_frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=2));
        &re + &(&im * &GaussRat::i())
    } else {
        re
    }
}

/// Gaussian integer with parts in `[-bound, bound]`.
pub fn gauss_int<R: Rng>(rng: &mut R, bound: i64) -> GaussRat {
    GaussRat::complex(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

pub fn nonzero_gauss<R: Rng>(rng: &mut R, bound: i64) -> GaussRat {
    loop {
        let g = gauss(rng, bound);
        if !g.is_zero() {
            return g;
        }
    }
}

/// Laurent polynomial with exponents in `[lo, hi]`.
pub fn poly<R: Rng>(rng: &mut R, lo: i64, hi: i64, bound: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for e in lo..=hi {
        if rng.gen_bool(0.6) {
            p.add_term(e, &gauss(rng, bound));
        }
    }
    p
}

/// Determinant-one diagonal matrix with constant entries.
pub fn torus<R: Rng>(rng: &mut R, n: usize) -> LaurentMatrix {
    let mut d: Vec<GaussRat> = (0..n - 1).map(|_| nonzero_gauss(rng, 3)).collect();
    let prod = d.iter().fold(GaussRat::one(), |a, b| &a * b);
    d.push(prod.inv());
    LaurentMatrix::diag(d.into_iter().map(LaurentPoly::constant).collect())
}

/// Element of `B^±`: a torus element times `steps` elementary factors whose
/// entries respect the Borel conditions, with `z`-degrees up to `deg`.
pub fn borel<R: Rng>(rng: &mut R, side: Side, n: usize, steps: usize, deg: i64) -> LaurentMatrix {
    let mut b = torus(rng, n);
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = loop {
            let j = rng.gen_range(0..n);
            if j != i {
                break j;
            }
        };
        let min = (i < j) as i64;
        let mut f = poly(rng, min, min + deg, 3);
        if side == Side::Minus {
            // mirror: upper entries in Q(i)[1/z], lower ones divisible by 1/z
            let min = (i > j) as i64;
            f = poly(rng, min, min + deg, 3).invert_z();
        }
        b.add_col_multiple(j, i, &f);
    }
    b
}

/// Element of `SL_n(A)`: a product of elementary matrices with exponents in
/// `[-deg, deg]`.
pub fn sl<R: Rng>(rng: &mut R, n: usize, steps: usize, deg: i64) -> LaurentMatrix {
    let mut g = torus(rng, n);
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = loop {
            let j = rng.gen_range(0..n);
            if j != i {
                break j;
            }
        };
        let f = poly(rng, -deg, deg, 3);
        g.add_col_multiple(j, i, &f);
    }
    g
}

/// `A`-basis with determinant `c z^k` for random `c`, `k`.
pub fn basis<R: Rng>(rng: &mut R, n: usize, steps: usize, deg: i64) -> LaurentMatrix {
    let mut g = sl(rng, n, steps, deg);
    let c = nonzero_gauss(rng, 3);
    let k = rng.gen_range(-3..=3);
    g.scale_col(rng.gen_range(0..n), &LaurentPoly::monomial(c, k));
    g
}

/// Random word in labels `1..=n` (not necessarily reduced).
pub fn word<R: Rng>(rng: &mut R, n: usize, len: usize) -> Word {
    Word((0..len).map(|_| rng.gen_range(1..=n)).collect())
}

/// Random `k`-dimensional subspace of `Q(i)^n`.
pub fn subspace<R: Rng>(rng: &mut R, n: usize, k: usize) -> Subspace {
    loop {
        let vs: Vec<Vec<GaussRat>> = (0..k).map(|_| (0..n).map(|_| gauss_int(rng, 1)).collect()).collect();
        let v = Subspace::span(n, &vs).expect("vectors of length n");
        if v.dim() == k {
            return v;
        }
    }
}

/// Random flag with the given increasing dimensions, built by extending a
/// subspace one random vector at a time.
pub fn flag<R: Rng>(rng: &mut R, n: usize, dims: &[usize]) -> SubspaceFlag {
    let mut vectors: Vec<Vec<GaussRat>> = Vec::new();
    let mut parts = Vec::new();
    for &d in dims {
        while Subspace::span(n, &vectors).unwrap().dim() < d {
            let v: Vec<GaussRat> = (0..n).map(|_| gauss_int(rng, 1)).collect();
            let mut trial = vectors.clone();
            trial.push(v);
            if Subspace::span(n, &trial).unwrap().dim() == trial.len() {
                vectors = trial;
            }
        }
        parts.push(Subspace::span(n, &vectors).unwrap());
    }
    SubspaceFlag::new(parts).expect("strictly increasing dimensions")
}

/// Nonempty random subset of `1..n`, sorted.
pub fn type_set<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    loop {
        let t: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !t.is_empty() {
            return t;
        }
    }
}

/// Positive rationals summing to one.
pub fn weights<R: Rng>(rng: &mut R, count: usize) -> Vec<BigRational> {
    let raw: Vec<i64> = (0..count).map(|_| rng.gen_range(1..=7)).collect();
    let total: i64 = raw.iter().sum();
    raw.into_iter().map(|w| BigRational::new(w.into(), total.into())).collect()
}

/// Hermitian matrix with small entries.
pub fn hermitian<R: Rng>(rng: &mut R, n: usize) -> QMat {
    let mut h = QMat::zeros(n, n);
    for i in 0..n {
        h.set(i, i, GaussRat::from_int(rng.gen_range(-2..=2)));
        for j in i + 1..n {
            let x = gauss_int(rng, 1);
            h.set(j, i, x.conj());
            h.set(i, j, x);
        }
    }
    h
}

/// Unitary matrix over `Q(i)`: a Cayley transform times a signed
/// permutation with phases in `{±1, ±i}`.
pub fn unitary<R: Rng>(rng: &mut R, n: usize) -> QMat {
    let c = cayley(&hermitian(rng, n)).expect("hermitian input");
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let phases = [GaussRat::one(), -GaussRat::one(), GaussRat::i(), -GaussRat::i()];
    let p = QMat::from_fn(n, n, |i, j| {
        if perm[j] == i {
            phases[rng.gen_range(0..4)].clone()
        } else {
            GaussRat::zero()
        }
    });
    &c * &p
}

/// Hermitian projector of rank `k`.
pub fn projector<R: Rng>(rng: &mut R, n: usize, k: usize) -> QMat {
    if k == 0 {
        return QMat::zeros(n, n);
    }
    if k == n {
        return QMat::identity(n);
    }
    projector_of(&subspace(rng, n, n - k)).expect("proper subspace")
}

/// Unitary loop with constant determinant: a constant unitary times
/// `factors` loops `g_P g_Q^{-1}` with random projectors of equal rank.
pub fn unitary_loop<R: Rng>(rng: &mut R, n: usize, factors: usize) -> LaurentMatrix {
    let mut g = unitary(rng, n).to_laurent();
    for _ in 0..factors {
        let k = rng.gen_range(1..n);
        let p = projector(rng, n, k);
        let q = projector(rng, n, k);
        g = &g * &sl_unitary_loop(&p, &q).expect("equal ranks");
    }
    g
}
