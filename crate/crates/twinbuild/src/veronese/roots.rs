//! Rational eigenvalues of constant matrices.
//!
//! The characteristic polynomial comes from Faddeev–LeVerrier. Its
//! square-free part is made primitive over `Z`; a rational root `a/b` then has
//! `b | L` for the leading coefficient `L`, so `L·root` is an integer. Sturm
//! bisection narrows each real root to an interval of width below `1/(2L)`,
//! and the single integer candidate is tested exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactalg::{GaussRat, QMat};

/// Dense univariate polynomial over `Q`, coefficients by ascending degree,
/// no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QPoly(pub Vec<BigRational>);

impl QPoly {
    fn trimmed(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn derivative(&self) -> Self {
        QPoly::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let mut r = self.0.clone();
        if r.len() < d.0.len() {
            return (QPoly(vec![]), self.clone());
        }
        let dl = d.lead().clone();
        let dd = d.degree();
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &dl;
            if !c.is_zero() {
                for (i, di) in d.0.iter().enumerate() {
                    r[k + i] -= &c * di;
                }
            }
            q[k] = c;
        }
        (QPoly::trimmed(q), QPoly::trimmed(r))
    }

    fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    /// Scale to integer coefficients with content 1 and positive lead.
    fn primitive(&self) -> Vec<BigInt> {
        let den = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &content * &sign).collect()
    }
}

/// Characteristic polynomial `det(t - X)` of a square matrix whose
/// characteristic polynomial has rational coefficients; `None` otherwise.
pub(crate) fn char_poly(x: &QMat) -> Option<QPoly> {
    let n = x.nrows();
    let mut coeffs = vec![GaussRat::zero(); n + 1];
    coeffs[n] = GaussRat::one();
    let mut m = QMat::zeros(n, n);
    for k in 1..=n {
        let mut next = x * &m;
        let c = coeffs[n - k + 1].clone();
        for i in 0..n {
            let v = next.get(i, i) + &c;
            next.set(i, i, v);
        }
        let t = (x * &next).trace();
        coeffs[n - k] = -(&t * &GaussRat::from_frac(1, k as i64));
        m = next;
    }
    if coeffs.iter().any(|c| !c.is_real()) {
        return None;
    }
    Some(QPoly::trimmed(coeffs.into_iter().map(|c| c.re).collect()))
}

fn sign_changes(seq: &[QPoly], x: &BigRational) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct rational roots of `p`, ascending, if `p` splits into rational
/// linear factors; `None` if some root is irrational or non-real.
pub(crate) fn rational_roots(p: &QPoly) -> Option<Vec<BigRational>> {
    let d = p.derivative();
    let sf = if d.is_zero() { p.clone() } else { p.div_rem(&p.gcd(&d)).0 };
    if sf.degree() == 0 {
        return Some(vec![]);
    }
    let ints = sf.primitive();
    let lead = BigRational::from_integer(ints.last().unwrap().clone());
    let sf = QPoly(ints.iter().map(|c| BigRational::from_integer(c.clone())).collect());
    // Sturm chain
    let mut chain = vec![sf.clone(), sf.derivative()];
    while !chain.last().unwrap().is_zero() {
        let k = chain.len();
        let r = chain[k - 2].div_rem(&chain[k - 1]).1;
        chain.push(QPoly(r.0.into_iter().map(|c| -c).collect()));
    }
    chain.pop();
    // Cauchy bound
    let bound = sf
        .0
        .iter()
        .take(sf.degree())
        .map(|c| (c / &lead).abs())
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a })
        + BigRational::one();
    let count = |lo: &BigRational, hi: &BigRational| sign_changes(&chain, lo) - sign_changes(&chain, hi);
    if count(&-bound.clone(), &bound) != sf.degree() {
        return None;
    }
    let width = BigRational::one() / (BigRational::from_integer(BigInt::from(2)) * &lead);
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let c = count(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 && &hi - &lo < width {
            let cand = [(&lo * &lead).ceil(), (&hi * &lead).floor()];
            let hit = cand.into_iter().map(|u| u / &lead).find(|r| r > &lo && r <= &hi && sf.eval(r).is_zero());
            roots.push(hit?);
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots.sort();
    Some(roots)
}
