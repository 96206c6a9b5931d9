use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::GaussRat;

/// A valuation value: an integer or `+∞` (the valuation of zero).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Val {
    Fin(i64),
    Inf,
}

impl Val {
    pub fn finite(self) -> Option<i64> {
        match self {
            Val::Fin(v) => Some(v),
            Val::Inf => None,
        }
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Val::Fin(a), Val::Fin(b)) => a.cmp(b),
            (Val::Fin(_), Val::Inf) => Ordering::Less,
            (Val::Inf, Val::Fin(_)) => Ordering::Greater,
            (Val::Inf, Val::Inf) => Ordering::Equal,
        }
    }
}

impl Add for Val {
    type Output = Val;
    fn add(self, o: Val) -> Val {
        match (self, o) {
            (Val::Fin(a), Val::Fin(b)) => Val::Fin(a + b),
            _ => Val::Inf,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Fin(v) => write!(f, "{}", v),
            Val::Inf => write!(f, "inf"),
        }
    }
}

/// The two places of `P^1` used here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Zero,
    Infinity,
}

/// A Laurent polynomial over `Q(i)`, stored sparsely. No zero coefficient is
/// ever stored, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, GaussRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn monomial(c: GaussRat, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// `z^e`.
    pub fn z_pow(e: i64) -> Self {
        LaurentPoly::monomial(GaussRat::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, GaussRat)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                v.is_zero()
            }
            None => {
                self.terms.insert(e, c.clone());
                false
            }
        };
        if remove {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &GaussRat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> GaussRat {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, e: i64) -> Option<&GaussRat> {
        self.terms.get(&e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// Units of the Laurent ring are exactly the nonzero monomials.
    pub fn as_unit(&self) -> Option<(GaussRat, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest-order term `(exponent, coefficient)`.
    pub fn low_term(&self) -> Option<(i64, &GaussRat)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// Highest-order term `(exponent, coefficient)`.
    pub fn high_term(&self) -> Option<(i64, &GaussRat)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// `ν_0` is the least exponent; `ν_∞` is the least exponent of `f(1/z)`,
    /// i.e. minus the greatest exponent. Zero has valuation `+∞` at both.
    pub fn valuation(&self, place: Place) -> Val {
        match place {
            Place::Zero => self.min_exp().map_or(Val::Inf, Val::Fin),
            Place::Infinity => self.max_exp().map_or(Val::Inf, |e| Val::Fin(-e)),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// `z d/dz`: multiplies the coefficient of `z^k` by `k`.
    pub fn z_d_dz(&self) -> Self {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (*e, c * &GaussRat::from_int(*e))),
        )
    }

    /// Coefficientwise complex conjugation.
    pub fn conj(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    /// The substitution `z -> 1/z`.
    pub fn invert_z(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Scalar case of `#`: `Σ f_k z^k -> Σ conj(f_{-k}) z^k`.
    pub fn sharp(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.conj())).collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    /// Division by a unit `c z^e`.
    pub fn div_unit(&self, c: &GaussRat, e: i64) -> Self {
        self.scale(&c.inv()).shift(-e)
    }

    /// Euclidean division of polynomials (no negative exponents) over `Q(i)`:
    /// returns `(q, r)` with `self = q*d + r` and `deg r < deg d`.
    pub fn poly_div_rem(&self, d: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(self.is_polynomial() && d.is_polynomial());
        let (dd, dc) = d.high_term().expect("division by zero polynomial");
        let dc_inv = dc.inv();
        let mut q = LaurentPoly::zero();
        let mut r = self.clone();
        while let Some((re, rc)) = r.high_term() {
            if re < dd {
                break;
            }
            let c = rc * &dc_inv;
            let e = re - dd;
            r = &r - &d.scale(&c).shift(e);
            q.add_term(e, &c);
        }
        (q, r)
    }

    pub fn eval(&self, x: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (e, c) in self.terms.iter() {
            let mut p = GaussRat::one();
            let base = if *e >= 0 { x.clone() } else { x.inv() };
            for _ in 0..e.unsigned_abs() {
                p = &p * &base;
            }
            acc += &(c * &p);
        }
        acc
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &'a LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (e, c) in o.terms.iter() {
            r.add_term(*e, c);
        }
        r
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &'a LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (e, c) in o.terms.iter() {
            r.add_term(*e, &-c);
        }
        r
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &'a LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in o.terms.iter() {
                r.add_term(e1 + e2, &(c1 * c2));
            }
        }
        r
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: &'a LaurentPoly) -> LaurentPoly {
                (&self).$m(o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<GaussRat> for LaurentPoly {
    fn from(c: GaussRat) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::constant(GaussRat::from_int(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(e: i64) -> LaurentPoly {
        LaurentPoly::z_pow(e)
    }

    #[test]
    fn valuations() {
        let f = &z(2) + &z(3);
        assert_eq!(f.valuation(Place::Zero), Val::Fin(2));
        assert_eq!(LaurentPoly::zero().valuation(Place::Zero), Val::Inf);
        assert_eq!(LaurentPoly::zero().valuation(Place::Infinity), Val::Inf);
        let g = &z(2) + &z(-1);
        assert_eq!(g.valuation(Place::Infinity), Val::Fin(-2));
    }

    #[test]
    fn z_d_dz_examples() {
        assert!(LaurentPoly::from(7).z_d_dz().is_zero());
        assert_eq!(z(3).z_d_dz(), z(3).scale(&GaussRat::from_int(3)));
        assert_eq!((&z(1) + &z(-1)).z_d_dz(), &z(1) - &z(-1));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let f = &z(1) - &z(1);
        assert!(f.is_zero());
        assert_eq!(f.num_terms(), 0);
    }

    #[test]
    fn poly_division() {
        let a = &(&z(3) + &z(1)) + &LaurentPoly::from(5);
        let d = &z(1) + &LaurentPoly::from(-2);
        let (q, r) = a.poly_div_rem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.max_exp().unwrap_or(-1) < 1);
    }
}
