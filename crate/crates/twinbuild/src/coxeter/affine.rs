//! Monomial matrices modulo the diagonal torus, viewed as affine permutations.
//!
//! `(π, k)` is the monomial matrix sending `e_j ↦ z^{k_{π(j)}} e_{π(j)}`,
//! with `Σ k = 0`. Indexing the `ℂ`-basis `z^m e_j` by `j + n·m` turns it into
//! the bijection `f(j + n m) = π(j) + n (k_{π(j)} + m)` of `ℤ`.
//!
//! Generator `s_1` is `e_1 ↦ z^{-1} e_n`, `e_n ↦ z e_1` (so `f(1) = 0`,
//! `f(n) = n + 1`); `s_j` for `j ≥ 2` swaps `e_{j-1}` and `e_j`.

use std::fmt;

use super::Word;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeylElt {
    /// `perm[j-1] = π(j)`, 1-based values.
    pub perm: Vec<usize>,
    /// `shift[i-1] = k_i`.
    pub shift: Vec<i64>,
}

impl AffineWeylElt {
    pub fn identity(n: usize) -> Self {
        AffineWeylElt {
            perm: (1..=n).collect(),
            shift: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn new(perm: Vec<usize>, shift: Vec<i64>) -> Result<Self> {
        let n = perm.len();
        if shift.len() != n || n < 2 {
            return Err(Error::Dimension("perm/shift length".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::Parse("perm is not a permutation of 1..n".into()));
            }
            seen[p - 1] = true;
        }
        if shift.iter().sum::<i64>() != 0 {
            return Err(Error::NotSpecial);
        }
        Ok(AffineWeylElt { perm, shift })
    }

    /// Window `[f(1), …, f(n)]`.
    pub fn window(&self) -> Vec<i64> {
        let n = self.n() as i64;
        self.perm
            .iter()
            .map(|&p| p as i64 + n * self.shift[p - 1])
            .collect()
    }

    pub fn from_window(win: &[i64]) -> Result<Self> {
        let n = win.len();
        let ni = n as i64;
        let mut perm = vec![0; n];
        let mut shift = vec![0; n];
        for (j, &v) in win.iter().enumerate() {
            let r = (v - 1).rem_euclid(ni) + 1;
            perm[j] = r as usize;
            shift[r as usize - 1] = (v - r) / ni;
        }
        AffineWeylElt::new(perm, shift)
    }

    /// `f(a)` for any integer index.
    pub fn apply(&self, a: i64) -> i64 {
        let n = self.n() as i64;
        let r = (a - 1).rem_euclid(n) + 1;
        let q = (a - r) / n;
        let p = self.perm[r as usize - 1];
        p as i64 + n * (self.shift[p - 1] + q)
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        let win: Vec<i64> = other.window().iter().map(|&a| self.apply(a)).collect();
        AffineWeylElt::from_window(&win).expect("composition of affine permutations")
    }

    pub fn inverse(&self) -> Self {
        let n = self.n() as i64;
        let mut win = vec![0; self.n()];
        for (j, v) in self.window().iter().enumerate() {
            let r = (v - 1).rem_euclid(n) + 1;
            win[r as usize - 1] = j as i64 + 1 - (v - r);
        }
        AffineWeylElt::from_window(&win).expect("inverse of affine permutation")
    }

    /// The generator with label `s` in `1..=n`.
    pub fn generator(n: usize, s: usize) -> Result<Self> {
        if s == 0 || s > n {
            return Err(Error::BadGenerator(s));
        }
        let mut win: Vec<i64> = (1..=n as i64).collect();
        if s == 1 {
            win[0] = 0;
            win[n - 1] = n as i64 + 1;
        } else {
            win.swap(s - 2, s - 1);
        }
        AffineWeylElt::from_window(&win)
    }

    /// Length by inversion count.
    pub fn length(&self) -> usize {
        let f = self.window();
        let n = self.n() as i64;
        let mut l = 0;
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                l += (f[j] - f[i]).div_euclid(n).unsigned_abs() as usize;
            }
        }
        l
    }

    /// `ℓ(s f) < ℓ(f)`: the values swapped by `s` appear out of order.
    pub fn has_left_descent(&self, s: usize) -> bool {
        let inv = self.inverse();
        let (a, b) = if s == 1 { (0, 1) } else { (s as i64 - 1, s as i64) };
        inv.apply(a) > inv.apply(b)
    }

    /// `ℓ(f s) < ℓ(f)`.
    pub fn has_right_descent(&self, s: usize) -> bool {
        let (a, b) = if s == 1 { (0, 1) } else { (s as i64 - 1, s as i64) };
        self.apply(a) > self.apply(b)
    }

    pub fn is_identity(&self) -> bool {
        self.shift.iter().all(|&k| k == 0) && self.perm.iter().enumerate().all(|(j, &p)| p == j + 1)
    }
}

impl fmt::Display for AffineWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.window().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", w.join(", "))
    }
}

pub fn word_to_affine(word: &Word, n: usize) -> Result<AffineWeylElt> {
    let mut e = AffineWeylElt::identity(n);
    for &s in &word.0 {
        e = e.compose(&AffineWeylElt::generator(n, s)?);
    }
    Ok(e)
}

/// Lexicographically least reduced word, by stripping the smallest left
/// descent.
pub fn affine_to_word(elt: &AffineWeylElt) -> Word {
    let n = elt.n();
    let mut cur = elt.clone();
    let mut out = Vec::new();
    while !cur.is_identity() {
        let s = (1..=n)
            .find(|&s| cur.has_left_descent(s))
            .expect("non-identity element has a descent");
        out.push(s);
        cur = AffineWeylElt::generator(n, s).unwrap().compose(&cur);
    }
    Word(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions() {
        for n in 2..6 {
            for s in 1..=n {
                let g = AffineWeylElt::generator(n, s).unwrap();
                assert!(g.compose(&g).is_identity());
                assert_eq!(g.length(), 1);
            }
        }
    }

    #[test]
    fn node_one_is_affine_reflection() {
        let g = AffineWeylElt::generator(4, 1).unwrap();
        assert_eq!(g.perm, vec![4, 2, 3, 1]);
        assert_eq!(g.shift, vec![1, 0, 0, -1]);
        assert_eq!(g.window(), vec![0, 2, 3, 5]);
    }

    #[test]
    fn inverse_and_apply() {
        let e = AffineWeylElt::from_window(&[7, -1, 0]).unwrap();
        assert!(e.compose(&e.inverse()).is_identity());
        assert_eq!(e.apply(4), 10);
        assert_eq!(e.apply(-1), -4);
    }
}
