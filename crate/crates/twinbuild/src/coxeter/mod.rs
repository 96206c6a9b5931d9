//! Coxeter systems of types `A_{n-1}` and affine `Ã_{n-1}`.
//!
//! Group elements are computed with the integer root-system realization
//! attached to a Cartan matrix, which is faithful, so descents can be read
//! off the sign of `w(α_i)`. Bonds with `m ∈ {2, 3, 4, 6, ∞}` are supported.

mod affine;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use affine::{affine_to_word, word_to_affine, AffineWeylElt};

/// Entry `m_ij` of a Coxeter matrix. `∞` is its own variant, never `0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    FiniteA,
    AffineA,
}

/// A Coxeter matrix over an ordered label set (labels are kept when
/// restricting to a parabolic subsystem).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    labels: Vec<usize>,
    m: Vec<Vec<Bond>>,
    cartan: Vec<Vec<i64>>,
}

impl CoxeterMatrix {
    pub fn new(labels: Vec<usize>, m: Vec<Vec<Bond>>) -> Result<Self> {
        let r = labels.len();
        if m.len() != r || m.iter().any(|row| row.len() != r) {
            return Err(Error::Dimension("Coxeter matrix shape".into()));
        }
        let mut seen = HashSet::new();
        if labels.iter().any(|l| !seen.insert(*l)) {
            return Err(Error::Unsupported("duplicate labels".into()));
        }
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            if m[i][i] != Bond::Finite(1) {
                return Err(Error::Unsupported("m_ii must be 1".into()));
            }
            cartan[i][i] = 2;
            for j in 0..r {
                if i == j {
                    continue;
                }
                if m[i][j] != m[j][i] {
                    return Err(Error::Unsupported("matrix is not symmetric".into()));
                }
                // orientation for the non-simply-laced bonds: the smaller
                // index gets the short coefficient
                let (short, long) = match m[i][j] {
                    Bond::Finite(2) => (0, 0),
                    Bond::Finite(3) => (-1, -1),
                    Bond::Finite(4) => (-1, -2),
                    Bond::Finite(6) => (-1, -3),
                    Bond::Infinite => (-2, -2),
                    Bond::Finite(x) if x < 2 => {
                        return Err(Error::Unsupported(format!("m_ij = {x} < 2")))
                    }
                    Bond::Finite(x) => {
                        return Err(Error::Unsupported(format!("bond m = {x} has no integral realization")))
                    }
                };
                cartan[i][j] = if i < j { short } else { long };
            }
        }
        Ok(CoxeterMatrix { labels, m, cartan })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// `m_ij` by label.
    pub fn entry(&self, i: usize, j: usize) -> Result<Bond> {
        Ok(self.m[self.pos(i)?][self.pos(j)?])
    }

    pub fn entries(&self) -> &[Vec<Bond>] {
        &self.m
    }

    fn pos(&self, label: usize) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::BadGenerator(label))
    }

    fn positions(&self, word: &[usize]) -> Result<Vec<usize>> {
        word.iter().map(|&l| self.pos(l)).collect()
    }

    /// The parabolic subsystem on the given labels, keeping label names.
    pub fn restrict(&self, labels: &[usize]) -> Result<CoxeterMatrix> {
        let mut ls: Vec<usize> = labels.to_vec();
        ls.sort_unstable();
        ls.dedup();
        let ps = ls.iter().map(|&l| self.pos(l)).collect::<Result<Vec<_>>>()?;
        let m = ps
            .iter()
            .map(|&i| ps.iter().map(|&j| self.m[i][j]).collect())
            .collect();
        CoxeterMatrix::new(ls, m)
    }

    /// Whether `W` is finite: the symmetrized Cartan matrix is positive
    /// definite.
    pub fn is_finite(&self) -> bool {
        let r = self.rank();
        // symmetrizing factors d_i with d_i a_ij = d_j a_ji
        let mut d: Vec<Option<num_rational::Rational64>> = vec![None; r];
        for start in 0..r {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(1.into());
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..r {
                    if i == j || self.cartan[i][j] == 0 {
                        continue;
                    }
                    let want = d[i].unwrap() * self.cartan[i][j] / self.cartan[j][i];
                    match d[j] {
                        None => {
                            d[j] = Some(want);
                            stack.push(j);
                        }
                        Some(x) if x != want => return false,
                        _ => {}
                    }
                }
            }
        }
        let b: Vec<Vec<num_rational::Rational64>> = (0..r)
            .map(|i| (0..r).map(|j| d[i].unwrap() * self.cartan[i][j]).collect())
            .collect();
        // Sylvester via Gaussian elimination: all pivots positive.
        let mut a = b;
        for k in 0..r {
            if a[k][k] <= 0.into() {
                return false;
            }
            for i in k + 1..r {
                let f = a[i][k] / a[k][k];
                for j in k..r {
                    let v = a[k][j] * f;
                    a[i][j] -= v;
                }
            }
        }
        true
    }

    pub(crate) fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }
}

impl fmt::Display for CoxeterMatrix {
    /// JSON array form with `"inf"` for `∞`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|row| {
                let cells: Vec<String> = row
                    .iter()
                    .map(|b| match b {
                        Bond::Finite(m) => m.to_string(),
                        Bond::Infinite => "\"inf\"".to_string(),
                    })
                    .collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// `A_{n-1}` is the path on labels `1..n-1`; `Ã_{n-1}` is the `n`-cycle on
/// labels `1..n` (for `n = 2` the single bond is `∞`).
pub fn coxeter_matrix(kind: Kind, n: usize) -> Result<CoxeterMatrix> {
    if n < 2 {
        return Err(Error::InvalidRank(format!("n = {n}, need n >= 2")));
    }
    match kind {
        Kind::FiniteA => {
            let r = n - 1;
            let m = (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| match i.abs_diff(j) {
                            0 => Bond::Finite(1),
                            1 => Bond::Finite(3),
                            _ => Bond::Finite(2),
                        })
                        .collect()
                })
                .collect();
            CoxeterMatrix::new((1..=r).collect(), m)
        }
        Kind::AffineA => {
            let m = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                Bond::Finite(1)
                            } else if n == 2 {
                                Bond::Infinite
                            } else if (i + 1) % n == j || (j + 1) % n == i {
                                Bond::Finite(3)
                            } else {
                                Bond::Finite(2)
                            }
                        })
                        .collect()
                })
                .collect();
            CoxeterMatrix::new((1..=n).collect(), m)
        }
    }
}

/// A word in the generator labels. Display and parsing use space-separated
/// labels; the empty string is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Paper-style rendering `s1s2s4s1`, `ε` for the identity.
    pub fn pretty(&self) -> String {
        if self.0.is_empty() {
            return "ε".into();
        }
        self.0.iter().map(|i| format!("s{i}")).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad generator '{t}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// A group element in the root realization: column `j` of `fwd` is `w(α_j)`
/// and `inv` holds the same for `w^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Elem {
    r: usize,
    fwd: Vec<i64>,
    inv: Vec<i64>,
}

impl Elem {
    fn identity(r: usize) -> Self {
        let mut fwd = vec![0; r * r];
        for i in 0..r {
            fwd[i * r + i] = 1;
        }
        Elem {
            r,
            inv: fwd.clone(),
            fwd,
        }
    }

    fn is_identity(&self) -> bool {
        (0..self.r).all(|i| (0..self.r).all(|j| self.fwd[i * self.r + j] == (i == j) as i64))
    }

    fn col_negative(mat: &[i64], r: usize, j: usize) -> bool {
        (0..r).all(|i| mat[i * r + j] <= 0)
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    fn right_descent(&self, i: usize) -> bool {
        Elem::col_negative(&self.fwd, self.r, i)
    }

    /// `ℓ(s_i w) < ℓ(w)`.
    fn left_descent(&self, i: usize) -> bool {
        Elem::col_negative(&self.inv, self.r, i)
    }

    fn right_mul_cols(mat: &mut [i64], r: usize, cm: &CoxeterMatrix, i: usize) {
        for j in 0..r {
            let a = cm.cartan(i, j);
            if a == 0 || j == i {
                continue;
            }
            for k in 0..r {
                mat[k * r + j] -= a * mat[k * r + i];
            }
        }
        for k in 0..r {
            mat[k * r + i] = -mat[k * r + i];
        }
    }

    fn left_mul_rows(mat: &mut [i64], r: usize, cm: &CoxeterMatrix, i: usize) {
        for col in 0..r {
            let pairing: i64 = (0..r).map(|k| cm.cartan(i, k) * mat[k * r + col]).sum();
            mat[i * r + col] -= pairing;
        }
    }

    fn mul_right(&mut self, cm: &CoxeterMatrix, i: usize) {
        Elem::right_mul_cols(&mut self.fwd, self.r, cm, i);
        Elem::left_mul_rows(&mut self.inv, self.r, cm, i);
    }

    fn mul_left(&mut self, cm: &CoxeterMatrix, i: usize) {
        Elem::left_mul_rows(&mut self.fwd, self.r, cm, i);
        Elem::right_mul_cols(&mut self.inv, self.r, cm, i);
    }

    fn from_positions(cm: &CoxeterMatrix, word: &[usize]) -> Self {
        let mut e = Elem::identity(cm.rank());
        for &i in word {
            e.mul_right(cm, i);
        }
        e
    }

    /// Lexicographically least reduced word (positions), consuming `self`.
    fn normal_form(mut self, cm: &CoxeterMatrix) -> Vec<usize> {
        let mut out = Vec::new();
        loop {
            match (0..self.r).find(|&i| self.left_descent(i)) {
                Some(i) => {
                    out.push(i);
                    self.mul_left(cm, i);
                }
                None => return out,
            }
        }
    }
}

fn to_labels(cm: &CoxeterMatrix, pos: &[usize]) -> Word {
    Word(pos.iter().map(|&p| cm.labels[p]).collect())
}

/// Canonical reduced word: lexicographically least under the label order
/// (labels are stored sorted ascending by the constructors).
pub fn reduce(word: &Word, cm: &CoxeterMatrix) -> Result<Word> {
    let p = cm.positions(&word.0)?;
    let nf = Elem::from_positions(cm, &p).normal_form(cm);
    Ok(to_labels(cm, &nf))
}

pub fn length(word: &Word, cm: &CoxeterMatrix) -> Result<usize> {
    Ok(reduce(word, cm)?.len())
}

/// Whether two words represent the same element.
pub fn equal(a: &Word, b: &Word, cm: &CoxeterMatrix) -> Result<bool> {
    let pa = cm.positions(&a.0)?;
    let pb = cm.positions(&b.0)?;
    Ok(Elem::from_positions(cm, &pa).fwd == Elem::from_positions(cm, &pb).fwd)
}

pub fn is_reduced(word: &Word, cm: &CoxeterMatrix) -> Result<bool> {
    Ok(length(word, cm)? == word.len())
}

/// Product of two elements, in normal form.
pub fn multiply(a: &Word, b: &Word, cm: &CoxeterMatrix) -> Result<Word> {
    reduce(&a.concat(b), cm)
}

pub fn inverse(a: &Word, cm: &CoxeterMatrix) -> Result<Word> {
    reduce(&a.inverse(), cm)
}

/// Labels `s` with `ℓ(ws) < ℓ(w)`.
pub fn right_descents(word: &Word, cm: &CoxeterMatrix) -> Result<Vec<usize>> {
    let e = Elem::from_positions(cm, &cm.positions(&word.0)?);
    Ok((0..cm.rank())
        .filter(|&i| e.right_descent(i))
        .map(|i| cm.labels[i])
        .collect())
}

/// Labels `s` with `ℓ(sw) < ℓ(w)`.
pub fn left_descents(word: &Word, cm: &CoxeterMatrix) -> Result<Vec<usize>> {
    let e = Elem::from_positions(cm, &cm.positions(&word.0)?);
    Ok((0..cm.rank())
        .filter(|&i| e.left_descent(i))
        .map(|i| cm.labels[i])
        .collect())
}

/// Integer-valued length weights on the labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthWeights(pub BTreeMap<usize, i64>);

impl LengthWeights {
    pub fn uniform(cm: &CoxeterMatrix, a: i64) -> Self {
        LengthWeights(cm.labels().iter().map(|&l| (l, a)).collect())
    }

    /// `a(i) = a(j)` whenever `m_ij` is finite and odd.
    pub fn validate(&self, cm: &CoxeterMatrix) -> Result<()> {
        for (pi, &i) in cm.labels().iter().enumerate() {
            let ai = *self
                .0
                .get(&i)
                .ok_or_else(|| Error::InvalidWeights(format!("no weight for s{i}")))?;
            for (pj, &j) in cm.labels().iter().enumerate() {
                if let Bond::Finite(m) = cm.m[pi][pj] {
                    if pi != pj && m % 2 == 1 && self.0.get(&j) != Some(&ai) {
                        return Err(Error::InvalidWeights(format!(
                            "a(s{i}) != a(s{j}) but m_{i}{j} = {m} is odd"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The `a`-length: sum of weights along a reduced expression.
pub fn generalized_length(word: &Word, cm: &CoxeterMatrix, a: &LengthWeights) -> Result<i64> {
    a.validate(cm)?;
    Ok(reduce(word, cm)?.0.iter().map(|l| a.0[l]).sum())
}

/// Bruhat order `v ⪯ w` via the lifting property: for a right descent `s`
/// of `w`, `v ⪯ w` iff `vs ⪯ ws` (when `s` is a descent of `v`) or `v ⪯ ws`.
pub fn bruhat_leq(v: &Word, w: &Word, cm: &CoxeterMatrix) -> Result<bool> {
    let mut ev = Elem::from_positions(cm, &cm.positions(&v.0)?);
    let mut ew = Elem::from_positions(cm, &cm.positions(&w.0)?);
    loop {
        if ew.is_identity() {
            return Ok(ev.is_identity());
        }
        let s = (0..cm.rank())
            .find(|&i| ew.right_descent(i))
            .expect("non-identity element has a descent");
        if ev.right_descent(s) {
            ev.mul_right(cm, s);
        }
        ew.mul_right(cm, s);
    }
}

/// Minimal representatives of `W_J w W_K` (greedy descent removal).
pub fn min_double_coset_rep(j: &[usize], w: &Word, k: &[usize], cm: &CoxeterMatrix) -> Result<Word> {
    let jp = j.iter().map(|&l| cm.pos(l)).collect::<Result<Vec<_>>>()?;
    let kp = k.iter().map(|&l| cm.pos(l)).collect::<Result<Vec<_>>>()?;
    let mut e = Elem::from_positions(cm, &cm.positions(&w.0)?);
    loop {
        if let Some(&s) = jp.iter().find(|&&s| e.left_descent(s)) {
            e.mul_left(cm, s);
        } else if let Some(&s) = kp.iter().find(|&&s| e.right_descent(s)) {
            e.mul_right(cm, s);
        } else {
            break;
        }
    }
    Ok(to_labels(cm, &e.normal_form(cm)))
}

/// Minimal-length representatives of the cosets `wW_J` with `ℓ(w) ≤
/// max_length`, sorted by `(length, lex)`.
pub fn min_coset_reps(cm: &CoxeterMatrix, j: &[usize], max_length: usize) -> Result<Vec<Word>> {
    let jp = j.iter().map(|&l| cm.pos(l)).collect::<Result<Vec<_>>>()?;
    let mut level = vec![Elem::identity(cm.rank())];
    let mut out = vec![Word::empty()];
    for _ in 0..max_length {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for e in &level {
            for s in 0..cm.rank() {
                if e.left_descent(s) {
                    continue;
                }
                let mut f = e.clone();
                f.mul_left(cm, s);
                if jp.iter().any(|&t| f.right_descent(t)) {
                    continue;
                }
                if seen.insert(f.fwd.clone()) {
                    next.push(f);
                }
            }
        }
        let mut words: Vec<Word> = next
            .iter()
            .map(|e| to_labels(cm, &e.clone().normal_form(cm)))
            .collect();
        words.sort();
        out.extend(words);
        level = next;
        if level.is_empty() {
            break;
        }
    }
    Ok(out)
}

/// All elements of length at most `max_length`, sorted by `(length, lex)`.
pub fn elements_up_to(cm: &CoxeterMatrix, max_length: usize) -> Result<Vec<Word>> {
    min_coset_reps(cm, &[], max_length)
}

/// The longest element of a finite Coxeter group.
pub fn longest_element(cm: &CoxeterMatrix) -> Result<Word> {
    if !cm.is_finite() {
        return Err(Error::NotSpherical);
    }
    let mut e = Elem::identity(cm.rank());
    while let Some(s) = (0..cm.rank()).find(|&i| !e.right_descent(i)) {
        e.mul_right(cm, s);
    }
    Ok(to_labels(cm, &e.normal_form(cm)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn matrices() {
        let a3 = coxeter_matrix(Kind::FiniteA, 4).unwrap();
        assert_eq!(a3.entry(1, 2).unwrap(), Bond::Finite(3));
        assert_eq!(a3.entry(2, 3).unwrap(), Bond::Finite(3));
        assert_eq!(a3.entry(1, 3).unwrap(), Bond::Finite(2));
        assert_eq!(a3.entry(2, 2).unwrap(), Bond::Finite(1));
        let a1t = coxeter_matrix(Kind::AffineA, 2).unwrap();
        assert_eq!(a1t.entry(1, 2).unwrap(), Bond::Infinite);
        let a3t = coxeter_matrix(Kind::AffineA, 4).unwrap();
        for i in 1..=4 {
            let j = i % 4 + 1;
            assert_eq!(a3t.entry(i, j).unwrap(), Bond::Finite(3));
        }
        assert_eq!(a3t.entry(1, 3).unwrap(), Bond::Finite(2));
        assert_eq!(a3t.entry(2, 4).unwrap(), Bond::Finite(2));
        assert!(matches!(coxeter_matrix(Kind::FiniteA, 1), Err(Error::InvalidRank(_))));
        assert_eq!(a1t.to_string(), "[[1,\"inf\"],[\"inf\",1]]");
    }

    #[test]
    fn reduce_examples() {
        let a2 = coxeter_matrix(Kind::FiniteA, 3).unwrap();
        assert_eq!(reduce(&w("1 1"), &a2).unwrap(), Word::empty());
        let x = reduce(&w("1 2 1"), &a2).unwrap();
        assert_eq!(x, reduce(&w("2 1 2"), &a2).unwrap());
        assert_eq!(x.len(), 3);
        let a3t = coxeter_matrix(Kind::AffineA, 4).unwrap();
        assert_eq!(reduce(&w("1 2 4 1"), &a3t).unwrap(), w("1 2 4 1"));
        assert_eq!(reduce(&w("1 4 2 1"), &a3t).unwrap(), w("1 2 4 1"));
    }

    #[test]
    fn finiteness() {
        for n in 2..6 {
            assert!(coxeter_matrix(Kind::FiniteA, n).unwrap().is_finite());
            assert!(!coxeter_matrix(Kind::AffineA, n).unwrap().is_finite());
        }
        let b2 = CoxeterMatrix::new(
            vec![1, 2],
            vec![vec![Bond::Finite(1), Bond::Finite(4)], vec![Bond::Finite(4), Bond::Finite(1)]],
        )
        .unwrap();
        assert!(b2.is_finite());
        assert_eq!(longest_element(&b2).unwrap().len(), 4);
    }

    #[test]
    fn longest() {
        for n in 2..=5 {
            let a = coxeter_matrix(Kind::FiniteA, n).unwrap();
            assert_eq!(longest_element(&a).unwrap().len(), n * (n - 1) / 2);
        }
        let a1 = coxeter_matrix(Kind::FiniteA, 2).unwrap();
        assert_eq!(longest_element(&a1).unwrap(), w("1"));
        let t = coxeter_matrix(Kind::AffineA, 3).unwrap();
        assert_eq!(longest_element(&t), Err(Error::NotSpherical));
    }

    #[test]
    fn weights() {
        let a3t = coxeter_matrix(Kind::AffineA, 4).unwrap();
        let x = w("1 2 4 1 3");
        let l = length(&x, &a3t).unwrap() as i64;
        for a in [0, 1, 2] {
            let lw = LengthWeights::uniform(&a3t, a);
            assert_eq!(generalized_length(&x, &a3t, &lw).unwrap(), a * l);
        }
        let mut bad = LengthWeights::uniform(&a3t, 1);
        bad.0.insert(2, 5);
        assert!(matches!(
            generalized_length(&x, &a3t, &bad),
            Err(Error::InvalidWeights(_))
        ));
        // m_12 = ∞ imposes nothing
        let a1t = coxeter_matrix(Kind::AffineA, 2).unwrap();
        let lw = LengthWeights([(1, 1), (2, 3)].into_iter().collect());
        assert_eq!(generalized_length(&w("1 2 1"), &a1t, &lw).unwrap(), 5);
    }

    #[test]
    fn bruhat_examples() {
        let a3t = coxeter_matrix(Kind::AffineA, 4).unwrap();
        assert!(bruhat_leq(&Word::empty(), &w("1 2 4 1"), &a3t).unwrap());
        assert!(bruhat_leq(&w("4 1"), &w("2 4 1"), &a3t).unwrap());
        assert!(bruhat_leq(&w("2 1"), &w("1 2 4 1"), &a3t).unwrap());
        assert!(!bruhat_leq(&w("3"), &w("1 2 4 1"), &a3t).unwrap());
    }

    #[test]
    fn coset_examples() {
        let a3t = coxeter_matrix(Kind::AffineA, 4).unwrap();
        let k = a3t.restrict(&[1, 2, 4]).unwrap();
        let reps = min_coset_reps(&k, &[2, 4], 4).unwrap();
        let expect: Vec<Word> = ["", "1", "2 1", "4 1", "2 4 1", "1 2 4 1"]
            .iter()
            .map(|s| w(s))
            .collect();
        assert_eq!(reps, expect);
        let reps = min_coset_reps(&a3t, &[2, 3, 4], 3).unwrap();
        let expect: Vec<Word> = ["", "1", "2 1", "4 1", "2 4 1", "3 2 1", "3 4 1"]
            .iter()
            .map(|s| w(s))
            .collect();
        assert_eq!(reps, expect);
        let a3 = coxeter_matrix(Kind::FiniteA, 4).unwrap();
        assert_eq!(min_coset_reps(&a3, &[1, 2, 3], 10).unwrap(), vec![Word::empty()]);
    }

    #[test]
    fn double_cosets() {
        let a3 = coxeter_matrix(Kind::FiniteA, 4).unwrap();
        let w0 = longest_element(&a3).unwrap();
        assert_eq!(min_double_coset_rep(&[1, 2, 3], &w0, &[], &a3).unwrap(), Word::empty());
        assert_eq!(min_double_coset_rep(&[1], &w("1 2"), &[2], &a3).unwrap(), Word::empty());
        assert_eq!(min_double_coset_rep(&[1], &w("2 3"), &[1], &a3).unwrap(), w("2 3"));
    }
}
