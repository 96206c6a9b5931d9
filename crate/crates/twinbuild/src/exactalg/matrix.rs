use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GaussRat, LaurentPoly};
use crate::error::{Error, Result};

/// Square matrix over `Q(i)[z, 1/z]`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    n: usize,
    data: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix must be square".into()));
        }
        Ok(LaurentMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        LaurentMatrix { n, data }
    }

    pub fn from_columns(cols: &[Vec<LaurentPoly>]) -> Self {
        let n = cols.len();
        LaurentMatrix::from_fn(n, |i, j| cols[j][i].clone())
    }

    pub fn zero(n: usize) -> Self {
        LaurentMatrix::from_fn(n, |_, _| LaurentPoly::zero())
    }

    pub fn identity(n: usize) -> Self {
        LaurentMatrix::from_fn(n, |i, j| {
            if i == j {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        })
    }

    pub fn diag(d: Vec<LaurentPoly>) -> Self {
        let n = d.len();
        let mut m = LaurentMatrix::zero(n);
        for (i, x) in d.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    /// `E_ij` scaled by `f` (0-based indices).
    pub fn elementary(n: usize, i: usize, j: usize, f: LaurentPoly) -> Self {
        let mut m = LaurentMatrix::zero(n);
        m.set(i, j, f);
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut LaurentPoly {
        &mut self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<LaurentPoly> {
        self.data[i * self.n..(i + 1) * self.n].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<LaurentPoly>> {
        (0..self.n).map(|j| self.column(j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        (0..self.n).map(|i| self.row(i)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &LaurentPoly> {
        self.data.iter()
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        LaurentMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        LaurentMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map(|x| x * c)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        *self == LaurentMatrix::identity(self.n)
    }

    pub fn is_constant(&self) -> bool {
        self.data.iter().all(|x| x.is_constant())
    }

    pub fn trace(&self) -> LaurentPoly {
        let mut t = LaurentPoly::zero();
        for i in 0..self.n {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.data.iter().filter_map(|x| x.min_exp()).min()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.data.iter().filter_map(|x| x.max_exp()).max()
    }

    pub fn apply(&self, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
        (0..self.n)
            .map(|i| {
                let mut acc = LaurentPoly::zero();
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() && !self.get(i, j).is_zero() {
                        acc = &acc + &(self.get(i, j) * vj);
                    }
                }
                acc
            })
            .collect()
    }

    /// Determinant by expansion over column subsets (exact, `O(2^n n)` ring
    /// operations).
    pub fn det(&self) -> LaurentPoly {
        let rows: Vec<usize> = (0..self.n).collect();
        let cols: Vec<usize> = (0..self.n).collect();
        self.minor_det(&rows, &cols)
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> LaurentPoly {
        let k = rows.len();
        if k == 0 {
            return LaurentPoly::one();
        }
        let mut dp: Vec<LaurentPoly> = vec![LaurentPoly::zero(); 1 << k];
        dp[0] = LaurentPoly::one();
        for mask in 0usize..(1 << k) {
            if dp[mask].is_zero() {
                continue;
            }
            let r = mask.count_ones() as usize;
            if r == k {
                continue;
            }
            let cur = dp[mask].clone();
            for c in 0..k {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let e = self.get(rows[r], cols[c]);
                if e.is_zero() {
                    continue;
                }
                let above = (mask >> (c + 1)).count_ones();
                let term = &cur * e;
                let slot = &mut dp[mask | (1 << c)];
                *slot = if above % 2 == 0 {
                    &*slot + &term
                } else {
                    &*slot - &term
                };
            }
        }
        dp[(1 << k) - 1].clone()
    }

    pub fn is_special(&self) -> bool {
        self.det().is_one()
    }

    /// `det = c z^k` with `c != 0`, i.e. invertible over the Laurent ring.
    pub fn unit_det(&self) -> Option<(GaussRat, i64)> {
        self.det().as_unit()
    }

    pub fn adjugate(&self) -> Self {
        let n = self.n;
        LaurentMatrix::from_fn(n, |i, j| {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let m = self.minor_det(&rows, &cols);
            if (i + j) % 2 == 0 {
                m
            } else {
                -&m
            }
        })
    }

    /// Inverse over the Laurent ring; `None` unless the determinant is a unit.
    pub fn inverse(&self) -> Option<Self> {
        let (c, e) = self.unit_det()?;
        Some(self.adjugate().map(|x| x.div_unit(&c, e)))
    }

    pub fn z_d_dz(&self) -> Self {
        self.map(|x| x.z_d_dz())
    }

    /// Conjugate transpose of a constant matrix.
    pub fn star(&self) -> Result<Self> {
        if !self.is_constant() {
            return Err(Error::NonConstant);
        }
        Ok(LaurentMatrix::from_fn(self.n, |i, j| self.get(j, i).conj()))
    }

    /// `(Σ X_k z^k)^# = Σ (X_{-k})^* z^k`.
    pub fn sharp(&self) -> Self {
        LaurentMatrix::from_fn(self.n, |i, j| self.get(j, i).sharp())
    }

    /// Coefficientwise complex conjugation.
    pub fn iota(&self) -> Self {
        self.map(|x| x.conj())
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|x| x.is_real())
    }

    /// The substitution `z -> 1/z` applied entrywise.
    pub fn invert_z(&self) -> Self {
        self.map(|x| x.invert_z())
    }

    pub fn eval_const(&self) -> Vec<Vec<GaussRat>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).coeff(0)).collect())
            .collect()
    }

    /// Column operation `col_dst += f * col_src`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, f: &LaurentPoly) {
        if f.is_zero() {
            return;
        }
        for i in 0..self.n {
            let add = self.get(i, src) * f;
            if !add.is_zero() {
                let cur = self.get(i, dst);
                let new = cur + &add;
                self.set(i, dst, new);
            }
        }
    }

    /// Row operation `row_dst += f * row_src`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, f: &LaurentPoly) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.n {
            let add = f * self.get(src, j);
            if !add.is_zero() {
                let cur = self.get(dst, j);
                let new = cur + &add;
                self.set(dst, j, new);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.n {
            self.data.swap(i * self.n + a, i * self.n + b);
        }
    }

    pub fn scale_col(&mut self, j: usize, f: &LaurentPoly) {
        for i in 0..self.n {
            let v = self.get(i, j) * f;
            self.set(i, j, v);
        }
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<'a> Mul<&'a LaurentMatrix> for &'a LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, o: &'a LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut r = LaurentMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = r.get(i, j) + &(a * b);
                    r.set(i, j, v);
                }
            }
        }
        r
    }
}

impl<'a> Add<&'a LaurentMatrix> for &'a LaurentMatrix {
    type Output = LaurentMatrix;
    fn add(self, o: &'a LaurentMatrix) -> LaurentMatrix {
        LaurentMatrix::from_fn(self.n, |i, j| self.get(i, j) + o.get(i, j))
    }
}

impl<'a> Sub<&'a LaurentMatrix> for &'a LaurentMatrix {
    type Output = LaurentMatrix;
    fn sub(self, o: &'a LaurentMatrix) -> LaurentMatrix {
        LaurentMatrix::from_fn(self.n, |i, j| self.get(i, j) - o.get(i, j))
    }
}

impl Neg for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn neg(self) -> LaurentMatrix {
        self.map(|x| -x)
    }
}

impl Mul for LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, o: LaurentMatrix) -> LaurentMatrix {
        &self * &o
    }
}
