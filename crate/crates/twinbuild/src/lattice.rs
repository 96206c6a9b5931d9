//! Vertices as projective classes of `Q(i)[z]`- and `Q(i)[1/z]`-lattices in
//! `A^n`, `A = Q(i)[z, 1/z]`.
//!
//! Plus-side lattices are put in column Hermite normal form over `Q(i)[z]`:
//! upper triangular, diagonal entries monic monomials `z^d`, off-diagonal
//! entries in row `i` carrying no term of degree `≥ d_i`. The minus side is
//! handled through the ring automorphism `σ: z ↦ 1/z`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{GaussRat, LaurentMatrix, LaurentPoly};

pub use crate::building::panel::{panel_chamber, panel_parameter, PanelParam};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }

    /// `σ` for the minus side, identity for the plus side.
    pub(crate) fn to_plus(self, m: &LaurentMatrix) -> LaurentMatrix {
        match self {
            Side::Plus => m.clone(),
            Side::Minus => m.invert_z(),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "plus",
            Side::Minus => "minus",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Side::Plus),
            "minus" | "-" => Ok(Side::Minus),
            _ => Err(Error::Parse(format!("side must be plus or minus, got '{s}'"))),
        }
    }
}

/// The module spanned by the columns of `gens` over `Q(i)[z]` (plus) or
/// `Q(i)[1/z]` (minus).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub side: Side,
    pub gens: LaurentMatrix,
}

impl Lattice {
    pub fn new(side: Side, gens: LaurentMatrix) -> Result<Self> {
        if gens.unit_det().is_none() {
            return Err(Error::DegenerateLattice);
        }
        Ok(Lattice { side, gens })
    }

    /// `E_i^±`: columns `z e_1, …, z e_i, e_{i+1}, …, e_n`.
    pub fn standard(side: Side, n: usize, i: usize) -> Self {
        Lattice {
            side,
            gens: standard_diag(n, i),
        }
    }

    pub fn n(&self) -> usize {
        self.gens.dim()
    }

    pub fn canonical(&self) -> LaurentMatrix {
        let p = canonical_plus(&self.side.to_plus(&self.gens));
        self.side.to_plus(&p)
    }

    pub fn class(&self) -> LatticeClass {
        let p = canonical_plus(&self.side.to_plus(&self.gens));
        let lo = p.min_exp().expect("nonsingular matrix has entries");
        let normalized = p.map(|x| x.shift(-lo));
        LatticeClass {
            side: self.side,
            rep: self.side.to_plus(&normalized),
        }
    }

    /// `g·L`.
    pub fn transform(&self, g: &LaurentMatrix) -> Lattice {
        Lattice {
            side: self.side,
            gens: g * &self.gens,
        }
    }

    /// `z^k·L`.
    pub fn shift(&self, k: i64) -> Lattice {
        Lattice {
            side: self.side,
            gens: self.gens.map(|x| x.shift(k)),
        }
    }

    pub fn contains_vector(&self, v: &[LaurentPoly]) -> bool {
        let h = canonical_plus(&self.side.to_plus(&self.gens));
        let v: Vec<LaurentPoly> = match self.side {
            Side::Plus => v.to_vec(),
            Side::Minus => v.iter().map(|x| x.invert_z()).collect(),
        };
        back_substitute(&h, &v).is_some()
    }

    /// Module containment `other ⊆ self`.
    pub fn contains(&self, other: &Lattice) -> Result<bool> {
        if self.side != other.side {
            return Err(Error::SideMismatch("containment across sides".into()));
        }
        let h = canonical_plus(&self.side.to_plus(&self.gens));
        Ok(contains_plus(&h, &self.side.to_plus(&other.gens)))
    }
}

/// A projective class `[L] = {z^k L}` stored by its normalized canonical
/// matrix: on the plus side, entries in `Q(i)[z]` with some nonzero constant
/// term; the minus side is the `σ`-mirror.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeClass {
    pub side: Side,
    rep: LaurentMatrix,
}

impl LatticeClass {
    pub fn rep(&self) -> &LaurentMatrix {
        &self.rep
    }

    pub fn n(&self) -> usize {
        self.rep.dim()
    }

    pub fn lattice(&self) -> Lattice {
        Lattice {
            side: self.side,
            gens: self.rep.clone(),
        }
    }

    /// Exponent `k` of `det = c z^k` reduced mod `n`. The representative is
    /// triangular, so this is the sum of the diagonal exponents.
    pub fn type_of(&self) -> usize {
        let n = self.n() as i64;
        let k: i64 = (0..self.n())
            .map(|i| {
                self.rep
                    .get(i, i)
                    .as_unit()
                    .expect("canonical diagonal is a unit")
                    .1
            })
            .sum();
        k.rem_euclid(n) as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub class: LatticeClass,
    pub ty: usize,
}

impl Vertex {
    pub fn new(class: LatticeClass) -> Self {
        let ty = class.type_of();
        Vertex { class, ty }
    }
}

pub fn standard_diag(n: usize, i: usize) -> LaurentMatrix {
    LaurentMatrix::diag(
        (0..n)
            .map(|j| if j < i { LaurentPoly::z_pow(1) } else { LaurentPoly::one() })
            .collect(),
    )
}

pub fn canonical_lattice(l: &Lattice) -> Result<LaurentMatrix> {
    Lattice::new(l.side, l.gens.clone()).map(|l| l.canonical())
}

pub fn canonical_class(l: &Lattice) -> Result<LatticeClass> {
    Lattice::new(l.side, l.gens.clone()).map(|l| l.class())
}

pub fn type_of(c: &LatticeClass) -> usize {
    c.type_of()
}

/// `[M] I [M']` iff `z^{±1} M ≤ z^k M' ≤ M` for some `k`. With normalized
/// representatives (inside the standard lattice, not inside `z` times it)
/// only `k ∈ {0, 1}` can work.
pub fn incident(c1: &LatticeClass, c2: &LatticeClass) -> Result<bool> {
    if c1.side != c2.side {
        return Err(Error::SideMismatch("incidence across sides".into()));
    }
    if c1.n() != c2.n() {
        return Err(Error::Dimension("lattices of different rank".into()));
    }
    let m = c1.side.to_plus(&c1.rep);
    let m2 = c2.side.to_plus(&c2.rep);
    let zm = m.map(|x| x.shift(1));
    for k in 0..=1 {
        let zk = m2.map(|x| x.shift(k));
        if contains_plus(&m, &zk) && contains_plus(&canonical_plus(&zk), &zm) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Hermite normal form of the `Q(i)[z]`-module spanned by the columns.
/// Requires a unit determinant.
pub(crate) fn canonical_plus(g: &LaurentMatrix) -> LaurentMatrix {
    let lo = g.min_exp().unwrap_or(0);
    let m = g.map(|x| x.shift(-lo));
    let (_, k) = m.unit_det().expect("unit determinant");
    let h = triangulate_local(m.clone(), k).unwrap_or_else(|| triangulate_euclid(m));
    reduce_above_diagonal(h).map(|x| x.shift(lo))
}

/// Terms of degree below `k`.
fn truncate(p: &LaurentPoly, k: i64) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().filter(|(e, _)| *e < k).map(|(e, c)| (e, c.clone())))
}

/// `u^{-1} mod z^k` for `u` with nonzero constant term.
fn inverse_series(u: &LaurentPoly, k: i64) -> LaurentPoly {
    let u0_inv = u.coeff(0).inv();
    let mut b: Vec<GaussRat> = vec![u0_inv.clone()];
    for m in 1..k {
        let mut acc = GaussRat::zero();
        for (e, c) in u.terms() {
            if e >= 1 && e <= m {
                acc += &(c * &b[(m - e) as usize]);
            }
        }
        b.push(-(&acc * &u0_inv));
    }
    LaurentPoly::from_terms(b.into_iter().enumerate().map(|(e, c)| (e as i64, c)))
}

/// Column reduction over `Q(i)[z]/z^k` for a polynomial matrix with
/// `det = c z^k`. The module contains `z^k Q(i)[z]^n`, so entries may be
/// truncated and pivots chosen by valuation. Returns upper triangular
/// columns with diagonal `z^{d_i}`, or `None` when a row vanishes mod `z^k`.
fn triangulate_local(mut m: LaurentMatrix, k: i64) -> Option<LaurentMatrix> {
    let n = m.dim();
    m = m.map(|x| truncate(x, k));
    let mut total = 0;
    for i in (0..n).rev() {
        let best = (0..=i)
            .filter(|&c| !m.get(i, c).is_zero())
            .min_by_key(|&c| m.get(i, c).min_exp().unwrap())?;
        if best != i {
            m.swap_cols(best, i);
        }
        let v = m.get(i, i).min_exp().unwrap();
        let u_inv = inverse_series(&m.get(i, i).shift(-v), k);
        for c in 0..i {
            if m.get(i, c).is_zero() {
                continue;
            }
            let q = truncate(&(&m.get(i, c).shift(-v) * &u_inv), k);
            m.add_col_multiple(c, i, &-q);
            for r in 0..n {
                let t = truncate(m.get(r, c), k);
                m.set(r, c, t);
            }
            debug_assert!(m.get(i, c).is_zero());
        }
        m.scale_col(i, &u_inv);
        for r in 0..n {
            let t = truncate(m.get(r, i), k);
            m.set(r, i, t);
        }
        total += v;
    }
    // the columns span the whole module only if the index comes out right
    (total == k).then_some(m)
}

/// Column reduction by Euclidean division on degrees.
fn triangulate_euclid(mut m: LaurentMatrix) -> LaurentMatrix {
    let n = m.dim();
    for i in (0..n).rev() {
        loop {
            // pivot: smallest degree among columns 0..=i in row i
            let best = (0..=i)
                .filter(|&c| !m.get(i, c).is_zero())
                .min_by_key(|&c| m.get(i, c).max_exp().unwrap())
                .expect("nonsingular matrix");
            if best != i {
                m.swap_cols(best, i);
            }
            let mut done = true;
            for c in 0..i {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let (q, r) = m.get(i, c).poly_div_rem(m.get(i, i));
                m.add_col_multiple(c, i, &-q);
                if !r.is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        let (_, lead) = m.get(i, i).high_term().unwrap();
        let inv = LaurentPoly::constant(lead.inv());
        m.scale_col(i, &inv);
    }
    m
}

/// Reduces row `i` above the diagonal modulo `z^{d_i}`.
fn reduce_above_diagonal(mut m: LaurentMatrix) -> LaurentMatrix {
    let n = m.dim();
    for i in (0..n).rev() {
        let d = m.get(i, i).max_exp().unwrap();
        debug_assert_eq!(m.get(i, i).num_terms(), 1, "diagonal must be monomial");
        for j in i + 1..n {
            let high = LaurentPoly::from_terms(
                m.get(i, j)
                    .terms()
                    .filter(|(e, _)| *e >= d)
                    .map(|(e, c)| (e - d, c.clone())),
            );
            m.add_col_multiple(j, i, &-high);
        }
    }
    m
}

/// Solve `H x = v` for upper triangular `H` with unit diagonal; `Some` iff
/// `x` has polynomial entries.
fn back_substitute(h: &LaurentMatrix, v: &[LaurentPoly]) -> Option<Vec<LaurentPoly>> {
    let n = h.dim();
    let mut x = vec![LaurentPoly::zero(); n];
    for i in (0..n).rev() {
        let mut r = v[i].clone();
        for j in i + 1..n {
            if !x[j].is_zero() && !h.get(i, j).is_zero() {
                r = &r - &(h.get(i, j) * &x[j]);
            }
        }
        let (c, e) = h.get(i, i).as_unit()?;
        let xi = r.div_unit(&c, e);
        if !xi.is_polynomial() {
            return None;
        }
        x[i] = xi;
    }
    Some(x)
}

/// Whether the columns of `a` lie in the module with canonical form `h`.
fn contains_plus(h: &LaurentMatrix, a: &LaurentMatrix) -> bool {
    (0..a.dim()).all(|j| back_substitute(h, &a.column(j)).is_some())
}
