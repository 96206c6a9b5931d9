//! The twin building of `SL_n(A)`, `A = Q(i)[z, 1/z]`.
//!
//! A chamber on side `±` is stored as `g·C₀^±` for a representative
//! `g ∈ SL_n(A)`; its vertices are the classes `[g E_i^±]`. The stabilizer of
//! `C₀⁺` is `B⁺`: entries in `Q(i)[z]`, entries above the diagonal divisible
//! by `z`. The stabilizer of `C₀⁻` is `B⁻`: entries in `Q(i)[1/z]`, entries
//! below the diagonal divisible by `1/z`.
//!
//! Generator labels follow [`crate::coxeter::AffineWeylElt`]: `s_1` moves the
//! vertex of type `0`, `s_j` (`j ≥ 2`) the vertex of type `j - 1`.

mod coords;
pub(crate) mod elim;
pub mod panel;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::coxeter::{
    affine_to_word, coxeter_matrix, longest_element, min_double_coset_rep, word_to_affine,
    AffineWeylElt, CoxeterMatrix, Kind, Word,
};
use crate::error::{Error, Result};
use crate::exactalg::{GaussRat, LaurentMatrix, LaurentPoly};
use crate::lattice::{standard_diag, Lattice, Side, Vertex};
use elim::{decompose, Decomposition, Modify, Pivot};

pub use coords::{decode_coords, encode_coords};
pub use panel::{panel_chamber, panel_parameter, PanelParam};

#[derive(Clone)]
pub struct Chamber {
    side: Side,
    rep: LaurentMatrix,
    verts: OnceLock<Vec<Vertex>>,
}

impl Chamber {
    /// `g·C₀^±` for `g` of determinant one.
    pub fn from_rep(side: Side, g: LaurentMatrix) -> Result<Self> {
        if !g.is_special() {
            return Err(Error::NotSpecial);
        }
        Ok(Chamber::unchecked(side, g))
    }

    pub(crate) fn unchecked(side: Side, rep: LaurentMatrix) -> Self {
        Chamber {
            side,
            rep,
            verts: OnceLock::new(),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn n(&self) -> usize {
        self.rep.dim()
    }

    /// A representative, determined up to right multiplication by `B^±`.
    pub fn rep(&self) -> &LaurentMatrix {
        &self.rep
    }

    /// Vertices ordered by type `0, …, n-1`.
    pub fn vertices(&self) -> &[Vertex] {
        self.verts.get_or_init(|| {
            (0..self.n())
                .map(|i| {
                    let l = Lattice {
                        side: self.side,
                        gens: &self.rep * &standard_diag(self.n(), i),
                    };
                    let v = Vertex::new(l.class());
                    debug_assert_eq!(v.ty, i);
                    v
                })
                .collect()
        })
    }

    pub fn act(&self, g: &LaurentMatrix) -> Result<Chamber> {
        if !g.is_special() {
            return Err(Error::NotSpecial);
        }
        Ok(Chamber::unchecked(self.side, g * &self.rep))
    }

    /// The chamber `g·n_w·C₀` in the apartment of this representative.
    pub fn apartment_neighbor(&self, w: &AffineWeylElt) -> Chamber {
        Chamber::unchecked(self.side, &self.rep * &monomial(w))
    }

    /// The face of the given vertex types.
    pub fn face(&self, types: &[usize]) -> Result<Simplex> {
        Simplex::new(self.clone(), types)
    }

    /// The panel of type `s` (all vertices except type `s - 1`).
    pub fn panel(&self, s: usize) -> Result<Simplex> {
        let n = self.n();
        if s == 0 || s > n {
            return Err(Error::BadGenerator(s));
        }
        let types: Vec<usize> = (0..n).filter(|&t| t != s - 1).collect();
        Simplex::new(self.clone(), &types)
    }
}

impl PartialEq for Chamber {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && self.n() == other.n() && self.vertices() == other.vertices()
    }
}

impl Eq for Chamber {}

impl Hash for Chamber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.side.hash(state);
        self.vertices().hash(state);
    }
}

impl fmt::Debug for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chamber({}, {})", self.side, self.rep)
    }
}

/// A face of a chamber, given by a chamber containing it and the vertex
/// types it keeps.
#[derive(Clone)]
pub struct Simplex {
    chamber: Chamber,
    types: Vec<usize>,
}

impl Simplex {
    pub fn new(chamber: Chamber, types: &[usize]) -> Result<Self> {
        let n = chamber.n();
        let mut types = types.to_vec();
        types.sort_unstable();
        types.dedup();
        if let Some(&t) = types.iter().find(|&&t| t >= n) {
            return Err(Error::Rank(format!("vertex type {t} out of range for n = {n}")));
        }
        Ok(Simplex { chamber, types })
    }

    pub fn chamber(&self) -> &Chamber {
        &self.chamber
    }

    pub fn side(&self) -> Side {
        self.chamber.side
    }

    pub fn types(&self) -> &[usize] {
        &self.types
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let all = self.chamber.vertices();
        self.types.iter().map(|&t| all[t].clone()).collect()
    }

    /// Generators of the residue: `s_j` with vertex type `j - 1` not in the
    /// simplex.
    pub fn residue_type(&self) -> Vec<usize> {
        (1..=self.chamber.n())
            .filter(|j| !self.types.contains(&(j - 1)))
            .collect()
    }

    pub fn contained_in(&self, c: &Chamber) -> bool {
        let cv = c.vertices();
        c.side == self.side() && self.vertices().iter().all(|v| cv[v.ty] == *v)
    }
}

impl PartialEq for Simplex {
    fn eq(&self, other: &Self) -> bool {
        self.side() == other.side() && self.types == other.types && self.vertices() == other.vertices()
    }
}

impl Eq for Simplex {}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simplex({:?} of {:?})", self.types, self.chamber)
    }
}

/// Minimal representative of `W_J w W_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPosition {
    pub left: Vec<usize>,
    pub rep: Word,
    pub right: Vec<usize>,
}

pub fn affine_cm(n: usize) -> CoxeterMatrix {
    coxeter_matrix(Kind::AffineA, n).expect("n >= 2")
}

/// `ρ`: `e_j ↦ e_{j+1}`, `e_n ↦ z e_1`, so `ρ E_i^± = E_{i+1}^±`.
fn rotation(n: usize) -> LaurentMatrix {
    let mut r = LaurentMatrix::zero(n);
    for j in 0..n - 1 {
        r.set(j + 1, j, LaurentPoly::one());
    }
    r.set(0, n - 1, LaurentPoly::z_pow(1));
    r
}

fn rotation_inv(n: usize) -> LaurentMatrix {
    let mut r = LaurentMatrix::zero(n);
    for j in 0..n - 1 {
        r.set(j, j + 1, LaurentPoly::one());
    }
    r.set(n - 1, 0, LaurentPoly::z_pow(-1));
    r
}

fn power(m: &LaurentMatrix, inv: &LaurentMatrix, k: i64) -> LaurentMatrix {
    let base = if k >= 0 { m } else { inv };
    let mut acc = LaurentMatrix::identity(m.dim());
    for _ in 0..k.unsigned_abs() {
        acc = &acc * base;
    }
    acc
}

/// Monomial matrix of `(π, k)` in `SL_n(A)`; the sign of `π` is absorbed in
/// the first column.
pub fn monomial(w: &AffineWeylElt) -> LaurentMatrix {
    let n = w.n();
    let mut m = LaurentMatrix::zero(n);
    let mut sign = 1i64;
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            c = w.perm[c] - 1;
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    for j in 0..n {
        let p = w.perm[j];
        let c = if j == 0 { sign } else { 1 };
        m.set(p - 1, j, LaurentPoly::monomial(GaussRat::from_int(c), w.shift[p - 1]));
    }
    m
}

pub fn standard_chamber(side: Side, n: usize) -> Chamber {
    Chamber::unchecked(side, LaurentMatrix::identity(n))
}

/// `E^±(𝔅)`: the chamber with vertices `[span{z v_1, …, z v_i, v_{i+1}, …}]`.
pub fn chamber_from_basis(side: Side, basis: &LaurentMatrix) -> Result<Chamber> {
    let n = basis.dim();
    if n < 2 {
        return Err(Error::InvalidRank(format!("n = {n}")));
    }
    let (_, k) = basis.unit_det().ok_or(Error::DegenerateLattice)?;
    // ρ permutes the vertices of C₀ cyclically, so 𝔅ρ^{-k} spans the same
    // chamber and has constant determinant.
    let mut g = basis * &power(&rotation(n), &rotation_inv(n), -k);
    let (c, e) = g.unit_det().expect("unit determinant");
    debug_assert_eq!(e, 0);
    g.scale_col(0, &LaurentPoly::constant(c.inv()));
    Ok(Chamber::unchecked(side, g))
}

/// `g ∈ B^±`, for `det g = 1`.
pub fn borel_membership(side: Side, g: &LaurentMatrix) -> Result<bool> {
    if !g.is_special() {
        return Err(Error::NotSpecial);
    }
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            let x = g.get(i, j);
            if x.is_zero() {
                continue;
            }
            let ok = match side {
                Side::Plus => x.min_exp().unwrap() >= (i < j) as i64,
                Side::Minus => x.max_exp().unwrap() <= -((i > j) as i64),
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn inverse_sl(g: &LaurentMatrix) -> LaurentMatrix {
    g.inverse().expect("determinant-one matrix is invertible")
}

fn same_side_decomposition(c: &Chamber, d: &Chamber) -> Result<Decomposition> {
    if c.side != d.side {
        return Err(Error::SideMismatch("delta needs chambers on one side".into()));
    }
    check_dims(c, d)?;
    let x = &inverse_sl(&c.rep) * &d.rep;
    Ok(match c.side {
        Side::Plus => decompose(&x, Pivot::Top, Modify::Smaller),
        Side::Minus => decompose(&x, Pivot::Bottom, Modify::Larger),
    })
}

fn twin_decomposition(c: &Chamber, d: &Chamber) -> Result<Decomposition> {
    if c.side == d.side {
        return Err(Error::SideMismatch("codelta needs chambers on opposite sides".into()));
    }
    check_dims(c, d)?;
    let x = &inverse_sl(&c.rep) * &d.rep;
    Ok(match c.side {
        Side::Minus => decompose(&x, Pivot::Bottom, Modify::Smaller),
        Side::Plus => decompose(&x, Pivot::Top, Modify::Larger),
    })
}

fn check_dims(c: &Chamber, d: &Chamber) -> Result<()> {
    if c.n() != d.n() {
        return Err(Error::Dimension(format!("n = {} vs n = {}", c.n(), d.n())));
    }
    Ok(())
}

/// Weyl distance: the `w` with `g⁻¹h ∈ B w B`.
pub fn delta(c: &Chamber, d: &Chamber) -> Result<AffineWeylElt> {
    Ok(same_side_decomposition(c, d)?.w)
}

/// Codistance of chambers on opposite sides: the `w` with
/// `g⁻¹h ∈ B^ε w B^{-ε}`, `ε` the side of `c`.
pub fn codelta(c: &Chamber, d: &Chamber) -> Result<AffineWeylElt> {
    Ok(twin_decomposition(c, d)?.w)
}

pub fn opposite(c: &Chamber, d: &Chamber) -> Result<bool> {
    Ok(codelta(c, d)?.is_identity())
}

fn position(x: &Simplex, y: &Simplex, w: &AffineWeylElt) -> Result<TwinPosition> {
    let cm = affine_cm(w.n());
    let left = x.residue_type();
    let right = y.residue_type();
    let rep = min_double_coset_rep(&left, &affine_to_word(w), &right, &cm)?;
    Ok(TwinPosition { left, rep, right })
}

pub fn simplex_delta(x: &Simplex, y: &Simplex) -> Result<TwinPosition> {
    let w = delta(x.chamber(), y.chamber())?;
    position(x, y, &w)
}

pub fn simplex_codelta(x: &Simplex, y: &Simplex) -> Result<TwinPosition> {
    let w = codelta(x.chamber(), y.chamber())?;
    position(x, y, &w)
}

fn spherical_residue(x: &Simplex) -> Result<Vec<usize>> {
    if x.types.is_empty() {
        return Err(Error::Rank("empty simplex has a non-spherical residue".into()));
    }
    Ok(x.residue_type())
}

/// The gate `proj_X C`: the chamber of `Res(X)` nearest to `C`.
///
/// With `δ(C, D) = u` for the stored chamber `D ⊇ X`, write `u = u' v`,
/// `u'` minimal in `uW_J`. In an apartment containing `C` and `D` the gate
/// sits at position `u'` from `C`.
pub fn project(x: &Simplex, c: &Chamber) -> Result<Chamber> {
    let j = spherical_residue(x)?;
    let dec = same_side_decomposition(c, x.chamber())?;
    let cm = affine_cm(c.n());
    let u_min = min_double_coset_rep(&[], &affine_to_word(&dec.w), &j, &cm)?;
    let g = &c.rep * &dec.left;
    Ok(Chamber::unchecked(c.side, &g * &monomial(&word_to_affine(&u_min, c.n())?)))
}

/// The chamber of `Res(X)` with the longest codistance to `C` (other side).
/// It sits at position `u' w_J` from `C` in a twin apartment containing `C`
/// and the stored chamber of `X`, where `u'` is minimal in `δ*(C, D) W_J`.
pub fn project_twin(x: &Simplex, c: &Chamber) -> Result<Chamber> {
    let j = spherical_residue(x)?;
    let dec = twin_decomposition(c, x.chamber())?;
    let cm = affine_cm(c.n());
    let u_min = min_double_coset_rep(&[], &affine_to_word(&dec.w), &j, &cm)?;
    let w_j = longest_element(&cm.restrict(&j)?)?;
    let u_max = word_to_affine(&u_min.concat(&w_j), c.n())?;
    let g = &c.rep * &dec.left;
    Ok(Chamber::unchecked(x.side(), &g * &monomial(&u_max)))
}

/// The chamber at Weyl position `w` from `E^±(𝔅)` in the apartment of `𝔅`.
pub fn apartment_chamber(side: Side, basis: &LaurentMatrix, w: &AffineWeylElt) -> Result<Chamber> {
    let base = chamber_from_basis(side, basis)?;
    if w.n() != base.n() {
        return Err(Error::Dimension("Weyl element rank".into()));
    }
    Ok(base.apartment_neighbor(w))
}

/// A common representative `g` with `g C₀⁺ = c_plus` and `g C₀⁻ = c_minus`.
pub fn common_representative(c_minus: &Chamber, c_plus: &Chamber) -> Result<LaurentMatrix> {
    if c_minus.side != Side::Minus || c_plus.side != Side::Plus {
        return Err(Error::SideMismatch("expected (minus, plus) chambers".into()));
    }
    let dec = twin_decomposition(c_minus, c_plus)?;
    if !dec.w.is_identity() {
        return Err(Error::NotOpposite);
    }
    Ok(&c_minus.rep * &dec.left)
}
