//! Affine charts on panels.
//!
//! For a panel of type `s` stored with chamber `g·C₀`, the chart is
//! `t ↦ g·y_s(t)·C₀` with `t = 0` the stored chamber and `t = ∞` the chamber
//! `g·n_s·C₀` of the same apartment. In infinite indices `s` swaps `p, p+1`
//! (`p = j - 1` for `s_j`, `j ≥ 2`; `p = 0` for `s_1`):
//!
//! * plus side: `y_s(t)` adds `t·(basis p)` to column `p + 1`,
//! * minus side: `y_s(t)` adds `t·(basis p+1)` to column `p`.

use std::fmt;
use std::str::FromStr;

use super::elim::inf_entry;
use super::{monomial, Chamber, Simplex};
use crate::coxeter::AffineWeylElt;
use crate::error::{Error, Result};
use crate::exactalg::{GaussRat, LaurentMatrix, LaurentPoly};
use crate::lattice::Side;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PanelParam {
    Finite(GaussRat),
    Infinity,
}

impl fmt::Display for PanelParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PanelParam::Finite(t) => write!(f, "{t}"),
            PanelParam::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for PanelParam {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(PanelParam::Infinity),
            t => Ok(PanelParam::Finite(t.parse()?)),
        }
    }
}

impl From<GaussRat> for PanelParam {
    fn from(t: GaussRat) -> Self {
        PanelParam::Finite(t)
    }
}

/// The chart matrix `y_s(t)` on the given side.
pub fn chart_matrix(side: Side, n: usize, s: usize, t: &GaussRat) -> Result<LaurentMatrix> {
    if s == 0 || s > n {
        return Err(Error::BadGenerator(s));
    }
    let mut y = LaurentMatrix::identity(n);
    let (row, col, e) = match (side, s) {
        (Side::Plus, 1) => (n - 1, 0, -1),
        (Side::Plus, j) => (j - 2, j - 1, 0),
        (Side::Minus, 1) => (0, n - 1, 1),
        (Side::Minus, j) => (j - 1, j - 2, 0),
    };
    y.set(row, col, LaurentPoly::monomial(t.clone(), e));
    Ok(y)
}

fn panel_generator(panel: &Simplex) -> Result<usize> {
    let n = panel.chamber().n();
    if panel.types().len() != n - 1 {
        return Err(Error::Rank(format!(
            "a panel has {} vertices, got {}",
            n - 1,
            panel.types().len()
        )));
    }
    let missing = (0..n).find(|t| !panel.types().contains(t)).unwrap();
    Ok(missing + 1)
}

/// The chamber with chart parameter `t` on the panel.
pub fn panel_chamber(panel: &Simplex, t: &PanelParam) -> Result<Chamber> {
    let s = panel_generator(panel)?;
    let base = panel.chamber();
    let n = base.n();
    let step = match t {
        PanelParam::Finite(t) => chart_matrix(base.side(), n, s, t)?,
        PanelParam::Infinity => monomial(&AffineWeylElt::generator(n, s)?),
    };
    Ok(Chamber::unchecked(base.side(), base.rep() * &step))
}

/// Inverse of [`panel_chamber`]; errors if `c` does not contain the panel.
pub fn panel_parameter(panel: &Simplex, c: &Chamber) -> Result<PanelParam> {
    let s = panel_generator(panel)?;
    let base = panel.chamber();
    if c.side() != base.side() {
        return Err(Error::SideMismatch("chamber and panel on different sides".into()));
    }
    let x = &base.rep().inverse().expect("determinant one") * c.rep();
    let p = if s == 1 { 0 } else { s as i64 - 1 };
    let (num, den) = match base.side() {
        Side::Plus => (inf_entry(&x, p, p + 1), inf_entry(&x, p + 1, p + 1)),
        Side::Minus => (inf_entry(&x, p + 1, p), inf_entry(&x, p, p)),
    };
    let t = if den.is_zero() {
        PanelParam::Infinity
    } else {
        PanelParam::Finite(&num * &den.inv())
    };
    if panel_chamber(panel, &t)? != *c {
        return Err(Error::Rank("chamber does not contain the panel".into()));
    }
    Ok(t)
}
