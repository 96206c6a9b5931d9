//! Coordinates on a Schubert cell of the plus half, relative to an opposite
//! pair `(C₀, D₀)`.
//!
//! For a reduced word `s_1 ⋯ s_r` and the minimal gallery `C₀, …, C_r` of
//! that type, `D_k` is the chamber at position `s_1 ⋯ s_k` from `D₀` in the
//! twin apartment of `(C₀, D₀)`. The `k`-th coordinate is
//! `X_k = proj_{D_{k-1} ∩ D_k} C_k`, read in the chart of that panel based at
//! `D_{k-1}` (so `X_k ≠ D_k` means the coordinate is finite). Decoding
//! recovers `C_k = proj_{C_{k-1} ∩ C_k} X_k`.

use super::panel::{panel_chamber, panel_parameter, PanelParam};
use super::{
    affine_cm, common_representative, delta, monomial, project_twin, same_side_decomposition, Chamber,
};
use crate::coxeter::{is_reduced, word_to_affine, Word};
use crate::error::{Error, Result};
use crate::exactalg::{GaussRat, LaurentMatrix};
use crate::lattice::Side;

fn check_pair(c0: &Chamber, d0: &Chamber, word: &Word) -> Result<LaurentMatrix> {
    if c0.side() != Side::Plus || d0.side() != Side::Minus {
        return Err(Error::SideMismatch("expected C0 plus and D0 minus".into()));
    }
    if !is_reduced(word, &affine_cm(c0.n()))? {
        return Err(Error::NotReduced);
    }
    common_representative(d0, c0)
}

fn minus_gallery(g: &LaurentMatrix, word: &Word, n: usize) -> Result<Vec<Chamber>> {
    (0..=word.len())
        .map(|k| {
            let w = word_to_affine(&Word(word.0[..k].to_vec()), n)?;
            Ok(Chamber::unchecked(Side::Minus, g * &monomial(&w)))
        })
        .collect()
}

pub fn encode_coords(c0: &Chamber, d0: &Chamber, e: &Chamber, word: &Word) -> Result<Vec<GaussRat>> {
    let g = check_pair(c0, d0, word)?;
    let n = c0.n();
    let w = word_to_affine(word, n)?;
    let actual = delta(c0, e)?;
    if actual != w {
        return Err(Error::DistanceMismatch(format!("delta(C0, E) = {actual}, word gives {w}")));
    }
    let dec = same_side_decomposition(c0, e)?;
    let base = c0.rep() * &dec.left;
    let ds = minus_gallery(&g, word, n)?;
    let mut out = Vec::with_capacity(word.len());
    for k in 1..=word.len() {
        let prefix = word_to_affine(&Word(word.0[..k].to_vec()), n)?;
        let ck = Chamber::unchecked(Side::Plus, &base * &monomial(&prefix));
        let panel = ds[k - 1].panel(word.0[k - 1])?;
        let xk = project_twin(&panel, &ck)?;
        match panel_parameter(&panel, &xk)? {
            PanelParam::Finite(t) => out.push(t),
            PanelParam::Infinity => {
                return Err(Error::DistanceMismatch(format!("coordinate {k} hit the apartment chamber")))
            }
        }
    }
    Ok(out)
}

pub fn decode_coords(c0: &Chamber, d0: &Chamber, word: &Word, coords: &[GaussRat]) -> Result<Chamber> {
    let g = check_pair(c0, d0, word)?;
    if coords.len() != word.len() {
        return Err(Error::Dimension(format!(
            "{} coordinates for a word of length {}",
            coords.len(),
            word.len()
        )));
    }
    let n = c0.n();
    let ds = minus_gallery(&g, word, n)?;
    let mut cur = Chamber::unchecked(Side::Plus, g.clone());
    for (k, t) in coords.iter().enumerate() {
        let s = word.0[k];
        let xk = panel_chamber(&ds[k].panel(s)?, &PanelParam::Finite(t.clone()))?;
        cur = project_twin(&cur.panel(s)?, &xk)?;
    }
    Ok(cur)
}
