//! Parsers for command-line values. Everything here fails with a usage
//! error.

use num_rational::BigRational;

use twinbuild::building::{standard_chamber, Chamber};
use twinbuild::coxeter::{coxeter_matrix, CoxeterMatrix, Kind, Word};
use twinbuild::exactalg::{GaussRat, LaurentMatrix};
use twinbuild::lattice::Side;

use crate::CliError;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// `A3` is the finite group on labels 1..3, `~A3` the affine group on
/// labels 1..4.
pub fn coxeter_type(s: &str) -> Result<(Kind, usize), CliError> {
    let t = s.trim();
    let (kind, rest) = match t.strip_prefix('~') {
        Some(r) => (Kind::AffineA, r),
        None => (Kind::FiniteA, t),
    };
    let rank: usize = rest
        .strip_prefix('A')
        .and_then(|r| r.parse().ok())
        .filter(|&r| r >= 1)
        .ok_or_else(|| usage(format!("bad type '{s}', expected A<r> or ~A<r>")))?;
    Ok((kind, rank + 1))
}

pub fn coxeter(s: &str) -> Result<CoxeterMatrix, CliError> {
    let (kind, n) = coxeter_type(s)?;
    Ok(coxeter_matrix(kind, n)?)
}

/// Comma-separated labels, optionally prefixed `J=`.
pub fn labels(s: &str) -> Result<Vec<usize>, CliError> {
    let body = s.trim();
    let body = body.split_once('=').map_or(body, |(_, b)| b);
    body.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| usage(format!("bad label '{t}'"))))
        .collect()
}

pub fn word(s: &str) -> Result<Word, CliError> {
    s.parse().map_err(|_| usage(format!("bad word '{s}'")))
}

pub fn matrix(s: &str) -> Result<LaurentMatrix, CliError> {
    s.parse().map_err(|e| usage(format!("bad matrix '{s}': {e}")))
}

pub fn side(s: &str) -> Result<Side, CliError> {
    s.parse().map_err(|e: twinbuild::error::Error| usage(e.to_string()))
}

pub fn rational(s: &str) -> Result<BigRational, CliError> {
    s.trim().parse().map_err(|_| usage(format!("bad rational '{s}'")))
}

pub fn scalar(s: &str) -> Result<GaussRat, CliError> {
    s.trim().parse().map_err(|_| usage(format!("bad coefficient '{s}'")))
}

pub fn scalars(s: &str) -> Result<Vec<GaussRat>, CliError> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(scalar).collect()
}

pub fn rationals(s: &str) -> Result<Vec<BigRational>, CliError> {
    s.split(',').map(rational).collect()
}

/// A chamber from a representative, or the standard chamber of rank `n`.
pub fn chamber(rep: Option<&str>, side: Side, n: Option<usize>, flag: &str) -> Result<Chamber, CliError> {
    match (rep, n) {
        (Some(s), _) => {
            let m = matrix(s)?;
            if n.is_some_and(|n| n != m.dim()) {
                return Err(usage(format!("--{flag} has size {}, --n is {}", m.dim(), n.unwrap())));
            }
            Ok(Chamber::from_rep(side, m)?)
        }
        (None, Some(n)) if n >= 2 => Ok(standard_chamber(side, n)),
        (None, Some(n)) => Err(usage(format!("--n {n}: need n >= 2"))),
        (None, None) => Err(usage(format!("give --{flag} or --n"))),
    }
}

/// Flag parts separated by `|`; each part lists basis vectors separated
/// by `;`, entries by `,`.
pub fn flag_parts(s: &str) -> Result<Vec<Vec<Vec<GaussRat>>>, CliError> {
    s.split('|')
        .map(|part| part.split(';').map(scalars).collect())
        .collect()
}

/// `type:weight` pairs, comma-separated: `0:1/2,2:1/2`.
pub fn vertex_weights(s: &str) -> Result<Vec<(usize, BigRational)>, CliError> {
    s.split(',')
        .map(|item| {
            let (k, w) = item
                .split_once(':')
                .ok_or_else(|| usage(format!("bad weight '{item}', expected type:weight")))?;
            let k = k.trim().parse().map_err(|_| usage(format!("bad type '{k}'")))?;
            Ok((k, rational(w)?))
        })
        .collect()
}
