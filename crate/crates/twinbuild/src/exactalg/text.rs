//! Text form of coefficients, Laurent polynomials and matrices.
//!
//! A polynomial is a sum of terms `coef*z^e`. A coefficient is `a`, `a/b`,
//! `(a+bi)` or `(a/b-c/d i)`. Whitespace is ignored when parsing. Printing is
//! canonical: terms in ascending exponent order, `z^0`, unit coefficients
//! and the exponent `^1` omitted, so that
//! `parse(print(x)) == x` and `print(parse(s)) == s` for printed `s`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gauss::fmt_rational;
use super::{GaussRat, LaurentMatrix, LaurentPoly};
use crate::error::{Error, Result};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| perr(format!("bad number '{s}'")))?;
    let den: BigInt = den.parse().map_err(|_| perr(format!("bad number '{s}'")))?;
    if den.is_zero() {
        return Err(perr("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Parses the inside of a parenthesized coefficient: `a+bi`, `a-bi`, `bi`, `a`.
fn parse_complex_body(body: &str) -> Result<GaussRat> {
    if !body.ends_with('i') {
        return Ok(GaussRat::from_rational(parse_rational(body)?));
    }
    let inner = &body[..body.len() - 1];
    let split = inner
        .char_indices()
        .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
        .map(|(k, _)| k)
        .last();
    let imag = |s: &str| -> Result<BigRational> {
        match s {
            "" | "+" => Ok(BigRational::one()),
            "-" => Ok(-BigRational::one()),
            _ => parse_rational(s.strip_prefix('+').unwrap_or(s)),
        }
    };
    match split {
        Some(k) => Ok(GaussRat::new(parse_rational(&inner[..k])?, imag(&inner[k..])?)),
        None => Ok(GaussRat::new(BigRational::zero(), imag(inner)?)),
    }
}

impl FromStr for GaussRat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(body) = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
            parse_complex_body(body)
        } else if let Some(rest) = t.strip_prefix("-(").and_then(|x| x.strip_suffix(')')) {
            Ok(-parse_complex_body(rest)?)
        } else {
            Ok(GaussRat::from_rational(parse_rational(&t)?))
        }
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap()
    }

    fn integer(&mut self) -> Result<i64> {
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(perr("expected exponent"));
        }
        let v: i64 = digits.parse().map_err(|_| perr("exponent overflow"))?;
        if paren && !self.eat(b')') {
            return Err(perr("unbalanced parenthesis in exponent"));
        }
        Ok(if neg { -v } else { v })
    }

    /// One signed term; `sign` already consumed by the caller.
    fn term(&mut self) -> Result<(i64, GaussRat)> {
        let coef = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let body = self.take_while(|c| c != b')');
                if !self.eat(b')') {
                    return Err(perr("unbalanced parenthesis"));
                }
                let c = parse_complex_body(body)?;
                self.eat(b'*');
                c
            }
            Some(c) if c.is_ascii_digit() => {
                let lit = self.take_while(|c| c.is_ascii_digit() || c == b'/');
                let c = GaussRat::from_rational(parse_rational(lit)?);
                self.eat(b'*');
                c
            }
            Some(b'z') => GaussRat::one(),
            _ => return Err(perr(format!("unexpected input at offset {}", self.pos))),
        };
        let mut exp = 0;
        if self.eat(b'z') {
            exp = if self.eat(b'^') { self.integer()? } else { 1 };
        }
        Ok((exp, coef))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(perr("empty polynomial"));
        }
        let mut cur = Cursor {
            s: t.as_bytes(),
            pos: 0,
        };
        let mut p = LaurentPoly::zero();
        while cur.peek().is_some() {
            let mut neg = false;
            loop {
                if cur.eat(b'-') {
                    neg = !neg;
                } else if !cur.eat(b'+') {
                    break;
                }
            }
            let (e, c) = cur.term()?;
            p.add_term(e, &if neg { -c } else { c });
            match cur.peek() {
                None | Some(b'+') | Some(b'-') => {}
                Some(_) => return Err(perr(format!("unexpected input at offset {}", cur.pos))),
            }
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let (sep, shown) = if c.is_real() && c.re.is_negative() {
                (if k == 0 { "-" } else { " - " }, -c)
            } else {
                (if k == 0 { "" } else { " + " }, c.clone())
            };
            let coef = if shown.is_real() {
                fmt_rational(&shown.re)
            } else {
                shown.to_string()
            };
            let mono = if e == 1 { "z".to_string() } else { format!("z^{e}") };
            match e {
                0 => write!(f, "{sep}{coef}")?,
                _ if shown.is_one() => write!(f, "{sep}{mono}")?,
                _ => write!(f, "{sep}{coef}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentMatrix {
    type Err = Error;
    /// Rows separated by `;`, entries by `,`: `1, z ; 0, 1`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|r| r.split(',').map(|x| x.parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LaurentMatrix::from_rows(rows)
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}

/// Matrix from rows of entry strings (the JSON array-of-arrays form).
pub fn matrix_from_strings(rows: &[Vec<String>]) -> Result<LaurentMatrix> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|x| x.parse()).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    LaurentMatrix::from_rows(parsed)
}

pub fn matrix_to_strings(m: &LaurentMatrix) -> Vec<Vec<String>> {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_grammar() {
        let cases = [
            ("3", GaussRat::from_int(3)),
            ("-3/4", GaussRat::from_frac(-3, 4)),
            ("(1+2i)", GaussRat::complex(1, 2)),
            ("( 1 - 2 i )", GaussRat::complex(1, -2)),
            ("(-i)", GaussRat::complex(0, -1)),
        ];
        for (s, v) in cases {
            assert_eq!(s.parse::<GaussRat>().unwrap(), v, "{s}");
        }
        let g: GaussRat = "(1/2-3/4 i)".parse().unwrap();
        assert_eq!(g.to_string(), "(1/2-3/4i)");
    }

    #[test]
    fn polynomial_grammar() {
        let p: LaurentPoly = "(1+2i)*z^-1 + 3/2 - 5*z^3".parse().unwrap();
        assert_eq!(p.coeff(-1), GaussRat::complex(1, 2));
        assert_eq!(p.coeff(0), GaussRat::from_frac(3, 2));
        assert_eq!(p.coeff(3), GaussRat::from_int(-5));
        let q: LaurentPoly = " z + z^(-1) ".parse().unwrap();
        assert_eq!(q, &LaurentPoly::z_pow(1) + &LaurentPoly::z_pow(-1));
        assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn printed_form_is_fixed_point() {
        for s in ["0", "1", "-z^-2 + (0+1i)*z^3", "1/3 - 2*z", "z^-1 + z", "(1+2i)*z"] {
            let p: LaurentPoly = s.parse().unwrap();
            let printed = p.to_string();
            assert_eq!(printed, s);
            assert_eq!(printed.parse::<LaurentPoly>().unwrap(), p);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!("z^".parse::<LaurentPoly>().is_err());
        assert!("3x".parse::<LaurentPoly>().is_err());
        assert!("(1+2i".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("1/0".parse::<LaurentPoly>().is_err());
    }
}
