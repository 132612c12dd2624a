//! Text grammar for polynomials.
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := coeff ['*' factors] | factors
//! factors:= factor ('*' factor)*
//! factor := name ['^' uint]
//! coeff  := uint ['/' uint]
//! ```
//!
//! Variable names resolve through the ring's alias table, so both the
//! canonical `x<i>_<j>` spelling and registered family aliases (`x3`, `y2`)
//! parse.  Errors carry the byte offset of the offending token.

use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::ring::RingRef;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError { pos: self.pos, msg: msg.into() }
    }

    fn uint(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse::<i64>().ok())
            .ok_or_else(|| ParseError { pos: start, msg: String::from("number too large") })
    }

    fn name(&mut self) -> Result<(usize, String), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.bytes.len() || !self.bytes[self.pos].is_ascii_alphabetic() {
            return Err(self.error("expected a variable name"));
        }
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let s = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok((start, String::from(s)))
    }
}

pub fn parse_poly<F: Field>(ring: &RingRef<F>, input: &str) -> Result<MultiPoly<F>, ParseError> {
    let field = ring.field().clone();
    let shape = ring.shape().clone();
    let n = ring.num_vars();
    let mut sc = Scanner::new(input);
    let mut terms: Vec<(Monomial, F::Elem)> = Vec::new();

    if sc.peek().is_none() {
        return Err(sc.error("empty polynomial"));
    }

    let mut sign_negative = false;
    if let Some(b'-') = sc.peek() {
        sc.bump();
        sign_negative = true;
    } else if let Some(b'+') = sc.peek() {
        sc.bump();
    }

    loop {
        // One term: optional coefficient, then factors.
        let mut coeff = field.from_i64(if sign_negative { -1 } else { 1 });
        let mut mon = Monomial::one(n);
        let mut saw_factor = false;

        if matches!(sc.peek(), Some(b) if b.is_ascii_digit()) {
            let num = sc.uint()?;
            let mut c = field.from_i64(num);
            if let Some(b'/') = sc.peek() {
                sc.bump();
                let pos = sc.pos;
                let den = sc.uint()?;
                let d = field.from_i64(den);
                if field.is_zero(&d) {
                    return Err(ParseError {
                        pos,
                        msg: format!("denominator {den} is zero in the coefficient field"),
                    });
                }
                c = field.div(&c, &d);
            }
            coeff = field.mul(&coeff, &c);
            saw_factor = true;
            if let Some(b'*') = sc.peek() {
                sc.bump();
                saw_factor = false;
            }
        }

        if !saw_factor {
            loop {
                let (pos, name) = sc.name()?;
                let Some(v) = shape.lookup(&name) else {
                    return Err(ParseError { pos, msg: format!("unknown variable `{name}`") });
                };
                let mut e = 1i64;
                if let Some(b'^') = sc.peek() {
                    sc.bump();
                    e = sc.uint()?;
                }
                let exp = u32::try_from(e)
                    .map_err(|_| ParseError { pos, msg: String::from("exponent too large") })?;
                mon = mon.mul(&Monomial::var(n, v).pow(exp));
                match sc.peek() {
                    Some(b'*') => {
                        sc.bump();
                    }
                    _ => break,
                }
            }
        }

        terms.push((mon, coeff));

        match sc.peek() {
            None => break,
            Some(b'+') => {
                sc.bump();
                sign_negative = false;
            }
            Some(b'-') => {
                sc.bump();
                sign_negative = true;
            }
            Some(c) => {
                return Err(sc.error(format!("unexpected character `{}`", c as char)));
            }
        }
    }

    Ok(MultiPoly::from_terms(ring.clone(), terms))
}

/// Parses a comma- or newline-separated list of polynomials.
pub fn parse_polys<F: Field>(
    ring: &RingRef<F>,
    input: &str,
) -> Result<Vec<MultiPoly<F>>, ParseError> {
    input
        .split(|c| c == ',' || c == '\n' || c == ';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_poly(ring, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::ring::BlockRing;
    use alloc::format;

    #[test]
    fn canonical_names() {
        let r = BlockRing::new(Rationals, &[2, 2]);
        let p = parse_poly(&r, "x1_1*x2_2 - x1_2*x2_1").unwrap();
        assert_eq!(format!("{p}"), "-x1_2*x2_1 + x1_1*x2_2");
        let again = parse_poly(&r, &format!("{p}")).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn aliases_coefficients_and_powers() {
        let shape = crate::ring::BlockShape::new(&[2, 2])
            .with_aliases(&[(0, "x1"), (1, "y1"), (2, "x2"), (3, "y2")]);
        let r = BlockRing::with_shape(Rationals, shape);
        let p = parse_poly(&r, "-3/2*x1^2 + y2*x2 - 1").unwrap();
        assert_eq!(format!("{p}"), "-3/2*x1^2 + x2*y2 - 1");
        let round = parse_poly(&r, &format!("{p}")).unwrap();
        assert_eq!(round, p);
    }

    #[test]
    fn display_parse_round_trip_mod_p() {
        let r = BlockRing::new(PrimeField::default_prime(), &[3]);
        let p = parse_poly(&r, "x1_1 - 2*x1_2 + 7/3*x1_3").unwrap();
        let round = parse_poly(&r, &format!("{p}")).unwrap();
        assert_eq!(round, p);
    }

    #[test]
    fn unknown_variable_reports_position() {
        let r = BlockRing::new(Rationals, &[2]);
        let err = parse_poly(&r, "x1_1 + z9").unwrap_err();
        assert_eq!(err.pos, 7);
        assert!(err.msg.contains("z9"));
    }

    #[test]
    fn zero_denominator_rejected() {
        let r = BlockRing::new(PrimeField::new(7).unwrap(), &[1]);
        assert!(parse_poly(&r, "1/7*x1_1").is_err());
        let q = BlockRing::new(Rationals, &[1]);
        assert!(parse_poly(&q, "1/0*x1_1").is_err());
    }

    #[test]
    fn list_parsing() {
        let r = BlockRing::new(Rationals, &[2, 2]);
        let ps = parse_polys(&r, "x1_1, x1_2*x2_1\n x2_2").unwrap();
        assert_eq!(ps.len(), 3);
    }
}
