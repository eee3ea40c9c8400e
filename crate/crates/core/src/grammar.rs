//! Textual element grammar: parse/print round-trip for scalars, one-site
//! elements, and tensor elements.
//!
//! Scalars print as `v^k` powers with rational coefficients joined by ` + `
//! in exponent order; rational functions as `(num) / (den)`. Algebra
//! elements print as `(coef) * F^a K^b E^c` terms joined by ` + `, tensor
//! slots joined by ` (x) `. The unit monomial prints as `1`.

use crate::scalar::{q_from, LaurentPoly, Q, RatFunc};
use crate::uqsl2::{GenAlgebra, PbwElement, PbwMonomial, TensorElement};
use num::{BigInt, Num};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ParseError {
    #[error("unexpected end of input")]
    Eof,
    #[error("unexpected token at {0}: {1}")]
    Unexpected(usize, String),
    #[error("bad number {0}")]
    BadNumber(String),
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            s: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(ParseError::Unexpected(
                self.pos,
                format!(
                    "expected '{}', found {:?}",
                    b as char,
                    self.s.get(self.pos).map(|c| *c as char)
                ),
            ))
        }
    }

    fn eat_str(&mut self, t: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(t.as_bytes()) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.s.len()
    }

    /// Signed integer, possibly with a `/denominator`.
    fn rational(&mut self) -> Result<Q, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') || self.peek() == Some(b'+') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::Unexpected(self.pos, "expected number".into()));
        }
        let num_str = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let num = BigInt::from_str_radix(num_str, 10)
            .map_err(|_| ParseError::BadNumber(num_str.to_string()))?;
        let den = if self.eat(b'/') {
            let d0 = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let den_str = std::str::from_utf8(&self.s[d0..self.pos]).unwrap();
            BigInt::from_str_radix(den_str, 10)
                .map_err(|_| ParseError::BadNumber(den_str.to_string()))?
        } else {
            BigInt::from(1)
        };
        Ok(Q::new(num, den))
    }

    /// Signed integer exponent.
    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') || self.peek() == Some(b'+') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError::BadNumber("bad exponent".into()))
    }
}

/// Parse a Laurent polynomial: terms like `3`, `-1/2*v^-2`, `v`, `2*v^3`
/// joined by `+`.
pub fn parse_laurent(input: &str) -> Result<LaurentPoly, ParseError> {
    let mut c = Cursor::new(input);
    let p = laurent_until(&mut c, &[])?;
    if !c.at_end() {
        return Err(ParseError::Unexpected(c.pos, "trailing input".into()));
    }
    Ok(p)
}

fn laurent_until(c: &mut Cursor, stops: &[u8]) -> Result<LaurentPoly, ParseError> {
    let mut acc = LaurentPoly::zero();
    loop {
        // one term: [rational] [* v[^k]] or bare v[^k]
        let coeff;
        let mut exp = 0i64;
        if c.peek() == Some(b'v') {
            c.pos += 1;
            coeff = Q::one();
            exp = if c.eat(b'^') { c.integer()? } else { 1 };
        } else {
            coeff = c.rational()?;
            if c.eat(b'*') {
                c.skip_ws();
                c.expect(b'v')?;
                exp = if c.eat(b'^') { c.integer()? } else { 1 };
            }
        }
        acc = acc.add(&LaurentPoly::monomial(exp, coeff));
        match c.peek() {
            Some(b'+') => {
                // term separator unless next token belongs to caller
                c.pos += 1;
            }
            Some(b) if stops.contains(&b) => return Ok(acc),
            None => return Ok(acc),
            Some(_) if c.at_end() => return Ok(acc),
            Some(_) => return Ok(acc),
        }
    }
}

use num::One;

/// Parse a rational function: either a Laurent polynomial or
/// `(num) / (den)`.
pub fn parse_ratfunc(input: &str) -> Result<RatFunc, ParseError> {
    let mut c = Cursor::new(input);
    let r = ratfunc_inner(&mut c)?;
    if !c.at_end() {
        return Err(ParseError::Unexpected(c.pos, "trailing input".into()));
    }
    Ok(r)
}

fn ratfunc_inner(c: &mut Cursor) -> Result<RatFunc, ParseError> {
    if c.peek() == Some(b'(') {
        c.expect(b'(')?;
        let num = laurent_until(c, &[b')'])?;
        c.expect(b')')?;
        if c.eat(b'/') {
            c.expect(b'(')?;
            let den = laurent_until(c, &[b')'])?;
            c.expect(b')')?;
            Ok(RatFunc::new(num, den))
        } else {
            Ok(RatFunc::from_laurent(num))
        }
    } else {
        Ok(RatFunc::from_laurent(laurent_until(c, &[])?))
    }
}

fn monomial_inner(c: &mut Cursor) -> Result<PbwMonomial, ParseError> {
    let mut f = 0u32;
    let mut k = 0i32;
    let mut e = 0u32;
    if c.eat(b'1') {
        return Ok(PbwMonomial::unit());
    }
    loop {
        match c.peek() {
            Some(b'F') => {
                c.pos += 1;
                f = if c.eat(b'^') { c.integer()? as u32 } else { 1 };
            }
            Some(b'K') => {
                c.pos += 1;
                k = if c.eat(b'^') { c.integer()? as i32 } else { 1 };
            }
            Some(b'E') => {
                c.pos += 1;
                e = if c.eat(b'^') { c.integer()? as u32 } else { 1 };
            }
            _ => break,
        }
    }
    Ok(PbwMonomial::new(f, k, e))
}

/// Parse a one-site element: `0` or `(coef) * mono` terms joined by `+`.
pub fn parse_pbw(input: &str) -> Result<PbwElement<RatFunc>, ParseError> {
    let alg = GenAlgebra::global();
    let mut c = Cursor::new(input);
    if c.eat(b'0') && c.at_end() {
        return Ok(PbwElement::zero());
    }
    c.pos = 0;
    let mut acc = PbwElement::zero();
    loop {
        c.expect(b'(')?;
        let num = laurent_until(&mut c, &[b')'])?;
        c.expect(b')')?;
        let coef = if c.eat(b'/') {
            c.expect(b'(')?;
            let den = laurent_until(&mut c, &[b')'])?;
            c.expect(b')')?;
            RatFunc::new(num, den)
        } else {
            RatFunc::from_laurent(num)
        };
        c.expect(b'*')?;
        let mono = monomial_inner(&mut c)?;
        acc = alg.add(&acc, &alg.scale(&alg.monomial(mono), &coef));
        if c.at_end() {
            return Ok(acc);
        }
        c.expect(b'+')?;
    }
}

/// Parse a tensor element of the given arity: slots joined by `(x)`.
pub fn parse_tensor(input: &str, arity: usize) -> Result<TensorElement<RatFunc>, ParseError> {
    let alg = GenAlgebra::global();
    let mut c = Cursor::new(input);
    if c.eat(b'0') && c.at_end() {
        return Ok(TensorElement::zero(arity));
    }
    c.pos = 0;
    let mut acc = TensorElement::zero(arity);
    loop {
        c.expect(b'(')?;
        let num = laurent_until(&mut c, &[b')'])?;
        c.expect(b')')?;
        let coef = if c.eat(b'/') {
            c.expect(b'(')?;
            let den = laurent_until(&mut c, &[b')'])?;
            c.expect(b')')?;
            RatFunc::new(num, den)
        } else {
            RatFunc::from_laurent(num)
        };
        c.expect(b'*')?;
        let mut slots = Vec::with_capacity(arity);
        slots.push(monomial_inner(&mut c)?);
        while c.eat_str("(x)") {
            slots.push(monomial_inner(&mut c)?);
        }
        if slots.len() != arity {
            return Err(ParseError::Unexpected(
                c.pos,
                format!("expected {} tensor slots, found {}", arity, slots.len()),
            ));
        }
        acc = alg.tensor_add(&acc, &TensorElement::from_term(slots, coef));
        if c.at_end() {
            return Ok(acc);
        }
        c.expect(b'+')?;
    }
}

#[allow(dead_code)]
fn unused_q(_: Q) {
    let _ = q_from(1, 2);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GenericQ;
    use crate::scalar::ScalarOps;
    use proptest::prelude::*;

    #[test]
    fn simple_round_trips() {
        for s in ["0", "(1) * 1", "(v^2) * F K^-1 E^2", "(-1/2*v^-2 + 3) * K"] {
            let e = parse_pbw(s).unwrap();
            assert_eq!(parse_pbw(&e.to_string()).unwrap(), e, "{}", s);
        }
        let t = "(1) * F (x) K^-1 + (v) * 1 (x) E";
        let e = parse_tensor(t, 2).unwrap();
        assert_eq!(parse_tensor(&e.to_string(), 2).unwrap(), e);
    }

    #[test]
    fn ratfunc_round_trip() {
        let f = RatFunc::new(
            LaurentPoly::q_int(3),
            LaurentPoly::q_pow(1).sub(&LaurentPoly::q_pow(-1)),
        );
        let s = f.to_string();
        assert_eq!(parse_ratfunc(&s).unwrap(), f);
    }

    proptest! {
        #[test]
        fn pbw_print_parse_round_trip(seed in 0u64..500) {
            // build a small pseudo-random element from the seed
            let alg = GenAlgebra::global();
            let ops = GenericQ;
            let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            let mut next = move || { state ^= state << 13; state ^= state >> 7; state ^= state << 17; state };
            let mut e = alg.zero();
            for _ in 0..(next() % 4 + 1) {
                let m = PbwMonomial::new(
                    (next() % 3) as u32,
                    (next() % 5) as i32 - 2,
                    (next() % 3) as u32,
                );
                let c = ops.v_pow((next() % 7) as i64 - 3);
                let c = ops.add(&c, &ops.from_i64((next() % 5) as i64 - 2));
                e = alg.add(&e, &alg.scale(&alg.monomial(m), &c));
            }
            let s = e.to_string();
            prop_assert_eq!(parse_pbw(&s).unwrap(), e);
        }
    }
}
