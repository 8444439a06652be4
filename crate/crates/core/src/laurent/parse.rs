use std::str::FromStr;

use num_bigint::BigInt;

use super::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad polynomial at byte {pos}: {msg}")]
pub struct ParsePolyError {
    pub pos: usize,
    pub msg: String,
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParsePolyError {
        ParsePolyError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn exponent(&mut self) -> Result<i64, ParsePolyError> {
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let mut e: i64 = d.parse().map_err(|_| self.err("exponent out of range"))?;
        if neg {
            e = -e;
        }
        if paren && !self.eat(b')') {
            return Err(self.err("expected ')'"));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<(i64, BigInt), ParsePolyError> {
        let coeff = self.digits().map(|d| d.parse::<BigInt>().unwrap());
        if coeff.is_some() {
            self.eat(b'*');
        }
        if self.eat(b't') {
            let e = if self.eat(b'^') { self.exponent()? } else { 1 };
            Ok((e, coeff.unwrap_or_else(|| BigInt::from(1))))
        } else {
            coeff
                .map(|c| (0, c))
                .ok_or_else(|| self.err("expected coefficient or 't'"))
        }
    }
}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    /// Parses text such as `t^10 - 3*t^5 + 1` or `t^-1 - 3 + t`.
    fn from_str(text: &str) -> Result<Self, ParsePolyError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cur = Cursor {
            s: compact.as_bytes(),
            pos: 0,
        };
        if cur.peek().is_none() {
            return Err(cur.err("empty input"));
        }
        let mut out = LaurentPoly::zero();
        let mut first = true;
        while cur.peek().is_some() {
            let neg = if cur.eat(b'-') {
                true
            } else if cur.eat(b'+') || first {
                false
            } else {
                return Err(cur.err("expected '+' or '-'"));
            };
            let (e, c) = cur.term()?;
            out.add_term(e, if neg { -c } else { c });
            first = false;
        }
        Ok(out)
    }
}
