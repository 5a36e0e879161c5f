//! Parser for the textual `QRat` form.
//!
//! Accepts integer arithmetic in `q` with `+ - * / ^` and parentheses, e.g.
//! `(-q^4 + 1)/(q^2)`, `q^-2`, `2*q^(-3)`, `(q - 1/q)^2`.

use num_bigint::BigInt;

use super::{QError, QRat};

pub fn parse_qrat(s: &str) -> Result<QRat, QError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> QError {
        QError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<QRat, QError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QRat, QError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                acc = acc.checked_div(&d).map_err(|_| QError::Parse {
                    pos: at,
                    msg: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<QRat, QError> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<QRat, QError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let e = if self.eat(b'(') {
            let e = self.signed_int()?;
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            e
        } else {
            self.signed_int()?
        };
        base.pow(e).map_err(|_| QError::Parse {
            pos: at,
            msg: "negative power of zero".into(),
        })
    }

    fn signed_int(&mut self) -> Result<i64, QError> {
        let neg = self.eat(b'-');
        self.peek();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer exponent"));
        }
        let v: i64 = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| QError::Parse {
                pos: start,
                msg: "exponent out of range".into(),
            })?;
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<QRat, QError> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(QRat::q_pow(1))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(QRat::from_bigint(text.parse::<BigInt>().unwrap()))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
