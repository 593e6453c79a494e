//! Bicomplex literals: `"(x+yi),(z+ui)"` (each group may also be written
//! `(re,im)`), `"x,y,z,u"` or a single real.

use hyperplex::{Bicomplex, Complex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    text: &'a str,
    at: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { chars: text.char_indices().collect(), text, at: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.at += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.at, message: message.into() }
    }

    fn byte(&self, at: usize) -> usize {
        self.chars.get(at).map_or(self.text.len(), |&(b, _)| b)
    }

    fn done(&mut self) -> bool {
        self.skip_ws();
        self.at == self.chars.len()
    }

    /// Unsigned decimal with optional fraction and exponent.
    fn number(&mut self) -> Result<Option<f64>, ParseError> {
        let start = self.at;
        let digits = |c: &mut Self| {
            let s = c.at;
            while c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
                c.at += 1;
            }
            c.at > s
        };
        let int = digits(self);
        let mut frac = false;
        if self.peek() == Some('.') {
            self.at += 1;
            frac = digits(self);
        }
        if !int && !frac {
            self.at = start;
            return Ok(None);
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            let mark = self.at;
            self.at += 1;
            if matches!(self.peek(), Some('+' | '-')) {
                self.at += 1;
            }
            if !digits(self) {
                self.at = mark;
                return Err(self.error("malformed exponent"));
            }
        }
        let s = &self.text[self.byte(start)..self.byte(self.at)];
        s.parse::<f64>().map(Some).map_err(|_| ParseError { position: start, message: format!("bad number {s:?}") })
    }

    /// Optionally signed real number.
    fn real(&mut self) -> Result<f64, ParseError> {
        self.skip_ws();
        let sign = if self.eat('-') {
            -1.0
        } else {
            self.eat('+');
            1.0
        };
        self.skip_ws();
        match self.number()? {
            Some(v) => Ok(sign * v),
            None => Err(self.error("expected a number")),
        }
    }

    /// `re,im` or a sum of terms `x`, `yi`, `x+yi`, `x-i`, `-2.5i+1`, …
    /// inside parentheses.
    fn complex(&mut self) -> Result<Complex, ParseError> {
        let start = self.at;
        if let Ok(re) = self.real() {
            if self.eat(',') {
                let im = self.real()?;
                return Ok(Complex::new(re, im));
            }
        }
        self.at = start;
        let (mut re, mut im) = (None, None);
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek() == Some(')') {
                break;
            }
            let term_at = self.at;
            let sign = if self.eat('-') {
                -1.0
            } else if self.eat('+') || first {
                1.0
            } else {
                return Err(self.error("expected '+', '-' or ')'"));
            };
            self.skip_ws();
            let value = self.number()?;
            self.skip_ws();
            let imaginary = self.peek() == Some('i');
            if imaginary {
                self.at += 1;
            }
            let v = match (value, imaginary) {
                (Some(v), _) => sign * v,
                (None, true) => sign,
                (None, false) => return Err(self.error("expected a number or 'i'")),
            };
            self.skip_ws();
            if !matches!(self.peek(), Some('+' | '-' | ')')) {
                return Err(self.error("expected '+', '-' or ')'"));
            }
            let slot = if imaginary { &mut im } else { &mut re };
            if slot.replace(v).is_some() {
                return Err(ParseError {
                    position: term_at,
                    message: format!("repeated {} part", if imaginary { "imaginary" } else { "real" }),
                });
            }
            first = false;
        }
        if first {
            return Err(self.error("empty complex number"));
        }
        Ok(Complex::new(re.unwrap_or(0.0), im.unwrap_or(0.0)))
    }
}

/// Parses a bicomplex literal. Accepted forms are the pair
/// `"(x+yi),(z+ui)"`, the quadruple `"x,y,z,u"` and a single real `"x"`.
pub fn parse_bicomplex(text: &str) -> Result<Bicomplex, ParseError> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    if c.peek() == Some('(') {
        c.expect('(')?;
        let a = c.complex()?;
        c.expect(')')?;
        c.expect(',')?;
        c.expect('(')?;
        let b = c.complex()?;
        c.expect(')')?;
        if !c.done() {
            return Err(c.error("trailing input"));
        }
        return Ok(Bicomplex::new(a, b));
    }
    let mut parts = vec![c.real()?];
    while c.eat(',') {
        parts.push(c.real()?);
    }
    if !c.done() {
        return Err(c.error("trailing input"));
    }
    match parts.as_slice() {
        [x] => Ok(Bicomplex::from_real(*x)),
        [x, y, z, u] => Ok(Bicomplex::from_quadruple([*x, *y, *z, *u])),
        _ => Err(ParseError { position: 0, message: format!("expected 1 or 4 components, found {}", parts.len()) }),
    }
}
