//! Text grammar for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! coeff  := digits ['/' digits]
//! factor := 'X' digits ['^' digits]
//! ```
//!
//! Whitespace is allowed between tokens. Example: `X0*X2 - X1^2`.

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::{Field, Monomial, Polynomial, Scalar};

/// Parse a polynomial in `nvars` variables over `field`.
pub fn parse_polynomial(text: &str, field: Field, nvars: usize) -> Result<Polynomial> {
    parse_polynomial_at_line(text, field, nvars, 1)
}

/// Like [`parse_polynomial`], reporting errors against the given 1-based line.
pub fn parse_polynomial_at_line(text: &str, field: Field, nvars: usize, line: usize) -> Result<Polynomial> {
    let mut parser = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        line,
        field,
        nvars,
    };
    parser.polynomial()
}

/// Largest variable index mentioned in `text`, without validating the grammar.
pub(crate) fn max_variable_index(text: &str) -> Option<usize> {
    let bytes = text.as_bytes();
    let mut best = None;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'X' {
            let start = i + 1;
            let mut j = start;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(v) = text[start..j].parse::<usize>() {
                best = Some(best.map_or(v, |b: usize| b.max(v)));
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    field: Field,
    nvars: usize,
}

impl Parser {
    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or_else(
            || self.chars.last().map_or(1, |(i, c)| i + c.len_utf8() + 1),
            |(i, _)| i + 1,
        )
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.column(), msg)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if first => return Err(self.error("empty polynomial")),
                None => break,
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some(c) if first => {
                    let _ = c;
                    false
                }
                Some(c) => return Err(self.error(format!("expected `+` or `-`, found `{c}`"))),
            };
            first = false;
            let (m, c) = self.term()?;
            terms.push((m, if negative { -&c } else { c }));
        }
        Polynomial::from_terms(self.field, self.nvars, terms)
    }

    fn term(&mut self) -> Result<(Monomial, Scalar)> {
        let mut coeff = Scalar::one(self.field);
        let mut mono = Monomial::one(self.nvars);
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.coefficient()?;
                if self.peek() != Some('*') {
                    return Ok((mono, coeff));
                }
                self.pos += 1;
                self.factor(&mut mono)?;
            }
            Some('X') => self.factor(&mut mono)?,
            Some(c) => return Err(self.error(format!("expected a coefficient or variable, found `{c}`"))),
            None => return Err(self.error("expected a term")),
        }
        while self.peek() == Some('*') {
            self.pos += 1;
            self.factor(&mut mono)?;
        }
        Ok((mono, coeff))
    }

    fn coefficient(&mut self) -> Result<Scalar> {
        let num = self.digits().ok_or_else(|| self.error("expected digits"))?;
        let num: BigInt = num.parse().expect("digit string");
        let den = if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let d = self.digits().ok_or_else(|| self.error("expected denominator digits"))?;
            d.parse().expect("digit string")
        } else {
            BigInt::from(1)
        };
        Scalar::from_ratio(self.field, &num, &den).map_err(|_| self.error("zero denominator in this field"))
    }

    fn factor(&mut self, mono: &mut Monomial) -> Result<()> {
        match self.peek() {
            Some('X') => self.pos += 1,
            Some(c) => return Err(self.error(format!("expected a variable `X<i>`, found `{c}`"))),
            None => return Err(self.error("expected a variable `X<i>`")),
        }
        let idx_col = self.column();
        let idx = self.digits().ok_or_else(|| self.error("expected a variable index after `X`"))?;
        let idx: usize = idx.parse().map_err(|_| self.error("variable index too large"))?;
        if idx >= self.nvars {
            return Err(Error::parse(
                self.line,
                idx_col,
                format!("variable X{idx} out of range (ring has {} variables)", self.nvars),
            ));
        }
        let mut e = 1u32;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let d = self.digits().ok_or_else(|| self.error("expected an exponent after `^`"))?;
            e = d.parse().map_err(|_| self.error("exponent too large"))?;
        }
        *mono = mono.with_exponent(idx, mono.exponent(idx) + e);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_reference_example() {
        let f = parse_polynomial("X0*X2 - X1^2", Field::Rational, 4).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "X0*X2 - X1^2");
    }

    #[test]
    fn coefficients_and_omissions() {
        let f = parse_polynomial("-3/6*X0^1*X1 + 1*X2 + 4", Field::Rational, 3).unwrap();
        assert_eq!(f.to_string(), "-1/2*X0*X1 + X2 + 4");
        let g = parse_polynomial("2*X0 + 3*X0", Field::Prime(5), 1).unwrap();
        assert!(g.is_zero());
        let h = parse_polynomial("X0*X0", Field::Rational, 1).unwrap();
        assert_eq!(h.to_string(), "X0^2");
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_polynomial("X0 + X7", Field::Rational, 3).unwrap_err();
        assert_eq!(err, Error::parse(1, 7, "variable X7 out of range (ring has 3 variables)"));
        let err = parse_polynomial_at_line("X0 ** X1", Field::Rational, 3, 4).unwrap_err();
        match err {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (4, 5)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial("", Field::Rational, 1).is_err());
        assert!(parse_polynomial("X0 X1", Field::Rational, 2).is_err());
        assert!(parse_polynomial("1/2*X0", Field::Prime(2), 1).is_err());
    }

    #[test]
    fn finds_max_variable() {
        assert_eq!(max_variable_index("X0*X12 - X3"), Some(12));
        assert_eq!(max_variable_index("5"), None);
    }
}
