use num_bigint::BigInt;

use super::{ArithError, Field};

// Grammar (whitespace insignificant):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['-'] atom ['^' uint]
//   atom   := int | ident | '(' expr ')'
// No floating literals; exponents are nonnegative integers.

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> ArithError {
    ArithError::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ArithError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            b'/' => {
                out.push((i, Token::Slash));
                i += 1;
            }
            b'^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            b'(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    return Err(err(i, "floating literals are not part of the grammar"));
                }
                let text = &input[start..i];
                out.push((start, Token::Int(text.parse().expect("digits parse"))));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(input[start..i].to_string())));
            }
            _ => return Err(err(i, format!("unexpected character `{}`", b as char))),
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    field: &'a F,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    input_len: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<F::Elem, ArithError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.field.add(&acc, &rhs);
                }
                Some(Token::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.field.sub(&acc, &rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<F::Elem, ArithError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = self.field.mul(&acc, &rhs);
                }
                Some(Token::Slash) => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = self.field.div(&acc, &rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<F::Elem, ArithError> {
        let negate = if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            true
        } else {
            false
        };
        let base = self.atom()?;
        let value = if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some(Token::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| err(at, "exponent out of range"))?;
                    self.field.pow(&base, e)
                }
                _ => return Err(err(at, "expected a nonnegative integer exponent")),
            }
        } else {
            base
        };
        Ok(if negate {
            self.field.neg(&value)
        } else {
            value
        })
    }

    fn atom(&mut self) -> Result<F::Elem, ArithError> {
        let at = self.here();
        match self.bump() {
            Some(Token::Int(n)) => Ok(self.field.from_bigint(&n)),
            Some(Token::Ident(name)) => self.field.var(&name),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                let at = self.here();
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(err(at, "expected `)`")),
                }
            }
            Some(tok) => Err(err(at, format!("unexpected token {tok:?}"))),
            None => Err(err(at, "unexpected end of expression")),
        }
    }
}

/// Parse an expression string as a scalar of the given field.
pub fn parse_scalar<F: Field>(field: &F, input: &str) -> Result<F::Elem, ArithError> {
    let tokens = tokenize(input)?;
    let mut p = Parser {
        field,
        tokens,
        pos: 0,
        input_len: input.len(),
    };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(err(p.here(), "trailing input after expression"));
    }
    Ok(value)
}
