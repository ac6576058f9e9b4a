//! Text grammar for scalars and polynomials.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*        juxtaposition is a product
//! unary  := '-' unary | power
//! power  := atom ('^' ['-'] integer)?
//! atom   := integer | 'q' | 'sqrt' '(' expr ')' | '(' expr ')' | generator
//! ```
//!
//! A generator name immediately followed by `*` (no whitespace) denotes the
//! starred generator, so `x1*x2` reads as `x1^* x2`. Write `x1 * x2` or
//! `x1 x2` for the plain product.

use super::QError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i128),
    Q,
    Sqrt,
    Ident(String, bool),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Tok>, QError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let v = s.parse::<i128>().map_err(|e| QError::Parse(format!("bad integer {}: {}", s, e)))?;
            out.push(Tok::Int(v));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            match name.as_str() {
                "q" => out.push(Tok::Q),
                "sqrt" => out.push(Tok::Sqrt),
                _ => {
                    let starred = i < chars.len() && chars[i] == '*';
                    if starred {
                        i += 1;
                    }
                    out.push(Tok::Ident(name, starred));
                }
            }
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(QError::Parse(format!("unexpected character {:?} at {}", c, i))),
        };
        out.push(t);
        i += 1;
    }
    Ok(out)
}

/// Semantic actions for the grammar. Scalars and polynomials implement this
/// with their own value types.
pub trait ParseContext {
    type Value: Clone;
    fn int(&self, c: i128) -> Self::Value;
    fn q(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, QError>;
    fn sqrt(&self, a: &Self::Value) -> Result<Self::Value, QError>;
    fn generator(&self, name: &str, starred: bool) -> Result<Self::Value, QError>;
}

struct Parser<'a, C: ParseContext> {
    toks: Vec<Tok>,
    pos: usize,
    ctx: &'a C,
}

impl<'a, C: ParseContext> Parser<'a, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), QError> {
        match self.next() {
            Some(ref x) if *x == t => Ok(()),
            other => Err(QError::Parse(format!("expected {:?}, found {:?}", t, other))),
        }
    }

    fn expr(&mut self) -> Result<C::Value, QError> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.next();
            let t = self.term()?;
            self.ctx.neg(&t)
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = self.ctx.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = self.ctx.add(&acc, &self.ctx.neg(&t));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(t: Option<&Tok>) -> bool {
        matches!(t, Some(Tok::Int(_) | Tok::Q | Tok::Sqrt | Tok::Ident(..) | Tok::LParen))
    }

    fn term(&mut self) -> Result<C::Value, QError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    let f = self.unary()?;
                    acc = self.ctx.mul(&acc, &f);
                }
                Some(Tok::Slash) => {
                    self.next();
                    let f = self.unary()?;
                    acc = self.ctx.div(&acc, &f)?;
                }
                t if Self::starts_atom(t) => {
                    let f = self.power()?;
                    acc = self.ctx.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<C::Value, QError> {
        if self.peek() == Some(&Tok::Minus) {
            self.next();
            let v = self.unary()?;
            return Ok(self.ctx.neg(&v));
        }
        self.power()
    }

    fn power(&mut self) -> Result<C::Value, QError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.next();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.next();
            true
        } else {
            false
        };
        let e = match self.next() {
            Some(Tok::Int(e)) => e,
            other => return Err(QError::Parse(format!("expected exponent, found {:?}", other))),
        };
        let mut out = self.ctx.int(1);
        for _ in 0..e {
            out = self.ctx.mul(&out, &base);
        }
        if negative {
            out = self.ctx.div(&self.ctx.int(1), &out)?;
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<C::Value, QError> {
        match self.next() {
            Some(Tok::Int(c)) => Ok(self.ctx.int(c)),
            Some(Tok::Q) => Ok(self.ctx.q()),
            Some(Tok::Sqrt) => {
                self.expect(Tok::LParen)?;
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                self.ctx.sqrt(&v)
            }
            Some(Tok::LParen) => {
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            Some(Tok::Ident(name, starred)) => self.ctx.generator(&name, starred),
            other => Err(QError::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

/// Parses `src` with the semantic actions of `ctx`.
pub fn parse_with<C: ParseContext>(ctx: &C, src: &str) -> Result<C::Value, QError> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(QError::Parse("empty input".into()));
    }
    let mut p = Parser { toks, pos: 0, ctx };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(QError::Parse(format!("trailing input at token {:?}", p.toks[p.pos])));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_marker_binds_to_generator() {
        let t = tokenize("x1*x2 * x3 alpha*").unwrap();
        assert_eq!(
            t,
            vec![
                Tok::Ident("x1".into(), true),
                Tok::Ident("x2".into(), false),
                Tok::Star,
                Tok::Ident("x3".into(), false),
                Tok::Ident("alpha".into(), true),
            ]
        );
        assert_eq!(tokenize("q*q").unwrap(), vec![Tok::Q, Tok::Star, Tok::Q]);
    }
}
