//! ASCII expressions over ring generators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' INT)?
//! atom   := INT | IDENT | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-s^4` is `-(s^4)`. The right
//! operand of `/` must be a nonzero integer literal.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::ring::{ClassElement, Ring, RingError, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Int,
    Ident,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Slash,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// Byte offset into the input.
    pub pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("invalid character '{ch}' at byte {pos}")]
    InvalidCharacter { ch: char, pos: usize },
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown identifier '{name}' at byte {pos}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

fn syntax(pos: usize, message: impl Into<String>) -> ExprError {
    ExprError::Syntax {
        pos,
        message: message.into(),
    }
}

pub fn tokenize(input: &str) -> Result<Vec<Token>, ExprError> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        let single = match ch {
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            '/' => Some(TokenKind::Slash),
            _ => None,
        };
        if let Some(kind) = single {
            chars.next();
            tokens.push(Token {
                kind,
                text: ch.to_string(),
                pos,
            });
        } else if ch.is_ascii_whitespace() {
            chars.next();
        } else if ch.is_ascii_digit() || ch.is_ascii_alphabetic() {
            let kind = if ch.is_ascii_digit() {
                TokenKind::Int
            } else {
                TokenKind::Ident
            };
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                let continues = match kind {
                    TokenKind::Int => c.is_ascii_digit(),
                    _ => c.is_ascii_alphanumeric() || c == '_',
                };
                if !continues {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            tokens.push(Token {
                kind,
                text: input[pos..end].to_string(),
                pos,
            });
        } else {
            return Err(ExprError::InvalidCharacter { ch, pos });
        }
    }
    Ok(tokens)
}

/// A generator reference. Equality ignores the source position.
#[derive(Clone, Debug, Eq)]
pub struct Ident {
    pub name: String,
    pub pos: usize,
}

impl PartialEq for Ident {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Ident {
    pub fn new(name: &str) -> Self {
        Ident {
            name: name.to_string(),
            pos: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative integer literal.
    Int(BigInt),
    Gen(Ident),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Quotient by a positive integer literal.
    Div(Box<Expr>, BigInt),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    tokens: &'a [Token],
    next: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.next)
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn eat(&mut self, kind: TokenKind) -> Option<&Token> {
        if self.peek().is_some_and(|t| t.kind == kind) {
            self.next += 1;
            self.tokens.get(self.next - 1)
        } else {
            None
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(TokenKind::Plus).is_some() {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(TokenKind::Minus).is_some() {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(TokenKind::Star).is_some() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(TokenKind::Slash).is_some() {
                let pos = self.pos();
                let Some(tok) = self.eat(TokenKind::Int) else {
                    return Err(syntax(pos, "'/' needs an integer literal on the right"));
                };
                let d: BigInt = tok.text.parse().expect("INT tokens are decimal");
                if d.is_zero() {
                    return Err(syntax(pos, "division by zero"));
                }
                lhs = Expr::Div(Box::new(lhs), d);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat(TokenKind::Minus).is_some() {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.eat(TokenKind::Caret).is_none() {
            return Ok(base);
        }
        let pos = self.pos();
        let Some(tok) = self.eat(TokenKind::Int) else {
            return Err(syntax(
                pos,
                "exponent must be a nonnegative integer literal",
            ));
        };
        let n = tok
            .text
            .parse::<BigInt>()
            .ok()
            .and_then(|n| n.to_u32())
            .ok_or_else(|| syntax(pos, "exponent too large"))?;
        Ok(Expr::Pow(Box::new(base), n))
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(syntax(pos, "unexpected end of input"));
        };
        self.next += 1;
        match tok.kind {
            TokenKind::Int => Ok(Expr::Int(tok.text.parse().expect("INT tokens are decimal"))),
            TokenKind::Ident => Ok(Expr::Gen(Ident {
                name: tok.text,
                pos: tok.pos,
            })),
            TokenKind::LParen => {
                let inner = self.expr()?;
                let close = self.pos();
                if self.eat(TokenKind::RParen).is_none() {
                    return Err(syntax(close, "expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(syntax(tok.pos, format!("unexpected '{}'", tok.text))),
        }
    }
}

/// Parses a full token stream; `input_len` positions end-of-input errors.
pub fn parse_tokens(tokens: &[Token], input_len: usize) -> Result<Expr, ExprError> {
    let mut p = Parser {
        tokens,
        next: 0,
        end: input_len,
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(syntax(t.pos, format!("unexpected '{}'", t.text)));
    }
    Ok(e)
}

pub fn parse(input: &str) -> Result<Expr, ExprError> {
    parse_tokens(&tokenize(input)?, input.len())
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Gen(_) => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Gen(id) => write!(f, "{}", id.name),
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.write_at(f, 3)
            }
            Expr::Add(l, r) => {
                l.write_at(f, 1)?;
                write!(f, " + ")?;
                r.write_at(f, 2)
            }
            Expr::Sub(l, r) => {
                l.write_at(f, 1)?;
                write!(f, " - ")?;
                r.write_at(f, 2)
            }
            Expr::Mul(l, r) => {
                l.write_at(f, 2)?;
                write!(f, "*")?;
                r.write_at(f, 3)
            }
            Expr::Div(l, d) => {
                l.write_at(f, 2)?;
                write!(f, "/{d}")
            }
            Expr::Pow(b, n) => {
                b.write_at(f, 5)?;
                write!(f, "^{n}")
            }
        }
    }

    pub fn eval(&self, ring: &Ring) -> Result<ClassElement, ExprError> {
        Ok(match self {
            Expr::Int(n) => ring.constant(Scalar::from_integer(n.clone())),
            Expr::Gen(id) => {
                ring.generator_named(&id.name)
                    .ok_or_else(|| ExprError::UnknownIdentifier {
                        name: id.name.clone(),
                        pos: id.pos,
                    })?
            }
            Expr::Neg(e) => e.eval(ring)?.neg(),
            Expr::Add(l, r) => l.eval(ring)?.add(&r.eval(ring)?)?,
            Expr::Sub(l, r) => l.eval(ring)?.sub(&r.eval(ring)?)?,
            Expr::Mul(l, r) => l.eval(ring)?.mul(&r.eval(ring)?)?,
            Expr::Div(l, d) => l
                .eval(ring)?
                .scale(&Scalar::new(BigInt::from(1), d.clone())),
            Expr::Pow(b, n) => b.eval(ring)?.pow(*n),
        })
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

pub fn eval_str(input: &str, ring: &Ring) -> Result<ClassElement, ExprError> {
    parse(input)?.eval(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::bundle_over_curve;
    use crate::ring::int;

    fn kinds(input: &str) -> Vec<TokenKind> {
        tokenize(input)
            .unwrap()
            .into_iter()
            .map(|t| t.kind)
            .collect()
    }

    #[test]
    fn token_examples() {
        use TokenKind::*;
        assert_eq!(
            kinds("(4*s+3*f)^4"),
            vec![LParen, Int, Star, Ident, Plus, Int, Star, Ident, RParen, Caret, Int]
        );
        assert_eq!(kinds("6*s^2 - 5*s*f").len(), 11);
        assert_eq!(
            tokenize("4·s"),
            Err(ExprError::InvalidCharacter { ch: '·', pos: 1 })
        );
        let t = tokenize("x_1 12").unwrap();
        assert_eq!((t[0].text.as_str(), t[1].pos), ("x_1", 4));
    }

    #[test]
    fn precedence() {
        let s = || Box::new(Expr::Gen(Ident::new("s")));
        assert_eq!(
            parse("-s^4").unwrap(),
            Expr::Neg(Box::new(Expr::Pow(s(), 4)))
        );
        assert!(matches!(parse("(6*s+5*f)^4").unwrap(), Expr::Pow(_, 4)));
        assert!(matches!(
            parse("s^f"),
            Err(ExprError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(parse("s/0"), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse("s/f"), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse("(s"), Err(ExprError::Syntax { pos: 2, .. })));
        assert!(matches!(parse("s)"), Err(ExprError::Syntax { pos: 1, .. })));
    }

    #[test]
    fn eval_examples() {
        let r3 = bundle_over_curve(0, 3, 4).unwrap();
        assert!(eval_str("(4*s+3*f)^4", &r3).unwrap().is_zero());
        assert_eq!(
            eval_str("(6*s+5*f)^4", &r3).unwrap().integrate().unwrap(),
            int(432)
        );
        assert_eq!(eval_str("-s^4", &r3).unwrap(), r3.class(&[(int(3), 3, 1)]));
        assert_eq!(eval_str("s^3*f", &r3).unwrap().integrate().unwrap(), int(1));
        assert_eq!(
            eval_str("s + x", &r3),
            Err(ExprError::UnknownIdentifier {
                name: "x".into(),
                pos: 4
            })
        );
        assert_eq!(eval_str("s/2 + s/2", &r3).unwrap(), r3.generator(0));
    }

    #[test]
    fn printer_is_minimal() {
        for (input, printed) in [
            ("(s+f)+s", "s + f + s"),
            ("s+(f+s)", "s + (f + s)"),
            ("-(s^2)", "-s^2"),
            ("(-s)^2", "(-s)^2"),
            ("s*(-f)", "s*-f"),
            ("((s*f))/3", "s*f/3"),
            ("(s^2)^3", "(s^2)^3"),
            ("s - (f - s)", "s - (f - s)"),
        ] {
            assert_eq!(parse(input).unwrap().to_string(), printed);
        }
    }
}
