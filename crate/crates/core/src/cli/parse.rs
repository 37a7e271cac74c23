//! The label expression language.
//!
//! ```text
//! expr     := term (('*' | '⊗') term)*
//! term     := atom ['^' uint]
//! atom     := label | '(' expr ')'
//! label    := 'L(' int ',' int ')'
//!           | 'O^' int '[' label ']'
//!           | 'M+_{' uint '}(' int ',' int ')'
//!           | 'M-_{' uint '}(' int ',' int ')'
//!           | 'C_{' uint ',' rational '}(' int ',' int ')'
//!           | 'P(' int ',' int ')'
//! rational := int ['/' uint]
//! ```
//!
//! Whitespace is ignored between tokens. Positions in errors count
//! characters from 0.

use thiserror::Error;

use crate::fusion::{checked_power, checked_tensor, GreenElement};
use crate::labels::{LabelError, ModLabel};
use crate::modring::Params;
use crate::Lambda;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("odd length subscript {len} at position {pos}: string modules have even length")]
    OddLength { pos: usize, len: u64 },
    #[error("band parameter is zero at position {pos}")]
    ZeroLambda { pos: usize },
    #[error("vertex ({u},{i}) at position {pos} is projective; only P(u,i) may sit there")]
    ProjectiveVertex { pos: usize, u: i64, i: i64 },
    #[error("at position {pos}: {source}")]
    Invalid { pos: usize, source: LabelError },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("multiplicity or dimension overflow while evaluating the product")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelExpr {
    Label(ModLabel),
    Tensor(Box<LabelExpr>, Box<LabelExpr>),
    Power(Box<LabelExpr>, u32),
}

impl LabelExpr {
    pub fn as_label(&self) -> Option<&ModLabel> {
        match self {
            LabelExpr::Label(x) => Some(x),
            _ => None,
        }
    }

    pub fn eval(&self, p: &Params) -> Result<GreenElement, EvalError> {
        match self {
            LabelExpr::Label(x) => Ok(GreenElement::from_label(p, *x)),
            LabelExpr::Tensor(a, b) => {
                checked_tensor(p, &a.eval(p)?, &b.eval(p)?).ok_or(EvalError::Overflow)
            }
            LabelExpr::Power(a, t) => checked_power(p, &a.eval(p)?, *t).ok_or(EvalError::Overflow),
        }
    }
}

pub fn parse_expr(p: &Params, text: &str) -> Result<LabelExpr, ParseError> {
    let mut parser = Parser {
        p,
        chars: text.chars().collect(),
        pos: 0,
    };
    let expr = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.syntax("expected '*', '⊗' or end of input"));
    }
    Ok(expr)
}

/// Parses text that must consist of a single label.
pub fn parse_label(p: &Params, text: &str) -> Result<ModLabel, ParseError> {
    let mut parser = Parser {
        p,
        chars: text.chars().collect(),
        pos: 0,
    };
    parser.skip_ws();
    let x = parser.label()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.syntax("expected end of input after a single label"));
    }
    Ok(x)
}

struct Parser<'a> {
    p: &'a Params,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn syntax(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<LabelExpr, ParseError> {
        let mut acc = self.term()?;
        while matches!(self.peek(), Some('*' | '⊗')) {
            self.pos += 1;
            let rhs = self.term()?;
            acc = LabelExpr::Tensor(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LabelExpr, ParseError> {
        let atom = if self.eat('(') {
            let inner = self.expr()?;
            self.expect(')')?;
            inner
        } else {
            LabelExpr::Label(self.label()?)
        };
        if self.eat('^') {
            let at = self.pos;
            let t = self.uint()?;
            if t == 0 || t > MAX_EXPONENT as u64 {
                return Err(ParseError::Syntax {
                    pos: at,
                    msg: format!("exponent must lie in 1..={MAX_EXPONENT}"),
                });
            }
            return Ok(LabelExpr::Power(Box::new(atom), t as u32));
        }
        Ok(atom)
    }

    fn label(&mut self) -> Result<ModLabel, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some('L') => {
                self.pos += 1;
                let (u, i) = self.vertex_args()?;
                self.checked(start, u, i, self.p.simple(u, i))
            }
            Some('P') => {
                self.pos += 1;
                let (u, i) = self.vertex_args()?;
                Ok(self.p.projective(u, i))
            }
            Some('O') => {
                self.pos += 1;
                self.expect('^')?;
                let m = self.int()?;
                self.expect('[')?;
                let inner = self.label()?;
                self.expect(']')?;
                self.p
                    .syzygy_shift(&inner, m)
                    .map_err(|source| ParseError::Invalid { pos: start, source })
            }
            Some('M') => {
                self.pos += 1;
                let plus = match self.peek() {
                    Some('+') => true,
                    Some('-') => false,
                    _ => return Err(self.syntax("expected '+' or '-' after 'M'")),
                };
                self.pos += 1;
                self.expect('_')?;
                self.expect('{')?;
                let len_at = {
                    self.skip_ws();
                    self.pos
                };
                let len = self.uint()?;
                self.expect('}')?;
                if len == 0 {
                    return Err(ParseError::Syntax {
                        pos: len_at,
                        msg: "string length must be positive".into(),
                    });
                }
                if len % 2 != 0 {
                    return Err(ParseError::OddLength { pos: len_at, len });
                }
                let (u, i) = self.vertex_args()?;
                let ell = (len / 2) as i64;
                let made = if plus {
                    self.p.string_plus(ell, u, i)
                } else {
                    self.p.string_minus(ell, u, i)
                };
                self.checked(start, u, i, made)
            }
            Some('C') => {
                self.pos += 1;
                self.expect('_')?;
                self.expect('{')?;
                let ell_at = {
                    self.skip_ws();
                    self.pos
                };
                let ell = self.uint()?;
                if ell == 0 {
                    return Err(ParseError::Syntax {
                        pos: ell_at,
                        msg: "band length must be positive".into(),
                    });
                }
                self.expect(',')?;
                let lambda_at = {
                    self.skip_ws();
                    self.pos
                };
                let lambda = self.rational()?;
                if *lambda.numer() == 0 {
                    return Err(ParseError::ZeroLambda { pos: lambda_at });
                }
                self.expect('}')?;
                let (u, i) = self.vertex_args()?;
                self.checked(start, u, i, self.p.band(ell as i64, lambda, u, i))
            }
            _ => Err(self.syntax("expected a label: L, O^, M+, M-, C or P")),
        }
    }

    fn checked(
        &self,
        pos: usize,
        u: i64,
        i: i64,
        made: Result<ModLabel, LabelError>,
    ) -> Result<ModLabel, ParseError> {
        made.map_err(|source| match source {
            LabelError::ProjectiveVertex(_) => ParseError::ProjectiveVertex { pos, u, i },
            LabelError::ZeroLambda => ParseError::ZeroLambda { pos },
            source => ParseError::Invalid { pos, source },
        })
    }

    /// `'(' int ',' int ')'`
    fn vertex_args(&mut self) -> Result<(i64, i64), ParseError> {
        self.expect('(')?;
        let u = self.int()?;
        self.expect(',')?;
        let i = self.int()?;
        self.expect(')')?;
        Ok((u, i))
    }

    fn digits(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a number"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<u64>()
            .ok()
            .filter(|&x| x <= i64::MAX as u64)
            .ok_or(ParseError::Syntax {
                pos: start,
                msg: "number out of range".into(),
            })
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.digits()
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        let x = self.digits()? as i64;
        Ok(if negative { -x } else { x })
    }

    fn rational(&mut self) -> Result<Lambda, ParseError> {
        let num = self.int()?;
        if self.eat('/') {
            let at = {
                self.skip_ws();
                self.pos
            };
            let den = self.uint()?;
            if den == 0 {
                return Err(ParseError::Syntax {
                    pos: at,
                    msg: "zero denominator".into(),
                });
            }
            Ok(Lambda::new(num, den as i64))
        } else {
            Ok(Lambda::from_integer(num))
        }
    }
}
