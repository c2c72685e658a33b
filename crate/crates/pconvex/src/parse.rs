//! Text grammar for polynomials.
//!
//! Terms of the form `c*x<i>^<k>…` combined with `+ - ( ) ^`; variables are
//! `x1..xd`; rational coefficients are written `p/q`. Multiplication may be
//! explicit (`*`) or by juxtaposition (`2 x1 x2`). The canonical formatter
//! (`Display` on `Polynomial`) emits graded-lex descending order and
//! round-trips through this parser.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Number(BigRational),
    Var(usize),
}

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn read_digits(&mut self) -> BigInt {
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .expect("ascii digits")
            .parse()
            .expect("digit string")
    }

    fn tokenize(mut self) -> Result<Vec<(Token, usize)>> {
        let mut tokens = Vec::new();
        loop {
            self.skip_ws();
            if self.pos >= self.input.len() {
                break;
            }
            let pos = self.pos;
            let c = self.input[self.pos];
            let token = match c {
                b'+' => {
                    self.pos += 1;
                    Token::Plus
                }
                b'-' => {
                    self.pos += 1;
                    Token::Minus
                }
                b'*' => {
                    self.pos += 1;
                    Token::Star
                }
                b'^' => {
                    self.pos += 1;
                    Token::Caret
                }
                b'(' => {
                    self.pos += 1;
                    Token::LParen
                }
                b')' => {
                    self.pos += 1;
                    Token::RParen
                }
                b'0'..=b'9' => {
                    let numer = self.read_digits();
                    // `p/q` rational literal
                    if self.pos < self.input.len() && self.input[self.pos] == b'/' {
                        let slash = self.pos;
                        self.pos += 1;
                        if self.pos >= self.input.len() || !self.input[self.pos].is_ascii_digit() {
                            return Err(Error::Parse {
                                pos: slash,
                                msg: "expected denominator digits after '/'".into(),
                            });
                        }
                        let denom = self.read_digits();
                        if denom.is_zero() {
                            return Err(Error::Parse {
                                pos: slash,
                                msg: "zero denominator".into(),
                            });
                        }
                        Token::Number(BigRational::new(numer, denom))
                    } else {
                        Token::Number(BigRational::from_integer(numer))
                    }
                }
                b'x' => {
                    self.pos += 1;
                    if self.pos >= self.input.len() || !self.input[self.pos].is_ascii_digit() {
                        return Err(Error::Parse {
                            pos,
                            msg: "expected variable index after 'x'".into(),
                        });
                    }
                    let idx = self.read_digits();
                    let idx: usize = idx.try_into().map_err(|_| Error::Parse {
                        pos,
                        msg: "variable index too large".into(),
                    })?;
                    if idx == 0 {
                        return Err(Error::Parse {
                            pos,
                            msg: "variable indices start at x1".into(),
                        });
                    }
                    Token::Var(idx)
                }
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("unexpected character '{}'", c as char),
                    })
                }
            };
            tokens.push((token, pos));
        }
        Ok(tokens)
    }
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
    dim: usize,
    input_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(t, _)| t)
    }

    fn peek_pos(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|&(_, p)| p)
            .unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).map(|(t, _)| t.clone());
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<()> {
        let pos = self.peek_pos();
        match self.bump() {
            Some(t) if t == token => Ok(()),
            _ => Err(Error::Parse {
                pos,
                msg: format!("expected {what}"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = acc.mul(&self.unary()?)?;
                }
                // juxtaposition: a following number, variable, or '(' continues the product
                Some(Token::Number(_)) | Some(Token::Var(_)) | Some(Token::LParen) => {
                    acc = acc.mul(&self.power()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let pos = self.peek_pos();
            match self.bump() {
                // the lexer only emits nonnegative literals, so integrality suffices
                Some(Token::Number(n)) if n.is_integer() => {
                    let k: u32 = n.numer().try_into().map_err(|_| Error::Parse {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.pow(k))
                }
                _ => Err(Error::Parse {
                    pos,
                    msg: "expected nonnegative integer exponent after '^'".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.peek_pos();
        match self.bump() {
            Some(Token::Number(n)) => Ok(Polynomial::constant(self.dim, n)),
            Some(Token::Var(idx)) => {
                if idx > self.dim {
                    return Err(Error::VariableOutOfRange {
                        index: idx,
                        dim: self.dim,
                        pos,
                    });
                }
                Polynomial::variable(self.dim, idx - 1)
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(Error::Parse {
                pos,
                msg: "expected number, variable, or '('".into(),
            }),
        }
    }
}

impl Polynomial {
    /// Parse a polynomial expression in variables `x1..xd`.
    pub fn parse(text: &str, dim: usize) -> Result<Polynomial> {
        let tokens = Lexer::new(text).tokenize()?;
        if tokens.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty expression".into(),
            });
        }
        let mut parser = Parser {
            tokens,
            cursor: 0,
            dim,
            input_len: text.len(),
        };
        let p = parser.expr()?;
        if parser.cursor != parser.tokens.len() {
            return Err(Error::Parse {
                pos: parser.peek_pos(),
                msg: "trailing input".into(),
            });
        }
        Ok(p)
    }
}

// Silence an unused-import lint path for One on some call graphs.
#[allow(unused)]
fn _one() -> BigRational {
    BigRational::one()
}
