//! A deliberately tiny expression grammar for the `decompose` command:
//! generators Jx, Jy, Jz, rational literals like 3 or 3/4, and + − *
//! with parentheses. ASCII only; errors carry the byte position.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::uea::{multiply, Axis, UeaElement};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Rational),
    Generator(Axis),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            'J' => {
                let axis = bytes.get(i + 1).and_then(|&b| match b {
                    b'x' => Some(Axis::X),
                    b'y' => Some(Axis::Y),
                    b'z' => Some(Axis::Z),
                    _ => None,
                });
                match axis {
                    Some(a) => {
                        tokens.push((i, Token::Generator(a)));
                        i += 2;
                    }
                    None => {
                        return Err(Error::Parse {
                            position: i,
                            message: "expected Jx, Jy, or Jz".into(),
                        })
                    }
                }
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let mut text = &input[start..i];
                // A slash directly followed by digits makes it a fraction.
                if i < bytes.len()
                    && bytes[i] == b'/'
                    && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)
                {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    text = &input[start..i];
                }
                let value = crate::rational::parse_frac(text).map_err(|_| Error::Parse {
                    position: start,
                    message: format!("bad rational literal {text:?}"),
                })?;
                tokens.push((start, Token::Number(value)));
            }
            _ => {
                return Err(Error::Parse {
                    position: i,
                    message: format!("unexpected character {c:?}"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    input_len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.input_len, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<UeaElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<UeaElement> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.bump();
            acc = multiply(&acc, &self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<UeaElement> {
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            return Ok(-&self.factor()?);
        }
        let at = self.position();
        match self.bump() {
            Some(Token::Number(n)) => Ok(UeaElement::scalar(n.clone())),
            Some(Token::Generator(a)) => Ok(UeaElement::generator(*a)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(&Token::RParen) {
                    return Err(Error::Parse {
                        position: self.position(),
                        message: "expected ')'".into(),
                    });
                }
                Ok(inner)
            }
            _ => Err(Error::Parse {
                position: at,
                message: "expected a rational, Jx/Jy/Jz, or '('".into(),
            }),
        }
    }
}

/// Parses an expression into a PBW element.
pub fn parse(input: &str) -> Result<UeaElement> {
    let tokens = lex(input)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        input_len: input.len(),
    };
    let value = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(Error::Parse {
            position: parser.position(),
            message: "trailing input".into(),
        });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::uea::PbwMonomial;

    #[test]
    fn commutator_parses_to_jz() {
        let e = parse("Jx*Jy - Jy*Jx").unwrap();
        assert_eq!(e, UeaElement::generator(Axis::Z));
    }

    #[test]
    fn casimir_expression() {
        let e = parse("Jx*Jx + Jy*Jy + Jz*Jz").unwrap();
        assert_eq!(e, crate::uea::casimir());
    }

    #[test]
    fn rationals_parens_and_unary_minus() {
        let e = parse("-(1/2)*Jz + 3*Jz").unwrap();
        assert_eq!(e, UeaElement::generator(Axis::Z).scale(&rat(5, 2)));
        let e = parse("2/4").unwrap();
        assert_eq!(e, UeaElement::scalar(rat(1, 2)));
        let e = parse("Jx*Jx*Jx").unwrap();
        assert_eq!(e, UeaElement::monomial(PbwMonomial([3, 0, 0])));
        assert_eq!(parse("7").unwrap(), UeaElement::scalar(int(7)));
    }

    #[test]
    fn errors_carry_positions() {
        match parse("Jx + Jw") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse("Jx +") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse("(Jx") {
            Err(Error::Parse { .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse("Jx Jz") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
