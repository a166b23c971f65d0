//! Surface syntax for free-algebra polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ('+' | '-')? factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := 'y' uint | 'z' uint | int | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! Products need an explicit `*`; variable indices start at 1.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use sl2pair::freealg::{FreePolynomial, GradedLetter, GradedWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Letter(GradedLetter),
    Int(BigInt),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Commutator(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: expected {}", self.offset, self.expected.join(" or "))
    }
}

impl std::error::Error for SyntaxError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, expected: &[&'static str]) -> Result<T, SyntaxError> {
        Err(SyntaxError {
            offset: self.pos,
            expected: expected.to_vec(),
        })
    }

    fn eat(&mut self, b: u8, what: &'static str) -> Result<(), SyntaxError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&[what])
        }
    }

    /// Digits directly at the cursor (no whitespace skipped).
    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut lhs = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(if negate { Expr::Neg(Box::new(lhs)) } else { lhs })
    }

    fn factor(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        match self.digits().map(str::parse::<u32>) {
            Some(Ok(e)) => Ok(Expr::Pow(Box::new(base), e)),
            _ => {
                self.pos = at;
                self.fail(&["exponent"])
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        const ATOM: &[&str] = &["variable", "integer", "'('", "'['"];
        match self.peek() {
            Some(c @ (b'y' | b'z')) => {
                self.pos += 1;
                let at = self.pos;
                match self.digits().map(str::parse::<u32>) {
                    Some(Ok(i)) if i >= 1 => Ok(Expr::Letter(if c == b'y' {
                        GradedLetter::y(i)
                    } else {
                        GradedLetter::z(i)
                    })),
                    _ => {
                        self.pos = at;
                        self.fail(&["variable index >= 1"])
                    }
                }
            }
            Some(b'0'..=b'9') => {
                let d = self.digits().expect("peeked a digit");
                Ok(Expr::Int(d.parse().expect("decimal digits")))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.eat(b')', "')'")?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.eat(b',', "','")?;
                let b = self.expr()?;
                self.eat(b']', "']'")?;
                Ok(Expr::Commutator(Box::new(a), Box::new(b)))
            }
            _ => self.fail(ATOM),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.fail(&["'+'", "'-'", "'*'", "end of input"]);
    }
    Ok(e)
}

fn constant(c: BigInt) -> FreePolynomial {
    FreePolynomial::from_terms([(c, GradedWord::one())])
}

/// Expands the tree in the free algebra; commutators become `ab - ba`.
pub fn lower(e: &Expr) -> FreePolynomial {
    match e {
        Expr::Letter(l) => FreePolynomial::word(GradedWord(vec![*l])),
        Expr::Int(c) => constant(c.clone()),
        Expr::Neg(a) => lower(a).scale(&-BigInt::one()),
        Expr::Add(a, b) => &lower(a) + &lower(b),
        Expr::Sub(a, b) => &lower(a) - &lower(b),
        Expr::Mul(a, b) => &lower(a) * &lower(b),
        Expr::Pow(a, n) => {
            let base = lower(a);
            (0..*n).fold(constant(BigInt::one()), |acc, _| &acc * &base)
        }
        Expr::Commutator(a, b) => {
            let (a, b) = (lower(a), lower(b));
            &(&a * &b) - &(&b * &a)
        }
    }
}

pub fn parse_free(text: &str) -> Result<FreePolynomial, SyntaxError> {
    parse(text).map(|e| lower(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letter(e: &Expr) -> GradedLetter {
        match e {
            Expr::Letter(l) => *l,
            other => panic!("not a letter: {other:?}"),
        }
    }

    #[test]
    fn two_terms() {
        match parse("y1*y2 - y2*y1").unwrap() {
            Expr::Sub(a, b) => {
                assert!(matches!(*a, Expr::Mul(..)));
                assert!(matches!(*b, Expr::Mul(..)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nested_commutator() {
        match parse("[z1,[y1,z2]]").unwrap() {
            Expr::Commutator(a, b) => {
                assert_eq!(letter(&a), GradedLetter::z(1));
                match *b {
                    Expr::Commutator(c, d) => {
                        assert_eq!(letter(&c), GradedLetter::y(1));
                        assert_eq!(letter(&d), GradedLetter::z(2));
                    }
                    other => panic!("{other:?}"),
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejections() {
        let e = parse("y1 z2").unwrap_err();
        assert_eq!(e.offset, 3);
        assert!(e.expected.contains(&"'*'"));
        assert_eq!(parse("y0").unwrap_err().offset, 1);
        assert_eq!(parse("z-1").unwrap_err().offset, 1);
        assert!(parse("[y1]").is_err());
        assert!(parse("[y1,y2,y3]").is_err());
        assert!(parse("(y1").is_err());
        assert!(parse("y1^").is_err());
        assert!(parse("").is_err());
        assert!(parse("x1").is_err());
    }

    #[test]
    fn lowering() {
        let f = parse_free("[y1,z1]").unwrap();
        let g = parse_free("y1*z1 - z1*y1").unwrap();
        assert_eq!(f, g);
        let f = parse_free("-(y1 + 2)^2").unwrap();
        assert_eq!(f, parse_free("-y1*y1 - 4*y1 - 4").unwrap());
        assert_eq!(parse_free("z1^0").unwrap(), parse_free("1").unwrap());
    }
}
