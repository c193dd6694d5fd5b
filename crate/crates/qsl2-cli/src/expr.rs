//! Expressions over the generators and scalars.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' signed-int)?
//! atom   := generator | 'Omega' | 'q' | 's' | 'i' | integer | integer 'i' | '(' expr ')'
//! ```
//!
//! `s` is `q^(1/2)`; `4i` is shorthand for `4*i`. Juxtaposition is not
//! multiplication.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use uqsl2::harish::casimir;
use uqsl2::pbw::{multiply1, Gen, Pbw1Element};
use uqsl2::scalars::{GaussRat, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("divisor at position {position} contains generators")]
    NonScalarDivisor { position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::NonScalarDivisor { position } => {
                *position
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected a scalar, found generators")]
    NotScalar,
    #[error("expected a constant, found q or s")]
    NotConstant,
    #[error("expected a rational number")]
    NotRational,
    #[error("expected an integer")]
    NotInteger,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Atom {
    Gen(Gen),
    Omega,
    Q,
    S,
    I,
    Int(BigInt),
    /// `n i`
    Imag(BigInt),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Atom(Atom),
    Sum(Vec<Expr>),
    Negate(Box<Expr>),
    Product(Vec<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, i64),
}

impl Expr {
    pub fn has_generators(&self) -> bool {
        match self {
            Expr::Atom(a) => matches!(a, Atom::Gen(_) | Atom::Omega),
            Expr::Sum(v) | Expr::Product(v) => v.iter().any(Expr::has_generators),
            Expr::Negate(e) | Expr::Power(e, _) => e.has_generators(),
            Expr::Quotient(a, b) => a.has_generators() || b.has_generators(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Gen(g) => f.write_str(g.symbol()),
            Atom::Omega => f.write_str("Omega"),
            Atom::Q => f.write_str("q"),
            Atom::S => f.write_str("s"),
            Atom::I => f.write_str("i"),
            Atom::Int(n) => write!(f, "{n}"),
            Atom::Imag(n) => write!(f, "{n}i"),
        }
    }
}

/// Fully parenthesized form; parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, v: &[Expr], sep: &str| -> fmt::Result {
            f.write_str("(")?;
            for (k, e) in v.iter().enumerate() {
                if k > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{e}")?;
            }
            f.write_str(")")
        };
        match self {
            Expr::Atom(a) => write!(f, "{a}"),
            Expr::Sum(v) => join(f, v, " + "),
            Expr::Product(v) => join(f, v, "*"),
            Expr::Negate(e) => write!(f, "(-{e})"),
            Expr::Quotient(a, b) => write!(f, "({a}/{b})"),
            Expr::Power(e, k) => write!(f, "{e}^{k}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Imag(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((pos, t));
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().map(|(_, c)| c).collect();
            let n: BigInt = digits.parse().expect("ascii digits");
            let imag = k < chars.len()
                && chars[k].1 == 'i'
                && !chars
                    .get(k + 1)
                    .is_some_and(|(_, c)| c.is_ascii_alphanumeric());
            if imag {
                k += 1;
                out.push((pos, Tok::Imag(n)));
            } else {
                out.push((pos, Tok::Int(n)));
            }
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_alphanumeric() {
                k += 1;
            }
            out.push((
                pos,
                Tok::Ident(chars[start..k].iter().map(|(_, c)| c).collect()),
            ));
        } else {
            return Err(syntax(pos, format!("unexpected character '{c}'")));
        }
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        position,
        message: message.into(),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(Expr::Negate(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    factors.push(acc);
                    acc = self.factor()?;
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let den = self.factor()?;
                    if den.has_generators() {
                        return Err(ParseError::NonScalarDivisor { position: pos });
                    }
                    factors.push(acc);
                    let num = if factors.len() == 1 {
                        factors.pop().unwrap()
                    } else {
                        Expr::Product(std::mem::take(&mut factors))
                    };
                    acc = Expr::Quotient(Box::new(num), Box::new(den));
                }
                _ => break,
            }
        }
        if factors.is_empty() {
            Ok(acc)
        } else {
            factors.push(acc);
            Ok(Expr::Product(factors))
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Negate(Box::new(self.factor()?)));
        }
        let base_pos = self.pos();
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.pos();
        let Tok::Int(k) = self.bump() else {
            return Err(syntax(pos, "expected an integer exponent"));
        };
        let k: i64 = k
            .try_into()
            .map_err(|_| syntax(pos, "exponent out of range"))?;
        let k = if neg { -k } else { k };
        if k < 0 && base.has_generators() {
            return Err(ParseError::NonScalarDivisor { position: base_pos });
        }
        Ok(Expr::Power(Box::new(base), k))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        let atom = match self.bump() {
            Tok::Int(n) => Atom::Int(n),
            Tok::Imag(n) => Atom::Imag(n),
            Tok::Ident(name) => match name.as_str() {
                "Omega" => Atom::Omega,
                "q" => Atom::Q,
                "s" => Atom::S,
                "i" => Atom::I,
                _ => match Gen::from_symbol(&name) {
                    Some(g) => Atom::Gen(g),
                    None => return Err(syntax(pos, format!("unknown symbol '{name}'"))),
                },
            },
            Tok::LParen => {
                let e = self.expr()?;
                let close = self.pos();
                if self.bump() != Tok::RParen {
                    return Err(syntax(close, "expected ')'"));
                }
                return Ok(e);
            }
            Tok::End => return Err(syntax(pos, "unexpected end of input")),
            t => return Err(syntax(pos, format!("unexpected token {t:?}"))),
        };
        Ok(Expr::Atom(atom))
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(e)
}

fn int_scalar(n: &BigInt) -> GaussRat {
    GaussRat::real(BigRational::from_integer(n.clone()))
}

/// Value of a generator-free expression.
pub fn eval_scalar(e: &Expr) -> Result<RatFunc, EvalError> {
    Ok(match e {
        Expr::Atom(a) => match a {
            Atom::Gen(_) | Atom::Omega => return Err(EvalError::NotScalar),
            Atom::Q => RatFunc::q(),
            Atom::S => RatFunc::s_pow(1),
            Atom::I => RatFunc::i(),
            Atom::Int(n) => RatFunc::from_gauss(int_scalar(n)),
            Atom::Imag(n) => RatFunc::from_gauss(&int_scalar(n) * &GaussRat::i()),
        },
        Expr::Sum(v) => v
            .iter()
            .try_fold(RatFunc::zero(), |acc, t| Ok(&acc + &eval_scalar(t)?))?,
        Expr::Product(v) => v
            .iter()
            .try_fold(RatFunc::one(), |acc, t| Ok(&acc * &eval_scalar(t)?))?,
        Expr::Negate(x) => -eval_scalar(x)?,
        Expr::Quotient(a, b) => {
            let d = eval_scalar(b)?.inv().ok_or(EvalError::DivisionByZero)?;
            &eval_scalar(a)? * &d
        }
        Expr::Power(x, k) => eval_scalar(x)?.pow(*k).ok_or(EvalError::DivisionByZero)?,
    })
}

fn element_pow(base: &Pbw1Element, k: u64) -> Pbw1Element {
    let mut acc = Pbw1Element::one();
    let mut b = base.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = multiply1(&acc, &b);
        }
        k >>= 1;
        if k > 0 {
            b = multiply1(&b, &b);
        }
    }
    acc
}

/// Value of an expression in the first PBW basis.
pub fn eval_element(e: &Expr) -> Result<Pbw1Element, EvalError> {
    if !e.has_generators() {
        return Ok(Pbw1Element::scalar(eval_scalar(e)?));
    }
    Ok(match e {
        Expr::Atom(Atom::Omega) => casimir(),
        Expr::Atom(Atom::Gen(g)) => Pbw1Element::generator(*g),
        Expr::Atom(_) => unreachable!("scalar atoms are handled above"),
        Expr::Sum(v) => v
            .iter()
            .try_fold(Pbw1Element::zero(), |acc, t| Ok(&acc + &eval_element(t)?))?,
        Expr::Product(v) => v.iter().try_fold(Pbw1Element::one(), |acc, t| {
            Ok(multiply1(&acc, &eval_element(t)?))
        })?,
        Expr::Negate(x) => -&eval_element(x)?,
        Expr::Quotient(a, b) => {
            let d = eval_scalar(b)?.inv().ok_or(EvalError::DivisionByZero)?;
            eval_element(a)?.scale(&d)
        }
        Expr::Power(x, k) => {
            let k = u64::try_from(*k).map_err(|_| EvalError::NotScalar)?;
            element_pow(&eval_element(x)?, k)
        }
    })
}

/// A scalar free of `q`: a Gaussian rational.
pub fn eval_gauss(e: &Expr) -> Result<GaussRat, EvalError> {
    eval_scalar(e)?.as_constant().ok_or(EvalError::NotConstant)
}

pub fn eval_rational(e: &Expr) -> Result<BigRational, EvalError> {
    let g = eval_gauss(e)?;
    if !g.im.is_zero() {
        return Err(EvalError::NotRational);
    }
    Ok(g.re)
}

pub fn eval_integer(e: &Expr) -> Result<i64, EvalError> {
    let r = eval_rational(e)?;
    if !r.is_integer() {
        return Err(EvalError::NotInteger);
    }
    r.to_integer().try_into().map_err(|_| EvalError::NotInteger)
}

#[cfg(test)]
mod tests {
    use super::*;
    use uqsl2::scalars::qint;

    fn p(s: &str) -> Expr {
        parse(s).unwrap()
    }

    fn atom(a: Atom) -> Expr {
        Expr::Atom(a)
    }

    #[test]
    fn tree_shapes() {
        let want = Expr::Sum(vec![
            Expr::Product(vec![atom(Atom::Q), atom(Atom::Gen(Gen::X))]),
            Expr::Negate(Box::new(Expr::Product(vec![
                Expr::Power(Box::new(atom(Atom::Q)), -1),
                atom(Atom::Gen(Gen::Y)),
            ]))),
        ]);
        assert_eq!(p("q*X - q^-1*Y"), want);
        assert_eq!(p("Omega^2"), Expr::Power(Box::new(atom(Atom::Omega)), 2));
        assert_eq!(p(" ( 4i ) "), atom(Atom::Imag(BigInt::from(4))));
        assert_eq!(p("q*X - q^-1*Y"), p(&want.to_string()));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse("X/Z"),
            Err(ParseError::NonScalarDivisor { position: 2 })
        );
        assert_eq!(
            parse("X^-1"),
            Err(ParseError::NonScalarDivisor { position: 0 })
        );
        assert_eq!(parse("X Y").unwrap_err().position(), 2);
        assert_eq!(parse("X*(Y").unwrap_err().position(), 4);
        assert_eq!(parse("2*w").unwrap_err().position(), 2);
        assert_eq!(parse("X^q").unwrap_err().position(), 2);
        assert_eq!(parse("").unwrap_err().position(), 0);
        assert!(parse("X/(q+Z)").is_err());
    }

    #[test]
    fn scalar_values() {
        assert_eq!(eval_scalar(&p("(q^2 - q^-2)/(q - q^-1)")).unwrap(), qint(2));
        assert_eq!(eval_scalar(&p("s^2")).unwrap(), RatFunc::q());
        assert_eq!(
            eval_gauss(&p("(3+4i)/5")).unwrap(),
            GaussRat::from_parts((3, 5), (4, 5))
        );
        assert_eq!(
            eval_gauss(&p("-2*i")).unwrap(),
            GaussRat::from_parts((0, 1), (-2, 1))
        );
        assert_eq!(eval_integer(&p("-3")).unwrap(), -3);
        assert_eq!(eval_scalar(&p("1/(q-q)")), Err(EvalError::DivisionByZero));
        assert_eq!(eval_gauss(&p("q")), Err(EvalError::NotConstant));
        assert_eq!(eval_rational(&p("i")), Err(EvalError::NotRational));
        assert_eq!(eval_scalar(&p("X")), Err(EvalError::NotScalar));
    }

    #[test]
    fn element_values() {
        // X Y = 1 - q^2 Z^2
        let xy = eval_element(&p("X*Y")).unwrap();
        assert_eq!(xy, eval_element(&p("1 - q^2*Z^2")).unwrap());
        assert_eq!(eval_element(&p("Omega")).unwrap(), casimir());
        let z = eval_element(&p("Z^3")).unwrap();
        assert_eq!(z, eval_element(&p("Z*Z*Z")).unwrap());
        assert_eq!(
            eval_element(&p("(X + Y)/2")).unwrap(),
            eval_element(&p("X/2 + Y/2")).unwrap()
        );
    }
}
