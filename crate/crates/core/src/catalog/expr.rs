//! A small arithmetic language for operator images, e.g.
//! `-lambda/2*h + beta1*e + gamma1*f` or `-(beta2+lambda)/alpha2*R(e)`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::ParseError;
use crate::exactalg::{Rational, RationalFunction};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Spanned {
    pub tok: Token,
    pub col: usize,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Spanned { tok: Token::Num(s.parse().expect("digits")), col });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Spanned { tok: Token::Ident(chars[start..i].iter().collect()), col });
        } else if "+-*/^()".contains(c) {
            out.push(Spanned { tok: Token::Op(c), col });
            i += 1;
        } else {
            return Err(ParseError::new(format!("unexpected character `{c}`"), 1, col));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Expr {
    Num(BigInt),
    Ident(String, usize),
    Image(String, usize),
    Neg(Box<Expr>),
    Bin(char, Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |s| s.col)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::new(msg, 1, self.col()))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let col = self.col();
            let op = match self.peek() {
                Some(Token::Op(c @ ('+' | '-'))) => *c,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs), col);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let col = self.col();
            let op = match self.peek() {
                Some(Token::Op(c @ ('*' | '/'))) => *c,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs), col);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => self.err("expected an integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if name == "R" && self.eat('(') {
                    let label = match self.peek().cloned() {
                        Some(Token::Ident(l)) => l,
                        _ => return self.err("expected a basis label inside R(...)"),
                    };
                    self.pos += 1;
                    if !self.eat(')') {
                        return self.err("expected `)`");
                    }
                    Ok(Expr::Image(label, col))
                } else {
                    Ok(Expr::Ident(name, col))
                }
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(Token::Op(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of expression"),
        }
    }
}

pub(crate) fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks: &toks, pos: 0, end_col: src.chars().count() + 1 };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Either a scalar or a coordinate vector in the canonical basis.
#[derive(Clone, PartialEq)]
pub(crate) enum Value {
    Scalar(RationalFunction),
    Vector(Vec<RationalFunction>),
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Vector(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

/// Resolution of identifiers and `R(label)` during evaluation.
pub(crate) trait Env {
    fn ident(&mut self, name: &str, col: usize) -> Result<Value, ParseError>;
    fn image(&mut self, label: &str, col: usize) -> Result<Value, ParseError>;
}

fn scalar_num(n: &BigInt) -> RationalFunction {
    RationalFunction::constant(Rational::from_integer(n.clone()))
}

pub(crate) fn eval(e: &Expr, env: &mut dyn Env) -> Result<Value, ParseError> {
    use Value::{Scalar as S, Vector as V};
    match e {
        Expr::Num(n) => Ok(S(scalar_num(n))),
        Expr::Ident(name, col) => env.ident(name, *col),
        Expr::Image(label, col) => env.image(label, *col),
        Expr::Neg(a) => Ok(match eval(a, env)? {
            S(s) => S(-s),
            V(v) => V(v.into_iter().map(|x| -x).collect()),
        }),
        Expr::Pow(a, k) => match eval(a, env)? {
            S(s) => Ok(S(crate::exactalg::pow(&s, *k))),
            V(_) => Err(ParseError::new("cannot raise a vector to a power", 1, 1)),
        },
        Expr::Bin(op, a, b, col) => {
            let (x, y) = (eval(a, env)?, eval(b, env)?);
            let err = |m: &str| Err(ParseError::new(m, 1, *col));
            match (op, x, y) {
                ('+', S(x), S(y)) => Ok(S(x + y)),
                ('-', S(x), S(y)) => Ok(S(x - y)),
                ('+', V(x), V(y)) => Ok(V(x.into_iter().zip(y).map(|(a, b)| a + b).collect())),
                ('-', V(x), V(y)) => Ok(V(x.into_iter().zip(y).map(|(a, b)| a - b).collect())),
                ('+' | '-', _, _) => err("cannot add a scalar and a vector"),
                ('*', S(x), S(y)) => Ok(S(x * y)),
                ('*', S(c), V(v)) | ('*', V(v), S(c)) => {
                    Ok(V(v.into_iter().map(|a| c.clone() * a).collect()))
                }
                ('*', V(_), V(_)) => err("cannot multiply two vectors"),
                ('/', x, S(d)) => {
                    if d.is_zero() {
                        return err("division by zero");
                    }
                    let div = |a: RationalFunction| a.div(&d).expect("nonzero divisor");
                    Ok(match x {
                        S(s) => S(div(s)),
                        V(v) => V(v.into_iter().map(div).collect()),
                    })
                }
                ('/', _, V(_)) => err("cannot divide by a vector"),
                _ => err("unknown operator"),
            }
        }
    }
}

/// Free identifiers of an expression, in order of appearance.
pub(crate) fn identifiers(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Num(_) => {}
        Expr::Ident(n, _) => {
            if !out.contains(n) {
                out.push(n.clone());
            }
        }
        Expr::Image(..) => {}
        Expr::Neg(a) | Expr::Pow(a, _) => identifiers(a, out),
        Expr::Bin(_, a, b, _) => {
            identifiers(a, out);
            identifiers(b, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat, Polynomial};

    struct Basis3;

    impl Env for Basis3 {
        fn ident(&mut self, name: &str, col: usize) -> Result<Value, ParseError> {
            let unit = |i: usize| {
                Value::Vector(
                    (0..3).map(|k| RationalFunction::constant(if k == i { int(1) } else { int(0) })).collect(),
                )
            };
            match name {
                "h" => Ok(unit(0)),
                "e" => Ok(unit(1)),
                "f" => Ok(unit(2)),
                "lambda" | "a" | "b" => Ok(Value::Scalar(RationalFunction::var(name))),
                _ => Err(ParseError::new(format!("unknown `{name}`"), 1, col)),
            }
        }
        fn image(&mut self, _: &str, col: usize) -> Result<Value, ParseError> {
            Err(ParseError::new("no images", 1, col))
        }
    }

    fn vec_of(src: &str) -> Vec<RationalFunction> {
        match eval(&parse(src).unwrap(), &mut Basis3).unwrap() {
            Value::Vector(v) => v,
            Value::Scalar(s) => panic!("scalar {s}"),
        }
    }

    #[test]
    fn precedence_and_division() {
        let v = vec_of("-lambda/2*h + a*e - (a+b)^2/b*f");
        assert_eq!(v[0], RationalFunction::from_poly(Polynomial::lambda().scale(&rat(-1, 2))));
        assert_eq!(v[1], RationalFunction::var("a"));
        let ab = Polynomial::var("a") + Polynomial::var("b");
        let expected = RationalFunction::from_poly(-(ab.clone() * ab)).div_poly(&Polynomial::var("b")).unwrap();
        assert_eq!(v[2], expected);
    }

    #[test]
    fn errors_carry_columns() {
        let e = parse("a * (b + ").unwrap_err();
        assert_eq!(e.column, 10);
        let e = parse("a $ b").unwrap_err();
        assert_eq!(e.column, 3);
        let e = eval(&parse("h * e").unwrap(), &mut Basis3).unwrap_err();
        assert_eq!(e.column, 3);
        let e = eval(&parse("a + h").unwrap(), &mut Basis3).unwrap_err();
        assert!(e.message.contains("scalar and a vector"));
    }

    #[test]
    fn image_references_parse() {
        let e = parse("-(b+lambda)/a*R(e)").unwrap();
        let mut ids = Vec::new();
        identifiers(&e, &mut ids);
        assert_eq!(ids, vec!["b", "lambda", "a"]);
    }
}
