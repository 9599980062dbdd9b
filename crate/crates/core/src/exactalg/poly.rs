//! Sparse multivariate polynomials with rational coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;


use super::rational::{format_rational, is_negative};
use super::scalar::{pow, Scalar};
use super::Rational;
use crate::error::EvalError;

/// Name of the weight variable. It sorts after every other symbol.
pub const LAMBDA: &str = "lambda";

/// A globally named polynomial variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn lambda() -> Self {
        Symbol::new(LAMBDA)
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn is_lambda(&self) -> bool {
        &*self.0 == LAMBDA
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.is_lambda(), &*self.0).cmp(&(other.is_lambda(), &*other.0))
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

/// Power product of symbols; factors sorted by symbol, exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn exponent(&self, s: &Symbol) -> u32 {
        self.0.iter().find(|(t, _)| t == s).map_or(0, |(_, e)| *e)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (s, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < *s {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == *s {
                let d = other.0[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((s.clone(), e - d)),
                }
            } else {
                out.push((s.clone(), *e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    /// Split off the power of `s`.
    fn without(&self, s: &Symbol) -> (u32, Monomial) {
        let e = self.exponent(s);
        let rest = self.0.iter().filter(|(t, _)| t != s).cloned().collect();
        (e, Monomial(rest))
    }
}

/// Lexicographic order with respect to the symbol order: the first symbol
/// whose exponents differ decides, and the larger exponent is the larger
/// monomial. This is a monomial order, which exact division relies on.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((s, e)), Some((t, d))) => match s.cmp(t) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if e != d {
                            return e.cmp(d);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial over `Q`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn var(name: &str) -> Self {
        Polynomial::monomial(Monomial::var(Symbol::new(name)), Rational::one())
    }

    pub fn lambda() -> Self {
        Polynomial::var(LAMBDA)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Ordered variable table of the symbols that occur.
    pub fn variables(&self) -> Vec<Symbol> {
        let set: BTreeSet<Symbol> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(s, _)| s.clone()))
            .collect();
        set.into_iter().collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        pow(self, e)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.leading_term()?;
        let mut rem = self.clone();
        let mut q = Polynomial::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let tm = rm.div(dm)?;
            let tc = rc / dc;
            let t = Polynomial::monomial(tm, tc);
            rem = rem - t.clone() * d.clone();
            q = q + t;
        }
        Some(q)
    }

    /// Evaluate at an assignment of every occurring symbol.
    pub fn eval<S: Scalar>(&self, assignment: &HashMap<Symbol, S>) -> Result<S, EvalError> {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = S::from_rational(c).ok_or_else(|| EvalError::Coefficient(format_rational(c)))?;
            for (s, e) in &m.0 {
                let v = assignment
                    .get(s)
                    .ok_or_else(|| EvalError::MissingSymbol(s.name().to_string()))?;
                t = t * pow(v, *e);
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Replace `s` by the polynomial `value`.
    pub fn substitute(&self, s: &Symbol, value: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.without(s);
            let t = Polynomial::monomial(rest, c.clone());
            out = out + if e == 0 { t } else { t * value.pow(e) };
        }
        out
    }

    /// Write `self = a * s + b` when `self` has degree one in `s` and `a`
    /// is a nonzero rational constant.
    pub fn solve_linear_for(&self, s: &Symbol) -> Option<Polynomial> {
        let mut a = Polynomial::zero();
        let mut b = Polynomial::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.without(s);
            match e {
                0 => b.add_term(rest, c.clone()),
                1 => a.add_term(rest, c.clone()),
                _ => return None,
            }
        }
        let a = a.as_constant().filter(|a| !a.is_zero())?;
        Some(b.scale(&(-a.recip())))
    }

    /// Canonical text: monomials in decreasing order, explicit `*` and `^`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    /// Normalise so that the leading coefficient is one; returns the
    /// removed scalar.
    pub fn monic(&self) -> (Rational, Polynomial) {
        match self.leading_term() {
            None => (Rational::one(), Polynomial::zero()),
            Some((_, c)) => {
                let c = c.clone();
                (c.clone(), self.scale(&c.recip()))
            }
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = is_negative(c);
            let a = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&format_rational(&a))?;
            } else if a == Rational::one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, other: Polynomial) -> Polynomial {
        for (m, c) in other.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, other: Polynomial) -> Polynomial {
        for (m, c) in other.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, other: Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Scalar for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(q: &Rational) -> Option<Self> {
        Some(Polynomial::constant(q.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Fp};

    fn v(s: &str) -> Polynomial {
        Polynomial::var(s)
    }

    fn c(n: i64) -> Polynomial {
        Polynomial::constant(rat(n, 1))
    }

    #[test]
    fn difference_of_squares() {
        let x = v("x");
        let p = (x.clone() + c(1)) * (x.clone() - c(1));
        assert_eq!(p, x.pow(2) - c(1));
        assert_eq!(p.to_string(), "x^2 - 1");
    }

    #[test]
    fn free_symbols_stay_nonzero() {
        let (b2, b3, g2, l) = (v("beta2"), v("beta3"), v("gamma2"), Polynomial::lambda());
        let p = (b2.clone() + l.clone()) * b2.clone() - g2 * b3;
        assert!(!p.is_zero());
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "beta2^2 + beta2*lambda - beta3*gamma2");
    }

    #[test]
    fn substitution() {
        // (a + b)^2 with b := a - 1
        let p = (v("a") + v("b")).pow(2);
        let q = p.substitute(&Symbol::new("b"), &(v("a") - c(1)));
        assert_eq!(q, (v("a").scale(&rat(2, 1)) - c(1)).pow(2));
    }

    #[test]
    fn lambda_sorts_last() {
        let mut syms = [Symbol::new("lambda"), Symbol::new("zeta"), Symbol::new("alpha")];
        syms.sort();
        assert_eq!(syms.last().unwrap().name(), "lambda");
    }

    #[test]
    fn exact_division() {
        let (a, b, l) = (v("a"), v("b"), Polynomial::lambda());
        let p = (a.clone() + l.clone()) * (b.clone() - a.clone() * l.clone()) * c(3);
        assert_eq!(p.div_exact(&(a.clone() + l.clone())).unwrap(), (b.clone() - a.clone() * l) * c(3));
        assert!(p.div_exact(&(a + b)).is_none());
    }

    #[test]
    fn evaluation() {
        let l = Polynomial::lambda();
        let mut asg = HashMap::new();
        asg.insert(Symbol::lambda(), rat(1, 2));
        assert_eq!(l.pow(2).eval(&asg).unwrap(), rat(1, 4));

        let b2 = v("beta2");
        let p = (b2.clone() + l) * b2;
        let mut asg = HashMap::new();
        asg.insert(Symbol::lambda(), rat(1, 1));
        asg.insert(Symbol::new("beta2"), rat(-1, 1));
        assert_eq!(p.eval(&asg).unwrap(), rat(0, 1));

        let two_beta = v("beta").scale(&rat(2, 1));
        let mut asg = HashMap::new();
        asg.insert(Symbol::new("beta"), Fp::<3>::new(2));
        assert_eq!(two_beta.eval(&asg).unwrap(), Fp::new(1));
    }

    #[test]
    fn missing_symbol_is_named() {
        let p = v("xi") + v("mu");
        let mut asg = HashMap::new();
        asg.insert(Symbol::new("xi"), rat(1, 1));
        match p.eval(&asg) {
            Err(EvalError::MissingSymbol(s)) => assert_eq!(s, "mu"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn solve_linear() {
        let p = v("alpha2") - v("xi") * v("alpha1");
        let s = p.solve_linear_for(&Symbol::new("alpha2")).unwrap();
        assert_eq!(s, v("xi") * v("alpha1"));
        assert!((v("a") * v("b")).solve_linear_for(&Symbol::new("a")).is_none());
    }
}
