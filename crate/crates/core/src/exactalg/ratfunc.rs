//! Rational functions with denominators kept as products of factors.
//!
//! There is no multivariate gcd. A denominator is a sorted list of monic,
//! non-constant polynomial factors that the surrounding constraint context
//! declares nonzero. After every operation each factor that divides the
//! numerator exactly is cancelled; equality is decided by cross
//! multiplication, so leftover common factors never affect correctness.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{Polynomial, Symbol};
use super::scalar::{Field, Scalar};
use super::Rational;
use crate::error::EvalError;

#[derive(Clone, Default)]
pub struct RationalFunction {
    num: Polynomial,
    den: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("division by the zero polynomial")]
pub struct DivisionByZero;

impl RationalFunction {
    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Vec::new() }
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(Polynomial::var(name))
    }

    pub fn lambda() -> Self {
        Self::from_poly(Polynomial::lambda())
    }

    pub fn constant(q: Rational) -> Self {
        Self::from_poly(Polynomial::constant(q))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    /// Denominator factors (monic, non-constant); empty means `1`.
    pub fn denominator_factors(&self) -> &[Polynomial] {
        &self.den
    }

    pub fn denominator(&self) -> Polynomial {
        self.den.iter().fold(Polynomial::one(), |acc, d| acc * d.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Divide by a polynomial the caller knows to be nonzero.
    pub fn div_poly(&self, d: &Polynomial) -> Result<Self, DivisionByZero> {
        if d.is_zero() {
            return Err(DivisionByZero);
        }
        let (c, monic) = d.monic();
        let mut out = self.clone();
        out.num = out.num.scale(&c.recip());
        if monic.as_constant().is_none() {
            out.den.push(monic);
            out.den.sort();
        }
        out.cancel();
        Ok(out)
    }

    /// Divide by a rational function whose numerator is declared nonzero.
    pub fn div(&self, other: &RationalFunction) -> Result<Self, DivisionByZero> {
        let mut out = self.div_poly(&other.num)?;
        for f in &other.den {
            out.num = out.num * f.clone();
        }
        out.cancel();
        Ok(out)
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut kept = Vec::with_capacity(self.den.len());
        for f in std::mem::take(&mut self.den) {
            match self.num.div_exact(&f) {
                Some(q) => self.num = q,
                None => kept.push(f),
            }
        }
        self.den = kept;
    }

    pub fn eval<S: Field>(&self, assignment: &HashMap<Symbol, S>) -> Result<S, EvalError> {
        let n = self.num.eval(assignment)?;
        let mut d = S::one();
        for f in &self.den {
            let v = f.eval(assignment)?;
            if v.is_zero() {
                return Err(EvalError::ZeroDenominator(f.to_string()));
            }
            d = d * v;
        }
        Ok(n.div(&d).expect("nonzero denominator"))
    }

    /// Replace `s` by `value` everywhere.
    pub fn substitute(&self, s: &Symbol, value: &RationalFunction) -> Result<Self, DivisionByZero> {
        let num = subst_poly(&self.num, s, value);
        let mut out = num;
        for f in &self.den {
            out = out.div(&subst_poly(f, s, value))?;
        }
        Ok(out)
    }

    pub fn variables(&self) -> Vec<Symbol> {
        let mut v = self.num.variables();
        for f in &self.den {
            v.extend(f.variables());
        }
        v.sort();
        v.dedup();
        v
    }
}

fn subst_poly(p: &Polynomial, s: &Symbol, value: &RationalFunction) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for (m, c) in p.terms() {
        let mut t = RationalFunction::constant(c.clone());
        for (sym, e) in m.factors() {
            let base = if sym == s { value.clone() } else { RationalFunction::from_poly(Polynomial::var(sym.name())) };
            t = t * super::scalar::pow(&base, *e);
        }
        acc = acc + t;
    }
    acc
}

/// Multiset union of two sorted factor lists.
fn lcm_factors(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let mut out = a.to_vec();
    let mut used = vec![false; a.len()];
    for f in b {
        match a.iter().enumerate().position(|(i, g)| !used[i] && g == f) {
            Some(i) => used[i] = true,
            None => out.push(f.clone()),
        }
    }
    out.sort();
    out
}

/// Product of the factors of `full` left after removing `part`.
fn cofactor(full: &[Polynomial], part: &[Polynomial]) -> Polynomial {
    let mut used = vec![false; part.len()];
    let mut acc = Polynomial::one();
    for f in full {
        match part.iter().enumerate().position(|(i, g)| !used[i] && g == f) {
            Some(i) => used[i] = true,
            None => acc = acc * f.clone(),
        }
    }
    acc
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, other: RationalFunction) -> RationalFunction {
        if self.den == other.den {
            let mut out = RationalFunction { num: self.num + other.num, den: self.den };
            out.cancel();
            return out;
        }
        let den = lcm_factors(&self.den, &other.den);
        let num = self.num * cofactor(&den, &self.den) + other.num * cofactor(&den, &other.den);
        let mut out = RationalFunction { num, den };
        out.cancel();
        out
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, other: RationalFunction) -> RationalFunction {
        self + (-other)
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, other: RationalFunction) -> RationalFunction {
        if self.num.is_zero() || other.num.is_zero() {
            return RationalFunction::zero();
        }
        let mut den = self.den;
        den.extend(other.den);
        den.sort();
        let mut out = RationalFunction { num: self.num * other.num, den };
        out.cancel();
        out
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.clone() * other.denominator() == other.num.clone() * self.denominator()
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational(q: &Rational) -> Option<Self> {
        Some(Self::constant(q.clone()))
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

fn paren(p: &Polynomial) -> String {
    if p.num_terms() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let den: Vec<String> = self.den.iter().map(paren).collect();
        let den = if den.len() == 1 { den[0].clone() } else { format!("({})", den.join("*")) };
        write!(f, "{}/{}", paren(&self.num), den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn v(s: &str) -> RationalFunction {
        RationalFunction::var(s)
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::var(s)
    }

    #[test]
    fn opposite_fractions_cancel() {
        let a = v("a").div_poly(&p("b")).unwrap();
        let b = (-v("a")).div_poly(&p("b")).unwrap();
        let s = a + b;
        assert!(s.is_zero());
        assert_eq!(s, RationalFunction::zero());
    }

    #[test]
    fn syntactic_cancellation() {
        let x = (v("beta2") + RationalFunction::lambda()).div_poly(&p("gamma2")).unwrap();
        let y = x * v("gamma2");
        assert!(y.is_polynomial());
        assert_eq!(y.to_string(), "beta2 + lambda");
    }

    #[test]
    fn cancellation_of_family_entry() {
        // gamma2^{-1} * beta2 * (beta2 + lambda), times gamma2
        let e = (v("beta2") * (v("beta2") + RationalFunction::lambda()))
            .div_poly(&p("gamma2"))
            .unwrap();
        let y = e * v("gamma2");
        assert!(y.is_polynomial());
        assert_eq!(y, v("beta2") * (v("beta2") + RationalFunction::lambda()));
    }

    #[test]
    fn relation_vanishes_after_substitution() {
        let l = RationalFunction::lambda();
        let rel = (v("beta2") + l.clone()) * v("beta2") - v("gamma2") * v("beta3");
        let b3 = (v("beta2") * (v("beta2") + l)).div_poly(&p("gamma2")).unwrap();
        let r = rel.substitute(&Symbol::new("beta3"), &b3).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn zero_tests() {
        assert!(RationalFunction::zero().div_poly(&p("gamma2")).unwrap().is_zero());
        assert!(!(v("beta2") + RationalFunction::lambda()).is_zero());
        let a = (v("beta2") + RationalFunction::lambda())
            .div_poly(&p("alpha2"))
            .unwrap()
            * v("beta2");
        // same value written with a redundant common factor
        let cleared = (v("beta2") * (v("beta2") + RationalFunction::lambda()) * v("xi"))
            .div_poly(&(p("alpha2") * p("xi")))
            .unwrap();
        assert_eq!(a, cleared);
    }

    #[test]
    fn division_by_zero_polynomial() {
        assert_eq!(v("a").div_poly(&Polynomial::zero()), Err(DivisionByZero));
    }

    #[test]
    fn constant_denominator_folds() {
        let h = v("a").div_poly(&Polynomial::constant(rat(2, 1))).unwrap();
        assert!(h.is_polynomial());
        assert_eq!(h.to_string(), "1/2*a");
    }

    #[test]
    fn evaluation_reports_zero_denominator() {
        let x = v("a").div_poly(&(p("b") + Polynomial::lambda())).unwrap();
        let mut asg = HashMap::new();
        asg.insert(Symbol::new("a"), rat(1, 1));
        asg.insert(Symbol::new("b"), rat(-1, 1));
        asg.insert(Symbol::lambda(), rat(1, 1));
        assert!(matches!(x.eval(&asg), Err(EvalError::ZeroDenominator(_))));
        asg.insert(Symbol::new("b"), rat(1, 1));
        assert_eq!(x.eval(&asg).unwrap(), rat(1, 2));
    }
}
