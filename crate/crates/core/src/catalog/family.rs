use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use super::expr::{self, Env, Expr, Value};
use crate::algebra::{ef_columns, linalg, AlgebraId, AlgebraSpec};
use crate::error::{CatalogError, EvalError, ParseError};
use crate::exactalg::{Field, Fp, Polynomial, Rational, RationalFunction, Scalar, Symbol};
use crate::rbcore::{check_rb, LinearOperator, RbReport};

/// One condition on the family parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum ConstraintAtom {
    NonZero(Polynomial),
    Zero(Polynomial),
    /// At least one of the polynomials is nonzero.
    AnyNonZero(Vec<Polynomial>),
}

impl ConstraintAtom {
    /// Whether the atom holds at a point, given the values of its polynomials.
    pub fn holds<S: Scalar>(&self, assignment: &HashMap<Symbol, S>) -> Result<bool, EvalError> {
        Ok(match self {
            ConstraintAtom::NonZero(p) => !p.eval(assignment)?.is_zero(),
            ConstraintAtom::Zero(p) => p.eval(assignment)?.is_zero(),
            ConstraintAtom::AnyNonZero(ps) => {
                for p in ps {
                    if !p.eval(assignment)?.is_zero() {
                        return Ok(true);
                    }
                }
                false
            }
        })
    }

    fn substitute(&self, s: &Symbol, v: &Polynomial) -> ConstraintAtom {
        match self {
            ConstraintAtom::NonZero(p) => ConstraintAtom::NonZero(p.substitute(s, v)),
            ConstraintAtom::Zero(p) => ConstraintAtom::Zero(p.substitute(s, v)),
            ConstraintAtom::AnyNonZero(ps) => {
                ConstraintAtom::AnyNonZero(ps.iter().map(|p| p.substitute(s, v)).collect())
            }
        }
    }

    fn to_json(&self) -> serde_json::Value {
        let strs = |ps: &[Polynomial]| ps.iter().map(Polynomial::to_canonical_string).collect::<Vec<_>>();
        match self {
            ConstraintAtom::NonZero(p) => serde_json::json!({"kind": "nonzero", "polys": strs(std::slice::from_ref(p))}),
            ConstraintAtom::Zero(p) => serde_json::json!({"kind": "zero", "polys": strs(std::slice::from_ref(p))}),
            ConstraintAtom::AnyNonZero(ps) => serde_json::json!({"kind": "any-nonzero", "polys": strs(ps)}),
        }
    }
}

impl fmt::Display for ConstraintAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintAtom::NonZero(p) => write!(f, "{p} != 0"),
            ConstraintAtom::Zero(p) => write!(f, "{p} = 0"),
            ConstraintAtom::AnyNonZero(ps) => {
                let parts: Vec<String> = ps.iter().map(|p| format!("{p} != 0")).collect();
                f.write_str(&parts.join(" or "))
            }
        }
    }
}

/// An atom together with how it entered the family.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub atom: ConstraintAtom,
    /// The text as transcribed, before zero atoms were substituted.
    pub text: String,
    /// Not printed with the family; forced by a denominator or by the
    /// standing assumption on the weight.
    pub implicit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    /// `phi` on `H4(-)` or `psi` on the algebra with basis `h, e, f`.
    pub automorphism: String,
    pub family: String,
}

/// Source description of a family before it is parsed.
#[derive(Debug, Clone)]
pub struct FamilyDef {
    pub id: &'static str,
    pub algebra: AlgebraId,
    pub source: &'static str,
    pub aliases: Vec<(&'static str, &'static str)>,
    /// Vectors (by label or alias) on which the images are given, when
    /// this is not the canonical basis.
    pub presentation: Option<Vec<&'static str>>,
    pub images: Vec<(&'static str, &'static str)>,
    pub constraints: Vec<&'static str>,
    pub fixes: Option<&'static str>,
    pub note: Option<&'static str>,
    pub related: Option<(&'static str, &'static str)>,
}

impl FamilyDef {
    pub fn new(id: &'static str, algebra: AlgebraId, source: &'static str) -> Self {
        FamilyDef {
            id,
            algebra,
            source,
            aliases: Vec::new(),
            presentation: None,
            images: Vec::new(),
            constraints: Vec::new(),
            fixes: None,
            note: None,
            related: None,
        }
    }

    pub fn alias(mut self, name: &'static str, expr: &'static str) -> Self {
        self.aliases.push((name, expr));
        self
    }

    pub fn on(mut self, basis: &[&'static str]) -> Self {
        self.presentation = Some(basis.to_vec());
        self
    }

    pub fn img(mut self, label: &'static str, expr: &'static str) -> Self {
        self.images.push((label, expr));
        self
    }

    /// `"p != 0"`, `"p = q"`, `"a != 0 or b != 0"`; a leading `~` marks a
    /// condition that is only implied by a denominator.
    pub fn when(mut self, c: &'static str) -> Self {
        self.constraints.push(c);
        self
    }

    pub fn fixes(mut self, original: &'static str, note: &'static str) -> Self {
        self.fixes = Some(original);
        self.note = Some(note);
        self
    }

    pub fn note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    pub fn related(mut self, automorphism: &'static str, family: &'static str) -> Self {
        self.related = Some((automorphism, family));
        self
    }
}

/// A parametric operator with its constraints.
#[derive(Debug, Clone)]
pub struct Family {
    pub(crate) id: String,
    pub(crate) algebra: AlgebraId,
    pub(crate) source: String,
    pub(crate) params: Vec<Symbol>,
    pub(crate) solved: Vec<(Symbol, Polynomial)>,
    pub(crate) matrix: LinearOperator<RationalFunction>,
    pub(crate) constraints: Vec<Constraint>,
    pub(crate) sample: Vec<(Symbol, Rational)>,
    pub(crate) fixes: Option<String>,
    pub(crate) note: Option<String>,
    pub(crate) related: Option<Relation>,
    pub(crate) fixed_by: Vec<String>,
}

/// Result of arbitrating a family symbolically.
#[derive(Debug, Clone, PartialEq)]
pub enum Verification {
    Pass(RbReport<RationalFunction>),
    Discrepancy(DiscrepancyRecord),
}

impl Verification {
    pub fn passed(&self) -> bool {
        matches!(self, Verification::Pass(_))
    }
}

/// A printed family whose Rota-Baxter residual does not vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyRecord {
    pub family: String,
    /// First failing basis pair, by label.
    pub pair: (String, String),
    /// Basis label of the first nonzero residual component.
    pub component: String,
    /// Numerator of that component in canonical text.
    pub numerator: String,
    pub failing_pairs: usize,
    pub correction: Option<String>,
    pub fixed_variants: Vec<String>,
}

impl DiscrepancyRecord {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("record serializes")
    }
}

const STANDING_WEIGHT: &str = "~lambda != 0";

fn malformed(id: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::Malformed { id: id.to_string(), reason: reason.into() }
}

fn parse_err(id: &str, what: &str, src: &str, e: ParseError) -> CatalogError {
    malformed(id, format!("{what} `{src}`: {e}"))
}

struct Builder<'a> {
    def: &'a FamilyDef,
    spec: AlgebraSpec,
    images: HashMap<String, Expr>,
    cache: HashMap<String, Value>,
    active: BTreeSet<String>,
}

impl Builder<'_> {
    fn basis_vector(&self, name: &str) -> Option<Value> {
        let label = if name == "one" { "1" } else { name };
        let i = self.spec.basis_index(label)?;
        let d = self.spec.dim();
        Some(Value::Vector(
            (0..d).map(|k| if k == i { RationalFunction::one() } else { RationalFunction::zero() }).collect(),
        ))
    }
}

impl Env for Builder<'_> {
    fn ident(&mut self, name: &str, col: usize) -> Result<Value, ParseError> {
        if let Some(v) = self.basis_vector(name) {
            return Ok(v);
        }
        if let Some((_, src)) = self.def.aliases.iter().find(|(a, _)| *a == name) {
            let e = expr::parse(src)?;
            return expr::eval(&e, self);
        }
        if name == "R" {
            return Err(ParseError::new("`R` must be applied to a label", 1, col));
        }
        Ok(Value::Scalar(RationalFunction::var(name)))
    }

    fn image(&mut self, label: &str, col: usize) -> Result<Value, ParseError> {
        if let Some(v) = self.cache.get(label) {
            return Ok(v.clone());
        }
        let e = self
            .images
            .get(label)
            .cloned()
            .ok_or_else(|| ParseError::new(format!("no image given for `{label}`"), 1, col))?;
        if !self.active.insert(label.to_string()) {
            return Err(ParseError::new(format!("image of `{label}` refers to itself"), 1, col));
        }
        let v = expr::eval(&e, self)?;
        self.active.remove(label);
        self.cache.insert(label.to_string(), v.clone());
        Ok(v)
    }
}

fn label_names(spec: &AlgebraSpec) -> Vec<String> {
    spec.basis().iter().map(|b| if b == "1" { "one".to_string() } else { b.clone() }).collect()
}

/// Parse a constraint string into an atom, with a preferred symbol to
/// solve for when it is an equation.
fn parse_constraint(
    b: &mut Builder<'_>,
    text: &str,
) -> Result<(ConstraintAtom, bool, Option<String>), CatalogError> {
    let id = b.def.id;
    let (implicit, body) = match text.strip_prefix('~') {
        Some(rest) => (true, rest.trim()),
        None => (false, text.trim()),
    };
    let mut side = |src: &str| -> Result<Polynomial, CatalogError> {
        let e = expr::parse(src).map_err(|e| parse_err(id, "constraint", text, e))?;
        match expr::eval(&e, b).map_err(|e| parse_err(id, "constraint", text, e))? {
            Value::Scalar(s) if s.is_polynomial() => Ok(s.numerator().clone()),
            _ => Err(malformed(id, format!("constraint `{text}` is not polynomial"))),
        }
    };
    let pieces: Vec<&str> = body.split(" or ").collect();
    if pieces.len() > 1 {
        let mut polys = Vec::new();
        for piece in pieces {
            let (l, r) = piece
                .split_once("!=")
                .ok_or_else(|| malformed(id, format!("disjunction `{text}` must consist of `!=` atoms")))?;
            polys.push(side(l)? - side(r)?);
        }
        return Ok((ConstraintAtom::AnyNonZero(polys), implicit, None));
    }
    if let Some((l, r)) = body.split_once("!=") {
        return Ok((ConstraintAtom::NonZero(side(l)? - side(r)?), implicit, None));
    }
    if let Some((l, r)) = body.split_once('=') {
        let target = Some(l.trim().to_string()).filter(|s| s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'));
        return Ok((ConstraintAtom::Zero(side(l)? - side(r)?), implicit, target));
    }
    Err(malformed(id, format!("constraint `{text}` has no relation")))
}

/// Invert a square matrix of rational functions, preferring constant
/// pivots.
fn invert(m: &[Vec<RationalFunction>]) -> Option<Vec<Vec<RationalFunction>>> {
    let n = m.len();
    let mut a: Vec<Vec<RationalFunction>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|k| if k == i { RationalFunction::one() } else { RationalFunction::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let candidates = (c..n).filter(|&r| !a[r][c].is_zero());
        let pivot = candidates
            .clone()
            .find(|&r| a[r][c].is_polynomial() && a[r][c].numerator().as_constant().is_some())
            .or_else(|| candidates.clone().next())?;
        a.swap(c, pivot);
        let p = a[c][c].clone();
        a[c] = a[c].iter().map(|x| x.div(&p).expect("nonzero pivot")).collect();
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let factor = a[r][c].clone();
                let pivot_row = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x = x.clone() - factor.clone() * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn small_primes() -> impl Iterator<Item = i64> {
    (2i64..).filter(|n| (2..*n).take_while(|d| d * d <= *n).all(|d| n % d != 0))
}

impl Family {
    pub fn build(def: &FamilyDef) -> Result<Family, CatalogError> {
        let id = def.id;
        let spec = def.algebra.spec();
        let labels = label_names(&spec);
        let present: Vec<String> = match &def.presentation {
            Some(p) => p.iter().map(|s| s.to_string()).collect(),
            None => labels.clone(),
        };
        if present.len() != spec.dim() {
            return Err(malformed(id, "presentation basis has the wrong length"));
        }
        let mut images = HashMap::new();
        for (label, src) in &def.images {
            if !present.iter().any(|p| p == label) {
                return Err(malformed(id, format!("image given for unknown vector `{label}`")));
            }
            let e = expr::parse(src).map_err(|e| parse_err(id, "image", src, e))?;
            if images.insert(label.to_string(), e).is_some() {
                return Err(malformed(id, format!("two images given for `{label}`")));
            }
        }
        for p in &present {
            if !images.contains_key(p) {
                return Err(malformed(id, format!("no image given for `{p}`")));
            }
        }

        // Parameters in order of first appearance.
        let mut names = Vec::new();
        let reserved = |n: &str| labels.iter().any(|l| l == n) || n == "lambda" || n == "R";
        fn scan(
            def: &FamilyDef,
            reserved: &dyn Fn(&str) -> bool,
            src: &str,
            names: &mut Vec<String>,
        ) -> Result<(), CatalogError> {
            let e = expr::parse(src).map_err(|e| parse_err(def.id, "expression", src, e))?;
            let mut ids = Vec::new();
            expr::identifiers(&e, &mut ids);
            for n in ids {
                if let Some((_, a)) = def.aliases.iter().find(|(a, _)| *a == n) {
                    scan(def, reserved, a, names)?;
                } else if !reserved(&n) && !names.contains(&n) {
                    names.push(n);
                }
            }
            Ok(())
        }
        let scan = |src: &str, names: &mut Vec<String>| scan(def, &reserved, src, names);
        for (_, src) in &def.images {
            scan(src, &mut names)?;
        }
        for p in &present {
            scan(p, &mut names)?;
        }
        for c in &def.constraints {
            let body = c.trim_start_matches('~');
            for piece in body.split(" or ") {
                for side in piece.split("!=").flat_map(|s| s.split('=')) {
                    scan(side, &mut names)?;
                }
            }
        }

        let mut b = Builder { def, spec: spec.clone(), images, cache: HashMap::new(), active: BTreeSet::new() };

        // Images on the presentation vectors, and the vectors themselves.
        let mut img_cols = Vec::new();
        let mut basis_cols = Vec::new();
        for p in &present {
            let e = expr::Expr::Image(p.clone(), 1);
            match expr::eval(&e, &mut b).map_err(|e| parse_err(id, "image of", p, e))? {
                Value::Vector(v) => img_cols.push(v),
                Value::Scalar(s) if s.is_zero() => img_cols.push(vec![RationalFunction::zero(); spec.dim()]),
                Value::Scalar(_) => return Err(malformed(id, format!("image of `{p}` is a scalar"))),
            }
            let pe = expr::parse(p).map_err(|e| parse_err(id, "basis vector", p, e))?;
            match expr::eval(&pe, &mut b).map_err(|e| parse_err(id, "basis vector", p, e))? {
                Value::Vector(v) => basis_cols.push(v),
                Value::Scalar(_) => return Err(malformed(id, format!("`{p}` is not a vector"))),
            }
        }
        let img_rows = linalg::transpose(&img_cols);
        let rows = if def.presentation.is_some() {
            let p_rows = linalg::transpose(&basis_cols);
            let inv = invert(&p_rows).ok_or_else(|| malformed(id, "presentation vectors are dependent"))?;
            linalg::matmul(&img_rows, &inv)
        } else {
            img_rows
        };

        // Constraints, with equations solved and substituted.
        let mut constraints = Vec::new();
        let mut solved: Vec<(Symbol, Polynomial)> = Vec::new();
        for text in std::iter::once(STANDING_WEIGHT).chain(def.constraints.iter().copied()) {
            let (atom, implicit, target) = parse_constraint(&mut b, text)?;
            if let ConstraintAtom::Zero(p) = &atom {
                let mut order: Vec<String> = target.into_iter().collect();
                order.extend(names.iter().cloned());
                let found = order
                    .iter()
                    .filter(|n| names.contains(n) && !solved.iter().any(|(s, _)| s.name() == n.as_str()))
                    .find_map(|n| {
                        let s = Symbol::new(n);
                        p.solve_linear_for(&s).map(|v| (s, v))
                    });
                match found {
                    Some(sol) => solved.push(sol),
                    None => return Err(malformed(id, format!("cannot solve `{text}` for a parameter"))),
                }
            }
            constraints.push(Constraint { atom, text: text.to_string(), implicit });
        }
        let mut rows = rows;
        for (s, v) in &solved {
            let rv = RationalFunction::from_poly(v.clone());
            for row in rows.iter_mut() {
                for x in row.iter_mut() {
                    *x = x.substitute(s, &rv).map_err(|_| malformed(id, format!("substituting `{s}` divides by zero")))?;
                }
            }
            for c in constraints.iter_mut() {
                c.atom = c.atom.substitute(s, v);
            }
            for (_, other) in solved.iter() {
                if other.variables().contains(s) {
                    return Err(malformed(id, "chained equations are not supported"));
                }
            }
        }
        for c in &constraints {
            let dead = match &c.atom {
                ConstraintAtom::NonZero(p) => p.is_zero(),
                ConstraintAtom::AnyNonZero(ps) => ps.iter().all(Polynomial::is_zero),
                ConstraintAtom::Zero(p) => !p.is_zero(),
            };
            if dead {
                return Err(malformed(id, format!("constraint `{}` is unsatisfiable", c.text)));
            }
        }
        let matrix = LinearOperator::from_rows(rows).expect("square");

        // Every denominator must be declared nonzero.
        let nonzero: Vec<&Polynomial> = constraints
            .iter()
            .filter_map(|c| match &c.atom {
                ConstraintAtom::NonZero(p) => Some(p),
                _ => None,
            })
            .collect();
        for row in matrix.rows() {
            for x in row {
                for f in x.denominator_factors() {
                    if !nonzero.iter().any(|p| p.div_exact(f).is_some()) {
                        return Err(malformed(id, format!("denominator `{f}` is not declared nonzero")));
                    }
                }
            }
        }

        let params: Vec<Symbol> = names
            .iter()
            .map(|n| Symbol::new(n))
            .filter(|s| !solved.iter().any(|(t, _)| t == s))
            .collect();
        let mut fam = Family {
            id: id.to_string(),
            algebra: def.algebra,
            source: def.source.to_string(),
            params,
            solved,
            matrix,
            constraints,
            sample: Vec::new(),
            fixes: def.fixes.map(str::to_string),
            note: def.note.map(str::to_string),
            related: def.related.map(|(a, f)| Relation { automorphism: a.to_string(), family: f.to_string() }),
            fixed_by: Vec::new(),
        };
        fam.sample = fam.find_sample().ok_or_else(|| malformed(id, "no sample assignment satisfies the constraints"))?;
        Ok(fam)
    }

    fn find_sample(&self) -> Option<Vec<(Symbol, Rational)>> {
        let primes: Vec<i64> = small_primes().take(self.params.len() + 8).collect();
        let n = self.params.len();
        for attempt in 0..64i64 {
            let lambda = [1, 2, 3, -1, 5][(attempt % 5) as usize];
            let shift = (attempt / 5) as usize;
            let mut vals: Vec<(Symbol, Rational)> = (0..n)
                .map(|i| {
                    let v = primes[(i + shift) % primes.len()];
                    let sign = if (attempt / 3 + i as i64) % 4 == 3 { -1 } else { 1 };
                    (self.params[i].clone(), Rational::from_integer((sign * v).into()))
                })
                .collect();
            vals.push((Symbol::lambda(), Rational::from_integer(lambda.into())));
            let map: HashMap<Symbol, Rational> = vals.iter().cloned().collect();
            if self.instantiate(&map).is_ok() {
                return Some(vals);
            }
        }
        None
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Free parameters in order of first appearance, excluding `lambda`
    /// and parameters eliminated by equations.
    pub fn params(&self) -> &[Symbol] {
        &self.params
    }

    /// Parameters fixed by equations, as polynomials in the free ones.
    pub fn solved(&self) -> &[(Symbol, Polynomial)] {
        &self.solved
    }

    pub fn matrix(&self) -> &LinearOperator<RationalFunction> {
        &self.matrix
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn sample(&self) -> HashMap<Symbol, Rational> {
        self.sample.iter().cloned().collect()
    }

    /// The printed family this one corrects, if any.
    pub fn fixes(&self) -> Option<&str> {
        self.fixes.as_deref()
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    pub fn related(&self) -> Option<&Relation> {
        self.related.as_ref()
    }

    pub fn fixed_by(&self) -> &[String] {
        &self.fixed_by
    }

    /// The family's operator carried to another algebra on the same
    /// space: `H4` families move to `H4(-)` and `H4(+)` through the basis
    /// `1, g, e, f`.
    pub fn operator_on(&self, target: AlgebraId) -> Result<LinearOperator<RationalFunction>, CatalogError> {
        if target == self.algebra {
            return Ok(self.matrix.clone());
        }
        match (self.algebra, target) {
            (AlgebraId::H4, AlgebraId::H4Minus | AlgebraId::H4Plus) => {
                let p = ef_columns();
                let p_rows = linalg::transpose(&p);
                let p_inv = linalg::inverse(&p_rows).expect("basis change is invertible");
                let lift = |m: &[Vec<Rational>]| -> Vec<Vec<RationalFunction>> {
                    m.iter().map(|r| r.iter().cloned().map(RationalFunction::constant).collect()).collect()
                };
                let rows = linalg::matmul(&linalg::matmul(&lift(&p_inv), self.matrix.rows()), &lift(&p_rows));
                Ok(LinearOperator::from_rows(rows).expect("square"))
            }
            _ => Err(malformed(&self.id, format!("cannot carry a {} family to {target}", self.algebra))),
        }
    }

    /// Symbolic Rota-Baxter check on another algebra of the same space.
    pub fn check_on(&self, target: AlgebraId) -> Result<RbReport<RationalFunction>, CatalogError> {
        let r = self.operator_on(target)?;
        Ok(check_rb(&target.spec(), &r, &RationalFunction::lambda())?)
    }

    /// Decide the family over the field of rational functions.
    pub fn verify_symbolic(&self) -> Result<Verification, CatalogError> {
        let report = self.check_on(self.algebra)?;
        if report.passed() {
            return Ok(Verification::Pass(report));
        }
        let spec = self.algebra.spec();
        let first = &report.residuals[0];
        let k = first.residual.iter().position(|x| !x.is_zero()).expect("failing pair has a nonzero component");
        let basis = spec.basis();
        Ok(Verification::Discrepancy(DiscrepancyRecord {
            family: self.id.clone(),
            pair: (basis[first.pair.0].clone(), basis[first.pair.1].clone()),
            component: basis[k].clone(),
            numerator: first.residual[k].numerator().to_canonical_string(),
            failing_pairs: report.residuals.len(),
            correction: None,
            fixed_variants: self.fixed_by.clone(),
        }))
    }

    /// Evaluate the family at an assignment of its parameters and `lambda`.
    pub fn instantiate<S: Field>(&self, assignment: &HashMap<Symbol, S>) -> Result<LinearOperator<S>, CatalogError> {
        let mut full = assignment.clone();
        for (s, p) in &self.solved {
            let v = p.eval(&full)?;
            if let Some(given) = assignment.get(s) {
                if *given != v {
                    return Err(CatalogError::ConstraintViolation(format!("{s} = {p}")));
                }
            }
            full.insert(s.clone(), v);
        }
        for c in &self.constraints {
            if !c.atom.holds(&full)? {
                return Err(CatalogError::ConstraintViolation(c.atom.to_string()));
            }
        }
        let mut rows = Vec::with_capacity(self.matrix.dim());
        for row in self.matrix.rows() {
            let mut out = Vec::with_capacity(row.len());
            for x in row {
                out.push(x.eval(&full)?);
            }
            rows.push(out);
        }
        Ok(LinearOperator::from_rows(rows).expect("square"))
    }

    fn check_bound(&self, bound: usize) -> Result<(), CatalogError> {
        if self.params.len() > bound {
            return Err(CatalogError::TooManyParameters { id: self.id.clone(), count: self.params.len(), bound });
        }
        Ok(())
    }

    /// Every assignment of the free parameters over `F_P`, in
    /// lexicographic order of values along [`Family::params`].
    pub fn assignments<const P: u32>(&self, lambda: Fp<P>) -> impl Iterator<Item = HashMap<Symbol, Fp<P>>> + '_ {
        let n = self.params.len();
        let total = (P as u64).pow(n as u32);
        (0..total).map(move |mut code| {
            let mut vals = vec![0u32; n];
            for v in vals.iter_mut().rev() {
                *v = (code % P as u64) as u32;
                code /= P as u64;
            }
            let mut m: HashMap<Symbol, Fp<P>> =
                self.params.iter().cloned().zip(vals.into_iter().map(|v| Fp::new(v as i64))).collect();
            m.insert(Symbol::lambda(), lambda);
            m
        })
    }

    /// All distinct operators the family produces over `F_P`, sorted.
    pub fn enumerate_instances<const P: u32>(
        &self,
        lambda: Fp<P>,
        bound: usize,
    ) -> Result<Vec<LinearOperator<Fp<P>>>, CatalogError> {
        self.check_bound(bound)?;
        let set: BTreeSet<LinearOperator<Fp<P>>> =
            self.assignments(lambda).filter_map(|a| self.instantiate(&a).ok()).collect();
        Ok(set.into_iter().collect())
    }

    /// First assignment (in the order of [`Family::assignments`]) whose
    /// instance equals `m`.
    pub fn membership<const P: u32>(
        &self,
        m: &LinearOperator<Fp<P>>,
        lambda: Fp<P>,
        bound: usize,
    ) -> Result<Option<HashMap<Symbol, Fp<P>>>, CatalogError> {
        self.check_bound(bound)?;
        Ok(self.assignments(lambda).find(|a| self.instantiate(a).is_ok_and(|r| &r == m)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let sym = |s: &Symbol| s.name().to_string();
        serde_json::json!({
            "id": self.id,
            "algebra": self.algebra,
            "source": self.source,
            "params": self.params.iter().map(sym).collect::<Vec<_>>(),
            "solved": self.solved.iter().map(|(s, p)| serde_json::json!({"param": sym(s), "value": p.to_canonical_string()})).collect::<Vec<_>>(),
            "matrix": self.matrix.to_strings(),
            "constraints": self.constraints.iter().map(|c| {
                let mut v = c.atom.to_json();
                v["text"] = serde_json::json!(c.text.trim_start_matches('~'));
                v["implicit"] = serde_json::json!(c.implicit);
                v
            }).collect::<Vec<_>>(),
            "sample": self.sample.iter().map(|(s, q)| (sym(s), serde_json::json!(crate::exactalg::format_rational(q)))).collect::<serde_json::Map<_, _>>(),
            "fixes": self.fixes,
            "note": self.note,
            "related": self.related,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn lm2_def() -> FamilyDef {
        FamilyDef::new("t.1.10", AlgebraId::Lm2, "test")
            .img("h", "-lambda/2*h + beta1*e + gamma1*f")
            .img("e", "beta2*e + gamma2*f")
            .img("f", "beta2*(beta2+lambda)/gamma2*e + beta2*f")
            .when("beta2 != 0")
            .when("beta2 + lambda != 0")
            .when("gamma2 != 0")
    }

    #[test]
    fn params_follow_first_appearance() {
        let f = Family::build(&lm2_def()).unwrap();
        let names: Vec<&str> = f.params().iter().map(Symbol::name).collect();
        assert_eq!(names, ["beta1", "gamma1", "beta2", "gamma2"]);
        assert!(f.verify_symbolic().unwrap().passed());
    }

    #[test]
    fn undeclared_denominator_is_malformed() {
        let mut d = lm2_def();
        d.constraints.retain(|c| !c.starts_with("gamma2"));
        let err = Family::build(&d).unwrap_err();
        assert!(matches!(err, CatalogError::Malformed { ref reason, .. } if reason.contains("gamma2")), "{err}");
    }

    #[test]
    fn equations_are_solved_and_checked() {
        let d = FamilyDef::new("t.eq", AlgebraId::Lm3, "test")
            .img("h", "beta1*y + gamma1*z")
            .img("y", "-lambda*y + gamma2*z")
            .img("z", "alpha3*h + alpha3*beta1/lambda*y + gamma3*z")
            .when("gamma2 = 0");
        let f = Family::build(&d).unwrap();
        assert_eq!(f.solved().len(), 1);
        assert!(!f.params().iter().any(|s| s.name() == "gamma2"));
        assert!(f.verify_symbolic().unwrap().passed());
        let mut a: HashMap<Symbol, Rational> = f.sample();
        a.insert(Symbol::new("gamma2"), int(1));
        assert!(matches!(f.instantiate(&a), Err(CatalogError::ConstraintViolation(_))));
    }

    #[test]
    fn presentation_basis_is_inverted() {
        // R(1) = 0, R(h) = h with h = alpha 1 + g, R(e) = R(f) = 0 means
        // R(g) = alpha 1 + g.
        let d = FamilyDef::new("t.p", AlgebraId::H4Minus, "test")
            .alias("h", "alpha*one + g")
            .on(&["one", "h", "e", "f"])
            .img("one", "0")
            .img("h", "h")
            .img("e", "0")
            .img("f", "0");
        let f = Family::build(&d).unwrap();
        assert_eq!(f.matrix().column(1), vec![RationalFunction::var("alpha"), RationalFunction::one(), RationalFunction::zero(), RationalFunction::zero()]);
        assert!(f.matrix().column(0).iter().all(RationalFunction::is_zero));
    }

    #[test]
    fn image_references_resolve() {
        let d = FamilyDef::new("t.ref", AlgebraId::Lm2, "test")
            .img("h", "-(beta2+lambda)/alpha2*R(e)")
            .img("e", "alpha2*h + beta2*e + gamma2*f")
            .img("f", "0")
            .when("~alpha2 != 0");
        let f = Family::build(&d).unwrap();
        assert!(f.verify_symbolic().unwrap().passed());
        assert!(f.constraints()[1].implicit);
        let cyclic = FamilyDef::new("t.cyc", AlgebraId::Lm2, "test").img("h", "R(e)").img("e", "R(h)").img("f", "0");
        assert!(Family::build(&cyclic).is_err());
    }

    #[test]
    fn instantiate_reports_the_violated_atom() {
        let f = Family::build(&lm2_def()).unwrap();
        let mut a = f.sample();
        a.insert(Symbol::new("beta2"), int(0));
        match f.instantiate(&a) {
            Err(CatalogError::ConstraintViolation(s)) => assert_eq!(s, "beta2 != 0"),
            other => panic!("{other:?}"),
        }
        let mut a = f.sample();
        a.insert(Symbol::lambda(), int(0));
        assert!(matches!(f.instantiate(&a), Err(CatalogError::ConstraintViolation(s)) if s == "lambda != 0"));
    }
}
