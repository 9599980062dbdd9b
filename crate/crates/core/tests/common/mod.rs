//! Property checks shared by the property suite and the acceptance run.
//! Each check draws its cases from a fixed-seed runner, so a run is
//! reproducible.

use std::collections::HashMap;
use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use sweedler_rb::algebra::{h4_minus, lm2, phi, psi, unit, Subspace};
use sweedler_rb::exactalg::{int, rat};
use sweedler_rb::rbcore::{conjugate, rb_residual_vectors};
use sweedler_rb::search::{enumerate_all, scale_operators};
use sweedler_rb::{check_rb, AlgebraId, Catalog, Family, Fp, LinearOperator, Rational, Scalar, SearchConfig, Symbol};

pub const CASES: u32 = 100;

pub fn verified() -> &'static [&'static Family] {
    static V: OnceLock<Vec<&'static Family>> = OnceLock::new();
    V.get_or_init(|| {
        let c = Catalog::builtin();
        let ok: Vec<String> =
            c.verify_all().unwrap().into_iter().filter(|(_, v)| v.passed()).map(|(id, _)| id).collect();
        c.families().iter().filter(|f| ok.iter().any(|id| id == f.id())).collect()
    })
}

fn verified_on(a: AlgebraId) -> Vec<&'static Family> {
    verified().iter().copied().filter(|f| f.algebra() == a).collect()
}

/// Instantiate `f` near the given integer values, falling back to the
/// stored sample point when no nearby point satisfies the constraints.
fn instance(f: &Family, values: &[i64], den: i64, lambda: Rational) -> (LinearOperator<Rational>, Rational) {
    for shift in 0..40i64 {
        let mut a: HashMap<Symbol, Rational> = f
            .params()
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), rat(values[i % values.len()] + shift * (i as i64 + 1), den)))
            .collect();
        a.insert(Symbol::lambda(), lambda.clone());
        if let Ok(r) = f.instantiate(&a) {
            return (r, lambda);
        }
    }
    let sample = f.sample();
    let l = sample[&Symbol::lambda()].clone();
    (f.instantiate(&sample).expect("sample instantiates"), l)
}

fn nonzero() -> impl Strategy<Value = Rational> {
    (prop_oneof![-3i64..=-1, 1i64..=3], 1i64..=2).prop_map(|(n, d)| rat(n, d))
}

fn vector(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d)), dim)
}

/// A verified family (drawn from `pool`) at a random parameter point.
fn operator(
    pool: Vec<&'static Family>,
) -> impl Strategy<Value = (&'static Family, LinearOperator<Rational>, Rational)> {
    (any::<prop::sample::Index>(), prop::collection::vec(-5i64..=5, 12), 1i64..=3, nonzero()).prop_map(
        move |(k, vals, den, l)| {
            let f = *k.get(&pool);
            let (r, l) = instance(f, &vals, den, l);
            (f, r, l)
        },
    )
}

fn runner() -> TestRunner {
    TestRunner::new_with_rng(Config::with_cases(CASES), TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner().run(&strategy, test).map_err(|e| e.to_string())
}

fn product(f: &Family, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    f.algebra().spec().multiply(a, b).unwrap()
}

/// Zero residuals on basis pairs imply zero residuals on arbitrary vectors.
pub fn bilinearity() -> Result<(), String> {
    run((operator(verified().to_vec()), vector(4), vector(4)), |((f, r, l), a, b)| {
        let spec = f.algebra().spec();
        let d = spec.dim();
        let t = spec.table::<Rational>().unwrap();
        let res = rb_residual_vectors(&t, &r, &l, &a[..d], &b[..d]).unwrap();
        prop_assert!(res.iter().all(|x| x.is_zero()), "{}: {:?}", f.id(), res);
        Ok(())
    })
}

pub fn kernel_and_image_subalgebras() -> Result<(), String> {
    run(operator(verified().to_vec()), |(f, r, _)| {
        let d = r.dim();
        let ker = r.kernel_basis();
        for u in ker.basis() {
            for v in ker.basis() {
                prop_assert!(ker.contains(&product(f, u, v)), "{}", f.id());
            }
        }
        let im = r.image_basis();
        for i in 0..d {
            for j in 0..d {
                prop_assert!(im.contains(&product(f, &r.column(i), &r.column(j))), "{}", f.id());
            }
        }
        Ok(())
    })
}

/// `[R(a) + lambda a, v]` lies in `ker R` and in `ker R ∩ span(e, f)`.
pub fn kernel_conditions() -> Result<(), String> {
    run(operator(verified_on(AlgebraId::H4Minus)), |(f, r, l)| {
        let spec = h4_minus();
        let ker = r.kernel_basis();
        let k_ideal = Subspace::span(4, &[unit::<Rational>(4, 2), unit(4, 3)]);
        let refined = ker.intersection(&k_ideal);
        for i in 0..4 {
            let shifted: Vec<Rational> =
                r.column(i).into_iter().zip(unit::<Rational>(4, i)).map(|(x, e)| x + l.clone() * e).collect();
            for v in ker.basis() {
                let br = spec.multiply(&shifted, v).unwrap();
                prop_assert!(ker.contains(&br), "{}", f.id());
                prop_assert!(refined.contains(&br), "{}", f.id());
            }
        }
        Ok(())
    })
}

pub fn conjugation_invariance() -> Result<(), String> {
    let mut pool = verified_on(AlgebraId::H4Minus);
    pool.extend(verified_on(AlgebraId::Lm2));
    run(operator(pool), |(f, r, l)| {
        let c = match f.algebra() {
            AlgebraId::H4Minus => conjugate(&r, &phi()),
            _ => conjugate(&r, &psi()),
        };
        prop_assert!(check_rb(&f.algebra().spec(), &c, &l).unwrap().passed(), "{}", f.id());
        Ok(())
    })
}

/// The verdict is the same on a spec whose product is scaled by `c`, for
/// verified operators and for perturbed ones.
pub fn product_scaling() -> Result<(), String> {
    let noise = prop::collection::vec(-1i64..=1, 16);
    run((operator(verified().to_vec()), nonzero(), noise), |((f, r, l), c, noise)| {
        let spec = f.algebra().spec();
        let scaled = spec.scaled(&c);
        prop_assert!(check_rb(&scaled, &r, &l).unwrap().passed());
        let d = r.dim();
        let mut m = r.clone();
        for (n, x) in noise.iter().enumerate().take(d * d) {
            let (i, j) = (n / d, n % d);
            m.set(i, j, m.entry(i, j).clone() + int(*x));
        }
        prop_assert_eq!(check_rb(&spec, &m, &l).unwrap().passed(), check_rb(&scaled, &m, &l).unwrap().passed());
        Ok(())
    })
}

/// `R -> 2R` maps the weight 1 scan onto the weight 2 scan over `F_3`.
pub fn weight_scaling() -> Result<(), String> {
    let cfg = SearchConfig::default();
    for spec in [lm2(), h4_minus()] {
        let one = enumerate_all(&spec, Fp::<3>::new(1), &cfg).map_err(|e| e.to_string())?;
        let two = enumerate_all(&spec, Fp::<3>::new(2), &cfg).map_err(|e| e.to_string())?;
        if scale_operators(&one, &Fp::new(2)) != two {
            return Err(format!("{}: {} vs {} operators, sets differ", spec.name(), one.len(), two.len()));
        }
    }
    Ok(())
}
