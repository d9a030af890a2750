//! Seeded property suites shared by the `properties` and `acceptance`
//! targets. Each suite returns `Err` with the shrunk counterexample.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use noc::exactalg::rational::int;
use noc::exactalg::{Poly, Rational, VarTable};
use noc::hierarchy::{build_hierarchy, build_hierarchy_over};
use noc::orbitdata::{chern_table, Dataset};
use noc::resolver::{class_amu, Mu};
use noc::symfun::{RootContext, SchurCombo};
use noc::thom::{localize, localize_roots, symmetry_violations};

pub fn runner(cases: u32, seed: u8) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..10, 1i64..5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly_in(t: std::sync::Arc<VarTable>, max_exp: u32) -> impl Strategy<Value = Poly> {
    let n = t.len();
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), rational()), 0..6).prop_map(move |terms| {
        terms.into_iter().fold(Poly::zero(&t), |acc, (e, c)| &acc + &Poly::monomial(&t, &e, c))
    })
}

fn check(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

pub fn ring_axioms(cases: u32) -> Result<(), String> {
    let t = VarTable::uniform(&["x", "y", "z"]);
    let p = || poly_in(t.clone(), 3);
    runner(cases, 1)
        .run(&(p(), p(), p(), rational()), |(a, b, c, k)| {
            check(&(&a + &b) + &c == &a + &(&b + &c), "addition is associative")?;
            check(&a + &b == &b + &a, "addition is commutative")?;
            check(&(&a * &b) * &c == &a * &(&b * &c), "multiplication is associative")?;
            check(&a * &b == &b * &a, "multiplication is commutative")?;
            check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity")?;
            check(&(&a - &a) == &Poly::zero(&t), "a - a = 0")?;
            check(&a * &Poly::one(&t) == a, "unit")?;
            check((&a * &b).scale(&k) == &a.scale(&k) * &b, "scalars commute")?;
            if !b.is_zero() {
                check((&a * &b).div_exact(&b).unwrap() == Some(a.clone()), "exact division undoes products")?;
            }
            let pt = [int(2), Rational::new((-1).into(), 3.into()), int(5)];
            check((&a * &b).eval(&pt) == a.eval(&pt) * b.eval(&pt), "evaluation is a homomorphism")?;
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn schur_round_trips(cases: u32) -> Result<(), String> {
    let ctx = RootContext::new(3, 3).unwrap();
    let strategy = (2u32..8, prop::collection::vec(-4i64..5, 40));
    runner(cases, 2)
        .run(&strategy, |(d, coefs)| {
            let parts = ctx.hook_partitions(d);
            let combo = SchurCombo::from_terms(parts.into_iter().zip(coefs.into_iter().map(int))).unwrap();
            let elem = ctx.combo_to_elem(&combo);
            check(ctx.expand_elem(&elem).unwrap() == combo, "elementary round trip")?;
            if combo.len() <= 3 {
                let roots = ctx.to_roots(&elem).unwrap();
                check(ctx.schur_expand(&roots).unwrap() == combo, "root round trip")?;
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// A random class of degree 1 or 2 in the Chern generators.
fn chern_class() -> impl Strategy<Value = Poly> {
    let t = chern_table().clone();
    (1u32..3, prop::collection::vec(-3i64..4, 5)).prop_map(move |(d, c)| {
        let v = |n: &str| Poly::var_named(&t, n).unwrap();
        let (u1, v1, u2, v2) = (v("u1"), v("v1"), v("u2"), v("v2"));
        let basis = if d == 1 { vec![u1, v1] } else { vec![&u1 * &u1, &u1 * &v1, &v1 * &v1, u2, v2] };
        basis.iter().zip(&c).map(|(b, k)| b.scale(&int(*k))).fold(Poly::zero(&t), |a, b| &a + &b)
    })
}

pub fn localization_symmetry(cases: u32) -> Result<(), String> {
    runner(cases, 3)
        .run(&(chern_class(), 3usize..5), |(f, p)| {
            let roots = localize_roots(&f, p).unwrap();
            check(symmetry_violations(&roots, 3, p).is_empty(), "S3 x Sp invariance")?;
            if p == 3 {
                let r = localize("", &f, 3).unwrap();
                check(r.roots().unwrap() == roots, "elementary and root routes agree")?;
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn localization_linearity(cases: u32) -> Result<(), String> {
    let a = class_amu(Mu::Finite).unwrap();
    runner(cases, 4)
        .run(&(chern_class(), chern_class(), -5i64..6), |(f, g, k)| {
            // both summands must share a degree
            let g = if g.weighted_degree() == f.weighted_degree() { g } else { a.clone() };
            let f = if f.weighted_degree() == g.weighted_degree() { f } else { a.clone() };
            let k = int(k);
            let lhs = localize("", &(&f.scale(&k) + &g), 3).unwrap();
            let (lf, lg) = (localize("", &f, 3).unwrap(), localize("", &g, 3).unwrap());
            check(lhs.sum == &lf.sum.scale(&k) + &lg.sum, "localization sum is linear")?;
            check(lhs.schur == lf.schur.scale(&k).add(&lg.schur).unwrap(), "Schur expansion is linear")?;
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// The full graph is transitive and codimension-monotone; every induced
/// subgraph on a random subset of orbits is rebuilt with the same edges.
pub fn graph_transitivity(cases: u32) -> Result<(), String> {
    let full = build_hierarchy().map_err(|e| e.to_string())?;
    if !full.transitivity_violations().is_empty() || !full.codim_violations().is_empty() {
        return Err(format!("violations {:?} {:?}", full.transitivity_violations(), full.codim_violations()));
    }
    let n = Dataset::builtin().orbits.len();
    runner(cases, 5)
        .run(&prop::collection::vec(any::<bool>(), n), |keep| {
            let orbits = Dataset::builtin().orbits.iter().zip(&keep).filter(|(_, k)| **k).map(|(o, _)| o.clone()).collect();
            let g = build_hierarchy_over(&Dataset { orbits }).unwrap();
            check(g.transitivity_violations().is_empty(), "induced subgraph is transitive")?;
            for &(a, b) in &g.edges {
                check(full.has_edge(&g.nodes[a].name, &g.nodes[b].name), "edge of the full graph")?;
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}
