//! One line per acceptance criterion. Each criterion is judged twice: by the
//! library's `verify-all` row and by an oracle written here against literal
//! expected values. Every comparison is exact rational equality.

#[path = "support/props.rs"]
mod props;

use noc::enumerative::{cubic_class, degree, delta_pullback, git_map_check, theorem_multiplicities};
use noc::exactalg::parse::parse_poly;
use noc::exactalg::rational::{int, rat, Rational};
use noc::exactalg::{Poly, VarTable};
use noc::hierarchy::{positivity, restriction};
use noc::invariants::cubic::aronhold_at;
use noc::invariants::jacobi::{dual_ratios, jac_factors};
use noc::invariants::net::quad_index;
use noc::invariants::stability::discriminant_check;
use noc::invariants::table2::{i2, i2_from_table, i2_printed, j6_theta_ratio};
use noc::invariants::{det_map, j12_at, j6_at, plucker, stability, table2_generators, Basis, Net, Stability, Wedge3};
use noc::orbitdata::{chern_table, orbit, Dataset};
use noc::report::{jacobian_sample_nets, run_check, Status};
use noc::resolver::{class_amu, class_of, solve_class_in, Mu};
use noc::symfun::SchurCombo;
use noc::thom::{tp_equidimensional, tp_orbit};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x6e6f63;

enum Verdict {
    Pass(String),
    /// Identity holds; a constant is reported rather than judged.
    Reported(String),
}

type Oracle = Result<Verdict, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn chern(s: &str) -> Poly {
    parse_poly(chern_table(), s).unwrap()
}

fn c1_classes() -> Oracle {
    let printed = [
        ("C", "8(v1 - 2u1)^2"),
        ("D", "-3u2 + 3v2 - 16u1v1 + 3v1^2 + 17u1^2"),
        ("D*", "12u2 - 3v2 - 20u1v1 + 6v1^2 + 16u1^2"),
        ("E", "3u3 + 3v3 - 3u1u2 + u2v1 - 6u1v1^2 + 13u1^2v1 - 2u1v2 - 8u1^3 + v1^3"),
        ("E*", "-24u3 + 3v3 - 24u1u2 + 16u2v1 - 16u1v1^2 + 20u1^2v1 - 6v1v2 + 10u1v2 - 8u1^3 + 4v1^3"),
        ("F", "2(v1 - 2u1)(6u1^2 - 4u1v1 - 6u2 + 3v2)"),
        ("F*", "2(v1 - 2u1)(5u1^2 - 8u1v1 + 9u2 - 3v2 + 3v1^2)"),
    ];
    for (name, s) in printed {
        ensure(ok(class_of(name))? == chern(s), format!("[{name}] differs from {s}"))?;
    }
    let data = Dataset::builtin();
    let mut n = 0;
    for o in data.iter().filter(|o| o.codim > 1 && o.codim < 18) {
        ok(solve_class_in(data, o)).map_err(|e| format!("{}: {e}", o.name))?;
        n += 1;
    }
    Ok(Verdict::Pass(format!("7 printed classes equal; {n} orbits of codim > 1 solved uniquely")))
}

fn c2_codim_one() -> Oracle {
    ensure(ok(class_amu(Mu::Finite))? == chern("4(v1 - 2u1)"), "[A_mu] != 4(v1 - 2u1)")?;
    ensure(ok(class_amu(Mu::Infinity))? == chern("2(v1 - 2u1)"), "[A_inf] != 2(v1 - 2u1)")?;
    Ok(Verdict::Pass("[A_mu] = 4(v1 - 2u1), [A_inf] = 2(v1 - 2u1)".into()))
}

fn c3_degrees() -> Oracle {
    // u = 0, v_i = binomial(3, i)
    let point = [int(0), int(0), int(0), int(3), int(3), int(1)];
    let classes = [
        ("C", ok(class_of("C"))?, 72),
        ("D", ok(class_of("D"))?, 36),
        ("D*", ok(class_of("D*"))?, 45),
        ("A_mu", ok(class_amu(Mu::Finite))?, 12),
        ("A_inf", ok(class_amu(Mu::Infinity))?, 6),
    ];
    for (name, c, want) in &classes {
        ensure(c.eval(&point) == int(*want), format!("deg {name} by evaluation = {}", c.eval(&point)))?;
        ensure(ok(degree(c))? == int(*want), format!("deg {name} = {:?}", degree(c)))?;
    }
    Ok(Verdict::Pass("72, 36, 45, 12, 6".into()))
}

/// Coefficients of `num / ∏ (1 − t^d)` up to `t^n`.
fn series(num: &[i128], dens: &[u32], n: usize) -> Vec<i128> {
    let mut a = vec![0i128; n + 1];
    for (i, c) in num.iter().enumerate().take(n + 1) {
        a[i] = *c;
    }
    for &d in dens {
        let d = d as usize;
        for i in d..=n {
            a[i] += a[i - d];
        }
    }
    a
}

fn c4_poincare() -> Oracle {
    const N: usize = 60;
    let data = Dataset::builtin();
    ensure(data.orbits.len() == 24, format!("{} orbits", data.orbits.len()))?;
    // (1 + t)/(1 − t)
    let mut total = series(&[1, 1], &[1], N);
    for o in data.iter() {
        let mut num = vec![0i128; o.codim as usize + 1];
        num[o.codim as usize] = 1;
        for (t, s) in total.iter_mut().zip(series(&num, &o.poincare_degrees, N)) {
            *t += s;
        }
    }
    let want = series(&[1], &[1, 1, 2, 2, 3, 3], N);
    let bad = (0..=N).find(|&i| total[i] != want[i]);
    ensure(bad.is_none(), format!("coefficient of t^{} differs", bad.unwrap_or(0)))?;
    Ok(Verdict::Pass(format!("24 orbits, series agree through t^{N}")))
}

fn e_wedge(terms: &[(i64, [usize; 3])]) -> Wedge3 {
    let t: Vec<(Rational, [usize; 3])> = terms.iter().map(|(k, t)| (int(*k), t.map(|i| i - 1))).collect();
    Wedge3::from_monomial_wedges(Basis::E, &t)
}

fn c5_quadratic_invariant() -> Oracle {
    let printed = ok(i2_printed())?;
    ensure(printed.len() == 18, format!("printed formula has {} terms", printed.len()))?;
    let t = ok(table2_generators())?;
    ensure(i2_from_table(&t) == printed, "-sum w_i w_i* differs from the printed formula")?;
    for (c, g) in [(0, 1), (2, -3), (-9, 1)] {
        let w = ok(plucker(&Net::nu_at(int(c), int(g))))?;
        ensure(ok(i2(&w))? == int(24 * g), format!("I2(psi(nu_{c},{g})) != {}", 24 * g))?;
    }
    Ok(Verdict::Pass("18-term formula = -sum w_i w_i*; I2 on the slice = 24g".into()))
}

fn c6_slice() -> Oracle {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut points = vec![(0, 1), (-9, 1)];
    points.extend((0..6).map(|_| (rng.gen_range(-20i64..20), rng.gen_range(1i64..6) * if rng.gen() { 1 } else { -1 })));
    for (c, g) in points {
        let n = Net::nu_at(int(c), int(g));
        let want = e_wedge(&[(12 * g, [3, 4, 5]), (2 * c, [4, 5, 6]), (4 * c, [3, 5, 6]), (-2, [1, 4, 5]), (-4, [1, 3, 5])]);
        ensure(ok(plucker(&n))? == want, format!("psi(nu_{c},{g})"))?;
        ensure(ok(j6_at(&n))? == int(24 * g), format!("J6(nu_{c},{g})"))?;
        // Weierstrass y^2 z + x^3 + (c - 3g^2) x z^2 + 2g(c + g^2) z^3
        let ab = (int(c - 3 * g * g), int(2 * g * (c + g * g)));
        ensure(ok(aronhold_at(&det_map(&n)))? == ab, format!("Weierstrass invariants of delta(nu_{c},{g})"))?;
        if 3 * g * g != c {
            let k = Rational::new((12 * g * g).into(), (3 * g * g - c).into());
            ensure(ok(stability(&n))?.2 == Stability::K(k.clone()), format!("k(nu_{c},{g}) != {k}"))?;
        }
    }
    for (name, a, b, k) in [("D", 1, 1, 1), ("D*", -8, 16, 4), ("E", 1, 1, 1), ("E*", -8, 16, 4)] {
        let n = ok(ok(orbit(name))?.net())?;
        ensure(ok(stability(&n))? == (int(a), int(b), Stability::K(int(k))), format!("(J6, J12, k) of {name}"))?;
    }
    let k = |c, g| ok(stability(&Net::nu_at(int(c), int(g)))).map(|s| s.2);
    ensure(k(-9, 1)? == Stability::K(int(1)) && k(0, 1)? == Stability::K(int(4)), "k(nu_-9,1), k(nu_0,1)")?;
    Ok(Verdict::Pass("psi, J6 = 24g, Weierstrass form, k = 12g^2/(3g^2 - c) at 8 points; D, D*, E, E* table".into()))
}

/// A random net with small integer coefficients.
fn random_net(rng: &mut ChaCha8Rng) -> [[Rational; 6]; 3] {
    std::array::from_fn(|_| std::array::from_fn(|_| int(rng.gen_range(-4i64..5))))
}

/// `x_i → x_i + s x_j` applied to every quadric.
fn shear_source(q: &[[Rational; 6]; 3], i: usize, j: usize, s: i64) -> [[Rational; 6]; 3] {
    let t = VarTable::uniform(&["x", "y", "z"]);
    let mut images: Vec<Poly> = (0..3).map(|k| Poly::var(&t, k)).collect();
    images[i] = &images[i] + &Poly::var(&t, j).scale(&int(s));
    std::array::from_fn(|k| {
        let quad = (0..3)
            .flat_map(|a| (a..3).map(move |b| (a, b)))
            .map(|(a, b)| (&Poly::var(&t, a) * &Poly::var(&t, b)).scale(&q[k][quad_index(a, b)]))
            .fold(Poly::zero(&t), |acc, m| &acc + &m);
        let moved = quad.substitute(&t, &images).unwrap();
        std::array::from_fn(|m| {
            let (a, b) = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)][m];
            let mut e = [0u32; 3];
            e[a] += 1;
            e[b] += 1;
            moved.coefficient_of(&e)
        })
    })
}

fn c7_annihilation() -> Oracle {
    ensure(
        Net::parse(&["x^2 + 2xz", "-3yz", "0"]).unwrap().as_rationals().unwrap()[0]
            == [int(1), int(0), int(2), int(0), int(0), int(0)],
        "coefficient layout",
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut checked = 0;
    for _ in 0..6 {
        let q = random_net(&mut rng);
        let base = (ok(j6_at(&Net::from_rationals(q.clone())))?, ok(j12_at(&Net::from_rationals(q.clone())))?);
        for i in 0..3 {
            for j in (0..3).filter(|&j| j != i) {
                let s = rng.gen_range(1i64..4);
                let moved = Net::from_rationals(shear_source(&q, i, j, s));
                ensure((ok(j6_at(&moved))?, ok(j12_at(&moved))?) == base, format!("source shear x{i} += {s} x{j}"))?;
                let mut r = q.clone();
                r[i] = std::array::from_fn(|m| &q[i][m] + &q[j][m] * int(s));
                let moved = Net::from_rationals(r);
                ensure((ok(j6_at(&moved))?, ok(j12_at(&moved))?) == base, format!("target shear Q{i} += {s} Q{j}"))?;
                checked += 2;
            }
        }
    }
    Ok(Verdict::Pass(format!("J6, J12 unchanged by {checked} unipotent shears of 6 random nets")))
}

fn c8_jacobi() -> Oracle {
    let t = ok(table2_generators())?;
    let ratios = ok(dual_ratios(&t))?;
    let one = Some(Rational::one());
    let off: Vec<String> = ratios
        .iter()
        .enumerate()
        .filter(|(_, r)| r.0 != one || r.1 != one)
        .map(|(i, (a, b))| format!("w{} ({} and {})", i + 1, show(a), show(b)))
        .collect();
    for (i, n) in ok(jacobian_sample_nets())?.iter().enumerate() {
        ensure(ok(jac_factors(n))?, format!("Jac != pi1 o psi on sample net {}", i + 1))?;
    }
    ensure(off.is_empty(), format!("pi1*/8w and pi2*/(-w*/3) ratios off at {}", off.join(", ")))?;
    Ok(Verdict::Pass("dual images 8w_i and -w_i*/3; Jac = pi1 o psi on 3 nets".into()))
}

fn show(r: &Option<Rational>) -> String {
    r.as_ref().map_or("-".into(), |r| r.to_string())
}

fn c9_salmon() -> Oracle {
    let s = ok(j6_theta_ratio())?.ok_or("J6 is not proportional to theta")?;
    ensure(s == Rational::one(), format!("J6 = {s} * theta"))?;
    // δ*Δ / ((J6² − J12)²(J6² − 4J12)) at rational slice points, with
    // Δ = 4a³ + 27b² of the Weierstrass form
    let mut constant = None;
    for (c, g) in [(1, 1), (-5, 2), (7, -3), (0, 1), (11, 4)] {
        let n = Net::nu_at(int(c), int(g));
        let (a, b) = ok(aronhold_at(&det_map(&n)))?;
        let disc = a.pow(3) * int(4) + b.pow(2) * int(27);
        let (x, y) = (ok(j6_at(&n))?, ok(j12_at(&n))?);
        let den = (&x * &x - &y).pow(2) * (&x * &x - &y * int(4));
        if den.is_zero() {
            continue;
        }
        let r = disc / den;
        ensure(constant.as_ref().map_or(true, |k| *k == r), format!("ratio varies: {r}"))?;
        constant = Some(r);
    }
    let constant = constant.ok_or("no admissible point")?;
    let lib = ok(discriminant_check())?;
    ensure(lib.factorization_holds, "delta does not factor")?;
    // the library constant is for the unnormalized discriminant
    ensure(lib.constant.is_integer() && !lib.constant.is_zero(), "library constant")?;
    Ok(Verdict::Reported(format!(
        "J6 = theta; (J6^2 - J12)^2 (J6^2 - 4J12) = {} (4a^3 + 27b^2); discriminant constant {} (printed -6912 and 110592)",
        Rational::one() / constant,
        lib.constant
    )))
}

fn c10_positivity() -> Oracle {
    let data = Dataset::builtin();
    let mut failing = Vec::new();
    let mut printed = 0;
    for o in data.iter() {
        let (Some(ws), Some(w)) = (&o.printed_normal_weights, &o.witness) else { continue };
        printed += 1;
        let phi: Vec<Rational> = w.iter().map(|&k| int(k)).collect();
        if !ws.iter().all(|l| l.eval(&phi) > int(0)) {
            failing.push(format!("{} {:?}", o.name, w));
        }
    }
    for o in data.iter() {
        let semistable = ["D", "D*", "E", "E*"].contains(&o.name.as_str());
        match ok(positivity(o))? {
            Some(_) if semistable => return Err(format!("{} is positive", o.name)),
            None if !semistable => return Err(format!("no witness for {}", o.name)),
            Some(w) => {
                let weights = ok(o.normal_weights())?;
                ensure(weights.iter().all(|l| l.eval(&w.values) > int(0)), format!("witness of {}", o.name))?;
            }
            None => {}
        }
    }
    ensure(failing.is_empty(), format!("printed witnesses fail: {}", failing.join(", ")))?;
    Ok(Verdict::Pass(format!("{printed} printed witnesses verify; unstable orbits positive; D, D*, E, E* not")))
}

fn c11_incidence() -> Oracle {
    let v = ok(orbit("(1^4)"))?;
    let t = v.torus().table();
    ensure(ok(restriction(&ok(class_of("F"))?, v))?.is_zero(), "j(1^4)[F] != 0")?;
    let want = parse_poly(&t, "-6(2alpha - beta)(4alpha^2 - 4alpha beta + beta^2)").unwrap();
    ensure(ok(restriction(&ok(class_of("F*"))?, v))? == want, "j(1^4)[F*]")?;
    Ok(Verdict::Pass("j[F] = 0, j[F*] = -6(2a - b)(4a^2 - 4ab + b^2)".into()))
}

fn c12_multiplicities() -> Oracle {
    let want: [&[Rational]; 5] = [
        &[int(3)],
        &[int(4), int(1)],
        &[int(9), int(6)],
        &[int(8), int(1), int(2)],
        &[int(12), int(4), rat(1, 2), int(-4), int(2)],
    ];
    let f = ok(class_of("F"))?;
    let class = |n: &str| -> Result<Poly, String> {
        match n {
            "u1*F" => Ok(&chern("u1") * &f),
            "v1*F" => Ok(&chern("v1") * &f),
            n => ok(class_of(n)),
        }
    };
    let rows = ok(theorem_multiplicities())?;
    ensure(rows.len() == 5, "five identities")?;
    for (r, w) in rows.iter().zip(want) {
        ensure(r.unique, format!("{} not unique", r.target))?;
        ensure(r.values == w, format!("{r}"))?;
        let mut sum = Poly::zero(chern_table());
        for ((n, _), c) in r.coefficients.iter().zip(&r.values) {
            sum = &sum + &class(n)?.scale(c);
        }
        ensure(sum == ok(delta_pullback(&ok(cubic_class(&r.target))?))?, format!("recombination of {}", r.target))?;
    }
    // 12[(1^4)] + 4[G] + ½[G*] + 2(v1 − 2u1)[F]
    let resid = &chern("2(v1 - 2u1)") * &f;
    let k = ["(1^4)", "G", "G*"].iter().zip([int(12), int(4), rat(1, 2)]).try_fold(resid, |acc, (n, c)| {
        class(n).map(|p| &acc + &p.scale(&c))
    })?;
    ensure(k == ok(delta_pullback(&ok(cubic_class("K"))?))?, "K relation")?;
    Ok(Verdict::Pass("(3), (4,1), (9,6), (8,1,2), K = 12, 4, 1/2 + 2(v1 - 2u1)[F]".into()))
}

fn c13_git() -> Oracle {
    let lib = ok(git_map_check())?;
    let sign = lib.chart_sign.ok_or("j is not ±4/((k-4)(k-1)^2)")?;
    // j = 4a³/(4a³ + 27b²) against s·4/((k − 4)(k − 1)²) at rational points
    for (c, g) in [(1, 1), (-5, 2), (7, -3), (2, 5), (-1, -1)] {
        let n = Net::nu_at(int(c), int(g));
        let (a, b) = ok(aronhold_at(&det_map(&n)))?;
        let d = a.pow(3) * int(4) + b.pow(2) * int(27);
        let Stability::K(k) = ok(stability(&n))?.2 else { continue };
        let chart = (&k - int(4)) * (&k - int(1)).pow(2);
        if d.is_zero() || chart.is_zero() {
            continue;
        }
        let j = a.pow(3) * int(4) / d;
        ensure(j == int(4 * sign) / chart, format!("j at nu_{c},{g}"))?;
    }
    // (x − 4)(x − 1)² = x³ − 6x² + 9x − 4 vanishes to order 2 at 1
    let p = |x: i64| x.pow(3) - 6 * x.pow(2) + 9 * x - 4;
    let dp = |x: i64| 3 * x.pow(2) - 12 * x + 9;
    let ddp = |x: i64| 6 * x - 12;
    ensure(p(1) == 0 && dp(1) == 0 && ddp(1) != 0, "order of the root at 1")?;
    ensure(lib.multiplicity_at(1) == 2, format!("B multiplicity {}", lib.multiplicity_at(1)))?;
    Ok(Verdict::Pass(format!("j = {sign}*4/((k-4)(k-1)^2) at 5 points; B multiplicity 2")))
}

fn c14_thom() -> Oracle {
    let eq3 = "8*544111 + 4*444211 + 16*844 + 20*6442 + 32*64411 + 120*6541 + 160*655 + 16*54421 + 32*55411 \
        + 40*5542 + 80*5551 + 80*664 + 40*7441 + 112*754";
    let a = ok(tp_orbit("A", 4))?;
    let want = ok(SchurCombo::parse(eq3))?;
    ensure(want.len() == 14 && a.schur == want, format!("p = 4: {}", a.schur))?;
    ensure(ok(tp_orbit("A_inf", 4))?.schur == a.schur.scale(&rat(1, 2)), "half relation")?;
    for (name, s, terms) in [
        ("A", "8*433 + 4*3331", 2),
        ("D", "3*33311 + 6*3332 + 14*443 + 16*4331 + 17*533", 5),
        ("E", "1*333111 + 2*33321 + 4*3333 + 6*43311 + 8*4332 + 14*4431 + 8*444 + 13*5331 + 19*543 + 8*633", 10),
    ] {
        let got = ok(tp_equidimensional(name))?.schur;
        ensure(got.len() == terms && got == ok(SchurCombo::parse(s))?, format!("{name}: {got}"))?;
    }
    Ok(Verdict::Pass("p = 4 expansion has 14 terms; A_inf gives half; tp_h, tp_KD, tp_KE".into()))
}

fn c15_properties() -> Oracle {
    props::ring_axioms(64)?;
    props::schur_round_trips(8)?;
    props::localization_symmetry(6)?;
    props::localization_linearity(6)?;
    props::graph_transitivity(8)?;
    Ok(Verdict::Pass("ring axioms, schur round trips, S3xSp symmetry, linearity, transitivity".into()))
}

#[test]
fn acceptance_criteria() {
    let oracles: [fn() -> Oracle; 15] = [
        c1_classes,
        c2_codim_one,
        c3_degrees,
        c4_poincare,
        c5_quadratic_invariant,
        c6_slice,
        c7_annihilation,
        c8_jacobi,
        c9_salmon,
        c10_positivity,
        c11_incidence,
        c12_multiplicities,
        c13_git,
        c14_thom,
        c15_properties,
    ];
    let data = Dataset::builtin();
    let mut failed = Vec::new();
    for (i, oracle) in oracles.iter().enumerate() {
        let id = i as u32 + 1;
        let row = run_check(id, data);
        let (status, detail) = match (oracle(), row.status) {
            (Err(e), _) => (Status::Fail, e),
            (Ok(_), Status::Fail) => (Status::Fail, format!("verify-all: {}", row.detail)),
            (Ok(Verdict::Pass(d)), Status::Pass) => (Status::Pass, d),
            (Ok(Verdict::Reported(d)), Status::ReportedConstant) => (Status::ReportedConstant, d),
            (Ok(_), s) => (Status::Fail, format!("oracle and verify-all disagree ({s})")),
        };
        println!("criterion {id:02} {status} (exact, tolerance 0): {detail}");
        if status == Status::Fail {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
