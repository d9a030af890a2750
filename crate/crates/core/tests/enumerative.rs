use noc::enumerative::{
    cubic_class, degree, degree_by_roots, degree_table, delta_pullback, git_map_check, printed_multiplicities,
    theorem_multiplicities,
};
use noc::exactalg::parse::parse_poly;
use noc::exactalg::rational::int;
use noc::orbitdata::{chern_table, Dataset};
use noc::resolver::{class_amu, class_of, Mu};

#[test]
fn degrees() {
    let d: Vec<(String, i64)> = degree_table()
        .unwrap()
        .into_iter()
        .map(|(n, r)| (n, r.to_integer().try_into().unwrap()))
        .collect();
    let want = [("C", 72), ("D", 36), ("D*", 45), ("A_mu", 12), ("A_inf", 6)];
    assert_eq!(d, want.map(|(n, k)| (n.to_string(), k)).to_vec());
    for o in Dataset::builtin().iter().filter(|o| o.codim < 18) {
        let c = class_of(&o.name).unwrap();
        let deg = degree(&c).unwrap();
        assert!(deg > int(0), "{}", o.name);
        assert_eq!(deg_by_roots(&c), deg, "{}", o.name);
    }
    assert_eq!(degree(&class_amu(Mu::Infinity).unwrap()).unwrap(), int(6));
}

fn deg_by_roots(c: &noc::exactalg::Poly) -> noc::exactalg::Rational {
    degree_by_roots(c).unwrap()
}

#[test]
fn pullbacks() {
    let t = chern_table();
    let nu = delta_pullback(&cubic_class("nu").unwrap()).unwrap();
    assert_eq!(nu, parse_poly(t, "24(v1 - 2u1)^2").unwrap());
    assert_eq!(nu, class_of("C").unwrap().scale(&int(3)));
    assert_eq!(degree(&nu).unwrap(), int(216));
    assert_eq!(degree(&nu).unwrap(), int(24 * 3 * 3));
    let theta = delta_pullback(&cubic_class("theta").unwrap()).unwrap();
    assert_eq!(theta, parse_poly(t, "18v1^2 - 84u1v1 + 84u1^2 + 9v2").unwrap());
}

#[test]
fn multiplicities() {
    let got = theorem_multiplicities().unwrap();
    for (r, want) in got.iter().zip(printed_multiplicities()) {
        assert!(r.unique && r.reconstructs, "{r}");
        assert_eq!(r.values, want, "{r}");
        eprintln!("{r}");
    }
    // the genuine components have positive coefficients
    for r in &got {
        let n = if r.target == "K" { 3 } else { r.values.len() };
        assert!(r.values[..n].iter().all(|c| *c > int(0)));
    }
}

#[test]
fn git_quotient_map() {
    let g = git_map_check().unwrap();
    eprintln!("{g}");
    assert_eq!(g.chart_sign, Some(-1));
    assert_eq!(g.quotient_scalar, Some(int(-4)));
    assert_eq!(g.multiplicity_at(1), 2);
    assert_eq!(g.fiber_infinity, vec![(Some(int(1)), 2), (Some(int(4)), 1)]);
    assert_eq!(g.fiber_zero, vec![(None, 3)]);
    assert_eq!(g.fiber_one, vec![(Some(int(0)), 1), (Some(int(3)), 2)]);
}
