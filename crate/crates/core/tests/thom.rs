use noc::exactalg::rational::rat;
use noc::symfun::SchurCombo;
use noc::thom::{tp_equidimensional, tp_orbit, PRINTED_EQ3, PRINTED_TP_H, PRINTED_TP_KD, PRINTED_TP_KE};

#[test]
fn eq3_and_the_half_relation() {
    let t0 = std::time::Instant::now();
    let a = tp_orbit("A", 4).unwrap();
    assert_eq!(a.schur, SchurCombo::parse(PRINTED_EQ3).unwrap());
    let b = tp_orbit("A_inf", 4).unwrap();
    assert_eq!(b.schur, a.schur.scale(&rat(1, 2)));
    eprintln!("p = 4: {:?}", t0.elapsed());
}

#[test]
fn equidimensional() {
    for (name, want) in [("A", PRINTED_TP_H), ("D", PRINTED_TP_KD), ("E", PRINTED_TP_KE)] {
        let r = tp_equidimensional(name).unwrap();
        eprintln!("{name}: {}", r.schur);
        assert_eq!(r.schur, SchurCombo::parse(want).unwrap(), "{name}");
    }
}
