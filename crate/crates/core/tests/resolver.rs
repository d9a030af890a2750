use noc::exactalg::parse::parse_poly;
use noc::orbitdata::{chern_table, orbit, Dataset};
use noc::resolver::{class_of, solve_class_in, verify_class};

#[test]
fn printed_classes() {
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
        assert_eq!(class_of(name).unwrap(), parse_poly(chern_table(), s).unwrap(), "{name}");
    }
}

#[test]
fn every_class_is_unique_and_verifies() {
    let data = Dataset::builtin();
    for o in data.iter().filter(|o| o.codim < 18) {
        let s = solve_class_in(data, o).unwrap_or_else(|e| panic!("{}: {e}", o.name));
        verify_class(data, o, &s.class).unwrap();
        eprintln!("{} ({} unknowns): {}", o.name, s.unknowns, s.class.len());
    }
    assert!(orbit("0").is_ok());
}
