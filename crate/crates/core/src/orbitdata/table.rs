//! Transcription of the orbit tables: representatives, stabilizer-torus
//! weights, Poincaré degrees, determinant-image labels, printed normal
//! weights and positivity witnesses.

pub(super) struct Row {
    pub name: &'static str,
    pub codim: u32,
    pub stratum: &'static str,
    pub rep: [&'static str; 3],
    pub u: [&'static str; 3],
    pub v: [&'static str; 3],
    pub poincare: &'static [u32],
    pub delta: &'static str,
    /// Printed normal weights; `None` for the zero orbit, which has no row.
    pub normal: Option<&'static [&'static str]>,
    /// Printed positivity witness `φ(α), φ(β), …`.
    pub witness: Option<&'static [i64]>,
    pub dual: Option<&'static str>,
    /// Letter renaming applied to the printed normal weights and witness,
    /// for rows printed with different letters than the symmetry column.
    pub rename: &'static [(&'static str, &'static str)],
}

/// Poincaré degrees corrected where the printed list is shorter than the
/// torus rank. `(22)`: the torus `(α, β, γ, δ)` together with the swap
/// `y ↔ z` has invariant generators `α, δ, β + γ, βγ`.
pub(super) const POINCARE_FIXES: &[(&str, &[u32])] = &[("(22)", &[1, 1, 1, 2])];

pub(super) const ROWS: &[Row] = &[
    Row {
        name: "C", codim: 2, stratum: "sigma0",
        rep: ["y^2 + 2xz", "2yz", "-x^2"],
        u: ["2α", "α + β", "2β"], v: ["2α + 2β", "α + 3β", "4α"],
        poincare: &[1, 1], delta: "ν",
        normal: Some(&["4α − 4β", "2α − 2β"]), witness: Some(&[1, 0]),
        dual: Some("C"), rename: &[],
    },
    Row {
        name: "D", codim: 2, stratum: "sigma0",
        rep: ["x^2", "y^2", "z^2 + 2xy"],
        u: ["2α", "2β", "α + β"], v: ["4α", "4β", "2α + 2β"],
        poincare: &[1, 2], delta: "θ",
        normal: Some(&["3α − 3β", "3β − 3α"]), witness: None,
        dual: Some("D*"), rename: &[],
    },
    Row {
        name: "D*", codim: 2, stratum: "sigma0",
        rep: ["2xz", "2yz", "z^2 + 2xy"],
        u: ["2α", "2β", "α + β"], v: ["3α + β", "α + 3β", "2α + 2β"],
        poincare: &[1, 2], delta: "θ",
        normal: Some(&["3α − 3β", "3β − 3α"]), witness: None,
        dual: Some("D"), rename: &[],
    },
    Row {
        name: "E", codim: 3, stratum: "sigma0",
        rep: ["x^2", "y^2", "z^2"],
        u: ["α", "β", "γ"], v: ["2α", "2β", "2γ"],
        poincare: &[1, 2, 3], delta: "A",
        normal: Some(&["2α − β − γ", "2β − α − γ", "2γ − α − β"]), witness: None,
        dual: Some("E*"), rename: &[],
    },
    Row {
        name: "E*", codim: 3, stratum: "sigma0",
        rep: ["2xy", "2yz", "2zx"],
        u: ["α", "β", "γ"], v: ["α + β", "β + γ", "γ + α"],
        poincare: &[1, 2, 3], delta: "A",
        normal: Some(&["-2α + β + γ", "-2β + α + γ", "-2γ + α + β"]), witness: None,
        dual: Some("E"), rename: &[],
    },
    Row {
        name: "F", codim: 3, stratum: "sigma0",
        rep: ["x^2 + y^2", "2xy", "2yz"],
        u: ["α", "α", "β"], v: ["2α", "2α", "α + β"],
        poincare: &[1, 1], delta: "≠",
        normal: Some(&["2α − 2β", "2α − 2β", "α − β"]), witness: Some(&[1, 0]),
        dual: Some("F*"), rename: &[],
    },
    Row {
        name: "F*", codim: 3, stratum: "sigma0",
        rep: ["x^2 + y^2", "xz", "z^2"],
        u: ["α", "α", "β"], v: ["2α", "α + β", "2β"],
        poincare: &[1, 1], delta: "Ω",
        normal: Some(&["2β − 2α", "2β − 2α", "β − α"]), witness: Some(&[-1, 0]),
        dual: Some("F"), rename: &[],
    },
    Row {
        name: "G", codim: 4, stratum: "sigma0",
        rep: ["x^2", "y^2", "yz"],
        u: ["α", "β", "γ"], v: ["2α", "2β", "β + γ"],
        poincare: &[1, 1, 1], delta: "≠",
        normal: Some(&["2α − 2γ", "β − α", "2β − α − γ", "2β − 2γ"]), witness: Some(&[1, 2, 0]),
        dual: Some("G*"), rename: &[],
    },
    Row {
        name: "G*", codim: 4, stratum: "sigma0",
        rep: ["xy", "xz", "z^2"],
        u: ["α", "β", "γ"], v: ["α + β", "α + γ", "2γ"],
        poincare: &[1, 1, 1], delta: "≠",
        normal: Some(&["2γ − 2α", "α − β", "-2β + α + γ", "2γ − 2β"]), witness: Some(&[-1, -2, 0]),
        dual: Some("G"), rename: &[],
    },
    Row {
        name: "H", codim: 5, stratum: "sigma0",
        rep: ["x^2", "2xy", "y^2 + 2xz"],
        u: ["2α", "α + β", "2β"], v: ["4α", "3α + β", "2α + 2β"],
        poincare: &[1, 1], delta: "Ξ",
        normal: Some(&["2α − 2β", "2α − 2β", "3α − 3β", "3α − 3β", "4α − 4β"]), witness: Some(&[1, 0]),
        dual: Some("H"), rename: &[],
    },
    Row {
        name: "I", codim: 7, stratum: "sigma0",
        rep: ["x^2", "xy", "y^2"],
        u: ["α", "β", "γ"], v: ["2α", "α + β", "2β"],
        poincare: &[1, 1, 2], delta: "0",
        normal: Some(&["α − γ", "2α − β − γ", "2α − 2γ", "β − γ", "-2γ + α + β", "2β − 2γ"]),
        witness: Some(&[0, 0, -1]),
        dual: Some("I*"), rename: &[],
    },
    Row {
        name: "I*", codim: 7, stratum: "sigma0",
        rep: ["xz", "yz", "z^2"],
        u: ["α", "β", "γ"], v: ["α + γ", "β + γ", "2γ"],
        poincare: &[1, 1, 2], delta: "0",
        normal: Some(&["-α + γ", "-2α + β + γ", "-2α + 2γ", "-β + γ", "2γ − α − β", "-2β + 2γ"]),
        witness: Some(&[0, 0, 1]),
        dual: Some("I"), rename: &[],
    },
    Row {
        name: "(1^4)", codim: 4, stratum: "sigma1",
        rep: ["x^2 - xz", "y^2 - yz", "0"],
        u: ["α", "α", "α"], v: ["2α", "2α", "β"],
        poincare: &[1, 1], delta: "K",
        normal: Some(&["β − 2γ", "β − 2γ", "β − 2γ", "β − 2γ"]), witness: Some(&[1, 0]),
        dual: None, rename: &[("β", "β"), ("γ", "α")],
    },
    Row {
        name: "(21^2)", codim: 5, stratum: "sigma1",
        rep: ["xy", "xz + yz", "0"],
        u: ["α", "α", "β"], v: ["2α", "α + β", "γ"],
        poincare: &[1, 1, 1], delta: "≠",
        normal: Some(&["2α − 2β", "γ − 2α", "γ − 2α", "γ − α − β", "γ − 2β"]), witness: Some(&[1, 0, 3]),
        dual: None, rename: &[],
    },
    Row {
        name: "(31)", codim: 6, stratum: "sigma1",
        rep: ["xz", "x^2 - yz", "0"],
        u: ["α + β", "2α", "2β"], v: ["α + 3β", "2α + 2β", "γ"],
        poincare: &[1, 1, 1], delta: "Ξ",
        normal: Some(&["3β − 3α", "2β − 2α", "γ − 3α − β", "γ − 4α", "γ − 2α − 2β", "γ − 4β"]),
        witness: Some(&[0, 1, 5]),
        dual: None, rename: &[],
    },
    Row {
        name: "(22)", codim: 6, stratum: "sigma1",
        rep: ["x^2", "yz", "0"],
        u: ["α", "β", "γ"], v: ["2α", "β + γ", "δ"],
        poincare: &[1, 1, 2], delta: "≠",
        normal: Some(&["2α − 2β", "2α − 2γ", "δ − α − β", "δ − α − γ", "δ − 2β", "δ − 2γ"]),
        witness: Some(&[1, 0, 0, 2]),
        dual: None, rename: &[],
    },
    Row {
        name: "(4)", codim: 7, stratum: "sigma1",
        rep: ["xz + y^2", "x^2", "0"],
        u: ["2α", "α + β", "2β"], v: ["2α + 2β", "4α", "γ"],
        poincare: &[1, 1, 1], delta: "Ξ",
        normal: Some(&["2α − 2β", "3α − 3β", "4α − 4β", "γ − 3α − β", "γ − 2α − 2β", "γ − 4β"]),
        witness: Some(&[1, 0, 5]),
        dual: None, rename: &[],
    },
    Row {
        name: "K", codim: 8, stratum: "sigma1",
        rep: ["y^2", "z^2", "0"],
        u: ["β", "α", "γ"], v: ["2α", "2γ", "δ"],
        poincare: &[1, 1, 1, 2], delta: "0",
        normal: Some(&[
            "2α − 2β", "2α − β − γ", "2γ − 2β", "2γ − α − β",
            "δ − 2β", "δ − α − β", "δ − β − γ", "δ − α − γ",
        ]),
        witness: Some(&[0, -1, 0, 0]),
        dual: None, rename: &[],
    },
    Row {
        name: "L", codim: 8, stratum: "sigma1",
        rep: ["xy", "xz", "0"],
        u: ["α", "β", "γ"], v: ["α + β", "α + γ", "δ"],
        poincare: &[1, 1, 1, 2], delta: "0",
        normal: Some(&[
            "α − β", "α − γ", "α + β − 2γ", "α + γ − 2β",
            "δ − 2α", "δ − 2β", "δ − 2γ", "δ − β − γ",
        ]),
        witness: Some(&[1, 0, 0, 3]),
        dual: None, rename: &[],
    },
    Row {
        name: "M", codim: 9, stratum: "sigma1",
        rep: ["yz", "y^2", "0"],
        u: ["α", "β", "γ"], v: ["β + γ", "2β", "δ"],
        poincare: &[1, 1, 1, 1], delta: "0",
        normal: Some(&[
            "β + γ − 2α", "β − α", "2β − 2α", "2β − α − γ", "2β − 2γ",
            "δ − 2α", "δ − α − β", "δ − α − γ", "δ − 2γ",
        ]),
        witness: Some(&[0, 1, 0, 2]),
        dual: None, rename: &[],
    },
    Row {
        name: "S", codim: 10, stratum: "sigma2",
        rep: ["xy - z^2", "0", "0"],
        u: ["2α", "2β", "α + β"], v: ["2α + 2β", "γ", "δ"],
        poincare: &[1, 1, 2, 2], delta: "0",
        normal: Some(&[
            "γ − 2α − 2β", "γ − 3α − β", "γ − 4α", "γ − α − 3β", "γ − 4β",
            "δ − 2α − 2β", "δ − 3α − β", "δ − 4α", "δ − α − 3β", "δ − 4β",
        ]),
        witness: Some(&[0, 0, 1, 1]),
        dual: None, rename: &[],
    },
    Row {
        name: "PL", codim: 11, stratum: "sigma2",
        rep: ["xy", "0", "0"],
        u: ["α", "β", "γ"], v: ["α + β", "δ", "ε"],
        poincare: &[1, 1, 1, 2, 2], delta: "0",
        normal: Some(&[
            "δ − 2α", "δ − 2β", "δ − α − γ", "δ − β − γ", "δ − 2γ",
            "ε − 2α", "ε − 2β", "ε − α − γ", "ε − β − γ", "ε − 2γ", "α + β − 2γ",
        ]),
        witness: Some(&[1, 0, 0, 3, 3]),
        dual: None, rename: &[],
    },
    Row {
        name: "DL", codim: 13, stratum: "sigma2",
        rep: ["x^2", "0", "0"],
        u: ["α", "β", "γ"], v: ["2α", "δ", "ε"],
        poincare: &[1, 1, 1, 2, 2], delta: "0",
        normal: Some(&[
            "δ − α − β", "δ − 2β", "δ − α − γ", "δ − 2γ", "δ − β − γ",
            "ε − α − β", "ε − 2β", "ε − α − γ", "ε − 2γ", "ε − β − γ",
            "2α − 2β", "2α − β − γ", "2α − 2γ",
        ]),
        witness: Some(&[1, 0, 0, 3, 3]),
        dual: None, rename: &[],
    },
    Row {
        name: "0", codim: 18, stratum: "zero",
        rep: ["0", "0", "0"],
        u: ["α", "β", "γ"], v: ["δ", "ε", "κ"],
        poincare: &[1, 1, 2, 2, 3, 3], delta: "0",
        normal: None, witness: None,
        dual: None, rename: &[],
    },
];
