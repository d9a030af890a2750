//! Degrees of orbit closures, pullbacks of plane-cubic classes along the
//! determinant map, intersection multiplicities, and the induced map of GIT
//! quotients.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{NocError, Result};
use crate::exactalg::linsolve::{poly_rank, span_system, Solution};
use crate::exactalg::parse::parse_poly;
use crate::exactalg::ratfun::root_multiplicity;
use crate::exactalg::rational::{binomial, int, rat, to_display, Rational};
use crate::exactalg::{Poly, RatFun, VarTable};
use crate::invariants::stability::slice_net;
use crate::invariants::{aronhold, det_map, j12, j6};
use crate::orbitdata::chern_table;
use crate::resolver::{class_amu, class_of, Mu};
use crate::symfun::elementary;

/// GL₃ Chern classes `e1, e2, e3` of the space of plane cubics.
pub fn cubic_chern_table() -> &'static Arc<VarTable> {
    static T: OnceLock<Arc<VarTable>> = OnceLock::new();
    T.get_or_init(|| VarTable::new([("e1", 1), ("e2", 2), ("e3", 3)]).unwrap())
}

/// Classes of the plane-cubic orbit closures that occur as determinant
/// images: cusp `ν`, conic plus line `θ`, conic plus tangent `Ω`, triangle
/// `A`, three concurrent lines `K`.
pub const CUBIC_CLASSES: [(&str, &str); 5] = [
    ("nu", "24e1^2"),
    ("theta", "18e1^2 + 9e2"),
    ("Omega", "36e1^3 + 18e1e2"),
    ("A", "12e1^3 + 6e1e2 + 27e3"),
    ("K", "e1(12e1^3 + 6e1e2 + 27e3)"),
];

pub fn cubic_class(name: &str) -> Result<Poly> {
    let (_, s) = CUBIC_CLASSES
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| NocError::Invalid(format!("unknown cubic class `{name}`")))?;
    parse_poly(cubic_chern_table(), s)
}

/// `deg η̄`: the class at `uᵢ = 0`, `vᵢ = σᵢ(1, 1, 1)`.
pub fn degree(cls: &Poly) -> Result<Rational> {
    if cls.vars() != chern_table() {
        return Err(NocError::TableMismatch("degree expects a class in u1..v3".into()));
    }
    let point: Vec<Rational> = [0, 0, 0, binomial(3, 1), binomial(3, 2), binomial(3, 3)].map(int).to_vec();
    Ok(cls.eval(&point))
}

/// Degree computed by substituting the Chern roots themselves: `u`-roots 0,
/// `v`-roots 1, expanded through the root polynomials.
pub fn degree_by_roots(cls: &Poly) -> Result<Rational> {
    let t = VarTable::uniform(&["r"]);
    let zero = Poly::zero(&t);
    let one = Poly::one(&t);
    let eu = elementary(&t, &[zero.clone(), zero.clone(), zero]);
    let ev = elementary(&t, &[one.clone(), one.clone(), one]);
    let images: Vec<Poly> = eu[1..].iter().chain(&ev[1..]).cloned().collect();
    cls.substitute(&t, &images)?
        .as_constant()
        .ok_or_else(|| NocError::CheckFailed("degree substitution left a variable".into()))
}

/// The printed images of `e1, e2, e3` under the determinant map.
pub const PRINTED_PULLBACK: [&str; 3] = [
    "v1 - 2u1",
    "v2 - 4/3 u1 v1 + 4/3 u1^2",
    "v3 - 2/3 v2 u1 + 4/9 v1 u1^2 - 8/27 u1^3",
];

/// Images of `e1, e2, e3` from the root shift `εᵢ ↦ δᵢ − ⅔u₁`:
/// `σ_k(δ − t) = Σ_j C(3−j, k−j)(−t)^{k−j} v_j`.
pub fn pullback_images() -> Vec<Poly> {
    let t = chern_table();
    let shift = Poly::var(t, 0).scale(&rat(-2, 3));
    let v = |j: usize| if j == 0 { Poly::one(t) } else { Poly::var(t, 2 + j) };
    (1..=3u32)
        .map(|k| {
            (0..=k).fold(Poly::zero(t), |acc, j| {
                let c = int(binomial(3 - j, k - j));
                &acc + &(&v(j as usize) * &shift.pow(k - j)).scale(&c)
            })
        })
        .collect()
}

/// Whether the root-shift images agree with the printed ones.
pub fn pullback_images_match_print() -> Result<bool> {
    let printed: Vec<Poly> = PRINTED_PULLBACK.iter().map(|s| parse_poly(chern_table(), s)).collect::<Result<_>>()?;
    Ok(printed == pullback_images())
}

/// `δ*(cls)` for a class in `e1, e2, e3`.
pub fn delta_pullback(cls: &Poly) -> Result<Poly> {
    if cls.vars() != cubic_chern_table() {
        return Err(NocError::TableMismatch("pullback expects a class in e1, e2, e3".into()));
    }
    cls.substitute(chern_table(), &pullback_images())
}

/// `δ*(cls)` as a rational combination of candidate classes.
#[derive(Debug, Clone, Serialize)]
pub struct MultiplicityResult {
    pub target: String,
    /// `(candidate, coefficient)`; coefficients in lowest terms.
    pub coefficients: Vec<(String, String)>,
    #[serde(skip)]
    pub values: Vec<Rational>,
    pub unique: bool,
    /// `Σ μᵢ·candidateᵢ = δ*(target)` coefficient by coefficient.
    pub reconstructs: bool,
}

impl fmt::Display for MultiplicityResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coefficients.iter().map(|(n, c)| format!("{c}*[{n}]")).collect();
        write!(f, "delta*[{}] = {}", self.target, terms.join(" + "))
    }
}

pub fn solve_multiplicities(target: &str, candidates: &[(String, Poly)]) -> Result<MultiplicityResult> {
    let pulled = delta_pullback(&cubic_class(target)?)?;
    let polys: Vec<Poly> = candidates.iter().map(|(_, p)| p.clone()).collect();
    let rank = poly_rank(&polys);
    if rank < polys.len() {
        return Err(NocError::DegenerateBasis { rank, size: polys.len() });
    }
    let x = match span_system(&polys, &pulled)?.solve() {
        Solution::Unique(x) => x,
        Solution::Family { kernel, .. } => return Err(NocError::NonUnique(kernel.len())),
        Solution::Inconsistent => return Err(NocError::NotInSpan),
    };
    let sum = polys.iter().zip(&x).fold(Poly::zero(chern_table()), |acc, (p, c)| &acc + &p.scale(c));
    Ok(MultiplicityResult {
        target: target.to_string(),
        coefficients: candidates.iter().zip(&x).map(|((n, _), c)| (n.clone(), to_display(c))).collect(),
        values: x,
        unique: true,
        reconstructs: sum == pulled,
    })
}

fn orbit_candidates(names: &[&str]) -> Result<Vec<(String, Poly)>> {
    names.iter().map(|n| Ok((n.to_string(), class_of(n)?))).collect()
}

/// The four identities with codimension-correct preimages, and the
/// three-concurrent-lines relation with its residual on `F̄` written in the
/// basis `u1[F], v1[F]`.
pub fn theorem_multiplicities() -> Result<Vec<MultiplicityResult>> {
    let mut out = vec![
        solve_multiplicities("nu", &orbit_candidates(&["C"])?)?,
        solve_multiplicities("theta", &orbit_candidates(&["D", "D*"])?)?,
        solve_multiplicities("Omega", &orbit_candidates(&["F", "F*"])?)?,
        solve_multiplicities("A", &orbit_candidates(&["E", "E*", "F"])?)?,
    ];
    let t = chern_table();
    let f = class_of("F")?;
    let mut k = orbit_candidates(&["(1^4)", "G", "G*"])?;
    k.push(("u1*F".into(), &Poly::var(t, 0) * &f));
    k.push(("v1*F".into(), &Poly::var(t, 3) * &f));
    out.push(solve_multiplicities("K", &k)?);
    Ok(out)
}

/// The printed multiplicities, in the candidate order of
/// [`theorem_multiplicities`]; the last row is `12, 4, ½` followed by
/// `2(v1 − 2u1)` expanded in `u1, v1`.
pub fn printed_multiplicities() -> Vec<Vec<Rational>> {
    vec![
        vec![int(3)],
        vec![int(4), int(1)],
        vec![int(9), int(6)],
        vec![int(8), int(1), int(2)],
        vec![int(12), int(4), rat(1, 2), int(-4), int(2)],
    ]
}

/// Degrees of the classes with printed values.
pub fn degree_table() -> Result<Vec<(String, Rational)>> {
    let mut out = Vec::new();
    for n in ["C", "D", "D*"] {
        out.push((n.to_string(), degree(&class_of(n)?)?));
    }
    out.push(("A_mu".into(), degree(&class_amu(Mu::Finite)?)?));
    out.push(("A_inf".into(), degree(&class_amu(Mu::Infinity)?)?));
    Ok(out)
}

/// The induced map of GIT quotients on the slice `ν_{c,g}`.
#[derive(Debug, Clone)]
pub struct GitReport {
    /// `j = 4a³/Δ` of the determinant cubic.
    pub j: RatFun,
    /// `k = J₆²/J₁₂`.
    pub k: RatFun,
    /// `s` with `j = s · 4/((k − 4)(k − 1)²)`: `1` or `−1`, if either holds.
    pub chart_sign: Option<i64>,
    /// `j = s · J₁₂³/((J₆² − 4J₁₂)(J₆² − J₁₂)²)`, if proportional.
    pub quotient_scalar: Option<Rational>,
    /// Fibers of `k ↦ j` over `j = ∞, 0, 1`: `(k value or None for ∞,
    /// ramification)`.
    pub fiber_infinity: Vec<(Option<Rational>, u32)>,
    pub fiber_zero: Vec<(Option<Rational>, u32)>,
    pub fiber_one: Vec<(Option<Rational>, u32)>,
}

/// Multiplicities of the rational roots `candidates` of `p(x)`, plus the
/// root at infinity of order `deg_total − deg p`.
fn fiber(p: &Poly, candidates: &[i64], deg_total: u32) -> Vec<(Option<Rational>, u32)> {
    let mut out: Vec<(Option<Rational>, u32)> = candidates
        .iter()
        .map(|&r| (Some(int(r)), root_multiplicity(p, 0, &int(r))))
        .filter(|(_, m)| *m > 0)
        .collect();
    let d = p.degree_in(0);
    if deg_total > d {
        out.push((None, deg_total - d));
    }
    out
}

pub fn git_map_check() -> Result<GitReport> {
    let (t, n) = slice_net();
    let (a, b) = aronhold(&det_map(&n))?;
    let delta = &a.pow(3).scale(&int(4)) + &b.pow(2).scale(&int(27));
    let j = RatFun::new(a.pow(3).scale(&int(4)), delta)?;
    let (p6, p12) = (j6(&n)?, j12(&n)?);
    let k = RatFun::new(&p6 * &p6, p12.clone())?;
    let one = RatFun::from_poly(Poly::one(&t));
    let c = |x: i64| RatFun::from_poly(Poly::constant(&t, int(x)));
    let chart = c(4).try_div(&k.try_sub(&c(4))?.try_mul(&k.try_sub(&one)?.pow(2))?)?;
    let chart_sign = if j == chart {
        Some(1)
    } else if j == chart.neg() {
        Some(-1)
    } else {
        None
    };
    let s = &p6 * &p6;
    let q = RatFun::new(p12.pow(3), &(&s - &p12.scale(&int(4))) * &(&s - &p12).pow(2))?;
    let quotient_scalar = j.try_div(&q)?.as_constant();
    // j = 4/((4 − x)(1 − x)²) on the chart x = k
    let x = VarTable::uniform(&["x"]);
    let den = parse_poly(&x, "(4 - x)(1 - x)^2")?;
    let fiber_infinity = fiber(&den, &[0, 1, 2, 3, 4], 3);
    let fiber_zero = fiber(&Poly::constant(&x, int(4)), &[], 3);
    let fiber_one = fiber(&(&den - &Poly::constant(&x, int(4))), &[-1, 0, 1, 2, 3, 4], 3);
    Ok(GitReport { j, k, chart_sign, quotient_scalar, fiber_infinity, fiber_zero, fiber_one })
}

impl GitReport {
    /// Ramification of `k ↦ j` at `k`.
    pub fn multiplicity_at(&self, k: i64) -> u32 {
        self.fiber_infinity
            .iter()
            .chain(&self.fiber_zero)
            .chain(&self.fiber_one)
            .find(|(r, _)| r.as_ref() == Some(&int(k)))
            .map_or(0, |(_, m)| *m)
    }
}

impl fmt::Display for GitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[(Option<Rational>, u32)]| -> String {
            v.iter()
                .map(|(r, m)| format!("k={} (x{m})", r.as_ref().map_or("inf".into(), to_display)))
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(f, "k = {}", self.k)?;
        writeln!(f, "j = {}", self.j)?;
        match self.chart_sign {
            Some(s) => writeln!(f, "j = {s} * 4/((k-4)(k-1)^2)")?,
            None => writeln!(f, "j is not +-4/((k-4)(k-1)^2)")?,
        }
        if let Some(s) = &self.quotient_scalar {
            writeln!(f, "j = {} * J12^3/((J6^2-4J12)(J6^2-J12)^2)", to_display(s))?;
        }
        writeln!(f, "fiber over j=inf: {}", show(&self.fiber_infinity))?;
        writeln!(f, "fiber over j=0: {}", show(&self.fiber_zero))?;
        write!(f, "fiber over j=1: {}", show(&self.fiber_one))
    }
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Zero};

    use super::*;

    #[test]
    fn pullback_of_one_and_e1() {
        let t = cubic_chern_table();
        assert_eq!(delta_pullback(&Poly::one(t)).unwrap(), Poly::one(chern_table()));
        assert_eq!(
            delta_pullback(&Poly::var(t, 0)).unwrap(),
            parse_poly(chern_table(), "v1 - 2u1").unwrap()
        );
        assert!(pullback_images_match_print().unwrap());
    }

    #[test]
    fn unit_degree() {
        assert!(degree(&Poly::one(chern_table())).unwrap().is_one());
        assert!(degree(&Poly::var(chern_table(), 0)).unwrap().is_zero());
    }
}
