//! The cubic summands of the Plücker space, the quadratic invariant `I₂`,
//! `J₆ = I₂ ∘ ψ` and Salmon's sextic `θ`.

use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use super::net::Net;
use super::wedge::{coordinate_table, triples, Basis, Wedge3};
use crate::error::{NocError, Result};
use crate::exactalg::parse::parse_poly;
use crate::exactalg::rational::{int, rat, Rational};
use crate::exactalg::{Poly, VarTable};

/// Closed forms of `w₁ … w₁₀`.
pub const PRINTED_W: [&str; 10] = [
    "x^2 ∧ xy ∧ xz",
    "-x^2 ∧ xz ∧ y^2 + x^2 ∧ xy ∧ yz",
    "x^2 ∧ yz ∧ xz + x^2 ∧ xy ∧ z^2",
    "2xy ∧ y^2 ∧ xz + 2x^2 ∧ y^2 ∧ yz",
    "x^2 ∧ y^2 ∧ z^2 + 2xz ∧ xy ∧ yz",
    "2x^2 ∧ yz ∧ z^2 + 2xz ∧ xy ∧ z^2",
    "6xy ∧ y^2 ∧ yz",
    "2xy ∧ y^2 ∧ z^2 + 2xz ∧ y^2 ∧ yz",
    "2xy ∧ yz ∧ z^2 + 2xz ∧ y^2 ∧ z^2",
    "6xz ∧ yz ∧ z^2",
];

/// Closed forms of `w₁* … w₁₀*`.
pub const PRINTED_W_DUAL: [&str; 10] = [
    "6y^2 ∧ yz ∧ z^2",
    "2xz ∧ y^2 ∧ z^2 - 4xy ∧ yz ∧ z^2",
    "2xy ∧ y^2 ∧ z^2 - 4xz ∧ y^2 ∧ yz",
    "2xy ∧ xz ∧ z^2 + x^2 ∧ yz ∧ z^2",
    "-4xy ∧ xz ∧ yz - x^2 ∧ y^2 ∧ z^2",
    "2xy ∧ xz ∧ y^2 + x^2 ∧ y^2 ∧ yz",
    "-x^2 ∧ xz ∧ z^2",
    "2x^2 ∧ xz ∧ yz + x^2 ∧ xy ∧ z^2",
    "-x^2 ∧ xz ∧ y^2 - 2x^2 ∧ xy ∧ yz",
    "x^2 ∧ xy ∧ y^2",
];

/// `8 Σ wᵢwᵢ*` in the t-coordinates, as printed (equal to `−8 I₂`).
pub const PRINTED_MINUS_8_I2: &str = "t235^2 - 8t146^2 \
    - 8t134 t346 + 8t126 t246 + 8t145 t156 \
    + 6t123 t456 - 6t136 t245 + 6t124 t356 \
    - 4t125 t256 + 4t135 t345 - 4t234 t236 \
    + 2t134 t256 - 2t125 t346 + 2t135 t246 - 2t126 t345 \
    + 2t145 t236 + 2t156 t234 - 2t146 t235";

/// Salmon's sextic as printed, `−8θ`, in the pulled-back minors `u_ijk`.
pub const PRINTED_MINUS_8_THETA: &str = "u235^2 - 8u146^2 \
    + 4u146 u235 + 4u135 u345 - 4u125 u256 - 4u234 u236 \
    + 8u145 u156 - 8u134 u346 + 8u126 u246 \
    + 8u123 u456 - 8u136 u245 + 8u124 u356";

/// Both columns, generated by the Lie recursions and checked against the
/// printed closed forms.
#[derive(Debug, Clone, PartialEq)]
pub struct Table2 {
    pub w: [Wedge3; 10],
    pub w_dual: [Wedge3; 10],
}

fn printed(forms: &[&str; 10]) -> Result<[Wedge3; 10]> {
    let v = forms.iter().map(|s| Wedge3::parse(Basis::T, s)).collect::<Result<Vec<_>>>()?;
    Ok(v.try_into().unwrap())
}

/// Runs the recursions and compares with the closed forms; any mismatch is
/// an error naming the entry.
pub fn table2_generators() -> Result<Table2> {
    let w1 = Wedge3::parse(Basis::T, "x^2 ∧ xy ∧ xz")?;
    let mut w: Vec<Wedge3> = vec![w1];
    // (target, source, E_ij), one-based
    for (src, i, j) in [(1, 2, 1), (1, 3, 1), (2, 2, 1), (2, 3, 1), (3, 3, 1), (4, 2, 1), (4, 3, 1), (5, 3, 1), (6, 3, 1)] {
        let next = w[src - 1].lie_act(i, j);
        w.push(next);
    }
    for (target, src, k) in [(8, 7, rat(1, 3)), (9, 8, rat(1, 2)), (10, 9, int(1))] {
        if w[src - 1].lie_act(3, 2).scale(&k) != w[target - 1] {
            return Err(NocError::CheckFailed(format!("w{target} ≠ {k}·E32 w{src}")));
        }
    }
    let mut d: Vec<Option<Wedge3>> = vec![None; 10];
    d[9] = Some(Wedge3::parse(Basis::T, "x^2 ∧ xy ∧ y^2")?);
    // (target, source, factor, E_ij): w*_target = factor · E_ij w*_source
    let steps = [
        (9, 10, int(-1), 3, 2),
        (8, 9, rat(-1, 2), 3, 2),
        (7, 8, rat(-1, 3), 3, 2),
        (6, 10, int(-1), 3, 1),
        (5, 9, int(-1), 3, 1),
        (4, 7, int(-1), 2, 1),
        (3, 6, int(-1), 3, 1),
        (2, 4, int(-1), 2, 1),
        (1, 2, int(-1), 2, 1),
    ];
    for (t, s, k, i, j) in steps {
        let src = d[s - 1].as_ref().unwrap();
        d[t - 1] = Some(src.lie_act(i, j).scale(&k));
    }
    let w: [Wedge3; 10] = w.try_into().unwrap();
    let w_dual: [Wedge3; 10] = d.into_iter().map(Option::unwrap).collect::<Vec<_>>().try_into().unwrap();
    for (n, (got, want)) in w.iter().zip(printed(&PRINTED_W)?).enumerate() {
        if *got != want {
            return Err(NocError::CheckFailed(format!("w{} = {} differs from the closed form", n + 1, got)));
        }
    }
    for (n, (got, want)) in w_dual.iter().zip(printed(&PRINTED_W_DUAL)?).enumerate() {
        if *got != want {
            return Err(NocError::CheckFailed(format!("w{}* = {} differs from the closed form", n + 1, got)));
        }
    }
    Ok(Table2 { w, w_dual })
}

pub fn t_table() -> &'static Arc<VarTable> {
    static T: OnceLock<Arc<VarTable>> = OnceLock::new();
    T.get_or_init(|| coordinate_table('t'))
}

/// `I₂` from the printed formula.
pub fn i2_printed() -> Result<Poly> {
    Ok(parse_poly(t_table(), PRINTED_MINUS_8_I2)?.scale(&rat(-1, 8)))
}

/// `I₂ = −Σ wᵢwᵢ*` from the generated table.
pub fn i2_from_table(t: &Table2) -> Poly {
    let tt = t_table();
    -t.w
        .iter()
        .zip(&t.w_dual)
        .map(|(a, b)| &a.as_linear_form(tt) * &b.as_linear_form(tt))
        .sum::<Poly>()
}

/// `I₂` as a quadratic form in the 20 t-coordinates; built both ways and
/// required to agree.
pub fn i2_poly() -> Result<&'static Poly> {
    static P: OnceLock<std::result::Result<Poly, String>> = OnceLock::new();
    P.get_or_init(|| {
        let a = i2_printed().map_err(|e| e.to_string())?;
        let b = i2_from_table(&table2_generators().map_err(|e| e.to_string())?);
        if a != b {
            return Err(format!("printed I2 and -Σ w w* differ by {}", &a - &b));
        }
        Ok(a)
    })
    .as_ref()
    .map_err(|e| NocError::CheckFailed(e.clone()))
}

/// `I₂` at a point of the Plücker space (e-basis coordinates).
pub fn i2(w: &Wedge3) -> Result<Rational> {
    if w.basis() != Basis::E {
        return Err(NocError::Invalid("I2 is evaluated on e-basis wedges".into()));
    }
    Ok(i2_poly()?.eval(w.coords()))
}

/// 3×3 minors of the net's coefficient matrix, in triple order.
pub fn minors(n: &Net) -> [Poly; 20] {
    let q = n.rows();
    std::array::from_fn(|idx| {
        let [a, b, c] = triples()[idx];
        let m = |r: usize, s: usize| &q[r][[a, b, c][s]];
        let term = |p: [usize; 3]| &(m(0, p[0]) * m(1, p[1])) * m(2, p[2]);
        let pos = &(&term([0, 1, 2]) + &term([1, 2, 0])) + &term([2, 0, 1]);
        let neg = &(&term([2, 1, 0]) + &term([0, 2, 1])) + &term([1, 0, 2]);
        &pos - &neg
    })
}

/// The Plücker image `ψ(n)`: e-basis coordinates are the minors. Rational
/// nets only; symbolic nets use [`minors`].
pub fn plucker(n: &Net) -> Result<Wedge3> {
    let m = minors(n);
    let mut c: [Rational; 20] = Default::default();
    for (slot, p) in c.iter_mut().zip(&m) {
        *slot = if p.is_zero() {
            Rational::zero()
        } else {
            p.as_constant().ok_or_else(|| NocError::Invalid("plucker of a symbolic net".into()))?
        };
    }
    Ok(Wedge3::from_coords(Basis::E, c))
}

/// `J₆(n) = I₂(ψ(n))` with coefficients in the net's ring.
pub fn j6(n: &Net) -> Result<Poly> {
    i2_poly()?.substitute(n.vars(), &minors(n))
}

pub fn j6_at(n: &Net) -> Result<Rational> {
    i2(&plucker(n)?)
}

/// Ring of the 18 coordinates of a generic net: `m{k}{j}` is the coefficient
/// of the `j`-th conic monomial in the `k`-th quadric.
pub fn net_table() -> &'static Arc<VarTable> {
    static T: OnceLock<Arc<VarTable>> = OnceLock::new();
    T.get_or_init(|| {
        let names: Vec<String> = (1..=3).flat_map(|k| (1..=6).map(move |j| format!("m{k}{j}"))).collect();
        VarTable::uniform(&names)
    })
}

pub fn generic_net() -> Net {
    let t = net_table();
    Net::from_polys(t, std::array::from_fn(|k| std::array::from_fn(|j| Poly::var(t, 6 * k + j)))).unwrap()
}

/// `J₆` expanded in the 18 net coordinates.
pub fn j6_poly() -> Result<&'static Poly> {
    static P: OnceLock<Poly> = OnceLock::new();
    if let Some(p) = P.get() {
        return Ok(p);
    }
    let p = j6(&generic_net())?;
    Ok(P.get_or_init(|| p))
}

/// Salmon's `θ` from the printed formula, expanded in the net coordinates.
pub fn salmon_theta_poly() -> Result<Poly> {
    let u = coordinate_table('u');
    let theta = parse_poly(&u, PRINTED_MINUS_8_THETA)?.scale(&rat(-1, 8));
    theta.substitute(net_table(), &minors(&generic_net()))
}

/// The scalar `s` with `J₆ = s·θ`, if the two are proportional.
pub fn j6_theta_ratio() -> Result<Option<Rational>> {
    let j = j6_poly()?;
    let th = salmon_theta_poly()?;
    let Some((m, c)) = th.leading_term() else { return Ok(None) };
    let s = j.coefficient(m) / c;
    Ok((*j == th.scale(&s)).then_some(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_match_closed_forms() {
        let t = table2_generators().unwrap();
        assert_eq!(t.w[6], Wedge3::parse(Basis::T, "6xy∧y^2∧yz").unwrap());
        assert_eq!(t.w[1].coord([1, 3, 4]), rat(-1, 2));
        assert_eq!(t.w[1].coord([1, 2, 5]), rat(1, 4));
    }

    #[test]
    fn i2_two_ways() {
        let p = i2_poly().unwrap();
        let tt = t_table();
        let t235 = Poly::var_named(tt, "t235").unwrap();
        assert_eq!(p.scale(&int(-8)).coefficient(t235.pow(2).leading_term().unwrap().0), int(1));
        assert_eq!(i2(&Wedge3::zero(Basis::E)).unwrap(), int(0));
    }

    #[test]
    fn plucker_of_simple_nets() {
        let n = Net::parse(&["x^2", "y^2", "z^2"]).unwrap();
        let w = plucker(&n).unwrap();
        assert_eq!(w.coord([1, 4, 6]), int(1));
        assert_eq!(w.coords().iter().filter(|c| !c.is_zero()).count(), 1);
        assert!(plucker(&Net::parse(&["x^2", "y^2", "0"]).unwrap()).unwrap().is_zero());
    }
}
