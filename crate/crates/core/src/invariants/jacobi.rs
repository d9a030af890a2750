//! The two projections of the Plücker space onto cubics: the Jacobian
//! covariant `π₁` and its dual `π₂`.

use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use super::cubic::{multinomial, CUBIC_MONOMIALS};
use super::net::Net;
use super::table2::{plucker, Table2};
use super::wedge::{triples, Basis, Wedge3};
use crate::error::{NocError, Result};
use crate::exactalg::parse::parse_poly;
use crate::exactalg::rational::{rat, Rational};
use crate::exactalg::{Poly, VarTable};
use crate::symfun::det;

pub fn xi_table() -> &'static Arc<VarTable> {
    static T: OnceLock<Arc<VarTable>> = OnceLock::new();
    T.get_or_init(|| VarTable::uniform(&["xi", "eta", "nu"]))
}

pub fn xyz_table() -> &'static Arc<VarTable> {
    static T: OnceLock<Arc<VarTable>> = OnceLock::new();
    T.get_or_init(|| VarTable::uniform(&["x", "y", "z"]))
}

fn matrix(t: &Arc<VarTable>, rows: [[&str; 6]; 3]) -> [[Poly; 6]; 3] {
    rows.map(|r| r.map(|s| parse_poly(t, s).unwrap()))
}

fn minor(m: &[[Poly; 6]; 3], cols: [usize; 3], t: &Arc<VarTable>) -> Poly {
    let sub: Vec<Vec<Poly>> = m.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
    det(&sub, t)
}

/// `π₁(e_ijk)`: minors of the matrix of partial derivatives of the conic
/// monomials in `ξ, η, ν`.
pub fn pi1_images() -> &'static [Poly; 20] {
    static P: OnceLock<[Poly; 20]> = OnceLock::new();
    P.get_or_init(|| {
        let t = xi_table();
        let m = matrix(t, [
            ["2xi", "eta", "nu", "0", "0", "0"],
            ["0", "xi", "0", "2eta", "nu", "0"],
            ["0", "0", "xi", "0", "eta", "2nu"],
        ]);
        std::array::from_fn(|i| minor(&m, triples()[i], t))
    })
}

/// `π₂(e_ijk)`: minors of the elimination matrix. The last column carries
/// `x²/z, y²/z, 2xy/z`; it is stored multiplied by `z` and minors using it
/// are divided by `z` exactly.
pub fn pi2_images() -> Result<&'static [Poly; 20]> {
    static P: OnceLock<std::result::Result<[Poly; 20], String>> = OnceLock::new();
    P.get_or_init(|| {
        let t = xyz_table();
        let m = matrix(t, [
            ["z", "0", "-x", "0", "0", "x^2"],
            ["0", "0", "0", "z", "-y", "y^2"],
            ["0", "z", "-y", "0", "-x", "2x y"],
        ]);
        let z = Poly::var(t, 2);
        let mut out: Vec<Poly> = Vec::new();
        for tr in triples() {
            let d = minor(&m, *tr, t);
            out.push(if tr[2] == 5 {
                d.div_exact(&z)
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| format!("minor {tr:?} is not divisible by z"))?
            } else {
                d
            });
        }
        Ok(out.try_into().unwrap())
    })
    .as_ref()
    .map_err(|e| NocError::CheckFailed(e.clone()))
}

fn apply(images: &[Poly; 20], w: &Wedge3) -> Result<Poly> {
    if w.basis() != Basis::E {
        return Err(NocError::Invalid("the projections act on e-basis wedges".into()));
    }
    let t = images[0].vars();
    Ok(images.iter().zip(w.coords()).fold(Poly::zero(t), |acc, (p, c)| &acc + &p.scale(c)))
}

/// `π₁(w)` as a cubic in `ξ, η, ν`.
pub fn pi1(w: &Wedge3) -> Result<Poly> {
    apply(pi1_images(), w)
}

/// `π₂(w)` as a cubic in `x, y, z`.
pub fn pi2(w: &Wedge3) -> Result<Poly> {
    apply(pi2_images()?, w)
}

/// `π₁*` of the dual basis vector `multinomial·x^m` of the `r`-th cubic
/// monomial: the functional reading off the `ξ^m` coefficient, in
/// t-coordinates.
pub fn pi1_dual(r: usize) -> Wedge3 {
    let e = CUBIC_MONOMIALS[r];
    Wedge3::from_coords(Basis::T, std::array::from_fn(|i| pi1_images()[i].coefficient_of(&e)))
}

/// `π₂*(ξ^m)`: pairing with `x^m` gives `1/multinomial(m)`.
pub fn pi2_dual(r: usize) -> Result<Wedge3> {
    let e = CUBIC_MONOMIALS[r];
    let k = Rational::from_integer(multinomial(e).into());
    let im = pi2_images()?;
    Ok(Wedge3::from_coords(Basis::T, std::array::from_fn(|i| im[i].coefficient_of(&e) / &k)))
}

/// Checks `π₁*` against `8wᵢ` and `π₂*` against `−⅓wᵢ*`; returns the
/// indices (one-based) that fail for each map.
pub fn dual_checks(t: &Table2) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut bad1 = Vec::new();
    let mut bad2 = Vec::new();
    for r in 0..10 {
        if pi1_dual(r) != t.w[r].scale(&Rational::from_integer(8.into())) {
            bad1.push(r + 1);
        }
        if pi2_dual(r)? != t.w_dual[r].scale(&rat(-1, 3)) {
            bad2.push(r + 1);
        }
    }
    Ok((bad1, bad2))
}

/// `s` with `a = s·b`, if `b ≠ 0` and the two are proportional.
fn ratio(a: &Wedge3, b: &Wedge3) -> Option<Rational> {
    let (i, c) = b.coords().iter().enumerate().find(|(_, c)| !c.is_zero())?;
    let s = &a.coords()[i] / c;
    (*a == b.scale(&s)).then_some(s)
}

/// For each cubic monomial, the scalars `s₁, s₂` with `π₁*(·) = s₁·8wᵢ` and
/// `π₂*(·) = s₂·(−⅓wᵢ*)`; `None` where the images are not proportional.
pub fn dual_ratios(t: &Table2) -> Result<Vec<(Option<Rational>, Option<Rational>)>> {
    (0..10)
        .map(|r| {
            let a = ratio(&pi1_dual(r), &t.w[r].scale(&Rational::from_integer(8.into())));
            let b = ratio(&pi2_dual(r)?, &t.w_dual[r].scale(&rat(-1, 3)));
            Ok((a, b))
        })
        .collect()
}

/// The Jacobian covariant `det(∂M_k/∂ξ_i)` of a rational net whose quadrics
/// are read in `ξ, η, ν`.
pub fn jac(n: &Net) -> Result<Poly> {
    let q = n
        .as_rationals()
        .ok_or_else(|| NocError::Invalid("jac of a symbolic net".into()))?;
    let t = xi_table();
    let quad: Vec<Poly> = q
        .iter()
        .map(|row| {
            super::net::QUAD_MONOMIALS.iter().zip(row).fold(Poly::zero(t), |acc, ([a, b], c)| {
                &acc + &(&Poly::var(t, *a) * &Poly::var(t, *b)).scale(c)
            })
        })
        .collect();
    let m: Vec<Vec<Poly>> = (0..3).map(|i| quad.iter().map(|f| f.derivative(i)).collect()).collect();
    Ok(det(&m, t))
}

/// `Jac(n) = π₁(ψ(n))`.
pub fn jac_factors(n: &Net) -> Result<bool> {
    Ok(jac(n)? == pi1(&plucker(n)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    #[test]
    fn pi1_of_e123() {
        let xi = Poly::var(xi_table(), 0);
        assert_eq!(pi1_images()[0], xi.pow(3).scale(&int(2)));
    }

    #[test]
    fn pi2_minors_are_cubics() {
        for p in pi2_images().unwrap() {
            assert!(p.terms().all(|(m, _)| m.total_degree() == 3));
        }
    }
}
