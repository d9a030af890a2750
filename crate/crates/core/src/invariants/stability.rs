//! `J₁₂`, the quotient map `k = J₆²/J₁₂` and the discriminant.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use super::cubic::{aronhold, aronhold_a, aronhold_at, det_map, Cubic};
use super::net::Net;
use super::table2::{generic_net, j6, j6_at};
use crate::error::{NocError, Result};
use crate::exactalg::parse::parse_poly;
use crate::exactalg::rational::{int, Rational};
use crate::exactalg::{Poly, RatFun, VarTable};

/// `J₁₂ = −48 · a(δ(n))`. The Aronhold invariant is SL₃-invariant, so the
/// sign change `(−x, −y, z)` used for the Weierstrass form does not affect it.
pub fn j12(n: &Net) -> Result<Poly> {
    Ok(aronhold_a(&det_map(n))?.scale(&int(-48)))
}

pub fn j12_at(n: &Net) -> Result<Rational> {
    Ok(aronhold_at(&det_map(n))?.0 * int(-48))
}

/// `J₁₂` expanded in the 18 net coordinates.
pub fn j12_poly() -> Result<&'static Poly> {
    static P: OnceLock<Poly> = OnceLock::new();
    if let Some(p) = P.get() {
        return Ok(p);
    }
    let p = j12(&generic_net())?;
    Ok(P.get_or_init(|| p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stability {
    Nullcone,
    K(Rational),
    KInfinite,
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stability::Nullcone => write!(f, "nullcone"),
            Stability::K(k) => write!(f, "k = {k}"),
            Stability::KInfinite => write!(f, "k = infinity"),
        }
    }
}

pub fn stability_of(j6: &Rational, j12: &Rational) -> Stability {
    match (j6.is_zero(), j12.is_zero()) {
        (true, true) => Stability::Nullcone,
        (false, true) => Stability::KInfinite,
        _ => Stability::K(j6 * j6 / j12),
    }
}

/// `J₆`, `J₁₂` and the verdict for a rational net.
pub fn stability(n: &Net) -> Result<(Rational, Rational, Stability)> {
    let (a, b) = (j6_at(n)?, j12_at(n)?);
    let s = stability_of(&a, &b);
    Ok((a, b, s))
}

/// `ν_{c,g}` over `ℚ[c, g]`.
pub fn slice_net() -> (Arc<VarTable>, Net) {
    let t = VarTable::uniform(&["c", "g"]);
    let n = Net::nu(&Poly::var(&t, 0), &Poly::var(&t, 1)).unwrap();
    (t, n)
}

/// The Weierstrass form of `δ(ν_{c,g})` after `(x, y, z) → (−x, −y, z)`.
pub const PRINTED_SLICE_CUBIC: &str = "y^2 z + x^3 + (c - 3g^2) x z^2 + 2g(c + g^2) z^3";

/// Compares `δ(ν_{c,g})`, with the sign change applied explicitly, against
/// the printed Weierstrass form, and its Aronhold invariants against
/// `(c − 3g², 2g(c + g²))`.
pub fn weierstrass_slice_check() -> Result<Cubic> {
    let (t, n) = slice_net();
    let raw = det_map(&n);
    let signed = raw.scale_vars(&[int(-1), int(-1), int(1)]);
    let xyz = VarTable::new([("c", 1), ("g", 1), ("x", 1), ("y", 1), ("z", 1)])?;
    let printed = parse_poly(&xyz, PRINTED_SLICE_CUBIC)?;
    for (k, e) in super::cubic::CUBIC_MONOMIALS.iter().enumerate() {
        let want = coefficient_in_xyz(&printed, &t, *e)?;
        if signed.coeffs()[k] != want {
            return Err(NocError::CheckFailed(format!("δ(ν) differs from the printed form: {signed}")));
        }
    }
    let (a, b) = aronhold(&signed)?;
    let (wa, wb) = (parse_poly(&t, "c - 3g^2")?, parse_poly(&t, "2g(c + g^2)")?);
    if a != wa || b != wb {
        return Err(NocError::CheckFailed(format!("aronhold(δ(ν)) = ({a}, {b})")));
    }
    Ok(signed)
}

/// Coefficient of `x^e` in a polynomial over `(c, g, x, y, z)`, as a
/// polynomial over `(c, g)`.
fn coefficient_in_xyz(p: &Poly, cg: &Arc<VarTable>, e: [u32; 3]) -> Result<Poly> {
    let mut out = Poly::zero(cg);
    for (m, c) in p.terms() {
        if [m.exp(2), m.exp(3), m.exp(4)] == e {
            out = &out + &Poly::monomial(cg, &[m.exp(0), m.exp(1)], c.clone());
        }
    }
    Ok(out)
}

/// The discriminant identity on the slice.
#[derive(Debug, Clone)]
pub struct DiscriminantReport {
    pub a: Poly,
    pub b: Poly,
    pub j6: Poly,
    pub j12: Poly,
    /// `Δ = 4a³ + 27b²` of the determinant cubic.
    pub delta: Poly,
    /// `Δ = 4(a + 3g²)(a + 12g²)²` holds.
    pub factorization_holds: bool,
    /// `κ` with `(J₆² − J₁₂)²(J₆² − 4J₁₂) = κ·Δ`.
    pub constant: Rational,
}

pub const PRINTED_CONSTANTS: [i64; 2] = [-6912, 110592];

impl fmt::Display for DiscriminantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "J6 = {}, J12 = {}", self.j6, self.j12)?;
        writeln!(f, "delta = {}", self.delta)?;
        writeln!(f, "delta = 4(a+3g^2)(a+12g^2)^2: {}", self.factorization_holds)?;
        write!(f, "(J6^2 - J12)^2 (J6^2 - 4 J12) = {} * delta", self.constant)
    }
}

pub fn discriminant_check() -> Result<DiscriminantReport> {
    let (t, n) = slice_net();
    let cubic = det_map(&n);
    let (a, b) = aronhold(&cubic)?;
    let delta = &(&a.pow(3) * &Poly::constant(&t, int(4))) + &b.pow(2).scale(&int(27));
    let g2 = Poly::var(&t, 1).pow(2);
    let f1 = &a + &g2.scale(&int(3));
    let f2 = &a + &g2.scale(&int(12));
    let factorization_holds = delta == (&f1 * &f2.pow(2)).scale(&int(4));
    let (p6, p12) = (j6(&n)?, j12(&n)?);
    let s = &p6 * &p6;
    let rhs = &(&s - &p12).pow(2) * &(&s - &p12.scale(&int(4)));
    let ratio = RatFun::new(rhs, delta.clone())?;
    let constant = ratio.as_constant().ok_or_else(|| {
        NocError::CheckFailed("(J6²−J12)²(J6²−4J12) is not proportional to δ*Δ".into())
    })?;
    Ok(DiscriminantReport { a, b, j6: p6, j12: p12, delta, factorization_holds, constant })
}
