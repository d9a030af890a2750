//! Ternary cubics, the determinant map and the Aronhold invariants.
//!
//! The degree 4 and 6 invariants are found as the common kernel of the six
//! `E_ij` derivations on the coefficient ring. The derivations move a
//! monomial of coefficient weight `w` to weight `w + root`, so the kernel
//! splits over weight blocks; every block is solved and all blocks but the
//! balanced one must have trivial kernel.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use super::lie::derive;
use super::net::Net;
use crate::error::{NocError, Result};
use crate::exactalg::linsolve::{span_system, LinearSystem, Solution};
use crate::exactalg::parse::parse_poly;
use crate::exactalg::rational::{self, Rational};
use crate::exactalg::{Poly, VarTable};

/// Cubic monomials as exponent vectors, in coefficient order
/// x³, x²y, x²z, xy², xyz, xz², y³, y²z, yz², z³.
pub const CUBIC_MONOMIALS: [[u32; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

pub fn cubic_index(e: [u32; 3]) -> usize {
    CUBIC_MONOMIALS.iter().position(|m| *m == e).expect("cubic exponent vector")
}

/// Multinomial coefficient `3! / (a! b! c!)`.
pub fn multinomial(e: [u32; 3]) -> i64 {
    rational::factorial(3) / e.iter().map(|&k| rational::factorial(k)).product::<i64>()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Cubic {
    vars: Arc<VarTable>,
    c: [Poly; 10],
}

impl Cubic {
    pub fn new(vars: &Arc<VarTable>, c: [Poly; 10]) -> Result<Self> {
        if c.iter().any(|p| p.vars() != vars) {
            return Err(NocError::TableMismatch("cubic coefficient".into()));
        }
        Ok(Cubic { vars: vars.clone(), c })
    }

    pub fn from_rationals(c: [Rational; 10]) -> Self {
        let t = VarTable::empty();
        Cubic { c: c.map(|r| Poly::constant(&t, r)), vars: t }
    }

    /// Parses a cubic in `x, y, z`, e.g. `y^2 z + x^3 + 5x z^2`.
    pub fn parse(s: &str) -> Result<Self> {
        let xyz = VarTable::uniform(&["x", "y", "z"]);
        let p = parse_poly(&xyz, s)?;
        if p.terms().any(|(m, _)| m.total_degree() != 3) {
            return Err(NocError::Parse(format!("`{s}` is not a homogeneous cubic")));
        }
        Ok(Self::from_rationals(CUBIC_MONOMIALS.map(|e| p.coefficient_of(&e))))
    }

    /// The Weierstrass form `y²z + x³ + a·xz² + b·z³`.
    pub fn weierstrass(a: &Poly, b: &Poly) -> Result<Self> {
        let t = a.vars();
        let mut c: [Poly; 10] = std::array::from_fn(|_| Poly::zero(t));
        c[cubic_index([0, 2, 1])] = Poly::one(t);
        c[cubic_index([3, 0, 0])] = Poly::one(t);
        c[cubic_index([1, 0, 2])] = a.clone();
        c[cubic_index([0, 0, 3])] = b.clone();
        Self::new(t, c)
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn coeffs(&self) -> &[Poly; 10] {
        &self.c
    }

    pub fn coeff(&self, e: [u32; 3]) -> &Poly {
        &self.c[cubic_index(e)]
    }

    pub fn as_rationals(&self) -> Option<[Rational; 10]> {
        let v: Option<Vec<Rational>> = self
            .c
            .iter()
            .map(|p| if p.is_zero() { Some(Rational::zero()) } else { p.as_constant() })
            .collect();
        v.map(|v| v.try_into().unwrap())
    }

    /// Substitutes `x → s₀x, y → s₁y, z → s₂z`.
    pub fn scale_vars(&self, s: &[Rational; 3]) -> Cubic {
        let c = std::array::from_fn(|i| {
            let e = CUBIC_MONOMIALS[i];
            let f: Rational = (0..3).map(|v| num_traits::pow(s[v].clone(), e[v] as usize)).product();
            self.c[i].scale(&f)
        });
        Cubic { vars: self.vars.clone(), c }
    }

    /// `E_ij` (one-based): `f ↦ x_i ∂f/∂x_j`.
    pub fn lie_act(&self, i: usize, j: usize) -> Cubic {
        let (i, j) = (i - 1, j - 1);
        let mut c: [Poly; 10] = std::array::from_fn(|_| Poly::zero(&self.vars));
        for (k, e) in CUBIC_MONOMIALS.iter().enumerate() {
            if e[j] == 0 || self.c[k].is_zero() {
                continue;
            }
            let mut to = *e;
            to[j] -= 1;
            to[i] += 1;
            let idx = cubic_index(to);
            c[idx] = &c[idx] + &self.c[k].scale(&Rational::from_integer(e[j].into()));
        }
        Cubic { vars: self.vars.clone(), c }
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, e) in CUBIC_MONOMIALS.iter().enumerate() {
            let p = &self.c[k];
            if p.is_zero() {
                continue;
            }
            let mono: Vec<String> = (0..3)
                .filter(|&v| e[v] > 0)
                .map(|v| {
                    let n = ["x", "y", "z"][v];
                    if e[v] == 1 {
                        n.to_string()
                    } else {
                        format!("{n}^{}", e[v])
                    }
                })
                .collect();
            let mono = mono.join("*");
            let (coef, neg) = match p.as_constant() {
                Some(r) if r < Rational::zero() => (Some(-r), true),
                Some(r) => (Some(r), false),
                None => (None, false),
            };
            if !first {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            first = false;
            match coef {
                Some(r) if r.is_one() => write!(f, "{mono}")?,
                Some(r) => write!(f, "{r}*{mono}")?,
                None => write!(f, "({p})*{mono}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cubic({self})")
    }
}

/// The determinant map: `det(λ₁A₁ + λ₂A₂ + λ₃A₃)` for the symmetric
/// matrices `A_k` of the net, as a cubic in `λ = (x, y, z)`.
pub fn det_map(n: &Net) -> Cubic {
    let t = n.vars().clone();
    let a: Vec<[[Poly; 3]; 3]> = (0..3).map(|k| n.sym_matrix(k)).collect();
    let mut c: [Poly; 10] = std::array::from_fn(|_| Poly::zero(&t));
    for k0 in 0..3 {
        for k1 in 0..3 {
            for k2 in 0..3 {
                let ks = [k0, k1, k2];
                let col = |r: usize, s: usize| &a[ks[s]][r][s];
                let term = |p: [usize; 3]| &(col(p[0], 0) * col(p[1], 1)) * col(p[2], 2);
                let pos = &(&term([0, 1, 2]) + &term([1, 2, 0])) + &term([2, 0, 1]);
                let neg = &(&term([2, 1, 0]) + &term([0, 2, 1])) + &term([1, 0, 2]);
                let mut e = [0u32; 3];
                for k in ks {
                    e[k] += 1;
                }
                let idx = cubic_index(e);
                c[idx] = &c[idx] + &(&pos - &neg);
            }
        }
    }
    Cubic { vars: t, c }
}

/// Ring of the cubic coefficients `c300, c210, …, c003`.
pub fn coeff_table() -> &'static Arc<VarTable> {
    static T: OnceLock<Arc<VarTable>> = OnceLock::new();
    T.get_or_init(|| {
        let names: Vec<String> =
            CUBIC_MONOMIALS.iter().map(|e| format!("c{}{}{}", e[0], e[1], e[2])).collect();
        VarTable::uniform(&names)
    })
}

/// The six `E_ij` acting on the coefficient ring: the derivation field sends
/// `c_m'` to `Σ m_j c_m` over `m' = m − e_j + e_i`.
pub fn coeff_derivations() -> Vec<Vec<Poly>> {
    let t = coeff_table();
    let mut out = Vec::new();
    for i in 0..3 {
        for j in (0..3).filter(|&j| j != i) {
            let generic = Cubic::new(t, std::array::from_fn(|k| Poly::var(t, k))).unwrap();
            out.push(generic.lie_act(i + 1, j + 1).c.to_vec());
        }
    }
    out
}

/// Size and kernel dimension of one weight block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockKernel {
    pub weight: [u32; 3],
    pub size: usize,
    pub kernel_dim: usize,
}

/// The common kernel of the six derivations on degree-`d` coefficient
/// polynomials, with per-block bookkeeping.
#[derive(Debug, Clone)]
pub struct InvariantKernel {
    pub degree: u32,
    pub monomials: usize,
    pub blocks: Vec<BlockKernel>,
    pub kernel: Vec<Poly>,
}

fn degree_monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

pub fn invariant_kernel(d: u32) -> Result<InvariantKernel> {
    let t = coeff_table();
    let ders = coeff_derivations();
    let mut blocks: BTreeMap<[u32; 3], Vec<Vec<u32>>> = BTreeMap::new();
    let all = degree_monomials(10, d);
    let monomials = all.len();
    for e in all {
        let mut w = [0u32; 3];
        for (v, &k) in e.iter().enumerate() {
            for (a, x) in w.iter_mut().enumerate() {
                *x += k * CUBIC_MONOMIALS[v][a];
            }
        }
        blocks.entry(w).or_default().push(e);
    }
    let zero = Poly::zero(t);
    let mut report = Vec::new();
    let mut kernel = Vec::new();
    for (w, mons) in blocks {
        let basis: Vec<Poly> = mons.iter().map(|e| Poly::monomial(t, e, Rational::one())).collect();
        let mut sys = LinearSystem::new(basis.len());
        for field in &ders {
            let images: Vec<Poly> = basis.iter().map(|b| derive(b, field)).collect();
            sys.extend(span_system(&images, &zero)?);
        }
        let vecs = match sys.solve() {
            Solution::Unique(_) => vec![],
            Solution::Family { kernel, .. } => kernel,
            Solution::Inconsistent => return Err(NocError::Inconsistent),
        };
        report.push(BlockKernel { weight: w, size: basis.len(), kernel_dim: vecs.len() });
        for v in vecs {
            kernel.push(basis.iter().zip(&v).map(|(b, c)| b.scale(c)).sum::<Poly>());
        }
    }
    Ok(InvariantKernel { degree: d, monomials, blocks: report, kernel })
}

/// The Aronhold invariants as polynomials in the cubic coefficients,
/// normalized on the Weierstrass family.
#[derive(Debug, Clone)]
pub struct Aronhold {
    pub a: Poly,
    pub b: Poly,
    pub kernels: [InvariantKernel; 2],
}

fn normalized(k: &InvariantKernel, target_var: usize) -> Result<Poly> {
    if k.kernel.len() != 1 {
        return Err(NocError::CheckFailed(format!(
            "degree {} invariants form a space of dimension {}, expected 1",
            k.degree,
            k.kernel.len()
        )));
    }
    let w = VarTable::uniform(&["wa", "wb"]);
    let (a, b) = (Poly::var(&w, 0), Poly::var(&w, 1));
    let f = Cubic::weierstrass(&a, &b)?;
    let inv = &k.kernel[0];
    let on_w = inv.substitute(&w, f.coeffs())?;
    let target = Poly::var(&w, target_var);
    let (m, _) = target.leading_term().unwrap();
    let s = on_w.coefficient(m);
    if s.is_zero() || on_w != target.scale(&s) {
        return Err(NocError::CheckFailed(format!(
            "degree {} invariant restricts to {on_w} on the Weierstrass family",
            k.degree
        )));
    }
    Ok(inv.scale(&s.recip()))
}

pub fn aronhold_invariants() -> Result<&'static Aronhold> {
    static A: OnceLock<std::result::Result<Aronhold, String>> = OnceLock::new();
    A.get_or_init(|| {
        let build = || -> Result<Aronhold> {
            let (k4, k6) = std::thread::scope(|s| {
                let h = s.spawn(|| invariant_kernel(4));
                let k6 = invariant_kernel(6);
                (h.join().unwrap(), k6)
            });
            let (k4, k6) = (k4?, k6?);
            Ok(Aronhold { a: normalized(&k4, 0)?, b: normalized(&k6, 1)?, kernels: [k4, k6] })
        };
        build().map_err(|e| e.to_string())
    })
    .as_ref()
    .map_err(|e| NocError::CheckFailed(e.clone()))
}

/// `(a, b)` of a cubic, in the cubic's coefficient ring.
pub fn aronhold(c: &Cubic) -> Result<(Poly, Poly)> {
    let ar = aronhold_invariants()?;
    Ok((ar.a.substitute(c.vars(), c.coeffs())?, ar.b.substitute(c.vars(), c.coeffs())?))
}

/// The degree-4 invariant `a` alone.
pub fn aronhold_a(c: &Cubic) -> Result<Poly> {
    aronhold_invariants()?.a.substitute(c.vars(), c.coeffs())
}

pub fn aronhold_at(c: &Cubic) -> Result<(Rational, Rational)> {
    let co = c
        .as_rationals()
        .ok_or_else(|| NocError::Invalid("aronhold_at needs a rational cubic".into()))?;
    let ar = aronhold_invariants()?;
    Ok((ar.a.eval(&co), ar.b.eval(&co)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    #[test]
    fn parse_and_display() {
        let c = Cubic::parse("y^2 z + x^3 + 5x z^2 + 7z^3").unwrap();
        assert_eq!(c.to_string(), "x^3 + 5*x*z^2 + y^2*z + 7*z^3");
        assert!(Cubic::parse("x^2").is_err());
    }

    #[test]
    fn lie_action_on_cubics() {
        let f = Cubic::parse("x^3 + y^3 + z^3").unwrap();
        // y → x once in y³
        assert_eq!(f.lie_act(1, 2), Cubic::parse("3x y^2").unwrap());
        assert_eq!(f.lie_act(2, 1).coeff([2, 1, 0]).as_constant(), Some(int(3)));
    }

    #[test]
    fn determinant_of_diagonal_net() {
        let n = Net::parse(&["x^2", "y^2", "z^2"]).unwrap();
        assert_eq!(det_map(&n), Cubic::parse("x y z").unwrap());
    }

    #[test]
    fn multinomials() {
        assert_eq!(CUBIC_MONOMIALS.map(multinomial), [1, 3, 3, 3, 6, 3, 1, 3, 3, 1]);
    }
}
