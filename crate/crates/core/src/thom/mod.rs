//! Thom polynomials of the contact singularities of Σ⁰ nets by localization.
//!
//! Tp = ∏ᵢ∏ⱼ(βⱼ − αᵢ) · Σ_H D_H·[f]|_H / e_H over the 3-subsets `H` of
//! `W = {2α₁, 2α₂, 2α₃, α₁+α₂, α₁+α₃, α₂+α₃}`. The computation runs in
//! the α's and the elementary symmetric functions of the β's: every term is
//! brought over the Vandermonde-type product `V` of the 15 differences of
//! `W`, the numerator is divided by `V` exactly, and the α-symmetric result
//! is rewritten in elementary coordinates before the Schur expansion.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{NocError, Result};
use crate::exactalg::poly::product;
use crate::exactalg::rational::int;
use crate::exactalg::{Poly, VarTable, WeightedDegree};
use crate::orbitdata::{chern_table, orbit, Stratum};
use crate::resolver::{class_amu, class_of, Mu};
use crate::symfun::{elementary, symmetric_reduce, RootContext, SchurCombo, SchurComboJson};

/// Coefficients of the six forms of `W` in `α₁, α₂, α₃`.
pub const WEIGHTS: [[i64; 3]; 6] = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [1, 0, 1], [0, 1, 1]];

/// The 3-subsets of `W`, as index triples in lexicographic order.
pub fn subsets() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Variables `alpha1..3` and `sb1..sbp` (weights `1..p`).
fn mixed_table(p: usize) -> Result<Arc<VarTable>> {
    VarTable::new(
        (1..=3)
            .map(|i| (format!("alpha{i}"), 1))
            .chain((1..=p).map(|j| (format!("sb{j}"), j as u32))),
    )
}

struct Localizer {
    p: usize,
    t: Arc<VarTable>,
    w: Vec<Poly>,
    /// Variables after the α's are the roots `β₁..β_p` rather than `σ(β)`.
    explicit_roots: bool,
}

impl Localizer {
    fn over(p: usize, t: Arc<VarTable>, explicit_roots: bool) -> Self {
        let w = WEIGHTS
            .iter()
            .map(|c| Poly::linear(&t, &[int(c[0]), int(c[1]), int(c[2])].into_iter().chain((0..p).map(|_| int(0))).collect::<Vec<_>>()))
            .collect();
        Localizer { p, t, w, explicit_roots }
    }

    fn new(p: usize) -> Result<Self> {
        Ok(Self::over(p, mixed_table(p)?, false))
    }

    fn alpha(&self, i: usize) -> Poly {
        Poly::var(&self.t, i)
    }

    /// `∏ⱼ(βⱼ − x) = Σₖ σₖ(β)·(−x)^{p−k}`.
    fn target_product(&self, x: &Poly) -> Poly {
        if self.explicit_roots {
            return product((0..self.p).map(|j| &Poly::var(&self.t, 3 + j) - x));
        }
        let minus = -x;
        (0..=self.p).fold(Poly::zero(&self.t), |acc, k| {
            let s = if k == 0 { Poly::one(&self.t) } else { Poly::var(&self.t, 2 + k) };
            &acc + &(&s * &minus.pow((self.p - k) as u32))
        })
    }

    /// `[f]` at `uᵢ = σᵢ(α)`, `vᵢ = σᵢ(H)`.
    fn restrict(&self, f: &Poly, h: [usize; 3]) -> Result<Poly> {
        let a: Vec<Poly> = (0..3).map(|i| self.alpha(i)).collect();
        let hv: Vec<Poly> = h.iter().map(|&k| self.w[k].clone()).collect();
        let (ea, eh) = (elementary(&self.t, &a), elementary(&self.t, &hv));
        let images: Vec<Poly> = ea[1..].iter().chain(&eh[1..]).cloned().collect();
        f.substitute(&self.t, &images)
    }

    fn e_h(&self, h: [usize; 3]) -> Poly {
        let out: Vec<usize> = (0..6).filter(|k| !h.contains(k)).collect();
        product(out.iter().flat_map(|&w1| h.iter().map(move |&w2| (w1, w2))).map(|(w1, w2)| &self.w[w2] - &self.w[w1]))
    }

    fn vandermonde(&self) -> Poly {
        product((0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).map(|(a, b)| &self.w[a] - &self.w[b]))
    }

    /// `D_H·[f]|_H·(V/e_H)`.
    fn term(&self, f: &Poly, h: [usize; 3], v: &Poly) -> Result<Poly> {
        let cofactor = v
            .div_exact(&self.e_h(h))?
            .ok_or_else(|| NocError::CheckFailed(format!("e_H does not divide V for {h:?}")))?;
        let d = product((0..6).filter(|k| !h.contains(k)).map(|k| self.target_product(&self.w[k])));
        Ok(&(&d * &self.restrict(f, h)?) * &cofactor)
    }

    /// `Σ_H D_H·[f]|_H / e_H`, asserted to be a polynomial.
    fn sum(&self, f: &Poly) -> Result<Poly> {
        let v = self.vandermonde();
        let terms: Vec<Result<Poly>> = std::thread::scope(|s| {
            let handles: Vec<_> = subsets().into_iter().map(|h| s.spawn({
                let v = &v;
                move || self.term(f, h, v)
            })).collect();
            handles.into_iter().map(|h| h.join().expect("localization thread")).collect()
        });
        let mut num = Poly::zero(&self.t);
        for t in terms {
            num = &num + &t?;
        }
        num.div_exact(&v)?.ok_or(NocError::NotPolynomial)
    }

    fn prefactor(&self) -> Poly {
        product((0..3).map(|i| self.target_product(&self.alpha(i))))
    }
}

/// A Thom polynomial in elementary coordinates `σᵢ(α), σⱼ(β)` and in the
/// Schur basis of the quotient classes.
#[derive(Debug, Clone)]
pub struct TpResult {
    pub label: String,
    pub p: usize,
    pub ctx: RootContext,
    /// The localization sum alone, before the prefactor, in elementary
    /// coordinates.
    pub sum: Poly,
    pub elem: Poly,
    pub schur: SchurCombo,
}

#[derive(Serialize)]
pub struct TpJson {
    pub label: String,
    pub p: usize,
    pub degree: Option<u32>,
    pub schur: SchurComboJson,
}

impl TpResult {
    /// The polynomial in the roots `α₁..α₃, β₁..β_p`.
    pub fn roots(&self) -> Result<Poly> {
        self.ctx.to_roots(&self.elem)
    }

    pub fn to_json(&self) -> TpJson {
        TpJson { label: self.label.clone(), p: self.p, degree: self.schur.degree(), schur: self.schur.to_json() }
    }
}

fn to_elem(ctx: &RootContext, mixed: &Poly) -> Result<Poly> {
    let names: Vec<String> = (1..=3).map(|i| format!("sa{i}")).collect();
    symmetric_reduce(mixed, &[0, 1, 2], ctx.elem(), &names)
}

/// `[f]|_H` localization of a class in `u1..v3` for `p ≥ 3` target roots.
pub fn localize(label: &str, f: &Poly, p: usize) -> Result<TpResult> {
    if f.vars() != chern_table() {
        return Err(NocError::TableMismatch("localization expects a class in u1..v3".into()));
    }
    if p < 3 {
        return Err(NocError::Invalid("p must be at least 3".into()));
    }
    let deg = match f.weighted_degree() {
        WeightedDegree::Homogeneous(d) => d,
        WeightedDegree::Zero => 0,
        WeightedDegree::Inhomogeneous => return Err(NocError::Invalid("class is not homogeneous".into())),
    };
    let ctx = RootContext::new(3, p)?;
    let loc = Localizer::new(p)?;
    let s = loc.sum(f)?;
    let tp = &s * &loc.prefactor();
    let elem = to_elem(&ctx, &tp)?;
    let schur = ctx.expand_elem(&elem)?;
    let want = 6 * p as u32 + deg;
    if !f.is_zero() && schur.degree().map(|d| d + 9) != Some(want) {
        return Err(NocError::CheckFailed(format!("Thom polynomial of degree {:?}, expected {}", schur.degree(), want - 9)));
    }
    Ok(TpResult { label: label.to_string(), p, sum: to_elem(&ctx, &s)?, ctx, elem, schur })
}

/// The localization formula evaluated directly in the roots `α₁..α₃,
/// β₁..β_p` of `RootContext::new(3, p)`, without elementary coordinates.
pub fn localize_roots(f: &Poly, p: usize) -> Result<Poly> {
    if f.vars() != chern_table() {
        return Err(NocError::TableMismatch("localization expects a class in u1..v3".into()));
    }
    let ctx = RootContext::new(3, p)?;
    let loc = Localizer::over(p, ctx.roots().clone(), true);
    Ok(&loc.sum(f)? * &loc.prefactor())
}

/// Generator transpositions `αᵢ ↔ αᵢ₊₁`, `βⱼ ↔ βⱼ₊₁` that change a root
/// polynomial over `α₁..α_m, β₁..β_p`.
pub fn symmetry_violations(roots: &Poly, m: usize, p: usize) -> Vec<String> {
    let n = m + p;
    let mut out = Vec::new();
    for (a, label) in (0..m - 1).map(|i| (i, format!("alpha{}<->alpha{}", i + 1, i + 2)))
        .chain((0..p - 1).map(|j| (m + j, format!("beta{}<->beta{}", j + 1, j + 2))))
    {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(a, a + 1);
        if roots.permute_vars(&perm) != *roots {
            out.push(label);
        }
    }
    out
}

/// Class of a Σ⁰ orbit, or of the codimension-one family: `A`/`A_mu` for
/// finite μ and `A_inf` for μ = ∞.
pub fn sigma0_class(name: &str) -> Result<Poly> {
    match name {
        "A" | "A_mu" | "h" => class_amu(Mu::Finite),
        "A_inf" => class_amu(Mu::Infinity),
        _ => {
            let o = orbit(name)?;
            if o.stratum != Stratum::Sigma0 {
                return Err(NocError::Invalid(format!("{} is not a Σ⁰ orbit", o.name)));
            }
            class_of(&o.name)
        }
    }
}

/// Localization with the class of a named Σ⁰ orbit.
pub fn tp_orbit(name: &str, p: usize) -> Result<TpResult> {
    localize(name, &sigma0_class(name)?, p)
}

/// The formal `p = 3` substitution.
pub fn tp_equidimensional(name: &str) -> Result<TpResult> {
    tp_orbit(name, 3)
}

/// Printed Schur expansions.
pub const PRINTED_EQ3: &str = "8*544111 + 4*444211 + 16*844 + 20*6442 + 32*64411 + 120*6541 + 160*655 \
    + 16*54421 + 32*55411 + 40*5542 + 80*5551 + 80*664 + 40*7441 + 112*754";
pub const PRINTED_TP_H: &str = "8*433 + 4*3331";
pub const PRINTED_TP_KD: &str = "3*33311 + 6*3332 + 14*443 + 16*4331 + 17*533";
pub const PRINTED_TP_KE: &str = "1*333111 + 2*33321 + 4*3333 + 6*43311 + 8*4332 + 14*4431 + 8*444 + 13*5331 \
    + 19*543 + 8*633";
