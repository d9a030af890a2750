//! Equivariant classes of orbit closures.
//!
//! Classes of codimension > 1 orbits are solved from restriction equations:
//! the class vanishes on the torus of every other orbit of at most the same
//! codimension and on the generic codimension-one torus, and restricts to the
//! normal Euler class on the orbit's own torus. The codimension-one family
//! `A_μ` is handled on the two-dimensional normal slice through `C`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::error::{NocError, Result};
use crate::exactalg::linsolve::{span_system, LinearSystem, Solution};
use crate::exactalg::poly::product;
use crate::exactalg::rational::{int, Rational};
use crate::exactalg::{LinForm, Poly, RatFun, VarTable};
use crate::orbitdata::{chern_table, Dataset, OrbitRecord, Torus};

/// All monomials in `u1..u3, v1..v3` of weighted degree `d`, ascending.
pub fn chern_basis(d: u32) -> Vec<Poly> {
    let t = chern_table();
    let w = t.weights().to_vec();
    let mut out = Vec::new();
    let mut exps = vec![0u32; w.len()];
    fn rec(i: usize, left: u32, w: &[u32], exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == w.len() {
            if left == 0 {
                out.push(exps.clone());
            }
            return;
        }
        for e in 0..=left / w[i] {
            exps[i] = e;
            rec(i + 1, left - e * w[i], w, exps, out);
        }
        exps[i] = 0;
    }
    let mut raw = Vec::new();
    rec(0, d, &w, &mut exps, &mut raw);
    for e in raw {
        out.push(Poly::monomial(t, &e, Rational::one()));
    }
    out.sort_by(|a, b| a.leading_term().unwrap().0.cmp(b.leading_term().unwrap().0));
    out
}

/// Torus of a generic codimension-one orbit: the slice torus with `α = β`.
pub fn generic_amu_torus() -> Torus {
    let a = |k| LinForm::new(&[k]);
    Torus::new([a(2), a(2), a(2)], [a(4), a(4), a(4)])
}

/// Which member of the codimension-one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mu {
    Finite,
    Infinity,
}

/// The torus `T_C` stabilizing the `C` representative and its weights on the
/// normal plane `{ν_{c,g}}`.
pub struct SliceData;

impl SliceData {
    pub fn torus() -> Torus {
        let f = |s: &str| LinForm::parse(s).unwrap();
        Torus::new(
            [f("2α"), f("α + β"), f("2β")],
            [f("2α + 2β"), f("α + 3β"), f("4α")],
        )
    }

    /// Weight of the `c` direction (the `z²` entry of the third quadric).
    pub fn c_weight() -> LinForm {
        LinForm::new(&[4, -4])
    }

    /// Weight of the `g` direction (`xz − y²` in the third quadric).
    pub fn g_weight() -> LinForm {
        LinForm::new(&[2, -2])
    }

    /// Class of `A_μ ∩ N_C` in the slice: the parabola `c = μ g²` has the
    /// class of the `c` direction; for `μ = ∞` it is the line `g = 0`.
    pub fn slice_class(mu: Mu) -> LinForm {
        match mu {
            Mu::Finite => Self::c_weight(),
            Mu::Infinity => Self::g_weight(),
        }
    }
}

/// `[A_μ] = A·u1 + B·v1`, solved from its restriction to the slice torus.
pub fn class_amu(mu: Mu) -> Result<Poly> {
    let t = chern_table();
    let basis = [Poly::var(t, 0), Poly::var(t, 3)];
    let torus = SliceData::torus();
    let restricted: Vec<Poly> = basis.iter().map(|b| torus.restrict(b)).collect::<Result<_>>()?;
    let target = SliceData::slice_class(mu).to_poly(&torus.table())?;
    let x = span_system(&restricted, &target)?.solve().into_unique()?;
    Ok(&basis[0].scale(&x[0]) + &basis[1].scale(&x[1]))
}

/// Restrictions of monomials in the Chern generators, each obtained from the
/// monomial with one factor fewer.
fn restrict_monomials(torus: &Torus, basis: &[Poly]) -> Vec<Poly> {
    let t = torus.table();
    let images = torus.restriction_images();
    let mut memo: HashMap<Vec<u32>, Poly> = HashMap::new();
    memo.insert(vec![0; images.len()], Poly::one(&t));
    fn go(e: &[u32], images: &[Poly], memo: &mut HashMap<Vec<u32>, Poly>) -> Poly {
        if let Some(p) = memo.get(e) {
            return p.clone();
        }
        let i = e.iter().position(|&x| x > 0).unwrap();
        let mut parent = e.to_vec();
        parent[i] -= 1;
        let p = &go(&parent, images, memo) * &images[i];
        memo.insert(e.to_vec(), p.clone());
        p
    }
    basis
        .iter()
        .map(|b| {
            let (m, c) = b.leading_term().expect("basis monomial");
            let e: Vec<u32> = (0..images.len()).map(|i| m.exp(i)).collect();
            go(&e, &images, &mut memo).scale(c)
        })
        .collect()
}

/// Equations `Σ x_k · r(basis_k) = rhs` for the restriction `r` to `torus`.
fn restriction_equations(basis: &[Poly], torus: &Torus, rhs: &Poly) -> Result<LinearSystem> {
    span_system(&restrict_monomials(torus, basis), rhs)
}

/// Outcome of a restriction-equation solve.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassSolve {
    pub class: Poly,
    /// Size of the monomial basis in the class degree.
    pub unknowns: usize,
    /// Names of the orbits whose vanishing was imposed, plus `A_mu`.
    pub vanishing: Vec<String>,
}

/// Solves the class of `target` from the restriction equations over the
/// orbits of `data`.
pub fn solve_class_in(data: &Dataset, target: &OrbitRecord) -> Result<ClassSolve> {
    if target.codim < 2 || target.codim >= 18 {
        return Err(NocError::Invalid(format!(
            "no restriction-equation solve for orbit {} of codimension {}",
            target.name, target.codim
        )));
    }
    let d = target.codim;
    let basis = chern_basis(d);
    let mut sys = LinearSystem::new(basis.len());
    let mut vanishing = Vec::new();
    for o in data.iter().filter(|o| o.name != target.name && o.codim <= d) {
        sys.extend(restriction_equations(&basis, &o.torus(), &Poly::zero(&o.torus().table()))?);
        vanishing.push(o.name.clone());
    }
    let g = generic_amu_torus();
    sys.extend(restriction_equations(&basis, &g, &Poly::zero(&g.table()))?);
    vanishing.push("A_mu".into());
    sys.extend(restriction_equations(&basis, &target.torus(), &target.euler_class()?)?);
    let x = match sys.solve() {
        Solution::Unique(x) => x,
        Solution::Family { kernel, .. } => return Err(NocError::NonUnique(kernel.len())),
        Solution::Inconsistent => return Err(NocError::Inconsistent),
    };
    let class = basis.iter().zip(&x).map(|(b, c)| b.scale(c)).sum::<Poly>();
    Ok(ClassSolve { class: class.embed(chern_table())?, unknowns: basis.len(), vanishing })
}

/// Class of an orbit closure of the built-in dataset.
pub fn solve_class(target: &OrbitRecord) -> Result<Poly> {
    solve_class_in(Dataset::builtin(), target).map(|s| s.class)
}

/// Classes of every built-in orbit of codimension 2..=17, solved once.
pub fn all_classes() -> &'static BTreeMap<String, std::result::Result<Poly, NocError>> {
    static C: OnceLock<BTreeMap<String, std::result::Result<Poly, NocError>>> = OnceLock::new();
    C.get_or_init(|| {
        let orbits: Vec<&OrbitRecord> =
            Dataset::builtin().iter().filter(|o| o.codim < 18).collect();
        std::thread::scope(|s| {
            let handles: Vec<_> = orbits
                .iter()
                .map(|o| (o.name.clone(), s.spawn(move || solve_class(o))))
                .collect();
            handles.into_iter().map(|(n, h)| (n, h.join().expect("solver thread"))).collect()
        })
    })
}

/// Cached class of a built-in orbit by name.
pub fn class_of(name: &str) -> Result<Poly> {
    let o = crate::orbitdata::orbit(name)?;
    all_classes()
        .get(&o.name)
        .cloned()
        .unwrap_or_else(|| Err(NocError::Invalid(format!("no class computed for orbit {}", o.name))))
}

/// Re-checks a solved class: vanishing on every other orbit of at most its
/// codimension and on the generic `A_μ` torus, Euler class on its own torus.
pub fn verify_class(data: &Dataset, target: &OrbitRecord, class: &Poly) -> Result<()> {
    for o in data.iter().filter(|o| o.codim <= target.codim) {
        let r = o.restrict(class)?;
        let expect = if o.name == target.name { o.euler_class()? } else { Poly::zero(r.vars()) };
        if r != expect {
            return Err(NocError::CheckFailed(format!(
                "class of {} restricted to {} is {r}, expected {expect}",
                target.name, o.name
            )));
        }
    }
    if !generic_amu_torus().restrict(class)?.is_zero() {
        return Err(NocError::CheckFailed(format!("class of {} does not vanish on A_mu", target.name)));
    }
    Ok(())
}

/// Series variable table `{t}`.
fn series_table() -> Arc<VarTable> {
    static T: OnceLock<Arc<VarTable>> = OnceLock::new();
    T.get_or_init(|| VarTable::uniform(&["t"])).clone()
}

fn one_minus_t_pow(k: u32) -> Poly {
    let t = series_table();
    &Poly::one(&t) - &Poly::monomial(&t, &[k], Rational::one())
}

/// `t^codim / ∏ (1 − t^{d_j})` for one orbit.
pub fn poincare_term(o: &OrbitRecord) -> Result<RatFun> {
    let t = series_table();
    let den = product(o.poincare_degrees.iter().map(|&d| one_minus_t_pow(d)).chain([Poly::one(&t)]));
    RatFun::new(Poly::monomial(&t, &[o.codim], Rational::one()), den)
}

/// Result of comparing the orbit-stratified series with that of the group.
#[derive(Debug, Clone)]
pub struct PoincareCheck {
    pub sum: RatFun,
    pub expected: RatFun,
    pub residue: RatFun,
}

impl PoincareCheck {
    pub fn passed(&self) -> bool {
        self.residue.is_zero()
    }
}

impl fmt::Display for PoincareCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "sum = {}", self.expected)
        } else {
            write!(f, "residue {}", self.residue)
        }
    }
}

/// `(1+t)/(1−t) + Σ_orbits t^codim/∏(1 − t^{d_j})` against
/// `1/((1−t)²(1−t²)²(1−t³)²)`.
pub fn poincare_identity_check_over<'a>(
    orbits: impl IntoIterator<Item = &'a OrbitRecord>,
) -> Result<PoincareCheck> {
    let t = series_table();
    let open = RatFun::new(&Poly::one(&t) + &Poly::var(&t, 0), one_minus_t_pow(1))?;
    let mut sum = open;
    for o in orbits {
        sum = sum.try_add(&poincare_term(o)?)?;
    }
    let den = product([1, 1, 2, 2, 3, 3].into_iter().map(one_minus_t_pow));
    let expected = RatFun::new(Poly::one(&t), den)?;
    let residue = sum.try_sub(&expected)?;
    Ok(PoincareCheck { sum, expected, residue })
}

pub fn poincare_identity_check(data: &Dataset) -> Result<PoincareCheck> {
    poincare_identity_check_over(data.iter())
}

/// Pulls out the content and the largest power of `v1 − 2u1`:
/// `8*(v1 - 2*u1)^2`, `2*(v1 - 2*u1)*(...)`.
pub fn factored_display(class: &Poly) -> String {
    if class.is_zero() {
        return "0".into();
    }
    let t = class.vars();
    let (Some(u1), Some(v1)) = (t.index_of("u1"), t.index_of("v1")) else {
        return class.to_string();
    };
    let mut lin = vec![Rational::zero(); t.len()];
    lin[v1] = int(1);
    lin[u1] = int(-2);
    let h = Poly::linear(t, &lin);
    let (mut c, mut rest) = class.primitive();
    if rest.display_leading().is_some_and(|(_, x)| x < &Rational::zero()) {
        c = -c;
        rest = -rest;
    }
    let mut k = 0;
    if rest.div_exact(&h).ok().flatten().is_none() {
        return class.to_string();
    }
    while rest.as_constant().is_none() {
        match rest.div_exact(&h).ok().flatten() {
            Some(q) => {
                rest = q;
                k += 1;
            }
            None => break,
        }
    }
    let mut parts = Vec::new();
    let rest_c = rest.as_constant();
    let coef = match &rest_c {
        Some(r) => c * r,
        None => c,
    };
    if coef != Rational::one() {
        parts.push(crate::exactalg::rational::to_display(&coef));
    }
    match k {
        1 => parts.push(format!("({h})")),
        _ => parts.push(format!("({h})^{k}")),
    }
    if rest_c.is_none() {
        parts.push(format!("({rest})"));
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbitdata::orbit;

    fn p(s: &str) -> Poly {
        crate::exactalg::parse::parse_poly(chern_table(), s).unwrap()
    }

    #[test]
    fn basis_sizes() {
        // oracle: coefficient of t^d in 1/((1-t)^2 (1-t^2)^2 (1-t^3)^2)
        let mut series = vec![0u64; 8];
        series[0] = 1;
        for w in [1usize, 1, 2, 2, 3, 3] {
            for i in w..series.len() {
                series[i] += series[i - w];
            }
        }
        for d in 0..8 {
            assert_eq!(chern_basis(d as u32).len() as u64, series[d]);
        }
    }

    #[test]
    fn slice_classes() {
        assert_eq!(class_amu(Mu::Finite).unwrap(), p("4*v1 - 8*u1"));
        assert_eq!(class_amu(Mu::Infinity).unwrap(), p("2*v1 - 4*u1"));
        let r = SliceData::torus().restrict(&p("4*v1 - 8*u1")).unwrap();
        assert_eq!(r, SliceData::c_weight().to_poly(&SliceData::torus().table()).unwrap());
    }

    #[test]
    fn class_of_c() {
        let c = solve_class(orbit("C").unwrap()).unwrap();
        assert_eq!(c, p("8*(v1 - 2*u1)^2"));
        assert_eq!(factored_display(&c), "8*(v1 - 2*u1)^2");
    }

    #[test]
    fn poincare_single_term() {
        let t = series_table();
        let term = poincare_term(orbit("C").unwrap()).unwrap();
        let expect = RatFun::new(Poly::monomial(&t, &[2], int(1)), one_minus_t_pow(1).pow(2)).unwrap();
        assert_eq!(term, expect);
    }

    #[test]
    fn poincare_identity_needs_every_orbit() {
        let d = Dataset::builtin();
        assert!(poincare_identity_check(d).unwrap().passed());
        let without_h = poincare_identity_check_over(d.iter().filter(|o| o.name != "H")).unwrap();
        assert!(!without_h.passed());
        assert_eq!(without_h.residue, poincare_term(orbit("H").unwrap()).unwrap().neg());
    }

    #[test]
    fn printed_degrees_of_22_leave_one_term_short() {
        let mut d = Dataset::builtin().clone();
        let row = d.orbits.iter_mut().find(|o| o.name == "(22)").unwrap();
        row.poincare_degrees = row.printed_poincare_degrees.clone().unwrap();
        let check = poincare_identity_check(&d).unwrap();
        // oracle: t^6/((1-t)^3(1-t^2)) - t^6/((1-t)^2(1-t^2)) = t^7/((1-t)^3(1-t^2))
        let t = series_table();
        let den = &one_minus_t_pow(1).pow(3) * &one_minus_t_pow(2);
        let gap = RatFun::new(Poly::monomial(&t, &[7], int(1)), den).unwrap();
        assert_eq!(check.residue, gap.neg());
    }

    #[test]
    fn factored_forms() {
        assert_eq!(factored_display(&p("3*u2")), "3*u2");
        assert_eq!(factored_display(&p("-2*v1 + 4*u1")), "-2*(v1 - 2*u1)");
        assert_eq!(factored_display(&p("5")), "5");
    }
}
