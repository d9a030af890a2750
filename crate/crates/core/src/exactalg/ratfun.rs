//! Quotients of polynomials, kept in a canonical partially reduced form.
//!
//! Reduction removes rational content, common monomial factors, exact
//! divisibility of the numerator by the denominator, and (for univariate
//! data) the full Euclidean gcd. Equality is decided by cross-multiplication,
//! so no general multivariate gcd is needed.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::poly::{Monomial, Poly, VarTable};
use super::rational::Rational;
use crate::error::{NocError, Result};

#[derive(Clone)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(NocError::ZeroDenominator);
        }
        if num.vars() != den.vars() {
            return Err(NocError::TableMismatch("numerator vs denominator".into()));
        }
        Ok(RatFun { num, den }.reduced())
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.vars());
        RatFun { num: p, den }
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        self.num.vars()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this equals, if the denominator divides exactly.
    pub fn as_poly(&self) -> Option<Poly> {
        self.num.div_exact(&self.den).ok().flatten()
    }

    fn reduced(self) -> Self {
        let RatFun { mut num, mut den } = self;
        let vars = num.vars().clone();
        if num.is_zero() {
            return RatFun { num, den: Poly::one(&vars) };
        }
        if let Some(q) = num.div_exact(&den).ok().flatten() {
            return RatFun { num: q, den: Poly::one(&vars) };
        }
        // common monomial factor
        let arity = vars.len();
        let mut low = vec![u32::MAX; arity];
        for (m, _) in num.terms().chain(den.terms()) {
            for (i, l) in low.iter_mut().enumerate() {
                *l = (*l).min(m.exp(i));
            }
        }
        if low.iter().any(|&e| e > 0) {
            let g = Poly::monomial(&vars, &low, Rational::one());
            num = num.div_exact(&g).unwrap().unwrap();
            den = den.div_exact(&g).unwrap().unwrap();
        }
        if let Some(v) = single_variable(&num, &den) {
            let g = univariate_gcd(&num, &den, v);
            if g.degree_in(v) > 0 {
                num = num.div_exact(&g).unwrap().expect("gcd divides numerator");
                den = den.div_exact(&g).unwrap().expect("gcd divides denominator");
            }
        }
        let (c, den_p) = den.primitive();
        let num_p = num.scale(&c.recip());
        RatFun { num: num_p, den: den_p }
    }

    pub fn try_add(&self, o: &RatFun) -> Result<RatFun> {
        if self.den == o.den {
            return RatFun::new(self.num.try_add(&o.num)?, self.den.clone());
        }
        let n = self.num.try_mul(&o.den)?.try_add(&o.num.try_mul(&self.den)?)?;
        RatFun::new(n, self.den.try_mul(&o.den)?)
    }

    pub fn try_sub(&self, o: &RatFun) -> Result<RatFun> {
        self.try_add(&o.neg())
    }

    pub fn try_mul(&self, o: &RatFun) -> Result<RatFun> {
        RatFun::new(self.num.try_mul(&o.num)?, self.den.try_mul(&o.den)?)
    }

    pub fn try_div(&self, o: &RatFun) -> Result<RatFun> {
        if o.is_zero() {
            return Err(NocError::ZeroDenominator);
        }
        RatFun::new(self.num.try_mul(&o.den)?, self.den.try_mul(&o.num)?)
    }

    pub fn neg(&self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }

    pub fn pow(&self, n: u32) -> RatFun {
        RatFun { num: self.num.pow(n), den: self.den.pow(n) }
    }

    /// Constant value, if this rational function is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        self.as_poly().and_then(|p| p.as_constant())
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.vars() == other.vars() && &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant() == Some(Rational::one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

/// The one variable both polynomials live in, if there is exactly one.
fn single_variable(a: &Poly, b: &Poly) -> Option<usize> {
    let arity = a.vars().len();
    let used: Vec<usize> = (0..arity)
        .filter(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
        .collect();
    (used.len() == 1).then(|| used[0])
}

fn to_dense(p: &Poly, v: usize) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); p.degree_in(v) as usize + 1];
    for (m, x) in p.terms() {
        c[m.exp(v) as usize] += x;
    }
    trim(c)
}

fn trim(mut c: Vec<Rational>) -> Vec<Rational> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

fn dense_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / lb;
        for (i, x) in b.iter().enumerate() {
            r[shift + i] -= &f * x;
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Monic gcd in one variable, as a polynomial over the original table.
pub fn univariate_gcd(a: &Poly, b: &Poly, v: usize) -> Poly {
    let mut x = to_dense(a, v);
    let mut y = to_dense(b, v);
    while !y.is_empty() {
        let r = dense_rem(&x, &y);
        x = y;
        y = r;
    }
    let vars = a.vars();
    if x.is_empty() {
        return Poly::one(vars);
    }
    let lead = x.last().unwrap().clone();
    let arity = vars.len();
    Poly::from_terms(
        vars,
        x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let mut e = vec![0u32; arity];
            e[v] = k as u32;
            (Monomial::from_exponents(&e), c / &lead)
        }),
    )
}

/// Multiplicity of the root `r` of a univariate polynomial in variable `v`.
pub fn root_multiplicity(p: &Poly, v: usize, r: &Rational) -> u32 {
    let vars = p.vars();
    let mut lin = vec![Rational::zero(); vars.len()];
    lin[v] = Rational::one();
    let factor = &Poly::linear(vars, &lin) - &Poly::constant(vars, r.clone());
    let mut q = p.clone();
    let mut k = 0;
    while !q.is_zero() {
        match q.div_exact(&factor).ok().flatten() {
            Some(next) => {
                q = next;
                k += 1;
            }
            None => break,
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    fn t() -> (Arc<VarTable>, Poly) {
        let vt = VarTable::uniform(&["t"]);
        let t = Poly::var(&vt, 0);
        (vt, t)
    }

    #[test]
    fn cancels_common_factor() {
        let xy = VarTable::uniform(&["x", "y"]);
        let x = Poly::var(&xy, 0);
        let y = Poly::var(&xy, 1);
        let f = RatFun::new(&x.pow(2) - &y.pow(2), &x - &y).unwrap();
        assert_eq!(f.as_poly(), Some(&x + &y));
        assert_eq!(f.denominator(), &Poly::one(&xy));
    }

    #[test]
    fn zero_numerator_normalizes() {
        let (vt, t) = t();
        let f = RatFun::new(Poly::zero(&vt), &t + &Poly::one(&vt)).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.denominator(), &Poly::one(&vt));
        assert_eq!(RatFun::new(t.clone(), Poly::zero(&vt)).unwrap_err(), NocError::ZeroDenominator);
    }

    #[test]
    fn series_sum_matches_cross_multiplication() {
        // (1+t)/(1-t) + t^2/(1-t)^2 == 1/(1-t)^2
        let (vt, t) = t();
        let one = Poly::one(&vt);
        let omt = &one - &t;
        let a = RatFun::new(&one + &t, omt.clone()).unwrap();
        let b = RatFun::new(t.pow(2), omt.pow(2)).unwrap();
        let s = a.try_add(&b).unwrap();
        // oracle: cross-multiplied numerator (1+t)(1-t) + t^2
        let oracle_num = &(&(&one + &t) * &omt) + &t.pow(2);
        assert_eq!(oracle_num, one);
        assert_eq!(s, RatFun::new(one.clone(), omt.pow(2)).unwrap());
        assert_eq!(s.numerator(), &one);
    }

    #[test]
    fn univariate_gcd_reduces_fully() {
        let (vt, t) = t();
        let one = Poly::one(&vt);
        let num = &(&t - &one) * &(&t + &one.scale(&int(2)));
        let den = &(&t - &one) * &(&t + &one.scale(&int(3)));
        let f = RatFun::new(num, den).unwrap();
        assert_eq!(f.numerator(), &(&t + &one.scale(&int(2))));
        assert_eq!(f.denominator(), &(&t + &one.scale(&int(3))));
    }

    #[test]
    fn multiplicity_of_double_root() {
        let (vt, x) = t();
        let one = Poly::one(&vt);
        let p = &(&x - &one.scale(&int(4))) * &(&x - &one).pow(2);
        assert_eq!(root_multiplicity(&p, 0, &int(1)), 2);
        assert_eq!(root_multiplicity(&p, 0, &int(4)), 1);
        assert_eq!(root_multiplicity(&p, 0, &int(0)), 0);
    }
}
