//! Triple wedges of conic monomials: the Plücker space and its dual.
//!
//! Coordinates are indexed by triples `i < j < k` of conic monomials in the
//! order x², xy, xz, y², yz, z². In the e-basis the basis vectors are wedges
//! of the monomials themselves; in the t-basis the mixed monomials are
//! doubled (`t₂ = 2xy`), so a monomial wedge `xy ∧ …` carries a factor ½ per
//! mixed factor when written in t-coordinates.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use super::net::{quad_index, QUAD_MONOMIALS};
use crate::error::{NocError, Result};
use crate::exactalg::rational::{rat, Rational};
use crate::exactalg::{Poly, VarTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    E,
    T,
}

impl Basis {
    fn prefix(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::T => 't',
        }
    }

    /// Factor relating monomial `a` to the basis vector: `m_a = s_a · b_a`.
    fn scale(self, a: usize) -> Rational {
        match self {
            Basis::T if [1, 2, 4].contains(&a) => rat(1, 2),
            _ => Rational::one(),
        }
    }
}

/// The 20 triples `i < j < k` of `0..6`, lexicographic.
pub fn triples() -> &'static [[usize; 3]; 20] {
    static T: OnceLock<[[usize; 3]; 20]> = OnceLock::new();
    T.get_or_init(|| {
        let mut out = [[0; 3]; 20];
        let mut n = 0;
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    out[n] = [i, j, k];
                    n += 1;
                }
            }
        }
        out
    })
}

pub fn triple_index(t: [usize; 3]) -> usize {
    triples().iter().position(|x| *x == t).expect("sorted distinct triple")
}

/// One-based label such as `"135"`.
pub fn triple_label(idx: usize) -> String {
    triples()[idx].iter().map(|i| char::from(b'1' + *i as u8)).collect()
}

/// Sorts three monomial indices; `None` if two coincide, else the sign.
fn sort_sign(mut t: [usize; 3]) -> Option<([usize; 3], i32)> {
    let mut sign = 1;
    for i in 0..3 {
        for j in 0..2 - i {
            if t[j] > t[j + 1] {
                t.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    (t[0] != t[1] && t[1] != t[2]).then_some((t, sign))
}

/// Polynomial ring in the 20 coordinate functions `t123, …, t456` (or
/// `e…`, `u…` with another prefix).
pub fn coordinate_table(prefix: char) -> Arc<VarTable> {
    let names: Vec<String> = (0..20).map(|i| format!("{prefix}{}", triple_label(i))).collect();
    VarTable::uniform(&names)
}

#[derive(Clone, PartialEq, Eq)]
pub struct Wedge3 {
    basis: Basis,
    c: [Rational; 20],
}

impl Wedge3 {
    pub fn zero(basis: Basis) -> Self {
        Wedge3 { basis, c: Default::default() }
    }

    pub fn from_coords(basis: Basis, c: [Rational; 20]) -> Self {
        Wedge3 { basis, c }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> &[Rational; 20] {
        &self.c
    }

    /// Coordinate at a one-based triple, e.g. `coord([1, 3, 5])`.
    pub fn coord(&self, t: [usize; 3]) -> Rational {
        self.c[triple_index(t.map(|i| i - 1))].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Wedge3) -> Result<Wedge3> {
        if self.basis != o.basis {
            return Err(NocError::Invalid("adding wedges in different bases".into()));
        }
        Ok(Wedge3 { basis: self.basis, c: std::array::from_fn(|i| &self.c[i] + &o.c[i]) })
    }

    pub fn scale(&self, k: &Rational) -> Wedge3 {
        Wedge3 { basis: self.basis, c: self.c.clone().map(|x| x * k) }
    }

    /// Builds a wedge from monomial-wedge terms `coef · m_a ∧ m_b ∧ m_c`
    /// (monomial indices in any order).
    pub fn from_monomial_wedges(basis: Basis, terms: &[(Rational, [usize; 3])]) -> Wedge3 {
        let mut w = Wedge3::zero(basis);
        for (k, t) in terms {
            if let Some((s, sign)) = sort_sign(*t) {
                let f: Rational = s.iter().map(|&a| basis.scale(a)).product();
                w.c[triple_index(s)] += k * f * Rational::from_integer(sign.into());
            }
        }
        w
    }

    /// Coefficients on the monomial wedges `m_i ∧ m_j ∧ m_k`, `i < j < k`.
    pub fn monomial_coords(&self) -> [Rational; 20] {
        std::array::from_fn(|i| {
            let f: Rational = triples()[i].iter().map(|&a| self.basis.scale(a)).product();
            &self.c[i] / f
        })
    }

    /// Parses sums of monomial wedges such as `-x^2 ∧ xz ∧ y^2 + 2 x^2 ∧ xy ∧ yz`
    /// (`∧` may also be written `/\`).
    pub fn parse(basis: Basis, s: &str) -> Result<Wedge3> {
        let bad = |why: &str| NocError::Parse(format!("wedge `{s}`: {why}"));
        let cleaned: String = s
            .replace("/\\", "∧")
            .chars()
            .map(|c| match c {
                '−' => '-',
                '²' => '2',
                c => c,
            })
            .filter(|c| !c.is_whitespace() && *c != '*' && *c != '^')
            .collect();
        let mut terms = Vec::new();
        let mut rest = cleaned.as_str();
        while !rest.is_empty() {
            let mut sign = Rational::one();
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r;
            } else if !terms.is_empty() {
                return Err(bad("expected + or -"));
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            let lead = term.find(|c: char| c.is_alphabetic()).ok_or_else(|| bad("empty term"))?;
            let coef = if lead == 0 {
                Rational::one()
            } else {
                crate::exactalg::rational::parse(&term[..lead])?
            };
            let factors: Vec<&str> = term[lead..].split('∧').collect();
            if factors.len() != 3 {
                return Err(bad("each term needs three factors"));
            }
            let mut t = [0; 3];
            for (slot, f) in t.iter_mut().zip(&factors) {
                *slot = parse_conic_monomial(f).ok_or_else(|| bad(&format!("factor `{f}`")))?;
            }
            terms.push((sign * coef, t));
        }
        if terms.is_empty() {
            return Err(bad("empty"));
        }
        Ok(Wedge3::from_monomial_wedges(basis, &terms))
    }

    /// Action of `E_ij` (one-based; replaces the `j`-th variable by the
    /// `i`-th) as a derivation, Leibniz over ∧.
    pub fn lie_act(&self, i: usize, j: usize) -> Wedge3 {
        let (i, j) = (i - 1, j - 1);
        let mono = self.monomial_coords();
        let mut terms = Vec::new();
        for (idx, c) in mono.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let t = triples()[idx];
            for slot in 0..3 {
                for (k, img) in conic_lie_image(t[slot], i, j) {
                    let mut nt = t;
                    nt[slot] = img;
                    terms.push((c * Rational::from_integer(k.into()), nt));
                }
            }
        }
        Wedge3::from_monomial_wedges(self.basis, &terms)
    }

    /// The wedge as a linear form in the coordinate functions of the other
    /// basis, over `coordinate_table`.
    pub fn as_linear_form(&self, table: &Arc<VarTable>) -> Poly {
        Poly::linear(table, &self.c)
    }
}

/// `E_ij` on a conic monomial: the images with multiplicity (zero-based).
fn conic_lie_image(a: usize, i: usize, j: usize) -> Vec<(i64, usize)> {
    let [p, q] = QUAD_MONOMIALS[a];
    let mut out = Vec::new();
    if p == j {
        out.push((1, quad_index(i, q)));
    }
    if q == j {
        out.push((1, quad_index(p, i)));
    }
    out
}

fn parse_conic_monomial(s: &str) -> Option<usize> {
    let mut exps = [0u32; 3];
    let cs: Vec<char> = s.chars().collect();
    let mut k = 0;
    while k < cs.len() {
        let v = "xyz".find(cs[k])?;
        k += 1;
        let mut e = 1;
        if k < cs.len() && cs[k].is_ascii_digit() {
            e = cs[k].to_digit(10)?;
            k += 1;
        }
        exps[v] += e;
    }
    if exps.iter().sum::<u32>() != 2 {
        return None;
    }
    let mut vs = Vec::new();
    for (v, &e) in exps.iter().enumerate() {
        vs.extend(std::iter::repeat(v).take(e as usize));
    }
    Some(quad_index(vs[0], vs[1]))
}

const MONO_NAMES: [&str; 6] = ["x^2", "xy", "xz", "y^2", "yz", "z^2"];

impl Wedge3 {
    /// The wedge as a sum of monomial wedges, `x^2∧xy∧xz` style.
    pub fn monomial_display(&self) -> String {
        let terms: Vec<(Rational, String)> = self
            .monomial_coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let t = triples()[i];
                (c.clone(), t.map(|a| MONO_NAMES[a]).join("∧"))
            })
            .collect();
        join_terms(&terms)
    }
}

fn join_terms(terms: &[(Rational, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (n, (c, name)) in terms.iter().enumerate() {
        let neg = *c < Rational::zero();
        let a = if neg { -c.clone() } else { c.clone() };
        if n == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() {
            s.push_str(&format!("{a}*"));
        }
        s.push_str(name);
    }
    s
}

impl fmt::Display for Wedge3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.basis.prefix();
        let terms: Vec<(Rational, String)> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), format!("{p}{}", triple_label(i))))
            .collect();
        write!(f, "{}", join_terms(&terms))
    }
}

impl fmt::Debug for Wedge3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Wedge3({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    #[test]
    fn triples_are_lexicographic() {
        assert_eq!(triples()[0], [0, 1, 2]);
        assert_eq!(triples()[19], [3, 4, 5]);
        assert_eq!(triple_label(triple_index([2, 3, 4])), "345");
    }

    #[test]
    fn t_scaling() {
        let w = Wedge3::parse(Basis::T, "-x^2 ∧ xz ∧ y^2 + x^2 ∧ xy ∧ yz").unwrap();
        assert_eq!(w.coord([1, 3, 4]), rat(-1, 2));
        assert_eq!(w.coord([1, 2, 5]), rat(1, 4));
        assert_eq!(w.to_string(), "1/4*t125 - 1/2*t134");
        let back = Wedge3::parse(Basis::T, &w.monomial_display()).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn wedge_sign_and_repeats() {
        let a = Wedge3::parse(Basis::E, "xz∧xy∧x^2").unwrap();
        assert_eq!(a.coord([1, 2, 3]), int(-1));
        assert!(Wedge3::parse(Basis::E, "xy∧xy∧z^2").unwrap().is_zero());
        assert!(Wedge3::parse(Basis::E, "x^3∧xy∧z^2").is_err());
    }

    #[test]
    fn lie_action_matches_displayed_example() {
        let w1 = Wedge3::parse(Basis::T, "x^2∧xy∧xz").unwrap();
        let expect = Wedge3::parse(Basis::T, "x^2∧xy∧z^2 - x^2∧xz∧yz").unwrap();
        assert_eq!(w1.lie_act(3, 1), expect);
        let expect2 = Wedge3::parse(Basis::T, "-x^2∧xz∧y^2 + x^2∧xy∧yz").unwrap();
        assert_eq!(w1.lie_act(2, 1), expect2);
    }
}
