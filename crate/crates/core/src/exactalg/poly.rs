//! Sparse multivariate polynomials with rational coefficients over a named,
//! weighted variable table.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{self, denominator_lcm, numerator_gcd, Rational};
use crate::error::{NocError, Result};

/// Ordered list of named variables, each with a positive grading weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VarTable {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Result<Arc<Self>> {
        let (names, weights): (Vec<String>, Vec<u32>) =
            vars.into_iter().map(|(n, w)| (n.into(), w)).unzip();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(NocError::Invalid(format!("duplicate variable `{n}`")));
            }
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(NocError::Invalid("variable weights must be >= 1".into()));
        }
        Ok(Arc::new(Self { names, weights }))
    }

    /// All weights 1.
    pub fn uniform<S: AsRef<str>>(names: &[S]) -> Arc<Self> {
        Self::new(names.iter().map(|n| (n.as_ref().to_string(), 1)))
            .expect("uniform table with duplicate names")
    }

    pub fn empty() -> Arc<Self> {
        Arc::new(Self { names: vec![], weights: vec![] })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exponent vector. Ordered graded-lexicographically (total degree first,
/// then lex with the first variable most significant), which is a monomial
/// order and drives exact division.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(
            exps.iter()
                .map(|&e| u8::try_from(e).expect("exponent exceeds 255"))
                .collect(),
        )
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i] as u32
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, table: &VarTable) -> u32 {
        self.0
            .iter()
            .zip(table.weights())
            .map(|(&e, &w)| e as u32 * w)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Result of [`Poly::weighted_degree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightedDegree {
    Homogeneous(u32),
    Inhomogeneous,
    /// The zero polynomial is homogeneous of every degree.
    Zero,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Arc<VarTable>,
    terms: BTreeMap<Monomial, Rational>,
}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Poly {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Arc<VarTable>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn var(vars: &Arc<VarTable>, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut e = vec![0u32; vars.len()];
        e[i] = 1;
        Self::monomial(vars, &e, Rational::one())
    }

    pub fn var_named(vars: &Arc<VarTable>, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| NocError::Invalid(format!("no variable `{name}`")))?;
        Ok(Self::var(vars, i))
    }

    pub fn monomial(vars: &Arc<VarTable>, exps: &[u32], c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector arity");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::from_exponents(exps), c);
        }
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(vars: &Arc<VarTable>, coeffs: &[Rational]) -> Self {
        assert_eq!(coeffs.len(), vars.len());
        let mut p = Self::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u8; vars.len()];
                e[i] = 1;
                p.terms.insert(Monomial(e), c.clone());
            }
        }
        p
    }

    pub fn from_terms(
        vars: &Arc<VarTable>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "exponent vector arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficient_of(&self, exps: &[u32]) -> Rational {
        self.coefficient(&Monomial::from_exponents(exps))
    }

    /// The value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Leading term under the graded-lex storage order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_table(&self, other: &Poly) -> Result<()> {
        if same_table(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(NocError::TableMismatch(format!(
                "[{}] vs [{}]",
                self.vars.names().join(","),
                other.vars.names().join(",")
            )))
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_table(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.vars));
        }
        // multiply integer multiples, then divide once per term
        let (da, ia) = self.integer_form();
        let (db, ib) = other.integer_form();
        let den = &da * &db;
        let unit = den.is_one();
        let cap = self.len().saturating_mul(other.len()).min(1 << 20);
        let small = ia.iter().chain(&ib).all(|(_, c)| c.bits() <= 62);
        let mut terms = BTreeMap::new();
        if small {
            let mut acc: HashMap<Monomial, i128> = HashMap::with_capacity(cap);
            let mut overflow = false;
            'outer: for (ma, ca) in &ia {
                let ca = ca.to_i64().unwrap() as i128;
                for (mb, cb) in &ib {
                    let c = ca * cb.to_i64().unwrap() as i128;
                    let e = acc.entry(ma.mul(mb)).or_insert(0);
                    match e.checked_add(c) {
                        Some(v) if v.unsigned_abs() < 1u128 << 125 => *e = v,
                        _ => {
                            overflow = true;
                            break 'outer;
                        }
                    }
                }
            }
            if !overflow {
                for (m, c) in acc {
                    if c != 0 {
                        terms.insert(m, if unit { Rational::from_integer(BigInt::from(c)) } else { Rational::new(BigInt::from(c), den.clone()) });
                    }
                }
                return Ok(Poly { vars: self.vars.clone(), terms });
            }
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(cap);
        for (ma, ca) in &ia {
            for (mb, cb) in &ib {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        for (m, c) in acc {
            if !c.is_zero() {
                terms.insert(m, if unit { Rational::from_integer(c) } else { Rational::new(c, den.clone()) });
            }
        }
        Ok(Poly { vars: self.vars.clone(), terms })
    }

    /// `(d, terms)` with `self = terms / d`, integer coefficients and `d` the
    /// lcm of the denominators.
    fn integer_form(&self) -> (BigInt, Vec<(&Monomial, BigInt)>) {
        let d = super::rational::denominator_lcm(self.terms.values());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let n = if d.is_one() { c.numer().clone() } else { c.numer() * (&d / c.denom()) };
                (m, n)
            })
            .collect();
        (d, terms)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn weighted_degree(&self) -> WeightedDegree {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(&self.vars));
        match degs.next() {
            None => WeightedDegree::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    WeightedDegree::Homogeneous(d)
                } else {
                    WeightedDegree::Inhomogeneous
                }
            }
        }
    }

    /// Part of weighted degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(&self.vars) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest exponent of variable `i` appearing in any term.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                out.add_term(m2, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len(), "evaluation point arity");
        let mut cache: Vec<Vec<Rational>> = point.iter().map(|x| vec![Rational::one(), x.clone()]).collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut cache[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &point[i];
                    pw.push(next);
                }
                t *= &pw[e as usize];
            }
            total += t;
        }
        total
    }

    /// Composes with `images[i]` substituted for variable `i`. All images must
    /// share `target`.
    pub fn substitute(&self, target: &Arc<VarTable>, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.vars.len() {
            let missing = self
                .vars
                .names()
                .get(images.len())
                .cloned()
                .unwrap_or_else(|| "?".into());
            return Err(NocError::MissingImage(missing));
        }
        for img in images {
            if !same_table(img.vars(), target) {
                return Err(NocError::TableMismatch("substitution image table".into()));
            }
        }
        if let Some(p) = super::packed::substitute(self, target, images) {
            return Ok(p);
        }
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(target), p.clone()])
            .collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &images[i];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            for (tm, tc) in t.terms {
                acc.entry(tm).and_modify(|x| *x += &tc).or_insert(tc);
            }
        }
        Ok(Poly {
            vars: target.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Substitution keyed by variable name. Every variable of `self` that
    /// actually occurs must have an image; unused variables may be omitted.
    pub fn substitute_named(&self, target: &Arc<VarTable>, map: &[(&str, Poly)]) -> Result<Poly> {
        let mut images = Vec::with_capacity(self.vars.len());
        for i in 0..self.vars.len() {
            let name = self.vars.name(i);
            match map.iter().find(|(n, _)| *n == name) {
                Some((_, p)) => images.push(p.clone()),
                None if self.degree_in(i) == 0 => images.push(Poly::zero(target)),
                None => return Err(NocError::MissingImage(name.to_string())),
            }
        }
        self.substitute(target, &images)
    }

    /// Re-expresses over a table whose names include all of ours.
    pub fn embed(&self, target: &Arc<VarTable>) -> Result<Poly> {
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| NocError::MissingImage(n.clone())))
            .collect::<Result<_>>()?;
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u8; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] = x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Applies a permutation of variables: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Poly {
        assert_eq!(perm.len(), self.vars.len());
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut e = vec![0u8; m.0.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[perm[i]] = x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Option<Poly>> {
        self.check_table(d)?;
        let Some((dm, dc)) = d.terms.last_key_value() else {
            return Err(NocError::ZeroDenominator);
        };
        let mut r = self.clone();
        let mut q = Poly::zero(&self.vars);
        while let Some((rm, rc)) = r.terms.last_key_value() {
            if !dm.divides(rm) {
                return Ok(None);
            }
            let qm = rm.div(dm);
            let qc = rc / dc;
            for (m, c) in &d.terms {
                r.add_term(m.mul(&qm), -(c * &qc));
            }
            q.terms.insert(qm, qc);
        }
        Ok(Some(q))
    }

    /// Positive rational `c` with `self / c` having coprime integer coefficients.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let den = denominator_lcm(self.terms.values());
        let cleared: Vec<Rational> = self
            .terms
            .values()
            .map(|c| c * Rational::from_integer(den.clone()))
            .collect();
        let g = numerator_gcd(cleared.iter()).abs();
        Rational::new(g, den)
    }

    /// Leading term under the display order (weighted degree, then reverse
    /// variable significance); used for sign normalization.
    pub fn display_leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| display_cmp(&self.vars, a.0, b.0))
    }

    /// Strips rational content and makes the display-leading coefficient positive.
    pub fn primitive(&self) -> (Rational, Poly) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut c = self.content();
        if self.display_leading().unwrap().1.is_negative() {
            c = -c;
        }
        let inv = c.recip();
        (c, self.scale(&inv))
    }

    /// Terms in canonical display order (descending).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| display_cmp(&self.vars, b.0, a.0));
        v
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.names().to_vec(),
            weights: Some(self.vars.weights().to_vec()),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| TermJson {
                    exp: m.0.iter().map(|&e| e as u32).collect(),
                    coef: rational::to_wire(c),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Poly> {
        let weights = match &j.weights {
            Some(w) if w.len() == j.vars.len() => w.clone(),
            Some(_) => return Err(NocError::Parse("weights/vars length mismatch".into())),
            None => vec![1; j.vars.len()],
        };
        let table = VarTable::new(j.vars.iter().cloned().zip(weights))?;
        let mut p = Poly::zero(&table);
        for t in &j.terms {
            if t.exp.len() != table.len() {
                return Err(NocError::Parse("exponent vector arity".into()));
            }
            p.add_term(Monomial::from_exponents(&t.exp), rational::parse(&t.coef)?);
        }
        Ok(p)
    }
}

/// Graded (by weight) then lex with later variables more significant.
fn display_cmp(vars: &VarTable, a: &Monomial, b: &Monomial) -> Ordering {
    a.weighted_degree(vars)
        .cmp(&b.weighted_degree(vars))
        .then_with(|| a.0.iter().rev().cmp(b.0.iter().rev()))
}

/// JSON encoding `{"vars": [...], "terms": [{"exp": [...], "coef": "n/d"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

fn fmt_monomial(vars: &VarTable, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono = fmt_monomial(&self.vars, m);
            if mono.is_empty() {
                write!(f, "{}", rational::to_display(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", rational::to_display(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

// Operator forms panic on a table mismatch; the `try_*` forms report it.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("Poly + Poly")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("Poly - Poly")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("Poly * Poly")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self.check_table(&rhs).expect("Poly + Poly");
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self.check_table(&rhs).expect("Poly - Poly");
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(mut iter: I) -> Poly {
        let first = iter.next().expect("sum of an empty polynomial sequence");
        iter.fold(first, |a, b| a + b)
    }
}

/// Product of a non-empty sequence.
pub fn product(mut it: impl Iterator<Item = Poly>) -> Poly {
    let first = it.next().expect("product of an empty polynomial sequence");
    it.fold(first, |a, b| &a * &b)
}
