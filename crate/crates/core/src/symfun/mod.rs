//! Symmetric functions: elementary symmetric polynomials, quotient Chern
//! classes, Schur determinants and expansion in the Schur basis.
//!
//! Doubly symmetric polynomials in roots `α_1..α_m`, `β_1..β_p` are handled in
//! elementary coordinates `sa_i = σ_i(α)`, `sb_j = σ_j(β)`; the two
//! descriptions are related by [`RootContext::to_roots`] and
//! [`RootContext::from_roots`].

mod partition;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{NocError, Result};
use crate::exactalg::linsolve::span_system;
use crate::exactalg::rational::{self, Rational};
use crate::exactalg::{Poly, Solution, VarTable};

pub use partition::Partition;

/// `[σ_0, σ_1, ..., σ_n]` of `vals`, all over `table`.
pub fn elementary(table: &Arc<VarTable>, vals: &[Poly]) -> Vec<Poly> {
    let mut e = vec![Poly::one(table)];
    for v in vals {
        e.push(Poly::zero(table));
        for k in (1..e.len()).rev() {
            let t = &e[k - 1] * v;
            e[k] = &e[k] + &t;
        }
    }
    e
}

/// `σ_i(vals)`; `vals` must be non-empty so the table is known.
pub fn elem_sym(i: usize, vals: &[Poly]) -> Result<Poly> {
    let Some(first) = vals.first() else {
        return Err(NocError::Invalid("elementary symmetric polynomial of no values".into()));
    };
    if i > vals.len() {
        return Err(NocError::OutOfRange { index: i, max: vals.len() });
    }
    Ok(elementary(first.vars(), vals).swap_remove(i))
}

/// Degree-`0..=max` parts of `num(t) / den(t)` for graded pieces
/// `num[k]`, `den[k]` (with `den[0] = 1`).
pub fn series_quotient(num: &[Poly], den: &[Poly], max: usize) -> Vec<Poly> {
    let table = num[0].vars().clone();
    let mut inv = vec![Poly::one(&table)];
    for n in 1..=max {
        let mut s = Poly::zero(&table);
        for k in 1..=n.min(den.len() - 1) {
            s = &s + &(&den[k] * &inv[n - k]);
        }
        inv.push(-s);
    }
    (0..=max)
        .map(|i| {
            let mut s = Poly::zero(&table);
            for k in 0..=i.min(num.len() - 1) {
                s = &s + &(&num[k] * &inv[i - k]);
            }
            s
        })
        .collect()
}

/// Determinant by Laplace expansion along rows, memoized on used columns.
pub fn det(mat: &[Vec<Poly>], table: &Arc<VarTable>) -> Poly {
    let n = mat.len();
    let mut memo: HashMap<u32, Poly> = HashMap::new();
    fn go(mat: &[Vec<Poly>], mask: u32, memo: &mut HashMap<u32, Poly>, table: &Arc<VarTable>) -> Poly {
        let row = mask.count_ones() as usize;
        if row == mat.len() {
            return Poly::one(table);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut acc = Poly::zero(table);
        let mut free_before = 0;
        for j in 0..mat.len() {
            if mask & (1 << j) != 0 {
                continue;
            }
            if !mat[row][j].is_zero() {
                let minor = go(mat, mask | (1 << j), memo, table);
                let t = &mat[row][j] * &minor;
                acc = if free_before % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            free_before += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    assert!(n < 32 && mat.iter().all(|r| r.len() == n), "square matrix expected");
    go(mat, 0, &mut memo, table)
}

/// Root and elementary-coordinate tables for `m` source and `p` target roots.
#[derive(Debug, Clone)]
pub struct RootContext {
    m: usize,
    p: usize,
    roots: Arc<VarTable>,
    elem: Arc<VarTable>,
}

impl RootContext {
    pub fn new(m: usize, p: usize) -> Result<Self> {
        if m == 0 || p == 0 {
            return Err(NocError::Invalid("root context needs m, p >= 1".into()));
        }
        let roots = VarTable::new(
            (1..=m)
                .map(|i| (format!("alpha{i}"), 1))
                .chain((1..=p).map(|j| (format!("beta{j}"), 1))),
        )?;
        let elem = VarTable::new(
            (1..=m)
                .map(|i| (format!("sa{i}"), i as u32))
                .chain((1..=p).map(|j| (format!("sb{j}"), j as u32))),
        )?;
        Ok(RootContext { m, p, roots, elem })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn roots(&self) -> &Arc<VarTable> {
        &self.roots
    }

    pub fn elem(&self) -> &Arc<VarTable> {
        &self.elem
    }

    /// `α_i`, 1-based.
    pub fn alpha(&self, i: usize) -> Poly {
        Poly::var(&self.roots, i - 1)
    }

    /// `β_j`, 1-based.
    pub fn beta(&self, j: usize) -> Poly {
        Poly::var(&self.roots, self.m + j - 1)
    }

    /// `σ_i(α)` in elementary coordinates; `i = 0` gives 1.
    pub fn sa(&self, i: usize) -> Poly {
        match i {
            0 => Poly::one(&self.elem),
            i if i <= self.m => Poly::var(&self.elem, i - 1),
            _ => Poly::zero(&self.elem),
        }
    }

    /// `σ_j(β)` in elementary coordinates; `j = 0` gives 1.
    pub fn sb(&self, j: usize) -> Poly {
        match j {
            0 => Poly::one(&self.elem),
            j if j <= self.p => Poly::var(&self.elem, self.m + j - 1),
            _ => Poly::zero(&self.elem),
        }
    }

    /// Expands elementary coordinates into roots.
    pub fn to_roots(&self, p: &Poly) -> Result<Poly> {
        let alphas: Vec<Poly> = (1..=self.m).map(|i| self.alpha(i)).collect();
        let betas: Vec<Poly> = (1..=self.p).map(|j| self.beta(j)).collect();
        let ea = elementary(&self.roots, &alphas);
        let eb = elementary(&self.roots, &betas);
        let images: Vec<Poly> = ea[1..].iter().chain(&eb[1..]).cloned().collect();
        p.substitute(&self.roots, &images)
    }

    /// Rewrites a polynomial symmetric in the α's and in the β's in
    /// elementary coordinates.
    pub fn from_roots(&self, p: &Poly) -> Result<Poly> {
        let mixed = VarTable::new(
            (1..=self.m)
                .map(|i| (format!("sa{i}"), i as u32))
                .chain((1..=self.p).map(|j| (format!("beta{j}"), 1))),
        )?;
        let alpha_block: Vec<usize> = (0..self.m).collect();
        let sa_names: Vec<String> = (1..=self.m).map(|i| format!("sa{i}")).collect();
        let step = symmetric_reduce(p, &alpha_block, &mixed, &sa_names)?;
        let beta_block: Vec<usize> = (self.m..self.m + self.p).collect();
        let sb_names: Vec<String> = (1..=self.p).map(|j| format!("sb{j}")).collect();
        symmetric_reduce(&step, &beta_block, &self.elem, &sb_names)
    }

    /// Quotient classes `c_0..c_max` in elementary coordinates: graded pieces
    /// of `∏(1+β_j) / ∏(1+α_i)`.
    pub fn quotient_classes(&self, max: usize) -> Vec<Poly> {
        let num: Vec<Poly> = (0..=self.p).map(|j| self.sb(j)).collect();
        let den: Vec<Poly> = (0..=self.m).map(|i| self.sa(i)).collect();
        series_quotient(&num, &den, max)
    }

    /// Dual classes `e_0..e_max`: graded pieces of `∏(1-α_i) / ∏(1-β_j)`.
    pub fn dual_classes(&self, max: usize) -> Vec<Poly> {
        let sign = |k: usize| if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        let num: Vec<Poly> = (0..=self.m).map(|i| self.sa(i).scale(&sign(i))).collect();
        let den: Vec<Poly> = (0..=self.p).map(|j| self.sb(j).scale(&sign(j))).collect();
        series_quotient(&num, &den, max)
    }

    /// `c_i` expanded in roots.
    pub fn quotient_chern(&self, i: usize) -> Result<Poly> {
        self.to_roots(&self.quotient_classes(i)[i])
    }

    /// Schur class `Δ_λ` in elementary coordinates.
    pub fn schur_elem(&self, lambda: &Partition) -> Poly {
        SchurTable::new(self, lambda.size() as usize + lambda.len().max(lambda.part(0) as usize))
            .schur(lambda)
    }

    /// Schur class `Δ_λ = det(c_{λ_i+j-i})` expanded in roots.
    pub fn schur(&self, lambda: &Partition) -> Result<Poly> {
        self.to_roots(&self.schur_elem(lambda))
    }

    /// Partitions of `d` indexing the Schur classes that can be nonzero.
    pub fn hook_partitions(&self, d: u32) -> Vec<Partition> {
        Partition::all_of(d)
            .into_iter()
            .filter(|l| l.in_hook(self.p, self.m as u32))
            .collect()
    }

    /// Expands a polynomial in elementary coordinates in the Schur basis.
    pub fn expand_elem(&self, target: &Poly) -> Result<SchurCombo> {
        if target.is_zero() {
            return Ok(SchurCombo::default());
        }
        let d = match target.weighted_degree() {
            crate::exactalg::WeightedDegree::Homogeneous(d) => d,
            crate::exactalg::WeightedDegree::Zero => 0,
            crate::exactalg::WeightedDegree::Inhomogeneous => {
                return Err(NocError::Invalid("Schur expansion of an inhomogeneous class".into()))
            }
        };
        let cands = self.hook_partitions(d);
        let table = SchurTable::new(self, 2 * d as usize + 1);
        let polys: Vec<Poly> = cands.iter().map(|l| table.schur(l)).collect();
        // a unique solution certifies that the candidates are independent
        let x = match span_system(&polys, target)?.solve() {
            Solution::Unique(x) => x,
            Solution::Inconsistent => return Err(NocError::NotInSpan),
            Solution::Family { kernel, .. } => return Err(NocError::NonUnique(kernel.len())),
        };
        SchurCombo::from_terms(cands.into_iter().zip(x))
    }

    /// Expands a doubly symmetric root polynomial in the Schur basis.
    pub fn schur_expand(&self, p: &Poly) -> Result<SchurCombo> {
        self.expand_elem(&self.from_roots(p)?)
    }

    /// `Σ x_λ Δ_λ` in elementary coordinates.
    pub fn combo_to_elem(&self, combo: &SchurCombo) -> Poly {
        let max = combo.terms.keys().map(|l| (l.size() as usize) * 2 + 1).max().unwrap_or(1);
        let table = SchurTable::new(self, max);
        combo
            .terms
            .iter()
            .map(|(l, x)| table.schur(l).scale(x))
            .fold(Poly::zero(&self.elem), |a, b| &a + &b)
    }
}

/// Precomputed quotient and dual classes for repeated Schur evaluation.
struct SchurTable<'a> {
    ctx: &'a RootContext,
    c: Vec<Poly>,
    e: Vec<Poly>,
}

impl<'a> SchurTable<'a> {
    fn new(ctx: &'a RootContext, max: usize) -> Self {
        SchurTable { ctx, c: ctx.quotient_classes(max), e: ctx.dual_classes(max) }
    }

    fn entry(classes: &[Poly], k: i64, table: &Arc<VarTable>) -> Poly {
        if k < 0 {
            Poly::zero(table)
        } else {
            classes[k as usize].clone()
        }
    }

    /// Jacobi–Trudi in whichever of `λ`, `λ'` gives the smaller determinant.
    fn schur(&self, lambda: &Partition) -> Poly {
        let table = &self.ctx.elem;
        let conj = lambda.conjugate();
        let (shape, classes) = if conj.len() < lambda.len() {
            (&conj, &self.e)
        } else {
            (lambda, &self.c)
        };
        let n = shape.len();
        let mat: Vec<Vec<Poly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Self::entry(classes, shape.part(i) as i64 + j as i64 - i as i64, table))
                    .collect()
            })
            .collect();
        det(&mat, table)
    }
}

/// Rewrites `p`, symmetric in the source variables `block`, with the block
/// replaced by its elementary symmetric polynomials named `elem_names` in
/// `target`; the remaining variables are matched by name.
pub fn symmetric_reduce(
    p: &Poly,
    block: &[usize],
    target: &Arc<VarTable>,
    elem_names: &[String],
) -> Result<Poly> {
    let src = p.vars();
    let n = block.len();
    let others: Vec<usize> = (0..src.len()).filter(|i| !block.contains(i)).collect();
    let other_pos: Vec<usize> = others
        .iter()
        .map(|&i| {
            target
                .index_of(src.name(i))
                .ok_or_else(|| NocError::MissingImage(src.name(i).to_string()))
        })
        .collect::<Result<_>>()?;
    let elem_pos: Vec<usize> = elem_names
        .iter()
        .map(|s| target.index_of(s).ok_or_else(|| NocError::MissingImage(s.clone())))
        .collect::<Result<_>>()?;

    // key: block exponents then other exponents; lexicographic max is last
    let mut work: BTreeMap<Vec<u8>, Rational> = BTreeMap::new();
    for (m, c) in p.terms() {
        let key: Vec<u8> = block
            .iter()
            .chain(&others)
            .map(|&i| m.exp(i) as u8)
            .collect();
        work.insert(key, c.clone());
    }

    let btable = VarTable::uniform(&(0..n).map(|i| format!("x{i}")).collect::<Vec<_>>());
    let bvars: Vec<Poly> = (0..n).map(|i| Poly::var(&btable, i)).collect();
    let sig = elementary(&btable, &bvars);
    let mut cache: HashMap<Vec<u32>, Vec<(Vec<u8>, Rational)>> = HashMap::new();
    let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    let block_names: Vec<&str> = block.iter().map(|&i| src.name(i)).collect();

    while let Some((key, c)) = work.pop_last() {
        let e = &key[..n];
        if e.windows(2).any(|w| w[0] < w[1]) {
            return Err(NocError::NotSymmetric(block_names.join(",")));
        }
        let powers: Vec<u32> = (0..n)
            .map(|k| e[k] as u32 - if k + 1 < n { e[k + 1] as u32 } else { 0 })
            .collect();
        let expansion = cache.entry(powers.clone()).or_insert_with(|| {
            let prod = powers
                .iter()
                .enumerate()
                .fold(Poly::one(&btable), |acc, (k, &pw)| &acc * &sig[k + 1].pow(pw));
            prod.terms()
                .map(|(m, x)| ((0..n).map(|i| m.exp(i) as u8).collect(), x.clone()))
                .collect()
        });
        for (bm, bc) in expansion.iter() {
            if bm.as_slice() == e {
                debug_assert!(bc.is_one());
                continue;
            }
            let mut k2 = bm.clone();
            k2.extend_from_slice(&key[n..]);
            let delta = &c * bc;
            let entry = work.entry(k2).or_insert_with(Rational::zero);
            *entry -= delta;
            if entry.is_zero() {
                let k2: Vec<u8> = bm.iter().chain(&key[n..]).copied().collect();
                work.remove(&k2);
            }
        }
        let mut texp = vec![0u32; target.len()];
        for (k, &pw) in powers.iter().enumerate() {
            texp[elem_pos[k]] += pw;
        }
        for (j, &pos) in other_pos.iter().enumerate() {
            texp[pos] += key[n + j] as u32;
        }
        let slot = out.entry(texp).or_insert_with(Rational::zero);
        *slot += c;
    }
    Ok(Poly::from_terms(
        target,
        out.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (crate::exactalg::Monomial::from_exponents(&e), c)),
    ))
}

/// Finite rational combination of Schur classes of one common degree.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SchurCombo {
    terms: BTreeMap<Partition, Rational>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SchurComboJson {
    pub terms: Vec<SchurTermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SchurTermJson {
    pub lambda: Vec<u32>,
    pub coef: String,
}

impl SchurCombo {
    pub fn from_terms(it: impl IntoIterator<Item = (Partition, Rational)>) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (l, x) in it {
            if x.is_zero() {
                continue;
            }
            let slot: &mut Rational = terms.entry(l).or_default();
            *slot += x;
        }
        terms.retain(|_, x: &mut Rational| !x.is_zero());
        let mut sizes = terms.keys().map(|l: &Partition| l.size());
        if let Some(s) = sizes.next() {
            if sizes.any(|t| t != s) {
                return Err(NocError::Invalid("Schur combination of mixed degree".into()));
            }
        }
        Ok(SchurCombo { terms })
    }

    /// Parses `"8*544111 + 4*444211"`-style lists of `coef*partition`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for part in s.split('+') {
            let (c, l) = part
                .split_once('*')
                .ok_or_else(|| NocError::Parse(format!("Schur term `{part}`")))?;
            out.push((Partition::parse(l)?, rational::parse(c)?));
        }
        Self::from_terms(out)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, l: &Partition) -> Rational {
        self.terms.get(l).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree `|λ|`, if non-empty.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|l| l.size())
    }

    pub fn scale(&self, k: &Rational) -> SchurCombo {
        Self::from_terms(self.terms.iter().map(|(l, x)| (l.clone(), x * k))).unwrap()
    }

    /// Sum of two combinations; errors if the degrees differ.
    pub fn add(&self, o: &SchurCombo) -> Result<SchurCombo> {
        Self::from_terms(self.terms.iter().chain(&o.terms).map(|(l, x)| (l.clone(), x.clone())))
    }

    pub fn to_json(&self) -> SchurComboJson {
        SchurComboJson {
            terms: self
                .terms
                .iter()
                .map(|(l, x)| SchurTermJson { lambda: l.parts().to_vec(), coef: rational::to_wire(x) })
                .collect(),
        }
    }

    pub fn from_json(j: &SchurComboJson) -> Result<Self> {
        let terms: Vec<(Partition, Rational)> = j
            .terms
            .iter()
            .map(|t| Ok((Partition::new(t.lambda.clone())?, rational::parse(&t.coef)?)))
            .collect::<Result<_>>()?;
        Self::from_terms(terms)
    }
}

impl fmt::Display for SchurCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, x)) in self.terms.iter().enumerate() {
            let neg = x < &Rational::zero();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let a = if neg { -x.clone() } else { x.clone() };
            if !a.is_one() {
                write!(f, "{}*", rational::to_display(&a))?;
            }
            write!(f, "Δ({l})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurCombo({self})")
    }
}
