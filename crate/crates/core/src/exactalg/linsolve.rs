//! Exact Gaussian elimination over the rationals on sparse rows.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::poly::{Monomial, Poly};
use super::rational::Rational;
use crate::error::{NocError, Result};

/// Sparse row: strictly increasing column indices, no zero entries.
pub type SparseRow = Vec<(usize, Rational)>;

#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// Affine family `particular + span(kernel)`.
    Family {
        particular: Vec<Rational>,
        kernel: Vec<Vec<Rational>>,
    },
    Inconsistent,
}

impl Solution {
    /// Dimension of the solution set; `None` when inconsistent.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            Solution::Unique(_) => Some(0),
            Solution::Family { kernel, .. } => Some(kernel.len()),
            Solution::Inconsistent => None,
        }
    }

    /// The unique solution, or the matching error.
    pub fn into_unique(self) -> Result<Vec<Rational>> {
        match self {
            Solution::Unique(x) => Ok(x),
            Solution::Family { kernel, .. } => Err(NocError::NonUnique(kernel.len())),
            Solution::Inconsistent => Err(NocError::Inconsistent),
        }
    }
}

/// `a - f*b` on sparse rows.
fn axpy(a: &SparseRow, f: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|x| x.0);
        let cb = b.get(j).map(|x| x.0);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = &a[i].1 - f * &b[j].1;
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, -(f * &b[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn get(row: &SparseRow, col: usize) -> Option<&Rational> {
    row.binary_search_by_key(&col, |x| x.0).ok().map(|k| &row[k].1)
}

/// Outcome of inserting one equation into an [`Echelon`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insert {
    NewPivot,
    Redundant,
    Inconsistent,
}

/// Incrementally maintained reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Echelon {
    unknowns: usize,
    /// pivot column -> (row with 1 at the pivot, rhs); rows are zero at every
    /// other pivot column.
    pivots: BTreeMap<usize, (SparseRow, Rational)>,
    inconsistent: bool,
}

impl Echelon {
    pub fn new(unknowns: usize) -> Self {
        Echelon { unknowns, pivots: BTreeMap::new(), inconsistent: false }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    pub fn insert(&mut self, mut row: SparseRow, mut rhs: Rational) -> Insert {
        row.retain(|(_, v)| !v.is_zero());
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0), "row columns not sorted");
        debug_assert!(row.iter().all(|(c, _)| *c < self.unknowns));
        let hits: Vec<(usize, Rational)> = row
            .iter()
            .filter(|(c, _)| self.pivots.contains_key(c))
            .cloned()
            .collect();
        for (c, f) in hits {
            let (prow, prhs) = &self.pivots[&c];
            row = axpy(&row, &f, prow);
            rhs -= &f * prhs;
        }
        let Some((pc, pv)) = row.first().cloned() else {
            if rhs.is_zero() {
                return Insert::Redundant;
            }
            self.inconsistent = true;
            return Insert::Inconsistent;
        };
        let inv = pv.recip();
        for x in row.iter_mut() {
            x.1 *= &inv;
        }
        rhs *= &inv;
        // clear the new pivot column from existing rows
        for (prow, prhs) in self.pivots.values_mut() {
            if let Some(f) = get(prow, pc).cloned() {
                *prow = axpy(prow, &f, &row);
                *prhs -= &f * &rhs;
            }
        }
        self.pivots.insert(pc, (row, rhs));
        Insert::NewPivot
    }

    pub fn solution(&self) -> Solution {
        if self.inconsistent {
            return Solution::Inconsistent;
        }
        let mut particular = vec![Rational::zero(); self.unknowns];
        for (&c, (_, rhs)) in &self.pivots {
            particular[c] = rhs.clone();
        }
        let free: Vec<usize> = (0..self.unknowns).filter(|c| !self.pivots.contains_key(c)).collect();
        if free.is_empty() {
            return Solution::Unique(particular);
        }
        let kernel = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.unknowns];
                v[f] = Rational::one();
                for (&c, (row, _)) in &self.pivots {
                    if let Some(x) = get(row, f) {
                        v[c] = -x.clone();
                    }
                }
                v
            })
            .collect();
        Solution::Family { particular, kernel }
    }
}

/// A system of linear equations `row . x = rhs`.
#[derive(Debug, Clone, Default)]
pub struct LinearSystem {
    unknowns: usize,
    rows: Vec<(SparseRow, Rational)>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem { unknowns, rows: Vec::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rows(&self) -> impl Iterator<Item = &(SparseRow, Rational)> {
        self.rows.iter()
    }

    pub fn push(&mut self, row: SparseRow, rhs: Rational) {
        self.rows.push((row, rhs));
    }

    pub fn push_dense(&mut self, coeffs: &[Rational], rhs: Rational) {
        assert_eq!(coeffs.len(), self.unknowns);
        let row = coeffs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        self.rows.push((row, rhs));
    }

    /// Exact solution set; see [`super::modular::solve`].
    pub fn solve(&self) -> Solution {
        super::modular::solve(self.unknowns, &self.rows)
    }

    /// Solution set by exact elimination only.
    pub fn solve_exact(&self) -> Solution {
        let mut ech = Echelon::new(self.unknowns);
        for (row, rhs) in &self.rows {
            if ech.insert(row.clone(), rhs.clone()) == Insert::Inconsistent {
                return Solution::Inconsistent;
            }
        }
        ech.solution()
    }

    pub fn extend(&mut self, other: LinearSystem) {
        assert_eq!(self.unknowns, other.unknowns);
        self.rows.extend(other.rows);
    }
}

/// Builds the system `sum x_k * candidates[k] = target` by matching monomial
/// coefficients.
pub fn span_system(candidates: &[Poly], target: &Poly) -> Result<LinearSystem> {
    let mut by_mono: HashMap<&Monomial, SparseRow> = HashMap::new();
    for (k, c) in candidates.iter().enumerate() {
        if c.vars() != target.vars() {
            return Err(NocError::TableMismatch("candidate vs target".into()));
        }
        for (m, v) in c.terms() {
            by_mono.entry(m).or_default().push((k, v.clone()));
        }
    }
    let mut sys = LinearSystem::new(candidates.len());
    let mut monos: Vec<&Monomial> = by_mono.keys().copied().collect();
    for (m, _) in target.terms() {
        if !by_mono.contains_key(m) {
            monos.push(m);
        }
    }
    monos.sort();
    for m in monos {
        let row = by_mono.remove(m).unwrap_or_default();
        sys.push(row, target.coefficient(m));
    }
    Ok(sys)
}

/// Rank of a family of polynomials viewed as vectors of coefficients.
pub fn poly_rank(polys: &[Poly]) -> usize {
    // transpose: each polynomial is a row over monomial columns
    let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let n = index.len();
            index.entry(m).or_insert(n);
        }
    }
    let mut ech = Echelon::new(index.len());
    for p in polys {
        let mut row: SparseRow = p.terms().map(|(m, v)| (index[m], v.clone())).collect();
        row.sort_by_key(|x| x.0);
        ech.insert(row, Rational::zero());
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::poly::VarTable;
    use crate::exactalg::rational::int;

    #[test]
    fn slice_equation_for_cuspidal_orbit() {
        // A(3a+3b) + B(7a+5b) = 4a-4b
        let ab = VarTable::uniform(&["a", "b"]);
        let lin = |x: i64, y: i64| Poly::linear(&ab, &[int(x), int(y)]);
        let sys = span_system(&[lin(3, 3), lin(7, 5)], &lin(4, -4)).unwrap();
        assert_eq!(sys.solve(), Solution::Unique(vec![int(-8), int(4)]));
    }

    #[test]
    fn empty_system_has_full_kernel() {
        let sys = LinearSystem::new(1);
        assert_eq!(sys.solve().dimension(), Some(1));
    }

    #[test]
    fn contradictory_equations() {
        let mut sys = LinearSystem::new(1);
        sys.push(vec![(0, int(1))], int(1));
        sys.push(vec![(0, int(1))], int(2));
        assert_eq!(sys.solve(), Solution::Inconsistent);
    }

    #[test]
    fn kernel_vectors_solve_homogeneous_system() {
        let mut sys = LinearSystem::new(4);
        sys.push_dense(&[int(1), int(2), int(0), int(-1)], int(3));
        sys.push_dense(&[int(0), int(1), int(1), int(1)], int(1));
        sys.push_dense(&[int(1), int(3), int(1), int(0)], int(4));
        let Solution::Family { particular, kernel } = sys.solve() else {
            panic!("expected a family");
        };
        assert_eq!(kernel.len(), 2);
        for (row, rhs) in &sys.rows {
            let dot = |v: &[Rational]| row.iter().map(|(c, a)| a * &v[*c]).sum::<Rational>();
            assert_eq!(&dot(&particular), rhs);
            for k in &kernel {
                assert!(dot(k).is_zero());
            }
        }
    }
}
