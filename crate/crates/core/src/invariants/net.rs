//! Nets of conics: three ternary quadratic forms.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{NocError, Result};
use crate::exactalg::linsolve::Echelon;
use crate::exactalg::rational::{self, int, Rational};
use crate::exactalg::{Poly, VarTable};

/// Quadratic monomials in coefficient order: x², xy, xz, y², yz, z².
pub const QUAD_MONOMIALS: [[usize; 2]; 6] = [[0, 0], [0, 1], [0, 2], [1, 1], [1, 2], [2, 2]];

const XYZ: [char; 3] = ['x', 'y', 'z'];

/// Position of `x_i x_j` in [`QUAD_MONOMIALS`].
pub fn quad_index(i: usize, j: usize) -> usize {
    let (a, b) = if i <= j { (i, j) } else { (j, i) };
    QUAD_MONOMIALS.iter().position(|m| *m == [a, b]).unwrap()
}

/// A net with coefficients in a polynomial ring; rational nets use the empty
/// table. Row `k` holds the coefficients of the `k`-th quadric.
#[derive(Clone, PartialEq, Eq)]
pub struct Net {
    vars: Arc<VarTable>,
    q: [[Poly; 6]; 3],
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct NetJson {
    pub quadrics: Vec<Vec<String>>,
}

impl Net {
    pub fn from_polys(vars: &Arc<VarTable>, q: [[Poly; 6]; 3]) -> Result<Self> {
        if q.iter().flatten().any(|p| p.vars() != vars) {
            return Err(NocError::TableMismatch("net coefficient".into()));
        }
        Ok(Net { vars: vars.clone(), q })
    }

    pub fn from_rationals(q: [[Rational; 6]; 3]) -> Self {
        let t = VarTable::empty();
        Net { q: q.map(|row| row.map(|c| Poly::constant(&t, c))), vars: t }
    }

    pub fn zero() -> Self {
        Self::from_rationals(std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())))
    }

    /// Parses three quadrics written like `y^2 + 2xz`, `-x^2`, `0`.
    pub fn parse(quadrics: &[&str]) -> Result<Self> {
        if quadrics.len() != 3 {
            return Err(NocError::Parse(format!("a net needs 3 quadrics, got {}", quadrics.len())));
        }
        let mut q: [[Rational; 6]; 3] = Default::default();
        for (k, s) in quadrics.iter().enumerate() {
            q[k] = parse_quadric(s)?;
        }
        Ok(Self::from_rationals(q))
    }

    /// `ν_{c,g} = (y² + 2xz, 2yz, −x² + 2g(xz − y²) + cz²)` over polynomial `c`, `g`.
    pub fn nu(c: &Poly, g: &Poly) -> Result<Self> {
        let t = c.vars().clone();
        let z = Poly::zero(&t);
        let k = |n: i64| Poly::constant(&t, int(n));
        let two_g = g.scale(&int(2));
        let q = [
            [z.clone(), z.clone(), k(2), k(1), z.clone(), z.clone()],
            [z.clone(), z.clone(), z.clone(), z.clone(), k(2), z.clone()],
            [k(-1), z.clone(), two_g.clone(), -&two_g, z.clone(), c.clone()],
        ];
        Self::from_polys(&t, q)
    }

    /// `ν_{c,g}` at rational parameters.
    pub fn nu_at(c: Rational, g: Rational) -> Self {
        let t = VarTable::empty();
        Self::nu(&Poly::constant(&t, c), &Poly::constant(&t, g)).unwrap()
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    /// Coefficient of monomial `m` (index into [`QUAD_MONOMIALS`]) in quadric `k`.
    pub fn coeff(&self, k: usize, m: usize) -> &Poly {
        &self.q[k][m]
    }

    pub fn rows(&self) -> &[[Poly; 6]; 3] {
        &self.q
    }

    /// Rational coefficients, if every entry is constant.
    pub fn as_rationals(&self) -> Option<[[Rational; 6]; 3]> {
        let mut out: [[Rational; 6]; 3] = Default::default();
        for k in 0..3 {
            for m in 0..6 {
                out[k][m] = if self.q[k][m].is_zero() {
                    Rational::zero()
                } else {
                    self.q[k][m].as_constant()?
                };
            }
        }
        Some(out)
    }

    /// Symmetric matrix of quadric `k`: diagonal entries are the square
    /// coefficients, off-diagonal entries half the mixed ones.
    pub fn sym_matrix(&self, k: usize) -> [[Poly; 3]; 3] {
        let half = Rational::new(1.into(), 2.into());
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let c = &self.q[k][quad_index(i, j)];
                if i == j {
                    c.clone()
                } else {
                    c.scale(&half)
                }
            })
        })
    }

    /// Applies a map to every coefficient.
    pub fn map_coeffs(&self, target: &Arc<VarTable>, f: impl Fn(&Poly) -> Result<Poly>) -> Result<Net> {
        let mut q: [[Poly; 6]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Poly::zero(target)));
        for k in 0..3 {
            for m in 0..6 {
                q[k][m] = f(&self.q[k][m])?;
            }
        }
        Net::from_polys(target, q)
    }

    /// `3 − rank` of the 3×6 coefficient matrix; rational nets only.
    pub fn corank(&self) -> Result<usize> {
        let q = self
            .as_rationals()
            .ok_or_else(|| NocError::Invalid("corank of a symbolic net".into()))?;
        let mut ech = Echelon::new(6);
        for row in q {
            let sparse = row
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            ech.insert(sparse, Rational::zero());
        }
        Ok(3 - ech.rank())
    }

    pub fn to_json(&self) -> Result<NetJson> {
        let q = self
            .as_rationals()
            .ok_or_else(|| NocError::Invalid("only rational nets have a JSON form".into()))?;
        Ok(NetJson {
            quadrics: q.iter().map(|r| r.iter().map(rational::to_wire).collect()).collect(),
        })
    }

    pub fn from_json(j: &NetJson) -> Result<Self> {
        if j.quadrics.len() != 3 || j.quadrics.iter().any(|r| r.len() != 6) {
            return Err(NocError::Parse("net JSON needs 3 rows of 6 coefficients".into()));
        }
        let mut q: [[Rational; 6]; 3] = Default::default();
        for (k, row) in j.quadrics.iter().enumerate() {
            for (m, s) in row.iter().enumerate() {
                q[k][m] = rational::parse(s)?;
            }
        }
        Ok(Self::from_rationals(q))
    }
}

/// Coefficient vector of a quadric written as a sum of terms like `2xz`,
/// `-x^2`, `1/2 y^2`, `zx`.
pub fn parse_quadric(s: &str) -> Result<[Rational; 6]> {
    let bad = |why: &str| NocError::Parse(format!("quadric `{s}`: {why}"));
    let cleaned: String = s
        .chars()
        .map(|c| match c {
            '−' => '-',
            '²' => '2',
            c => c,
        })
        .filter(|c| !c.is_whitespace() && *c != '*' && *c != '^')
        .collect();
    let mut out: [Rational; 6] = Default::default();
    if cleaned == "0" {
        return Ok(out);
    }
    let mut rest = cleaned.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = Rational::one();
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        } else if !first {
            return Err(bad("expected + or -"));
        }
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        let split = term.find(XYZ).ok_or_else(|| bad("term without a variable"))?;
        let coef = if split == 0 { Rational::one() } else { rational::parse(&term[..split])? };
        let mut degs = [0u32; 3];
        let mut chars = term[split..].chars().peekable();
        while let Some(c) = chars.next() {
            let v = XYZ.iter().position(|&x| x == c).ok_or_else(|| bad("unexpected character"))?;
            let mut e = 1;
            if let Some(d) = chars.peek().and_then(|d| d.to_digit(10)) {
                e = d;
                chars.next();
            }
            degs[v] += e;
        }
        if degs.iter().sum::<u32>() != 2 {
            return Err(bad("term is not quadratic"));
        }
        let vars: Vec<usize> = (0..3).flat_map(|v| std::iter::repeat_n(v, degs[v] as usize)).collect();
        out[quad_index(vars[0], vars[1])] += sign * coef;
    }
    Ok(out)
}

fn fmt_quadric(row: &[Poly; 6], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    const NAMES: [&str; 6] = ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"];
    let mut any = false;
    for (m, c) in row.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match c.as_constant() {
            Some(r) => {
                let neg = r < Rational::zero();
                let a = if neg { -r } else { r };
                if any {
                    write!(f, " {} ", if neg { "-" } else { "+" })?;
                } else if neg {
                    write!(f, "-")?;
                }
                if !a.is_one() {
                    write!(f, "{}*", rational::to_display(&a))?;
                }
            }
            None => {
                if any {
                    write!(f, " + ")?;
                }
                write!(f, "({c})*")?;
            }
        }
        write!(f, "{}", NAMES[m])?;
        any = true;
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Net {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for k in 0..3 {
            if k > 0 {
                write!(f, ", ")?;
            }
            fmt_quadric(&self.q[k], f)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Net {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Net{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    #[test]
    fn parses_printed_representatives() {
        let n = Net::parse(&["y^2 + 2xz", "2yz", "-x^2"]).unwrap();
        assert_eq!(n.to_string(), "(2*x*z + y^2, 2*y*z, -x^2)");
        let m = Net::parse(&["x^2 - xz", "y2 - yz", "0"]).unwrap();
        assert_eq!(m.corank().unwrap(), 1);
        assert_eq!(parse_quadric("2zx").unwrap()[2], int(2));
        assert_eq!(parse_quadric("1/2 y^2").unwrap()[3], rat(1, 2));
        assert!(parse_quadric("x^3").is_err());
        assert!(Net::parse(&["x", "y"]).is_err());
    }

    #[test]
    fn coranks_by_stratum() {
        assert_eq!(Net::nu_at(int(3), int(-2)).corank().unwrap(), 0);
        assert_eq!(Net::parse(&["xy", "xz", "0"]).unwrap().corank().unwrap(), 1);
        assert_eq!(Net::parse(&["x^2", "0", "0"]).unwrap().corank().unwrap(), 2);
        assert_eq!(Net::zero().corank().unwrap(), 3);
    }

    #[test]
    fn json_round_trip() {
        let n = Net::parse(&["x^2 + y^2", "xz", "z^2"]).unwrap();
        let j = n.to_json().unwrap();
        assert_eq!(j.quadrics[1][2], "1/1");
        assert_eq!(Net::from_json(&j).unwrap(), n);
    }

    #[test]
    fn symmetric_matrix_halves_mixed_terms() {
        let n = Net::parse(&["2xz", "0", "0"]).unwrap();
        let m = n.sym_matrix(0);
        assert_eq!(m[0][2].as_constant(), Some(int(1)));
        assert_eq!(m[2][0].as_constant(), Some(int(1)));
        assert!(m[0][0].is_zero());
    }
}
