//! Integer linear forms in the torus parameters α, β, γ, δ, ε, κ.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{Poly, VarTable};
use super::rational::{int, Rational};
use crate::error::{NocError, Result};

/// Canonical ASCII names of the torus parameters, in table order.
pub const PARAMS: [&str; 6] = ["alpha", "beta", "gamma", "delta", "epsilon", "kappa"];

const ALIASES: [&[&str]; 6] = [
    &["alpha", "α", "a"],
    &["beta", "β", "b"],
    &["gamma", "γ", "g"],
    &["delta", "δ", "d"],
    &["epsilon", "ε", "ϵ", "e"],
    &["kappa", "κ", "k"],
];

/// Variable table of the first `n` torus parameters, all of weight 1.
pub fn param_table(n: usize) -> Arc<VarTable> {
    VarTable::uniform(&PARAMS[..n])
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LinForm {
    coeffs: [i64; 6],
}

impl LinForm {
    pub fn zero() -> Self {
        LinForm::default()
    }

    pub fn new(coeffs: &[i64]) -> Self {
        assert!(coeffs.len() <= 6, "at most six torus parameters");
        let mut c = [0; 6];
        c[..coeffs.len()].copy_from_slice(coeffs);
        LinForm { coeffs: c }
    }

    pub fn coeffs(&self) -> &[i64; 6] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Number of leading parameters needed to express this form.
    pub fn arity(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1)
    }

    pub fn add(&self, o: &LinForm) -> LinForm {
        let mut c = self.coeffs;
        for (x, y) in c.iter_mut().zip(o.coeffs) {
            *x += y;
        }
        LinForm { coeffs: c }
    }

    pub fn sub(&self, o: &LinForm) -> LinForm {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> LinForm {
        LinForm { coeffs: self.coeffs.map(|c| c * k) }
    }

    /// Value at a rational point (missing coordinates are zero).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(point)
            .map(|(&c, x)| int(c) * x)
            .sum()
    }

    /// As a linear polynomial over `table`, whose first variables must be the
    /// parameters this form uses.
    pub fn to_poly(&self, table: &Arc<VarTable>) -> Result<Poly> {
        let n = self.arity();
        for (i, name) in PARAMS.iter().enumerate().take(n) {
            if table.len() <= i || table.name(i) != *name {
                return Err(NocError::TableMismatch(format!(
                    "linear form needs parameter `{name}` at position {i}"
                )));
            }
        }
        let mut c = vec![Rational::default(); table.len()];
        for (i, &k) in self.coeffs.iter().enumerate().take(n) {
            c[i] = int(k);
        }
        Ok(Poly::linear(table, &c))
    }

    /// Parses forms such as `4α − 4β`, `-2alpha+beta+gamma`, `δ - α - γ`.
    pub fn parse(s: &str) -> Result<LinForm> {
        let bad = |why: &str| NocError::Parse(format!("linear form `{s}`: {why}"));
        let cleaned: String = s
            .chars()
            .map(|c| if c == '−' { '-' } else { c })
            .filter(|c| !c.is_whitespace() && *c != '*')
            .collect();
        if cleaned.is_empty() || cleaned == "0" {
            return Ok(LinForm::zero());
        }
        let mut out = LinForm::zero();
        let mut rest = cleaned.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r;
            } else if !first {
                return Err(bad("expected + or -"));
            }
            first = false;
            let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
            let k: i64 = if digits == 0 {
                1
            } else {
                rest[..digits].parse().map_err(|_| bad("coefficient"))?
            };
            rest = &rest[digits..];
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let name = &rest[..end];
            let idx = ALIASES
                .iter()
                .position(|al| al.contains(&name))
                .ok_or_else(|| bad(&format!("unknown parameter `{name}`")))?;
            out.coeffs[idx] += sign * k;
            rest = &rest[end..];
        }
        Ok(out)
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{}", PARAMS[i])?;
        }
        Ok(())
    }
}

impl Serialize for LinForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LinForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        LinForm::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinForm({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printed_forms() {
        assert_eq!(LinForm::parse("4α − 4β").unwrap(), LinForm::new(&[4, -4]));
        assert_eq!(LinForm::parse("-2α + β + γ").unwrap(), LinForm::new(&[-2, 1, 1]));
        assert_eq!(LinForm::parse("δ - α - β").unwrap(), LinForm::new(&[-1, -1, 0, 1]));
        assert_eq!(LinForm::parse("epsilon-2gamma").unwrap(), LinForm::new(&[0, 0, -2, 0, 1]));
        assert!(LinForm::parse("2x").is_err());
        assert!(LinForm::parse("2α 3β").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["4α − 4β", "-2α + β + γ", "κ", "0", "-δ + 3ε"] {
            let f = LinForm::parse(s).unwrap();
            assert_eq!(LinForm::parse(&f.to_string()).unwrap(), f);
        }
        assert_eq!(LinForm::new(&[2, -1, -1]).to_string(), "2*alpha - beta - gamma");
    }

    #[test]
    fn as_polynomial() {
        let t = param_table(2);
        let p = LinForm::parse("3α+3β").unwrap().to_poly(&t).unwrap();
        assert_eq!(p, Poly::linear(&t, &[int(3), int(3)]));
        assert!(LinForm::parse("γ").unwrap().to_poly(&t).is_err());
    }
}
