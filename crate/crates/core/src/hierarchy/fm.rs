//! Strict homogeneous linear feasibility by Fourier–Motzkin elimination.
//!
//! `a·x > 0` for all rows is feasible iff `a·x ≥ 1` is, so the search runs
//! on the non-strict system with unit right-hand sides.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactalg::rational::{denominator_lcm, Rational};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Row {
    a: Vec<Rational>,
    rhs: Rational,
}

impl Row {
    /// Positive rescaling so the largest coefficient has absolute value 1.
    fn normalized(mut self) -> Row {
        let m = self.a.iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero);
        if !m.is_zero() {
            for c in &mut self.a {
                *c /= &m;
            }
            self.rhs /= &m;
        }
        self
    }
}

/// Removes variable `k` from every row.
fn eliminate(rows: &[Row], k: usize) -> Vec<Row> {
    let mut out = BTreeSet::new();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for r in rows {
        if r.a[k].is_positive() {
            pos.push(r);
        } else if r.a[k].is_negative() {
            neg.push(r);
        } else {
            out.insert(r.clone());
        }
    }
    for p in &pos {
        for q in &neg {
            let (sp, sq) = (Rational::one() / &p.a[k], Rational::one() / -&q.a[k]);
            let a: Vec<Rational> = p.a.iter().zip(&q.a).map(|(x, y)| x * &sp + y * &sq).collect();
            let rhs = &p.rhs * &sp + &q.rhs * &sq;
            out.insert(Row { a, rhs }.normalized());
        }
    }
    out.into_iter().collect()
}

/// Picks a value in `[lo, hi]`, preferring 0 and then integers.
fn pick(lo: Option<Rational>, hi: Option<Rational>) -> Rational {
    let ok = |x: &Rational| lo.as_ref().is_none_or(|l| l <= x) && hi.as_ref().is_none_or(|h| x <= h);
    let zero = Rational::zero();
    if ok(&zero) {
        return zero;
    }
    match (lo, hi) {
        (Some(l), h) if l.is_positive() => {
            let c = l.ceil();
            if h.as_ref().is_none_or(|h| &c <= h) {
                c
            } else {
                l
            }
        }
        (l, Some(h)) => {
            let f = h.floor();
            if l.as_ref().is_none_or(|l| l <= &f) {
                f
            } else {
                h
            }
        }
        _ => unreachable!("0 is admissible when both bounds are absent"),
    }
}

/// A point with `w·x > 0` for every `w`, or `None` if there is none.
/// Rows and point have length `n`.
pub fn strictly_positive_point(ws: &[Vec<Rational>], n: usize) -> Option<Vec<Rational>> {
    let start: Vec<Row> = ws
        .iter()
        .map(|w| Row { a: w.clone(), rhs: Rational::one() }.normalized())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    // stages[m] constrains the first m variables only
    let mut stages = vec![Vec::new(); n + 1];
    stages[n] = start;
    for m in (0..n).rev() {
        stages[m] = eliminate(&stages[m + 1], m);
    }
    if stages[0].iter().any(|r| r.rhs.is_positive()) {
        return None;
    }
    let mut x: Vec<Rational> = Vec::with_capacity(n);
    for m in 1..=n {
        let k = m - 1;
        let (mut lo, mut hi): (Option<Rational>, Option<Rational>) = (None, None);
        for r in &stages[m] {
            if r.a[k].is_zero() {
                continue;
            }
            let rest: Rational = r.a[..k].iter().zip(&x).map(|(a, v)| a * v).sum();
            let b = (&r.rhs - rest) / &r.a[k];
            if r.a[k].is_positive() {
                lo = Some(lo.map_or(b.clone(), |l| l.max(b)));
            } else {
                hi = Some(hi.map_or(b.clone(), |h| h.min(b)));
            }
        }
        x.push(pick(lo, hi));
    }
    Some(x)
}

/// Clears denominators and common factors of a direction vector.
pub fn primitive_integer(x: &[Rational]) -> Vec<BigInt> {
    let d = denominator_lcm(x);
    let ints: Vec<BigInt> = x.iter().map(|c| c.numer() * (&d / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&c| int(c)).collect()).collect()
    }

    #[test]
    fn feasible_and_infeasible() {
        let w = rows(&[&[1, -1], &[2, -3], &[0, -1]]);
        let x = strictly_positive_point(&w, 2).unwrap();
        for r in &w {
            let s: Rational = r.iter().zip(&x).map(|(a, b)| a * b).sum();
            assert!(s.is_positive());
        }
        assert!(strictly_positive_point(&rows(&[&[3, -3], &[-3, 3]]), 2).is_none());
        assert!(strictly_positive_point(&rows(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]), 3).is_none());
    }

    #[test]
    fn primitive_scaling() {
        let x = [Rational::new(1.into(), 2.into()), int(0), Rational::new(3.into(), 2.into())];
        assert_eq!(primitive_integer(&x), vec![BigInt::from(1), BigInt::from(0), BigInt::from(3)]);
    }
}
