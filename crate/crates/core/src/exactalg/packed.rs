//! Substitution over integer coefficients with exponent vectors packed into
//! a `u128`. Used when the result's degrees fit the packing and the
//! intermediate coefficients fit `i128`; otherwise the caller falls back to
//! the general path.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::poly::{Monomial, Poly, VarTable};
use super::rational::{denominator_lcm, Rational};

type Packed = Vec<(u128, i128)>;

struct Layout {
    bits: u32,
    n: usize,
}

impl Layout {
    fn pack(&self, m: &Monomial) -> u128 {
        m.exponents().iter().enumerate().fold(0u128, |acc, (i, &e)| acc | (e as u128) << (self.bits * i as u32))
    }

    fn unpack(&self, k: u128) -> Monomial {
        let mask = (1u128 << self.bits) - 1;
        let e: Vec<u32> = (0..self.n).map(|i| ((k >> (self.bits * i as u32)) & mask) as u32).collect();
        Monomial::from_exponents(&e)
    }
}

fn mul(a: &Packed, b: &Packed) -> Option<Packed> {
    let mut acc: HashMap<u128, i128> = HashMap::with_capacity(a.len() * b.len());
    for (ma, ca) in a {
        for (mb, cb) in b {
            let c = ca.checked_mul(*cb)?;
            let e = acc.entry(ma + mb).or_insert(0);
            *e = e.checked_add(c)?;
        }
    }
    Some(acc.into_iter().filter(|(_, c)| *c != 0).collect())
}

pub(super) fn substitute(p: &Poly, target: &Arc<VarTable>, images: &[Poly]) -> Option<Poly> {
    let n = target.len();
    if n == 0 || p.is_empty() {
        return None;
    }
    let img_deg: Vec<u32> =
        images.iter().map(|q| q.terms().map(|(m, _)| m.total_degree()).max().unwrap_or(0)).collect();
    let max_deg = p
        .terms()
        .map(|(m, _)| m.exponents().iter().zip(&img_deg).map(|(&e, d)| e as u32 * d).sum::<u32>())
        .max()?;
    let bits = 32 - max_deg.max(1).leading_zeros();
    if max_deg > 255 || bits as usize * n > 128 {
        return None;
    }
    let layout = Layout { bits, n };
    let mut dens = Vec::new();
    let mut ints: Vec<Packed> = Vec::new();
    for q in images {
        let d = denominator_lcm(q.terms().map(|(_, c)| c));
        let mut v = Vec::new();
        for (m, c) in q.terms() {
            let k = (c.numer() * (&d / c.denom())).to_i64()?;
            v.push((layout.pack(m), k as i128));
        }
        dens.push(Rational::from_integer(d));
        ints.push(v);
    }
    let mut powers: Vec<Vec<Packed>> = ints.iter().map(|v| vec![vec![(0u128, 1i128)], v.clone()]).collect();
    let mut acc: HashMap<u128, Rational> = HashMap::new();
    for (m, c) in p.terms() {
        let mut t: Packed = vec![(0, 1)];
        let mut scale = c.clone();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e as usize {
                let next = mul(powers[i].last().unwrap(), &ints[i])?;
                powers[i].push(next);
            }
            t = mul(&t, &powers[i][e as usize])?;
            for _ in 0..e {
                scale /= &dens[i];
            }
        }
        for (k, v) in t {
            let x = Rational::from_integer(BigInt::from(v)) * &scale;
            acc.entry(k).and_modify(|y| *y += &x).or_insert(x);
        }
    }
    let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (layout.unpack(k), c));
    Some(Poly::from_terms(target, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly;

    #[test]
    fn agrees_with_general_substitution() {
        let src = VarTable::uniform(&["a", "b"]);
        let dst = VarTable::uniform(&["x", "y", "z"]);
        let p = parse_poly(&src, "3a^3 b - 1/2 a b^2 + 7").unwrap();
        let imgs = [parse_poly(&dst, "x - 2/3 y z").unwrap(), parse_poly(&dst, "z^2 + 5x").unwrap()];
        let fast = substitute(&p, &dst, &imgs).unwrap();
        let slow = &(&(&imgs[0].pow(3) * &imgs[1]).scale(&Rational::from_integer(3.into()))
            - &(&imgs[0] * &imgs[1].pow(2)).scale(&Rational::new(1.into(), 2.into())))
            + &Poly::constant(&dst, Rational::from_integer(7.into()));
        assert_eq!(fast, slow);
    }
}
