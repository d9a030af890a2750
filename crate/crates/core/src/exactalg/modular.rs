//! Multi-modular solving of rational linear systems with exact certification.
//!
//! The system is eliminated modulo several word-size primes; solutions are
//! lifted by Chinese remaindering and rational reconstruction and then
//! checked against every equation over ℚ. Since the rank modulo a prime
//! never exceeds the rank over ℚ, a verified particular solution together
//! with `unknowns − rank_p` verified independent kernel vectors pins down the
//! solution set exactly. Anything that cannot be certified falls back to
//! exact elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::linsolve::{Echelon, SparseRow, Solution};
use super::rational::Rational;

const MAX_PRIMES: usize = 64;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes just below 2^31, descending.
fn primes() -> &'static [u64] {
    static P: std::sync::OnceLock<Vec<u64>> = std::sync::OnceLock::new();
    P.get_or_init(|| {
        (1u64 << 30..1u64 << 31).rev().filter(|&n| n % 2 == 1 && is_prime(n)).take(MAX_PRIMES).collect()
    })
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce(r: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = r.numer().mod_floor(&pb).to_u64().unwrap();
    let d = r.denom().mod_floor(&pb).to_u64().unwrap();
    (d != 0).then(|| n * inv_mod(d, p) % p)
}

/// Row echelon data modulo one prime: pivot columns and the reduced
/// particular solution and kernel basis.
struct ModSolve {
    pivots: Vec<usize>,
    inconsistent: bool,
    particular: Vec<u64>,
    kernel: Vec<Vec<u64>>,
}

fn solve_mod(unknowns: usize, rows: &[(SparseRow, Rational)], p: u64) -> Option<ModSolve> {
    let n = unknowns;
    // pivot rows: leading 1 at the key column, length n + 1 (last = rhs)
    let mut piv: Vec<Option<Vec<u64>>> = vec![None; n];
    let mut rank = 0;
    let mut inconsistent = false;
    let mut dense = vec![0u64; n + 1];
    for (row, rhs) in rows {
        if rank == n {
            break;
        }
        dense.iter_mut().for_each(|x| *x = 0);
        for (c, v) in row {
            dense[*c] = reduce(v, p)?;
        }
        dense[n] = reduce(rhs, p)?;
        let mut placed = false;
        for c in 0..n {
            let f = dense[c];
            if f == 0 {
                continue;
            }
            match &piv[c] {
                Some(pr) => {
                    for k in c..=n {
                        if pr[k] != 0 {
                            dense[k] = (dense[k] + p - f * pr[k] % p) % p;
                        }
                    }
                }
                None => {
                    let inv = inv_mod(f, p);
                    let pr: Vec<u64> = dense.iter().map(|x| x * inv % p).collect();
                    piv[c] = Some(pr);
                    rank += 1;
                    placed = true;
                    break;
                }
            }
        }
        if !placed && dense[n] != 0 {
            inconsistent = true;
            break;
        }
    }
    if inconsistent {
        return Some(ModSolve { pivots: vec![], inconsistent, particular: vec![], kernel: vec![] });
    }
    // back substitution into reduced form
    let pivots: Vec<usize> = (0..n).filter(|&c| piv[c].is_some()).collect();
    for &c in pivots.iter().rev() {
        let pr = piv[c].clone().unwrap();
        for &c2 in pivots.iter().filter(|&&c2| c2 < c) {
            let row = piv[c2].as_mut().unwrap();
            let f = row[c];
            if f != 0 {
                for k in c..=n {
                    if pr[k] != 0 {
                        row[k] = (row[k] + p - f * pr[k] % p) % p;
                    }
                }
            }
        }
    }
    let mut particular = vec![0u64; n];
    for &c in &pivots {
        particular[c] = piv[c].as_ref().unwrap()[n];
    }
    let free: Vec<usize> = (0..n).filter(|c| piv[*c].is_none()).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for &c in &pivots {
                let x = piv[c].as_ref().unwrap()[f];
                v[c] = (p - x) % p;
            }
            v
        })
        .collect();
    Some(ModSolve { pivots, inconsistent: false, particular, kernel })
}

/// Smallest `a/b` congruent to `x` modulo `m` with `|a|, b ≤ sqrt(m/2)`.
fn rational_reconstruct(x: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let r = Rational::new(r1, t1);
    (r.numer().gcd(r.denom()).is_one()).then_some(r)
}

fn check_rows(rows: &[(SparseRow, Rational)], x: &[Rational], homogeneous: bool) -> bool {
    rows.iter().all(|(row, rhs)| {
        let s: Rational = row.iter().map(|(c, v)| v * &x[*c]).sum();
        if homogeneous {
            s.is_zero()
        } else {
            &s == rhs
        }
    })
}

/// Running Chinese-remainder accumulation of a vector.
struct Crt {
    modulus: BigInt,
    vals: Vec<BigInt>,
}

impl Crt {
    fn new(len: usize) -> Self {
        Crt { modulus: BigInt::one(), vals: vec![BigInt::zero(); len] }
    }

    fn add(&mut self, residues: &[u64], p: u64) {
        let pb = BigInt::from(p);
        let m_mod_p = self.modulus.mod_floor(&pb).to_u64().unwrap();
        let inv = inv_mod(m_mod_p, p);
        for (v, &r) in self.vals.iter_mut().zip(residues) {
            let cur = v.mod_floor(&pb).to_u64().unwrap();
            let delta = (r + p - cur) % p * inv % p;
            *v += &self.modulus * BigInt::from(delta);
        }
        self.modulus *= pb;
    }

    fn reconstruct(&self) -> Option<Vec<Rational>> {
        self.vals.iter().map(|v| rational_reconstruct(v, &self.modulus)).collect()
    }
}

/// Solves `rows` (sparse coefficients, right-hand side) in `unknowns`
/// unknowns. Same result as exact elimination.
pub fn solve(unknowns: usize, rows: &[(SparseRow, Rational)]) -> Solution {
    if let Some(s) = try_modular(unknowns, rows) {
        return s;
    }
    let mut ech = Echelon::new(unknowns);
    for (row, rhs) in rows {
        ech.insert(row.clone(), rhs.clone());
    }
    ech.solution()
}

fn try_modular(unknowns: usize, rows: &[(SparseRow, Rational)]) -> Option<Solution> {
    let mut best: Option<Vec<usize>> = None;
    let mut crt_part = Crt::new(unknowns);
    let mut crt_ker: Vec<Crt> = Vec::new();
    for &p in primes() {
        let Some(ms) = solve_mod(unknowns, rows, p) else { continue };
        if ms.inconsistent {
            return None;
        }
        match &best {
            Some(b) if *b == ms.pivots => {}
            Some(b) if ms.pivots.len() < b.len() || (ms.pivots.len() == b.len() && ms.pivots > *b) => {
                continue;
            }
            _ => {
                best = Some(ms.pivots.clone());
                crt_part = Crt::new(unknowns);
                crt_ker = (0..ms.kernel.len()).map(|_| Crt::new(unknowns)).collect();
            }
        }
        crt_part.add(&ms.particular, p);
        for (c, k) in crt_ker.iter_mut().zip(&ms.kernel) {
            c.add(k, p);
        }
        let Some(x) = crt_part.reconstruct() else { continue };
        let Some(ks) = crt_ker.iter().map(Crt::reconstruct).collect::<Option<Vec<_>>>() else {
            continue;
        };
        if !check_rows(rows, &x, false) || !ks.iter().all(|k| check_rows(rows, k, true)) {
            continue;
        }
        return Some(if ks.is_empty() {
            Solution::Unique(x)
        } else {
            Solution::Family { particular: x, kernel: ks }
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};

    fn rows(m: &[(&[i64], i64)]) -> Vec<(SparseRow, Rational)> {
        m.iter()
            .map(|(r, b)| {
                let row = r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, v)| (c, int(*v))).collect();
                (row, int(*b))
            })
            .collect()
    }

    fn exact(n: usize, r: &[(SparseRow, Rational)]) -> Solution {
        let mut e = Echelon::new(n);
        for (row, b) in r {
            e.insert(row.clone(), b.clone());
        }
        e.solution()
    }

    #[test]
    fn agrees_with_exact_elimination() {
        let cases: Vec<(usize, Vec<(SparseRow, Rational)>)> = vec![
            (2, rows(&[(&[3, 7], 4), (&[3, 5], -4)])),
            (3, rows(&[(&[1, 1, 0], 1), (&[0, 1, 1], 2)])),
            (2, rows(&[(&[1, 0], 1), (&[1, 0], 2)])),
            (3, rows(&[(&[2, 4, 6], 1), (&[1, 2, 3], 0)])),
            (1, vec![]),
        ];
        for (n, r) in cases {
            assert_eq!(solve(n, &r), exact(n, &r));
        }
    }

    #[test]
    fn large_denominators_reconstruct() {
        let r = vec![
            (vec![(0, int(1_000_003)), (1, int(7))], rat(1, 999_983)),
            (vec![(0, int(5)), (1, int(-1_000_033))], int(2)),
        ];
        assert_eq!(solve(2, &r), exact(2, &r));
    }

    #[test]
    fn reconstruction_inverts_reduction() {
        let m = BigInt::from(2_147_483_647u64) * BigInt::from(2_147_483_629u64);
        for q in [rat(-3, 7), rat(22, 5), int(0), rat(1, 12345)] {
            let n = q.numer() * inv_big(q.denom(), &m);
            assert_eq!(rational_reconstruct(&n, &m), Some(q));
        }
    }

    fn inv_big(d: &BigInt, m: &BigInt) -> BigInt {
        let e = d.extended_gcd(m);
        e.x.mod_floor(m)
    }
}
