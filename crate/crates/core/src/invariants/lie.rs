//! The sl₃ operators `E_ij` as derivations of coordinate rings.

use std::sync::Arc;

use super::net::{quad_index, QUAD_MONOMIALS};
use super::table2::net_table;
use crate::exactalg::{Poly, VarTable};

/// `Σ_v field[v] · ∂f/∂v`.
pub fn derive(f: &Poly, field: &[Poly]) -> Poly {
    field
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .fold(Poly::zero(f.vars()), |acc, (v, g)| acc + g * &f.derivative(v))
}

/// The 12 generators acting on the 18 net coordinates `m{k}{j}`, labelled
/// `U:E_ij` (substitution `x_j → x_i` in every quadric) and `V:E_kl` (adds
/// quadric `l` to quadric `k`).
pub fn net_derivations() -> Vec<(String, Vec<Poly>)> {
    let t: &Arc<VarTable> = net_table();
    let var = |k: usize, m: usize| Poly::var(t, 6 * k + m);
    let mut out = Vec::new();
    for i in 0..3 {
        for j in (0..3).filter(|&j| j != i) {
            let mut field = vec![Poly::zero(t); 18];
            for k in 0..3 {
                for (m, [p, q]) in QUAD_MONOMIALS.iter().enumerate() {
                    if *p == j {
                        let to = quad_index(i, *q);
                        field[6 * k + to] = &field[6 * k + to] + &var(k, m);
                    }
                    if *q == j {
                        let to = quad_index(*p, i);
                        field[6 * k + to] = &field[6 * k + to] + &var(k, m);
                    }
                }
            }
            out.push((format!("U:E{}{}", i + 1, j + 1), field));
        }
    }
    for k in 0..3 {
        for l in (0..3).filter(|&l| l != k) {
            let mut field = vec![Poly::zero(t); 18];
            for m in 0..6 {
                field[6 * k + m] = var(l, m);
            }
            out.push((format!("V:E{}{}", k + 1, l + 1), field));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_generators() {
        let d = net_derivations();
        assert_eq!(d.len(), 12);
        // E21 on x² gives 2xy: coefficient m12 flows into m12 twice
        let (name, f) = &d[2];
        assert_eq!(name, "U:E21");
        let t = net_table();
        assert_eq!(f[1], Poly::var(t, 0).scale(&crate::exactalg::rational::int(2)));
    }
}
