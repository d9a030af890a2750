//! The orbit dataset: codimension > 1 orbits of nets of conics with their
//! stabilizer tori, and the restriction homomorphisms those tori induce.

mod table;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{NocError, Result};
use crate::exactalg::linform::param_table;
use crate::exactalg::linsolve::Echelon;
use crate::exactalg::poly::product;
use crate::exactalg::rational::Rational;
use crate::exactalg::{LinForm, Poly, VarTable};
use crate::invariants::net::{Net, QUAD_MONOMIALS};
use crate::symfun::elementary;

/// Chern generators `u1, u2, u3` of GL(U) and `v1, v2, v3` of GL(V).
pub fn chern_table() -> &'static Arc<VarTable> {
    static T: OnceLock<Arc<VarTable>> = OnceLock::new();
    T.get_or_init(|| {
        VarTable::new([("u1", 1), ("u2", 2), ("u3", 3), ("v1", 1), ("v2", 2), ("v3", 3)]).unwrap()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stratum {
    Sigma0,
    Sigma1,
    Sigma2,
    Zero,
}

impl Stratum {
    /// Corank of the nets in this stratum.
    pub fn corank(self) -> usize {
        match self {
            Stratum::Sigma0 => 0,
            Stratum::Sigma1 => 1,
            Stratum::Sigma2 => 2,
            Stratum::Zero => 3,
        }
    }

    fn parse(s: &str) -> Stratum {
        match s {
            "sigma0" => Stratum::Sigma0,
            "sigma1" => Stratum::Sigma1,
            "sigma2" => Stratum::Sigma2,
            _ => Stratum::Zero,
        }
    }
}

/// A maximal torus of a stabilizer: the weights by which it acts on the
/// bases of U and V, over `params` torus parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Torus {
    pub params: usize,
    pub u: [LinForm; 3],
    pub v: [LinForm; 3],
}

impl Torus {
    pub fn new(u: [LinForm; 3], v: [LinForm; 3]) -> Self {
        let params = u.iter().chain(&v).map(LinForm::arity).max().unwrap_or(0).max(1);
        Torus { params, u, v }
    }

    pub fn table(&self) -> Arc<VarTable> {
        param_table(self.params)
    }

    /// Images of `u1..u3, v1..v3` under the restriction homomorphism:
    /// `u_i ↦ σ_i(u-weights)`, `v_i ↦ σ_i(v-weights)`.
    pub fn restriction_images(&self) -> Vec<Poly> {
        let t = self.table();
        let lin = |w: &[LinForm; 3]| -> Vec<Poly> {
            w.iter().map(|f| f.to_poly(&t).expect("torus weight arity")).collect()
        };
        let eu = elementary(&t, &lin(&self.u));
        let ev = elementary(&t, &lin(&self.v));
        eu[1..].iter().chain(&ev[1..]).cloned().collect()
    }

    /// Restricts a polynomial in the Chern generators to this torus.
    pub fn restrict(&self, class: &Poly) -> Result<Poly> {
        class.substitute(&self.table(), &self.restriction_images())
    }

    /// Weight of the coordinate "coefficient of `x_a x_b` in quadric `k`".
    pub fn coordinate_weight(&self, k: usize, a: usize, b: usize) -> LinForm {
        self.v[k].sub(&self.u[a]).sub(&self.u[b])
    }

    /// All 18 coordinate weights, ordered quadric by quadric.
    pub fn coordinate_weights(&self) -> Vec<LinForm> {
        (0..3)
            .flat_map(|k| QUAD_MONOMIALS.iter().map(move |&[a, b]| (k, a, b)))
            .map(|(k, a, b)| self.coordinate_weight(k, a, b))
            .collect()
    }
}

/// One orbit: a row of the orbit tables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub name: String,
    pub codim: u32,
    pub stratum: Stratum,
    pub representative: [String; 3],
    pub u_weights: [LinForm; 3],
    pub v_weights: [LinForm; 3],
    /// Normal weights as printed, after any letter renaming; absent for the
    /// zero orbit.
    pub printed_normal_weights: Option<Vec<LinForm>>,
    /// Positivity witness as printed, indexed by torus parameter.
    pub witness: Option<Vec<i64>>,
    /// Degrees of free generators of the orbit's equivariant cohomology.
    pub poincare_degrees: Vec<u32>,
    /// The degrees as printed, when they differ from `poincare_degrees`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_poincare_degrees: Option<Vec<u32>>,
    pub delta_label: String,
    pub dual: Option<String>,
}

impl OrbitRecord {
    pub fn torus(&self) -> Torus {
        Torus::new(self.u_weights.clone(), self.v_weights.clone())
    }

    pub fn params(&self) -> usize {
        self.torus().params
    }

    pub fn net(&self) -> Result<Net> {
        let r: Vec<&str> = self.representative.iter().map(String::as_str).collect();
        Net::parse(&r)
    }

    /// Restriction of a Chern polynomial to this orbit's torus.
    pub fn restrict(&self, class: &Poly) -> Result<Poly> {
        self.torus().restrict(class)
    }

    /// Torus weights on a normal space to the orbit at the representative,
    /// computed from the tangent space of the orbit: all coordinate weights
    /// minus the weights of the image of gl(U) ⊕ gl(V). Sorted.
    pub fn normal_weights(&self) -> Result<Vec<LinForm>> {
        let torus = self.torus();
        let net = self.net()?;
        let q = net.as_rationals().unwrap();
        let coords = torus.coordinate_weights();
        for (k, row) in q.iter().enumerate() {
            for (m, c) in row.iter().enumerate() {
                if !c.is_zero() && !coords[k * 6 + m].is_zero() {
                    return Err(NocError::CheckFailed(format!(
                        "orbit {}: torus does not fix the representative",
                        self.name
                    )));
                }
            }
        }
        // generator images grouped by weight
        let mut groups: HashMap<LinForm, Vec<Vec<Rational>>> = HashMap::new();
        for k in 0..3 {
            for l in 0..3 {
                let mut img = vec![Rational::zero(); 18];
                for m in 0..6 {
                    img[k * 6 + m] = q[l][m].clone();
                }
                groups.entry(torus.v[k].sub(&torus.v[l])).or_default().push(img);
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                // the derivation x_i ∂/∂x_j on every quadric
                let mut img = vec![Rational::zero(); 18];
                for k in 0..3 {
                    for (m, &[a, b]) in QUAD_MONOMIALS.iter().enumerate() {
                        let c = &q[k][m];
                        if c.is_zero() {
                            continue;
                        }
                        for (hit, other) in [(a, b), (b, a)] {
                            if hit == j {
                                let idx = crate::invariants::net::quad_index(i, other);
                                img[k * 6 + idx] += c;
                            }
                        }
                    }
                }
                groups.entry(torus.u[j].sub(&torus.u[i])).or_default().push(img);
            }
        }
        let mut remaining = coords;
        for (w, imgs) in groups {
            let mut ech = Echelon::new(18);
            for img in imgs {
                let row = img.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                ech.insert(row, Rational::zero());
            }
            for _ in 0..ech.rank() {
                let pos = remaining.iter().position(|x| *x == w).ok_or_else(|| {
                    NocError::CheckFailed(format!("orbit {}: tangent weight {w} not a coordinate weight", self.name))
                })?;
                remaining.swap_remove(pos);
            }
        }
        remaining.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        if remaining.len() != self.codim as usize {
            return Err(NocError::CheckFailed(format!(
                "orbit {}: normal space has dimension {}, expected codimension {}",
                self.name,
                remaining.len(),
                self.codim
            )));
        }
        Ok(remaining)
    }

    /// The cohomology of the stabilizer has as many free generators as its
    /// maximal torus has parameters.
    pub fn poincare_rank_consistent(&self) -> bool {
        self.poincare_degrees.len() == self.params()
    }

    /// Product of the normal weights, the Euler class of the normal space.
    pub fn euler_class(&self) -> Result<Poly> {
        let t = self.torus().table();
        let ws = self.normal_weights()?;
        Ok(product(ws.iter().map(|w| w.to_poly(&t).unwrap()).chain([Poly::one(&t)])))
    }

    /// Euler class of the printed normal weights.
    pub fn printed_euler_class(&self) -> Option<Poly> {
        let t = self.torus().table();
        self.printed_normal_weights
            .as_ref()
            .map(|ws| product(ws.iter().map(|w| w.to_poly(&t).unwrap()).chain([Poly::one(&t)])))
    }

    /// Printed normal weights that disagree with [`Self::normal_weights`]:
    /// `(missing from print, extra in print)`.
    pub fn normal_weight_errata(&self) -> Result<(Vec<LinForm>, Vec<LinForm>)> {
        let derived = self.normal_weights()?;
        let Some(printed) = &self.printed_normal_weights else {
            return Ok((vec![], vec![]));
        };
        let mut extra = printed.clone();
        let mut missing = Vec::new();
        for w in derived {
            match extra.iter().position(|x| *x == w) {
                Some(i) => {
                    extra.swap_remove(i);
                }
                None => missing.push(w),
            }
        }
        Ok((missing, extra))
    }
}

/// Renames Greek letters in one pass (so swaps do not chain).
fn rename_letters(s: &str, map: &[(&str, &str)]) -> String {
    s.chars()
        .map(|c| {
            let cs = c.to_string();
            map.iter()
                .find(|(from, _)| *from == cs)
                .map_or(cs, |(_, to)| to.to_string())
        })
        .collect()
}

fn record_from_row(r: &table::Row) -> OrbitRecord {
    let lf = |s: &str| LinForm::parse(s).expect("transcribed linear form");
    let three = |w: &[&str; 3]| [lf(w[0]), lf(w[1]), lf(w[2])];
    let printed: Option<Vec<LinForm>> = r
        .normal
        .map(|ws| ws.iter().map(|s| lf(&rename_letters(s, r.rename))).collect());
    let witness = r.witness.map(|vals| {
        if r.rename.is_empty() {
            return vals.to_vec();
        }
        // printed values follow the printed letters in Greek order
        let mut w = vec![0i64; 6];
        let mut letters: Vec<&str> = r.rename.iter().map(|(from, _)| *from).collect();
        letters.sort_by_key(|l| LinForm::parse(l).unwrap().arity());
        for (val, from) in vals.iter().zip(letters) {
            let to = r.rename.iter().find(|(f, _)| *f == from).unwrap().1;
            w[LinForm::parse(to).unwrap().arity() - 1] = *val;
        }
        let n = r.u.iter().chain(&r.v).map(|s| lf(s).arity()).max().unwrap();
        w.truncate(n);
        w
    });
    OrbitRecord {
        name: r.name.to_string(),
        codim: r.codim,
        stratum: Stratum::parse(r.stratum),
        representative: r.rep.map(String::from),
        u_weights: three(&r.u),
        v_weights: three(&r.v),
        printed_normal_weights: printed,
        witness,
        poincare_degrees: table::POINCARE_FIXES
            .iter()
            .find(|(n, _)| *n == r.name)
            .map_or(r.poincare, |(_, d)| *d)
            .to_vec(),
        printed_poincare_degrees: table::POINCARE_FIXES
            .iter()
            .any(|(n, _)| *n == r.name)
            .then(|| r.poincare.to_vec()),
        delta_label: r.delta.to_string(),
        dual: r.dual.map(String::from),
    }
}

/// Canonical ASCII orbit name: `D^*`, `D∗` → `D*`; `(1⁴)`, `1^4` → `(1^4)`.
pub fn canonical_name(s: &str) -> String {
    let mut t: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '∗' => "*".to_string(),
            '⁴' => "^4".to_string(),
            '²' => "^2".to_string(),
            c => c.to_string(),
        })
        .collect();
    t = t.replace("^*", "*");
    if !t.starts_with('(') && t.chars().next().is_some_and(|c| c.is_ascii_digit()) && t != "0" {
        t = format!("({t})");
    }
    t
}

/// The full orbit dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    pub orbits: Vec<OrbitRecord>,
}

impl Dataset {
    /// The built-in transcription.
    pub fn builtin() -> &'static Dataset {
        static D: OnceLock<Dataset> = OnceLock::new();
        D.get_or_init(|| Dataset { orbits: table::ROWS.iter().map(record_from_row).collect() })
    }

    pub fn from_json(s: &str) -> Result<Dataset> {
        let d: Dataset = serde_json::from_str(s).map_err(|e| NocError::Parse(e.to_string()))?;
        for o in &d.orbits {
            o.net()?;
        }
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dataset serializes")
    }

    pub fn orbit(&self, name: &str) -> Result<&OrbitRecord> {
        let c = canonical_name(name);
        self.orbits
            .iter()
            .find(|o| o.name == c)
            .ok_or_else(|| NocError::UnknownOrbit(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &OrbitRecord> {
        self.orbits.iter()
    }
}

/// Shorthand for an orbit of the built-in dataset.
pub fn orbit(name: &str) -> Result<&'static OrbitRecord> {
    Dataset::builtin().orbit(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    #[test]
    fn row_c() {
        let c = orbit("C").unwrap();
        assert_eq!(c.codim, 2);
        assert_eq!(c.poincare_degrees, [1, 1]);
        assert_eq!(c.delta_label, "ν");
        let imgs = c.torus().restriction_images();
        let t = c.torus().table();
        assert_eq!(imgs[0], Poly::linear(&t, &[int(3), int(3)]));
        assert_eq!(imgs[3], Poly::linear(&t, &[int(7), int(5)]));
    }

    #[test]
    fn names_and_aliases() {
        assert_eq!(Dataset::builtin().orbits.len(), 24);
        assert_eq!(orbit("D^*").unwrap().name, "D*");
        assert_eq!(orbit("(1⁴)").unwrap().name, "(1^4)");
        assert_eq!(orbit("21^2").unwrap().name, "(21^2)");
        assert_eq!(orbit("0").unwrap().codim, 18);
        assert_eq!(orbit("Q").unwrap_err(), NocError::UnknownOrbit("Q".into()));
    }

    #[test]
    fn renamed_row_reads_in_symmetry_letters() {
        let o = orbit("(1^4)").unwrap();
        let w = LinForm::parse("β − 2α").unwrap();
        assert_eq!(o.printed_normal_weights.as_deref(), Some(&[w.clone(), w.clone(), w.clone(), w][..]));
        assert_eq!(o.witness.as_deref(), Some(&[0, 1][..]));
    }

    #[test]
    fn zero_orbit_restriction_is_identity_on_roots() {
        let o = orbit("0").unwrap();
        let imgs = o.torus().restriction_images();
        let t = o.torus().table();
        assert_eq!(imgs[0], Poly::linear(&t, &[int(1), int(1), int(1), int(0), int(0), int(0)]));
        assert_eq!(imgs[5], product((3..6).map(|i| Poly::var(&t, i))));
    }

    #[test]
    fn derived_normal_weights_match_print_except_three_rows() {
        let lf = |s: &str| LinForm::parse(s).unwrap();
        for o in Dataset::builtin().iter() {
            let (missing, extra) = o.normal_weight_errata().unwrap();
            assert!(extra.is_empty(), "{}", o.name);
            let expect: Vec<LinForm> = match o.name.as_str() {
                "I" => vec![lf("2β − α − γ")],
                "I*" => vec![lf("α − 2β + γ")],
                "(4)" => vec![lf("γ − α − 3β")],
                _ => vec![],
            };
            assert_eq!(missing, expect, "{}", o.name);
            assert_eq!(o.normal_weights().unwrap().len(), o.codim as usize);
        }
    }

    #[test]
    fn poincare_degrees_match_torus_rank() {
        for o in Dataset::builtin().iter() {
            assert!(o.poincare_rank_consistent(), "{}", o.name);
            let printed = o.printed_poincare_degrees.as_ref().unwrap_or(&o.poincare_degrees);
            assert_eq!(printed.len() == o.params(), o.name != "(22)", "{}", o.name);
        }
        assert_eq!(orbit("(22)").unwrap().printed_poincare_degrees, Some(vec![1, 1, 2]));
    }

    #[test]
    fn representatives_have_stratum_corank() {
        for o in Dataset::builtin().iter() {
            assert_eq!(o.net().unwrap().corank().unwrap(), o.stratum.corank(), "{}", o.name);
        }
    }

    #[test]
    fn euler_class_of_c() {
        let c = orbit("C").unwrap();
        let t = c.torus().table();
        let amb = Poly::linear(&t, &[int(1), int(-1)]);
        assert_eq!(c.euler_class().unwrap(), amb.pow(2).scale(&int(8)));
        let d = orbit("D").unwrap();
        assert_eq!(d.euler_class().unwrap(), amb.pow(2).scale(&int(-9)));
        let o = orbit("(1^4)").unwrap();
        let w = Poly::linear(&o.torus().table(), &[int(-2), int(1)]);
        assert_eq!(o.euler_class().unwrap(), w.pow(4));
    }

    #[test]
    fn euler_degree_is_codimension() {
        for o in Dataset::builtin().iter() {
            let e = o.euler_class().unwrap();
            assert_eq!(e.weighted_degree(), crate::exactalg::WeightedDegree::Homogeneous(o.codim), "{}", o.name);
        }
    }

    #[test]
    fn dataset_json_round_trip() {
        let d = Dataset::builtin();
        assert_eq!(&Dataset::from_json(&d.to_json()).unwrap(), d);
    }
}
