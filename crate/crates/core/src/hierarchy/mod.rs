//! Positivity of orbits, closure incidence via restricted classes, and the
//! adjacency graph of orbit closures.
//!
//! For a positive orbit `v`, `v` lies in the closure of `η` iff the class of
//! `η̄` restricts to a nonzero class on the stabilizer torus of `v`. The four
//! semistable orbits `D, D*, E, E*` are not positive; their incidences come
//! from the k-invariant instead.

pub mod fm;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{NocError, Result};
use crate::exactalg::rational::{int, Rational};
use crate::exactalg::Poly;
use crate::invariants::{stability, Net, Stability};
use crate::orbitdata::{Dataset, OrbitRecord, Stratum};
use crate::resolver::{class_amu, class_of, Mu};

/// Values `φ(α), φ(β), …` on the torus parameters of an orbit, positive on
/// every normal weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityWitness {
    pub values: Vec<Rational>,
    /// Taken from the orbit table rather than found by elimination.
    pub printed: bool,
}

impl PositivityWitness {
    pub fn integers(&self) -> Vec<i64> {
        self.values.iter().map(|v| v.to_integer().try_into().expect("small witness")).collect()
    }
}

/// Whether `φ` is positive on every normal weight of `o`.
pub fn check_witness(o: &OrbitRecord, phi: &[Rational]) -> Result<bool> {
    Ok(o.normal_weights()?.iter().all(|w| w.eval(phi).is_positive()))
}

/// The printed witness checked against the computed normal weights, or
/// `None` if the table prints none.
pub fn printed_witness_check(o: &OrbitRecord) -> Result<Option<bool>> {
    let Some(w) = &o.witness else { return Ok(None) };
    if w.len() != o.params() {
        return Ok(Some(false));
    }
    let phi: Vec<Rational> = w.iter().map(|&k| int(k)).collect();
    check_witness(o, &phi).map(Some)
}

/// A witness of positivity, or `None` if the normal weights admit no
/// positive functional. The printed witness is tried first.
pub fn positivity(o: &OrbitRecord) -> Result<Option<PositivityWitness>> {
    if printed_witness_check(o)? == Some(true) {
        let values = o.witness.as_ref().unwrap().iter().map(|&k| int(k)).collect();
        return Ok(Some(PositivityWitness { values, printed: true }));
    }
    let n = o.params();
    let rows: Vec<Vec<Rational>> =
        o.normal_weights()?.iter().map(|w| w.coeffs()[..n].iter().map(|&c| int(c)).collect()).collect();
    Ok(fm::strictly_positive_point(&rows, n).map(|x| {
        let values = fm::primitive_integer(&x).into_iter().map(Rational::from_integer).collect();
        PositivityWitness { values, printed: false }
    }))
}

/// Restriction of `eta` (a class in the Chern generators) to the torus of `v`.
pub fn restriction(eta: &Poly, v: &OrbitRecord) -> Result<Poly> {
    v.restrict(eta)
}

/// Whether `v` lies in the closure of the subvariety with class `eta`.
/// Only decided for positive `v`.
pub fn incident(eta: &Poly, v: &OrbitRecord) -> Result<bool> {
    if positivity(v)?.is_none() {
        return Err(NocError::Invalid(format!("orbit {} is not positive", v.name)));
    }
    Ok(!restriction(eta, v)?.is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Orbit,
    /// A codimension-one orbit `A_μ`.
    Family,
}

#[derive(Debug, Clone, Serialize)]
pub struct Node {
    pub name: String,
    pub codim: u32,
    pub kind: NodeKind,
    /// `k = J₆²/J₁₂`, `"infinity"`, or `"nullcone"`.
    pub k: String,
    #[serde(skip)]
    pub stability: Stability,
    /// Integer positivity witness; `None` for non-positive orbits and for
    /// the codimension-one family.
    pub witness: Option<Vec<i64>>,
    #[serde(skip)]
    class: Option<Poly>,
}

/// Directed edges `η → ξ` meaning `ξ ⊂ η̄`.
#[derive(Debug, Clone)]
pub struct AdjacencyGraph {
    pub nodes: Vec<Node>,
    pub edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize)]
struct GraphJson<'a> {
    nodes: &'a [Node],
    edges: Vec<[&'a str; 2]>,
    covers: Vec<[&'a str; 2]>,
}

/// The codimension-one members kept as separate nodes: a generic `A_μ`, the
/// line `g = 0`, and the two semistable members `B = ν_{−9,1}`, `B* = ν_{0,1}`.
fn family_nodes() -> Vec<(&'static str, Mu, Net)> {
    vec![
        ("A_mu", Mu::Finite, Net::nu_at(int(1), int(1))),
        ("A_inf", Mu::Infinity, Net::nu_at(int(1), int(0))),
        ("B", Mu::Finite, Net::nu_at(int(-9), int(1))),
        ("B*", Mu::Finite, Net::nu_at(int(0), int(1))),
    ]
}

fn k_label(s: &Stability) -> String {
    match s {
        Stability::Nullcone => "nullcone".into(),
        Stability::KInfinite => "infinity".into(),
        Stability::K(k) => k.to_string(),
    }
}

impl AdjacencyGraph {
    pub fn index(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.name == name)
    }

    pub fn has_edge(&self, from: &str, to: &str) -> bool {
        match (self.index(from), self.index(to)) {
            (Some(a), Some(b)) => self.edges.contains(&(a, b)),
            _ => false,
        }
    }

    /// Triples `η → ξ → ρ` without the edge `η → ρ`.
    pub fn transitivity_violations(&self) -> Vec<(String, String, String)> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            for &(b2, c) in self.edges.range((b, 0)..(b + 1, 0)) {
                debug_assert_eq!(b, b2);
                if !self.edges.contains(&(a, c)) {
                    out.push((self.nodes[a].name.clone(), self.nodes[b].name.clone(), self.nodes[c].name.clone()));
                }
            }
        }
        out
    }

    /// Edges along which codimension does not increase.
    pub fn codim_violations(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .filter(|(a, b)| self.nodes[*a].codim >= self.nodes[*b].codim)
            .map(|(a, b)| (self.nodes[*a].name.clone(), self.nodes[*b].name.clone()))
            .collect()
    }

    /// Edges not implied by a path of length two.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .filter(|(a, c)| {
                !self.edges.range((*a, 0)..(*a + 1, 0)).any(|(_, b)| self.edges.contains(&(*b, *c)))
            })
            .copied()
            .collect()
    }

    pub fn to_json(&self) -> String {
        let name = |i: usize| self.nodes[i].name.as_str();
        let g = GraphJson {
            nodes: &self.nodes,
            edges: self.edges.iter().map(|&(a, b)| [name(a), name(b)]).collect(),
            covers: self.covers().into_iter().map(|(a, b)| [name(a), name(b)]).collect(),
        };
        serde_json::to_string_pretty(&g).expect("graph serializes")
    }

    /// The covering relation, ranked by codimension.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph noc {\n  rankdir=TB;\n");
        let codims: BTreeSet<u32> = self.nodes.iter().map(|n| n.codim).collect();
        for c in codims {
            let names: Vec<String> =
                self.nodes.iter().filter(|n| n.codim == c).map(|n| format!("\"{}\"", n.name)).collect();
            writeln!(s, "  {{ rank=same; {} }}", names.join("; ")).unwrap();
        }
        for n in &self.nodes {
            let shape = if n.witness.is_some() || n.kind == NodeKind::Family { "ellipse" } else { "box" };
            writeln!(s, "  \"{}\" [label=\"{}\\n{}\", shape={shape}];", n.name, n.name, n.codim).unwrap();
        }
        for (a, b) in self.covers() {
            writeln!(s, "  \"{}\" -> \"{}\";", self.nodes[a].name, self.nodes[b].name).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// Builds the graph over an orbit dataset plus the codimension-one family.
pub fn build_hierarchy_over(data: &Dataset) -> Result<AdjacencyGraph> {
    let mut nodes = Vec::new();
    for (name, mu, net) in family_nodes() {
        let (_, _, s) = stability(&net)?;
        nodes.push(Node {
            name: name.into(),
            codim: 1,
            kind: NodeKind::Family,
            k: k_label(&s),
            stability: s,
            witness: None,
            class: Some(class_amu(mu)?),
        });
    }
    let mut orbits: Vec<&OrbitRecord> = data.iter().collect();
    orbits.sort_by_key(|o| o.codim);
    for o in orbits {
        let (_, _, s) = stability(&o.net()?)?;
        let witness = positivity(o)?.map(|w| w.integers());
        let class = if o.stratum == Stratum::Zero { None } else { Some(class_of(&o.name)?) };
        nodes.push(Node {
            name: o.name.clone(),
            codim: o.codim,
            kind: NodeKind::Orbit,
            k: k_label(&s),
            stability: s,
            witness,
            class,
        });
    }
    let mut edges = BTreeSet::new();
    for (j, v) in nodes.iter().enumerate() {
        for (i, eta) in nodes.iter().enumerate() {
            if eta.codim >= v.codim {
                continue;
            }
            let Some(cls) = &eta.class else { continue };
            let hit = if v.witness.is_some() {
                !restriction(cls, data.orbit(&v.name)?)?.is_zero()
            } else {
                // a non-positive orbit is semistable here: it lies in the
                // closure of the orbits with the same k, whose fiber has a
                // unique closed orbit
                matches!((&eta.stability, &v.stability), (Stability::K(a), Stability::K(b)) if a == b)
            };
            if hit {
                edges.insert((i, j));
            }
        }
    }
    Ok(AdjacencyGraph { nodes, edges })
}

pub fn build_hierarchy() -> Result<AdjacencyGraph> {
    build_hierarchy_over(Dataset::builtin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbitdata::orbit;

    #[test]
    fn witnesses_for_c_and_d() {
        let c = orbit("C").unwrap();
        let w = positivity(c).unwrap().unwrap();
        assert!(w.printed);
        let vals: Vec<Rational> = c.normal_weights().unwrap().iter().map(|x| x.eval(&w.values)).collect();
        let mut vals = vals;
        vals.sort();
        assert_eq!(vals, vec![int(2), int(4)]);
        assert!(positivity(orbit("D").unwrap()).unwrap().is_none());
    }
}
