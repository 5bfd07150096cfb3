//! Operator graphs and the graph route to congruence.
//!
//! The *crystal graph* on words has a labelled edge `w → f̃_i(w)` for every
//! word `w` and label `i` where the Kashiwara operator is defined; the
//! *quasi-crystal graph* does the same with the quasi-Kashiwara operator
//! `f̈_i`. A [`component`] is the connected component of a seed word under
//! the raising and lowering operators with labels below a bound, collected
//! into a [`ComponentView`] for inspection and DOT export ([`to_dot`]).
//!
//! [`pinned_isomorphic`] decides whether the map sending `u` to `v` extends
//! to a label- and direction-preserving isomorphism of their components; it
//! walks the two components in lockstep without materializing them first.
//! [`congruent_via_graph`] combines that test with the weight and the
//! appropriate shape invariant to decide the plactic, hypoplactic,
//! sylvester, or Baxter congruence — the graph route of
//! [`crate::congruence::equiv`].

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::congruence::{sigma_baxt, sigma_sylv, CongruenceError, MonoidKind};
use crate::operators::{e_crystal, e_quasi, f_crystal, f_quasi};
use crate::words::{weight, Letter, Word};

/// Which operator family labels the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// Kashiwara operators `ẽ_i`, `f̃_i`.
    Crystal,
    /// Quasi-Kashiwara operators `ë_i`, `f̈_i`.
    QuasiCrystal,
}

impl GraphKind {
    /// The raising operator of this family.
    pub fn raise(self, u: &Word, i: Letter) -> Option<Word> {
        match self {
            GraphKind::Crystal => e_crystal(u, i),
            GraphKind::QuasiCrystal => e_quasi(u, i),
        }
    }

    /// The lowering operator of this family.
    pub fn lower(self, u: &Word, i: Letter) -> Option<Word> {
        match self {
            GraphKind::Crystal => f_crystal(u, i),
            GraphKind::QuasiCrystal => f_quasi(u, i),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Crystal => "crystal",
            GraphKind::QuasiCrystal => "quasi",
        })
    }
}

impl FromStr for GraphKind {
    type Err = CongruenceError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "crystal" => Ok(GraphKind::Crystal),
            "quasi" | "quasicrystal" => Ok(GraphKind::QuasiCrystal),
            _ => Err(CongruenceError::UnknownName {
                what: "graph kind",
                name: s.to_string(),
            }),
        }
    }
}

/// A materialized connected component of an operator graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentView {
    seed: Word,
    kind: GraphKind,
    label_bound: Letter,
    vertices: BTreeSet<Word>,
    edges: BTreeSet<(Word, Letter, Word)>,
}

impl ComponentView {
    /// The word the component was grown from.
    pub fn seed(&self) -> &Word {
        &self.seed
    }

    /// The operator family.
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// The exclusive upper bound on edge labels (labels run `1..label_bound`).
    pub fn label_bound(&self) -> Letter {
        self.label_bound
    }

    /// All words of the component, ordered.
    pub fn vertices(&self) -> &BTreeSet<Word> {
        &self.vertices
    }

    /// All lowering edges `(w, i, f_i(w))` of the component, ordered.
    pub fn edges(&self) -> &BTreeSet<(Word, Letter, Word)> {
        &self.edges
    }
}

/// Grows the connected component of `seed` under the raising and lowering
/// operators of `kind` with labels `1..label_bound`, recording every
/// lowering edge between its vertices.
pub fn component(seed: &Word, kind: GraphKind, label_bound: Letter) -> ComponentView {
    let mut vertices = BTreeSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(w) = queue.pop_front() {
        let lowered = (1..label_bound).filter_map(|i| kind.lower(&w, i));
        let raised = (1..label_bound).filter_map(|i| kind.raise(&w, i));
        for next in lowered.chain(raised) {
            if vertices.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut edges = BTreeSet::new();
    for w in &vertices {
        for i in 1..label_bound {
            if let Some(next) = kind.lower(w, i) {
                edges.insert((w.clone(), i, next));
            }
        }
    }
    ComponentView {
        seed: seed.clone(),
        kind,
        label_bound,
        vertices,
        edges,
    }
}

/// Decides whether `u ↦ v` extends to an isomorphism of the components of
/// `u` and `v` in the `kind` graph with labels `1..label_bound`, preserving
/// edge labels and directions.
///
/// The two components are walked in lockstep from the pinned pair: whenever
/// an operator is defined on one side it must be defined on the other, and
/// the induced correspondence must stay a bijection. Neither component is
/// materialized up front.
pub fn pinned_isomorphic(u: &Word, v: &Word, kind: GraphKind, label_bound: Letter) -> bool {
    let mut fwd: HashMap<Word, Word> = HashMap::from([(u.clone(), v.clone())]);
    let mut bwd: HashMap<Word, Word> = HashMap::from([(v.clone(), u.clone())]);
    let mut queue = VecDeque::from([(u.clone(), v.clone())]);
    while let Some((a, b)) = queue.pop_front() {
        for i in 1..label_bound {
            for (na, nb) in [
                (kind.raise(&a, i), kind.raise(&b, i)),
                (kind.lower(&a, i), kind.lower(&b, i)),
            ] {
                match (na, nb) {
                    (None, None) => {}
                    (Some(_), None) | (None, Some(_)) => return false,
                    (Some(na), Some(nb)) => {
                        let known_fwd = fwd.get(&na);
                        let known_bwd = bwd.get(&nb);
                        match (known_fwd, known_bwd) {
                            (Some(mapped), Some(back)) => {
                                if *mapped != nb || *back != na {
                                    return false;
                                }
                            }
                            (None, None) => {
                                fwd.insert(na.clone(), nb.clone());
                                bwd.insert(nb.clone(), na.clone());
                                queue.push_back((na, nb));
                            }
                            // One endpoint already paired with someone else.
                            _ => return false,
                        }
                    }
                }
            }
        }
    }
    true
}

/// A label bound large enough for the graph route on `u` and `v`: past the
/// largest letter in play and past both lengths, so every operator the
/// components support is represented.
pub fn default_label_bound(u: &Word, v: &Word) -> Letter {
    let mut bound = u.max_letter().max(v.max_letter());
    bound = bound.max(u.len() as Letter).max(v.len() as Letter);
    bound + 2
}

/// The graph route to `u ≡ v`: equal weights, pinned isomorphism of the
/// operator graph components (crystal for the plactic monoid, quasi-crystal
/// for the others), and — for the sylvester and Baxter monoids — equality
/// of the corresponding shape invariant.
pub fn congruent_via_graph(u: &Word, v: &Word, kind: MonoidKind, label_bound: Letter) -> bool {
    if weight(u) != weight(v) {
        return false;
    }
    let graph_kind = match kind {
        MonoidKind::Plac => GraphKind::Crystal,
        _ => GraphKind::QuasiCrystal,
    };
    if !pinned_isomorphic(u, v, graph_kind, label_bound) {
        return false;
    }
    match kind {
        MonoidKind::Plac | MonoidKind::Hypo => true,
        MonoidKind::Sylv => sigma_sylv(u) == sigma_sylv(v),
        MonoidKind::Baxt => sigma_baxt(u) == sigma_baxt(v),
    }
}

/// Renders a component in Graphviz DOT syntax.
///
/// Vertices are listed first, then the lowering edges with their labels,
/// both in sorted order. Vertex names concatenate digits when every letter
/// in the component is at most 9 and fall back to space-separated letters
/// otherwise; the empty word is named `-`.
pub fn to_dot(view: &ComponentView) -> String {
    let all_small = view.vertices.iter().all(|w| w.max_letter() <= 9);
    let name = |w: &Word| {
        if all_small {
            w.compact()
        } else {
            w.to_string()
        }
    };
    let mut out = String::from("digraph component {\n");
    for w in &view.vertices {
        out.push_str(&format!("  \"{}\";\n", name(w)));
    }
    for (src, i, dst) in &view.edges {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            name(src),
            name(dst),
            i
        ));
    }
    out.push_str("}\n");
    out
}
