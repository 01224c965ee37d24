//! Weight diagrams of minuscule representations and the induced Hasse diagram.
//!
//! Orientation: the highest weight is the top node (length 0, the
//! fundamental class) and the lowest weight is the bottom node (the point
//! class). `length` is the codimension of the Schubert class; `dimension`
//! is `max_length − length`.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::lattice::{RootSystem, Weight};
use crate::rational::{fmt_q, int};
use crate::{Error, Result};

pub type NodeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub target: NodeId,
    pub label: usize,
}

#[derive(Clone, Debug)]
pub struct DiagramNode {
    pub weight: Weight,
    pub length: usize,
    /// Edges towards the top (length − 1).
    pub up: Vec<Edge>,
    /// Edges towards the bottom (length + 1).
    pub down: Vec<Edge>,
}

#[derive(Clone, Debug)]
pub struct WeightDiagram {
    pub root_system: RootSystem,
    pub highest_index: usize,
    pub nodes: Vec<DiagramNode>,
    pub top: NodeId,
    pub bottom: NodeId,
    levels: Vec<Vec<NodeId>>,
    index: HashMap<Weight, NodeId>,
    dual: Vec<NodeId>,
}

/// Breadth-first closure from `ω_{minuscule_index}`: every positive pairing
/// `⟨ω, α_i⟩` contributes an edge labelled `i` to `s_i ω`.
pub fn build_weight_diagram(rs: &RootSystem, minuscule_index: usize) -> Result<WeightDiagram> {
    let top_weight = rs.omega(minuscule_index)?.clone();
    let top_height = rs.height(&top_weight);

    let mut nodes: Vec<DiagramNode> = vec![DiagramNode {
        weight: top_weight.clone(),
        length: 0,
        up: Vec::new(),
        down: Vec::new(),
    }];
    let mut index = HashMap::from([(top_weight, 0usize)]);
    let mut queue = VecDeque::from([0usize]);

    while let Some(id) = queue.pop_front() {
        let w = nodes[id].weight.clone();
        for (k, p) in rs.pairings(&w).into_iter().enumerate() {
            let label = k + 1;
            if p.abs() > int(1) {
                return Err(Error::NotMinuscule {
                    root: label,
                    pairing: fmt_q(&p),
                });
            }
            if !p.is_one() {
                continue;
            }
            let v = rs.reflect(label, &w)?;
            let length = nodes[id].length + 1;
            let expected = &top_height - rs.height(&v);
            if expected != int(length as i64) {
                return Err(Error::NotMinuscule {
                    root: label,
                    pairing: format!("height drop {} at length {}", fmt_q(&expected), length),
                });
            }
            let target = match index.get(&v) {
                Some(&t) => t,
                None => {
                    let t = nodes.len();
                    nodes.push(DiagramNode {
                        weight: v.clone(),
                        length,
                        up: Vec::new(),
                        down: Vec::new(),
                    });
                    index.insert(v, t);
                    queue.push_back(t);
                    t
                }
            };
            nodes[id].down.push(Edge { target, label });
            nodes[target].up.push(Edge { target: id, label });
        }
    }

    let max_length = nodes.iter().map(|n| n.length).max().unwrap_or(0);
    let mut levels = vec![Vec::new(); max_length + 1];
    for (id, n) in nodes.iter().enumerate() {
        levels[n.length].push(id);
    }
    if levels[max_length].len() != 1 {
        return Err(Error::Diagram("no unique lowest weight".into()));
    }
    let bottom = levels[max_length][0];

    let mut diagram = WeightDiagram {
        root_system: rs.clone(),
        highest_index: minuscule_index,
        nodes,
        top: 0,
        bottom,
        levels,
        index,
        dual: Vec::new(),
    };
    diagram.dual = diagram.compute_duality()?;
    Ok(diagram)
}

impl WeightDiagram {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn max_length(&self) -> usize {
        self.nodes[self.bottom].length
    }

    pub fn node(&self, id: NodeId) -> &DiagramNode {
        &self.nodes[id]
    }

    pub fn length(&self, id: NodeId) -> usize {
        self.nodes[id].length
    }

    pub fn dimension(&self, id: NodeId) -> usize {
        self.max_length() - self.nodes[id].length
    }

    /// Node ids of a given length, in discovery order.
    pub fn level(&self, length: usize) -> &[NodeId] {
        self.levels.get(length).map_or(&[], Vec::as_slice)
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn find(&self, w: &Weight) -> Option<NodeId> {
        self.index.get(w).copied()
    }

    /// Position of the node inside its level.
    pub fn level_position(&self, id: NodeId) -> usize {
        self.level(self.length(id))
            .iter()
            .position(|&x| x == id)
            .expect("node lies in its level")
    }

    /// Labels of a shortest chain from the node up to the top, starting at
    /// the node. Applying the reflections last-letter-first to the highest
    /// weight yields the node's weight.
    pub fn reduced_word(&self, id: NodeId) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(id));
        let mut cur = id;
        while cur != self.top {
            let e = self.nodes[cur].up[0];
            word.push(e.label);
            cur = e.target;
        }
        word
    }

    /// Up to `cap` distinct reduced words of the node, each read from the node upwards.
    pub fn reduced_words(&self, id: NodeId, cap: usize) -> Vec<Vec<usize>> {
        fn walk(d: &WeightDiagram, cur: NodeId, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, cap: usize) {
            if out.len() >= cap {
                return;
            }
            if cur == d.top {
                out.push(prefix.clone());
                return;
            }
            for e in &d.nodes[cur].up {
                prefix.push(e.label);
                walk(d, e.target, prefix, out, cap);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        walk(self, id, &mut Vec::new(), &mut out, cap);
        out
    }

    /// Applies `s_{i1} ⋯ s_{ik}` to the highest weight.
    pub fn apply_word(&self, word: &[usize]) -> Result<Weight> {
        let rs = &self.root_system;
        word.iter()
            .rev()
            .try_fold(self.nodes[self.top].weight.clone(), |w, &i| rs.reflect(i, &w))
    }

    /// Number of length-increasing paths from `from` to every node.
    pub fn paths_from(&self, from: NodeId) -> Vec<u64> {
        let mut counts = vec![0u64; self.len()];
        counts[from] = 1;
        for len in self.length(from)..self.max_length() {
            for &id in self.level(len) {
                if counts[id] == 0 {
                    continue;
                }
                for e in &self.nodes[id].down {
                    counts[e.target] += counts[id];
                }
            }
        }
        counts
    }

    /// `κ(u, v)`: number of length-increasing paths from `u` to `v`.
    pub fn path_count(&self, u: NodeId, v: NodeId) -> u64 {
        if self.length(v) < self.length(u) {
            return 0;
        }
        self.paths_from(u)[v]
    }

    /// Degree of the Schubert class: `κ(w, bottom)`.
    pub fn degree(&self, id: NodeId) -> u64 {
        self.path_count(id, self.bottom)
    }

    /// Poincaré dual node `w*`.
    pub fn duality(&self, id: NodeId) -> NodeId {
        self.dual[id]
    }

    /// The longest Weyl element maps the diagram onto itself reversing the grading.
    fn compute_duality(&self) -> Result<Vec<NodeId>> {
        let rs = &self.root_system;
        let word = rs.longest_element_word();
        let max = self.max_length();
        self.nodes
            .iter()
            .map(|n| {
                let image = word
                    .iter()
                    .try_fold(n.weight.clone(), |w, &i| rs.reflect(i, &w))?;
                let id = self
                    .find(&image)
                    .ok_or_else(|| Error::Diagram(format!("w0 image {image} missing")))?;
                if self.length(id) + n.length != max {
                    return Err(Error::Diagram("duality does not reverse length".into()));
                }
                Ok(id)
            })
            .collect()
    }

    /// Node ids `w<length>_<position>` used in DOT output.
    pub fn dot_id(&self, id: NodeId) -> String {
        format!("w{}_{}", self.length(id), self.level_position(id))
    }

    pub fn to_dot(&self, names: Option<&ClassNames>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph hasse {{");
        let _ = writeln!(out, "  rankdir=LR;");
        for id in 0..self.len() {
            let label = match names {
                Some(n) => format!("{} ({})", n.name(id), self.degree(id)),
                None => format!("{}", self.degree(id)),
            };
            let _ = writeln!(
                out,
                "  {} [label=\"{}\", length={}];",
                self.dot_id(id),
                label,
                self.length(id)
            );
        }
        for id in 0..self.len() {
            for e in &self.nodes[id].down {
                let _ = writeln!(
                    out,
                    "  {} -> {} [label=\"{}\"];",
                    self.dot_id(id),
                    self.dot_id(e.target),
                    e.label
                );
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn export(&self, names: Option<&ClassNames>) -> DiagramExport {
        let nodes = (0..self.len())
            .map(|id| NodeExport {
                id: self.dot_id(id),
                name: names.map(|n| n.name(id).to_string()),
                weight: self.nodes[id].weight.clone(),
                length: self.length(id),
                dimension: self.dimension(id),
                degree: self.degree(id),
            })
            .collect();
        let edges = (0..self.len())
            .flat_map(|id| {
                self.nodes[id].down.iter().map(move |e| EdgeExport {
                    source: self.dot_id(id),
                    target: self.dot_id(e.target),
                    label: e.label,
                })
            })
            .collect();
        DiagramExport {
            root_system: self.root_system.name.to_string(),
            highest_weight_index: self.highest_index,
            nodes,
            edges,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeExport {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub weight: Weight,
    pub length: usize,
    pub dimension: usize,
    pub degree: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeExport {
    pub source: String,
    pub target: String,
    pub label: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramExport {
    pub root_system: String,
    pub highest_weight_index: usize,
    pub nodes: Vec<NodeExport>,
    pub edges: Vec<EdgeExport>,
}

/// The Cayley plane: `E6` with highest weight `ω6`.
pub fn cayley_plane() -> WeightDiagram {
    build_weight_diagram(&crate::lattice::build_e6(), 6).expect("ω6 is minuscule")
}

/// The half-spin diagram of `D5` (the spinor variety `S10`).
pub fn spinor_variety() -> WeightDiagram {
    build_weight_diagram(&crate::lattice::build_d5(), 5).expect("ω5 of D5 is minuscule")
}

/// Degree pinning the primed codimension-4 class.
const DEGREE_S4P: u64 = 33;
/// Degrees of `σ8` (the quadric `OP^1`), `σ8′`, `σ8″`.
const DEGREES_S8: [u64; 3] = [2, 7, 5];

/// ASCII class names: `s<k>` for the unique class of codimension `k`,
/// `s<k>p` / `s<k>pp` for primed pairs, `s8` for the quadric line.
#[derive(Clone, Debug)]
pub struct ClassNames {
    names: Vec<String>,
    lookup: HashMap<String, NodeId>,
}

impl ClassNames {
    /// Naming of the Cayley plane classes. `σ4′` is the degree-33 class,
    /// `σ5′ = σ4′·H`, `σ6″ = σ5″·H`, `σ7″ = σ6″·H`, codimension 8 is fixed by
    /// degrees and codimensions 9..12 by duality.
    pub fn cayley(d: &WeightDiagram) -> Result<Self> {
        if d.level_sizes() != [1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1] {
            return Err(Error::Diagram("not the Cayley plane diagram".into()));
        }
        let mut names = vec![String::new(); d.len()];
        for k in 0..=16 {
            if let [id] = d.level(k) {
                names[*id] = format!("s{k}");
            }
        }
        let other = |level: usize, id: NodeId| -> NodeId {
            *d.level(level).iter().find(|&&x| x != id).unwrap()
        };
        let only_child = |id: NodeId| -> Result<NodeId> {
            match d.node(id).down.as_slice() {
                [e] => Ok(e.target),
                _ => Err(Error::Diagram(format!("node {} has several children", d.dot_id(id)))),
            }
        };
        let assign = |k: usize, primed: NodeId, names: &mut Vec<String>| {
            names[primed] = format!("s{k}p");
            names[other(k, primed)] = format!("s{k}pp");
        };

        let s4p = *d
            .level(4)
            .iter()
            .find(|&&id| d.degree(id) == DEGREE_S4P)
            .ok_or_else(|| Error::Diagram("no codimension-4 class of degree 33".into()))?;
        assign(4, s4p, &mut names);
        let s5p = only_child(s4p)?;
        assign(5, s5p, &mut names);
        let s6pp = only_child(other(5, s5p))?;
        assign(6, other(6, s6pp), &mut names);
        let s7pp = only_child(s6pp)?;
        assign(7, other(7, s7pp), &mut names);
        for (&deg, suffix) in DEGREES_S8.iter().zip(["", "p", "pp"]) {
            let id = *d
                .level(8)
                .iter()
                .find(|&&id| d.degree(id) == deg)
                .ok_or_else(|| Error::Diagram(format!("no codimension-8 class of degree {deg}")))?;
            names[id] = format!("s8{suffix}");
        }
        for k in 9..=12 {
            for &id in d.level(k) {
                let dual_name = &names[d.duality(id)];
                names[id] = format!("s{k}{}", dual_name.trim_start_matches(|c: char| c == 's' || c.is_ascii_digit()));
            }
        }
        Self::from_names(names)
    }

    /// Generic names `w<length>_<position>`.
    pub fn generic(d: &WeightDiagram) -> Self {
        Self::from_names((0..d.len()).map(|id| d.dot_id(id)).collect()).expect("dot ids are unique")
    }

    fn from_names(names: Vec<String>) -> Result<Self> {
        let mut lookup = HashMap::new();
        for (id, n) in names.iter().enumerate() {
            if n.is_empty() || lookup.insert(n.clone(), id).is_some() {
                return Err(Error::Diagram(format!("bad class name `{n}`")));
            }
        }
        Ok(Self { names, lookup })
    }

    pub fn name(&self, id: NodeId) -> &str {
        &self.names[id]
    }

    pub fn all(&self) -> &[String] {
        &self.names
    }

    /// Resolves a class name; `h` is an alias for `s1`.
    pub fn id(&self, name: &str) -> Result<NodeId> {
        let key = if name == "h" { "s1" } else { name };
        self.lookup
            .get(key)
            .copied()
            .ok_or_else(|| Error::UnknownClass(name.to_string()))
    }
}

/// Every node has weight pairings in `{−1, 0, 1}` with all simple roots.
pub fn is_minuscule_orbit(d: &WeightDiagram) -> bool {
    d.nodes.iter().all(|n| {
        d.root_system
            .pairings(&n.weight)
            .iter()
            .all(|p| p.abs() <= int(1) && (p.is_zero() || p.abs().is_one()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_e6;

    #[test]
    fn cayley_plane_shape() {
        let d = cayley_plane();
        assert_eq!(d.len(), 27);
        assert_eq!(d.max_length(), 16);
        assert_eq!(d.level_sizes(), vec![1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1]);
        assert_eq!(d.node(d.top).down, vec![Edge { target: 1, label: 6 }]);
        assert!(is_minuscule_orbit(&d));
        let rs = build_e6();
        assert_eq!(d.node(d.bottom).weight, -rs.omega(1).unwrap());
    }

    #[test]
    fn reduced_words() {
        let d = cayley_plane();
        assert!(d.reduced_word(d.top).is_empty());
        assert_eq!(d.reduced_word(d.level(1)[0]), vec![6]);
        let w = d.reduced_word(d.bottom);
        assert_eq!(w.len(), 16);
        assert_eq!(d.apply_word(&w).unwrap(), d.node(d.bottom).weight);
        for id in 0..d.len() {
            for word in d.reduced_words(id, 100) {
                assert_eq!(word.len(), d.length(id));
                assert_eq!(d.apply_word(&word).unwrap(), d.node(id).weight);
            }
        }
    }

    #[test]
    fn path_counts() {
        let d = cayley_plane();
        assert_eq!(d.path_count(d.top, d.bottom), 78);
        assert_eq!(d.path_count(5, 5), 1);
        assert_eq!(d.path_count(d.bottom, d.top), 0);
        let s = spinor_variety();
        assert_eq!(s.len(), 16);
        assert_eq!(s.max_length(), 10);
        assert_eq!(s.level_sizes(), vec![1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1]);
        assert_eq!(s.path_count(s.top, s.bottom), 12);
    }

    #[test]
    fn duality_is_an_involution() {
        let d = cayley_plane();
        assert_eq!(d.duality(d.top), d.bottom);
        for id in 0..d.len() {
            assert_eq!(d.duality(d.duality(id)), id);
            assert_eq!(d.length(d.duality(id)), 16 - d.length(id));
        }
        for &id in d.level(8) {
            assert_eq!(d.duality(id), id);
        }
    }

    #[test]
    fn class_names_follow_degrees() {
        let d = cayley_plane();
        let n = ClassNames::cayley(&d).unwrap();
        let deg = |s: &str| d.degree(n.id(s).unwrap());
        let expected = [
            ("s0", 78), ("s3", 78), ("s4p", 33), ("s4pp", 45), ("s5p", 33), ("s5pp", 12),
            ("s6p", 21), ("s6pp", 12), ("s7p", 9), ("s7pp", 12), ("s8", 2), ("s8p", 7),
            ("s8pp", 5), ("s9p", 2), ("s9pp", 5), ("s10p", 2), ("s10pp", 3), ("s11p", 2),
            ("s11pp", 1), ("s12p", 1), ("s12pp", 1), ("s13", 1), ("s16", 1),
        ];
        for (name, d) in expected {
            assert_eq!(deg(name), d, "{name}");
        }
        assert_eq!(n.id("h").unwrap(), n.id("s1").unwrap());
        assert_eq!(d.duality(n.id("s4p").unwrap()), n.id("s12p").unwrap());
        assert!(matches!(n.id("s17"), Err(Error::UnknownClass(_))));
    }

    #[test]
    fn non_minuscule_weight_is_rejected() {
        // ω4 of E6 in this numbering is the adjoint-type branch node weight.
        let rs = build_e6();
        assert!(matches!(
            build_weight_diagram(&rs, 3),
            Err(Error::NotMinuscule { .. })
        ));
    }

    #[test]
    fn dot_output_mentions_every_node() {
        let d = cayley_plane();
        let dot = d.to_dot(Some(&ClassNames::cayley(&d).unwrap()));
        assert!(dot.contains("w0_0 -> w1_0 [label=\"6\"]"));
        assert_eq!(dot.matches("->").count(), d.nodes.iter().map(|n| n.down.len()).sum::<usize>());
    }
}
