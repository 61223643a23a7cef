//! Schreier graphs of generating vectors as an independent orientability check.
//!
//! The graph on the elements of G with an edge `x → x·g_i` for every vertex and
//! coordinate is the 1-skeleton of the regular covering of the rose R_n that
//! belongs to `γ: x_i ↦ g_i`. Its non-tree edges span the cycle space, so there
//! are `1 + |G|(n − 1)` of them, and the covering is orientable exactly when the
//! sign homomorphism `ω: x_i ↦ v_i` is +1 on every basis cycle.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::{Character, Elem, FiniteGroup};
use crate::nielsen::MarkedVector;
use crate::sign::Sign;

/// A free-group letter `x_coord^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub coord: usize,
    pub inverse: bool,
}

/// A word in the basis letters of F_n.
pub type Word = Vec<Letter>;

/// Evaluates a word under `x_i ↦ g_i`.
pub fn eval_in_group(group: &FiniteGroup, g: &[Elem], word: &[Letter]) -> Elem {
    word.iter().fold(group.identity(), |acc, l| {
        let x = g[l.coord];
        group.mul(acc, if l.inverse { group.inv(x) } else { x })
    })
}

/// Evaluates a word under `x_i ↦ v_i`.
pub fn eval_sign(v: &[Sign], word: &[Letter]) -> Sign {
    word.iter().fold(Sign::Plus, |acc, l| acc * v[l.coord])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: Elem,
    pub dst: Elem,
    pub coord: usize,
}

#[derive(Clone, Debug)]
pub struct SchreierGraph {
    n: usize,
    root: Elem,
    edges: Vec<Edge>,
    /// Tree edge index reaching each vertex, `None` at the root.
    parent_edge: Vec<Option<usize>>,
    basis: Vec<usize>,
}

impl SchreierGraph {
    pub fn vertex_count(&self) -> usize {
        self.parent_edge.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn root(&self) -> Elem {
        self.root
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Indices of the non-tree edges, one per basis cycle.
    pub fn basis_edges(&self) -> &[usize] {
        &self.basis
    }

    pub fn basis_cycle_count(&self) -> usize {
        self.basis.len()
    }

    pub fn is_tree_edge(&self, index: usize) -> bool {
        let e = self.edges[index];
        self.parent_edge[e.dst] == Some(index)
    }

    /// The tree path from the root to `x`, read as a word.
    pub fn tree_word(&self, x: Elem) -> Word {
        let mut word = Vec::new();
        let mut at = x;
        while let Some(k) = self.parent_edge[at] {
            let e = self.edges[k];
            word.push(Letter { coord: e.coord, inverse: false });
            at = e.src;
        }
        word.reverse();
        word
    }

    /// `tree(src) · x_coord · tree(dst)⁻¹` for the edge with the given index.
    pub fn cycle_word(&self, index: usize) -> Word {
        let e = self.edges[index];
        let mut word = self.tree_word(e.src);
        word.push(Letter { coord: e.coord, inverse: false });
        word.extend(
            self.tree_word(e.dst)
                .into_iter()
                .rev()
                .map(|l| Letter { coord: l.coord, inverse: !l.inverse }),
        );
        word
    }

    /// Edge list, one `src dst coord sign` line per edge (names, 1-based
    /// coordinate, sign of that coordinate in `x`).
    pub fn to_edge_list(&self, group: &FiniteGroup, x: &MarkedVector) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let _ = writeln!(out, "{} {} {} {}", group.name(e.src), group.name(e.dst), e.coord + 1, x.v()[e.coord]);
        }
        out
    }
}

/// The Schreier graph of `g`, with a breadth-first spanning tree rooted at the
/// identity.
pub fn schreier_graph(group: &FiniteGroup, g: &[Elem]) -> Result<SchreierGraph> {
    schreier_graph_rooted(group, g, group.identity())
}

/// As [`schreier_graph`] with the spanning tree rooted at `root`. Edges are
/// explored in vertex-discovery order, coordinates in increasing order.
pub fn schreier_graph_rooted(group: &FiniteGroup, g: &[Elem], root: Elem) -> Result<SchreierGraph> {
    if g.is_empty() {
        return Err(Error::ZeroLength);
    }
    for &x in g.iter().chain([&root]) {
        group.check_index(x)?;
    }
    if !group.generates(g) {
        return Err(Error::NotGenerating);
    }
    let n = g.len();
    let edges: Vec<Edge> = group
        .elements()
        .flat_map(|src| (0..n).map(move |coord| (src, coord)))
        .map(|(src, coord)| Edge { src, dst: group.mul(src, g[coord]), coord })
        .collect();

    let mut parent_edge = vec![None; group.order()];
    let mut reached = vec![false; group.order()];
    reached[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for coord in 0..n {
            let k = x * n + coord;
            let y = edges[k].dst;
            if !reached[y] {
                reached[y] = true;
                parent_edge[y] = Some(k);
                queue.push_back(y);
            }
        }
    }
    let mut graph = SchreierGraph { n, root, edges, parent_edge, basis: Vec::new() };
    graph.basis = (0..graph.edges.len()).filter(|&k| !graph.is_tree_edge(k)).collect();
    Ok(graph)
}

/// Genus `1 + |G|(n − 1)` of the covering handlebody.
pub fn covering_genus(group: &FiniteGroup, n: usize) -> u64 {
    1 + group.order() as u64 * (n as u64 - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrientationVerdict {
    /// The covering is orientable; `ω = ω̄ ∘ γ` for this character.
    Orientable(Character),
    /// A basis cycle on which ω is −1.
    Nonorientable { cycle: Word },
}

impl OrientationVerdict {
    pub fn is_orientable(&self) -> bool {
        matches!(self, OrientationVerdict::Orientable(_))
    }
}

/// Decides orientability of the covering of `N(v)` determined by `g` by
/// evaluating ω on every basis cycle.
pub fn covering_orientable(group: &FiniteGroup, x: &MarkedVector) -> Result<OrientationVerdict> {
    let graph = schreier_graph(group, x.g())?;
    verdict_on(group, &graph, x)
}

/// [`covering_orientable`] on a prebuilt graph for `x.g()`.
pub fn verdict_on(group: &FiniteGroup, graph: &SchreierGraph, x: &MarkedVector) -> Result<OrientationVerdict> {
    for &k in graph.basis_edges() {
        let cycle = graph.cycle_word(k);
        if eval_sign(x.v(), &cycle) == Sign::Minus {
            return Ok(OrientationVerdict::Nonorientable { cycle });
        }
    }
    // ω̄(y) is ω of any path from the root to root·y
    let values = group
        .elements()
        .map(|y| eval_sign(x.v(), &graph.tree_word(group.mul(graph.root(), y))))
        .collect();
    Character::from_values(group, values)
        .map(OrientationVerdict::Orientable)
        .ok_or_else(|| Error::Inconsistent("tree-word signs do not form a character".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use Sign::{Minus, Plus};

    fn group(s: &str) -> FiniteGroup {
        FiniteGroup::build(&s.parse::<GroupSpec>().unwrap()).unwrap()
    }

    #[test]
    fn graph_sizes() {
        let c2 = group("cyclic:2");
        let gr = schreier_graph(&c2, &[1]).unwrap();
        assert_eq!((gr.vertex_count(), gr.edges().len(), gr.basis_cycle_count()), (2, 2, 1));

        let q = group("quaternion");
        let gr = schreier_graph(&q, q.generators()).unwrap();
        assert_eq!((gr.vertex_count(), gr.edges().len(), gr.basis_cycle_count()), (8, 16, 9));

        let d3 = group("dihedral:3");
        let gr = schreier_graph(&d3, d3.generators()).unwrap();
        assert_eq!((gr.vertex_count(), gr.edges().len(), gr.basis_cycle_count()), (6, 12, 7));
    }

    #[test]
    fn genus_formula() {
        assert_eq!(covering_genus(&group("quaternion"), 2), 9);
        assert_eq!(covering_genus(&group("cyclic:7"), 1), 1);
        assert_eq!(covering_genus(&group("dihedral:6"), 3), 25);
    }

    #[test]
    fn cycles_lie_in_kernel() {
        let d4 = group("dihedral:4");
        let g = d4.generators().to_vec();
        let gr = schreier_graph(&d4, &g).unwrap();
        for &k in gr.basis_edges() {
            assert_eq!(eval_in_group(&d4, &g, &gr.cycle_word(k)), d4.identity());
        }
        for y in d4.elements() {
            assert_eq!(eval_in_group(&d4, &g, &gr.tree_word(y)), y);
        }
    }

    #[test]
    fn not_generating_rejected() {
        let c4 = group("cyclic:4");
        assert!(matches!(schreier_graph(&c4, &[2]), Err(Error::NotGenerating)));
    }

    #[test]
    fn verdicts() {
        let q = group("quaternion");
        let x = MarkedVector::new(&q, q.generators().to_vec(), vec![Plus, Plus]).unwrap();
        match covering_orientable(&q, &x).unwrap() {
            OrientationVerdict::Orientable(c) => assert!(c.is_trivial()),
            other => panic!("{other:?}"),
        }

        let x = MarkedVector::new(&q, q.generators().to_vec(), vec![Minus, Minus]).unwrap();
        match covering_orientable(&q, &x).unwrap() {
            OrientationVerdict::Orientable(c) => {
                assert_eq!(c.value(q.generators()[0]), Minus);
                assert_eq!(c.value(q.generators()[1]), Minus);
            }
            other => panic!("{other:?}"),
        }

        let d3 = group("dihedral:3");
        let (s1, s2) = (d3.generators()[0], d3.generators()[1]);
        let x = MarkedVector::new(&d3, vec![s1, d3.mul(s1, s2)], vec![Plus, Minus]).unwrap();
        match covering_orientable(&d3, &x).unwrap() {
            OrientationVerdict::Nonorientable { cycle } => {
                assert_eq!(eval_sign(x.v(), &cycle), Minus);
                assert_eq!(eval_in_group(&d3, x.g(), &cycle), d3.identity());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn edge_list_format() {
        let c2 = group("cyclic:2");
        let x = MarkedVector::new(&c2, vec![1], vec![Minus]).unwrap();
        let gr = schreier_graph(&c2, x.g()).unwrap();
        assert_eq!(gr.to_edge_list(&c2, &x), "1 s 1 -\ns 1 1 -\n");
    }
}
