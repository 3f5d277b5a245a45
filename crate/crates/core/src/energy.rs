//! Shifted energy `F` on `B (x) B` and the difference matrix.
//!
//! `F(b1 (x) b2) = ht(delta) H(b1 (x) b2) + ht(wt b1) - ht(wt b2)`. Under a
//! Kashiwara move `f_i` on the tensor product, `F` drops by one when `f_i`
//! acts on the first factor (`phi_i(b1) > eps_i(b2)`) and rises by one when
//! it acts on the second. Starting from `F(phi (x) phi) = 0` the values are
//! propagated over the tensor graph, walking arrows in both directions, and
//! every arrow is checked against the values at both of its ends.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::crystal::{build_crystal, Crystal, CrystalElement};
use crate::rootsystem::{affine_config, AffineType};
use crate::{Error, Result};

/// Which tensor factor an `f_i` move acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    First,
    Second,
}

impl Factor {
    /// Change of `F` along the arrow.
    pub fn delta(self) -> i32 {
        match self {
            Factor::First => -1,
            Factor::Second => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorEdge {
    pub from: usize,
    pub to: usize,
    pub node: u8,
    pub factor: Factor,
}

/// The crystal graph of `B (x) B`. Vertex `b1 * |B| + b2` is `b1 (x) b2`.
#[derive(Debug, Clone)]
pub struct TensorGraph {
    size: usize,
    edges: Vec<TensorEdge>,
}

impl TensorGraph {
    pub fn vertex_count(&self) -> usize {
        self.size * self.size
    }

    pub fn vertex(&self, b1: usize, b2: usize) -> usize {
        b1 * self.size + b2
    }

    pub fn factors(&self, v: usize) -> (usize, usize) {
        (v / self.size, v % self.size)
    }

    pub fn edges(&self) -> &[TensorEdge] {
        &self.edges
    }

    pub fn edges_from(&self, v: usize) -> impl Iterator<Item = &TensorEdge> {
        self.edges.iter().filter(move |e| e.from == v)
    }
}

/// Tensor product rule: `f_i(b1 (x) b2) = f_i b1 (x) b2` if `phi_i(b1) >
/// eps_i(b2)`, else `b1 (x) f_i b2`.
pub fn build_tensor_arrows(crystal: &Crystal) -> TensorGraph {
    let n = crystal.len();
    let mut edges = Vec::new();
    for b1 in 0..n {
        for b2 in 0..n {
            for i in 0..crystal.node_count() {
                let edge = if crystal.phi(b1, i) > crystal.epsilon(b2, i) {
                    crystal.f(b1, i).map(|t| (t * n + b2, Factor::First))
                } else {
                    crystal.f(b2, i).map(|t| (b1 * n + t, Factor::Second))
                };
                if let Some((to, factor)) = edge {
                    edges.push(TensorEdge {
                        from: b1 * n + b2,
                        to,
                        node: i as u8,
                        factor,
                    });
                }
            }
        }
    }
    TensorGraph { size: n, edges }
}

/// Order in which frontier vertices are expanded.
pub enum Traversal<'a> {
    BreadthFirst,
    DepthFirst,
    /// Called with the frontier length; returns the index to expand next.
    Custom(&'a mut dyn FnMut(usize) -> usize),
}

/// `F` on every tensor vertex, indexed like [`TensorGraph`].
pub fn compute_f(crystal: &Crystal, graph: &TensorGraph) -> Result<Vec<i32>> {
    compute_f_with(crystal, graph, Traversal::BreadthFirst)
}

pub fn compute_f_with(
    crystal: &Crystal,
    graph: &TensorGraph,
    mut order: Traversal<'_>,
) -> Result<Vec<i32>> {
    let nv = graph.vertex_count();
    // undirected adjacency: (neighbour, change of F when moving there)
    let mut adjacency: Vec<Vec<(usize, i32)>> = vec![Vec::new(); nv];
    for e in graph.edges() {
        adjacency[e.from].push((e.to, e.factor.delta()));
        adjacency[e.to].push((e.from, -e.factor.delta()));
    }

    let start = graph.vertex(crystal.ground(), crystal.ground());
    let mut values: Vec<Option<i32>> = vec![None; nv];
    values[start] = Some(0);
    let mut frontier: VecDeque<usize> = VecDeque::from([start]);
    while !frontier.is_empty() {
        let v = match &mut order {
            Traversal::BreadthFirst => frontier.pop_front(),
            Traversal::DepthFirst => frontier.pop_back(),
            Traversal::Custom(pick) => {
                let k = pick(frontier.len()) % frontier.len();
                frontier.swap_remove_back(k)
            }
        }
        .expect("frontier is nonempty");
        let here = values[v].expect("frontier vertices carry a value");
        for &(w, delta) in &adjacency[v] {
            let proposed = here + delta;
            match values[w] {
                None => {
                    values[w] = Some(proposed);
                    frontier.push_back(w);
                }
                Some(existing) if existing != proposed => {
                    return Err(Error::Consistency {
                        vertex: graph.factors(w),
                        existing,
                        proposed,
                    });
                }
                Some(_) => {}
            }
        }
    }
    let unreached = values.iter().filter(|v| v.is_none()).count();
    if unreached > 0 {
        return Err(Error::Coverage { unreached });
    }
    Ok(values.into_iter().map(|v| v.unwrap_or_default()).collect())
}

/// The forward-only propagation: follows `f_i` arrows out of `phi (x) phi`
/// and nothing else. Unreached vertices stay `None`.
pub fn forward_propagation(crystal: &Crystal, graph: &TensorGraph) -> Vec<Option<i32>> {
    let mut out_edges: Vec<Vec<(usize, i32)>> = vec![Vec::new(); graph.vertex_count()];
    for e in graph.edges() {
        out_edges[e.from].push((e.to, e.factor.delta()));
    }
    let start = graph.vertex(crystal.ground(), crystal.ground());
    let mut values = vec![None; graph.vertex_count()];
    values[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let here: i32 = values[v].expect("queued vertices carry a value");
        for &(w, delta) in &out_edges[v] {
            if values[w].is_none() {
                values[w] = Some(here + delta);
                queue.push_back(w);
            }
        }
    }
    values
}

/// Square table `entries[b'][b] = F(b' (x) b)` over the canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceMatrix {
    affine_type: AffineType,
    order: Vec<CrystalElement>,
    entries: Vec<i32>,
}

impl DifferenceMatrix {
    /// Assembles a matrix from row-major entries; checks the shape only.
    pub fn from_parts(
        affine_type: AffineType,
        order: Vec<CrystalElement>,
        entries: Vec<i32>,
    ) -> Result<DifferenceMatrix> {
        if entries.len() != order.len() * order.len() {
            return Err(Error::Integrity(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                order.len(),
                order.len()
            )));
        }
        Ok(DifferenceMatrix {
            affine_type,
            order,
            entries,
        })
    }

    pub fn affine_type(&self) -> AffineType {
        self.affine_type
    }

    pub fn order(&self) -> &[CrystalElement] {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn get(&self, row: usize, col: usize) -> i32 {
        self.entries[row * self.size() + col]
    }

    pub fn row(&self, row: usize) -> &[i32] {
        &self.entries[row * self.size()..(row + 1) * self.size()]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i32]> {
        self.entries.chunks(self.size().max(1))
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn position(&self, b: &CrystalElement) -> Option<usize> {
        self.order.iter().position(|x| x == b)
    }

    /// `F(b1 (x) b2)` by element.
    pub fn value(&self, b1: &CrystalElement, b2: &CrystalElement) -> Option<i32> {
        Some(self.get(self.position(b1)?, self.position(b2)?))
    }

    /// Energy `H(b1 (x) b2) = (F - ht(wt b1) + ht(wt b2)) / ht(delta)`; must
    /// be an exact quotient in `{0, 1, 2}`.
    pub fn recover_h(&self, row: usize, col: usize) -> Result<i32> {
        let ht_delta = affine_config(self.affine_type).ht_delta;
        let (b1, b2) = (self.order[row], self.order[col]);
        let shifted = self.get(row, col) - b1.ht_wt() + b2.ht_wt();
        if shifted % ht_delta != 0 {
            return Err(Error::Integrity(format!(
                "F({b1} (x) {b2}) = {} does not give an integral energy",
                self.get(row, col)
            )));
        }
        let h = shifted / ht_delta;
        if !(0..=2).contains(&h) {
            return Err(Error::Integrity(format!(
                "energy H({b1} (x) {b2}) = {h} outside {{0, 1, 2}}"
            )));
        }
        Ok(h)
    }
}

/// Difference matrix of `crystal` with `F` from a given traversal.
pub fn difference_matrix_of(
    crystal: &Crystal,
    traversal: Traversal<'_>,
) -> Result<DifferenceMatrix> {
    let graph = build_tensor_arrows(crystal);
    let entries = compute_f_with(crystal, &graph, traversal)?;
    DifferenceMatrix::from_parts(crystal.affine_type(), crystal.elements().to_vec(), entries)
}

pub fn difference_matrix(t: AffineType) -> Result<DifferenceMatrix> {
    difference_matrix_of(&build_crystal(t), Traversal::BreadthFirst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> CrystalElement {
        s.parse().unwrap()
    }

    #[test]
    fn ground_edge_at_node_zero() {
        let c = build_crystal(AffineType::D4_3);
        let g = build_tensor_arrows(&c);
        let top = c.index_of(&CrystalElement::Pos(c.theta())).unwrap();
        let e = g.edges_from(g.vertex(0, 0)).find(|e| e.node == 0).unwrap();
        assert_eq!(e.factor, Factor::Second);
        assert_eq!(e.to, g.vertex(0, top));
    }

    #[test]
    fn no_first_factor_zero_move_from_top() {
        for t in AffineType::ALL {
            let c = build_crystal(t);
            let g = build_tensor_arrows(&c);
            let top = c.index_of(&CrystalElement::Pos(c.theta())).unwrap();
            for b in 0..c.len() {
                assert!(g
                    .edges_from(g.vertex(top, b))
                    .all(|e| !(e.node == 0 && e.factor == Factor::First)));
            }
        }
    }

    #[test]
    fn e6_2_vertex_count() {
        let g = build_tensor_arrows(&build_crystal(AffineType::E6_2));
        assert_eq!(g.vertex_count(), 729);
    }

    #[test]
    fn d4_3_examples() {
        let m = difference_matrix(AffineType::D4_3).unwrap();
        assert_eq!(m.value(&el("phi"), &el("phi")), Some(0));
        assert_eq!(m.value(&el("phi"), &el("+21")), Some(1));
        assert_eq!(m.value(&el("+21"), &el("-21")), Some(6));
        assert_eq!(m.row(0), &[0, 1, 2, 3, 4, 5, 6, 7]);
        let (r, c) = (
            m.position(&el("+21")).unwrap(),
            m.position(&el("-21")).unwrap(),
        );
        assert_eq!(m.recover_h(r, c), Ok(0));
        assert_eq!(m.recover_h(0, 0), Ok(0));
    }

    #[test]
    fn g2_and_e6_2_examples() {
        let g2 = difference_matrix(AffineType::G2_1).unwrap();
        assert_eq!(g2.value(&el("r2"), &el("r2")), Some(0));
        let e62 = difference_matrix(AffineType::E6_2).unwrap();
        assert_eq!(e62.value(&el("+2321"), &el("phi")), Some(17));
    }

    #[test]
    fn recover_h_rejects_corruption() {
        let m = difference_matrix(AffineType::D4_3).unwrap();
        let mut entries = m.entries().to_vec();
        entries[1] += 1;
        let bad =
            DifferenceMatrix::from_parts(m.affine_type(), m.order().to_vec(), entries).unwrap();
        assert!(matches!(bad.recover_h(0, 1), Err(Error::Integrity(_))));
        let mut entries = m.entries().to_vec();
        entries[1] += 3 * 4;
        let bad =
            DifferenceMatrix::from_parts(m.affine_type(), m.order().to_vec(), entries).unwrap();
        assert!(matches!(bad.recover_h(0, 1), Err(Error::Integrity(_))));
    }

    #[test]
    fn shape_mismatch_rejected() {
        assert!(DifferenceMatrix::from_parts(
            AffineType::D4_3,
            alloc::vec![CrystalElement::Ground],
            alloc::vec![0, 1]
        )
        .is_err());
    }

    #[test]
    fn ground_row() {
        for t in AffineType::ALL {
            let m = difference_matrix(t).unwrap();
            let ht = affine_config(t).ht_delta;
            for (k, b) in m.order().iter().enumerate().skip(1) {
                assert_eq!(m.get(0, k), ht - b.ht_wt(), "{t} {b}");
                assert_eq!(m.recover_h(0, k), Ok(1), "{t} {b}");
            }
        }
    }

    #[test]
    fn forward_walk_agrees_with_full_walk() {
        for t in AffineType::ALL {
            let c = build_crystal(t);
            let g = build_tensor_arrows(&c);
            let full = compute_f(&c, &g).unwrap();
            let forward: Vec<i32> = forward_propagation(&c, &g)
                .into_iter()
                .map(|v| v.expect("reached"))
                .collect();
            assert_eq!(forward, full, "{t}");
        }
    }
}
