//! Hypergraphs, red/blue instances, and the set quantities derived from them:
//! the edges a vertex set hits, the blue star of a vertex, the safe vertex set
//! of a blue edge subset, and the covering predicate built on it.

use crate::error::{Error, Result};
use crate::set::{BitSet, EdgeSubset, VertexSet};

/// A vertex universe `0..vertex_count` and an ordered edge list.
///
/// Edges may repeat and need not be minimal. Operations that want a simple
/// hypergraph call [`Hypergraph::normalized`] first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(vertex_count: usize, edges: Vec<VertexSet>) -> Result<Self> {
        for edge in &edges {
            if edge.bound() > vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: edge.bound() - 1,
                    universe: vertex_count,
                });
            }
        }
        Ok(Self { vertex_count, edges })
    }

    /// Convenience constructor from index lists. Panics on out-of-range vertices.
    pub fn from_lists(vertex_count: usize, edges: &[&[usize]]) -> Self {
        let edges = edges.iter().map(|e| e.iter().copied().collect()).collect();
        Self::new(vertex_count, edges).expect("edge vertex out of range")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn universe(&self) -> VertexSet {
        BitSet::full(self.vertex_count)
    }

    /// Size of the largest edge (0 for an edgeless hypergraph).
    pub fn dimension(&self) -> usize {
        self.edges.iter().map(BitSet::len).max().unwrap_or(0)
    }

    pub fn degree(&self, x: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(x)).count()
    }

    pub fn first_empty_edge(&self) -> Option<usize> {
        self.edges.iter().position(BitSet::is_empty)
    }

    pub(crate) fn ensure_no_empty_edge(&self) -> Result<()> {
        match self.first_empty_edge() {
            Some(i) => Err(Error::EmptyEdge(i)),
            None => Ok(()),
        }
    }

    /// Same hypergraph with duplicate edges collapsed, in canonical order.
    pub fn normalized(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.sort();
        edges.dedup();
        Self {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// The inclusion-minimal edges, deduplicated and in canonical order.
    pub fn minimal_edges(&self) -> SolutionSet {
        SolutionSet::minimal_of(self.edges.clone())
    }

    /// Every edge intersected with `keep`; the universe is unchanged.
    pub fn restrict(&self, keep: &VertexSet) -> Self {
        Self {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|e| e.intersection(keep)).collect(),
        }
    }
}

/// A red hypergraph (edges to hit) and a blue hypergraph (edges to avoid)
/// over one shared vertex universe.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiInstance {
    red: Hypergraph,
    blue: Hypergraph,
}

impl BiInstance {
    pub fn new(red: Hypergraph, blue: Hypergraph) -> Result<Self> {
        if red.vertex_count != blue.vertex_count {
            return Err(Error::InvalidParameter(format!(
                "red universe has {} vertices but blue has {}",
                red.vertex_count, blue.vertex_count
            )));
        }
        Ok(Self { red, blue })
    }

    pub(crate) fn from_parts(red: Hypergraph, blue: Hypergraph) -> Self {
        debug_assert_eq!(red.vertex_count, blue.vertex_count);
        Self { red, blue }
    }

    pub fn from_lists(vertex_count: usize, red: &[&[usize]], blue: &[&[usize]]) -> Self {
        Self {
            red: Hypergraph::from_lists(vertex_count, red),
            blue: Hypergraph::from_lists(vertex_count, blue),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.red.vertex_count
    }

    pub fn red(&self) -> &Hypergraph {
        &self.red
    }

    pub fn blue(&self) -> &Hypergraph {
        &self.blue
    }

    pub(crate) fn ensure_red_nonempty(&self) -> Result<()> {
        match self.red.first_empty_edge() {
            Some(i) => Err(Error::EmptyRedEdge(i)),
            None => Ok(()),
        }
    }

    /// Indices of the blue edges containing `x`.
    pub fn blue_star(&self, x: usize) -> EdgeSubset {
        star(x, &self.blue)
    }

    /// The vertices all of whose blue edges lie inside `b`.
    pub fn safe_vertices(&self, b: &EdgeSubset) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&x| self.blue_star(x).is_subset(b))
            .collect()
    }

    /// Whether the safe vertices of `b` hit every red edge.
    pub fn covers(&self, b: &EdgeSubset) -> bool {
        is_transversal(&self.safe_vertices(b), &self.red)
    }

    /// The blue footprint of `s`: the blue edges it hits.
    pub fn footprint(&self, s: &VertexSet) -> EdgeSubset {
        hit_edges(s, &self.blue)
    }
}

/// Indices of the edges of `h` that intersect `s`.
pub fn hit_edges(s: &VertexSet, h: &Hypergraph) -> EdgeSubset {
    h.edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.intersects(s))
        .map(|(i, _)| i)
        .collect()
}

/// Indices of the edges of `h` containing `x`.
pub fn star(x: usize, h: &Hypergraph) -> EdgeSubset {
    h.edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.contains(x))
        .map(|(i, _)| i)
        .collect()
}

pub fn blue_star(x: usize, inst: &BiInstance) -> EdgeSubset {
    inst.blue_star(x)
}

pub fn s_of_b(b: &EdgeSubset, inst: &BiInstance) -> VertexSet {
    inst.safe_vertices(b)
}

pub fn f_predicate(b: &EdgeSubset, inst: &BiInstance) -> bool {
    inst.covers(b)
}

pub fn is_transversal(s: &VertexSet, h: &Hypergraph) -> bool {
    h.edges.iter().all(|e| e.intersects(s))
}

/// True when `s` is a transversal and dropping any one member breaks that.
pub fn is_minimal_transversal(s: &VertexSet, h: &Hypergraph) -> bool {
    is_transversal(s, h)
        && s.iter().all(|x| {
            let mut t = s.clone();
            t.remove(x);
            !is_transversal(&t, h)
        })
}

/// Greedily drops members of the transversal `s` until every remaining member
/// is needed. Candidates are tried from the highest index down, so ties are
/// resolved in favour of keeping low indices.
pub fn minimize_within(s: &VertexSet, h: &Hypergraph) -> Result<VertexSet> {
    if !is_transversal(s, h) {
        return Err(Error::NotTransversal {
            index: 0,
            set: s.clone(),
        });
    }
    let mut out = s.clone();
    for x in s.to_vec().into_iter().rev() {
        out.remove(x);
        if !is_transversal(&out, h) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// An antichain of sets kept in canonical (lexicographic) order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SolutionSet {
    sets: Vec<BitSet>,
}

impl SolutionSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Sorts and deduplicates. The caller vouches for the antichain property.
    pub fn from_sets(mut sets: Vec<BitSet>) -> Self {
        sets.sort();
        sets.dedup();
        Self { sets }
    }

    /// Keeps only the inclusion-minimal members of `sets`.
    pub fn minimal_of(mut sets: Vec<BitSet>) -> Self {
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let mut kept: Vec<BitSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !kept.iter().any(|k| k.is_subset(&s)) {
                kept.push(s);
            }
        }
        Self::from_sets(kept)
    }

    pub fn sets(&self) -> &[BitSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &BitSet) -> bool {
        self.sets.binary_search(s).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BitSet> {
        self.sets.iter()
    }

    pub fn is_antichain(&self) -> bool {
        self.sets
            .iter()
            .enumerate()
            .all(|(i, a)| self.sets.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(b)))
    }

    /// Reinterprets the members as the edges of a hypergraph on `vertex_count`
    /// vertices.
    pub fn to_hypergraph(&self, vertex_count: usize) -> Result<Hypergraph> {
        Hypergraph::new(vertex_count, self.sets.clone())
    }

    pub fn into_sets(self) -> Vec<BitSet> {
        self.sets
    }
}

impl<'a> IntoIterator for &'a SolutionSet {
    type Item = &'a BitSet;
    type IntoIter = std::slice::Iter<'a, BitSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub const U: usize = 0;
    pub const V: usize = 1;
    pub const W: usize = 2;
    pub const X: usize = 3;
    pub const B1: usize = 0;
    pub const B2: usize = 1;
    pub const B3: usize = 2;

    /// The four-vertex running example: red A1={u,x}, A2={u,v}, A3={v,w,x};
    /// blue B1={u,v,w}, B2={v,x}, B3={x}.
    pub fn example() -> BiInstance {
        BiInstance::from_lists(4, &[&[U, X], &[U, V], &[V, W, X]], &[&[U, V, W], &[V, X], &[X]])
    }
}
