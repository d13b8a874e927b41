//! Minimal transversal enumeration.
//!
//! [`berge_dualize`] is the working engine: it walks the edges one at a time
//! and keeps the minimal transversals of the prefix seen so far.
//! [`brute_force_dualize`] scans every subset of a small universe and serves
//! as the reference the engine is tested against.

use crate::error::{Error, Result};
use crate::hypergraph::{is_minimal_transversal, is_transversal, Hypergraph, SolutionSet};
use crate::set::{BitSet, VertexSet};

/// Default cap on the number of partial transversals Berge may hold.
pub const DEFAULT_MAX_PARTIALS: usize = 1_000_000;

/// Largest universe [`brute_force_dualize`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// Answer of an incremental completeness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completeness<T> {
    Complete,
    Witness(T),
}

impl<T> Completeness<T> {
    pub fn is_complete(&self) -> bool {
        matches!(self, Completeness::Complete)
    }

    pub fn witness(self) -> Option<T> {
        match self {
            Completeness::Complete => None,
            Completeness::Witness(w) => Some(w),
        }
    }
}

/// A backend computing `tr(h)` for a hypergraph without empty edges.
pub trait Dualizer {
    fn dualize(&self, h: &Hypergraph) -> Result<SolutionSet>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Berge {
    pub max_partials: usize,
}

impl Default for Berge {
    fn default() -> Self {
        Self {
            max_partials: DEFAULT_MAX_PARTIALS,
        }
    }
}

impl Dualizer for Berge {
    fn dualize(&self, h: &Hypergraph) -> Result<SolutionSet> {
        berge_dualize_with(h, self.max_partials)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BruteForce;

impl Dualizer for BruteForce {
    fn dualize(&self, h: &Hypergraph) -> Result<SolutionSet> {
        brute_force_dualize(h)
    }
}

/// All minimal transversals by exhaustive subset scan.
pub fn brute_force_dualize(h: &Hypergraph) -> Result<SolutionSet> {
    let n = h.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            size: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    h.ensure_no_empty_edge()?;
    let masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, x| m | 1 << x))
        .collect();
    let hits_all = |s: u32| masks.iter().all(|&e| e & s != 0);
    let mut out = Vec::new();
    for s in 0u32..1 << n {
        if !hits_all(s) {
            continue;
        }
        let minimal = (0..n).filter(|b| s >> b & 1 == 1).all(|b| !hits_all(s & !(1 << b)));
        if minimal {
            out.push(BitSet::from_mask(u64::from(s)));
        }
    }
    Ok(SolutionSet::from_sets(out))
}

pub fn berge_dualize(h: &Hypergraph) -> Result<SolutionSet> {
    berge_dualize_with(h, DEFAULT_MAX_PARTIALS)
}

/// Berge's edge-by-edge dualization with a cap on intermediate antichain size.
pub fn berge_dualize_with(h: &Hypergraph, max_partials: usize) -> Result<SolutionSet> {
    h.ensure_no_empty_edge()?;
    let mut edges = h.normalized().edges().to_vec();
    edges.sort_by_key(BitSet::len);

    let mut partial = vec![BitSet::new()];
    for edge in &edges {
        let (kept, missed): (Vec<_>, Vec<_>) = partial.into_iter().partition(|t| t.intersects(edge));
        let mut extended = Vec::with_capacity(missed.len() * edge.len());
        for t in &missed {
            for v in edge {
                let mut s = t.clone();
                s.insert(v);
                extended.push(s);
            }
        }
        if kept.len() + extended.len() > max_partials {
            return Err(Error::PartialsCapExceeded { cap: max_partials });
        }
        extended.sort();
        extended.dedup();
        // Sets that already hit the edge stay minimal. An extension t+v can
        // only be non-minimal by containing one of them: two extensions of
        // distinct members of an antichain never nest.
        let fresh: Vec<_> = extended
            .into_iter()
            .filter(|s| !kept.iter().any(|k| k.is_subset(s)))
            .collect();
        partial = kept;
        partial.extend(fresh);
    }
    Ok(SolutionSet::from_sets(partial))
}

/// `tr(h)`, with the convention that a hypergraph holding an empty edge has
/// no transversals at all.
pub(crate) fn dualize_or_nothing(h: &Hypergraph, dualizer: &dyn Dualizer) -> Result<SolutionSet> {
    if h.first_empty_edge().is_some() {
        return Ok(SolutionSet::empty());
    }
    dualizer.dualize(h)
}

/// Checks that every member of `known` is a minimal transversal of `h`.
pub(crate) fn validate_minimal_transversals(h: &Hypergraph, known: &[VertexSet]) -> Result<()> {
    for (index, s) in known.iter().enumerate() {
        if !is_transversal(s, h) {
            return Err(Error::NotTransversal { index, set: s.clone() });
        }
        if !is_minimal_transversal(s, h) {
            return Err(Error::NotMinimal { index, set: s.clone() });
        }
    }
    Ok(())
}

/// Decides whether `known` is all of `tr(h)`; otherwise returns the
/// canonically smallest minimal transversal missing from it.
pub fn dual_check(h: &Hypergraph, known: &[VertexSet]) -> Result<Completeness<VertexSet>> {
    dual_check_with(h, known, &Berge::default())
}

pub fn dual_check_with(
    h: &Hypergraph,
    known: &[VertexSet],
    dualizer: &dyn Dualizer,
) -> Result<Completeness<VertexSet>> {
    validate_minimal_transversals(h, known)?;
    let known = SolutionSet::from_sets(known.to_vec());
    let all = dualizer.dualize(h)?;
    Ok(match all.iter().find(|s| !known.contains(s)) {
        Some(s) => Completeness::Witness(s.clone()),
        None => Completeness::Complete,
    })
}

/// Whether `tr(tr(h))` equals the minimal edges of `h`. Always true for a
/// correct dualizer.
pub fn self_duality_check(h: &Hypergraph) -> Result<bool> {
    h.ensure_no_empty_edge()?;
    let berge = Berge::default();
    let once = berge.dualize(h)?;
    let twice = dualize_or_nothing(&once.to_hypergraph(h.vertex_count())?, &berge)?;
    Ok(twice == h.minimal_edges())
}
