//! Bi-objective minimal transversals of a red/blue instance.
//!
//! A bi-objective minimal transversal is a minimal transversal `S` of the red
//! hypergraph whose blue footprint has no strict subset among the footprints
//! of other minimal red transversals. The enumeration runs in two phases:
//!
//! 1. Find the minimal blue edge subsets `B` whose safe vertices `S_B` cover
//!    every red edge. For a red edge `A`, build the star hypergraph `H_A`
//!    (one edge per blue star of a vertex of `A`); `S_B` meets `A` exactly
//!    when `B` is a transversal of `tr(H_A)`. The minimal `B` are therefore
//!    `tr(union over A of tr(H_A))`.
//! 2. For each such `B`, the minimal red transversals inside `S_B` are
//!    solutions, and each has footprint exactly `B`.

use crate::dualize::{dualize_or_nothing, Berge, Completeness, Dualizer, BRUTE_FORCE_LIMIT};
use crate::error::{Error, Result};
use crate::hypergraph::{is_minimal_transversal, is_transversal, BiInstance, Hypergraph, SolutionSet};
use crate::set::{BitSet, EdgeSubset, VertexSet};

/// Largest universe [`brute_force_btr`] accepts.
pub const BRUTE_FORCE_BTR_LIMIT: usize = 20;

/// A bi-objective minimal transversal paired with its blue footprint.
///
/// Ordered by footprint first, then by vertex set, which is the order
/// [`bi_transversals`] emits.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiSolution {
    pub b: EdgeSubset,
    pub s: VertexSet,
}

impl BiSolution {
    pub fn new(s: VertexSet, b: EdgeSubset) -> Self {
        Self { b, s }
    }
}

/// The star hypergraph of a red edge: over blue edge indices, one edge per
/// vertex of `red_edge`, namely that vertex's blue star.
pub fn build_ha(red_edge: &VertexSet, inst: &BiInstance) -> Hypergraph {
    let edges = red_edge.iter().map(|x| inst.blue_star(x)).collect();
    Hypergraph::new(inst.blue().edge_count(), edges).expect("blue stars index blue edges")
}

/// Inclusion-minimal blue subsets whose safe vertices cover the red hypergraph.
pub fn minimal_bsets(inst: &BiInstance) -> Result<SolutionSet> {
    minimal_bsets_with(inst, &Berge::default())
}

pub fn minimal_bsets_with(inst: &BiInstance, dualizer: &dyn Dualizer) -> Result<SolutionSet> {
    inst.ensure_red_nonempty()?;
    let mut union = Vec::new();
    for a in inst.red().edges() {
        // A red edge holding a blue-free vertex is covered by every B, and
        // its star hypergraph then has the empty edge and contributes nothing.
        union.extend(dualize_or_nothing(&build_ha(a, inst), dualizer)?.into_sets());
    }
    let union = Hypergraph::new(inst.blue().edge_count(), union)?;
    dualizer.dualize(&union)
}

/// Whether `b` is a transversal of `tr(H_A)`, cross-checked against the
/// direct test that the safe vertices of `b` meet `red_edge`.
pub fn lemma2_check(b: &EdgeSubset, red_edge: &VertexSet, inst: &BiInstance) -> Result<bool> {
    let tr = dualize_or_nothing(&build_ha(red_edge, inst), &Berge::default())?;
    let via_dual = tr.iter().all(|t| t.intersects(b));
    let direct = inst.safe_vertices(b).intersects(red_edge);
    if via_dual != direct {
        return Err(Error::Internal(format!(
            "B={b:?}, A={red_edge:?}: transversal test says {via_dual}, safe-vertex test says {direct}"
        )));
    }
    Ok(via_dual)
}

/// All bi-objective minimal transversals, grouped by footprint.
pub fn bi_transversals(inst: &BiInstance) -> Result<Vec<BiSolution>> {
    bi_transversals_with(inst, &Berge::default())
}

pub fn bi_transversals_with(inst: &BiInstance, dualizer: &dyn Dualizer) -> Result<Vec<BiSolution>> {
    let mut out = Vec::new();
    for b in &minimal_bsets_with(inst, dualizer)? {
        let safe = inst.safe_vertices(b);
        let restricted = inst.red().restrict(&safe);
        if let Some(i) = restricted.first_empty_edge() {
            return Err(Error::Internal(format!(
                "minimal B-set {b:?} leaves red edge {i} uncovered"
            )));
        }
        for s in dualizer.dualize(&restricted)?.into_sets() {
            let footprint = inst.footprint(&s);
            if &footprint != b {
                return Err(Error::Internal(format!(
                    "transversal {s:?} under B-set {b:?} has footprint {footprint:?}"
                )));
            }
            out.push(BiSolution::new(s, footprint));
        }
    }
    Ok(out)
}

/// Reference enumeration straight from the definition: every minimal red
/// transversal whose footprint is not a strict superset of another's.
pub fn brute_force_btr(inst: &BiInstance) -> Result<Vec<BiSolution>> {
    let n = inst.vertex_count();
    if n > BRUTE_FORCE_BTR_LIMIT {
        return Err(Error::TooLarge {
            size: n,
            limit: BRUTE_FORCE_BTR_LIMIT,
        });
    }
    const { assert!(BRUTE_FORCE_BTR_LIMIT <= BRUTE_FORCE_LIMIT) };
    inst.ensure_red_nonempty()?;
    let candidates: Vec<BiSolution> = crate::dualize::brute_force_dualize(inst.red())?
        .into_sets()
        .into_iter()
        .map(|s| {
            let b = inst.footprint(&s);
            BiSolution::new(s, b)
        })
        .collect();
    let mut out: Vec<BiSolution> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|o| o.b.is_strict_subset(&c.b)))
        .cloned()
        .collect();
    out.sort();
    Ok(out)
}

/// Whether `b` is a minimal true point of the covering predicate. The
/// predicate is monotone, so checking single-edge removals suffices.
pub fn is_minimal_bset(b: &EdgeSubset, inst: &BiInstance) -> bool {
    inst.covers(b)
        && b.iter().all(|e| {
            let mut smaller = b.clone();
            smaller.remove(e);
            !inst.covers(&smaller)
        })
}

/// Checks each member of `known` against both conditions and returns the
/// validated solutions.
pub fn validate_bi_solutions(inst: &BiInstance, known: &[VertexSet]) -> Result<Vec<BiSolution>> {
    let red = inst.red();
    known
        .iter()
        .enumerate()
        .map(|(index, s)| {
            if !is_transversal(s, red) {
                return Err(Error::NotTransversal { index, set: s.clone() });
            }
            if !is_minimal_transversal(s, red) {
                return Err(Error::NotMinimal { index, set: s.clone() });
            }
            let b = inst.footprint(s);
            if !is_minimal_bset(&b, inst) {
                return Err(Error::FootprintNotMinimal { index, set: s.clone() });
            }
            Ok(BiSolution::new(s.clone(), b))
        })
        .collect()
}

/// Decides whether `known` is every bi-objective minimal transversal, or
/// returns the smallest missing one in emission order.
pub fn bidual_check(inst: &BiInstance, known: &[VertexSet]) -> Result<Completeness<BiSolution>> {
    bidual_check_with(inst, known, &Berge::default())
}

pub fn bidual_check_with(
    inst: &BiInstance,
    known: &[VertexSet],
    dualizer: &dyn Dualizer,
) -> Result<Completeness<BiSolution>> {
    inst.ensure_red_nonempty()?;
    let mut known: Vec<BitSet> = validate_bi_solutions(inst, known)?.into_iter().map(|x| x.s).collect();
    known.sort();
    let all = bi_transversals_with(inst, dualizer)?;
    Ok(match all.into_iter().find(|x| known.binary_search(&x.s).is_err()) {
        Some(w) => Completeness::Witness(w),
        None => Completeness::Complete,
    })
}
