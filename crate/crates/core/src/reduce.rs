//! Instance generators: the two 3-SAT gadgets and seeded random corpora.
//!
//! Both gadgets turn a CNF with at most three literals per clause into a
//! red/blue instance plus a set of known bi-objective minimal transversals
//! `X`. The instance has a bi-objective minimal transversal outside `X`
//! exactly when the CNF is satisfiable, and such a transversal reads back as
//! a satisfying assignment.
//!
//! * [`reduce_dim2`]: vertices `x{i}`, `nx{i}`, `y{i}`; red edge `A_j` holds the
//!   literals of clause `j` and every `y`; blue edges `B_i = {x_i, y_i}` and
//!   `B'_i = {nx_i, y_i}`. Every blue edge has two vertices.
//! * [`reduce_deg3`]: every `y_i` is split into `y{i}_{j}`, one per clause,
//!   and every literal into one copy per clause it occurs in; an extra blue
//!   edge `B''_i` holds all copies of `x_i` and `nx_i`. Every vertex then lies
//!   in exactly three edges.
//!
//! Blue edges are indexed `B_1..B_n`, then `B'_1..B'_n`, then (deg3 only)
//! `B''_1..B''_n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::biobj::BiSolution;
use crate::error::{Error, Result};
use crate::formula::Formula3;
use crate::hypergraph::{BiInstance, Hypergraph, SolutionSet};
use crate::set::BitSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Self { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Self { var, positive: false }
    }

    fn dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

/// A CNF over variables `0..variable_count` with at most three literals per
/// clause. Literals inside a clause are kept sorted and distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SatInstance {
    variable_count: usize,
    clauses: Vec<Vec<Literal>>,
}

impl SatInstance {
    pub fn new(variable_count: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, mut clause) in clauses.into_iter().enumerate() {
            clause.sort();
            clause.dedup();
            if let Some(l) = clause.iter().find(|l| l.var >= variable_count) {
                return Err(Error::InvalidClause {
                    clause: j,
                    msg: format!("variable x{} exceeds the declared {variable_count}", l.var + 1),
                });
            }
            if clause.windows(2).any(|w| w[0].var == w[1].var) {
                return Err(Error::InvalidClause {
                    clause: j,
                    msg: "contains a variable and its negation".into(),
                });
            }
            if clause.len() > 3 {
                return Err(Error::InvalidClause {
                    clause: j,
                    msg: format!("has {} literals, at most 3 allowed", clause.len()),
                });
            }
            out.push(clause);
        }
        Ok(Self {
            variable_count,
            clauses: out,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// The first variable occurring (in either polarity) in every clause.
    /// The gadgets require there is none.
    pub fn side_condition_violation(&self) -> Option<usize> {
        (0..self.variable_count).find(|&i| self.clauses.iter().all(|c| c.iter().any(|l| l.var == i)))
    }

    pub fn check_side_condition(&self) -> Result<()> {
        match self.side_condition_violation() {
            Some(i) => Err(Error::SideCondition(i + 1)),
            None => Ok(()),
        }
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| assignment[l.var] == l.positive))
    }

    /// Some satisfying assignment by exhaustive search (fine up to ~20 variables).
    pub fn brute_force_solve(&self) -> Option<Vec<bool>> {
        let n = self.variable_count;
        (0u64..1 << n)
            .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.is_satisfied_by(a))
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let err = |line: usize, msg: &str| Error::Dimacs { line, msg: msg.into() };
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            if line.starts_with('p') {
                let fields: Vec<&str> = line.split_whitespace().collect();
                if header.is_some() || fields.len() != 4 || fields[1] != "cnf" {
                    return Err(err(line_no, "expected a single `p cnf <vars> <clauses>` header"));
                }
                let vars = fields[2].parse().map_err(|_| err(line_no, "bad variable count"))?;
                let count = fields[3].parse().map_err(|_| err(line_no, "bad clause count"))?;
                header = Some((vars, count));
                continue;
            }
            let (vars, _) = header.ok_or_else(|| err(line_no, "clause before `p cnf` header"))?;
            for tok in line.split_whitespace() {
                let v: i64 = tok.parse().map_err(|_| err(line_no, "expected an integer literal"))?;
                if v == 0 {
                    clauses.push(std::mem::take(&mut current));
                    continue;
                }
                let var = v.unsigned_abs() as usize;
                if var > vars {
                    return Err(err(line_no, "literal exceeds declared variable count"));
                }
                current.push(Literal {
                    var: var - 1,
                    positive: v > 0,
                });
            }
        }
        let (vars, count) = header.ok_or_else(|| err(0, "missing `p cnf` header"))?;
        if !current.is_empty() {
            return Err(err(0, "last clause is not terminated by 0"));
        }
        if clauses.len() != count {
            return Err(err(
                0,
                &format!("header announces {count} clauses, found {}", clauses.len()),
            ));
        }
        Self::new(vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                out.push_str(&format!("{} ", l.dimacs()));
            }
            out.push_str("0\n");
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Dim2,
    Deg3,
}

/// What a gadget vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    /// A (copy of a) literal vertex.
    Literal(Literal),
    /// A (copy of a) `y` vertex of the given variable.
    Aux(usize),
}

#[derive(Clone, Debug)]
pub struct Gadget {
    pub variant: Variant,
    pub instance: BiInstance,
    pub labels: Vec<String>,
    pub roles: Vec<VertexRole>,
    /// The bi-objective minimal transversals built into the construction.
    pub known: SolutionSet,
}

impl Gadget {
    /// Blue index sets `{B_i, B'_i}`, the footprints of the known solutions.
    pub fn known_bsets(&self, variable_count: usize) -> Vec<BitSet> {
        (0..variable_count)
            .map(|i| BitSet::from([i, variable_count + i]))
            .collect()
    }

    /// The gadget instance as a depth-3 formula.
    pub fn formula(&self) -> Formula3 {
        crate::formula::instance_to_formula(&self.instance)
    }
}

pub fn reduce_dim2(sat: &SatInstance) -> Result<Gadget> {
    sat.check_side_condition()?;
    Ok(build_dim2(sat))
}

/// The dim2 construction without the side-condition check. When a variable
/// occurs in every clause, its two literal vertices form a transversal with
/// the same footprint as its `y` vertex, and the SAT correspondence breaks.
pub fn build_dim2(sat: &SatInstance) -> Gadget {
    let n = sat.variable_count;
    let (x, nx, y) = (|i: usize| i, |i: usize| n + i, |i: usize| 2 * n + i);
    let mut labels = Vec::with_capacity(3 * n);
    let mut roles = Vec::with_capacity(3 * n);
    for i in 0..n {
        labels.push(format!("x{}", i + 1));
        roles.push(VertexRole::Literal(Literal::pos(i)));
    }
    for i in 0..n {
        labels.push(format!("nx{}", i + 1));
        roles.push(VertexRole::Literal(Literal::neg(i)));
    }
    for i in 0..n {
        labels.push(format!("y{}", i + 1));
        roles.push(VertexRole::Aux(i));
    }
    let all_y: BitSet = (0..n).map(y).collect();
    let red = sat
        .clauses
        .iter()
        .map(|c| {
            let mut edge = all_y.clone();
            for l in c {
                edge.insert(if l.positive { x(l.var) } else { nx(l.var) });
            }
            edge
        })
        .collect();
    let blue = (0..n)
        .map(|i| BitSet::from([x(i), y(i)]))
        .chain((0..n).map(|i| BitSet::from([nx(i), y(i)])))
        .collect();
    let instance = BiInstance::from_parts(
        Hypergraph::new(3 * n, red).expect("gadget vertices in range"),
        Hypergraph::new(3 * n, blue).expect("gadget vertices in range"),
    );
    let known = SolutionSet::from_sets((0..n).map(|i| BitSet::singleton(y(i))).collect());
    Gadget {
        variant: Variant::Dim2,
        instance,
        labels,
        roles,
        known,
    }
}

pub fn reduce_deg3(sat: &SatInstance) -> Result<Gadget> {
    sat.check_side_condition()?;
    build_deg3(sat)
}

/// The deg3 construction without the side-condition check. Fails only if
/// some vertex does not end up with degree three.
pub fn build_deg3(sat: &SatInstance) -> Result<Gadget> {
    let n = sat.variable_count;
    let m = sat.clauses.len();
    let mut labels = Vec::new();
    let mut roles = Vec::new();
    let mut red: Vec<BitSet> = vec![BitSet::new(); m];
    let mut blue: Vec<BitSet> = vec![BitSet::new(); 3 * n];

    // Literal copies, one per occurrence, in clause order.
    for (j, clause) in sat.clauses.iter().enumerate() {
        for l in clause {
            let v = labels.len();
            let prefix = if l.positive { "x" } else { "nx" };
            labels.push(format!("{prefix}{}_{}", l.var + 1, j + 1));
            roles.push(VertexRole::Literal(*l));
            red[j].insert(v);
            blue[if l.positive { l.var } else { n + l.var }].insert(v);
            blue[2 * n + l.var].insert(v);
        }
    }
    let mut known = Vec::with_capacity(n);
    for i in 0..n {
        let mut copies = BitSet::new();
        for (j, edge) in red.iter_mut().enumerate() {
            let v = labels.len();
            labels.push(format!("y{}_{}", i + 1, j + 1));
            roles.push(VertexRole::Aux(i));
            edge.insert(v);
            blue[i].insert(v);
            blue[n + i].insert(v);
            copies.insert(v);
        }
        known.push(copies);
    }
    let count = labels.len();
    let instance = BiInstance::new(Hypergraph::new(count, red)?, Hypergraph::new(count, blue)?)?;
    for (v, label) in labels.iter().enumerate() {
        let degree = instance.red().degree(v) + instance.blue().degree(v);
        if degree != 3 {
            return Err(Error::Internal(format!("vertex {label} has degree {degree}")));
        }
    }
    Ok(Gadget {
        variant: Variant::Deg3,
        instance,
        labels,
        roles,
        known: SolutionSet::from_sets(known),
    })
}

/// Reads a satisfying assignment off a new bi-objective minimal transversal
/// of a gadget. Variables the witness leaves open are set false.
pub fn extract_assignment(witness: &BiSolution, sat: &SatInstance, gadget: &Gadget) -> Result<Vec<bool>> {
    let mut value: Vec<Option<bool>> = vec![None; sat.variable_count];
    for v in &witness.s {
        match gadget.roles.get(v) {
            Some(VertexRole::Literal(l)) => match value[l.var] {
                Some(p) if p != l.positive => {
                    return Err(Error::MalformedWitness(format!("both polarities of x{}", l.var + 1)))
                }
                _ => value[l.var] = Some(l.positive),
            },
            Some(VertexRole::Aux(_)) => {
                return Err(Error::MalformedWitness(format!(
                    "contains auxiliary vertex {}",
                    gadget.labels[v]
                )))
            }
            None => {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    universe: gadget.roles.len(),
                })
            }
        }
    }
    let assignment: Vec<bool> = value.into_iter().map(|v| v.unwrap_or(false)).collect();
    if !sat.is_satisfied_by(&assignment) {
        return Err(Error::MalformedWitness(
            "read-back assignment leaves a clause unsatisfied".into(),
        ));
    }
    Ok(assignment)
}

fn all_clauses(n: usize) -> Vec<Vec<Literal>> {
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let vars: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if vars.len() > 3 {
            continue;
        }
        for signs in 0u32..1 << vars.len() {
            out.push(
                vars.iter()
                    .enumerate()
                    .map(|(k, &var)| Literal {
                        var,
                        positive: signs >> k & 1 == 0,
                    })
                    .collect(),
            );
        }
    }
    out.sort();
    out
}

fn combinations<T: Clone>(items: &[T], k: usize, start: usize, acc: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
    if acc.len() == k {
        out.push(acc.clone());
        return;
    }
    for i in start..items.len() {
        acc.push(items[i].clone());
        combinations(items, k, i + 1, acc, out);
        acc.pop();
    }
}

/// Every CNF with `1..=max_vars` variables and `1..=max_clauses` distinct
/// non-empty clauses of at most three literals that passes the gadgets' side
/// condition.
pub fn small_sat_family(max_vars: usize, max_clauses: usize) -> Vec<SatInstance> {
    let mut family = Vec::new();
    for n in 1..=max_vars {
        let pool = all_clauses(n);
        for m in 1..=max_clauses {
            let mut picks = Vec::new();
            combinations(&pool, m, 0, &mut Vec::new(), &mut picks);
            for clauses in picks {
                let sat = SatInstance::new(n, clauses).expect("generated clauses are well formed");
                if sat.side_condition_violation().is_none() {
                    family.push(sat);
                }
            }
        }
    }
    family
}

/// Parameters of [`random_bi_instance`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomParams {
    pub vertices: usize,
    pub red_edges: usize,
    pub blue_edges: usize,
    /// Probability that a given vertex joins a given edge.
    pub density: f64,
}

fn check_params(vertices: usize, density: f64) -> Result<()> {
    if vertices == 0 {
        return Err(Error::InvalidParameter("need at least one vertex".into()));
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::InvalidParameter(format!("density {density} is outside (0, 1]")));
    }
    Ok(())
}

fn random_edge(rng: &mut ChaCha8Rng, n: usize, density: f64) -> BitSet {
    (0..n).filter(|_| rng.gen_bool(density)).collect()
}

fn random_nonempty_edge(rng: &mut ChaCha8Rng, n: usize, density: f64) -> BitSet {
    loop {
        let edge = random_edge(rng, n, density);
        if !edge.is_empty() {
            return edge;
        }
    }
}

/// A seeded random hypergraph whose edges are all non-empty.
pub fn random_hypergraph(vertices: usize, edges: usize, density: f64, seed: u64) -> Result<Hypergraph> {
    check_params(vertices, density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = (0..edges)
        .map(|_| random_nonempty_edge(&mut rng, vertices, density))
        .collect();
    Hypergraph::new(vertices, edges)
}

/// A seeded random red/blue instance. Red edges are resampled until
/// non-empty; blue edges may come out empty.
pub fn random_bi_instance(params: &RandomParams, seed: u64) -> Result<BiInstance> {
    let RandomParams {
        vertices: n,
        red_edges,
        blue_edges,
        density,
    } = *params;
    check_params(n, density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let red = (0..red_edges)
        .map(|_| random_nonempty_edge(&mut rng, n, density))
        .collect();
    let blue = (0..blue_edges).map(|_| random_edge(&mut rng, n, density)).collect();
    BiInstance::new(Hypergraph::new(n, red)?, Hypergraph::new(n, blue)?)
}

/// A seeded random monotone depth-3 formula: each clause has `1..=max_terms`
/// terms of `1..=max_term_size` variables.
pub fn random_formula(
    variables: usize,
    clauses: usize,
    max_terms: usize,
    max_term_size: usize,
    seed: u64,
) -> Result<Formula3> {
    if variables == 0 || max_terms == 0 || max_term_size == 0 {
        return Err(Error::InvalidParameter("formula sizes must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clauses = (0..clauses)
        .map(|_| {
            let terms = rng.gen_range(1..=max_terms);
            (0..terms)
                .map(|_| {
                    let size = rng.gen_range(1..=max_term_size.min(variables));
                    let mut term = BitSet::new();
                    while term.len() < size {
                        term.insert(rng.gen_range(0..variables));
                    }
                    term
                })
                .collect()
        })
        .collect();
    Formula3::new(variables, clauses)
}

/// A seeded random CNF with clauses of exactly `min(3, variables)` literals
/// over distinct variables.
pub fn random_3sat(variables: usize, clauses: usize, seed: u64) -> Result<SatInstance> {
    if variables == 0 {
        return Err(Error::InvalidParameter("need at least one variable".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = variables.min(3);
    let clauses = (0..clauses)
        .map(|_| {
            let mut vars = BitSet::new();
            while vars.len() < width {
                vars.insert(rng.gen_range(0..variables));
            }
            vars.iter()
                .map(|var| Literal {
                    var,
                    positive: rng.gen_bool(0.5),
                })
                .collect()
        })
        .collect();
    SatInstance::new(variables, clauses)
}
