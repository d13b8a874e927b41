//! Monotone AND-of-OR-of-AND formulas and their correspondence with red/blue
//! instances.
//!
//! Variable `c{i+1}` stands for blue edge `i`. A red edge becomes a clause
//! with one term per vertex, the term being the conjunction of the blue edges
//! through that vertex, so the formula is true on the characteristic vector of
//! `B` exactly when the safe vertices of `B` cover the red hypergraph.
//!
//! Text syntax: `&`, `|`, parentheses, variables `c1`, `c2`, ..., and the
//! constants `0` and `1`. `&` binds tighter than `|`; whitespace is ignored.

use std::fmt;

use crate::biobj::minimal_bsets;
use crate::dualize::Completeness;
use crate::error::{Error, Result};
use crate::hypergraph::{BiInstance, Hypergraph, SolutionSet};
use crate::set::BitSet;

/// A conjunction of variables; empty means constant true.
pub type Term = BitSet;

/// A disjunction of terms; empty means constant false.
pub type Clause = Vec<Term>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula3 {
    variable_count: usize,
    clauses: Vec<Clause>,
}

fn dedup_keep_first<T: Clone + Ord>(items: Vec<T>, key: impl Fn(&T) -> T) -> Vec<T> {
    let mut seen = std::collections::BTreeSet::new();
    items.into_iter().filter(|t| seen.insert(key(t))).collect()
}

impl Formula3 {
    /// Builds a formula, dropping repeated terms within a clause and repeated
    /// clauses. Order of first occurrence is kept.
    pub fn new(variable_count: usize, clauses: Vec<Clause>) -> Result<Self> {
        for clause in &clauses {
            for term in clause {
                if term.bound() > variable_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: term.bound() - 1,
                        universe: variable_count,
                    });
                }
            }
        }
        let clauses: Vec<Clause> = clauses.into_iter().map(|c| dedup_keep_first(c, Clone::clone)).collect();
        let clauses = dedup_keep_first(clauses, |c| {
            let mut sorted = c.clone();
            sorted.sort();
            sorted
        });
        Ok(Self {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Drops every term that contains another term of the same clause. The
    /// truth table is unchanged.
    pub fn normalized(&self) -> Self {
        let clauses = self
            .clauses
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|t| !c.iter().any(|o| o.is_strict_subset(t)))
                    .cloned()
                    .collect()
            })
            .collect();
        Self::new(self.variable_count, clauses).expect("normalization keeps variables in range")
    }

    /// Evaluates on the set of variables assigned true.
    pub fn eval_set(&self, trues: &BitSet) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|t| t.is_subset(trues)))
    }

    pub fn eval(&self, assignment: &[bool]) -> Result<bool> {
        if assignment.len() != self.variable_count {
            return Err(Error::AssignmentLength {
                expected: self.variable_count,
                got: assignment.len(),
            });
        }
        let trues = assignment
            .iter()
            .enumerate()
            .filter(|(_, &v)| v)
            .map(|(i, _)| i)
            .collect();
        Ok(self.eval_set(&trues))
    }

    /// Labels for the vertices of [`formula_to_instance`]: `t{clause}_{term}`,
    /// one-based.
    pub fn leaf_labels(&self) -> Vec<String> {
        self.clauses
            .iter()
            .enumerate()
            .flat_map(|(j, c)| (0..c.len()).map(move |k| format!("t{}_{}", j + 1, k + 1)))
            .collect()
    }
}

pub fn eval(phi: &Formula3, assignment: &[bool]) -> Result<bool> {
    phi.eval(assignment)
}

/// One clause per red edge, one term per vertex of it: that vertex's blue star.
pub fn instance_to_formula(inst: &BiInstance) -> Formula3 {
    let clauses = inst
        .red()
        .edges()
        .iter()
        .map(|a| a.iter().map(|x| inst.blue_star(x)).collect())
        .collect();
    Formula3::new(inst.blue().edge_count(), clauses).expect("blue stars index blue edges")
}

/// Inverse construction: one vertex per (clause, term) leaf, one red edge per
/// clause, one blue edge per variable holding the leaves that mention it.
pub fn formula_to_instance(phi: &Formula3) -> BiInstance {
    let mut red = Vec::with_capacity(phi.clauses.len());
    let mut blue = vec![BitSet::new(); phi.variable_count];
    let mut next = 0;
    for clause in &phi.clauses {
        let mut edge = BitSet::new();
        for term in clause {
            edge.insert(next);
            for var in term {
                blue[var].insert(next);
            }
            next += 1;
        }
        red.push(edge);
    }
    let red = Hypergraph::new(next, red).expect("leaves are numbered densely");
    let blue = Hypergraph::new(next, blue).expect("leaves are numbered densely");
    BiInstance::new(red, blue).expect("shared universe")
}

/// All minimal true assignments, as sets of true variables.
pub fn minimal_models(phi: &Formula3) -> Result<SolutionSet> {
    if phi.clauses.iter().any(Vec::is_empty) {
        return Ok(SolutionSet::empty());
    }
    minimal_bsets(&formula_to_instance(&phi.normalized()))
}

/// Decides whether `known` holds every minimal model, or returns the
/// canonically smallest missing one.
pub fn gen_check(phi: &Formula3, known: &[BitSet]) -> Result<Completeness<BitSet>> {
    for (index, s) in known.iter().enumerate() {
        if !phi.eval_set(s) {
            return Err(Error::NotModel { index, set: s.clone() });
        }
        let minimal = s.iter().all(|v| {
            let mut smaller = s.clone();
            smaller.remove(v);
            !phi.eval_set(&smaller)
        });
        if !minimal {
            return Err(Error::NotMinimalModel { index, set: s.clone() });
        }
    }
    let known = SolutionSet::from_sets(known.to_vec());
    let all = minimal_models(phi)?;
    Ok(match all.iter().find(|s| !known.contains(s)) {
        Some(s) => Completeness::Witness(s.clone()),
        None => Completeness::Complete,
    })
}

fn write_term(f: &mut fmt::Formatter<'_>, term: &Term, nested: bool) -> fmt::Result {
    match term.len() {
        0 => write!(f, "1"),
        1 => write!(f, "c{}", term.first().unwrap() + 1),
        _ => {
            let vars: Vec<String> = term.iter().map(|v| format!("c{}", v + 1)).collect();
            if nested {
                write!(f, "({})", vars.join(" & "))
            } else {
                write!(f, "{}", vars.join(" & "))
            }
        }
    }
}

impl fmt::Display for Formula3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return write!(f, "1");
        }
        for (j, clause) in self.clauses.iter().enumerate() {
            if j > 0 {
                write!(f, " & ")?;
            }
            match clause.len() {
                0 => write!(f, "0")?,
                1 => write_term(f, &clause[0], true)?,
                _ => {
                    write!(f, "(")?;
                    for (k, term) in clause.iter().enumerate() {
                        if k > 0 {
                            write!(f, " | ")?;
                        }
                        write_term(f, term, true)?;
                    }
                    write!(f, ")")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug)]
enum Node {
    Var(usize),
    Const(bool),
    And(Vec<Node>),
    Or(Vec<Node>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    max_var: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::FormulaParse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn or(&mut self) -> Result<Node> {
        let mut items = vec![self.and()?];
        while self.peek() == Some(b'|') {
            self.pos += 1;
            items.push(self.and()?);
        }
        Ok(flatten(items, false))
    }

    fn and(&mut self) -> Result<Node> {
        let mut items = vec![self.atom()?];
        while self.peek() == Some(b'&') {
            self.pos += 1;
            items.push(self.atom()?);
        }
        Ok(flatten(items, true))
    }

    fn atom(&mut self) -> Result<Node> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.or()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Node::Const(false))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Node::Const(true))
            }
            Some(b'c') => {
                let start = self.pos;
                self.pos += 1;
                let digits = self.src[self.pos..].iter().take_while(|b| b.is_ascii_digit()).count();
                let text = std::str::from_utf8(&self.src[self.pos..self.pos + digits]).unwrap();
                self.pos += digits;
                match text.parse::<usize>() {
                    Ok(i) if i >= 1 => {
                        self.max_var = self.max_var.max(i);
                        Ok(Node::Var(i - 1))
                    }
                    _ => {
                        self.pos = start;
                        self.err("expected a variable c1, c2, ...")
                    }
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn flatten(items: Vec<Node>, conjunction: bool) -> Node {
    if items.len() == 1 {
        return items.into_iter().next().unwrap();
    }
    let mut out = Vec::new();
    for item in items {
        match (item, conjunction) {
            (Node::And(inner), true) | (Node::Or(inner), false) => out.extend(inner),
            (other, _) => out.push(other),
        }
    }
    if conjunction {
        Node::And(out)
    } else {
        Node::Or(out)
    }
}

const TOO_DEEP: &str = "nesting deeper than and-of-or-of-and";

/// `None` for a constant-false term.
fn to_term(node: &Node) -> std::result::Result<Option<Term>, &'static str> {
    match node {
        Node::Var(v) => Ok(Some(BitSet::singleton(*v))),
        Node::Const(true) => Ok(Some(BitSet::new())),
        Node::Const(false) => Ok(None),
        Node::And(items) => {
            let mut term = BitSet::new();
            for item in items {
                match item {
                    Node::Var(v) => {
                        term.insert(*v);
                    }
                    Node::Const(true) => {}
                    Node::Const(false) => return Ok(None),
                    _ => return Err(TOO_DEEP),
                }
            }
            Ok(Some(term))
        }
        Node::Or(_) => Err(TOO_DEEP),
    }
}

fn to_clause(node: &Node) -> std::result::Result<Clause, &'static str> {
    match node {
        Node::Or(items) => {
            let mut clause = Vec::new();
            for item in items {
                clause.extend(to_term(item)?);
            }
            Ok(clause)
        }
        other => Ok(to_term(other)?.into_iter().collect()),
    }
}

impl std::str::FromStr for Formula3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
            max_var: 0,
        };
        let root = parser.or()?;
        if parser.peek().is_some() {
            return parser.err("trailing input");
        }
        let shaped = match &root {
            Node::Const(true) => Ok(Vec::new()),
            Node::And(items) => items.iter().map(to_clause).collect(),
            other => to_clause(other).map(|c| vec![c]),
        };
        match shaped {
            Ok(clauses) => Formula3::new(parser.max_var, clauses),
            Err(msg) => Err(Error::FormulaParse {
                pos: 0,
                msg: msg.into(),
            }),
        }
    }
}
