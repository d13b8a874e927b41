use std::fmt::Write as _;
use std::time::Instant;

use bitrans_core::biobj::{
    bi_transversals_with, bidual_check_with, is_minimal_bset, minimal_bsets_with, BRUTE_FORCE_BTR_LIMIT,
};
use bitrans_core::dualize::{berge_dualize_with, DEFAULT_MAX_PARTIALS};
use bitrans_core::reduce::{build_deg3, build_dim2, random_bi_instance, random_hypergraph, RandomParams};
use bitrans_core::{
    brute_force_btr, brute_force_dualize, formula_to_instance, instance_to_formula, reduce_deg3, reduce_dim2, Berge,
    BiInstance, BiSolution, Completeness, EdgeSubset, Formula3, Gadget, SatInstance, SolutionSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::format::{
    blue_names, parse_hypergraph, parse_instance, parse_known, render, vertex_names, write_instance, LabeledInstance,
    OutputFormat, Record,
};
use crate::CliError;

/// Largest blue edge count for the brute-force minimal B-set oracle.
pub const BRUTE_FORCE_BSETS_LIMIT: usize = 20;

/// Flags shared by all commands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub format: OutputFormat,
    pub oracle: bool,
    pub max_partials: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            format: OutputFormat::Text,
            oracle: false,
            max_partials: DEFAULT_MAX_PARTIALS,
            seed: 0,
        }
    }
}

impl Options {
    fn dualizer(&self) -> Berge {
        Berge {
            max_partials: self.max_partials,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GadgetVariant {
    Dim2,
    Deg3,
}

fn bi_records(labels: &[String], sols: &[BiSolution]) -> Vec<Record> {
    sols.iter()
        .map(|x| Record {
            s: Some(vertex_names(labels, &x.s)),
            b: Some(blue_names(&x.b)),
        })
        .collect()
}

fn mismatch(what: &str, got: usize, expected: usize) -> CliError {
    CliError::Mismatch(format!(
        "{what}: enumeration found {got} solutions, the oracle {expected}, or they differ"
    ))
}

/// Minimal transversals of a plain hypergraph file.
pub fn dualize(text: &str, opts: &Options) -> Result<String, CliError> {
    let h = parse_hypergraph(text)?;
    let tr = berge_dualize_with(&h.hypergraph, opts.max_partials)?;
    if opts.oracle {
        let expected = brute_force_dualize(&h.hypergraph)?;
        if expected != tr {
            return Err(mismatch("dualize", tr.len(), expected.len()));
        }
    }
    let records: Vec<Record> = tr
        .iter()
        .map(|s| Record {
            s: Some(vertex_names(&h.labels, s)),
            b: None,
        })
        .collect();
    Ok(render(&records, opts.format))
}

/// Bi-objective minimal transversals of an instance file.
pub fn btr(text: &str, opts: &Options) -> Result<String, CliError> {
    let inst = parse_instance(text)?;
    let sols = bi_transversals_with(&inst.instance, &opts.dualizer())?;
    if opts.oracle {
        let expected = brute_force_btr(&inst.instance)?;
        if expected != sols {
            return Err(mismatch("btr", sols.len(), expected.len()));
        }
    }
    Ok(render(&bi_records(&inst.labels, &sols), opts.format))
}

/// Minimal true points of the covering predicate, found by trying every
/// subset of blue edges.
pub fn brute_force_bsets(inst: &BiInstance) -> Result<SolutionSet, CliError> {
    let m = inst.blue().edge_count();
    if m > BRUTE_FORCE_BSETS_LIMIT {
        return Err(bitrans_core::Error::TooLarge {
            size: m,
            limit: BRUTE_FORCE_BSETS_LIMIT,
        }
        .into());
    }
    let sets = (0u64..1 << m)
        .map(EdgeSubset::from_mask)
        .filter(|b| is_minimal_bset(b, inst))
        .collect();
    Ok(SolutionSet::from_sets(sets))
}

/// Minimal B-sets of an instance file.
pub fn bsets(text: &str, opts: &Options) -> Result<String, CliError> {
    let inst = parse_instance(text)?;
    let sets = minimal_bsets_with(&inst.instance, &opts.dualizer())?;
    if opts.oracle {
        let expected = brute_force_bsets(&inst.instance)?;
        if expected != sets {
            return Err(mismatch("bsets", sets.len(), expected.len()));
        }
    }
    let records: Vec<Record> = sets
        .iter()
        .map(|b| Record {
            s: None,
            b: Some(blue_names(b)),
        })
        .collect();
    Ok(render(&records, opts.format))
}

#[derive(Serialize)]
struct FormulaJson {
    formula: String,
}

/// The depth-3 formula of an instance file. Variable `c{k}` is blue edge `B{k}`.
pub fn to_formula(text: &str, opts: &Options) -> Result<String, CliError> {
    let inst = parse_instance(text)?;
    let formula = instance_to_formula(&inst.instance).to_string();
    Ok(match opts.format {
        OutputFormat::Text => formula + "\n",
        OutputFormat::Json => serde_json::to_string_pretty(&FormulaJson { formula }).expect("serializes") + "\n",
    })
}

/// An instance file for a depth-3 formula, one vertex per leaf.
pub fn from_formula(text: &str) -> Result<String, CliError> {
    let phi: Formula3 = text.trim().parse()?;
    let instance = formula_to_instance(&phi);
    if let Some(j) = instance.red().first_empty_edge() {
        return Err(CliError::Unsatisfiable(format!("clause {} is constant false", j + 1)));
    }
    Ok(write_instance(&LabeledInstance {
        labels: phi.leaf_labels(),
        instance,
    }))
}

/// A gadget instance and its built-in solutions, both as file text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenOutput {
    pub instance: String,
    pub known: String,
}

/// Builds the SAT gadget of a DIMACS file. With `unchecked`, instances that
/// break the side condition are built anyway.
pub fn gen(text: &str, variant: GadgetVariant, unchecked: bool) -> Result<GenOutput, CliError> {
    let sat = SatInstance::parse_dimacs(text)?;
    let gadget: Gadget = match (variant, unchecked) {
        (GadgetVariant::Dim2, false) => reduce_dim2(&sat)?,
        (GadgetVariant::Dim2, true) => build_dim2(&sat),
        (GadgetVariant::Deg3, false) => reduce_deg3(&sat)?,
        (GadgetVariant::Deg3, true) => build_deg3(&sat)?,
    };
    let instance = write_instance(&LabeledInstance {
        labels: gadget.labels.clone(),
        instance: gadget.instance.clone(),
    });
    let known: Vec<Record> = gadget
        .known
        .iter()
        .map(|s| Record {
            s: Some(vertex_names(&gadget.labels, s)),
            b: Some(blue_names(&gadget.instance.footprint(s))),
        })
        .collect();
    Ok(GenOutput {
        instance,
        known: render(&known, OutputFormat::Text),
    })
}

/// Compares enumeration with the brute-force oracles on one instance file,
/// then checks a known-solutions file for completeness if one is given.
/// Instances beyond the oracles' size limits skip the comparison.
pub fn check_file(text: &str, known: Option<&str>, opts: &Options) -> Result<String, CliError> {
    let inst = parse_instance(text)?;
    let mut out = String::new();
    let small = inst.instance.vertex_count() <= BRUTE_FORCE_BTR_LIMIT
        && inst.instance.blue().edge_count() <= BRUTE_FORCE_BSETS_LIMIT;
    if small {
        let sols = check_instance(&inst.instance, opts)?;
        writeln!(out, "agree: {} bi-objective minimal transversals", sols.len()).unwrap();
    } else {
        writeln!(out, "skipped: instance too large for the oracle").unwrap();
    }
    if let Some(known) = known {
        let known = parse_known(known, &inst.labels)?;
        match bidual_check_with(&inst.instance, &known, &opts.dualizer())? {
            Completeness::Complete => writeln!(out, "complete: {} known solutions", known.len()).unwrap(),
            Completeness::Witness(w) => {
                let rec = &bi_records(&inst.labels, std::slice::from_ref(&w))[0];
                writeln!(out, "missing: {}", rec.text()).unwrap()
            }
        }
    }
    Ok(out)
}

fn check_instance(inst: &BiInstance, opts: &Options) -> Result<Vec<BiSolution>, CliError> {
    let dualizer = opts.dualizer();
    let tr = berge_dualize_with(inst.red(), opts.max_partials)?;
    let expected_tr = brute_force_dualize(inst.red())?;
    if tr != expected_tr {
        return Err(mismatch("dualize", tr.len(), expected_tr.len()));
    }
    let sols = bi_transversals_with(inst, &dualizer)?;
    let expected = brute_force_btr(inst)?;
    if sols != expected {
        return Err(mismatch("btr", sols.len(), expected.len()));
    }
    let bsets = minimal_bsets_with(inst, &dualizer)?;
    let expected_bsets = brute_force_bsets(inst)?;
    if bsets != expected_bsets {
        return Err(mismatch("bsets", bsets.len(), expected_bsets.len()));
    }
    Ok(sols)
}

/// Runs [`check_file`]'s oracle comparison on `count` seeded random
/// instances with at most 12 vertices.
pub fn check_random(count: usize, opts: &Options) -> Result<String, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut solutions = 0;
    for i in 0..count {
        let params = RandomParams {
            vertices: rng.gen_range(1..=12),
            red_edges: rng.gen_range(1..=5),
            blue_edges: rng.gen_range(0..=6),
            density: rng.gen_range(0.1..=0.6),
        };
        let seed = rng.gen();
        let inst = random_bi_instance(&params, seed)?;
        solutions += check_instance(&inst, opts)
            .map_err(|e| match e {
                CliError::Mismatch(msg) => CliError::Mismatch(format!("instance {i} (seed {seed}): {msg}")),
                other => other,
            })?
            .len();
    }
    Ok(format!(
        "agree: {count} random instances, {solutions} bi-objective minimal transversals\n"
    ))
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Times Berge against brute force on seeded random hypergraphs, and the
/// two-phase bi-objective enumeration against its brute-force counterpart.
/// Timings vary between runs; the solution counts do not.
pub fn bench(sizes: &[usize], per_size: usize, opts: &Options) -> Result<String, CliError> {
    let mut out = String::new();
    writeln!(
        out,
        "{:<8} {:>4} {:>6} {:>10} {:>12} {:>12}",
        "problem", "n", "count", "solutions", "fast_ms", "brute_ms"
    )
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for &n in sizes {
        let hs = (0..per_size)
            .map(|_| random_hypergraph(n, n.min(8), 0.3, rng.gen()))
            .collect::<Result<Vec<_>, _>>()?;
        let start = Instant::now();
        let mut solutions = 0;
        for h in &hs {
            solutions += berge_dualize_with(h, opts.max_partials)?.len();
        }
        let fast = millis(start);
        let start = Instant::now();
        for h in &hs {
            brute_force_dualize(h)?;
        }
        let brute = millis(start);
        writeln!(
            out,
            "{:<8} {:>4} {:>6} {:>10} {:>12.3} {:>12.3}",
            "dualize", n, per_size, solutions, fast, brute
        )
        .unwrap();
    }
    for &n in sizes {
        let params = RandomParams {
            vertices: n,
            red_edges: n.min(5),
            blue_edges: n.min(6),
            density: 0.3,
        };
        let insts = (0..per_size)
            .map(|_| random_bi_instance(&params, rng.gen()))
            .collect::<Result<Vec<_>, _>>()?;
        let start = Instant::now();
        let mut solutions = 0;
        for inst in &insts {
            solutions += bi_transversals_with(inst, &opts.dualizer())?.len();
        }
        let fast = millis(start);
        let start = Instant::now();
        for inst in &insts {
            brute_force_btr(inst)?;
        }
        let brute = millis(start);
        writeln!(
            out,
            "{:<8} {:>4} {:>6} {:>10} {:>12.3} {:>12.3}",
            "btr", n, per_size, solutions, fast, brute
        )
        .unwrap();
    }
    Ok(out)
}
