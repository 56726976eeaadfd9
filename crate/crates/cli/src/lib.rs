//! The `brauer` command-line tool. [`run`] takes the full argument list and
//! returns the exit code together with everything written to stdout and
//! stderr, so the binary is a thin wrapper and tests can drive it directly.

use std::fmt::Write as _;

use brauer_core::admissible::{self, Admissibility};
use brauer_core::braction::{act_word, check_relations};
use brauer_core::diagram::{cell_gram, d_semisimplicity_report, semisimple_at, z_set};
use brauer_core::morita::{self, blocks, cell_poset_d, quasi_hereditary_report, rank_check, wedderburn_sizes};
use brauer_core::{
    AlgebraKind, DiagramSpec, EnumerationOptions, Error, ExactRational, MonoidWord, Root, RootSet, RootSystem,
};
use clap::{Parser, Subcommand};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "brauer", version, about = "Exact computations for Brauer algebras of simply-laced type")]
struct Cli {
    /// Emit Graphviz DOT where the command supports it
    #[arg(long, global = true, conflicts_with = "json")]
    dot: bool,

    /// Emit JSON (default)
    #[arg(long, global = true)]
    json: bool,

    /// Allow orbit enumeration for E8
    #[arg(long, global = true)]
    opt_in_e8: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots in canonical order
    Roots { spec: String },
    /// W-orbits of admissible root sets
    Orbits { spec: String },
    /// Monoidal poset of one orbit
    Poset {
        spec: String,
        #[arg(long)]
        orbit: usize,
    },
    /// Admissible closure of a set of orthogonal roots
    Closure {
        spec: String,
        /// Simple-root labels "1,3" or coefficient vectors "1,0,0,1;1,1,2,1"
        roots: String,
    },
    /// Apply a word such as "R1 E2" to an admissible set, rightmost letter first
    Act { spec: String, roots: String, word: String },
    /// Check every defining relation on the admissible sets
    Relations { spec: String },
    /// Morita blocks and the rank identity
    Morita {
        spec: String,
        #[arg(long)]
        bmw: bool,
    },
    /// Matrix sizes of the semisimple decomposition
    Wedderburn { spec: String },
    /// Gram determinant of the type A cell with t arcs on m strands
    Gram { m: usize, t: usize },
    /// Cell forms at a parameter, or generically without --delta
    Semisimple {
        m: usize,
        #[arg(long)]
        delta: Option<String>,
    },
    /// Type D non-semisimplicity criteria
    Dnss {
        n: usize,
        #[arg(long)]
        delta: String,
        #[arg(long = "char")]
        characteristic: Option<u64>,
    },
    /// The integer set Z(n) used by the type D criteria
    Zset { n: usize },
    /// The cell poset of type D_n
    #[command(name = "cellposet-d")]
    CellposetD { n: usize },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<String, Failure>;

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 1, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli) {
        Ok(stdout) => Output { code: 0, stdout, stderr: String::new() },
        Err(Failure::Usage(msg)) => Output { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Core(e)) => {
            let code = if e.is_violation() { 2 } else { 1 };
            Output { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    let opts = EnumerationOptions { opt_in_e8: cli.opt_in_e8, ..Default::default() };
    let dot_only = |what: &str| -> Result<(), Failure> {
        if cli.dot {
            return Err(Failure::Usage(format!("{what} has no DOT output")));
        }
        Ok(())
    };
    match &cli.command {
        Command::Roots { spec } => {
            dot_only("roots")?;
            roots(&system(spec)?)
        }
        Command::Orbits { spec } => {
            dot_only("orbits")?;
            orbits(&system(spec)?, &opts)
        }
        Command::Poset { spec, orbit } => poset(&system(spec)?, *orbit, &opts, cli.dot),
        Command::Closure { spec, roots } => {
            dot_only("closure")?;
            let rs = system(spec)?;
            let x = parse_root_set(&rs, roots)?;
            let cl = admissible::closure(&rs, &x)?;
            json(&ClosureOut {
                spec: rs.spec(),
                input: x.coeffs(&rs),
                admissible: admissible::is_admissible(&rs, &x, Admissibility::ClosureRule),
                closure: cl.coeffs(&rs),
            })
        }
        Command::Act { spec, roots, word } => {
            dot_only("act")?;
            let rs = system(spec)?;
            let b = parse_root_set(&rs, roots)?;
            if !admissible::is_admissible(&rs, &b, Admissibility::ClosureRule) {
                return Err(Failure::Usage(format!("{} is not admissible", b.display(&rs))));
            }
            let w: MonoidWord = word.parse()?;
            let out = act_word(&rs, &w, &b)?;
            json(&ActOut { spec: rs.spec(), input: b.coeffs(&rs), word: w.to_string(), result: out.coeffs(&rs) })
        }
        Command::Relations { spec } => {
            dot_only("relations")?;
            let rs = system(spec)?;
            let report = check_relations(&rs, &opts)?;
            if !report.all_passed() {
                let failed: Vec<&str> =
                    report.relations.iter().filter(|r| !r.passed).map(|r| r.relation.as_str()).collect();
                return Err(Error::Violation(format!("relations fail: {}", failed.join("; "))).into());
            }
            json(&report)
        }
        Command::Morita { spec, bmw } => {
            dot_only("morita")?;
            let rs = system(spec)?;
            let kind = if *bmw { AlgebraKind::Bmw } else { AlgebraKind::Brauer };
            let blocks = blocks(&rs, kind, &opts)?;
            let report = rank_check(&rs, &opts)?;
            json(&MoritaOut {
                spec: rs.spec(),
                total_rank: blocks.iter().map(|b| b.contribution()).sum(),
                blocks,
                oracle: OracleOut { method: report.oracle, total: report.oracle_total },
                r#match: report.matches,
            })
        }
        Command::Wedderburn { spec } => {
            dot_only("wedderburn")?;
            let rs = system(spec)?;
            json(&WedderburnOut { spec: rs.spec(), blocks: wedderburn_sizes(&rs, &opts)? })
        }
        Command::Gram { m, t } => {
            dot_only("gram")?;
            let c = cell_gram(*m, *t)?;
            let roots = c.rational_roots()?.iter().map(ToString::to_string).collect();
            json(&GramOut {
                m: c.m,
                t: c.t,
                basis: c.basis.iter().map(ToString::to_string).collect(),
                size: c.size(),
                det: c.det.to_string(),
                det_terms: c.det.clone(),
                factors: c
                    .factors
                    .iter()
                    .map(|f| FactorOut {
                        shape: f.shape.clone(),
                        multiplicity: f.multiplicity,
                        numerator: f.numerator.to_string(),
                        denominator: f.denominator.to_string(),
                    })
                    .collect(),
                rational_roots: roots,
            })
        }
        Command::Semisimple { m, delta } => {
            dot_only("semisimple")?;
            match delta {
                Some(d) => json(&semisimple_at(*m, &parse_rational(d)?)?),
                None => json(&quasi_hereditary_report(*m, None)?),
            }
        }
        Command::Dnss { n, delta, characteristic } => {
            dot_only("dnss")?;
            json(&d_semisimplicity_report(*n, &parse_rational(delta)?, *characteristic)?)
        }
        Command::Zset { n } => {
            dot_only("zset")?;
            json(&ZsetOut { n: *n, z: z_set(*n) })
        }
        Command::CellposetD { n } => {
            let p = cell_poset_d(*n)?;
            if cli.dot {
                return Ok(p.to_dot());
            }
            json(&CellPosetOut {
                n: p.n,
                elements: p.elements.iter().map(ToString::to_string).collect(),
                hasse_edges: edge_strings(&p.hasse_edges()),
                drawn_edges: edge_strings(&p.drawn_edges()),
                total: p.is_total(),
            })
        }
    }
}

fn edge_strings(edges: &[(morita::CellLabel, morita::CellLabel)]) -> Vec<[String; 2]> {
    edges.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect()
}

fn json<T: Serialize>(value: &T) -> CmdResult {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn system(spec: &str) -> Result<RootSystem, Failure> {
    let spec: DiagramSpec = spec.parse()?;
    Ok(RootSystem::new(spec))
}

fn parse_rational(s: &str) -> Result<ExactRational, Failure> {
    let bad = || Failure::Usage(format!("{s:?} is not a rational number p/q"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(ExactRational::new(p.into(), q.into()))
}

/// `"1,3"` lists simple roots by their 1-based labels; anything containing
/// `;` is a list of coefficient vectors (a single vector takes a trailing
/// `;`). The empty string is the empty set.
fn parse_root_set(rs: &RootSystem, s: &str) -> Result<RootSet, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(RootSet::empty());
    }
    let number = |t: &str| -> Result<i64, Failure> {
        t.trim().parse().map_err(|_| Failure::Usage(format!("{t:?} is not an integer")))
    };
    if s.contains(';') {
        let mut roots = Vec::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let coeffs = part.split(',').map(|t| number(t).map(|v| v as i32)).collect::<Result<Vec<_>, _>>()?;
            roots.push(Root::new(coeffs));
        }
        return Ok(RootSet::from_roots(rs, &roots)?);
    }
    let mut nodes = Vec::new();
    for t in s.split(',') {
        let v = number(t)?;
        if v < 1 || v as usize > rs.rank() {
            return Err(Error::OutOfBounds(format!("simple root {v} not in {}", rs.spec())).into());
        }
        nodes.push(v as usize - 1);
    }
    Ok(RootSet::from_nodes(rs, &nodes)?)
}

#[derive(Serialize)]
struct RootOut {
    index: usize,
    coeffs: Root,
    height: i32,
}

#[derive(Serialize)]
struct RootsOut {
    spec: DiagramSpec,
    rank: usize,
    count: usize,
    highest_root: Root,
    roots: Vec<RootOut>,
}

fn roots(rs: &RootSystem) -> CmdResult {
    json(&RootsOut {
        spec: rs.spec(),
        rank: rs.rank(),
        count: rs.len(),
        highest_root: rs.root(rs.highest_root()).clone(),
        roots: (0..rs.len())
            .map(|k| RootOut { index: k, coeffs: rs.root(k).clone(), height: rs.height(k) })
            .collect(),
    })
}

#[derive(Serialize)]
struct OrbitOut {
    id: usize,
    size: usize,
    set_size: usize,
    representative: Vec<Vec<i32>>,
    maximal: Vec<Vec<i32>>,
}

#[derive(Serialize)]
struct ReferenceOut {
    matched: Vec<(String, usize)>,
    unmatched: Vec<String>,
    uncovered_orbits: Vec<usize>,
}

#[derive(Serialize)]
struct OrbitsOut {
    spec: DiagramSpec,
    admissible_sets: usize,
    orbit_count: usize,
    orbits: Vec<OrbitOut>,
    reference: ReferenceOut,
}

fn orbits(rs: &RootSystem, opts: &EnumerationOptions) -> CmdResult {
    let orbits = admissible::enumerate_all_orbits(rs, opts)?;
    let cmp = admissible::compare_with_reference(rs, &orbits)?;
    json(&OrbitsOut {
        spec: rs.spec(),
        admissible_sets: orbits.iter().map(|o| o.size()).sum(),
        orbit_count: orbits.len(),
        orbits: orbits
            .iter()
            .enumerate()
            .map(|(id, o)| OrbitOut {
                id,
                size: o.size(),
                set_size: o.representative().len(),
                representative: o.representative().coeffs(rs),
                maximal: o.maximal().unwrap_or_default().coeffs(rs),
            })
            .collect(),
        reference: ReferenceOut { matched: cmp.matched, unmatched: cmp.unmatched, uncovered_orbits: cmp.uncovered_orbits },
    })
}

#[derive(Serialize)]
struct PosetOut {
    spec: DiagramSpec,
    orbit: usize,
    size: usize,
    members: Vec<Vec<Vec<i32>>>,
    maximal: usize,
    /// Covering pairs `[lower, upper]` by member index.
    hasse_edges: Vec<(usize, usize)>,
    ties: usize,
}

fn poset(rs: &RootSystem, id: usize, opts: &EnumerationOptions, dot: bool) -> CmdResult {
    let orbits = admissible::enumerate_all_orbits(rs, opts)?;
    let o = orbits
        .get(id)
        .ok_or_else(|| Error::OutOfBounds(format!("orbit {id} of {} does not exist ({} orbits)", rs.spec(), orbits.len())))?;
    let p = o.poset().ok_or_else(|| Error::Violation("orbit without poset".into()))?;
    if dot {
        let mut s = format!("digraph orbit_{id} {{\n  rankdir=BT;\n");
        for (k, m) in o.members().iter().enumerate() {
            let _ = writeln!(s, "  n{k} [label=\"{}\"];", m.display(rs));
        }
        for &(lo, hi) in p.hasse_edges() {
            let _ = writeln!(s, "  n{lo} -> n{hi};");
        }
        s.push_str("}\n");
        return Ok(s);
    }
    json(&PosetOut {
        spec: rs.spec(),
        orbit: id,
        size: o.size(),
        members: o.members().iter().map(|m| m.coeffs(rs)).collect(),
        maximal: p.maximal(),
        hasse_edges: p.hasse_edges().to_vec(),
        ties: p.ties(),
    })
}

#[derive(Serialize)]
struct ClosureOut {
    spec: DiagramSpec,
    input: Vec<Vec<i32>>,
    admissible: bool,
    closure: Vec<Vec<i32>>,
}

#[derive(Serialize)]
struct ActOut {
    spec: DiagramSpec,
    input: Vec<Vec<i32>>,
    word: String,
    result: Vec<Vec<i32>>,
}

#[derive(Serialize)]
struct OracleOut {
    method: &'static str,
    total: Option<u128>,
}

#[derive(Serialize)]
struct MoritaOut {
    spec: DiagramSpec,
    blocks: Vec<brauer_core::MoritaBlock>,
    total_rank: u128,
    oracle: OracleOut,
    r#match: bool,
}

#[derive(Serialize)]
struct WedderburnOut {
    spec: DiagramSpec,
    blocks: Vec<morita::WedderburnBlock>,
}

#[derive(Serialize)]
struct FactorOut {
    shape: Vec<usize>,
    multiplicity: u64,
    numerator: String,
    denominator: String,
}

#[derive(Serialize)]
struct GramOut {
    m: usize,
    t: usize,
    basis: Vec<String>,
    size: usize,
    det: String,
    det_terms: brauer_core::LaurentPoly,
    factors: Vec<FactorOut>,
    rational_roots: Vec<String>,
}

#[derive(Serialize)]
struct ZsetOut {
    n: usize,
    z: Vec<i64>,
}

#[derive(Serialize)]
struct CellPosetOut {
    n: usize,
    elements: Vec<String>,
    /// Covering pairs `[greater, smaller]`.
    hasse_edges: Vec<[String; 2]>,
    drawn_edges: Vec<[String; 2]>,
    total: bool,
}
