//! Command-line front end for `grouplaw-core`.
//!
//! Exit codes: 0 = success / mathematically consistent, 1 = usage or
//! resource error, 2 = mathematical inconsistency (a failing verdict or a
//! scan counterexample). Code 2 is never used for bad input, so the binary
//! doubles as a CI guard over the library.

pub mod format;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use grouplaw_core::law::{parse_law, satisfies_p, PropertyReport};
use grouplaw_core::theorems::{
    torsion_decompose, verify_lemma_3_1, verify_theorem_3_1, LemmaVerdict,
};
use grouplaw_core::{catalog, enumerate, law, subgroup, Caps, FiniteGroup, GroupError};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "grouplaw",
    version,
    about = "Finite-group computations around power-commutation laws"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable lines.
    Text,
    /// Line-delimited JSON records.
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Check property P(m, n) and the finite structure theorem on one group.
    Check {
        #[arg(long)]
        group: String,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Scan a corpus of groups over exponent pairs, hunting counterexamples.
    Scan {
        #[arg(long)]
        max_order: usize,
        /// Exponent pairs as "m1,n1;m2,n2".
        #[arg(long, default_value = "2,3")]
        pairs: String,
        /// Scan the named catalog corpus (the default).
        #[arg(long, conflicts_with = "enumerate")]
        catalog: bool,
        /// Scan every isomorphism class up to the max order instead.
        #[arg(long)]
        enumerate: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write one Cayley file per isomorphism class of a given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Output directory for the Cayley files.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Verify the Sylow biconditional (G_{p^a} subgroup iff unique Sylow p).
    Sylow {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u64,
    },
    /// Decompose an element into commuting prime-power-order parts.
    Decompose {
        #[arg(long)]
        group: String,
        #[arg(long)]
        element: usize,
    },
    /// Evaluate a law over all assignments of its variables.
    Law {
        #[arg(long)]
        group: String,
        #[arg(long)]
        law: String,
    },
    /// List every subgroup with normality and abelianness flags.
    Lattice {
        #[arg(long)]
        group: String,
    },
}

/// Runs the CLI on the given argv and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let caps = match caps_from_env() {
        Ok(caps) => caps,
        Err(message) => {
            eprintln!("error: {message}");
            return 1;
        }
    };
    match dispatch(cli.command, &caps) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

/// Caps with environment overrides: GROUPLAW_ORDER_CAP,
/// GROUPLAW_CLOSURE_CAP, GROUPLAW_ENUM_CAP, GROUPLAW_EVAL_BUDGET.
fn caps_from_env() -> Result<Caps, String> {
    fn read<T: std::str::FromStr>(name: &str, default: T) -> Result<T, String> {
        match std::env::var(name) {
            Ok(text) => text
                .parse()
                .map_err(|_| format!("{name} must be a positive integer, got `{text}`")),
            Err(_) => Ok(default),
        }
    }
    let d = Caps::default();
    Ok(Caps {
        order_cap: read("GROUPLAW_ORDER_CAP", d.order_cap)?,
        closure_cap: read("GROUPLAW_CLOSURE_CAP", d.closure_cap)?,
        enum_cap: read("GROUPLAW_ENUM_CAP", d.enum_cap)?,
        eval_budget: read("GROUPLAW_EVAL_BUDGET", d.eval_budget)?,
    })
}

/// Builds a group from a spec string, resolving `@path` bases from disk.
pub fn make_group(spec: &str, caps: &Caps) -> Result<FiniteGroup, GroupError> {
    catalog::make_with(spec, caps, &mut |path| {
        let text = fs::read_to_string(path).map_err(|e| GroupError::External {
            message: format!("cannot read `{path}`: {e}"),
        })?;
        format::parse_cayley(&text)
    })
}

fn dispatch(command: Command, caps: &Caps) -> Result<i32, GroupError> {
    match command {
        Command::Check { group, m, n, format } => check(&group, m, n, format, caps),
        Command::Scan { max_order, pairs, enumerate, format, .. } => {
            scan(max_order, &pairs, enumerate, format, caps)
        }
        Command::Enumerate { order, out } => enumerate_cmd(order, &out, caps),
        Command::Sylow { group, p } => sylow(&group, p, caps),
        Command::Decompose { group, element } => decompose(&group, element, caps),
        Command::Law { group, law } => law_cmd(&group, &law, caps),
        Command::Lattice { group } => lattice(&group, caps),
    }
}

fn witness_json(report: &PropertyReport) -> Value {
    match &report.witness {
        Some(w) => json!({ "a": w.a, "b": w.b, "exponent": w.exponent }),
        None => Value::Null,
    }
}

fn property_record(report: &PropertyReport) -> Value {
    json!({
        "record": "property",
        "group": report.group,
        "order": report.order,
        "m": report.m,
        "n": report.n,
        "satisfies_p": report.satisfies_p,
        "is_abelian": report.is_abelian,
        "witness": witness_json(report),
        "theorems_inapplicable": report.theorems_inapplicable,
        "wall_micros": report.wall_micros,
    })
}

fn verdict_record(verdict: &LemmaVerdict) -> Value {
    json!({
        "record": "verdict",
        "statement": verdict.statement,
        "holds": verdict.holds,
        "vacuous": verdict.vacuous,
        "evidence": verdict.evidence,
        "violation": verdict.violation,
    })
}

fn property_line(report: &PropertyReport) -> String {
    let mut line = format!(
        "{} (order {}) P({},{}): {}",
        report.group, report.order, report.m, report.n, report.satisfies_p
    );
    if let Some(w) = &report.witness {
        line.push_str(&format!(
            " (witness: a={}, b={}, exponent={})",
            w.a, w.b, w.exponent
        ));
    }
    line.push_str(&format!("; abelian: {}", report.is_abelian));
    if report.theorems_inapplicable {
        line.push_str("; theorems inapplicable (non-coprime pair)");
    }
    line
}

fn check(spec: &str, m: u64, n: u64, format: Format, caps: &Caps) -> Result<i32, GroupError> {
    let g = make_group(spec, caps)?;
    let started = Instant::now();
    let mut report = satisfies_p(&g, m, n, false)?;
    report.wall_micros = Some(started.elapsed().as_micros() as u64);
    let verdict = verify_theorem_3_1(&g, m, n, caps)?;
    match format {
        Format::Text => {
            let status = if verdict.vacuous {
                "vacuous".to_string()
            } else if verdict.holds {
                "holds".to_string()
            } else {
                format!("FAILS ({})", verdict.violation.as_deref().unwrap_or("?"))
            };
            println!("{}; theorem 3.1: {status}", property_line(&report));
        }
        Format::Records => {
            println!("{}", property_record(&report));
            println!("{}", verdict_record(&verdict));
        }
    }
    Ok(if verdict.holds { 0 } else { 2 })
}

fn parse_pairs(text: &str) -> Result<Vec<(u64, u64)>, GroupError> {
    let bad = |message: String| GroupError::BadSpec { message };
    let mut pairs = Vec::new();
    for chunk in text.split(';') {
        let (m, n) = chunk
            .split_once(',')
            .ok_or_else(|| bad(format!("pair `{chunk}` is not of the form m,n")))?;
        let m = m.trim().parse().map_err(|_| bad(format!("bad exponent `{m}`")))?;
        let n = n.trim().parse().map_err(|_| bad(format!("bad exponent `{n}`")))?;
        pairs.push((m, n));
    }
    Ok(pairs)
}

fn scan(
    max_order: usize,
    pairs: &str,
    enumerated: bool,
    format: Format,
    caps: &Caps,
) -> Result<i32, GroupError> {
    let pairs = parse_pairs(pairs)?;
    let groups = if enumerated {
        let mut all = Vec::new();
        for n in 1..=max_order {
            all.extend(enumerate::enumerate_order(n, caps)?);
        }
        all
    } else {
        catalog::standard_catalog(max_order, caps)?
    };
    let report = catalog::scan(&groups, &pairs)?;
    match format {
        Format::Text => {
            for row in &report.rows {
                println!("{}", property_line(row));
            }
            println!(
                "rows: {}; satisfiers: {}; abelian: {}",
                report.rows.len(),
                report.satisfiers,
                report.abelian
            );
            println!("counterexamples: {}", report.counterexamples.len());
        }
        Format::Records => {
            for row in &report.rows {
                println!("{}", property_record(row));
            }
            println!(
                "{}",
                json!({
                    "record": "summary",
                    "rows": report.rows.len(),
                    "satisfiers": report.satisfiers,
                    "abelian": report.abelian,
                    "counterexamples": report.counterexamples.len(),
                })
            );
        }
    }
    Ok(if report.counterexamples.is_empty() { 0 } else { 2 })
}

fn enumerate_cmd(order: usize, out: &PathBuf, caps: &Caps) -> Result<i32, GroupError> {
    let classes = enumerate::enumerate_order(order, caps)?;
    let io_err = |e: std::io::Error| GroupError::External { message: format!("{e}") };
    fs::create_dir_all(out).map_err(io_err)?;
    for (i, g) in classes.iter().enumerate() {
        let path = out.join(format!("order{order}_class{i}.tbl"));
        fs::write(&path, format::render_cayley(g)).map_err(io_err)?;
    }
    println!("order {order}: {} classes", classes.len());
    Ok(0)
}

fn sylow(spec: &str, p: u64, caps: &Caps) -> Result<i32, GroupError> {
    let g = make_group(spec, caps)?;
    let verdict = verify_lemma_3_1(&g, p, caps)?;
    println!(
        "lemma 3.1 for p = {p} on {} (order {}): {}",
        g.name(),
        g.order(),
        if verdict.holds { "holds" } else { "FAILS" }
    );
    for line in &verdict.evidence {
        println!("  {line}");
    }
    if let Some(why) = &verdict.violation {
        println!("  violation: {why}");
    }
    Ok(if verdict.holds { 0 } else { 2 })
}

fn decompose(spec: &str, element: usize, caps: &Caps) -> Result<i32, GroupError> {
    let g = make_group(spec, caps)?;
    if element >= g.order() {
        return Err(GroupError::BadSpec {
            message: format!("element {element} out of range for order {}", g.order()),
        });
    }
    let d = torsion_decompose(&g, element);
    println!(
        "element {element} of {} (order {}): o(x) = {}",
        g.name(),
        g.order(),
        d.order
    );
    for part in &d.parts {
        println!(
            "  x_i = x^{} = element {}: order {}^{} = {}, lambda = {}",
            part.cofactor,
            part.part,
            part.prime,
            part.exponent,
            part.prime.pow(part.exponent),
            part.coefficient
        );
    }
    if d.parts.is_empty() {
        println!("  identity: empty product");
    } else {
        let terms: Vec<String> = d
            .parts
            .iter()
            .map(|p| format!("{}*{}", p.coefficient, p.cofactor))
            .collect();
        println!("  bezout: {} = 1", terms.join(" + "));
        let product: Vec<String> = d
            .parts
            .iter()
            .map(|p| format!("x_{}^{}", p.part, p.coefficient))
            .collect();
        println!("  reconstruction: {} = element {element}", product.join(" * "));
    }
    let verified = d.verify(&g);
    println!("verified: {verified}");
    Ok(if verified { 0 } else { 2 })
}

fn law_cmd(spec: &str, law_text: &str, caps: &Caps) -> Result<i32, GroupError> {
    let g = make_group(spec, caps)?;
    let parsed = parse_law(law_text)?;
    let (holds, witness) = law::holds(&g, &parsed, caps)?;
    if holds {
        println!("law {parsed} on {} (order {}): holds", g.name(), g.order());
    } else {
        let w = witness.expect("failing law has a witness");
        let assignment: Vec<String> =
            w.iter().map(|(name, id)| format!("{name}={id}")).collect();
        println!(
            "law {parsed} on {} (order {}): fails at {}",
            g.name(),
            g.order(),
            assignment.join(", ")
        );
    }
    Ok(0)
}

fn lattice(spec: &str, caps: &Caps) -> Result<i32, GroupError> {
    let g = make_group(spec, caps)?;
    let subs = subgroup::all_subgroups(&g, caps)?;
    println!("subgroups of {} (order {}): {}", g.name(), g.order(), subs.len());
    for (i, h) in subs.iter().enumerate() {
        println!(
            "  #{i}: order {}, members {:?}, normal: {}, abelian: {}",
            h.len(),
            h.members(),
            h.is_normal(&g)?,
            h.is_abelian(&g)
        );
    }
    Ok(0)
}
