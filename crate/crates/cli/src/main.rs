//! `seminormal`: tableaux, representation matrices, characters and
//! verification reports on standard output.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad flags, 3 invalid shape or
//! rank, 4 rank or enumeration cap, 5 pole at the evaluation point.

mod output;

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use seminormal::arith::{ArithError, Rational};
use seminormal::error::Error;
use seminormal::hecke::{build_hecke, central_matrix, murphy_matrix, specialize_rep};
use seminormal::labels::{enum_shapes, tableau_weight, GroupType, ShapeLabel};
use seminormal::matrix::Matrix;
use seminormal::rep::{apply_group_algebra, build_rep, element_matrices, BasisVector, SeminormalRep};
use seminormal::verify::{plan_suite, run_suite, Caps, Check, CheckReport, SuiteOptions};
use seminormal::weyl::{self, central_flavors, central_sum, jm_element, jm_flavors, JmFlavor};

use output::{
    matrix_strings, BasisJson, CharacterJson, CharacterTableJson, ElementJson, LevelJson, NamedMatrix, RepJson,
    ReportJson, ShapeJson, TableauEntry, TableauListing,
};

#[derive(Parser)]
#[command(name = "seminormal", version, about = "Seminormal representations of Weyl groups and their Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard tableaux (or G2 paths) of a shape with contents, signs and weights.
    Tableaux {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        shapes: Shapes,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Seminormal matrices of the Weyl group generators.
    Rep {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        shapes: Shapes,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Seminormal matrices of the Hecke algebra generators over Q(p, q).
    HeckeRep {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        shapes: Shapes,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Jucys-Murphy matrices (Weyl) or Murphy matrices (Hecke, with --hecke).
    Murphy {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        shapes: Shapes,
        #[arg(long)]
        hecke: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Characters on every group element, from traces.
    Characters {
        #[command(flatten)]
        target: Target,
        /// One shape; every shape of rank n when omitted.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the verification suite; exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Comma-separated check names; every applicable check when omitted.
        #[arg(long, value_delimiter = ',', value_parser = parse_check)]
        checks: Option<Vec<Check>>,
        /// Largest rank accepted by tableau-only checks.
        #[arg(long)]
        tableau_cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate the Hecke matrices at rational p and q.
    Specialize {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        shapes: Shapes,
        #[arg(long, default_value = "1", value_parser = parse_rational, allow_hyphen_values = true)]
        p: Rational,
        #[arg(long, default_value = "1", value_parser = parse_rational, allow_hyphen_values = true)]
        q: Rational,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
struct Target {
    /// Group type: A, B, D or G2.
    #[arg(long = "type", value_parser = parse_group)]
    group: GroupType,
    /// Rank; inferred from --shape when omitted, and 2 for G2.
    #[arg(long)]
    n: Option<usize>,
    /// Largest rank accepted; the default depends on the command and type.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct Shapes {
    /// A shape such as 3,2 or (2,1)|(1), a D half such as (1)|(1)+, or a G2 label such as phi_2_1.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    shape: Option<String>,
    /// Every shape of rank n.
    #[arg(long)]
    all: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_group(s: &str) -> Result<GroupType, String> {
    s.parse().map_err(|_: Error| format!("unknown group type {s:?}; expected A, B, D or G2"))
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
        format!("unknown check {s:?}; expected one of {}", names.join(", "))
    })
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| format!("{s:?} is not a rational number: {e}"))
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::CapExceeded { .. } | Error::RankCapExceeded { .. } => 4,
            Error::Arith(ArithError::Parse { .. }) => 2,
            Error::Arith(_) => 5,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<ArithError> for Failure {
    fn from(e: ArithError) -> Self {
        Failure::from(Error::Arith(e))
    }
}

enum Cap {
    /// Commands that build matrices directly from tableaux.
    Tableau,
    /// Commands that multiply many matrices or enumerate the group.
    Group,
}

fn rank_cap(target: &Target, kind: Cap) -> usize {
    let caps = Caps::default();
    target.cap.unwrap_or(match kind {
        Cap::Tableau => caps.tableau_cap(target.group),
        Cap::Group => caps.group_cap(target.group),
    })
}

fn check_cap(target: &Target, n: usize, kind: Cap) -> Result<(), Failure> {
    let cap = rank_cap(target, kind);
    if n > cap {
        return Err(Error::RankCapExceeded { group: target.group.name(), n, cap }.into());
    }
    Ok(())
}

fn resolve_rank(target: &Target) -> Result<usize, Failure> {
    match (target.n, target.group) {
        (Some(n), _) => Ok(n),
        (None, GroupType::G2) => Ok(2),
        (None, _) => Err(Failure::usage("--n is required without --shape")),
    }
}

fn resolve_one(target: &Target, shape: &str, kind: Cap) -> Result<ShapeLabel, Failure> {
    let label = ShapeLabel::parse(target.group, shape)?;
    let n = label.n();
    if let Some(expected) = target.n {
        if expected != n {
            return Err(Error::InvalidShape(format!("shape {label} has rank {n}, not {expected}")).into());
        }
    }
    target.group.check_rank(n)?;
    check_cap(target, n, kind)?;
    Ok(label)
}

/// The labels selected by `--shape` or `--all`.
fn resolve_labels(target: &Target, shapes: &Shapes, kind: Cap) -> Result<Vec<ShapeLabel>, Failure> {
    match &shapes.shape {
        Some(s) => Ok(vec![resolve_one(target, s, kind)?]),
        None => {
            let n = resolve_rank(target)?;
            target.group.check_rank(n)?;
            check_cap(target, n, kind)?;
            Ok(enum_shapes(target.group, n)?)
        }
    }
}

fn emit_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string(value).map_err(|e| Failure { code: 1, message: e.to_string() })?;
    s.push('\n');
    Ok(s)
}

/// A single object for one shape, an array for `--all`.
fn emit_each<T: Serialize>(items: &[T], all: bool) -> Result<String, Failure> {
    if all {
        emit_json(&items)
    } else {
        emit_json(&items[0])
    }
}

fn text_matrices(out: &mut String, header: &str, mats: &[NamedMatrix]) {
    out.push_str(header);
    out.push('\n');
    for m in mats {
        out.push_str(&format!("  {}\n", m.name));
        for row in &m.matrix {
            out.push_str(&format!("    [{}]\n", row.join(", ")));
        }
    }
}

fn level_json(w: &seminormal::labels::LevelWeight) -> LevelJson {
    LevelJson { short: w.short, long: w.long, zero: w.zero }
}

fn tableau_listing(label: &ShapeLabel) -> Result<TableauListing, Failure> {
    let rep = build_rep(label)?;
    let group = label.group();
    let tableaux = rep
        .basis
        .iter()
        .enumerate()
        .map(|(index, b)| match b {
            BasisVector::Tableau(t) => TableauEntry {
                index,
                basis: BasisJson::of_tableau(t),
                contents: t.contents(),
                signs: if t.shape().is_double() { t.signs() } else { Vec::new() },
                relative_signs: (group == GroupType::D).then(|| t.relative_signs()),
                weight: tableau_weight(t, group).iter().map(level_json).collect(),
            },
            BasisVector::Path(p) => TableauEntry {
                index,
                basis: BasisJson::of_vector(b),
                contents: Vec::new(),
                signs: Vec::new(),
                relative_signs: None,
                weight: seminormal::labels::g2_path_weight(p).iter().map(level_json).collect(),
            },
        })
        .collect();
    Ok(TableauListing { group: group.name(), n: label.n(), shape: ShapeJson::of_label(label), tableaux })
}

fn cmd_tableaux(target: &Target, shapes: &Shapes, format: Format) -> Result<String, Failure> {
    let labels = resolve_labels(target, shapes, Cap::Tableau)?;
    let listings = labels.iter().map(tableau_listing).collect::<Result<Vec<_>, _>>()?;
    if format == Format::Json {
        return emit_each(&listings, shapes.all);
    }
    let mut out = String::new();
    for (label, listing) in labels.iter().zip(&listings) {
        out.push_str(&format!("{} n={} {}: {} tableaux\n", listing.group, listing.n, label, listing.tableaux.len()));
        for (entry, b) in listing.tableaux.iter().zip(&build_rep(label)?.basis) {
            let name = match b {
                BasisVector::Tableau(t) => t.to_string(),
                BasisVector::Path(p) => format!("{} -> {}", p.level1.partition(), p.label.name()),
            };
            out.push_str(&format!("  {} {}", entry.index, name));
            if !entry.contents.is_empty() {
                out.push_str(&format!(" contents={:?}", entry.contents));
            }
            if !entry.signs.is_empty() {
                out.push_str(&format!(" signs={:?}", entry.signs));
            }
            if let Some(r) = &entry.relative_signs {
                out.push_str(&format!(" relative_signs={r:?}"));
            }
            out.push('\n');
        }
    }
    Ok(out)
}

fn emit_reps(reps: Vec<RepJson>, all: bool, format: Format) -> Result<String, Failure> {
    if format == Format::Json {
        return emit_each(&reps, all);
    }
    let mut out = String::new();
    for r in &reps {
        let header = format!("{} n={} dim={}", r.group, r.n, r.basis.len());
        let mats = r.generators.as_ref().or(r.operators.as_ref()).map_or(&[][..], |v| &v[..]);
        text_matrices(&mut out, &header, mats);
    }
    Ok(out)
}

fn cmd_rep(target: &Target, shapes: &Shapes, format: Format, hecke: bool) -> Result<String, Failure> {
    let labels = resolve_labels(target, shapes, Cap::Tableau)?;
    let mut reps = Vec::with_capacity(labels.len());
    for label in &labels {
        reps.push(if hecke {
            RepJson::with_generators(&build_hecke(label)?)
        } else {
            RepJson::with_generators(&build_rep(label)?)
        });
    }
    emit_reps(reps, shapes.all, format)
}

/// Levels carrying Murphy elements: `2..=n` in type A, `1..=n` otherwise.
fn levels(group: GroupType, n: usize) -> std::ops::RangeInclusive<usize> {
    if group == GroupType::A {
        2..=n
    } else {
        1..=n
    }
}

fn weyl_operators(rep: &SeminormalRep) -> Result<Vec<NamedMatrix>, Failure> {
    let (group, n) = (rep.group, rep.n);
    let mut ops = Vec::new();
    for k in levels(group, n) {
        if group == GroupType::G2 {
            for &f in central_flavors(group, k) {
                let m = apply_group_algebra(rep, &central_sum(group, n, k, f)?)?;
                ops.push(NamedMatrix { name: format!("z{k}_{}", f.name()), matrix: matrix_strings(&m) });
            }
            continue;
        }
        for &f in jm_flavors(group) {
            // The long flavors vanish at level one.
            if k == 1 && matches!(f, JmFlavor::Long | JmFlavor::Two) {
                continue;
            }
            let m = apply_group_algebra(rep, &jm_element(group, n, k, f)?)?;
            ops.push(NamedMatrix { name: format!("m{k}_{}", f.name()), matrix: matrix_strings(&m) });
        }
    }
    Ok(ops)
}

fn cmd_murphy(target: &Target, shapes: &Shapes, hecke: bool, format: Format) -> Result<String, Failure> {
    let labels = resolve_labels(target, shapes, Cap::Group)?;
    let mut reps = Vec::with_capacity(labels.len());
    for label in &labels {
        if hecke {
            let rep = build_hecke(label)?;
            let mut ops = Vec::new();
            for k in levels(rep.group, rep.n) {
                let (name, m) = if rep.group == GroupType::G2 {
                    (format!("z{k}"), central_matrix(&rep, k)?)
                } else {
                    (format!("M{k}"), murphy_matrix(&rep, k)?)
                };
                ops.push(NamedMatrix { name, matrix: matrix_strings(&m) });
            }
            reps.push(RepJson { operators: Some(ops), ..RepJson::header(&rep) });
        } else {
            let rep = build_rep(label)?;
            reps.push(RepJson { operators: Some(weyl_operators(&rep)?), ..RepJson::header(&rep) });
        }
    }
    emit_reps(reps, shapes.all, format)
}

fn cmd_characters(target: &Target, shape: Option<&str>, format: Format) -> Result<String, Failure> {
    let shapes = Shapes { shape: shape.map(str::to_string), all: shape.is_none() };
    let labels = resolve_labels(target, &shapes, Cap::Group)?;
    let (group, n) = (target.group, labels[0].n());
    let cap = Caps::default().enumeration;
    let mut columns: Vec<BTreeMap<weyl::GroupElement, Matrix<Rational>>> = Vec::new();
    for label in &labels {
        columns.push(element_matrices(&build_rep(label)?, cap)?);
    }
    let elements: Vec<weyl::GroupElement> = columns[0].keys().cloned().collect();
    let characters: Vec<CharacterJson> = labels
        .iter()
        .zip(&columns)
        .map(|(label, mats)| CharacterJson {
            shape: label.to_string(),
            values: elements.iter().map(|g| mats[g].trace().to_string()).collect(),
        })
        .collect();
    let table = CharacterTableJson {
        group: group.name(),
        n,
        elements: elements
            .iter()
            .map(|g| ElementJson { element: g.to_string(), word: weyl::reduced_word(group, g) })
            .collect(),
        characters,
    };
    if format == Format::Json {
        return emit_json(&table);
    }
    let mut out = format!("{} n={}: {} elements\n", table.group, table.n, table.elements.len());
    for (i, e) in table.elements.iter().enumerate() {
        let values: Vec<&str> = table.characters.iter().map(|c| c.values[i].as_str()).collect();
        out.push_str(&format!("  {} {:?}: {}\n", e.element, e.word, values.join(" ")));
    }
    Ok(out)
}

fn cmd_verify(
    target: &Target,
    checks: Option<Vec<Check>>,
    tableau_cap: Option<usize>,
    format: Format,
) -> Result<(String, bool), Failure> {
    let n = resolve_rank(target)?;
    target.group.check_rank(n)?;
    let mut caps = Caps::default();
    if let Some(cap) = target.cap {
        match target.group {
            GroupType::A => caps.a = cap,
            GroupType::B => caps.b = cap,
            GroupType::D => caps.d = cap,
            GroupType::G2 => {}
        }
    }
    if let Some(cap) = tableau_cap {
        match target.group {
            GroupType::A => caps.tableau_a = cap,
            GroupType::B => caps.tableau_b = cap,
            GroupType::D => caps.tableau_d = cap,
            GroupType::G2 => {}
        }
    }
    let options = SuiteOptions { checks, caps };
    let plan = plan_suite(target.group, n, &options)?;
    // Checks are independent; each runs on its own thread and the reports
    // are concatenated in suite order.
    let per_check: Vec<Vec<CheckReport>> = plan
        .par_iter()
        .map(|c| run_suite(target.group, n, &SuiteOptions { checks: Some(vec![*c]), caps }))
        .collect::<Result<_, _>>()?;
    let reports: Vec<CheckReport> = per_check.into_iter().flatten().collect();
    let ok = reports.iter().all(CheckReport::passed);
    let text = if format == Format::Json {
        emit_json(&reports.iter().map(ReportJson::from).collect::<Vec<_>>())?
    } else {
        let mut out = String::new();
        for r in &reports {
            out.push_str(&format!("{r}\n"));
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        out.push_str(&format!("{} reports, {} failed\n", reports.len(), failed));
        out
    };
    Ok((text, ok))
}

fn cmd_specialize(
    target: &Target,
    shapes: &Shapes,
    p: &Rational,
    q: &Rational,
    format: Format,
) -> Result<String, Failure> {
    let labels = resolve_labels(target, shapes, Cap::Tableau)?;
    let mut reps = Vec::with_capacity(labels.len());
    for label in &labels {
        let hecke = build_hecke(label)?;
        reps.push(RepJson::with_generators(&specialize_rep(&hecke, p, q)?));
    }
    emit_reps(reps, shapes.all, format)
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let done = |s: String| Ok((s, true));
    match cli.command {
        Command::Tableaux { target, shapes, format } => done(cmd_tableaux(&target, &shapes, format)?),
        Command::Rep { target, shapes, format } => done(cmd_rep(&target, &shapes, format, false)?),
        Command::HeckeRep { target, shapes, format } => done(cmd_rep(&target, &shapes, format, true)?),
        Command::Murphy { target, shapes, hecke, format } => done(cmd_murphy(&target, &shapes, hecke, format)?),
        Command::Characters { target, shape, format } => done(cmd_characters(&target, shape.as_deref(), format)?),
        Command::Verify { target, checks, tableau_cap, format } => cmd_verify(&target, checks, tableau_cap, format),
        Command::Specialize { target, shapes, p, q, format } => done(cmd_specialize(&target, &shapes, &p, &q, format)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, ok)) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not an error for a batch tool.
            let _ = stdout.write_all(text.as_bytes());
            let _ = stdout.flush();
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("seminormal: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
