//! Command-line surface for the serial-module combinatorics toolkit.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use taunak::algebra::parse_signed_indec;
use taunak::arcs::ArcOps;
use taunak::cluster::ClusterCategory;
use taunak::export;
use taunak::lattice::TorsLattice;
use taunak::picture::{self, Style};
use taunak::smc::{SemibrickPair, SmcOps};
use taunak::tautilt::WideSub;
use taunak::{AlgebraSpec, Indec};

#[derive(Parser)]
#[command(
    name = "taunak",
    version,
    about = "Combinatorics of serial modules over connected Nakayama algebras"
)]
struct Cli {
    /// Number of simple modules (used with --kupisch)
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Kupisch series, comma separated (e.g. 3,2,1)
    #[arg(long, global = true, value_delimiter = ',')]
    kupisch: Option<Vec<usize>>,

    /// JSON file {"n": ..., "kupisch": [...]} instead of inline flags
    #[arg(long, global = true)]
    algebra: Option<PathBuf>,

    /// Write the output to a file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for verification sweeps
    #[arg(long, global = true)]
    parallel: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Tikz,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summary of the algebra: series, counts, census size
    Info,
    /// List the bricks
    Bricks,
    /// List (or draw) the arcs of the punctured disk
    Arcs,
    /// Two-term simple-minded collections
    Smc {
        #[command(subcommand)]
        cmd: SmcCmd,
    },
    /// Support tau-tilting pairs
    Stt {
        #[command(subcommand)]
        cmd: SttCmd,
    },
    /// The lattice of torsion classes
    Tors {
        #[command(subcommand)]
        cmd: TorsCmd,
    },
    /// The picture group
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// The classifying cube complex
    Complex {
        #[command(subcommand)]
        cmd: ComplexCmd,
    },
    /// Run the cross-pipeline verification suite
    Verify {
        /// Run every check (accepted for symmetry; always on)
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand)]
enum SmcCmd {
    /// Enumerate all complete collections
    Enumerate,
    /// Check a colored brick set: semibrick pair, compatibility, completability
    Check {
        /// Module-part bricks, e.g. "M(1,2)" (repeatable)
        #[arg(long)]
        positive: Vec<String>,
        /// Shifted-part bricks, e.g. "M(2,2)" (repeatable)
        #[arg(long)]
        negative: Vec<String>,
    },
    /// Left mutation of a complete collection at a module-part brick
    Mutate {
        #[arg(long)]
        positive: Vec<String>,
        #[arg(long)]
        negative: Vec<String>,
        /// The brick to mutate at
        #[arg(long)]
        at: String,
    },
}

#[derive(Subcommand)]
enum SttCmd {
    /// The exchange graph of support tau-tilting pairs
    Graph,
}

#[derive(Subcommand)]
enum TorsCmd {
    /// The brick-labeled Hasse quiver
    Hasse,
    /// The polygon census
    Polygons,
    /// All maximal green sequences
    Mgs,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Emit a presentation of the picture group
    Present {
        /// polygon, path, mgs, or coset
        #[arg(long, default_value = "polygon")]
        style: String,
    },
    /// Certify the presentations through the brick algebra
    Verify,
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// Build the complex and report cube and cell counts
    Build,
    /// The flag condition on all vertex links
    #[command(name = "check-cat0")]
    CheckCat0,
}

/// Exit 1: the input was invalid. Exit 2: a verified identity failed.
enum Failure {
    Input(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> ExitCode {
        match self {
            Failure::Input(_) => ExitCode::from(1),
            Failure::Verification(_) => ExitCode::from(2),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Verification(m) => m,
        }
    }
}

fn input_err(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn resolve_spec(cli: &Cli) -> Result<AlgebraSpec, Failure> {
    if let Some(path) = &cli.algebra {
        if cli.n.is_some() || cli.kupisch.is_some() {
            return Err(input_err("--algebra excludes --n/--kupisch"));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| input_err(format!("cannot read {}: {e}", path.display())))?;
        #[derive(serde::Deserialize)]
        struct File {
            n: usize,
            kupisch: Vec<usize>,
        }
        let f: File = serde_json::from_str(&text)
            .map_err(|e| input_err(format!("bad algebra file: {e}")))?;
        return AlgebraSpec::new(f.n, f.kupisch).map_err(|e| input_err(e.to_string()));
    }
    match (cli.n, &cli.kupisch) {
        (Some(n), Some(k)) => {
            AlgebraSpec::new(n, k.clone()).map_err(|e| input_err(e.to_string()))
        }
        _ => Err(input_err("provide --n and --kupisch, or --algebra <file>")),
    }
}

fn parse_part(spec: &AlgebraSpec, tokens: &[String], shifted: bool) -> Result<Vec<Indec>, Failure> {
    let mut out = Vec::new();
    for raw in tokens {
        for piece in raw.split(['+', ' ']).filter(|s| !s.trim().is_empty()) {
            let x = parse_signed_indec(piece).map_err(|e| input_err(e.to_string()))?;
            if x.shifted && !shifted {
                return Err(input_err(format!("{piece} is shifted but listed as positive")));
            }
            if !spec.is_indec(x.module) || !spec.is_brick(x.module) {
                return Err(input_err(format!("{} is not a brick here", x.module)));
            }
            out.push(x.module);
        }
    }
    Ok(out)
}

fn emit(cli: &Cli, text: String) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| input_err(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn emit_json(cli: &Cli, v: Value) -> Result<(), Failure> {
    emit(cli, format!("{}\n", serde_json::to_string_pretty(&v).unwrap()))
}

fn unsupported(format: Format, verb: &str) -> Failure {
    let name = match format {
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Tikz => "tikz",
        Format::Text => "text",
    };
    input_err(format!("format {name} is not available for `{verb}`"))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if let Some(k) = cli.parallel {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| input_err(format!("cannot size the worker pool: {e}")))?;
    }
    let spec = resolve_spec(cli)?;
    match &cli.cmd {
        Cmd::Info => match cli.format {
            Format::Json => emit_json(cli, export::info_json(&spec)),
            Format::Text => emit(
                cli,
                format!(
                    "{spec}\ncyclic: {}\nindecomposables: {}\nbricks: {}\ncollections: {}\n",
                    spec.is_cyclic(),
                    spec.indecs().len(),
                    spec.bricks().len(),
                    spec.all_two_smcs().len()
                ),
            ),
            f => Err(unsupported(f, "info")),
        },
        Cmd::Bricks => match cli.format {
            Format::Json => emit_json(cli, export::bricks_json(&spec)),
            Format::Text => emit(
                cli,
                spec.bricks().iter().map(|b| format!("{b}\n")).collect::<String>(),
            ),
            f => Err(unsupported(f, "bricks")),
        },
        Cmd::Arcs => match cli.format {
            Format::Json => emit_json(cli, export::arcs_json(&spec)),
            Format::Tikz => emit(cli, export::all_arcs_tikz(&spec)),
            Format::Text => emit(
                cli,
                spec.arcs().iter().map(|a| format!("{a}\n")).collect::<String>(),
            ),
            f => Err(unsupported(f, "arcs")),
        },
        Cmd::Smc { cmd } => run_smc(cli, &spec, cmd),
        Cmd::Stt { cmd: SttCmd::Graph } => {
            let lat = TorsLattice::build(WideSub::full(&spec));
            match cli.format {
                Format::Dot => emit(cli, export::stt_graph_dot(&lat)),
                Format::Json => emit_json(
                    cli,
                    json!({
                        "vertices": lat
                            .vertices()
                            .iter()
                            .map(|v| v.pair.to_string())
                            .collect::<Vec<_>>(),
                        "arrows": lat
                            .arrows()
                            .iter()
                            .map(|a| json!({
                                "from": a.from,
                                "to": a.to,
                                "label": a.label.to_string(),
                            }))
                            .collect::<Vec<_>>(),
                    }),
                ),
                f => Err(unsupported(f, "stt graph")),
            }
        }
        Cmd::Tors { cmd } => {
            let lat = TorsLattice::build(WideSub::full(&spec));
            match (cmd, cli.format) {
                (TorsCmd::Hasse, Format::Dot) => emit(cli, export::lattice_dot(&lat)),
                (TorsCmd::Hasse, Format::Json) => emit_json(
                    cli,
                    json!({
                        "vertices": lat.len(),
                        "arrows": lat
                            .arrows()
                            .iter()
                            .map(|a| json!([a.from, a.to, a.label.to_string()]))
                            .collect::<Vec<_>>(),
                    }),
                ),
                (TorsCmd::Polygons, Format::Json) => emit_json(cli, export::polygons_json(&lat)),
                (TorsCmd::Mgs, Format::Json) => emit_json(cli, export::mgs_json(&lat)),
                (TorsCmd::Mgs, Format::Text) => emit(
                    cli,
                    lat.maximal_green_sequences()
                        .iter()
                        .map(|w| {
                            let labels: Vec<String> =
                                w.iter().map(|s| s.to_string()).collect();
                            format!("{}\n", labels.join(" "))
                        })
                        .collect::<String>(),
                ),
                (_, f) => Err(unsupported(f, "tors")),
            }
        }
        Cmd::Group { cmd } => run_group(cli, &spec, cmd),
        Cmd::Complex { cmd } => {
            let cat = ClusterCategory::build(&spec);
            let complex = cat.build_cube_complex();
            match cmd {
                ComplexCmd::Build => match cli.format {
                    Format::Json => emit_json(cli, complex.stats_json()),
                    Format::Dot => emit(cli, export::complex_dot(&cat, &complex)),
                    f => Err(unsupported(f, "complex build")),
                },
                ComplexCmd::CheckCat0 => {
                    let report = complex.check_links_flag();
                    emit_json(cli, json!({ "flag": report.flag }))?;
                    if report.flag {
                        Ok(())
                    } else {
                        Err(Failure::Verification("a vertex link is not flag".into()))
                    }
                }
            }
        }
        Cmd::Verify { all: _ } => run_verify(cli, &spec),
    }
}

fn run_smc(cli: &Cli, spec: &AlgebraSpec, cmd: &SmcCmd) -> Result<(), Failure> {
    match cmd {
        SmcCmd::Enumerate => {
            let smcs = spec.all_two_smcs();
            match cli.format {
                Format::Json => emit_json(
                    cli,
                    Value::Array(
                        smcs.iter().map(|s| export::pattern_json(&s.pattern())).collect(),
                    ),
                ),
                Format::Text => emit(
                    cli,
                    smcs.iter()
                        .map(|s| format!("{}\n", export::pattern_text(&s.pattern())))
                        .collect::<String>(),
                ),
                Format::Tikz => emit(
                    cli,
                    smcs.iter()
                        .map(|s| export::pattern_tikz(spec, &s.pattern()))
                        .collect::<String>(),
                ),
                f => Err(unsupported(f, "smc enumerate")),
            }
        }
        SmcCmd::Check { positive, negative } => {
            let sbp = SemibrickPair::new(
                parse_part(spec, positive, false)?,
                parse_part(spec, negative, true)?,
            );
            let semibrick = spec.check_semibrick_pair(&sbp);
            let compatible = spec.check_mutation_compatible(&sbp);
            let completion = spec.complete(&sbp).ok();
            let verdict = json!({
                "semibrick_pair": semibrick.is_ok(),
                "mutation_compatible": compatible.is_ok(),
                "completable": completion.is_some(),
                "reason": match (&semibrick, &compatible) {
                    (Err(e), _) => Some(e.to_string()),
                    (_, Err(e)) => Some(e.to_string()),
                    _ => None,
                },
                "completion": completion
                    .map(|c| export::pattern_json(&c.pattern()))
                    .unwrap_or(Value::Null),
            });
            match cli.format {
                Format::Json => emit_json(cli, verdict),
                Format::Text => emit(
                    cli,
                    format!(
                        "semibrick pair: {}\nmutation compatible: {}\ncompletable: {}\n",
                        verdict["semibrick_pair"],
                        verdict["mutation_compatible"],
                        verdict["completable"]
                    ),
                ),
                f => Err(unsupported(f, "smc check")),
            }
        }
        SmcCmd::Mutate { positive, negative, at } => {
            let sbp = SemibrickPair::new(
                parse_part(spec, positive, false)?,
                parse_part(spec, negative, true)?,
            );
            if !spec.is_two_smc(&sbp) {
                return Err(input_err("the given pair is not a complete collection"));
            }
            let at = parse_signed_indec(at).map_err(|e| input_err(e.to_string()))?;
            let mutated = spec
                .mutate_smc(&sbp, at.module)
                .map_err(|e| input_err(e.to_string()))?;
            match cli.format {
                Format::Json => emit_json(cli, export::pattern_json(&mutated.pattern())),
                Format::Text => {
                    emit(cli, format!("{}\n", export::pattern_text(&mutated.pattern())))
                }
                f => Err(unsupported(f, "smc mutate")),
            }
        }
    }
}

fn run_group(cli: &Cli, spec: &AlgebraSpec, cmd: &GroupCmd) -> Result<(), Failure> {
    match cmd {
        GroupCmd::Present { style } => {
            let style: Style = style.parse().map_err(input_err)?;
            let pres = picture::presentation(spec, style);
            match cli.format {
                Format::Json => emit_json(cli, pres.to_json()),
                Format::Text => emit(cli, pres.render_text()),
                f => Err(unsupported(f, "group present")),
            }
        }
        GroupCmd::Verify => {
            let report = picture::verify_presentation(spec);
            emit_json(
                cli,
                json!({
                    "passed": report.passed(),
                    "relation_counts": report.relation_counts,
                    "failures": report.failures,
                }),
            )?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification("a presentation certificate failed".into()))
            }
        }
    }
}

fn run_verify(cli: &Cli, spec: &AlgebraSpec) -> Result<(), Failure> {
    use rayon::prelude::*;
    type Check<'a> = (&'static str, Box<dyn Fn() -> Result<(), String> + Sync + Send + 'a>);

    let lat = TorsLattice::build(WideSub::full(spec));
    let cat = ClusterCategory::build(spec);

    let checks: Vec<Check<'_>> = vec![
        (
            "collection census matches lattice labels",
            Box::new({
                let lat = &lat;
                let spec = spec.clone();
                move || {
                    let from_lat: BTreeSet<SemibrickPair> =
                        (0..lat.len()).map(|v| lat.x_of(v)).collect();
                    let from_arcs: BTreeSet<SemibrickPair> =
                        spec.all_two_smcs().into_iter().collect();
                    if from_lat == from_arcs {
                        Ok(())
                    } else {
                        Err("label census differs from the arc census".into())
                    }
                }
            }),
        ),
        (
            "lattice covers realize collection mutation",
            Box::new({
                let lat = &lat;
                let spec = spec.clone();
                move || {
                    for i in 0..lat.len() {
                        let x = lat.x_of(i);
                        for &(j, label) in &lat.vertices()[i].down {
                            let m = spec
                                .mutate_smc(&x, label)
                                .map_err(|e| format!("mutation at {label}: {e}"))?;
                            if m != lat.x_of(j) {
                                return Err(format!("cover at {label} disagrees"));
                            }
                        }
                    }
                    Ok(())
                }
            }),
        ),
        (
            "last factors reproduce the collections",
            Box::new({
                let lat = &lat;
                let cat = &cat;
                move || {
                    for v in 0..lat.len() {
                        let u = lat.vertices()[v].pair.clone();
                        if cat.x_of_stt(&u) != lat.x_of(v) {
                            return Err(format!("mismatch at {u}"));
                        }
                    }
                    Ok(())
                }
            }),
        ),
        (
            "picture group certificates",
            Box::new({
                let spec = spec.clone();
                move || {
                    let r = picture::verify_presentation(&spec);
                    if r.passed() {
                        Ok(())
                    } else {
                        Err(r.failures.join("; "))
                    }
                }
            }),
        ),
        (
            "cubical structure",
            Box::new({
                let cat = &cat;
                move || {
                    let r = cat.check_cubical();
                    if r.passed() {
                        Ok(())
                    } else {
                        Err(r.failures.join("; "))
                    }
                }
            }),
        ),
        (
            "sphere links",
            Box::new({
                let cat = &cat;
                move || {
                    let r = cat.check_sphere_links();
                    if r.passed() {
                        Ok(())
                    } else {
                        Err(r.failures.join("; "))
                    }
                }
            }),
        ),
        (
            "two-cell boundaries and generators",
            Box::new({
                let cat = &cat;
                move || {
                    let r = cat.check_pi1_cells();
                    if r.passed() {
                        Ok(())
                    } else {
                        Err(r.failures.join("; "))
                    }
                }
            }),
        ),
        (
            "flag links",
            Box::new({
                let cat = &cat;
                move || {
                    if cat.build_cube_complex().check_links_flag().flag {
                        Ok(())
                    } else {
                        Err("a vertex link is not flag".into())
                    }
                }
            }),
        ),
    ];

    let results: Vec<(&'static str, Result<(), String>)> =
        checks.par_iter().map(|(name, f)| (*name, f())).collect();

    let mut lines = String::new();
    let mut failed = false;
    for (name, r) in &results {
        match r {
            Ok(()) => lines.push_str(&format!("ok: {name}\n")),
            Err(e) => {
                failed = true;
                lines.push_str(&format!("FAIL: {name}: {e}\n"));
            }
        }
    }
    match cli.format {
        Format::Json => emit_json(
            cli,
            json!({
                "passed": !failed,
                "checks": results
                    .iter()
                    .map(|(name, r)| json!({
                        "name": name,
                        "passed": r.is_ok(),
                        "error": r.as_ref().err(),
                    }))
                    .collect::<Vec<_>>(),
            }),
        )?,
        _ => emit(cli, lines)?,
    }
    if failed {
        Err(Failure::Verification("verification suite failed".into()))
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}
