use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gdq::algebra::{cartan_matrix, Algebra};
use gdq::builtins::{presentation_by_name, BUILTIN_NAMES};
use gdq::classify::{classify, classification_sweep, SweepConfig};
use gdq::disks::{check_family, contract, disk_id, expand, find_disks};
use gdq::enumerate::{enumerate_with, tq_canonical_code};
use gdq::format::{fquiver_to_tq, parse_tq, parse_tri, presentation_to_tq, to_dot};
use gdq::homology::{
    all_simples_nonperiodic_vs_two_regular, check_syzygy, primitive_walk, simple_periodicity, tube_census,
    walk_is_admissible, SimplePeriodicity,
};
use gdq::presentation::{unit_presentation, GdPresentation};
use gdq::quiver::validate_triangulation_quiver;
use gdq::random::{random_weighted, rng_from_seed};
use gdq::surface::{quiver_from_surface, validate_triangulation};
use gdq::{Execution, Field, GdqError};

#[derive(Parser)]
#[command(name = "gdq", version, about = "Triangulation quivers and their weighted algebras")]
struct Cli {
    /// Field characteristic: 0 for the rationals, otherwise a prime.
    #[arg(long, global = true, env = "GDQ_FIELD")]
    field: Option<u64>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check a `.tq` or `.tri` file.
    Validate {
        path: PathBuf,
        /// Accept f′ with 1-vertices and 2-cycles.
        #[arg(long)]
        generalized: bool,
    },
    /// Build the triangulation quiver of a `.tri` surface.
    FromSurface {
        path: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report orbits, dimension, Cartan matrix, tubes, simples, walks and growth.
    Analyze {
        /// A `.tq` file or `builtin:NAME`.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Contract 2-triangle disks.
    Contract {
        input: String,
        /// `all` or a comma-separated list of disk ids such as `D1,D2`.
        #[arg(long, default_value = "all")]
        disks: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replace 1-vertices by loops and f′ 2-cycles by disks.
    Expand {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the classification record.
    Classify {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List all triangulation quivers up to isomorphism.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        sequential: bool,
    },
    /// Classify every weighting of every small triangulation quiver.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        weights: Vec<u32>,
        #[arg(long, value_delimiter = ',', default_value = "0,1")]
        border: Vec<i64>,
        /// Random weighted quivers with 4 to 7 vertices to test for singular Cartan matrices.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long)]
        sequential: bool,
    },
    /// Write a DOT digraph colored by f′-cycles.
    ExportDot {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn field_arg(cli: &Cli) -> anyhow::Result<Option<Field>> {
    Ok(cli.field.map(Field::from_characteristic).transpose()?)
}

fn load(input: &str, field: Option<Field>) -> anyhow::Result<GdPresentation> {
    if let Some(name) = input.strip_prefix("builtin:") {
        let p = presentation_by_name(name)
            .ok_or_else(|| anyhow!(GdqError::invalid(format!("unknown built-in `{name}`; try {}", BUILTIN_NAMES.join(", ")))))?;
        return Ok(match field {
            Some(f) => p.with_field(f)?,
            None => p,
        });
    }
    let text = fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    Ok(parse_tq(&text)?.presentation(field)?)
}

fn emit(output: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn is_tri(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "tri")
}

fn cmd_validate(path: &Path, generalized: bool, field: Option<Field>) -> anyhow::Result<ExitCode> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if is_tri(path) {
        let s = parse_tri(&text)?;
        let report = validate_triangulation(&s);
        println!("{report}");
        return Ok(if report.is_valid() { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    let file = parse_tq(&text)?;
    let fq = file.fquiver()?;
    let messages: Vec<String> = if generalized {
        fq.shape_violations().iter().map(ToString::to_string).collect()
    } else {
        validate_triangulation_quiver(&fq).violations.iter().map(ToString::to_string).collect()
    };
    if !messages.is_empty() {
        for m in messages {
            println!("{m}");
        }
        return Ok(ExitCode::from(1));
    }
    let p = file.presentation(field)?;
    let kind = if p.is_triangulation() { "triangulation" } else { "generalized" };
    println!(
        "valid kind={kind} vertices={} arrows={} orbits={}",
        p.quiver().vertex_count(),
        p.quiver().arrow_count(),
        p.orbits().len()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_from_surface(path: &Path, output: &Option<PathBuf>) -> anyhow::Result<()> {
    let s = parse_tri(&fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?)?;
    let report = validate_triangulation(&s);
    if !report.is_valid() {
        return Err(GdqError::invalid(report.to_string()).into());
    }
    let tq = quiver_from_surface(&s)?;
    emit(output, &presentation_to_tq(&unit_presentation(&tq)))
}

fn inconsistency(msg: String) -> anyhow::Error {
    GdqError::Inconsistency(msg).into()
}

fn analysis(p: &GdPresentation) -> anyhow::Result<Vec<(&'static str, Value, Vec<String>)>> {
    let q = p.quiver();
    let fq = p.fquiver();
    let mut sections = Vec::new();

    let orbits: Vec<Value> = p
        .orbits()
        .iter()
        .zip(p.orbit_weights())
        .map(|(o, m)| json!({"arrows": p.arrow_names(o), "n": o.len(), "m": m}))
        .collect();
    let cycles: Vec<String> = fq.f_cycles().iter().map(|c| format!("({})", fq.cycle_names(c).join(" "))).collect();
    let mut text: Vec<String> = p
        .orbits()
        .iter()
        .zip(p.orbit_weights())
        .map(|(o, m)| format!("orbit n={} m={m} arrows={}", o.len(), p.arrow_names(o).join(",")))
        .collect();
    text.push(format!("f {}", cycles.join(" ")));
    sections.push(("ORBITS", json!({"g_orbits": orbits, "f_cycles": cycles}), text));

    let alg = Algebra::new(p.clone());
    let (dim, formula) = (alg.dimension(), p.dimension_formula());
    if dim != formula {
        return Err(inconsistency(format!("basis has {dim} elements, formula gives {formula}")));
    }
    sections.push(("DIMENSION", json!({"dim": dim, "formula": formula}), vec![format!("dim={dim} formula={formula}")]));

    let c = cartan_matrix(p);
    let mut text: Vec<String> =
        c.entries.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
    text.push(format!("det={} symmetric={}", c.determinant, c.is_symmetric()));
    sections.push((
        "CARTAN",
        json!({"matrix": c.entries, "det": c.determinant.to_string(), "symmetric": c.is_symmetric()}),
        text,
    ));

    let census = tube_census(p);
    let mut text = vec![format!(
        "rank3={} rank1_arrows={} period2_pairs={}",
        census.rank3_count, census.rank1_arrow_count, census.period2_pairs
    )];
    let mut periods = serde_json::Map::new();
    for a in 0..q.arrow_count() {
        let check = check_syzygy(&alg, a);
        if !check.holds() {
            return Err(inconsistency(format!("syzygy check fails at `{}`: {check:?}", q.arrow_name(a))));
        }
        text.push(format!("period {}={} dim_u={}", q.arrow_name(a), census.periods[a], check.dim_u));
        periods.insert(q.arrow_name(a).to_string(), json!(census.periods[a]));
    }
    sections.push((
        "TUBES",
        json!({
            "rank3": census.rank3_count,
            "rank1_arrows": census.rank1_arrow_count,
            "period2_pairs": census.period2_pairs,
            "periods": periods,
        }),
        text,
    ));

    let simples = simple_periodicity(p);
    let (nonperiodic, regular) = all_simples_nonperiodic_vs_two_regular(p);
    if nonperiodic != regular {
        return Err(inconsistency("simple periodicity disagrees with the Gabriel quiver".into()));
    }
    let labels: Vec<&str> = simples
        .iter()
        .map(|s| if *s == SimplePeriodicity::Periodic { "periodic" } else { "nonperiodic" })
        .collect();
    let mut text: Vec<String> = (0..q.vertex_count()).map(|v| format!("simple {}={}", q.vertex_name(v), labels[v])).collect();
    text.push(format!("all_nonperiodic={nonperiodic} gabriel_2_regular={regular}"));
    let per_vertex: serde_json::Map<String, Value> =
        (0..q.vertex_count()).map(|v| (q.vertex_name(v).to_string(), json!(labels[v]))).collect();
    sections.push((
        "SIMPLES",
        json!({"simples": per_vertex, "all_nonperiodic": nonperiodic, "gabriel_2_regular": regular}),
        text,
    ));

    let mut text = Vec::new();
    let mut walks = Vec::new();
    if p.is_triangulation() {
        for a in (0..q.arrow_count()).filter(|&a| !q.is_loop(a)) {
            let (full, reduced) = primitive_walk(p, a)?;
            let ok = walk_is_admissible(p, &full, &reduced);
            if !ok {
                return Err(inconsistency(format!("walk from `{}` is not admissible", q.arrow_name(a))));
            }
            text.push(format!("walk {}: {} | reduced: {}", q.arrow_name(a), full.format(p), reduced.format(p)));
            walks.push(json!({"arrow": q.arrow_name(a), "walk": full.format(p), "reduced": reduced.format(p), "closed": full.closed}));
        }
    } else {
        text.push("walks=unavailable (not a triangulation quiver)".to_string());
    }
    sections.push(("WALKS", json!({"walks": walks}), text));

    let report = classify(p)?;
    sections.push((
        "GROWTH",
        json!({
            "growth": report.growth.to_string(),
            "family": report.family.as_ref().map(ToString::to_string),
            "det": report.cartan_det.to_string(),
            "strict": report.strict_dihedral,
        }),
        vec![report.record()],
    ));
    Ok(sections)
}

fn cmd_analyze(input: &str, format: Format, field: Option<Field>) -> anyhow::Result<()> {
    let p = load(input, field)?;
    for (name, value, text) in analysis(&p)? {
        match format {
            Format::Text => {
                println!("{name}");
                for line in text {
                    println!("  {line}");
                }
            }
            Format::Json => {
                let mut obj = json!({"section": name});
                if let (Value::Object(o), Value::Object(extra)) = (&mut obj, value) {
                    o.extend(extra);
                }
                println!("{obj}");
            }
        }
    }
    Ok(())
}

fn cmd_contract(input: &str, disks: &str, output: &Option<PathBuf>, field: Option<Field>) -> anyhow::Result<()> {
    let p = load(input, field)?;
    let tq = p.triangulation_quiver()?;
    let found = find_disks(&tq);
    let family = if disks == "all" {
        found
    } else {
        disks
            .split(',')
            .map(|id| {
                let id = id.trim();
                (0..found.len())
                    .find(|&k| disk_id(k) == id)
                    .map(|k| found[k])
                    .ok_or_else(|| anyhow!(GdqError::invalid(format!("no disk `{id}`; found {}", found.len()))))
            })
            .collect::<anyhow::Result<Vec<_>>>()?
    };
    check_family(&family)?;
    emit(output, &presentation_to_tq(&contract(&p, &family)?))
}

fn cmd_enumerate(max_vertices: usize, format: Format, exec: Execution) -> anyhow::Result<()> {
    let quivers = enumerate_with(max_vertices, exec)?;
    for (k, tq) in quivers.iter().enumerate() {
        let census = tq.f_census();
        let (n, code) = (tq.quiver().vertex_count(), tq_canonical_code(tq));
        match format {
            Format::Text => {
                println!("# Q{} vertices={n} triangles={} border={}", k + 1, census.three_cycles, census.fixed);
                println!("{}", fquiver_to_tq(tq.fquiver()));
            }
            Format::Json => println!(
                "{}",
                json!({"index": k + 1, "vertices": n, "triangles": census.three_cycles, "border": census.fixed, "code": code})
            ),
        }
    }
    if let Format::Text = format {
        println!("total={}", quivers.len());
    }
    Ok(())
}

struct SweepArgs<'a> {
    max_vertices: usize,
    weights: &'a [u32],
    border: &'a [i64],
    random: usize,
    exec: Execution,
    seed: u64,
}

fn cmd_sweep(a: SweepArgs) -> anyhow::Result<ExitCode> {
    let config = SweepConfig {
        max_vertices: a.max_vertices,
        weights: a.weights.to_vec(),
        border: a.border.to_vec(),
        check_simples: a.max_vertices <= 4,
    };
    let r = classification_sweep(&config, a.exec)?;
    println!("quivers={} instances={} nonsingular={}", r.quivers, r.instances, r.nonsingular);
    for (family, count) in &r.families {
        println!("family={family} count={count}");
    }
    println!("polynomial={}", r.polynomial.join(","));
    println!(
        "exceptions={} large_nonsingular={} simple_mismatches={} growth_mismatches={}",
        r.exceptions.len(),
        r.large_nonsingular.len(),
        r.simple_mismatches.len(),
        r.growth_mismatches.len()
    );
    for line in r.exceptions.iter().chain(&r.large_nonsingular).chain(&r.simple_mismatches).chain(&r.growth_mismatches) {
        println!("  {line}");
    }
    let mut clean = r.is_clean();
    if a.random > 0 {
        let mut rng = rng_from_seed(a.seed);
        let mut singular = 0;
        for _ in 0..a.random {
            let p = random_weighted(&mut rng, 4..=7, 3);
            if cartan_matrix(&p).is_singular() {
                singular += 1;
            } else {
                println!("  nonsingular random instance:\n{}", presentation_to_tq(&p));
            }
        }
        println!("random={} singular={singular}", a.random);
        clean &= singular == a.random;
    }
    Ok(if clean { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let field = field_arg(&cli)?;
    let exec = |sequential: bool| if sequential { Execution::Sequential } else { Execution::Parallel };
    match &cli.command {
        Command::Validate { path, generalized } => return cmd_validate(path, *generalized, field),
        Command::FromSurface { path, output } => cmd_from_surface(path, output)?,
        Command::Analyze { input, format } => cmd_analyze(input, *format, field)?,
        Command::Contract { input, disks, output } => cmd_contract(input, disks, output, field)?,
        Command::Expand { input, output } => {
            let e = expand(&load(input, field)?)?;
            emit(output, &presentation_to_tq(&e.presentation))?;
        }
        Command::Classify { input, format } => {
            let r = classify(&load(input, field)?)?;
            match format {
                Format::Text => println!("{}", r.record()),
                Format::Json => println!(
                    "{}",
                    json!({
                        "family": r.family.as_ref().map(ToString::to_string),
                        "det": r.cartan_det.to_string(),
                        "strict": r.strict_dihedral,
                        "growth": r.growth.to_string(),
                        "simples": r.simples,
                        "biserial": r.biserial,
                        "generalized_dihedral": r.generalized_dihedral,
                    })
                ),
            }
        }
        Command::Enumerate { max_vertices, format, sequential } => cmd_enumerate(*max_vertices, *format, exec(*sequential))?,
        Command::Sweep { max_vertices, weights, border, random, sequential } => {
            if weights.is_empty() || weights.contains(&0) {
                bail!(GdqError::invalid("weights must be positive"));
            }
            return cmd_sweep(SweepArgs {
                max_vertices: *max_vertices,
                weights,
                border,
                random: *random,
                exec: exec(*sequential),
                seed: cli.seed,
            });
        }
        Command::ExportDot { input, output } => emit(output, &to_dot(load(input, field)?.fquiver()))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let inconsistent = e.downcast_ref::<GdqError>().is_some_and(GdqError::is_inconsistency);
            ExitCode::from(if inconsistent { 2 } else { 1 })
        }
    }
}
