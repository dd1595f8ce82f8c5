//! Command line front end: argument parsing and the subcommands.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use lattice_cover::bounds::{bounds_report, exact_witnesses, known_chain};
use lattice_cover::exact::{search, t_min_with, ExactConfig};
use lattice_cover::heuristic::{
    best_upper_bound_search, random_search, SearchConfig, Strategy, DEFAULT_SEED,
};
use lattice_cover::io::{
    format_solution_line, parse_corpus, render_svg, verify_corpus, RenderOptions, SolutionRecord,
};
use lattice_cover::{classify, Solution};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VERIFY_FAILED: u8 = 2;
pub const EXIT_NOT_FOUND: u8 = 3;

#[derive(Parser)]
#[command(
    name = "lattice-cover",
    version,
    about = "Minimal line covers of square lattices"
)]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "LATTICE_COVER_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive search: t(n) with all classes, or the classes of size T.
    SolveExact {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: Option<usize>,
        /// Largest n for which t(n) is attempted.
        #[arg(long, default_value_t = ExactConfig::default().feasibility_cap)]
        cap: u32,
    },
    /// Monte Carlo search for a cover with T vertices, or for the smallest
    /// cover it can find when T is omitted.
    SolveHeuristic {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = SearchConfig::default().budget)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value = "uniform")]
        strategy: Strategy,
        #[arg(long, default_value_t = SearchConfig::default().restarts)]
        restarts: u32,
        #[arg(long, default_value_t = SearchConfig::default().improve_rounds)]
        improve_rounds: u64,
    },
    /// Constructive upper bounds for n.
    Bounds {
        #[arg(long)]
        n: u32,
        /// Extra covers in solution-line format to seed the recursions.
        #[arg(long)]
        known: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check every record of a solution file.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write one SVG drawing per record.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Draw every spanned line instead of a covering subset.
        #[arg(long)]
        all_lines: bool,
        #[arg(long, default_value_t = RenderOptions::default().scale)]
        scale: f64,
    },
    /// Group the records of a solution file into congruence classes.
    Classify { file: PathBuf },
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
pub fn run_cli<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| run(cli.command, out)),
            Err(e) => Err(e.into()),
        },
        None => run(cli.command, out),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e:#}");
        EXIT_USAGE
    })
}

fn run(command: Command, w: &mut dyn Write) -> anyhow::Result<u8> {
    match command {
        Command::SolveExact { n, t, cap } => solve_exact(w, n, t, cap),
        Command::SolveHeuristic {
            n,
            t,
            budget,
            seed,
            strategy,
            restarts,
            improve_rounds,
        } => {
            let config = SearchConfig {
                strategy,
                target_t: t.unwrap_or(2),
                budget,
                seed,
                restarts,
                improve_rounds,
            };
            solve_heuristic(w, n, t, &config)
        }
        Command::Bounds { n, known, json } => bounds(w, n, known.as_deref(), json),
        Command::Verify { file, json } => verify(w, &file, json),
        Command::Render {
            file,
            out,
            all_lines,
            scale,
        } => render(w, &file, &out, all_lines, scale),
        Command::Classify { file } => classify_file(w, &file),
    }
}

fn read_records(path: &Path) -> anyhow::Result<Vec<SolutionRecord>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let origin = path.file_name().map_or_else(
        || path.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    );
    parse_corpus(&text, &origin).with_context(|| format!("parsing {}", path.display()))
}

fn solve_exact(w: &mut dyn Write, n: u32, t: Option<usize>, cap: u32) -> anyhow::Result<u8> {
    let config = ExactConfig {
        feasibility_cap: cap,
        ..ExactConfig::default()
    };
    let classes = match t {
        Some(t) => {
            let found = search(n, t, &config)?;
            writeln!(w, "n={n} t={t}: {} classes", found.classes.len())?;
            found.classes
        }
        None => {
            let r = t_min_with(n, &config)?;
            writeln!(w, "t({n}) = {}, {} classes", r.t_min, r.classes.len())?;
            r.classes
        }
    };
    for (i, c) in classes.iter().enumerate() {
        let source = format!("class {} orbit {}", i + 1, c.orbit_size);
        writeln!(
            w,
            "{}",
            format_solution_line(&SolutionRecord::from_solution(&c.representative, source))
        )?;
    }
    Ok(0)
}

fn solve_heuristic(
    w: &mut dyn Write,
    n: u32,
    t: Option<usize>,
    config: &SearchConfig,
) -> anyhow::Result<u8> {
    match t {
        Some(_) => match random_search(n, config)? {
            Some(hit) => {
                let source = format!("random search seed {}", config.seed);
                writeln!(
                    w,
                    "{}",
                    format_solution_line(&SolutionRecord::from_solution(&hit, source))
                )?;
                Ok(0)
            }
            None => {
                writeln!(w, "not found")?;
                Ok(EXIT_NOT_FOUND)
            }
        },
        None => {
            let r = best_upper_bound_search(n, config)?;
            let source = format!("upper bound (from {}) seed {}", r.seed_size, config.seed);
            writeln!(
                w,
                "{}",
                format_solution_line(&SolutionRecord::from_solution(&r.witness, source))
            )?;
            Ok(0)
        }
    }
}

fn bounds(w: &mut dyn Write, n: u32, known_file: Option<&Path>, json: bool) -> anyhow::Result<u8> {
    let mut known = exact_witnesses();
    if let Some(path) = known_file {
        for record in read_records(path)? {
            let s = record.solution()?;
            if !lattice_cover::is_cover(&s)? {
                bail!("{}: not a cover of the {}-lattice", record.source, s.n());
            }
            let better = known.get(&s.n()).is_none_or(|k| s.len() < k.len());
            if better {
                known.insert(s.n(), s);
            }
        }
    }
    let mut chain = known_chain(n.saturating_sub(1), &known)?;
    for (m, s) in known.into_iter().filter(|&(m, _)| m >= n) {
        chain.insert(m, s);
    }
    let report = bounds_report(n, &chain)?;
    if json {
        writeln!(w, "{}", serde_json::to_string_pretty(&report)?)?;
        return Ok(0);
    }
    let rows: Vec<(String, usize)> = report
        .entries
        .iter()
        .map(|e| (e.method.to_string(), e.bound))
        .collect();
    let width = rows
        .iter()
        .map(|(m, _)| m.len())
        .max()
        .unwrap_or(0)
        .max("method".len());
    let mut out = String::new();
    writeln!(out, "{:<width$}  bound", "method")?;
    for (method, bound) in &rows {
        writeln!(out, "{method:<width$}  {bound:>5}")?;
    }
    writeln!(out, "best: {} = {}", report.best.method, report.best.bound)?;
    if let Some(w) = &report.best.witness {
        writeln!(
            out,
            "{}",
            format_solution_line(&SolutionRecord::from_solution(
                w,
                report.best.method.to_string()
            ))
        )?;
    }
    write!(w, "{out}")?;
    Ok(0)
}

fn verify(w: &mut dyn Write, path: &Path, json: bool) -> anyhow::Result<u8> {
    let report = verify_corpus(&read_records(path)?);
    if json {
        writeln!(w, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        for r in &report.records {
            let status = if r.pass { "PASS" } else { "FAIL" };
            let mut line = format!(
                "{status} n={} claimed={} size={} cover={} lines={} orbit={} [{}]",
                r.n, r.t_claimed, r.actual_size, r.is_cover, r.line_count, r.orbit_size, r.source
            );
            if let Some(e) = &r.error {
                line.push_str(&format!(" error: {e}"));
            }
            writeln!(w, "{line}")?;
        }
        writeln!(w, "{} pass / {} fail", report.passed, report.failed)?;
    }
    Ok(if report.all_pass() {
        0
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn render(
    w: &mut dyn Write,
    path: &Path,
    out: &Path,
    all_lines: bool,
    scale: f64,
) -> anyhow::Result<u8> {
    if !(scale.is_finite() && scale > 0.0) {
        bail!("scale must be positive");
    }
    let records = read_records(path)?;
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let options = RenderOptions {
        show_all_lines: all_lines,
        scale,
    };
    for (i, record) in records.iter().enumerate() {
        let s = record.solution()?;
        let file = out.join(format!("{:03}_n{}_t{}.svg", i + 1, s.n(), s.len()));
        fs::write(&file, render_svg(&s, &options))
            .with_context(|| format!("writing {}", file.display()))?;
        writeln!(w, "{}", file.display())?;
    }
    Ok(0)
}

fn classify_file(w: &mut dyn Write, path: &Path) -> anyhow::Result<u8> {
    let mut by_n: BTreeMap<u32, Vec<Solution>> = BTreeMap::new();
    for record in read_records(path)? {
        let s = record.solution()?;
        by_n.entry(s.n()).or_default().push(s);
    }
    for (n, solutions) in by_n {
        let classes = classify(&solutions)?;
        writeln!(
            w,
            "n={n}: {} records, {} classes",
            solutions.len(),
            classes.len()
        )?;
        for c in classes {
            let source = format!("orbit {}", c.orbit_size);
            writeln!(
                w,
                "{}",
                format_solution_line(&SolutionRecord::from_solution(&c.representative, source))
            )?;
        }
    }
    Ok(0)
}
