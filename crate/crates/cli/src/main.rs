//! `bottomless`: color, verify, construct, plot and play the adversary.
//!
//! Exit codes: 0 on success, 1 when verification finds violations, 2 on
//! usage, parse or self-check errors.

mod error;
mod external;
mod literal;
mod records;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bottomless::constructions::{
    adversary, build_ck_witness, build_lower_bound_set, run_adversary, suggested_params, OnlineStrategy,
    TreeSystem,
};
use bottomless::geometry::{
    color_bottomless, color_bottomless_online, sweep_reduce, BottomlessRect, PlanarPointSet, Point,
};
use bottomless::verifier::{verify_rectangles, WindowMode};
use bottomless::{Color, Rational, TiePolicy};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{CliError, CliResult};
use crate::external::ExternalStrategy;
use crate::literal::parse_rational;
use crate::records::{point_line, read_coloring, read_points, read_segments, segment_line, Output, PointRecord};

#[derive(Parser)]
#[command(name = "bottomless", version, about = "Polychromatic colorings for bottomless rectangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a point file so that large bottomless rectangles see every color.
    Color(ColorArgs),
    /// Check a coloring against every bottomless rectangle.
    Verify(VerifyArgs),
    /// Generate a construction; its self-check must pass.
    #[command(subcommand)]
    Construct(Construct),
    /// Draw points or segments as SVG.
    Plot(PlotArgs),
    /// Run the run-building adversary against an online 2-coloring.
    Adversary(AdversaryArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorMode {
    /// k colors; every rectangle with at least 3k-2 points sees all of them.
    Semi,
    /// 2k-1 colors; every rectangle with at most k points has distinct colors.
    Online,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    /// Every window of w points contains all k colors.
    Present,
    /// No window of at most w points repeats a color.
    Norepeat,
}

#[derive(Args)]
struct ColorArgs {
    input: PathBuf,
    #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,
    #[arg(long, value_enum, default_value = "semi")]
    mode: ColorMode,
    /// Break coordinate ties by an order-preserving perturbation.
    #[arg(long)]
    normalize: bool,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    points: PathBuf,
    coloring: PathBuf,
    #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,
    /// Window size; defaults to 3k-2 (present) or k (norepeat).
    #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
    w: Option<u64>,
    #[arg(long, value_enum, default_value = "present")]
    mode: CheckMode,
    #[arg(long)]
    normalize: bool,
}

#[derive(Subcommand)]
enum Construct {
    /// Segments realising the p-regular tree of depth p (`id,x_lo,x_hi,y`).
    Tree {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=4))]
        p: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The point set P(n, a) with left, bottom and right parts.
    Lowerbound {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, conflicts_with = "k", required_unless_present = "k")]
        a: Option<u64>,
        /// Take a = floor(0.655 k).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The 2k-1 points that force 2k-1 colors.
    Ckwitness {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct PlotArgs {
    input: PathBuf,
    /// Coloring file for the input records.
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// Read the input as a segment file.
    #[arg(long)]
    segments: bool,
    /// Shade the bottomless rectangle x in [a, b], y <= c. Repeatable.
    #[arg(long, value_name = "A,B,C", allow_hyphen_values = true)]
    rect: Vec<String>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AdversaryArgs {
    /// always-red, alternate or balance-greedy.
    #[arg(long, conflicts_with = "script", required_unless_present = "script")]
    strategy: Option<String>,
    /// Shell command speaking the line protocol.
    #[arg(long)]
    script: Option<String>,
    #[arg(long)]
    steps: usize,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Color(a) => color(a),
        Command::Verify(a) => verify(a),
        Command::Construct(c) => construct(c),
        Command::Plot(a) => plot(a),
        Command::Adversary(a) => run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Violations(_)) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn planar(records: &[PointRecord], normalize: bool, path: &Path) -> CliResult<PlanarPointSet> {
    let points: Vec<Point> = records.iter().map(PointRecord::point).collect();
    let policy = if normalize { TiePolicy::Perturb } else { TiePolicy::Reject };
    PlanarPointSet::normalized(points, policy)
        .map_err(|e| CliError::Usage(format!("{}: {e} (use --normalize to break ties)", path.display())))
}

fn color(a: ColorArgs) -> CliResult<()> {
    let records = read_points(&a.input)?;
    let set = planar(&records, a.normalize, &a.input)?;
    let colors = match a.mode {
        ColorMode::Semi => color_bottomless(&set, a.k)?,
        ColorMode::Online => color_bottomless_online(&set, a.k)?,
    };
    let mut out = Output::new(a.out);
    for (r, c) in records.iter().zip(&colors) {
        out.line(format!("{},{c}", point_line(&r.id, &r.point())));
    }
    out.finish()
}

fn verify(a: VerifyArgs) -> CliResult<()> {
    let records = read_points(&a.points)?;
    let set = planar(&records, a.normalize, &a.points)?;
    let ids: Vec<String> = records.iter().map(|r| r.id.clone()).collect();
    let coords: Vec<Vec<Rational>> = records.iter().map(|r| vec![r.x.clone(), r.y.clone()]).collect();
    let coloring = read_coloring(&a.coloring, &ids, &coords)?;
    let (mode, default_w) = match a.mode {
        CheckMode::Present => (WindowMode::AllColorsPresent, 3 * a.k as u64 - 2),
        CheckMode::Norepeat => (WindowMode::NoRepeat, a.k as u64),
    };
    let w = a.w.unwrap_or(default_w) as usize;
    if let Some(c) = coloring.iter().find(|c| mode == WindowMode::AllColorsPresent && c.id() > a.k) {
        return Err(CliError::Usage(format!("color {c} exceeds k = {}", a.k)));
    }
    let violations = verify_rectangles(&set, &coloring, w, mode, a.k)?;
    let reduced = sweep_reduce(&set)?;
    println!("violations: {}", violations.len());
    for v in violations.iter().take(10) {
        let present = reduced.snapshot_indices(&v.time);
        let window: Vec<&str> = present[v.start..v.end].iter().map(|&i| ids[i].as_str()).collect();
        println!("{v} ids {}", window.join(" "));
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violations(violations.len()))
    }
}

fn write_points(out: Option<PathBuf>, points: impl IntoIterator<Item = (String, Point)>) -> CliResult<()> {
    let mut o = Output::new(out);
    for (id, p) in points {
        o.line(point_line(&id, &p));
    }
    o.finish()
}

fn construct(c: Construct) -> CliResult<()> {
    match c {
        Construct::Tree { p, out } => {
            let ts = TreeSystem::build(p as usize)?;
            let mut o = Output::new(out);
            for (i, s) in ts.segments().iter().enumerate() {
                o.line(segment_line(&i.to_string(), s));
            }
            o.finish()?;
            eprintln!(
                "self-check passed: p={p}, {} segments, {} member sets, scale {}",
                ts.len(),
                ts.members().len(),
                ts.scale()
            );
        }
        Construct::Lowerbound { n, a, k, out } => {
            let a = match (a, k) {
                (Some(a), _) => a as usize,
                (None, Some(k)) => {
                    let params = suggested_params(k)?;
                    eprintln!("k={k}: a={}, b={}", params.a, params.b);
                    if params.vacuous {
                        eprintln!("warning: the bound behind these parameters needs k >= 100");
                    }
                    params.a as usize
                }
                (None, None) => unreachable!("clap requires one of --a and --k"),
            };
            let set = build_lower_bound_set(n as usize, a)?;
            let ids = (1..=set.n)
                .map(|i| format!("L{i}"))
                .chain((1..=set.a).map(|i| format!("B{i}")))
                .chain((1..=set.n).map(|i| format!("R{i}")));
            write_points(out, ids.zip(set.points()))?;
            eprintln!("self-check passed: n={}, a={}, {} points", set.n, set.a, set.len());
        }
        Construct::Ckwitness { k, out } => {
            let set = build_ck_witness(k)?;
            write_points(out, (0..).map(|i: usize| i.to_string()).zip(set.points().iter().cloned()))?;
            eprintln!("self-check passed: k={k}, {} points", set.len());
        }
    }
    Ok(())
}

fn parse_rect(text: &str) -> CliResult<BottomlessRect> {
    let parts: Vec<&str> = text.split(',').collect();
    let bad = |m: String| CliError::Usage(format!("--rect {text:?}: {m}"));
    if parts.len() != 3 {
        return Err(bad("expected a,b,c".into()));
    }
    let v: Vec<Rational> = parts.iter().map(|p| parse_rational(p)).collect::<Result<_, _>>().map_err(bad)?;
    BottomlessRect::new(v[0].clone(), v[1].clone(), v[2].clone()).ok_or_else(|| bad("a exceeds b".into()))
}

fn plot(a: PlotArgs) -> CliResult<()> {
    let rects: Vec<BottomlessRect> = a.rect.iter().map(|r| parse_rect(r)).collect::<CliResult<_>>()?;
    let (ids, coords, points, segments) = if a.segments {
        let segs = read_segments(&a.input)?;
        let coords: Vec<Vec<Rational>> = segs
            .iter()
            .map(|s| vec![s.segment.x_lo.clone(), s.segment.x_hi.clone(), s.segment.y.clone()])
            .collect();
        let ids = segs.iter().map(|s| s.id.clone()).collect::<Vec<_>>();
        (ids, coords, Vec::new(), segs.into_iter().map(|s| s.segment).collect())
    } else {
        let pts = read_points(&a.input)?;
        let coords: Vec<Vec<Rational>> = pts.iter().map(|p| vec![p.x.clone(), p.y.clone()]).collect();
        let ids = pts.iter().map(|p| p.id.clone()).collect::<Vec<_>>();
        (ids, coords, pts.iter().map(PointRecord::point).collect(), Vec::new())
    };
    let coloring: Option<Vec<Color>> = match &a.coloring {
        Some(path) => Some(read_coloring(path, &ids, &coords)?),
        None => None,
    };
    if let Some(c) = coloring.as_ref().and_then(|c| c.iter().max()) {
        if c.index() >= svg::max_colors() {
            return Err(CliError::Usage(format!(
                "color {c} cannot be painted; at most {} colors are supported",
                svg::max_colors()
            )));
        }
    }
    let items: Vec<svg::Item> = points
        .iter()
        .map(svg::Item::Point)
        .chain(segments.iter().map(svg::Item::Segment))
        .collect();
    let mut out = Output::new(a.out);
    out.raw(&svg::render(&items, coloring.as_deref(), &rects));
    out.finish()
}

fn run(a: AdversaryArgs) -> CliResult<()> {
    let mut strategy: Box<dyn OnlineStrategy> = match (&a.strategy, &a.script) {
        (Some(name), _) => adversary::builtin(name).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown strategy {name:?}; built-ins are {}",
                adversary::BUILTIN_STRATEGIES.join(", ")
            ))
        })?,
        (None, Some(cmd)) => Box::new(ExternalStrategy::spawn(cmd).map_err(|e| CliError::io(cmd, e))?),
        (None, None) => unreachable!("clap requires --strategy or --script"),
    };
    let report = run_adversary(strategy.as_mut(), a.steps)?;
    let mut out = Output::new(a.out);
    out.line("step,position,color");
    for s in &report.transcript {
        out.line(format!("{},{},{}", s.step, s.position, s.color));
    }
    out.line(format!(
        "# strategy={} steps={} max_run={} bound={}",
        report.strategy,
        a.steps,
        report.max_run,
        a.steps.div_ceil(2)
    ));
    out.finish()
}
