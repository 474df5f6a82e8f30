use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};

use symlam::chords::{self, Chord, LengthClass};
use symlam::comajors::verify_cscl;
use symlam::format::{read_any, write_cscl, write_leafset, LaminationFile};
use symlam::gaps::{compute_gaps, faces_of};
use symlam::pullback::l16_index;
use symlam::{
    build_l16, build_pullback, enumerate_comajors, is_legal_pair, render_svg, verify_prelamination, Angle, Bounds,
    Mode, RenderStyle, SymmetricPair,
};

#[derive(Parser)]
#[command(name = "symlam", version, about = "Symmetric cubic laminations of the circle")]
struct Cli {
    /// Worker threads for pullback generations and enumeration.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Preperiod, period and forward orbit of an angle under tripling.
    Orbit { angle: String },
    /// Length class and length of a chord.
    Classify { chord: String },
    /// The two siblings of a chord and the type of their collection.
    Siblings { chord: String },
    /// Decides whether a chord and its rotation form a legal pair.
    Legal { chord: String },
    /// Builds the pullback lamination of a legal seed chord or point.
    Pullback {
        seed: String,
        #[arg(long)]
        depth: usize,
        /// Output file, or `-` for standard output.
        #[arg(long)]
        out: PathBuf,
    },
    /// Builds one of the two laminations with comajors of length 1/6.
    L16 {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Enumerates comajors up to the given period and preperiod.
    Enumerate {
        #[arg(long)]
        max_period: usize,
        #[arg(long)]
        max_preperiod: usize,
        #[arg(long)]
        include_degenerate: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Checks a leaf file or comajor file against its structural properties.
    Verify { path: PathBuf },
    /// Lists the faces of a leaf file, one per line.
    Gaps { path: PathBuf },
    /// Draws a leaf file or comajor file as SVG.
    Render {
        path: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, conflicts_with = "geodesic")]
        straight: bool,
        #[arg(long)]
        geodesic: bool,
        #[arg(long, default_value_t = 800)]
        size: u32,
        /// Shade collapsing quadrilaterals and critical polygons.
        #[arg(long)]
        shade_critical: bool,
    },
}

/// Exit status 1: a negative verdict, not an error.
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;

/// Writes to standard output; a reader closing the pipe early is not an error.
fn emit(text: &str) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn write_out(path: &Path, text: &str) -> anyhow::Result<()> {
    if path == Path::new("-") {
        emit(text)
    } else {
        fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
    }
}

fn read_file(path: &Path) -> anyhow::Result<LaminationFile> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    read_any(&text).with_context(|| path.display().to_string())
}

fn legal(token: &str) -> anyhow::Result<u8> {
    let c = Chord::parse(token)?;
    if c.is_degenerate() {
        println!("legal (degenerate)");
        return Ok(0);
    }
    if l16_index(&c).is_some() {
        println!("legal (l16 special)");
        return Ok(0);
    }
    if c.length_class() != LengthClass::Short {
        println!("illegal: {c} has length {}, not below 1/6", c.length());
        return Ok(NEGATIVE);
    }
    let v = is_legal_pair(&SymmetricPair::new(c))?;
    match v.violation {
        None => {
            println!("legal");
            Ok(0)
        }
        Some(w) => {
            println!("illegal: {w}");
            Ok(NEGATIVE)
        }
    }
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Orbit { angle } => {
            let info = symlam::circle::orbit_info(&Angle::parse(&angle)?);
            let orbit: Vec<String> = info.orbit.iter().map(Angle::to_string).collect();
            println!("preperiod={} period={} orbit={}", info.preperiod, info.period, orbit.join(","));
        }
        Command::Classify { chord } => {
            let c = Chord::parse(&chord)?;
            println!("{} {}", c.length_class(), c.length());
        }
        Command::Siblings { chord } => {
            let c = Chord::parse(&chord)?;
            let (s1, s2) = chords::siblings(&c)?;
            println!("{s1} {s2} type={}", chords::collection_type(&c)?);
        }
        Command::Legal { chord } => return legal(&chord),
        Command::Pullback { seed, depth, out } => {
            let ls = build_pullback(&SymmetricPair::new(Chord::parse(&seed)?), depth)?;
            write_out(&out, &write_leafset(&ls))?;
        }
        Command::L16 { which, depth, out } => {
            write_out(&out, &write_leafset(&build_l16(which, depth)?))?;
        }
        Command::Enumerate {
            max_period,
            max_preperiod,
            include_degenerate,
            out,
        } => {
            let mut bounds = Bounds::new(max_period, max_preperiod);
            bounds.include_degenerate = include_degenerate;
            write_out(&out, &write_cscl(&enumerate_comajors(bounds)?))?;
        }
        Command::Verify { path } => {
            let ok = match read_file(&path)? {
                LaminationFile::Leaves(ls) => {
                    let report = verify_prelamination(&ls);
                    print!("{report}");
                    report.is_ok()
                }
                LaminationFile::Comajors(approx) => {
                    let report = verify_cscl(&approx);
                    print!("{report}");
                    report.is_ok()
                }
            };
            return Ok(if ok { 0 } else { NEGATIVE });
        }
        Command::Gaps { path } => {
            let gaps = match read_file(&path)? {
                LaminationFile::Leaves(ls) => compute_gaps(&ls),
                LaminationFile::Comajors(approx) => {
                    let chords: Vec<&Chord> = approx.chords().filter(|c| !c.is_degenerate()).collect();
                    if let Some((x, y)) = chords::find_crossing(chords.iter().copied()) {
                        return Err(anyhow!("{x} and {y} cross"));
                    }
                    faces_of(chords)
                }
            };
            let mut text = String::new();
            for g in gaps {
                let _ = writeln!(text, "{g}");
            }
            emit(&text)?;
        }
        Command::Render {
            path,
            out,
            straight,
            geodesic: _,
            size,
            shade_critical,
        } => {
            let chords = match read_file(&path)? {
                LaminationFile::Leaves(ls) => ls.to_vec(),
                LaminationFile::Comajors(approx) => approx.chords().cloned().collect(),
            };
            let style = RenderStyle {
                mode: if straight { Mode::StraightChord } else { Mode::HyperbolicGeodesic },
                size_px: size,
                shade_critical,
                ..RenderStyle::default()
            };
            write_out(&out, &render_svg(&chords, &style)?)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: --jobs {n}: {e}");
            return ExitCode::from(USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}
