//! The `lyons` command line.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails or
//! a computation errors, 2 on usage errors.

use crate::apartment::{Apartment, Configuration, OrientedLine};
use crate::generators::{star_image_table, GeneratorBundle};
use crate::gf5::{write_matrix, Gf5Matrix};
use crate::verifier::{closure_enumerate, Context, Suite, VerificationReport};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lyons", version, about = "Build and check the 111-dimensional GF(5) representation of Ly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the base matrices, ξ, the 36 root elements and the apartment figure.
    Build {
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a check suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        /// Check the hexagon relations at all 36 lines.
        #[arg(long)]
        all_lines: bool,
        /// Also write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the star, hexagon or quartet of a line.
    Apartment {
        kind: ConfigKind,
        #[arg(value_parser = parse_line)]
        line: OrientedLine,
    },
    /// Enumerate a group and print its order.
    Enumerate {
        #[arg(long)]
        group: GroupName,
        #[arg(long)]
        cap: usize,
    },
    /// Run every check, hexagon relations at all lines included, and write the JSON report.
    Report {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConfigKind {
    Star,
    Hexagon,
    Quartet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupName {
    #[value(name = "K")]
    K,
    #[value(name = "T")]
    T,
    #[value(name = "N")]
    N,
    #[value(name = "quartet")]
    Quartet,
    #[value(name = "sl2")]
    Sl2,
    #[value(name = "S")]
    S,
    #[value(name = "sl3star")]
    Sl3Star,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_line(s: &str) -> Result<OrientedLine, String> {
    s.parse().map_err(|e: crate::apartment::ApartmentError| e.to_string())
}

/// Parses `args` (program name first) and runs the command, writing to `out`
/// and `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, Box<dyn std::error::Error>> {
    match cmd {
        Command::Build { out: dir } => {
            let b = GeneratorBundle::build()?;
            let files = build(&b, &dir)?;
            writeln!(out, "wrote {} files to {}", files.len(), dir.display())?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, all_lines, json } => {
            let ctx = Context::new()?.with_all_lines(all_lines);
            let report = suite.run(&ctx);
            print_report(&report, out)?;
            if let Some(p) = json {
                std::fs::write(p, report.to_json())?;
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Apartment { kind, line } => {
            let c = Configuration::of(&line);
            let lines: Vec<OrientedLine> = match kind {
                ConfigKind::Star => c.star.to_vec(),
                ConfigKind::Hexagon => c.hexagon.to_vec(),
                ConfigKind::Quartet => {
                    let q = c.quartet();
                    vec![q.l1, q.m1, q.l6, q.m6]
                }
            };
            let names: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
            writeln!(out, "{}", names.join(", "))?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { group, cap } => {
            let order = enumerate(group, cap)?;
            writeln!(out, "{order}")?;
            Ok(EXIT_OK)
        }
        Command::Report { out: path } => {
            let ctx = Context::new()?.with_all_lines(true);
            let report = Suite::All.run(&ctx);
            std::fs::write(&path, report.to_json())?;
            let failed = report.failures().count();
            writeln!(out, "{} checks, {} failed; report written to {}", report.checks.len(), failed, path.display())?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

fn print_report(r: &VerificationReport, out: &mut dyn Write) -> std::io::Result<()> {
    for c in &r.checks {
        if c.passed() {
            writeln!(out, "PASS {}", c.name)?;
        } else {
            writeln!(out, "FAIL {} {}", c.name, c.witness)?;
        }
    }
    let failed = r.failures().count();
    writeln!(out, "suite {}: {} checks, {} failed, {} ms", r.suite, r.checks.len(), failed, r.elapsed_ms)
}

/// Writes `alpha.mat`, `beta.mat`, `gamma.mat`, `eta.mat`, `f.mat`, `xi.mat`,
/// `root_<line>.mat` for the 36 lines and `apartment.json`. Returns the paths.
pub fn build(b: &GeneratorBundle, dir: &Path) -> Result<Vec<PathBuf>, Box<dyn std::error::Error>> {
    std::fs::create_dir_all(dir)?;
    let mut files = Vec::new();
    let mut put = |name: String, m: &Gf5Matrix| -> Result<(), Box<dyn std::error::Error>> {
        let p = dir.join(name);
        write_matrix(m, &p)?;
        files.push(p);
        Ok(())
    };
    for (name, m) in [("alpha", &b.alpha), ("beta", &b.beta), ("gamma", &b.gamma), ("eta", &b.eta), ("f", &b.f), ("xi", &b.xi)]
    {
        put(format!("{name}.mat"), m)?;
    }
    for (l, m) in &b.roots {
        put(format!("root_{}.mat", l.slug()), m)?;
    }
    let fig = dir.join("apartment.json");
    std::fs::write(&fig, serde_json::to_string_pretty(&Apartment::build().figure())?)?;
    files.push(fig);
    Ok(files)
}

/// Order of one of the named groups, enumerated with the given cap.
pub fn enumerate(group: GroupName, cap: usize) -> Result<usize, Box<dyn std::error::Error>> {
    if group == GroupName::Sl3Star {
        let imgs = star_image_table();
        return Ok(closure_enumerate(&imgs.iter().collect::<Vec<_>>(), cap)?.order());
    }
    let b = GeneratorBundle::build()?;
    let base = crate::apartment::base_line();
    let gens: Vec<Gf5Matrix> = match group {
        GroupName::K => vec![b.alpha.clone(), b.beta.clone(), b.gamma.clone()],
        GroupName::T => b.torus_words().to_vec(),
        GroupName::N => b.n_generators().to_vec(),
        GroupName::Quartet => b.derived(&base).h.to_vec(),
        GroupName::Sl2 => {
            let h = b.hex(&base);
            vec![h.big(1).clone(), h.big(6).clone()]
        }
        GroupName::S => b.sylow5()?.generators,
        GroupName::Sl3Star => unreachable!("handled above"),
    };
    Ok(closure_enumerate(&gens.iter().collect::<Vec<_>>(), cap)?.order())
}
