//! Command-line surface: generate the skew matrix families, resolve and
//! classify ideals, trim generators, produce seeded instances, and run
//! the verification suites.
//!
//! Exit codes: 0 success, 1 mathematical assertion failure (a finding),
//! 2 usage or input error.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use trimres::complex::ChainComplex;
use trimres::error::Error;
use trimres::fileio;
use trimres::field::{Field, DEFAULT_PRIME};
use trimres::ideal::Ideal;
use trimres::invsys::{random_instance, tipping_point};
use trimres::pfaffian::v_matrix;
use trimres::realize::realize;
use trimres::resolution::{minimal_free_resolution, resolution_from_gens, DEFAULT_CAP};
use trimres::tor::classify;
use trimres::trimming::TrimmingData;
use trimres::verify::{run_suite, SuiteOptions};

#[derive(Parser)]
#[command(
    name = "trimres",
    about = "Exact resolutions, inverse systems and Tor algebra classification over k[x,y,z]",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Args)]
struct FieldArg {
    /// Field characteristic (a prime, or 0 for the rationals).
    #[arg(long = "char", default_value_t = DEFAULT_PRIME)]
    characteristic: u64,
}

impl FieldArg {
    fn field(&self) -> Result<Field, Error> {
        fileio::field_from_char(self.characteristic)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a member of the skew matrix family and its Pfaffian ideal.
    GenV {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        field: FieldArg,
        /// Write the Pfaffian ideal to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the ideal of signed submaximal Pfaffians of a family member.
    Pfaffians {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimal free resolution of an Artinian ideal: Betti table and
    /// optionally the differentials.
    Resolve {
        ideal: PathBuf,
        /// Also print the differential matrices.
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cap for the Artinian degree scan.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Betti table of the minimal free resolution.
    Betti {
        ideal: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Trim generators: replace the chosen minimal generators g by a·g.
    Trim {
        ideal: PathBuf,
        /// Comma-separated 0-based indices into the minimal generator
        /// list (ordered by degree, then input order).
        #[arg(long, value_delimiter = ',')]
        cut: Vec<usize>,
        /// Scaling ideal files, one per cut index (default: the
        /// irrelevant ideal for each).
        #[arg(long, value_delimiter = ',')]
        a: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Seeded random compressed instance with socle k(-s)^ell + k(-2s+1).
    Instance {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        field: FieldArg,
        /// Write the instance ideal here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the enclosing Gorenstein ideal here.
        #[arg(long)]
        out_gorenstein: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Tor algebra diagnostics and the class-G verdict.
    Classify {
        ideal: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Construct an ideal of class G(r) with type >= n and verify it.
    Realize {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a named verification suite: tipping, compressed, genset,
    /// trim-resolution, gortype, tor-bounds, pfaffian-tables, or
    /// realizability.
    Verify {
        suite: String,
        /// Socle parameter range, e.g. `3..5`, `4`, or `3,5`.
        #[arg(long, default_value = "3..5")]
        s: String,
        /// Multiplicity range, e.g. `1..4` or `1..s+1`.
        #[arg(long, default_value = "1..4")]
        ell: String,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        field: FieldArg,
        /// Print per-case lines, not just the verdict.
        #[arg(long)]
        verbose: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err);
            match err {
                Error::CheckFailed(_) | Error::InstanceValidation(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn emit_ideal(ideal: &Ideal, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => fileio::write_ideal_file(path, ideal),
        None => {
            print!("{}", fileio::render_ideal(ideal));
            Ok(())
        }
    }
}

fn print_betti(complex: &ChainComplex, format: Format) {
    let table = complex.betti_table();
    match format {
        Format::Text => print!("{}", table),
        Format::Machine => {
            for line in table.machine_lines() {
                println!("{}", line);
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::GenV { m, j, field, out } => {
            let f = field.field()?;
            let v = v_matrix(f, m, j)?;
            print!("{}", fileio::render_matrix(&v.entries));
            let ideal = v.pfaffian_ideal()?;
            emit_ideal(&ideal, &out)?;
            Ok(())
        }
        Command::Pfaffians { m, j, field, out } => {
            let f = field.field()?;
            let ideal = v_matrix(f, m, j)?.pfaffian_ideal()?;
            emit_ideal(&ideal, &out)
        }
        Command::Resolve {
            ideal,
            full,
            format,
            bound,
        } => {
            let i = fileio::read_ideal_file(&ideal)?;
            let res = minimal_free_resolution(&i, bound.unwrap_or(DEFAULT_CAP))?;
            print_betti(&res, format);
            if full {
                for (k, d) in res.diffs.iter().enumerate() {
                    println!("d_{}:", k + 1);
                    print!("{}", fileio::render_matrix(&d.entries));
                }
            }
            Ok(())
        }
        Command::Betti {
            ideal,
            format,
            bound,
        } => {
            let i = fileio::read_ideal_file(&ideal)?;
            let res = minimal_free_resolution(&i, bound.unwrap_or(DEFAULT_CAP))?;
            print_betti(&res, format);
            Ok(())
        }
        Command::Trim {
            ideal,
            cut,
            a,
            out,
            format,
            bound,
        } => {
            let i = fileio::read_ideal_file(&ideal)?;
            let cap = bound.unwrap_or(DEFAULT_CAP);
            let gens = i.minimal_generators();
            let scalings: Vec<Ideal> = if a.is_empty() {
                vec![Ideal::irrelevant(i.field); cut.len()]
            } else {
                if a.len() != cut.len() {
                    return Err(Error::Invalid("need one --a file per cut index".into()));
                }
                a.iter()
                    .map(|p| fileio::read_ideal_file(p))
                    .collect::<Result<_, _>>()?
            };
            let scaling_resolutions: Vec<ChainComplex> = scalings
                .iter()
                .map(|s| minimal_free_resolution(s, cap))
                .collect::<Result<_, _>>()?;
            let resolution = resolution_from_gens(i.field, &gens, cap)?;
            let data = TrimmingData::new(&resolution, &cut, scalings, scaling_resolutions)?;
            let trimmed = data.trimmed_ideal();
            emit_ideal(&trimmed, &out)?;
            let formula = data.formula_betti()?;
            let cone = data.trimming_complex()?.minimalized();
            match format {
                Format::Text => {
                    println!("cone Betti table:");
                    print_betti(&cone, format);
                    println!("formula totals: {:?}", formula);
                }
                Format::Machine => {
                    print_betti(&cone, format);
                    let strs: Vec<String> = formula.iter().map(|v| v.to_string()).collect();
                    println!("formula {}", strs.join(" "));
                }
            }
            if cone.betti_table().totals() != formula {
                return Err(Error::CheckFailed(
                    "cone and formula Betti numbers disagree".into(),
                ));
            }
            println!("agreement: ok");
            Ok(())
        }
        Command::Instance {
            s,
            ell,
            seed,
            field,
            out,
            out_gorenstein,
            format,
        } => {
            let f = field.field()?;
            let inst = random_instance(f, s, ell, seed)?;
            let tp = tipping_point(&inst.system);
            match format {
                Format::Text => {
                    print!("{}", inst.profile);
                    println!("tipping point: {}", tp);
                }
                Format::Machine => {
                    let hf: Vec<String> =
                        inst.profile.hilbert.iter().map(|h| h.to_string()).collect();
                    println!("hilbert {}", hf.join(" "));
                    for (d, c) in &inst.profile.socle {
                        println!("socle {} {}", d, c);
                    }
                    println!("type {}", inst.profile.ring_type);
                    println!("compressed {}", inst.profile.compressed);
                    println!("tipping {}", tp);
                    println!("s {}", s);
                    println!("ell {}", ell);
                }
            }
            if out.is_none() && out_gorenstein.is_none() {
                print!("{}", fileio::render_ideal(&inst.ideal));
            }
            if let Some(path) = out {
                fileio::write_ideal_file(&path, &inst.ideal)?;
            }
            if let Some(path) = out_gorenstein {
                fileio::write_ideal_file(&path, &inst.gorenstein)?;
            }
            Ok(())
        }
        Command::Classify {
            ideal,
            format,
            bound,
        } => {
            let i = fileio::read_ideal_file(&ideal)?;
            let report = classify(&i, bound.unwrap_or(DEFAULT_CAP))?;
            match format {
                Format::Text => print!("{}", report),
                Format::Machine => {
                    for line in report.lines() {
                        println!("{}", line);
                    }
                }
            }
            Ok(())
        }
        Command::Realize {
            r,
            n,
            field,
            out,
            format,
        } => {
            let f = field.field()?;
            let outcome = realize(f, r, n)?;
            match format {
                Format::Text => {
                    println!(
                        "case: {} (m = {})",
                        if outcome.even_case { "even" } else { "odd" },
                        outcome.m
                    );
                    print!("{}", outcome.betti);
                    print!("{}", outcome.report);
                }
                Format::Machine => {
                    for line in outcome.betti.machine_lines() {
                        println!("{}", line);
                    }
                    for line in outcome.report.lines() {
                        println!("{}", line);
                    }
                }
            }
            emit_ideal(&outcome.ideal, &out)?;
            Ok(())
        }
        Command::Verify {
            suite,
            s,
            ell,
            trials,
            seed,
            field,
            verbose,
        } => {
            let f = field.field()?;
            let s_values = parse_s_range(&s)?;
            let ell_cap = parse_ell_cap(&ell, s_values.iter().copied().max().unwrap_or(3))?;
            let opts = SuiteOptions {
                field: f,
                seed,
                s_values,
                ell_cap,
                trials,
            };
            let lines = run_suite(&suite, &opts)?;
            if verbose {
                for line in &lines {
                    println!("{}", line);
                }
            }
            println!("suite {}: PASS ({} cases)", suite, lines.len());
            Ok(())
        }
    }
}

fn parse_s_range(spec: &str) -> Result<Vec<usize>, Error> {
    let spec = spec.trim();
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: usize = lo
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad range `{}`", spec)))?;
        let hi: usize = hi
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad range `{}`", spec)))?;
        if hi < lo {
            return Err(Error::Invalid(format!("empty range `{}`", spec)));
        }
        return Ok((lo..=hi).collect());
    }
    spec.split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("bad value `{}`", tok)))
        })
        .collect()
}

fn parse_ell_cap(spec: &str, max_s: usize) -> Result<usize, Error> {
    let spec = spec.trim();
    if let Some((_, hi)) = spec.split_once("..") {
        let hi = hi.trim();
        if hi == "s+1" {
            return Ok(max_s + 1);
        }
        return hi
            .parse()
            .map_err(|_| Error::Invalid(format!("bad range `{}`", spec)));
    }
    spec.parse()
        .map_err(|_| Error::Invalid(format!("bad value `{}`", spec)))
}
