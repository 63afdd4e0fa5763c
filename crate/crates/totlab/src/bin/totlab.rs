//! Command-line front end: every subcommand is a thin adapter that parses
//! flags, calls one library entry point and prints its result. Exit codes:
//! 0 success, 1 domain/format/validation error, 2 resource error, 3
//! internal-consistency error.

use clap::{Parser, Subcommand, ValueEnum};
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use totlab::error::{Error, Result};
use totlab::zeta::ZETA_CONTRACT;

const VERSION_LINE: &str = concat!("totlab ", env!("CARGO_PKG_VERSION"));

#[derive(Parser)]
#[command(name = "totlab", disable_version_flag = true)]
#[command(about = "Exact summatory-totient computations, zeta zeros, and the explicit formula")]
struct Cli {
    /// Print version and the zeta-engine contract region.
    #[arg(long, short = 'V', global = true)]
    version: bool,

    /// Worker threads (default: machine parallelism). Output bytes do not
    /// depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Fast,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwistedKind {
    /// sum ((x/n))
    Frac,
    /// sum ((x/n))/n
    FracWeighted,
    /// sum mu(n) ((x/n))
    MobiusFrac,
    /// sum mu(n) ((x/n))/n
    MobiusFracWeighted,
    /// sum mu(n) ((x/n))^k
    MobiusMoment,
    /// sum phi(n) ((x/n))
    PhiFrac,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpecialFamily {
    /// zeta(2n)
    EvenPos,
    /// zeta(-2n-1)
    OddNeg,
    /// zeta'(-2n)
    PrimeEvenNeg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sieve phi, mu, d on [lo, hi]; prints segment checksums.
    Sieve {
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
        /// Write per-n CSV (n,phi,mu,d) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact Phi(x) = sum_{n<=x} phi(n).
    PhiSum {
        #[arg(long)]
        x: u64,
        #[arg(long, value_enum, default_value = "fast")]
        route: Route,
        /// JSONL checkpoint file, loaded before and saved after.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Exact Mertens function M(x).
    Mertens {
        #[arg(long)]
        x: u64,
        #[arg(long, value_enum, default_value = "fast")]
        route: Route,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Exact divisor summatory D(x).
    DivisorSum {
        #[arg(long)]
        x: u64,
    },
    /// Exact squarefree count Q(x).
    Squarefree {
        #[arg(long)]
        x: u64,
    },
    /// sum phi(n)/n, exact rational or compensated float.
    PhiOverN {
        #[arg(long)]
        x: u64,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
    },
    /// Fractional-part and Mobius-twisted sums.
    Twisted {
        #[arg(long, value_enum)]
        kind: TwistedKind,
        #[arg(long)]
        x: u64,
        /// Moment order for mobius-moment.
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
    },
    /// Exact five-term decomposition of Phi(x).
    Decompose {
        #[arg(long)]
        x: u64,
    },
    /// Locate critical-line zeros up to t-max.
    ZerosFind {
        #[arg(long, default_value_t = 100.0)]
        t_max: f64,
        /// Write the ordinates to this zeros file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Load and validate a zeros file.
    ZerosLoad {
        #[arg(long)]
        zeros: PathBuf,
    },
    /// Evaluate zeta (or zeta') at a point, or a closed-form special value.
    ZetaEval {
        #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
        re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        im: f64,
        /// Evaluate the derivative instead.
        #[arg(long)]
        derivative: bool,
        /// Closed-form family (with --n) instead of a point evaluation.
        #[arg(long, value_enum)]
        special: Option<SpecialFamily>,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Truncated explicit formula for Phi at non-integer x.
    Explicit {
        #[arg(long)]
        x: f64,
        /// How many embedded (or loaded) zeros to use.
        #[arg(long, default_value_t = 29)]
        zeros_count: usize,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        /// Zeros file overriding the embedded table.
        #[arg(long)]
        zeros: Option<PathBuf>,
    },
    /// Perron line-integral cross-check of Phi(x).
    Perron {
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = 2.5)]
        sigma0: f64,
        #[arg(long, default_value_t = 120.0)]
        t_limit: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
    },
    /// Scan R(x) over [lo, hi]; optionally write the CSV report.
    ErrorScan {
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
        #[arg(long, default_value_t = 1)]
        step: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pointwise error r(n) = phi(n) - 6 pi^-2 (n - 1/2).
    RPoint {
        #[arg(long)]
        n: u64,
    },
    /// Local-jump statistics of phi on [lo, hi].
    JumpStats {
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
    },
    /// Run the invariant suites; exit 0 iff all pass.
    Selftest {
        /// Trimmed ranges, finishes in well under a minute.
        #[arg(long)]
        quick: bool,
        /// Zeros file for the explicit-formula suite.
        #[arg(long)]
        zeros: Option<PathBuf>,
    },
}

/// Checkpoint paths resolve against TOTLAB_CACHE_DIR (default: cwd).
fn cache_path(p: &Path) -> PathBuf {
    if p.is_absolute() {
        return p.to_path_buf();
    }
    match std::env::var_os("TOTLAB_CACHE_DIR") {
        Some(dir) => PathBuf::from(dir).join(p),
        None => p.to_path_buf(),
    }
}

fn load_cache(path: Option<&PathBuf>) -> Result<totlab::SummatoryCache> {
    let mut cache = totlab::SummatoryCache::new();
    if let Some(p) = path {
        let p = cache_path(p);
        if p.exists() {
            cache.read_checkpoints(BufReader::new(File::open(&p)?))?;
        }
    }
    Ok(cache)
}

fn save_cache(cache: &totlab::SummatoryCache, path: Option<&PathBuf>) -> Result<()> {
    if let Some(p) = path {
        let p = cache_path(p);
        let mut w = BufWriter::new(File::create(&p)?);
        cache.write_checkpoints(&mut w)?;
        w.flush()?;
    }
    Ok(())
}

fn load_zero_table(path: Option<&PathBuf>, count: usize) -> Result<Vec<totlab::ZetaZero>> {
    let mut zeros = match path {
        Some(p) => totlab::load_zeros(p)?,
        None => totlab::default_zeros(),
    };
    if count < zeros.len() {
        zeros.truncate(count);
    }
    Ok(zeros)
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Sieve { lo, hi, out } => {
            let t = totlab::sieve_segment(lo, hi)?;
            if let Some(path) = out {
                let mut w = BufWriter::new(File::create(&path)?);
                writeln!(w, "n,phi,mu,d")?;
                for n in lo..=hi {
                    writeln!(w, "{},{},{},{}", n, t.phi(n), t.mu(n), t.d(n))?;
                }
                w.flush()?;
            }
            let phi_sum: u128 = t.phi.iter().map(|&p| p as u128).sum();
            let mu_sum: i64 = t.mu.iter().map(|&m| i64::from(m)).sum();
            let d_sum: u64 = t.dcount.iter().map(|&d| u64::from(d)).sum();
            println!(
                "[{lo},{hi}] entries={} phi_sum={phi_sum} mu_sum={mu_sum} d_sum={d_sum}",
                t.len()
            );
        }
        Cmd::PhiSum {
            x,
            route,
            checkpoint,
        } => match route {
            Route::Brute => println!("{}", totlab::phi_sum_brute(x)?),
            Route::Fast => {
                let mut cache = load_cache(checkpoint.as_ref())?;
                let v = totlab::phi_sum_fast(x, &mut cache)?;
                save_cache(&cache, checkpoint.as_ref())?;
                println!("{v}");
            }
        },
        Cmd::Mertens {
            x,
            route,
            checkpoint,
        } => match route {
            Route::Brute => println!("{}", totlab::mertens_brute(x)?),
            Route::Fast => {
                let mut cache = load_cache(checkpoint.as_ref())?;
                let v = totlab::mertens_fast(x, &mut cache)?;
                save_cache(&cache, checkpoint.as_ref())?;
                println!("{v}");
            }
        },
        Cmd::DivisorSum { x } => println!("{}", totlab::divisor_sum(x)?),
        Cmd::Squarefree { x } => println!("{}", totlab::squarefree_count(x)?),
        Cmd::PhiOverN { x, mode } => match mode {
            Mode::Exact => println!("{}", totlab::phi_over_n_sum_exact(x)?),
            Mode::Float => println!("{}", totlab::phi_over_n_sum_float(x)?),
        },
        Cmd::Twisted { kind, x, k, mode } => {
            let exact = matches!(mode, Mode::Exact);
            match (kind, exact) {
                (TwistedKind::Frac, true) => println!("{}", totlab::frac_part_sum(x)?),
                (TwistedKind::Frac, false) => {
                    println!("{}", totlab::twisted::frac_part_sum_float(x)?)
                }
                (TwistedKind::FracWeighted, _) => {
                    println!("{}", totlab::twisted::frac_part_weighted_sum(x)?)
                }
                (TwistedKind::MobiusFrac, true) => println!("{}", totlab::mobius_frac_sum(x)?),
                (TwistedKind::MobiusFrac, false) => {
                    println!("{}", totlab::twisted::mobius_frac_sum_float(x)?)
                }
                (TwistedKind::MobiusFracWeighted, true) => {
                    println!("{}", totlab::mobius_frac_weighted_sum(x)?)
                }
                (TwistedKind::MobiusFracWeighted, false) => {
                    println!("{}", totlab::twisted::mobius_frac_weighted_sum_float(x)?)
                }
                (TwistedKind::MobiusMoment, _) => {
                    println!("{}", totlab::mobius_frac_moment(x, k)?)
                }
                (TwistedKind::PhiFrac, _) => println!("{}", totlab::phi_frac_sum(x)?),
            }
        }
        Cmd::Decompose { x } => {
            let d = totlab::decompose_phi_sum(x)?;
            println!("x        = {x}");
            println!("main     = {}", d.term_main);
            println!("half     = {}", d.term_half);
            println!("weighted = {}", d.term_weighted);
            println!("frac     = {}", d.term_frac);
            println!("square   = {}", d.term_sq);
            println!("total    = {}", d.total);
        }
        Cmd::ZerosFind { t_max, emit } => {
            let zeros = totlab::find_zeros(t_max)?;
            if let Some(path) = emit {
                let mut w = BufWriter::new(File::create(&path)?);
                totlab::write_zeros(&zeros, &mut w)?;
                w.flush()?;
            }
            println!(
                "{} zeros below {t_max}; first = {:.9}",
                zeros.len(),
                zeros.first().map(|z| z.t).unwrap_or(f64::NAN)
            );
        }
        Cmd::ZerosLoad { zeros } => {
            let zs = totlab::load_zeros(&zeros)?;
            println!(
                "{} zeros loaded and verified; range [{:.6}, {:.6}]",
                zs.len(),
                zs.first().map(|z| z.t).unwrap_or(f64::NAN),
                zs.last().map(|z| z.t).unwrap_or(f64::NAN)
            );
        }
        Cmd::ZetaEval {
            re,
            im,
            derivative,
            special,
            n,
        } => {
            if let Some(family) = special {
                let kind = match family {
                    SpecialFamily::EvenPos => totlab::SpecialKind::EvenPos,
                    SpecialFamily::OddNeg => totlab::SpecialKind::OddNeg,
                    SpecialFamily::PrimeEvenNeg => totlab::SpecialKind::PrimeEvenNeg,
                };
                match totlab::zeta_special(kind, n)? {
                    totlab::SpecialValue::Exact(r) => println!("{r}"),
                    totlab::SpecialValue::Float(v) => println!("{v}"),
                }
            } else {
                let s = num_complex::Complex64::new(re, im);
                let r = if derivative {
                    totlab::zeta_prime(s)?
                } else {
                    totlab::zeta(s)?
                };
                println!(
                    "{} {:+}i (est_error {:.2e})",
                    r.value.re, r.value.im, r.est_error
                );
            }
        }
        Cmd::Explicit {
            x,
            zeros_count,
            n_max,
            zeros,
        } => {
            let table = load_zero_table(zeros.as_ref(), zeros_count)?;
            let e = totlab::phi_sum_explicit(x, &table, n_max)?;
            println!(
                "{} (main {} + const {} + zeros {} - trivial {}; {} zeros, {} trivial terms)",
                e.total,
                e.main_term,
                e.constant_term,
                e.zero_sum,
                e.trivial_series,
                e.zeros_used,
                e.trivial_terms_used
            );
        }
        Cmd::Perron {
            x,
            sigma0,
            t_limit,
            step,
        } => println!("{}", totlab::perron_phi(x, sigma0, t_limit, step)?),
        Cmd::ErrorScan { lo, hi, step, out } => {
            let report = totlab::scan_errors(lo, hi, step)?;
            if let Some(path) = out {
                let mut w = BufWriter::new(File::create(&path)?);
                totlab::write_scan_csv(&report, &mut w)?;
                w.flush()?;
            }
            println!(
                "sign_changes={} samples={} sup_r_over_x={} sup_f_norm={} prime_powers={}",
                report.sign_changes,
                report.samples.len(),
                report.sup_r_over_x,
                report.sup_f_norm,
                report.prime_power_count
            );
        }
        Cmd::RPoint { n } => println!("{}", totlab::r_point(n)?),
        Cmd::JumpStats { lo, hi } => {
            let j = totlab::jump_stats(lo, hi)?;
            println!(
                "jumps={} min={} at n={} max={} at n={} mean={} total={}",
                j.count, j.min, j.argmin, j.max, j.argmax, j.mean, j.total
            );
        }
        Cmd::Selftest { quick, zeros } => {
            let table = match zeros {
                Some(p) => Some(totlab::load_zeros(&p)?),
                None => None,
            };
            let reports = totlab::run_selftest(quick, table);
            let mut all_ok = true;
            for r in &reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!("{status} {} ({:.2}s): {}", r.name, r.seconds, r.detail);
                all_ok &= r.passed;
            }
            if !all_ok {
                return Err(Error::internal("selftest: at least one suite failed"));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help requests exit 0; bad flags and values are domain errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    if cli.version {
        println!("{VERSION_LINE} ({ZETA_CONTRACT})");
        return ExitCode::SUCCESS;
    }
    let Some(cmd) = cli.cmd else {
        eprintln!("error: a subcommand is required (see --help)");
        return ExitCode::from(1);
    };
    if let Some(n) = cli.threads {
        if n < 1 {
            eprintln!("domain error: --threads must be >= 1");
            return ExitCode::from(1);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("resource error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
