//! subsetcodec: encode messages into subsets of dense sets of naturals,
//! decode arbitrary samples of them, emit exact density profiles, and run the
//! combinatorial and complexity verifiers.
//!
//! Exit codes: 0 success, 1 verification or sample failure, 2 usage or
//! parameter error. All randomness flows from --seed for bit-exact reruns.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use subsetcodec::codecs::{
    dm_decode, dm_encode, evenodd_extract, evenodd_split, interval_decode, interval_encode,
    parity_decode, parity_encode, residue_decode, residue_encode, residue_modulus_exponent,
    slowdecay_decode, slowdecay_encode,
};
use subsetcodec::density::{
    density_at, first_f_density_failure, inv_floor_sqrt, is_delta_dense_along, is_f_dense,
};
use subsetcodec::diagonal::{pa_construct, pa_verify};
use subsetcodec::error::Error as CoreError;
use subsetcodec::io as fmt_io;
use subsetcodec::kolmo::{c_family, c_finite, cheap_strings, k_safe_check, k_safe_density_check};
use subsetcodec::lemmas::{
    find_disjoint_dense_family, min_family_size, variance_pair_witness,
    variance_violation_search, SubsetFamily,
};
use subsetcodec::sample::seeded_subset;
use subsetcodec::thresholds::{default_interval_thresholds, PairEnumeration};
use subsetcodec::verify;
use subsetcodec::{Bitstring, FinitePrefixSet, Rational, ThresholdSequence};

#[derive(Parser)]
#[command(name = "subsetcodec", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a message into a set file.
    Encode(EncodeArgs),
    /// Decode a sample set file.
    Decode(DecodeArgs),
    /// Density profile and density checks for a set file.
    Density(DensityArgs),
    /// Combinatorial lemma verifiers.
    Lemma(LemmaArgs),
    /// Resource-bounded complexity and k-safety checks.
    Kolmo(KolmoArgs),
    /// Diagonal construction against a machine table.
    Pa(PaArgs),
    /// Run the full verification battery.
    VerifyAll(VerifyAllArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Dm,
    Interval,
    Slowdecay,
    Parity,
    Residue,
    Evenodd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DecayFn {
    /// 1/⌊√(n+1)⌋, the exact rational stand-in for 1/√(n+1).
    InvSqrt,
}

#[derive(Args)]
struct EncodeArgs {
    #[arg(long, value_enum)]
    scheme: SchemeArg,
    /// Message bits, e.g. 1011. The residue scheme reads its key from here.
    #[arg(long)]
    message: Option<String>,
    /// Source-set members for the interval scheme, e.g. 0,2,5.
    #[arg(long, value_delimiter = ',')]
    members: Option<Vec<u64>>,
    /// Input set file (even/odd split).
    #[arg(long, value_name = "FILE")]
    r#in: Option<PathBuf>,
    #[arg(long)]
    horizon: Option<u64>,
    /// Block/interval count for the slow-decay and parity schemes.
    #[arg(long)]
    count: Option<usize>,
    /// Density parameter, e.g. 1/8.
    #[arg(long)]
    delta: Option<Rational>,
    /// Floor N for the residue scheme.
    #[arg(long, default_value_t = 0)]
    start: u64,
    /// Builtin decay function for the slow-decay scheme.
    #[arg(long, value_enum)]
    f: Option<DecayFn>,
    /// Step-table decay function: JSON [{"from":0,"num":1,"den":2},…].
    #[arg(long, value_name = "FILE")]
    f_table: Option<PathBuf>,
    /// Threshold sequence to encode against (interval scheme).
    #[arg(long, value_name = "FILE")]
    thresholds: Option<PathBuf>,
    /// Where to write the generated threshold sequence.
    #[arg(long, value_name = "FILE")]
    thresholds_out: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long, value_enum)]
    scheme: SchemeArg,
    #[arg(long, value_name = "FILE")]
    r#in: PathBuf,
    /// Message bit index (dm, slowdecay).
    #[arg(long)]
    bit: Option<u64>,
    /// Message bit index for the parity scheme.
    #[arg(long)]
    j: Option<u64>,
    /// First threshold for the slow-decay scheme (defaults to the file's).
    #[arg(long)]
    n1: Option<u64>,
    #[arg(long, value_name = "FILE")]
    thresholds: Option<PathBuf>,
    /// Floor N for the residue scheme.
    #[arg(long, default_value_t = 0)]
    start: u64,
    /// Density parameter of the residue encoding.
    #[arg(long)]
    delta: Option<Rational>,
    /// Output files for the even/odd parts.
    #[arg(long, value_name = "FILE")]
    out_even: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    out_odd: Option<PathBuf>,
}

#[derive(Args)]
struct DensityArgs {
    #[arg(long, value_name = "FILE")]
    r#in: PathBuf,
    /// Write the profile CSV here.
    #[arg(long, value_name = "FILE")]
    profile: Option<PathBuf>,
    /// Check δ-density over the window (or along --along).
    #[arg(long)]
    delta: Option<Rational>,
    /// Set of checkpoints for the δ-density check.
    #[arg(long, value_name = "FILE")]
    along: Option<PathBuf>,
    /// Check f-density against a builtin decay function.
    #[arg(long, value_enum)]
    f: Option<DecayFn>,
    /// Print the exact density at one point.
    #[arg(long)]
    at: Option<u64>,
}

#[derive(Args)]
struct LemmaArgs {
    #[command(subcommand)]
    which: LemmaCommand,
}

#[derive(Subcommand)]
enum LemmaCommand {
    /// Pairwise-overlap bound for families of dense sets.
    Variance {
        #[arg(long)]
        n: u64,
        /// Family size; defaults to ⌈2/δ⌉.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        delta: Rational,
        /// Exhaustive counterexample search over all families.
        #[arg(long)]
        exhaustive: bool,
        /// Randomized trials when not exhaustive.
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Cap on pairwise-disjoint δ/2-dense families.
    Disjoint {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: Rational,
        /// Family size to search for; defaults to the first size over 2/δ.
        #[arg(long)]
        size: Option<u64>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Partition pigeonhole sweep: a δ/k-dense part always exists.
    Pigeonhole {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args)]
struct KolmoArgs {
    #[command(subcommand)]
    which: KolmoCommand,
}

#[derive(Subcommand)]
enum KolmoCommand {
    /// Complexity of a string relative to a finite oracle.
    Cfinite {
        #[arg(long, value_name = "FILE")]
        oracle: PathBuf,
        #[arg(long)]
        sigma: String,
    },
    /// Complexity relative to an explicit family: the max over members.
    Family {
        #[arg(long)]
        sigma: String,
        #[arg(long = "oracle", value_name = "FILE", required = true)]
        oracles: Vec<PathBuf>,
    },
    /// Counting bound sweep: fewer than 2^k strings of complexity < k.
    Counting {
        #[arg(long, default_value_t = 10)]
        max_oracle: u64,
        #[arg(long, default_value_t = 5)]
        k: u32,
    },
    /// k-safety check of an instance file.
    Ksafe {
        #[arg(long, value_name = "FILE")]
        instance: PathBuf,
        /// Run the density form at this δ instead of the partition form.
        #[arg(long)]
        delta: Option<Rational>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct PaArgs {
    #[arg(long, value_name = "FILE")]
    table: PathBuf,
    #[arg(long)]
    machines: u32,
    #[arg(long)]
    horizon: u64,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 20)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyAllArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Prints one line to stdout; a consumer that closed the pipe early ends the
/// run quietly instead of panicking.
fn emit(line: impl std::fmt::Display) {
    use std::io::Write as _;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(0);
    }
}

/// Failures that map to exit code 1; everything else in CoreError is usage.
fn is_verification_failure(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::InsufficientSample(_)
            | CoreError::InvalidSample(_)
            | CoreError::InconsistentSample { .. }
            | CoreError::InvariantViolation(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if is_verification_failure(&e) {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn read_set_file(path: &Path) -> Result<FinitePrefixSet, CoreError> {
    let f = File::open(path)
        .map_err(|e| CoreError::Format(format!("{}: {e}", path.display())))?;
    fmt_io::read_set(&mut BufReader::new(f))
        .map_err(|e| CoreError::Format(format!("{}: {e}", path.display())))
}

fn write_set_file(path: &Path, set: &FinitePrefixSet) -> Result<(), CoreError> {
    let f = File::create(path)
        .map_err(|e| CoreError::Format(format!("{}: {e}", path.display())))?;
    let mut w = BufWriter::new(f);
    fmt_io::write_set(&mut w, set)?;
    w.flush()?;
    Ok(())
}

fn read_thresholds_file(path: &Path) -> Result<ThresholdSequence, CoreError> {
    let f = File::open(path)
        .map_err(|e| CoreError::Format(format!("{}: {e}", path.display())))?;
    fmt_io::read_thresholds(&mut BufReader::new(f))
}

fn write_thresholds_file(path: &Path, t: &ThresholdSequence) -> Result<(), CoreError> {
    let f = File::create(path)
        .map_err(|e| CoreError::Format(format!("{}: {e}", path.display())))?;
    let mut w = BufWriter::new(f);
    fmt_io::write_thresholds(&mut w, t)?;
    w.flush()?;
    Ok(())
}

fn parse_message(s: Option<&String>) -> Result<Bitstring, CoreError> {
    let s = s.ok_or_else(|| CoreError::Parameter("--message is required".into()))?;
    Bitstring::from_str(s)
}

fn require<T>(v: Option<T>, what: &str) -> Result<T, CoreError> {
    v.ok_or_else(|| CoreError::Parameter(format!("{what} is required")))
}

#[derive(Deserialize)]
struct DecayStep {
    from: u64,
    num: i64,
    den: i64,
}

/// Piecewise-constant decay table: f(n) is the value of the last step whose
/// `from` is ≤ n. Steps must start at 0 and be non-increasing.
fn load_decay_table(path: &Path) -> Result<Vec<(u64, Rational)>, CoreError> {
    let f = File::open(path)
        .map_err(|e| CoreError::Format(format!("{}: {e}", path.display())))?;
    let steps: Vec<DecayStep> = serde_json::from_reader(BufReader::new(f))
        .map_err(|e| CoreError::Format(format!("{}: {e}", path.display())))?;
    if steps.first().is_none_or(|s| s.from != 0) {
        return Err(CoreError::Parameter("decay table must start at 0".into()));
    }
    let mut out = Vec::with_capacity(steps.len());
    let mut prev: Option<Rational> = None;
    for s in &steps {
        if s.den <= 0 {
            return Err(CoreError::Parameter("decay values need positive denominators".into()));
        }
        let v = Rational::new(s.num, s.den);
        if prev.is_some_and(|p| v > p) {
            return Err(CoreError::Parameter("decay table must be non-increasing".into()));
        }
        if out.last().is_some_and(|(from, _)| *from >= s.from) {
            return Err(CoreError::Parameter("decay table breakpoints must increase".into()));
        }
        out.push((s.from, v));
        prev = Some(v);
    }
    Ok(out)
}

fn table_fn(table: &[(u64, Rational)]) -> impl Fn(u64) -> Rational + '_ {
    move |n| {
        let idx = table.partition_point(|(from, _)| *from <= n);
        table[idx - 1].1
    }
}

fn run(cmd: Command) -> Result<ExitCode, CoreError> {
    match cmd {
        Command::Encode(args) => run_encode(args),
        Command::Decode(args) => run_decode(args),
        Command::Density(args) => run_density(args),
        Command::Lemma(args) => run_lemma(args.which),
        Command::Kolmo(args) => run_kolmo(args.which),
        Command::Pa(args) => run_pa(args),
        Command::VerifyAll(args) => {
            let outcomes = verify::all_checks(args.seed);
            let mut ok = true;
            for o in &outcomes {
                emit(o.line());
                ok &= o.pass;
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn run_encode(args: EncodeArgs) -> Result<ExitCode, CoreError> {
    let (set, thresholds) = match args.scheme {
        SchemeArg::Dm => {
            let x = parse_message(args.message.as_ref())?;
            let horizon = require(args.horizon, "--horizon")?;
            (dm_encode(&x, horizon)?, None)
        }
        SchemeArg::Interval => {
            let members = require(args.members.clone(), "--members")?;
            let horizon = require(args.horizon, "--horizon")?;
            let t = match &args.thresholds {
                Some(path) => read_thresholds_file(path)?,
                None => default_interval_thresholds(horizon),
            };
            let set = interval_encode(|i| members.contains(&i), &t, horizon)?;
            (set, Some(t))
        }
        SchemeArg::Slowdecay => {
            let x = parse_message(args.message.as_ref())?;
            let horizon = require(args.horizon, "--horizon")?;
            let count = require(args.count, "--count")?;
            let (set, t) = match (&args.f, &args.f_table) {
                (Some(DecayFn::InvSqrt), None) => {
                    slowdecay_encode(&x, inv_floor_sqrt, count, horizon)?
                }
                (None, Some(path)) => {
                    let table = load_decay_table(path)?;
                    slowdecay_encode(&x, table_fn(&table), count, horizon)?
                }
                _ => {
                    return Err(CoreError::Parameter(
                        "exactly one of --f and --f-table is required".into(),
                    ))
                }
            };
            (set, Some(t))
        }
        SchemeArg::Parity => {
            let x = parse_message(args.message.as_ref())?;
            let horizon = require(args.horizon, "--horizon")?;
            let count = require(args.count, "--count")?;
            let (set, t) = parity_encode(&x, &PairEnumeration::canonical(), count, horizon)?;
            (set, Some(t))
        }
        SchemeArg::Residue => {
            let rho = parse_message(args.message.as_ref())?;
            let horizon = require(args.horizon, "--horizon")?;
            let delta = require(args.delta, "--delta")?;
            (residue_encode(&rho, args.start, delta, horizon)?, None)
        }
        SchemeArg::Evenodd => {
            let input = require(args.r#in.as_ref(), "--in")?;
            let a = read_set_file(input)?;
            (evenodd_split(&a), None)
        }
    };
    if let Some(t) = &thresholds {
        if let Some(path) = &args.thresholds_out {
            write_thresholds_file(path, t)?;
        }
    }
    write_set_file(&args.out, &set)?;
    emit(
        json!({
            "horizon": set.horizon(),
            "count": set.count(),
            "out": args.out.display().to_string(),
        })
    );
    Ok(ExitCode::SUCCESS)
}

fn run_decode(args: DecodeArgs) -> Result<ExitCode, CoreError> {
    let sample = read_set_file(&args.r#in)?;
    match args.scheme {
        SchemeArg::Dm => {
            let bit = dm_decode(&sample, require(args.bit, "--bit")?)?;
            emit(bit);
        }
        SchemeArg::Interval => {
            let t = read_thresholds_file(&require(args.thresholds.as_ref(), "--thresholds")?)?;
            let indices = interval_decode(&sample, &t)?;
            emit(json!(indices.into_iter().collect::<Vec<_>>()));
        }
        SchemeArg::Slowdecay => {
            let n1 = match (args.n1, &args.thresholds) {
                (Some(n1), _) => n1,
                (None, Some(path)) => {
                    let t = read_thresholds_file(path)?;
                    *t.values.first().ok_or_else(|| {
                        CoreError::Parameter("threshold file holds no boundaries".into())
                    })?
                }
                (None, None) => {
                    return Err(CoreError::Parameter(
                        "--n1 or --thresholds is required".into(),
                    ))
                }
            };
            let bit = slowdecay_decode(&sample, n1, require(args.bit, "--bit")?)?;
            emit(bit);
        }
        SchemeArg::Parity => {
            let t = read_thresholds_file(&require(args.thresholds.as_ref(), "--thresholds")?)?;
            let j = require(args.j, "--j")?;
            let bit = parity_decode(&sample, j, &PairEnumeration::canonical(), &t)?;
            emit(bit);
        }
        SchemeArg::Residue => {
            let delta = require(args.delta, "--delta")?;
            let m = residue_modulus_exponent(delta)?;
            let mut agreed: Option<Bitstring> = None;
            for elem in sample.iter() {
                let (bits, _) = residue_decode(elem, args.start, m)?;
                match &agreed {
                    Some(prev) if *prev != bits => {
                        return Err(CoreError::InvalidSample(format!(
                            "elements decode different keys: {prev} vs {bits}"
                        )));
                    }
                    _ => agreed = Some(bits),
                }
            }
            let bits = agreed.ok_or_else(|| {
                CoreError::InsufficientSample("sample holds no elements".into())
            })?;
            emit(bits);
        }
        SchemeArg::Evenodd => {
            let parts = evenodd_extract(&sample)?;
            if let Some(path) = &args.out_even {
                write_set_file(path, &parts.even)?;
            }
            if let Some(path) = &args.out_odd {
                write_set_file(path, &parts.odd)?;
            }
            let map: serde_json::Map<String, serde_json::Value> = parts
                .partial
                .iter()
                .map(|(x, b)| (x.to_string(), json!(b)))
                .collect();
            emit(json!({ "partial": map }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_density(args: DensityArgs) -> Result<ExitCode, CoreError> {
    let a = read_set_file(&args.r#in)?;
    let mut failed = false;
    if let Some(n) = args.at {
        let d = density_at(&a, n)?;
        emit(json!({ "n": n, "num": *d.numer(), "den": *d.denom() }));
    }
    if let Some(delta) = args.delta {
        let ok = match &args.along {
            Some(path) => {
                let d = read_set_file(path)?;
                is_delta_dense_along(&a, delta, &d)?
            }
            None => {
                let full = FinitePrefixSet::full(a.horizon());
                is_delta_dense_along(&a, delta, &full)?
            }
        };
        emit(
            json!({ "check": "delta-dense", "delta": delta.to_string(), "verdict": ok })
        );
        failed |= !ok;
    }
    if let Some(DecayFn::InvSqrt) = args.f {
        let ok = is_f_dense(&a, inv_floor_sqrt);
        let first_failure = first_f_density_failure(&a, inv_floor_sqrt);
        emit(
            json!({ "check": "f-dense", "f": "inv-sqrt", "verdict": ok, "first_failure": first_failure })
        );
        failed |= !ok;
    }
    if let Some(path) = &args.profile {
        let f = File::create(path)
            .map_err(|e| CoreError::Format(format!("{}: {e}", path.display())))?;
        let mut w = BufWriter::new(f);
        fmt_io::write_profile_csv(&mut w, &a)?;
        w.flush()?;
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn verdict_record(
    lemma: &str,
    params: serde_json::Value,
    witness: serde_json::Value,
    ratio: Option<Rational>,
    verdict: bool,
) -> serde_json::Value {
    json!({
        "lemma": lemma,
        "params": params,
        "witness": witness,
        "ratio_num": ratio.map(|r| *r.numer()),
        "ratio_den": ratio.map(|r| *r.denom()),
        "verdict": verdict,
    })
}

fn run_lemma(cmd: LemmaCommand) -> Result<ExitCode, CoreError> {
    let record = match cmd {
        LemmaCommand::Variance {
            n,
            k,
            delta,
            exhaustive,
            trials,
            seed,
            budget,
        } => {
            let k = match k {
                Some(k) => k,
                None => min_family_size(delta)? as usize,
            };
            if k < 2 {
                return Err(CoreError::Parameter("family size must be at least 2".into()));
            }
            let floor_k = delta * delta - delta / Rational::new(k as i64, 1);
            let mut bound = floor_k;
            if (k as u64) >= min_family_size(delta)? {
                bound = bound.max(delta * delta / 2);
            }
            let params = json!({
                "n": n, "k": k, "delta": delta.to_string(),
                "mode": if exhaustive { "exhaustive" } else { "randomized" },
            });
            if exhaustive {
                let min_size =
                    (*delta.numer() as u64 * n).div_ceil(*delta.denom() as u64) as u32;
                let budget = subsetcodec::kolmo::enumeration_budget(budget);
                let hit = variance_violation_search(n, min_size, k, bound, budget)?;
                let verdict = hit.is_none();
                verdict_record("variance", params, json!(hit), Some(bound), verdict)
            } else {
                let mut worst: Option<(usize, usize, Rational)> = None;
                let mut violations = 0u64;
                let size = (*delta.numer() as u64 * n).div_ceil(*delta.denom() as u64) as usize;
                for t in 0..trials {
                    let members: Vec<FinitePrefixSet> = (0..k as u64)
                        .map(|i| seeded_subset(n, size, seed.wrapping_add(t * 131 + i)))
                        .collect::<Result<_, _>>()?;
                    let fam = SubsetFamily::new(n, members)?;
                    let w = variance_pair_witness(&fam)?;
                    if w.ratio < bound {
                        violations += 1;
                    }
                    if worst.is_none_or(|(_, _, r)| w.ratio < r) {
                        worst = Some((w.i, w.j, w.ratio));
                    }
                }
                let (wi, wj, ratio) = worst.unwrap();
                verdict_record(
                    "variance",
                    params,
                    json!([wi, wj]),
                    Some(ratio),
                    violations == 0,
                )
            }
        }
        LemmaCommand::Disjoint { n, delta, size, budget } => {
            let size = match size {
                Some(s) => s,
                None => 2 * (*delta.denom() as u64) / (*delta.numer() as u64) + 1,
            };
            let budget = subsetcodec::kolmo::enumeration_budget(budget);
            let hit = find_disjoint_dense_family(n, delta, size, budget)?;
            let verdict = hit.is_none();
            verdict_record(
                "disjoint-dense",
                json!({ "n": n, "delta": delta.to_string(), "size": size }),
                json!(hit),
                None,
                verdict,
            )
        }
        LemmaCommand::Pigeonhole { n, k } => {
            if n > 20 || k == 0 || k > 4 {
                return Err(CoreError::Parameter(
                    "sweep supports n ≤ 20 and 1 ≤ k ≤ 4".into(),
                ));
            }
            let outcome = verify::check_partition_pigeonhole_cell(n, k)?;
            verdict_record(
                "partition-pigeonhole",
                json!({ "n": n, "k": k }),
                json!(outcome),
                None,
                true,
            )
        }
    };
    emit(&record);
    let verdict = record["verdict"].as_bool().unwrap_or(false);
    Ok(if verdict { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_kolmo(cmd: KolmoCommand) -> Result<ExitCode, CoreError> {
    match cmd {
        KolmoCommand::Cfinite { oracle, sigma } => {
            let s = read_set_file(&oracle)?;
            let sigma = Bitstring::from_str(&sigma)?;
            let c = c_finite(&s, &sigma)?;
            emit(json!({ "sigma": sigma.to_string(), "c": c }));
            Ok(ExitCode::SUCCESS)
        }
        KolmoCommand::Family { sigma, oracles } => {
            let sigma = Bitstring::from_str(&sigma)?;
            let sets = oracles
                .iter()
                .map(|p| read_set_file(p))
                .collect::<Result<Vec<_>, _>>()?;
            let c = c_family(&sigma, &sets)?;
            emit(json!({ "sigma": sigma.to_string(), "c": c }));
            Ok(ExitCode::SUCCESS)
        }
        KolmoCommand::Counting { max_oracle, k } => {
            if max_oracle > 16 || k > 8 {
                return Err(CoreError::Parameter(
                    "sweep supports max-oracle ≤ 16 and k ≤ 8".into(),
                ));
            }
            let mut worst = 0u64;
            for mask in 1u64..1 << (max_oracle + 1) {
                let s = FinitePrefixSet::from_members(
                    max_oracle + 1,
                    (0..=max_oracle).filter(|e| mask >> e & 1 == 1),
                )?;
                let cheap = cheap_strings(&s, k)?;
                for kk in 1..=k {
                    let count = cheap.values().filter(|c| **c < kk as u64).count() as u64;
                    worst = worst.max(count);
                    if count >= 1 << kk {
                        emit(
                            json!({ "check": "counting", "verdict": false, "oracle_mask": mask, "k": kk })
                        );
                        return Ok(ExitCode::from(1));
                    }
                }
            }
            emit(
                json!({ "check": "counting", "verdict": true, "max_oracle": max_oracle, "k": k, "worst_count": worst })
            );
            Ok(ExitCode::SUCCESS)
        }
        KolmoCommand::Ksafe { instance, delta, budget } => {
            let f = File::open(&instance)
                .map_err(|e| CoreError::Format(format!("{}: {e}", instance.display())))?;
            let inst = fmt_io::read_ksafe_instance(&mut BufReader::new(f))?;
            let verdict = match delta {
                Some(d) => k_safe_density_check(&inst, d, budget)?,
                None => k_safe_check(&inst, budget)?,
            };
            emit(
                json!({
                    "check": "k-safe",
                    "verdict": verdict.holds,
                    "checks": verdict.checks,
                    "counterexample": verdict.counterexample.map(|cx| json!({
                        "pieces": cx.pieces,
                        "subset": cx.subset,
                        "revealed": cx.revealed,
                    })),
                })
            );
            Ok(if verdict.holds { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn run_pa(args: PaArgs) -> Result<ExitCode, CoreError> {
    let f = File::open(&args.table)
        .map_err(|e| CoreError::Format(format!("{}: {e}", args.table.display())))?;
    let table = fmt_io::read_machine_table(&mut BufReader::new(f))?;
    let cons = pa_construct(&table, args.machines, args.horizon)?;
    let report = pa_verify(&cons, &table, args.samples, args.seed)?;
    if let Some(path) = &args.out {
        write_set_file(path, &cons.set)?;
    }
    let ok = report.iter().all(|item| item.pass);
    emit(
        json!({
            "anchors": cons.anchors,
            "defined": cons.partial.iter().map(|(x, b)| json!([x, b])).collect::<Vec<_>>(),
            "report": report.iter().map(|i| json!({
                "name": i.name, "pass": i.pass, "detail": i.detail,
            })).collect::<Vec<_>>(),
        })
    );
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
