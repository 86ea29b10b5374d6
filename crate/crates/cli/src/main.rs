//! `gcodes`: construct, encode, decode, and verify constacyclic codes over
//! Gaussian-integer residue rings.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 uncorrectable word.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gaussian_codes::code::render_matrix;
use gaussian_codes::descriptor::{parse_code, parse_vector, ConstructOutput};
use gaussian_codes::oracle::{brute_min_mannheim_distance, exhaustive_decode_check, MessageSample, DEFAULT_SEED};
use gaussian_codes::{
    build_half_code, build_multiprime_code, build_quarter_code, ConstacyclicCode, Error, GaussianInt,
    GaussianPrimeSpec, Sign, SyndromeTable,
};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "gcodes", version, about = "Cyclic codes over Gaussian integer residue rings")]
struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for sampled verification.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Quarter,
    Half,
    Multiprime,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Rational prime p ≡ 1 (mod 4) (quarter and half families).
    #[arg(long)]
    p: Option<i64>,
    /// Exponent k of the modulus π^k.
    #[arg(long, default_value_t = 2)]
    k_exp: u32,
    #[arg(long, value_enum)]
    sign: Option<SignArg>,
    /// Comma-separated distinct primes (multiprime family).
    #[arg(long, value_delimiter = ',')]
    primes: Vec<i64>,
    /// The prime p_j whose φ(p_j) sets the block length (multiprime family).
    #[arg(long)]
    length_from: Option<i64>,
    /// Root e of the generator x - e, e.g. 3+1i (quarter and multiprime families).
    #[arg(long, allow_hyphen_values = true)]
    root: Option<GaussianInt>,
    /// Two roots of the generator (x - r1)(x - r2), e.g. 2,1-1i (half family).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    roots: Vec<GaussianInt>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code and print its descriptor, generator matrix and parity-check matrix.
    Construct(ConstructArgs),
    /// Encode a message file (JSON array of [re, im] pairs).
    Encode { code: PathBuf, message: PathBuf },
    /// Decode a received word file; exits 2 when the word is uncorrectable.
    Decode { code: PathBuf, received: PathBuf },
    /// Dump the coset-leader syndrome table.
    Tables { code: PathBuf },
    /// Run the brute-force decoding check; exits 0 only if every trial succeeds.
    Verify {
        code: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Enumerate every message instead of sampling; also reports the minimum distance.
        #[arg(long)]
        exhaustive: bool,
    },
}

fn load_code(path: &Path) -> Result<ConstacyclicCode> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_code(&text).with_context(|| format!("loading code from {}", path.display()))
}

fn load_vector(path: &Path) -> Result<Vec<GaussianInt>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_vector(&text).with_context(|| format!("loading vector from {}", path.display()))
}

fn print_json(out: &mut impl Write, value: &impl serde::Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn construct(args: &ConstructArgs) -> Result<ConstacyclicCode> {
    let ConstructArgs { family, p, k_exp, sign, ref primes, length_from, root, ref roots } = *args;
    let code = match family {
        Family::Quarter => {
            let Some(p) = p else { bail!("--family quarter requires --p") };
            let Some(sign) = sign else { bail!("--family quarter requires --sign") };
            if !primes.is_empty() || length_from.is_some() || !roots.is_empty() {
                bail!("--primes, --length-from and --roots do not apply to --family quarter");
            }
            let sign = match sign {
                SignArg::Plus => Sign::Plus,
                SignArg::Minus => Sign::Minus,
            };
            build_quarter_code(p, k_exp, sign, root)?
        }
        Family::Half => {
            let Some(p) = p else { bail!("--family half requires --p") };
            if sign.is_some() || !primes.is_empty() || length_from.is_some() || root.is_some() {
                bail!("--sign, --primes, --length-from and --root do not apply to --family half");
            }
            let roots = match roots[..] {
                [] => None,
                [a, b] => Some((a, b)),
                _ => bail!("--roots takes exactly two values"),
            };
            build_half_code(p, k_exp, roots)?
        }
        Family::Multiprime => {
            if p.is_some() || sign.is_some() || !roots.is_empty() {
                bail!("--p, --sign and --roots do not apply to --family multiprime");
            }
            let specs = primes
                .iter()
                .map(|&q| GaussianPrimeSpec::from_rational(q))
                .collect::<Result<Vec<_>, _>>()?;
            let Some(length_from) = length_from else { bail!("--family multiprime requires --length-from") };
            let Some(idx) = primes.iter().position(|&q| q == length_from) else {
                bail!("--length-from {length_from} is not one of --primes");
            };
            build_multiprime_code(&specs, idx + 1, root)?
        }
    };
    Ok(code)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = &mut io::stdout().lock();
    match cli.command {
        Command::Construct(args) => {
            let code = construct(&args)?;
            if cli.json {
                print_json(out, &ConstructOutput::from(&code))?;
            } else {
                writeln!(out, "{code}")?;
                writeln!(out, "\nG =\n{}", render_matrix(&code.generator_matrix()))?;
                writeln!(out, "\nH =\n{}", render_matrix(&code.parity_check_matrix()))?;
            }
        }
        Command::Encode { code, message } => {
            let code = load_code(&code)?;
            let message = load_vector(&message)?;
            print_json(out, &code.encode(&message)?)?;
        }
        Command::Decode { code, received } => {
            let code = load_code(&code)?;
            let received = load_vector(&received)?;
            let table = SyndromeTable::build(&code)?;
            match table.decode(&received) {
                Ok(decoded) => print_json(out, &json!({
                    "codeword": decoded.codeword,
                    "error": decoded.error.to_vector(code.n()),
                    "message": decoded.message,
                    "syndrome": decoded.syndrome.coeffs(),
                }))?,
                Err(Error::Uncorrectable) => {
                    writeln!(out, "uncorrectable")?;
                    return Ok(ExitCode::from(2));
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Tables { code } => {
            let code = load_code(&code)?;
            let table = SyndromeTable::build(&code)?;
            if cli.json {
                print_json(out, &table.dump())?;
            } else {
                writeln!(out, "{}", table.render())?;
            }
        }
        Command::Verify { code, samples, exhaustive } => {
            let code = load_code(&code)?;
            let table = SyndromeTable::build(&code)?;
            let sample = if exhaustive {
                MessageSample::Exhaustive
            } else {
                MessageSample::Random { count: samples, seed: cli.seed }
            };
            let mut report = exhaustive_decode_check(&code, &table, sample)?;
            if exhaustive {
                report.min_distance = Some(brute_min_mannheim_distance(&code)?);
            }
            if cli.json {
                print_json(out, &report)?;
            } else {
                writeln!(out, "trials:             {}", report.trials)?;
                writeln!(out, "failures:           {}", report.failure_count)?;
                writeln!(out, "table size:         {}", report.table_size)?;
                writeln!(out, "distinct syndromes: {}", report.distinct_syndromes)?;
                if let Some(d) = report.min_distance {
                    writeln!(out, "min distance:       {d}")?;
                }
                for f in &report.failures {
                    writeln!(out, "  message {:?} error {:?}: {}", f.message, f.error, f.detail)?;
                }
            }
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::FAILURE } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
}
