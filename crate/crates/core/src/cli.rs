//! The `moldkit` command line: JSON in, one JSON document out.
//!
//! Exit codes: 0 success, 1 domain failure (non-Borel input, undecided
//! equivalence, failed self-test), 2 input error, 3 resource limit.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::borel::{self, discriminant2, discriminant4};
use crate::canonical::{canonical_form, equivalent, Equivalence};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix};
use crate::io::{self, matrix_json, subspace_json, vector_json};
use crate::moduli::{self, CensusOptions};
use crate::rep::{Kind, Representation};
use crate::sample;

#[derive(Parser, Debug)]
#[command(name = "moldkit", version, about = "Exact computations with molds and Borel-mold representations")]
struct Cli {
    /// Longest word tried when searching for a unit-pivot word set.
    #[arg(long, global = true, default_value_t = 4)]
    max_word_len: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Representation document (`-` for standard input).
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank and echelon basis of the algebra generated by the images.
    Closure(Input),
    /// Whether the images generate a Borel mold.
    IsBorel(Input),
    /// Δ(A,B) of the first two generators, or Δ(A,B,C,D) of the first four.
    Discriminant {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "quad")]
        pair: bool,
        #[arg(long)]
        quad: bool,
    },
    /// P and P⁻¹ρP with upper-triangular images.
    Triangularize(Input),
    /// The invariant complete flag.
    Flag(Input),
    /// The characters on the flag quotients.
    Characters(Input),
    /// Canonical data of a representation with Borel mold.
    Canonical(Input),
    /// Whether two representations are equivalent.
    Equiv { a: PathBuf, b: PathBuf },
    /// Census of the unital subalgebras of M_n(F_q) of dimension d.
    EnumMolds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u64,
        /// Include an echelon basis of every mold found.
        #[arg(long)]
        reps: bool,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Lift the cap on the number of candidate subspaces.
        #[arg(long)]
        allow_large: bool,
    },
    /// The predicted point count of the moduli of molds.
    Predict {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u64,
    },
    /// Random identity checks with a fixed seed.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
}

fn error_json(e: &Error) -> Value {
    json!({ "error": { "code": e.code(), "message": e.to_string() } })
}

/// Parses `argv` (program name first) and runs the command.
///
/// Returns the exit code and the text to print on standard output.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => (2, json!({ "error": { "code": "usage", "message": e.to_string() } }).to_string()),
            };
        }
    };
    let mut config = Config::from_env();
    config.max_word_len = cli.max_word_len;
    match execute(cli.command, &config) {
        Ok((code, v)) => (code, v.to_string()),
        Err(e) => (e.exit_code(), error_json(&e).to_string()),
    }
}

fn read(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Error::input(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Error::input(format!("reading {}: {e}", path.display())))
}

fn load(path: &PathBuf, config: &Config) -> Result<Representation> {
    io::parse(&read(path)?, config)
}

fn execute(command: Command, config: &Config) -> Result<(i32, Value)> {
    let ok = |v: Value| Ok((0, v));
    match command {
        Command::Closure(input) => {
            let rep = load(&input.file, config)?;
            let mold = borel::closure(&rep);
            ok(json!({ "rank": mold.rank(), "basis": subspace_json(mold.space()) }))
        }
        Command::IsBorel(input) => {
            let rep = load(&input.file, config)?;
            let mold = borel::closure(&rep);
            ok(json!({ "borel": borel::is_borel_mold(&mold), "rank": mold.rank() }))
        }
        Command::Discriminant { input, pair, quad } => {
            let rep = load(&input.file, config)?;
            let g = rep.generators();
            let need = if quad { 4 } else { 2 };
            if !pair && !quad {
                return Err(Error::input("pass --pair or --quad"));
            }
            if g.len() < need {
                return Err(Error::input(format!("need at least {need} generators")));
            }
            let value = if quad { discriminant4(&g[0], &g[1], &g[2], &g[3])? } else { discriminant2(&g[0], &g[1])? };
            ok(json!({ "discriminant": value.to_string() }))
        }
        Command::Triangularize(input) => {
            let rep = load(&input.file, config)?;
            let (p, tri) = borel::triangularize(&rep)?;
            ok(json!({
                "P": matrix_json(&p),
                "generators": tri.generators().iter().map(matrix_json).collect::<Vec<_>>(),
            }))
        }
        Command::Flag(input) => {
            let rep = load(&input.file, config)?;
            let flag = borel::invariant_flag(&rep)?;
            ok(json!({ "flag": flag.subspaces.iter().map(subspace_json).collect::<Vec<_>>() }))
        }
        Command::Characters(input) => {
            let rep = load(&input.file, config)?;
            let chi = borel::characters(&rep)?;
            ok(json!({ "characters": chi.iter().map(|c| vector_json(c)).collect::<Vec<_>>() }))
        }
        Command::Canonical(input) => {
            let rep = load(&input.file, config)?;
            ok(canonical_form(&rep, config.max_word_len)?.to_json())
        }
        Command::Equiv { a, b } => {
            let r1 = load(&a, config)?;
            let r2 = load(&b, config)?;
            match equivalent(&r1, &r2, config.max_word_len)? {
                Equivalence::Equivalent => ok(json!({ "equivalent": true })),
                Equivalence::Inequivalent => ok(json!({ "equivalent": false })),
                Equivalence::Undecided => Err(Error::Undecided(format!(
                    "no unit-pivot word set of length <= {} for either input",
                    config.max_word_len
                ))),
            }
        }
        Command::EnumMolds { n, d, q, reps, jobs, allow_large } => {
            if n == 0 || n > config.max_degree {
                return Err(Error::input(format!("degree {n} outside 1..={}", config.max_degree)));
            }
            let options = CensusOptions {
                jobs,
                limit: if allow_large { u128::MAX } else { config.census_limit },
                keep_representatives: reps,
            };
            ok(moduli::enumerate_molds(n, d, q, &options)?.to_json())
        }
        Command::Predict { n, d, q } => {
            Field::prime(q)?;
            ok(json!({ "n": n, "d": d, "q": q, "predicted": moduli::predicted_count(n, d, q) }))
        }
        Command::Selftest { seed, count } => selftest(seed, count, config),
    }
}

/// Discriminant identities and canonical-form invariance on random inputs.
fn selftest(seed: u64, count: usize, config: &Config) -> Result<(i32, Value)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for field in [Field::rationals(), Field::prime(101)?] {
        for k in 0..count {
            let a = sample::invertible(&mut rng, field, 2, 9);
            let b = sample::invertible(&mut rng, field, 2, 9);
            let ab = &a * &b;
            let comm = &(&ab * &a.inverse()?) * &b.inverse()?;
            let lhs = discriminant2(&a, &b)?;
            let rhs = ab.det() * (comm.trace() - field.from_i64(2));
            let quad = discriminant4(&Matrix::identity(field, 2), &a, &b, &ab)?;
            if lhs != rhs || lhs != -quad {
                failures.push(format!("discriminant over {field}, sample {k}"));
            }
            let n = 2 + k % 2;
            let rho = sample::borel(&mut rng, field, n, 2, Kind::Group, 9);
            let p = sample::invertible(&mut rng, field, n, 9);
            let c1 = canonical_form(&rho, config.max_word_len)?;
            let c2 = canonical_form(&rho.conjugate(&p)?, config.max_word_len)?;
            if c1.to_json_string() != c2.to_json_string() {
                failures.push(format!("canonical form over {field}, sample {k}"));
            }
        }
    }
    let code = if failures.is_empty() { 0 } else { 1 };
    Ok((code, json!({ "seed": seed, "checks": 4 * count, "failures": failures })))
}
