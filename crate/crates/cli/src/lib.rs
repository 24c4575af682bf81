//! The `z2z4` command line: analysis, construction, feasibility tables,
//! duals and oracle verification over plain-text generator matrix files.
//!
//! [`run`] does all the work and returns what the process should print and
//! its exit status, so the binary is a thin wrapper and tests need no
//! subprocesses.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::result::Result;
use z2z4_core::oracle::{brute_dual, brute_kernel, brute_span_dim};
use z2z4_core::*;

/// Exit status: success.
pub const EXIT_OK: i32 = 0;
/// Exit status: infeasible request, violated bound or failed check.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit status: unreadable input, parse error or bad usage.
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        Self { exit_code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(exit_code: i32, stderr: impl Into<String>) -> Self {
        Self { exit_code, stdout: String::new(), stderr: stderr.into() }
    }
}

#[derive(Parser, Debug)]
#[command(name = "z2z4", version, about = "Rank and kernel of Z2Z4-linear codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Type, rank, kernel dimension and bound checks for a matrix file.
    Analyze {
        /// Matrix file, or `-` for standard input.
        path: PathBuf,
        /// Emit one JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Build a code with a given rank, kernel dimension, or both.
    Construct(ConstructArgs),
    /// Feasible ranks, kernel dimensions and (rank, kernel) pairs of a type.
    Feasible {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Generator matrix and type of the additive dual.
    Dual {
        /// Matrix file, or `-` for standard input.
        path: PathBuf,
    },
    /// Cross-check every fast engine against brute-force enumeration.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone, Copy)]
struct TypeArgs {
    /// Number of binary coordinates.
    #[arg(long)]
    alpha: usize,
    /// Number of quaternary coordinates.
    #[arg(long)]
    beta: usize,
    /// Number of order-two generators.
    #[arg(long)]
    gamma: usize,
    /// Number of order-four generators.
    #[arg(long)]
    delta: usize,
    /// Dimension of the binary projection of the order-two subcode.
    #[arg(long)]
    kappa: usize,
}

impl TypeArgs {
    fn params(&self) -> TypeParams {
        TypeParams::new(self.alpha, self.beta, self.gamma, self.delta, self.kappa)
    }
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("target").required(true).args(["rank", "kernel", "pair"])))]
struct ConstructArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Target rank.
    #[arg(long)]
    rank: Option<usize>,
    /// Target kernel dimension.
    #[arg(long)]
    kernel: Option<usize>,
    /// Target rank and kernel dimension.
    #[arg(long, num_args = 2, value_names = ["RANK", "KERNEL"])]
    pair: Option<Vec<usize>>,
    /// Seed for the free blocks; 0 leaves them zero.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the matrix here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip measuring the result before emitting it.
    #[arg(long)]
    no_verify: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Matrix file, or `-` for standard input.
    path: PathBuf,
    /// Largest log2 |C| to enumerate.
    #[arg(long)]
    max_codeword_bits: Option<usize>,
    /// Largest log2 of the ambient space to enumerate.
    #[arg(long)]
    max_ambient_log2: Option<usize>,
    /// Codeword pairs sampled for the Gray sum identity.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Table,
    Csv,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { CommandResult::ok(text) } else { CommandResult::fail(code, text) };
        }
    };
    match cli.command {
        Command::Analyze { path, json } => analyze(&path, json),
        Command::Construct(a) => construct(&a),
        Command::Feasible { ty, format } => feasible_cmd(&ty.params(), format),
        Command::Dual { path } => dual(&path),
        Command::Verify(a) => verify(&a),
    }
}

fn domain(e: &Error) -> CommandResult {
    let code = if matches!(e, Error::Parse { .. }) { EXIT_INPUT } else { EXIT_DOMAIN };
    CommandResult::fail(code, format!("error: {e}\n"))
}

fn load(path: &Path) -> Result<(MatrixFile, AdditiveCode), CommandResult> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text)).map(|_| ())
    };
    read.map_err(|e| CommandResult::fail(EXIT_INPUT, format!("error: {}: {e}\n", path.display())))?;
    let file = MatrixFile::parse(&text).map_err(|e| match e {
        Error::Parse { line, column, message } => {
            CommandResult::fail(EXIT_INPUT, format!("error: {}:{line}:{column}: {message}\n", path.display()))
        }
        other => domain(&other),
    })?;
    let code = AdditiveCode::from_rows(file.alpha, file.beta, &file.rows).map_err(|e| domain(&e))?;
    Ok((file, code))
}

fn analyze(path: &Path, as_json: bool) -> CommandResult {
    let (_, code) = match load(path) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let t = code.params();
    let r = rank(&code);
    let k = kernel(&code);
    let fs = match feasible(&t) {
        Ok(fs) => fs,
        Err(e) => return domain(&e),
    };
    let check = bounds_check(&t, r.rank, k.ker_dim);
    let (lo, hi) = (fs.ranks[0], *fs.ranks.last().expect("rank set is never empty"));
    let linear = r.r_bar == 0;
    let verdict = if check.is_ok() { "PASS" } else { "FAIL" };

    let stdout = if as_json {
        let value = json!({
            "schema": 1,
            "type": { "alpha": t.alpha, "beta": t.beta, "gamma": t.gamma, "delta": t.delta, "kappa": t.kappa },
            "s": t.s(),
            "rank": r.rank,
            "r_bar": r.r_bar,
            "rank_bounds": [lo, hi],
            "ker_dim": k.ker_dim,
            "k_bar": k.k_bar,
            "kernel_values": fs.kernels,
            "linear": linear,
            "bounds_check": verdict,
            "violation": check.as_ref().err().map(|e| e.to_string()),
        });
        format!("{}\n", serde_json::to_string_pretty(&value).expect("JSON values serialize"))
    } else {
        let mut out = String::new();
        writeln!(out, "type      {t}").unwrap();
        writeln!(out, "s         {}", t.s()).unwrap();
        writeln!(out, "rank      {} (r_bar {}, bounds [{lo}, {hi}])", r.rank, r.r_bar).unwrap();
        writeln!(out, "kernel    {} (k_bar {}, allowed {})", k.ker_dim, k.k_bar, join(&fs.kernels)).unwrap();
        writeln!(out, "linear    {}", if linear { "yes" } else { "no" }).unwrap();
        match &check {
            Ok(()) => writeln!(out, "bounds    PASS").unwrap(),
            Err(e) => writeln!(out, "bounds    FAIL ({e})").unwrap(),
        }
        out
    };
    CommandResult { exit_code: if check.is_ok() { EXIT_OK } else { EXIT_DOMAIN }, stdout, stderr: String::new() }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn construct(a: &ConstructArgs) -> CommandResult {
    let t = a.ty.params();
    let blocks = FreeBlocks::from_seed(a.seed);
    let (want_rank, want_kernel) = match (&a.pair, a.rank, a.kernel) {
        (Some(p), _, _) => (Some(p[0]), Some(p[1])),
        (None, r, k) => (r, k),
    };
    let built = match (want_rank, want_kernel) {
        (Some(r), Some(k)) => construct_pair(&t, r, k, blocks),
        (Some(r), None) => construct_rank(&t, r, blocks),
        (None, Some(k)) => construct_kernel(&t, k, blocks),
        (None, None) => unreachable!("clap requires a target"),
    };
    let code = match built {
        Ok(c) => c,
        Err(e) => return domain(&e),
    };
    if !a.no_verify {
        let got_type = code.infer_type();
        let got_rank = rank(&code).rank;
        let got_kernel = kernel(&code).ker_dim;
        let bad = got_type != t
            || want_rank.is_some_and(|r| r != got_rank)
            || want_kernel.is_some_and(|k| k != got_kernel);
        if bad {
            return CommandResult::fail(
                EXIT_DOMAIN,
                format!("error: constructed code measures type {got_type}, rank {got_rank}, kernel {got_kernel}\n"),
            );
        }
    }

    let mut file = MatrixFile::new(t.alpha, t.beta, code.gen().rows().cloned().collect());
    file.expectations.push(Expectation::Type(t));
    file.expectations.extend(want_rank.map(Expectation::Rank));
    file.expectations.extend(want_kernel.map(Expectation::Kernel));
    let text = file.serialize();
    match &a.out {
        None => CommandResult::ok(text),
        Some(p) => match std::fs::write(p, &text) {
            Ok(()) => CommandResult::ok(format!("wrote {}\n", p.display())),
            Err(e) => CommandResult::fail(EXIT_INPUT, format!("error: {}: {e}\n", p.display())),
        },
    }
}

fn feasible_cmd(t: &TypeParams, format: Format) -> CommandResult {
    let fs = match feasible(t) {
        Ok(fs) => fs,
        Err(e) => return domain(&e),
    };
    match format {
        Format::Csv => CommandResult::ok(fs.csv()),
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "type      {t}").unwrap();
            writeln!(out, "s         {}", t.s()).unwrap();
            writeln!(out, "ranks     {}", join(&fs.ranks)).unwrap();
            writeln!(out, "kernels   {}", join(&fs.kernels)).unwrap();
            writeln!(out, "pairs     {}", fs.pairs.len()).unwrap();
            writeln!(out).unwrap();
            out.push_str(&fs.table());
            CommandResult::ok(out)
        }
    }
}

fn dual(path: &Path) -> CommandResult {
    let (_, code) = match load(path) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let d = code.dual();
    let predicted = code.params().dual();
    let measured = d.params();
    let mut out = String::new();
    writeln!(out, "# predicted type {predicted}").unwrap();
    writeln!(out, "# measured type  {measured}").unwrap();
    if d.is_zero() {
        writeln!(out, "# the dual is the zero code").unwrap();
    }
    let mut file = MatrixFile::new(code.alpha(), code.beta(), d.gen().rows().cloned().collect());
    file.expectations.push(Expectation::Type(measured));
    out.push_str(&file.serialize());
    if predicted != measured {
        return CommandResult { exit_code: EXIT_DOMAIN, stdout: out, stderr: "error: dual type disagrees with prediction\n".into() };
    }
    CommandResult::ok(out)
}

/// Outcome of one verification check.
struct Check {
    name: &'static str,
    result: Result<String, (String, Option<String>)>,
}

fn verify(a: &VerifyArgs) -> CommandResult {
    let (file, code) = match load(&a.path) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let defaults = SizeGuard::default();
    let guard = SizeGuard {
        max_codeword_bits: a.max_codeword_bits.unwrap_or(defaults.max_codeword_bits),
        max_ambient_log2: a.max_ambient_log2.unwrap_or(defaults.max_ambient_log2),
    };
    let t = code.params();
    let (need_words, need_ambient) = (t.log_size(), t.alpha + 2 * t.beta);
    if need_words > guard.max_codeword_bits || need_ambient > guard.max_ambient_log2 {
        return CommandResult::fail(
            EXIT_DOMAIN,
            format!(
                "error: enumeration guard exceeded; rerun with --max-codeword-bits {} --max-ambient-log2 {}\n",
                need_words.max(guard.max_codeword_bits),
                need_ambient.max(guard.max_ambient_log2)
            ),
        );
    }

    let r = rank(&code);
    let k = kernel(&code);
    let mut checks = Vec::new();
    if !file.expectations.is_empty() {
        checks.push(Check { name: "expectations", result: check_expectations(&file, &code) });
    }
    checks.push(Check { name: "bounds", result: bounds_check(&t, r.rank, k.ker_dim).map(|_| format!("rank {} kernel {}", r.rank, k.ker_dim)).map_err(|e| (e.to_string(), None)) });
    checks.push(Check { name: "rank vs span enumeration", result: check_rank(&code, r.rank, &guard) });
    checks.push(Check { name: "kernel vs kernel enumeration", result: check_kernel(&code, &k, &guard) });
    checks.push(Check { name: "kernel via chi", result: check_chi(&code, &k) });
    checks.push(Check { name: "dual vs annihilator enumeration", result: check_dual(&code, &guard) });
    checks.push(Check {
        name: "kernel coset cover",
        result: match kernel_coset_cover(&code, &k, &guard) {
            Ok(c) => Ok(format!("{} cosets of size {}", c.cosets, c.coset_size)),
            Err(Error::CoverViolation { reason, witness }) => Err((reason, Some(witness.to_string()))),
            Err(e) => Err((e.to_string(), None)),
        },
    });
    checks.push(Check { name: "gray sum identity", result: check_gray_sum(&code, a.samples, a.seed, &guard) });

    let mut out = String::new();
    let mut failed = 0;
    for c in &checks {
        match &c.result {
            Ok(detail) => writeln!(out, "PASS  {:<32} {detail}", c.name).unwrap(),
            Err((reason, witness)) => {
                failed += 1;
                writeln!(out, "FAIL  {:<32} {reason}", c.name).unwrap();
                if let Some(w) = witness {
                    writeln!(out, "      witness: {w}").unwrap();
                }
            }
        }
    }
    writeln!(out, "{} of {} checks passed", checks.len() - failed, checks.len()).unwrap();
    CommandResult { exit_code: if failed == 0 { EXIT_OK } else { EXIT_DOMAIN }, stdout: out, stderr: String::new() }
}

type CheckResult = Result<String, (String, Option<String>)>;

fn measured_expectations(file: &MatrixFile, code: &AdditiveCode) -> Vec<(Expectation, String)> {
    let mut bad = Vec::new();
    for e in &file.expectations {
        let mismatch = match *e {
            Expectation::Type(t) => (code.params() != t).then(|| format!("type {} expected {t}", code.params())),
            Expectation::Rank(r) => {
                let got = rank(code).rank;
                (got != r).then(|| format!("rank {got} expected {r}"))
            }
            Expectation::Kernel(k) => {
                let got = kernel(code).ker_dim;
                (got != k).then(|| format!("kernel {got} expected {k}"))
            }
        };
        if let Some(m) = mismatch {
            bad.push((*e, m));
        }
    }
    bad
}

/// Compares the code against the file's `# expect` lines. On a mismatch the
/// witness is the first row whose removal makes every expectation hold.
fn check_expectations(file: &MatrixFile, code: &AdditiveCode) -> CheckResult {
    let bad = measured_expectations(file, code);
    if bad.is_empty() {
        return Ok(format!("{} expectation(s) met", file.expectations.len()));
    }
    let reason = bad.iter().map(|(_, m)| m.as_str()).collect::<Vec<_>>().join("; ");
    let witness = (0..file.rows.len()).find_map(|skip| {
        let rows: Vec<MixedVector> = file.rows.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, r)| r.clone()).collect();
        let c = AdditiveCode::from_rows(file.alpha, file.beta, &rows).ok()?;
        measured_expectations(file, &c).is_empty().then(|| format!("row {} ({}) breaks the expectations", skip + 1, file.rows[skip]))
    });
    Err((reason, witness))
}

fn check_rank(code: &AdditiveCode, engine: usize, guard: &SizeGuard) -> CheckResult {
    let brute = brute_span_dim(code, guard).map_err(|e| (e.to_string(), None))?;
    if brute == engine {
        Ok(format!("{engine}"))
    } else {
        Err((format!("engine {engine}, enumeration {brute}"), None))
    }
}

fn check_kernel(code: &AdditiveCode, k: &KernelReport, guard: &SizeGuard) -> CheckResult {
    let brute = brute_kernel(code, guard).map_err(|e| (e.to_string(), None))?;
    let engine: BTreeSet<BinaryVector> = k.kernel_code.codewords(guard).map_err(|e| (e.to_string(), None))?.map(|c| c.gray()).collect();
    if let Some(w) = brute.symmetric_difference(&engine).next() {
        return Err((format!("engine has {} words, enumeration {}", engine.len(), brute.len()), Some(w.to_string())));
    }
    Ok(format!("{}", k.ker_dim))
}

fn check_chi(code: &AdditiveCode, k: &KernelReport) -> CheckResult {
    let via = kernel_via_chi(code);
    let a = via.gen().rows().find(|r| !k.kernel_code.contains(r).unwrap_or(false));
    let b = k.kernel_code.gen().rows().find(|r| !via.contains(r).unwrap_or(false));
    match a.or(b) {
        None => Ok(format!("{}", via.log_size())),
        Some(w) => Err(("the two kernels differ".into(), Some(w.to_string()))),
    }
}

fn check_dual(code: &AdditiveCode, guard: &SizeGuard) -> CheckResult {
    let d = code.dual();
    let brute = brute_dual(code, guard).map_err(|e| (e.to_string(), None))?;
    let fast: BTreeSet<MixedVector> = d.codewords(guard).map_err(|e| (e.to_string(), None))?.collect();
    if let Some(w) = brute.symmetric_difference(&fast).next() {
        return Err((format!("dual has {} words, enumeration {}", fast.len(), brute.len()), Some(w.to_string())));
    }
    let (predicted, measured) = (code.params().dual(), d.params());
    if predicted != measured {
        return Err((format!("dual type {measured}, predicted {predicted}"), None));
    }
    Ok(format!("type {measured}"))
}

fn check_gray_sum(code: &AdditiveCode, samples: usize, seed: u64, guard: &SizeGuard) -> CheckResult {
    let words: Vec<MixedVector> = code.codewords(guard).map_err(|e| (e.to_string(), None))?.collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let u = &words[rng.gen_range(0..words.len())];
        let v = &words[rng.gen_range(0..words.len())];
        let lhs = u.add(v).expect("same shape").gray();
        let rhs = u.gray().xor(&v.gray()).xor(&u.double_star(v).expect("same shape").gray());
        if lhs != rhs {
            return Err(("identity fails".into(), Some(format!("u = {u}, v = {v}"))));
        }
    }
    Ok(format!("{samples} pairs"))
}
