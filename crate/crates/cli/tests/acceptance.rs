//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Run with `cargo test -p z2z4-cli --test acceptance`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::result::Result;
use std::time::{Duration, Instant};
use z2z4_cli::{run, CommandResult, EXIT_INPUT, EXIT_OK};
use z2z4_core::oracle::*;
use z2z4_core::random::{random_code, random_symmetric_zero_diagonal, random_vector, RandomCodeSpec};
use z2z4_core::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const T9: TypeParams = TypeParams::new(1, 9, 2, 5, 1);
const T18: TypeParams = TypeParams::new(1, 18, 2, 6, 1);

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(name: &str) -> (MatrixFile, AdditiveCode) {
    let text = std::fs::read_to_string(fixtures_dir().join(format!("{name}.txt"))).expect("fixture");
    let file = MatrixFile::parse(&text).expect("fixture parses");
    let code = AdditiveCode::from_rows(file.alpha, file.beta, &file.rows).expect("fixture is nonzero");
    (file, code)
}

fn z2z4(args: &[String]) -> CommandResult {
    run(std::iter::once("z2z4".to_string()).chain(args.iter().cloned()))
}

fn type_args(t: &TypeParams) -> Vec<String> {
    [("--alpha", t.alpha), ("--beta", t.beta), ("--gamma", t.gamma), ("--delta", t.delta), ("--kappa", t.kappa)]
        .iter()
        .flat_map(|(f, v)| [f.to_string(), v.to_string()])
        .collect()
}

/// Runs `construct --pair` and parses the emitted matrix.
fn cli_construct_pair(t: &TypeParams, r: usize, k: usize) -> Result<AdditiveCode, String> {
    let mut args = vec!["construct".to_string()];
    args.extend(type_args(t));
    args.extend(["--pair".to_string(), r.to_string(), k.to_string()]);
    construct_with(args)
}

fn cli_construct_one(t: &TypeParams, flag: &str, v: usize) -> Result<AdditiveCode, String> {
    let mut args = vec!["construct".to_string()];
    args.extend(type_args(t));
    args.extend([flag.to_string(), v.to_string()]);
    construct_with(args)
}

fn construct_with(args: Vec<String>) -> Result<AdditiveCode, String> {
    let r = z2z4(&args);
    ensure!(r.exit_code == EXIT_OK, "construct {:?} exited {}: {}", &args[11..], r.exit_code, r.stderr);
    let f = MatrixFile::parse(&r.stdout).map_err(|e| e.to_string())?;
    AdditiveCode::from_rows(f.alpha, f.beta, &f.rows).map_err(|e| e.to_string())
}

/// Attainable cells read back from `feasible --format csv`.
fn cli_pairs(t: &TypeParams) -> Result<BTreeSet<(usize, usize)>, String> {
    let mut args = vec!["feasible".to_string()];
    args.extend(type_args(t));
    args.extend(["--format".to_string(), "csv".to_string()]);
    let r = z2z4(&args);
    ensure!(r.exit_code == EXIT_OK, "feasible exited {}", r.exit_code);
    let mut lines = r.stdout.lines();
    let ranks: Vec<usize> = lines.next().unwrap_or("").split(',').skip(1).map(|v| v.parse().unwrap()).collect();
    let mut pairs = BTreeSet::new();
    for line in lines {
        let mut cells = line.split(',');
        let k: usize = cells.next().unwrap().parse().map_err(|_| format!("bad row {line}"))?;
        for (r, c) in ranks.iter().zip(cells) {
            if c == "*" {
                pairs.insert((*r, k));
            }
        }
    }
    Ok(pairs)
}

fn random_codes(seed: u64, n: usize, spec: RandomCodeSpec) -> Vec<AdditiveCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_code(&mut rng, &spec)).collect()
}

fn ac1() -> Outcome {
    let g = SizeGuard::default();
    for r in 12..=15 {
        let code = cli_construct_one(&T9, "--rank", r)?;
        let (fast, brute) = (rank(&code).rank, brute_span_dim(&code, &g).map_err(|e| e.to_string())?);
        ensure!(fast == r && brute == r, "construct --rank {r}: engine {fast}, enumeration {brute}");
    }
    for r in 13..=15 {
        let (_, code) = fixture(&format!("rank_s{r}"));
        let (fast, brute) = (rank(&code).rank, brute_span_dim(&code, &g).map_err(|e| e.to_string())?);
        ensure!(fast == r && brute == r, "printed S_{r}: engine {fast}, enumeration {brute}");
    }
    Ok("ranks 12..15 constructed; printed S_13..S_15 measured".into())
}

fn ac2() -> Outcome {
    let g = SizeGuard::default();
    for k in [7, 8, 9, 10, 12] {
        let code = cli_construct_one(&T9, "--kernel", k)?;
        let fast = kernel(&code).ker_dim;
        let brute = log2_size(brute_kernel(&code, &g).map_err(|e| e.to_string())?.len());
        ensure!(fast == k && brute == Some(k), "construct --kernel {k}: engine {fast}, enumeration {brute:?}");
    }
    for k in [10, 9, 8, 7] {
        let (_, code) = fixture(&format!("kernel_s{k}"));
        let fast = kernel(&code).ker_dim;
        let brute = log2_size(brute_kernel(&code, &g).map_err(|e| e.to_string())?.len());
        ensure!(fast == k && brute == Some(k), "printed S_{k}: engine {fast}, enumeration {brute:?}");
    }
    Ok("kernels 7 8 9 10 12 constructed; printed S_10..S_7 measured".into())
}

fn ac3() -> Outcome {
    let first: BTreeSet<(usize, usize)> =
        [(12, 12), (13, 10), (13, 8), (14, 9), (14, 8), (14, 7), (15, 9), (15, 8), (15, 7)].into_iter().collect();
    let got = cli_pairs(&T9)?;
    ensure!(got == first, "(1,9;2,5;1) table differs: {got:?}");

    let g = SizeGuard::default();
    for &(r, k) in &first {
        let code = cli_construct_pair(&T9, r, k)?;
        let brute_r = brute_span_dim(&code, &g).map_err(|e| e.to_string())?;
        let brute_k = log2_size(brute_kernel(&code, &g).map_err(|e| e.to_string())?.len());
        ensure!(brute_r == r && brute_k == Some(k), "pair ({r},{k}) measured ({brute_r},{brute_k:?})");
    }

    // Printed rows of the second table: kernel value and its starred ranks.
    let rows: [(usize, std::ops::RangeInclusive<usize>); 6] =
        [(14, 14..=14), (12, 15..=15), (11, 16..=17), (10, 15..=20), (9, 16..=24), (8, 15..=25)];
    let second: BTreeSet<(usize, usize)> = rows.into_iter().flat_map(|(k, rs)| rs.map(move |r| (r, k))).collect();
    let got = cli_pairs(&T18)?;
    ensure!(got == second, "(1,18;2,6;1) table differs: {got:?}");
    for &(r, k) in &second {
        let code = cli_construct_pair(&T18, r, k)?;
        let m = (rank(&code).rank, kernel(&code).ker_dim);
        ensure!(m == (r, k), "pair ({r},{k}) measured {m:?}");
    }
    Ok(format!("{} + {} cells match; every cell constructed", first.len(), second.len()))
}

fn ac4() -> Outcome {
    let g = SizeGuard::default();
    let pairs = [(13, 10), (13, 8), (14, 9), (14, 8), (14, 7), (15, 9), (15, 8), (15, 7)];
    for (r, k) in pairs {
        let (_, code) = fixture(&format!("pair_s{r}_{k}"));
        let fast = (rank(&code).rank, kernel(&code).ker_dim);
        let brute_r = brute_span_dim(&code, &g).map_err(|e| e.to_string())?;
        let brute_k = log2_size(brute_kernel(&code, &g).map_err(|e| e.to_string())?.len());
        ensure!(fast == (r, k), "S_{{{r},{k}}}: engine {fast:?}");
        ensure!(brute_r == r && brute_k == Some(k), "S_{{{r},{k}}}: enumeration ({brute_r},{brute_k:?})");
    }
    Ok("8 printed matrices measured".into())
}

fn ac5() -> Outcome {
    let g = SizeGuard::default();
    let codes = random_codes(500, 500, RandomCodeSpec::default());
    let mut nonlinear = 0;
    for (i, code) in codes.iter().enumerate() {
        let t = code.params();
        let ctx = || format!("code {i} type {t}");
        let rr = rank(code);
        let kr = kernel(code);
        // (a)
        let brute_r = brute_span_dim(code, &g).map_err(|e| e.to_string())?;
        ensure!(rr.rank == brute_r, "{}: rank {} vs enumeration {brute_r}", ctx(), rr.rank);
        // (b)
        let brute_k = brute_kernel(code, &g).map_err(|e| e.to_string())?;
        ensure!(log2_size(brute_k.len()) == Some(kr.ker_dim), "{}: kernel dimension", ctx());
        let engine_k: BTreeSet<BinaryVector> = kr.kernel_code.codewords(&g).map_err(|e| e.to_string())?.map(|c| c.gray()).collect();
        ensure!(engine_k == brute_k, "{}: kernel sets differ", ctx());
        // (c) (d)
        bounds_check(&t, rr.rank, kr.ker_dim).map_err(|e| format!("{}: {e}", ctx()))?;
        let base = t.gamma + 2 * t.delta;
        ensure!(rr.rank >= base && rr.rank <= base + t.s().min(t.delta * t.delta.saturating_sub(1) / 2), "{}: rank bounds", ctx());
        let kb = kr.k_bar;
        ensure!(rr.r_bar <= kb * kb.saturating_sub(1) / 2, "{}: r_bar {} > C({kb},2)", ctx(), rr.r_bar);
        // (e)
        ensure!(!(rr.r_bar == 1 && kb % 2 == 1), "{}: r_bar 1 with odd k_bar {kb}", ctx());
        // (f)
        let words: Vec<MixedVector> = code.codewords(&g).map_err(|e| e.to_string())?.collect();
        let image: BTreeSet<BinaryVector> = words.iter().map(|w| w.gray()).collect();
        ensure!(brute_k.is_subset(&image), "{}: kernel not inside code", ctx());
        for w in &words {
            ensure!(rr.span_code.contains(w).map_err(|e| e.to_string())?, "{}: codeword outside span", ctx());
        }
        // (g)
        kernel_coset_cover(code, &kr, &g).map_err(|e| format!("{}: {e}", ctx()))?;
        nonlinear += usize::from(kb > 0);
    }
    Ok(format!("500 codes, {nonlinear} nonlinear"))
}

fn ac6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let shapes: Vec<(usize, usize)> = (0..20)
        .map(|i| match i {
            0 => (0, 1),
            1 => (1, 0),
            2 => (0, 64),
            3 => (64, 64),
            _ => (rng.gen_range(0..40), rng.gen_range(1..90)),
        })
        .collect();
    for &(a, b) in &shapes {
        for _ in 0..500 {
            let u = random_vector(&mut rng, a, b);
            let v = random_vector(&mut rng, a, b);
            let lhs = u.add(&v).unwrap().gray();
            let rhs = u.gray().xor(&v.gray()).xor(&u.double_star(&v).unwrap().gray());
            ensure!(lhs == rhs, "identity fails at shape ({a},{b}): u = {u}, v = {v}");
        }
    }
    Ok("10000 pairs over 20 shapes".into())
}

fn ac7() -> Outcome {
    let g = SizeGuard::default();
    for (i, code) in random_codes(700, 100, RandomCodeSpec::default()).iter().enumerate() {
        let (a, b) = (code.alpha(), code.beta());
        ensure!(a + 2 * b <= 20, "code {i}: ambient too large");
        let d = code.dual();
        let brute = brute_dual(code, &g).map_err(|e| e.to_string())?;
        ensure!(brute_codewords(&d, &g).map_err(|e| e.to_string())? == brute, "code {i}: dual differs from annihilator");
        ensure!(d.params() == code.params().dual(), "code {i}: dual type {} vs {}", d.params(), code.params().dual());
        ensure!(code.log_size() + d.log_size() == a + 2 * b, "code {i}: |C||C^perp| != ambient");
    }
    Ok("100 codes".into())
}

fn ac8() -> Outcome {
    let spec = RandomCodeSpec { max_alpha: 3, max_beta: 6, max_log_size: 10 };
    for (i, code) in random_codes(800, 100, spec).iter().enumerate() {
        let k = kernel(code).kernel_code;
        ensure!(kernel_via_chi(code).equal_as_sets(&k).map_err(|e| e.to_string())?, "code {i} type {}", code.params());
    }
    Ok("100 codes".into())
}

fn ac9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..200 {
        let m = 2 * rng.gen_range(1..=6) + 1;
        let rows = random_symmetric_zero_diagonal(&mut rng, m);
        let r = BinaryMatrix::from_rows(m, rows).rank();
        ensure!(r < m, "matrix {i} of order {m} has full rank");
    }
    Ok("200 matrices of odd order 3..13".into())
}

fn ac10() -> Outcome {
    let mut n = 0;
    let mut entries: Vec<PathBuf> = std::fs::read_dir(fixtures_dir())
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    entries.sort();
    for p in &entries {
        let text = std::fs::read_to_string(p).map_err(|e| e.to_string())?;
        let once = MatrixFile::parse(&text).map_err(|e| format!("{}: {e}", p.display()))?;
        let twice = MatrixFile::parse(&once.serialize()).map_err(|e| format!("{}: {e}", p.display()))?;
        ensure!(once == twice, "{}: round trip changed the file", p.display());
        ensure!(once.serialize() == twice.serialize(), "{}: serialization unstable", p.display());
        n += 1;
    }
    ensure!(n >= 16, "only {n} fixtures found");

    let corrupted = [
        "",
        "# only a comment\n",
        "1\n",
        "1 x\n",
        "0 0\n",
        "1 2\n1 0 0\n",
        "1 2\n1 | 0 4\n",
        "1 2\n2 | 0 1\n",
        "1 2\n1 | 0\n",
        "1 2\n1 | 0 1 1\n",
        "1 2\n1 | 0 | 1\n",
        "1 2\n# expect rank twelve\n1 | 0 1\n",
        "1 2\n# expect type (1,2;0,1)\n1 | 0 1\n",
    ];
    let dir = std::env::temp_dir().join(format!("z2z4-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    for (i, text) in corrupted.iter().enumerate() {
        let p = dir.join(format!("bad{i}.txt"));
        std::fs::write(&p, text).map_err(|e| e.to_string())?;
        for cmd in ["analyze", "dual", "verify"] {
            let r = z2z4(&[cmd.to_string(), p.to_string_lossy().into_owned()]);
            ensure!(r.exit_code == EXIT_INPUT, "{cmd} on {text:?} exited {}", r.exit_code);
        }
    }
    Ok(format!("{n} fixtures round-trip; {} corrupted inputs exit 2", corrupted.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1 rank example", ac1, Duration::from_secs(5)),
        ("AC2 kernel example", ac2, Duration::from_secs(10)),
        ("AC3 pair tables", ac3, Duration::from_secs(60)),
        ("AC4 printed pair matrices", ac4, Duration::from_secs(60)),
        ("AC5 random property suite", ac5, Duration::from_secs(300)),
        ("AC6 gray sum identity", ac6, Duration::from_secs(1)),
        ("AC7 duality", ac7, Duration::from_secs(120)),
        ("AC8 kernel via chi", ac8, Duration::from_secs(60)),
        ("AC9 odd symmetric matrices", ac9, Duration::from_secs(60)),
        ("AC10 file format", ac10, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > limit => Err(format!("took {took:.2?}, limit {limit:?}")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  {name:<28} {detail} ({took:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name:<28} {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 10 criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
