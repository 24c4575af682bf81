//! Seeded random codes for property tests and benchmarks.

use crate::code::AdditiveCode;
use crate::construct::{from_s_columns, FreeBlocks};
use crate::params::TypeParams;
use crate::vector::MixedVector;
use rand::seq::SliceRandom;
use rand::Rng;

/// Shape limits for [`random_code`].
#[derive(Clone, Copy, Debug)]
pub struct RandomCodeSpec {
    pub max_alpha: usize,
    pub max_beta: usize,
    /// Upper bound on `γ + 2δ`.
    pub max_log_size: usize,
}

impl Default for RandomCodeSpec {
    fn default() -> Self {
        Self { max_alpha: 4, max_beta: 8, max_log_size: 12 }
    }
}

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, alpha: usize, beta: usize) -> MixedVector {
    let x: Vec<u8> = (0..alpha).map(|_| rng.gen_range(0..2)).collect();
    let y: Vec<u8> = (0..beta).map(|_| rng.gen_range(0..4)).collect();
    MixedVector::from_symbols(&x, &y).expect("symbols in range")
}

/// A random feasible type within `spec`.
pub fn random_type<R: Rng + ?Sized>(rng: &mut R, spec: &RandomCodeSpec) -> TypeParams {
    loop {
        let alpha = rng.gen_range(0..=spec.max_alpha);
        let beta = rng.gen_range(0..=spec.max_beta);
        let delta = rng.gen_range(0..=beta.min(spec.max_log_size / 2));
        let kappa = rng.gen_range(0..=alpha);
        // γ − κ ≤ β − δ keeps the type feasible; the log-size cap bounds it too.
        let Some(cap) = spec.max_log_size.checked_sub(2 * delta + kappa) else { continue };
        let gamma = kappa + rng.gen_range(0..=(beta - delta).min(cap));
        let t = TypeParams { alpha, beta, gamma, delta, kappa };
        if t.is_feasible() && t.log_size() <= spec.max_log_size {
            return t;
        }
    }
}

/// A random nonzero code within `spec`.
///
/// A third of the draws span a few random vectors (some doubled, so
/// order-two content is common). The rest start from a random standard form
/// of a random type, with every block random, and hide it behind random row
/// operations and coordinate permutations.
pub fn random_code<R: Rng + ?Sized>(rng: &mut R, spec: &RandomCodeSpec) -> AdditiveCode {
    loop {
        let code = if rng.gen_bool(1.0 / 3.0) { spanned(rng, spec) } else { disguised(rng, spec) };
        if let Some(c) = code {
            if !c.is_zero() && c.log_size() <= spec.max_log_size {
                return c;
            }
        }
    }
}

fn spanned<R: Rng + ?Sized>(rng: &mut R, spec: &RandomCodeSpec) -> Option<AdditiveCode> {
    let alpha = rng.gen_range(0..=spec.max_alpha);
    let beta = rng.gen_range(0..=spec.max_beta);
    if alpha + beta == 0 {
        return None;
    }
    let n = rng.gen_range(1..=spec.max_log_size.clamp(1, 6));
    let rows: Vec<MixedVector> = (0..n)
        .map(|_| {
            let v = random_vector(rng, alpha, beta);
            if rng.gen_bool(0.3) {
                v.double()
            } else {
                v
            }
        })
        .collect();
    AdditiveCode::span(alpha, beta, &rows).ok()
}

fn disguised<R: Rng + ?Sized>(rng: &mut R, spec: &RandomCodeSpec) -> Option<AdditiveCode> {
    // Types with δ ≤ 1 or s = 0 are always linear; keep only a few of them.
    let t = loop {
        let t = random_type(rng, spec);
        if (t.delta >= 2 && t.s() >= 1) || rng.gen_bool(0.15) {
            break t;
        }
    };
    let s = t.s();
    let cols: Vec<Vec<u8>> = (0..s).map(|_| (0..t.delta).map(|_| rng.gen_range(0..4)).collect()).collect();
    let base = from_s_columns(&t, &cols, FreeBlocks::Random(rng.gen())).ok()?;

    let mut rows: Vec<MixedVector> = base.gen().rows().cloned().collect();
    // Random row operations: add a random multiple of one row to another.
    for _ in 0..2 * rows.len() {
        let (i, j) = (rng.gen_range(0..rows.len()), rng.gen_range(0..rows.len()));
        if i != j {
            let add = rows[j].scale(rng.gen_range(1..4));
            rows[i] = rows[i].add(&add).expect("same shape");
        }
    }
    rows.shuffle(rng);
    let mut xp: Vec<usize> = (0..t.alpha).collect();
    let mut yp: Vec<usize> = (0..t.beta).collect();
    xp.shuffle(rng);
    yp.shuffle(rng);
    let rows: Vec<MixedVector> = rows.iter().map(|r| r.permuted(&xp, &yp)).collect();
    AdditiveCode::span(t.alpha, t.beta, &rows).ok()
}

/// A random symmetric `m × m` F2 matrix with zero diagonal, as rows.
pub fn random_symmetric_zero_diagonal<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Vec<crate::bits::BinaryVector> {
    let mut rows = vec![crate::bits::BinaryVector::zeros(m); m];
    for i in 0..m {
        for j in i + 1..m {
            if rng.gen_bool(0.5) {
                rows[i].set(j, true);
                rows[j].set(i, true);
            }
        }
    }
    rows
}
