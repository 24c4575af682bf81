//! Feasible rank / kernel values and codes that realise each of them.
//!
//! Every construction uses the generator matrix
//!
//! ```text
//!   I_κ  T' |  0      0        0
//!   0    0  |  2T_1   2I_{γ−κ} 0
//!   0    S' |  S      0        I_δ
//! ```
//!
//! and differs only in the `δ × s` block `S`, whose columns are built from
//! pair columns `e_a + e_b` and parity columns `e_1 + … + e_m`.

use crate::code::AdditiveCode;
use crate::error::{Error, Result};
use crate::params::TypeParams;
use crate::rank_kernel::choose2;
use crate::vector::MixedVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Every rank, kernel dimension and (rank, kernel) pair some code of a given
/// type attains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibleSet {
    pub params: TypeParams,
    /// Ascending.
    pub ranks: Vec<usize>,
    /// Ascending.
    pub kernels: Vec<usize>,
    pub pairs: BTreeSet<(usize, usize)>,
}

pub fn feasible(params: &TypeParams) -> Result<FeasibleSet> {
    params.validate()?;
    let base = params.log_size();
    let s = params.s();
    let ranks: Vec<usize> = (base..=base + s.min(choose2(params.delta))).collect();
    let kernels = kernel_values(params);

    let mut pairs = BTreeSet::from([(base, base)]);
    for &k in kernels.iter().filter(|&&k| k < base) {
        let k_bar = base - k;
        let lo = if k_bar % 2 == 1 { 2 } else { 1 };
        for r_bar in lo..=s.min(choose2(k_bar)) {
            pairs.insert((base + r_bar, k));
        }
    }
    Ok(FeasibleSet { params: *params, ranks, kernels, pairs })
}

/// Kernel dimensions allowed for the type, ascending.
pub(crate) fn kernel_values(params: &TypeParams) -> Vec<usize> {
    let TypeParams { gamma, delta, .. } = *params;
    let base = params.log_size();
    let mut out: Vec<usize> = match params.s() {
        0 => vec![],
        // k_bar even, at most 2⌈(δ−1)/2⌉, which is δ rounded down to even.
        1 => (1..=delta / 2).map(|j| base - 2 * j).collect(),
        _ => (gamma + delta..base.saturating_sub(1)).collect(),
    };
    out.push(base);
    out.sort_unstable();
    out.dedup();
    out
}

impl FeasibleSet {
    /// The pair table: one row per kernel value (descending), one column per
    /// rank (ascending), `*` on attainable pairs.
    pub fn table(&self) -> String {
        let width = self.ranks.iter().map(|r| r.to_string().len()).max().unwrap_or(1).max(2);
        let mut out = format!("{:>5} |", "k\\r");
        for r in &self.ranks {
            write!(out, " {r:>width$}").unwrap();
        }
        out.push('\n');
        out.push_str(&"-".repeat(7 + self.ranks.len() * (width + 1)));
        out.push('\n');
        for k in self.kernels.iter().rev() {
            write!(out, "{k:>5} |").unwrap();
            for r in &self.ranks {
                let mark = if self.pairs.contains(&(*r, *k)) { "*" } else { "" };
                write!(out, " {mark:>width$}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// The pair table as CSV, same layout as [`FeasibleSet::table`].
    pub fn csv(&self) -> String {
        let mut out = String::from("k");
        for r in &self.ranks {
            write!(out, ",{r}").unwrap();
        }
        out.push('\n');
        for k in self.kernels.iter().rev() {
            write!(out, "{k}").unwrap();
            for r in &self.ranks {
                out.push_str(if self.pairs.contains(&(*r, *k)) { ",*" } else { "," });
            }
            out.push('\n');
        }
        out
    }
}

/// Contents of the blocks `T'`, `T_1` and `S'`, which do not affect rank or
/// kernel.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FreeBlocks {
    #[default]
    Zero,
    Random(u64),
}

impl FreeBlocks {
    /// Seed 0 means zero blocks; any other seed fills them at random.
    pub fn from_seed(seed: u64) -> Self {
        if seed == 0 {
            FreeBlocks::Zero
        } else {
            FreeBlocks::Random(seed)
        }
    }
}

/// Pairs `(a, b)`, `a < b`, 0-based, in the order
/// `(0,1), (1,2), (0,2), (2,3), (1,3), (0,3), …`.
fn pair_columns(limit: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..limit).flat_map(|b| (0..b).rev().map(move |a| (a, b)))
}

fn column(delta: usize, ones: impl IntoIterator<Item = usize>) -> Vec<u8> {
    let mut c = vec![0u8; delta];
    for i in ones {
        c[i] = 1;
    }
    c
}

/// Builds the code with the given `S` columns (each of length δ); unused
/// columns of the `δ × s` block are zero.
pub fn from_s_columns(params: &TypeParams, columns: &[Vec<u8>], blocks: FreeBlocks) -> Result<AdditiveCode> {
    params.validate()?;
    let TypeParams { alpha, beta, gamma, delta, kappa } = *params;
    let s = params.s();
    if columns.len() > s || columns.iter().any(|c| c.len() != delta) {
        return Err(Error::ShapeMismatch { expected: (delta, s), found: (columns.first().map_or(delta, Vec::len), columns.len()) });
    }
    let mut rng = match blocks {
        FreeBlocks::Zero => None,
        FreeBlocks::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut bit = || rng.as_mut().map_or(0u8, |r| r.gen_range(0..2));

    let mut rows = Vec::with_capacity(gamma + delta);
    for i in 0..kappa {
        let mut v = MixedVector::zeros(alpha, beta);
        v.set_x(i, 1);
        for c in kappa..alpha {
            v.set_x(c, bit());
        }
        rows.push(v);
    }
    for t in 0..gamma - kappa {
        let mut v = MixedVector::zeros(alpha, beta);
        for c in 0..s {
            v.set_y(c, 2 * bit());
        }
        v.set_y(s + t, 2);
        rows.push(v);
    }
    for j in 0..delta {
        let mut v = MixedVector::zeros(alpha, beta);
        for c in kappa..alpha {
            v.set_x(c, bit());
        }
        for (c, col) in columns.iter().enumerate() {
            v.set_y(c, col[j]);
        }
        v.set_y(s + gamma - kappa + j, 1);
        rows.push(v);
    }
    AdditiveCode::from_rows(alpha, beta, &rows)
}

fn out_of_range(what: &'static str, value: usize, params: &TypeParams, allowed: &[usize]) -> Error {
    Error::OutOfRange { what, value, params: *params, allowed: format!("{allowed:?}") }
}

/// A code of type `params` whose Gray image has rank `r`.
pub fn construct_rank(params: &TypeParams, r: usize, blocks: FreeBlocks) -> Result<AdditiveCode> {
    let fs = feasible(params)?;
    if !fs.ranks.contains(&r) {
        return Err(out_of_range("rank", r, params, &fs.ranks));
    }
    let delta = params.delta;
    let cols: Vec<Vec<u8>> = pair_columns(delta).take(r - params.log_size()).map(|(a, b)| column(delta, [a, b])).collect();
    from_s_columns(params, &cols, blocks)
}

/// A code of type `params` whose Gray image has kernel dimension `k`.
pub fn construct_kernel(params: &TypeParams, k: usize, blocks: FreeBlocks) -> Result<AdditiveCode> {
    let fs = feasible(params)?;
    if !fs.kernels.contains(&k) {
        return Err(out_of_range("kernel dimension", k, params, &fs.kernels));
    }
    let delta = params.delta;
    let k_bar = params.log_size() - k;
    let mut cols = Vec::new();
    if k_bar > 0 {
        if params.s() == 1 {
            cols.push(column(delta, 0..k_bar));
        } else {
            // Rows 1..2⌊k̄/2⌋ and rows 2..2⌈k̄/2⌉−1, both of even weight.
            cols.push(column(delta, 0..k_bar / 2 * 2));
            let second: Vec<usize> = (1..k_bar.div_ceil(2) * 2 - 1).collect();
            if !second.is_empty() {
                cols.push(column(delta, second));
            }
        }
    }
    from_s_columns(params, &cols, blocks)
}

/// A code of type `params` with rank `r` and kernel dimension `k`.
pub fn construct_pair(params: &TypeParams, r: usize, k: usize, blocks: FreeBlocks) -> Result<AdditiveCode> {
    let fs = feasible(params)?;
    if !fs.pairs.contains(&(r, k)) {
        let reason = match crate::rank_kernel::bounds_check(params, r, k) {
            Err(Error::BoundViolation { bound, detail }) => format!("{bound}: {detail}"),
            _ => "not attainable for this type".to_string(),
        };
        return Err(Error::InfeasiblePair { rank: r, kernel: k, params: *params, reason });
    }
    let delta = params.delta;
    let base = params.log_size();
    let (r_bar, k_bar) = (r - base, base - k);
    let cols: Vec<Vec<u8>> = match r_bar {
        0 => vec![],
        1 => vec![column(delta, 0..k_bar)],
        _ => std::iter::once(column(delta, 0..k_bar))
            .chain(pair_columns(k_bar).take(r_bar - 1).map(|(a, b)| column(delta, [a, b])))
            .collect(),
    };
    from_s_columns(params, &cols, blocks)
}
