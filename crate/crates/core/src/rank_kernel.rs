//! Rank and kernel of the Gray image, computed on generators.

use crate::bits::{BinaryMatrix, BinaryVector};
use crate::code::AdditiveCode;
use crate::error::{Bound, Error, Result};
use crate::oracle::SizeGuard;
use crate::params::TypeParams;
use crate::vector::MixedVector;
use std::collections::HashSet;

pub(crate) fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Clone, Debug)]
pub struct RankReport {
    pub rank: usize,
    /// `rank − γ − 2δ`.
    pub r_bar: usize,
    /// The additive code whose Gray image is the linear span of the code's.
    pub span_code: AdditiveCode,
}

#[derive(Clone, Debug)]
pub struct KernelReport {
    pub ker_dim: usize,
    /// `γ + 2δ − ker_dim`.
    pub k_bar: usize,
    /// The additive code whose Gray image is the kernel.
    pub kernel_code: AdditiveCode,
    /// Order-four generators whose Gray images, summed over subsets, give
    /// one representative per kernel coset.
    pub coset_reps: Vec<MixedVector>,
}

/// Gray images spanning the linear span of the code: `Φ(u_i)`, `Φ(v_j)`,
/// `Φ(2v_j)`, then `Φ(2v_j*v_k)` for `j < k`.
pub fn span_generators(code: &AdditiveCode) -> BinaryMatrix {
    let gen = code.gen();
    let mut m = BinaryMatrix::new(code.params().binary_length());
    for u in gen.rows2() {
        m.push_row(u.gray());
    }
    for v in gen.rows4() {
        m.push_row(v.gray());
        m.push_row(v.double().gray());
    }
    for (v, w) in star_pairs(gen.rows4()) {
        m.push_row(v.double_star_unchecked(w).gray());
    }
    m
}

fn star_pairs(v: &[MixedVector]) -> impl Iterator<Item = (&MixedVector, &MixedVector)> {
    (0..v.len()).flat_map(move |j| (j + 1..v.len()).map(move |k| (&v[j], &v[k])))
}

pub fn rank(code: &AdditiveCode) -> RankReport {
    let rank = span_generators(code).rank();
    let gen = code.gen();
    let mut rows: Vec<MixedVector> = gen.rows().cloned().collect();
    rows.extend(star_pairs(gen.rows4()).map(|(v, w)| v.double_star_unchecked(w)));
    let span_code = AdditiveCode::span(code.alpha(), code.beta(), &rows).expect("rows share the code's shape");
    RankReport { rank, r_bar: rank - code.log_size(), span_code }
}

/// Syndrome matrix of the kernel test.
///
/// Row `i` concatenates, over all order-four generators `v_j`, the syndrome
/// of `2v_i*v_j`. A sum `Σ_{i∈I} v_i` has its Gray image in the kernel exactly
/// when the rows in `I` add to zero; order-two codewords always do.
pub fn kernel_matrix(code: &AdditiveCode) -> BinaryMatrix {
    let std = code.standard_form();
    let v = code.gen().rows4();
    let mut m = BinaryMatrix::new(v.len() * std.syndrome_len());
    for vi in v {
        let mut row = BinaryVector::zeros(0);
        for vj in v {
            row.extend(&std.syndrome(&vi.double_star_unchecked(vj)));
        }
        m.push_row(row);
    }
    m
}

pub fn kernel(code: &AdditiveCode) -> KernelReport {
    let m = kernel_matrix(code);
    let v = code.gen().rows4();
    let reps = m.row_basis_indices();
    let k_bar = reps.len();

    let mut rows: Vec<MixedVector> = code.gen().rows2().to_vec();
    rows.extend(v.iter().map(MixedVector::double));
    for sel in m.left_null_space() {
        let mut w = MixedVector::zeros(code.alpha(), code.beta());
        for i in sel.iter_ones() {
            w.add_assign_unchecked(&v[i]);
        }
        rows.push(w);
    }
    let kernel_code = AdditiveCode::span(code.alpha(), code.beta(), &rows).expect("rows share the code's shape");
    KernelReport {
        ker_dim: code.log_size() - k_bar,
        k_bar,
        kernel_code,
        coset_reps: reps.into_iter().map(|i| v[i].clone()).collect(),
    }
}

/// Proof that the cosets of the kernel tile the Gray image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverCertificate {
    pub cosets: usize,
    pub coset_size: usize,
}

/// Enumerates `Φ(K) + Φ(v_I)` for every subset `I` of the coset
/// representatives and checks that these are disjoint, of equal size, and
/// together exactly the Gray image of `code`.
pub fn kernel_coset_cover(code: &AdditiveCode, report: &KernelReport, guard: &SizeGuard) -> Result<CoverCertificate> {
    let image: HashSet<BinaryVector> = code.codewords(guard)?.map(|c| c.gray()).collect();
    let kernel: Vec<BinaryVector> = report.kernel_code.codewords(guard)?.map(|c| c.gray()).collect();
    let expect_size = 1usize << report.ker_dim;
    if kernel.len() != expect_size {
        return Err(Error::CoverViolation {
            reason: format!("kernel code has {} words, expected {expect_size}", kernel.len()),
            witness: BinaryVector::zeros(code.params().binary_length()),
        });
    }
    let reps = &report.coset_reps;
    let mut seen: HashSet<BinaryVector> = HashSet::with_capacity(image.len());
    for mask in 0u64..1 << reps.len() {
        let mut v = MixedVector::zeros(code.alpha(), code.beta());
        for (i, r) in reps.iter().enumerate() {
            if mask >> i & 1 == 1 {
                v.add_assign_unchecked(r);
            }
        }
        let shift = v.gray();
        for k in &kernel {
            let x = k.xor(&shift);
            if !image.contains(&x) {
                return Err(Error::CoverViolation { reason: format!("coset {mask} leaves the code"), witness: x });
            }
            if !seen.insert(x.clone()) {
                return Err(Error::CoverViolation { reason: format!("coset {mask} overlaps an earlier coset"), witness: x });
            }
        }
    }
    if let Some(missed) = image.iter().find(|c| !seen.contains(*c)) {
        return Err(Error::CoverViolation { reason: "codeword outside every coset".into(), witness: missed.clone() });
    }
    Ok(CoverCertificate { cosets: 1 << reps.len(), coset_size: kernel.len() })
}

/// Kernel computed through the quaternary embedding `χ`.
///
/// With `G` generating `χ(C)` and `H` its dual, the kernel of `χ(C)` is the
/// dual of the code generated by `H` and all `2g*h`; pulling back through
/// `χ` gives the kernel of `C`.
pub fn kernel_via_chi(code: &AdditiveCode) -> AdditiveCode {
    let chi = code.chi_image();
    let h: Vec<MixedVector> = chi.dual().gen().rows().cloned().collect();
    let mut stacked = h.clone();
    for g in chi.gen().rows() {
        for hj in &h {
            stacked.push(g.double_star_unchecked(hj));
        }
    }
    let n = code.alpha() + code.beta();
    let k = AdditiveCode::span(0, n, &stacked).expect("quaternary rows of one length").dual();
    let rows: Vec<MixedVector> = k
        .gen()
        .rows()
        .map(|r| MixedVector::chi_inverse(r, code.alpha()).expect("kernel lies inside the embedded code"))
        .collect();
    AdditiveCode::span(code.alpha(), code.beta(), &rows).expect("rows share the code's shape")
}

/// Checks a measured `(rank, ker)` against every structural bound for the
/// type; the error names the first bound broken.
pub fn bounds_check(params: &TypeParams, rank: usize, ker: usize) -> Result<()> {
    let base = params.log_size();
    let fail = |bound: Bound, detail: String| Err(Error::BoundViolation { bound, detail });
    let r_max = base + params.s().min(choose2(params.delta));
    if rank < base || rank > r_max {
        return fail(Bound::RankRange, format!("rank {rank} outside [{base}, {r_max}] for {params}"));
    }
    let kernels = crate::construct::kernel_values(params);
    if !kernels.contains(&ker) {
        return fail(Bound::KernelSet, format!("kernel dimension {ker} not in {kernels:?} for {params}"));
    }
    let (r_bar, k_bar) = (rank - base, base - ker);
    if (r_bar == 0) != (k_bar == 0) {
        return fail(Bound::Linearity, format!("r_bar = {r_bar}, k_bar = {k_bar}"));
    }
    if k_bar >= 2 && (r_bar < 1 || r_bar > choose2(k_bar)) {
        return fail(Bound::PairCeiling, format!("r_bar = {r_bar} not in [1, {}] for k_bar = {k_bar}", choose2(k_bar)));
    }
    if k_bar % 2 == 1 && r_bar < 2 {
        return fail(Bound::OddDeficiency, format!("k_bar = {k_bar} is odd but r_bar = {r_bar}"));
    }
    Ok(())
}
