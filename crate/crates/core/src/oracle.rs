//! Brute-force reference computations.
//!
//! Everything here works from set definitions over full enumerations and has
//! its own elimination routine; nothing is shared with the fast engines.

use crate::bits::BinaryVector;
use crate::code::AdditiveCode;
use crate::error::{Error, Result};
use crate::vector::MixedVector;
use rayon::prelude::*;
use std::collections::{BTreeSet, HashSet};

/// Limits on exhaustive enumeration. Exceeding one is an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    /// Largest `log2 |C|` that may be enumerated.
    pub max_codeword_bits: usize,
    /// Largest `log2 (2^α 4^β)` that may be enumerated.
    pub max_ambient_log2: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        Self { max_codeword_bits: 24, max_ambient_log2: 26 }
    }
}

impl SizeGuard {
    pub fn check_codewords(&self, log_size: usize) -> Result<()> {
        if log_size > self.max_codeword_bits {
            return Err(Error::GuardExceeded { what: "codeword enumeration (log2 |C|)", needed: log_size, limit: self.max_codeword_bits });
        }
        Ok(())
    }

    pub fn check_ambient(&self, alpha: usize, beta: usize) -> Result<()> {
        let needed = alpha + 2 * beta;
        if needed > self.max_ambient_log2 {
            return Err(Error::GuardExceeded { what: "ambient enumeration (log2 2^a 4^b)", needed, limit: self.max_ambient_log2 });
        }
        Ok(())
    }
}

/// Gray images of every codeword, in enumeration order.
pub fn gray_image(code: &AdditiveCode, guard: &SizeGuard) -> Result<Vec<BinaryVector>> {
    Ok(code.codewords(guard)?.map(|c| c.gray()).collect())
}

/// Dimension of the F2 span of the Gray image, by eliminating every image
/// vector.
pub fn brute_span_dim(code: &AdditiveCode, guard: &SizeGuard) -> Result<usize> {
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut leads: Vec<usize> = Vec::new();
    for c in code.codewords(guard)? {
        let mut v: Vec<u64> = c.gray().words().to_vec();
        for (b, &lead) in basis.iter().zip(&leads) {
            if v[lead / 64] >> (lead % 64) & 1 == 1 {
                for (w, bw) in v.iter_mut().zip(b) {
                    *w ^= bw;
                }
            }
        }
        if let Some(lead) = highest_bit(&v) {
            // Keep the basis fully reduced on its leading bits.
            for b in basis.iter_mut() {
                if b[lead / 64] >> (lead % 64) & 1 == 1 {
                    for (bw, w) in b.iter_mut().zip(&v) {
                        *bw ^= w;
                    }
                }
            }
            basis.push(v);
            leads.push(lead);
        }
    }
    Ok(basis.len())
}

fn highest_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().rev().find(|(_, w)| **w != 0).map(|(i, w)| 64 * i + 63 - w.leading_zeros() as usize)
}

/// Membership index over a set of binary vectors of one length.
enum Index {
    /// One bit per possible vector, for lengths up to 26.
    Bitmap(Vec<u64>),
    Words(HashSet<u64>),
    Vectors(HashSet<BinaryVector>),
}

impl Index {
    fn build(words: &[BinaryVector], n: usize) -> Self {
        if n <= 26 {
            let mut bits = vec![0u64; (1usize << n).div_ceil(64)];
            for w in words {
                let k = single_word(w) as usize;
                bits[k / 64] |= 1 << (k % 64);
            }
            Index::Bitmap(bits)
        } else if n <= 64 {
            Index::Words(words.iter().map(single_word).collect())
        } else {
            Index::Vectors(words.iter().cloned().collect())
        }
    }
}

fn single_word(v: &BinaryVector) -> u64 {
    v.words().first().copied().unwrap_or(0)
}

/// The kernel `{x : C + x = C}` of the Gray image, as a set.
///
/// Candidates range over the image itself: `0 ∈ C` forces `K(C) ⊆ C`.
pub fn brute_kernel(code: &AdditiveCode, guard: &SizeGuard) -> Result<BTreeSet<BinaryVector>> {
    let image = gray_image(code, guard)?;
    let n = code.params().binary_length();
    let index = Index::build(&image, n);
    let kernel: Vec<BinaryVector> = match &index {
        Index::Bitmap(bits) => {
            let ws: Vec<u64> = image.iter().map(single_word).collect();
            image
                .par_iter()
                .zip(ws.par_iter())
                .filter(|(_, &x)| {
                    ws.iter().all(|&c| {
                        let k = (c ^ x) as usize;
                        bits[k / 64] >> (k % 64) & 1 == 1
                    })
                })
                .map(|(v, _)| v.clone())
                .collect()
        }
        Index::Words(set) => {
            let ws: Vec<u64> = image.iter().map(single_word).collect();
            image
                .par_iter()
                .zip(ws.par_iter())
                .filter(|(_, &x)| ws.iter().all(|&c| set.contains(&(c ^ x))))
                .map(|(v, _)| v.clone())
                .collect()
        }
        Index::Vectors(set) => image
            .par_iter()
            .filter(|x| image.iter().all(|c| set.contains(&c.xor(x))))
            .cloned()
            .collect(),
    };
    Ok(kernel.into_iter().collect())
}

/// F2 dimension of a set known to be a subspace.
pub fn log2_size(set_len: usize) -> Option<usize> {
    set_len.is_power_of_two().then(|| set_len.trailing_zeros() as usize)
}

/// True iff the Gray image is closed under XOR.
pub fn brute_is_linear(code: &AdditiveCode, guard: &SizeGuard) -> Result<bool> {
    let image = gray_image(code, guard)?;
    let set: HashSet<&BinaryVector> = image.iter().collect();
    Ok(image.par_iter().all(|a| image.iter().all(|b| set.contains(&a.xor(b)))))
}

/// Every vector of `Z2^α × Z4^β` orthogonal to all generators of `code`.
pub fn brute_dual(code: &AdditiveCode, guard: &SizeGuard) -> Result<BTreeSet<MixedVector>> {
    let (alpha, beta) = (code.alpha(), code.beta());
    guard.check_ambient(alpha, beta)?;
    let gens: Vec<MixedVector> = code.gen().rows().cloned().collect();
    let total = 1u64 << (alpha + 2 * beta);
    let found: Vec<MixedVector> = (0..total)
        .into_par_iter()
        .filter_map(|k| {
            let v = ambient_vector(k, alpha, beta);
            gens.iter().all(|g| g.inner_product(&v).expect("same shape") == 0).then_some(v)
        })
        .collect();
    Ok(found.into_iter().collect())
}

/// The `k`-th vector of the ambient space: low `α` bits are the binary part,
/// then two bits per quaternary symbol.
pub fn ambient_vector(k: u64, alpha: usize, beta: usize) -> MixedVector {
    let x: Vec<u8> = (0..alpha).map(|i| (k >> i & 1) as u8).collect();
    let y: Vec<u8> = (0..beta).map(|j| (k >> (alpha + 2 * j) & 3) as u8).collect();
    MixedVector::from_symbols(&x, &y).expect("symbols in range")
}

/// Every codeword as a set.
pub fn brute_codewords(code: &AdditiveCode, guard: &SizeGuard) -> Result<BTreeSet<MixedVector>> {
    Ok(code.codewords(guard)?.collect())
}

/// Dimension of `{c_X : c ∈ C, 2c = 0}` by enumeration.
pub fn brute_kappa(code: &AdditiveCode, guard: &SizeGuard) -> Result<usize> {
    let xs: HashSet<BinaryVector> = code.codewords(guard)?.filter(|c| c.order() <= 2).map(|c| c.x_bits().clone()).collect();
    Ok(log2_size(xs.len()).expect("projection of a group is a group"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(x: &[u8], y: &[u8]) -> MixedVector {
        MixedVector::from_symbols(x, y).unwrap()
    }

    #[test]
    fn guard_refuses() {
        let g = SizeGuard { max_codeword_bits: 1, max_ambient_log2: 2 };
        let c = AdditiveCode::from_rows(0, 1, &[mv(&[], &[1])]).unwrap();
        assert!(matches!(brute_span_dim(&c, &g), Err(Error::GuardExceeded { .. })));
        assert!(matches!(brute_dual(&AdditiveCode::full(1, 1).unwrap(), &g), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn quaternary_repetition_is_linear() {
        let c = AdditiveCode::from_rows(0, 2, &[mv(&[], &[1, 1])]).unwrap();
        let g = SizeGuard::default();
        assert_eq!(brute_span_dim(&c, &g).unwrap(), 2);
        assert_eq!(brute_kernel(&c, &g).unwrap().len(), 4);
        assert!(brute_is_linear(&c, &g).unwrap());
    }

    #[test]
    fn nonlinear_pair() {
        // Rows (1,0,1) and (0,1,1): 2·v1*v2 = (0,0,2) is not a codeword.
        let c = AdditiveCode::from_rows(0, 3, &[mv(&[], &[1, 0, 1]), mv(&[], &[0, 1, 1])]).unwrap();
        let g = SizeGuard::default();
        assert_eq!(brute_span_dim(&c, &g).unwrap(), 5);
        assert_eq!(log2_size(brute_kernel(&c, &g).unwrap().len()), Some(2));
        assert!(!brute_is_linear(&c, &g).unwrap());
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let d = brute_dual(&AdditiveCode::full(2, 1).unwrap(), &SizeGuard::default()).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d.iter().next().unwrap().is_zero());
    }

    #[test]
    fn ambient_enumeration_is_a_bijection() {
        let all: BTreeSet<MixedVector> = (0..64).map(|k| ambient_vector(k, 2, 2)).collect();
        assert_eq!(all.len(), 64);
    }
}
