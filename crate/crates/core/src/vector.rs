//! Elements of `Z2^α × Z4^β`.
//!
//! The binary part is packed one bit per symbol. The quaternary part is packed
//! two bits per symbol as a pair of bit planes, `y = lo + 2·hi`, so that every
//! group operation is a handful of word-wide boolean operations:
//!
//! * sum: `lo = a.lo ^ b.lo`, `hi = a.hi ^ b.hi ^ (a.lo & b.lo)`
//! * product: `lo = a.lo & b.lo`, `hi = (a.lo & b.hi) ^ (a.hi & b.lo)`
//! * Gray map: `φ(y) = (hi, hi ^ lo)`, i.e. 0→00, 1→01, 2→11, 3→10

use crate::bits::BinaryVector;
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedVector {
    x: BinaryVector,
    lo: BinaryVector,
    hi: BinaryVector,
}

impl MixedVector {
    pub fn zeros(alpha: usize, beta: usize) -> Self {
        Self {
            x: BinaryVector::zeros(alpha),
            lo: BinaryVector::zeros(beta),
            hi: BinaryVector::zeros(beta),
        }
    }

    /// Builds a vector from symbol slices, rejecting out-of-range symbols.
    pub fn from_symbols(x: &[u8], y: &[u8]) -> Result<Self> {
        let mut v = Self::zeros(x.len(), y.len());
        for (i, &s) in x.iter().enumerate() {
            if s > 1 {
                return Err(Error::InvalidSymbol { position: i, value: s, modulus: 2 });
            }
            v.x.set(i, s == 1);
        }
        for (j, &s) in y.iter().enumerate() {
            if s > 3 {
                return Err(Error::InvalidSymbol { position: x.len() + j, value: s, modulus: 4 });
            }
            v.set_y(j, s);
        }
        Ok(v)
    }

    /// Quaternary vector (α = 0).
    pub fn quaternary(y: &[u8]) -> Result<Self> {
        Self::from_symbols(&[], y)
    }

    #[inline]
    pub fn alpha(&self) -> usize {
        self.x.len()
    }

    #[inline]
    pub fn beta(&self) -> usize {
        self.lo.len()
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.alpha(), self.beta())
    }

    #[inline]
    pub fn x(&self, i: usize) -> u8 {
        u8::from(self.x.get(i))
    }

    #[inline]
    pub fn y(&self, j: usize) -> u8 {
        u8::from(self.lo.get(j)) | (u8::from(self.hi.get(j)) << 1)
    }

    pub fn set_x(&mut self, i: usize, value: u8) {
        self.x.set(i, value & 1 == 1);
    }

    pub fn set_y(&mut self, j: usize, value: u8) {
        self.lo.set(j, value & 1 == 1);
        self.hi.set(j, value & 2 == 2);
    }

    pub fn x_symbols(&self) -> Vec<u8> {
        (0..self.alpha()).map(|i| self.x(i)).collect()
    }

    pub fn y_symbols(&self) -> Vec<u8> {
        (0..self.beta()).map(|j| self.y(j)).collect()
    }

    /// Binary part as a bit vector.
    pub fn x_bits(&self) -> &BinaryVector {
        &self.x
    }

    /// Low bit plane of the quaternary part (the symbols that are odd).
    pub fn y_low(&self) -> &BinaryVector {
        &self.lo
    }

    /// High bit plane of the quaternary part.
    pub fn y_high(&self) -> &BinaryVector {
        &self.hi
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.lo.is_zero() && self.hi.is_zero()
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch { expected: self.shape(), found: other.shape() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        out.sub_assign_unchecked(other);
        Ok(out)
    }

    pub fn star(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.star_unchecked(other))
    }

    /// `2·(u * v)`, the nonlinearity term of the Gray map.
    pub fn double_star(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.double_star_unchecked(other))
    }

    /// Mixed inner product `2·Σ_X u_i v_i + Σ_Y u_j v_j (mod 4)`.
    pub fn inner_product(&self, other: &Self) -> Result<u8> {
        self.check_shape(other)?;
        Ok(self.inner_product_unchecked(other))
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        debug_assert_eq!(self.shape(), other.shape());
        self.x.xor_assign(&other.x);
        let lo = self.lo.words_mut();
        let hi = self.hi.words_mut();
        for k in 0..lo.len() {
            let carry = lo[k] & other.lo.words()[k];
            lo[k] ^= other.lo.words()[k];
            hi[k] ^= other.hi.words()[k] ^ carry;
        }
    }

    pub(crate) fn sub_assign_unchecked(&mut self, other: &Self) {
        let neg = other.neg();
        self.add_assign_unchecked(&neg);
    }

    /// Adds `c · other` in place, `c` taken mod 4.
    pub(crate) fn add_scaled_unchecked(&mut self, c: u8, other: &Self) {
        match c & 3 {
            0 => {}
            1 => self.add_assign_unchecked(other),
            2 => self.add_assign_unchecked(&other.double()),
            _ => self.sub_assign_unchecked(other),
        }
    }

    pub(crate) fn star_unchecked(&self, other: &Self) -> Self {
        debug_assert_eq!(self.shape(), other.shape());
        let x = self.x.and(&other.x);
        let lo = self.lo.and(&other.lo);
        let mut hi = self.lo.and(&other.hi);
        hi.xor_assign(&self.hi.and(&other.lo));
        Self { x, lo, hi }
    }

    pub(crate) fn double_star_unchecked(&self, other: &Self) -> Self {
        // 2·(u*v): binary part vanishes, quaternary part is 2·(u.lo & v.lo).
        Self {
            x: BinaryVector::zeros(self.alpha()),
            lo: BinaryVector::zeros(self.beta()),
            hi: self.lo.and(&other.lo),
        }
    }

    pub(crate) fn inner_product_unchecked(&self, other: &Self) -> u8 {
        let xx = self.x.and_count(&other.x);
        let ll = self.lo.and_count(&other.lo);
        let cross = self.lo.and_count(&other.hi) + self.hi.and_count(&other.lo);
        ((2 * xx + ll + 2 * cross) % 4) as u8
    }

    pub fn neg(&self) -> Self {
        Self {
            x: self.x.clone(),
            lo: self.lo.clone(),
            hi: self.hi.xor(&self.lo),
        }
    }

    pub fn double(&self) -> Self {
        Self {
            x: BinaryVector::zeros(self.alpha()),
            lo: BinaryVector::zeros(self.beta()),
            hi: self.lo.clone(),
        }
    }

    /// `c · self` with `c` taken mod 4.
    pub fn scale(&self, c: u8) -> Self {
        match c & 3 {
            0 => Self::zeros(self.alpha(), self.beta()),
            1 => self.clone(),
            2 => self.double(),
            _ => self.neg(),
        }
    }

    /// Additive order: 1 for zero, 2 if doubling kills it, else 4.
    pub fn order(&self) -> u8 {
        if !self.lo.is_zero() {
            4
        } else if self.x.is_zero() && self.hi.is_zero() {
            1
        } else {
            2
        }
    }

    /// Extended Gray map onto `Z2^(α+2β)`.
    pub fn gray(&self) -> BinaryVector {
        let mut out = self.x.clone();
        let second = self.hi.xor(&self.lo);
        out.extend(&BinaryVector::interleave(&self.hi, &second));
        out
    }

    /// Inverse Gray map for a known `(α, β)` split.
    pub fn gray_inverse(b: &BinaryVector, alpha: usize, beta: usize) -> Result<Self> {
        if b.len() != alpha + 2 * beta {
            return Err(Error::LengthMismatch { expected: alpha + 2 * beta, found: b.len() });
        }
        let x = b.slice(0, alpha);
        let (hi, second) = b.slice(alpha, 2 * beta).deinterleave();
        let lo = hi.xor(&second);
        Ok(Self { x, lo, hi })
    }

    /// Embedding into `Z4^(α+β)` with binary symbols sent 0→0, 1→2.
    ///
    /// The result is returned as a quaternary vector (α = 0).
    pub fn chi(&self) -> Self {
        let mut lo = BinaryVector::zeros(self.alpha());
        lo.extend(&self.lo);
        let mut hi = self.x.clone();
        hi.extend(&self.hi);
        Self { x: BinaryVector::zeros(0), lo, hi }
    }

    /// Inverse of [`MixedVector::chi`]; `None` if a leading coordinate is odd.
    pub fn chi_inverse(q: &Self, alpha: usize) -> Option<Self> {
        if q.alpha() != 0 || q.beta() < alpha {
            return None;
        }
        let lead_lo = q.lo.slice(0, alpha);
        if !lead_lo.is_zero() {
            return None;
        }
        let beta = q.beta() - alpha;
        Some(Self {
            x: q.hi.slice(0, alpha),
            lo: q.lo.slice(alpha, beta),
            hi: q.hi.slice(alpha, beta),
        })
    }

    /// Hamming weight of the binary part plus Lee weights of the quaternary part.
    pub fn lee_weight(&self) -> usize {
        self.x.count_ones() + self.hi.count_ones() + self.hi.xor(&self.lo).count_ones()
    }

    /// Reorders coordinates: position `i` of the result holds `self[perm[i]]`.
    pub(crate) fn permuted(&self, x_perm: &[usize], y_perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.alpha(), self.beta());
        for (i, &p) in x_perm.iter().enumerate() {
            out.x.set(i, self.x.get(p));
        }
        for (j, &p) in y_perm.iter().enumerate() {
            out.lo.set(j, self.lo.get(p));
            out.hi.set(j, self.hi.get(p));
        }
        out
    }

    /// Inverse of [`MixedVector::permuted`] for the same permutations.
    pub(crate) fn unpermuted(&self, x_perm: &[usize], y_perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.alpha(), self.beta());
        for (i, &p) in x_perm.iter().enumerate() {
            out.x.set(p, self.x.get(i));
        }
        for (j, &p) in y_perm.iter().enumerate() {
            out.lo.set(p, self.lo.get(j));
            out.hi.set(p, self.hi.get(j));
        }
        out
    }
}

impl fmt::Display for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.alpha() {
            write!(f, "{} ", self.x(i))?;
        }
        f.write_str("|")?;
        for j in 0..self.beta() {
            write!(f, " {}", self.y(j))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedVector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(x: &[u8], y: &[u8]) -> MixedVector {
        MixedVector::from_symbols(x, y).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(mv(&[1], &[3]).add(&mv(&[1], &[2])).unwrap(), mv(&[0], &[1]));
        assert_eq!(mv(&[0], &[2]).add(&mv(&[0], &[2])).unwrap(), mv(&[0], &[0]));
        let u = mv(&[1, 0], &[3, 1, 2]);
        assert_eq!(u.add(&MixedVector::zeros(2, 3)).unwrap(), u);
        assert!(matches!(u.add(&mv(&[1], &[1, 1, 1])), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn full_z4_tables() {
        for a in 0..4u8 {
            for b in 0..4u8 {
                let u = MixedVector::quaternary(&[a]).unwrap();
                let v = MixedVector::quaternary(&[b]).unwrap();
                assert_eq!(u.add(&v).unwrap().y(0), (a + b) % 4);
                assert_eq!(u.sub(&v).unwrap().y(0), (4 + a - b) % 4);
                assert_eq!(u.star(&v).unwrap().y(0), (a * b) % 4);
                assert_eq!(u.double_star(&v).unwrap().y(0), (2 * a * b) % 4);
                assert_eq!(u.inner_product(&v).unwrap(), (a * b) % 4);
                assert_eq!(u.scale(b).y(0), (a * b) % 4);
            }
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(mv(&[0], &[0]).order(), 1);
        assert_eq!(mv(&[1], &[2]).order(), 2);
        assert_eq!(mv(&[0], &[3]).order(), 4);
    }

    #[test]
    fn gray_examples() {
        assert_eq!(mv(&[], &[3]).gray(), BinaryVector::from_bits(&[1, 0]));
        assert_eq!(MixedVector::zeros(2, 2).gray(), BinaryVector::zeros(6));
        assert_eq!(mv(&[1], &[2, 1]).gray(), BinaryVector::from_bits(&[1, 1, 1, 0, 1]));
        let phi: Vec<Vec<u8>> = (0..4).map(|s| mv(&[], &[s]).gray().to_bits()).collect();
        assert_eq!(phi, vec![vec![0, 0], vec![0, 1], vec![1, 1], vec![1, 0]]);
    }

    #[test]
    fn gray_inverse_examples() {
        let b = BinaryVector::from_bits(&[1, 0]);
        assert_eq!(MixedVector::gray_inverse(&b, 0, 1).unwrap(), mv(&[], &[3]));
        assert_eq!(
            MixedVector::gray_inverse(&BinaryVector::zeros(7), 3, 2).unwrap(),
            MixedVector::zeros(3, 2)
        );
        assert!(matches!(
            MixedVector::gray_inverse(&BinaryVector::zeros(6), 3, 2),
            Err(Error::LengthMismatch { expected: 7, found: 6 })
        ));
    }

    #[test]
    fn star_examples() {
        assert_eq!(mv(&[1], &[3]).star(&mv(&[1], &[3])).unwrap(), mv(&[1], &[1]));
        let u = mv(&[1, 1], &[3, 2]);
        assert!(u.star(&MixedVector::zeros(2, 2)).unwrap().is_zero());
        let p = mv(&[], &[1, 3]).star(&mv(&[], &[1, 1])).unwrap();
        assert_eq!(p.double(), mv(&[], &[2, 2]));
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(mv(&[1], &[2]).inner_product(&mv(&[1], &[3])).unwrap(), 0);
        assert_eq!(mv(&[1], &[2]).inner_product(&MixedVector::zeros(1, 1)).unwrap(), 0);
        assert_eq!(mv(&[1, 1], &[]).inner_product(&mv(&[1, 0], &[])).unwrap(), 2);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(mv(&[1], &[3]).chi(), mv(&[], &[2, 3]));
        assert!(MixedVector::zeros(3, 2).chi().is_zero());
        let u = mv(&[1, 0, 1], &[3, 2]);
        assert_eq!(MixedVector::chi_inverse(&u.chi(), 3), Some(u));
        assert_eq!(MixedVector::chi_inverse(&mv(&[], &[1, 0]), 1), None);
    }

    #[test]
    fn lee_weight_examples() {
        assert_eq!(mv(&[1], &[2, 3]).lee_weight(), 4);
        assert_eq!(MixedVector::zeros(4, 4).lee_weight(), 0);
    }

    #[test]
    fn invalid_symbols_rejected() {
        assert!(matches!(
            MixedVector::from_symbols(&[2], &[]),
            Err(Error::InvalidSymbol { position: 0, value: 2, modulus: 2 })
        ));
        assert!(matches!(
            MixedVector::from_symbols(&[0], &[1, 4]),
            Err(Error::InvalidSymbol { position: 2, value: 4, modulus: 4 })
        ));
    }

    #[test]
    fn permutation_round_trip() {
        let u = mv(&[1, 0, 0], &[3, 0, 2, 1]);
        let xp = [2, 0, 1];
        let yp = [3, 1, 0, 2];
        let p = u.permuted(&xp, &yp);
        assert_eq!(p.x_symbols(), vec![0, 1, 0]);
        assert_eq!(p.y_symbols(), vec![1, 0, 3, 2]);
        assert_eq!(p.unpermuted(&xp, &yp), u);
    }
}
