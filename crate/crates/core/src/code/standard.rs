//! Canonical generator matrix up to coordinate permutation.
//!
//! Column layout of the result, binary part then quaternary part:
//!
//! ```text
//!            X: κ     α−κ   |  Y: s      γ−κ      δ
//! κ rows      I_κ     T'    |     2T_2   0        0
//! γ−κ rows    0       0     |     2T_1   2I       0
//! δ rows      0       S'    |     S      R        I_δ
//! ```
//!
//! with `s = β − (γ−κ) − δ`, `T_1, T_2, R` over {0,1} and `S` over Z4.

use super::generator::GeneratorMatrix;
use crate::bits::BinaryVector;
use crate::params::TypeParams;
use crate::vector::MixedVector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    matrix: GeneratorMatrix,
    x_perm: Vec<usize>,
    y_perm: Vec<usize>,
    params: TypeParams,
}

impl StandardForm {
    /// Builds the standard form of the code generated by `gen`.
    ///
    /// Pivot rules, all deterministic: each order-four row pivots on its
    /// rightmost unit; order-two rows pivot first on their leftmost binary one,
    /// and the remaining ones on their rightmost quaternary 2. A generator
    /// matrix already in the shape above is returned unchanged with identity
    /// permutations.
    pub fn compute(gen: &GeneratorMatrix) -> Self {
        let (alpha, beta) = (gen.alpha(), gen.beta());
        let mut rows4: Vec<MixedVector> = gen.rows4().to_vec();
        let mut rows2: Vec<MixedVector> = gen.rows2().to_vec();

        let mut p4 = Vec::with_capacity(rows4.len());
        for i in 0..rows4.len() {
            let c = rows4[i].y_low().last_one().expect("order-four row has a unit entry");
            if rows4[i].y(c) == 3 {
                rows4[i] = rows4[i].neg();
            }
            let pivot = rows4[i].clone();
            for row in rows4.iter_mut().enumerate().filter(|(k, _)| *k != i).map(|(_, r)| r) {
                let coef = row.y(c);
                if coef != 0 {
                    row.add_scaled_unchecked(4 - coef, &pivot);
                }
            }
            for row in rows2.iter_mut() {
                let coef = row.y(c);
                if coef != 0 {
                    row.add_scaled_unchecked(4 - coef, &pivot);
                }
            }
            p4.push(c);
        }

        // Binary pivots first so that the rows left over vanish on X.
        let mut x_piv: Vec<(usize, usize)> = Vec::new();
        for i in 0..rows2.len() {
            let Some(c) = rows2[i].x_bits().first_one() else { continue };
            let pivot = rows2[i].clone();
            for (k, row) in rows2.iter_mut().enumerate() {
                if k != i && row.x(c) == 1 {
                    row.add_assign_unchecked(&pivot);
                }
            }
            for row in rows4.iter_mut() {
                if row.x(c) == 1 {
                    row.add_assign_unchecked(&pivot);
                }
            }
            x_piv.push((i, c));
        }

        let mut y_piv: Vec<(usize, usize)> = Vec::new();
        for i in 0..rows2.len() {
            if x_piv.iter().any(|&(r, _)| r == i) {
                continue;
            }
            let c = rows2[i]
                .y_high()
                .last_one()
                .expect("independent order-two row without binary support has a quaternary 2");
            let pivot = rows2[i].clone();
            for (k, row) in rows2.iter_mut().enumerate() {
                if k != i && row.y_high().get(c) {
                    row.add_assign_unchecked(&pivot);
                }
            }
            // Leave R with entries in {0,1}.
            for row in rows4.iter_mut() {
                if row.y_high().get(c) {
                    row.add_assign_unchecked(&pivot);
                }
            }
            y_piv.push((i, c));
        }

        let mut x_perm: Vec<usize> = x_piv.iter().map(|&(_, c)| c).collect();
        let x_free: Vec<usize> = (0..alpha).filter(|c| !x_perm.contains(c)).collect();
        x_perm.extend(x_free);

        let used: Vec<usize> = y_piv.iter().map(|&(_, c)| c).chain(p4.iter().copied()).collect();
        let mut y_perm: Vec<usize> = (0..beta).filter(|c| !used.contains(c)).collect();
        y_perm.extend(y_piv.iter().map(|&(_, c)| c));
        y_perm.extend(p4.iter().copied());

        let new_rows2: Vec<MixedVector> = x_piv
            .iter()
            .chain(&y_piv)
            .map(|&(r, _)| rows2[r].permuted(&x_perm, &y_perm))
            .collect();
        let new_rows4: Vec<MixedVector> = rows4.iter().map(|r| r.permuted(&x_perm, &y_perm)).collect();

        let params = TypeParams {
            alpha,
            beta,
            gamma: new_rows2.len(),
            delta: new_rows4.len(),
            kappa: x_piv.len(),
        };
        Self {
            matrix: GeneratorMatrix::from_parts(alpha, beta, new_rows2, new_rows4),
            x_perm,
            y_perm,
            params,
        }
    }

    pub fn matrix(&self) -> &GeneratorMatrix {
        &self.matrix
    }

    /// `x_perm[i]` is the original binary column placed at position `i`.
    pub fn x_perm(&self) -> &[usize] {
        &self.x_perm
    }

    /// `y_perm[j]` is the original quaternary column placed at position `j`.
    pub fn y_perm(&self) -> &[usize] {
        &self.y_perm
    }

    pub fn params(&self) -> TypeParams {
        self.params
    }

    /// Maps a vector from original coordinates to standard-form coordinates.
    pub fn apply(&self, w: &MixedVector) -> MixedVector {
        w.permuted(&self.x_perm, &self.y_perm)
    }

    /// Maps a vector from standard-form coordinates back to original ones.
    pub fn unapply(&self, w: &MixedVector) -> MixedVector {
        w.unpermuted(&self.x_perm, &self.y_perm)
    }

    /// Width of the free quaternary block `S`.
    pub fn s(&self) -> usize {
        self.params.s()
    }

    /// The `δ × s` block `S` of the order-four rows.
    pub fn s_block(&self) -> Vec<Vec<u8>> {
        let s = self.s();
        self.matrix.rows4().iter().map(|r| (0..s).map(|j| r.y(j)).collect()).collect()
    }

    /// Back-substitution of `w` (original coordinates) against the standard
    /// form. Returns what is left in standard-form coordinates; it is zero
    /// exactly when `w` is a codeword.
    pub fn residue(&self, w: &MixedVector) -> MixedVector {
        let TypeParams { beta, gamma, delta, kappa, .. } = self.params;
        let mut r = self.apply(w);
        let rows2 = self.matrix.rows2();
        for (j, v) in self.matrix.rows4().iter().enumerate() {
            let mu = r.y(beta - delta + j);
            if mu != 0 {
                r.add_scaled_unchecked(4 - mu, v);
            }
        }
        let s = self.s();
        for (t, u) in rows2[kappa..].iter().enumerate() {
            // An odd entry here stays in the residue.
            if r.y_high().get(s + t) && !r.y_low().get(s + t) {
                r.add_assign_unchecked(u);
            }
        }
        for (i, u) in rows2[..kappa].iter().enumerate() {
            if r.x(i) == 1 {
                r.add_assign_unchecked(u);
            }
        }
        debug_assert!(gamma == rows2.len());
        r
    }

    /// F2 syndrome of an order-two vector: binary residue on the `α−κ` free
    /// binary columns, then halved quaternary residue on the `s` free
    /// quaternary columns. Linear in `w` and zero exactly on codewords.
    pub(crate) fn syndrome(&self, w: &MixedVector) -> BinaryVector {
        debug_assert!(w.order() <= 2);
        let r = self.residue(w);
        let kappa = self.params.kappa;
        let mut out = r.x_bits().slice(kappa, self.params.alpha - kappa);
        out.extend(&r.y_high().slice(0, self.s()));
        out
    }

    pub(crate) fn syndrome_len(&self) -> usize {
        self.params.alpha - self.params.kappa + self.s()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(x: &[u8], y: &[u8]) -> MixedVector {
        MixedVector::from_symbols(x, y).unwrap()
    }

    fn canonical() -> Vec<MixedVector> {
        vec![
            mv(&[1, 1], &[2, 0, 0, 0]),
            mv(&[0, 0], &[2, 0, 2, 0]),
            mv(&[0, 1], &[3, 1, 1, 1]),
        ]
    }

    #[test]
    fn canonical_input_is_fixed() {
        let g = GeneratorMatrix::reduce(2, 4, &canonical()).unwrap();
        let sf = StandardForm::compute(&g);
        assert_eq!(sf.x_perm(), &[0, 1]);
        assert_eq!(sf.y_perm(), &[0, 1, 2, 3]);
        assert_eq!(sf.matrix(), &g);
        assert_eq!(sf.params(), TypeParams::new(2, 4, 2, 1, 1));
        assert_eq!(sf.s_block(), vec![vec![3, 1]]);
    }

    #[test]
    fn permuted_input_recovers_shape() {
        // Swap the binary columns and reverse the quaternary ones.
        let rows: Vec<MixedVector> = canonical().iter().map(|r| r.permuted(&[1, 0], &[3, 2, 1, 0])).collect();
        let sf = StandardForm::compute(&GeneratorMatrix::reduce(2, 4, &rows).unwrap());
        let m = sf.matrix();
        assert_eq!(m.rows2()[0].x(0), 1);
        assert_eq!(m.rows2()[1].x_symbols(), vec![0, 0]);
        assert_eq!(m.rows2()[1].y(2), 2);
        assert_eq!(m.rows4()[0].y(3), 1);
        for r in &rows {
            assert!(sf.residue(r).is_zero());
            assert_eq!(sf.unapply(&sf.apply(r)), *r);
        }
    }

    #[test]
    fn residue_and_syndrome_flag_non_members() {
        let sf = StandardForm::compute(&GeneratorMatrix::reduce(2, 4, &canonical()).unwrap());
        let w = mv(&[0, 1], &[0, 0, 0, 0]);
        assert!(!sf.residue(&w).is_zero());
        assert_eq!(sf.syndrome_len(), 1 + 2);
        assert!(!sf.syndrome(&w).is_zero());
        assert!(sf.syndrome(&mv(&[1, 1], &[0, 0, 2, 0])).is_zero());
        assert!(!sf.syndrome(&mv(&[1, 1], &[2, 0, 2, 0])).is_zero());
    }
}
