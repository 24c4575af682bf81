//! Z2Z4-additive codes: generators, standard form, membership and duality.

mod dual;
pub mod format;
mod generator;
mod standard;

pub use generator::GeneratorMatrix;
pub use standard::StandardForm;

use crate::error::{Error, Result};
use crate::oracle::SizeGuard;
use crate::params::TypeParams;
use crate::vector::MixedVector;
use std::sync::OnceLock;

/// A subgroup of `Z2^α × Z4^β`, held by canonical generators.
///
/// The standard form is computed on first use and cached; the cache is
/// published through a `OnceLock`, so concurrent readers see either nothing
/// or the finished value.
#[derive(Clone, Debug)]
pub struct AdditiveCode {
    gen: GeneratorMatrix,
    params: TypeParams,
    std: OnceLock<StandardForm>,
}

impl AdditiveCode {
    /// The code generated by `rows`. Rejects generating sets that span only
    /// the zero vector.
    pub fn from_rows(alpha: usize, beta: usize, rows: &[MixedVector]) -> Result<Self> {
        let code = Self::span(alpha, beta, rows)?;
        if code.is_zero() {
            return Err(Error::DegenerateCode);
        }
        Ok(code)
    }

    /// Like [`AdditiveCode::from_rows`] but accepts the zero code.
    ///
    /// The zero code has `γ = δ = 0`, which no feasible type allows; it exists
    /// only as the dual of the full space and as an intermediate value.
    pub fn span(alpha: usize, beta: usize, rows: &[MixedVector]) -> Result<Self> {
        let gen = GeneratorMatrix::reduce(alpha, beta, rows)?;
        let params = TypeParams {
            alpha,
            beta,
            gamma: gen.gamma(),
            delta: gen.delta(),
            kappa: gen.kappa(),
        };
        Ok(Self { gen, params, std: OnceLock::new() })
    }

    pub fn zero(alpha: usize, beta: usize) -> Result<Self> {
        Self::span(alpha, beta, &[])
    }

    /// The whole ambient space `Z2^α × Z4^β`.
    pub fn full(alpha: usize, beta: usize) -> Result<Self> {
        let mut rows = Vec::with_capacity(alpha + beta);
        for i in 0..alpha {
            let mut v = MixedVector::zeros(alpha, beta);
            v.set_x(i, 1);
            rows.push(v);
        }
        for j in 0..beta {
            let mut v = MixedVector::zeros(alpha, beta);
            v.set_y(j, 1);
            rows.push(v);
        }
        Self::from_rows(alpha, beta, &rows)
    }

    pub fn gen(&self) -> &GeneratorMatrix {
        &self.gen
    }

    pub fn alpha(&self) -> usize {
        self.params.alpha
    }

    pub fn beta(&self) -> usize {
        self.params.beta
    }

    pub fn params(&self) -> TypeParams {
        self.params
    }

    /// Type `(α,β;γ,δ;κ)`: `γ`, `δ` from the reduced generators and `κ` the
    /// F2-rank of the binary parts of the order-two subcode's generators.
    pub fn infer_type(&self) -> TypeParams {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.params.gamma + self.params.delta == 0
    }

    /// `log2 |C|`.
    pub fn log_size(&self) -> usize {
        self.params.log_size()
    }

    pub fn standard_form(&self) -> &StandardForm {
        self.std.get_or_init(|| StandardForm::compute(&self.gen))
    }

    fn check_shape(&self, w: &MixedVector) -> Result<()> {
        if w.shape() != (self.alpha(), self.beta()) {
            return Err(Error::ShapeMismatch { expected: (self.alpha(), self.beta()), found: w.shape() });
        }
        Ok(())
    }

    /// Every codeword, each exactly once.
    pub fn codewords(&self, guard: &SizeGuard) -> Result<Codewords> {
        guard.check_codewords(self.log_size())?;
        Ok(Codewords::new(self))
    }

    /// Membership by back-substitution against the standard form.
    pub fn contains(&self, w: &MixedVector) -> Result<bool> {
        self.check_shape(w)?;
        Ok(self.standard_form().residue(w).is_zero())
    }

    /// True iff every codeword of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &AdditiveCode) -> Result<bool> {
        if (self.alpha(), self.beta()) != (other.alpha(), other.beta()) {
            return Err(Error::ShapeMismatch {
                expected: (other.alpha(), other.beta()),
                found: (self.alpha(), self.beta()),
            });
        }
        for r in self.gen.rows() {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Set equality via mutual containment of generators.
    pub fn equal_as_sets(&self, other: &AdditiveCode) -> Result<bool> {
        Ok(self.is_subcode_of(other)? && other.is_subcode_of(self)?)
    }

    /// True iff the Gray image is a binary linear code, i.e. `2 v_j * v_k`
    /// is a codeword for every pair of order-four generators.
    pub fn is_linear_image(&self) -> bool {
        let v = self.gen.rows4();
        for j in 0..v.len() {
            for k in j + 1..v.len() {
                if !self.standard_form().residue(&v[j].double_star_unchecked(&v[k])).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The additive dual under `u·v = 2Σ_X u_i v_i + Σ_Y u_j v_j (mod 4)`.
    ///
    /// Solved as a Z4 system: the binary unknowns enter only through `2·v_i`,
    /// so the constraint rows are `χ(g)` and binary solution coordinates are
    /// read mod 2.
    pub fn dual(&self) -> AdditiveCode {
        let (alpha, beta) = (self.alpha(), self.beta());
        let n = alpha + beta;
        let a: Vec<Vec<u8>> = self.gen.rows().map(|r| r.chi().y_symbols()).collect();
        let rows: Vec<MixedVector> = dual::z4_null_space(&a, n)
            .into_iter()
            .map(|z| {
                let x: Vec<u8> = z[..alpha].iter().map(|v| v & 1).collect();
                MixedVector::from_symbols(&x, &z[alpha..]).expect("symbols reduced mod 2 and mod 4")
            })
            .collect();
        Self::span(alpha, beta, &rows).expect("ambient shape is valid")
    }

    /// `χ(C)` as a quaternary code of length `α + β`.
    pub fn chi_image(&self) -> AdditiveCode {
        let rows: Vec<MixedVector> = self.gen.rows().map(MixedVector::chi).collect();
        Self::span(0, self.alpha() + self.beta(), &rows).expect("ambient shape is valid")
    }
}

/// Iterator over all codewords `Σ λ_i u_i + Σ μ_j v_j`.
///
/// Runs an odometer over the coefficients; bumping a digit always adds its
/// generator once, wrap-around included, since `2u = 4v = 0`.
pub struct Codewords {
    gens: Vec<MixedVector>,
    moduli: Vec<u8>,
    digits: Vec<u8>,
    current: MixedVector,
    remaining: u64,
}

impl Codewords {
    fn new(code: &AdditiveCode) -> Self {
        let gens: Vec<MixedVector> = code.gen.rows().cloned().collect();
        let moduli: Vec<u8> = code
            .gen
            .rows2()
            .iter()
            .map(|_| 2)
            .chain(code.gen.rows4().iter().map(|_| 4))
            .collect();
        Self {
            digits: vec![0; gens.len()],
            gens,
            moduli,
            current: MixedVector::zeros(code.alpha(), code.beta()),
            remaining: 1u64 << code.log_size(),
        }
    }
}

impl Iterator for Codewords {
    type Item = MixedVector;

    fn next(&mut self) -> Option<MixedVector> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.current.clone();
        for d in 0..self.gens.len() {
            self.current.add_assign_unchecked(&self.gens[d]);
            self.digits[d] += 1;
            if self.digits[d] < self.moduli[d] {
                break;
            }
            self.digits[d] = 0;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for Codewords {}
