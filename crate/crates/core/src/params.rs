use crate::error::{Error, Result};
use std::fmt;

/// The type `(α, β; γ, δ; κ)` of a Z2Z4-additive code.
///
/// `alpha`/`beta` count binary and quaternary coordinates, the code is
/// isomorphic to `Z2^gamma × Z4^delta`, and `kappa` is the dimension of the
/// binary projection of its order-two subcode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeParams {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kappa: usize,
}

impl TypeParams {
    pub const fn new(alpha: usize, beta: usize, gamma: usize, delta: usize, kappa: usize) -> Self {
        Self { alpha, beta, gamma, delta, kappa }
    }

    /// Checks that some additive code of this type exists.
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: &str| Err(Error::InfeasibleType { params: *self, reason: reason.to_string() });
        if self.alpha + self.beta == 0 {
            return fail("alpha + beta must be positive");
        }
        if self.gamma + self.delta == 0 {
            return fail("gamma + delta must be positive");
        }
        if self.gamma + self.delta > self.beta + self.kappa {
            return fail("gamma + delta must not exceed beta + kappa");
        }
        if self.kappa > self.alpha.min(self.gamma) {
            return fail("kappa must not exceed min(alpha, gamma)");
        }
        Ok(())
    }

    pub fn is_feasible(&self) -> bool {
        self.validate().is_ok()
    }

    /// `log2 |C| = γ + 2δ`.
    pub fn log_size(&self) -> usize {
        self.gamma + 2 * self.delta
    }

    /// Number of free columns of the quaternary block, `β − (γ − κ) − δ`.
    ///
    /// Only meaningful for feasible types; saturates at zero otherwise.
    pub fn s(&self) -> usize {
        (self.beta + self.kappa).saturating_sub(self.gamma + self.delta)
    }

    /// Binary length of the Gray image.
    pub fn binary_length(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    /// Type of the additive dual.
    pub fn dual(&self) -> TypeParams {
        TypeParams {
            alpha: self.alpha,
            beta: self.beta,
            gamma: self.alpha + self.gamma - 2 * self.kappa,
            delta: (self.beta + self.kappa) - (self.gamma + self.delta),
            kappa: self.alpha - self.kappa,
        }
    }
}

impl fmt::Display for TypeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{};{})", self.alpha, self.beta, self.gamma, self.delta, self.kappa)
    }
}
