use crate::error::{Error, Result};
use crate::vector::MixedVector;

/// Generators of an additive code: `gamma` rows of order two and `delta` rows
/// of order four such that every codeword is uniquely `Σ λ_i u_i + Σ μ_j v_j`
/// with `λ_i ∈ Z2`, `μ_j ∈ Z4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    alpha: usize,
    beta: usize,
    rows2: Vec<MixedVector>,
    rows4: Vec<MixedVector>,
}

impl GeneratorMatrix {
    /// Reduces an arbitrary generating set to independent generators.
    ///
    /// Rows already in canonical shape (order-two rows first with their leading
    /// binary or trailing quaternary pivot, then order-four rows whose rightmost
    /// unit is an identity column) come back unchanged.
    pub fn reduce(alpha: usize, beta: usize, rows: &[MixedVector]) -> Result<Self> {
        if alpha + beta == 0 {
            return Err(Error::EmptyAmbient);
        }
        for r in rows {
            if r.shape() != (alpha, beta) {
                return Err(Error::ShapeMismatch { expected: (alpha, beta), found: r.shape() });
            }
        }
        let mut rows: Vec<MixedVector> = rows.to_vec();
        let mut is_pivot4 = vec![false; rows.len()];

        // Unit pivots: rightmost odd quaternary entry of each row, in row order.
        for i in 0..rows.len() {
            let Some(c) = rows[i].y_low().last_one() else { continue };
            if rows[i].y(c) == 3 {
                rows[i] = rows[i].neg();
            }
            let pivot = rows[i].clone();
            for (k, row) in rows.iter_mut().enumerate() {
                if k != i {
                    let coef = row.y(c);
                    if coef != 0 {
                        row.add_scaled_unchecked(4 - coef, &pivot);
                    }
                }
            }
            is_pivot4[i] = true;
        }

        let mut rows2 = Vec::new();
        let mut rows4 = Vec::new();
        for (row, p) in rows.into_iter().zip(is_pivot4) {
            if p {
                rows4.push(row);
            } else {
                rows2.push(row);
            }
        }
        reduce_order_two(&mut rows2);
        rows2.retain(|r| !r.is_zero());
        Ok(Self { alpha, beta, rows2, rows4 })
    }

    pub(crate) fn from_parts(alpha: usize, beta: usize, rows2: Vec<MixedVector>, rows4: Vec<MixedVector>) -> Self {
        Self { alpha, beta, rows2, rows4 }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn gamma(&self) -> usize {
        self.rows2.len()
    }

    pub fn delta(&self) -> usize {
        self.rows4.len()
    }

    /// Rows of order two.
    pub fn rows2(&self) -> &[MixedVector] {
        &self.rows2
    }

    /// Rows of order four.
    pub fn rows4(&self) -> &[MixedVector] {
        &self.rows4
    }

    /// All rows, order-two rows first.
    pub fn rows(&self) -> impl Iterator<Item = &MixedVector> {
        self.rows2.iter().chain(&self.rows4)
    }

    /// Dimension of the binary projection of the order-two subcode.
    ///
    /// The order-two subcode is spanned by `rows2` and `2·rows4`; the latter
    /// vanish on binary coordinates, so only `rows2` contribute.
    pub fn kappa(&self) -> usize {
        let mut e = crate::bits::Echelon::new();
        self.rows2.iter().filter(|r| e.insert(r.x_bits()).is_some()).count()
    }
}

/// Pivot position of an even row: leading binary one if any, else the
/// rightmost quaternary 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Pivot2 {
    X(usize),
    Y(usize),
}

pub(crate) fn pivot2(row: &MixedVector) -> Option<Pivot2> {
    if let Some(i) = row.x_bits().first_one() {
        Some(Pivot2::X(i))
    } else {
        row.y_high().last_one().map(Pivot2::Y)
    }
}

pub(crate) fn has_pivot2(row: &MixedVector, p: Pivot2) -> bool {
    match p {
        Pivot2::X(i) => row.x(i) == 1,
        // Only meaningful on entries that are 0 or 2.
        Pivot2::Y(j) => row.y_high().get(j),
    }
}

/// Reduced echelon form over F2 of even rows, processing rows in order.
fn reduce_order_two(rows: &mut [MixedVector]) {
    for i in 0..rows.len() {
        let Some(p) = pivot2(&rows[i]) else { continue };
        let pivot = rows[i].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != i && has_pivot2(row, p) {
                row.add_assign_unchecked(&pivot);
            }
        }
    }
}
