//! Hopf monoids in vector species with an explicit basis.

mod antipode;
mod formal_sum;
mod monoids;
mod takeuchi;
mod validate;

use std::fmt::Debug;

pub use antipode::{
    gp_antipode_formula, ogp_antipode_formula, ogp_antipode_formula_unchecked,
    permutohedron_closed_form, symmetrize, symmetrized_identity_rhs, AntipodeExpansion, FaceIndex,
    FormulaTerm, InnerSum,
};
pub use formal_sum::FormalSum;
pub use monoids::{GpMonoid, LStarMonoid, OgpBasis, OgpMonoid};
pub use takeuchi::{iterated_coproduct, takeuchi_antipode, takeuchi_term};
pub use validate::{validate_hopf_axioms, HopfReport};

use crate::error::Result;
use crate::subset::Subset;

/// Product and coproduct on a species with a distinguished basis.
///
/// `coproduct(x, left)` is `Δ_{left, rest}(x)` where `rest` is the
/// complement of `left` in the ground of `x`.
pub trait HopfMonoid {
    type Basis: Clone + Ord + Debug;

    fn ground(&self, x: &Self::Basis) -> Subset;

    /// The basis element on the empty set.
    fn unit(&self) -> Self::Basis;

    fn product(&self, x: &Self::Basis, y: &Self::Basis) -> Result<FormalSum<Self::Basis>>;

    fn coproduct(
        &self,
        x: &Self::Basis,
        left: Subset,
    ) -> Result<FormalSum<(Self::Basis, Self::Basis)>>;

    fn counit(&self, x: &Self::Basis) -> i64 {
        i64::from(self.ground(x).is_empty())
    }
}

/// Bilinear extension of the product.
pub fn product_sums<H: HopfMonoid>(
    h: &H,
    a: &FormalSum<H::Basis>,
    b: &FormalSum<H::Basis>,
) -> Result<FormalSum<H::Basis>> {
    let mut out = FormalSum::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_scaled(&h.product(x, y)?, cx * cy);
        }
    }
    Ok(out)
}

/// Linear extension of the coproduct.
pub fn coproduct_sum<H: HopfMonoid>(
    h: &H,
    a: &FormalSum<H::Basis>,
    left: Subset,
) -> Result<FormalSum<(H::Basis, H::Basis)>> {
    let mut out = FormalSum::zero();
    for (x, c) in a.iter() {
        out.add_scaled(&h.coproduct(x, left)?, c);
    }
    Ok(out)
}
