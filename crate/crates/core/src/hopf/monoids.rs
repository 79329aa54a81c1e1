use std::fmt;
use std::marker::PhantomData;

use super::{FormalSum, HopfMonoid};
use crate::error::{Error, Result};
use crate::gp::GenPermutahedron;
use crate::ground::{shuffles, LinearOrder};
use crate::scalar::Scalar;
use crate::subset::Subset;

/// `L*`: linear orders with the shuffle product and the prefix coproduct.
#[derive(Clone, Copy, Debug, Default)]
pub struct LStarMonoid;

impl HopfMonoid for LStarMonoid {
    type Basis = LinearOrder;

    fn ground(&self, x: &LinearOrder) -> Subset {
        x.ground()
    }

    fn unit(&self) -> LinearOrder {
        LinearOrder::empty()
    }

    fn product(&self, x: &LinearOrder, y: &LinearOrder) -> Result<FormalSum<LinearOrder>> {
        Ok(shuffles(&[x.clone(), y.clone()])?
            .into_iter()
            .map(|v| (v, 1))
            .collect())
    }

    fn coproduct(
        &self,
        v: &LinearOrder,
        left: Subset,
    ) -> Result<FormalSum<(LinearOrder, LinearOrder)>> {
        let g = v.ground();
        if !left.is_subset_of(g) {
            return Err(Error::NotAPartition);
        }
        if !v.is_prefix(left) {
            return Ok(FormalSum::zero());
        }
        Ok(FormalSum::single((
            v.restrict(left),
            v.restrict(g.difference(left)),
        )))
    }
}

/// `GP`: Cartesian product and `Δ_{I,J}(p) = p|I ⊗ p/I`.
pub struct GpMonoid<T>(PhantomData<T>);

impl<T> Default for GpMonoid<T> {
    fn default() -> Self {
        GpMonoid(PhantomData)
    }
}

impl<T> GpMonoid<T> {
    pub fn new() -> Self {
        Self::default()
    }
}

impl<T: Scalar> HopfMonoid for GpMonoid<T> {
    type Basis = GenPermutahedron<T>;

    fn ground(&self, p: &GenPermutahedron<T>) -> Subset {
        p.ground()
    }

    fn unit(&self) -> GenPermutahedron<T> {
        GenPermutahedron::unit()
    }

    fn product(
        &self,
        p: &GenPermutahedron<T>,
        q: &GenPermutahedron<T>,
    ) -> Result<FormalSum<GenPermutahedron<T>>> {
        Ok(FormalSum::single(p.product(q)?))
    }

    fn coproduct(
        &self,
        p: &GenPermutahedron<T>,
        left: Subset,
    ) -> Result<FormalSum<(GenPermutahedron<T>, GenPermutahedron<T>)>> {
        if !left.is_subset_of(p.ground()) {
            return Err(Error::NotAPartition);
        }
        Ok(FormalSum::single((p.restrict(left)?, p.contract(left)?)))
    }
}

/// A basis element `w ⊗ p` of `OGP`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OgpBasis<T: Scalar> {
    pub order: LinearOrder,
    pub polytope: GenPermutahedron<T>,
}

impl<T: Scalar> OgpBasis<T> {
    pub fn new(order: LinearOrder, polytope: GenPermutahedron<T>) -> Result<Self> {
        if order.ground() != polytope.ground() {
            return Err(Error::GroundMismatch);
        }
        Ok(OgpBasis { order, polytope })
    }
}

impl<T: Scalar> fmt::Debug for OgpBasis<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} ⊗ {:?}", self.order, self.polytope)
    }
}

/// `OGP = L* × GP`, with componentwise structure maps.
pub struct OgpMonoid<T>(PhantomData<T>);

impl<T> Default for OgpMonoid<T> {
    fn default() -> Self {
        OgpMonoid(PhantomData)
    }
}

impl<T> OgpMonoid<T> {
    pub fn new() -> Self {
        Self::default()
    }
}

impl<T: Scalar> HopfMonoid for OgpMonoid<T> {
    type Basis = OgpBasis<T>;

    fn ground(&self, x: &OgpBasis<T>) -> Subset {
        x.order.ground()
    }

    fn unit(&self) -> OgpBasis<T> {
        OgpBasis {
            order: LinearOrder::empty(),
            polytope: GenPermutahedron::unit(),
        }
    }

    fn product(&self, x: &OgpBasis<T>, y: &OgpBasis<T>) -> Result<FormalSum<OgpBasis<T>>> {
        let polytope = x.polytope.product(&y.polytope)?;
        let orders = LStarMonoid.product(&x.order, &y.order)?;
        Ok(orders.map_basis(|w| OgpBasis {
            order: w.clone(),
            polytope: polytope.clone(),
        }))
    }

    fn coproduct(
        &self,
        x: &OgpBasis<T>,
        left: Subset,
    ) -> Result<FormalSum<(OgpBasis<T>, OgpBasis<T>)>> {
        let orders = LStarMonoid.coproduct(&x.order, left)?;
        if orders.is_zero() {
            return Ok(FormalSum::zero());
        }
        let (l, r) = (x.polytope.restrict(left)?, x.polytope.contract(left)?);
        Ok(orders.map_basis(|(wl, wr)| {
            (
                OgpBasis {
                    order: wl.clone(),
                    polytope: l.clone(),
                },
                OgpBasis {
                    order: wr.clone(),
                    polytope: r.clone(),
                },
            )
        }))
    }
}
