use std::collections::{BTreeMap, BTreeSet};

use super::{FormalSum, OgpBasis};
use crate::error::{Error, Result};
use crate::gp::{all_faces, FaceData, GenPermutahedron};
use crate::ground::{
    cuttings, cuttings_refining, descent_composition, shuffles, LinearOrder, Preposet,
};
use crate::scalar::Scalar;
use crate::scrope::gamma_complex;

/// `S(p) = (−1)^{|I|} Σ_q (−1)^{dim q} q` over all faces of `p`.
pub fn gp_antipode_formula<T: Scalar>(
    p: &GenPermutahedron<T>,
    cap: usize,
) -> Result<FormalSum<GenPermutahedron<T>>> {
    let global = sign(p.ground().len());
    let census = crate::gp::face_census(p, cap)?;
    Ok(census
        .into_keys()
        .map(|q| {
            let c = global * sign(q.dim());
            (q, c)
        })
        .collect())
}

/// Which inner sum produced a term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum InnerSum {
    /// `D ∈ C°_Q` and no strictly finer cutting of `w` refining `D` lies in `C°_Q`.
    First,
    /// `D ∈ ∂C_Q` and `C_w̄ ∩ C°_Q ≠ ∅`, weighted by `χ̃(Γ(Q, w, u))`.
    Second,
}

#[derive(Clone, Debug)]
pub struct FormulaTerm<T: Scalar> {
    pub u: LinearOrder,
    pub face: GenPermutahedron<T>,
    pub coeff: i64,
    pub source: InnerSum,
}

/// The output of the cancellation-free formula with per-term provenance.
#[derive(Clone, Debug)]
pub struct AntipodeExpansion<T: Scalar> {
    pub sum: FormalSum<OgpBasis<T>>,
    pub terms: Vec<FormulaTerm<T>>,
}

/// Faces of a fixed polytope, indexed for repeated formula evaluation.
pub struct FaceIndex<T: Scalar> {
    polytope: GenPermutahedron<T>,
    faces: BTreeMap<GenPermutahedron<T>, FaceData<T>>,
}

impl<T: Scalar> FaceIndex<T> {
    pub fn new(p: &GenPermutahedron<T>, cap: usize) -> Result<Self> {
        let faces = all_faces(p, cap)?
            .into_iter()
            .map(|f| (f.face.clone(), f))
            .collect();
        Ok(FaceIndex {
            polytope: p.clone(),
            faces,
        })
    }

    pub fn polytope(&self) -> &GenPermutahedron<T> {
        &self.polytope
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> impl Iterator<Item = &FaceData<T>> {
        self.faces.values()
    }

    fn normal(&self, q: &GenPermutahedron<T>) -> &Preposet {
        &self.faces[q].normal
    }

    /// The cancellation-free expansion of `S(w ⊗ p)`, without checking the
    /// dimension hypothesis.
    pub fn expand(&self, w: &LinearOrder) -> Result<AntipodeExpansion<T>> {
        let p = &self.polytope;
        if w.ground() != p.ground() {
            return Err(Error::GroundMismatch);
        }
        if w.is_empty() {
            let unit = OgpBasis::new(w.clone(), p.clone())?;
            return Ok(AntipodeExpansion {
                sum: FormalSum::single(unit),
                terms: Vec::new(),
            });
        }

        // Faces p_A for A ∈ C_w̄, the only faces with C_w̄ ∩ C°_Q ≠ ∅.
        let mut reachable: BTreeSet<GenPermutahedron<T>> = BTreeSet::new();
        for a in cuttings(w).iter() {
            reachable.insert(p.face(a)?);
        }

        let mut terms = Vec::new();
        let mut sum = FormalSum::zero();
        for u in LinearOrder::all(w.ground()) {
            let d = descent_composition(w, &u)?;
            assert!(cuttings(w).contains(&d), "C_D ⊆ C_w̄ fails for D = {d:?}");
            let outer = -sign(w.descents_relative_to(&u));
            let pd = p.face(&d)?;
            let mut seen: BTreeSet<&GenPermutahedron<T>> = BTreeSet::new();

            let finer_hits = cuttings_refining(w, &d)
                .iter()
                .filter(|a| **a != d)
                .try_fold(false, |hit, a| Ok::<_, Error>(hit || p.face(a)? == pd))?;
            if !finer_hits {
                seen.insert(&pd);
                terms.push(FormulaTerm {
                    u: u.clone(),
                    face: pd.clone(),
                    coeff: outer,
                    source: InnerSum::First,
                });
                sum.add_term(OgpBasis::new(u.clone(), pd.clone())?, outer);
            }

            for q in reachable
                .iter()
                .filter(|q| **q != pd && q.is_face_subset_of(&pd))
            {
                let chi = gamma_complex(self.normal(q), w, &u)?.coefficient();
                if chi == 0 {
                    continue;
                }
                assert!(q != &pd, "inner sums overlap at {u:?}");
                assert!(seen.insert(q), "repeated key ({u:?}, {q:?})");
                let coeff = outer * chi;
                terms.push(FormulaTerm {
                    u: u.clone(),
                    face: q.clone(),
                    coeff,
                    source: InnerSum::Second,
                });
                sum.add_term(OgpBasis::new(u.clone(), q.clone())?, coeff);
            }
        }
        debug_assert_eq!(sum.len(), terms.len(), "collection cancelled a term");
        Ok(AntipodeExpansion { sum, terms })
    }
}

/// `S(w ⊗ p)` by the cancellation-free formula. Requires `dim p = |I| − 1`.
pub fn ogp_antipode_formula<T: Scalar>(
    w: &LinearOrder,
    p: &GenPermutahedron<T>,
    cap: usize,
) -> Result<AntipodeExpansion<T>> {
    let n = p.ground().len();
    if n > 0 && p.dim() + 1 != n {
        return Err(Error::DimensionHypothesis { dim: p.dim(), n });
    }
    ogp_antipode_formula_unchecked(w, p, cap)
}

/// As [`ogp_antipode_formula`], for polytopes of any dimension.
pub fn ogp_antipode_formula_unchecked<T: Scalar>(
    w: &LinearOrder,
    p: &GenPermutahedron<T>,
    cap: usize,
) -> Result<AntipodeExpansion<T>> {
    FaceIndex::new(p, cap)?.expand(w)
}

/// `S(w ⊗ Π)` for the regular permutohedron on the ground of `w`:
/// `Σ_{A ∈ C_w̄} (−1)^{|A|} (Σ_u u) ⊗ Π_A`, the inner sum over orders `u`
/// whose descent composition `D(w, u)` is refined by `A`.
pub fn permutohedron_closed_form<T: Scalar>(w: &LinearOrder) -> Result<FormalSum<OgpBasis<T>>> {
    let pi = GenPermutahedron::<T>::regular_permutahedron(w.ground());
    let mut out = FormalSum::zero();
    for a in cuttings(w).iter() {
        let face = pi.face(a)?;
        let pieces: Vec<LinearOrder> = a.blocks().iter().map(|&b| w.restrict(b)).collect();
        for u in shuffles(&pieces)? {
            out.add_term(OgpBasis::new(u, face.clone())?, sign(a.len()));
        }
    }
    Ok(out)
}

/// `Σ_w w ⊗ p` over all linear orders of the ground.
pub fn symmetrize<T: Scalar>(p: &GenPermutahedron<T>) -> FormalSum<OgpBasis<T>> {
    LinearOrder::all(p.ground())
        .into_iter()
        .map(|w| {
            (
                OgpBasis {
                    order: w,
                    polytope: p.clone(),
                },
                1,
            )
        })
        .collect()
}

/// `(−1)^{|I|} Σ_{q, u} (−1)^{dim q} u ⊗ q`, which equals `Σ_w S(w ⊗ p)`.
pub fn symmetrized_identity_rhs<T: Scalar>(
    p: &GenPermutahedron<T>,
    cap: usize,
) -> Result<FormalSum<OgpBasis<T>>> {
    let faces = gp_antipode_formula(p, cap)?;
    let mut out = FormalSum::zero();
    for u in LinearOrder::all(p.ground()) {
        for (q, c) in faces.iter() {
            out.add_term(
                OgpBasis {
                    order: u.clone(),
                    polytope: q.clone(),
                },
                c,
            );
        }
    }
    Ok(out)
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::hopf::{takeuchi_antipode, GpMonoid, OgpMonoid};
    use crate::subset::Subset;
    use num_rational::Rational64;

    type Gp = GenPermutahedron<Rational64>;

    #[test]
    fn gp_formula_small_cases() {
        let one = Rational64::from_integer(1);
        let pt = Gp::point(Subset::singleton(0), &[one]);
        assert_eq!(
            gp_antipode_formula(&pt, 8).unwrap(),
            FormalSum::term(pt.clone(), -1)
        );
        let seg = Gp::standard_simplex(Subset::full(2));
        assert_eq!(
            gp_antipode_formula(&seg, 8).unwrap(),
            takeuchi_antipode(&GpMonoid::new(), &seg, 8).unwrap()
        );
    }

    #[test]
    fn hexagon_census() {
        let hex = Gp::regular_permutahedron(Subset::full(3));
        let s = gp_antipode_formula(&hex, 8).unwrap();
        let mut by_dim = [(0, 0); 3];
        for (q, c) in s.iter() {
            by_dim[q.dim()].0 += 1;
            by_dim[q.dim()].1 += c;
        }
        assert_eq!(by_dim, [(6, -6), (6, 6), (1, -1)]);
        assert_eq!(s, takeuchi_antipode(&GpMonoid::new(), &hex, 8).unwrap());
    }

    #[test]
    fn segment_formula_matches_worked_example() {
        let g = GroundSet::lettered(2);
        let seg = Gp::standard_simplex(g.full());
        let ea = seg.face(&g.composition("a|b").unwrap()).unwrap();
        let ab = g.word("ab").unwrap();
        let ba = g.word("ba").unwrap();
        let e = ogp_antipode_formula(&ab, &seg, 8).unwrap();
        let key = |u: &LinearOrder, q: &Gp| {
            e.terms
                .iter()
                .find(|t| &t.u == u && &t.face == q)
                .map(|t| (t.coeff, t.source))
        };
        assert_eq!(key(&ab, &seg), Some((-1, InnerSum::First)));
        assert_eq!(key(&ba, &ea), Some((1, InnerSum::First)));
        assert_eq!(key(&ab, &ea), Some((1, InnerSum::Second)));
        assert_eq!(e.terms.len(), 3);
        let oracle =
            takeuchi_antipode(&OgpMonoid::new(), &OgpBasis::new(ab, seg).unwrap(), 8).unwrap();
        assert_eq!(e.sum, oracle);
    }

    #[test]
    fn formula_matches_oracle_on_permutohedra() {
        for n in 1..=3 {
            let pi = Gp::regular_permutahedron(Subset::full(n));
            let index = FaceIndex::new(&pi, 8).unwrap();
            for w in LinearOrder::all(pi.ground()) {
                let e = index.expand(&w).unwrap();
                let x = OgpBasis::new(w.clone(), pi.clone()).unwrap();
                assert_eq!(
                    e.sum,
                    takeuchi_antipode(&OgpMonoid::new(), &x, 8).unwrap(),
                    "{w:?}"
                );
                assert_eq!(e.sum, permutohedron_closed_form::<Rational64>(&w).unwrap());
            }
        }
    }

    #[test]
    fn dimension_guard() {
        let zero = Rational64::from_integer(0);
        let pt = Gp::point(Subset::full(2), &[zero, zero]);
        let w = LinearOrder::ascending(Subset::full(2));
        assert!(matches!(
            ogp_antipode_formula(&w, &pt, 8),
            Err(Error::DimensionHypothesis { dim: 0, n: 2 })
        ));
        let unit = Gp::unit();
        let e = ogp_antipode_formula(&LinearOrder::empty(), &unit, 8).unwrap();
        assert_eq!(e.sum.len(), 1);
    }

    #[test]
    fn symmetrized_identity_small() {
        let hex = Gp::regular_permutahedron(Subset::full(3));
        let mut lhs = FormalSum::zero();
        for (x, c) in symmetrize(&hex).iter() {
            lhs.add_scaled(&takeuchi_antipode(&OgpMonoid::new(), x, 8).unwrap(), c);
        }
        assert_eq!(lhs, symmetrized_identity_rhs(&hex, 8).unwrap());
        assert_eq!(symmetrize(&hex).len(), 6);
    }
}
