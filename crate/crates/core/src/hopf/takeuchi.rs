use super::{product_sums, FormalSum, HopfMonoid};
use crate::error::{Error, Result};
use crate::ground::{enumerate_compositions, SetComposition};
use crate::subset::Subset;

/// `Δ_A(x)` for `A = A₁|…|A_k`, computed left-nested: split off `A₁`, then
/// split the remainder, and so on. Each tuple has one factor per block.
/// Empty blocks are allowed and produce unit factors.
pub fn iterated_coproduct<H: HopfMonoid>(
    h: &H,
    x: &H::Basis,
    blocks: &[Subset],
) -> Result<FormalSum<Vec<H::Basis>>> {
    let total = blocks.iter().fold(Subset::EMPTY, |acc, &b| acc.union(b));
    if total != h.ground(x) || blocks.iter().map(|b| b.len()).sum::<usize>() != total.len() {
        return Err(Error::NotAPartition);
    }
    let mut partial: FormalSum<Vec<H::Basis>> = FormalSum::single(vec![x.clone()]);
    for &block in &blocks[..blocks.len().saturating_sub(1)] {
        let mut next = FormalSum::zero();
        for (tuple, c) in partial.iter() {
            let (last, head) = tuple.split_last().expect("tuples are nonempty");
            for ((l, r), d) in h.coproduct(last, block)?.iter() {
                let mut t = head.to_vec();
                t.push(l.clone());
                t.push(r.clone());
                next.add_term(t, c * d);
            }
        }
        partial = next;
        if partial.is_zero() {
            break;
        }
    }
    if blocks.is_empty() {
        // The empty composition only applies to the empty ground set.
        return Ok(FormalSum::single(Vec::new()));
    }
    Ok(partial)
}

/// `μ_A ∘ Δ_A (x)` for a composition given by its blocks (empty blocks allowed).
pub fn takeuchi_term<H: HopfMonoid>(
    h: &H,
    x: &H::Basis,
    blocks: &[Subset],
) -> Result<FormalSum<H::Basis>> {
    let pieces = iterated_coproduct(h, x, blocks)?;
    let mut out = FormalSum::zero();
    for (tuple, c) in pieces.iter() {
        let mut acc = FormalSum::single(h.unit());
        for factor in tuple {
            acc = product_sums(h, &acc, &FormalSum::single(factor.clone()))?;
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// The antipode by the Takeuchi alternating sum over the set compositions
/// of the ground set: `S(x) = Σ_A (−1)^{|A|} μ_A Δ_A (x)`.
///
/// Weak compositions reduce to this sum: inserting empty blocks only adds
/// unit and counit factors, so each weak term equals the term of the
/// composition with its empty blocks removed.
pub fn takeuchi_antipode<H: HopfMonoid>(
    h: &H,
    x: &H::Basis,
    cap: usize,
) -> Result<FormalSum<H::Basis>> {
    let g = h.ground(x);
    let mut total = FormalSum::zero();
    for a in enumerate_compositions(g, cap)? {
        let sign = if a.len() % 2 == 0 { 1 } else { -1 };
        total.add_scaled(&takeuchi_term(h, x, a.blocks())?, sign);
    }
    Ok(total)
}

#[allow(dead_code)]
pub(crate) fn strict_reduction(blocks: &[Subset]) -> SetComposition {
    SetComposition::new(blocks.iter().copied().filter(|b| !b.is_empty()).collect())
        .expect("disjoint nonempty blocks")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gp::GenPermutahedron;
    use crate::ground::{GroundSet, LinearOrder};
    use crate::hopf::{coproduct_sum, GpMonoid, LStarMonoid, OgpBasis, OgpMonoid};
    use num_rational::Rational64;

    type Gp = GenPermutahedron<Rational64>;

    /// `Σ_{S ⊆ I} μ(S(x|_S-part) ⊗ rest)` must vanish for nonempty grounds.
    fn antipode_law<H: HopfMonoid>(h: &H, x: &H::Basis) -> FormalSum<H::Basis> {
        let mut out = FormalSum::zero();
        for s in h.ground(x).subsets() {
            let pieces = coproduct_sum(h, &FormalSum::single(x.clone()), s).unwrap();
            for ((l, r), c) in pieces.iter() {
                let sl = takeuchi_antipode(h, l, 8).unwrap();
                out.add_scaled(
                    &product_sums(h, &sl, &FormalSum::single(r.clone())).unwrap(),
                    c,
                );
            }
        }
        out
    }

    #[test]
    fn lstar_antipode_satisfies_axiom() {
        for n in 1..=4 {
            for w in LinearOrder::all(Subset::full(n)) {
                assert!(antipode_law(&LStarMonoid, &w).is_zero(), "{w:?}");
            }
        }
        let g = GroundSet::lettered(2);
        let s = takeuchi_antipode(&LStarMonoid, &g.word("ab").unwrap(), 8).unwrap();
        assert_eq!(s, FormalSum::single(g.word("ba").unwrap()));
    }

    #[test]
    fn empty_ground_antipode_is_unit() {
        let s = takeuchi_antipode(&LStarMonoid, &LinearOrder::empty(), 8).unwrap();
        assert_eq!(s, FormalSum::single(LinearOrder::empty()));
    }

    #[test]
    fn gp_segment_antipode() {
        let seg = Gp::standard_simplex(Subset::full(2));
        let s = takeuchi_antipode(&GpMonoid::new(), &seg, 8).unwrap();
        let one = Rational64::from_integer(1);
        let zero = Rational64::from_integer(0);
        let expected: FormalSum<Gp> = [
            (seg.clone(), -1),
            (Gp::point(Subset::full(2), &[one, zero]), 1),
            (Gp::point(Subset::full(2), &[zero, one]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(s, expected);
        let single = Gp::point(Subset::singleton(0), &[one]);
        assert_eq!(
            takeuchi_antipode(&GpMonoid::new(), &single, 8).unwrap(),
            FormalSum::term(single, -1)
        );
    }

    #[test]
    fn ogp_segment_antipode() {
        let g = GroundSet::lettered(2);
        let seg = Gp::standard_simplex(g.full());
        let x = OgpBasis::new(g.word("ab").unwrap(), seg.clone()).unwrap();
        let s = takeuchi_antipode(&OgpMonoid::new(), &x, 8).unwrap();
        let ea = seg.face(&g.composition("a|b").unwrap()).unwrap();
        let expected: FormalSum<_> = [
            (x.clone(), -1),
            (OgpBasis::new(g.word("ab").unwrap(), ea.clone()).unwrap(), 1),
            (OgpBasis::new(g.word("ba").unwrap(), ea).unwrap(), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(s, expected);
    }

    /// Every weak composition with up to two empty blocks contributes the
    /// same term as its strict reduction.
    #[test]
    fn weak_composition_terms_reduce_to_strict() {
        let h = OgpMonoid::<Rational64>::new();
        for n in 1..=3 {
            let full = Subset::full(n);
            let p = Gp::regular_permutahedron(full);
            for w in LinearOrder::all(full) {
                let x = OgpBasis::new(w, p.clone()).unwrap();
                for a in enumerate_compositions(full, 8).unwrap() {
                    let strict = takeuchi_term(&h, &x, a.blocks()).unwrap();
                    let slots = a.len() + 1;
                    for e1 in 0..slots {
                        for e2 in e1..=slots {
                            for empties in [1usize, 2] {
                                let mut blocks = a.blocks().to_vec();
                                blocks.insert(e1, Subset::EMPTY);
                                if empties == 2 {
                                    blocks.insert(e2.min(blocks.len()), Subset::EMPTY);
                                }
                                assert_eq!(strict_reduction(&blocks), a);
                                assert_eq!(takeuchi_term(&h, &x, &blocks).unwrap(), strict);
                            }
                        }
                    }
                }
            }
        }
    }
}
