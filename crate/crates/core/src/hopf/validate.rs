use rayon::prelude::*;

use super::{iterated_coproduct, product_sums, takeuchi_antipode, FormalSum, HopfMonoid};
use crate::error::Result;
use crate::subset::Subset;

/// Outcome of [`validate_hopf_axioms`]: how many identities were checked
/// and a witness for each one that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HopfReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.failures.first().map(String::as_str)
    }

    fn merge(&mut self, other: HopfReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(witness());
        }
    }
}

/// Checks associativity, coassociativity, compatibility and the antipode
/// law on each sample. Products are exercised on the factors produced by
/// splitting the samples, so every check runs on genuine disjoint pieces.
pub fn validate_hopf_axioms<H>(h: &H, samples: &[H::Basis], cap: usize) -> Result<HopfReport>
where
    H: HopfMonoid + Sync,
    H::Basis: Send + Sync,
{
    let reports: Vec<Result<HopfReport>> = samples
        .par_iter()
        .map(|x| validate_one(h, x, cap))
        .collect();
    let mut total = HopfReport::default();
    for r in reports {
        total.merge(r?);
    }
    Ok(total)
}

fn validate_one<H: HopfMonoid>(h: &H, x: &H::Basis, cap: usize) -> Result<HopfReport> {
    let mut report = HopfReport::default();
    let g = h.ground(x);
    let single = |b: &H::Basis| FormalSum::single(b.clone());

    // Coassociativity: Δ_{S,T,R} computed in both nestings.
    for (s, t) in two_subsets(g) {
        let r = g.difference(s).difference(t);
        let left = iterated_coproduct(h, x, &[s, t, r])?;
        let mut right = FormalSum::zero();
        for ((a, bc), c) in h.coproduct(x, s)?.iter() {
            for ((b, cc), d) in h.coproduct(bc, t)?.iter() {
                right.add_term(vec![a.clone(), b.clone(), cc.clone()], c * d);
            }
        }
        report.check(left == right, || {
            format!("coassociativity fails for {x:?} at ({s:?}, {t:?}, {r:?})")
        });

        // Associativity on the three factors just produced.
        for (pieces, _) in left.iter() {
            let (a, b, c) = (&pieces[0], &pieces[1], &pieces[2]);
            let ab_c = product_sums(h, &h.product(a, b)?, &single(c))?;
            let a_bc = product_sums(h, &single(a), &h.product(b, c)?)?;
            report.check(ab_c == a_bc, || {
                format!("associativity fails for {a:?}, {b:?}, {c:?}")
            });
        }
    }

    // Compatibility: Δ_S(μ(a, b)) = μ⊗μ (Δ_{S∩A}(a) ⊗ Δ_{S∩B}(b)) on pieces a, b of x.
    for split in g.subsets() {
        for ((a, b), _) in h.coproduct(x, split)?.iter() {
            let ga = h.ground(a);
            let gb = h.ground(b);
            let ab = h.product(a, b)?;
            for s in g.subsets() {
                let mut lhs = FormalSum::zero();
                for (y, c) in ab.iter() {
                    lhs.add_scaled(&h.coproduct(y, s)?, c);
                }
                let mut rhs = FormalSum::zero();
                for ((a1, a2), ca) in h.coproduct(a, s.intersection(ga))?.iter() {
                    for ((b1, b2), cb) in h.coproduct(b, s.intersection(gb))?.iter() {
                        let firsts = h.product(a1, b1)?;
                        let seconds = h.product(a2, b2)?;
                        for (l, cl) in firsts.iter() {
                            for (r, cr) in seconds.iter() {
                                rhs.add_term((l.clone(), r.clone()), ca * cb * cl * cr);
                            }
                        }
                    }
                }
                report.check(lhs == rhs, || {
                    format!("compatibility fails for {a:?} · {b:?} at S = {s:?}")
                });
            }
        }
    }

    // Antipode law: Σ_S μ(S(x_S) ⊗ x_rest) = ε(x) · unit.
    let mut conv = FormalSum::zero();
    for s in g.subsets() {
        for ((l, r), c) in h.coproduct(x, s)?.iter() {
            let sl = takeuchi_antipode(h, l, cap)?;
            conv.add_scaled(&product_sums(h, &sl, &single(r))?, c);
        }
    }
    let expected = FormalSum::term(h.unit(), h.counit(x));
    report.check(conv == expected, || {
        format!("antipode law fails for {x:?}: got {conv:?}")
    });
    Ok(report)
}

/// Ordered pairs `(S, T)` of disjoint subsets of `g`.
fn two_subsets(g: Subset) -> impl Iterator<Item = (Subset, Subset)> {
    g.subsets()
        .flat_map(move |s| g.difference(s).subsets().map(move |t| (s, t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::gp::GenPermutahedron;
    use crate::ground::{shuffles, LinearOrder};
    use crate::hopf::{LStarMonoid, OgpBasis, OgpMonoid};
    use num_rational::Rational64;

    /// `L*` with the prefix condition dropped from the coproduct.
    struct NoPrefix;

    impl HopfMonoid for NoPrefix {
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
            if !left.is_subset_of(v.ground()) {
                return Err(Error::NotAPartition);
            }
            Ok(FormalSum::single((
                v.restrict(left),
                v.restrict(v.ground().difference(left)),
            )))
        }
    }

    #[test]
    fn lstar_passes() {
        let samples: Vec<LinearOrder> = (0..=4)
            .flat_map(|n| LinearOrder::all(Subset::full(n)))
            .collect();
        let report = validate_hopf_axioms(&LStarMonoid, &samples, 8).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
        assert!(report.checks > 1000);
    }

    #[test]
    fn ogp_passes_on_small_polytopes() {
        type Gp = GenPermutahedron<Rational64>;
        let mut samples = Vec::new();
        for p in [
            Gp::regular_permutahedron(Subset::full(3)),
            Gp::hypersimplex(Subset::full(3), 1),
        ] {
            for w in LinearOrder::all(p.ground()) {
                samples.push(OgpBasis::new(w, p.clone()).unwrap());
            }
        }
        let report = validate_hopf_axioms(&OgpMonoid::new(), &samples, 8).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn corrupted_coproduct_is_caught() {
        let samples = LinearOrder::all(Subset::full(2));
        let report = validate_hopf_axioms(&NoPrefix, &samples, 8).unwrap();
        let witness = report
            .failures
            .iter()
            .find(|f| f.starts_with("compatibility"));
        assert!(witness.is_some(), "{:?}", report.failures);
    }
}
