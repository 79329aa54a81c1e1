//! Fixtures and the verification suites behind `ordhopf verify`.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complexes::{
    all_matroids, broken_circuit_complex, is_shifted, order_decomposability_witness,
    validate_hopf_class, HqMonoid, Matroid, OrderedComplex, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::gp::DEFAULT_FACE_CAP;
use crate::ground::{cuttings, GroundSet, LinearOrder};
use crate::hopf::{
    gp_antipode_formula, permutohedron_closed_form, symmetrize, symmetrized_identity_rhs,
    takeuchi_antipode, validate_hopf_axioms, FaceIndex, FormalSum, GpMonoid, InnerSum, LStarMonoid,
    OgpBasis, OgpMonoid,
};
use crate::scrope::all_normalized;
use crate::subset::Subset;
use crate::{Gp, Rational};

pub const DEFAULT_SEED: u64 = 2024;
pub const RANDOM_ORDERS: usize = 50;

pub const SUITES: [&str; 6] = [
    "antipode-equivalence",
    "hopf-axioms",
    "scrope-euler",
    "hopf-class",
    "permutohedron",
    "symmetrization",
];

/// A named polytope used by the suites.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub polytope: Gp,
}

impl Fixture {
    fn new(name: impl Into<String>, polytope: Gp) -> Self {
        Fixture {
            name: name.into(),
            polytope,
        }
    }

    pub fn n(&self) -> usize {
        self.polytope.ground().len()
    }
}

fn matroid_name(m: &Matroid) -> String {
    let g = GroundSet::lettered(m.ground().len());
    let bases: Vec<String> = m
        .bases()
        .iter()
        .map(|&b| {
            if b.is_empty() {
                "∅".into()
            } else {
                g.fmt_set(b)
            }
        })
        .collect();
    format!("M{{{}}}", bases.join(","))
}

/// Matroid polytopes of every matroid on 1..=4 atoms, `U_{2,5}`, `U_{3,5}`,
/// the triangle and path graphs, permutohedra for n = 3, 4 and the
/// hypersimplex (4, 2), filtered to `n ≤ max_n`.
pub fn antipode_fixtures(max_n: usize) -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for m in all_matroids(Subset::full(n))? {
            out.push(Fixture::new(matroid_name(&m), Gp::matroid_polytope(&m)));
        }
    }
    out.push(Fixture::new(
        "U(2,5)",
        Gp::matroid_polytope(&Matroid::uniform(Subset::full(5), 2)),
    ));
    out.push(Fixture::new(
        "U(3,5)",
        Gp::matroid_polytope(&Matroid::uniform(Subset::full(5), 3)),
    ));
    out.push(Fixture::new(
        "graphic triangle",
        Gp::matroid_polytope(&Matroid::graphic(&[(0, 1), (1, 2), (0, 2)])?),
    ));
    out.push(Fixture::new(
        "graphic path",
        Gp::matroid_polytope(&Matroid::graphic(&[(0, 1), (1, 2), (2, 3)])?),
    ));
    out.push(Fixture::new(
        "permutohedron 3",
        Gp::regular_permutahedron(Subset::full(3)),
    ));
    out.push(Fixture::new(
        "permutohedron 4",
        Gp::regular_permutahedron(Subset::full(4)),
    ));
    out.push(Fixture::new(
        "hypersimplex (4,2)",
        Gp::hypersimplex(Subset::full(4), 2),
    ));
    out.retain(|f| f.n() <= max_n);
    Ok(out)
}

/// Every order for `n ≤ 4`; otherwise `RANDOM_ORDERS` seeded random orders.
pub fn fixture_orders(ground: Subset, seed: u64) -> Vec<LinearOrder> {
    if ground.len() <= 4 {
        return LinearOrder::all(ground);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(ground.bits()));
    let atoms: Vec<usize> = ground.iter().collect();
    (0..RANDOM_ORDERS)
        .map(|_| {
            let mut word = atoms.clone();
            word.shuffle(&mut rng);
            LinearOrder::new(word).expect("permutation of the ground")
        })
        .collect()
}

/// Options shared by the suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub max_n: usize,
    pub max_k: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: 5,
            max_k: 8,
            seed: DEFAULT_SEED,
        }
    }
}

/// Result of one suite: counts, failure witnesses and informational notes.
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{}: {} ({} checks, {} failures)",
            self.suite,
            status,
            self.checks,
            self.failures.len()
        )
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    match name {
        "antipode-equivalence" => antipode_equivalence(opts),
        "hopf-axioms" => hopf_axioms(opts),
        "scrope-euler" => scrope_euler(opts),
        "hopf-class" => hopf_class(opts),
        "permutohedron" => permutohedron(opts),
        "symmetrization" => symmetrization(opts),
        other => Err(Error::Parse(format!(
            "unknown suite {other:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

/// Formula against the Takeuchi oracle on every fixture and order, with
/// the multiplicity, collision and locality checks. Also compares the GP
/// antipode formula with its oracle.
pub fn antipode_equivalence(opts: &SuiteOptions) -> Result<SuiteReport> {
    let fixtures = antipode_fixtures(opts.max_n)?;
    let per_fixture: Vec<Result<SuiteReport>> = fixtures
        .par_iter()
        .map(|f| antipode_fixture(f, opts.seed))
        .collect();
    let mut report = SuiteReport::new("antipode-equivalence");
    let low = fixtures
        .iter()
        .filter(|f| f.polytope.dim() + 1 < f.n())
        .count();
    for r in per_fixture {
        report.absorb(r?);
    }
    report.notes.push(format!(
        "{} fixtures, {low} below full dimension",
        fixtures.len()
    ));
    Ok(report)
}

fn antipode_fixture(f: &Fixture, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("antipode-equivalence");
    let p = &f.polytope;
    let index = FaceIndex::new(p, DEFAULT_FACE_CAP)?;
    let h = OgpMonoid::new();
    for w in fixture_orders(p.ground(), seed) {
        let expansion = index.expand(&w)?;
        let oracle =
            takeuchi_antipode(&h, &OgpBasis::new(w.clone(), p.clone())?, DEFAULT_FACE_CAP)?;
        report.check(expansion.sum == oracle, || {
            format!(
                "{} w={:?}: formula − oracle = {:?}",
                f.name,
                w,
                expansion.sum.diff(&oracle)
            )
        });
        report.check(
            expansion.terms.iter().all(|t| (-1..=1).contains(&t.coeff)),
            || format!("{} w={:?}: coefficient outside {{−1, 0, 1}}", f.name, w),
        );
        let keys: BTreeSet<(&LinearOrder, &Gp)> =
            expansion.terms.iter().map(|t| (&t.u, &t.face)).collect();
        report.check(keys.len() == expansion.terms.len(), || {
            format!("{} w={:?}: inner sums collide", f.name, w)
        });
        let v = p.greedy_vertex(&w)?;
        report.check(
            expansion
                .terms
                .iter()
                .all(|t| t.face.vertices().contains(&v)),
            || {
                format!(
                    "{} w={:?}: a supported face misses the greedy vertex",
                    f.name, w
                )
            },
        );
    }
    let gp = gp_antipode_formula(p, DEFAULT_FACE_CAP)?;
    let gp_oracle = takeuchi_antipode(&GpMonoid::new(), p, DEFAULT_FACE_CAP)?;
    report.check(gp == gp_oracle, || {
        format!(
            "{}: GP formula − oracle = {:?}",
            f.name,
            gp.diff(&gp_oracle)
        )
    });
    Ok(report)
}

/// Exhaustive `L*` for `n ≤ 4`, sampled `OGP` and `H_U` elements for `n ≤ 4`,
/// and the corrupted-coproduct negative control.
pub fn hopf_axioms(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n = opts.max_n.min(4);
    let mut report = SuiteReport::new("hopf-axioms");

    let lstar: Vec<LinearOrder> = (0..=n)
        .flat_map(|k| LinearOrder::all(Subset::full(k)))
        .collect();
    let r = validate_hopf_axioms(&LStarMonoid, &lstar, DEFAULT_FACE_CAP)?;
    report.checks += r.checks;
    report
        .failures
        .extend(r.failures.into_iter().map(|s| format!("L*: {s}")));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut ogp = Vec::new();
    for f in antipode_fixtures(n)? {
        let mut orders = LinearOrder::all(f.polytope.ground());
        orders.shuffle(&mut rng);
        for w in orders.into_iter().take(2) {
            ogp.push(OgpBasis::new(w, f.polytope.clone())?);
        }
    }
    let r = validate_hopf_axioms(&OgpMonoid::new(), &ogp, DEFAULT_FACE_CAP)?;
    report.checks += r.checks;
    report
        .failures
        .extend(r.failures.into_iter().map(|s| format!("OGP: {s}")));

    let mut hu = Vec::new();
    for c in decomposable_samples(n)? {
        let mut orders = LinearOrder::all(c.ground());
        orders.shuffle(&mut rng);
        for w in orders.into_iter().take(2) {
            let relabelled = OrderedComplex::new(w.clone(), c.complex.clone())?;
            if order_decomposability_witness(&relabelled)?.is_none() {
                hu.push(relabelled);
            }
        }
        hu.push(c);
    }
    let r = validate_hopf_axioms(&HqMonoid, &hu, DEFAULT_FACE_CAP)?;
    report.checks += r.checks;
    report
        .failures
        .extend(r.failures.into_iter().map(|s| format!("H_U: {s}")));
    report.notes.push(format!(
        "{} L* samples, {} OGP samples, {} H_U samples",
        lstar.len(),
        ogp.len(),
        hu.len()
    ));
    Ok(report)
}

/// Matroid, shifted and broken-circuit complexes on up to `n` atoms.
fn decomposable_samples(n: usize) -> Result<Vec<OrderedComplex>> {
    let mut out = Vec::new();
    for k in 1..=n {
        for m in all_matroids(Subset::full(k))? {
            out.push(OrderedComplex::new(
                LinearOrder::ascending(m.ground()),
                m.independence_complex(),
            )?);
        }
        out.extend(pure_shifted_complexes(k)?);
    }
    Ok(out)
}

/// All nonvoid pure shifted complexes on `0..n` with the ascending order.
pub fn pure_shifted_complexes(n: usize) -> Result<Vec<OrderedComplex>> {
    const CAP: usize = 6;
    if n > CAP {
        return Err(Error::EnumerationTooLarge { n, cap: CAP });
    }
    let ground = Subset::full(n);
    let w = LinearOrder::ascending(ground);
    let mut out = Vec::new();
    for d in 0..=n {
        let level: Vec<Subset> = ground.subsets().filter(|s| s.len() == d).collect();
        for mask in 1u64..1 << level.len() {
            let facets = (0..level.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| level[i]);
            let c = OrderedComplex::new(w.clone(), SimplicialComplex::new(ground, facets)?)?;
            if is_shifted(&c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// Exhaustive Euler bound and algorithm agreement for all normalized
/// interval systems with `k ≤ max_k`.
pub fn scrope_euler(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("scrope-euler");
    let mut total = 0;
    for k in 1..=opts.max_k {
        let systems = all_normalized(k);
        total += systems.len();
        let bad: Vec<String> = systems
            .par_iter()
            .filter_map(|s| {
                let a = s.reduced_euler_inclusion_exclusion();
                let b = s.reduced_euler_direct();
                (a != b || !(-1..=1).contains(&a))
                    .then(|| format!("k={k} {:?}: χ̃ = {a} (direct {b})", s.intervals()))
            })
            .collect();
        report.checks += 2 * systems.len();
        report.failures.extend(bad);
    }
    report
        .notes
        .push(format!("{total} interval systems with k ≤ {}", opts.max_k));
    Ok(report)
}

/// Order-decomposability of matroids, pure shifted complexes and
/// broken-circuit complexes; closure audit from matroid generators; the
/// negative example.
pub fn hopf_class(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n = opts.max_n.min(5);
    let mut report = SuiteReport::new("hopf-class");

    let mut matroids = Vec::new();
    for k in 0..=n {
        for m in all_matroids(Subset::full(k))? {
            matroids.push(OrderedComplex::new(
                LinearOrder::ascending(m.ground()),
                m.independence_complex(),
            )?);
        }
    }
    let shifted: Vec<OrderedComplex> = (1..=n)
        .map(pure_shifted_complexes)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let mut bc = Vec::new();
    for f in [
        Matroid::uniform(Subset::full(3), 2),
        Matroid::uniform(Subset::full(4), 2),
        Matroid::uniform(Subset::full(5), 2),
        Matroid::uniform(Subset::full(5), 3),
        Matroid::graphic(&[(0, 1), (1, 2), (0, 2)])?,
        Matroid::graphic(&[(0, 1), (1, 2), (2, 3)])?,
        Matroid::graphic(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])?,
    ] {
        if f.ground().len() > n {
            continue;
        }
        for w in LinearOrder::all(f.ground()) {
            bc.push(broken_circuit_complex(&f, &w)?);
        }
    }
    for k in 1..=n.min(4) {
        for m in all_matroids(Subset::full(k))? {
            if m.circuits().iter().all(|c| c.len() > 1) {
                bc.push(broken_circuit_complex(
                    &m,
                    &LinearOrder::ascending(m.ground()),
                )?);
            }
        }
    }

    for (label, family) in [
        ("matroid", &matroids),
        ("shifted", &shifted),
        ("broken-circuit", &bc),
    ] {
        let results: Vec<Result<Option<String>>> = family
            .par_iter()
            .map(|c| {
                Ok(order_decomposability_witness(c)?
                    .map(|w| format!("{label} {c:?} not order-decomposable: {w:?}")))
            })
            .collect();
        for r in results {
            let r = r?;
            report.check(r.is_none(), || r.unwrap_or_default());
        }
        if label == "broken-circuit" {
            for c in family {
                report.check(c.complex.is_pure(), || {
                    format!("broken-circuit complex {c:?} is impure")
                });
            }
        }
    }

    let closure = validate_hopf_class(&matroids, n, true)?;
    report.check(closure.passed(), || {
        format!(
            "closure of matroids: impure {:?}, not decomposable {:?}",
            closure.impure, closure.not_decomposable
        )
    });

    let g = GroundSet::lettered(4);
    let bad = OrderedComplex::new(
        g.word("abcd")?,
        SimplicialComplex::new(g.full(), [g.subset(["a", "b"])?, g.subset(["c", "d"])?])?,
    )?;
    let witness = order_decomposability_witness(&bad)?;
    let expected_prefix = g.subset(["a", "b", "c"])?;
    report.check(
        witness.as_ref().is_some_and(|w| {
            w.path.first().map(|p| p.0) == Some(expected_prefix) && !w.complex.complex.is_pure()
        }),
        || format!("⟨ab,cd⟩ witness unexpected: {witness:?}"),
    );
    report.notes.push(format!(
        "{} matroids, {} shifted, {} broken-circuit complexes; closure has {} members",
        matroids.len(),
        shifted.len(),
        bc.len(),
        closure.members.len()
    ));
    Ok(report)
}

/// Closed form, formula and oracle agree for the natural order on
/// permutohedra with `n = 3, 4`, and only natural faces occur.
pub fn permutohedron(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("permutohedron");
    for n in 3..=opts.max_n.clamp(3, 4) {
        let pi = Gp::regular_permutahedron(Subset::full(n));
        let w = LinearOrder::ascending(pi.ground());
        let closed = permutohedron_closed_form::<Rational>(&w)?;
        let formula = FaceIndex::new(&pi, DEFAULT_FACE_CAP)?.expand(&w)?;
        let oracle = takeuchi_antipode(
            &OgpMonoid::new(),
            &OgpBasis::new(w.clone(), pi.clone())?,
            DEFAULT_FACE_CAP,
        )?;
        report.check(closed == formula.sum, || {
            format!(
                "n={n}: closed form − formula = {:?}",
                closed.diff(&formula.sum)
            )
        });
        report.check(closed == oracle, || {
            format!("n={n}: closed form − oracle = {:?}", closed.diff(&oracle))
        });
        let natural: BTreeSet<Gp> = cuttings(&w)
            .iter()
            .map(|a| pi.face(a))
            .collect::<Result<_>>()?;
        report.check(
            closed.basis().all(|x| natural.contains(&x.polytope)),
            || format!("n={n}: non-natural face"),
        );
        let first = formula
            .terms
            .iter()
            .filter(|t| t.source == InnerSum::First)
            .count();
        report.notes.push(format!(
            "n={n}: {} terms ({first} from the first inner sum)",
            closed.len()
        ));
    }
    Ok(report)
}

/// `Σ_w S(w ⊗ p) = (−1)^{|I|} Σ_{q,u} (−1)^{dim q} u ⊗ q` and the Hopf
/// morphism property of symmetrization, for fixtures with `n ≤ 4`.
pub fn symmetrization(opts: &SuiteOptions) -> Result<SuiteReport> {
    let fixtures = antipode_fixtures(opts.max_n.min(4))?;
    let results: Vec<Result<SuiteReport>> = fixtures
        .par_iter()
        .map(|f| {
            let mut report = SuiteReport::new("symmetrization");
            let p = &f.polytope;
            let h = OgpMonoid::new();
            let mut lhs = FormalSum::zero();
            for (x, c) in symmetrize(p).iter() {
                lhs.add_scaled(&takeuchi_antipode(&h, x, DEFAULT_FACE_CAP)?, c);
            }
            let rhs = symmetrized_identity_rhs(p, DEFAULT_FACE_CAP)?;
            report.check(lhs == rhs, || {
                format!("{}: Σ_w S(w⊗p) − rhs = {:?}", f.name, lhs.diff(&rhs))
            });

            // Δ(sym p) = (sym ⊗ sym)(Δ p) for every split.
            for s in p.ground().subsets() {
                let mut left = FormalSum::zero();
                for (x, c) in symmetrize(p).iter() {
                    left.add_scaled(&crate::hopf::HopfMonoid::coproduct(&h, x, s)?, c);
                }
                let (a, b) = (p.restrict(s)?, p.contract(s)?);
                let mut right = FormalSum::zero();
                for (x, _) in symmetrize(&a).iter() {
                    for (y, _) in symmetrize(&b).iter() {
                        right.add_term((x.clone(), y.clone()), 1);
                    }
                }
                report.check(left == right, || {
                    format!(
                        "{}: symmetrization is not comultiplicative at {s:?}",
                        f.name
                    )
                });
            }
            Ok(report)
        })
        .collect();
    let mut report = SuiteReport::new("symmetrization");
    for r in results {
        report.absorb(r?);
    }
    report.notes.push(format!("{} fixtures", fixtures.len()));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_inventory() {
        let all = antipode_fixtures(5).unwrap();
        // 2 + 5 + 16 + 68 matroids, then 7 named fixtures.
        assert_eq!(all.len(), 91 + 7);
        assert_eq!(antipode_fixtures(4).unwrap().len(), 96);
    }

    #[test]
    fn orders_are_deterministic() {
        let a = fixture_orders(Subset::full(5), 1);
        let b = fixture_orders(Subset::full(5), 1);
        assert_eq!(a, b);
        assert_eq!(a.len(), RANDOM_ORDERS);
        assert_eq!(fixture_orders(Subset::full(3), 1).len(), 6);
    }

    #[test]
    fn shifted_counts() {
        // Pure shifted complexes on two atoms: {∅}, ⟨a⟩, ⟨a,b⟩, ⟨ab⟩.
        assert_eq!(pure_shifted_complexes(2).unwrap().len(), 4);
    }

    #[test]
    fn small_suites_pass() {
        let opts = SuiteOptions {
            max_n: 3,
            max_k: 5,
            seed: 1,
        };
        for name in SUITES {
            let r = run_suite(name, &opts).unwrap();
            assert!(r.passed(), "{r}: {:?}", r.failures.first());
        }
        assert!(run_suite("nope", &opts).is_err());
    }
}
