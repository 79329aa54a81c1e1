//! Simplicial complexes, ordered complexes, matroids and the Hopf monoid
//! `H_Q` of pure ordered complexes.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::ground::{shuffles, LinearOrder};
use crate::hopf::{FormalSum, HopfMonoid};
use crate::subset::{Subset, MAX_ATOMS};

/// Largest ground set accepted by the order-decomposability checker.
pub const MAX_DECOMPOSABLE_N: usize = 10;

/// A simplicial complex given by its facets.
///
/// The void complex has no facets at all; `{∅}` has the single facet `∅`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplicialComplex {
    ground: Subset,
    facets: Vec<Subset>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void");
        }
        write!(f, "⟨")?;
        for (k, s) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s:?}")?;
        }
        write!(f, "⟩")
    }
}

/// Maximal members, sorted and deduplicated.
fn maximal(sets: impl IntoIterator<Item = Subset>) -> Vec<Subset> {
    let mut all: Vec<Subset> = sets.into_iter().collect();
    all.sort();
    all.dedup();
    let keep: Vec<Subset> = all
        .iter()
        .copied()
        .filter(|&s| !all.iter().any(|&t| t != s && s.is_subset_of(t)))
        .collect();
    keep
}

impl SimplicialComplex {
    /// The complex generated by `facets`; non-maximal generators are dropped.
    pub fn new(ground: Subset, facets: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let facets = maximal(facets);
        if facets.iter().any(|f| !f.is_subset_of(ground)) {
            return Err(Error::GroundMismatch);
        }
        Ok(SimplicialComplex { ground, facets })
    }

    pub fn void(ground: Subset) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    /// `{∅}` on `ground`.
    pub fn empty_face(ground: Subset) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![Subset::EMPTY],
        }
    }

    pub fn simplex(ground: Subset) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![ground],
        }
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn facets(&self) -> &[Subset] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.facets.iter().any(|&f| s.is_subset_of(f))
    }

    /// All faces, sorted.
    pub fn faces(&self) -> Vec<Subset> {
        let set: BTreeSet<Subset> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        set.into_iter().collect()
    }

    /// `max |F| − 1`, or `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// All facets have the same size. The void complex counts as pure.
    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|p| p[0].len() == p[1].len())
    }

    /// `Σ|_S = { S ∩ σ : σ ∈ Σ }` on ground `S`.
    pub fn restriction(&self, s: Subset) -> SimplicialComplex {
        let s = s.intersection(self.ground);
        SimplicialComplex {
            ground: s,
            facets: maximal(self.facets.iter().map(|f| f.intersection(s))),
        }
    }

    /// `lk_Σ(σ) = { τ : τ ∩ σ = ∅, τ ∪ σ ∈ Σ }` on ground `I ∖ σ`.
    pub fn link(&self, sigma: Subset) -> Result<SimplicialComplex> {
        if !self.contains(sigma) {
            return Err(Error::NotAComplexFace(format!("{sigma:?}")));
        }
        let facets = maximal(
            self.facets
                .iter()
                .filter(|f| sigma.is_subset_of(**f))
                .map(|f| f.difference(sigma)),
        );
        Ok(SimplicialComplex {
            ground: self.ground.difference(sigma),
            facets,
        })
    }

    /// `Σ₁ ∗ Σ₂ = { σ₁ ∪ σ₂ }` on the disjoint union of the grounds.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if !self.ground.is_disjoint(other.ground) {
            return Err(Error::OverlappingGrounds);
        }
        let facets = self
            .facets
            .iter()
            .flat_map(|&a| other.facets.iter().map(move |&b| a.union(b)))
            .collect::<Vec<_>>();
        Ok(SimplicialComplex {
            ground: self.ground.union(other.ground),
            facets: maximal(facets),
        })
    }

    /// `χ̃(Σ) = Σ_{σ ∈ Σ} (−1)^{|σ|−1}`, counting `∅` with `−1`.
    pub fn reduced_euler(&self) -> i64 {
        self.faces()
            .iter()
            .map(|s| if s.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// Minimal subsets of the ground that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<Subset> {
        self.ground
            .subsets()
            .filter(|&s| !self.contains(s) && s.iter().all(|i| self.contains(s.without(i))))
            .collect()
    }

    /// Every restriction `Σ|_S` is pure and nonvoid.
    pub fn is_matroid_complex(&self) -> bool {
        !self.is_void() && self.ground.subsets().all(|s| self.restriction(s).is_pure())
    }

    fn relabel(&self, map: &[usize; MAX_ATOMS]) -> SimplicialComplex {
        let image = |s: Subset| Subset::from_indices(s.iter().map(|i| map[i]));
        SimplicialComplex {
            ground: image(self.ground),
            facets: maximal(self.facets.iter().map(|&f| image(f))),
        }
    }
}

/// A simplicial complex together with a linear order on its ground.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedComplex {
    pub order: LinearOrder,
    pub complex: SimplicialComplex,
}

impl fmt::Debug for OrderedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} ⊗ {:?}", self.order, self.complex)
    }
}

impl OrderedComplex {
    pub fn new(order: LinearOrder, complex: SimplicialComplex) -> Result<Self> {
        if order.ground() != complex.ground() {
            return Err(Error::GroundMismatch);
        }
        Ok(OrderedComplex { order, complex })
    }

    /// `∅ ⊗ {∅}`.
    pub fn unit() -> Self {
        OrderedComplex {
            order: LinearOrder::empty(),
            complex: SimplicialComplex::empty_face(Subset::EMPTY),
        }
    }

    pub fn ground(&self) -> Subset {
        self.order.ground()
    }

    pub fn restriction(&self, s: Subset) -> OrderedComplex {
        let s = s.intersection(self.ground());
        OrderedComplex {
            order: self.order.restrict(s),
            complex: self.complex.restriction(s),
        }
    }

    /// `Σ/S`: the link of the lexicographically smallest facet of `Σ|_S`,
    /// with the order restricted to `I ∖ S`. `S` must be a prefix of the order.
    pub fn ordered_contraction(&self, s: Subset) -> Result<OrderedComplex> {
        if !s.is_subset_of(self.ground()) || !self.order.is_prefix(s) {
            return Err(Error::NotAPrefix);
        }
        let rest = self.ground().difference(s);
        let order = self.order.restrict(rest);
        let pos = self.order.positions();
        let key = |f: &Subset| {
            let mut p: Vec<usize> = f.iter().map(|i| pos[i]).collect();
            p.sort_unstable();
            p
        };
        let Some(smallest) = self
            .complex
            .restriction(s)
            .facets
            .iter()
            .min_by_key(|f| key(f))
            .copied()
        else {
            return Ok(OrderedComplex {
                order,
                complex: SimplicialComplex::void(rest),
            });
        };
        let link = self.complex.link(smallest)?;
        // A facet of Σ|_S has no neighbours inside S, so the link lives on I ∖ S.
        let complex = SimplicialComplex::new(rest, link.facets)?;
        Ok(OrderedComplex { order, complex })
    }

    /// Relabels along the order onto `0..n` with the ascending order.
    pub fn canonical(&self) -> OrderedComplex {
        let mut map = [0usize; MAX_ATOMS];
        for (k, i) in self.order.iter().enumerate() {
            map[i] = k;
        }
        OrderedComplex {
            order: LinearOrder::ascending(Subset::full(self.order.len())),
            complex: self.complex.relabel(&map),
        }
    }

    /// Shifts every atom up by `offset`.
    pub fn shifted(&self, offset: usize) -> OrderedComplex {
        let mut map = [0usize; MAX_ATOMS];
        for (i, slot) in map.iter_mut().enumerate() {
            *slot = (i + offset).min(MAX_ATOMS - 1);
        }
        let order = LinearOrder::new(self.order.iter().map(|i| i + offset).collect())
            .expect("shift stays in range");
        OrderedComplex {
            order,
            complex: self.complex.relabel(&map),
        }
    }
}

/// `Σ_{w ∈ Sh(w₁, w₂)} w ⊗ (Σ₁ ∗ Σ₂)`.
pub fn shuffle_join_product(
    a: &OrderedComplex,
    b: &OrderedComplex,
) -> Result<FormalSum<OrderedComplex>> {
    let complex = a.complex.join(&b.complex)?;
    Ok(shuffles(&[a.order.clone(), b.order.clone()])?
        .into_iter()
        .map(|w| {
            (
                OrderedComplex {
                    order: w,
                    complex: complex.clone(),
                },
                1,
            )
        })
        .collect())
}

/// `Δ_{I,J}(w ⊗ Σ) = (w|_I ⊗ Σ|_I) ⊗ (w|_J ⊗ Σ/I)` when `I` is a prefix of `w`, else zero.
pub fn hq_coproduct(
    c: &OrderedComplex,
    left: Subset,
) -> Result<FormalSum<(OrderedComplex, OrderedComplex)>> {
    if !left.is_subset_of(c.ground()) {
        return Err(Error::NotAPartition);
    }
    if !c.order.is_prefix(left) {
        return Ok(FormalSum::zero());
    }
    Ok(FormalSum::single((
        c.restriction(left),
        c.ordered_contraction(left)?,
    )))
}

/// The Hopf monoid of ordered simplicial complexes under shuffled joins
/// and prefix restriction/contraction.
#[derive(Clone, Copy, Debug, Default)]
pub struct HqMonoid;

impl HopfMonoid for HqMonoid {
    type Basis = OrderedComplex;

    fn ground(&self, x: &OrderedComplex) -> Subset {
        x.ground()
    }

    fn unit(&self) -> OrderedComplex {
        OrderedComplex::unit()
    }

    fn product(&self, x: &OrderedComplex, y: &OrderedComplex) -> Result<FormalSum<OrderedComplex>> {
        shuffle_join_product(x, y)
    }

    fn coproduct(
        &self,
        x: &OrderedComplex,
        left: Subset,
    ) -> Result<FormalSum<(OrderedComplex, OrderedComplex)>> {
        hq_coproduct(x, left)
    }
}

/// Replacing any vertex of a face by a smaller one yields a face.
/// Checking facets suffices: faces are subsets of facets, and the
/// replacement of a face sits inside the replacement of its facet.
pub fn is_shifted(c: &OrderedComplex) -> bool {
    let pos = c.order.positions();
    c.complex.facets.iter().all(|&f| {
        f.iter().all(|e| {
            c.ground()
                .difference(f)
                .iter()
                .filter(|&g| pos[g] < pos[e])
                .all(|g| c.complex.contains(f.without(e).with(g)))
        })
    })
}

/// A matroid given by its bases.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matroid {
    ground: Subset,
    bases: Vec<Subset>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid{:?}{:?}", self.ground, self.bases)
    }
}

impl Matroid {
    /// Validates that the bases are nonempty, equicardinal and satisfy exchange.
    pub fn new(ground: Subset, bases: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort();
        bases.dedup();
        if bases.is_empty() {
            return Err(Error::InvalidMatroid("no bases".into()));
        }
        if bases.iter().any(|b| !b.is_subset_of(ground)) {
            return Err(Error::InvalidMatroid("basis outside the ground set".into()));
        }
        if bases.iter().any(|b| b.len() != bases[0].len()) {
            return Err(Error::InvalidMatroid("bases of different sizes".into()));
        }
        if let Some((b1, b2, x)) = exchange_failure(&bases) {
            return Err(Error::InvalidMatroid(format!(
                "exchange fails for {b1:?}, {b2:?} at {x}"
            )));
        }
        Ok(Matroid { ground, bases })
    }

    fn from_bases_unchecked(ground: Subset, mut bases: Vec<Subset>) -> Self {
        bases.sort();
        bases.dedup();
        Matroid { ground, bases }
    }

    /// `U_{k,n}` on `ground`.
    pub fn uniform(ground: Subset, k: usize) -> Self {
        let bases = ground.subsets().filter(|s| s.len() == k).collect();
        Matroid::from_bases_unchecked(ground, bases)
    }

    /// Every subset is independent.
    pub fn free(ground: Subset) -> Self {
        Matroid::from_bases_unchecked(ground, vec![ground])
    }

    /// The cycle matroid of a multigraph; edge `k` is atom `k`.
    pub fn graphic(edges: &[(usize, usize)]) -> Result<Self> {
        if edges.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms(edges.len()));
        }
        let ground = Subset::full(edges.len());
        let acyclic = |s: Subset| {
            let mut parent: HashMap<usize, usize> = HashMap::new();
            fn find(p: &mut HashMap<usize, usize>, x: usize) -> usize {
                let up = *p.get(&x).unwrap_or(&x);
                if up == x {
                    return x;
                }
                let root = find(p, up);
                p.insert(x, root);
                root
            }
            s.iter().all(|e| {
                let (a, b) = edges[e];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent.insert(ra, rb);
                ra != rb
            })
        };
        let forests: Vec<Subset> = ground.subsets().filter(|&s| acyclic(s)).collect();
        let r = forests.iter().map(|s| s.len()).max().unwrap_or(0);
        Ok(Matroid::from_bases_unchecked(
            ground,
            forests.into_iter().filter(|s| s.len() == r).collect(),
        ))
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn rank(&self, s: Subset) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(s).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.bases.iter().any(|&b| s.is_subset_of(b))
    }

    /// Minimal dependent sets.
    pub fn circuits(&self) -> Vec<Subset> {
        self.ground
            .subsets()
            .filter(|&s| {
                !self.is_independent(s) && s.iter().all(|i| self.is_independent(s.without(i)))
            })
            .collect()
    }

    /// `M|_S`.
    pub fn restriction(&self, s: Subset) -> Matroid {
        let s = s.intersection(self.ground);
        let r = self.rank(s);
        let bases = self
            .bases
            .iter()
            .map(|b| b.intersection(s))
            .filter(|b| b.len() == r)
            .collect();
        Matroid::from_bases_unchecked(s, bases)
    }

    /// `M/S` on `I ∖ S`.
    pub fn contraction(&self, s: Subset) -> Matroid {
        let s = s.intersection(self.ground);
        let r = self.rank(s);
        let bases = self
            .bases
            .iter()
            .filter(|b| b.intersection(s).len() == r)
            .map(|b| b.difference(s))
            .collect();
        Matroid::from_bases_unchecked(self.ground.difference(s), bases)
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        if !self.ground.is_disjoint(other.ground) {
            return Err(Error::OverlappingGrounds);
        }
        let bases = self
            .bases
            .iter()
            .flat_map(|&a| other.bases.iter().map(move |&b| a.union(b)))
            .collect();
        Ok(Matroid::from_bases_unchecked(
            self.ground.union(other.ground),
            bases,
        ))
    }

    pub fn independence_complex(&self) -> SimplicialComplex {
        SimplicialComplex {
            ground: self.ground,
            facets: self.bases.clone(),
        }
    }
}

fn exchange_failure(bases: &[Subset]) -> Option<(Subset, Subset, usize)> {
    let set: HashSet<Subset> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for x in b1.difference(b2).iter() {
                if !b2
                    .difference(b1)
                    .iter()
                    .any(|y| set.contains(&b1.without(x).with(y)))
                {
                    return Some((b1, b2, x));
                }
            }
        }
    }
    None
}

/// All matroids on `ground`, by brute force over families of equal-size
/// subsets. Feasible for `|ground| ≤ 5`.
pub fn all_matroids(ground: Subset) -> Result<Vec<Matroid>> {
    const CAP: usize = 5;
    if ground.len() > CAP {
        return Err(Error::EnumerationTooLarge {
            n: ground.len(),
            cap: CAP,
        });
    }
    let mut out = Vec::new();
    for k in 0..=ground.len() {
        let level: Vec<Subset> = ground.subsets().filter(|s| s.len() == k).collect();
        for mask in 1u32..1 << level.len() {
            let bases: Vec<Subset> = (0..level.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| level[i])
                .collect();
            if exchange_failure(&bases).is_none() {
                out.push(Matroid::from_bases_unchecked(ground, bases));
            }
        }
    }
    Ok(out)
}

/// `BC_w(M)`: the sets containing no broken circuit (a circuit minus its
/// `w`-smallest element). A matroid with a loop has `∅` as a broken
/// circuit, so its complex is void.
pub fn broken_circuit_complex(m: &Matroid, w: &LinearOrder) -> Result<OrderedComplex> {
    if w.ground() != m.ground() {
        return Err(Error::GroundMismatch);
    }
    let pos = w.positions();
    let broken: Vec<Subset> = m
        .circuits()
        .into_iter()
        .map(|c| {
            let first = c
                .iter()
                .min_by_key(|&i| pos[i])
                .expect("circuits are nonempty");
            c.without(first)
        })
        .collect();
    let faces = m
        .ground()
        .subsets()
        .filter(|s| !broken.iter().any(|b| b.is_subset_of(*s)));
    let complex = SimplicialComplex::new(m.ground(), faces)?;
    OrderedComplex::new(w.clone(), complex)
}

/// The part of a decomposition step that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionPart {
    Restriction,
    Contraction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionFailure {
    Void,
    Impure,
}

/// Why a complex is not order-decomposable: the chain of prefix steps
/// leading to the offending complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionWitness {
    pub path: Vec<(Subset, DecompositionPart)>,
    pub complex: OrderedComplex,
    pub failure: DecompositionFailure,
}

/// Order-decomposable: a single facet, or pure with every proper prefix
/// restriction and contraction order-decomposable.
pub fn is_order_decomposable(c: &OrderedComplex) -> Result<bool> {
    Ok(order_decomposability_witness(c)?.is_none())
}

pub fn order_decomposability_witness(c: &OrderedComplex) -> Result<Option<DecompositionWitness>> {
    let n = c.ground().len();
    if n > MAX_DECOMPOSABLE_N {
        return Err(Error::EnumerationTooLarge {
            n,
            cap: MAX_DECOMPOSABLE_N,
        });
    }
    let mut memo = HashMap::new();
    decompose(c, &mut memo)
}

fn decompose(
    c: &OrderedComplex,
    memo: &mut HashMap<OrderedComplex, Option<DecompositionWitness>>,
) -> Result<Option<DecompositionWitness>> {
    if let Some(known) = memo.get(c) {
        return Ok(known.clone());
    }
    let fail = |failure| {
        Some(DecompositionWitness {
            path: Vec::new(),
            complex: c.clone(),
            failure,
        })
    };
    let result = if c.complex.is_void() {
        fail(DecompositionFailure::Void)
    } else if c.complex.facets.len() == 1 {
        None
    } else if !c.complex.is_pure() {
        fail(DecompositionFailure::Impure)
    } else {
        let mut found = None;
        'prefixes: for k in 1..c.order.len() {
            let a = c.order.prefix(k);
            let parts = [
                (DecompositionPart::Restriction, c.restriction(a)),
                (DecompositionPart::Contraction, c.ordered_contraction(a)?),
            ];
            for (part, sub) in parts {
                if let Some(mut w) = decompose(&sub, memo)? {
                    w.path.insert(0, (a, part));
                    found = Some(w);
                    break 'prefixes;
                }
            }
        }
        found
    };
    memo.insert(c.clone(), result.clone());
    Ok(result)
}

/// Summary of a Hopf-class closure run.
#[derive(Clone, Debug, Default)]
pub struct HopfClassReport {
    /// Canonical forms in the closure, in discovery order.
    pub members: Vec<OrderedComplex>,
    pub impure: Vec<OrderedComplex>,
    pub not_decomposable: Vec<(OrderedComplex, DecompositionWitness)>,
}

impl HopfClassReport {
    pub fn passed(&self) -> bool {
        self.impure.is_empty() && self.not_decomposable.is_empty()
    }
}

/// Closes the canonical forms of `generators` under shuffled joins,
/// prefix restrictions and prefix contractions, up to `max_n` atoms, and
/// reports members that are impure or (when asked) not order-decomposable.
pub fn validate_hopf_class(
    generators: &[OrderedComplex],
    max_n: usize,
    check_decomposable: bool,
) -> Result<HopfClassReport> {
    if max_n > MAX_DECOMPOSABLE_N {
        return Err(Error::EnumerationTooLarge {
            n: max_n,
            cap: MAX_DECOMPOSABLE_N,
        });
    }
    let mut seen: HashSet<OrderedComplex> = HashSet::new();
    let mut members: Vec<OrderedComplex> = Vec::new();
    let mut pending: Vec<OrderedComplex> = Vec::new();
    let push = |c: OrderedComplex,
                seen: &mut HashSet<OrderedComplex>,
                pending: &mut Vec<OrderedComplex>| {
        if c.ground().len() <= max_n && seen.insert(c.clone()) {
            pending.push(c);
        }
    };
    for g in generators {
        push(g.canonical(), &mut seen, &mut pending);
    }
    let mut cursor = 0;
    while cursor < pending.len() {
        let x = pending[cursor].clone();
        cursor += 1;
        for k in 0..=x.order.len() {
            let a = x.order.prefix(k);
            push(x.restriction(a).canonical(), &mut seen, &mut pending);
            push(
                x.ordered_contraction(a)?.canonical(),
                &mut seen,
                &mut pending,
            );
        }
        members.push(x.clone());
        for y in members.clone() {
            let total = x.order.len() + y.order.len();
            if total > max_n {
                continue;
            }
            for (l, r) in [(&x, &y), (&y, &x)] {
                for (z, _) in shuffle_join_product(l, &r.shifted(l.order.len()))?.iter() {
                    push(z.canonical(), &mut seen, &mut pending);
                }
            }
        }
    }

    let mut report = HopfClassReport {
        members: pending,
        ..Default::default()
    };
    for c in &report.members {
        if !c.complex.is_pure() {
            report.impure.push(c.clone());
        }
        if check_decomposable {
            if let Some(w) = order_decomposability_witness(c)? {
                report.not_decomposable.push((c.clone(), w));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::hopf::validate_hopf_axioms;

    fn g4() -> GroundSet {
        GroundSet::lettered(4)
    }

    fn cx(g: &GroundSet, ground: &str, facets: &[&str]) -> SimplicialComplex {
        let sub = |t: &str| g.subset(t.chars().map(|c| c.to_string())).unwrap();
        SimplicialComplex::new(sub(ground), facets.iter().map(|f| sub(f))).unwrap()
    }

    fn oc(g: &GroundSet, order: &str, facets: &[&str]) -> OrderedComplex {
        OrderedComplex::new(g.word(order).unwrap(), cx(g, order, facets)).unwrap()
    }

    #[test]
    fn restriction_and_link() {
        let g = g4();
        let c = cx(&g, "abcd", &["ab", "cd"]);
        assert_eq!(
            c.restriction(g.subset(["a", "b", "c"]).unwrap()),
            cx(&g, "abc", &["ab", "c"])
        );
        assert_eq!(c.restriction(g.full()), c);
        let d = cx(&g, "abc", &["ab", "ac"]);
        assert_eq!(d.link(Subset::EMPTY).unwrap(), d);
        assert_eq!(
            d.link(g.subset(["a"]).unwrap()).unwrap(),
            cx(&g, "bc", &["b", "c"])
        );
        assert_eq!(
            d.link(g.subset(["a", "b"]).unwrap()).unwrap().facets(),
            &[Subset::EMPTY]
        );
        assert!(d.link(g.subset(["b", "c"]).unwrap()).is_err());
    }

    #[test]
    fn contraction_examples() {
        let g = g4();
        let c = oc(&g, "abc", &["ab", "ac"]);
        let a = g.subset(["a"]).unwrap();
        assert_eq!(c.ordered_contraction(a).unwrap(), oc(&g, "bc", &["b", "c"]));
        assert_eq!(c.ordered_contraction(Subset::EMPTY).unwrap(), c);
        assert_eq!(
            c.ordered_contraction(g.subset(["b"]).unwrap()),
            Err(Error::NotAPrefix)
        );
    }

    #[test]
    fn matroid_contraction_is_independent_of_order() {
        let u24 = Matroid::uniform(Subset::full(4), 2);
        for w in LinearOrder::all(u24.ground()) {
            let c = OrderedComplex::new(w.clone(), u24.independence_complex()).unwrap();
            for k in 0..=4 {
                let s = w.prefix(k);
                let contracted = c.ordered_contraction(s).unwrap();
                assert_eq!(
                    contracted.complex,
                    u24.contraction(s).independence_complex()
                );
                assert_eq!(
                    c.restriction(s).complex,
                    u24.restriction(s).independence_complex()
                );
            }
        }
    }

    #[test]
    fn joins() {
        let g = g4();
        let a = oc(&g, "a", &["a"]);
        let b = oc(&g, "b", &["b"]);
        let p = shuffle_join_product(&a, &b).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.iter().all(|(z, _)| z.complex == cx(&g, "ab", &["ab"])));
        let with_unit = shuffle_join_product(&a, &OrderedComplex::unit()).unwrap();
        assert_eq!(with_unit, FormalSum::single(a));

        let m1 = Matroid::uniform(Subset::from_indices([0, 1]), 1);
        let m2 = Matroid::uniform(Subset::from_indices([2, 3]), 1);
        let joined = m1
            .independence_complex()
            .join(&m2.independence_complex())
            .unwrap();
        assert_eq!(joined, m1.direct_sum(&m2).unwrap().independence_complex());
    }

    #[test]
    fn join_euler_identity() {
        let g = GroundSet::lettered(6);
        let samples = [
            cx(&g, "abc", &["ab", "c"]),
            cx(&g, "abc", &["ab", "bc", "ac"]),
            cx(&g, "abc", &[""]),
            SimplicialComplex::void(g.subset(["a", "b", "c"]).unwrap()),
            cx(&g, "abc", &["abc"]),
        ];
        let others = [
            cx(&g, "def", &["d", "e", "f"]),
            cx(&g, "def", &["de", "ef"]),
            cx(&g, "def", &[""]),
            cx(&g, "def", &["de", "f"]),
        ];
        for s in &samples {
            for t in &others {
                let j = s.join(t).unwrap();
                assert_eq!(
                    j.reduced_euler(),
                    -s.reduced_euler() * t.reduced_euler(),
                    "{s:?} * {t:?}"
                );
            }
        }
    }

    #[test]
    fn hq_coproduct_examples() {
        let u23 = Matroid::uniform(Subset::full(3), 2);
        let w = LinearOrder::ascending(Subset::full(3));
        let c = OrderedComplex::new(w.clone(), u23.independence_complex()).unwrap();
        let first = Subset::singleton(0);
        let expected = (
            OrderedComplex::new(
                w.restrict(first),
                u23.restriction(first).independence_complex(),
            )
            .unwrap(),
            OrderedComplex::new(
                w.restrict(Subset::from_indices([1, 2])),
                u23.contraction(first).independence_complex(),
            )
            .unwrap(),
        );
        assert_eq!(
            hq_coproduct(&c, first).unwrap(),
            FormalSum::single(expected)
        );
        assert!(hq_coproduct(&c, Subset::singleton(1)).unwrap().is_zero());
        let (l, r) = hq_coproduct(&c, Subset::EMPTY)
            .unwrap()
            .into_iter()
            .next()
            .unwrap()
            .0;
        assert_eq!(l, OrderedComplex::unit());
        assert_eq!(r, c);
    }

    #[test]
    fn shifted_examples() {
        let g = GroundSet::lettered(3);
        assert!(is_shifted(&oc(&g, "abc", &["ab", "ac"])));
        assert!(!is_shifted(&oc(&g, "abc", &["bc"])));
        assert!(is_shifted(&oc(&g, "abc", &[""])));
        assert!(!is_shifted(&oc(&g, "cba", &["ab", "ac"])));
    }

    #[test]
    fn circuits_and_broken_circuits() {
        let g = GroundSet::lettered(3);
        let w = g.word("abc").unwrap();
        let u23 = Matroid::uniform(g.full(), 2);
        assert_eq!(u23.circuits(), vec![g.full()]);
        assert_eq!(
            broken_circuit_complex(&u23, &w).unwrap(),
            oc(&g, "abc", &["ab", "ac"])
        );
        let free = Matroid::free(g.full());
        assert_eq!(
            broken_circuit_complex(&free, &w).unwrap().complex,
            SimplicialComplex::simplex(g.full())
        );
        let u13 = Matroid::uniform(g.full(), 1);
        assert_eq!(u13.circuits().len(), 3);
        assert_eq!(
            broken_circuit_complex(&u13, &w).unwrap(),
            oc(&g, "abc", &["a"])
        );
    }

    #[test]
    fn matroid_counts_and_validation() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| all_matroids(Subset::full(n)).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 2, 5, 16, 68, 406]);
        assert!(Matroid::new(
            Subset::full(4),
            [Subset::from_indices([0, 1]), Subset::from_indices([2, 3])]
        )
        .is_err());
        assert!(Matroid::new(Subset::full(2), []).is_err());
        let triangle = Matroid::graphic(&[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(triangle, Matroid::uniform(Subset::full(3), 2));
        let path = Matroid::graphic(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path, Matroid::free(Subset::full(3)));
    }

    #[test]
    fn matroid_recognizer_agreement() {
        // Every antichain of equal-size sets on four atoms.
        let ground = Subset::full(4);
        for k in 0..=4 {
            let level: Vec<Subset> = ground.subsets().filter(|s| s.len() == k).collect();
            for mask in 1u32..1 << level.len() {
                let bases: Vec<Subset> = (0..level.len())
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| level[i])
                    .collect();
                let exchange = Matroid::new(ground, bases.iter().copied()).is_ok();
                let complex = SimplicialComplex::new(ground, bases).unwrap();
                assert_eq!(exchange, complex.is_matroid_complex(), "{complex:?}");
            }
        }
    }

    #[test]
    fn decomposability_examples() {
        let g = g4();
        let bad = oc(&g, "abcd", &["ab", "cd"]);
        let w = order_decomposability_witness(&bad).unwrap().unwrap();
        assert_eq!(
            w.path,
            vec![(
                g.subset(["a", "b", "c"]).unwrap(),
                DecompositionPart::Restriction
            )]
        );
        assert_eq!(w.complex, oc(&g, "abc", &["ab", "c"]));
        assert_eq!(w.failure, DecompositionFailure::Impure);
        assert!(!is_order_decomposable(
            &OrderedComplex::new(
                g.word("ab").unwrap(),
                SimplicialComplex::void(g.subset(["a", "b"]).unwrap())
            )
            .unwrap()
        )
        .unwrap());
        for n in 0..=5 {
            for m in all_matroids(Subset::full(n)).unwrap() {
                let c = OrderedComplex::new(
                    LinearOrder::ascending(m.ground()),
                    m.independence_complex(),
                )
                .unwrap();
                assert!(is_order_decomposable(&c).unwrap(), "{c:?}");
            }
        }
    }

    #[test]
    fn matroid_closure_stays_decomposable() {
        let gens: Vec<OrderedComplex> = (0..=4)
            .flat_map(|n| all_matroids(Subset::full(n)).unwrap())
            .map(|m| {
                OrderedComplex::new(LinearOrder::ascending(m.ground()), m.independence_complex())
                    .unwrap()
            })
            .collect();
        let report = validate_hopf_class(&gens, 4, true).unwrap();
        assert!(report.passed());
        // Closure of matroids is the matroids themselves: 1 + 2 + 5 + 16 + 68.
        assert_eq!(report.members.len(), 92);
    }

    #[test]
    fn hq_axioms_on_matroids() {
        let samples: Vec<OrderedComplex> = all_matroids(Subset::full(3))
            .unwrap()
            .into_iter()
            .flat_map(|m| {
                LinearOrder::all(m.ground())
                    .into_iter()
                    .map(move |w| OrderedComplex::new(w, m.independence_complex()).unwrap())
            })
            .collect();
        let report = validate_hopf_axioms(&HqMonoid, &samples, 8).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
    }
}
