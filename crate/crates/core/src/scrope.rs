//! Scrope complexes: complexes on the separators `1..k-1` generated by
//! complements of integer intervals, plus the complex `Γ(Q, w, u)` that
//! carries the coefficients of the cancellation-free antipode.

use crate::error::{Error, Result};
use crate::ground::{
    blocks_in_order, descent_composition, naturalize, LinearOrder, Preposet, SetComposition,
};
use crate::subset::Subset;

/// Direct face enumeration is only attempted up to this `k`.
pub const MAX_DIRECT_K: usize = 16;

/// `Scr(k, z)`. Vertices are `1..k-1`; interval `(x, y)` generates the face
/// `[k-1] \ [x, y-1]`. An empty interval list means the full simplex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScropeComplex {
    k: usize,
    intervals: Vec<(usize, usize)>,
}

impl ScropeComplex {
    /// Drops every interval `[x, y-1]` containing another listed interval
    /// and sorts the rest.
    pub fn normalize(k: usize, intervals: &[(usize, usize)]) -> Result<Self> {
        if k == 0 {
            return Err(Error::IntervalOutOfRange { x: 0, y: 0, k });
        }
        for &(x, y) in intervals {
            if !(1 <= x && x < y && y <= k) {
                return Err(Error::IntervalOutOfRange { x, y, k });
            }
        }
        let mut kept: Vec<(usize, usize)> = Vec::new();
        let mut sorted = intervals.to_vec();
        sorted.sort();
        sorted.dedup();
        for &(x, y) in &sorted {
            let contains_other = sorted
                .iter()
                .any(|&(a, b)| (a, b) != (x, y) && x <= a && b <= y);
            if !contains_other {
                kept.push((x, y));
            }
        }
        Ok(ScropeComplex { k, intervals: kept })
    }

    pub fn full_simplex(k: usize) -> Self {
        ScropeComplex {
            k: k.max(1),
            intervals: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn is_full_simplex(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn num_vertices(&self) -> usize {
        self.k - 1
    }

    /// Bitmask of all vertices; vertex `v` is bit `v - 1`.
    fn vertex_mask(&self) -> u32 {
        (1u32 << (self.k - 1)) - 1
    }

    /// Generators `φᵢ` as vertex bitmasks.
    pub fn generators(&self) -> Vec<u32> {
        if self.intervals.is_empty() {
            return vec![self.vertex_mask()];
        }
        self.intervals
            .iter()
            .map(|&(x, y)| {
                let gap = ((1u32 << (y - 1)) - 1) & !((1u32 << (x - 1)) - 1);
                self.vertex_mask() & !gap
            })
            .collect()
    }

    /// Facets as sorted vertex lists.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.generators()
            .into_iter()
            .map(|g| (1..self.k).filter(|&v| g & (1 << (v - 1)) != 0).collect())
            .collect()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let mut mask = 0u32;
        for &v in face {
            if v == 0 || v >= self.k {
                return false;
            }
            mask |= 1 << (v - 1);
        }
        self.generators().iter().any(|&g| mask & !g == 0)
    }

    /// All faces as vertex bitmasks (including the empty face).
    pub fn faces(&self) -> Vec<u32> {
        let gens = self.generators();
        (0..=self.vertex_mask())
            .filter(|&s| gens.iter().any(|&g| s & !g == 0))
            .collect()
    }

    /// `χ̃` by inclusion–exclusion over the generators.
    pub fn reduced_euler_inclusion_exclusion(&self) -> i64 {
        let gens = self.generators();
        let mut chi = 0i64;
        for t in 1u32..1 << gens.len() {
            let meet = (0..gens.len())
                .filter(|&i| t & (1 << i) != 0)
                .fold(self.vertex_mask(), |acc, i| acc & gens[i]);
            if meet != 0 {
                chi += if t.count_ones() % 2 == 1 { 1 } else { -1 };
            }
        }
        chi - 1
    }

    /// `χ̃ = Σ_σ (-1)^{|σ|-1}` by listing every face.
    pub fn reduced_euler_direct(&self) -> i64 {
        assert!(
            self.k <= MAX_DIRECT_K,
            "direct enumeration limited to k <= {MAX_DIRECT_K}"
        );
        self.faces()
            .into_iter()
            .map(|s| if s.count_ones() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// Reduced Euler characteristic; both algorithms run when `k` is small
    /// enough and must agree.
    pub fn reduced_euler(&self) -> i64 {
        let chi = self.reduced_euler_inclusion_exclusion();
        if self.k <= 10 {
            debug_assert_eq!(chi, self.reduced_euler_direct());
        }
        chi
    }
}

/// Every normalized interval system for a given `k`: sequences with
/// `x₁ < … < x_r` and `y₁ < … < y_r`, `xᵢ < yᵢ`. The empty system (full
/// simplex) is included.
pub fn all_normalized(k: usize) -> Vec<ScropeComplex> {
    fn rec(
        k: usize,
        min_x: usize,
        min_y: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<ScropeComplex>,
    ) {
        out.push(ScropeComplex {
            k,
            intervals: cur.clone(),
        });
        for x in min_x..k {
            for y in (x + 1).max(min_y)..=k {
                cur.push((x, y));
                rec(k, x + 1, y + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(k, 1, 2, &mut Vec::new(), &mut out);
    out
}

/// Which strict pairs of `Q^♮` feed the interval list of `Γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSelection {
    All,
    Covers,
}

/// `Γ(Q, w, u)` together with the data needed to audit it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gamma {
    pub complex: ScropeComplex,
    /// Blocks of `Q^♮` in `w`-order.
    pub blocks: SetComposition,
    pub naturalized: Preposet,
    pub descent: SetComposition,
    /// Qualifying pairs `a ≺ b` with `a ≡_D b`.
    pub pairs: Vec<(usize, usize)>,
    /// `Sᵢ`: `N` with blocks `x..=y` merged, one per surviving interval.
    pub merged: Vec<SetComposition>,
    /// Separators of `N` (1-based) lying inside a block of `D`.
    pub interior_separators: Vec<usize>,
    /// The induced subcomplex of `complex` on `interior_separators`,
    /// renumbered `1..`. Separators of `D` are cone points of `complex`
    /// whenever a pair qualifies, so the antipode coefficient is read here.
    pub interior: ScropeComplex,
}

impl Gamma {
    pub fn reduced_euler(&self) -> i64 {
        self.complex.reduced_euler()
    }

    /// `χ̃` of the induced complex on the separators inside blocks of `D`;
    /// equal to [`Gamma::reduced_euler`] when `D` has a single block.
    pub fn coefficient(&self) -> i64 {
        self.interior.reduced_euler()
    }

    /// The face with separator set `σ` as the coarsening of `N` keeping
    /// exactly those separators.
    pub fn face_compositions(&self) -> Vec<SetComposition> {
        self.complex
            .faces()
            .into_iter()
            .map(|s| self.blocks.coarsen(|sep| s & (1 << (sep - 1)) != 0))
            .collect()
    }
}

pub fn gamma_complex(q: &Preposet, w: &LinearOrder, u: &LinearOrder) -> Result<Gamma> {
    gamma_complex_with(q, w, u, PairSelection::All)
}

pub fn gamma_complex_with(
    q: &Preposet,
    w: &LinearOrder,
    u: &LinearOrder,
    select: PairSelection,
) -> Result<Gamma> {
    if q.ground() != w.ground() || w.ground() != u.ground() {
        return Err(Error::GroundMismatch);
    }
    let nat = naturalize(q, w)?;
    let blocks = blocks_in_order(&nat, w);
    let descent = descent_composition(w, u)?;
    let nblock = blocks.block_table();
    let dblock = descent.block_table();
    let covers = nat.block_covers(blocks.blocks());

    let mut pairs = Vec::new();
    let mut intervals = Vec::new();
    for (a, b) in nat.strict_pairs() {
        if dblock[a] != dblock[b] {
            continue;
        }
        let (x, y) = (nblock[a], nblock[b]);
        if select == PairSelection::Covers && !covers.contains(&(x, y)) {
            continue;
        }
        pairs.push((a, b));
        intervals.push((x + 1, y + 1));
    }
    let complex = ScropeComplex::normalize(blocks.len(), &intervals)?;
    let merged = complex
        .intervals()
        .iter()
        .map(|&(x, y)| blocks.merge_range(x - 1, y - 1))
        .collect();

    let pos = w.positions();
    let last = |b: Subset| {
        b.iter()
            .max_by_key(|&i| pos[i])
            .expect("blocks are nonempty")
    };
    let first = |b: Subset| {
        b.iter()
            .min_by_key(|&i| pos[i])
            .expect("blocks are nonempty")
    };
    let nb = blocks.blocks();
    let interior_separators: Vec<usize> = (1..nb.len())
        .filter(|&s| dblock[last(nb[s - 1])] == dblock[first(nb[s])])
        .collect();
    let rank = |sep: usize| interior_separators.iter().position(|&v| v == sep);
    let mut renumbered = Vec::new();
    for &(x, y) in complex.intervals() {
        // Separators x..y-1 sit between two D-equivalent atoms, so all are interior.
        let (lo, hi) = (rank(x).expect("interior"), rank(y - 1).expect("interior"));
        debug_assert_eq!(hi - lo, y - 1 - x);
        renumbered.push((lo + 1, hi + 2));
    }
    let interior = ScropeComplex::normalize(interior_separators.len() + 1, &renumbered)?;
    Ok(Gamma {
        complex,
        blocks,
        naturalized: nat,
        descent,
        pairs,
        merged,
        interior_separators,
        interior,
    })
}
