//! Ground sets, linear orders, set compositions, preposets and albums.
//!
//! Every combinatorial object here lives on a subset of a common atom
//! universe (indices `0..32`). A [`GroundSet`] attaches string labels to the
//! universe and is only needed for parsing and display; the objects
//! themselves carry their ground as a [`Subset`] so that products and
//! coproducts never need to re-index.
//!
//! Composition order convention: for `A = A₁|…|A_k`, `i ⪯_A j` iff the
//! block containing `i` comes no later than the block containing `j`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ATOMS};

/// Default cap on the ground-set size for exhaustive composition enumeration.
pub const DEFAULT_MAX_N: usize = 8;

/// Labelled atoms; index `i` is the `i`-th label in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<S: AsRef<str>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut labels: Vec<String> = labels.into_iter().map(|s| s.as_ref().to_owned()).collect();
        labels.sort();
        for pair in labels.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateLabel(pair[0].clone()));
            }
        }
        if labels.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms(labels.len()));
        }
        Ok(GroundSet { labels })
    }

    /// Labels `"1"`, …, `"n"` (sorted as strings, so only used for `n ≤ 9`
    /// when natural order must coincide with index order).
    pub fn numbered(n: usize) -> Self {
        GroundSet::new((1..=n).map(|i| i.to_string())).expect("distinct labels")
    }

    /// Labels `"a"`, `"b"`, ….
    pub fn lettered(n: usize) -> Self {
        assert!(n <= 26);
        GroundSet::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
            .expect("distinct labels")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.labels.len())
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| Error::UnknownLabel(label.to_owned()))
    }

    pub fn subset<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Subset> {
        let mut out = Subset::EMPTY;
        for l in labels {
            let i = self.index_of(l.as_ref())?;
            if out.contains(i) {
                return Err(Error::DuplicateLabel(l.as_ref().to_owned()));
            }
            out = out.with(i);
        }
        Ok(out)
    }

    /// Parses a word such as `"aebfcdhg"` when every label is one character.
    pub fn word(&self, word: &str) -> Result<LinearOrder> {
        let idx = word
            .chars()
            .map(|c| self.index_of(&c.to_string()))
            .collect::<Result<Vec<_>>>()?;
        LinearOrder::new(idx)
    }

    /// Parses `"ae|bcf|dgh"` when every label is one character.
    pub fn composition(&self, text: &str) -> Result<SetComposition> {
        let blocks = text
            .split('|')
            .map(|b| self.subset(b.chars().map(|c| c.to_string())))
            .collect::<Result<Vec<_>>>()?;
        SetComposition::new(blocks)
    }

    fn compact(&self) -> bool {
        self.labels.iter().all(|l| l.chars().count() == 1)
    }

    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn fmt_set(&self, s: Subset) -> String {
        let sep = if self.compact() { "" } else { "," };
        self.labels_of(s).join(sep)
    }

    pub fn fmt_order(&self, w: &LinearOrder) -> String {
        let sep = if self.compact() { "" } else { "," };
        w.iter()
            .map(|i| self.labels[i].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn fmt_composition(&self, a: &SetComposition) -> String {
        a.blocks()
            .iter()
            .map(|&b| self.fmt_set(b))
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// A linear order on its ground set, given as a word of atom indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LinearOrder {
    word: Vec<u8>,
}

impl LinearOrder {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let mut seen = Subset::EMPTY;
        for &i in &word {
            if i >= MAX_ATOMS {
                return Err(Error::TooManyAtoms(i + 1));
            }
            if seen.contains(i) {
                return Err(Error::InvalidOrder(format!("atom {i} repeated")));
            }
            seen = seen.with(i);
        }
        Ok(LinearOrder {
            word: word.into_iter().map(|i| i as u8).collect(),
        })
    }

    pub fn empty() -> Self {
        LinearOrder::default()
    }

    /// The order `min < … < max` on the atoms of `s`.
    pub fn ascending(s: Subset) -> Self {
        LinearOrder {
            word: s.iter().map(|i| i as u8).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.word.iter().map(|&i| i as usize)
    }

    pub fn at(&self, pos: usize) -> usize {
        self.word[pos] as usize
    }

    pub fn ground(&self) -> Subset {
        self.iter().collect()
    }

    /// Position table indexed by atom; atoms outside the ground map to `usize::MAX`.
    pub fn positions(&self) -> [usize; MAX_ATOMS] {
        let mut pos = [usize::MAX; MAX_ATOMS];
        for (p, i) in self.iter().enumerate() {
            pos[i] = p;
        }
        pos
    }

    pub fn position(&self, i: usize) -> Option<usize> {
        self.word.iter().position(|&a| a as usize == i)
    }

    pub fn restrict(&self, s: Subset) -> LinearOrder {
        LinearOrder {
            word: self
                .word
                .iter()
                .copied()
                .filter(|&i| s.contains(i as usize))
                .collect(),
        }
    }

    /// Whether `s` is the set of the first `|s|` letters.
    pub fn is_prefix(&self, s: Subset) -> bool {
        s.is_subset_of(self.ground())
            && self.word[..s.len()].iter().all(|&i| s.contains(i as usize))
    }

    pub fn prefix(&self, len: usize) -> Subset {
        self.word[..len].iter().map(|&i| i as usize).collect()
    }

    pub fn reversed(&self) -> LinearOrder {
        LinearOrder {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &LinearOrder) -> Result<LinearOrder> {
        if !self.ground().is_disjoint(other.ground()) {
            return Err(Error::OverlappingGrounds);
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(LinearOrder { word })
    }

    /// Number of descents of `u⁻¹w`: positions `i` where `w(i+1)` precedes
    /// `w(i)` in `u`.
    pub fn descents_relative_to(&self, u: &LinearOrder) -> usize {
        let pos = u.positions();
        self.word
            .windows(2)
            .filter(|p| pos[p[0] as usize] > pos[p[1] as usize])
            .count()
    }

    /// All linear orders of `s`, lexicographic in atom index.
    pub fn all(s: Subset) -> Vec<LinearOrder> {
        fn rec(rest: Subset, cur: &mut Vec<u8>, out: &mut Vec<LinearOrder>) {
            if rest.is_empty() {
                out.push(LinearOrder { word: cur.clone() });
                return;
            }
            for i in rest.iter() {
                cur.push(i as u8);
                rec(rest.without(i), cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(s, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOrder{:?}", self.word)
    }
}

/// An ordered partition `A₁|…|A_k` of its ground set into nonempty blocks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SetComposition {
    blocks: Vec<Subset>,
}

impl SetComposition {
    pub fn new(blocks: Vec<Subset>) -> Result<Self> {
        let mut seen = Subset::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidComposition("empty block".into()));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::InvalidComposition("blocks overlap".into()));
            }
            seen = seen.union(b);
        }
        Ok(SetComposition { blocks })
    }

    /// The unique composition of the empty set.
    pub fn empty() -> Self {
        SetComposition::default()
    }

    /// The one-block composition `0̂` (empty composition when `s = ∅`).
    pub fn one_block(s: Subset) -> Self {
        if s.is_empty() {
            SetComposition::empty()
        } else {
            SetComposition { blocks: vec![s] }
        }
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground(&self) -> Subset {
        self.blocks
            .iter()
            .fold(Subset::EMPTY, |acc, &b| acc.union(b))
    }

    pub fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(i))
    }

    /// Block index per atom (`usize::MAX` outside the ground).
    pub fn block_table(&self) -> [usize; MAX_ATOMS] {
        let mut t = [usize::MAX; MAX_ATOMS];
        for (k, b) in self.blocks.iter().enumerate() {
            for i in b.iter() {
                t[i] = k;
            }
        }
        t
    }

    /// `i ⪯_A j`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        let t = self.block_table();
        t[i] <= t[j]
    }

    /// The total preorder `⪯_A` as a preposet.
    pub fn to_preposet(&self) -> Preposet {
        let ground = self.ground();
        let mut up = [Subset::EMPTY; MAX_ATOMS];
        let mut later = ground;
        for &b in &self.blocks {
            for i in b.iter() {
                up[i] = later;
            }
            later = later.difference(b);
        }
        Preposet { ground, up }
    }

    /// Union of the first `k` blocks.
    pub fn initial_union(&self, k: usize) -> Subset {
        self.blocks[..k]
            .iter()
            .fold(Subset::EMPTY, |acc, &b| acc.union(b))
    }

    /// The composition obtained by merging blocks `x..=y` (0-based, inclusive).
    pub fn merge_range(&self, x: usize, y: usize) -> SetComposition {
        let mut blocks = self.blocks[..x].to_vec();
        blocks.push(
            self.blocks[x..=y]
                .iter()
                .fold(Subset::EMPTY, |a, &b| a.union(b)),
        );
        blocks.extend_from_slice(&self.blocks[y + 1..]);
        SetComposition { blocks }
    }

    /// Composition obtained by keeping only the separators in `keep`, where
    /// separator `s` (1-based) sits between block `s` and block `s + 1`.
    pub fn coarsen(&self, keep: impl Fn(usize) -> bool) -> SetComposition {
        let mut blocks = Vec::new();
        let mut cur = Subset::EMPTY;
        for (k, &b) in self.blocks.iter().enumerate() {
            cur = cur.union(b);
            if k + 1 == self.blocks.len() || keep(k + 1) {
                blocks.push(cur);
                cur = Subset::EMPTY;
            }
        }
        SetComposition { blocks }
    }
}

impl fmt::Debug for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "Comp[{}]", parts.join("|"))
    }
}

/// A reflexive, transitive relation stored as full up-set rows.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Preposet {
    ground: Subset,
    /// `up[i]` = `{ j : i ⪯ j }` for `i` in the ground; empty otherwise.
    up: [Subset; MAX_ATOMS],
}

impl fmt::Debug for Preposet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.ground.iter().map(|i| (i, self.up[i])).collect();
        f.debug_struct("Preposet")
            .field("ground", &self.ground)
            .field("up", &rows)
            .finish()
    }
}

impl Preposet {
    /// Only the reflexive pairs.
    pub fn antichain(ground: Subset) -> Self {
        let mut up = [Subset::EMPTY; MAX_ATOMS];
        for i in ground.iter() {
            up[i] = Subset::singleton(i);
        }
        Preposet { ground, up }
    }

    /// Reflexive-transitive closure of the pairs `i ⪯ j`.
    pub fn from_relations(
        ground: Subset,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut p = Preposet::antichain(ground);
        for (i, j) in pairs {
            if !ground.contains(i) || !ground.contains(j) {
                return Err(Error::GroundMismatch);
            }
            p.up[i] = p.up[i].with(j);
        }
        p.close();
        Ok(p)
    }

    /// Preposet with the given blocks and block-level relations `(from, to)`
    /// meaning `blocks[from] ⪯ blocks[to]`.
    pub fn from_blocks(blocks: &[Subset], relations: &[(usize, usize)]) -> Result<Self> {
        let mut ground = Subset::EMPTY;
        for &b in blocks {
            if b.is_empty() || !b.is_disjoint(ground) {
                return Err(Error::InvalidComposition(
                    "preposet blocks must be nonempty and disjoint".into(),
                ));
            }
            ground = ground.union(b);
        }
        let mut p = Preposet::antichain(ground);
        for &b in blocks {
            for i in b.iter() {
                p.up[i] = p.up[i].union(b);
            }
        }
        for &(x, y) in relations {
            let (bx, by) = match (blocks.get(x), blocks.get(y)) {
                (Some(&bx), Some(&by)) => (bx, by),
                _ => {
                    return Err(Error::Parse(format!(
                        "relation ({x}, {y}) names a missing block"
                    )))
                }
            };
            for i in bx.iter() {
                p.up[i] = p.up[i].union(by);
            }
        }
        p.close();
        Ok(p)
    }

    fn close(&mut self) {
        let g = self.ground;
        for k in g.iter() {
            for i in g.iter() {
                if self.up[i].contains(k) {
                    self.up[i] = self.up[i].union(self.up[k]);
                }
            }
        }
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    /// `{ j : i ⪯ j }`.
    pub fn up_set(&self, i: usize) -> Subset {
        self.up[i]
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn equiv(&self, i: usize, j: usize) -> bool {
        self.le(i, j) && self.le(j, i)
    }

    /// `i ≺ j`: `i ⪯ j` but not `j ⪯ i`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.le(i, j) && !self.le(j, i)
    }

    pub fn block_of(&self, i: usize) -> Subset {
        self.ground.iter().filter(|&j| self.equiv(i, j)).collect()
    }

    /// Blocks sorted by their smallest atom.
    pub fn blocks(&self) -> Vec<Subset> {
        let mut seen = Subset::EMPTY;
        let mut out = Vec::new();
        for i in self.ground.iter() {
            if !seen.contains(i) {
                let b = self.block_of(i);
                seen = seen.union(b);
                out.push(b);
            }
        }
        out
    }

    /// All strictly related pairs `(i, j)` with `i ≺ j`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in self.ground.iter() {
            for j in self.up[i].iter() {
                if self.lt(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Strict block relation `B ≺ C` between two blocks.
    pub fn block_lt(&self, b: Subset, c: Subset) -> bool {
        match (b.min(), c.min()) {
            (Some(x), Some(y)) => self.lt(x, y),
            _ => false,
        }
    }

    /// Cover relations of the block poset, as indices into `blocks`.
    pub fn block_covers(&self, blocks: &[Subset]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, &bx) in blocks.iter().enumerate() {
            for (y, &by) in blocks.iter().enumerate() {
                if !self.block_lt(bx, by) {
                    continue;
                }
                let between = blocks
                    .iter()
                    .any(|&bz| self.block_lt(bx, bz) && self.block_lt(bz, by));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Whether `x ≺ y` implies `x < y` in `order`.
    pub fn is_natural(&self, order: &LinearOrder) -> bool {
        let pos = order.positions();
        self.strict_pairs()
            .into_iter()
            .all(|(i, j)| pos[i] < pos[j])
    }

    /// Whether every relation of `self` also holds in `other`.
    pub fn is_contained_in(&self, other: &Preposet) -> bool {
        self.ground == other.ground
            && self
                .ground
                .iter()
                .all(|i| self.up[i].is_subset_of(other.up[i]))
    }

    /// Whether the block poset is a chain.
    pub fn is_preorder(&self) -> bool {
        let blocks = self.blocks();
        blocks.iter().enumerate().all(|(x, &bx)| {
            blocks[x + 1..]
                .iter()
                .all(|&by| self.block_lt(bx, by) || self.block_lt(by, bx))
        })
    }

    fn merge_blocks(&mut self, b: Subset, c: Subset) {
        let bc = b.union(c);
        for i in bc.iter() {
            self.up[i] = self.up[i].union(bc);
        }
        self.close();
    }
}

/// A set of compositions of one ground set, canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Album {
    ground: Subset,
    members: BTreeSet<SetComposition>,
}

impl Album {
    pub fn new(ground: Subset, members: impl IntoIterator<Item = SetComposition>) -> Result<Self> {
        let members: BTreeSet<_> = members.into_iter().collect();
        if members.iter().any(|a| a.ground() != ground) {
            return Err(Error::GroundMismatch);
        }
        Ok(Album { ground, members })
    }

    pub fn empty(ground: Subset) -> Self {
        Album {
            ground,
            members: BTreeSet::new(),
        }
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: &SetComposition) -> bool {
        self.members.contains(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = &SetComposition> {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<SetComposition> {
        &self.members
    }

    pub fn is_subset_of(&self, other: &Album) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Album) -> Album {
        Album {
            ground: self.ground,
            members: self.members.intersection(&other.members).cloned().collect(),
        }
    }

    pub fn difference(&self, other: &Album) -> Album {
        Album {
            ground: self.ground,
            members: self.members.difference(&other.members).cloned().collect(),
        }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::EnumerationTooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// Every set composition of `ground`, each exactly once, in a deterministic
/// order. The empty ground set has exactly one composition, the empty one.
pub fn enumerate_compositions(ground: Subset, cap: usize) -> Result<Vec<SetComposition>> {
    check_cap(ground.len(), cap)?;
    fn rec(rest: Subset, cur: &mut Vec<Subset>, out: &mut Vec<SetComposition>) {
        if rest.is_empty() {
            out.push(SetComposition {
                blocks: cur.clone(),
            });
            return;
        }
        for b in rest.subsets().skip(1) {
            cur.push(b);
            rec(rest.difference(b), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(ground, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `a ⊵ b`: every block of `b` is a union of consecutive blocks of `a`.
pub fn refines(a: &SetComposition, b: &SetComposition) -> Result<bool> {
    if a.ground() != b.ground() {
        return Err(Error::GroundMismatch);
    }
    let mut ablocks = a.blocks.iter();
    for &target in &b.blocks {
        let mut acc = Subset::EMPTY;
        while acc != target {
            match ablocks.next() {
                Some(&blk) if blk.is_subset_of(target) => acc = acc.union(blk),
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// `w(1)|w(2)|…|w(n)`.
pub fn composition_of_order(w: &LinearOrder) -> SetComposition {
    SetComposition {
        blocks: w.iter().map(Subset::singleton).collect(),
    }
}

/// The `2^{n-1}` compositions whose blocks are consecutive segments of `w`.
pub fn cuttings(w: &LinearOrder) -> Album {
    let wbar = composition_of_order(w);
    let n = w.len();
    let members = if n == 0 {
        vec![SetComposition::empty()]
    } else {
        (0u32..1 << (n - 1))
            .map(|mask| wbar.coarsen(|s| mask & (1 << (s - 1)) != 0))
            .collect()
    };
    Album {
        ground: w.ground(),
        members: members.into_iter().collect(),
    }
}

/// Compositions in `cuttings(w)` that refine `d` (the interval `[d, w̄]`).
pub fn cuttings_refining(w: &LinearOrder, d: &SetComposition) -> Vec<SetComposition> {
    let wbar = composition_of_order(w);
    let blocks = d.block_table();
    // Separators of w̄ lying inside a block of d may be kept or dropped.
    let free: Vec<usize> = (1..w.len())
        .filter(|&s| blocks[w.at(s - 1)] == blocks[w.at(s)])
        .collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u32..1 << free.len() {
        out.push(wbar.coarsen(|s| match free.iter().position(|&f| f == s) {
            Some(k) => mask & (1 << k) != 0,
            None => true,
        }));
    }
    out
}

/// The `u`-descent composition of `w`: consecutive letters `w(i), w(i+1)`
/// share a block iff `w(i)` occurs before `w(i+1)` in `u`.
pub fn descent_composition(w: &LinearOrder, u: &LinearOrder) -> Result<SetComposition> {
    if w.ground() != u.ground() {
        return Err(Error::GroundMismatch);
    }
    let pos = u.positions();
    let mut blocks = Vec::new();
    let mut cur = Subset::EMPTY;
    for (k, i) in w.iter().enumerate() {
        if k > 0 && pos[w.at(k - 1)] > pos[i] {
            blocks.push(cur);
            cur = Subset::EMPTY;
        }
        cur = cur.with(i);
    }
    if !cur.is_empty() {
        blocks.push(cur);
    }
    Ok(SetComposition { blocks })
}

/// `C_Q = { A : i ⪯_Q j ⟹ i ⪯_A j }`.
pub fn closure_album(q: &Preposet, cap: usize) -> Result<Album> {
    let members = enumerate_compositions(q.ground, cap)?
        .into_iter()
        .filter(|a| respects(a, q))
        .collect();
    Ok(Album {
        ground: q.ground,
        members,
    })
}

/// Whether `⪯_A` contains every relation of `q`.
pub fn respects(a: &SetComposition, q: &Preposet) -> bool {
    let t = a.block_table();
    q.ground
        .iter()
        .all(|i| q.up[i].iter().all(|j| t[i] <= t[j]))
}

/// Whether `σ_A` lies in the relative interior of the cone of `q`: strict
/// relations stay strict and equivalent atoms share a block.
pub fn respects_strictly(a: &SetComposition, q: &Preposet) -> bool {
    let t = a.block_table();
    q.ground.iter().all(|i| {
        q.up[i].iter().all(|j| {
            if q.le(j, i) {
                t[i] == t[j]
            } else {
                t[i] < t[j]
            }
        })
    })
}

/// Compositions with exactly the blocks of `q` whose block chain extends
/// the block poset of `q`.
pub fn linear_extensions(q: &Preposet, cap: usize) -> Result<Vec<SetComposition>> {
    check_cap(q.ground.len(), cap)?;
    let blocks = q.blocks();
    fn rec(
        q: &Preposet,
        blocks: &[Subset],
        used: &mut Vec<bool>,
        cur: &mut Vec<Subset>,
        out: &mut Vec<SetComposition>,
    ) {
        if cur.len() == blocks.len() {
            out.push(SetComposition {
                blocks: cur.clone(),
            });
            return;
        }
        for (x, &b) in blocks.iter().enumerate() {
            if used[x] {
                continue;
            }
            // Every block strictly below b must already be placed.
            let ready = blocks
                .iter()
                .enumerate()
                .all(|(y, &c)| used[y] || y == x || !q.block_lt(c, b));
            if ready {
                used[x] = true;
                cur.push(b);
                rec(q, blocks, used, cur, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        q,
        &blocks,
        &mut vec![false; blocks.len()],
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

/// Pairs of blocks of `q` that one of the two merge rules applies to.
fn naturalization_candidates(q: &Preposet, pos: &[usize; MAX_ATOMS]) -> Vec<(Subset, Subset)> {
    let blocks = q.blocks();
    let span = |b: Subset| {
        let ps = b.iter().map(|i| pos[i]);
        (ps.clone().min().unwrap(), ps.max().unwrap())
    };
    let mut out = Vec::new();
    for (x, &b) in blocks.iter().enumerate() {
        for &c in &blocks[x + 1..] {
            let (bmin, bmax) = span(b);
            let (cmin, cmax) = span(c);
            // rule (i): B ≺ C but some b > c (and symmetrically).
            let rule_one = (q.block_lt(b, c) && bmax > cmin) || (q.block_lt(c, b) && cmax > bmin);
            // rule (ii): each block has an element below an element of the other.
            let rule_two = bmin < cmax && cmin < bmax;
            if rule_one || rule_two {
                out.push((b, c));
            }
        }
    }
    out
}

fn naturalize_by(
    q: &Preposet,
    order: &LinearOrder,
    mut pick: impl FnMut(usize) -> usize,
) -> Result<Preposet> {
    if q.ground != order.ground() {
        return Err(Error::GroundMismatch);
    }
    let pos = order.positions();
    let mut cur = q.clone();
    loop {
        let cands = naturalization_candidates(&cur, &pos);
        if cands.is_empty() {
            return Ok(cur);
        }
        let (b, c) = cands[pick(cands.len())];
        cur.merge_blocks(b, c);
    }
}

/// The naturalization `Q^♮` of `q` with respect to the order `<` given by
/// positions in `order`.
pub fn naturalize(q: &Preposet, order: &LinearOrder) -> Result<Preposet> {
    naturalize_by(q, order, |_| 0)
}

/// Naturalization with merges chosen by a seeded random stream; used to
/// check confluence.
#[doc(hidden)]
pub fn naturalize_shuffled(q: &Preposet, order: &LinearOrder, seed: u64) -> Result<Preposet> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    naturalize_by(q, order, |n| rng.gen_range(0..n))
}

/// Blocks of a natural preposet listed in the order of `order`.
pub fn blocks_in_order(q: &Preposet, order: &LinearOrder) -> SetComposition {
    let pos = order.positions();
    let mut blocks = q.blocks();
    blocks.sort_by_key(|b| b.iter().map(|i| pos[i]).min());
    SetComposition { blocks }
}

/// `i ⪯ j` iff `i ⪯_A j` for every member `A`.
pub fn preposet_from_album(members: &Album) -> Result<Preposet> {
    let mut it = members.iter();
    let first = it.next().ok_or(Error::EmptyAlbum)?;
    let mut p = first.to_preposet();
    for a in it {
        let other = a.to_preposet();
        for i in p.ground.iter() {
            p.up[i] = p.up[i].intersection(other.up[i]);
        }
    }
    Ok(p)
}

/// All interleavings of words on pairwise-disjoint ground sets.
pub fn shuffles(ws: &[LinearOrder]) -> Result<Vec<LinearOrder>> {
    let mut seen = Subset::EMPTY;
    for w in ws {
        if !w.ground().is_disjoint(seen) {
            return Err(Error::OverlappingGrounds);
        }
        seen = seen.union(w.ground());
    }
    fn rec(
        ws: &[LinearOrder],
        idx: &mut [usize],
        cur: &mut Vec<u8>,
        total: usize,
        out: &mut Vec<LinearOrder>,
    ) {
        if cur.len() == total {
            out.push(LinearOrder { word: cur.clone() });
            return;
        }
        for j in 0..ws.len() {
            if idx[j] < ws[j].len() {
                cur.push(ws[j].word[idx[j]]);
                idx[j] += 1;
                rec(ws, idx, cur, total, out);
                idx[j] -= 1;
                cur.pop();
            }
        }
    }
    let total = ws.iter().map(|w| w.len()).sum();
    let mut out = Vec::new();
    rec(ws, &mut vec![0; ws.len()], &mut Vec::new(), total, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(n: usize) -> GroundSet {
        GroundSet::lettered(n)
    }

    /// Brute-force count of surjections `[n] → [k]`, summed over `k`.
    fn ordered_bell(n: usize) -> usize {
        let mut total = 0;
        for k in 1..=n {
            let mut count = 0;
            let maps = k.pow(n as u32);
            for code in 0..maps {
                let mut hit = vec![false; k];
                let mut c = code;
                for _ in 0..n {
                    hit[c % k] = true;
                    c /= k;
                }
                if hit.iter().all(|&h| h) {
                    count += 1;
                }
            }
            total += count;
        }
        total.max(usize::from(n == 0))
    }

    #[test]
    fn composition_counts() {
        assert_eq!(ordered_bell(4), 75);
        for n in 0..=5 {
            let comps = enumerate_compositions(Subset::full(n), DEFAULT_MAX_N).unwrap();
            assert_eq!(comps.len(), ordered_bell(n), "n = {n}");
            let set: BTreeSet<_> = comps.iter().cloned().collect();
            assert_eq!(set.len(), comps.len());
        }
        let g = letters(2);
        let comps = enumerate_compositions(g.full(), 8).unwrap();
        let shown: BTreeSet<_> = comps.iter().map(|a| g.fmt_composition(a)).collect();
        assert_eq!(
            shown,
            ["a|b", "b|a", "ab"].iter().map(|s| s.to_string()).collect()
        );
        assert_eq!(
            enumerate_compositions(Subset::EMPTY, 8).unwrap(),
            vec![SetComposition::empty()]
        );
    }

    #[test]
    fn enumeration_cap() {
        let err = enumerate_compositions(Subset::full(9), 8).unwrap_err();
        assert_eq!(err, Error::EnumerationTooLarge { n: 9, cap: 8 });
    }

    #[test]
    fn refinement_examples() {
        let g = letters(2);
        let ab = g.composition("ab").unwrap();
        let a_b = g.composition("a|b").unwrap();
        assert!(refines(&a_b, &ab).unwrap());
        assert!(!refines(&ab, &a_b).unwrap());
        let g8 = GroundSet::numbered(8);
        let fine = g8.composition("1|234|567|8").unwrap();
        let coarse = g8.composition("1|234567|8").unwrap();
        assert!(refines(&fine, &coarse).unwrap());
        assert!(!refines(&coarse, &fine).unwrap());
        // Same blocks but permuted order is not a refinement.
        assert!(!refines(&a_b, &g.composition("b|a").unwrap()).unwrap());
        let g3 = letters(3);
        assert_eq!(
            refines(&ab, &g3.composition("abc").unwrap()),
            Err(Error::GroundMismatch)
        );
    }

    #[test]
    fn order_compositions() {
        let g = letters(8);
        let w = g.word("aebfcdhg").unwrap();
        assert_eq!(
            g.fmt_composition(&composition_of_order(&w)),
            "a|e|b|f|c|d|h|g"
        );
        let x = letters(1).word("a").unwrap();
        assert_eq!(composition_of_order(&x).len(), 1);
    }

    #[test]
    fn cuttings_examples() {
        let g = letters(3);
        let cut = cuttings(&g.word("abc").unwrap());
        let shown: BTreeSet<_> = cut.iter().map(|a| g.fmt_composition(a)).collect();
        let expected: BTreeSet<String> = ["abc", "a|bc", "ab|c", "a|b|c"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(shown, expected);
        for w in LinearOrder::all(Subset::full(4)) {
            let via_closure = closure_album(&composition_of_order(&w).to_preposet(), 8).unwrap();
            assert_eq!(cuttings(&w), via_closure);
        }
    }

    #[test]
    fn descent_composition_examples() {
        let g = letters(8);
        let w = g.word("aebfcdhg").unwrap();
        let u = g.word("bdahfgce").unwrap();
        let d = descent_composition(&w, &u).unwrap();
        assert_eq!(d, g.composition("ae|bcf|dgh").unwrap());
        assert_eq!(d.len(), 1 + w.descents_relative_to(&u));
        let g8 = GroundSet::numbered(8);
        let id = g8.word("12345678").unwrap();
        assert_eq!(
            descent_composition(&id, &id).unwrap(),
            SetComposition::one_block(g8.full())
        );
        assert_eq!(
            descent_composition(&w, &w.reversed()).unwrap(),
            composition_of_order(&w)
        );
    }

    #[test]
    fn closure_examples() {
        let g = letters(2);
        let full = g.full();
        let all_eq = Preposet::from_relations(full, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(closure_album(&all_eq, 8).unwrap().len(), 1);
        assert_eq!(
            closure_album(&Preposet::antichain(full), 8).unwrap().len(),
            3
        );
        let chain = Preposet::from_relations(full, [(0, 1)]).unwrap();
        let album = closure_album(&chain, 8).unwrap();
        let expected = Album::new(
            full,
            [g.composition("a|b").unwrap(), g.composition("ab").unwrap()],
        )
        .unwrap();
        assert_eq!(album, expected);
    }

    fn eight_atom_natural(g: &GroundSet) -> Preposet {
        let b = |s: &str| g.subset(s.chars().map(|c| c.to_string())).unwrap();
        Preposet::from_blocks(
            &[b("1"), b("2345"), b("67"), b("8")],
            &[(0, 1), (0, 2), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn linear_extension_examples() {
        let g = GroundSet::numbered(8);
        let q = eight_atom_natural(&g);
        let exts: BTreeSet<_> = linear_extensions(&q, 8)
            .unwrap()
            .iter()
            .map(|a| g.fmt_composition(a))
            .collect();
        let expected: BTreeSet<String> = ["1|2345|67|8", "1|67|2345|8", "1|67|8|2345"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(exts, expected);

        let g2 = letters(2);
        let anti = Preposet::antichain(g2.full());
        assert_eq!(linear_extensions(&anti, 8).unwrap().len(), 2);
        let chain = g2.composition("b|a").unwrap().to_preposet();
        assert_eq!(
            linear_extensions(&chain, 8).unwrap(),
            vec![g2.composition("b|a").unwrap()]
        );
    }

    #[test]
    fn naturalize_eight_atoms() {
        let g = GroundSet::numbered(8);
        let b = |s: &str| g.subset(s.chars().map(|c| c.to_string())).unwrap();
        // blocks 25, 4, 3, 1, 6, 7, 8 with 25≺4, 1≺3, 1≺6, 7≺6, 7≺8
        let q = Preposet::from_blocks(
            &[b("25"), b("4"), b("3"), b("1"), b("6"), b("7"), b("8")],
            &[(0, 1), (3, 2), (3, 4), (5, 4), (5, 6)],
        )
        .unwrap();
        let order = g.word("12345678").unwrap();
        let nat = naturalize(&q, &order).unwrap();
        assert_eq!(nat, eight_atom_natural(&g));
        assert!(nat.is_natural(&order));
        assert_eq!(
            g.fmt_composition(&blocks_in_order(&nat, &order)),
            "1|2345|67|8"
        );
        assert_eq!(naturalize(&nat, &order).unwrap(), nat);
    }

    #[test]
    fn naturalize_gamma_preposet() {
        let g = GroundSet::numbered(8);
        let b = |s: &str| g.subset(s.chars().map(|c| c.to_string())).unwrap();
        // blocks 57, 24, 3, 1, 6, 8 with 3≺57, 1≺24, 24≺8, 1≺6
        let q = Preposet::from_blocks(
            &[b("57"), b("24"), b("3"), b("1"), b("6"), b("8")],
            &[(2, 0), (3, 1), (1, 5), (3, 4)],
        )
        .unwrap();
        let order = g.word("12345678").unwrap();
        let nat = naturalize(&q, &order).unwrap();
        let expected = Preposet::from_blocks(
            &[b("1"), b("234"), b("567"), b("8")],
            &[(0, 1), (1, 2), (1, 3)],
        )
        .unwrap();
        assert_eq!(nat, expected);
    }

    #[test]
    fn preposet_from_album_examples() {
        let g = letters(2);
        let full = g.full();
        let one = Album::new(full, [g.composition("a|b").unwrap()]).unwrap();
        assert_eq!(
            preposet_from_album(&one).unwrap(),
            Preposet::from_relations(full, [(0, 1)]).unwrap()
        );
        let two = Album::new(
            full,
            [g.composition("a|b").unwrap(), g.composition("b|a").unwrap()],
        )
        .unwrap();
        assert_eq!(
            preposet_from_album(&two).unwrap(),
            Preposet::antichain(full)
        );
        assert_eq!(
            preposet_from_album(&Album::empty(full)),
            Err(Error::EmptyAlbum)
        );
    }

    #[test]
    fn shuffle_examples() {
        let g = GroundSet::numbered(4);
        let w = |s: &str| g.word(s).unwrap();
        let fmt = |v: Vec<LinearOrder>| v.iter().map(|x| g.fmt_order(x)).collect::<Vec<_>>();
        assert_eq!(
            fmt(shuffles(&[w("12"), w("3")]).unwrap()),
            ["123", "132", "312"]
        );
        assert_eq!(
            fmt(shuffles(&[w("12"), w("34")]).unwrap()),
            ["1234", "1324", "1342", "3124", "3142", "3412"]
        );
        assert_eq!(
            fmt(shuffles(&[w("12"), LinearOrder::empty()]).unwrap()),
            ["12"]
        );
        assert_eq!(
            shuffles(&[w("12"), w("23")]),
            Err(Error::OverlappingGrounds)
        );
    }

    #[test]
    fn strict_interior_matches_definition() {
        let g = letters(3);
        let q = Preposet::from_relations(g.full(), [(0, 1)]).unwrap();
        assert!(respects_strictly(&g.composition("a|bc").unwrap(), &q));
        assert!(!respects_strictly(&g.composition("ab|c").unwrap(), &q));
        assert!(respects(&g.composition("ab|c").unwrap(), &q));
    }
}
