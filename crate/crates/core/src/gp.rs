//! Bounded generalized permutahedra, stored as the base polytopes of their
//! (tight, submodular) support functions.
//!
//! Face convention: the face `p_A` of a composition `A = A₁|…|A_k`
//! maximizes any functional that is constant on blocks and strictly
//! decreasing from `A₁` to `A_k`. In particular the vertex of a linear order
//! `w` puts the largest available mass on `w(1)` (the greedy algorithm), and
//! `p_{I|J} = p|I × p/I`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::complexes::Matroid;
use crate::error::{Error, Result};
use crate::ground::{
    enumerate_compositions, preposet_from_album, Album, LinearOrder, Preposet, SetComposition,
};
use crate::scalar::Scalar;
use crate::subset::Subset;

/// Cap on the ground size for computations that enumerate every composition.
pub const DEFAULT_FACE_CAP: usize = 7;

/// A set function on the subsets of `ground` with `z(∅) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetFn<T> {
    ground: Subset,
    /// Indexed by `ground.compress(S)`.
    values: Vec<T>,
}

/// Witness `(S, i, j)` of a failed local exchange inequality
/// `z(S+i) + z(S+j) ≥ z(S+i+j) + z(S)`.
pub type SubmodularityWitness = (Subset, usize, usize);

impl<T: Scalar> SetFn<T> {
    pub fn from_fn(ground: Subset, f: impl Fn(Subset) -> T) -> Self {
        let values = (0..1usize << ground.len())
            .map(|code| f(ground.expand(code)))
            .collect();
        SetFn { ground, values }
    }

    /// Builds a set function from `(subset, value)` pairs covering every
    /// nonempty subset.
    pub fn from_table(
        ground: Subset,
        table: impl IntoIterator<Item = (Subset, T)>,
    ) -> Result<Self> {
        let mut values: Vec<Option<T>> = vec![None; 1 << ground.len()];
        values[0] = Some(T::zero());
        for (s, v) in table {
            if !s.is_subset_of(ground) {
                return Err(Error::GroundMismatch);
            }
            if s.is_empty() && !v.is_zero() {
                return Err(Error::Parse("z(∅) must be 0".into()));
            }
            values[ground.compress(s)] = Some(v);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(code, v)| {
                v.ok_or_else(|| {
                    Error::Parse(format!(
                        "missing value for subset {:?}",
                        ground.expand(code)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SetFn { ground, values })
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn value(&self, s: Subset) -> &T {
        &self.values[self.ground.compress(s)]
    }

    pub fn values(&self) -> impl Iterator<Item = (Subset, &T)> {
        self.values
            .iter()
            .enumerate()
            .map(|(code, v)| (self.ground.expand(code), v))
    }

    /// Checks the local exchange form of submodularity, which is equivalent
    /// to `z(S) + z(T) ≥ z(S∪T) + z(S∩T)` for all `S, T`.
    pub fn submodularity_witness(&self) -> Option<SubmodularityWitness> {
        for s in self.ground.subsets() {
            let rest = self.ground.difference(s);
            for i in rest.iter() {
                for j in rest.iter().filter(|&j| j > i) {
                    let lhs = self.value(s.with(i)).clone() + self.value(s.with(j)).clone();
                    let rhs = self.value(s.with(i).with(j)).clone() + self.value(s).clone();
                    if lhs < rhs {
                        return Some((s, i, j));
                    }
                }
            }
        }
        None
    }

    pub fn is_submodular(&self) -> bool {
        self.submodularity_witness().is_none()
    }
}

/// A bounded generalized permutahedron on `ground`.
///
/// Coordinates of points are listed in increasing atom order of the ground.
#[derive(Clone)]
pub struct GenPermutahedron<T> {
    support: SetFn<T>,
    vertices: OnceLock<Vec<Vec<T>>>,
}

impl<T: PartialEq> PartialEq for GenPermutahedron<T> {
    fn eq(&self, other: &Self) -> bool {
        self.support == other.support
    }
}

impl<T: Eq> Eq for GenPermutahedron<T> {}

impl<T: Ord> PartialOrd for GenPermutahedron<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Ord> Ord for GenPermutahedron<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.support.cmp(&other.support)
    }
}

impl<T: Hash> Hash for GenPermutahedron<T> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.support.hash(state);
    }
}

impl<T: Scalar> fmt::Debug for GenPermutahedron<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts: Vec<String> = self
            .vertices()
            .iter()
            .map(|v| {
                format!(
                    "({})",
                    v.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "GP{:?}[{}]", self.ground(), verts.join(" "))
    }
}

impl<T: Scalar> GenPermutahedron<T> {
    /// Validates submodularity and tightness of `support`.
    pub fn new(support: SetFn<T>) -> Result<Self> {
        if !support.value(Subset::EMPTY).is_zero() {
            return Err(Error::NotSubmodular("z(∅) ≠ 0".into()));
        }
        if let Some((s, i, j)) = support.submodularity_witness() {
            return Err(Error::NotSubmodular(format!(
                "exchange fails at S = {s:?}, i = {i}, j = {j}"
            )));
        }
        let p = GenPermutahedron::from_support_unchecked(support);
        if p.recanonicalized() != p.support {
            return Err(Error::NotTight);
        }
        Ok(p)
    }

    pub(crate) fn from_support_unchecked(support: SetFn<T>) -> Self {
        GenPermutahedron {
            support,
            vertices: OnceLock::new(),
        }
    }

    /// The unique point in `R^∅`.
    pub fn unit() -> Self {
        GenPermutahedron::from_support_unchecked(SetFn::from_fn(Subset::EMPTY, |_| T::zero()))
    }

    /// The single point with the given coordinates (listed in atom order).
    pub fn point(ground: Subset, coords: &[T]) -> Self {
        assert_eq!(ground.len(), coords.len());
        GenPermutahedron::from_support_unchecked(SetFn::from_fn(ground, |s| {
            s.iter()
                .map(|i| coords[ground.rank_of(i).unwrap()].clone())
                .fold(T::zero(), |a, b| a + b)
        }))
    }

    pub fn ground(&self) -> Subset {
        self.support.ground
    }

    pub fn support(&self) -> &SetFn<T> {
        &self.support
    }

    /// Support function recomputed from the vertices:
    /// `S ↦ max_x Σ_{i∈S} x_i`.
    pub fn recanonicalized(&self) -> SetFn<T> {
        let g = self.ground();
        let verts = self.vertices();
        SetFn::from_fn(g, |s| {
            verts
                .iter()
                .map(|v| coordinate_sum(g, v, s))
                .max()
                .unwrap_or_else(T::zero)
        })
    }

    /// Greedy vertex of `w`: `x_{w(k)} = z(w(1..k)) − z(w(1..k−1))`.
    pub fn greedy_vertex(&self, w: &LinearOrder) -> Result<Vec<T>> {
        let g = self.ground();
        if w.ground() != g {
            return Err(Error::GroundMismatch);
        }
        let mut coords = vec![T::zero(); g.len()];
        let mut prefix = Subset::EMPTY;
        for i in w.iter() {
            let next = prefix.with(i);
            coords[g.rank_of(i).unwrap()] =
                self.support.value(next).clone() - self.support.value(prefix).clone();
            prefix = next;
        }
        Ok(coords)
    }

    /// Sorted, deduplicated vertex list.
    pub fn vertices(&self) -> &[Vec<T>] {
        self.vertices.get_or_init(|| {
            let mut vs: Vec<Vec<T>> = LinearOrder::all(self.ground())
                .iter()
                .map(|w| self.greedy_vertex(w).expect("order on own ground"))
                .collect();
            vs.sort();
            vs.dedup();
            vs
        })
    }

    /// Affine dimension of the vertex set.
    pub fn dim(&self) -> usize {
        let verts = self.vertices();
        if verts.len() <= 1 {
            return 0;
        }
        let base = &verts[0];
        let rows: Vec<Vec<T>> = verts[1..]
            .iter()
            .map(|v| {
                v.iter()
                    .zip(base)
                    .map(|(a, b)| a.clone() - b.clone())
                    .collect()
            })
            .collect();
        matrix_rank(rows, self.ground().len())
    }

    /// The face `p_A`, as a generalized permutahedron on the same ground:
    /// the product of the minors `(p|A₁∪…∪A_i) / (A₁∪…∪A_{i−1})`.
    pub fn face(&self, a: &SetComposition) -> Result<Self> {
        if a.ground() != self.ground() {
            return Err(Error::GroundMismatch);
        }
        let z = &self.support;
        let prefixes: Vec<Subset> = (0..a.len()).map(|k| a.initial_union(k)).collect();
        let support = SetFn::from_fn(self.ground(), |s| {
            a.blocks()
                .iter()
                .zip(&prefixes)
                .map(|(&blk, &before)| {
                    z.value(s.intersection(blk).union(before)).clone() - z.value(before).clone()
                })
                .fold(T::zero(), |acc, x| acc + x)
        });
        Ok(GenPermutahedron::from_support_unchecked(support))
    }

    /// Vertices of `self` maximizing the functional that takes value
    /// `k − (block index)` on block `A_i` (block index counted from 0).
    pub fn face_vertices_by_functional(&self, a: &SetComposition) -> Result<Vec<Vec<T>>> {
        if a.ground() != self.ground() {
            return Err(Error::GroundMismatch);
        }
        let g = self.ground();
        let table = a.block_table();
        let weights: Vec<T> = g
            .iter()
            .map(|i| T::from_int((a.len() - table[i]) as i64))
            .collect();
        let value = |v: &Vec<T>| -> T {
            v.iter()
                .zip(&weights)
                .map(|(x, l)| x.clone() * l.clone())
                .fold(T::zero(), |s, t| s + t)
        };
        let verts = self.vertices();
        let best = verts.iter().map(value).max().unwrap_or_else(T::zero);
        Ok(verts.iter().filter(|v| value(v) == best).cloned().collect())
    }

    /// `p|S`: support restricted to subsets of `s`.
    pub fn restrict(&self, s: Subset) -> Result<Self> {
        if !s.is_subset_of(self.ground()) {
            return Err(Error::GroundMismatch);
        }
        Ok(GenPermutahedron::from_support_unchecked(SetFn::from_fn(
            s,
            |t| self.support.value(t).clone(),
        )))
    }

    /// `p/S`: support `T ↦ z(T ∪ S) − z(S)` on the complement of `s`.
    pub fn contract(&self, s: Subset) -> Result<Self> {
        if !s.is_subset_of(self.ground()) {
            return Err(Error::GroundMismatch);
        }
        let zs = self.support.value(s).clone();
        let rest = self.ground().difference(s);
        Ok(GenPermutahedron::from_support_unchecked(SetFn::from_fn(
            rest,
            |t| self.support.value(t.union(s)).clone() - zs.clone(),
        )))
    }

    /// Cartesian product on the disjoint union of grounds.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let (gi, gj) = (self.ground(), other.ground());
        if !gi.is_disjoint(gj) {
            return Err(Error::OverlappingGrounds);
        }
        Ok(GenPermutahedron::from_support_unchecked(SetFn::from_fn(
            gi.union(gj),
            |s| {
                self.support.value(s.intersection(gi)).clone()
                    + other.support.value(s.intersection(gj)).clone()
            },
        )))
    }

    /// Whether every vertex of `self` is a vertex of `other` (for faces of a
    /// common polytope this is face containment).
    pub fn is_face_subset_of(&self, other: &Self) -> bool {
        let theirs = other.vertices();
        self.ground() == other.ground()
            && self
                .vertices()
                .iter()
                .all(|v| theirs.binary_search(v).is_ok())
    }

    /// Whether the point lies on the face (it satisfies every support
    /// inequality and the equality on the full ground).
    pub fn contains_point(&self, x: &[T]) -> bool {
        let g = self.ground();
        g.subsets()
            .all(|s| &coordinate_sum(g, x, s) <= self.support.value(s))
            && &coordinate_sum(g, x, g) == self.support.value(g)
    }

    // Constructors.

    /// The polytope whose vertex hull has support `S ↦ max_x Σ_{i∈S} x_i`;
    /// fails unless that hull is a generalized permutahedron with exactly
    /// these vertices.
    pub fn from_vertices(ground: Subset, vertices: &[Vec<T>]) -> Result<Self> {
        if vertices.is_empty() || vertices.iter().any(|v| v.len() != ground.len()) {
            return Err(Error::Parse(format!(
                "expected nonempty vertex list with {} coordinates each",
                ground.len()
            )));
        }
        let support = SetFn::from_fn(ground, |s| {
            vertices
                .iter()
                .map(|v| coordinate_sum(ground, v, s))
                .max()
                .expect("nonempty")
        });
        let p = GenPermutahedron::new(support)?;
        let mut given = vertices.to_vec();
        given.sort();
        given.dedup();
        if p.vertices() != given.as_slice() {
            return Err(Error::NotAFace);
        }
        Ok(p)
    }

    /// `z(S) = rank_M(S)`.
    pub fn matroid_polytope(m: &Matroid) -> Self {
        GenPermutahedron::from_support_unchecked(SetFn::from_fn(m.ground(), |s| {
            T::from_int(m.rank(s) as i64)
        }))
    }

    /// `z(S)` = sum of the `|S|` largest of `1..n`; vertices are the
    /// permutations of `(n, …, 1)`.
    pub fn regular_permutahedron(ground: Subset) -> Self {
        let n = ground.len() as i64;
        GenPermutahedron::from_support_unchecked(SetFn::from_fn(ground, |s| {
            T::from_int((0..s.len() as i64).map(|i| n - i).sum())
        }))
    }

    /// `z(S) = 1` for nonempty `S`.
    pub fn standard_simplex(ground: Subset) -> Self {
        GenPermutahedron::hypersimplex(ground, 1)
    }

    /// `z(S) = min(|S|, k)`.
    pub fn hypersimplex(ground: Subset, k: usize) -> Self {
        GenPermutahedron::from_support_unchecked(SetFn::from_fn(ground, |s| {
            T::from_int(s.len().min(k) as i64)
        }))
    }
}

fn coordinate_sum<T: Scalar>(ground: Subset, x: &[T], s: Subset) -> T {
    s.iter()
        .map(|i| x[ground.rank_of(i).unwrap()].clone())
        .fold(T::zero(), |a, b| a + b)
}

/// Rank by fraction-free (Bareiss) elimination; exact over any integral domain.
fn matrix_rank<T: Scalar>(mut m: Vec<Vec<T>>, cols: usize) -> usize {
    let rows = m.len();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (m[r][c].clone() * m[i][j].clone() - m[i][c].clone() * m[r][j].clone())
                    / prev.clone();
                m[i][j] = v;
            }
            m[i][c] = T::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// A face together with its three albums and normal preposet.
#[derive(Clone, Debug)]
pub struct FaceData<T: Scalar> {
    pub face: GenPermutahedron<T>,
    /// `C°_Q = { A : p_A = q }`.
    pub strict: Album,
    /// `C_Q = { A : p_A ⊇ q }`.
    pub closed: Album,
    /// `∂C_Q = C_Q \ C°_Q`.
    pub boundary: Album,
    pub normal: Preposet,
}

impl<T: Scalar> FaceData<T> {
    pub fn dim(&self) -> usize {
        self.face.dim()
    }
}

/// Every distinct face `p_A` with the compositions attaining it, in
/// canonical face order.
pub fn face_census<T: Scalar>(
    p: &GenPermutahedron<T>,
    cap: usize,
) -> Result<BTreeMap<GenPermutahedron<T>, Vec<SetComposition>>> {
    let mut out: BTreeMap<GenPermutahedron<T>, Vec<SetComposition>> = BTreeMap::new();
    for a in enumerate_compositions(p.ground(), cap)? {
        let f = p.face(&a)?;
        out.entry(f).or_default().push(a);
    }
    Ok(out)
}

/// Face data for every face of `p`.
pub fn all_faces<T: Scalar>(p: &GenPermutahedron<T>, cap: usize) -> Result<Vec<FaceData<T>>> {
    let census = face_census(p, cap)?;
    let g = p.ground();
    let faces: Vec<(GenPermutahedron<T>, Vec<SetComposition>)> = census.into_iter().collect();
    let index: HashMap<&[T], usize> = p
        .vertices()
        .iter()
        .enumerate()
        .map(|(k, v)| (v.as_slice(), k))
        .collect();
    let words = p.vertices().len().div_ceil(64);
    let bitsets: Vec<Vec<u64>> = faces
        .iter()
        .map(|(f, _)| {
            let mut bits = vec![0u64; words];
            for v in f.vertices() {
                let k = index[v.as_slice()];
                bits[k / 64] |= 1 << (k % 64);
            }
            bits
        })
        .collect();
    let contains = |outer: usize, inner: usize| {
        bitsets[inner]
            .iter()
            .zip(&bitsets[outer])
            .all(|(a, b)| a & !b == 0)
    };

    let mut out = Vec::with_capacity(faces.len());
    for (qi, (face, strict)) in faces.iter().enumerate() {
        let strict_album = Album::new(g, strict.iter().cloned())?;
        let closed = Album::new(
            g,
            faces
                .iter()
                .enumerate()
                .filter(|&(fi, _)| contains(fi, qi))
                .flat_map(|(_, (_, comps))| comps.iter().cloned()),
        )?;
        let boundary = closed.difference(&strict_album);
        let normal = preposet_from_album(&strict_album)?;
        out.push(FaceData {
            face: face.clone(),
            strict: strict_album,
            closed,
            boundary,
            normal,
        });
    }
    Ok(out)
}

/// `p_A` restricted to the vertex list.
pub fn face_of_composition<T: Scalar>(
    p: &GenPermutahedron<T>,
    a: &SetComposition,
) -> Result<Vec<Vec<T>>> {
    Ok(p.face(a)?.vertices().to_vec())
}

/// The normal preposet of the face with the given vertex set.
pub fn normal_preposet<T: Scalar>(
    p: &GenPermutahedron<T>,
    face_vertices: &[Vec<T>],
    cap: usize,
) -> Result<Preposet> {
    let data = albums_of_face(p, face_vertices, cap)?;
    Ok(data.normal)
}

/// The strict, closed and boundary albums of the face with the given vertex set.
pub fn albums_of_face<T: Scalar>(
    p: &GenPermutahedron<T>,
    face_vertices: &[Vec<T>],
    cap: usize,
) -> Result<FaceData<T>> {
    let mut wanted = face_vertices.to_vec();
    wanted.sort();
    wanted.dedup();
    all_faces(p, cap)?
        .into_iter()
        .find(|f| f.face.vertices() == wanted.as_slice())
        .ok_or(Error::NotAFace)
}
