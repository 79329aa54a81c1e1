//! JSON documents for the command-line interface.
//!
//! Labels are resolved against a [`GroundSet`]; scalars are written as
//! `"p/q"` strings (integers as `"p"`) and read from either strings or
//! JSON integers.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complexes::{Matroid, OrderedComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::gp::{GenPermutahedron, SetFn};
use crate::ground::{blocks_in_order, GroundSet, LinearOrder, Preposet, SetComposition};
use crate::hopf::{FormalSum, OgpBasis};
use crate::scalar::Scalar;
use crate::scrope::{Gamma, ScropeComplex};
use crate::subset::Subset;

/// A scalar as read from JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumDoc {
    Int(i64),
    Text(String),
}

impl NumDoc {
    pub fn parse<T: Scalar>(&self) -> Result<T> {
        match self {
            NumDoc::Int(v) => Ok(T::from_int(*v)),
            NumDoc::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("not an exact number: {s:?}"))),
        }
    }

    pub fn emit<T: Scalar>(x: &T) -> NumDoc {
        NumDoc::Text(x.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreposetDoc {
    pub blocks: Vec<Vec<String>>,
    #[serde(default)]
    pub relations: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScropeDoc {
    pub k: usize,
    #[serde(default)]
    pub intervals: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidDoc {
    /// Defaults to the labels occurring in the bases.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground: Option<Vec<String>>,
    pub bases: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuiltinDoc {
    pub name: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

/// The accepted encodings of a generalized permutahedron.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolytopeDoc {
    Support {
        ground: Vec<String>,
        support: Vec<(Vec<String>, NumDoc)>,
    },
    Matroid {
        matroid: MatroidDoc,
    },
    Builtin {
        builtin: BuiltinDoc,
    },
    Vertices {
        ground: Vec<String>,
        vertices: Vec<Vec<NumDoc>>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderedComplexDoc {
    pub order: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerticesDoc {
    pub vertices: Vec<Vec<NumDoc>>,
}

/// One term of a serialized formal sum. `order` is absent for `GP`,
/// `polytope` is absent for `L*`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polytope: Option<VerticesDoc>,
}

pub fn from_value<D: for<'de> Deserialize<'de>>(v: &Value) -> Result<D> {
    D::deserialize(v).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_value<S: Serialize>(s: &S) -> Value {
    serde_json::to_value(s).expect("documents serialize")
}

pub fn parse_ground(labels: &[String]) -> Result<GroundSet> {
    GroundSet::new(labels)
}

pub fn emit_ground(g: &GroundSet) -> Vec<String> {
    g.labels().to_vec()
}

pub fn parse_subset(g: &GroundSet, labels: &[String]) -> Result<Subset> {
    g.subset(labels)
}

pub fn emit_subset(g: &GroundSet, s: Subset) -> Vec<String> {
    g.labels_of(s)
}

pub fn parse_order(g: &GroundSet, labels: &[String]) -> Result<LinearOrder> {
    LinearOrder::new(
        labels
            .iter()
            .map(|l| g.index_of(l))
            .collect::<Result<Vec<_>>>()?,
    )
}

pub fn emit_order(g: &GroundSet, w: &LinearOrder) -> Vec<String> {
    w.iter().map(|i| g.label(i).to_owned()).collect()
}

/// The ground set spelled out by a word: its labels, each exactly once.
pub fn ground_of_word(labels: &[String]) -> Result<GroundSet> {
    GroundSet::new(labels)
}

pub fn parse_composition(g: &GroundSet, blocks: &[Vec<String>]) -> Result<SetComposition> {
    SetComposition::new(
        blocks
            .iter()
            .map(|b| g.subset(b))
            .collect::<Result<Vec<_>>>()?,
    )
}

pub fn emit_composition(g: &GroundSet, a: &SetComposition) -> Vec<Vec<String>> {
    a.blocks().iter().map(|&b| g.labels_of(b)).collect()
}

/// Relations are block indices `(x, y)` meaning `blocks[x] ⪯ blocks[y]`;
/// the transitive closure is taken.
pub fn parse_preposet(g: &GroundSet, doc: &PreposetDoc) -> Result<Preposet> {
    let blocks = doc
        .blocks
        .iter()
        .map(|b| g.subset(b))
        .collect::<Result<Vec<_>>>()?;
    let relations: Vec<(usize, usize)> = doc.relations.iter().map(|r| (r[0], r[1])).collect();
    Preposet::from_blocks(&blocks, &relations)
}

/// Blocks listed in the order of `order` (by default ascending atoms), with
/// the cover relations of the block poset.
pub fn emit_preposet(g: &GroundSet, q: &Preposet, order: Option<&LinearOrder>) -> PreposetDoc {
    let default = LinearOrder::ascending(q.ground());
    let blocks = blocks_in_order(q, order.unwrap_or(&default));
    let relations = q
        .block_covers(blocks.blocks())
        .into_iter()
        .map(|(x, y)| [x, y])
        .collect();
    PreposetDoc {
        blocks: emit_composition(g, &blocks),
        relations,
    }
}

pub fn parse_scrope(doc: &ScropeDoc) -> Result<ScropeComplex> {
    let intervals: Vec<(usize, usize)> = doc.intervals.iter().map(|r| (r[0], r[1])).collect();
    ScropeComplex::normalize(doc.k, &intervals)
}

pub fn emit_scrope(s: &ScropeComplex) -> ScropeDoc {
    ScropeDoc {
        k: s.k(),
        intervals: s.intervals().iter().map(|&(x, y)| [x, y]).collect(),
    }
}

/// Resolves the ground set named by a polytope document.
pub fn polytope_ground(doc: &PolytopeDoc) -> Result<GroundSet> {
    match doc {
        PolytopeDoc::Support { ground, .. } | PolytopeDoc::Vertices { ground, .. } => {
            GroundSet::new(ground)
        }
        PolytopeDoc::Matroid { matroid } => match &matroid.ground {
            Some(g) => GroundSet::new(g),
            None => {
                let mut labels: Vec<&String> = matroid.bases.iter().flatten().collect();
                labels.sort();
                labels.dedup();
                GroundSet::new(labels)
            }
        },
        PolytopeDoc::Builtin { builtin } => {
            if builtin.n > 26 {
                return Err(Error::TooManyAtoms(builtin.n));
            }
            Ok(GroundSet::lettered(builtin.n))
        }
    }
}

pub fn parse_matroid(g: &GroundSet, doc: &MatroidDoc) -> Result<Matroid> {
    Matroid::new(
        g.full(),
        doc.bases
            .iter()
            .map(|b| g.subset(b))
            .collect::<Result<Vec<_>>>()?,
    )
}

pub fn emit_matroid(g: &GroundSet, m: &Matroid) -> MatroidDoc {
    MatroidDoc {
        ground: Some(emit_ground(g)),
        bases: m.bases().iter().map(|&b| g.labels_of(b)).collect(),
    }
}

pub fn parse_polytope<T: Scalar>(g: &GroundSet, doc: &PolytopeDoc) -> Result<GenPermutahedron<T>> {
    match doc {
        PolytopeDoc::Support { support, .. } => {
            let table = support
                .iter()
                .map(|(s, v)| Ok((g.subset(s)?, v.parse()?)))
                .collect::<Result<Vec<(Subset, T)>>>()?;
            GenPermutahedron::new(SetFn::from_table(g.full(), table)?)
        }
        PolytopeDoc::Matroid { matroid } => Ok(GenPermutahedron::matroid_polytope(&parse_matroid(
            g, matroid,
        )?)),
        PolytopeDoc::Builtin { builtin } => {
            let ground = g.full();
            match (builtin.name.as_str(), builtin.k) {
                ("permutohedron", _) => Ok(GenPermutahedron::regular_permutahedron(ground)),
                ("simplex", _) => Ok(GenPermutahedron::standard_simplex(ground)),
                ("hypersimplex", Some(k)) if (1..=builtin.n).contains(&k) => {
                    Ok(GenPermutahedron::hypersimplex(ground, k))
                }
                ("hypersimplex", _) => Err(Error::Parse("hypersimplex needs 1 ≤ k ≤ n".into())),
                (other, _) => Err(Error::Parse(format!("unknown builtin polytope {other:?}"))),
            }
        }
        PolytopeDoc::Vertices { vertices, .. } => {
            let verts = vertices
                .iter()
                .map(|v| v.iter().map(NumDoc::parse).collect::<Result<Vec<T>>>())
                .collect::<Result<Vec<_>>>()?;
            GenPermutahedron::from_vertices(g.full(), &verts)
        }
    }
}

/// The support-table encoding, with subsets listed in increasing size.
pub fn emit_polytope<T: Scalar>(g: &GroundSet, p: &GenPermutahedron<T>) -> PolytopeDoc {
    let mut subsets: Vec<Subset> = p.ground().subsets().filter(|s| !s.is_empty()).collect();
    subsets.sort_by_key(|s| (s.len(), s.bits()));
    PolytopeDoc::Support {
        ground: emit_ground(g),
        support: subsets
            .into_iter()
            .map(|s| (g.labels_of(s), NumDoc::emit(p.support().value(s))))
            .collect(),
    }
}

pub fn emit_vertices<T: Scalar>(p: &GenPermutahedron<T>) -> VerticesDoc {
    VerticesDoc {
        vertices: p
            .vertices()
            .iter()
            .map(|v| v.iter().map(NumDoc::emit).collect())
            .collect(),
    }
}

fn parse_vertices<T: Scalar>(g: &GroundSet, doc: &VerticesDoc) -> Result<GenPermutahedron<T>> {
    parse_polytope(
        g,
        &PolytopeDoc::Vertices {
            ground: emit_ground(g),
            vertices: doc.vertices.clone(),
        },
    )
}

pub fn parse_ordered_complex(doc: &OrderedComplexDoc) -> Result<(GroundSet, OrderedComplex)> {
    let g = ground_of_word(&doc.order)?;
    let w = parse_order(&g, &doc.order)?;
    let facets = doc
        .facets
        .iter()
        .map(|f| g.subset(f))
        .collect::<Result<Vec<_>>>()?;
    let c = OrderedComplex::new(w, SimplicialComplex::new(g.full(), facets)?)?;
    Ok((g, c))
}

/// Facets listed with their vertices in the complex's order.
pub fn emit_ordered_complex(g: &GroundSet, c: &OrderedComplex) -> OrderedComplexDoc {
    let order = &c.order;
    let facets = c
        .complex
        .facets()
        .iter()
        .map(|&f| emit_order(g, &order.restrict(f)))
        .collect();
    OrderedComplexDoc {
        order: emit_order(g, order),
        facets,
    }
}

pub fn emit_ogp_sum<T: Scalar>(g: &GroundSet, s: &FormalSum<OgpBasis<T>>) -> Vec<TermDoc> {
    s.iter()
        .map(|(x, c)| TermDoc {
            coeff: c,
            order: Some(emit_order(g, &x.order)),
            polytope: Some(emit_vertices(&x.polytope)),
        })
        .collect()
}

pub fn emit_gp_sum<T: Scalar>(s: &FormalSum<GenPermutahedron<T>>) -> Vec<TermDoc> {
    s.iter()
        .map(|(p, c)| TermDoc {
            coeff: c,
            order: None,
            polytope: Some(emit_vertices(p)),
        })
        .collect()
}

pub fn emit_lstar_sum(g: &GroundSet, s: &FormalSum<LinearOrder>) -> Vec<TermDoc> {
    s.iter()
        .map(|(w, c)| TermDoc {
            coeff: c,
            order: Some(emit_order(g, w)),
            polytope: None,
        })
        .collect()
}

fn missing(field: &str) -> Error {
    Error::Parse(format!("term lacks {field:?}"))
}

pub fn parse_ogp_sum<T: Scalar>(
    g: &GroundSet,
    terms: &[TermDoc],
) -> Result<FormalSum<OgpBasis<T>>> {
    let mut out = FormalSum::zero();
    for t in terms {
        let w = parse_order(g, t.order.as_ref().ok_or_else(|| missing("order"))?)?;
        let p = parse_vertices(g, t.polytope.as_ref().ok_or_else(|| missing("polytope"))?)?;
        out.add_term(OgpBasis::new(w, p)?, t.coeff);
    }
    Ok(out)
}

pub fn parse_gp_sum<T: Scalar>(
    g: &GroundSet,
    terms: &[TermDoc],
) -> Result<FormalSum<GenPermutahedron<T>>> {
    let mut out = FormalSum::zero();
    for t in terms {
        out.add_term(
            parse_vertices(g, t.polytope.as_ref().ok_or_else(|| missing("polytope"))?)?,
            t.coeff,
        );
    }
    Ok(out)
}

pub fn parse_lstar_sum(g: &GroundSet, terms: &[TermDoc]) -> Result<FormalSum<LinearOrder>> {
    let mut out = FormalSum::zero();
    for t in terms {
        out.add_term(
            parse_order(g, t.order.as_ref().ok_or_else(|| missing("order"))?)?,
            t.coeff,
        );
    }
    Ok(out)
}

/// The audit record of `Γ(Q, w, u)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaDoc {
    #[serde(rename = "N")]
    pub n: Vec<Vec<String>>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<String>>,
    pub naturalized: PreposetDoc,
    pub pairs: Vec<[String; 2]>,
    pub merged: Vec<Vec<Vec<String>>>,
    pub complex: ScropeDoc,
    pub faces: Vec<Vec<Vec<String>>>,
    pub reduced_euler: i64,
    pub interior_separators: Vec<usize>,
    pub interior: ScropeDoc,
    pub coefficient: i64,
}

pub fn emit_gamma(g: &GroundSet, gamma: &Gamma, w: &LinearOrder) -> GammaDoc {
    GammaDoc {
        n: emit_composition(g, &gamma.blocks),
        d: emit_composition(g, &gamma.descent),
        naturalized: emit_preposet(g, &gamma.naturalized, Some(w)),
        pairs: gamma
            .pairs
            .iter()
            .map(|&(a, b)| [g.label(a).to_owned(), g.label(b).to_owned()])
            .collect(),
        merged: gamma
            .merged
            .iter()
            .map(|s| emit_composition(g, s))
            .collect(),
        complex: emit_scrope(&gamma.complex),
        faces: gamma
            .face_compositions()
            .iter()
            .map(|s| emit_composition(g, s))
            .collect(),
        reduced_euler: gamma.reduced_euler(),
        interior_separators: gamma.interior_separators.clone(),
        interior: emit_scrope(&gamma.interior),
        coefficient: gamma.coefficient(),
    }
}

// Human-readable renderings.

fn fmt_coeff(out: &mut String, first: bool, c: i64, latex: bool) {
    let sign = if c < 0 {
        "-"
    } else if first {
        ""
    } else {
        "+"
    };
    let mag = c.unsigned_abs();
    let _ = write!(
        out,
        "{}{}{}",
        if first { "" } else { " " },
        sign,
        if first || sign.is_empty() { "" } else { " " }
    );
    if mag != 1 {
        let _ = write!(out, "{mag}{}", if latex { "\\," } else { " " });
    }
}

fn fmt_vertex(v: &[NumDoc]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|x| match x {
            NumDoc::Int(i) => i.to_string(),
            NumDoc::Text(s) => s.clone(),
        })
        .collect();
    format!("({})", parts.join(","))
}

fn fmt_word(g: &GroundSet, labels: &[String]) -> String {
    let compact = g.labels().iter().all(|l| l.chars().count() == 1);
    labels.join(if compact { "" } else { "," })
}

/// `+ ab ⊗ [(1,0) (0,1)]`-style rendering, one term per line.
pub fn render_text(g: &GroundSet, terms: &[TermDoc]) -> String {
    if terms.is_empty() {
        return "0\n".into();
    }
    let mut out = String::new();
    for t in terms {
        let sign = if t.coeff < 0 { '-' } else { '+' };
        let mag = t.coeff.unsigned_abs();
        let _ = write!(out, "{sign} ");
        if mag != 1 {
            let _ = write!(out, "{mag} ");
        }
        let mut parts = Vec::new();
        if let Some(w) = &t.order {
            parts.push(if w.is_empty() {
                "∅".to_owned()
            } else {
                fmt_word(g, w)
            });
        }
        if let Some(p) = &t.polytope {
            let vs: Vec<String> = p.vertices.iter().map(|v| fmt_vertex(v)).collect();
            parts.push(format!("[{}]", vs.join(" ")));
        }
        let _ = writeln!(out, "{}", parts.join(" ⊗ "));
    }
    out
}

/// A single display-math LaTeX expression.
pub fn render_latex(g: &GroundSet, terms: &[TermDoc]) -> String {
    if terms.is_empty() {
        return "\\[ 0 \\]\n".into();
    }
    let mut out = String::from("\\[ ");
    for (i, t) in terms.iter().enumerate() {
        fmt_coeff(&mut out, i == 0, t.coeff, true);
        let mut parts = Vec::new();
        if let Some(w) = &t.order {
            let word = if w.is_empty() {
                "\\emptyset".to_owned()
            } else {
                fmt_word(g, w)
            };
            parts.push(format!("\\mathtt{{{word}}}"));
        }
        if let Some(p) = &t.polytope {
            let vs: Vec<String> = p.vertices.iter().map(|v| fmt_vertex(v)).collect();
            parts.push(format!("\\operatorname{{conv}}\\{{{}\\}}", vs.join(", ")));
        }
        out.push_str(&parts.join(" \\otimes "));
    }
    out.push_str(" \\]\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{gp_antipode_formula, ogp_antipode_formula};
    use crate::Rational;
    use serde_json::json;

    type Gp = GenPermutahedron<Rational>;

    fn roundtrip<D: Serialize + for<'de> Deserialize<'de>>(d: &D) -> D {
        let text = serde_json::to_string(d).unwrap();
        serde_json::from_str(&text).unwrap()
    }

    #[test]
    fn rationals_as_strings() {
        let x = Rational::new(-3, 4);
        assert_eq!(
            serde_json::to_string(&NumDoc::emit(&x)).unwrap(),
            "\"-3/4\""
        );
        assert_eq!(
            serde_json::to_string(&NumDoc::emit(&Rational::from_integer(5))).unwrap(),
            "\"5\""
        );
        let back: NumDoc = serde_json::from_str("\"-3/4\"").unwrap();
        assert_eq!(back.parse::<Rational>().unwrap(), x);
        assert_eq!(
            NumDoc::Int(7).parse::<Rational>().unwrap(),
            Rational::from_integer(7)
        );
        assert!(NumDoc::Text("0.5".into()).parse::<Rational>().is_err());
    }

    #[test]
    fn preposet_roundtrip_closes_transitively() {
        let g = GroundSet::lettered(3);
        let doc: PreposetDoc =
            from_value(&json!({"blocks": [["a"], ["b"], ["c"]], "relations": [[0, 1], [1, 2]]}))
                .unwrap();
        let q = parse_preposet(&g, &doc).unwrap();
        assert!(q.lt(0, 2));
        let emitted = emit_preposet(&g, &q, None);
        assert_eq!(emitted, doc);
        assert_eq!(parse_preposet(&g, &roundtrip(&emitted)).unwrap(), q);
    }

    #[test]
    fn polytope_encodings_agree() {
        let g = GroundSet::lettered(3);
        let from_builtin: Gp = parse_polytope(
            &g,
            &from_value(&json!({"builtin": {"name": "hypersimplex", "n": 3, "k": 2}})).unwrap(),
        )
        .unwrap();
        let from_matroid: Gp = parse_polytope(
            &g,
            &from_value(&json!({"matroid": {"bases": [["a", "b"], ["a", "c"], ["b", "c"]]}}))
                .unwrap(),
        )
        .unwrap();
        assert_eq!(from_builtin, from_matroid);
        let doc = emit_polytope(&g, &from_builtin);
        assert!(matches!(doc, PolytopeDoc::Support { .. }));
        let back: Gp = parse_polytope(&g, &roundtrip(&doc)).unwrap();
        assert_eq!(back, from_builtin);
        let verts: Gp = parse_polytope(
            &g,
            &PolytopeDoc::Vertices {
                ground: emit_ground(&g),
                vertices: emit_vertices(&from_builtin).vertices,
            },
        )
        .unwrap();
        assert_eq!(verts, from_builtin);
    }

    #[test]
    fn bad_polytopes_are_rejected() {
        let g = GroundSet::lettered(2);
        let not_submodular =
            json!({"ground": ["a", "b"], "support": [[["a"], 1], [["b"], 1], [["a", "b"], 4]]});
        assert!(matches!(
            parse_polytope::<Rational>(&g, &from_value(&not_submodular).unwrap()),
            Err(Error::NotSubmodular(_))
        ));
        let missing = json!({"ground": ["a", "b"], "support": [[["a"], 1]]});
        assert!(parse_polytope::<Rational>(&g, &from_value(&missing).unwrap()).is_err());
        let unknown = json!({"builtin": {"name": "cube", "n": 2}});
        assert!(parse_polytope::<Rational>(&g, &from_value(&unknown).unwrap()).is_err());
        // A square is not a generalized permutahedron.
        let square = json!({"ground": ["a", "b"], "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]});
        assert!(parse_polytope::<Rational>(&g, &from_value(&square).unwrap()).is_err());
    }

    #[test]
    fn sums_roundtrip() {
        let g = GroundSet::lettered(3);
        let p = Gp::regular_permutahedron(g.full());
        let w = g.word("bca").unwrap();
        let s = ogp_antipode_formula(&w, &p, 7).unwrap().sum;
        let doc = emit_ogp_sum(&g, &s);
        assert_eq!(parse_ogp_sum::<Rational>(&g, &roundtrip(&doc)).unwrap(), s);

        let t = gp_antipode_formula(&p, 7).unwrap();
        let doc = emit_gp_sum(&t);
        assert_eq!(doc.len(), 13);
        assert!(doc[0].order.is_none());
        assert_eq!(parse_gp_sum::<Rational>(&g, &roundtrip(&doc)).unwrap(), t);

        let l: FormalSum<LinearOrder> = [(w.clone(), -1), (w.reversed(), 2)].into_iter().collect();
        assert_eq!(
            parse_lstar_sum(&g, &roundtrip(&emit_lstar_sum(&g, &l))).unwrap(),
            l
        );
    }

    #[test]
    fn complexes_and_scropes_roundtrip() {
        let doc: OrderedComplexDoc =
            from_value(&json!({"order": ["b", "a", "c"], "facets": [["a", "b"], ["c"]]})).unwrap();
        let (g, c) = parse_ordered_complex(&doc).unwrap();
        let back = emit_ordered_complex(&g, &c);
        assert_eq!(back.facets, vec![vec!["b", "a"], vec!["c"]]);
        assert_eq!(parse_ordered_complex(&roundtrip(&back)).unwrap().1, c);

        let s = parse_scrope(&from_value(&json!({"k": 4, "intervals": [[1, 3], [1, 4]]})).unwrap())
            .unwrap();
        assert_eq!(
            emit_scrope(&s),
            ScropeDoc {
                k: 4,
                intervals: vec![[1, 3]]
            }
        );

        let m = Matroid::uniform(Subset::full(3), 2);
        let gm = GroundSet::lettered(3);
        assert_eq!(
            parse_matroid(&gm, &roundtrip(&emit_matroid(&gm, &m))).unwrap(),
            m
        );
    }

    #[test]
    fn renderings() {
        let g = GroundSet::lettered(2);
        let p = Gp::standard_simplex(g.full());
        let s = ogp_antipode_formula(&g.word("ab").unwrap(), &p, 7)
            .unwrap()
            .sum;
        let doc = emit_ogp_sum(&g, &s);
        let text = render_text(&g, &doc);
        assert_eq!(text.lines().count(), 3);
        assert!(
            text.contains("- ab ⊗ [(0,1) (1,0)]\n+ ba ⊗ [(1,0)]"),
            "{text}"
        );
        let latex = render_latex(&g, &doc);
        assert!(
            latex.starts_with("\\[ ") && latex.contains("\\otimes"),
            "{latex}"
        );
        assert_eq!(render_text(&g, &[]), "0\n");
    }
}
