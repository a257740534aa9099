//! Skeleton models: finite metric graphs, points on the discs hanging off
//! them, radial sets and radial morphism models.
//!
//! A point off the skeleton is recorded as a [`TailPoint`]: the type-2
//! vertex it retracts to and its valuation-distance from the skeleton.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::pmfun::{PmError, Profile, Side, Val};
use crate::rational::{fmt_q, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SkeletonError {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex {0:?} is of type 3 and has no tails")]
    TypeThreeTail(String),
    #[error("invalid morphism model: {0}")]
    InvalidModel(String),
    #[error("bound must be at least 1")]
    ZeroBound,
    #[error("tail depth must be finite and positive, got {0}")]
    BadDepth(String),
    #[error("source and target graphs do not match")]
    GraphMismatch,
    #[error(transparent)]
    Pm(#[from] PmError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum VertexType {
    Two,
    Three,
}

impl TryFrom<u8> for VertexType {
    type Error = String;

    fn try_from(x: u8) -> Result<Self, String> {
        match x {
            2 => Ok(VertexType::Two),
            3 => Ok(VertexType::Three),
            other => Err(format!("vertex type must be 2 or 3, got {other}")),
        }
    }
}

impl From<VertexType> for u8 {
    fn from(t: VertexType) -> u8 {
        match t {
            VertexType::Two => 2,
            VertexType::Three => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    #[serde(rename = "type")]
    pub kind: VertexType,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: String,
    pub b: String,
    #[serde(with = "crate::rational::serde_q")]
    pub len: Rational,
}

/// A connected finite metric graph with positive rational edge lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct MetricGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<Vertex>,
    #[serde(default)]
    edges: Vec<Edge>,
}

impl TryFrom<GraphRepr> for MetricGraph {
    type Error = SkeletonError;

    fn try_from(r: GraphRepr) -> Result<Self, SkeletonError> {
        MetricGraph::new(r.vertices, r.edges)
    }
}

impl From<MetricGraph> for GraphRepr {
    fn from(g: MetricGraph) -> Self {
        GraphRepr {
            vertices: g.vertices,
            edges: g.edges,
        }
    }
}

impl MetricGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self, SkeletonError> {
        let bad = |m: String| Err(SkeletonError::InvalidGraph(m));
        if vertices.is_empty() {
            return bad("no vertices".into());
        }
        let mut ids = BTreeSet::new();
        for v in &vertices {
            if !ids.insert(v.id.as_str()) {
                return bad(format!("duplicate vertex {:?}", v.id));
            }
        }
        for e in &edges {
            for end in [&e.a, &e.b] {
                if !ids.contains(end.as_str()) {
                    return bad(format!("edge endpoint {end:?} is not a vertex"));
                }
            }
            if !e.len.is_positive() {
                return bad(format!("edge {}-{} has length {}", e.a, e.b, fmt_q(&e.len)));
            }
        }
        let g = MetricGraph { vertices, edges };
        if !g.is_connected() {
            return bad("graph is not connected".into());
        }
        Ok(g)
    }

    /// A single type-2 vertex with no edges.
    pub fn point(id: &str) -> Self {
        MetricGraph {
            vertices: vec![Vertex {
                id: id.into(),
                kind: VertexType::Two,
            }],
            edges: Vec::new(),
        }
    }

    fn is_connected(&self) -> bool {
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut stack = vec![self.vertices[0].id.as_str()];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            for e in &self.edges {
                if e.a == v {
                    stack.push(&e.b);
                }
                if e.b == v {
                    stack.push(&e.a);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn kind(&self, id: &str) -> Result<VertexType, SkeletonError> {
        self.vertex(id)
            .map(|v| v.kind)
            .ok_or_else(|| SkeletonError::UnknownVertex(id.into()))
    }

    fn fresh_id(&self, base: String) -> String {
        if self.vertex(&base).is_none() {
            return base;
        }
        (1..)
            .map(|k| format!("{base}#{k}"))
            .find(|id| self.vertex(id).is_none())
            .unwrap()
    }

    fn push_tail_vertex(&mut self, from: &str, id: String, len: Rational) {
        self.vertices.push(Vertex {
            id: id.clone(),
            kind: VertexType::Two,
        });
        self.edges.push(Edge {
            a: from.into(),
            b: id,
            len,
        });
    }
}

/// A point in a disc attached at `anchor`, at valuation-distance `depth`
/// from the skeleton (`0` is the vertex itself, `INF` a rigid point).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TailPoint {
    pub anchor: String,
    pub depth: Val,
}

impl TailPoint {
    pub fn new(anchor: impl Into<String>, depth: Val) -> Self {
        TailPoint {
            anchor: anchor.into(),
            depth,
        }
    }

    fn check(&self, graph: &MetricGraph) -> Result<(), SkeletonError> {
        if let Val::Fin(d) = &self.depth {
            if d.is_negative() {
                return Err(SkeletonError::BadDepth(fmt_q(d)));
            }
        }
        match graph.kind(&self.anchor)? {
            VertexType::Three if self.depth != Val::zero() => Err(SkeletonError::TypeThreeTail(self.anchor.clone())),
            _ => Ok(()),
        }
    }
}

/// `{x : depth(x) <= threshold(anchor(x))}`; missing thresholds are 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadialSet {
    pub graph: MetricGraph,
    pub threshold: BTreeMap<String, Val>,
}

impl RadialSet {
    pub fn new(graph: MetricGraph, threshold: BTreeMap<String, Val>) -> Result<Self, SkeletonError> {
        if let Some(k) = threshold.keys().find(|k| graph.vertex(k).is_none()) {
            return Err(SkeletonError::UnknownVertex(k.clone()));
        }
        Ok(RadialSet { graph, threshold })
    }

    pub fn threshold_at(&self, id: &str) -> Val {
        self.threshold.get(id).cloned().unwrap_or_else(Val::zero)
    }

    pub fn contains(&self, x: &TailPoint) -> Result<bool, SkeletonError> {
        x.check(&self.graph)?;
        Ok(x.depth <= self.threshold_at(&x.anchor))
    }
}

/// Image of one source edge: the target edge (by index) and the expansion
/// degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeImage {
    pub target: usize,
    pub degree: u64,
}

/// A radial morphism between skeleton models: vertex and edge maps plus a
/// profile at every type-2 source vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ModelRepr", into = "ModelRepr")]
pub struct RadialMorphismModel {
    source: MetricGraph,
    target: MetricGraph,
    vertex_map: BTreeMap<String, String>,
    edge_map: Vec<EdgeImage>,
    profiles: BTreeMap<String, Profile>,
}

#[derive(Serialize, Deserialize)]
struct ModelRepr {
    source: MetricGraph,
    target: MetricGraph,
    vertex_map: BTreeMap<String, String>,
    #[serde(default)]
    edges: Vec<EdgeImage>,
    profiles: BTreeMap<String, Profile>,
}

impl TryFrom<ModelRepr> for RadialMorphismModel {
    type Error = SkeletonError;

    fn try_from(r: ModelRepr) -> Result<Self, SkeletonError> {
        RadialMorphismModel::new(r.source, r.target, r.vertex_map, r.edges, r.profiles)
    }
}

impl From<RadialMorphismModel> for ModelRepr {
    fn from(m: RadialMorphismModel) -> Self {
        ModelRepr {
            source: m.source,
            target: m.target,
            vertex_map: m.vertex_map,
            edges: m.edge_map,
            profiles: m.profiles,
        }
    }
}

impl RadialMorphismModel {
    pub fn new(
        source: MetricGraph,
        target: MetricGraph,
        vertex_map: BTreeMap<String, String>,
        edge_map: Vec<EdgeImage>,
        profiles: BTreeMap<String, Profile>,
    ) -> Result<Self, SkeletonError> {
        let bad = |m: String| Err(SkeletonError::InvalidModel(m));
        for v in source.vertices() {
            match vertex_map.get(&v.id) {
                None => return bad(format!("vertex {:?} has no image", v.id)),
                Some(w) if target.vertex(w).is_none() => return bad(format!("image {w:?} is not a target vertex")),
                _ => {}
            }
            match (v.kind, profiles.get(&v.id)) {
                (VertexType::Two, None) => return bad(format!("type-2 vertex {:?} has no profile", v.id)),
                (VertexType::Three, Some(_)) => return bad(format!("type-3 vertex {:?} carries a profile", v.id)),
                (VertexType::Two, Some(p)) if !p.is_integral() => {
                    return bad(format!("profile at {:?} has non-integral slopes", v.id))
                }
                _ => {}
            }
        }
        if let Some(k) = vertex_map
            .keys()
            .chain(profiles.keys())
            .find(|k| source.vertex(k).is_none())
        {
            return bad(format!("{k:?} is not a source vertex"));
        }
        if edge_map.len() != source.edges().len() {
            return bad(format!(
                "{} edge images for {} source edges",
                edge_map.len(),
                source.edges().len()
            ));
        }
        for (e, img) in source.edges().iter().zip(&edge_map) {
            let Some(t) = target.edges().get(img.target) else {
                return bad(format!("edge image {} out of range", img.target));
            };
            if img.degree == 0 {
                return bad(format!("edge {}-{} has degree 0", e.a, e.b));
            }
            let (fa, fb) = (&vertex_map[&e.a], &vertex_map[&e.b]);
            let incident = (fa == &t.a && fb == &t.b) || (fa == &t.b && fb == &t.a);
            if !incident {
                return bad(format!("edge {}-{} does not map onto {}-{}", e.a, e.b, t.a, t.b));
            }
        }
        Ok(RadialMorphismModel {
            source,
            target,
            vertex_map,
            edge_map,
            profiles,
        })
    }

    /// A morphism between single-vertex skeletons with one profile.
    pub fn single_vertex(source_id: &str, target_id: &str, profile: Profile) -> Result<Self, SkeletonError> {
        Self::new(
            MetricGraph::point(source_id),
            MetricGraph::point(target_id),
            BTreeMap::from([(source_id.to_string(), target_id.to_string())]),
            Vec::new(),
            BTreeMap::from([(source_id.to_string(), profile)]),
        )
    }

    pub fn source(&self) -> &MetricGraph {
        &self.source
    }

    pub fn target(&self) -> &MetricGraph {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<String, String> {
        &self.vertex_map
    }

    pub fn edge_map(&self) -> &[EdgeImage] {
        &self.edge_map
    }

    pub fn profiles(&self) -> &BTreeMap<String, Profile> {
        &self.profiles
    }

    pub fn profile(&self, id: &str) -> Option<&Profile> {
        self.profiles.get(id)
    }

    /// `N_{>= bound}` as a radial set: at each type-2 vertex, the largest `v`
    /// with profile slope `>= bound` on every `(0, v]`.
    pub fn multiplicity_locus(&self, bound: u64) -> Result<RadialSet, SkeletonError> {
        if bound == 0 {
            return Err(SkeletonError::ZeroBound);
        }
        let b = Rational::from_integer(bound.into());
        let threshold = self
            .profiles
            .iter()
            .map(|(id, prof)| {
                let mut t = Val::zero();
                for (_, end, slope) in prof.pieces() {
                    if *slope < b {
                        break;
                    }
                    t = end;
                }
                (id.clone(), t)
            })
            .collect();
        RadialSet::new(self.source.clone(), threshold)
    }

    /// Adds the point `at` to the source skeleton, together with its image,
    /// subdividing the new tail at the profile's breaks so that every new
    /// edge has constant expansion degree. Returns the model and the id of
    /// the vertex at `at`.
    pub fn enlarge(&self, at: &TailPoint) -> Result<(RadialMorphismModel, String), SkeletonError> {
        let depth = match &at.depth {
            Val::Fin(d) if d.is_positive() => d.clone(),
            other => return Err(SkeletonError::BadDepth(other.to_string())),
        };
        at.check(&self.source)?;
        let profile = self.profiles[&at.anchor].clone();
        let mut cuts: Vec<Rational> = profile.breaks().iter().filter(|b| **b < depth).cloned().collect();
        cuts.push(depth.clone());

        let mut m = self.clone();
        let mut prev_src = at.anchor.clone();
        let mut prev_tgt = self.vertex_map[&at.anchor].clone();
        let mut prev_depth = Rational::zero();
        for cut in cuts {
            let slope = profile.slope_at(&cut, Side::TowardZero)?;
            let degree = slope
                .to_integer()
                .try_into()
                .map_err(|_| SkeletonError::InvalidModel(format!("slope {} is not a small integer", fmt_q(&slope))))?;
            let src_id = m.source.fresh_id(format!("{}~{}", at.anchor, fmt_q(&cut)));
            let image_v = profile.eval_q(&cut);
            let tgt_id = m
                .target
                .fresh_id(format!("{}~{}", self.vertex_map[&at.anchor], fmt_q(&image_v)));
            let image_len = image_v - profile.eval_q(&prev_depth);
            m.source.push_tail_vertex(&prev_src, src_id.clone(), &cut - &prev_depth);
            m.target.push_tail_vertex(&prev_tgt, tgt_id.clone(), image_len);
            m.edge_map.push(EdgeImage {
                target: m.target.edges.len() - 1,
                degree,
            });
            m.vertex_map.insert(src_id.clone(), tgt_id.clone());
            m.profiles.insert(src_id.clone(), profile.shift_rescale(&cut)?);
            prev_src = src_id;
            prev_tgt = tgt_id;
            prev_depth = cut;
        }
        Ok((m, prev_src))
    }

    /// `g ∘ self`, where `self: Z -> Y` and `g: Y -> X`.
    pub fn then(&self, g: &RadialMorphismModel) -> Result<RadialMorphismModel, SkeletonError> {
        compose_models(self, g)
    }
}

/// Composes `f: Z -> Y` with `g: Y -> X`. Profiles compose as
/// `φ_h(z) = φ_g(f(z)) ∘ φ_f(z)` and edge degrees multiply.
pub fn compose_models(f: &RadialMorphismModel, g: &RadialMorphismModel) -> Result<RadialMorphismModel, SkeletonError> {
    if f.target != g.source {
        return Err(SkeletonError::GraphMismatch);
    }
    let vertex_map = f
        .vertex_map
        .iter()
        .map(|(z, y)| (z.clone(), g.vertex_map[y].clone()))
        .collect();
    let edge_map = f
        .edge_map
        .iter()
        .map(|img| {
            let outer = &g.edge_map[img.target];
            EdgeImage {
                target: outer.target,
                degree: img.degree * outer.degree,
            }
        })
        .collect();
    let mut profiles = BTreeMap::new();
    for (z, pf) in &f.profiles {
        let y = &f.vertex_map[z];
        let pg = g
            .profiles
            .get(y)
            .ok_or_else(|| SkeletonError::InvalidModel(format!("{z:?} maps to {y:?}, which carries no profile")))?;
        profiles.insert(z.clone(), pg.compose(pf));
    }
    RadialMorphismModel::new(f.source.clone(), g.target.clone(), vertex_map, edge_map, profiles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};

    fn prof(breaks: &[Rational], slopes: &[i64]) -> Profile {
        Profile::new(breaks.to_vec(), slopes.iter().map(|s| int(*s)).collect()).unwrap()
    }

    fn sep(d: i64) -> Profile {
        Profile::single_break(int(3), q(d, 2)).unwrap()
    }

    /// Two type-2 vertices u, w joined by an edge of length 5/2, mapping with
    /// degree 3 onto x - y of length 15/2, and a type-3 vertex t hanging off w.
    fn two_vertex_model() -> RadialMorphismModel {
        let v = |id: &str, kind| Vertex { id: id.into(), kind };
        let e = |a: &str, b: &str, len| Edge {
            a: a.into(),
            b: b.into(),
            len,
        };
        let source = MetricGraph::new(
            vec![
                v("u", VertexType::Two),
                v("w", VertexType::Two),
                v("t", VertexType::Three),
            ],
            vec![e("u", "w", q(5, 2)), e("w", "t", int(1))],
        )
        .unwrap();
        let target = MetricGraph::new(
            vec![
                v("x", VertexType::Two),
                v("y", VertexType::Two),
                v("s", VertexType::Three),
            ],
            vec![e("x", "y", q(15, 2)), e("y", "s", int(1))],
        )
        .unwrap();
        RadialMorphismModel::new(
            source,
            target,
            BTreeMap::from([
                ("u".into(), "x".into()),
                ("w".into(), "y".into()),
                ("t".into(), "s".into()),
            ]),
            vec![EdgeImage { target: 0, degree: 3 }, EdgeImage { target: 1, degree: 1 }],
            BTreeMap::from([
                ("u".into(), prof(&[int(1), int(3)], &[9, 3, 1])),
                ("w".into(), prof(&[int(2)], &[3, 1])),
            ]),
        )
        .unwrap()
    }

    #[test]
    fn graph_validation() {
        let v = |id: &str| Vertex {
            id: id.into(),
            kind: VertexType::Two,
        };
        assert!(MetricGraph::new(vec![], vec![]).is_err());
        assert!(MetricGraph::new(vec![v("a"), v("a")], vec![]).is_err());
        assert!(MetricGraph::new(vec![v("a"), v("b")], vec![]).is_err());
        let e = Edge {
            a: "a".into(),
            b: "b".into(),
            len: int(0),
        };
        assert!(MetricGraph::new(vec![v("a"), v("b")], vec![e]).is_err());
        let json = r#"{"vertices":[{"id":"u","type":2},{"id":"w","type":3}],"edges":[{"a":"u","b":"w","len":"5/2"}]}"#;
        let g: MetricGraph = serde_json::from_str(json).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), json);
        assert!(serde_json::from_str::<MetricGraph>(r#"{"vertices":[{"id":"u","type":1}]}"#).is_err());
    }

    #[test]
    fn contains_examples() {
        let g = MetricGraph::point("u");
        let everything = RadialSet::new(g.clone(), BTreeMap::from([("u".into(), Val::Inf)])).unwrap();
        let skeleton = RadialSet::new(g.clone(), BTreeMap::from([("u".into(), Val::zero())])).unwrap();
        let three = RadialSet::new(g, BTreeMap::from([("u".into(), Val::Fin(int(3)))])).unwrap();
        for d in [Val::zero(), Val::Fin(q(1, 9)), Val::Fin(int(40)), Val::Inf] {
            assert!(everything.contains(&TailPoint::new("u", d.clone())).unwrap());
            assert_eq!(
                skeleton.contains(&TailPoint::new("u", d.clone())).unwrap(),
                d == Val::zero()
            );
        }
        assert!(!three.contains(&TailPoint::new("u", Val::Fin(q(29, 2)))).unwrap());
        assert!(three.contains(&TailPoint::new("u", Val::Fin(int(3)))).unwrap());
        assert_eq!(
            three.contains(&TailPoint::new("z", Val::zero())),
            Err(SkeletonError::UnknownVertex("z".into()))
        );
    }

    #[test]
    fn type_three_vertices_have_no_tails() {
        let m = two_vertex_model();
        let locus = m.multiplicity_locus(3).unwrap();
        assert!(locus.contains(&TailPoint::new("t", Val::zero())).unwrap());
        assert_eq!(
            locus.contains(&TailPoint::new("t", Val::Fin(int(1)))),
            Err(SkeletonError::TypeThreeTail("t".into()))
        );
        assert!(m.enlarge(&TailPoint::new("t", Val::Fin(int(1)))).is_err());
    }

    #[test]
    fn locus_examples() {
        let m = two_vertex_model();
        let at = |b: u64, id: &str| m.multiplicity_locus(b).unwrap().threshold_at(id);
        assert_eq!(at(3, "u"), Val::Fin(int(3)));
        assert_eq!(at(9, "u"), Val::Fin(int(1)));
        assert_eq!(at(2, "u"), Val::Fin(int(3)));
        assert_eq!(at(1, "u"), Val::Inf);
        assert_eq!(at(1, "w"), Val::Inf);
        assert_eq!(at(9, "w"), Val::zero());
        assert_eq!(at(3, "t"), Val::zero());
        assert_eq!(m.multiplicity_locus(0), Err(SkeletonError::ZeroBound));
    }

    #[test]
    fn enlarge_examples() {
        let m = RadialMorphismModel::single_vertex("u", "x", prof(&[int(2)], &[3, 1])).unwrap();
        let (e, id) = m.enlarge(&TailPoint::new("u", Val::Fin(int(1)))).unwrap();
        assert_eq!(e.profile(&id).unwrap(), &prof(&[int(1)], &[3, 1]));
        assert_eq!(e.profile("u"), m.profile("u"));
        assert_eq!(e.edge_map(), &[EdgeImage { target: 0, degree: 3 }]);
        assert_eq!(e.target().edges()[0].len, int(3));

        let (e2, id2) = m.enlarge(&TailPoint::new("u", Val::Fin(int(2)))).unwrap();
        assert!(e2.profile(&id2).unwrap().is_identity());
        let (e3, id3) = m.enlarge(&TailPoint::new("u", Val::Fin(int(5)))).unwrap();
        assert!(e3.profile(&id3).unwrap().is_identity());
        // Subdivided at the break 2: degrees 3 then 1.
        assert_eq!(
            e3.edge_map(),
            &[EdgeImage { target: 0, degree: 3 }, EdgeImage { target: 1, degree: 1 }]
        );

        let old = m.multiplicity_locus(3).unwrap();
        let new = e.multiplicity_locus(3).unwrap();
        assert_eq!(new.threshold_at(&id), Val::Fin(int(1)));
        assert_eq!(old.threshold_at("u"), Val::Fin(int(2)));

        assert!(m.enlarge(&TailPoint::new("u", Val::zero())).is_err());
        assert!(m.enlarge(&TailPoint::new("u", Val::Inf)).is_err());
    }

    #[test]
    fn compose_examples() {
        let f = RadialMorphismModel::single_vertex("z", "y", sep(6)).unwrap();
        let g = RadialMorphismModel::single_vertex("y", "x", sep(6)).unwrap();
        let h = compose_models(&f, &g).unwrap();
        assert_eq!(h.profile("z").unwrap(), &prof(&[int(1), int(3)], &[9, 3, 1]));
        assert_eq!(h.vertex_map()["z"], "x");

        let id = RadialMorphismModel::single_vertex("y", "x", Profile::identity()).unwrap();
        assert_eq!(compose_models(&f, &id).unwrap().profile("z"), f.profile("z"));

        let m = two_vertex_model();
        let target = m.target().clone();
        let identity_profiles = target
            .vertices()
            .iter()
            .filter(|v| v.kind == VertexType::Two)
            .map(|v| (v.id.clone(), Profile::monomial(int(2))))
            .collect();
        let g = RadialMorphismModel::new(
            target.clone(),
            target.clone(),
            target.vertices().iter().map(|v| (v.id.clone(), v.id.clone())).collect(),
            vec![EdgeImage { target: 0, degree: 2 }, EdgeImage { target: 1, degree: 5 }],
            identity_profiles,
        )
        .unwrap();
        let h = m.then(&g).unwrap();
        assert_eq!(h.edge_map()[0].degree, 6);
        assert_eq!(h.edge_map()[1].degree, 5);

        assert_eq!(compose_models(&g, &m), Err(SkeletonError::GraphMismatch));
    }

    #[test]
    fn model_validation_and_format() {
        let m = two_vertex_model();
        let json = serde_json::to_string(&m).unwrap();
        let back: RadialMorphismModel = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        let broken = json.replace(r#""degree":3"#, r#""degree":0"#);
        assert!(serde_json::from_str::<RadialMorphismModel>(&broken).is_err());
        let frac = Profile::new(vec![int(1)], vec![q(3, 2), int(1)]).unwrap();
        assert!(RadialMorphismModel::single_vertex("a", "b", frac).is_err());
    }
}
