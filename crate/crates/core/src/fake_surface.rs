//! The closed fake surface model P = P_v ∪ P_h built from a spherical graph
//! with disk multiplicities.
//!
//! The horizontal part P_h is the boundary of a regular neighborhood of the
//! graph, a closed orientable surface of genus E - V + 1. The vertical part
//! P_v is a union of meridian disks: m(e) parallel copies of the disk dual to
//! each edge e of the inner handlebody, and n(f) parallel copies of the disk
//! spanning each complementary region f. Their boundary circles meet on P_h
//! in the triple points.

use crate::error::{Error, Result};
use crate::planar_map::{is_two_connected, trace_faces, FaceSet, RotationMap};
use serde::{Deserialize, Serialize};

/// The uniform smoothing sign applied at every triple point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Disk multiplicities: one positive count per edge and per face.
#[derive(Debug, Clone)]
pub struct Multiplicities {
    edge: Vec<u32>,
    face: Vec<u32>,
}

impl Multiplicities {
    /// Validate a complete assignment. Indices follow the map's edge order
    /// and the face set's face order.
    pub fn new(map: &RotationMap, faces: &FaceSet, edge: Vec<u32>, face: Vec<u32>) -> Result<Self> {
        if edge.len() != map.edge_count() {
            return Err(Error::MissingMultiplicity {
                kind: "edge",
                id: format!("index {}", edge.len()),
            });
        }
        if face.len() != faces.count() {
            return Err(Error::MissingMultiplicity {
                kind: "face",
                id: format!("index {}", face.len()),
            });
        }
        for (e, &m) in edge.iter().enumerate() {
            if m == 0 {
                return Err(Error::NonPositiveMultiplicity {
                    kind: "edge",
                    id: map.dart_name(map.canonical_dart(e)).to_string(),
                    value: 0,
                });
            }
        }
        for (f, &n) in face.iter().enumerate() {
            if n == 0 {
                return Err(Error::NonPositiveMultiplicity {
                    kind: "face",
                    id: format!("face {f}"),
                    value: 0,
                });
            }
        }
        Ok(Multiplicities { edge, face })
    }

    pub fn uniform(map: &RotationMap, faces: &FaceSet) -> Self {
        Multiplicities {
            edge: vec![1; map.edge_count()],
            face: vec![1; faces.count()],
        }
    }

    pub fn edge(&self, e: usize) -> u32 {
        self.edge[e]
    }

    pub fn face(&self, f: usize) -> u32 {
        self.face[f]
    }
}

/// A necessary-condition warning from the essentiality screen. An empty
/// warning list is not a certificate of essentialness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreflightWarning {
    pub code: &'static str,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct FakeSurfaceModel {
    map: RotationMap,
    faces: FaceSet,
    mult: Multiplicities,
    sign: Sign,
    triple_points: u64,
    chi_vertical: u64,
    horizontal_genus: u64,
}

/// Assemble the model and populate the derived counting quantities.
pub fn assemble(map: RotationMap, mult: Multiplicities, sign: Sign) -> Result<FakeSurfaceModel> {
    let faces = trace_faces(&map)?;
    assemble_with_faces(map, faces, mult, sign)
}

pub fn assemble_with_faces(
    map: RotationMap,
    faces: FaceSet,
    mult: Multiplicities,
    sign: Sign,
) -> Result<FakeSurfaceModel> {
    if mult.edge.len() != map.edge_count() || mult.face.len() != faces.count() {
        return Err(Error::MissingMultiplicity {
            kind: "assignment",
            id: "length mismatch".to_string(),
        });
    }
    let mut triple_points = 0u64;
    for (e, &[a, b]) in map.edges().iter().enumerate() {
        let sides = mult.face(faces.face_of(a)) as u64 + mult.face(faces.face_of(b)) as u64;
        triple_points += mult.edge(e) as u64 * sides;
    }
    let chi_vertical =
        mult.edge.iter().map(|&m| m as u64).sum::<u64>() + mult.face.iter().map(|&n| n as u64).sum::<u64>();
    let horizontal_genus = (map.edge_count() + 1 - map.vertex_count()) as u64;
    Ok(FakeSurfaceModel {
        map,
        faces,
        mult,
        sign,
        triple_points,
        chi_vertical,
        horizontal_genus,
    })
}

impl FakeSurfaceModel {
    pub fn map(&self) -> &RotationMap {
        &self.map
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn multiplicities(&self) -> &Multiplicities {
        &self.mult
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn with_sign(&self, sign: Sign) -> FakeSurfaceModel {
        let mut m = self.clone();
        m.sign = sign;
        m
    }

    /// |P''|: Σ_e m(e)·(n(f_L) + n(f_R)), a bridge counting its face twice.
    pub fn triple_point_count(&self) -> u64 {
        self.triple_points
    }

    /// χ(P_v) = Σ m(e) + Σ n(f): every vertical piece is a disk.
    pub fn chi_vertical(&self) -> u64 {
        self.chi_vertical
    }

    /// Genus of P_h = ∂N(G), the first Betti number E - V + 1.
    pub fn horizontal_genus(&self) -> u64 {
        self.horizontal_genus
    }

    /// Multiplicity m of an edge.
    pub fn edge_mult(&self, e: usize) -> u32 {
        self.mult.edge(e)
    }

    /// Multiplicity n of the face left of a dart.
    pub fn face_mult_of_dart(&self, d: usize) -> u32 {
        self.mult.face(self.faces.face_of(d))
    }

    /// Strand count through the band of edge `e`: n(f_L) + n(f_R).
    pub fn strands(&self, e: usize) -> u32 {
        let [a, b] = self.map.edges()[e];
        self.face_mult_of_dart(a) + self.face_mult_of_dart(b)
    }

    /// Screen for configurations known to violate essentialness.
    pub fn essentiality_preflight(&self) -> Vec<PreflightWarning> {
        let mut warnings = Vec::new();
        // Loop graph in torus mode: (p, q) with p <= 1 or q <= 1 closes up
        // to a trivial knot or link component.
        if self.map.vertex_count() == 1 && self.map.edge_count() == 1 {
            let p = self.mult.edge(0);
            let q: u32 = (0..self.faces.count()).map(|f| self.mult.face(f)).sum();
            if p <= 1 || q <= 1 {
                warnings.push(PreflightWarning {
                    code: "torus-trivial",
                    message: format!(
                        "torus parameters (p, q) = ({p}, {q}) yield trivial knot"
                    ),
                });
            }
        }
        for (e, &[a, b]) in self.map.edges().iter().enumerate() {
            if self.faces.face_of(a) == self.faces.face_of(b) {
                warnings.push(PreflightWarning {
                    code: "bridge",
                    message: format!(
                        "bridge edge `{}`: face touches band on both sides",
                        self.map.dart_name(self.map.canonical_dart(e))
                    ),
                });
            }
        }
        if self.map.vertex_count() >= 2 && !is_two_connected(&self.map, &self.faces) {
            warnings.push(PreflightWarning {
                code: "not-two-connected",
                message: "graph is not 2-connected (cut vertex, bridge or loop)".to_string(),
            });
        }
        warnings
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::shapes;

    fn loop_model(p: u32, n1: u32, n2: u32) -> FakeSurfaceModel {
        let map = shapes::loop_graph();
        let faces = trace_faces(&map).unwrap();
        let mult = Multiplicities::new(&map, &faces, vec![p], vec![n1, n2]).unwrap();
        assemble_with_faces(map, faces, mult, Sign::Plus).unwrap()
    }

    #[test]
    fn loop_2_3_counts() {
        let m = loop_model(2, 1, 2);
        assert_eq!(m.triple_point_count(), 6);
        assert_eq!(m.chi_vertical(), 5);
        assert_eq!(m.horizontal_genus(), 1);
    }

    #[test]
    fn c3_unit_counts() {
        let map = shapes::cycle(3);
        let faces = trace_faces(&map).unwrap();
        let mult = Multiplicities::uniform(&map, &faces);
        let m = assemble_with_faces(map, faces, mult, Sign::Plus).unwrap();
        assert_eq!(m.triple_point_count(), 6);
        assert_eq!(m.chi_vertical(), 5);
        assert_eq!(m.horizontal_genus(), 1);
    }

    #[test]
    fn theta_unit_counts() {
        let map = shapes::banana(3);
        let faces = trace_faces(&map).unwrap();
        let mult = Multiplicities::uniform(&map, &faces);
        let m = assemble_with_faces(map, faces, mult, Sign::Plus).unwrap();
        assert_eq!(m.triple_point_count(), 6);
        assert_eq!(m.horizontal_genus(), 2);
    }

    #[test]
    fn bigon_weighted_counts() {
        // 2 vertices, 2 parallel edges, m = (2, 3), n = (1, 2): each edge
        // borders both faces, so |P''| = 2·3 + 3·3 = 15.
        let map = shapes::banana(2);
        let faces = trace_faces(&map).unwrap();
        let mult = Multiplicities::new(&map, &faces, vec![2, 3], vec![1, 2]).unwrap();
        let m = assemble_with_faces(map, faces, mult, Sign::Plus).unwrap();
        assert_eq!(m.triple_point_count(), 15);
    }

    #[test]
    fn triple_count_by_incidence_enumeration() {
        // Independent recount: one triple point per (edge copy, dart, face copy).
        for map in [shapes::cycle(4), shapes::wheel(4), shapes::banana(3)] {
            let faces = trace_faces(&map).unwrap();
            let edge_mult: Vec<u32> = (0..map.edge_count() as u32).map(|i| 1 + i % 3).collect();
            let face_mult: Vec<u32> = (0..faces.count() as u32).map(|i| 1 + (i + 1) % 3).collect();
            let mult =
                Multiplicities::new(&map, &faces, edge_mult.clone(), face_mult.clone()).unwrap();
            let model = assemble_with_faces(map, faces, mult, Sign::Plus).unwrap();

            let mut count = 0u64;
            for d in 0..model.map().dart_count() {
                let e = model.map().edge_of(d);
                for _copy in 0..model.edge_mult(e) {
                    for _fc in 0..model.face_mult_of_dart(d) {
                        count += 1;
                    }
                }
            }
            assert_eq!(count, model.triple_point_count());
        }
    }

    #[test]
    fn triple_count_dual_invariance() {
        // Dual darts keep their names and their tails are the original faces,
        // so the triple count can be recomputed on the dual with the face
        // data read off dual vertices. Both sums enumerate the same dart
        // incidences.
        use crate::planar_map::{dual_map, trace_faces};
        for map in [shapes::cycle(3), shapes::cycle(4), shapes::wheel(4)] {
            let faces = trace_faces(&map).unwrap();
            let edge_mult: Vec<u32> = (0..map.edge_count() as u32).map(|i| 1 + i % 2).collect();
            let face_mult: Vec<u32> = (0..faces.count() as u32).map(|i| 1 + i % 3).collect();

            let dual = dual_map(&map, &faces).unwrap();
            let mut dual_count = 0u64;
            for &[a, b] in dual.edges() {
                let orig = map
                    .dart_by_name(dual.dart_name(a))
                    .expect("dual darts reuse original names");
                let m = edge_mult[map.edge_of(orig)] as u64;
                let na = face_mult[dual.vertex_of(a)] as u64;
                let nb = face_mult[dual.vertex_of(b)] as u64;
                dual_count += m * (na + nb);
            }

            let mult =
                Multiplicities::new(&map, &faces, edge_mult.clone(), face_mult.clone()).unwrap();
            let model = assemble_with_faces(map.clone(), faces, mult, Sign::Plus).unwrap();
            assert_eq!(dual_count, model.triple_point_count());
        }
    }

    #[test]
    fn preflight_warnings() {
        let trivial = loop_model(1, 1, 1);
        let w = trivial.essentiality_preflight();
        assert!(w.iter().any(|w| w.code == "torus-trivial"));

        let good = loop_model(2, 1, 2);
        assert!(good.essentiality_preflight().is_empty());

        let map = shapes::segment();
        let faces = trace_faces(&map).unwrap();
        let mult = Multiplicities::uniform(&map, &faces);
        let m = assemble_with_faces(map, faces, mult, Sign::Plus).unwrap();
        let w = m.essentiality_preflight();
        assert!(w.iter().any(|w| w.code == "bridge"));
    }

    #[test]
    fn zero_multiplicity_rejected() {
        let map = shapes::cycle(3);
        let faces = trace_faces(&map).unwrap();
        let err = Multiplicities::new(&map, &faces, vec![1, 0, 1], vec![1, 1]).unwrap_err();
        assert!(matches!(err, Error::NonPositiveMultiplicity { .. }));
    }
}
