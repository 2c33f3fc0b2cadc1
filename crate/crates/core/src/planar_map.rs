//! Planar graphs embedded in the 2-sphere as rotation systems.
//!
//! A map is a set of darts (half-edges) with a fixed-point-free pairing into
//! edges and, at every vertex, a cyclic counterclockwise order of the incident
//! darts. Faces are traced combinatorially and the Euler relation V - E + F = 2
//! is enforced, so only spherical embeddings are accepted.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// Dart index into a `RotationMap`. Indices are assigned by sorted dart name,
/// so identical input specs produce identical maps.
pub type Dart = usize;

#[derive(Debug, Clone)]
pub struct RotationMap {
    dart_names: Vec<String>,
    vertex_names: Vec<String>,
    opposite: Vec<Dart>,
    vertex_of: Vec<usize>,
    rotation_next: Vec<Dart>,
    rotation_prev: Vec<Dart>,
    /// Edges as dart pairs `[d, opposite(d)]` with `d < opposite(d)`,
    /// sorted by the smaller dart. `darts[0]` is the canonical dart.
    edges: Vec<[Dart; 2]>,
    edge_of: Vec<usize>,
}

impl RotationMap {
    pub fn dart_count(&self) -> usize {
        self.dart_names.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_name(&self, d: Dart) -> &str {
        &self.dart_names[d]
    }

    pub fn dart_by_name(&self, name: &str) -> Option<Dart> {
        self.dart_names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn opposite(&self, d: Dart) -> Dart {
        self.opposite[d]
    }

    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    /// Next dart counterclockwise around the tail vertex of `d`.
    pub fn rotation_next(&self, d: Dart) -> Dart {
        self.rotation_next[d]
    }

    /// Previous dart counterclockwise (= next clockwise).
    pub fn rotation_prev(&self, d: Dart) -> Dart {
        self.rotation_prev[d]
    }

    pub fn edges(&self) -> &[[Dart; 2]] {
        &self.edges
    }

    pub fn edge_of(&self, d: Dart) -> usize {
        self.edge_of[d]
    }

    /// Canonical dart of an edge (the smaller index).
    pub fn canonical_dart(&self, edge: usize) -> Dart {
        self.edges[edge][0]
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let [a, b] = self.edges[edge];
        self.vertex_of[a] == self.vertex_of[b]
    }

    /// Successor dart of the face walk to the left of `d`.
    ///
    /// With counterclockwise rotations this is `rotation_prev(opposite(d))`:
    /// the walk arrives at the head of `d` and turns into the corner on the
    /// left side of `d`.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rotation_prev[self.opposite[d]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertex_of.iter().filter(|&&w| w == v).count()
    }

    pub fn darts_at(&self, v: usize) -> Vec<Dart> {
        (0..self.dart_count()).filter(|&d| self.vertex_of[d] == v).collect()
    }
}

/// Faces of a spherical rotation map, each a cyclic dart walk.
#[derive(Debug, Clone)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
}

impl FaceSet {
    pub fn count(&self) -> usize {
        self.faces.len()
    }

    pub fn walk(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    /// Representative dart: the smallest dart on the walk.
    pub fn representative(&self, f: usize) -> Dart {
        *self.faces[f].iter().min().unwrap()
    }
}

/// Build a validated rotation map from per-vertex counterclockwise dart lists
/// and a dart pairing. Dart and vertex identifiers are opaque strings.
pub fn build_rotation_map(
    vertices: &[(String, Vec<String>)],
    pairing: &[(String, String)],
) -> Result<RotationMap> {
    let mut names = BTreeSet::new();
    for (_, rot) in vertices {
        for d in rot {
            if !names.insert(d.clone()) {
                return Err(Error::DuplicateDart(d.clone()));
            }
        }
    }
    let dart_names: Vec<String> = names.into_iter().collect();
    let index = |name: &str| -> Result<Dart> {
        dart_names
            .binary_search_by(|n| n.as_str().cmp(name))
            .map_err(|_| Error::DanglingDart(name.to_string()))
    };

    let n = dart_names.len();
    let mut opposite = vec![usize::MAX; n];
    for (a, b) in pairing {
        if a == b {
            return Err(Error::SelfPairedDart(a.clone()));
        }
        let (ia, ib) = (index(a)?, index(b)?);
        if opposite[ia] != usize::MAX {
            return Err(Error::DuplicateDart(a.clone()));
        }
        if opposite[ib] != usize::MAX {
            return Err(Error::DuplicateDart(b.clone()));
        }
        opposite[ia] = ib;
        opposite[ib] = ia;
    }
    for (i, &o) in opposite.iter().enumerate() {
        if o == usize::MAX {
            return Err(Error::DanglingDart(dart_names[i].clone()));
        }
    }

    let mut vertex_names = Vec::new();
    let mut vertex_of = vec![usize::MAX; n];
    let mut rotation_next = vec![usize::MAX; n];
    let mut rotation_prev = vec![usize::MAX; n];
    for (vname, rot) in vertices {
        if rot.is_empty() {
            return Err(Error::Spec(format!("vertex `{vname}` has an empty rotation")));
        }
        let v = vertex_names.len();
        vertex_names.push(vname.clone());
        let idx: Vec<Dart> = rot.iter().map(|d| index(d)).collect::<Result<_>>()?;
        for (k, &d) in idx.iter().enumerate() {
            vertex_of[d] = v;
            rotation_next[d] = idx[(k + 1) % idx.len()];
            rotation_prev[d] = idx[(k + idx.len() - 1) % idx.len()];
        }
    }
    for (i, &v) in vertex_of.iter().enumerate() {
        if v == usize::MAX {
            return Err(Error::UnplacedDart(dart_names[i].clone()));
        }
    }

    if n == 0 {
        return Err(Error::NoEdges);
    }

    let mut edges = Vec::new();
    let mut edge_of = vec![usize::MAX; n];
    for d in 0..n {
        if d < opposite[d] {
            edges.push([d, opposite[d]]);
        }
    }
    edges.sort();
    for (e, &[a, b]) in edges.iter().enumerate() {
        edge_of[a] = e;
        edge_of[b] = e;
    }

    // Connectivity over darts: moves along edges and around vertices.
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(d) = stack.pop() {
        for nd in [opposite[d], rotation_next[d]] {
            if !seen[nd] {
                seen[nd] = true;
                stack.push(nd);
            }
        }
    }
    if let Some(d) = seen.iter().position(|s| !s) {
        return Err(Error::Disconnected(
            vertex_names[vertex_of[d]].clone(),
            vertex_names[vertex_of[0]].clone(),
        ));
    }

    Ok(RotationMap {
        dart_names,
        vertex_names,
        opposite,
        vertex_of,
        rotation_next,
        rotation_prev,
        edges,
        edge_of,
    })
}

/// Trace the faces of the map and enforce the sphere condition V - E + F = 2.
pub fn trace_faces(map: &RotationMap) -> Result<FaceSet> {
    let n = map.dart_count();
    let mut face_of = vec![usize::MAX; n];
    let mut faces = Vec::new();
    for start in 0..n {
        if face_of[start] != usize::MAX {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            debug_assert_eq!(face_of[d], usize::MAX);
            face_of[d] = faces.len();
            walk.push(d);
            d = map.face_next(d);
            if d == start {
                break;
            }
        }
        faces.push(walk);
    }
    let euler =
        map.vertex_count() as i64 - map.edge_count() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(Error::NotSpherical(euler));
    }
    Ok(FaceSet { faces, face_of })
}

/// True iff the underlying graph has at least two vertices, no loops,
/// no cut vertex and no bridge. Loop and bridge failures are what the
/// torus-mode construction downgrades to warnings.
pub fn is_two_connected(map: &RotationMap, faces: &FaceSet) -> bool {
    if map.vertex_count() < 2 {
        return false;
    }
    for e in 0..map.edge_count() {
        if map.is_loop(e) {
            return false;
        }
        let [a, b] = map.edges()[e];
        if faces.face_of(a) == faces.face_of(b) {
            return false; // bridge
        }
    }
    !has_cut_vertex(map)
}

pub(crate) fn has_cut_vertex(map: &RotationMap) -> bool {
    // Iterative DFS articulation search over the multigraph, loops skipped.
    let nv = map.vertex_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv]; // (other, edge)
    for (e, &[a, b]) in map.edges().iter().enumerate() {
        let (u, v) = (map.vertex_of(a), map.vertex_of(b));
        if u != v {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
    }
    let mut disc = vec![usize::MAX; nv];
    let mut low = vec![usize::MAX; nv];
    let root = 0;
    let mut timer = 1;
    let mut root_children = 0;
    disc[root] = 0;
    low[root] = 0;
    // stack frame: (vertex, parent edge, next adjacency index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    let mut articulation = false;
    while !stack.is_empty() {
        let top = stack.len() - 1;
        let (v, pe, i) = stack[top];
        if i < adj[v].len() {
            stack[top].2 += 1;
            let (to, e) = adj[v][i];
            if e == pe {
                continue;
            }
            if disc[to] == usize::MAX {
                disc[to] = timer;
                low[to] = timer;
                timer += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((to, e, 0));
            } else {
                low[v] = low[v].min(disc[to]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= disc[p] {
                    articulation = true;
                }
            }
        }
    }
    articulation || root_children > 1
}

/// Planar dual: faces become vertices; each dart `d` yields a dual dart with
/// tail `face(d)`, rotations follow the face walks.
pub fn dual_map(map: &RotationMap, faces: &FaceSet) -> Result<RotationMap> {
    let mut vertices = Vec::new();
    for (f, walk) in faces.faces().iter().enumerate() {
        let rot: Vec<String> = walk.iter().map(|&d| map.dart_name(d).to_string()).collect();
        vertices.push((format!("f{f}"), rot));
    }
    let mut pairing = Vec::new();
    for &[a, b] in map.edges() {
        pairing.push((map.dart_name(a).to_string(), map.dart_name(b).to_string()));
    }
    build_rotation_map(&vertices, &pairing)
}

/// Orientation-preserving isomorphism of rotation maps, by canonical encoding.
pub fn isomorphic(a: &RotationMap, b: &RotationMap) -> bool {
    if a.dart_count() != b.dart_count()
        || a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
    {
        return false;
    }
    canonical_code(a) == canonical_code(b)
}

fn canonical_code(map: &RotationMap) -> Vec<usize> {
    let n = map.dart_count();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..n {
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[start] = 0;
        order.push(start);
        let mut head = 0;
        while head < order.len() {
            let d = order[head];
            head += 1;
            for nd in [map.opposite(d), map.rotation_next(d)] {
                if label[nd] == usize::MAX {
                    label[nd] = order.len();
                    order.push(nd);
                }
            }
        }
        let mut code = Vec::with_capacity(2 * n);
        for &d in &order {
            code.push(label[map.opposite(d)]);
            code.push(label[map.rotation_next(d)]);
        }
        if best.as_ref().map_or(true, |b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

/// Builders for the graphs used across the test corpus.
pub mod shapes {
    use super::*;

    fn v(name: &str, darts: &[&str]) -> (String, Vec<String>) {
        (name.to_string(), darts.iter().map(|s| s.to_string()).collect())
    }

    /// One vertex, one loop edge.
    pub fn loop_graph() -> RotationMap {
        build_rotation_map(&[v("v0", &["a+", "a-"])], &[("a+".into(), "a-".into())]).unwrap()
    }

    /// Two vertices joined by `k` parallel edges (k = 2: bigon, k = 3: theta).
    pub fn banana(k: usize) -> RotationMap {
        assert!(k >= 1);
        let mut u_rot = Vec::new();
        let mut w_rot = Vec::new();
        let mut pairing = Vec::new();
        for i in 0..k {
            u_rot.push(format!("e{i}+"));
            pairing.push((format!("e{i}+"), format!("e{i}-")));
        }
        // Counterclockwise at the far vertex the strands appear in reverse.
        for i in (0..k).rev() {
            w_rot.push(format!("e{i}-"));
        }
        build_rotation_map(
            &[("u".to_string(), u_rot), ("w".to_string(), w_rot)],
            &pairing,
        )
        .unwrap()
    }

    /// Cycle on `n` vertices, n >= 2.
    pub fn cycle(n: usize) -> RotationMap {
        assert!(n >= 2);
        let mut vertices = Vec::new();
        let mut pairing = Vec::new();
        for i in 0..n {
            let prev = (i + n - 1) % n;
            vertices.push((
                format!("v{i}"),
                vec![format!("c{i}+"), format!("c{prev}-")],
            ));
            pairing.push((format!("c{i}+"), format!("c{i}-")));
        }
        build_rotation_map(&vertices, &pairing).unwrap()
    }

    /// Wheel: a hub joined to every vertex of an `n`-cycle rim.
    pub fn wheel(n: usize) -> RotationMap {
        assert!(n >= 3);
        let mut vertices = Vec::new();
        let mut pairing = Vec::new();
        let mut hub_rot = Vec::new();
        for i in 0..n {
            hub_rot.push(format!("s{i}+"));
            pairing.push((format!("s{i}+"), format!("s{i}-")));
            pairing.push((format!("r{i}+"), format!("r{i}-")));
        }
        vertices.push(("hub".to_string(), hub_rot));
        for i in 0..n {
            let prev = (i + n - 1) % n;
            // Rim counterclockwise, hub inside: at a rim vertex the
            // counterclockwise order is (next rim, spoke, previous rim).
            vertices.push((
                format!("v{i}"),
                vec![format!("r{i}+"), format!("s{i}-"), format!("r{prev}-")],
            ));
        }
        build_rotation_map(&vertices, &pairing).unwrap()
    }

    /// Two triangles sharing a single vertex (has a cut vertex).
    pub fn bowtie() -> RotationMap {
        build_rotation_map(
            &[
                v("m", &["a+", "c-", "d+", "f-"]),
                v("p", &["b+", "a-"]),
                v("q", &["c+", "b-"]),
                v("r", &["e+", "d-"]),
                v("s", &["f+", "e-"]),
            ],
            &[
                ("a+".into(), "a-".into()),
                ("b+".into(), "b-".into()),
                ("c+".into(), "c-".into()),
                ("d+".into(), "d-".into()),
                ("e+".into(), "e-".into()),
                ("f+".into(), "f-".into()),
            ],
        )
        .unwrap()
    }

    /// A single edge between two vertices (the dual of the loop graph).
    pub fn segment() -> RotationMap {
        build_rotation_map(
            &[v("u", &["a+"]), v("w", &["a-"])],
            &[("a+".into(), "a-".into())],
        )
        .unwrap()
    }
}
