//! Deterministic construction of the witness graphs G, H and K: point
//! sets, exact edge classification by squared distance, orbit partitions
//! and the degree-driven vertex ordering used by the coloring search.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{dedup_points, PlanePoint, QuadCoord};
use crate::geometry::{dihedral_orbit, polar_angle_cmp, reflect_x, reflect_y, rotate60, rotate_special};

/// The 23 seed points the whole construction grows from.
pub fn seed_points() -> Vec<QuadCoord> {
    [
        [0, 0, 0, 0],
        [0, 0, 0, -4],
        [0, 0, -6, -2],
        [0, 0, -6, 2],
        [-6, 0, 0, -2],
        [-4, 0, 0, 0],
        [-4, 0, -6, -2],
        [-4, 0, -6, 2],
        [-2, 0, 0, -2],
        [-2, 0, -6, -4],
        [-2, 0, -6, 4],
        [0, -6, -6, 0],
        [-5, -3, 3, 3],
        [-5, 3, -3, 3],
        [-2, -6, 0, 0],
        [-2, -6, 0, -4],
        [-2, 6, 0, 0],
        [-2, 6, 0, -4],
        [-6, -6, 0, 0],
        [-6, 6, 0, 0],
        [-4, 0, 0, -4],
        [0, 0, -12, 0],
        [-8, 0, 0, 0],
    ]
    .into_iter()
    .map(QuadCoord::from)
    .collect()
}

/// The nine extra vertices that upgrade G to H. The first two are the
/// labelled vertices A and B; the remaining seven carry labels X1..X7.
pub fn extra_points() -> Vec<QuadCoord> {
    [
        [-2, 0, 0, -6],
        [8, 0, 0, 4],
        [-4, -6, -6, -4],
        [-4, 6, 6, -4],
        [-3, -3, -3, -5],
        [-4, 0, -12, 4],
        [-4, 0, 12, 4],
        [7, -3, 3, 3],
        [7, 3, -3, 3],
    ]
    .into_iter()
    .map(QuadCoord::from)
    .collect()
}

/// Seeds plus their reflections across the x-axis and across the y-axis,
/// deduplicated preserving first occurrence. 57 points for the standard
/// seed set.
pub fn build_t(seeds: &[QuadCoord]) -> Vec<PlanePoint> {
    let base: Vec<PlanePoint> = seeds.iter().map(|q| q.to_point()).collect();
    let mut all = base.clone();
    all.extend(base.iter().map(reflect_x));
    all.extend(base.iter().map(reflect_y));
    dedup_points(all)
}

/// Union of the six images of `t` under rotations by kπ/3 about the
/// origin, deduplicated. 205 points for the standard T.
pub fn build_v(t: &[PlanePoint]) -> Vec<PlanePoint> {
    let mut all = Vec::with_capacity(t.len() * 6);
    let mut current: Vec<PlanePoint> = t.to_vec();
    for _ in 0..6 {
        all.extend(current.iter().cloned());
        current = current.iter().map(rotate60).collect();
    }
    dedup_points(all)
}

/// Test every unordered pair: squared distance exactly 1 goes to the
/// first edge class, exactly 4 to the second.
pub fn classify_edges(points: &[PlanePoint]) -> (Vec<(u32, u32)>, Vec<(u32, u32)>) {
    let mut edges1 = Vec::new();
    let mut edges2 = Vec::new();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let d = points[i].sq_distance(&points[j]);
            if d.equals_int(1) {
                edges1.push((i as u32, j as u32));
            } else if d.equals_int(4) {
                edges2.push((i as u32, j as u32));
            }
        }
    }
    (edges1, edges2)
}

/// A graph on plane points with separate edge sets for the two forbidden
/// distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoDistGraph {
    vertices: Vec<PlanePoint>,
    edges1: Vec<(u32, u32)>,
    edges2: Vec<(u32, u32)>,
    labels: BTreeMap<u32, String>,
}

impl TwoDistGraph {
    /// Build from a deduplicated point list, classifying all pairs.
    pub fn from_points(points: Vec<PlanePoint>) -> Self {
        let points = dedup_points(points);
        let (edges1, edges2) = classify_edges(&points);
        TwoDistGraph {
            vertices: points,
            edges1,
            edges2,
            labels: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Number of distance-1 edges.
    pub fn m1(&self) -> usize {
        self.edges1.len()
    }

    /// Number of distance-2 edges.
    pub fn m2(&self) -> usize {
        self.edges2.len()
    }

    pub fn vertices(&self) -> &[PlanePoint] {
        &self.vertices
    }

    pub fn vertex(&self, v: u32) -> &PlanePoint {
        &self.vertices[v as usize]
    }

    pub fn edges1(&self) -> &[(u32, u32)] {
        &self.edges1
    }

    pub fn edges2(&self) -> &[(u32, u32)] {
        &self.edges2
    }

    pub fn labels(&self) -> &BTreeMap<u32, String> {
        &self.labels
    }

    pub fn set_label(&mut self, v: u32, label: &str) {
        self.labels.insert(v, String::from(label));
    }

    #[cfg(debug_assertions)]
    pub(crate) fn remove_edge1_at(&mut self, idx: usize) {
        self.edges1.remove(idx);
    }

    pub fn label_index(&self, label: &str) -> Option<u32> {
        self.labels
            .iter()
            .find(|(_, l)| l.as_str() == label)
            .map(|(v, _)| *v)
    }

    pub fn find_vertex(&self, p: &PlanePoint) -> Option<u32> {
        self.vertices.iter().position(|q| q == p).map(|i| i as u32)
    }

    pub fn has_edge1(&self, u: u32, v: u32) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges1.binary_search(&key).is_ok()
    }

    /// Degree in the union of both edge classes.
    pub fn degree(&self, v: u32) -> usize {
        self.adjacency().neighbors(v).len()
    }

    /// Combined adjacency over both edge classes, CSR layout.
    pub fn adjacency(&self) -> Adjacency {
        Adjacency::from_edges(self.n(), self.edges1.iter().chain(self.edges2.iter()))
    }

    /// Induced subgraph on `keep` (indices into this graph), edges
    /// filtered from the already-classified lists.
    pub fn induced(&self, keep: &[u32]) -> TwoDistGraph {
        let mut map = BTreeMap::new();
        for (new, &old) in keep.iter().enumerate() {
            map.insert(old, new as u32);
        }
        let remap = |edges: &[(u32, u32)]| {
            let mut out: Vec<(u32, u32)> = edges
                .iter()
                .filter_map(|&(u, v)| match (map.get(&u), map.get(&v)) {
                    (Some(&a), Some(&b)) => Some(if a < b { (a, b) } else { (b, a) }),
                    _ => None,
                })
                .collect();
            out.sort_unstable();
            out
        };
        TwoDistGraph {
            vertices: keep.iter().map(|&v| self.vertices[v as usize].clone()).collect(),
            edges1: remap(&self.edges1),
            edges2: remap(&self.edges2),
            labels: BTreeMap::new(),
        }
    }

    /// True when every dihedral image of every vertex is itself a vertex.
    pub fn closed_under_dihedral(&self) -> bool {
        let set: alloc::collections::BTreeSet<&PlanePoint> = self.vertices.iter().collect();
        self.vertices
            .iter()
            .all(|p| dihedral_orbit(p).iter().all(|q| set.contains(q)))
    }
}

/// Compressed sparse row adjacency with sorted neighbor lists.
#[derive(Clone, Debug)]
pub struct Adjacency {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Adjacency {
    pub fn from_edges<'a, I: Iterator<Item = &'a (u32, u32)>>(n: usize, edges: I) -> Self {
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            lists[u as usize].push(v);
            lists[v as usize].push(u);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for mut l in lists {
            l.sort_unstable();
            targets.extend_from_slice(&l);
            offsets.push(targets.len() as u32);
        }
        Adjacency { offsets, targets }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        let lo = self.offsets[v as usize] as usize;
        let hi = self.offsets[v as usize + 1] as usize;
        &self.targets[lo..hi]
    }

    /// Relabel so that new vertex `i` is `order[i]` in the old numbering.
    pub fn permute(&self, order: &[u32]) -> Adjacency {
        let n = self.n();
        assert_eq!(order.len(), n);
        let mut pos = vec![0u32; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        let mut lists: Vec<Vec<u32>> = Vec::with_capacity(n);
        for &v in order {
            let mut l: Vec<u32> = self.neighbors(v).iter().map(|&w| pos[w as usize]).collect();
            l.sort_unstable();
            lists.push(l);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for l in lists {
            targets.extend_from_slice(&l);
            offsets.push(targets.len() as u32);
        }
        Adjacency { offsets, targets }
    }
}

/// The graph on the 205-point set V.
pub fn build_g() -> TwoDistGraph {
    let t = build_t(&seed_points());
    let v = build_v(&t);
    TwoDistGraph::from_points(v)
}

/// The H construction applied to an already-built V.
pub fn build_h_from_v(mut pts: Vec<PlanePoint>) -> TwoDistGraph {
    let base = pts.len();
    pts.extend(extra_points().iter().map(|q| q.to_point()));
    let mut g = TwoDistGraph::from_points(pts);
    assert_eq!(g.n(), base + 9, "extra vertices must be new points");
    g.set_label(base as u32, "A");
    g.set_label(base as u32 + 1, "B");
    for i in 0..7u32 {
        let mut name = String::from("X");
        name.push(char::from(b'1' + i as u8));
        g.set_label(base as u32 + 2 + i, &name);
    }
    g
}

/// G plus the nine extra vertices, with labels A, B, X1..X7.
pub fn build_h() -> TwoDistGraph {
    let t = build_t(&seed_points());
    build_h_from_v(build_v(&t))
}

/// A vertex of H whose rotated image coincides with a vertex of H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coincidence {
    /// Index (in H and K alike) of the vertex the image landed on.
    pub vertex: u32,
    /// Index of the H vertex whose image it is.
    pub image_of: u32,
}

/// K together with the indices the final argument needs.
#[derive(Clone, Debug)]
pub struct KGraph {
    pub graph: TwoDistGraph,
    pub a: u32,
    pub b: u32,
    pub b_prime: u32,
    /// Vertices shared between the two copies of H, discovered during
    /// deduplication (the rotation center is always one of them).
    pub coincidences: Vec<Coincidence>,
}

/// The union of H with its image under the arccos(49/50) rotation
/// about A.
pub fn build_k() -> KGraph {
    build_k_from_h(&build_h())
}

pub fn build_k_from_h(h: &TwoDistGraph) -> KGraph {
    let a_idx = h.label_index("A").expect("H labels A");
    let b_idx = h.label_index("B").expect("H labels B");
    let center = h.vertex(a_idx).clone();

    let mut pts: Vec<PlanePoint> = h.vertices().to_vec();
    let mut index: BTreeMap<PlanePoint, u32> = BTreeMap::new();
    for (i, p) in pts.iter().enumerate() {
        index.insert(p.clone(), i as u32);
    }

    let mut coincidences = Vec::new();
    let mut image_index = vec![0u32; h.n()];
    for i in 0..h.n() as u32 {
        let img = rotate_special(h.vertex(i), &center);
        if let Some(&existing) = index.get(&img) {
            coincidences.push(Coincidence {
                vertex: existing,
                image_of: i,
            });
            image_index[i as usize] = existing;
        } else {
            let id = pts.len() as u32;
            pts.push(img.clone());
            index.insert(img, id);
            image_index[i as usize] = id;
        }
    }

    let mut graph = TwoDistGraph::from_points(pts);
    for (v, label) in h.labels() {
        graph.set_label(*v, label);
    }
    let b_prime = image_index[b_idx as usize];
    graph.set_label(b_prime, "B'");
    KGraph {
        graph,
        a: a_idx,
        b: b_idx,
        b_prime,
        coincidences,
    }
}

/// Partition of the vertex set into dihedral orbits.
///
/// A vertex whose geometric orbit leaves the vertex set, or whose orbit
/// members do not all share one degree, becomes a singleton orbit; this
/// keeps equal-degree-within-orbit an unconditional invariant.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    pub orbits: Vec<Vec<u32>>,
    pub orbit_of: Vec<u32>,
}

pub fn orbit_partition(g: &TwoDistGraph) -> OrbitPartition {
    let index: BTreeMap<&PlanePoint, u32> = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i as u32))
        .collect();
    let adj = g.adjacency();
    let n = g.n();
    let mut orbit_of = vec![u32::MAX; n];
    let mut orbits: Vec<Vec<u32>> = Vec::new();
    for v in 0..n as u32 {
        if orbit_of[v as usize] != u32::MAX {
            continue;
        }
        let members: Option<Vec<u32>> = dihedral_orbit(g.vertex(v))
            .iter()
            .map(|p| index.get(p).copied())
            .collect();
        let accepted = members.filter(|ms| {
            let d = adj.neighbors(ms[0]).len();
            ms.iter().all(|&m| adj.neighbors(m).len() == d)
        });
        let id = orbits.len() as u32;
        match accepted {
            Some(mut ms) => {
                ms.sort_unstable();
                for &m in &ms {
                    orbit_of[m as usize] = id;
                }
                orbits.push(ms);
            }
            None => {
                orbit_of[v as usize] = id;
                orbits.push(vec![v]);
            }
        }
    }
    OrbitPartition { orbits, orbit_of }
}

/// A permutation of the vertex indices; orbit members stay consecutive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    pub order: Vec<u32>,
}

impl VertexOrder {
    pub fn identity(n: usize) -> Self {
        VertexOrder {
            order: (0..n as u32).collect(),
        }
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.order.len()];
        for &v in &self.order {
            let i = v as usize;
            if i >= seen.len() || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        true
    }

    /// position[v] = rank of vertex v in the order.
    pub fn positions(&self) -> Vec<u32> {
        let mut pos = vec![0u32; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        pos
    }
}

/// Greedy orbit sequencing: repeatedly take the unplaced orbit with the
/// highest degree, tie-broken by the most edges into already-placed
/// vertices, then by construction order. Orbit members are sorted by
/// polar angle (the origin, having no angle, first).
pub fn order_vertices(g: &TwoDistGraph, part: &OrbitPartition) -> VertexOrder {
    let adj = g.adjacency();
    let norb = part.orbits.len();
    let degree: Vec<usize> = part
        .orbits
        .iter()
        .map(|o| adj.neighbors(o[0]).len())
        .collect();
    let mut placed = vec![false; g.n()];
    let mut placed_orbit = vec![false; norb];
    let mut order = Vec::with_capacity(g.n());
    for _ in 0..norb {
        let mut best: Option<(usize, usize, usize)> = None; // (orbit, degree, back edges)
        for oid in 0..norb {
            if placed_orbit[oid] {
                continue;
            }
            let back: usize = part.orbits[oid]
                .iter()
                .map(|&v| adj.neighbors(v).iter().filter(|&&w| placed[w as usize]).count())
                .sum();
            let better = match best {
                None => true,
                Some((_, bd, bb)) => {
                    degree[oid] > bd || (degree[oid] == bd && back > bb)
                }
            };
            if better {
                best = Some((oid, degree[oid], back));
            }
        }
        let (oid, _, _) = best.expect("unplaced orbit exists");
        placed_orbit[oid] = true;
        let mut members = part.orbits[oid].clone();
        members.sort_by(|&u, &v| polar_angle_cmp(g.vertex(u), g.vertex(v)));
        for &v in &members {
            placed[v as usize] = true;
            order.push(v);
        }
    }
    VertexOrder { order }
}
