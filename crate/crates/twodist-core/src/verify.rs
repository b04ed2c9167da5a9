//! The end-to-end verdict: rebuild every graph, recheck every claimed
//! count and metric identity, enumerate the colorings, and compose the
//! forcing argument that rules out a fifth color.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exact::PlanePoint;
use crate::geometry::{reflect_x, reflect_y, rotate60, rotate_special};
use crate::graph::{
    build_h_from_v, build_k_from_h, build_t, build_v, orbit_partition, order_vertices,
    seed_points, KGraph, TwoDistGraph, VertexOrder,
};
use crate::search::{
    canonical_form, check_forced_same_color, enumerate_colorings, is_canonical, is_proper,
    CanonicalColoring, SearchConfig,
};

/// One named sub-check with its expected and observed values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

/// Structured outcome of the verification pipeline.
#[derive(Clone, Debug, Default)]
pub struct VerdictReport {
    pub checks: Vec<Check>,
    /// Identity of the shared vertex between the two H copies that is
    /// not the rotation center.
    pub second_coincidence: Option<String>,
    /// Count of G's colorings after additionally quotienting by the
    /// dihedral symmetry of the point set.
    pub g_classes_up_to_symmetry: Option<u64>,
    /// The chain of implications, one line each, filled in only when the
    /// supporting checks pass.
    pub derivation: Vec<String>,
    /// True when coloring enumeration was skipped because an earlier
    /// stage already failed.
    pub enumeration_skipped: bool,
}

impl VerdictReport {
    pub fn pass(&self) -> bool {
        !self.enumeration_skipped && self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    fn push<E: core::fmt::Display, O: core::fmt::Display>(
        &mut self,
        name: &str,
        expected: E,
        observed: O,
        pass: bool,
    ) {
        self.checks.push(Check {
            name: String::from(name),
            expected: format!("{expected}"),
            observed: format!("{observed}"),
            pass,
        });
    }

    fn push_eq(&mut self, name: &str, expected: usize, observed: usize) {
        self.push(name, expected, observed, expected == observed);
    }
}

/// All stages of the construction, built once.
pub struct ConstructionBundle {
    pub t_len: usize,
    pub g: TwoDistGraph,
    pub h: TwoDistGraph,
    pub k: KGraph,
}

pub fn build_all() -> ConstructionBundle {
    build_pipeline(None)
}

/// Deliberate defects for negative controls. Only in debug builds.
#[cfg(debug_assertions)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    DropVertex,
    PerturbCoord,
    DropEdge,
}

#[cfg(debug_assertions)]
pub fn build_all_with_fault(fault: Fault) -> ConstructionBundle {
    build_pipeline(Some(fault))
}

#[cfg(debug_assertions)]
type FaultOpt = Option<Fault>;
#[cfg(not(debug_assertions))]
type FaultOpt = Option<core::convert::Infallible>;

#[cfg_attr(not(debug_assertions), allow(unused_variables))]
fn build_pipeline(fault: FaultOpt) -> ConstructionBundle {
    #[allow(unused_mut)]
    let mut seeds = seed_points();
    #[cfg(debug_assertions)]
    if fault == Some(Fault::PerturbCoord) {
        seeds[4].d += 1;
    }
    let t = build_t(&seeds);
    #[allow(unused_mut)]
    let mut v = build_v(&t);
    #[cfg(debug_assertions)]
    if fault == Some(Fault::DropVertex) {
        v.pop();
    }
    #[allow(unused_mut)]
    let mut g = TwoDistGraph::from_points(v.clone());
    #[cfg(debug_assertions)]
    if fault == Some(Fault::DropEdge) {
        g.remove_edge1_at(0);
    }
    let h = build_h_from_v(v);
    let k = build_k_from_h(&h);
    ConstructionBundle {
        t_len: t.len(),
        g,
        h,
        k,
    }
}

/// The fast half of the verdict: counts, metric identities, coincidences
/// and the isometry sanity of the rotated copy. No enumeration.
pub fn verify_construction(b: &ConstructionBundle) -> VerdictReport {
    let mut rep = VerdictReport::default();
    rep.push_eq("t.count", 57, b.t_len);
    rep.push_eq("g.vertices", 205, b.g.n());
    rep.push_eq("g.edges1", 966, b.g.m1());
    rep.push_eq("g.edges2", 423, b.g.m2());
    rep.push_eq("h.vertices", 214, b.h.n());
    rep.push_eq("h.edges1", 1004, b.h.m1());
    rep.push_eq("h.edges2", 446, b.h.m2());
    rep.push_eq("k.vertices", 426, b.k.graph.n());
    rep.push_eq("k.edges1", 2009, b.k.graph.m1());
    rep.push_eq("k.edges2", 892, b.k.graph.m2());

    let kg = &b.k.graph;
    let (a, bb, bp) = (
        kg.vertex(b.k.a).clone(),
        kg.vertex(b.k.b).clone(),
        kg.vertex(b.k.b_prime).clone(),
    );
    let sq_ab = a.sq_distance(&bb);
    let sq_abp = a.sq_distance(&bp);
    let sq_bbp = bb.sq_distance(&bp);
    rep.push("sq.AB", "25", &sq_ab, sq_ab.equals_int(25));
    rep.push("sq.ABprime", "25", &sq_abp, sq_abp.equals_int(25));
    rep.push("sq.BBprime", "1", &sq_bbp, sq_bbp.equals_int(1));
    rep.push(
        "k.edge.BBprime",
        "distance-1 edge",
        format!("present={}", kg.has_edge1(b.k.b, b.k.b_prime)),
        kg.has_edge1(b.k.b, b.k.b_prime),
    );

    let coincidences = &b.k.coincidences;
    let has_center = coincidences.iter().any(|c| c.vertex == b.k.a && c.image_of == b.k.a);
    rep.push(
        "k.coincidences",
        "2 shared vertices, center among them",
        format!("{} shared, center={}", coincidences.len(), has_center),
        coincidences.len() == 2 && has_center,
    );
    if let Some(other) = coincidences.iter().find(|c| c.vertex != b.k.a) {
        rep.second_coincidence = Some(format!(
            "image of {} lands on {}",
            kg.vertex(other.image_of),
            kg.vertex(other.vertex)
        ));
    }

    // the rotated copy must be isometric to H edge by edge
    let center = kg.vertex(b.k.a).clone();
    let iso_ok = b
        .h
        .edges1()
        .iter()
        .map(|e| (e, 1))
        .chain(b.h.edges2().iter().map(|e| (e, 4)))
        .all(|(&(u, v), d)| {
            let iu = rotate_special(b.h.vertex(u), &center);
            let iv = rotate_special(b.h.vertex(v), &center);
            iu.sq_distance(&iv).equals_int(d)
        });
    rep.push("h.rotation.isometry", "all edge lengths preserved", iso_ok, iso_ok);
    rep
}

/// Append the enumeration-dependent checks and, if everything holds,
/// the composed conclusion.
pub fn verify_colorings(
    b: &ConstructionBundle,
    rep: &mut VerdictReport,
    g_colorings: &[CanonicalColoring],
    h_colorings: &[CanonicalColoring],
) {
    let g_order = standard_order(&b.g);
    let h_order = standard_order(&b.h);

    rep.push_eq("g.colorings", 18, g_colorings.len());
    let g_sound = g_colorings
        .iter()
        .all(|c| is_proper(&b.g, &c.classes, 5) && is_canonical(&c.classes, &g_order));
    rep.push("g.colorings.sound", "all proper and canonical", g_sound, g_sound);

    rep.push_eq("h.colorings", 35, h_colorings.len());
    let h_sound = h_colorings
        .iter()
        .all(|c| is_proper(&b.h, &c.classes, 5) && is_canonical(&c.classes, &h_order));
    rep.push("h.colorings.sound", "all proper and canonical", h_sound, h_sound);

    let a = b.h.label_index("A").expect("label A");
    let bb = b.h.label_index("B").expect("label B");
    let forced = !h_colorings.is_empty() && check_forced_same_color(h_colorings, a, bb);
    rep.push(
        "h.forcing.AB",
        "color(A) = color(B) in every coloring",
        forced,
        forced,
    );

    rep.g_classes_up_to_symmetry = Some(count_up_to_symmetry(&b.g, &g_order, g_colorings));

    let metric_ok = rep
        .checks
        .iter()
        .filter(|c| matches!(c.name.as_str(), "sq.AB" | "sq.ABprime" | "sq.BBprime" | "k.edge.BBprime" | "h.rotation.isometry"))
        .all(|c| c.pass);
    let composed = metric_ok && forced && h_sound;
    rep.push(
        "k.no_5_coloring",
        "A/B/B' forcing contradicts the B-B' edge",
        composed,
        composed,
    );
    if composed {
        rep.derivation = alloc::vec![
            String::from("any proper 5-coloring of K restricts to proper 5-colorings of both embedded copies of H"),
            String::from("every 5-coloring of H gives A and B one color, so in K: color(A) = color(B)"),
            String::from("the second copy is an isometric image of H fixing A and sending B to B', so color(A) = color(B')"),
            String::from("hence color(B) = color(B'), yet |BB'| = 1 makes (B, B') an edge of K: contradiction"),
            String::from("so K admits no proper 5-coloring, and 5 colors cannot avoid monochromatic pairs at distances 1 and 2"),
        ];
    }
}

/// The orbit-driven search order used everywhere a graph is enumerated.
pub fn standard_order(g: &TwoDistGraph) -> VertexOrder {
    order_vertices(g, &orbit_partition(g))
}

/// Full verdict, single shard, single thread. The CLI front end runs the
/// same stages with the enumerations spread over worker threads.
pub fn verify_theorem() -> VerdictReport {
    let b = build_all();
    let mut rep = verify_construction(&b);
    if !rep.pass() {
        rep.enumeration_skipped = true;
        return rep;
    }
    let cfg = SearchConfig::new(5);
    let g_out = enumerate_colorings(&b.g, &standard_order(&b.g), &cfg).expect("valid config");
    let h_out = enumerate_colorings(&b.h, &standard_order(&b.h), &cfg).expect("valid config");
    verify_colorings(&b, &mut rep, &g_out.colorings, &h_out.colorings);
    rep
}

/// Vertex permutations induced by the dihedral symmetries, for a graph
/// whose point set is closed under them.
fn dihedral_vertex_perms(g: &TwoDistGraph) -> Vec<Vec<u32>> {
    let index: alloc::collections::BTreeMap<&PlanePoint, u32> = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i as u32))
        .collect();
    let perm_of = |f: &dyn Fn(&PlanePoint) -> PlanePoint| -> Option<Vec<u32>> {
        g.vertices().iter().map(|p| index.get(&f(p)).copied()).collect()
    };
    let gens: Vec<Vec<u32>> = [
        perm_of(&|p| reflect_x(p)),
        perm_of(&|p| reflect_y(p)),
        perm_of(&|p| rotate60(p)),
    ]
    .into_iter()
    .flatten()
    .collect();
    let identity: Vec<u32> = (0..g.n() as u32).collect();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    seen.insert(identity.clone());
    let mut frontier = alloc::vec![identity];
    while let Some(p) = frontier.pop() {
        for gen in &gens {
            let composed: Vec<u32> = p.iter().map(|&i| gen[i as usize]).collect();
            if seen.insert(composed.clone()) {
                frontier.push(composed);
            }
        }
    }
    seen.into_iter().collect()
}

/// Number of coloring classes after quotienting by both color
/// permutations and the dihedral symmetry of the point set.
pub fn count_up_to_symmetry(
    g: &TwoDistGraph,
    order: &VertexOrder,
    colorings: &[CanonicalColoring],
) -> u64 {
    let perms = dihedral_vertex_perms(g);
    let mut reps: BTreeSet<CanonicalColoring> = BTreeSet::new();
    for coloring in colorings {
        let rep = perms
            .iter()
            .map(|perm| {
                let mut moved = alloc::vec![0u8; coloring.classes.len()];
                for (i, &img) in perm.iter().enumerate() {
                    moved[img as usize] = coloring.classes[i];
                }
                canonical_form(&moved, order)
            })
            .min()
            .expect("at least the identity permutation");
        reps.insert(rep);
    }
    reps.len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks_pass() {
        let b = build_all();
        let rep = verify_construction(&b);
        for c in &rep.checks {
            assert!(c.pass, "{}: expected {}, observed {}", c.name, c.expected, c.observed);
        }
        assert!(rep.second_coincidence.is_some());
    }

    #[cfg(debug_assertions)]
    #[test]
    fn faults_flip_the_verdict() {
        for fault in [Fault::DropVertex, Fault::PerturbCoord, Fault::DropEdge] {
            let b = build_all_with_fault(fault);
            let rep = verify_construction(&b);
            assert!(!rep.pass(), "{fault:?} must fail");
            let first = rep.first_failure().expect("a named failing quantity");
            assert!(!first.name.is_empty());
        }
    }

    #[test]
    fn forcing_negative_control() {
        // doctor one H coloring so A and B differ: the forcing check and
        // with it the composition must fail
        let b = build_all();
        let mut rep = verify_construction(&b);
        let a = b.h.label_index("A").unwrap() as usize;
        let mut fake = alloc::vec![CanonicalColoring { classes: alloc::vec![0u8; b.h.n()] }];
        fake[0].classes[a] = 1;
        let g_fake: Vec<CanonicalColoring> = Vec::new();
        verify_colorings(&b, &mut rep, &g_fake, &fake);
        let forcing = rep.checks.iter().find(|c| c.name == "h.forcing.AB").unwrap();
        assert!(!forcing.pass);
        let composed = rep.checks.iter().find(|c| c.name == "k.no_5_coloring").unwrap();
        assert!(!composed.pass);
        assert!(!rep.pass());
    }

    #[test]
    fn dihedral_perms_of_g_form_the_full_group() {
        let b = build_all();
        let perms = dihedral_vertex_perms(&b.g);
        assert_eq!(perms.len(), 12);
    }
}
