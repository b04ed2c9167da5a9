//! Exhaustive enumeration of proper k-colorings by backtracking with
//! unit propagation.
//!
//! Colorings are produced in canonical form: along the search order, the
//! first vertex carrying color c appears only after colors 0..c-1 have
//! appeared, so each color-permutation class is emitted exactly once.
//! Work splits deterministically across shards at a fixed tree depth:
//! every visit to that depth increments a counter and each shard owns the
//! visits congruent to its id, so shard outputs are pairwise disjoint and
//! their union over all ids is the full enumeration.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Adjacency, TwoDistGraph, VertexOrder};

/// Marker for an uncolored vertex.
pub const NC: u8 = u8::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Number of colors.
    pub k: u8,
    /// Depth of the round-robin split point.
    pub keydepth: u32,
    pub shard_id: u32,
    pub shard_count: u32,
    /// Own subtrees completed between progress callbacks; 0 disables.
    pub checkpoint_interval: u64,
}

impl SearchConfig {
    pub fn new(k: u8) -> Self {
        SearchConfig {
            k,
            keydepth: 17,
            shard_id: 0,
            shard_count: 1,
            checkpoint_interval: 0,
        }
    }

    pub fn with_shard(mut self, shard_id: u32, shard_count: u32) -> Self {
        self.shard_id = shard_id;
        self.shard_count = shard_count;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.shard_count == 0 || self.shard_id >= self.shard_count {
            return Err(SearchError::ShardOutOfRange {
                shard_id: self.shard_id,
                shard_count: self.shard_count,
            });
        }
        if self.k > 31 {
            return Err(SearchError::TooManyColors(self.k));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    ShardOutOfRange { shard_id: u32, shard_count: u32 },
    TooManyColors(u8),
    OrderMismatch { order_len: usize, n: usize },
    TooLargeForBruteForce { n: usize, limit: usize },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::ShardOutOfRange { shard_id, shard_count } => {
                write!(f, "shard {shard_id} out of range for {shard_count} shards")
            }
            SearchError::TooManyColors(k) => write!(f, "{k} colors exceed the 31-color limit"),
            SearchError::OrderMismatch { order_len, n } => {
                write!(f, "order of length {order_len} does not fit {n} vertices")
            }
            SearchError::TooLargeForBruteForce { n, limit } => {
                write!(f, "{n} vertices exceed the brute-force guard of {limit}")
            }
        }
    }
}

/// A proper coloring in canonical form, colors indexed by graph vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalColoring {
    pub classes: Vec<u8>,
}

/// Mutable search state: per-vertex colors, candidate masks and the undo
/// trail that makes `unassign` restore the exact prior state.
#[derive(Clone, Debug)]
pub struct SearchState {
    color: Vec<u8>,
    mask: Vec<u32>,
    frames: Vec<Frame>,
    trail_mask: Vec<(u32, u32)>,
    trail_colored: Vec<u32>,
    max_used: i32,
    queue: Vec<u32>,
    forcing: bool,
    /// Total vertices colored by propagation, monotone.
    pub forced: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Frame {
    vertex: u32,
    color: u8,
    mask_len: usize,
    colored_len: usize,
    prev_max: i32,
}

impl PartialEq for SearchState {
    fn eq(&self, other: &Self) -> bool {
        // scratch queue and the forced counter are not part of the
        // semantic state
        self.color == other.color
            && self.mask == other.mask
            && self.frames == other.frames
            && self.trail_mask == other.trail_mask
            && self.trail_colored == other.trail_colored
            && self.max_used == other.max_used
    }
}

impl Eq for SearchState {}

impl SearchState {
    pub fn new(n: usize, k: u8) -> Self {
        Self::with_forcing(n, k, true)
    }

    /// `forcing = false` turns off propagation entirely: assign only
    /// checks direct conflicts, which is the pure-backtracking baseline.
    pub fn with_forcing(n: usize, k: u8, forcing: bool) -> Self {
        assert!(k >= 1 && k <= 31);
        let full = (1u32 << k) - 1;
        SearchState {
            color: vec![NC; n],
            mask: vec![full; n],
            frames: Vec::new(),
            trail_mask: Vec::new(),
            trail_colored: Vec::new(),
            max_used: -1,
            queue: Vec::new(),
            forcing,
            forced: 0,
        }
    }

    pub fn color_of(&self, v: u32) -> Option<u8> {
        let c = self.color[v as usize];
        (c != NC).then_some(c)
    }

    pub fn candidates(&self, v: u32) -> u32 {
        self.mask[v as usize]
    }

    pub fn max_used_color(&self) -> i32 {
        self.max_used
    }

    fn place(&mut self, v: u32, c: u8) {
        let vi = v as usize;
        self.trail_mask.push((v, self.mask[vi]));
        self.mask[vi] = 1u32 << c;
        self.color[vi] = c;
        self.trail_colored.push(v);
        if i32::from(c) > self.max_used {
            self.max_used = i32::from(c);
        }
    }

    /// Color `v` with `c` and propagate: `c` is removed from every
    /// uncolored neighbor's candidates; a neighbor left with a single
    /// candidate is colored recursively, one left with none is a
    /// conflict. Returns false on conflict, leaving all changes on the
    /// trail for the caller's matching [`unassign`](Self::unassign).
    pub fn assign(&mut self, adj: &Adjacency, v: u32, c: u8) -> bool {
        debug_assert_eq!(self.color[v as usize], NC, "assign target already colored");
        debug_assert_ne!(self.mask[v as usize] & (1u32 << c), 0, "color not a candidate");
        self.frames.push(Frame {
            vertex: v,
            color: c,
            mask_len: self.trail_mask.len(),
            colored_len: self.trail_colored.len(),
            prev_max: self.max_used,
        });
        self.place(v, c);

        if !self.forcing {
            return adj.neighbors(v).iter().all(|&w| self.color[w as usize] != c);
        }

        self.queue.clear();
        self.queue.push(v);
        let mut qi = 0;
        while qi < self.queue.len() {
            let u = self.queue[qi];
            qi += 1;
            let cu = self.color[u as usize];
            let bit = 1u32 << cu;
            for &w in adj.neighbors(u) {
                let wi = w as usize;
                if self.color[wi] != NC {
                    // two forcings in one wave may collide on an edge
                    if self.color[wi] == cu {
                        return false;
                    }
                    continue;
                }
                let m = self.mask[wi];
                if m & bit == 0 {
                    continue;
                }
                let m2 = m & !bit;
                self.trail_mask.push((w, m));
                self.mask[wi] = m2;
                if m2 == 0 {
                    return false;
                }
                if m2.count_ones() == 1 {
                    let cw = m2.trailing_zeros() as u8;
                    self.place(w, cw);
                    self.forced += 1;
                    self.queue.push(w);
                }
            }
        }
        true
    }

    /// Rewind the trail to the state immediately before the matching
    /// `assign(v, c)`, whether that assign succeeded or not.
    pub fn unassign(&mut self, v: u32, c: u8) {
        let f = self.frames.pop().expect("unassign without matching assign");
        debug_assert_eq!((f.vertex, f.color), (v, c), "unassign order violates LIFO");
        while self.trail_colored.len() > f.colored_len {
            let w = self.trail_colored.pop().unwrap();
            self.color[w as usize] = NC;
        }
        while self.trail_mask.len() > f.mask_len {
            let (w, m) = self.trail_mask.pop().unwrap();
            self.mask[w as usize] = m;
        }
        self.max_used = f.prev_max;
    }
}

/// Deterministic counters describing one shard's traversal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search-tree nodes visited.
    pub nodes: u64,
    /// Visits to the split depth (the shared shard counter).
    pub calls: u64,
    /// Vertices colored by propagation.
    pub forced: u64,
}

/// Everything one shard produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShardOutcome {
    pub count: u64,
    pub stats: SearchStats,
}

/// Progress snapshot handed to the checkpoint callback after a batch of
/// completed own subtrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShardProgress {
    /// All split-depth visits up to and including this counter value are
    /// settled for this shard: resuming may skip them.
    pub calls_completed: u64,
    pub count_so_far: u64,
}

struct Engine<'a, E, P>
where
    E: FnMut(&[u8]),
    P: FnMut(&ShardProgress),
{
    adj: &'a Adjacency,
    st: SearchState,
    n: u32,
    k: u8,
    keydepth: u32,
    cpu: u64,
    ncpu: u64,
    resume_calls: u64,
    interval: u64,
    own_done: u64,
    count: u64,
    nodes: u64,
    calls: u64,
    emit: E,
    progress: P,
}

impl<'a, E, P> Engine<'a, E, P>
where
    E: FnMut(&[u8]),
    P: FnMut(&ShardProgress),
{
    fn search(&mut self, v: u32) {
        self.nodes += 1;
        if v == self.n {
            self.count += 1;
            (self.emit)(&self.st.color);
            return;
        }
        if v == self.keydepth {
            self.calls += 1;
            if self.calls % self.ncpu != self.cpu {
                return;
            }
            if self.calls <= self.resume_calls {
                return;
            }
            self.branch(v);
            self.own_done += 1;
            if self.interval > 0 && self.own_done % self.interval == 0 {
                let snap = ShardProgress {
                    calls_completed: self.calls,
                    count_so_far: self.count,
                };
                (self.progress)(&snap);
            }
            return;
        }
        self.branch(v);
    }

    fn branch(&mut self, v: u32) {
        if self.st.color[v as usize] != NC {
            self.search(v + 1);
            return;
        }
        // canonical form: never open a color beyond max_used + 1
        let cap = core::cmp::min(self.st.max_used + 1, i32::from(self.k) - 1);
        let m = self.st.mask[v as usize];
        for c in 0..=cap {
            let c = c as u8;
            if m & (1u32 << c) == 0 {
                continue;
            }
            if self.st.assign(self.adj, v, c) {
                self.search(v + 1);
            }
            self.st.unassign(v, c);
        }
    }
}

/// Run one shard over a pre-permuted adjacency (vertex i = search rank i).
///
/// `emit` receives each coloring as colors indexed by search rank;
/// `progress` fires after every `checkpoint_interval` completed own
/// subtrees. Subtrees whose split counter is `<= resume_calls` are
/// skipped, which is how a checkpointed run resumes.
pub fn run_shard<E, P>(
    adj: &Adjacency,
    cfg: &SearchConfig,
    resume_calls: u64,
    forcing: bool,
    emit: E,
    progress: P,
) -> Result<ShardOutcome, SearchError>
where
    E: FnMut(&[u8]),
    P: FnMut(&ShardProgress),
{
    cfg.validate()?;
    let n = adj.n() as u32;
    let mut emit = emit;
    if n == 0 {
        // the empty coloring, owned by shard 0
        let count = u64::from(cfg.shard_id == 0);
        if count == 1 {
            emit(&[]);
        }
        return Ok(ShardOutcome {
            count,
            stats: SearchStats::default(),
        });
    }
    if cfg.k == 0 {
        return Ok(ShardOutcome::default());
    }
    // with several shards the split must happen strictly above the
    // leaves or every shard would emit the full set
    let keydepth = if cfg.shard_count > 1 {
        cfg.keydepth.min(n - 1)
    } else {
        cfg.keydepth
    };
    let mut eng = Engine {
        adj,
        st: SearchState::with_forcing(n as usize, cfg.k, forcing),
        n,
        k: cfg.k,
        keydepth,
        cpu: u64::from(cfg.shard_id),
        ncpu: u64::from(cfg.shard_count),
        resume_calls,
        interval: cfg.checkpoint_interval,
        own_done: 0,
        count: 0,
        nodes: 0,
        calls: 0,
        emit,
        progress,
    };
    eng.search(0);
    Ok(ShardOutcome {
        count: eng.count,
        stats: SearchStats {
            nodes: eng.nodes,
            calls: eng.calls,
            forced: eng.st.forced,
        },
    })
}

/// Outcome of a full in-process enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerateOutcome {
    pub count: u64,
    pub colorings: Vec<CanonicalColoring>,
    pub stats: SearchStats,
}

/// Enumerate the shard's canonical proper k-colorings of `g` along
/// `order`, collecting them with colors mapped back to graph indexing.
pub fn enumerate_colorings(
    g: &TwoDistGraph,
    order: &VertexOrder,
    cfg: &SearchConfig,
) -> Result<EnumerateOutcome, SearchError> {
    if order.order.len() != g.n() || !order.is_permutation() {
        return Err(SearchError::OrderMismatch {
            order_len: order.order.len(),
            n: g.n(),
        });
    }
    let adj = g.adjacency().permute(&order.order);
    let mut colorings = Vec::new();
    let outcome = run_shard(
        &adj,
        cfg,
        0,
        true,
        |colors| {
            let mut classes = vec![NC; g.n()];
            for (rank, &v) in order.order.iter().enumerate() {
                classes[v as usize] = colors[rank];
            }
            colorings.push(CanonicalColoring { classes });
        },
        |_| {},
    )?;
    Ok(EnumerateOutcome {
        count: outcome.count,
        colorings,
        stats: outcome.stats,
    })
}

/// True iff `u` and `v` carry the same color in every listed coloring.
pub fn check_forced_same_color(colorings: &[CanonicalColoring], u: u32, v: u32) -> bool {
    colorings
        .iter()
        .all(|c| c.classes[u as usize] == c.classes[v as usize])
}

/// Relabel a proper coloring into canonical form along `order`.
pub fn canonical_form(classes: &[u8], order: &VertexOrder) -> CanonicalColoring {
    let mut rename = [NC; 256];
    let mut next = 0u8;
    let mut out = vec![NC; classes.len()];
    for &v in &order.order {
        let old = classes[v as usize] as usize;
        if rename[old] == NC {
            rename[old] = next;
            next += 1;
        }
        out[v as usize] = rename[old];
    }
    CanonicalColoring { classes: out }
}

/// True iff scanning along `order`, first occurrences of colors are
/// 0, 1, 2, ... with no gaps.
pub fn is_canonical(classes: &[u8], order: &VertexOrder) -> bool {
    let mut next = 0u8;
    for &v in &order.order {
        let c = classes[v as usize];
        if c > next {
            return false;
        }
        if c == next {
            next += 1;
        }
    }
    true
}

/// True iff no edge of either class is monochromatic and every vertex is
/// colored below `k`.
pub fn is_proper(g: &TwoDistGraph, classes: &[u8], k: u8) -> bool {
    if classes.len() != g.n() || classes.iter().any(|&c| c >= k) {
        return false;
    }
    g.edges1()
        .iter()
        .chain(g.edges2().iter())
        .all(|&(u, v)| classes[u as usize] != classes[v as usize])
}

const BRUTE_FORCE_LIMIT: usize = 14;

/// Reference count of canonical proper k-colorings by direct trial, with
/// no candidate masks, no propagation and no sharding: at each vertex in
/// index order try every color consistent with earlier neighbors, capped
/// for canonical form. Guarded to small graphs.
pub fn brute_force_count(g: &TwoDistGraph, k: u8) -> Result<u64, SearchError> {
    if g.n() > BRUTE_FORCE_LIMIT {
        return Err(SearchError::TooLargeForBruteForce {
            n: g.n(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let n = g.n();
    if n == 0 {
        return Ok(1);
    }
    if k == 0 {
        return Ok(0);
    }
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in g.edges1().iter().chain(g.edges2().iter()) {
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        earlier[hi as usize].push(lo as usize);
    }

    fn rec(v: usize, max_used: i32, colors: &mut [u8], earlier: &[Vec<usize>], k: u8) -> u64 {
        if v == colors.len() {
            return 1;
        }
        let cap = core::cmp::min(max_used + 1, i32::from(k) - 1);
        let mut total = 0;
        for c in 0..=cap {
            let c = c as u8;
            if earlier[v].iter().any(|&w| colors[w] == c) {
                continue;
            }
            colors[v] = c;
            total += rec(v + 1, core::cmp::max(max_used, i32::from(c)), colors, earlier, k);
        }
        total
    }

    let mut colors = vec![NC; n];
    Ok(rec(0, -1, &mut colors, &earlier, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PlanePoint, QuadCoord};
    use crate::graph::order_vertices;

    fn pts(qs: &[[i64; 4]]) -> Vec<PlanePoint> {
        qs.iter().map(|&q| QuadCoord::from(q).to_point()).collect()
    }

    fn clique3() -> TwoDistGraph {
        TwoDistGraph::from_points(pts(&[[0, 0, 0, 0], [-2, 0, 0, -2], [-4, 0, 0, -4]]))
    }

    /// Collinear 4-chain: consecutive points at distance 1, gap-2 pairs at
    /// distance 2.
    fn chain(len: usize) -> TwoDistGraph {
        let qs: Vec<[i64; 4]> = (0..len as i64).map(|i| [-2 * i, 0, 0, -2 * i]).collect();
        TwoDistGraph::from_points(pts(&qs))
    }

    #[test]
    fn assign_isolated_vertex() {
        let g = TwoDistGraph::from_points(pts(&[[0, 0, 0, 0]]));
        let adj = g.adjacency();
        let mut st = SearchState::new(1, 5);
        assert!(st.assign(&adj, 0, 3));
        assert_eq!(st.color_of(0), Some(3));
        assert_eq!(st.forced, 0);
    }

    /// Bent unit path 0-1-2: no distance-2 chord.
    fn bent_path() -> TwoDistGraph {
        let g = TwoDistGraph::from_points(pts(&[[0, 0, 0, 0], [-2, 0, 0, -2], [-4, 0, 0, 0]]));
        assert_eq!((g.m1(), g.m2()), (2, 0));
        g
    }

    #[test]
    fn assign_forces_along_path_k2() {
        let g = bent_path();
        let adj = g.adjacency();
        let mut st = SearchState::new(3, 2);
        assert!(st.assign(&adj, 0, 0));
        // middle vertex now has only color 1 left, so it was forced,
        // which in turn forced the far end back to 0
        assert_eq!(st.color_of(1), Some(1));
        assert_eq!(st.color_of(2), Some(0));
        assert_eq!(st.forced, 2);
    }

    #[test]
    fn triangle_k2_conflicts() {
        let t = clique3();
        let tadj = t.adjacency();
        let mut st = SearchState::new(3, 2);
        // both neighbors get forced to the one remaining color and clash
        assert!(!st.assign(&tadj, 0, 0));
        st.unassign(0, 0);
        assert_eq!(st, SearchState::new(3, 2));
    }

    #[test]
    fn unassign_restores_nested_lifo() {
        let g = chain(6);
        let adj = g.adjacency();
        let mut st = SearchState::new(6, 5);
        let s0 = st.clone();
        assert!(st.assign(&adj, 0, 0));
        let s1 = st.clone();
        assert!(st.assign(&adj, 1, 1));
        let s2 = st.clone();
        assert!(st.assign(&adj, 2, 2));
        st.unassign(2, 2);
        assert_eq!(st, s2);
        st.unassign(1, 1);
        assert_eq!(st, s1);
        st.unassign(0, 0);
        assert_eq!(st, s0);
        // determinism: redoing gives identical state
        assert!(st.assign(&adj, 0, 0));
        assert_eq!(st, s1);
    }

    #[test]
    fn enumerate_small_counts() {
        // single edge, any k >= 2: one canonical coloring
        let g = chain(2);
        let order = VertexOrder::identity(2);
        let out = enumerate_colorings(&g, &order, &SearchConfig::new(5)).unwrap();
        assert_eq!(out.count, 1);
        assert_eq!(out.colorings[0].classes, vec![0, 1]);

        let t = clique3();
        let out = enumerate_colorings(&t, &VertexOrder::identity(3), &SearchConfig::new(5)).unwrap();
        assert_eq!(out.count, 1);
        assert_eq!(out.colorings[0].classes, vec![0, 1, 2]);

        let out = enumerate_colorings(&t, &VertexOrder::identity(3), &SearchConfig::new(2)).unwrap();
        assert_eq!(out.count, 0);
    }

    #[test]
    fn enumerate_matches_brute_force_on_chains() {
        for len in 0..8usize {
            let g = chain(len);
            let order = VertexOrder::identity(len);
            for k in [0u8, 1, 2, 3, 5] {
                let fast = enumerate_colorings(&g, &order, &SearchConfig::new(k)).unwrap();
                if len <= BRUTE_FORCE_LIMIT {
                    let slow = brute_force_count(&g, k).unwrap();
                    assert_eq!(fast.count, slow, "len={len} k={k}");
                }
                for c in &fast.colorings {
                    assert!(is_proper(&g, &c.classes, k));
                    assert!(is_canonical(&c.classes, &order));
                }
            }
        }
    }

    #[test]
    fn degenerate_inputs() {
        let empty = TwoDistGraph::from_points(Vec::new());
        let order = VertexOrder::identity(0);
        let out = enumerate_colorings(&empty, &order, &SearchConfig::new(0)).unwrap();
        assert_eq!(out.count, 1);
        let one = TwoDistGraph::from_points(pts(&[[0, 0, 0, 0]]));
        let out = enumerate_colorings(&one, &VertexOrder::identity(1), &SearchConfig::new(0)).unwrap();
        assert_eq!(out.count, 0);
        assert_eq!(brute_force_count(&empty, 0).unwrap(), 1);
        assert_eq!(brute_force_count(&one, 5).unwrap(), 1);
    }

    #[test]
    fn brute_force_guard() {
        let g = chain(15);
        assert!(matches!(
            brute_force_count(&g, 3),
            Err(SearchError::TooLargeForBruteForce { .. })
        ));
    }

    #[test]
    fn shards_partition_chain() {
        let g = chain(9);
        let order = VertexOrder::identity(9);
        let full = enumerate_colorings(&g, &order, &SearchConfig::new(3)).unwrap();
        for shards in [1u32, 2, 3, 7] {
            let mut cfg = SearchConfig::new(3);
            cfg.keydepth = 4;
            let mut union: Vec<CanonicalColoring> = Vec::new();
            for id in 0..shards {
                let out = enumerate_colorings(&g, &order, &cfg.clone().with_shard(id, shards)).unwrap();
                union.extend(out.colorings);
            }
            assert_eq!(union.len() as u64, full.count, "shards={shards}");
            let mut sorted = union.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), union.len(), "shards overlap");
            let mut full_sorted = full.colorings.clone();
            full_sorted.sort();
            assert_eq!(sorted, full_sorted);
        }
    }

    #[test]
    fn forcing_off_same_set() {
        let g = chain(8);
        let order = VertexOrder::identity(8);
        let adj = g.adjacency().permute(&order.order);
        let cfg = SearchConfig::new(3);
        let run = |forcing: bool| {
            let mut got = Vec::new();
            run_shard(&adj, &cfg, 0, forcing, |c| got.push(c.to_vec()), |_| {}).unwrap();
            got
        };
        let with = run(true);
        let without = run(false);
        assert_eq!(with, without);
    }

    #[test]
    fn forced_same_color_basics() {
        let g = chain(2);
        let out = enumerate_colorings(&g, &VertexOrder::identity(2), &SearchConfig::new(5)).unwrap();
        assert!(!check_forced_same_color(&out.colorings, 0, 1));
        assert!(check_forced_same_color(&out.colorings, 1, 1));
    }

    #[test]
    fn canonical_form_relabels() {
        let order = VertexOrder::identity(4);
        let c = canonical_form(&[2, 2, 0, 1], &order);
        assert_eq!(c.classes, vec![0, 0, 1, 2]);
        assert!(is_canonical(&c.classes, &order));
        assert!(!is_canonical(&[1, 0, 0, 0], &order));
    }

    #[test]
    fn ordering_does_not_change_count() {
        let g = chain(7);
        let n = g.n();
        let ident = VertexOrder::identity(n);
        let reversed = VertexOrder {
            order: (0..n as u32).rev().collect(),
        };
        let part = crate::graph::orbit_partition(&g);
        let by_orbit = order_vertices(&g, &part);
        let cfg = SearchConfig::new(3);
        let a = enumerate_colorings(&g, &ident, &cfg).unwrap().count;
        let b = enumerate_colorings(&g, &reversed, &cfg).unwrap().count;
        let c = enumerate_colorings(&g, &by_orbit, &cfg).unwrap().count;
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}
