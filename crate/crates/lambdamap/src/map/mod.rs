//! Combinatorial maps as permutation pairs.
//!
//! A map on a compact oriented surface is a pair of permutations `(v, e)` on
//! a finite set of darts (half-edges): `v` lists the counterclockwise order
//! of darts around each vertex, `e` glues darts into edges, and the group
//! generated by the two must act transitively. The face permutation is
//! `f = v⁻¹ ∘ e`, and the genus comes out of the Euler–Poincaré formula
//! `c(v) − c(e) + c(f) = 2 − 2g`.
//!
//! Two flavors live here:
//!
//! * [`ClassicalMap`] — `e` is a fixed-point-free involution (every dart is
//!   glued). The trivalent specialization additionally has fixed-point-free
//!   `v` of order three.
//! * [`RootedTrivalentMap`] — `v` has order three with exactly one fixed
//!   point (the root, a univalent vertex), and the fixed points of `e` form
//!   an ordered boundary of dangling edges. Degree-0 boundaries are "closed"
//!   maps; these are the maps that underlie linear lambda terms.

mod dot;
mod json;

use crate::graph::UndirectedGraph;
use crate::perm::Permutation;
use thiserror::Error;

/// A half-edge, identified by an arbitrary natural number unique within one map.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dart(pub u32);

impl std::fmt::Display for Dart {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("dart ids must be distinct")]
    DuplicateDart,
    #[error("dart {0} does not belong to the map")]
    UnknownDart(Dart),
    #[error("vertex index {0} out of range")]
    UnknownVertex(usize),
    #[error("cycles must cover every dart exactly once")]
    CyclesNotPartition,
    #[error("mapping is not a bijection on the dart set")]
    NotBijective,
    #[error("edge permutation is not an involution")]
    NotInvolution,
    #[error("edge permutation fixes dart {0}; classical maps have no dangling edges")]
    EdgeFixedPoint(Dart),
    #[error("vertex permutation does not have order dividing 3")]
    NotOrderThree,
    #[error("vertex permutation fixes dart {0}; classical trivalent maps have none")]
    VertexFixedPoint(Dart),
    #[error("the fixed points of v must be exactly the root")]
    RootNotUniqueFixedPoint,
    #[error("boundary must list exactly the fixed points of e, each once")]
    BoundaryMismatch,
    #[error("<v,e> does not act transitively on the darts")]
    NotTransitive,
    #[error("empty dart set")]
    Empty,
    #[error("Euler characteristic {0} does not fit a closed oriented surface")]
    BadEuler(i64),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("map has a nonempty boundary")]
    NotClosed,
    #[error("smoothing needs at least two trivalent vertices")]
    SmoothTooSmall,
    #[error("invalid map JSON: {0}")]
    Json(String),
}

/// Shared dart-table plumbing: sorted dart ids plus position-based v and e.
#[derive(Clone, PartialEq, Eq, Debug)]
struct MapCore {
    darts: Vec<Dart>,
    v: Permutation,
    e: Permutation,
}

impl MapCore {
    fn new(mut darts: Vec<Dart>, v_cycles: &[Vec<Dart>], e_cycles: &[Vec<Dart>]) -> Result<Self, MapError> {
        if darts.is_empty() {
            return Err(MapError::Empty);
        }
        darts.sort_unstable();
        if darts.windows(2).any(|w| w[0] == w[1]) {
            return Err(MapError::DuplicateDart);
        }
        let pos = |d: Dart| -> Result<u32, MapError> {
            darts.binary_search(&d).map(|i| i as u32).map_err(|_| MapError::UnknownDart(d))
        };
        let to_positions = |cycles: &[Vec<Dart>]| -> Result<Vec<Vec<u32>>, MapError> {
            cycles.iter().map(|c| c.iter().map(|&d| pos(d)).collect()).collect()
        };
        let v = Permutation::from_cycles(darts.len(), &to_positions(v_cycles)?)?;
        let e = Permutation::from_cycles(darts.len(), &to_positions(e_cycles)?)?;
        Ok(MapCore { darts, v, e })
    }

    fn from_perms(darts: Vec<Dart>, v: Permutation, e: Permutation) -> Self {
        MapCore { darts, v, e }
    }

    fn len(&self) -> usize {
        self.darts.len()
    }

    fn pos(&self, d: Dart) -> Result<u32, MapError> {
        self.darts
            .binary_search(&d)
            .map(|i| i as u32)
            .map_err(|_| MapError::UnknownDart(d))
    }

    fn dart(&self, pos: u32) -> Dart {
        self.darts[pos as usize]
    }

    fn is_transitive(&self) -> bool {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(p) = stack.pop() {
            for q in [self.v.apply(p), self.e.apply(p)] {
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    count += 1;
                    stack.push(q);
                }
            }
        }
        count == n
    }

    fn face(&self) -> Permutation {
        self.v.inverse().compose(&self.e)
    }

    fn cycles_as_darts(&self, p: &Permutation) -> Vec<Vec<Dart>> {
        p.cycles()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.dart(i)).collect())
            .collect()
    }

    /// Genus from the Euler–Poincaré formula; the map must be closed.
    fn genus(&self) -> Result<u32, MapError> {
        let cv = self.v.cycle_count() as i64;
        let ce = self.e.cycle_count() as i64;
        let cf = self.face().cycle_count() as i64;
        let chi = cv - ce + cf;
        let twice_genus = 2 - chi;
        if twice_genus < 0 || twice_genus % 2 != 0 {
            return Err(MapError::BadEuler(chi));
        }
        Ok((twice_genus / 2) as u32)
    }

    /// Vertices are v-orbits; every 2-element e-orbit contributes an edge.
    fn underlying_graph_labeled(&self) -> (UndirectedGraph, Vec<(Dart, Dart)>) {
        let vc = self.v.cycles();
        let mut vertex_of = vec![0usize; self.len()];
        for (vi, cycle) in vc.iter().enumerate() {
            for &p in cycle {
                vertex_of[p as usize] = vi;
            }
        }
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for p in 0..self.len() as u32 {
            let q = self.e.apply(p);
            if q > p {
                edges.push((vertex_of[p as usize], vertex_of[q as usize]));
                labels.push((self.dart(p), self.dart(q)));
            }
        }
        let g = UndirectedGraph::new(vc.len(), &edges).expect("orbit indices are in range");
        (g, labels)
    }
}

/// A classical combinatorial map: `e` is a fixed-point-free involution and
/// `⟨v,e⟩` acts transitively on the darts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassicalMap {
    core: MapCore,
}

impl ClassicalMap {
    pub fn from_cycles(darts: Vec<Dart>, v_cycles: &[Vec<Dart>], e_cycles: &[Vec<Dart>]) -> Result<Self, MapError> {
        Self::validate(MapCore::new(darts, v_cycles, e_cycles)?)
    }

    fn validate(core: MapCore) -> Result<Self, MapError> {
        if !core.e.is_involution() {
            return Err(MapError::NotInvolution);
        }
        if let Some(&p) = core.e.fixed_points().first() {
            return Err(MapError::EdgeFixedPoint(core.dart(p)));
        }
        if !core.is_transitive() {
            return Err(MapError::NotTransitive);
        }
        Ok(ClassicalMap { core })
    }

    pub fn darts(&self) -> &[Dart] {
        &self.core.darts
    }

    pub fn dart_count(&self) -> usize {
        self.core.len()
    }

    pub fn v_apply(&self, d: Dart) -> Result<Dart, MapError> {
        Ok(self.core.dart(self.core.v.apply(self.core.pos(d)?)))
    }

    pub fn e_apply(&self, d: Dart) -> Result<Dart, MapError> {
        Ok(self.core.dart(self.core.e.apply(self.core.pos(d)?)))
    }

    pub fn v_cycles(&self) -> Vec<Vec<Dart>> {
        self.core.cycles_as_darts(&self.core.v)
    }

    pub fn e_cycles(&self) -> Vec<Vec<Dart>> {
        self.core.cycles_as_darts(&self.core.e)
    }

    /// The face permutation `f = v⁻¹ ∘ e`, on dart positions.
    pub fn face_permutation(&self) -> Permutation {
        self.core.face()
    }

    /// Face cycles in terms of dart ids.
    pub fn face_cycles(&self) -> Vec<Vec<Dart>> {
        self.core.cycles_as_darts(&self.core.face())
    }

    pub fn vertex_count(&self) -> usize {
        self.core.v.cycle_count()
    }

    pub fn edge_count(&self) -> usize {
        self.core.e.cycle_count()
    }

    pub fn face_count(&self) -> usize {
        self.core.face().cycle_count()
    }

    pub fn genus(&self) -> Result<u32, MapError> {
        self.core.genus()
    }

    /// True when every vertex is trivalent: `v³ = id` with no fixed points.
    pub fn is_trivalent(&self) -> bool {
        let v = &self.core.v;
        (0..v.len() as u32).all(|p| {
            let img = v.apply(p);
            img != p && v.apply(v.apply(img)) == p
        })
    }

    pub fn underlying_graph(&self) -> UndirectedGraph {
        self.core.underlying_graph_labeled().0
    }

    /// Underlying graph plus, for each edge, the e-orbit it came from.
    pub fn underlying_graph_labeled(&self) -> (UndirectedGraph, Vec<(Dart, Dart)>) {
        self.core.underlying_graph_labeled()
    }
}

/// The result of smoothing the root vertex out of a closed rooted trivalent
/// map: a classical map plus the dart that remembers where the root was.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassicalRootedMap {
    pub map: ClassicalMap,
    pub root: Dart,
}

/// A rooted trivalent map with boundary: `v³ = id` with the root as its only
/// fixed point, `e² = id` with the ordered boundary as its fixed-point set,
/// and `⟨v,e⟩` transitive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootedTrivalentMap {
    core: MapCore,
    root: u32,
    boundary: Vec<u32>,
}

impl RootedTrivalentMap {
    pub fn from_cycles(
        darts: Vec<Dart>,
        v_cycles: &[Vec<Dart>],
        e_cycles: &[Vec<Dart>],
        root: Dart,
        boundary: Vec<Dart>,
    ) -> Result<Self, MapError> {
        let core = MapCore::new(darts, v_cycles, e_cycles)?;
        Self::validate(core, root, boundary)
    }

    /// Builds a map from image functions over an explicit dart list.
    pub fn from_maps(
        darts: Vec<Dart>,
        v: impl Fn(Dart) -> Dart,
        e: impl Fn(Dart) -> Dart,
        root: Dart,
        boundary: Vec<Dart>,
    ) -> Result<Self, MapError> {
        let mut sorted = darts;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(MapError::DuplicateDart);
        }
        let pos = |d: Dart| -> Result<u32, MapError> {
            sorted.binary_search(&d).map(|i| i as u32).map_err(|_| MapError::UnknownDart(d))
        };
        let mut v_img = Vec::with_capacity(sorted.len());
        let mut e_img = Vec::with_capacity(sorted.len());
        for &d in &sorted {
            v_img.push(pos(v(d))?);
            e_img.push(pos(e(d))?);
        }
        let core = MapCore::from_perms(sorted, Permutation::from_images(v_img)?, Permutation::from_images(e_img)?);
        Self::validate(core, root, boundary)
    }

    fn validate(core: MapCore, root: Dart, boundary: Vec<Dart>) -> Result<Self, MapError> {
        let root_pos = core.pos(root)?;
        let boundary_pos: Vec<u32> = boundary
            .iter()
            .map(|&d| core.pos(d))
            .collect::<Result<_, _>>()?;
        // v has order three and fixes exactly the root
        let v = &core.v;
        for p in 0..core.len() as u32 {
            if v.apply(v.apply(v.apply(p))) != p {
                return Err(MapError::NotOrderThree);
            }
        }
        if v.fixed_points() != vec![root_pos] {
            return Err(MapError::RootNotUniqueFixedPoint);
        }
        if !core.e.is_involution() {
            return Err(MapError::NotInvolution);
        }
        let mut e_fixed = core.e.fixed_points();
        e_fixed.sort_unstable();
        let mut listed = boundary_pos.clone();
        listed.sort_unstable();
        if listed.windows(2).any(|w| w[0] == w[1]) || listed != e_fixed {
            return Err(MapError::BoundaryMismatch);
        }
        if !core.is_transitive() {
            return Err(MapError::NotTransitive);
        }
        Ok(RootedTrivalentMap {
            core,
            root: root_pos,
            boundary: boundary_pos,
        })
    }

    pub fn darts(&self) -> &[Dart] {
        &self.core.darts
    }

    pub fn dart_count(&self) -> usize {
        self.core.len()
    }

    pub fn root(&self) -> Dart {
        self.core.dart(self.root)
    }

    pub fn boundary(&self) -> Vec<Dart> {
        self.boundary.iter().map(|&p| self.core.dart(p)).collect()
    }

    /// Boundary length; the paper-facing name is the degree of the map.
    pub fn boundary_degree(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_closed(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Number of trivalent vertices (all v-orbits except the fixed root).
    pub fn trivalent_vertex_count(&self) -> usize {
        (self.core.len() - 1) / 3
    }

    pub fn v_apply(&self, d: Dart) -> Result<Dart, MapError> {
        Ok(self.core.dart(self.core.v.apply(self.core.pos(d)?)))
    }

    pub fn e_apply(&self, d: Dart) -> Result<Dart, MapError> {
        Ok(self.core.dart(self.core.e.apply(self.core.pos(d)?)))
    }

    pub fn v_cycles(&self) -> Vec<Vec<Dart>> {
        self.core.cycles_as_darts(&self.core.v)
    }

    pub fn e_cycles(&self) -> Vec<Vec<Dart>> {
        self.core.cycles_as_darts(&self.core.e)
    }

    /// The face permutation `f = v⁻¹ ∘ e` of the map as given (no boundary
    /// completion), on dart positions.
    pub fn face_permutation(&self) -> Permutation {
        self.core.face()
    }

    pub fn face_cycles(&self) -> Vec<Vec<Dart>> {
        self.core.cycles_as_darts(&self.core.face())
    }

    /// Genus of the map, with the boundary completed first: every e-fixed
    /// dart is glued to a fresh univalent partner, so the Euler–Poincaré
    /// count runs over a closed surface. Fixed points count as 1-cycles.
    pub fn genus(&self) -> Result<u32, MapError> {
        let n = self.core.len();
        let b = self.boundary.len();
        let total = n + b;
        let mut v_img: Vec<u32> = (0..total as u32).collect();
        let mut e_img: Vec<u32> = (0..total as u32).collect();
        for p in 0..n as u32 {
            v_img[p as usize] = self.core.v.apply(p);
            e_img[p as usize] = self.core.e.apply(p);
        }
        for (i, &bp) in self.boundary.iter().enumerate() {
            let fresh = (n + i) as u32;
            e_img[bp as usize] = fresh;
            e_img[fresh as usize] = bp;
        }
        let completed = MapCore::from_perms(
            (0..total as u32).map(Dart).collect(),
            Permutation::from_images(v_img).expect("completion preserves bijectivity"),
            Permutation::from_images(e_img).expect("completion preserves bijectivity"),
        );
        completed.genus()
    }

    /// Cycle counts `(c(v), c(e), c(f))` of the boundary-completed map.
    pub fn completed_cycle_counts(&self) -> (usize, usize, usize) {
        let n = self.core.len();
        let b = self.boundary.len();
        let total = n + b;
        let mut v_img: Vec<u32> = (0..total as u32).collect();
        let mut e_img: Vec<u32> = (0..total as u32).collect();
        for p in 0..n as u32 {
            v_img[p as usize] = self.core.v.apply(p);
            e_img[p as usize] = self.core.e.apply(p);
        }
        for (i, &bp) in self.boundary.iter().enumerate() {
            let fresh = (n + i) as u32;
            e_img[bp as usize] = fresh;
            e_img[fresh as usize] = bp;
        }
        let v = Permutation::from_images(v_img).unwrap();
        let e = Permutation::from_images(e_img).unwrap();
        let f = v.inverse().compose(&e);
        (v.cycle_count(), e.cycle_count(), f.cycle_count())
    }

    pub fn underlying_graph(&self) -> UndirectedGraph {
        self.core.underlying_graph_labeled().0
    }

    pub fn underlying_graph_labeled(&self) -> (UndirectedGraph, Vec<(Dart, Dart)>) {
        self.core.underlying_graph_labeled()
    }

    /// For closed maps: true when no edge except the outgoing root edge is a
    /// bridge of the underlying graph.
    pub fn is_bridgeless(&self) -> Result<bool, MapError> {
        if !self.is_closed() {
            return Err(MapError::NotClosed);
        }
        let (graph, labels) = self.underlying_graph_labeled();
        let root = self.root();
        let bridges = graph.bridges()?;
        Ok(bridges
            .into_iter()
            .all(|id| labels[id].0 == root || labels[id].1 == root))
    }

    /// Canonical relabeling: breadth-first from the root, following `v` then
    /// `e`, darts renamed `0, 1, 2, …` in first-visit order. Rooted maps are
    /// rigid, so two maps are isomorphic exactly when their canonical forms
    /// are equal.
    pub fn canonicalize(&self) -> RootedTrivalentMap {
        let n = self.core.len();
        let mut new_id = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = std::collections::VecDeque::new();
        new_id[self.root as usize] = 0;
        order.push(self.root);
        queue.push_back(self.root);
        while let Some(p) = queue.pop_front() {
            for q in [self.core.v.apply(p), self.core.e.apply(p)] {
                if new_id[q as usize] == u32::MAX {
                    new_id[q as usize] = order.len() as u32;
                    order.push(q);
                    queue.push_back(q);
                }
            }
        }
        let v_img: Vec<u32> = order.iter().map(|&p| new_id[self.core.v.apply(p) as usize]).collect();
        let e_img: Vec<u32> = order.iter().map(|&p| new_id[self.core.e.apply(p) as usize]).collect();
        let core = MapCore::from_perms(
            (0..n as u32).map(Dart).collect(),
            Permutation::from_images(v_img).expect("relabeling preserves bijectivity"),
            Permutation::from_images(e_img).expect("relabeling preserves bijectivity"),
        );
        RootedTrivalentMap {
            core,
            root: 0,
            boundary: self.boundary.iter().map(|&p| new_id[p as usize]).collect(),
        }
    }

    /// Root- and boundary-preserving isomorphism, decided via canonical forms.
    pub fn rooted_isomorphic(&self, other: &RootedTrivalentMap) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// Deletes the root dart and the trivalent vertex it hangs off, gluing
    /// the two freed partner darts into one edge. The returned classical map
    /// has one fewer trivalent vertex; the freed partner on the parameter /
    /// argument side is reported as the classical root dart.
    pub fn smooth_root(&self) -> Result<ClassicalRootedMap, MapError> {
        if !self.is_closed() {
            return Err(MapError::NotClosed);
        }
        if self.trivalent_vertex_count() < 2 {
            return Err(MapError::SmoothTooSmall);
        }
        let r = self.root;
        let x = self.core.e.apply(r);
        let a = self.core.v.apply(x);
        let f = self.core.v.apply(a);
        let pa = self.core.e.apply(a);
        let pf = self.core.e.apply(f);
        debug_assert!(pa != f && pf != a, "only the 1-vertex map pairs its two free ports");
        let removed = [r, x, a, f];
        let keep: Vec<u32> = (0..self.core.len() as u32).filter(|p| !removed.contains(p)).collect();
        let rank = |p: u32| keep.binary_search(&p).expect("kept dart") as u32;
        let mut v_img = Vec::with_capacity(keep.len());
        let mut e_img = Vec::with_capacity(keep.len());
        for &p in &keep {
            v_img.push(rank(self.core.v.apply(p)));
            let q = self.core.e.apply(p);
            let q = if p == pa {
                pf
            } else if p == pf {
                pa
            } else {
                q
            };
            e_img.push(rank(q));
        }
        let darts: Vec<Dart> = keep.iter().map(|&p| self.core.dart(p)).collect();
        let core = MapCore::from_perms(
            darts,
            Permutation::from_images(v_img)?,
            Permutation::from_images(e_img)?,
        );
        let map = ClassicalMap::validate(core)?;
        Ok(ClassicalRootedMap {
            root: self.core.dart(pa),
            map,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(ids: &[u32]) -> Vec<Dart> {
        ids.iter().copied().map(Dart).collect()
    }

    /// The map of λx[x]: root dart 0, vertex darts 1 (root port), 2 (parameter),
    /// 3 (body); spec'd as darts r,a,b,c with v=(a b c), e=(r a)(b c).
    fn identity_map() -> RootedTrivalentMap {
        RootedTrivalentMap::from_cycles(
            d(&[0, 1, 2, 3]),
            &[d(&[1, 2, 3]), d(&[0])],
            &[d(&[0, 1]), d(&[2, 3])],
            Dart(0),
            vec![],
        )
        .unwrap()
    }

    fn trivial_map() -> RootedTrivalentMap {
        RootedTrivalentMap::from_cycles(d(&[0]), &[d(&[0])], &[d(&[0])], Dart(0), vec![Dart(0)]).unwrap()
    }

    /// Figure-style 18-dart planar map used as the classical golden.
    fn planar_18() -> ClassicalMap {
        ClassicalMap::from_cycles(
            d(&(1..=18).collect::<Vec<_>>()),
            &[
                d(&[1, 2, 3]),
                d(&[4, 5, 6]),
                d(&[7, 8]),
                d(&[9, 10, 11]),
                d(&[12, 13, 14]),
                d(&[15, 16, 17, 18]),
            ],
            &[
                d(&[1, 16]),
                d(&[2, 14]),
                d(&[3, 4]),
                d(&[5, 13]),
                d(&[6, 7]),
                d(&[8, 9]),
                d(&[10, 12]),
                d(&[11, 15]),
                d(&[17, 18]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn face_permutation_of_planar_18() {
        let m = planar_18();
        assert_eq!(
            m.face_cycles(),
            vec![
                d(&[1, 15, 10, 14]),
                d(&[2, 13, 4]),
                d(&[3, 6, 8, 11, 18, 16]),
                d(&[5, 12, 9, 7]),
                d(&[17]),
            ]
        );
        assert_eq!(m.vertex_count(), 6);
        assert_eq!(m.edge_count(), 9);
        assert_eq!(m.face_count(), 5);
        assert_eq!(m.genus().unwrap(), 0);
        assert!(!m.is_trivalent());
    }

    #[test]
    fn face_permutation_identity_cases() {
        // single-dart map with v = e = id: f = id
        let t = trivial_map();
        assert_eq!(t.face_cycles(), vec![d(&[0])]);
        // map of λx[x] with darts r,a,b,c = 0,1,2,3: f = (r c a)(b)
        let i = identity_map();
        assert_eq!(i.face_cycles(), vec![d(&[0, 3, 1]), d(&[2])]);
    }

    #[test]
    fn trivial_map_genus_and_counts() {
        let t = trivial_map();
        assert_eq!(t.genus().unwrap(), 0);
        assert_eq!(t.completed_cycle_counts(), (2, 1, 1));
        assert_eq!(t.trivalent_vertex_count(), 0);
    }

    #[test]
    fn identity_map_shape() {
        let i = identity_map();
        assert_eq!(i.genus().unwrap(), 0);
        assert_eq!(i.trivalent_vertex_count(), 1);
        let g = i.underlying_graph();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        let loops = g.edges().iter().filter(|&&(u, v)| u == v).count();
        assert_eq!(loops, 1);
        assert!(i.is_bridgeless().unwrap());
    }

    #[test]
    fn validation_rejects_bad_maps() {
        // v of order 2 at a vertex
        assert!(RootedTrivalentMap::from_cycles(
            d(&[0, 1, 2]),
            &[d(&[1, 2]), d(&[0])],
            &[d(&[0, 1]), d(&[2])],
            Dart(0),
            vec![Dart(2)],
        )
        .is_err());
        // boundary not matching the fixed points of e
        assert!(RootedTrivalentMap::from_cycles(
            d(&[0, 1, 2, 3]),
            &[d(&[1, 2, 3]), d(&[0])],
            &[d(&[0, 1]), d(&[2, 3])],
            Dart(0),
            vec![Dart(2)],
        )
        .is_err());
        // disconnected: two trivial components cannot even be expressed with
        // one root, but a v-fixed non-root dart is caught
        assert!(RootedTrivalentMap::from_cycles(
            d(&[0, 1]),
            &[d(&[0]), d(&[1])],
            &[d(&[0, 1])],
            Dart(0),
            vec![],
        )
        .is_err());
        // classical: e with a fixed point
        assert!(ClassicalMap::from_cycles(d(&[0, 1, 2]), &[d(&[0, 1, 2])], &[d(&[0, 1]), d(&[2])]).is_err());
    }

    #[test]
    fn canonicalization_is_idempotent_and_label_invariant() {
        let i = identity_map();
        let relabeled = RootedTrivalentMap::from_cycles(
            d(&[10, 20, 30, 40]),
            &[d(&[20, 30, 40]), d(&[10])],
            &[d(&[10, 20]), d(&[30, 40])],
            Dart(10),
            vec![],
        )
        .unwrap();
        assert!(i.rooted_isomorphic(&relabeled));
        let c = i.canonicalize();
        assert_eq!(c, c.canonicalize());
    }

    #[test]
    fn smooth_root_of_identity_is_an_error() {
        assert!(matches!(identity_map().smooth_root(), Err(MapError::SmoothTooSmall)));
        assert!(matches!(trivial_map().smooth_root(), Err(MapError::SmoothTooSmall)));
    }
}
