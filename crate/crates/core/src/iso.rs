//! Invariant fingerprints, isomorphism testing, automorphism groups and
//! recovery of the point-graph from a switched graph.
//!
//! The search is individualization–refinement: colour classes are refined
//! to an equitable partition, one vertex of a target cell is individualized,
//! and the process repeats until the partition is discrete. A fixed first
//! path through this tree is compared with backtracking paths (in the same
//! or another graph); refinement traces prune branches that cannot match,
//! and every candidate bijection is verified edge by edge.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, VecDeque};
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::cliques::{cliques_per_vertex, maximum_cliques, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{srg_check, Graph, SrgParams};
use crate::switching::{VertexType, VertexTyping};

/// Default vertex bound for automorphism computations.
pub const DEFAULT_AUT_BOUND: usize = 150;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_budget: u64,
    pub max_vertices: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            node_budget: DEFAULT_NODE_BUDGET,
            max_vertices: DEFAULT_AUT_BOUND,
        }
    }
}

/// Isomorphism invariants. Equal for isomorphic graphs; unequal values
/// prove non-isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub v: usize,
    pub edges: usize,
    pub srg: Option<SrgParams>,
    /// Number of maximum cliques.
    pub n_cliques: u64,
    pub clique_size: usize,
    /// Degree → number of vertices.
    pub degree_histogram: BTreeMap<usize, u64>,
    /// Maximum cliques through a vertex → number of vertices.
    pub cliques_per_vertex_histogram: BTreeMap<u64, u64>,
}

pub fn fingerprint(g: &Graph) -> Fingerprint {
    let cliques = maximum_cliques(g);
    let per = cliques_per_vertex(g.v(), &cliques);
    let mut degree_histogram = BTreeMap::new();
    for u in 0..g.v() {
        *degree_histogram.entry(g.degree(u)).or_insert(0) += 1;
    }
    let mut cliques_per_vertex_histogram = BTreeMap::new();
    for &c in &per {
        *cliques_per_vertex_histogram.entry(c).or_insert(0) += 1;
    }
    Fingerprint {
        v: g.v(),
        edges: g.edge_count(),
        srg: srg_check(g).ok(),
        n_cliques: cliques.len() as u64,
        clique_size: cliques.first().map_or(0, Vec::len),
        degree_histogram,
        cliques_per_vertex_histogram,
    }
}

/// Ordered partition of the vertex set.
#[derive(Debug, Clone)]
struct Partition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl Partition {
    /// Cells are the classes of `key`, ordered by key value.
    fn from_keys<K: Ord + Clone>(keys: &[K]) -> Partition {
        let mut classes: BTreeMap<K, Vec<usize>> = BTreeMap::new();
        for (u, k) in keys.iter().enumerate() {
            classes.entry(k.clone()).or_default().push(u);
        }
        let cells: Vec<Vec<usize>> = classes.into_values().collect();
        let mut cell_of = vec![0; keys.len()];
        for (c, cell) in cells.iter().enumerate() {
            for &u in cell {
                cell_of[u] = c;
            }
        }
        Partition { cells, cell_of }
    }

    /// The first smallest non-singleton cell.
    fn target(&self) -> Option<usize> {
        (0..self.cells.len())
            .filter(|&c| self.cells[c].len() > 1)
            .min_by_key(|&c| (self.cells[c].len(), c))
    }

    /// Moves `v` out of cell `c` into a new singleton cell at the end and
    /// returns the new cell's index.
    fn individualize(&mut self, c: usize, v: usize) -> usize {
        self.cells[c].retain(|&u| u != v);
        self.cells.push(vec![v]);
        let k = self.cells.len() - 1;
        self.cell_of[v] = k;
        k
    }

    /// Refines to the coarsest equitable partition below `self`, splitting
    /// against the cells in `queue`. Returns a hash of the split events,
    /// which depends only on the isomorphism class of (graph, partition).
    fn refine(&mut self, g: &Graph, queue: impl IntoIterator<Item = usize>) -> u64 {
        let n = self.cell_of.len();
        let mut queue: VecDeque<usize> = queue.into_iter().collect();
        let mut queued = vec![false; n];
        for &c in &queue {
            queued[c] = true;
        }
        let mut h = DefaultHasher::new();
        while let Some(w) = queue.pop_front() {
            queued[w] = false;
            let wset = BitSet::from_indices(n, self.cells[w].iter().copied());
            let ncells = self.cells.len();
            for c in 0..ncells {
                if self.cells[c].len() < 2 {
                    continue;
                }
                let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for &u in &self.cells[c] {
                    groups.entry(g.neighbors(u).intersection_count(&wset)).or_default().push(u);
                }
                if groups.len() < 2 {
                    continue;
                }
                (w, c).hash(&mut h);
                let mut frags = groups.into_iter();
                let (k0, first) = frags.next().expect("two groups");
                (k0, first.len()).hash(&mut h);
                self.cells[c] = first;
                if !queued[c] {
                    queued[c] = true;
                    queue.push_back(c);
                }
                for (k, frag) in frags {
                    (k, frag.len()).hash(&mut h);
                    let idx = self.cells.len();
                    for &u in &frag {
                        self.cell_of[u] = idx;
                    }
                    self.cells.push(frag);
                    queued[idx] = true;
                    queue.push_back(idx);
                }
            }
        }
        self.cells.len().hash(&mut h);
        h.finish()
    }
}

/// Vertex colouring used before any individualization: degree and the
/// number of maximum cliques through the vertex, plus optional extra colours.
fn initial_keys(g: &Graph, extra: Option<&[u64]>) -> Vec<(usize, u64, u64)> {
    let per = cliques_per_vertex(g.v(), &maximum_cliques(g));
    (0..g.v())
        .map(|u| (g.degree(u), per[u], extra.map_or(0, |e| e[u])))
        .collect()
}

fn initial_partition(g: &Graph, keys: &[(usize, u64, u64)]) -> (Partition, u64) {
    let mut p = Partition::from_keys(keys);
    let all = 0..p.cells.len();
    let t = p.refine(g, all);
    (p, t)
}

struct Level {
    part: Partition,
    trace: u64,
    /// Target cell and the vertex individualized on the first path.
    target: usize,
    chosen: usize,
}

/// The first path of the search tree: always individualize the first
/// vertex of the target cell.
struct FirstPath {
    levels: Vec<Level>,
    leaf: Partition,
    leaf_trace: u64,
}

impl FirstPath {
    fn build(g: &Graph, mut part: Partition, mut trace: u64) -> FirstPath {
        let mut levels = Vec::new();
        while let Some(target) = part.target() {
            let chosen = part.cells[target][0];
            let mut next = part.clone();
            let k = next.individualize(target, chosen);
            let t = next.refine(g, [k]);
            levels.push(Level {
                part,
                trace,
                target,
                chosen,
            });
            part = next;
            trace = t;
        }
        FirstPath {
            levels,
            leaf: part,
            leaf_trace: trace,
        }
    }

    fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.chosen).collect()
    }

    /// The trace expected after individualizing at `level`.
    fn trace_after(&self, level: usize) -> u64 {
        self.levels.get(level + 1).map_or(self.leaf_trace, |l| l.trace)
    }

    fn cells_after(&self, level: usize) -> usize {
        self.levels.get(level + 1).map_or(self.leaf.cells.len(), |l| l.part.cells.len())
    }
}

struct Search<'a> {
    left: &'a Graph,
    right: &'a Graph,
    path: &'a FirstPath,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// Individualizes `w` in `part` (a right-side partition matching level
    /// `level` of the first path) and continues down; returns a verified
    /// bijection left → right if one is found below.
    fn try_vertex(&mut self, part: &Partition, level: usize, w: usize) -> Result<Option<Vec<usize>>> {
        self.tick()?;
        let target = self.path.levels[level].target;
        let mut child = part.clone();
        let k = child.individualize(target, w);
        let t = child.refine(self.right, [k]);
        if t != self.path.trace_after(level) || child.cells.len() != self.path.cells_after(level) {
            return Ok(None);
        }
        self.descend(&child, level + 1)
    }

    fn descend(&mut self, part: &Partition, level: usize) -> Result<Option<Vec<usize>>> {
        if level == self.path.levels.len() {
            let mut perm = vec![0; part.cell_of.len()];
            for (a, b) in self.path.leaf.cells.iter().zip(&part.cells) {
                perm[a[0]] = b[0];
            }
            return Ok(self.left.is_isomorphism_to(self.right, &perm).then_some(perm));
        }
        let target = self.path.levels[level].target;
        if part.cells[target].len() != self.path.levels[level].part.cells[target].len() {
            return Ok(None);
        }
        for &w in &part.cells[target] {
            if let Some(p) = self.try_vertex(part, level, w)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }
}

/// An isomorphism `g1 → g2` (vertex `i` of `g1` maps to `perm[i]`), or
/// `None` when none exists. Any returned bijection has been checked edge by
/// edge.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    is_isomorphic_with(g1, g2, DEFAULT_NODE_BUDGET)
}

pub fn is_isomorphic_with(g1: &Graph, g2: &Graph, budget: u64) -> Result<Option<Vec<usize>>> {
    if g1.v() != g2.v() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let (k1, k2) = (initial_keys(g1, None), initial_keys(g2, None));
    let (mut s1, mut s2) = (k1.clone(), k2.clone());
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(None);
    }
    let (p1, t1) = initial_partition(g1, &k1);
    let (p2, t2) = initial_partition(g2, &k2);
    if t1 != t2 || p1.cells.len() != p2.cells.len() {
        return Ok(None);
    }
    let path = FirstPath::build(g1, p1, t1);
    let mut search = Search {
        left: g1,
        right: g2,
        path: &path,
        nodes: 0,
        budget,
    };
    search.descend(&p2, 0)
}

/// A permutation group given by a base and, for each base point, a
/// transversal of its orbit under the pointwise stabilizer of the earlier
/// base points.
#[derive(Debug, Clone)]
pub struct AutGroup {
    n: usize,
    base: Vec<usize>,
    generators: Vec<Vec<usize>>,
    /// `transversals[i]`: (image of `base[i]`, element mapping it there).
    transversals: Vec<Vec<(usize, Vec<usize>)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutReport {
    #[serde(with = "crate::bigstr")]
    pub order: BigUint,
    pub orbit_count: usize,
    pub orbits: Vec<Vec<usize>>,
    pub generators: Vec<Vec<usize>>,
    pub base: Vec<usize>,
    pub orbit_sizes_along_base: Vec<usize>,
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a ∘ b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

/// Orbit of `x` under `gens`, each point paired with an element taking
/// `x` there (breadth-first, so the result is deterministic).
fn orbit_with_transversal(n: usize, x: usize, gens: &[&Vec<usize>]) -> Vec<(usize, Vec<usize>)> {
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut out = vec![(x, (0..n).collect::<Vec<_>>())];
    let mut k = 0;
    while k < out.len() {
        let (y, t) = out[k].clone();
        for s in gens {
            let z = s[y];
            if !seen[z] {
                seen[z] = true;
                out.push((z, compose(s, &t)));
            }
        }
        k += 1;
    }
    out
}

impl AutGroup {
    pub fn order(&self) -> BigUint {
        self.transversals
            .iter()
            .fold(BigUint::from(1u32), |acc, t| acc * t.len())
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// Vertex orbits, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut root: Vec<usize> = (0..self.n).collect();
        fn find(root: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while root[r] != r {
                r = root[r];
            }
            let mut y = x;
            while root[y] != r {
                let next = root[y];
                root[y] = r;
                y = next;
            }
            r
        }
        for s in &self.generators {
            for (x, &y) in s.iter().enumerate() {
                let (a, b) = (find(&mut root, x), find(&mut root, y));
                if a != b {
                    root[a.max(b)] = a.min(b);
                }
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..self.n {
            let r = find(&mut root, x);
            classes.entry(r).or_default().push(x);
        }
        classes.into_values().collect()
    }

    pub fn report(&self) -> AutReport {
        let orbits = self.orbits();
        AutReport {
            order: self.order(),
            orbit_count: orbits.len(),
            orbits,
            generators: self.generators.clone(),
            base: self.base.clone(),
            orbit_sizes_along_base: self.transversals.iter().map(Vec::len).collect(),
        }
    }

    /// Order of the subgroup mapping `set` onto itself.
    ///
    /// Every element is uniquely `t_1 ∘ t_2 ∘ … ∘ t_m` with `t_i` from the
    /// i-th transversal, and the prefix `t_1 ∘ … ∘ t_k` already fixes the
    /// images of the first k base points. Prefixes sending a base point
    /// across the boundary of `set` are cut; surviving leaves are checked
    /// on the whole set.
    pub fn setwise_stabilizer_order(&self, set: &BitSet) -> BigUint {
        let id: Vec<usize> = (0..self.n).collect();
        let members: Vec<usize> = set.iter().collect();
        let mut count = 0u64;
        self.stab_walk(0, &id, set, &members, &mut count);
        BigUint::from(count)
    }

    fn stab_walk(&self, level: usize, prefix: &[usize], set: &BitSet, members: &[usize], count: &mut u64) {
        if level == self.base.len() {
            if members.iter().all(|&x| set.contains(prefix[x])) {
                *count += 1;
            }
            return;
        }
        let b = self.base[level];
        for (_, t) in &self.transversals[level] {
            let next = compose(prefix, t);
            if set.contains(b) == set.contains(next[b]) {
                self.stab_walk(level + 1, &next, set, members, count);
            }
        }
    }
}

/// Automorphism group of `g`, with generators, order and orbits.
pub fn automorphisms(g: &Graph) -> Result<AutGroup> {
    automorphisms_with(g, None, SearchLimits::default())
}

/// Automorphisms preserving the vertex colouring `colours` (when given).
///
/// Works up the first path from the deepest level: at level i the orbit of
/// the i-th base point under the automorphisms fixing the earlier base
/// points is grown by searching, for each unreached candidate in its
/// target cell, for an automorphism taking the base point there. The group
/// order is the product of these orbit lengths.
pub fn automorphisms_with(g: &Graph, colours: Option<&[u64]>, limits: SearchLimits) -> Result<AutGroup> {
    let n = g.v();
    if n > limits.max_vertices {
        return Err(Error::TooLarge {
            v: n,
            bound: limits.max_vertices,
        });
    }
    let keys = initial_keys(g, colours);
    let (p0, t0) = initial_partition(g, &keys);
    let path = FirstPath::build(g, p0, t0);
    let base = path.base();
    let m = base.len();
    // generators tagged with the first level whose base point they move
    let mut gens: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut search = Search {
        left: g,
        right: g,
        path: &path,
        nodes: 0,
        budget: limits.node_budget,
    };
    for i in (0..m).rev() {
        let level = &path.levels[i];
        let cell = level.part.cells[level.target].clone();
        let b = base[i];
        let mut excluded = vec![false; n];
        loop {
            let active: Vec<&Vec<usize>> = gens.iter().filter(|(l, _)| *l >= i).map(|(_, s)| s).collect();
            let orbit = orbit_with_transversal(n, b, &active);
            let mut in_orbit = vec![false; n];
            for (x, _) in &orbit {
                in_orbit[*x] = true;
            }
            let Some(&w) = cell.iter().find(|&&w| !in_orbit[w] && !excluded[w]) else {
                break;
            };
            match search.try_vertex(&level.part, i, w)? {
                Some(sigma) => gens.push((i, sigma)),
                None => {
                    for (x, _) in orbit_with_transversal(n, w, &active) {
                        excluded[x] = true;
                    }
                }
            }
        }
    }
    let transversals = (0..m)
        .map(|i| {
            let active: Vec<&Vec<usize>> = gens.iter().filter(|(l, _)| *l >= i).map(|(_, s)| s).collect();
            orbit_with_transversal(n, base[i], &active)
        })
        .collect();
    Ok(AutGroup {
        n,
        base,
        generators: gens.into_iter().map(|(_, s)| s).collect(),
        transversals,
    })
}

/// Order of the subgroup of `Aut(g)` fixing `set` setwise.
pub fn setwise_stabilizer_order(g: &Graph, set: &BitSet) -> Result<BigUint> {
    Ok(automorphisms(g)?.setwise_stabilizer_order(set))
}

/// Recovers the vertex types of a switched graph from the number of
/// maximum cliques through each vertex: exactly three distinct counts are
/// expected, and the largest belongs to type I, the smallest to type III.
pub fn recover_typing(g: &Graph) -> Result<VertexTyping> {
    let per = cliques_per_vertex(g.v(), &maximum_cliques(g));
    let mut distinct: Vec<u64> = per.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != 3 {
        return Err(Error::NotRecognizable(format!(
            "expected three classes of cliques-per-vertex counts, found {:?}",
            distinct
        )));
    }
    let types = per
        .iter()
        .map(|&c| {
            if c == distinct[2] {
                VertexType::I
            } else if c == distinct[1] {
                VertexType::II
            } else {
                VertexType::III
            }
        })
        .collect();
    Ok(VertexTyping::new(types))
}

/// Rebuilds (a copy of) the point-graph from an unlabelled switched graph by
/// recovering the vertex types and complementing every type II / type III
/// pair.
pub fn reconstruct_point_graph(g: &Graph) -> Result<Graph> {
    let typing = recover_typing(g)?;
    let ii = typing.vertices_of(VertexType::II);
    let iii = typing.vertices_of(VertexType::III);
    let mut rows = g.rows().to_vec();
    for u in ii.iter() {
        for w in iii.iter() {
            if rows[u].contains(w) {
                rows[u].remove(w);
                rows[w].remove(u);
            } else {
                rows[u].insert(w);
                rows[w].insert(u);
            }
        }
    }
    Ok(Graph::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::point_graph;
    use crate::quadric::{standard_quadric, Family, Quadric};
    use crate::switching::{classify_vertices, gamma0_involution, gm_switch, TypedPartition};
    use proptest::prelude::*;

    fn switched(f: Family, n: usize, s: i32) -> (Quadric, TypedPartition, Graph, Graph) {
        let q = standard_quadric(f, n).unwrap();
        let part = classify_vertices(&q, &q.default_alpha(s).unwrap()).unwrap();
        let g = point_graph(&q);
        let gs = gm_switch(&g, &part.typing).unwrap();
        (q, part, g, gs)
    }

    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for k in 0..n {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Oracle: automorphisms by trying every permutation.
    fn brute_aut_order(g: &Graph) -> usize {
        perms(g.v()).iter().filter(|p| g.is_isomorphism_to(g, p)).count()
    }

    fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_fn(n, |_, _| it.next().unwrap())
            })
        })
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn relabelled_copies_are_isomorphic((g, p) in arb_graph(12).prop_flat_map(|g| { let n = g.v(); (Just(g), arb_perm(n)) })) {
            let h = g.relabel(&p);
            prop_assert_eq!(fingerprint(&g), fingerprint(&h));
            let phi = is_isomorphic(&g, &h).unwrap().expect("isomorphic");
            prop_assert!(g.is_isomorphism_to(&h, &phi));
        }

        #[test]
        fn group_order_matches_brute_force(g in arb_graph(7)) {
            let grp = automorphisms(&g).unwrap();
            prop_assert_eq!(grp.order(), BigUint::from(brute_aut_order(&g)));
            for s in grp.generators() {
                prop_assert!(g.is_isomorphism_to(&g, s));
            }
        }

        #[test]
        fn iso_agrees_with_brute_force(a in arb_graph(6), b in arb_graph(6)) {
            let brute = a.v() == b.v() && perms(a.v()).iter().any(|p| a.is_isomorphism_to(&b, p));
            prop_assert_eq!(is_isomorphic(&a, &b).unwrap().is_some(), brute);
        }
    }

    #[test]
    fn rook_graph_group() {
        let q = standard_quadric(Family::Hyperbolic, 3).unwrap();
        let g = point_graph(&q);
        let grp = automorphisms(&g).unwrap();
        assert_eq!(grp.order(), BigUint::from(72u32));
        assert_eq!(brute_aut_order(&g), 72);
        assert_eq!(grp.report().orbit_count, 1);
        let all = BitSet::full(g.v());
        assert_eq!(grp.setwise_stabilizer_order(&all), BigUint::from(72u32));
        // a row of the rook's graph: stabilizer swaps nothing across rows
        let row = BitSet::from_indices(9, maximum_cliques(&g)[0].iter().copied());
        let want = perms(9)
            .iter()
            .filter(|p| g.is_isomorphism_to(&g, p) && row.iter().all(|x| row.contains(p[x])))
            .count();
        assert_eq!(grp.setwise_stabilizer_order(&row), BigUint::from(want));
    }

    #[test]
    fn fingerprints_separate_switched_graphs() {
        let (_, _, g, g1) = switched(Family::Hyperbolic, 5, 1);
        assert_eq!((fingerprint(&g).n_cliques, fingerprint(&g1).n_cliques), (30, 14));
        let (_, _, _, e1) = switched(Family::Elliptic, 7, 1);
        assert_eq!(
            fingerprint(&e1).cliques_per_vertex_histogram,
            BTreeMap::from([(45, 3), (13, 20), (5, 96)])
        );
    }

    #[test]
    fn switching_at_a_point_gives_an_isomorphic_graph() {
        let (q, part, g, g0) = switched(Family::Hyperbolic, 5, 0);
        let phi = is_isomorphic(&g, &g0).unwrap().unwrap();
        assert!(g.is_isomorphism_to(&g0, &phi));
        let inv = gamma0_involution(&q, q.point(q.indices_of(&part.alpha)[0])).unwrap();
        assert!(g.is_isomorphism_to(&g0, &inv));
        let (_, _, g, g1) = switched(Family::Hyperbolic, 5, 1);
        assert!(is_isomorphic(&g, &g1).unwrap().is_none());
    }

    #[test]
    fn hyperbolic_groups() {
        let (_, part, g, g1) = switched(Family::Hyperbolic, 5, 1);
        let full = automorphisms(&g).unwrap();
        assert_eq!(full.order(), BigUint::from(40320u32));
        let sw = automorphisms(&g1).unwrap();
        let rep = sw.report();
        assert_eq!(rep.orbit_count, 3);
        let mut orbits = rep.orbits.clone();
        orbits.sort_by_key(Vec::len);
        let by_type = |t| part.typing.vertices_of(t).iter().collect::<Vec<_>>();
        assert_eq!(orbits, vec![by_type(VertexType::I), by_type(VertexType::II), by_type(VertexType::III)]);
        let type_i = part.typing.vertices_of(VertexType::I);
        assert_eq!(full.setwise_stabilizer_order(&type_i), sw.order());
        // independent route: automorphisms of the point-graph colouring the set
        let colours: Vec<u64> = (0..g.v()).map(|u| type_i.contains(u) as u64).collect();
        let coloured = automorphisms_with(&g, Some(&colours), SearchLimits::default()).unwrap();
        assert_eq!(coloured.order(), sw.order());
    }

    #[test]
    fn classical_group_orders() {
        for (f, n, want) in [(Family::Elliptic, 5, 51840u32), (Family::Parabolic, 6, 1451520)] {
            let g = point_graph(&standard_quadric(f, n).unwrap());
            let grp = automorphisms(&g).unwrap();
            assert_eq!(grp.order(), BigUint::from(want));
            assert_eq!(grp.report().orbit_count, 1);
        }
    }

    #[test]
    fn limits_are_enforced() {
        let (_, _, g, _) = switched(Family::Hyperbolic, 5, 1);
        let tight = SearchLimits {
            node_budget: 5,
            max_vertices: 150,
        };
        assert_eq!(automorphisms_with(&g, None, tight).unwrap_err(), Error::BudgetExceeded(5));
        let small = SearchLimits {
            node_budget: 10,
            max_vertices: 10,
        };
        assert!(matches!(automorphisms_with(&g, None, small), Err(Error::TooLarge { v: 35, bound: 10 })));
    }

    #[test]
    fn reconstruction_round_trip() {
        for (f, n) in [(Family::Hyperbolic, 5), (Family::Elliptic, 7), (Family::Parabolic, 6)] {
            let (_, part, g, g1) = switched(f, n, 1);
            let bare = g1.clone().without_labels();
            let typing = recover_typing(&bare).unwrap();
            assert_eq!(typing, part.typing);
            let back = reconstruct_point_graph(&bare).unwrap();
            assert!(is_isomorphic(&back, &g).unwrap().is_some());
            assert_eq!(gm_switch(&back, &typing).unwrap(), bare);
        }
        let (_, _, g, _) = switched(Family::Hyperbolic, 5, 1);
        assert!(matches!(recover_typing(&g), Err(Error::NotRecognizable(_))));
    }
}
