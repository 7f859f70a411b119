//! Clutters (simple hypergraphs), their stable sets and vertex covers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{full_mask, VertexSet, MAX_VERTICES};

/// A vertex count together with an antichain of nonempty edges.
///
/// Edges are kept in canonical (lexicographic) order so that two clutters
/// with the same edge family compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    n: usize,
    edges: Vec<VertexSet>,
    /// `incident[v - 1]` holds `e \ {v}` for every edge `e` containing `v`.
    incident: Vec<Vec<u64>>,
}

/// A structure obtained from a parent by deleting or relabelling vertices.
///
/// `parent[i]` is the parent vertex that vertex `i + 1` of `value` came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derived<T> {
    pub value: T,
    pub parent: Vec<usize>,
}

impl<T> Derived<T> {
    pub fn into_inner(self) -> T {
        self.value
    }
}

impl Clutter {
    /// Validates the antichain condition and stores the edges canonically.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        for e in &edges {
            if e.ambient_size() != n {
                return Err(Error::AmbientMismatch { left: n, right: e.ambient_size() });
            }
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
        }
        let mut edges = edges;
        edges.sort();
        for (i, a) in edges.iter().enumerate() {
            for (j, b) in edges.iter().enumerate() {
                if i != j && a.bits() & !b.bits() == 0 && (a != b || i < j) {
                    return Err(Error::NotAntichain { smaller: a.to_string(), larger: b.to_string() });
                }
            }
        }
        Ok(Self::from_sorted_unchecked(n, edges))
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<VertexSet>) -> Self {
        let mut incident = vec![Vec::new(); n];
        for e in &edges {
            for v in e {
                incident[v - 1].push(e.bits() & !(1u64 << (v - 1)));
            }
        }
        Clutter { n, edges, incident }
    }

    /// Builds a clutter from 1-based index lists.
    pub fn from_edge_lists<E, I>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let edges = edges
            .into_iter()
            .map(|e| VertexSet::from_vertices(n, e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }

    /// Clutter with no edges.
    pub fn discrete(n: usize) -> Self {
        Self::from_sorted_unchecked(n, Vec::new())
    }

    /// Keeps only the inclusion-minimal sets of `sets`.
    pub fn minimal_sets(n: usize, sets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        sets.sort_by_key(|s| (s.len(), *s));
        sets.dedup();
        let mut kept: Vec<VertexSet> = Vec::new();
        for s in sets {
            if !kept.iter().any(|k| k.bits() & !s.bits() == 0) {
                kept.push(s);
            }
        }
        Self::new(n, kept)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// True when every edge has two vertices.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    /// True when every edge is a single vertex, i.e. the edge ideal is a prime
    /// generated by variables.
    pub fn is_prime(&self) -> bool {
        !self.edges.is_empty() && self.edges.iter().all(|e| e.len() == 1)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        let covered = self.edges.iter().fold(0u64, |acc, e| acc | e.bits());
        VertexSet::from_bits(self.n, !covered & full_mask(self.n))
    }

    fn check_ambient(&self, a: &VertexSet) -> Result<()> {
        if a.ambient_size() != self.n {
            Err(Error::AmbientMismatch { left: self.n, right: a.ambient_size() })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub(crate) fn stable_bits(&self, a: u64) -> bool {
        self.edges.iter().all(|e| e.bits() & !a != 0)
    }

    /// `a ∪ {v}` is stable, given that `a` is stable and `v ∉ a`.
    #[inline]
    pub(crate) fn can_add(&self, a: u64, v: usize) -> bool {
        self.incident[v - 1].iter().all(|&m| m & !a != 0)
    }

    #[inline]
    pub(crate) fn is_cover_bits(&self, c: u64) -> bool {
        self.edges.iter().all(|e| e.bits() & c != 0)
    }

    /// No edge of the clutter is contained in `a`.
    pub fn is_stable(&self, a: &VertexSet) -> Result<bool> {
        self.check_ambient(a)?;
        Ok(self.stable_bits(a.bits()))
    }

    /// `N(a)`: the vertices `t` such that `a ∪ {t}` contains an edge.
    pub fn neighbor_set(&self, a: &VertexSet) -> Result<VertexSet> {
        if !self.is_stable(a)? {
            return Err(Error::NotStable(a.to_string()));
        }
        Ok(VertexSet::from_bits(self.n, self.neighbor_bits(a.bits())))
    }

    pub(crate) fn neighbor_bits(&self, a: u64) -> u64 {
        let mut out = 0u64;
        for e in &self.edges {
            let rest = e.bits() & !a;
            if rest.count_ones() == 1 {
                out |= rest;
            }
        }
        out
    }

    pub fn is_vertex_cover(&self, c: &VertexSet) -> Result<bool> {
        self.check_ambient(c)?;
        Ok(self.is_cover_bits(c.bits()))
    }

    /// A cover is minimal when each of its vertices is the only one hitting
    /// some edge; dropping single vertices suffices because covers are
    /// closed upwards.
    pub fn is_minimal_vertex_cover(&self, c: &VertexSet) -> Result<bool> {
        self.check_ambient(c)?;
        Ok(self.is_minimal_cover_bits(c.bits()))
    }

    pub(crate) fn is_minimal_cover_bits(&self, c: u64) -> bool {
        if !self.is_cover_bits(c) {
            return false;
        }
        let mut private = 0u64;
        for e in &self.edges {
            let hit = e.bits() & c;
            if hit.count_ones() == 1 {
                private |= hit;
            }
        }
        private == c
    }

    /// Calls `f` on every stable set, in lexicographic order of member lists.
    pub fn for_each_stable_set(&self, mut f: impl FnMut(VertexSet)) {
        fn rec(c: &Clutter, a: u64, next: usize, f: &mut dyn FnMut(VertexSet)) {
            f(VertexSet::from_bits(c.n, a));
            for v in next..=c.n {
                if c.can_add(a, v) {
                    rec(c, a | (1 << (v - 1)), v + 1, f);
                }
            }
        }
        rec(self, 0, 1, &mut f);
    }

    /// Stable sets of exactly `k` vertices, in lexicographic order.
    fn stable_sets_of_size(&self, k: usize, f: &mut dyn FnMut(u64) -> bool) -> bool {
        fn rec(c: &Clutter, a: u64, len: usize, k: usize, next: usize, f: &mut dyn FnMut(u64) -> bool) -> bool {
            if len == k {
                return f(a);
            }
            if c.n + 1 - next < k - len {
                return true;
            }
            for v in next..=c.n {
                if c.can_add(a, v) && !rec(c, a | (1 << (v - 1)), len + 1, k, v + 1, f) {
                    return false;
                }
            }
            true
        }
        rec(self, 0, 0, k, 1, f)
    }

    /// The inclusion-maximal stable sets, canonically sorted.
    pub fn maximal_stable_sets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        // Include/exclude recursion; a vertex that is skipped while still
        // addable must be blocked by a later choice, which is checked at the
        // leaf.
        fn rec(c: &Clutter, v: usize, a: u64, skipped: u64, out: &mut Vec<VertexSet>) {
            if v > c.n {
                let ok = (1..=c.n).all(|u| skipped & (1 << (u - 1)) == 0 || !c.can_add(a, u));
                if ok {
                    out.push(VertexSet::from_bits(c.n, a));
                }
                return;
            }
            let bit = 1u64 << (v - 1);
            // A skipped vertex whose blocking edges can no longer be completed
            // by the undecided vertices `v..` makes the branch hopeless.
            let undecided = !(bit.wrapping_sub(1)) & full_mask(c.n);
            let hopeless = |a: u64, skipped: u64| {
                let mut s = skipped;
                while s != 0 {
                    let u = s.trailing_zeros() as usize + 1;
                    s &= s - 1;
                    if c.incident[u - 1].iter().all(|&m| m & !(a | undecided) != 0) {
                        return true;
                    }
                }
                false
            };
            if c.can_add(a, v) {
                rec(c, v + 1, a | bit, skipped, out);
                if !hopeless(a, skipped | bit) {
                    rec(c, v + 1, a, skipped | bit, out);
                }
            } else {
                rec(c, v + 1, a, skipped, out);
            }
        }
        rec(self, 1, 0, 0, &mut out);
        out.sort();
        out
    }

    /// Stable sets `A` whose neighbour set `N(A)` is a minimal vertex cover.
    pub fn family_a(&self) -> Result<Vec<VertexSet>> {
        if self.is_discrete() {
            return Err(Error::ZeroIdeal);
        }
        let mut out = Vec::new();
        self.for_each_stable_set(|a| {
            if self.is_minimal_cover_bits(self.neighbor_bits(a.bits())) {
                out.push(a);
            }
        });
        out.sort();
        Ok(out)
    }

    /// The lexicographically smallest member of `family_a` of least size.
    pub fn v_number_witness(&self) -> Result<VertexSet> {
        if self.is_discrete() {
            return Err(Error::ZeroIdeal);
        }
        for k in 0..=self.n {
            let mut found = None;
            self.stable_sets_of_size(k, &mut |a| {
                if self.is_minimal_cover_bits(self.neighbor_bits(a)) {
                    found = Some(a);
                    false
                } else {
                    true
                }
            });
            if let Some(a) = found {
                return Ok(VertexSet::from_bits(self.n, a));
            }
        }
        unreachable!("maximal stable sets always belong to family A")
    }

    /// The v-number of the edge ideal, as `min |A|` over `family_a`.
    pub fn v_number(&self) -> Result<usize> {
        self.v_number_witness().map(|a| a.len())
    }

    /// β0: the size of a largest stable set.
    pub fn independence_number(&self) -> usize {
        let mut best = 0;
        fn rec(c: &Clutter, a: u64, len: usize, next: usize, best: &mut usize) {
            if len > *best {
                *best = len;
            }
            if len + (c.n + 1 - next) <= *best {
                return;
            }
            for v in next..=c.n {
                if len + (c.n + 1 - v) <= *best {
                    return;
                }
                if c.can_add(a, v) {
                    rec(c, a | (1 << (v - 1)), len + 1, v + 1, best);
                }
            }
        }
        rec(self, 0, 0, 1, &mut best);
        best
    }

    /// α0: the size of a smallest vertex cover, found by branching on an
    /// uncovered edge.
    pub fn cover_number(&self) -> usize {
        fn rec(c: &Clutter, cover: u64, len: usize, best: &mut usize) {
            if len >= *best {
                return;
            }
            match c.edges.iter().find(|e| e.bits() & cover == 0) {
                None => *best = len,
                Some(e) => {
                    for v in e {
                        rec(c, cover | (1 << (v - 1)), len + 1, best);
                    }
                }
            }
        }
        let mut best = self.n + 1;
        rec(self, 0, 0, &mut best);
        best.min(self.n)
    }

    /// i(C): the least size of a maximal stable set.
    pub fn independent_domination(&self) -> usize {
        self.maximal_stable_sets().iter().map(|a| a.len()).min().unwrap_or(0)
    }

    pub fn is_well_covered(&self) -> bool {
        let sets = self.maximal_stable_sets();
        sets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Well-covered, and still well-covered after deleting any one vertex.
    pub fn is_one_well_covered(&self) -> bool {
        self.is_well_covered()
            && (1..=self.n).all(|v| self.delete_vertex(v).map(|d| d.value.is_well_covered()).unwrap_or(false))
    }

    /// The clutter of minimal vertex covers.
    pub fn blocker(&self) -> Result<Clutter> {
        if self.is_discrete() {
            return Err(Error::ZeroIdeal);
        }
        let full = VertexSet::full(self.n);
        let mut covers: Vec<VertexSet> = self
            .maximal_stable_sets()
            .into_iter()
            .map(|a| VertexSet::from_bits(self.n, full.bits() & !a.bits()))
            .collect();
        covers.sort();
        Ok(Self::from_sorted_unchecked(self.n, covers))
    }

    /// Minimal vertex covers, found directly by filtering all subsets.
    /// Exponential in the vertex count; used as a cross-check.
    pub fn minimal_vertex_covers_brute_force(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = (0..=full_mask(self.n))
            .filter(|&c| self.is_minimal_cover_bits(c))
            .map(|c| VertexSet::from_bits(self.n, c))
            .collect();
        out.sort();
        out
    }

    /// Induced sub-clutter on `keep`: the vertices of `keep` (renumbered
    /// densely) and the edges contained in `keep`.
    pub fn restrict(&self, keep: &VertexSet) -> Result<Derived<Clutter>> {
        self.check_ambient(keep)?;
        let parent = keep.to_vec();
        let mut index = vec![0usize; self.n + 1];
        for (i, &p) in parent.iter().enumerate() {
            index[p] = i + 1;
        }
        let k = parent.len();
        let mut edges: Vec<VertexSet> = self
            .edges
            .iter()
            .filter(|e| e.bits() & !keep.bits() == 0)
            .map(|e| VertexSet::from_bits(k, e.iter().fold(0u64, |m, v| m | 1 << (index[v] - 1))))
            .collect();
        edges.sort();
        Ok(Derived { value: Self::from_sorted_unchecked(k, edges), parent })
    }

    /// `C \ v`: drop the vertex and every edge through it.
    pub fn delete_vertex(&self, v: usize) -> Result<Derived<Clutter>> {
        let keep = VertexSet::full(self.n);
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, ambient: self.n });
        }
        self.restrict(&keep.without(v))
    }

    /// `C \ e`: same vertices, one edge fewer.
    pub fn delete_edge(&self, e: &VertexSet) -> Result<Clutter> {
        self.check_ambient(e)?;
        if !self.edges.contains(e) {
            return Err(Error::EdgeAbsent(e.to_string()));
        }
        let edges = self.edges.iter().copied().filter(|x| x != e).collect();
        Ok(Self::from_sorted_unchecked(self.n, edges))
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Clutter) -> Result<Clutter> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut edges: Vec<VertexSet> = self.edges.iter().map(|e| e.widen(n)).collect();
        edges.extend(other.edges.iter().map(|e| VertexSet::from_bits(n, e.bits() << self.n)));
        edges.sort();
        Ok(Self::from_sorted_unchecked(n, edges))
    }

    /// Same edges on a larger vertex set; the new vertices are isolated.
    pub fn add_isolated(&self, extra: usize) -> Result<Clutter> {
        let n = self.n + extra;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Self::from_sorted_unchecked(n, self.edges.iter().map(|e| e.widen(n)).collect()))
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|e| e.to_vec()).collect()
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Clutter").field("n", &self.n).field("edges", &self.edge_lists()).finish()
    }
}

/// Plain serialisable form of a clutter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClutterData {
    pub vertex_count: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&Clutter> for ClutterData {
    fn from(c: &Clutter) -> Self {
        ClutterData { vertex_count: c.vertex_count(), edges: c.edge_lists() }
    }
}
