//! Simple graphs: 2-uniform clutters with adjacency masks and the graph
//! calculus used by the classifiers.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;

use crate::clutter::{Clutter, Derived};
use crate::error::{Error, Result};
use crate::vertex_set::{full_mask, VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    clutter: Clutter,
    /// `adj[v - 1]`: neighbours of `v` as a mask.
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a simple graph from 1-based endpoint pairs. Loops and repeated
    /// edges are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut sets = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, ambient: n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let e = VertexSet::from_vertices(n, [a, b])?;
            if sets.contains(&e) {
                return Err(Error::DuplicateEdge(e.to_string()));
            }
            sets.push(e);
        }
        Ok(Self::from_clutter_unchecked(Clutter::new(n, sets)?))
    }

    /// Views a clutter as a graph; every edge must have two vertices.
    pub fn from_clutter(c: Clutter) -> Result<Self> {
        if let Some(e) = c.edges().iter().find(|e| e.len() != 2) {
            return Err(Error::NotAGraphEdge(e.len()));
        }
        Ok(Self::from_clutter_unchecked(c))
    }

    fn from_clutter_unchecked(clutter: Clutter) -> Self {
        let mut adj = vec![0u64; clutter.vertex_count()];
        for e in clutter.edges() {
            let mut it = e.iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        Graph { clutter, adj }
    }

    fn from_adjacency(n: usize, adj: &[u64]) -> Self {
        let mut edges = Vec::new();
        for a in 1..=n {
            let mut m = adj[a - 1] & !full_mask(a);
            while m != 0 {
                let b = m.trailing_zeros() as usize + 1;
                m &= m - 1;
                edges.push(VertexSet::from_bits(n, (1 << (a - 1)) | (1 << (b - 1))));
            }
        }
        edges.sort();
        Self::from_clutter_unchecked(Clutter::from_sorted_unchecked(n, edges))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_clutter_unchecked(Clutter::discrete(n))
    }

    pub fn complete(n: usize) -> Self {
        let adj: Vec<u64> = (0..n).map(|i| full_mask(n) & !(1 << i)).collect();
        Self::from_adjacency(n, &adj)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Self::new(n, (1..=n).map(|i| (i, i % n + 1))).expect("cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i, i + 1))).expect("path")
    }

    pub fn clutter(&self) -> &Clutter {
        &self.clutter
    }

    pub fn into_clutter(self) -> Clutter {
        self.clutter
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.clutter
            .edges()
            .iter()
            .map(|e| {
                let mut it = e.iter();
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect()
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.n() && self.adj[a - 1] & (1 << (b - 1)) != 0
    }

    fn n(&self) -> usize {
        self.clutter.vertex_count()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n() {
            Err(Error::VertexOutOfRange { vertex: v, ambient: self.n() })
        } else {
            Ok(())
        }
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits(self.n(), self.adj[v - 1]))
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        Ok(self.neighbors(v)?.with(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj: Vec<u64> = (0..n).map(|i| !self.adj[i] & full_mask(n) & !(1 << i)).collect();
        Self::from_adjacency(n, &adj)
    }

    /// Subgraph induced on `keep`, renumbered densely in increasing order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Derived<Graph>> {
        let d = self.clutter.restrict(keep)?;
        Ok(Derived { value: Self::from_clutter_unchecked(d.value), parent: d.parent })
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Derived<Graph>> {
        self.check_vertex(v)?;
        self.induced_subgraph(&VertexSet::full(self.n()).without(v))
    }

    /// `G \ e`: same vertex set, one edge fewer.
    pub fn delete_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let e = VertexSet::from_vertices(self.n(), [a, b])?;
        Ok(Self::from_clutter_unchecked(self.clutter.delete_edge(&e)?))
    }

    /// `G_v = G \ N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Derived<Graph>> {
        let closed = self.closed_neighborhood(v)?;
        self.induced_subgraph(&closed.complement())
    }

    /// `G_e = G \ (N[a] ∪ N[b])` for an edge `e = {a, b}`.
    pub fn delete_edge_neighborhoods(&self, a: usize, b: usize) -> Result<Derived<Graph>> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if !self.is_adjacent(a, b) {
            return Err(Error::EdgeAbsent(format!("{{t{a}, t{b}}}")));
        }
        let gone = self.closed_neighborhood(a)?.union(&self.closed_neighborhood(b)?)?;
        self.induced_subgraph(&gone.complement())
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        Ok(Self::from_clutter_unchecked(self.clutter.disjoint_union(&other.clutter)?))
    }

    /// Attaches a pendant vertex `u_i = s + i` to every vertex `t_i`.
    pub fn whisker_graph(&self) -> Result<Graph> {
        let n = self.n();
        let mut edges = self.edge_pairs();
        edges.extend((1..=n).map(|i| (i, n + i)));
        Graph::new(2 * n, edges)
    }

    /// γ(G): least size of a dominating set. Branches on the neighbourhood of
    /// the first undominated vertex.
    pub fn domination_number(&self) -> usize {
        let n = self.n();
        let closed: Vec<u64> = (0..n).map(|i| self.adj[i] | (1 << i)).collect();
        fn rec(closed: &[u64], full: u64, dominated: u64, len: usize, best: &mut usize) {
            if dominated == full {
                *best = (*best).min(len);
                return;
            }
            if len + 1 >= *best {
                return;
            }
            let u = (!dominated & full).trailing_zeros() as usize;
            let mut choices = closed[u];
            while choices != 0 {
                let w = choices.trailing_zeros() as usize;
                choices &= choices - 1;
                rec(closed, full, dominated | closed[w], len + 1, best);
            }
        }
        let mut best = n;
        rec(&closed, full_mask(n), 0, 0, &mut best);
        best
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edge_pairs().iter().all(|&(a, b)| self.adj[a - 1] & self.adj[b - 1] == 0)
    }

    /// Triangle-free, and adding any missing edge creates a triangle.
    pub fn is_maximal_triangle_free(&self) -> bool {
        if !self.is_triangle_free() {
            return false;
        }
        let n = self.n();
        (1..=n).all(|a| {
            ((a + 1)..=n).all(|b| self.is_adjacent(a, b) || self.adj[a - 1] & self.adj[b - 1] != 0)
        })
    }

    /// No induced `K_{1,3}`.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n()).all(|c| {
            let nb: Vec<usize> = VertexSet::from_bits(self.n(), self.adj[c]).to_vec();
            for (i, &x) in nb.iter().enumerate() {
                for (j, &y) in nb.iter().enumerate().skip(i + 1) {
                    if self.is_adjacent(x, y) {
                        continue;
                    }
                    for &z in &nb[j + 1..] {
                        if !self.is_adjacent(x, z) && !self.is_adjacent(y, z) {
                            return false;
                        }
                    }
                }
            }
            true
        })
    }

    /// Chordality via maximum cardinality search followed by a check that
    /// the reverse visiting order is a perfect elimination ordering.
    pub fn is_chordal(&self) -> bool {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut numbered = 0u64;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| numbered & (1 << v) == 0)
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .unwrap();
            numbered |= 1 << v;
            order.push(v);
            let mut m = self.adj[v] & !numbered;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                weight[w] += 1;
            }
        }
        // In visiting order, the earlier neighbours of each vertex must form
        // a clique; it is enough that they all neighbour the latest of them.
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        for (i, &v) in order.iter().enumerate() {
            let earlier: Vec<usize> = VertexSet::from_bits(n, self.adj[v])
                .iter()
                .map(|w| w - 1)
                .filter(|&w| position[w] < i)
                .collect();
            if let Some(&last) = earlier.iter().max_by_key(|&&w| position[w]) {
                for &w in &earlier {
                    if w != last && self.adj[last] & (1 << w) == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let n = self.n();
        let mut dist = vec![None; n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            let mut m = self.adj[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Greatest distance between two vertices; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.bfs(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Connected components as vertex sets, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..n {
            if seen & (1 << v) != 0 {
                continue;
            }
            let bits = self
                .bfs(v)
                .iter()
                .enumerate()
                .filter(|(_, d)| d.is_some())
                .fold(0u64, |m, (w, _)| m | (1 << w));
            seen |= bits;
            out.push(VertexSet::from_bits(n, bits));
        }
        out
    }
}

impl Deref for Graph {
    type Target = Clutter;

    fn deref(&self) -> &Clutter {
        &self.clutter
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edge_pairs()).finish()
    }
}
