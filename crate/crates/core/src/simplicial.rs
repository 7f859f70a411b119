//! Simplicial complexes stored by facets, reduced homology over ℚ and GF(2),
//! Hochster's formula for regularity, Reisner's criterion and vertex
//! decomposability.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::linalg::{rank_gf2, rank_rational, SparseColumns};
use crate::monomial::{edge_ideal, MonomialIdeal};
use crate::vertex_set::{full_mask, VertexSet};

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "GF2")]
    Gf2,
}

impl FieldTag {
    pub const ALL: [FieldTag; 2] = [FieldTag::Rationals, FieldTag::Gf2];

    pub fn name(&self) -> &'static str {
        match self {
            FieldTag::Rationals => "Q",
            FieldTag::Gf2 => "GF2",
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q" | "qq" | "rationals" | "0" => Ok(FieldTag::Rationals),
            "f2" | "gf2" | "z2" | "2" => Ok(FieldTag::Gf2),
            other => Err(Error::Precondition(format!("unknown field {other:?}"))),
        }
    }
}

/// Ranks of reduced homology, `ranks[i + 1] = dim H̃_i`, from `i = -1` up to
/// the dimension of the complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub field: FieldTag,
    pub ranks: Vec<usize>,
}

impl HomologyProfile {
    pub fn rank(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.ranks.get(k).copied()).unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// Largest `i` with `H̃_i ≠ 0`.
    pub fn top_nonzero(&self) -> Option<isize> {
        self.ranks.iter().rposition(|&r| r != 0).map(|k| k as isize - 1)
    }

    /// Alternating sum `Σ (-1)^i rank H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks.iter().enumerate().map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) }).sum()
    }
}

/// A simplicial complex on the vertex set `{1..ambient}`, given by its
/// facets. Ambient vertices that lie in no facet are non-faces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ambient: usize,
    facets: Vec<VertexSet>,
}

fn maximal_only(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept
}

impl SimplicialComplex {
    /// The complex generated by `sets`; non-maximal sets are dropped.
    pub fn from_faces(ambient: usize, sets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut bits = Vec::new();
        for s in sets {
            if s.ambient_size() != ambient {
                return Err(Error::AmbientMismatch { left: ambient, right: s.ambient_size() });
            }
            bits.push(s.bits());
        }
        Ok(Self::from_bits(ambient, bits))
    }

    fn from_bits(ambient: usize, sets: Vec<u64>) -> Self {
        let mut facets: Vec<VertexSet> =
            maximal_only(sets).into_iter().map(|b| VertexSet::from_bits(ambient, b)).collect();
        facets.sort();
        SimplicialComplex { ambient, facets }
    }

    /// The complex with no faces at all.
    pub fn void(ambient: usize) -> Self {
        SimplicialComplex { ambient, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn irrelevant(ambient: usize) -> Self {
        SimplicialComplex { ambient, facets: vec![VertexSet::empty(ambient)] }
    }

    pub fn simplex(ambient: usize) -> Self {
        SimplicialComplex { ambient, facets: vec![VertexSet::full(ambient)] }
    }

    /// Faces are the stable sets of `c`.
    pub fn independence_complex(c: &Clutter) -> Self {
        SimplicialComplex { ambient: c.vertex_count(), facets: c.maximal_stable_sets() }
    }

    /// Faces are the squarefree monomials outside `i`.
    pub fn stanley_reisner_complex(i: &MonomialIdeal) -> Result<Self> {
        if !i.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if i.is_unit() {
            return Ok(Self::void(i.ambient_size()));
        }
        Ok(Self::independence_complex(&i.to_clutter()?))
    }

    /// The ideal generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let n = self.ambient;
        if self.facets.is_empty() {
            return MonomialIdeal::unit(n);
        }
        if self.facets.iter().any(|f| f.len() == n) {
            return MonomialIdeal::zero(n);
        }
        // A set is a non-face iff it meets the complement of every facet.
        let complements = Clutter::minimal_sets(n, self.facets.iter().map(|f| f.complement()))
            .expect("complements of an antichain are nonempty");
        edge_ideal(&complements.blocker().expect("nonempty clutter"))
    }

    pub fn ambient_size(&self) -> usize {
        self.ambient
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Vertices that are faces.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::from_bits(self.ambient, self.facets.iter().fold(0, |m, f| m | f.bits()))
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, f: &VertexSet) -> bool {
        self.facets.iter().any(|g| f.bits() & !g.bits() == 0)
    }

    /// `Δ[A]`: faces contained in `a`.
    pub fn induced(&self, a: &VertexSet) -> Result<Self> {
        if a.ambient_size() != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: a.ambient_size() });
        }
        Ok(self.induced_bits(a.bits()))
    }

    fn induced_bits(&self, a: u64) -> Self {
        if self.facets.is_empty() {
            return self.clone();
        }
        Self::from_bits(self.ambient, self.facets.iter().map(|f| f.bits() & a).collect())
    }

    /// `lk(F) = {H : H ∩ F = ∅, H ∪ F ∈ Δ}`.
    pub fn link(&self, face: &VertexSet) -> Result<Self> {
        if !self.contains_face(face) {
            return Err(Error::FaceNotInComplex(face.to_string()));
        }
        Ok(self.link_bits(face.bits()))
    }

    fn link_bits(&self, f: u64) -> Self {
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|g| f & !g.bits() == 0)
            .map(|g| VertexSet::from_bits(self.ambient, g.bits() & !f))
            .collect();
        SimplicialComplex { ambient: self.ambient, facets }
    }

    /// `del(v)`: faces not containing `v`.
    pub fn deletion(&self, v: usize) -> Result<Self> {
        if v == 0 || v > self.ambient {
            return Err(Error::VertexOutOfRange { vertex: v, ambient: self.ambient });
        }
        Ok(self.deletion_bits(1 << (v - 1)))
    }

    fn deletion_bits(&self, bit: u64) -> Self {
        if self.facets.is_empty() {
            return self.clone();
        }
        Self::from_bits(self.ambient, self.facets.iter().map(|f| f.bits() & !bit).collect())
    }

    /// Some vertex lies in every facet, so reduced homology vanishes.
    pub fn is_cone(&self) -> bool {
        !self.facets.is_empty() && self.facets.iter().fold(u64::MAX, |m, f| m & f.bits()) != 0
    }

    /// All faces, grouped by dimension: `out[d + 1]` lists the `d`-faces in
    /// increasing lexicographic order.
    pub fn faces_by_dimension(&self) -> Vec<Vec<u64>> {
        let Some(dim) = self.dimension() else {
            return Vec::new();
        };
        let mut out: Vec<Vec<u64>> = vec![Vec::new(); (dim + 2) as usize];
        let mut seen = std::collections::HashSet::new();
        for f in &self.facets {
            let b = f.bits();
            // all submasks of b
            let mut s = b;
            loop {
                if seen.insert(s) {
                    out[s.count_ones() as usize].push(s);
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & b;
            }
        }
        for level in &mut out {
            level.sort_by(|a, b| VertexSet::from_bits(64, *a).cmp(&VertexSet::from_bits(64, *b)));
        }
        out
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_dimension().iter().map(Vec::len).sum()
    }

    /// Reduced Euler characteristic `Σ (-1)^d f_d` with `f_{-1} = 1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_dimension()
            .iter()
            .enumerate()
            .map(|(k, l)| if k % 2 == 1 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// Ranks of reduced homology over `field`.
    ///
    /// Vertices whose link is a cone are deleted first (this does not change
    /// the homotopy type), and a cone short-circuits to zero.
    pub fn reduced_homology(&self, field: FieldTag) -> HomologyProfile {
        let Some(dim) = self.dimension() else {
            return HomologyProfile { field, ranks: Vec::new() };
        };
        let len = (dim + 2) as usize;
        let mut ranks = match collapse_cone_links(self.facets.iter().map(VertexSet::bits).collect()) {
            None => Vec::new(),
            Some(facets) => Self::from_bits(self.ambient, facets).reduced_homology_direct(field).ranks,
        };
        ranks.resize(len, 0);
        HomologyProfile { field, ranks }
    }

    /// Reduced homology straight from the boundary matrices, without any
    /// preliminary simplification.
    pub fn reduced_homology_direct(&self, field: FieldTag) -> HomologyProfile {
        let faces = self.faces_by_dimension();
        if faces.is_empty() {
            return HomologyProfile { field, ranks: Vec::new() };
        }
        // boundary_ranks[k] = rank of ∂ : C_{k-1} -> C_{k-2} in level indices,
        // i.e. the map from level k to level k - 1.
        let mut boundary_ranks = vec![0usize; faces.len() + 1];
        for k in 1..faces.len() {
            let index: HashMap<u64, usize> = faces[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let cols = faces[k]
                .iter()
                .map(|&f| {
                    let mut col = Vec::with_capacity(k);
                    let mut m = f;
                    let mut pos = 0;
                    while m != 0 {
                        let bit = m & m.wrapping_neg();
                        m &= m - 1;
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        col.push((index[&(f & !bit)], sign));
                        pos += 1;
                    }
                    col
                })
                .collect();
            let mat = SparseColumns { rows: faces[k - 1].len(), cols };
            boundary_ranks[k] = match field {
                FieldTag::Rationals => rank_rational(&mat),
                FieldTag::Gf2 => rank_gf2(&mat),
            };
        }
        let ranks = (0..faces.len())
            .map(|k| faces[k].len() - boundary_ranks[k] - boundary_ranks[k + 1])
            .collect();
        HomologyProfile { field, ranks }
    }

    /// `max{d : H̃_{d-1}(Δ[A]) ≠ 0 for some A}`, the regularity of the
    /// Stanley-Reisner ring. Cones are skipped.
    pub fn regularity(&self, field: FieldTag) -> Result<usize> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let n = self.ambient;
        let reg = (0..=full_mask(n))
            .into_par_iter()
            .map(|a| {
                let sub = self.induced_bits(a);
                if sub.is_cone() {
                    return 0;
                }
                match sub.reduced_homology(field).top_nonzero() {
                    Some(i) => (i + 1) as usize,
                    None => 0,
                }
            })
            .max()
            .unwrap_or(0);
        Ok(reg)
    }

    /// Reisner's criterion: for every face `F`, `H̃_i(lk F) = 0` for all
    /// `i < dim lk F`.
    pub fn is_cohen_macaulay(&self, field: FieldTag) -> Result<bool> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        // Links of faces in a non-pure complex have different dimensions at
        // some face, so Reisner fails somewhere; skip straight to the answer.
        if !self.is_pure() {
            return Ok(false);
        }
        let faces: Vec<u64> = self.faces_by_dimension().into_iter().rev().flatten().collect();
        let failure = faces.par_iter().find_any(|&&f| {
            let lk = self.link_bits(f);
            let top = lk.dimension().unwrap_or(-1);
            let h = lk.reduced_homology(field);
            (-1..top).any(|i| h.rank(i) != 0)
        });
        Ok(failure.is_none())
    }

    /// Vertex decomposability, with memoisation keyed on a relabelled copy
    /// of each sub-complex.
    pub fn is_vertex_decomposable(&self) -> bool {
        let mut memo = HashMap::new();
        vd(self, &mut memo)
    }

    /// A shedding vertex, if one exists.
    pub fn shedding_vertex(&self) -> Option<usize> {
        let mut memo = HashMap::new();
        self.vertices().iter().find(|&v| is_shedding(self, v, &mut memo))
    }

    /// Diameter of the graph formed by a pure 1-dimensional complex;
    /// `None` when that graph is disconnected.
    pub fn one_dim_diameter(&self) -> Result<Option<usize>> {
        if self.facets.is_empty() || self.facets.iter().any(|f| f.len() != 2) {
            return Err(Error::Precondition("expected a pure 1-dimensional complex".into()));
        }
        let verts = self.vertices();
        let sub = crate::graph::Graph::from_clutter(Clutter::new(self.ambient, self.facets.clone())?)?;
        let restricted = sub.induced_subgraph(&verts)?;
        Ok(restricted.value.diameter())
    }
}

/// Repeatedly deletes a vertex whose link is a cone. `None` when the
/// complex becomes a cone itself, so all reduced homology vanishes.
fn collapse_cone_links(mut facets: Vec<u64>) -> Option<Vec<u64>> {
    loop {
        if facets.is_empty() {
            return Some(facets);
        }
        if facets.iter().fold(u64::MAX, |m, &f| m & f) != 0 {
            return None;
        }
        let verts = facets.iter().fold(0, |m, &f| m | f);
        let mut bits = verts;
        let mut removed = false;
        while bits != 0 {
            let v = bits & bits.wrapping_neg();
            bits &= bits - 1;
            let apex = facets.iter().filter(|&&f| f & v != 0).fold(u64::MAX, |m, &f| m & f & !v);
            if apex != 0 {
                facets = maximal_only(facets.iter().map(|&f| f & !v).collect());
                removed = true;
                break;
            }
        }
        if !removed {
            return Some(facets);
        }
    }
}

fn canonical_key(c: &SimplicialComplex) -> Vec<u64> {
    let verts = c.vertices().to_vec();
    // vertex signature: sorted sizes of the facets through it
    let mut sig: Vec<(Vec<u32>, usize)> = verts
        .iter()
        .map(|&v| {
            let mut sizes: Vec<u32> =
                c.facets.iter().filter(|f| f.contains(v)).map(|f| f.len() as u32).collect();
            sizes.sort_unstable();
            (sizes, v)
        })
        .collect();
    sig.sort();
    let mut relabel = [0u8; 65];
    for (new, (_, v)) in sig.iter().enumerate() {
        relabel[*v] = new as u8;
    }
    let mut key: Vec<u64> = c
        .facets
        .iter()
        .map(|f| f.iter().fold(0u64, |m, v| m | 1 << relabel[v]))
        .collect();
    key.sort_unstable();
    key
}

fn vd(c: &SimplicialComplex, memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if c.facets.len() <= 1 {
        return true;
    }
    let key = canonical_key(c);
    if let Some(&r) = memo.get(&key) {
        return r;
    }
    let r = c.vertices().iter().any(|v| is_shedding(c, v, memo));
    memo.insert(key, r);
    r
}

fn is_shedding(c: &SimplicialComplex, v: usize, memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    let bit = 1u64 << (v - 1);
    let del = c.deletion_bits(bit);
    if !del.facets.iter().all(|f| c.facets.contains(f)) {
        return false;
    }
    let lk = c.link_bits(bit);
    vd(&lk, memo) && vd(&del, memo)
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<Vec<usize>> = self.facets.iter().map(|s| s.to_vec()).collect();
        f.debug_struct("SimplicialComplex").field("ambient", &self.ambient).field("facets", &facets).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn vs(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied()).unwrap()
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_faces(n, facets.iter().map(|f| vs(n, f))).unwrap()
    }

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::independence_complex(&Graph::cycle(5))
    }

    #[test]
    fn independence_complexes() {
        let p = pentagon();
        assert_eq!(p.facets().len(), 5);
        assert_eq!(p.dimension(), Some(1));
        assert_eq!(SimplicialComplex::independence_complex(&Graph::complete(3)), cx(3, &[&[1], &[2], &[3]]));
        assert_eq!(SimplicialComplex::independence_complex(&Clutter::discrete(3)), SimplicialComplex::simplex(3));
    }

    #[test]
    fn stanley_reisner_round_trip() {
        let two_points = SimplicialComplex::stanley_reisner_complex(&edge_ideal(&Graph::complete(2))).unwrap();
        assert_eq!(two_points, cx(2, &[&[1], &[2]]));
        let c5 = Graph::cycle(5);
        let d = SimplicialComplex::stanley_reisner_complex(&edge_ideal(&c5)).unwrap();
        assert_eq!(d, pentagon());
        assert_eq!(d.stanley_reisner_ideal(), edge_ideal(&c5));
        assert_eq!(SimplicialComplex::simplex(3).stanley_reisner_ideal(), MonomialIdeal::zero(3));
        let nonsq = MonomialIdeal::from_exponents(1, [vec![2]]).unwrap();
        assert_eq!(SimplicialComplex::stanley_reisner_complex(&nonsq), Err(Error::NotSquarefree));
    }

    #[test]
    fn links_and_deletions() {
        let p = pentagon();
        assert_eq!(p.link(&vs(5, &[1])).unwrap(), cx(5, &[&[3], &[4]]));
        assert_eq!(p.induced(&vs(5, &[1, 2, 3])).unwrap(), cx(5, &[&[1, 3], &[2]]));
        assert_eq!(SimplicialComplex::simplex(3).deletion(2).unwrap(), cx(3, &[&[1, 3]]));
        assert!(p.link(&vs(5, &[1, 2])).is_err());
    }

    #[test]
    fn homology_ranks() {
        let h = pentagon().reduced_homology(FieldTag::Rationals);
        assert_eq!((h.rank(0), h.rank(1)), (0, 1));
        for field in FieldTag::ALL {
            assert_eq!(cx(2, &[&[1], &[2]]).reduced_homology(field).rank(0), 1);
            assert!(SimplicialComplex::simplex(4).reduced_homology(field).is_acyclic());
        }
        let void = SimplicialComplex::void(3).reduced_homology(FieldTag::Gf2);
        assert!(void.is_acyclic());
        let irr = SimplicialComplex::irrelevant(3).reduced_homology(FieldTag::Rationals);
        assert_eq!(irr.ranks, vec![1]);
    }

    /// Six-vertex triangulation of the real projective plane.
    fn rp2() -> SimplicialComplex {
        cx(
            6,
            &[
                &[1, 2, 3],
                &[1, 3, 4],
                &[1, 4, 5],
                &[1, 5, 6],
                &[1, 2, 6],
                &[2, 3, 5],
                &[2, 4, 5],
                &[2, 4, 6],
                &[3, 4, 6],
                &[3, 5, 6],
            ],
        )
    }

    #[test]
    fn projective_plane_sees_the_characteristic() {
        let q = rp2().reduced_homology(FieldTag::Rationals);
        let f2 = rp2().reduced_homology(FieldTag::Gf2);
        assert!(q.is_acyclic());
        assert_eq!((f2.rank(1), f2.rank(2)), (1, 1));
        assert!(rp2().is_cohen_macaulay(FieldTag::Rationals).unwrap());
        assert!(!rp2().is_cohen_macaulay(FieldTag::Gf2).unwrap());
        assert_eq!(rp2().regularity(FieldTag::Rationals).unwrap(), 2);
        assert_eq!(rp2().regularity(FieldTag::Gf2).unwrap(), 3);
    }

    #[test]
    fn regularity_small() {
        let k2 = SimplicialComplex::independence_complex(&Graph::complete(2));
        assert_eq!(k2.regularity(FieldTag::Rationals), Ok(1));
        assert_eq!(SimplicialComplex::simplex(3).regularity(FieldTag::Gf2), Ok(0));
        assert_eq!(SimplicialComplex::void(2).regularity(FieldTag::Gf2), Err(Error::VoidComplex));
    }

    #[test]
    fn reisner() {
        assert!(pentagon().is_cohen_macaulay(FieldTag::Rationals).unwrap());
        let two_edges = SimplicialComplex::independence_complex(&Graph::cycle(4));
        assert_eq!(two_edges, cx(4, &[&[1, 3], &[2, 4]]));
        for field in FieldTag::ALL {
            assert!(!two_edges.is_cohen_macaulay(field).unwrap());
        }
        assert!(SimplicialComplex::void(1).is_cohen_macaulay(FieldTag::Gf2).is_err());
        assert!(SimplicialComplex::irrelevant(1).is_cohen_macaulay(FieldTag::Gf2).unwrap());
    }

    #[test]
    fn vertex_decomposability() {
        assert!(SimplicialComplex::simplex(4).is_vertex_decomposable());
        assert!(SimplicialComplex::void(2).is_vertex_decomposable());
        assert!(pentagon().is_vertex_decomposable());
        let two_edges = cx(4, &[&[1, 3], &[2, 4]]);
        assert!(!two_edges.is_vertex_decomposable());
        assert_eq!(two_edges.shedding_vertex(), None);
        assert!(!rp2().is_vertex_decomposable());
    }

    #[test]
    fn diameters() {
        assert_eq!(pentagon().one_dim_diameter(), Ok(Some(2)));
        let path = cx(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(path.one_dim_diameter(), Ok(Some(3)));
        assert_eq!(cx(4, &[&[1, 3], &[2, 4]]).one_dim_diameter(), Ok(None));
        assert!(SimplicialComplex::simplex(3).one_dim_diameter().is_err());
    }

    #[test]
    fn euler_characteristic_matches_homology() {
        for d in [pentagon(), rp2(), cx(4, &[&[1, 3], &[2, 4]]), SimplicialComplex::irrelevant(2)] {
            for field in FieldTag::ALL {
                assert_eq!(d.reduced_euler_characteristic(), d.reduced_homology(field).euler_characteristic());
            }
        }
    }
}
