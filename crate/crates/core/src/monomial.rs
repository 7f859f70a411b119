//! Monomials and monomial ideals over `K[t_1, ..., t_s]`.
//!
//! Ideals always hold their minimal generating set, which is unique for
//! monomial ideals, so equality of ideals is equality of generator lists.

use std::cmp::Ordering;
use std::fmt;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(ambient: usize) -> Self {
        Monomial { exps: vec![0; ambient] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The squarefree monomial `t_A`.
    pub fn from_set(a: &VertexSet) -> Self {
        let mut exps = vec![0; a.ambient_size()];
        for v in a {
            exps[v - 1] = 1;
        }
        Monomial { exps }
    }

    pub fn variable(ambient: usize, v: usize) -> Self {
        let mut m = Self::one(ambient);
        m.exps[v - 1] = 1;
        m
    }

    #[inline]
    pub fn ambient_size(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VertexSet {
        let bits = self.exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |m, (i, _)| m | (1 << i));
        VertexSet::from_bits(self.exps.len(), bits)
    }

    fn check(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            Err(Error::AmbientMismatch { left: self.exps.len(), right: other.exps.len() })
        } else {
            Ok(())
        }
    }

    /// `self | other`. Panics on ambient mismatch.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(self.zip(other, u32::max))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(self.zip(other, u32::min))
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a.saturating_sub(b)))
    }

    fn zip(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| f(a, b)).collect() }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|e| e * n).collect() }
    }
}

/// Degree first, then lexicographic with `t_1 > t_2 > ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
            .then_with(|| self.exps.len().cmp(&other.exps.len()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial prime `(t_i : i ∈ set)`, e.g. an associated prime of an edge
/// ideal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PrimeCover(pub VertexSet);

impl PrimeCover {
    pub fn variables(&self) -> VertexSet {
        self.0
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for PrimeCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "t{v}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

/// Removes generators divisible by other generators and sorts the rest.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // Sorted by degree, so a divisor always comes before its multiples.
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(ambient: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.ambient_size() != ambient) {
            return Err(Error::AmbientMismatch { left: ambient, right: g.ambient_size() });
        }
        Ok(MonomialIdeal { ambient, gens: minimalize(gens) })
    }

    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: vec![Monomial::one(ambient)] }
    }

    /// Ideal generated by exponent vectors.
    pub fn from_exponents(ambient: usize, gens: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        Self::new(ambient, gens.into_iter().map(Monomial::from_exponents).collect())
    }

    pub fn ambient_size(&self) -> usize {
        self.ambient
    }

    /// The minimal generators, sorted by degree and then lexicographically.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check(&self, ambient: usize) -> Result<()> {
        if self.ambient != ambient {
            Err(Error::AmbientMismatch { left: self.ambient, right: ambient })
        } else {
            Ok(())
        }
    }

    /// Some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check(m.ambient_size())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check(other.ambient)?;
        Ok(other.gens.iter().all(|g| self.gens.iter().any(|h| h.divides(g))))
    }

    /// `(I : f)`, generated by `g / gcd(g, f)`.
    pub fn colon_monomial(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check(f.ambient_size())?;
        let gens = self.gens.iter().map(|g| g.zip(f, |a, b| a.saturating_sub(b))).collect();
        Ok(MonomialIdeal { ambient: self.ambient, gens: minimalize(gens) })
    }

    /// `(I : p) = ⋂_{t ∈ p} (I : t)`.
    pub fn colon_prime(&self, p: &PrimeCover) -> Result<MonomialIdeal> {
        self.check(p.0.ambient_size())?;
        let mut vars = p.0.iter();
        let first = vars.next().ok_or(Error::EmptyPrime)?;
        let mut acc = self.colon_monomial(&Monomial::variable(self.ambient, first))?;
        for v in vars {
            acc = acc.intersect(&self.colon_monomial(&Monomial::variable(self.ambient, v))?)?;
        }
        Ok(acc)
    }

    /// `(I : J) = ⋂_{g ∈ G(J)} (I : g)`.
    pub fn colon_ideal(&self, j: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(j.ambient)?;
        let mut acc: Option<MonomialIdeal> = None;
        for g in &j.gens {
            let c = self.colon_monomial(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| MonomialIdeal::unit(self.ambient)))
    }

    /// Generated by pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other.ambient)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.zip(b, u32::max));
            }
        }
        Ok(MonomialIdeal { ambient: self.ambient, gens: minimalize(gens) })
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other.ambient)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { ambient: self.ambient, gens: minimalize(gens) })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other.ambient)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.zip(b, |x, y| x + y));
            }
        }
        Ok(MonomialIdeal { ambient: self.ambient, gens: minimalize(gens) })
    }

    /// `I^n`. `n = 0` gives the unit ideal.
    pub fn ordinary_power(&self, n: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.ambient);
        for _ in 0..n {
            acc = acc.product(self).expect("same ambient");
        }
        acc
    }

    /// `(I, t_v : v ∈ vs)`.
    pub fn add_variables(&self, vs: &VertexSet) -> Result<MonomialIdeal> {
        self.check(vs.ambient_size())?;
        let mut gens = self.gens.clone();
        gens.extend(vs.iter().map(|v| Monomial::variable(self.ambient, v)));
        Ok(MonomialIdeal { ambient: self.ambient, gens: minimalize(gens) })
    }

    /// Same generators in a ring with more variables.
    pub fn extend_ambient(&self, new_size: usize) -> Result<MonomialIdeal> {
        if new_size < self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: new_size });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.exps.clone();
                e.resize(new_size, 0);
                Monomial { exps: e }
            })
            .collect();
        Ok(MonomialIdeal { ambient: new_size, gens })
    }

    /// Radical of a monomial ideal: generated by the supports.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| Monomial::from_set(&g.support())).collect();
        MonomialIdeal { ambient: self.ambient, gens: minimalize(gens) }
    }

    /// The clutter of supports of a squarefree ideal.
    pub fn to_clutter(&self) -> Result<Clutter> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.is_unit() {
            return Err(Error::Precondition("the unit ideal has no clutter".into()));
        }
        Clutter::new(self.ambient, self.gens.iter().map(Monomial::support).collect())
    }

    /// Polarization: `t_i^k` becomes `t_{i,1} ... t_{i,k}`. Returns the
    /// squarefree ideal with the map `new variable -> (old variable, copy)`.
    /// Variables that never occur get no copies.
    pub fn polarize(&self) -> Result<Polarization> {
        let mut copies = vec![0u32; self.ambient];
        for g in &self.gens {
            for (c, &e) in copies.iter_mut().zip(&g.exps) {
                *c = (*c).max(e);
            }
        }
        let mut offset = Vec::with_capacity(self.ambient);
        let mut map = Vec::new();
        for (i, &c) in copies.iter().enumerate() {
            offset.push(map.len());
            for k in 1..=c {
                map.push((i + 1, k));
            }
        }
        let n = map.len();
        if n > crate::vertex_set::MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0u32; n];
                for (i, &x) in g.exps.iter().enumerate() {
                    for k in 0..x as usize {
                        e[offset[i] + k] = 1;
                    }
                }
                Monomial { exps: e }
            })
            .collect();
        Ok(Polarization { ideal: MonomialIdeal { ambient: n, gens: minimalize(gens) }, variables: map })
    }
}

/// Result of [`MonomialIdeal::polarize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// `variables[j]` is `(i, k)`: new variable `j + 1` is the `k`-th copy of `t_i`.
    pub variables: Vec<(usize, u32)>,
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `p^n`: all degree-`n` monomials in the variables of `p`.
pub fn prime_power(p: &PrimeCover, n: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let ambient = p.0.ambient_size();
    let vars = p.0.to_vec();
    if vars.is_empty() {
        return Err(Error::EmptyPrime);
    }
    let mut gens = Vec::new();
    let mut exps = vec![0u32; ambient];
    fn rec(vars: &[usize], left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        match vars {
            [] => {}
            [last] => {
                exps[last - 1] = left;
                out.push(Monomial { exps: exps.clone() });
                exps[last - 1] = 0;
            }
            [v, rest @ ..] => {
                for k in 0..=left {
                    exps[v - 1] = k;
                    rec(rest, left - k, exps, out);
                }
                exps[v - 1] = 0;
            }
        }
    }
    rec(&vars, n, &mut exps, &mut gens);
    Ok(MonomialIdeal { ambient, gens: minimalize(gens) })
}

/// An edge ideal carried together with its clutter, so associated primes
/// come straight from the minimal vertex covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIdeal {
    clutter: Clutter,
    ideal: MonomialIdeal,
}

impl EdgeIdeal {
    pub fn new(clutter: &Clutter) -> Self {
        EdgeIdeal { clutter: clutter.clone(), ideal: edge_ideal(clutter) }
    }

    /// Recovers the clutter of a squarefree ideal.
    pub fn from_squarefree(ideal: &MonomialIdeal) -> Result<Self> {
        Ok(EdgeIdeal { clutter: ideal.to_clutter()?, ideal: ideal.clone() })
    }

    pub fn clutter(&self) -> &Clutter {
        &self.clutter
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// Minimal vertex covers, read as primes.
    pub fn associated_primes(&self) -> Result<Vec<PrimeCover>> {
        Ok(self.clutter.blocker()?.edges().iter().copied().map(PrimeCover).collect())
    }

    /// `α((I : p)/I)`: least degree of a monomial of `(I : p)` outside `I`.
    /// Any such monomial is a multiple of a generator of `(I : p)` that is
    /// itself outside `I`, so scanning generators is enough.
    pub fn alpha_of_colon_quotient(&self, p: &PrimeCover) -> Result<u32> {
        if self.ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if !self.clutter.is_minimal_vertex_cover(&p.0)? {
            return Err(Error::NotAssociated(p.to_string()));
        }
        let colon = self.ideal.colon_prime(p)?;
        let mut best: Option<u32> = None;
        for g in colon.generators() {
            if !self.ideal.contains(g)? {
                best = Some(best.map_or(g.degree(), |b| b.min(g.degree())));
            }
        }
        Ok(best.unwrap_or(0))
    }

    /// `v(I) = min_p α((I : p)/I)` over the associated primes.
    pub fn v_number(&self) -> Result<u32> {
        let primes = self.associated_primes()?;
        let mut best = u32::MAX;
        for p in &primes {
            best = best.min(self.alpha_of_colon_quotient(p)?);
        }
        Ok(best)
    }

    /// `I^(n) = ⋂ p^n`, folding the primes in increasing size.
    pub fn symbolic_power(&self, n: u32) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        let mut primes = self.associated_primes()?;
        primes.sort_by_key(|p| (p.height(), p.0));
        let mut acc: Option<MonomialIdeal> = None;
        for p in &primes {
            let q = prime_power(p, n)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("a nonzero edge ideal has an associated prime"))
    }

    /// Krull dimension of `S/I`, which is β0 of the clutter.
    pub fn dimension(&self) -> usize {
        self.clutter.independence_number()
    }

    /// Height of `I`, which is α0 of the clutter.
    pub fn height(&self) -> usize {
        self.clutter.cover_number()
    }
}

/// `I(C) = (t_e : e ∈ E(C))`.
pub fn edge_ideal(c: &Clutter) -> MonomialIdeal {
    let gens = c.edges().iter().map(Monomial::from_set).collect();
    MonomialIdeal { ambient: c.vertex_count(), gens: minimalize(gens) }
}

/// The ideal of covers: the edge ideal of the blocker.
pub fn cover_ideal(c: &Clutter) -> Result<MonomialIdeal> {
    Ok(edge_ideal(&c.blocker()?))
}
