//! Graph classifications that come with two independent decision routes.
//! Every two-route check runs both and reports a [`Error::RouteDisagreement`]
//! instead of silently preferring one.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{EdgeIdeal, Monomial, MonomialIdeal};
use crate::simplicial::{FieldTag, SimplicialComplex};
use crate::vertex_set::VertexSet;

/// Default vertex cap for the polarization oracle.
pub const DEFAULT_ORACLE_CAP: usize = 7;

fn disagree(check: &'static str, detail: String) -> Error {
    Error::RouteDisagreement { check, detail }
}

/// `v(I)` by the stable-set formula.
pub fn v_number_combinatorial(c: &Clutter) -> Result<usize> {
    c.v_number()
}

/// `v(I)` as the least `α((I : p)/I)` over associated primes.
pub fn v_number_algebraic(c: &Clutter) -> Result<usize> {
    Ok(EdgeIdeal::new(c).v_number()? as usize)
}

/// Both routes, checked against each other.
pub fn v_number(c: &Clutter) -> Result<usize> {
    let a = v_number_combinatorial(c)?;
    let b = v_number_algebraic(c)?;
    if a != b {
        return Err(disagree("v-number", format!("combinatorial {a}, algebraic {b}")));
    }
    Ok(a)
}

/// Regularity of `S/I(C)` from the independence complex.
pub fn regularity(c: &Clutter, field: FieldTag) -> usize {
    SimplicialComplex::independence_complex(c)
        .regularity(field)
        .expect("independence complexes contain the empty face")
}

/// Regularity of `S/I` for a squarefree monomial ideal.
pub fn regularity_of_ideal(i: &MonomialIdeal, field: FieldTag) -> Result<usize> {
    SimplicialComplex::stanley_reisner_complex(i)?.regularity(field)
}

/// The v-number of the squarefree ideal `i`, read through its clutter.
pub fn v_number_of_ideal(i: &MonomialIdeal) -> Result<usize> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    v_number(&i.to_clutter()?)
}

/// `v(I : t_v)`.
pub fn v_number_of_colon(c: &Clutter, v: usize) -> Result<usize> {
    let i = crate::monomial::edge_ideal(c);
    v_number_of_ideal(&i.colon_monomial(&Monomial::variable(c.vertex_count(), v))?)
}

/// `v((I, t_v))`.
pub fn v_number_with_variable(c: &Clutter, v: usize) -> Result<usize> {
    let i = crate::monomial::edge_ideal(c);
    v_number_of_ideal(&i.add_variables(&VertexSet::singleton(c.vertex_count(), v)?)?)
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    let iso = g.isolated_vertices();
    if iso.is_empty() {
        Ok(())
    } else {
        Err(Error::IsolatedVertices(iso.to_vec()))
    }
}

/// W2 membership: `v = β0`, cross-checked against "well-covered and every
/// maximal stable set has a minimal-cover neighbourhood".
pub fn is_w2(g: &Graph) -> Result<bool> {
    require_no_isolated(g)?;
    let beta0 = g.independence_number();
    let by_v = v_number(g)? == beta0;
    let by_sets = g.is_well_covered() && {
        let mut f = g.maximal_stable_sets();
        let mut a = g.family_a()?;
        f.sort();
        a.sort();
        f == a
    };
    if by_v != by_sets {
        return Err(disagree("w2", format!("v = beta0 gives {by_v}, well-covered with F = A gives {by_sets}")));
    }
    Ok(by_v)
}

/// The first edge, if any, whose removal leaves β0 unchanged.
pub fn edge_critical_violation(g: &Graph) -> Result<Option<(usize, usize)>> {
    let beta0 = g.independence_number();
    let mut first = None;
    for (a, b) in g.edge_pairs() {
        let by_deletion = g.delete_edge(a, b)?.independence_number() == beta0 + 1;
        let by_neighborhoods = g.delete_edge_neighborhoods(a, b)?.value.independence_number() + 1 == beta0;
        if by_deletion != by_neighborhoods {
            return Err(disagree(
                "edge-critical",
                format!("edge {{{a}, {b}}}: deletion route {by_deletion}, neighbourhood route {by_neighborhoods}"),
            ));
        }
        if !by_deletion && first.is_none() {
            first = Some((a, b));
        }
    }
    Ok(first)
}

/// Every edge deletion raises β0. Both per-edge routes are compared.
pub fn is_edge_critical(g: &Graph) -> Result<bool> {
    Ok(edge_critical_violation(g)?.is_none())
}

/// Cohen-Macaulayness of `S/I(G)` over `field`.
pub fn is_cm_graph(g: &Graph, field: FieldTag) -> bool {
    SimplicialComplex::independence_complex(g)
        .is_cohen_macaulay(field)
        .expect("independence complexes contain the empty face")
}

/// Outcome of the symbolic-square test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicSquareVerdict {
    pub cohen_macaulay: bool,
    /// The polarization oracle's answer, when it ran.
    pub oracle: Option<bool>,
}

/// `S/I^(2)` is CM iff `G` is CM and every `G_e` is CM with `β0(G_e) = β0 - 1`.
pub fn symbolic_square_cm_combinatorial(g: &Graph, field: FieldTag) -> Result<bool> {
    if !is_cm_graph(g, field) {
        return Ok(false);
    }
    let beta0 = g.independence_number();
    let edges = g.edge_pairs();
    let results: Result<Vec<bool>> = edges
        .par_iter()
        .map(|&(a, b)| {
            let ge = g.delete_edge_neighborhoods(a, b)?.value;
            Ok(ge.independence_number() + 1 == beta0 && is_cm_graph(&ge, field))
        })
        .collect();
    Ok(results?.into_iter().all(|ok| ok))
}

/// Polarize `I^(2)` and apply Reisner to its Stanley-Reisner complex.
pub fn symbolic_square_cm_oracle(g: &Graph, field: FieldTag) -> Result<bool> {
    let square = EdgeIdeal::new(g).symbolic_power(2)?;
    let polar = square.polarize()?;
    SimplicialComplex::stanley_reisner_complex(&polar.ideal)?.is_cohen_macaulay(field)
}

/// Runs the combinatorial route and, for graphs with at most `oracle_cap`
/// vertices and at least one edge, the polarization oracle.
pub fn symbolic_square_cm_checked(g: &Graph, field: FieldTag, oracle_cap: usize) -> Result<SymbolicSquareVerdict> {
    let cohen_macaulay = symbolic_square_cm_combinatorial(g, field)?;
    let oracle = if g.vertex_count() <= oracle_cap && g.edge_count() > 0 {
        let o = symbolic_square_cm_oracle(g, field)?;
        if o != cohen_macaulay {
            return Err(disagree(
                "symbolic-square-cm",
                format!("over {field}: combinatorial {cohen_macaulay}, polarization oracle {o}"),
            ));
        }
        Some(o)
    } else {
        None
    };
    Ok(SymbolicSquareVerdict { cohen_macaulay, oracle })
}

pub fn symbolic_square_cm(g: &Graph, field: FieldTag) -> Result<bool> {
    Ok(symbolic_square_cm_checked(g, field, DEFAULT_ORACLE_CAP)?.cohen_macaulay)
}

/// For `β0 = 2`: the symbolic square is CM iff `G` is edge-critical. The
/// complement being maximal triangle-free, and (when connected) of
/// diameter at most 2, are checked as equivalent conditions.
pub fn symbolic_square_cm_beta2(g: &Graph) -> Result<bool> {
    let beta0 = g.independence_number();
    if beta0 != 2 {
        return Err(Error::Precondition(format!("expected beta0 = 2, got {beta0}")));
    }
    let critical = is_edge_critical(g)?;
    let comp = g.complement();
    let mtf = comp.is_maximal_triangle_free();
    if mtf != critical {
        return Err(disagree("beta0-2", format!("edge-critical {critical}, complement maximal triangle-free {mtf}")));
    }
    if g.vertex_count() >= 3 && comp.is_connected() {
        let small_diameter = comp.diameter().is_some_and(|d| d <= 2);
        if small_diameter != critical {
            return Err(disagree("beta0-2", format!("edge-critical {critical}, complement diameter <= 2 {small_diameter}")));
        }
    }
    Ok(critical)
}

/// `I(G)` has a linear resolution iff the complement of `G` is chordal.
pub fn has_linear_resolution(g: &Graph) -> Result<bool> {
    require_no_isolated(g)?;
    if g.edge_count() == 0 {
        return Err(Error::ZeroIdeal);
    }
    Ok(g.complement().is_chordal())
}

/// Which fields to compute and how far the polarization oracle may go.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub fields: Vec<FieldTag>,
    pub oracle_cap: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { fields: FieldTag::ALL.to_vec(), oracle_cap: DEFAULT_ORACLE_CAP }
    }
}

impl ReportOptions {
    pub fn with_fields(fields: &[FieldTag]) -> Self {
        ReportOptions { fields: fields.to_vec(), ..Self::default() }
    }
}

/// All invariants of one input. Graph-only entries are `None` for clutters;
/// W2 and linear resolution are `None` when isolated vertices are present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub kind: &'static str,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub isolated_vertices: Vec<usize>,
    pub v: usize,
    pub v_witness: Vec<usize>,
    pub i_dom: usize,
    pub gamma: Option<usize>,
    pub beta0: usize,
    pub alpha0: usize,
    pub dim: usize,
    pub reg: BTreeMap<FieldTag, usize>,
    pub well_covered: bool,
    pub one_well_covered: bool,
    pub w2: Option<bool>,
    pub edge_critical: Option<bool>,
    pub edge_critical_violation: Option<[usize; 2]>,
    pub cm: BTreeMap<FieldTag, bool>,
    pub vertex_decomposable: bool,
    pub symbolic_square_cm: Option<BTreeMap<FieldTag, SymbolicSquareVerdict>>,
    pub linear_resolution: Option<bool>,
}

/// Computes every invariant of `c` with all cross-route checks enabled.
pub fn full_report(c: &Clutter, opts: &ReportOptions) -> Result<InvariantReport> {
    let mut fields = opts.fields.clone();
    fields.sort();
    fields.dedup();

    let v = v_number(c)?;
    let v_witness = c.v_number_witness()?.to_vec();
    let beta0 = c.independence_number();
    let alpha0 = c.cover_number();
    let i_dom = c.independent_domination();
    let delta = SimplicialComplex::independence_complex(c);
    let dim = (delta.dimension().expect("nonvoid") + 1) as usize;
    if dim != beta0 {
        return Err(disagree("dimension", format!("facet dimension gives {dim}, beta0 is {beta0}")));
    }
    let height = c.blocker()?.edges().iter().map(VertexSet::len).min().unwrap_or(0);
    if height != alpha0 {
        return Err(disagree("height", format!("blocker gives {height}, alpha0 is {alpha0}")));
    }

    let mut reg = BTreeMap::new();
    let mut cm = BTreeMap::new();
    for &f in &fields {
        reg.insert(f, delta.regularity(f)?);
        cm.insert(f, delta.is_cohen_macaulay(f)?);
    }
    let isolated = c.isolated_vertices();

    let graph = if c.is_graph() { Some(Graph::from_clutter(c.clone())?) } else { None };
    let (mut gamma, mut w2, mut edge_critical, mut violation, mut sq, mut linear) = (None, None, None, None, None, None);
    if let Some(g) = &graph {
        gamma = Some(g.domination_number());
        if isolated.is_empty() {
            w2 = Some(is_w2(g)?);
            let lr = has_linear_resolution(g)?;
            if lr && (v != 1 || reg.values().any(|&r| r != 1)) {
                return Err(disagree("linear-resolution", format!("chordal complement but v = {v}, reg = {reg:?}")));
            }
            linear = Some(lr);
        }
        let viol = edge_critical_violation(g)?;
        edge_critical = Some(viol.is_none());
        violation = viol.map(|(a, b)| [a, b]);
        if beta0 == 2 {
            symbolic_square_cm_beta2(g)?;
        }
        let mut per_field = BTreeMap::new();
        for &f in &fields {
            per_field.insert(f, symbolic_square_cm_checked(g, f, opts.oracle_cap)?);
        }
        sq = Some(per_field);
    }

    Ok(InvariantReport {
        kind: if graph.is_some() { "graph" } else { "clutter" },
        vertex_count: c.vertex_count(),
        edge_count: c.edge_count(),
        isolated_vertices: isolated.to_vec(),
        v,
        v_witness,
        i_dom,
        gamma,
        beta0,
        alpha0,
        dim,
        reg,
        well_covered: c.is_well_covered(),
        one_well_covered: c.is_one_well_covered(),
        w2,
        edge_critical,
        edge_critical_violation: violation,
        cm,
        vertex_decomposable: delta.is_vertex_decomposable(),
        symbolic_square_cm: sq,
        linear_resolution: linear,
    })
}
