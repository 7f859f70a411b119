//! Shared corpus and property checks for the integration and acceptance
//! tests. Each check returns the first counterexample as an error string.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vnum_core::classify::*;
use vnum_core::formats::catalog::{CM36, EXAMPLE_11, EXAMPLE_9};
use vnum_core::{edge_ideal, Clutter, EdgeIdeal, FieldTag, Graph, SimplicialComplex, VertexSet};

pub const FIELDS: [FieldTag; 2] = FieldTag::ALL;

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest edge code over all relabellings that keep the degree sequence
/// sorted; a complete invariant up to isomorphism.
fn canonical_code(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>], idx: &[Vec<usize>]) -> u64 {
    let mut deg = vec![0usize; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut best = u64::MAX;
    for p in perms {
        // only orderings with nondecreasing degree along the new labels
        if (1..n).any(|k| deg[p[k - 1]] > deg[p[k]]) {
            continue;
        }
        let mut inv = vec![0; n];
        for (new, &old) in p.iter().enumerate() {
            inv[old] = new;
        }
        let code = edges.iter().fold(0u64, |m, &(a, b)| m | 1 << idx[inv[a]][inv[b]]);
        best = best.min(code);
    }
    best
}

fn decode(n: usize, code: u64, idx: &[Vec<usize>]) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> idx[i][j] & 1 == 1 {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// All connected graphs on `2..=max_n` vertices, one per isomorphism class,
/// grown by attaching a new vertex to every nonempty subset of an existing
/// graph (every connected graph has a vertex whose removal keeps it
/// connected).
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for n in 2..=max_n {
        let perms = permutations(n);
        let idx = pair_index(n);
        let mut seen = BTreeSet::new();
        for g in &level {
            let base: Vec<(usize, usize)> = g.edge_pairs().into_iter().map(|(a, b)| (a - 1, b - 1)).collect();
            for mask in 1u32..(1 << (n - 1)) {
                let mut edges = base.clone();
                edges.extend((0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
                seen.insert(canonical_code(n, &edges, &perms, &idx));
            }
        }
        level = seen.into_iter().map(|code| decode(n, code, &idx)).collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// The ≤ 7-vertex corpus, computed once per test binary.
pub fn corpus() -> &'static [Graph] {
    static CORPUS: OnceLock<Vec<Graph>> = OnceLock::new();
    CORPUS.get_or_init(|| connected_graphs(7))
}

/// Hand-picked graphs plus the embedded table and examples.
pub fn named_fixtures() -> Vec<(String, Graph)> {
    let mut v: Vec<(String, Graph)> = vec![
        ("K2".into(), Graph::complete(2)),
        ("K3".into(), Graph::complete(3)),
        ("K5".into(), Graph::complete(5)),
        ("C4".into(), Graph::cycle(4)),
        ("C5".into(), Graph::cycle(5)),
        ("C7".into(), Graph::cycle(7)),
        ("P3".into(), Graph::path(3)),
        ("P6".into(), Graph::path(6)),
        ("claw".into(), Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap()),
        ("petersen".into(), petersen()),
        (EXAMPLE_11.label.into(), EXAMPLE_11.graph().unwrap()),
        (EXAMPLE_9.label.into(), EXAMPLE_9.graph().unwrap()),
    ];
    v.extend(CM36.iter().map(|f| (f.label.to_string(), f.graph().unwrap())));
    v
}

pub fn petersen() -> Graph {
    let mut e: Vec<(usize, usize)> = (1..=5).map(|i| (i, i % 5 + 1)).collect();
    e.extend((1..=5).map(|i| (i, i + 5)));
    e.extend((1..=5).map(|i| (i + 5, (i + 1) % 5 + 6)));
    Graph::new(10, e).unwrap()
}

/// Corpus graphs followed by the named fixtures.
pub fn all_graphs() -> Vec<(String, Graph)> {
    let mut v: Vec<(String, Graph)> =
        corpus().iter().map(|g| (vnum_core::formats::to_graph6(g), g.clone())).collect();
    v.extend(named_fixtures());
    v
}

fn fail(name: &str, msg: impl std::fmt::Display) -> String {
    format!("{name}: {msg}")
}

type Check = Result<(), String>;

pub fn check_v_between_i_and_beta0(graphs: &[(String, Graph)]) -> Check {
    for (name, g) in graphs {
        let v = v_number(g).map_err(|e| fail(name, e))?;
        let (i, b) = (g.independent_domination(), g.independence_number());
        if !(v <= i && i <= b) {
            return Err(fail(name, format!("v = {v}, i = {i}, beta0 = {b}")));
        }
    }
    Ok(())
}

pub fn check_reg_at_most_dim(graphs: &[(String, Graph)]) -> Check {
    for (name, g) in graphs {
        for f in FIELDS {
            let r = regularity(g, f);
            if r > g.independence_number() {
                return Err(fail(name, format!("reg over {f} = {r} exceeds dim")));
            }
        }
    }
    Ok(())
}

/// Disjoint unions of deterministic corpus pairs with at most 10 vertices.
pub fn check_additivity(graphs: &[Graph]) -> Check {
    let small: Vec<&Graph> = graphs.iter().filter(|g| g.vertex_count() <= 5).collect();
    let mut tested = 0;
    for (k, &a) in small.iter().cycle().take(2 * small.len()).enumerate() {
        let i = k * 31 + k / small.len();
        let far = &graphs[(i * 53 + 11) % graphs.len()];
        let b = if a.vertex_count() + far.vertex_count() <= 10 { far } else { small[(i * 7 + 3) % small.len()] };
        let u = a.disjoint_union(b).unwrap();
        let name = format!("{} + {}", vnum_core::formats::to_graph6(a), vnum_core::formats::to_graph6(b));
        let (va, vb, vu) = (v_number(a).unwrap(), v_number(b).unwrap(), v_number(&u).map_err(|e| fail(&name, e))?);
        if vu != va + vb {
            return Err(fail(&name, format!("v = {vu}, parts {va} + {vb}")));
        }
        for f in FIELDS {
            let (ra, rb, ru) = (regularity(a, f), regularity(b, f), regularity(&u, f));
            if ru != ra + rb {
                return Err(fail(&name, format!("reg over {f} = {ru}, parts {ra} + {rb}")));
            }
        }
        // an unused variable changes nothing
        let padded = u.add_isolated(1).unwrap();
        for f in FIELDS {
            if regularity(&padded, f) != regularity(&u, f) {
                return Err(fail(&name, "adding a free variable changed the regularity"));
            }
        }
        tested += 1;
    }
    if tested < 20 {
        return Err(format!("only {tested} unions tested"));
    }
    Ok(())
}

/// Squarefree complete intersections: pairwise disjoint edges.
pub fn check_complete_intersections(count: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..count {
        let parts = rng.gen_range(1..=4);
        let degrees: Vec<usize> = (0..parts).map(|_| rng.gen_range(1..=4)).collect();
        let free = rng.gen_range(0..=2);
        let n = degrees.iter().sum::<usize>() + free;
        let mut next = 1;
        let mut edges = Vec::new();
        for &d in &degrees {
            edges.push((next..next + d).collect::<Vec<usize>>());
            next += d;
        }
        let c = Clutter::from_edge_lists(n, edges).unwrap();
        let expected: usize = degrees.iter().map(|d| d - 1).sum();
        let name = format!("ci #{k} degrees {degrees:?} + {free} free");
        let v = v_number(&c).map_err(|e| fail(&name, e))?;
        if v != expected {
            return Err(fail(&name, format!("v = {v}, expected {expected}")));
        }
        for f in FIELDS {
            let r = regularity(&c, f);
            if r != expected {
                return Err(fail(&name, format!("reg over {f} = {r}, expected {expected}")));
            }
        }
    }
    Ok(())
}

pub fn check_whisker(graphs: &[(String, Graph)], reg_up_to: usize) -> Check {
    for (name, g) in graphs {
        if g.vertex_count() > 32 {
            continue;
        }
        let w = g.whisker_graph().unwrap();
        let v = v_number(&w).map_err(|e| fail(name, e))?;
        let i = g.independent_domination();
        if v != i {
            return Err(fail(name, format!("v(whisker) = {v}, i = {i}")));
        }
        if g.vertex_count() <= reg_up_to {
            for f in FIELDS {
                if v > regularity(&w, f) {
                    return Err(fail(name, format!("v(whisker) exceeds reg over {f}")));
                }
            }
        }
    }
    Ok(())
}

pub fn check_w2_iff_v_equals_dim(graphs: &[(String, Graph)]) -> Check {
    for (name, g) in graphs {
        if !g.isolated_vertices().is_empty() {
            continue;
        }
        let w2 = is_w2(g).map_err(|e| fail(name, e))?;
        let v_is_dim = v_number(g).unwrap() == g.independence_number();
        let one_wc = g.is_one_well_covered();
        if w2 != v_is_dim || w2 != one_wc {
            return Err(fail(name, format!("w2 {w2}, v = dim {v_is_dim}, 1-well-covered {one_wc}")));
        }
    }
    Ok(())
}

pub fn check_chordal_complement(graphs: &[(String, Graph)]) -> Check {
    for (name, g) in graphs {
        if !has_linear_resolution(g).map_err(|e| fail(name, e))? {
            continue;
        }
        let v = v_number(g).unwrap();
        for f in FIELDS {
            let r = regularity(g, f);
            if v != 1 || r != 1 {
                return Err(fail(name, format!("chordal complement but v = {v}, reg over {f} = {r}")));
            }
        }
    }
    Ok(())
}

pub fn check_vertex_decomposable_bound(graphs: &[(String, Graph)]) -> Check {
    for (name, g) in graphs {
        let delta = SimplicialComplex::independence_complex(g);
        if !delta.is_vertex_decomposable() {
            continue;
        }
        let v = v_number(g).unwrap();
        for f in FIELDS {
            let r = regularity(g, f);
            if v > r {
                return Err(fail(name, format!("vertex decomposable but v = {v} > reg over {f} = {r}")));
            }
            if delta.is_pure() && !is_cm_graph(g, f) {
                return Err(fail(name, format!("pure and vertex decomposable but not CM over {f}")));
            }
        }
    }
    Ok(())
}

pub fn check_beta0_two(graphs: &[(String, Graph)]) -> Check {
    let mut seen = 0;
    for (name, g) in graphs {
        if g.independence_number() != 2 {
            continue;
        }
        seen += 1;
        let critical = symbolic_square_cm_beta2(g).map_err(|e| fail(name, e))?;
        let mtf = g.complement().is_maximal_triangle_free();
        let sq = symbolic_square_cm(g, FieldTag::Rationals).map_err(|e| fail(name, e))?;
        if critical != mtf || critical != sq {
            return Err(fail(name, format!("edge-critical {critical}, complement MTF {mtf}, symbolic square CM {sq}")));
        }
        if critical && g.isolated_vertices().is_empty() {
            let v = v_number(g).unwrap();
            for f in FIELDS {
                if v != 2 || regularity(g, f) != 2 {
                    return Err(fail(name, format!("v = {v}, reg over {f} = {}", regularity(g, f))));
                }
            }
        }
    }
    if seen == 0 {
        return Err("no graph with beta0 = 2".into());
    }
    Ok(())
}

fn w2_or_false(g: &Graph) -> vnum_core::Result<bool> {
    if g.vertex_count() == 0 || !g.isolated_vertices().is_empty() {
        return Ok(false);
    }
    is_w2(g)
}

pub fn check_w2_heredity(graphs: &[(String, Graph)]) -> Check {
    for (name, g) in graphs {
        if !g.isolated_vertices().is_empty() {
            continue;
        }
        let w2 = is_w2(g).map_err(|e| fail(name, e))?;
        let complete = g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2;
        let beta0 = g.independence_number();
        let mut all_children_w2 = true;
        for v in 1..=g.vertex_count() {
            let gv = g.delete_closed_neighborhood(v).unwrap().value;
            let child = w2_or_false(&gv).map_err(|e| fail(name, e))?;
            all_children_w2 &= child;
            if w2 && !complete && !(child && gv.independence_number() + 1 == beta0) {
                return Err(fail(name, format!("W2 but G_{v} is W2 {child} with beta0 {}", gv.independence_number())));
            }
        }
        if g.is_well_covered() && all_children_w2 && !w2 {
            return Err(fail(name, "well-covered with every G_v in W2, yet not W2"));
        }
    }
    Ok(())
}

pub fn check_colon_comparisons(graphs: &[(String, Graph)]) -> Check {
    for (name, g) in graphs {
        if g.edge_count() == 0 || !g.isolated_vertices().is_empty() {
            continue;
        }
        let v = v_number(g).unwrap();
        let n = g.vertex_count();
        let colon: Vec<usize> = (1..=n).map(|t| v_number_of_colon(g, t)).collect::<Result<_, _>>().map_err(|e| fail(name, e))?;
        let added: Vec<usize> = (1..=n).map(|t| v_number_with_variable(g, t)).collect::<Result<_, _>>().map_err(|e| fail(name, e))?;
        if let Some(t) = (0..n).find(|&t| v > colon[t] + 1) {
            return Err(fail(name, format!("(a) fails at t{}: v = {v}, v(I:t) = {}", t + 1, colon[t])));
        }
        if !colon.iter().any(|&c| c <= v) {
            return Err(fail(name, "(b) no vertex with v(I:t) <= v"));
        }
        if v >= 2 && !colon.iter().any(|&c| c < v) {
            return Err(fail(name, "(c) no vertex with v(I:t) < v"));
        }
        if let Some(t) = (0..n).find(|&t| v > added[t] + 1) {
            return Err(fail(name, format!("(d) fails at t{}: v = {v}, v(I,t) = {}", t + 1, added[t])));
        }
        if !added.iter().any(|&c| c <= v) {
            return Err(fail(name, "(e) no vertex with v(I,t) <= v"));
        }
    }
    Ok(())
}

pub fn check_colon_dimension(graphs: &[(String, Graph)]) -> Check {
    for (name, g) in graphs {
        let i = edge_ideal(g);
        for t in 1..=g.vertex_count() {
            if g.degree(t) == 0 {
                continue;
            }
            let colon = i.colon_monomial(&vnum_core::Monomial::variable(g.vertex_count(), t)).unwrap();
            let dim = colon.to_clutter().unwrap().independence_number();
            let gv = g.delete_closed_neighborhood(t).unwrap().value;
            if dim != 1 + gv.independence_number() {
                return Err(fail(name, format!("t{t}: dim S/(I:t) = {dim}, beta0(G_t) = {}", gv.independence_number())));
            }
        }
    }
    Ok(())
}

pub fn check_cover_ideal(graphs: &[(String, Graph)], max_n: usize) -> Check {
    for (name, g) in graphs {
        if g.edge_count() == 0 || g.vertex_count() > max_n {
            continue;
        }
        let blocker = g.blocker().unwrap();
        let vc = v_number(&blocker).map_err(|e| fail(name, e))?;
        let alpha0 = g.cover_number();
        if alpha0 > vc + 1 {
            return Err(fail(name, format!("alpha0 = {alpha0} but v(I_c) = {vc}")));
        }
        let delta = SimplicialComplex::independence_complex(g);
        if delta.is_pure() && delta.is_vertex_decomposable() {
            for f in FIELDS {
                let r = regularity(&blocker, f);
                if vc != alpha0 - 1 || r != alpha0 - 1 {
                    return Err(fail(name, format!("v(I_c) = {vc}, reg over {f} = {r}, alpha0 = {alpha0}")));
                }
            }
        }
    }
    Ok(())
}

pub fn check_square_containment(graphs: &[(String, Graph)]) -> Check {
    for (name, g) in graphs {
        if g.edge_count() == 0 {
            continue;
        }
        let e = EdgeIdeal::new(g);
        let ordinary = e.ideal().ordinary_power(2);
        let symbolic = e.symbolic_power(2).unwrap();
        if !symbolic.contains_ideal(&ordinary).unwrap() {
            return Err(fail(name, "I^2 is not inside I^(2)"));
        }
        if (ordinary == symbolic) != g.is_triangle_free() {
            return Err(fail(name, format!("I^2 == I^(2) is {}, triangle-free {}", ordinary == symbolic, g.is_triangle_free())));
        }
        if symbolic.radical() != *e.ideal() {
            return Err(fail(name, "radical of I^(2) differs from I"));
        }
    }
    Ok(())
}

/// Combinatorial and algebraic v-numbers, plus both edge-critical routes.
pub fn check_route_agreement(graphs: &[Graph]) -> Check {
    for g in graphs {
        let name = vnum_core::formats::to_graph6(g);
        let a = v_number_combinatorial(g).map_err(|e| fail(&name, e))?;
        let b = v_number_algebraic(g).map_err(|e| fail(&name, e))?;
        if a != b {
            return Err(fail(&name, format!("combinatorial {a}, algebraic {b}")));
        }
        edge_critical_violation(g).map_err(|e| fail(&name, e))?;
    }
    Ok(())
}

pub fn check_symbolic_square_oracle(graphs: &[Graph], max_n: usize) -> Result<usize, String> {
    let mut compared = 0;
    for g in graphs.iter().filter(|g| g.vertex_count() <= max_n) {
        let name = vnum_core::formats::to_graph6(g);
        for f in FIELDS {
            let a = symbolic_square_cm_combinatorial(g, f).map_err(|e| fail(&name, e))?;
            let b = symbolic_square_cm_oracle(g, f).map_err(|e| fail(&name, e))?;
            if a != b {
                return Err(fail(&name, format!("over {f}: combinatorial {a}, oracle {b}")));
            }
            compared += 1;
        }
    }
    Ok(compared)
}

/// A CM symbolic square forces edge-criticality, W2, and passes to every
/// G minus a closed neighbourhood, which keeps no isolated vertices.
pub fn check_symbolic_square_consequences(graphs: &[(String, Graph)]) -> Check {
    let mut seen = 0;
    for (name, g) in graphs {
        if g.edge_count() == 0 || !symbolic_square_cm(g, FieldTag::Rationals).map_err(|e| fail(name, e))? {
            continue;
        }
        seen += 1;
        if !is_edge_critical(g).map_err(|e| fail(name, e))? {
            return Err(fail(name, "symbolic square CM but not edge-critical"));
        }
        let isolated_free = g.isolated_vertices().is_empty();
        if isolated_free && !is_w2(g).map_err(|e| fail(name, e))? {
            return Err(fail(name, "symbolic square CM but not W2"));
        }
        for t in 1..=g.vertex_count() {
            let gt = g.delete_closed_neighborhood(t).unwrap().value;
            if isolated_free && !gt.isolated_vertices().is_empty() {
                return Err(fail(name, format!("G_{t} has isolated vertices")));
            }
            if gt.edge_count() > 0 && !symbolic_square_cm(&gt, FieldTag::Rationals).map_err(|e| fail(name, e))? {
                return Err(fail(name, format!("symbolic square of G_{t} is not CM")));
            }
        }
    }
    if seen == 0 {
        return Err("no graph with a CM symbolic square".into());
    }
    Ok(())
}

/// All properties of the invariant suite, by name.
pub fn property_suite() -> Vec<(&'static str, Check)> {
    let graphs = all_graphs();
    let small: Vec<(String, Graph)> = graphs.iter().filter(|(_, g)| g.vertex_count() <= 7).cloned().collect();
    vec![
        ("v <= i <= beta0", check_v_between_i_and_beta0(&graphs)),
        ("reg <= dim per field", check_reg_at_most_dim(&graphs)),
        ("additivity of v and reg", check_additivity(corpus())),
        ("complete intersections", check_complete_intersections(16, 7)),
        ("whisker v equals i", check_whisker(&graphs, 5)),
        ("W2 iff v = dim", check_w2_iff_v_equals_dim(&graphs)),
        ("chordal complement gives v = reg = 1", check_chordal_complement(&graphs)),
        ("vertex decomposable gives v <= reg", check_vertex_decomposable_bound(&graphs)),
        ("beta0 = 2 equivalences", check_beta0_two(&graphs)),
        ("W2 heredity and converse", check_w2_heredity(&graphs)),
        ("colon and added-variable comparisons", check_colon_comparisons(&graphs)),
        ("colon dimension shift", check_colon_dimension(&graphs)),
        ("cover ideal bounds", check_cover_ideal(&small, 7)),
        ("I^2 inside I^(2)", check_square_containment(&graphs)),
        ("CM symbolic square consequences", check_symbolic_square_consequences(&graphs)),
    ]
}

pub fn vertex_set(n: usize, v: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, v.iter().copied()).unwrap()
}
