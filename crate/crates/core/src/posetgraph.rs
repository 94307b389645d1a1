//! Fundamental-orbit poset, its Demazure-labelled generator graph, linkings, and the
//! chain formulas built on them.
//!
//! Vertices are the outside generators `L^Λ a^μ` with `μ ∈ WΛ`, each carrying a witness
//! `w` with `wΛ = μ`. Witnesses are `u·t` where `u` is the minimal word carrying `Λ` to `μ`
//! and `t` is the longest suffix of the sweep word fixing `Λ`. Shapes with shorter suffix
//! sit higher. Within a shape, covers are Bruhat covers of witnesses; between consecutive
//! shapes, vertices with equal witness are joined.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::demazure::{apply, compose_unchecked, OpKind};
use crate::error::{Error, Result};
use crate::poly::GenSeries;
use crate::weight::Weight;
use crate::weyl::WeylElement;
use crate::Algebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitVertex {
    pub letter: String,
    pub shape: usize,
    pub weight: Weight,
    pub witness: WeylElement,
}

impl OrbitVertex {
    /// `L^{Λ^shape} a^weight`.
    pub fn label(&self, trunc: u32) -> GenSeries {
        GenSeries::generator(self.shape, self.weight.clone(), trunc)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Hasse,
    Extra,
}

/// A directed edge from a higher to a lower vertex. `label` is the Demazure datum `d`;
/// a Hasse edge contributes `1 + d`, an extra edge contributes `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub kind: EdgeKind,
    pub label: GenSeries,
}

#[derive(Clone, Debug)]
pub struct GeneratorGraph {
    pub algebra: String,
    pub rank: usize,
    /// Fundamental indices from the highest shape down.
    pub shape_order: Vec<usize>,
    pub vertices: Vec<OrbitVertex>,
    pub edges: Vec<GraphEdge>,
    above: Vec<Vec<bool>>,
}

impl GeneratorGraph {
    pub fn hasse_edges(&self) -> impl Iterator<Item = &GraphEdge> {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Hasse)
    }

    pub fn extra_edges(&self) -> impl Iterator<Item = &GraphEdge> {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Extra)
    }

    pub fn edge(&self, from: usize, to: usize) -> Option<&GraphEdge> {
        self.edges.iter().find(|e| e.from == from && e.to == to)
    }

    pub fn index_of(&self, letter: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.letter == letter)
    }

    /// Strict order of the orbit poset (Hasse edges only).
    pub fn is_above(&self, a: usize, b: usize) -> bool {
        self.above[a][b]
    }

    fn children(&self, v: usize, with_extra: bool) -> Vec<usize> {
        let mut c: Vec<usize> =
            self.edges.iter().filter(|e| e.from == v && (with_extra || e.kind == EdgeKind::Hasse)).map(|e| e.to).collect();
        c.sort_unstable();
        c
    }

    fn has_parent(&self, v: usize) -> bool {
        self.edges.iter().any(|e| e.to == v)
    }

    /// Pair string such as `AB` for an edge.
    pub fn edge_name(&self, e: &GraphEdge) -> String {
        format!("{}{}", self.vertices[e.from].letter, self.vertices[e.to].letter)
    }
}

fn letter(k: usize) -> String {
    if k < 26 {
        ((b'A' + k as u8) as char).to_string()
    } else {
        format!("V{k}")
    }
}

/// Longest suffix of the sweep word whose element fixes `Λʲ`.
fn stabilizing_suffix(alg: &Algebra, j: usize) -> Result<WeylElement> {
    let lam = alg.fundamental(j);
    let sweep = &alg.longest.sweep_word;
    for k in 0..=sweep.len() {
        let e = alg.group.element_of_word(&sweep[k..])?;
        if e.act(&lam) == lam {
            return Ok(e.clone());
        }
    }
    unreachable!("the empty suffix fixes every weight")
}

/// Orbit poset with zero labels and no extra edges.
pub fn build_orbit_poset(alg: &Algebra) -> Result<GeneratorGraph> {
    let r = alg.rank();
    let mut suffixes = Vec::new();
    for j in 1..=r {
        suffixes.push((j, stabilizing_suffix(alg, j)?));
    }
    suffixes.sort_by(|a, b| a.1.length.cmp(&b.1.length).then(a.0.cmp(&b.0)));
    let shape_order: Vec<usize> = suffixes.iter().map(|(j, _)| *j).collect();

    let mut vertices = Vec::new();
    for (j, t) in &suffixes {
        let lam = alg.fundamental(*j);
        let mut shape_vertices = Vec::new();
        for mu in alg.group.orbit(&alg.spec, &lam) {
            let word = alg.group.min_word_to_weight(&alg.spec, &lam, &mu)?;
            let witness = alg.group.mul(alg.group.element_of_word(&word)?, t).clone();
            if witness.act(&lam) != mu {
                return Err(Error::WitnessAssignment(format!("witness {:?} does not carry Λ{j} to {mu}", witness.word)));
            }
            shape_vertices.push(OrbitVertex { letter: String::new(), shape: *j, weight: mu, witness });
        }
        shape_vertices.sort_by(|a, b| (a.witness.length, &a.witness.word).cmp(&(b.witness.length, &b.witness.word)));
        vertices.extend(shape_vertices);
    }
    for (k, v) in vertices.iter_mut().enumerate() {
        v.letter = letter(k);
    }

    let covers: HashSet<(usize, usize)> = alg.group.bruhat_covers().into_iter().collect();
    let gidx: Vec<usize> = vertices.iter().map(|v| alg.group.index_of(&v.witness)).collect();
    let n = vertices.len();
    let mut adj = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            let (va, vb) = (&vertices[a], &vertices[b]);
            if va.shape == vb.shape {
                adj[a][b] = covers.contains(&(gidx[a], gidx[b]));
            } else {
                let pa = shape_order.iter().position(|&s| s == va.shape).unwrap();
                let pb = shape_order.iter().position(|&s| s == vb.shape).unwrap();
                adj[a][b] = pb == pa + 1 && va.witness == vb.witness;
            }
        }
    }
    let above = transitive_closure(&adj)?;
    let mut edges = Vec::new();
    for (a, row) in adj.iter().enumerate() {
        for b in 0..n {
            if row[b] && !(0..n).any(|c| c != b && row[c] && above[c][b]) {
                edges.push(GraphEdge { from: a, to: b, kind: EdgeKind::Hasse, label: GenSeries::zero(r, 1) });
            }
        }
    }
    Ok(GeneratorGraph { algebra: alg.name().to_string(), rank: r, shape_order, vertices, edges, above })
}

fn transitive_closure(adj: &[Vec<bool>]) -> Result<Vec<Vec<bool>>> {
    let n = adj.len();
    let mut reach = adj.to_vec();
    for k in 0..n {
        let via = reach[k].clone();
        for row in reach.iter_mut() {
            if row[k] {
                for (cell, &v) in row.iter_mut().zip(&via) {
                    *cell |= v;
                }
            }
        }
    }
    if (0..n).any(|i| reach[i][i]) {
        return Err(Error::WitnessAssignment("cover relations contain a cycle".into()));
    }
    Ok(reach)
}

fn intersect(top: &GenSeries, bottom: &GenSeries) -> Result<GenSeries> {
    let mut out = GenSeries::zero(top.rank(), top.trunc());
    for (l, a, x) in top.flat_terms() {
        let y = bottom.coeff(l).coeff(a);
        if y.is_zero() {
            continue;
        }
        if x.signum() != y.signum() {
            return Err(Error::SignMismatch { monomial: format!("L^{l} a^{a}"), top: x.to_string(), bottom: y.to_string() });
        }
        let m = x.abs().min(y.abs());
        out.add_term(l.clone(), a.clone(), if x.is_negative() { -m } else { m });
    }
    Ok(out)
}

/// `d(V₁,V₂)`: terms common to `d̂_{t₂}(L^Λ a^Λ)` and the negative-root sweep
/// `d̂⁻_{b₁}(L^Λ a^{w_LΛ})`, where `t₂` carries `Λ` to `V₂` and `b₁` carries `w_LΛ` to `V₁`.
pub fn edge_demazure_data(alg: &Algebra, graph: &GeneratorGraph, v1: usize, v2: usize) -> Result<GenSeries> {
    let (a, b) = (&graph.vertices[v1], &graph.vertices[v2]);
    if a.shape != b.shape {
        return Err(Error::UnsupportedFormula {
            algebra: alg.name().to_string(),
            reason: format!("edge data needs vertices of one shape, got {} and {}", a.letter, b.letter),
        });
    }
    let lam = alg.fundamental(a.shape);
    let low = alg.lowest(&lam);
    let t2 = alg.group.min_word_to_weight(&alg.spec, &lam, &b.weight)?;
    let b1 = alg.group.min_word_to_weight(&alg.spec, &low, &a.weight)?;
    let top = compose_unchecked(&alg.spec, OpKind::Small, &t2, &GenSeries::generator(a.shape, lam, 1));
    let bottom = compose_unchecked(&alg.spec, OpKind::DNeg, &b1, &GenSeries::generator(a.shape, low, 1));
    intersect(&top, &bottom)
}

/// `D̄ⱼV₁` for a same-shape edge whose endpoints differ by the simple reflection `rⱼ`.
pub fn dbar_label(alg: &Algebra, graph: &GeneratorGraph, e: &GraphEdge) -> Option<GenSeries> {
    let (a, b) = (&graph.vertices[e.from], &graph.vertices[e.to]);
    if a.shape != b.shape {
        return None;
    }
    let j = (1..=alg.rank()).find(|&j| alg.spec.reflect(j, &a.weight) == b.weight)?;
    Some(apply(&alg.spec, OpKind::Dbar, j, &a.label(1)))
}

fn remove_support(s: &mut GenSeries, other: &GenSeries) {
    for (l, a, _) in other.flat_terms() {
        let c = s.coeff(l).coeff(a);
        if !c.is_zero() {
            s.add_term(l.clone(), a.clone(), -c);
        }
    }
}

/// Orbit poset with Demazure labels on Hasse edges and the extra same-shape edges.
///
/// Same-shape Hasse edges get `d(V₁,V₂)`. Each remaining same-shape pair `V₁ > V₂` is then
/// examined in order of increasing witness-length gap; its datum minus vertex monomials and
/// minus the labels already placed on edges leaving `V₁` or entering `V₂` becomes an extra
/// edge when nonzero.
pub fn build_generator_graph(alg: &Algebra) -> Result<GeneratorGraph> {
    let mut g = build_orbit_poset(alg)?;
    let n = g.vertices.len();
    for k in 0..g.edges.len() {
        let (from, to) = (g.edges[k].from, g.edges[k].to);
        if g.vertices[from].shape == g.vertices[to].shape {
            g.edges[k].label = edge_demazure_data(alg, &g, from, to)?;
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| g.vertices[a].shape == g.vertices[b].shape && g.above[a][b] && g.edge(a, b).is_none())
        .collect();
    pairs.sort_by_key(|&(a, b)| (g.vertices[b].witness.length - g.vertices[a].witness.length, a, b));
    for (a, b) in pairs {
        let mut d = edge_demazure_data(alg, &g, a, b)?;
        for v in &g.vertices {
            if v.shape == g.vertices[a].shape {
                remove_support(&mut d, &v.label(1));
            }
        }
        let placed: Vec<GenSeries> = g.edges.iter().filter(|e| e.from == a || e.to == b).map(|e| e.label.clone()).collect();
        for l in &placed {
            remove_support(&mut d, l);
        }
        if !d.is_zero() {
            g.edges.push(GraphEdge { from: a, to: b, kind: EdgeKind::Extra, label: d });
        }
    }
    Ok(g)
}

/// A node of the poset extended by a top `1̂` and a bottom `0̂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Top,
    Vertex(usize),
    Bottom,
}

fn node_name(graph: &GeneratorGraph, n: Node) -> String {
    match n {
        Node::Top => "top".into(),
        Node::Vertex(v) => graph.vertices[v].letter.clone(),
        Node::Bottom => "bottom".into(),
    }
}

fn parse_node(graph: &GeneratorGraph, s: &str) -> Result<Node> {
    match s {
        "top" | "1" => Ok(Node::Top),
        "bottom" | "0" => Ok(Node::Bottom),
        _ => graph.index_of(s).map(Node::Vertex).ok_or_else(|| Error::InvalidLinking(format!("unknown vertex `{s}`"))),
    }
}

fn ext_children(graph: &GeneratorGraph, x: Node) -> Vec<Node> {
    match x {
        Node::Top => (0..graph.vertices.len()).filter(|&v| !graph.hasse_edges().any(|e| e.to == v)).map(Node::Vertex).collect(),
        Node::Vertex(v) => {
            let c = graph.children(v, false);
            if c.is_empty() {
                vec![Node::Bottom]
            } else {
                c.into_iter().map(Node::Vertex).collect()
            }
        }
        Node::Bottom => vec![],
    }
}

fn ext_geq(graph: &GeneratorGraph, x: Node, y: Node) -> bool {
    match (x, y) {
        _ if x == y => true,
        (Node::Top, _) | (_, Node::Bottom) => true,
        (Node::Vertex(a), Node::Vertex(b)) => graph.above[a][b],
        _ => false,
    }
}

fn ext_nodes(graph: &GeneratorGraph) -> Vec<Node> {
    std::iter::once(Node::Top).chain((0..graph.vertices.len()).map(Node::Vertex)).chain(std::iter::once(Node::Bottom)).collect()
}

/// All 3-element saturated chains `x ⋗ y ⋗ z` of the extended orbit poset.
pub fn links(graph: &GeneratorGraph) -> Vec<[Node; 3]> {
    let mut out = Vec::new();
    for x in ext_nodes(graph) {
        for y in ext_children(graph, x) {
            for z in ext_children(graph, y) {
                out.push([x, y, z]);
            }
        }
    }
    out
}

/// The minus part of a linking; every other link is plus.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Linking {
    pub minus: BTreeSet<[Node; 3]>,
}

impl Linking {
    /// Build from letter triples such as `["B", "D", "E"]`; `top`/`bottom` name `1̂`/`0̂`.
    pub fn from_letters(graph: &GeneratorGraph, triples: &[[&str; 3]]) -> Result<Linking> {
        let mut minus = BTreeSet::new();
        for t in triples {
            minus.insert([parse_node(graph, t[0])?, parse_node(graph, t[1])?, parse_node(graph, t[2])?]);
        }
        let linking = Linking { minus };
        validate_linking(graph, &linking)?;
        Ok(linking)
    }

    pub fn describe(&self, graph: &GeneratorGraph) -> Vec<String> {
        self.minus.iter().map(|t| t.iter().map(|&n| node_name(graph, n)).collect::<Vec<_>>().join(">")).collect()
    }
}

fn plus_chain_count(graph: &GeneratorGraph, linking: &Linking, prev: Option<Node>, cur: Node, y: Node) -> usize {
    ext_children(graph, cur)
        .into_iter()
        .filter(|&c| ext_geq(graph, c, y))
        .filter(|&c| prev.is_none_or(|p| !linking.minus.contains(&[p, cur, c])))
        .map(|c| if c == y { 1 } else { plus_chain_count(graph, linking, Some(cur), c, y) })
        .sum()
}

/// Every interval `x > y` must carry exactly one saturated chain with all links plus.
pub fn validate_linking(graph: &GeneratorGraph, linking: &Linking) -> Result<()> {
    let all: BTreeSet<[Node; 3]> = links(graph).into_iter().collect();
    if let Some(bad) = linking.minus.iter().find(|t| !all.contains(*t)) {
        let names: Vec<String> = bad.iter().map(|&n| node_name(graph, n)).collect();
        return Err(Error::InvalidLinking(format!("{} is not a link", names.join(">"))));
    }
    let nodes = ext_nodes(graph);
    for &x in &nodes {
        for &y in &nodes {
            if x != y && ext_geq(graph, x, y) {
                let k = plus_chain_count(graph, linking, None, x, y);
                if k != 1 {
                    return Err(Error::InvalidLinking(format!(
                        "{k} all-plus chains from {} to {}",
                        node_name(graph, x),
                        node_name(graph, y)
                    )));
                }
            }
        }
    }
    Ok(())
}

fn shape_of(graph: &GeneratorGraph, n: Node) -> Option<usize> {
    match n {
        Node::Vertex(v) => Some(graph.vertices[v].shape),
        _ => None,
    }
}

/// Linking whose plus links are exactly those on preferred chains. From each node the
/// preferred step towards `y` goes to a child of a different shape if possible, then to the
/// first child in vertex order; a reversed preference is tried if that fails.
pub fn default_linking(graph: &GeneratorGraph) -> Result<Linking> {
    let nodes = ext_nodes(graph);
    let all = links(graph);
    for cross_first in [true, false] {
        let mut plus = BTreeSet::new();
        for &x in &nodes {
            for &y in &nodes {
                if x == y || !ext_geq(graph, x, y) {
                    continue;
                }
                let mut chain = vec![x];
                let mut cur = x;
                while cur != y {
                    let next = ext_children(graph, cur)
                        .into_iter()
                        .filter(|&c| ext_geq(graph, c, y))
                        .min_by_key(|&c| {
                            let same = shape_of(graph, c).is_some() && shape_of(graph, c) == shape_of(graph, cur);
                            (same == cross_first, c)
                        })
                        .expect("y lies below cur");
                    chain.push(next);
                    cur = next;
                }
                for w in chain.windows(3) {
                    plus.insert([w[0], w[1], w[2]]);
                }
            }
        }
        let linking = Linking { minus: all.iter().filter(|t| !plus.contains(*t)).copied().collect() };
        if validate_linking(graph, &linking).is_ok() {
            return Ok(linking);
        }
    }
    Err(Error::LinkingFailure(format!("preferred-chain rule gives no linking for {}", graph.algebra)))
}

/// Maximal chains from top to bottom; optionally through extra edges too.
pub fn maximal_chains(graph: &GeneratorGraph, with_extra: bool) -> Vec<Vec<usize>> {
    fn walk(g: &GeneratorGraph, with_extra: bool, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = *path.last().unwrap();
        let c = g.children(v, with_extra);
        if c.is_empty() {
            out.push(path.clone());
        }
        for x in c {
            path.push(x);
            walk(g, with_extra, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in (0..graph.vertices.len()).filter(|&v| !graph.has_parent(v)) {
        walk(graph, with_extra, &mut vec![s], &mut out);
    }
    out
}

/// Vertices `V` of a chain with `(prev, V, next) ∈ Link⁻`, using `1̂`/`0̂` at the ends.
pub fn descent_set(linking: &Linking, chain: &[usize]) -> BTreeSet<usize> {
    let node = |k: isize| -> Node {
        if k < 0 {
            Node::Top
        } else if k as usize >= chain.len() {
            Node::Bottom
        } else {
            Node::Vertex(chain[k as usize])
        }
    };
    (0..chain.len() as isize).filter(|&k| linking.minus.contains(&[node(k - 1), node(k), node(k + 1)])).map(|k| chain[k as usize]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeBase {
    One,
    Vertex(usize),
    Nothing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `[V] = 1/(1 − V)`.
    Bracket(usize),
    /// The bare vertex label.
    Vertex(usize),
    /// `base + label` for the edge `from → to`.
    Edge { from: usize, to: usize, base: EdgeBase, label: GenSeries },
}

/// One summand of a chain formula, kept in factored form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTerm {
    pub vertices: Vec<usize>,
    pub factors: Vec<Factor>,
}

impl ChainTerm {
    pub fn evaluate(&self, graph: &GeneratorGraph, trunc: u32) -> Result<GenSeries> {
        let r = graph.rank;
        let mut acc = GenSeries::one(r, trunc);
        for f in &self.factors {
            let x = match f {
                Factor::Bracket(v) => graph.vertices[*v].label(trunc).bracket()?,
                Factor::Vertex(v) => graph.vertices[*v].label(trunc),
                Factor::Edge { base, label, .. } => {
                    let b = match base {
                        EdgeBase::One => GenSeries::one(r, trunc),
                        EdgeBase::Vertex(v) => graph.vertices[*v].label(trunc),
                        EdgeBase::Nothing => GenSeries::zero(r, trunc),
                    };
                    &b + &label.with_trunc(trunc)
                }
            };
            acc = &acc * &x;
        }
        Ok(acc)
    }

    /// Text such as `[AB]C[CEF]` or `[ABC](1+L1)[DE]`.
    pub fn render(&self, graph: &GeneratorGraph) -> String {
        let name = |v: &usize| graph.vertices[*v].letter.clone();
        let mut out = String::new();
        let mut open = false;
        for f in &self.factors {
            let text = match f {
                Factor::Bracket(v) => {
                    if !open {
                        out.push('[');
                        open = true;
                    }
                    out.push_str(&name(v));
                    continue;
                }
                Factor::Vertex(v) => name(v),
                Factor::Edge { base, label, .. } => match (base, label.is_zero()) {
                    (EdgeBase::One, true) => continue,
                    (EdgeBase::Vertex(v), true) => name(v),
                    (EdgeBase::One, false) => format!("(1+{label})"),
                    (EdgeBase::Vertex(v), false) => format!("({}+{label})", name(v)),
                    (EdgeBase::Nothing, _) => format!("({label})"),
                },
            };
            if open {
                out.push(']');
                open = false;
            }
            out.push_str(&text);
        }
        if open {
            out.push(']');
        }
        out
    }
}

/// How descents enter a chain term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentRule {
    /// A descent vertex replaces the `1` of its incoming Hasse-edge factor.
    Refined,
    /// Descent vertex labels multiply the whole term, edge factors stay `1 + d`.
    Literal,
}

/// Chain terms over the maximal chains of the orbit poset augmented by extra edges.
pub fn graph_terms(graph: &GeneratorGraph, linking: &Linking, rule: DescentRule) -> Vec<ChainTerm> {
    chain_terms(graph, linking, rule, true)
}

fn chain_terms(graph: &GeneratorGraph, linking: &Linking, rule: DescentRule, with_extra: bool) -> Vec<ChainTerm> {
    maximal_chains(graph, with_extra)
        .into_iter()
        .map(|chain| {
            let desc = descent_set(linking, &chain);
            let mut factors = vec![Factor::Bracket(chain[0])];
            for w in chain.windows(2) {
                let e = graph.edge(w[0], w[1]).expect("chain follows edges");
                let base = match e.kind {
                    EdgeKind::Extra => EdgeBase::Nothing,
                    EdgeKind::Hasse if rule == DescentRule::Refined && desc.contains(&w[1]) => EdgeBase::Vertex(w[1]),
                    EdgeKind::Hasse => EdgeBase::One,
                };
                factors.push(Factor::Edge { from: w[0], to: w[1], base, label: e.label.clone() });
                factors.push(Factor::Bracket(w[1]));
            }
            if rule == DescentRule::Literal {
                factors.extend(desc.iter().map(|&v| Factor::Vertex(v)));
            }
            ChainTerm { vertices: chain, factors }
        })
        .collect()
}

pub fn evaluate_terms(graph: &GeneratorGraph, terms: &[ChainTerm], trunc: u32) -> Result<GenSeries> {
    let mut x = GenSeries::zero(graph.rank, trunc);
    for t in terms {
        x = &x + &t.evaluate(graph, trunc)?;
    }
    Ok(x)
}

pub fn render_terms(graph: &GeneratorGraph, terms: &[ChainTerm]) -> String {
    terms.iter().map(|t| t.render(graph)).collect::<Vec<_>>().join(" + ")
}

/// The graph formula with the default linking and the refined descent rule.
pub fn x_via_graph(alg: &Algebra, trunc: u32) -> Result<GenSeries> {
    x_via_graph_with(alg, trunc, DescentRule::Refined)
}

pub fn x_via_graph_with(alg: &Algebra, trunc: u32, rule: DescentRule) -> Result<GenSeries> {
    let graph = build_generator_graph(alg)?;
    let linking = default_linking(&graph)?;
    evaluate_terms(&graph, &graph_terms(&graph, &linking, rule), trunc)
}

fn require_type_a(alg: &Algebra, what: &str) -> Result<()> {
    if alg.is_type_a() {
        Ok(())
    } else {
        Err(Error::UnsupportedFormula { algebra: alg.name().to_string(), reason: format!("{what} needs an algebra of type A") })
    }
}

/// Baclawski terms `[ℓ(m)]·ℓ(DS(m))` over maximal chains of the orbit poset.
pub fn baclawski_terms(alg: &Algebra, graph: &GeneratorGraph, linking: &Linking) -> Result<Vec<ChainTerm>> {
    require_type_a(alg, "the Baclawski formula")?;
    validate_linking(graph, linking)?;
    Ok(chain_terms(graph, linking, DescentRule::Refined, false))
}

pub fn baclawski_x(alg: &Algebra, trunc: u32, linking: Option<&Linking>) -> Result<GenSeries> {
    let graph = build_orbit_poset(alg)?;
    let default;
    let linking = match linking {
        Some(l) => l,
        None => {
            default = default_linking(&graph)?;
            &default
        }
    };
    evaluate_terms(&graph, &baclawski_terms(alg, &graph, linking)?, trunc)
}

/// `Σ ℓ(m)` over multichains `x₁ ≥ x₂ ≥ ⋯ ≥ x_k` with `k ≤ trunc`.
pub fn x_via_multichains(alg: &Algebra, trunc: u32) -> Result<GenSeries> {
    require_type_a(alg, "the multichain formula")?;
    let graph = build_orbit_poset(alg)?;
    let n = graph.vertices.len();
    let labels: Vec<GenSeries> = graph.vertices.iter().map(|v| v.label(trunc)).collect();
    fn walk(g: &GeneratorGraph, labels: &[GenSeries], last: usize, left: u32, acc: &GenSeries, out: &mut GenSeries) {
        if left == 0 {
            return;
        }
        for y in 0..g.vertices.len() {
            if y == last || g.above[last][y] {
                let next = acc * &labels[y];
                *out = &*out + &next;
                walk(g, labels, y, left - 1, &next, out);
            }
        }
    }
    let one = GenSeries::one(graph.rank, trunc);
    let mut out = one.clone();
    for x in 0..n {
        if trunc == 0 {
            break;
        }
        out = &out + &labels[x];
        walk(&graph, &labels, x, trunc - 1, &labels[x], &mut out);
    }
    Ok(out)
}

/// Label of a multichain given as letters, e.g. `A A B D D E F F F`.
pub fn multichain_label(graph: &GeneratorGraph, letters: &[&str], trunc: u32) -> Result<GenSeries> {
    let mut acc = GenSeries::one(graph.rank, trunc);
    let mut prev: Option<usize> = None;
    for l in letters {
        let v = graph.index_of(l).ok_or_else(|| Error::Parse(format!("unknown vertex `{l}`")))?;
        if let Some(p) = prev {
            if p != v && !graph.above[p][v] {
                return Err(Error::Parse(format!("{} is not below {}", l, graph.vertices[p].letter)));
            }
        }
        acc = &acc * &graph.vertices[v].label(trunc);
        prev = Some(v);
    }
    Ok(acc)
}

/// Independent formal symbols for vertices and for each inside monomial on each edge label,
/// so that chain terms can be expanded without identifying equal monomials.
#[derive(Clone, Debug)]
pub struct FormalSymbols {
    names: Vec<String>,
    vertex_count: usize,
    inside: BTreeMap<(usize, usize, Weight, Weight), usize>,
}

impl FormalSymbols {
    pub fn new(graph: &GeneratorGraph) -> Self {
        let mut names: Vec<String> = graph.vertices.iter().map(|v| v.letter.clone()).collect();
        let mut inside = BTreeMap::new();
        for e in &graph.edges {
            for (l, a, _) in e.label.flat_terms() {
                let key = (e.from, e.to, l.clone(), a.clone());
                if let Entry::Vacant(slot) = inside.entry(key) {
                    slot.insert(names.len());
                    names.push(format!("{}:L^{l}a^{a}", graph.edge_name(e)));
                }
            }
        }
        FormalSymbols { names, vertex_count: graph.vertices.len(), inside }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn vertex_symbol(&self, v: usize) -> Result<usize> {
        if v < self.vertex_count {
            Ok(v)
        } else {
            Err(Error::Parse(format!("vertex {v} out of range")))
        }
    }

    pub fn inside_symbol(&self, edge: (usize, usize), l: &Weight, a: &Weight) -> Result<usize> {
        self.inside
            .get(&(edge.0, edge.1, l.clone(), a.clone()))
            .copied()
            .ok_or_else(|| Error::Parse(format!("no label monomial L^{l} a^{a} on edge {edge:?}")))
    }

    fn symbol(&self, s: usize, trunc: u32) -> GenSeries {
        let n = self.len();
        GenSeries::monomial(Weight::fundamental(n, s + 1), Weight::zero(n), trunc)
    }

    /// Expand chain terms in the formal symbols. The truncation is two more than the
    /// largest number of factors without a constant term, so every product of two symbols
    /// that can occur does occur in the result.
    pub fn expand(&self, terms: &[ChainTerm]) -> Result<GenSeries> {
        let n = self.len();
        let mandatory = |t: &ChainTerm| {
            t.factors
                .iter()
                .filter(|f| matches!(f, Factor::Vertex(_) | Factor::Edge { base: EdgeBase::Vertex(_) | EdgeBase::Nothing, .. }))
                .count()
        };
        let trunc = 2 + terms.iter().map(mandatory).max().unwrap_or(0) as u32;
        let mut total = GenSeries::zero(n, trunc);
        for t in terms {
            let mut acc = GenSeries::one(n, trunc);
            for f in &t.factors {
                let x = match f {
                    Factor::Bracket(v) => self.symbol(self.vertex_symbol(*v)?, trunc).bracket()?,
                    Factor::Vertex(v) => self.symbol(self.vertex_symbol(*v)?, trunc),
                    Factor::Edge { from, to, base, label } => {
                        let mut s = match base {
                            EdgeBase::One => GenSeries::one(n, trunc),
                            EdgeBase::Vertex(v) => self.symbol(self.vertex_symbol(*v)?, trunc),
                            EdgeBase::Nothing => GenSeries::zero(n, trunc),
                        };
                        for (l, a, c) in label.flat_terms() {
                            s = &s + &self.symbol(self.inside_symbol((*from, *to), l, a)?, trunc).scale(c);
                        }
                        s
                    }
                };
                acc = &acc * &x;
            }
            total = &total + &acc;
        }
        Ok(total)
    }
}

/// True when some monomial of a formal expansion is divisible by `s_a·s_b`.
pub fn formal_contains_product(s: &GenSeries, a: usize, b: usize) -> bool {
    s.coeffs().keys().any(|l| if a == b { l[a] >= 2 } else { l[a] >= 1 && l[b] >= 1 })
}

/// Deterministic Graphviz rendering: Hasse edges solid, extra edges dashed.
pub fn export_dot(graph: &GeneratorGraph) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=TB;\n", graph.algebra);
    for v in &graph.vertices {
        let word: Vec<String> = v.witness.word.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(
            out,
            "  {} [label=\"{}\\n[{}; {}]\\nw={}\"];",
            v.letter,
            v.letter,
            v.shape,
            v.weight,
            if word.is_empty() { "e".to_string() } else { word.join("") }
        );
    }
    for e in &graph.edges {
        let (a, b) = (&graph.vertices[e.from].letter, &graph.vertices[e.to].letter);
        match (e.kind, e.label.is_zero()) {
            (EdgeKind::Hasse, true) => {
                let _ = writeln!(out, "  {a} -> {b};");
            }
            (EdgeKind::Hasse, false) => {
                let _ = writeln!(out, "  {a} -> {b} [label=\"1+{}\"];", e.label);
            }
            (EdgeKind::Extra, _) => {
                let _ = writeln!(out, "  {a} -> {b} [style=dashed, label=\"{}\"];", e.label);
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn to_json(graph: &GeneratorGraph, linking: Option<&Linking>) -> Value {
    let edge = |e: &GraphEdge| {
        json!({
            "from": graph.vertices[e.from].letter,
            "to": graph.vertices[e.to].letter,
            "label": e.label.to_json(),
            "label_text": e.label.to_string(),
        })
    };
    json!({
        "schema": 1,
        "algebra": graph.algebra,
        "shape_order": graph.shape_order,
        "vertices": graph.vertices.iter().map(|v| json!({
            "letter": v.letter,
            "shape": v.shape,
            "weight": v.weight.0,
            "witness": v.witness.word,
        })).collect::<Vec<_>>(),
        "hasse_edges": graph.hasse_edges().map(edge).collect::<Vec<_>>(),
        "extra_edges": graph.extra_edges().map(edge).collect::<Vec<_>>(),
        "link_minus": linking.map(|l| l.describe(graph)),
    })
}

/// Sum of `|c|` over an edge label, used to sanity-check unit labels.
pub fn label_weight(label: &GenSeries) -> BigInt {
    label.flat_terms().into_iter().map(|(_, _, c)| c.abs()).sum()
}
