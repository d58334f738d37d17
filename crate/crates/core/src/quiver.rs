//! Quivers, the permutation `f` and its derived data.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{GdqError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Vertices and arrows are kept in lexicographic order of their ids, so index
/// order is name order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl Quiver {
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Quiver>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let mut vs: Vec<String> = vertices.into_iter().map(Into::into).collect();
        vs.sort();
        for w in vs.windows(2) {
            if w[0] == w[1] {
                return Err(GdqError::invalid(format!("duplicate vertex `{}`", w[0])));
            }
        }
        for v in &vs {
            check_id(v)?;
        }
        let vertex_index: HashMap<String, usize> =
            vs.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let mut raw: Vec<(String, String, String)> = arrows.into_iter().collect();
        raw.sort();
        let mut arrows = Vec::with_capacity(raw.len());
        for (name, s, t) in raw {
            check_id(&name)?;
            if arrows.last().map(|a: &Arrow| a.name == name).unwrap_or(false) {
                return Err(GdqError::invalid(format!("duplicate arrow `{name}`")));
            }
            let source = *vertex_index.get(&s).ok_or_else(|| GdqError::UnknownVertex(s.clone()))?;
            let target = *vertex_index.get(&t).ok_or_else(|| GdqError::UnknownVertex(t.clone()))?;
            arrows.push(Arrow { name, source, target });
        }
        let arrow_index = arrows.iter().enumerate().map(|(i, a)| (a.name.clone(), i)).collect();
        let mut out = vec![Vec::new(); vs.len()];
        let mut inc = vec![Vec::new(); vs.len()];
        for (i, a) in arrows.iter().enumerate() {
            out[a.source].push(i);
            inc[a.target].push(i);
        }
        Ok(Quiver { vertices: vs, arrows, vertex_index, arrow_index, out, inc })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn source(&self, a: usize) -> usize {
        self.arrows[a].source
    }

    pub fn target(&self, a: usize) -> usize {
        self.arrows[a].target
    }

    pub fn is_loop(&self, a: usize) -> bool {
        self.arrows[a].source == self.arrows[a].target
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.arrows[a].name
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.arrow_index.get(name).copied()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_id(name).ok_or_else(|| GdqError::UnknownVertex(name.to_string()))
    }

    pub fn arrow_by_name(&self, name: &str) -> Result<usize> {
        self.arrow_id(name).ok_or_else(|| GdqError::UnknownArrow(name.to_string()))
    }

    pub fn out_arrows(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_arrows(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &a in self.out[v].iter().chain(&self.inc[v]) {
                for w in [self.arrows[a].source, self.arrows[a].target] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Quiver with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| (a.name.clone(), self.vertices[a.target].clone(), self.vertices[a.source].clone()));
        Quiver::new(self.vertices.clone(), arrows).expect("opposite of a valid quiver")
    }

    /// Sub-quiver on the kept arrows; all vertices survive.
    pub fn without_arrows(&self, drop: &BTreeSet<usize>) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, a)| (a.name.clone(), self.vertices[a.source].clone(), self.vertices[a.target].clone()));
        Quiver::new(self.vertices.clone(), arrows).expect("sub-quiver of a valid quiver")
    }
}

fn check_id(id: &str) -> Result<()> {
    if id.is_empty() || id.chars().any(|c| c.is_whitespace() || "()#".contains(c)) {
        return Err(GdqError::invalid(format!("bad identifier `{id}`")));
    }
    Ok(())
}

/// An element of `Q₁ ∪ I₀`, the domain of the generalized permutation f′.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Arrow(usize),
    Vertex(usize),
}

impl Node {
    pub fn arrow(self) -> Option<usize> {
        match self {
            Node::Arrow(a) => Some(a),
            Node::Vertex(_) => None,
        }
    }
}

/// A quiver together with f′. Each arrow has a successor that is either an
/// arrow or a vertex; a vertex successor is always followed by the unique
/// arrow leaving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FQuiver {
    quiver: Quiver,
    next: Vec<Node>,
}

impl FQuiver {
    /// Builds f′ from cycle notation. Each token names an arrow or a vertex,
    /// and every arrow must occur exactly once.
    pub fn from_cycles<S: AsRef<str>>(quiver: Quiver, cycles: &[Vec<S>]) -> Result<FQuiver> {
        let mut next: Vec<Option<Node>> = vec![None; quiver.arrow_count()];
        let mut seen_vertices = BTreeSet::new();
        for cycle in cycles {
            if cycle.is_empty() {
                return Err(GdqError::invalid("empty cycle"));
            }
            let nodes = cycle
                .iter()
                .map(|t| resolve(&quiver, t.as_ref()))
                .collect::<Result<Vec<_>>>()?;
            for (k, &node) in nodes.iter().enumerate() {
                let succ = nodes[(k + 1) % nodes.len()];
                match node {
                    Node::Arrow(a) => {
                        if next[a].is_some() {
                            return Err(GdqError::invalid(format!(
                                "arrow `{}` occurs twice in f",
                                quiver.arrow_name(a)
                            )));
                        }
                        next[a] = Some(succ);
                    }
                    Node::Vertex(v) => {
                        if !seen_vertices.insert(v) {
                            return Err(GdqError::invalid(format!(
                                "vertex `{}` occurs twice in f",
                                quiver.vertex_name(v)
                            )));
                        }
                        let out = quiver.out_arrows(v);
                        if out.len() != 1 || succ != Node::Arrow(out[0]) {
                            return Err(GdqError::invalid(format!(
                                "vertex `{}` in f must be followed by its only outgoing arrow",
                                quiver.vertex_name(v)
                            )));
                        }
                        if matches!(nodes[(k + nodes.len() - 1) % nodes.len()], Node::Vertex(_)) {
                            return Err(GdqError::invalid("two vertices adjacent in an f cycle"));
                        }
                    }
                }
            }
        }
        let next = next
            .into_iter()
            .enumerate()
            .map(|(a, n)| {
                n.ok_or_else(|| {
                    GdqError::invalid(format!("arrow `{}` missing from f", quiver.arrow_name(a)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FQuiver { quiver, next })
    }

    /// f given as a total permutation of arrow indices.
    pub fn from_arrow_permutation(quiver: Quiver, f: Vec<usize>) -> Result<FQuiver> {
        if f.len() != quiver.arrow_count() {
            return Err(GdqError::invalid("f has the wrong length"));
        }
        let mut hit = vec![false; f.len()];
        for &b in &f {
            if b >= f.len() || std::mem::replace(&mut hit[b], true) {
                return Err(GdqError::invalid("f is not a permutation"));
            }
        }
        Ok(FQuiver { quiver, next: f.into_iter().map(Node::Arrow).collect() })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// f′(α).
    pub fn next(&self, a: usize) -> Node {
        self.next[a]
    }

    pub fn next_nodes(&self) -> &[Node] {
        &self.next
    }

    /// The arrow following α in its f′ cycle, skipping a 1-vertex if present.
    pub fn next_arrow(&self, a: usize) -> usize {
        match self.next[a] {
            Node::Arrow(b) => b,
            Node::Vertex(v) => self.quiver.out_arrows(v)[0],
        }
    }

    pub fn prev_arrow(&self, b: usize) -> usize {
        (0..self.next.len())
            .find(|&a| self.next_arrow(a) == b)
            .expect("f′ is a permutation")
    }

    /// Vertices occurring in f′, that is the 1-vertices.
    pub fn f_vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .next
            .iter()
            .filter_map(|n| match n {
                Node::Vertex(v) => Some(*v),
                _ => None,
            })
            .collect();
        vs.sort();
        vs
    }

    /// The other arrow with the same source, if the source is a 2-vertex.
    pub fn bar(&self, a: usize) -> Option<usize> {
        let out = self.quiver.out_arrows(self.quiver.source(a));
        match out {
            [x, y] if *x == a => Some(*y),
            [x, y] if *y == a => Some(*x),
            _ => None,
        }
    }

    /// The other arrow with the same target.
    pub fn star(&self, a: usize) -> Option<usize> {
        let inc = self.quiver.in_arrows(self.quiver.target(a));
        match inc {
            [x, y] if *x == a => Some(*y),
            [x, y] if *y == a => Some(*x),
            _ => None,
        }
    }

    /// g′(α): the outgoing arrow at t(α) other than f′(α), or the only one.
    pub fn g(&self, a: usize) -> usize {
        match self.next[a] {
            Node::Vertex(v) => self.quiver.out_arrows(v)[0],
            Node::Arrow(b) => match self.bar(b) {
                Some(c) => c,
                None => b,
            },
        }
    }

    /// Cycles of f′ on `Q₁ ∪ I₀`, each starting at its least arrow, ordered by
    /// that arrow.
    pub fn f_cycles(&self) -> Vec<Vec<Node>> {
        let mut seen = vec![false; self.next.len()];
        let mut cycles = Vec::new();
        for start in 0..self.next.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            loop {
                seen[a] = true;
                cycle.push(Node::Arrow(a));
                if let Node::Vertex(v) = self.next[a] {
                    cycle.push(Node::Vertex(v));
                }
                a = self.next_arrow(a);
                if a == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn node_name(&self, n: Node) -> &str {
        match n {
            Node::Arrow(a) => self.quiver.arrow_name(a),
            Node::Vertex(v) => self.quiver.vertex_name(v),
        }
    }

    pub fn orbit_data(&self) -> OrbitData {
        OrbitData::compute(self)
    }

    /// Structural check of the generalized presentation shape; empty means
    /// well formed.
    pub fn shape_violations(&self) -> Vec<Violation> {
        let q = &self.quiver;
        let mut out = Vec::new();
        if q.arrow_count() == 0 {
            out.push(Violation::NoArrows);
        }
        for v in 0..q.vertex_count() {
            let (o, i) = (q.out_arrows(v).len(), q.in_arrows(v).len());
            if o != i || !(1..=2).contains(&o) {
                out.push(Violation::Valence { vertex: q.vertex_name(v).to_string(), out: o, inc: i });
            }
        }
        let fvs = self.f_vertices();
        for v in 0..q.vertex_count() {
            let one = q.out_arrows(v).len() == 1 && q.in_arrows(v).len() == 1;
            if one && !fvs.contains(&v) {
                out.push(Violation::OneVertexMissing { vertex: q.vertex_name(v).to_string() });
            }
            if !one && fvs.contains(&v) {
                out.push(Violation::NotOneVertex { vertex: q.vertex_name(v).to_string() });
            }
        }
        for a in 0..q.arrow_count() {
            let ok = match self.next[a] {
                Node::Arrow(b) => q.source(b) == q.target(a),
                Node::Vertex(v) => q.target(a) == v,
            };
            if !ok {
                out.push(Violation::SourceMismatch {
                    arrow: q.arrow_name(a).to_string(),
                    next: self.node_name(self.next[a]).to_string(),
                });
            }
        }
        for cycle in self.f_cycles() {
            let has_vertex = cycle.iter().any(|n| matches!(n, Node::Vertex(_)));
            if cycle.len() > 3 || (has_vertex && cycle.len() != 3) {
                out.push(Violation::BadCycle { cycle: self.cycle_names(&cycle) });
            }
        }
        if q.vertex_count() > 0 && !q.is_connected() {
            out.push(Violation::Disconnected);
        }
        out
    }

    pub fn cycle_names(&self, cycle: &[Node]) -> Vec<String> {
        cycle.iter().map(|&n| self.node_name(n).to_string()).collect()
    }

    pub fn opposite(&self) -> FQuiver {
        let q = self.quiver.opposite();
        let mut next = vec![Node::Arrow(0); self.next.len()];
        for a in 0..self.next.len() {
            next[self.next_arrow(a)] = Node::Arrow(a);
        }
        FQuiver { quiver: q, next }
    }
}

fn resolve(q: &Quiver, token: &str) -> Result<Node> {
    match (q.arrow_id(token), q.vertex_id(token)) {
        (Some(_), Some(_)) => {
            Err(GdqError::invalid(format!("`{token}` names both an arrow and a vertex")))
        }
        (Some(a), None) => Ok(Node::Arrow(a)),
        (None, Some(v)) => Ok(Node::Vertex(v)),
        (None, None) => Err(GdqError::UnknownArrow(token.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooFewVertices(usize),
    NoArrows,
    NotTwoRegular { vertex: String, out: usize, inc: usize },
    Valence { vertex: String, out: usize, inc: usize },
    SourceMismatch { arrow: String, next: String },
    BadCycle { cycle: Vec<String> },
    OneVertexMissing { vertex: String },
    NotOneVertex { vertex: String },
    VertexInF { vertex: String },
    Disconnected,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewVertices(n) => write!(f, "needs at least 2 vertices, found {n}"),
            Violation::NoArrows => write!(f, "quiver has no arrows"),
            Violation::NotTwoRegular { vertex, out, inc } => {
                write!(f, "vertex {vertex} is not 2-regular (out {out}, in {inc})")
            }
            Violation::Valence { vertex, out, inc } => {
                write!(f, "vertex {vertex} has out-valence {out} and in-valence {inc}")
            }
            Violation::SourceMismatch { arrow, next } => {
                write!(f, "s(f({arrow})) = s({next}) differs from t({arrow})")
            }
            Violation::BadCycle { cycle } => write!(f, "f³ is not the identity on cycle ({})", cycle.join(" ")),
            Violation::OneVertexMissing { vertex } => write!(f, "1-vertex {vertex} does not occur in f"),
            Violation::NotOneVertex { vertex } => write!(f, "vertex {vertex} occurs in f but is not a 1-vertex"),
            Violation::VertexInF { vertex } => write!(f, "f contains vertex {vertex}"),
            Violation::Disconnected => write!(f, "quiver is not connected"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every triangulation quiver condition and lists each failure.
pub fn validate_triangulation_quiver(fq: &FQuiver) -> ValidationReport {
    let q = fq.quiver();
    let mut violations = Vec::new();
    if q.vertex_count() < 2 {
        violations.push(Violation::TooFewVertices(q.vertex_count()));
    }
    for v in 0..q.vertex_count() {
        let (o, i) = (q.out_arrows(v).len(), q.in_arrows(v).len());
        if o != 2 || i != 2 {
            violations.push(Violation::NotTwoRegular { vertex: q.vertex_name(v).to_string(), out: o, inc: i });
        }
    }
    for v in fq.f_vertices() {
        violations.push(Violation::VertexInF { vertex: q.vertex_name(v).to_string() });
    }
    for a in 0..q.arrow_count() {
        if let Node::Arrow(b) = fq.next(a) {
            if q.source(b) != q.target(a) {
                violations.push(Violation::SourceMismatch {
                    arrow: q.arrow_name(a).to_string(),
                    next: q.arrow_name(b).to_string(),
                });
            }
        }
    }
    for cycle in fq.f_cycles() {
        if cycle.len() != 1 && cycle.len() != 3 {
            violations.push(Violation::BadCycle { cycle: fq.cycle_names(&cycle) });
        }
    }
    if q.vertex_count() > 0 && !q.is_connected() {
        violations.push(Violation::Disconnected);
    }
    ValidationReport { violations }
}

/// A valid, connected triangulation quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationQuiver {
    fq: FQuiver,
}

impl TriangulationQuiver {
    pub fn new(fq: FQuiver) -> Result<TriangulationQuiver> {
        let report = validate_triangulation_quiver(&fq);
        if !report.is_valid() {
            return Err(GdqError::invalid(report.to_string()));
        }
        Ok(TriangulationQuiver { fq })
    }

    pub fn from_cycles<S: AsRef<str>>(quiver: Quiver, cycles: &[Vec<S>]) -> Result<Self> {
        Self::new(FQuiver::from_cycles(quiver, cycles)?)
    }

    pub fn fquiver(&self) -> &FQuiver {
        &self.fq
    }

    pub fn into_fquiver(self) -> FQuiver {
        self.fq
    }

    pub fn quiver(&self) -> &Quiver {
        self.fq.quiver()
    }

    pub fn f(&self, a: usize) -> usize {
        self.fq.next_arrow(a)
    }

    pub fn bar(&self, a: usize) -> usize {
        self.fq.bar(a).expect("2-regular")
    }

    pub fn g(&self, a: usize) -> usize {
        self.bar(self.f(a))
    }

    /// f-fixed loops.
    pub fn border_loops(&self) -> Vec<usize> {
        (0..self.quiver().arrow_count()).filter(|&a| self.f(a) == a).collect()
    }

    /// Vertices carrying an f-fixed loop.
    pub fn border(&self) -> BTreeSet<usize> {
        self.border_loops().into_iter().map(|a| self.quiver().source(a)).collect()
    }

    pub fn orbit_data(&self) -> OrbitData {
        self.fq.orbit_data()
    }

    pub fn f_census(&self) -> FCensus {
        f_orbit_census(self)
    }

    pub fn opposite(&self) -> TriangulationQuiver {
        TriangulationQuiver { fq: self.fq.opposite() }
    }
}

/// ¯, g and the g-orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitData {
    pub bar: Vec<Option<usize>>,
    pub g: Vec<usize>,
    /// Each orbit starts at its least arrow; orbits sorted by that arrow.
    pub orbits: Vec<Vec<usize>>,
    pub orbit_of: Vec<usize>,
}

impl OrbitData {
    fn compute(fq: &FQuiver) -> OrbitData {
        let n = fq.quiver().arrow_count();
        let bar = (0..n).map(|a| fq.bar(a)).collect();
        let g: Vec<usize> = (0..n).map(|a| fq.g(a)).collect();
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let mut orbit = Vec::new();
            let mut a = start;
            while orbit_of[a] == usize::MAX {
                orbit_of[a] = orbits.len();
                orbit.push(a);
                a = g[a];
            }
            orbits.push(orbit);
        }
        OrbitData { bar, g, orbits, orbit_of }
    }

    pub fn n(&self, a: usize) -> usize {
        self.orbits[self.orbit_of[a]].len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FCensus {
    pub fixed: usize,
    pub two_cycles: usize,
    pub three_cycles: usize,
}

pub fn f_orbit_census(tq: &TriangulationQuiver) -> FCensus {
    let mut c = FCensus::default();
    for cycle in tq.fquiver().f_cycles() {
        match cycle.len() {
            1 => c.fixed += 1,
            2 => c.two_cycles += 1,
            _ => c.three_cycles += 1,
        }
    }
    c
}

/// Builds a quiver from `(name, source, target)` triples of string slices.
pub fn quiver_from_strs(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
    Quiver::new(
        vertices.iter().copied(),
        arrows.iter().map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
    )
}

/// Counts arrows by (source, target); useful for multigraph comparisons.
pub fn adjacency(q: &Quiver) -> BTreeMap<(usize, usize), usize> {
    let mut m = BTreeMap::new();
    for a in q.arrows() {
        *m.entry((a.source, a.target)).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex43() -> TriangulationQuiver {
        let q = quiver_from_strs(
            &["1", "2", "3"],
            &[
                ("alpha", "1", "2"),
                ("beta", "2", "3"),
                ("gamma", "3", "1"),
                ("eps", "1", "1"),
                ("eta", "2", "2"),
                ("mu", "3", "3"),
            ],
        )
        .unwrap();
        TriangulationQuiver::from_cycles(q, &[vec!["alpha", "beta", "gamma"], vec!["eps"], vec!["eta"], vec!["mu"]])
            .unwrap()
    }

    fn names(tq: &TriangulationQuiver, orbit: &[usize]) -> Vec<String> {
        orbit.iter().map(|&a| tq.quiver().arrow_name(a).to_string()).collect()
    }

    #[test]
    fn single_g_orbit_of_example_43() {
        let tq = ex43();
        let od = tq.orbit_data();
        assert_eq!(od.orbits.len(), 1);
        assert_eq!(names(&tq, &od.orbits[0]), ["alpha", "eta", "beta", "mu", "gamma", "eps"]);
    }

    #[test]
    fn census_of_example_43() {
        let c = ex43().f_census();
        assert_eq!((c.fixed, c.two_cycles, c.three_cycles), (3, 0, 1));
    }

    #[test]
    fn one_vertex_two_loops_fails_only_vertex_count() {
        let q = quiver_from_strs(&["1"], &[("a", "1", "1"), ("b", "1", "1")]).unwrap();
        let fq = FQuiver::from_cycles(q, &[vec!["a"], vec!["b"]]).unwrap();
        let r = validate_triangulation_quiver(&fq);
        assert_eq!(r.violations, vec![Violation::TooFewVertices(1)]);
    }

    #[test]
    fn double_two_cycle_admits_no_f() {
        let q = quiver_from_strs(
            &["1", "2"],
            &[("a1", "1", "2"), ("a2", "1", "2"), ("b1", "2", "1"), ("b2", "2", "1")],
        )
        .unwrap();
        let mut perms = vec![vec![0usize, 1, 2, 3]];
        let mut all = Vec::new();
        while let Some(p) = perms.pop() {
            if all.contains(&p) {
                continue;
            }
            for i in 0..4 {
                for j in i + 1..4 {
                    let mut r = p.clone();
                    r.swap(i, j);
                    perms.push(r);
                }
            }
            all.push(p);
        }
        assert_eq!(all.len(), 24);
        for p in all {
            let fq = FQuiver::from_arrow_permutation(q.clone(), p).unwrap();
            let r = validate_triangulation_quiver(&fq);
            assert!(!r.is_valid());
            assert!(r.violations.iter().any(|v| matches!(
                v,
                Violation::SourceMismatch { .. } | Violation::BadCycle { .. }
            )));
        }
    }

    #[test]
    fn names_are_sorted() {
        let q = quiver_from_strs(&["b", "a"], &[("y", "a", "b"), ("x", "b", "a")]).unwrap();
        assert_eq!(q.vertices(), ["a", "b"]);
        assert_eq!(q.arrow_name(0), "x");
        assert_eq!(q.source(0), 1);
    }

    #[test]
    fn four_cycle_is_reported_by_name() {
        let q = quiver_from_strs(
            &["1", "2"],
            &[("a", "1", "1"), ("b", "1", "2"), ("c", "2", "1"), ("d", "2", "2")],
        )
        .unwrap();
        let fq = FQuiver::from_cycles(q, &[vec!["a", "b", "d", "c"]]).unwrap();
        let r = validate_triangulation_quiver(&fq);
        assert!(r.violations.contains(&Violation::BadCycle { cycle: vec!["a".into(), "b".into(), "d".into(), "c".into()] }));
    }

    #[test]
    fn opposite_reverses_f() {
        let tq = ex43();
        let op = tq.opposite();
        for a in 0..6 {
            assert_eq!(op.f(tq.f(a)), a);
        }
    }
}
