//! Directed triangulated surfaces and their triangulation quivers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{GdqError, Result};
use crate::quiver::{Quiver, TriangulationQuiver};

/// Edges plus oriented triangles; a self-folded triangle is stored as `(a a b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceTriangulation {
    edges: Vec<String>,
    triangles: Vec<[String; 3]>,
}

impl SurfaceTriangulation {
    pub fn new<E, T>(edges: E, triangles: T) -> SurfaceTriangulation
    where
        E: IntoIterator,
        E::Item: Into<String>,
        T: IntoIterator<Item = [String; 3]>,
    {
        let mut edges: Vec<String> = edges.into_iter().map(Into::into).collect();
        edges.sort();
        edges.dedup();
        let triangles = triangles.into_iter().map(normalize).collect();
        SurfaceTriangulation { edges, triangles }
    }

    pub fn from_strs(edges: &[&str], triangles: &[[&str; 3]]) -> SurfaceTriangulation {
        Self::new(
            edges.iter().copied(),
            triangles.iter().map(|t| [t[0].to_string(), t[1].to_string(), t[2].to_string()]),
        )
    }

    pub fn edges(&self) -> &[String] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[String; 3]] {
        &self.triangles
    }

    pub fn incidence(&self) -> BTreeMap<&str, usize> {
        let mut inc: BTreeMap<&str, usize> = self.edges.iter().map(|e| (e.as_str(), 0)).collect();
        for t in &self.triangles {
            for e in t {
                if let Some(c) = inc.get_mut(e.as_str()) {
                    *c += 1;
                }
            }
        }
        inc
    }

    /// Edges lying on exactly one triangle.
    pub fn boundary(&self) -> BTreeSet<String> {
        self.incidence().into_iter().filter(|(_, c)| *c == 1).map(|(e, _)| e.to_string()).collect()
    }

    /// Every triangle with its cyclic order reversed.
    pub fn reversed(&self) -> SurfaceTriangulation {
        Self::new(
            self.edges.clone(),
            self.triangles.iter().map(|[a, b, c]| [c.clone(), b.clone(), a.clone()]),
        )
    }
}

pub fn is_self_folded(t: &[String; 3]) -> bool {
    t[0] == t[1] || t[1] == t[2] || t[0] == t[2]
}

fn normalize(t: [String; 3]) -> [String; 3] {
    let [a, b, c] = t;
    if a == b || b == c || a == c {
        let (rep, other) = if a == b {
            (a, c)
        } else if b == c {
            (b, a)
        } else {
            (a, b)
        };
        [rep.clone(), rep, other]
    } else {
        [a, b, c]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceViolation {
    TooFewEdges(usize),
    UnknownEdge(String),
    Degenerate(Vec<String>),
    Incidence { edge: String, count: usize },
}

impl fmt::Display for SurfaceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceViolation::TooFewEdges(n) => write!(f, "needs at least 2 distinct edges, found {n}"),
            SurfaceViolation::UnknownEdge(e) => write!(f, "triangle uses undeclared edge {e}"),
            SurfaceViolation::Degenerate(t) => write!(f, "triangle ({}) repeats one edge three times", t.join(" ")),
            SurfaceViolation::Incidence { edge, count } => {
                write!(f, "edge {edge} has incidence {count}, expected 1 or 2")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SurfaceReport {
    pub violations: Vec<SurfaceViolation>,
}

impl SurfaceReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SurfaceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let lines: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

pub fn validate_triangulation(s: &SurfaceTriangulation) -> SurfaceReport {
    let mut violations = Vec::new();
    if s.edges.len() < 2 {
        violations.push(SurfaceViolation::TooFewEdges(s.edges.len()));
    }
    let known: BTreeSet<&str> = s.edges.iter().map(String::as_str).collect();
    let mut unknown = BTreeSet::new();
    for t in &s.triangles {
        if t[0] == t[1] && t[1] == t[2] {
            violations.push(SurfaceViolation::Degenerate(t.to_vec()));
        }
        for e in t {
            if !known.contains(e.as_str()) && unknown.insert(e.clone()) {
                violations.push(SurfaceViolation::UnknownEdge(e.clone()));
            }
        }
    }
    for (e, c) in s.incidence() {
        if c == 0 || c > 2 {
            violations.push(SurfaceViolation::Incidence { edge: e.to_string(), count: c });
        }
    }
    SurfaceReport { violations }
}

/// Arrow ids: `t<k>:a>b` for the arrows of the k-th triangle (1-based) and
/// `bd:a` for the loop at a boundary edge.
pub fn quiver_from_surface(s: &SurfaceTriangulation) -> Result<TriangulationQuiver> {
    let report = validate_triangulation(s);
    if !report.is_valid() {
        return Err(GdqError::invalid(report.to_string()));
    }
    let mut arrows = Vec::new();
    let mut cycles: Vec<Vec<String>> = Vec::new();
    for (k, t) in s.triangles.iter().enumerate() {
        let name = |x: &str, y: &str| format!("t{}:{x}>{y}", k + 1);
        let [a, b, c] = t;
        let cycle = if is_self_folded(t) {
            // (a a b): loop at a, then a→b, then b→a
            vec![(name(a, a), a, a), (name(a, c), a, c), (name(c, a), c, a)]
        } else {
            vec![(name(a, b), a, b), (name(b, c), b, c), (name(c, a), c, a)]
        };
        cycles.push(cycle.iter().map(|(n, _, _)| n.clone()).collect());
        arrows.extend(cycle.into_iter().map(|(n, x, y)| (n, x.clone(), y.clone())));
    }
    for e in s.boundary() {
        let n = format!("bd:{e}");
        cycles.push(vec![n.clone()]);
        arrows.push((n, e.clone(), e));
    }
    let q = Quiver::new(s.edges.iter().cloned(), arrows)?;
    TriangulationQuiver::from_cycles(q, &cycles)
}

/// True iff the vertices carrying f-fixed loops are exactly the boundary edges.
pub fn border_consistency(s: &SurfaceTriangulation, tq: &TriangulationQuiver) -> bool {
    let border: BTreeSet<String> = tq.border().into_iter().map(|v| tq.quiver().vertex_name(v).to_string()).collect();
    border == s.boundary()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::quiver_isomorphic;
    use crate::quiver::TriangulationQuiver;

    #[test]
    fn single_triangle_has_full_boundary() {
        let s = SurfaceTriangulation::from_strs(&["1", "2", "3"], &[["1", "2", "3"]]);
        assert!(validate_triangulation(&s).is_valid());
        assert_eq!(s.boundary().len(), 3);
        let tq = quiver_from_surface(&s).unwrap();
        assert_eq!(tq.quiver().arrow_count(), 6);
        assert!(border_consistency(&s, &tq));
    }

    #[test]
    fn incidence_four_rejected() {
        let s = SurfaceTriangulation::from_strs(&["a", "b"], &[["a", "b", "b"], ["a", "b", "b"]]);
        let r = validate_triangulation(&s);
        assert!(r.violations.contains(&SurfaceViolation::Incidence { edge: "b".into(), count: 4 }));
        assert!(quiver_from_surface(&s).is_err());
    }

    #[test]
    fn self_folded_orientations_agree() {
        let a = SurfaceTriangulation::from_strs(&["1", "2"], &[["1", "1", "2"]]);
        let b = SurfaceTriangulation::from_strs(&["1", "2"], &[["1", "2", "1"]]);
        assert_eq!(a, b);
        let tq = quiver_from_surface(&a).unwrap();
        let c = tq.f_census();
        assert_eq!((c.fixed, c.three_cycles), (1, 1));
        assert_eq!(tq.border().len(), 1);
    }

    #[test]
    fn unknown_edge_and_too_few_edges() {
        let s = SurfaceTriangulation::from_strs(&["1"], &[["1", "1", "2"]]);
        let r = validate_triangulation(&s);
        assert!(r.violations.contains(&SurfaceViolation::TooFewEdges(1)));
        assert!(r.violations.contains(&SurfaceViolation::UnknownEdge("2".into())));
    }

    #[test]
    fn reversal_gives_opposite_quiver() {
        let s = SurfaceTriangulation::from_strs(
            &["1", "2", "3", "4", "5"],
            &[["1", "2", "3"], ["3", "4", "4"], ["1", "5", "2"]],
        );
        let tq = quiver_from_surface(&s).unwrap();
        let rev = quiver_from_surface(&s.reversed()).unwrap();
        let op: TriangulationQuiver = tq.opposite();
        assert!(quiver_isomorphic(&rev, &op).is_some());
    }
}
