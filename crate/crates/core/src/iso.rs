//! Isomorphisms of quivers with f′.

use crate::quiver::{FQuiver, Node, TriangulationQuiver};

/// A bijection on vertices and arrows commuting with s, t and f′.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

impl Isomorphism {
    pub fn identity(fq: &FQuiver) -> Isomorphism {
        Isomorphism {
            vertex_map: (0..fq.quiver().vertex_count()).collect(),
            arrow_map: (0..fq.quiver().arrow_count()).collect(),
        }
    }

    pub fn inverse(&self) -> Isomorphism {
        let mut vertex_map = vec![0; self.vertex_map.len()];
        let mut arrow_map = vec![0; self.arrow_map.len()];
        for (i, &j) in self.vertex_map.iter().enumerate() {
            vertex_map[j] = i;
        }
        for (i, &j) in self.arrow_map.iter().enumerate() {
            arrow_map[j] = i;
        }
        Isomorphism { vertex_map, arrow_map }
    }

    /// Checks that the map transports s, t and f′ exactly.
    pub fn is_valid(&self, a: &FQuiver, b: &FQuiver) -> bool {
        let (qa, qb) = (a.quiver(), b.quiver());
        if self.arrow_map.len() != qa.arrow_count() || self.vertex_map.len() != qa.vertex_count() {
            return false;
        }
        let mut seen = vec![false; qb.arrow_count()];
        for (x, &y) in self.arrow_map.iter().enumerate() {
            if y >= seen.len() || std::mem::replace(&mut seen[y], true) {
                return false;
            }
            if self.vertex_map[qa.source(x)] != qb.source(y) || self.vertex_map[qa.target(x)] != qb.target(y) {
                return false;
            }
            let ok = match (a.next(x), b.next(y)) {
                (Node::Arrow(u), Node::Arrow(v)) => self.arrow_map[u] == v,
                (Node::Vertex(u), Node::Vertex(v)) => self.vertex_map[u] == v,
                _ => false,
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

struct Ctx<'a> {
    a: &'a FQuiver,
    b: &'a FQuiver,
    prev_a: Vec<usize>,
    prev_b: Vec<usize>,
}

impl<'a> Ctx<'a> {
    fn new(a: &'a FQuiver, b: &'a FQuiver) -> Self {
        let prev = |fq: &FQuiver| {
            let mut p = vec![0; fq.quiver().arrow_count()];
            for x in 0..p.len() {
                p[fq.next_arrow(x)] = x;
            }
            p
        };
        Ctx { a, b, prev_a: prev(a), prev_b: prev(b) }
    }

    /// Extends the partial map from the pair (x, y); false on conflict.
    fn propagate(&self, amap: &mut [Option<usize>], vmap: &mut [Option<usize>], used: &mut [bool], x: usize, y: usize) -> bool {
        let (qa, qb) = (self.a.quiver(), self.b.quiver());
        let mut stack = vec![(x, y)];
        while let Some((x, y)) = stack.pop() {
            match amap[x] {
                Some(z) if z == y => continue,
                Some(_) => return false,
                None => {}
            }
            if used[y] {
                return false;
            }
            amap[x] = Some(y);
            used[y] = true;
            for (u, v) in [(qa.source(x), qb.source(y)), (qa.target(x), qb.target(y))] {
                match vmap[u] {
                    Some(w) if w != v => return false,
                    Some(_) => {}
                    None => {
                        if vmap.iter().any(|m| *m == Some(v)) {
                            return false;
                        }
                        vmap[u] = Some(v);
                    }
                }
            }
            let via_a = matches!(self.a.next(x), Node::Vertex(_));
            let via_b = matches!(self.b.next(y), Node::Vertex(_));
            if via_a != via_b {
                return false;
            }
            if qa.out_arrows(qa.source(x)).len() != qb.out_arrows(qb.source(y)).len() {
                return false;
            }
            stack.push((self.a.next_arrow(x), self.b.next_arrow(y)));
            stack.push((self.prev_a[x], self.prev_b[y]));
            match (self.a.bar(x), self.b.bar(y)) {
                (Some(u), Some(v)) => stack.push((u, v)),
                (None, None) => {}
                _ => return false,
            }
        }
        true
    }

    fn search(&self, amap: Vec<Option<usize>>, vmap: Vec<Option<usize>>, used: Vec<bool>, all: bool, out: &mut Vec<Isomorphism>) {
        let Some(x) = amap.iter().position(|m| m.is_none()) else {
            let iso = Isomorphism {
                arrow_map: amap.into_iter().map(Option::unwrap).collect(),
                vertex_map: vmap.into_iter().map(|v| v.expect("every vertex has an arrow")).collect(),
            };
            if iso.is_valid(self.a, self.b) {
                out.push(iso);
            }
            return;
        };
        for y in 0..self.b.quiver().arrow_count() {
            if used[y] {
                continue;
            }
            let (mut am, mut vm, mut us) = (amap.clone(), vmap.clone(), used.clone());
            if self.propagate(&mut am, &mut vm, &mut us, x, y) {
                self.search(am, vm, us, all, out);
                if !all && !out.is_empty() {
                    return;
                }
            }
        }
    }
}

fn run(a: &FQuiver, b: &FQuiver, all: bool) -> Vec<Isomorphism> {
    let (qa, qb) = (a.quiver(), b.quiver());
    if qa.vertex_count() != qb.vertex_count() || qa.arrow_count() != qb.arrow_count() {
        return Vec::new();
    }
    if a.f_vertices().len() != b.f_vertices().len() {
        return Vec::new();
    }
    if qa.vertex_count() > 0 && qa.arrow_count() == 0 {
        return Vec::new();
    }
    let ctx = Ctx::new(a, b);
    let mut out = Vec::new();
    ctx.search(vec![None; qa.arrow_count()], vec![None; qa.vertex_count()], vec![false; qb.arrow_count()], all, &mut out);
    out
}

/// First isomorphism in the search order: the least unmapped arrow of `a` is
/// tried against the arrows of `b` in name order.
pub fn fquiver_isomorphic(a: &FQuiver, b: &FQuiver) -> Option<Isomorphism> {
    run(a, b, false).into_iter().next()
}

pub fn all_isomorphisms(a: &FQuiver, b: &FQuiver) -> Vec<Isomorphism> {
    run(a, b, true)
}

pub fn quiver_isomorphic(a: &TriangulationQuiver, b: &TriangulationQuiver) -> Option<Isomorphism> {
    fquiver_isomorphic(a.fquiver(), b.fquiver())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::quiver_from_strs;

    fn lambda(swap: bool) -> TriangulationQuiver {
        let (one, two) = if swap { ("2", "1") } else { ("1", "2") };
        let q = quiver_from_strs(
            &["1", "2"],
            &[("a", one, one), ("b", one, two), ("c", two, one), ("e", two, two)],
        )
        .unwrap();
        TriangulationQuiver::from_cycles(q, &[vec!["a", "b", "c"], vec!["e"]]).unwrap()
    }

    #[test]
    fn identity_first() {
        let q = lambda(false);
        let iso = quiver_isomorphic(&q, &q).unwrap();
        assert_eq!(iso, Isomorphism::identity(q.fquiver()));
    }

    #[test]
    fn swapped_vertices_found() {
        let a = lambda(false);
        let b = lambda(true);
        let iso = quiver_isomorphic(&a, &b).unwrap();
        assert_eq!(iso.vertex_map, vec![1, 0]);
        assert!(iso.is_valid(a.fquiver(), b.fquiver()));
        let back = quiver_isomorphic(&b, &a).unwrap();
        assert_eq!(back, iso.inverse());
    }

    #[test]
    fn relabelled_loops() {
        let a = lambda(false);
        let q = quiver_from_strs(
            &["x", "y"],
            &[("p", "y", "y"), ("q", "y", "x"), ("r", "x", "y"), ("s", "x", "x")],
        )
        .unwrap();
        let b = TriangulationQuiver::from_cycles(q, &[vec!["p", "q", "r"], vec!["s"]]).unwrap();
        let iso = quiver_isomorphic(&a, &b).unwrap();
        assert_eq!(iso.arrow_map, vec![0, 1, 2, 3]);
        assert_eq!(iso.vertex_map, vec![1, 0]);
        assert_eq!(all_isomorphisms(a.fquiver(), b.fquiver()).len(), 1);
    }

    #[test]
    fn mirrored_lambda_is_isomorphic() {
        let a = lambda(false);
        let q = a.quiver().clone();
        let b = TriangulationQuiver::from_cycles(q, &[vec!["a"], vec!["e", "c", "b"]]).unwrap();
        let iso = quiver_isomorphic(&a, &b).unwrap();
        assert_eq!(iso.vertex_map, vec![1, 0]);
    }

    #[test]
    fn vertex_count_mismatch() {
        let a = lambda(false);
        let q = quiver_from_strs(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("e", "1", "1"), ("h", "2", "2"), ("m", "3", "3")],
        )
        .unwrap();
        let b = TriangulationQuiver::from_cycles(q, &[vec!["a", "b", "c"], vec!["e"], vec!["h"], vec!["m"]]).unwrap();
        assert!(quiver_isomorphic(&a, &b).is_none());
    }
}
