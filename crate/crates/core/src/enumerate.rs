//! Exhaustive enumeration of small triangulation quivers up to isomorphism.
//!
//! A triangulation quiver on `n` vertices is encoded by `2n` arrows where
//! arrows `2k` and `2k+1` leave vertex `k`, together with an f of order
//! dividing 3. Targets are forced by `t(α) = s(f(α))`, so every such f gives a
//! 2-regular quiver, and isomorphism classes are orbits under relabelings
//! that respect the pairing.

use std::collections::BTreeSet;

use crate::error::{GdqError, Result};
use crate::exec::{map_ordered, Execution};
use crate::quiver::{FQuiver, Quiver, TriangulationQuiver};

pub const MAX_ENUMERATION_VERTICES: usize = 6;

/// Lexicographically least relabeling code of an f on paired arrows.
/// Returns `None` when the structure is disconnected.
pub fn canonical_code(f: &[usize]) -> Option<Vec<usize>> {
    use std::cmp::Ordering;
    let m = f.len();
    let mut best: Option<Vec<usize>> = None;
    let mut label = vec![usize::MAX; m];
    let mut order = Vec::with_capacity(m);
    let mut code = Vec::with_capacity(m);
    'starts: for start in 0..m {
        label.iter_mut().for_each(|l| *l = usize::MAX);
        order.clear();
        code.clear();
        label[start] = 0;
        label[start ^ 1] = 1;
        order.push(start);
        order.push(start ^ 1);
        let mut state = if best.is_some() { Ordering::Equal } else { Ordering::Less };
        let mut i = 0;
        while i < order.len() {
            let y = f[order[i]];
            if label[y] == usize::MAX {
                label[y] = order.len();
                label[y ^ 1] = order.len() + 1;
                order.push(y);
                order.push(y ^ 1);
            }
            code.push(label[y]);
            if state == Ordering::Equal {
                state = code[i].cmp(&best.as_ref().expect("set")[i]);
                if state == Ordering::Greater {
                    continue 'starts;
                }
            }
            i += 1;
        }
        if order.len() < m {
            return None;
        }
        if state == Ordering::Less {
            best = Some(code.clone());
        }
    }
    best
}

/// Canonical code of an arbitrary triangulation quiver.
pub fn tq_canonical_code(tq: &TriangulationQuiver) -> Vec<usize> {
    let q = tq.quiver();
    let mut pos = vec![0; q.arrow_count()];
    for v in 0..q.vertex_count() {
        let out = q.out_arrows(v);
        pos[out[0]] = 2 * v;
        pos[out[1]] = 2 * v + 1;
    }
    let mut f = vec![0; q.arrow_count()];
    for a in 0..q.arrow_count() {
        f[pos[a]] = pos[tq.f(a)];
    }
    canonical_code(&f).expect("triangulation quivers are connected")
}

/// Rebuilds a named triangulation quiver from a paired-arrow code. Vertices
/// are `1..=n`; the two arrows leaving vertex `k` are `ka` and `kb`.
pub fn quiver_from_code(code: &[usize]) -> Result<TriangulationQuiver> {
    TriangulationQuiver::new(fquiver_from_code(code)?)
}

/// The quiver with f′ read from any permutation in the bar model: arrows
/// `2k` and `2k+1` leave vertex `k+1`, and `code[x]` is f′ of arrow `x`.
pub fn fquiver_from_code(code: &[usize]) -> Result<FQuiver> {
    let n = code.len() / 2;
    let vname = |k: usize| (k + 1).to_string();
    let aname = |x: usize| format!("{}{}", x / 2 + 1, if x % 2 == 0 { 'a' } else { 'b' });
    let arrows = (0..code.len()).map(|x| (aname(x), vname(x / 2), vname(code[x] / 2)));
    let q = Quiver::new((0..n).map(vname), arrows)?;
    let perm = (0..code.len()).map(|x| q.arrow_id(&aname(code[x])).expect("named")).collect::<Vec<_>>();
    let mut f = vec![0; code.len()];
    for x in 0..code.len() {
        f[q.arrow_id(&aname(x)).expect("named")] = perm[x];
    }
    FQuiver::from_arrow_permutation(q, f)
}

/// All permutations of `0..m` with cube the identity, grouped by the choice
/// made for point 0 so the groups can be processed independently.
fn order_three_branches(m: usize) -> Vec<Vec<usize>> {
    let mut firsts = vec![vec![0]];
    for q in 1..m {
        for r in 1..m {
            if q != r {
                firsts.push(vec![0, q, r]);
            }
        }
    }
    firsts
}

fn extend(f: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    let m = f.len();
    let Some(p) = f.iter().position(|&x| x == usize::MAX) else {
        visit(f);
        return;
    };
    f[p] = p;
    extend(f, visit);
    for q in p + 1..m {
        if f[q] != usize::MAX {
            continue;
        }
        for r in p + 1..m {
            if r == q || f[r] != usize::MAX {
                continue;
            }
            f[p] = q;
            f[q] = r;
            f[r] = p;
            extend(f, visit);
            f[q] = usize::MAX;
            f[r] = usize::MAX;
        }
    }
    f[p] = usize::MAX;
}

fn codes_for_branch(m: usize, first: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut f = vec![usize::MAX; m];
    match first {
        [0] => f[0] = 0,
        [0, q, r] => {
            f[0] = *q;
            f[*q] = *r;
            f[*r] = 0;
        }
        _ => unreachable!(),
    }
    let mut codes = BTreeSet::new();
    extend(&mut f, &mut |perm| {
        if let Some(c) = canonical_code(perm) {
            codes.insert(c);
        }
    });
    codes
}

/// Canonical codes of all connected triangulation quivers on exactly `n`
/// vertices, sorted.
pub fn codes_with_vertices(n: usize, exec: Execution) -> Vec<Vec<usize>> {
    let m = 2 * n;
    let branches = order_three_branches(m);
    let parts = map_ordered(exec, &branches, |b| codes_for_branch(m, b));
    let mut all = BTreeSet::new();
    for p in parts {
        all.extend(p);
    }
    all.into_iter().collect()
}

/// Every connected triangulation quiver with at most `max_vertices` vertices,
/// one per isomorphism class, ordered by vertex count and then by code.
pub fn enumerate_triangulation_quivers(max_vertices: usize) -> Result<Vec<TriangulationQuiver>> {
    enumerate_with(max_vertices, Execution::default())
}

pub fn enumerate_with(max_vertices: usize, exec: Execution) -> Result<Vec<TriangulationQuiver>> {
    if max_vertices < 2 {
        return Err(GdqError::invalid("triangulation quivers have at least 2 vertices"));
    }
    if max_vertices > MAX_ENUMERATION_VERTICES {
        return Err(GdqError::Budget(format!(
            "enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices, asked for {max_vertices}"
        )));
    }
    let mut out = Vec::new();
    for n in 2..=max_vertices {
        for code in codes_with_vertices(n, exec) {
            out.push(quiver_from_code(&code)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::quiver_isomorphic;

    #[test]
    fn two_vertices_give_one_class() {
        let qs = enumerate_triangulation_quivers(2).unwrap();
        assert_eq!(qs.len(), 1);
        let c = qs[0].f_census();
        assert_eq!((c.fixed, c.three_cycles), (1, 1));
    }

    #[test]
    fn limits() {
        assert!(matches!(enumerate_triangulation_quivers(1), Err(GdqError::Invalid(_))));
        assert!(matches!(enumerate_triangulation_quivers(7), Err(GdqError::Budget(_))));
    }

    #[test]
    fn sequential_matches_parallel() {
        assert_eq!(codes_with_vertices(3, Execution::Sequential), codes_with_vertices(3, Execution::Parallel));
    }

    #[test]
    fn code_round_trip() {
        for tq in enumerate_triangulation_quivers(3).unwrap() {
            let code = tq_canonical_code(&tq);
            let back = quiver_from_code(&code).unwrap();
            assert!(quiver_isomorphic(&tq, &back).is_some());
            assert_eq!(tq_canonical_code(&back), code);
        }
    }

    #[test]
    fn order_three_permutation_count() {
        // permutations of 6 points with cube the identity
        let mut count = 0;
        for b in order_three_branches(6) {
            let mut f = vec![usize::MAX; 6];
            match b.as_slice() {
                [0] => f[0] = 0,
                [0, q, r] => {
                    f[0] = *q;
                    f[*q] = *r;
                    f[*r] = 0;
                }
                _ => unreachable!(),
            }
            extend(&mut f, &mut |_| count += 1);
        }
        assert_eq!(count, 81);
    }
}
