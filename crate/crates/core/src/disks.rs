//! 2-triangle disks: detection, contraction to e_Σ B e_Σ and the inverse
//! expansion.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{GdqError, Result};
use crate::field::Scalar;
use crate::iso::{all_isomorphisms, Isomorphism};
use crate::presentation::GdPresentation;
use crate::quiver::{FQuiver, Node, Quiver, TriangulationQuiver};

/// Arrows θ: a→c, ε: c→d, μ: d→a, ρ: b→d, ξ: d→c, σ: c→b with f-cycles
/// (θ ε μ) and (σ ρ ξ). Oriented so that θ precedes ρ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TwoTriangleDisk {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub theta: usize,
    pub eps: usize,
    pub mu: usize,
    pub rho: usize,
    pub xi: usize,
    pub sigma: usize,
}

impl TwoTriangleDisk {
    pub fn arrows(&self) -> [usize; 6] {
        [self.theta, self.eps, self.mu, self.rho, self.xi, self.sigma]
    }

    pub fn inner(&self) -> [usize; 2] {
        [self.c, self.d]
    }
}

fn disk_from_eps(tq: &TriangulationQuiver, eps: usize) -> Option<TwoTriangleDisk> {
    let q = tq.quiver();
    let mu = tq.f(eps);
    let theta = tq.f(mu);
    if tq.f(theta) != eps || theta == eps {
        return None;
    }
    let (c, d, a) = (q.source(eps), q.target(eps), q.source(theta));
    let xi = tq.bar(mu);
    if q.target(xi) != c {
        return None;
    }
    let sigma = tq.f(xi);
    if sigma != tq.bar(eps) {
        return None;
    }
    let rho = tq.f(sigma);
    if tq.f(rho) != xi {
        return None;
    }
    let b = q.target(sigma);
    let vs: BTreeSet<usize> = [a, b, c, d].into();
    if vs.len() != 4 {
        return None;
    }
    Some(TwoTriangleDisk { a, b, c, d, theta, eps, mu, rho, xi, sigma })
}

/// Every 2-triangle disk, ordered by θ. Disk `k` in the list is `D{k+1}`.
pub fn find_disks(tq: &TriangulationQuiver) -> Vec<TwoTriangleDisk> {
    let mut out: Vec<TwoTriangleDisk> = (0..tq.quiver().arrow_count())
        .filter_map(|e| disk_from_eps(tq, e))
        .filter(|d| d.theta < d.rho)
        .collect();
    out.sort_by_key(|d| d.theta);
    out
}

pub fn disk_id(k: usize) -> String {
    format!("D{}", k + 1)
}

/// Checks that no 2-cycle vertex of one disk is used by another disk.
pub fn check_family(family: &[TwoTriangleDisk]) -> Result<()> {
    let mut inner = BTreeSet::new();
    for d in family {
        for v in d.inner() {
            if !inner.insert(v) {
                return Err(GdqError::invalid("overlapping disks in the family"));
            }
        }
    }
    for d in family {
        if inner.contains(&d.a) || inner.contains(&d.b) {
            return Err(GdqError::invalid("a rim vertex of one disk is inside another disk"));
        }
    }
    Ok(())
}

/// Greedy disjoint selection from `find_disks`, in disk order.
pub fn maximal_family(disks: &[TwoTriangleDisk]) -> Vec<TwoTriangleDisk> {
    let mut out: Vec<TwoTriangleDisk> = Vec::new();
    for d in disks {
        let mut trial = out.clone();
        trial.push(*d);
        if check_family(&trial).is_ok() {
            out = trial;
        }
    }
    out
}

fn composite_name(q: &Quiver, first: usize, second: usize, via: usize, from: usize, to: usize) -> String {
    let (x, y) = (q.arrow_name(first), q.arrow_name(second));
    if let (Some(n1), Some(n2)) = (x.strip_suffix(".1"), y.strip_suffix(".2")) {
        if n1 == n2 {
            return n1.to_string();
        }
    }
    format!("via[{}]:{}>{}", q.vertex_name(via), q.vertex_name(from), q.vertex_name(to))
}

/// e_Σ B e_Σ: drops c and d of every disk and replaces θσ and ρμ by
/// composite arrows forming an f′ 2-cycle.
pub fn contract(p: &GdPresentation, family: &[TwoTriangleDisk]) -> Result<GdPresentation> {
    if !p.is_triangulation() {
        return Err(GdqError::invalid("contraction needs a presentation without 1-vertices or 2-cycles"));
    }
    check_family(family)?;
    let tq = p.triangulation_quiver()?;
    let present = find_disks(&tq);
    for d in family {
        if !present.contains(d) {
            return Err(GdqError::invalid("disk not present in the quiver"));
        }
    }
    if family.is_empty() {
        return Ok(p.clone());
    }
    let q = p.quiver();
    let dropped_vertices: BTreeSet<usize> = family.iter().flat_map(|d| d.inner()).collect();
    let dropped_arrows: BTreeSet<usize> = family.iter().flat_map(|d| d.arrows()).collect();
    let vertices: Vec<String> = (0..q.vertex_count())
        .filter(|v| !dropped_vertices.contains(v))
        .map(|v| q.vertex_name(v).to_string())
        .collect();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut weights: BTreeMap<String, u32> = BTreeMap::new();
    for a in (0..q.arrow_count()).filter(|a| !dropped_arrows.contains(a)) {
        let x = q.arrow(a);
        arrows.push((x.name.clone(), q.vertex_name(x.source).into(), q.vertex_name(x.target).into()));
        weights.insert(x.name.clone(), p.weight(a));
    }
    let mut cycles: Vec<Vec<String>> = Vec::new();
    for cycle in p.fquiver().f_cycles() {
        if cycle.iter().any(|n| matches!(n, Node::Arrow(a) if dropped_arrows.contains(a))) {
            continue;
        }
        cycles.push(p.fquiver().cycle_names(&cycle));
    }
    for d in family {
        let alpha = composite_name(q, d.theta, d.sigma, d.c, d.a, d.b);
        let beta = composite_name(q, d.rho, d.mu, d.d, d.b, d.a);
        for (name, s, t, w) in [(&alpha, d.a, d.b, p.weight(d.theta)), (&beta, d.b, d.a, p.weight(d.rho))] {
            if weights.insert(name.clone(), w).is_some() {
                return Err(GdqError::invalid(format!("composite arrow name `{name}` already in use")));
            }
            arrows.push((name.clone(), q.vertex_name(s).into(), q.vertex_name(t).into()));
        }
        cycles.push(vec![alpha, beta]);
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let fq = FQuiver::from_cycles(quiver, &cycles)?;
    let border: BTreeMap<String, Scalar> =
        p.border().iter().map(|(v, b)| (q.vertex_name(*v).to_string(), b.clone())).collect();
    GdPresentation::with_named_weights(fq, &weights, None, &border, p.field())
}

/// Result of expanding a generalized presentation to a triangulation quiver.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub presentation: GdPresentation,
    /// The disks created from f′ 2-cycles.
    pub disks: Vec<TwoTriangleDisk>,
    /// The loops added at 1-vertices.
    pub loops: Vec<usize>,
}

/// Adds a weight-1 loop `i.loop` at each 1-vertex i and replaces each f′
/// 2-cycle (α β), α before β, by a fresh disk with vertices `α.c`, `α.d`,
/// arrows `α.1`, `α.2` for θ and σ, `β.1`, `β.2` for ρ and μ, and `α.e`,
/// `α.x` for ε and ξ.
pub fn expand(p: &GdPresentation) -> Result<Expansion> {
    let fq = p.fquiver();
    let q = p.quiver();
    let mut vertices: Vec<String> = q.vertices().to_vec();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut weights: BTreeMap<String, u32> = BTreeMap::new();
    let mut cycles: Vec<Vec<String>> = Vec::new();
    let mut loop_names = Vec::new();
    let mut disk_names = Vec::new();
    let vn = |v: usize| q.vertex_name(v).to_string();
    let two: BTreeSet<usize> = p.two_cycles().iter().flat_map(|(a, b)| [*a, *b]).collect();
    for a in (0..q.arrow_count()).filter(|a| !two.contains(a)) {
        let x = q.arrow(a);
        arrows.push((x.name.clone(), vn(x.source), vn(x.target)));
        weights.insert(x.name.clone(), p.weight(a));
    }
    for cycle in fq.f_cycles() {
        match cycle.as_slice() {
            [Node::Arrow(a), Node::Arrow(b)] => {
                let (alpha, beta) = (*a.min(b), *a.max(b));
                let (an, bn) = (q.arrow_name(alpha).to_string(), q.arrow_name(beta).to_string());
                let (sa, sb) = (q.source(alpha), q.source(beta));
                if sa == sb {
                    return Err(GdqError::invalid(format!("2-cycle ({an} {bn}) consists of loops")));
                }
                let c = format!("{an}.c");
                let d = format!("{an}.d");
                vertices.push(c.clone());
                vertices.push(d.clone());
                let names = [
                    (format!("{an}.1"), vn(sa), c.clone(), p.weight(alpha)),
                    (format!("{an}.2"), c.clone(), vn(sb), p.weight(alpha)),
                    (format!("{bn}.1"), vn(sb), d.clone(), p.weight(beta)),
                    (format!("{bn}.2"), d.clone(), vn(sa), p.weight(beta)),
                    (format!("{an}.e"), c.clone(), d.clone(), 1),
                    (format!("{an}.x"), d.clone(), c.clone(), 1),
                ];
                for (name, s, t, w) in &names {
                    if weights.insert(name.clone(), *w).is_some() {
                        return Err(GdqError::invalid(format!("expanded arrow name `{name}` already in use")));
                    }
                    arrows.push((name.clone(), s.clone(), t.clone()));
                }
                let n = |k: usize| names[k].0.clone();
                cycles.push(vec![n(0), n(4), n(3)]);
                cycles.push(vec![n(1), n(2), n(5)]);
                disk_names.push((c, d));
            }
            _ if cycle.len() == 2 => return Err(GdqError::invalid("loop at a 1-vertex")),
            _ => {
                let mut names = Vec::new();
                for node in &cycle {
                    match node {
                        Node::Arrow(a) => names.push(q.arrow_name(*a).to_string()),
                        Node::Vertex(v) => {
                            let name = format!("{}.loop", q.vertex_name(*v));
                            if weights.insert(name.clone(), 1).is_some() {
                                return Err(GdqError::invalid(format!("loop name `{name}` already in use")));
                            }
                            arrows.push((name.clone(), vn(*v), vn(*v)));
                            loop_names.push(name.clone());
                            names.push(name);
                        }
                    }
                }
                cycles.push(names);
            }
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let fq = FQuiver::from_cycles(quiver, &cycles)?;
    let border: BTreeMap<String, Scalar> =
        p.border().iter().map(|(v, b)| (q.vertex_name(*v).to_string(), b.clone())).collect();
    let presentation = GdPresentation::with_named_weights(fq, &weights, None, &border, p.field())?;
    let tq = presentation.triangulation_quiver()?;
    let nq = presentation.quiver();
    let found = find_disks(&tq);
    let mut disks = Vec::new();
    for (c, d) in disk_names {
        let (c, d) = (nq.vertex(&c)?, nq.vertex(&d)?);
        let disk = found
            .iter()
            .find(|x| x.inner() == [c, d] || x.inner() == [d, c])
            .ok_or_else(|| GdqError::Inconsistency("expanded 2-cycle does not form a disk".into()))?;
        disks.push(*disk);
    }
    disks.sort_by_key(|d| d.theta);
    let loops = loop_names.iter().map(|n| nq.arrow_by_name(n)).collect::<Result<Vec<_>>>()?;
    Ok(Expansion { presentation, disks, loops })
}

/// Finds an isomorphism from `p` onto `e.presentation` that carries the disk
/// family onto the created disks and preserves weights and border scalars.
pub fn round_trip_witness(p: &GdPresentation, family: &[TwoTriangleDisk], e: &Expansion) -> Option<Isomorphism> {
    let want: BTreeSet<BTreeSet<usize>> = e.disks.iter().map(|d| d.inner().into_iter().collect()).collect();
    all_isomorphisms(p.fquiver(), e.presentation.fquiver()).into_iter().find(|iso| {
        let mapped: BTreeSet<BTreeSet<usize>> =
            family.iter().map(|d| d.inner().iter().map(|v| iso.vertex_map[*v]).collect()).collect();
        let weights_ok = (0..p.quiver().arrow_count())
            .all(|a| p.weight(a) == e.presentation.weight(iso.arrow_map[a]));
        let border_ok = p.border().iter().all(|(v, b)| e.presentation.border_scalar(iso.vertex_map[*v]) == *b);
        mapped == want && weights_ok && border_ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::*;
    use crate::field::Field;
    use crate::iso::fquiver_isomorphic;

    fn arrow_names(t: &TriangulationQuiver, d: &TwoTriangleDisk) -> BTreeSet<String> {
        d.arrows().iter().map(|&a| t.quiver().arrow_name(a).to_string()).collect()
    }

    #[test]
    fn disks_of_example_7_4() {
        let t = example_7_4();
        let ds = find_disks(&t);
        assert_eq!(ds.len(), 2);
        let want1: BTreeSet<String> = ["chi", "pi", "kappa", "nu", "eps", "theta"].iter().map(|s| s.to_string()).collect();
        let want2: BTreeSet<String> = ["lambda", "xi", "phi", "psi", "mu", "zeta"].iter().map(|s| s.to_string()).collect();
        let got: BTreeSet<BTreeSet<String>> = ds.iter().map(|d| arrow_names(&t, d)).collect();
        assert_eq!(got, [want1, want2].into());
    }

    #[test]
    fn disks_of_ring_and_triangle() {
        for n in 2..6 {
            assert_eq!(find_disks(&example_7_5(n)).len(), n);
        }
        assert!(find_disks(&example_4_3()).is_empty());
    }

    #[test]
    fn contraction_of_ex7_4_matches_reference_form() {
        let p = example_7_4_weighted([2, 3, 1, 1], 0, Field::Rational);
        let t = p.triangulation_quiver().unwrap();
        let c = contract(&p, &find_disks(&t)).unwrap();
        let reference = example_7_4_contracted(2, 3);
        let iso = fquiver_isomorphic(c.fquiver(), reference.fquiver()).unwrap();
        for a in 0..c.quiver().arrow_count() {
            assert_eq!(c.weight(a), reference.weight(iso.arrow_map[a]));
        }
        assert_eq!(c.dimension_formula(), 36 * 2 + 4 * 3);
    }

    #[test]
    fn contraction_of_ring() {
        for n in 2..5 {
            let p = example_7_5_weighted(n, 2, 3);
            let t = p.triangulation_quiver().unwrap();
            let c = contract(&p, &find_disks(&t)).unwrap();
            let reference = example_7_5_contracted(n, 2, 3);
            assert!(fquiver_isomorphic(c.fquiver(), reference.fquiver()).is_some());
            assert_eq!(c.two_cycles().len(), n);
        }
    }

    #[test]
    fn empty_family_is_identity() {
        let p = example_7_4_weighted([1, 1, 1, 1], 0, Field::Rational);
        assert_eq!(contract(&p, &[]).unwrap(), p);
    }

    #[test]
    fn expand_inverts_contract_on_names() {
        let p = example_7_5_contracted(3, 2, 1);
        let e = expand(&p).unwrap();
        assert_eq!(e.disks.len(), 3);
        let back = contract(&e.presentation, &e.disks).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn expansion_adds_loops_at_one_vertices() {
        let g = lambda(1, 1, 0, Field::Rational).gabriel_presentation().unwrap();
        let e = expand(&g).unwrap();
        assert_eq!(e.loops.len(), 1);
        assert!(fquiver_isomorphic(e.presentation.fquiver(), lambda_quiver().fquiver()).is_some());
    }

    #[test]
    fn overlapping_family_rejected() {
        let t = example_7_5(2);
        let ds = find_disks(&t);
        assert!(check_family(&[ds[0], ds[0]]).is_err());
        assert!(check_family(&ds).is_ok());
    }
}
