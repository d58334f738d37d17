//! Syzygies of the arrow modules U(α) = αB, the tube census, periodicity of
//! simples and primitive walks.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Algebra, BasisElem, Element};
use crate::error::{GdqError, Result};
use crate::field::Scalar;
use crate::linalg::rank;
use crate::presentation::GdPresentation;
use crate::quiver::Node;
use num_traits::Zero;

/// Ω U(α): another arrow module, or a simple module at a 1-vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Syzygy {
    Arrow(usize),
    Simple(usize),
}

pub fn syzygy_arrow(p: &GdPresentation, a: usize) -> Syzygy {
    match p.fquiver().next(a) {
        Node::Arrow(b) => Syzygy::Arrow(b),
        Node::Vertex(v) => Syzygy::Simple(v),
    }
}

/// dim αB, the rank of all right multiples of α.
pub fn arrow_module_dimension(alg: &Algebra, a: usize) -> usize {
    let p = alg.presentation();
    let t = p.quiver().target(a);
    let x = alg.arrow(a);
    let rows: Vec<BTreeMap<usize, Scalar>> = alg
        .basis()
        .projective(t)
        .into_iter()
        .map(|i| alg.multiply(&x, &Element::basis(i, alg.field())).terms().clone())
        .collect();
    rank(alg.field(), &rows)
}

/// Numerical evidence for Ω U(α) computed at one arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyCheck {
    pub arrow: usize,
    pub target: Syzygy,
    pub dim_u: usize,
    pub dim_omega: usize,
    pub dim_projective: usize,
    /// α·f′(α) = 0; `None` when f′(α) is not an arrow or α is a deformed
    /// border loop, where the product is not a relation.
    pub product_zero: Option<bool>,
    pub expected_dim_u: usize,
}

impl SyzygyCheck {
    pub fn holds(&self) -> bool {
        self.dim_u == self.expected_dim_u
            && self.dim_u + self.dim_omega == self.dim_projective
            && self.product_zero.unwrap_or(true)
    }
}

pub fn check_syzygy(alg: &Algebra, a: usize) -> SyzygyCheck {
    let p = alg.presentation();
    let t = p.quiver().target(a);
    let target = syzygy_arrow(p, a);
    let dim_u = arrow_module_dimension(alg, a);
    let dim_projective = alg.basis().projective(t).len();
    let (dim_omega, product_zero) = match target {
        Syzygy::Arrow(b) => {
            let deformed = p.is_border_loop(a) && !p.border_scalar(p.quiver().source(a)).is_zero();
            let zero = if deformed { None } else { Some(alg.multiply(&alg.arrow(a), &alg.arrow(b)).is_zero()) };
            (arrow_module_dimension(alg, b), zero)
        }
        Syzygy::Simple(v) => {
            debug_assert_eq!(v, t);
            (1, None)
        }
    };
    SyzygyCheck { arrow: a, target, dim_u, dim_omega, dim_projective, product_zero, expected_dim_u: p.mn(a) }
}

/// Number of syzygy steps needed to return to U(α), following Ω through
/// simples at 1-vertices (Ω S_i = U(γ) for the arrow γ leaving i).
pub fn omega_period(p: &GdPresentation, a: usize) -> usize {
    let mut steps = 0;
    let mut x = a;
    loop {
        x = match syzygy_arrow(p, x) {
            Syzygy::Arrow(b) => {
                steps += 1;
                b
            }
            Syzygy::Simple(v) => {
                steps += 2;
                p.quiver().out_arrows(v)[0]
            }
        };
        if x == a {
            return steps;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubeCensus {
    /// f′-cycles of length 3, counting cycles through a 1-vertex.
    pub rank3_count: usize,
    /// f′-fixed arrows.
    pub rank1_arrow_count: usize,
    /// f′ 2-cycles.
    pub period2_pairs: usize,
    /// Ω-period of U(α) for every arrow, in arrow order.
    pub periods: Vec<usize>,
}

pub fn tube_census(p: &GdPresentation) -> TubeCensus {
    let mut c = TubeCensus { rank3_count: 0, rank1_arrow_count: 0, period2_pairs: 0, periods: Vec::new() };
    for cycle in p.fquiver().f_cycles() {
        match cycle.len() {
            1 => c.rank1_arrow_count += 1,
            2 => c.period2_pairs += 1,
            _ => c.rank3_count += 1,
        }
    }
    c.periods = (0..p.quiver().arrow_count()).map(|a| omega_period(p, a)).collect();
    c
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplePeriodicity {
    Periodic,
    NonPeriodic,
}

/// S_i is periodic exactly when i is a 1-vertex of the Gabriel quiver.
pub fn simple_periodicity(p: &GdPresentation) -> Vec<SimplePeriodicity> {
    let g = p.gabriel_quiver();
    (0..g.vertex_count())
        .map(|v| if g.out_arrows(v).len() == 1 { SimplePeriodicity::Periodic } else { SimplePeriodicity::NonPeriodic })
        .collect()
}

/// dim rad P_i / rad² P_i for every vertex, computed from products; rad² e_i
/// is spanned by the products of the arrows leaving i with the radical.
pub fn top_of_radical(alg: &Algebra) -> Vec<usize> {
    let q = alg.presentation().quiver();
    let f = alg.field();
    let radical: Vec<usize> =
        (0..alg.dimension()).filter(|&i| !matches!(alg.basis().elem(i), BasisElem::Idem(_))).collect();
    (0..q.vertex_count())
        .map(|v| {
            let rad_v = radical.iter().filter(|&&i| alg.basis().start(i) == v).count();
            let mut rows = Vec::new();
            for &a in q.out_arrows(v) {
                let x = alg.arrow(a);
                for &y in &radical {
                    let xy = alg.multiply(&x, &Element::basis(y, f));
                    if !xy.is_zero() {
                        rows.push(xy.terms().clone());
                    }
                }
            }
            rad_v - rank(f, &rows)
        })
        .collect()
}

/// All simples non-periodic iff the Gabriel quiver is 2-regular; returns
/// both sides.
pub fn all_simples_nonperiodic_vs_two_regular(p: &GdPresentation) -> (bool, bool) {
    let alg = Algebra::new(p.clone());
    let nonperiodic = top_of_radical(&alg).into_iter().all(|d| d == 2);
    let g = p.gabriel_quiver();
    let regular = (0..g.vertex_count()).all(|v| g.out_arrows(v).len() == 2 && g.in_arrows(v).len() == 2);
    (nonperiodic, regular)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Step {
    Direct(usize),
    Inverse(usize),
}

impl Step {
    pub fn arrow(self) -> usize {
        match self {
            Step::Direct(a) | Step::Inverse(a) => a,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteWalk {
    pub steps: Vec<Step>,
    pub closed: bool,
}

impl BipartiteWalk {
    pub fn format(&self, p: &GdPresentation) -> String {
        let q = p.quiver();
        self.steps
            .iter()
            .map(|s| match s {
                Step::Direct(a) => q.arrow_name(*a).to_string(),
                Step::Inverse(a) => format!("{}^-1", q.arrow_name(*a)),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BipartiteWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} steps{}", self.steps.len(), if self.closed { ", closed" } else { "" })
    }
}

/// w(α) = α (α*)⁻¹ h(α) (h(α)*)⁻¹ … with h(α) = bar(α*), run until h
/// returns to α; also returns the walk with virtual loops removed.
pub fn primitive_walk(p: &GdPresentation, a: usize) -> Result<(BipartiteWalk, BipartiteWalk)> {
    if !p.is_triangulation() {
        return Err(GdqError::invalid("primitive walks need a triangulation quiver"));
    }
    let q = p.quiver();
    if q.is_loop(a) {
        return Err(GdqError::invalid(format!("`{}` is a loop", q.arrow_name(a))));
    }
    let fq = p.fquiver();
    let mut steps = Vec::new();
    let mut x = a;
    loop {
        let star = fq.star(x).expect("2-regular");
        steps.push(Step::Direct(x));
        steps.push(Step::Inverse(star));
        x = fq.bar(star).expect("2-regular");
        if x == a {
            break;
        }
        if steps.len() > 4 * q.arrow_count() {
            return Err(GdqError::Inconsistency("h has no cycle through the start arrow".into()));
        }
    }
    let closed = walk_end(p, &steps) == q.source(a);
    let virtual_loops = p.virtual_loops();
    let reduced: Vec<Step> = steps.iter().copied().filter(|s| !virtual_loops.contains(&s.arrow())).collect();
    Ok((BipartiteWalk { steps, closed }, BipartiteWalk { steps: reduced, closed }))
}

fn walk_end(p: &GdPresentation, steps: &[Step]) -> usize {
    let q = p.quiver();
    let mut v = match steps[0] {
        Step::Direct(a) => q.source(a),
        Step::Inverse(a) => q.target(a),
    };
    for s in steps {
        v = match s {
            Step::Direct(a) if q.source(*a) == v => q.target(*a),
            Step::Inverse(a) if q.target(*a) == v => q.source(*a),
            _ => return usize::MAX,
        };
    }
    v
}

/// The structural claims on a primitive walk: consecutive steps share
/// endpoints, the walk closes, directions alternate in the full walk and
/// no step is undone by the next; in the reduced walk every maximal run of
/// equal direction is a g-path shorter than its B-cycle, so it contains no
/// zero relation.
pub fn walk_is_admissible(p: &GdPresentation, full: &BipartiteWalk, reduced: &BipartiteWalk) -> bool {
    let q = p.quiver();
    if !full.closed || walk_end(p, &full.steps) != start_vertex(p, &full.steps) {
        return false;
    }
    let n = full.steps.len();
    for k in 0..n {
        let (s, t) = (full.steps[k], full.steps[(k + 1) % n]);
        let alternate = matches!((s, t), (Step::Direct(_), Step::Inverse(_)) | (Step::Inverse(_), Step::Direct(_)));
        if !alternate || s.arrow() == t.arrow() {
            return false;
        }
    }
    let r = &reduced.steps;
    if r.is_empty() {
        return true;
    }
    let m = r.len();
    // endpoints must still chain after loop removal
    if walk_end(p, r) == usize::MAX {
        return false;
    }
    let dir = |s: Step| matches!(s, Step::Direct(_));
    let Some(begin) = (0..m).find(|&k| dir(r[k]) != dir(r[(k + m - 1) % m])) else {
        return false;
    };
    let mut k = 0;
    while k < m {
        let start = (begin + k) % m;
        let mut run = vec![r[start]];
        let mut j = k + 1;
        while j < m && dir(r[(begin + j) % m]) == dir(r[start]) {
            run.push(r[(begin + j) % m]);
            j += 1;
        }
        let arrows: Vec<usize> = if dir(r[start]) {
            run.iter().map(|s| s.arrow()).collect()
        } else {
            run.iter().rev().map(|s| s.arrow()).collect()
        };
        for w in arrows.windows(2) {
            if p.g(w[0]) != w[1] {
                return false;
            }
            if q.target(w[0]) != q.source(w[1]) {
                return false;
            }
        }
        if arrows.len() >= p.mn(arrows[0]) {
            return false;
        }
        k = j;
    }
    true
}

fn start_vertex(p: &GdPresentation, steps: &[Step]) -> usize {
    match steps[0] {
        Step::Direct(a) => p.quiver().source(a),
        Step::Inverse(a) => p.quiver().target(a),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    Polynomial,
    NonPolynomial,
}

impl fmt::Display for Growth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Growth::Polynomial => "polynomial",
            Growth::NonPolynomial => "nonpolynomial",
        })
    }
}
