//! Weighted presentations: a quiver with f′, orbit weights, border scalars and
//! a field.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{GdqError, Result};
use crate::field::{Field, Scalar};
use crate::quiver::{FQuiver, Node, OrbitData, Quiver, TriangulationQuiver};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GdPresentation {
    fq: FQuiver,
    od: OrbitData,
    weights: Vec<u32>,
    border: BTreeMap<usize, Scalar>,
    field: Field,
}

impl GdPresentation {
    /// `weights` is indexed like `orbit_data().orbits`; `border` may omit
    /// vertices, which then get 0.
    pub fn new(fq: FQuiver, weights: Vec<u32>, border: BTreeMap<usize, Scalar>, field: Field) -> Result<Self> {
        let violations = fq.shape_violations();
        if !violations.is_empty() {
            let msg: Vec<String> = violations.iter().map(ToString::to_string).collect();
            return Err(GdqError::invalid(msg.join("; ")));
        }
        let od = fq.orbit_data();
        if weights.len() != od.orbits.len() {
            return Err(GdqError::invalid(format!(
                "expected {} orbit weights, got {}",
                od.orbits.len(),
                weights.len()
            )));
        }
        if let Some(k) = weights.iter().position(|&m| m == 0) {
            let a = od.orbits[k][0];
            return Err(GdqError::invalid(format!("weight of `{}` must be positive", fq.quiver().arrow_name(a))));
        }
        let border_vertices = border_vertices(&fq);
        let mut full = BTreeMap::new();
        for (v, b) in border {
            if !border_vertices.contains(&v) {
                return Err(GdqError::invalid(format!(
                    "border scalar on `{}`, which carries no f-fixed loop",
                    fq.quiver().vertex_name(v)
                )));
            }
            full.insert(v, field.normalize(b));
        }
        for v in border_vertices {
            full.entry(v).or_insert_with(Scalar::zero);
        }
        Ok(GdPresentation { fq, od, weights, border: full, field })
    }

    /// Weights given per arrow name; each named arrow sets its orbit.
    /// Orbits left unnamed take `default`, or are an error when it is `None`.
    pub fn with_named_weights(
        fq: FQuiver,
        weights: &BTreeMap<String, u32>,
        default: Option<u32>,
        border: &BTreeMap<String, Scalar>,
        field: Field,
    ) -> Result<Self> {
        let od = fq.orbit_data();
        let q = fq.quiver();
        let mut per_orbit: Vec<Option<u32>> = vec![None; od.orbits.len()];
        for (name, &m) in weights {
            let a = q.arrow_by_name(name)?;
            let k = od.orbit_of[a];
            match per_orbit[k] {
                Some(old) if old != m => {
                    return Err(GdqError::invalid(format!("conflicting weights {old} and {m} on the orbit of `{name}`")))
                }
                _ => per_orbit[k] = Some(m),
            }
        }
        let per_orbit = per_orbit
            .into_iter()
            .enumerate()
            .map(|(k, m)| {
                m.or(default).ok_or_else(|| {
                    GdqError::invalid(format!("missing weight for the orbit of `{}`", q.arrow_name(od.orbits[k][0])))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut b = BTreeMap::new();
        for (name, s) in border {
            b.insert(q.vertex(name)?, s.clone());
        }
        Self::new(fq, per_orbit, b, field)
    }

    pub fn fquiver(&self) -> &FQuiver {
        &self.fq
    }

    pub fn quiver(&self) -> &Quiver {
        self.fq.quiver()
    }

    pub fn orbit_data(&self) -> &OrbitData {
        &self.od
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.od.orbits
    }

    pub fn orbit_weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn border(&self) -> &BTreeMap<usize, Scalar> {
        &self.border
    }

    pub fn border_scalar(&self, v: usize) -> Scalar {
        self.border.get(&v).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn has_deformation(&self) -> bool {
        self.border.values().any(|b| !b.is_zero())
    }

    pub fn weight(&self, a: usize) -> u32 {
        self.weights[self.od.orbit_of[a]]
    }

    pub fn n(&self, a: usize) -> usize {
        self.od.n(a)
    }

    /// m_α·n_α, the length of B_α.
    pub fn mn(&self, a: usize) -> usize {
        self.weight(a) as usize * self.n(a)
    }

    pub fn g(&self, a: usize) -> usize {
        self.od.g[a]
    }

    pub fn is_border_loop(&self, a: usize) -> bool {
        self.fq.next(a) == Node::Arrow(a)
    }

    pub fn one_vertices(&self) -> Vec<usize> {
        self.fq.f_vertices()
    }

    pub fn two_cycles(&self) -> Vec<(usize, usize)> {
        self.fq
            .f_cycles()
            .into_iter()
            .filter_map(|c| match c.as_slice() {
                [Node::Arrow(a), Node::Arrow(b)] => Some((*a, *b)),
                _ => None,
            })
            .collect()
    }

    /// No 1-vertices and no f′ 2-cycles.
    pub fn is_triangulation(&self) -> bool {
        self.one_vertices().is_empty() && self.two_cycles().is_empty()
    }

    pub fn triangulation_quiver(&self) -> Result<TriangulationQuiver> {
        TriangulationQuiver::new(self.fq.clone())
    }

    pub fn with_field(&self, field: Field) -> Result<Self> {
        Self::new(self.fq.clone(), self.weights.clone(), self.border.clone(), field)
    }

    pub fn with_border(&self, border: BTreeMap<usize, Scalar>) -> Result<Self> {
        Self::new(self.fq.clone(), self.weights.clone(), border, self.field)
    }

    pub fn undeformed(&self) -> Self {
        let border = self.border.keys().map(|&v| (v, Scalar::zero())).collect();
        self.with_border(border).expect("same border vertices")
    }

    /// B_α as an arrow sequence of length m_α·n_α.
    pub fn cycle_b(&self, a: usize) -> Vec<usize> {
        let mut path = Vec::with_capacity(self.mn(a));
        let mut x = a;
        for _ in 0..self.mn(a) {
            path.push(x);
            x = self.g(x);
        }
        path
    }

    /// A_α: B_α without its last arrow (the empty path when m_α·n_α = 1).
    pub fn cycle_a(&self, a: usize) -> Vec<usize> {
        let mut p = self.cycle_b(a);
        p.pop();
        p
    }

    /// Dimension predicted by the orbit data: Σ m_O·n_O² plus one for each
    /// 1-vertex.
    pub fn dimension_formula(&self) -> usize {
        let orbit_part: usize =
            self.od.orbits.iter().zip(&self.weights).map(|(o, &m)| m as usize * o.len() * o.len()).sum();
        orbit_part + self.one_vertices().len()
    }

    /// g′-fixed loops of weight 1; these are not arrows of the Gabriel quiver.
    pub fn virtual_loops(&self) -> Vec<usize> {
        (0..self.quiver().arrow_count()).filter(|&a| self.g(a) == a && self.weight(a) == 1).collect()
    }

    pub fn gabriel_quiver(&self) -> Quiver {
        let drop: BTreeSet<usize> = self.virtual_loops().into_iter().collect();
        self.quiver().without_arrows(&drop)
    }

    /// The same algebra presented on its Gabriel quiver: every virtual loop σ
    /// at i is removed and its f′-cycle (σ σ̄ σ*) becomes (σ* i σ̄).
    pub fn gabriel_presentation(&self) -> Result<GdPresentation> {
        let loops = self.virtual_loops();
        if loops.is_empty() {
            return Ok(self.clone());
        }
        let q = self.quiver();
        let drop: BTreeSet<usize> = loops.iter().copied().collect();
        let gq = q.without_arrows(&drop);
        let mut cycles: Vec<Vec<String>> = Vec::new();
        for cycle in self.fq.f_cycles() {
            let names: Vec<String> = self.fq.cycle_names(&cycle);
            let hit = cycle.iter().position(|n| matches!(n, Node::Arrow(a) if drop.contains(a)));
            match hit {
                None => cycles.push(names),
                Some(k) => {
                    let sigma = cycle[k].arrow().expect("arrow");
                    if cycle.len() != 3 || cycle.iter().any(|n| matches!(n, Node::Vertex(_))) {
                        return Err(GdqError::invalid("virtual loop outside an arrow 3-cycle"));
                    }
                    let bar = names[(k + 1) % 3].clone();
                    let star = names[(k + 2) % 3].clone();
                    if drop.iter().any(|d| q.arrow_name(*d) == bar || q.arrow_name(*d) == star) {
                        return Err(GdqError::invalid("two virtual loops in one f-cycle"));
                    }
                    cycles.push(vec![star, q.vertex_name(q.source(sigma)).to_string(), bar]);
                }
            }
        }
        let fq = FQuiver::from_cycles(gq, &cycles)?;
        let named: BTreeMap<String, u32> =
            (0..q.arrow_count()).filter(|a| !drop.contains(a)).map(|a| (q.arrow_name(a).to_string(), self.weight(a))).collect();
        let border: BTreeMap<String, Scalar> =
            self.border.iter().map(|(v, b)| (q.vertex_name(*v).to_string(), b.clone())).collect();
        GdPresentation::with_named_weights(fq, &named, None, &border, self.field)
    }

    pub fn arrow_names(&self, path: &[usize]) -> Vec<String> {
        path.iter().map(|&a| self.quiver().arrow_name(a).to_string()).collect()
    }
}

fn border_vertices(fq: &FQuiver) -> BTreeSet<usize> {
    (0..fq.quiver().arrow_count())
        .filter(|&a| fq.next(a) == Node::Arrow(a) && fq.quiver().is_loop(a))
        .map(|a| fq.quiver().source(a))
        .collect()
}

/// B(Q,f,m,b) for a triangulation quiver. Weights are keyed by arrow name and
/// must cover every g-orbit; border scalars are keyed by vertex name.
pub fn build_presentation(
    tq: &TriangulationQuiver,
    weights: &BTreeMap<String, u32>,
    border: &BTreeMap<String, Scalar>,
    field: Field,
) -> Result<GdPresentation> {
    GdPresentation::with_named_weights(tq.fquiver().clone(), weights, None, border, field)
}

/// All weights 1, no deformation, rationals.
pub fn unit_presentation(tq: &TriangulationQuiver) -> GdPresentation {
    let n = tq.orbit_data().orbits.len();
    GdPresentation::new(tq.fquiver().clone(), vec![1; n], BTreeMap::new(), Field::Rational)
        .expect("valid triangulation quiver")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::quiver_from_strs;

    fn lambda(r: u32, s: u32) -> GdPresentation {
        let q = quiver_from_strs(
            &["1", "2"],
            &[("alpha", "1", "1"), ("beta", "1", "2"), ("gamma", "2", "1"), ("eta", "2", "2")],
        )
        .unwrap();
        let tq = TriangulationQuiver::from_cycles(q, &[vec!["alpha", "beta", "gamma"], vec!["eta"]]).unwrap();
        let w: BTreeMap<String, u32> = [("alpha".to_string(), r), ("beta".to_string(), s)].into();
        build_presentation(&tq, &w, &BTreeMap::new(), Field::Rational).unwrap()
    }

    #[test]
    fn cycles_of_lambda() {
        let p = lambda(2, 1);
        let a = p.quiver().arrow_id("alpha").unwrap();
        let b = p.quiver().arrow_id("beta").unwrap();
        assert_eq!(p.arrow_names(&p.cycle_b(a)), ["alpha", "alpha"]);
        assert_eq!(p.arrow_names(&p.cycle_a(a)), ["alpha"]);
        assert_eq!(p.arrow_names(&p.cycle_b(b)), ["beta", "eta", "gamma"]);
        assert_eq!(p.arrow_names(&p.cycle_a(b)), ["beta", "eta"]);
        let p1 = lambda(1, 1);
        assert!(p1.cycle_a(a).is_empty());
    }

    #[test]
    fn missing_and_zero_weights_rejected() {
        let p = lambda(1, 1);
        let tq = p.triangulation_quiver().unwrap();
        let w: BTreeMap<String, u32> = [("alpha".to_string(), 1)].into();
        assert!(build_presentation(&tq, &w, &BTreeMap::new(), Field::Rational).is_err());
        let w: BTreeMap<String, u32> = [("alpha".to_string(), 0), ("beta".to_string(), 1)].into();
        assert!(build_presentation(&tq, &w, &BTreeMap::new(), Field::Rational).is_err());
        let w: BTreeMap<String, u32> = [("alpha".to_string(), 1), ("beta".to_string(), 1), ("eta".to_string(), 2)].into();
        assert!(build_presentation(&tq, &w, &BTreeMap::new(), Field::Rational).is_err());
    }

    #[test]
    fn border_only_on_border_vertices() {
        let p = lambda(1, 1);
        let tq = p.triangulation_quiver().unwrap();
        let w: BTreeMap<String, u32> = [("alpha".to_string(), 1), ("beta".to_string(), 1)].into();
        let bad: BTreeMap<String, Scalar> = [("1".to_string(), Field::Rational.one())].into();
        assert!(build_presentation(&tq, &w, &bad, Field::Rational).is_err());
        let good: BTreeMap<String, Scalar> = [("2".to_string(), Field::Rational.one())].into();
        let p = build_presentation(&tq, &w, &good, Field::Rational).unwrap();
        assert!(p.has_deformation());
    }

    #[test]
    fn gabriel_reduction_of_lambda() {
        let p = lambda(1, 1);
        assert_eq!(p.gabriel_quiver().arrow_count(), 3);
        let g = p.gabriel_presentation().unwrap();
        assert_eq!(g.one_vertices(), vec![0]);
        assert_eq!(g.dimension_formula(), p.dimension_formula());
        assert_eq!(lambda(2, 1).gabriel_quiver().arrow_count(), 4);
    }

    #[test]
    fn dimension_of_lambda() {
        for r in 1..4 {
            for s in 1..4 {
                assert_eq!(lambda(r, s).dimension_formula(), (r + 9 * s) as usize);
            }
        }
    }
}
