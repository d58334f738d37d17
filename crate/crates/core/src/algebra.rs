//! The path basis, multiplication, the symmetrizing form and the Cartan matrix.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{GdqError, Result};
use crate::field::{Field, Scalar};
use crate::linalg::bareiss_determinant;
use crate::presentation::GdPresentation;
use crate::quiver::Node;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElem {
    Idem(usize),
    /// Initial subword of B_arrow of the given length, `1 ≤ len < m·n`.
    Walk { arrow: usize, len: usize },
    /// ω_v, the common class of B_α and B_ᾱ at v.
    Socle(usize),
}

#[derive(Debug, Clone)]
pub struct PathBasis {
    elems: Vec<BasisElem>,
    index: HashMap<BasisElem, usize>,
    start: Vec<usize>,
    end: Vec<usize>,
    last: Vec<Option<usize>>,
}

impl PathBasis {
    pub fn new(p: &GdPresentation) -> PathBasis {
        let q = p.quiver();
        let mut elems = Vec::new();
        let mut start = Vec::new();
        let mut end = Vec::new();
        let mut last = Vec::new();
        for v in 0..q.vertex_count() {
            elems.push(BasisElem::Idem(v));
            start.push(v);
            end.push(v);
            last.push(None);
            for &a in q.out_arrows(v) {
                let mut x = a;
                for len in 1..p.mn(a) {
                    elems.push(BasisElem::Walk { arrow: a, len });
                    start.push(v);
                    end.push(q.target(x));
                    last.push(Some(x));
                    x = p.g(x);
                }
            }
            elems.push(BasisElem::Socle(v));
            start.push(v);
            end.push(v);
            last.push(None);
        }
        let index = elems.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        PathBasis { elems, index, start, end, last }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[BasisElem] {
        &self.elems
    }

    pub fn elem(&self, i: usize) -> BasisElem {
        self.elems[i]
    }

    pub fn index_of(&self, e: BasisElem) -> Option<usize> {
        self.index.get(&e).copied()
    }

    pub fn start(&self, i: usize) -> usize {
        self.start[i]
    }

    pub fn end(&self, i: usize) -> usize {
        self.end[i]
    }

    /// Basis of P_v = e_v A.
    pub fn projective(&self, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.start[i] == v).collect()
    }
}

/// A linear combination of basis elements with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<usize, Scalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn basis(i: usize, field: Field) -> Element {
        Element::term(i, field.one())
    }

    pub fn term(i: usize, c: Scalar) -> Element {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(i, c);
        }
        Element { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<usize, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, i: usize) -> Scalar {
        self.terms.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, field: Field, i: usize, c: &Scalar) {
        let v = field.add(&self.coefficient(i), c);
        if v.is_zero() {
            self.terms.remove(&i);
        } else {
            self.terms.insert(i, v);
        }
    }

    pub fn add(&self, field: Field, other: &Element) -> Element {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(field, *i, c);
        }
        out
    }

    pub fn scale(&self, field: Field, c: &Scalar) -> Element {
        let mut out = Element::zero();
        for (i, v) in &self.terms {
            out.add_term(field, *i, &field.mul(c, v));
        }
        out
    }

    pub fn sub(&self, field: Field, other: &Element) -> Element {
        self.add(field, &other.scale(field, &field.neg(&field.one())))
    }
}

/// A presentation together with its basis.
#[derive(Debug, Clone)]
pub struct Algebra {
    p: GdPresentation,
    basis: PathBasis,
}

impl Algebra {
    pub fn new(p: GdPresentation) -> Algebra {
        let basis = PathBasis::new(&p);
        Algebra { p, basis }
    }

    pub fn presentation(&self) -> &GdPresentation {
        &self.p
    }

    pub fn basis(&self) -> &PathBasis {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.p.field()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.basis.index_of(BasisElem::Idem(v)).expect("vertex")
    }

    pub fn socle(&self, v: usize) -> usize {
        self.basis.index_of(BasisElem::Socle(v)).expect("vertex")
    }

    /// The basis element representing a single arrow.
    pub fn arrow_basis(&self, a: usize) -> usize {
        if self.p.mn(a) == 1 {
            self.socle(self.p.quiver().source(a))
        } else {
            self.basis.index_of(BasisElem::Walk { arrow: a, len: 1 }).expect("arrow walk")
        }
    }

    pub fn arrow(&self, a: usize) -> Element {
        Element::basis(self.arrow_basis(a), self.field())
    }

    pub fn one_at(&self, v: usize) -> Element {
        Element::basis(self.idempotent(v), self.field())
    }

    /// Product of two basis elements: zero or a multiple of one basis element.
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<(usize, Scalar)> {
        let f = self.field();
        if self.basis.end(i) != self.basis.start(j) {
            return None;
        }
        match (self.basis.elem(i), self.basis.elem(j)) {
            (BasisElem::Idem(_), _) => Some((j, f.one())),
            (_, BasisElem::Idem(_)) => Some((i, f.one())),
            (BasisElem::Socle(_), _) | (_, BasisElem::Socle(_)) => None,
            (BasisElem::Walk { arrow: a, len: l1 }, BasisElem::Walk { arrow: b, len: l2 }) => {
                let last = self.basis.last[i].expect("walk");
                let s = self.p.quiver().source(a);
                if b == self.p.g(last) {
                    let total = l1 + l2;
                    let mn = self.p.mn(a);
                    if total < mn {
                        Some((self.basis.index_of(BasisElem::Walk { arrow: a, len: total }).expect("walk"), f.one()))
                    } else if total == mn {
                        Some((self.socle(s), f.one()))
                    } else {
                        None
                    }
                } else if b == last && l1 == 1 && l2 == 1 && self.p.is_border_loop(b) {
                    let c = self.p.border_scalar(s);
                    if c.is_zero() {
                        None
                    } else {
                        Some((self.socle(s), c))
                    }
                } else {
                    None
                }
            }
        }
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Element {
        let f = self.field();
        let mut out = Element::zero();
        for (i, x) in u.terms() {
            for (j, y) in v.terms() {
                if let Some((k, c)) = self.mul_basis(*i, *j) {
                    out.add_term(f, k, &f.mul(&f.mul(x, y), &c));
                }
            }
        }
        out
    }

    /// Value of a path of arrows; the empty path is not allowed.
    pub fn path(&self, arrows: &[usize]) -> Element {
        self.path_at(self.p.quiver().source(arrows[0]), arrows)
    }

    /// Value of a path starting at `v`; the empty path is e_v.
    pub fn path_at(&self, v: usize, arrows: &[usize]) -> Element {
        let mut acc = self.one_at(v);
        for &a in arrows {
            acc = self.multiply(&acc, &self.arrow(a));
        }
        acc
    }

    /// φ: the sum of the socle coefficients.
    pub fn symmetrizing_form(&self, x: &Element) -> Scalar {
        let f = self.field();
        x.terms().iter().fold(f.zero(), |acc, (i, c)| match self.basis.elem(*i) {
            BasisElem::Socle(_) => f.add(&acc, c),
            _ => acc,
        })
    }

    /// φ(b_i·b_j) on basis elements.
    pub fn form_on_basis(&self, i: usize, j: usize) -> Scalar {
        match self.mul_basis(i, j) {
            Some((k, c)) if matches!(self.basis.elem(k), BasisElem::Socle(_)) => c,
            _ => Scalar::zero(),
        }
    }

    pub fn cartan_matrix(&self) -> CartanMatrix {
        cartan_matrix(&self.p)
    }

    pub fn elem_name(&self, i: usize) -> String {
        let q = self.p.quiver();
        match self.basis.elem(i) {
            BasisElem::Idem(v) => format!("e[{}]", q.vertex_name(v)),
            BasisElem::Socle(v) => format!("B[{}]", q.arrow_name(q.out_arrows(v)[0])),
            BasisElem::Walk { arrow, len } => {
                let mut x = arrow;
                let mut names = Vec::with_capacity(len);
                for _ in 0..len {
                    names.push(q.arrow_name(x).to_string());
                    x = self.p.g(x);
                }
                names.join("*")
            }
        }
    }

    pub fn format_element(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let f = self.field();
        let parts: Vec<String> =
            x.terms().iter().map(|(i, c)| format!("{}·{}", f.format_scalar(c), self.elem_name(*i))).collect();
        parts.join(" + ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    pub entries: Vec<Vec<u64>>,
    pub determinant: BigInt,
}

impl CartanMatrix {
    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn is_singular(&self) -> bool {
        self.determinant.is_zero()
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}]", r.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Entry (i,j) counts basis paths of P_i ending at j. Counted directly from
/// the orbit data, without building scalars.
pub fn cartan_matrix(p: &GdPresentation) -> CartanMatrix {
    let q = p.quiver();
    let n = q.vertex_count();
    let mut c = vec![vec![0u64; n]; n];
    for v in 0..n {
        c[v][v] += 2;
        for &a in q.out_arrows(v) {
            let mut x = a;
            for _ in 1..p.mn(a) {
                c[v][q.target(x)] += 1;
                x = p.g(x);
            }
        }
    }
    let big: Vec<Vec<BigInt>> = c.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    CartanMatrix { determinant: bareiss_determinant(&big), entries: c }
}

/// h(α) = α − a·A_ᾱ on border loops with b = 2a, identity elsewhere, checked
/// to kill every relation of the undeformed algebra inside `p`.
pub fn verify_char_not_2_iso(p: &GdPresentation) -> Result<bool> {
    let f = p.field();
    if f.characteristic() == 2 {
        return Err(GdqError::CharTwo("the substitution α − (b/2)·A_ᾱ"));
    }
    let alg = Algebra::new(p.clone());
    let q = p.quiver();
    let half = f.inv(&f.from_int(2)).expect("char is not 2");
    let h: Vec<Element> = (0..q.arrow_count())
        .map(|a| {
            let x = alg.arrow(a);
            if !p.is_border_loop(a) {
                return x;
            }
            let s = q.source(a);
            let coeff = f.mul(&p.border_scalar(s), &half);
            let bar = p.fquiver().bar(a).expect("border loops sit at 2-vertices");
            x.sub(f, &alg.path_at(s, &p.cycle_a(bar)).scale(f, &coeff))
        })
        .collect();
    let image = |v: usize, path: &[usize]| {
        path.iter().fold(alg.one_at(v), |acc, &a| alg.multiply(&acc, &h[a]))
    };
    for a in 0..q.arrow_count() {
        if let Node::Arrow(b) = p.fquiver().next(a) {
            if !image(q.source(a), &[a, b]).is_zero() {
                return Ok(false);
            }
        }
    }
    for v in 0..q.vertex_count() {
        if let [a, b] = q.out_arrows(v) {
            let lhs = image(v, &p.cycle_b(*a));
            let rhs = image(v, &p.cycle_b(*b));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    let undeformed = Algebra::new(p.undeformed());
    Ok(undeformed.dimension() == alg.dimension())
}

/// (u₁·ε + u₂·A_ε̄ + u₃·ω)² for a border loop ε, computed in `p`. In
/// characteristic 2 this equals u₁²·b·ω whatever u₂ and u₃ are.
pub fn border_loop_square(p: &GdPresentation, loop_arrow: usize, u: [&Scalar; 3]) -> Result<Element> {
    if !p.is_border_loop(loop_arrow) {
        return Err(GdqError::invalid(format!("`{}` is not a border loop", p.quiver().arrow_name(loop_arrow))));
    }
    let f = p.field();
    let alg = Algebra::new(p.clone());
    let s = p.quiver().source(loop_arrow);
    let bar = p.fquiver().bar(loop_arrow).expect("2-vertex");
    let h = alg
        .arrow(loop_arrow)
        .scale(f, u[0])
        .add(f, &alg.path_at(s, &p.cycle_a(bar)).scale(f, u[1]))
        .add(f, &Element::basis(alg.socle(s), f).scale(f, u[2]));
    Ok(alg.multiply(&h, &h))
}

/// Sum of basis-element counts per vertex; the oracle for the row sums.
pub fn projective_dimensions(alg: &Algebra) -> Vec<usize> {
    let n = alg.presentation().quiver().vertex_count();
    (0..n).map(|v| alg.basis().projective(v).len()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::build_presentation;
    use crate::quiver::{quiver_from_strs, TriangulationQuiver};

    fn lambda(r: u32, s: u32, b: i64, field: Field) -> Algebra {
        let q = quiver_from_strs(
            &["1", "2"],
            &[("alpha", "1", "1"), ("beta", "1", "2"), ("gamma", "2", "1"), ("eta", "2", "2")],
        )
        .unwrap();
        let tq = TriangulationQuiver::from_cycles(q, &[vec!["alpha", "beta", "gamma"], vec!["eta"]]).unwrap();
        let w: BTreeMap<String, u32> = [("alpha".to_string(), r), ("beta".to_string(), s)].into();
        let bd: BTreeMap<String, Scalar> = [("2".to_string(), field.from_int(b))].into();
        Algebra::new(build_presentation(&tq, &w, &bd, field).unwrap())
    }

    fn id(alg: &Algebra, name: &str) -> usize {
        alg.presentation().quiver().arrow_id(name).unwrap()
    }

    #[test]
    fn lambda_products() {
        let f = Field::Rational;
        let alg = lambda(1, 1, 3, f);
        let (alpha, beta, gamma, eta) = (id(&alg, "alpha"), id(&alg, "beta"), id(&alg, "gamma"), id(&alg, "eta"));
        let b_eg = alg.path(&[eta, gamma]);
        assert_eq!(alg.multiply(&alg.arrow(beta), &b_eg), Element::basis(alg.socle(0), f));
        assert_eq!(alg.multiply(&alg.arrow(eta), &alg.arrow(eta)), Element::term(alg.socle(1), f.from_int(3)));
        assert!(alg.multiply(&alg.arrow(alpha), &alg.arrow(beta)).is_zero());
        assert_eq!(alg.dimension(), 10);
        assert_eq!(projective_dimensions(&alg), vec![4, 6]);
    }

    #[test]
    fn form_values() {
        let f = Field::Rational;
        let alg = lambda(2, 1, 0, f);
        for v in 0..2 {
            assert_eq!(alg.symmetrizing_form(&Element::basis(alg.socle(v), f)), f.one());
            assert!(alg.symmetrizing_form(&alg.one_at(v)).is_zero());
        }
        for a in 0..4 {
            assert!(alg.symmetrizing_form(&alg.arrow(a)).is_zero());
        }
    }

    #[test]
    fn lambda_cartan() {
        for r in 1..4u64 {
            for s in 1..4u64 {
                let c = lambda(r as u32, s as u32, 0, Field::Rational).cartan_matrix();
                assert_eq!(c.entries, vec![vec![r + s, 2 * s], vec![2 * s, 4 * s]]);
                assert_eq!(c.determinant, BigInt::from(4 * r * s));
            }
        }
    }

    #[test]
    fn substitution_on_lambda() {
        assert!(verify_char_not_2_iso(&lambda(1, 1, 2, Field::Rational).presentation().clone()).unwrap());
        assert!(verify_char_not_2_iso(&lambda(2, 2, 5, Field::Prime(3)).presentation().clone()).unwrap());
        assert!(verify_char_not_2_iso(&lambda(1, 1, 1, Field::Prime(2)).presentation().clone()).is_err());
    }
}
