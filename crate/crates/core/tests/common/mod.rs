#![allow(dead_code)]

use gdq::algebra::Algebra;
use gdq::builtins::*;
use gdq::presentation::GdPresentation;
use gdq::Field;

/// Determinant by Laplace expansion along the first row.
pub fn laplace_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect()).collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * laplace_det(&minor);
    }
    total
}

/// dim e_i B e_j by counting basis elements from i to j.
pub fn counted_cartan(p: &GdPresentation) -> Vec<Vec<i128>> {
    let alg = Algebra::new(p.clone());
    let n = p.quiver().vertex_count();
    let mut c = vec![vec![0i128; n]; n];
    for i in 0..alg.dimension() {
        c[alg.basis().start(i)][alg.basis().end(i)] += 1;
    }
    c
}

/// Σ m·n² over g-orbits plus one per 1-vertex.
pub fn orbit_dimension(p: &GdPresentation) -> usize {
    let orbits: usize = p.orbits().iter().zip(p.orbit_weights()).map(|(o, &m)| m as usize * o.len() * o.len()).sum();
    orbits + p.one_vertices().len()
}

/// Undeformed presentations from the built-in examples, including
/// contracted and Gabriel forms.
pub fn builtin_presentations() -> Vec<(String, GdPresentation)> {
    let q = Field::Rational;
    let mut out: Vec<(String, GdPresentation)> = Vec::new();
    for m in 1..=3 {
        out.push((format!("ex4.3 m={m}"), example_4_3_weighted(m, [0, 0, 0], q)));
        out.push((format!("markov m={m}"), markov_weighted(m)));
    }
    for r in 1..=3 {
        for s in 1..=3 {
            out.push((format!("Lambda({r},{s},0)"), lambda(r, s, 0, q)));
            for t in 1..=3 {
                out.push((format!("Gamma({r},{s},{t})"), gamma(r, s, t)));
                out.push((format!("Omega({r},{s},{t})"), omega(r, s, t)));
            }
        }
    }
    for w in [[1, 1, 1, 1], [2, 3, 1, 1], [1, 2, 2, 1]] {
        out.push((format!("ex7.4 {w:?}"), example_7_4_weighted(w, 0, q)));
    }
    out.push(("ex7.4 contracted (1,1)".into(), example_7_4_contracted(1, 1)));
    out.push(("ex7.4 contracted (2,3)".into(), example_7_4_contracted(2, 3)));
    for n in 2..=4 {
        out.push((format!("T({n}) 1,1"), example_7_5_weighted(n, 1, 1)));
        out.push((format!("T({n}) 2,3"), example_7_5_weighted(n, 2, 3)));
        out.push((format!("T({n}) contracted"), example_7_5_contracted(n, 2, 1)));
    }
    let gabriel: Vec<(String, GdPresentation)> = out
        .iter()
        .filter(|(_, p)| !p.virtual_loops().is_empty())
        .filter_map(|(name, p)| p.gabriel_presentation().ok().map(|g| (format!("{name} gabriel"), g)))
        .collect();
    out.extend(gabriel);
    out
}
