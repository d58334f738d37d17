//! Named quivers, surfaces and presentations used throughout the tests and
//! the command line.

use std::collections::BTreeMap;

use crate::field::{Field, Scalar};
use crate::presentation::GdPresentation;
use crate::quiver::{quiver_from_strs, FQuiver, TriangulationQuiver};
use crate::surface::SurfaceTriangulation;

fn tq(vertices: &[&str], arrows: &[(&str, &str, &str)], cycles: &[&[&str]]) -> TriangulationQuiver {
    let q = quiver_from_strs(vertices, arrows).expect("built-in quiver");
    let cycles: Vec<Vec<&str>> = cycles.iter().map(|c| c.to_vec()).collect();
    TriangulationQuiver::from_cycles(q, &cycles).expect("built-in triangulation quiver")
}

fn weighted(fq: FQuiver, weights: &[(&str, u32)], border: &[(&str, Scalar)], field: Field) -> GdPresentation {
    let w: BTreeMap<String, u32> = weights.iter().map(|(a, m)| (a.to_string(), *m)).collect();
    let b: BTreeMap<String, Scalar> = border.iter().map(|(v, s)| (v.to_string(), s.clone())).collect();
    GdPresentation::with_named_weights(fq, &w, None, &b, field).expect("built-in presentation")
}

/// One triangle with three boundary loops.
pub fn example_4_3() -> TriangulationQuiver {
    tq(
        &["1", "2", "3"],
        &[
            ("alpha", "1", "2"),
            ("beta", "2", "3"),
            ("gamma", "3", "1"),
            ("eps", "1", "1"),
            ("eta", "2", "2"),
            ("mu", "3", "3"),
        ],
        &[&["alpha", "beta", "gamma"], &["eps"], &["eta"], &["mu"]],
    )
}

/// Three vertices, one triangle plus three border loops, with weight m and
/// border scalars (b₁, b₂, b₃).
pub fn example_4_3_weighted(m: u32, b: [i64; 3], field: Field) -> GdPresentation {
    weighted(
        example_4_3().into_fquiver(),
        &[("alpha", m)],
        &[("1", field.from_int(b[0])), ("2", field.from_int(b[1])), ("3", field.from_int(b[2]))],
        field,
    )
}

pub fn markov() -> TriangulationQuiver {
    tq(
        &["1", "2", "3"],
        &[
            ("alpha1", "1", "2"),
            ("alpha2", "2", "3"),
            ("alpha3", "3", "1"),
            ("beta1", "1", "2"),
            ("beta2", "2", "3"),
            ("beta3", "3", "1"),
        ],
        &[&["alpha1", "alpha2", "alpha3"], &["beta1", "beta2", "beta3"]],
    )
}

pub fn markov_weighted(m: u32) -> GdPresentation {
    weighted(markov().into_fquiver(), &[("alpha1", m)], &[], Field::Rational)
}

pub fn lambda_quiver() -> TriangulationQuiver {
    tq(
        &["1", "2"],
        &[("alpha", "1", "1"), ("beta", "1", "2"), ("gamma", "2", "1"), ("eta", "2", "2")],
        &[&["alpha", "beta", "gamma"], &["eta"]],
    )
}

/// Λ(r, s, b).
pub fn lambda(r: u32, s: u32, b: i64, field: Field) -> GdPresentation {
    weighted(lambda_quiver().into_fquiver(), &[("alpha", r), ("beta", s)], &[("2", field.from_int(b))], field)
}

pub fn gamma_quiver() -> TriangulationQuiver {
    tq(
        &["1", "2", "3"],
        &[
            ("alpha", "1", "1"),
            ("beta", "1", "2"),
            ("gamma", "2", "1"),
            ("delta", "2", "3"),
            ("eta", "3", "2"),
            ("xi", "3", "3"),
        ],
        &[&["alpha", "beta", "gamma"], &["xi", "eta", "delta"]],
    )
}

/// Γ(r, s, t).
pub fn gamma(r: u32, s: u32, t: u32) -> GdPresentation {
    weighted(gamma_quiver().into_fquiver(), &[("alpha", r), ("beta", s), ("xi", t)], &[], Field::Rational)
}

pub fn omega_quiver() -> TriangulationQuiver {
    tq(
        &["1", "2", "3"],
        &[
            ("alpha1", "1", "2"),
            ("alpha2", "2", "3"),
            ("alpha3", "3", "1"),
            ("beta1", "2", "1"),
            ("beta2", "3", "2"),
            ("beta3", "1", "3"),
        ],
        &[&["alpha1", "alpha2", "alpha3"], &["beta1", "beta3", "beta2"]],
    )
}

/// Ω(m₁, m₂, m₃).
pub fn omega(m1: u32, m2: u32, m3: u32) -> GdPresentation {
    weighted(omega_quiver().into_fquiver(), &[("alpha1", m1), ("alpha2", m2), ("alpha3", m3)], &[], Field::Rational)
}

/// Eight vertices, two 2-triangle disks, border vertex 8.
pub fn example_7_4() -> TriangulationQuiver {
    tq(
        &["1", "2", "3", "4", "5", "6", "7", "8"],
        &[
            ("eta", "8", "8"),
            ("xi", "8", "7"),
            ("phi", "7", "6"),
            ("lambda", "6", "8"),
            ("zeta", "5", "6"),
            ("psi", "6", "7"),
            ("mu", "7", "5"),
            ("delta", "5", "2"),
            ("omega", "2", "4"),
            ("rho", "4", "5"),
            ("chi", "1", "2"),
            ("pi", "2", "3"),
            ("kappa", "3", "1"),
            ("nu", "1", "3"),
            ("eps", "3", "4"),
            ("theta", "4", "1"),
        ],
        &[
            &["xi", "phi", "lambda"],
            &["zeta", "psi", "mu"],
            &["delta", "omega", "rho"],
            &["chi", "pi", "kappa"],
            &["nu", "eps", "theta"],
            &["eta"],
        ],
    )
}

/// Weights m, n, p, q on the orbits of eta, omega, kappa and phi; border
/// scalar b at vertex 8.
pub fn example_7_4_weighted(w: [u32; 4], b: i64, field: Field) -> GdPresentation {
    weighted(
        example_7_4().into_fquiver(),
        &[("eta", w[0]), ("omega", w[1]), ("kappa", w[2]), ("phi", w[3])],
        &[("8", field.from_int(b))],
        field,
    )
}
/// The four-vertex contraction of the eight-vertex quiver, with orbit
/// The contracted eight-vertex presentation with 2-cycles, with orbit
/// weights m (orbit of sigma) and n (orbit of omega).
pub fn example_7_4_contracted(m: u32, n: u32) -> GdPresentation {
    let q = quiver_from_strs(
        &["2", "4", "5", "8"],
        &[
            ("eta", "8", "8"),
            ("alpha", "8", "5"),
            ("beta", "5", "8"),
            ("delta", "5", "2"),
            ("omega", "2", "4"),
            ("rho", "4", "5"),
            ("gamma", "4", "2"),
            ("sigma", "2", "4"),
        ],
    )
    .expect("quiver");
    let fq = FQuiver::from_cycles(
        q,
        &[vec!["alpha", "beta"], vec!["gamma", "sigma"], vec!["delta", "omega", "rho"], vec!["eta"]],
    )
    .expect("f");
    weighted(fq, &[("sigma", m), ("omega", n)], &[], Field::Rational)
}

fn t_names(n: usize) -> (Vec<String>, Vec<(String, String, String)>, Vec<Vec<String>>) {
    let a = |i: usize| format!("a{}", (i - 1) % n + 1);
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    let mut cycles = Vec::new();
    for i in 1..=n {
        let (ai, ci, di, an) = (a(i), format!("c{i}"), format!("d{i}"), a(i + 1));
        vertices.extend([ai.clone(), ci.clone(), di.clone()]);
        let ar = |name: &str, s: &str, t: &str| (format!("{name}{i}"), s.to_string(), t.to_string());
        arrows.extend([
            ar("gamma", &ai, &ci),
            ar("xi", &ci, &di),
            ar("delta", &di, &ai),
            ar("eta", &di, &ci),
            ar("sigma", &ci, &an),
            ar("rho", &an, &di),
        ]);
        cycles.push(vec![format!("gamma{i}"), format!("xi{i}"), format!("delta{i}")]);
        cycles.push(vec![format!("eta{i}"), format!("sigma{i}"), format!("rho{i}")]);
    }
    (vertices, arrows, cycles)
}

/// T(n): n 2-triangle disks glued in a ring, n ≥ 2.
pub fn example_7_5(n: usize) -> TriangulationQuiver {
    assert!(n >= 2, "T(n) needs n ≥ 2");
    let (vertices, arrows, cycles) = t_names(n);
    let q = crate::quiver::Quiver::new(vertices, arrows).expect("quiver");
    TriangulationQuiver::from_cycles(q, &cycles).expect("T(n)")
}

/// T(n) with weight p on the orbit of gamma1 and q on the orbit of rho1; the
/// disk-internal orbits get weight 1.
pub fn example_7_5_weighted(n: usize, p: u32, q: u32) -> GdPresentation {
    let t = example_7_5(n);
    let mut w: Vec<(String, u32)> = vec![("gamma1".into(), p), ("rho1".into(), q)];
    for i in 1..=n {
        w.push((format!("xi{i}"), 1));
    }
    let w: Vec<(&str, u32)> = w.iter().map(|(a, m)| (a.as_str(), *m)).collect();
    weighted(t.into_fquiver(), &w, &[], Field::Rational)
}

/// The n-vertex double cycle with (α_i β_i) 2-cycles.
pub fn example_7_5_contracted(n: usize, p: u32, q: u32) -> GdPresentation {
    let v = |i: usize| format!("a{}", (i - 1) % n + 1);
    let vertices: Vec<String> = (1..=n).map(v).collect();
    let mut arrows = Vec::new();
    let mut cycles = Vec::new();
    for i in 1..=n {
        arrows.push((format!("alpha{i}"), v(i), v(i + 1)));
        arrows.push((format!("beta{i}"), v(i + 1), v(i)));
        cycles.push(vec![format!("alpha{i}"), format!("beta{i}")]);
    }
    let quiver = crate::quiver::Quiver::new(vertices, arrows).expect("quiver");
    let fq = FQuiver::from_cycles(quiver, &cycles).expect("f");
    weighted(fq, &[("alpha1", p), ("beta1", q)], &[], Field::Rational)
}

pub fn surface_4_3() -> SurfaceTriangulation {
    SurfaceTriangulation::from_strs(&["1", "2", "3"], &[["1", "2", "3"]])
}

/// The sphere glued from two copies of one triangle.
pub fn sphere_4_4() -> SurfaceTriangulation {
    SurfaceTriangulation::from_strs(&["1", "2", "3"], &[["1", "2", "3"], ["1", "2", "3"]])
}

pub fn surface_7_4() -> SurfaceTriangulation {
    SurfaceTriangulation::from_strs(
        &["1", "2", "3", "4", "5", "6", "7", "8"],
        &[["1", "2", "3"], ["1", "3", "4"], ["2", "4", "5"], ["5", "6", "7"], ["8", "7", "6"]],
    )
}

pub fn surface_7_5(n: usize) -> SurfaceTriangulation {
    let a = |i: usize| format!("a{}", (i - 1) % n + 1);
    let mut edges = Vec::new();
    let mut triangles = Vec::new();
    for i in 1..=n {
        edges.extend([a(i), format!("c{i}"), format!("d{i}")]);
        triangles.push([a(i), format!("c{i}"), format!("d{i}")]);
        triangles.push([format!("d{i}"), format!("c{i}"), a(i + 1)]);
    }
    SurfaceTriangulation::new(edges, triangles)
}

pub fn surface_8_2() -> SurfaceTriangulation {
    SurfaceTriangulation::from_strs(&["1", "2"], &[["1", "1", "2"]])
}

pub fn surface_8_3() -> SurfaceTriangulation {
    SurfaceTriangulation::from_strs(&["1", "2", "3"], &[["1", "1", "2"], ["3", "3", "2"]])
}

pub fn surface_8_4() -> SurfaceTriangulation {
    SurfaceTriangulation::from_strs(&["1", "2", "3"], &[["1", "2", "3"], ["1", "3", "2"]])
}

/// Built-in surfaces by name, with their triangle counts.
pub fn surfaces() -> Vec<(&'static str, SurfaceTriangulation)> {
    let mut out = vec![
        ("ex4.3", surface_4_3()),
        ("ex4.4", sphere_4_4()),
        ("ex7.4", surface_7_4()),
        ("ex8.2", surface_8_2()),
        ("ex8.3", surface_8_3()),
        ("ex8.4", surface_8_4()),
    ];
    for (n, name) in [(2, "T2"), (3, "T3"), (4, "T4"), (5, "T5")] {
        out.push((name, surface_7_5(n)));
    }
    out
}

/// Looks up a built-in presentation by name, all weights 1.
pub fn presentation_by_name(name: &str) -> Option<GdPresentation> {
    let unit = |t: TriangulationQuiver| crate::presentation::unit_presentation(&t);
    Some(match name {
        "ex4.3" => unit(example_4_3()),
        "markov" | "ex4.4" => unit(markov()),
        "lambda" | "ex8.2" => unit(lambda_quiver()),
        "gamma" | "ex8.3" => unit(gamma_quiver()),
        "omega" | "ex8.4" => unit(omega_quiver()),
        "ex7.4" => unit(example_7_4()),
        "ex7.4c" => example_7_4_contracted(1, 1),
        _ => {
            if let Some(n) = name.strip_prefix('T').and_then(|s| s.parse::<usize>().ok()) {
                if n >= 2 {
                    return Some(unit(example_7_5(n)));
                }
            }
            return None;
        }
    })
}

pub const BUILTIN_NAMES: &[&str] = &["ex4.3", "markov", "lambda", "gamma", "omega", "ex7.4", "ex7.4c", "T2", "T3"];
