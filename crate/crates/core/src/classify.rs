//! Strict dihedral type: Cartan non-singularity, matching against the Λ, Γ
//! and Ω families, and batch checks over enumerated quivers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::cartan_matrix;
use crate::builtins::{gamma_quiver, lambda_quiver, omega_quiver};
use crate::disks::expand;
use crate::enumerate::enumerate_with;
use crate::error::{GdqError, Result};
use crate::exec::{map_ordered, Execution};
use crate::field::{Field, Scalar};
use crate::homology::{all_simples_nonperiodic_vs_two_regular, Growth};
use crate::iso::all_isomorphisms;
use crate::presentation::GdPresentation;
use crate::quiver::TriangulationQuiver;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Lambda { r: u32, s: u32, b: Scalar },
    Gamma { r: u32, s: u32, t: u32 },
    Omega { m1: u32, m2: u32, m3: u32 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Lambda { .. } => "Lambda",
            Family::Gamma { .. } => "Gamma",
            Family::Omega { .. } => "Omega",
        }
    }

    /// Λ(1,1,b), Γ(1,1,1) and Ω(1,1,1).
    pub fn has_polynomial_growth(&self) -> bool {
        match self {
            Family::Lambda { r, s, .. } => (*r, *s) == (1, 1),
            Family::Gamma { r, s, t } => (*r, *s, *t) == (1, 1, 1),
            Family::Omega { m1, m2, m3 } => (*m1, *m2, *m3) == (1, 1, 1),
        }
    }

    /// det C from the family parameters.
    pub fn cartan_determinant(&self) -> BigInt {
        let prod = match self {
            Family::Lambda { r, s, .. } => u64::from(*r) * u64::from(*s),
            Family::Gamma { r, s, t } => u64::from(*r) * u64::from(*s) * u64::from(*t),
            Family::Omega { m1, m2, m3 } => u64::from(*m1) * u64::from(*m2) * u64::from(*m3),
        };
        BigInt::from(4 * prod)
    }

    fn fields(&self, field: Field) -> String {
        match self {
            Family::Lambda { r, s, b } => format!("r={r} s={s} b={}", field.format_scalar(b)),
            Family::Gamma { r, s, t } => format!("r={r} s={s} t={t}"),
            Family::Omega { m1, m2, m3 } => format!("m1={m1} m2={m2} m3={m3}"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Lambda { r, s, b } => write!(f, "Lambda({r},{s},{b})"),
            Family::Gamma { r, s, t } => write!(f, "Gamma({r},{s},{t})"),
            Family::Omega { m1, m2, m3 } => write!(f, "Omega({m1},{m2},{m3})"),
        }
    }
}

/// The presentation as a triangulation quiver, adding the virtual loops at
/// 1-vertices; `None` when f′ has 2-cycles.
fn as_triangulation(p: &GdPresentation) -> Result<Option<GdPresentation>> {
    if !p.two_cycles().is_empty() {
        return Ok(None);
    }
    if p.one_vertices().is_empty() {
        return Ok(Some(p.clone()));
    }
    Ok(Some(expand(p)?.presentation))
}

pub fn match_family(p: &GdPresentation) -> Result<Option<Family>> {
    let Some(t) = as_triangulation(p)? else {
        return Ok(None);
    };
    let q = t.quiver();
    let by_name = |tq: &TriangulationQuiver, name: &str| tq.quiver().arrow_id(name).expect("template arrow");
    let candidates: [(TriangulationQuiver, u8); 3] = [(lambda_quiver(), 0), (gamma_quiver(), 1), (omega_quiver(), 2)];
    for (template, kind) in candidates {
        if template.quiver().vertex_count() != q.vertex_count() {
            continue;
        }
        let isos = all_isomorphisms(template.fquiver(), t.fquiver());
        if isos.is_empty() {
            continue;
        }
        let family = isos
            .iter()
            .map(|iso| {
                let w = |name: &str| t.weight(iso.arrow_map[by_name(&template, name)]);
                match kind {
                    0 => {
                        let v2 = iso.vertex_map[template.quiver().vertex_id("2").expect("template vertex")];
                        Family::Lambda { r: w("alpha"), s: w("beta"), b: t.border_scalar(v2) }
                    }
                    1 => Family::Gamma { r: w("alpha"), s: w("beta"), t: w("xi") },
                    _ => Family::Omega { m1: w("alpha1"), m2: w("alpha2"), m3: w("alpha3") },
                }
            })
            .min_by(|x, y| family_key(x).cmp(&family_key(y)))
            .expect("nonempty");
        return Ok(Some(family));
    }
    Ok(None)
}

fn family_key(f: &Family) -> (u32, u32, u32, String) {
    match f {
        Family::Lambda { r, s, b } => (*r, *s, 0, b.to_string()),
        Family::Gamma { r, s, t } => (*r, *s, *t, String::new()),
        Family::Omega { m1, m2, m3 } => (*m1, *m2, *m3, String::new()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    /// Holds for every valid presentation.
    pub generalized_dihedral: bool,
    pub biserial: bool,
    pub simples: usize,
    pub cartan_det: BigInt,
    pub strict_dihedral: bool,
    pub family: Option<Family>,
    pub growth: Growth,
    pub field: Field,
}

impl ClassificationReport {
    /// The one-line `key=value` record.
    pub fn record(&self) -> String {
        let family = match &self.family {
            Some(f) => format!("family={} {}", f.name(), f.fields(self.field)),
            None => "family=none".to_string(),
        };
        format!("{family} det={} strict={} growth={}", self.cartan_det, self.strict_dihedral, self.growth)
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.record())
    }
}

/// Classifies `p`, failing with an inconsistency when a family match and a
/// non-singular Cartan matrix do not occur together.
pub fn classify(p: &GdPresentation) -> Result<ClassificationReport> {
    let det = cartan_matrix(p).determinant;
    let family = match_family(p)?;
    if family.is_some() != !det.is_zero() {
        return Err(GdqError::Inconsistency(format!(
            "det C = {det} but family match is {}",
            family.as_ref().map_or("none".to_string(), ToString::to_string)
        )));
    }
    if let Some(f) = &family {
        if f.cartan_determinant() != det {
            return Err(GdqError::Inconsistency(format!("det C = {det} but {f} predicts {}", f.cartan_determinant())));
        }
    }
    let growth = match &family {
        Some(f) if f.has_polynomial_growth() => Growth::Polynomial,
        _ => Growth::NonPolynomial,
    };
    Ok(ClassificationReport {
        generalized_dihedral: true,
        biserial: true,
        simples: p.quiver().vertex_count(),
        cartan_det: det,
        strict_dihedral: family.is_some(),
        family,
        growth,
        field: p.field(),
    })
}

pub fn growth_class(p: &GdPresentation) -> Result<Growth> {
    Ok(classify(p)?.growth)
}

pub const MAX_SWEEP_INSTANCES: usize = 250_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_vertices: usize,
    pub weights: Vec<u32>,
    pub border: Vec<i64>,
    /// Also run the simple-module check, which builds every algebra.
    pub check_simples: bool,
}

impl SweepConfig {
    pub fn new(max_vertices: usize) -> SweepConfig {
        SweepConfig { max_vertices, weights: vec![1, 2], border: vec![0, 1], check_simples: true }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub quivers: usize,
    pub instances: usize,
    pub nonsingular: usize,
    pub families: BTreeMap<String, usize>,
    pub polynomial: Vec<String>,
    /// Failures of the classification equivalence.
    pub exceptions: Vec<String>,
    /// Instances with at least four vertices and a non-singular Cartan matrix.
    pub large_nonsingular: Vec<String>,
    /// Disagreements between non-periodic simples and a 2-regular Gabriel quiver.
    pub simple_mismatches: Vec<String>,
    /// Strict instances whose growth label disagrees with "all weights 1".
    pub growth_mismatches: Vec<String>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.exceptions.is_empty()
            && self.large_nonsingular.is_empty()
            && self.simple_mismatches.is_empty()
            && self.growth_mismatches.is_empty()
    }
}

fn assignments(choices: &[u32], len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|v| choices.iter().map(move |&c| [v.clone(), vec![c]].concat())).collect();
    }
    out
}

struct Outcome {
    label: String,
    family: Option<Family>,
    det_nonzero: bool,
    vertices: usize,
    exception: Option<String>,
    simple_mismatch: bool,
    growth_mismatch: bool,
    polynomial: bool,
}

fn sweep_instance(p: &GdPresentation, label: String, check_simples: bool) -> Outcome {
    let vertices = p.quiver().vertex_count();
    let det = cartan_matrix(p).determinant;
    let mut out = Outcome {
        label,
        family: None,
        det_nonzero: !det.is_zero(),
        vertices,
        exception: None,
        simple_mismatch: false,
        growth_mismatch: false,
        polynomial: false,
    };
    match classify(p) {
        Ok(r) => {
            out.polynomial = r.growth == Growth::Polynomial;
            if r.strict_dihedral {
                let unit = p.orbit_weights().iter().all(|&m| m == 1);
                out.growth_mismatch = unit != out.polynomial;
            }
            out.family = r.family;
        }
        Err(e) => out.exception = Some(e.to_string()),
    }
    if check_simples {
        let (nonperiodic, regular) = all_simples_nonperiodic_vs_two_regular(p);
        out.simple_mismatch = nonperiodic != regular;
    }
    out
}

/// Runs the classification over every triangulation quiver with at most
/// `max_vertices` vertices and every choice of weights and border scalars.
pub fn classification_sweep(config: &SweepConfig, exec: Execution) -> Result<SweepReport> {
    let quivers = enumerate_with(config.max_vertices, exec)?;
    let mut instances: Vec<(GdPresentation, String)> = Vec::new();
    for (k, tq) in quivers.iter().enumerate() {
        let orbits = tq.orbit_data().orbits.len();
        let border: Vec<usize> = tq.border().into_iter().collect();
        let border_choices: Vec<u32> = (0..config.border.len() as u32).collect();
        for w in assignments(&config.weights, orbits) {
            for bs in assignments(&border_choices, border.len()) {
                let b: BTreeMap<usize, Scalar> = border
                    .iter()
                    .zip(&bs)
                    .map(|(&v, &i)| (v, Field::Rational.from_int(config.border[i as usize])))
                    .collect();
                let p = GdPresentation::new(tq.fquiver().clone(), w.clone(), b, Field::Rational)?;
                instances.push((p, format!("Q{}{:?}{:?}", k + 1, w, bs)));
                if instances.len() > MAX_SWEEP_INSTANCES {
                    return Err(GdqError::Budget(format!("more than {MAX_SWEEP_INSTANCES} sweep instances")));
                }
            }
        }
    }
    let outcomes = map_ordered(exec, &instances, |(p, label)| sweep_instance(p, label.clone(), config.check_simples));
    let mut report = SweepReport { quivers: quivers.len(), instances: outcomes.len(), ..SweepReport::default() };
    for o in outcomes {
        if let Some(e) = o.exception {
            report.exceptions.push(format!("{}: {e}", o.label));
        }
        if o.det_nonzero {
            report.nonsingular += 1;
            if o.vertices >= 4 {
                report.large_nonsingular.push(o.label.clone());
            }
        }
        if let Some(f) = &o.family {
            *report.families.entry(f.name().to_string()).or_default() += 1;
        }
        if o.polynomial {
            report.polynomial.push(o.family.as_ref().map_or(String::new(), ToString::to_string));
        }
        if o.simple_mismatch {
            report.simple_mismatches.push(o.label.clone());
        }
        if o.growth_mismatch {
            report.growth_mismatches.push(o.label);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::*;
    use crate::disks::{contract, find_disks};
    use crate::field::Field;

    #[test]
    fn lambda_record() {
        let r = classify(&lambda(2, 3, 0, Field::Rational)).unwrap();
        assert_eq!(r.record(), "family=Lambda r=2 s=3 b=0 det=24 strict=true growth=nonpolynomial");
    }

    #[test]
    fn gamma_parameters_are_normalized() {
        let f = match_family(&gamma(3, 1, 2)).unwrap().unwrap();
        assert_eq!(f, Family::Gamma { r: 2, s: 1, t: 3 });
        let f = match_family(&omega(2, 3, 1)).unwrap().unwrap();
        assert_eq!(f, Family::Omega { m1: 1, m2: 2, m3: 3 });
    }

    #[test]
    fn omega_unit_is_polynomial() {
        let r = classify(&omega(1, 1, 1)).unwrap();
        assert_eq!(r.cartan_det, BigInt::from(4));
        assert_eq!(r.growth, Growth::Polynomial);
    }

    #[test]
    fn singular_examples() {
        let r = classify(&markov_weighted(1)).unwrap();
        assert_eq!((r.cartan_det.clone(), r.family.clone()), (BigInt::zero(), None));
        let p = example_7_5_weighted(2, 1, 1);
        let c = contract(&p, &find_disks(&p.triangulation_quiver().unwrap())).unwrap();
        let r = classify(&c).unwrap();
        assert!(r.cartan_det.is_zero() && r.family.is_none());
        assert!(match_family(&unit_presentation_of(example_4_3())).unwrap().is_none());
    }

    fn unit_presentation_of(t: TriangulationQuiver) -> GdPresentation {
        crate::presentation::unit_presentation(&t)
    }

    #[test]
    fn gabriel_form_still_matches() {
        let g = lambda(1, 2, 1, Field::Rational).gabriel_presentation().unwrap();
        let f = match_family(&g).unwrap().unwrap();
        assert_eq!(f.to_string(), "Lambda(1,2,1)");
    }

    #[test]
    fn small_sweep_is_clean() {
        let r = classification_sweep(&SweepConfig::new(2), Execution::Sequential).unwrap();
        assert!(r.is_clean(), "{r:?}");
        assert_eq!(r.nonsingular, r.instances);
    }
}
