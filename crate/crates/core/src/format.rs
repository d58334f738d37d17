//! The `.tq` and `.tri` text formats and DOT export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{GdqError, Result};
use crate::field::{Field, Scalar};
use crate::presentation::GdPresentation;
use crate::quiver::{FQuiver, Node, Quiver};
use crate::surface::SurfaceTriangulation;

/// A parsed `.tq` file, before any validation beyond syntax.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TqFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub cycles: Vec<Vec<String>>,
    pub weights: BTreeMap<String, u32>,
    pub border: BTreeMap<String, String>,
    pub field: Option<u64>,
}

impl TqFile {
    pub fn quiver(&self) -> Result<Quiver> {
        Quiver::new(self.vertices.clone(), self.arrows.clone())
    }

    /// The quiver with f′; shape is not checked.
    pub fn fquiver(&self) -> Result<FQuiver> {
        FQuiver::from_cycles(self.quiver()?, &self.cycles)
    }

    pub fn declared_field(&self) -> Result<Option<Field>> {
        self.field.map(Field::from_characteristic).transpose()
    }

    /// The presentation, with `field` overriding the declared one. Orbits
    /// without a `weight` line get weight 1.
    pub fn presentation(&self, field: Option<Field>) -> Result<GdPresentation> {
        let field = match field {
            Some(f) => f,
            None => self.declared_field()?.unwrap_or(Field::Rational),
        };
        let border = self
            .border
            .iter()
            .map(|(v, s)| Ok((v.clone(), field.parse_scalar(s)?)))
            .collect::<Result<BTreeMap<String, Scalar>>>()?;
        GdPresentation::with_named_weights(self.fquiver()?, &self.weights, Some(1), &border, field)
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> GdqError {
    GdqError::Parse { line, msg: msg.into() }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_cycles(line: usize, rest: &str) -> Result<Vec<Vec<String>>> {
    let mut cycles = Vec::new();
    let mut s = rest.trim();
    while !s.is_empty() {
        let body = s.strip_prefix('(').ok_or_else(|| parse_err(line, "expected `(`"))?;
        let end = body.find(')').ok_or_else(|| parse_err(line, "unclosed cycle"))?;
        let cycle: Vec<String> = body[..end].split_whitespace().map(str::to_string).collect();
        if cycle.is_empty() {
            return Err(parse_err(line, "empty cycle"));
        }
        cycles.push(cycle);
        s = body[end + 1..].trim_start();
    }
    Ok(cycles)
}

pub fn parse_tq(text: &str) -> Result<TqFile> {
    let mut file = TqFile {
        vertices: Vec::new(),
        arrows: Vec::new(),
        cycles: Vec::new(),
        weights: BTreeMap::new(),
        border: BTreeMap::new(),
        field: None,
    };
    let mut saw_vertices = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = strip_comment(raw).trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let words: Vec<&str> = rest.split_whitespace().collect();
        match keyword {
            "vertices" => {
                if saw_vertices {
                    return Err(parse_err(line, "second `vertices` line"));
                }
                saw_vertices = true;
                file.vertices = words.iter().map(|w| w.to_string()).collect();
            }
            "arrow" => match words.as_slice() {
                [name, s, t] => file.arrows.push((name.to_string(), s.to_string(), t.to_string())),
                _ => return Err(parse_err(line, "expected `arrow NAME SOURCE TARGET`")),
            },
            "f" => file.cycles.extend(parse_cycles(line, rest)?),
            "weight" => match words.as_slice() {
                [name, m] => {
                    let m: u32 = m.parse().map_err(|_| parse_err(line, format!("bad weight `{m}`")))?;
                    if file.weights.insert(name.to_string(), m).is_some() {
                        return Err(parse_err(line, format!("second weight for `{name}`")));
                    }
                }
                _ => return Err(parse_err(line, "expected `weight ARROW M`")),
            },
            "border" => match words.as_slice() {
                [v, b] => {
                    if file.border.insert(v.to_string(), b.to_string()).is_some() {
                        return Err(parse_err(line, format!("second border scalar for `{v}`")));
                    }
                }
                _ => return Err(parse_err(line, "expected `border VERTEX SCALAR`")),
            },
            "field" => match words.as_slice() {
                [p] => {
                    file.field = Some(p.parse().map_err(|_| parse_err(line, format!("bad characteristic `{p}`")))?)
                }
                _ => return Err(parse_err(line, "expected `field P`")),
            },
            other => return Err(parse_err(line, format!("unknown keyword `{other}`"))),
        }
    }
    if !saw_vertices {
        return Err(parse_err(0, "missing `vertices` line"));
    }
    Ok(file)
}

fn write_quiver(out: &mut String, fq: &FQuiver) {
    let q = fq.quiver();
    let _ = writeln!(out, "vertices {}", q.vertices().join(" "));
    for a in 0..q.arrow_count() {
        let _ = writeln!(out, "arrow {} {} {}", q.arrow_name(a), q.vertex_name(q.source(a)), q.vertex_name(q.target(a)));
    }
    let cycles: Vec<String> =
        fq.f_cycles().iter().map(|c| format!("({})", fq.cycle_names(c).join(" "))).collect();
    let _ = writeln!(out, "f {}", cycles.join(" "));
}

/// Canonical `.tq` text of a quiver with f′ alone.
pub fn fquiver_to_tq(fq: &FQuiver) -> String {
    let mut out = String::new();
    write_quiver(&mut out, fq);
    out
}

/// Canonical `.tq` text: sorted ids, cycles from their least arrow, one
/// weight line per orbit at its least arrow, every border vertex listed.
pub fn presentation_to_tq(p: &GdPresentation) -> String {
    let mut out = String::new();
    write_quiver(&mut out, p.fquiver());
    let q = p.quiver();
    let mut weights: Vec<(usize, u32)> = p
        .orbits()
        .iter()
        .zip(p.orbit_weights())
        .map(|(orbit, &m)| (*orbit.iter().min().expect("nonempty orbit"), m))
        .collect();
    weights.sort_unstable();
    for (a, m) in weights {
        let _ = writeln!(out, "weight {} {m}", q.arrow_name(a));
    }
    for (v, b) in p.border() {
        let _ = writeln!(out, "border {} {}", q.vertex_name(*v), p.field().format_scalar(b));
    }
    let _ = writeln!(out, "field {}", p.field().characteristic());
    out
}

pub fn parse_tri(text: &str) -> Result<SurfaceTriangulation> {
    let mut edges: Option<Vec<String>> = None;
    let mut triangles: Vec<[String; 3]> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = strip_comment(raw).trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let keyword = words.next().expect("nonempty line");
        let rest: Vec<String> = words.map(str::to_string).collect();
        match keyword {
            "edges" => {
                if edges.replace(rest).is_some() {
                    return Err(parse_err(line, "second `edges` line"));
                }
            }
            "triangle" => {
                let t: [String; 3] = rest.try_into().map_err(|_| parse_err(line, "a triangle has three edges"))?;
                triangles.push(t);
            }
            other => return Err(parse_err(line, format!("unknown keyword `{other}`"))),
        }
    }
    let edges = edges.ok_or_else(|| parse_err(0, "missing `edges` line"))?;
    Ok(SurfaceTriangulation::new(edges, triangles))
}

pub fn surface_to_tri(s: &SurfaceTriangulation) -> String {
    let mut out = format!("edges {}\n", s.edges().join(" "));
    for t in s.triangles() {
        let _ = writeln!(out, "triangle {}", t.join(" "));
    }
    out
}

const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT digraph with one color per f′-cycle; 1-vertices are drawn as boxes.
pub fn to_dot(fq: &FQuiver) -> String {
    let q = fq.quiver();
    let mut color = vec![""; q.arrow_count()];
    for (k, cycle) in fq.f_cycles().iter().enumerate() {
        for node in cycle {
            if let Node::Arrow(a) = node {
                color[*a] = PALETTE[k % PALETTE.len()];
            }
        }
    }
    let one_vertices = fq.f_vertices();
    let mut out = String::from("digraph Q {\n");
    for v in 0..q.vertex_count() {
        let shape = if one_vertices.contains(&v) { "box" } else { "circle" };
        let _ = writeln!(out, "  {} [shape={shape}];", quote(q.vertex_name(v)));
    }
    for a in 0..q.arrow_count() {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}, color=\"{}\"];",
            quote(q.vertex_name(q.source(a))),
            quote(q.vertex_name(q.target(a))),
            quote(q.arrow_name(a)),
            color[a]
        );
    }
    out.push_str("}\n");
    out
}
