//! Seeded random triangulation quivers and presentations.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::disks::{expand, TwoTriangleDisk};
use crate::enumerate::{canonical_code, fquiver_from_code};
use crate::field::Field;
use crate::presentation::GdPresentation;
use crate::quiver::{FQuiver, Node, TriangulationQuiver};

pub type GdqRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> GdqRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random permutation of `0..m` whose cycles have the given lengths.
fn random_cycles<R: Rng>(rng: &mut R, m: usize, lengths: &[usize]) -> Vec<usize> {
    let mut points: Vec<usize> = (0..m).collect();
    points.shuffle(rng);
    let mut f = vec![0; m];
    let mut k = 0;
    while k < m {
        let fits: Vec<usize> = lengths.iter().copied().filter(|&l| k + l <= m).collect();
        let len = *fits.choose(rng).expect("length 1 always fits");
        for j in 0..len {
            f[points[k + j]] = points[k + (j + 1) % len];
        }
        k += len;
    }
    f
}

fn connected(code: &[usize]) -> bool {
    canonical_code(code).is_some()
}

/// A connected triangulation quiver with `vertices` vertices.
pub fn random_triangulation_quiver<R: Rng>(rng: &mut R, vertices: usize) -> TriangulationQuiver {
    assert!(vertices >= 2, "at least two vertices");
    loop {
        let code = random_cycles(rng, 2 * vertices, &[1, 3, 3]);
        if connected(&code) {
            let fq = fquiver_from_code(&code).expect("bar model");
            return TriangulationQuiver::new(fq).expect("order three in the bar model");
        }
    }
}

fn weigh<R: Rng>(rng: &mut R, fq: FQuiver, max_weight: u32) -> GdPresentation {
    let orbits = fq.orbit_data().orbits.len();
    let weights = (0..orbits).map(|_| rng.gen_range(1..=max_weight)).collect();
    let q = fq.quiver();
    let border = (0..q.arrow_count())
        .filter(|&a| q.is_loop(a) && fq.next(a) == Node::Arrow(a))
        .map(|a| (q.source(a), Field::Rational.from_int(rng.gen_range(0..=2))))
        .collect();
    GdPresentation::new(fq, weights, border, Field::Rational).expect("valid shape")
}

/// Weighted triangulation quiver with a vertex count drawn from `vertices`,
/// weights in `1..=max_weight` and border scalars in {0, 1, 2}.
pub fn random_weighted<R: Rng>(rng: &mut R, vertices: RangeInclusive<usize>, max_weight: u32) -> GdPresentation {
    let n = rng.gen_range(vertices);
    let tq = random_triangulation_quiver(rng, n);
    weigh(rng, tq.into_fquiver(), max_weight)
}

/// A random valid presentation on 2..=`max_vertices` vertices; f′ may have
/// 2-cycles, and virtual loops are dropped to 1-vertices half of the time.
pub fn random_presentation<R: Rng>(rng: &mut R, max_vertices: usize, max_weight: u32) -> GdPresentation {
    loop {
        let n = rng.gen_range(2..=max_vertices);
        let lengths: &[usize] = if rng.gen_bool(0.5) { &[1, 3, 3] } else { &[1, 2, 3] };
        let code = random_cycles(rng, 2 * n, lengths);
        let Ok(fq) = fquiver_from_code(&code) else { continue };
        if !fq.shape_violations().is_empty() {
            continue;
        }
        let p = weigh(rng, fq, max_weight);
        if rng.gen_bool(0.5) {
            if let Ok(g) = p.gabriel_presentation() {
                return g;
            }
        }
        return p;
    }
}

/// A triangulation quiver with at least one 2-triangle disk: a random
/// presentation whose f′ has 2-cycles, expanded. Disk interiors get weight 1.
pub fn random_disk_quiver<R: Rng>(rng: &mut R, max_vertices: usize, max_weight: u32) -> (GdPresentation, Vec<TwoTriangleDisk>) {
    loop {
        let n = rng.gen_range(2..=max_vertices);
        let code = random_cycles(rng, 2 * n, &[1, 2, 2, 3]);
        let Ok(fq) = fquiver_from_code(&code) else { continue };
        if !fq.shape_violations().is_empty() {
            continue;
        }
        let p = weigh(rng, fq, max_weight);
        if p.two_cycles().is_empty() {
            continue;
        }
        let e = expand(&p).expect("valid contracted presentation");
        return (e.presentation, e.disks);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_valid() {
        let a = random_presentation(&mut rng_from_seed(7), 6, 3);
        let b = random_presentation(&mut rng_from_seed(7), 6, 3);
        assert_eq!(a, b);
        let mut rng = rng_from_seed(1);
        for _ in 0..50 {
            let p = random_presentation(&mut rng, 6, 3);
            assert!(p.fquiver().shape_violations().is_empty());
            let t = random_triangulation_quiver(&mut rng, 5);
            assert_eq!(t.quiver().vertex_count(), 5);
        }
    }

    #[test]
    fn disk_quivers_have_disks() {
        let mut rng = rng_from_seed(3);
        for _ in 0..20 {
            let (p, disks) = random_disk_quiver(&mut rng, 5, 2);
            assert!(p.is_triangulation());
            assert!(!disks.is_empty());
        }
    }
}
