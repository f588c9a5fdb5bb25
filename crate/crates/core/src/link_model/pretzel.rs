//! Pretzel links `P(q₁, …, q_m)` as diagrams.
//!
//! Region `i` is a vertical band of `|qᵢ|` half twists with strands running
//! upward. In a positive half twist the bottom-left strand passes over to
//! the top-right; the regions sit side by side and close up cyclically
//! (top-right of region `i` joins top-left of region `i+1`, likewise at the
//! bottom).

use super::{LinkDiagram, LinkError, Result};

/// Twist parameters of a pretzel link.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PretzelForm {
    /// Signed half-twist counts, one per region.
    pub q: Vec<i64>,
}

impl PretzelForm {
    /// Validates the parameter list (at least one region).
    pub fn new(q: Vec<i64>) -> Result<PretzelForm> {
        if q.len() < 3 {
            return Err(LinkError::InvalidParameter(
                "pretzel needs at least three twist regions".to_string(),
            ));
        }
        Ok(PretzelForm { q })
    }

    /// Number of regions.
    pub fn region_count(&self) -> usize {
        self.q.len()
    }

    /// The form rotated by `k` regions, an isotopic link.
    pub fn rotated(&self, k: usize) -> PretzelForm {
        let m = self.q.len();
        PretzelForm {
            q: (0..m).map(|i| self.q[(i + k) % m]).collect(),
        }
    }

    /// The mirror image: every twist count negated.
    pub fn mirrored(&self) -> PretzelForm {
        PretzelForm {
            q: self.q.iter().map(|&x| -x).collect(),
        }
    }
}

/// True when `P(q₁, …, q_m)` is a knot: either exactly one `qᵢ` is even, or
/// none is and the number of regions is odd.
pub fn is_pretzel_knot(q: &[i64]) -> bool {
    let evens = q.iter().filter(|&&x| x % 2 == 0).count();
    evens == 1 || (evens == 0 && q.len() % 2 == 1)
}

/// Builds the standard diagram of `P(q₁, …, q_m)`.
pub fn pretzel_diagram(form: &PretzelForm) -> Result<LinkDiagram> {
    let m = form.q.len();
    // Fresh arc ids per strand level: region i with k = |qᵢ| crossings has
    // left segments l[0..=k] and right segments r[0..=k], bottom to top.
    let mut counter = 0usize;
    let mut fresh = || {
        counter += 1;
        counter
    };
    let mut ports = Vec::with_capacity(m); // (BL, BR, TL, TR)
    let mut quads: Vec<[usize; 4]> = Vec::new();
    // Union-find for port gluing and zero-twist pass-throughs.
    let mut parent: Vec<usize> = vec![0];
    let alloc = |parent: &mut Vec<usize>, fresh: &mut dyn FnMut() -> usize| {
        let id = fresh();
        parent.push(id);
        id
    };
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut [usize], a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        parent[ra.max(rb)] = ra.min(rb);
    };
    for &qi in &form.q {
        let k = qi.unsigned_abs() as usize;
        let left: Vec<usize> = (0..=k).map(|_| alloc(&mut parent, &mut fresh)).collect();
        let right: Vec<usize> = (0..=k).map(|_| alloc(&mut parent, &mut fresh)).collect();
        for j in 0..k {
            if qi > 0 {
                // Quadruple counterclockwise from the incoming under-strand:
                // (BR, TR, TL, BL), over-strand bottom-left → top-right.
                quads.push([right[j], right[j + 1], left[j + 1], left[j]]);
            } else {
                // (BL, BR, TR, TL), over-strand bottom-right → top-left.
                quads.push([left[j], right[j], right[j + 1], left[j + 1]]);
            }
        }
        if k == 0 {
            union(&mut parent, left[0], left[k]);
            union(&mut parent, right[0], right[k]);
        }
        ports.push((left[0], right[0], left[k], right[k]));
    }
    for i in 0..m {
        let (_, br, _, tr) = ports[i];
        let (bl_next, _, tl_next, _) = ports[(i + 1) % m];
        union(&mut parent, tr, tl_next);
        union(&mut parent, br, bl_next);
    }
    for q in &mut quads {
        for v in q.iter_mut() {
            *v = find(&mut parent, *v);
        }
    }
    // Union-find classes that touch no crossing are crossing-free circles.
    let mut used = vec![false; parent.len()];
    for q in &quads {
        for &v in q {
            used[v] = true;
        }
    }
    let unknots = (1..parent.len())
        .filter(|&x| find(&mut parent, x) == x && !used[x])
        .count();
    LinkDiagram::from_cyclic_quadruples(&quads, unknots)
}
