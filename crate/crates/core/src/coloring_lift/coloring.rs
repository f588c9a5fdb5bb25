//! G-colorings of link diagrams and their enumeration.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::braid_core::Permutation;
use crate::link_model::{wirtinger, BandMarker, LinkDiagram, WirtingerPresentation};

use super::{ColoringError, Result};

/// The group the arcs are colored in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ColorTarget {
    /// Symmetric group S₃ (tricolorings).
    S3,
    /// Symmetric group S₄.
    S4,
    /// The braid group B₃.
    B3,
    /// The modular group PSL(2,ℤ).
    Psl2z,
}

/// An assignment of group elements to diagram arcs satisfying every
/// Wirtinger relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GColoring<E> {
    /// The target group.
    pub target: ColorTarget,
    /// Colors keyed by arc id.
    pub arcs: BTreeMap<usize, E>,
    /// Whether every color lies in the allowed meridian classes
    /// (transpositions / conjugates of `σ₁^{±1}` / transvection powers).
    pub simple: bool,
}

impl<E: Clone + PartialEq> GColoring<E> {
    /// Whether every arc carries the same color.
    pub fn is_constant(&self) -> bool {
        self.arcs.values().all_equal()
    }

    /// Color of an arc.
    pub fn color(&self, arc: usize) -> Option<&E> {
        self.arcs.get(&arc)
    }
}

impl GColoring<Permutation> {
    /// The coloring with every color conjugated by `g` (simultaneously);
    /// colorings related this way are considered equivalent.
    pub fn conjugated(&self, g: &Permutation) -> GColoring<Permutation> {
        GColoring {
            target: self.target,
            arcs: self
                .arcs
                .iter()
                .map(|(&a, v)| (a, v.conjugate_by(g)))
                .collect(),
            simple: self.simple,
        }
    }

    /// A canonical key for the conjugation class: the lexicographically
    /// smallest image tuple over all simultaneous conjugations.
    pub fn class_key(&self, n: usize) -> Vec<Vec<usize>> {
        all_permutations(n)
            .iter()
            .map(|g| {
                self.arcs
                    .values()
                    .map(|v| (1..=n).map(|x| v.conjugate_by(g).apply(x)).collect())
                    .collect::<Vec<Vec<usize>>>()
            })
            .min()
            .expect("nonempty group")
    }
}

/// All elements of Sₙ, in a fixed order.
fn all_permutations(n: usize) -> Vec<Permutation> {
    (0..n)
        .permutations(n)
        .map(|imgs| {
            let images: Vec<usize> = imgs.iter().map(|&i| i + 1).collect();
            Permutation::from_images(&images).expect("valid images")
        })
        .collect()
}

/// All transpositions of Sₙ.
pub(super) fn transpositions(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            out.push(Permutation::transposition(n, a, b));
        }
    }
    out
}

/// Enumerates all Sₙ-colorings of a connected diagram by backtracking over
/// strand generators with relation propagation. With `simple`, colors are
/// restricted to transpositions. Constant colorings are included.
pub fn enumerate_colorings(
    d: &LinkDiagram,
    n: usize,
    simple: bool,
) -> Result<Vec<GColoring<Permutation>>> {
    assert!(n == 3 || n == 4, "colorings target S₃ or S₄");
    let pres = wirtinger(d)?;
    let candidates = if simple {
        transpositions(n)
    } else {
        all_permutations(n)
    };
    let mut out = Vec::new();
    let mut assigned: Vec<Option<Permutation>> = vec![None; pres.generator_count];
    let order = seed_order(&pres);
    backtrack(&pres, &order, &candidates, &mut assigned, &mut out);
    let target = if n == 3 {
        ColorTarget::S3
    } else {
        ColorTarget::S4
    };
    Ok(out
        .into_iter()
        .map(|gen_colors| GColoring {
            target,
            arcs: pres
                .arc_generator
                .iter()
                .map(|(&arc, &g)| (arc, gen_colors[g].clone()))
                .collect(),
            simple,
        })
        .collect())
}

/// Propagates known colors through relations until a fixpoint; returns
/// `false` on contradiction. `touched` records generators set here.
fn propagate(
    pres: &WirtingerPresentation,
    assigned: &mut [Option<Permutation>],
    touched: &mut Vec<usize>,
) -> bool {
    loop {
        let mut progress = false;
        for r in &pres.relations {
            let Some(over) = assigned[r.over].clone() else {
                continue;
            };
            let conj = |x: &Permutation| {
                if r.sign == 1 {
                    x.conjugate_by(&over)
                } else {
                    x.conjugate_by(&over.inverse())
                }
            };
            match (assigned[r.under_in].clone(), &assigned[r.under_out]) {
                (Some(xin), Some(xout)) => {
                    if &conj(&xin) != xout {
                        return false;
                    }
                }
                (Some(xin), None) => {
                    assigned[r.under_out] = Some(conj(&xin));
                    touched.push(r.under_out);
                    progress = true;
                }
                (None, Some(xout)) => {
                    let inv = if r.sign == 1 {
                        xout.conjugate_by(&over.inverse())
                    } else {
                        xout.conjugate_by(&over)
                    };
                    assigned[r.under_in] = Some(inv);
                    touched.push(r.under_in);
                    progress = true;
                }
                (None, None) => {}
            }
        }
        if !progress {
            return true;
        }
    }
}

/// Branch order for the backtracking: whenever propagation stalls, the next
/// strand to branch on is the one whose assignment lets propagation resolve
/// the most others. Branching is exponential in the number of stall points,
/// so minimizing them keeps large diagrams (e.g. wide pretzels) tractable.
fn seed_order(pres: &WirtingerPresentation) -> Vec<usize> {
    let resolve = |known: &mut Vec<bool>| loop {
        let mut progress = false;
        for r in &pres.relations {
            if known[r.over] && known[r.under_in] != known[r.under_out] {
                known[r.under_in] = true;
                known[r.under_out] = true;
                progress = true;
            }
        }
        if !progress {
            break;
        }
    };
    let mut known = vec![false; pres.generator_count];
    let mut order = Vec::new();
    while known.iter().any(|k| !k) {
        let seed = (0..pres.generator_count)
            .filter(|&s| !known[s])
            .max_by_key(|&s| {
                let mut k = known.clone();
                k[s] = true;
                resolve(&mut k);
                (k.iter().filter(|&&b| b).count(), std::cmp::Reverse(s))
            })
            .unwrap();
        known[seed] = true;
        order.push(seed);
        resolve(&mut known);
    }
    order
}

fn backtrack(
    pres: &WirtingerPresentation,
    order: &[usize],
    candidates: &[Permutation],
    assigned: &mut Vec<Option<Permutation>>,
    out: &mut Vec<Vec<Permutation>>,
) {
    let Some(&next) = order.iter().find(|&&s| assigned[s].is_none()) else {
        out.push(assigned.iter().map(|v| v.clone().unwrap()).collect());
        return;
    };
    for cand in candidates {
        assigned[next] = Some(cand.clone());
        let mut touched = vec![next];
        if propagate(pres, assigned, &mut touched) {
            // Simplicity: propagation through conjugation preserves the
            // candidate pool's conjugacy classes, so no extra check needed.
            backtrack(pres, order, candidates, assigned, out);
        }
        for t in touched {
            assigned[t] = None;
        }
    }
}

/// Counts conjugation classes of nonconstant colorings.
pub fn nonconstant_classes(colorings: &[GColoring<Permutation>], n: usize) -> usize {
    colorings
        .iter()
        .filter(|c| !c.is_constant())
        .map(|c| c.class_key(n))
        .unique()
        .count()
}

/// One side of a split connect sum.
#[derive(Debug, Clone)]
pub struct SplitSide<E> {
    /// The restored summand diagram.
    pub diagram: LinkDiagram,
    /// The coloring restricted to this summand.
    pub coloring: GColoring<E>,
}

/// Splits a coloring of a connect sum along its marked band.
///
/// Verifies that both band strands carry the same color (a lift exists for
/// the sum iff it does for both restrictions), then restores each summand
/// diagram and restricts the coloring to it.
pub fn connect_sum_split<E: Clone + PartialEq>(
    d: &LinkDiagram,
    marker: &BandMarker,
    coloring: &GColoring<E>,
) -> Result<(SplitSide<E>, SplitSide<E>)> {
    let fwd = coloring
        .color(marker.forward_arc)
        .ok_or_else(|| ColoringError::InvalidColoring("band arc uncolored".to_string()))?;
    let bwd = coloring
        .color(marker.backward_arc)
        .ok_or_else(|| ColoringError::InvalidColoring("band arc uncolored".to_string()))?;
    if fwd != bwd {
        return Err(ColoringError::BandColorsDiffer);
    }
    let mut sides = Vec::new();
    for first in [true, false] {
        // On each side one band arc appears at its head and the other at
        // its tail; fusing them (renaming one to the other) recloses the
        // summand.
        let (keep, drop) = if first {
            (marker.forward_arc, marker.backward_arc)
        } else {
            (marker.backward_arc, marker.forward_arc)
        };
        let quads: Vec<[usize; 4]> = d
            .crossings()
            .iter()
            .enumerate()
            .filter(|(i, _)| marker.first_side.contains(i) == first)
            .map(|(_, c)| c.quad.map(|a| if a == drop { keep } else { a }))
            .collect();
        let (diagram, rename) = LinkDiagram::from_quadruples_with_map(&quads, 0)?;
        let arcs = rename
            .iter()
            .map(|(&old, &new)| {
                let color = coloring
                    .color(old)
                    .ok_or_else(|| {
                        ColoringError::InvalidColoring(format!("arc {old} uncolored"))
                    })?
                    .clone();
                Ok((new, color))
            })
            .collect::<Result<BTreeMap<usize, E>>>()?;
        sides.push(SplitSide {
            diagram,
            coloring: GColoring {
                target: coloring.target,
                arcs,
                simple: coloring.simple,
            },
        });
    }
    let second = sides.pop().unwrap();
    Ok((sides.pop().unwrap(), second))
}
