//! Wirtinger presentations of link groups.
//!
//! Generators are the strands of the diagram: maximal runs of arcs that pass
//! only *over* crossings, obtained by merging the incoming and outgoing
//! over-arcs at every crossing. Each crossing contributes one relation
//!
//! ```text
//! x_out = o^(-s) · x_in · o^s
//! ```
//!
//! where `x_in`, `x_out` are the under-strand generators, `o` the
//! over-strand generator and `s` the crossing sign.

use std::collections::BTreeMap;

use super::{LinkDiagram, LinkError, Result};

/// One conjugation relation of a Wirtinger presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WirtingerRelation {
    /// Generator of the strand entering under the crossing.
    pub under_in: usize,
    /// Generator of the over-strand.
    pub over: usize,
    /// Generator of the strand leaving under the crossing.
    pub under_out: usize,
    /// Crossing sign.
    pub sign: i8,
}

/// A Wirtinger presentation with its arc-to-generator table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WirtingerPresentation {
    /// Number of strand generators.
    pub generator_count: usize,
    /// Generator index (0-based) of each arc, keyed by arc id.
    pub arc_generator: BTreeMap<usize, usize>,
    /// One relation per crossing.
    pub relations: Vec<WirtingerRelation>,
    /// Generator chosen as the basepoint meridian (smallest index).
    pub basepoint: usize,
    /// Number of link components.
    pub components: usize,
}

impl WirtingerPresentation {
    /// The generator carried by `arc`.
    pub fn generator_of(&self, arc: usize) -> Option<usize> {
        self.arc_generator.get(&arc).copied()
    }
}

/// Computes the Wirtinger presentation of a connected diagram.
///
/// Crossing-free unknot components have no meridian relation tying them to
/// the rest, so any diagram containing them (or with several crossing
/// components) is rejected as [`LinkError::Disconnected`].
pub fn wirtinger(d: &LinkDiagram) -> Result<WirtingerPresentation> {
    if d.crossings().is_empty() {
        // A single crossing-free unknot still has a presentation.
        if d.unknot_components() == 1 {
            return Ok(WirtingerPresentation {
                generator_count: 1,
                arc_generator: BTreeMap::new(),
                relations: Vec::new(),
                basepoint: 0,
                components: 1,
            });
        }
        return Err(LinkError::Disconnected);
    }
    if d.unknot_components() > 0 || !is_connected(d) {
        return Err(LinkError::Disconnected);
    }
    let arcs = d.arc_count();
    // Union-find over arcs (1-based ids).
    let mut parent: Vec<usize> = (0..=arcs).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for c in d.crossings() {
        let (a, b) = (
            find(&mut parent, c.over_in()),
            find(&mut parent, c.over_out()),
        );
        parent[a.max(b)] = a.min(b);
    }
    let mut gen_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut arc_generator = BTreeMap::new();
    for a in 1..=arcs {
        let r = find(&mut parent, a);
        let next = gen_of_root.len();
        let g = *gen_of_root.entry(r).or_insert(next);
        arc_generator.insert(a, g);
    }
    let relations = d
        .crossings()
        .iter()
        .map(|c| WirtingerRelation {
            under_in: arc_generator[&c.under_in()],
            over: arc_generator[&c.over_in()],
            under_out: arc_generator[&c.under_out()],
            sign: c.sign,
        })
        .collect();
    Ok(WirtingerPresentation {
        generator_count: gen_of_root.len(),
        arc_generator,
        relations,
        basepoint: 0,
        components: d.component_count(),
    })
}

/// True when the diagram's crossings form one connected piece touching every
/// component (and there are no floating unknots).
fn is_connected(d: &LinkDiagram) -> bool {
    if d.unknot_components() > 0 {
        return d.crossings().is_empty() && d.unknot_components() == 1;
    }
    if d.crossings().is_empty() {
        return false;
    }
    // Crossings are nodes; arcs connect the crossings they touch.
    let n = d.crossings().len();
    let mut touch: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (ci, c) in d.crossings().iter().enumerate() {
        for &a in &c.quad {
            touch.entry(a).or_default().push(ci);
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(ci) = stack.pop() {
        for &a in &d.crossings()[ci].quad {
            for &cj in &touch[&a] {
                if !seen[cj] {
                    seen[cj] = true;
                    stack.push(cj);
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}
