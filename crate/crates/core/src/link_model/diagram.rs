//! PD-code diagrams with orientation recovery.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::braid_core::BraidWord;

use super::{LinkError, Result};

/// One crossing of a diagram.
///
/// `quad` lists the four incident arcs counterclockwise starting from the
/// incoming under-strand, so `quad[0]` is the under-strand head-side arc and
/// `quad[2]` its continuation. `sign` is `+1` when the over-strand runs
/// `quad[3] → quad[1]` and `-1` when it runs `quad[1] → quad[3]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// Arcs counterclockwise from the incoming under-strand.
    pub quad: [usize; 4],
    /// Crossing handedness.
    pub sign: i8,
}

impl Crossing {
    /// The under-strand arc entering the crossing.
    pub fn under_in(&self) -> usize {
        self.quad[0]
    }
    /// The under-strand arc leaving the crossing.
    pub fn under_out(&self) -> usize {
        self.quad[2]
    }
    /// The over-strand arc entering the crossing.
    pub fn over_in(&self) -> usize {
        if self.sign == 1 {
            self.quad[3]
        } else {
            self.quad[1]
        }
    }
    /// The over-strand arc leaving the crossing.
    pub fn over_out(&self) -> usize {
        if self.sign == 1 {
            self.quad[1]
        } else {
            self.quad[3]
        }
    }
}

/// A link diagram: crossings plus derived orientation data.
///
/// Arc identifiers are canonicalized (`1..=arc_count`) by walking each
/// component from its smallest original arc, so equal diagrams have equal
/// representations. Crossing-free unknot components are tracked separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    /// Arcs per component, in successor order.
    components: Vec<Vec<usize>>,
    /// Extra crossing-free unknot components (PD token `U`).
    unknots: usize,
}

impl LinkDiagram {
    /// Builds a diagram from raw PD quadruples, recovering orientations.
    ///
    /// `unknots` adds that many crossing-free unknot components.
    pub fn from_quadruples(quads: &[[usize; 4]], unknots: usize) -> Result<LinkDiagram> {
        Ok(Self::from_quadruples_with_map(quads, unknots)?.0)
    }

    /// Like [`LinkDiagram::from_quadruples`], also returning the map from
    /// input arc ids to the canonical ones.
    pub fn from_quadruples_with_map(
        quads: &[[usize; 4]],
        unknots: usize,
    ) -> Result<(LinkDiagram, BTreeMap<usize, usize>)> {
        let oriented = orient(quads)?;
        Ok(canonicalize(oriented, unknots))
    }

    /// Builds a diagram from quadruples known only up to rotation by two:
    /// slots 0/2 are the under-strand and 1/3 the over-strand, but slot 0
    /// need not be the incoming end. Orientations are solved first and each
    /// quadruple rotated so slot 0 is incoming; components whose direction
    /// is not forced are oriented deterministically.
    pub fn from_cyclic_quadruples(quads: &[[usize; 4]], unknots: usize) -> Result<LinkDiagram> {
        let rotated = settle_rotations(quads)?;
        let oriented = orient(&rotated)?;
        Ok(canonicalize(oriented, unknots).0)
    }

    /// The crossings with recovered signs.
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Number of arcs incident to crossings.
    pub fn arc_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// All components that pass through crossings, as arc cycles.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Number of crossing-free unknot components.
    pub fn unknot_components(&self) -> usize {
        self.unknots
    }

    /// Total number of components.
    pub fn component_count(&self) -> usize {
        self.components.len() + self.unknots
    }

    /// The mirror image: every crossing sign flips (over-strand slots swap).
    pub fn mirror(&self) -> LinkDiagram {
        let quads: Vec<[usize; 4]> = self
            .crossings
            .iter()
            .map(|c| [c.quad[0], c.quad[3], c.quad[2], c.quad[1]])
            .collect();
        LinkDiagram::from_quadruples(&quads, self.unknots)
            .expect("mirror of a valid diagram is valid")
    }

    /// Renders the diagram back to PD text.
    pub fn to_pd_text(&self) -> String {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|c| {
                format!(
                    "X[{},{},{},{}]",
                    c.quad[0], c.quad[1], c.quad[2], c.quad[3]
                )
            })
            .collect();
        parts.extend(std::iter::repeat_n("U".to_string(), self.unknots));
        format!("PD[{}]", parts.join(","))
    }
}

/// Parses `PD[X[a,b,c,d],...,U,...]` text (or a bare `U`).
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let t = text.trim();
    if t == "U" {
        return LinkDiagram::from_quadruples(&[], 1);
    }
    let inner = t
        .strip_prefix("PD[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| LinkError::MalformedPD("expected PD[...] or U".to_string()))?;
    let mut quads = Vec::new();
    let mut unknots = 0usize;
    let mut rest = inner.trim();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('U') {
            unknots += 1;
            rest = r.trim_start().strip_prefix(',').unwrap_or(r).trim_start();
            continue;
        }
        let body = rest
            .strip_prefix("X[")
            .ok_or_else(|| LinkError::MalformedPD(format!("unexpected token at `{rest}`")))?;
        let end = body
            .find(']')
            .ok_or_else(|| LinkError::MalformedPD("unterminated X[".to_string()))?;
        let nums: Vec<usize> = body[..end]
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| LinkError::MalformedPD(format!("bad arc id `{s}`")))
            })
            .collect::<Result<_>>()?;
        if nums.len() != 4 || nums.contains(&0) {
            return Err(LinkError::MalformedPD(
                "X[...] needs four positive arc ids".to_string(),
            ));
        }
        quads.push([nums[0], nums[1], nums[2], nums[3]]);
        rest = body[end + 1..]
            .trim_start()
            .strip_prefix(',')
            .unwrap_or(&body[end + 1..])
            .trim_start();
    }
    if quads.is_empty() && unknots == 0 {
        return Err(LinkError::MalformedPD("empty diagram".to_string()));
    }
    LinkDiagram::from_quadruples(&quads, unknots)
}

/// Occurrence of an arc at a crossing slot.
type Occ = (usize, usize); // (crossing index, slot 0..4)

/// Recovers orientations: decides for every occurrence whether the arc is
/// incoming there, then fixes crossing signs.
fn orient(quads: &[[usize; 4]]) -> Result<Vec<Crossing>> {
    let mut occs: BTreeMap<usize, Vec<Occ>> = BTreeMap::new();
    for (ci, q) in quads.iter().enumerate() {
        for (s, &a) in q.iter().enumerate() {
            occs.entry(a).or_default().push((ci, s));
        }
    }
    for (a, o) in &occs {
        if o.len() != 2 {
            return Err(LinkError::InconsistentArcs(format!(
                "arc {a} appears {} times (expected 2)",
                o.len()
            )));
        }
    }
    // incoming[ci][slot] ∈ {None, Some(bool)}; constraints:
    //   slot 0 incoming, slot 2 outgoing, slot1 = !slot3,
    //   and the two occurrences of an arc have opposite values.
    let mut incoming: Vec<[Option<bool>; 4]> = vec![[None; 4]; quads.len()];
    let mut queue: VecDeque<(Occ, bool)> = VecDeque::new();
    for ci in 0..quads.len() {
        queue.push_back(((ci, 0), true));
        queue.push_back(((ci, 2), false));
    }
    let set = |inc: &mut Vec<[Option<bool>; 4]>,
                   q: &mut VecDeque<(Occ, bool)>,
                   (ci, s): Occ,
                   v: bool|
     -> Result<()> {
        match inc[ci][s] {
            Some(old) if old != v => Err(LinkError::InconsistentArcs(format!(
                "orientation conflict at crossing {} slot {}",
                ci + 1,
                s
            ))),
            Some(_) => Ok(()),
            None => {
                inc[ci][s] = Some(v);
                q.push_back(((ci, s), v));
                Ok(())
            }
        }
    };
    loop {
        while let Some(((ci, s), v)) = queue.pop_front() {
            set(&mut incoming, &mut queue, (ci, s), v)?;
            // Opposite value at the arc's other occurrence.
            let arc = quads[ci][s];
            for &(cj, t) in &occs[&arc] {
                if (cj, t) != (ci, s) {
                    set(&mut incoming, &mut queue, (cj, t), !v)?;
                }
            }
            // Over slots at a crossing are one-in one-out.
            if s == 1 || s == 3 {
                set(&mut incoming, &mut queue, (ci, 4 - s), !v)?;
            }
        }
        // Components never passing under any crossing are unconstrained;
        // orient them deterministically.
        match incoming
            .iter()
            .enumerate()
            .find(|(_, inc)| inc[1].is_none())
        {
            Some((ci, _)) => queue.push_back(((ci, 1), true)),
            None => break,
        }
    }
    Ok(quads
        .iter()
        .zip(&incoming)
        .map(|(q, inc)| Crossing {
            quad: *q,
            sign: if inc[3] == Some(true) { 1 } else { -1 },
        })
        .collect())
}

/// Solves the incoming/outgoing parity for quadruples given only up to
/// rotation by two, then rotates each so slot 0 is the incoming under-arc.
///
/// Variables are occurrences; constraints are all parities: the two
/// occurrences of an arc are opposite, slots 0 and 2 are opposite, slots 1
/// and 3 are opposite. Unconstrained orientation choices (whole-component
/// reversals) are settled by seeding the lowest unresolved occurrence.
fn settle_rotations(quads: &[[usize; 4]]) -> Result<Vec<[usize; 4]>> {
    let n = quads.len();
    let mut occs: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (ci, q) in quads.iter().enumerate() {
        for (s, &a) in q.iter().enumerate() {
            occs.entry(a).or_default().push(ci * 4 + s);
        }
    }
    for (a, o) in &occs {
        if o.len() != 2 {
            return Err(LinkError::InconsistentArcs(format!(
                "arc {a} appears {} times (expected 2)",
                o.len()
            )));
        }
    }
    let mut incoming: Vec<Option<bool>> = vec![None; 4 * n];
    for seed in 0..4 * n {
        if incoming[seed].is_some() {
            continue;
        }
        let mut queue = VecDeque::from([(seed, true)]);
        while let Some((node, v)) = queue.pop_front() {
            match incoming[node] {
                Some(old) if old != v => {
                    return Err(LinkError::InconsistentArcs(format!(
                        "orientation conflict at crossing {}",
                        node / 4 + 1
                    )));
                }
                Some(_) => continue,
                None => incoming[node] = Some(v),
            }
            let (ci, s) = (node / 4, node % 4);
            queue.push_back((ci * 4 + (s + 2) % 4, !v));
            let arc = quads[ci][s];
            for &other in &occs[&arc] {
                if other != node {
                    queue.push_back((other, !v));
                }
            }
        }
    }
    Ok(quads
        .iter()
        .enumerate()
        .map(|(ci, q)| {
            if incoming[ci * 4] == Some(true) {
                *q
            } else {
                [q[2], q[3], q[0], q[1]]
            }
        })
        .collect())
}

/// Successor of each arc (the arc leaving the crossing where it ends).
fn successors(crossings: &[Crossing]) -> BTreeMap<usize, usize> {
    let mut next = BTreeMap::new();
    for c in crossings {
        next.insert(c.under_in(), c.under_out());
        next.insert(c.over_in(), c.over_out());
    }
    next
}

/// Renumbers arcs by a deterministic traversal and traces components,
/// returning the diagram and the input-to-canonical arc rename map.
fn canonicalize(crossings: Vec<Crossing>, unknots: usize) -> (LinkDiagram, BTreeMap<usize, usize>) {
    let next = successors(&crossings);
    let mut remaining: BTreeSet<usize> = next.keys().copied().collect();
    let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
    let mut components = Vec::new();
    let mut counter = 1usize;
    while let Some(&start) = remaining.iter().next() {
        let mut cycle = Vec::new();
        let mut a = start;
        loop {
            remaining.remove(&a);
            rename.insert(a, counter);
            cycle.push(counter);
            counter += 1;
            a = next[&a];
            if a == start {
                break;
            }
        }
        components.push(cycle);
    }
    let crossings = crossings
        .into_iter()
        .map(|c| Crossing {
            quad: [
                rename[&c.quad[0]],
                rename[&c.quad[1]],
                rename[&c.quad[2]],
                rename[&c.quad[3]],
            ],
            sign: c.sign,
        })
        .collect();
    (
        LinkDiagram {
            crossings,
            components,
            unknots,
        },
        rename,
    )
}

/// The closure of a braid word as a link diagram.
///
/// Strands are drawn downward; the letter `σᵢ` makes the strand in position
/// `i+1` pass over the strand in position `i` (a positive crossing under the
/// conventions of this module), and `σᵢ⁻¹` the mirror crossing.
pub fn braid_closure(w: &BraidWord) -> Result<LinkDiagram> {
    let n = w.strand_count();
    if w.is_empty() {
        return LinkDiagram::from_quadruples(&[], n);
    }
    // current[p] = arc id currently running down strand position p (1-based).
    let mut counter = n;
    let mut current: Vec<usize> = (1..=n).collect();
    let mut quads = Vec::new();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize; // positions i, i+1
        let (tl, tr) = (current[i - 1], current[i]);
        let (bl, br) = (counter + 1, counter + 2);
        counter += 2;
        if l > 0 {
            // Right strand over: under runs TL→BR, over TR→BL; the CCW
            // quadruple from the incoming under-strand is (TL, BL, BR, TR).
            quads.push([tl, bl, br, tr]);
        } else {
            // Left strand over: under runs TR→BL, over TL→BR; CCW from the
            // incoming under-strand gives (TR, TL, BL, BR).
            quads.push([tr, tl, bl, br]);
        }
        current[i - 1] = bl;
        current[i] = br;
    }
    // Close up: the bottom arc of position p is the same arc as the top one;
    // merge ids by rewriting bottom ids to the top ids.
    let mut rewrite: BTreeMap<usize, usize> = BTreeMap::new();
    for (p, &bottom) in current.iter().enumerate() {
        rewrite.insert(bottom, p + 1);
    }
    let unknots = current.iter().enumerate().filter(|&(p, &b)| b == p + 1).count();
    let quads: Vec<[usize; 4]> = quads
        .iter()
        .map(|q| {
            let mut r = *q;
            for v in &mut r {
                if let Some(&t) = rewrite.get(v) {
                    *v = t;
                }
            }
            r
        })
        .collect();
    LinkDiagram::from_quadruples(&quads, unknots)
}

/// Marker identifying a connect-sum band in a composite diagram: the two
/// arcs crossing the splitting sphere and the crossings on the first side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandMarker {
    /// Arc running from the first summand into the second.
    pub forward_arc: usize,
    /// Arc running from the second summand back into the first.
    pub backward_arc: usize,
    /// Indices (into `crossings()`) of the first summand's crossings.
    pub first_side: Vec<usize>,
}

/// Connect sum of two knot diagrams, splicing `arc1` of `d1` with `arc2` of
/// `d2`. Returns the composite diagram plus the band marker that
/// [`crate::coloring_lift::connect_sum_split`] can use to undo it.
pub fn connect_sum(
    d1: &LinkDiagram,
    d2: &LinkDiagram,
    arc1: usize,
    arc2: usize,
) -> Result<(LinkDiagram, BandMarker)> {
    if d1.crossings.is_empty() || d2.crossings.is_empty() {
        return Err(LinkError::InvalidParameter(
            "connect sum needs two crossed diagrams".to_string(),
        ));
    }
    let shift = d1.arc_count();
    // Fresh ids: d1 arcs keep theirs, d2 arcs shift. Cut arc1 and arc2' and
    // cross-join: the occurrence of arc1 at its head becomes arc2'’s id,
    // and vice versa (tails keep their own ids).
    let a2 = arc2 + shift;
    let mut quads = Vec::new();
    for c in &d1.crossings {
        let mut q = c.quad;
        // head of arc1 in d1 = occurrence where arc1 is incoming.
        if c.under_in() == arc1 {
            let slot = q.iter().position(|&x| x == arc1).unwrap();
            q[slot] = a2;
        } else if c.over_in() == arc1 {
            let slot = if c.sign == 1 { 3 } else { 1 };
            q[slot] = a2;
        }
        quads.push(q);
    }
    let first_side: Vec<usize> = (0..d1.crossings.len()).collect();
    for c in &d2.crossings {
        let mut q = c.quad.map(|x| x + shift);
        if c.over_in() + shift == a2 || c.under_in() + shift == a2 {
            let slot = if c.under_in() + shift == a2 {
                q.iter().position(|&x| x == a2).unwrap()
            } else if c.sign == 1 {
                3
            } else {
                1
            };
            q[slot] = arc1;
        }
        quads.push(q);
    }
    let unknots = d1.unknots + d2.unknots;
    let (diagram, rename) = LinkDiagram::from_quadruples_with_map(&quads, unknots)?;
    let marker = BandMarker {
        forward_arc: rename[&arc1],
        backward_arc: rename[&a2],
        first_side,
    };
    Ok((diagram, marker))
}
