//! Conjugacy decision with witness via summit sets.
//!
//! Two braids are conjugate iff their summit sets (the conjugates of maximal
//! infimum and, among those, minimal supremum) coincide. The solver carries a
//! conjugating word through every step, so a positive answer comes with a
//! checkable witness.

use crate::braid_core::{
    normal_form, permutation_braid_word, tau, BraidWord, GarsideNormalForm, Permutation,
};
use itertools::Itertools;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Upper bound on explored summit-set size before giving up.
const ORBIT_CAP: usize = 50_000;

/// `c⁻¹ · w · c`, freely reduced.
fn conj(w: &BraidWord, c: &BraidWord) -> BraidWord {
    c.inverse().then(w).then(c).free_reduce()
}

/// One cycling step: moves the first canonical factor to the end.
///
/// For `w = Δᵖ·A₁·…·A_k` the conjugator is `τ^{−p}(A₁)`; since `τ` is an
/// involution this is `τ(A₁)` for odd `p` and `A₁` otherwise.
fn cycle_once(n: usize, w: &BraidWord) -> (BraidWord, BraidWord) {
    let nf = normal_form(w);
    let factors = nf.factors();
    if factors.is_empty() {
        return (w.clone(), BraidWord::identity(n));
    }
    let a1 = if nf.delta_power().rem_euclid(2) == 1 {
        tau(n, &factors[0])
    } else {
        factors[0].clone()
    };
    let a = permutation_braid_word(n, &a1);
    (conj(w, &a), a)
}

/// One decycling step: moves the last canonical factor to the front.
/// The conjugator is `A_k⁻¹`.
fn decycle_once(n: usize, w: &BraidWord) -> (BraidWord, BraidWord) {
    let nf = normal_form(w);
    let factors = nf.factors();
    if factors.is_empty() {
        return (w.clone(), BraidWord::identity(n));
    }
    let a = permutation_braid_word(n, factors.last().unwrap()).inverse();
    (conj(w, &a), a)
}

/// Carries `w` into its summit set.
///
/// Returns `(rep, c)` with `rep = c⁻¹·w·c`, `rep` of maximal infimum and
/// minimal supremum in the conjugacy class. Cycling raises the infimum and
/// decycling lowers the supremum; if `canonical_length + 1` successive steps
/// bring no improvement, none ever will, so the loop is exact.
fn summit_reduce(w: &BraidWord) -> (BraidWord, BraidWord) {
    let n = w.strand_count();
    let mut cur = normal_form(w).to_word();
    let mut total = BraidWord::identity(n);
    loop {
        let nf = normal_form(&cur);
        let ell = nf.canonical_length();
        if ell == 0 {
            break;
        }
        let mut improved = false;
        // Raise the infimum by cycling.
        let (mut t, mut tc) = (cur.clone(), BraidWord::identity(n));
        for _ in 0..=ell {
            let (nw, a) = cycle_once(n, &t);
            tc = tc.then(&a).free_reduce();
            t = nw;
            if normal_form(&t).delta_power() > nf.delta_power() {
                improved = true;
                break;
            }
        }
        if !improved {
            // Lower the supremum by decycling.
            let (mut t2, mut tc2) = (cur.clone(), BraidWord::identity(n));
            for _ in 0..=ell {
                let (nw, a) = decycle_once(n, &t2);
                tc2 = tc2.then(&a).free_reduce();
                t2 = nw;
                if normal_form(&t2).sup() < nf.sup() {
                    improved = true;
                    break;
                }
            }
            if !improved {
                break;
            }
            t = t2;
            tc = tc2;
        }
        total = total.then(&tc).free_reduce();
        cur = normal_form(&t).to_word();
    }
    (cur, total)
}

type Orbit = HashMap<GarsideNormalForm, BraidWord>;

/// Enumerates the summit set of `rep`, mapping each member's normal form to
/// a conjugator from `rep`.
///
/// The summit set is connected under conjugation by simple elements, so a
/// breadth-first closure over all nontrivial permutation braids that
/// preserves `(inf, sup)` reaches every member. Returns `None` only if the
/// exploration cap is hit.
fn summit_orbit(n: usize, rep: &BraidWord) -> Option<Orbit> {
    let nf0 = normal_form(rep);
    let (inf, sup) = (nf0.delta_power(), nf0.sup());
    let simples: Vec<BraidWord> = (1..=n)
        .permutations(n)
        .filter_map(|imgs| {
            let p = Permutation::from_images(&imgs).ok()?;
            if p.is_identity() {
                None
            } else {
                Some(permutation_braid_word(n, &p))
            }
        })
        .collect();
    let mut orbit: Orbit = HashMap::new();
    orbit.insert(nf0.clone(), BraidWord::identity(n));
    let mut queue = vec![nf0];
    while let Some(key) = queue.pop() {
        let w = key.to_word();
        let cw = orbit[&key].clone();
        for a in &simples {
            let nf2 = normal_form(&conj(&w, a));
            if nf2.delta_power() == inf && nf2.sup() == sup && !orbit.contains_key(&nf2) {
                if orbit.len() >= ORBIT_CAP {
                    return None;
                }
                orbit.insert(nf2.clone(), cw.then(a).free_reduce());
                queue.push(nf2);
            }
        }
    }
    Some(orbit)
}

/// Cache of summit-set orbits keyed by the summit representative, shared
/// across calls (the lifting algorithms certify many entries against the
/// same few canonical targets).
fn orbit_cache() -> &'static Mutex<HashMap<GarsideNormalForm, Option<Arc<Orbit>>>> {
    static CACHE: OnceLock<Mutex<HashMap<GarsideNormalForm, Option<Arc<Orbit>>>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Searches for a braid `c` with `c⁻¹ · y · c = x` in `Bₙ`.
///
/// Returns `None` when `x` and `y` are not conjugate (distinct summit
/// invariants or disjoint summit sets) or when the summit set exceeds the
/// exploration cap. A returned witness always satisfies the equation — the
/// composition is exact, not heuristic.
pub fn conjugating_witness(x: &BraidWord, y: &BraidWord) -> Option<BraidWord> {
    if x.strand_count() != y.strand_count() {
        return None;
    }
    if x.exponent_sum() != y.exponent_sum() {
        return None;
    }
    let (rx, ax) = summit_reduce(x);
    let (ry, ay) = summit_reduce(y);
    let nfx = normal_form(&rx);
    let nfy = normal_form(&ry);
    if nfx.delta_power() != nfy.delta_power() || nfx.sup() != nfy.sup() {
        return None;
    }
    if nfx == nfy {
        return Some(ay.then(&ax.inverse()).free_reduce());
    }
    let orbit = {
        let cache = orbit_cache().lock().expect("orbit cache poisoned");
        match cache.get(&nfy) {
            Some(hit) => hit.clone(),
            None => {
                drop(cache);
                let computed = summit_orbit(y.strand_count(), &ry).map(Arc::new);
                let mut cache = orbit_cache().lock().expect("orbit cache poisoned");
                cache.insert(nfy.clone(), computed.clone());
                computed
            }
        }
    }?;
    let v = orbit.get(&nfx)?;
    // rx = conj(x, ax) and rx = conj(y, ay·v), so x = conj(y, ay·v·ax⁻¹).
    Some(ay.then(v).then(&ax.inverse()).free_reduce())
}
