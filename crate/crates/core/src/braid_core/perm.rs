//! Permutations of `{1..n}` with left-to-right composition.

use super::{BraidError, Result};
use std::fmt;

/// A permutation of `{1..n}`, stored as the image array of `1..n`.
///
/// Points are 1-based in the public API. Composition is left to right:
/// `(u.then(v))(x) = v(u(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `images[i]` is the (0-based) image of point `i`.
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation on `n` points.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from a 1-based image list (`images[i-1]` = image of `i`).
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(BraidError::NotAPermutation(format!(
                    "image list {images:?} is not a bijection of 1..{n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| v - 1).collect(),
        })
    }

    /// The transposition `(a b)` on `n` points (1-based, `a ≠ b`).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a != b && a >= 1 && b >= 1 && a <= n && b <= n);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// Parses cycle notation such as `(1 2)(3 4)`; `()` is the identity.
    ///
    /// `n` is the number of points; every moved point must be ≤ n.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let body = text.trim();
        let mut rest = body;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| BraidError::NotAPermutation(format!("expected `(` in `{body}`")))?;
            if !rest[..open].trim().is_empty() {
                return Err(BraidError::NotAPermutation(format!(
                    "unexpected text before cycle in `{body}`"
                )));
            }
            let close = rest[open..].find(')').ok_or_else(|| {
                BraidError::NotAPermutation(format!("unbalanced `(` in `{body}`"))
            })? + open;
            let inner = &rest[open + 1..close];
            rest = &rest[close + 1..];
            let pts: Vec<usize> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>().map_err(|_| {
                        BraidError::NotAPermutation(format!("bad point `{s}` in `{body}`"))
                    })
                })
                .collect::<Result<_>>()?;
            if pts.is_empty() {
                continue; // `()` denotes the identity cycle
            }
            for &p in &pts {
                if p == 0 || p > n {
                    return Err(BraidError::NotAPermutation(format!(
                        "point {p} out of range 1..{n}"
                    )));
                }
                if moved[p - 1] {
                    return Err(BraidError::NotAPermutation(format!(
                        "point {p} appears twice in `{body}`"
                    )));
                }
                moved[p - 1] = true;
            }
            for k in 0..pts.len() {
                images[pts[k] - 1] = pts[(k + 1) % pts.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Number of points.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// Left-to-right composition: `(self.then(other))(x) = other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Whether this is a transposition (exactly one 2-cycle).
    pub fn is_transposition(&self) -> bool {
        self.cycles().len() == 1 && self.cycles()[0].len() == 2
    }

    /// The conjugate `g⁻¹ ∘ self ∘ g` under left-to-right composition.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    /// Nontrivial cycles, each rotated to start at its least point and the
    /// list sorted by least point (1-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Sign of the permutation: `+1` for even, `−1` for odd.
    pub fn sign(&self) -> i32 {
        let parity: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if parity.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Descent positions: 1-based `i < n` with `self(i) > self(i+1)`.
    ///
    /// For a positive permutation braid with this permutation, the descents
    /// are exactly the generators the braid can start with (its starting
    /// set); the descents of the inverse are the finishing set.
    pub fn descents(&self) -> Vec<usize> {
        (0..self.degree() - 1)
            .filter(|&i| self.images[i] > self.images[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    /// The order-reversing permutation `ω₀` (the half-twist permutation).
    pub fn reversal(n: usize) -> Self {
        Permutation {
            images: (0..n).rev().collect(),
        }
    }

    /// Orbits of the subgroup generated by `perms` on `{1..n}`, sorted.
    pub fn orbits(n: usize, perms: &[Permutation]) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for p in perms {
            for x in 0..n {
                let a = find(&mut parent, x);
                let b = find(&mut parent, p.images[x]);
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..n {
            let r = find(&mut parent, x);
            groups.entry(r).or_default().push(x + 1);
        }
        groups.into_values().collect()
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (k, p) in cyc.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}
