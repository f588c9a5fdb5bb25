//! Braid words: finite sequences of signed Artin generators.

use super::{BraidError, Permutation, Result};
use std::fmt;

/// An element of the braid group `Bₙ` presented as a word in the Artin
/// generators `σ₁, …, σ_{n−1}` and their inverses.
///
/// Letters are stored as nonzero integers: `+i` for `σᵢ`, `−i` for `σᵢ⁻¹`.
/// The empty word is the identity. Words are immutable value objects; all
/// operations return new words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// The identity word of `Bₙ`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "strand count must be positive");
        BraidWord {
            strands: n,
            letters: Vec::new(),
        }
    }

    /// The single generator `σᵢ^sign` in `Bₙ` (1-based `i < n`).
    pub fn generator(n: usize, i: usize, sign: i32) -> Self {
        assert!(i >= 1 && i < n, "generator index out of range");
        assert!(sign == 1 || sign == -1);
        BraidWord {
            strands: n,
            letters: vec![sign * i as i32],
        }
    }

    /// Builds a word from signed letters (`+i` = `σᵢ`, `−i` = `σᵢ⁻¹`).
    pub fn from_letters(n: usize, letters: &[i32]) -> Result<Self> {
        for &l in letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx >= n {
                return Err(BraidError::IndexOutOfRange {
                    index: idx,
                    strands: n,
                });
            }
        }
        Ok(BraidWord {
            strands: n,
            letters: letters.to_vec(),
        })
    }

    /// Strand count `n`.
    pub fn strand_count(&self) -> usize {
        self.strands
    }

    /// The signed letters of the word.
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Word length (number of letters, not the Garside canonical length).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether the word is empty (the identity as a word, not merely in `Bₙ`).
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other` (self acts first).
    pub fn then(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(
            self.strands, other.strands,
            "strand count mismatch in concatenation"
        );
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// The inverse word (letters reversed and negated).
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// The `k`-th power (negative `k` uses the inverse word).
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut out = BraidWord::identity(self.strands);
        for _ in 0..k.unsigned_abs() {
            out = out.then(&base);
        }
        out
    }

    /// Free reduction: cancels adjacent `σᵢ σᵢ⁻¹` pairs (not a normal form,
    /// but keeps constructively built words from growing without bound).
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// Exponent sum: the abelianization `Bₙ → ℤ` (sum of letter signs).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The forgetful homomorphism `Bₙ → Sₙ` sending `σᵢ^{±1} ↦ (i, i+1)`,
    /// composed left to right.
    pub fn forget(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            p = p.then(&Permutation::transposition(self.strands, i, i + 1));
        }
        p
    }

    /// The positive half twist `Δ` of `Bₙ`: `(σ₁)(σ₂σ₁)…(σ_{n−1}…σ₁)`.
    pub fn half_twist(n: usize) -> BraidWord {
        let mut letters = Vec::new();
        for k in 1..n {
            for i in (1..=k).rev() {
                letters.push(i as i32);
            }
        }
        BraidWord {
            strands: n,
            letters,
        }
    }
}

/// Parses a braid word in either text format.
///
/// Accepted tokens, whitespace separated: signed integers (`1 2 -1`) or
/// `sK` / `sK^-1`. The empty string is the identity. Rejects generator
/// indices `≥ n`.
pub fn parse_braid(text: &str, n: usize) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let letter = if let Some(rest) = tok.strip_prefix('s') {
            if let Some(idx) = rest.strip_suffix("^-1") {
                -(idx
                    .parse::<i32>()
                    .map_err(|_| BraidError::MalformedToken(tok.to_string()))?)
            } else if let Some(idx) = rest.strip_suffix("^1") {
                idx.parse::<i32>()
                    .map_err(|_| BraidError::MalformedToken(tok.to_string()))?
            } else {
                rest.parse::<i32>()
                    .map_err(|_| BraidError::MalformedToken(tok.to_string()))?
            }
        } else {
            tok.parse::<i32>()
                .map_err(|_| BraidError::MalformedToken(tok.to_string()))?
        };
        if letter == 0 {
            return Err(BraidError::MalformedToken(tok.to_string()));
        }
        let idx = letter.unsigned_abs() as usize;
        if idx >= n {
            return Err(BraidError::IndexOutOfRange {
                index: idx,
                strands: n,
            });
        }
        letters.push(letter);
    }
    Ok(BraidWord {
        strands: n,
        letters,
    })
}

impl fmt::Display for BraidWord {
    /// Signed-integer format, e.g. `1 2 -1`; the identity prints as the
    /// empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(n={}, [{}])", self.strands, self)
    }
}
