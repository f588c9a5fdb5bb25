//! Line-oriented text formats for permutation and braid systems.
//!
//! One system per line:
//!
//! ```text
//! perm-system 4: (1 2),(3 4),(1 3),(1 3),(3 4),(1 2)
//! braid-system 4: [1],[3],[2 1 -2],[-1]
//! ```
//!
//! A permutation entry is in cycle notation (`()` for the identity); a braid
//! entry is a bracketed signed-letter word (`[]` for the empty word). The
//! `Display` impls of the system types emit exactly these formats.

use super::{BraidSystem, HurwitzError, PermutationSystem, Result};
use crate::braid_core::{parse_braid, BraidWord, Permutation};

/// Splits `line` as `<keyword> <n>: <rest>`, returning `(n, rest)`.
fn split_header<'a>(line: &'a str, keyword: &str) -> Result<(usize, &'a str)> {
    let malformed = || HurwitzError::MalformedSystem(line.to_string());
    let rest = line.trim().strip_prefix(keyword).ok_or_else(malformed)?;
    let (head, body) = rest.split_once(':').ok_or_else(malformed)?;
    let n: usize = head.trim().parse().map_err(|_| malformed())?;
    if n == 0 {
        return Err(malformed());
    }
    Ok((n, body.trim()))
}

/// Parses a `perm-system n: …` line.
///
/// The product of the entries becomes the system's target, so any
/// well-formed line parses; operations requiring an identity product check
/// it themselves.
pub fn parse_permutation_system(line: &str) -> Result<PermutationSystem> {
    let (n, body) = split_header(line, "perm-system")?;
    let mut entries = Vec::new();
    if !body.is_empty() {
        for tok in body.split(',') {
            let p = Permutation::parse_cycles(tok.trim(), n)
                .map_err(|e| HurwitzError::MalformedSystem(format!("{tok}: {e}")))?;
            entries.push(p);
        }
    }
    let target = entries
        .iter()
        .fold(Permutation::identity(n), |acc, p| acc.then(p));
    PermutationSystem::with_target(n, entries, target)
}

/// Parses a `braid-system n: [w],[w],…` line into an uncertified braid
/// system.
pub fn parse_braid_system(line: &str) -> Result<BraidSystem> {
    let (n, body) = split_header(line, "braid-system")?;
    let malformed = |detail: &str| HurwitzError::MalformedSystem(detail.to_string());
    let mut entries: Vec<BraidWord> = Vec::new();
    let mut rest = body;
    while !rest.is_empty() {
        let open = rest.find('[').ok_or_else(|| malformed(rest))?;
        if !rest[..open].trim().trim_matches(',').trim().is_empty() {
            return Err(malformed(rest));
        }
        let close = rest[open..].find(']').ok_or_else(|| malformed(rest))? + open;
        let word = rest[open + 1..close].trim();
        let w = if word.is_empty() {
            BraidWord::identity(n)
        } else {
            parse_braid(word, n).map_err(|e| malformed(&format!("{word}: {e}")))?
        };
        entries.push(w);
        rest = rest[close + 1..].trim();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    BraidSystem::uncertified(n, entries)
}
