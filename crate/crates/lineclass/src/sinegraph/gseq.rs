//! Eventually periodic sequences over `{1,2}` in canonical form.

use std::fmt;
use std::str::FromStr;

use super::SinegraphError;

/// An eventually periodic sequence `g : {1,2,3,…} → {1,2}` with `g(n) = 2`
/// infinitely often.
///
/// Stored canonically: the tail is primitive (not a power of a shorter word)
/// and the prefix is shortest possible (no prefix suffix merges into a
/// rotation of the tail). Two values denote the same sequence iff their
/// canonical forms — and hence their derived `PartialEq` — agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GSeq {
    prefix: Vec<u8>,
    tail: Vec<u8>,
}

/// Shortens a word to its primitive root in place.
fn primitive_root(word: &mut Vec<u8>) {
    for p in 1..=word.len() / 2 {
        if word.len().is_multiple_of(p) && word[..word.len() - p] == word[p..] {
            word.truncate(p);
            return;
        }
    }
}

impl GSeq {
    pub fn new(prefix: &[u8], tail: &[u8]) -> Result<GSeq, SinegraphError> {
        if tail.is_empty() {
            return Err(SinegraphError::ParseGSeq("empty tail".into()));
        }
        for &s in prefix.iter().chain(tail) {
            if s != 1 && s != 2 {
                return Err(SinegraphError::ParseGSeq(format!(
                    "symbol {s} outside {{1,2}}"
                )));
            }
        }
        let mut prefix = prefix.to_vec();
        let mut tail = tail.to_vec();
        primitive_root(&mut tail);
        // roll the prefix into the loop as far as possible
        while let Some(&last) = prefix.last() {
            if last == *tail.last().expect("nonempty tail") {
                prefix.pop();
                tail.rotate_right(1);
            } else {
                break;
            }
        }
        if !tail.contains(&2) {
            return Err(SinegraphError::NotInOmega);
        }
        Ok(GSeq { prefix, tail })
    }

    /// `g(n)` for `n >= 1`.
    pub fn at(&self, n: u64) -> u8 {
        assert!(n >= 1, "g is indexed from 1");
        let idx = (n - 1) as usize;
        if idx < self.prefix.len() {
            self.prefix[idx]
        } else {
            self.tail[(idx - self.prefix.len()) % self.tail.len()]
        }
    }

    /// `g(1..=len)` as a word.
    pub fn expand(&self, len: usize) -> Vec<u8> {
        (1..=len as u64).map(|n| self.at(n)).collect()
    }

    pub fn prefix(&self) -> &[u8] {
        &self.prefix
    }

    pub fn tail(&self) -> &[u8] {
        &self.tail
    }

    /// Homeomorphy of `F[g]` and `F[h]`: distinct sequences give
    /// non-homeomorphic graphs, so this is canonical-form equality.
    pub fn homeomorphic_fg(&self, other: &GSeq) -> bool {
        self == other
    }
}

fn word_str(w: &[u8]) -> String {
    w.iter().map(|d| char::from(b'0' + d)).collect()
}

impl fmt::Display for GSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "prefix={};tail={}",
            word_str(&self.prefix),
            word_str(&self.tail)
        )
    }
}

impl FromStr for GSeq {
    type Err = SinegraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SinegraphError::ParseGSeq(s.to_string());
        let (p, t) = s.trim().split_once(';').ok_or_else(bad)?;
        let p = p.trim().strip_prefix("prefix=").ok_or_else(bad)?;
        let t = t.trim().strip_prefix("tail=").ok_or_else(bad)?;
        let word = |w: &str| -> Result<Vec<u8>, SinegraphError> {
            w.chars()
                .map(|c| match c {
                    '1' => Ok(1),
                    '2' => Ok(2),
                    _ => Err(bad()),
                })
                .collect()
        };
        GSeq::new(&word(p)?, &word(t)?)
    }
}
