//! The digit string of `F[g]` and its decoding.
//!
//! Reading the noncut counts of the ordered components gives the doubly
//! infinite word `… 1 0 1 0 2 0 g(1) 0 g(2) …`: the left tail alternates
//! points and arcs, the unique first 2 marks the base segment, and the
//! values of `g` sit at even offsets to its right, separated by arc zeros.

use std::fmt;
use std::str::FromStr;

use super::{GSeq, SinegraphError};

/// A finite window of the digit string around the anchor. `left[i]` is the
/// digit at offset `-(i+1)`, `right[i]` at offset `+(i+1)`; the anchor digit
/// itself is always 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitWindow {
    pub left: Vec<u8>,
    pub right: Vec<u8>,
}

/// The window with `n` digits on each side of the anchor.
pub fn encode(g: &GSeq, n: usize) -> DigitWindow {
    let left = (1..=n).map(|j| if j % 2 == 1 { 0 } else { 1 }).collect();
    let right = (1..=n)
        .map(|j| if j % 2 == 1 { 0 } else { g.at(j as u64 / 2) })
        .collect();
    DigitWindow { left, right }
}

/// Recovers `g(1..=k)` from a window, `k = ⌊len(right)/2⌋`. Rejects windows
/// that break the string invariants: 2s or misplaced digits in the left
/// tail, nonzero digits at odd right offsets.
pub fn decode(w: &DigitWindow) -> Result<Vec<u8>, SinegraphError> {
    for (i, &d) in w.left.iter().enumerate() {
        let offset = i + 1;
        let expected = if offset % 2 == 1 { 0 } else { 1 };
        if d != expected {
            return Err(SinegraphError::MalformedWindow(format!(
                "left digit at offset -{offset} must be {expected}, got {d}"
            )));
        }
    }
    let mut g_values = Vec::new();
    for (i, &d) in w.right.iter().enumerate() {
        let offset = i + 1;
        if offset % 2 == 1 {
            if d != 0 {
                return Err(SinegraphError::MalformedWindow(format!(
                    "right digit at odd offset {offset} must be 0, got {d}"
                )));
            }
        } else {
            if d != 1 && d != 2 {
                return Err(SinegraphError::MalformedWindow(format!(
                    "right digit at offset {offset} must be 1 or 2, got {d}"
                )));
            }
            g_values.push(d);
        }
    }
    Ok(g_values)
}

impl fmt::Display for DigitWindow {
    /// Space-separated digits, anchor marked `^2`, left side printed
    /// outermost first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tokens: Vec<String> = self.left.iter().rev().map(|d| d.to_string()).collect();
        tokens.push("^2".to_string());
        tokens.extend(self.right.iter().map(|d| d.to_string()));
        write!(f, "{}", tokens.join(" "))
    }
}

impl FromStr for DigitWindow {
    type Err = SinegraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut left_rev: Vec<u8> = Vec::new();
        let mut right: Vec<u8> = Vec::new();
        let mut seen_anchor = false;
        for token in s.split_whitespace() {
            if let Some(rest) = token.strip_prefix('^') {
                if seen_anchor {
                    return Err(SinegraphError::MalformedWindow(
                        "more than one anchor mark".into(),
                    ));
                }
                if rest != "2" {
                    return Err(SinegraphError::MalformedWindow(format!(
                        "anchor digit must be 2, got {rest:?}"
                    )));
                }
                seen_anchor = true;
                continue;
            }
            let d: u8 = match token {
                "0" => 0,
                "1" => 1,
                "2" => 2,
                other => {
                    return Err(SinegraphError::MalformedWindow(format!(
                        "not a digit: {other:?}"
                    )))
                }
            };
            if seen_anchor {
                right.push(d);
            } else {
                left_rev.push(d);
            }
        }
        if !seen_anchor {
            return Err(SinegraphError::AnchorMissing);
        }
        left_rev.reverse();
        Ok(DigitWindow {
            left: left_rev,
            right,
        })
    }
}
