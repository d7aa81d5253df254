//! Canonical integer partitions and the elementary transformations the
//! bijections are assembled from.
//!
//! Parts are always kept weakly decreasing, so multiset equality coincides
//! with `Vec` equality. The empty partition is the unique partition of 0.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order. Zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Builds a partition from parts that must already be positive and weakly
    /// decreasing.
    pub fn from_sorted(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain {
                op: "partition",
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain {
                op: "partition",
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of parts equal to `magnitude`.
    pub fn multiplicity(&self, magnitude: u32) -> usize {
        self.parts.iter().filter(|&&p| p == magnitude).count()
    }

    /// `(magnitude, multiplicity)` pairs, largest magnitude first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((m, c)) if *m == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn all_divisible_by(&self, t: u32) -> bool {
        self.parts.iter().all(|&p| p % t == 0)
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// True for `(k, k-1, ..., 1)`, including the empty staircase.
    pub fn is_staircase(&self) -> bool {
        let k = self.parts.len() as u32;
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p == k - i as u32)
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: u32) -> Self {
        Self {
            parts: (1..=k).rev().collect(),
        }
    }

    /// Keeps the parts satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(u32) -> bool) -> Self {
        Self {
            parts: self.parts.iter().copied().filter(|&p| keep(p)).collect(),
        }
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Self {
        let cols = self.largest() as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.parts {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Self { parts: out }
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Self { parts }
    }

    /// Every part doubled.
    pub fn scale2(&self) -> Self {
        self.scale(2)
    }

    pub fn scale(&self, factor: u32) -> Self {
        assert!(factor > 0, "scale factor must be positive");
        Self {
            parts: self.parts.iter().map(|&p| p * factor).collect(),
        }
    }

    /// Every part divided by `divisor`; `None` if some part is not a multiple.
    pub fn divide(&self, divisor: u32) -> Option<Self> {
        if !self.all_divisible_by(divisor) {
            return None;
        }
        Some(Self {
            parts: self.parts.iter().map(|&p| p / divisor).collect(),
        })
    }

    /// `ℓ_i`: the number of parts congruent to `residue` mod 3.
    pub fn count_residue3(&self, residue: Residue) -> usize {
        self.parts.iter().filter(|&&p| residue.matches(p)).count()
    }

    pub fn split_by_residue3(&self, residue: Residue) -> ResidueSplit {
        let (selected, complement): (Vec<u32>, Vec<u32>) =
            self.parts.iter().partition(|&&p| residue.matches(p));
        ResidueSplit {
            selected: Self { parts: selected },
            complement: Self { parts: complement },
            residue,
        }
    }

    pub fn to_frobenius(&self) -> FrobeniusSymbol {
        let conj = self.conjugate();
        let rank = self
            .parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count();
        let top = (0..rank).map(|i| self.parts[i] - 1 - i as u32).collect();
        let bottom = (0..rank).map(|i| conj.parts[i] - 1 - i as u32).collect();
        FrobeniusSymbol { top, bottom }
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::from_sorted(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Splits `a+b+c` into tokens; `0` (the empty partition) yields no tokens.
pub(crate) fn split_plus(text: &str) -> Result<Vec<&str>> {
    let text = text.trim();
    if text == "0" || text == "∅" {
        return Ok(Vec::new());
    }
    if text.is_empty() {
        return Err(parse_err(
            text,
            "empty text; write `0` for the empty partition",
        ));
    }
    text.split('+')
        .map(|t| {
            let t = t.trim();
            if t.is_empty() {
                Err(parse_err(text, "dangling `+`"))
            } else {
                Ok(t)
            }
        })
        .collect()
}

pub(crate) fn parse_part(token: &str) -> Result<u32> {
    match token.parse::<u32>() {
        Ok(0) => Err(parse_err(token, "parts must be positive")),
        Ok(v) => Ok(v),
        Err(_) => Err(parse_err(token, "expected a positive integer part")),
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts the canonical `4+4+2+2+1` form; parts must be weakly decreasing.
    fn from_str(s: &str) -> Result<Self> {
        let parts = split_plus(s)?
            .into_iter()
            .map(parse_part)
            .collect::<Result<Vec<_>>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(parse_err(s, "parts must be weakly decreasing"));
        }
        Ok(Self { parts })
    }
}

/// A residue class mod 3 other than 0, in the `±1` spelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Residue {
    /// Parts `≡ 1 (mod 3)`.
    Plus,
    /// Parts `≡ -1 ≡ 2 (mod 3)`.
    Minus,
}

impl Residue {
    /// Canonical representative in `{1, 2}`.
    pub fn canonical(self) -> u32 {
        match self {
            Residue::Plus => 1,
            Residue::Minus => 2,
        }
    }

    pub fn matches(self, part: u32) -> bool {
        part % 3 == self.canonical()
    }
}

impl TryFrom<i64> for Residue {
    type Error = Error;

    /// Accepts `1`, `-1`, and `2` (the canonical spelling of `-1`).
    fn try_from(value: i64) -> Result<Self> {
        match value.rem_euclid(3) {
            1 => Ok(Residue::Plus),
            2 => Ok(Residue::Minus),
            _ => Err(Error::Domain {
                op: "residue",
                reason: format!("{value} is not a unit residue mod 3"),
            }),
        }
    }
}

/// The parts of a partition congruent to a residue, and the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSplit {
    pub selected: Partition,
    pub complement: Partition,
    pub residue: Residue,
}

impl ResidueSplit {
    pub fn recombine(&self) -> Partition {
        self.selected.union(&self.complement)
    }
}

/// Two strictly decreasing rows of arm and leg lengths off the diagonal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FrobeniusSymbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl FrobeniusSymbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Frobenius(format!(
                "rows have lengths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        for (name, row) in [("top", &top), ("bottom", &bottom)] {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::Frobenius(format!(
                    "{name} row {row:?} is not strictly decreasing"
                )));
            }
        }
        Ok(Self { top, bottom })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Number of columns (the Durfee square side).
    pub fn rank(&self) -> usize {
        self.top.len()
    }

    pub fn weight(&self) -> u64 {
        self.top
            .iter()
            .chain(&self.bottom)
            .map(|&v| u64::from(v))
            .sum::<u64>()
            + self.rank() as u64
    }

    pub fn to_partition(&self) -> Partition {
        let l = self.rank();
        // Row i < l: i cells left of the diagonal, the diagonal cell, the arm.
        let mut parts: Vec<u32> = (0..l).map(|i| self.top[i] + 1 + i as u32).collect();
        // Row r >= l: one cell for every column j whose leg reaches down to r.
        let mut r = l;
        loop {
            let cells = (0..l).filter(|&j| self.bottom[j] as usize + j >= r).count() as u32;
            if cells == 0 {
                break;
            }
            parts.push(cells);
            r += 1;
        }
        Partition::from_sorted_unchecked(parts)
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[u32]| row.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.top), join(&self.bottom))
    }
}

impl FromStr for FrobeniusSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| parse_err(s, "expected `(a1,a2,...;b1,b2,...)`"))?;
        let (top, bottom) = inner
            .split_once(';')
            .ok_or_else(|| parse_err(s, "missing `;` between rows"))?;
        let row = |r: &str| -> Result<Vec<u32>> {
            let r = r.trim();
            if r.is_empty() {
                return Ok(Vec::new());
            }
            r.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<u32>()
                        .map_err(|_| parse_err(v, "expected a nonnegative integer"))
                })
                .collect()
        };
        Self::new(row(top)?, row(bottom)?)
    }
}

impl From<&FrobeniusSymbol> for Partition {
    fn from(f: &FrobeniusSymbol) -> Self {
        f.to_partition()
    }
}
