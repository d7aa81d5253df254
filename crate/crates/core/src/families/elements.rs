//! Element types of the restricted partition families and their text forms.
//!
//! Grammar (printing and parsing are inverse):
//! - designated occurrence: `'` suffix, e.g. `20+20+20'+4+4'`
//! - overline: `~` suffix on the first occurrence, e.g. `3~+3+1`
//! - colours: `r` / `b` suffix, e.g. `4b+2r+1r`
//! - tuples: `(A;B;C)`, with `0` for empty components

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, parse_err, Error, Result};
use crate::partition::{parse_part, split_plus, Partition};

/// Overpartition; overlines attach to magnitudes (printed on the first occurrence).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    parts: Partition,
    overlined: BTreeSet<u32>,
}

impl Overpartition {
    pub fn new(parts: Partition, overlined: BTreeSet<u32>) -> Result<Self> {
        if let Some(m) = overlined.iter().find(|&&m| parts.multiplicity(m) == 0) {
            return Err(domain(
                "overpartition",
                format!("overlined magnitude {m} does not occur"),
            ));
        }
        Ok(Self { parts, overlined })
    }

    pub fn parts(&self) -> &Partition {
        &self.parts
    }

    pub fn overlined(&self) -> &BTreeSet<u32> {
        &self.overlined
    }

    pub fn weight(&self) -> u64 {
        self.parts.weight()
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let mut previous = None;
        for (i, &p) in self.parts.parts().iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
            if previous != Some(p) && self.overlined.contains(&p) {
                f.write_str("~")?;
            }
            previous = Some(p);
        }
        Ok(())
    }
}

impl FromStr for Overpartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        let mut overlined = BTreeSet::new();
        for token in split_plus(s)? {
            let (digits, over) = match token.strip_suffix('~') {
                Some(d) => (d, true),
                None => (token, false),
            };
            let v = parse_part(digits)?;
            if over {
                if parts.last() == Some(&v) {
                    return Err(parse_err(token, "overline belongs on the first occurrence"));
                }
                overlined.insert(v);
            }
            parts.push(v);
        }
        let parts = Partition::from_sorted(parts)
            .map_err(|_| parse_err(s, "parts must be weakly decreasing"))?;
        Self::new(parts, overlined)
    }
}

/// Multiplicity of one magnitude and which occurrence (1-based, left to right)
/// carries the designation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Designation {
    pub multiplicity: u32,
    pub index: u32,
}

/// Partition with exactly one designated occurrence per distinct magnitude,
/// stored magnitude-keyed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DesignatedPartition {
    entries: BTreeMap<u32, Designation>,
}

impl DesignatedPartition {
    pub fn new(entries: BTreeMap<u32, Designation>) -> Result<Self> {
        for (&d, des) in &entries {
            if d == 0 {
                return Err(domain(
                    "designated partition",
                    "magnitudes must be positive",
                ));
            }
            if des.multiplicity == 0 || des.index == 0 || des.index > des.multiplicity {
                return Err(domain(
                    "designated partition",
                    format!(
                        "magnitude {d}: designated index {} outside 1..={}",
                        des.index, des.multiplicity
                    ),
                ));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &BTreeMap<u32, Designation> {
        &self.entries
    }

    pub fn weight(&self) -> u64 {
        self.entries
            .iter()
            .map(|(&d, e)| u64::from(d) * u64::from(e.multiplicity))
            .sum()
    }

    /// The underlying partition with designations forgotten.
    pub fn shape(&self) -> Partition {
        let parts = self
            .entries
            .iter()
            .rev()
            .flat_map(|(&d, e)| std::iter::repeat_n(d, e.multiplicity as usize))
            .collect();
        Partition::from_sorted_unchecked(parts)
    }
}

impl fmt::Display for DesignatedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&d, e) in self.entries.iter().rev() {
            for k in 1..=e.multiplicity {
                if !first {
                    f.write_str("+")?;
                }
                first = false;
                write!(f, "{d}")?;
                if k == e.index {
                    f.write_str("'")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for DesignatedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries: BTreeMap<u32, Designation> = BTreeMap::new();
        let mut previous: Option<u32> = None;
        for token in split_plus(s)? {
            let (digits, designated) = match token.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (token, false),
            };
            let v = parse_part(digits)?;
            if let Some(prev) = previous {
                if v > prev {
                    return Err(parse_err(s, "parts must be weakly decreasing"));
                }
            }
            previous = Some(v);
            let entry = entries.entry(v).or_insert(Designation {
                multiplicity: 0,
                index: 0,
            });
            entry.multiplicity += 1;
            if designated {
                if entry.index != 0 {
                    return Err(parse_err(token, "magnitude designated twice"));
                }
                entry.index = entry.multiplicity;
            }
        }
        if let Some((d, _)) = entries.iter().find(|(_, e)| e.index == 0) {
            return Err(parse_err(
                s,
                format!("magnitude {d} has no designated part"),
            ));
        }
        Self::new(entries)
    }
}

/// Two-colour partition; blue parts must be even for membership in `A`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoColorPartition {
    pub red: Partition,
    pub blue: Partition,
}

impl TwoColorPartition {
    pub fn new(red: Partition, blue: Partition) -> Self {
        Self { red, blue }
    }

    pub fn weight(&self) -> u64 {
        self.red.weight() + self.blue.weight()
    }
}

impl fmt::Display for TwoColorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.red.is_empty() && self.blue.is_empty() {
            return f.write_str("0");
        }
        // Descending magnitude, blue before red at equal magnitude.
        let mut tagged: Vec<(u32, char)> = self
            .blue
            .parts()
            .iter()
            .map(|&p| (p, 'b'))
            .chain(self.red.parts().iter().map(|&p| (p, 'r')))
            .collect();
        tagged.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        for (i, (p, c)) in tagged.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}{c}")?;
        }
        Ok(())
    }
}

impl FromStr for TwoColorPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut red = Vec::new();
        let mut blue = Vec::new();
        for token in split_plus(s)? {
            if let Some(d) = token.strip_suffix('r') {
                red.push(parse_part(d)?);
            } else if let Some(d) = token.strip_suffix('b') {
                blue.push(parse_part(d)?);
            } else {
                return Err(parse_err(token, "expected a colour suffix `r` or `b`"));
            }
        }
        Ok(Self::new(Partition::new(red), Partition::new(blue)))
    }
}

/// The odd staircase `(2m-1, ..., 3, 1)` of weight `m²`, whose part 1 may be
/// overlined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddStaircase {
    m: u32,
    one_overlined: bool,
}

impl OddStaircase {
    pub fn new(m: u32, one_overlined: bool) -> Result<Self> {
        if m == 0 && one_overlined {
            return Err(domain(
                "odd staircase",
                "the empty staircase has no part 1 to overline",
            ));
        }
        Ok(Self { m, one_overlined })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn one_overlined(&self) -> bool {
        self.one_overlined
    }

    pub fn weight(&self) -> u64 {
        u64::from(self.m) * u64::from(self.m)
    }

    pub fn partition(&self) -> Partition {
        Partition::from_sorted_unchecked((0..self.m).rev().map(|i| 2 * i + 1).collect())
    }
}

impl fmt::Display for OddStaircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition())?;
        if self.one_overlined {
            f.write_str("~")?;
        }
        Ok(())
    }
}

impl FromStr for OddStaircase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (body, over) = match t.strip_suffix('~') {
            Some(b) => (b, true),
            None => (t, false),
        };
        let p: Partition = body.parse()?;
        let m = p.len() as u32;
        if p != (Self {
            m,
            one_overlined: false,
        })
        .partition()
        {
            return Err(parse_err(s, "not an odd staircase (2m-1,...,3,1)"));
        }
        Self::new(m, over).map_err(|e| parse_err(s, e.to_string()))
    }
}

/// Pair of partitions whose odd parts are distinct.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PodBipartition {
    pub first: Partition,
    pub second: Partition,
}

impl PodBipartition {
    pub fn new(first: Partition, second: Partition) -> Result<Self> {
        for p in [&first, &second] {
            if !odd_parts_distinct(p) {
                return Err(domain(
                    "pod bipartition",
                    format!("{p} repeats an odd part"),
                ));
            }
        }
        Ok(Self { first, second })
    }

    pub fn weight(&self) -> u64 {
        self.first.weight() + self.second.weight()
    }
}

pub(crate) fn odd_parts_distinct(p: &Partition) -> bool {
    p.multiplicities()
        .iter()
        .all(|&(d, m)| d % 2 == 0 || m == 1)
}

/// Any element of a supported family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Partition(Partition),
    Over(Overpartition),
    Designated(DesignatedPartition),
    TwoColor(TwoColorPartition),
    OddStair(OddStaircase),
    Tuple(Vec<Element>),
}

impl Element {
    pub fn weight(&self) -> u64 {
        match self {
            Element::Partition(p) => p.weight(),
            Element::Over(o) => o.weight(),
            Element::Designated(d) => d.weight(),
            Element::TwoColor(c) => c.weight(),
            Element::OddStair(s) => s.weight(),
            Element::Tuple(cs) => cs.iter().map(Element::weight).sum(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Element::Partition(_) => "partition",
            Element::Over(_) => "overpartition",
            Element::Designated(_) => "designated partition",
            Element::TwoColor(_) => "two-colour partition",
            Element::OddStair(_) => "odd staircase",
            Element::Tuple(_) => "tuple",
        }
    }

    pub fn as_partition(&self) -> Option<&Partition> {
        match self {
            Element::Partition(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Partition(p) => p.fmt(f),
            Element::Over(o) => o.fmt(f),
            Element::Designated(d) => d.fmt(f),
            Element::TwoColor(c) => c.fmt(f),
            Element::OddStair(s) => s.fmt(f),
            Element::Tuple(cs) => {
                f.write_str("(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    c.fmt(f)?;
                }
                f.write_str(")")
            }
        }
    }
}

impl From<Partition> for Element {
    fn from(p: Partition) -> Self {
        Element::Partition(p)
    }
}

impl From<PodBipartition> for Element {
    fn from(b: PodBipartition) -> Self {
        Element::Tuple(vec![
            Element::Partition(b.first),
            Element::Partition(b.second),
        ])
    }
}

/// Splits the inside of `(A;B;C)` on top-level `;`.
pub(crate) fn split_tuple(text: &str) -> Result<Vec<&str>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| parse_err(text, "expected a tuple `(c1;c2;...)`"))?;
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err(text, "unbalanced parentheses"));
                }
            }
            ';' if depth == 0 => {
                out.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err(text, "unbalanced parentheses"));
    }
    out.push(inner[start..].trim());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn designated_text_round_trip() {
        let text = "20+20+20'+4+4'+4+4+2'+2+1+1+1+1+1+1+1'+1";
        let d: DesignatedPartition = text.parse().unwrap();
        assert_eq!(d.weight(), 88);
        assert_eq!(d.to_string(), text);
        assert_eq!(
            d.entries()[&4],
            Designation {
                multiplicity: 4,
                index: 2
            }
        );
        assert!("2+2".parse::<DesignatedPartition>().is_err());
        assert!("2'+2'".parse::<DesignatedPartition>().is_err());
        assert!("1'+2'".parse::<DesignatedPartition>().is_err());
        assert_eq!(
            "0".parse::<DesignatedPartition>().unwrap(),
            DesignatedPartition::default()
        );
    }

    #[test]
    fn overpartition_text() {
        let o: Overpartition = "3~+3+1~".parse().unwrap();
        assert_eq!(
            o.overlined().iter().copied().collect::<Vec<_>>(),
            vec![1, 3]
        );
        assert_eq!(o.to_string(), "3~+3+1~");
        assert!("3+3~".parse::<Overpartition>().is_err());
        assert!(Overpartition::new(Partition::new(vec![2]), [5].into()).is_err());
    }

    #[test]
    fn two_colour_text() {
        let c: TwoColorPartition = "2b+2r+1r".parse().unwrap();
        assert_eq!(c.red, Partition::new(vec![2, 1]));
        assert_eq!(c.blue, Partition::new(vec![2]));
        assert_eq!(c.to_string(), "2b+2r+1r");
        assert_eq!(
            "1r+4b".parse::<TwoColorPartition>().unwrap().to_string(),
            "4b+1r"
        );
        assert!("2g".parse::<TwoColorPartition>().is_err());
    }

    #[test]
    fn odd_staircase_text() {
        let s: OddStaircase = "5+3+1~".parse().unwrap();
        assert_eq!((s.m(), s.one_overlined(), s.weight()), (3, true, 9));
        assert_eq!(s.to_string(), "5+3+1~");
        assert_eq!("0".parse::<OddStaircase>().unwrap(), OddStaircase::empty());
        assert!("5+1".parse::<OddStaircase>().is_err());
        assert!("0~".parse::<OddStaircase>().is_err());
        assert!(OddStaircase::new(0, true).is_err());
    }

    #[test]
    fn tuple_split() {
        assert_eq!(split_tuple("(2;6+4;0)").unwrap(), vec!["2", "6+4", "0"]);
        assert_eq!(split_tuple("( 2 ; 0 )").unwrap(), vec!["2", "0"]);
        assert_eq!(split_tuple("((1;2);3)").unwrap(), vec!["(1;2)", "3"]);
        assert!(split_tuple("2;3").is_err());
    }

    #[test]
    fn pod_bipartition_checks_odd_repeats() {
        assert!(PodBipartition::new(Partition::new(vec![2, 2, 1]), Partition::empty()).is_ok());
        assert!(PodBipartition::new(Partition::new(vec![1, 1]), Partition::empty()).is_err());
    }
}
