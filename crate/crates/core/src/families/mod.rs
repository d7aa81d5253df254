//! Restricted partition families: identifiers, membership predicates, and
//! exhaustive fixed-weight enumeration.
//!
//! Enumeration output is sorted by the byte-wise order of each element's
//! canonical text form, so listings are stable across runs and platforms.

mod elements;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

pub(crate) use elements::{odd_parts_distinct, split_tuple};
pub use elements::{
    DesignatedPartition, Designation, Element, OddStaircase, Overpartition, PodBipartition,
    TwoColorPartition,
};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest weight `enumerate` accepts unless a ceiling is passed explicitly.
pub const DEFAULT_CEILING: u32 = 40;

/// Identifier of a supported family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `P_{t_S}`: parts congruent mod `t` to some residue in `S`.
    Parts {
        t: u32,
        residues: BTreeSet<u32>,
    },
    /// `D_{t_S}`: distinct parts congruent mod `t` to some residue in `S`.
    DistinctParts {
        t: u32,
        residues: BTreeSet<u32>,
    },
    Overpartition,
    Staircase,
    OddStaircase,
    /// Partitions with designated summands.
    Designated,
    /// Partitions whose odd parts are distinct.
    OddDistinct,
    /// Two-colour partitions whose blue parts are even.
    TwoColor,
    /// Ordered k-tuples with one family per component.
    Vector(Vec<FamilyId>),
}

/// The element shape a family is made of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementKind {
    Partition,
    Over,
    Designated,
    TwoColor,
    OddStair,
    Tuple,
}

impl FamilyId {
    pub fn parts(t: u32, residues: &[u32]) -> Result<Self> {
        let residues = Self::check_residues(t, residues)?;
        Ok(FamilyId::Parts { t, residues })
    }

    pub fn distinct_parts(t: u32, residues: &[u32]) -> Result<Self> {
        let residues = Self::check_residues(t, residues)?;
        Ok(FamilyId::DistinctParts { t, residues })
    }

    fn check_residues(t: u32, residues: &[u32]) -> Result<BTreeSet<u32>> {
        if t == 0 {
            return Err(Error::UnknownFamily("modulus t must be at least 1".into()));
        }
        if let Some(s) = residues.iter().find(|&&s| s >= t) {
            return Err(Error::UnknownFamily(format!(
                "residue {s} is not in [0, {t})"
            )));
        }
        Ok(residues.iter().copied().collect())
    }

    /// Ordinary partitions, `P_{1_{0}}`.
    pub fn ordinary() -> Self {
        FamilyId::Parts {
            t: 1,
            residues: [0].into(),
        }
    }

    /// Partitions into multiples of `t`, `P_{t_{0}}`.
    pub fn multiples_of(t: u32) -> Self {
        FamilyId::Parts {
            t,
            residues: [0].into(),
        }
    }

    /// Distinct multiples of 3, `D_{3_{0}}`.
    pub fn distinct_multiples_of_3() -> Self {
        FamilyId::DistinctParts {
            t: 3,
            residues: [0].into(),
        }
    }

    pub fn pod2() -> Self {
        FamilyId::Vector(vec![FamilyId::OddDistinct, FamilyId::OddDistinct])
    }

    pub fn overpartition_pairs() -> Self {
        FamilyId::Vector(vec![FamilyId::Overpartition, FamilyId::Overpartition])
    }

    /// `V_{2,5}` with components `(P_2, P_2, P_2, S, D_3)`.
    pub fn pd_codomain() -> Self {
        let e = Self::multiples_of(2);
        FamilyId::Vector(vec![
            e.clone(),
            e.clone(),
            e,
            FamilyId::Staircase,
            Self::distinct_multiples_of_3(),
        ])
    }

    /// `V_{2,4}` with components `(P_2, P_2, P_2, S)`.
    pub fn a_codomain() -> Self {
        let e = Self::multiples_of(2);
        FamilyId::Vector(vec![e.clone(), e.clone(), e, FamilyId::Staircase])
    }

    /// `V_{2,4}` with components `(P_2, P_2, P_2, S_{t-odd})`.
    pub fn pod_codomain() -> Self {
        let e = Self::multiples_of(2);
        FamilyId::Vector(vec![e.clone(), e.clone(), e, FamilyId::OddStaircase])
    }

    pub fn kind(&self) -> ElementKind {
        match self {
            FamilyId::Parts { .. }
            | FamilyId::DistinctParts { .. }
            | FamilyId::Staircase
            | FamilyId::OddDistinct => ElementKind::Partition,
            FamilyId::Overpartition => ElementKind::Over,
            FamilyId::OddStaircase => ElementKind::OddStair,
            FamilyId::Designated => ElementKind::Designated,
            FamilyId::TwoColor => ElementKind::TwoColor,
            FamilyId::Vector(_) => ElementKind::Tuple,
        }
    }

    fn shape_mismatch(&self, x: &Element) -> Error {
        Error::ShapeMismatch {
            family: self.to_string(),
            found: x.kind(),
        }
    }

    /// Whether `x` satisfies this family's defining constraints. Offering an
    /// element of the wrong shape is an error rather than `false`.
    pub fn is_member(&self, x: &Element) -> Result<bool> {
        match (self, x) {
            (FamilyId::Parts { t, residues }, Element::Partition(p)) => {
                Ok(p.parts().iter().all(|&v| residues.contains(&(v % t))))
            }
            (FamilyId::DistinctParts { t, residues }, Element::Partition(p)) => Ok(p
                .has_distinct_parts()
                && p.parts().iter().all(|&v| residues.contains(&(v % t)))),
            (FamilyId::Staircase, Element::Partition(p)) => Ok(p.is_staircase()),
            (FamilyId::OddDistinct, Element::Partition(p)) => Ok(odd_parts_distinct(p)),
            (FamilyId::Overpartition, Element::Over(_)) => Ok(true),
            (FamilyId::OddStaircase, Element::OddStair(_)) => Ok(true),
            (FamilyId::Designated, Element::Designated(_)) => Ok(true),
            (FamilyId::TwoColor, Element::TwoColor(c)) => Ok(c.blue.all_divisible_by(2)),
            (FamilyId::Vector(fs), Element::Tuple(cs)) => {
                if fs.len() != cs.len() {
                    return Err(self.shape_mismatch(x));
                }
                for (f, c) in fs.iter().zip(cs) {
                    if !f.is_member(c)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => Err(self.shape_mismatch(x)),
        }
    }

    /// Parses `text` as an element of this family's shape (no membership check).
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        Ok(match self {
            FamilyId::Vector(fs) => {
                let pieces = split_tuple(text)?;
                if pieces.len() != fs.len() {
                    return Err(crate::error::parse_err(
                        text,
                        format!("expected {} components, found {}", fs.len(), pieces.len()),
                    ));
                }
                Element::Tuple(
                    fs.iter()
                        .zip(pieces)
                        .map(|(f, piece)| f.parse_element(piece))
                        .collect::<Result<_>>()?,
                )
            }
            _ => match self.kind() {
                ElementKind::Partition => Element::Partition(text.parse()?),
                ElementKind::Over => Element::Over(text.parse()?),
                ElementKind::Designated => Element::Designated(text.parse()?),
                ElementKind::TwoColor => Element::TwoColor(text.parse()?),
                ElementKind::OddStair => Element::OddStair(text.parse()?),
                ElementKind::Tuple => unreachable!("only vectors are tuples"),
            },
        })
    }

    /// Parses `text` and requires membership.
    pub fn parse_member(&self, text: &str) -> Result<Element> {
        let x = self.parse_element(text)?;
        if self.is_member(&x)? {
            Ok(x)
        } else {
            Err(Error::NotMember {
                family: self.to_string(),
                element: text.trim().to_string(),
            })
        }
    }
}

const ALIASES: &[&str] = &["pod2", "op2", "vpd", "va", "vpod"];

fn alias(name: &str) -> Option<FamilyId> {
    Some(match name {
        "pod2" => FamilyId::pod2(),
        "op2" => FamilyId::overpartition_pairs(),
        "vpd" => FamilyId::pd_codomain(),
        "va" => FamilyId::a_codomain(),
        "vpod" => FamilyId::pod_codomain(),
        _ => return None,
    })
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let residues =
            |r: &BTreeSet<u32>| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            FamilyId::Parts { t: 1, residues: r } if r.len() == 1 && r.contains(&0) => {
                f.write_str("p")
            }
            FamilyId::DistinctParts { t: 1, residues: r } if r.len() == 1 && r.contains(&0) => {
                f.write_str("d")
            }
            FamilyId::Parts { t, residues: r } => write!(f, "P{t}{{{}}}", residues(r)),
            FamilyId::DistinctParts { t, residues: r } => write!(f, "D{t}{{{}}}", residues(r)),
            FamilyId::Overpartition => f.write_str("op"),
            FamilyId::Staircase => f.write_str("staircase"),
            FamilyId::OddStaircase => f.write_str("oddstaircase"),
            FamilyId::Designated => f.write_str("pd"),
            FamilyId::OddDistinct => f.write_str("pod"),
            FamilyId::TwoColor => f.write_str("a"),
            FamilyId::Vector(fs) => {
                if let Some(name) = ALIASES.iter().find(|&&n| alias(n).as_ref() == Some(self)) {
                    return f.write_str(name);
                }
                f.write_str("vec(")?;
                for (i, c) in fs.iter().enumerate() {
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

impl FromStr for FamilyId {
    type Err = Error;

    /// Accepts `p`, `d`, `op`, `pd`, `pod`, `a`, `staircase`, `oddstaircase`,
    /// `P<t>{s,...}`, `D<t>{s,...}`, the aliases `pod2`, `op2`, `vpd`, `va`,
    /// `vpod`, and `vec(f1;f2;...)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownFamily(s.to_string());
        if let Some(f) = alias(s) {
            return Ok(f);
        }
        match s {
            "p" => return Ok(FamilyId::ordinary()),
            "d" => {
                return Ok(FamilyId::DistinctParts {
                    t: 1,
                    residues: [0].into(),
                })
            }
            "op" => return Ok(FamilyId::Overpartition),
            "pd" => return Ok(FamilyId::Designated),
            "pod" => return Ok(FamilyId::OddDistinct),
            "a" => return Ok(FamilyId::TwoColor),
            "staircase" => return Ok(FamilyId::Staircase),
            "oddstaircase" => return Ok(FamilyId::OddStaircase),
            _ => {}
        }
        if let Some(inner) = s.strip_prefix("vec(").and_then(|r| r.strip_suffix(')')) {
            let fs = split_tuple(&format!("({inner})"))
                .map_err(|_| unknown())?
                .into_iter()
                .map(str::parse)
                .collect::<Result<Vec<FamilyId>>>()?;
            if fs.is_empty() {
                return Err(unknown());
            }
            return Ok(FamilyId::Vector(fs));
        }
        let (distinct, rest) = match s.as_bytes().first() {
            Some(b'P') => (false, &s[1..]),
            Some(b'D') => (true, &s[1..]),
            _ => return Err(unknown()),
        };
        let (t, res) = rest.split_once('{').ok_or_else(unknown)?;
        let res = res.strip_suffix('}').ok_or_else(unknown)?;
        let t: u32 = t.parse().map_err(|_| unknown())?;
        let residues = if res.trim().is_empty() {
            Vec::new()
        } else {
            res.split(',')
                .map(|r| r.trim().parse::<u32>().map_err(|_| unknown()))
                .collect::<Result<Vec<_>>>()?
        };
        if distinct {
            FamilyId::distinct_parts(t, &residues)
        } else {
            FamilyId::parts(t, &residues)
        }
    }
}

/// All partitions of `n` with parts `<= max_part` satisfying `allowed`, where
/// magnitude `d` may occur at most `cap(d)` times.
fn partitions_where(
    n: u32,
    allowed: &dyn Fn(u32) -> bool,
    cap: &dyn Fn(u32) -> u32,
) -> Vec<Partition> {
    fn rec(
        remaining: u32,
        max: u32,
        allowed: &dyn Fn(u32) -> bool,
        cap: &dyn Fn(u32) -> u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(cur.clone()));
            return;
        }
        for d in (1..=max.min(remaining)).rev() {
            if !allowed(d) {
                continue;
            }
            let most = cap(d).min(remaining / d);
            for c in 1..=most {
                cur.extend(std::iter::repeat_n(d, c as usize));
                rec(remaining - c * d, d - 1, allowed, cap, cur, out);
                cur.truncate(cur.len() - c as usize);
            }
        }
    }
    let mut out = Vec::new();
    rec(n, n, allowed, cap, &mut Vec::new(), &mut out);
    out
}

fn ordinary_partitions(n: u32) -> Vec<Partition> {
    partitions_where(n, &|_| true, &|_| u32::MAX)
}

fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    choices.iter().fold(vec![Vec::new()], |acc, options| {
        acc.iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect()
    })
}

/// Unsorted enumeration of one family at weight `n`.
fn enumerate_raw(family: &FamilyId, n: u32) -> Vec<Element> {
    match family {
        FamilyId::Parts { t, residues } => {
            let (t, residues) = (*t, residues.clone());
            partitions_where(n, &|d| residues.contains(&(d % t)), &|_| u32::MAX)
                .into_iter()
                .map(Element::Partition)
                .collect()
        }
        FamilyId::DistinctParts { t, residues } => {
            let (t, residues) = (*t, residues.clone());
            partitions_where(n, &|d| residues.contains(&(d % t)), &|_| 1)
                .into_iter()
                .map(Element::Partition)
                .collect()
        }
        FamilyId::OddDistinct => {
            partitions_where(n, &|_| true, &|d| if d % 2 == 1 { 1 } else { u32::MAX })
                .into_iter()
                .map(Element::Partition)
                .collect()
        }
        FamilyId::Staircase => {
            let mut k = 0u64;
            while k * (k + 1) / 2 < u64::from(n) {
                k += 1;
            }
            if k * (k + 1) / 2 == u64::from(n) {
                vec![Element::Partition(Partition::staircase(k as u32))]
            } else {
                Vec::new()
            }
        }
        FamilyId::OddStaircase => {
            let mut m = 0u32;
            while u64::from(m) * u64::from(m) < u64::from(n) {
                m += 1;
            }
            match (u64::from(m) * u64::from(m) == u64::from(n), m) {
                (false, _) => Vec::new(),
                (true, 0) => vec![Element::OddStair(OddStaircase::empty())],
                (true, m) => [false, true]
                    .into_iter()
                    .map(|o| Element::OddStair(OddStaircase::new(m, o).expect("m >= 1")))
                    .collect(),
            }
        }
        FamilyId::Overpartition => ordinary_partitions(n)
            .into_iter()
            .flat_map(|p| {
                let mags: Vec<u32> = p.multiplicities().iter().map(|&(d, _)| d).collect();
                (0u64..1 << mags.len()).map(move |mask| {
                    let overlined = mags
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &d)| d)
                        .collect();
                    Element::Over(Overpartition::new(p.clone(), overlined).expect("valid"))
                })
            })
            .collect(),
        FamilyId::Designated => ordinary_partitions(n)
            .into_iter()
            .flat_map(|p| {
                let mults = p.multiplicities();
                let choices: Vec<Vec<(u32, Designation)>> = mults
                    .iter()
                    .map(|&(d, m)| {
                        (1..=m as u32)
                            .map(|i| {
                                (
                                    d,
                                    Designation {
                                        multiplicity: m as u32,
                                        index: i,
                                    },
                                )
                            })
                            .collect()
                    })
                    .collect();
                cartesian(&choices).into_iter().map(|combo| {
                    let entries: BTreeMap<u32, Designation> = combo.into_iter().collect();
                    Element::Designated(DesignatedPartition::new(entries).expect("valid"))
                })
            })
            .collect(),
        FamilyId::TwoColor => (0..=n)
            .flat_map(|red_weight| {
                let reds = ordinary_partitions(red_weight);
                let blues = partitions_where(n - red_weight, &|d| d % 2 == 0, &|_| u32::MAX);
                reds.into_iter().flat_map(move |r| {
                    blues
                        .clone()
                        .into_iter()
                        .map(move |b| Element::TwoColor(TwoColorPartition::new(r.clone(), b)))
                })
            })
            .collect(),
        FamilyId::Vector(fs) => {
            let mut cache: HashMap<(usize, u32), Vec<Element>> = HashMap::new();
            let mut out = Vec::new();
            vector_rec(fs, 0, n, &mut Vec::new(), &mut cache, &mut out);
            out
        }
    }
}

fn vector_rec(
    fs: &[FamilyId],
    index: usize,
    remaining: u32,
    prefix: &mut Vec<Element>,
    cache: &mut HashMap<(usize, u32), Vec<Element>>,
    out: &mut Vec<Element>,
) {
    if index == fs.len() {
        if remaining == 0 {
            out.push(Element::Tuple(prefix.clone()));
        }
        return;
    }
    let weights: Vec<u32> = if index + 1 == fs.len() {
        vec![remaining]
    } else {
        (0..=remaining).collect()
    };
    for w in weights {
        let slice = cache
            .entry((index, w))
            .or_insert_with(|| enumerate_raw(&fs[index], w))
            .clone();
        for x in slice {
            prefix.push(x);
            vector_rec(fs, index + 1, remaining - w, prefix, cache, out);
            prefix.pop();
        }
    }
}

/// All elements of `family` with weight `n`, in lexicographic order of their
/// text forms. Refuses `n` above [`DEFAULT_CEILING`].
pub fn enumerate(family: &FamilyId, n: u32) -> Result<Vec<Element>> {
    enumerate_with_ceiling(family, n, DEFAULT_CEILING)
}

pub fn enumerate_with_ceiling(family: &FamilyId, n: u32, ceiling: u32) -> Result<Vec<Element>> {
    if n > ceiling {
        return Err(Error::CeilingExceeded { n, ceiling });
    }
    let mut keyed: Vec<(String, Element)> = enumerate_raw(family, n)
        .into_iter()
        .map(|x| (x.to_string(), x))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, x)| x).collect())
}

/// Number of elements of weight `n`; agrees with `enumerate(family, n).len()`.
pub fn count(family: &FamilyId, n: u32) -> Result<u64> {
    count_with_ceiling(family, n, DEFAULT_CEILING)
}

pub fn count_with_ceiling(family: &FamilyId, n: u32, ceiling: u32) -> Result<u64> {
    if n > ceiling {
        return Err(Error::CeilingExceeded { n, ceiling });
    }
    let mut memo = HashMap::new();
    Ok(count_memo(family, n, &mut memo))
}

fn count_memo(family: &FamilyId, n: u32, memo: &mut HashMap<(FamilyId, u32), u64>) -> u64 {
    if let Some(&c) = memo.get(&(family.clone(), n)) {
        return c;
    }
    let c = match family {
        FamilyId::Vector(fs) => {
            // Convolution of the component counts over compositions of n.
            let mut acc = vec![0u64; n as usize + 1];
            acc[0] = 1;
            for f in fs {
                let counts: Vec<u64> = (0..=n).map(|w| count_memo(f, w, memo)).collect();
                let mut next = vec![0u64; n as usize + 1];
                for (i, &a) in acc.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (j, &b) in counts.iter().enumerate().take(n as usize + 1 - i) {
                        next[i + j] += a * b;
                    }
                }
                acc = next;
            }
            acc[n as usize]
        }
        FamilyId::Designated => ordinary_partitions(n)
            .iter()
            .map(|p| {
                p.multiplicities()
                    .iter()
                    .map(|&(_, m)| m as u64)
                    .product::<u64>()
            })
            .sum(),
        FamilyId::Overpartition => ordinary_partitions(n)
            .iter()
            .map(|p| 1u64 << p.multiplicities().len())
            .sum(),
        _ => enumerate_raw(family, n).len() as u64,
    };
    memo.insert((family.clone(), n), c);
    c
}
