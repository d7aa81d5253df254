//! `V_{t,k}` tuples, the V_R-rank, the orbit operator Ô, and orbit
//! decompositions of weight-`(3n+2)` family slices.
//!
//! For a tuple whose first three components carry a total weight `≢ 0 (mod 3)`,
//! either the `≡ 1` parts or the `≡ -1` parts of those components have a count
//! `≢ 0 (mod 3)`. Ô cycles the parts of that residue class through the first
//! three components and leaves everything else fixed; the three tuples on an
//! orbit then carry pairwise distinct ranks mod 3.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde_json::{json, Value};

use crate::bijections::Pipeline;
use crate::error::{domain, Error, Result};
use crate::families::{self, Element, FamilyId};
use crate::partition::{Partition, Residue};

/// Declared component families of a `V_{t,k}`.
#[derive(Clone, Debug, Eq)]
pub struct VSpec {
    t: u32,
    families: Arc<[FamilyId]>,
}

impl PartialEq for VSpec {
    fn eq(&self, other: &Self) -> bool {
        self.t == other.t
            && (Arc::ptr_eq(&self.families, &other.families) || self.families == other.families)
    }
}

fn cached(cell: &'static OnceLock<VSpec>, family: fn() -> FamilyId) -> VSpec {
    cell.get_or_init(|| match family() {
        FamilyId::Vector(fs) => VSpec::new(2, fs).expect("codomain specs are valid"),
        _ => unreachable!(),
    })
    .clone()
}

impl VSpec {
    /// Requires `k >= 3` and the first three components to be `P_{t_{0}}`.
    pub fn new(t: u32, families: Vec<FamilyId>) -> Result<Self> {
        if t == 0 {
            return Err(domain("VSpec", "t must be positive"));
        }
        if families.len() < 3 {
            return Err(domain("VSpec", format!("k = {} < 3", families.len())));
        }
        let lead = FamilyId::multiples_of(t);
        if families[..3].iter().any(|f| *f != lead) {
            return Err(domain("VSpec", format!("components 1-3 must be {lead}")));
        }
        Ok(Self {
            t,
            families: families.into(),
        })
    }

    /// `V_{2,5} = (P_2, P_2, P_2, S, D_3)`.
    pub fn pd() -> Self {
        static CELL: OnceLock<VSpec> = OnceLock::new();
        cached(&CELL, FamilyId::pd_codomain)
    }

    /// `V_{2,4} = (P_2, P_2, P_2, S)`.
    pub fn a() -> Self {
        static CELL: OnceLock<VSpec> = OnceLock::new();
        cached(&CELL, FamilyId::a_codomain)
    }

    /// `V_{2,4} = (P_2, P_2, P_2, S_{t-odd})`.
    pub fn pod() -> Self {
        static CELL: OnceLock<VSpec> = OnceLock::new();
        cached(&CELL, FamilyId::pod_codomain)
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn k(&self) -> usize {
        self.families.len()
    }

    pub fn families(&self) -> &[FamilyId] {
        &self.families
    }

    /// The spec as a vector family, for enumeration.
    pub fn family(&self) -> FamilyId {
        FamilyId::Vector(self.families.to_vec())
    }
}

impl fmt::Display for VSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V[t={}]{}", self.t, self.family())
    }
}

/// An element of a `V_{t,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VTuple {
    spec: VSpec,
    components: Vec<Element>,
}

impl VTuple {
    pub fn new(spec: VSpec, components: Vec<Element>) -> Result<Self> {
        let family = spec.family();
        let as_tuple = Element::Tuple(components);
        if !family.is_member(&as_tuple)? {
            return Err(Error::NotMember {
                family: spec.to_string(),
                element: as_tuple.to_string(),
            });
        }
        let Element::Tuple(components) = as_tuple else {
            unreachable!()
        };
        Ok(Self { spec, components })
    }

    pub(crate) fn from_parts_unchecked(spec: VSpec, components: Vec<Element>) -> Self {
        debug_assert_eq!(
            spec.family()
                .is_member(&Element::Tuple(components.clone()))
                .ok(),
            Some(true)
        );
        Self { spec, components }
    }

    /// Parses `(c1;c2;...;ck)` against the spec's component families.
    pub fn parse(spec: VSpec, text: &str) -> Result<Self> {
        match spec.family().parse_element(text)? {
            Element::Tuple(cs) => Self::new(spec, cs),
            _ => unreachable!("vector families parse to tuples"),
        }
    }

    pub fn spec(&self) -> &VSpec {
        &self.spec
    }

    pub fn components(&self) -> &[Element] {
        &self.components
    }

    pub fn weight(&self) -> u64 {
        self.components.iter().map(Element::weight).sum()
    }

    fn lead(&self, i: usize) -> &Partition {
        self.components[i]
            .as_partition()
            .expect("components 1-3 are partitions")
    }

    pub fn to_element(&self) -> Element {
        Element::Tuple(self.components.clone())
    }
}

impl fmt::Display for VTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_element().fmt(f)
    }
}

/// `r_V = ℓ(λ^(1)) - ℓ(λ^(2))`.
pub fn v_rank(v: &VTuple) -> i64 {
    v.lead(0).len() as i64 - v.lead(1).len() as i64
}

/// Which residue class Ô acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// `Σ ℓ_1 ≢ 0 (mod 3)`: cycle the `≡ 1` parts.
    One,
    /// `Σ ℓ_1 ≡ 0`, `Σ ℓ_{-1} ≢ 0 (mod 3)`: cycle the `≡ -1` parts.
    Two,
    NotApplicable,
}

impl Case {
    pub fn residue(self) -> Option<Residue> {
        match self {
            Case::One => Some(Residue::Plus),
            Case::Two => Some(Residue::Minus),
            Case::NotApplicable => None,
        }
    }
}

fn residue_total(v: &VTuple, r: Residue) -> usize {
    (0..3).map(|i| v.lead(i).count_residue3(r)).sum()
}

pub fn classify_case(v: &VTuple) -> Case {
    if !residue_total(v, Residue::Plus).is_multiple_of(3) {
        Case::One
    } else if !residue_total(v, Residue::Minus).is_multiple_of(3) {
        Case::Two
    } else {
        Case::NotApplicable
    }
}

/// Ô: the residue-`i` parts of components 1-3 move cyclically,
/// `(s1, s2, s3) -> (s3, s1, s2)`; all other parts stay put.
pub fn o_hat(v: &VTuple) -> Result<VTuple> {
    let residue = classify_case(v).residue().ok_or_else(|| {
        Error::Precondition(format!(
            "Ô is undefined on {v}: neither residue count is ≢ 0 mod 3"
        ))
    })?;
    let splits: Vec<_> = (0..3)
        .map(|i| v.lead(i).split_by_residue3(residue))
        .collect();
    let mut components = v.components.clone();
    for (i, slot) in components.iter_mut().take(3).enumerate() {
        let incoming = &splits[(i + 2) % 3].selected;
        *slot = Element::Partition(splits[i].complement.union(incoming));
    }
    Ok(VTuple {
        spec: v.spec.clone(),
        components,
    })
}

/// Rotation `O`: `(λ1, λ2, λ3, rest) -> (λ3, λ1, λ2, rest)`.
pub fn rotate_o(v: &VTuple) -> VTuple {
    let mut components = v.components.clone();
    components[..3].rotate_right(1);
    VTuple {
        spec: v.spec.clone(),
        components,
    }
}

/// Whether `Σ_{i>=4} |λ^(i)| ≢ j (mod 3)` for every tuple whose tail
/// components have weights `<= bound`.
pub fn check_tail_condition(spec: &VSpec, j: u32, bound: u32) -> Result<bool> {
    let mut reachable: BTreeSet<u32> = [0].into();
    for f in &spec.families()[3..] {
        let mut residues = BTreeSet::new();
        for w in 0..=bound {
            if families::count_with_ceiling(f, w, bound)? > 0 {
                residues.insert(w % 3);
            }
        }
        reachable = reachable
            .iter()
            .flat_map(|a| residues.iter().map(move |b| (a + b) % 3))
            .collect();
    }
    Ok(!reachable.contains(&(j % 3)))
}

/// Bound used when checking the tail-weight condition before building orbits.
const CONDITION_BOUND: u32 = 30;

/// A family element with its tuple image and rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitMember {
    pub element: Element,
    pub tuple: VTuple,
    pub rank: i64,
}

impl OrbitMember {
    pub fn rank_residue(&self) -> u32 {
        self.rank.rem_euclid(3) as u32
    }
}

/// Three members related by Ô, sorted by rank residue `0, 1, 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub members: [OrbitMember; 3],
}

impl Orbit {
    pub fn rank_residues(&self) -> [u32; 3] {
        [0, 1, 2].map(|i| self.members[i].rank_residue())
    }
}

/// Orbits of one family slice, ordered by their smallest member's text form
/// and labelled `O1, O2, ...` in that order.
#[derive(Clone, Debug)]
pub struct OrbitDecomposition {
    pub pipeline: Pipeline,
    pub n: u32,
    pub orbits: Vec<Orbit>,
}

/// Organizes the weight-`n` slice of the pipeline's family (n ≡ 2 mod 3) into
/// Ô-orbits pulled back through the pipeline's bijection.
pub fn build_orbits(pipeline: Pipeline, n: u32) -> Result<OrbitDecomposition> {
    build_orbits_with_ceiling(pipeline, n, families::DEFAULT_CEILING)
}

pub fn build_orbits_with_ceiling(
    pipeline: Pipeline,
    n: u32,
    ceiling: u32,
) -> Result<OrbitDecomposition> {
    if n % 3 != 2 {
        return Err(Error::Precondition(format!("n = {n} is not ≡ 2 (mod 3)")));
    }
    let spec = pipeline.spec();
    if !check_tail_condition(&spec, n % 3, CONDITION_BOUND)? {
        return Err(Error::Precondition(format!(
            "tail weights of {spec} can be ≡ {} (mod 3)",
            n % 3
        )));
    }
    let slice = families::enumerate_with_ceiling(&pipeline.domain(), n, ceiling)?;
    let index: HashMap<String, usize> = slice
        .iter()
        .enumerate()
        .map(|(i, x)| (x.to_string(), i))
        .collect();
    let mut visited = vec![false; slice.len()];
    let mut orbits = Vec::with_capacity(slice.len() / 3);
    for seed in 0..slice.len() {
        if visited[seed] {
            continue;
        }
        let t0 = pipeline.forward(&slice[seed])?;
        let t1 = o_hat(&t0)?;
        let t2 = o_hat(&t1)?;
        if o_hat(&t2)? != t0 {
            return Err(Error::Verification(format!("Ô³ ≠ id on {t0}")));
        }
        let mut members = Vec::with_capacity(3);
        for tuple in [t0, t1, t2] {
            let element = pipeline.inverse(&tuple)?;
            let text = element.to_string();
            let &i = index.get(&text).ok_or_else(|| {
                Error::Verification(format!(
                    "{text} pulled back from {tuple} is outside the slice"
                ))
            })?;
            if visited[i] {
                return Err(Error::Verification(format!("{text} lies on two orbits")));
            }
            visited[i] = true;
            let rank = v_rank(&tuple);
            members.push(OrbitMember {
                element,
                tuple,
                rank,
            });
        }
        members.sort_by_key(OrbitMember::rank_residue);
        let residues: Vec<u32> = members.iter().map(OrbitMember::rank_residue).collect();
        if residues != [0, 1, 2] {
            return Err(Error::Verification(format!(
                "orbit of {} has rank residues {residues:?}",
                members[0].element
            )));
        }
        let members: [OrbitMember; 3] = members.try_into().expect("three members");
        orbits.push(Orbit { members });
    }
    Ok(OrbitDecomposition {
        pipeline,
        n,
        orbits,
    })
}

/// Orbits of the rotation `O` on the tuple images of a slice. Every orbit has
/// three distinct tuples; a fixed point is reported as a verification failure.
pub fn build_rotation_orbits(pipeline: Pipeline, n: u32) -> Result<Vec<[Element; 3]>> {
    if n % 3 != 2 {
        return Err(Error::Precondition(format!("n = {n} is not ≡ 2 (mod 3)")));
    }
    let slice = families::enumerate(&pipeline.domain(), n)?;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for x in &slice {
        if seen.contains(&x.to_string()) {
            continue;
        }
        let v0 = pipeline.forward(x)?;
        let v1 = rotate_o(&v0);
        let v2 = rotate_o(&v1);
        if v1 == v0 {
            return Err(Error::Verification(format!("{v0} is fixed by O")));
        }
        let orbit = [v0, v1, v2].map(|v| pipeline.inverse(&v));
        let orbit = [orbit[0].clone()?, orbit[1].clone()?, orbit[2].clone()?];
        for m in &orbit {
            seen.insert(m.to_string());
        }
        out.push(orbit);
    }
    Ok(out)
}

impl OrbitDecomposition {
    pub fn element_count(&self) -> usize {
        3 * self.orbits.len()
    }

    /// `{family, n, orbits: [[[element, tuple, rank], ...], ...]}`.
    pub fn to_json(&self) -> Value {
        let orbits: Vec<Value> = self
            .orbits
            .iter()
            .map(|o| {
                Value::Array(
                    o.members
                        .iter()
                        .map(|m| json!([m.element.to_string(), m.tuple.to_string(), m.rank]))
                        .collect(),
                )
            })
            .collect();
        json!({
            "family": self.pipeline.name(),
            "n": self.n,
            "orbits": orbits,
        })
    }

    /// Table with columns `element | tuple | r_V | orbit`, one row per element
    /// in enumeration order.
    pub fn to_markdown(&self) -> String {
        let mut rows: Vec<(String, String, i64, usize)> = self
            .orbits
            .iter()
            .enumerate()
            .flat_map(|(k, o)| {
                o.members
                    .iter()
                    .map(move |m| (m.element.to_string(), m.tuple.to_string(), m.rank, k + 1))
            })
            .collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out = String::from("| element | tuple | r_V | orbit |\n|---|---|---:|---|\n");
        for (element, tuple, rank, label) in rows {
            out.push_str(&format!("| {element} | {tuple} | {rank} | O{label} |\n"));
        }
        out
    }
}
