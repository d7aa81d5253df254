//! The family bijections into `V_{t,k}` tuples and their inverses.
//!
//! - [`phi`]: 2-core and doubled 2-quotient of an ordinary partition.
//! - [`delta`], [`psi`]: the designated-summand splittings; [`lambda_pd`]
//!   combines them with [`phi`].
//! - [`lambda_a`]: colour split followed by [`phi`].
//! - [`wright_m`]: modified Wright map on pairs of distinct-odd partitions;
//!   [`lambda_pod`] peels off even parts first.

use std::collections::BTreeMap;

use crate::error::{domain, Error, Result};
use crate::families::{
    DesignatedPartition, Designation, Element, FamilyId, OddStaircase, PodBipartition,
    TwoColorPartition,
};
use crate::orbits::{VSpec, VTuple};
use crate::partition::{FrobeniusSymbol, Partition};

/// `Φ(λ) = (λ_2c, 2λ_q^(1), 2λ_q^(2))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotientTriple {
    pub core: Partition,
    pub even_a: Partition,
    pub even_b: Partition,
}

impl CoreQuotientTriple {
    pub fn weight(&self) -> u64 {
        self.core.weight() + self.even_a.weight() + self.even_b.weight()
    }
}

/// Beta-numbers `λ_i + (len - 1 - i)` for `len >= ℓ(λ)` entries, descending.
fn beta_set(p: &Partition, len: usize) -> Vec<u32> {
    (0..len)
        .map(|i| p.parts().get(i).copied().unwrap_or(0) + (len - 1 - i) as u32)
        .collect()
}

/// Inverse of [`beta_set`]: positions (any order) back to a partition.
fn from_beta(mut beta: Vec<u32>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::new(
        beta.iter()
            .enumerate()
            .map(|(i, &b)| b - (len - 1 - i) as u32)
            .collect(),
    )
}

/// Bead positions on one runner of the 2-abacus, read as a partition.
fn runner_partition(beta: &[u32], runner: u32) -> (usize, Partition) {
    let positions: Vec<u32> = beta
        .iter()
        .filter(|&&b| b % 2 == runner)
        .map(|&b| b / 2)
        .collect();
    (positions.len(), from_beta(positions))
}

/// 2-core and doubled 2-quotient, read off a 2-runner abacus with an even
/// number of beads. Runner 0 gives `even_a`, runner 1 gives `even_b`.
pub fn phi(p: &Partition) -> CoreQuotientTriple {
    let len = p.len() + p.len() % 2;
    let beta = beta_set(p, len);
    let (c0, q0) = runner_partition(&beta, 0);
    let (c1, q1) = runner_partition(&beta, 1);
    let core_beta: Vec<u32> = (0..c0 as u32)
        .map(|k| 2 * k)
        .chain((0..c1 as u32).map(|k| 2 * k + 1))
        .collect();
    CoreQuotientTriple {
        core: from_beta(core_beta),
        even_a: q0.scale2(),
        even_b: q1.scale2(),
    }
}

pub fn phi_inv(t: &CoreQuotientTriple) -> Result<Partition> {
    if !t.core.is_staircase() {
        return Err(domain(
            "phi_inv",
            format!("core {} is not a staircase", t.core),
        ));
    }
    let q0 = t
        .even_a
        .divide(2)
        .ok_or_else(|| domain("phi_inv", format!("{} has an odd part", t.even_a)))?;
    let q1 = t
        .even_b
        .divide(2)
        .ok_or_else(|| domain("phi_inv", format!("{} has an odd part", t.even_b)))?;
    // Enough beads that each runner of the core holds at least as many beads
    // as the quotient placed on it has parts.
    let len = 2 * (t.core.len() + q0.len() + q1.len() + 1);
    let core_beta = beta_set(&t.core, len);
    let mut beta = Vec::with_capacity(len);
    for (runner, q) in [(0u32, &q0), (1u32, &q1)] {
        let count = core_beta.iter().filter(|&&b| b % 2 == runner).count();
        debug_assert!(count >= q.len());
        beta.extend((0..count).map(|j| {
            let part = q.parts().get(j).copied().unwrap_or(0);
            2 * (part + (count - 1 - j) as u32) + runner
        }));
    }
    Ok(from_beta(beta))
}

/// Splits a designated partition into `(α, β)`: magnitudes designated on their
/// first occurrence go wholly to `α`; otherwise `i_d` copies go to `β` and the
/// remaining `m_d - i_d` to `α`.
pub fn delta(d: &DesignatedPartition) -> (Partition, Partition) {
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for (&mag, e) in d.entries().iter().rev() {
        let (to_alpha, to_beta) = if e.index == 1 {
            (e.multiplicity, 0)
        } else {
            (e.multiplicity - e.index, e.index)
        };
        alpha.extend(std::iter::repeat_n(mag, to_alpha as usize));
        beta.extend(std::iter::repeat_n(mag, to_beta as usize));
    }
    (
        Partition::from_sorted_unchecked(alpha),
        Partition::from_sorted_unchecked(beta),
    )
}

pub fn delta_inv(alpha: &Partition, beta: &Partition) -> Result<DesignatedPartition> {
    let mut entries: BTreeMap<u32, Designation> = BTreeMap::new();
    for (d, m) in beta.multiplicities() {
        if m < 2 {
            return Err(domain(
                "delta_inv",
                format!("part {d} of β occurs only once"),
            ));
        }
        let m = m as u32;
        entries.insert(
            d,
            Designation {
                multiplicity: alpha.multiplicity(d) as u32 + m,
                index: m,
            },
        );
    }
    for (d, m) in alpha.multiplicities() {
        entries.entry(d).or_insert(Designation {
            multiplicity: m as u32,
            index: 1,
        });
    }
    DesignatedPartition::new(entries)
}

/// `Ψ(β)`: even multiplicity `m_d` gives `m_d/2` parts `2d`; odd gives one part
/// `3d` plus `(m_d-3)/2` parts `2d`.
pub fn psi(beta: &Partition) -> Result<(Partition, Partition)> {
    let mut even = Vec::new();
    let mut triples = Vec::new();
    for (d, m) in beta.multiplicities() {
        if m < 2 {
            return Err(domain("psi", format!("part {d} occurs only once")));
        }
        let pairs = if m % 2 == 0 {
            m / 2
        } else {
            triples.push(3 * d);
            (m - 3) / 2
        };
        even.extend(std::iter::repeat_n(2 * d, pairs));
    }
    Ok((Partition::new(even), Partition::new(triples)))
}

pub fn psi_inv(even: &Partition, triples: &Partition) -> Result<Partition> {
    let halves = even
        .divide(2)
        .ok_or_else(|| domain("psi_inv", format!("{even} has an odd part")))?;
    if !triples.has_distinct_parts() {
        return Err(domain("psi_inv", format!("{triples} repeats a part")));
    }
    let thirds = triples.divide(3).ok_or_else(|| {
        domain(
            "psi_inv",
            format!("{triples} has a part not divisible by 3"),
        )
    })?;
    let mut parts = Vec::new();
    for (d, pairs) in halves.multiplicities() {
        parts.extend(std::iter::repeat_n(d, 2 * pairs));
    }
    for &d in thirds.parts() {
        parts.extend([d, d, d]);
    }
    Ok(Partition::new(parts))
}

fn component_partition(v: &VTuple, i: usize) -> Result<&Partition> {
    v.components()[i]
        .as_partition()
        .ok_or_else(|| domain("inverse", format!("component {} is not a partition", i + 1)))
}

fn require_spec(v: &VTuple, spec: &VSpec, op: &'static str) -> Result<()> {
    if v.spec() != spec {
        return Err(domain(
            op,
            format!("tuple belongs to {}, expected {}", v.spec(), spec),
        ));
    }
    Ok(())
}

/// `Λ_pd(λ) = (λ^(1), ..., λ^(5))` with `Φ(α) = (λ^(4), λ^(1), λ^(2))` and
/// `Ψ(β) = (λ^(3), λ^(5))`.
pub fn lambda_pd(d: &DesignatedPartition) -> VTuple {
    let (alpha, beta) = delta(d);
    let triple = phi(&alpha);
    let (even, triples) = psi(&beta).expect("β from Δ has every multiplicity >= 2");
    VTuple::from_parts_unchecked(
        VSpec::pd(),
        vec![
            Element::Partition(triple.even_a),
            Element::Partition(triple.even_b),
            Element::Partition(even),
            Element::Partition(triple.core),
            Element::Partition(triples),
        ],
    )
}

pub fn lambda_pd_inv(v: &VTuple) -> Result<DesignatedPartition> {
    require_spec(v, &VSpec::pd(), "lambda_pd_inv")?;
    let c = |i| component_partition(v, i);
    let alpha = phi_inv(&CoreQuotientTriple {
        core: c(3)?.clone(),
        even_a: c(0)?.clone(),
        even_b: c(1)?.clone(),
    })?;
    let beta = psi_inv(c(2)?, c(4)?)?;
    delta_inv(&alpha, &beta)
}

/// `Λ_a`: red parts go through `Φ`, blue parts become `λ^(3)`.
pub fn lambda_a(c: &TwoColorPartition) -> Result<VTuple> {
    if !c.blue.all_divisible_by(2) {
        return Err(domain(
            "lambda_a",
            format!("blue parts {} are not all even", c.blue),
        ));
    }
    let triple = phi(&c.red);
    Ok(VTuple::from_parts_unchecked(
        VSpec::a(),
        vec![
            Element::Partition(triple.even_a),
            Element::Partition(triple.even_b),
            Element::Partition(c.blue.clone()),
            Element::Partition(triple.core),
        ],
    ))
}

pub fn lambda_a_inv(v: &VTuple) -> Result<TwoColorPartition> {
    require_spec(v, &VSpec::a(), "lambda_a_inv")?;
    let c = |i| component_partition(v, i);
    let red = phi_inv(&CoreQuotientTriple {
        core: c(3)?.clone(),
        even_a: c(0)?.clone(),
        even_b: c(1)?.clone(),
    })?;
    let blue = c(2)?.clone();
    if !blue.all_divisible_by(2) {
        return Err(domain("lambda_a_inv", format!("{blue} has an odd part")));
    }
    Ok(TwoColorPartition::new(red, blue))
}

/// Output of the modified Wright map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WrightDecomposition {
    pub pi: Partition,
    pub triangle: OddStaircase,
    /// `ℓ(μ^(1)) - ℓ(μ^(2))`.
    pub m: i64,
}

/// Halved parts `(d - 1) / 2` of a partition into distinct odd parts.
fn odd_halves(mu: &Partition, op: &'static str) -> Result<Vec<u32>> {
    if mu.parts().iter().any(|&d| d % 2 == 0) {
        return Err(domain(op, format!("{mu} has an even part")));
    }
    if !mu.has_distinct_parts() {
        return Err(domain(op, format!("{mu} repeats a part")));
    }
    Ok(mu.parts().iter().map(|&d| (d - 1) / 2).collect())
}

/// Core of the `m >= 0` branch: `long` has `l + m` entries, `short` has `l`.
/// Returns `μ ∪ ν` where `μ` has Frobenius rows `(long[m..] ; short)` and
/// `ν_j = long_j - m + j` (zero entries dropped).
fn wright_merge(long: &[u32], short: &[u32]) -> Partition {
    let m = long.len() - short.len();
    let mu = FrobeniusSymbol::new(long[m..].to_vec(), short.to_vec())
        .expect("rows of distinct halves are strictly decreasing")
        .to_partition();
    let nu = Partition::new(
        (0..m)
            .map(|j| long[j] + (j + 1) as u32 - m as u32)
            .collect(),
    );
    mu.union(&nu)
}

/// Inverse of [`wright_merge`]: the `m` largest parts (zero padded) are `ν`,
/// the rest is `μ`.
fn wright_split(rho: &Partition, m: usize) -> (Vec<u32>, Vec<u32>) {
    let parts = rho.parts();
    let nu: Vec<u32> = (0..m).map(|j| parts.get(j).copied().unwrap_or(0)).collect();
    let mu = Partition::from_sorted_unchecked(parts.iter().skip(m).copied().collect());
    let f = mu.to_frobenius();
    let mut long: Vec<u32> = (0..m).map(|j| nu[j] + m as u32 - (j + 1) as u32).collect();
    long.extend_from_slice(f.top());
    (long, f.bottom().to_vec())
}

/// Modified Wright map `φ_m(μ^(1), μ^(2)) = (π, △)`.
pub fn wright_m(mu1: &Partition, mu2: &Partition) -> Result<WrightDecomposition> {
    let a = odd_halves(mu1, "wright_m")?;
    let b = odd_halves(mu2, "wright_m")?;
    let m = a.len() as i64 - b.len() as i64;
    Ok(if m >= 0 {
        WrightDecomposition {
            pi: wright_merge(&a, &b).scale2(),
            triangle: OddStaircase::new(m as u32, false)?,
            m,
        }
    } else {
        WrightDecomposition {
            pi: wright_merge(&b, &a).conjugate().scale2(),
            triangle: OddStaircase::new((-m) as u32, true)?,
            m,
        }
    })
}

/// Inverse of [`wright_m`], dispatching on the overline of `△`.
pub fn wright_m_inv(pi: &Partition, triangle: &OddStaircase) -> Result<(Partition, Partition)> {
    let half = pi
        .divide(2)
        .ok_or_else(|| domain("wright_m_inv", format!("{pi} has an odd part")))?;
    let m = triangle.m() as usize;
    let odd = |halves: &[u32]| Partition::new(halves.iter().map(|&h| 2 * h + 1).collect());
    if triangle.one_overlined() {
        let (long, short) = wright_split(&half.conjugate(), m);
        Ok((odd(&short), odd(&long)))
    } else {
        let (long, short) = wright_split(&half, m);
        Ok((odd(&long), odd(&short)))
    }
}

/// `Λ_pod`: even parts of each component become `λ^(1)`, `λ^(2)`; the distinct
/// odd remainders go through [`wright_m`] to give `(λ^(3), λ^(4))`.
pub fn lambda_pod(b: &PodBipartition) -> Result<VTuple> {
    let evens1 = b.first.filter(|d| d % 2 == 0);
    let evens2 = b.second.filter(|d| d % 2 == 0);
    let w = wright_m(
        &b.first.filter(|d| d % 2 == 1),
        &b.second.filter(|d| d % 2 == 1),
    )?;
    Ok(VTuple::from_parts_unchecked(
        VSpec::pod(),
        vec![
            Element::Partition(evens1),
            Element::Partition(evens2),
            Element::Partition(w.pi),
            Element::OddStair(w.triangle),
        ],
    ))
}

pub fn lambda_pod_inv(v: &VTuple) -> Result<PodBipartition> {
    require_spec(v, &VSpec::pod(), "lambda_pod_inv")?;
    let c = |i| component_partition(v, i);
    let triangle = match &v.components()[3] {
        Element::OddStair(s) => s,
        other => {
            return Err(domain(
                "lambda_pod_inv",
                format!("component 4 `{other}` is not an odd staircase"),
            ))
        }
    };
    for i in 0..2 {
        if !c(i)?.all_divisible_by(2) {
            return Err(domain(
                "lambda_pod_inv",
                format!("component {} has an odd part", i + 1),
            ));
        }
    }
    let (mu1, mu2) = wright_m_inv(c(2)?, triangle)?;
    PodBipartition::new(c(0)?.union(&mu1), c(1)?.union(&mu2))
}

/// One of the three family bijections, addressed uniformly over [`Element`]s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pipeline {
    /// `Λ_pd` on partitions with designated summands.
    Pd,
    /// `Λ_a` on two-colour partitions.
    A,
    /// `Λ_pod` on bipartitions with distinct odd parts.
    Pod,
}

impl Pipeline {
    pub const ALL: [Pipeline; 3] = [Pipeline::Pd, Pipeline::A, Pipeline::Pod];

    pub fn name(self) -> &'static str {
        match self {
            Pipeline::Pd => "pd",
            Pipeline::A => "a",
            Pipeline::Pod => "pod2",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name.trim() {
            "pd" => Ok(Pipeline::Pd),
            "a" => Ok(Pipeline::A),
            "pod2" => Ok(Pipeline::Pod),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    pub fn domain(self) -> FamilyId {
        match self {
            Pipeline::Pd => FamilyId::Designated,
            Pipeline::A => FamilyId::TwoColor,
            Pipeline::Pod => FamilyId::pod2(),
        }
    }

    pub fn spec(self) -> VSpec {
        match self {
            Pipeline::Pd => VSpec::pd(),
            Pipeline::A => VSpec::a(),
            Pipeline::Pod => VSpec::pod(),
        }
    }

    pub fn forward(self, x: &Element) -> Result<VTuple> {
        let mismatch = || Error::ShapeMismatch {
            family: self.domain().to_string(),
            found: x.kind(),
        };
        match (self, x) {
            (Pipeline::Pd, Element::Designated(d)) => Ok(lambda_pd(d)),
            (Pipeline::A, Element::TwoColor(c)) => lambda_a(c),
            (Pipeline::Pod, Element::Tuple(cs)) => match cs.as_slice() {
                [Element::Partition(p), Element::Partition(q)] => {
                    lambda_pod(&PodBipartition::new(p.clone(), q.clone())?)
                }
                _ => Err(mismatch()),
            },
            _ => Err(mismatch()),
        }
    }

    pub fn inverse(self, v: &VTuple) -> Result<Element> {
        Ok(match self {
            Pipeline::Pd => Element::Designated(lambda_pd_inv(v)?),
            Pipeline::A => Element::TwoColor(lambda_a_inv(v)?),
            Pipeline::Pod => lambda_pod_inv(v)?.into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_sorted(parts.to_vec()).unwrap()
    }

    #[test]
    fn phi_anchor() {
        let t = phi(&p(&[4, 4, 2, 2, 1]));
        assert_eq!(t.core, p(&[1]));
        assert_eq!(t.even_a, p(&[2]));
        assert_eq!(t.even_b, p(&[6, 4]));
        assert_eq!(phi_inv(&t).unwrap(), p(&[4, 4, 2, 2, 1]));
    }

    #[test]
    fn phi_small_cases() {
        let e = phi(&Partition::empty());
        assert!(e.core.is_empty() && e.even_a.is_empty() && e.even_b.is_empty());
        let one = phi(&p(&[1]));
        assert_eq!(
            (one.core, one.even_a.is_empty(), one.even_b.is_empty()),
            (p(&[1]), true, true)
        );
        // Hand-run abacus for (2): beads {3, 0}; runner 1 holds one bead at level 1.
        let two = phi(&p(&[2]));
        assert!(two.core.is_empty() && two.even_a.is_empty());
        assert_eq!(two.even_b, p(&[2]));
        assert_eq!(phi_inv(&two).unwrap(), p(&[2]));
    }

    #[test]
    fn phi_inv_rejects_bad_input() {
        let bad_core = CoreQuotientTriple {
            core: p(&[2]),
            even_a: p(&[]),
            even_b: p(&[]),
        };
        assert!(phi_inv(&bad_core).is_err());
        let odd = CoreQuotientTriple {
            core: p(&[1]),
            even_a: p(&[3]),
            even_b: p(&[]),
        };
        assert!(phi_inv(&odd).is_err());
    }

    #[test]
    fn delta_and_psi_anchor() {
        let d: DesignatedPartition = "20+20+20'+4+4'+4+4+2'+2+1+1+1+1+1+1+1'+1".parse().unwrap();
        let (alpha, beta) = delta(&d);
        assert_eq!(alpha, p(&[4, 4, 2, 2, 1]));
        assert_eq!(beta, p(&[20, 20, 20, 4, 4, 1, 1, 1, 1, 1, 1, 1]));
        let (even, triples) = psi(&beta).unwrap();
        assert_eq!(even, p(&[8, 2, 2]));
        assert_eq!(triples, p(&[60, 3]));
        assert_eq!(psi_inv(&even, &triples).unwrap(), beta);
        assert_eq!(delta_inv(&alpha, &beta).unwrap(), d);
    }

    #[test]
    fn delta_small_cases() {
        let d: DesignatedPartition = "1+1'+1".parse().unwrap();
        assert_eq!(delta(&d), (p(&[1]), p(&[1, 1])));
        let firsts: DesignatedPartition = "3'+3+1'".parse().unwrap();
        assert_eq!(delta(&firsts), (p(&[3, 3, 1]), Partition::empty()));
        // Last occurrence designated: everything goes to β.
        let last: DesignatedPartition = "2+2'".parse().unwrap();
        assert_eq!(delta(&last), (Partition::empty(), p(&[2, 2])));
        assert!(delta_inv(&Partition::empty(), &p(&[2])).is_err());
    }

    #[test]
    fn psi_small_cases() {
        assert_eq!(
            psi(&Partition::empty()).unwrap(),
            (Partition::empty(), Partition::empty())
        );
        assert_eq!(psi(&p(&[1, 1])).unwrap(), (p(&[2]), Partition::empty()));
        assert!(psi(&p(&[2, 1, 1])).is_err());
        assert!(psi_inv(&p(&[3]), &Partition::empty()).is_err());
        assert!(psi_inv(&Partition::empty(), &p(&[3, 3])).is_err());
        assert!(psi_inv(&Partition::empty(), &p(&[4])).is_err());
    }

    #[test]
    fn lambda_pd_anchors() {
        let d: DesignatedPartition = "20+20+20'+4+4'+4+4+2'+2+1+1+1+1+1+1+1'+1".parse().unwrap();
        assert_eq!(lambda_pd(&d).to_string(), "(2;6+4;8+2+2;1;60+3)");
        let five: DesignatedPartition = "5'".parse().unwrap();
        assert_eq!(lambda_pd(&five).to_string(), "(4;0;0;1;0)");
        let row: DesignatedPartition = "2'+1+1+1'".parse().unwrap();
        assert_eq!(lambda_pd(&row).to_string(), "(0;2;0;0;3)");
        assert_eq!(
            lambda_pd(&DesignatedPartition::default()).to_string(),
            "(0;0;0;0;0)"
        );
        let v = lambda_pd(&d);
        assert_eq!(lambda_pd_inv(&v).unwrap(), d);
    }

    #[test]
    fn lambda_a_anchors() {
        let c: TwoColorPartition = "5r".parse().unwrap();
        assert_eq!(lambda_a(&c).unwrap().to_string(), "(4;0;0;1)");
        let c: TwoColorPartition = "3r+2b".parse().unwrap();
        let v = lambda_a(&c).unwrap();
        assert_eq!(v.to_string(), "(2;0;2;1)");
        assert_eq!(lambda_a_inv(&v).unwrap(), c);
        assert_eq!(
            lambda_a(&TwoColorPartition::default()).unwrap().to_string(),
            "(0;0;0;0)"
        );
        assert!(lambda_a(&"3b".parse().unwrap()).is_err());
    }

    #[test]
    fn wright_anchor() {
        let w = wright_m(&p(&[9, 7, 3]), &p(&[17, 15, 11, 7, 3, 1])).unwrap();
        assert_eq!(w.pi, p(&[16, 16, 14, 8, 6, 4]));
        assert_eq!(w.triangle, OddStaircase::new(3, true).unwrap());
        assert_eq!(w.m, -3);
        assert_eq!(
            wright_m_inv(&w.pi, &w.triangle).unwrap(),
            (p(&[9, 7, 3]), p(&[17, 15, 11, 7, 3, 1]))
        );
    }

    #[test]
    fn wright_small_cases() {
        let e = wright_m(&Partition::empty(), &Partition::empty()).unwrap();
        assert_eq!(
            (e.pi, e.triangle, e.m),
            (Partition::empty(), OddStaircase::empty(), 0)
        );
        let one = wright_m(&p(&[1]), &Partition::empty()).unwrap();
        assert_eq!(
            (one.pi, one.triangle),
            (Partition::empty(), OddStaircase::new(1, false).unwrap())
        );
        assert!(wright_m(&p(&[3, 3]), &Partition::empty()).is_err());
        assert!(wright_m(&p(&[4]), &Partition::empty()).is_err());
        assert!(wright_m_inv(&p(&[3]), &OddStaircase::empty()).is_err());
    }

    #[test]
    fn lambda_pod_anchors() {
        let cases = [
            ((&[5][..], &[][..]), "(0;0;4;1)"),
            ((&[][..], &[5][..]), "(0;0;2+2;1~)"),
            ((&[2, 1][..], &[2][..]), "(2;2;0;1)"),
            ((&[][..], &[][..]), "(0;0;0;0)"),
        ];
        for ((a, b), expected) in cases {
            let bp = PodBipartition::new(p(a), p(b)).unwrap();
            let v = lambda_pod(&bp).unwrap();
            assert_eq!(v.to_string(), expected);
            assert_eq!(lambda_pod_inv(&v).unwrap(), bp);
        }
    }

    #[test]
    fn inverses_reject_foreign_specs() {
        let v = lambda_a(&"5r".parse().unwrap()).unwrap();
        assert!(lambda_pd_inv(&v).is_err());
        assert!(lambda_pod_inv(&v).is_err());
    }
}
