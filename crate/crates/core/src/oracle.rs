//! Truncated power series over big integers, product and theta builders for
//! the family generating functions, and the mod 3 congruence scanner.

use std::fmt::Write as _;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{self, FamilyId};

/// Default truncation for family series.
pub const DEFAULT_TRUNCATION: usize = 1000;

/// `Σ_{n<=N} c_n q^n`, exact to `O(q^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coefficients: Vec<BigInt>,
}

impl PowerSeries {
    pub fn zero(truncation: usize) -> Self {
        Self {
            coefficients: vec![BigInt::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coefficients[0] = BigInt::one();
        s
    }

    pub fn from_coefficients(coefficients: Vec<BigInt>) -> Self {
        assert!(
            !coefficients.is_empty(),
            "a series has at least the constant term"
        );
        Self { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::from_coefficients(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn truncation(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `q^n`; panics beyond the truncation.
    pub fn coefficient(&self, n: usize) -> &BigInt {
        assert!(
            n <= self.truncation(),
            "coefficient {n} is beyond truncation {}",
            self.truncation()
        );
        &self.coefficients[n]
    }

    pub fn truncate(&self, truncation: usize) -> Self {
        Self {
            coefficients: self.coefficients[..=truncation.min(self.truncation())].to_vec(),
        }
    }

    /// Cauchy product truncated at the smaller truncation.
    pub fn mul_series(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coefficients.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coefficients: out }
    }

    /// Multiplies in place by `(1 + sign·q^d)`.
    fn mul_binomial(&mut self, d: usize, sign: i8) {
        for i in (d..self.coefficients.len()).rev() {
            let lower = self.coefficients[i - d].clone();
            if sign > 0 {
                self.coefficients[i] += lower;
            } else {
                self.coefficients[i] -= lower;
            }
        }
    }

    /// Divides in place by `(1 + sign·q^d)`.
    fn div_binomial(&mut self, d: usize, sign: i8) {
        for i in d..self.coefficients.len() {
            let lower = self.coefficients[i - d].clone();
            if sign > 0 {
                self.coefficients[i] -= lower;
            } else {
                self.coefficients[i] += lower;
            }
        }
    }

    /// `n,coefficient` lines for `n = 0..=truncation`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (n, c) in self.coefficients.iter().enumerate() {
            writeln!(out, "{n},{c}").expect("writing to a String");
        }
        out
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        self.mul_series(rhs)
    }
}

/// `(q^a; q^b)_∞ = Π_{k>=0} (1 - q^{a+bk})` when `negated` is false,
/// `(-q^a; q^b)_∞ = Π (1 + q^{a+bk})` when true, raised to `exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub a: usize,
    pub b: usize,
    pub exponent: i32,
    pub negated: bool,
}

impl Factor {
    pub fn new(a: usize, b: usize, exponent: i32, negated: bool) -> Self {
        assert!(a > 0 && b > 0, "product parameters must be positive");
        Self {
            a,
            b,
            exponent,
            negated,
        }
    }

    /// `(q^a; q^b)_∞^exponent`.
    pub fn poch(a: usize, b: usize, exponent: i32) -> Self {
        Self::new(a, b, exponent, false)
    }

    /// `(-q^a; q^b)_∞^exponent`.
    pub fn neg_poch(a: usize, b: usize, exponent: i32) -> Self {
        Self::new(a, b, exponent, true)
    }
}

/// Theta-type series generated by direct index iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theta {
    /// `Σ_{n>=0} q^{n(n+1)/2}`.
    Staircase,
    /// `Σ_{n∈Z} q^{n²} = 1 + 2 Σ_{n>=1} q^{n²}`.
    OddStaircase,
}

/// A product of Pochhammer factors and theta series.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductSpec {
    pub factors: Vec<Factor>,
    pub thetas: Vec<Theta>,
}

impl ProductSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn factor(mut self, f: Factor) -> Self {
        self.factors.push(f);
        self
    }

    pub fn theta(mut self, t: Theta) -> Self {
        self.thetas.push(t);
        self
    }
}

pub fn theta_series(theta: Theta, truncation: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(truncation);
    match theta {
        Theta::Staircase => {
            let mut n = 0usize;
            while n * (n + 1) / 2 <= truncation {
                s.coefficients[n * (n + 1) / 2] += 1;
                n += 1;
            }
        }
        Theta::OddStaircase => {
            s.coefficients[0] = BigInt::one();
            let mut n = 1usize;
            while n * n <= truncation {
                s.coefficients[n * n] += 2;
                n += 1;
            }
        }
    }
    s
}

/// Exact coefficients of the product up to `q^truncation`.
pub fn build_series(spec: &ProductSpec, truncation: usize) -> PowerSeries {
    let mut s = PowerSeries::one(truncation);
    for f in &spec.factors {
        let sign: i8 = if f.negated { 1 } else { -1 };
        let mut d = f.a;
        while d <= truncation {
            for _ in 0..f.exponent.unsigned_abs() {
                if f.exponent > 0 {
                    s.mul_binomial(d, sign);
                } else {
                    s.div_binomial(d, sign);
                }
            }
            d += f.b;
        }
    }
    for &t in &spec.thetas {
        s = s.mul_series(&theta_series(t, truncation));
    }
    s
}

/// Product form of a family's generating function. The three bijection
/// families use the product of their codomain component series.
pub fn family_product(f: &FamilyId) -> Result<Vec<ProductSpec>> {
    let even_cubed = Factor::poch(2, 2, -3);
    Ok(vec![match f {
        FamilyId::Parts { t, residues } => residues.iter().fold(ProductSpec::new(), |acc, &s| {
            let a = if s == 0 { *t } else { s } as usize;
            acc.factor(Factor::poch(a, *t as usize, -1))
        }),
        FamilyId::DistinctParts { t, residues } => {
            residues.iter().fold(ProductSpec::new(), |acc, &s| {
                let a = if s == 0 { *t } else { s } as usize;
                acc.factor(Factor::neg_poch(a, *t as usize, 1))
            })
        }
        FamilyId::Overpartition => ProductSpec::new()
            .factor(Factor::neg_poch(1, 1, 1))
            .factor(Factor::poch(1, 1, -1)),
        FamilyId::Staircase => ProductSpec::new().theta(Theta::Staircase),
        FamilyId::OddStaircase => ProductSpec::new().theta(Theta::OddStaircase),
        FamilyId::Designated => ProductSpec::new()
            .theta(Theta::Staircase)
            .factor(Factor::neg_poch(3, 3, 1))
            .factor(even_cubed),
        FamilyId::TwoColor => ProductSpec::new()
            .theta(Theta::Staircase)
            .factor(even_cubed),
        FamilyId::OddDistinct => ProductSpec::new()
            .factor(Factor::neg_poch(1, 2, 1))
            .factor(Factor::poch(2, 2, -1)),
        FamilyId::Vector(_) if *f == FamilyId::pod2() => ProductSpec::new()
            .theta(Theta::OddStaircase)
            .factor(even_cubed),
        FamilyId::Vector(fs) => {
            let mut out = Vec::new();
            for c in fs {
                out.extend(family_product(c)?);
            }
            return Ok(out);
        }
    }])
}

/// Generating function of `f` up to `q^truncation`.
pub fn family_series(f: &FamilyId, truncation: usize) -> Result<PowerSeries> {
    let specs = family_product(f)?;
    let mut s = PowerSeries::one(truncation);
    for spec in &specs {
        s = s.mul_series(&build_series(spec, truncation));
    }
    Ok(s)
}

/// Generating functions read directly off the family definitions, independent
/// of the bijections: `PD = (-q³;q³)/((q;q)(q²;q²))`, `A = 1/((q;q)(q²;q²))`,
/// `POD₋₂ = (-q;q²)²/(q²;q²)²`, `p̄₋₂ = (-q;q)²/(q;q)²`.
pub fn definition_series(f: &FamilyId, truncation: usize) -> Result<PowerSeries> {
    let spec = if *f == FamilyId::Designated {
        ProductSpec::new()
            .factor(Factor::neg_poch(3, 3, 1))
            .factor(Factor::poch(1, 1, -1))
            .factor(Factor::poch(2, 2, -1))
    } else if *f == FamilyId::TwoColor {
        ProductSpec::new()
            .factor(Factor::poch(1, 1, -1))
            .factor(Factor::poch(2, 2, -1))
    } else if *f == FamilyId::pod2() {
        ProductSpec::new()
            .factor(Factor::neg_poch(1, 2, 2))
            .factor(Factor::poch(2, 2, -2))
    } else if *f == FamilyId::overpartition_pairs() {
        ProductSpec::new()
            .factor(Factor::neg_poch(1, 1, 2))
            .factor(Factor::poch(1, 1, -2))
    } else {
        return Err(Error::Unsupported(format!("no definition product for {f}")));
    };
    Ok(build_series(&spec, truncation))
}

/// Checks `family_series(f)` against exhaustive enumeration for `n <= up_to`.
pub fn validate_against_enumeration(f: &FamilyId, series: &PowerSeries, up_to: u32) -> Result<()> {
    for n in 0..=up_to.min(series.truncation() as u32) {
        let counted = families::count_with_ceiling(f, n, up_to)?;
        let c = series.coefficient(n as usize);
        if c.to_u64() != Some(counted) {
            return Err(Error::Verification(format!(
                "series for {f} has coefficient {c} at q^{n}, enumeration counts {counted}"
            )));
        }
    }
    Ok(())
}

/// A coefficient `c(3n+2)` that is not divisible by 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: usize,
    pub index: usize,
    pub coefficient: String,
}

/// `{family, residueClass, bound, violations}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanReport {
    pub family: String,
    pub residue_class: String,
    pub bound: usize,
    pub violations: Vec<Violation>,
}

/// Every index `modulus·n + residue <= bound` whose coefficient is not
/// divisible by `modulus`.
pub fn scan_congruence(
    family: &str,
    series: &PowerSeries,
    modulus: usize,
    residue: usize,
    bound: usize,
) -> ScanReport {
    let m = BigInt::from(modulus);
    let bound = bound.min(series.truncation());
    let violations = (0..)
        .map(|n| (n, modulus * n + residue))
        .take_while(|&(_, i)| i <= bound)
        .filter_map(|(n, i)| {
            let c = series.coefficient(i);
            (!(c % &m).is_zero()).then(|| Violation {
                n,
                index: i,
                coefficient: c.to_string(),
            })
        })
        .collect();
    ScanReport {
        family: family.to_string(),
        residue_class: format!("{modulus}n+{residue}"),
        bound,
        violations,
    }
}
