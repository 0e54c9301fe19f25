//! Hyperelliptic curves y² = f(x) with odd-degree models: the Dickson-style
//! family built from real cyclotomic minimal polynomials, exhaustive point
//! counting, L-polynomials, Cartier–Manin matrices, and the ordinariness
//! scans over primes.
//!
//! Ordinariness is decided two independent ways wherever both are affordable:
//! by the middle coefficient of the Frobenius characteristic polynomial (from
//! point counts) and by invertibility of the Cartier–Manin matrix. The two
//! must agree; a mismatch is a hard failure, not a data point.

mod extfield;
mod lpoly;
mod scans;
mod series;

pub use extfield::{count_points_over, ExtField, MAX_EXT_DEG};
pub use lpoly::{expand_real_weil, l_polynomial, real_weil, FrobeniusData, RealWeilPoly};
pub use scans::{
    density_scan, inert_dichotomy_scan, split_constraint_scan, DensityScanReport, DichotomyReport,
    RowOutcome, ScanRow, SplitScanReport,
};
pub use series::{hasse_witt, pow_series_mod, rank_mod};

use crate::nf::{poly_mod_p, real_cyclotomic_minpoly, require_prime, FpPoly, IntPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Where a curve came from; scans only ever build family members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveSource {
    Family { p: u64, t: BigRational },
    Custom,
}

/// A hyperelliptic curve y² = f(x) over F_ℓ with f squarefree of odd degree.
#[derive(Clone, Debug)]
pub struct HypCurve {
    f: FpPoly,
    genus: usize,
    pub source: CurveSource,
}

impl HypCurve {
    pub fn new(f: FpPoly, source: CurveSource) -> Result<Self> {
        let l = f.modulus();
        if l == 2 {
            return Err(Error::Precondition("need an odd prime field".into()));
        }
        let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
        if deg < 3 || deg % 2 == 0 {
            return Err(Error::Precondition(format!(
                "need an odd-degree model with deg f >= 3, got {}",
                deg
            )));
        }
        if !f.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Ok(HypCurve {
            genus: (deg - 1) / 2,
            f,
            source,
        })
    }

    pub fn f(&self) -> &FpPoly {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn modulus(&self) -> u64 {
        self.f.modulus()
    }

    /// N_i: points over F_{ℓ^i} including the point at infinity.
    pub fn count_points(&self, i: usize, budget: &CountBudget) -> Result<u64> {
        let size = (self.modulus() as u128).pow(i as u32);
        if size > budget.max_field_size as u128 {
            return Err(Error::Budget(format!(
                "field size {}^{} exceeds the count budget {}",
                self.modulus(),
                i,
                budget.max_field_size
            )));
        }
        let ext = ExtField::new(self.modulus(), i)?;
        Ok(count_points_over(&self.f, &ext))
    }

    /// Point counts N_1..N_g and the assembled Frobenius data.
    pub fn frobenius_data(&self, budget: &CountBudget) -> Result<FrobeniusData> {
        let counts: Vec<u64> = (1..=self.genus)
            .map(|i| self.count_points(i, budget))
            .collect::<Result<_>>()?;
        l_polynomial(&counts, self.modulus(), self.genus)
    }

    /// Cartier–Manin matrix and rank.
    pub fn hasse_witt(&self) -> Result<(Vec<Vec<u64>>, usize)> {
        hasse_witt(&self.f, self.genus)
    }
}

/// Exhaustive-count budget: the largest extension field we will enumerate.
#[derive(Clone, Copy, Debug)]
pub struct CountBudget {
    pub max_field_size: u64,
}

impl Default for CountBudget {
    fn default() -> Self {
        CountBudget {
            max_field_size: 4_000_000,
        }
    }
}

/// f_t = x·g(x² − 2) + t with g the minimal polynomial of −(ζ_p + ζ_p^{−1});
/// degree p, genus (p−1)/2. The construction degenerates at p ∈ {2, 5}.
pub fn build_family_poly(p: u64, t: i64) -> Result<IntPoly> {
    family_base_poly(p).map(|base| base.add(&IntPoly::constant(BigInt::from(t))))
}

/// The t-free part x·g(x² − 2).
pub fn family_base_poly(p: u64) -> Result<IntPoly> {
    if p == 2 || p == 5 {
        return Err(Error::Precondition(format!(
            "family requires p distinct from 2 and 5, got {}",
            p
        )));
    }
    let g = real_cyclotomic_minpoly(p)?;
    let inner = IntPoly::from_i64(&[-2, 0, 1]);
    Ok(IntPoly::x().mul(&g.compose(&inner)))
}

/// Reduce the family member at ℓ. Returns None when t's denominator vanishes
/// mod ℓ (the member has no reduction there).
pub fn family_poly_mod(p: u64, t: &BigRational, l: u64) -> Result<Option<FpPoly>> {
    require_prime(l)?;
    let base = family_base_poly(p)?;
    let lb = BigInt::from(l);
    if (t.denom() % &lb).is_zero() {
        return Ok(None);
    }
    let fp = poly_mod_p(&base, l)?;
    // t mod l = num * den^{-1}
    let num = t.numer().mod_floor_u64(l);
    let den = t.denom().mod_floor_u64(l);
    let t_red = num * mod_inverse(den, l) % l;
    let mut coeffs = fp.coeffs().to_vec();
    if coeffs.is_empty() {
        coeffs.push(0);
    }
    coeffs[0] = (coeffs[0] + t_red) % l;
    Ok(Some(FpPoly::new(l, coeffs)))
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, m: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, m: u64) -> u64 {
        use num_integer::Integer;
        self.mod_floor(&BigInt::from(m)).to_u64().unwrap()
    }
}

fn mod_inverse(a: u64, l: u64) -> u64 {
    let mut r = 1u64;
    let mut base = a % l;
    let mut e = l - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % l;
        }
        base = base * base % l;
        e >>= 1;
    }
    r
}

/// Per-prime classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionStatus {
    Ordinary,
    NonOrdinary,
    BadReduction,
}

impl ReductionStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ReductionStatus::Ordinary => "ordinary",
            ReductionStatus::NonOrdinary => "non-ordinary",
            ReductionStatus::BadReduction => "bad-reduction",
        }
    }
}

/// Ordinariness verdict at one prime. When both the middle-coefficient and
/// Cartier–Manin criteria ran they agreed (a disagreement aborts with
/// [`Error::OracleMismatch`] rather than producing a verdict).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinaryVerdict {
    pub l: u64,
    pub status: ReductionStatus,
    /// middle coefficient mod ℓ, when point counting was affordable
    pub middle_mod: Option<u64>,
    /// Cartier–Manin rank, whenever the reduction is good
    pub hw_rank: Option<usize>,
}

/// Verdict for the reduction f mod ℓ (`None` = no reduction exists, counted
/// as bad). Computes the Cartier–Manin matrix always and full Frobenius data
/// within the point-count budget; cross-checks the two criteria when both ran.
pub fn verdict(l: u64, f: Option<FpPoly>, budget: &CountBudget) -> Result<(OrdinaryVerdict, Option<FrobeniusData>)> {
    let bad = OrdinaryVerdict {
        l,
        status: ReductionStatus::BadReduction,
        middle_mod: None,
        hw_rank: None,
    };
    let Some(f) = f else {
        return Ok((bad, None));
    };
    if l == 2 || !f.is_squarefree() || f.degree().map_or(true, |d| d < 3 || d % 2 == 0) {
        return Ok((bad, None));
    }
    let curve = HypCurve::new(f, CurveSource::Custom)?;
    let g = curve.genus();
    let (_, rank) = curve.hasse_witt()?;
    let rank_ordinary = rank == g;
    let within_budget =
        (curve.modulus() as u128).pow(g as u32) <= budget.max_field_size as u128;
    let fd = if within_budget {
        Some(curve.frobenius_data(budget)?)
    } else {
        None
    };
    if let Some(fd) = &fd {
        let middle_ordinary = fd.is_ordinary();
        if middle_ordinary != rank_ordinary {
            return Err(Error::OracleMismatch {
                l,
                middle_says_ordinary: middle_ordinary,
                rank_says_ordinary: rank_ordinary,
            });
        }
    }
    let status = if rank_ordinary {
        ReductionStatus::Ordinary
    } else {
        ReductionStatus::NonOrdinary
    };
    Ok((
        OrdinaryVerdict {
            l,
            status,
            middle_mod: fd.as_ref().map(|fd| fd.middle_mod_l()),
            hw_rank: Some(rank),
        },
        fd,
    ))
}

/// Frobenius traces a_p = p + 1 − N_p of y² = f(x) (cubic f) at every good
/// odd prime ≤ x_max. Feeds weight-2 coefficient data for the CM and
/// elliptic-curve checks.
pub fn elliptic_ap_table(f: &IntPoly, x_max: u64) -> Result<BTreeMap<u64, i64>> {
    if f.degree() != Some(3) {
        return Err(Error::Precondition("need a cubic model".into()));
    }
    let mut out = BTreeMap::new();
    for l in crate::nf::primes_up_to(x_max) {
        if l == 2 {
            continue;
        }
        let fl = poly_mod_p(f, l)?;
        if fl.degree() != Some(3) || !fl.is_squarefree() {
            continue;
        }
        let ext = ExtField::new(l, 1)?;
        let n = count_points_over(&fl, &ext);
        out.insert(l, l as i64 + 1 - n as i64);
    }
    Ok(out)
}
