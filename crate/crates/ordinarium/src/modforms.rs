//! Weight-2 newform coefficient data and per-prime ordinariness.
//!
//! Coefficient data arrives as files (or is generated from curve counts);
//! nothing here fetches anything. Validation is strict: weight must be 2,
//! coordinate denominators must divide the field-polynomial discriminant,
//! nebentypus values must look like roots of unity, and the Ramanujan bound
//! |ι(a_p)| ≤ 2√p is verified exactly at every real embedding by sign
//! bounding on isolated roots. A datum that fails validation is rejected —
//! bounds are never reported as verdicts.

use crate::nf::roots::{isolate_real_roots, sign_at_real_root};
use crate::nf::{factor, norm, poly_mod_p, primes_up_to, FpPoly, IntPoly, NFElement, NumberField};
use crate::splitting::{search_prime, SearchCondition, SplitPredicate};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A weight-2 newform presented by its level, coefficient field and
/// Fourier-coefficient table.
#[derive(Clone, Debug)]
pub struct NewformData {
    level: u64,
    field: Arc<NumberField>,
    /// nebentypus values at primes; empty map means trivial character
    eps: BTreeMap<u64, NFElement>,
    ap: BTreeMap<u64, NFElement>,
    is_cm: Option<bool>,
}

impl NewformData {
    pub fn new(
        level: u64,
        weight: u64,
        field: Arc<NumberField>,
        eps: BTreeMap<u64, NFElement>,
        ap: BTreeMap<u64, NFElement>,
        is_cm: Option<bool>,
    ) -> Result<Self> {
        if weight != 2 {
            return Err(Error::DataIntegrity(format!(
                "only weight 2 is supported, got {}",
                weight
            )));
        }
        if level == 0 {
            return Err(Error::DataIntegrity("level must be positive".into()));
        }
        let real_roots = isolate_real_roots(field.defining_poly())?;
        for (&p, a) in &ap {
            validate_denominator(&field, a, p)?;
            validate_ramanujan(&field, &real_roots, a, p)?;
        }
        for (&p, e) in &eps {
            validate_denominator(&field, e, p)?;
            validate_root_of_unity(&field, &real_roots, e, p)?;
        }
        Ok(NewformData {
            level,
            field,
            eps,
            ap,
            is_cm,
        })
    }

    /// Rational newform datum from an integer a_p table (coefficient field Q).
    pub fn from_integer_ap(level: u64, ap: &BTreeMap<u64, i64>, is_cm: Option<bool>) -> Result<Self> {
        let field = Arc::new(NumberField::rational());
        let table = ap
            .iter()
            .map(|(&p, &a)| {
                field
                    .element(vec![BigRational::from_integer(a.into())])
                    .map(|e| (p, e))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        NewformData::new(level, 2, field, BTreeMap::new(), table, is_cm)
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn is_cm(&self) -> Option<bool> {
        self.is_cm
    }

    pub fn ap(&self, p: u64) -> Option<&NFElement> {
        self.ap.get(&p)
    }

    pub fn primes_with_data(&self) -> impl Iterator<Item = u64> + '_ {
        self.ap.keys().copied()
    }

    /// ε(p); the trivial character when no value is supplied.
    pub fn eps_at(&self, p: u64) -> NFElement {
        self.eps.get(&p).cloned().unwrap_or_else(|| {
            let mut coords = vec![BigRational::zero(); self.field.degree()];
            coords[0] = BigRational::one();
            self.field.element(coords).expect("length matches")
        })
    }

    /// p-ordinary: p does not divide the integer N_{K_f/Q}(a_p).
    pub fn is_p_ordinary(&self, p: u64) -> Result<bool> {
        if self.level % p == 0 {
            return Err(Error::BadPrime(p));
        }
        let a = self.ap.get(&p).ok_or(Error::NoData(p))?;
        let n = integral_norm(a)?;
        Ok(!(n % BigInt::from(p)).is_zero())
    }

    /// Per-prime-above-p verdicts in the certified regime p ∤ disc: the
    /// coordinate polynomial of a_p must be nonzero in F_p[x]/(g_i) for every
    /// irreducible factor g_i of the defining polynomial mod p.
    pub fn lambda_ordinary_profile(&self, p: u64) -> Result<LambdaProfile> {
        if self.level % p == 0 {
            return Err(Error::BadPrime(p));
        }
        if self.field.divides_disc(p) {
            return Err(Error::Uncertified(p));
        }
        let a = self.ap.get(&p).ok_or(Error::NoData(p))?;
        let apoly = reduce_coords_mod_p(a, p)?;
        let fp = poly_mod_p(self.field.defining_poly(), p)?;
        let factors = factor(&fp)?;
        let mut verdicts = vec![];
        for (g, m) in factors {
            debug_assert_eq!(m, 1, "certified primes are unramified");
            let residue = apoly.rem(&g);
            verdicts.push(LambdaVerdict {
                factor_degree: g.degree().unwrap(),
                ordinary: !residue.is_zero(),
            });
        }
        Ok(LambdaProfile { p, verdicts })
    }

    /// P(X) = ∏_σ (X² − σ(a_p)X + σ(ε(p))·p), expanded exactly by eliminating
    /// the field generator through a resultant; returns the polynomial and
    /// its X^g coefficient.
    pub fn eichler_shimura_charpoly(&self, p: u64) -> Result<(IntPoly, BigInt)> {
        if self.level % p == 0 {
            return Err(Error::BadPrime(p));
        }
        let a = self.ap.get(&p).ok_or(Error::NoData(p))?;
        let e = self.eps_at(p);
        let g = self.field.degree();
        let charpoly = product_of_quadratics(&self.field, a, &e, p)?;
        if charpoly.degree() != Some(2 * g) || !charpoly.is_monic() {
            return Err(Error::DataIntegrity(
                "characteristic polynomial has the wrong shape".into(),
            ));
        }
        let middle = charpoly.coeff(g);
        Ok((charpoly, middle))
    }

    /// Fraction of usable primes ≤ x (good level, data present) that are
    /// p-ordinary; primes with missing data are tallied as gaps.
    pub fn ordinary_density(&self, x: u64) -> Result<OrdinaryDensityReport> {
        let mut ordinary = 0u64;
        let mut usable = 0u64;
        let mut gaps = 0u64;
        let mut bad_level = 0u64;
        for p in primes_up_to(x) {
            if self.level % p == 0 {
                bad_level += 1;
                continue;
            }
            if !self.ap.contains_key(&p) {
                gaps += 1;
                continue;
            }
            usable += 1;
            if self.is_p_ordinary(p)? {
                ordinary += 1;
            }
        }
        Ok(OrdinaryDensityReport {
            x,
            ordinary,
            usable,
            gaps,
            bad_level,
            fraction: (usable > 0).then(|| ordinary as f64 / usable as f64),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaVerdict {
    pub factor_degree: usize,
    pub ordinary: bool,
}

#[derive(Clone, Debug)]
pub struct LambdaProfile {
    pub p: u64,
    pub verdicts: Vec<LambdaVerdict>,
}

impl LambdaProfile {
    pub fn all_ordinary(&self) -> bool {
        self.verdicts.iter().all(|v| v.ordinary)
    }
}

#[derive(Clone, Debug)]
pub struct OrdinaryDensityReport {
    pub x: u64,
    pub ordinary: u64,
    pub usable: u64,
    pub gaps: u64,
    pub bad_level: u64,
    pub fraction: Option<f64>,
}

/// Degree-based existence guarantee for the splitting hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeGuarantee {
    /// [K_f : Q] = q prime: an inert prime exists.
    Inert { q: usize },
    /// [K_f : Q] = 2q, q prime: a split-two-equal prime exists.
    SplitTwoEqual { q: usize },
}

#[derive(Clone, Debug)]
pub struct SplittingHypothesisReport {
    pub degree: usize,
    pub guarantee: Option<DegreeGuarantee>,
    pub inert_witness: Option<u64>,
    pub split_two_equal_witness: Option<u64>,
    pub bound: u64,
}

/// Check the splitting hypothesis for the coefficient field: scan for inert
/// and split-two-equal witnesses, and report when the degree alone already
/// guarantees existence (degree q or 2q for a prime q).
pub fn splitting_hypothesis(field: &NumberField, bound: u64) -> Result<SplittingHypothesisReport> {
    let degree = field.degree();
    if degree == 1 {
        return Err(Error::Precondition(
            "the hypothesis is trivial for the rational coefficient field".into(),
        ));
    }
    let guarantee = if crate::nf::is_prime_u64(degree as u64) {
        Some(DegreeGuarantee::Inert { q: degree })
    } else if degree % 2 == 0 && crate::nf::is_prime_u64((degree / 2) as u64) {
        Some(DegreeGuarantee::SplitTwoEqual { q: degree / 2 })
    } else {
        None
    };
    let inert = search_prime(
        &SearchCondition::new(vec![(field.clone(), SplitPredicate::Inert)])?,
        2,
        bound,
    )?
    .witness;
    let split = search_prime(
        &SearchCondition::new(vec![(field.clone(), SplitPredicate::SplitTwoEqual)])?,
        2,
        bound,
    )?
    .witness;
    Ok(SplittingHypothesisReport {
        degree,
        guarantee,
        inert_witness: inert,
        split_two_equal_witness: split,
        bound,
    })
}

fn validate_denominator(field: &NumberField, a: &NFElement, p: u64) -> Result<()> {
    let den = a.denominator();
    if den.is_one() {
        return Ok(());
    }
    if (field.poly_disc() % &den).is_zero() {
        return Ok(());
    }
    Err(Error::DataIntegrity(format!(
        "coefficient at p = {} has denominator {} not dividing the discriminant {}",
        p,
        den,
        field.poly_disc()
    )))
}

/// |A(θ)| ≤ 2√p at every real root θ: sign(4p − A(θ)²) ≥ 0, decided exactly.
fn validate_ramanujan(
    field: &NumberField,
    real_roots: &[(BigRational, BigRational)],
    a: &NFElement,
    p: u64,
) -> Result<()> {
    if real_roots.is_empty() {
        return Ok(());
    }
    let apoly = clear_denominators(a);
    let den = a.denominator();
    // 4p*den^2 - A~(x)^2 where A~ = den*A
    let bound = IntPoly::constant(BigInt::from(4 * p as i64) * &den * &den)
        .sub(&apoly.mul(&apoly));
    let f = field.defining_poly();
    for iso in real_roots {
        if sign_at_real_root(f, iso, &bound)? < 0 {
            return Err(Error::DataIntegrity(format!(
                "Ramanujan bound violated at p = {}: |a_p| exceeds 2 sqrt(p) at a real embedding",
                p
            )));
        }
    }
    Ok(())
}

/// Nebentypus values must look like roots of unity: norm ±1 and |value| ≤ 1
/// at every real embedding.
fn validate_root_of_unity(
    field: &NumberField,
    real_roots: &[(BigRational, BigRational)],
    e: &NFElement,
    p: u64,
) -> Result<()> {
    let n = norm(e);
    if n != BigRational::one() && n != -BigRational::one() {
        return Err(Error::DataIntegrity(format!(
            "nebentypus value at p = {} has norm {}, not a unit",
            p, n
        )));
    }
    let epoly = clear_denominators(e);
    let den = e.denominator();
    let bound = IntPoly::constant(&den * &den).sub(&epoly.mul(&epoly));
    let f = field.defining_poly();
    for iso in real_roots {
        if sign_at_real_root(f, iso, &bound)? < 0 {
            return Err(Error::DataIntegrity(format!(
                "nebentypus value at p = {} exceeds modulus 1 at a real embedding",
                p
            )));
        }
    }
    Ok(())
}

/// den * coordinate polynomial, as an integer polynomial.
fn clear_denominators(a: &NFElement) -> IntPoly {
    let den = a.denominator();
    IntPoly::new(
        a.coords()
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect(),
    )
}

/// Norm that must land in Z (true for algebraic integers regardless of
/// power-basis denominators).
fn integral_norm(a: &NFElement) -> Result<BigInt> {
    let n = norm(a);
    if !n.denom().is_one() {
        return Err(Error::DataIntegrity(format!(
            "norm {} is not an integer; coefficient is not an algebraic integer",
            n
        )));
    }
    Ok(n.numer().clone())
}

fn reduce_coords_mod_p(a: &NFElement, p: u64) -> Result<FpPoly> {
    use num_integer::Integer;
    let pb = BigInt::from(p);
    let mut coeffs = vec![];
    for c in a.coords() {
        let den = c.denom().mod_floor(&pb);
        if den.is_zero() {
            return Err(Error::Uncertified(p));
        }
        let den = den.to_u64().unwrap();
        let num = c.numer().mod_floor(&pb).to_u64().unwrap();
        let inv = mod_inverse(den, p);
        coeffs.push(num * inv % p);
    }
    Ok(FpPoly::new(p, coeffs))
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

/// ∏_σ (X² − σ(a)X + σ(ε)p) as Res_y(f(y), c·Q(y, X)) / c^{deg f}, with the
/// Sylvester determinant computed fraction-free over Z[X].
fn product_of_quadratics(
    field: &NumberField,
    a: &NFElement,
    e: &NFElement,
    p: u64,
) -> Result<IntPoly> {
    let f = field.defining_poly();
    let n = field.degree();
    let den_a = a.denominator();
    let den_e = e.denominator();
    let c = num_integer::lcm(den_a.clone(), den_e.clone());
    let a_int = {
        let scale = &c / &den_a;
        clear_denominators(a).scale(&scale)
    };
    let e_int = {
        let scale = &c / &den_e;
        clear_denominators(e).scale(&scale)
    };
    // cQ(y, X) = c X^2 - A~(y) X + p E~(y), coefficients in y of IntPoly-in-X
    let deg_y = a_int
        .degree()
        .unwrap_or(0)
        .max(e_int.degree().unwrap_or(0));
    let q_coeff = |k: usize| -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); 3];
        coeffs[1] = -a_int.coeff(k);
        coeffs[0] = BigInt::from(p) * e_int.coeff(k);
        if k == 0 {
            coeffs[2] = c.clone();
        }
        IntPoly::new(coeffs)
    };
    let result = if deg_y == 0 {
        // a and eps rational: every embedding sees the same quadratic
        q_coeff(0).pow(n as u32)
    } else {
        let fy: Vec<IntPoly> = f
            .coeffs()
            .iter()
            .map(|ci| IntPoly::constant(ci.clone()))
            .collect();
        let qy: Vec<IntPoly> = (0..=deg_y).map(q_coeff).collect();
        sylvester_resultant_poly_entries(&fy, &qy)?
    };
    // divide by c^n
    let cn = c.pow(n as u32);
    let coeffs = result
        .coeffs()
        .iter()
        .map(|v| {
            let (q, r) = num_integer::Integer::div_rem(v, &cn);
            if r.is_zero() {
                Ok(q)
            } else {
                Err(Error::DataIntegrity(
                    "non-integral characteristic polynomial expansion".into(),
                ))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

/// Resultant of two polynomials in y whose coefficients live in Z[X]:
/// Sylvester matrix with polynomial entries, fraction-free Bareiss.
fn sylvester_resultant_poly_entries(a: &[IntPoly], b: &[IntPoly]) -> Result<IntPoly> {
    let da = a.len() - 1;
    let db = b.len() - 1;
    let size = da + db;
    let mut m = vec![vec![IntPoly::zero(); size]; size];
    for r in 0..db {
        for (k, c) in a.iter().enumerate() {
            m[r][r + da - k] = c.clone();
        }
    }
    for r in 0..da {
        for (k, c) in b.iter().enumerate() {
            m[db + r][r + db - k] = c.clone();
        }
    }
    // Bareiss over the integral domain Z[X]
    let mut sign = 1i32;
    let mut prev = IntPoly::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(IntPoly::zero()),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][k] = IntPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    Ok(if sign < 0 { det.neg() } else { det })
}

// ---------------------------------------------------------------------------
// JSON interchange
// ---------------------------------------------------------------------------

fn rational_from_json(v: &serde_json::Value) -> Result<BigRational> {
    match v {
        serde_json::Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::DataIntegrity(format!("non-integer number {}", n)))?;
            Ok(BigRational::from_integer(i.into()))
        }
        serde_json::Value::String(s) => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s.trim(), "1"),
            };
            let num: BigInt = num
                .parse()
                .map_err(|_| Error::DataIntegrity(format!("bad rational {}", s)))?;
            let den: BigInt = den
                .parse()
                .map_err(|_| Error::DataIntegrity(format!("bad rational {}", s)))?;
            if den.is_zero() {
                return Err(Error::DataIntegrity(format!("zero denominator in {}", s)));
            }
            Ok(BigRational::new(num, den))
        }
        _ => Err(Error::DataIntegrity(format!(
            "expected number or \"num/den\" string, got {}",
            v
        ))),
    }
}

fn rational_to_json(r: &BigRational) -> serde_json::Value {
    if r.denom().is_one() {
        match r.numer().to_i64() {
            Some(i) => serde_json::json!(i),
            None => serde_json::json!(r.numer().to_string()),
        }
    } else {
        serde_json::json!(format!("{}/{}", r.numer(), r.denom()))
    }
}

impl NewformData {
    /// Parse the interchange schema:
    /// `{ "level": int, "weight": 2, "field_poly": [int…] ascending,
    ///    "eps": {"p": [rat…]}?, "ap": {"p": [rat…]}, "cm": bool? }`
    /// with rationals as plain integers or "num/den" strings.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::DataIntegrity("top level must be an object".into()))?;
        let level = obj
            .get("level")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::DataIntegrity("missing integer \"level\"".into()))?;
        let weight = obj
            .get("weight")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::DataIntegrity("missing integer \"weight\"".into()))?;
        let field_poly = obj
            .get("field_poly")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::DataIntegrity("missing array \"field_poly\"".into()))?;
        let coeffs: Vec<BigInt> = field_poly
            .iter()
            .map(|c| {
                c.as_i64().map(BigInt::from).ok_or_else(|| {
                    Error::DataIntegrity("field_poly entries must be integers".into())
                })
            })
            .collect::<Result<_>>()?;
        let field = Arc::new(NumberField::new(IntPoly::new(coeffs))?);
        let parse_table = |key: &str| -> Result<BTreeMap<u64, NFElement>> {
            let mut out = BTreeMap::new();
            if let Some(tab) = obj.get(key) {
                let tab = tab.as_object().ok_or_else(|| {
                    Error::DataIntegrity(format!("\"{}\" must be an object", key))
                })?;
                for (pk, coords) in tab {
                    let p: u64 = pk
                        .parse()
                        .map_err(|_| Error::DataIntegrity(format!("bad prime key {}", pk)))?;
                    let arr = coords.as_array().ok_or_else(|| {
                        Error::DataIntegrity(format!("{}[{}] must be an array", key, pk))
                    })?;
                    let coords = arr
                        .iter()
                        .map(rational_from_json)
                        .collect::<Result<Vec<_>>>()?;
                    out.insert(p, field.element(coords)?);
                }
            }
            Ok(out)
        };
        let eps = parse_table("eps")?;
        let ap = parse_table("ap")?;
        let is_cm = obj.get("cm").and_then(|x| x.as_bool());
        NewformData::new(level, weight, field, eps, ap, is_cm)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        NewformData::from_json(&serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let field_poly: Vec<serde_json::Value> = self
            .field
            .defining_poly()
            .coeffs()
            .iter()
            .map(|c| serde_json::json!(c.to_i64().expect("defining polys stay small")))
            .collect();
        let table = |m: &BTreeMap<u64, NFElement>| -> serde_json::Value {
            let mut obj = serde_json::Map::new();
            for (p, e) in m {
                obj.insert(
                    p.to_string(),
                    serde_json::Value::Array(e.coords().iter().map(rational_to_json).collect()),
                );
            }
            serde_json::Value::Object(obj)
        };
        let mut out = serde_json::Map::new();
        out.insert("level".into(), serde_json::json!(self.level));
        out.insert("weight".into(), serde_json::json!(2));
        out.insert("field_poly".into(), serde_json::Value::Array(field_poly));
        if !self.eps.is_empty() {
            out.insert("eps".into(), table(&self.eps));
        }
        out.insert("ap".into(), table(&self.ap));
        if let Some(cm) = self.is_cm {
            out.insert("cm".into(), serde_json::json!(cm));
        }
        serde_json::Value::Object(out)
    }
}
