//! Exact arithmetic substrate: integer polynomials, number fields presented
//! by a monic squarefree polynomial, elements in the power basis, norms via
//! resultants, and the prime sieve.
//!
//! The ring of integers is modeled as Z[θ] only. Statements at a prime λ | p
//! are certified solely when p does not divide the discriminant of the
//! defining polynomial; callers are expected to skip uncertified primes.

mod fppoly;
mod intpoly;
mod primes;
pub mod roots;

pub use fppoly::{
    factor, factor_degree_pattern, poly_mod_p, squarefree_decomposition, FpPoly,
};
pub use intpoly::{discriminant, resultant, IntPoly};
pub use primes::{is_prime_u64, primes_up_to, require_prime};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

/// A number field Q(θ) presented by a monic squarefree defining polynomial.
///
/// Irreducibility is asserted by the data supplier; the constructor records a
/// witness prime modulo which the polynomial is irreducible when one exists
/// below a small bound (some irreducible polynomials have none).
#[derive(Clone, PartialEq, Eq)]
pub struct NumberField {
    defining_poly: IntPoly,
    degree: usize,
    poly_disc: BigInt,
    irreducibility_witness: Option<u64>,
}

impl NumberField {
    pub fn new(defining_poly: IntPoly) -> Result<Self> {
        let degree = defining_poly.degree().ok_or(Error::ZeroPolynomial)?;
        if degree == 0 {
            return Err(Error::Precondition(
                "defining polynomial must be non-constant".into(),
            ));
        }
        if !defining_poly.is_monic() {
            return Err(Error::NotMonic(
                defining_poly.leading_coeff().unwrap().to_string(),
            ));
        }
        let poly_disc = discriminant(&defining_poly)?;
        if poly_disc.is_zero() {
            return Err(Error::NotSquarefree);
        }
        let irreducibility_witness = (degree >= 2)
            .then(|| {
                primes_up_to(200).into_iter().find(|&p| {
                    poly_mod_p(&defining_poly, p)
                        .ok()
                        .and_then(|f| factor_degree_pattern(&f).ok())
                        .map_or(false, |pat| pat == vec![(degree, 1)])
                })
            })
            .flatten();
        Ok(NumberField {
            defining_poly,
            degree,
            poly_disc,
            irreducibility_witness,
        })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(IntPoly::from_i64(coeffs))
    }

    /// The rational field presented by the degenerate polynomial x.
    pub fn rational() -> Self {
        Self::new(IntPoly::x()).expect("x is a valid defining polynomial")
    }

    pub fn defining_poly(&self) -> &IntPoly {
        &self.defining_poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn poly_disc(&self) -> &BigInt {
        &self.poly_disc
    }

    pub fn irreducibility_witness(&self) -> Option<u64> {
        self.irreducibility_witness
    }

    pub fn divides_disc(&self, p: u64) -> bool {
        (&self.poly_disc % BigInt::from(p)).is_zero()
    }

    /// Element from power-basis coordinates.
    pub fn element(self: &Arc<Self>, coords: Vec<BigRational>) -> Result<NFElement> {
        if coords.len() != self.degree {
            return Err(Error::Precondition(format!(
                "expected {} coordinates, got {}",
                self.degree,
                coords.len()
            )));
        }
        Ok(NFElement {
            field: Arc::clone(self),
            coords,
        })
    }

    pub fn element_from_i64(self: &Arc<Self>, coords: &[i64]) -> Result<NFElement> {
        self.element(
            coords
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// The generator θ (for degree 1 this is the rational root of the
    /// defining polynomial).
    pub fn theta(self: &Arc<Self>) -> NFElement {
        let mut coords = vec![BigRational::zero(); self.degree];
        if self.degree == 1 {
            // x + c ; theta = -c
            coords[0] = BigRational::from_integer(-self.defining_poly.coeff(0));
        } else {
            coords[1] = BigRational::one();
        }
        NFElement {
            field: Arc::clone(self),
            coords,
        }
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.defining_poly)
    }
}

/// Field element in the power basis 1, θ, …, θ^{n−1}.
#[derive(Clone, PartialEq, Eq)]
pub struct NFElement {
    field: Arc<NumberField>,
    coords: Vec<BigRational>,
}

impl NFElement {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The coordinate polynomial A with a = A(θ), over Q.
    pub fn coord_poly(&self) -> Vec<BigRational> {
        self.coords.clone()
    }

    /// Common denominator of the coordinates (always positive).
    pub fn denominator(&self) -> BigInt {
        let mut den = BigInt::one();
        for c in &self.coords {
            den = num_integer::lcm(den, c.denom().clone());
        }
        den.abs()
    }

    pub fn add(&self, rhs: &NFElement) -> NFElement {
        debug_assert_eq!(self.field.defining_poly, rhs.field.defining_poly);
        NFElement {
            field: Arc::clone(&self.field),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Product in Q[x]/(f).
    pub fn mul(&self, rhs: &NFElement) -> NFElement {
        debug_assert_eq!(self.field.defining_poly, rhs.field.defining_poly);
        let n = self.field.degree;
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        // reduce by the monic defining polynomial
        let f = &self.field.defining_poly;
        for k in (n..prod.len()).rev() {
            let c = std::mem::replace(&mut prod[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                let adj = &c * BigRational::from_integer(f.coeff(j));
                prod[k - n + j] -= adj;
            }
        }
        prod.truncate(n);
        NFElement {
            field: Arc::clone(&self.field),
            coords: prod,
        }
    }
}

impl fmt::Debug for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NFElement{:?}", self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

/// Field norm N_{K/Q}(a), computed as Res(f, A)/den^{deg f} where A is the
/// coordinate polynomial of a with denominators cleared. Multiplicative; for
/// rational r it equals r^{deg K}.
pub fn norm(a: &NFElement) -> BigRational {
    if a.is_zero() {
        return BigRational::zero();
    }
    let f = &a.field().defining_poly;
    let den = a.denominator();
    let cleared: Vec<BigInt> = a
        .coords
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let apoly = IntPoly::new(cleared);
    let r = resultant(f, &apoly).expect("nonzero by construction");
    BigRational::new(r, den.pow(f.degree().unwrap() as u32))
}

/// Monic minimal polynomial of −(ζ_p + ζ_p^{−1}) for an odd prime p, of
/// degree (p−1)/2, computed exactly over Z.
///
/// Writing y = z + z^{−1}, the quotient Φ_p(z)/z^{(p−1)/2} equals
/// 1 + Σ_{i=1}^{(p−1)/2} C_i(y) with C_0 = 2, C_1 = y, C_{i+1} = y·C_i − C_{i−1};
/// that sum is the minimal polynomial of ζ_p + ζ_p^{−1}, and the sign flip
/// y ↦ −y (normalized monic) gives the result.
pub fn real_cyclotomic_minpoly(p: u64) -> Result<IntPoly> {
    if p == 2 || !is_prime_u64(p) {
        return Err(Error::Precondition(format!(
            "p = {} must be an odd prime",
            p
        )));
    }
    let m = ((p - 1) / 2) as usize;
    let y = IntPoly::x();
    let mut c_prev = IntPoly::constant(BigInt::from(2)); // C_0
    let mut c_cur = y.clone(); // C_1
    let mut psi = IntPoly::one().add(&y);
    for _ in 2..=m {
        let c_next = y.mul(&c_cur).sub(&c_prev);
        psi = psi.add(&c_next);
        c_prev = c_cur;
        c_cur = c_next;
    }
    // monic minimal polynomial of -(zeta+zeta^{-1}): (-1)^m psi(-y)
    let flipped = IntPoly::new(
        psi.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if (m + k) % 2 == 1 { -c } else { c.clone() })
            .collect(),
    );
    Ok(flipped)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(coeffs: &[i64]) -> Arc<NumberField> {
        Arc::new(NumberField::from_i64(coeffs).unwrap())
    }

    #[test]
    fn field_construction() {
        let k = field(&[1, 0, 1]);
        assert_eq!(k.degree(), 2);
        assert_eq!(*k.poly_disc(), BigInt::from(-4));
        assert!(k.irreducibility_witness().is_some());
        assert!(NumberField::from_i64(&[1, 0, 2]).is_err()); // not monic
        assert!(NumberField::from_i64(&[0, 0, 1]).is_err()); // x^2 not squarefree
        let q = NumberField::rational();
        assert_eq!(q.degree(), 1);
        assert_eq!(*q.poly_disc(), BigInt::one());
    }

    #[test]
    fn norm_examples() {
        let k = field(&[-1, 1, 1]); // x^2+x-1
        let theta = k.theta();
        assert_eq!(norm(&theta), BigRational::from_integer((-1).into()));
        let k5 = field(&[-5, 0, 1]);
        assert_eq!(norm(&k5.theta()), BigRational::from_integer((-5).into()));
        let zero = k.element_from_i64(&[0, 0]).unwrap();
        assert_eq!(norm(&zero), BigRational::zero());
        // norm of a rational r is r^degree
        let r = k.element_from_i64(&[3, 0]).unwrap();
        assert_eq!(norm(&r), BigRational::from_integer(9.into()));
        assert_eq!(norm(&k.element_from_i64(&[1, 0]).unwrap()), BigRational::one());
    }

    #[test]
    fn norm_multiplicative_randomized() {
        // seeded LCG; 1000 pairs per field as the module contract asks
        for coeffs in [&[-1i64, 1, 1][..], &[1, -2, -1, 1][..], &[2, 0, 0, 1][..]] {
            let k = field(coeffs);
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) as i64 % 7) - 3
            };
            for _ in 0..1000 {
                let a = k
                    .element(
                        (0..k.degree())
                            .map(|_| BigRational::from_integer(next().into()))
                            .collect(),
                    )
                    .unwrap();
                let b = k
                    .element(
                        (0..k.degree())
                            .map(|_| BigRational::from_integer(next().into()))
                            .collect(),
                    )
                    .unwrap();
                assert_eq!(norm(&a.mul(&b)), norm(&a) * norm(&b));
            }
        }
    }

    #[test]
    fn real_cyclotomic_examples() {
        assert_eq!(real_cyclotomic_minpoly(3).unwrap(), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(
            real_cyclotomic_minpoly(5).unwrap(),
            IntPoly::from_i64(&[-1, -1, 1])
        );
        assert_eq!(
            real_cyclotomic_minpoly(7).unwrap(),
            IntPoly::from_i64(&[1, -2, -1, 1])
        );
        assert_eq!(
            real_cyclotomic_minpoly(11).unwrap(),
            IntPoly::from_i64(&[-1, 3, 3, -4, -1, 1])
        );
        assert_eq!(
            real_cyclotomic_minpoly(13).unwrap(),
            IntPoly::from_i64(&[-1, -3, 6, 4, -5, -1, 1])
        );
        assert!(real_cyclotomic_minpoly(2).is_err());
        assert!(real_cyclotomic_minpoly(9).is_err());
    }

    #[test]
    fn real_cyclotomic_properties() {
        for p in [3u64, 5, 7, 11, 13, 17, 19] {
            let g = real_cyclotomic_minpoly(p).unwrap();
            assert_eq!(g.degree(), Some(((p - 1) / 2) as usize));
            assert!(g.is_monic());
            // irreducible modulo some small witness prime
            let k = NumberField::new(g).unwrap();
            assert!(
                k.irreducibility_witness().is_some() || k.degree() == 1,
                "no witness for p={}",
                p
            );
        }
    }

    #[test]
    fn chebyshev_style_identity_p7() {
        // x*g(x^2-2) for p=7 must be x^7 - 7x^5 + 14x^3 - 7x
        let g = real_cyclotomic_minpoly(7).unwrap();
        let inner = IntPoly::from_i64(&[-2, 0, 1]);
        let lhs = IntPoly::x().mul(&g.compose(&inner));
        assert_eq!(lhs, IntPoly::from_i64(&[0, -7, 0, 14, 0, -7, 0, 1]));
    }
}
