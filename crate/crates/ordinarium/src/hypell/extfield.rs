//! Extension fields F_{ℓ^d} and exhaustive point counting for y² = f(x).
//!
//! The field is realized as F_ℓ[z]/(h) with h the lexicographically least
//! monic irreducible of degree d (coefficient vectors enumerated as ascending
//! base-ℓ counters, constant term first). Counting is exhaustive with a
//! precomputed square table per field; determinism and reproducibility win
//! over speed at this scale.

use crate::nf::{factor_degree_pattern, require_prime, FpPoly};
use crate::{Error, Result};

/// Largest extension degree we ever need: ℓ^d stays within the count budget,
/// so d ≤ 13 already at ℓ = 3.
pub const MAX_EXT_DEG: usize = 16;

type Elt = [u64; MAX_EXT_DEG];

pub struct ExtField {
    p: u64,
    d: usize,
    /// lower coefficients of the monic irreducible, negated mod p for reduction
    red: Vec<u64>,
    size: u64,
    irr: FpPoly,
}

impl ExtField {
    pub fn new(p: u64, d: usize) -> Result<Self> {
        require_prime(p)?;
        if d == 0 || d > MAX_EXT_DEG {
            return Err(Error::Precondition(format!(
                "extension degree {} out of range 1..={}",
                d, MAX_EXT_DEG
            )));
        }
        let size = (p as u128).pow(d as u32);
        let size = u64::try_from(size)
            .map_err(|_| Error::Budget(format!("field size {}^{} too large", p, d)))?;
        let irr = if d == 1 {
            FpPoly::x(p)
        } else {
            find_least_irreducible(p, d, size)?
        };
        let red = (0..d).map(|j| (p - irr.coeff(j) % p) % p).collect();
        Ok(ExtField {
            p,
            d,
            red,
            size,
            irr,
        })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn modulus_poly(&self) -> &FpPoly {
        &self.irr
    }

    #[inline]
    pub fn zero(&self) -> Elt {
        [0; MAX_EXT_DEG]
    }

    /// Decode the mixed-radix code (constant coordinate is the lowest digit).
    #[inline]
    pub fn decode(&self, mut code: u64, out: &mut Elt) {
        for i in 0..self.d {
            out[i] = code % self.p;
            code /= self.p;
        }
        for v in out.iter_mut().skip(self.d) {
            *v = 0;
        }
    }

    #[inline]
    pub fn encode(&self, e: &Elt) -> u64 {
        let mut code = 0u64;
        for i in (0..self.d).rev() {
            code = code * self.p + e[i];
        }
        code
    }

    #[inline]
    pub fn is_zero(&self, e: &Elt) -> bool {
        e[..self.d].iter().all(|&v| v == 0)
    }

    /// Schoolbook product reduced by the field polynomial. Accumulation stays
    /// within u64: d·p² is far below 2^63 for every in-budget field.
    pub fn mul(&self, a: &Elt, b: &Elt) -> Elt {
        let d = self.d;
        let p = self.p;
        if d == 1 {
            let mut out = [0; MAX_EXT_DEG];
            out[0] = a[0] * b[0] % p;
            return out;
        }
        let mut prod = [0u64; 2 * MAX_EXT_DEG - 1];
        for i in 0..d {
            if a[i] == 0 {
                continue;
            }
            for j in 0..d {
                prod[i + j] += a[i] * b[j];
            }
        }
        for v in prod.iter_mut().take(2 * d - 1) {
            *v %= p;
        }
        for k in (d..2 * d - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..d {
                prod[k - d + j] = (prod[k - d + j] + c * self.red[j]) % p;
            }
        }
        let mut out = [0; MAX_EXT_DEG];
        out[..d].copy_from_slice(&prod[..d]);
        out
    }
}

fn find_least_irreducible(p: u64, d: usize, _size: u64) -> Result<FpPoly> {
    let candidates = (p as u128).pow(d as u32);
    let mut n: u128 = 0;
    while n < candidates {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut v = n;
        for _ in 0..d {
            coeffs.push((v % p as u128) as u64);
            v /= p as u128;
        }
        coeffs.push(1);
        let cand = FpPoly::new(p, coeffs);
        if factor_degree_pattern(&cand)? == vec![(d, 1)] {
            return Ok(cand);
        }
        n += 1;
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// #points of y² = f(x) over F_{ℓ^d}, including the single point at infinity
/// of the odd-degree model: 1 + Σ_x (1 + χ(f(x))) with χ(0) = 0.
pub fn count_points_over(f: &FpPoly, ext: &ExtField) -> u64 {
    let q = ext.size();
    let p = f.modulus();
    debug_assert_eq!(p, ext.p);
    // square table: code -> is a nonzero square or zero
    let mut squares = vec![0u8; q as usize];
    let mut y = ext.zero();
    for code in 0..q {
        ext.decode(code, &mut y);
        let y2 = ext.mul(&y, &y);
        squares[ext.encode(&y2) as usize] = 1;
    }
    let coeffs = f.coeffs();
    let mut count = 1u64; // point at infinity
    let mut x = ext.zero();
    for code in 0..q {
        ext.decode(code, &mut x);
        // Horner with scalar coefficients
        let mut acc = ext.zero();
        for &c in coeffs.iter().rev() {
            acc = ext.mul(&acc, &x);
            acc[0] = (acc[0] + c) % p;
        }
        if ext.is_zero(&acc) {
            count += 1;
        } else if squares[ext.encode(&acc) as usize] == 1 {
            count += 2;
        }
    }
    count
}
