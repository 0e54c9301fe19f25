//! L-polynomials and Frobenius characteristic polynomials from point counts,
//! and the real Weil polynomial extraction.
//!
//! Power sums s_i = ℓ^i + 1 − N_i feed Newton's identities to produce
//! a_1..a_g of L(T); the functional equation a_{2g−i} = ℓ^{g−i} a_i fills the
//! top half. Every construction re-derives the counts from the coefficients
//! (exact integer round trip) and verifies the Weil root bound through the
//! real Weil polynomial — all roots of the characteristic polynomial have
//! squared modulus ℓ iff the trace polynomial h is totally real with roots
//! in [−2√ℓ, 2√ℓ], which Sturm chains decide exactly.

use crate::nf::roots::{isolate_real_roots, sign_at_real_root, SturmChain};
use crate::nf::IntPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Counts, L-polynomial, characteristic polynomial and middle coefficient of
/// Frobenius for a genus-g curve over F_ℓ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusData {
    pub l: u64,
    pub genus: usize,
    /// N_1..N_g, points over F_{ℓ^i} including the point at infinity.
    pub counts: Vec<u64>,
    /// a_0..a_{2g} of L(T) = Σ a_i T^i, a_0 = 1.
    pub lpoly: Vec<BigInt>,
    /// P(X) = X^{2g} L(1/X), ascending coefficients, monic of degree 2g.
    pub charpoly: IntPoly,
    /// Coefficient of X^g in P — the ordinariness-deciding coefficient.
    pub middle: BigInt,
}

impl FrobeniusData {
    pub fn middle_mod_l(&self) -> u64 {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        self.middle
            .mod_floor(&BigInt::from(self.l))
            .to_u64()
            .unwrap()
    }

    pub fn is_ordinary(&self) -> bool {
        self.middle_mod_l() != 0
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k.min(n - k) {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Assemble FrobeniusData from N_1..N_g. Rejects count vectors that cannot
/// come from a curve: non-integral Newton steps, middle coefficients past the
/// Weil bound, or characteristic polynomials whose roots do not all have
/// squared modulus ℓ.
pub fn l_polynomial(counts: &[u64], l: u64, genus: usize) -> Result<FrobeniusData> {
    if counts.len() != genus || genus == 0 {
        return Err(Error::Precondition(format!(
            "need exactly g = {} counts, got {}",
            genus,
            counts.len()
        )));
    }
    let lb = BigInt::from(l);
    // power sums of the inverse roots of L
    let mut s = vec![BigInt::zero()]; // s[0] unused
    for (i, &n) in counts.iter().enumerate() {
        s.push(lb.pow(i as u32 + 1) + 1 - BigInt::from(n));
    }
    // Newton: e_k = (1/k) * sum_{m=1..k} (-1)^{m-1} e_{k-m} s_m
    let mut e = vec![BigInt::one()];
    for k in 1..=genus {
        let mut acc = BigInt::zero();
        for m in 1..=k {
            let term = &e[k - m] * &s[m];
            if m % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, r) = num_integer::Integer::div_rem(&acc, &BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::InconsistentCounts(k));
        }
        e.push(q);
    }
    let mut a: Vec<BigInt> = (0..=genus)
        .map(|k| if k % 2 == 1 { -&e[k] } else { e[k].clone() })
        .collect();
    // functional equation a_{2g-i} = l^{g-i} a_i
    for i in (0..genus).rev() {
        let v = lb.pow((genus - i) as u32) * &a[i];
        a.push(v);
    }
    debug_assert_eq!(a.len(), 2 * genus + 1);
    // counts round-trip: regenerate power sums from the elementary symmetric
    // functions and compare exactly
    let mut s_back = vec![BigInt::zero()];
    for k in 1..=genus {
        let mut acc = if k % 2 == 1 {
            BigInt::from(k as i64) * &e[k]
        } else {
            -BigInt::from(k as i64) * &e[k]
        };
        for m in 1..k {
            let term = &e[m] * &s_back[k - m];
            if m % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        s_back.push(acc);
    }
    for i in 1..=genus {
        if s_back[i] != s[i] {
            return Err(Error::InconsistentCounts(i));
        }
    }
    // charpoly: coefficient of X^k is a_{2g-k}
    let charpoly = IntPoly::new(a.iter().rev().cloned().collect());
    let middle = a[genus].clone();
    // Weil bound on the middle coefficient: |a_g| <= C(2g, g) l^{g/2}
    let bound = binomial(2 * genus, genus);
    if &middle * &middle > &bound * &bound * lb.pow(genus as u32) {
        return Err(Error::InconsistentCounts(genus));
    }
    let fd = FrobeniusData {
        l,
        genus,
        counts: counts.to_vec(),
        lpoly: a,
        charpoly,
        middle,
    };
    // root-modulus invariant, decided exactly through the trace polynomial
    let (h, _) = real_weil(&fd)?;
    if !trace_poly_is_weil(&h.h, l)? {
        return Err(Error::InconsistentCounts(genus));
    }
    Ok(fd)
}

/// Monic degree-g integer polynomial h with X^g·h(X + ℓ/X) = charpoly; its
/// roots are the Frobenius traces under the real embeddings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealWeilPoly {
    pub h: IntPoly,
}

/// Extract the real Weil polynomial and the candidate norm N = (−1)^g h(0).
///
/// Requires the plus-sign functional equation; if no integral h reproduces
/// the characteristic polynomial the curve signals a nontrivial determinant
/// character and is rejected.
pub fn real_weil(fd: &FrobeniusData) -> Result<(RealWeilPoly, BigInt)> {
    let g = fd.genus;
    let lb = BigInt::from(fd.l);
    for i in 0..=g {
        if fd.lpoly[2 * g - i] != lb.pow((g - i) as u32) * &fd.lpoly[i] {
            return Err(Error::NonTotallyReal);
        }
    }
    let mut residual = fd.charpoly.clone();
    let mut h = vec![BigInt::zero(); g + 1];
    for k in (0..=g).rev() {
        let c = residual.coeff(g + k);
        h[k] = c.clone();
        // subtract c * X^{g-k} (X^2 + l)^k
        let mut term = vec![BigInt::zero(); g + k + 1];
        for j in 0..=k {
            term[g - k + 2 * j] = &c * binomial(k, j) * lb.pow((k - j) as u32);
        }
        residual = residual.sub(&IntPoly::new(term));
    }
    if !residual.is_zero() {
        return Err(Error::NonTotallyReal);
    }
    let hp = IntPoly::new(h);
    let n = if g % 2 == 1 {
        -hp.coeff(0)
    } else {
        hp.coeff(0)
    };
    Ok((RealWeilPoly { h: hp }, n))
}

/// Expand X^g·h(X + ℓ/X); inverse of the extraction, used by tests and the
/// round-trip invariant.
pub fn expand_real_weil(h: &IntPoly, l: u64) -> IntPoly {
    let g = h.degree().expect("nonzero");
    let lb = BigInt::from(l);
    let mut out = IntPoly::zero();
    for k in 0..=g {
        let c = h.coeff(k);
        if c.is_zero() {
            continue;
        }
        let mut term = vec![BigInt::zero(); g + k + 1];
        for j in 0..=k {
            term[g - k + 2 * j] = &c * binomial(k, j) * lb.pow((k - j) as u32);
        }
        out = out.add(&IntPoly::new(term));
    }
    out
}

/// All complex roots of X^g h(X + ℓ/X) have squared modulus ℓ iff h is
/// totally real with every root α satisfying α² ≤ 4ℓ. Exact via Sturm.
fn trace_poly_is_weil(h: &IntPoly, l: u64) -> Result<bool> {
    let chain = SturmChain::new(h)?;
    let bound = chain.cauchy_bound();
    let distinct_real = chain.count_in(&(-bound.clone()), &bound);
    // degree of the squarefree part = number of distinct complex roots
    let intervals = isolate_real_roots(h)?;
    debug_assert_eq!(intervals.len(), distinct_real);
    // distinct complex roots = degree of the squarefree part; h is totally
    // real exactly when the distinct real roots account for all of them
    if distinct_real != squarefree_degree(h)? {
        return Ok(false);
    }
    // every real root alpha must satisfy alpha^2 <= 4l
    let four_l = 4 * l as i64;
    let bound_poly = IntPoly::from_i64(&[four_l, 0, -1]); // 4l - Y^2
    for iso in &intervals {
        if sign_at_real_root(h, iso, &bound_poly)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree of the squarefree part of h (number of distinct complex roots).
fn squarefree_degree(h: &IntPoly) -> Result<usize> {
    // rational-gcd degree via the Sturm machinery's normalization: reuse
    // resultant-free route — repeated gcd with derivative over Q
    let mut a: Vec<num_rational::BigRational> = h
        .coeffs()
        .iter()
        .map(|c| num_rational::BigRational::from_integer(c.clone()))
        .collect();
    let mut b: Vec<num_rational::BigRational> = {
        let d = h.derivative();
        d.coeffs()
            .iter()
            .map(|c| num_rational::BigRational::from_integer(c.clone()))
            .collect()
    };
    let trim = |v: &mut Vec<num_rational::BigRational>| {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let deg = a.len() - 1;
    while !b.is_empty() {
        // a mod b
        let db = b.len() - 1;
        let lc = b.last().unwrap().clone();
        let mut r = a.clone();
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let q = r.last().unwrap() / &lc;
            for j in 0..=db {
                let adj = &q * &b[j];
                r[k + j] -= adj;
            }
            r.pop();
            trim(&mut r);
            if r.len() <= db {
                break;
            }
        }
        trim(&mut r);
        a = b;
        b = r;
    }
    let gcd_deg = a.len() - 1;
    Ok(deg - gcd_deg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_one_examples() {
        // N1 = 9 over F_5: charpoly X^2 + 3X + 5, middle 3, ordinary
        let fd = l_polynomial(&[9], 5, 1).unwrap();
        assert_eq!(fd.charpoly, IntPoly::from_i64(&[5, 3, 1]));
        assert_eq!(fd.middle, BigInt::from(3));
        assert!(fd.is_ordinary());
        // N1 = 8 over F_7: X^2 + 7, supersingular
        let fd = l_polynomial(&[8], 7, 1).unwrap();
        assert_eq!(fd.charpoly, IntPoly::from_i64(&[7, 0, 1]));
        assert_eq!(fd.middle, BigInt::zero());
        assert!(!fd.is_ordinary());
    }

    #[test]
    fn trivial_counts_give_zero_traces() {
        // N_i = l^i + 1 for all i: a_1..a_g = 0
        for (l, g) in [(5u64, 2usize), (3, 3)] {
            let counts: Vec<u64> = (1..=g).map(|i| l.pow(i as u32) + 1).collect();
            let fd = l_polynomial(&counts, l, g).unwrap();
            for k in 1..=g {
                assert_eq!(fd.lpoly[k], BigInt::zero());
            }
            // zero power sums give the norm form X^{2g} + l^g (all
            // odd-index coefficients vanish and the middle is 0)
            let mut expected = vec![0i64; 2 * g + 1];
            expected[0] = (l as i64).pow(g as u32);
            expected[2 * g] = 1;
            assert_eq!(fd.charpoly, IntPoly::from_i64(&expected));
            assert_eq!(fd.middle, BigInt::zero());
        }
    }

    #[test]
    fn rejects_impossible_counts() {
        // N1 = 100 over F_5 wildly violates the Weil bound
        assert!(l_polynomial(&[100], 5, 1).is_err());
        // N1 forces s1 = 0 but N2 gives s2 = -1 -> e2 = 1/2 non-integral
        assert!(l_polynomial(&[6, 27], 5, 2).is_err());
        // integral but non-Weil: counts [0, 20] over F_5 produce the trace
        // polynomial (Y-1)(Y-5), whose root 5 exceeds 2*sqrt(5)
        assert!(l_polynomial(&[0, 20], 5, 2).is_err());
        // the nearby Weil-consistent pair is accepted
        assert!(l_polynomial(&[6, 28], 5, 2).is_ok());
    }

    #[test]
    fn real_weil_examples() {
        // g = 1: charpoly X^2+3X+5 -> h = Y + 3, N = -3
        let fd = l_polynomial(&[9], 5, 1).unwrap();
        let (h, n) = real_weil(&fd).unwrap();
        assert_eq!(h.h, IntPoly::from_i64(&[3, 1]));
        assert_eq!(n, BigInt::from(-3));
        // charpoly (X^2 + l)^g -> h = Y^g, N = 0; counts with s1 = s3 = 0
        // and s2 = -2*g*l realize it
        let fd = l_polynomial(&[4, 28, 28], 3, 3).unwrap();
        assert_eq!(fd.charpoly, IntPoly::from_i64(&[3, 0, 1]).pow(3));
        let (h, n) = real_weil(&fd).unwrap();
        assert_eq!(h.h, IntPoly::from_i64(&[0, 0, 0, 1]));
        assert_eq!(n, BigInt::zero());
        // zero power sums instead give the norm form X^6 + 27 and h = Y^3 - 9Y
        let fd = l_polynomial(&[4, 10, 28], 3, 3).unwrap();
        let (h, n) = real_weil(&fd).unwrap();
        assert_eq!(h.h, IntPoly::from_i64(&[0, -9, 0, 1]));
        assert_eq!(n, BigInt::zero());
    }

    #[test]
    fn real_weil_roundtrip_g2() {
        // forward expansion of h = Y^2 - Y - 1 at l = 2 then inversion
        let h = IntPoly::from_i64(&[-1, -1, 1]);
        let p = expand_real_weil(&h, 2);
        assert_eq!(p, IntPoly::from_i64(&[4, -2, 3, -1, 1]));
        // invert through a synthetic FrobeniusData: derive counts from h
        // s1 = trace of Frobenius roots... easier: direct extraction
        let lpoly: Vec<BigInt> = p.coeffs().iter().rev().cloned().collect();
        let fd = FrobeniusData {
            l: 2,
            genus: 2,
            counts: vec![],
            lpoly,
            charpoly: p.clone(),
            middle: p.coeff(2),
        };
        let (h2, n) = real_weil(&fd).unwrap();
        assert_eq!(h2.h, h);
        assert_eq!(n, BigInt::from(-1));
        assert_eq!(expand_real_weil(&h2.h, 2), p);
    }

    #[test]
    fn middle_congruent_to_h0() {
        // middle = (-1)^g N + l*alpha, i.e. middle = h(0) (mod l)
        for (counts, l, g) in [(vec![9u64], 5u64, 1usize), (vec![8], 7, 1), (vec![6, 26, 108], 5, 3)] {
            let fd = l_polynomial(&counts, l, g).unwrap();
            let (h, n) = real_weil(&fd).unwrap();
            let lb = BigInt::from(l);
            use num_integer::Integer;
            assert_eq!(
                fd.middle.mod_floor(&lb),
                h.h.coeff(0).mod_floor(&lb),
                "middle = h(0) mod l"
            );
            let signed = if g % 2 == 1 { -n } else { n };
            assert_eq!(fd.middle.mod_floor(&lb), signed.mod_floor(&lb));
        }
    }

    #[test]
    fn frozen_family_p7_t1_l11() {
        // family curve p=7, t=1 at l=11: counts from two independent
        // implementations of the exhaustive count
        let fd = l_polynomial(&[12, 122, 1170], 11, 3).unwrap();
        assert_eq!(
            fd.charpoly,
            IntPoly::from_i64(&[1331, 0, 0, -54, 0, 0, 1])
        );
        assert_eq!(fd.middle, BigInt::from(-54));
        assert!(fd.is_ordinary()); // -54 = 1 mod 11
        let (h, n) = real_weil(&fd).unwrap();
        assert_eq!(h.h, IntPoly::from_i64(&[-54, -33, 0, 1]));
        assert_eq!(n, BigInt::from(54));
    }
}
