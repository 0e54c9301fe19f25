//! Polynomials over F_ℓ and their factorization structure.
//!
//! The factorization pipeline is squarefree decomposition (char-p aware, so
//! p-th-power parts are handled), distinct-degree splitting via
//! gcd(x^{ℓ^d} − x, ·), and Cantor–Zassenhaus equal-degree splitting where
//! actual irreducible factors are required. Degrees here are tiny (≤ 13); the
//! code favors clarity over asymptotics.

use super::intpoly::IntPoly;
use super::primes::require_prime;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use std::fmt;

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u128(mut a: u64, mut e: u128, m: u64) -> u64 {
    let mut r = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Inverse mod a prime.
fn invmod(a: u64, p: u64) -> u64 {
    powmod_u128(a, (p - 2) as u128, p)
}

/// Polynomial over F_ℓ: reduced coefficients ascending, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(modulus: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= modulus;
        }
        while coeffs.last().map_or(false, |&c| c == 0) {
            coeffs.pop();
        }
        FpPoly { modulus, coeffs }
    }

    pub fn zero(modulus: u64) -> Self {
        FpPoly { modulus, coeffs: vec![] }
    }

    pub fn one(modulus: u64) -> Self {
        FpPoly::new(modulus, vec![1])
    }

    pub fn x(modulus: u64) -> Self {
        FpPoly::new(modulus, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    fn p(&self) -> u64 {
        self.modulus
    }

    pub fn add(&self, rhs: &FpPoly) -> FpPoly {
        let p = self.p();
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPoly::new(p, (0..n).map(|k| (self.coeff(k) + rhs.coeff(k)) % p).collect())
    }

    pub fn sub(&self, rhs: &FpPoly) -> FpPoly {
        let p = self.p();
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPoly::new(
            p,
            (0..n)
                .map(|k| (self.coeff(k) + p - rhs.coeff(k) % p) % p)
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &FpPoly) -> FpPoly {
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(self.p());
        }
        let p = self.p();
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, p)) % p;
            }
        }
        FpPoly::new(p, out)
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        let p = self.p();
        FpPoly::new(p, self.coeffs.iter().map(|&a| mulmod(a, c, p)).collect())
    }

    pub fn monic(&self) -> FpPoly {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(lc) => self.scale(invmod(lc, self.p())),
        }
    }

    fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    /// Remainder of self by rhs (rhs nonzero).
    pub fn rem(&self, rhs: &FpPoly) -> FpPoly {
        let p = self.p();
        let dd = rhs.degree().expect("division by zero polynomial");
        let lcinv = invmod(rhs.leading().unwrap(), p);
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let q = mulmod(*r.last().unwrap(), lcinv, p);
            if q != 0 {
                for j in 0..=dd {
                    r[k + j] = (r[k + j] + p - mulmod(q, rhs.coeffs[j], p) % p) % p;
                }
            }
            r.pop();
            while r.last().map_or(false, |&c| c == 0) && r.len() > dd {
                r.pop();
            }
        }
        FpPoly::new(p, r)
    }

    /// Exact quotient (remainder must vanish).
    pub fn div_exact(&self, rhs: &FpPoly) -> FpPoly {
        let p = self.p();
        let dd = rhs.degree().expect("division by zero polynomial");
        let lcinv = invmod(rhs.leading().unwrap(), p);
        let mut r = self.coeffs.clone();
        let dn = match self.degree() {
            None => return FpPoly::zero(p),
            Some(d) => d,
        };
        assert!(dn >= dd, "inexact division");
        let mut q = vec![0u64; dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let c = mulmod(r[k + dd], lcinv, p);
            q[k] = c;
            if c != 0 {
                for j in 0..=dd {
                    r[k + j] = (r[k + j] + p - mulmod(c, rhs.coeffs[j], p) % p) % p;
                }
            }
        }
        assert!(r.iter().all(|&c| c == 0), "inexact division");
        FpPoly::new(p, q)
    }

    pub fn gcd(&self, rhs: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p();
        if self.coeffs.len() <= 1 {
            return FpPoly::zero(p);
        }
        FpPoly::new(
            p,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| mulmod(c, (i as u64 + 1) % p, p))
                .collect(),
        )
    }

    /// self^e mod m.
    pub fn powmod(&self, mut e: u128, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p();
        let x = x % p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mulmod(acc, x, p) + c) % p;
        }
        acc
    }

    /// gcd(f, f') is constant. (When f' = 0, f is a p-th power and not squarefree.)
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let d = self.derivative();
        if d.is_zero() {
            return self.degree() == Some(0);
        }
        self.gcd(&d).degree() == Some(0)
    }

    /// p-th root of a polynomial whose only terms are x^{kp}; over the prime
    /// field the coefficient map is the identity.
    fn pth_root(&self) -> FpPoly {
        let p = self.p() as usize;
        let mut out = vec![];
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                debug_assert!(k % p == 0, "not a p-th power");
            }
            if k % p == 0 {
                out.push(c);
            }
        }
        FpPoly::new(self.p(), out)
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly(mod {}; {:?})", self.modulus, self.coeffs)
    }
}

/// Coefficient-wise reduction of an integer polynomial mod a prime.
pub fn poly_mod_p(f: &IntPoly, prime: u64) -> Result<FpPoly> {
    require_prime(prime)?;
    let p = BigInt::from(prime);
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.mod_floor(&p);
            debug_assert!(!r.is_negative());
            r.to_u64().expect("residue fits u64")
        })
        .collect();
    Ok(FpPoly::new(prime, coeffs))
}

/// Squarefree decomposition over F_p: pairs (g_i, m_i) with f = lc * prod g_i^{m_i},
/// the g_i monic squarefree and pairwise coprime.
pub fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.modulus() as usize;
    let f = f.monic();
    if f.degree() == Some(0) {
        return vec![];
    }
    let mut out = vec![];
    let deriv = f.derivative();
    if deriv.is_zero() {
        for (g, m) in squarefree_decomposition(&f.pth_root()) {
            out.push((g, m * p));
        }
        return out;
    }
    let c = f.gcd(&deriv);
    let mut w = f.div_exact(&c);
    let mut c = c;
    let mut i = 1usize;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if z.degree().map_or(false, |d| d > 0) {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_one() {
        for (g, m) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree splitting of a monic squarefree polynomial: pairs
/// (d, product of the irreducible factors of degree d), d ascending.
pub fn distinct_degree_split(f: &FpPoly) -> Vec<(usize, FpPoly)> {
    let p = f.modulus();
    let mut rest = f.monic();
    let x = FpPoly::x(p);
    let mut h = x.rem(&rest);
    let mut out = vec![];
    let mut d = 0usize;
    while rest.degree().map_or(false, |dr| dr >= 2 * (d + 1)) {
        d += 1;
        h = h.powmod(p as u128, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree().map_or(false, |dg| dg > 0) {
            out.push((d, g.clone()));
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
        }
    }
    if rest.degree().map_or(false, |dr| dr > 0) {
        out.push((rest.degree().unwrap(), rest));
    }
    out
}

/// Multiset of (irreducible factor degree, multiplicity), one entry per
/// irreducible factor, sorted descending by degree then multiplicity.
pub fn factor_degree_pattern(f: &FpPoly) -> Result<Vec<(usize, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut pattern = vec![];
    for (g, mult) in squarefree_decomposition(f) {
        for (d, prod) in distinct_degree_split(&g) {
            let count = prod.degree().unwrap() / d;
            for _ in 0..count {
                pattern.push((d, mult));
            }
        }
    }
    pattern.sort_unstable_by(|a, b| b.cmp(a));
    Ok(pattern)
}

/// Equal-degree splitting (Cantor–Zassenhaus) of a monic squarefree product
/// of irreducibles all of degree d. Splitting elements are tried in a fixed
/// deterministic order so factor lists are reproducible.
fn equal_degree_factor(f: &FpPoly, d: usize, out: &mut Vec<FpPoly>) {
    let p = f.modulus();
    let n = f.degree().unwrap();
    if n == d {
        out.push(f.monic());
        return;
    }
    if p == 2 {
        // trace-map splitting: T(r) = r + r^2 + ... + r^{2^{d-1}} mod f
        let mut attempt = 1u64;
        loop {
            let r = deterministic_poly(p, n, attempt);
            let mut t = r.rem(f);
            let mut power = r.rem(f);
            for _ in 1..d {
                power = power.mul(&power.clone()).rem(f);
                t = t.add(&power);
            }
            let g = t.gcd(f);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < n {
                equal_degree_factor(&g, d, out);
                equal_degree_factor(&f.div_exact(&g), d, out);
                return;
            }
            attempt += 1;
        }
    }
    let e = ((p as u128).pow(d as u32) - 1) / 2;
    let mut attempt = 1u64;
    loop {
        let r = deterministic_poly(p, n, attempt);
        let s = r.powmod(e, f).sub(&FpPoly::one(p));
        let g = s.gcd(f);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            equal_degree_factor(&g, d, out);
            equal_degree_factor(&f.div_exact(&g), d, out);
            return;
        }
        attempt += 1;
    }
}

/// k-th candidate splitting polynomial of degree < n, enumerated in a fixed
/// order (base-p digits of k).
fn deterministic_poly(p: u64, n: usize, k: u64) -> FpPoly {
    let mut coeffs = vec![0u64; n.max(1)];
    let mut v = k;
    let mut i = 0usize;
    while v > 0 && i < coeffs.len() {
        coeffs[i] = v % p;
        v /= p;
        i += 1;
    }
    coeffs[0] = coeffs[0].wrapping_add(k) % p; // stir constants so attempt 1 = x-ish shifts
    FpPoly::new(p, coeffs)
}

/// Full factorization into monic irreducibles with multiplicities, sorted by
/// (degree, coefficients) for determinism.
pub fn factor(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out: Vec<(FpPoly, usize)> = vec![];
    for (g, mult) in squarefree_decomposition(f) {
        for (d, prod) in distinct_degree_split(&g) {
            let mut irr = vec![];
            equal_degree_factor(&prod, d, &mut irr);
            for q in irr {
                out.push((q, mult));
            }
        }
    }
    out.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs(), a.1).cmp(&(b.0.degree(), b.0.coeffs(), b.1))
    });
    Ok(out)
}
