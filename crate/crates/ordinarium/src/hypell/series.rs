//! Truncated coefficients of f(x)^e over F_ℓ and the Cartier–Manin matrix.
//!
//! The matrix needs the coefficients of f^{(ℓ−1)/2} up to x^{gℓ−1}, which for
//! the large-ℓ density scans is far too deep for dense powering. Instead we
//! use the holonomic recurrence from h = f^e, f·h′ = e·f′·h:
//!
//!   (k+1)·f_0·h_{k+1} = e·Σ_j (j+1) f_{j+1} h_{k−j} − Σ_j (k+1−j) f_j h_{k+1−j}
//!
//! The division by (k+1) hits multiples of ℓ, so the recurrence runs over
//! Z/ℓ^w with w chosen so that the total ℓ-valuation divided out still leaves
//! one exact ℓ-adic digit at the end. When ℓ^w does not fit machine words the
//! code falls back to dense truncated powering.

use crate::nf::FpPoly;
use crate::{Error, Result};

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of a mod m for odd prime-power m with gcd(a, m) = 1.
fn invmod(a: u64, m: u64) -> u64 {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "not invertible");
    t.rem_euclid(m as i128) as u64
}

/// First n coefficients of f^e reduced mod ℓ.
pub fn pow_series_mod(f: &FpPoly, e: u64, n: usize) -> Result<Vec<u64>> {
    let l = f.modulus();
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if n == 0 {
        return Ok(vec![]);
    }
    if e == 0 {
        let mut out = vec![0; n];
        out[0] = 1;
        return Ok(out);
    }
    // strip the x-power: f = x^a u with u(0) != 0
    let a = f.coeffs().iter().position(|&c| c != 0).unwrap();
    let shift = (a as u128) * (e as u128);
    if shift >= n as u128 {
        return Ok(vec![0; n]);
    }
    let shift = shift as usize;
    let u: Vec<u64> = f.coeffs()[a..].to_vec();
    let n_eff = n - shift;

    // total l-valuation divided out across the recurrence is
    // v_l((n_eff - 1)!), by Legendre's formula
    let mut val = 0u64;
    let mut pl = l;
    while pl <= (n_eff as u64).saturating_sub(1) {
        val += (n_eff as u64 - 1) / pl;
        match pl.checked_mul(l) {
            Some(next) => pl = next,
            None => break,
        }
    }
    let w = val as u32 + 1;

    let modulus = (l as u128).checked_pow(w).filter(|&m| m < (1u128 << 62));
    let body = match modulus {
        Some(m) => recurrence_series(&u, e, n_eff, l, m as u64),
        None => dense_pow_trunc(&u, e, n_eff, l),
    };
    let mut out = vec![0u64; n];
    out[shift..].copy_from_slice(&body);
    Ok(out)
}

/// Holonomic recurrence over Z/m, m = ℓ^w; returns values reduced mod ℓ.
fn recurrence_series(u: &[u64], e: u64, n: usize, l: u64, m: u64) -> Vec<u64> {
    let d = u.len() - 1;
    let u0 = u[0] % m;
    let u0_inv = invmod(u0, m);
    let e_red = e % m;
    let mut h = vec![0u64; n];
    h[0] = powmod(u0, e, m);
    for k in 0..n.saturating_sub(1) {
        // S = e * sum_{j=0..min(d-1,k)} (j+1) u_{j+1} h_{k-j}
        //     - sum_{j=1..min(d,k)} (k+1-j) u_j h_{k+1-j}
        let mut s: u64 = 0;
        for j in 0..d.min(k + 1) {
            // (j+1) u_{j+1} stays tiny: both factors are below l
            let term = mulmod((j as u64 + 1) * u[j + 1] % m, h[k - j], m);
            s = (s + mulmod(e_red, term, m)) % m;
        }
        for j in 1..=d.min(k) {
            let term = mulmod((k + 1 - j) as u64 % m * u[j] % m, h[k + 1 - j], m);
            s = (s + m - term) % m;
        }
        // divide by (k+1) u_0, peeling l-valuation exactly
        let mut k1 = (k + 1) as u64;
        let mut sv = s;
        while k1 % l == 0 {
            debug_assert_eq!(sv % l, 0, "recurrence numerator not divisible by l");
            sv /= l;
            k1 /= l;
        }
        let k1_inv = invmod(k1 % m, m);
        h[k + 1] = mulmod(mulmod(sv, k1_inv, m), u0_inv, m);
    }
    h.iter().map(|&x| x % l).collect()
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
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

/// Dense binary powering with truncation at n coefficients, over F_ℓ.
fn dense_pow_trunc(u: &[u64], e: u64, n: usize, l: u64) -> Vec<u64> {
    fn mul_trunc(a: &[u64], b: &[u64], n: usize, l: u64) -> Vec<u64> {
        let mut out = vec![0u64; n.min(a.len() + b.len() - 1)];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 || i >= n {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                out[i + j] = (out[i + j] + mulmod(x, y, l)) % l;
            }
        }
        out
    }
    let mut base: Vec<u64> = u.iter().map(|&c| c % l).collect();
    base.truncate(n);
    let mut acc = vec![1u64];
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_trunc(&acc, &base, n, l);
        }
        e >>= 1;
        if e > 0 {
            base = mul_trunc(&base, &base, n, l);
        }
    }
    acc.resize(n, 0);
    acc
}

/// Cartier–Manin (Hasse–Witt) matrix of y² = f(x): entry (i, j) is the
/// coefficient of x^{iℓ−j} in f^{(ℓ−1)/2}, 1 ≤ i, j ≤ g, together with its
/// rank over F_ℓ. Invertibility detects ordinariness for curves over the
/// prime field.
pub fn hasse_witt(f: &FpPoly, genus: usize) -> Result<(Vec<Vec<u64>>, usize)> {
    let l = f.modulus();
    if l == 2 {
        return Err(Error::Precondition("Cartier-Manin needs odd l".into()));
    }
    let n = genus * l as usize;
    let series = pow_series_mod(f, (l - 1) / 2, n)?;
    let mut m = vec![vec![0u64; genus]; genus];
    for i in 1..=genus {
        for j in 1..=genus {
            // the x^{il-j} coefficient; the exponent goes negative when
            // l < g, where the entry is simply 0
            m[i - 1][j - 1] = if i * l as usize >= j {
                series[i * l as usize - j]
            } else {
                0
            };
        }
    }
    let rank = rank_mod(&m, l);
    Ok((m, rank))
}

/// Rank of a small matrix over F_ℓ by Gaussian elimination.
pub fn rank_mod(m: &[Vec<u64>], l: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x % l).collect()).collect();
    let mut rank = 0usize;
    for col in 0..cols {
        let piv = (rank..rows).find(|&r| a[r][col] != 0);
        let Some(piv) = piv else { continue };
        a.swap(rank, piv);
        let inv = powmod(a[rank][col], l - 2, l);
        for x in a[rank].iter_mut() {
            *x = mulmod(*x, inv, l);
        }
        for r in 0..rows {
            if r != rank && a[r][col] != 0 {
                let c = a[r][col];
                for cidx in 0..cols {
                    let sub = mulmod(c, a[rank][cidx], l);
                    a[r][cidx] = (a[r][cidx] + l - sub) % l;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    /// Oracle: exact integer powering, reduced mod l.
    fn naive_pow_mod(f: &[u64], e: u64, n: usize, l: u64) -> Vec<u64> {
        let mut acc = vec![BigInt::from(1)];
        let base: Vec<BigInt> = f.iter().map(|&c| BigInt::from(c)).collect();
        for _ in 0..e {
            let mut out = vec![BigInt::from(0); acc.len() + base.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in base.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            acc = out;
        }
        (0..n)
            .map(|k| {
                use num_integer::Integer;
                use num_traits::ToPrimitive;
                acc.get(k)
                    .map(|c| c.mod_floor(&BigInt::from(l)).to_u64().unwrap())
                    .unwrap_or(0)
            })
            .collect()
    }

    #[test]
    fn recurrence_matches_naive() {
        // exercise stuck indices (n > l), zero constant terms, both routes
        let cases: Vec<(u64, Vec<u64>, u64, usize)> = vec![
            (3, vec![1, 0, 2, 0, 0, 0, 2, 1], 1, 25),
            (3, vec![2, 1, 1], 5, 30),
            (5, vec![1, 3, 0, 4], 2, 40),
            (5, vec![0, 2, 3, 1], 7, 40), // f(0) = 0
            (7, vec![3, 0, 0, 1], 3, 50),
            (11, vec![1, 10, 0, 0, 3, 0, 0, 1], 5, 60),
            (13, vec![4, 0, 1], 6, 70),
        ];
        for (l, coeffs, e, n) in cases {
            let f = FpPoly::new(l, coeffs.clone());
            let got = pow_series_mod(&f, e, n).unwrap();
            let want = naive_pow_mod(&coeffs, e, n, l);
            assert_eq!(got, want, "l={} f={:?} e={}", l, coeffs, e);
        }
    }

    #[test]
    fn half_power_matches_naive() {
        // the Cartier-Manin exponent (l-1)/2 with deep truncation
        for l in [3u64, 5, 7, 11, 13, 17] {
            let coeffs = vec![2 % l, 1, 0, 1]; // x^3 + x + 2
            let f = FpPoly::new(l, coeffs.clone());
            let n = 3 * l as usize;
            let got = pow_series_mod(&f, (l - 1) / 2, n).unwrap();
            let want = naive_pow_mod(&coeffs, (l - 1) / 2, n, l);
            assert_eq!(got, want, "l={}", l);
        }
    }

    #[test]
    fn dense_fallback_agrees() {
        let u = vec![1u64, 2, 0, 1];
        let dense = dense_pow_trunc(&u, 6, 30, 5);
        let naive = naive_pow_mod(&u, 6, 30, 5);
        assert_eq!(dense, naive);
    }

    #[test]
    fn hasse_witt_examples() {
        // y^2 = x^3+x+1 over F_5: entry is coeff of x^4 in (x^3+x+1)^2 = 2
        let f = FpPoly::new(5, vec![1, 1, 0, 1]);
        let (m, rank) = hasse_witt(&f, 1).unwrap();
        assert_eq!(m, vec![vec![2]]);
        assert_eq!(rank, 1);
        // y^2 = x^3-x over F_7: coeff of x^6 in (x^3-x)^3 is 0
        let g = FpPoly::new(7, vec![0, 6, 0, 1]);
        let (m, rank) = hasse_witt(&g, 1).unwrap();
        assert_eq!(m, vec![vec![0]]);
        assert_eq!(rank, 0);
    }

    #[test]
    fn genus1_entry_matches_trace() {
        // matrix entry = -a_1 of the L-polynomial mod l (= Frobenius trace)
        // 2 = -3 mod 5 for the 9-point curve; 0 = 0 mod 7 for the 8-point one
        assert_eq!((2 + 3) % 5, 0);
        let f = FpPoly::new(5, vec![1, 1, 0, 1]);
        let (m, _) = hasse_witt(&f, 1).unwrap();
        assert_eq!(m[0][0], 2);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_mod(&[vec![1, 2], vec![2, 4]], 5), 1);
        assert_eq!(rank_mod(&[vec![1, 0], vec![0, 3]], 5), 2);
        assert_eq!(rank_mod(&[vec![0, 0], vec![0, 0]], 5), 0);
    }
}
