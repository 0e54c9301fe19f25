//! Real-root isolation and exact sign evaluation at algebraic numbers, via
//! Sturm chains over exact rationals.
//!
//! This backs the Ramanujan-bound validation: |A(θ)| ≤ 2√p is decided as
//! sign(4p − A(θ)²) ≥ 0 at every real root θ of the defining polynomial,
//! with no floating point anywhere.

use super::intpoly::IntPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type RatPoly = Vec<BigRational>;

fn to_rat(f: &IntPoly) -> RatPoly {
    f.coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn trim(mut f: RatPoly) -> RatPoly {
    while f.last().map_or(false, |c| c.is_zero()) {
        f.pop();
    }
    f
}

fn deriv(f: &RatPoly) -> RatPoly {
    if f.len() <= 1 {
        return vec![];
    }
    f[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i + 1)))
        .collect()
}

fn rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let db = b.len() - 1;
    let lc = b.last().unwrap();
    let mut r = a.clone();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let q = r.last().unwrap() / lc;
        for j in 0..=db {
            let adj = &q * &b[j];
            r[k + j] -= adj;
        }
        r.pop();
        r = trim(r);
        if r.len() <= db {
            break;
        }
    }
    trim(r)
}

fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut a = trim(a.clone());
    let mut b = trim(b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn eval(f: &RatPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in f.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of the squarefree part of a polynomial.
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(f: &IntPoly) -> Result<Self> {
        let f = trim(to_rat(f));
        if f.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let d = deriv(&f);
        let sqfree = if d.is_empty() {
            f.clone()
        } else {
            let g = gcd(&f, &d);
            if g.len() <= 1 {
                f.clone()
            } else {
                // exact division f / g
                let mut q = vec![BigRational::zero(); f.len() - g.len() + 1];
                let mut r = f.clone();
                let lc = g.last().unwrap().clone();
                for k in (0..q.len()).rev() {
                    let c = &r[k + g.len() - 1] / &lc;
                    q[k] = c.clone();
                    for j in 0..g.len() {
                        let adj = &c * &g[j];
                        r[k + j] -= adj;
                    }
                }
                trim(q)
            }
        };
        let mut chain = vec![sqfree.clone()];
        let d = deriv(&sqfree);
        if !d.is_empty() {
            chain.push(d);
            loop {
                let n = chain.len();
                let r = rem(&chain[n - 2], &chain[n - 1]);
                if r.is_empty() {
                    break;
                }
                chain.push(r.iter().map(|c| -c).collect());
            }
        }
        Ok(SturmChain { chain })
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut prev = 0i8;
        let mut v = 0;
        for f in &self.chain {
            let s = sign(&eval(f, x));
            if s != 0 {
                if prev != 0 && s != prev {
                    v += 1;
                }
                prev = s;
            }
        }
        v
    }

    /// Number of distinct real roots in (a, b].
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// A bound B with all real roots in (−B, B].
    pub fn cauchy_bound(&self) -> BigRational {
        let f = &self.chain[0];
        let lc = f.last().unwrap().abs();
        let mut m = BigRational::zero();
        for c in &f[..f.len() - 1] {
            let a = c.abs() / &lc;
            if a > m {
                m = a;
            }
        }
        m + BigRational::one()
    }
}

/// Isolating intervals (a, b], ascending, one per distinct real root.
pub fn isolate_real_roots(f: &IntPoly) -> Result<Vec<(BigRational, BigRational)>> {
    let chain = SturmChain::new(f)?;
    let b = chain.cauchy_bound();
    let a = -b.clone();
    let total = chain.count_in(&a, &b);
    let mut out = vec![];
    let mut stack = vec![(a, b, total)];
    while let Some((lo, hi, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        let left = chain.count_in(&lo, &mid);
        stack.push((mid.clone(), hi, n - left));
        stack.push((lo, mid, left));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Exact sign of g(θ) where θ is the unique root of f in the isolating
/// interval (lo, hi]. Bisection refines the interval until g is sign-constant
/// past the root; returns 0 exactly when g(θ) = 0.
pub fn sign_at_real_root(
    f: &IntPoly,
    iso: &(BigRational, BigRational),
    g: &IntPoly,
) -> Result<i8> {
    let f_chain = SturmChain::new(f)?;
    let (mut lo, mut hi) = iso.clone();
    if f_chain.count_in(&lo, &hi) != 1 {
        return Err(Error::Precondition(
            "interval does not isolate exactly one root".into(),
        ));
    }
    if g.is_zero() {
        return Ok(0);
    }
    // shared roots: g(theta) = 0 iff gcd(f, g) vanishes at theta
    let common = gcd(&to_rat(f), &to_rat(g));
    if common.len() > 1 {
        let cpoly = IntPoly::new(
            {
                // clear denominators for SturmChain::new
                let mut den = BigInt::one();
                for c in &common {
                    den = num_integer::lcm(den, c.denom().clone());
                }
                common
                    .iter()
                    .map(|c| c.numer() * (&den / c.denom()))
                    .collect::<Vec<_>>()
            },
        );
        let cchain = SturmChain::new(&cpoly)?;
        if cchain.count_in(&lo, &hi) > 0 {
            // the shared root inside the interval is theta itself
            return Ok(0);
        }
    }
    let g_chain = SturmChain::new(g)?;
    let two = BigRational::from_integer(2.into());
    loop {
        let ghi = g.eval_rational(&hi);
        if g_chain.count_in(&lo, &hi) == 0 && !ghi.is_zero() {
            return Ok(sign(&ghi));
        }
        let mid = (&lo + &hi) / &two;
        if f_chain.count_in(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn isolates_quadratic() {
        let f = IntPoly::from_i64(&[-5, 0, 1]); // roots +-sqrt5
        let roots = isolate_real_roots(&f).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].1 <= q(0) || roots[0].0 < q(-2));
        // no real roots for x^2+1
        assert!(isolate_real_roots(&IntPoly::from_i64(&[1, 0, 1]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn isolates_cubic_totally_real() {
        // x^3-x^2-2x+1: three real roots (totally real cubic field)
        let f = IntPoly::from_i64(&[1, -2, -1, 1]);
        assert_eq!(isolate_real_roots(&f).unwrap().len(), 3);
    }

    #[test]
    fn sign_at_sqrt5() {
        let f = IntPoly::from_i64(&[-5, 0, 1]);
        let roots = isolate_real_roots(&f).unwrap();
        // g = x - 2: negative at -sqrt5, positive at +sqrt5
        let g = IntPoly::from_i64(&[-2, 1]);
        let signs: Vec<i8> = roots
            .iter()
            .map(|r| sign_at_real_root(&f, r, &g).unwrap())
            .collect();
        assert_eq!(signs, vec![-1, 1]);
        // g = x^2 - 5 vanishes at both
        let g0 = IntPoly::from_i64(&[-5, 0, 1]);
        for r in &roots {
            assert_eq!(sign_at_real_root(&f, r, &g0).unwrap(), 0);
        }
        // 4*2 - x^2 = 8 - x^2 is positive at both roots (|sqrt5| <= 2 sqrt2)
        let bound = IntPoly::from_i64(&[8, 0, -1]);
        for r in &roots {
            assert_eq!(sign_at_real_root(&f, r, &bound).unwrap(), 1);
        }
        // 4 - x^2 is negative (sqrt5 > 2)
        let tight = IntPoly::from_i64(&[4, 0, -1]);
        for r in &roots {
            assert_eq!(sign_at_real_root(&f, r, &tight).unwrap(), -1);
        }
    }
}
