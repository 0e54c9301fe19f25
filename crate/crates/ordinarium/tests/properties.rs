//! Property tests for the exact-arithmetic invariants.

use num_bigint::BigInt;
use ordinarium::hypell::pow_series_mod;
use ordinarium::nf::{factor, factor_degree_pattern, resultant, FpPoly, IntPoly};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 1..6)
        .prop_map(|c| IntPoly::from_i64(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn resultant_swap_sign(a in small_poly(), b in small_poly()) {
        let rab = resultant(&a, &b).unwrap();
        let rba = resultant(&b, &a).unwrap();
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let expected = if (da * db) % 2 == 1 { -rba.clone() } else { rba.clone() };
        prop_assert_eq!(rab, expected);
    }

    #[test]
    fn resultant_multiplicative_in_second_argument(
        a in small_poly(), b in small_poly(), c in small_poly()
    ) {
        let bc = b.mul(&c);
        let lhs = resultant(&a, &bc).unwrap();
        let rhs = resultant(&a, &b).unwrap() * resultant(&a, &c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factor_pattern_partitions_degree(
        l in prop::sample::select(vec![2u64, 3, 5, 7, 13]),
        coeffs in prop::collection::vec(0u64..13, 2..10)
    ) {
        let f = FpPoly::new(l, coeffs);
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let pat = factor_degree_pattern(&f).unwrap();
        let total: usize = pat.iter().map(|(d, m)| d * m).sum();
        prop_assert_eq!(total, f.degree().unwrap());
        // squarefree inputs have all multiplicities 1
        if f.is_squarefree() {
            prop_assert!(pat.iter().all(|&(_, m)| m == 1));
        }
    }

    #[test]
    fn factorization_reassembles(
        l in prop::sample::select(vec![2u64, 3, 5, 11]),
        coeffs in prop::collection::vec(0u64..11, 2..9)
    ) {
        let f = FpPoly::new(l, coeffs);
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let mut prod = FpPoly::one(l);
        for (g, m) in factor(&f).unwrap() {
            for _ in 0..m {
                prod = prod.mul(&g);
            }
        }
        prop_assert_eq!(prod, f.monic());
    }

    #[test]
    fn power_series_matches_exact_powering(
        l in prop::sample::select(vec![3u64, 5, 7, 11]),
        coeffs in prop::collection::vec(0u64..11, 2..6),
        e in 1u64..8,
    ) {
        let f = FpPoly::new(l, coeffs.clone());
        prop_assume!(!f.is_zero());
        let n = (3 * l) as usize; // deep enough to cross stuck indices
        let got = pow_series_mod(&f, e, n).unwrap();
        // oracle: exact BigInt powering of the lifted polynomial
        let mut acc = vec![BigInt::from(1)];
        for _ in 0..e {
            let mut out = vec![BigInt::from(0); acc.len() + coeffs.len() - 1];
            for (i, x) in acc.iter().enumerate() {
                for (j, &y) in coeffs.iter().enumerate() {
                    out[i + j] += x * BigInt::from(y);
                }
            }
            acc = out;
        }
        for k in 0..n {
            use num_integer::Integer;
            use num_traits::ToPrimitive;
            let want = acc
                .get(k)
                .map(|c| c.mod_floor(&BigInt::from(l)).to_u64().unwrap())
                .unwrap_or(0);
            prop_assert_eq!(got[k], want, "coefficient {}", k);
        }
    }
}
