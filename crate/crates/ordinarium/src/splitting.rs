//! Splitting types of rational primes in number fields, and the joint
//! prime-splitting searches behind the positive-density hypotheses.
//!
//! A prime is *certified* when it does not divide the discriminant of the
//! defining polynomial: there the factor-degree pattern mod p is the true
//! splitting type (all ramification indices 1). Primes dividing the
//! discriminant are never classified — predicates report them as uncertified
//! and scans skip and tally them.

use crate::nf::{factor_degree_pattern, poly_mod_p, primes_up_to, require_prime, NumberField};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Splitting type of p in K: multiset of (inertia degree, ramification index).
///
/// For uncertified primes the parts record the mod-p factorization degrees and
/// multiplicities, which need not be the true inertia/ramification data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingType {
    pub parts: Vec<(usize, usize)>,
    pub certified: bool,
}

impl SplittingType {
    /// The partition of the field degree, ignoring ramification; descending.
    pub fn partition(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self
            .parts
            .iter()
            .flat_map(|&(d, e)| std::iter::repeat(d).take(e))
            .collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }
}

/// Splitting type of a rational prime in K via the Dedekind correspondence.
pub fn splitting_type(k: &NumberField, p: u64) -> Result<SplittingType> {
    require_prime(p)?;
    let fp = poly_mod_p(k.defining_poly(), p)?;
    let pattern = factor_degree_pattern(&fp)?;
    let certified = !k.divides_disc(p);
    debug_assert!(!certified || pattern.iter().all(|&(_, m)| m == 1));
    Ok(SplittingType {
        parts: pattern,
        certified,
    })
}

/// Three-valued outcome for per-prime predicates: never a silent boolean when
/// the splitting type is uncertified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClauseOutcome {
    Holds,
    Fails,
    Uncertified,
}

impl ClauseOutcome {
    pub fn certified(holds: bool) -> Self {
        if holds {
            ClauseOutcome::Holds
        } else {
            ClauseOutcome::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == ClauseOutcome::Holds
    }
}

fn outcome_with(
    k: &NumberField,
    p: u64,
    f: impl Fn(&SplittingType) -> bool,
) -> Result<ClauseOutcome> {
    let st = splitting_type(k, p)?;
    if !st.certified {
        return Ok(ClauseOutcome::Uncertified);
    }
    Ok(ClauseOutcome::certified(f(&st)))
}

/// p inert in K: a single prime above p of full inertia degree.
pub fn is_inert(k: &NumberField, p: u64) -> Result<ClauseOutcome> {
    let n = k.degree();
    outcome_with(k, p, |st| st.parts == vec![(n, 1)])
}

/// p splits into exactly two distinct primes of the same inertia degree.
pub fn splits_two_equal(k: &NumberField, p: u64) -> Result<ClauseOutcome> {
    let n = k.degree();
    outcome_with(k, p, |st| {
        n % 2 == 0 && st.parts.len() == 2 && st.parts[0] == (n / 2, 1) && st.parts[1] == (n / 2, 1)
    })
}

/// Some prime above p has inertia degree 1 (and is unramified).
pub fn has_degree_one(k: &NumberField, p: u64) -> Result<ClauseOutcome> {
    outcome_with(k, p, |st| st.parts.contains(&(1, 1)))
}

/// p splits completely in K.
pub fn splits_completely(k: &NumberField, p: u64) -> Result<ClauseOutcome> {
    let n = k.degree();
    outcome_with(k, p, |st| st.parts == vec![(1, 1); n])
}

/// Per-field predicate of a search clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitPredicate {
    Inert,
    SplitTwoEqual,
    HasDegreeOne,
    CompletelySplit,
    /// Unramified with the given partition of the degree (descending).
    Partition(Vec<usize>),
}

impl SplitPredicate {
    pub fn eval(&self, k: &NumberField, p: u64) -> Result<ClauseOutcome> {
        match self {
            SplitPredicate::Inert => is_inert(k, p),
            SplitPredicate::SplitTwoEqual => splits_two_equal(k, p),
            SplitPredicate::HasDegreeOne => has_degree_one(k, p),
            SplitPredicate::CompletelySplit => splits_completely(k, p),
            SplitPredicate::Partition(target) => {
                let mut t = target.clone();
                t.sort_unstable_by(|a, b| b.cmp(a));
                outcome_with(k, p, |st| st.partition() == t)
            }
        }
    }
}

/// Conjunction of per-field splitting predicates.
#[derive(Clone, Debug)]
pub struct SearchCondition {
    pub clauses: Vec<(NumberField, SplitPredicate)>,
}

impl SearchCondition {
    pub fn new(clauses: Vec<(NumberField, SplitPredicate)>) -> Result<Self> {
        if clauses.is_empty() {
            return Err(Error::Precondition("at least one clause required".into()));
        }
        for (k, pred) in &clauses {
            if k.degree() == 1
                && matches!(pred, SplitPredicate::Inert | SplitPredicate::SplitTwoEqual)
            {
                return Err(Error::Precondition(
                    "degree-1 field has only the trivial splitting pattern; inert/split clauses are meaningless"
                        .into(),
                ));
            }
            if let SplitPredicate::Partition(t) = pred {
                if t.iter().sum::<usize>() != k.degree() {
                    return Err(Error::Precondition(format!(
                        "partition {:?} does not sum to the field degree {}",
                        t,
                        k.degree()
                    )));
                }
            }
        }
        Ok(SearchCondition { clauses })
    }

    /// Conjunction outcome; any uncertified clause makes the prime
    /// uncertified so skipped-prime tallies stay conservative.
    pub fn eval(&self, p: u64) -> Result<ClauseOutcome> {
        let mut fails = false;
        for (k, pred) in &self.clauses {
            match pred.eval(k, p)? {
                ClauseOutcome::Uncertified => return Ok(ClauseOutcome::Uncertified),
                ClauseOutcome::Fails => fails = true,
                ClauseOutcome::Holds => {}
            }
        }
        Ok(if fails {
            ClauseOutcome::Fails
        } else {
            ClauseOutcome::Holds
        })
    }
}

/// Result of a witness search: the least satisfying prime, if any, plus the
/// count of primes skipped as uncertified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: Option<u64>,
    pub skipped_uncertified: u64,
}

/// Least prime in [lo, hi] satisfying every clause at certified splitting
/// types; uncertified primes are skipped and counted.
pub fn search_prime(cond: &SearchCondition, lo: u64, hi: u64) -> Result<SearchOutcome> {
    if lo < 2 {
        return Err(Error::Precondition("range must start at lo >= 2".into()));
    }
    if hi < lo {
        return Err(Error::EmptyRange(lo, hi));
    }
    let mut skipped = 0;
    for p in primes_up_to(hi) {
        if p < lo {
            continue;
        }
        match cond.eval(p)? {
            ClauseOutcome::Holds => {
                return Ok(SearchOutcome {
                    witness: Some(p),
                    skipped_uncertified: skipped,
                })
            }
            ClauseOutcome::Uncertified => skipped += 1,
            ClauseOutcome::Fails => {}
        }
    }
    Ok(SearchOutcome {
        witness: None,
        skipped_uncertified: skipped,
    })
}

/// Empirical density of primes ≤ x satisfying the condition, over certified
/// primes only.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityEstimate {
    pub hits: u64,
    pub certified_total: u64,
    pub skipped_uncertified: u64,
    /// None when no prime was certified.
    pub fraction: Option<f64>,
}

pub fn joint_density_estimate(cond: &SearchCondition, x: u64) -> Result<DensityEstimate> {
    if x < 100 {
        return Err(Error::Precondition("x must be at least 100".into()));
    }
    let mut hits = 0u64;
    let mut total = 0u64;
    let mut skipped = 0u64;
    for p in primes_up_to(x) {
        match cond.eval(p)? {
            ClauseOutcome::Holds => {
                hits += 1;
                total += 1;
            }
            ClauseOutcome::Fails => total += 1,
            ClauseOutcome::Uncertified => skipped += 1,
        }
    }
    Ok(DensityEstimate {
        hits,
        certified_total: total,
        skipped_uncertified: skipped,
        fraction: (total > 0).then(|| hits as f64 / total as f64),
    })
}

/// A prime splitting completely in the quadratic field F and inert in the
/// odd-prime-degree field K. Existence is guaranteed; the scan reports an
/// explicit bound failure rather than "does not exist".
pub fn quadratic_inert_witness(f: &NumberField, k: &NumberField, bound: u64) -> Result<u64> {
    if f.degree() != 2 {
        return Err(Error::Precondition(format!(
            "F must be quadratic, got degree {}",
            f.degree()
        )));
    }
    let q = k.degree() as u64;
    if q < 3 || !crate::nf::is_prime_u64(q) {
        return Err(Error::Precondition(format!(
            "K must have odd prime degree, got {}",
            k.degree()
        )));
    }
    let cond = SearchCondition::new(vec![
        (f.clone(), SplitPredicate::CompletelySplit),
        (k.clone(), SplitPredicate::Inert),
    ])?;
    search_prime(&cond, 2, bound)?
        .witness
        .ok_or(Error::NotFoundBelowBound(bound))
}

/// Joint-splitting hypothesis check: least primes having a degree-1 prime in
/// F and inert (respectively split-two-equal) in K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisWitnesses {
    pub inert_witness: Option<u64>,
    pub split_two_equal_witness: Option<u64>,
    pub bound: u64,
}

pub fn theorem_hypothesis_witnesses(
    f: &NumberField,
    k: &NumberField,
    bound: u64,
) -> Result<HypothesisWitnesses> {
    let base = (f.clone(), SplitPredicate::HasDegreeOne);
    let (inert_witness, split_two_equal_witness) = if k.degree() == 1 {
        // every prime has the trivial pattern in Q; both searches are meaningless
        (None, None)
    } else {
        let inert = search_prime(
            &SearchCondition::new(vec![base.clone(), (k.clone(), SplitPredicate::Inert)])?,
            2,
            bound,
        )?
        .witness;
        let split = search_prime(
            &SearchCondition::new(vec![base, (k.clone(), SplitPredicate::SplitTwoEqual)])?,
            2,
            bound,
        )?
        .witness;
        (inert, split)
    };
    Ok(HypothesisWitnesses {
        inert_witness,
        split_two_equal_witness,
        bound,
    })
}

/// Frequencies of certified splitting-type partitions of primes ≤ x.
/// Partitions are descending; frequencies sum to 1 over certified primes.
pub fn chebotarev_frequency(k: &NumberField, x: u64) -> Result<BTreeMap<Vec<usize>, f64>> {
    if x < 100 {
        return Err(Error::Precondition("x must be at least 100".into()));
    }
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut total = 0u64;
    for p in primes_up_to(x) {
        let st = splitting_type(k, p)?;
        if !st.certified {
            continue;
        }
        *counts.entry(st.partition()).or_insert(0) += 1;
        total += 1;
    }
    Ok(counts
        .into_iter()
        .map(|(part, c)| (part, c as f64 / total as f64))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nf::IntPoly;

    fn nf(coeffs: &[i64]) -> NumberField {
        NumberField::new(IntPoly::from_i64(coeffs)).unwrap()
    }

    fn gauss() -> NumberField {
        nf(&[1, 0, 1])
    }

    fn real_cyclo7() -> NumberField {
        nf(&[1, -2, -1, 1])
    }

    #[test]
    fn splitting_type_examples() {
        let k = gauss();
        let s5 = splitting_type(&k, 5).unwrap();
        assert!(s5.certified);
        assert_eq!(s5.parts, vec![(1, 1), (1, 1)]);
        let s3 = splitting_type(&k, 3).unwrap();
        assert!(s3.certified);
        assert_eq!(s3.parts, vec![(2, 1)]);
        let s2 = splitting_type(&k, 2).unwrap();
        assert!(!s2.certified); // 2 | disc = -4
        assert_eq!(s2.parts, vec![(1, 2)]);
    }

    #[test]
    fn predicate_examples() {
        assert_eq!(splits_two_equal(&gauss(), 5).unwrap(), ClauseOutcome::Holds);
        assert_eq!(is_inert(&real_cyclo7(), 2).unwrap(), ClauseOutcome::Holds);
        // 19 has order 2 mod 5: two degree-2 primes in Q(zeta5)
        let zeta5 = nf(&[1, 1, 1, 1, 1]);
        assert_eq!(splits_two_equal(&zeta5, 19).unwrap(), ClauseOutcome::Holds);
        assert_eq!(is_inert(&gauss(), 2).unwrap(), ClauseOutcome::Uncertified);
        assert_eq!(has_degree_one(&gauss(), 5).unwrap(), ClauseOutcome::Holds);
        assert_eq!(has_degree_one(&gauss(), 3).unwrap(), ClauseOutcome::Fails);
    }

    #[test]
    fn search_examples() {
        let inert_gauss = SearchCondition::new(vec![(gauss(), SplitPredicate::Inert)]).unwrap();
        assert_eq!(search_prime(&inert_gauss, 2, 100).unwrap().witness, Some(3));

        let joint = SearchCondition::new(vec![
            (gauss(), SplitPredicate::SplitTwoEqual),
            (nf(&[-2, 0, 1]), SplitPredicate::CompletelySplit),
        ])
        .unwrap();
        assert_eq!(search_prime(&joint, 2, 200).unwrap().witness, Some(17));

        // degree-1 field rejects the inert clause
        assert!(
            SearchCondition::new(vec![(NumberField::rational(), SplitPredicate::Inert)]).is_err()
        );

        assert!(search_prime(&inert_gauss, 10, 5).is_err());
    }

    #[test]
    fn density_examples() {
        let joint = SearchCondition::new(vec![
            (gauss(), SplitPredicate::CompletelySplit),
            (nf(&[-2, 0, 1]), SplitPredicate::CompletelySplit),
        ])
        .unwrap();
        let d = joint_density_estimate(&joint, 100_000).unwrap();
        // joint split iff p = 1 mod 8
        assert_eq!(d.hits, 2384);
        assert!((d.fraction.unwrap() - 0.25).abs() < 0.03);

        let inert = SearchCondition::new(vec![(gauss(), SplitPredicate::Inert)]).unwrap();
        let d = joint_density_estimate(&inert, 10_000).unwrap();
        assert_eq!(d.hits, 619);
        assert_eq!(d.certified_total, 1228);
        assert!((d.fraction.unwrap() - 0.5).abs() < 0.03);
    }

    #[test]
    fn quadratic_inert_witness_example() {
        // least prime completely split in Q(sqrt2) and inert in Q(zeta7+zeta7^-1):
        // 17 = 1 mod 8, and ord_7(17) = ord_7(3) = 6 is divisible by 3
        let w = quadratic_inert_witness(&nf(&[-2, 0, 1]), &real_cyclo7(), 100_000).unwrap();
        assert_eq!(w, 17);
        // degree mismatch rejected
        assert!(quadratic_inert_witness(&nf(&[-5, 0, 1]), &nf(&[-5, 0, 1]), 100).is_err());
    }

    #[test]
    fn hypothesis_witnesses_examples() {
        let q = NumberField::rational();
        let h = theorem_hypothesis_witnesses(&q, &real_cyclo7(), 10_000).unwrap();
        assert_eq!(h.inert_witness, Some(2)); // ord_7(2) = 3
        let h = theorem_hypothesis_witnesses(&q, &gauss(), 10_000).unwrap();
        assert_eq!(h.split_two_equal_witness, Some(5));
        assert_eq!(h.inert_witness, Some(3));
        // same quadratic field on both sides: degree-1-in-F plus inert-in-K is
        // impossible; the split-two-equal witness is the least split prime, 7
        let sqrt2 = nf(&[-2, 0, 1]);
        let h = theorem_hypothesis_witnesses(&sqrt2, &sqrt2, 10_000).unwrap();
        assert_eq!(h.inert_witness, None);
        assert_eq!(h.split_two_equal_witness, Some(7));
    }

    #[test]
    fn witness_implies_positive_density() {
        // one-witness-implies-many, empirical form
        for (f, pred) in [
            (gauss(), SplitPredicate::Inert),
            (real_cyclo7(), SplitPredicate::CompletelySplit),
            (nf(&[-1, -1, 0, 1]), SplitPredicate::Inert),
        ] {
            let cond = SearchCondition::new(vec![(f, pred)]).unwrap();
            if search_prime(&cond, 2, 1000).unwrap().witness.is_some() {
                let d = joint_density_estimate(&cond, 100_000).unwrap();
                assert!(d.fraction.unwrap() > 0.0);
            }
        }
    }

    #[test]
    fn inertness_order_criterion() {
        // for K = Q(zeta_p + zeta_p^{-1}): inert implies (p-1)/2 | ord_p(l)
        // always; the converse holds when p = 3 (mod 4). For p = 1 (mod 4)
        // an l with l^{(p-1)/4} = -1 has full even order yet splits in two
        // (e.g. p = 13, l = 17).
        for p in [7u64, 11, 13] {
            let k = NumberField::new(crate::nf::real_cyclotomic_minpoly(p).unwrap()).unwrap();
            for l in primes_up_to(10_000) {
                let st = is_inert(&k, l).unwrap();
                if st == ClauseOutcome::Uncertified {
                    continue;
                }
                let mut ord = 1u64;
                let mut v = l % p;
                if v == 0 {
                    continue;
                }
                while v != 1 {
                    v = v * l % p;
                    ord += 1;
                }
                let divisible = ord % ((p - 1) / 2) == 0;
                if st.holds() {
                    assert!(divisible, "p={} l={}", p, l);
                }
                if p % 4 == 3 {
                    assert_eq!(st.holds(), divisible, "p={} l={}", p, l);
                }
            }
        }
    }

    #[test]
    fn zero_certified_primes_leave_fraction_undefined() {
        // a field whose discriminant is divisible by every prime up to the
        // scan bound: x^2 - P for P the product of all primes <= 100
        use num_bigint::BigInt;
        let mut prod = BigInt::from(1);
        for q in primes_up_to(100) {
            prod *= BigInt::from(q);
        }
        let poly = IntPoly::new(vec![-prod, BigInt::from(0), BigInt::from(1)]);
        let k = NumberField::new(poly).unwrap();
        let cond =
            SearchCondition::new(vec![(k, SplitPredicate::CompletelySplit)]).unwrap();
        let d = joint_density_estimate(&cond, 100).unwrap();
        assert_eq!(d.certified_total, 0);
        assert!(d.fraction.is_none());
        assert_eq!(d.skipped_uncertified, 25);
    }

    #[test]
    fn generic_cubic_frequencies() {
        // x^3 - x - 1 has Galois group S3: cycle-type proportions 1/6, 1/2, 1/3
        let k = nf(&[-1, -1, 0, 1]);
        let freqs = chebotarev_frequency(&k, 10_000).unwrap();
        assert!((freqs[&vec![1, 1, 1]] - 1.0 / 6.0).abs() < 0.03);
        assert!((freqs[&vec![2, 1]] - 0.5).abs() < 0.03);
        assert!((freqs[&vec![3]] - 1.0 / 3.0).abs() < 0.03);
    }

    #[test]
    fn partition_consistency() {
        // every certified partition is a partition of n; the abelian cubic
        // sees only the cyclic-group cycle types
        let k = real_cyclo7();
        let freqs = chebotarev_frequency(&k, 10_000).unwrap();
        let mut total = 0.0;
        for (part, f) in &freqs {
            assert_eq!(part.iter().sum::<usize>(), 3);
            assert!(*part == vec![1, 1, 1] || *part == vec![3]);
            total += f;
        }
        assert!((total - 1.0).abs() < 1e-12);
    }
}
