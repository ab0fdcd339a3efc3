//! Exact counting of π-elements in groups and cosets.
//!
//! Counting is class-based: one representative order per conjugacy class,
//! weighted by class size, so censuses stay cheap even near the enumeration
//! cap. A π-element is one whose order has all prime divisors inside π;
//! the identity always counts.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde_json::json;

use crate::arith;
use crate::group::{coset_p_elements, AutElt, Elt, FiniteGroup};
use crate::{Error, Result};

/// Outcome of a census: exact count, proportion in lowest terms, and a
/// per-order histogram of the π-elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub order: u64,
    pub primes: Vec<u64>,
    pub count: u64,
    pub proportion: Ratio<u64>,
    pub histogram: BTreeMap<u64, u64>,
}

impl CensusResult {
    pub fn to_json(&self) -> serde_json::Value {
        let histogram: serde_json::Map<String, serde_json::Value> = self
            .histogram
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        json!({
            "order": self.order,
            "primes": self.primes,
            "count": self.count,
            "proportion": format!("{}/{}", self.proportion.numer(), self.proportion.denom()),
            "histogram": histogram,
        })
    }
}

fn is_pi_number(n: u64, primes: &[u64]) -> bool {
    let mut n = n;
    for &p in primes {
        while n % p == 0 {
            n /= p;
        }
    }
    n == 1
}

/// Counts the elements whose order involves only primes from π.
pub fn count_pi_elements(g: &FiniteGroup, primes: &[u64]) -> CensusResult {
    let mut primes: Vec<u64> = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let mut count = 0u64;
    let mut histogram = BTreeMap::new();
    for (rep, size) in g.conjugacy_classes() {
        let ord = g.element_order(rep);
        if is_pi_number(ord, &primes) {
            count += size as u64;
            *histogram.entry(ord).or_insert(0) += size as u64;
        }
    }
    CensusResult {
        order: g.order(),
        primes,
        count,
        proportion: Ratio::new(count, g.order()),
        histogram,
    }
}

/// Proportion of p-power-order elements, in lowest terms.
pub fn proportion_p(g: &FiniteGroup, p: u64) -> Ratio<u64> {
    count_pi_elements(g, &[p]).proportion
}

/// External multiplier for a coset census: either an element of some
/// ambient group of the same kind, or an automorphism of N itself.
pub enum Multiplier<'a> {
    Elt(Elt),
    Aut(&'a AutElt),
}

/// Number of p-power-order elements in the coset N·g.
pub fn coset_census(n: &FiniteGroup, g: &Multiplier, p: u64) -> Result<u64> {
    match g {
        Multiplier::Elt(g) => {
            if g.kind() != n.kind {
                return Err(Error::IncompatibleMultiplier);
            }
            // g must normalize N, else {n·g} is not a coset of the right shape
            let ginv = g.inv();
            for h in &n.generators {
                if !n.contains(&ginv.mul(h).mul(g)) {
                    return Err(Error::IncompatibleMultiplier);
                }
            }
            Ok(n
                .elements
                .iter()
                .filter(|e| arith::is_p_power(e.mul(g).order(), p))
                .count() as u64)
        }
        Multiplier::Aut(gamma) => {
            if gamma.map.len() as u64 != n.order() {
                return Err(Error::IncompatibleMultiplier);
            }
            Ok(coset_p_elements(n, gamma, p).len() as u64)
        }
    }
}

/// exp_{p′}(G): lcm of the orders of all p′-elements.
pub fn exp_p_prime(g: &FiniteGroup, p: u64) -> u64 {
    let mut e = 1u64;
    for (rep, _) in g.conjugacy_classes() {
        let ord = g.element_order(rep);
        if ord % p != 0 {
            e = arith::lcm(e, ord);
        }
    }
    e
}

/// |G : O^{p′}(G)|, the index of the subgroup generated by all p-elements.
/// That subgroup is the normal closure of the p-power-order class
/// representatives.
pub fn o_p_prime_index(g: &FiniteGroup, p: u64) -> u64 {
    let seeds: Vec<usize> = g
        .conjugacy_classes()
        .iter()
        .filter(|&&(rep, _)| arith::is_p_power(g.element_order(rep), p))
        .map(|&(rep, _)| rep)
        .collect();
    g.order() / g.normal_closure(&seeds).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{closure, parse_perm_cycles, DEFAULT_CAP};
    use crate::gf::FieldSpec;

    fn perm(degree: u32, cycles: &str) -> Elt {
        Elt::Perm(parse_perm_cycles(degree, cycles).unwrap())
    }

    fn sym(n: u32) -> FiniteGroup {
        closure(
            vec![perm(n, "(1 2)"), Elt::Perm((0..n).map(|i| (i + 1) % n).collect())],
            DEFAULT_CAP,
        )
        .unwrap()
    }

    fn alt5() -> FiniteGroup {
        closure(vec![perm(5, "(1 2 3)"), perm(5, "(1 2 3 4 5)")], DEFAULT_CAP).unwrap()
    }

    fn gl2_3() -> FiniteGroup {
        let f3 = FieldSpec::make(3, 1).unwrap();
        let m = |data: Vec<u64>| Elt::Mat { field: f3.clone(), n: 2, data };
        closure(vec![m(vec![1, 1, 0, 1]), m(vec![1, 0, 1, 1]), m(vec![2, 0, 0, 1])], DEFAULT_CAP)
            .unwrap()
    }

    #[test]
    fn sym3_two_elements() {
        let r = count_pi_elements(&sym(3), &[2]);
        assert_eq!(r.count, 4);
        assert_eq!(r.proportion, Ratio::new(2, 3));
        assert_eq!(r.histogram.get(&1), Some(&1));
        assert_eq!(r.histogram.get(&2), Some(&3));
    }

    #[test]
    fn full_prime_set_counts_everything() {
        let g = sym(4);
        let r = count_pi_elements(&g, &[2, 3]);
        assert_eq!(r.count, g.order());
        assert_eq!(r.proportion, Ratio::new(1, 1));
    }

    #[test]
    fn gl23_steinberg_count() {
        let g = gl2_3();
        let r = count_pi_elements(&g, &[3]);
        // q^{n(n−1)} = 3^2
        assert_eq!(r.count, 9);
        assert_eq!(proportion_p(&g, 3), Ratio::new(3, 16));
        // inside [1/q^n, 2/q^n] = [1/9, 2/9]
        assert!(proportion_p(&g, 3) >= Ratio::new(1, 9));
        assert!(proportion_p(&g, 3) <= Ratio::new(2, 9));
    }

    #[test]
    fn union_monotone() {
        let g = sym(4);
        let both = count_pi_elements(&g, &[2, 3]).count;
        assert!(both >= count_pi_elements(&g, &[2]).count);
        assert!(both >= count_pi_elements(&g, &[3]).count);
    }

    #[test]
    fn coset_counts() {
        let a5 = alt5();
        // transposition twist: involutions and 4-cycles in Sym_5 ∖ Alt_5
        let c = coset_census(&a5, &Multiplier::Elt(perm(5, "(1 2)")), 2).unwrap();
        assert_eq!(c, 40);
        assert!(c >= 10);
        // degenerate coset = plain census
        let id = coset_census(&a5, &Multiplier::Elt(perm(5, "()")), 2).unwrap();
        assert_eq!(id, count_pi_elements(&a5, &[2]).count);
        // odd coset has no 3-elements
        let a3 = closure(vec![perm(3, "(1 2 3)")], DEFAULT_CAP).unwrap();
        assert_eq!(coset_census(&a3, &Multiplier::Elt(perm(3, "(1 2)")), 3).unwrap(), 0);
        // degree mismatch rejected
        assert!(matches!(
            coset_census(&a3, &Multiplier::Elt(perm(4, "(1 2)")), 2),
            Err(Error::IncompatibleMultiplier)
        ));
    }

    #[test]
    fn coset_counts_sum_to_group_census() {
        let s5 = sym(5);
        let a5 = alt5();
        let whole = count_pi_elements(&s5, &[2]).count;
        let even = coset_census(&a5, &Multiplier::Elt(perm(5, "()")), 2).unwrap();
        let odd = coset_census(&a5, &Multiplier::Elt(perm(5, "(1 2)")), 2).unwrap();
        assert_eq!(even + odd, whole);
    }

    #[test]
    fn aut_multiplier() {
        let a5 = alt5();
        let aut = a5.automorphism_group(10_000).unwrap();
        let inner = coset_census(&a5, &Multiplier::Aut(&aut.outer_reps[0]), 2).unwrap();
        assert_eq!(inner, count_pi_elements(&a5, &[2]).count);
        // the outer coset of Inn(Alt_5) in Aut(Alt_5) ≅ Sym_5 matches the
        // odd-coset count
        let outer = coset_census(&a5, &Multiplier::Aut(&aut.outer_reps[1]), 2).unwrap();
        assert_eq!(outer, 40);
    }

    #[test]
    fn exponents_and_index() {
        assert_eq!(exp_p_prime(&sym(4), 2), 3);
        assert_eq!(exp_p_prime(&alt5(), 5), 6);
        let c4 = closure(vec![perm(4, "(1 2 3 4)")], DEFAULT_CAP).unwrap();
        assert_eq!(exp_p_prime(&c4, 2), 1);

        assert_eq!(o_p_prime_index(&sym(3), 3), 2);
        assert_eq!(o_p_prime_index(&alt5(), 2), 1);
        let c3 = closure(vec![perm(3, "(1 2 3)")], DEFAULT_CAP).unwrap();
        assert_eq!(o_p_prime_index(&c3, 2), 3);
    }

    #[test]
    fn json_shape() {
        let v = count_pi_elements(&gl2_3(), &[3]).to_json();
        assert_eq!(v["order"], 48);
        assert_eq!(v["primes"][0], 3);
        assert_eq!(v["count"], 9);
        assert_eq!(v["proportion"], "3/16");
        assert_eq!(v["histogram"]["3"], 8);
    }
}
