//! The M_p invariant: coset-wise fixed-point minimization over Aut(S) for
//! simple groups, multiplicative assembly over composition factors, and the
//! counting lemmas that tie M_p to censuses.

use crate::arith;
use crate::census::{coset_census, count_pi_elements, Multiplier};
use crate::group::{coset_p_elements, AutData, Elt, FiniteGroup, DEFAULT_AUT_CAP};
use crate::{Error, Result};

/// One per-coset minimizer found while computing M_p of a simple group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpWitness {
    /// Index of the Inn-coset (0 = inner) in the automorphism data.
    pub coset: usize,
    /// Element index s into the group: the minimizer is the map a ↦ s⁻¹γ(a)s.
    pub element: usize,
    /// Its fixed-point count on S (the centralizer order for inner cosets).
    pub fixed_points: u64,
}

/// One composition factor's contribution to M_p(G).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpFactor {
    pub order: u64,
    pub value: u64,
    /// Empty for abelian (prime-order) factors.
    pub witnesses: Vec<MpWitness>,
}

/// Full breakdown of an M_p computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpReport {
    pub description: String,
    pub p: u64,
    pub value: u64,
    pub factors: Vec<MpFactor>,
}

impl MpReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "group": self.description,
            "p": self.p,
            "value": self.value,
            "factors": self.factors.iter().map(|f| serde_json::json!({
                "order": f.order,
                "value": f.value,
                "witnesses": f.witnesses.iter().map(|w| serde_json::json!({
                    "coset": w.coset,
                    "element": w.element,
                    "fixed_points": w.fixed_points,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// M_p of a cyclic group of prime order r: r if r ≠ p, else 1.
pub fn mp_abelian(r: u64, p: u64) -> u64 {
    if r == p {
        1
    } else {
        r
    }
}

/// M_p of a nonabelian simple group: the maximum, over Inn-cosets of Aut(S)
/// containing at least one p-power-order element, of the minimum fixed-point
/// count among those elements. The inner coset always participates (the
/// identity is a p-power-order element), so the maximum is over a nonempty
/// set.
pub fn mp_simple(s: &FiniteGroup, p: u64, aut_cap: u64) -> Result<(u64, Vec<MpWitness>)> {
    let aut = s.automorphism_group(aut_cap)?;
    Ok(mp_simple_with_aut(s, &aut, p))
}

/// `mp_simple` with precomputed automorphism data, so one search can serve
/// several primes.
pub fn mp_simple_with_aut(s: &FiniteGroup, aut: &AutData, p: u64) -> (u64, Vec<MpWitness>) {
    let mut value = 0u64;
    let mut witnesses = Vec::new();
    for (coset, gamma) in aut.outer_reps.iter().enumerate() {
        let pts = coset_p_elements(s, gamma, p);
        let Some(&(element, _, fixed_points)) =
            pts.iter().min_by_key(|&&(s_idx, _, fix)| (fix, s_idx))
        else {
            continue; // no p-element in this coset: it imposes no constraint
        };
        witnesses.push(MpWitness { coset, element, fixed_points });
        value = value.max(fixed_points);
    }
    (value, witnesses)
}

/// M_p(G) as the product of M_p over the composition factors.
pub fn mp_group(g: &FiniteGroup, description: &str, p: u64, aut_cap: u64) -> Result<MpReport> {
    let mut factors = Vec::new();
    let mut value = 1u64;
    for factor in g.composition_factors()? {
        let order = factor.order();
        let (v, witnesses) = if arith::is_prime(order) {
            (mp_abelian(order, p), Vec::new())
        } else {
            mp_simple(&factor, p, aut_cap)?
        };
        value *= v;
        factors.push(MpFactor { order, value: v, witnesses });
    }
    Ok(MpReport { description: description.to_string(), p, value, factors })
}

/// |Ord(G, p)|·M_p(G) ≥ |G|?
pub fn verify_cor23(g: &FiniteGroup, p: u64, aut_cap: u64) -> Result<bool> {
    let report = mp_group(g, "", p, aut_cap)?;
    let count = count_pi_elements(g, &[p]).count;
    Ok((count as u128) * (report.value as u128) >= g.order() as u128)
}

const TUPLE_CAP: u64 = 10_000_000;

/// Counts p-power-order elements in the coset S^t·((x₁,…,x_t)σ) of the
/// t-fold wreath base, σ the standard t-cycle, two ways:
///   direct   — streaming all |S|^t tuples and using that
///              ((y₁,…,y_t)σ) has order t·|y₁⋯y_t|;
///   factored — |S|^{t−1} · (count in the folded coset S·x₁⋯x_t).
/// Requires t to be a power of p and the twists to normalize S.
pub fn lemma22_coset_count(
    s: &FiniteGroup,
    t: u64,
    twists: &[Elt],
    p: u64,
) -> Result<(u64, u64)> {
    if t == 0 || !arith::is_p_power(t, p) {
        return Err(Error::HypothesisViolated(format!("t = {t} is not a power of p = {p}")));
    }
    if twists.len() as u64 != t {
        return Err(Error::HypothesisViolated(format!(
            "need exactly t = {t} twist elements, got {}",
            twists.len()
        )));
    }
    let mut size = 1u64;
    for _ in 0..t {
        size = size
            .checked_mul(s.order())
            .filter(|&v| v <= TUPLE_CAP)
            .ok_or(Error::CapExceeded(TUPLE_CAP))?;
    }
    // the folded twist x₁⋯x_t (coset_census validates kind + normalization)
    let mut folded = twists[0].clone();
    for x in &twists[1..] {
        folded = folded.mul(x);
    }
    let folded_count = coset_census(s, &Multiplier::Elt(folded), p)?;
    let factored = s.order().pow(t as u32 - 1) * folded_count;

    // direct streaming: a tuple is a p-element iff the ordered product
    // s₁x₁s₂x₂⋯s_tx_t has p-power order (t is already a p-power)
    let mut idx = vec![0usize; t as usize];
    let n = s.order() as usize;
    let mut direct = 0u64;
    loop {
        let mut prod = s.elements[idx[0]].mul(&twists[0]);
        for j in 1..t as usize {
            prod = prod.mul(&s.elements[idx[j]]).mul(&twists[j]);
        }
        if arith::is_p_power(prod.order(), p) {
            direct += 1;
        }
        // odometer
        let mut j = 0usize;
        loop {
            if j == t as usize {
                return Ok((direct, factored));
            }
            idx[j] += 1;
            if idx[j] < n {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// Convenience: `mp_group` with the default automorphism cap.
pub fn mp_group_default(g: &FiniteGroup, description: &str, p: u64) -> Result<MpReport> {
    mp_group(g, description, p, DEFAULT_AUT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{closure, parse_perm_cycles, DEFAULT_CAP};

    fn perm(degree: u32, cycles: &str) -> Elt {
        Elt::Perm(parse_perm_cycles(degree, cycles).unwrap())
    }

    fn alt5() -> FiniteGroup {
        closure(vec![perm(5, "(1 2 3)"), perm(5, "(1 2 3 4 5)")], DEFAULT_CAP).unwrap()
    }

    fn alt6() -> FiniteGroup {
        closure(vec![perm(6, "(1 2 3)"), perm(6, "(2 3 4 5 6)")], DEFAULT_CAP).unwrap()
    }

    fn sym(n: u32) -> FiniteGroup {
        closure(
            vec![perm(n, "(1 2)"), Elt::Perm((0..n).map(|i| (i + 1) % n).collect())],
            DEFAULT_CAP,
        )
        .unwrap()
    }

    /// PSL_2(11) acting on the projective line (12 points: 0..10 and ∞=11).
    fn l2_11() -> FiniteGroup {
        let q = 11u64;
        let shift: Vec<u32> =
            (0..12u32).map(|z| if z == 11 { 11 } else { ((z as u64 + 1) % q) as u32 }).collect();
        // z ↦ −1/z, with 0 ↔ ∞
        let inv_neg: Vec<u32> = (0..12u32)
            .map(|z| {
                if z == 11 {
                    0
                } else if z == 0 {
                    11
                } else {
                    let zi = arith::pow_mod(z as u64, q - 2, q);
                    ((q - zi) % q) as u32
                }
            })
            .collect();
        let g = closure(vec![Elt::Perm(shift), Elt::Perm(inv_neg)], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 660);
        g
    }

    #[test]
    fn abelian_values() {
        assert_eq!(mp_abelian(3, 2), 3);
        assert_eq!(mp_abelian(2, 2), 1);
        assert_eq!(mp_abelian(7, 3), 7);
    }

    #[test]
    fn alt5_values() {
        let a5 = alt5();
        assert_eq!(mp_simple(&a5, 2, DEFAULT_AUT_CAP).unwrap().0, 4);
        assert_eq!(mp_simple(&a5, 3, DEFAULT_AUT_CAP).unwrap().0, 3);
        assert_eq!(mp_simple(&a5, 5, DEFAULT_AUT_CAP).unwrap().0, 5);
        // witnesses: fixed-point counts per coset, max attained
        let (v, ws) = mp_simple(&a5, 2, DEFAULT_AUT_CAP).unwrap();
        assert_eq!(ws.len(), 2); // both cosets of Sym_5 contain 2-elements
        assert!(ws.iter().any(|w| w.fixed_points == v));
        assert!(ws.iter().all(|w| w.fixed_points <= v));
    }

    #[test]
    fn alt6_value() {
        assert_eq!(mp_simple(&alt6(), 2, DEFAULT_AUT_CAP).unwrap().0, 4);
    }

    #[test]
    fn l2_11_values() {
        let s = l2_11();
        assert_eq!(mp_simple(&s, 2, DEFAULT_AUT_CAP).unwrap().0, 12);
        assert_eq!(mp_simple(&s, 3, DEFAULT_AUT_CAP).unwrap().0, 6);
        assert_eq!(mp_simple(&s, 5, DEFAULT_AUT_CAP).unwrap().0, 5);
    }

    #[test]
    fn generating_set_independence() {
        let a5_alt = closure(vec![perm(5, "(1 2)(3 4)"), perm(5, "(1 3 5)")], DEFAULT_CAP).unwrap();
        assert_eq!(a5_alt.order(), 60);
        for p in [2u64, 3, 5] {
            assert_eq!(
                mp_simple(&a5_alt, p, DEFAULT_AUT_CAP).unwrap().0,
                mp_simple(&alt5(), p, DEFAULT_AUT_CAP).unwrap().0
            );
        }
    }

    #[test]
    fn group_reports() {
        let r = mp_group_default(&sym(5), "Sym_5", 2).unwrap();
        assert_eq!(r.value, 4); // M_2(Alt_5)·M_2(C_2) = 4·1
        assert_eq!(r.factors.len(), 2);
        let r = mp_group_default(&sym(4), "Sym_4", 2).unwrap();
        assert_eq!(r.value, 3); // factors 2, 2, 2, 3 → 1·1·1·3
        let c8 = closure(vec![perm(8, "(1 2 3 4 5 6 7 8)")], DEFAULT_CAP).unwrap();
        assert_eq!(mp_group_default(&c8, "C_8", 2).unwrap().value, 1);
        let v = r.to_json();
        assert_eq!(v["value"], 3);
        assert_eq!(v["p"], 2);
    }

    #[test]
    fn direct_product_multiplicative() {
        // Alt_5 × Alt_5 on 10 points
        let embed = |c: &str, hi: bool| {
            let base = parse_perm_cycles(5, c).unwrap();
            let mut img: Vec<u32> = (0..10).collect();
            for (i, &x) in base.iter().enumerate() {
                if hi {
                    img[i + 5] = x + 5;
                } else {
                    img[i] = x;
                }
            }
            Elt::Perm(img)
        };
        let g = closure(
            vec![
                embed("(1 2 3)", false),
                embed("(1 2 3 4 5)", false),
                embed("(1 2 3)", true),
                embed("(1 2 3 4 5)", true),
            ],
            DEFAULT_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 3600);
        for p in [2u64, 3, 5] {
            let whole = mp_group_default(&g, "Alt_5 x Alt_5", p).unwrap().value;
            let single = mp_simple(&alt5(), p, DEFAULT_AUT_CAP).unwrap().0;
            assert_eq!(whole, single * single, "p={p}");
        }
    }

    #[test]
    fn cor23() {
        assert!(verify_cor23(&sym(5), 2, DEFAULT_AUT_CAP).unwrap());
        assert!(verify_cor23(&alt5(), 5, DEFAULT_AUT_CAP).unwrap());
        let trivial = closure(vec![], DEFAULT_CAP).unwrap();
        assert!(verify_cor23(&trivial, 3, DEFAULT_AUT_CAP).unwrap());
        for p in [2u64, 3, 5, 7] {
            assert!(verify_cor23(&sym(6), p, DEFAULT_AUT_CAP).unwrap(), "p={p}");
        }
    }

    #[test]
    fn lemma22() {
        let a5 = alt5();
        let id = Elt::Perm((0..5).collect());
        let (direct, factored) = lemma22_coset_count(&a5, 2, &[id.clone(), id.clone()], 2).unwrap();
        assert_eq!(factored, 60 * 16);
        assert_eq!(direct, factored);
        assert!(direct >= 15 * 15);
        // twists (g, g⁻¹) give the same coset
        let g = perm(5, "(1 2 3 4 5)");
        let (d2, f2) = lemma22_coset_count(&a5, 2, &[g.clone(), g.inv()], 2).unwrap();
        assert_eq!((d2, f2), (direct, factored));
        // t must be a p-power
        assert!(matches!(
            lemma22_coset_count(&a5, 3, &[id.clone(), id.clone(), id.clone()], 2),
            Err(Error::HypothesisViolated(_))
        ));
        // t = 1 degenerates to a plain coset census
        let (d1, f1) = lemma22_coset_count(&a5, 1, &[id], 2).unwrap();
        assert_eq!(d1, 16);
        assert_eq!(f1, 16);
    }
}
