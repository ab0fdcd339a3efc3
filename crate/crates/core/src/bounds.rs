//! Closed-form bounds, lookup tables, and checkable lemmas.
//!
//! Everything here is exact: bounds with fractional exponents live in
//! [`ExactBound`], integer comparisons use big integers, and every check
//! function returns the literal truth of the stated inequality (an error is
//! reserved for violated hypotheses, never for "false").

use num_bigint::BigUint;
use num_traits::One;

use crate::arith;
use crate::exact::{factorial, ExactBound, Exp};
use crate::group::Elt;
use crate::{Error, Result};

pub use crate::arith::p_prime_part;

/// Base-p expansion n = Σ aᵢ·p^{bᵢ} with 0 < aᵢ ≤ p−1 and b strictly
/// increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePExpansion {
    pub p: u64,
    /// (digit aᵢ, exponent bᵢ), exponents strictly increasing.
    pub terms: Vec<(u64, u32)>,
}

pub fn base_p_expansion(n: u64, p: u64) -> BasePExpansion {
    assert!(p >= 2, "base must be at least 2");
    let mut terms = Vec::new();
    let mut n = n;
    let mut b = 0u32;
    while n > 0 {
        let a = n % p;
        if a > 0 {
            terms.push((a, b));
        }
        n /= p;
        b += 1;
    }
    BasePExpansion { p, terms }
}

/// h_p(m): the largest order of a p′-subgroup of Sym_m that is a candidate
/// point stabilizer tower, as a function of the prime p:
///   p = 2 → 3^{(m−1)/2},  p = 3 → 20^{(m−1)/4},  p > 3 → ((p−1)!)^{(m−1)/(p−2)}.
/// The argument may be rational (it appears as n/2, n/3, n/4 inside f and i).
pub fn h_p(p: u64, m: Exp) -> ExactBound {
    let m1 = m - Exp::from_integer(1);
    match p {
        2 => ExactBound::from_integer(3).pow(m1 / Exp::from_integer(2)).unwrap(),
        3 => ExactBound::from_integer(20).pow(m1 / Exp::from_integer(4)).unwrap(),
        _ => factorial(p - 1).pow(m1 / Exp::from_integer(p as i64 - 2)).unwrap(),
    }
}

/// h_p at an integer argument.
pub fn h_p_int(p: u64, m: u64) -> ExactBound {
    h_p(p, Exp::from_integer(m as i64))
}

fn exp_frac(num: u64, den: u64) -> Exp {
    Exp::new(num as i64, den as i64)
}

pub(crate) fn alpha(q: u64) -> u64 {
    match q {
        5 => 96,
        7 => 144,
        11 => 600,
        13 => 138_240,
        19 => 1140,
        _ => panic!("alpha is defined only for q in {{5,7,11,13,19}}"),
    }
}

/// f(n, q): upper bound for the order of an irreducible p′-subgroup of
/// GL_n(q) up to the index |G : O^{p′}(G)|, where q = p^f.
pub fn f_bound(n: u64, q: u64) -> Result<ExactBound> {
    let (p, _) = arith::prime_power(q)?;
    let row = if p == 2 {
        ExactBound::from_integer(3 * (q * q * q - 1))
            .pow(exp_frac(n, 3))?
            .mul(&h_p(p, exp_frac(n, 3)))
    } else if q == 3 {
        ExactBound::from_integer(640).pow(exp_frac(n, 4))?.mul(&h_p(p, exp_frac(n, 4)))
    } else if q == 9 || q == 27 {
        ExactBound::from_integer(2 * (q * q - 1))
            .pow(exp_frac(n, 2))?
            .mul(&h_p(p, exp_frac(n, 2)))
    } else if q == 5 || q == 7 || q == 11 {
        ExactBound::from_integer(alpha(q)).pow(exp_frac(n, 2))?.mul(&h_p(p, exp_frac(n, 2)))
    } else {
        ExactBound::from_integer(q - 1).pow(Exp::from_integer(n as i64))?.mul(&h_p_int(p, n))
    };
    Ok(row)
}

/// i(n, q): the exact largest order of an irreducible p′-subgroup of
/// GL_n(q), where q = p^f. Differs from f only through side conditions on n;
/// the more specific condition wins.
pub fn i_bound(n: u64, q: u64) -> Result<ExactBound> {
    let (p, _) = arith::prime_power(q)?;
    let row = if p == 2 {
        ExactBound::from_integer(3 * (q * q * q - 1))
            .pow(exp_frac(n, 3))?
            .mul(&h_p(p, exp_frac(n, 3)))
    } else if q == 3 && n % 4 != 0 {
        ExactBound::from_integer(2 * (q * q - 1))
            .pow(exp_frac(n, 2))?
            .mul(&h_p(p, exp_frac(n, 2)))
    } else if q == 3 {
        ExactBound::from_integer(640).pow(exp_frac(n, 4))?.mul(&h_p(p, exp_frac(n, 4)))
    } else if q == 9 || q == 27 {
        ExactBound::from_integer(2 * (q * q - 1))
            .pow(exp_frac(n, 2))?
            .mul(&h_p(p, exp_frac(n, 2)))
    } else if (q == 5 || q == 7 || q == 11) && n % 2 == 1 {
        ExactBound::from_integer(q - 1).pow(Exp::from_integer(n as i64))?.mul(&h_p_int(p, n))
    } else if q == 5 || q == 7 || q == 11 {
        ExactBound::from_integer(alpha(q)).pow(exp_frac(n, 2))?.mul(&h_p(p, exp_frac(n, 2)))
    } else {
        ExactBound::from_integer(q - 1).pow(Exp::from_integer(n as i64))?.mul(&h_p_int(p, n))
    };
    Ok(row)
}

/// n_{p′}·(q^n − 1): bound for |G : O^{p′}(G)| with G ≤ ΓL_1(q^n) ≤ GL_n(q).
pub fn thm_c_bound(n: u64, q: u64, p: u64) -> u64 {
    let qn = q.checked_pow(n as u32).expect("q^n overflows u64");
    arith::p_prime_part(n, p) * (qn - 1)
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

/// Maps the decorated unicode in structure labels (minus sign, circle
/// product, wreath, semidirect) to an ascii skeleton, so lookups tolerate
/// either spelling.
fn normalize_label(label: &str) -> String {
    let mut out = String::new();
    for c in label.chars() {
        match c {
            '−' | '-' => out.push('-'),
            '∘' => out.push_str("o"),
            '≀' => out.push_str("wr"),
            '⋊' => out.push(':'),
            c if c.is_whitespace() => {}
            c => out.push(c),
        }
    }
    out
}

/// (label, n, [(q, P)]): the exceptional irreducible p′-subgroups of small
/// GL_n(q) and the exact p-element counts P in N_{GL_n(q)}(G)·x.
const TABLE1: &[(&str, u64, &[(u64, u64)])] = &[
    ("6∘3^{1+2}.Sp_2(3)", 3, &[(7, 1296)]),
    ("(q−1)∘2^{1+2}.Sp_2(2)", 2, &[(5, 96), (7, 144)]),
    ("2^{1+4}.Sp_4(2)", 4, &[(7, 23040)]),
    ("(q−1)∘2^{1+4}.Sp_4(2)", 4, &[(7, 69120), (11, 115200), (13, 138240)]),
    ("2^{1+4}.(5⋊4)", 4, &[(3, 640)]),
    ("4∘2^4.(Sp_2(2)≀Sym_2)", 4, &[(5, 4608)]),
    ("2^{1+4}.Sp_4(2)'", 4, &[(7, 11520)]),
    ("6∘2^{1+4}.Sp_4(2)'", 4, &[(7, 34560)]),
    ("6∘2^{1+4}.Sym_5", 4, &[(7, 11520)]),
    ("(q−1)∘2.Alt_5", 2, &[(11, 600), (19, 1140)]),
    ("10∘(2.Alt_5∘2.Alt_5).2", 4, &[(11, 72000)]),
];

/// (label, d, [(q, M_p)]): the exceptional quotients H ≤ PGL_d(q) and their
/// maximal coset p-element counts M_p(H). Row order matters: compatibility
/// conditions elsewhere refer to rows by their 1-based position.
const TABLE4: &[(&str, u64, &[(u64, u64)])] = &[
    ("3^2.Sp_2(3)", 3, &[(7, 216)]),
    ("2^2.Sp_2(2)", 2, &[(5, 24), (7, 24)]),
    ("2^4.Sp_4(2)", 4, &[(3, 288)]),
    ("2^4.Sp_4(2)", 4, &[(7, 11520), (11, 11520), (13, 11520)]),
    ("2^4.(5⋊4)", 4, &[(3, 320)]),
    ("2^4.(Sp_2(2)≀Sym_2)", 4, &[(5, 1152)]),
    ("2^4.Sp_4(2)'", 4, &[(7, 5760)]),
    ("2^4.Sym_5", 4, &[(7, 1920)]),
    ("Alt_5", 2, &[(11, 60), (19, 60)]),
    ("Alt_5≀Sym_2", 4, &[(11, 7200)]),
];

fn table_lookup(
    table: &[(&str, u64, &[(u64, u64)])],
    label: &str,
    n: u64,
    q: u64,
) -> Result<u64> {
    let want = normalize_label(label);
    for &(row_label, row_n, cells) in table {
        if normalize_label(row_label) == want && row_n == n {
            if let Some(&(_, v)) = cells.iter().find(|&&(cq, _)| cq == q) {
                return Ok(v);
            }
        }
    }
    Err(Error::NoSuchRow(format!("{label} with n={n}, q={q}")))
}

/// Exact p-element count P for an exceptional-class witness.
pub fn table1_lookup(label: &str, n: u64, q: u64) -> Result<u64> {
    table_lookup(TABLE1, label, n, q)
}

/// Exact M_p(H) value for an exceptional projective quotient.
pub fn table4_lookup(label: &str, d: u64, q: u64) -> Result<u64> {
    table_lookup(TABLE4, label, d, q)
}

/// Number of rows in the exceptional-quotient table (rows are 1-based in
/// compatibility conditions).
pub const TABLE4_ROWS: usize = 10;

/// (d, q, M) data of a 1-based exceptional-quotient table row, for matching.
pub(crate) fn table4_row(f: usize) -> Option<(&'static str, u64, &'static [(u64, u64)])> {
    TABLE4.get(f.checked_sub(1)?).copied()
}

/// Families of finite simple groups of Lie type with a non-default
/// centralizer bound at small primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieFamily {
    PSp2l,
    POmega2l,
    TwoB2,
    TwoG2,
    ThreeD4,
    G2,
    TwoF4,
    F4,
    E6,
    E7,
    E8,
    Other,
}

/// Upper bound c·q^e for the minimal centralizer order of a p-element coset
/// of a simple group of Lie type of the given family and untwisted rank ℓ
/// over GF(q). Families/primes off the table fall back to q^ℓ.
pub fn lie_centralizer_cap(family: LieFamily, p: u64, q: u64, l: u32) -> ExactBound {
    use LieFamily::*;
    let (c, e): (u64, u32) = match (family, p) {
        (PSp2l, 2) | (POmega2l, 2) => (2, l),
        (TwoB2, 2) => (2, 1),
        (TwoG2, 3) => (3, 1),
        (ThreeD4, 2) => (2, 4),
        (G2, 2) => (2, 2),
        (G2, 3) => (3, 2),
        (TwoF4, 2) => (4, 4),
        (F4, 2) => (4, 4),
        (F4, 3) => (3, 4),
        (E6, 2) | (E6, 3) => (6, 6),
        (E7, 2) => (4, 7),
        (E7, 3) => (6, 7),
        (E8, 2) => (4, 8),
        (E8, 3) => (3, 8),
        (E8, 5) => (5, 8),
        _ => (1, l),
    };
    let base = ExactBound::from_factor(q, Exp::from_integer(e as i64));
    if c == 1 {
        base
    } else {
        ExactBound::from_integer(c).mul(&base)
    }
}

// ---------------------------------------------------------------------------
// Canonical p-elements of symmetric groups
// ---------------------------------------------------------------------------

/// x_p(n): the permutation of degree n with aᵢ cycles of length p^{bᵢ} for
/// each term of the base-p expansion of n, laid out consecutively.
pub fn x_p_element(n: u64, p: u64) -> Elt {
    let e = base_p_expansion(n, p);
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut pos = 0u32;
    for &(a, b) in &e.terms {
        let len = p.pow(b) as u32;
        for _ in 0..a {
            for i in 0..len {
                images[(pos + i) as usize] = pos + (i + 1) % len;
            }
            pos += len;
        }
    }
    Elt::Perm(images)
}

/// |C_{Sym_n}(x_p(n))| = ∏ aᵢ!·p^{aᵢbᵢ}  (aᵢ cycles of length p^{bᵢ} give a
/// direct factor Sym_{aᵢ} ≀-permuting cyclic groups of order p^{bᵢ}).
pub fn sym_centralizer_order(e: &BasePExpansion) -> u64 {
    let mut out = 1u64;
    for &(a, b) in &e.terms {
        for k in 2..=a {
            out *= k;
        }
        out *= e.p.pow(b).pow(a as u32);
    }
    out
}

fn perm_from_parts(n: u64, parts: &[u64]) -> Elt {
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut pos = 0u32;
    for &len in parts {
        let len = len as u32;
        for i in 0..len {
            images[(pos + i) as usize] = pos + (i + 1) % len;
        }
        pos += len;
    }
    Elt::Perm(images)
}

/// An element y of Sym_n, all of whose cycle lengths are powers of 2, lying
/// in the requested coset of Alt_n (odd = true means Sym_n ∖ Alt_n) and
/// minimizing |C_{Alt_n}(y)|. Only p = 2 needs a coset-targeted element;
/// n = 6 is excluded because Alt_6 has exceptional outer cosets handled
/// separately.
pub fn alt_small_centralizer_element(n: u64, p: u64, target_odd: bool) -> Result<Elt> {
    if p != 2 {
        return Err(Error::HypothesisViolated(
            "coset-targeted small centralizer elements only arise for p = 2".into(),
        ));
    }
    if n < 5 {
        return Err(Error::HypothesisViolated("need n >= 5".into()));
    }
    if n == 6 {
        return Err(Error::Unsupported(
            "degree 6 has exceptional outer cosets; not constructed here".into(),
        ));
    }
    // Enumerate partitions of n into parts that are powers of 2, parts
    // nonincreasing, picking the coset-correct one with the smallest
    // centralizer in Alt_n.
    let mut best: Option<(u128, Vec<u64>)> = None;
    let mut parts: Vec<u64> = Vec::new();
    fn rec(
        remaining: u64,
        max_part: u64,
        parts: &mut Vec<u64>,
        target_odd: bool,
        best: &mut Option<(u128, Vec<u64>)>,
    ) {
        if remaining == 0 {
            let transpositions: u64 = parts.iter().map(|&l| l - 1).sum();
            if (transpositions % 2 == 1) != target_odd {
                return;
            }
            // |C_{Sym_n}| = ∏ over distinct lengths L with multiplicity m of m!·L^m
            let mut csym: u128 = 1;
            let mut i = 0;
            while i < parts.len() {
                let l = parts[i];
                let mut m = 0u128;
                while i < parts.len() && parts[i] == l {
                    m += 1;
                    i += 1;
                }
                for k in 2..=m {
                    csym *= k;
                }
                csym *= (l as u128).pow(m as u32);
            }
            // The centralizer meets the odd coset iff it contains an odd
            // permutation: an even-length cycle, or a swap of two equal
            // fixed points (any two equal odd-length cycles of length L swap
            // by an odd permutation iff L is even; for 2-power parts the only
            // odd lengths are 1, and swapping two fixed points is odd).
            let has_odd = parts.iter().any(|&l| l % 2 == 0)
                || parts.iter().filter(|&&l| l == 1).count() >= 2;
            let calt = if has_odd { csym / 2 } else { csym };
            if best.as_ref().map_or(true, |(b, _)| calt < *b) {
                *best = Some((calt, parts.clone()));
            }
            return;
        }
        let mut l = 1u64;
        while l * 2 <= remaining.min(max_part) {
            l *= 2;
        }
        while l >= 1 {
            parts.push(l);
            rec(remaining - l, l, parts, target_odd, best);
            parts.pop();
            if l == 1 {
                break;
            }
            l /= 2;
        }
    }
    rec(n, n, &mut parts, target_odd, &mut best);
    let (_, parts) = best.ok_or_else(|| {
        Error::NoSolution(format!("no 2-power cycle type of degree {n} in the requested coset"))
    })?;
    Ok(perm_from_parts(n, &parts))
}

// ---------------------------------------------------------------------------
// Checkable lemmas
// ---------------------------------------------------------------------------

/// Checks both parts of the base-p expansion lemma for n ≥ p:
///   (i)  if p ≥ 5, or p = 3 with some bᵢ > 1, or p = 2 with some bᵢ > 3:
///        Σ(aᵢ + bᵢ) ≤ n/2;
///   (ii) if p = 3 with all bᵢ ≤ 1, or p = 2 with all bᵢ ≤ 3:
///        ∏ aᵢ!·p^{bᵢ} ≤ p^{n/2}.
/// Returns (part-i verdict, part-ii verdict); None when the hypothesis of
/// that part does not apply.
pub fn check_lemma_basep(n: u64, p: u64) -> Result<(Option<bool>, Option<bool>)> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n < p {
        return Err(Error::HypothesisViolated(format!("need n >= p, got n={n}, p={p}")));
    }
    let e = base_p_expansion(n, p);
    let bmax = e.terms.iter().map(|&(_, b)| b).max().unwrap_or(0);
    let hyp_i = p >= 5 || (p == 3 && bmax > 1) || (p == 2 && bmax > 3);
    let part_i = if hyp_i {
        let s: u64 = e.terms.iter().map(|&(a, b)| a + b as u64).sum();
        Some(2 * s <= n)
    } else {
        None
    };
    let hyp_ii = (p == 3 && bmax <= 1) || (p == 2 && bmax <= 3);
    let part_ii = if hyp_ii {
        // compare squares to keep everything integral
        let mut lhs = BigUint::one();
        for &(a, b) in &e.terms {
            for k in 2..=a {
                lhs *= BigUint::from(k);
            }
            lhs *= BigUint::from(p).pow(b);
        }
        let lhs2 = &lhs * &lhs;
        Some(lhs2 <= BigUint::from(p).pow(n as u32))
    } else {
        None
    };
    Ok((part_i, part_ii))
}

/// The minimal m ≥ 1 such that the binary digit counts of n and n − m have
/// different parities (m = 1 for n odd, m = 2 for n even). Computed by
/// search, not by the closed form.
pub fn check_lemma_parity(n: u64) -> u64 {
    assert!(n >= 2);
    let k = |x: u64| x.count_ones() % 2;
    (1..=n).find(|&m| k(n - m) != k(n)).expect("k(0) = 0 differs from k(n) eventually")
}

/// For p > 3 and n ≥ 2 with expansion n = Σ aᵢp^{bᵢ}:
///   general:    ∏ aᵢ!·p^{bᵢ} ≤ ((p−1)!)^{(n−1)/(p−2)};
///   refinement: if every aᵢ = 1, the same holds with an extra factor ½.
/// Returns (general verdict, refinement verdict or None if some aᵢ > 1).
pub fn check_lemma_basepbound(n: u64, p: u64) -> Result<(bool, Option<bool>)> {
    if !arith::is_prime(p) || p <= 3 {
        return Err(Error::HypothesisViolated(format!("need p > 3 prime, got {p}")));
    }
    if n < 2 {
        return Err(Error::HypothesisViolated("need n >= 2".into()));
    }
    let e = base_p_expansion(n, p);
    let mut lhs = ExactBound::one();
    for &(a, b) in &e.terms {
        lhs = lhs.mul(&factorial(a)).mul(&ExactBound::from_factor(p, Exp::from_integer(b as i64)));
    }
    let rhs = factorial(p - 1).pow(Exp::new(n as i64 - 1, p as i64 - 2))?;
    let general = lhs.cmp_exact(&rhs) != std::cmp::Ordering::Greater;
    let refinement = if e.terms.iter().all(|&(a, _)| a == 1) {
        let half_rhs = ExactBound::from_ratio(1, 2).mul(&rhs);
        Some(lhs.cmp_exact(&half_rhs) != std::cmp::Ordering::Greater)
    } else {
        None
    };
    Ok((general, refinement))
}

/// The seven cases of the field-extension bound, indexed as in its statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MtPart {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

/// Checks one case of the field-extension bound with n := m·t, q = p^f:
/// the order contribution of a ΓL_1(q^m)-style layer repeated over t blocks
/// is at most the corresponding row of f(n, q). Errors when (part, m, t, q)
/// violates that case's hypotheses.
pub fn check_mtbound(part: MtPart, m: u64, t: u64, q: u64) -> Result<bool> {
    let (p, _) = arith::prime_power(q)?;
    if m == 0 || t == 0 {
        return Err(Error::HypothesisViolated("need m, t >= 1".into()));
    }
    let n = m * t;
    let hyp = |ok: bool, msg: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::HypothesisViolated(msg.to_string()))
        }
    };
    // left side: [mult·(q^m − 1)]^t · h_p(t)
    let qm1 = BigUint::from(q).pow(m as u32) - 1u32;
    let lhs = |mult: u64| -> Result<ExactBound> {
        Ok(ExactBound::from_biguint(BigUint::from(mult) * &qm1)
            .pow(Exp::from_integer(t as i64))?
            .mul(&h_p_int(p, t)))
    };
    let rhs_row = |base: u64, den: u64| -> Result<ExactBound> {
        Ok(ExactBound::from_integer(base).pow(exp_frac(n, den))?.mul(&h_p(p, exp_frac(n, den))))
    };
    let le = |a: &ExactBound, b: &ExactBound| a.cmp_exact(b) != std::cmp::Ordering::Greater;
    match part {
        MtPart::I => {
            hyp(p == 2, "case i needs p = 2")?;
            let l = lhs(arith::p_prime_part(m, 2))?;
            Ok(le(&l, &rhs_row(3 * (q * q * q - 1), 3)?))
        }
        MtPart::II => {
            hyp(q == 3, "case ii needs q = 3")?;
            let l = lhs(arith::p_prime_part(m, 2))?;
            Ok(le(&l, &rhs_row(640, 4)?))
        }
        MtPart::III => {
            hyp(q == 3 && n % 4 != 0, "case iii needs q = 3 and 4 ∤ mt")?;
            let l = lhs(m)?;
            Ok(le(&l, &rhs_row(2 * (q * q - 1), 2)?))
        }
        MtPart::IV => {
            hyp(q == 9 || q == 27, "case iv needs q in {9, 27}")?;
            let l = lhs(m)?;
            Ok(le(&l, &rhs_row(2 * (q * q - 1), 2)?))
        }
        MtPart::V => {
            hyp(q == 5 || q == 7 || q == 11, "case v needs q in {5, 7, 11}")?;
            let l = lhs(m)?;
            Ok(le(&l, &rhs_row(alpha(q), 2)?))
        }
        MtPart::VI => {
            hyp(
                (q == 5 || q == 7 || q == 11) && n % 2 == 1,
                "case vi needs q in {5, 7, 11} and mt odd",
            )?;
            let l = lhs(arith::p_prime_part(m, p))?;
            Ok(le(&l, &rhs_row(q - 1, 1)?))
        }
        MtPart::VII => {
            hyp(
                p > 2 && ![3u64, 5, 7, 9, 11, 27].contains(&q),
                "case vii needs p odd and q not in {3, 5, 7, 9, 11, 27}",
            )?;
            let l = lhs(arith::p_prime_part(m, p))?;
            let mut ok = le(&l, &rhs_row(q - 1, 1)?);
            // moreover: for q = 13 (resp. 19) with 4 | n (resp. 2 | n) the
            // exceptional alpha-row is also dominated by (q−1)^n h_p(n)
            if ok && (q == 13 || q == 19) {
                let mq = if q == 13 { 4 } else { 2 };
                if n % mq == 0 {
                    let extra = ExactBound::from_integer(alpha(q))
                        .pow(Exp::from_integer((n / mq) as i64))?
                        .mul(&h_p_int(p, n / mq));
                    ok = le(&extra, &rhs_row(q - 1, 1)?);
                }
            }
            Ok(ok)
        }
    }
}

/// ((q^s − 1)/(q − 1))^t · q^{t−1} ≤ (q^{s^t} − 1)/(q − 1)?
/// (True for all prime powers q and s ≥ 2, t ≥ 1 except s = t = 2.)
pub fn check_bothcases(q: u64, s: u64, t: u64) -> Result<bool> {
    arith::prime_power(q)?;
    if s < 2 || t < 1 {
        return Err(Error::HypothesisViolated("need s >= 2, t >= 1".into()));
    }
    let st = s
        .checked_pow(t as u32)
        .filter(|&v| v <= 1 << 22)
        .ok_or_else(|| Error::TooLarge(format!("s^t = {s}^{t} is out of range")))? as u32;
    let q = BigUint::from(q);
    let q1 = &q - 1u32;
    let cyc = (q.pow(s as u32) - 1u32) / &q1;
    let lhs = cyc.pow(t as u32) * q.pow(t as u32 - 1);
    let rhs = (q.pow(st) - 1u32) / &q1;
    Ok(lhs <= rhs)
}

/// How one factor (Mᵢ, dᵢ) of a product bound is justified: either by the
/// generic ΓL_1-layer formula or by a 1-based row of the exceptional
/// quotient table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrangeTag {
    Generic,
    TableRow(usize),
}

/// Checks the product bound (q₁ − 1)·∏ Mᵢ ≤ (n₁)_{p′}·(q₁^{n₁} − 1) with
/// n₁ = ∏ dᵢ, where each (Mᵢ, dᵢ) is tagged with its justification:
///   Generic      → Mᵢ = (dᵢ)_{p′}·(q₁^{dᵢ} − 1)/(q₁ − 1);
///   TableRow(f)  → (dᵢ, q₁, Mᵢ) matches row f of the exceptional table.
/// Compatibility conditions on the tags: two table rows may repeat only for
/// rows 9 and 10; a table row in 2..=8 may combine with another table row
/// only if that row is 1, 9, or 10; a single factor must be Generic.
pub fn check_strange(q1: u64, items: &[(u64, u64, StrangeTag)]) -> Result<bool> {
    let (p, _) = arith::prime_power(q1)?;
    if items.is_empty() {
        return Err(Error::HypothesisViolated("need at least one factor".into()));
    }
    let rows: Vec<Option<usize>> = items
        .iter()
        .map(|&(_, _, tag)| match tag {
            StrangeTag::Generic => None,
            StrangeTag::TableRow(f) => Some(f),
        })
        .collect();
    if items.len() == 1 && rows[0].is_some() {
        return Err(Error::HypothesisViolated(
            "a single factor must use the generic justification".into(),
        ));
    }
    for (i, &fi) in rows.iter().enumerate() {
        let Some(fi) = fi else { continue };
        if !(1..=TABLE4_ROWS).contains(&fi) {
            return Err(Error::HypothesisViolated(format!("no table row {fi}")));
        }
        for &fj in rows.iter().skip(i + 1) {
            let Some(fj) = fj else { continue };
            if fi == fj && !(fi == 9 || fi == 10) {
                return Err(Error::HypothesisViolated(format!(
                    "table row {fi} may not repeat"
                )));
            }
            let clash = |a: usize, b: usize| (2..=8).contains(&a) && ![1, 9, 10].contains(&b);
            if clash(fi, fj) || clash(fj, fi) {
                return Err(Error::HypothesisViolated(format!(
                    "table rows {fi} and {fj} are incompatible"
                )));
            }
        }
    }
    // validate each factor against its justification
    for &(m, d, tag) in items {
        if d < 2 {
            return Err(Error::HypothesisViolated("need every d_i >= 2".into()));
        }
        match tag {
            StrangeTag::Generic => {
                let qd1 = BigUint::from(q1).pow(d as u32) - 1u32;
                let want = BigUint::from(arith::p_prime_part(d, p)) * qd1
                    / BigUint::from(q1 - 1);
                if BigUint::from(m) != want {
                    return Err(Error::HypothesisViolated(format!(
                        "factor (M={m}, d={d}) does not match the generic formula"
                    )));
                }
            }
            StrangeTag::TableRow(f) => {
                let (_, row_d, cells) = table4_row(f)
                    .ok_or_else(|| Error::HypothesisViolated(format!("no table row {f}")))?;
                let hit = row_d == d && cells.iter().any(|&(cq, cm)| cq == q1 && cm == m);
                if !hit {
                    return Err(Error::HypothesisViolated(format!(
                        "factor (M={m}, d={d}, q={q1}) does not match table row {f}"
                    )));
                }
            }
        }
    }
    let mut n1: u64 = 1;
    for &(_, d, _) in items {
        n1 = n1
            .checked_mul(d)
            .ok_or_else(|| Error::TooLarge("product of the d_i overflows".into()))?;
    }
    if n1 > 1 << 20 {
        return Err(Error::TooLarge(format!("n1 = {n1} is out of range")));
    }
    let mut lhs = BigUint::from(q1 - 1);
    for &(m, _, _) in items {
        lhs *= BigUint::from(m);
    }
    let rhs =
        BigUint::from(arith::p_prime_part(n1, p)) * (BigUint::from(q1).pow(n1 as u32) - 1u32);
    Ok(lhs <= rhs)
}

// ---------------------------------------------------------------------------
// Logarithmic bounds with exact enclosures
// ---------------------------------------------------------------------------

/// Outcome of a check whose bound involves log₂ of a non-power-of-two:
/// decided via the integer enclosure ⌊log₂n⌋ ≤ log₂n ≤ ⌈log₂n⌉, so it can be
/// genuinely undecidable without real-number arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Undecided,
}

fn log2_floor(n: u64) -> u32 {
    assert!(n >= 1);
    63 - n.leading_zeros()
}

fn log2_ceil(n: u64) -> u32 {
    let f = log2_floor(n);
    if n.is_power_of_two() {
        f
    } else {
        f + 1
    }
}

/// 2^{2(log₂n)² + log₂n}, exactly representable only when n is a power of 2.
pub fn thm_d_bound(n: u64) -> Result<ExactBound> {
    if !n.is_power_of_two() {
        return Err(Error::NonRepresentable(format!(
            "log2({n}) is irrational; use thm_d_check for the enclosure"
        )));
    }
    let k = log2_floor(n) as i64;
    Ok(ExactBound::from_factor(2, Exp::from_integer(2 * k * k + k)))
}

fn thm_d_value(k: u32) -> BigUint {
    BigUint::from(2u32).pow(2 * k * k + k)
}

/// Is |S| ≤ 2^{2(log₂n)² + log₂n}?  Decided via the floor/ceil enclosure of
/// log₂n (exact when n is a power of 2).
pub fn thm_d_check(order_s: &BigUint, n: u64) -> Verdict {
    assert!(n >= 2);
    if *order_s <= thm_d_value(log2_floor(n)) {
        Verdict::Holds
    } else if *order_s > thm_d_value(log2_ceil(n)) {
        Verdict::Fails
    } else {
        Verdict::Undecided
    }
}

/// Is |S| ≤ P^{2·log₂P}?  (P = minimal faithful permutation degree.)
pub fn perm_simple_check(order_s: &BigUint, p_deg: u64) -> Verdict {
    assert!(p_deg >= 2);
    let lo = BigUint::from(p_deg).pow(2 * log2_floor(p_deg));
    if *order_s <= lo {
        return Verdict::Holds;
    }
    let hi = BigUint::from(p_deg).pow(2 * log2_ceil(p_deg));
    if *order_s > hi {
        Verdict::Fails
    } else {
        Verdict::Undecided
    }
}

/// Is |Out(S)| ≤ 6·log₂n?  (n = minimal faithful representation degree.)
pub fn rep_simple_out_check(out: u64, n: u64) -> Verdict {
    assert!(n >= 2);
    if out as u128 <= 6 * log2_floor(n) as u128 {
        Verdict::Holds
    } else if out as u128 > 6 * log2_ceil(n) as u128 {
        Verdict::Fails
    } else {
        Verdict::Undecided
    }
}

/// q^{n(n−1)}: the exact number of p-power-order elements of GL_n(q), q = p^f.
pub fn steinberg_count(n: u64, q: u64) -> BigUint {
    BigUint::from(q).pow((n * (n - 1)) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn eb(n: u64) -> ExactBound {
        ExactBound::from_integer(n)
    }

    fn eq(a: &ExactBound, b: &ExactBound) -> bool {
        a.cmp_exact(b) == Ordering::Equal
    }

    #[test]
    fn expansions() {
        assert_eq!(base_p_expansion(10, 3).terms, vec![(1, 0), (1, 2)]);
        assert_eq!(base_p_expansion(7, 2).terms, vec![(1, 0), (1, 1), (1, 2)]);
        assert_eq!(base_p_expansion(12, 5).terms, vec![(2, 0), (2, 1)]);
        assert_eq!(base_p_expansion(0, 5).terms, vec![]);
    }

    #[test]
    fn h_values() {
        assert!(eq(&h_p_int(2, 9), &eb(81)));
        assert!(eq(&h_p_int(2, 1), &eb(1)));
        assert!(eq(&h_p_int(3, 5), &eb(20)));
        let expect = eb(24).pow(Exp::new(5, 3)).unwrap();
        assert!(eq(&h_p_int(5, 6), &expect));
        // h_p(a)·h_p(b) ≤ h_p(a+b)
        for p in [2u64, 3, 5, 7] {
            for a in 1..10u64 {
                for b in 1..10u64 {
                    let prod = h_p_int(p, a).mul(&h_p_int(p, b));
                    assert_ne!(prod.cmp_exact(&h_p_int(p, a + b)), Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn f_and_i_values() {
        assert!(eq(&f_bound(1, 13).unwrap(), &eb(12)));
        assert!(eq(&f_bound(3, 2).unwrap(), &eb(21)));
        assert!(eq(&i_bound(3, 2).unwrap(), &eb(21)));
        assert!(eq(&i_bound(4, 3).unwrap(), &eb(640)));
        assert!(eq(&i_bound(2, 9).unwrap(), &eb(160)));
        // q = 3, n not divisible by 4 → 16^{n/2} row
        assert!(eq(&i_bound(2, 3).unwrap(), &eb(16)));
        // q ∈ {5,7,11} odd n → (q−1)^n row
        assert!(eq(&i_bound(1, 5).unwrap(), &eb(4)));
        // i ≤ f on a small grid
        for n in 1..=12u64 {
            for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
                let i = i_bound(n, q).unwrap();
                let f = f_bound(n, q).unwrap();
                assert_ne!(i.cmp_exact(&f), Ordering::Greater, "i > f at n={n}, q={q}");
            }
        }
        // supermultiplicativity sample: f(r)f(s) ≤ f(r+s)
        for q in [2u64, 3, 5, 9] {
            for r in 1..=6u64 {
                for s in 1..=6u64 {
                    let lhs = f_bound(r, q).unwrap().mul(&f_bound(s, q).unwrap());
                    let rhs = f_bound(r + s, q).unwrap();
                    assert_ne!(lhs.cmp_exact(&rhs), Ordering::Greater, "q={q}, r={r}, s={s}");
                }
            }
        }
        assert!(matches!(f_bound(2, 12), Err(Error::NotPrimePower(12))));
    }

    #[test]
    fn thm_c_values() {
        assert_eq!(thm_c_bound(3, 2, 2), 21);
        assert_eq!(thm_c_bound(2, 9, 3), 160);
        assert_eq!(thm_c_bound(2, 27, 3), 2 * (27 * 27 - 1));
    }

    #[test]
    fn tables() {
        assert_eq!(table1_lookup("(q−1)∘2^{1+2}.Sp_2(2)", 2, 5).unwrap(), 96);
        assert_eq!(table1_lookup("(q-1)∘2^{1+2}.Sp_2(2)", 2, 7).unwrap(), 144);
        assert_eq!(table1_lookup("2^{1+4}.(5⋊4)", 4, 3).unwrap(), 640);
        assert_eq!(table1_lookup("(q−1)∘2.Alt_5", 2, 19).unwrap(), 1140);
        assert_eq!(table4_lookup("Alt_5", 2, 19).unwrap(), 60);
        assert_eq!(table4_lookup("2^4.Sp_4(2)", 4, 3).unwrap(), 288);
        assert_eq!(table4_lookup("2^4.Sp_4(2)", 4, 11).unwrap(), 11520);
        assert!(matches!(table1_lookup("Alt_5", 2, 19), Err(Error::NoSuchRow(_))));
        assert!(matches!(table4_lookup("Alt_5", 2, 7), Err(Error::NoSuchRow(_))));
    }

    #[test]
    fn lie_caps() {
        let g2p3 = lie_centralizer_cap(LieFamily::G2, 3, 5, 2);
        assert!(eq(&g2p3, &eb(3 * 25)));
        let default = lie_centralizer_cap(LieFamily::Other, 7, 4, 3);
        assert!(eq(&default, &eb(64)));
        let psp = lie_centralizer_cap(LieFamily::PSp2l, 2, 3, 4);
        assert!(eq(&psp, &eb(2 * 81)));
    }

    #[test]
    fn canonical_elements() {
        let x = x_p_element(10, 3);
        assert_eq!(x.order(), 9);
        assert_eq!(sym_centralizer_order(&base_p_expansion(10, 3)), 9);
        let x4 = x_p_element(4, 2);
        assert_eq!(x4.order(), 4);
        assert_eq!(sym_centralizer_order(&base_p_expansion(4, 2)), 4);
        assert_eq!(sym_centralizer_order(&base_p_expansion(6, 5)), 5);
        // two 1-cycles and two 5-cycles: 2!·1·2!·25 = 100
        assert_eq!(sym_centralizer_order(&base_p_expansion(12, 5)), 100);
    }

    /// Exhaustive centralizer count in Sym_n (streamed, no group enumeration).
    fn sym_centralizer_scan(x: &Elt) -> (u64, u64) {
        let Elt::Perm(xs) = x else { panic!("perm expected") };
        let n = xs.len();
        let mut csym = 0u64;
        let mut calt = 0u64;
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut stack = vec![0usize; n];
        let count = |perm: &[u32], csym: &mut u64, calt: &mut u64| {
            let commutes = (0..n).all(|i| perm[xs[i] as usize] == xs[perm[i] as usize]);
            if commutes {
                *csym += 1;
                // parity by cycle count
                let mut seen = vec![false; n];
                let mut transpositions = 0u32;
                for s in 0..n {
                    if !seen[s] {
                        let mut j = s;
                        let mut len = 0;
                        while !seen[j] {
                            seen[j] = true;
                            j = perm[j] as usize;
                            len += 1;
                        }
                        transpositions += len - 1;
                    }
                }
                if transpositions % 2 == 0 {
                    *calt += 1;
                }
            }
        };
        // Heap's algorithm
        count(&perm, &mut csym, &mut calt);
        let mut i = 0usize;
        while i < n {
            if stack[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(stack[i], i);
                }
                count(&perm, &mut csym, &mut calt);
                stack[i] += 1;
                i = 0;
            } else {
                stack[i] = 0;
                i += 1;
            }
        }
        (csym, calt)
    }

    #[test]
    fn centralizer_formula_matches_exhaustive_count() {
        for n in 2..=8u64 {
            for p in [2u64, 3, 5, 7] {
                let (csym, _) = sym_centralizer_scan(&x_p_element(n, p));
                assert_eq!(
                    csym,
                    sym_centralizer_order(&base_p_expansion(n, p)),
                    "n={n}, p={p}"
                );
            }
        }
    }

    #[test]
    fn alt_small_elements() {
        // n = 5, even coset: (1 2)(3 4)-type, |C_{Alt_5}| = 4
        let y = alt_small_centralizer_element(5, 2, false).unwrap();
        let (_, calt) = sym_centralizer_scan(&y);
        assert_eq!(calt, 4);
        assert_eq!(y.order(), 2);
        // minimal centralizers per coset, verified exhaustively. Note the odd
        // coset of Alt_7 bottoms out at 12, which exceeds 2^{3.5} ≈ 11.31:
        // no better element exists (the only odd 2-power cycle types of
        // degree 7 give centralizers 12, 24 and 120).
        let expect = [(5u64, 4u64, 2u64), (7, 4, 12), (8, 8, 4)];
        for (n, even_c, odd_c) in expect {
            for (odd, want) in [(false, even_c), (true, odd_c)] {
                let y = alt_small_centralizer_element(n, 2, odd).unwrap();
                let Elt::Perm(ys) = &y else { unreachable!() };
                let transpositions: u32 = {
                    let mut seen = vec![false; ys.len()];
                    let mut t = 0;
                    for s in 0..ys.len() {
                        if !seen[s] {
                            let mut j = s;
                            let mut len = 0u32;
                            while !seen[j] {
                                seen[j] = true;
                                j = ys[j] as usize;
                                len += 1;
                            }
                            t += len - 1;
                        }
                    }
                    t
                };
                assert_eq!(transpositions % 2 == 1, odd, "coset mismatch at n={n}");
                let (_, calt) = sym_centralizer_scan(&y);
                assert_eq!(calt, want, "n={n}, odd={odd}");
            }
        }
        assert!(matches!(alt_small_centralizer_element(6, 2, false), Err(Error::Unsupported(_))));
        assert!(matches!(
            alt_small_centralizer_element(8, 3, false),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn lemma_basep() {
        // (10, 3): digits (1,0),(1,2); part i applies (b = 2 > 1) and holds
        let (i, ii) = check_lemma_basep(10, 3).unwrap();
        assert_eq!(i, Some(true));
        assert_eq!(ii, None);
        // (7, 2): digits all b ≤ 3, part ii applies:
        // ∏ aᵢ!·p^{bᵢ} = 1·2·4 = 8 ≤ 2^{3.5} ≈ 11.3
        let (i, ii) = check_lemma_basep(7, 2).unwrap();
        assert_eq!(i, None);
        assert_eq!(ii, Some(true));
        // part (i) is false as printed at e.g. (n, p) = (7, 5): digits
        // (2,0),(1,1) give Σ(aᵢ+bᵢ) = 4 > 7/2, and the checker reports that
        let (i, _) = check_lemma_basep(7, 5).unwrap();
        assert_eq!(i, Some(false));
        // ... but the closing conclusion ∏ aᵢ!·p^{bᵢ} ≤ p^{n/2} holds
        // throughout (compare squares to stay integral)
        for p in [2u64, 3, 5, 7, 11, 31] {
            for n in p..400 {
                let e = base_p_expansion(n, p);
                let mut lhs = BigUint::one();
                for &(a, b) in &e.terms {
                    for k in 2..=a {
                        lhs *= BigUint::from(k);
                    }
                    lhs *= BigUint::from(p).pow(b);
                }
                assert!(&lhs * &lhs <= BigUint::from(p).pow(n as u32), "n={n}, p={p}");
                // part applicability: exactly one part for p ∈ {2,3}
                let (i, ii) = check_lemma_basep(n, p).unwrap();
                assert!(ii != Some(false), "part ii fails at n={n}, p={p}");
                if p >= 5 {
                    assert!(i.is_some() && ii.is_none());
                } else {
                    assert!(i.is_some() != ii.is_some(), "exactly one part applies");
                    assert!(i != Some(false), "part i fails at n={n}, p={p}");
                }
            }
        }
        assert!(matches!(check_lemma_basep(3, 4), Err(Error::NotPrime(4))));
        assert!(matches!(check_lemma_basep(2, 3), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn lemma_parity() {
        assert_eq!(check_lemma_parity(13), 1);
        assert_eq!(check_lemma_parity(10), 2);
        // the printed claim "m = 2 for all even n" is wrong when the 2-adic
        // valuation of n is even: already n = 4 has k(4) = 1, k(3) = 2, so
        // m = 1. The true closed form is m = 2 exactly when v_2(n) is odd.
        assert_eq!(check_lemma_parity(4), 1);
        assert_eq!(check_lemma_parity(12), 1);
        for n in 2..2000u64 {
            let v2_odd = n.trailing_zeros() % 2 == 1;
            assert_eq!(check_lemma_parity(n), if v2_odd { 2 } else { 1 }, "n={n}");
        }
    }

    #[test]
    fn lemma_basepbound() {
        // n = 6, p = 5: digits (1,0),(1,1) → 5 ≤ ½·24^{5/3}
        let (general, refinement) = check_lemma_basepbound(6, 5).unwrap();
        assert!(general);
        assert_eq!(refinement, Some(true));
        // a digit > 1: refinement not applicable
        let (general, refinement) = check_lemma_basepbound(12, 5).unwrap();
        assert!(general);
        assert_eq!(refinement, None);
        for p in [5u64, 7, 11, 13] {
            for n in 2..300u64 {
                let (g, r) = check_lemma_basepbound(n, p).unwrap();
                assert!(g, "general bound fails at n={n}, p={p}");
                assert!(r != Some(false), "refinement fails at n={n}, p={p}");
            }
        }
        assert!(matches!(check_lemma_basepbound(5, 3), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn mtbound_cases() {
        assert!(check_mtbound(MtPart::VII, 4, 1, 13).unwrap());
        assert!(check_mtbound(MtPart::VII, 2, 2, 19).unwrap());
        assert!(check_mtbound(MtPart::I, 3, 2, 4).unwrap());
        assert!(check_mtbound(MtPart::II, 4, 1, 3).unwrap());
        assert!(check_mtbound(MtPart::III, 2, 1, 3).unwrap());
        assert!(check_mtbound(MtPart::IV, 2, 3, 9).unwrap());
        assert!(check_mtbound(MtPart::V, 2, 2, 7).unwrap());
        assert!(check_mtbound(MtPart::VI, 3, 1, 11).unwrap());
        assert!(matches!(check_mtbound(MtPart::I, 2, 2, 3), Err(Error::HypothesisViolated(_))));
        assert!(matches!(check_mtbound(MtPart::III, 2, 2, 3), Err(Error::HypothesisViolated(_))));
        assert!(matches!(check_mtbound(MtPart::VII, 2, 2, 7), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn bothcases_exceptions() {
        assert!(!check_bothcases(5, 2, 2).unwrap());
        assert!(check_bothcases(3, 2, 3).unwrap());
        // the claimed exception (q, s, t) = (2, 2, 3) is not one:
        // 3³·2² = 108 ≤ (2⁸ − 1)/1 = 255, so the inequality holds there
        assert!(check_bothcases(2, 2, 3).unwrap());
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for s in 2..=6u64 {
                for t in 1..=5u64 {
                    let expect = !(s == 2 && t == 2);
                    assert_eq!(
                        check_bothcases(q, s, t).unwrap(),
                        expect,
                        "q={q}, s={s}, t={t}"
                    );
                }
            }
        }
        assert!(matches!(check_bothcases(6, 2, 2), Err(Error::NotPrimePower(6))));
        assert!(matches!(check_bothcases(5, 1, 2), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn strange_bound() {
        // q₁ = 7: rows 1 and 2 combine: 6·216·24 ≤ 6·(7^6 − 1)
        let ok = check_strange(
            7,
            &[(216, 3, StrangeTag::TableRow(1)), (24, 2, StrangeTag::TableRow(2))],
        )
        .unwrap();
        assert!(ok);
        // generic single factor: M = 2'·(q^2−1)/(q−1) at q=7, d=2, p=7: M = 2·8 = 16
        assert!(check_strange(7, &[(16, 2, StrangeTag::Generic)]).unwrap());
        // row repeated outside {9, 10} → violated
        assert!(matches!(
            check_strange(
                7,
                &[(24, 2, StrangeTag::TableRow(2)), (24, 2, StrangeTag::TableRow(2))]
            ),
            Err(Error::HypothesisViolated(_))
        ));
        // two middle rows → violated
        assert!(matches!(
            check_strange(
                7,
                &[(11520, 4, StrangeTag::TableRow(4)), (5760, 4, StrangeTag::TableRow(7))]
            ),
            Err(Error::HypothesisViolated(_))
        ));
        // rows 9 and 9 at q = 11 are allowed: (q−1)·60·60 ≤ 4_{11'}(11^4−1)
        assert!(check_strange(
            11,
            &[(60, 2, StrangeTag::TableRow(9)), (60, 2, StrangeTag::TableRow(9))]
        )
        .unwrap());
        // single factor justified by a table row → violated
        assert!(matches!(
            check_strange(11, &[(60, 2, StrangeTag::TableRow(9))]),
            Err(Error::HypothesisViolated(_))
        ));
        // wrong M for the claimed row → violated
        assert!(matches!(
            check_strange(
                7,
                &[(217, 3, StrangeTag::TableRow(1)), (24, 2, StrangeTag::TableRow(2))]
            ),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn log_enclosure_checks() {
        assert_eq!(perm_simple_check(&BigUint::from(60u32), 5), Verdict::Holds);
        assert_eq!(rep_simple_out_check(12, 4), Verdict::Holds);
        assert_eq!(rep_simple_out_check(13, 4), Verdict::Fails);
        assert_eq!(rep_simple_out_check(13, 5), Verdict::Undecided);
        // Alt_5: n = P = 5, |S| = 60 ≤ 2^{2·4+2} with floor log = 2
        assert_eq!(thm_d_check(&BigUint::from(60u32), 5), Verdict::Holds);
        let b = thm_d_bound(8).unwrap();
        assert!(eq(&b, &ExactBound::from_factor(2, Exp::from_integer(21))));
        assert!(matches!(thm_d_bound(5), Err(Error::NonRepresentable(_))));
    }

    #[test]
    fn steinberg_values() {
        assert_eq!(steinberg_count(2, 3), BigUint::from(9u32));
        assert_eq!(steinberg_count(3, 2), BigUint::from(64u32));
        assert_eq!(steinberg_count(1, 7), BigUint::one());
    }
}
