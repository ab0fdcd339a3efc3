//! Exact positive reals of the shape `c · ∏ bᵢ^(eᵢ)` with a nonnegative
//! rational coefficient `c`, integer bases `bᵢ ≥ 2` and nonzero rational
//! exponents `eᵢ`.
//!
//! Values of this shape (for example `20^((m−1)/4)` or `[3(q³−1)]^(n/3)`)
//! are compared *exactly*: the comparison clears exponent denominators and
//! reduces to one big-integer comparison, so no float ever sits on a
//! decision path. Floats are produced only on demand, for display.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::{Error, Result};

/// Exponents stay small (denominators come from h_p, so at most a few
/// hundred); machine-word rationals are enough and keep lcm/gcd cheap.
pub type Exp = Ratio<i64>;

/// Bound on trial division when a coefficient must be split into prime
/// bases (only needed for fractional powers and canonical printing).
const FACTOR_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct ExactBound {
    /// Nonnegative. The value is zero iff this is zero.
    coeff: BigRational,
    /// base ≥ 2 → nonzero exponent; bases pairwise distinct (map keys).
    factors: BTreeMap<u64, Exp>,
}

/// Float view of an [`ExactBound`]; advisory only, never fed back into
/// comparisons.
#[derive(Clone, Copy, Debug)]
pub struct FloatApprox {
    /// Best-effort double value; `f64::INFINITY` when out of range.
    pub value: f64,
    /// log₂ of the value, always finite for positive values.
    pub log2: f64,
    /// True when the value exceeds double range and only `log2` is usable.
    pub overflow: bool,
}

impl ExactBound {
    pub fn one() -> Self {
        ExactBound { coeff: BigRational::one(), factors: BTreeMap::new() }
    }

    pub fn zero() -> Self {
        ExactBound { coeff: BigRational::zero(), factors: BTreeMap::new() }
    }

    /// Embeds a positive integer (kept as a bare coefficient; it compares
    /// equal to any factored representation of the same value).
    pub fn from_integer(n: u64) -> Self {
        Self::from_biguint(BigUint::from(n))
    }

    pub fn from_biguint(n: BigUint) -> Self {
        ExactBound { coeff: BigRational::from_integer(n.into()), factors: BTreeMap::new() }
    }

    /// num/den with den > 0.
    pub fn from_ratio(num: u64, den: u64) -> Self {
        assert!(den > 0, "denominator must be positive");
        ExactBound {
            coeff: BigRational::new(BigUint::from(num).into(), BigUint::from(den).into()),
            factors: BTreeMap::new(),
        }
    }

    pub fn from_big_ratio(r: BigRational) -> Self {
        assert!(!r.is_negative(), "ExactBound values are nonnegative");
        ExactBound { coeff: r, factors: BTreeMap::new() }
    }

    /// base^exp with base ≥ 2.
    pub fn from_factor(base: u64, exp: Exp) -> Self {
        assert!(base >= 2, "factor bases must be at least 2");
        let mut factors = BTreeMap::new();
        if !exp.is_zero() {
            factors.insert(base, exp);
        }
        ExactBound { coeff: BigRational::one(), factors }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The exact value as a big integer, when it is one (integral
    /// coefficient, nonnegative integral exponents).
    pub fn as_integer(&self) -> Option<BigUint> {
        if !self.coeff.denom().is_one() {
            return None;
        }
        let mut acc = self.coeff.numer().to_biguint()?;
        for (&b, &e) in &self.factors {
            if !e.denom().is_one() || *e.numer() < 0 {
                return None;
            }
            let exp = u32::try_from(*e.numer()).ok()?;
            acc *= BigUint::from(b).pow(exp);
        }
        Some(acc)
    }

    pub fn mul(&self, other: &ExactBound) -> ExactBound {
        if self.is_zero() || other.is_zero() {
            return ExactBound::zero();
        }
        let mut factors = self.factors.clone();
        for (&b, &e) in &other.factors {
            let entry = factors.entry(b).or_insert_with(Exp::zero);
            *entry += e;
            if entry.is_zero() {
                factors.remove(&b);
            }
        }
        ExactBound { coeff: &self.coeff * &other.coeff, factors }
    }

    /// value^e. Integer exponents never fail; fractional exponents require
    /// the coefficient to split into primes below the trial-division bound.
    pub fn pow(&self, e: Exp) -> Result<ExactBound> {
        if e.is_zero() {
            return Ok(ExactBound::one());
        }
        if self.is_zero() {
            return if e.is_negative() { Err(Error::DivisionByZero) } else { Ok(ExactBound::zero()) };
        }
        let base = if e.is_integer() { self.clone() } else { self.factored()? };
        let coeff = if base.coeff.is_one() {
            BigRational::one()
        } else {
            // only the integer-exponent path can reach a nontrivial coeff
            let k = e
                .to_integer()
                .to_i32()
                .ok_or_else(|| Error::TooLarge(format!("exponent {e} out of range")))?;
            base.coeff.pow(k)
        };
        let mut factors = BTreeMap::new();
        for (&b, &old) in &base.factors {
            let scaled = checked_mul_exp(old, e)?;
            if !scaled.is_zero() {
                factors.insert(b, scaled);
            }
        }
        Ok(ExactBound { coeff, factors })
    }

    /// Exact three-way comparison. Forms the ratio, clears exponent
    /// denominators (and divides out the common exponent gcd, which keeps
    /// the big integers small), then compares integer products.
    pub fn cmp_exact(&self, other: &ExactBound) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        // exponent differences of the ratio self/other
        let mut diff: BTreeMap<u64, Exp> = self.factors.clone();
        for (&b, &e) in &other.factors {
            let entry = diff.entry(b).or_insert_with(Exp::zero);
            *entry -= e;
            if entry.is_zero() {
                diff.remove(&b);
            }
        }
        let coeff_trivial = self.coeff == other.coeff;
        if diff.is_empty() {
            return if coeff_trivial { Ordering::Equal } else { self.coeff.cmp(&other.coeff) };
        }
        let mut l: i64 = 1;
        for e in diff.values() {
            l = num_integer::lcm(l, *e.denom());
        }
        let ints: Vec<(u64, i128)> =
            diff.iter().map(|(&b, e)| (b, *e.numer() as i128 * (l / e.denom()) as i128)).collect();
        // common exponent gcd: comparing x^k with 1 is order-preserving for
        // any positive k, so the whole ratio may be deflated by g
        let mut g: i128 = if coeff_trivial { 0 } else { l as i128 };
        for &(_, e) in &ints {
            g = num_integer::gcd(g, e.abs());
        }
        debug_assert!(g > 0);
        // gather multiplicands (base, exponent) per side
        let mut num_parts: Vec<(BigUint, u32)> = Vec::new();
        let mut den_parts: Vec<(BigUint, u32)> = Vec::new();
        if !coeff_trivial {
            let lr = (l as i128 / g) as u32;
            let (an, ad) = rational_parts(&self.coeff);
            let (bn, bd) = rational_parts(&other.coeff);
            num_parts.push((an, lr));
            num_parts.push((bd, lr));
            den_parts.push((bn, lr));
            den_parts.push((ad, lr));
        }
        for &(b, e) in &ints {
            let k = (e.abs() / g)
                .to_u32()
                .expect("reduced exponent exceeds u32 range");
            if e > 0 {
                num_parts.push((BigUint::from(b), k));
            } else {
                den_parts.push((BigUint::from(b), k));
            }
        }
        // bit-length enclosure: ∏ bᵢ^{kᵢ} lies in [2^lo, 2^hi] with
        // lo = Σ kᵢ(bits(bᵢ)−1) and hi = Σ kᵢ·bits(bᵢ); disjoint enclosures
        // decide the comparison without forming the (possibly huge) products
        let bits_lo = |parts: &[(BigUint, u32)]| -> u128 {
            parts.iter().map(|(b, k)| (b.bits() as u128 - 1) * *k as u128).sum()
        };
        let bits_hi = |parts: &[(BigUint, u32)]| -> u128 {
            parts.iter().map(|(b, k)| b.bits() as u128 * *k as u128).sum()
        };
        if bits_lo(&num_parts) > bits_hi(&den_parts) {
            return Ordering::Greater;
        }
        if bits_lo(&den_parts) > bits_hi(&num_parts) {
            return Ordering::Less;
        }
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (b, k) in num_parts {
            num *= b.pow(k);
        }
        for (b, k) in den_parts {
            den *= b.pow(k);
        }
        num.cmp(&den)
    }

    /// Double-precision view. `log2` stays reliable far beyond f64 range.
    pub fn to_float(&self) -> FloatApprox {
        if self.is_zero() {
            return FloatApprox { value: 0.0, log2: f64::NEG_INFINITY, overflow: false };
        }
        let (n, d) = rational_parts(&self.coeff);
        let mut log2 = log2_biguint(&n) - log2_biguint(&d);
        for (&b, &e) in &self.factors {
            log2 += exp_to_f64(e) * (b as f64).log2();
        }
        if log2.abs() > 1020.0 {
            FloatApprox { value: if log2 > 0.0 { f64::INFINITY } else { 0.0 }, log2, overflow: true }
        } else {
            FloatApprox { value: log2.exp2(), log2, overflow: false }
        }
    }

    /// Fully prime-factored representation (trial division on the
    /// coefficient, merged into the base map).
    fn factored(&self) -> Result<ExactBound> {
        if self.coeff.is_one() || self.is_zero() {
            return Ok(self.clone());
        }
        let (n, d) = rational_parts(&self.coeff);
        let mut factors = self.factors.clone();
        for (value, sign) in [(n, 1i64), (d, -1i64)] {
            if value.is_one() {
                continue;
            }
            let mut parts: Vec<(u64, u32)> = Vec::new();
            let mut rest = value;
            // peel small primes off oversized coefficients (smooth values
            // such as factorials shrink quickly), then finish in u64
            let mut p = 2u64;
            while rest.to_u64().is_none() {
                if p > FACTOR_BOUND {
                    return Err(Error::NonRepresentable(format!(
                        "coefficient has no prime factor below {FACTOR_BOUND}"
                    )));
                }
                let big_p = BigUint::from(p);
                let mut m = 0u32;
                while (&rest % &big_p).is_zero() {
                    rest /= &big_p;
                    m += 1;
                }
                if m > 0 {
                    parts.push((p, m));
                }
                p += if p == 2 { 1 } else { 2 };
            }
            let v = rest.to_u64().unwrap();
            if v > 1 {
                let (small, residue) = arith::factor_bounded(v, FACTOR_BOUND);
                if residue != 1 {
                    return Err(Error::NonRepresentable(format!(
                        "coefficient {v} has no prime factor below {FACTOR_BOUND}"
                    )));
                }
                for (p, m) in small {
                    match parts.iter_mut().find(|e| e.0 == p) {
                        Some(e) => e.1 += m,
                        None => parts.push((p, m)),
                    }
                }
            }
            for (p, m) in parts {
                let entry = factors.entry(p).or_insert_with(Exp::zero);
                *entry += Exp::from_integer(sign * m as i64);
                if entry.is_zero() {
                    factors.remove(&p);
                }
            }
        }
        Ok(ExactBound { coeff: BigRational::one(), factors })
    }

    /// Canonical string form: coefficient residue (omitted when 1 and
    /// factors exist) followed by `base^exp` terms with sorted bases.
    fn canonical(&self) -> (BigRational, BTreeMap<u64, Exp>) {
        match self.factored() {
            Ok(f) => (f.coeff, f.factors),
            Err(_) => (self.coeff.clone(), self.factors.clone()),
        }
    }
}

/// n! as an exact value (bare big-integer coefficient; fractional powers
/// of it factor cleanly since factorials are smooth).
pub fn factorial(n: u64) -> ExactBound {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    ExactBound::from_biguint(acc)
}

impl PartialEq for ExactBound {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}
impl Eq for ExactBound {}
impl PartialOrd for ExactBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}
impl Ord for ExactBound {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

fn checked_mul_exp(a: Exp, b: Exp) -> Result<Exp> {
    let n = *a.numer() as i128 * *b.numer() as i128;
    let d = *a.denom() as i128 * *b.denom() as i128;
    let g = num_integer::gcd(n.abs(), d);
    let (n, d) = (n / g, d / g);
    match (n.to_i64(), d.to_i64()) {
        (Some(n), Some(d)) => Ok(Exp::new(n, d)),
        _ => Err(Error::TooLarge(format!("exponent {n}/{d} out of range"))),
    }
}

fn rational_parts(r: &BigRational) -> (BigUint, BigUint) {
    (
        r.numer().magnitude().clone(),
        r.denom().magnitude().clone(),
    )
}

fn log2_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().unwrap_or(0.0).log2();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_f64().unwrap_or(0.0);
    top.log2() + shift as f64
}

fn exp_to_f64(e: Exp) -> f64 {
    *e.numer() as f64 / *e.denom() as f64
}

impl fmt::Display for ExactBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (coeff, factors) = self.canonical();
        let mut terms: Vec<String> = Vec::new();
        if !coeff.is_one() || factors.is_empty() {
            if coeff.is_integer() {
                terms.push(coeff.numer().to_string());
            } else {
                terms.push(format!("{}/{}", coeff.numer(), coeff.denom()));
            }
        }
        for (b, e) in &factors {
            if e.is_integer() && !e.is_negative() {
                terms.push(format!("{b}^{}", e.numer()));
            } else if e.is_integer() {
                terms.push(format!("{b}^({})", e.numer()));
            } else {
                terms.push(format!("{b}^({}/{})", e.numer(), e.denom()));
            }
        }
        write!(f, "{}", terms.join(" * "))
    }
}

impl FromStr for ExactBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut acc = ExactBound::one();
        let mut offset = 0usize;
        for raw in s.split('*') {
            let term = raw.trim();
            let term_offset = offset + (raw.len() - raw.trim_start().len());
            offset += raw.len() + 1;
            if term.is_empty() {
                return Err(Error::Parse { offset: term_offset, msg: "empty term".into() });
            }
            acc = acc.mul(&parse_term(term, term_offset)?);
        }
        Ok(acc)
    }
}

fn parse_term(term: &str, offset: usize) -> Result<ExactBound> {
    let err = |msg: &str| Error::Parse { offset, msg: msg.into() };
    if let Some((base, exp)) = term.split_once('^') {
        let base: u64 = base.trim().parse().map_err(|_| err("invalid base"))?;
        if base < 2 {
            return Err(err("base must be at least 2"));
        }
        let exp = exp.trim();
        let inner = exp.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(exp);
        let e = if let Some((n, d)) = inner.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|_| err("invalid exponent numerator"))?;
            let d: i64 = d.trim().parse().map_err(|_| err("invalid exponent denominator"))?;
            if d <= 0 {
                return Err(err("exponent denominator must be positive"));
            }
            Exp::new(n, d)
        } else {
            Exp::from_integer(inner.trim().parse().map_err(|_| err("invalid exponent"))?)
        };
        Ok(ExactBound::from_factor(base, e))
    } else if let Some((n, d)) = term.split_once('/') {
        let n: BigUint = n.trim().parse().map_err(|_| err("invalid numerator"))?;
        let d: BigUint = d.trim().parse().map_err(|_| err("invalid denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(ExactBound::from_big_ratio(BigRational::new(n.into(), d.into())))
    } else {
        let n: BigUint = term.parse().map_err(|_| err("invalid integer"))?;
        Ok(ExactBound::from_biguint(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eb(s: &str) -> ExactBound {
        s.parse().unwrap()
    }

    #[test]
    fn embedding_and_equality() {
        assert_eq!(ExactBound::from_integer(81), eb("3^4"));
        assert_eq!(ExactBound::from_integer(1), ExactBound::one());
        assert_eq!(ExactBound::from_integer(640), eb("2^7 * 5^1"));
    }

    #[test]
    fn multiplication() {
        let r = ExactBound::from_factor(3, Exp::new(1, 2));
        assert_eq!(r.mul(&r), ExactBound::from_integer(3));
        // 3^(3/2) · 3^(5/2) = 3^4 = 81
        let a = ExactBound::from_factor(3, Exp::new(3, 2));
        let b = ExactBound::from_factor(3, Exp::new(5, 2));
        assert_eq!(a.mul(&b), ExactBound::from_integer(81));
        let x = eb("7/3 * 2^(1/5)");
        assert_eq!(x.mul(&ExactBound::one()), x);
    }

    #[test]
    fn comparisons() {
        use Ordering::*;
        assert_eq!(eb("3^(1/2)").cmp_exact(&eb("2")), Less);
        assert_eq!(eb("20^(1/4)").cmp_exact(&eb("2")), Greater);
        assert_eq!(eb("3^4").cmp_exact(&eb("81")), Equal);
        assert_eq!(eb("2^(7/4) * 5^(1/4)").pow(Exp::from_integer(4)).unwrap(), eb("640"));
        // mixed signs of exponents and nontrivial coefficients
        assert_eq!(eb("7 * 2^(-3)").cmp_exact(&eb("7/8")), Equal);
        assert_eq!(eb("5/4").cmp_exact(&eb("6/5")), Greater);
    }

    #[test]
    fn powers() {
        let x = eb("3^2");
        assert_eq!(x.pow(Exp::new(1, 2)).unwrap(), eb("3"));
        assert_eq!(eb("640").pow(Exp::new(1, 4)).unwrap(), eb("2^(7/4) * 5^(1/4)"));
        assert_eq!(eb("17/3 * 11^5").pow(Exp::zero()).unwrap(), ExactBound::one());
        // a coefficient with a large prime factor cannot be split
        let p = ExactBound::from_biguint(BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64));
        assert!(p.pow(Exp::new(1, 2)).is_err());
        assert!(p.pow(Exp::from_integer(2)).is_ok());
    }

    #[test]
    fn float_view() {
        let v = eb("3^4").to_float();
        assert!(!v.overflow && (v.value - 81.0).abs() < 1e-9);
        let v = eb("20^(1/4)").to_float();
        assert!((v.value - 2.114742).abs() < 1e-5);
        let v = eb("2^2000").to_float();
        assert!(v.overflow && (v.log2 - 2000.0).abs() < 1e-6);
    }

    #[test]
    fn canonical_round_trip() {
        for s in ["3^4", "2^(7/4) * 5^(1/4)", "1", "7/8 * 3^(-1/2)", "640"] {
            let x = eb(s);
            let again: ExactBound = x.to_string().parse().unwrap();
            assert_eq!(x, again, "round-trip failed for {s}");
        }
    }

    #[test]
    fn huge_exponent_comparison_stays_cheap() {
        // (96!)^((n−1)/95) vs 97^(n−1): the common exponent gcd collapses the
        // comparison to (96!) vs 97^95 regardless of n.
        let mut fact = ExactBound::one();
        for k in 2..=96u64 {
            fact = fact.mul(&ExactBound::from_integer(k));
        }
        let h = fact.pow(Exp::new(999, 95)).unwrap();
        let cap = ExactBound::from_factor(97, Exp::from_integer(999));
        assert_eq!(h.cmp_exact(&cap), Ordering::Less);
    }
}
