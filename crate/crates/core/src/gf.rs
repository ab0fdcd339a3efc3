//! Arithmetic in GF(p^f), the coefficient domain for all matrix groups.
//!
//! Elements are stored packed: the polynomial-basis coefficient vector
//! (a₀, …, a_{f−1}) over GF(p) becomes the integer Σ aᵢ pⁱ ∈ [0, q).
//! The modulus is chosen reproducibly (lexicographically least primitive
//! monic polynomial, constant term first) so serialized groups are portable
//! across runs; Conway polynomials are not assumed but a caller may supply
//! any primitive modulus explicitly.

use std::fmt;
use std::sync::Arc;

use crate::arith;
use crate::{Error, Result};

/// A concrete model of GF(p^f).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u64,
    pub f: u32,
    /// q = p^f
    pub q: u64,
    /// Monic degree-f modulus over GF(p), constant term first (length f+1).
    /// For f = 1 the modulus is the polynomial x and is never used.
    pub modulus: Vec<u64>,
}

/// Cap from the construction contract: fields stay small enough that packed
/// elements and discrete scans are cheap.
const Q_CAP: u64 = 1 << 31;

impl FieldSpec {
    /// The field with the canonical (lexicographically least primitive)
    /// modulus.
    pub fn make(p: u64, f: u32) -> Result<Arc<FieldSpec>> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        assert!(f >= 1, "extension degree must be positive");
        let q = checked_pow(p, f)?;
        let modulus = if f == 1 {
            vec![0, 1]
        } else {
            let base = prime_field(p);
            find_primitive_modulus(&base, f)
                .ok_or_else(|| Error::NotFound(format!("no primitive modulus for GF({p}^{f})")))?
        };
        Ok(Arc::new(FieldSpec { p, f, q, modulus }))
    }

    /// The field with a caller-supplied modulus (must be monic of degree f,
    /// irreducible and primitive; primitivity is verified).
    pub fn with_modulus(p: u64, f: u32, modulus: Vec<u64>) -> Result<Arc<FieldSpec>> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = checked_pow(p, f)?;
        if modulus.len() != f as usize + 1
            || modulus[f as usize] != 1
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(Error::Unsupported(format!(
                "modulus must be monic of degree {f} with coefficients below {p}"
            )));
        }
        if f > 1 && !is_primitive_modulus(&prime_field(p), &modulus) {
            return Err(Error::Unsupported("modulus is not primitive".into()));
        }
        Ok(Arc::new(FieldSpec { p, f, q, modulus }))
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.f == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0u64, 1u64);
        for _ in 0..self.f {
            out += ((a + b) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.f == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0u64, 1u64);
        for _ in 0..self.f {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.f == 1 {
            return arith::mul_mod(a, b, self.p);
        }
        let av = self.unpack(a);
        let bv = self.unpack(b);
        let f = self.f as usize;
        let mut prod = vec![0u64; 2 * f - 1];
        for (i, &x) in av.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in bv.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce by the monic modulus, top coefficient down
        for i in (f..2 * f - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (k, &m) in self.modulus.iter().enumerate().take(f) {
                let idx = i - f + k;
                prod[idx] = (prod[idx] + c * (self.p - m) % self.p) % self.p;
            }
        }
        self.pack(&prod[..f])
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u64) -> u64 {
        assert!(a != 0, "order of zero is undefined");
        let mut ord = self.q - 1;
        for (r, _) in arith::factor(self.q - 1) {
            while ord % r == 0 && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        ord
    }

    /// Least packed element of multiplicative order q−1.
    pub fn primitive_element(&self) -> u64 {
        (1..self.q)
            .find(|&a| self.order(a) == self.q - 1)
            .expect("a finite field always has a primitive element")
    }

    /// Packed value → coefficient vector (length f, constant term first).
    pub fn unpack(&self, mut a: u64) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.f as usize);
        for _ in 0..self.f {
            v.push(a % self.p);
            a /= self.p;
        }
        v
    }

    /// Coefficient slice (constant term first) → packed value.
    pub fn pack(&self, coeffs: &[u64]) -> u64 {
        let mut out = 0u64;
        for &c in coeffs.iter().rev() {
            out = out * self.p + c % self.p;
        }
        out
    }

    /// Header line "GF p f c0 c1 ... cf".
    pub fn header(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(u64::to_string).collect();
        format!("GF {} {} {}", self.p, self.f, coeffs.join(" "))
    }

    /// Parses a header produced by [`FieldSpec::header`].
    pub fn parse_header(line: &str) -> Result<Arc<FieldSpec>> {
        let err = |msg: &str| Error::Parse { offset: 0, msg: msg.into() };
        let mut it = line.split_whitespace();
        if it.next() != Some("GF") {
            return Err(err("expected field header to start with GF"));
        }
        let p: u64 = it.next().ok_or_else(|| err("missing p"))?.parse().map_err(|_| err("invalid p"))?;
        let f: u32 = it.next().ok_or_else(|| err("missing f"))?.parse().map_err(|_| err("invalid f"))?;
        let modulus: Vec<u64> = it
            .map(|t| t.parse().map_err(|_| err("invalid modulus coefficient")))
            .collect::<Result<_>>()?;
        if f == 1 && modulus == [0, 1] {
            return FieldSpec::make(p, 1);
        }
        FieldSpec::with_modulus(p, f, modulus)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn checked_pow(p: u64, f: u32) -> Result<u64> {
    let mut q: u64 = 1;
    for _ in 0..f {
        q = q.checked_mul(p).filter(|&q| q <= Q_CAP).ok_or_else(|| {
            Error::TooLarge(format!("field size {p}^{f} exceeds the 2^31 cap"))
        })?;
    }
    Ok(q)
}

fn prime_field(p: u64) -> FieldSpec {
    FieldSpec { p, f: 1, q: p, modulus: vec![0, 1] }
}

// ---- primitive polynomials over an arbitrary base field ----
//
// Polynomials over `base` are coefficient vectors of packed base-field
// elements, constant term first. These helpers also back the Singer-cycle
// construction, which needs primitive polynomials over non-prime fields.

/// Multiplies a·b and reduces by a monic modulus, all over `base`.
pub(crate) fn poly_mul_mod(base: &FieldSpec, a: &[u64], b: &[u64], modulus: &[u64]) -> Vec<u64> {
    let n = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = base.add(prod[i + j], base.mul(x, y));
        }
    }
    for i in (n..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (k, &m) in modulus.iter().enumerate().take(n) {
            prod[i - n + k] = base.sub(prod[i - n + k], base.mul(c, m));
        }
    }
    prod.truncate(n);
    prod.resize(n, 0);
    prod
}

/// x^exp mod modulus over `base`.
pub(crate) fn poly_pow_x(base: &FieldSpec, mut exp: u64, modulus: &[u64]) -> Vec<u64> {
    let n = modulus.len() - 1;
    let mut acc = vec![0u64; n];
    acc[0] = 1;
    let mut sq = vec![0u64; n];
    if n == 1 {
        sq[0] = base.neg(modulus[0]);
    } else {
        sq[1] = 1;
    }
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mul_mod(base, &acc, &sq, modulus);
        }
        sq = poly_mul_mod(base, &sq, &sq, modulus);
        exp >>= 1;
    }
    acc
}

/// True iff x has order Q−1 in base[x]/(modulus), Q = |base|^deg. That
/// forces the quotient to be a field (its unit group fills everything
/// nonzero) with x primitive, so no separate irreducibility test is needed.
pub(crate) fn is_primitive_modulus(base: &FieldSpec, modulus: &[u64]) -> bool {
    let n = (modulus.len() - 1) as u32;
    let mut cap: u64 = 1;
    for _ in 0..n {
        match cap.checked_mul(base.q) {
            Some(v) => cap = v,
            None => return false,
        }
    }
    let order = cap - 1;
    let one = {
        let mut v = vec![0u64; n as usize];
        v[0] = 1;
        v
    };
    if poly_pow_x(base, order, modulus) != one {
        return false;
    }
    arith::factor(order).iter().all(|&(r, _)| poly_pow_x(base, order / r, modulus) != one)
}

/// Lexicographically least primitive monic polynomial of degree n over
/// `base`, comparing coefficient tuples from the constant term upward.
pub(crate) fn find_primitive_modulus(base: &FieldSpec, n: u32) -> Option<Vec<u64>> {
    let n = n as usize;
    // odometer over (c0, ..., c_{n-1}) in lex order: c0 outermost
    let mut coeffs = vec![0u64; n + 1];
    coeffs[n] = 1;
    loop {
        if coeffs[0] != 0 && is_primitive_modulus(base, &coeffs) {
            return Some(coeffs);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < base.q {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        // unique irreducible quadratic over GF(2)
        assert_eq!(FieldSpec::make(2, 2).unwrap().modulus, vec![1, 1, 1]);
        assert_eq!(FieldSpec::make(3, 1).unwrap().modulus, vec![0, 1]);
        // enumerate the nine monic quadratics over GF(3) by hand: the least
        // primitive one is x² + x + 2 (x² + 1 is irreducible but x has order 4)
        assert_eq!(FieldSpec::make(3, 2).unwrap().modulus, vec![2, 1, 1]);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f7 = FieldSpec::make(7, 1).unwrap();
        assert_eq!(f7.inv(3).unwrap(), 5);
        assert_eq!(f7.mul(3, 5), 1);
        assert_eq!(f7.pow(3, 6), 1);
        assert!(f7.inv(0).is_err());
    }

    #[test]
    fn gf4_arithmetic() {
        let f4 = FieldSpec::make(2, 2).unwrap();
        let x = f4.pack(&[0, 1]);
        // x·x reduces by x²+x+1 to x+1
        assert_eq!(f4.mul(x, x), f4.pack(&[1, 1]));
        for a in 1..4 {
            assert_eq!(f4.mul(a, f4.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(FieldSpec::make(2, 1).unwrap().primitive_element(), 1);
        assert_eq!(FieldSpec::make(7, 1).unwrap().primitive_element(), 3);
        let f4 = FieldSpec::make(2, 2).unwrap();
        assert_eq!(f4.primitive_element(), f4.pack(&[0, 1]));
        // order is exactly q−1 in a bigger extension too
        let f81 = FieldSpec::make(3, 4).unwrap();
        let g = f81.primitive_element();
        assert_eq!(f81.order(g), 80);
    }

    #[test]
    fn field_axioms_exhaustive_gf9() {
        let f9 = FieldSpec::make(3, 2).unwrap();
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(f9.add(a, b), f9.add(b, a));
                assert_eq!(f9.mul(a, b), f9.mul(b, a));
                for c in 0..9 {
                    assert_eq!(f9.mul(a, f9.add(b, c)), f9.add(f9.mul(a, b), f9.mul(a, c)));
                    assert_eq!(f9.mul(f9.mul(a, b), c), f9.mul(a, f9.mul(b, c)));
                }
            }
            assert_eq!(f9.add(a, f9.neg(a)), 0);
            if a != 0 {
                assert_eq!(f9.mul(a, f9.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn header_round_trip() {
        for (p, f) in [(2, 1), (2, 3), (3, 2), (5, 1), (3, 3)] {
            let spec = FieldSpec::make(p, f).unwrap();
            let again = FieldSpec::parse_header(&spec.header()).unwrap();
            assert_eq!(*spec, *again);
        }
        let f8 = FieldSpec::make(2, 3).unwrap();
        assert_eq!(f8.header(), format!("GF 2 3 {}", f8.modulus.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")));
    }

    #[test]
    fn modulus_override_checked() {
        // x² + 1 over GF(3) is irreducible but not primitive
        assert!(FieldSpec::with_modulus(3, 2, vec![1, 0, 1]).is_err());
        assert!(FieldSpec::with_modulus(3, 2, vec![2, 1, 1]).is_ok());
    }

    #[test]
    fn primitive_modulus_over_extension_field() {
        // degree-2 primitive polynomial over GF(9): quotient is GF(81)
        let f9 = FieldSpec::make(3, 2).unwrap();
        let m = find_primitive_modulus(&f9, 2).unwrap();
        assert_eq!(m.len(), 3);
        assert!(is_primitive_modulus(&f9, &m));
    }

    #[test]
    fn caps() {
        assert!(FieldSpec::make(2, 40).is_err());
        assert!(FieldSpec::make(4, 1).is_err());
    }
}
