//! Exact arithmetic in GF(p^m).
//!
//! Elements are encoded as integers in `[0, q)`: base-p digit `i` of the
//! encoding is the coefficient of `x^i` in the polynomial-basis
//! representative, so `0` is the additive identity and `1` the multiplicative
//! identity. Every context fixes a deterministic irreducible modulus (the
//! lexicographically smallest monic one, constant term first) and a
//! deterministic primitive element `w` (the smallest encoding of
//! multiplicative order q-1). The canonical orderings of the unit group and
//! of the whole field are `w^0, w^1, ..., w^(q-2)` and `0, w^0, ..., w^(q-2)`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order accepted by default.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Orders up to this bound get log/antilog tables; larger fields fall back to
/// polynomial arithmetic per operation.
const TABLE_LIMIT: u64 = 1 << 16;

/// An element of a [`Field`], stored as its integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElem(u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// The integer encoding in `[0, q)`.
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldInner {
    p: u64,
    m: u32,
    q: u64,
    /// Coefficient list of the modulus, constant term first, length m+1, monic.
    modulus: Vec<u64>,
    omega: u64,
    /// exp[i] = encoding of w^i, length q-1. Empty above `TABLE_LIMIT`.
    exp: Vec<u32>,
    /// log[e] = i with w^i = e, log[0] unused. Empty above `TABLE_LIMIT`.
    log: Vec<u32>,
}

/// A concrete finite field GF(p^m). Cheap to clone and safe to share across
/// threads; all operations are pure.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.m == other.0.m
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.m)
    }
}

impl Field {
    /// Builds GF(p^m) with the deterministic default modulus.
    pub fn new(p: u64, m: u32) -> Result<Field> {
        Field::with_options(p, m, None, MAX_FIELD_ORDER)
    }

    /// Builds GF(p^m) over an explicit monic irreducible modulus
    /// (coefficients constant term first, length m+1).
    pub fn with_modulus(p: u64, m: u32, modulus: &[u64]) -> Result<Field> {
        Field::with_options(p, m, Some(modulus), MAX_FIELD_ORDER)
    }

    pub fn with_options(
        p: u64,
        m: u32,
        modulus: Option<&[u64]>,
        order_bound: u64,
    ) -> Result<Field> {
        if m == 0 {
            return Err(Error::BadDimension("extension degree must be >= 1".into()));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q128 = (p as u128).checked_pow(m).ok_or(Error::OverflowGuard {
            q: u128::MAX,
            bound: order_bound,
        })?;
        if q128 > order_bound as u128 {
            return Err(Error::OverflowGuard {
                q: q128,
                bound: order_bound,
            });
        }
        let q = q128 as u64;

        let modulus = match modulus {
            Some(coeffs) => {
                let ok = coeffs.len() == m as usize + 1
                    && coeffs.iter().all(|&c| c < p)
                    && coeffs[m as usize] == 1
                    && (m == 1 || poly_is_irreducible(coeffs, p));
                if !ok {
                    return Err(Error::NotIrreducible { p, degree: m });
                }
                coeffs.to_vec()
            }
            None => default_modulus(p, m),
        };

        let mut inner = FieldInner {
            p,
            m,
            q,
            modulus,
            omega: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        inner.omega = find_primitive(&inner);
        if q <= TABLE_LIMIT {
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut log = vec![u32::MAX; q as usize];
            let mut acc = 1u64;
            for i in 0..q - 1 {
                exp.push(acc as u32);
                log[acc as usize] = i as u32;
                acc = raw_mul_poly(&inner, acc, inner.omega);
            }
            debug_assert_eq!(acc, 1);
            inner.exp = exp;
            inner.log = log;
        }
        Ok(Field(Arc::new(inner)))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients, constant term first (length m+1, monic).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// The fixed primitive element.
    pub fn omega(&self) -> FieldElem {
        FieldElem(self.0.omega)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    /// Validates an integer encoding and wraps it as an element.
    pub fn elem(&self, value: u64) -> Result<FieldElem> {
        if value < self.0.q {
            Ok(FieldElem(value))
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert!(a.0 < self.0.q && b.0 < self.0.q);
        FieldElem(self.raw_add(a.0, b.0))
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert!(a.0 < self.0.q && b.0 < self.0.q);
        FieldElem(self.raw_add(a.0, self.raw_neg(b.0)))
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        debug_assert!(a.0 < self.0.q);
        FieldElem(self.raw_neg(a.0))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert!(a.0 < self.0.q && b.0 < self.0.q);
        FieldElem(self.raw_mul(a.0, b.0))
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElem(self.raw_inv(a.0)))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        if b.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElem(self.raw_mul(a.0, self.raw_inv(b.0))))
    }

    /// Raises to any integer exponent; negative exponents go through the
    /// inverse. `pow(0, 0) = 1`.
    pub fn pow(&self, a: FieldElem, e: i64) -> Result<FieldElem> {
        debug_assert!(a.0 < self.0.q);
        if a.0 == 0 {
            return match e.cmp(&0) {
                std::cmp::Ordering::Greater => Ok(FieldElem::ZERO),
                std::cmp::Ordering::Equal => Ok(FieldElem::ONE),
                std::cmp::Ordering::Less => Err(Error::DivisionByZero),
            };
        }
        let order = (self.0.q - 1) as i64;
        let e = e.rem_euclid(order.max(1)) as u64;
        Ok(FieldElem(self.raw_pow(a.0, e)))
    }

    /// Discrete log base `w`, `None` for the zero element.
    pub fn log(&self, a: FieldElem) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        if !self.0.log.is_empty() {
            return Some(self.0.log[a.0 as usize] as u64);
        }
        // table-free fields: walk the powers of w
        let mut acc = 1u64;
        for i in 0..self.0.q - 1 {
            if acc == a.0 {
                return Some(i);
            }
            acc = self.raw_mul(acc, self.0.omega);
        }
        None
    }

    /// The canonical ordering of the unit group: `w^0, w^1, ..., w^(q-2)`.
    pub fn units(&self) -> Vec<FieldElem> {
        if !self.0.exp.is_empty() {
            return self.0.exp.iter().map(|&e| FieldElem(e as u64)).collect();
        }
        let mut out = Vec::with_capacity((self.0.q - 1) as usize);
        let mut acc = 1u64;
        for _ in 0..self.0.q - 1 {
            out.push(FieldElem(acc));
            acc = self.raw_mul(acc, self.0.omega);
        }
        out
    }

    /// The canonical ordering of the whole field: `0` then the units.
    pub fn full_ordering(&self) -> Vec<FieldElem> {
        let mut out = Vec::with_capacity(self.0.q as usize);
        out.push(FieldElem::ZERO);
        out.extend(self.units());
        out
    }

    /// Parses "0", a decimal encoding, or "w^e" (also bare "w").
    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        if s == "w" || s == "W" {
            return Ok(self.omega());
        }
        if let Some(exp) = s.strip_prefix("w^").or_else(|| s.strip_prefix("W^")) {
            let e: i64 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            return self.pow(self.omega(), e);
        }
        let v: u64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad element {s:?}")))?;
        self.elem(v)
            .map_err(|_| Error::Parse(format!("element {v} is outside GF({})", self.0.q)))
    }

    /// Decimal encoding, annotated with the `w^e` form for nonzero elements.
    pub fn format_elem_annotated(&self, a: FieldElem) -> String {
        match self.log(a) {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(e) => format!("{} = w^{}", a.0, e),
        }
    }

    // ---- raw operations on encodings ----

    pub(crate) fn raw_add(&self, a: u64, b: u64) -> u64 {
        let inner = &*self.0;
        if inner.p == 2 {
            return a ^ b;
        }
        if inner.m == 1 {
            let s = a + b;
            return if s >= inner.p { s - inner.p } else { s };
        }
        let (p, mut a, mut b) = (inner.p, a, b);
        let mut out = 0u64;
        let mut shift = 1u64;
        while a != 0 || b != 0 {
            let mut d = a % p + b % p;
            if d >= p {
                d -= p;
            }
            out += d * shift;
            shift *= p;
            a /= p;
            b /= p;
        }
        out
    }

    pub(crate) fn raw_neg(&self, a: u64) -> u64 {
        let inner = &*self.0;
        if inner.p == 2 {
            return a;
        }
        if inner.m == 1 {
            return if a == 0 { 0 } else { inner.p - a };
        }
        let p = inner.p;
        let mut a = a;
        let mut out = 0u64;
        let mut shift = 1u64;
        while a != 0 {
            let d = a % p;
            out += if d == 0 { 0 } else { p - d } * shift;
            shift *= p;
            a /= p;
        }
        out
    }

    pub(crate) fn raw_mul(&self, a: u64, b: u64) -> u64 {
        let inner = &*self.0;
        if a == 0 || b == 0 {
            return 0;
        }
        if !inner.exp.is_empty() {
            let la = inner.log[a as usize] as u64;
            let lb = inner.log[b as usize] as u64;
            return inner.exp[((la + lb) % (inner.q - 1)) as usize] as u64;
        }
        raw_mul_poly(inner, a, b)
    }

    fn raw_inv(&self, a: u64) -> u64 {
        debug_assert_ne!(a, 0);
        let inner = &*self.0;
        if !inner.exp.is_empty() {
            let la = inner.log[a as usize] as u64;
            return inner.exp[((inner.q - 1 - la) % (inner.q - 1)) as usize] as u64;
        }
        self.raw_pow(a, inner.q - 2)
    }

    fn raw_pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(acc, base);
            }
            base = self.raw_mul(base, base);
            e >>= 1;
        }
        acc
    }
}

// ---- polynomial arithmetic over GF(p), coefficient lists constant first ----

fn encode_digits(digits: &[u64], p: u64) -> u64 {
    let mut v = 0u64;
    for &d in digits.iter().rev() {
        v = v * p + d;
    }
    v
}

fn decode_digits(mut v: u64, p: u64, m: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(v % p);
        v /= p;
    }
    out
}

fn raw_mul_poly(inner: &FieldInner, a: u64, b: u64) -> u64 {
    let (p, m) = (inner.p, inner.m as usize);
    if m == 1 {
        return a % p * (b % p) % p;
    }
    let da = decode_digits(a, p, inner.m);
    let db = decode_digits(b, p, inner.m);
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce modulo the monic modulus
    for i in (m..2 * m - 1).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..m {
            let t = prod[i - m + j] + (p - inner.modulus[j] % p) % p * c % p;
            prod[i - m + j] = t % p;
        }
    }
    prod.truncate(m);
    encode_digits(&prod, p)
}

/// Remainder of `num / den` over GF(p); both constant-first, `den` monic of
/// degree >= 1.
fn poly_rem(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
    let mut num = num.to_vec();
    let dd = den.len() - 1;
    let mut dn = num.len() - 1;
    while dn >= dd {
        let c = num[dn];
        if c != 0 {
            num[dn] = 0;
            for j in 0..dd {
                let t = num[dn - dd + j] + (p - den[j] % p) % p * c % p;
                num[dn - dd + j] = t % p;
            }
        }
        dn -= 1;
    }
    while num.len() > 1 && *num.last().unwrap() == 0 {
        num.pop();
    }
    num
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn poly_is_irreducible(coeffs: &[u64], p: u64) -> bool {
    let deg = coeffs.len() - 1;
    if coeffs[0] == 0 {
        return false; // x divides
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut den = decode_digits(idx, p, d as u32);
            den.push(1);
            let rem = poly_rem(coeffs, &den, p);
            if rem.len() == 1 && rem[0] == 0 {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree m over GF(p),
/// comparing coefficient tuples constant term first.
fn default_modulus(p: u64, m: u32) -> Vec<u64> {
    if m == 1 {
        return vec![0, 1]; // x itself: GF(p)[x]/(x) = GF(p)
    }
    let mut tuple = vec![0u64; m as usize];
    loop {
        let mut cand = tuple.clone();
        cand.push(1);
        if poly_is_irreducible(&cand, p) {
            return cand;
        }
        // next tuple in lexicographic order, last coordinate fastest
        let mut i = m as usize;
        loop {
            debug_assert!(i > 0, "no irreducible of degree {m} over GF({p})");
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < p {
                break;
            }
            tuple[i] = 0;
        }
    }
}

fn find_primitive(inner: &FieldInner) -> u64 {
    let order = inner.q - 1;
    if order == 1 {
        return 1;
    }
    let factors = prime_factors(order);
    'cand: for cand in 2..inner.q {
        for &r in &factors {
            if pow_poly(inner, cand, order / r) == 1 {
                continue 'cand;
            }
        }
        debug_assert_eq!(pow_poly(inner, cand, order), 1);
        return cand;
    }
    unreachable!("every finite field has a primitive element");
}

fn pow_poly(inner: &FieldInner, a: u64, mut e: u64) -> u64 {
    let mut base = a;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul_poly(inner, acc, base);
        }
        base = raw_mul_poly(inner, base, base);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_orders() {
        assert_eq!(Field::new(3, 2).unwrap().q(), 9);
        assert_eq!(Field::new(2, 3).unwrap().q(), 8);
        assert_eq!(Field::new(11, 1).unwrap().q(), 11);
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(1, 1).unwrap_err(), Error::NotPrime(1));
    }

    #[test]
    fn order_bound_guard() {
        assert!(matches!(
            Field::new(2, 21),
            Err(Error::OverflowGuard { .. })
        ));
        assert!(Field::new(2, 20).is_ok());
    }

    #[test]
    fn default_modulus_is_irreducible_and_monic() {
        let f8 = Field::new(2, 3).unwrap();
        let m = f8.modulus();
        assert_eq!(m.len(), 4);
        assert_eq!(m[3], 1);
        assert!(poly_is_irreducible(m, 2));
        // lexicographically smallest monic irreducible cubic over GF(2)
        assert_eq!(m, &[1, 0, 1, 1]);

        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn explicit_modulus_validation() {
        // x^3 + x + 1 is the other irreducible cubic over GF(2)
        let f = Field::with_modulus(2, 3, &[1, 1, 0, 1]).unwrap();
        assert_eq!(f.q(), 8);
        // x^3 + 1 = (x + 1)(x^2 + x + 1)
        assert!(matches!(
            Field::with_modulus(2, 3, &[1, 0, 0, 1]),
            Err(Error::NotIrreducible { .. })
        ));
        // not monic
        assert!(Field::with_modulus(3, 2, &[1, 0, 2]).is_err());
    }

    #[test]
    fn omega_has_full_order() {
        for (p, m) in [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (2, 8)] {
            let f = Field::new(p, m).unwrap();
            let w = f.omega();
            let order = f.q() - 1;
            assert_eq!(f.pow(w, order as i64).unwrap(), f.one());
            for j in 1..order {
                assert_ne!(f.pow(w, j as i64).unwrap(), f.one(), "GF({})", f.q());
            }
        }
    }

    #[test]
    fn gf9_omega_powers() {
        let f = Field::new(3, 2).unwrap();
        let w = f.omega();
        // w^3 * w^5 = w^8 = 1
        let a = f.pow(w, 3).unwrap();
        let b = f.pow(w, 5).unwrap();
        assert_eq!(f.mul(a, b), f.one());
        // w^4 = -1 = 2 regardless of the modulus choice
        assert_eq!(f.pow(w, 4).unwrap(), f.elem(2).unwrap());
    }

    #[test]
    fn characteristic_two_self_inverse_addition() {
        let f = Field::new(2, 3).unwrap();
        for a in 0..f.q() {
            let a = f.elem(a).unwrap();
            assert_eq!(f.add(a, a), f.zero());
        }
    }

    #[test]
    fn gf9_inverse_of_two() {
        let f = Field::new(3, 2).unwrap();
        let two = f.elem(2).unwrap();
        assert_eq!(f.inv(two).unwrap(), two);
        assert_eq!(f.inv(f.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn canonical_orderings_shape() {
        for (p, m) in [(2, 2), (5, 1), (2, 3), (3, 2), (11, 1)] {
            let f = Field::new(p, m).unwrap();
            let units = f.units();
            let full = f.full_ordering();
            assert_eq!(units.len() as u64, f.q() - 1);
            assert_eq!(full.len() as u64, f.q());
            let mut sorted: Vec<_> = full.iter().map(|e| e.value()).collect();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len() as u64, f.q(), "orderings must be duplicate-free");
            assert_eq!(full[0], f.zero());
            assert_eq!(full[1], f.one());
            for (i, &u) in units.iter().enumerate() {
                assert_eq!(u, f.pow(f.omega(), i as i64).unwrap());
            }
        }
    }

    #[test]
    fn negative_exponents() {
        let f = Field::new(7, 1).unwrap();
        let a = f.elem(3).unwrap();
        let inv = f.inv(a).unwrap();
        assert_eq!(f.pow(a, -1).unwrap(), inv);
        assert_eq!(f.pow(a, -3).unwrap(), f.pow(inv, 3).unwrap());
        assert_eq!(f.pow(f.zero(), 0).unwrap(), f.one());
        assert!(f.pow(f.zero(), -1).is_err());
    }

    #[test]
    fn element_text_roundtrip() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.parse_elem("0").unwrap(), f.zero());
        assert_eq!(f.parse_elem("7").unwrap().value(), 7);
        assert_eq!(f.parse_elem("w").unwrap(), f.omega());
        assert_eq!(
            f.parse_elem("w^4").unwrap(),
            f.pow(f.omega(), 4).unwrap()
        );
        assert!(f.parse_elem("9").is_err());
        assert!(f.parse_elem("x").is_err());
        for v in 0..f.q() {
            let e = f.elem(v).unwrap();
            assert_eq!(f.parse_elem(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn large_field_without_tables() {
        // q = 3^11 = 177147 > 2^16 exercises the polynomial path
        let f = Field::new(3, 11).unwrap();
        let w = f.omega();
        let a = f.pow(w, 12345).unwrap();
        let b = f.pow(w, 54321).unwrap();
        assert_eq!(f.mul(a, b), f.pow(w, 12345 + 54321).unwrap());
        assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
    }

    #[test]
    fn frobenius_is_additive() {
        for (p, m) in [(2, 3), (3, 2), (5, 1)] {
            let f = Field::new(p, m).unwrap();
            for a in 0..f.q() {
                for b in 0..f.q() {
                    let (a, b) = (f.elem(a).unwrap(), f.elem(b).unwrap());
                    let lhs = f.pow(f.add(a, b), p as i64).unwrap();
                    let rhs = f.add(f.pow(a, p as i64).unwrap(), f.pow(b, p as i64).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
