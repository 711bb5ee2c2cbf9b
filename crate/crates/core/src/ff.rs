//! Exact arithmetic in prime fields F_p and extensions F_{p^d}.
//!
//! Fields are built with a deterministically chosen defining polynomial
//! (the lexicographically smallest monic irreducible, coefficients read
//! from the constant term up), so every downstream computation is
//! reproducible bit for bit.  Elements are dense coefficient vectors
//! reduced eagerly mod p; nothing here is asymptotically clever because
//! p^d stays well below 2^63.

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("field size p^d = {p}^{d} does not fit in 63 bits")]
    TooLarge { p: u64, d: usize },
    #[error("multiplicative order of zero is undefined")]
    ZeroOrder,
    #[error("no root of unity of order {n} in a field of {q} elements")]
    NoSuchRoot { n: u64, q: u64 },
    #[error("zero is not invertible")]
    ZeroInverse,
    #[error("elements belong to different fields")]
    FieldMismatch,
}

/// Deterministic Miller–Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// b^e mod m for u64 inputs (m >= 1).
pub fn pow_mod_pub(b: u64, e: u64, m: u64) -> u64 {
    pow_mod(b, e, m)
}

/// Multiplicative order of a mod n (requires gcd(a, n) = 1).
pub fn order_mod(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    assert_eq!(gcd(a % n, n), 1, "order of non-unit");
    let mut k = 1u64;
    let mut x = a % n;
    while x != 1 {
        x = mul_mod(x, a % n, n);
        k += 1;
    }
    k
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Prime factors of n, ascending, by trial division (desk scale).
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut push = |f: u64, n: &mut u64| {
        if *n % f == 0 {
            out.push(f);
            while *n % f == 0 {
                *n /= f;
            }
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut f = 5u64;
    while f.saturating_mul(f) <= n {
        push(f, &mut n);
        push(f + 2, &mut n);
        f += 6;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

struct FieldData {
    p: u64,
    d: usize,
    /// Monic modulus; modulus[i] is the coefficient of x^i, modulus[d] = 1.
    modulus: Vec<u64>,
    /// Lazily computed smallest primitive element (coefficients).
    generator: OnceLock<Vec<u64>>,
    order_factors: OnceLock<Vec<u64>>,
}

/// The finite field F_{p^d}.  Cheap to clone; immutable once built.
#[derive(Clone)]
pub struct ExtField(Arc<FieldData>);

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.d == other.0.d && self.0.modulus == other.0.modulus
    }
}
impl Eq for ExtField {}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{{{}^{}}}", self.0.p, self.0.d)
    }
}

impl ExtField {
    /// Builds F_{p^d} with the lexicographically smallest monic irreducible
    /// modulus, coefficients ordered from the constant term up.
    ///
    /// Instances are memoized: the same (p, d) always returns a handle to
    /// the same immutable data (and its cached generator).
    pub fn new(p: u64, d: usize) -> Result<ExtField, FieldError> {
        static CACHE: OnceLock<
            std::sync::Mutex<std::collections::HashMap<(u64, usize), ExtField>>,
        > = OnceLock::new();
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if d == 0 {
            return Err(FieldError::BadDegree);
        }
        let mut size: u128 = 1;
        for _ in 0..d {
            size *= p as u128;
            if size >= (1u128 << 63) {
                return Err(FieldError::TooLarge { p, d });
            }
        }
        let cache = CACHE.get_or_init(|| std::sync::Mutex::new(std::collections::HashMap::new()));
        if let Some(f) = cache.lock().unwrap().get(&(p, d)) {
            return Ok(f.clone());
        }
        let modulus = smallest_irreducible(p, d);
        let field = ExtField(Arc::new(FieldData {
            p,
            d,
            modulus,
            generator: OnceLock::new(),
            order_factors: OnceLock::new(),
        }));
        cache.lock().unwrap().insert((p, d), field.clone());
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.d
    }

    /// p^d as a u64 (guaranteed to fit by construction).
    pub fn order(&self) -> u64 {
        let mut q = 1u64;
        for _ in 0..self.0.d {
            q *= self.0.p;
        }
        q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FqElem {
        FqElem {
            field: self.clone(),
            coeffs: vec![0; self.0.d],
        }
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    pub fn from_u64(&self, n: u64) -> FqElem {
        let mut coeffs = vec![0; self.0.d];
        coeffs[0] = n % self.0.p;
        FqElem {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn from_i64(&self, n: i64) -> FqElem {
        let p = self.0.p as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> FqElem {
        assert!(coeffs.len() <= self.0.d, "coefficient vector too long");
        let mut c = vec![0; self.0.d];
        for (i, &x) in coeffs.iter().enumerate() {
            c[i] = x % self.0.p;
        }
        FqElem {
            field: self.clone(),
            coeffs: c,
        }
    }

    /// Element at position k in the fixed enumeration order (lexicographic on
    /// (c_0, ..., c_{d-1}), constant term most significant).
    pub fn element_at(&self, k: u64) -> FqElem {
        let (p, d) = (self.0.p, self.0.d);
        let mut coeffs = vec![0u64; d];
        let mut rem = k;
        for i in (0..d).rev() {
            coeffs[i] = rem % p;
            rem /= p;
        }
        FqElem {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.order()).map(move |k| self.element_at(k))
    }

    fn order_factors(&self) -> &[u64] {
        self.0
            .order_factors
            .get_or_init(|| prime_factors(self.order() - 1))
    }

    /// Smallest primitive element in the fixed enumeration order.
    pub fn primitive_element(&self) -> FqElem {
        let coeffs = self.0.generator.get_or_init(|| {
            let q1 = self.order() - 1;
            let factors: Vec<u64> = self.order_factors().to_vec();
            for k in 1..self.order() {
                let x = self.element_at(k);
                if factors.iter().all(|&f| x.pow(q1 / f) != self.one()) {
                    return x.coeffs;
                }
            }
            unreachable!("finite field has a generator");
        });
        FqElem {
            field: self.clone(),
            coeffs: coeffs.clone(),
        }
    }

    /// A deterministic element of exact multiplicative order n.
    ///
    /// Derived from the smallest primitive element, so roots of unity of
    /// different orders are compatible: root(mn)^m = root(n).
    pub fn root_of_unity(&self, n: u64) -> Result<FqElem, FieldError> {
        let q1 = self.order() - 1;
        if n == 0 || q1 % n != 0 {
            return Err(FieldError::NoSuchRoot { n, q: self.order() });
        }
        Ok(self.primitive_element().pow(q1 / n))
    }

    /// Both square roots of a, if a is a square; empty otherwise.
    /// Sorted by enumeration index; a = 0 yields a single root.
    pub fn sqrt_candidates(&self, a: &FqElem) -> Vec<FqElem> {
        assert_eq!(&a.field, self, "element from wrong field");
        if a.is_zero() {
            return vec![self.zero()];
        }
        let q = self.order();
        if self.0.p == 2 {
            // Frobenius is a bijection in characteristic 2: unique root.
            return vec![a.pow(q / 2)];
        }
        let r = if q <= 10_000 {
            // Exhaustive scan; first hit in enumeration order.
            let mut found = None;
            for k in 1..q {
                let x = self.element_at(k);
                if &x * &x == *a {
                    found = Some(x);
                    break;
                }
            }
            match found {
                Some(x) => x,
                None => return Vec::new(),
            }
        } else {
            if a.pow((q - 1) / 2) != self.one() {
                return Vec::new();
            }
            if q % 4 == 3 {
                a.pow((q + 1) / 4)
            } else {
                self.tonelli_shanks(a)
            }
        };
        let r2 = -&r;
        debug_assert_eq!(&r * &r, *a);
        let (i1, i2) = (r.enum_index(), r2.enum_index());
        if i1 <= i2 {
            vec![r, r2]
        } else {
            vec![r2, r]
        }
    }

    fn tonelli_shanks(&self, a: &FqElem) -> FqElem {
        let q = self.order();
        let mut s = 0u32;
        let mut t = q - 1;
        while t % 2 == 0 {
            t /= 2;
            s += 1;
        }
        // Smallest non-residue in enumeration order.
        let z = (1..q)
            .map(|k| self.element_at(k))
            .find(|x| x.pow((q - 1) / 2) != self.one())
            .expect("non-residue exists in odd characteristic");
        let mut m = s;
        let mut c = z.pow(t);
        let mut u = a.pow(t);
        let mut r = a.pow((t + 1) / 2);
        while u != self.one() {
            let mut i = 0u32;
            let mut probe = u.clone();
            while probe != self.one() {
                probe = &probe * &probe;
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = &b * &b;
            }
            m = i;
            c = &b * &b;
            u = &(&u * &b) * &b;
            r = &r * &b;
        }
        r
    }
}

/// An element of an ExtField: a polynomial representative of degree < d.
#[derive(Clone, PartialEq, Eq)]
pub struct FqElem {
    field: ExtField,
    coeffs: Vec<u64>,
}

impl FqElem {
    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Position in the fixed enumeration order.
    pub fn enum_index(&self) -> u64 {
        let p = self.field.0.p;
        self.coeffs.iter().fold(0u64, |acc, &c| acc * p + c)
    }

    pub fn pow(&self, mut e: u64) -> FqElem {
        let mut acc = self.field.one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    /// Power with a possibly negative exponent (inverts first).
    pub fn pow_i(&self, e: i64) -> Result<FqElem, FieldError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    pub fn inv(&self) -> Result<FqElem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        // x^(q-2) = x^{-1}; fine at this scale.
        Ok(self.pow(self.field.order() - 2))
    }

    /// Smallest n >= 1 with self^n = 1; divides p^d - 1.
    pub fn mult_order(&self) -> Result<u64, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroOrder);
        }
        let mut n = self.field.order() - 1;
        for &f in self.field.order_factors() {
            while n % f == 0 && self.pow(n / f) == self.field.one() {
                n /= f;
            }
        }
        Ok(n)
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.0.d == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "[")?;
            for (i, c) in self.coeffs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")
        }
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::ops::Add for &FqElem {
    type Output = FqElem;
    fn add(self, rhs: &FqElem) -> FqElem {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let p = self.field.0.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FqElem {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl std::ops::Sub for &FqElem {
    type Output = FqElem;
    fn sub(self, rhs: &FqElem) -> FqElem {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let p = self.field.0.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FqElem {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl std::ops::Neg for &FqElem {
    type Output = FqElem;
    fn neg(self) -> FqElem {
        let p = self.field.0.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FqElem {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl std::ops::Mul for &FqElem {
    type Output = FqElem;
    fn mul(self, rhs: &FqElem) -> FqElem {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let p = self.field.0.p;
        let d = self.field.0.d;
        if d == 1 {
            return FqElem {
                field: self.field.clone(),
                coeffs: vec![mul_mod(self.coeffs[0], rhs.coeffs[0], p)],
            };
        }
        let prod = poly_mul(&self.coeffs, &rhs.coeffs, p);
        let red = poly_rem(&prod, &self.field.0.modulus, p);
        let mut coeffs = vec![0u64; d];
        coeffs[..red.len()].copy_from_slice(&red);
        FqElem {
            field: self.field.clone(),
            coeffs,
        }
    }
}

// ---- dense polynomial arithmetic over Z/p (coefficient vecs, low degree first) ----

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u128 * y as u128) % p as u128;
        }
    }
    let mut v: Vec<u64> = out.into_iter().map(|c| c as u64).collect();
    poly_trim(&mut v);
    v
}

/// Remainder of a by the monic polynomial m.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    while r.len() > dm {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for i in 0..dm {
                let sub = mul_mod(lead, m[i], p);
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
        poly_trim(&mut r);
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // reduce a mod b (b made monic on the fly)
        let lead_inv = pow_mod(b[b.len() - 1], p - 2, p);
        let monic: Vec<u64> = b.iter().map(|&c| mul_mod(c, lead_inv, p)).collect();
        let r = poly_rem(&a, &monic, p);
        a = b;
        b = r;
    }
    a
}

/// x^(p^k) mod f, by iterating the p-power map.
fn frobenius_power(f: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut x = vec![0u64, 1]; // x
    for _ in 0..k {
        x = poly_pow_mod(&x, p, f, p);
    }
    x
}

fn poly_pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b, p), f, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), f, p);
        e >>= 1;
    }
    acc
}

fn poly_eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter()
        .rev()
        .fold(0u64, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

/// Irreducibility of a monic polynomial of degree d over F_p.
/// Root scan for d <= 3, Frobenius-power gcd test in general.
pub fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    if d <= 3 {
        return (0..p).all(|x| poly_eval(f, x, p) != 0);
    }
    // cheap root pre-filter before the Frobenius-power machinery
    if (0..p).any(|x| poly_eval(f, x, p) == 0) {
        return false;
    }
    // x^(p^d) == x mod f, and gcd(x^(p^(d/q)) - x, f) = 1 for prime q | d.
    let mut xq = frobenius_power(f, p, d);
    // subtract x
    if xq.len() < 2 {
        xq.resize(2, 0);
    }
    xq[1] = (xq[1] + p - 1) % p;
    poly_trim(&mut xq);
    if !xq.is_empty() {
        return false;
    }
    for q in prime_factors(d as u64) {
        let mut g = frobenius_power(f, p, d / q as usize);
        if g.len() < 2 {
            g.resize(2, 0);
        }
        g[1] = (g[1] + p - 1) % p;
        poly_trim(&mut g);
        let gcd = poly_gcd(f, &g, p);
        if gcd.len() != 1 {
            return false;
        }
    }
    true
}

fn smallest_irreducible(p: u64, d: usize) -> Vec<u64> {
    if d == 1 {
        return vec![0, 1]; // x itself: F_p[x]/(x) = F_p
    }
    // Scan (c_0, ..., c_{d-1}) in lexicographic order, c_0 most significant.
    let total = (0..d).fold(1u128, |acc, _| acc * p as u128);
    let mut k: u128 = 0;
    while k < total {
        let mut coeffs = vec![0u64; d + 1];
        coeffs[d] = 1;
        // c_0 is the most significant digit of k, so the scan is lexicographic
        // on (c_0, ..., c_{d-1}).
        let mut rem = k;
        for i in (0..d).rev() {
            coeffs[i] = (rem % p as u128) as u64;
            rem /= p as u128;
        }
        if poly_is_irreducible(&coeffs, p) {
            return coeffs;
        }
        k += 1;
    }
    unreachable!("irreducible polynomial of every degree exists over F_p");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1));
        assert!(!is_prime(561)); // Carmichael
        assert!(!is_prime(1_000_001));
    }

    #[test]
    fn field_make_rejects_bad_input() {
        assert_eq!(ExtField::new(6, 1).unwrap_err(), FieldError::NotPrime(6));
        assert_eq!(ExtField::new(5, 0).unwrap_err(), FieldError::BadDegree);
    }

    #[test]
    fn prime_field_modulus_is_x() {
        let f = ExtField::new(5, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 5);
    }

    #[test]
    fn f9_exists_and_is_deterministic() {
        let f = ExtField::new(3, 2).unwrap();
        assert_eq!(f.order(), 9);
        assert!(poly_is_irreducible(f.modulus(), 3));
        let g = ExtField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), g.modulus());
        // x^2 + 1 is the lex-smallest irreducible over F_3
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn f7_quartic_modulus_verified_by_brute_force() {
        let f = ExtField::new(7, 4).unwrap();
        let m = f.modulus().to_vec();
        // no roots
        for x in 0..7 {
            assert_ne!(poly_eval(&m, x, 7), 0, "root {x} found");
        }
        // no monic quadratic factor: trial divide by all x^2+bx+c
        for b in 0..7u64 {
            for c in 0..7u64 {
                let q = vec![c, b, 1];
                let r = poly_rem(&m, &q, 7);
                assert!(!r.is_empty(), "quadratic factor x^2+{b}x+{c}");
            }
        }
    }

    #[test]
    fn mult_order_examples() {
        let f7 = ExtField::new(7, 1).unwrap();
        assert_eq!(f7.one().mult_order().unwrap(), 1);
        assert_eq!(f7.from_u64(2).mult_order().unwrap(), 3);
        let f9 = ExtField::new(3, 2).unwrap();
        let g = f9.primitive_element();
        assert_eq!(g.mult_order().unwrap(), 8);
        assert!(f9.zero().mult_order().is_err());
    }

    #[test]
    fn root_of_unity_examples() {
        let f7 = ExtField::new(7, 1).unwrap();
        assert_eq!(f7.root_of_unity(1).unwrap(), f7.one());
        assert_eq!(f7.root_of_unity(2).unwrap(), f7.from_u64(6));
        let f13 = ExtField::new(13, 1).unwrap();
        let i = f13.root_of_unity(4).unwrap();
        assert_eq!(&i * &i, f13.from_u64(12));
        assert!(f7.root_of_unity(4).is_err());
    }

    #[test]
    fn roots_of_unity_are_compatible() {
        // root(m*n)^m = root(n): the whole system comes from one generator.
        let f13 = ExtField::new(13, 1).unwrap();
        let z12 = f13.root_of_unity(12).unwrap();
        let z6 = f13.root_of_unity(6).unwrap();
        let z4 = f13.root_of_unity(4).unwrap();
        assert_eq!(z12.pow(2), z6);
        assert_eq!(z12.pow(3), z4);
    }

    #[test]
    fn sqrt_examples() {
        let f7 = ExtField::new(7, 1).unwrap();
        let roots = f7.sqrt_candidates(&f7.one());
        assert_eq!(roots, vec![f7.one(), f7.from_u64(6)]);
        let roots2 = f7.sqrt_candidates(&f7.from_u64(2));
        assert_eq!(roots2, vec![f7.from_u64(3), f7.from_u64(4)]);
        assert!(f7.sqrt_candidates(&f7.from_u64(3)).is_empty());
        assert_eq!(f7.sqrt_candidates(&f7.zero()), vec![f7.zero()]);
    }

    #[test]
    fn sqrt_large_field_uses_exponentiation() {
        // q = 10007 > 10^4 triggers the non-exhaustive path
        let f = ExtField::new(10007, 1).unwrap();
        for a in [4u64, 9, 2, 3, 5] {
            let elt = f.from_u64(a);
            for r in f.sqrt_candidates(&elt) {
                assert_eq!(&r * &r, elt);
            }
        }
        // and in an extension: q = 101^2 = 10201 > 10^4
        let f2 = ExtField::new(101, 2).unwrap();
        let x = f2.from_coeffs(&[3, 5]);
        let sq = &x * &x;
        let roots = f2.sqrt_candidates(&sq);
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert_eq!(r * r, sq);
        }
    }

    #[test]
    fn fermat_lagrange_on_extension() {
        let f = ExtField::new(5, 3).unwrap();
        let q1 = f.order() - 1;
        for k in 1..60 {
            let x = f.element_at(k % f.order());
            if !x.is_zero() {
                assert_eq!(x.pow(q1), f.one());
                assert_eq!(q1 % x.mult_order().unwrap(), 0);
            }
        }
    }

    #[test]
    fn arithmetic_in_f49() {
        let f = ExtField::new(7, 2).unwrap();
        let a = f.from_coeffs(&[2, 3]);
        let b = f.from_coeffs(&[5, 1]);
        let ab = &a * &b;
        let ba = &b * &a;
        assert_eq!(ab, ba);
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, f.one());
        assert_eq!(&(&a + &b) - &b, a);
    }
}
