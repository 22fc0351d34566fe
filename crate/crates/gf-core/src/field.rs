use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::GfError;

/// Largest supported characteristic.
pub const MAX_P: u16 = 7;
/// Largest supported extension degree.
pub const MAX_E: u8 = 4;

/// Serializable description of a finite field `F_{p^e}`.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree `e` over `F_p`, stored as coefficients `c_0, ..., c_e` (low degree
/// first, `c_e = 1`), so elements serialize portably.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u16,
    pub e: u8,
    pub modulus: Vec<u16>,
}

/// A finite field with precomputed operation tables.
///
/// Elements are `u16` indices in `0..q`: the element `x` encodes the
/// polynomial `sum_i d_i t^i` where `d_i` are the base-`p` digits of `x`.
/// The prime subfield is therefore `0..p`, and `0`/`1` are the additive and
/// multiplicative identities of every field.
pub struct Field {
    spec: FieldSpec,
    q: u32,
    add_t: Vec<u16>,
    mul_t: Vec<u16>,
    neg_t: Vec<u16>,
    inv_t: Vec<u16>,
}

pub type FieldRef = Arc<Field>;

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{{{}^{}}}", self.spec.p, self.spec.e)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}
impl Eq for Field {}

fn is_prime(p: u16) -> bool {
    p >= 2 && (2..p).all(|d| p % d != 0)
}

/// Multiply two polynomials over F_p and reduce by the monic `modulus`.
fn poly_mulmod(p: u16, modulus: &[u16], a: &[u16], b: &[u16]) -> Vec<u16> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u16; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // reduce: t^e = -(c_0 + c_1 t + ... + c_{e-1} t^{e-1})
    for d in (e..prod.len()).rev() {
        let lead = prod[d];
        if lead == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &ci) in modulus.iter().take(e).enumerate() {
            let sub = (lead * ci) % p;
            prod[d - e + i] = (prod[d - e + i] + p * p - sub) % p;
        }
    }
    prod.truncate(e.max(1));
    prod.resize(e.max(1), 0);
    prod
}

fn digits(p: u16, e: u8, mut x: u16) -> Vec<u16> {
    let mut out = vec![0u16; e as usize];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn undigits(p: u16, ds: &[u16]) -> u16 {
    let mut x = 0u16;
    for &d in ds.iter().rev() {
        x = x * p + d;
    }
    x
}

/// Smallest monic irreducible polynomial of degree `e` over `F_p`, in the
/// lexicographic order on `(c_0, ..., c_{e-1})`.
fn canonical_modulus(p: u16, e: u8) -> Vec<u16> {
    if e == 1 {
        // t itself; arithmetic is plain F_p.
        return vec![0, 1];
    }
    let e = e as usize;
    let total = (p as u32).pow(e as u32);
    'cand: for code in 0..total {
        let mut coeffs = digits(p, e as u8, 0);
        let mut c = code;
        for d in coeffs.iter_mut() {
            *d = (c % p as u32) as u16;
            c /= p as u32;
        }
        coeffs.push(1); // monic
        if coeffs[0] == 0 {
            continue; // divisible by t
        }
        // no roots in F_p
        for r in 0..p {
            let mut v = 0u32;
            for &ci in coeffs.iter().rev() {
                v = (v * r as u32 + ci as u32) % p as u32;
            }
            if v == 0 {
                continue 'cand;
            }
        }
        if e <= 3 {
            // degree 2/3 with no roots is irreducible
            return coeffs;
        }
        // degree 4: also exclude products of two irreducible quadratics
        let mut quads = Vec::new();
        for c0 in 0..p {
            for c1 in 0..p {
                let q = [c0, c1, 1u16];
                let has_root = (0..p).any(|r| {
                    (c0 as u32 + c1 as u32 * r as u32 + r as u32 * r as u32) % p as u32 == 0
                });
                if !has_root {
                    quads.push(q);
                }
            }
        }
        for (i, qa) in quads.iter().enumerate() {
            for qb in quads.iter().skip(i) {
                let mut prod = [0u16; 5];
                for (ia, &a) in qa.iter().enumerate() {
                    for (ib, &b) in qb.iter().enumerate() {
                        prod[ia + ib] = (prod[ia + ib] + a * b) % p;
                    }
                }
                if prod[..] == coeffs[..] {
                    continue 'cand;
                }
            }
        }
        return coeffs;
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

impl Field {
    /// Construct `F_{p^e}` with the canonical (deterministic) modulus.
    pub fn new(p: u16, e: u8) -> Result<FieldRef, GfError> {
        if !is_prime(p) {
            return Err(GfError::NonPrime(p));
        }
        if p > MAX_P {
            return Err(GfError::CharTooLarge(p));
        }
        if e == 0 {
            return Err(GfError::DegreeZero);
        }
        if e > MAX_E {
            return Err(GfError::DegreeTooLarge(e));
        }
        let modulus = canonical_modulus(p, e);
        Ok(Arc::new(Self::build(FieldSpec { p, e, modulus })))
    }

    /// Reconstruct a field from a serialized spec, insisting on the canonical
    /// modulus so elements deserialize unambiguously.
    pub fn from_spec(spec: &FieldSpec) -> Result<FieldRef, GfError> {
        let f = Self::new(spec.p, spec.e)?;
        if f.spec.modulus != spec.modulus {
            return Err(GfError::NonCanonicalModulus(
                spec.modulus.clone(),
                spec.p,
                spec.e,
            ));
        }
        Ok(f)
    }

    fn build(spec: FieldSpec) -> Field {
        let p = spec.p;
        let e = spec.e;
        let q = (p as u32).pow(e as u32);
        let qs = q as usize;
        let mut add_t = vec![0u16; qs * qs];
        let mut mul_t = vec![0u16; qs * qs];
        let mut neg_t = vec![0u16; qs];
        let mut inv_t = vec![0u16; qs];
        let digs: Vec<Vec<u16>> = (0..q).map(|x| digits(p, e, x as u16)).collect();
        for a in 0..qs {
            for b in a..qs {
                let sum: Vec<u16> = digs[a]
                    .iter()
                    .zip(&digs[b])
                    .map(|(&x, &y)| (x + y) % p)
                    .collect();
                let s = undigits(p, &sum);
                add_t[a * qs + b] = s;
                add_t[b * qs + a] = s;
                let prod = poly_mulmod(p, &spec.modulus, &digs[a], &digs[b]);
                let m = undigits(p, &prod);
                mul_t[a * qs + b] = m;
                mul_t[b * qs + a] = m;
            }
        }
        for a in 0..qs {
            let nd: Vec<u16> = digs[a].iter().map(|&x| (p - x) % p).collect();
            neg_t[a] = undigits(p, &nd);
        }
        // inverses by exhaustive search over the multiplication table
        for a in 1..qs {
            for b in 1..qs {
                if mul_t[a * qs + b] == 1 {
                    inv_t[a] = b as u16;
                    break;
                }
            }
        }
        Field {
            spec,
            q,
            add_t,
            mul_t,
            neg_t,
            inv_t,
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }
    pub fn p(&self) -> u16 {
        self.spec.p
    }
    pub fn e(&self) -> u8 {
        self.spec.e
    }
    /// Field order `p^e`.
    pub fn order(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add_t[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul_t[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg_t[a as usize]
    }
    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }
    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        assert!(a != 0, "division by zero");
        self.inv_t[a as usize]
    }
    #[inline]
    pub fn div(&self, a: u16, b: u16) -> u16 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u16, mut n: u64) -> u16 {
        let mut base = a;
        let mut acc = 1u16;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Frobenius `a -> a^p`.
    pub fn frobenius(&self, a: u16) -> u16 {
        self.pow(a, self.spec.p as u64)
    }

    /// All field elements, in index order.
    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.q as u16
    }

    /// Nonzero field elements.
    pub fn units(&self) -> impl Iterator<Item = u16> {
        1..self.q as u16
    }

    /// Coefficient vector of an element over the prime field (length `e`).
    pub fn to_digits(&self, a: u16) -> Vec<u16> {
        digits(self.spec.p, self.spec.e, a)
    }

    pub fn from_digits(&self, ds: &[u16]) -> u16 {
        undigits(self.spec.p, ds)
    }

    /// Whether an element lies in the prime subfield.
    pub fn in_prime_field(&self, a: u16) -> bool {
        a < self.spec.p
    }

    /// Embed an element of the prime field `F_p` into this field.
    pub fn embed_prime(&self, c: u16) -> u16 {
        debug_assert!(c < self.spec.p);
        c
    }

    /// True when `other` is the prime subfield of `self` (or the same field).
    pub fn extends(&self, other: &Field) -> bool {
        self.spec == other.spec || (other.spec.e == 1 && other.spec.p == self.spec.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        // F_3 is plain arithmetic mod 3
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.order(), 3);
        assert_eq!(f3.add(2, 2), 1);
        assert_eq!(f3.mul(2, 2), 1);
        // F_2: 1 + 1 = 0
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.add(1, 1), 0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(4, 1).unwrap_err(), GfError::NonPrime(4));
        assert_eq!(Field::new(3, 5).unwrap_err(), GfError::DegreeTooLarge(5));
        assert_eq!(Field::new(1, 1).unwrap_err(), GfError::NonPrime(1));
    }

    #[test]
    fn f9_multiplicative_group() {
        // brute force over all 9 elements: the unit group is cyclic of order 8
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(f9.order(), 9);
        let mut found_generator = false;
        for g in f9.units() {
            let mut order = 1;
            let mut x = g;
            while x != 1 {
                x = f9.mul(x, g);
                order += 1;
            }
            assert_eq!(8 % order, 0);
            if order == 8 {
                found_generator = true;
            }
        }
        assert!(found_generator);
    }

    #[test]
    fn field_axioms_exhaustive() {
        // associativity, distributivity, inverses on every pair/triple for q <= 81
        for (p, e) in [(2u16, 1u8), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3), (3, 4), (2, 4)]
        {
            let f = Field::new(p, e).unwrap();
            if f.order() > 81 {
                continue;
            }
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if a != 0 {
                        assert_eq!(f.mul(a, f.inv(a)), 1);
                    }
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_modulus_is_stable() {
        // frozen canonical moduli; serialization depends on these
        assert_eq!(Field::new(3, 2).unwrap().spec().modulus, vec![1, 0, 1]);
        assert_eq!(Field::new(2, 2).unwrap().spec().modulus, vec![1, 1, 1]);
        assert_eq!(Field::new(2, 3).unwrap().spec().modulus, vec![1, 1, 0, 1]);
        assert_eq!(Field::new(5, 2).unwrap().spec().modulus, vec![2, 0, 1]);
    }

    #[test]
    fn frobenius_fixes_prime_field() {
        let f9 = Field::new(3, 2).unwrap();
        for a in 0..3 {
            assert_eq!(f9.frobenius(a), a);
        }
        // frobenius is an involution on F_9
        for a in f9.elements() {
            assert_eq!(f9.frobenius(f9.frobenius(a)), a);
        }
    }
}
