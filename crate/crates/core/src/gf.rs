//! Table-driven arithmetic in GF(p^m).
//!
//! Elements are identified with their canonical index: the base-p integer
//! whose digits are the coefficients of the element's polynomial
//! representative, constant term least significant. Index 0 is zero and
//! index 1 is one.
//!
//! The modulus for each (p, m) is the monic irreducible polynomial of degree
//! m whose lower coefficient vector has the smallest base-p encoding, so the
//! element ordering is fixed across runs and platforms.

use crate::error::{Error, Result};

/// Canonical index of a field element.
pub type FieldElement = u16;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: usize = 1 << 16;

/// Full q×q addition tables are kept up to this order; larger fields add
/// digit by digit.
const ADD_TABLE_LIMIT: usize = 1024;

/// Immutable arithmetic tables for GF(q), q = p^m.
#[derive(Clone, Debug)]
pub struct FieldTable {
    p: u32,
    m: u32,
    q: usize,
    modulus: Vec<u32>,
    add: Vec<FieldElement>,
    neg: Vec<FieldElement>,
    inv: Vec<FieldElement>,
    // exp[i] = alpha^i for i in 0..2(q-1); log[0] is unused.
    exp: Vec<FieldElement>,
    log: Vec<u32>,
    primitive: FieldElement,
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, m)` with `q = p^m`, or `None` if `q` is not a prime power.
pub fn prime_power(q: usize) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2usize;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

fn digits(mut x: usize, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = (x % p as usize) as u32;
            x /= p as usize;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> usize {
    ds.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize)
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                let t = (lead as u64 * bc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    for d in 1..=m / 2 {
        for low in 0..(p as usize).pow(d as u32) {
            let mut g = digits(low, p, d as u32);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldTable {
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::BadParameters("extension degree must be at least 1".into()));
        }
        let q = (p as usize)
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::TooLarge(format!("GF({p}^{m}) exceeds order {MAX_FIELD_ORDER}")))?;

        let modulus = (0..q)
            .map(|low| {
                let mut f = digits(low, p, m);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");

        let slow_mul = |a: usize, b: usize| -> usize {
            let (da, db) = (digits(a, p, m), digits(b, p, m));
            let mut prod = vec![0u32; 2 * m as usize - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
                }
            }
            let mut r = poly_rem(&prod, &modulus, p);
            r.resize(m as usize, 0);
            undigits(&r, p)
        };

        let order = |g: usize| -> usize {
            let mut x = g;
            let mut k = 1;
            while x != 1 {
                x = slow_mul(x, g);
                k += 1;
            }
            k
        };
        let primitive = (1..q).find(|&g| order(g) == q - 1).expect("GF(q)^* is cyclic");

        let mut exp = vec![0 as FieldElement; 2 * (q - 1)];
        let mut log = vec![0u32; q];
        let mut x = 1usize;
        for i in 0..q - 1 {
            exp[i] = x as FieldElement;
            exp[i + q - 1] = x as FieldElement;
            log[x] = i as u32;
            x = slow_mul(x, primitive);
        }

        let neg: Vec<FieldElement> = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits(a, p, m).iter().map(|&d| (p - d) % p).collect();
                undigits(&d, p) as FieldElement
            })
            .collect();
        let inv: Vec<FieldElement> =
            (0..q).map(|a| if a == 0 { 0 } else { exp[(q - 1 - log[a] as usize) % (q - 1)] }).collect();

        let mut field =
            FieldTable { p, m, q, modulus, add: Vec::new(), neg, inv, exp, log, primitive: primitive as FieldElement };
        if q <= ADD_TABLE_LIMIT {
            let mut add = vec![0; q * q];
            for a in 0..q {
                for b in 0..q {
                    add[a * q + b] = field.digit_add(a as FieldElement, b as FieldElement);
                }
            }
            field.add = add;
        }
        Ok(field)
    }

    /// Field of order `q`, which must be a prime power.
    pub fn with_order(q: usize) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or_else(|| Error::BadParameters(format!("{q} is not a prime power")))?;
        Self::new(p, m)
    }

    fn digit_add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a ^ b;
        }
        let p = self.p as usize;
        let (mut a, mut b) = (a as usize, b as usize);
        let (mut out, mut place) = (0usize, 1usize);
        for _ in 0..self.m {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out as FieldElement
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Coefficients of the modulus, constant term first; monic of degree m.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> FieldElement {
        self.primitive
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(|x| x as FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.add.is_empty() {
            self.digit_add(a, b)
        } else {
            self.add[a as usize * self.q + b as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a == 0 {
            Err(Error::DivideByZero(self.q))
        } else {
            Ok(self.inv[a as usize])
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `alpha^k` for the designated primitive element.
    pub fn alpha_pow(&self, k: i64) -> FieldElement {
        let period = (self.q - 1) as i64;
        self.exp[k.rem_euclid(period) as usize]
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            1
        } else if a == 0 {
            0
        } else {
            let e = (self.log[a as usize] as u64 * k) % (self.q as u64 - 1);
            self.exp[e as usize]
        }
    }

    /// `[alpha^0, alpha^1, ..., alpha^(q-2)]`.
    pub fn primitive_powers(&self) -> Vec<FieldElement> {
        self.exp[..self.q - 1].to_vec()
    }
}
