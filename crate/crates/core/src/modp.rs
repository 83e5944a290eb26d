//! Prime-field scalars and the small amount of number theory the modular
//! character computation needs.

use std::fmt;
use std::ops::{Add, Mul};

/// An element of the field with `prime` elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModPScalar {
    value: u64,
    prime: u64,
}

impl ModPScalar {
    pub fn new(value: u64, prime: u64) -> Self {
        ModPScalar {
            value: value % prime,
            prime,
        }
    }

    pub fn from_i64(value: i64, prime: u64) -> Self {
        let v = value.rem_euclid(prime as i64) as u64;
        ModPScalar { value: v, prime }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn prime(self) -> u64 {
        self.prime
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        (self.value != 0).then(|| ModPScalar {
            value: inv_mod(self.value, self.prime),
            prime: self.prime,
        })
    }
}

impl Add for ModPScalar {
    type Output = ModPScalar;

    fn add(self, other: Self) -> Self {
        debug_assert_eq!(self.prime, other.prime);
        ModPScalar::new(self.value + other.value, self.prime)
    }
}

impl Mul for ModPScalar {
    type Output = ModPScalar;

    fn mul(self, other: Self) -> Self {
        debug_assert_eq!(self.prime, other.prime);
        ModPScalar {
            value: mul_mod(self.value, other.value, self.prime),
            prime: self.prime,
        }
    }
}

impl fmt::Display for ModPScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of the multiplicative group modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every prime field has a primitive root")
}
