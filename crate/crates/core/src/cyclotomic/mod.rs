//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` modulo the
//! cyclotomic polynomial `Φ_N`, as integer numerators over one positive common
//! denominator. The representation is canonical within a fixed conductor;
//! comparisons across conductors lift both sides to the lcm first. Results
//! are never descended to a smaller conductor.

mod field;
mod parse;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::modp::{self, ModPScalar};

pub use field::{cyclotomic_poly, euler_phi};
pub use parse::parse_cyc;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// An exact element of `Q(ζ_N)`.
#[derive(Clone, Debug)]
pub struct CycElem {
    conductor: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

impl CycElem {
    pub fn zero(conductor: u32) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let phi = field::field(conductor).phi;
        CycElem {
            conductor,
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_integer(1, conductor)
    }

    pub fn from_integer(value: i64, conductor: u32) -> Self {
        let mut z = Self::zero(conductor);
        z.num[0] = BigInt::from(value);
        z
    }

    pub fn from_rational(value: &Rational, conductor: u32) -> Self {
        let mut z = Self::zero(conductor);
        z.num[0] = value.numer().clone();
        z.den = value.denom().clone();
        z.normalize();
        z
    }

    /// `ζ_N^k`, with `k` reduced modulo `N` (negative exponents allowed).
    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        let f = field::field(conductor);
        let e = k.rem_euclid(conductor as i64) as usize;
        CycElem {
            conductor,
            num: f.power(e).iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    /// Build from raw power-basis coordinates of length `φ(N)`.
    pub fn from_coeffs(conductor: u32, coeffs: &[Rational]) -> Self {
        let phi = field::field(conductor).phi;
        assert_eq!(coeffs.len(), phi, "expected φ(N) coordinates");
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut z = CycElem {
            conductor,
            num,
            den,
        };
        z.normalize();
        z
    }

    /// Combination `Σ coeffs[k] ζ_N^k` over arbitrary (unreduced) exponents.
    pub(crate) fn from_exponent_coeffs(
        conductor: u32,
        terms: &[(usize, BigInt)],
        den: BigInt,
    ) -> Self {
        let f = field::field(conductor);
        let mut num = vec![BigInt::zero(); f.phi];
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            for (t, &b) in f.power(*k).iter().enumerate() {
                if b != 0 {
                    num[t] += c * b;
                }
            }
        }
        let mut z = CycElem {
            conductor,
            num,
            den,
        };
        z.normalize();
        z
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in &mut self.num {
                *c = &*c / &g;
            }
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coordinates as rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Re-express in `Q(ζ_M)`; `M` must be a multiple of the conductor.
    pub fn lift(&self, m: u32) -> CycElem {
        if m == self.conductor {
            return self.clone();
        }
        assert!(
            m.is_multiple_of(self.conductor),
            "cannot lift conductor {} to {}",
            self.conductor,
            m
        );
        let step = (m / self.conductor) as usize;
        let terms: Vec<(usize, BigInt)> = self
            .num
            .iter()
            .enumerate()
            .map(|(i, c)| (i * step, c.clone()))
            .collect();
        CycElem::from_exponent_coeffs(m, &terms, self.den.clone())
    }

    fn aligned<'a>(
        a: &'a CycElem,
        b: &'a CycElem,
    ) -> (std::borrow::Cow<'a, CycElem>, std::borrow::Cow<'a, CycElem>) {
        use std::borrow::Cow;
        if a.conductor == b.conductor {
            (Cow::Borrowed(a), Cow::Borrowed(b))
        } else {
            let m = lcm(a.conductor, b.conductor);
            (Cow::Owned(a.lift(m)), Cow::Owned(b.lift(m)))
        }
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^k` (`k` coprime to `N`).
    pub fn galois(&self, k: i64) -> CycElem {
        let n = self.conductor as i64;
        let terms: Vec<(usize, BigInt)> = self
            .num
            .iter()
            .enumerate()
            .map(|(i, c)| (((i as i64 * k).rem_euclid(n)) as usize, c.clone()))
            .collect();
        CycElem::from_exponent_coeffs(self.conductor, &terms, self.den.clone())
    }

    /// Complex conjugation, i.e. `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> CycElem {
        self.galois(-1)
    }

    pub fn inv(&self) -> Result<CycElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(CycElem::from_rational(&r.recip(), self.conductor));
        }
        // a^{-1} = (product of the other Galois conjugates) / norm(a)
        let n = self.conductor as i64;
        let mut others = CycElem::one(self.conductor);
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("field norm is rational");
        let scale = CycElem::from_rational(&norm.recip(), self.conductor);
        Ok(&others * &scale)
    }

    pub fn div(&self, other: &CycElem) -> Result<CycElem> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> CycElem {
        let mut acc = CycElem::one(self.conductor);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Reduction homomorphism into the prime field, sending `ζ_N` to
    /// `g^{(p-1)/N}`.
    pub fn to_modp(&self, p: u64, g: u64) -> Result<ModPScalar> {
        let n = self.conductor as u64;
        if !(p - 1).is_multiple_of(n) {
            return Err(Error::BadPrime {
                prime: p,
                conductor: self.conductor,
            });
        }
        let pb = BigInt::from(p);
        let den = self.den.mod_floor(&pb).to_u64().expect("residue fits");
        if den == 0 {
            return Err(Error::DenominatorCollision { prime: p });
        }
        let zeta = modp::pow_mod(g, (p - 1) / n, p);
        let mut acc = 0u64;
        let mut zk = 1u64;
        for c in &self.num {
            let r = c.mod_floor(&pb).to_u64().expect("residue fits");
            acc = modp::add_mod(acc, modp::mul_mod(r, zk, p), p);
            zk = modp::mul_mod(zk, zeta, p);
        }
        Ok(ModPScalar::new(
            modp::mul_mod(acc, modp::inv_mod(den, p), p),
            p,
        ))
    }

    /// Floating-point value under `ζ_N ↦ exp(2πi/N)`. Only for test oracles.
    pub fn to_complex(&self) -> Complex64 {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let step = std::f64::consts::TAU / self.conductor as f64;
        self.num
            .iter()
            .enumerate()
            .map(|(k, c)| Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), step * k as f64))
            .sum::<Complex64>()
            / den
    }

    /// Canonical hashable coordinates (numerators then denominator).
    pub(crate) fn key_into(&self, out: &mut Vec<BigInt>) {
        out.extend(self.num.iter().cloned());
        out.push(self.den.clone());
    }

    fn mul_same(&self, other: &CycElem) -> CycElem {
        let f = field::field(self.conductor);
        let phi = f.phi;
        if phi == 1 {
            let mut z = CycElem {
                conductor: self.conductor,
                num: vec![&self.num[0] * &other.num[0]],
                den: &self.den * &other.den,
            };
            z.normalize();
            return z;
        }
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut num: Vec<BigInt> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (t, &b) in f.power(k).iter().enumerate() {
                if b != 0 {
                    num[t] += c * b;
                }
            }
        }
        let mut z = CycElem {
            conductor: self.conductor,
            num,
            den: &self.den * &other.den,
        };
        z.normalize();
        z
    }

    fn add_same(&self, other: &CycElem, sign: i8) -> CycElem {
        let (den, fa, fb) = if self.den == other.den {
            (self.den.clone(), BigInt::one(), BigInt::one())
        } else {
            let l = self.den.lcm(&other.den);
            let fa = &l / &self.den;
            let fb = &l / &other.den;
            (l, fa, fb)
        };
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| {
                let rhs = b * &fb;
                if sign > 0 {
                    a * &fa + rhs
                } else {
                    a * &fa - rhs
                }
            })
            .collect();
        let mut z = CycElem {
            conductor: self.conductor,
            num,
            den,
        };
        z.normalize();
        z
    }
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = CycElem::aligned(self, other);
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for CycElem {}

impl Add for &CycElem {
    type Output = CycElem;
    fn add(self, rhs: &CycElem) -> CycElem {
        let (a, b) = CycElem::aligned(self, rhs);
        a.add_same(&b, 1)
    }
}

impl Sub for &CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &CycElem) -> CycElem {
        let (a, b) = CycElem::aligned(self, rhs);
        a.add_same(&b, -1)
    }
}

impl Mul for &CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &CycElem) -> CycElem {
        let (a, b) = CycElem::aligned(self, rhs);
        a.mul_same(&b)
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycElem {
            type Output = CycElem;
            fn $m(self, rhs: CycElem) -> CycElem {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        -&self
    }
}

/// Renders in the expression grammar accepted by [`parse_cyc`], with `z`
/// standing for `ζ_N`.
impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}*{power}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
