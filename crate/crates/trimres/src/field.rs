//! Exact field arithmetic: prime fields F_p and the rationals.
//!
//! Every scalar is self-describing (it carries its field), so mixing
//! elements of different fields is a bug and panics. All arithmetic is
//! exact; there is no floating point anywhere in this crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Default prime characteristic. Large enough that no degree appearing at
/// desk scale collides with the characteristic (contraction on divided
/// powers needs p greater than every degree in play).
pub const DEFAULT_PRIME: u64 = 32003;

/// The coefficient field: F_p for a prime p, or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Fp(u64),
    Rationals,
}

impl Field {
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Fp(p) => *p,
            Field::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Fp(p) => Scalar::Fp { val: 0, p: *p },
            Field::Rationals => Scalar::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Fp(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { val: r, p: *p }
            }
            Field::Rationals => Scalar::Rat(Box::new(BigRational::from(BigInt::from(n)))),
        }
    }

    /// Uniform nonzero element, used when drawing random dual generators.
    pub fn random_nonzero<R: rand::Rng>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Fp(p) => Scalar::Fp {
                val: rng.gen_range(1..*p),
                p: *p,
            },
            // Small nonzero integers are generic enough over the rationals.
            Field::Rationals => self.from_i64(rng.gen_range(1..10_000i64)),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Fp(p) => write!(f, "F_{}", p),
            Field::Rationals => write!(f, "QQ"),
        }
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { val: u64, p: u64 },
    Rat(Box<BigRational>),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Fp { p, .. } => Field::Fp(*p),
            Scalar::Rat(_) => Field::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { val, .. } => *val == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { val, .. } => *val == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) => {
                assert_eq!(p, q, "mixed characteristics");
                Scalar::Fp {
                    val: (a + b) % p,
                    p: *p,
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(&**a + &**b)),
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Fp { val, p } => Scalar::Fp {
                val: if *val == 0 { 0 } else { p - val },
                p: *p,
            },
            Scalar::Rat(r) => Scalar::Rat(Box::new(-&**r)),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) => {
                assert_eq!(p, q, "mixed characteristics");
                Scalar::Fp {
                    val: (a * b) % p,
                    p: *p,
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(&**a * &**b)),
            _ => panic!("mixed fields"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Fp { val, p } => {
                assert!(*val != 0, "division by zero");
                Scalar::Fp {
                    val: mod_pow(*val, p - 2, *p),
                    p: *p,
                }
            }
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rat(Box::new(r.recip()))
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { val, .. } => write!(f, "{}", val),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.is_negative() {
                    write!(f, "-{}/{}", r.numer().magnitude(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Miller–Rabin primality test, deterministic for u64 with the standard
/// witness set. Used to validate a user-supplied characteristic.
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
        let mut x = mod_pow_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u128(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u128(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow_u128(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u128(acc, base, modulus);
        }
        base = mul_mod_u128(base, base, modulus);
        exp >>= 1;
    }
    acc
}
