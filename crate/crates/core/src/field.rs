//! Prime fields and the scalar trait the exact algorithms are generic over.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Scalars of an exact field. Every algorithm in this crate that touches
/// matrices is written against this trait.
pub trait Field:
    Copy
    + Eq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// Characteristic of the field.
    fn characteristic() -> u64;

    /// Multiplicative inverse, `None` for zero.
    fn inv(self) -> Option<Self>;

    /// The image of an integer.
    fn from_i64(v: i64) -> Self;
}

/// The field with `P` elements. `P` must be prime; this is checked when a
/// [`FieldSpec`] dispatches to a concrete field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp((v % P as u64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u64 + rhs.0 as u64;
        Fp(if s >= P as u64 { s - P as u64 } else { s } as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        if self.0 >= rhs.0 {
            Fp(self.0 - rhs.0)
        } else {
            Fp((self.0 as u64 + P as u64 - rhs.0 as u64) as u32)
        }
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u32> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u32> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u32> Field for Fp<P> {
    fn characteristic() -> u64 {
        P as u64
    }

    fn inv(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat
            Some(self.pow(P as u64 - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        let r = v.rem_euclid(P as i64);
        Fp(r as u32)
    }
}

/// Characteristics a [`FieldSpec`] can dispatch to.
pub const SUPPORTED_CHARACTERISTICS: &[u32] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 101, 32003, 65521, 2147483647,
];

pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

/// Runtime choice of the base field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub characteristic: u32,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec {
            characteristic: DEFAULT_CHARACTERISTIC,
        }
    }
}

impl FieldSpec {
    pub fn new(characteristic: u32) -> Result<Self> {
        if !is_prime(characteristic as u64) {
            return Err(Error::NotPrime(characteristic as u64));
        }
        if !SUPPORTED_CHARACTERISTICS.contains(&characteristic) {
            return Err(Error::UnsupportedCharacteristic(characteristic as u64));
        }
        Ok(FieldSpec { characteristic })
    }

    pub fn gf2() -> Self {
        FieldSpec { characteristic: 2 }
    }
}

/// Runs a generic computation over the concrete field named by a
/// [`FieldSpec`]. The body is instantiated once per supported prime.
///
/// ```
/// use lyubeznik::{with_field, Field, FieldSpec};
/// fn char_of<F: Field>() -> u64 { F::characteristic() }
/// let spec = FieldSpec::new(7).unwrap();
/// assert_eq!(with_field!(spec, F => char_of::<F>()), 7);
/// ```
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {{
        match $spec.characteristic {
            2 => { type $f = $crate::field::Fp<2>; $body }
            3 => { type $f = $crate::field::Fp<3>; $body }
            5 => { type $f = $crate::field::Fp<5>; $body }
            7 => { type $f = $crate::field::Fp<7>; $body }
            11 => { type $f = $crate::field::Fp<11>; $body }
            13 => { type $f = $crate::field::Fp<13>; $body }
            17 => { type $f = $crate::field::Fp<17>; $body }
            19 => { type $f = $crate::field::Fp<19>; $body }
            23 => { type $f = $crate::field::Fp<23>; $body }
            29 => { type $f = $crate::field::Fp<29>; $body }
            31 => { type $f = $crate::field::Fp<31>; $body }
            37 => { type $f = $crate::field::Fp<37>; $body }
            41 => { type $f = $crate::field::Fp<41>; $body }
            43 => { type $f = $crate::field::Fp<43>; $body }
            47 => { type $f = $crate::field::Fp<47>; $body }
            101 => { type $f = $crate::field::Fp<101>; $body }
            32003 => { type $f = $crate::field::Fp<32003>; $body }
            65521 => { type $f = $crate::field::Fp<65521>; $body }
            2147483647 => { type $f = $crate::field::Fp<2147483647>; $body }
            other => panic!("FieldSpec with unsupported characteristic {}", other),
        }
    }};
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
