//! Scalar abstraction shared by the double and the extended precision paths.

use num_complex::Complex;
use num_traits::{Num, One, Zero};
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

pub trait Real:
    Clone + fmt::Debug + PartialOrd + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_f64(x: f64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn to_f64(&self) -> f64;
    fn pi() -> Self;
    fn sqrt(&self) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn atan2(&self, x: &Self) -> Self;
    fn powf(&self, e: &Self) -> Self;
    /// Unit roundoff.
    fn eps() -> f64;

    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&Rational::from((n, d)))
    }
    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Real for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn atan2(&self, x: &Self) -> Self {
        f64::atan2(*self, *x)
    }
    fn powf(&self, e: &Self) -> Self {
        f64::powf(*self, *e)
    }
    fn eps() -> f64 {
        f64::EPSILON / 2.0
    }
}

/// Binary precision of [`Mp`]; 128 bits is a little over 38 decimal digits.
pub const MP_BITS: u32 = 128;

/// MPFR float at [`MP_BITS`] bits.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Mp(pub Float);

impl Mp {
    fn new<T>(v: T) -> Mp
    where
        Float: rug::Assign<T>,
    {
        Mp(Float::with_val(MP_BITS, v))
    }
}

impl fmt::Display for Mp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_string_radix(10, Some(40)))
    }
}

macro_rules! mp_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Mp {
            type Output = Mp;
            fn $m(self, rhs: Mp) -> Mp {
                Mp(self.0.$m(rhs.0))
            }
        }
    };
}
mp_binop!(Add, add);
mp_binop!(Sub, sub);
mp_binop!(Mul, mul);
mp_binop!(Div, div);
mp_binop!(Rem, rem);

impl Neg for Mp {
    type Output = Mp;
    fn neg(self) -> Mp {
        Mp(-self.0)
    }
}

impl Zero for Mp {
    fn zero() -> Mp {
        Mp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Mp {
    fn one() -> Mp {
        Mp::new(1)
    }
}

impl Num for Mp {
    type FromStrRadixErr = rug::float::ParseFloatError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Mp, Self::FromStrRadixErr> {
        let p = Float::parse_radix(s, radix as i32)?;
        Ok(Mp::new(p))
    }
}

impl Real for Mp {
    fn from_f64(x: f64) -> Self {
        Mp::new(x)
    }
    fn from_rational(r: &Rational) -> Self {
        Mp::new(r)
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
    fn pi() -> Self {
        Mp::new(Constant::Pi)
    }
    fn sqrt(&self) -> Self {
        Mp(self.0.clone().sqrt())
    }
    fn exp(&self) -> Self {
        Mp(self.0.clone().exp())
    }
    fn ln(&self) -> Self {
        Mp(self.0.clone().ln())
    }
    fn sin(&self) -> Self {
        Mp(self.0.clone().sin())
    }
    fn cos(&self) -> Self {
        Mp(self.0.clone().cos())
    }
    fn atan2(&self, x: &Self) -> Self {
        Mp(self.0.clone().atan2(&x.0))
    }
    fn powf(&self, e: &Self) -> Self {
        Mp(self.0.clone().pow(&e.0))
    }
    fn eps() -> f64 {
        (2.0f64).powi(-(MP_BITS as i32))
    }
}

pub type Cx<T> = Complex<T>;

pub fn cx<T: Real>(re: f64, im: f64) -> Cx<T> {
    Complex::new(T::from_f64(re), T::from_f64(im))
}

pub fn creal<T: Real>(x: T) -> Cx<T> {
    Complex::new(x, T::zero())
}

pub fn cabs<T: Real>(z: &Cx<T>) -> T {
    let (a, b) = (z.re.abs(), z.im.abs());
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    if hi.is_zero() {
        return hi;
    }
    let r = lo / hi.clone();
    hi * (T::one() + r.clone() * r).sqrt()
}

/// Principal argument in `(-pi, pi]`.
pub fn carg<T: Real>(z: &Cx<T>) -> T {
    z.im.atan2(&z.re)
}

pub fn cexp<T: Real>(z: &Cx<T>) -> Cx<T> {
    let m = z.re.exp();
    Complex::new(m.clone() * z.im.cos(), m * z.im.sin())
}

/// Principal logarithm.
pub fn cln<T: Real>(z: &Cx<T>) -> Cx<T> {
    Complex::new(cabs(z).ln(), carg(z))
}

/// Principal square root.
pub fn csqrt<T: Real>(z: &Cx<T>) -> Cx<T> {
    let r = cabs(z);
    if r.is_zero() {
        return Complex::zero();
    }
    let two = T::from_f64(2.0);
    let re = ((r.clone() + z.re.clone()) / two.clone()).sqrt();
    let im = ((r - z.re.clone()) / two).sqrt();
    if z.im < T::zero() {
        Complex::new(re, -im)
    } else {
        Complex::new(re, im)
    }
}

pub fn ccosh<T: Real>(z: &Cx<T>) -> Cx<T> {
    let e = cexp(z);
    let ei = Complex::<T>::one() / e.clone();
    (e + ei) / creal(T::from_f64(2.0))
}

pub fn ccos<T: Real>(z: &Cx<T>) -> Cx<T> {
    ccosh(&Complex::new(-z.im.clone(), z.re.clone()))
}

pub fn cscale<T: Real>(z: &Cx<T>, s: &T) -> Cx<T> {
    Complex::new(z.re.clone() * s.clone(), z.im.clone() * s.clone())
}

pub fn to_c64<T: Real>(z: &Cx<T>) -> Complex<f64> {
    Complex::new(z.re.to_f64(), z.im.to_f64())
}

/// Reduce an angle to `(-pi, pi]`.
pub fn wrap_angle<T: Real>(x: T) -> T {
    let two_pi = T::pi() * T::from_f64(2.0);
    let mut y = x % two_pi.clone();
    if y > T::pi() {
        y = y - two_pi;
    } else if y <= -T::pi() {
        y = y + two_pi;
    }
    y
}

pub fn max_real<T: Real>(a: T, b: T) -> T {
    match a.partial_cmp(&b) {
        Some(Ordering::Less) => b,
        _ => a,
    }
}
