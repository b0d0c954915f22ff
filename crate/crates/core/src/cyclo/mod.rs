//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclo`] is stored in the power basis `1, zeta_n, .., zeta_n^(phi(n)-1)`
//! of `Q(zeta_n)` with `n` reduced to the smallest possible conductor, so
//! equal values always have identical representations. Mixed-conductor
//! operations embed both operands into `Q(zeta_lcm)` via
//! `zeta_m -> zeta_lcm^(lcm/m)`.
//!
//! Every operation first tries a checked `i128` path (character values are
//! algebraic integers, so coefficients are almost always small integers) and
//! falls back to `BigRational` on non-integral input or overflow.

mod field;
mod galois;
mod json;
pub mod lift;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use field::{cyclotomic_polynomial, euler_phi, prime_factors};
pub use galois::GaloisElement;
pub use json::CycloJson;

use crate::error::CycloError;
use field::{from_small, to_small};

pub type Rational = BigRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    n: u32,
    coeffs: Vec<BigRational>,
}

macro_rules! try_small_then_big {
    ($small:expr, $big:expr) => {{
        if let Some(out) = $small {
            out
        } else {
            $big
        }
    }};
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo {
            n: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclo::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        Cyclo {
            n: 1,
            coeffs: vec![BigRational::from_integer(BigInt::from(v))],
        }
    }

    pub fn from_rational(v: BigRational) -> Self {
        Cyclo {
            n: 1,
            coeffs: vec![v],
        }
    }

    /// `zeta_n^k` in canonical form.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let j = k.rem_euclid(n as i64) as usize;
        let mut full = vec![0i128; n as usize];
        full[j] = 1;
        Cyclo::from_full_small(n, &full)
    }

    /// `sum_j full[j] * zeta_n^j` for a length-`n` integer vector.
    pub fn from_full_small(n: u32, full: &[i128]) -> Self {
        assert_eq!(full.len(), n as usize);
        try_small_then_big!(
            field::reduce_full(n, full)
                .and_then(|pb| field::canonicalize(n, pb))
                .map(|(n, c)| Cyclo {
                    n,
                    coeffs: from_small(&c)
                }),
            {
                let big = from_small(full);
                let pb = field::reduce_full(n, &big).unwrap();
                Cyclo::from_canonical_parts(field::canonicalize(n, pb).unwrap())
            }
        )
    }

    /// `sum_j full[j] * zeta_n^j` for a length-`n` rational vector.
    pub fn from_full(n: u32, full: &[BigRational]) -> Self {
        assert_eq!(full.len(), n as usize);
        let pb = field::reduce_full(n, full).unwrap();
        Cyclo::from_canonical_parts(field::canonicalize(n, pb).unwrap())
    }

    /// Power-basis coordinates in `Q(zeta_n)` (length `phi(n)`), reduced to
    /// the minimal conductor.
    pub fn from_power_basis(n: u32, coeffs: Vec<BigRational>) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::Malformed("conductor must be positive".into()));
        }
        let phi = euler_phi(n as u64) as usize;
        if coeffs.len() != phi {
            return Err(CycloError::Malformed(format!(
                "conductor {n} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Cyclo::canonical_from(n, coeffs))
    }

    fn canonical_from(n: u32, coeffs: Vec<BigRational>) -> Self {
        if let Some(small) = to_small(&coeffs) {
            if let Some((m, c)) = field::canonicalize(n, small) {
                return Cyclo {
                    n: m,
                    coeffs: from_small(&c),
                };
            }
        }
        Cyclo::from_canonical_parts(field::canonicalize(n, coeffs).unwrap())
    }

    fn from_canonical_parts((n, coeffs): (u32, Vec<BigRational>)) -> Self {
        Cyclo { n, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Integral power-basis coordinates; for character values this is
    /// algebraic integrality since `Z[zeta_n]` has the power basis as a
    /// `Z`-basis.
    pub fn has_integral_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub(crate) fn small_coeffs(&self) -> Option<Vec<i128>> {
        to_small(&self.coeffs)
    }

    /// Image under `zeta -> zeta^r`; `r` must be a unit modulo the conductor.
    /// The conductor of the result is unchanged.
    pub fn galois(&self, r: i64) -> Result<Cyclo, CycloError> {
        let n = self.n;
        let rr = r.rem_euclid(n as i64) as u64;
        if n > 1 && rr.gcd(&(n as u64)) != 1 {
            return Err(CycloError::NotAUnit { r, modulus: n });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let coeffs = try_small_then_big!(
            self.small_coeffs()
                .and_then(|c| field::galois(n, &c, rr))
                .map(|c| from_small(&c)),
            field::galois(n, &self.coeffs, rr).unwrap()
        );
        Ok(Cyclo { n, coeffs })
    }

    /// Complex conjugate, i.e. the Galois image with `r = -1`.
    pub fn conj(&self) -> Cyclo {
        self.galois(-1).expect("-1 is always a unit")
    }

    /// `z * conj(z)`, a totally real value.
    pub fn abs_squared(&self) -> Cyclo {
        self * &self.conj()
    }

    fn embedded(&self, to: u32) -> Vec<BigRational> {
        field::embed(self.n, &self.coeffs, to).unwrap()
    }

    fn combine(
        &self,
        other: &Cyclo,
        small: impl Fn(u32, &[i128], &[i128]) -> Option<Vec<i128>>,
        big: impl Fn(u32, &[BigRational], &[BigRational]) -> Vec<BigRational>,
    ) -> Cyclo {
        let l = (self.n as u64).lcm(&(other.n as u64)) as u32;
        if let (Some(a), Some(b)) = (self.small_coeffs(), other.small_coeffs()) {
            let out = field::embed(self.n, &a, l)
                .zip(field::embed(other.n, &b, l))
                .and_then(|(a, b)| small(l, &a, &b))
                .and_then(|c| field::canonicalize(l, c));
            if let Some((m, c)) = out {
                return Cyclo {
                    n: m,
                    coeffs: from_small(&c),
                };
            }
        }
        let c = big(l, &self.embedded(l), &other.embedded(l));
        Cyclo::from_canonical_parts(field::canonicalize(l, c).unwrap())
    }

    fn scale(&self, k: &BigRational) -> Cyclo {
        if k.is_zero() {
            return Cyclo::zero();
        }
        Cyclo {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Numerical value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * i as f64 / self.n as f64;
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }
}

fn add_vec<S: field::Scalar>(_: u32, a: &[S], b: &[S]) -> Option<Vec<S>> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn sub_vec<S: field::Scalar>(_: u32, a: &[S], b: &[S]) -> Option<Vec<S>> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, other: &Cyclo) -> Cyclo {
        self.combine(other, add_vec::<i128>, |n, a, b| add_vec(n, a, b).unwrap())
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, other: &Cyclo) -> Cyclo {
        self.combine(other, sub_vec::<i128>, |n, a, b| sub_vec(n, a, b).unwrap())
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, other: &Cyclo) -> Cyclo {
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        self.combine(other, field::mul::<i128>, |n, a, b| field::mul(n, a, b).unwrap())
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyclo {
            type Output = Cyclo;
            fn $f(self, other: Cyclo) -> Cyclo {
                (&self).$f(&other)
            }
        }
        impl $tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $f(self, other: &Cyclo) -> Cyclo {
                (&self).$f(other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl std::iter::Sum for Cyclo {
    fn sum<I: Iterator<Item = Cyclo>>(iter: I) -> Cyclo {
        iter.fold(Cyclo::zero(), |a, b| a + b)
    }
}

impl From<i64> for Cyclo {
    fn from(v: i64) -> Self {
        Cyclo::from_integer(v)
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sum of terms `c*E(n)^i` in the power basis, GAP style.
impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "E({})", self.n)?;
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}
