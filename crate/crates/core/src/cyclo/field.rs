//! Per-conductor data for `Q(zeta_n)`: the cyclotomic polynomial and the
//! power-basis expansion of every `zeta_n^j`, plus the coefficient-generic
//! routines that work on power-basis vectors.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub(crate) struct FieldData {
    pub n: u32,
    pub phi: usize,
    /// Row `j` (length `phi`) is `x^j mod Phi_n` for `0 <= j < n`.
    mono: Vec<i64>,
    pub primes: Vec<u32>,
}

impl FieldData {
    #[inline]
    pub fn monomial(&self, j: usize) -> &[i64] {
        &self.mono[j * self.phi..(j + 1) * self.phi]
    }
}

static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
static POLYS: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();

pub(crate) fn field(n: u32) -> Arc<FieldData> {
    assert!(n >= 1, "conductor must be positive");
    let cache = FIELDS.get_or_init(Default::default);
    if let Some(f) = cache.read().unwrap().get(&n) {
        return f.clone();
    }
    let built = Arc::new(build_field(n));
    cache.write().unwrap().entry(n).or_insert(built).clone()
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `Phi_n` by exact division of `x^n - 1` by `Phi_d` for the proper divisors `d`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    let cache = POLYS.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_polynomial(d);
            num = exact_div(&num, &div);
        }
    }
    let poly = Arc::new(num);
    cache.write().unwrap().entry(n).or_insert(poly).clone()
}

/// Quotient of `num` by the monic polynomial `den`; the remainder must vanish.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    q
}

fn build_field(n: u32) -> FieldData {
    let poly = cyclotomic_polynomial(n).as_ref().clone();
    let phi = poly.len() - 1;
    let mut mono = vec![0i64; n as usize * phi];
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for j in 0..n as usize {
        mono[j * phi..(j + 1) * phi].copy_from_slice(&cur);
        // Multiply by x and reduce with x^phi = -(poly[0] + ... + poly[phi-1] x^(phi-1)).
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] = cur[i]
                    .checked_sub(top.checked_mul(poly[i]).expect("monomial table overflow"))
                    .expect("monomial table overflow");
            }
        }
    }
    FieldData {
        n,
        phi,
        mono,
        primes: prime_factors(n as u64).into_iter().map(|p| p as u32).collect(),
    }
}

/// Coefficient ring for the generic routines. `i128` uses checked
/// arithmetic and reports overflow as `None`; `BigRational` never fails.
pub(crate) trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn mul_i64(&self, k: i64) -> Option<Self>;
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn mul_i64(&self, k: i64) -> Option<Self> {
        self.checked_mul(k as i128)
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn mul_i64(&self, k: i64) -> Option<Self> {
        Some(self * BigRational::from_integer(BigInt::from(k)))
    }
}

pub(crate) fn to_small(coeffs: &[BigRational]) -> Option<Vec<i128>> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_integer() {
                c.numer().to_i128()
            } else {
                None
            }
        })
        .collect()
}

pub(crate) fn from_small(coeffs: &[i128]) -> Vec<BigRational> {
    coeffs
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect()
}

/// Adds `c * zeta_n^j` (any `j`, taken mod `n`) to the power-basis vector `out`.
#[inline]
pub(crate) fn add_monomial<S: Scalar>(f: &FieldData, out: &mut [S], j: usize, c: &S) -> Option<()> {
    let j = j % f.n as usize;
    if j < f.phi {
        out[j] = out[j].add(c)?;
        return Some(());
    }
    for (o, &m) in out.iter_mut().zip(f.monomial(j)) {
        if m != 0 {
            *o = o.add(&c.mul_i64(m)?)?;
        }
    }
    Some(())
}

/// Power-basis coordinates of `sum_j full[j] zeta_n^j`.
pub(crate) fn reduce_full<S: Scalar>(n: u32, full: &[S]) -> Option<Vec<S>> {
    let f = field(n);
    let mut out = vec![S::zero(); f.phi];
    for (j, c) in full.iter().enumerate() {
        if !c.is_zero() {
            add_monomial(&f, &mut out, j, c)?;
        }
    }
    Some(out)
}

/// Re-expresses a `Q(zeta_m)` power-basis vector in `Q(zeta_n)`, `m | n`.
pub(crate) fn embed<S: Scalar>(m: u32, coeffs: &[S], n: u32) -> Option<Vec<S>> {
    if m == n {
        return Some(coeffs.to_vec());
    }
    debug_assert_eq!(n % m, 0);
    let step = (n / m) as usize;
    let f = field(n);
    let mut out = vec![S::zero(); f.phi];
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            add_monomial(&f, &mut out, i * step, c)?;
        }
    }
    Some(out)
}

/// Product of two power-basis vectors of `Q(zeta_n)`.
pub(crate) fn mul<S: Scalar>(n: u32, a: &[S], b: &[S]) -> Option<Vec<S>> {
    let f = field(n);
    let nn = n as usize;
    let mut full = vec![S::zero(); nn];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let k = (i + j) % nn;
            full[k] = full[k].add(&x.mul(y)?)?;
        }
    }
    let mut out = vec![S::zero(); f.phi];
    for (j, c) in full.iter().enumerate() {
        if !c.is_zero() {
            add_monomial(&f, &mut out, j, c)?;
        }
    }
    Some(out)
}

/// Image of a power-basis vector under `zeta_n -> zeta_n^r`.
pub(crate) fn galois<S: Scalar>(n: u32, a: &[S], r: u64) -> Option<Vec<S>> {
    let f = field(n);
    let mut out = vec![S::zero(); f.phi];
    for (i, c) in a.iter().enumerate() {
        if !c.is_zero() {
            let j = ((i as u64 * r) % n as u64) as usize;
            add_monomial(&f, &mut out, j, c)?;
        }
    }
    Some(out)
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "not invertible");
    t.rem_euclid(m as i64) as u64
}

/// Tries to express `z in Q(zeta_n)` inside `Q(zeta_{n/p})`.
///
/// If `p^2 | n`, `Phi_n(x) = Phi_{n/p}(x^p)` and the subfield is spanned by
/// the basis vectors at multiples of `p`. Otherwise `Q(zeta_n)` is the
/// compositum of `Q(zeta_m)` and `Q(zeta_p)`; writing
/// `z = sum_t A_t zeta_p^t` with `A_t in Q(zeta_m)`, `z` lies in `Q(zeta_m)`
/// exactly when `A_1 = ... = A_{p-1}`, and then `z = A_0 - A_1`.
///
/// Outer `None` is overflow; inner `None` means `z` is not in the subfield.
fn try_reduce<S: Scalar>(n: u32, p: u32, c: &[S]) -> Option<Option<Vec<S>>> {
    let m = n / p;
    let fm = field(m);
    if m % p == 0 {
        if c
            .iter()
            .enumerate()
            .any(|(i, x)| i % p as usize != 0 && !x.is_zero())
        {
            return Some(None);
        }
        return Some(Some((0..fm.phi).map(|j| c[j * p as usize].clone()).collect()));
    }
    let u = mod_inverse(p as u64, m as u64);
    let v = mod_inverse(m as u64, p as u64);
    let mut parts: Vec<Vec<S>> = vec![vec![S::zero(); fm.phi]; p as usize];
    for (i, x) in c.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let t = ((v * i as u64) % p as u64) as usize;
        let e = ((u * i as u64) % m as u64) as usize;
        add_monomial(&fm, &mut parts[t], e, x)?;
    }
    if parts[2.min(p as usize - 1)..]
        .iter()
        .any(|part| *part != parts[1])
    {
        return Some(None);
    }
    let out: Option<Vec<S>> = parts[0]
        .iter()
        .zip(&parts[1])
        .map(|(a, b)| a.sub(b))
        .collect();
    Some(Some(out?))
}

/// Smallest conductor representation of a power-basis vector of `Q(zeta_n)`.
pub(crate) fn canonicalize<S: Scalar>(mut n: u32, mut c: Vec<S>) -> Option<(u32, Vec<S>)> {
    loop {
        if n == 1 {
            return Some((1, c));
        }
        if c[1..].iter().all(|x| x.is_zero()) {
            return Some((1, vec![c[0].clone()]));
        }
        let f = field(n);
        let mut reduced = false;
        for &p in &f.primes {
            if let Some(next) = try_reduce(n, p, &c)? {
                n /= p;
                c = next;
                reduced = true;
                break;
            }
        }
        if !reduced {
            return Some((n, c));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Phi_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic_polynomial(105).iter().any(|&c| c == -2));
        assert_eq!(cyclotomic_polynomial(105).len() - 1, 48);
    }

    #[test]
    fn totient() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(168), 48);
        for n in 1..200u32 {
            assert_eq!(field(n).phi as u64, euler_phi(n as u64));
        }
    }

    #[test]
    fn monomials_wrap_around() {
        let f = field(5);
        // zeta^4 = -1 - zeta - zeta^2 - zeta^3
        assert_eq!(f.monomial(4), &[-1, -1, -1, -1]);
        let f = field(12);
        // zeta_12^6 = -1
        assert_eq!(f.monomial(6), &[-1, 0, 0, 0]);
    }
}
