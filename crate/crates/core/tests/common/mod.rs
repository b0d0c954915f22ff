//! Strategies and property bodies shared by the property tests and the
//! acceptance run.

#![allow(dead_code)]

use galrat_core::{Cyclo, GaloisElement};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// Every conductor used below divides this.
pub const MODULUS: u32 = 2520;

const CONDUCTORS: [u32; 12] = [1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24];

/// A random sum `sum_j c_j zeta_n^j` with small rational `c_j`.
pub fn arb_cyclo() -> impl Strategy<Value = Cyclo> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| {
        prop::collection::vec((-4i64..=4, prop::sample::select(vec![1i64, 1, 1, 2, 3])), n as usize).prop_map(
            move |cs| {
                let full: Vec<BigRational> = cs
                    .into_iter()
                    .map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
                    .collect();
                Cyclo::from_full(n, &full)
            },
        )
    })
}

pub fn arb_unit() -> impl Strategy<Value = GaloisElement> {
    prop::sample::select(GaloisElement::units(MODULUS))
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    let scale = 1.0 + a.0.abs() + a.1.abs();
    (a.0 - b.0).abs() < 1e-8 * scale && (a.1 - b.1).abs() < 1e-8 * scale
}

/// Commutative ring laws, checked exactly and against floating-point
/// evaluation of the same expressions.
pub fn ring_laws(a: &Cyclo, b: &Cyclo, c: &Cyclo) -> Result<(), TestCaseError> {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a + &Cyclo::zero(), a.clone());
    prop_assert_eq!(a * &Cyclo::one(), a.clone());
    prop_assert!((a - a).is_zero());
    prop_assert_eq!(-&(-a), a.clone());

    let (za, zb) = (a.to_complex(), b.to_complex());
    let prod = (za.0 * zb.0 - za.1 * zb.1, za.0 * zb.1 + za.1 * zb.0);
    prop_assert!(close((a * b).to_complex(), prod));
    prop_assert!(close((a + b).to_complex(), (za.0 + zb.0, za.1 + zb.1)));

    let n2 = a.abs_squared();
    prop_assert_eq!(n2.conj(), n2.clone());
    prop_assert_eq!(n2.is_zero(), a.is_zero());
    Ok(())
}

/// JSON, power-basis and embed-then-reduce round trips.
pub fn round_trips(a: &Cyclo) -> Result<(), TestCaseError> {
    let text = serde_json::to_string(a).unwrap();
    let back: Cyclo = serde_json::from_str(&text).unwrap();
    prop_assert_eq!(&back, a);

    let n = a.conductor();
    prop_assert_eq!(&Cyclo::from_power_basis(n, a.coeffs().to_vec()).unwrap(), a);

    // sum c_i zeta_n^i inside Q(zeta_m) for a multiple m of n.
    for m in [n * 2, n * 3, MODULUS] {
        let mut full = vec![BigRational::from_integer(0.into()); m as usize];
        for (i, c) in a.coeffs().iter().enumerate() {
            full[i * (m / n) as usize] = c.clone();
        }
        prop_assert_eq!(&Cyclo::from_full(m, &full), a);
    }
    // Canonical conductor: no proper divisor field contains the value.
    prop_assert!(a.coeffs().len() as u64 == galrat_core::cyclo::euler_phi(n as u64));
    Ok(())
}

/// `s o t = st` and each `s` is a ring homomorphism.
pub fn galois_laws(s: GaloisElement, t: GaloisElement, a: &Cyclo, b: &Cyclo) -> Result<(), TestCaseError> {
    let st = s.compose(&t);
    prop_assert_eq!(st.r() as u64, s.r() as u64 * t.r() as u64 % MODULUS as u64);
    prop_assert_eq!(s.apply(&t.apply(a).unwrap()).unwrap(), st.apply(a).unwrap());
    prop_assert_eq!(s.apply(&(a + b)).unwrap(), s.apply(a).unwrap() + s.apply(b).unwrap());
    prop_assert_eq!(s.apply(&(a * b)).unwrap(), s.apply(a).unwrap() * s.apply(b).unwrap());
    prop_assert_eq!(s.inverse().apply(&s.apply(a).unwrap()).unwrap(), a.clone());
    prop_assert_eq!(s.apply(a).unwrap().conductor(), a.conductor());
    Ok(())
}
