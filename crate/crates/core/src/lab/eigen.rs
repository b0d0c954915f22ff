//! The k-eigenvalue property of a linear action over a prime field.

use serde_json::json;

use super::CheckOutcome;
use crate::error::LabError;
use crate::modp::{is_prime, Fp};

pub const VECTOR_CAP: u64 = 1_000_000;

/// Whether the group generated by `matrices` (invertible `d x d` over
/// `F_p`, acting on column vectors) has the k-eigenvalue property: with
/// `lambda` the least element of order `k` in `F_p^x`, every `v` has some
/// `h` in the group with `h v = lambda v`.
///
/// Orbits of the generated group are computed over all of `F_p^d`; the
/// property holds iff each `v` shares an orbit with `lambda v`.
pub fn eigenvalue_property_check(
    p: u64,
    d: usize,
    matrices: &[Vec<Vec<u64>>],
    k: u64,
) -> Result<CheckOutcome, LabError> {
    if !is_prime(p) || p >= 1 << 31 {
        return Err(LabError::InvalidParameter(format!("{p} is not a supported prime")));
    }
    if d == 0 {
        return Err(LabError::InvalidParameter("dimension must be positive".into()));
    }
    if k == 0 || (p - 1) % k != 0 {
        return Err(LabError::InvalidK { k, p });
    }
    let size = (0..d).try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&s| s <= VECTOR_CAP));
    let Some(size) = size else {
        return Err(LabError::CapExceeded(p.saturating_pow(d as u32)));
    };
    let f = Fp::new(p);
    for (i, m) in matrices.iter().enumerate() {
        if m.len() != d || m.iter().any(|r| r.len() != d || r.iter().any(|&x| x >= p)) {
            return Err(LabError::InvalidParameter(format!("matrix {i} is not {d}x{d} over F_{p}")));
        }
        let mut copy = m.clone();
        if f.rref(&mut copy).len() != d {
            return Err(LabError::InvalidParameter(format!("matrix {i} is singular")));
        }
    }
    let lambda = (1..p).find(|&a| f.order(a) == k).expect("F_p^x is cyclic");

    let decode = |mut code: u64| -> Vec<u64> {
        (0..d)
            .map(|_| {
                let x = code % p;
                code /= p;
                x
            })
            .collect()
    };
    let encode = |v: &[u64]| -> u64 { v.iter().rev().fold(0, |acc, &x| acc * p + x) };
    let apply = |m: &[Vec<u64>], v: &[u64]| -> Vec<u64> {
        m.iter()
            .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect()
    };

    let mut orbit = vec![u32::MAX; size as usize];
    let mut orbits = 0u32;
    for start in 0..size {
        if orbit[start as usize] != u32::MAX {
            continue;
        }
        orbit[start as usize] = orbits;
        let mut stack = vec![start];
        while let Some(code) = stack.pop() {
            let v = decode(code);
            for m in matrices {
                let w = encode(&apply(m, &v));
                if orbit[w as usize] == u32::MAX {
                    orbit[w as usize] = orbits;
                    stack.push(w);
                }
            }
        }
        orbits += 1;
    }

    let group = format!("F_{p}^{d}");
    for code in 0..size {
        let v = decode(code);
        let scaled: Vec<u64> = v.iter().map(|&x| f.mul(lambda, x)).collect();
        if orbit[code as usize] != orbit[encode(&scaled) as usize] {
            return Ok(CheckOutcome::fail(
                group,
                "eigenvalue_property",
                json!({ "k": k, "lambda": lambda, "vector": v, "scaled": scaled }),
            ));
        }
    }
    Ok(CheckOutcome::pass(
        group,
        "eigenvalue_property",
        json!({ "k": k, "lambda": lambda, "vectors": size, "orbits": orbits }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::Status;

    #[test]
    fn sign_action_on_f3() {
        let out = eigenvalue_property_check(3, 1, &[vec![vec![2]]], 2).unwrap();
        assert_eq!(out.status, Status::Pass);
        assert_eq!(out.witness["lambda"], 2);
    }

    #[test]
    fn full_unit_group_of_f5() {
        let out = eigenvalue_property_check(5, 1, &[vec![vec![2]]], 4).unwrap();
        assert_eq!(out.status, Status::Pass);
        assert_eq!(out.witness["lambda"], 2);
    }

    #[test]
    fn trivial_action_fails_off_zero() {
        let out = eigenvalue_property_check(5, 2, &[], 2).unwrap();
        assert_eq!(out.status, Status::Fail);
        // The zero vector is skipped implicitly: the first failure is nonzero.
        assert_eq!(out.witness["vector"], json!([1, 0]));
        // k = 1 always holds: lambda = 1 and h = identity.
        assert_eq!(eigenvalue_property_check(5, 2, &[], 1).unwrap().status, Status::Pass);
    }

    #[test]
    fn squares_give_half_the_property() {
        // <4> = {1, 4} in F_5: the 2-property holds, the 4-property does not.
        let m = vec![vec![vec![4]]];
        assert_eq!(eigenvalue_property_check(5, 1, &m, 2).unwrap().status, Status::Pass);
        assert_eq!(eigenvalue_property_check(5, 1, &m, 4).unwrap().status, Status::Fail);
    }

    #[test]
    fn errors() {
        assert_eq!(
            eigenvalue_property_check(7, 1, &[], 4).unwrap_err(),
            LabError::InvalidK { k: 4, p: 7 }
        );
        assert!(matches!(
            eigenvalue_property_check(101, 4, &[], 2).unwrap_err(),
            LabError::CapExceeded(_)
        ));
        assert!(matches!(
            eigenvalue_property_check(5, 2, &[vec![vec![1, 2], vec![2, 4]]], 2).unwrap_err(),
            LabError::InvalidParameter(_)
        ));
    }
}
