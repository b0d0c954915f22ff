//! Integer lifts to `Z[x]/(x^e - 1)` for fast exact sums of products.
//!
//! A character value in `Z[zeta_e]` has many lifts; any of them works, since
//! the accumulated sum is reduced modulo `Phi_e` only once at the end.

use super::Cyclo;

/// Sparse `sum c_j x^j` with exponents reduced mod `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLift {
    terms: Vec<(u32, i64)>,
}

impl IntLift {
    pub fn from_terms(e: u32, terms: impl IntoIterator<Item = (u64, i64)>) -> IntLift {
        let mut dense: Vec<(u32, i64)> = terms
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(j, c)| ((j % e as u64) as u32, c))
            .collect();
        dense.sort_unstable();
        let mut terms: Vec<(u32, i64)> = Vec::with_capacity(dense.len());
        for (j, c) in dense {
            match terms.last_mut() {
                Some((k, d)) if *k == j => *d += c,
                _ => terms.push((j, c)),
            }
        }
        terms.retain(|&(_, c)| c != 0);
        IntLift { terms }
    }

    /// The power-basis lift of `z` inside `Q(zeta_e)`. `None` if the
    /// conductor does not divide `e` or a coefficient is not a small integer.
    pub fn from_cyclo(z: &Cyclo, e: u32) -> Option<IntLift> {
        let n = z.conductor();
        if e % n != 0 {
            return None;
        }
        let step = (e / n) as u64;
        let small = z.small_coeffs()?;
        let terms = small
            .iter()
            .enumerate()
            .map(|(i, &c)| Some((i as u64 * step, i64::try_from(c).ok()?)))
            .collect::<Option<Vec<_>>>()?;
        Some(IntLift::from_terms(e, terms))
    }

    pub fn terms(&self) -> &[(u32, i64)] {
        &self.terms
    }

    pub fn to_cyclo(&self, e: u32) -> Cyclo {
        let mut acc = Accumulator::new(e);
        acc.add(self, 1);
        acc.finish().expect("single lift cannot overflow i128")
    }
}

/// Dense `i128` accumulator over `Z[x]/(x^e - 1)`.
pub struct Accumulator {
    e: u32,
    dense: Vec<i128>,
    overflow: bool,
}

impl Accumulator {
    pub fn new(e: u32) -> Self {
        Accumulator {
            e,
            dense: vec![0; e as usize],
            overflow: false,
        }
    }

    pub fn add(&mut self, a: &IntLift, scale: i64) {
        for &(j, c) in &a.terms {
            self.bump(j as usize, c as i128 * scale as i128);
        }
    }

    /// Adds `scale * a * conj(b)`.
    pub fn add_product_conj(&mut self, a: &IntLift, b: &IntLift, scale: i64) {
        let e = self.e as usize;
        for &(i, c) in &a.terms {
            let cs = c as i128 * scale as i128;
            for &(j, d) in &b.terms {
                let k = (i as usize + e - j as usize) % e;
                match cs.checked_mul(d as i128) {
                    Some(v) => self.bump(k, v),
                    None => self.overflow = true,
                }
            }
        }
    }

    #[inline]
    fn bump(&mut self, k: usize, v: i128) {
        match self.dense[k].checked_add(v) {
            Some(s) => self.dense[k] = s,
            None => self.overflow = true,
        }
    }

    /// The accumulated value, or `None` after an overflow.
    pub fn finish(self) -> Option<Cyclo> {
        if self.overflow {
            return None;
        }
        Some(Cyclo::from_full_small(self.e, &self.dense))
    }
}
