use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::Cyclo;
use crate::error::CycloError;

/// The automorphism `zeta_n -> zeta_n^r` of `Q(zeta_n)`, with `r` a unit mod `n`.
///
/// For `n = 1` the only element is the identity, stored as `r = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GaloisElement {
    modulus: u32,
    r: u32,
}

impl GaloisElement {
    pub fn new(modulus: u32, r: i64) -> Result<Self, CycloError> {
        if modulus == 0 {
            return Err(CycloError::Malformed("modulus must be positive".into()));
        }
        if modulus == 1 {
            return Ok(GaloisElement { modulus, r: 1 });
        }
        let rr = r.rem_euclid(modulus as i64) as u32;
        if rr.gcd(&modulus) != 1 {
            return Err(CycloError::NotAUnit { r, modulus });
        }
        Ok(GaloisElement { modulus, r: rr })
    }

    pub fn identity(modulus: u32) -> Self {
        GaloisElement::new(modulus, 1).expect("1 is a unit")
    }

    /// All `phi(n)` elements in increasing order of `r`.
    pub fn units(modulus: u32) -> Vec<GaloisElement> {
        if modulus == 1 {
            return vec![GaloisElement { modulus, r: 1 }];
        }
        (1..modulus)
            .filter(|r| r.gcd(&modulus) == 1)
            .map(|r| GaloisElement { modulus, r })
            .collect()
    }

    /// A generating set of the unit group, chosen greedily in increasing
    /// order of `r`; empty for the trivial group.
    pub fn unit_generators(modulus: u32) -> Vec<GaloisElement> {
        let m = modulus as u64;
        let mut reached = vec![false; modulus as usize];
        reached[1 % modulus as usize] = true;
        let mut members = vec![1 % m];
        let mut gens = Vec::new();
        for u in GaloisElement::units(modulus) {
            if reached[u.r as usize % modulus as usize] {
                continue;
            }
            gens.push(u);
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for g in &gens {
                    let y = x * g.r as u64 % m;
                    if !reached[y as usize] {
                        reached[y as usize] = true;
                        members.push(y);
                    }
                }
            }
        }
        gens
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn is_identity(&self) -> bool {
        self.r == 1
    }

    /// `self` after `other`, i.e. `zeta -> zeta^(r s)`.
    pub fn compose(&self, other: &GaloisElement) -> GaloisElement {
        assert_eq!(self.modulus, other.modulus, "moduli differ");
        let r = (self.r as u64 * other.r as u64) % self.modulus as u64;
        GaloisElement::new(self.modulus, r as i64).unwrap()
    }

    pub fn inverse(&self) -> GaloisElement {
        GaloisElement::units(self.modulus)
            .into_iter()
            .find(|s| self.compose(s).is_identity())
            .expect("units form a group")
    }

    /// Multiplicative order of `r` modulo `n`.
    pub fn order(&self) -> u32 {
        let mut k = 1;
        let mut x = *self;
        while !x.is_identity() {
            x = x.compose(self);
            k += 1;
        }
        k
    }

    pub fn apply(&self, z: &Cyclo) -> Result<Cyclo, CycloError> {
        let c = z.conductor();
        if self.modulus % c != 0 {
            return Err(CycloError::ConductorMismatch {
                conductor: c,
                modulus: self.modulus,
            });
        }
        z.galois(self.r as i64)
    }
}

impl fmt::Display for GaloisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.r, self.modulus)
    }
}
