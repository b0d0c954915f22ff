use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::Cyclo;
use crate::error::CycloError;

/// Wire form `{"n": int, "coeffs": [["num", "den"], ...]}` with `phi(n)`
/// coefficient pairs; integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloJson {
    pub n: u32,
    pub coeffs: Vec<[String; 2]>,
}

impl From<&Cyclo> for CycloJson {
    fn from(z: &Cyclo) -> Self {
        CycloJson {
            n: z.conductor(),
            coeffs: z
                .coeffs()
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
    }
}

impl TryFrom<&CycloJson> for Cyclo {
    type Error = CycloError;

    fn try_from(j: &CycloJson) -> Result<Cyclo, CycloError> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|[num, den]| {
                let num: BigInt = num
                    .parse()
                    .map_err(|_| CycloError::Malformed(format!("bad numerator {num:?}")))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|_| CycloError::Malformed(format!("bad denominator {den:?}")))?;
                if den.is_zero() {
                    return Err(CycloError::Malformed("zero denominator".into()));
                }
                Ok(BigRational::new(num, den))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Cyclo::from_power_basis(j.n, coeffs)
    }
}

impl Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Cyclo, D::Error> {
        let j = CycloJson::deserialize(d)?;
        Cyclo::try_from(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let z = Cyclo::zeta(12, 7) + Cyclo::from_rational(BigRational::new(3.into(), 4.into()));
        let s = serde_json::to_string(&z).unwrap();
        let back: Cyclo = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z);
        assert_eq!(serde_json::to_string(&Cyclo::from_integer(-2)).unwrap(), r#"{"n":1,"coeffs":[["-2","1"]]}"#);
    }

    #[test]
    fn import_canonicalizes_and_validates() {
        // -zeta_3^2 written in Q(zeta_6) as zeta_6.
        let j: Cyclo = serde_json::from_str(r#"{"n":6,"coeffs":[["0","1"],["1","1"]]}"#).unwrap();
        assert_eq!(j, Cyclo::zeta(6, 1));
        assert_eq!(j.conductor(), 3);
        assert!(serde_json::from_str::<Cyclo>(r#"{"n":5,"coeffs":[["1","1"]]}"#).is_err());
        assert!(serde_json::from_str::<Cyclo>(r#"{"n":1,"coeffs":[["1","0"]]}"#).is_err());
        assert!(serde_json::from_str::<Cyclo>(r#"{"n":1,"coeffs":[["x","1"]]}"#).is_err());
    }
}
