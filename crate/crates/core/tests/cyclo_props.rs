mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn ring_homomorphism_laws(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
        ring_laws(&a, &b, &c)?;
    }

    #[test]
    fn canonical_form_round_trips(a in arb_cyclo()) {
        round_trips(&a)?;
    }

    #[test]
    fn galois_composition(s in arb_unit(), t in arb_unit(), a in arb_cyclo(), b in arb_cyclo()) {
        galois_laws(s, t, &a, &b)?;
    }
}
