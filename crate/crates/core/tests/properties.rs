mod support;

use proptest::prelude::*;
use support::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_plus_nullity(m in small_matrix()) {
        rank_nullity(&m)?;
    }

    #[test]
    fn rref_is_idempotent(m in small_matrix()) {
        rref_idempotent(&m)?;
    }

    #[test]
    fn decomposition_is_deterministic((a, picks, m) in small_module()) {
        decomposition_deterministic(&universes()[a], &picks, &m)?;
    }

    #[test]
    fn duality_preserves_dimensions((a, _picks, m) in small_module()) {
        duality_involution(&universes()[a], &m)?;
    }
}
