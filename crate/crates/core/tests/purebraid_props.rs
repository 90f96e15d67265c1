mod common;

use common::{pure_word, word};
use proptest::prelude::*;
use qtbraid::purebraid::{comb, linking, t_decompose};
use qtbraid::{equal, Atom};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn comb_round_trip(p in (2usize..6).prop_flat_map(|n| pure_word(n, 10))) {
        let c = comb(&p).unwrap();
        prop_assert!(c.atoms().all(|a| matches!(a, Atom::A(..))));
        prop_assert!(equal(&c.expand(p.strands()).unwrap(), &p).unwrap());
    }

    #[test]
    fn t_decompose_round_trip(p in (2usize..6).prop_flat_map(|n| pure_word(n, 10))) {
        let t = t_decompose(&p).unwrap();
        prop_assert!(t.atoms().all(|a| matches!(a, Atom::T(..))));
        prop_assert!(equal(&t.expand(p.strands()).unwrap(), &p).unwrap());
    }

    #[test]
    fn linking_is_additive(
        (p, q) in (2usize..7).prop_flat_map(|n| (pure_word(n, 14), pure_word(n, 14)))
    ) {
        let pq = p.concat(&q).unwrap();
        prop_assert_eq!(linking(&pq).unwrap(), linking(&p).unwrap().plus(&linking(&q).unwrap()));
        prop_assert!(linking(&p.concat(&p.inverse()).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn linking_invariant_under_padding(
        (p, x) in (2usize..6).prop_flat_map(|n| (pure_word(n, 10), word(n, 6)))
    ) {
        let padded = x.concat(&x.inverse()).unwrap().concat(&p).unwrap();
        prop_assert!(equal(&padded, &p).unwrap());
        prop_assert_eq!(linking(&padded).unwrap(), linking(&p).unwrap());
    }
}
