mod common;

use proptest::prelude::*;
use qtbraid::presentations::{qb_relators, QbClassifier, RelatorFamily};
use qtbraid::quasitoric::QuasitoricForm;
use qtbraid::{Atom, GeneratorWord};

fn form(n: usize, max_m: usize) -> impl Strategy<Value = QuasitoricForm> {
    prop::collection::vec(prop::collection::vec(any::<bool>(), n - 1), 0..=max_m).prop_map(
        move |rows| {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(|b| if b { 1 } else { -1 }).collect())
                .collect();
            QuasitoricForm::new(n, rows).unwrap()
        },
    )
}

#[test]
fn relator_matrix_rows_are_classified_as_zero() {
    for n in 3..=9 {
        let c = QbClassifier::new(n).unwrap();
        for r in &qb_relators(n).unwrap().relators {
            assert!(
                c.class_of_word(&r.word).unwrap().is_zero(),
                "{n}: {}",
                r.word
            );
        }
    }
}

#[test]
fn generators_of_the_torsion_part() {
    // X = t_{1,n-1} δ_0^{-(n-2)} has order n (odd) or n/2 (even)
    for n in 3..=10 {
        let c = QbClassifier::new(n).unwrap();
        let x = GeneratorWord::from_factors([(Atom::T(1, n - 1), 1), (Atom::D0, -(n as i64 - 2))]);
        let order = if n % 2 == 1 { n } else { n / 2 };
        for k in 1..order {
            assert!(
                !c.class_of_word(&x.pow(k as i64)).unwrap().is_zero(),
                "n={n} k={k}"
            );
        }
        assert!(c.class_of_word(&x.pow(order as i64)).unwrap().is_zero());
    }
}

#[test]
fn family_counts_are_consistent() {
    for n in 3..=9 {
        let p = qb_relators(n).unwrap();
        assert_eq!(p.count(RelatorFamily::FullTwist), 1);
        assert_eq!(p.count(RelatorFamily::ConjugateCentral), 1);
        assert_eq!(p.count(RelatorFamily::ConjugateLantern), n - 2);
        assert_eq!(
            p.count(RelatorFamily::ConjugateShift),
            n * (n - 1) / 2 - (n - 1)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn class_is_additive(u in form(5, 6), v in form(5, 6)) {
        let c = QbClassifier::new(5).unwrap();
        let uv = u.to_word().concat(&v.to_word()).unwrap();
        let sum = c.structure().add(&c.class(&u.to_word()).unwrap(), &c.class(&v.to_word()).unwrap());
        prop_assert_eq!(c.class(&uv).unwrap(), sum);
    }

    #[test]
    fn class_of_inverse_cancels(u in form(6, 5)) {
        let c = QbClassifier::new(6).unwrap();
        let w = u.to_word();
        let sum = c.structure().add(&c.class(&w).unwrap(), &c.class(&w.inverse()).unwrap());
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn pure_classes_match_words(w in common::pure_word(5, 16)) {
        let c = QbClassifier::new(5).unwrap();
        let t = qtbraid::purebraid::t_decompose(&w).unwrap();
        prop_assert_eq!(c.class(&w).unwrap(), c.class_of_word(&t).unwrap());
    }
}
