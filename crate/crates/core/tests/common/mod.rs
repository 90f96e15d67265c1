#![allow(dead_code)]

use proptest::prelude::*;
use qtbraid::{BraidWord, Letter};

/// Random braid word on `n` strands with up to `max_len` letters.
pub fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n as i64, any::<bool>()), 0..=max_len).prop_map(move |v| {
        let signed: Vec<i64> = v.into_iter().map(|(i, s)| if s { i } else { -i }).collect();
        BraidWord::from_signed(n, &signed).unwrap()
    })
}

/// Appends letters that sort the permutation back to the identity, with
/// signs drawn from `signs` (cycled).
pub fn purify(w: &BraidWord, signs: &[bool]) -> BraidWord {
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    let mut images = w.perm().one_line();
    let mut k = 0;
    while let Some(i) = (0..n - 1).find(|&i| images[i] > images[i + 1]) {
        images.swap(i, i + 1);
        let positive = signs.is_empty() || signs[k % signs.len()];
        k += 1;
        letters.push(if positive {
            Letter::pos(i + 1)
        } else {
            Letter::neg(i + 1)
        });
    }
    BraidWord::new(n, letters).unwrap()
}

pub fn pure_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (word(n, max_len), prop::collection::vec(any::<bool>(), 1..8))
        .prop_map(|(w, signs)| purify(&w, &signs))
}

/// Artin's faithful action of `B_n` on the free group `F_n`, as the images
/// of the free generators. Used as an oracle independent of the normal form.
/// Free letters are nonzero `i32`: `±(k+1)` for `x_k^{±1}`.
pub fn artin_action(w: &BraidWord) -> Vec<Vec<i32>> {
    let n = w.strands();
    let mut images: Vec<Vec<i32>> = (1..=n as i32).map(|k| vec![k]).collect();
    for l in w.letters() {
        let i = l.index as i32;
        // φ_σ_i: x_i ↦ x_i x_{i+1} x_i^{-1}, x_{i+1} ↦ x_i
        // φ_σ_i^{-1}: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
        let gen_image = |k: i32| -> Vec<i32> {
            if l.sign > 0 {
                if k == i {
                    vec![i, i + 1, -i]
                } else if k == i + 1 {
                    vec![i]
                } else {
                    vec![k]
                }
            } else if k == i {
                vec![i + 1]
            } else if k == i + 1 {
                vec![-(i + 1), i, i + 1]
            } else {
                vec![k]
            }
        };
        // new φ = φ_old ∘ φ_letter
        let mut next = Vec::with_capacity(n);
        for k in 1..=n as i32 {
            let mut out: Vec<i32> = Vec::new();
            for x in gen_image(k) {
                let sub = &images[(x.unsigned_abs() - 1) as usize];
                if x > 0 {
                    for &y in sub {
                        push_reduced(&mut out, y);
                    }
                } else {
                    for &y in sub.iter().rev() {
                        push_reduced(&mut out, -y);
                    }
                }
            }
            next.push(out);
        }
        images = next;
    }
    images
}

fn push_reduced(out: &mut Vec<i32>, y: i32) {
    if out.last() == Some(&-y) {
        out.pop();
    } else {
        out.push(y);
    }
}
