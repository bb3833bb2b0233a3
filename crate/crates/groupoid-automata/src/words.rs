use std::fmt;

use crate::error::Result;
use crate::machine::{Automaton, SemiAutomaton};

/// A finite sequence of letter indices; the empty word leaves every state
/// fixed.
pub type InputWord = Vec<usize>;

/// A fully parenthesized word over the input alphabet: either a single
/// letter or a product of two smaller words. Unlike [`InputWord`], a
/// `FreeWord` is never empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreeWord {
    Letter(usize),
    Product(Box<FreeWord>, Box<FreeWord>),
}

impl FreeWord {
    pub fn letter(a: usize) -> Self {
        FreeWord::Letter(a)
    }

    pub fn product(left: FreeWord, right: FreeWord) -> Self {
        FreeWord::Product(Box::new(left), Box::new(right))
    }

    /// The letters in reading order, with all brackets forgotten.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            FreeWord::Letter(a) => out.push(*a),
            FreeWord::Product(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            FreeWord::Letter(_) => 1,
            FreeWord::Product(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeWord::Letter(a) => write!(f, "{a}"),
            FreeWord::Product(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// Runs the machine from `z0` over the word, one letter at a time; the
/// empty word returns `z0` unchanged.
pub fn run_semi(sa: &SemiAutomaton, z0: usize, word: &[usize]) -> Result<usize> {
    sa.check_state(z0)?;
    let mut state = z0;
    for &a in word {
        sa.check_letter(a)?;
        state = sa.step(state, a);
    }
    Ok(state)
}

/// Runs the Mealy machine from `z0`, emitting one output per input letter
/// (computed from the state *before* each step); returns the output word
/// and the final state.
pub fn run_auto(at: &Automaton, z0: usize, word: &[usize]) -> Result<(Vec<usize>, usize)> {
    at.semi().check_state(z0)?;
    let mut state = z0;
    let mut output = Vec::with_capacity(word.len());
    for &a in word {
        at.semi().check_letter(a)?;
        output.push(at.out(state, a));
        state = at.semi().step(state, a);
    }
    Ok((output, state))
}

/// Evaluates a parenthesized word: a letter acts as a single step, and a
/// product acts by its left factor first, then its right factor from the
/// resulting state. Consequently the bracketing never changes the result —
/// `run_free` always agrees with [`run_semi`] on the leaf sequence.
pub fn run_free(sa: &SemiAutomaton, z0: usize, word: &FreeWord) -> Result<usize> {
    sa.check_state(z0)?;
    match word {
        FreeWord::Letter(a) => {
            sa.check_letter(*a)?;
            Ok(sa.step(z0, *a))
        }
        FreeWord::Product(l, r) => {
            let mid = run_free(sa, z0, l)?;
            run_free(sa, mid, r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn three_state() -> SemiAutomaton {
        SemiAutomaton::from_rows(&[vec![0, 1], vec![0, 1], vec![1, 1]]).unwrap()
    }

    fn parity() -> Automaton {
        Automaton::from_rows(&[vec![0, 1], vec![1, 0]], &[vec![0, 1], vec![0, 1]], 2).unwrap()
    }

    #[test]
    fn empty_word_is_the_identity_input() {
        let sa = three_state();
        for z in 0..3 {
            assert_eq!(run_semi(&sa, z, &[]).unwrap(), z);
        }
        let (output, state) = run_auto(&parity(), 1, &[]).unwrap();
        assert!(output.is_empty());
        assert_eq!(state, 1);
    }

    #[test]
    fn stepwise_runs_match_hand_computation() {
        let sa = three_state();
        assert_eq!(run_semi(&sa, 0, &[0, 1]).unwrap(), 1);
        assert_eq!(run_semi(&sa, 2, &[0, 0, 1]).unwrap(), 1);

        // The parity machine returns to its start state on an even number
        // of 1s and reports each running parity bit along the way.
        let (output, state) = run_auto(&parity(), 0, &[1, 1]).unwrap();
        assert_eq!(output, vec![1, 1]);
        assert_eq!(state, 0);
        let (output, state) = run_auto(&parity(), 0, &[1, 0, 1, 0]).unwrap();
        assert_eq!(output, vec![1, 0, 1, 0]);
        assert_eq!(state, 0);
    }

    #[test]
    fn runs_reject_out_of_range_indices() {
        let sa = three_state();
        assert_eq!(
            run_semi(&sa, 5, &[]).unwrap_err(),
            Error::StateOutOfRange { state: 5, states: 3 }
        );
        assert_eq!(
            run_semi(&sa, 0, &[0, 7]).unwrap_err(),
            Error::LetterOutOfRange { letter: 7, letters: 2 }
        );
        assert!(run_auto(&parity(), 0, &[2]).is_err());
        assert!(run_free(&sa, 0, &FreeWord::letter(9)).is_err());
    }

    #[test]
    fn free_words_flatten_to_their_leaves() {
        let w = FreeWord::product(
            FreeWord::product(FreeWord::letter(0), FreeWord::letter(1)),
            FreeWord::letter(0),
        );
        assert_eq!(w.leaves(), vec![0, 1, 0]);
        assert_eq!(w.leaf_count(), 3);
        assert_eq!(w.to_string(), "((0 1) 0)");

        let sa = three_state();
        let left = FreeWord::product(
            FreeWord::letter(0),
            FreeWord::product(FreeWord::letter(1), FreeWord::letter(0)),
        );
        assert_eq!(run_free(&sa, 2, &w).unwrap(), run_free(&sa, 2, &left).unwrap());
        assert_eq!(
            run_free(&sa, 2, &w).unwrap(),
            run_semi(&sa, 2, &w.leaves()).unwrap()
        );
    }
}
