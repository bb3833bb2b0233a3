use groupoid_automata::{
    auto_from_groupoids, closed_state_sets, run_auto, run_free, run_semi, semi_from_groupoids,
    series_compose, Automaton, FreeWord, SemiAutomaton,
};
use groupoid_core::{build_zn, enumerate_ideals, IdealSide, ZnSpec};
use proptest::prelude::*;

fn semi_strategy(max_states: usize, max_letters: usize) -> impl Strategy<Value = SemiAutomaton> {
    (1..=max_states, 1..=max_letters)
        .prop_flat_map(|(k, n)| {
            proptest::collection::vec(0..k, k * n).prop_map(move |delta| (k, n, delta))
        })
        .prop_map(|(k, n, delta)| SemiAutomaton::new(k, n, delta).unwrap())
}

fn auto_strategy(max_states: usize, max_letters: usize) -> impl Strategy<Value = Automaton> {
    (1..=max_states, 1..=max_letters, 1..=4usize)
        .prop_flat_map(|(k, n, m)| {
            (
                proptest::collection::vec(0..k, k * n),
                proptest::collection::vec(0..m, k * n),
            )
                .prop_map(move |(delta, lambda)| (k, n, m, delta, lambda))
        })
        .prop_map(|(k, n, m, delta, lambda)| Automaton::new(k, n, m, delta, lambda).unwrap())
}

fn word_for(letters: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..letters, 0..=max_len)
}

fn free_word_for(letters: usize) -> impl Strategy<Value = FreeWord> {
    let leaf = (0..letters).prop_map(FreeWord::letter);
    leaf.prop_recursive(5, 32, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| FreeWord::product(l, r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    /// Splitting a word anywhere and running the halves in sequence lands
    /// in the same state as one pass over the whole word.
    #[test]
    fn runs_concatenate((sa, words) in semi_strategy(5, 4).prop_flat_map(|sa| {
        let letters = sa.letters();
        (Just(sa), (word_for(letters, 12), word_for(letters, 12)))
    })) {
        let (v, w) = words;
        for z0 in 0..sa.states() {
            let joined: Vec<usize> = v.iter().chain(w.iter()).copied().collect();
            let mid = run_semi(&sa, z0, &v).unwrap();
            prop_assert_eq!(
                run_semi(&sa, z0, &joined).unwrap(),
                run_semi(&sa, mid, &w).unwrap()
            );
        }
    }

    /// A Mealy run emits exactly one output per input letter, and running
    /// a prefix emits the corresponding prefix of the output word.
    #[test]
    fn outputs_track_inputs((at, word) in auto_strategy(5, 4).prop_flat_map(|at| {
        let letters = at.letters();
        (Just(at), word_for(letters, 16))
    }), cut in 0..=16usize) {
        let (output, _) = run_auto(&at, 0, &word).unwrap();
        prop_assert_eq!(output.len(), word.len());

        let cut = cut.min(word.len());
        let (prefix_output, prefix_state) = run_auto(&at, 0, &word[..cut]).unwrap();
        prop_assert_eq!(&output[..cut], &prefix_output[..]);
        // The suffix continues from where the prefix left off.
        let (suffix_output, _) = run_auto(&at, prefix_state, &word[cut..]).unwrap();
        prop_assert_eq!(&output[cut..], &suffix_output[..]);
    }

    /// Bracketing is irrelevant: a parenthesized word acts exactly like
    /// its flattened leaf sequence.
    #[test]
    fn tree_shape_never_matters((sa, fw) in semi_strategy(5, 4).prop_flat_map(|sa| {
        let letters = sa.letters();
        (Just(sa), free_word_for(letters))
    })) {
        for z0 in 0..sa.states() {
            prop_assert_eq!(
                run_free(&sa, z0, &fw).unwrap(),
                run_semi(&sa, z0, &fw.leaves()).unwrap()
            );
        }
    }

    /// The same, pinned to the 4-state machine over a 6-letter alphabet
    /// built from Z_4(2,1) and Z_6(2,1).
    #[test]
    fn tree_shape_never_matters_on_the_four_state_machine(
        fw in free_word_for(6),
        z0 in 0..4usize,
    ) {
        let sa = semi_from_groupoids(
            &ZnSpec::new(4, 2, 1, false).unwrap(),
            &ZnSpec::new(6, 2, 1, false).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(
            run_free(&sa, z0, &fw).unwrap(),
            run_semi(&sa, z0, &fw.leaves()).unwrap()
        );
    }

    /// The series composite of two random compatible machines behaves,
    /// letter by letter, like feeding the first machine's output word to
    /// the second machine.
    #[test]
    fn series_equals_two_stage_simulation((k1, k2, word) in (auto_strategy(4, 3), auto_strategy(4, 3))
        .prop_flat_map(|(k1, k2)| {
            // Force the alphabet interface to match by rebuilding k2 over
            // k1's output alphabet as its input alphabet.
            let letters = k1.outputs();
            let states = k2.states();
            let outputs = k2.outputs();
            (
                Just(k1),
                (
                    proptest::collection::vec(0..states, states * letters),
                    proptest::collection::vec(0..outputs, states * letters),
                )
                    .prop_map(move |(delta, lambda)| {
                        Automaton::new(states, letters, outputs, delta, lambda).unwrap()
                    }),
            )
        })
        .prop_flat_map(|(k1, k2)| {
            let letters = k1.letters();
            (Just(k1), Just(k2), word_for(letters, 10))
        })) {
        let composed = series_compose(&k1, &k2).unwrap();
        for z1 in 0..k1.states() {
            for z2 in 0..k2.states() {
                let (outputs, state) =
                    run_auto(&composed, z1 * k2.states() + z2, &word).unwrap();
                // Manual two-stage pass.
                let (mid_word, end1) = run_auto(&k1, z1, &word).unwrap();
                let (expected_outputs, end2) = run_auto(&k2, z2, &mid_word).unwrap();
                prop_assert_eq!(outputs, expected_outputs);
                prop_assert_eq!(state, end1 * k2.states() + end2);
            }
        }
    }

    /// For a machine built from Z = Z_n(t,u) with an alphabet at least as
    /// large as n, the letters act as all right translations of the
    /// groupoid, so the closed state sets are exactly its proper nonempty
    /// right ideals.
    #[test]
    fn closed_state_sets_are_right_ideals(n in 3..=7usize, seed in 0..64usize) {
        let t = seed % n;
        let u = (seed / n) % n;
        prop_assume!(t != 0 || u != 0);
        let zspec = ZnSpec::new(n, t, u, false).unwrap();
        let aspec = ZnSpec::new(n + 2, 1, 1, false).unwrap();
        let sa = semi_from_groupoids(&zspec, &aspec).unwrap();
        let m = build_zn(&zspec);
        let mut ideals = enumerate_ideals(&m, IdealSide::Right).unwrap();
        ideals.sort();
        prop_assert_eq!(closed_state_sets(&sa), ideals);
    }
}

/// A concrete composite checked against the two-stage account by hand:
/// two parity machines in series double-report the running parity.
#[test]
fn series_parity_machines_agree_with_hand_simulation() {
    let parity =
        Automaton::from_rows(&[vec![0, 1], vec![1, 0]], &[vec![0, 1], vec![0, 1]], 2).unwrap();
    let composed = series_compose(&parity, &parity).unwrap();
    for z0 in 0..4 {
        for word in [vec![], vec![1], vec![1, 1], vec![0, 1, 0, 1, 1]] {
            let (z1, z2) = (z0 / 2, z0 % 2);
            let (mid, e1) = run_auto(&parity, z1, &word).unwrap();
            let (expect, e2) = run_auto(&parity, z2, &mid).unwrap();
            let (got, end) = run_auto(&composed, z0, &word).unwrap();
            assert_eq!(got, expect);
            assert_eq!(end, e1 * 2 + e2);
        }
    }
}

/// The five-letter Mealy machine built from Z_4(3,2) with Z_5(2,3) on both
/// alphabets, composed with itself, also matches the two-stage account.
#[test]
fn series_self_composition_of_the_4_5_5_machine() {
    let spec = |n, t, u| ZnSpec::new(n, t, u, false).unwrap();
    let at = auto_from_groupoids(&spec(4, 3, 2), &spec(5, 2, 3), &spec(5, 2, 3)).unwrap();
    let composed = series_compose(&at, &at).unwrap();
    assert_eq!(composed.states(), 16);
    let word = vec![1, 4, 0, 3, 2, 2];
    for z0 in 0..16 {
        let (z1, z2) = (z0 / 4, z0 % 4);
        let (mid, e1) = run_auto(&at, z1, &word).unwrap();
        let (expect, e2) = run_auto(&at, z2, &mid).unwrap();
        let (got, end) = run_auto(&composed, z0, &word).unwrap();
        assert_eq!(got, expect);
        assert_eq!(end, e1 * 4 + e2);
    }
}
