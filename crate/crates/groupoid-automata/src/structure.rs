use groupoid_core::subset::{enumerate_closure_system, SubsetMask};

use crate::error::{Error, Result};
use crate::machine::{Automaton, SemiAutomaton};

/// Brute-force division search is capped at this many states per machine.
pub const DIVISION_STATE_BOUND: usize = 6;

/// Smallest state set containing `seed` that no input letter can leave.
fn transition_closure(sa: &SemiAutomaton, seed: &SubsetMask) -> SubsetMask {
    let mut closed = seed.clone();
    let mut queue: Vec<usize> = closed.iter().collect();
    while let Some(z) = queue.pop() {
        for a in 0..sa.letters() {
            let w = sa.step(z, a);
            if !closed.contains(w) {
                closed.insert(w);
                queue.push(w);
            }
        }
    }
    closed
}

fn closed_family(sa: &SemiAutomaton) -> Vec<SubsetMask> {
    enumerate_closure_system(sa.states(), |s| transition_closure(sa, s))
}

/// All proper nonempty state subsets that every input letter maps into
/// themselves, sorted by their element lists.
pub fn closed_state_sets(sa: &SemiAutomaton) -> Vec<SubsetMask> {
    let mut out: Vec<SubsetMask> = closed_family(sa)
        .into_iter()
        .filter(|s| !s.is_empty() && !s.is_full())
        .collect();
    out.sort();
    out
}

/// The closed state sets that properly contain another nonempty closed
/// subset — restrictions which are themselves reducible.
pub fn s_sub_semi_automata(sa: &SemiAutomaton) -> Vec<SubsetMask> {
    let closed = closed_state_sets(sa);
    closed
        .iter()
        .filter(|s| closed.iter().any(|t| t != *s && t.is_subset_of(s)))
        .cloned()
        .collect()
}

/// Feeds the first machine's outputs to the second as inputs. States are
/// pairs encoded `z1 * k2 + z2`; the result reads the first machine's
/// input alphabet and writes the second machine's output alphabet.
pub fn series_compose(k1: &Automaton, k2: &Automaton) -> Result<Automaton> {
    if k1.outputs() != k2.letters() {
        return Err(Error::AlphabetMismatch {
            output: k1.outputs(),
            input: k2.letters(),
        });
    }
    let (s1, s2) = (k1.states(), k2.states());
    let letters = k1.letters();
    let mut delta = Vec::with_capacity(s1 * s2 * letters);
    let mut lambda = Vec::with_capacity(s1 * s2 * letters);
    for z1 in 0..s1 {
        for z2 in 0..s2 {
            for a in 0..letters {
                let b1 = k1.out(z1, a);
                delta.push(k1.semi().step(z1, a) * s2 + k2.semi().step(z2, b1));
                lambda.push(k2.out(z2, b1));
            }
        }
    }
    Automaton::new(s1 * s2, letters, k2.outputs(), delta, lambda)
}

/// Runs both machines side by side on paired letters. States, letters,
/// and outputs are pairs, each encoded with the second component minor:
/// `z1 * k2 + z2`, `a1 * n2 + a2`, `b1 * m2 + b2`.
pub fn parallel_compose(k1: &Automaton, k2: &Automaton) -> Automaton {
    let (s1, s2) = (k1.states(), k2.states());
    let (n1, n2) = (k1.letters(), k2.letters());
    let m2 = k2.outputs();
    let mut delta = Vec::with_capacity(s1 * s2 * n1 * n2);
    let mut lambda = Vec::with_capacity(s1 * s2 * n1 * n2);
    for z1 in 0..s1 {
        for z2 in 0..s2 {
            for a1 in 0..n1 {
                for a2 in 0..n2 {
                    delta.push(k1.semi().step(z1, a1) * s2 + k2.semi().step(z2, a2));
                    lambda.push(k1.out(z1, a1) * m2 + k2.out(z2, a2));
                }
            }
        }
    }
    Automaton::new(s1 * s2, n1 * n2, k1.outputs() * m2, delta, lambda)
        .expect("componentwise tables of valid machines stay in range")
}

/// Whether `k1` is a letter-preserving homomorphic image of some
/// sub-automaton of `k2` (a nonempty closed state subset carrying both
/// full alphabets). Brute force over all state surjections, so both
/// machines are capped at [`DIVISION_STATE_BOUND`] states.
pub fn automaton_divides(k1: &Automaton, k2: &Automaton) -> Result<bool> {
    for k in [k1, k2] {
        if k.states() > DIVISION_STATE_BOUND {
            return Err(Error::OrderTooLarge {
                states: k.states(),
                bound: DIVISION_STATE_BOUND,
                operation: "automaton division search",
            });
        }
    }
    if k1.letters() != k2.letters() || k1.outputs() != k2.outputs() {
        return Ok(false);
    }
    for sub in closed_family(k2.semi()) {
        if sub.is_empty() || sub.len() < k1.states() {
            continue;
        }
        let elems = sub.to_vec();
        let mut pos_of = vec![usize::MAX; k2.states()];
        for (p, &z) in elems.iter().enumerate() {
            pos_of[z] = p;
        }
        let mut phi = Vec::with_capacity(elems.len());
        let mut image_count = vec![0usize; k1.states()];
        if surjection_search(k1, k2, &elems, &pos_of, &mut phi, &mut image_count, 0) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Machines that divide each other.
pub fn automaton_equivalent(k1: &Automaton, k2: &Automaton) -> Result<bool> {
    Ok(automaton_divides(k1, k2)? && automaton_divides(k2, k1)?)
}

/// Depth-first extension of a partial map `phi : sub → states(k1)`;
/// `image_count` tracks how often each target state is hit so surjectivity
/// can prune early.
fn surjection_search(
    k1: &Automaton,
    k2: &Automaton,
    sub: &[usize],
    pos_of: &[usize],
    phi: &mut Vec<usize>,
    image_count: &mut [usize],
    distinct: usize,
) -> bool {
    let p = phi.len();
    if p == sub.len() {
        return distinct == k1.states();
    }
    if k1.states() - distinct > sub.len() - p {
        return false;
    }
    for v in 0..k1.states() {
        phi.push(v);
        if consistent_at(k1, k2, sub, pos_of, phi) {
            let fresh = image_count[v] == 0;
            image_count[v] += 1;
            if surjection_search(k1, k2, sub, pos_of, phi, image_count, distinct + fresh as usize)
            {
                return true;
            }
            image_count[v] -= 1;
        }
        phi.pop();
    }
    false
}

/// Checks every homomorphism constraint that first becomes decidable once
/// position `phi.len() - 1` is assigned.
fn consistent_at(
    k1: &Automaton,
    k2: &Automaton,
    sub: &[usize],
    pos_of: &[usize],
    phi: &[usize],
) -> bool {
    let p = phi.len() - 1;
    for a in 0..k2.letters() {
        if k2.out(sub[p], a) != k1.out(phi[p], a) {
            return false;
        }
        for i in 0..=p {
            let j = pos_of[k2.semi().step(sub[i], a)];
            if j > p || (i < p && j < p) {
                continue;
            }
            if k1.semi().step(phi[i], a) != phi[j] {
                return false;
            }
        }
    }
    true
}
