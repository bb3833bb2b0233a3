use groupoid_core::ZnSpec;

use crate::error::{Error, Result};
use crate::machine::{Automaton, SemiAutomaton};

/// Builds the state machine whose transition table is the state groupoid's
/// multiplication: states are the residues of `zspec`, letters are the
/// residues of `aspec`, and `δ(z, a) = t·z + u·(a mod n) (mod n)` with
/// `(n, t, u)` taken from `zspec`. Letters from a foreign-sized alphabet
/// are reduced into the state modulus before multiplying.
pub fn semi_from_groupoids(zspec: &ZnSpec, aspec: &ZnSpec) -> Result<SemiAutomaton> {
    reject_adjoined(zspec, "state")?;
    reject_adjoined(aspec, "input")?;
    let states = zspec.n;
    let letters = aspec.n;
    let mut delta = Vec::with_capacity(states * letters);
    for z in 0..states {
        for a in 0..letters {
            delta.push((zspec.t * z + zspec.u * (a % states)) % states);
        }
    }
    SemiAutomaton::new(states, letters, delta)
}

/// Extends [`semi_from_groupoids`] with an output table computed in the
/// output groupoid: `λ(z, a) = t·(z mod n) + u·(a mod n) (mod n)` with
/// `(n, t, u)` taken from `bspec`, so both arguments are reduced into the
/// output modulus first.
pub fn auto_from_groupoids(zspec: &ZnSpec, aspec: &ZnSpec, bspec: &ZnSpec) -> Result<Automaton> {
    let semi = semi_from_groupoids(zspec, aspec)?;
    reject_adjoined(bspec, "output")?;
    let states = semi.states();
    let letters = semi.letters();
    let outputs = bspec.n;
    let mut lambda = Vec::with_capacity(states * letters);
    for z in 0..states {
        for a in 0..letters {
            lambda.push((bspec.t * (z % outputs) + bspec.u * (a % outputs)) % outputs);
        }
    }
    Automaton::new(states, letters, outputs, semi.delta().to_vec(), lambda)
}

fn reject_adjoined(spec: &ZnSpec, role: &str) -> Result<()> {
    if spec.adjoin_identity {
        return Err(Error::InvalidSpec(format!(
            "the {role} groupoid must be a plain Z_n(t,u); an adjoined identity has no residue to act through"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, t: usize, u: usize) -> ZnSpec {
        ZnSpec::new(n, t, u, false).unwrap()
    }

    #[test]
    fn four_state_machine_over_a_six_letter_alphabet() {
        let sa = semi_from_groupoids(&spec(4, 2, 1), &spec(6, 2, 1)).unwrap();
        assert_eq!(sa.states(), 4);
        assert_eq!(sa.letters(), 6);
        // Letters 0–3 multiply as residues; letters 4 and 5 wrap to 0 and 1.
        assert_eq!(&sa.delta_row(0)[..4], &[0, 1, 2, 3]);
        assert_eq!(&sa.delta_row(1)[..4], &[2, 3, 0, 1]);
        assert_eq!(&sa.delta_row(2)[..4], &[0, 1, 2, 3]);
        assert_eq!(&sa.delta_row(3)[..4], &[2, 3, 0, 1]);
        assert_eq!(&sa.delta_row(1)[4..], &[2, 3]);
    }

    #[test]
    fn mealy_machine_tables_for_the_4_5_5_example() {
        let at = auto_from_groupoids(&spec(4, 3, 2), &spec(5, 2, 3), &spec(5, 2, 3)).unwrap();
        assert_eq!((at.states(), at.letters(), at.outputs()), (4, 5, 5));
        assert_eq!(at.semi().delta_row(0), &[0, 2, 0, 2, 0]);
        assert_eq!(at.semi().delta_row(1), &[3, 1, 3, 1, 3]);
        assert_eq!(at.semi().delta_row(2), &[2, 0, 2, 0, 2]);
        assert_eq!(at.semi().delta_row(3), &[1, 3, 1, 3, 1]);
        assert_eq!(at.lambda_row(0), &[0, 3, 1, 4, 2]);
        assert_eq!(at.lambda_row(1), &[2, 0, 3, 1, 4]);
        assert_eq!(at.lambda_row(2), &[4, 2, 0, 3, 1]);
        assert_eq!(at.lambda_row(3), &[1, 4, 2, 0, 3]);
    }

    #[test]
    fn three_state_machine_over_a_four_letter_alphabet() {
        let sa = semi_from_groupoids(&spec(3, 1, 2), &spec(4, 2, 2)).unwrap();
        assert_eq!(sa.delta_row(0), &[0, 2, 1, 0]);
    }

    #[test]
    fn adjoined_identities_are_rejected_in_every_position() {
        let plain = spec(4, 3, 2);
        let adjoined = ZnSpec::new(4, 3, 2, true).unwrap();
        assert!(semi_from_groupoids(&adjoined, &plain).is_err());
        assert!(semi_from_groupoids(&plain, &adjoined).is_err());
        let err = auto_from_groupoids(&plain, &plain, &adjoined).unwrap_err();
        assert_eq!(err.code(), "INVALID_SPEC");
        assert!(err.to_string().contains("output groupoid"));
    }

    #[test]
    fn both_run_arguments_reduce_into_the_output_modulus() {
        // States outnumber outputs, so λ must fold the state first.
        let at = auto_from_groupoids(&spec(5, 3, 2), &spec(3, 1, 2), &spec(3, 1, 2)).unwrap();
        for z in 0..5 {
            for a in 0..3 {
                assert_eq!(at.output(z, a).unwrap(), (z % 3 + 2 * a) % 3);
            }
        }
    }
}
