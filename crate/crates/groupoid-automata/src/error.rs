use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of machine construction, simulation, and composition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("state {state} out of range for a machine with {states} states")]
    StateOutOfRange { state: usize, states: usize },

    #[error("letter {letter} out of range for an input alphabet of size {letters}")]
    LetterOutOfRange { letter: usize, letters: usize },

    #[error("output alphabet of the first machine has {output} letters, input alphabet of the second has {input}")]
    AlphabetMismatch { output: usize, input: usize },

    #[error("invalid machine description: {0}")]
    InvalidSpec(String),

    #[error("{operation} is limited to {bound} states, got {states}")]
    OrderTooLarge {
        states: usize,
        bound: usize,
        operation: &'static str,
    },

    #[error("could not parse machine text: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable tag, e.g. for CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::StateOutOfRange { .. } | Error::LetterOutOfRange { .. } => {
                "INDEX_OUT_OF_RANGE"
            }
            Error::AlphabetMismatch { .. } => "ALPHABET_MISMATCH",
            Error::InvalidSpec(_) => "INVALID_SPEC",
            Error::OrderTooLarge { .. } => "ORDER_TOO_LARGE",
            Error::Parse(_) => "PARSE",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_and_messages_line_up() {
        let e = Error::StateOutOfRange { state: 7, states: 4 };
        assert_eq!(e.code(), "INDEX_OUT_OF_RANGE");
        assert_eq!(
            e.to_string(),
            "state 7 out of range for a machine with 4 states"
        );

        let e = Error::AlphabetMismatch { output: 5, input: 3 };
        assert_eq!(e.code(), "ALPHABET_MISMATCH");
        assert!(e.to_string().contains("5 letters"));

        assert_eq!(Error::Parse("bad header".into()).code(), "PARSE");
        assert_eq!(
            Error::OrderTooLarge {
                states: 9,
                bound: 6,
                operation: "division search"
            }
            .code(),
            "ORDER_TOO_LARGE"
        );
    }
}
