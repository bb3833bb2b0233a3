use thiserror::Error;

/// Errors raised by the census, verification, and fixture layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("modulus {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Core(#[from] groupoid_core::Error),

    #[error(transparent)]
    Automata(#[from] groupoid_automata::Error),
}

impl Error {
    /// Stable machine-readable code for each error class.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownTheorem(_) => "UNKNOWN_THEOREM",
            Error::UnknownFixture(_) => "UNKNOWN_FIXTURE",
            Error::BoundExceeded { .. } => "BOUND_EXCEEDED",
            Error::Parse(_) => "PARSE_ERROR",
            Error::Core(e) => e.code(),
            Error::Automata(e) => e.code(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_stable() {
        assert_eq!(Error::UnknownTheorem("9.9.9".into()).code(), "UNKNOWN_THEOREM");
        assert_eq!(Error::UnknownFixture("ex_0_0_0".into()).code(), "UNKNOWN_FIXTURE");
        assert_eq!(Error::BoundExceeded { n: 40, bound: 16 }.code(), "BOUND_EXCEEDED");
        assert_eq!(Error::Parse("bad".into()).code(), "PARSE_ERROR");
    }

    #[test]
    fn core_errors_pass_through() {
        let err: Error = groupoid_core::ZnSpec::new(1, 0, 0, false).unwrap_err().into();
        assert_eq!(err.code(), "INVALID_SPEC");
    }
}
