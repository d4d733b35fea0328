use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid Lehmer code: {0}")]
    InvalidLehmerCode(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("{what}: size {n} exceeds the cap of {cap}")]
    SizeCap { what: &'static str, n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("illegal reflection: {0}")]
    IllegalReflection(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::SizeCap { what, n, cap })
    } else {
        Ok(())
    }
}
