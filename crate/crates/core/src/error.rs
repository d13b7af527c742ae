use thiserror::Error;

/// Errors shared by every module of the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),
    /// A resource cap would be exceeded; raise it explicitly to proceed.
    #[error("cap exceeded: {what} is {value}, cap is {limit}")]
    Cap {
        what: &'static str,
        value: usize,
        limit: usize,
    },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 2,
            Error::Cap { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with [`Error::Cap`] when `value > limit`.
pub(crate) fn check_cap(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::Cap { what, value, limit })
    } else {
        Ok(())
    }
}
