use thiserror::Error;

/// Failures that map to a dedicated process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{count} ranking(s) did not converge")]
    NonConvergence { count: usize },
    #[error("{failed} of {total} checks failed")]
    ChecksFailed { failed: usize, total: usize },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_NONCONVERGENCE: i32 = 3;

/// Exit code for an error returned by a subcommand.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<CliError>() {
            return match e {
                CliError::Usage(_) => EXIT_USAGE,
                CliError::NonConvergence { .. } => EXIT_NONCONVERGENCE,
                CliError::ChecksFailed { .. } => EXIT_DATA,
            };
        }
        if let Some(fairank_core::Error::InvalidParameter { .. }) = cause.downcast_ref::<fairank_core::Error>() {
            return EXIT_USAGE;
        }
    }
    EXIT_DATA
}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    CliError::Usage(msg.into()).into()
}
