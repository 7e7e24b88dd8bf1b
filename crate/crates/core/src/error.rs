use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("resource guard exceeded: {0}")]
    ResourceGuard(String),
    #[error("stripping failed: a diagram in e_k·h·e_k lacks the [k,k-bar] edges")]
    StrippingFailed,
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("non-faithful parameter regime: {0}")]
    NonFaithful(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
