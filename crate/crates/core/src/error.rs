use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument was outside the mathematical domain of the operation
    /// (negative where nonnegative is required, unsorted input, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation was requested outside the representable range of a
    /// function; carries the offending value.
    #[error("range error: {what} at {value:e}")]
    Range { value: f64, what: String },

    /// An iterative scheme did not converge within its iteration cap.
    #[error("no convergence: {what} (achieved {achieved:e}, wanted {wanted:e})")]
    NoConvergence {
        what: String,
        achieved: f64,
        wanted: f64,
    },

    /// A slope estimate failed to stabilise across decades.
    #[error("index diverged: {0}")]
    IndexDiverged(String),

    /// A dilation evaluation kept growing at the grid boundary.
    #[error("dilation function infinite: {0}")]
    DilationInfinite(String),

    /// Matuszewska-Orlicz indices violate the nontriviality assumption.
    #[error("indices out of range: {0}")]
    IndicesOutOfRange(String),

    /// The constructed interpolation function failed its index assertion.
    #[error("phi-theta degenerate: {0}")]
    PhiThetaDegenerate(String),

    /// The tau points of an assignment do not admit a covering bump system.
    #[error("tau points do not localise the circle: {0}")]
    CoverFailure(String),

    /// Malformed JSON or a value that does not satisfy a schema.
    #[error("schema error: {0}")]
    Schema(String),

    /// Expression parse failure (piecewise symbol definitions).
    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn range(value: f64, what: impl Into<String>) -> Self {
        Error::Range {
            value,
            what: what.into(),
        }
    }

    pub fn schema(msg: impl Into<String>) -> Self {
        Error::Schema(msg.into())
    }
}
