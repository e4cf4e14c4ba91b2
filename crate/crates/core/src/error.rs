use thiserror::Error;

/// Errors raised by geometry construction, shape families and the optimizer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),

    #[error("negative discriminant: perimeter {perimeter} is below the polygonal isoperimetric minimum for {sides} sides")]
    NegativeDiscriminant { perimeter: f64, sides: usize },

    #[error("expected an even number of sides, got {0}")]
    OddN(usize),

    #[error("expected an odd number of sides (>= 5), got {0}")]
    EvenN(usize),

    #[error("delta {delta} is below the regular-polygon diameter {min}")]
    DeltaTooSmall { delta: f64, min: f64 },

    #[error("boundary resolution {0} is below the minimum of 16 points")]
    ResolutionTooLow(usize),

    #[error("displacement {eps} is outside the admissible range (|eps| < {limit})")]
    EpsTooLarge { eps: f64, limit: f64 },

    #[error("target perimeter {p0} is below the minimum {min} for {sides}-gons of unit area")]
    InfeasibleTarget { p0: f64, min: f64, sides: usize },

    #[error("Cheeger set has no contact with the boundary")]
    NoContact,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid family descriptor `{0}`")]
    BadDescriptor(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
