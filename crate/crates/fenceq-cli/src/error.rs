use fenceq::arcposet::ArcPosetError;
use fenceq::cluster::ClusterError;
use fenceq::poset::PosetError;
use fenceq::scan::ScanError;
use fenceq::surface::SurfaceError;
use thiserror::Error;

/// Command failure, classified by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unparseable or invalid input (exit 2).
    #[error("input error: {0}")]
    Input(String),
    /// The requested object cannot be constructed (exit 3).
    #[error("construction error: {0}")]
    Construction(String),
    /// An internal invariant failed (exit 4).
    #[error("invariant breach: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Construction(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }
}

impl From<PosetError> for CliError {
    fn from(e: PosetError) -> Self {
        match e {
            PosetError::InvalidComposition(_)
            | PosetError::UnknownElement(_)
            | PosetError::UnknownCover(_, _) => CliError::Input(e.to_string()),
            _ => CliError::Construction(e.to_string()),
        }
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ClusterError> for CliError {
    fn from(e: ClusterError) -> Self {
        match e {
            ClusterError::Poly(_) | ClusterError::IndexOutOfRange { .. } => {
                CliError::Invariant(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ArcPosetError> for CliError {
    fn from(e: ArcPosetError) -> Self {
        match e {
            ArcPosetError::Surface(e) => e.into(),
            ArcPosetError::Cluster(e) => e.into(),
            ArcPosetError::Poset(e) => e.into(),
            ArcPosetError::NoCrossings(_) => CliError::Input(e.to_string()),
        }
    }
}

impl From<ScanError> for CliError {
    fn from(e: ScanError) -> Self {
        match e {
            ScanError::InvalidConfig(_) => CliError::Input(e.to_string()),
            ScanError::EnumerationMismatch { .. } => CliError::Invariant(e.to_string()),
        }
    }
}
