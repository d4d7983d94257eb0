use exlab_core::clique::CliqueError;
use exlab_core::corner::{BehaviorError, CornerError};
use exlab_core::ep::EpError;
use exlab_core::graph::GraphError;
use exlab_core::linprog::LpError;
use exlab_core::sdp::SdpError;
use serde_json::{json, Value};
use std::fmt;

/// Process exit codes.
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;
pub const EXIT_RESOURCE: i32 = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.code {
            EXIT_PARSE => "parse",
            EXIT_SOLVER => "solver",
            EXIT_PRECONDITION => "precondition",
            EXIT_RESOURCE => "resource",
            _ => "error",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "kind": self.kind(), "exit_code": self.code, "message": self.message })
    }

    fn with(code: i32, e: impl fmt::Display) -> Self {
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} error: {}", self.kind(), self.message)
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::ProductTooLarge(..) | GraphError::TooLargeForIsomorphism(_) => Self::with(EXIT_RESOURCE, e),
            _ => Self::with(EXIT_PARSE, e),
        }
    }
}

impl From<CliqueError> for CliError {
    fn from(e: CliqueError) -> Self {
        match e {
            CliqueError::TooManyCliques | CliqueError::TooLarge(_) => Self::with(EXIT_RESOURCE, e),
            _ => Self::with(EXIT_PARSE, e),
        }
    }
}

impl From<LpError> for CliError {
    fn from(e: LpError) -> Self {
        match e {
            LpError::TooLarge { .. } => Self::with(EXIT_RESOURCE, e),
            LpError::Clique(c) => c.into(),
            _ => Self::with(EXIT_SOLVER, e),
        }
    }
}

impl From<CornerError> for CliError {
    fn from(e: CornerError) -> Self {
        match e {
            CornerError::TooLarge => Self::with(EXIT_RESOURCE, e),
            CornerError::Lp(l) => l.into(),
            CornerError::Clique(c) => c.into(),
            CornerError::Dimension { .. } | CornerError::Negative | CornerError::Json(_) => Self::with(EXIT_PARSE, e),
            _ => Self::with(EXIT_SOLVER, e),
        }
    }
}

impl From<SdpError> for CliError {
    fn from(e: SdpError) -> Self {
        match e {
            SdpError::DimensionTooLarge(_) | SdpError::TooManyConstraints(_) => Self::with(EXIT_RESOURCE, e),
            SdpError::Length { .. } | SdpError::InvalidWeights => Self::with(EXIT_PARSE, e),
            SdpError::Graph(g) => g.into(),
            SdpError::NotQuantum(_) => Self::with(EXIT_PRECONDITION, e),
            _ => Self::with(EXIT_SOLVER, e),
        }
    }
}

impl From<BehaviorError> for CliError {
    fn from(e: BehaviorError) -> Self {
        Self::with(EXIT_PARSE, e)
    }
}

impl From<EpError> for CliError {
    fn from(e: EpError) -> Self {
        match e {
            EpError::Graph(g) => g.into(),
            EpError::Corner(c) => c.into(),
            EpError::Clique(c) => c.into(),
            EpError::Sdp(s) => s.into(),
            EpError::Length { .. } => Self::with(EXIT_PARSE, e),
            EpError::NotPostQuantum { theta, status: "inside" } => Self::with(
                EXIT_PRECONDITION,
                format!("target is quantum-realizable: theta(G, w') = {theta} <= 1"),
            ),
            EpError::NotPostQuantum { .. } | EpError::NotInQstab { .. } | EpError::NoViolation(_) | EpError::NoGenerators => {
                Self::with(EXIT_PRECONDITION, e)
            }
            EpError::DiagonalNotClique => Self::with(EXIT_SOLVER, e),
        }
    }
}
