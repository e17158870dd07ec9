//! Crate-wide error type and exit-code classification.

use thiserror::Error;

use crate::automata::AutomataError;
use crate::constraints::ConstraintsError;
use crate::expressions::ExpressionError;
use crate::numerics::NumericsError;
use crate::workspace::WorkspaceError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Automata(#[from] AutomataError),
    #[error(transparent)]
    Expression(#[from] ExpressionError),
    #[error(transparent)]
    Constraints(#[from] ConstraintsError),
    #[error(transparent)]
    Workspace(#[from] WorkspaceError),
}

impl Error {
    /// `true` for errors caused by a configured resource cap rather than by
    /// malformed input (CLI exit code 3 instead of 2).
    pub fn is_cap_exhaustion(&self) -> bool {
        matches!(
            self,
            Error::Automata(AutomataError::CycleCapExceeded { .. })
                | Error::Expression(ExpressionError::PieceCapExceeded { .. })
        )
    }
}
