//! List edge coloring and list total coloring of kite-free embedded graphs.
//!
//! Both algorithms peel reducible configurations off a working copy of the
//! graph until a trivial base remains, color the base, then put the
//! configurations back in reverse order, extending the coloring each time.

mod cycle;
mod lists;
mod peel;
mod triple;
mod verify;

use thiserror::Error;

use crate::embedding::EdgeId;
use crate::oracle::OracleError;
use crate::structure::StructureError;

pub use cycle::{color_even_cycle, CycleError};
pub use lists::{Color, ColorMode, Coloring, FormatError, Item, ListAssignment};
pub use peel::{
    choose_edges, choose_edges_traced, choose_total, choose_total_traced, EdgeGuarantee, PeelStep, PeelTrace,
    TotalGuarantee,
};
pub use triple::{extend_triple_triangle, AlphaCase, Figure1Report, FIGURE1_BOUNDS, LABELS};
pub use verify::{verify_coloring, Violation};

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal extension failure at {config}: {detail}")]
    InternalExtensionFailure { config: String, detail: String },
    #[error("edge {label} ({edge}) has {available} available colors, below the bound {bound}")]
    AvailabilityBelowFigure1 { label: char, edge: EdgeId, available: usize, bound: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error("oracle: {0}")]
    Oracle(#[from] OracleError),
}
