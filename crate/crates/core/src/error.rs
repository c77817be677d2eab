use thiserror::Error;

use crate::quiver::Interval;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("monoid outside the supported coordinate class: {0}")]
    UnsupportedMonoid(String),

    #[error("Ext^1({quot}, {sub}) vanishes; no non-split extension")]
    NoExtension { quot: Interval, sub: Interval },

    #[error("not a torsionfree class: {0}")]
    NotTorsionfree(String),

    #[error("object does not lie in the intermediate subcategory: {0}")]
    NotInCategory(String),

    #[error("Serre subcategory {serre:?} does not contain the simples {required:?} of the torsionfree class")]
    NotContaining {
        serre: Vec<usize>,
        required: Vec<usize>,
    },

    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),

    #[error("identification leaves the window: {0}")]
    WindowNotClosed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
