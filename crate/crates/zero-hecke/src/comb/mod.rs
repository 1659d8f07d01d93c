//! Compositions, generalized compositions, and symmetric-group plumbing.
//!
//! All values are immutable after construction and cheap to clone; every
//! other module in the crate consumes these types.

mod bubble;
mod composition;
mod permutation;

pub use bubble::{bubble_step, bubble_word};
pub use composition::{compositions_of, Composition, GeneralizedComposition};
pub use permutation::{is_compatible, sorting_interval, Perm, SortingInterval};
