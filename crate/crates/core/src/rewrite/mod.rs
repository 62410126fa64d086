//! Reidemeister moves, 3-moves and the breadth-first reduction searches.

mod moves;
mod search;

pub use moves::{crossing_delta, enumerate_moves, has_reducing_face, MoveKind, MoveKinds, MoveSite};
pub(crate) use moves::{insert_twist, Side};
pub use search::{
    full_reduction_search, r3_bigon_search, three_move_reduce, three_move_reduce_traced, ReduceOutcome,
    SearchError, SearchLimits, SearchReport, Witness,
};
