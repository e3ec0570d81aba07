//! Producing choice correspondences: exhaustively, at random, from
//! behavioural rules, and as named fixtures.

mod construct;
mod enumerate;
pub mod fixtures;
mod sample;

pub use construct::{
    categorize_then_choose, from_preference, parse_ranking, weak_orders, Categorization,
};
pub use enumerate::{
    correspondence_at, correspondence_count, enumerate_all, index_of, shard_bounds, Enumerator,
};
pub use fixtures::{fixture, fixtures, Fixture};
pub use sample::{sample, sample_one};
