//! Named datasets with known verdicts.
//!
//! * `example1`: four fruits. Binary choices form a clean ranking
//!   (a best, b ~ k, d worst) yet `{a,d}` is chosen from the full menu.
//!   Three-element menus are unobserved.
//! * `example2`: three destinations. `a ≻ b`, `b ~ k`, `a ~ k`, and `{a,k}`
//!   is chosen from the full menu. All seven menus are listed. Adding `a`
//!   to `{b,k}` breaks the tie for `k`, so `a` is a reference point.
//! * `luce-raiffa`: chicken `y` beats steak tartare `x` head to head, but
//!   adding frog legs `z` makes the diner choose `x`.
//! * `set-reference`: `x` beats `y` alone, with `z`, and with `w`, but `y`
//!   is chosen once `z` and `w` are both on the menu.

use crate::axioms::Status;
use crate::dataset::PartialChoiceDataset;
use crate::error::{ChoiceError, Result};
use crate::universe::Universe;

pub const FIXTURE_NAMES: [&str; 4] = ["example1", "example2", "luce-raiffa", "set-reference"];

/// Verdicts a fixture is known to produce (`None` where nothing is claimed).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub tau: Option<Status>,
    pub rho: Option<Status>,
    pub warp: Option<Status>,
    pub v_axiom: Option<Status>,
    pub delta: Option<Status>,
    pub reference_points: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub dataset: PartialChoiceDataset,
    pub expected: Expected,
}

fn dataset(labels: &[&str], observations: &[(&[&str], &[&str])]) -> PartialChoiceDataset {
    let universe = Universe::new(labels.iter().copied()).expect("fixture universe");
    let obs: Vec<_> = observations
        .iter()
        .map(|(menu, choice)| {
            (
                universe.menu(menu.iter()).expect("fixture menu"),
                universe.menu(choice.iter()).expect("fixture choice"),
            )
        })
        .collect();
    PartialChoiceDataset::new(universe, obs).expect("fixture dataset")
}

pub fn example1() -> Fixture {
    Fixture {
        name: "example1",
        dataset: dataset(
            &["a", "b", "k", "d"],
            &[
                (&["a", "b"], &["a"]),
                (&["a", "k"], &["a"]),
                (&["a", "d"], &["a"]),
                (&["b", "k"], &["b", "k"]),
                (&["k", "d"], &["k"]),
                (&["b", "d"], &["b"]),
                (&["a", "b", "k", "d"], &["a", "d"]),
            ],
        ),
        expected: Expected {
            tau: Some(Status::Satisfied),
            rho: Some(Status::Violated),
            warp: Some(Status::Violated),
            v_axiom: Some(Status::Undetermined),
            delta: Some(Status::Undetermined),
            reference_points: None,
        },
    }
}

pub fn example2() -> Fixture {
    Fixture {
        name: "example2",
        dataset: dataset(
            &["a", "b", "k"],
            &[
                (&["a"], &["a"]),
                (&["b"], &["b"]),
                (&["k"], &["k"]),
                (&["a", "b"], &["a"]),
                (&["b", "k"], &["b", "k"]),
                (&["a", "k"], &["a", "k"]),
                (&["a", "b", "k"], &["a", "k"]),
            ],
        ),
        expected: Expected {
            tau: Some(Status::Violated),
            rho: Some(Status::Satisfied),
            warp: Some(Status::Violated),
            v_axiom: Some(Status::Satisfied),
            delta: Some(Status::Satisfied),
            reference_points: Some(1),
        },
    }
}

pub fn luce_raiffa() -> Fixture {
    Fixture {
        name: "luce-raiffa",
        dataset: dataset(
            &["x", "y", "z"],
            &[(&["x", "y"], &["y"]), (&["x", "y", "z"], &["x"])],
        ),
        expected: Expected {
            reference_points: Some(1),
            ..Expected::default()
        },
    }
}

pub fn set_reference() -> Fixture {
    Fixture {
        name: "set-reference",
        dataset: dataset(
            &["x", "y", "z", "w"],
            &[
                (&["x", "y"], &["x"]),
                (&["x", "y", "z"], &["x"]),
                (&["x", "y", "w"], &["x"]),
                (&["x", "y", "z", "w"], &["y"]),
            ],
        ),
        expected: Expected {
            rho: Some(Status::Violated),
            reference_points: Some(0),
            ..Expected::default()
        },
    }
}

pub fn fixtures() -> Vec<Fixture> {
    vec![example1(), example2(), luce_raiffa(), set_reference()]
}

pub fn fixture(name: &str) -> Result<Fixture> {
    fixtures()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| {
            ChoiceError::Parse(format!(
                "unknown fixture {name:?} (expected one of {})",
                FIXTURE_NAMES.join(", ")
            ))
        })
}
