//! Axiom checkers with three-valued verdicts and witnesses.
//!
//! Every checker accepts total correspondences and partial datasets alike.
//! An axiom instance is decided when its truth value is the same under every
//! completion of the data; a violation is reported only for instances that
//! fail under every completion, so `Violated` on partial data is final.
//! `Satisfied` requires every instance to be decided.
//!
//! Witnesses are reported in canonical order (menus by cardinality then
//! mask, alternatives by index, following each axiom's quantifier order).
//! At most [`WITNESS_CAP`] witnesses are kept; `violation_count` is always
//! exact.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::correspondence::ChoiceData;
use crate::menu::Menu;
use crate::universe::Universe;

mod delta;
mod reference;
mod rho;
mod tau;
mod v_axiom;
mod warp;

pub use reference::{detect_reference_points, ReferencePoint, ReferencePointJson};

pub const WITNESS_CAP: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Tau,
    Rho,
    Warp,
    VAxiom,
    Delta,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Tau,
        Axiom::Rho,
        Axiom::Warp,
        Axiom::VAxiom,
        Axiom::Delta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Tau => "tau",
            Axiom::Rho => "rho",
            Axiom::Warp => "warp",
            Axiom::VAxiom => "v-axiom",
            Axiom::Delta => "delta",
        }
    }

    /// Run this axiom's checker.
    pub fn check<D: ChoiceData + ?Sized>(self, data: &D) -> Verdict {
        match self {
            Axiom::Tau => check_tau(data),
            Axiom::Rho => check_rho(data),
            Axiom::Warp => check_warp(data),
            Axiom::VAxiom => check_v_axiom(data),
            Axiom::Delta => check_delta(data),
        }
    }

    /// True iff the axiom is satisfied; stops at the first violation.
    pub fn holds<D: ChoiceData + ?Sized>(self, data: &D) -> bool {
        let mut first = FirstViolation::default();
        let undetermined = match self {
            Axiom::Tau => tau::scan(data, &mut first),
            Axiom::Rho => rho::scan(data, &mut first),
            Axiom::Warp => warp::scan(data, &mut first),
            Axiom::VAxiom => v_axiom::scan(data, &mut first),
            Axiom::Delta => delta::scan(data, &mut first),
        };
        !first.found && !undetermined
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Satisfied,
    Violated,
    Undetermined,
}

/// Which half of the rho biconditional failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `x ∈ c({x,y}) ∩ c(B ∪ {x})` but `x ∉ c(B ∪ {x,y})`.
    Forward,
    /// `x ∈ c(B ∪ {x,y})` but `x ∉ c({x,y}) ∩ c(B ∪ {x})`.
    Backward,
}

/// The quantified variables of one failing axiom instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    /// `z ∈ c({z,y})` and `{x} = c({x,z})` but `{x} ≠ c({x,y})`.
    Tau { x: usize, y: usize, z: usize },
    Rho {
        x: usize,
        y: usize,
        b: Menu,
        direction: Direction,
    },
    /// `x, y ∈ A ∩ B`, `x ∈ c(A)`, `y ∈ c(B)`, `x ∉ c(B)`.
    Warp {
        a: Menu,
        b: Menu,
        x: usize,
        y: usize,
    },
    /// `S ⊊ T`, `x ≠ y`, `x, y ∈ c(S)` and `c(T) = {x}`.
    Delta {
        s: Menu,
        t: Menu,
        x: usize,
        y: usize,
    },
    /// `c(menu) = actual` differs from the V-maximal set `expected`.
    VAxiom {
        menu: Menu,
        expected: Menu,
        actual: Menu,
    },
}

impl Witness {
    pub fn to_json(&self, u: &Universe) -> WitnessJson {
        let l = |x: usize| u.label(x).to_string();
        match *self {
            Witness::Tau { x, y, z } => WitnessJson::Tau {
                x: l(x),
                z: l(z),
                y: l(y),
            },
            Witness::Rho { x, y, b, direction } => WitnessJson::Rho {
                x: l(x),
                y: l(y),
                b: u.menu_labels(b),
                direction,
            },
            Witness::Warp { a, b, x, y } => WitnessJson::Warp {
                a: u.menu_labels(a),
                b: u.menu_labels(b),
                x: l(x),
                y: l(y),
            },
            Witness::Delta { s, t, x, y } => WitnessJson::Delta {
                s: u.menu_labels(s),
                t: u.menu_labels(t),
                x: l(x),
                y: l(y),
            },
            Witness::VAxiom {
                menu,
                expected,
                actual,
            } => WitnessJson::VAxiom {
                menu: u.menu_labels(menu),
                expected: u.menu_labels(expected),
                actual: u.menu_labels(actual),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum WitnessJson {
    Tau {
        x: String,
        z: String,
        y: String,
    },
    Rho {
        x: String,
        y: String,
        #[serde(rename = "B")]
        b: Vec<String>,
        direction: Direction,
    },
    Warp {
        #[serde(rename = "A")]
        a: Vec<String>,
        #[serde(rename = "B")]
        b: Vec<String>,
        x: String,
        y: String,
    },
    Delta {
        #[serde(rename = "S")]
        s: Vec<String>,
        #[serde(rename = "T")]
        t: Vec<String>,
        x: String,
        y: String,
    },
    VAxiom {
        menu: Vec<String>,
        expected: Vec<String>,
        actual: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub axiom: Axiom,
    pub status: Status,
    /// Exact number of violated instances.
    pub violation_count: u64,
    /// The first violations in canonical order, capped at [`WITNESS_CAP`].
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn is_satisfied(&self) -> bool {
        self.status == Status::Satisfied
    }

    pub fn is_violated(&self) -> bool {
        self.status == Status::Violated
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    pub fn to_json(&self, u: &Universe) -> VerdictJson {
        VerdictJson {
            axiom: self.axiom.name(),
            status: self.status,
            violation_count: self.violation_count,
            witnesses: self.witnesses.iter().map(|w| w.to_json(u)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictJson {
    pub axiom: &'static str,
    pub status: Status,
    pub violation_count: u64,
    pub witnesses: Vec<WitnessJson>,
}

/// Receives violations in canonical order.
pub(crate) trait Sink {
    fn violation(&mut self, w: Witness) -> ControlFlow<()>;
}

#[derive(Default)]
struct Collector {
    count: u64,
    witnesses: Vec<Witness>,
}

impl Sink for Collector {
    fn violation(&mut self, w: Witness) -> ControlFlow<()> {
        self.count += 1;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(w);
        }
        ControlFlow::Continue(())
    }
}

#[derive(Default)]
struct FirstViolation {
    found: bool,
}

impl Sink for FirstViolation {
    fn violation(&mut self, _: Witness) -> ControlFlow<()> {
        self.found = true;
        ControlFlow::Break(())
    }
}

fn collect(axiom: Axiom, scan: impl FnOnce(&mut Collector) -> bool) -> Verdict {
    let mut sink = Collector::default();
    let undetermined = scan(&mut sink);
    let status = if sink.count > 0 {
        Status::Violated
    } else if undetermined {
        Status::Undetermined
    } else {
        Status::Satisfied
    };
    Verdict {
        axiom,
        status,
        violation_count: sink.count,
        witnesses: sink.witnesses,
    }
}

/// For all x, y, z: if `z ∈ c({z,y})` and `{x} = c({x,z})` then
/// `{x} = c({x,y})`.
///
/// Instances with `x = z` are excluded: there `{x} = c({x,z})` is the
/// singleton menu and the instance would forbid all pairwise indifference.
pub fn check_tau<D: ChoiceData + ?Sized>(data: &D) -> Verdict {
    collect(Axiom::Tau, |sink| tau::scan(data, sink))
}

/// For all x, y and every B ⊆ X (including ∅ and sets containing x or y):
/// `x ∈ c({x,y}) ∩ c(B ∪ {x})` iff `x ∈ c(B ∪ {x,y})`.
pub fn check_rho<D: ChoiceData + ?Sized>(data: &D) -> Verdict {
    collect(Axiom::Rho, |sink| rho::scan(data, sink))
}

/// Classical WARP for correspondences: if `x, y ∈ A ∩ B`, `x ∈ c(A)` and
/// `y ∈ c(B)` then `x ∈ c(B)`.
pub fn check_warp<D: ChoiceData + ?Sized>(data: &D) -> Verdict {
    collect(Axiom::Warp, |sink| warp::scan(data, sink))
}

/// `c(A)` equals the V-maximal elements of `A` for every menu. Undetermined
/// unless every menu is known, since V depends on all of them.
pub fn check_v_axiom<D: ChoiceData + ?Sized>(data: &D) -> Verdict {
    collect(Axiom::VAxiom, |sink| v_axiom::scan(data, sink))
}

/// No `S ⊊ T` with two distinct alternatives chosen from `S` of which one is
/// the unique choice from `T`.
pub fn check_delta<D: ChoiceData + ?Sized>(data: &D) -> Verdict {
    collect(Axiom::Delta, |sink| delta::scan(data, sink))
}

/// All five verdicts in [`Axiom::ALL`] order.
pub fn check_all<D: ChoiceData + ?Sized>(data: &D) -> [Verdict; 5] {
    Axiom::ALL.map(|axiom| axiom.check(data))
}

// Kleene connectives over `Option<bool>` (None = unknown).

#[inline]
pub(crate) fn and(a: Option<bool>, b: Option<bool>) -> Option<bool> {
    match (a, b) {
        (Some(false), _) | (_, Some(false)) => Some(false),
        (Some(true), Some(true)) => Some(true),
        _ => None,
    }
}

#[inline]
pub(crate) fn is_singleton_of(choice: Option<Menu>, x: usize) -> Option<bool> {
    choice.map(|c| c == Menu::singleton(x))
}
