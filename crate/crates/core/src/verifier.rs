//! Exhaustive verification of the equivalences between axioms and
//! properties of the revealed preference.
//!
//! Each claim is checked on every correspondence of an `n`-element universe
//! (see [`crate::generators::Enumerator`]). Work can be split into index
//! shards; shards are independent and their reports merge by summing.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::axioms::Axiom;
use crate::correspondence::ChoiceCorrespondence;
use crate::dataset::{DatasetJson, PartialChoiceDataset};
use crate::error::{ChoiceError, Result};
use crate::generators::{correspondence_count, fixtures, index_of, shard_bounds, Enumerator};
use crate::relations::{is_rationalized_by, strict_revealed, v_relation, weak_revealed};
use crate::universe::{Universe, MAX_ENUMERATION_SIZE};

/// Largest `n` verified without slicing.
pub const DEFAULT_MAX_N: usize = 4;

/// A suite stops after this many counterexamples.
pub const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Claim {
    /// tau holds iff the strict revealed preference is a strict preference.
    #[serde(rename = "prop-tau")]
    PropTau,
    /// rho holds iff the strict revealed preference rationalizes c.
    #[serde(rename = "prop-rho")]
    PropRho,
    /// tau and rho iff preference and rationalizing.
    #[serde(rename = "theorem1")]
    Theorem1,
    /// V-axiom iff the strict revealed preference rationalizes c; on that
    /// class the weak revealed preference equals V.
    #[serde(rename = "lemma1")]
    Lemma1,
    /// WARP iff tau and rho.
    #[serde(rename = "warp")]
    Warp,
    /// On normal correspondences tau implies delta, and not conversely.
    #[serde(rename = "delta")]
    Delta,
}

impl Claim {
    pub const ALL: [Claim; 6] = [
        Claim::PropTau,
        Claim::PropRho,
        Claim::Theorem1,
        Claim::Lemma1,
        Claim::Warp,
        Claim::Delta,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::PropTau => "prop-tau",
            Claim::PropRho => "prop-rho",
            Claim::Theorem1 => "theorem1",
            Claim::Lemma1 => "lemma1",
            Claim::Warp => "warp",
            Claim::Delta => "delta",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = ChoiceError;

    fn from_str(s: &str) -> Result<Claim> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| ChoiceError::Parse(format!("unknown claim {s:?}")))
    }
}

/// How much of the enumeration to cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Coverage {
    /// Everything, on the calling thread.
    #[default]
    Sequential,
    /// Everything, split into `shards` slices run in parallel and merged.
    Parallel { shards: u128 },
    /// Only slice `shard` of `shards`.
    Slice { shards: u128, shard: u128 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub index: u128,
    pub detail: String,
    pub correspondence: DatasetJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub n: usize,
    /// Correspondences checked.
    pub instances: u128,
    /// Instances where the claim's left-hand side holds: tau, rho, tau and
    /// rho, the V-axiom, WARP, or normality, depending on the claim.
    pub satisfying: u128,
    /// Delta claim only: normal correspondences satisfying delta but not tau.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converse_failures: Option<u128>,
    /// Delta claim only: whether the three-destination example was among
    /// the converse failures (n = 3, when its index was covered).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example2_confirmed: Option<bool>,
    pub counterexamples: Vec<Counterexample>,
    /// Whole enumeration covered.
    pub complete: bool,
    pub verified: bool,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64((d.as_secs_f64() * 1e6).round() / 1e3)
}

impl VerificationReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Default)]
struct Tally {
    instances: u128,
    satisfying: u128,
    converse: u128,
    example2_seen: bool,
    counterexamples: Vec<(u128, String)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.satisfying += other.satisfying;
        self.converse += other.converse;
        self.example2_seen |= other.example2_seen;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by_key(|(i, _)| *i);
        self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        self
    }
}

/// Result of checking one correspondence.
struct Outcome {
    lhs: bool,
    failure: Option<String>,
    converse: bool,
}

fn check_one(claim: Claim, c: &ChoiceCorrespondence) -> Outcome {
    let ok = |lhs: bool, rhs: bool, what: &str| Outcome {
        lhs,
        failure: (lhs != rhs).then(|| format!("{what}: left side {lhs}, right side {rhs}")),
        converse: false,
    };
    match claim {
        Claim::PropTau => {
            let tau = Axiom::Tau.holds(c);
            let pref = strict_revealed(c).is_strict_preference();
            ok(tau, pref, "tau vs strict preference")
        }
        Claim::PropRho => {
            let rho = Axiom::Rho.holds(c);
            let rat = is_rationalized_by(c, &strict_revealed(c));
            ok(rho, rat, "rho vs rationalization")
        }
        Claim::Theorem1 => {
            let both = Axiom::Tau.holds(c) && Axiom::Rho.holds(c);
            let strict = strict_revealed(c);
            let rhs = strict.is_strict_preference() && is_rationalized_by(c, &strict);
            ok(both, rhs, "tau and rho vs preference and rationalization")
        }
        Claim::Lemma1 => {
            let normal = Axiom::VAxiom.holds(c);
            let rat = is_rationalized_by(c, &strict_revealed(c));
            let mut out = ok(normal, rat, "V-axiom vs rationalization");
            if normal && out.failure.is_none() && weak_revealed(c) != v_relation(c) {
                out.failure = Some("normal but weak revealed preference differs from V".into());
            }
            out
        }
        Claim::Warp => {
            let warp = Axiom::Warp.holds(c);
            let both = Axiom::Tau.holds(c) && Axiom::Rho.holds(c);
            ok(warp, both, "WARP vs tau and rho")
        }
        Claim::Delta => {
            let normal = Axiom::VAxiom.holds(c);
            if !normal {
                return Outcome {
                    lhs: false,
                    failure: None,
                    converse: false,
                };
            }
            let tau = Axiom::Tau.holds(c);
            let delta = Axiom::Delta.holds(c);
            Outcome {
                lhs: true,
                failure: (tau && !delta).then(|| "normal, tau holds but delta fails".to_string()),
                converse: delta && !tau,
            }
        }
    }
}

fn example2_index() -> u128 {
    let c = fixtures::example2()
        .dataset
        .complete(crate::dataset::CompletionPolicy::Fail)
        .expect("example 2 is total");
    index_of(&c)
}

fn run_range(claim: Claim, n: usize, lo: u128, hi: u128) -> Result<Tally> {
    let mut tally = Tally::default();
    let watch = (claim == Claim::Delta && n == 3).then(example2_index);
    let mut walk = Enumerator::range(n, lo, hi)?;
    while let Some(c) = walk.next_ref() {
        let outcome = check_one(claim, c);
        tally.instances += 1;
        tally.satisfying += u128::from(outcome.lhs);
        if outcome.converse {
            tally.converse += 1;
        }
        if let Some(detail) = outcome.failure {
            let index = walk.index();
            tally.counterexamples.push((index, detail));
            if tally.counterexamples.len() >= MAX_COUNTEREXAMPLES {
                break;
            }
        }
    }
    if let Some(target) = watch {
        if (lo..hi).contains(&target) {
            let c = crate::generators::correspondence_at(n, target)?;
            tally.example2_seen = check_one(claim, &c).converse;
        }
    }
    Ok(tally)
}

/// Check `claim` on every correspondence (or the requested slice) of an
/// `n`-element universe.
///
/// `n` above [`DEFAULT_MAX_N`] is refused unless a single slice is
/// requested.
pub fn verify(claim: Claim, n: usize, coverage: Coverage) -> Result<VerificationReport> {
    let sliced = matches!(coverage, Coverage::Slice { .. });
    if n == 0 {
        return Err(ChoiceError::EmptyUniverse);
    }
    let max = if sliced {
        MAX_ENUMERATION_SIZE
    } else {
        DEFAULT_MAX_N
    };
    if n > max {
        return Err(ChoiceError::UniverseTooLarge { size: n, max });
    }
    let count = correspondence_count(n);
    let started = Instant::now();
    let tally = match coverage {
        Coverage::Sequential => run_range(claim, n, 0, count)?,
        Coverage::Parallel { shards } => {
            let shards = shards.max(1);
            (0..shards)
                .into_par_iter()
                .map(|k| {
                    let (lo, hi) = shard_bounds(count, shards, k);
                    run_range(claim, n, lo, hi)
                })
                .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?
        }
        Coverage::Slice { shards, shard } => {
            if shards == 0 || shard >= shards {
                return Err(ChoiceError::Parse(format!(
                    "shard {shard} out of range for {shards} shards"
                )));
            }
            let (lo, hi) = shard_bounds(count, shards, shard);
            run_range(claim, n, lo, hi)?
        }
    };
    let elapsed = started.elapsed();
    let complete = !sliced;
    let universe = Universe::lettered(n)?;
    let counterexamples = tally
        .counterexamples
        .iter()
        .map(|(index, detail)| {
            let c = crate::generators::correspondence_at(n, *index)?;
            Ok(Counterexample {
                index: *index,
                detail: detail.clone(),
                correspondence: PartialChoiceDataset::from_correspondence(universe.clone(), &c)?
                    .to_json(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let is_delta = claim == Claim::Delta;
    let converse_required = is_delta && complete && n >= 3;
    let verified = counterexamples.is_empty() && (!converse_required || tally.converse > 0);
    Ok(VerificationReport {
        claim,
        n,
        instances: tally.instances,
        satisfying: tally.satisfying,
        converse_failures: is_delta.then_some(tally.converse),
        example2_confirmed: (is_delta && n == 3 && complete).then_some(tally.example2_seen),
        counterexamples,
        complete,
        verified,
        elapsed,
    })
}
