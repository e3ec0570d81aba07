//! Partially observed choice data and its JSON form.
//!
//! ```json
//! { "alternatives": ["a", "b"],
//!   "observations": [ { "menu": ["a", "b"], "choice": ["a"] } ] }
//! ```
//!
//! Order inside arrays is irrelevant on input. On output alternatives follow
//! declaration order, observations follow canonical menu order and labels
//! inside a menu follow declaration order.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::correspondence::{validate_entry, ChoiceCorrespondence, ChoiceData};
use crate::error::{ChoiceError, Result};
use crate::menu::{canonical_menus, Menu};
use crate::universe::Universe;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetJson {
    pub alternatives: Vec<String>,
    pub observations: Vec<ObservationJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObservationJson {
    pub menu: Vec<String>,
    pub choice: Vec<String>,
}

/// Observed `(menu, choice)` pairs over a universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialChoiceDataset {
    universe: Universe,
    // Canonical menu order, one entry per distinct menu.
    observations: Vec<(Menu, Menu)>,
    lookup: Vec<Option<Menu>>,
    known: Vec<Menu>,
}

impl PartialChoiceDataset {
    pub fn new<I>(universe: Universe, observations: I) -> Result<PartialChoiceDataset>
    where
        I: IntoIterator<Item = (Menu, Menu)>,
    {
        let n = universe.size();
        let full = universe.full_menu();
        let mut lookup: Vec<Option<Menu>> = vec![None; 1 << n];
        let mut observed = Vec::new();
        for (menu, choice) in observations {
            validate_entry(&universe, full, menu, choice)?;
            match lookup[menu.bits() as usize] {
                Some(prev) if prev != choice => {
                    return Err(ChoiceError::DuplicateConflict {
                        menu: universe.render(menu),
                    })
                }
                Some(_) => {}
                None => {
                    lookup[menu.bits() as usize] = Some(choice);
                    observed.push((menu, choice));
                }
            }
        }
        observed.sort_unstable_by_key(|&(m, _)| m);
        let known = observed
            .iter()
            .map(|&(m, _)| m)
            .filter(|m| m.len() > 1)
            .collect();
        for x in 0..n {
            lookup[1 << x] = Some(Menu::singleton(x));
        }
        Ok(PartialChoiceDataset {
            universe,
            observations: observed,
            lookup,
            known,
        })
    }

    /// Every non-singleton menu of `c` as an observation.
    pub fn from_correspondence(
        universe: Universe,
        c: &ChoiceCorrespondence,
    ) -> Result<PartialChoiceDataset> {
        if universe.size() != c.size() {
            return Err(ChoiceError::Parse(format!(
                "universe has {} alternatives but correspondence has {}",
                universe.size(),
                c.size()
            )));
        }
        PartialChoiceDataset::new(universe, c.entries().filter(|(m, _)| m.len() > 1))
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn observations(&self) -> &[(Menu, Menu)] {
        &self.observations
    }

    /// Keep only the observations accepted by `keep`.
    pub fn restrict<F>(&self, mut keep: F) -> PartialChoiceDataset
    where
        F: FnMut(Menu, Menu) -> bool,
    {
        PartialChoiceDataset::new(
            self.universe.clone(),
            self.observations
                .iter()
                .copied()
                .filter(|&(m, c)| keep(m, c)),
        )
        .expect("subset of a valid dataset is valid")
    }

    /// Share of all nonempty menus whose choice is known (singletons count
    /// as known).
    pub fn coverage(&self) -> f64 {
        let n = self.universe.size();
        let total = (1usize << n) - 1;
        (self.known.len() + n) as f64 / total as f64
    }

    /// Non-singleton menus with no observation, in canonical order.
    pub fn missing_menus(&self) -> Vec<Menu> {
        canonical_menus(self.universe.size())
            .iter()
            .copied()
            .filter(|m| self.lookup[m.bits() as usize].is_none())
            .collect()
    }

    pub fn to_json(&self) -> DatasetJson {
        DatasetJson {
            alternatives: self.universe.labels().to_vec(),
            observations: self
                .observations
                .iter()
                .map(|&(menu, choice)| ObservationJson {
                    menu: self.universe.menu_labels(menu),
                    choice: self.universe.menu_labels(choice),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &DatasetJson) -> Result<PartialChoiceDataset> {
        let universe = Universe::new(json.alternatives.iter().cloned())?;
        let observations = json
            .observations
            .iter()
            .map(|o| Ok((universe.menu(&o.menu)?, universe.menu(&o.choice)?)))
            .collect::<Result<Vec<_>>>()?;
        PartialChoiceDataset::new(universe, observations)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("dataset serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("dataset serializes")
    }

    /// Fill unobserved menus according to `policy`.
    pub fn complete(&self, policy: CompletionPolicy) -> Result<ChoiceCorrespondence> {
        let missing = self.missing_menus();
        if policy == CompletionPolicy::Fail && !missing.is_empty() {
            return Err(ChoiceError::IncompleteData {
                missing: missing.len(),
                first: self.universe.render(missing[0]),
            });
        }
        ChoiceCorrespondence::build(
            &self.universe,
            self.observations
                .iter()
                .copied()
                .chain(missing.into_iter().map(|m| (m, m))),
        )
    }
}

impl ChoiceData for PartialChoiceDataset {
    fn universe_size(&self) -> usize {
        self.universe.size()
    }

    #[inline]
    fn choice(&self, menu: Menu) -> Option<Menu> {
        self.lookup[menu.bits() as usize]
    }

    fn is_total(&self) -> bool {
        let n = self.universe.size();
        self.known.len() + n + 1 == 1 << n
    }

    fn known_menus(&self) -> &[Menu] {
        &self.known
    }
}

/// Parse and validate a dataset from its JSON text.
pub fn ingest_dataset(text: &str) -> Result<PartialChoiceDataset> {
    let json: DatasetJson = serde_json::from_str(text)?;
    PartialChoiceDataset::from_json(&json)
}

/// How [`PartialChoiceDataset::complete`] treats unobserved menus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionPolicy {
    /// `c(A) = A` for every missing menu.
    FullMenu,
    /// Refuse with `IncompleteData`.
    Fail,
}

impl FromStr for CompletionPolicy {
    type Err = ChoiceError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full-menu" => Ok(CompletionPolicy::FullMenu),
            "fail" => Ok(CompletionPolicy::Fail),
            other => Err(ChoiceError::Parse(format!(
                "unknown completion policy {other:?} (expected full-menu or fail)"
            ))),
        }
    }
}
