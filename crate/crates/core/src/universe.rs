use crate::error::{ChoiceError, Result};
use crate::menu::Menu;

/// Largest universe the analysis routines accept.
pub const MAX_ANALYSIS_SIZE: usize = 16;

/// Largest universe exhaustive enumeration accepts.
pub const MAX_ENUMERATION_SIZE: usize = 5;

/// A finite set of labelled alternatives with stable indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Universe>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(ChoiceError::EmptyUniverse);
        }
        if labels.len() > MAX_ANALYSIS_SIZE {
            return Err(ChoiceError::UniverseTooLarge {
                size: labels.len(),
                max: MAX_ANALYSIS_SIZE,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(ChoiceError::DuplicateLabel(label.clone()));
            }
        }
        Ok(Universe { labels })
    }

    /// A universe labelled `a`, `b`, `c`, ... in index order.
    pub fn lettered(n: usize) -> Result<Universe> {
        if n > MAX_ANALYSIS_SIZE {
            return Err(ChoiceError::UniverseTooLarge {
                size: n,
                max: MAX_ANALYSIS_SIZE,
            });
        }
        Universe::new((0..n).map(|i| char::from(b'a' + i as u8).to_string()))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full_menu(&self) -> Menu {
        Menu::full(self.size())
    }

    /// Resolve labels into a menu. Repeated labels are tolerated.
    pub fn menu<I, S>(&self, labels: I) -> Result<Menu>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut menu = Menu::EMPTY;
        for label in labels {
            let label = label.as_ref();
            let x = self
                .index_of(label)
                .ok_or_else(|| ChoiceError::UnknownAlternative(label.to_string()))?;
            menu = menu.with(x);
        }
        Ok(menu)
    }

    /// Members of `menu` as labels, in index order.
    pub fn menu_labels(&self, menu: Menu) -> Vec<String> {
        menu.iter().map(|x| self.labels[x].clone()).collect()
    }

    /// Render a menu as `{a,b}`.
    pub fn render(&self, menu: Menu) -> String {
        format!("{{{}}}", self.menu_labels(menu).join(","))
    }
}
