use thiserror::Error;

/// Everything that can go wrong while building or ingesting choice data.
///
/// Menus are carried pre-rendered (e.g. `{a,b}`) so that messages make sense
/// without the universe at hand.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChoiceError {
    #[error("universe must contain at least one alternative")]
    EmptyUniverse,

    #[error("universe of size {size} exceeds the limit of {max}")]
    UniverseTooLarge { size: usize, max: usize },

    #[error("alternative label {0:?} appears more than once")]
    DuplicateLabel(String),

    #[error("unknown alternative {0:?}")]
    UnknownAlternative(String),

    #[error("menus must be nonempty")]
    EmptyMenu,

    #[error("menu {menu} has no choice entry")]
    MissingMenu { menu: String },

    #[error("choice {choice} is not a subset of menu {menu}")]
    ChoiceOutsideMenu { menu: String, choice: String },

    #[error("empty choice from menu {menu}")]
    EmptyChoice { menu: String },

    #[error("menu {menu} listed twice with different choices")]
    DuplicateConflict { menu: String },

    #[error("{missing} menus are unobserved (first: {first})")]
    IncompleteData { missing: usize, first: String },

    #[error("relation leaves no undominated alternative in menu {menu}")]
    EmptyChoiceUnderRelation { menu: String },

    #[error("relation is not a weak preference (complete and transitive)")]
    NotAWeakPreference,

    #[error("invalid categorization of menu {menu}: {reason}")]
    InvalidCategorization { menu: String, reason: String },

    #[error("correspondence index {index} out of range (count is {count})")]
    IndexOutOfRange { index: u128, count: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl ChoiceError {
    /// Stable variant name for machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            ChoiceError::EmptyUniverse => "EmptyUniverse",
            ChoiceError::UniverseTooLarge { .. } => "UniverseTooLarge",
            ChoiceError::DuplicateLabel(_) => "DuplicateLabel",
            ChoiceError::UnknownAlternative(_) => "UnknownAlternative",
            ChoiceError::EmptyMenu => "EmptyMenu",
            ChoiceError::MissingMenu { .. } => "MissingMenu",
            ChoiceError::ChoiceOutsideMenu { .. } => "ChoiceOutsideMenu",
            ChoiceError::EmptyChoice { .. } => "EmptyChoice",
            ChoiceError::DuplicateConflict { .. } => "DuplicateConflict",
            ChoiceError::IncompleteData { .. } => "IncompleteData",
            ChoiceError::EmptyChoiceUnderRelation { .. } => "EmptyChoiceUnderRelation",
            ChoiceError::NotAWeakPreference => "NotAWeakPreference",
            ChoiceError::InvalidCategorization { .. } => "InvalidCategorization",
            ChoiceError::IndexOutOfRange { .. } => "IndexOutOfRange",
            ChoiceError::Parse(_) => "Parse",
        }
    }
}

impl From<serde_json::Error> for ChoiceError {
    fn from(err: serde_json::Error) -> Self {
        ChoiceError::Parse(err.to_string())
    }
}

pub type Result<T, E = ChoiceError> = std::result::Result<T, E>;
