//! Total choice correspondences and the read-only view shared with partial
//! datasets.

use crate::error::{ChoiceError, Result};
use crate::menu::{canonical_menus, canonical_non_singletons, Menu};
use crate::universe::{Universe, MAX_ANALYSIS_SIZE};

/// Read access to choice data, total or partial.
///
/// `choice` returns `None` for menus whose choice is unknown. Singleton menus
/// are always known: `c({x}) = {x}` is forced.
pub trait ChoiceData {
    fn universe_size(&self) -> usize;

    fn choice(&self, menu: Menu) -> Option<Menu>;

    /// True when every nonempty menu has a known choice.
    fn is_total(&self) -> bool;

    /// Menus with at least two members whose choice is known, in canonical
    /// order.
    fn known_menus(&self) -> &[Menu];

    /// Whether `x` is chosen from `menu`, if known.
    #[inline]
    fn chosen(&self, x: usize, menu: Menu) -> Option<bool> {
        self.choice(menu).map(|c| c.contains(x))
    }
}

/// A choice correspondence: a nonempty sub-menu chosen from every nonempty
/// menu.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChoiceCorrespondence {
    n: usize,
    // Indexed by menu mask; slot 0 (the empty set) is unused.
    table: Vec<Menu>,
}

impl ChoiceCorrespondence {
    /// Build and validate a correspondence from explicit entries.
    ///
    /// Singleton menus may be omitted; every other menu must be listed.
    /// Listing a menu twice is fine as long as the choices agree.
    pub fn build<I>(universe: &Universe, entries: I) -> Result<ChoiceCorrespondence>
    where
        I: IntoIterator<Item = (Menu, Menu)>,
    {
        let n = universe.size();
        let full = universe.full_menu();
        let mut table: Vec<Option<Menu>> = vec![None; 1 << n];
        for (menu, choice) in entries {
            validate_entry(universe, full, menu, choice)?;
            match table[menu.bits() as usize] {
                Some(prev) if prev != choice => {
                    return Err(ChoiceError::DuplicateConflict {
                        menu: universe.render(menu),
                    })
                }
                _ => table[menu.bits() as usize] = Some(choice),
            }
        }
        let mut out = Vec::with_capacity(1 << n);
        out.push(Menu::EMPTY);
        for bits in 1..(1u32 << n) {
            let menu = Menu::from_bits(bits);
            out.push(match table[bits as usize] {
                Some(choice) => choice,
                None if menu.len() == 1 => menu,
                None => Menu::EMPTY,
            });
        }
        if let Some(missing) = canonical_menus(n)
            .iter()
            .find(|m| out[m.bits() as usize].is_empty())
        {
            return Err(ChoiceError::MissingMenu {
                menu: universe.render(*missing),
            });
        }
        Ok(ChoiceCorrespondence { n, table: out })
    }

    /// Build from a choice rule, validating every output.
    pub fn from_fn<F>(n: usize, mut rule: F) -> Result<ChoiceCorrespondence>
    where
        F: FnMut(Menu) -> Menu,
    {
        check_size(n)?;
        let mut table = Vec::with_capacity(1 << n);
        table.push(Menu::EMPTY);
        for bits in 1..(1u32 << n) {
            let menu = Menu::from_bits(bits);
            let choice = rule(menu);
            if choice.is_empty() {
                return Err(ChoiceError::EmptyChoice {
                    menu: format!("{menu:?}"),
                });
            }
            if !choice.is_subset(menu) {
                return Err(ChoiceError::ChoiceOutsideMenu {
                    menu: format!("{menu:?}"),
                    choice: format!("{choice:?}"),
                });
            }
            table.push(choice);
        }
        Ok(ChoiceCorrespondence { n, table })
    }

    /// `c(A) = A` for every menu.
    pub fn full_indifference(n: usize) -> Result<ChoiceCorrespondence> {
        ChoiceCorrespondence::from_fn(n, |menu| menu)
    }

    /// Table with singletons filled and every other slot set to the full
    /// menu; the enumerator overwrites slots in place.
    pub(crate) fn scratch(n: usize) -> ChoiceCorrespondence {
        let table = (0..(1u32 << n)).map(Menu::from_bits).collect();
        ChoiceCorrespondence { n, table }
    }

    #[inline]
    pub(crate) fn set_unchecked(&mut self, menu: Menu, choice: Menu) {
        debug_assert!(!choice.is_empty() && choice.is_subset(menu));
        self.table[menu.bits() as usize] = choice;
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// The chosen sub-menu. `menu` must be a nonempty menu of the universe.
    #[inline]
    pub fn get(&self, menu: Menu) -> Menu {
        self.table[menu.bits() as usize]
    }

    /// `(menu, choice)` for every nonempty menu in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (Menu, Menu)> + '_ {
        canonical_menus(self.n)
            .iter()
            .map(move |&m| (m, self.get(m)))
    }
}

impl ChoiceData for ChoiceCorrespondence {
    #[inline]
    fn universe_size(&self) -> usize {
        self.n
    }

    #[inline]
    fn choice(&self, menu: Menu) -> Option<Menu> {
        Some(self.table[menu.bits() as usize])
    }

    #[inline]
    fn is_total(&self) -> bool {
        true
    }

    fn known_menus(&self) -> &[Menu] {
        canonical_non_singletons(self.n)
    }

    #[inline]
    fn chosen(&self, x: usize, menu: Menu) -> Option<bool> {
        Some(self.table[menu.bits() as usize].contains(x))
    }
}

impl std::fmt::Debug for ChoiceCorrespondence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(self.entries().filter(|(m, _)| m.len() > 1))
            .finish()
    }
}

pub(crate) fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(ChoiceError::EmptyUniverse);
    }
    if n > MAX_ANALYSIS_SIZE {
        return Err(ChoiceError::UniverseTooLarge {
            size: n,
            max: MAX_ANALYSIS_SIZE,
        });
    }
    Ok(())
}

pub(crate) fn validate_entry(
    universe: &Universe,
    full: Menu,
    menu: Menu,
    choice: Menu,
) -> Result<()> {
    if menu.is_empty() || !menu.is_subset(full) {
        return Err(ChoiceError::EmptyMenu);
    }
    if choice.is_empty() {
        return Err(ChoiceError::EmptyChoice {
            menu: universe.render(menu),
        });
    }
    if !choice.is_subset(menu) {
        return Err(ChoiceError::ChoiceOutsideMenu {
            menu: universe.render(menu),
            choice: universe.render(choice),
        });
    }
    Ok(())
}
