//! Menus as bit masks over alternative indices.
//!
//! Bit `i` of the mask is set when alternative `i` is on the menu. The
//! canonical order used for every "first witness" guarantee in this crate is
//! by cardinality, then by numeric mask; [`Menu`]'s `Ord` implements exactly
//! that order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use crate::universe::MAX_ANALYSIS_SIZE;

/// A set of alternatives encoded as a bit mask.
///
/// A `Menu` value may be empty (the empty set shows up as the `B` of the rho
/// axiom and as the result of filtering), but menus offered for choice are
/// always nonempty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Menu(u32);

impl Menu {
    pub const EMPTY: Menu = Menu(0);

    pub const fn from_bits(bits: u32) -> Menu {
        Menu(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn singleton(x: usize) -> Menu {
        Menu(1 << x)
    }

    pub const fn pair(x: usize, y: usize) -> Menu {
        Menu((1 << x) | (1 << y))
    }

    /// The menu containing every alternative of an `n`-element universe.
    pub const fn full(n: usize) -> Menu {
        if n >= 32 {
            Menu(u32::MAX)
        } else {
            Menu((1u32 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Menu {
        Menu(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, x: usize) -> bool {
        self.0 & (1 << x) != 0
    }

    pub const fn is_subset(self, other: Menu) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_proper_subset(self, other: Menu) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    pub const fn union(self, other: Menu) -> Menu {
        Menu(self.0 | other.0)
    }

    pub const fn intersection(self, other: Menu) -> Menu {
        Menu(self.0 & other.0)
    }

    pub const fn difference(self, other: Menu) -> Menu {
        Menu(self.0 & !other.0)
    }

    pub const fn with(self, x: usize) -> Menu {
        Menu(self.0 | (1 << x))
    }

    pub const fn without(self, x: usize) -> Menu {
        Menu(self.0 & !(1 << x))
    }

    /// The single member, if there is exactly one.
    pub const fn single(self) -> Option<usize> {
        if self.0.count_ones() == 1 {
            Some(self.0.trailing_zeros() as usize)
        } else {
            None
        }
    }

    /// Members in ascending index order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All subsets of `self` (including the empty set and `self`) in
    /// ascending mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }

    /// The `rank`-th subset of `self` in ascending order of the compressed
    /// mask: bit `j` of `rank` selects the `j`-th smallest member.
    pub fn deposit(self, rank: u32) -> Menu {
        let mut out = 0;
        let mut src = rank;
        let mut set = self.0;
        while set != 0 && src != 0 {
            let low = set & set.wrapping_neg();
            if src & 1 != 0 {
                out |= low;
            }
            src >>= 1;
            set ^= low;
        }
        Menu(out)
    }

    /// Inverse of [`Menu::deposit`] for subsets of `self`.
    pub fn extract(self, subset: Menu) -> u32 {
        let mut out = 0;
        let mut bit = 0;
        let mut set = self.0;
        while set != 0 {
            let low = set & set.wrapping_neg();
            if subset.0 & low != 0 {
                out |= 1 << bit;
            }
            bit += 1;
            set ^= low;
        }
        out
    }
}

impl Ord for Menu {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Menu {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Menu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Menu {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Menu::from_indices(iter)
    }
}

#[derive(Clone, Debug)]
pub struct Members(u32);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Subset iterator using the carry-rippler step `next = (cur - set) & set`.
#[derive(Clone, Debug)]
pub struct Subsets {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Menu;

    fn next(&mut self) -> Option<Menu> {
        let cur = self.next?;
        let following = cur.wrapping_sub(self.set) & self.set;
        self.next = if following == 0 {
            None
        } else {
            Some(following)
        };
        Some(Menu(cur))
    }
}

static MENU_ORDERS: [OnceLock<Vec<Menu>>; MAX_ANALYSIS_SIZE + 1] =
    [const { OnceLock::new() }; MAX_ANALYSIS_SIZE + 1];
static NON_SINGLETON_ORDERS: [OnceLock<Vec<Menu>>; MAX_ANALYSIS_SIZE + 1] =
    [const { OnceLock::new() }; MAX_ANALYSIS_SIZE + 1];
static SUBSET_ORDERS: [OnceLock<Vec<Menu>>; MAX_ANALYSIS_SIZE + 1] =
    [const { OnceLock::new() }; MAX_ANALYSIS_SIZE + 1];

/// Every nonempty menu of an `n`-element universe in canonical order.
pub fn canonical_menus(n: usize) -> &'static [Menu] {
    MENU_ORDERS[n].get_or_init(|| {
        let mut menus: Vec<Menu> = (1..=Menu::full(n).bits()).map(Menu).collect();
        menus.sort_unstable();
        menus
    })
}

/// Menus with at least two members, in canonical order.
pub fn canonical_non_singletons(n: usize) -> &'static [Menu] {
    NON_SINGLETON_ORDERS[n].get_or_init(|| {
        canonical_menus(n)
            .iter()
            .copied()
            .filter(|m| m.len() > 1)
            .collect()
    })
}

/// Every subset of the universe: the empty set first, then canonical order.
pub fn canonical_subsets(n: usize) -> &'static [Menu] {
    SUBSET_ORDERS[n].get_or_init(|| {
        let mut menus: Vec<Menu> = (0..=Menu::full(n).bits()).map(Menu).collect();
        menus.sort_unstable();
        menus
    })
}
