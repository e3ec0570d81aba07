//! Exhaustive enumeration of choice correspondences.
//!
//! A correspondence on `n` alternatives is a mixed-radix number with one
//! digit per non-singleton menu (canonical order, first menu least
//! significant). The digit for menu `A` has base `2^|A| - 1` and value `d`
//! selects `A.deposit(d + 1)`, the `(d+1)`-th nonempty subset of `A`.

use crate::correspondence::{check_size, ChoiceCorrespondence};
use crate::error::{ChoiceError, Result};
use crate::menu::{canonical_non_singletons, Menu};
use crate::universe::MAX_ENUMERATION_SIZE;

/// Number of correspondences on `n` alternatives: the product over menus
/// `A` of `2^|A| - 1`. Exceeds `u64` at `n = 5`.
pub fn correspondence_count(n: usize) -> u128 {
    canonical_non_singletons(n)
        .iter()
        .map(|m| radix(*m) as u128)
        .product()
}

#[inline]
fn radix(menu: Menu) -> u32 {
    (1u32 << menu.len()) - 1
}

fn check_enumerable(n: usize) -> Result<()> {
    check_size(n)?;
    if n > MAX_ENUMERATION_SIZE {
        return Err(ChoiceError::UniverseTooLarge {
            size: n,
            max: MAX_ENUMERATION_SIZE,
        });
    }
    Ok(())
}

/// The correspondence at position `index` of the enumeration order.
pub fn correspondence_at(n: usize, index: u128) -> Result<ChoiceCorrespondence> {
    check_enumerable(n)?;
    let count = correspondence_count(n);
    if index >= count {
        return Err(ChoiceError::IndexOutOfRange { index, count });
    }
    let mut c = ChoiceCorrespondence::scratch(n);
    let mut rest = index;
    for &menu in canonical_non_singletons(n) {
        let base = radix(menu) as u128;
        let digit = (rest % base) as u32;
        rest /= base;
        c.set_unchecked(menu, menu.deposit(digit + 1));
    }
    Ok(c)
}

/// Position of `c` in the enumeration order.
pub fn index_of(c: &ChoiceCorrespondence) -> u128 {
    let mut index = 0u128;
    for &menu in canonical_non_singletons(c.size()).iter().rev() {
        let digit = menu.extract(c.get(menu)) - 1;
        index = index * radix(menu) as u128 + digit as u128;
    }
    index
}

/// Walks `[lo, hi)` of the enumeration order, updating one table in place.
///
/// ```
/// use revpref::generators::Enumerator;
///
/// let mut walk = Enumerator::new(3).unwrap();
/// let mut count = 0;
/// while let Some(_c) = walk.next_ref() {
///     count += 1;
/// }
/// assert_eq!(count, 189);
/// ```
pub struct Enumerator {
    menus: &'static [Menu],
    digits: Vec<u32>,
    current: ChoiceCorrespondence,
    next_index: u128,
    end: u128,
    started: bool,
}

impl Enumerator {
    pub fn new(n: usize) -> Result<Enumerator> {
        check_enumerable(n)?;
        Enumerator::range(n, 0, correspondence_count(n))
    }

    /// Enumerate indices `lo..hi`; `hi` is clamped to the total count.
    pub fn range(n: usize, lo: u128, hi: u128) -> Result<Enumerator> {
        check_enumerable(n)?;
        let count = correspondence_count(n);
        let end = hi.min(count);
        let start = lo.min(end);
        let menus = canonical_non_singletons(n);
        let mut digits = Vec::with_capacity(menus.len());
        let mut current = ChoiceCorrespondence::scratch(n);
        let mut rest = start;
        for &menu in menus {
            let base = radix(menu) as u128;
            let digit = (rest % base) as u32;
            rest /= base;
            digits.push(digit);
            current.set_unchecked(menu, menu.deposit(digit + 1));
        }
        Ok(Enumerator {
            menus,
            digits,
            current,
            next_index: start,
            end,
            started: false,
        })
    }

    /// Index `k` of `shards` equal slices of the full enumeration.
    pub fn shard(n: usize, shards: u128, k: u128) -> Result<Enumerator> {
        let (lo, hi) = shard_bounds(correspondence_count(n), shards, k);
        Enumerator::range(n, lo, hi)
    }

    /// Index of the correspondence most recently returned by `next_ref`.
    pub fn index(&self) -> u128 {
        self.next_index - 1
    }

    /// Advance and borrow the next correspondence.
    pub fn next_ref(&mut self) -> Option<&ChoiceCorrespondence> {
        if self.next_index >= self.end {
            return None;
        }
        if self.started {
            self.step();
        }
        self.started = true;
        self.next_index += 1;
        Some(&self.current)
    }

    fn step(&mut self) {
        for (digit, &menu) in self.digits.iter_mut().zip(self.menus) {
            *digit += 1;
            if *digit == radix(menu) {
                *digit = 0;
                self.current.set_unchecked(menu, menu.deposit(1));
            } else {
                self.current.set_unchecked(menu, menu.deposit(*digit + 1));
                return;
            }
        }
    }
}

impl Iterator for Enumerator {
    type Item = ChoiceCorrespondence;

    fn next(&mut self) -> Option<ChoiceCorrespondence> {
        self.next_ref().cloned()
    }
}

/// Every correspondence on `n ≤ 5` alternatives, in index order.
pub fn enumerate_all(n: usize) -> Result<Enumerator> {
    Enumerator::new(n)
}

/// `[lo, hi)` of shard `k` out of `shards` near-equal slices of `0..count`.
pub fn shard_bounds(count: u128, shards: u128, k: u128) -> (u128, u128) {
    assert!(shards > 0 && k < shards, "shard {k} out of 0..{shards}");
    let base = count / shards;
    let extra = count % shards;
    let lo = k * base + k.min(extra);
    let hi = lo + base + u128::from(k < extra);
    (lo, hi)
}
