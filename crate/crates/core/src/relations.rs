//! Binary relations over a universe: revealed preference, preference
//! properties, and the choice rules a relation induces.

use serde::{Deserialize, Serialize};

use crate::correspondence::{ChoiceCorrespondence, ChoiceData};
use crate::error::{ChoiceError, Result};
use crate::menu::{canonical_menus, Menu};
use crate::universe::{Universe, MAX_ANALYSIS_SIZE};

/// A relation on an `n`-element universe stored as one bit row per
/// alternative: bit `y` of row `x` is set when `x ▷ y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryRelation {
    n: usize,
    rows: [u32; MAX_ANALYSIS_SIZE],
}

impl BinaryRelation {
    pub fn empty(n: usize) -> BinaryRelation {
        assert!(n <= MAX_ANALYSIS_SIZE, "universe too large for a relation");
        BinaryRelation {
            n,
            rows: [0; MAX_ANALYSIS_SIZE],
        }
    }

    /// Every ordered pair, including the diagonal.
    pub fn total(n: usize) -> BinaryRelation {
        let mut r = BinaryRelation::empty(n);
        let full = Menu::full(n).bits();
        r.rows[..n].fill(full);
        r
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(
        n: usize,
        pairs: I,
    ) -> BinaryRelation {
        let mut r = BinaryRelation::empty(n);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    pub fn from_fn<F: FnMut(usize, usize) -> bool>(n: usize, mut f: F) -> BinaryRelation {
        let mut r = BinaryRelation::empty(n);
        for x in 0..n {
            for y in 0..n {
                if f(x, y) {
                    r.insert(x, y);
                }
            }
        }
        r
    }

    /// Strict linear order ranking `order[0]` above `order[1]` above ...
    pub fn linear_order(order: &[usize]) -> BinaryRelation {
        let mut r = BinaryRelation::empty(order.len());
        for (i, &x) in order.iter().enumerate() {
            for &y in &order[i + 1..] {
                r.insert(x, y);
            }
        }
        r
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn holds(&self, x: usize, y: usize) -> bool {
        self.rows[x] & (1 << y) != 0
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        assert!(x < self.n && y < self.n, "alternative out of range");
        self.rows[x] |= 1 << y;
    }

    /// Alternatives `y` with `x ▷ y`.
    #[inline]
    pub fn row(&self, x: usize) -> Menu {
        Menu::from_bits(self.rows[x])
    }

    /// Alternatives `y` with `y ▷ x`.
    pub fn column(&self, x: usize) -> Menu {
        (0..self.n).filter(|&y| self.holds(y, x)).collect()
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| self.row(x).iter().map(move |y| (x, y)))
    }

    pub fn len(&self) -> usize {
        self.rows[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows[..self.n].iter().all(|&r| r == 0)
    }

    pub fn transpose(&self) -> BinaryRelation {
        BinaryRelation::from_fn(self.n, |x, y| self.holds(y, x))
    }

    /// `x ≻ y ⟺ x ▷ y ∧ ¬(y ▷ x)`.
    pub fn strict_part(&self) -> BinaryRelation {
        let t = self.transpose();
        let mut r = BinaryRelation::empty(self.n);
        for x in 0..self.n {
            r.rows[x] = self.rows[x] & !t.rows[x];
        }
        r
    }

    /// `x ≿ y ⟺ ¬(y ▷ x)`.
    pub fn weak_from_strict(&self) -> BinaryRelation {
        let t = self.transpose();
        let full = Menu::full(self.n).bits();
        let mut r = BinaryRelation::empty(self.n);
        for x in 0..self.n {
            r.rows[x] = !t.rows[x] & full;
        }
        r
    }

    pub fn is_asymmetric(&self) -> bool {
        self.asymmetry_violation().is_none()
    }

    /// First `(x, y)` with `x ▷ y` and `y ▷ x`.
    pub fn asymmetry_violation(&self) -> Option<(usize, usize)> {
        self.pairs().find(|&(x, y)| self.holds(y, x))
    }

    pub fn is_negatively_transitive(&self) -> bool {
        self.negative_transitivity_violation().is_none()
    }

    /// First ordered triple `(x, y, z)` with `x ⋫ y`, `y ⋫ z` and `x ▷ z`.
    pub fn negative_transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        let full = Menu::full(n).bits();
        for x in 0..n {
            let not_above = !self.rows[x] & full;
            for y in Menu::from_bits(not_above).iter() {
                // z with y ⋫ z and x ▷ z
                let bad = !self.rows[y] & self.rows[x] & full;
                if bad != 0 {
                    return Some((x, y, bad.trailing_zeros() as usize));
                }
            }
        }
        None
    }

    pub fn is_complete(&self) -> bool {
        self.completeness_violation().is_none()
    }

    /// First `(x, y)` related in neither direction. Reflexivity is part of
    /// completeness, so `(x, x)` can be reported.
    pub fn completeness_violation(&self) -> Option<(usize, usize)> {
        let t = self.transpose();
        let full = Menu::full(self.n).bits();
        (0..self.n).find_map(|x| {
            let missing = !(self.rows[x] | t.rows[x]) & full;
            (missing != 0).then(|| (x, missing.trailing_zeros() as usize))
        })
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    /// First `(x, y, z)` with `x ▷ y`, `y ▷ z` and `x ⋫ z`.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in self.row(x).iter() {
                let bad = self.rows[y] & !self.rows[x];
                if bad != 0 {
                    return Some((x, y, bad.trailing_zeros() as usize));
                }
            }
        }
        None
    }

    /// Asymmetric and negatively transitive.
    pub fn is_strict_preference(&self) -> bool {
        self.is_asymmetric() && self.is_negatively_transitive()
    }

    /// Complete and transitive.
    pub fn is_weak_preference(&self) -> bool {
        self.is_complete() && self.is_transitive()
    }

    pub fn to_json(&self, universe: &Universe) -> RelationJson {
        RelationJson {
            relation: self
                .pairs()
                .map(|(x, y)| [universe.label(x).to_string(), universe.label(y).to_string()])
                .collect(),
        }
    }

    pub fn from_json(universe: &Universe, json: &RelationJson) -> Result<BinaryRelation> {
        let mut r = BinaryRelation::empty(universe.size());
        for [x, y] in &json.relation {
            let xi = universe
                .index_of(x)
                .ok_or_else(|| ChoiceError::UnknownAlternative(x.clone()))?;
            let yi = universe
                .index_of(y)
                .ok_or_else(|| ChoiceError::UnknownAlternative(y.clone()))?;
            r.insert(xi, yi);
        }
        Ok(r)
    }
}

impl std::fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// `{ "relation": [["a","b"], ...] }`, each pair meaning `a ▷ b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub relation: Vec<[String; 2]>,
}

/// `x ≻_c y ⟺ c({x,y}) = {x}`.
pub fn strict_revealed(c: &ChoiceCorrespondence) -> BinaryRelation {
    let n = c.size();
    let mut r = BinaryRelation::empty(n);
    for x in 0..n {
        for y in 0..n {
            if x != y && c.get(Menu::pair(x, y)) == Menu::singleton(x) {
                r.rows[x] |= 1 << y;
            }
        }
    }
    r
}

/// `x ≿_c y ⟺ x ∈ c({x,y})`. Reflexive because `c({x}) = {x}`.
pub fn weak_revealed(c: &ChoiceCorrespondence) -> BinaryRelation {
    let n = c.size();
    let mut r = BinaryRelation::empty(n);
    for x in 0..n {
        for y in 0..n {
            if c.get(Menu::pair(x, y)).contains(x) {
                r.rows[x] |= 1 << y;
            }
        }
    }
    r
}

/// Strict and weak revealed preference of possibly partial data; `None`
/// unless every two-element menu is known.
pub fn revealed_from_pairs<D: ChoiceData + ?Sized>(
    data: &D,
) -> Option<(BinaryRelation, BinaryRelation)> {
    let n = data.universe_size();
    let mut strict = BinaryRelation::empty(n);
    let mut weak = BinaryRelation::empty(n);
    for x in 0..n {
        for y in 0..n {
            let choice = data.choice(Menu::pair(x, y))?;
            if choice.contains(x) {
                weak.rows[x] |= 1 << y;
            }
            if x != y && choice == Menu::singleton(x) {
                strict.rows[x] |= 1 << y;
            }
        }
    }
    Some((strict, weak))
}

pub fn strict_from_weak(r: &BinaryRelation) -> BinaryRelation {
    r.strict_part()
}

pub fn weak_from_strict(r: &BinaryRelation) -> BinaryRelation {
    r.weak_from_strict()
}

/// `{x ∈ menu : no y ∈ menu has y ▷ x}`. Can be empty.
#[inline]
pub fn undominated(menu: Menu, r: &BinaryRelation) -> Menu {
    let mut dominated = 0;
    for y in menu.iter() {
        dominated |= r.rows[y];
    }
    Menu::from_bits(menu.bits() & !dominated)
}

/// `x V y ⟺` some known menu contains both and `x` is chosen from it.
///
/// On partial data only known menus contribute, so the result is a subset
/// of the relation any completion would reveal.
pub fn v_relation<D: ChoiceData + ?Sized>(data: &D) -> BinaryRelation {
    let n = data.universe_size();
    let mut r = BinaryRelation::empty(n);
    for bits in 1..(1u32 << n) {
        let menu = Menu::from_bits(bits);
        if let Some(choice) = data.choice(menu) {
            for x in choice.iter() {
                r.rows[x] |= bits;
            }
        }
    }
    r
}

/// `{x ∈ menu : x V y for all y ∈ menu}`.
#[inline]
pub fn v_maximal(menu: Menu, v: &BinaryRelation) -> Menu {
    Menu::from_bits(
        menu.iter()
            .filter(|&x| menu.is_subset(v.row(x)))
            .fold(0, |acc, x| acc | (1 << x)),
    )
}

/// A menu where the observed choice differs from the relation's
/// undominated set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalizationFailure {
    pub menu: Menu,
    /// Undominated set under the relation.
    pub expected: Menu,
    /// Observed choice.
    pub actual: Menu,
}

/// Outcome of comparing choice data with the choices a relation induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalizationCheck {
    /// Failing menus in canonical order; only the first unless all were
    /// requested.
    pub failures: Vec<RationalizationFailure>,
    /// Some menu's choice is unknown.
    pub incomplete: bool,
}

impl RationalizationCheck {
    /// `Some(true)` rationalized, `Some(false)` not, `None` undetermined.
    pub fn outcome(&self) -> Option<bool> {
        if !self.failures.is_empty() {
            Some(false)
        } else if self.incomplete {
            None
        } else {
            Some(true)
        }
    }
}

/// Compare every known menu's choice with `undominated(menu, r)`.
pub fn rationalization_check<D: ChoiceData + ?Sized>(
    data: &D,
    r: &BinaryRelation,
    collect_all: bool,
) -> RationalizationCheck {
    let mut check = RationalizationCheck {
        failures: Vec::new(),
        incomplete: false,
    };
    for &menu in canonical_menus(data.universe_size()) {
        match data.choice(menu) {
            None => check.incomplete = true,
            Some(actual) => {
                let expected = undominated(menu, r);
                if expected != actual {
                    check.failures.push(RationalizationFailure {
                        menu,
                        expected,
                        actual,
                    });
                    if !collect_all {
                        break;
                    }
                }
            }
        }
    }
    check
}

/// `c(A) = undominated(A, r)` on every menu; otherwise the first failing
/// menu in canonical order.
pub fn rationalizes(
    c: &ChoiceCorrespondence,
    r: &BinaryRelation,
) -> std::result::Result<(), RationalizationFailure> {
    match rationalization_check(c, r, false).failures.first() {
        Some(&failure) => Err(failure),
        None => Ok(()),
    }
}

/// Boolean form of [`rationalizes`] without the canonical-order scan.
#[inline]
pub fn is_rationalized_by(c: &ChoiceCorrespondence, r: &BinaryRelation) -> bool {
    (1..(1u32 << c.size())).all(|bits| {
        let menu = Menu::from_bits(bits);
        c.get(menu) == undominated(menu, r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions_between_strict_and_weak() {
        let empty = BinaryRelation::empty(3);
        assert_eq!(weak_from_strict(&empty), BinaryRelation::total(3));
        assert!(strict_from_weak(&BinaryRelation::total(3)).is_empty());
    }

    #[test]
    fn empty_relation_is_a_strict_preference() {
        let r = BinaryRelation::empty(3);
        assert!(r.is_asymmetric());
        assert!(r.is_negatively_transitive());
        assert_eq!(undominated(Menu::full(3), &r), Menu::full(3));
    }

    #[test]
    fn cycle_leaves_nothing_undominated() {
        let cycle = BinaryRelation::from_pairs(3, [(0, 1), (1, 2), (2, 0)]);
        assert_eq!(undominated(Menu::full(3), &cycle), Menu::EMPTY);
        assert_eq!(undominated(Menu::pair(0, 1), &cycle), Menu::singleton(0));
    }

    #[test]
    fn property_witnesses() {
        let r = BinaryRelation::from_pairs(3, [(0, 1)]);
        // a ⊁ k, k ⊁ b, a ≻ b
        assert_eq!(r.negative_transitivity_violation(), Some((0, 2, 1)));
        let sym = BinaryRelation::from_pairs(2, [(0, 1), (1, 0)]);
        assert_eq!(sym.asymmetry_violation(), Some((0, 1)));
        let chain = BinaryRelation::from_pairs(3, [(0, 1), (1, 2)]);
        assert_eq!(chain.transitivity_violation(), Some((0, 1, 2)));
        assert_eq!(chain.completeness_violation(), Some((0, 0)));
    }

    #[test]
    fn v_maximal_needs_reflexivity() {
        let v = BinaryRelation::empty(2);
        assert_eq!(v_maximal(Menu::singleton(0), &v), Menu::EMPTY);
        assert_eq!(
            v_maximal(Menu::full(2), &BinaryRelation::total(2)),
            Menu::full(2)
        );
    }

    #[test]
    fn linear_order_maximizes() {
        let r = BinaryRelation::linear_order(&[2, 0, 1]);
        assert!(r.is_strict_preference());
        assert_eq!(undominated(Menu::pair(0, 1), &r), Menu::singleton(0));
        assert_eq!(undominated(Menu::full(3), &r), Menu::singleton(2));
    }

    #[test]
    fn full_indifference_reveals_nothing_strict() {
        let c = ChoiceCorrespondence::full_indifference(3).unwrap();
        assert!(strict_revealed(&c).is_empty());
        assert_eq!(weak_revealed(&c), BinaryRelation::total(3));
        assert_eq!(v_relation(&c), BinaryRelation::total(3));
    }

    #[test]
    fn singleton_v_relation_is_reflexive() {
        let c = ChoiceCorrespondence::full_indifference(1).unwrap();
        assert_eq!(v_relation(&c), BinaryRelation::from_pairs(1, [(0, 0)]));
    }

    #[test]
    fn relation_json_round_trip() {
        let u = Universe::new(["a", "b", "k"]).unwrap();
        let r = BinaryRelation::from_pairs(3, [(0, 1), (2, 1)]);
        let json = r.to_json(&u);
        assert_eq!(
            serde_json::to_string(&json).unwrap(),
            r#"{"relation":[["a","b"],["k","b"]]}"#
        );
        assert_eq!(BinaryRelation::from_json(&u, &json).unwrap(), r);
    }
}
