//! Correspondences built from behavioural rules.

use crate::correspondence::{check_size, ChoiceCorrespondence};
use crate::error::{ChoiceError, Result};
use crate::menu::{canonical_menus, Menu};
use crate::relations::{undominated, BinaryRelation};
use crate::universe::Universe;

/// `c(A) = undominated(A, r)`.
///
/// Fails on the first menu (canonical order) where `r` leaves nothing
/// undominated, e.g. a strict cycle.
pub fn from_preference(r: &BinaryRelation) -> Result<ChoiceCorrespondence> {
    let n = r.size();
    check_size(n)?;
    if let Some(&menu) = canonical_menus(n)
        .iter()
        .find(|&&m| undominated(m, r).is_empty())
    {
        return Err(ChoiceError::EmptyChoiceUnderRelation {
            menu: format!("{menu:?}"),
        });
    }
    ChoiceCorrespondence::from_fn(n, |menu| undominated(menu, r))
}

/// Every complete and transitive relation on `n` alternatives, found by
/// brute force over all reflexive relations.
pub fn weak_orders(n: usize) -> Vec<BinaryRelation> {
    assert!(n <= 5, "weak order enumeration is brute force");
    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << off_diagonal.len()) {
        let mut r = BinaryRelation::from_pairs(n, (0..n).map(|x| (x, x)));
        for (i, &(x, y)) in off_diagonal.iter().enumerate() {
            if bits & (1 << i) != 0 {
                r.insert(x, y);
            }
        }
        if r.is_complete() && r.is_transitive() {
            out.push(r);
        }
    }
    out
}

/// Parse a ranking such as `a>b~k>d`: `>` separates strictly ranked
/// classes, `~` joins indifferent alternatives. Returns the universe in
/// order of appearance and the weak preference.
pub fn parse_ranking(text: &str) -> Result<(Universe, BinaryRelation)> {
    let classes: Vec<Vec<&str>> = text
        .split('>')
        .map(|class| class.split('~').map(str::trim).collect())
        .collect();
    if classes.iter().flatten().any(|label| label.is_empty()) {
        return Err(ChoiceError::Parse(format!("malformed ranking {text:?}")));
    }
    let universe = Universe::new(classes.iter().flatten().copied())?;
    let rank: Vec<usize> = classes
        .iter()
        .enumerate()
        .flat_map(|(i, class)| std::iter::repeat_n(i, class.len()))
        .collect();
    let weak = BinaryRelation::from_fn(universe.size(), |x, y| rank[x] <= rank[y]);
    Ok((universe, weak))
}

/// How one menu is split into ranked categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Categorization {
    menu: Menu,
    blocks: Vec<Menu>,
    /// Block indices from best to worst.
    ranking: Vec<usize>,
}

impl Categorization {
    /// `blocks` must partition `menu` into nonempty parts and `ranking` must
    /// list every block index exactly once, best first.
    pub fn new(menu: Menu, blocks: Vec<Menu>, ranking: Vec<usize>) -> Result<Categorization> {
        let invalid = |reason: &str| ChoiceError::InvalidCategorization {
            menu: format!("{menu:?}"),
            reason: reason.to_string(),
        };
        let mut covered = Menu::EMPTY;
        for &block in &blocks {
            if block.is_empty() {
                return Err(invalid("empty category"));
            }
            if !block.intersection(covered).is_empty() {
                return Err(invalid("categories overlap"));
            }
            covered = covered.union(block);
        }
        if covered != menu {
            return Err(invalid("categories do not cover the menu"));
        }
        let mut seen = vec![false; blocks.len()];
        if ranking.len() != blocks.len() {
            return Err(invalid("ranking must list every category once"));
        }
        for &i in &ranking {
            if i >= blocks.len() || seen[i] {
                return Err(invalid("ranking must list every category once"));
            }
            seen[i] = true;
        }
        Ok(Categorization {
            menu,
            blocks,
            ranking,
        })
    }

    /// The whole menu as one category.
    pub fn single_block(menu: Menu) -> Categorization {
        Categorization {
            menu,
            blocks: vec![menu],
            ranking: vec![0],
        }
    }

    /// Restrict fixed global categories (ranked best first) to `menu`,
    /// dropping categories with no member on the menu.
    pub fn from_global(menu: Menu, ranked_categories: &[Menu]) -> Result<Categorization> {
        let blocks: Vec<Menu> = ranked_categories
            .iter()
            .map(|c| c.intersection(menu))
            .filter(|b| !b.is_empty())
            .collect();
        let ranking = (0..blocks.len()).collect();
        Categorization::new(menu, blocks, ranking)
    }

    pub fn menu(&self) -> Menu {
        self.menu
    }

    /// Alternatives outside every dominated category.
    pub fn survivors(&self) -> Menu {
        self.blocks[self.ranking[0]]
    }
}

/// Categorize each menu, discard dominated categories, then pick the
/// base-preference maximal survivors.
///
/// `base` must be a weak preference (complete and transitive); its strict
/// part decides among survivors.
pub fn categorize_then_choose<F>(
    n: usize,
    mut categorize: F,
    base: &BinaryRelation,
) -> Result<ChoiceCorrespondence>
where
    F: FnMut(Menu) -> Result<Categorization>,
{
    check_size(n)?;
    if base.size() != n || !base.is_weak_preference() {
        return Err(ChoiceError::NotAWeakPreference);
    }
    let strict = base.strict_part();
    let mut table = vec![Menu::EMPTY; 1 << n];
    for &menu in canonical_menus(n) {
        let cat = categorize(menu)?;
        if cat.menu() != menu {
            return Err(ChoiceError::InvalidCategorization {
                menu: format!("{menu:?}"),
                reason: "categorization belongs to a different menu".into(),
            });
        }
        table[menu.bits() as usize] = undominated(cat.survivors(), &strict);
    }
    ChoiceCorrespondence::from_fn(n, |menu| table[menu.bits() as usize])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_rho, check_tau};

    #[test]
    fn linear_order_picks_the_maximum() {
        let r = BinaryRelation::linear_order(&[0, 1, 2]);
        let c = from_preference(&r).unwrap();
        assert_eq!(c.get(Menu::full(3)), Menu::singleton(0));
        assert_eq!(c.get(Menu::pair(1, 2)), Menu::singleton(1));
        assert!(check_tau(&c).is_satisfied());
        assert!(check_rho(&c).is_satisfied());
    }

    #[test]
    fn empty_relation_gives_full_indifference() {
        let c = from_preference(&BinaryRelation::empty(3)).unwrap();
        assert_eq!(c, ChoiceCorrespondence::full_indifference(3).unwrap());
    }

    #[test]
    fn cycle_is_rejected() {
        let cycle = BinaryRelation::from_pairs(3, [(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(
            from_preference(&cycle),
            Err(ChoiceError::EmptyChoiceUnderRelation { .. })
        ));
    }

    #[test]
    fn weak_order_counts() {
        // ordered Bell (Fubini) numbers
        let counts: Vec<usize> = (1..=4).map(|n| weak_orders(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 13, 75]);
    }

    #[test]
    fn ranking_syntax() {
        let (u, weak) = parse_ranking("a>b~k>d").unwrap();
        assert_eq!(u.labels(), ["a", "b", "k", "d"]);
        assert!(weak.is_weak_preference());
        assert!(weak.holds(1, 2) && weak.holds(2, 1));
        assert!(weak.holds(0, 3) && !weak.holds(3, 0));
        assert!(parse_ranking("a>>b").is_err());
        assert!(parse_ranking("a>a").is_err());
    }

    #[test]
    fn categorization_validation() {
        let menu = Menu::full(3);
        assert!(Categorization::new(menu, vec![Menu::pair(0, 1)], vec![0]).is_err());
        assert!(
            Categorization::new(menu, vec![Menu::pair(0, 1), Menu::pair(1, 2)], vec![0, 1])
                .is_err()
        );
        assert!(
            Categorization::new(menu, vec![Menu::pair(0, 1), Menu::singleton(2)], vec![0, 0])
                .is_err()
        );
        let ok = Categorization::new(menu, vec![Menu::pair(0, 1), Menu::singleton(2)], vec![1, 0])
            .unwrap();
        assert_eq!(ok.survivors(), Menu::singleton(2));
    }

    #[test]
    fn one_block_per_menu_is_plain_maximization() {
        let (_, weak) = parse_ranking("a>b~c>d").unwrap();
        let c = categorize_then_choose(4, |m| Ok(Categorization::single_block(m)), &weak).unwrap();
        assert_eq!(c, from_preference(&weak.strict_part()).unwrap());
    }

    #[test]
    fn base_must_be_weak_preference() {
        let r = BinaryRelation::linear_order(&[0, 1, 2]);
        assert_eq!(
            categorize_then_choose(3, |m| Ok(Categorization::single_block(m)), &r),
            Err(ChoiceError::NotAWeakPreference)
        );
    }
}
