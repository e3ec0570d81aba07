//! Naive reference implementations used as oracles.
//!
//! Everything here works on `BTreeSet<usize>` menus and quantifies by brute
//! force straight from the definitions, sharing no logic with the library
//! beyond reading choices through `ChoiceCorrespondence::get`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use revpref::{ChoiceCorrespondence, Menu};

pub type Set = BTreeSet<usize>;

pub struct Naive {
    pub n: usize,
    /// Every nonempty menu with its choice.
    pub table: Vec<(Set, Set)>,
}

fn to_menu(s: &Set) -> Menu {
    Menu::from_indices(s.iter().copied())
}

fn to_set(m: Menu) -> Set {
    m.iter().collect()
}

pub fn set(items: &[usize]) -> Set {
    items.iter().copied().collect()
}

impl Naive {
    pub fn new(c: &ChoiceCorrespondence) -> Naive {
        let n = c.size();
        let table = all_subsets(n)
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|s| {
                let choice = to_set(c.get(to_menu(&s)));
                (s, choice)
            })
            .collect();
        Naive { n, table }
    }

    pub fn c(&self, menu: &Set) -> &Set {
        &self
            .table
            .iter()
            .find(|(m, _)| m == menu)
            .expect("menu in table")
            .1
    }

    fn pair_choice(&self, x: usize, y: usize) -> &Set {
        self.c(&set(&[x, y]))
    }

    pub fn strict(&self, x: usize, y: usize) -> bool {
        x != y && *self.pair_choice(x, y) == set(&[x])
    }

    pub fn weak(&self, x: usize, y: usize) -> bool {
        self.pair_choice(x, y).contains(&x)
    }

    pub fn strict_is_preference(&self) -> bool {
        let n = self.n;
        let asym = (0..n).all(|x| (0..n).all(|y| !(self.strict(x, y) && self.strict(y, x))));
        let neg_trans = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| self.strict(x, y) || self.strict(y, z) || !self.strict(x, z))
            })
        });
        asym && neg_trans
    }

    /// `{x ∈ A : no y ∈ A with y ≻ x}`.
    pub fn undominated_strict(&self, menu: &Set) -> Set {
        menu.iter()
            .copied()
            .filter(|&x| !menu.iter().any(|&y| self.strict(y, x)))
            .collect()
    }

    pub fn rationalized(&self) -> bool {
        self.table
            .iter()
            .all(|(m, ch)| self.undominated_strict(m) == *ch)
    }

    pub fn tau(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if x == z {
                        continue;
                    }
                    if self.pair_choice(z, y).contains(&z)
                        && *self.pair_choice(x, z) == set(&[x])
                        && *self.pair_choice(x, y) != set(&[x])
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn rho(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for b in all_subsets(n) {
                    let mut bx = b.clone();
                    bx.insert(x);
                    let mut bxy = bx.clone();
                    bxy.insert(y);
                    let lhs = self.pair_choice(x, y).contains(&x) && self.c(&bx).contains(&x);
                    let rhs = self.c(&bxy).contains(&x);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn warp(&self) -> bool {
        for (a, ca) in &self.table {
            for (b, cb) in &self.table {
                for &x in a.intersection(b) {
                    for &y in a.intersection(b) {
                        if ca.contains(&x) && cb.contains(&y) && !cb.contains(&x) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// x V y iff some menu containing both has x chosen.
    pub fn v(&self, x: usize, y: usize) -> bool {
        self.table
            .iter()
            .any(|(m, ch)| m.contains(&x) && m.contains(&y) && ch.contains(&x))
    }

    pub fn v_axiom(&self) -> bool {
        self.table.iter().all(|(m, ch)| {
            let best: Set = m
                .iter()
                .copied()
                .filter(|&x| m.iter().all(|&y| self.v(x, y)))
                .collect();
            best == *ch
        })
    }

    pub fn delta(&self) -> bool {
        for (s, cs) in &self.table {
            for (t, ct) in &self.table {
                if !(s.is_subset(t) && s != t) {
                    continue;
                }
                for &x in cs {
                    for &y in cs {
                        if x != y && *ct == set(&[x]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

pub fn all_subsets(n: usize) -> Vec<Set> {
    (0u32..(1 << n))
        .map(|bits| (0..n).filter(|&i| bits & (1 << i) != 0).collect())
        .collect()
}

fn binomial(n: u32, k: u32) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// `∏_k (2^k − 1)^C(n,k)`: each k-element menu has `2^k − 1` nonempty
/// choices.
pub fn product_formula(n: u32) -> u128 {
    (1..=n)
        .map(|k| ((1u128 << k) - 1).pow(binomial(n, k) as u32))
        .product()
}

/// Ordered Bell numbers: `a(n) = Σ_{k=1..n} C(n,k) a(n−k)`, the number of
/// weak orders on `n` elements.
pub fn fubini(n: u32) -> u128 {
    let mut a = vec![1u128];
    for m in 1..=n {
        let next = (1..=m).map(|k| binomial(m, k) * a[(m - k) as usize]).sum();
        a.push(next);
    }
    a[n as usize]
}
