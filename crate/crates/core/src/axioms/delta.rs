use super::{Sink, Witness};
use crate::correspondence::ChoiceData;
use crate::menu::{canonical_non_singletons, Menu};

/// Instances in `(S, T, x, y)` order; `x` is fixed by `c(T) = {x}`.
pub(super) fn scan<D: ChoiceData + ?Sized, S: Sink>(data: &D, sink: &mut S) -> bool {
    let known = data.known_menus();
    for &s in known {
        let chosen_s = data.choice(s).expect("known menu");
        if chosen_s.len() < 2 {
            continue;
        }
        for &t in known {
            if !s.is_proper_subset(t) {
                continue;
            }
            let Some(x) = data.choice(t).expect("known menu").single() else {
                continue;
            };
            if !chosen_s.contains(x) {
                continue;
            }
            for y in chosen_s.without(x).iter() {
                if sink.violation(Witness::Delta { s, t, x, y }).is_break() {
                    return false;
                }
            }
        }
    }
    !data.is_total() && has_undecided(data)
}

fn has_undecided<D: ChoiceData + ?Sized>(data: &D) -> bool {
    let n = data.universe_size();
    let full = Menu::full(n);
    for &m in canonical_non_singletons(n) {
        if data.choice(m).is_some() {
            continue;
        }
        // m as S: some T ⊋ m could have a single chosen member of m.
        for extra in full.difference(m).subsets().skip(1) {
            let t = m.union(extra);
            match data.choice(t) {
                None => return true,
                Some(chosen_t) => {
                    if chosen_t.single().is_some_and(|x| m.contains(x)) {
                        return true;
                    }
                }
            }
        }
        // m as T: some S ⊊ m could have two chosen members.
        for s in m.subsets() {
            if s.len() < 2 || s == m {
                continue;
            }
            match data.choice(s) {
                None => return true,
                Some(chosen_s) if chosen_s.len() >= 2 => return true,
                Some(_) => {}
            }
        }
    }
    false
}
