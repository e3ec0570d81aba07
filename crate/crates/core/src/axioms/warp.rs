use super::{Sink, Witness};
use crate::correspondence::ChoiceData;
use crate::menu::canonical_non_singletons;

/// Instances in `(A, B, x, y)` order. `A = B` and `x = y` cannot fail, so
/// violations come from pairs of distinct known menus sharing two or more
/// alternatives.
pub(super) fn scan<D: ChoiceData + ?Sized, S: Sink>(data: &D, sink: &mut S) -> bool {
    let known = data.known_menus();
    for &a in known {
        let chosen_a = data.choice(a).expect("known menu");
        for &b in known {
            if a == b {
                continue;
            }
            let shared = a.intersection(b);
            if shared.len() < 2 {
                continue;
            }
            let chosen_b = data.choice(b).expect("known menu");
            let xs = chosen_a.intersection(shared).difference(chosen_b);
            if xs.is_empty() {
                continue;
            }
            let ys = chosen_b.intersection(a);
            for x in xs.iter() {
                for y in ys.iter() {
                    if sink.violation(Witness::Warp { a, b, x, y }).is_break() {
                        return false;
                    }
                }
            }
        }
    }
    !data.is_total() && has_undecided(data)
}

fn has_undecided<D: ChoiceData + ?Sized>(data: &D) -> bool {
    let n = data.universe_size();
    let menus = canonical_non_singletons(n);
    for &m in menus {
        if data.choice(m).is_some() {
            continue;
        }
        for &k in menus {
            if k == m || m.intersection(k).len() < 2 {
                continue;
            }
            let shared = m.intersection(k);
            match data.choice(k) {
                None => return true,
                Some(chosen_k) => {
                    // A = m unknown, B = k known
                    if !shared.difference(chosen_k).is_empty()
                        && !chosen_k.intersection(m).is_empty()
                    {
                        return true;
                    }
                    // A = k known, B = m unknown
                    if !chosen_k.intersection(m).is_empty() {
                        return true;
                    }
                }
            }
        }
    }
    false
}
