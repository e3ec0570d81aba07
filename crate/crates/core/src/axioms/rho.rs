use super::{and, Direction, Sink, Witness};
use crate::correspondence::ChoiceData;
use crate::menu::{canonical_subsets, Menu};

/// Instances in `(x, y, B)` order with `B` running over every subset, the
/// empty set first. Menus that coincide for particular `B` are handled so
/// that tautological instances never count as undetermined.
pub(super) fn scan<D: ChoiceData + ?Sized, S: Sink>(data: &D, sink: &mut S) -> bool {
    let n = data.universe_size();
    let subsets = canonical_subsets(n);
    let mut undetermined = false;
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let pair = Menu::pair(x, y);
            let in_pair = data.chosen(x, pair);
            for &b in subsets {
                let with_x = b.with(x);
                let with_xy = with_x.with(y);
                if with_xy == pair {
                    // B ⊆ {x,y}: either B ∪ {x} is {x} or both sides read
                    // the same menu.
                    continue;
                }
                let in_big = data.chosen(x, with_xy);
                let direction = if b.contains(y) {
                    // B ∪ {x} = B ∪ {x,y}, so the instance reduces to
                    // x ∈ c(B ∪ {x,y}) ⇒ x ∈ c({x,y}).
                    match (in_big, in_pair) {
                        (Some(true), Some(false)) => Direction::Backward,
                        (Some(false), _) | (_, Some(true)) => continue,
                        _ => {
                            undetermined = true;
                            continue;
                        }
                    }
                } else {
                    match (and(in_pair, data.chosen(x, with_x)), in_big) {
                        (Some(true), Some(false)) => Direction::Forward,
                        (Some(false), Some(true)) => Direction::Backward,
                        (Some(_), Some(_)) => continue,
                        _ => {
                            undetermined = true;
                            continue;
                        }
                    }
                };
                if sink
                    .violation(Witness::Rho { x, y, b, direction })
                    .is_break()
                {
                    return undetermined;
                }
            }
        }
    }
    undetermined
}
