use super::{and, is_singleton_of, Sink, Witness};
use crate::correspondence::ChoiceData;
use crate::menu::Menu;

/// Instances in `(x, y, z)` order. `y = z` is a tautology and `y = x`
/// has contradictory premises, so only distinct triples can fail.
pub(super) fn scan<D: ChoiceData + ?Sized, S: Sink>(data: &D, sink: &mut S) -> bool {
    let n = data.universe_size();
    let mut undetermined = false;
    for x in 0..n {
        for y in 0..n {
            if y == x {
                continue;
            }
            let conclusion = is_singleton_of(data.choice(Menu::pair(x, y)), x);
            if conclusion == Some(true) {
                continue;
            }
            for z in 0..n {
                if z == x || z == y {
                    continue;
                }
                let premise = and(
                    data.chosen(z, Menu::pair(z, y)),
                    is_singleton_of(data.choice(Menu::pair(x, z)), x),
                );
                match (premise, conclusion) {
                    (Some(false), _) => {}
                    (Some(true), Some(false)) => {
                        if sink.violation(Witness::Tau { x, y, z }).is_break() {
                            return undetermined;
                        }
                    }
                    _ => undetermined = true,
                }
            }
        }
    }
    undetermined
}
