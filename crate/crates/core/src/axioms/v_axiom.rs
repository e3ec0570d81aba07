use super::{Sink, Witness};
use crate::correspondence::ChoiceData;
use crate::menu::canonical_menus;
use crate::relations::{v_maximal, v_relation};

pub(super) fn scan<D: ChoiceData + ?Sized, S: Sink>(data: &D, sink: &mut S) -> bool {
    if !data.is_total() {
        return true;
    }
    let v = v_relation(data);
    for &menu in canonical_menus(data.universe_size()) {
        let actual = data.choice(menu).expect("total data");
        let expected = v_maximal(menu, &v);
        if expected != actual {
            let w = Witness::VAxiom {
                menu,
                expected,
                actual,
            };
            if sink.violation(w).is_break() {
                break;
            }
        }
    }
    false
}
