use serde::Serialize;

use crate::correspondence::ChoiceData;
use crate::menu::Menu;
use crate::universe::Universe;

/// `z` is a reference point for choosing `x` over `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ReferencePoint {
    pub z: usize,
    pub x: usize,
    pub y: usize,
    /// `x ∈ c({x,y,z})` but `x ∉ c({x,y})`.
    pub promotes: bool,
    /// `y ∈ c({x,y})` but `{x,y} ∩ c({x,y,z}) = {x}`.
    pub reverses: bool,
}

impl ReferencePoint {
    pub fn to_json(&self, u: &Universe) -> ReferencePointJson {
        ReferencePointJson {
            z: u.label(self.z).to_string(),
            x: u.label(self.x).to_string(),
            y: u.label(self.y).to_string(),
            promotes: self.promotes,
            reverses: self.reverses,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReferencePointJson {
    pub z: String,
    pub x: String,
    pub y: String,
    pub promotes: bool,
    pub reverses: bool,
}

/// Every triple of distinct `(z, x, y)` where adding `z` to `{x,y}` lets `x`
/// beat `y`, in `(z, x, y)` index order.
///
/// On partial data a triple is reported only when both `{x,y}` and
/// `{x,y,z}` are known; with either unknown some completion makes it false.
pub fn detect_reference_points<D: ChoiceData + ?Sized>(data: &D) -> Vec<ReferencePoint> {
    let n = data.universe_size();
    let mut found = Vec::new();
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                if x == y || z == x || z == y {
                    continue;
                }
                let pair = Menu::pair(x, y);
                let (Some(from_pair), Some(from_triple)) =
                    (data.choice(pair), data.choice(pair.with(z)))
                else {
                    continue;
                };
                let promotes = from_triple.contains(x) && !from_pair.contains(x);
                let reverses =
                    from_pair.contains(y) && from_triple.intersection(pair) == Menu::singleton(x);
                if promotes || reverses {
                    found.push(ReferencePoint {
                        z,
                        x,
                        y,
                        promotes,
                        reverses,
                    });
                }
            }
        }
    }
    found
}
