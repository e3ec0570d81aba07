use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::correspondence::{check_size, ChoiceCorrespondence};
use crate::error::Result;
use crate::menu::canonical_non_singletons;

/// `count` random correspondences on `n` alternatives.
///
/// Each menu's choice is drawn uniformly from its nonempty subsets,
/// independently across menus, in canonical menu order. The same seed
/// always yields the same output.
pub fn sample(n: usize, count: usize, seed: u64) -> Result<Vec<ChoiceCorrespondence>> {
    check_size(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(|_| sample_one(n, &mut rng)).collect())
}

pub fn sample_one<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ChoiceCorrespondence {
    let mut c = ChoiceCorrespondence::scratch(n);
    for &menu in canonical_non_singletons(n) {
        let rank = rng.random_range(1..(1u32 << menu.len()));
        c.set_unchecked(menu, menu.deposit(rank));
    }
    c
}
