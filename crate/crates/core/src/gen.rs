//! Seeded random coverings.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covering::{Covering, Universe};

/// Element names for a generated universe: `a..z` up to 26 elements,
/// `x1..xn` beyond.
pub fn element_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (b'a'..).take(n).map(|c| (c as char).to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// `m` random nonempty blocks over `0..n`, given as sorted index lists.
///
/// Each element joins each block with probability 1/2; an empty draw gets
/// one uniformly chosen element. Elements left uncovered are then appended
/// to a uniformly chosen block, so exactly `m` blocks come back. Blocks may
/// repeat.
pub fn random_blocks<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Vec<Vec<usize>> {
    assert!(n >= 1 && m >= 1, "need n >= 1 and m >= 1");
    let mut blocks: Vec<Vec<bool>> = (0..m)
        .map(|_| {
            let mut b: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
            if !b.iter().any(|&x| x) {
                b[rng.gen_range(0..n)] = true;
            }
            b
        })
        .collect();
    for x in 0..n {
        if !blocks.iter().any(|b| b[x]) {
            let j = rng.gen_range(0..m);
            blocks[j][x] = true;
        }
    }
    blocks
        .into_iter()
        .map(|b| (0..n).filter(|&i| b[i]).collect())
        .collect()
}

pub fn random_covering<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Covering {
    let universe = Universe::new(element_names(n)).expect("generated names are valid");
    let blocks = random_blocks(n, m, rng)
        .into_iter()
        .map(|b| universe.set_from_indices(b))
        .collect();
    Covering::from_sets(&universe, blocks).expect("generated blocks cover the universe")
}

/// Covering text for `n` elements and `m` blocks, deterministic in `seed`.
/// Lists all `m` blocks even when some coincide.
pub fn covering_text(n: usize, m: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = element_names(n);
    let mut out = names.join(" ");
    out.push('\n');
    for b in random_blocks(n, m, &mut rng) {
        let line: Vec<&str> = b.iter().map(|&i| names[i].as_str()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Random subset of `universe` with each element included with
/// probability 1/2.
pub fn random_subset<R: Rng + ?Sized>(universe: &Universe, rng: &mut R) -> crate::covering::ElementSet {
    let picked: Vec<usize> = (0..universe.len()).filter(|_| rng.gen_bool(0.5)).collect();
    universe.set_from_indices(picked)
}
