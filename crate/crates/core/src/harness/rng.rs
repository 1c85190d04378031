use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The RNG for one sample. It depends only on the master seed, the stream
/// label and the sample index, never on which worker draws it.
pub fn sample_rng(seed: u64, stream: &str, index: u64) -> ChaCha8Rng {
    let key = splitmix(splitmix(seed ^ fnv1a(stream)).wrapping_add(index));
    ChaCha8Rng::seed_from_u64(key)
}
