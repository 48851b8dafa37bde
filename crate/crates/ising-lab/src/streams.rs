//! Reproducible random streams, one PCG-64 generator per (seed, stream id).

use rand_pcg::Pcg64;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn stream_rng(seed: u64, stream: u64) -> Pcg64 {
    let mut s = seed;
    let lo = splitmix64(&mut s);
    let hi = splitmix64(&mut s);
    let state = (hi as u128) << 64 | lo as u128;
    Pcg64::new(state, stream as u128)
}
