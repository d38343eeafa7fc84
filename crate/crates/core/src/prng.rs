//! Deterministic pseudo-randomness for the verification suites.
//!
//! All randomness flows from a single 64-bit seed through SplitMix64
//! (Steele, Lea, Flood 2014; the reference `splitmix64` generator). The
//! generator is tiny, has no platform-dependent behavior, and makes every
//! reported counterexample replayable: a suite derives one independent
//! stream per trial with [`SplitMix64::for_trial`].

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Stream for trial `t` under `seed`: the state is offset by
    /// `(t + 1) * 0x9E3779B97F4A7C15` so trials never share a stream.
    pub fn for_trial(seed: u64, trial: u64) -> Self {
        SplitMix64::new(seed.wrapping_add(trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `lo..=hi`. The modulo bias is irrelevant for
    /// the small ranges used by the suites and keeps the stream portable.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    /// Random scalar `p/q` with `|p| <= max_num` and `1 <= q <= max_den`.
    pub fn rat<T: crate::scalar::Scalar>(&mut self, max_num: i64, max_den: i64) -> T {
        let p = self.int_in(-max_num, max_num);
        let q = self.int_in(1, max_den);
        crate::scalar::ratio(p, q)
    }

    /// Random nonzero integer scalar in `-bound..=bound`.
    pub fn nonzero_int<T: crate::scalar::Scalar>(&mut self, bound: i64) -> T {
        loop {
            let v = self.int_in(-bound, bound);
            if v != 0 {
                return crate::scalar::int(v);
            }
        }
    }
}
