// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Portable seeded pseudo-random numbers for the graph generators.
//!
//! The generator is the 64-bit linear congruential recurrence
//!
//! ```text
//! state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//! ```
//!
//! seeded with `state = seed`. Each draw advances the state once and returns
//! it. A uniform index below `bound` is `((state >> 32) * bound) >> 32`,
//! which only uses the high 32 bits. Any implementation following these two
//! rules reproduces the same graphs from the same seeds.

#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state
    }

    /// Uniform index in `0..bound`; `bound` must be in `1..2^32`.
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0 && (bound as u64) < (1 << 32));
        (((self.next_u64() >> 32) * bound as u64) >> 32) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_draws_are_pinned() {
        let mut r = Lcg64::new(0);
        assert_eq!(r.next_u64(), INCREMENT);
        assert_eq!(
            r.next_u64(),
            INCREMENT.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT)
        );
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = Lcg64::new(42);
        for bound in 1..200 {
            assert!(r.below(bound) < bound);
        }
    }
}
