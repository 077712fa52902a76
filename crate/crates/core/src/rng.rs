//! Named, reproducible random streams.
//!
//! Every source of randomness in the crate is a ChaCha8 stream derived from
//! one root seed plus a textual stream name, so toggling one component never
//! perturbs the draws seen by another.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Derive the ChaCha seed bytes for `(root, name)`.
fn seed_bytes(root: u64, name: &str) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(root.to_le_bytes());
    hasher.update(b"/");
    hasher.update(name.as_bytes());
    let digest = hasher.finalize();
    let mut seed = [0u8; 32];
    seed.copy_from_slice(&digest);
    seed
}

/// A deterministic stream for the given root seed and stream name.
pub fn stream(root: u64, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::from_seed(seed_bytes(root, name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn same_name_same_stream() {
        let a: Vec<u64> = (0..8).map(|_| stream(7, "data/scene/3").random()).collect();
        let b: Vec<u64> = {
            let mut r = stream(7, "data/scene/3");
            (0..8).map(|_| r.random()).collect()
        };
        // first draw of fresh streams must also agree
        assert_eq!(a[0], stream(7, "data/scene/3").random::<u64>());
        assert_eq!(b[0], a[0]);
    }

    #[test]
    fn different_names_decorrelate() {
        let a: u64 = stream(7, "init/opa").random();
        let b: u64 = stream(7, "init/sup").random();
        let c: u64 = stream(8, "init/opa").random();
        assert_ne!(a, b);
        assert_ne!(a, c);
    }
}
