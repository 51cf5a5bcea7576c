use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{GroupModel, Representation};
use crate::tree::find_moving_string;

/// Outcome of sampling the kernel of a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub samples: usize,
    /// Samples certified non-trivial in the model.
    pub nontrivial: usize,
    /// Longest witness found.
    pub max_witness_len: usize,
    /// Descriptions of non-trivial samples that fixed every string up to
    /// the depth bound.
    pub failures: Vec<String>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Draws `samples` random elements; every one that is non-trivial in the
/// model must move some string of length at most `max_depth`.
pub fn fcore_witness_check<M: GroupModel>(
    rep: &Representation<M>,
    samples: usize,
    max_depth: usize,
    seed: u64,
) -> WitnessReport {
    let model = rep.model();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = WitnessReport {
        samples,
        nontrivial: 0,
        max_witness_len: 0,
        failures: Vec::new(),
    };
    for _ in 0..samples {
        let g = model.random(&mut rng);
        if !model.is_nontrivial(&g) {
            continue;
        }
        report.nontrivial += 1;
        match find_moving_string(rep, &g, max_depth) {
            Some(s) => report.max_witness_len = report.max_witness_len.max(s.len()),
            None => report.failures.push(model.describe(&g)),
        }
    }
    report
}
