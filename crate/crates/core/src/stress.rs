//! Seeded construction-and-verification campaigns.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::generators::gen_alpha2;
use crate::graph::Multigraph;
use crate::immersion::{chi_alpha2, construct_immersion_audited, verify_immersion};
use crate::io::emit_edge_list;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Instance {
    pub index: u64,
    pub n: usize,
    pub density: f64,
    pub seed: u64,
}

impl Instance {
    /// The `index`-th instance of the campaign seeded by `seed`.
    pub fn nth(seed: u64, index: u64, n_max: usize) -> Instance {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        r.set_stream(index);
        Instance {
            index,
            n: r.gen_range(1..=n_max.max(1)),
            density: r.gen_range(0.0..=1.0),
            seed: r.gen(),
        }
    }

    pub fn graph(&self) -> Multigraph {
        gen_alpha2(self.n, self.density, self.seed)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub instance: Instance,
    pub graph: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CampaignReport {
    pub seed: u64,
    pub n_max: usize,
    pub total: usize,
    pub verified: usize,
    pub audit_violations: usize,
    pub failures: Vec<Counterexample>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.verified == self.total && self.audit_violations == 0
    }
}

/// Runs `count` instances in parallel; each must construct, verify with
/// `t = χ`, and pass every structural audit.
pub fn run_campaign(n_max: usize, count: u64, seed: u64) -> CampaignReport {
    let outcomes: Vec<(bool, usize, Option<Counterexample>)> = (0..count)
        .into_par_iter()
        .map(|index| {
            let instance = Instance::nth(seed, index, n_max);
            let g = instance.graph();
            let fail = |error: String| Counterexample {
                instance: instance.clone(),
                graph: emit_edge_list(&g),
                error,
            };
            let chi = match chi_alpha2(&g) {
                Ok((chi, _)) => chi,
                Err(e) => return (false, 0, Some(fail(e.to_string()))),
            };
            match construct_immersion_audited(&g) {
                Err(e) => (false, 0, Some(fail(e.to_string()))),
                Ok((imm, log)) => {
                    let cert = verify_immersion(&g, &imm, chi);
                    let violations = log.violations.len();
                    if !cert.accepted {
                        let v = cert.violation.map(|v| v.to_string()).unwrap_or_default();
                        (false, violations, Some(fail(v)))
                    } else if violations > 0 {
                        (true, violations, Some(fail(log.violations.join("; "))))
                    } else {
                        (true, 0, None)
                    }
                }
            }
        })
        .collect();
    CampaignReport {
        seed,
        n_max,
        total: outcomes.len(),
        verified: outcomes.iter().filter(|o| o.0).count(),
        audit_violations: outcomes.iter().map(|o| o.1).sum(),
        failures: outcomes.into_iter().filter_map(|o| o.2).collect(),
    }
}
