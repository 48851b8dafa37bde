//! End-to-end sampling protocol: equilibrate, then alternate decorrelation
//! sweeps with interface traces until the requested number of non-wrapped
//! samples is collected. Replicas run in parallel over independent (seed,
//! stream) pairs and merge deterministically by replica id.

use rayon::prelude::*;
use serde::Serialize;

use crate::cluster::cluster_sweep;
use crate::error::{IsingError, Result};
use crate::interface::{trace_interface, InterfaceSample};
use crate::lattice::build_lattice;
use crate::streams::stream_rng;

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub l: usize,
    pub n_samples: usize,
    pub n_equilibration_sweeps: usize,
    pub n_decorrelation_sweeps: usize,
    pub seed: u64,
}

impl RunConfig {
    /// Defaults: 50 L equilibration sweeps, 2 L decorrelation sweeps.
    pub fn new(l: usize, n_samples: usize, seed: u64) -> Self {
        Self {
            l,
            n_samples,
            n_equilibration_sweeps: 50 * l,
            n_decorrelation_sweeps: 2 * l,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.l < 2 || !(3 * self.l).is_multiple_of(2) {
            return Err(IsingError::Geometry(format!(
                "strip height must be even and at least 2, got {}",
                self.l
            )));
        }
        for (name, v) in [
            ("n_samples", self.n_samples),
            ("n_equilibration_sweeps", self.n_equilibration_sweeps),
            ("n_decorrelation_sweeps", self.n_decorrelation_sweeps),
        ] {
            if v < 1 {
                return Err(IsingError::InvalidConfig(format!("{name} must be at least 1")));
            }
        }
        Ok(())
    }
}

/// One recorded sample with its provenance.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TaggedSample {
    pub replica: u64,
    pub sample_index: usize,
    pub displacement: i64,
    pub wrapped: bool,
}

/// Metadata echoed alongside the samples.
#[derive(Debug, Clone, Serialize)]
pub struct RunMetadata {
    #[serde(rename = "L")]
    pub l: usize,
    pub n_samples: usize,
    pub seeds: Vec<u64>,
    pub wrapped_rate: f64,
    pub autocorrelation_estimate: f64,
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    /// All traced interfaces, wrapped ones included, in collection order.
    pub samples: Vec<TaggedSample>,
    pub metadata: RunMetadata,
}

impl RunOutcome {
    /// The displacement samples entering statistics (non-wrapped only).
    pub fn displacements(&self) -> Vec<f64> {
        self.samples.iter().filter(|s| !s.wrapped).map(|s| s.displacement as f64).collect()
    }
}

/// Integrated autocorrelation time of a series by self-consistent windowing:
/// tau = 1/2 + sum of autocorrelations up to the first window >= 5 tau.
pub fn integrated_autocorrelation(series: &[f64]) -> f64 {
    let n = series.len();
    if n < 8 {
        return 0.5;
    }
    let mean = series.iter().sum::<f64>() / n as f64;
    let var = series.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n as f64;
    if var == 0.0 {
        return 0.5;
    }
    let rho = |t: usize| -> f64 {
        let mut acc = 0.0;
        for i in 0..n - t {
            acc += (series[i] - mean) * (series[i + t] - mean);
        }
        acc / ((n - t) as f64 * var)
    };
    let mut tau = 0.5;
    for t in 1..n / 4 {
        tau += rho(t);
        if t as f64 >= 5.0 * tau {
            break;
        }
    }
    tau.max(0.5)
}

fn run_replica(config: &RunConfig, replica: u64, quota: usize) -> Result<(Vec<TaggedSample>, Vec<f64>)> {
    let mut rng_mc = stream_rng(config.seed, 2 * replica);
    let mut rng_walk = stream_rng(config.seed, 2 * replica + 1);
    let mut lattice = build_lattice(config.l, &mut rng_mc)?;

    for _ in 0..config.n_equilibration_sweeps {
        cluster_sweep(&mut lattice, &mut rng_mc);
    }

    let mut samples = Vec::with_capacity(quota + 4);
    let mut energies = Vec::with_capacity(quota);
    let mut collected = 0usize;
    let mut index = 0usize;
    while collected < quota {
        for _ in 0..config.n_decorrelation_sweeps {
            cluster_sweep(&mut lattice, &mut rng_mc);
        }
        energies.push(lattice.energy_per_bond());
        let s: InterfaceSample = trace_interface(&lattice, &mut rng_walk)?;
        samples.push(TaggedSample {
            replica,
            sample_index: index,
            displacement: s.displacement,
            wrapped: s.wrapped,
        });
        index += 1;
        if !s.wrapped {
            collected += 1;
        }
    }
    Ok((samples, energies))
}

/// Sequential single-replica protocol.
pub fn run_experiment(config: &RunConfig) -> Result<RunOutcome> {
    run_replicas(config, 1)
}

/// The same protocol split over `n_replicas` parallel replicas; the merged
/// output is deterministic in (seed, replica id) regardless of thread count.
pub fn run_replicas(config: &RunConfig, n_replicas: usize) -> Result<RunOutcome> {
    config.validate()?;
    let n_replicas = n_replicas.max(1);
    let base = config.n_samples / n_replicas;
    let rem = config.n_samples % n_replicas;
    let quotas: Vec<usize> =
        (0..n_replicas).map(|r| base + usize::from(r < rem)).collect();

    let results: Vec<Result<(Vec<TaggedSample>, Vec<f64>)>> = quotas
        .par_iter()
        .enumerate()
        .map(|(r, &quota)| run_replica(config, r as u64, quota))
        .collect();

    let mut samples = Vec::with_capacity(config.n_samples + 8);
    let mut taus = Vec::new();
    for res in results {
        let (s, energies) = res?;
        taus.push(integrated_autocorrelation(&energies));
        samples.extend(s);
    }
    let wrapped = samples.iter().filter(|s| s.wrapped).count();
    let metadata = RunMetadata {
        l: config.l,
        n_samples: config.n_samples,
        seeds: (0..n_replicas as u64).map(|r| 2 * r).collect(),
        wrapped_rate: wrapped as f64 / samples.len() as f64,
        autocorrelation_estimate: taus.iter().sum::<f64>() / taus.len() as f64,
    };
    Ok(RunOutcome { samples, metadata })
}
