//! Cross-dynamics agreement and protocol-level statistics.

use ising_lab::*;

/// Standard error of the mean of a correlated series by batch means.
fn batch_mean_se(series: &[f64], n_batches: usize) -> (f64, f64) {
    let batch = series.len() / n_batches;
    let means: Vec<f64> = (0..n_batches)
        .map(|b| {
            let chunk = &series[b * batch..(b + 1) * batch];
            chunk.iter().sum::<f64>() / batch as f64
        })
        .collect();
    let mean = means.iter().sum::<f64>() / n_batches as f64;
    let var =
        means.iter().map(|m| (m - mean) * (m - mean)).sum::<f64>() / (n_batches - 1) as f64;
    (mean, (var / n_batches as f64).sqrt())
}

#[test]
fn cluster_and_metropolis_sample_the_same_energy() {
    // both dynamics target the same Boltzmann measure on the same
    // Hamiltonian; compare mean energy per bond within 3 combined sigma
    let l = 4;
    let sweeps = 20_000;
    let burn = 2_000;

    let mut rng_c = streams::stream_rng(11, 0);
    let mut lat_c = build_lattice(l, &mut rng_c).unwrap();
    let mut rng_m = streams::stream_rng(11, 1);
    let mut lat_m = build_lattice(l, &mut rng_m).unwrap();

    for _ in 0..burn {
        cluster_sweep(&mut lat_c, &mut rng_c);
        metropolis_sweep(&mut lat_m, &mut rng_m);
    }
    let mut e_c = Vec::with_capacity(sweeps);
    let mut e_m = Vec::with_capacity(sweeps);
    for _ in 0..sweeps {
        cluster_sweep(&mut lat_c, &mut rng_c);
        e_c.push(lat_c.energy_per_bond());
        metropolis_sweep(&mut lat_m, &mut rng_m);
        e_m.push(lat_m.energy_per_bond());
    }
    let (mc, sc) = batch_mean_se(&e_c, 50);
    let (mm, sm) = batch_mean_se(&e_m, 50);
    let combined = (sc * sc + sm * sm).sqrt();
    assert!(
        (mc - mm).abs() <= 3.0 * combined,
        "cluster {mc} +- {sc} vs metropolis {mm} +- {sm}"
    );
}

/// Asymptotic two-sample KS p-value: p = 2 sum (-1)^{k-1} e^{-2 k^2 lambda^2}
/// with lambda = D sqrt(mn/(m+n)).
fn ks_two_sample_pvalue(mut a: Vec<f64>, mut b: Vec<f64>) -> f64 {
    a.sort_by(|x, y| x.total_cmp(y));
    b.sort_by(|x, y| x.total_cmp(y));
    let (m, n) = (a.len(), b.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < m && j < n {
        let x = a[i].min(b[j]);
        while i < m && a[i] <= x {
            i += 1;
        }
        while j < n && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / m as f64 - j as f64 / n as f64).abs());
    }
    let lambda = d * ((m * n) as f64 / (m + n) as f64).sqrt();
    let mut p = 0.0;
    for k in 1..=100 {
        let term = 2.0 * (-2.0 * (k as f64 * lambda).powi(2)).exp();
        p += if k % 2 == 1 { term } else { -term };
    }
    p.clamp(0.0, 1.0)
}

#[test]
fn energy_histograms_agree_between_dynamics() {
    // two-sample comparison on batch means (approximately independent);
    // the p > 0.01 threshold is fixed a priori
    let l = 4;
    let sweeps = 40_000;
    let burn = 2_000;
    let mut rng_c = streams::stream_rng(21, 0);
    let mut lat_c = build_lattice(l, &mut rng_c).unwrap();
    let mut rng_m = streams::stream_rng(21, 1);
    let mut lat_m = build_lattice(l, &mut rng_m).unwrap();
    for _ in 0..burn {
        cluster_sweep(&mut lat_c, &mut rng_c);
        metropolis_sweep(&mut lat_m, &mut rng_m);
    }
    let (mut e_c, mut e_m) = (Vec::new(), Vec::new());
    for _ in 0..sweeps {
        cluster_sweep(&mut lat_c, &mut rng_c);
        e_c.push(lat_c.energy_per_bond());
        metropolis_sweep(&mut lat_m, &mut rng_m);
        e_m.push(lat_m.energy_per_bond());
    }
    let batch = |xs: &[f64]| -> Vec<f64> {
        let nb = 200;
        let len = xs.len() / nb;
        (0..nb).map(|b| xs[b * len..(b + 1) * len].iter().sum::<f64>() / len as f64).collect()
    };
    let p = ks_two_sample_pvalue(batch(&e_c), batch(&e_m));
    assert!(p > 0.01, "two-sample p-value {p}");
}

#[test]
fn wrapped_rate_stays_small() {
    let config = RunConfig::new(10, 4000, 31);
    let out = run_replicas(&config, 2).unwrap();
    assert!(
        out.metadata.wrapped_rate < 1e-3,
        "wrapped rate {} too high",
        out.metadata.wrapped_rate
    );
    assert!(out.metadata.autocorrelation_estimate >= 0.5);
}

#[test]
fn displacement_scale_grows_with_lattice_size() {
    // the reduced variable x/L has an L-independent law, so the raw spread
    // must grow roughly linearly in L
    let spread = |l: usize| {
        let out = run_experiment(&RunConfig::new(l, 400, 5)).unwrap();
        let xs = out.displacements();
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        (xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n).sqrt()
    };
    let s6 = spread(6);
    let s12 = spread(12);
    assert!(s12 > 1.5 * s6, "spread did not scale: {s6} -> {s12}");
}
