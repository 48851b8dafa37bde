//! Swendsen–Wang cluster dynamics with frozen-boundary pinning and signed
//! couplings: a bond activates with probability 1 - e^{-2 beta} when it is
//! satisfied (eta s_i s_j = +1); clusters of activated bonds flip with
//! probability 1/2 unless they contain a frozen spin.

use rand::Rng;

use crate::lattice::SpinLattice;

struct DisjointSet {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self { parent: (0..n as u32).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra as usize].cmp(&self.rank[rb as usize]) {
            std::cmp::Ordering::Less => self.parent[ra as usize] = rb,
            std::cmp::Ordering::Greater => self.parent[rb as usize] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb as usize] = ra;
                self.rank[ra as usize] += 1;
            }
        }
    }
}

/// One Swendsen–Wang update at the lattice's own (critical) temperature.
pub fn cluster_sweep<R: Rng + ?Sized>(lattice: &mut SpinLattice, rng: &mut R) {
    let p = 1.0 - (-2.0 * lattice.beta).exp();
    cluster_sweep_with_p(lattice, p, rng);
}

/// Bond-activation sweep at an explicit activation probability (the beta -> 0
/// and beta -> infinity limits are exercised this way in tests).
pub(crate) fn cluster_sweep_with_p<R: Rng + ?Sized>(
    lattice: &mut SpinLattice,
    p: f64,
    rng: &mut R,
) {
    let n = lattice.spins.len();
    // one extra node pins every cluster that touches the frozen row
    let pin = n as u32;
    let mut sets = DisjointSet::new(n + 1);

    lattice.for_each_bond(|bond| {
        let (sa, node_a) = if bond.frozen_a {
            (lattice.frozen_row[bond.a], pin)
        } else {
            (lattice.spins[bond.a], bond.a as u32)
        };
        let sb = lattice.spins[bond.b];
        if bond.eta * sa * sb == 1 && rng.gen::<f64>() < p {
            sets.union(node_a, bond.b as u32);
        }
    });

    let pin_root = sets.find(pin);
    // one fair coin per cluster root, drawn in site order
    let mut decision: Vec<u8> = vec![2; n + 1]; // 2 = undecided
    decision[pin_root as usize] = 0;
    for site in 0..n {
        let root = sets.find(site as u32) as usize;
        if decision[root] == 2 {
            decision[root] = u8::from(rng.gen_bool(0.5));
        }
        if decision[root] == 1 {
            lattice.spins[site] = -lattice.spins[site];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;
    use crate::streams::stream_rng;

    /// Configuration matching the frozen boundary: minus half, plus half.
    fn phase_split(lat: &mut SpinLattice) {
        let w = lat.width;
        for y in 0..lat.height {
            for x in 0..w {
                lat.spins[x + w * y] = if x < w / 2 { -1 } else { 1 };
            }
        }
    }

    #[test]
    fn full_activation_freezes_the_anchored_phases() {
        // p = 1: every satisfied bond activates, the two frozen-anchored
        // phases form pinned clusters and the configuration never changes
        let mut rng = stream_rng(10, 0);
        let mut lat = build_lattice(4, &mut rng).unwrap();
        phase_split(&mut lat);
        let before = lat.spins.clone();
        for _ in 0..20 {
            cluster_sweep_with_p(&mut lat, 1.0, &mut rng);
        }
        assert_eq!(lat.spins, before);
    }

    #[test]
    fn zero_activation_gives_symmetric_singletons() {
        // p = 0: every free spin is its own cluster and flips fairly
        let mut magnetization = 0i64;
        let mut total = 0i64;
        for seed in 0..400 {
            let mut rng = stream_rng(seed, 0);
            let mut lat = build_lattice(2, &mut rng).unwrap();
            cluster_sweep_with_p(&mut lat, 0.0, &mut rng);
            magnetization += lat.spins.iter().map(|&s| s as i64).sum::<i64>();
            total += lat.spins.len() as i64;
        }
        // binomial: |mean| within 3 sigma of zero
        let sigma = (total as f64).sqrt();
        assert!(
            (magnetization as f64).abs() <= 3.0 * sigma,
            "magnetization {magnetization} of {total} spins"
        );
    }

    #[test]
    fn frozen_row_is_bit_identical_after_sweeps() {
        let mut rng = stream_rng(77, 0);
        let mut lat = build_lattice(4, &mut rng).unwrap();
        let frozen = lat.frozen_row.clone();
        for _ in 0..200 {
            cluster_sweep(&mut lat, &mut rng);
        }
        assert_eq!(lat.frozen_row, frozen);
    }

    #[test]
    fn sweeps_are_deterministic_given_streams() {
        let run = || {
            let mut rng = stream_rng(5, 9);
            let mut lat = build_lattice(4, &mut rng).unwrap();
            for _ in 0..50 {
                cluster_sweep(&mut lat, &mut rng);
            }
            lat.spins
        };
        assert_eq!(run(), run());
    }
}
