//! Single-spin Metropolis dynamics on the identical Hamiltonian. This is the
//! reference implementation the cluster algorithm is validated against; it
//! shares the lattice geometry and energy function but no update machinery.

use rand::Rng;

use crate::lattice::SpinLattice;

/// One Metropolis sweep: N random single-spin flip attempts.
pub fn metropolis_sweep<R: Rng + ?Sized>(lattice: &mut SpinLattice, rng: &mut R) {
    let n = lattice.spins.len();
    let w = lattice.width;
    for _ in 0..n {
        let site = rng.gen_range(0..n);
        let (x, y) = (site % w, site / w);
        let field = lattice.local_field(x, y);
        let delta_e = 2.0 * lattice.spins[site] as f64 * field as f64;
        if delta_e <= 0.0 || rng.gen::<f64>() < (-lattice.beta * delta_e).exp() {
            lattice.spins[site] = -lattice.spins[site];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;
    use crate::streams::stream_rng;

    #[test]
    fn preserves_frozen_row_and_stays_in_range() {
        let mut rng = stream_rng(41, 0);
        let mut lat = build_lattice(4, &mut rng).unwrap();
        let frozen = lat.frozen_row.clone();
        for _ in 0..100 {
            metropolis_sweep(&mut lat, &mut rng);
        }
        assert_eq!(lat.frozen_row, frozen);
        assert!(lat.spins.iter().all(|&s| s == 1 || s == -1));
    }

    #[test]
    fn relaxes_towards_negative_energy() {
        // at the critical temperature the equilibrium energy per bond is
        // well below zero; a random start must relax downwards
        let mut rng = stream_rng(42, 0);
        let mut lat = build_lattice(8, &mut rng).unwrap();
        let e0 = lat.energy_per_bond();
        for _ in 0..400 {
            metropolis_sweep(&mut lat, &mut rng);
        }
        let e1 = lat.energy_per_bond();
        assert!(e1 < e0, "no relaxation: {e0} -> {e1}");
        assert!(e1 < -0.4, "implausible equilibrium energy {e1}");
    }
}
