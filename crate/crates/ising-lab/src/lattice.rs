//! The critical Ising strip: L rows by W = 3L columns, a frozen boundary row
//! below row 0 (minus on the left half, plus on the right), free top row,
//! and an antiperiodic seam joining column W-1 back to column 0 so the two
//! boundary phases connect consistently around the cylinder.

use rand::Rng;

use crate::error::{IsingError, Result};

/// Inverse critical temperature in units J = 1: log(1 + sqrt 2) / 2.
pub fn critical_beta() -> f64 {
    0.5 * (1.0 + std::f64::consts::SQRT_2).ln()
}

#[derive(Debug, Clone)]
pub struct SpinLattice {
    pub height: usize,
    pub width: usize,
    /// Row-major spins, index x + width * y, y = 0 adjacent to the frozen row.
    pub spins: Vec<i8>,
    /// The boundary row below y = 0: -1 for x < W/2, +1 for x >= W/2.
    pub frozen_row: Vec<i8>,
    /// Coupling sign between column W-1 and column 0.
    pub seam_sign: i8,
    pub beta: f64,
}

/// One nearest-neighbor bond; `lower_frozen` marks bonds anchored in the
/// frozen boundary row.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Bond {
    pub a: usize,
    pub b: usize,
    pub eta: i8,
    pub frozen_a: bool,
}

/// Random initial configuration at the critical temperature.
pub fn build_lattice<R: Rng + ?Sized>(l: usize, rng: &mut R) -> Result<SpinLattice> {
    if l < 2 {
        return Err(IsingError::Geometry(format!("strip height must be at least 2, got {l}")));
    }
    let width = 3 * l;
    if !width.is_multiple_of(2) {
        return Err(IsingError::Geometry(format!(
            "width 3L = {width} must be even so the frozen row splits in equal halves"
        )));
    }
    let spins = (0..width * l).map(|_| if rng.gen_bool(0.5) { 1i8 } else { -1 }).collect();
    let frozen_row = (0..width).map(|x| if x < width / 2 { -1i8 } else { 1 }).collect();
    Ok(SpinLattice {
        height: l,
        width,
        spins,
        frozen_row,
        seam_sign: -1,
        beta: critical_beta(),
    })
}

impl SpinLattice {
    #[inline]
    pub fn spin(&self, x: usize, y: usize) -> i8 {
        self.spins[x + self.width * y]
    }

    #[inline]
    pub(crate) fn idx(&self, x: usize, y: usize) -> usize {
        x + self.width * y
    }

    /// All dynamic bonds: vertical interior, vertical to the frozen row,
    /// horizontal including the antiperiodic seam. The top row is free.
    pub(crate) fn for_each_bond(&self, mut f: impl FnMut(Bond)) {
        let (w, h) = (self.width, self.height);
        for y in 0..h {
            for x in 0..w {
                // vertical bond upward from (x, y)
                if y + 1 < h {
                    f(Bond { a: self.idx(x, y), b: self.idx(x, y + 1), eta: 1, frozen_a: false });
                }
                // horizontal bond to the right neighbor, seam at x = w - 1
                let (xr, eta) = if x + 1 < w { (x + 1, 1) } else { (0, self.seam_sign) };
                f(Bond { a: self.idx(x, y), b: self.idx(xr, y), eta, frozen_a: false });
            }
        }
        for x in 0..w {
            // frozen-row anchor bonds; `a` indexes the frozen row
            f(Bond { a: x, b: self.idx(x, 0), eta: 1, frozen_a: true });
        }
    }

    pub fn n_bonds(&self) -> usize {
        let (w, h) = (self.width, self.height);
        w * (h - 1) + w * h + w
    }

    /// Total energy -sum eta s_i s_j over all dynamic bonds (J = 1).
    pub fn energy(&self) -> f64 {
        let mut e = 0i64;
        self.for_each_bond(|bond| {
            let sa = if bond.frozen_a { self.frozen_row[bond.a] } else { self.spins[bond.a] };
            let sb = self.spins[bond.b];
            e -= (bond.eta * sa * sb) as i64;
        });
        e as f64
    }

    pub fn energy_per_bond(&self) -> f64 {
        self.energy() / self.n_bonds() as f64
    }

    /// Sum of eta * s_neighbor over the neighbors of (x, y); the local field
    /// entering single-spin updates. Top row has no upward neighbor.
    pub(crate) fn local_field(&self, x: usize, y: usize) -> i32 {
        let w = self.width;
        let mut field = 0i32;
        // below: dynamic row or the frozen row
        field += if y == 0 { self.frozen_row[x] as i32 } else { self.spin(x, y - 1) as i32 };
        if y + 1 < self.height {
            field += self.spin(x, y + 1) as i32;
        }
        // left neighbor, seam when x = 0
        field += if x == 0 {
            (self.seam_sign * self.spin(w - 1, y)) as i32
        } else {
            self.spin(x - 1, y) as i32
        };
        // right neighbor, seam when x = w - 1
        field += if x + 1 == w {
            (self.seam_sign * self.spin(0, y)) as i32
        } else {
            self.spin(x + 1, y) as i32
        };
        field
    }
}
