//! Interface tracing on the dual lattice.
//!
//! The phase boundary is followed as a walk over dual edges, each crossing
//! one unsatisfied bond (eta s_i s_j = -1, a domain wall). Around any
//! plaquette the product of eta s_i s_j over the four bonds is +1 (the seam
//! contributes two sign flips), so every dual vertex has even wall degree:
//! two at a through-point, four at a checkerboard plaquette. A degree-four
//! vertex is a branching point; the two non-crossing resolutions (pair the
//! entering strand with its left or right neighbor) are chosen by a fair
//! coin on first visit and remembered, so a strand revisiting the vertex
//! takes the complementary pair and strands never cross. The walk starts at
//! the sign defect in the middle of the frozen row, ends on reaching the
//! free top boundary, and is discarded as wrapped when it returns to its
//! starting dual vertex through the antiperiodic seam.

use std::collections::HashMap;

use rand::Rng;

use crate::error::{IsingError, Result};
use crate::lattice::SpinLattice;

/// One traced interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InterfaceSample {
    /// Signed lateral displacement in lattice units; seam crossings keep
    /// accumulating, so a full wrap contributes a whole width W.
    pub displacement: i64,
    /// The walk returned to its starting dual vertex; no displacement is
    /// recorded and the sample is excluded from statistics.
    pub wrapped: bool,
}

/// Stub of a dual vertex: the direction of the dual edge leaving it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stub {
    N,
    E,
    S,
    W,
}

impl Stub {
    fn opposite(self) -> Stub {
        match self {
            Stub::N => Stub::S,
            Stub::S => Stub::N,
            Stub::E => Stub::W,
            Stub::W => Stub::E,
        }
    }
}

/// Is the bond crossed by leaving dual vertex (cx, cy) through `stub` a
/// domain wall? The dual vertex sits at the lattice corner (cx - 1/2,
/// cy - 1/2); cx is cyclic, cy = 0 borders the frozen row, cy = L is the
/// free top edge. The four incident bonds are the four bonds of the
/// primal plaquette centered at the vertex.
fn stub_is_wall(lat: &SpinLattice, cx: usize, cy: usize, stub: Stub) -> bool {
    let w = lat.width;
    let left_col = (cx + w - 1) % w;
    let spin_at = |x: usize, y: isize| -> i8 {
        if y < 0 {
            lat.frozen_row[x]
        } else {
            lat.spin(x, y as usize)
        }
    };
    match stub {
        // horizontal bond (left_col, cy) - (cx, cy), seam sign when cx = 0
        Stub::N => {
            let eta = if cx == 0 { lat.seam_sign } else { 1 };
            eta * spin_at(left_col, cy as isize) * spin_at(cx, cy as isize) == -1
        }
        Stub::S => {
            let eta = if cx == 0 { lat.seam_sign } else { 1 };
            eta * spin_at(left_col, cy as isize - 1) * spin_at(cx, cy as isize - 1) == -1
        }
        // vertical bond between rows cy - 1 and cy at the column east/west
        Stub::E => spin_at(cx, cy as isize - 1) * spin_at(cx, cy as isize) == -1,
        Stub::W => spin_at(left_col, cy as isize - 1) * spin_at(left_col, cy as isize) == -1,
    }
}

/// Follow the interface from the frozen-row defect to the free boundary.
pub fn trace_interface<R: Rng + ?Sized>(
    lattice: &SpinLattice,
    rng: &mut R,
) -> Result<InterfaceSample> {
    let w = lattice.width;
    let h = lattice.height;
    let start = (w / 2, 0usize);
    let budget = 100 * w * h;

    let (mut cx, mut cy) = start;
    // entered the start vertex from below, through the frozen defect
    let mut entry = Stub::S;
    let mut displacement = 0i64;
    // first-visit resolution of branching vertices: true pairs {S,W}/{N,E},
    // false pairs {S,E}/{N,W}
    let mut pairings: HashMap<(usize, usize), bool> = HashMap::new();

    for _ in 0..budget {
        let walls = [
            stub_is_wall(lattice, cx, cy, Stub::N),
            stub_is_wall(lattice, cx, cy, Stub::E),
            stub_is_wall(lattice, cx, cy, Stub::S),
            stub_is_wall(lattice, cx, cy, Stub::W),
        ];
        let degree = walls.iter().filter(|&&b| b).count();
        debug_assert!(
            degree == 2 || degree == 4,
            "wall parity violated at ({cx},{cy}): {walls:?}"
        );
        debug_assert!(walls[stub_index(entry)], "entry stub is not a wall at ({cx},{cy})");

        let exit = if degree == 2 {
            [Stub::N, Stub::E, Stub::S, Stub::W]
                .into_iter()
                .find(|&s| s != entry && walls[stub_index(s)])
                .expect("second wall stub")
        } else {
            let s_with_w = *pairings.entry((cx, cy)).or_insert_with(|| rng.gen_bool(0.5));
            partner(entry, s_with_w)
        };

        if exit == Stub::S && cy == 0 {
            // the strand closes downward through the frozen-row defect: it
            // circled the cylinder and came back to its starting vertex
            debug_assert_eq!((cx, cy), start);
            return Ok(InterfaceSample { displacement: 0, wrapped: true });
        }

        match exit {
            Stub::N => cy += 1,
            Stub::S => cy -= 1,
            Stub::E => {
                cx = (cx + 1) % w;
                displacement += 1;
            }
            Stub::W => {
                cx = (cx + w - 1) % w;
                displacement -= 1;
            }
        }
        entry = exit.opposite();

        if cy == h {
            return Ok(InterfaceSample { displacement, wrapped: false });
        }
    }
    Err(IsingError::MalformedConfiguration { budget })
}

fn stub_index(s: Stub) -> usize {
    match s {
        Stub::N => 0,
        Stub::E => 1,
        Stub::S => 2,
        Stub::W => 3,
    }
}

/// Non-crossing partner of a stub under the chosen pairing.
fn partner(stub: Stub, s_with_w: bool) -> Stub {
    if s_with_w {
        match stub {
            Stub::S => Stub::W,
            Stub::W => Stub::S,
            Stub::N => Stub::E,
            Stub::E => Stub::N,
        }
    } else {
        match stub {
            Stub::S => Stub::E,
            Stub::E => Stub::S,
            Stub::N => Stub::W,
            Stub::W => Stub::N,
        }
    }
}
