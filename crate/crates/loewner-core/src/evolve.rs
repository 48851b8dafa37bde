//! Point evolution and fate classification.
//!
//! The image f_t(z) = g_t(z) - xi_t of a point determines its fate: it tends
//! to 0 when the point is swallowed, to -infinity when the point ends left
//! of the trace and to +infinity on the right. The discrete hull (a union of
//! vertical slits) swallows only a measure-zero set, so for kappa > 4 the
//! absorbing event is recovered from the image dynamics: an image that has
//! collapsed onto the real axis is absorbed the first time the driving jumps
//! across it. For kappa <= 4 no interior or boundary point is absorbed and
//! the crossing rule stays off.

use num_complex::Complex64;

use crate::chain::MapChain;
use crate::error::{LoewnerError, Result};
use crate::params::SleParams;
use crate::slit_map::{elementary_map_eps, SlitOutcome};

/// Outcome of evolving one point to the chain horizon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PointFate {
    /// Absorbed into the hull at (approximately) the given time.
    Swallowed { tau: f64 },
    Left,
    Right,
    /// Horizon exhausted before the fate was decided.
    Undecided { final_image: Complex64 },
}

/// State of a point at a checkpoint time, for stopped-field statistics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PointState {
    /// Still evolving; carries the recentered image f_t(z).
    Alive(Complex64),
    Swallowed,
    Left,
    Right,
}

/// Band below which an image is considered collapsed onto the real axis,
/// enabling the absorbing crossing rule. Scales with the per-step driving
/// jump sqrt(kappa h).
fn collapse_band(kappa: f64, h: f64) -> f64 {
    0.125 * (kappa * h).sqrt()
}

fn stopped_state(fate: PointFate) -> PointState {
    match fate {
        PointFate::Swallowed { .. } => PointState::Swallowed,
        PointFate::Left => PointState::Left,
        PointFate::Right => PointState::Right,
        PointFate::Undecided { final_image } => PointState::Alive(final_image),
    }
}

/// Evolve a point through the chain, recording its state at the requested
/// step counts (`checkpoints`, sorted ascending; checkpoint k means "after
/// k steps"). Returns the recorded states and the final fate.
pub fn evolve_point_with_checkpoints(
    z: Complex64,
    chain: &MapChain,
    params: &SleParams,
    checkpoints: &[usize],
) -> Result<(Vec<PointState>, PointFate)> {
    params.validate()?;
    debug_assert!(checkpoints.windows(2).all(|w| w[0] <= w[1]));

    let delta = chain.delta;
    if !z.re.is_finite() || z.im < -1e-12 || z.im > std::f64::consts::PI * delta + 1e-12 {
        return Err(LoewnerError::OutsideStrip(z));
    }
    let d2 = delta * delta;
    let z_in = z / delta;

    let mut states: Vec<PointState> = Vec::with_capacity(checkpoints.len());
    let mut next_cp = 0usize;

    let mut w = z_in; // absolute coordinate g_t(z), rescaled frame
    let mut u = z_in - chain.steps.first().map_or(chain.final_xi, |s| s.xi) / delta;
    while next_cp < checkpoints.len() && checkpoints[next_cp] == 0 {
        states.push(PointState::Alive(u * delta));
        next_cp += 1;
    }

    let mut fate = None;
    let absorbing = params.kappa > 4.0;
    let mut elapsed = 0.0;

    for (k, step) in chain.steps.iter().enumerate() {
        let (h, xi) = (step.h / d2, step.xi / delta);
        let outcome = elementary_map_eps(w, xi, h, params.eps_swallow)?;
        elapsed += step.h;
        let tau = elapsed - 0.5 * step.h;
        w = match outcome {
            SlitOutcome::Swallowed => {
                fate = Some(PointFate::Swallowed { tau });
                break;
            }
            SlitOutcome::Mapped(next) => next,
        };
        let u_next = w - chain.xi_after(k) / delta;

        let band = collapse_band(params.kappa, h);
        if absorbing
            && u.im.abs() <= band
            && u_next.im.abs() <= band
            && (u.re * u_next.re < 0.0 || u_next.re == 0.0)
        {
            fate = Some(PointFate::Swallowed { tau });
            break;
        }
        u = u_next;

        if u.re.abs() > params.escape_threshold {
            fate = Some(if u.re < 0.0 { PointFate::Left } else { PointFate::Right });
            break;
        }
        while next_cp < checkpoints.len() && checkpoints[next_cp] == k + 1 {
            states.push(PointState::Alive(u * delta));
            next_cp += 1;
        }
    }

    let fate = fate.unwrap_or(PointFate::Undecided { final_image: u * delta });
    while next_cp < checkpoints.len() {
        states.push(stopped_state(fate));
        next_cp += 1;
    }
    Ok((states, fate))
}

/// Evolve a point and classify its fate.
pub fn evolve_point(z: Complex64, chain: &MapChain, params: &SleParams) -> Result<PointFate> {
    evolve_point_with_checkpoints(z, chain, params, &[]).map(|(_, fate)| fate)
}
