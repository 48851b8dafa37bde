use crate::error::{LoewnerError, Result};

/// Parameters of one evolution run.
///
/// Defaults follow the classification setup: the flow velocity coth(x/2)
/// equals +-1 to better than 1e-17 once |Re f| reaches 20, so fates are
/// decided at `escape_threshold` = 20 and `t_max` = 25 leaves enough horizon
/// for boundary points to commit.
#[derive(Debug, Clone, Copy)]
pub struct SleParams {
    pub kappa: f64,
    /// Strip dilatation: the strip is 0 < Im z < pi * delta.
    pub delta: f64,
    /// Time step of the piecewise-constant driving.
    pub step: f64,
    /// Evolution horizon.
    pub t_max: f64,
    /// Offset above the driving point used to reconstruct the trace.
    pub eps_tip: f64,
    /// Tolerance for on-slit detection in the elementary map.
    pub eps_swallow: f64,
    /// |Re f| beyond which a point is classified Left or Right.
    pub escape_threshold: f64,
    pub seed: u64,
}

impl SleParams {
    pub fn new(kappa: f64, seed: u64) -> Result<Self> {
        let params = Self {
            kappa,
            delta: 1.0,
            step: 1e-3,
            t_max: 25.0,
            eps_tip: 1e-4,
            eps_swallow: 1e-9,
            escape_threshold: 20.0,
            seed,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn with_step(mut self, step: f64) -> Result<Self> {
        self.step = step;
        self.validate()?;
        Ok(self)
    }

    pub fn with_t_max(mut self, t_max: f64) -> Result<Self> {
        self.t_max = t_max;
        self.validate()?;
        Ok(self)
    }

    pub fn with_delta(mut self, delta: f64) -> Result<Self> {
        self.delta = delta;
        self.validate()?;
        Ok(self)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        fn positive(name: &str, v: f64) -> Result<()> {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(LoewnerError::InvalidParams(format!("{name} must be positive, got {v}")))
            }
        }
        positive("kappa", self.kappa)?;
        positive("delta", self.delta)?;
        positive("step", self.step)?;
        positive("eps_tip", self.eps_tip)?;
        positive("eps_swallow", self.eps_swallow)?;
        positive("escape_threshold", self.escape_threshold)?;
        if self.t_max.is_nan() || self.t_max < self.step {
            return Err(LoewnerError::InvalidParams(format!(
                "t_max must be at least one step, got t_max={} step={}",
                self.t_max, self.step
            )));
        }
        Ok(())
    }

    /// Number of driving steps covering the horizon.
    pub fn n_steps(&self) -> usize {
        (self.t_max / self.step).ceil() as usize
    }
}
