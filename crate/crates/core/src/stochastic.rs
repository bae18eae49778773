//! Seedable random primitives used by the search loop.
//!
//! Every random draw in a run flows through one [`RngStream`]. A stream is a
//! ChaCha8 generator keyed by `ChaCha8Rng::seed_from_u64(seed)`, so the same
//! 64-bit seed yields the same draw sequence on every platform and build.
//! Per-run seeds of an experiment are derived with [`derive_seed`].

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson, StandardNormal};
use statrs::function::gamma::{gamma, ln_gamma};

use crate::error::{Error, Result};

/// Redraws of the Mantegna denominator before giving up.
pub const LEVY_MAX_RETRIES: usize = 100;

/// A reproducible source of random draws owned by a single run.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream was constructed from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// A draw in `[lo, hi)`.
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // NaN must be rejected
    pub fn uniform(&mut self, lo: f64, hi: f64) -> Result<f64> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Domain(format!(
                "uniform requires finite lo < hi, got [{lo}, {hi})"
            )));
        }
        Ok(self.rng.random_range(lo..hi))
    }

    /// A draw in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    pub fn unit_normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.rng)
    }

    /// A uniformly chosen index in `0..n`. `n` must be nonzero.
    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    /// A Poisson(`lambda`) count.
    pub fn poisson(&mut self, lambda: f64) -> Result<u64> {
        let dist = Poisson::new(lambda)
            .map_err(|e| Error::Domain(format!("poisson rate {lambda}: {e}")))?;
        Ok(dist.sample(&mut self.rng) as u64)
    }
}

/// SplitMix64 finalizer over `base` and `index`, used to give every run of an
/// experiment its own well-separated seed.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Probability of `k` arrivals in an interval of length `t` at rate `lambda`.
///
/// Evaluated as `exp(k ln(lambda t) - lambda t - ln k!)` so large `k` does not
/// overflow the factorial.
#[allow(clippy::neg_cmp_op_on_partial_ord)] // NaN must be rejected
pub fn poisson_pmf(k: u64, lambda: f64, t: f64) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::Domain(format!(
            "poisson rate must be > 0, got {lambda}"
        )));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!(
            "interval length must be > 0, got {t}"
        )));
    }
    let mean = lambda * t;
    if k == 0 {
        return Ok((-mean).exp());
    }
    let k = k as f64;
    let log_p = k * mean.ln() - mean - ln_gamma(k + 1.0);
    Ok(log_p.exp().clamp(0.0, 1.0))
}

/// Exponential service-time density `mu exp(-mu t)`.
///
/// Part of the queueing model that motivates the arrival rate; the search loop
/// never calls it.
#[allow(clippy::neg_cmp_op_on_partial_ord)] // NaN must be rejected
pub fn exponential_service_density(t: f64, mu: f64) -> Result<f64> {
    if !(mu > 0.0) || !mu.is_finite() {
        return Err(Error::Domain(format!("service rate must be > 0, got {mu}")));
    }
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("service time must be >= 0, got {t}")));
    }
    Ok(mu * (-mu * t).exp())
}

/// Mantegna's scale for the numerator Gaussian:
/// `[G(1+b) sin(pi b / 2) / (G((1+b)/2) b 2^((b-1)/2))]^(1/b)`.
pub fn mantegna_sigma(beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let num = gamma(1.0 + beta) * (PI * beta / 2.0).sin();
    let den = gamma((1.0 + beta) / 2.0) * beta * 2f64.powf((beta - 1.0) / 2.0);
    Ok((num / den).powf(1.0 / beta))
}

fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta < 2.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "levy index must lie in (0, 2), got {beta}"
        )))
    }
}

/// Stability index and the matching Mantegna scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevyParams {
    beta: f64,
    sigma_u: f64,
}

impl LevyParams {
    pub fn new(beta: f64) -> Result<Self> {
        Ok(Self {
            beta,
            sigma_u: mantegna_sigma(beta)?,
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn sigma_u(&self) -> f64 {
        self.sigma_u
    }
}

/// One Lévy-stable step `u / |v|^(1/beta)` with `u ~ N(0, sigma_u^2)` and
/// `v ~ N(0, 1)`. The denominator is redrawn if it underflows to zero.
pub fn levy_step(rng: &mut RngStream, params: &LevyParams) -> Result<f64> {
    let u = params.sigma_u * rng.unit_normal();
    for _ in 0..LEVY_MAX_RETRIES {
        let denom = rng.unit_normal().abs().powf(1.0 / params.beta);
        if denom > 0.0 && denom.is_finite() {
            return Ok(u / denom);
        }
    }
    Err(Error::LevyRetryExhausted(LEVY_MAX_RETRIES))
}
