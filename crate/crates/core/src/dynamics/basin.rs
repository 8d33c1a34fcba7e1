use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::orbit::{Orbiter, Outcome};
use crate::linalg3::ProjectivePoint;
use crate::su12::{classify, tangent_line, GroupElement, Kind, ProjectiveLine, Su12Error};
use crate::{Tolerances, C64};

/// Sampling plan for [`basin_check`].
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BasinConfig {
    /// Points drawn from the closed ball.
    pub ball_samples: usize,
    /// Points drawn on random lines through the attractive point.
    pub line_samples: usize,
    pub seed: u64,
    pub max_iter: usize,
    pub tol: f64,
}

impl Default for BasinConfig {
    fn default() -> Self {
        BasinConfig { ball_samples: 10_000, line_samples: 1_000, seed: 0, max_iter: 10_000, tol: 1e-8 }
    }
}

/// Lines closer than this (chordal distance of duals) to the attractive
/// tangent line are redrawn.
const TANGENT_EXCLUSION: f64 = 1e-6;

/// Bit marking line-sample streams, keeping them apart from ball streams.
const LINE_STREAM: u64 = 1 << 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Forward orbit converges to the attractive point.
    Forward,
    /// Backward orbit converges to the repulsive point.
    Backward,
    Unresolved,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct BasinReport {
    pub samples: usize,
    pub forward: usize,
    pub backward: usize,
    pub unresolved: usize,
    pub seed: u64,
}

impl BasinReport {
    pub fn fraction_to_attractive(&self) -> f64 {
        fraction(self.forward, self.samples)
    }

    pub fn fraction_to_repulsive_backward(&self) -> f64 {
        fraction(self.backward, self.samples)
    }

    pub fn record(&mut self, v: Verdict) {
        self.samples += 1;
        match v {
            Verdict::Forward => self.forward += 1,
            Verdict::Backward => self.backward += 1,
            Verdict::Unresolved => self.unresolved += 1,
        }
    }

    /// Sums the counts of two partial reports with the same seed.
    pub fn merge(self, other: BasinReport) -> BasinReport {
        BasinReport {
            samples: self.samples + other.samples,
            forward: self.forward + other.forward,
            backward: self.backward + other.backward,
            unresolved: self.unresolved + other.unresolved,
            seed: self.seed,
        }
    }
}

fn fraction(k: usize, n: usize) -> f64 {
    if n == 0 {
        0.0
    } else {
        k as f64 / n as f64
    }
}

/// Everything needed to judge sample `i` independently of the others. Sample
/// `i` draws from its own ChaCha stream, so any evaluation order (or thread
/// count) yields the same verdicts.
#[derive(Clone, Debug)]
pub struct BasinProblem {
    forward: Orbiter,
    backward: Orbiter,
    attractive: ProjectivePoint,
    repulsive: ProjectivePoint,
    tangent: ProjectiveLine,
    config: BasinConfig,
}

impl BasinProblem {
    pub fn new(a: &GroupElement, config: BasinConfig, tol: &Tolerances) -> Result<Self, Su12Error> {
        let cl = classify(a, tol)?;
        if cl.kind == Kind::Elliptic {
            return Err(Su12Error::NotNonElliptic);
        }
        let roles = cl.roles.ok_or(Su12Error::NotNonElliptic)?;
        let tangent = tangent_line(&roles.attractive, tol.boundary)?;
        Ok(BasinProblem {
            forward: Orbiter::with_fixed(a, cl.fixed.clone()),
            backward: Orbiter::with_fixed(&a.inverse(), cl.fixed),
            attractive: roles.attractive,
            repulsive: roles.repulsive,
            tangent,
            config,
        })
    }

    pub fn config(&self) -> &BasinConfig {
        &self.config
    }

    pub fn len(&self) -> usize {
        self.config.ball_samples + self.config.line_samples
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sample `i`: ball samples first, then line samples.
    pub fn sample(&self, i: usize) -> ProjectivePoint {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        if i < self.config.ball_samples {
            rng.set_stream(i as u64);
            ball_point(&mut rng)
        } else {
            rng.set_stream(LINE_STREAM | (i - self.config.ball_samples) as u64);
            self.line_point(&mut rng)
        }
    }

    pub fn judge(&self, p: &ProjectivePoint) -> Verdict {
        let (max_iter, tol) = (self.config.max_iter, self.config.tol);
        if let Outcome::Converged(x) = self.forward.converge(p, max_iter, tol).outcome {
            if x == self.attractive {
                return Verdict::Forward;
            }
        }
        if let Outcome::Converged(x) = self.backward.converge(p, max_iter, tol).outcome {
            if x == self.repulsive {
                return Verdict::Backward;
            }
        }
        Verdict::Unresolved
    }

    pub fn verdict(&self, i: usize) -> Verdict {
        self.judge(&self.sample(i))
    }

    pub fn empty_report(&self) -> BasinReport {
        BasinReport { seed: self.config.seed, ..BasinReport::default() }
    }

    fn line_point(&self, rng: &mut ChaCha8Rng) -> ProjectivePoint {
        loop {
            let w = unit_ball_point::<3>(rng);
            let Ok(other) = ProjectivePoint::new(w) else { continue };
            let Ok(line) = ProjectiveLine::through(&self.attractive, &other) else { continue };
            if line.angle(&self.tangent) <= TANGENT_EXCLUSION {
                continue;
            }
            let [u, v] = line.frame();
            let [s, t] = unit_ball_point::<2>(rng);
            if let Ok(p) = ProjectivePoint::new(core::array::from_fn(|k| u[k] * s + v[k] * t)) {
                return p;
            }
        }
    }
}

fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    // [-1, 1) from 53 random bits
    (rng.next_u64() >> 11) as f64 * (2.0 / (1u64 << 53) as f64) - 1.0
}

/// Uniform point of the unit ball of `Cᴺ`, away from the origin.
fn unit_ball_point<const N: usize>(rng: &mut ChaCha8Rng) -> [C64; N] {
    loop {
        let z: [C64; N] = core::array::from_fn(|_| C64::new(uniform(rng), uniform(rng)));
        let r2: f64 = z.iter().map(|x| x.norm_sqr()).sum();
        if r2 <= 1.0 && r2 > 1e-12 {
            return z;
        }
    }
}

/// Uniform point of the closed ball in the chart `x = 1`: `(y, z)` from the
/// unit polydisc, rejected unless `|y|² + |z|² ≤ 1`.
fn ball_point(rng: &mut ChaCha8Rng) -> ProjectivePoint {
    loop {
        let [y] = unit_disc(rng);
        let [z] = unit_disc(rng);
        if y.norm_sqr() + z.norm_sqr() <= 1.0 {
            if let Ok(p) = ProjectivePoint::new([C64::new(1.0, 0.0), y, z]) {
                return p;
            }
        }
    }
}

fn unit_disc(rng: &mut ChaCha8Rng) -> [C64; 1] {
    loop {
        let z = C64::new(uniform(rng), uniform(rng));
        if z.norm_sqr() <= 1.0 {
            return [z];
        }
    }
}

/// Classifies every sample of `config` as forward-attracted, backward-repelled
/// or unresolved. Serial; the result does not depend on evaluation order.
pub fn basin_check(a: &GroupElement, config: BasinConfig, tol: &Tolerances) -> Result<BasinReport, Su12Error> {
    let problem = BasinProblem::new(a, config, tol)?;
    let mut report = problem.empty_report();
    for i in 0..problem.len() {
        report.record(problem.verdict(i));
    }
    Ok(report)
}
