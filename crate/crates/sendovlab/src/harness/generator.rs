//! Deterministic instance generators.
//!
//! Every instance is a pure function of `(seed, index)`: the spec seed is
//! expanded with splitmix64, xored with the instance index, expanded again,
//! and the result seeds a per-instance ChaCha8 stream. No instance ever
//! reads another instance's stream, so batches can be produced in any order
//! — or on any number of workers — with identical results.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::geometry::RootConfiguration;

/// One step of the splitmix64 sequence; the standard finalizer constants.
pub(crate) fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Families of root configurations the harness can produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// Zeros i.i.d. uniform on the closed unit disk (area measure).
    UniformDisk,
    /// Zeros at jittered `(n-1)`-th roots of unity: radius `1 - |u|`,
    /// angle `2 pi k/(n-1) + v` with `u, v` uniform in
    /// `[-perturbation, perturbation]`. Keeps every zero near the unit
    /// circle, which pushes the nearest-critical-point distance `rho_1`
    /// upward — the probe for the `rho_1 >= 1` hypothesis.
    NearExtremal,
    /// Passthrough of explicitly listed instances.
    Explicit,
}

/// One explicitly supplied instance: the distinguished zero `a` and the
/// remaining zeros as `[re, im]` pairs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExplicitInstance {
    /// Distinguished zero, `0 < a < 1`.
    pub a: f64,
    /// The other `n - 1` zeros.
    pub zeros: Vec<[f64; 2]>,
}

/// Full description of an instance source. Serialized verbatim into every
/// report so a run can be reproduced from its output alone.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorSpec {
    /// Which family to draw from.
    pub kind: GeneratorKind,
    /// Smallest polynomial degree to draw (inclusive, at least 2).
    pub deg_min: usize,
    /// Largest polynomial degree to draw (inclusive).
    pub deg_max: usize,
    /// Lower end of the range for the distinguished zero `a`.
    pub a_min: f64,
    /// Upper end of the range for `a`; the range must sit inside `(0, 1)`.
    pub a_max: f64,
    /// Pin `a` to one value instead of drawing it.
    #[serde(default)]
    pub a_fixed: Option<f64>,
    /// Radial/angular jitter for [`GeneratorKind::NearExtremal`].
    pub perturbation: f64,
    /// Master seed.
    pub seed: u64,
    /// Instances for [`GeneratorKind::Explicit`]; must be empty otherwise.
    #[serde(default)]
    pub explicit: Vec<ExplicitInstance>,
}

impl Default for GeneratorSpec {
    fn default() -> Self {
        GeneratorSpec {
            kind: GeneratorKind::UniformDisk,
            deg_min: 3,
            deg_max: 15,
            a_min: 0.05,
            a_max: 0.95,
            a_fixed: None,
            perturbation: 0.02,
            seed: 42,
            explicit: Vec::new(),
        }
    }
}

impl GeneratorSpec {
    fn validate(&self) -> Result<(), HarnessError> {
        if self.deg_min < 2 {
            return Err(HarnessError::InvalidSpec(format!(
                "deg_min must be at least 2, got {}",
                self.deg_min
            )));
        }
        if self.deg_max < self.deg_min {
            return Err(HarnessError::InvalidSpec(format!(
                "degree range is empty: {}..={}",
                self.deg_min, self.deg_max
            )));
        }
        if !(self.a_min.is_finite()
            && self.a_max.is_finite()
            && 0.0 < self.a_min
            && self.a_min <= self.a_max
            && self.a_max < 1.0)
        {
            return Err(HarnessError::InvalidSpec(format!(
                "a-range must satisfy 0 < lo <= hi < 1, got [{}, {}]",
                self.a_min, self.a_max
            )));
        }
        if let Some(a) = self.a_fixed {
            if !(a.is_finite() && 0.0 < a && a < 1.0) {
                return Err(HarnessError::InvalidSpec(format!(
                    "fixed a must lie in (0, 1), got {a}"
                )));
            }
        }
        if !(self.perturbation.is_finite() && self.perturbation >= 0.0) {
            return Err(HarnessError::InvalidSpec(format!(
                "perturbation must be finite and nonnegative, got {}",
                self.perturbation
            )));
        }
        match self.kind {
            GeneratorKind::Explicit => {
                if self.explicit.is_empty() {
                    return Err(HarnessError::InvalidSpec(
                        "explicit generator needs at least one instance".into(),
                    ));
                }
            }
            _ => {
                if !self.explicit.is_empty() {
                    return Err(HarnessError::InvalidSpec(format!(
                        "explicit instances supplied but kind is {:?}",
                        self.kind
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A validated [`GeneratorSpec`] ready to produce instances by index.
#[derive(Clone, Debug)]
pub struct Generator {
    spec: GeneratorSpec,
    stream: u64,
}

impl Generator {
    /// Validate the spec (including every explicit instance) and build the
    /// generator.
    pub fn new(spec: GeneratorSpec) -> Result<Self, HarnessError> {
        spec.validate()?;
        for (i, inst) in spec.explicit.iter().enumerate() {
            explicit_config(inst).map_err(|e| {
                HarnessError::InvalidSpec(format!("explicit instance {i}: {e}"))
            })?;
        }
        let stream = splitmix64(spec.seed);
        Ok(Generator { spec, stream })
    }

    /// The validated spec.
    pub fn spec(&self) -> &GeneratorSpec {
        &self.spec
    }

    /// The per-instance RNG for `index`, independent of all other indices.
    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(splitmix64(self.stream ^ index))
    }

    /// Produce instance `index` plus the RNG continuation, for follow-up
    /// draws that belong to the same instance (a λ sample, say).
    pub fn instance(
        &self,
        index: u64,
    ) -> Result<(RootConfiguration, ChaCha8Rng), HarnessError> {
        let mut rng = self.rng(index);
        let cfg = match self.spec.kind {
            GeneratorKind::Explicit => {
                let inst = self.spec.explicit.get(index as usize).ok_or_else(|| {
                    HarnessError::InvalidSpec(format!(
                        "index {index} out of range: explicit generator holds {} instances",
                        self.spec.explicit.len()
                    ))
                })?;
                explicit_config(inst)?
            }
            GeneratorKind::UniformDisk => {
                let a = self.draw_a(&mut rng);
                let degree = rng.gen_range(self.spec.deg_min..=self.spec.deg_max);
                let zeros = (0..degree - 1)
                    .map(|_| {
                        // sqrt of a uniform radius^2 gives area measure.
                        let radius = rng.gen::<f64>().sqrt();
                        let theta = std::f64::consts::TAU * rng.gen::<f64>();
                        Complex64::from_polar(radius, theta)
                    })
                    .collect();
                RootConfiguration::new(a, zeros)?
            }
            GeneratorKind::NearExtremal => {
                let a = self.draw_a(&mut rng);
                let degree = rng.gen_range(self.spec.deg_min..=self.spec.deg_max);
                let m = degree - 1;
                let pert = self.spec.perturbation;
                let zeros = (0..m)
                    .map(|k| {
                        let (du, dv) = if pert > 0.0 {
                            (rng.gen_range(-pert..pert), rng.gen_range(-pert..pert))
                        } else {
                            (0.0, 0.0)
                        };
                        let radius = (1.0 - du.abs()).max(0.0);
                        let theta = std::f64::consts::TAU * k as f64 / m as f64 + dv;
                        Complex64::from_polar(radius, theta)
                    })
                    .collect();
                RootConfiguration::new(a, zeros)?
            }
        };
        Ok((cfg, rng))
    }

    fn draw_a(&self, rng: &mut ChaCha8Rng) -> f64 {
        match self.spec.a_fixed {
            Some(a) => a,
            None => rng.gen_range(self.spec.a_min..=self.spec.a_max),
        }
    }
}

fn explicit_config(inst: &ExplicitInstance) -> Result<RootConfiguration, HarnessError> {
    let zeros = inst
        .zeros
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    Ok(RootConfiguration::new(inst.a, zeros)?)
}

/// Produce `count` instances of `spec` (indices `0..count`).
///
/// `count` must be at least 1, and at most the instance-list length for the
/// explicit kind.
pub fn generate(
    spec: GeneratorSpec,
    count: usize,
) -> Result<Vec<RootConfiguration>, HarnessError> {
    if count == 0 {
        return Err(HarnessError::InvalidSpec("count must be at least 1".into()));
    }
    if spec.kind == GeneratorKind::Explicit && count > spec.explicit.len() {
        return Err(HarnessError::InvalidSpec(format!(
            "count {count} exceeds the {} explicit instances",
            spec.explicit.len()
        )));
    }
    let generator = Generator::new(spec)?;
    (0..count as u64)
        .map(|i| generator.instance(i).map(|(cfg, _)| cfg))
        .collect()
}
