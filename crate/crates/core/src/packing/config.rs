use serde::{Deserialize, Serialize};

/// All numeric constants of the packing procedure, plus retry limit and seed.
///
/// Defaults are the constants of the proof: max degree sqrt(n)/200, the
/// 20*sqrt(n) high-degree threshold, the degree-10 cap on reservoir
/// candidates, per-vertex sampling probability n^(-1/2), |C_i| <= 4*sqrt(n),
/// |D_i| >= sqrt(n)/50 for i <= ceil(sqrt(n)/10), and |S_i| >= n/18.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PackingConfig {
    pub maxdeg_divisor: f64,
    pub high_degree_coeff: f64,
    pub small_degree_cap: usize,
    pub sample_prob_exponent: f64,
    pub c_bound_coeff: f64,
    pub d_bound_coeff: f64,
    pub d_range_coeff: f64,
    pub s_size_coeff: f64,
    pub max_resamples: usize,
    pub seed: u64,
}

impl Default for PackingConfig {
    fn default() -> Self {
        PackingConfig {
            maxdeg_divisor: 200.0,
            high_degree_coeff: 20.0,
            small_degree_cap: 10,
            sample_prob_exponent: -0.5,
            c_bound_coeff: 4.0,
            d_bound_coeff: 1.0 / 50.0,
            d_range_coeff: 1.0 / 10.0,
            s_size_coeff: 1.0 / 18.0,
            max_resamples: 64,
            seed: 0,
        }
    }
}

impl PackingConfig {
    pub fn with_seed(seed: u64) -> Self {
        PackingConfig { seed, ..Default::default() }
    }

    /// Checks positivity of all coefficients and the divisor floor sqrt(2),
    /// below which the theorem fails by the clique-removal construction.
    pub fn validate(&self) -> Result<(), String> {
        let positives = [
            ("maxdeg_divisor", self.maxdeg_divisor),
            ("high_degree_coeff", self.high_degree_coeff),
            ("c_bound_coeff", self.c_bound_coeff),
            ("d_bound_coeff", self.d_bound_coeff),
            ("d_range_coeff", self.d_range_coeff),
            ("s_size_coeff", self.s_size_coeff),
        ];
        for (name, v) in positives {
            if !(v > 0.0) {
                return Err(format!("{name} must be positive, got {v}"));
            }
        }
        if self.maxdeg_divisor < std::f64::consts::SQRT_2 {
            return Err(format!(
                "maxdeg_divisor must be at least sqrt(2), got {}",
                self.maxdeg_divisor
            ));
        }
        if self.max_resamples == 0 {
            return Err("max_resamples must be positive".into());
        }
        Ok(())
    }
}

/// Stable derivation of per-attempt / per-trial seeds from a master seed.
///
/// splitmix64 of (master XOR golden-ratio multiple of index+1); fixed so that
/// outputs are reproducible across platforms and releases.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ (index.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        assert!(PackingConfig::default().validate().is_ok());
    }

    #[test]
    fn divisor_below_sqrt2_rejected() {
        let cfg = PackingConfig { maxdeg_divisor: 1.0, ..Default::default() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn derived_seeds_differ_and_are_stable() {
        assert_ne!(derive_seed(7, 0), derive_seed(7, 1));
        assert_eq!(derive_seed(7, 3), derive_seed(7, 3));
        assert_ne!(derive_seed(7, 0), derive_seed(8, 0));
    }
}
