//! Runtime configuration shared by the Poisson and momentum evaluators.

/// Circumference of the unit circle: the ratio `h/ħ` is this constant no
/// matter what `h` is, since `ħ` is defined as `h` divided by it.
pub const KAPPA: f64 = std::f64::consts::TAU;

/// Evaluation options threaded through bivector and modular-field formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToricConfig {
    /// The positive scale parameter `h`. Defaults to 1. It only enters through
    /// `ħ = h / κ`; every reported quantity exposes `κ` explicitly instead.
    pub h: f64,
    /// When set, the quadratic bivector carries an extra factor of `κ`,
    /// matching the normalization some of the one-dimensional formulas use.
    /// Off by default. All dependent formulas (leaf momenta, modular fields,
    /// period oracles) read this flag so the package stays self-consistent
    /// either way.
    pub pi_sigma_kappa_factor: bool,
}

impl Default for ToricConfig {
    fn default() -> Self {
        ToricConfig { h: 1.0, pi_sigma_kappa_factor: false }
    }
}

impl ToricConfig {
    /// Multiplier applied to the quadratic bivector coefficients.
    pub fn pi_sigma_scale(&self) -> f64 {
        if self.pi_sigma_kappa_factor {
            KAPPA
        } else {
            1.0
        }
    }

    /// `ħ = h / κ`.
    pub fn hbar(&self) -> f64 {
        self.h / KAPPA
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_is_two_pi_for_every_h() {
        let a = ToricConfig { h: 1.0, ..Default::default() };
        let b = ToricConfig { h: 5.0, ..Default::default() };
        assert_eq!(a.h / a.hbar(), KAPPA);
        assert!((b.h / b.hbar() - KAPPA).abs() < 1e-15);
    }

    #[test]
    fn scale_follows_flag() {
        assert_eq!(ToricConfig::default().pi_sigma_scale(), 1.0);
        let on = ToricConfig { pi_sigma_kappa_factor: true, ..Default::default() };
        assert_eq!(on.pi_sigma_scale(), KAPPA);
    }
}
