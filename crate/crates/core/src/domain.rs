//! Evaluation domains for diagonal kernels on a disk.

use num_complex::Complex64;

use crate::kernel::KernelError;

/// Fraction of the disk radius that evaluation points may use.
///
/// The gap between `max_eval_radius` and `radius` keeps truncated series
/// tails under control; see [`DiskDomain::tail_bound`].
pub const GUARD_FACTOR: f64 = 0.95;

/// A disk centered at the origin together with the guard band inside which
/// kernel evaluation is admitted.
///
/// All kernels in this crate live on such a disk. Evaluation is allowed only
/// for `|z| <= max_eval_radius`, with `max_eval_radius <= 0.95 * radius`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskDomain {
    radius: f64,
    max_eval_radius: f64,
}

impl DiskDomain {
    /// Disk of the given radius with the default guard band
    /// `max_eval_radius = 0.95 * radius`.
    pub fn new(radius: f64) -> Result<Self, KernelError> {
        if !(radius > 0.0) {
            return Err(KernelError::InvalidDomain {
                reason: format!("radius must be positive, got {radius}"),
            });
        }
        Ok(Self {
            radius,
            max_eval_radius: GUARD_FACTOR * radius,
        })
    }

    /// Disk with an explicit guard band. Requires
    /// `0 < max_eval_radius <= 0.95 * radius`.
    pub fn with_guard(radius: f64, max_eval_radius: f64) -> Result<Self, KernelError> {
        if !(radius > 0.0) {
            return Err(KernelError::InvalidDomain {
                reason: format!("radius must be positive, got {radius}"),
            });
        }
        if !(max_eval_radius > 0.0) || max_eval_radius > GUARD_FACTOR * radius {
            return Err(KernelError::InvalidDomain {
                reason: format!(
                    "max_eval_radius must satisfy 0 < r <= {GUARD_FACTOR} * radius, got {max_eval_radius}"
                ),
            });
        }
        Ok(Self {
            radius,
            max_eval_radius,
        })
    }

    /// The unit disk with the default guard band.
    pub fn unit() -> Self {
        Self {
            radius: 1.0,
            max_eval_radius: GUARD_FACTOR,
        }
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn max_eval_radius(&self) -> f64 {
        self.max_eval_radius
    }

    /// Whether `z` lies inside the guard band.
    pub fn contains(&self, z: Complex64) -> bool {
        z.norm() <= self.max_eval_radius
    }

    /// Admit an evaluation point or report it as out of range.
    pub fn admit(&self, z: Complex64) -> Result<(), KernelError> {
        if self.contains(z) {
            Ok(())
        } else {
            Err(KernelError::PointOutsideGuardBand {
                point: z,
                max_eval_radius: self.max_eval_radius,
            })
        }
    }

    /// Upper bound on the tail of a truncated series `sum a_n (z wbar)^n`
    /// dropped after `terms` coefficients, assuming the coefficient ratios
    /// `a_{n+1}/a_n` are bounded by 1/radius^2 (true for all kernel families
    /// built by this crate): `|tail| <= a_M u^M / (1 - u)` with
    /// `u = max_eval_radius^2`.
    pub fn tail_bound(&self, last_coefficient: f64, terms: usize) -> f64 {
        let u = self.max_eval_radius * self.max_eval_radius;
        last_coefficient.abs() * u.powi(terms as i32) / (1.0 - u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_guard_band_is_095_radius() {
        let d = DiskDomain::new(2.0).unwrap();
        assert_eq!(d.radius(), 2.0);
        assert!((d.max_eval_radius() - 1.9).abs() < 1e-15);
    }

    #[test]
    fn rejects_nonpositive_radius() {
        assert!(DiskDomain::new(0.0).is_err());
        assert!(DiskDomain::new(-1.0).is_err());
        assert!(DiskDomain::new(f64::NAN).is_err());
    }

    #[test]
    fn rejects_guard_band_beyond_095() {
        assert!(DiskDomain::with_guard(1.0, 0.96).is_err());
        assert!(DiskDomain::with_guard(1.0, 0.95).is_ok());
        assert!(DiskDomain::with_guard(1.0, 0.0).is_err());
    }

    #[test]
    fn admits_points_inside_guard_band_only() {
        let d = DiskDomain::unit();
        assert!(d.admit(Complex64::new(0.9, 0.0)).is_ok());
        assert!(d.admit(Complex64::new(0.0, 0.95)).is_ok());
        assert!(d.admit(Complex64::new(0.7, 0.7)).is_err());
    }
}
