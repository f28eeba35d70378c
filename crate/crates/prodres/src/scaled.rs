//! Log-scaled complex arithmetic.
//!
//! Kernel magnitudes in the far collar behave like `exp(-zeta * delta)` with
//! `delta` up to 1e4, thousands of orders of magnitude below the double range.
//! `ScaledComplex` stores a value as `(log-magnitude, phase)` so products and
//! quotients never under- or overflow; sums rescale against the larger term.

use num_complex::Complex64;

/// Complex number stored as natural-log magnitude plus phase in radians.
///
/// The represented value is `exp(log_mag) * exp(i * phase)`. Zero is
/// `log_mag = -inf` with phase 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledComplex {
    pub log_mag: f64,
    pub phase: f64,
}

impl ScaledComplex {
    pub const ZERO: ScaledComplex = ScaledComplex {
        log_mag: f64::NEG_INFINITY,
        phase: 0.0,
    };

    pub const ONE: ScaledComplex = ScaledComplex {
        log_mag: 0.0,
        phase: 0.0,
    };

    pub fn new(log_mag: f64, phase: f64) -> Self {
        ScaledComplex { log_mag, phase }
    }

    pub fn from_complex(v: Complex64) -> Self {
        if v == Complex64::new(0.0, 0.0) {
            return Self::ZERO;
        }
        ScaledComplex {
            log_mag: v.norm().ln(),
            phase: v.arg(),
        }
    }

    pub fn from_real(v: f64) -> Self {
        Self::from_complex(Complex64::new(v, 0.0))
    }

    /// Value as an ordinary complex double. Underflows to 0 and overflows to
    /// inf exactly as `exp` does; use only when the magnitude is known safe.
    pub fn to_complex(self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar(self.log_mag.exp(), self.phase)
    }

    pub fn is_zero(self) -> bool {
        self.log_mag == f64::NEG_INFINITY
    }

    pub fn is_finite(self) -> bool {
        (self.log_mag.is_finite() || self.is_zero()) && self.phase.is_finite()
    }

    /// Base-10 log magnitude, the unit used in CSV artifacts.
    pub fn log10_abs(self) -> f64 {
        self.log_mag / std::f64::consts::LN_10
    }

    /// Principal complex logarithm `log_mag + i * phase_wrapped`.
    pub fn ln(self) -> Complex64 {
        Complex64::new(self.log_mag, wrap_phase(self.phase))
    }

    pub fn mul(self, rhs: ScaledComplex) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        ScaledComplex {
            log_mag: self.log_mag + rhs.log_mag,
            phase: self.phase + rhs.phase,
        }
    }

    pub fn div(self, rhs: ScaledComplex) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        ScaledComplex {
            log_mag: self.log_mag - rhs.log_mag,
            phase: self.phase - rhs.phase,
        }
    }

    pub fn recip(self) -> Self {
        ScaledComplex {
            log_mag: -self.log_mag,
            phase: -self.phase,
        }
    }

    pub fn neg(self) -> Self {
        if self.is_zero() {
            return self;
        }
        ScaledComplex {
            log_mag: self.log_mag,
            phase: self.phase + std::f64::consts::PI,
        }
    }

    pub fn conj(self) -> Self {
        ScaledComplex {
            log_mag: self.log_mag,
            phase: -self.phase,
        }
    }

    pub fn mul_complex(self, rhs: Complex64) -> Self {
        self.mul(Self::from_complex(rhs))
    }

    pub fn mul_real(self, rhs: f64) -> Self {
        self.mul(Self::from_real(rhs))
    }

    /// Sum with rescaling against the larger magnitude, so the result is exact
    /// relative to the dominant term even when the terms differ by thousands
    /// of orders of magnitude.
    pub fn add(self, rhs: ScaledComplex) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.log_mag >= rhs.log_mag {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let diff = small.log_mag - big.log_mag; // <= 0
        if diff < -745.0 {
            // exp(diff) underflows; the small term is invisible at f64 precision
            return big;
        }
        let ratio = Complex64::from_polar(diff.exp(), small.phase - big.phase);
        let corr = Complex64::new(1.0, 0.0) + ratio;
        if corr == Complex64::new(0.0, 0.0) {
            return Self::ZERO;
        }
        ScaledComplex {
            log_mag: big.log_mag + corr.norm().ln(),
            phase: big.phase + corr.arg(),
        }
    }

    pub fn sub(self, rhs: ScaledComplex) -> Self {
        self.add(rhs.neg())
    }

    /// Raise to a complex power: `exp(w * ln(self))` with the principal branch
    /// of the logarithm as currently wrapped.
    pub fn powc(self, w: Complex64) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        let l = Complex64::new(self.log_mag, self.phase);
        let e = w * l;
        ScaledComplex {
            log_mag: e.re,
            phase: e.im,
        }
    }

    /// Value of `exp(e)` for complex `e`, exact in this representation.
    pub fn exp_of(e: Complex64) -> Self {
        ScaledComplex {
            log_mag: e.re,
            phase: e.im,
        }
    }
}

/// Wrap a phase into (-pi, pi].
pub fn wrap_phase(phase: f64) -> f64 {
    use std::f64::consts::{PI, TAU};
    if phase.is_infinite() || phase.is_nan() {
        return f64::NAN;
    }
    let mut p = phase % TAU;
    if p <= -PI {
        p += TAU;
    } else if p > PI {
        p -= TAU;
    }
    p
}
