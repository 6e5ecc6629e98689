//! Pointwise evaluation of the polar-coordinate Dirac operator on spinors
//! whose components are single angular modes.
//!
//! ```text
//! D = [ 0                                   e^{-i t}(-d_r + i r^{-1} d_t) ]
//!     [ e^{i t}(d_r + i r^{-1} d_t)          0                            ]
//! ```
//!
//! A component `f(r) e^{i p t}` is carried as its angular index `p` together
//! with `f(r)` and `f'(r)`. The angular derivative is applied symbolically,
//! so `D` acts exactly on the mode bookkeeping and only the radial values
//! carry rounding.

use num_complex::Complex64;
use serde::Serialize;

/// Value of one spinor component `value * e^{i angular t}` at a fixed radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngularComponent {
    pub angular: i64,
    pub value: Complex64,
}

/// A spinor sampled at one radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpinorSample {
    pub radius: f64,
    pub upper: AngularComponent,
    pub lower: AngularComponent,
}

/// One component together with its radial derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentJet {
    pub angular: i64,
    pub value: Complex64,
    pub derivative: Complex64,
}

impl ComponentJet {
    pub fn new(angular: i64, value: Complex64, derivative: Complex64) -> Self {
        Self { angular, value, derivative }
    }

    pub fn real(angular: i64, value: f64, derivative: f64) -> Self {
        Self::new(angular, Complex64::new(value, 0.0), Complex64::new(derivative, 0.0))
    }

    pub fn zero(angular: i64) -> Self {
        Self::real(angular, 0.0, 0.0)
    }

    fn scaled(self, factor: Complex64) -> Self {
        Self { angular: self.angular, value: self.value * factor, derivative: self.derivative * factor }
    }
}

/// A spinor with radial derivatives at one radius, enough to apply `D`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorJet {
    pub radius: f64,
    pub upper: ComponentJet,
    pub lower: ComponentJet,
}

impl SpinorJet {
    pub fn value(&self) -> SpinorSample {
        SpinorSample {
            radius: self.radius,
            upper: AngularComponent { angular: self.upper.angular, value: self.upper.value },
            lower: AngularComponent { angular: self.lower.angular, value: self.lower.value },
        }
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self { radius: self.radius, upper: self.upper.scaled(factor), lower: self.lower.scaled(factor) }
    }

    /// `D` applied to this spinor.
    pub fn dirac(&self) -> SpinorSample {
        let r = self.radius;
        SpinorSample {
            radius: r,
            upper: minus_component(&self.lower, r),
            lower: plus_component(&self.upper, r),
        }
    }
}

/// `e^{-i t}(-d_r + i r^{-1} d_t)` on `g(r) e^{i q t}`: mode `q - 1`, value `-g' - q g / r`.
pub fn minus_component(jet: &ComponentJet, r: f64) -> AngularComponent {
    let q = jet.angular as f64;
    AngularComponent { angular: jet.angular - 1, value: -jet.derivative - jet.value * (q / r) }
}

/// `e^{i t}(d_r + i r^{-1} d_t)` on `f(r) e^{i p t}`: mode `p + 1`, value `f' - p f / r`.
pub fn plus_component(jet: &ComponentJet, r: f64) -> AngularComponent {
    let p = jet.angular as f64;
    AngularComponent { angular: jet.angular + 1, value: jet.derivative - jet.value * (p / r) }
}

/// L2 distance over the circle of radius `r` (normalized measure) between
/// two single-mode components.
pub fn component_distance(a: &AngularComponent, b: &AngularComponent) -> f64 {
    if a.angular == b.angular {
        (a.value - b.value).norm()
    } else {
        a.value.norm().hypot(b.value.norm())
    }
}

impl SpinorSample {
    pub fn distance(&self, other: &SpinorSample) -> f64 {
        component_distance(&self.upper, &other.upper).hypot(component_distance(&self.lower, &other.lower))
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        let scale = |c: AngularComponent| AngularComponent { angular: c.angular, value: c.value * factor };
        Self { radius: self.radius, upper: scale(self.upper), lower: scale(self.lower) }
    }
}

/// `|(D - shift) psi|` at one radius.
pub fn shifted_residual(jet: &SpinorJet, shift: Complex64) -> f64 {
    jet.dirac().distance(&jet.value().scaled(shift))
}
