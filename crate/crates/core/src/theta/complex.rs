//! Minimal arbitrary-precision complex arithmetic on top of `rug::Float`,
//! tailored to theta-series evaluation (no transcendental functions beyond
//! `exp(πi·w)`).

use rug::float::Constant;
use rug::Float;

#[derive(Debug, Clone, PartialEq)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn zero(prec: u32) -> Self {
        Complex {
            re: Float::with_val(prec, 0),
            im: Float::with_val(prec, 0),
        }
    }

    pub fn one(prec: u32) -> Self {
        Complex {
            re: Float::with_val(prec, 1),
            im: Float::with_val(prec, 0),
        }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Complex {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn add(&self, o: &Complex) -> Complex {
        Complex {
            re: Float::with_val(self.prec(), &self.re + &o.re),
            im: Float::with_val(self.prec(), &self.im + &o.im),
        }
    }

    pub fn sub(&self, o: &Complex) -> Complex {
        Complex {
            re: Float::with_val(self.prec(), &self.re - &o.re),
            im: Float::with_val(self.prec(), &self.im - &o.im),
        }
    }

    pub fn neg(&self) -> Complex {
        Complex {
            re: Float::with_val(self.prec(), -&self.re),
            im: Float::with_val(self.prec(), -&self.im),
        }
    }

    pub fn mul(&self, o: &Complex) -> Complex {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        Complex { re, im }
    }

    pub fn scale_f64(&self, s: f64) -> Complex {
        let p = self.prec();
        Complex {
            re: Float::with_val(p, &self.re * s),
            im: Float::with_val(p, &self.im * s),
        }
    }

    pub fn div(&self, o: &Complex) -> Complex {
        let p = self.prec();
        let d = Float::with_val(p, o.re.clone().square() + o.im.clone().square());
        let conj = Complex {
            re: o.re.clone(),
            im: Float::with_val(p, -&o.im),
        };
        let n = self.mul(&conj);
        Complex {
            re: n.re / &d,
            im: n.im / &d,
        }
    }

    /// |z| as a Float.
    pub fn abs(&self) -> Float {
        Float::with_val(
            self.prec(),
            self.re.clone().square() + self.im.clone().square(),
        )
        .sqrt()
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// e^{πi·w} = e^{−π Im w}·(cos(π Re w) + i sin(π Re w)).
    pub fn exp_pi_i(w: &Complex) -> Complex {
        let p = w.prec();
        let pi = Float::with_val(p, Constant::Pi);
        let mag = (-Float::with_val(p, &pi * &w.im)).exp();
        let angle = Float::with_val(p, &pi * &w.re);
        let (sin, cos) = angle.sin_cos(Float::new(p));
        Complex {
            re: Float::with_val(p, &mag * &cos),
            im: Float::with_val(p, &mag * &sin),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_identities() {
        let a = Complex::from_f64(1.5, -2.0, 128);
        let b = Complex::from_f64(0.25, 3.0, 128);
        let prod = a.mul(&b);
        let back = prod.div(&b);
        assert!(back.sub(&a).abs_f64() < 1e-30);
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn exp_pi_i_quarter_turns() {
        let p = 192;
        let i1 = Complex::exp_pi_i(&Complex::from_f64(0.5, 0.0, p)); // e^{iπ/2} = i
        assert!(i1.sub(&Complex::from_f64(0.0, 1.0, p)).abs_f64() < 1e-50);
        let m1 = Complex::exp_pi_i(&Complex::from_f64(1.0, 0.0, p)); // e^{iπ} = −1
        assert!(m1.sub(&Complex::from_f64(-1.0, 0.0, p)).abs_f64() < 1e-50);
        // e^{πi·(i)} = e^{−π}
        let d = Complex::exp_pi_i(&Complex::from_f64(0.0, 1.0, p));
        assert!((d.re.to_f64() - (-std::f64::consts::PI).exp()).abs() < 1e-15);
        assert!(d.im.to_f64().abs() < 1e-50);
    }
}
