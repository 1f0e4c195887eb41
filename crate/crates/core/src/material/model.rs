use alloc::format;

use num_traits::{One, Signed, Zero};

use crate::poly::{rat, Rational};
use crate::{Error, Result};

/// Taylor coefficients of `σ(k1, k2)` at the stress-free reference state.
///
/// `σ0 = σ1 = 0` is built in. Fields are the partial derivatives of `σ`
/// named by their index lists (`sigma112 = ∂³σ/∂k1²∂k2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaterialModel {
    pub sigma2: Rational,
    pub sigma11: Rational,
    pub sigma12: Rational,
    pub sigma111: Rational,
    pub sigma112: Rational,
    pub sigma1111: Rational,
    pub sigma22: Rational,
}

impl MaterialModel {
    pub const NAMES: [&'static str; 7] = [
        "sigma2", "sigma11", "sigma12", "sigma111", "sigma112", "sigma1111", "sigma22",
    ];

    /// Builds and validates a material from the seven coefficients in [`NAMES`](Self::NAMES) order.
    pub fn new(values: [Rational; 7]) -> Result<Self> {
        let m = Self::unchecked(values);
        m.validate()?;
        Ok(m)
    }

    /// No validation; used for pure arithmetic (e.g. basis materials).
    pub fn unchecked(values: [Rational; 7]) -> Self {
        let [sigma2, sigma11, sigma12, sigma111, sigma112, sigma1111, sigma22] = values;
        MaterialModel {
            sigma2,
            sigma11,
            sigma12,
            sigma111,
            sigma112,
            sigma1111,
            sigma22,
        }
    }

    pub fn zero() -> Self {
        Self::unchecked(core::array::from_fn(|_| Rational::zero()))
    }

    /// Material with a single unit coefficient, `NAMES[k] = 1`.
    pub fn basis(k: usize) -> Self {
        let mut v: [Rational; 7] = core::array::from_fn(|_| Rational::zero());
        v[k] = Rational::one();
        Self::unchecked(v)
    }

    pub fn values(&self) -> [Rational; 7] {
        [
            self.sigma2.clone(),
            self.sigma11.clone(),
            self.sigma12.clone(),
            self.sigma111.clone(),
            self.sigma112.clone(),
            self.sigma1111.clone(),
            self.sigma22.clone(),
        ]
    }

    pub fn get(&self, name: &str) -> Result<&Rational> {
        Ok(match name {
            "sigma2" => &self.sigma2,
            "sigma11" => &self.sigma11,
            "sigma12" => &self.sigma12,
            "sigma111" => &self.sigma111,
            "sigma112" => &self.sigma112,
            "sigma1111" => &self.sigma1111,
            "sigma22" => &self.sigma22,
            _ => return Err(Error::UnknownVariable(name.into())),
        })
    }

    pub fn set(&mut self, name: &str, value: Rational) -> Result<()> {
        let slot = match name {
            "sigma2" => &mut self.sigma2,
            "sigma11" => &mut self.sigma11,
            "sigma12" => &mut self.sigma12,
            "sigma111" => &mut self.sigma111,
            "sigma112" => &mut self.sigma112,
            "sigma1111" => &mut self.sigma1111,
            "sigma22" => &mut self.sigma22,
            _ => return Err(Error::UnknownVariable(name.into())),
        };
        *slot = value;
        Ok(())
    }

    /// Requires `c1² = 4σ11 > c2² = −2σ2 > 0`.
    pub fn validate(&self) -> Result<()> {
        if !self.sigma11.is_positive() {
            return Err(Error::InvalidMaterial(format!(
                "sigma11 = {} must be positive (c1^2 = 4 sigma11)",
                self.sigma11
            )));
        }
        if !self.sigma2.is_negative() {
            return Err(Error::InvalidMaterial(format!(
                "sigma2 = {} must be negative (c2^2 = -2 sigma2)",
                self.sigma2
            )));
        }
        if self.c1sq() <= self.c2sq() {
            return Err(Error::InvalidMaterial(format!(
                "pressure speed must exceed shear speed: c1^2 = {} <= c2^2 = {}",
                self.c1sq(),
                self.c2sq()
            )));
        }
        Ok(())
    }

    pub fn c1sq(&self) -> Rational {
        &self.sigma11 * rat(4, 1)
    }

    pub fn c2sq(&self) -> Rational {
        &self.sigma2 * rat(-2, 1)
    }

    /// `σ11 = 1, σ2 = −1` and no higher-order terms: only the linear system survives.
    pub fn linear() -> Self {
        let mut m = Self::zero();
        m.sigma11 = rat(1, 1);
        m.sigma2 = rat(-1, 1);
        m
    }

    /// Satisfies both null conditions: `d1 = e1 = e2 = 0`, with `c1² = 4`, `c2² = 2`.
    pub fn null_example() -> Self {
        Self::unchecked([
            rat(-1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(-3, 2),
            rat(0, 1),
            rat(15, 4),
            rat(1, 1),
        ])
    }

    /// Same `c1, c2` and quartic cross terms as [`null_example`](Self::null_example)
    /// but `σ111 = σ1111 = 0`, so `d1 = 2` (genuinely nonlinear) and `e1 = 1/2`.
    pub fn genuinely_nonlinear_example() -> Self {
        let mut m = Self::null_example();
        m.sigma111 = rat(0, 1);
        m.sigma1111 = rat(0, 1);
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(MaterialModel::linear().validate().is_ok());
        assert!(MaterialModel::null_example().validate().is_ok());
        assert!(MaterialModel::zero().validate().is_err());
        let mut m = MaterialModel::linear();
        m.sigma2 = rat(-3, 1); // c2^2 = 6 > c1^2 = 4
        assert!(matches!(m.validate(), Err(Error::InvalidMaterial(_))));
        m.sigma2 = rat(1, 1);
        assert!(m.validate().is_err());
    }

    #[test]
    fn named_access() {
        let mut m = MaterialModel::zero();
        for (k, name) in MaterialModel::NAMES.iter().enumerate() {
            m.set(name, rat(k as i64 + 1, 1)).unwrap();
        }
        assert_eq!(m.get("sigma1111").unwrap(), &rat(6, 1));
        assert_eq!(m.values()[0], rat(1, 1));
        assert!(m.get("sigma3").is_err());
        assert_eq!(MaterialModel::basis(3).sigma111, rat(1, 1));
    }
}
