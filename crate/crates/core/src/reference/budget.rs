//! Budget functions of the decomposition bound.
//!
//! `β(n) = Cn / lnln(k/3) - Cn / lnln(n)` bounds the number of removed edges
//! for `f`-non-expanding inputs with `f(x) = C / (log x (loglog x)^2)`
//! (base-2 logarithms). `β(k/3) = 0`.

use crate::error::{domain, Result};

/// Smallest stop size for which the bound is claimed.
pub const MIN_STOP: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BudgetFns {
    pub c: f64,
}

impl BudgetFns {
    pub fn new(c: f64) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return domain(format!("C must be positive and finite, got {c}"));
        }
        Ok(Self { c })
    }

    /// Defined for `k ≥ 50` and `n ≥ k/3`.
    pub fn beta(&self, n: usize, k: usize) -> Result<f64> {
        if k < MIN_STOP {
            return domain(format!("beta needs k >= {MIN_STOP}, got {k}"));
        }
        if 3 * n < k {
            return domain(format!("beta needs n >= k/3, got n = {n}, k = {k}"));
        }
        let n = n as f64;
        let third = k as f64 / 3.0;
        Ok(self.c * n / third.ln().ln() - self.c * n / n.ln().ln())
    }

    /// `h(x) = x / lnln x`.
    pub fn h(&self, x: f64) -> f64 {
        x / x.ln().ln()
    }

    /// `f*(x) = 1 / (log x · (loglog x)^2)`.
    pub fn f_star(&self, x: f64) -> f64 {
        let l = x.log2();
        1.0 / (l * l.log2().powi(2))
    }

    /// `f(x) = C · f*(x)`.
    pub fn f(&self, x: f64) -> f64 {
        self.c * self.f_star(x)
    }
}

pub fn beta_budget(n: usize, k: usize, c: f64) -> Result<f64> {
    BudgetFns::new(c)?.beta(n, k)
}
