//! Dense bivariate power series in `z` and `y`, truncated at `z^N`.
//!
//! Every series used here has `y`-degree at most its `z`-degree, so keeping
//! `y` powers up to `N` loses nothing below the truncation order.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    order: usize,
    /// `coeffs[n][k]` is the coefficient of `z^n y^k`.
    coeffs: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            order,
            coeffs: vec![vec![BigInt::zero(); order + 1]; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 0, BigInt::one())
    }

    /// `c z^n y^k`, dropped if beyond the truncation.
    pub fn monomial(order: usize, n: usize, k: usize, c: BigInt) -> Self {
        let mut s = Self::zero(order);
        if n <= order && k <= order {
            s.coeffs[n][k] = c;
        }
        s
    }

    /// `Σ_m (c z^a y^b)^m`, the expansion of `1 / (1 - c z^a y^b)` for `a ≥ 1`.
    pub fn geometric(order: usize, c: i64, a: usize, b: usize) -> Self {
        assert!(a >= 1);
        let mut s = Self::zero(order);
        let c = BigInt::from(c);
        let mut power = BigInt::one();
        let mut m = 0;
        while m * a <= order && m * b <= order {
            s.coeffs[m * a][m * b] = power.clone();
            power *= &c;
            m += 1;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.coeffs[n][k]
    }

    pub fn set(&mut self, n: usize, k: usize, c: BigInt) {
        self.coeffs[n][k] = c;
    }

    pub fn coeff_mut(&mut self, n: usize, k: usize) -> &mut BigInt {
        &mut self.coeffs[n][k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    /// Smallest `z`-order with a nonzero coefficient.
    pub fn first_nonzero_order(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .position(|row| row.iter().any(|c| !c.is_zero()))
    }

    /// Nonzero coefficients `(n, k, c)` in `(n, k)` order.
    pub fn nonzero_terms(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for (n, row) in self.coeffs.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((n, k, c.clone()));
                }
            }
        }
        out
    }

    /// `F(z, 1)` as a univariate coefficient list.
    pub fn at_y_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|row| row.iter().sum()).collect()
    }

    /// Multiplication by `z`.
    pub fn times_z(&self) -> Self {
        let mut s = Self::zero(self.order);
        for n in 1..=self.order {
            s.coeffs[n].clone_from(&self.coeffs[n - 1]);
        }
        s
    }

    /// `F(z, c y)`.
    pub fn scale_y(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        let mut s = self.clone();
        for row in &mut s.coeffs {
            let mut power = BigInt::one();
            for x in row.iter_mut() {
                *x *= &power;
                power *= &c;
            }
        }
        s
    }

    /// `F(z / (1 - s z y), y)` for `s = ±1`.
    ///
    /// `z^n` becomes `z^n Σ_m C(n+m-1, m) s^m z^m y^m`.
    pub fn substitute_z_over_one_minus(&self, s: i64) -> Self {
        let mut out = Self::zero(self.order);
        for n in 0..=self.order {
            for m in 0..=self.order - n {
                let c = if n == 0 {
                    if m == 0 {
                        BigInt::one()
                    } else {
                        continue;
                    }
                } else {
                    binomial(BigInt::from(n + m - 1), BigInt::from(m))
                };
                let c = if s < 0 && m % 2 == 1 { -c } else { c };
                for k in 0..=self.order - m {
                    let a = &self.coeffs[n][k];
                    if !a.is_zero() {
                        out.coeffs[n + m][k + m] += a * &c;
                    }
                }
            }
        }
        out
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "truncation orders differ");
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.check_order(rhs);
        let mut s = self.clone();
        for (a, b) in s
            .coeffs
            .iter_mut()
            .flatten()
            .zip(rhs.coeffs.iter().flatten())
        {
            *a += b;
        }
        s
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;

    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.check_order(rhs);
        let mut s = self.clone();
        for (a, b) in s
            .coeffs
            .iter_mut()
            .flatten()
            .zip(rhs.coeffs.iter().flatten())
        {
            *a -= b;
        }
        s
    }
}

impl Neg for &BivariateSeries {
    type Output = BivariateSeries;

    fn neg(self) -> BivariateSeries {
        let mut s = self.clone();
        for a in s.coeffs.iter_mut().flatten() {
            *a = -std::mem::take(a);
        }
        s
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;

    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.check_order(rhs);
        let order = self.order;
        let mut out = BivariateSeries::zero(order);
        for n1 in 0..=order {
            for k1 in 0..=order {
                let a = &self.coeffs[n1][k1];
                if a.is_zero() {
                    continue;
                }
                for n2 in 0..=order - n1 {
                    for k2 in 0..=order - k1 {
                        let b = &rhs.coeffs[n2][k2];
                        if !b.is_zero() {
                            out.coeffs[n1 + n2][k1 + k2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

/// Largest absolute coefficient, for reporting residual sizes.
pub fn max_abs(s: &BivariateSeries) -> BigInt {
    s.coeffs
        .iter()
        .flatten()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default()
}
