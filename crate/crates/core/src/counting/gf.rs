//! Truncated expansions of the closed-form generating functions, and the
//! functional equations they satisfy.
//!
//! * `F(z, y) = Σ_k z^k y^k / Π_{i≤k} (1 - (2^i - 1) z)`: 3-free NL posets, `y`
//!   marking minima.
//! * `G(z, y) = 1/(1 + zy) · Σ_k z^k y^k / Π_{i≤k} (1 - (2^i - 1 - y) z)`: the
//!   same without isolated elements.
//! * `Σ_n Π_{i≤n} (1 - (1 - z)^i)`: interval orders.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::series::BivariateSeries;
use super::{CountSeries, MinimaTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfId {
    ThreeFree,
    ThreeFreeNoIsolated,
    IntervalOrders,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionalEquation {
    /// `F = 1 + z (F(z, 2y) - (1 - y) F(z, y))`.
    ThreeFree,
    /// `G = (1 - zy + z (G(z/(1-zy), 2y) - (1-y)(1-zy) G)) / (1 - z²y²)`.
    ThreeFreeNoIsolated,
}

/// `F(z, y)` through `z^order`.
pub fn three_free_bivariate(order: usize) -> BivariateSeries {
    let mut f = BivariateSeries::zero(order);
    // P_k(z) = z P_{k-1}(z) / (1 - (2^k - 1) z), P_0 = 1.
    let mut pk: Vec<BigInt> = vec![BigInt::zero(); order + 1];
    pk[0] = BigInt::one();
    f.set(0, 0, BigInt::one());
    for k in 1..=order {
        let c = (BigInt::one() << k) - 1;
        let mut next = vec![BigInt::zero(); order + 1];
        for n in 1..=order {
            let carried = &c * &next[n - 1];
            next[n] = &pk[n - 1] + carried;
        }
        pk = next;
        for (n, coeff) in pk.iter().enumerate() {
            f.set(n, k, coeff.clone());
        }
    }
    f
}

/// `G(z, y)` through `z^order`.
pub fn three_free_no_isolated_bivariate(order: usize) -> BivariateSeries {
    let mut sum = BivariateSeries::one(order);
    // Q_k = z y Q_{k-1} / (1 - (2^k - 1 - y) z).
    let mut q = BivariateSeries::one(order);
    for k in 1..=order {
        let c = (BigInt::one() << k) - 1;
        let mut next = BivariateSeries::zero(order);
        for n in 1..=order {
            for j in 0..order {
                // z y Q_{k-1} contributes at (n, j+1) from (n-1, j).
                let mut v = q.get(n - 1, j).clone();
                v += &c * next.get(n - 1, j + 1);
                v -= next.get(n - 1, j);
                next.set(n, j + 1, v);
            }
        }
        q = next;
        sum = &sum + &q;
    }
    &BivariateSeries::geometric(order, -1, 1, 1) * &sum
}

/// `Σ_n Π_{i≤n} (1 - (1 - z)^i)` through `z^order`.
pub fn interval_orders(order: usize) -> Vec<BigInt> {
    let mut total = vec![BigInt::zero(); order + 1];
    total[0] = BigInt::one();
    let mut product = total.clone();
    let mut one_minus_z_pow = vec![BigInt::zero(); order + 1];
    one_minus_z_pow[0] = BigInt::one();
    for _ in 1..=order {
        // (1 - z)^i from (1 - z)^(i-1).
        for n in (1..=order).rev() {
            let prev = one_minus_z_pow[n - 1].clone();
            one_minus_z_pow[n] -= prev;
        }
        let factor: Vec<BigInt> = one_minus_z_pow
            .iter()
            .enumerate()
            .map(|(n, c)| if n == 0 { BigInt::zero() } else { -c })
            .collect();
        let mut next = vec![BigInt::zero(); order + 1];
        for (a, pa) in product.iter().enumerate() {
            if pa.is_zero() {
                continue;
            }
            for (b, fb) in factor.iter().enumerate().take(order + 1 - a) {
                if !fb.is_zero() {
                    next[a + b] += pa * fb;
                }
            }
        }
        product = next;
        for (t, p) in total.iter_mut().zip(&product) {
            *t += p;
        }
    }
    total
}

fn to_unsigned(c: &BigInt) -> BigUint {
    assert!(
        !c.is_negative(),
        "counting series coefficient {c} is negative"
    );
    c.magnitude().clone()
}

/// Coefficients of `z^0..=z^order` of the chosen generating function at `y = 1`.
pub fn series_from_gf(gf: GfId, order: usize) -> CountSeries {
    let (name, coeffs) = match gf {
        GfId::ThreeFree => ("nl-3free", three_free_bivariate(order).at_y_one()),
        GfId::ThreeFreeNoIsolated => (
            "nl-3free-noiso",
            three_free_no_isolated_bivariate(order).at_y_one(),
        ),
        GfId::IntervalOrders => ("interval-orders", interval_orders(order)),
    };
    CountSeries::new(name, 0, coeffs.iter().map(to_unsigned).collect())
}

/// Coefficients with `y` marking minima; `None` for the univariate interval-order series.
pub fn minima_table_from_gf(gf: GfId, order: usize) -> Option<MinimaTable> {
    let f = match gf {
        GfId::ThreeFree => three_free_bivariate(order),
        GfId::ThreeFreeNoIsolated => three_free_no_isolated_bivariate(order),
        GfId::IntervalOrders => return None,
    };
    Some(MinimaTable::from_rows(
        (0..=order)
            .map(|n| (0..=n).map(|k| to_unsigned(f.get(n, k))).collect())
            .collect(),
    ))
}

/// `F - (1 + z (F(z, 2y) - (1 - y) F))` for a given `F`.
pub fn three_free_residual(f: &BivariateSeries) -> BivariateSeries {
    let order = f.order();
    let one_minus_y =
        &BivariateSeries::one(order) - &BivariateSeries::monomial(order, 0, 1, BigInt::one());
    let inner = &f.scale_y(2) - &(&one_minus_y * f);
    let rhs = &BivariateSeries::one(order) + &inner.times_z();
    f - &rhs
}

/// `G - (1 - zy + z (G(z/(1-zy), 2y) - (1-y)(1-zy) G)) / (1 - z²y²)` for a given `G`.
pub fn no_isolated_residual(g: &BivariateSeries) -> BivariateSeries {
    let order = g.order();
    let one = BivariateSeries::one(order);
    let y = BivariateSeries::monomial(order, 0, 1, BigInt::one());
    let zy = BivariateSeries::monomial(order, 1, 1, BigInt::one());
    let one_minus_zy = &one - &zy;
    let substituted = g.scale_y(2).substitute_z_over_one_minus(1);
    let damped = &(&(&one - &y) * &one_minus_zy) * g;
    let bracket = &one_minus_zy + &(&substituted - &damped).times_z();
    let rhs = &BivariateSeries::geometric(order, 1, 2, 2) * &bracket;
    g - &rhs
}

/// `F - G(z/(1-zy), y) / (1 - zy)`.
pub fn change_of_variables_residual(f: &BivariateSeries, g: &BivariateSeries) -> BivariateSeries {
    let order = f.order();
    let rhs = &BivariateSeries::geometric(order, 1, 1, 1) * &g.substitute_z_over_one_minus(1);
    f - &rhs
}

/// Residual `LHS - RHS` of the chosen functional equation, with both sides
/// built from the closed-form expansions. Zero through `order` when the
/// equation holds.
pub fn check_functional_equation(eq: FunctionalEquation, order: usize) -> BivariateSeries {
    match eq {
        FunctionalEquation::ThreeFree => three_free_residual(&three_free_bivariate(order)),
        FunctionalEquation::ThreeFreeNoIsolated => {
            no_isolated_residual(&three_free_no_isolated_bivariate(order))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::q_stirling_table;

    fn as_u64(s: &CountSeries) -> Vec<u64> {
        s.terms.iter().map(|t| u64::try_from(t).unwrap()).collect()
    }

    #[test]
    fn three_free_coefficients() {
        assert_eq!(
            as_u64(&series_from_gf(GfId::ThreeFree, 5)),
            [1, 1, 2, 6, 26, 158]
        );
        assert_eq!(
            minima_table_from_gf(GfId::ThreeFree, 10).unwrap(),
            q_stirling_table(10)
        );
    }

    #[test]
    fn no_isolated_coefficients() {
        let s = as_u64(&series_from_gf(GfId::ThreeFreeNoIsolated, 6));
        assert_eq!(s[0], 1);
        assert_eq!(s[1], 0);
        // Two elements: only 1 < 2.
        assert_eq!(s[2], 1);
    }

    #[test]
    fn interval_order_coefficients() {
        assert_eq!(
            as_u64(&series_from_gf(GfId::IntervalOrders, 5)),
            [1, 1, 2, 5, 15, 53]
        );
    }

    #[test]
    fn equations_hold() {
        assert!(check_functional_equation(FunctionalEquation::ThreeFree, 10).is_zero());
        assert!(check_functional_equation(FunctionalEquation::ThreeFreeNoIsolated, 8).is_zero());
        let f = three_free_bivariate(10);
        let g = three_free_no_isolated_bivariate(10);
        assert!(change_of_variables_residual(&f, &g).is_zero());
    }

    #[test]
    fn perturbation_is_detected() {
        let mut f = three_free_bivariate(8);
        *f.coeff_mut(3, 1) += 1;
        let r = three_free_residual(&f);
        assert_eq!(r.first_nonzero_order(), Some(3));
        assert!((0..=8).any(|k| !r.get(4, k).is_zero()));
    }
}
