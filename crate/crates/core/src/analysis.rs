//! Ratio-method diagnostics and log-space fits of
//! `a_n ~ A γ^n μ^(n^(1/3)) n^β`, where `a_n = count_n / n!`.
//!
//! Everything downstream of [`log_of_count`] is ordinary double precision.

use std::fmt::Write as _;

use nalgebra::{DMatrix, DVector, Matrix3, Vector3};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::counting::CountSeries;

/// `1 / ln 4`.
pub const LOG4_INV: f64 = 0.721_347_520_444_481_7;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("term a({n}) is zero; logarithms need positive terms")]
    NonPositive { n: usize },
    #[error("need at least {needed} terms, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("index range {start}..{end} is not covered by the series ({first}..{last})")]
    BadRange {
        start: usize,
        end: usize,
        first: usize,
        last: usize,
    },
    #[error("series indices must be consecutive (gap after n = {0})")]
    Gap(usize),
    #[error("{0}")]
    BadParameter(String),
    #[error("least-squares system is rank deficient")]
    RankDeficient,
}

/// Natural logarithm of a positive integer, from its bit length and leading
/// 128 bits.
pub fn log_of_count(x: &BigUint) -> Result<f64, AnalysisError> {
    if x.is_zero() {
        return Err(AnalysisError::NonPositive { n: 0 });
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(128);
    let top: u128 = (x >> shift).try_into().expect("at most 128 bits remain");
    Ok((top as f64).ln() + shift as f64 * std::f64::consts::LN_2)
}

/// `(n, ln a_n)` for consecutive `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogSeries {
    pub first: usize,
    pub values: Vec<f64>,
}

impl LogSeries {
    /// `ln(count_n / n!)` for every term of `s`.
    pub fn from_counts(s: &CountSeries) -> Result<Self, AnalysisError> {
        let mut factorial = BigUint::one();
        for k in 2..=s.offset {
            factorial *= k;
        }
        let mut values = Vec::with_capacity(s.len());
        for (n, t) in s.iter() {
            if n > s.offset {
                factorial *= n;
            }
            let log_t = log_of_count(t).map_err(|_| AnalysisError::NonPositive { n })?;
            values.push(log_t - log_of_count(&factorial)?);
        }
        Ok(LogSeries {
            first: s.offset,
            values,
        })
    }

    /// Exact model values `ln A + n ln γ + n^(1/3) ln μ + β ln n` for
    /// `n ∈ [first, last]`, `first ≥ 1`.
    pub fn from_model(m: &ModelParams, first: usize, last: usize) -> Self {
        assert!(first >= 1 && first <= last);
        LogSeries {
            first,
            values: (first..=last).map(|n| m.log_term(n as f64)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn last(&self) -> usize {
        self.first + self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<f64> {
        n.checked_sub(self.first)
            .and_then(|i| self.values.get(i))
            .copied()
    }

    fn check_range(&self, start: usize, end: usize) -> Result<(), AnalysisError> {
        if self.is_empty() || start < self.first || end > self.last() || start > end {
            return Err(AnalysisError::BadRange {
                start,
                end,
                first: self.first,
                last: if self.is_empty() {
                    self.first
                } else {
                    self.last()
                },
            });
        }
        Ok(())
    }
}

/// Parameters of the stretched-exponential model, in log form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub log_a: f64,
    pub gamma: f64,
    pub log_mu: f64,
    pub beta: f64,
}

impl ModelParams {
    pub fn new(a: f64, gamma: f64, mu: f64, beta: f64) -> Self {
        ModelParams {
            log_a: a.ln(),
            gamma,
            log_mu: mu.ln(),
            beta,
        }
    }

    pub fn log_term(&self, n: f64) -> f64 {
        self.log_a + n * self.gamma.ln() + n.cbrt() * self.log_mu + self.beta * n.ln()
    }
}

/// `r_n = a_{n+1} / a_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioSequence {
    pub pairs: Vec<(usize, f64)>,
}

pub fn ratios(s: &LogSeries) -> Result<RatioSequence, AnalysisError> {
    if s.len() < 2 {
        return Err(AnalysisError::TooShort {
            needed: 2,
            got: s.len(),
        });
    }
    let pairs = s
        .values
        .windows(2)
        .enumerate()
        .map(|(i, w)| (s.first + i, (w[1] - w[0]).exp()))
        .collect();
    Ok(RatioSequence { pairs })
}

/// A numeric table with a comment line and named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub comment: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    fn new(comment: &str, columns: &[&str]) -> Self {
        Table {
            comment: comment.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    /// `# comment`, a header row, then one line per row.
    pub fn to_delimited(&self, sep: char) -> String {
        let mut out = format!("# {}\n", self.comment);
        out.push_str(&self.columns.join(&sep.to_string()));
        out.push('\n');
        for row in &self.rows {
            for (i, x) in row.iter().enumerate() {
                if i > 0 {
                    out.push(sep);
                }
                write!(out, "{x}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

pub fn ratio_table(r: &RatioSequence) -> Table {
    let mut t = Table::new(
        "ratios r_n = a(n+1)/a(n), a(n) = count(n)/n!",
        &["n", "r_n"],
    );
    t.rows = r.pairs.iter().map(|&(n, x)| vec![n as f64, x]).collect();
    t
}

/// Plot columns for the ratio method, skipping `n = 0`.
///
/// `scaled = n^(1-α) (r_n/γ - 1)`; against `n^-α` it is linear with intercept
/// `ln μ / 3` when the model holds with `α = 1/3`.
pub fn ratio_transforms(r: &RatioSequence, gamma: f64, alpha: f64) -> Result<Table, AnalysisError> {
    if !(gamma > 0.0) {
        return Err(AnalysisError::BadParameter(format!(
            "gamma must be positive, got {gamma}"
        )));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(AnalysisError::BadParameter(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    let mut t = Table::new(
        &format!("ratio transforms, gamma = {gamma}, alpha = {alpha}"),
        &[
            "n",
            "inv_n",
            "n_pow_alpha_minus_1",
            "n_pow_minus_alpha",
            "r_n",
            "r_over_gamma",
            "scaled",
        ],
    );
    for &(n, rn) in r.pairs.iter().filter(|p| p.0 > 0) {
        let x = n as f64;
        let q = rn / gamma;
        t.rows.push(vec![
            x,
            1.0 / x,
            x.powf(alpha - 1.0),
            x.powf(-alpha),
            rn,
            q,
            x.powf(1.0 - alpha) * (q - 1.0),
        ]);
    }
    Ok(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitMode {
    Direct3Point,
    OlsFixedGamma,
    OlsFreeGamma,
}

/// γ handling for [`ols_fit`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gamma {
    Fixed(f64),
    Free,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitEstimate {
    pub mode: FitMode,
    pub gamma: f64,
    pub log_a: f64,
    pub log_mu: f64,
    pub beta: f64,
    /// Inclusive index range used.
    pub range: (usize, usize),
    /// Euclidean norm of the residual vector.
    pub residual: f64,
    /// `|Xᵀ(Xc - y)| / (|X| |y|)`, zero at an exact least-squares optimum.
    pub gradient: f64,
}

impl FitEstimate {
    pub fn a(&self) -> f64 {
        self.log_a.exp()
    }

    pub fn mu(&self) -> f64 {
        self.log_mu.exp()
    }

    pub fn params(&self) -> ModelParams {
        ModelParams {
            log_a: self.log_a,
            gamma: self.gamma,
            log_mu: self.log_mu,
            beta: self.beta,
        }
    }
}

/// One row per estimate: `n` is the start of its range.
pub fn estimate_table(comment: &str, fits: &[FitEstimate]) -> Table {
    let mut t = Table::new(
        comment,
        &[
            "n", "gamma", "A", "mu", "beta", "log_A", "log_mu", "residual",
        ],
    );
    t.rows = fits
        .iter()
        .map(|f| {
            vec![
                f.range.0 as f64,
                f.gamma,
                f.a(),
                f.mu(),
                f.beta,
                f.log_a,
                f.log_mu,
                f.residual,
            ]
        })
        .collect();
    t
}

/// Solves the model exactly through `(k, ln a_k)` for `k = n, n+1, n+2`, for
/// every admissible `n ≥ 1`.
pub fn direct_fit(s: &LogSeries, gamma: f64) -> Result<Vec<FitEstimate>, AnalysisError> {
    if !(gamma > 0.0) {
        return Err(AnalysisError::BadParameter(format!(
            "gamma must be positive, got {gamma}"
        )));
    }
    let start = s.first.max(1);
    if s.is_empty() || s.last() < start + 2 {
        return Err(AnalysisError::TooShort {
            needed: 3,
            got: s.len(),
        });
    }
    let lg = gamma.ln();
    let mut out = Vec::new();
    for n in start..=s.last() - 2 {
        let mut m = Matrix3::zeros();
        let mut b = Vector3::zeros();
        for i in 0..3 {
            let k = (n + i) as f64;
            m[(i, 0)] = 1.0;
            m[(i, 1)] = k.cbrt();
            m[(i, 2)] = k.ln();
            b[i] = s.get(n + i).unwrap() - k * lg;
        }
        let x = m
            .lu()
            .solve(&b)
            .expect("distinct abscissae give a nonsingular system");
        let residual = (m * x - b).norm();
        out.push(FitEstimate {
            mode: FitMode::Direct3Point,
            gamma,
            log_a: x[0],
            log_mu: x[1],
            beta: x[2],
            range: (n, n + 2),
            residual,
            gradient: 0.0,
        });
    }
    Ok(out)
}

/// Least-squares fit of the model over `start..=end`.
pub fn ols_fit(
    s: &LogSeries,
    start: usize,
    end: usize,
    gamma: Gamma,
) -> Result<FitEstimate, AnalysisError> {
    s.check_range(start, end)?;
    if start == 0 {
        return Err(AnalysisError::BadParameter(
            "fits need n ≥ 1 (the model has ln n)".into(),
        ));
    }
    let free = matches!(gamma, Gamma::Free);
    let cols = if free { 4 } else { 3 };
    let rows = end - start + 1;
    if rows < cols + 1 {
        return Err(AnalysisError::TooShort {
            needed: cols + 1,
            got: rows,
        });
    }
    let lg = match gamma {
        Gamma::Fixed(g) if g > 0.0 => g.ln(),
        Gamma::Fixed(g) => {
            return Err(AnalysisError::BadParameter(format!(
                "gamma must be positive, got {g}"
            )))
        }
        Gamma::Free => 0.0,
    };
    let x = DMatrix::from_fn(rows, cols, |i, j| {
        let k = (start + i) as f64;
        [1.0, k.cbrt(), k.ln(), k][j]
    });
    let y = DVector::from_fn(rows, |i, _| {
        let k = (start + i) as f64;
        s.get(start + i).unwrap() - k * lg
    });
    // Equilibrate the columns before solving.
    let norms: Vec<f64> = x.column_iter().map(|c| c.norm()).collect();
    let mut xs = x.clone();
    for (j, mut c) in xs.column_iter_mut().enumerate() {
        c /= norms[j];
    }
    let svd = xs.svd(true, true);
    let tol = f64::EPSILON * rows as f64 * svd.singular_values.max();
    if svd.rank(tol) < cols {
        return Err(AnalysisError::RankDeficient);
    }
    let mut c = svd
        .solve(&y, tol)
        .map_err(|_| AnalysisError::RankDeficient)?;
    for j in 0..cols {
        c[j] /= norms[j];
    }
    let r = &x * &c - &y;
    let gradient = (x.transpose() * &r).norm() / (x.norm() * y.norm()).max(f64::MIN_POSITIVE);
    Ok(FitEstimate {
        mode: if free {
            FitMode::OlsFreeGamma
        } else {
            FitMode::OlsFixedGamma
        },
        gamma: if free { c[3].exp() } else { lg.exp() },
        log_a: c[0],
        log_mu: c[1],
        beta: c[2],
        range: (start, end),
        residual: r.norm(),
        gradient,
    })
}

/// Mean absolute second difference.
pub fn curvature(values: &[f64]) -> f64 {
    if values.len() < 3 {
        return 0.0;
    }
    let total: f64 = values
        .windows(3)
        .map(|w| (w[2] - 2.0 * w[1] + w[0]).abs())
        .sum();
    total / (values.len() - 2) as f64
}

/// Curvature of `n^(1-α)(r_n/γ - 1)` over the last `last` ratios.
pub fn transform_curvature(
    r: &RatioSequence,
    gamma: f64,
    alpha: f64,
    last: usize,
) -> Result<f64, AnalysisError> {
    let t = ratio_transforms(r, gamma, alpha)?;
    let col = t.column("scaled").unwrap();
    if col.len() < last {
        return Err(AnalysisError::TooShort {
            needed: last,
            got: col.len(),
        });
    }
    Ok(curvature(&col[col.len() - last..]))
}

/// Root-mean-square residual of the straight line through `(x, y)` by least squares.
pub fn linear_fit_rms(x: &[f64], y: &[f64]) -> f64 {
    let m = x.len() as f64;
    let mx = x.iter().sum::<f64>() / m;
    let my = y.iter().sum::<f64>() / m;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    let slope = sxy / sxx;
    let ss: f64 = x
        .iter()
        .zip(y)
        .map(|(a, b)| (b - my - slope * (a - mx)).powi(2))
        .sum();
    (ss / m).sqrt()
}

/// RMS departure from linearity of `r_n` over the last `last` ratios, plotted
/// against `n^-1` and against `n^(α-1)`.
pub fn linearity_residuals(
    r: &RatioSequence,
    alpha: f64,
    last: usize,
) -> Result<(f64, f64), AnalysisError> {
    let pts: Vec<(f64, f64)> = r
        .pairs
        .iter()
        .filter(|p| p.0 > 0)
        .map(|&(n, x)| (n as f64, x))
        .collect();
    if pts.len() < last || last < 3 {
        return Err(AnalysisError::TooShort {
            needed: last.max(3),
            got: pts.len(),
        });
    }
    let tail = &pts[pts.len() - last..];
    let y: Vec<f64> = tail.iter().map(|p| p.1).collect();
    let inv: Vec<f64> = tail.iter().map(|p| 1.0 / p.0).collect();
    let stretched: Vec<f64> = tail.iter().map(|p| p.0.powf(alpha - 1.0)).collect();
    Ok((linear_fit_rms(&inv, &y), linear_fit_rms(&stretched, &y)))
}
