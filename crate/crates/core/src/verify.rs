//! Aggregated invariant suites. Each suite returns a list of named checks
//! rather than panicking, so callers can print a full report.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;

use crate::analysis::{self, Gamma, LogSeries, ModelParams, LOG4_INV};
use crate::bijections::bicoloured::{
    bicoloured_to_word, word_to_bicoloured, BicolouredPermutation, Colour,
};
use crate::bijections::decorated::{decorated_decode, decorated_encode};
use crate::bijections::lambda::{lambda, lambda_full_inverse};
use crate::bijections::stanley::{
    count_stanley_graphs_brute_force, poset_from_stanley, stanley_from_poset,
};
use crate::bijections::word::{decode_word, encode_word};
use crate::counting::gf::{
    change_of_variables_residual, minima_table_from_gf, three_free_bivariate,
};
use crate::counting::{self, FunctionalEquation, GfId};
use crate::enumerate::{count_family_by_minima, for_each_in_family};
use crate::matrix_pattern::{matches_pattern, MatrixPattern};
use crate::perm::{for_each_permutation, Permutation, VincularPattern};
use crate::poset::{FamilyId, IncidenceMatrix, Poset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Matrices,
    Bijections,
    Counting,
    Series,
}

impl Suite {
    pub const PARTS: [Suite; 4] = [
        Suite::Matrices,
        Suite::Bijections,
        Suite::Counting,
        Suite::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Matrices => "matrices",
            Suite::Bijections => "bijections",
            Suite::Counting => "counting",
            Suite::Series => "series",
        }
    }

    /// The `max_n` used when none is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::All | Suite::Matrices | Suite::Bijections => 7,
            Suite::Counting => 10,
            Suite::Series => 557,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Suite::All,
            Suite::Matrices,
            Suite::Bijections,
            Suite::Counting,
            Suite::Series,
        ]
        .into_iter()
        .find(|x| x.name() == s)
        .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{}] {}: {}", self.suite, self.name, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(
        &mut self,
        suite: Suite,
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check {
            suite,
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Runs one suite, or every suite for [`Suite::All`] (which then uses each
/// suite's default size unless `max_n` is given).
pub fn run(suite: Suite, max_n: Option<usize>) -> Report {
    let mut report = Report::default();
    let parts: Vec<Suite> = if suite == Suite::All {
        Suite::PARTS.to_vec()
    } else {
        vec![suite]
    };
    for s in parts {
        let n = max_n.unwrap_or(s.default_max_n());
        match s {
            Suite::Matrices => matrices(n, &mut report),
            Suite::Bijections => bijections(n, &mut report),
            Suite::Counting => counting_checks(n, &mut report),
            Suite::Series => series(n, &mut report),
            Suite::All => unreachable!(),
        }
    }
    report
}

fn elapsed(t: Instant) -> String {
    format!("{:.2?}", t.elapsed())
}

/// Every upper-triangular 0/1 matrix with unit diagonal of size `n`.
fn for_each_unit_upper(n: usize, mut f: impl FnMut(IncidenceMatrix)) {
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    for mask in 0u64..1 << cells.len() {
        let mut rows: Vec<u64> = (0..n).map(|i| 1 << i).collect();
        for (k, &(i, j)) in cells.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        f(IncidenceMatrix::from_rows(rows).expect("unit diagonal by construction"));
    }
}

/// Pattern characterisations against the semantic predicates, exhaustively.
pub fn matrices(max_n: usize, report: &mut Report) {
    let t = Instant::now();
    let intransitive = MatrixPattern::intransitive();
    let m0 = MatrixPattern::m0();
    let all = MatrixPattern::three_two_plus_two();
    let mut seen = 0u64;
    let mut first_bad: Option<String> = None;
    for n in 0..=max_n {
        for_each_unit_upper(n, |m| {
            seen += 1;
            if first_bad.is_some() {
                return;
            }
            let poset = Poset::from_matrix(&m).ok();
            let fail = |what: &str| Some(format!("{what} on {}", m.to_text().replace('\n', "/")));
            if poset.is_some() == matches_pattern(&m, &intransitive) {
                first_bad = fail("transitivity");
                return;
            }
            let Some(p) = poset else { return };
            if p.is_three_free() == matches_pattern(&m, &m0) {
                first_bad = fail("3-free");
                return;
            }
            let semantic = p.is_three_free() && p.is_two_plus_two_free();
            if semantic == all.iter().any(|pat| matches_pattern(&m, pat)) {
                first_bad = fail("{3, 2+2}-free");
            }
        });
    }
    report.push(
        Suite::Matrices,
        format!("pattern characterisations, n <= {max_n}"),
        first_bad.is_none(),
        first_bad.unwrap_or_else(|| format!("{seen} matrices in {}", elapsed(t))),
    );
}

fn all_in_family(f: FamilyId, n: usize) -> Vec<Poset> {
    let mut out = Vec::new();
    for_each_in_family(f, n, usize::MAX, |p| out.push(p.clone())).expect("no limit");
    out
}

/// Every member of 𝓑 of length `n`.
pub fn class_b(n: usize) -> Vec<BicolouredPermutation> {
    let mut out = Vec::new();
    for_each_permutation(n, |v| {
        let perm = Permutation::new(v.to_vec()).expect("permutation");
        for mask in 0u64..1 << n.saturating_sub(1) {
            let colours: Vec<Colour> = (0..n)
                .map(|i| {
                    if i > 0 && mask >> (i - 1) & 1 == 1 {
                        Colour::Red
                    } else {
                        Colour::Blue
                    }
                })
                .collect();
            let b = BicolouredPermutation::new(perm.clone(), colours).expect("lengths agree");
            if b.is_in_class_b() {
                out.push(b);
            }
        }
    });
    out
}

/// Round trips of every encoding, and Λ on 𝓑.
pub fn bijections(max_n: usize, report: &mut Report) {
    let s = Suite::Bijections;
    for n in 0..=max_n {
        let t = Instant::now();
        let family = all_in_family(FamilyId::Nl3And22Free, n);
        let mut bad = None;
        let mut images = HashSet::new();
        for p in &family {
            let ok = encode_word(p).and_then(|w| {
                let b = word_to_bicoloured(&w);
                let w2 = bicoloured_to_word(&b)?;
                let back = decode_word(&w2)?;
                Ok((w == w2 && &back == p && b.is_in_class_b(), b))
            });
            match ok {
                Ok((true, b)) => {
                    images.insert(b);
                }
                Ok((false, _)) => bad = bad.or(Some(format!("round trip differs at {p}"))),
                Err(e) => bad = bad.or(Some(format!("{p}: {e}"))),
            }
        }
        let injective = images.len() == family.len();
        report.push(
            s,
            format!("word and bicoloured round trips, n = {n}"),
            bad.is_none() && injective,
            bad.unwrap_or_else(|| {
                format!("{} posets, distinct images, {}", family.len(), elapsed(t))
            }),
        );

        let t = Instant::now();
        let b_class = class_b(n);
        let onto = b_class.len() == images.len() && b_class.iter().all(|b| images.contains(b));
        report.push(
            s,
            format!("bicoloured image is all of B, n = {n}"),
            onto,
            format!(
                "|B| = {}, image size {}, {}",
                b_class.len(),
                images.len(),
                elapsed(t)
            ),
        );

        let t = Instant::now();
        let pattern = VincularPattern::parse("43-12").unwrap();
        let mut lambda_images = HashSet::new();
        let mut bad = None;
        for b in &b_class {
            match lambda(b) {
                Ok(img) => {
                    if pattern.is_contained_in(img.values()) {
                        bad = bad.or(Some(format!("Λ({b}) = {img} contains 43-12")));
                    }
                    match lambda_full_inverse(&img) {
                        Ok(back) if &back == b => {}
                        Ok(back) => bad = bad.or(Some(format!("Ψ(Λ({b})) = {back}"))),
                        Err(e) => bad = bad.or(Some(format!("Ψ(Λ({b})): {e}"))),
                    }
                    lambda_images.insert(img);
                }
                Err(e) => bad = bad.or(Some(format!("Λ({b}): {e}"))),
            }
        }
        let mut avoiders = 0usize;
        for_each_permutation(n, |v| {
            if pattern.is_contained_in(v) {
                return;
            }
            avoiders += 1;
            let p = Permutation::new(v.to_vec()).unwrap();
            if !lambda_images.contains(&p) {
                bad = bad
                    .clone()
                    .or(Some(format!("{p} is not in the image of Λ")));
            }
            match lambda_full_inverse(&p).and_then(|b| lambda(&b)) {
                Ok(q) if q == p => {}
                Ok(q) => bad = bad.clone().or(Some(format!("Λ(Ψ({p})) = {q}"))),
                Err(e) => bad = bad.clone().or(Some(format!("Λ(Ψ({p})): {e}"))),
            }
        });
        let sizes_ok = lambda_images.len() == b_class.len() && avoiders == b_class.len();
        report.push(
            s,
            format!("Λ: B -> Av(43-12) bijective with inverse Ψ, n = {n}"),
            bad.is_none() && sizes_ok,
            bad.unwrap_or_else(|| {
                format!(
                    "{} avoiders, {} images, {}",
                    avoiders,
                    lambda_images.len(),
                    elapsed(t)
                )
            }),
        );

        let t = Instant::now();
        let three_free = all_in_family(FamilyId::Nl3Free, n);
        let mut bad = None;
        let mut graphs = HashSet::new();
        let mut decorations = HashSet::new();
        for p in &three_free {
            match stanley_from_poset(p).and_then(|g| poset_from_stanley(&g).map(|q| (g, q))) {
                Ok((g, q)) if &q == p => {
                    graphs.insert(g);
                }
                Ok((g, _)) => {
                    bad = bad.or(Some(format!("Stanley round trip differs at {p} via {g}")))
                }
                Err(e) => bad = bad.or(Some(format!("{p}: {e}"))),
            }
            match decorated_encode(p).and_then(|d| decorated_decode(&d).map(|q| (d, q))) {
                Ok((d, q)) if &q == p => {
                    decorations.insert(d);
                }
                Ok((d, _)) => {
                    bad = bad.or(Some(format!("decorated round trip differs at {p} via {d}")))
                }
                Err(e) => bad = bad.or(Some(format!("{p}: {e}"))),
            }
        }
        let mut detail = format!("{} posets", three_free.len());
        let mut ok = graphs.len() == three_free.len() && decorations.len() == three_free.len();
        if n <= 7 {
            let total = count_stanley_graphs_brute_force(n);
            ok &= total == three_free.len() as u64;
            detail.push_str(&format!(", {total} Stanley graphs"));
        }
        report.push(
            s,
            format!("Stanley and decorated round trips, n = {n}"),
            bad.is_none() && ok,
            bad.unwrap_or_else(|| format!("{detail}, {}", elapsed(t))),
        );
    }
}

fn to_biguint(xs: &[u64]) -> Vec<BigUint> {
    xs.iter().map(|&x| BigUint::from(x)).collect()
}

/// Hierarchy rows, oracle equivalences and the generating-function identities.
pub fn counting_checks(max_n: usize, report: &mut Report) {
    let s = Suite::Counting;
    let t = Instant::now();
    let rows: [(FamilyId, [u64; 5]); 4] = [
        (FamilyId::Nl, [1, 2, 7, 40, 357]),
        (FamilyId::Nl22Free, [1, 2, 7, 37, 272]),
        (FamilyId::Nl3Free, [1, 2, 6, 26, 158]),
        (FamilyId::Nl3And22Free, [1, 2, 6, 23, 107]),
    ];
    for (f, expect) in rows {
        let got: Vec<u64> = (1..=5)
            .map(|n| crate::count_family(f, n).unwrap())
            .collect();
        report.push(
            s,
            format!("{f} counts, n = 1..5"),
            got == expect,
            format!("{got:?}"),
        );
    }
    let io = counting::series_from_gf(GfId::IntervalOrders, 5);
    let got = &io.terms[1..];
    report.push(
        s,
        "interval-order coefficients, n = 1..5",
        got == to_biguint(&[1, 2, 5, 15, 53]).as_slice(),
        format!(
            "{:?} ({})",
            got.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            elapsed(t)
        ),
    );

    let t = Instant::now();
    let brute_n = max_n.min(crate::counting::brute::PERMUTATION_LIMIT);
    let dp = counting::generating_tree_counts(brute_n).expect("small");
    let p1234 = VincularPattern::parse("12-34").unwrap();
    let brute: Vec<BigUint> = (0..=brute_n)
        .map(|n| {
            counting::brute_force_avoider_count(&p1234, n)
                .unwrap()
                .into()
        })
        .collect();
    report.push(
        s,
        format!("generating tree = brute-force Av(12-34), n <= {brute_n}"),
        dp.terms == brute,
        format!("a({brute_n}) = {}, {}", brute[brute_n], elapsed(t)),
    );

    let t = Instant::now();
    let wilf_n = max_n.min(9);
    let pats = ["12-34", "12-43", "21-43", "43-12"].map(|p| VincularPattern::parse(p).unwrap());
    let mut agree = true;
    let mut last = Vec::new();
    for n in 0..=wilf_n {
        last = pats
            .iter()
            .map(|p| counting::brute_force_avoider_count(p, n).unwrap())
            .collect();
        agree &= last.iter().all(|&c| c == last[0]);
    }
    report.push(
        s,
        format!("Wilf-equivalence of 12-34, 12-43, 21-43, 43-12, n <= {wilf_n}"),
        agree,
        format!("n = {wilf_n}: {last:?}, {}", elapsed(t)),
    );

    let t = Instant::now();
    let fish_n = max_n.min(9);
    let fish = VincularPattern::fishburn();
    let io = counting::series_from_gf(GfId::IntervalOrders, fish_n);
    let brute: Vec<BigUint> = (0..=fish_n)
        .map(|n| {
            counting::brute_force_avoider_count(&fish, n)
                .unwrap()
                .into()
        })
        .collect();
    report.push(
        s,
        format!("interval-order series = Fishburn-pattern avoiders, n <= {fish_n}"),
        io.terms == brute,
        elapsed(t),
    );

    let t = Instant::now();
    let table_n = max_n.min(7);
    let q = counting::q_stirling_table(table_n);
    let f = minima_table_from_gf(GfId::ThreeFree, table_n).unwrap();
    let g = minima_table_from_gf(GfId::ThreeFreeNoIsolated, table_n).unwrap();
    let mut bad = None;
    for n in 0..=table_n {
        let by_min = to_biguint(&count_family_by_minima(FamilyId::Nl3Free, n, usize::MAX).unwrap());
        let by_min_noiso =
            to_biguint(&count_family_by_minima(FamilyId::Nl3FreeNoIso, n, usize::MAX).unwrap());
        if q.row(n) != by_min.as_slice() || f.row(n) != by_min.as_slice() {
            bad = bad.or(Some(format!("3-free minima row {n}")));
        }
        if g.row(n) != by_min_noiso.as_slice() {
            bad = bad.or(Some(format!("no-isolated minima row {n}")));
        }
    }
    report.push(
        s,
        format!("q-Stirling table, F and G coefficients = brute force by minima, n <= {table_n}"),
        bad.is_none(),
        bad.unwrap_or_else(|| elapsed(t)),
    );

    let t = Instant::now();
    for (eq, order) in [
        (FunctionalEquation::ThreeFree, 15),
        (FunctionalEquation::ThreeFreeNoIsolated, 12),
    ] {
        let r = counting::check_functional_equation(eq, order);
        report.push(
            s,
            format!("{eq:?} functional equation through order {order}"),
            r.is_zero(),
            match r.first_nonzero_order() {
                None => format!("zero residual, {}", elapsed(t)),
                Some(k) => format!("first nonzero residual at order {k}"),
            },
        );
    }
    let order = 12;
    let fz = three_free_bivariate(order);
    let gz = crate::counting::gf::three_free_no_isolated_bivariate(order);
    let r = change_of_variables_residual(&fz, &gz);
    report.push(
        s,
        format!("F/G change of variables through order {order}"),
        r.is_zero(),
        elapsed(t),
    );
}

/// `ln(3^k)` and `ln(7^k)` against `k ln 3`, `k ln 7`, for bit lengths up to 10⁶.
fn log_accuracy() -> f64 {
    let mut worst: f64 = 0.0;
    for (base, k) in [
        (3u32, 1u32),
        (3, 100),
        (7, 5000),
        (3, 630_000),
        (7, 356_000),
    ] {
        let x = num_traits::pow::Pow::pow(BigUint::from(base), k);
        let exact = k as f64 * (base as f64).ln();
        let got = analysis::log_of_count(&x).unwrap();
        worst = worst.max(((got - exact) / exact).abs());
    }
    worst
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Largest relative error over the fitted constants.
fn fit_error(f: &analysis::FitEstimate, m: &ModelParams) -> f64 {
    [
        rel(f.log_a, m.log_a),
        rel(f.gamma, m.gamma),
        rel(f.log_mu, m.log_mu),
        rel(f.beta, m.beta),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// Synthetic closure of the fits; with `terms ≥ 557` also the ratio and
/// curvature diagnostics on the real Av(12-34) series.
pub fn series(terms: usize, report: &mut Report) {
    let s = Suite::Series;
    let worst = log_accuracy();
    report.push(
        s,
        "log_of_count relative error",
        worst <= 1e-12,
        format!("worst {worst:e}"),
    );

    let mut worst = 0.0f64;
    for m in [
        ModelParams::new(0.0328, LOG4_INV, 37.928, -0.82557),
        ModelParams::new(2.5, 0.55, 3.0, 1.5),
        ModelParams::new(0.01, 0.95, 120.0, -2.0),
    ] {
        for f in analysis::direct_fit(&LogSeries::from_model(&m, 1, 102), m.gamma).unwrap() {
            worst = worst.max(fit_error(&f, &m));
        }
        let series = LogSeries::from_model(&m, 1, 600);
        for (a, b) in [(501, 600), (101, 600), (5, 40)] {
            worst = worst.max(fit_error(
                &analysis::ols_fit(&series, a, b, Gamma::Fixed(m.gamma)).unwrap(),
                &m,
            ));
        }
        for (a, b) in [(101, 600), (5, 40)] {
            worst = worst.max(fit_error(
                &analysis::ols_fit(&series, a, b, Gamma::Free).unwrap(),
                &m,
            ));
        }
    }
    report.push(
        s,
        "synthetic model recovered by direct and OLS fits",
        worst <= 1e-9,
        format!("worst {worst:e}"),
    );

    if terms < 557 {
        return;
    }
    let t = Instant::now();
    let counts = counting::generating_tree_counts(terms).expect("within memory budget");
    let log = LogSeries::from_counts(&counts).unwrap();
    let r = analysis::ratios(&log).unwrap();
    let r555 = r.pairs[555].1;
    report.push(
        s,
        "r_555 within 3% of 1/ln 4",
        rel(r555, LOG4_INV) <= 0.03,
        format!(
            "r_555 = {r555:.8}, {} terms generated in {}",
            terms + 1,
            elapsed(t)
        ),
    );
    let c = |g: f64| analysis::transform_curvature(&r, g, 1.0 / 3.0, 150).unwrap();
    let (lo, mid, hi) = (c(0.70), c(LOG4_INV), c(0.74));
    let ratio = (lo / mid).min(hi / mid);
    report.push(
        s,
        "transform curvature minimal near 1/ln 4",
        ratio >= 5.0,
        format!(
            "curvature {lo:.3e} / {mid:.3e} / {hi:.3e} at 0.70 / 1/ln 4 / 0.74, ratio {ratio:.2}"
        ),
    );
    let (inv, stretched) = analysis::linearity_residuals(&r, 1.0 / 3.0, 100).unwrap();
    report.push(
        s,
        "r_n closer to linear in n^(-2/3) than in n^(-1)",
        inv >= 5.0 * stretched,
        format!("rms {inv:.3e} against n^-1, {stretched:.3e} against n^(-2/3)"),
    );
}
