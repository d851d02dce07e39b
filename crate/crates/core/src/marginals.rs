//! Univariate margins: quasi-inverses, distribution functions and
//! equal-weight quantile discretizations.
//!
//! The quantile here is the left-continuous quasi-inverse
//! `F^{-1}(u) = inf{x : F(x) >= u}` for `u` in `(0,1]`, with the special
//! case `F^{-1}(0) = inf{x : F(x) > 0}` (the essential infimum).

use serde::{Deserialize, Serialize};
use statrs::distribution::{Continuous, ContinuousCDF, Normal as StatrsNormal};

use crate::error::{Error, Result};

/// A parametric or empirical univariate distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum Family {
    Uniform { a: f64, b: f64 },
    Normal { mu: f64, sigma: f64 },
    /// cdf `1 - (1+x)^(-theta)` on `x >= 0`.
    Pareto { theta: f64 },
    Exponential { lambda: f64 },
    Lognormal { mu: f64, sigma: f64 },
    Cauchy { loc: f64, scale: f64 },
    Binomial { m: u64, p: f64 },
    DiscreteUniform { points: Vec<f64> },
    Empirical { sample: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Margin {
    family: Family,
}

/// Support endpoints, scale quantities and the jump masses entering the
/// pairwise-countermonotonicity existence conditions.
#[derive(Debug, Clone, Serialize)]
pub struct SupportSummary {
    /// `sup{x : F(x) = 0}` (may be `-inf`).
    pub a: f64,
    /// `inf{x : F(x) = 1}` (may be `+inf`).
    pub b: f64,
    /// Support length `b - a`.
    pub len: f64,
    pub mean: Option<f64>,
    /// Mean absolute deviation `E|X - mean|`.
    pub abs_dev: Option<f64>,
    pub sd: Option<f64>,
    /// `1 - F(F^{-1}(0))`: mass strictly above the essential infimum.
    pub zero_mass: f64,
    /// `F(F^{-1}(1)-)`: mass strictly below the essential supremum.
    pub sup_left_mass: f64,
}

impl SupportSummary {
    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

impl Margin {
    pub fn new(family: Family) -> Result<Self> {
        match &family {
            Family::Uniform { a, b } => {
                require(a.is_finite() && b.is_finite() && a < b, "Uniform requires a < b, finite")?
            }
            Family::Normal { mu, sigma } => {
                require(mu.is_finite() && sigma.is_finite() && *sigma > 0.0, "Normal requires sigma > 0")?
            }
            Family::Pareto { theta } => {
                require(theta.is_finite() && *theta > 0.0, "Pareto requires theta > 0")?
            }
            Family::Exponential { lambda } => {
                require(lambda.is_finite() && *lambda > 0.0, "Exponential requires lambda > 0")?
            }
            Family::Lognormal { mu, sigma } => {
                require(mu.is_finite() && sigma.is_finite() && *sigma > 0.0, "Lognormal requires sigma > 0")?
            }
            Family::Cauchy { loc, scale } => {
                require(loc.is_finite() && scale.is_finite() && *scale > 0.0, "Cauchy requires scale > 0")?
            }
            Family::Binomial { m: _, p } => {
                require(p.is_finite() && (0.0..=1.0).contains(p), "Binomial requires 0 <= p <= 1")?
            }
            Family::DiscreteUniform { points } => {
                require(!points.is_empty(), "DiscreteUniform requires a nonempty point list")?;
                require(points.iter().all(|v| v.is_finite()), "DiscreteUniform points must be finite")?;
                require(
                    points.windows(2).all(|w| w[0] <= w[1]),
                    "DiscreteUniform points must be sorted",
                )?
            }
            Family::Empirical { sample } => {
                require(!sample.is_empty(), "Empirical requires a nonempty sample")?;
                require(sample.iter().all(|v| v.is_finite()), "Empirical sample must be finite")?;
                require(
                    sample.windows(2).all(|w| w[0] <= w[1]),
                    "Empirical sample must be sorted",
                )?
            }
        }
        Ok(Margin { family })
    }

    pub fn uniform(a: f64, b: f64) -> Result<Self> {
        Margin::new(Family::Uniform { a, b })
    }

    pub fn normal(mu: f64, sigma: f64) -> Result<Self> {
        Margin::new(Family::Normal { mu, sigma })
    }

    pub fn pareto(theta: f64) -> Result<Self> {
        Margin::new(Family::Pareto { theta })
    }

    pub fn exponential(lambda: f64) -> Result<Self> {
        Margin::new(Family::Exponential { lambda })
    }

    pub fn lognormal(mu: f64, sigma: f64) -> Result<Self> {
        Margin::new(Family::Lognormal { mu, sigma })
    }

    pub fn cauchy(loc: f64, scale: f64) -> Result<Self> {
        Margin::new(Family::Cauchy { loc, scale })
    }

    pub fn binomial(m: u64, p: f64) -> Result<Self> {
        Margin::new(Family::Binomial { m, p })
    }

    pub fn bernoulli(p: f64) -> Result<Self> {
        Margin::binomial(1, p)
    }

    pub fn discrete_uniform(mut points: Vec<f64>) -> Result<Self> {
        points.sort_by(f64::total_cmp);
        Margin::new(Family::DiscreteUniform { points })
    }

    pub fn empirical(mut sample: Vec<f64>) -> Result<Self> {
        sample.sort_by(f64::total_cmp);
        Margin::new(Family::Empirical { sample })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn family_name(&self) -> &'static str {
        match &self.family {
            Family::Uniform { .. } => "uniform",
            Family::Normal { .. } => "normal",
            Family::Pareto { .. } => "pareto",
            Family::Exponential { .. } => "exponential",
            Family::Lognormal { .. } => "lognormal",
            Family::Cauchy { .. } => "cauchy",
            Family::Binomial { .. } => "binomial",
            Family::DiscreteUniform { .. } => "discrete_uniform",
            Family::Empirical { .. } => "empirical",
        }
    }

    fn std_normal() -> StatrsNormal {
        StatrsNormal::new(0.0, 1.0).expect("standard normal")
    }

    /// Left-continuous quasi-inverse; `quantile(0)` is the essential infimum
    /// and `quantile(1)` may be `+inf` for unbounded-above families.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&u) || u.is_nan() {
            return Err(Error::ProbabilityOutOfRange(u));
        }
        let norm = Self::std_normal;
        Ok(match &self.family {
            Family::Uniform { a, b } => a + u * (b - a),
            Family::Normal { mu, sigma } => {
                if u == 0.0 {
                    f64::NEG_INFINITY
                } else if u == 1.0 {
                    f64::INFINITY
                } else {
                    mu + sigma * norm().inverse_cdf(u)
                }
            }
            Family::Pareto { theta } => {
                if u == 0.0 {
                    0.0
                } else if u == 1.0 {
                    f64::INFINITY
                } else {
                    (1.0 - u).powf(-1.0 / theta) - 1.0
                }
            }
            Family::Exponential { lambda } => {
                if u == 1.0 {
                    f64::INFINITY
                } else {
                    -(-u).ln_1p() / lambda
                }
            }
            Family::Lognormal { mu, sigma } => {
                if u == 0.0 {
                    0.0
                } else if u == 1.0 {
                    f64::INFINITY
                } else {
                    (mu + sigma * norm().inverse_cdf(u)).exp()
                }
            }
            Family::Cauchy { loc, scale } => {
                if u == 0.0 {
                    f64::NEG_INFINITY
                } else if u == 1.0 {
                    f64::INFINITY
                } else {
                    loc + scale * (std::f64::consts::PI * (u - 0.5)).tan()
                }
            }
            Family::Binomial { m, p } => binomial_quantile(*m, *p, u),
            Family::DiscreteUniform { points } => list_quantile(points, u),
            Family::Empirical { sample } => list_quantile(sample, u),
        })
    }

    /// Right-continuous distribution function `F(x) = P(X <= x)`.
    pub fn cdf(&self, x: f64) -> f64 {
        match &self.family {
            Family::Uniform { a, b } => ((x - a) / (b - a)).clamp(0.0, 1.0),
            Family::Normal { mu, sigma } => Self::std_normal().cdf((x - mu) / sigma),
            Family::Pareto { theta } => {
                if x < 0.0 {
                    0.0
                } else {
                    1.0 - (1.0 + x).powf(-theta)
                }
            }
            Family::Exponential { lambda } => {
                if x < 0.0 {
                    0.0
                } else {
                    -(-lambda * x).exp_m1()
                }
            }
            Family::Lognormal { mu, sigma } => {
                if x <= 0.0 {
                    0.0
                } else {
                    Self::std_normal().cdf((x.ln() - mu) / sigma)
                }
            }
            Family::Cauchy { loc, scale } => {
                0.5 + ((x - loc) / scale).atan() / std::f64::consts::PI
            }
            Family::Binomial { m, p } => binomial_cdf(*m, *p, x),
            Family::DiscreteUniform { points } => list_cdf(points, x),
            Family::Empirical { sample } => list_cdf(sample, x),
        }
    }

    /// Density, where one exists. Discrete families return `None`.
    pub fn pdf(&self, x: f64) -> Option<f64> {
        match &self.family {
            Family::Uniform { a, b } => Some(if x < *a || x > *b { 0.0 } else { 1.0 / (b - a) }),
            Family::Normal { mu, sigma } => {
                let d = StatrsNormal::new(*mu, *sigma).expect("validated");
                Some(d.pdf(x))
            }
            Family::Pareto { theta } => Some(if x < 0.0 {
                0.0
            } else {
                theta * (1.0 + x).powf(-theta - 1.0)
            }),
            Family::Exponential { lambda } => Some(if x < 0.0 {
                0.0
            } else {
                lambda * (-lambda * x).exp()
            }),
            Family::Lognormal { mu, sigma } => Some(if x <= 0.0 {
                0.0
            } else {
                let z = (x.ln() - mu) / sigma;
                (-0.5 * z * z).exp() / (x * sigma * (2.0 * std::f64::consts::PI).sqrt())
            }),
            Family::Cauchy { loc, scale } => {
                let z = (x - loc) / scale;
                Some(1.0 / (std::f64::consts::PI * scale * (1.0 + z * z)))
            }
            Family::Binomial { .. } | Family::DiscreteUniform { .. } | Family::Empirical { .. } => {
                None
            }
        }
    }

    /// Support endpoints, moments and the jump masses at the support
    /// boundaries, closed-form per family.
    pub fn support_summary(&self) -> SupportSummary {
        match &self.family {
            Family::Uniform { a, b } => continuous_summary(
                *a,
                *b,
                Some((a + b) / 2.0),
                Some((b - a) / 4.0),
                Some((b - a) / 12f64.sqrt()),
            ),
            Family::Normal { mu, sigma } => continuous_summary(
                f64::NEG_INFINITY,
                f64::INFINITY,
                Some(*mu),
                Some(sigma * (2.0 / std::f64::consts::PI).sqrt()),
                Some(*sigma),
            ),
            Family::Pareto { theta } => {
                let mean = (*theta > 1.0).then(|| 1.0 / (theta - 1.0));
                let abs_dev = mean.map(|mu| 2.0 * (1.0 + mu).powf(1.0 - theta) / (theta - 1.0));
                let sd = (*theta > 2.0)
                    .then(|| (theta / ((theta - 1.0).powi(2) * (theta - 2.0))).sqrt());
                continuous_summary(0.0, f64::INFINITY, mean, abs_dev, sd)
            }
            Family::Exponential { lambda } => continuous_summary(
                0.0,
                f64::INFINITY,
                Some(1.0 / lambda),
                Some(2.0 / (lambda * std::f64::consts::E)),
                Some(1.0 / lambda),
            ),
            Family::Lognormal { mu, sigma } => {
                let mean = (mu + sigma * sigma / 2.0).exp();
                let sd = ((sigma * sigma).exp_m1() * (2.0 * mu + sigma * sigma).exp()).sqrt();
                // E|X - mean| = 2 mean (2 Phi(sigma/2) - 1).
                let abs_dev = 2.0 * mean * (2.0 * Self::std_normal().cdf(sigma / 2.0) - 1.0);
                continuous_summary(0.0, f64::INFINITY, Some(mean), Some(abs_dev), Some(sd))
            }
            Family::Cauchy { .. } => {
                continuous_summary(f64::NEG_INFINITY, f64::INFINITY, None, None, None)
            }
            Family::Binomial { m, p } => binomial_summary(*m, *p),
            Family::DiscreteUniform { points } => list_summary(points),
            Family::Empirical { sample } => list_summary(sample),
        }
    }

    /// Exponential- and Pareto-type margins have decreasing densities on
    /// their supports; a constant uniform density counts as weakly decreasing.
    pub fn has_decreasing_density(&self) -> bool {
        matches!(
            self.family,
            Family::Exponential { .. } | Family::Pareto { .. } | Family::Uniform { .. }
        )
    }

    /// Center of symmetry for unimodal-symmetric families.
    pub fn symmetric_center(&self) -> Option<f64> {
        match &self.family {
            Family::Uniform { a, b } => Some((a + b) / 2.0),
            Family::Normal { mu, .. } => Some(*mu),
            Family::Cauchy { loc, .. } => Some(*loc),
            _ => None,
        }
    }

    pub fn is_continuous(&self) -> bool {
        !matches!(
            self.family,
            Family::Binomial { .. } | Family::DiscreteUniform { .. } | Family::Empirical { .. }
        )
    }

    /// Equal-weight `n`-point discretization at the grid-mode probabilities.
    pub fn discretize(&self, n: usize, mode: GridMode) -> Result<QuantileGrid> {
        if n == 0 {
            return Err(Error::EmptyGrid);
        }
        let s = self.support_summary();
        match mode {
            GridMode::Lower if s.a == f64::NEG_INFINITY => {
                return Err(Error::InfeasibleGridMode {
                    mode: "lower",
                    family: self.family_name().to_string(),
                    reason: "support is unbounded below",
                });
            }
            GridMode::Upper if s.b == f64::INFINITY => {
                return Err(Error::InfeasibleGridMode {
                    mode: "upper",
                    family: self.family_name().to_string(),
                    reason: "support is unbounded above",
                });
            }
            _ => {}
        }
        let mut values = Vec::with_capacity(n);
        let mut prev = f64::NEG_INFINITY;
        for i in 1..=n {
            let u = mode.probability(i, n);
            let mut v = self.quantile(u)?;
            // quantiles are mathematically nondecreasing; guard against
            // sub-ulp wiggle in the normal inverse cdf
            if v < prev {
                v = prev;
            }
            prev = v;
            values.push(v);
        }
        Ok(QuantileGrid {
            values,
            mode,
            source: self.clone(),
        })
    }
}

fn continuous_summary(
    a: f64,
    b: f64,
    mean: Option<f64>,
    abs_dev: Option<f64>,
    sd: Option<f64>,
) -> SupportSummary {
    SupportSummary {
        a,
        b,
        len: b - a,
        mean,
        abs_dev,
        sd,
        zero_mass: 1.0,
        sup_left_mass: 1.0,
    }
}

fn binomial_pmf_iter(m: u64, p: f64) -> impl Iterator<Item = (u64, f64)> {
    let q = 1.0 - p;
    let mut pk = q.powi(m as i32); // P(X = 0)
    (0..=m).map(move |k| {
        let out = (k, pk);
        if k < m {
            if p == 1.0 {
                pk = if k + 1 == m { 1.0 } else { 0.0 };
            } else {
                pk *= (m - k) as f64 / (k + 1) as f64 * (p / q);
            }
        }
        out
    })
}

fn binomial_cdf(m: u64, p: f64, x: f64) -> f64 {
    if x < 0.0 {
        return 0.0;
    }
    if x >= m as f64 {
        return 1.0;
    }
    let kmax = x.floor() as u64;
    let acc: f64 = binomial_pmf_iter(m, p)
        .take_while(|(k, _)| *k <= kmax)
        .map(|(_, pk)| pk)
        .sum();
    acc.min(1.0)
}

fn binomial_quantile(m: u64, p: f64, u: f64) -> f64 {
    if u == 0.0 {
        // essential infimum: smallest point with positive mass
        return if p == 1.0 { m as f64 } else { 0.0 };
    }
    let mut acc = 0.0;
    for (k, pk) in binomial_pmf_iter(m, p) {
        acc += pk;
        if acc >= u - 1e-15 {
            return k as f64;
        }
    }
    m as f64
}

fn list_quantile(values: &[f64], u: f64) -> f64 {
    let n = values.len();
    if u == 0.0 {
        return values[0];
    }
    let idx = (u * n as f64).ceil() as usize;
    values[idx.clamp(1, n) - 1]
}

fn list_cdf(values: &[f64], x: f64) -> f64 {
    let count = values.partition_point(|v| *v <= x);
    count as f64 / values.len() as f64
}

fn list_summary(values: &[f64]) -> SupportSummary {
    let n = values.len() as f64;
    let a = values[0];
    let b = values[values.len() - 1];
    let mean = values.iter().sum::<f64>() / n;
    let abs_dev = values.iter().map(|v| (v - mean).abs()).sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let cnt_min = values.iter().filter(|v| **v == a).count() as f64;
    let cnt_max = values.iter().filter(|v| **v == b).count() as f64;
    let degenerate = a == b;
    SupportSummary {
        a,
        b,
        len: b - a,
        mean: Some(mean),
        abs_dev: Some(abs_dev),
        sd: Some(var.sqrt()),
        zero_mass: if degenerate { 0.0 } else { 1.0 - cnt_min / n },
        sup_left_mass: if degenerate { 0.0 } else { 1.0 - cnt_max / n },
    }
}

fn binomial_summary(m: u64, p: f64) -> SupportSummary {
    let mf = m as f64;
    let mean = mf * p;
    let sd = (mf * p * (1.0 - p)).sqrt();
    let abs_dev: f64 = binomial_pmf_iter(m, p)
        .map(|(k, pk)| (k as f64 - mean).abs() * pk)
        .sum();
    if p == 0.0 || p == 1.0 || m == 0 {
        let point = if p == 1.0 { mf } else { 0.0 };
        return SupportSummary {
            a: point,
            b: point,
            len: 0.0,
            mean: Some(point),
            abs_dev: Some(0.0),
            sd: Some(0.0),
            zero_mass: 0.0,
            sup_left_mass: 0.0,
        };
    }
    SupportSummary {
        a: 0.0,
        b: mf,
        len: mf,
        mean: Some(mean),
        abs_dev: Some(abs_dev),
        sd: Some(sd),
        zero_mass: 1.0 - (1.0 - p).powi(m as i32),
        sup_left_mass: 1.0 - p.powi(m as i32),
    }
}

/// Probability placement of the `n` grid points within `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridMode {
    /// `u_i = (i-1)/n`; brackets tail functionals from below.
    Lower,
    /// `u_i = i/n`; brackets from above.
    Upper,
    Midpoint,
    /// `u_i = i/(n+1)`.
    Shifted,
}

impl GridMode {
    pub fn probability(self, i: usize, n: usize) -> f64 {
        let (i, n) = (i as f64, n as f64);
        match self {
            GridMode::Lower => (i - 1.0) / n,
            GridMode::Upper => i / n,
            GridMode::Midpoint => (i - 0.5) / n,
            GridMode::Shifted => i / (n + 1.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GridMode::Lower => "lower",
            GridMode::Upper => "upper",
            GridMode::Midpoint => "midpoint",
            GridMode::Shifted => "shifted",
        }
    }
}

impl std::str::FromStr for GridMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(GridMode::Lower),
            "upper" => Ok(GridMode::Upper),
            "midpoint" => Ok(GridMode::Midpoint),
            "shifted" => Ok(GridMode::Shifted),
            other => Err(Error::InvalidParameter(format!("unknown grid mode {other:?}"))),
        }
    }
}

/// An `n`-point equal-weight quantile column of a margin.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantileGrid {
    values: Vec<f64>,
    mode: GridMode,
    source: Margin,
}

impl QuantileGrid {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn mode(&self) -> GridMode {
        self.mode
    }

    pub fn source(&self) -> &Margin {
        &self.source
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.n() as f64
    }

    pub fn range(&self) -> f64 {
        self.values[self.n() - 1] - self.values[0]
    }

    /// A grid backed by an explicit value list (empirical source).
    pub fn from_values(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyGrid);
        }
        values.sort_by(f64::total_cmp);
        let source = Margin::empirical(values.clone())?;
        Ok(QuantileGrid {
            values,
            mode: GridMode::Shifted,
            source,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn uniform_identity_quantile() {
        let m = Margin::uniform(0.0, 1.0).unwrap();
        assert_eq!(m.quantile(0.5).unwrap(), 0.5);
        assert_eq!(m.cdf(0.25), 0.25);
    }

    #[test]
    fn pareto_quantile_and_cdf_invert() {
        let m = Margin::pareto(2.0).unwrap();
        assert_relative_eq!(m.quantile(0.99).unwrap(), 9.0, max_relative = 1e-12);
        assert_relative_eq!(m.cdf(9.0), 0.99, max_relative = 1e-12);
    }

    #[test]
    fn discrete_uniform_left_continuous_inverse() {
        let m = Margin::discrete_uniform((1..=9).map(|i| i as f64).collect()).unwrap();
        assert_eq!(m.quantile(1.0 / 9.0).unwrap(), 1.0);
        assert_eq!(m.quantile(1.0).unwrap(), 9.0);
        assert_eq!(m.quantile(0.0).unwrap(), 1.0);
    }

    #[test]
    fn binomial_cdf_enumeration() {
        let m = Margin::binomial(2, 0.5).unwrap();
        assert_relative_eq!(m.cdf(0.999), 0.25, max_relative = 1e-12);
        assert_relative_eq!(m.cdf(1.0), 0.75, max_relative = 1e-12);
    }

    #[test]
    fn quantile_rejects_out_of_range() {
        let m = Margin::uniform(0.0, 1.0).unwrap();
        assert!(m.quantile(-0.1).is_err());
        assert!(m.quantile(1.5).is_err());
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(Margin::uniform(1.0, 0.0).is_err());
        assert!(Margin::normal(0.0, 0.0).is_err());
        assert!(Margin::pareto(-1.0).is_err());
        assert!(Margin::binomial(3, 1.5).is_err());
        assert!(Margin::new(Family::Empirical { sample: vec![] }).is_err());
    }

    #[test]
    fn support_summary_uniform() {
        let s = Margin::uniform(0.0, 1.0).unwrap().support_summary();
        assert_eq!(s.a, 0.0);
        assert_eq!(s.b, 1.0);
        assert_eq!(s.len, 1.0);
        assert_eq!(s.mean, Some(0.5));
    }

    #[test]
    fn support_summary_normal_abs_dev() {
        let sigma = 2.5;
        let s = Margin::normal(0.0, sigma).unwrap().support_summary();
        assert_relative_eq!(
            s.abs_dev.unwrap(),
            sigma * (2.0 / std::f64::consts::PI).sqrt(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn support_summary_cauchy_undefined_moments() {
        let s = Margin::cauchy(0.0, 1.0).unwrap().support_summary();
        assert!(s.mean.is_none());
        assert!(s.sd.is_none());
        assert_eq!(s.len, f64::INFINITY);
    }

    #[test]
    fn bernoulli_zero_mass_is_p() {
        let s = Margin::bernoulli(0.3).unwrap().support_summary();
        assert_relative_eq!(s.zero_mass, 0.3, max_relative = 1e-12);
        assert_relative_eq!(s.sup_left_mass, 0.7, max_relative = 1e-12);
    }

    #[test]
    fn discretize_uniform_lower_is_i_n() {
        let g = Margin::uniform(0.0, 1.0)
            .unwrap()
            .discretize(9, GridMode::Lower)
            .unwrap();
        for (i, v) in g.values().iter().enumerate() {
            assert_relative_eq!(*v, i as f64 / 9.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn discretize_discrete_uniform_shifted_hits_mass_points() {
        let g = Margin::discrete_uniform((1..=9).map(|i| i as f64).collect())
            .unwrap()
            .discretize(9, GridMode::Shifted)
            .unwrap();
        let expect: Vec<f64> = (1..=9).map(|i| i as f64).collect();
        assert_eq!(g.values(), expect.as_slice());
    }

    #[test]
    fn discretize_pareto_midpoint() {
        let g = Margin::pareto(2.0)
            .unwrap()
            .discretize(4, GridMode::Midpoint)
            .unwrap();
        for (i, v) in g.values().iter().enumerate() {
            let u = (i as f64 + 0.5) / 4.0;
            assert_relative_eq!(*v, (1.0 - u).powf(-0.5) - 1.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn discretize_infeasible_modes() {
        assert!(Margin::normal(0.0, 1.0)
            .unwrap()
            .discretize(4, GridMode::Lower)
            .is_err());
        assert!(Margin::pareto(2.0)
            .unwrap()
            .discretize(4, GridMode::Upper)
            .is_err());
        assert!(Margin::uniform(0.0, 1.0)
            .unwrap()
            .discretize(0, GridMode::Midpoint)
            .is_err());
    }

    #[test]
    fn empirical_round_trip_shifted() {
        let sample = vec![-2.5, -1.0, 0.25, 0.25, 3.0, 7.5];
        let m = Margin::empirical(sample.clone()).unwrap();
        let g = m.discretize(sample.len(), GridMode::Shifted).unwrap();
        assert_eq!(g.values(), sample.as_slice());
    }

    #[test]
    fn lognormal_abs_dev_matches_quadrature() {
        // independent oracle: trapezoid on the quantile scale
        let m = Margin::lognormal(0.1, 0.8).unwrap();
        let s = m.support_summary();
        let mean = s.mean.unwrap();
        let steps = 400_000;
        let mut acc = 0.0;
        for i in 0..steps {
            let u = (i as f64 + 0.5) / steps as f64;
            acc += (m.quantile(u).unwrap() - mean).abs();
        }
        acc /= steps as f64;
        assert_relative_eq!(s.abs_dev.unwrap(), acc, max_relative = 1e-3);
    }

    #[test]
    fn pareto_abs_dev_matches_quadrature() {
        let m = Margin::pareto(3.0).unwrap();
        let s = m.support_summary();
        let mean = s.mean.unwrap();
        let steps = 400_000;
        let mut acc = 0.0;
        for i in 0..steps {
            let u = (i as f64 + 0.5) / steps as f64;
            acc += (m.quantile(u).unwrap() - mean).abs();
        }
        acc /= steps as f64;
        assert_relative_eq!(s.abs_dev.unwrap(), acc, max_relative = 1e-3);
    }

    #[test]
    fn grid_mean_converges_to_margin_mean() {
        for m in [
            Margin::uniform(-1.0, 3.0).unwrap(),
            Margin::normal(0.5, 2.0).unwrap(),
            Margin::exponential(0.7).unwrap(),
        ] {
            let mean = m.support_summary().mean.unwrap();
            let mut prev_err = f64::INFINITY;
            for n in [100usize, 1000, 10_000] {
                let g = m.discretize(n, GridMode::Midpoint).unwrap();
                let err = (g.mean() - mean).abs();
                assert!(err <= prev_err + 1e-12, "error not decreasing at n={n}");
                prev_err = err;
            }
            assert!(prev_err < 1e-3);
        }
    }
}
