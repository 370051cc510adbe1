//! Finite-alphabet probability distributions and information measures.
//!
//! All entropic quantities are in nats. The convention `0 * ln 0 = 0` is
//! applied everywhere, and information densities are only ever evaluated on
//! the support of the associated joint distribution.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Sum drift tolerated at construction; inputs within this of 1 are
/// renormalized, anything further off is rejected.
pub const SUM_TOL: f64 = 1e-9;

/// Probability distribution on a finite alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct Dist {
    probs: Vec<f64>,
}

impl Dist {
    /// Validates nonnegativity and total mass; renormalizes when
    /// `|sum - 1| <= 1e-9` so accumulated rounding does not mask bugs.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidDistribution("empty distribution".into()));
        }
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(Error::InvalidDistribution(format!(
                "entry {p} is negative or non-finite"
            )));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidDistribution(format!(
                "entries sum to {sum}, not 1"
            )));
        }
        let probs = probs.into_iter().map(|p| p / sum).collect();
        Ok(Self { probs })
    }

    pub fn uniform(k: usize) -> Self {
        Self {
            probs: vec![1.0 / k as f64; k],
        }
    }

    pub fn point_mass(k: usize, at: usize) -> Self {
        let mut probs = vec![0.0; k];
        probs[at] = 1.0;
        Self { probs }
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn get(&self, i: usize) -> f64 {
        self.probs[i]
    }

    /// Smallest strictly positive entry.
    pub fn min_positive(&self) -> f64 {
        self.probs
            .iter()
            .copied()
            .filter(|&p| p > 0.0)
            .fold(f64::INFINITY, f64::min)
    }
}

/// Joint pmf over a product alphabet, stored row-major: `(x, y)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Joint {
    rows: usize,
    cols: usize,
    probs: Vec<f64>,
}

impl Joint {
    pub fn new(rows: usize, cols: usize, probs: Vec<f64>) -> Result<Self> {
        if probs.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} joint needs {} entries, got {}",
                rows * cols,
                probs.len()
            )));
        }
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(Error::InvalidDistribution(format!(
                "entry {p} is negative or non-finite"
            )));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidDistribution(format!(
                "joint sums to {sum}, not 1"
            )));
        }
        let probs = probs.into_iter().map(|p| p / sum).collect();
        Ok(Self { rows, cols, probs })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged joint rows".into()));
        }
        Self::new(r, c, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.probs[x * self.cols + y]
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Marginal of the row index (X).
    pub fn x_marginal(&self) -> Dist {
        let mut m = vec![0.0; self.rows];
        for x in 0..self.rows {
            for y in 0..self.cols {
                m[x] += self.get(x, y);
            }
        }
        Dist { probs: m }
    }

    /// Marginal of the column index (Y).
    pub fn y_marginal(&self) -> Dist {
        let mut m = vec![0.0; self.cols];
        for x in 0..self.rows {
            for y in 0..self.cols {
                m[y] += self.get(x, y);
            }
        }
        Dist { probs: m }
    }

    /// Conditional channel P(Y|X). Rows with zero X-mass get a uniform row
    /// so the result is a valid channel; such rows are never weighted.
    pub fn conditional(&self) -> Channel {
        let mx = self.x_marginal();
        let mut rows = Vec::with_capacity(self.rows);
        for x in 0..self.rows {
            if mx.get(x) > 0.0 {
                rows.push((0..self.cols).map(|y| self.get(x, y) / mx.get(x)).collect());
            } else {
                rows.push(vec![1.0 / self.cols as f64; self.cols]);
            }
        }
        Channel { rows }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("joint serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: Joint = serde_json::from_str(s)?;
        Self::new(raw.rows, raw.cols, raw.probs)
    }
}

/// Row-stochastic conditional pmf: `rows[input][output]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Channel {
    rows: Vec<Vec<f64>>,
}

impl Channel {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged channel rows".into()));
            }
            Dist::new(row.clone())?;
        }
        let rows = rows
            .into_iter()
            .map(|row| Dist::new(row).expect("validated").probs)
            .collect();
        Ok(Self { rows })
    }

    pub fn identity(k: usize) -> Self {
        let rows = (0..k)
            .map(|i| {
                let mut r = vec![0.0; k];
                r[i] = 1.0;
                r
            })
            .collect();
        Self { rows }
    }

    /// Channel whose every row equals `row` (output independent of input).
    pub fn constant(inputs: usize, row: &Dist) -> Self {
        Self {
            rows: vec![row.probs().to_vec(); inputs],
        }
    }

    pub fn input_size(&self) -> usize {
        self.rows.len()
    }

    pub fn output_size(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn get(&self, input: usize, output: usize) -> f64 {
        self.rows[input][output]
    }

    pub fn row(&self, input: usize) -> &[f64] {
        &self.rows[input]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// Unchecked construction for rows already known to be stochastic.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<f64>>) -> Self {
        Self { rows }
    }
}

/// Which density a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityKind {
    /// `ln(1 / P(out|in))`, expectation is the conditional entropy.
    ConditionalEntropy,
    /// `ln(P(out|in) / P(out))`, expectation is the mutual information.
    MutualInformation,
}

/// Dense table of information densities indexed `(output, input)`. Cells off
/// the support of the associated joint are NaN and excluded from
/// expectations.
#[derive(Debug, Clone)]
pub struct InfoDensityTable {
    values: Vec<f64>,
    outputs: usize,
    inputs: usize,
    kind: DensityKind,
}

impl InfoDensityTable {
    pub fn kind(&self) -> DensityKind {
        self.kind
    }

    /// Density at `(output, input)`; `None` off-support.
    pub fn get(&self, output: usize, input: usize) -> Option<f64> {
        let v = self.values[output * self.inputs + input];
        v.is_finite().then_some(v)
    }

    /// Expectation under the joint `input(a) * ch(b|a)`; off-support cells
    /// carry zero mass so they contribute nothing.
    pub fn expectation(&self, input: &Dist, ch: &Channel) -> f64 {
        let mut e = 0.0;
        for a in 0..self.inputs {
            for b in 0..self.outputs {
                let w = input.get(a) * ch.get(a, b);
                if w > 0.0 {
                    e += w * self.values[b * self.inputs + a];
                }
            }
        }
        e
    }
}

fn xlnx(p: f64) -> f64 {
    if p > 0.0 {
        p * p.ln()
    } else {
        0.0
    }
}

/// Shannon entropy `-sum p ln p` in nats.
pub fn entropy(p: &Dist) -> f64 {
    -p.probs().iter().copied().map(xlnx).sum::<f64>()
}

fn check_dims(input: &Dist, ch: &Channel) -> Result<()> {
    if input.len() != ch.input_size() {
        return Err(Error::DimensionMismatch(format!(
            "input has {} symbols, channel expects {}",
            input.len(),
            ch.input_size()
        )));
    }
    Ok(())
}

/// `H(out|in) = sum_a input(a) H(ch row a)`.
pub fn conditional_entropy(input: &Dist, ch: &Channel) -> Result<f64> {
    check_dims(input, ch)?;
    let mut h = 0.0;
    for a in 0..input.len() {
        if input.get(a) > 0.0 {
            h -= ch.row(a).iter().copied().map(xlnx).sum::<f64>() * input.get(a);
        }
    }
    Ok(h)
}

/// Output distribution of `input` pushed through `ch`.
pub fn compose(input: &Dist, ch: &Channel) -> Result<Dist> {
    check_dims(input, ch)?;
    let mut out = vec![0.0; ch.output_size()];
    for a in 0..input.len() {
        let w = input.get(a);
        if w > 0.0 {
            for (o, c) in out.iter_mut().zip(ch.row(a)) {
                *o += w * c;
            }
        }
    }
    Ok(Dist { probs: out })
}

/// `I(in; out) = H(out) - H(out|in) >= 0`.
pub fn mutual_information(input: &Dist, ch: &Channel) -> Result<f64> {
    let out = compose(input, ch)?;
    Ok((entropy(&out) - conditional_entropy(input, ch)?).max(0.0))
}

/// `D(p || q)` in nats; `+inf` signals a support violation.
pub fn kl_divergence(p: &Dist, q: &Dist) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} vs {} symbols",
            p.len(),
            q.len()
        )));
    }
    let mut d = 0.0;
    for (pi, qi) in p.probs().iter().zip(q.probs()) {
        if *pi > 0.0 {
            if *qi <= 0.0 {
                return Ok(f64::INFINITY);
            }
            d += pi * (pi / qi).ln();
        }
    }
    Ok(d.max(0.0))
}

/// Both density tables of the pair `(input, ch)`:
/// the conditional-entropy density `ln(1/ch(b|a))` and the
/// mutual-information density `ln(ch(b|a)/out(b))`, each indexed `(b, a)`.
pub fn info_density_tables(input: &Dist, ch: &Channel) -> Result<(InfoDensityTable, InfoDensityTable)> {
    check_dims(input, ch)?;
    let out = compose(input, ch)?;
    let (ni, no) = (input.len(), ch.output_size());
    let mut cond = vec![f64::NAN; no * ni];
    let mut mi = vec![f64::NAN; no * ni];
    for a in 0..ni {
        if input.get(a) == 0.0 {
            continue;
        }
        for b in 0..no {
            let p = ch.get(a, b);
            if p > 0.0 {
                cond[b * ni + a] = -p.ln();
                mi[b * ni + a] = (p / out.get(b)).ln();
            }
        }
    }
    Ok((
        InfoDensityTable {
            values: cond,
            outputs: no,
            inputs: ni,
            kind: DensityKind::ConditionalEntropy,
        },
        InfoDensityTable {
            values: mi,
            outputs: no,
            inputs: ni,
            kind: DensityKind::MutualInformation,
        },
    ))
}

fn tv_slices(p: &[f64], q: &[f64]) -> f64 {
    0.5 * p
        .iter()
        .zip(q)
        .map(|(a, b)| (a - b).abs())
        .sum::<f64>()
}

/// Total variation distance, half the l1 distance; in [0, 1].
pub fn total_variation(p: &Dist, q: &Dist) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} vs {} symbols",
            p.len(),
            q.len()
        )));
    }
    Ok(tv_slices(p.probs(), q.probs()))
}

/// Total variation distance between joints of the same shape.
pub fn total_variation_joint(p: &Joint, q: &Joint) -> Result<f64> {
    if p.rows() != q.rows() || p.cols() != q.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            p.rows(),
            p.cols(),
            q.rows(),
            q.cols()
        )));
    }
    Ok(tv_slices(p.probs(), q.probs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const LN2: f64 = std::f64::consts::LN_2;

    fn d(v: &[f64]) -> Dist {
        Dist::new(v.to_vec()).unwrap()
    }

    #[test]
    fn entropy_examples() {
        assert!((entropy(&d(&[0.5, 0.5])) - LN2).abs() < 1e-12);
        assert_eq!(entropy(&d(&[1.0, 0.0])), 0.0);
        // -0.25 ln 0.25 - 0.75 ln 0.75
        assert!((entropy(&d(&[0.25, 0.75])) - 0.5623351446188083).abs() < 1e-12);
    }

    #[test]
    fn conditional_entropy_examples() {
        let unif = Dist::uniform(2);
        assert_eq!(conditional_entropy(&unif, &Channel::identity(2)).unwrap(), 0.0);
        let half = Channel::constant(2, &Dist::uniform(2));
        assert!((conditional_entropy(&unif, &half).unwrap() - LN2).abs() < 1e-12);
        let ch = Channel::new(vec![vec![0.75, 0.25], vec![0.25, 0.75]]).unwrap();
        assert!((conditional_entropy(&unif, &ch).unwrap() - 0.5623351446188083).abs() < 1e-12);
    }

    #[test]
    fn mutual_information_examples() {
        let input = d(&[0.3, 0.7]);
        let constant = Channel::constant(2, &d(&[0.2, 0.8]));
        assert!(mutual_information(&input, &constant).unwrap().abs() < 1e-12);
        let unif = Dist::uniform(2);
        assert!((mutual_information(&unif, &Channel::identity(2)).unwrap() - LN2).abs() < 1e-12);
        let ch = Channel::new(vec![vec![0.75, 0.25], vec![0.25, 0.75]]).unwrap();
        let expect = LN2 - 0.5623351446188083;
        assert!((mutual_information(&unif, &ch).unwrap() - expect).abs() < 1e-12);
    }

    #[test]
    fn kl_examples() {
        let p = d(&[0.25, 0.75]);
        assert_eq!(kl_divergence(&p, &p).unwrap(), 0.0);
        let point = d(&[1.0, 0.0]);
        let unif = Dist::uniform(2);
        assert!((kl_divergence(&point, &unif).unwrap() - LN2).abs() < 1e-12);
        // D(p || uniform) = ln|A| - H(p)
        let expect = LN2 - 0.5623351446188083;
        assert!((kl_divergence(&p, &unif).unwrap() - expect).abs() < 1e-12);
        // support violation signals infinite divergence
        assert_eq!(kl_divergence(&unif, &point).unwrap(), f64::INFINITY);
    }

    #[test]
    fn compose_examples() {
        let input = d(&[0.3, 0.7]);
        let out = compose(&input, &Channel::identity(2)).unwrap();
        assert!(total_variation(&input, &out).unwrap() < 1e-15);

        let row = d(&[0.1, 0.9]);
        let out = compose(&input, &Channel::constant(2, &row)).unwrap();
        assert!(total_variation(&row, &out).unwrap() < 1e-15);

        let sym = Channel::new(vec![vec![0.75, 0.25], vec![0.25, 0.75]]).unwrap();
        let out = compose(&Dist::uniform(2), &sym).unwrap();
        assert!(total_variation(&Dist::uniform(2), &out).unwrap() < 1e-15);
    }

    #[test]
    fn density_table_examples() {
        // identity channel on uniform binary: mi density is ln 2 on the diagonal
        let (_, mi) = info_density_tables(&Dist::uniform(2), &Channel::identity(2)).unwrap();
        assert!((mi.get(0, 0).unwrap() - LN2).abs() < 1e-12);
        assert!((mi.get(1, 1).unwrap() - LN2).abs() < 1e-12);
        assert!(mi.get(1, 0).is_none()); // off support of the joint

        // independent pair: mi density identically 0
        let (_, mi) = info_density_tables(&d(&[0.3, 0.7]), &Channel::constant(2, &d(&[0.4, 0.6]))).unwrap();
        for b in 0..2 {
            for a in 0..2 {
                assert!(mi.get(b, a).unwrap().abs() < 1e-12);
            }
        }

        // binary symmetric pair with correlation eta = 0.5:
        // density at matching symbols is ln(1 + eta)
        let eta = 0.5;
        let ch = Channel::new(vec![
            vec![(1.0 + eta) / 2.0, (1.0 - eta) / 2.0],
            vec![(1.0 - eta) / 2.0, (1.0 + eta) / 2.0],
        ])
        .unwrap();
        let (_, mi) = info_density_tables(&Dist::uniform(2), &ch).unwrap();
        assert!((mi.get(0, 0).unwrap() - 1.5f64.ln()).abs() < 1e-12);
        assert!((mi.get(0, 0).unwrap() - 0.4054651081081644).abs() < 1e-9);
    }

    #[test]
    fn density_expectations_match_measures() {
        let input = d(&[0.2, 0.5, 0.3]);
        let ch = Channel::new(vec![
            vec![0.7, 0.3],
            vec![0.5, 0.5],
            vec![0.1, 0.9],
        ])
        .unwrap();
        let (cond, mi) = info_density_tables(&input, &ch).unwrap();
        let h = conditional_entropy(&input, &ch).unwrap();
        let i = mutual_information(&input, &ch).unwrap();
        assert!((cond.expectation(&input, &ch) - h).abs() <= 1e-12);
        assert!((mi.expectation(&input, &ch) - i).abs() <= 1e-12);
    }

    #[test]
    fn total_variation_examples() {
        let p = d(&[0.25, 0.75]);
        assert_eq!(total_variation(&p, &p).unwrap(), 0.0);
        let a = Dist::point_mass(2, 0);
        let b = Dist::point_mass(2, 1);
        assert_eq!(total_variation(&a, &b).unwrap(), 1.0);
        assert_eq!(total_variation(&a, &Dist::uniform(2)).unwrap(), 0.5);
    }

    #[test]
    fn dist_construction_rules() {
        // renormalizes small drift
        let p = Dist::new(vec![0.5 + 4e-10, 0.5]).unwrap();
        assert!((p.probs().iter().sum::<f64>() - 1.0).abs() < 1e-15);
        // rejects large drift and negatives
        assert!(Dist::new(vec![0.6, 0.5]).is_err());
        assert!(Dist::new(vec![-0.1, 1.1]).is_err());
    }

    #[test]
    fn joint_json_round_trip() {
        let j = Joint::new(2, 2, vec![0.1, 0.2, 0.3, 0.4]).unwrap();
        let s = j.to_json();
        assert!(s.contains("\"rows\":2"));
        let back = Joint::from_json(&s).unwrap();
        assert!(total_variation_joint(&j, &back).unwrap() < 1e-15);
        assert!(Joint::from_json("{\"rows\":2}").is_err());
    }

    #[test]
    fn dimension_mismatch_errors() {
        let p3 = Dist::uniform(3);
        let ch2 = Channel::identity(2);
        assert!(conditional_entropy(&p3, &ch2).is_err());
        assert!(compose(&p3, &ch2).is_err());
        assert!(total_variation(&p3, &Dist::uniform(2)).is_err());
    }

    proptest! {
        #[test]
        fn entropy_bounds_and_compose_preserves_simplex(raw in proptest::collection::vec(1e-6..1.0f64, 2..6)) {
            let sum: f64 = raw.iter().sum();
            let p = Dist::new(raw.iter().map(|x| x / sum).collect()).unwrap();
            let h = entropy(&p);
            prop_assert!(h >= -1e-12);
            prop_assert!(h <= (p.len() as f64).ln() + 1e-12);

            let k = p.len();
            let ch = Channel::constant(k, &Dist::uniform(k));
            let out = compose(&p, &ch).unwrap();
            let total: f64 = out.probs().iter().sum();
            prop_assert!((total - 1.0).abs() < 1e-12);
        }

        #[test]
        fn kl_nonnegative(pa in 1e-4..0.9999f64, qa in 1e-4..0.9999f64) {
            let p = Dist::new(vec![pa, 1.0 - pa]).unwrap();
            let q = Dist::new(vec![qa, 1.0 - qa]).unwrap();
            let dpq = kl_divergence(&p, &q).unwrap();
            prop_assert!(dpq >= 0.0);
        }
    }

    #[test]
    fn entropy_maximized_at_uniform() {
        let u = Dist::uniform(4);
        let p = d(&[0.3, 0.3, 0.2, 0.2]);
        assert!(entropy(&p) < entropy(&u));
        assert!((entropy(&u) - 4.0f64.ln()).abs() < 1e-12);
    }
}
