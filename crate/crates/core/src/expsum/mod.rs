//! Exact representation and evaluation of finite exponential sums.
//!
//! Frequencies are not stored as floats. Each frequency vector λ ∈ R^p is a
//! p×B matrix of exact rationals over a declared list of base irrationals
//! β_1 = 1, β_2, …, β_B, meaning λ_j = Σ_m Q[j][m]·β_m. Two frequencies are
//! equal iff their rational matrices are equal, so spectra, the group G(f)
//! they generate, and membership questions are all decided exactly.

mod group;

pub use group::{express_in_basis, group_basis, GroupBasis};

use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;
use num::{BigRational, One, Signed, ToPrimitive, Zero};

/// Declared base irrationals β_1, …, β_B with β_1 = 1.
///
/// The caller asserts that the values are linearly independent over Q; the
/// library records them and computes with exact rational coordinates on top,
/// but cannot prove independence.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseIrrationals {
    labels: Vec<String>,
    values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisError {
    Empty,
    FirstNotOne,
    NonFinite { index: usize },
    ZeroValue { index: usize },
    DuplicateLabel { label: String },
    LengthMismatch { labels: usize, values: usize },
}

impl fmt::Display for BasisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisError::Empty => write!(f, "base irrationals list is empty"),
            BasisError::FirstNotOne => write!(f, "first base irrational must be exactly 1"),
            BasisError::NonFinite { index } => {
                write!(f, "base irrational {index} is not finite")
            }
            BasisError::ZeroValue { index } => write!(f, "base irrational {index} is zero"),
            BasisError::DuplicateLabel { label } => {
                write!(f, "duplicate base irrational label {label:?}")
            }
            BasisError::LengthMismatch { labels, values } => {
                write!(f, "{labels} labels but {values} values")
            }
        }
    }
}

impl std::error::Error for BasisError {}

impl BaseIrrationals {
    pub fn new<S: Into<String>>(labels: Vec<S>, values: Vec<f64>) -> Result<Self, BasisError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if values.is_empty() {
            return Err(BasisError::Empty);
        }
        if labels.len() != values.len() {
            return Err(BasisError::LengthMismatch {
                labels: labels.len(),
                values: values.len(),
            });
        }
        if values[0] != 1.0 {
            return Err(BasisError::FirstNotOne);
        }
        for (index, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(BasisError::NonFinite { index });
            }
            if *v == 0.0 {
                return Err(BasisError::ZeroValue { index });
            }
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(BasisError::DuplicateLabel { label: l.clone() });
            }
        }
        Ok(BaseIrrationals { labels, values })
    }

    /// The rational-only basis `β = (1)`.
    pub fn rational() -> Self {
        BaseIrrationals {
            labels: vec!["1".to_string()],
            values: vec![1.0],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// Frequency vector λ ∈ R^p stored as exact rational coordinates over the
/// base irrationals: λ_j = Σ_m coords[j][m]·β_m.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrequencyVector {
    coords: Vec<Vec<BigRational>>,
}

impl FrequencyVector {
    /// Build from a p×B rational matrix. Entries are reduced by `BigRational`
    /// itself; rows must all have the same length.
    pub fn new(coords: Vec<Vec<BigRational>>) -> Result<Self, ShapeError> {
        if coords.is_empty() {
            return Err(ShapeError::ZeroDimension);
        }
        let b = coords[0].len();
        if b == 0 || coords.iter().any(|row| row.len() != b) {
            return Err(ShapeError::RaggedRows);
        }
        Ok(FrequencyVector { coords })
    }

    /// Zero frequency of shape p×B.
    pub fn zero(dimension: usize, base_len: usize) -> Self {
        FrequencyVector {
            coords: vec![vec![BigRational::zero(); base_len]; dimension],
        }
    }

    /// Frequency with purely rational coordinates (all mass on β_1 = 1).
    pub fn from_rationals(values: Vec<BigRational>, base_len: usize) -> Self {
        let coords = values
            .into_iter()
            .map(|q| {
                let mut row = vec![BigRational::zero(); base_len];
                row[0] = q;
                row
            })
            .collect();
        FrequencyVector { coords }
    }

    /// Integer-coordinate frequency over β = (1, …): λ_j = values[j].
    pub fn from_integers(values: &[i64], base_len: usize) -> Self {
        Self::from_rationals(
            values.iter().map(|&v| BigRational::from_integer(v.into())).collect(),
            base_len,
        )
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn base_len(&self) -> usize {
        self.coords[0].len()
    }

    pub fn coords(&self) -> &[Vec<BigRational>] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|row| row.iter().all(Zero::is_zero))
    }

    /// Numeric realization λ_j = Σ_m Q[j][m]·β_m.
    pub fn realize(&self, basis: &BaseIrrationals) -> Vec<f64> {
        self.coords
            .iter()
            .map(|row| {
                row.iter()
                    .zip(basis.values())
                    .map(|(q, beta)| q.to_f64().unwrap_or(f64::NAN) * beta)
                    .sum()
            })
            .collect()
    }

    /// True when the j-th coordinate is an exact integer: all irrational
    /// components vanish and the rational part has denominator 1.
    pub fn coordinate_is_integer(&self, j: usize) -> bool {
        let row = &self.coords[j];
        row[0].denom().is_one() && row[1..].iter().all(Zero::is_zero)
    }

    fn flatten(&self) -> Vec<BigRational> {
        self.coords.iter().flatten().cloned().collect()
    }

    fn from_flat(flat: &[BigRational], dimension: usize, base_len: usize) -> Self {
        let coords = flat.chunks(base_len).take(dimension).map(<[_]>::to_vec).collect();
        FrequencyVector { coords }
    }
}

impl fmt::Display for FrequencyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .coords
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                cells.join(",")
            })
            .collect();
        write!(f, "[{}]", rows.join(";"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeError {
    ZeroDimension,
    RaggedRows,
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::ZeroDimension => write!(f, "frequency vector has dimension 0"),
            ShapeError::RaggedRows => write!(f, "frequency matrix rows have unequal lengths"),
        }
    }
}

impl std::error::Error for ShapeError {}

/// One term c·exp(i⟨z,λ⟩).
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coefficient: Complex64,
    pub frequency: FrequencyVector,
}

/// A finite exponential sum in canonical form: terms merged by frequency,
/// zero coefficients dropped, terms sorted lexicographically by the rational
/// frequency matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentialSum {
    dimension: usize,
    basis: BaseIrrationals,
    terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SumError {
    Basis(BasisError),
    ZeroDimension,
    NoTerms,
    /// All terms cancelled or were zero; a sum must have at least one term.
    AllTermsVanish,
    FrequencyShape {
        term: usize,
        expected: (usize, usize),
        got: (usize, usize),
    },
    NonFiniteCoefficient {
        term: usize,
    },
}

impl fmt::Display for SumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumError::Basis(e) => write!(f, "invalid base irrationals: {e}"),
            SumError::ZeroDimension => write!(f, "dimension must be at least 1"),
            SumError::NoTerms => write!(f, "term list is empty"),
            SumError::AllTermsVanish => write!(f, "all terms are zero after merging"),
            SumError::FrequencyShape { term, expected, got } => write!(
                f,
                "term {term}: frequency matrix is {}x{}, expected {}x{}",
                got.0, got.1, expected.0, expected.1
            ),
            SumError::NonFiniteCoefficient { term } => {
                write!(f, "term {term}: coefficient is not finite")
            }
        }
    }
}

impl std::error::Error for SumError {}

impl From<BasisError> for SumError {
    fn from(e: BasisError) -> Self {
        SumError::Basis(e)
    }
}

impl ExponentialSum {
    /// Canonicalizing constructor: merges duplicate frequencies, drops exact
    /// zero coefficients, sorts terms by frequency matrix.
    pub fn new(
        dimension: usize,
        basis: BaseIrrationals,
        terms: Vec<(Complex64, FrequencyVector)>,
    ) -> Result<Self, SumError> {
        if dimension == 0 {
            return Err(SumError::ZeroDimension);
        }
        if terms.is_empty() {
            return Err(SumError::NoTerms);
        }
        let shape = (dimension, basis.len());
        let mut merged: BTreeMap<FrequencyVector, Complex64> = BTreeMap::new();
        for (i, (c, freq)) in terms.into_iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(SumError::NonFiniteCoefficient { term: i });
            }
            let got = (freq.dimension(), freq.base_len());
            if got != shape {
                return Err(SumError::FrequencyShape { term: i, expected: shape, got });
            }
            *merged.entry(freq).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        let terms: Vec<Term> = merged
            .into_iter()
            .filter(|(_, c)| c.re != 0.0 || c.im != 0.0)
            .map(|(frequency, coefficient)| Term { coefficient, frequency })
            .collect();
        if terms.is_empty() {
            return Err(SumError::AllTermsVanish);
        }
        Ok(ExponentialSum { dimension, basis, terms })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis(&self) -> &BaseIrrationals {
        &self.basis
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// The spectrum sp f: the exact set of term frequencies, sorted.
    pub fn spectrum(&self) -> Vec<FrequencyVector> {
        self.terms.iter().map(|t| t.frequency.clone()).collect()
    }

    /// Hermite-normal-form basis of the group G(f) generated by the spectrum.
    pub fn group_basis(&self) -> GroupBasis {
        group::group_basis(&self.spectrum())
    }

    /// Numeric realizations of all term frequencies, term-major.
    pub fn realized_frequencies(&self) -> Vec<Vec<f64>> {
        self.terms.iter().map(|t| t.frequency.realize(&self.basis)).collect()
    }

    /// Evaluate Σ c_λ exp(i⟨z,λ⟩) at a point of C^p.
    pub fn evaluate(&self, z: &[Complex64]) -> Result<Complex64, EvalError> {
        self.realized().evaluate(z)
    }

    /// Precompute numeric frequency data for repeated evaluation.
    pub fn realized(&self) -> Realized {
        Realized {
            dimension: self.dimension,
            coefficients: self.terms.iter().map(|t| t.coefficient).collect(),
            frequencies: self.realized_frequencies(),
        }
    }

    /// The sum z ↦ f(z + t) for real t, which multiplies each coefficient by
    /// exp(i⟨t,λ⟩) and leaves frequencies (hence spectrum and amoeba) fixed.
    pub fn translate(&self, t: &[f64]) -> ExponentialSum {
        assert_eq!(t.len(), self.dimension);
        let terms = self
            .terms
            .iter()
            .map(|term| {
                let lambda = term.frequency.realize(&self.basis);
                let phase: f64 = t.iter().zip(&lambda).map(|(a, b)| a * b).sum();
                (
                    term.coefficient * Complex64::from_polar(1.0, phase),
                    term.frequency.clone(),
                )
            })
            .collect();
        ExponentialSum::new(self.dimension, self.basis.clone(), terms)
            .expect("translation preserves canonical form")
    }

    /// Largest |λ_j| over all terms, for step-size heuristics along axis j.
    pub fn max_abs_frequency(&self, axis: usize) -> f64 {
        self.realized_frequencies()
            .iter()
            .map(|row| row[axis].abs())
            .fold(0.0, f64::max)
    }
}

/// Evaluation failure.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    NonFiniteInput,
    DimensionMismatch { expected: usize, got: usize },
    /// A term magnitude |c|·e^{−⟨y,λ⟩} overflows f64 range; the tube point is
    /// too deep for double-precision evaluation.
    DomainTooDeep { term: usize, exponent: f64 },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::NonFiniteInput => write!(f, "evaluation point is not finite"),
            EvalError::DimensionMismatch { expected, got } => {
                write!(f, "point has dimension {got}, sum has dimension {expected}")
            }
            EvalError::DomainTooDeep { term, exponent } => write!(
                f,
                "term {term} magnitude exponent {exponent:.1} exceeds f64 range"
            ),
        }
    }
}

impl std::error::Error for EvalError {}

/// Numeric view of a sum: coefficients plus realized frequency matrix.
#[derive(Debug, Clone)]
pub struct Realized {
    dimension: usize,
    coefficients: Vec<Complex64>,
    frequencies: Vec<Vec<f64>>,
}

impl Realized {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn evaluate(&self, z: &[Complex64]) -> Result<Complex64, EvalError> {
        if z.len() != self.dimension {
            return Err(EvalError::DimensionMismatch { expected: self.dimension, got: z.len() });
        }
        if z.iter().any(|w| !w.re.is_finite() || !w.im.is_finite()) {
            return Err(EvalError::NonFiniteInput);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, (c, lambda)) in self.coefficients.iter().zip(&self.frequencies).enumerate() {
            let mut phase = 0.0;
            let mut decay = 0.0;
            for (w, l) in z.iter().zip(lambda) {
                phase += w.re * l;
                decay += w.im * l;
            }
            let magnitude = (-decay).exp() * c.norm();
            if !magnitude.is_finite() {
                return Err(EvalError::DomainTooDeep { term: i, exponent: -decay });
            }
            acc += c * Complex64::from_polar((-decay).exp(), phase);
        }
        Ok(acc)
    }

    /// Restrict to the fiber Im z = y, absorbing e^{−⟨y,λ⟩} into the
    /// coefficients for fast evaluation along x.
    pub fn fiber(&self, y: &[f64]) -> Result<FiberEval, EvalError> {
        if y.len() != self.dimension {
            return Err(EvalError::DimensionMismatch { expected: self.dimension, got: y.len() });
        }
        if y.iter().any(|v| !v.is_finite()) {
            return Err(EvalError::NonFiniteInput);
        }
        let mut coefficients = Vec::with_capacity(self.coefficients.len());
        for (i, (c, lambda)) in self.coefficients.iter().zip(&self.frequencies).enumerate() {
            let decay: f64 = y.iter().zip(lambda).map(|(a, b)| a * b).sum();
            let scaled = c * (-decay).exp();
            if !scaled.re.is_finite() || !scaled.im.is_finite() {
                return Err(EvalError::DomainTooDeep { term: i, exponent: -decay });
            }
            coefficients.push(scaled);
        }
        let scale = coefficients.iter().map(num::complex::Complex::norm).sum();
        Ok(FiberEval {
            dimension: self.dimension,
            coefficients,
            frequencies: self.frequencies.clone(),
            scale,
        })
    }
}

/// Evaluator for x ↦ f(x + iy) at a fixed base point y.
#[derive(Debug, Clone)]
pub struct FiberEval {
    dimension: usize,
    coefficients: Vec<Complex64>,
    frequencies: Vec<Vec<f64>>,
    scale: f64,
}

impl FiberEval {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Magnitude scale Σ|c_λ|e^{−⟨y,λ⟩} of the fiber; classification
    /// thresholds are relative to this.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, lambda) in self.coefficients.iter().zip(&self.frequencies) {
            let phase: f64 = x.iter().zip(lambda).map(|(a, b)| a * b).sum();
            acc += c * Complex64::from_polar(1.0, phase);
        }
        acc
    }

    /// f together with the complex partials ∂f/∂x_j = Σ iλ_j c e^{i⟨x,λ⟩}.
    pub fn eval_with_grad(&self, x: &[f64]) -> (Complex64, Vec<Complex64>) {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut grad = vec![Complex64::new(0.0, 0.0); self.dimension];
        for (c, lambda) in self.coefficients.iter().zip(&self.frequencies) {
            let phase: f64 = x.iter().zip(lambda).map(|(a, b)| a * b).sum();
            let term = c * Complex64::from_polar(1.0, phase);
            acc += term;
            let rotated = term * Complex64::new(0.0, 1.0);
            for (g, l) in grad.iter_mut().zip(lambda) {
                *g += rotated * *l;
            }
        }
        (acc, grad)
    }

    /// Gradient and Hessian of |f|² at x, for Newton refinement of fiber
    /// minima. Returns (f, ∇|f|², H|f|²).
    pub fn abs2_with_derivatives(&self, x: &[f64]) -> (Complex64, Vec<f64>, Vec<Vec<f64>>) {
        let p = self.dimension;
        let mut f = Complex64::new(0.0, 0.0);
        let mut df = vec![Complex64::new(0.0, 0.0); p];
        let mut d2f = vec![vec![Complex64::new(0.0, 0.0); p]; p];
        for (c, lambda) in self.coefficients.iter().zip(&self.frequencies) {
            let phase: f64 = x.iter().zip(lambda).map(|(a, b)| a * b).sum();
            let term = c * Complex64::from_polar(1.0, phase);
            f += term;
            let rotated = term * Complex64::new(0.0, 1.0);
            for j in 0..p {
                df[j] += rotated * lambda[j];
                for k in j..p {
                    d2f[j][k] -= term * (lambda[j] * lambda[k]);
                }
            }
        }
        let mut grad = vec![0.0; p];
        let mut hess = vec![vec![0.0; p]; p];
        for j in 0..p {
            grad[j] = 2.0 * (f.conj() * df[j]).re;
            for k in j..p {
                let h = 2.0 * ((df[j] * df[k].conj()).re + (f.conj() * d2f[j][k]).re);
                hess[j][k] = h;
                hess[k][j] = h;
            }
        }
        (f, grad, hess)
    }

    pub fn log_abs(&self, x: &[f64]) -> f64 {
        self.eval(x).norm().ln()
    }

    /// Largest |λ_j| over the terms.
    pub fn max_abs_frequency(&self, axis: usize) -> f64 {
        self.frequencies.iter().map(|row| row[axis].abs()).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use num::BigRational;
    use std::str::FromStr;

    pub(crate) fn rat(s: &str) -> BigRational {
        BigRational::from_str(s).unwrap()
    }

    pub(crate) fn freq(matrix: &[&[&str]]) -> FrequencyVector {
        FrequencyVector::new(
            matrix
                .iter()
                .map(|row| row.iter().map(|s| rat(s)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// f = e^{iz} − 2 over β = (1), p = 1.
    pub(crate) fn shifted_exponential() -> ExponentialSum {
        ExponentialSum::new(
            1,
            BaseIrrationals::rational(),
            vec![
                (c(1.0, 0.0), FrequencyVector::from_integers(&[1], 1)),
                (c(-2.0, 0.0), FrequencyVector::from_integers(&[0], 1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn evaluate_single_term_at_i() {
        // e^{iz} at z = i is e^{-1}.
        let sum = ExponentialSum::new(
            1,
            BaseIrrationals::rational(),
            vec![(c(1.0, 0.0), FrequencyVector::from_integers(&[1], 1))],
        )
        .unwrap();
        let v = sum.evaluate(&[c(0.0, 1.0)]).unwrap();
        assert_relative_eq!(v.re, (-1.0f64).exp(), max_relative = 1e-14);
        assert_relative_eq!(v.im, 0.0, epsilon = 1e-16);
    }

    #[test]
    fn evaluate_constructed_zero() {
        // e^{iz} − 2 vanishes at z = −i·log 2.
        let sum = shifted_exponential();
        let v = sum.evaluate(&[c(0.0, -(2.0f64.ln()))]).unwrap();
        assert!(v.norm() < 1e-14, "expected zero, got {v}");
    }

    #[test]
    fn evaluate_three_terms_at_origin() {
        let sum = ExponentialSum::new(
            2,
            BaseIrrationals::rational(),
            vec![
                (c(1.0, 0.0), FrequencyVector::from_integers(&[1, 0], 1)),
                (c(1.0, 0.0), FrequencyVector::from_integers(&[0, 1], 1)),
                (c(1.0, 0.0), FrequencyVector::from_integers(&[0, 0], 1)),
            ],
        )
        .unwrap();
        let v = sum.evaluate(&[c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_relative_eq!(v.re, 3.0, max_relative = 1e-15);
    }

    #[test]
    fn evaluate_domain_too_deep() {
        let sum = ExponentialSum::new(
            1,
            BaseIrrationals::rational(),
            vec![(c(1.0, 0.0), FrequencyVector::from_integers(&[1], 1))],
        )
        .unwrap();
        let err = sum.evaluate(&[c(0.0, -800.0)]).unwrap_err();
        match err {
            EvalError::DomainTooDeep { term: 0, exponent } => assert!(exponent > 709.0),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn spectrum_of_constant_is_zero() {
        let sum = ExponentialSum::new(
            1,
            BaseIrrationals::rational(),
            vec![(c(3.0, 0.0), FrequencyVector::from_integers(&[0], 1))],
        )
        .unwrap();
        assert_eq!(sum.spectrum(), vec![FrequencyVector::zero(1, 1)]);
    }

    #[test]
    fn spectrum_reads_off_terms_over_sqrt2() {
        let basis = BaseIrrationals::new(vec!["1", "sqrt2"], vec![1.0, 2f64.sqrt()]).unwrap();
        let f1 = freq(&[&["1", "0"]]);
        let f2 = freq(&[&["0", "1"]]);
        let sum = ExponentialSum::new(
            1,
            basis,
            vec![(c(1.0, 0.0), f1.clone()), (c(1.0, 0.0), f2.clone())],
        )
        .unwrap();
        assert_eq!(sum.spectrum(), vec![f1, f2]);
    }

    #[test]
    fn duplicate_frequencies_merge() {
        let sum = ExponentialSum::new(
            1,
            BaseIrrationals::rational(),
            vec![
                (c(1.0, 0.0), FrequencyVector::from_integers(&[1], 1)),
                (c(2.0, 0.0), FrequencyVector::from_integers(&[1], 1)),
            ],
        )
        .unwrap();
        assert_eq!(sum.terms().len(), 1);
        assert_eq!(sum.terms()[0].coefficient, c(3.0, 0.0));
    }

    #[test]
    fn cancelling_terms_reject() {
        let err = ExponentialSum::new(
            1,
            BaseIrrationals::rational(),
            vec![
                (c(1.0, 0.0), FrequencyVector::from_integers(&[1], 1)),
                (c(-1.0, 0.0), FrequencyVector::from_integers(&[1], 1)),
            ],
        )
        .unwrap_err();
        assert_eq!(err, SumError::AllTermsVanish);
    }

    #[test]
    fn laurent_periodicity_in_x() {
        // Integer frequencies: shifting x by 2π changes nothing.
        let sum = shifted_exponential();
        let z0 = [c(0.7, -0.3)];
        let z1 = [c(0.7 + 2.0 * std::f64::consts::PI, -0.3)];
        let a = sum.evaluate(&z0).unwrap();
        let b = sum.evaluate(&z1).unwrap();
        assert_relative_eq!(a.re, b.re, epsilon = 1e-12);
        assert_relative_eq!(a.im, b.im, epsilon = 1e-12);
    }

    #[test]
    fn translation_preserves_modulus_profile() {
        let sum = shifted_exponential();
        let shifted = sum.translate(&[1.3]);
        let z = [c(0.25, 0.5)];
        let direct = sum.evaluate(&[c(0.25 + 1.3, 0.5)]).unwrap();
        let via = shifted.evaluate(&z).unwrap();
        assert_relative_eq!(direct.re, via.re, epsilon = 1e-12);
        assert_relative_eq!(direct.im, via.im, epsilon = 1e-12);
    }

    #[test]
    fn realize_mixed_rational_irrational() {
        let basis = BaseIrrationals::new(vec!["1", "sqrt2"], vec![1.0, 2f64.sqrt()]).unwrap();
        let v = freq(&[&["1/2", "3"]]);
        let realized = v.realize(&basis);
        assert_relative_eq!(realized[0], 0.5 + 3.0 * 2f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn fiber_grad_matches_finite_difference() {
        let sum = ExponentialSum::new(
            2,
            BaseIrrationals::rational(),
            vec![
                (c(1.0, 0.5), FrequencyVector::from_integers(&[1, 0], 1)),
                (c(-0.5, 0.2), FrequencyVector::from_integers(&[0, 2], 1)),
                (c(0.3, 0.0), FrequencyVector::from_integers(&[1, 1], 1)),
            ],
        )
        .unwrap();
        let fiber = sum.realized().fiber(&[0.2, -0.1]).unwrap();
        let x = [0.4, 1.1];
        let (_, grad, hess) = fiber.abs2_with_derivatives(&x);
        let h = 1e-6;
        for j in 0..2 {
            let mut xp = x;
            let mut xm = x;
            xp[j] += h;
            xm[j] -= h;
            let fd = (fiber.eval(&xp).norm_sqr() - fiber.eval(&xm).norm_sqr()) / (2.0 * h);
            assert_relative_eq!(grad[j], fd, max_relative = 1e-5, epsilon = 1e-8);
            for k in 0..2 {
                let (_, gp, _) = fiber.abs2_with_derivatives(&xp);
                let (_, gm, _) = fiber.abs2_with_derivatives(&xm);
                let fd2 = (gp[k] - gm[k]) / (2.0 * h);
                assert_relative_eq!(hess[j][k], fd2, max_relative = 1e-4, epsilon = 1e-6);
            }
        }
    }
}
