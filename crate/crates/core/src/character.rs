//! Sparse Laurent polynomials over the weight lattice `Z^{N+1}`.
//!
//! A [`LaurentPolynomial`] is kept canonical: terms sorted by weight, no zero
//! coefficients, so structural equality is exact equality of characters.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::cube;
use crate::error::{Error, Result};
use crate::scalar::{complex_powi, Coefficient, Real};
use crate::tower::TowerSpec;

/// Exponent vector `μ` of a torus character `λ^μ`. The last coordinate is the
/// circle factor `e_{m+1}`.
///
/// Weights are ordered colexicographically: the circle exponent is most
/// significant, then the levels from the top of the tower down. Both
/// character routes fix the upper levels first, so they emit nearly sorted
/// terms in this order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Box<[i64]>);

pub(crate) fn colex(a: &[i64], b: &[i64]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev()).then(a.len().cmp(&b.len()))
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        colex(&self.0, &other.0)
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Weight {
    pub fn new(coords: impl Into<Box<[i64]>>) -> Self {
        Self(coords.into())
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim].into_boxed_slice())
    }

    /// Standard basis vector at 0-based position `pos`.
    pub fn unit(dim: usize, pos: usize) -> Self {
        let mut coords = vec![0; dim];
        coords[pos] = 1;
        Self(coords.into_boxed_slice())
    }

    /// `(x, s)`: a lattice point followed by the circle exponent.
    pub fn with_circle(x: &[i64], s: i64) -> Self {
        let mut coords = Vec::with_capacity(x.len() + 1);
        coords.extend_from_slice(x);
        coords.push(s);
        Self(coords.into_boxed_slice())
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Exponent of the circle factor (last coordinate).
    pub fn circle_exponent(&self) -> i64 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("weight addition")))
            .collect::<Result<Vec<_>>>()
            .map(Weight::new)
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl From<Vec<i64>> for Weight {
    fn from(coords: Vec<i64>) -> Self {
        Self(coords.into_boxed_slice())
    }
}

/// Finitely supported integer combination `Σ m_μ λ^μ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial<C> {
    dim: usize,
    terms: Vec<(Weight, C)>,
}

impl<C: Coefficient> LaurentPolynomial<C> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, terms: Vec::new() }
    }

    /// `coeff · λ^μ`; the zero character when `coeff == 0`.
    pub fn monomial(mu: Weight, coeff: C) -> Self {
        let dim = mu.dim();
        let terms = if coeff.is_zero() { Vec::new() } else { vec![(mu, coeff)] };
        Self { dim, terms }
    }

    /// Collects arbitrary terms, merging repeated weights.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Weight, C)>) -> Result<Self> {
        let mut terms: Vec<(Weight, C)> = terms.into_iter().collect();
        if let Some((w, _)) = terms.iter().find(|(w, _)| w.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: w.dim() });
        }
        if !terms.is_sorted_by(|a, b| a.0 <= b.0) {
            terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        }
        let mut merged: Vec<(Weight, C)> = Vec::with_capacity(terms.len());
        for (w, c) in terms {
            match merged.last_mut() {
                Some((last, acc)) if *last == w => *acc = acc.checked_sum(c)?,
                _ => merged.push((w, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Ok(Self { dim, terms: merged })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (&Weight, C)> + '_ {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn terms(&self) -> &[(Weight, C)] {
        &self.terms
    }

    /// Multiplicity of `λ^μ` (zero when absent).
    pub fn coeff(&self, mu: &Weight) -> C {
        self.terms
            .binary_search_by(|(w, _)| w.cmp(mu))
            .map(|idx| self.terms[idx].1)
            .unwrap_or_else(|_| C::zero())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            let step = match (a.peek(), b.peek()) {
                (Some((wa, _)), Some((wb, _))) => wa.cmp(wb),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => break,
            };
            match step {
                Ordering::Less => out.push(a.next().cloned().unwrap()),
                Ordering::Greater => out.push(b.next().cloned().unwrap()),
                Ordering::Equal => {
                    let (w, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let c = ca.checked_sum(*cb)?;
                    if !c.is_zero() {
                        out.push((w.clone(), c));
                    }
                }
            }
        }
        Ok(Self { dim: self.dim, terms: out })
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| Ok((w.clone(), c.checked_negation()?)))
            .collect::<Result<_>>()?;
        Ok(Self { dim: self.dim, terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    /// Sum of all coefficients, i.e. the value at the identity of the torus.
    pub fn signed_count(&self) -> Result<C> {
        self.terms.iter().try_fold(C::zero(), |acc, (_, c)| acc.checked_sum(*c))
    }

    /// `Σ m_μ ∏_p t_p^{μ_p}` at a point of the complex torus.
    pub fn evaluate<F: Real>(&self, t: &[Complex<F>]) -> Result<Complex<F>> {
        if t.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: t.len() });
        }
        let mut total = Complex::new(F::zero(), F::zero());
        for (mu, c) in &self.terms {
            let coeff = F::from(*c).ok_or(Error::Overflow("coefficient to float"))?;
            total = total + monomial_value(mu, t)? * coeff;
        }
        Ok(total)
    }

    /// Renders with `e_{i,k}` labels taken from the tower layout.
    pub fn pretty<'a>(&'a self, spec: &'a TowerSpec) -> Pretty<'a, C> {
        Pretty { chi: self, spec }
    }
}

/// `t^μ`.
pub fn monomial_value<F: Real>(mu: &Weight, t: &[Complex<F>]) -> Result<Complex<F>> {
    if t.len() != mu.dim() {
        return Err(Error::DimensionMismatch { expected: mu.dim(), found: t.len() });
    }
    let mut value = Complex::new(F::one(), F::zero());
    for (p, (&e, &base)) in mu.coords().iter().zip(t).enumerate() {
        if e != 0 {
            value = value * complex_powi(base, e, p)?;
        }
    }
    Ok(value)
}

/// `χ = Σ_{x ∈ C ∩ Z^N} ρ(x) λ^{(x, 1)}`, read off the signed cube points.
pub fn character_via_cube<C: Coefficient>(spec: &TowerSpec) -> Result<LaurentPolynomial<C>> {
    let mut terms = Vec::new();
    cube::for_each_point(spec, |p| {
        let coeff = if p.density > 0 { C::one() } else { -C::one() };
        terms.push((Weight::with_circle(p.x, 1), coeff));
        Ok(())
    })?;
    LaurentPolynomial::from_terms(spec.weight_dim(), terms)
}

/// Multiplicity of the weight `(x, k)`: `ρ(x)` on the `k = 1` slice, zero
/// elsewhere.
pub fn mult(spec: &TowerSpec, x: &[i64], k: i64) -> Result<i64> {
    let rho = cube::density(spec, x)?;
    Ok(if k == 1 { i64::from(rho) } else { 0 })
}

/// Serialized form of one term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord<C> {
    pub weight: Vec<i64>,
    pub coeff: C,
}

impl<C: Coefficient + Serialize> Serialize for LaurentPolynomial<C> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.terms.iter().map(|(w, c)| TermRecord { weight: w.coords().to_vec(), coeff: *c }),
        )
    }
}

impl<C: Coefficient> LaurentPolynomial<C> {
    pub fn from_records(dim: usize, records: Vec<TermRecord<C>>) -> Result<Self> {
        Self::from_terms(dim, records.into_iter().map(|r| (Weight::from(r.weight), r.coeff)))
    }
}

fn write_weight(f: &mut fmt::Formatter<'_>, spec: &TowerSpec, mu: &Weight) -> fmt::Result {
    let m = spec.height();
    let mut parts: Vec<(i64, String)> = Vec::new();
    let circle = m + 1;
    let circle_label = if circle < 10 { format!("e_{circle}") } else { format!("e_{{{circle}}}") };
    parts.push((mu.circle_exponent(), circle_label));
    for i in (1..=m).rev() {
        for (k, pos) in spec.block(i).enumerate() {
            parts.push((mu.coords()[pos], format!("e_{{{},{}}}", i, k + 1)));
        }
    }
    let mut first = true;
    for (c, label) in parts.into_iter().filter(|(c, _)| *c != 0) {
        let sign = if c < 0 { "-" } else if first { "" } else { "+" };
        let mag = c.unsigned_abs();
        if mag == 1 {
            write!(f, "{sign}{label}")?;
        } else {
            write!(f, "{sign}{mag}{label}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Display adapter printing `λ^{e_3-2e_{2,1}+e_{1,1}}`-style monomials.
pub struct Pretty<'a, C> {
    chi: &'a LaurentPolynomial<C>,
    spec: &'a TowerSpec,
}

impl<C: Coefficient> fmt::Display for Pretty<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chi.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mu, c)) in self.chi.iter().enumerate() {
            let negative = c < C::zero();
            let mag = c.abs();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "λ^{{")?;
            write_weight(f, self.spec, mu)?;
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Display for LaurentPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mu, c)) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·λ^{:?}", mu.coords())?;
        }
        Ok(())
    }
}
