use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::scalar::Coeff;
use super::PolyError;

/// Dense univariate polynomial in `q`, coefficients ascending by degree.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and two equal polynomials have identical storage.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![C::one()],
        }
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(C::one(), k)
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds a polynomial from machine integers.
    pub fn from_i64s(vals: &[i64]) -> Self {
        Self::from_coeffs(
            vals.iter()
                .map(|&v| C::from_i64(v).expect("coefficient out of range"))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Reverses the coefficient list of a polynomial of formal degree `d`,
    /// i.e. returns `q^d p(1/q)`. Requires `d >= degree`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut coeffs: Vec<C> = (0..=d).map(|k| self.coeff(k)).collect();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    pub fn poly_add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn poly_sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn poly_mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.poly_mul(self);
        }
        acc
    }

    /// Exact quotient `self / den`.
    ///
    /// Fails with [`PolyError::InexactDivision`] if any remainder is left
    /// or a leading-coefficient division is not exact.
    pub fn exact_div(&self, den: &Self) -> Result<Self, PolyError> {
        let lead = den.coeffs.last().ok_or(PolyError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < den.coeffs.len() {
            return Err(PolyError::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - den.coeffs.len() + 1;
        let mut quot = vec![C::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + den.coeffs.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::InexactDivision);
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Converts to another coefficient ring; `None` if a coefficient does not fit.
    pub fn convert<D: Coeff>(&self) -> Option<Poly<D>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.to_i128().and_then(D::from_i128))
            .collect::<Option<Vec<D>>>()?;
        Some(Poly::from_coeffs(coeffs))
    }
}

/// Coefficientwise sum, normalized.
pub fn poly_add<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    a.poly_add(b)
}

/// Convolution product, normalized.
pub fn poly_mul<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    a.poly_mul(b)
}

/// Exact division; see [`Poly::exact_div`].
pub fn poly_exact_div<C: Coeff>(num: &Poly<C>, den: &Poly<C>) -> Result<Poly<C>, PolyError> {
    num.exact_div(den)
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Self {
        self.poly_add(&rhs)
    }
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Poly<C> {
        self.poly_add(rhs)
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Self {
        self.poly_sub(&rhs)
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Poly<C> {
        self.poly_sub(rhs)
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Self {
        self.poly_mul(&rhs)
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Poly<C> {
        self.poly_mul(rhs)
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Self {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Highest degree first, e.g. `q^2 + 6q + 7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{abs}q")?,
                _ if unit => write!(f, "q^{k}")?,
                _ => write!(f, "{abs}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> Serialize for Poly<C> {
    /// Ascending JSON array. Coefficients that do not fit in 64 bits are
    /// written as decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            if let Some(v) = c.to_i64() {
                seq.serialize_element(&v)?;
            } else {
                seq.serialize_element(&c.to_string())?;
            }
        }
        seq.end()
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor<C>(std::marker::PhantomData<C>);

        impl<'de, C: Coeff> Visitor<'de> for PolyVisitor<C> {
            type Value = Poly<C>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of integer coefficients")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(v) = seq.next_element::<serde_json::Value>()? {
                    let c = match &v {
                        serde_json::Value::Number(n) => n.as_i64().and_then(C::from_i64),
                        serde_json::Value::String(s) => C::parse_decimal(s),
                        _ => None,
                    };
                    coeffs
                        .push(c.ok_or_else(|| de::Error::custom(format!("bad coefficient {v}")))?);
                }
                Ok(Poly::from_coeffs(coeffs))
            }
        }

        deserializer.deserialize_seq(PolyVisitor(std::marker::PhantomData))
    }
}
