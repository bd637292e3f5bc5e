//! Poincaré polynomials of flag manifolds from painted Dynkin diagrams.
//!
//! The polynomial is the product over the black positive roots of
//! (1 - t^{h+1}) / (1 - t^h), h the root height, computed exactly over
//! arbitrary-precision integers. The variable t carries cohomological
//! degree 2: the coefficient of t^j is the Betti number b_{2j}.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lie::PaintedDiagram;

/// Dense polynomial over the integers; index = degree in t. The
/// highest-degree coefficient is nonzero unless the polynomial is zero
/// (represented by an empty coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds from a dense coefficient vector, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// 1 - t^a.
    pub fn one_minus_t_pow(a: usize) -> Self {
        assert!(a > 0);
        let mut coeffs = vec![BigInt::zero(); a + 1];
        coeffs[0] = BigInt::one();
        coeffs[a] = -BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    /// Exact division; a nonzero remainder or a non-integral quotient step
    /// is an internal-consistency error (the callers divide products that
    /// are divisible by construction).
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        if divisor.is_zero() {
            return Err(Error::internal("polynomial division by zero"));
        }
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let dn = divisor.coeffs.len();
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return Err(Error::internal("exact division with nonzero remainder"));
        }
        let qlen = rem.len() - dn + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return Err(Error::internal("exact division hit a non-integral step"));
            }
            quot[k] = q;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let sub = &quot[k] * d;
                rem[k + i] -= sub;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::internal("exact division with nonzero remainder"));
        }
        Ok(IntPolynomial::from_coeffs(quot))
    }

    /// coeffs[j] == coeffs[deg - j] for all j.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|j| self.coeffs[j] == self.coeffs[n - 1 - j])
    }

    /// Coefficients weakly increase to the middle, then weakly decrease.
    pub fn is_unimodal(&self) -> bool {
        let n = self.coeffs.len();
        if n == 0 {
            return true;
        }
        let mid = (n - 1) / 2;
        (0..mid).all(|j| self.coeffs[j] <= self.coeffs[j + 1])
            && (mid..n - 1).all(|j| self.coeffs[j] >= self.coeffs[j + 1])
    }

    /// Coefficients as i64 for report serialization; only fails if a
    /// coefficient overflows i64, far beyond the supported rank range.
    pub fn coeffs_i64(&self) -> Result<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.to_i64()
                    .ok_or_else(|| Error::internal("polynomial coefficient overflows i64"))
            })
            .collect()
    }

    /// Text form like `1 + t + 2t^2`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "t".to_string(),
                (1, false) => format!("{mag}t"),
                (_, true) => format!("t^{k}"),
                (_, false) => format!("{mag}t^{k}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Exact Poincaré polynomial of the flag manifold of a painted diagram.
///
/// The numerator exponents {h+1} and denominator exponents {h} are first
/// cancelled as multisets, then the remaining numerator factors are
/// multiplied out and the denominator factors divided off exactly; a
/// remainder indicates a root-generation bug and surfaces as an internal
/// error.
pub fn poincare_polynomial(d: &PaintedDiagram) -> Result<IntPolynomial> {
    let heights = d.heights_multiset();
    let mut num: BTreeMap<usize, usize> = BTreeMap::new();
    let mut den: BTreeMap<usize, usize> = BTreeMap::new();
    for h in &heights {
        *num.entry(h + 1).or_default() += 1;
        *den.entry(*h).or_default() += 1;
    }
    // cancel equal factors before expanding
    let keys: Vec<usize> = num.keys().copied().collect();
    for k in keys {
        let n = num.get(&k).copied().unwrap_or(0);
        let m = den.get(&k).copied().unwrap_or(0);
        let c = n.min(m);
        if c > 0 {
            *num.get_mut(&k).unwrap() -= c;
            *den.get_mut(&k).unwrap() -= c;
        }
    }
    let mut poly = IntPolynomial::one();
    for (&a, &mult) in &num {
        for _ in 0..mult {
            poly = poly.mul(&IntPolynomial::one_minus_t_pow(a));
        }
    }
    for (&b, &mult) in &den {
        for _ in 0..mult {
            poly = poly.exact_div(&IntPolynomial::one_minus_t_pow(b))?;
        }
    }
    let n = d.complex_dimension();
    if poly.degree() != Some(n) {
        return Err(Error::internal(format!(
            "Poincaré polynomial of {d} has degree {:?}, expected {n}",
            poly.degree()
        )));
    }
    if !poly.coeff(0).is_one() {
        return Err(Error::internal(format!(
            "Poincaré polynomial of {d} has constant term {}, expected 1",
            poly.coeff(0)
        )));
    }
    Ok(poly)
}

/// Even Betti numbers b_0, b_2, ..., b_{2n} of the flag manifold.
pub fn betti_numbers(d: &PaintedDiagram) -> Result<Vec<u64>> {
    poincare_polynomial(d)?
        .coeffs()
        .iter()
        .map(|c| {
            c.to_u64()
                .ok_or_else(|| Error::internal("Betti number out of u64 range"))
        })
        .collect()
}

/// True iff the Poincaré polynomial is 1 + t + ... + t^n.
pub fn is_constant_betti(d: &PaintedDiagram) -> Result<bool> {
    Ok(betti_numbers(d)?.iter().all(|&b| b == 1))
}
