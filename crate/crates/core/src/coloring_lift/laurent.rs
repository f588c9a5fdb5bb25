//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A Laurent polynomial `Σ cᵢ tⁱ` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    /// Nonzero coefficients keyed by exponent.
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// The monomial `c·tⁿ`.
    pub fn monomial(n: i64, c: i64) -> Self {
        LaurentPoly::from_terms(&[(n, c)])
    }

    /// Builds from `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = LaurentPoly::zero();
        for &(n, c) in terms {
            p.add_term(n, &BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, n: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(n).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&n, c)| (n, c))
    }

    /// Coefficient of `tⁿ`.
    pub fn coeff(&self, n: i64) -> BigInt {
        self.coeffs.get(&n).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient.
    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Sum.
    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (n, c) in other.terms() {
            p.add_term(n, c);
        }
        p
    }

    /// Difference.
    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&n, c)| (n, -c)).collect(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (n, c) in self.terms() {
            for (m, d) in other.terms() {
                p.add_term(n + m, &(c * d));
            }
        }
        p
    }

    /// Multiplies by the unit `sign·tⁿ`.
    pub fn shift(&self, n: i64, sign: i64) -> LaurentPoly {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&m, c)| (m + n, c * sign))
                .collect(),
        }
    }

    /// Normalizes up to units `±tᵏ`: lowest exponent 0, leading coefficient
    /// positive.
    pub fn normalized(&self) -> LaurentPoly {
        let Some(low) = self.min_degree() else {
            return LaurentPoly::zero();
        };
        let lead = &self.coeffs[&self.max_degree().unwrap()];
        self.shift(-low, if lead.is_negative() { -1 } else { 1 })
    }

    /// Evaluates at an integer point (`t = ±1` when negative exponents are
    /// present).
    pub fn eval(&self, x: i64) -> BigInt {
        let low = self.min_degree().unwrap_or(0).min(0);
        if low < 0 {
            assert!(x == 1 || x == -1, "Laurent evaluation needs t = ±1");
        }
        let xb = BigInt::from(x);
        let mut acc = BigInt::zero();
        for (n, c) in self.terms() {
            acc += c * xb.pow((n - low) as u32);
        }
        // Multiply back the factored unit x^low (x = ±1 here when low < 0).
        if x == -1 && low % 2 != 0 {
            -acc
        } else {
            acc
        }
    }

    /// Quotient and remainder by `other` over ℤ[t], after clearing units so
    /// both operands are ordinary polynomials with nonzero constant term.
    /// Returns `None` when a leading-coefficient division is not exact (in
    /// that case `other` does not divide `self` over ℤ).
    fn div_rem_poly(&self, other: &LaurentPoly) -> Option<(LaurentPoly, LaurentPoly)> {
        let dmin = other.min_degree().expect("division by zero polynomial");
        let d = other.shift(-dmin, 1);
        let smin = self.min_degree().unwrap_or(0);
        let mut rem = self.shift(-smin.min(0), 1);
        let dlead = d.max_degree().unwrap();
        let dcoef = d.coeff(dlead);
        let mut quot = LaurentPoly::zero();
        while let Some(rlead) = rem.max_degree() {
            if rlead < dlead {
                break;
            }
            let (q, r) = rem.coeff(rlead).div_rem(&dcoef);
            if r.is_zero() {
                let mut mono = LaurentPoly::zero();
                mono.add_term(rlead - dlead, &q);
                rem = rem.sub(&mono.mul(&d));
                quot = quot.add(&mono);
            } else {
                return None;
            }
        }
        // Undo the unit clearing on the quotient.
        Some((quot.shift(smin.min(0) + -dmin, 1), rem))
    }

    /// Exact division: `Some(self / other)` when `other` divides `self` in
    /// ℤ[t, t⁻¹], `None` otherwise.
    pub fn divide_exact(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (quot, rem) = self.div_rem_poly(other)?;
        if rem.is_zero() {
            Some(quot)
        } else {
            None
        }
    }

    /// Remainder modulo `t² − t + 1` after normalization (the divisor is
    /// monic, so division over ℤ[t] always succeeds).
    pub fn rem_by_cyclotomic6(&self) -> LaurentPoly {
        let divisor = LaurentPoly::from_terms(&[(2, 1), (1, -1), (0, 1)]);
        let (_, rem) = self
            .normalized()
            .div_rem_poly(&divisor)
            .expect("monic division never fails");
        rem
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            match (*n, mag.to_string().as_str()) {
                (0, m) => write!(f, "{m}")?,
                (1, "1") => write!(f, "t")?,
                (1, m) => write!(f, "{m}t")?,
                (_, "1") => write!(f, "t^{n}")?,
                (_, m) => write!(f, "{m}t^{n}")?,
            }
        }
        Ok(())
    }
}
