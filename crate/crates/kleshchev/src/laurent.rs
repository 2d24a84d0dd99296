//! Exact integer-coefficient Laurent polynomials in one indeterminate `v`.
//!
//! Coefficients are overflow-checked 64-bit integers; any overflow is a hard
//! error rather than a silent wrap.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A Laurent polynomial in canonical form: no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// `coeff * v^exp`.
    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0) == Some(&1)
    }

    pub fn coefficient(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Exponent/coefficient pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        let mut coeffs = self.coeffs.clone();
        for (&exp, &c) in &other.coeffs {
            let entry = coeffs.entry(exp).or_insert(0);
            *entry = entry.checked_add(c).ok_or(Error::CoeffOverflow)?;
            if *entry == 0 {
                coeffs.remove(&exp);
            }
        }
        Ok(LaurentPoly { coeffs })
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        let mut coeffs: BTreeMap<i64, i64> = BTreeMap::new();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                let prod = c1.checked_mul(c2).ok_or(Error::CoeffOverflow)?;
                let exp = e1.checked_add(e2).ok_or(Error::CoeffOverflow)?;
                let entry = coeffs.entry(exp).or_insert(0);
                *entry = entry.checked_add(prod).ok_or(Error::CoeffOverflow)?;
            }
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(LaurentPoly { coeffs })
    }

    /// Multiply by `coeff * v^exp`.
    pub fn mul_monomial(&self, exp: i64, coeff: i64) -> Result<LaurentPoly> {
        self.mul(&LaurentPoly::monomial(exp, coeff))
    }

    /// Exact division: returns `q` with `self = q * divisor`, or
    /// `InexactDivision` if no such integer Laurent polynomial exists.
    pub fn exact_divide(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Long division from the top.  For an exact quotient q the exponents
        // of q lie in [min(self) - min(divisor), deg(self) - deg(divisor)]
        // because Z[v, 1/v] is a domain; falling below that range proves
        // inexactness and bounds the loop.
        let min_quotient_exp = self.min_exp() - divisor.min_exp();
        let (&div_deg, &div_lead) = divisor.coeffs.iter().next_back().expect("nonzero");
        let mut rem: BTreeMap<i64, i64> = self.coeffs.clone();
        let mut quotient = BTreeMap::new();
        while let Some((&rem_deg, &rem_lead)) = rem.iter().next_back() {
            let exp = rem_deg - div_deg;
            if exp < min_quotient_exp || rem_lead % div_lead != 0 {
                return Err(Error::InexactDivision);
            }
            let q = rem_lead / div_lead;
            quotient.insert(exp, q);
            for (&e, &c) in &divisor.coeffs {
                let target = e + exp;
                let entry = rem.entry(target).or_insert(0);
                *entry = entry
                    .checked_sub(c.checked_mul(q).ok_or(Error::CoeffOverflow)?)
                    .ok_or(Error::CoeffOverflow)?;
                if *entry == 0 {
                    rem.remove(&target);
                }
            }
        }
        Ok(LaurentPoly { coeffs: quotient })
    }

    /// The value at `v = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> Result<i64> {
        let mut total: i64 = 0;
        for &c in self.coeffs.values() {
            total = total.checked_add(c).ok_or(Error::CoeffOverflow)?;
        }
        Ok(total)
    }

    fn min_exp(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(0)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&exp, &coeff) in self.coeffs.iter().rev() {
            if !first {
                write!(f, "{}", if coeff < 0 { " - " } else { " + " })?;
            } else if coeff < 0 {
                write!(f, "-")?;
            }
            first = false;
            let abs = coeff.unsigned_abs();
            match exp {
                0 => write!(f, "{abs}")?,
                1 if abs == 1 => write!(f, "v")?,
                1 => write!(f, "{abs}*v")?,
                _ if abs == 1 => write!(f, "v^{exp}")?,
                _ => write!(f, "{abs}*v^{exp}")?,
            }
        }
        Ok(())
    }
}

/// Balanced quantum integer `[k] = v^(k-1) + v^(k-3) + ... + v^(1-k)`.
pub fn quantum_integer(k: u32) -> LaurentPoly {
    let mut poly = LaurentPoly::zero();
    let k = i64::from(k);
    let mut exp = 1 - k;
    while exp < k {
        poly = poly.add(&LaurentPoly::monomial(exp, 1)).expect("small");
        exp += 2;
    }
    poly
}

/// Quantum factorial `[a]! = [1][2]...[a]`; the empty product is `1`.
pub fn quantum_factorial(a: u32) -> Result<LaurentPoly> {
    let mut product = LaurentPoly::one();
    for k in 1..=a {
        product = product.mul(&quantum_integer(k))?;
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn balanced(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut poly = LaurentPoly::zero();
        for &(exp, coeff) in pairs {
            poly = poly.add(&LaurentPoly::monomial(exp, coeff)).unwrap();
        }
        poly
    }

    #[test]
    fn ring_examples() {
        let p = balanced(&[(1, 1), (-1, 1)]);
        let sq = p.mul(&p).unwrap();
        assert_eq!(sq, balanced(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(p.exact_divide(&p).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn inexact_division_detected() {
        let num = balanced(&[(2, 1), (0, 1)]);
        let den = balanced(&[(1, 1), (0, 1)]);
        assert_eq!(num.exact_divide(&den), Err(Error::InexactDivision));
    }

    #[test]
    fn quantum_factorials() {
        assert!(quantum_factorial(0).unwrap().is_one());
        assert_eq!(quantum_factorial(2).unwrap(), balanced(&[(1, 1), (-1, 1)]));
        let expected = balanced(&[(1, 1), (-1, 1)])
            .mul(&balanced(&[(2, 1), (0, 1), (-2, 1)]))
            .unwrap();
        assert_eq!(quantum_factorial(3).unwrap(), expected);
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = balanced(&[(3, 2), (3, -2), (0, 1)]);
        assert_eq!(p, LaurentPoly::one());
        assert!(LaurentPoly::monomial(5, 0).is_zero());
    }

    proptest! {
        #[test]
        fn division_inverts_multiplication(
            a in proptest::collection::vec((-6i64..6, -9i64..9), 0..5),
            b in proptest::collection::vec((-6i64..6, -9i64..9), 1..5),
        ) {
            let a = balanced(&a);
            let b = balanced(&b);
            prop_assume!(!b.is_zero());
            let product = a.mul(&b).unwrap();
            prop_assert_eq!(product.exact_divide(&b).unwrap(), a);
        }

        #[test]
        fn eval_at_one_is_ring_hom(
            a in proptest::collection::vec((-6i64..6, -9i64..9), 0..5),
            b in proptest::collection::vec((-6i64..6, -9i64..9), 0..5),
        ) {
            let a = balanced(&a);
            let b = balanced(&b);
            prop_assert_eq!(
                a.mul(&b).unwrap().eval_at_one().unwrap(),
                a.eval_at_one().unwrap() * b.eval_at_one().unwrap()
            );
        }
    }
}
