//! Exact integer Laurent polynomials.
//!
//! One representation serves two variables: bracket values in `A` use plain
//! integer exponents, Jones values in `t` store doubled exponents so that
//! half-integer powers stay in integer arithmetic (`t^(1/2)` is exponent 1).

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    // exponent -> nonzero coefficient
    coeffs: BTreeMap<i64, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        Laurent { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0) == Some(&1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn insert(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    /// Substitute the variable by its inverse (exponent negation).
    pub fn mirror(&self) -> Laurent {
        let mut out = Laurent::zero();
        for (e, c) in self.terms() {
            out.insert(-e, c);
        }
        out
    }

    /// Multiply by a monomial.
    pub fn shift(&self, exp: i64, coeff: i64) -> Laurent {
        let mut out = Laurent::zero();
        for (e, c) in self.terms() {
            out.insert(e + exp, c * coeff);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Laurent {
        let mut acc = Laurent::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at variable = i (the imaginary unit), returning a Gaussian
    /// integer (re, im). Used for determinants at t = -1 with t^(1/2) = i.
    pub fn eval_at_i(&self) -> (i64, i64) {
        let mut re = 0i64;
        let mut im = 0i64;
        for (e, c) in self.terms() {
            match e.rem_euclid(4) {
                0 => re += c,
                1 => im += c,
                2 => re -= c,
                3 => im -= c,
                _ => unreachable!(),
            }
        }
        (re, im)
    }

    /// Sum of all coefficients (evaluation at variable = 1).
    pub fn eval_at_one(&self) -> i64 {
        self.terms().map(|(_, c)| c).sum()
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.insert(e, c);
        }
        out
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in rhs.terms() {
            self.insert(e, c);
        }
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.insert(e, -c);
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.insert(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.shift(0, -1)
    }
}

/// Render with integer exponents in the given variable, e.g. `-A^4 - A^-4`.
pub fn format_int_var(p: &Laurent, var: char) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        if e == 0 {
            out.push_str(&mag.to_string());
        } else {
            if mag != 1 {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push(var);
            if e != 1 {
                out.push_str(&format!("^{e}"));
            }
        }
    }
    out
}

/// Laurent polynomial in `t` with half-integer exponents stored doubled.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HalfLaurent(pub Laurent);

impl HalfLaurent {
    pub fn one() -> Self {
        HalfLaurent(Laurent::one())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Build from (doubled exponent, coefficient) pairs.
    pub fn from_doubled(terms: &[(i64, i64)]) -> Self {
        let mut p = Laurent::zero();
        for &(e, c) in terms {
            p.insert(e, c);
        }
        HalfLaurent(p)
    }

    /// t ↦ t⁻¹.
    pub fn mirror(&self) -> Self {
        HalfLaurent(self.0.mirror())
    }

    /// Exponent span in whole t-units; the doubled span is always even here
    /// or the caller gets the floor.
    pub fn span_whole_units(&self) -> u64 {
        match (self.0.min_exp(), self.0.max_exp()) {
            (Some(lo), Some(hi)) => ((hi - lo) / 2) as u64,
            _ => 0,
        }
    }

    /// |value at t = -1| using t^(1/2) = i; exact Gaussian evaluation.
    pub fn abs_at_minus_one(&self) -> u64 {
        let (re, im) = self.0.eval_at_i();
        // For links the value is purely real or purely imaginary.
        assert!(
            re == 0 || im == 0,
            "evaluation at t = -1 must be real or imaginary, got {re} + {im}i"
        );
        re.unsigned_abs().max(im.unsigned_abs())
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.eval_at_one()
    }
}

impl std::fmt::Display for HalfLaurent {
    /// Sorted `coeff*t^(k/2)` ASCII terms, half exponents kept as fractions.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.0.terms().enumerate() {
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let mag = c.abs();
            if e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if mag != 1 {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            if e % 2 == 0 {
                let w = e / 2;
                out.push('t');
                if w != 1 {
                    out.push_str(&format!("^({w})"));
                }
            } else {
                out.push_str(&format!("t^({e}/2)"));
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_laurent() -> impl Strategy<Value = Laurent> {
        proptest::collection::vec((-8i64..8, -5i64..5), 0..6).prop_map(|terms| {
            let mut p = Laurent::zero();
            for (e, c) in terms {
                p.insert(e, c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn mul_commutes(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn mul_distributes(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            let lhs = &a * &(&b + &c);
            let rhs = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mirror_involution(a in arb_laurent()) {
            prop_assert_eq!(a.mirror().mirror(), a);
        }

        #[test]
        fn mirror_is_ring_hom(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!((&a * &b).mirror(), &a.mirror() * &b.mirror());
        }

        #[test]
        fn no_zero_coeffs_stored(a in arb_laurent(), b in arb_laurent()) {
            let p = &a - &b;
            prop_assert!(p.terms().all(|(_, c)| c != 0));
        }
    }

    #[test]
    fn display_half_exponents() {
        // -t^(-5/2) - t^(-1/2)
        let p = HalfLaurent::from_doubled(&[(-5, -1), (-1, -1)]);
        assert_eq!(p.to_string(), "-t^(-5/2) - t^(-1/2)");
        let q = HalfLaurent::from_doubled(&[(-8, -1), (-6, 1), (-2, 1)]);
        assert_eq!(q.to_string(), "-t^(-4) + t^(-3) + t^(-1)");
    }

    #[test]
    fn determinant_evaluations() {
        // trefoil: -t^-4 + t^-3 + t^-1 at t = -1 gives -3.
        let tre = HalfLaurent::from_doubled(&[(-8, -1), (-6, 1), (-2, 1)]);
        assert_eq!(tre.abs_at_minus_one(), 3);
        // Hopf: -t^(-5/2) - t^(-1/2) evaluates to ±2i.
        let hopf = HalfLaurent::from_doubled(&[(-5, -1), (-1, -1)]);
        assert_eq!(hopf.abs_at_minus_one(), 2);
    }

    #[test]
    fn span_in_whole_units() {
        let tre = HalfLaurent::from_doubled(&[(-8, -1), (-6, 1), (-2, 1)]);
        assert_eq!(tre.span_whole_units(), 3);
        let hopf = HalfLaurent::from_doubled(&[(-5, -1), (-1, -1)]);
        assert_eq!(hopf.span_whole_units(), 2);
        assert_eq!(HalfLaurent::one().span_whole_units(), 0);
    }
}
