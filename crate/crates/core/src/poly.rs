//! Exact sparse Laurent polynomials over arbitrary-precision integers.
//!
//! [`LaurentPoly2`] holds HOMFLY values in `v, z` (and, after substitution,
//! `α, z`). [`Laurent1`] is the univariate counterpart used for Conway
//! (in `z`), Jones and Alexander (in `s = t^{1/2}`) specializations.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Sparse polynomial in `v^{±1}, z^{±1}`.
///
/// Terms are keyed `(z, v)` so iteration follows the text format's order:
/// z-exponent ascending, then v-exponent ascending.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    /// `c · v^p · z^q`
    pub fn monomial(c: impl Into<BigInt>, p: i32, q: i32) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, c.into());
        out
    }

    /// Builds a polynomial from `(v-exponent, z-exponent, coefficient)` triples;
    /// repeated exponents accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, i32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (p, q, c) in terms {
            out.add_term(p, q, c.into());
        }
        out
    }

    pub fn add_term(&mut self, p: i32, q: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry((q, p)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `v^p z^q`.
    pub fn coeff(&self, p: i32, q: i32) -> BigInt {
        self.terms.get(&(q, p)).cloned().unwrap_or_default()
    }

    /// Iterates `(v-exponent, z-exponent, coefficient)` in text-format order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &BigInt)> + '_ {
        self.terms.iter().map(|(&(q, p), c)| (p, q, c))
    }

    /// Multiplies by `v^dp z^dq`.
    pub fn shift(&self, dp: i32, dq: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(q, p), c)| ((q + dq, p + dp), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `P(v, z) ↦ P(v^{-1}, -z)`, the HOMFLY value of the mirror image.
    pub fn mirror(&self) -> Self {
        Self::from_terms(self.terms().map(|(p, q, c)| {
            let c = if q.rem_euclid(2) == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            (-p, q, c)
        }))
    }

    /// Substitutes `v = 1`, leaving a Laurent polynomial in `z`.
    pub fn at_v_one(&self) -> Laurent1 {
        let mut out = Laurent1::zero();
        for (_, q, c) in self.terms() {
            out.add_term(q, c.clone());
        }
        out
    }

    /// Substitutes `v = s^a`, `z = s - s^{-1}` and returns the result in `s`.
    ///
    /// Negative powers of `z` are cleared by exact division by `(s - s^{-1})`.
    pub fn substitute_v_power_z_difference(&self, a: i32) -> Laurent1 {
        if self.is_zero() {
            return Laurent1::zero();
        }
        let min_q = self.terms().map(|(_, q, _)| q).min().unwrap_or(0).min(0);
        let z = Laurent1::s_minus_inverse();
        // z-powers are cached per exponent; the exponents are small.
        let mut powers: BTreeMap<i32, Laurent1> = BTreeMap::new();
        let mut out = Laurent1::zero();
        for (p, q, c) in self.terms() {
            let e = q - min_q;
            let zq = powers.entry(e).or_insert_with(|| z.pow(e as u32)).clone();
            out += &zq.shift(a * p).scale(c);
        }
        for _ in 0..(-min_q) {
            out = out
                .div_exact(&z)
                .expect("z-denominators of a link invariant cancel exactly");
        }
        out
    }

    /// Max and min exponents of `v`, or `None` when zero.
    pub fn v_range(&self) -> Option<(i32, i32)> {
        let mut it = self.terms().map(|(p, _, _)| p);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), p| (lo.min(p), hi.max(p))))
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Text format: terms sorted by z-exponent then v-exponent, joined by `" + "`,
/// each rendered `c*v^p*z^q`; the zero polynomial prints `0`.
impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, q, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*v^{p}*z^{q}")?;
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(q, p), c) in &rhs.terms {
            self.add_term(p, q, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly2> for LaurentPoly2 {
    fn sub_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(q, p), c) in &rhs.terms {
            self.add_term(p, q, -c.clone());
        }
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(q1, p1), c1) in &self.terms {
            for (&(q2, p2), c2) in &rhs.terms {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

/// Sparse univariate Laurent polynomial with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Laurent1 {
    terms: BTreeMap<i32, BigInt>,
}

impl Laurent1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let mut out = Self::zero();
        out.add_term(e, c.into());
        out
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    /// `s - s^{-1}`
    pub fn s_minus_inverse() -> Self {
        Self::from_terms([(1, 1), (-1, -1)])
    }

    pub fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn all_exponents_even(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn shift(&self, d: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + d, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    /// Replaces every exponent `e` by `e / 2`; `None` if some exponent is odd.
    pub fn halve_exponents(&self) -> Option<Self> {
        if !self.all_exponents_even() {
            return None;
        }
        Some(Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e / 2, c.clone()))
                .collect(),
        })
    }

    /// Replaces every exponent `e` by `k · e`.
    pub fn scale_exponents(&self, k: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e * k, c.clone())))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at the variable equal to 1.
    pub fn sum_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Laurent1) -> Option<Laurent1> {
        let d_lo = divisor.min_degree()?;
        let d_hi = divisor.max_degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division from the top; the quotient's low end is bounded by
        // lo(self) - lo(divisor).
        let q_floor = self.min_degree()? - d_lo;
        while let Some(r_hi) = rem.max_degree() {
            let e = r_hi - d_hi;
            if e < q_floor {
                return None;
            }
            let c = rem.coeff(r_hi);
            if !(&c % &lead).is_zero() {
                return None;
            }
            let qc = &c / &lead;
            for (de, dc) in divisor.terms() {
                rem.add_term(de + e, -(dc * &qc));
            }
            quot.add_term(e, qc);
        }
        Some(quot)
    }

    /// Renders with the given variable name, e.g. `t^3 - 2*t + 1`.
    pub fn display_with(&self, var: &str) -> String {
        self.render(|e| match e {
            0 => None,
            1 => Some(String::from(var)),
            e => Some(alloc::format!("{var}^{e}")),
        })
    }

    /// Renders a polynomial in `s = t^{1/2}` as a polynomial in `t`, using
    /// `t^(k/2)` only for odd exponents.
    pub fn display_half(&self) -> String {
        self.render(|e| match e {
            0 => None,
            2 => Some(String::from("t")),
            e if e % 2 == 0 => Some(alloc::format!("t^{}", e / 2)),
            e => Some(alloc::format!("t^({e}/2)")),
        })
    }

    fn render(&self, power: impl Fn(i32) -> Option<String>) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push('0');
            return out;
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            match power(e) {
                None => {
                    let _ = write!(out, "{mag}");
                }
                Some(x) if mag.is_one() => out.push_str(&x),
                Some(x) => {
                    let _ = write!(out, "{mag}*{x}");
                }
            }
        }
        out
    }

    /// `(exponent, coefficient)` as a vector, for serialization.
    pub fn to_pairs(&self) -> Vec<(i32, BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c.clone())).collect()
    }
}

impl fmt::Debug for Laurent1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl AddAssign<&Laurent1> for Laurent1 {
    fn add_assign(&mut self, rhs: &Laurent1) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&Laurent1> for Laurent1 {
    fn sub_assign(&mut self, rhs: &Laurent1) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl Add for &Laurent1 {
    type Output = Laurent1;
    fn add(self, rhs: &Laurent1) -> Laurent1 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Laurent1 {
    type Output = Laurent1;
    fn sub(self, rhs: &Laurent1) -> Laurent1 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Laurent1 {
    type Output = Laurent1;
    fn neg(self) -> Laurent1 {
        Laurent1 {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &Laurent1 {
    type Output = Laurent1;
    fn mul(self, rhs: &Laurent1) -> Laurent1 {
        let mut out = Laurent1::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn hopf() -> LaurentPoly2 {
        LaurentPoly2::from_terms([(1, 1, 1), (1, -1, 1), (3, -1, -1)])
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let mut p = LaurentPoly2::monomial(3, 1, 1);
        p.add_term(1, 1, BigInt::from(-3));
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn text_format_sorts_by_z_then_v() {
        let trefoil = LaurentPoly2::from_terms([(2, 2, 1), (2, 0, 2), (4, 0, -1)]);
        assert_eq!(trefoil.to_string(), "2*v^2*z^0 + -1*v^4*z^0 + 1*v^2*z^2");
    }

    #[test]
    fn hopf_jones_specialization_has_half_powers() {
        // -t^{1/2} - t^{5/2}
        let v = hopf().substitute_v_power_z_difference(2);
        assert_eq!(v, Laurent1::from_terms([(1, -1), (5, -1)]));
    }

    #[test]
    fn mirror_is_involution_and_flips_odd_z() {
        let p = hopf();
        assert_eq!(p.mirror().mirror(), p);
        assert_eq!(p.mirror().coeff(-1, -1), BigInt::from(-1));
    }

    #[test]
    fn exact_division_detects_remainder() {
        let one_plus = Laurent1::from_terms([(0, 1), (1, 1)]);
        let sq = &one_plus * &one_plus;
        assert_eq!(sq.div_exact(&one_plus), Some(one_plus.clone()));
        let off = &sq + &Laurent1::one();
        assert_eq!(off.div_exact(&one_plus), None);
    }

    #[test]
    fn display_collapses_even_exponents_to_t() {
        let v = Laurent1::from_terms([(2, 1), (6, 1), (8, -1)]);
        assert_eq!(v.display_half(), "-t^4 + t^3 + t");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly2> {
        proptest::collection::vec((-4i32..5, -4i32..5, -5i64..6), 0..6)
            .prop_map(LaurentPoly2::from_terms)
    }

    fn arb_l1() -> impl Strategy<Value = Laurent1> {
        proptest::collection::vec((-5i32..6, -5i64..6), 0..6).prop_map(Laurent1::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert!(a.terms().all(|(_, _, c)| !c.is_zero()));
        }

        #[test]
        fn division_inverts_multiplication(a in arb_l1(), b in arb_l1()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
