//! The normalized HOMFLY polynomial
//!
//! `P̃(α, z) = (1+α)^{1-s} (-α)^{-(-χ+2-#K)/2} (v^{-1} z)^{#K-1} P(v, z)|_{-v²=α}`
//!
//! its coefficient grid `h_{i,j}` (of `α^i z^{2j}`) and the coefficient
//! identities and bounds that hold for closed positive braids, together with
//! the Conway, Jones and L-space coefficient reports derived from them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::link::LinkProfile;
use crate::poly::{Laurent1, LaurentPoly2};

/// Coefficients `h_{i,j}` of `α^i z^{2j}` plus the profile they were built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HGrid {
    entries: BTreeMap<(i32, i32), BigInt>,
    pub profile: LinkProfile,
    pub all_nonnegative: bool,
}

fn one_plus_alpha_pow(k: u32) -> Laurent1 {
    Laurent1::from_terms([(0, 1), (1, 1)]).pow(k)
}

/// Exponent `t` of `(-α)^t`.
fn alpha_shift(profile: &LinkProfile) -> i32 {
    let num = -profile.euler + 2 - profile.components;
    -(num / 2) as i32
}

impl HGrid {
    pub fn from_entries<I, C>(profile: LinkProfile, entries: I) -> Self
    where
        I: IntoIterator<Item = (i32, i32, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<(i32, i32), BigInt> = BTreeMap::new();
        for (i, j, c) in entries {
            *map.entry((i, j)).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        let all_nonnegative = map.values().all(|c| !c.is_negative());
        Self {
            entries: map,
            profile,
            all_nonnegative,
        }
    }

    /// `h_{i,j}`, zero outside the support.
    pub fn h(&self, i: i64, j: i64) -> BigInt {
        if i < i32::MIN as i64 || i > i32::MAX as i64 || j < i32::MIN as i64 || j > i32::MAX as i64
        {
            return BigInt::zero();
        }
        self.entries
            .get(&(i as i32, j as i32))
            .cloned()
            .unwrap_or_default()
    }

    /// `(i, j, h_{i,j})` for nonzero entries, ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (i32, i32, &BigInt)> + '_ {
        self.entries.iter().map(|(&(i, j), c)| (i, j, c))
    }

    /// `P̃` as a polynomial in `α` (first variable) and `z` (second variable,
    /// actual `z` exponents `2j`).
    pub fn to_poly(&self) -> LaurentPoly2 {
        LaurentPoly2::from_terms(self.entries().map(|(i, j, c)| (i, 2 * j, c.clone())))
    }

    /// Inverts [`normalize`], recovering `P(v, z)`.
    pub fn denormalize(&self) -> Result<LaurentPoly2> {
        let p = &self.profile;
        if p.split < 1 {
            return Err(Error::PreconditionViolated("split count must be positive"));
        }
        let mut slices: BTreeMap<i32, Laurent1> = BTreeMap::new();
        for (i, j, c) in self.entries() {
            slices.entry(2 * j).or_default().add_term(i, c.clone());
        }
        let mult = one_plus_alpha_pow((p.split - 1) as u32);
        let t = alpha_shift(p);
        let k = (p.components - 1) as i32;
        let mut out = LaurentPoly2::zero();
        for (q, slice) in slices {
            let s = (&slice * &mult).shift(-t);
            let s = if t.rem_euclid(2) == 1 { -&s } else { s };
            for (a, c) in s.terms() {
                // α^a = (-1)^a v^{2a}
                let c = if a.rem_euclid(2) == 1 {
                    -c.clone()
                } else {
                    c.clone()
                };
                out.add_term(2 * a + k, q - k, c);
            }
        }
        Ok(out)
    }

    /// Coefficient checks; see [`check_theorem_main`].
    pub fn check(&self) -> TheoremReport {
        check_theorem_main(self)
    }
}

/// Builds the grid of `P̃` from a HOMFLY polynomial and its link profile.
///
/// Errors signal a mismatch between polynomial and profile: odd exponents
/// where even ones are required, or a remainder dividing by `(1+α)^{s-1}`.
pub fn normalize(poly: &LaurentPoly2, profile: &LinkProfile) -> Result<HGrid> {
    if profile.split < 1 {
        return Err(Error::PreconditionViolated("split count must be positive"));
    }
    let k = (profile.components - 1) as i32;
    let shifted = poly.shift(-k, k);
    let mut slices: BTreeMap<i32, Laurent1> = BTreeMap::new();
    for (p, q, c) in shifted.terms() {
        if p.rem_euclid(2) != 0 {
            return Err(Error::OddExponent("v² = -α substitution"));
        }
        let a = p / 2;
        let c = if a.rem_euclid(2) == 1 {
            -c.clone()
        } else {
            c.clone()
        };
        slices.entry(q).or_default().add_term(a, c);
    }
    let t = alpha_shift(profile);
    let divisor = one_plus_alpha_pow((profile.split - 1) as u32);
    let mut entries = Vec::new();
    for (q, slice) in slices {
        let s = slice.shift(t);
        let s = if t.rem_euclid(2) == 1 { -&s } else { s };
        let s = s.div_exact(&divisor).ok_or(Error::InexactDivision)?;
        if s.is_zero() {
            continue;
        }
        if q < 0 || q % 2 != 0 {
            return Err(Error::OddExponent(
                "z-exponent parity of the normalized polynomial",
            ));
        }
        for (i, c) in s.terms() {
            entries.push((i, q / 2, c.clone()));
        }
    }
    Ok(HGrid::from_entries(profile.clone(), entries))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TheoremItem {
    /// `P̃ ∈ Z[α, z²]` with nonnegative coefficients.
    Positivity,
    /// `h_{i,j} = 0` whenever `i + j > d`.
    A,
    /// `h_{i,d-i} = C(p, i)`.
    B,
    /// `h_{0,d-1} = m`.
    C,
    /// `h_{0,d-2} = (m-1)(m-2)/2 + p - 1`.
    D,
    /// `(m-2)p <= h_{1,d-2} <= (m-2)p + m`.
    E,
    /// `h_{0,d-3} = (m-1)(m-2)(m-6)/6 + h_{1,d-2} - 2(p-1)`.
    F,
}

impl TheoremItem {
    pub const ALL: [TheoremItem; 7] = [
        TheoremItem::Positivity,
        TheoremItem::A,
        TheoremItem::B,
        TheoremItem::C,
        TheoremItem::D,
        TheoremItem::E,
        TheoremItem::F,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TheoremItem::Positivity => "i",
            TheoremItem::A => "a",
            TheoremItem::B => "b",
            TheoremItem::C => "c",
            TheoremItem::D => "d",
            TheoremItem::E => "e",
            TheoremItem::F => "f",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Flag(bool),
    Int(BigInt),
    Ints(Vec<BigInt>),
    /// Closed interval.
    Range(BigInt, BigInt),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The item refers to a negative `j` (small `d`) and holds vacuously.
    Vacuous,
}

impl Status {
    pub fn is_ok(self) -> bool {
        self != Status::Fail
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItemCheck {
    pub item: TheoremItem,
    pub expected: Value,
    pub observed: Value,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub items: Vec<ItemCheck>,
}

impl TheoremReport {
    pub fn item(&self, item: TheoremItem) -> &ItemCheck {
        self.items
            .iter()
            .find(|c| c.item == item)
            .expect("report carries every item")
    }

    /// Items (a)-(f) all pass or hold vacuously.
    pub fn coefficient_items_ok(&self) -> bool {
        self.items
            .iter()
            .filter(|c| c.item != TheoremItem::Positivity)
            .all(|c| c.status.is_ok())
    }

    /// Every item, including positivity, passes or holds vacuously.
    pub fn all_ok(&self) -> bool {
        self.items.iter().all(|c| c.status.is_ok())
    }

    pub fn count(&self, status: Status) -> usize {
        self.items.iter().filter(|c| c.status == status).count()
    }
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Evaluates the positivity statement and items (a)-(f) on a grid, with `m`,
/// `d`, `p` taken from its profile.
pub fn check_theorem_main(grid: &HGrid) -> TheoremReport {
    let prof = &grid.profile;
    let (m, d, p) = (prof.m, prof.d, prof.prime);
    let big = BigInt::from;
    let mut items = Vec::with_capacity(7);

    let in_ring = grid.entries().all(|(i, j, _)| i >= 0 && j >= 0);
    let positive = in_ring && grid.all_nonnegative;
    items.push(ItemCheck {
        item: TheoremItem::Positivity,
        expected: Value::Flag(true),
        observed: Value::Flag(positive),
        status: Status::from_bool(positive),
    });

    let violations = grid
        .entries()
        .filter(|&(i, j, _)| i as i64 + j as i64 > d)
        .count();
    items.push(ItemCheck {
        item: TheoremItem::A,
        expected: Value::Int(big(0)),
        observed: Value::Int(big(violations as i64)),
        status: Status::from_bool(violations == 0),
    });

    let (expected_b, observed_b): (Vec<_>, Vec<_>) = (0..=d.max(-1))
        .map(|i| (binomial(p, i), grid.h(i, d - i)))
        .unzip();
    items.push(ItemCheck {
        item: TheoremItem::B,
        status: if d < 0 {
            Status::Vacuous
        } else {
            Status::from_bool(expected_b == observed_b)
        },
        expected: Value::Ints(expected_b),
        observed: Value::Ints(observed_b),
    });

    let single = |item, need: i64, expected: BigInt, observed: BigInt| {
        let status = if d < need {
            Status::Vacuous
        } else {
            Status::from_bool(expected == observed)
        };
        ItemCheck {
            item,
            expected: Value::Int(expected),
            observed: Value::Int(observed),
            status,
        }
    };

    items.push(single(TheoremItem::C, 1, big(m), grid.h(0, d - 1)));
    items.push(single(
        TheoremItem::D,
        2,
        big((m - 1) * (m - 2) / 2 + p - 1),
        grid.h(0, d - 2),
    ));

    let h1 = grid.h(1, d - 2);
    let lo = big((m - 2) * p);
    let hi = big((m - 2) * p + m);
    let e_status = if d < 2 {
        Status::Vacuous
    } else {
        Status::from_bool(lo <= h1 && h1 <= hi)
    };
    items.push(ItemCheck {
        item: TheoremItem::E,
        expected: Value::Range(lo, hi),
        observed: Value::Int(h1.clone()),
        status: e_status,
    });

    let f_expected = big((m - 1) * (m - 2) * (m - 6) / 6) + &h1 - big(2 * (p - 1));
    items.push(single(TheoremItem::F, 3, f_expected, grid.h(0, d - 3)));

    TheoremReport { items }
}

/// `h(K) = h_{1,d-2}`, zero when `d < 2`.
pub fn h_invariant(grid: &HGrid) -> BigInt {
    grid.h(1, grid.profile.d - 2)
}

fn knot_genus(profile: &LinkProfile) -> Result<i64> {
    match profile.genus {
        Some(g) if profile.is_knot() => Ok(g),
        _ => Err(Error::NotAKnot),
    }
}

/// Top Conway coefficients of a knot against their predicted values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConwayReport {
    pub genus: i64,
    pub prime: i64,
    /// `a_{2g-2}`; `None` when `2g - 2 < 0`.
    pub top: Option<BigInt>,
    /// `2g - p`
    pub top_expected: BigInt,
    pub top_ok: bool,
    /// `a_{2g-4}`; `None` when `2g - 4 < 0`.
    pub next: Option<BigInt>,
    /// Closed interval for `a_{2g-4}`.
    pub next_bounds: (BigInt, BigInt),
    pub next_ok: bool,
}

impl ConwayReport {
    pub fn ok(&self) -> bool {
        self.top_ok && self.next_ok
    }
}

/// Compares `a_{2g-2}` with `2g - p` and places `a_{2g-4}` in
/// `[2g² - (5+2p)g + 3p, 2g² - (3+2p)g + p(p+5)/2]`.
pub fn conway_report(conway: &Laurent1, profile: &LinkProfile) -> Result<ConwayReport> {
    let g = knot_genus(profile)?;
    let p = profile.prime;
    let top_deg = 2 * g - 2;
    let next_deg = 2 * g - 4;
    let top = (top_deg >= 0).then(|| conway.coeff(top_deg as i32));
    let next = (next_deg >= 0).then(|| conway.coeff(next_deg as i32));
    let top_expected = BigInt::from(2 * g - p);
    let lo = BigInt::from(2 * g * g - (5 + 2 * p) * g + 3 * p);
    let hi = BigInt::from(2 * g * g - (3 + 2 * p) * g + p * (p + 5) / 2);
    let top_ok = top.as_ref().is_none_or(|a| *a == top_expected);
    let next_ok = next.as_ref().is_none_or(|a| lo <= *a && *a <= hi);
    Ok(ConwayReport {
        genus: g,
        prime: p,
        top,
        top_expected,
        top_ok,
        next,
        next_bounds: (lo, hi),
        next_ok,
    })
}

/// Lowest Jones coefficients of a knot: `V / t^{g} = 1 + p t² + k t³ + …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JonesReport {
    pub genus: i64,
    pub prime: i64,
    pub min_degree: i64,
    /// Lowest degree equals the genus.
    pub min_degree_ok: bool,
    /// `c_0 .. c_3` of `V / t^{min_degree}`.
    pub coefficients: [BigInt; 4],
    pub leading_ok: bool,
    pub p_ok: bool,
    /// `k = c_3`
    pub k: BigInt,
    pub k_bounds: (BigInt, BigInt),
    pub k_in_bounds: bool,
    /// `h_{1,d-2}`
    pub h: BigInt,
    /// `k = h + (1 - 2g) p`
    pub identity_ok: bool,
}

impl JonesReport {
    pub fn ok(&self) -> bool {
        self.min_degree_ok && self.leading_ok && self.p_ok && self.k_in_bounds && self.identity_ok
    }
}

/// Reads the lowest Jones coefficients of a knot (`jones` in `s = t^{1/2}`).
///
/// The polynomial is divided by `t` to its lowest degree, which is expected
/// to equal the genus.
pub fn jones_report(jones: &Laurent1, grid: &HGrid) -> Result<JonesReport> {
    let profile = &grid.profile;
    let g = knot_genus(profile)?;
    let p = profile.prime;
    let v = jones
        .halve_exponents()
        .ok_or(Error::OddExponent("Jones polynomial of a knot"))?;
    let min = v.min_degree().unwrap_or(0) as i64;
    let w = v.shift(-(min as i32));
    let coefficients = [w.coeff(0), w.coeff(1), w.coeff(2), w.coeff(3)];
    let k = coefficients[3].clone();
    let lo = BigInt::from(-p);
    let hi = BigInt::from(-p + 2 * g);
    let h = h_invariant(grid);
    let identity_ok = k == &h + BigInt::from((1 - 2 * g) * p);
    Ok(JonesReport {
        genus: g,
        prime: p,
        min_degree: min,
        min_degree_ok: min == g,
        leading_ok: coefficients[0] == BigInt::from(1) && coefficients[1].is_zero(),
        p_ok: coefficients[2] == BigInt::from(p),
        k_in_bounds: lo <= k && k <= hi,
        k_bounds: (lo, hi),
        coefficients,
        k,
        h,
        identity_ok,
    })
}

/// Necessary conditions for an L-space positive-braid knot. A knot failing
/// any of them is not one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LspaceScreen {
    /// `t²`-coefficient of `V / t^g` is 1 and `k ∈ {0, -1}`.
    pub jones_ok: bool,
    /// `h ∈ {2g-2, 2g-1}`.
    pub h_ok: bool,
    /// Nonzero Alexander coefficients are ±1, alternate in sign and lead with
    /// `t^g - t^{g-1}`.
    pub alexander_form_ok: bool,
}

impl LspaceScreen {
    pub fn passes(&self) -> bool {
        self.jones_ok && self.h_ok && self.alexander_form_ok
    }
}

/// Screens a knot given its Jones report, grid and symmetrized Alexander
/// polynomial (in `s = t^{1/2}`). The unknot passes trivially.
pub fn lspace_screen(
    jones: &JonesReport,
    grid: &HGrid,
    alexander: &Laurent1,
) -> Result<LspaceScreen> {
    let g = knot_genus(&grid.profile)?;
    if g == 0 {
        return Ok(LspaceScreen {
            jones_ok: true,
            h_ok: true,
            alexander_form_ok: true,
        });
    }
    let jones_ok = jones.coefficients[2] == BigInt::from(1)
        && (jones.k.is_zero() || jones.k == BigInt::from(-1));
    let h = h_invariant(grid);
    let h_ok = h == BigInt::from(2 * g - 2) || h == BigInt::from(2 * g - 1);
    let alexander_form_ok = match alexander.halve_exponents() {
        None => false,
        Some(delta) => {
            let coeffs: Vec<(i32, &BigInt)> = delta.terms().rev().collect();
            let unit = coeffs.iter().all(|(_, c)| c.abs() == BigInt::from(1));
            let alternating = coeffs
                .windows(2)
                .all(|w| w[0].1.is_positive() != w[1].1.is_positive());
            let leads = coeffs.len() >= 2
                && coeffs[0].0 as i64 == g
                && coeffs[0].1.is_positive()
                && coeffs[1].0 as i64 == g - 1;
            unit && alternating && leads
        }
    };
    Ok(LspaceScreen {
        jones_ok,
        h_ok,
        alexander_form_ok,
    })
}

/// Coefficient of `t^{g-2}` in the symmetrized Alexander polynomial of a knot
/// (`alexander` in `s = t^{1/2}`); for prime positive-braid knots it equals
/// `2g - 1 - h` and `-k`.
pub fn alexander_third_coefficient(alexander: &Laurent1, genus: i64) -> BigInt {
    alexander.coeff(2 * (genus as i32 - 2))
}
