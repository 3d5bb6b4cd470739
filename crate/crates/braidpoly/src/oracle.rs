//! Independent cross-checks for the Jones and Alexander specializations.
//!
//! Neither routine touches the skein engine: the Jones polynomial comes from
//! the Kauffman bracket of the closed-braid diagram, the Alexander polynomial
//! from the reduced Burau representation.

use std::collections::BTreeMap;

use braidpoly_core::{BraidWord, Error, Laurent1, Result};
use num_traits::Signed;

/// Crossing limit for [`bracket_jones`].
pub const MAX_BRACKET_CROSSINGS: usize = 24;

/// A planar matching of `2n` boundary points: `0..n` on the bottom of the
/// braid, `n..2n` on the current top.
type Matching = Vec<u8>;

fn loop_value() -> Laurent1 {
    // d = -A² - A⁻²
    Laurent1::from_terms([(2, -1), (-2, -1)])
}

/// Composes `e_i` (cap-cup between top points `i-1` and `i`) onto `m`.
/// Returns the new matching and whether a closed loop was created.
fn apply_cap_cup(m: &Matching, n: usize, i: usize) -> (Matching, bool) {
    let (a, b) = (n + i - 1, n + i);
    let mut out = m.clone();
    let (pa, pb) = (m[a] as usize, m[b] as usize);
    let closed = pa == b;
    if !closed {
        out[pa] = pb as u8;
        out[pb] = pa as u8;
    }
    out[a] = b as u8;
    out[b] = a as u8;
    (out, closed)
}

/// Number of circles after joining top point `j` to bottom point `j`.
fn closure_loops(m: &Matching, n: usize) -> usize {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = m[p] as usize;
            seen[q] = true;
            p = if q < n { q + n } else { q - n };
            if seen[p] {
                break;
            }
        }
    }
    loops
}

/// Kauffman bracket `⟨D⟩` of the closed braid in `A`, normalized so the
/// one-circle diagram has bracket 1.
///
/// The state sum is organized as a Temperley–Lieb composition: each crossing
/// `σ_i^{±1}` maps to `A^{±1}·1 + A^{∓1}·e_i`, and the states are grouped by
/// the planar matching they produce.
pub fn kauffman_bracket(w: &BraidWord) -> Result<Laurent1> {
    if w.len() > MAX_BRACKET_CROSSINGS {
        return Err(Error::Resource(format!(
            "{} crossings exceeds the bracket limit {MAX_BRACKET_CROSSINGS}",
            w.len()
        )));
    }
    let n = w.strands();
    let identity: Matching = (0..2 * n).map(|p| ((p + n) % (2 * n)) as u8).collect();
    // (matching, internal loop count) -> coefficient
    let mut states: BTreeMap<(Matching, u32), Laurent1> = BTreeMap::new();
    states.insert((identity, 0), Laurent1::one());
    for &letter in w.letters() {
        let i = letter.unsigned_abs() as usize;
        let sign = letter.signum();
        let mut next: BTreeMap<(Matching, u32), Laurent1> = BTreeMap::new();
        for ((m, loops), c) in states {
            let keep = c.shift(sign);
            *next.entry((m.clone(), loops)).or_default() += &keep;
            let (m2, closed) = apply_cap_cup(&m, n, i);
            let smooth = c.shift(-sign);
            *next.entry((m2, loops + closed as u32)).or_default() += &smooth;
        }
        states = next;
    }
    let d = loop_value();
    let mut total = Laurent1::zero();
    for ((m, loops), c) in states {
        let circles = loops as usize + closure_loops(&m, n);
        total += &(&c * &d.pow(circles as u32 - 1));
    }
    Ok(total)
}

/// Jones polynomial from the Kauffman bracket, `V = (-A³)^{-w} ⟨D⟩` with
/// `A = t^{-1/4}`, returned in `s = t^{1/2}`.
pub fn bracket_jones(w: &BraidWord) -> Result<Laurent1> {
    let bracket = kauffman_bracket(w)?;
    let writhe = w.exponent_sum() as i32;
    let mut v = bracket.shift(-3 * writhe);
    if writhe % 2 != 0 {
        v = -&v;
    }
    // A^k = s^{-k/2}
    let mut out = Laurent1::zero();
    for (k, c) in v.terms() {
        debug_assert_eq!(k % 2, 0);
        out.add_term(-k / 2, c.clone());
    }
    Ok(out)
}

type Matrix = Vec<Vec<Laurent1>>;

fn identity(size: usize) -> Matrix {
    (0..size)
        .map(|r| {
            (0..size)
                .map(|c| {
                    if r == c {
                        Laurent1::one()
                    } else {
                        Laurent1::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Reduced Burau matrix of a single letter on `n` strands, in `t`.
fn burau_letter(n: usize, letter: i32) -> Matrix {
    let size = n - 1;
    let mut m = identity(size);
    let i = letter.unsigned_abs() as usize - 1;
    let t = |e: i32, c: i64| Laurent1::monomial(c, e);
    if letter > 0 {
        m[i][i] = t(1, -1);
        if i > 0 {
            m[i - 1][i] = t(1, 1);
        }
        if i + 1 < size {
            m[i + 1][i] = t(0, 1);
        }
    } else {
        m[i][i] = t(-1, -1);
        if i > 0 {
            m[i - 1][i] = t(0, 1);
        }
        if i + 1 < size {
            m[i + 1][i] = t(-1, 1);
        }
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut acc = Laurent1::zero();
                    for k in 0..n {
                        if !a[r][k].is_zero() && !b[k][c].is_zero() {
                            acc += &(&a[r][k] * &b[k][c]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Division-free determinant: row-by-row Laplace expansion memoized on the
/// set of columns already used.
fn determinant(m: &Matrix) -> Laurent1 {
    let n = m.len();
    let mut dp: Vec<Laurent1> = vec![Laurent1::zero(); 1 << n];
    dp[0] = Laurent1::one();
    for mask in 0usize..(1 << n) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for (col, entry) in m[row].iter().enumerate() {
            if mask & (1 << col) != 0 || entry.is_zero() {
                continue;
            }
            let above = (mask >> col).count_ones();
            let term = &dp[mask] * entry;
            let next = mask | (1 << col);
            if above % 2 == 1 {
                dp[next] -= &term;
            } else {
                dp[next] += &term;
            }
        }
    }
    dp[(1 << n) - 1].clone()
}

/// Alexander polynomial of a knot closure from `det(I - ψ(β)) (1-t)/(1-tⁿ)`,
/// symmetrized and normalized to `Δ(1) = 1`, returned in `s = t^{1/2}`.
pub fn burau_alexander(w: &BraidWord) -> Result<Laurent1> {
    if w.closure_components() != 1 {
        return Err(Error::NotAKnot);
    }
    let n = w.strands();
    if n == 1 {
        return Ok(Laurent1::one());
    }
    let size = n - 1;
    let mut psi = identity(size);
    for &l in w.letters() {
        psi = mat_mul(&psi, &burau_letter(n, l));
    }
    let shifted: Matrix = (0..size)
        .map(|r| {
            (0..size)
                .map(|c| {
                    let mut e = -&psi[r][c];
                    if r == c {
                        e += &Laurent1::one();
                    }
                    e
                })
                .collect()
        })
        .collect();
    let det = determinant(&shifted);
    let numer = &det * &Laurent1::from_terms([(0, 1), (1, -1)]);
    let denom = Laurent1::from_terms([(0, 1), (n as i32, -1)]);
    let delta = numer.div_exact(&denom).ok_or(Error::InexactDivision)?;
    let (lo, hi) = match (delta.min_degree(), delta.max_degree()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::InexactDivision),
    };
    // In s the shift by -(lo + hi) is always an integer.
    let mut sym = delta.scale_exponents(2).shift(-(lo + hi));
    if sym.sum_coefficients().is_negative() {
        sym = -&sym;
    }
    Ok(sym)
}
