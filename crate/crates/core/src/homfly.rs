//! Memoized skein-tree evaluation of the HOMFLY polynomial of a closed braid.
//!
//! Convention: `v^{-1} P_+ - v P_- = z P_0`, `P(unknot) = 1`.
//!
//! For a word `w` the engine
//!
//! 1. cyclically free-reduces `w`;
//! 2. multiplies split blocks together with `δ^{blocks-1}`, `δ = (v^{-1}-v)/z`;
//! 3. removes a nugatory crossing (a generator used exactly once);
//! 4. returns `δ^{n-1}` for the empty word on `n` strands;
//! 5. switches and smooths the first negative letter of the canonical
//!    rotation: `P_- = v^{-2} P_+ - v^{-1} z P_0`;
//! 6. on a positive word, finds a leading square `σ_j² u` in the rewrite orbit
//!    and uses `P_+ = v² P(u) + v z P(σ_j u)`.
//!
//! Both branches of steps 5 and 6 are strictly smaller in
//! (negative-letter count, length), so the recursion terminates.

use alloc::collections::BTreeMap;
use alloc::format;
use core::cell::RefCell;
use core::sync::atomic::{AtomicUsize, Ordering};

use crate::braid::{BraidWord, CanonicalKey};
use crate::error::{Error, Result};
use crate::link::{remove_nugatory_step, split_factors};
use crate::poly::{Laurent1, LaurentPoly2};
use crate::rewrite::{find_positive_square, RewriteOutcome, DEFAULT_NODE_CAP};

/// Get-or-insert store for finished polynomials, keyed by canonical key.
///
/// Implementations shared between threads must never expose a partially
/// written value; duplicate computation of one key is allowed.
pub trait PolyCache {
    fn get(&self, key: &CanonicalKey) -> Option<LaurentPoly2>;
    fn insert(&self, key: CanonicalKey, value: LaurentPoly2);
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<C: PolyCache + ?Sized> PolyCache for &C {
    fn get(&self, key: &CanonicalKey) -> Option<LaurentPoly2> {
        (**self).get(key)
    }
    fn insert(&self, key: CanonicalKey, value: LaurentPoly2) {
        (**self).insert(key, value)
    }
    fn len(&self) -> usize {
        (**self).len()
    }
}

/// Disables memoization.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoCache;

impl PolyCache for NoCache {
    fn get(&self, _: &CanonicalKey) -> Option<LaurentPoly2> {
        None
    }
    fn insert(&self, _: CanonicalKey, _: LaurentPoly2) {}
    fn len(&self) -> usize {
        0
    }
}

/// Single-threaded memo table.
#[derive(Debug, Default)]
pub struct LocalCache {
    map: RefCell<BTreeMap<CanonicalKey, LaurentPoly2>>,
}

impl LocalCache {
    pub fn new() -> Self {
        Self::default()
    }
}

impl PolyCache for LocalCache {
    fn get(&self, key: &CanonicalKey) -> Option<LaurentPoly2> {
        self.map.borrow().get(key).cloned()
    }
    fn insert(&self, key: CanonicalKey, value: LaurentPoly2) {
        self.map.borrow_mut().entry(key).or_insert(value);
    }
    fn len(&self) -> usize {
        self.map.borrow().len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineLimits {
    pub max_strands: usize,
    pub max_letters: usize,
    pub max_memo: usize,
    /// Node cap for each rewrite-orbit search.
    pub node_cap: usize,
}

impl Default for EngineLimits {
    fn default() -> Self {
        Self {
            max_strands: 16,
            max_letters: 64,
            max_memo: 10_000_000,
            node_cap: DEFAULT_NODE_CAP,
        }
    }
}

/// `((v^{-1} - v)/z)^{n-1}`, the HOMFLY value of the `n`-component unlink.
pub fn unlink_value(n: usize) -> LaurentPoly2 {
    assert!(n >= 1, "unlink needs at least one component");
    delta().pow(n as u32 - 1)
}

/// `(v^{-1} - v) / z`
pub fn delta() -> LaurentPoly2 {
    LaurentPoly2::from_terms([(-1, -1, 1), (1, -1, -1)])
}

/// Crossing triple at one letter of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinTriple {
    pub plus: BraidWord,
    pub minus: BraidWord,
    pub zero: BraidWord,
    pub position: usize,
    /// `(#K(plus) - #K(zero) + 1) / 2`: 1 when the two strands at the
    /// crossing belong to different components of `plus`.
    pub delta: i64,
}

pub fn skein_triple(w: &BraidWord, position: usize) -> Result<SkeinTriple> {
    let letters = w.letters();
    let Some(&letter) = letters.get(position) else {
        return Err(Error::PositionOutOfRange {
            position,
            len: letters.len(),
        });
    };
    let mut plus = letters.to_vec();
    plus[position] = letter.abs();
    let mut minus = letters.to_vec();
    minus[position] = -letter.abs();
    let mut zero = letters.to_vec();
    zero.remove(position);
    let plus = BraidWord::new(w.strands(), plus)?;
    let minus = BraidWord::new(w.strands(), minus)?;
    let zero = BraidWord::new(w.strands(), zero)?;
    let delta = (plus.closure_components() as i64 - zero.closure_components() as i64 + 1) / 2;
    Ok(SkeinTriple {
        plus,
        minus,
        zero,
        position,
        delta,
    })
}

/// Skein-tree HOMFLY evaluator over a [`PolyCache`].
pub struct HomflyEngine<C> {
    cache: C,
    limits: EngineLimits,
    expansions: AtomicUsize,
    cache_hits: AtomicUsize,
}

impl Default for HomflyEngine<LocalCache> {
    fn default() -> Self {
        Self::new(LocalCache::new())
    }
}

impl<C: PolyCache> HomflyEngine<C> {
    pub fn new(cache: C) -> Self {
        Self::with_limits(cache, EngineLimits::default())
    }

    pub fn with_limits(cache: C, limits: EngineLimits) -> Self {
        Self {
            cache,
            limits,
            expansions: AtomicUsize::new(0),
            cache_hits: AtomicUsize::new(0),
        }
    }

    pub fn limits(&self) -> &EngineLimits {
        &self.limits
    }

    pub fn cache(&self) -> &C {
        &self.cache
    }

    /// Skein expansions performed (cache misses that did real work).
    pub fn expansions(&self) -> usize {
        self.expansions.load(Ordering::Relaxed)
    }

    pub fn cache_hits(&self) -> usize {
        self.cache_hits.load(Ordering::Relaxed)
    }

    pub fn homfly(&self, w: &BraidWord) -> Result<LaurentPoly2> {
        if w.strands() > self.limits.max_strands {
            return Err(Error::Resource(format!(
                "{} strands exceeds limit {}",
                w.strands(),
                self.limits.max_strands
            )));
        }
        if w.len() > self.limits.max_letters {
            return Err(Error::Resource(format!(
                "{} letters exceeds limit {}",
                w.len(),
                self.limits.max_letters
            )));
        }
        self.eval(w)
    }

    fn eval(&self, w: &BraidWord) -> Result<LaurentPoly2> {
        let w = w.cyclic_free_reduce();
        let key = w.canonical_key();
        if let Some(p) = self.cache.get(&key) {
            self.cache_hits.fetch_add(1, Ordering::Relaxed);
            return Ok(p);
        }
        let p = self.eval_uncached(&w)?;
        if self.cache.len() >= self.limits.max_memo {
            return Err(Error::Resource(format!(
                "memo table reached {} entries",
                self.limits.max_memo
            )));
        }
        self.cache.insert(key, p.clone());
        Ok(p)
    }

    fn eval_uncached(&self, w: &BraidWord) -> Result<LaurentPoly2> {
        self.expansions.fetch_add(1, Ordering::Relaxed);
        let n = w.strands();
        if n >= 2 && w.occurrences().contains(&0) {
            let factors = split_factors(w);
            let mut acc = delta().pow(factors.len() as u32 - 1);
            for f in &factors {
                acc = &acc * &self.eval(f)?;
            }
            return Ok(acc);
        }
        if let Some(r) = remove_nugatory_step(w) {
            return self.eval(&r);
        }
        if w.is_empty() {
            return Ok(unlink_value(n));
        }
        if !w.is_positive() {
            let c = w.canonical_rotation();
            let pos = c
                .letters()
                .iter()
                .position(|&l| l < 0)
                .expect("word has a negative letter");
            let t = skein_triple(&c, pos)?;
            let plus = self.eval(&t.plus)?;
            let zero = self.eval(&t.zero)?;
            return Ok(plus.shift(-2, 0) - zero.shift(-1, 1));
        }
        match find_positive_square(w, self.limits.node_cap)? {
            RewriteOutcome::SquareFound { word, .. } => {
                let l = word.letters();
                let minus = BraidWord::new(n, l[2..].to_vec())?;
                let zero = BraidWord::new(n, l[1..].to_vec())?;
                let pm = self.eval(&minus)?;
                let p0 = self.eval(&zero)?;
                Ok(pm.shift(2, 0) + p0.shift(1, 1))
            }
            RewriteOutcome::LowOccurrence { word, .. } => self.eval(&word),
            RewriteOutcome::Exhausted { visited } => Err(Error::SearchExhausted { visited }),
        }
    }

    /// Conway polynomial in `z`.
    pub fn conway(&self, w: &BraidWord) -> Result<Laurent1> {
        Ok(conway(&self.homfly(w)?))
    }

    /// Jones polynomial in `s = t^{1/2}`.
    pub fn jones(&self, w: &BraidWord) -> Result<Laurent1> {
        jones(&self.homfly(w)?, w.closure_components())
    }

    /// Symmetrized Alexander polynomial in `s = t^{1/2}`.
    pub fn alexander(&self, w: &BraidWord) -> Result<Laurent1> {
        Ok(alexander(&self.homfly(w)?))
    }
}

/// `∇(z) = P(1, z)`
pub fn conway(p: &LaurentPoly2) -> Laurent1 {
    p.at_v_one()
}

/// `V = P(t, t^{1/2} - t^{-1/2})`, returned in `s = t^{1/2}`.
///
/// For a knot every exponent must be even.
pub fn jones(p: &LaurentPoly2, components: usize) -> Result<Laurent1> {
    let v = p.substitute_v_power_z_difference(2);
    if components == 1 && !v.all_exponents_even() {
        return Err(Error::OddExponent("Jones specialization of a knot"));
    }
    Ok(v)
}

/// `Δ = ∇(t^{1/2} - t^{-1/2})`, returned in `s = t^{1/2}`.
pub fn alexander(p: &LaurentPoly2) -> Laurent1 {
    p.substitute_v_power_z_difference(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn trefoil_poly() -> LaurentPoly2 {
        LaurentPoly2::from_terms([(2, 0, 2), (4, 0, -1), (2, 2, 1)])
    }

    #[test]
    fn unlink_values() {
        assert_eq!(unlink_value(1), LaurentPoly2::one());
        assert_eq!(
            unlink_value(2),
            LaurentPoly2::from_terms([(-1, -1, 1), (1, -1, -1)])
        );
        assert_eq!(
            unlink_value(3),
            LaurentPoly2::from_terms([(-2, -2, 1), (0, -2, -2), (2, -2, 1)])
        );
    }

    #[test]
    fn small_values() {
        let e = HomflyEngine::default();
        assert_eq!(e.homfly(&w(1, &[])).unwrap(), LaurentPoly2::one());
        assert_eq!(
            e.homfly(&w(2, &[1, 1])).unwrap(),
            LaurentPoly2::from_terms([(1, 1, 1), (1, -1, 1), (3, -1, -1)])
        );
        assert_eq!(e.homfly(&w(2, &[1, 1, 1])).unwrap(), trefoil_poly());
        assert_eq!(
            e.homfly(&w(2, &[-1, -1, -1])).unwrap(),
            LaurentPoly2::from_terms([(-2, 0, 2), (-4, 0, -1), (-2, 2, 1)])
        );
    }

    #[test]
    fn skein_triples() {
        let t = skein_triple(&w(2, &[1, 1]), 0).unwrap();
        assert_eq!(
            (t.minus.clone(), t.zero.clone(), t.delta),
            (w(2, &[-1, 1]), w(2, &[1]), 1)
        );
        let t = skein_triple(&w(2, &[1, 1, 1]), 0).unwrap();
        assert_eq!(t.delta, 0);
        // Strands 1 and 2 of σ1²σ2² close up into different components.
        let t = skein_triple(&w(3, &[1, 1, 2, 2]), 0).unwrap();
        assert_eq!(t.delta, 1);
        assert_eq!(
            skein_triple(&w(2, &[1]), 3),
            Err(Error::PositionOutOfRange {
                position: 3,
                len: 1
            })
        );
    }

    #[test]
    fn specializations_of_trefoil() {
        let p = trefoil_poly();
        assert_eq!(conway(&p), Laurent1::from_terms([(0, 1), (2, 1)]));
        // t + t^3 - t^4 in s = t^{1/2}
        assert_eq!(
            jones(&p, 1).unwrap(),
            Laurent1::from_terms([(2, 1), (6, 1), (8, -1)])
        );
        assert_eq!(
            alexander(&p),
            Laurent1::from_terms([(2, 1), (0, -1), (-2, 1)])
        );
    }

    #[test]
    fn resource_limits() {
        let limits = EngineLimits {
            max_strands: 3,
            ..EngineLimits::default()
        };
        let e = HomflyEngine::with_limits(NoCache, limits);
        assert!(matches!(e.homfly(&w(4, &[1])), Err(Error::Resource(_))));
        let limits = EngineLimits {
            max_letters: 2,
            ..EngineLimits::default()
        };
        let e = HomflyEngine::with_limits(NoCache, limits);
        assert!(matches!(
            e.homfly(&w(2, &[1, 1, 1])),
            Err(Error::Resource(_))
        ));
        let limits = EngineLimits {
            max_memo: 1,
            ..EngineLimits::default()
        };
        let e = HomflyEngine::with_limits(LocalCache::new(), limits);
        assert!(matches!(
            e.homfly(&w(2, &[1, 1, 1])),
            Err(Error::Resource(_))
        ));
    }
}
