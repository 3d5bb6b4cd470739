//! Diagram-level normalization of closed positive braids: split blocks,
//! nugatory crossings, connected-sum factorization and the link profile.

use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::rewrite::{low_occurrence_index, orbit_search, OrbitHit, DEFAULT_NODE_CAP};

/// Invariant bundle of a closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkProfile {
    pub strands: usize,
    /// `#K`
    pub components: i64,
    /// Maximal Euler characteristic `χ`.
    pub euler: i64,
    /// Split factor count `s`.
    pub split: i64,
    /// Prime factor count `p` (unknots contribute 0).
    pub prime: i64,
    /// `m = -χ + s`
    pub m: i64,
    /// `d = (-χ + #K) / 2`
    pub d: i64,
    /// `(1 - χ) / 2`, knots only.
    pub genus: Option<i64>,
}

impl LinkProfile {
    /// Assembles a profile from its primary invariants, deriving `m`, `d`
    /// and the genus.
    pub fn from_invariants(
        strands: usize,
        components: i64,
        euler: i64,
        split: i64,
        prime: i64,
    ) -> Result<Self> {
        if (components - euler).rem_euclid(2) != 0 {
            return Err(Error::PreconditionViolated("-χ + #K must be even"));
        }
        Ok(Self {
            strands,
            components,
            euler,
            split,
            prime,
            m: split - euler,
            d: (components - euler) / 2,
            genus: (components == 1).then_some((1 - euler) / 2),
        })
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }
}

/// Split / connected-sum factorization of a closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    SplitUnion(Vec<DecompositionTree>),
    ConnectedSum(Vec<DecompositionTree>),
    PrimeLeaf(BraidWord),
    UnknotLeaf,
}

impl DecompositionTree {
    /// Number of split factors: children of a root split union, else 1.
    pub fn split_count(&self) -> usize {
        match self {
            DecompositionTree::SplitUnion(children) => children.len(),
            _ => 1,
        }
    }

    pub fn prime_count(&self) -> usize {
        match self {
            DecompositionTree::SplitUnion(c) | DecompositionTree::ConnectedSum(c) => {
                c.iter().map(Self::prime_count).sum()
            }
            DecompositionTree::PrimeLeaf(_) => 1,
            DecompositionTree::UnknotLeaf => 0,
        }
    }

    /// Prime leaves in left-to-right order.
    pub fn prime_words(&self) -> Vec<&BraidWord> {
        let mut out = Vec::new();
        self.collect_primes(&mut out);
        out
    }

    fn collect_primes<'a>(&'a self, out: &mut Vec<&'a BraidWord>) {
        match self {
            DecompositionTree::SplitUnion(c) | DecompositionTree::ConnectedSum(c) => {
                c.iter().for_each(|t| t.collect_primes(out))
            }
            DecompositionTree::PrimeLeaf(w) => out.push(w),
            DecompositionTree::UnknotLeaf => {}
        }
    }

    /// True iff every leaf is an unknot.
    pub fn is_unlink(&self) -> bool {
        self.prime_count() == 0
    }
}

/// Maximal strand blocks not joined by any letter; indices renumbered from 1.
pub fn split_factors(w: &BraidWord) -> Vec<BraidWord> {
    let counts = w.occurrences();
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 1;
    for strand in 1..=w.strands() {
        let joined_to_next = strand < w.strands() && counts[strand - 1] > 0;
        if !joined_to_next {
            blocks.push((start, strand));
            start = strand + 1;
        }
    }
    blocks
        .into_iter()
        .map(|(lo, hi)| {
            let letters = w
                .letters()
                .iter()
                .filter(|&&l| {
                    let i = l.unsigned_abs() as usize;
                    i >= lo && i < hi
                })
                .map(|&l| l - l.signum() * (lo as i32 - 1))
                .collect();
            BraidWord::from_raw(hi - lo + 1, letters)
        })
        .collect()
}

/// One nugatory-crossing removal: deletes the only occurrence of the smallest
/// generator `σ_i` that occurs exactly once, merging its two strands.
///
/// Away from that letter the word only mixes generators below and above `i`,
/// which commute; they are regrouped low block first before the high block is
/// shifted down, since after merging they would no longer commute.
pub fn remove_nugatory_step(w: &BraidWord) -> Option<BraidWord> {
    let i = w.occurrences().iter().position(|&c| c == 1)? as i32 + 1;
    let at = w.letters().iter().position(|&l| l.abs() == i)?;
    let rest = w.rotated(at + 1);
    let rest = &rest.letters()[..w.len() - 1];
    let low = rest.iter().copied().filter(|&l| l.abs() < i);
    let high = rest
        .iter()
        .filter(|&&l| l.abs() > i)
        .map(|&l| l - l.signum());
    Some(BraidWord::from_raw(
        w.strands() - 1,
        low.chain(high).collect(),
    ))
}

/// Removes nugatory crossings until every used generator occurs at least twice.
pub fn remove_nugatory(w: &BraidWord) -> BraidWord {
    let mut cur = w.clone();
    while let Some(next) = remove_nugatory_step(&cur) {
        cur = next;
    }
    cur
}

/// `χ = n - e(β)` for a positive word.
pub fn euler_characteristic(w: &BraidWord) -> Result<i64> {
    if !w.is_positive() {
        return Err(Error::NonPositiveWord);
    }
    Ok(w.strands() as i64 - w.exponent_sum())
}

/// Factorization across strand `j` in some rotation: all letters of the low
/// block are `< j`, all letters of the high block are `>= j`.
///
/// Scan order is rotation index, then `j` ascending.
pub fn interval_factorization(w: &BraidWord) -> Option<(BraidWord, BraidWord)> {
    let n = w.strands();
    let len = w.len();
    for r in 0..len {
        let x = w.rotated(r);
        let l = x.letters();
        for j in 2..n {
            let j = j as i32;
            let k = l.iter().filter(|&&a| a < j).count();
            if k == 0 || k == len {
                continue;
            }
            if l[..k].iter().all(|&a| a < j) && l[k..].iter().all(|&a| a >= j) {
                let low = BraidWord::from_raw(j as usize, l[..k].to_vec());
                let high = BraidWord::from_raw(
                    n - j as usize + 1,
                    l[k..].iter().map(|&a| a - (j - 1)).collect(),
                );
                return Some((low, high));
            }
        }
    }
    None
}

enum OrbitVerdict {
    Composite(BraidWord, BraidWord),
    Reducible(BraidWord),
}

/// Connected-sum factorization of a positive, non-split, irreducible word.
///
/// Tries [`interval_factorization`] on every member of the rewrite orbit in
/// BFS order. If the orbit contains a reducible word, the search restarts on
/// that word with its nugatory crossings removed.
pub fn composite_split(w: &BraidWord, node_cap: usize) -> Result<Option<(BraidWord, BraidWord)>> {
    if !w.is_positive() {
        return Err(Error::PreconditionViolated("word must be positive"));
    }
    if w.is_empty() {
        return Err(Error::PreconditionViolated("word must be nonempty"));
    }
    let counts = w.occurrences();
    if counts.contains(&0) {
        return Err(Error::PreconditionViolated("word is split"));
    }
    if counts.iter().any(|&c| c < 2) {
        return Err(Error::PreconditionViolated("word is reducible"));
    }
    let (hit, trace) = orbit_search(w, node_cap, |x| {
        if low_occurrence_index(x).is_some() {
            return Some(OrbitVerdict::Reducible(x.clone()));
        }
        interval_factorization(x).map(|(a, b)| OrbitVerdict::Composite(a, b))
    })?;
    match hit {
        OrbitHit::Found {
            value: OrbitVerdict::Composite(a, b),
            ..
        } => Ok(Some((a, b))),
        OrbitHit::Found {
            value: OrbitVerdict::Reducible(x),
            ..
        } => {
            let reduced = remove_nugatory(&x);
            if reduced.is_empty() {
                Ok(None)
            } else {
                composite_split(&reduced, node_cap)
            }
        }
        OrbitHit::Complete => Ok(None),
        OrbitHit::CapReached => Err(Error::SearchExhausted {
            visited: trace.visited(),
        }),
    }
}

/// Full split / connected-sum decomposition of a positive word.
pub fn decompose(w: &BraidWord, node_cap: usize) -> Result<DecompositionTree> {
    if !w.is_positive() {
        return Err(Error::NonPositiveWord);
    }
    let factors = split_factors(w);
    if factors.len() > 1 {
        let children = factors
            .iter()
            .map(|f| decompose_nonsplit(f, node_cap))
            .collect::<Result<Vec<_>>>()?;
        return Ok(DecompositionTree::SplitUnion(children));
    }
    decompose_nonsplit(w, node_cap)
}

fn decompose_nonsplit(w: &BraidWord, node_cap: usize) -> Result<DecompositionTree> {
    let r = remove_nugatory(w);
    if r.is_empty() {
        // A non-split word reduces to the empty word only on one strand.
        debug_assert_eq!(r.strands(), 1);
        return Ok(DecompositionTree::UnknotLeaf);
    }
    match composite_split(&r, node_cap)? {
        None => Ok(DecompositionTree::PrimeLeaf(r)),
        Some((a, b)) => {
            let mut children = Vec::new();
            for part in [a, b] {
                match decompose_nonsplit(&part, node_cap)? {
                    DecompositionTree::ConnectedSum(inner) => children.extend(inner),
                    DecompositionTree::UnknotLeaf => {}
                    leaf => children.push(leaf),
                }
            }
            Ok(match children.len() {
                0 => DecompositionTree::UnknotLeaf,
                1 => children.pop().expect("one child"),
                _ => DecompositionTree::ConnectedSum(children),
            })
        }
    }
}

/// `#K, χ, s, p, m, d` (and genus for knots) of a positive word's closure.
pub fn link_profile(w: &BraidWord, node_cap: usize) -> Result<LinkProfile> {
    let euler = euler_characteristic(w)?;
    let tree = decompose(w, node_cap)?;
    LinkProfile::from_invariants(
        w.strands(),
        w.closure_components() as i64,
        euler,
        tree.split_count() as i64,
        tree.prime_count() as i64,
    )
}

/// [`link_profile`] with the default node cap.
pub fn profile(w: &BraidWord) -> Result<LinkProfile> {
    link_profile(w, DEFAULT_NODE_CAP)
}
