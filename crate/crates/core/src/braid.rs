//! Braid words, their closures' permutation data and canonical keys.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A braid on `strands` strands as a sequence of signed generator indices.
///
/// Letter `k` stands for `σ_{|k|}^{sign(k)}`; every letter satisfies
/// `1 <= |k| <= strands - 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        for &l in &letters {
            let idx = (l as i64).abs();
            if l == 0 || idx > strands as i64 - 1 {
                return Err(Error::IndexOutOfRange {
                    index: l as i64,
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Identity braid on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        Self::new(strands, Vec::new()).expect("identity word is valid")
    }

    pub(crate) fn from_raw(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(Self::new(strands, letters.clone()).is_ok());
        Self { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn negative_count(&self) -> usize {
        self.letters.iter().filter(|&&l| l < 0).count()
    }

    /// Occurrence count of each generator (either sign); slot `i - 1` holds
    /// the count of `σ_i`.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut counts = alloc::vec![0; self.strands - 1];
        for &l in &self.letters {
            counts[l.unsigned_abs() as usize - 1] += 1;
        }
        counts
    }

    /// Sends each starting strand position to its position at the bottom.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut end = alloc::vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            end[strand] = pos;
        }
        end
    }

    /// Number of components of the closure: cycles of [`Self::permutation`].
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = alloc::vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    /// Cyclic rotation moving letter `k` to the front.
    pub fn rotated(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Sign-reversed word; its closure is the mirror image.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| -l).collect(),
        }
    }

    /// Deletes adjacent inverse pairs, including across the cyclic seam,
    /// until none remain.
    pub fn cyclic_free_reduce(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        // The stack is freely reduced; only the two ends can still cancel.
        let (mut lo, mut hi) = (0, stack.len());
        while hi - lo >= 2 && stack[lo] == -stack[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        Self {
            strands: self.strands,
            letters: stack[lo..hi].to_vec(),
        }
    }

    /// Index of the lexicographically least rotation (first one on ties).
    pub fn least_rotation_index(&self) -> usize {
        let n = self.letters.len();
        let mut best = 0;
        for k in 1..n {
            let ord = (0..n)
                .map(|i| self.letters[(k + i) % n].cmp(&self.letters[(best + i) % n]))
                .find(|o| o.is_ne());
            if ord == Some(core::cmp::Ordering::Less) {
                best = k;
            }
        }
        best
    }

    /// Strand count plus least rotation; equal keys imply equal closures.
    pub fn canonical_key(&self) -> CanonicalKey {
        CanonicalKey {
            strands: self.strands,
            letters: self.rotated(self.least_rotation_index()).letters,
        }
    }

    /// The word rotated to its canonical representative.
    pub fn canonical_rotation(&self) -> Self {
        self.rotated(self.least_rotation_index())
    }

    /// Same letters on `strands + 1` strands followed by `σ_n^{sign}`.
    pub fn stabilized(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        let n = self.strands as i32;
        letters.push(if positive { n } else { -n });
        Self {
            strands: self.strands + 1,
            letters,
        }
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord({self})")
    }
}

/// Canonical emitter: `<n>: i1 i2 …`.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Parses `<n> ":" token*`, where a token is a nonzero signed integer or
/// `s<i>` optionally followed by `^<e>`. Powers are unrolled.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (head, body) = text
            .split_once(':')
            .ok_or_else(|| Error::Syntax("expected `<strands>:` prefix".to_string()))?;
        let strands: i64 = head
            .trim()
            .parse()
            .map_err(|_| Error::Syntax(alloc::format!("bad strand count `{}`", head.trim())))?;
        if strands < 1 {
            return Err(Error::NoStrands);
        }
        let strands = strands as usize;
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            let (gen, power) = parse_token(tok)?;
            let reps = power.unsigned_abs();
            let letter = if power < 0 { -gen } else { gen };
            letters.extend(core::iter::repeat_n(letter, reps as usize));
        }
        BraidWord::new(strands, letters)
    }
}

fn parse_token(tok: &str) -> Result<(i32, i64)> {
    let bad = || Error::Syntax(alloc::format!("bad token `{tok}`"));
    if let Some(rest) = tok.strip_prefix('s') {
        let (idx, exp) = match rest.split_once('^') {
            Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad())?),
            None => (rest, 1),
        };
        let idx: i32 = idx.parse().map_err(|_| bad())?;
        if idx <= 0 {
            return Err(bad());
        }
        Ok((idx, exp))
    } else {
        let v: i32 = tok.parse().map_err(|_| bad())?;
        if v == 0 {
            return Err(bad());
        }
        Ok((v.abs(), v.signum() as i64))
    }
}

/// Memoization key: strand count and the least cyclic rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    strands: usize,
    letters: Vec<i32>,
}

impl CanonicalKey {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn to_word(&self) -> BraidWord {
        BraidWord::from_raw(self.strands, self.letters.clone())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        let mut sep = "";
        for l in &self.letters {
            write!(f, "{sep}{l}")?;
            sep = ",";
        }
        Ok(())
    }
}

impl From<&CanonicalKey> for String {
    fn from(k: &CanonicalKey) -> String {
        k.to_string()
    }
}
