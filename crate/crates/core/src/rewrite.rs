//! Rewrite moves on positive words and the breadth-first orbit search that
//! exposes a leading square `σ_j²`.
//!
//! Moves are cyclic rotation, commutation of far generators and the braid
//! relation `σ_i σ_j σ_i = σ_j σ_i σ_j` for `|i - j| = 1`. Commutation and
//! braid moves also apply across the cyclic seam. Visited words are
//! deduplicated by [`CanonicalKey`], so the search runs over rotation
//! classes.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::braid::{BraidWord, CanonicalKey};
use crate::error::{Error, Result};

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewriteOutcome {
    /// An orbit member rotated so that `letters[0] == letters[1] == generator`.
    SquareFound { word: BraidWord, generator: usize },
    /// An orbit member in which `index` occurs at most once.
    LowOccurrence { word: BraidWord, index: usize },
    /// No verdict within the searched part of the orbit.
    Exhausted { visited: usize },
}

/// All words one move away from `w`, in generation order (rotation, then
/// commutations left to right, then braid relations left to right), without
/// duplicates.
pub fn rewrite_neighbors(w: &BraidWord) -> Result<Vec<BraidWord>> {
    if !w.is_positive() {
        return Err(Error::NonPositiveWord);
    }
    let mut out: Vec<BraidWord> = Vec::new();
    let mut push = |x: BraidWord| {
        if !out.contains(&x) {
            out.push(x);
        }
    };
    let letters = w.letters();
    let len = letters.len();
    if len == 0 {
        return Ok(alloc::vec![w.clone()]);
    }
    push(w.rotated(1));
    if len >= 2 {
        for i in 0..len {
            let j = (i + 1) % len;
            if (letters[i] - letters[j]).abs() >= 2 {
                let mut l = letters.to_vec();
                l.swap(i, j);
                push(BraidWord::from_raw(w.strands(), l));
            }
        }
    }
    if len >= 3 {
        for i in 0..len {
            let (j, k) = ((i + 1) % len, (i + 2) % len);
            let (a, b, c) = (letters[i], letters[j], letters[k]);
            if a == c && (a - b).abs() == 1 {
                let mut l = letters.to_vec();
                l[i] = b;
                l[j] = a;
                l[k] = b;
                push(BraidWord::from_raw(w.strands(), l));
            }
        }
    }
    Ok(out)
}

/// First cyclic position `i` with `letters[i] == letters[i+1]`.
fn square_position(w: &BraidWord) -> Option<usize> {
    let l = w.letters();
    if l.len() < 2 {
        return None;
    }
    (0..l.len()).find(|&i| l[i] == l[(i + 1) % l.len()])
}

/// Smallest generator index occurring at most once.
pub(crate) fn low_occurrence_index(w: &BraidWord) -> Option<usize> {
    w.occurrences().iter().position(|&c| c <= 1).map(|i| i + 1)
}

/// Breadth-first traversal of a rewrite orbit with parent links.
pub struct OrbitTrace {
    nodes: Vec<(BraidWord, Option<usize>)>,
}

impl OrbitTrace {
    pub fn visited(&self) -> usize {
        self.nodes.len()
    }

    pub fn word(&self, idx: usize) -> &BraidWord {
        &self.nodes[idx].0
    }

    /// Words from the start of the search to node `idx`, inclusive.
    pub fn path_to(&self, mut idx: usize) -> Vec<BraidWord> {
        let mut path = alloc::vec![self.nodes[idx].0.clone()];
        while let Some(parent) = self.nodes[idx].1 {
            path.push(self.nodes[parent].0.clone());
            idx = parent;
        }
        path.reverse();
        path
    }
}

/// Outcome of [`orbit_search`]: the first node the visitor accepted, or the
/// whole traversal if none.
pub enum OrbitHit<T> {
    Found { value: T, node: usize },
    Complete,
    CapReached,
}

/// Visits the rotation-deduplicated rewrite orbit of `start` in BFS order
/// (at most `node_cap` words), stopping at the first word for which `visit`
/// returns `Some`.
pub fn orbit_search<T>(
    start: &BraidWord,
    node_cap: usize,
    mut visit: impl FnMut(&BraidWord) -> Option<T>,
) -> Result<(OrbitHit<T>, OrbitTrace)> {
    if !start.is_positive() {
        return Err(Error::NonPositiveWord);
    }
    let mut trace = OrbitTrace { nodes: Vec::new() };
    let mut seen: BTreeSet<CanonicalKey> = BTreeSet::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    seen.insert(start.canonical_key());
    trace.nodes.push((start.clone(), None));
    queue.push_back(0);
    while let Some(idx) = queue.pop_front() {
        if let Some(value) = visit(&trace.nodes[idx].0) {
            return Ok((OrbitHit::Found { value, node: idx }, trace));
        }
        for nb in rewrite_neighbors(&trace.nodes[idx].0)? {
            if trace.nodes.len() >= node_cap {
                break;
            }
            if seen.insert(nb.canonical_key()) {
                trace.nodes.push((nb, Some(idx)));
                queue.push_back(trace.nodes.len() - 1);
            }
        }
        if queue.is_empty() && trace.nodes.len() >= node_cap {
            return Ok((OrbitHit::CapReached, trace));
        }
    }
    if trace.nodes.len() >= node_cap {
        return Ok((OrbitHit::CapReached, trace));
    }
    Ok((OrbitHit::Complete, trace))
}

/// Searches the rewrite orbit of `w` for a word with a cyclically adjacent
/// equal pair. See [`RewriteOutcome`] for the verdicts.
pub fn find_positive_square(w: &BraidWord, node_cap: usize) -> Result<RewriteOutcome> {
    find_positive_square_traced(w, node_cap).map(|(o, _)| o)
}

/// As [`find_positive_square`], also returning the path of words from `w` to
/// the square-bearing word (before its final rotation).
pub fn find_positive_square_traced(
    w: &BraidWord,
    node_cap: usize,
) -> Result<(RewriteOutcome, Vec<BraidWord>)> {
    let mut first_low: Option<(BraidWord, usize)> = None;
    let (hit, trace) = orbit_search(w, node_cap, |x| {
        if first_low.is_none() {
            if let Some(i) = low_occurrence_index(x) {
                first_low = Some((x.clone(), i));
            }
        }
        square_position(x)
    })?;
    Ok(match hit {
        OrbitHit::Found { value: pos, node } => {
            let word = trace.word(node).rotated(pos);
            let generator = word.letters()[0] as usize;
            (
                RewriteOutcome::SquareFound { word, generator },
                trace.path_to(node),
            )
        }
        OrbitHit::Complete | OrbitHit::CapReached => match first_low {
            Some((word, index)) => (RewriteOutcome::LowOccurrence { word, index }, Vec::new()),
            None => (
                RewriteOutcome::Exhausted {
                    visited: trace.visited(),
                },
                Vec::new(),
            ),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    /// Closure of `start` under the moves, without rotation dedup: every
    /// rotation and every single-move image is added until fixpoint.
    fn brute_orbit(start: &BraidWord) -> BTreeSet<BraidWord> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![start.clone()];
        while let Some(x) = stack.pop() {
            if !seen.insert(x.clone()) {
                continue;
            }
            let l = x.letters().to_vec();
            let n = l.len();
            let mut next = vec![];
            for k in 0..n {
                next.push(x.rotated(k));
            }
            for i in 0..n.saturating_sub(1) {
                if (l[i] - l[i + 1]).abs() >= 2 {
                    let mut m = l.clone();
                    m.swap(i, i + 1);
                    next.push(BraidWord::new(x.strands(), m).unwrap());
                }
            }
            for i in 0..n.saturating_sub(2) {
                if l[i] == l[i + 2] && (l[i] - l[i + 1]).abs() == 1 {
                    let mut m = l.clone();
                    m[i] = l[i + 1];
                    m[i + 1] = l[i];
                    m[i + 2] = l[i + 1];
                    next.push(BraidWord::new(x.strands(), m).unwrap());
                }
            }
            stack.extend(next);
        }
        seen
    }

    #[test]
    fn neighbors_braid_relation() {
        let nb = rewrite_neighbors(&w(3, &[1, 2, 1])).unwrap();
        assert!(nb.contains(&w(3, &[2, 1, 2])));
    }

    #[test]
    fn neighbors_commutation() {
        let nb = rewrite_neighbors(&w(4, &[1, 3, 2])).unwrap();
        assert!(nb.contains(&w(4, &[3, 1, 2])));
    }

    #[test]
    fn neighbors_of_power_are_rotations() {
        let nb = rewrite_neighbors(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(nb, vec![w(2, &[1, 1, 1])]);
    }

    #[test]
    fn neighbors_reject_negative_words() {
        assert_eq!(rewrite_neighbors(&w(2, &[-1])), Err(Error::NonPositiveWord));
    }

    #[test]
    fn square_already_leading() {
        let out = find_positive_square(&w(3, &[1, 1, 2, 2]), DEFAULT_NODE_CAP).unwrap();
        assert_eq!(
            out,
            RewriteOutcome::SquareFound {
                word: w(3, &[1, 1, 2, 2]),
                generator: 1
            }
        );
    }

    #[test]
    fn square_after_braid_move() {
        let start = w(3, &[1, 2, 1, 2]);
        let out = find_positive_square(&start, DEFAULT_NODE_CAP).unwrap();
        let expected = w(3, &[2, 2, 2, 1]);
        assert_eq!(
            out,
            RewriteOutcome::SquareFound {
                word: expected.clone(),
                generator: 2
            }
        );
        assert!(brute_orbit(&start).contains(&expected));
    }

    #[test]
    fn square_in_full_twist() {
        let start = w(3, &[1, 2, 1, 2, 1, 2]);
        let orbit = brute_orbit(&start);
        assert!(orbit.iter().any(|x| square_position(x).is_some()));
        match find_positive_square(&start, DEFAULT_NODE_CAP).unwrap() {
            RewriteOutcome::SquareFound { word, generator } => {
                assert_eq!(word.letters()[0], generator as i32);
                assert_eq!(word.letters()[1], generator as i32);
                assert!(orbit.contains(&word));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn traced_path_replays_moves() {
        let start = w(4, &[1, 2, 3, 1, 2, 3, 1, 2, 3]);
        let (out, path) = find_positive_square_traced(&start, DEFAULT_NODE_CAP).unwrap();
        assert!(matches!(out, RewriteOutcome::SquareFound { .. }));
        assert_eq!(path[0], start);
        for pair in path.windows(2) {
            let nb = rewrite_neighbors(&pair[0]).unwrap();
            assert!(nb
                .iter()
                .any(|x| x.canonical_key() == pair[1].canonical_key()));
        }
    }

    #[test]
    fn low_occurrence_reported_when_no_square() {
        // σ1σ2 has no square anywhere in its orbit.
        let out = find_positive_square(&w(3, &[1, 2]), DEFAULT_NODE_CAP).unwrap();
        assert!(matches!(
            out,
            RewriteOutcome::LowOccurrence { index: 1, .. }
        ));
    }

    #[test]
    fn exhausted_when_cap_hit() {
        let out = find_positive_square(&w(4, &[1, 2, 3, 2, 1, 3, 2]), 1).unwrap();
        assert_eq!(out, RewriteOutcome::Exhausted { visited: 1 });
    }
}
