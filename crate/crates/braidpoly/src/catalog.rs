//! Word catalogs: exhaustive positive words up to rotation and the named
//! example families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use braidpoly_core::{BraidWord, CanonicalKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    AllPositiveWords,
    Torus2k,
    HopfSums,
    NamedExamples,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::AllPositiveWords,
        Family::Torus2k,
        Family::HopfSums,
        Family::NamedExamples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::AllPositiveWords => "all_positive_words",
            Family::Torus2k => "torus_2k",
            Family::HopfSums => "hopf_sums",
            Family::NamedExamples => "named_examples",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogSpec {
    pub max_strands: usize,
    pub max_length: usize,
    pub families: BTreeSet<Family>,
}

impl CatalogSpec {
    pub fn exhaustive(max_strands: usize, max_length: usize) -> Self {
        Self {
            max_strands,
            max_length,
            families: [Family::AllPositiveWords].into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub word: BraidWord,
    /// Example name, if the word came from a named family.
    pub name: Option<String>,
}

/// Positive words on exactly `strands` strands with length in `lengths`, one
/// per rotation class (the least rotation), in length-then-lexicographic
/// order.
pub fn positive_words(strands: usize, lengths: std::ops::RangeInclusive<usize>) -> Vec<BraidWord> {
    let mut out = Vec::new();
    let gens = strands.saturating_sub(1) as i32;
    for len in lengths {
        if len > 0 && gens == 0 {
            break;
        }
        let mut letters = vec![1i32; len];
        loop {
            if is_least_rotation(&letters) {
                out.push(BraidWord::new(strands, letters.clone()).expect("letters in range"));
            }
            // odometer, last position fastest
            let Some(pos) = letters.iter().rposition(|&l| l < gens) else {
                break;
            };
            letters[pos] += 1;
            letters[pos + 1..].iter_mut().for_each(|l| *l = 1);
        }
    }
    out
}

fn is_least_rotation(l: &[i32]) -> bool {
    (1..l.len()).all(|k| {
        let rotated = l[k..].iter().chain(&l[..k]);
        l.iter().cmp(rotated) != std::cmp::Ordering::Greater
    })
}

/// Every positive word with `1..=max_strands` strands and length
/// `0..=max_length`, deduplicated by canonical key.
pub fn enumerate_positive_words(max_strands: usize, max_length: usize) -> Vec<BraidWord> {
    (1..=max_strands)
        .flat_map(|n| positive_words(n, 0..=max_length))
        .collect()
}

pub fn torus_2(k: usize) -> BraidWord {
    BraidWord::new(2, vec![1; k]).expect("valid")
}

/// Connected sum of `k` Hopf links, `σ1²σ2²…σk²` on `k+1` strands.
pub fn hopf_sum(k: usize) -> BraidWord {
    let letters = (1..=k as i32).flat_map(|i| [i, i]).collect();
    BraidWord::new(k + 1, letters).expect("valid")
}

pub fn cable_t23() -> BraidWord {
    let mut letters = [2, 1, 3, 2].repeat(3);
    letters.extend([-1, -1, -1]);
    BraidWord::new(4, letters).expect("valid")
}

pub fn baker_kegel() -> BraidWord {
    let mut letters = [2, 1, 3, 2].repeat(3);
    letters.extend([-1, 2, 1, 1, 2]);
    BraidWord::new(4, letters).expect("valid")
}

/// The cable and Baker–Kegel braids, `T_2_k` for `k <= 12` and `H_k` for `k <= 6`.
pub fn named_examples() -> Vec<(String, BraidWord)> {
    let mut out = vec![
        ("cable_T23".to_string(), cable_t23()),
        ("baker_kegel".to_string(), baker_kegel()),
    ];
    out.extend((1..=12).map(|k| (format!("T_2_{k}"), torus_2(k))));
    out.extend((1..=6).map(|k| (format!("H_{k}"), hopf_sum(k))));
    out
}

pub fn named_example(name: &str) -> Option<BraidWord> {
    named_examples()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, w)| w)
}

/// Catalog of `spec`, deduplicated by canonical key and ordered by it. A
/// word reached both by enumeration and by name keeps the name.
pub fn catalog(spec: &CatalogSpec) -> Vec<CatalogEntry> {
    let mut map: BTreeMap<CanonicalKey, CatalogEntry> = BTreeMap::new();
    let mut add = |word: BraidWord, name: Option<String>| {
        let entry = map
            .entry(word.canonical_key())
            .or_insert(CatalogEntry { word, name: None });
        if entry.name.is_none() {
            entry.name = name;
        }
    };
    for family in &spec.families {
        match family {
            Family::AllPositiveWords => {
                enumerate_positive_words(spec.max_strands, spec.max_length)
                    .into_iter()
                    .for_each(|w| add(w, None));
            }
            Family::Torus2k => (1..=12).for_each(|k| add(torus_2(k), Some(format!("T_2_{k}")))),
            Family::HopfSums => (1..=6).for_each(|k| add(hopf_sum(k), Some(format!("H_{k}")))),
            Family::NamedExamples => named_examples()
                .into_iter()
                .for_each(|(n, w)| add(w, Some(n))),
        }
    }
    map.into_values().collect()
}
