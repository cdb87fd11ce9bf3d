use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::DefinitionVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimilarityMeasure {
    Cosine,
    Dice,
    Euclidean,
    Manhattan,
    Levenshtein,
    Jaccard,
}

impl SimilarityMeasure {
    pub const ALL: [SimilarityMeasure; 6] = [
        SimilarityMeasure::Cosine,
        SimilarityMeasure::Dice,
        SimilarityMeasure::Euclidean,
        SimilarityMeasure::Manhattan,
        SimilarityMeasure::Levenshtein,
        SimilarityMeasure::Jaccard,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SimilarityMeasure::Cosine => "cosine",
            SimilarityMeasure::Dice => "dice",
            SimilarityMeasure::Euclidean => "euclidean",
            SimilarityMeasure::Manhattan => "manhattan",
            SimilarityMeasure::Levenshtein => "levenshtein",
            SimilarityMeasure::Jaccard => "jaccard",
        }
    }

    /// True when the raw score is a distance (0 = identical).
    pub fn is_distance(self) -> bool {
        !matches!(self, SimilarityMeasure::Cosine | SimilarityMeasure::Dice)
    }

    /// Map a raw score onto [0, 1], higher meaning more similar. Distances go
    /// through `1 / (1 + d)`.
    pub fn to_similarity(self, raw: f64) -> f64 {
        if self.is_distance() {
            1.0 / (1.0 + raw)
        } else {
            raw
        }
    }
}

impl fmt::Display for SimilarityMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SimilarityMeasure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SimilarityMeasure::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown measure \"{s}\""))
    }
}

/// Raw score of `m` between two definition vectors.
pub fn similarity(m: SimilarityMeasure, u: &DefinitionVector, v: &DefinitionVector) -> f64 {
    match m {
        SimilarityMeasure::Cosine => cosine(u, v),
        SimilarityMeasure::Dice => dice(u, v),
        SimilarityMeasure::Euclidean => (squared_diff_sum(u, v) as f64).sqrt(),
        SimilarityMeasure::Manhattan => abs_diff_sum(u, v) as f64,
        SimilarityMeasure::Levenshtein => levenshtein(u.terms(), v.terms()) as f64,
        SimilarityMeasure::Jaccard => jaccard_distance(u, v),
    }
}

// Integer accumulation keeps every measure exactly symmetric.
fn cosine(u: &DefinitionVector, v: &DefinitionVector) -> f64 {
    let (small, large) = if u.len() <= v.len() { (u, v) } else { (v, u) };
    let dot: u64 = small
        .counts()
        .iter()
        .map(|(t, &a)| a as u64 * large.count(t) as u64)
        .sum();
    let (nu, nv) = (u.squared_norm(), v.squared_norm());
    if nu == 0 || nv == 0 {
        return 0.0;
    }
    let c = dot as f64 / (nu as f64 * nv as f64).sqrt();
    c.clamp(0.0, 1.0)
}

fn shared_support(u: &DefinitionVector, v: &DefinitionVector) -> usize {
    let (small, large) = if u.len() <= v.len() { (u, v) } else { (v, u) };
    small.counts().keys().filter(|t| large.count(t) > 0).count()
}

fn dice(u: &DefinitionVector, v: &DefinitionVector) -> f64 {
    let total = u.len() + v.len();
    if total == 0 {
        return 0.0;
    }
    2.0 * shared_support(u, v) as f64 / total as f64
}

fn jaccard_distance(u: &DefinitionVector, v: &DefinitionVector) -> f64 {
    let inter = shared_support(u, v);
    let union = u.len() + v.len() - inter;
    if union == 0 {
        return 0.0;
    }
    1.0 - inter as f64 / union as f64
}

fn union_terms<'a>(u: &'a DefinitionVector, v: &'a DefinitionVector) -> BTreeSet<&'a str> {
    u.counts()
        .keys()
        .chain(v.counts().keys())
        .map(String::as_str)
        .collect()
}

fn squared_diff_sum(u: &DefinitionVector, v: &DefinitionVector) -> u64 {
    union_terms(u, v)
        .into_iter()
        .map(|t| {
            let d = u.count(t).abs_diff(v.count(t)) as u64;
            d * d
        })
        .sum()
}

fn abs_diff_sum(u: &DefinitionVector, v: &DefinitionVector) -> u64 {
    union_terms(u, v)
        .into_iter()
        .map(|t| u.count(t).abs_diff(v.count(t)) as u64)
        .sum()
}

/// Edit distance between two token sequences (unit insert/delete/substitute).
pub fn levenshtein<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, x) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, y) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(x != y);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defsim::vectorize;

    fn v(terms: &[&str]) -> DefinitionVector {
        vectorize(terms.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn identity_and_disjoint() {
        let a = v(&["agua", "sal", "agua"]);
        assert!((similarity(SimilarityMeasure::Cosine, &a, &a) - 1.0).abs() < 1e-12);
        let (x, y) = (v(&["a"]), v(&["b"]));
        assert_eq!(similarity(SimilarityMeasure::Cosine, &x, &y), 0.0);
        assert_eq!(similarity(SimilarityMeasure::Dice, &x, &y), 0.0);
        assert_eq!(similarity(SimilarityMeasure::Jaccard, &x, &y), 1.0);
    }

    #[test]
    fn distances_hand_computed() {
        // {a:2, b:1} vs {b:1}: differences (2, 0) over the union {a, b}
        let u = v(&["a", "a", "b"]);
        let w = v(&["b"]);
        assert_eq!(similarity(SimilarityMeasure::Euclidean, &u, &w), 2.0);
        assert_eq!(similarity(SimilarityMeasure::Manhattan, &u, &w), 2.0);
        assert_eq!(similarity(SimilarityMeasure::Levenshtein, &u, &w), 2.0);
    }

    #[test]
    fn empty_vectors() {
        let e = v(&[]);
        let a = v(&["a"]);
        assert_eq!(similarity(SimilarityMeasure::Cosine, &e, &e), 0.0);
        assert_eq!(similarity(SimilarityMeasure::Cosine, &e, &a), 0.0);
        assert_eq!(similarity(SimilarityMeasure::Dice, &e, &e), 0.0);
        assert_eq!(similarity(SimilarityMeasure::Jaccard, &e, &e), 0.0);
        assert_eq!(similarity(SimilarityMeasure::Levenshtein, &e, &a), 1.0);
    }

    #[test]
    fn levenshtein_basics() {
        assert_eq!(levenshtein(&["a", "b", "c"], &["a", "c"]), 1);
        assert_eq!(levenshtein::<&str>(&[], &[]), 0);
        assert_eq!(
            levenshtein(
                &['k', 'i', 't', 't', 'e', 'n'],
                &['s', 'i', 't', 't', 'i', 'n', 'g']
            ),
            3
        );
    }

    #[test]
    fn conversion() {
        assert_eq!(SimilarityMeasure::Euclidean.to_similarity(0.0), 1.0);
        assert_eq!(SimilarityMeasure::Manhattan.to_similarity(1.0), 0.5);
        assert_eq!(SimilarityMeasure::Cosine.to_similarity(0.25), 0.25);
        for m in SimilarityMeasure::ALL {
            assert_eq!(m.name().parse::<SimilarityMeasure>(), Ok(m));
        }
    }
}
