//! Integer partitions and Young diagrams with a fixed ambient row count.
//!
//! A [`Partition`] stores weakly decreasing box counts padded with zeros to a
//! fixed length `d` (the ambient row count), so reversal, duals and dominance
//! comparisons are total functions on equal-length vectors. Diagrams with at
//! most `d` rows label irreducible representations of SU(d) up to
//! full-column equivalence; see [`equivalent_labels`].

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from partition construction and pairwise operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("ambient row count must be at least 1")]
    ZeroAmbient,
    #[error("row {index} has {value} boxes but row {} has {prev}; rows must be weakly decreasing", index - 1)]
    NotDecreasing { index: usize, value: u32, prev: u32 },
    #[error("{nonzero} nonzero rows do not fit into {ambient} ambient rows")]
    TooManyRows { nonzero: usize, ambient: usize },
    #[error("weights differ: {left} vs {right}")]
    WeightMismatch { left: u64, right: u64 },
    #[error("ambient row counts differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dual width {width} is smaller than the first row {first}")]
    DualWidthTooSmall { width: u32, first: u32 },
    #[error("containment violated at row {index}: {small} > {big}")]
    NotContained { index: usize, small: u32, big: u32 },
    #[error("cannot fit {weight} boxes into 0 rows")]
    NoRows { weight: u64 },
    #[error("invalid partition literal at position {position}: {reason}")]
    BadLiteral { position: usize, reason: String },
}

/// A weakly decreasing sequence of nonnegative box counts, zero-padded to a
/// fixed ambient length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rows: Vec<u32>,
}

impl Partition {
    /// Builds a partition from the given parts, padding with zeros to
    /// `ambient` rows.
    pub fn new(parts: &[u32], ambient: usize) -> Result<Self, PartitionError> {
        if ambient == 0 {
            return Err(PartitionError::ZeroAmbient);
        }
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(PartitionError::NotDecreasing {
                    index: index + 1,
                    value: w[1],
                    prev: w[0],
                });
            }
        }
        let nonzero = parts.iter().filter(|&&p| p > 0).count();
        if nonzero > ambient {
            return Err(PartitionError::TooManyRows { nonzero, ambient });
        }
        let mut rows: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        rows.resize(ambient, 0);
        Ok(Partition { rows })
    }

    /// The all-zero diagram on `ambient` rows.
    pub fn zero(ambient: usize) -> Self {
        assert!(ambient > 0, "ambient row count must be at least 1");
        Partition {
            rows: vec![0; ambient],
        }
    }

    /// Parses a comma-separated literal such as `"3,1"` into a partition on
    /// `ambient` rows. Reports the byte position of the first offending token.
    pub fn parse_literal(text: &str, ambient: usize) -> Result<Self, PartitionError> {
        let mut parts = Vec::new();
        let mut position = 0;
        for token in text.split(',') {
            let trimmed = token.trim();
            let value: u32 = trimmed.parse().map_err(|_| PartitionError::BadLiteral {
                position: position + (token.len() - token.trim_start().len()),
                reason: format!("expected a nonnegative integer, found {trimmed:?}"),
            })?;
            parts.push(value);
            position += token.len() + 1;
        }
        Partition::new(&parts, ambient).map_err(|e| match e {
            PartitionError::BadLiteral { .. } => e,
            other => PartitionError::BadLiteral {
                position: 0,
                reason: other.to_string(),
            },
        })
    }

    /// Row lengths, zero-padded to the ambient count.
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// The ambient row count `d`.
    pub fn ambient_rows(&self) -> usize {
        self.rows.len()
    }

    /// Total number of boxes.
    pub fn weight(&self) -> u64 {
        self.rows.iter().map(|&r| u64::from(r)).sum()
    }

    /// Number of nonzero rows.
    pub fn nonzero_rows(&self) -> usize {
        self.rows.iter().filter(|&&r| r > 0).count()
    }

    /// Rows in reverse order (weakly increasing).
    pub fn reversed_rows(&self) -> Vec<u32> {
        let mut rev = self.rows.clone();
        rev.reverse();
        rev
    }

    /// True if `small` fits inside `self` row by row.
    pub fn contains(&self, small: &Partition) -> bool {
        self.ambient_rows() == small.ambient_rows()
            && self.rows.iter().zip(&small.rows).all(|(&b, &s)| s <= b)
    }

    /// Dominance comparison: every prefix sum of `self` is at least the
    /// corresponding prefix sum of `other`. Both diagrams must have the same
    /// weight and ambient row count.
    pub fn dominates(&self, other: &Partition) -> Result<bool, PartitionError> {
        check_same_ambient(self, other)?;
        check_same_weight(self, other)?;
        let mut lhs = 0u64;
        let mut rhs = 0u64;
        for (&a, &b) in self.rows.iter().zip(&other.rows) {
            lhs += u64::from(a);
            rhs += u64::from(b);
            if lhs < rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True if `self` covers `other` in dominance order: `self` is obtained
    /// from `other` by moving one box from row `k` up to row `i < k`, with
    /// either adjacent rows (`k = i + 1`) or an equal block
    /// (`other[i] = other[k]`). This is the complete covering rule; the
    /// adjacent-row case allows unequal row lengths.
    pub fn covers(&self, other: &Partition) -> Result<bool, PartitionError> {
        check_same_ambient(self, other)?;
        check_same_weight(self, other)?;
        let Some((up, down)) = single_box_move(self, other) else {
            return Ok(false);
        };
        Ok(down == up + 1 || other.rows[up] == other.rows[down])
    }

    /// The box-move indices `(i, k)` realizing a cover, if `self` covers
    /// `other`. Row `i` gained the box, row `k` lost it (0-indexed).
    pub fn cover_move(&self, other: &Partition) -> Result<Option<(usize, usize)>, PartitionError> {
        if self.covers(other)? {
            Ok(single_box_move(self, other))
        } else {
            Ok(None)
        }
    }

    /// The complement of the diagram in a height-`d`, width-`width` rectangle,
    /// rotated by half a turn. Labels the dual representation.
    pub fn dual(&self, width: u32) -> Result<Partition, PartitionError> {
        if width < self.rows[0] {
            return Err(PartitionError::DualWidthTooSmall {
                width,
                first: self.rows[0],
            });
        }
        let rows: Vec<u32> = self.rows.iter().rev().map(|&r| width - r).collect();
        Ok(Partition { rows })
    }

    /// Row sums of `self` against the reversal of `other`, sorted into
    /// decreasing order. Symmetric in its arguments.
    pub fn sorted_row_sum(&self, other: &Partition) -> Result<Partition, PartitionError> {
        check_same_ambient(self, other)?;
        let d = self.ambient_rows();
        let mut rows: Vec<u32> = (0..d)
            .map(|i| self.rows[i] + other.rows[d - 1 - i])
            .collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { rows })
    }

    /// Pointwise difference `self - small`, sorted into decreasing order.
    /// Requires `small` to be contained in `self` row by row.
    pub fn difference(&self, small: &Partition) -> Result<Partition, PartitionError> {
        check_same_ambient(self, small)?;
        for (index, (&b, &s)) in self.rows.iter().zip(&small.rows).enumerate() {
            if s > b {
                return Err(PartitionError::NotContained { index, small: s, big: b });
            }
        }
        let mut rows: Vec<u32> = self
            .rows
            .iter()
            .zip(&small.rows)
            .map(|(&b, &s)| b - s)
            .collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { rows })
    }
}

impl fmt::Display for Partition {
    /// Renders as `(3,1)`, trimming trailing zero rows; the zero diagram
    /// renders as `(0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.rows.iter().rposition(|&r| r > 0);
        write!(f, "(")?;
        match last {
            None => write!(f, "0")?,
            Some(last) => {
                for (i, r) in self.rows[..=last].iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{r}")?;
                }
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.rows)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<u32>::deserialize(deserializer)?;
        let ambient = rows.len();
        Partition::new(&rows, ambient).map_err(D::Error::custom)
    }
}

/// A left/right pair of diagrams on the same ambient row count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionPair {
    pub left: Partition,
    pub right: Partition,
}

impl PartitionPair {
    pub fn new(left: Partition, right: Partition) -> Result<Self, PartitionError> {
        check_same_ambient(&left, &right)?;
        Ok(PartitionPair { left, right })
    }

    pub fn ambient_rows(&self) -> usize {
        self.left.ambient_rows()
    }

    /// Row overlap statistics of `left` against the reversal of `right`.
    pub fn overlap_profile(&self) -> OverlapProfile {
        let d = self.ambient_rows();
        let right_rev = self.right.reversed_rows();
        let overlap = (0..d)
            .filter(|&i| self.left.rows()[i] > 0 && right_rev[i] > 0)
            .count();
        let nonoverlap_left = self.left.nonzero_rows() - overlap;
        let nonoverlap_right = self.right.nonzero_rows() - overlap;
        let boxes_left = self.left.rows()[..nonoverlap_left]
            .iter()
            .map(|&r| u64::from(r))
            .sum();
        let boxes_right = self.right.rows()[..nonoverlap_right]
            .iter()
            .map(|&r| u64::from(r))
            .sum();
        OverlapProfile {
            nonoverlap_left,
            nonoverlap_right,
            overlap,
            boxes_left,
            boxes_right,
        }
    }
}

/// Overlap statistics of a diagram pair: when the left diagram is stacked on
/// the reversed right diagram, `overlap` counts the rows where both are
/// nonzero, and `nonoverlap_left`/`nonoverlap_right` count the remaining
/// nonzero rows of each side. The three counts sum to at most the ambient row
/// count, with equality exactly when the nonzero rows of the two diagrams
/// fill all ambient rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OverlapProfile {
    /// Number of nonzero rows of the left diagram above the overlap.
    pub nonoverlap_left: usize,
    /// Number of nonzero rows of the right diagram outside the overlap.
    pub nonoverlap_right: usize,
    /// Number of rows where the left diagram meets the reversed right.
    pub overlap: usize,
    /// Boxes in the non-overlapping rows of the left diagram.
    pub boxes_left: u64,
    /// Boxes in the non-overlapping rows of the right diagram.
    pub boxes_right: u64,
}

/// All partitions of `n` into at most `d` parts, in decreasing lexicographic
/// order. Never empty: `(n, 0, ..., 0)` always exists.
pub fn enumerate_partitions(n: u64, d: usize) -> Result<Vec<Partition>, PartitionError> {
    if d == 0 {
        return Err(PartitionError::ZeroAmbient);
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(d);
    descend(n, u64::from(u32::MAX), d, &mut prefix, &mut out);
    Ok(out)
}

fn descend(remaining: u64, max_part: u64, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        let ambient = prefix.len() + slots;
        let mut rows = prefix.clone();
        rows.resize(ambient, 0);
        out.push(Partition { rows });
        return;
    }
    if slots == 0 || max_part == 0 {
        return;
    }
    let hi = remaining.min(max_part);
    let lo = remaining.div_ceil(slots as u64);
    let mut part = hi;
    while part >= lo {
        prefix.push(part as u32);
        descend(remaining - part, part, slots - 1, prefix, out);
        prefix.pop();
        if part == lo {
            break;
        }
        part -= 1;
    }
}

/// Number of partitions of `n` into at most `d` parts, without enumerating
/// them. Equal, by conjugation, to the number of partitions of `n` into
/// parts of size at most `d`.
pub fn count_partitions(n: u64, d: usize) -> u128 {
    let n = n as usize;
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=d.min(n.max(1)) {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// The dominance-order minimum of partitions of `weight` into at most
/// `parts` rows, padded to `ambient` rows: `weight mod parts` rows of
/// `ceil(weight/parts)` followed by rows of `floor(weight/parts)`.
pub fn dominance_minimum(weight: u64, parts: usize, ambient: usize) -> Result<Partition, PartitionError> {
    if parts == 0 {
        if weight == 0 {
            return Ok(Partition::zero(ambient));
        }
        return Err(PartitionError::NoRows { weight });
    }
    if parts > ambient {
        return Err(PartitionError::TooManyRows {
            nonzero: parts,
            ambient,
        });
    }
    let q = (weight / parts as u64) as u32;
    let r = (weight % parts as u64) as usize;
    let mut rows = vec![0u32; ambient];
    for (i, row) in rows.iter_mut().enumerate().take(parts) {
        *row = if i < r { q + 1 } else { q };
    }
    Ok(Partition { rows })
}

/// True if the two diagrams label the same SU(d) representation, i.e. they
/// differ by full columns: all row differences are equal.
pub fn equivalent_labels(a: &Partition, b: &Partition) -> bool {
    if a.ambient_rows() != b.ambient_rows() {
        return false;
    }
    let diff = i64::from(a.rows()[0]) - i64::from(b.rows()[0]);
    a.rows()
        .iter()
        .zip(b.rows())
        .all(|(&x, &y)| i64::from(x) - i64::from(y) == diff)
}

fn check_same_ambient(a: &Partition, b: &Partition) -> Result<(), PartitionError> {
    if a.ambient_rows() != b.ambient_rows() {
        return Err(PartitionError::AmbientMismatch {
            left: a.ambient_rows(),
            right: b.ambient_rows(),
        });
    }
    Ok(())
}

fn check_same_weight(a: &Partition, b: &Partition) -> Result<(), PartitionError> {
    if a.weight() != b.weight() {
        return Err(PartitionError::WeightMismatch {
            left: a.weight(),
            right: b.weight(),
        });
    }
    Ok(())
}

/// If `a = b + (one box moved from row k to row i)` with `i < k`, returns
/// `(i, k)`.
fn single_box_move(a: &Partition, b: &Partition) -> Option<(usize, usize)> {
    let mut up = None;
    let mut down = None;
    for (idx, (&x, &y)) in a.rows().iter().zip(b.rows()).enumerate() {
        match i64::from(x) - i64::from(y) {
            0 => {}
            1 if up.is_none() => up = Some(idx),
            -1 if down.is_none() => down = Some(idx),
            _ => return None,
        }
    }
    match (up, down) {
        (Some(i), Some(k)) if i < k => Some((i, k)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32], d: usize) -> Partition {
        Partition::new(parts, d).unwrap()
    }

    #[test]
    fn weight_sums_rows() {
        assert_eq!(p(&[3, 3], 2).weight(), 6);
        assert_eq!(p(&[0, 0, 0], 3).weight(), 0);
        assert_eq!(p(&[2, 2, 1, 1], 4).weight(), 6);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            Partition::new(&[1, 2], 3),
            Err(PartitionError::NotDecreasing { .. })
        ));
        assert!(matches!(
            Partition::new(&[1, 1, 1], 2),
            Err(PartitionError::TooManyRows { .. })
        ));
        assert!(matches!(
            Partition::new(&[1], 0),
            Err(PartitionError::ZeroAmbient)
        ));
    }

    #[test]
    fn enumeration_is_lex_decreasing_and_complete() {
        let got = enumerate_partitions(3, 2).unwrap();
        assert_eq!(got, vec![p(&[3], 2), p(&[2, 1], 2)]);
        let got = enumerate_partitions(0, 3).unwrap();
        assert_eq!(got, vec![Partition::zero(3)]);
        let got = enumerate_partitions(4, 3).unwrap();
        assert_eq!(
            got,
            vec![p(&[4], 3), p(&[3, 1], 3), p(&[2, 2], 3), p(&[2, 1, 1], 3)]
        );
        assert!(enumerate_partitions(4, 0).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3, 3], 4).dominates(&p(&[2, 2, 1, 1], 4)).unwrap());
        let a = p(&[3, 3], 3);
        let b = p(&[4, 1, 1], 3);
        assert!(!a.dominates(&b).unwrap());
        assert!(!b.dominates(&a).unwrap());
        assert!(a.dominates(&a).unwrap());
        assert!(matches!(
            p(&[2], 2).dominates(&p(&[1], 2)),
            Err(PartitionError::WeightMismatch { .. })
        ));
    }

    #[test]
    fn cover_examples() {
        assert!(p(&[4, 3, 2], 3).covers(&p(&[3, 3, 3], 3)).unwrap());
        assert!(!p(&[3, 3], 4).covers(&p(&[2, 2, 1, 1], 4)).unwrap());
        let a = p(&[3, 3], 4);
        assert!(!a.covers(&a).unwrap());
        // Adjacent-row move with unequal lengths is a cover.
        assert!(p(&[4, 0], 2).covers(&p(&[3, 1], 2)).unwrap());
    }

    #[test]
    fn covers_matches_definitional_check_exhaustively() {
        for d in 1..=4usize {
            for n in 0..=8u64 {
                let all = enumerate_partitions(n, d).unwrap();
                for a in &all {
                    for b in &all {
                        let strict = a != b && a.dominates(b).unwrap();
                        let has_intermediate = strict
                            && all.iter().any(|c| {
                                c != a
                                    && c != b
                                    && a.dominates(c).unwrap()
                                    && c.dominates(b).unwrap()
                            });
                        let definitional = strict && !has_intermediate;
                        assert_eq!(
                            a.covers(b).unwrap(),
                            definitional,
                            "cover mismatch for {a} vs {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p(&[1, 0], 2).dual(1).unwrap(), p(&[1, 0], 2));
        assert_eq!(p(&[2, 1, 0], 3).dual(2).unwrap(), p(&[2, 1, 0], 3));
        for d in 2..=5usize {
            let n = 4u32;
            let single = p(&[n], d);
            let mut expect = vec![n; d - 1];
            expect.push(0);
            assert_eq!(single.dual(n).unwrap(), p(&expect, d));
        }
        assert!(matches!(
            p(&[3], 2).dual(2),
            Err(PartitionError::DualWidthTooSmall { .. })
        ));
    }

    #[test]
    fn sorted_row_sum_examples() {
        assert_eq!(
            p(&[1, 0], 2).sorted_row_sum(&p(&[1, 0], 2)).unwrap(),
            p(&[1, 1], 2)
        );
        assert_eq!(
            p(&[2, 1, 0], 3).sorted_row_sum(&p(&[2, 1, 0], 3)).unwrap(),
            p(&[2, 2, 2], 3)
        );
        assert_eq!(
            p(&[5, 0, 0], 3).sorted_row_sum(&Partition::zero(3)).unwrap(),
            p(&[5, 0, 0], 3)
        );
    }

    #[test]
    fn difference_examples() {
        assert_eq!(p(&[3, 1], 2).difference(&p(&[1, 1], 2)).unwrap(), p(&[2, 0], 2));
        assert_eq!(
            p(&[2, 2, 1], 3).difference(&p(&[2, 1, 0], 3)).unwrap(),
            p(&[1, 1, 0], 3)
        );
        let a = p(&[2, 2, 1], 3);
        assert_eq!(a.difference(&a).unwrap(), Partition::zero(3));
        assert!(matches!(
            p(&[2, 0], 2).difference(&p(&[1, 1], 2)),
            Err(PartitionError::NotContained { .. })
        ));
    }

    #[test]
    fn overlap_profile_examples() {
        let pr = PartitionPair::new(p(&[2], 3), p(&[3], 3)).unwrap();
        let prof = pr.overlap_profile();
        assert_eq!((prof.nonoverlap_left, prof.nonoverlap_right, prof.overlap), (1, 1, 0));
        assert_eq!((prof.boxes_left, prof.boxes_right), (2, 3));

        let pr = PartitionPair::new(p(&[1, 1], 2), p(&[1, 1], 2)).unwrap();
        let prof = pr.overlap_profile();
        assert_eq!((prof.nonoverlap_left, prof.nonoverlap_right, prof.overlap), (0, 0, 2));

        let pr = PartitionPair::new(p(&[2, 1], 3), p(&[1], 3)).unwrap();
        let prof = pr.overlap_profile();
        assert_eq!((prof.nonoverlap_left, prof.nonoverlap_right, prof.overlap), (2, 1, 0));
        assert_eq!((prof.boxes_left, prof.boxes_right), (3, 1));
    }

    #[test]
    fn overlap_counts_fill_ambient_rows_when_diagrams_do() {
        for nl in 0..=6u64 {
            for nr in 0..=6u64 {
                for (a, b) in enumerate_partitions(nl, 3)
                    .unwrap()
                    .iter()
                    .flat_map(|a| {
                        enumerate_partitions(nr, 3)
                            .unwrap()
                            .into_iter()
                            .map(move |b| (a.clone(), b))
                    })
                {
                    let prof = PartitionPair::new(a.clone(), b.clone()).unwrap().overlap_profile();
                    let total = prof.nonoverlap_left + prof.nonoverlap_right + prof.overlap;
                    assert!(total <= 3);
                    if a.nonzero_rows() + b.nonzero_rows() >= 3 {
                        assert_eq!(total, 3, "for {a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_minimum_shapes() {
        assert_eq!(dominance_minimum(5, 2, 4).unwrap(), p(&[3, 2], 4));
        assert_eq!(dominance_minimum(6, 3, 3).unwrap(), p(&[2, 2, 2], 3));
        assert_eq!(dominance_minimum(2, 4, 5).unwrap(), p(&[1, 1], 5));
        assert_eq!(dominance_minimum(0, 0, 3).unwrap(), Partition::zero(3));
        assert!(dominance_minimum(2, 0, 3).is_err());
    }

    #[test]
    fn dominance_minimum_is_dominated_by_all() {
        for n in 0..=9u64 {
            for parts in 1..=4usize {
                let min = dominance_minimum(n, parts, parts).unwrap();
                for q in enumerate_partitions(n, parts).unwrap() {
                    assert!(q.dominates(&min).unwrap(), "{q} should dominate {min}");
                }
            }
        }
    }

    #[test]
    fn label_equivalence() {
        assert!(equivalent_labels(&p(&[4, 3, 2], 3), &p(&[2, 1, 0], 3)));
        assert!(!equivalent_labels(&p(&[3, 3, 0], 3), &p(&[2, 1, 0], 3)));
    }

    #[test]
    fn serde_round_trip_and_validation() {
        let a = p(&[3, 1, 0], 3);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "[3,1,0]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!(serde_json::from_str::<Partition>("[]").is_err());
    }

    #[test]
    fn literal_parsing() {
        assert_eq!(Partition::parse_literal("3,1", 3).unwrap(), p(&[3, 1], 3));
        assert_eq!(Partition::parse_literal("0", 2).unwrap(), Partition::zero(2));
        let err = Partition::parse_literal("3,x,1", 3).unwrap_err();
        match err {
            PartitionError::BadLiteral { position, .. } => assert_eq!(position, 2),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(Partition::parse_literal("1,2", 3).is_err());
    }

    #[test]
    fn display_trims_trailing_zeros() {
        assert_eq!(p(&[3, 1, 0], 3).to_string(), "(3,1)");
        assert_eq!(Partition::zero(2).to_string(), "(0)");
    }

    proptest! {
        #[test]
        fn dual_is_an_involution(parts in proptest::collection::vec(0u32..7, 1..6)) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let d = sorted.len();
            let q = Partition::new(&sorted, d).unwrap();
            let m = q.rows()[0] + 2;
            prop_assert_eq!(q.dual(m).unwrap().dual(m).unwrap(), q);
        }

        #[test]
        fn sorted_row_sum_commutes_and_adds_weight(
            a_parts in proptest::collection::vec(0u32..7, 4),
            b_parts in proptest::collection::vec(0u32..7, 4),
        ) {
            let mut a_parts = a_parts;
            let mut b_parts = b_parts;
            a_parts.sort_unstable_by(|x, y| y.cmp(x));
            b_parts.sort_unstable_by(|x, y| y.cmp(x));
            let a = Partition::new(&a_parts, 4).unwrap();
            let b = Partition::new(&b_parts, 4).unwrap();
            let ab = a.sorted_row_sum(&b).unwrap();
            prop_assert_eq!(&ab, &b.sorted_row_sum(&a).unwrap());
            prop_assert_eq!(ab.weight(), a.weight() + b.weight());
            if a.contains(&b) {
                let diff = a.difference(&b).unwrap();
                prop_assert_eq!(diff.weight(), a.weight() - b.weight());
            }
        }

        #[test]
        fn dual_preserves_dominance(n in 0u64..9, d in 2usize..5, m_extra in 0u32..3) {
            let all = enumerate_partitions(n, d).unwrap();
            let width = all.iter().map(|q| q.rows()[0]).max().unwrap_or(0) + m_extra;
            for a in &all {
                for b in &all {
                    if a.dominates(b).unwrap() {
                        let da = a.dual(width).unwrap();
                        let db = b.dual(width).unwrap();
                        prop_assert!(da.dominates(&db).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for d in 1..=5usize {
            for n in 0..=10u64 {
                let all = enumerate_partitions(n, d).unwrap();
                for a in &all {
                    assert!(a.dominates(a).unwrap());
                    for b in &all {
                        let ab = a.dominates(b).unwrap();
                        let ba = b.dominates(a).unwrap();
                        if ab && ba {
                            assert_eq!(a, b);
                        }
                        for c in &all {
                            if ab && b.dominates(c).unwrap() {
                                assert!(a.dominates(c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
}
