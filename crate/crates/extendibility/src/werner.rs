//! Werner-state extendibility thresholds.
//!
//! The extreme parameter `alpha(d, n_L, n_R)` of the `(n_L, n_R)`-extendible
//! Werner states equals the minimum, over pairs of diagrams
//! `left ⊢_d n_L`, `right ⊢_d n_R`, of the pair energy [`triple_energy`],
//! the eigenvalue of the averaged-flip operator on the representation triple
//! `(left, right, min_product_diagram(left, right))`.
//!
//! Minimizers come in two families. The first splits the `d` ambient rows
//! into `d_hat` rows for the left diagram and `d - d_hat` for the right and
//! takes the near-rectangular dominance minima on each side
//! ([`candidate_pair`], closed-form energy
//! [`candidate_energy_closed_form`]); a three-element window around
//! `round(d * n_L / (n_L + n_R))` contains the best split, and every call
//! cross-checks the window against the full split scan.
//!
//! The split family alone is not sufficient. Pairs whose diagrams share one
//! ambient row can reach strictly lower energy: the first case is
//! `d = 5, n_L = n_R = 5`, where `(2,2,1) x (2,2,1)` stacks to the full
//! five-row rectangle (the singlet class) and attains `-11/25`, while every
//! split pair stays at `-2/5`; the full-space spectral oracle confirms
//! `-11/25` as the true minimum. The second family
//! ([`overlap_candidates`]) therefore consists of pairs of
//! near-rectangular-head-plus-tail shapes whose row counts sum to `d + 1`;
//! heads are dominance minima because moving a box down inside a
//! non-overlapping block never raises the energy. [`alpha`] minimizes over
//! both families; its agreement with [`exhaustive_alpha`], the raw
//! minimization over all partition pairs, is enforced by the acceptance
//! suite on every exhaustively testable range.
//!
//! [`standardize_nonoverlap`] and [`shrink_overlap_step`] are the two
//! box-moving operations behind the split reduction, and
//! [`reduce_to_candidate`] drives them to a split pair. The shrinking move
//! is *not* always energy-monotone: from an overlap-family minimizer such
//! as `(2,2,1) x (2,2,1)` every move into the split family must ascend.

use std::collections::BTreeSet;

use num_rational::Rational64;
use serde::Serialize;
use thiserror::Error;

use crate::casimir::casimir_eigenvalue;
use crate::partitions::{
    dominance_minimum, enumerate_partitions, Partition, PartitionError, PartitionPair,
};

/// Cap on the number of partition pairs an exhaustive scan may visit.
pub const EXHAUSTIVE_PAIR_BUDGET: u128 = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WernerError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("local dimension must be at least 2, got {d}")]
    DimensionTooSmall { d: usize },
    #[error("extension counts must be at least 1, got ({n_left}, {n_right})")]
    EmptyExtension { n_left: u64, n_right: u64 },
    #[error("diagram weight must be positive for a pair energy")]
    ZeroWeight,
    #[error("row split {d_hat} is outside 1..={max}", max = d - 1)]
    SplitOutOfRange { d_hat: usize, d: usize },
    #[error("exhaustive scan over {pairs} partition pairs exceeds the budget of {budget}")]
    SearchSpaceTooLarge { pairs: u128, budget: u128 },
    #[error("pair is not in standard form: {detail}")]
    NotStandardForm { detail: String },
    #[error("pair has no overlapping rows to shrink")]
    NoOverlap,
    #[error("internal inconsistency: {detail}")]
    Internal { detail: String },
}

/// A validated extendibility query: local dimension `d >= 2` and extension
/// counts `n_left, n_right >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExtendibilityQuery {
    d: usize,
    n_left: u64,
    n_right: u64,
}

impl ExtendibilityQuery {
    pub fn new(d: usize, n_left: u64, n_right: u64) -> Result<Self, WernerError> {
        if d < 2 {
            return Err(WernerError::DimensionTooSmall { d });
        }
        if n_left == 0 || n_right == 0 {
            return Err(WernerError::EmptyExtension { n_left, n_right });
        }
        Ok(ExtendibilityQuery { d, n_left, n_right })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n_left(&self) -> u64 {
        self.n_left
    }

    pub fn n_right(&self) -> u64 {
        self.n_right
    }

    pub fn swapped(&self) -> Self {
        ExtendibilityQuery {
            d: self.d,
            n_left: self.n_right,
            n_right: self.n_left,
        }
    }
}

/// An extendibility threshold with its optimizing diagrams: the exact
/// parameter, a minimizing pair, the product diagram they reach, the chosen
/// row split (`None` when only an overlapping pair attains the minimum) and
/// the candidate window the split was drawn from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendibilityResult {
    pub alpha: Rational64,
    pub argmin_left: Partition,
    pub argmin_right: Partition,
    pub argmin_combined: Partition,
    pub d_hat: Option<usize>,
    pub candidate_set: BTreeSet<usize>,
}

impl ExtendibilityResult {
    /// JSON with the exact value as a fraction string plus a float rendering.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "alpha": crate::format_rational(self.alpha),
            "alpha_float": rational_to_f64(self.alpha),
            "d_hat": self.d_hat,
            "left": self.argmin_left,
            "right": self.argmin_right,
            "combined": self.argmin_combined,
            "candidates": self.candidate_set.iter().collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn rational_to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// The pair energy of `(left, right)`: the eigenvalue of the averaged-flip
/// operator on the triple `(left, right, min_product_diagram(left, right))`.
///
/// Computed along two independent routes and cross-checked on every call:
/// the Casimir route
/// `[c(combined) - c(left) - c(right)] / (2 n_L n_R) + 1/d`
/// and the expanded row sum
/// `(1 / n_L n_R) * sum_i [left_i * right_{d-i+1}
///   - i * (sorted_i - left_i - right_i)]`.
pub fn triple_energy(left: &Partition, right: &Partition) -> Result<Rational64, WernerError> {
    let n_left = left.weight();
    let n_right = right.weight();
    if n_left == 0 || n_right == 0 {
        return Err(WernerError::ZeroWeight);
    }
    let combined = left.sorted_row_sum(right)?;
    let d = left.ambient_rows() as i64;
    let pair_product = n_left
        .checked_mul(n_right)
        .and_then(|p| p.checked_mul(2))
        .and_then(|p| i64::try_from(p).ok())
        .ok_or_else(|| WernerError::Internal {
            detail: format!("weight product {n_left} * {n_right} overflows"),
        })?;

    let casimir_route = (casimir_eigenvalue(&combined).0
        - casimir_eigenvalue(left).0
        - casimir_eigenvalue(right).0)
        / Rational64::from_integer(pair_product)
        + Rational64::new(1, d);

    let mut sum = 0i64;
    let rows_l = left.rows();
    let rows_r = right.rows();
    let sorted = combined.rows();
    for i in 0..left.ambient_rows() {
        let l = i64::from(rows_l[i]);
        let r_rev = i64::from(rows_r[left.ambient_rows() - 1 - i]);
        let r = i64::from(rows_r[i]);
        let s = i64::from(sorted[i]);
        sum += l * r_rev - (i as i64 + 1) * (s - l - r);
    }
    let expanded_route = Rational64::new(2 * sum, pair_product);

    if casimir_route != expanded_route {
        return Err(WernerError::Internal {
            detail: format!(
                "energy routes disagree for {left} x {right}: {casimir_route} vs {expanded_route}"
            ),
        });
    }
    Ok(casimir_route)
}

/// The near-rectangular candidate pair for a row split `d_hat`: the
/// dominance minima of partitions of `n_L` into `d_hat` rows and of `n_R`
/// into `d - d_hat` rows.
pub fn candidate_pair(
    query: &ExtendibilityQuery,
    d_hat: usize,
) -> Result<PartitionPair, WernerError> {
    check_split(query, d_hat)?;
    let left = dominance_minimum(query.n_left, d_hat, query.d)?;
    let right = dominance_minimum(query.n_right, query.d - d_hat, query.d)?;
    Ok(PartitionPair::new(left, right)?)
}

/// Closed-form energy of [`candidate_pair`]. With `a = floor(n_L / d_hat)`
/// and `b = floor(n_R / (d - d_hat))`:
///
/// - `a != b`: `-min(d_hat / n_L, (d - d_hat) / n_R)`;
/// - `a == b`: `-[d_hat (d - d_hat) a + (n_L mod d_hat)(n_R mod (d - d_hat))]
///   / (n_L n_R)`.
///
/// Verified against [`triple_energy`] of the candidate pair on every call.
pub fn candidate_energy_closed_form(
    query: &ExtendibilityQuery,
    d_hat: usize,
) -> Result<Rational64, WernerError> {
    check_split(query, d_hat)?;
    let d_hat_u = d_hat as u64;
    let rest = (query.d - d_hat) as u64;
    let n_l = query.n_left;
    let n_r = query.n_right;
    let floor_l = n_l / d_hat_u;
    let floor_r = n_r / rest;
    let energy = if floor_l != floor_r {
        let left_ratio = Rational64::new(d_hat_u as i64, n_l as i64);
        let right_ratio = Rational64::new(rest as i64, n_r as i64);
        -left_ratio.min(right_ratio)
    } else {
        let numerator = d_hat_u * rest * floor_l + (n_l % d_hat_u) * (n_r % rest);
        -Rational64::new(numerator as i64, (n_l * n_r) as i64)
    };

    let pair = candidate_pair(query, d_hat)?;
    let direct = triple_energy(&pair.left, &pair.right)?;
    if direct != energy {
        return Err(WernerError::Internal {
            detail: format!(
                "closed-form candidate energy {energy} disagrees with pair energy {direct} \
                 at d_hat={d_hat} for d={}, n_L={n_l}, n_R={n_r}",
                query.d
            ),
        });
    }
    Ok(energy)
}

/// The three-element candidate window around `round(d n_L / (n_L + n_R))`
/// (half-up), clamped to `1..=d-1`.
pub fn candidate_window(query: &ExtendibilityQuery) -> BTreeSet<usize> {
    let total = query.n_left + query.n_right;
    // round(x) half-up as floor((2 d n_L + total) / (2 total)).
    let center = ((2 * (query.d as u64) * query.n_left + total) / (2 * total)) as i64;
    let mut window = BTreeSet::new();
    for shift in [-1i64, 0, 1] {
        let candidate = center + shift;
        if candidate >= 1 && candidate < query.d as i64 {
            window.insert(candidate as usize);
        }
    }
    window
}

/// Shapes with a near-rectangular head on `rows - 1` rows and a single tail
/// row of `1..=floor` boxes, padded to `d` ambient rows; `rows = 1` gives
/// the single-row shape. These are the per-side minimizers once the tail row
/// is pinned as the shared row of an overlapping pair.
fn head_tail_shapes(n: u64, rows: usize, d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if rows == 0 || rows > d || (rows as u64) > n {
        return out;
    }
    if rows == 1 {
        out.push(Partition::new(&[n as u32], d).expect("single row fits"));
        return out;
    }
    for tail in 1..=(n / rows as u64) {
        let head = dominance_minimum(n - tail, rows - 1, d).expect("head fits its rows");
        if u64::from(head.rows()[rows - 2]) < tail {
            continue;
        }
        let mut parts = head.rows()[..rows - 1].to_vec();
        parts.push(tail as u32);
        out.push(Partition::new(&parts, d).expect("tail below head floor"));
    }
    debug_assert!(out.iter().all(|p| p.weight() == n && p.nonzero_rows() == rows));
    out
}

/// Candidate pairs whose diagrams share exactly one ambient row: for every
/// row split `a + b = d + 1`, a head-plus-tail shape of `n_L` on `a` rows
/// against one of `n_R` on `b` rows. Pure near-rectangles occur as the
/// largest admissible tail.
pub fn overlap_candidates(query: &ExtendibilityQuery) -> Vec<PartitionPair> {
    let d = query.d;
    let mut out = Vec::new();
    for rows_left in 1..=d {
        let rows_right = d + 1 - rows_left;
        if rows_right > d {
            continue;
        }
        for left in head_tail_shapes(query.n_left, rows_left, d) {
            for right in head_tail_shapes(query.n_right, rows_right, d) {
                out.push(PartitionPair::new(left.clone(), right).expect("same ambient"));
            }
        }
    }
    out
}

/// The extreme Werner parameter `alpha(d, n_L, n_R)`: the minimum pair
/// energy over the split candidates (window cross-checked against the full
/// split scan) and the single-shared-row candidates. When a split pair
/// attains the minimum the smallest such window split is reported; ties
/// between the families resolve to the split representation.
pub fn alpha(query: &ExtendibilityQuery) -> Result<ExtendibilityResult, WernerError> {
    let energies: Vec<(usize, Rational64)> = (1..query.d)
        .map(|d_hat| Ok((d_hat, candidate_energy_closed_form(query, d_hat)?)))
        .collect::<Result<_, WernerError>>()?;
    let split_min = energies
        .iter()
        .map(|&(_, e)| e)
        .min()
        .expect("d >= 2 gives at least one split");

    let window = candidate_window(query);
    let window_min = energies
        .iter()
        .filter(|(d_hat, _)| window.contains(d_hat))
        .map(|&(_, e)| e)
        .min()
        .expect("window is nonempty");
    if window_min != split_min {
        return Err(WernerError::Internal {
            detail: format!(
                "candidate window {window:?} misses the full split-scan minimum {split_min} \
                 for d={}, n_L={}, n_R={}",
                query.d, query.n_left, query.n_right
            ),
        });
    }

    let mut best_overlap: Option<(Rational64, PartitionPair)> = None;
    for pair in overlap_candidates(query) {
        let energy = triple_energy(&pair.left, &pair.right)?;
        if best_overlap.as_ref().is_none_or(|&(e, _)| energy < e) {
            best_overlap = Some((energy, pair));
        }
    }

    let (minimum, d_hat, pair) = match best_overlap {
        Some((overlap_min, overlap_pair)) if overlap_min < split_min => {
            (overlap_min, None, overlap_pair)
        }
        _ => {
            let d_hat = energies
                .iter()
                .filter(|(d_hat, e)| window.contains(d_hat) && *e == split_min)
                .map(|&(d_hat, _)| d_hat)
                .min()
                .expect("some window split attains the split minimum");
            (split_min, Some(d_hat), candidate_pair(query, d_hat)?)
        }
    };
    let combined = pair.left.sorted_row_sum(&pair.right)?;
    Ok(ExtendibilityResult {
        alpha: minimum,
        argmin_left: pair.left,
        argmin_right: pair.right,
        argmin_combined: combined,
        d_hat,
        candidate_set: window,
    })
}

/// Brute-force minimum of [`triple_energy`] over every pair of diagrams of
/// weights `(n_L, n_R)`; the combinatorial oracle for [`alpha`], sharing no
/// candidate enumeration with it. Refuses search spaces larger than
/// [`EXHAUSTIVE_PAIR_BUDGET`], reporting the attempted size.
pub fn exhaustive_alpha(query: &ExtendibilityQuery) -> Result<ExtendibilityResult, WernerError> {
    let pairs = crate::partitions::count_partitions(query.n_left, query.d)
        * crate::partitions::count_partitions(query.n_right, query.d);
    if pairs > EXHAUSTIVE_PAIR_BUDGET {
        return Err(WernerError::SearchSpaceTooLarge {
            pairs,
            budget: EXHAUSTIVE_PAIR_BUDGET,
        });
    }
    let lefts = enumerate_partitions(query.n_left, query.d)?;
    let rights = enumerate_partitions(query.n_right, query.d)?;

    let mut best: Option<(Rational64, &Partition, &Partition)> = None;
    for left in &lefts {
        for right in &rights {
            let energy = triple_energy(left, right)?;
            if best.as_ref().is_none_or(|&(e, _, _)| energy < e) {
                best = Some((energy, left, right));
            }
        }
    }
    let (minimum, left, right) = best.expect("enumeration is never empty");

    // Report the smallest window split whose candidate pair attains the
    // brute-force minimum; overlap-family minima leave it unset.
    let window = candidate_window(query);
    let mut d_hat = None;
    for &split in &window {
        let pair = candidate_pair(query, split)?;
        if triple_energy(&pair.left, &pair.right)? == minimum {
            d_hat = Some(split);
            break;
        }
    }

    let combined = left.sorted_row_sum(right)?;
    Ok(ExtendibilityResult {
        alpha: minimum,
        argmin_left: left.clone(),
        argmin_right: right.clone(),
        argmin_combined: combined,
        d_hat,
        candidate_set: window,
    })
}

/// Replaces the non-overlapping rows of each diagram (the first
/// `nonoverlap_left` rows of `left`, the first `nonoverlap_right` rows of
/// `right`) by their near-rectangular dominance minima, leaving overlapping
/// rows untouched. Never increases the pair energy.
pub fn standardize_nonoverlap(pair: &PartitionPair) -> PartitionPair {
    let profile = pair.overlap_profile();
    let left = replace_prefix(&pair.left, profile.nonoverlap_left, profile.boxes_left);
    let right = replace_prefix(&pair.right, profile.nonoverlap_right, profile.boxes_right);
    PartitionPair::new(left, right).expect("standardization preserves ambient rows")
}

fn replace_prefix(p: &Partition, rows: usize, boxes: u64) -> Partition {
    if rows == 0 {
        return p.clone();
    }
    let d = p.ambient_rows();
    let minimum = dominance_minimum(boxes, rows, d).expect("prefix fits its own rows");
    let mut out = minimum.rows()[..rows].to_vec();
    out.extend_from_slice(&p.rows()[rows..]);
    Partition::new(&out, d).expect("prefix minimum keeps rows weakly decreasing")
}

/// One energy-monotone overlap-shrinking move on a standard-form pair with
/// at least one overlapping row: one side loses a box from its bottommost
/// overlapping row, gaining it at the top of the floor block of its
/// non-overlapping part (the top row when that part is empty).
///
/// The moved side is the one whose non-overlapping part has the strictly
/// smaller boxes-per-row ratio, counting an empty part as infinitely full.
/// When the ratios tie, the sides are not interchangeable: for
/// `(2,1,0,0) x (2,2,1,0)` the left move raises the energy while the right
/// move keeps it flat, and the mirrored pair breaks the opposite fixed
/// choice, so ties are resolved by comparing the two successor energies
/// directly (left preferred on a second tie).
pub fn shrink_overlap_step(pair: &PartitionPair) -> Result<PartitionPair, WernerError> {
    let profile = pair.overlap_profile();
    if profile.overlap == 0 {
        return Err(WernerError::NoOverlap);
    }
    require_standard_form(pair, &profile)?;

    let movable_left = profile.nonoverlap_left > 0 || profile.overlap > 1;
    let movable_right = profile.nonoverlap_right > 0 || profile.overlap > 1;
    if !movable_left && !movable_right {
        return Err(WernerError::Internal {
            detail: "no movable side in an overlapping pair".to_string(),
        });
    }

    let moved_left = if movable_left {
        let left = move_overlap_box(
            &pair.left,
            profile.nonoverlap_left,
            profile.boxes_left,
            profile.overlap,
        )?;
        Some(PartitionPair::new(left, pair.right.clone()).expect("ambient rows preserved"))
    } else {
        None
    };
    let moved_right = if movable_right {
        let right = move_overlap_box(
            &pair.right,
            profile.nonoverlap_right,
            profile.boxes_right,
            profile.overlap,
        )?;
        Some(PartitionPair::new(pair.left.clone(), right).expect("ambient rows preserved"))
    } else {
        None
    };

    match (moved_left, moved_right) {
        (Some(next), None) => Ok(next),
        (None, Some(next)) => Ok(next),
        (Some(left_next), Some(right_next)) => {
            // n'_L / d_L versus n'_R / d_R with empty parts as infinite.
            let ratio_order = match (profile.nonoverlap_left, profile.nonoverlap_right) {
                (0, 0) => std::cmp::Ordering::Equal,
                (0, _) => std::cmp::Ordering::Greater,
                (_, 0) => std::cmp::Ordering::Less,
                (dl, dr) => (profile.boxes_left as u128 * dr as u128)
                    .cmp(&(profile.boxes_right as u128 * dl as u128)),
            };
            match ratio_order {
                std::cmp::Ordering::Less => Ok(left_next),
                std::cmp::Ordering::Greater => Ok(right_next),
                std::cmp::Ordering::Equal => {
                    let left_energy = triple_energy(&left_next.left, &left_next.right)?;
                    let right_energy = triple_energy(&right_next.left, &right_next.right)?;
                    if left_energy <= right_energy {
                        Ok(left_next)
                    } else {
                        Ok(right_next)
                    }
                }
            }
        }
        (None, None) => unreachable!("guarded above"),
    }
}

/// Takes one box off row `rows_used + overlap` (1-indexed) and adds it at
/// row `boxes mod rows_used + 1`; an empty non-overlapping part receives the
/// box in row 1.
fn move_overlap_box(
    p: &Partition,
    rows_used: usize,
    boxes: u64,
    overlap: usize,
) -> Result<Partition, WernerError> {
    let source = rows_used + overlap - 1;
    let destination = if rows_used == 0 {
        0
    } else {
        (boxes % rows_used as u64) as usize
    };
    debug_assert_ne!(source, destination, "unmovable side selected");
    let mut rows = p.rows().to_vec();
    rows[source] -= 1;
    rows[destination] += 1;
    Partition::new(&rows, p.ambient_rows()).map_err(|e| WernerError::Internal {
        detail: format!("overlap move broke partition shape: {e}"),
    })
}

fn require_standard_form(
    pair: &PartitionPair,
    profile: &crate::partitions::OverlapProfile,
) -> Result<(), WernerError> {
    for (side, name, rows, boxes) in [
        (&pair.left, "left", profile.nonoverlap_left, profile.boxes_left),
        (&pair.right, "right", profile.nonoverlap_right, profile.boxes_right),
    ] {
        if rows == 0 {
            continue;
        }
        let minimum = dominance_minimum(boxes, rows, side.ambient_rows())
            .expect("profile rows fit ambient");
        if side.rows()[..rows] != minimum.rows()[..rows] {
            return Err(WernerError::NotStandardForm {
                detail: format!(
                    "{name} non-overlapping rows {:?} differ from {:?}",
                    &side.rows()[..rows],
                    &minimum.rows()[..rows]
                ),
            });
        }
    }
    Ok(())
}

/// Drives a pair to a near-rectangular split pair by alternating
/// standardization and overlap shrinking, spreading the left diagram into
/// any rows left unused once the overlap is gone. Returns every intermediate
/// pair, starting with the input and ending with a pair equal to
/// [`candidate_pair`] for some row split.
///
/// The energy is *not* always weakly decreasing along the path: when the
/// start (or an intermediate pair) sits strictly below every split pair,
/// which first happens at `d = 5`, `n_L = n_R = 5`, the forced moves into
/// the split family ascend.
pub fn reduce_to_candidate(pair: &PartitionPair) -> Result<Vec<PartitionPair>, WernerError> {
    let d = pair.ambient_rows();
    let mut path = vec![pair.clone()];
    let mut current = pair.clone();
    // Moves out of a fully overlapped side can relocate a box once per row,
    // so the path length is at most of order d * (n_L + n_R).
    let cap = 2 * (d + 2) * ((pair.left.weight() + pair.right.weight()) as usize + 2) + 8;
    for _ in 0..cap {
        let standardized = standardize_nonoverlap(&current);
        if standardized != current {
            path.push(standardized.clone());
            current = standardized;
        }
        let profile = current.overlap_profile();
        if profile.overlap == 0 {
            let used = current.left.nonzero_rows() + current.right.nonzero_rows();
            if used < d && current.left.weight() > 0 && current.right.weight() > 0 {
                let spread = d - current.right.nonzero_rows();
                let left = dominance_minimum(current.left.weight(), spread, d)?;
                let next = PartitionPair::new(left, current.right.clone())?;
                if next != current {
                    path.push(next);
                }
            }
            return Ok(path);
        }
        current = shrink_overlap_step(&current)?;
        path.push(current.clone());
    }
    Err(WernerError::Internal {
        detail: format!("overlap reduction failed to terminate within {cap} moves"),
    })
}

/// The row split whose [`candidate_pair`] equals `pair`, if any.
pub fn matching_candidate_split(query: &ExtendibilityQuery, pair: &PartitionPair) -> Option<usize> {
    (1..query.d).find(|&d_hat| {
        candidate_pair(query, d_hat)
            .map(|candidate| candidate == *pair)
            .unwrap_or(false)
    })
}

fn check_split(query: &ExtendibilityQuery, d_hat: usize) -> Result<(), WernerError> {
    if d_hat == 0 || d_hat >= query.d {
        return Err(WernerError::SplitOutOfRange {
            d_hat,
            d: query.d,
        });
    }
    Ok(())
}
