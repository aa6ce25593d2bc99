//! Littlewood-Richardson decomposition of SU(d) tensor products and its
//! dominance-order structure.
//!
//! [`lr_decompose`] expands `left ⊗ right` by direct enumeration of
//! Littlewood-Richardson skew tableaux: the boxes of `right` are attached to
//! `left` row by row as horizontal strips whose cumulative label counts
//! satisfy the ballot condition, and shapes exceeding the ambient row count
//! are discarded. The decomposition always has a dominance-order minimum,
//! returned in closed form by [`min_product_diagram`]; dually,
//! [`min_right_factor`] gives the dominance-least right factor that can pair
//! with `left` to reach a fixed product shape.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::partitions::{Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LrError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("dual width {width} is too small for {diagram}")]
    DualWidth { width: u32, diagram: String },
}

/// The multiset of irreducible constituents of a tensor product: a map from
/// product diagram to positive multiplicity.
///
/// Serializes as a JSON object keyed by the diagram's row list, e.g.
/// `{"[2,0]": 1, "[1,1]": 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LRDecomposition {
    entries: BTreeMap<Partition, u64>,
}

impl LRDecomposition {
    /// Multiplicity of `shape`, zero when absent.
    pub fn multiplicity(&self, shape: &Partition) -> u64 {
        self.entries.get(shape).copied().unwrap_or(0)
    }

    pub fn contains(&self, shape: &Partition) -> bool {
        self.entries.contains_key(shape)
    }

    /// Constituents with multiplicities, in ascending lexicographic order of
    /// row vectors.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.entries.iter().map(|(k, &m)| (k, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The dominance-order minimum among the constituents, if one exists.
    /// For genuine decompositions this always succeeds and coincides with
    /// [`min_product_diagram`].
    pub fn dominance_minimum_key(&self) -> Option<Partition> {
        'outer: for candidate in self.entries.keys() {
            for other in self.entries.keys() {
                if !other.dominates(candidate).ok()? {
                    continue 'outer;
                }
            }
            return Some(candidate.clone());
        }
        None
    }

    /// JSON object mapping `"[r1,r2,...]"` to multiplicity.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .entries
            .iter()
            .map(|(k, &m)| {
                (
                    serde_json::to_string(k).expect("row lists serialize"),
                    serde_json::Value::from(m),
                )
            })
            .collect();
        serde_json::Value::Object(map)
    }
}

/// Decomposes `left ⊗ right` into SU(d) irreducibles with multiplicities by
/// enumerating Littlewood-Richardson tableaux. Symmetric in its arguments.
pub fn lr_decompose(left: &Partition, right: &Partition) -> Result<LRDecomposition, LrError> {
    if left.ambient_rows() != right.ambient_rows() {
        return Err(PartitionError::AmbientMismatch {
            left: left.ambient_rows(),
            right: right.ambient_rows(),
        }
        .into());
    }
    let d = left.ambient_rows();
    let content: Vec<u32> = right.rows().to_vec();
    let mut entries = BTreeMap::new();
    let mut shape: Vec<u32> = left.rows().to_vec();
    // Cumulative row counts of the previously placed label; `None` while
    // placing the first label, whose ballot constraint is vacuous.
    let prev_cum: Option<Vec<u32>> = None;
    place_label(0, &content, &mut shape, &prev_cum, d, &mut entries);
    Ok(LRDecomposition { entries })
}

/// Places all boxes of label `label`, then recurses to the next label.
fn place_label(
    label: usize,
    content: &[u32],
    shape: &mut Vec<u32>,
    prev_cum: &Option<Vec<u32>>,
    d: usize,
    entries: &mut BTreeMap<Partition, u64>,
) {
    if label == content.len() || content[label] == 0 {
        let done = Partition::new(shape, d).expect("strip placement preserves partitions");
        *entries.entry(done).or_insert(0) += 1;
        return;
    }
    // Shapes before this label's pass; the horizontal-strip bound is taken
    // against these row lengths, not the partially extended ones.
    let base = shape.clone();
    let mut cum = vec![0u32; d];
    place_in_row(
        0,
        content[label],
        label,
        content,
        shape,
        &base,
        prev_cum,
        &mut cum,
        d,
        entries,
    );
}

/// Chooses how many boxes of the current label go into `row`, walking rows
/// top to bottom. The placement must stay a horizontal strip over `base`
/// (`base[row] + take <= base[row - 1]`, at most one new box per column) and
/// keep the cumulative count within the previous label's count one row
/// higher (ballot condition).
#[allow(clippy::too_many_arguments)]
fn place_in_row(
    row: usize,
    remaining: u32,
    label: usize,
    content: &[u32],
    shape: &mut Vec<u32>,
    base: &[u32],
    prev_cum: &Option<Vec<u32>>,
    cum: &mut Vec<u32>,
    d: usize,
    entries: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        for r in row..d {
            cum[r] = if r == 0 { 0 } else { cum[r - 1] };
        }
        let next_cum = Some(cum.clone());
        place_label(label + 1, content, shape, &next_cum, d, entries);
        return;
    }
    if row == d {
        return;
    }
    let cum_above = if row == 0 { 0 } else { cum[row - 1] };
    let strip_cap = if row == 0 {
        remaining
    } else {
        base[row - 1].saturating_sub(base[row])
    };
    let ballot_cap = match prev_cum {
        None => remaining,
        Some(prev) => {
            let allowed = if row == 0 { 0 } else { prev[row - 1] };
            allowed.saturating_sub(cum_above)
        }
    };
    let max_here = remaining.min(strip_cap).min(ballot_cap);
    for take in (0..=max_here).rev() {
        shape[row] += take;
        cum[row] = cum_above + take;
        place_in_row(
            row + 1,
            remaining - take,
            label,
            content,
            shape,
            base,
            prev_cum,
            cum,
            d,
            entries,
        );
        shape[row] -= take;
    }
}

/// The dominance-order minimum constituent of `left ⊗ right`: the sorted row
/// sums of `left` against the reversal of `right`. Always a member of the
/// decomposition and dominated by every other member.
pub fn min_product_diagram(left: &Partition, right: &Partition) -> Result<Partition, LrError> {
    Ok(left.sorted_row_sum(right)?)
}

/// The dominance-least diagram `r` such that `big` appears in `left ⊗ r`:
/// the sorted pointwise difference `big - left`. Requires `left` to be
/// contained in `big` row by row.
pub fn min_right_factor(big: &Partition, left: &Partition) -> Result<Partition, LrError> {
    Ok(big.difference(left)?)
}

/// Checks that the multiplicity of `big` in `left ⊗ right` equals the
/// multiplicity of the dual of `right` in `left ⊗ dual(big)`, both duals
/// taken in a height-d, width-`m` rectangle. Absent-absent pairs compare
/// equal with multiplicity zero on both sides.
pub fn check_dual_symmetry(
    left: &Partition,
    right: &Partition,
    big: &Partition,
    m: u32,
) -> Result<bool, LrError> {
    let dual_big = big.dual(m).map_err(|_| LrError::DualWidth {
        width: m,
        diagram: big.to_string(),
    })?;
    let dual_right = right.dual(m).map_err(|_| LrError::DualWidth {
        width: m,
        diagram: right.to_string(),
    })?;
    let direct = if big.weight() == left.weight() + right.weight() {
        lr_decompose(left, right)?.multiplicity(big)
    } else {
        0
    };
    let dual_side = if dual_right.weight() == left.weight() + dual_big.weight() {
        lr_decompose(left, &dual_big)?.multiplicity(&dual_right)
    } else {
        0
    };
    Ok(direct == dual_side)
}

/// Dimension of the SU(d) representation labeled by `p`, by the Weyl
/// dimension formula `prod_{i<j} (p_i - p_j + j - i) / (j - i)`.
pub fn weyl_dimension(p: &Partition) -> u128 {
    let d = p.ambient_rows();
    let rows = p.rows();
    let mut numerator: i128 = 1;
    let mut denominator: i128 = 1;
    for i in 0..d {
        for j in (i + 1)..d {
            numerator *= i128::from(rows[i]) - i128::from(rows[j]) + (j - i) as i128;
            denominator *= (j - i) as i128;
        }
    }
    debug_assert_eq!(numerator % denominator, 0);
    (numerator / denominator) as u128
}
