//! Isotropic-state extendibility thresholds.
//!
//! Unlike the Werner case there is no tradeoff between the two extension
//! sizes: the extreme parameter is `beta = 1 + (d - 1) / max(n_L, n_R)`,
//! attained by single-row diagrams on both sides whose product (against the
//! dual of the right diagram) lands in the singlet class. The per-pair
//! bookkeeping lives in [`isotropic_triple_energy`], whose maximum over all
//! diagram pairs reproduces the closed form; the spectral counterpart is the
//! maximal eigenvalue of the averaged partial-transposed-flip operator, see
//! [`crate::oracle::build_hamiltonian_isotropic`].

use num_rational::Rational64;
use serde::Serialize;

use crate::casimir::casimir_eigenvalue;
use crate::partitions::Partition;
use crate::werner::{ExtendibilityQuery, WernerError};

/// An isotropic threshold: `beta` lies in `[1, d]` and depends only on the
/// larger extension count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotropicResult {
    #[serde(skip)]
    pub beta: Rational64,
    pub d: usize,
    pub n_left: u64,
    pub n_right: u64,
}

impl IsotropicResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "beta": crate::format_rational(self.beta),
            "beta_float": *self.beta.numer() as f64 / *self.beta.denom() as f64,
            "d": self.d,
            "n_left": self.n_left,
            "n_right": self.n_right,
        })
    }
}

/// The extreme isotropic parameter `1 + (d - 1) / max(n_L, n_R)`.
pub fn beta(query: &ExtendibilityQuery) -> IsotropicResult {
    let n_max = query.n_left().max(query.n_right()) as i64;
    IsotropicResult {
        beta: Rational64::from_integer(1) + Rational64::new(query.d() as i64 - 1, n_max),
        d: query.d(),
        n_left: query.n_left(),
        n_right: query.n_right(),
    }
}

/// The eigenvalue contribution of the pair `(left, right)` to the isotropic
/// problem:
/// `[c(left) + c(right) - c(combined)] / (2 n_L n_R) + 1/d`,
/// where `combined` is the dominance-minimal constituent of
/// `left ⊗ dual(right)` with the dual taken at the minimal width
/// `right.rows[0]`. The maximum of this quantity over all pairs of the given
/// weights equals [`beta`].
///
/// The sign convention is anchored spectrally: the reported quantity is an
/// eigenvalue of the averaged partial-transposed-flip operator, whose
/// maximal eigenvalue is the threshold.
pub fn isotropic_triple_energy(
    left: &Partition,
    right: &Partition,
) -> Result<Rational64, WernerError> {
    let n_left = left.weight();
    let n_right = right.weight();
    if n_left == 0 || n_right == 0 {
        return Err(WernerError::ZeroWeight);
    }
    let width = right.rows()[0];
    let dual_right = right.dual(width)?;
    let combined = left.sorted_row_sum(&dual_right)?;
    let d = left.ambient_rows() as i64;
    let pair_product = 2 * i64::try_from(n_left * n_right).expect("weights fit in i64");
    Ok(
        (casimir_eigenvalue(left).0 + casimir_eigenvalue(right).0
            - casimir_eigenvalue(&combined).0)
            / Rational64::from_integer(pair_product)
            + Rational64::new(1, d),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;
    use crate::werner::ExtendibilityQuery;

    fn p(parts: &[u32], d: usize) -> Partition {
        Partition::new(parts, d).unwrap()
    }

    fn q(d: usize, nl: u64, nr: u64) -> ExtendibilityQuery {
        ExtendibilityQuery::new(d, nl, nr).unwrap()
    }

    fn rat(n: i64, den: i64) -> Rational64 {
        Rational64::new(n, den)
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&q(2, 1, 1)).beta, rat(2, 1));
        assert_eq!(beta(&q(3, 2, 2)).beta, rat(2, 1));
        assert_eq!(beta(&q(4, 1, 5)).beta, rat(8, 5));
    }

    #[test]
    fn beta_depends_only_on_larger_count() {
        for d in 2..=6usize {
            for nl in 1..=8u64 {
                for nr in 1..=8u64 {
                    let b = beta(&q(d, nl, nr)).beta;
                    assert_eq!(b, beta(&q(d, nl.max(nr), 1)).beta);
                    assert!(b >= rat(1, 1));
                    assert!(b <= rat(d as i64, 1));
                }
            }
        }
    }

    #[test]
    fn single_rows_attain_beta() {
        for d in 2..=5usize {
            for n in 1..=6u32 {
                let row = p(&[n], d);
                let value = isotropic_triple_energy(&row, &row).unwrap();
                assert_eq!(value, beta(&q(d, u64::from(n), u64::from(n))).beta);
            }
        }
        assert_eq!(
            isotropic_triple_energy(&p(&[1], 2), &p(&[1], 2)).unwrap(),
            rat(2, 1)
        );
    }

    #[test]
    fn pair_value_bounded_by_beta() {
        let value = isotropic_triple_energy(&p(&[1, 1], 3), &p(&[1], 3)).unwrap();
        assert!(value <= beta(&q(3, 2, 1)).beta);
    }

    #[test]
    fn closed_form_is_the_pair_maximum_exhaustively() {
        for d in 2..=4usize {
            for nl in 1..=6u64 {
                for nr in 1..=6u64 {
                    let expect = beta(&q(d, nl, nr)).beta;
                    let mut best: Option<Rational64> = None;
                    for left in enumerate_partitions(nl, d).unwrap() {
                        for right in enumerate_partitions(nr, d).unwrap() {
                            let value = isotropic_triple_energy(&left, &right).unwrap();
                            assert!(value <= expect, "{left} x {right} exceeds beta");
                            best = Some(best.map_or(value, |b| b.max(value)));
                        }
                    }
                    assert_eq!(best.unwrap(), expect, "d={d} nl={nl} nr={nr}");
                }
            }
        }
    }
}
