//! Long-running stress sweep: the two-family alpha against the exhaustive
//! pair scan at dimensions and weights beyond the test suite's ranges.

use extendibility::partitions::enumerate_partitions;
use extendibility::werner::{alpha, triple_energy, ExtendibilityQuery};
use num_rational::Rational64;

fn main() {
    let mut misses = 0usize;
    let mut checked = 0usize;
    let ranges: Vec<(usize, u64)> = vec![
        (9, 16), (10, 16), (11, 16), (12, 16), (13, 16), (14, 16),
    ];
    for (d, n_max) in ranges {
        for nl in 1..=n_max {
            for nr in 1..=nl {
                let q = ExtendibilityQuery::new(d, nl, nr).unwrap();
                let fast = alpha(&q).unwrap().alpha;
                let mut truth: Option<Rational64> = None;
                for left in enumerate_partitions(nl, d).unwrap() {
                    for right in enumerate_partitions(nr, d).unwrap() {
                        let e = triple_energy(&left, &right).unwrap();
                        truth = Some(truth.map_or(e, |b| b.min(e)));
                    }
                }
                checked += 1;
                if truth != Some(fast) {
                    misses += 1;
                    println!("MISS d={d} nl={nl} nr={nr}: alpha={fast} true={}", truth.unwrap());
                }
            }
        }
        println!("d={d} done ({checked} so far, {misses} misses)");
    }
    println!("checked {checked}, misses {misses}");
}
