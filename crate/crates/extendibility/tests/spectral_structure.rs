//! Per-pair spectral structure: every pair energy must literally appear in
//! the spectrum of the corresponding operator, not just the extremal one.

use extendibility::isotropic::isotropic_triple_energy;
use extendibility::oracle::{
    build_hamiltonian_isotropic, build_hamiltonian_werner, ConstructionRoute, SparseOperator,
};
use extendibility::partitions::enumerate_partitions;
use extendibility::werner::{triple_energy, ExtendibilityQuery};

/// All eigenvalues by cyclic Jacobi sweeps on a dense copy; dimensions here
/// stay tiny.
fn spectrum(op: &SparseOperator) -> Vec<f64> {
    let n = op.dimension();
    let mut a = vec![0.0f64; n * n];
    for &(r, c, v) in op.entries() {
        a[r as usize * n + c as usize] = v;
    }
    for _ in 0..80 {
        let mut off = 0.0;
        for r in 0..n {
            for c in (r + 1)..n {
                off += a[r * n + c] * a[r * n + c];
            }
        }
        if off.sqrt() < 1e-13 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let cos = 1.0 / (1.0 + t * t).sqrt();
                let sin = t * cos;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = cos * akp - sin * akq;
                    a[k * n + q] = sin * akp + cos * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = cos * apk - sin * aqk;
                    a[q * n + k] = sin * apk + cos * aqk;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
    vals
}

fn contains(values: &[f64], wanted: f64) -> bool {
    values.iter().any(|v| (v - wanted).abs() < 1e-8)
}

#[test]
fn every_werner_pair_energy_is_an_eigenvalue() {
    for (d, nl, nr) in [(2usize, 2u64, 2u64), (2, 3, 3), (3, 1, 2), (3, 2, 2), (4, 1, 2)] {
        let query = ExtendibilityQuery::new(d, nl, nr).unwrap();
        let op =
            build_hamiltonian_werner(&query, ConstructionRoute::Permutation, 4096).unwrap();
        let eigenvalues = spectrum(&op);
        for left in enumerate_partitions(nl, d).unwrap() {
            for right in enumerate_partitions(nr, d).unwrap() {
                let energy = triple_energy(&left, &right).unwrap();
                let energy = *energy.numer() as f64 / *energy.denom() as f64;
                assert!(
                    contains(&eigenvalues, energy),
                    "pair energy {energy} of {left} x {right} missing from the spectrum \
                     at d={d}, n_L={nl}, n_R={nr}"
                );
            }
        }
    }
}

#[test]
fn every_isotropic_pair_energy_is_an_eigenvalue() {
    for (d, nl, nr) in [(2usize, 2u64, 2u64), (2, 1, 3), (3, 1, 2), (3, 2, 2)] {
        let query = ExtendibilityQuery::new(d, nl, nr).unwrap();
        let op = build_hamiltonian_isotropic(&query, 4096).unwrap();
        let eigenvalues = spectrum(&op);
        for left in enumerate_partitions(nl, d).unwrap() {
            for right in enumerate_partitions(nr, d).unwrap() {
                let energy = isotropic_triple_energy(&left, &right).unwrap();
                let energy = *energy.numer() as f64 / *energy.denom() as f64;
                assert!(
                    contains(&eigenvalues, energy),
                    "pair value {energy} of {left} x {right} missing from the spectrum \
                     at d={d}, n_L={nl}, n_R={nr}"
                );
            }
        }
    }
}
