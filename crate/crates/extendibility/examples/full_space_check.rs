//! Matrix-free spectral check of the d=5, (5,5) Werner operator on the full
//! 5^10-dimensional space, far beyond the in-library oracle budget. Prints
//! Lanczos Ritz values for the smallest eigenvalue and finishes with an
//! explicit Rayleigh quotient, a rigorous variational upper bound on the
//! minimum. The result matches `alpha(5, 5, 5) = -11/25`, attained by an
//! overlapping pair, and rules out `-2/5`, the best split-pair energy.
//!
//! Run with `cargo run --release -p extendibility --example full_space_check`
//! (about 400 MB of memory, a minute or two of runtime).

const D: usize = 5;
const N_LEFT: usize = 5;
const N_TOTAL: usize = 10;

fn matvec(x: &[f64], y: &mut [f64], digits: &[u8]) {
    let strides: Vec<usize> = (0..N_TOTAL).map(|k| D.pow(k as u32)).collect();
    y.fill(0.0);
    let dim = x.len();
    for i in 0..N_LEFT {
        for j in N_LEFT..N_TOTAL {
            let si = strides[i];
            let sj = strides[j];
            for idx in 0..dim {
                let a = digits[idx * N_TOTAL + i] as usize;
                let b = digits[idx * N_TOTAL + j] as usize;
                let out = idx - a * si + b * si - b * sj + a * sj;
                y[out] += x[idx];
            }
        }
    }
    let c = 1.0 / ((N_LEFT * (N_TOTAL - N_LEFT)) as f64);
    for v in y.iter_mut() {
        *v *= c;
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sturm_min(alphas: &[f64], betas: &[f64]) -> f64 {
    let k = alphas.len();
    let count_below = |x: f64| -> usize {
        let mut count = 0;
        let mut q = alphas[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..k {
            let denom = if q.abs() < 1e-300 { 1e-300 } else { q };
            q = alphas[i] - x - betas[i - 1] * betas[i - 1] / denom;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    };
    let (mut lo, mut hi) = (-2.0f64, 2.0f64);
    for _ in 0..90 {
        let mid = 0.5 * (lo + hi);
        if count_below(mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

fn main() {
    let dim = D.pow(N_TOTAL as u32);
    println!("dimension {dim}");
    let mut digits = vec![0u8; dim * N_TOTAL];
    for idx in 0..dim {
        let mut rest = idx;
        for k in 0..N_TOTAL {
            digits[idx * N_TOTAL + k] = (rest % D) as u8;
            rest /= D;
        }
    }

    let steps = 70usize;
    let mut state = 0x1234_5678_9abc_def0u64;
    let mut rand = || {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        ((z ^ (z >> 31)) >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    let mut v: Vec<f64> = (0..dim).map(|_| rand()).collect();
    let norm = dot(&v, &v).sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
    let v0 = v.clone();

    let mut v_prev = vec![0.0; dim];
    let mut w = vec![0.0; dim];
    let mut alphas = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    for step in 0..steps {
        matvec(&v, &mut w, &digits);
        if step > 0 {
            let b = betas[step - 1];
            for i in 0..dim {
                w[i] -= b * v_prev[i];
            }
        }
        let a = dot(&w, &v);
        alphas.push(a);
        for i in 0..dim {
            w[i] -= a * v[i];
        }
        let b = dot(&w, &w).sqrt();
        if step % 10 == 9 {
            println!("step {}: min ritz {:.9}", step + 1, sturm_min(&alphas, &betas));
        }
        if b < 1e-12 {
            break;
        }
        betas.push(b);
        for i in 0..dim {
            let t = w[i] / b;
            v_prev[i] = v[i];
            v[i] = t;
        }
        std::mem::swap(&mut v, &mut w);
        std::mem::swap(&mut v, &mut w); // keep names stable
    }
    let theta = sturm_min(&alphas, &betas);
    println!("final min ritz {theta:.12}");

    // Tridiagonal eigenvector by inverse iteration (dense, small k).
    let k = alphas.len();
    let mut u = vec![1.0 / (k as f64).sqrt(); k];
    for _ in 0..4 {
        // Solve (T - shift) z = u by simple Gaussian elimination on a dense
        // copy; k is tiny.
        let shift = theta + 1e-12;
        let mut m = vec![0.0f64; k * k];
        for i in 0..k {
            m[i * k + i] = alphas[i] - shift;
            if i + 1 < k {
                m[i * k + i + 1] = betas[i];
                m[(i + 1) * k + i] = betas[i];
            }
        }
        let mut rhs = u.clone();
        for col in 0..k {
            let mut piv = col;
            for r in col + 1..k {
                if m[r * k + col].abs() > m[piv * k + col].abs() {
                    piv = r;
                }
            }
            for c in 0..k {
                m.swap(col * k + c, piv * k + c);
            }
            rhs.swap(col, piv);
            let p = if m[col * k + col].abs() < 1e-280 { 1e-280 } else { m[col * k + col] };
            for r in col + 1..k {
                let f = m[r * k + col] / p;
                if f != 0.0 {
                    for c in col..k {
                        m[r * k + c] -= f * m[col * k + c];
                    }
                    rhs[r] -= f * rhs[col];
                }
            }
        }
        for r in (0..k).rev() {
            let mut acc = rhs[r];
            for c in r + 1..k {
                acc -= m[r * k + c] * rhs[c];
            }
            let p = if m[r * k + r].abs() < 1e-280 { 1e-280 } else { m[r * k + r] };
            rhs[r] = acc / p;
        }
        let norm = dot(&rhs, &rhs).sqrt();
        for (ui, ri) in u.iter_mut().zip(&rhs) {
            *ui = ri / norm;
        }
    }

    // Second pass: accumulate the Ritz vector y = sum u_j v_j.
    let mut y = vec![0.0; dim];
    let mut v = v0;
    let mut v_prev = vec![0.0; dim];
    for (step, &coeff) in u.iter().enumerate() {
        for i in 0..dim {
            y[i] += coeff * v[i];
        }
        if step + 1 == k {
            break;
        }
        matvec(&v, &mut w, &digits);
        if step > 0 {
            let b = betas[step - 1];
            for i in 0..dim {
                w[i] -= b * v_prev[i];
            }
        }
        let a = alphas[step];
        for i in 0..dim {
            w[i] -= a * v[i];
        }
        let b = betas[step];
        for i in 0..dim {
            let t = w[i] / b;
            v_prev[i] = v[i];
            v[i] = t;
        }
    }
    let ny = dot(&y, &y).sqrt();
    y.iter_mut().for_each(|x| *x /= ny);
    matvec(&y, &mut w, &digits);
    let rayleigh = dot(&y, &w);
    let mut res = 0.0;
    for i in 0..dim {
        let r = w[i] - rayleigh * y[i];
        res += r * r;
    }
    println!("rayleigh quotient of ritz vector: {rayleigh:.12}");
    println!("residual: {:.3e}", res.sqrt());
    println!(
        "library alpha(5,5,5) = -11/25 = {:.12}; best split pair gives -2/5 = -0.4",
        -11.0 / 25.0
    );
}
