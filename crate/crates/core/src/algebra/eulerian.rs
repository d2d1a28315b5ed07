use num_bigint::BigInt;

use super::MultiPoly;

/// Eulerian numbers `⟨n, k⟩`: permutations of `[n]` with `k` descents,
/// `k = 0..n-1`. Empty for `n = 0`.
pub fn eulerian_numbers(n: usize) -> Vec<BigInt> {
    let mut row: Vec<BigInt> = Vec::new();
    for m in 1..=n {
        let mut next = vec![BigInt::from(0); m];
        next[0] = BigInt::from(1);
        for k in 1..m {
            // ⟨m, k⟩ = (k + 1)⟨m-1, k⟩ + (m - k)⟨m-1, k-1⟩
            let stay = row.get(k).map_or_else(|| BigInt::from(0), |v| v * (k + 1));
            next[k] = stay + &row[k - 1] * (m - k);
        }
        row = next;
    }
    row
}

/// `A_n(t) = Σ_{π ∈ S_n} t^{des(π)+1}`, with `A_0(t) = 1`.
pub fn eulerian(n: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    let mut coeffs = vec![BigInt::from(0)];
    coeffs.extend(eulerian_numbers(n));
    MultiPoly::from_t_coeffs(coeffs)
}
