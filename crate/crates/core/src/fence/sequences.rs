//! Plaindromes `a_k` and the points `b_k`, `b_k^j`.

/// `n = q(q+1)/2 + l` with `q` maximal.
pub fn triangular_decomposition(n: u64) -> (u64, u64) {
    let mut q = ((2.0 * n as f64).sqrt()) as u64;
    while q * (q + 1) / 2 > n {
        q -= 1;
    }
    while (q + 1) * (q + 2) / 2 <= n {
        q += 1;
    }
    (q, n - q * (q + 1) / 2)
}

/// `a_k = (3^q + 3^l)/2 - 1` for the triangular decomposition `(q, l)` of `k`.
/// Fits in `u64` for `k < 820`.
pub fn plaindrome(k: u64) -> u64 {
    let (q, l) = triangular_decomposition(k);
    let big = 3u128.pow(q as u32) + 3u128.pow(l as u32);
    u64::try_from(big / 2 - 1).expect("plaindrome exceeds u64")
}

/// `a_1, ..., a_count`.
pub fn plaindromes(count: usize) -> Vec<u64> {
    (1..=count as u64).map(plaindrome).collect()
}

/// True when the base-3 digits of `n` never decrease from left to right.
pub fn is_plaindrome(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut n = n;
    let mut prev = 2;
    while n > 0 {
        let d = n % 3;
        if d > prev {
            return false;
        }
        prev = d;
        n /= 3;
    }
    true
}

/// `b_k = (3/2)(3^k - 1)`.
pub fn b_k(k: u32) -> u64 {
    3 * (3u64.pow(k) - 1) / 2
}

/// `b_k^j` for `j = 0..(k+2)(k+3)/2`, ordered by `j`:
/// `b_k^{(k-m)(k+m+5)/2 + l} = (3/2)(3^{k+1} - 3^m - 3^{m-l} - 1)`, `m = k..=-1`, `l = 0..=m+1`.
pub fn b_family(k: u32) -> Vec<(u64, u64)> {
    let k = k as i64;
    let mut out = Vec::new();
    for m in (-1..=k).rev() {
        for l in 0..=m + 1 {
            let j = ((k - m) * (k + m + 5) / 2 + l) as u64;
            // 2 b = 3^{k+2} - 3^{m+1} - 3^{m-l+1} - 3
            let v = 3u64.pow((k + 2) as u32) - 3u64.pow((m + 1) as u32) - 3u64.pow((m - l + 1) as u32) - 3;
            out.push((j, v / 2));
        }
    }
    out.sort_unstable();
    out
}

/// `(b_k, [b_k^j])` for `k = 1..=k_max`.
pub fn b_sequences(k_max: u32) -> Vec<(u64, Vec<u64>)> {
    (1..=k_max).map(|k| (b_k(k), b_family(k).into_iter().map(|(_, v)| v).collect())).collect()
}
