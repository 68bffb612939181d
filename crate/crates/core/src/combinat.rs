//! Exact integer helpers: binomials, multinomials, Catalan numbers and
//! double falling factorials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `C(n, k)`, zero when `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `n!`.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(sum parts)! / prod(parts_i!)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut total = 0i64;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p as i64;
        acc *= binomial(total, p as i64);
    }
    acc
}

/// The Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    let c = binomial(2 * n as i64, n as i64);
    let (q, r) = c.div_rem(&BigInt::from(n + 1));
    debug_assert!(r.is_zero());
    q
}

/// `x (x - 2) (x - 4) ... (x - 2k + 2)`; the empty product is 1.
pub fn double_falling_factorial(x: i64, k: u64) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, j| acc * (x - 2 * j))
}

/// Pascal rows `0..=n`, for convolutions that reuse every entry.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut row = vec![BigInt::one(); i + 1];
            for k in 1..i {
                row[k] = &rows[i - 1][k - 1] + &rows[i - 1][k];
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }
}
