//! Exact rank over the rationals (fraction-free elimination) and over prime fields.

use num_bigint::BigInt;
use num_traits::Zero;

/// Rank of an integer matrix over Q by Bareiss fraction-free elimination.
pub fn rank_integer(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Rank of a small-integer matrix over Q, switching to big integers only when needed.
pub fn rank_i64(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let x = a[rank][c].checked_mul(a[r][k]);
                let y = a[r][c].checked_mul(a[rank][k]);
                match (x, y) {
                    (Some(x), Some(y)) => match x.checked_sub(y) {
                        Some(d) => a[r][k] = d / prev,
                        None => return rank_integer(to_big(m)),
                    },
                    _ => return rank_integer(to_big(m)),
                }
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    rank
}

fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Modular inverse by Fermat; `p` must be prime and `a` nonzero mod p.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Rank over F_p of a matrix with entries already reduced into 0..p.
pub fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c], p);
        for k in c..cols {
            m[rank][k] = mul_mod(m[rank][k], inv, p);
        }
        for r in rank + 1..rows {
            let f = m[r][c];
            if f == 0 {
                continue;
            }
            for k in c..cols {
                let sub = mul_mod(f, m[rank][k], p);
                m[r][k] = (m[r][k] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut k = n + 1;
    while !is_prime(k) {
        k += 1;
    }
    k
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
