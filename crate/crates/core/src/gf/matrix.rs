//! Dense matrices over a prime field, stored row-major.

use super::numth::{mulmod, powmod};

fn inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Row-reduces in place; returns the pivot columns.
pub fn row_reduce(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let iv = inv(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mulmod(*x, iv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let s = mulmod(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - s) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<u64>], p: u64) -> usize {
    let mut a = m.to_vec();
    row_reduce(&mut a, p).len()
}

/// Inverse of a square matrix, if invertible.
pub fn inverse(m: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    let piv = row_reduce(&mut a, p);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mul_vec(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0u64, |acc, (&a, &b)| (acc + mulmod(a, b, p)) % p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_inverse() {
        let m = vec![vec![1, 2, 0], vec![2, 4, 0], vec![0, 1, 1]];
        assert_eq!(rank(&m, 5), 2);
        assert!(inverse(&m, 5).is_none());
        let a = vec![vec![1, 1], vec![0, 1]];
        let ai = inverse(&a, 3).unwrap();
        assert_eq!(ai, vec![vec![1, 2], vec![0, 1]]);
        assert_eq!(mul_vec(&a, &[1, 2], 3), vec![0, 2]);
    }
}
