//! Dense polynomials over a prime field F_p, used to find and check moduli.
//! Coefficients are stored constant term first.

use super::numth::{mulmod, powmod, prime_divisors};

pub fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut r: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut r);
    r
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(&mut r);
    r
}

pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let li = inv(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = mulmod(r[top], li, p);
        if c != 0 {
            for (j, &mj) in m.iter().enumerate() {
                let k = top - dm + j;
                r[k] = (r[k] + p - mulmod(c, mj, p)) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let li = inv(l, p);
        for c in a.iter_mut() {
            *c = mulmod(*c, li, p);
        }
    }
    a
}

fn mulmod_poly(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

fn pow_mod_poly(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod_poly(&r, &b, m, p);
        }
        b = mulmod_poly(&b, &b, m, p);
        e >>= 1;
    }
    r
}

/// X^(p^k) mod m.
fn x_pow_p_pow(k: u32, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = rem(&[0, 1], m, p);
    for _ in 0..k {
        r = pow_mod_poly(&r, p, m, p);
    }
    r
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let mut f = f.to_vec();
    trim(&mut f);
    let d = match f.len() {
        0 | 1 => return false,
        l => (l - 1) as u32,
    };
    if d == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let x = vec![0u64, 1];
    if sub(&x_pow_p_pow(d, &f, p), &x, p) != rem(&[], &f, p) {
        return false;
    }
    for r in prime_divisors(d as u64) {
        let h = sub(&x_pow_p_pow(d / r as u32, &f, p), &x, p);
        if gcd(&f, &h, p).len() != 1 {
            return false;
        }
    }
    true
}

/// Lowest monic irreducible of degree `d`, comparing coefficient vectors
/// lexicographically from the constant term up.
pub fn lowest_irreducible(p: u64, d: u32) -> Vec<u64> {
    if d == 1 {
        return vec![0, 1];
    }
    let mut c = vec![0u64; d as usize];
    // c0 = 0 is always reducible for d > 1.
    c[0] = 1;
    loop {
        let mut f = c.clone();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
        // increment with c[d-1] least significant
        let mut i = d as usize - 1;
        loop {
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
            i -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_lowest() {
        assert_eq!(lowest_irreducible(2, 1), vec![0, 1]);
        assert_eq!(lowest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(lowest_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(lowest_irreducible(2, 3), vec![1, 0, 1, 1]);
        assert_eq!(lowest_irreducible(2, 4), vec![1, 0, 0, 1, 1]);
    }

    #[test]
    fn rabin_rejects_products() {
        // (X^2+X+1)^2 = X^4+X^2+1 over F_2
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        // X^2+1 = (X+1)^2 over F_2
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1], 3));
    }
}
