//! Finite field contexts `F_{q^n}` with `q = p^e`, and their elements.
//!
//! An element is a 64-bit packed coordinate vector over F_p (base-p digits,
//! constant term least significant) tagged with the id of its context.
//! Fields of order at most [`TABLE_LIMIT`] use log/antilog tables (plus Zech
//! logarithms for odd p); larger fields use digit-polynomial arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::fp_poly;
use super::numth::{checked_pow, gcd, is_prime, mulmod, prime_divisors};
use crate::error::{Error, Result};

pub const TABLE_LIMIT: u64 = 1 << 20;
const MAX_DEG: usize = 64;
const NO_LOG: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    ctx: u64,
    v: u64,
}

impl FieldElement {
    /// Packed coordinate index in `0..order`.
    pub fn index(self) -> u64 {
        self.v
    }
    pub fn ctx_id(self) -> u64 {
        self.ctx
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

struct Arith {
    p: u64,
    deg: usize,
    order: u64,
    modulus: Vec<u64>,
    mod_bits: u128,
    generator: u64,
    tables: Option<Tables>,
    frob_pow: Vec<u64>,
    frob_p: OnceLock<Vec<[u64; MAX_DEG]>>,
}

type Digits = [u64; MAX_DEG];

impl Arith {
    fn new(p: u64, modulus: Vec<u64>) -> Arith {
        let deg = modulus.len() - 1;
        let order = checked_pow(p, deg as u32).expect("checked by caller");
        let mod_bits = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .fold(0u128, |acc, (i, &c)| acc | ((c as u128) << i))
        } else {
            0
        };
        let mut ar = Arith {
            p,
            deg,
            order,
            modulus,
            mod_bits,
            generator: 0,
            tables: None,
            frob_pow: Vec::new(),
            frob_p: OnceLock::new(),
        };
        ar.generator = ar.find_generator();
        if order <= TABLE_LIMIT && deg > 1 {
            ar.tables = Some(ar.build_tables());
            let m = order - 1;
            ar.frob_pow = (0..deg as u64).map(|j| super::numth::powmod(p, j, m)).collect();
        }
        ar
    }

    fn decode(&self, mut v: u64) -> Digits {
        let mut d = [0u64; MAX_DEG];
        if self.p == 2 {
            for (i, di) in d.iter_mut().enumerate().take(self.deg) {
                *di = (v >> i) & 1;
            }
        } else {
            for di in d.iter_mut().take(self.deg) {
                *di = v % self.p;
                v /= self.p;
            }
        }
        d
    }

    fn encode(&self, d: &[u64]) -> u64 {
        let mut v = 0u64;
        for i in (0..self.deg).rev() {
            v = v * self.p + d[i];
        }
        v
    }

    fn add_slow(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.deg == 1 {
            return ((a as u128 + b as u128) % self.p as u128) as u64;
        }
        let (da, db) = (self.decode(a), self.decode(b));
        let mut r = [0u64; MAX_DEG];
        for i in 0..self.deg {
            r[i] = (da[i] + db[i]) % self.p;
        }
        self.encode(&r)
    }

    fn neg_slow(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        if self.deg == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let da = self.decode(a);
        let mut r = [0u64; MAX_DEG];
        for i in 0..self.deg {
            r[i] = (self.p - da[i]) % self.p;
        }
        self.encode(&r)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.deg == 1 {
            return mulmod(a, b, self.p);
        }
        if self.p == 2 {
            let mut acc: u128 = 0;
            let mut x = a;
            let bb = b as u128;
            while x != 0 {
                let i = x.trailing_zeros();
                acc ^= bb << i;
                x &= x - 1;
            }
            let d = self.deg;
            for i in (d..2 * d - 1).rev() {
                if (acc >> i) & 1 == 1 {
                    acc ^= self.mod_bits << (i - d);
                }
            }
            return acc as u64;
        }
        let p = self.p;
        let (da, db) = (self.decode(a), self.decode(b));
        let d = self.deg;
        let mut r = [0u128; 2 * MAX_DEG];
        for i in 0..d {
            if da[i] == 0 {
                continue;
            }
            for j in 0..d {
                r[i + j] += da[i] as u128 * db[j] as u128;
            }
        }
        let mut rr = [0u64; 2 * MAX_DEG];
        for i in 0..2 * d - 1 {
            rr[i] = (r[i] % p as u128) as u64;
        }
        for i in (d..2 * d - 1).rev() {
            let c = rr[i];
            if c == 0 {
                continue;
            }
            for j in 0..d {
                let k = i - d + j;
                rr[k] = (rr[k] + p - mulmod(c, self.modulus[j], p)) % p;
            }
            rr[i] = 0;
        }
        self.encode(&rr[..d])
    }

    fn pow_slow(&self, a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_slow(r, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        r
    }

    fn find_generator(&self) -> u64 {
        let m = self.order - 1;
        let primes = prime_divisors(m);
        (1..self.order)
            .find(|&v| primes.iter().all(|&r| self.pow_slow(v, m / r) != 1))
            .expect("multiplicative group is cyclic")
    }

    fn build_tables(&self) -> Tables {
        let m = (self.order - 1) as usize;
        let mut exp = vec![0u32; 2 * m];
        let mut log = vec![NO_LOG; self.order as usize];
        let mut x = 1u64;
        for i in 0..m {
            exp[i] = x as u32;
            exp[i + m] = x as u32;
            log[x as usize] = i as u32;
            x = self.mul_slow(x, self.generator);
        }
        let zech = if self.p == 2 {
            Vec::new()
        } else {
            (0..m)
                .map(|d| {
                    let s = self.add_slow(1, exp[d] as u64);
                    if s == 0 {
                        NO_LOG
                    } else {
                        log[s as usize]
                    }
                })
                .collect()
        };
        Tables { exp, log, zech }
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        if let Some(t) = &self.tables {
            if a == 0 {
                return b;
            }
            if b == 0 {
                return a;
            }
            let m = self.order as u32 - 1;
            let la = t.log[a as usize];
            let lb = t.log[b as usize];
            let d = if lb >= la { lb - la } else { lb + m - la };
            let z = t.zech[d as usize];
            if z == NO_LOG {
                return 0;
            }
            return t.exp[(la + z) as usize] as u64;
        }
        self.add_slow(a, b)
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        if let Some(t) = &self.tables {
            if a == 0 || b == 0 {
                return 0;
            }
            return t.exp[(t.log[a as usize] + t.log[b as usize]) as usize] as u64;
        }
        self.mul_slow(a, b)
    }

    fn pow(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let m = self.order - 1;
            let l = t.log[a as usize] as u64;
            return t.exp[(l * (e % m) % m) as usize] as u64;
        }
        self.pow_slow(a, e)
    }

    fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        if let Some(t) = &self.tables {
            let m = self.order as u32 - 1;
            let l = t.log[a as usize];
            return t.exp[((m - l) % m) as usize] as u64;
        }
        self.pow_slow(a, self.order - 2)
    }

    fn frob_matrix(&self) -> &Vec<Digits> {
        self.frob_p.get_or_init(|| {
            let x = if self.deg > 1 { self.p } else { 0 };
            let xp = self.pow_slow(x, self.p);
            let mut cols = Vec::with_capacity(self.deg);
            let mut cur = 1u64;
            for _ in 0..self.deg {
                cols.push(self.decode(cur));
                cur = self.mul_slow(cur, xp);
            }
            cols
        })
    }

    /// a^(p^j)
    fn frob_p(&self, a: u64, j: u64) -> u64 {
        let j = j % self.deg as u64;
        if j == 0 || a == 0 || self.deg == 1 {
            return a;
        }
        if let Some(t) = &self.tables {
            let l = t.log[a as usize] as u64;
            return t.exp[(l * self.frob_pow[j as usize] % (self.order - 1)) as usize] as u64;
        }
        let cols = self.frob_matrix();
        let mut cur = self.decode(a);
        for _ in 0..j {
            let mut acc = [0u128; MAX_DEG];
            for (i, col) in cols.iter().enumerate() {
                let c = cur[i];
                if c == 0 {
                    continue;
                }
                for k in 0..self.deg {
                    acc[k] += c as u128 * col[k] as u128;
                }
            }
            for k in 0..self.deg {
                cur[k] = (acc[k] % self.p as u128) as u64;
            }
        }
        self.encode(&cur)
    }
}

fn arith_for(p: u64, modulus: &[u64]) -> Arc<Arith> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, Vec<u64>), Arc<Arith>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (p, modulus.to_vec());
    if let Some(a) = cache.lock().unwrap().get(&key) {
        return a.clone();
    }
    let a = Arc::new(Arith::new(p, modulus.to_vec()));
    cache.lock().unwrap().entry(key).or_insert(a).clone()
}

struct CtxInner {
    id: u64,
    p: u64,
    e: u32,
    n: u32,
    q: u64,
    ar: Arc<Arith>,
}

/// A finite field `F_{q^n}`, `q = p^e`, with a fixed defining modulus over F_p.
#[derive(Clone)]
pub struct FieldCtx(Arc<CtxInner>);

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}
impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec_string())
    }
}

fn fnv(words: &[u64]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for w in words {
        for b in w.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

impl FieldCtx {
    /// `F_{(p^e)^n}` with the lowest-lex irreducible modulus of degree `e*n`.
    pub fn new(p: u64, e: u32, n: u32) -> Result<FieldCtx> {
        Self::with_modulus(p, e, n, None)
    }

    pub fn prime(p: u64) -> Result<FieldCtx> {
        Self::new(p, 1, 1)
    }

    pub fn with_modulus(p: u64, e: u32, n: u32, modulus: Option<Vec<u64>>) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::InvalidCharacteristic(p));
        }
        if e == 0 || n == 0 {
            return Err(Error::InvalidArgument("e and n must be positive".into()));
        }
        let deg = e as u64 * n as u64;
        if deg > MAX_DEG as u64 || checked_pow(p, deg as u32).is_none() {
            return Err(Error::FieldTooLarge { p, deg });
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() as u64 != deg + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        deg + 1,
                        m.len()
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus("coefficient not reduced mod p".into()));
                }
                if m[deg as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if !fp_poly::is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            None => default_modulus(p, deg as u32),
        };
        static CACHE: OnceLock<Mutex<HashMap<Vec<u64>, FieldCtx>>> = OnceLock::new();
        let mut key = vec![p, e as u64, n as u64];
        key.extend_from_slice(&modulus);
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(c) = cache.lock().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let ar = arith_for(p, &modulus);
        let ctx = FieldCtx(Arc::new(CtxInner {
            id: fnv(&key),
            p,
            e,
            n,
            q: checked_pow(p, e).unwrap(),
            ar,
        }));
        Ok(cache.lock().unwrap().entry(key).or_insert(ctx).clone())
    }

    /// Parses `p=<p>[,e=<e>],n=<n>[,mod=<c0,c1,...>]`.
    pub fn parse(s: &str) -> Result<FieldCtx> {
        let spec: FieldSpec = s.parse()?;
        spec.build()
    }

    /// The same field tower one level up: `F_{q^(n*m)}` over the same `F_q`.
    pub fn extension(&self, m: u32) -> Result<FieldCtx> {
        FieldCtx::new(self.p(), self.e(), self.n() * m)
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }
    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn e(&self) -> u32 {
        self.0.e
    }
    pub fn n(&self) -> u32 {
        self.0.n
    }
    /// Size of the base field F_q.
    pub fn q(&self) -> u64 {
        self.0.q
    }
    /// Degree over F_p.
    pub fn deg(&self) -> u32 {
        self.0.ar.deg as u32
    }
    pub fn order(&self) -> u64 {
        self.0.ar.order
    }
    pub fn modulus(&self) -> &[u64] {
        &self.0.ar.modulus
    }
    pub fn has_tables(&self) -> bool {
        self.0.ar.tables.is_some()
    }

    pub fn spec_string(&self) -> String {
        let m: Vec<String> = self.modulus().iter().map(|c| c.to_string()).collect();
        format!("p={},e={},n={},mod={}", self.p(), self.e(), self.n(), m.join(","))
    }

    #[inline]
    fn mk(&self, v: u64) -> FieldElement {
        FieldElement { ctx: self.0.id, v }
    }

    #[inline]
    fn chk(&self, a: FieldElement) -> u64 {
        assert_eq!(a.ctx, self.0.id, "element from a different field");
        a.v
    }

    pub fn owns(&self, a: FieldElement) -> bool {
        a.ctx == self.0.id
    }

    pub fn zero(&self) -> FieldElement {
        self.mk(0)
    }
    pub fn one(&self) -> FieldElement {
        self.mk(1)
    }

    pub fn from_index(&self, v: u64) -> Result<FieldElement> {
        if v >= self.order() {
            return Err(Error::InvalidArgument(format!("index {v} out of range")));
        }
        Ok(self.mk(v))
    }

    /// Element with index `v`; panics when out of range.
    pub fn elem(&self, v: u64) -> FieldElement {
        assert!(v < self.order());
        self.mk(v)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, c: i64) -> FieldElement {
        let p = self.p() as i128;
        self.mk((((c as i128) % p + p) % p) as u64)
    }

    pub fn from_coords(&self, c: &[u64]) -> Result<FieldElement> {
        let d = self.deg() as usize;
        if c.len() > d {
            if c[d..].iter().any(|&x| x != 0) {
                return Err(Error::Parse(format!("more than {d} coordinates")));
            }
        }
        let mut digits = [0u64; MAX_DEG];
        for (i, &x) in c.iter().take(d).enumerate() {
            if x >= self.p() {
                return Err(Error::Parse(format!("coordinate {x} not reduced mod {}", self.p())));
            }
            digits[i] = x;
        }
        Ok(self.mk(self.0.ar.encode(&digits)))
    }

    pub fn coords(&self, a: FieldElement) -> Vec<u64> {
        let v = self.chk(a);
        self.0.ar.decode(v)[..self.deg() as usize].to_vec()
    }

    /// Sort key for coordinate-lexicographic order (constant term most significant).
    pub fn lex_key(&self, a: FieldElement) -> u64 {
        let d = self.0.ar.decode(self.chk(a));
        let mut k = 0u64;
        for &c in d[..self.deg() as usize].iter() {
            k = k * self.p() + c;
        }
        k
    }

    pub fn is_zero(&self, a: FieldElement) -> bool {
        self.chk(a) == 0
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mk(self.0.ar.add(self.chk(a), self.chk(b)))
    }
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.mk(self.0.ar.neg_slow(self.chk(a)))
    }
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let nb = self.neg(b);
        self.add(a, nb)
    }
    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mk(self.0.ar.mul(self.chk(a), self.chk(b)))
    }
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        self.mk(self.0.ar.pow(self.chk(a), e))
    }
    /// Panics on zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        self.mk(self.0.ar.inv(self.chk(a)))
    }
    pub fn try_inv(&self, a: FieldElement) -> Option<FieldElement> {
        if self.chk(a) == 0 {
            None
        } else {
            Some(self.inv(a))
        }
    }
    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }
    /// Multiplication by an integer.
    pub fn mul_int(&self, a: FieldElement, c: u64) -> FieldElement {
        self.mul(a, self.from_int((c % self.p()) as i64))
    }

    /// `a^(q^i)`; negative `i` gives the inverse automorphism.
    pub fn frobenius(&self, a: FieldElement, i: i64) -> FieldElement {
        let n = self.n() as i64;
        let i = i.rem_euclid(n) as u64;
        self.mk(self.0.ar.frob_p(self.chk(a), i * self.e() as u64))
    }

    /// `a^(p^j)`.
    pub fn frob_p(&self, a: FieldElement, j: u64) -> FieldElement {
        self.mk(self.0.ar.frob_p(self.chk(a), j))
    }

    /// Relative norm to F_q (as an element of this field).
    pub fn norm(&self, a: FieldElement) -> FieldElement {
        let ex = (self.order() - 1) / (self.q() - 1);
        self.pow(a, ex)
    }

    /// Relative trace to F_q (as an element of this field).
    pub fn trace(&self, a: FieldElement) -> FieldElement {
        let mut s = self.zero();
        let mut x = a;
        for _ in 0..self.n() {
            s = self.add(s, x);
            x = self.frobenius(x, 1);
        }
        s
    }

    /// True when `a` lies in the subfield F_{q^d}.
    pub fn in_subfield(&self, a: FieldElement, d: u32) -> bool {
        let d = gcd(d as u64, self.n() as u64) as i64;
        self.frobenius(a, d) == a
    }

    /// True when `a` lies in F_p.
    pub fn in_prime_field(&self, a: FieldElement) -> bool {
        self.chk(a) < self.p()
    }

    pub fn generator(&self) -> FieldElement {
        self.mk(self.0.ar.generator)
    }

    /// Logarithm to the base of [`generator`](Self::generator), when tables exist.
    pub fn log(&self, a: FieldElement) -> Option<u64> {
        let v = self.chk(a);
        if v == 0 {
            return None;
        }
        match &self.0.ar.tables {
            Some(t) => Some(t.log[v as usize] as u64),
            None => None,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |v| self.mk(v))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.order()).map(move |v| self.mk(v))
    }

    /// Elements of F_{q^d} (d must divide n), in increasing index order.
    pub fn subfield_elements(&self, d: u32) -> Vec<FieldElement> {
        assert_eq!(self.n() % d, 0);
        let sub_order = checked_pow(self.q(), d).unwrap();
        let g = self.pow(self.generator(), (self.order() - 1) / (sub_order - 1));
        let mut out = vec![self.zero()];
        let mut x = self.one();
        for _ in 0..sub_order - 1 {
            out.push(x);
            x = self.mul(x, g);
        }
        out.sort_by_key(|a| a.v);
        out
    }

    pub fn random<R: rand::Rng>(&self, rng: &mut R) -> FieldElement {
        self.mk(rng.gen_range(0..self.order()))
    }

    pub fn fmt_elem(&self, a: FieldElement) -> String {
        let c: Vec<String> = self.coords(a).iter().map(|x| x.to_string()).collect();
        c.join(",")
    }

    pub fn parse_elem(&self, s: &str) -> Result<FieldElement> {
        let c: std::result::Result<Vec<u64>, _> = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u64>())
            .collect();
        let c = c.map_err(|e| Error::Parse(format!("bad coordinate in '{s}': {e}")))?;
        self.from_coords(&c)
    }

    /// Arithmetic via digit polynomials, bypassing tables (for cross-checks).
    pub fn mul_reference(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mk(self.0.ar.mul_slow(self.chk(a), self.chk(b)))
    }
    pub fn add_reference(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mk(self.0.ar.add_slow(self.chk(a), self.chk(b)))
    }
}

fn default_modulus(p: u64, deg: u32) -> Vec<u64> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Vec<u64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = cache.lock().unwrap().get(&(p, deg)) {
        return m.clone();
    }
    let m = fp_poly::lowest_irreducible(p, deg);
    cache.lock().unwrap().insert((p, deg), m.clone());
    m
}

/// Parsed form of a field string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub e: u32,
    pub n: u32,
    pub modulus: Option<Vec<u64>>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<FieldCtx> {
        FieldCtx::with_modulus(self.p, self.e, self.n, self.modulus.clone())
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldSpec> {
        let (head, modpart) = match s.find("mod=") {
            Some(i) => (&s[..i], Some(&s[i + 4..])),
            None => (s, None),
        };
        let (mut p, mut e, mut n) = (None, 1u32, None);
        for part in head.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got '{part}'")))?;
            let bad = |_| Error::Parse(format!("bad value for {k}: '{v}'"));
            match k.trim() {
                "p" => p = Some(v.trim().parse::<u64>().map_err(bad)?),
                "e" => e = v.trim().parse::<u32>().map_err(bad)?,
                "n" => n = Some(v.trim().parse::<u32>().map_err(bad)?),
                other => return Err(Error::Parse(format!("unknown key '{other}'"))),
            }
        }
        let modulus = match modpart {
            Some(m) => Some(
                m.split(',')
                    .map(|t| t.trim().parse::<u64>())
                    .collect::<std::result::Result<Vec<u64>, _>>()
                    .map_err(|e| Error::Parse(format!("bad modulus: {e}")))?,
            ),
            None => None,
        };
        Ok(FieldSpec {
            p: p.ok_or_else(|| Error::Parse("missing p".into()))?,
            e,
            n: n.ok_or_else(|| Error::Parse("missing n".into()))?,
            modulus,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_generator_relation() {
        let f = FieldCtx::new(2, 1, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let g = f.generator();
        assert_eq!(f.square(g), f.add(g, f.one()));
    }

    #[test]
    fn f9_norm_of_generator_is_minus_one() {
        let f = FieldCtx::new(3, 1, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        let g = f.generator();
        assert_eq!(f.norm(g), f.from_int(2));
        assert_eq!(f.pow(g, 4), f.from_int(-1));
    }

    #[test]
    fn f2_modulus_is_x() {
        let f = FieldCtx::new(2, 1, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 2);
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(FieldCtx::new(4, 1, 1).unwrap_err(), Error::InvalidCharacteristic(4));
        assert_eq!(
            FieldCtx::with_modulus(2, 1, 2, Some(vec![1, 0, 1])).unwrap_err(),
            Error::ReducibleModulus
        );
        assert!(matches!(FieldCtx::new(2, 1, 64), Err(Error::FieldTooLarge { .. })));
        assert!(FieldCtx::new(2, 1, 63).is_ok());
    }

    #[test]
    fn parse_field_string() {
        let f = FieldCtx::parse("p=3,e=2,n=2").unwrap();
        assert_eq!((f.p(), f.e(), f.n(), f.q(), f.order()), (3, 2, 2, 9, 81));
        let g = FieldCtx::parse("p=2,n=3,mod=1,0,1,1").unwrap();
        assert_eq!(g.modulus(), &[1, 0, 1, 1]);
        assert!(FieldCtx::parse("p=2").is_err());
    }

    #[test]
    fn tables_agree_with_polynomial_arithmetic() {
        for (p, d) in [(2u64, 5u32), (3, 4), (5, 3), (7, 2), (2, 10)] {
            let f = FieldCtx::new(p, 1, d).unwrap();
            assert!(f.has_tables());
            let step = (f.order() / 97).max(1);
            for a in (0..f.order()).step_by(step as usize) {
                for b in (0..f.order()).step_by((step as usize) + 3) {
                    let (x, y) = (f.elem(a), f.elem(b));
                    assert_eq!(f.mul(x, y), f.mul_reference(x, y));
                    assert_eq!(f.add(x, y), f.add_reference(x, y));
                }
            }
        }
    }

    #[test]
    fn large_field_basics() {
        for (p, d) in [(2u64, 40u32), (3, 20), (65537, 2), (18446744073709551557, 1)] {
            let f = FieldCtx::new(p, 1, d).unwrap();
            assert!(!f.has_tables());
            let g = f.generator();
            let x = f.pow(g, 12345);
            assert_eq!(f.mul(x, f.inv(x)), f.one());
            assert_eq!(f.pow(x, f.order() - 1), f.one());
            assert_eq!(f.frob_p(x, 1), f.pow(x, p));
            assert_eq!(f.frobenius(x, d as i64), x);
        }
    }

    #[test]
    fn frobenius_and_subfields() {
        let f = FieldCtx::new(2, 2, 3).unwrap(); // F_64 over F_4
        let x = f.generator();
        assert_eq!(f.frobenius(x, 1), f.pow(x, 4));
        assert_eq!(f.frobenius(f.frobenius(x, 1), -1), x);
        let n = f.norm(x);
        assert!(f.in_subfield(n, 1));
        assert!(f.in_subfield(f.trace(x), 1));
        assert_eq!(f.subfield_elements(1).len(), 4);
        assert_eq!(f.subfield_elements(3).len(), 64);
    }
}
