//! Dense polynomials over a prime field GF(p), coefficients low to high.
//! Used to validate moduli and to search for Conway polynomials.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::arith::{divisors, prime_factors};

pub type Poly = Vec<u32>;

fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64 % p as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

pub fn sub(f: &[u32], g: &[u32], p: u32) -> Poly {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| {
            let a = f.get(i).copied().unwrap_or(0);
            let b = g.get(i).copied().unwrap_or(0);
            (a + p - b) % p
        })
        .collect();
    trim(out)
}

pub fn mul(f: &[u32], g: &[u32], p: u32) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a as u64 * b as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `f` modulo a nonzero `g`.
pub fn rem(f: &[u32], g: &[u32], p: u32) -> Poly {
    let g = trim(g.to_vec());
    let mut r = trim(f.to_vec());
    let dg = g.len() - 1;
    let lead_inv = inv_mod(g[dg], p) as u64;
    while r.len() > dg {
        let shift = r.len() - 1 - dg;
        let c = r[r.len() - 1] as u64 * lead_inv % p as u64;
        for (i, &b) in g.iter().enumerate() {
            let t = c * b as u64 % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - t) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

pub fn mulmod(f: &[u32], g: &[u32], m: &[u32], p: u32) -> Poly {
    rem(&mul(f, g, p), m, p)
}

pub fn powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Poly {
    let mut result = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(&result, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        e >>= 1;
    }
    rem(&result, m, p)
}

pub fn gcd(f: &[u32], g: &[u32], p: u32) -> Poly {
    let (mut a, mut b) = (trim(f.to_vec()), trim(g.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let li = inv_mod(lead, p) as u64;
        a.iter_mut().for_each(|c| *c = (*c as u64 * li % p as u64) as u32);
    }
    a
}

/// `x^(p^k) mod f`, by repeated p-th powering.
fn frobenius_power_of_x(k: u32, f: &[u32], p: u32) -> Poly {
    let mut x = rem(&[0, 1], f, p);
    for _ in 0..k {
        x = powmod(&x, p as u64, f, p);
    }
    x
}

/// Rabin's irreducibility test for a monic `f` of degree `m >= 1`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = (f.len() - 1) as u32;
    if m == 1 {
        return true;
    }
    let x = vec![0, 1];
    if sub(&frobenius_power_of_x(m, f, p), &rem(&x, f, p), p) != Vec::<u32>::new() {
        return false;
    }
    prime_factors(m as u64).into_iter().all(|r| {
        let h = sub(&frobenius_power_of_x(m / r as u32, f, p), &x, p);
        gcd(&h, f, p) == vec![1]
    })
}

/// For irreducible `f` of degree `m`, whether `x` has order `p^m - 1` modulo `f`.
pub fn root_is_primitive(f: &[u32], p: u32) -> bool {
    let m = (f.len() - 1) as u32;
    let order = (p as u64).pow(m) - 1;
    let x = vec![0, 1];
    if powmod(&x, order, f, p) != vec![1] {
        return false;
    }
    prime_factors(order)
        .into_iter()
        .all(|r| powmod(&x, order / r, f, p) != vec![1])
}

/// Evaluates `g` (over GF(p)) at the residue class `r` modulo `f`.
fn eval_at(g: &[u32], r: &[u32], f: &[u32], p: u32) -> Poly {
    let mut acc: Poly = Vec::new();
    for &c in g.iter().rev() {
        acc = mulmod(&acc, r, f, p);
        acc = trim(add_const(&acc, c, p));
    }
    acc
}

fn add_const(f: &[u32], c: u32, p: u32) -> Poly {
    let mut out = if f.is_empty() { vec![0] } else { f.to_vec() };
    out[0] = (out[0] + c) % p;
    out
}

fn cache() -> &'static Mutex<HashMap<(u32, u32), Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Conway polynomial C(p, m), monic, coefficients low to high.
///
/// Candidates are ordered by the sequence (a_{m-1}, ..., a_0), where the
/// coefficient of x^i is (-1)^(m-i) a_i; the first primitive candidate that
/// is compatible with C(p, d) for every proper divisor d of m is returned.
pub fn conway(p: u32, m: u32) -> Poly {
    if let Some(f) = cache().lock().unwrap().get(&(p, m)) {
        return f.clone();
    }
    let subs: Vec<(u64, Poly)> = divisors(m as u64)
        .into_iter()
        .filter(|&d| d < m as u64)
        .map(|d| (d, conway(p, d as u32)))
        .collect();
    let order = (p as u64).pow(m) - 1;
    let total = (p as u64).pow(m);
    let mut found = None;
    for idx in 0..total {
        // a_i is the i-th base-p digit of idx, so a_{m-1} is most significant
        let mut a = vec![0u32; m as usize];
        let mut t = idx;
        for ai in a.iter_mut() {
            *ai = (t % p as u64) as u32;
            t /= p as u64;
        }
        let f: Poly = (0..=m as usize)
            .map(|i| {
                if i == m as usize {
                    1
                } else {
                    let sign_odd = (m as usize - i) % 2 == 1;
                    if sign_odd {
                        (p - a[i]) % p
                    } else {
                        a[i]
                    }
                }
            })
            .collect();
        if f[0] == 0 || !is_irreducible(&f, p) || !root_is_primitive(&f, p) {
            continue;
        }
        let compatible = subs.iter().all(|(d, cd)| {
            let e = order / ((p as u64).pow(*d as u32) - 1);
            let r = powmod(&[0, 1], e, &f, p);
            eval_at(cd, &r, &f, p).is_empty()
        });
        if compatible {
            found = Some(f);
            break;
        }
    }
    let f = found.expect("a Conway polynomial always exists");
    cache().lock().unwrap().insert((p, m), f.clone());
    f
}
