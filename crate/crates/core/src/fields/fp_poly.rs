//! Polynomials over a prime field `F_p`, coefficients low-to-high in `u64`.
//!
//! These back the construction of extension fields (modulus search,
//! irreducibility) and are also usable as a table-free model of `F_p[x]/(f)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub type FpPoly = Vec<u64>;

pub fn inv_mod(a: u64, p: u64) -> u64 {
    crate::arith::pow_mod(a, p - 2, p)
}

pub fn trim(mut f: FpPoly) -> FpPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub fn add(f: &[u64], g: &[u64], p: u64) -> FpPoly {
    let n = f.len().max(g.len());
    trim(
        (0..n)
            .map(|i| (f.get(i).copied().unwrap_or(0) + g.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn sub(f: &[u64], g: &[u64], p: u64) -> FpPoly {
    let n = f.len().max(g.len());
    trim(
        (0..n)
            .map(|i| (f.get(i).copied().unwrap_or(0) + p - g.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn mul(f: &[u64], g: &[u64], p: u64) -> FpPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    trim(out)
}

/// Remainder of `f` modulo a nonzero `g`.
pub fn rem(f: &[u64], g: &[u64], p: u64) -> FpPoly {
    let dg = degree(g).expect("division by zero polynomial");
    let lead_inv = inv_mod(g[dg], p);
    let mut r = trim(f.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let c = r[dr] * lead_inv % p;
        let shift = dr - dg;
        for (j, &b) in g[..=dg].iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * b % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Monic greatest common divisor.
pub fn gcd(f: &[u64], g: &[u64], p: u64) -> FpPoly {
    let mut a = trim(f.to_vec());
    let mut b = trim(g.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    make_monic(a, p)
}

pub fn make_monic(f: FpPoly, p: u64) -> FpPoly {
    match degree(&f) {
        None => f,
        Some(d) => {
            let inv = inv_mod(f[d], p);
            f.into_iter().map(|c| c * inv % p).collect()
        }
    }
}

pub fn mul_mod(f: &[u64], g: &[u64], modulus: &[u64], p: u64) -> FpPoly {
    rem(&mul(f, g, p), modulus, p)
}

pub fn pow_mod(base: &[u64], exp: u64, modulus: &[u64], p: u64) -> FpPoly {
    pow_mod_big(base, &BigUint::from(exp), modulus, p)
}

pub fn pow_mod_big(base: &[u64], exp: &BigUint, modulus: &[u64], p: u64) -> FpPoly {
    let mut acc: FpPoly = rem(&[1], modulus, p);
    let b = rem(base, modulus, p);
    for i in (0..exp.bits()).rev() {
        acc = mul_mod(&acc, &acc, modulus, p);
        if exp.bit(i) {
            acc = mul_mod(&acc, &b, modulus, p);
        }
    }
    acc
}

/// Ben-Or irreducibility test for a polynomial of positive degree.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let Some(k) = degree(f) else { return false };
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let x: FpPoly = vec![0, 1];
    let mut h = rem(&x, f, p);
    for _ in 1..=k / 2 {
        h = pow_mod(&h, p, f, p);
        let g = gcd(&sub(&h, &x, p), f, p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Monic polynomials of degree `k`, enumerated lexicographically by the
/// coefficient vector `(c_0, c_1, …, c_{k-1})` with `c_0` compared first.
pub fn monic_lex(p: u64, k: usize) -> impl Iterator<Item = FpPoly> {
    let total = p.pow(k as u32);
    (0..total).map(move |t| {
        let mut digits = vec![0u64; k + 1];
        let mut t = t;
        for i in (0..k).rev() {
            digits[i] = t % p;
            t /= p;
        }
        digits[k] = 1;
        digits
    })
}

/// Lexicographically smallest monic irreducible polynomial of degree `k`.
pub fn smallest_irreducible(p: u64, k: usize) -> FpPoly {
    monic_lex(p, k)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Reduces integer coefficients modulo `p`.
pub fn from_signed(coeffs: &[i64], p: u64) -> FpPoly {
    let pi = p as i64;
    trim(coeffs.iter().map(|&c| c.rem_euclid(pi) as u64).collect())
}

/// Evaluates whether `z` (an element of `F_p[x]/(modulus)`) is 1.
pub fn is_one(z: &[u64]) -> bool {
    z.len() == 1 && z[0] == 1
}

/// Order of the multiplicative group of `F_p[x]/(f)` for irreducible `f`.
pub fn unit_group_order(p: u64, k: usize) -> BigUint {
    BigUint::from(p).pow(k as u32) - BigUint::one()
}

pub fn is_zero(z: &[u64]) -> bool {
    z.iter().all(Zero::is_zero)
}
