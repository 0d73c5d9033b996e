//! Table-driven finite fields `F_{p^k}`.
//!
//! An element is stored as the integer `c_0 + c_1 p + … + c_{k-1} p^{k-1}`
//! of its coefficient vector in the basis `1, x, …, x^{k-1}` of
//! `F_p[x]/(m)`, where `m` is the lexicographically smallest monic
//! irreducible polynomial of degree `k`.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{checked_pow, gcd, is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::fields::fp_poly::{self, FpPoly};

/// Largest field order represented with log/antilog tables.
pub const MAX_TABLE_ORDER: u64 = 1 << 22;

pub struct FqField {
    p: u64,
    k: u32,
    q: u64,
    modulus: FpPoly,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl core::fmt::Debug for FqField {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FqField")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for FqField {}

impl FqField {
    /// `F_{p^k}` with the canonical modulus.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidDescriptor(
                "extension degree must be positive",
            ));
        }
        if checked_pow(p, k).is_none_or(|q| q > MAX_TABLE_ORDER) {
            return Err(Error::FieldTooLarge {
                q: p.saturating_pow(k),
            });
        }
        let modulus = fp_poly::smallest_irreducible(p, k as usize);
        Self::with_modulus(p, modulus)
    }

    /// `F_p[x]/(modulus)`; the modulus must be monic irreducible.
    pub fn with_modulus(p: u64, modulus: FpPoly) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let modulus = fp_poly::trim(modulus);
        let k = fp_poly::degree(&modulus)
            .filter(|&d| d > 0)
            .ok_or(Error::InvalidDescriptor(
                "modulus must have positive degree",
            ))?;
        if modulus[k] != 1 || !fp_poly::is_irreducible(&modulus, p) {
            return Err(Error::InvalidDescriptor(
                "modulus must be monic irreducible",
            ));
        }
        let q = checked_pow(p, k as u32)
            .filter(|&q| q <= MAX_TABLE_ORDER)
            .ok_or(Error::FieldTooLarge {
                q: p.saturating_pow(k as u32),
            })?;
        let mut field = FqField {
            p,
            k: k as u32,
            q,
            modulus,
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as usize;
        let order_primes = prime_divisors(self.q - 1);
        let g = self
            .elements_lex()
            .filter(|&e| e != 0)
            .find(|&e| {
                let poly = self.to_poly(e);
                order_primes.iter().all(|&l| {
                    let z = fp_poly::pow_mod(&poly, (self.q - 1) / l, &self.modulus, self.p);
                    !fp_poly::is_one(&z)
                })
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; n];
        let mut log = vec![0u32; self.q as usize];
        let gpoly = self.to_poly(g);
        let mut cur: FpPoly = vec![1];
        for (i, slot) in exp.iter_mut().enumerate() {
            let e = self.from_poly(&cur);
            *slot = e;
            log[e as usize] = i as u32;
            cur = fp_poly::mul_mod(&cur, &gpoly, &self.modulus, self.p);
        }
        self.generator = g;
        self.exp = exp;
        self.log = log;
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The primitive element used for the log tables: the smallest element of
    /// multiplicative order `q - 1` in lexicographic coefficient order.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn to_poly(&self, e: u32) -> FpPoly {
        let mut e = e as u64;
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(e % self.p);
            e /= self.p;
        }
        fp_poly::trim(out)
    }

    pub fn coeffs(&self, e: u32) -> Vec<u64> {
        let mut c = self.to_poly(e);
        c.resize(self.k as usize, 0);
        c
    }

    pub fn from_poly(&self, f: &[u64]) -> u32 {
        let r = fp_poly::rem(f, &self.modulus, self.p);
        r.iter().rev().fold(0u64, |acc, &c| acc * self.p + c) as u32
    }

    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Element whose coefficient vector is the `i`-th unit vector, i.e. `x^i`.
    pub fn basis(&self, i: u32) -> u32 {
        debug_assert!(i < self.k);
        self.p.pow(i) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            return ((a as u64 + b as u64) % self.p) as u32;
        }
        let (mut a, mut b) = (a as u64, b as u64);
        let (mut out, mut place) = (0u64, 1u64);
        while a > 0 || b > 0 {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a as u64;
        let (mut out, mut place) = (0u64, 1u64);
        while a > 0 {
            out += (self.p - a % self.p) % self.p * place;
            a /= self.p;
            place *= self.p;
        }
        out as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let s = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n;
        self.exp[s as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize] as u64) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.q - 1;
        let s = (self.log[a as usize] as u128 * e as u128 % n as u128) as u64;
        self.exp[s as usize]
    }

    /// Discrete logarithm to the base of [`generator`](Self::generator).
    pub fn log(&self, a: u32) -> Option<u64> {
        (a != 0).then(|| self.log[a as usize] as u64)
    }

    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % (self.q - 1)) as usize]
    }

    pub fn mult_order(&self, a: u32) -> Option<u64> {
        let l = self.log(a)?;
        let n = self.q - 1;
        Some(n / gcd(l, n))
    }

    /// Canonical primitive `n`-th root of unity `g^{(q-1)/n}`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Option<u32> {
        let m = self.q - 1;
        (n > 0 && m.is_multiple_of(n)).then(|| self.exp[(m / n) as usize % m as usize])
    }

    /// Frobenius `a ↦ a^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p)
    }

    /// Degree over `F_p` of the subfield generated by `a`.
    pub fn element_degree(&self, a: u32) -> u32 {
        let mut b = self.frobenius(a);
        let mut d = 1;
        while b != a {
            b = self.frobenius(b);
            d += 1;
        }
        d
    }

    /// Membership in the subfield `F_{p^j}` (requires `j | k`).
    pub fn in_subfield(&self, a: u32, j: u32) -> bool {
        self.k.is_multiple_of(j) && self.pow(a, self.p.pow(j)) == a
    }

    /// Rank in lexicographic coefficient order (`c_0` most significant).
    pub fn lex_rank(&self, e: u32) -> u64 {
        self.coeffs(e).iter().fold(0u64, |acc, &c| acc * self.p + c)
    }

    /// All elements in lexicographic coefficient order (`c_0` compared first).
    pub fn elements_lex(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.q).map(move |t| {
            // t's base-p digits, most significant first, are (c_0, …, c_{k-1})
            let mut digits = vec![0u64; self.k as usize];
            let mut t = t;
            for i in (0..self.k as usize).rev() {
                digits[i] = t % self.p;
                t /= self.p;
            }
            digits.iter().rev().fold(0u64, |acc, &c| acc * self.p + c) as u32
        })
    }

    /// F_p-linear independence of a family of elements (Gaussian elimination).
    pub fn fp_rank(&self, elems: &[u32]) -> usize {
        let p = self.p;
        let mut rows: Vec<Vec<u64>> = elems.iter().map(|&e| self.coeffs(e)).collect();
        let mut rank = 0;
        for col in 0..self.k as usize {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = fp_poly::inv_mod(rows[rank][col], p);
            let prow: Vec<u64> = rows[rank].iter().map(|&c| c * inv % p).collect();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let f = row[col];
                    for (c, v) in row.iter_mut().enumerate() {
                        *v = (*v + p - f * prow[c] % p) % p;
                    }
                }
            }
            rows[rank] = prow;
            rank += 1;
        }
        rank
    }

    /// Image of every element under an embedding into `big`, obtained by
    /// sending `x` to the lexicographically smallest root of the modulus.
    pub fn embedding_into(&self, big: &FqField) -> Option<Vec<u32>> {
        if big.p != self.p || !big.k.is_multiple_of(self.k) {
            return None;
        }
        let eval = |root: u32, f: &[u64]| {
            f.iter()
                .rev()
                .fold(0u32, |acc, &c| big.add(big.mul(acc, root), c as u32))
        };
        let root = big.elements_lex().find(|&r| eval(r, &self.modulus) == 0)?;
        Some(
            (0..self.q as u32)
                .map(|e| eval(root, &self.to_poly(e)))
                .collect(),
        )
    }

    /// Smallest root (lexicographic order) of an integer polynomial reduced mod p.
    pub fn smallest_root(&self, coeffs: &[i64]) -> Option<u32> {
        let f = fp_poly::from_signed(coeffs, self.p);
        self.elements_lex().find(|&r| {
            f.iter()
                .rev()
                .fold(0u32, |acc, &c| self.add(self.mul(acc, r), c as u32))
                == 0
        })
    }
}
