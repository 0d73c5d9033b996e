//! The groups `G(n, p^r)`: an elementary abelian `p`-group `V` of rank `r`
//! carrying an `F_p(ζ_n²)`-structure, extended by a cyclic group of order
//! `n` acting through multiplication by `ζ_n²`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fields::{ConcreteField, FieldElem, FqField};
use crate::groups::descriptor::{gnpr_degree_s, GroupDescriptor};
use crate::groups::matrix::{close_generated, MatrixGroup};
use crate::groups::table::{Bits, FiniteGroup};
use crate::mat2::Mat2;

/// Generator labels `σ_ij` (a `t × s` grid) and `τ` inside some group,
/// together with the coefficients `a_1, …, a_s` of the wrap relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnprLabels {
    pub n: u64,
    pub p: u64,
    pub sigma: Vec<Vec<u32>>,
    /// Label of `τ`; `0` (the identity) when `n = 1`.
    pub tau: u32,
    /// `f(X) = X^s - a_s X^{s-1} - … - a_1` is the minimal polynomial of `ζ_n²`.
    pub wrap: Vec<u64>,
}

fn check_params(n: u64, p: u64, r: u32) -> Result<u32> {
    GroupDescriptor::Gnpr { n, p, r }.validate()?;
    gnpr_degree_s(n, p)
}

/// Minimal polynomial over `F_p` of an element, as coefficients low to high.
pub fn fp_minpoly(f: &FqField, a: u32) -> Vec<u64> {
    let mut poly: Vec<u32> = vec![1];
    let mut c = a;
    loop {
        // poly ← poly · (X − c)
        let mut next = vec![0u32; poly.len() + 1];
        for (i, &co) in poly.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], co);
            next[i] = f.sub(next[i], f.mul(co, c));
        }
        poly = next;
        c = f.frobenius(c);
        if c == a {
            break;
        }
    }
    poly.into_iter()
        .map(|x| {
            debug_assert!((x as u64) < f.characteristic());
            x as u64
        })
        .collect()
}

fn wrap_coefficients(minpoly: &[u64], p: u64) -> Vec<u64> {
    let s = minpoly.len() - 1;
    (0..s).map(|j| (p - minpoly[j] % p) % p).collect()
}

/// Abstract `G(n, p^r)` with its canonical generator labels. The label
/// of `(v, k)` is `code(v) + p^r·k`, where `v ∈ F_{p^s}^t` is packed in
/// base `p^s` and the product is `(v₁, k₁)(v₂, k₂) = (v₁ + w^{k₁} v₂, k₁ + k₂)`
/// for the canonical primitive `n/gcd(n,2)`-th root of unity `w`.
pub fn make_gnpr_abstract_labeled(n: u64, p: u64, r: u32) -> Result<(FiniteGroup, GnprLabels)> {
    let s = check_params(n, p, r)?;
    let t = r / s;
    let fs = FqField::new(p, s)?;
    let big_q = fs.order() as u32;
    let w = fs
        .primitive_root_of_unity(n / crate::arith::gcd(n, 2))
        .unwrap();
    let vsize = (p.pow(r)) as u32;
    let order = vsize as u64 * n;
    if order > u32::MAX as u64 / 2 {
        return Err(Error::CapExceeded {
            cap: u32::MAX as usize / 2,
        });
    }
    let decode = |x: u32| -> (Vec<u32>, u64) {
        let (mut v, k) = (x % vsize, (x / vsize) as u64);
        let mut comps = Vec::with_capacity(t as usize);
        for _ in 0..t {
            comps.push(v % big_q);
            v /= big_q;
        }
        (comps, k)
    };
    let wpow: Vec<u32> = (0..n).map(|k| fs.pow(w, k)).collect();
    let g = FiniteGroup::from_fn(order as usize, |x, y| {
        let (v1, k1) = decode(x);
        let (v2, k2) = decode(y);
        let m = wpow[k1 as usize];
        let code = v1
            .iter()
            .zip(&v2)
            .rev()
            .fold(0u32, |acc, (&a, &b)| acc * big_q + fs.add(a, fs.mul(m, b)));
        code + vsize * ((k1 + k2) % n) as u32
    });
    let sigma = (0..t)
        .map(|i| (0..s).map(|j| fs.pow(w, j as u64) * big_q.pow(i)).collect())
        .collect();
    let tau = if n == 1 { 0 } else { vsize };
    let labels = GnprLabels {
        n,
        p,
        sigma,
        tau,
        wrap: wrap_coefficients(&fp_minpoly(&fs, w), p),
    };
    Ok((g, labels))
}

pub fn make_gnpr_abstract(n: u64, p: u64, r: u32) -> Result<FiniteGroup> {
    Ok(make_gnpr_abstract_labeled(n, p, r)?.0)
}

/// Generator matrices of `G(n, p^r)` over `field`: unipotents
/// `σ_ij = [[1, ζ^{2(j-1)} β_i], [0, 1]]` and `τ = [[ζ_n, a], [0, ζ_n⁻¹]]`
/// (omitted when `n = 1`). The `β_i` are the first powers of the field
/// generator that are independent over `F_p(ζ_n²)`.
pub fn gnpr_generators(
    n: u64,
    p: u64,
    r: u32,
    field: &ConcreteField,
    a: &FieldElem,
) -> Result<(Vec<Vec<Mat2>>, Option<Mat2>)> {
    let s = check_params(n, p, r)?;
    let fq = field.as_finite().ok_or(Error::NotFinite)?;
    if fq.characteristic() != p {
        return Err(Error::FieldMismatch);
    }
    if n <= 2 && !field.is_zero(a) {
        return Err(Error::InvalidGnprParams { n, p, r });
    }
    let zeta = fq
        .primitive_root_of_unity(n)
        .ok_or(Error::MissingRoots("zeta_n"))?;
    let w = fq.mul(zeta, zeta);
    let t = (r / s) as usize;
    let mut span: Vec<u32> = Vec::new();
    let mut betas = Vec::new();
    for i in 0..fq.degree() {
        if betas.len() == t {
            break;
        }
        let b = fq.basis(i);
        let orbit: Vec<u32> = (0..s as u64).map(|j| fq.mul(fq.pow(w, j), b)).collect();
        let mut trial = span.clone();
        trial.extend(&orbit);
        if fq.fp_rank(&trial) == trial.len() {
            span = trial;
            betas.push(b);
        }
    }
    if betas.len() < t {
        return Err(Error::FieldTooSmall);
    }
    let unip = |v: u32| Mat2::new(field.one(), FieldElem::Fin(v), field.zero(), field.one());
    let sigma = betas
        .iter()
        .map(|&b| {
            (0..s as u64)
                .map(|j| unip(fq.mul(fq.pow(w, j), b)))
                .collect()
        })
        .collect();
    let tau = (n > 1).then(|| {
        Mat2::new(
            FieldElem::Fin(zeta),
            a.clone(),
            field.zero(),
            FieldElem::Fin(fq.inv(zeta).unwrap()),
        )
    });
    Ok((sigma, tau))
}

pub fn make_gnpr_matrix_labeled(
    n: u64,
    p: u64,
    r: u32,
    field: &ConcreteField,
    a: &FieldElem,
    cap: usize,
) -> Result<(MatrixGroup, GnprLabels)> {
    let (sigma, tau) = gnpr_generators(n, p, r, field, a)?;
    let mut gens: Vec<Mat2> = sigma.iter().flatten().cloned().collect();
    gens.extend(tau.iter().cloned());
    let mg = close_generated(field, &gens, cap)?;
    let fq = field.as_finite().unwrap();
    let zeta = fq.primitive_root_of_unity(n).unwrap();
    let labels = GnprLabels {
        n,
        p,
        sigma: sigma
            .iter()
            .map(|row| row.iter().map(|m| mg.index_of(m).unwrap()).collect())
            .collect(),
        tau: tau.map_or(0, |m| mg.index_of(&m).unwrap()),
        wrap: wrap_coefficients(&fp_minpoly(fq, fq.mul(zeta, zeta)), p),
    };
    Ok((mg, labels))
}

pub fn make_gnpr_matrix(
    n: u64,
    p: u64,
    r: u32,
    field: &ConcreteField,
    a: &FieldElem,
) -> Result<MatrixGroup> {
    let order = GroupDescriptor::Gnpr { n, p, r }
        .order()
        .unwrap_or(u64::MAX);
    Ok(make_gnpr_matrix_labeled(n, p, r, field, a, order.min(usize::MAX as u64) as usize)?.0)
}

/// Whether the labelled elements satisfy the defining relations of
/// `G(n, p^r)` and generate a group of order `n·p^r`, so that `g` is a
/// quotient of the presented group of the same order, hence isomorphic.
pub fn check_gnpr_presentation(g: &FiniteGroup, labels: &GnprLabels) -> bool {
    let (n, p) = (labels.n, labels.p);
    let s = labels.wrap.len();
    if labels.sigma.is_empty() || labels.sigma.iter().any(|row| row.len() != s) {
        return false;
    }
    let all: Vec<u32> = labels.sigma.iter().flatten().copied().collect();
    if all
        .iter()
        .chain([&labels.tau])
        .any(|&x| x as usize >= g.order())
    {
        return false;
    }
    let tau = labels.tau;
    let conj = |x: u32| g.conj(tau, x);
    let relations = all.iter().all(|&x| g.pow(x, p) == 0)
        && g.pow(tau, n) == 0
        && all
            .iter()
            .all(|&x| all.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        && labels.sigma.iter().all(|row| {
            (0..s - 1).all(|j| conj(row[j]) == row[j + 1])
                && conj(row[s - 1])
                    == row
                        .iter()
                        .zip(&labels.wrap)
                        .fold(0, |acc, (&x, &a)| g.mul(acc, g.pow(x, a)))
        });
    if !relations {
        return false;
    }
    let r = (s * labels.sigma.len()) as u32;
    let mut gens = all;
    gens.push(tau);
    let expect = p.pow(r) * n;
    g.order() as u64 == expect && g.generated(&gens).len() as u64 == expect
}

/// `(n, r)` when the `p`-elements form a normal elementary abelian subgroup
/// `Q` of order `p^r` with cyclic quotient of order `n`.
pub fn recognize_gnpr(g: &FiniteGroup, p: u64) -> Option<(u64, u32)> {
    let total = g.order() as u64;
    if p < 2 || !total.is_multiple_of(p) {
        return None;
    }
    let (mut m, mut r) = (total, 0u32);
    while m % p == 0 {
        m /= p;
        r += 1;
    }
    let orders = g.orders();
    let q: Vec<u32> = g
        .elements()
        .filter(|&x| orders[x as usize] == 1 || orders[x as usize] == p)
        .collect();
    let p_elements = orders.iter().filter(|&&o| {
        let mut o = o;
        while o % p == 0 {
            o /= p;
        }
        o == 1
    });
    // every p-element has order p and together they form a subgroup of order p^r
    if p_elements.count() != q.len() || q.len() as u64 != p.pow(r) {
        return None;
    }
    let bits = Bits::from_iter(g.order(), q.iter().copied());
    if !g.is_subgroup(&bits)
        || !q
            .iter()
            .all(|&x| q.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    {
        return None;
    }
    // a complement of order m exists (Schur–Zassenhaus); it is cyclic iff
    // some element has order m
    orders.contains(&m).then_some((m, r))
}
