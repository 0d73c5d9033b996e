//! Abstract multiplication-table models of every descriptor.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groups::descriptor::GroupDescriptor;
use crate::groups::gnpr::make_gnpr_abstract;
use crate::groups::matrix::make_sl2;
use crate::groups::table::FiniteGroup;

/// Largest order `make_abstract` builds a table for.
pub const MAX_ABSTRACT_ORDER: u64 = 1 << 12;

fn permutations(m: usize) -> Vec<Vec<u8>> {
    if m == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..m as u8 {
        for rest in permutations(m - 1) {
            let mut perm = alloc::vec![first];
            perm.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(perm);
        }
    }
    out
}

fn is_even(perm: &[u8]) -> bool {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    inversions % 2 == 0
}

/// Permutation group on `m` points (all or only even permutations), in
/// lexicographic order so the identity gets label 0.
fn permutation_group(m: usize, even_only: bool) -> FiniteGroup {
    let perms: Vec<Vec<u8>> = permutations(m)
        .into_iter()
        .filter(|p| !even_only || is_even(p))
        .collect();
    let index: BTreeMap<&[u8], u32> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i as u32))
        .collect();
    FiniteGroup::from_fn(perms.len(), |x, y| {
        let (a, b) = (&perms[x as usize], &perms[y as usize]);
        let prod: Vec<u8> = b.iter().map(|&i| a[i as usize]).collect();
        index[prod.as_slice()]
    })
}

pub fn make_abstract(d: &GroupDescriptor) -> Result<FiniteGroup> {
    d.validate()?;
    let order = d.order().filter(|&o| o <= MAX_ABSTRACT_ORDER);
    if order.is_none() {
        return Err(Error::CapExceeded {
            cap: MAX_ABSTRACT_ORDER as usize,
        });
    }
    Ok(match *d {
        GroupDescriptor::Trivial => FiniteGroup::trivial(),
        GroupDescriptor::Cyclic(n) => {
            let n = n as u32;
            FiniteGroup::from_fn(n as usize, |x, y| (x + y) % n)
        }
        GroupDescriptor::Dihedral(n) => {
            // σ^k τ^e ↦ k + n·e, with τ σ τ⁻¹ = σ⁻¹
            let n = n as u32;
            FiniteGroup::from_fn(2 * n as usize, |x, y| {
                let (k1, e1, k2, e2) = (x % n, x / n, y % n, y / n);
                let k2 = if e1 == 1 { (n - k2) % n } else { k2 };
                (k1 + k2) % n + n * (e1 ^ e2)
            })
        }
        GroupDescriptor::BinaryDihedral(n) => {
            // σ^a τ^e ↦ a + 2n·e, with τ² = σ^n and τ σ τ⁻¹ = σ⁻¹
            let m = 2 * n as u32;
            FiniteGroup::from_fn(2 * m as usize, |x, y| {
                let (a, e, b, f) = (x % m, x / m, y % m, y / m);
                let b = if e == 1 { (m - b) % m } else { b };
                let extra = if e == 1 && f == 1 { m / 2 } else { 0 };
                (a + b + extra) % m + m * (e ^ f)
            })
        }
        GroupDescriptor::ElemAbelian { p, r } => {
            let p = p as u32;
            FiniteGroup::from_fn(p.pow(r) as usize, |x, y| {
                let (mut x, mut y, mut out, mut place) = (x, y, 0, 1);
                for _ in 0..r {
                    out += (x % p + y % p) % p * place;
                    x /= p;
                    y /= p;
                    place *= p;
                }
                out
            })
        }
        GroupDescriptor::Gnpr { n, p, r } => make_gnpr_abstract(n, p, r)?,
        GroupDescriptor::SL2(q) => make_sl2(q)?.abstract_group(),
        GroupDescriptor::Alt4 => permutation_group(4, true),
        GroupDescriptor::Alt5 => permutation_group(5, true),
        GroupDescriptor::Sym4 => permutation_group(4, false),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::iso::are_isomorphic;

    #[test]
    fn advertised_orders() {
        let cases = [
            (GroupDescriptor::Cyclic(6), 6),
            (GroupDescriptor::Dihedral(3), 6),
            (GroupDescriptor::Dihedral(1), 2),
            (GroupDescriptor::BinaryDihedral(3), 12),
            (GroupDescriptor::Gnpr { n: 3, p: 2, r: 2 }, 12),
            (GroupDescriptor::SL2(3), 24),
            (GroupDescriptor::ElemAbelian { p: 3, r: 2 }, 9),
            (GroupDescriptor::Alt4, 12),
            (GroupDescriptor::Alt5, 60),
            (GroupDescriptor::Sym4, 24),
            (GroupDescriptor::Trivial, 1),
        ];
        for (d, n) in cases {
            let g = make_abstract(&d).unwrap();
            assert_eq!(g.order(), n, "{d}");
            assert!(g.is_associative(), "{d}");
        }
    }

    #[test]
    fn catalog_examples() {
        assert!(make_abstract(&GroupDescriptor::Cyclic(6))
            .unwrap()
            .is_abelian());
        assert!(!make_abstract(&GroupDescriptor::Dihedral(3))
            .unwrap()
            .is_abelian());
        let d1 = make_abstract(&GroupDescriptor::Dihedral(1)).unwrap();
        assert!(are_isomorphic(
            &d1,
            &make_abstract(&GroupDescriptor::Cyclic(2)).unwrap(),
            512
        )
        .unwrap());
        let d3 = make_abstract(&GroupDescriptor::Dihedral(3)).unwrap();
        let sl22 = make_abstract(&GroupDescriptor::SL2(2)).unwrap();
        assert!(are_isomorphic(&d3, &sl22, 512).unwrap());
        let a4 = make_abstract(&GroupDescriptor::Alt4).unwrap();
        let g322 = make_abstract(&GroupDescriptor::Gnpr { n: 3, p: 2, r: 2 }).unwrap();
        assert!(are_isomorphic(&a4, &g322, 512).unwrap());
        let a5 = make_abstract(&GroupDescriptor::Alt5).unwrap();
        let sl24 = make_abstract(&GroupDescriptor::SL2(4)).unwrap();
        assert!(are_isomorphic(&a5, &sl24, 512).unwrap());
        let bd2 = make_abstract(&GroupDescriptor::BinaryDihedral(2)).unwrap();
        assert_eq!(bd2.orders().iter().filter(|&&o| o == 2).count(), 1);
        assert!(matches!(
            make_abstract(&GroupDescriptor::Cyclic(0)),
            Err(Error::InvalidDescriptor(_))
        ));
    }
}
