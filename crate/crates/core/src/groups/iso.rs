//! Isomorphism testing by backtracking over generator images.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groups::table::{Bits, FiniteGroup};

/// Default order cap for [`are_isomorphic`].
pub const DEFAULT_ISO_CAP: usize = 512;

/// Per-element invariants preserved by isomorphisms.
struct Profile {
    order: Vec<u64>,
    sig: Vec<(u64, usize)>,
    class_reps: Vec<u32>,
}

fn profile(g: &FiniteGroup) -> Profile {
    let order = g.orders();
    let classes = g.conjugacy_classes();
    let mut sig = vec![(0u64, 0usize); g.order()];
    let mut class_reps = Vec::with_capacity(classes.len());
    for class in &classes {
        class_reps.push(class[0]);
        for &x in class {
            sig[x as usize] = (order[x as usize], class.len());
        }
    }
    Profile {
        order,
        sig,
        class_reps,
    }
}

fn histogram(sig: &[(u64, usize)]) -> BTreeMap<(u64, usize), usize> {
    let mut h = BTreeMap::new();
    for &s in sig {
        *h.entry(s).or_insert(0) += 1;
    }
    h
}

/// Generators of `g`, chosen greedily for fastest subgroup growth, ties
/// broken by the number of candidate images.
fn choose_generators(
    g: &FiniteGroup,
    pg: &Profile,
    counts: &BTreeMap<(u64, usize), usize>,
) -> Vec<u32> {
    let n = g.order();
    let mut gens: Vec<u32> = Vec::new();
    let mut sub = Bits::from_iter(n, [0]);
    while sub.len() < n {
        let mut best: Option<(usize, usize, u32)> = None;
        let mut tried = Bits::new(n);
        for x in 0..n as u32 {
            if sub.contains(x) || tried.contains(x) {
                continue;
            }
            // generators of ⟨x⟩ all give the same ⟨sub, x⟩
            let o = pg.order[x as usize];
            let mut p = x;
            for k in 1..=o {
                if crate::arith::gcd(k, o) == 1 {
                    tried.insert(p);
                }
                p = g.mul(p, x);
            }
            gens.push(x);
            let grown = g.generated(&gens).len();
            gens.pop();
            let key = (grown, usize::MAX - counts[&pg.sig[x as usize]], x);
            if best.is_none_or(|b| (key.0, key.1) > (b.0, b.1)) {
                best = Some(key);
            }
        }
        let (_, _, x) = best.unwrap();
        gens.push(x);
        sub = g.generated(&gens);
    }
    gens
}

/// Extends the assignment `gens[i] ↦ images[i]` along the Cayley graph;
/// returns whether it is a well-defined injective homomorphism on the
/// subgroup generated so far.
fn partial_hom(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[u32],
    images: &[u32],
    phi: &mut [u32],
) -> bool {
    phi.fill(u32::MAX);
    let mut used = Bits::new(h.order());
    phi[0] = 0;
    used.insert(0);
    let mut queue = vec![0u32];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let z = h.mul(phi[x as usize], t);
            match phi[y as usize] {
                u32::MAX => {
                    if !used.insert(z) {
                        return false;
                    }
                    phi[y as usize] = z;
                    queue.push(y);
                }
                w if w != z => return false,
                _ => {}
            }
        }
    }
    true
}

/// An isomorphism `g → h` as a label map, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<Option<Vec<u32>>> {
    let n = g.order();
    if n.max(h.order()) > cap {
        return Err(Error::CapExceeded { cap });
    }
    if n != h.order() {
        return Ok(None);
    }
    if g.is_abelian() != h.is_abelian() {
        return Ok(None);
    }
    let pg = profile(g);
    let ph = profile(h);
    let hist = histogram(&pg.sig);
    if hist != histogram(&ph.sig) {
        return Ok(None);
    }
    let gens = choose_generators(g, &pg, &hist);
    let hcands: Vec<Vec<u32>> = gens
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let pool: &mut dyn Iterator<Item = u32> = if i == 0 {
                &mut ph.class_reps.iter().copied()
            } else {
                &mut (0..n as u32)
            };
            pool.filter(|&y| ph.sig[y as usize] == pg.sig[x as usize])
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    let mut phi = vec![u32::MAX; n];
    phi[0] = 0;
    if search(g, h, &pg, &ph, &gens, &hcands, &mut images, &mut phi) {
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    pg: &Profile,
    ph: &Profile,
    gens: &[u32],
    cands: &[Vec<u32>],
    images: &mut Vec<u32>,
    phi: &mut [u32],
) -> bool {
    let level = images.len();
    if level == gens.len() {
        return partial_hom(g, h, gens, images, phi);
    }
    let x = gens[level];
    // phi holds the map on ⟨gens[..level]⟩; x lies outside that subgroup
    let image = Bits::from_iter(h.order(), phi.iter().copied().filter(|&v| v != u32::MAX));
    for &y in &cands[level] {
        if image.contains(y) {
            continue;
        }
        let pairs_ok = gens[..level]
            .iter()
            .zip(images.iter())
            .all(|(&gj, &hj)| pg.order[g.mul(gj, x) as usize] == ph.order[h.mul(hj, y) as usize]);
        if !pairs_ok {
            continue;
        }
        images.push(y);
        if partial_hom(g, h, &gens[..=level], images, phi)
            && search(g, h, pg, ph, gens, cands, images, phi)
        {
            return true;
        }
        images.pop();
    }
    false
}

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<bool> {
    Ok(find_isomorphism(g, h, cap)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: u32) -> FiniteGroup {
        FiniteGroup::from_fn(n as usize, |x, y| (x + y) % n)
    }

    fn klein() -> FiniteGroup {
        FiniteGroup::from_fn(4, |x, y| x ^ y)
    }

    #[test]
    fn small_cases() {
        assert!(are_isomorphic(&cyclic(6), &cyclic(2).direct_product(&cyclic(3)), 512).unwrap());
        assert!(!are_isomorphic(&cyclic(4), &klein(), 512).unwrap());
        assert!(!are_isomorphic(&cyclic(4), &cyclic(5), 512).unwrap());
        assert_eq!(
            are_isomorphic(&cyclic(600), &cyclic(600), 512),
            Err(Error::CapExceeded { cap: 512 })
        );
    }

    #[test]
    fn isomorphism_is_a_homomorphism() {
        let g = cyclic(4).direct_product(&cyclic(6));
        let h = cyclic(2).direct_product(&cyclic(12));
        let phi = find_isomorphism(&g, &h, 512).unwrap().unwrap();
        for x in 0..24u32 {
            for y in 0..24u32 {
                assert_eq!(
                    phi[g.mul(x, y) as usize],
                    h.mul(phi[x as usize], phi[y as usize])
                );
            }
        }
        assert!(!are_isomorphic(&cyclic(24), &g, 512).unwrap());
    }
}
