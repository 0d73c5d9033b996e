//! Finite groups as multiplication tables, and closure of generator sets.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::gcd;
use crate::error::{Error, Result};

/// Fixed-size bitset over group element labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bits(Vec<u64>);

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    pub fn from_iter(n: usize, it: impl IntoIterator<Item = u32>) -> Self {
        let mut b = Bits::new(n);
        for x in it {
            b.insert(x);
        }
        b
    }

    pub fn insert(&mut self, x: u32) -> bool {
        let (w, m) = (x as usize / 64, 1u64 << (x % 64));
        let fresh = self.0[w] & m == 0;
        self.0[w] |= m;
        fresh
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0[x as usize / 64] >> (x % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            core::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros();
                word &= word - 1;
                Some(w as u32 * 64 + b)
            })
        })
    }
}

/// A finite group on labels `0..n` with identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
}

/// Result of closing a generator set under multiplication.
#[derive(Clone, Debug)]
pub struct Closure<T> {
    /// Elements in breadth-first order from the identity.
    pub elements: Vec<T>,
    pub index: BTreeMap<T, u32>,
    /// `cayley[i * k + g]` is the label of `elements[i] · gens[g]`.
    pub cayley: Vec<u32>,
    /// Breadth-first tree: `elements[i] = elements[parent.0] · gens[parent.1]`.
    pub parent: Vec<(u32, u32)>,
    pub num_gens: usize,
}

/// Closes `gens` under right multiplication; fails once more than `cap`
/// elements appear.
pub fn close<T: Ord + Clone>(
    identity: T,
    gens: &[T],
    mut mul: impl FnMut(&T, &T) -> T,
    cap: usize,
) -> Result<Closure<T>> {
    let k = gens.len();
    let mut elements = vec![identity.clone()];
    let mut index = BTreeMap::new();
    index.insert(identity, 0u32);
    let mut parent = vec![(0u32, 0u32)];
    let mut cayley = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        for (g, gen) in gens.iter().enumerate() {
            let y = mul(&elements[i], gen);
            let label = match index.get(&y) {
                Some(&l) => l,
                None => {
                    let l = elements.len() as u32;
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(y.clone(), l);
                    elements.push(y);
                    parent.push((i as u32, g as u32));
                    l
                }
            };
            cayley.push(label);
        }
        i += 1;
    }
    Ok(Closure {
        elements,
        index,
        cayley,
        parent,
        num_gens: k,
    })
}

impl<T> Closure<T> {
    /// Multiplication table derived from the Cayley graph without further
    /// element arithmetic: `x · y = (x · parent(y)) · gen(y)`.
    pub fn group(&self) -> FiniteGroup {
        let n = self.elements.len();
        let k = self.num_gens;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            let row = &mut table[x * n..(x + 1) * n];
            row[0] = x as u32;
            for y in 1..n {
                let (py, g) = self.parent[y];
                row[y] = self.cayley[row[py as usize] as usize * k + g as usize];
            }
        }
        FiniteGroup::from_table_unchecked(n, table)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl FiniteGroup {
    fn from_table_unchecked(n: usize, table: Vec<u32>) -> Self {
        let mut inv = vec![0u32; n];
        for x in 0..n {
            let row = &table[x * n..(x + 1) * n];
            inv[x] = row
                .iter()
                .position(|&v| v == 0)
                .expect("every element has an inverse") as u32;
        }
        FiniteGroup { n, table, inv }
    }

    /// Checks that `0` is a two-sided identity and every row and column is
    /// a permutation. Associativity is left to [`is_associative`](Self::is_associative).
    pub fn from_table(n: usize, table: Vec<u32>) -> Result<Self> {
        if n == 0 || table.len() != n * n {
            return Err(Error::InvalidDescriptor("table size mismatch"));
        }
        for x in 0..n {
            if table[x] != x as u32 || table[x * n] != x as u32 {
                return Err(Error::InvalidDescriptor("label 0 is not the identity"));
            }
        }
        for x in 0..n {
            let mut row = Bits::new(n);
            let mut col = Bits::new(n);
            for y in 0..n {
                let (r, c) = (table[x * n + y], table[y * n + x]);
                if r as usize >= n || !row.insert(r) || !col.insert(c) {
                    return Err(Error::InvalidDescriptor("table is not a Latin square"));
                }
            }
        }
        Ok(Self::from_table_unchecked(n, table))
    }

    /// Group on `0..n` from a product rule; label `0` must be the identity.
    pub fn from_fn(n: usize, mul: impl Fn(u32, u32) -> u32) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n as u32 {
            for y in 0..n as u32 {
                table.push(mul(x, y));
            }
        }
        debug_assert!((0..n).all(|x| table[x] == x as u32));
        Self::from_table_unchecked(n, table)
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            n: 1,
            table: vec![0],
            inv: vec![0],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize * self.n + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    pub fn pow(&self, x: u32, e: u64) -> u32 {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.n as u32
    }

    pub fn is_associative(&self) -> bool {
        let n = self.n as u32;
        (0..n).all(|x| {
            (0..n)
                .all(|y| (0..n).all(|z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z))))
        })
    }

    pub fn elem_order(&self, x: u32) -> u64 {
        let mut k = 1;
        let mut cur = x;
        while cur != 0 {
            cur = self.mul(cur, x);
            k += 1;
        }
        k
    }

    pub fn orders(&self) -> Vec<u64> {
        // ord(x^k) = ord(x)/gcd(k, ord(x)) saves most of the work
        let mut ord = vec![0u64; self.n];
        for x in 0..self.n as u32 {
            if ord[x as usize] != 0 {
                continue;
            }
            let o = self.elem_order(x);
            let mut cur = x;
            for k in 1..=o {
                let slot = &mut ord[cur as usize];
                if *slot == 0 {
                    *slot = o / gcd(k, o);
                }
                cur = self.mul(cur, x);
            }
        }
        ord
    }

    pub fn exponent(&self) -> u64 {
        self.orders().into_iter().fold(1, crate::arith::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.n as u32;
        (0..n).all(|x| (x + 1..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders().contains(&(self.n as u64))
    }

    pub fn center(&self) -> Vec<u32> {
        let n = self.n as u32;
        (0..n)
            .filter(|&x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    pub fn centralizer_size(&self, x: u32) -> usize {
        (0..self.n as u32)
            .filter(|&y| self.mul(x, y) == self.mul(y, x))
            .count()
    }

    /// Labels of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[u32]) -> Bits {
        let mut seen = Bits::new(self.n);
        seen.insert(0);
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Closure of a subgroup `h` with one extra element.
    pub fn join(&self, h: &Bits, x: u32) -> Bits {
        if h.contains(x) {
            return h.clone();
        }
        let mut seen = h.clone();
        let mut queue: VecDeque<u32> = h.iter().collect();
        // right multiplication by x and by the elements of h generates ⟨h, x⟩
        let hs: Vec<u32> = h.iter().collect();
        while let Some(y) = queue.pop_front() {
            for &g in core::iter::once(&x).chain(hs.iter()) {
                let z = self.mul(y, g);
                if seen.insert(z) {
                    queue.push_back(z);
                }
            }
        }
        seen
    }

    pub fn is_subgroup(&self, s: &Bits) -> bool {
        s.contains(0)
            && s.iter()
                .all(|x| s.iter().all(|y| s.contains(self.mul(x, y))))
    }

    pub fn conjugate_set(&self, g: u32, s: &Bits) -> Bits {
        Bits::from_iter(self.n, s.iter().map(|x| self.conj(g, x)))
    }

    pub fn is_normal(&self, s: &Bits) -> bool {
        (0..self.n as u32).all(|g| s.iter().all(|x| s.contains(self.conj(g, x))))
    }

    /// Conjugacy classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let mut assigned = Bits::new(self.n);
        let mut out = Vec::new();
        for x in 0..self.n as u32 {
            if assigned.contains(x) {
                continue;
            }
            let mut class = Bits::new(self.n);
            for g in 0..self.n as u32 {
                class.insert(self.conj(g, x));
            }
            let members: Vec<u32> = class.iter().collect();
            for &m in &members {
                assigned.insert(m);
            }
            out.push(members);
        }
        out
    }

    /// Subgroup on the given labels, relabelled in increasing order.
    pub fn subgroup(&self, s: &Bits) -> Result<FiniteGroup> {
        if !self.is_subgroup(s) {
            return Err(Error::InvalidDescriptor("not a subgroup"));
        }
        let members: Vec<u32> = s.iter().collect();
        let mut pos = BTreeMap::new();
        for (i, &m) in members.iter().enumerate() {
            pos.insert(m, i as u32);
        }
        let m = members.len();
        let mut table = Vec::with_capacity(m * m);
        for &x in &members {
            for &y in &members {
                table.push(pos[&self.mul(x, y)]);
            }
        }
        Ok(Self::from_table_unchecked(m, table))
    }

    /// Direct product `self × other`, label `(a, b) ↦ a + |self|·b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n = self.n as u32;
        FiniteGroup::from_fn(self.n * other.n, |x, y| {
            let (a1, b1) = (x % n, x / n);
            let (a2, b2) = (y % n, y / n);
            self.mul(a1, a2) + n * other.mul(b1, b2)
        })
    }
}
