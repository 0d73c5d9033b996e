//! Dickson types of finite subgroups of SL2 over finite fields, and the
//! subgroup atlas of `SL2(F_q)` up to conjugacy.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::fields::{ConcreteField, FieldElem};
use crate::groups::{
    are_isomorphic, close_generated, make_abstract, make_sl2, recognize_gnpr, Bits, FiniteGroup,
    GroupDescriptor, MatrixGroup,
};
use crate::mat2::Mat2;

const CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DicksonType {
    CyclicT(u64),
    /// Binary dihedral of order `4n`.
    BinaryDihedralT(u64),
    BinaryTetrahedralT,
    BinaryOctahedralT,
    BinaryIcosahedralT,
    /// `G(n, p^r)`.
    GnprT {
        n: u64,
        r: u32,
    },
    /// `D_n`, `n` odd, in characteristic 2.
    DihedralOddChar2T(u64),
    SL2T(u64),
    /// `⟨SL2(F_q), diag(ε, ε⁻¹)⟩` with `F_q(ε) = F_{q²}`.
    SL2ExtT(u64),
    SL2F5Char3T,
}

impl DicksonType {
    pub fn label(&self) -> String {
        match *self {
            DicksonType::CyclicT(n) => format!("CyclicT({n})"),
            DicksonType::BinaryDihedralT(n) => format!("BinaryDihedralT({n})"),
            DicksonType::BinaryTetrahedralT => "BinaryTetrahedralT".into(),
            DicksonType::BinaryOctahedralT => "BinaryOctahedralT".into(),
            DicksonType::BinaryIcosahedralT => "BinaryIcosahedralT".into(),
            DicksonType::GnprT { n, r } => format!("GnprT({n},{r})"),
            DicksonType::DihedralOddChar2T(n) => format!("DihedralOddChar2T({n})"),
            DicksonType::SL2T(q) => format!("SL2T({q})"),
            DicksonType::SL2ExtT(q) => format!("SL2ExtT({q})"),
            DicksonType::SL2F5Char3T => "SL2F5Char3T".into(),
        }
    }

    /// Case number in Dickson's list.
    pub fn case(&self) -> &'static str {
        match self {
            DicksonType::CyclicT(_) => "i",
            DicksonType::BinaryDihedralT(_) => "ii",
            DicksonType::BinaryTetrahedralT => "iii",
            DicksonType::BinaryOctahedralT => "iv",
            DicksonType::BinaryIcosahedralT => "v",
            DicksonType::GnprT { .. } => "vi",
            DicksonType::DihedralOddChar2T(_) => "vii",
            DicksonType::SL2F5Char3T => "viii",
            DicksonType::SL2T(_) => "ix",
            DicksonType::SL2ExtT(_) => "x",
        }
    }

    /// Group order implied by the type; `p` is the characteristic.
    pub fn order(&self, p: u64) -> u64 {
        match *self {
            DicksonType::CyclicT(n) => n,
            DicksonType::BinaryDihedralT(n) => 4 * n,
            DicksonType::BinaryTetrahedralT => 24,
            DicksonType::BinaryOctahedralT => 48,
            DicksonType::BinaryIcosahedralT | DicksonType::SL2F5Char3T => 120,
            DicksonType::GnprT { n, r } => n * p.pow(r),
            DicksonType::DihedralOddChar2T(n) => 2 * n,
            DicksonType::SL2T(q) => q * (q * q - 1),
            DicksonType::SL2ExtT(q) => 2 * q * (q * q - 1),
        }
    }

    /// Types that also occur in characteristic 0.
    pub fn is_klein(&self) -> bool {
        matches!(
            self,
            DicksonType::CyclicT(_)
                | DicksonType::BinaryDihedralT(_)
                | DicksonType::BinaryTetrahedralT
                | DicksonType::BinaryOctahedralT
                | DicksonType::BinaryIcosahedralT
        )
    }
}

/// The `(x)` group `⟨SL2(F_q), diag(ε, ε⁻¹)⟩` inside `SL2(F_{q²})`, with
/// `ε` the first element (in lexicographic order) such that `ε²`
/// generates `F_q^×` and `ε ∉ F_q`.
pub fn make_sl2_ext(q: u64) -> Result<MatrixGroup> {
    let (p, j) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if p == 2 {
        return Err(Error::InvalidDescriptor(
            "SL2 extension type needs odd characteristic",
        ));
    }
    let f = ConcreteField::finite(p, 2 * j)?;
    let fq = f.as_finite().unwrap();
    let eps = fq
        .elements_lex()
        .find(|&e| {
            e != 0 && !fq.in_subfield(e, j) && {
                let e2 = fq.mul(e, e);
                fq.in_subfield(e2, j) && fq.mult_order(e2) == Some(q - 1)
            }
        })
        .ok_or(Error::MissingRoots("epsilon"))?;
    // SL2(F_q) inside SL2(F_{q²}) through the subfield of order q
    let g = fq.exp((fq.order() - 1) / (q - 1));
    let mut gens = vec![
        Mat2::from_ints(&f, [1, 1, 0, 1]),
        Mat2::from_ints(&f, [1, 0, 1, 1]),
    ];
    if j > 1 {
        gens.push(Mat2::diag(
            &f,
            FieldElem::Fin(g),
            FieldElem::Fin(fq.inv(g).unwrap()),
        ));
    }
    gens.push(Mat2::diag(
        &f,
        FieldElem::Fin(eps),
        FieldElem::Fin(fq.inv(eps).unwrap()),
    ));
    close_generated(&f, &gens, CAP)
}

/// Reference groups for the isomorphism tests, built on demand.
#[derive(Default)]
pub struct References {
    cache: BTreeMap<(u8, u64), FiniteGroup>,
}

impl References {
    pub fn new() -> Self {
        Self::default()
    }

    fn get(&mut self, kind: u8, param: u64) -> Result<&FiniteGroup> {
        if let alloc::collections::btree_map::Entry::Vacant(e) = self.cache.entry((kind, param)) {
            let g = match kind {
                0 => make_sl2(param)?.abstract_group(),
                1 => make_abstract(&GroupDescriptor::BinaryDihedral(param))?,
                2 => make_abstract(&GroupDescriptor::Dihedral(param))?,
                // the binary octahedral group is the (x) group for q = 3
                3 => make_sl2_ext(3)?.abstract_group(),
                4 => make_sl2_ext(param)?.abstract_group(),
                _ => unreachable!(),
            };
            e.insert(g);
        }
        Ok(&self.cache[&(kind, param)])
    }

    fn iso(&mut self, g: &FiniteGroup, kind: u8, param: u64) -> Result<bool> {
        let h = self.get(kind, param)?;
        are_isomorphic(g, h, CAP)
    }
}

/// Index-2 subgroups of `g`.
fn index_two_subgroups(g: &FiniteGroup) -> Vec<Bits> {
    let n = g.order();
    let squares: Vec<u32> = g.elements().map(|x| g.mul(x, x)).collect();
    let s = g.generated(&squares);
    let mut out = BTreeSet::new();
    if s.len() * 2 == n {
        out.insert(s.clone());
    } else if s.len() * 2 < n {
        for x in g.elements() {
            let k = g.join(&s, x);
            if k.len() * 2 == n {
                out.insert(k);
            }
        }
    }
    out.into_iter().collect()
}

/// Dickson type of an abstract subgroup of `SL2(F_{p^k})`; `whole` says
/// whether it is the entire ambient group.
pub fn classify_abstract(
    g: &FiniteGroup,
    p: u64,
    k: u32,
    whole: bool,
    refs: &mut References,
) -> Result<DicksonType> {
    let n = g.order() as u64;
    for j in (1..=k).filter(|j| k.is_multiple_of(*j)) {
        let q = p.pow(j);
        // SL2(F_2) ≅ D_3 is reported as (vii) unless it is the ambient group
        if n == q * (q * q - 1) && (q > 2 || whole) && refs.iso(g, 0, q)? {
            return Ok(DicksonType::SL2T(q));
        }
    }
    if p != 2 {
        for j in (1..=k / 2).filter(|j| k.is_multiple_of(2 * j)) {
            let q = p.pow(j);
            if n == 2 * q * (q * q - 1) {
                for sub in index_two_subgroups(g) {
                    if refs.iso(&g.subgroup(&sub)?, 0, q)? {
                        return Ok(DicksonType::SL2ExtT(q));
                    }
                }
            }
        }
    }
    if n.is_multiple_of(p) {
        if let Some((m, r)) = recognize_gnpr(g, p) {
            return Ok(DicksonType::GnprT { n: m, r });
        }
        if p == 2 && n % 4 == 2 && refs.iso(g, 2, n / 2)? {
            return Ok(DicksonType::DihedralOddChar2T(n / 2));
        }
    } else {
        if g.is_cyclic() {
            return Ok(DicksonType::CyclicT(n));
        }
        if n.is_multiple_of(4) && refs.iso(g, 1, n / 4)? {
            return Ok(DicksonType::BinaryDihedralT(n / 4));
        }
        if n == 24 && refs.iso(g, 0, 3)? {
            return Ok(DicksonType::BinaryTetrahedralT);
        }
        if n == 48 && refs.iso(g, 3, 3)? {
            return Ok(DicksonType::BinaryOctahedralT);
        }
        if n == 120 && refs.iso(g, 0, 5)? {
            return Ok(DicksonType::BinaryIcosahedralT);
        }
    }
    if p == 3 && n == 120 && refs.iso(g, 0, 5)? {
        return Ok(DicksonType::SL2F5Char3T);
    }
    Err(Error::Unclassifiable { order: n as usize })
}

/// Types other than `primary` that `g` is isomorphic to.
pub fn overlapping_types(
    g: &FiniteGroup,
    p: u64,
    primary: DicksonType,
    refs: &mut References,
) -> Result<Vec<DicksonType>> {
    let n = g.order() as u64;
    let mut out = Vec::new();
    if g.is_cyclic() {
        out.push(DicksonType::CyclicT(n));
    }
    if n.is_multiple_of(p) {
        if let Some((m, r)) = recognize_gnpr(g, p) {
            out.push(DicksonType::GnprT { n: m, r });
        }
    }
    if p == 2 && n % 4 == 2 && n > 2 && refs.iso(g, 2, n / 2)? {
        out.push(DicksonType::DihedralOddChar2T(n / 2));
    }
    if n.is_multiple_of(4) && !g.is_cyclic() && refs.iso(g, 1, n / 4)? {
        out.push(DicksonType::BinaryDihedralT(n / 4));
    }
    if n == 24 && refs.iso(g, 0, 3)? {
        out.push(DicksonType::BinaryTetrahedralT);
    }
    if n == 120 && refs.iso(g, 0, 5)? {
        out.push(DicksonType::BinaryIcosahedralT);
    }
    out.retain(|t| *t != primary);
    Ok(out)
}

/// Dickson type of a subgroup of `SL2(F_q)`.
pub fn classify_subgroup(h: &MatrixGroup, ambient_q: u64) -> Result<DicksonType> {
    let (p, k) = prime_power(ambient_q).ok_or(Error::NotPrimePower(ambient_q))?;
    let f = h.field();
    let inside = f
        .as_finite()
        .is_some_and(|fq| fq.characteristic() == p && k % fq.degree() == 0);
    if !inside || h.elements().iter().any(|m| !f.is_one(&m.det(f))) {
        return Err(Error::InvalidDescriptor(
            "not a subgroup of SL2 over the ambient field",
        ));
    }
    let ambient_order = ambient_q * (ambient_q * ambient_q - 1);
    let whole = h.order() as u64 == ambient_order;
    classify_abstract(&h.abstract_group(), p, k, whole, &mut References::new())
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    /// Canonical member: the conjugate with the smallest label set.
    pub members: Bits,
    pub order: usize,
    /// Generators of the canonical member, greedily by label.
    pub generators: Vec<u32>,
    pub conjugates: usize,
}

fn canonical_conjugate(g: &FiniteGroup, h: &Bits) -> (Bits, usize) {
    let mut seen = BTreeSet::new();
    for x in g.elements() {
        seen.insert(g.conjugate_set(x, h));
    }
    let count = seen.len();
    (seen.into_iter().next().unwrap(), count)
}

fn greedy_generators(g: &FiniteGroup, h: &Bits) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut cur = Bits::from_iter(g.order(), [0]);
    for x in h.iter() {
        if !cur.contains(x) {
            gens.push(x);
            cur = g.generated(&gens);
        }
    }
    gens
}

/// Subgroups of `g` up to conjugacy, found by adjoining single elements
/// to class representatives, sorted by order then canonical member.
pub fn subgroup_classes(g: &FiniteGroup) -> Vec<SubgroupClass> {
    let trivial = Bits::from_iter(g.order(), [0]);
    let mut reps: BTreeMap<Bits, usize> = BTreeMap::new();
    reps.insert(trivial.clone(), 1);
    let mut queue = vec![(trivial, Vec::<u32>::new())];
    while let Some((h, gens)) = queue.pop() {
        let mut tried = Bits::new(g.order());
        for x in g.elements() {
            if h.contains(x) || tried.contains(x) {
                continue;
            }
            let mut kg = gens.clone();
            kg.push(x);
            let k = g.generated(&kg);
            // ⟨H, xh⟩ = ⟨H, x⟩
            for y in h.iter() {
                tried.insert(g.mul(x, y));
            }
            let (canon, count) = canonical_conjugate(g, &k);
            if let alloc::collections::btree_map::Entry::Vacant(e) = reps.entry(canon.clone()) {
                e.insert(count);
                let cg = greedy_generators(g, &canon);
                queue.push((canon, cg));
            }
        }
    }
    let mut out: Vec<SubgroupClass> = reps
        .into_iter()
        .map(|(members, conjugates)| SubgroupClass {
            order: members.len(),
            generators: greedy_generators(g, &members),
            members,
            conjugates,
        })
        .collect();
    out.sort_by(|a, b| (a.order, &a.members).cmp(&(b.order, &b.members)));
    out
}

/// Conjugacy-class representatives of subgroups of `SL2(F_q)`.
pub fn enumerate_subgroups(q: u64, cap: usize) -> Result<(MatrixGroup, Vec<SubgroupClass>)> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let order = q * (q * q - 1);
    if order > cap as u64 {
        return Err(Error::CapExceeded { cap });
    }
    let sl2 = make_sl2(q)?;
    let classes = subgroup_classes(&sl2.abstract_group());
    Ok((sl2, classes))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasEntry {
    pub order: usize,
    pub dtype: DicksonType,
    pub generators: Vec<Mat2>,
    pub conjugates: usize,
    /// Other types the same abstract group also matches.
    pub notes: Vec<DicksonType>,
}

#[derive(Clone, Debug)]
pub struct Atlas {
    pub q: u64,
    pub field: ConcreteField,
    pub classes: Vec<AtlasEntry>,
}

impl Atlas {
    pub fn total_subgroups(&self) -> usize {
        self.classes.iter().map(|c| c.conjugates).sum()
    }
}

/// Subgroup classes of `SL2(F_q)` with their Dickson types.
pub fn atlas(q: u64, cap: usize) -> Result<Atlas> {
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let (sl2, classes) = enumerate_subgroups(q, cap)?;
    let g = sl2.abstract_group();
    let mut refs = References::new();
    let mut entries = Vec::with_capacity(classes.len());
    for class in &classes {
        let sub = g.subgroup(&class.members)?;
        let dtype = classify_abstract(&sub, p, k, class.order == g.order(), &mut refs)?;
        let notes = overlapping_types(&sub, p, dtype, &mut refs)?;
        entries.push(AtlasEntry {
            order: class.order,
            dtype,
            generators: class
                .generators
                .iter()
                .map(|&x| sl2.elements()[x as usize].clone())
                .collect(),
            conjugates: class.conjugates,
            notes,
        });
    }
    Ok(Atlas {
        q,
        field: sl2.field().clone(),
        classes: entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub_of(sl2: &MatrixGroup, gens: &[Mat2]) -> MatrixGroup {
        for m in gens {
            assert!(sl2.index_of(m).is_some());
        }
        close_generated(sl2.field(), gens, CAP).unwrap()
    }

    #[test]
    fn classify_examples() {
        let sl23 = make_sl2(3).unwrap();
        let f = sl23.field().clone();
        let minus = sub_of(&sl23, &[Mat2::from_ints(&f, [-1, 0, 0, -1])]);
        assert_eq!(classify_subgroup(&minus, 3), Ok(DicksonType::CyclicT(2)));
        let q8 = sub_of(
            &sl23,
            &[
                Mat2::from_ints(&f, [0, 1, -1, 0]),
                Mat2::from_ints(&f, [1, 1, 1, -1]),
            ],
        );
        assert_eq!(q8.order(), 8);
        assert_eq!(
            classify_subgroup(&q8, 3),
            Ok(DicksonType::BinaryDihedralT(2))
        );
        assert_eq!(classify_subgroup(&sl23, 3), Ok(DicksonType::SL2T(3)));
    }

    #[test]
    fn class_counts() {
        for (q, count) in [(2, 4), (3, 7), (4, 9)] {
            let (_, classes) = enumerate_subgroups(q, 512).unwrap();
            assert_eq!(classes.len(), count, "q = {q}");
        }
    }

    #[test]
    fn atlas_tags() {
        let a = atlas(4, 512).unwrap();
        let tags: Vec<_> = a.classes.iter().map(|c| c.dtype).collect();
        assert!(tags.contains(&DicksonType::GnprT { n: 3, r: 2 }));
        assert!(tags.contains(&DicksonType::DihedralOddChar2T(3)));
        assert!(tags.contains(&DicksonType::DihedralOddChar2T(5)));
        assert!(tags.contains(&DicksonType::SL2T(4)));
        let a3 = atlas(3, 512).unwrap();
        let tags: Vec<_> = a3.classes.iter().map(|c| c.dtype).collect();
        assert!(tags.contains(&DicksonType::GnprT { n: 1, r: 1 }));
        assert!(tags.contains(&DicksonType::GnprT { n: 2, r: 1 }));
        let c6 = a3.classes.iter().find(|c| c.order == 6).unwrap();
        assert_eq!(c6.notes, vec![DicksonType::CyclicT(6)]);
        let top = a3.classes.last().unwrap();
        assert_eq!(top.notes, vec![DicksonType::BinaryTetrahedralT]);
        let a2 = atlas(2, 512).unwrap();
        assert_eq!(a2.classes.last().unwrap().dtype, DicksonType::SL2T(2));
        assert!(a2
            .classes
            .iter()
            .any(|c| c.dtype == DicksonType::CyclicT(3)));
    }

    #[test]
    fn extension_type_for_q3() {
        let h = make_sl2_ext(3).unwrap();
        assert_eq!(h.order(), 48);
        assert_eq!(classify_subgroup(&h, 9), Ok(DicksonType::SL2ExtT(3)));
        let g = h.abstract_group();
        assert_eq!(g.orders().iter().filter(|&&o| o == 2).count(), 1);
        assert!(g.orders().contains(&8));
        assert!(make_sl2_ext(4).is_err());
    }
}
