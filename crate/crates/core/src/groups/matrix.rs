//! Finite groups of 2×2 matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::fields::ConcreteField;
use crate::groups::table::{close, Closure, FiniteGroup};
use crate::mat2::Mat2;

/// A finite matrix group together with its ambient field. Elements are
/// listed breadth-first from the identity along the generators.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    field: ConcreteField,
    gens: Vec<Mat2>,
    closure: Closure<Mat2>,
}

/// Closure of invertible generators over a common field.
pub fn close_generated(field: &ConcreteField, gens: &[Mat2], cap: usize) -> Result<MatrixGroup> {
    for g in gens {
        if !g.entries().iter().all(|e| field.owns(e)) {
            return Err(Error::FieldMismatch);
        }
        if !g.is_invertible(field) {
            return Err(Error::SingularMatrix);
        }
    }
    let closure = close(Mat2::identity(field), gens, |x, y| x.mul(field, y), cap)?;
    Ok(MatrixGroup {
        field: field.clone(),
        gens: gens.to_vec(),
        closure,
    })
}

impl MatrixGroup {
    pub fn field(&self) -> &ConcreteField {
        &self.field
    }

    pub fn generators(&self) -> &[Mat2] {
        &self.gens
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.closure.elements
    }

    pub fn order(&self) -> usize {
        self.closure.len()
    }

    pub fn index_of(&self, m: &Mat2) -> Option<u32> {
        self.closure.index.get(m).copied()
    }

    /// The multiplication table on element labels.
    pub fn abstract_group(&self) -> FiniteGroup {
        self.closure.group()
    }

    /// Labels of the generators.
    pub fn generator_labels(&self) -> Vec<u32> {
        self.gens
            .iter()
            .map(|g| self.index_of(g).unwrap())
            .collect()
    }

    pub fn scalar_members(&self) -> Vec<u32> {
        (0..self.order() as u32)
            .filter(|&i| self.closure.elements[i as usize].is_scalar(&self.field))
            .collect()
    }
}

/// The Möbius action is faithful iff the identity is the only scalar member.
pub fn action_is_faithful(mg: &MatrixGroup) -> bool {
    mg.scalar_members() == vec![0]
}

/// `SL2(F_q)`, generated by the two elementary unipotents and, for
/// non-prime `q`, `diag(g, g⁻¹)` with `g` the primitive element.
pub fn make_sl2(q: u64) -> Result<MatrixGroup> {
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let f = ConcreteField::finite(p, k)?;
    let mut gens = vec![
        Mat2::from_ints(&f, [1, 1, 0, 1]),
        Mat2::from_ints(&f, [1, 0, 1, 1]),
    ];
    if k > 1 {
        let g = f.as_finite().unwrap().generator();
        let g = crate::fields::FieldElem::Fin(g);
        gens.push(Mat2::diag(&f, g.clone(), f.inv(&g).unwrap()));
    }
    let order = (q * (q * q - 1)) as usize;
    let mg = close_generated(&f, &gens, order)?;
    debug_assert_eq!(mg.order(), order);
    Ok(mg)
}

/// `⟨σ, τ⟩` with `σ = diag(ζ_{2n}, ζ_{2n}⁻¹)` and `τ = [[0, i], [i, 0]]`,
/// `i² = -1`; order `4n`.
pub fn make_binary_dihedral(n: u64, field: &ConcreteField) -> Result<MatrixGroup> {
    if n == 0 {
        return Err(Error::InvalidDescriptor("index must be positive"));
    }
    let c = field.characteristic();
    if c != 0 && (2 * n).is_multiple_of(c) {
        return Err(Error::MissingRoots("characteristic divides 2n"));
    }
    let z = field
        .primitive_nth_root(2 * n)
        .ok_or(Error::MissingRoots("zeta_2n"))?;
    let i = field
        .primitive_nth_root(4)
        .ok_or(Error::MissingRoots("square root of -1"))?;
    let sigma = Mat2::diag(field, z.clone(), field.inv(&z).unwrap());
    let tau = Mat2::new(field.zero(), i.clone(), i, field.zero());
    close_generated(field, &[sigma, tau], (4 * n) as usize)
}

/// Generators of a subgroup `(Z/p)^r` of the unipotent group
/// `{t -> t + b}` over a finite field of characteristic `p`, found by
/// depth-first search over translations; `None` when there is none.
pub fn find_unipotent_elem_abelian(f: &ConcreteField, r: u32) -> Result<Option<Vec<Mat2>>> {
    let p = f.characteristic();
    if !f.is_finite() {
        return Err(Error::NotFinite);
    }
    let translations: Vec<Mat2> = f
        .elements()?
        .into_iter()
        .filter(|b| !f.is_zero(b))
        .map(|b| Mat2::new(f.one(), b, f.zero(), f.one()))
        .collect();
    let search = UnipotentSearch { f, p, r, translations, cap: f.order().unwrap() as usize };
    let mut gens = Vec::new();
    let trivial = close_generated(f, &[], 1)?;
    Ok(search.extend(0, &mut gens, &trivial)?.then_some(gens))
}

struct UnipotentSearch<'a> {
    f: &'a ConcreteField,
    p: u64,
    r: u32,
    translations: Vec<Mat2>,
    cap: usize,
}

impl UnipotentSearch<'_> {
    fn extend(&self, start: usize, gens: &mut Vec<Mat2>, current: &MatrixGroup) -> Result<bool> {
        if gens.len() as u32 == self.r {
            return Ok(true);
        }
        for (i, t) in self.translations.iter().enumerate().skip(start) {
            if current.index_of(t).is_some() {
                continue;
            }
            gens.push(t.clone());
            let next = close_generated(self.f, gens, self.cap)?;
            let g = next.abstract_group();
            let elementary = g.is_abelian() && g.elements().skip(1).all(|x| g.elem_order(x) == self.p);
            if next.order() == current.order() * self.p as usize && elementary && self.extend(i + 1, gens, &next)? {
                return Ok(true);
            }
            gens.pop();
        }
        Ok(false)
    }
}
