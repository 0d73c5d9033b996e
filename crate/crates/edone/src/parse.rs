//! Text grammars for fields, groups, field elements and matrices.

use edone_core::arith::prime_power;
use edone_core::fields::{ConcreteField, FieldElem, FieldSpec};
use edone_core::groups::GroupDescriptor;
use edone_core::mat2::Mat2;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::InputError;

fn err(pos: usize, msg: impl Into<String>) -> InputError {
    InputError::Parse {
        pos,
        msg: msg.into(),
    }
}

fn number<T: std::str::FromStr>(s: &str, pos: usize) -> Result<T, InputError> {
    s.trim()
        .parse()
        .map_err(|_| err(pos, format!("expected a number, found {s:?}")))
}

/// `a/b`, `a` or `-a`.
fn rational(s: &str, pos: usize) -> Result<BigRational, InputError> {
    let s = s.trim();
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num: BigInt = number(num, pos)?;
    let den: BigInt = number(den, pos + s.find('/').map_or(0, |i| i + 1))?;
    if den == BigInt::from(0) {
        return Err(err(pos, "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

fn finite_order(s: &str, pos: usize) -> Result<(u64, u32), InputError> {
    let q: u64 = number(s, pos)?;
    prime_power(q).ok_or(InputError::NonPrimePower(q))
}

/// `Q`, `Q(zeta:m)`, `Q(eta:m)`, `F:q`, `F:q(t)`, `closure:c`.
pub fn parse_field_spec(s: &str) -> Result<FieldSpec, InputError> {
    let s = s.trim();
    let spec = if s == "Q" {
        FieldSpec::Rational
    } else if let Some(inner) = s.strip_prefix("Q(zeta:").and_then(|r| r.strip_suffix(')')) {
        FieldSpec::cyclotomic(number(inner, 7)?)?
    } else if let Some(inner) = s.strip_prefix("Q(eta:").and_then(|r| r.strip_suffix(')')) {
        FieldSpec::real_cyclotomic(number(inner, 6)?)?
    } else if let Some(rest) = s.strip_prefix("F:") {
        if let Some(q) = rest.strip_suffix("(t)") {
            let (p, k) = finite_order(q, 2)?;
            FieldSpec::rational_function(p, k)?
        } else {
            let (p, k) = finite_order(rest, 2)?;
            FieldSpec::finite(p, k)?
        }
    } else if let Some(c) = s.strip_prefix("closure:") {
        FieldSpec::alg_closure(number(c, 8)?)?
    } else {
        return Err(err(0, format!("unknown field {s:?}")));
    };
    Ok(spec)
}

/// `C:n`, `D:n`, `BD:n`, `G:n,p,r`, `SL2:q`, `EA:p,r`, `A:4`, `A:5`, `S:4`, `1`.
pub fn parse_group_spec(s: &str) -> Result<GroupDescriptor, InputError> {
    let s = s.trim();
    if s == "1" {
        return Ok(GroupDescriptor::Trivial);
    }
    let (head, args) = s
        .split_once(':')
        .ok_or_else(|| err(0, format!("expected KIND:args, found {s:?}")))?;
    let start = head.len() + 1;
    let nums: Vec<&str> = args.split(',').collect();
    let arity = |k: usize| {
        if nums.len() == k {
            Ok(())
        } else {
            Err(err(start, format!("{head} takes {k} argument(s)")))
        }
    };
    let d = match head {
        "C" => {
            arity(1)?;
            GroupDescriptor::Cyclic(number(nums[0], start)?)
        }
        "D" => {
            arity(1)?;
            GroupDescriptor::Dihedral(number(nums[0], start)?)
        }
        "BD" => {
            arity(1)?;
            GroupDescriptor::BinaryDihedral(number(nums[0], start)?)
        }
        "G" => {
            arity(3)?;
            GroupDescriptor::Gnpr {
                n: number(nums[0], start)?,
                p: number(nums[1], start)?,
                r: number(nums[2], start)?,
            }
        }
        "SL2" => {
            arity(1)?;
            GroupDescriptor::SL2(number(nums[0], start)?)
        }
        "EA" => {
            arity(2)?;
            GroupDescriptor::ElemAbelian {
                p: number(nums[0], start)?,
                r: number(nums[1], start)?,
            }
        }
        "A" | "S" => {
            arity(1)?;
            match (head, number::<u64>(nums[0], start)?) {
                ("A", 4) => GroupDescriptor::Alt4,
                ("A", 5) => GroupDescriptor::Alt5,
                ("S", 4) => GroupDescriptor::Sym4,
                _ => return Err(err(start, format!("unsupported group {s:?}"))),
            }
        }
        _ => return Err(err(0, format!("unknown group kind {head:?}"))),
    };
    Ok(d)
}

/// Splits on commas outside brackets, tracking offsets.
fn split_top_level(s: &str) -> Result<Vec<(usize, &str)>, InputError> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(err(i, "unbalanced ']'"));
                }
            }
            ',' if depth == 0 => {
                parts.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(err(s.len(), "unclosed '['"));
    }
    parts.push((start, &s[start..]));
    Ok(parts)
}

/// One element in the field's canonical notation.
pub fn parse_elem(field: &ConcreteField, s: &str, pos: usize) -> Result<FieldElem, InputError> {
    let s = s.trim();
    let coeffs: Vec<BigRational> =
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            inner
                .split(',')
                .enumerate()
                .map(|(i, c)| rational(c, pos + 1 + i))
                .collect::<Result<_, _>>()?
        } else {
            vec![rational(s, pos)?]
        };
    if field.is_finite() && coeffs.iter().any(|c| !c.is_integer()) {
        return Err(err(pos, "finite-field coefficients must be integers"));
    }
    let d = field.absolute_degree() as usize;
    if coeffs.len() > d {
        return Err(err(pos, format!("at most {d} coefficient(s) expected")));
    }
    Ok(field.from_coeffs(&coeffs)?)
}

/// `a,b,c,d`, row-major.
pub fn parse_matrix(field: &ConcreteField, s: &str) -> Result<Mat2, InputError> {
    let parts = split_top_level(s)?;
    if parts.len() != 4 {
        return Err(err(
            0,
            format!("a matrix needs 4 entries, found {}", parts.len()),
        ));
    }
    let e: Vec<FieldElem> = parts
        .iter()
        .map(|&(pos, t)| parse_elem(field, t, pos))
        .collect::<Result<_, _>>()?;
    let [a, b, c, d]: [FieldElem; 4] = e.try_into().unwrap();
    Ok(Mat2::new(a, b, c, d))
}
