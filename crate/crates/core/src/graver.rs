//! Indispensable primitive binomials `x_i^u_i x_j^u_j - x_k^u_k x_l^u_l`
//! of curves in 4-space with exponents bounded by the critical ones.

use crate::critical::need4;
use crate::error::{Error, Result};
use crate::exponents::{canonical_set, Binomial, VarNames};
use crate::fibergraph::{
    indispensable_binomial, indispensable_monomial, minimal_generating_set, Verdict,
};
use crate::grobner::{curve_ideal, graver_basis, BinomialIdeal};
use crate::semigroup::critical_exponents;

/// Shape data of a full-support binomial with two variables per side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitivePattern {
    pub binomial: Binomial,
    /// `(i, j, k, l)`: `x_i, x_j` on the left, `x_k, x_l` on the right.
    pub indices: [usize; 4],
    /// `u_m < c_m` for each of the four indices, in the same order.
    pub below_critical: [bool; 4],
}

impl PrimitivePattern {
    pub fn of(f: &Binomial, c: &[u32]) -> Option<PrimitivePattern> {
        if f.n() != 4 || !f.has_full_support() {
            return None;
        }
        let (l, r) = (f.lhs().support(), f.rhs().support());
        if l.len() != 2 || r.len() != 2 {
            return None;
        }
        let indices = [l[0], l[1], r[0], r[1]];
        let exp = |m: usize| {
            if m < 2 {
                f.lhs()[indices[m]]
            } else {
                f.rhs()[indices[m]]
            }
        };
        let below_critical = [0, 1, 2, 3].map(|m| exp(m) < c[indices[m]]);
        Some(PrimitivePattern {
            binomial: f.clone(),
            indices,
            below_critical,
        })
    }

    pub fn left_below(&self) -> bool {
        self.below_critical[0] && self.below_critical[1]
    }

    pub fn all_below(&self) -> bool {
        self.below_critical.iter().all(|&b| b)
    }
}

/// Orientation of `f` with a left side below the critical exponents and
/// an indispensable right side, if one exists.
pub(crate) fn semi_primitive_orientation(
    ia: &BinomialIdeal,
    c: &[u32],
    f: &Binomial,
) -> Result<Option<Binomial>> {
    for g in [f.clone(), f.negated()] {
        if let Some(p) = PrimitivePattern::of(&g, c) {
            if p.left_below() && indispensable_monomial(ia, g.rhs())? {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

/// Graver elements with two variables per side and every exponent below
/// the critical one; each is checked to be indispensable.
pub fn primitive_indispensables(a: &[u64]) -> Result<Vec<Binomial>> {
    need4(a)?;
    let c = critical_exponents(a)?;
    let ia = curve_ideal(a)?;
    let mut out = Vec::new();
    for f in graver_basis(a)? {
        let keep = PrimitivePattern::of(&f, &c).is_some_and(|p| p.all_below());
        if !keep {
            continue;
        }
        if indispensable_binomial(&ia, &f)? != Verdict::Yes {
            return Err(Error::Inconsistent(format!(
                "{} is not indispensable",
                VarNames::plain(4).binomial(&f)
            )));
        }
        out.push(f);
    }
    Ok(canonical_set(out))
}

/// Binomials `x_i^u_i x_j^u_j - x_k^u_k x_l^u_l` of `I_A` with
/// `u_i < c_i`, `u_j < c_j` and an indispensable right side, read off the
/// minimal generators (all such binomials are indispensable).
pub fn semi_primitive_indispensables(a: &[u64]) -> Result<Vec<Binomial>> {
    need4(a)?;
    let c = critical_exponents(a)?;
    let ia = curve_ideal(a)?;
    let mut out = Vec::new();
    for f in minimal_generating_set(&ia)?.generators() {
        if let Some(g) = semi_primitive_orientation(&ia, &c, &f)? {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::parse_binomial;

    fn b(s: &str) -> Binomial {
        parse_binomial(s, 4).unwrap()
    }

    #[test]
    fn pattern_examples() {
        let c = critical_exponents(&[6, 8, 17, 19]).unwrap();
        assert_eq!(c, vec![4, 3, 2, 2]);
        let p = PrimitivePattern::of(&b("x1^2*x2^3 - x3*x4"), &c).unwrap();
        assert_eq!(p.indices, [0, 1, 2, 3]);
        assert_eq!(p.below_critical, [true, false, true, true]);
        assert!(!p.left_below());
        assert!(PrimitivePattern::of(&b("x1^4 - x2^3"), &c).is_none());
    }

    #[test]
    fn primitive_examples() {
        let p = primitive_indispensables(&[6, 8, 17, 19]).unwrap();
        assert!(!p.iter().any(|f| f.same_up_to_sign(&b("x1^2*x2^3 - x3*x4"))));
        let ia = curve_ideal(&[25, 30, 57, 76]).unwrap();
        let gens = minimal_generating_set(&ia).unwrap().generators();
        let c = critical_exponents(&[25, 30, 57, 76]).unwrap();
        let strict: Vec<Binomial> = gens
            .iter()
            .filter(|f| PrimitivePattern::of(f, &c).is_some_and(|p| p.all_below()))
            .cloned()
            .collect();
        let p = primitive_indispensables(&[25, 30, 57, 76]).unwrap();
        for f in &strict {
            assert!(p.iter().any(|g| g.same_up_to_sign(f)));
        }
        assert!(primitive_indispensables(&[2, 3, 5]).is_err());
    }

    #[test]
    fn semi_primitive_examples() {
        let s = semi_primitive_indispensables(&[6, 8, 17, 19]).unwrap();
        assert!(!s.iter().any(|f| f.same_up_to_sign(&b("x1^2*x2^3 - x3*x4"))));
        for a in [[6u64, 8, 17, 19], [25, 30, 57, 76], [5, 6, 7, 8]] {
            let ia = curve_ideal(&a).unwrap();
            for f in semi_primitive_indispensables(&a).unwrap() {
                assert_eq!(indispensable_binomial(&ia, &f).unwrap(), Verdict::Yes);
            }
            let prim = primitive_indispensables(&a).unwrap();
            for f in prim {
                if indispensable_monomial(&ia, f.rhs()).unwrap()
                    || indispensable_monomial(&ia, f.lhs()).unwrap()
                {
                    let s = semi_primitive_indispensables(&a).unwrap();
                    assert!(s.iter().any(|g| g.same_up_to_sign(&f)));
                }
            }
        }
    }
}
