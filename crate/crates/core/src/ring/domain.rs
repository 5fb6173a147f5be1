use super::poly::LaurentPoly;
use super::ratfunc::RatFunc;

/// Coefficient domains a computation may declare. Membership of a RatFunc in
/// each tag is decidable via exact division, independently of how the
/// fraction happens to be represented.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientDomain {
    /// The Laurent ring in (q, a1, a2).
    RFull,
    /// Its fraction field.
    FFull,
    /// Laurent polynomials in q with denominators dividing a monomial times
    /// products of (q^{2i} - 1), 1 <= i <= k.
    CkQ(u32),
    /// Laurent polynomials in q alone.
    Cq,
    /// Rational functions in q alone.
    Fq,
}

/// Bound on each exponent m_i when testing CkQ membership against
/// denominators dividing ∏ (q^{2i}-1)^{m_i}.
pub const CKQ_EXPONENT_BOUND: u32 = 4;

impl CoefficientDomain {
    /// Promotion for mixed arithmetic: rings promote to their fraction field.
    pub fn join(self, other: CoefficientDomain) -> CoefficientDomain {
        use CoefficientDomain::*;
        if self == other {
            return self;
        }
        match (self, other) {
            (RFull, FFull) | (FFull, RFull) => FFull,
            (Cq, Fq) | (Fq, Cq) => Fq,
            (CkQ(k), Cq) | (Cq, CkQ(k)) => CkQ(k),
            (CkQ(_), Fq) | (Fq, CkQ(_)) => Fq,
            (CkQ(a), CkQ(b)) => CkQ(a.max(b)),
            // Anything touching the three-variable field lands there.
            _ => FFull,
        }
    }

    /// Does `r` lie in this domain?
    pub fn contains(&self, r: &RatFunc) -> bool {
        match self {
            CoefficientDomain::FFull => true,
            CoefficientDomain::RFull => r.as_poly().is_some(),
            CoefficientDomain::Fq => r.num().is_q_only() && r.den().is_q_only(),
            CoefficientDomain::Cq => r
                .as_poly()
                .is_some_and(|p| p.is_q_only()),
            CoefficientDomain::CkQ(k) => {
                if !r.num().is_q_only() || !r.den().is_q_only() {
                    return false;
                }
                ckq_member(r, *k, CKQ_EXPONENT_BOUND)
            }
        }
    }
}

/// q^{2i} - 1.
fn cyclo_factor(i: u32) -> LaurentPoly {
    &LaurentPoly::q_pow(2 * i as i32) - &LaurentPoly::one()
}

/// True iff num * ∏_{i=1}^{k} (q^{2i}-1)^{m_i} is divisible by den for some
/// choice of exponents m_i <= bound. Searched by saturating one factor at a
/// time: multiplying by more copies of a factor never hurts divisibility, so
/// testing the maximal product is equivalent; we still cancel greedily to
/// keep degrees low.
fn ckq_member(r: &RatFunc, k: u32, bound: u32) -> bool {
    let mut num = r.num().clone();
    let den = r.den().clone();
    if num.exact_div(&den).is_some() {
        return true;
    }
    for i in 1..=k {
        let f = cyclo_factor(i);
        for _ in 0..bound {
            num = &num * &f;
            if num.exact_div(&den).is_some() {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::poly::{quantum_int, QSign};

    #[test]
    fn ring_membership() {
        let p = RatFunc::from_poly(&LaurentPoly::q_pow(2) + &LaurentPoly::alpha1());
        assert!(CoefficientDomain::RFull.contains(&p));
        assert!(CoefficientDomain::FFull.contains(&p));
        assert!(!CoefficientDomain::Cq.contains(&p));

        let f = RatFunc::new(
            LaurentPoly::one(),
            &LaurentPoly::q_pow(1) + &LaurentPoly::alpha2(),
        );
        assert!(!CoefficientDomain::RFull.contains(&f));
        assert!(CoefficientDomain::FFull.contains(&f));
    }

    #[test]
    fn q_only_membership() {
        let p = RatFunc::from_poly(quantum_int(4, QSign::Q));
        assert!(CoefficientDomain::Cq.contains(&p));
        assert!(CoefficientDomain::Fq.contains(&p));
        assert!(CoefficientDomain::CkQ(2).contains(&p));
    }

    #[test]
    fn ckq_membership() {
        // 1/(q^2-1) lies in CkQ(1) but not Cq.
        let r = RatFunc::new(LaurentPoly::one(), super::cyclo_factor(1));
        assert!(CoefficientDomain::CkQ(1).contains(&r));
        assert!(!CoefficientDomain::Cq.contains(&r));

        // [2]_q = q + q^{-1} divides q^{-1}(q^4 - 1) but no power of q^2 - 1,
        // so 1/[2]_q is in CkQ(2) but not CkQ(1).
        let r = RatFunc::new(LaurentPoly::one(), quantum_int(2, QSign::Q));
        assert!(CoefficientDomain::CkQ(2).contains(&r));
        assert!(!CoefficientDomain::CkQ(1).contains(&r));

        // 1/(q+2) is in none of the q-ring tags.
        let r = RatFunc::new(
            LaurentPoly::one(),
            &LaurentPoly::q_pow(1) + &LaurentPoly::from_int(2),
        );
        assert!(!CoefficientDomain::CkQ(3).contains(&r));
        assert!(CoefficientDomain::Fq.contains(&r));
    }

    #[test]
    fn join_table() {
        use CoefficientDomain::*;
        assert_eq!(RFull.join(FFull), FFull);
        assert_eq!(Cq.join(CkQ(2)), CkQ(2));
        assert_eq!(CkQ(1).join(CkQ(3)), CkQ(3));
        assert_eq!(CkQ(2).join(Fq), Fq);
        assert_eq!(RFull.join(Cq), FFull);
    }
}
