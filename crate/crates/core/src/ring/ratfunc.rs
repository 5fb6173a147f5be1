use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigRational, One};

use super::poly::{LaurentPoly, Monomial};

/// A rational function num/den over the Laurent ring. Not fully reduced in
/// general (there is no multivariate gcd here); instead normalisation strips
/// the denominator's monomial content, makes the denominator's leading
/// coefficient one, and cancels when one of num, den exactly divides the
/// other. Equality is decided by cross-multiplication, which is exact.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
        assert!(!den.is_zero(), "division by zero");
        let mut r = RatFunc { num, den };
        r.normalise();
        r
    }

    pub fn from_poly(p: LaurentPoly) -> RatFunc {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> RatFunc {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> RatFunc {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> RatFunc {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &RatFunc::one()
    }

    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Returns the numerator when the denominator is trivial, i.e. the
    /// element lies in the Laurent ring by exact division.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.exact_div(&self.den)
    }

    fn normalise(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // Monomials are units: fold the denominator's content into num.
        let c = self.den.content_monomial();
        if c != Monomial::ONE {
            self.den = self.den.mul_monomial(&c.inv());
            self.num = self.num.mul_monomial(&c.inv());
        }
        // Cheap cancellation when one side exactly divides the other.
        if let Some(q) = self.num.exact_div(&self.den) {
            self.num = q;
            self.den = LaurentPoly::one();
        } else if let Some(q) = self.den.exact_div(&self.num) {
            self.num = LaurentPoly::one();
            self.den = q;
        }
        // Make the denominator's leading coefficient one.
        let (_, lc) = self.den.leading().unwrap();
        if !lc.is_one() {
            let inv = lc.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    /// Substitutes a1 -> q^{-2}, a2 -> q^{2k}.
    pub fn specialise(&self, k: u32) -> RatFunc {
        RatFunc::new(self.num.specialise(k), self.den.specialise(k))
    }

    pub fn eval(&self, q: &BigRational, a1: &BigRational, a2: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q, a1, a2);
        if d == BigRational::from_integer(0.into()) {
            return None;
        }
        Some(self.num.eval(q, a1, a2) / d)
    }

    pub fn to_json(&self) -> serde_json::Value {
        if self.den.is_one() {
            self.num.to_json()
        } else {
            serde_json::json!({
                "num": self.num.to_json(),
                "den": self.den.to_json(),
            })
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Option<RatFunc> {
        if v.is_array() {
            return Some(RatFunc::from_poly(LaurentPoly::from_json(v)?));
        }
        let num = LaurentPoly::from_json(v.get("num")?)?;
        let den = LaurentPoly::from_json(v.get("den")?)?;
        if den.is_zero() {
            return None;
        }
        Some(RatFunc::new(num, den))
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        // a/b == c/d  iff  a*d == c*b; exact over the Laurent ring.
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-cancel before multiplying to keep degrees down.
        if let Some(q) = self.num.exact_div(&rhs.den) {
            let left = RatFunc { num: q, den: self.den.clone() };
            return RatFunc::new(&left.num * &rhs.num, left.den);
        }
        if let Some(q) = rhs.num.exact_div(&self.den) {
            let right = RatFunc { num: q, den: rhs.den.clone() };
            return RatFunc::new(&self.num * &right.num, right.den);
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}
