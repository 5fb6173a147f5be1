use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

/// A Laurent monomial q^eq * a1^e1 * a2^e2. Ordered lexicographically on
/// (eq, e1, e2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub eq: i32,
    pub e1: i32,
    pub e2: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { eq: 0, e1: 0, e2: 0 };

    pub fn q(eq: i32) -> Self {
        Monomial { eq, e1: 0, e2: 0 }
    }

    pub fn a1(e1: i32) -> Self {
        Monomial { eq: 0, e1, e2: 0 }
    }

    pub fn a2(e2: i32) -> Self {
        Monomial { eq: 0, e1: 0, e2 }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            eq: self.eq + other.eq,
            e1: self.e1 + other.e1,
            e2: self.e2 + other.e2,
        }
    }

    pub fn inv(&self) -> Monomial {
        Monomial { eq: -self.eq, e1: -self.e1, e2: -self.e2 }
    }

    /// Componentwise divisibility in the ordinary polynomial ring.
    fn divides(&self, other: &Monomial) -> bool {
        self.eq <= other.eq && self.e1 <= other.e1 && self.e2 <= other.e2
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("q", self.eq), ("a1", self.e1), ("a2", self.e2)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{}^{}", name, e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// An exact element of Z[q^±1, a1^±1, a2^±1] with rational coefficients.
/// Zero coefficients are never stored; equality is term-map equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(Monomial::ONE, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::term(Monomial::ONE, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(Monomial::q(e))
    }

    pub fn alpha1() -> Self {
        Self::monomial(Monomial::a1(1))
    }

    pub fn alpha2() -> Self {
        Self::monomial(Monomial::a2(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Returns Some((m, c)) iff the polynomial is a single term.
    pub fn as_single_term(&self) -> Option<(Monomial, BigRational)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((*m, c.clone()))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Leading (lexicographically greatest) term.
    pub fn leading(&self) -> Option<(Monomial, BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))
    }

    /// Componentwise minimum of exponents over all terms (the monomial
    /// content in the Laurent ring).
    pub fn content_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return Monomial::ONE,
        };
        it.fold(first, |acc, m| Monomial {
            eq: acc.eq.min(m.eq),
            e1: acc.e1.min(m.e1),
            e2: acc.e2.min(m.e2),
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Exact division in the Laurent ring: returns c with self = b * c when
    /// it exists. Strips monomial content, then long division in lex order.
    pub fn exact_div(&self, b: &LaurentPoly) -> Option<LaurentPoly> {
        if b.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let ca = self.content_monomial();
        let cb = b.content_monomial();
        let a = self.mul_monomial(&ca.inv());
        let b = b.mul_monomial(&cb.inv());
        let (lt_b, lc_b) = b.leading().unwrap();
        let mut r = a;
        let mut quot = LaurentPoly::zero();
        while let Some((lt_r, lc_r)) = r.leading() {
            if !lt_b.divides(&lt_r) {
                return None;
            }
            let t_m = lt_r.mul(&lt_b.inv());
            let t_c = lc_r / &lc_b;
            quot.add_term(t_m, t_c.clone());
            let sub = b.mul_monomial(&t_m).scale(&t_c);
            r = &r - &sub;
        }
        Some(quot.mul_monomial(&ca.mul(&cb.inv())))
    }

    /// Substitutes a1 -> q^{-2}, a2 -> q^{2k}.
    pub fn specialise(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let eq = m.eq - 2 * m.e1 + 2 * (k as i32) * m.e2;
            out.add_term(Monomial::q(eq), c.clone());
        }
        out
    }

    /// True if every monomial has e1 = e2 = 0.
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|m| m.e1 == 0 && m.e2 == 0)
    }

    /// Evaluates at rational points (q, a1, a2); test oracle helper.
    pub fn eval(&self, q: &BigRational, a1: &BigRational, a2: &BigRational) -> BigRational {
        fn pow(b: &BigRational, e: i32) -> BigRational {
            if e >= 0 {
                num::pow::pow(b.clone(), e as usize)
            } else {
                num::pow::pow(b.clone(), (-e) as usize).recip()
            }
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += c * pow(q, m.eq) * pow(a1, m.e1) * pow(a2, m.e2);
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "q": m.eq,
                        "a1": m.e1,
                        "a2": m.e2,
                        "num": c.numer().to_string(),
                        "den": c.denom().to_string(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Option<LaurentPoly> {
        let arr = v.as_array()?;
        let mut p = LaurentPoly::zero();
        for t in arr {
            let m = Monomial {
                eq: t.get("q")?.as_i64()? as i32,
                e1: t.get("a1")?.as_i64()? as i32,
                e2: t.get("a2")?.as_i64()? as i32,
            };
            let num: BigInt = t.get("num")?.as_str()?.parse().ok()?;
            let den: BigInt = t.get("den")?.as_str()?.parse().ok()?;
            if den.is_zero() {
                return None;
            }
            p.add_term(m, BigRational::new(num, den));
        }
        Some(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // Fast path: single term times polynomial.
        if let Some((m, c)) = self.as_single_term() {
            return rhs.mul_monomial(&m).scale(&c);
        }
        if let Some((m, c)) = rhs.as_single_term() {
            return self.mul_monomial(&m).scale(&c);
        }
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Print in decreasing lex order, leading term first.
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *m == Monomial::ONE {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

/// The symbol x in the quantum integer [r]_x: either q or -q^{-1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QSign {
    Q,
    NegQInv,
}

impl QSign {
    /// The symbol itself as a polynomial.
    pub fn poly(&self) -> LaurentPoly {
        self.pow(1)
    }

    /// x^e as a polynomial.
    pub fn pow(&self, e: i32) -> LaurentPoly {
        match self {
            QSign::Q => LaurentPoly::q_pow(e),
            QSign::NegQInv => {
                let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
                LaurentPoly::q_pow(-e).scale(&BigRational::from_integer(BigInt::from(sign)))
            }
        }
    }
}

/// The quantum integer [r]_x = x^{r-1} + x^{r-3} + ... + x^{1-r}.
pub fn quantum_int(r: u32, x: QSign) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let r = r as i32;
    let mut e = 1 - r;
    while e <= r - 1 {
        out = &out + &x.pow(e);
        e += 2;
    }
    out
}

/// [r]_x! = [2]_x [3]_x ... [r]_x.
pub fn quantum_factorial(r: u32, x: QSign) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for j in 2..=r {
        out = &out * &quantum_int(j, x);
    }
    out
}
