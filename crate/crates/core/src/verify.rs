//! The verification registry: a closed list of named claims, each checked
//! mechanically at desk scale and reported as verified, falsified, or as a
//! definite divisibility answer. Falsified reports always carry a witness.

use std::fmt;
use std::time::{Duration, Instant};

use crate::combinat::{self, bratteli, Family};
use crate::coxeter::{enumerate, enumerate_bn, double_coset_min_reps, Pattern, SignedPermutation};
use crate::fused::{build_fused_context, verify_isomorphism};
use crate::hecke::{
    check_central_quasi_idempotent, quasi_idempotent_e, quasi_idempotent_e_factored,
    quasi_idempotent_e_field_recursive, quasi_idempotent_e_recursive, tilde_e, Ambient,
    EigenvaluePair, HeckeElement, TildeVariant,
};
use crate::quotient::{
    build_context, conjectural_tilde, embed, structure_constants, u_factor, Divisibility,
    QuotientSpec,
};
use crate::ring::poly::{quantum_factorial, quantum_int, LaurentPoly, QSign};
use crate::ring::ratfunc::RatFunc;

/// The closed registry of claim identifiers.
pub const CLAIM_IDS: &[&str] = &[
    "HB.quasi_idem",
    "HB.E_consistency",
    "A.renorm",
    "A.basis",
    "C2.presentation",
    "C2.basis",
    "C2.renorm",
    "AK.span",
    "AK.basis",
    "AK.conj",
    "FH.dim",
    "FH.S0",
    "FH.T",
    "FH.ST",
    "FH.TSTS",
    "PHI.iso",
    "CNK.relations",
    "SEAM.u",
    "SEAM.basis",
    "DIM.cross",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Falsified,
    DivisibilityHolds,
    DivisibilityFails,
}

impl Status {
    pub fn passed(self) -> bool {
        matches!(self, Status::Verified | Status::DivisibilityHolds)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Falsified => "falsified",
            Status::DivisibilityHolds => "divisibility-holds",
            Status::DivisibilityFails => "divisibility-fails",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Optional parameter overrides; every claim has safe defaults.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub cap_n: Option<usize>,
    pub depth: Option<usize>,
    pub family: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub claim: String,
    pub params: String,
    pub status: Status,
    /// The offending identity or element; always present when falsified.
    pub witness: Option<String>,
    pub wall_time: Duration,
}

impl Report {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "claim": self.claim,
            "params": self.params,
            "status": self.status.as_str(),
            "witness": self.witness,
            "wall_time_ms": self.wall_time.as_millis() as u64,
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {} ({:.2?})",
            self.claim, self.params, self.status, self.wall_time
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness: {}", w)?;
        }
        Ok(())
    }
}

#[derive(Debug)]
pub struct UnknownClaim(pub String);

impl fmt::Display for UnknownClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown claim id: {}", self.0)
    }
}

impl std::error::Error for UnknownClaim {}

/// Accumulates named boolean checks; the first failure becomes the witness.
struct Checks {
    failures: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Checks { failures: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        if !ok {
            self.failures.push(name.into());
        }
    }

    fn finish(self) -> (Status, Option<String>) {
        if self.failures.is_empty() {
            (Status::Verified, None)
        } else {
            (Status::Falsified, Some(self.failures.join("; ")))
        }
    }
}

fn pair_label(p: EigenvaluePair) -> String {
    let x = match p.x {
        QSign::Q => "q",
        QSign::NegQInv => "-q^-1",
    };
    format!("({},a{})", x, p.b)
}

/// Runs one registry claim. Returns Err for unknown ids.
pub fn run_claim(id: &str, params: &Params) -> Result<Report, UnknownClaim> {
    let start = Instant::now();
    let (param_str, status, witness) = match id {
        "HB.quasi_idem" => {
            let n_max = params.n.unwrap_or(3);
            let mut c = Checks::new();
            for n in 1..=n_max {
                for p in crate::hecke::EigenvaluePair::all() {
                    let rep = check_central_quasi_idempotent(n, p);
                    for (name, ok) in rep.entries {
                        c.check(format!("n={} {} {}", n, pair_label(p), name), ok);
                    }
                }
            }
            let (s, w) = c.finish();
            (format!("n<={}", n_max), s, w)
        }
        "HB.E_consistency" => {
            let n_max = params.n.unwrap_or(3);
            let mut c = Checks::new();
            for n in 1..=n_max {
                for p in crate::hecke::EigenvaluePair::all() {
                    let e = quasi_idempotent_e(n, p);
                    c.check(
                        format!("n={} recursive {}", n, pair_label(p)),
                        quasi_idempotent_e_recursive(n, p) == e,
                    );
                    c.check(
                        format!("n={} factored {}", n, pair_label(p)),
                        quasi_idempotent_e_factored(n, p) == e,
                    );
                    c.check(
                        format!("n={} field-recursive {}", n, pair_label(p)),
                        quasi_idempotent_e_field_recursive(n, p) == e,
                    );
                }
            }
            let (s, w) = c.finish();
            (format!("n<={}", n_max), s, w)
        }
        "A.renorm" => {
            let n_max = params.n.unwrap_or(3);
            let mut c = Checks::new();
            for n in 2..=n_max {
                let ctx = build_context(QuotientSpec::symmetric_one_boundary(n));
                let e = quasi_idempotent_e(n, EigenvaluePair::new(QSign::NegQInv, 1));
                let mut scalar =
                    LaurentPoly::monomial(crate::ring::poly::Monomial::a2(-1));
                for i in 0..n - 1 {
                    let ratio = crate::ring::poly::Monomial { eq: -2 * i as i32, e1: 1, e2: -1 };
                    scalar = &scalar * &(&LaurentPoly::one() - &LaurentPoly::monomial(ratio));
                }
                let t = tilde_e(n, TildeVariant::AMinusqAlpha1).scale_poly(&scalar);
                c.check(format!("n={} antisymmetric", n), ctx.verify_identity(&e, &t));
                let e = quasi_idempotent_e(n, EigenvaluePair::new(QSign::Q, 2));
                let scalar = &LaurentPoly::q_pow((n * (n - 1) / 2) as i32)
                    * &quantum_factorial(n as u32, QSign::Q);
                let t = tilde_e(n, TildeVariant::AQAlpha2).scale_poly(&scalar);
                c.check(format!("n={} symmetric", n), ctx.verify_identity(&e, &t));
            }
            let (s, w) = c.finish();
            (format!("n<={}", n_max), s, w)
        }
        "A.basis" => {
            let n_max = params.n.unwrap_or(3);
            let mut c = Checks::new();
            for n in 0..=n_max {
                let ctx = build_context(QuotientSpec::symmetric_one_boundary(n));
                c.check(format!("n={} basis theorem", n), ctx.basis_theorem_holds());
                c.check(
                    format!("n={} dim closed form", n),
                    ctx.dim == combinat::dim_symmetric_one_boundary(n as u64) as usize,
                );
            }
            let (s, w) = c.finish();
            (format!("n<={}", n_max), s, w)
        }
        "C2.presentation" => {
            let n_max = params.n.unwrap_or(3);
            let mut c = Checks::new();
            for n in 2..=n_max {
                let a = build_context(QuotientSpec::one_boundary_tl(n));
                let p = build_context(QuotientSpec::one_boundary_tl_presentation(n));
                c.check(format!("n={} same dim", n), a.dim == p.dim);
                c.check(
                    format!("n={} ideals agree", n),
                    a.spec.killed.iter().all(|g| p.reduce(g).is_zero())
                        && p.spec.killed.iter().all(|g| a.reduce(g).is_zero()),
                );
            }
            let (s, w) = c.finish();
            (format!("n<={}", n_max), s, w)
        }
        "C2.basis" => {
            let n_max = params.n.unwrap_or(3);
            let mut c = Checks::new();
            for n in 0..=n_max {
                let ctx = build_context(QuotientSpec::one_boundary_tl(n));
                c.check(format!("n={} basis theorem", n), ctx.basis_theorem_holds());
                c.check(
                    format!("n={} dim closed form", n),
                    ctx.dim == combinat::dim_one_boundary_tl(n as u64) as usize,
                );
            }
            let (s, w) = c.finish();
            (format!("n<={}", n_max), s, w)
        }
        "C2.renorm" => {
            let n_max = params.n.unwrap_or(3);
            let mut c = Checks::new();
            for n in 2..=n_max {
                let ctx = build_context(QuotientSpec::one_boundary_tl(n));
                for b in [1u8, 2] {
                    let e = quasi_idempotent_e(n, EigenvaluePair::new(QSign::Q, b));
                    let scalar = &LaurentPoly::q_pow((n * (n - 1) / 2) as i32)
                        * &quantum_factorial(n as u32, QSign::Q);
                    let t = tilde_e(n, TildeVariant::C2QAlphab(b)).scale_poly(&scalar);
                    c.check(format!("n={} b={}", n, b), ctx.verify_identity(&e, &t));
                }
            }
            let (s, w) = c.finish();
            (format!("n<={}", n_max), s, w)
        }
        "AK.span" => {
            let k_max = params.k.unwrap_or(2);
            let mut c = Checks::new();
            for k in 1..=k_max {
                let n = k + 1;
                let ctx =
                    build_context(QuotientSpec::symmetric_one_boundary_specialised(n, k as u32));
                let e = quasi_idempotent_e(n, EigenvaluePair::new(QSign::Q, 1))
                    .specialise(k as u32);
                let red = ctx.reduce(&e);
                let window: Vec<i32> = (1..=n as i32).rev().map(|v| -v).collect();
                let w = SignedPermutation::from_window(window).unwrap();
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let expect = LaurentPoly::q_pow(-2 * k as i32 * n as i32 + ((n - 1) * n) as i32)
                    .scale(&num::BigRational::from_integer(sign.into()));
                let expect = &expect * &quantum_factorial(n as u32, QSign::Q);
                c.check(
                    format!("k={} leading coefficient", k),
                    red.coeff(&w) == RatFunc::from_poly(expect),
                );
            }
            let (s, w) = c.finish();
            (format!("k<={}", k_max), s, w)
        }
        "AK.basis" => {
            let n_max = params.n.unwrap_or(3);
            let k_max = params.k.unwrap_or(2);
            let mut c = Checks::new();
            for k in 1..=k_max {
                for n in 1..=n_max {
                    let ctx = build_context(QuotientSpec::truncated_one_boundary(n, k as u32));
                    c.check(format!("k={} n={} basis theorem", k, n), ctx.basis_theorem_holds());
                    c.check(
                        format!("k={} n={} dim", k, n),
                        ctx.dim == combinat::dim_fused(k as u64, n as u64) as usize,
                    );
                }
            }
            let (s, w) = c.finish();
            (format!("k<={} n<={}", k_max, n_max), s, w)
        }
        "AK.conj" => {
            let k = params.k.unwrap_or(2);
            match conjectural_tilde(k as u32) {
                Divisibility::Holds(e) => (
                    format!("k={}", k),
                    Status::DivisibilityHolds,
                    Some(format!("quotient element: {}", e)),
                ),
                Divisibility::Fails { witness, coefficient } => (
                    format!("k={}", k),
                    Status::DivisibilityFails,
                    Some(format!("g[{}] coefficient {}", witness, coefficient)),
                ),
            }
        }
        "FH.dim" => {
            let mut c = Checks::new();
            let k_max = params.k.unwrap_or(4);
            let n_max = params.n.unwrap_or(4);
            for k in 1..=k_max {
                for n in 0..=n_max {
                    if k + n > 7 {
                        continue;
                    }
                    let cosets = double_coset_min_reps(k, n).len();
                    let closed = combinat::dim_fused(k as u64, n as u64) as usize;
                    let avoid = enumerate(n, Pattern::BarsDescLimit(k as u32)).len();
                    c.check(format!("k={} n={} coset=closed", k, n), cosets == closed);
                    c.check(format!("k={} n={} coset=avoiders", k, n), cosets == avoid);
                }
            }
            let (s, w) = c.finish();
            (format!("k<={} n<={} k+n<=7", k_max, n_max), s, w)
        }
        "FH.S0" => {
            let mut c = Checks::new();
            let pairs = fused_pairs(params, 3, 2);
            for &(k, n) in &pairs {
                let ctx = build_fused_context(k, n);
                let s0 = ctx.s_0();
                let unit = ctx.unit();
                let hi = unit.scale(&RatFunc::from_poly(LaurentPoly::q_pow(2 * k as i32)));
                let lo = unit.scale(&RatFunc::from_poly(LaurentPoly::q_pow(-2)));
                c.check(
                    format!("k={} n={}", k, n),
                    ctx.mul(&s0.sub(&hi), &s0.sub(&lo)).is_zero(),
                );
            }
            let (s, w) = c.finish();
            (pairs_label(&pairs), s, w)
        }
        "FH.T" => {
            let mut c = Checks::new();
            let pairs = fused_pairs(params, 3, 2);
            for &(k, n) in &pairs {
                let ctx = build_fused_context(k, n);
                let t = ctx.t();
                let unit = ctx.unit();
                let kq = RatFunc::from_poly(quantum_int(k as u32, QSign::Q));
                let lhs = ctx.mul(
                    &t.sub(&unit.scale(&RatFunc::from_poly(LaurentPoly::q_pow(1)))),
                    &t.add(&unit.scale(
                        &(&RatFunc::from_poly(LaurentPoly::q_pow(-(k as i32))) * &kq.inv()),
                    )),
                );
                c.check(format!("k={} n={}", k, n), lhs.is_zero());
            }
            let (s, w) = c.finish();
            (pairs_label(&pairs), s, w)
        }
        "FH.ST" => {
            let mut c = Checks::new();
            let pairs = fused_pairs(params, 3, 2);
            for &(k, n) in &pairs {
                let ctx = build_fused_context(k, n);
                let q = RatFunc::from_poly(LaurentPoly::q_pow(1));
                let kq = RatFunc::from_poly(quantum_int(k as u32, QSign::Q));
                let scalar = &(&(&q - &q.inv())
                    * &RatFunc::from_poly(LaurentPoly::q_pow(k as i32 - 1)))
                    * &kq;
                let rhs = ctx.t().scale(&scalar).add(&ctx.unit());
                c.check(format!("k={} n={}", k, n), ctx.s_0() == rhs);
            }
            let (s, w) = c.finish();
            (pairs_label(&pairs), s, w)
        }
        "FH.TSTS" => {
            let mut c = Checks::new();
            let pairs: Vec<(usize, usize)> = fused_pairs(params, 3, 2)
                .into_iter()
                .filter(|&(_, n)| n >= 2)
                .collect();
            for &(k, n) in &pairs {
                let ctx = build_fused_context(k, n);
                let t = ctx.t();
                let s1 = ctx.s_i(1);
                let q = RatFunc::from_poly(LaurentPoly::q_pow(1));
                let scalar = &RatFunc::from_poly(LaurentPoly::q_pow(1 - k as i32))
                    * &RatFunc::from_poly(quantum_int(k as u32, QSign::Q)).inv();
                let ts1 = ctx.mul(&t, &s1);
                let s1t = ctx.mul(&s1, &t);
                let ts1t = ctx.mul(&ts1, &t);
                let s1ts1 = ctx.mul(&s1t, &s1);
                let lhs1 = ctx.mul(&ts1, &ts1).sub(&ts1t.scale(&q));
                let rhs1 = s1t.sub(&s1ts1.scale(&q.inv())).scale(&scalar);
                c.check(format!("k={} n={} right", k, n), lhs1 == rhs1);
                let lhs2 = ctx.mul(&s1t, &s1t).sub(&ts1t.scale(&q));
                let rhs2 = ts1.sub(&s1ts1.scale(&q.inv())).scale(&scalar);
                c.check(format!("k={} n={} left", k, n), lhs2 == rhs2);
            }
            let (s, w) = c.finish();
            (pairs_label(&pairs), s, w)
        }
        "PHI.iso" => {
            let mut c = Checks::new();
            let pairs = iso_pairs(params);
            for &(k, n) in &pairs {
                let ctx = build_fused_context(k, n);
                for check in verify_isomorphism(&ctx) {
                    c.check(format!("k={} n={} {}", k, n, check.name), check.pass);
                }
            }
            let (s, w) = c.finish();
            (pairs_label(&pairs), s, w)
        }
        "CNK.relations" => {
            let mut c = Checks::new();
            let pairs: Vec<(usize, usize)> = match (params.k, params.n) {
                (Some(k), Some(n)) => vec![(k, n)],
                _ => vec![(1, 2), (2, 2), (1, 3)],
            };
            for &(k, n) in &pairs {
                let ctx = build_fused_context(k, n);
                let (first, second) = ctx.centraliser_relation_elements(2);
                let te = tilde_e(2, TildeVariant::AMinusqAlpha1).specialise(k as u32);
                let image = ctx.phi(&embed(&te, n));
                let scalar =
                    &RatFunc::from_poly(LaurentPoly::q_pow(2 * k as i32)) - &RatFunc::one();
                c.check(
                    format!("k={} n={} renormalised image", k, n),
                    image == first.scale(&scalar),
                );
                let expect = combinat::dim_seam(k as u64, n as u64) as usize;
                let mut killed = vec![first.clone()];
                killed.extend(second);
                c.check(
                    format!("k={} n={} quotient dim", k, n),
                    ctx.quotient_dim(&killed) == expect,
                );
                c.check(
                    format!("k={} n={} first relation suffices", k, n),
                    ctx.quotient_dim(&[first]) == expect,
                );
            }
            let (s, w) = c.finish();
            (pairs_label(&pairs), s, w)
        }
        "SEAM.u" => {
            let mut c = Checks::new();
            let k_max = params.k.unwrap_or(2);
            for k in 1..=k_max {
                let n = k + 1;
                // u-product relation: killing u_1...u_{k+1} produces the
                // same quotient as the renormalised truncation relation.
                let mut uprod = HeckeElement::one(Ambient::TypeB(n)).with_spec_k(Some(k as u32));
                for m in 0..=k {
                    uprod = uprod.mul(&u_factor(n, m, k as u32));
                }
                let mut spec = QuotientSpec::one_boundary_tl_specialised(n, k as u32);
                spec.killed.push(uprod.clone());
                spec.designated = Some(Pattern::FcTopLimit(k as u32));
                let via_u = build_context(spec);
                let seam = build_context(QuotientSpec::boundary_seam(n, k as u32));
                c.check(format!("k={} dims agree", k), via_u.dim == seam.dim);
                c.check(format!("k={} u-product in seam ideal", k), seam.reduce(&uprod).is_zero());
                c.check(format!("k={} basis theorem", k), via_u.basis_theorem_holds());
                // Recursion: tilde-E_{m+1} = tilde-E_m u_{m+1} in the
                // specialised quotient.
                let ctx = build_context(QuotientSpec::one_boundary_tl_specialised(n, k as u32));
                for m in 1..n {
                    let lhs = tilde_e(m + 1, TildeVariant::C2QAlphab(1)).specialise(k as u32);
                    let rhs = embed(
                        &tilde_e(m, TildeVariant::C2QAlphab(1)).specialise(k as u32),
                        m + 1,
                    )
                    .mul(&u_factor(m + 1, m, k as u32));
                    c.check(
                        format!("k={} m={} recursion", k, m),
                        ctx.verify_identity(&embed(&lhs, n), &embed(&rhs, n)),
                    );
                }
            }
            let (s, w) = c.finish();
            (format!("k<={} n=k+1", k_max), s, w)
        }
        "SEAM.basis" => {
            let mut c = Checks::new();
            let pairs: Vec<(usize, usize)> = match (params.k, params.n) {
                (Some(k), Some(n)) => vec![(k, n)],
                _ => vec![(1, 2), (1, 3), (2, 3)],
            };
            for &(k, n) in &pairs {
                let ctx = build_context(QuotientSpec::boundary_seam_integral(n, k as u32));
                c.check(format!("k={} n={} basis theorem", k, n), ctx.basis_theorem_holds());
                let sc = structure_constants(&ctx);
                c.check(
                    format!("k={} n={} q-integral structure constants", k, n),
                    sc.integral(),
                );
            }
            let (s, w) = c.finish();
            (pairs_label(&pairs), s, w)
        }
        "DIM.cross" => {
            let mut c = Checks::new();
            let depth = params.depth.unwrap_or(6).min(8);
            let hb = bratteli(Family::HB, depth.min(5));
            for n in 0..=depth.min(5) {
                c.check(
                    format!("HB n={}", n),
                    hb.dim_sum_of_squares(n) == combinat::dim_hecke_b(n as u64),
                );
            }
            let a = bratteli(Family::A, depth);
            for n in 0..=depth {
                c.check(
                    format!("A n={}", n),
                    a.dim_sum_of_squares(n) == combinat::dim_symmetric_one_boundary(n as u64),
                );
            }
            let c2 = bratteli(Family::C(2), depth);
            for n in 0..=depth {
                c.check(
                    format!("C2 n={}", n),
                    c2.dim_sum_of_squares(n) == combinat::dim_one_boundary_tl(n as u64),
                );
            }
            let c3 = bratteli(Family::C(3), 4);
            for (n, d) in [(0usize, 1u64), (1, 2), (2, 7), (3, 33), (4, 183)] {
                c.check(format!("C3 n={}", n), c3.dim_sum_of_squares(n) == d);
            }
            for k in 1..=4usize {
                let f = bratteli(Family::Fused(k as u32), depth);
                let s = bratteli(Family::Seam(k as u32), depth);
                for n in 0..=depth {
                    c.check(
                        format!("Fused({}) n={}", k, n),
                        f.dim_sum_of_squares(n) == combinat::dim_fused(k as u64, n as u64),
                    );
                    c.check(
                        format!("Seam({}) n={}", k, n),
                        s.dim_sum_of_squares(n) == combinat::dim_seam(k as u64, n as u64),
                    );
                }
            }
            // Seam figure row and pattern-count cross-checks.
            c.check(
                "Seam(3) level 4 row",
                bratteli(Family::Seam(3), 4).level_dims(4) == vec![1, 4, 6, 4],
            );
            for n in 0..=5usize {
                c.check(
                    format!("B_{} pattern counts", n),
                    enumerate(n, Pattern::FcTop).len()
                        == combinat::dim_one_boundary_tl(n as u64) as usize
                        && enumerate(n, Pattern::OnebarTwobar).len()
                            == combinat::dim_symmetric_one_boundary(n as u64) as usize
                        && enumerate_bn(n).len() == combinat::dim_hecke_b(n as u64) as usize,
                );
            }
            let (s, w) = c.finish();
            (format!("depth<={}", depth), s, w)
        }
        other => return Err(UnknownClaim(other.to_string())),
    };
    Ok(Report {
        claim: id.to_string(),
        params: param_str,
        status,
        witness,
        wall_time: start.elapsed(),
    })
}

fn fused_pairs(params: &Params, k_max: usize, n_max: usize) -> Vec<(usize, usize)> {
    match (params.k, params.n) {
        (Some(k), Some(n)) => vec![(k, n)],
        _ => {
            let mut out = Vec::new();
            for k in 1..=k_max {
                for n in 1..=n_max {
                    if k + n <= 5 {
                        out.push((k, n));
                    }
                }
            }
            out
        }
    }
}

fn iso_pairs(params: &Params) -> Vec<(usize, usize)> {
    match (params.k, params.n) {
        (Some(k), Some(n)) => vec![(k, n)],
        _ => vec![(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (1, 3)],
    }
}

fn pairs_label(pairs: &[(usize, usize)]) -> String {
    pairs
        .iter()
        .map(|(k, n)| format!("(k={},n={})", k, n))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Runs every registry claim with default parameters.
pub fn run_all(params: &Params) -> Vec<Report> {
    CLAIM_IDS
        .iter()
        .map(|id| run_claim(id, params).expect("registry ids are valid"))
        .collect()
}
