//! The hyperoctahedral group B_n (signed permutations) and, as the special
//! case of all-positive windows, the symmetric group: generators, length
//! statistics, canonical reduced words via a product-of-factors normal form,
//! pattern-avoidance predicates, and parabolic double cosets.

use std::fmt;

/// A signed permutation in window notation: the vector (b_1, ..., b_n) with
/// bars encoded as negative entries. Absolute values form {1, ..., n}.
/// Ordinary permutations are the windows with all entries positive.
///
/// Generators act on the right: s_i (i >= 1) swaps window positions i, i+1
/// and s_0 negates b_1. The left action is defined through inversion.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { window: (1..=n as i32).collect() }
    }

    pub fn from_window(window: Vec<i32>) -> Result<Self, String> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &b in &window {
            let a = b.unsigned_abs() as usize;
            if b == 0 || a > n || seen[a] {
                return Err(format!("invalid window {:?}", window));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &b)| b == i as i32 + 1)
    }

    /// The image of j (1-based), extended by ω(-j) = -ω(j).
    pub fn image(&self, j: i32) -> i32 {
        if j > 0 {
            self.window[j as usize - 1]
        } else {
            -self.window[(-j) as usize - 1]
        }
    }

    /// Right action of the generator s_i.
    pub fn apply_generator_right(&self, i: usize) -> SignedPermutation {
        assert!(i < self.n(), "generator index {} out of range for B_{}", i, self.n());
        let mut w = self.window.clone();
        if i == 0 {
            w[0] = -w[0];
        } else {
            w.swap(i - 1, i);
        }
        SignedPermutation { window: w }
    }

    /// Left action of the generator s_i: transforms values rather than
    /// positions.
    pub fn apply_generator_left(&self, i: usize) -> SignedPermutation {
        assert!(i < self.n(), "generator index {} out of range for B_{}", i, self.n());
        let mut w = self.window.clone();
        if i == 0 {
            for b in &mut w {
                if b.unsigned_abs() == 1 {
                    *b = -*b;
                }
            }
        } else {
            let (x, y) = (i as i32, i as i32 + 1);
            for b in &mut w {
                if b.abs() == x {
                    *b = b.signum() * y;
                } else if b.abs() == y {
                    *b = b.signum() * x;
                }
            }
        }
        SignedPermutation { window: w }
    }

    /// Group product: (self * other)(j) = self(other(j)).
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.n(), other.n());
        SignedPermutation {
            window: other.window.iter().map(|&t| self.image(t)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut w = vec![0; self.n()];
        for (j, &b) in self.window.iter().enumerate() {
            w[b.unsigned_abs() as usize - 1] = if b > 0 { j as i32 + 1 } else { -(j as i32 + 1) };
        }
        SignedPermutation { window: w }
    }

    /// Right descent: length(ω s_i) < length(ω).
    pub fn has_right_descent(&self, i: usize) -> bool {
        if i == 0 {
            self.window[0] < 0
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    /// Left descent: length(s_i ω) < length(ω).
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    /// Coxeter length, by greedy descent stripping.
    pub fn length(&self) -> usize {
        let mut w = self.clone();
        let mut len = 0;
        'outer: loop {
            for i in 0..w.n() {
                if w.has_right_descent(i) {
                    w = w.apply_generator_right(i);
                    len += 1;
                    continue 'outer;
                }
            }
            debug_assert!(w.is_identity());
            return len;
        }
    }

    /// Number of occurrences of s_0 in any reduced word; equals the number
    /// of negative window entries.
    pub fn ell0(&self) -> usize {
        self.window.iter().filter(|&&b| b < 0).count()
    }

    /// The factor decomposition ω = F_1 F_2 ... F_r with strictly increasing
    /// top indices, obtained by peeling the largest moved value.
    pub fn normal_form(&self) -> Vec<NormalFormFactor> {
        let mut w = self.clone();
        let mut factors = Vec::new();
        for top in (1..=self.n()).rev() {
            let j = w
                .window
                .iter()
                .position(|&b| b.unsigned_abs() as usize == top)
                .unwrap()
                + 1;
            let f = if w.window[j - 1] == top as i32 {
                if j == top {
                    continue; // value fixed, no factor
                }
                NormalFormFactor { n: top - 1, m: j as i32 }
            } else {
                NormalFormFactor { n: top - 1, m: -(j as i32 - 1) }
            };
            // Divide the factor off on the right; generators are involutions
            // so the inverse word is the reverse.
            for &l in f.letters().iter().rev() {
                w = w.apply_generator_right(l);
            }
            factors.push(f);
        }
        factors.reverse();
        debug_assert!({
            let mut chk = SignedPermutation::identity(self.n());
            for f in &factors {
                for &l in &f.letters() {
                    chk = chk.apply_generator_right(l);
                }
            }
            chk == *self
        });
        factors
    }

    /// The canonical reduced word: concatenation of the normal-form factors.
    pub fn canonical_reduced_word(&self) -> Vec<usize> {
        self.normal_form()
            .iter()
            .flat_map(|f| f.letters())
            .collect()
    }

    pub fn avoids(&self, pattern: Pattern) -> bool {
        let w = &self.window;
        let n = w.len();
        match pattern {
            Pattern::OnebarTwobar => {
                // No barred pair in increasing absolute value.
                for i in 0..n {
                    for j in i + 1..n {
                        if w[i] < 0 && w[j] < 0 && w[i].abs() < w[j].abs() {
                            return false;
                        }
                    }
                }
                true
            }
            Pattern::FcTop => {
                // No barred entry preceded by a smaller-in-absolute-value
                // entry of either sign.
                for j in 0..n {
                    if w[j] < 0 && w[..j].iter().any(|&b| b.abs() < w[j].abs()) {
                        return false;
                    }
                }
                // No positive entry strictly inside an absolute-value-
                // decreasing subsequence of length three.
                for j in 0..n {
                    if w[j] > 0
                        && w[..j].iter().any(|&b| b.abs() > w[j].abs())
                        && w[j + 1..].iter().any(|&b| b.abs() < w[j].abs())
                    {
                        return false;
                    }
                }
                true
            }
            Pattern::BarsDescLimit(k) => {
                self.ell0() < k as usize + 1 && self.avoids(Pattern::OnebarTwobar)
            }
            Pattern::FcTopLimit(k) => {
                self.ell0() < k as usize + 1 && self.avoids(Pattern::FcTop)
            }
            Pattern::Doubled321 => {
                // 321-avoidance of the doubled word (-b_n, ..., -b_1, b_1,
                // ..., b_n) on the value set {-n..-1, 1..n}.
                let d: Vec<i32> = w
                    .iter()
                    .rev()
                    .map(|&b| -b)
                    .chain(w.iter().copied())
                    .collect();
                for i in 0..d.len() {
                    for j in i + 1..d.len() {
                        if d[j] >= d[i] {
                            continue;
                        }
                        if d[j + 1..].iter().any(|&x| x < d[j]) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses a comma-separated window, e.g. "3,-2,4,5,-1".
pub fn parse_window(s: &str) -> Result<SignedPermutation, String> {
    let window: Result<Vec<i32>, _> = s
        .split(',')
        .map(|t| t.trim().parse::<i32>().map_err(|e| e.to_string()))
        .collect();
    SignedPermutation::from_window(window?)
}

/// Pattern-avoidance classes of signed permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// No two barred entries in increasing absolute value.
    OnebarTwobar,
    /// Fully-commutative-top condition (six forbidden patterns).
    FcTop,
    /// OnebarTwobar with fewer than k+1 bars.
    BarsDescLimit(u32),
    /// FcTop with fewer than k+1 bars.
    FcTopLimit(u32),
    /// 321-avoiding as a permutation of {-n..-1, 1..n}.
    Doubled321,
}

/// One factor [n, m] of the normal form:
///   m >= 1: the word g_n g_{n-1} ... g_m;
///   m == 0: the word g_n g_{n-1} ... g_1 g_0;
///   m <= -1: the word g_n ... g_1 g_0 g_1 ... g_{|m|}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalFormFactor {
    pub n: usize,
    pub m: i32,
}

impl NormalFormFactor {
    pub fn letters(&self) -> Vec<usize> {
        let mut l: Vec<usize> = if self.m >= 1 {
            (self.m as usize..=self.n).rev().collect()
        } else {
            (0..=self.n).rev().collect()
        };
        if self.m < 0 {
            l.extend(1..=(-self.m) as usize);
        }
        l
    }

    pub fn len(&self) -> usize {
        if self.m >= 1 {
            self.n + 1 - self.m as usize
        } else {
            self.n + 1 + (-self.m) as usize
        }
    }

    pub fn is_empty(&self) -> bool {
        false // every factor contains at least one letter
    }
}

impl fmt::Display for NormalFormFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.n, self.m)
    }
}

/// Hard default bound for group enumerations (|B_7| = 645120).
pub const ENUMERATION_BOUND: usize = 7;

/// All elements of B_n in lexicographic window order.
pub fn enumerate_bn(n: usize) -> Vec<SignedPermutation> {
    enumerate_bn_bounded(n, ENUMERATION_BOUND).expect("enumeration bound exceeded")
}

pub fn enumerate_bn_bounded(n: usize, bound: usize) -> Result<Vec<SignedPermutation>, String> {
    if n > bound {
        return Err(format!("n = {} exceeds enumeration bound {}", n, bound));
    }
    let mut out = Vec::new();
    let mut window = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(
        n: usize,
        window: &mut Vec<i32>,
        used: &mut Vec<bool>,
        out: &mut Vec<SignedPermutation>,
    ) {
        if window.len() == n {
            out.push(SignedPermutation { window: window.clone() });
            return;
        }
        // Lexicographic on windows: -n < ... < -1 < 1 < ... < n.
        for v in (-(n as i32)..=n as i32).filter(|&v| v != 0) {
            if used[v.unsigned_abs() as usize] {
                continue;
            }
            used[v.unsigned_abs() as usize] = true;
            window.push(v);
            rec(n, window, used, out);
            window.pop();
            used[v.unsigned_abs() as usize] = false;
        }
    }
    rec(n, &mut window, &mut used, &mut out);
    Ok(out)
}

/// All elements of S_m (all-positive windows) in lexicographic window order.
pub fn enumerate_sn(m: usize) -> Vec<SignedPermutation> {
    assert!(m <= ENUMERATION_BOUND + 1, "enumeration bound exceeded");
    let mut out = Vec::new();
    let mut window = Vec::with_capacity(m);
    let mut used = vec![false; m + 1];
    fn rec(
        m: usize,
        window: &mut Vec<i32>,
        used: &mut Vec<bool>,
        out: &mut Vec<SignedPermutation>,
    ) {
        if window.len() == m {
            out.push(SignedPermutation { window: window.clone() });
            return;
        }
        for v in 1..=m as i32 {
            if used[v as usize] {
                continue;
            }
            used[v as usize] = true;
            window.push(v);
            rec(m, window, used, out);
            window.pop();
            used[v as usize] = false;
        }
    }
    rec(m, &mut window, &mut used, &mut out);
    out
}

/// All elements of B_n satisfying the predicate, in lexicographic order.
pub fn enumerate(n: usize, pattern: Pattern) -> Vec<SignedPermutation> {
    enumerate_bn(n)
        .into_iter()
        .filter(|w| w.avoids(pattern))
        .collect()
}

/// The minimal-length representatives of the double cosets
/// S_k \ S_{k+n} / S_k, where S_k is generated by s_1, ..., s_{k-1} acting
/// on the first k strands. An element is the minimal representative iff it
/// has no left and no right descent at any of those generators.
pub fn double_coset_min_reps(k: usize, n: usize) -> Vec<SignedPermutation> {
    let m = k + n;
    assert!(m <= 8, "k + n = {} exceeds bound 8", m);
    enumerate_sn(m)
        .into_iter()
        .filter(|w| {
            (1..k).all(|i| !w.has_right_descent(i) && !w.has_left_descent(i))
        })
        .collect()
}
