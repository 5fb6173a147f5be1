//! Partitions, bipartitions, standard-tableau counts, Bratteli diagrams
//! for every algebra family, and the closed-form dimension formulas.
//! These are independent combinatorial oracles for the linear-algebra
//! dimensions computed in the quotient and fused modules.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(pub Vec<u64>);

impl Partition {
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// All partitions obtained by adding one box.
    pub fn children(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            if i == 0 || self.0[i] < self.0[i - 1] {
                let mut parts = self.0.clone();
                parts[i] += 1;
                out.push(Partition(parts));
            }
        }
        let mut parts = self.0.clone();
        parts.push(1);
        out.push(Partition(parts));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A pair of partitions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn size(&self) -> u64 {
        self.first.size() + self.second.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

/// Binomial coefficient; 0 for k out of range.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// The number of standard tableaux of shape λ, by the hook-length formula,
/// memoized.
pub fn standard_tableaux_count(shape: &Partition) -> u64 {
    static CACHE: OnceLock<Mutex<HashMap<Partition, u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&d) = cache.lock().unwrap().get(shape) {
        return d;
    }
    let parts = &shape.0;
    let cols: Vec<u64> = (0..*parts.first().unwrap_or(&0))
        .map(|j| parts.iter().filter(|&&p| p > j).count() as u64)
        .collect();
    let mut num: u128 = 1;
    for i in 1..=shape.size() {
        num *= i as u128;
    }
    let mut den: u128 = 1;
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p {
            let hook = (p - 1 - j) + (cols[j as usize] - 1 - i as u64) + 1;
            den *= hook as u128;
        }
    }
    let d = (num / den) as u64;
    cache.lock().unwrap().insert(shape.clone(), d);
    d
}

/// The dimension attached to a bipartition of size n:
/// d_{λ,μ} = C(n, |λ|) d_λ d_μ.
pub fn bipartition_dim(bp: &Bipartition, n: u64) -> u64 {
    assert_eq!(bp.size(), n, "bipartition size mismatch");
    binom(n, bp.first.size())
        * standard_tableaux_count(&bp.first)
        * standard_tableaux_count(&bp.second)
}

/// The algebra families whose branching graphs are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// The full two-parameter algebra: all bipartitions.
    HB,
    /// Symmetric one-boundary quotient: second component a single row.
    A,
    /// N-centraliser quotient: first component at most N-1 rows, second a
    /// single row. C(2) is the one-boundary Temperley-Lieb case.
    C(u32),
    /// The fused algebra on k+n strands: partitions of k+n with first part
    /// at least k.
    Fused(u32),
    /// The boundary-seam algebra: fused nodes with at most two rows.
    Seam(u32),
}

impl Family {
    pub fn parse(name: &str, k: Option<u32>, cap_n: Option<u32>) -> Option<Family> {
        match name {
            "hb" => Some(Family::HB),
            "a" => Some(Family::A),
            "c2" => Some(Family::C(2)),
            "c" => Some(Family::C(cap_n?)),
            "fused" => Some(Family::Fused(k?)),
            "seam" => Some(Family::Seam(k?)),
            _ => None,
        }
    }
}

/// One node of a branching graph: a display label and its path count.
#[derive(Clone, Debug)]
pub struct BratteliNode {
    pub label: String,
    pub dim: u64,
}

/// The branching graph of a family, truncated at a depth.
#[derive(Clone, Debug)]
pub struct BratteliGraph {
    pub family: Family,
    pub levels: Vec<Vec<BratteliNode>>,
    /// edges[i] connects levels[i] to levels[i+1] by node indices.
    pub edges: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum NodeKey {
    Bi(Bipartition),
    Single(Partition),
}

impl NodeKey {
    fn label(&self) -> String {
        match self {
            NodeKey::Bi(bp) => bp.to_string(),
            NodeKey::Single(p) => format!("{}|", p),
        }
    }

    fn children(&self, family: Family) -> Vec<NodeKey> {
        match self {
            NodeKey::Bi(bp) => {
                let mut out: Vec<NodeKey> = bp
                    .first
                    .children()
                    .into_iter()
                    .map(|p| {
                        NodeKey::Bi(Bipartition { first: p, second: bp.second.clone() })
                    })
                    .collect();
                out.extend(bp.second.children().into_iter().map(|p| {
                    NodeKey::Bi(Bipartition { first: bp.first.clone(), second: p })
                }));
                out.retain(|k| k.admissible(family));
                out
            }
            NodeKey::Single(p) => {
                let mut out: Vec<NodeKey> =
                    p.children().into_iter().map(NodeKey::Single).collect();
                out.retain(|k| k.admissible(family));
                out
            }
        }
    }

    fn admissible(&self, family: Family) -> bool {
        match (family, self) {
            (Family::HB, NodeKey::Bi(_)) => true,
            (Family::A, NodeKey::Bi(bp)) => bp.second.rows() <= 1,
            (Family::C(cap_n), NodeKey::Bi(bp)) => {
                bp.first.rows() <= cap_n as usize - 1 && bp.second.rows() <= 1
            }
            (Family::Fused(k), NodeKey::Single(p)) => {
                p.0.first().copied().unwrap_or(0) >= k as u64
            }
            (Family::Seam(k), NodeKey::Single(p)) => {
                p.0.first().copied().unwrap_or(0) >= k as u64 && p.rows() <= 2
            }
            _ => false,
        }
    }
}

/// Builds the branching graph of a family to the given depth. Node
/// dimensions are path counts from the root.
pub fn bratteli(family: Family, depth: usize) -> BratteliGraph {
    assert!(depth <= 10, "depth {} exceeds bound 10", depth);
    let root = match family {
        Family::HB | Family::A | Family::C(_) => NodeKey::Bi(Bipartition {
            first: Partition::empty(),
            second: Partition::empty(),
        }),
        Family::Fused(k) | Family::Seam(k) => {
            NodeKey::Single(Partition::new(if k == 0 { vec![] } else { vec![k as u64] }))
        }
    };
    let mut levels: Vec<Vec<(NodeKey, u64)>> = vec![vec![(root, 1)]];
    let mut edges: Vec<Vec<(usize, usize)>> = Vec::new();
    for _ in 0..depth {
        let prev = levels.last().unwrap();
        let mut pairs: Vec<(usize, NodeKey)> = Vec::new();
        for (i, (key, _)) in prev.iter().enumerate() {
            for child in key.children(family) {
                pairs.push((i, child));
            }
        }
        let mut keys: Vec<NodeKey> = pairs.iter().map(|(_, k)| k.clone()).collect();
        keys.sort();
        keys.dedup();
        // Single-partition families read naturally with the largest first
        // part on the left, matching the usual diagram layout.
        if matches!(family, Family::Fused(_) | Family::Seam(_)) {
            keys.reverse();
        }
        let order: HashMap<&NodeKey, usize> =
            keys.iter().enumerate().map(|(j, k)| (k, j)).collect();
        let mut next: Vec<(NodeKey, u64)> = keys.iter().cloned().map(|k| (k, 0)).collect();
        let mut level_edges = Vec::new();
        for (i, child) in &pairs {
            let j = order[child];
            next[j].1 += prev[*i].1;
            level_edges.push((*i, j));
        }
        edges.push(level_edges);
        levels.push(next);
    }
    BratteliGraph {
        family,
        levels: levels
            .into_iter()
            .map(|lvl| {
                lvl.into_iter()
                    .map(|(k, d)| BratteliNode { label: k.label(), dim: d })
                    .collect()
            })
            .collect(),
        edges,
    }
}

impl BratteliGraph {
    /// Sum of squared node dimensions at a level: the dimension of the
    /// algebra at that level when the family is semisimple.
    pub fn dim_sum_of_squares(&self, level: usize) -> u64 {
        self.levels[level].iter().map(|n| n.dim * n.dim).sum()
    }

    pub fn level_dims(&self, level: usize) -> Vec<u64> {
        self.levels[level].iter().map(|n| n.dim).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bratteli {\n  rankdir=TB;\n");
        for (lvl, nodes) in self.levels.iter().enumerate() {
            for (i, n) in nodes.iter().enumerate() {
                out.push_str(&format!(
                    "  n{}_{} [label=\"{} ({})\"];\n",
                    lvl, i, n.label, n.dim
                ));
            }
        }
        for (lvl, es) in self.edges.iter().enumerate() {
            for (i, j) in es {
                out.push_str(&format!("  n{}_{} -> n{}_{};\n", lvl, i, lvl + 1, j));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "levels": self.levels.iter().map(|lvl| {
                lvl.iter().map(|n| serde_json::json!({
                    "label": n.label,
                    "dim": n.dim,
                })).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|es| {
                es.iter().map(|(i, j)| serde_json::json!([i, j])).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// dim of the full algebra on n strands: n! 2^n.
pub fn dim_hecke_b(n: u64) -> u64 {
    factorial(n) << n
}

/// dim A_n = Σ_i C(n,i)^2 (n-i)!.
pub fn dim_symmetric_one_boundary(n: u64) -> u64 {
    (0..=n).map(|i| binom(n, i) * binom(n, i) * factorial(n - i)).sum()
}

/// dim of the one-boundary Temperley-Lieb quotient: C(2n, n).
pub fn dim_one_boundary_tl(n: u64) -> u64 {
    binom(2 * n, n)
}

/// dim of the N-centraliser quotient, by summing squared branching
/// multiplicities (first component at most N-1 rows, second a single row).
pub fn dim_centraliser(n: u64, cap_n: u32) -> u64 {
    bratteli(Family::C(cap_n), n as usize).dim_sum_of_squares(n as usize)
}

/// dim of the fused algebra: Σ_{i=0}^{min(k,n)} (n-i)! C(n,i)^2.
pub fn dim_fused(k: u64, n: u64) -> u64 {
    (0..=k.min(n))
        .map(|i| factorial(n - i) * binom(n, i) * binom(n, i))
        .sum()
}

/// dim of the boundary-seam algebra: C(2n,n) - C(2n, n-k-1).
pub fn dim_seam(k: u64, n: u64) -> u64 {
    if n < k + 1 {
        return binom(2 * n, n);
    }
    binom(2 * n, n) - binom(2 * n, n - k - 1)
}

/// Dimension of the seam irreducible indexed by h at level n:
/// C(n,h) - C(n, h-k-1), taken as 0 when negative.
pub fn seam_irreducible_dim(k: u64, n: u64, h: u64) -> u64 {
    let a = binom(n, h);
    let b = if h >= k + 1 { binom(n, h - k - 1) } else { 0 };
    a.saturating_sub(b)
}
