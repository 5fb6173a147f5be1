use std::collections::BTreeMap;

use super::ratfunc::RatFunc;

/// A sparse row vector indexed by column position; zero entries are absent.
pub type SparseVec = BTreeMap<usize, RatFunc>;

pub fn sparse_is_zero(v: &SparseVec) -> bool {
    v.is_empty()
}

pub fn sparse_axpy(target: &mut SparseVec, c: &RatFunc, src: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (j, x) in src {
        let add = c * x;
        match target.get_mut(j) {
            Some(t) => {
                let s = &*t + &add;
                if s.is_zero() {
                    target.remove(j);
                } else {
                    *t = s;
                }
            }
            None => {
                target.insert(*j, add);
            }
        }
    }
}

pub fn sparse_scale(v: &mut SparseVec, c: &RatFunc) {
    if c.is_one() {
        return;
    }
    for x in v.values_mut() {
        *x = &*x * c;
    }
}

/// A row in reduced echelon form together with the combination of the
/// originally inserted rows that produced it (tracked only when requested).
#[derive(Clone, Debug)]
pub struct EchelonRow {
    pub pivot: usize,
    pub entries: SparseVec,
    pub combo: SparseVec,
}

/// Incremental reduced row echelon form over the fraction field. Rows are
/// inserted one at a time; each insertion reports the new pivot column, or
/// None if the row reduced to zero. Existing rows are kept fully reduced
/// (back-substitution on insert), so pivot columns have a single nonzero
/// entry equal to one.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<EchelonRow>,
    /// pivot column -> index in `rows`
    pivot_rows: BTreeMap<usize, usize>,
    track_combos: bool,
    inserted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn with_combos() -> Self {
        Echelon { track_combos: true, ..Echelon::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_rows.keys().copied()
    }

    pub fn has_pivot(&self, col: usize) -> bool {
        self.pivot_rows.contains_key(&col)
    }

    pub fn rows(&self) -> &[EchelonRow] {
        &self.rows
    }

    pub fn row_for_pivot(&self, col: usize) -> Option<&EchelonRow> {
        self.pivot_rows.get(&col).map(|&i| &self.rows[i])
    }

    /// Reduces `v` against the current rows, eliminating every pivot column.
    /// With combo tracking, also returns the coefficients of the tracked
    /// rows that were subtracted.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut v = v.clone();
        let mut combo = SparseVec::new();
        loop {
            // Smallest remaining pivot column present in v.
            let hit = v
                .keys()
                .find(|j| self.pivot_rows.contains_key(j))
                .copied();
            let Some(col) = hit else { break };
            let row = &self.rows[self.pivot_rows[&col]];
            let c = -&v[&col];
            sparse_axpy(&mut v, &c, &row.entries);
            debug_assert!(!v.contains_key(&col));
            if self.track_combos {
                sparse_axpy(&mut combo, &c, &row.combo);
            }
        }
        (v, combo)
    }

    /// Inserts a row; returns its pivot column if it is independent of the
    /// rows already present.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let tag = self.inserted;
        self.inserted += 1;
        let (mut v, mut combo) = self.reduce(&v);
        if self.track_combos {
            combo.insert(tag, RatFunc::one());
        }
        let (&pivot, pc) = v.iter().next()?;
        let inv = pc.inv();
        if !inv.is_one() {
            sparse_scale(&mut v, &inv);
            sparse_scale(&mut combo, &inv);
        }
        // Back-substitute the new pivot out of existing rows.
        let new_row = EchelonRow { pivot, entries: v, combo };
        for row in &mut self.rows {
            if let Some(c) = row.entries.get(&pivot).cloned() {
                let c = -&c;
                sparse_axpy(&mut row.entries, &c, &new_row.entries);
                if self.track_combos {
                    sparse_axpy(&mut row.combo, &c, &new_row.combo);
                }
            }
        }
        self.pivot_rows.insert(pivot, self.rows.len());
        self.rows.push(new_row);
        Some(pivot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::poly::LaurentPoly;

    fn row(entries: &[(usize, i64)]) -> SparseVec {
        entries
            .iter()
            .map(|&(j, c)| (j, RatFunc::from_int(c)))
            .collect()
    }

    #[test]
    fn rank_and_pivots() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(row(&[(0, 1), (1, 2)])), Some(0));
        assert_eq!(e.insert(row(&[(0, 2), (1, 4)])), None);
        assert_eq!(e.insert(row(&[(1, 1), (2, 3)])), Some(1));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots().collect::<Vec<_>>(), vec![0, 1]);
        // Fully reduced: row 0 no longer touches column 1.
        let r0 = e.row_for_pivot(0).unwrap();
        assert!(!r0.entries.contains_key(&1));
    }

    #[test]
    fn reduce_to_residual() {
        let mut e = Echelon::new();
        e.insert(row(&[(0, 1), (2, 1)]));
        e.insert(row(&[(1, 1), (2, -1)]));
        let (res, _) = e.reduce(&row(&[(0, 3), (1, 3), (3, 5)]));
        // v - 3*row0 - 3*row1: the column-2 contributions cancel.
        assert_eq!(res, row(&[(3, 5)]));
    }

    #[test]
    fn combo_tracking_reconstructs() {
        let mut e = Echelon::with_combos();
        let r0 = row(&[(0, 2), (1, 1)]);
        let r1 = row(&[(0, 1), (2, 1)]);
        e.insert(r0.clone());
        e.insert(r1.clone());
        // Each echelon row's combo must reproduce its entries from r0, r1.
        for er in e.rows() {
            let mut rebuilt = SparseVec::new();
            for (tag, c) in &er.combo {
                let src = if *tag == 0 { &r0 } else { &r1 };
                sparse_axpy(&mut rebuilt, c, src);
            }
            assert_eq!(&rebuilt, &er.entries);
        }
    }

    #[test]
    fn symbolic_entries() {
        // Pivot normalisation over a genuinely rational entry.
        let q = RatFunc::from_poly(LaurentPoly::q_pow(1));
        let mut v = SparseVec::new();
        v.insert(0, q.clone());
        v.insert(1, RatFunc::one());
        let mut e = Echelon::new();
        e.insert(v);
        let r = e.row_for_pivot(0).unwrap();
        assert!(r.entries[&0].is_one());
        assert_eq!(r.entries[&1], q.inv());
    }
}
