//! Incremental exact Gaussian elimination over ℚ.
//!
//! Rows arrive one at a time; the system keeps itself in reduced row-echelon
//! form so that redundancy and inconsistency are detected immediately and a
//! particular solution (free unknowns set to zero) can be read off at any
//! point. Designed for the sparse, highly redundant systems produced by
//! equivariance equations.

use crate::rat::Rat;
use num_traits::Zero;
use std::collections::BTreeMap;

/// What happened when a row was offered to the system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AddOutcome {
    /// Linearly independent of everything seen so far.
    Added,
    /// Implied by earlier rows.
    Redundant,
    /// Contradicts earlier rows: `0 = c` with `c ≠ 0` after reduction.
    Inconsistent,
}

#[derive(Clone, Debug)]
struct Row {
    /// Column → coefficient, pivot column has coefficient 1 and is not
    /// stored here.
    tail: BTreeMap<usize, Rat>,
    rhs: Rat,
}

/// `A·x = b` over ℚ with unknowns `0..ncols`, kept in RREF.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    ncols: usize,
    /// pivot column → row
    rows: BTreeMap<usize, Row>,
    inconsistent: bool,
}

impl LinearSystem {
    pub fn new(ncols: usize) -> Self {
        LinearSystem { ncols, rows: BTreeMap::new(), inconsistent: false }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    /// Number of free unknowns (assuming consistency).
    pub fn nullity(&self) -> usize {
        self.ncols - self.rows.len()
    }

    /// Offer the equation `Σ entries·x = rhs`. The system absorbs it only if
    /// it is new information; an inconsistent row is recorded in
    /// [`Self::is_consistent`] but does not corrupt the stored rows.
    pub fn add_row(&mut self, entries: &[(usize, Rat)], rhs: Rat) -> AddOutcome {
        let mut row: BTreeMap<usize, Rat> = BTreeMap::new();
        for (col, coeff) in entries {
            assert!(*col < self.ncols, "column {col} out of range");
            if coeff.is_zero() {
                continue;
            }
            let slot = row.entry(*col).or_insert_with(Rat::zero);
            *slot += coeff;
            if slot.is_zero() {
                row.remove(col);
            }
        }
        let mut rhs = rhs;

        // forward reduction against existing pivots
        while let Some((&col, _)) = row.first_key_value() {
            let Some(pivot_row) = self.rows.get(&col) else { break };
            let factor = row.remove(&col).expect("leading entry present");
            for (c, v) in &pivot_row.tail {
                let slot = row.entry(*c).or_insert_with(Rat::zero);
                *slot -= &factor * v;
                if slot.is_zero() {
                    row.remove(c);
                }
            }
            rhs -= &factor * &pivot_row.rhs;
        }

        let Some((&pivot, _)) = row.first_key_value() else {
            if rhs.is_zero() {
                return AddOutcome::Redundant;
            }
            self.inconsistent = true;
            return AddOutcome::Inconsistent;
        };

        // normalize and also clear later pivot columns from the tail
        let lead = row.remove(&pivot).expect("pivot entry present");
        let mut tail: BTreeMap<usize, Rat> = BTreeMap::new();
        let mut new_rhs = rhs / &lead;
        for (c, v) in row {
            tail.insert(c, v / &lead);
        }
        let later_pivots: Vec<usize> =
            tail.keys().filter(|c| self.rows.contains_key(c)).copied().collect();
        for col in later_pivots {
            let factor = tail.remove(&col).expect("entry present");
            let pivot_row = &self.rows[&col];
            for (c, v) in &pivot_row.tail {
                let slot = tail.entry(*c).or_insert_with(Rat::zero);
                *slot -= &factor * v;
                if slot.is_zero() {
                    tail.remove(c);
                }
            }
            new_rhs -= &factor * &pivot_row.rhs;
        }

        // eliminate the new pivot from all existing rows
        for other in self.rows.values_mut() {
            if let Some(factor) = other.tail.remove(&pivot) {
                for (c, v) in &tail {
                    let slot = other.tail.entry(*c).or_insert_with(Rat::zero);
                    *slot -= &factor * v;
                    if slot.is_zero() {
                        other.tail.remove(c);
                    }
                }
                other.rhs -= &factor * &new_rhs;
            }
        }

        self.rows.insert(pivot, Row { tail, rhs: new_rhs });
        AddOutcome::Added
    }

    /// Columns without a pivot.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// The solution with all free unknowns set to zero, if consistent.
    pub fn particular_solution(&self) -> Option<Vec<Rat>> {
        if self.inconsistent {
            return None;
        }
        let mut x = vec![Rat::zero(); self.ncols];
        for (&pivot, row) in &self.rows {
            // RREF invariant: tail entries sit on free columns only
            x[pivot] = row.rhs.clone();
        }
        Some(x)
    }

    /// The unique solution, when the system pins every unknown.
    pub fn unique_solution(&self) -> Option<Vec<Rat>> {
        (self.rank() == self.ncols).then(|| self.particular_solution()).flatten()
    }

    /// Value forced for one unknown, if its column is pinned independently
    /// of the free ones.
    pub fn pinned_value(&self, col: usize) -> Option<Rat> {
        let row = self.rows.get(&col)?;
        row.tail.is_empty().then(|| row.rhs.clone())
    }
}
