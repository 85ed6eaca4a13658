//! Incremental rank of `u64` column vectors.

#[derive(Clone)]
pub(crate) struct XorBasis {
    /// `by_lead[b]` is the basis vector whose highest set bit is `b`, or 0.
    by_lead: [u64; 64],
    rank: usize,
}

impl XorBasis {
    pub(crate) fn new() -> Self {
        XorBasis {
            by_lead: [0; 64],
            rank: 0,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    /// Adds `v`; returns whether the rank grew.
    #[inline]
    pub(crate) fn insert(&mut self, v: u64) -> bool {
        self.insert_slot(v).is_some()
    }

    /// Adds `v`; returns the slot it took, for [`XorBasis::undo`].
    #[inline]
    pub(crate) fn insert_slot(&mut self, mut v: u64) -> Option<usize> {
        while v != 0 {
            let lead = 63 - v.leading_zeros() as usize;
            let b = self.by_lead[lead];
            if b == 0 {
                self.by_lead[lead] = v;
                self.rank += 1;
                return Some(lead);
            }
            v ^= b;
        }
        None
    }

    /// Reverts the most recent [`XorBasis::insert_slot`] still in effect.
    #[inline]
    pub(crate) fn undo(&mut self, slot: Option<usize>) {
        if let Some(s) = slot {
            self.by_lead[s] = 0;
            self.rank -= 1;
        }
    }
}

/// Rank of the columns selected by `mask`.
#[inline]
pub(crate) fn rank_of_mask(columns: &[u64], mut mask: u64) -> usize {
    let mut basis = XorBasis::new();
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        basis.insert(columns[i]);
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_triple() {
        let cols = [0b001, 0b010, 0b011, 0b100];
        assert_eq!(rank_of_mask(&cols, 0b0111), 2);
        assert_eq!(rank_of_mask(&cols, 0b1111), 3);
        assert_eq!(rank_of_mask(&cols, 0), 0);
    }

    #[test]
    fn zero_vector_adds_nothing() {
        let mut b = XorBasis::new();
        assert!(!b.insert(0));
        assert!(b.insert(5));
        assert!(!b.insert(5));
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn undo_restores_the_basis() {
        let mut b = XorBasis::new();
        b.insert(0b011);
        let s = b.insert_slot(0b110);
        assert_eq!(b.rank(), 2);
        b.undo(s);
        assert_eq!(b.rank(), 1);
        assert!(b.insert(0b110));
        let s = b.insert_slot(0b101);
        b.undo(s);
        assert_eq!(b.rank(), 2);
    }
}
