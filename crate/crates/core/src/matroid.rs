//! Labeled binary matroids.
//!
//! A [`BinaryMatroid`] is a list of distinct labels together with a GF(2)
//! representation kept in standard form `[I_r | D]`: the first `r` labels
//! index a basis. Construction through [`BinaryMatroid::new`] rejects loops
//! and coloops; [`BinaryMatroid::new_raw`] skips that check and is used
//! for intermediate objects (splittings, rank-deficient deletions).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::label::{ElementSet, Label};
use crate::xor_basis::{rank_of_mask, XorBasis};

/// Bounds on the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for circuit/cocircuit enumeration.
    pub circuits: usize,
    /// Largest ground set for the separation search.
    pub separations: usize,
    /// Largest ground set on which rank identities are checked on every subset.
    pub exhaustive_subsets: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        circuits: 16,
        separations: 20,
        exhaustive_subsets: 12,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Clone)]
pub struct BinaryMatroid {
    labels: Vec<Label>,
    rep: Gf2Matrix,
    /// Column `j` as a row-bit mask, present when the rank is at most 64.
    columns: Option<Vec<u64>>,
}

impl BinaryMatroid {
    /// Builds the vector matroid of `matrix` and checks that it has no loops
    /// and no coloops.
    pub fn new(matrix: &Gf2Matrix, labels: Vec<Label>) -> Result<Self> {
        check_labels(matrix, &labels)?;
        let (rep, labels) = matrix.standard_form(&labels)?;
        let m = Self::from_standard(rep, labels);
        if let Some(c) = m.coloops().into_iter().next() {
            return Err(Error::Coloop(c));
        }
        Ok(m)
    }

    /// Like [`BinaryMatroid::new`] without the loop/coloop check.
    pub fn new_raw(matrix: &Gf2Matrix, labels: Vec<Label>) -> Result<Self> {
        check_labels(matrix, &labels)?;
        let (rep, perm) = matrix.standardize();
        let labels = perm.iter().map(|&j| labels[j].clone()).collect();
        Ok(Self::from_standard(rep, labels))
    }

    fn from_standard(rep: Gf2Matrix, labels: Vec<Label>) -> Self {
        let columns =
            (rep.n_rows() <= 64).then(|| (0..rep.n_cols()).map(|j| rep.column_mask(j)).collect());
        BinaryMatroid {
            labels,
            rep,
            columns,
        }
    }

    /// Ground-set labels in representation column order.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn ground_set(&self) -> ElementSet {
        self.labels.iter().cloned().collect()
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rep.n_rows()
    }

    /// The standard-form representation `[I_r | D]`.
    pub fn representation(&self) -> &Gf2Matrix {
        &self.rep
    }

    pub fn index_of(&self, l: &Label) -> Result<usize> {
        self.labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| Error::UnknownLabel(l.clone()))
    }

    pub fn indices_of(&self, s: &ElementSet) -> Result<Vec<usize>> {
        s.iter().map(|l| self.index_of(l)).collect()
    }

    pub(crate) fn mask_of(&self, s: &ElementSet) -> Result<u64> {
        self.require_size(64)?;
        Ok(self.indices_of(s)?.into_iter().fold(0, |m, i| m | 1 << i))
    }

    pub(crate) fn set_of_mask(&self, mut mask: u64) -> ElementSet {
        let mut out = ElementSet::new();
        while mask != 0 {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            out.insert(self.labels[i].clone());
        }
        out
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    pub(crate) fn require_size(&self, limit: usize) -> Result<()> {
        if self.len() > limit {
            Err(Error::Size {
                size: self.len(),
                limit,
            })
        } else {
            Ok(())
        }
    }

    /// Column bit masks; only for matroids of rank at most 64, which every
    /// instance within the exhaustive bounds is.
    pub(crate) fn column_masks(&self) -> &[u64] {
        self.columns
            .as_deref()
            .expect("column masks are available up to rank 64")
    }

    pub(crate) fn rank_mask(&self, mask: u64) -> usize {
        rank_of_mask(self.column_masks(), mask)
    }

    fn rank_of_indices(&self, idx: &[usize]) -> usize {
        match &self.columns {
            Some(cols) => {
                let mut b = XorBasis::new();
                for &i in idx {
                    b.insert(cols[i]);
                }
                b.rank()
            }
            None => self.rep.select_columns(idx).rank(),
        }
    }

    /// Rank of a subset of the ground set.
    pub fn rank_of(&self, s: &ElementSet) -> Result<usize> {
        Ok(self.rank_of_indices(&self.indices_of(s)?))
    }

    pub fn is_independent(&self, s: &ElementSet) -> Result<bool> {
        Ok(self.rank_of(s)? == s.len())
    }

    /// Elements whose column is zero.
    pub fn loops(&self) -> Vec<Label> {
        (0..self.len())
            .filter(|&j| self.rep.is_zero_column(j))
            .map(|j| self.labels[j].clone())
            .collect()
    }

    /// Elements whose deletion drops the rank.
    pub fn coloops(&self) -> Vec<Label> {
        let r = self.rank();
        (0..self.len())
            .filter(|&e| {
                let rest: Vec<usize> = (0..self.len()).filter(|&j| j != e).collect();
                self.rank_of_indices(&rest) < r
            })
            .map(|e| self.labels[e].clone())
            .collect()
    }

    pub fn is_loopless_and_coloopless(&self) -> bool {
        self.loops().is_empty() && self.coloops().is_empty()
    }

    /// Circuits as bit masks over the column order, enumerated through the
    /// cycle space: every GF(2) combination of fundamental circuits is a
    /// disjoint union of circuits, and it is a single circuit exactly when
    /// its rank is one less than its size.
    pub(crate) fn circuit_masks(&self, limit: usize) -> Result<Vec<u64>> {
        self.require_size(limit.min(63))?;
        let r = self.rank();
        let cols = self.column_masks();
        // columns r.. are outside the basis; row i of the identity block is element i
        let fundamental: Vec<u64> = (r..self.len()).map(|j| 1 << j | cols[j]).collect();
        let mut out = Vec::new();
        let mut cycle = 0u64;
        for g in 1u64..(1 << fundamental.len()) {
            cycle ^= fundamental[g.trailing_zeros() as usize];
            if self.rank_mask(cycle) + 1 == cycle.count_ones() as usize {
                out.push(cycle);
            }
        }
        Ok(out)
    }

    fn family(&self, masks: impl IntoIterator<Item = u64>) -> Vec<ElementSet> {
        let mut v: Vec<ElementSet> = masks.into_iter().map(|m| self.set_of_mask(m)).collect();
        v.sort();
        v
    }

    /// All circuits, sorted. Fails above [`Limits::DEFAULT`]`.circuits` elements.
    pub fn circuits(&self) -> Result<Vec<ElementSet>> {
        self.circuits_within(Limits::DEFAULT.circuits)
    }

    pub fn circuits_within(&self, limit: usize) -> Result<Vec<ElementSet>> {
        Ok(self.family(self.circuit_masks(limit)?))
    }

    /// Circuits of the dual, sorted.
    pub fn cocircuits(&self) -> Result<Vec<ElementSet>> {
        self.cocircuits_within(Limits::DEFAULT.circuits)
    }

    pub fn cocircuits_within(&self, limit: usize) -> Result<Vec<ElementSet>> {
        self.dual().circuits_within(limit)
    }

    /// Smallest circuit size; `None` when there are no circuits.
    pub fn girth(&self) -> Result<Option<usize>> {
        Ok(self
            .circuit_masks(Limits::DEFAULT.circuits)?
            .iter()
            .map(|c| c.count_ones() as usize)
            .min())
    }

    /// Smallest cocircuit size; `None` when there are no cocircuits.
    pub fn cogirth(&self) -> Result<Option<usize>> {
        self.dual().girth()
    }

    /// The dual matroid, represented by `[Dᵀ | I_{n-r}]` on the same labels.
    pub fn dual(&self) -> BinaryMatroid {
        let r = self.rank();
        let n = self.len();
        let mut d = Gf2Matrix::zeros(n - r, n);
        for t in 0..n - r {
            for i in 0..r {
                if self.rep.get(i, r + t) {
                    d.set(t, i, true);
                }
            }
            d.set(t, r + t, true);
        }
        Self::new_raw(&d, self.labels.clone()).expect("labels already validated")
    }

    fn remaining_after(&self, y: &ElementSet) -> Result<(Vec<usize>, Vec<Label>)> {
        let gone = self.indices_of(y)?;
        let keep: Vec<usize> = (0..self.len()).filter(|j| !gone.contains(j)).collect();
        if keep.is_empty() {
            return Err(Error::Empty);
        }
        let labels = keep.iter().map(|&j| self.labels[j].clone()).collect();
        Ok((keep, labels))
    }

    /// `M \ Y`, validated (no loops, no coloops).
    pub fn delete(&self, y: &ElementSet) -> Result<BinaryMatroid> {
        let (keep, labels) = self.remaining_after(y)?;
        Self::new(&self.rep.select_columns(&keep), labels)
    }

    /// `M \ Y` without validation; the result may have coloops.
    pub fn delete_raw(&self, y: &ElementSet) -> Result<BinaryMatroid> {
        let (keep, labels) = self.remaining_after(y)?;
        Self::new_raw(&self.rep.select_columns(&keep), labels)
    }

    /// The connected components: classes of the "lie on a common circuit"
    /// relation. Elements in no circuit form singleton blocks.
    pub fn components(&self) -> Result<Vec<ElementSet>> {
        let circuits = self.circuit_masks(Limits::DEFAULT.circuits)?;
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for c in circuits {
            let first = c.trailing_zeros() as usize;
            let mut rest = c & (c - 1);
            while rest != 0 {
                let e = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                parent[a] = b;
            }
        }
        let mut blocks = vec![0u64; n];
        for e in 0..n {
            let root = find(&mut parent, e);
            blocks[root] |= 1 << e;
        }
        Ok(self.family(blocks.into_iter().filter(|&b| b != 0)))
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.components()?.len() <= 1)
    }

    /// Same matroid with new labels (in column order).
    pub fn relabel(&self, labels: Vec<Label>) -> Result<BinaryMatroid> {
        check_labels(&self.rep, &labels)?;
        Ok(Self::from_standard(self.rep.clone(), labels))
    }

    /// Block-diagonal direct sum. When the label sets overlap, every label
    /// of the left summand gets the suffix `1` and every label of the right
    /// one the suffix `2`.
    pub fn direct_sum(&self, other: &BinaryMatroid) -> BinaryMatroid {
        direct_sum_all(&[self, other])
    }

    /// Labeled equality: same label set and, once columns are aligned by
    /// label, the same row space.
    pub fn equals(&self, other: &BinaryMatroid) -> bool {
        if self.len() != other.len() || self.ground_set() != other.ground_set() {
            return false;
        }
        let order: Vec<usize> = self
            .labels
            .iter()
            .map(|l| other.index_of(l).expect("label sets are equal"))
            .collect();
        other
            .rep
            .select_columns(&order)
            .row_space_equal(&self.rep)
            .expect("same width")
    }

    /// Independent sets with `min..=max` elements, sorted.
    pub fn independent_sets(&self, min: usize, max: usize) -> Result<Vec<ElementSet>> {
        self.require_size(63)?;
        let cols = self.column_masks();
        let mut out = Vec::new();
        fn grow(
            cols: &[u64],
            start: usize,
            mask: u64,
            basis: &XorBasis,
            min: usize,
            max: usize,
            out: &mut Vec<u64>,
        ) {
            let size = mask.count_ones() as usize;
            if size >= min {
                out.push(mask);
            }
            if size == max {
                return;
            }
            for e in start..cols.len() {
                let mut b = basis.clone();
                if b.insert(cols[e]) {
                    grow(cols, e + 1, mask | 1 << e, &b, min, max, out);
                }
            }
        }
        grow(cols, 0, 0, &XorBasis::new(), min, max, &mut out);
        Ok(self.family(out))
    }

    /// A compact, deterministic description: rank, size and the columns as
    /// hexadecimal masks in label order.
    pub fn fingerprint(&self) -> String {
        let mut s = format!("r{}n{}", self.rank(), self.len());
        if let Some(cols) = &self.columns {
            let mut order: Vec<usize> = (0..self.len()).collect();
            order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
            s.push(':');
            for (k, &j) in order.iter().enumerate() {
                if k > 0 {
                    s.push('.');
                }
                s.push_str(&format!("{:x}", cols[j]));
            }
        }
        s
    }
}

fn check_labels(matrix: &Gf2Matrix, labels: &[Label]) -> Result<()> {
    if labels.len() != matrix.n_cols() {
        return Err(Error::Dimension {
            expected: matrix.n_cols(),
            found: labels.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Ground-set labels of a direct sum of summands with the given labels. If
/// any two summands share a label, the labels of summand `i` (1-based) all
/// get the suffix `i`.
pub fn direct_sum_labels(parts: &[&[Label]]) -> Vec<Label> {
    let mut seen = BTreeSet::new();
    let clash = parts.iter().flat_map(|p| p.iter()).any(|l| !seen.insert(l));
    parts
        .iter()
        .enumerate()
        .flat_map(|(i, p)| {
            p.iter().map(move |l| {
                if clash {
                    Label::from(format!("{l}{}", i + 1))
                } else {
                    l.clone()
                }
            })
        })
        .collect()
}

/// Direct sum of several matroids, labeled by [`direct_sum_labels`].
///
/// Panics if suffixing still leaves two equal labels, which needs at least
/// eleven summands.
pub fn direct_sum_all(parts: &[&BinaryMatroid]) -> BinaryMatroid {
    let label_parts: Vec<&[Label]> = parts.iter().map(|m| m.labels()).collect();
    let labels = direct_sum_labels(&label_parts);
    let rep = parts
        .iter()
        .fold(Gf2Matrix::zeros(0, 0), |acc, m| acc.block_diagonal(&m.rep));
    BinaryMatroid::new_raw(&rep, labels).expect("one label per column")
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("BinaryMatroid [")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]\n{}", self.rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn u23() -> BinaryMatroid {
        let m = Gf2Matrix::from_rows(3, &[[1, 0, 1], [0, 1, 1]]).unwrap();
        BinaryMatroid::new(&m, ["a", "b", "c"].map(Label::from).to_vec()).unwrap()
    }

    #[test]
    fn construction_errors() {
        let looped = Gf2Matrix::from_rows(3, &[[1, 0, 1], [1, 0, 1]]).unwrap();
        assert_eq!(
            BinaryMatroid::new(&looped, Label::numbered(3)).unwrap_err(),
            Error::Loop(Label::from("2"))
        );
        let coloop = Gf2Matrix::from_rows(3, &[[1, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(
            BinaryMatroid::new(&coloop, Label::numbered(3)).unwrap_err(),
            Error::Coloop(Label::from("3"))
        );
        let m = Gf2Matrix::identity(2);
        assert_eq!(
            BinaryMatroid::new_raw(&m, ["x", "x"].map(Label::from).to_vec()).unwrap_err(),
            Error::DuplicateLabel(Label::from("x"))
        );
        assert!(matches!(
            BinaryMatroid::new_raw(&m, Label::numbered(3)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn u23_every_pair_is_a_basis() {
        let m = u23();
        assert_eq!(m.rank(), 2);
        for pair in [["a", "b"], ["a", "c"], ["b", "c"]] {
            assert!(m.is_independent(&ElementSet::of(&pair)).unwrap());
        }
        assert!(!m.is_independent(&ElementSet::of(&["a", "b", "c"])).unwrap());
        assert_eq!(m.circuits().unwrap(), [ElementSet::of(&["a", "b", "c"])]);
        assert_eq!(m.girth().unwrap(), Some(3));
        assert_eq!(
            m.cocircuits().unwrap(),
            [
                ElementSet::of(&["a", "b"]),
                ElementSet::of(&["a", "c"]),
                ElementSet::of(&["b", "c"])
            ]
        );
    }

    #[test]
    fn fano_ranks_and_circuits() {
        let f = catalog::fano();
        assert_eq!(f.rank_of(&ElementSet::of(&["1", "2", "3"])).unwrap(), 3);
        assert_eq!(f.rank_of(&ElementSet::of(&["1", "2", "6"])).unwrap(), 2);
        assert_eq!(f.rank_of(&ElementSet::new()).unwrap(), 0);
        assert!(f.is_independent(&ElementSet::of(&["1", "2"])).unwrap());
        assert!(f.is_independent(&ElementSet::of(&["1", "2", "3"])).unwrap());
        assert!(!f.is_independent(&ElementSet::of(&["1", "2", "6"])).unwrap());
        assert_eq!(
            f.rank_of(&ElementSet::of(&["1", "9"])),
            Err(Error::UnknownLabel(Label::from("9")))
        );

        let circuits = f.circuits().unwrap();
        assert_eq!(circuits.len(), 14);
        assert_eq!(circuits.iter().filter(|c| c.len() == 3).count(), 7);
        assert_eq!(circuits.iter().filter(|c| c.len() == 4).count(), 7);
        assert!(circuits.contains(&ElementSet::of(&["1", "2", "6"])));
        assert!(circuits.windows(2).all(|w| w[0] < w[1]));

        let cocircuits = f.cocircuits().unwrap();
        assert_eq!(cocircuits.len(), 7);
        assert!(cocircuits.iter().all(|c| c.len() == 4));
        // complements of the seven lines
        for c in &cocircuits {
            assert!(circuits.contains(&f.ground_set().difference(c)));
        }
        assert_eq!(f.girth().unwrap(), Some(3));
        assert_eq!(f.cogirth().unwrap(), Some(4));
    }

    #[test]
    fn size_bound_is_enforced() {
        let big = Gf2Matrix::from_column_masks(
            5,
            &(1..=17u64)
                .map(|c| if c < 32 { c } else { 1 })
                .collect::<Vec<_>>(),
        );
        let m = BinaryMatroid::new(&big, Label::numbered(17)).unwrap();
        assert_eq!(
            m.circuits().unwrap_err(),
            Error::Size {
                size: 17,
                limit: 16
            }
        );
        assert!(m.circuits_within(17).is_ok());
    }

    #[test]
    fn deletion() {
        let f = catalog::fano();
        let d = f.delete(&ElementSet::of(&["7"])).unwrap();
        assert_eq!(d.len(), 6);
        assert_eq!(d.rank(), 3);
        assert_eq!(f.delete(&f.ground_set()).unwrap_err(), Error::Empty);
        // deleting a cocircuit leaves a line of rank 2
        let line_complement = ElementSet::of(&["3", "4", "5", "7"]);
        assert_eq!(f.delete(&line_complement).unwrap().rank(), 2);
        // {1,2,3,6} has 3 as a coloop: strict mode refuses, raw mode allows
        let three = ElementSet::of(&["4", "5", "7"]);
        assert_eq!(
            f.delete(&three).unwrap_err(),
            Error::Coloop(Label::from("3"))
        );
        assert_eq!(f.delete_raw(&three).unwrap().coloops(), [Label::from("3")]);
    }

    #[test]
    fn components_and_direct_sums() {
        assert_eq!(catalog::fano().components().unwrap().len(), 1);
        let uu = u23().direct_sum(&u23());
        assert_eq!(uu.rank(), 4);
        assert_eq!(uu.len(), 6);
        assert_eq!(uu.circuits().unwrap().len(), 2);
        assert_eq!(
            uu.components().unwrap(),
            [
                ElementSet::of(&["a1", "b1", "c1"]),
                ElementSet::of(&["a2", "b2", "c2"])
            ]
        );
        let fu = catalog::fano().direct_sum(&u23());
        let sizes: Vec<usize> = fu.components().unwrap().iter().map(|b| b.len()).collect();
        assert_eq!(sizes, [7, 3]);
        assert_eq!(fu.rank(), 5);
        assert!(fu.is_loopless_and_coloopless());
        let three = direct_sum_all(&[&u23(), &u23(), &u23()]);
        assert_eq!(three.components().unwrap().len(), 3);
        assert!(three.ground_set().contains(&Label::from("c3")));
    }

    #[test]
    fn equality() {
        let f = catalog::fano();
        let mut rows = f.representation().clone();
        for c in 0..7 {
            let v = rows.get(0, c) ^ rows.get(1, c);
            rows.set(0, c, v);
        }
        let g = BinaryMatroid::new(&rows, f.labels().to_vec()).unwrap();
        assert!(f.equals(&g));
        assert!(!f.equals(&f.delete(&ElementSet::of(&["7"])).unwrap()));
        let swapped = f
            .relabel(
                ["2", "1", "3", "4", "5", "6", "7"]
                    .map(Label::from)
                    .to_vec(),
            )
            .unwrap();
        // 1<->2 is an automorphism of the Fano plane only together with 4<->5
        assert!(!f.equals(&swapped));
        let auto = f
            .relabel(
                ["2", "1", "3", "5", "4", "6", "7"]
                    .map(Label::from)
                    .to_vec(),
            )
            .unwrap();
        assert!(f.equals(&auto));
    }

    #[test]
    fn dual_round_trip() {
        let f = catalog::fano();
        assert!(f.dual().dual().equals(&f));
        assert_eq!(f.dual().rank(), 4);
        assert_eq!(f.dual().circuits().unwrap(), f.cocircuits().unwrap());
    }

    #[test]
    fn independent_sets_of_u23() {
        let all = u23().independent_sets(0, 3).unwrap();
        assert_eq!(all.len(), 1 + 3 + 3);
        assert_eq!(u23().independent_sets(2, 2).unwrap().len(), 3);
    }
}
