use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// An opaque ground-set label. Numeric labels are plain strings too, so
/// `"1"` and `"g1"` coexist and order lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Label(String);

impl Label {
    pub fn new(s: impl Into<String>) -> Self {
        Label(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Labels `"1"`, `"2"`, …, `"n"`.
    pub fn numbered(n: usize) -> Vec<Label> {
        (1..=n).map(|i| Label(i.to_string())).collect()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(s.into())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label(s)
    }
}

/// A set of labels, always iterated in sorted order. Families of element
/// sets sort lexicographically by their sorted members.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementSet(BTreeSet<Label>);

impl ElementSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// `ElementSet::of(&["1", "2"])`.
    pub fn of<S: AsRef<str>>(items: &[S]) -> Self {
        items.iter().map(|s| Label::from(s.as_ref())).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.0.contains(l)
    }

    pub fn insert(&mut self, l: Label) -> bool {
        self.0.insert(l)
    }

    pub fn remove(&mut self, l: &Label) -> bool {
        self.0.remove(l)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Label> + '_ {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.difference(&other.0).cloned().collect())
    }

    pub fn symmetric_difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.symmetric_difference(&other.0).cloned().collect())
    }
}

impl FromIterator<Label> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        ElementSet(iter.into_iter().collect())
    }
}

impl<'a> FromIterator<&'a str> for ElementSet {
    fn from_iter<I: IntoIterator<Item = &'a str>>(iter: I) -> Self {
        ElementSet(iter.into_iter().map(Label::from).collect())
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Label;
    type IntoIter = alloc::collections::btree_set::Iter<'a, Label>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl IntoIterator for ElementSet {
    type Item = Label;
    type IntoIter = alloc::collections::btree_set::IntoIter<Label>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Renders as `{a,b,c}`.
impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(l.as_str())?;
        }
        f.write_str("}")
    }
}
