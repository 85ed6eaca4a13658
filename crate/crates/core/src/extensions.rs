//! Γ-extension, splitting and parallel extension.
//!
//! For an independent set `X = {x_1, …, x_m}` of `M`, the Γ-extension
//! `M^X` adds one new element `γ_i` per `x_i`: its column copies the column
//! of `x_i`, and a final row is appended that is 1 exactly on the γ columns.
//! Splitting `M_Y` appends a row that is 1 exactly on the columns of `Y`.
//! The parallel extension `M'` only adds the copied columns, so each
//! `{x_i, γ_i}` is a parallel pair; splitting `M'` by `Γ` gives back `M^X`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::label::{ElementSet, Label};
use crate::matroid::BinaryMatroid;

/// The result of a Γ-extension together with the matrix it was built from.
#[derive(Clone, Debug)]
pub struct GammaExtension {
    result: BinaryMatroid,
    matrix: Gf2Matrix,
    matrix_labels: Vec<Label>,
    x: Vec<Label>,
    gamma: Vec<Label>,
}

impl GammaExtension {
    /// The matroid `M^X` on `S ∪ Γ` (in standard form).
    pub fn result(&self) -> &BinaryMatroid {
        &self.result
    }

    pub fn into_result(self) -> BinaryMatroid {
        self.result
    }

    /// The matrix `A^X` exactly as constructed: the columns of `M` in order,
    /// then the γ columns in the order of `X`, then the extra row.
    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    /// Column labels of [`GammaExtension::matrix`].
    pub fn matrix_labels(&self) -> &[Label] {
        &self.matrix_labels
    }

    /// `x_1, …, x_m` in pairing order.
    pub fn x(&self) -> &[Label] {
        &self.x
    }

    /// `γ_1, …, γ_m` in pairing order.
    pub fn gamma(&self) -> &[Label] {
        &self.gamma
    }

    pub fn gamma_set(&self) -> ElementSet {
        self.gamma.iter().cloned().collect()
    }

    pub fn x_set(&self) -> ElementSet {
        self.x.iter().cloned().collect()
    }

    /// Pairs `(x_i, γ_i)`.
    pub fn pairs(&self) -> impl Iterator<Item = (&Label, &Label)> + '_ {
        self.x.iter().zip(self.gamma.iter())
    }

    /// The `x_i` paired with `γ_i`.
    pub fn partner_of_gamma(&self, g: &Label) -> Option<&Label> {
        self.pairs().find(|(_, h)| *h == g).map(|(x, _)| x)
    }
}

/// Validates `x` and picks γ labels; returns `(x in order, Γ labels)`.
fn prepare(
    m: &BinaryMatroid,
    x: &ElementSet,
    gamma_names: Option<&[Label]>,
) -> Result<(Vec<Label>, Vec<Label>)> {
    if x.is_empty() {
        return Err(Error::Empty);
    }
    if !m.is_independent(x)? {
        return Err(Error::Dependent);
    }
    let xs: Vec<Label> = x.iter().cloned().collect();
    let gamma: Vec<Label> = match gamma_names {
        Some(names) => {
            if names.len() != xs.len() {
                return Err(Error::Dimension {
                    expected: xs.len(),
                    found: names.len(),
                });
            }
            names.to_vec()
        }
        None => xs.iter().map(|l| Label::from(format!("g{l}"))).collect(),
    };
    let ground = m.ground_set();
    let mut seen = ElementSet::new();
    for g in &gamma {
        if ground.contains(g) {
            return Err(Error::GammaCollision(g.clone()));
        }
        if !seen.insert(g.clone()) {
            return Err(Error::DuplicateLabel(g.clone()));
        }
    }
    Ok((xs, gamma))
}

/// `A'`: the representation of `M` with the columns of `x` appended.
fn with_copied_columns(m: &BinaryMatroid, xs: &[Label]) -> Result<Gf2Matrix> {
    let idx = xs
        .iter()
        .map(|l| m.index_of(l))
        .collect::<Result<Vec<_>>>()?;
    let rep = m.representation();
    rep.hconcat(&rep.select_columns(&idx))
}

/// Builds `M^X`. γ labels default to `g<x>`.
///
/// `M^X` has a coloop exactly when `|X| = 1` (the single γ column is the
/// only one meeting the extra row), so the coloop check is applied only
/// for `|X| >= 2` and only when `M` itself is loopless and coloopless.
pub fn gamma_extension(
    m: &BinaryMatroid,
    x: &ElementSet,
    gamma_names: Option<&[Label]>,
) -> Result<GammaExtension> {
    let (xs, gamma) = prepare(m, x, gamma_names)?;
    let mut matrix = with_copied_columns(m, &xs)?;
    let mut last = vec![false; m.len()];
    last.resize(m.len() + gamma.len(), true);
    matrix.push_row(&last)?;

    let mut labels = m.labels().to_vec();
    labels.extend(gamma.iter().cloned());
    let result = BinaryMatroid::new_raw(&matrix, labels.clone())?;
    if xs.len() >= 2 && m.is_loopless_and_coloopless() {
        if let Some(c) = result.coloops().into_iter().next() {
            return Err(Error::Coloop(c));
        }
    }
    Ok(GammaExtension {
        result,
        matrix,
        matrix_labels: labels,
        x: xs,
        gamma,
    })
}

/// `M'`: `M` plus a parallel copy `γ_i` of each `x_i`. Not validated,
/// since it has parallel pairs by construction.
pub fn parallel_extension(
    m: &BinaryMatroid,
    x: &ElementSet,
    gamma_names: Option<&[Label]>,
) -> Result<BinaryMatroid> {
    let (xs, gamma) = prepare(m, x, gamma_names)?;
    let matrix = with_copied_columns(m, &xs)?;
    let mut labels = m.labels().to_vec();
    labels.extend(gamma);
    BinaryMatroid::new_raw(&matrix, labels)
}

/// The splitting matroid `M_Y`: one extra row, 1 exactly on `Y`. The
/// result may have coloops and is not validated.
pub fn splitting(m: &BinaryMatroid, y: &ElementSet) -> Result<BinaryMatroid> {
    if y.is_empty() {
        return Err(Error::Empty);
    }
    let mut row = vec![false; m.len()];
    for i in m.indices_of(y)? {
        row[i] = true;
    }
    let mut matrix = m.representation().clone();
    matrix.push_row(&row)?;
    BinaryMatroid::new_raw(&matrix, m.labels().to_vec())
}

/// Whether splitting the parallel extension `M'` by `Γ` gives `M^X`.
pub fn compose_check(m: &BinaryMatroid, x: &ElementSet) -> Result<bool> {
    let ext = gamma_extension(m, x, None)?;
    let parallel = parallel_extension(m, x, None)?;
    let split = splitting(&parallel, &ext.gamma_set())?;
    Ok(split.equals(ext.result()))
}
