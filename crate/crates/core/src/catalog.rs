//! Named fixtures and enumeration of small binary matroids.
//!
//! Enumerated matroids use the points of the binary projective geometry of
//! rank `r`: the nonzero vectors of GF(2)^r, taken in increasing order of
//! their bit masks (bit `i` is row `i`). An instance is a choice of `n`
//! points spanning GF(2)^r, labeled `1..n` in that order. Instances are
//! deduplicated up to labeled equality only.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::connectivity::{is_k_connected, Mode};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::label::Label;
use crate::matroid::{direct_sum_all, BinaryMatroid};

/// Names accepted by [`named`].
pub const NAMES: &[&str] = &[
    "fano",
    "fano-dual",
    "u23",
    "c4",
    "c5",
    "k4-cycle",
    "w4-cycle",
    "k33-cycle",
    "k5-cycle",
    "ag32",
    "r10",
];

/// The Fano plane with the column order `1..7` of `[I_3 | D]`.
pub fn fano() -> BinaryMatroid {
    let a = Gf2Matrix::from_rows(
        7,
        &[
            [1, 0, 0, 0, 1, 1, 1],
            [0, 1, 0, 1, 0, 1, 1],
            [0, 0, 1, 1, 1, 0, 1],
        ],
    )
    .expect("7 binary columns");
    BinaryMatroid::new(&a, Label::numbered(7)).expect("F7 is loopless and coloopless")
}

/// Cycle matroid of a graph from its vertex-edge incidence matrix over
/// GF(2). Edge `(u, v)` is labeled `"{u}{v}"` with 1-based vertices.
pub fn cycle_matroid(n_vertices: usize, edges: &[(usize, usize)]) -> Result<BinaryMatroid> {
    let mut inc = Gf2Matrix::zeros(n_vertices, edges.len());
    let mut labels = Vec::with_capacity(edges.len());
    for (e, &(u, v)) in edges.iter().enumerate() {
        if u >= n_vertices || v >= n_vertices {
            return Err(Error::InvalidArgument("edge endpoint out of range"));
        }
        inc.set(u, e, !inc.get(u, e));
        inc.set(v, e, !inc.get(v, e));
        labels.push(Label::from(format!("{}{}", u + 1, v + 1)));
    }
    BinaryMatroid::new(&inc, labels)
}

fn complete_graph(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn cycle_graph(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .map(|i| (i, (i + 1) % n))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

/// A named fixture; see [`NAMES`].
pub fn named(name: &str) -> Result<BinaryMatroid> {
    let m = match name {
        "fano" => fano(),
        "fano-dual" => fano().dual(),
        "u23" => {
            let a = Gf2Matrix::from_rows(3, &[[1, 0, 1], [0, 1, 1]])?;
            BinaryMatroid::new(&a, ["a", "b", "c"].map(Label::from).to_vec())?
        }
        "c4" => cycle_matroid(4, &cycle_graph(4))?,
        "c5" => cycle_matroid(5, &cycle_graph(5))?,
        "k4-cycle" => cycle_matroid(4, &complete_graph(4))?,
        "k5-cycle" => cycle_matroid(5, &complete_graph(5))?,
        "k33-cycle" => {
            let edges: Vec<(usize, usize)> =
                (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
            cycle_matroid(6, &edges)?
        }
        "w4-cycle" => {
            // hub 1, rim 2-3-4-5
            let mut edges: Vec<(usize, usize)> = (1..5).map(|v| (0, v)).collect();
            edges.extend([(1, 2), (2, 3), (3, 4), (1, 4)]);
            cycle_matroid(5, &edges)?
        }
        "ag32" => {
            let cols: Vec<u64> = (0..8u64).map(|xyz| 1 | xyz << 1).collect();
            BinaryMatroid::new(&Gf2Matrix::from_column_masks(4, &cols), Label::numbered(8))?
        }
        "r10" => {
            // the ten weight-3 vectors of GF(2)^5
            let cols: Vec<u64> = (0..32u64).filter(|v| v.count_ones() == 3).collect();
            BinaryMatroid::new(&Gf2Matrix::from_column_masks(5, &cols), Label::numbered(10))?
        }
        _ => return Err(Error::UnknownFixture(name.into())),
    };
    Ok(m)
}

/// A catalog instance with lazily computed connectivity.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    name: String,
    matroid: BinaryMatroid,
    connectivity: OnceCell<usize>,
}

/// Connectivity levels reported by [`CatalogEntry::connectivity`] are capped here.
pub const MAX_TAGGED_CONNECTIVITY: usize = 5;

impl CatalogEntry {
    pub fn new(name: impl Into<String>, matroid: BinaryMatroid) -> Self {
        CatalogEntry {
            name: name.into(),
            matroid,
            connectivity: OnceCell::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matroid(&self) -> &BinaryMatroid {
        &self.matroid
    }

    /// Largest `k <= 5` for which the matroid is `k`-connected (cumulative
    /// sense); 1 when it is disconnected.
    pub fn connectivity(&self) -> usize {
        *self.connectivity.get_or_init(|| {
            let mut k = 1;
            while k < MAX_TAGGED_CONNECTIVITY
                && is_k_connected(&self.matroid, k + 1, Mode::Cumulative).unwrap_or(false)
            {
                k += 1;
            }
            k
        })
    }

    pub fn is_connected(&self) -> bool {
        self.connectivity() >= 2
    }

    /// `connected` or `disconnected`, plus `k-connected` for the largest
    /// level at least 3.
    pub fn tags(&self) -> Vec<String> {
        let k = self.connectivity();
        let mut tags = vec![if k >= 2 { "connected" } else { "disconnected" }.to_string()];
        if k >= 3 {
            tags.push(format!("{k}-connected"));
        }
        tags
    }
}

/// Which enumerated matroids to keep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Filter {
    #[default]
    Any,
    Connected,
    Disconnected,
    /// k-connected in paper mode (no `(k-1)`-separation).
    KConnected(usize),
}

impl Filter {
    fn accepts(self, m: &BinaryMatroid) -> bool {
        match self {
            Filter::Any => true,
            Filter::Connected => m.is_connected().unwrap_or(false),
            Filter::Disconnected => !m.is_connected().unwrap_or(true),
            Filter::KConnected(k) => is_k_connected(m, k, Mode::Paper).unwrap_or(false),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub filter: Filter,
    /// Allow repeated columns (parallel pairs).
    pub allow_parallel: bool,
    pub max_rank: usize,
    pub max_size: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            filter: Filter::Any,
            allow_parallel: false,
            max_rank: 5,
            max_size: 12,
        }
    }
}

/// Stream of enumerated matroids; see [`enumerate`].
pub struct Enumeration {
    rank: usize,
    points: usize,
    combo: Option<Vec<usize>>,
    options: EnumerateOptions,
    seen: BTreeSet<Gf2Matrix>,
}

impl Enumeration {
    fn advance(&mut self) {
        let Some(c) = self.combo.as_mut() else { return };
        let n = c.len();
        let p = self.points;
        let parallel = self.options.allow_parallel;
        // rightmost position that can still move up
        let mut i = n;
        loop {
            if i == 0 {
                self.combo = None;
                return;
            }
            i -= 1;
            let max = if parallel { p - 1 } else { p - (n - i) };
            if c[i] < max {
                break;
            }
        }
        c[i] += 1;
        for t in i + 1..n {
            c[t] = if parallel { c[i] } else { c[t - 1] + 1 };
        }
    }
}

impl Iterator for Enumeration {
    type Item = BinaryMatroid;

    fn next(&mut self) -> Option<BinaryMatroid> {
        loop {
            let combo = self.combo.clone()?;
            self.advance();
            let cols: Vec<u64> = combo.iter().map(|&i| i as u64 + 1).collect();
            let matrix = Gf2Matrix::from_column_masks(self.rank, &cols);
            if matrix.rank() != self.rank {
                continue;
            }
            let Ok(m) = BinaryMatroid::new(&matrix, Label::numbered(cols.len())) else {
                continue;
            };
            // for a full-rank matrix the reduced form determines the labeled matroid
            if !self.seen.insert(matrix.rref().0) {
                continue;
            }
            if self.options.filter.accepts(&m) {
                return Some(m);
            }
        }
    }
}

/// All labeled binary matroids of rank `r` on `n` elements obtained by
/// choosing `n` nonzero columns of GF(2)^r in increasing mask order.
pub fn enumerate(r: usize, n: usize, options: EnumerateOptions) -> Result<Enumeration> {
    if r > options.max_rank {
        return Err(Error::Size {
            size: r,
            limit: options.max_rank,
        });
    }
    if n > options.max_size {
        return Err(Error::Size {
            size: n,
            limit: options.max_size,
        });
    }
    let points = (1usize << r) - 1;
    let combo = if r == 0 || n == 0 || (!options.allow_parallel && n > points) {
        None
    } else if options.allow_parallel {
        Some(vec![0; n])
    } else {
        Some((0..n).collect())
    };
    Ok(Enumeration {
        rank: r,
        points,
        combo,
        options,
        seen: BTreeSet::new(),
    })
}

/// Named fixtures of size at most `max_n` (any rank), followed by every enumerated simple matroid with `1 <= r <= max_rank`
/// and `r < n <= max_n`. Enumerated entries are named `e{r}.{n}.{index}`.
pub fn pool(max_rank: usize, max_n: usize) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for name in NAMES {
        let m = named(name)?;
        if m.len() <= max_n {
            out.push(CatalogEntry::new(*name, m));
        }
    }
    let options = EnumerateOptions {
        max_rank: max_rank.max(EnumerateOptions::default().max_rank),
        max_size: max_n.max(EnumerateOptions::default().max_size),
        ..EnumerateOptions::default()
    };
    for r in 1..=max_rank {
        for n in r + 1..=max_n {
            for (i, m) in enumerate(r, n, options)?.enumerate() {
                out.push(CatalogEntry::new(format!("e{r}.{n}.{i}"), m));
            }
        }
    }
    Ok(out)
}

/// Direct sums of 2 up to `max_parts` entries of `parts` (as multisets, in
/// the order of `parts`) with at most `max_n` elements in total.
pub fn direct_sums(parts: &[CatalogEntry], max_parts: usize, max_n: usize) -> Vec<CatalogEntry> {
    fn go(
        parts: &[CatalogEntry],
        start: usize,
        chosen: &mut Vec<usize>,
        size: usize,
        max_parts: usize,
        max_n: usize,
        out: &mut Vec<CatalogEntry>,
    ) {
        if chosen.len() >= 2 {
            let ms: Vec<&BinaryMatroid> = chosen.iter().map(|&i| parts[i].matroid()).collect();
            let name = chosen
                .iter()
                .map(|&i| parts[i].name())
                .collect::<Vec<_>>()
                .join("+");
            out.push(CatalogEntry::new(name, direct_sum_all(&ms)));
        }
        if chosen.len() == max_parts {
            return;
        }
        for i in start..parts.len() {
            let s = size + parts[i].matroid().len();
            if s <= max_n {
                chosen.push(i);
                go(parts, i, chosen, s, max_parts, max_n, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(parts, 0, &mut Vec::new(), 0, max_parts, max_n, &mut out);
    out
}
