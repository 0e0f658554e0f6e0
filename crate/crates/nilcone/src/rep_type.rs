//! Representation type of the framed cyclic algebras `A_∞(ℓ, x)`: the Tits
//! form on finite windows of the covering quiver, the finite/tame table and
//! wildness witnesses.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exec::Exec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepTypeError {
    #[error("vector has {got} entries, the window has {expected} vertices")]
    Length { expected: usize, got: usize },
    #[error("first framing row {first} must lie in 1..={ell}")]
    Phase { first: usize, ell: usize },
    #[error("ell and x must be positive")]
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RepType {
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepType::Finite => "finite",
            RepType::Tame => "tame",
            RepType::Wild => "wild",
        };
        f.write_str(s)
    }
}

/// `rows` consecutive main vertices of the covering quiver (row `r` maps to
/// row `r+1`), with a framing vertex at every ℓ-th row starting from `framing_rows[0]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringWindow {
    pub ell: usize,
    pub x: usize,
    pub rows: usize,
    /// 1-based rows carrying a framing vertex (the lifts of vertex 0).
    pub framing_rows: Vec<usize>,
}

impl CoveringWindow {
    pub fn new(ell: usize, x: usize, rows: usize, first: usize) -> Result<Self, RepTypeError> {
        if ell == 0 || x == 0 {
            return Err(RepTypeError::Zero);
        }
        if !(1..=ell).contains(&first) {
            return Err(RepTypeError::Phase { first, ell });
        }
        let framing_rows = (first..=rows).step_by(ell).collect();
        Ok(CoveringWindow {
            ell,
            x,
            rows,
            framing_rows,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.rows + self.framing_rows.len()
    }

    /// Minimal relations: `(s, s + ℓx)` for framing rows `s` whose path fits.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let len = self.ell * self.x;
        self.framing_rows
            .iter()
            .filter(|&&s| s + len <= self.rows)
            .map(|&s| (s, s + len))
            .collect()
    }

    fn is_framing_row(&self, r: usize) -> bool {
        self.framing_rows.contains(&r)
    }
}

/// `q(d) = Σ d_i² − Σ_{arrows} d_s d_t + Σ_{relations} d_s d_t`, with `d`
/// listing the main rows first and then the framing vertices in row order.
pub fn tits_form(w: &CoveringWindow, d: &[i64]) -> Result<i64, RepTypeError> {
    if d.len() != w.vertex_count() {
        return Err(RepTypeError::Length {
            expected: w.vertex_count(),
            got: d.len(),
        });
    }
    let (main, framing) = d.split_at(w.rows);
    let at = |r: usize| main[r - 1];
    let squares: i64 = d.iter().map(|v| v * v).sum();
    let vertical: i64 = (1..w.rows).map(|r| at(r) * at(r + 1)).sum();
    let framing_arrows: i64 = w
        .framing_rows
        .iter()
        .zip(framing)
        .map(|(&r, f)| f * at(r))
        .sum();
    let relations: i64 = w.relations().iter().map(|&(s, t)| at(s) * at(t)).sum();
    Ok(squares - vertical - framing_arrows + relations)
}

/// Finite for `(1,1..=3), (2,1), (3,1)`, tame for `(2,2), (4,1)`, wild otherwise.
pub fn classify(ell: usize, x: usize) -> RepType {
    match (ell, x) {
        (1, 1..=3) | (2, 1) | (3, 1) => RepType::Finite,
        (2, 2) | (4, 1) => RepType::Tame,
        _ => RepType::Wild,
    }
}

/// A window and vector with `q ≤ −1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub window: CoveringWindow,
    pub vector: Vec<i64>,
    pub q: i64,
}

impl Witness {
    fn new(window: CoveringWindow, vector: Vec<i64>) -> Self {
        let q = tits_form(&window, &vector).expect("stored witnesses fit their windows");
        Witness { window, vector, q }
    }
}

/// The printed witness vectors for `ℓ = 1, x ≥ 4`, `ℓ = 2, x ≥ 3` and `ℓ = 3, x ≥ 2`.
pub fn stored_witness(ell: usize, x: usize) -> Option<Witness> {
    let (rows, first, main, framing): (usize, usize, Vec<i64>, Vec<i64>) = match (ell, x) {
        (1, 4..) => (4, 1, vec![2, 3, 3, 2], vec![1, 2, 2, 1]),
        (2, 3..) => (7, 2, vec![1, 2, 2, 3, 2, 2, 1], vec![1, 1, 1]),
        (3, 2..) => (8, 3, vec![1, 2, 3, 3, 3, 3, 2, 1], vec![1, 1]),
        _ => return None,
    };
    let window = CoveringWindow::new(ell, x, rows, first).expect("valid stored window");
    Some(Witness::new(
        window,
        main.into_iter().chain(framing).collect(),
    ))
}

/// Minimum of `q` over vectors with entries in `0..=bound` on the window,
/// with an argmin. The framing entries are optimised pointwise.
pub fn minimise_tits(w: &CoveringWindow, bound: i64) -> (i64, Vec<i64>) {
    // f² − f·d is minimised at f = ⌊d/2⌋ for 0 ≤ d ≤ 2·bound.
    let framing_cost = |d: i64| {
        let f = (d / 2).min(bound);
        f * f - f * d
    };
    let len = w.ell * w.x;
    // Framing rows whose relation end lies inside the window, with their value.
    type State = (i64, Vec<(usize, i64)>);
    let mut layer: BTreeMap<State, (i64, Vec<i64>)> = BTreeMap::new();
    layer.insert((0, vec![]), (0, vec![]));
    for r in 1..=w.rows {
        let mut next: BTreeMap<State, (i64, Vec<i64>)> = BTreeMap::new();
        for ((prev, pending), (cost, path)) in &layer {
            for d in 0..=bound {
                let mut c = cost + d * d - prev * d;
                if w.is_framing_row(r) {
                    c += framing_cost(d);
                }
                let mut keep = Vec::with_capacity(pending.len() + 1);
                for &(s, v) in pending {
                    if s + len == r {
                        c += v * d;
                    } else {
                        keep.push((s, v));
                    }
                }
                if w.is_framing_row(r) && r + len <= w.rows {
                    keep.push((r, d));
                }
                let entry = next.entry((d, keep)).or_insert((i64::MAX, vec![]));
                if c < entry.0 {
                    let mut p = path.clone();
                    p.push(d);
                    *entry = (c, p);
                }
            }
        }
        layer = next;
    }
    let (q, main) = layer.into_values().min().expect("at least the zero vector");
    let framing = w
        .framing_rows
        .iter()
        .map(|&r| (main[r - 1] / 2).min(bound))
        .collect::<Vec<_>>();
    let vector: Vec<i64> = main.into_iter().chain(framing).collect();
    debug_assert_eq!(tits_form(w, &vector), Ok(q));
    (q, vector)
}

/// Search over windows of up to `max_rows` rows (every framing phase) for
/// `q ≤ −1` with entries `≤ bound`.
pub fn search_witness(
    ell: usize,
    x: usize,
    max_rows: usize,
    bound: i64,
    exec: Exec,
) -> Option<Witness> {
    let phases: Vec<usize> = (1..=ell).collect();
    exec.find_first(&phases, |&first| {
        let w = CoveringWindow::new(ell, x, max_rows, first).ok()?;
        let (q, vector) = minimise_tits(&w, bound);
        (q <= -1).then_some(Witness {
            window: w,
            vector,
            q,
        })
    })
    .map(trim)
}

/// Drops zero rows at either end of a witness window.
fn trim(w: Witness) -> Witness {
    let rows = w.window.rows;
    let main = &w.vector[..rows];
    let lo = main.iter().position(|&d| d != 0).unwrap_or(0);
    let hi = main.iter().rposition(|&d| d != 0).map_or(0, |i| i + 1);
    let framing: HashMap<usize, i64> = w
        .window
        .framing_rows
        .iter()
        .copied()
        .zip(w.vector[rows..].iter().copied())
        .collect();
    let ell = w.window.ell;
    let first_row = (lo + 1..=hi).find(|r| framing.contains_key(r));
    let first = match first_row {
        Some(r) => (r - lo - 1) % ell + 1,
        None => return w,
    };
    let window = CoveringWindow::new(ell, w.window.x, hi - lo, first).expect("phase in range");
    let vector: Vec<i64> = main[lo..hi]
        .iter()
        .copied()
        .chain(window.framing_rows.iter().map(|r| framing[&(r + lo)]))
        .collect();
    Witness::new(window, vector)
}

/// Stored witness, else a bounded search; `None` for finite and tame types,
/// and for wild types when the search finds nothing (not a tameness claim).
pub fn wildness_witness(ell: usize, x: usize) -> Option<Witness> {
    if classify(ell, x) != RepType::Wild {
        return None;
    }
    stored_witness(ell, x).or_else(|| search_witness(ell, x, 12, 6, Exec::default()))
}
