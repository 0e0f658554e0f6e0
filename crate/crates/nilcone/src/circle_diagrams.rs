//! Circle diagrams (multisets of coloured chains) and Frobenius circle diagrams.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{FrobeniusPartition, Partition};
use crate::residues::{dim_u, in_u_set, DimensionVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("partition has {parts} rows but {colours} colours were given")]
    ColourCount { parts: usize, colours: usize },
    #[error("colour {colour} is out of range for ell = {ell}")]
    ColourRange { colour: usize, ell: usize },
    #[error("circle start {start} is out of range for ell = {ell}")]
    StartRange { start: usize, ell: usize },
    #[error("circles must have positive length")]
    EmptyCircle,
    #[error("mark offset {mark} does not lie on a circle of length {len}")]
    MarkRange { mark: usize, len: usize },
    #[error("marked vertex of circle (start {start}, mark {mark}) is not in position 0")]
    MarkNotAtZero { start: usize, mark: usize },
    #[error("not Frobenius: following/preceding counts are not strictly decreasing")]
    NotFrobenius,
    #[error("ell must be positive")]
    ZeroEll,
    #[error("malformed diagram: {0}")]
    Malformed(String),
}

/// A circle: a chain of `len` vertices starting in position `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Circle {
    pub start: usize,
    pub len: usize,
}

impl Circle {
    /// Canonical ordering key: length descending, then start ascending.
    fn key(&self) -> (std::cmp::Reverse<usize>, usize) {
        (std::cmp::Reverse(self.len), self.start)
    }
}

impl PartialOrd for Circle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Circle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

/// A multiset of circles of type ℓ, kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircleDiagram {
    ell: usize,
    circles: Vec<Circle>,
}

impl CircleDiagram {
    pub fn new(ell: usize, mut circles: Vec<Circle>) -> Result<Self, DiagramError> {
        if ell == 0 {
            return Err(DiagramError::ZeroEll);
        }
        for c in &circles {
            if c.len == 0 {
                return Err(DiagramError::EmptyCircle);
            }
            if c.start >= ell {
                return Err(DiagramError::StartRange {
                    start: c.start,
                    ell,
                });
            }
        }
        circles.sort();
        Ok(CircleDiagram { ell, circles })
    }

    pub fn empty(ell: usize) -> Self {
        CircleDiagram {
            ell,
            circles: Vec::new(),
        }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn circles(&self) -> &[Circle] {
        &self.circles
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    pub fn dimension(&self) -> DimensionVector {
        self.circles
            .iter()
            .fold(DimensionVector::zero(self.ell), |acc, c| {
                acc.add(&dim_u(c.start, c.len, self.ell))
            })
    }
}

/// A Frobenius circle: length `len`, marked vertex `mark` steps after the start.
///
/// The start is forced to be `-mark mod ℓ` so that the marked vertex is in
/// position 0. `mark` is the number of preceding vertices (the arm `b`), and
/// `len - mark - 1` the number of following ones (the leg `a`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FrobeniusCircle {
    pub len: usize,
    pub mark: usize,
}

impl FrobeniusCircle {
    pub fn start(&self, ell: usize) -> usize {
        (ell - self.mark % ell) % ell
    }

    pub fn following(&self) -> usize {
        self.len - self.mark - 1
    }

    pub fn preceding(&self) -> usize {
        self.mark
    }

    /// 1-based label of the marked vertex, counted back from the end of the
    /// circle. This matches how marks are numbered in printed diagrams.
    pub fn mark_label(&self) -> usize {
        self.len - self.mark
    }
}

/// A circle diagram whose circles each carry one mark in position 0, with
/// following/preceding counts forming a Frobenius partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrobeniusCircleDiagram {
    ell: usize,
    circles: Vec<FrobeniusCircle>,
}

impl FrobeniusCircleDiagram {
    pub fn new(ell: usize, mut circles: Vec<FrobeniusCircle>) -> Result<Self, DiagramError> {
        if ell == 0 {
            return Err(DiagramError::ZeroEll);
        }
        for c in &circles {
            if c.mark >= c.len {
                return Err(DiagramError::MarkRange {
                    mark: c.mark,
                    len: c.len,
                });
            }
        }
        circles.sort_by(|x, y| y.mark.cmp(&x.mark).then(y.len.cmp(&x.len)));
        let ok = circles
            .windows(2)
            .all(|w| w[0].mark > w[1].mark && w[0].following() > w[1].following());
        if !ok {
            return Err(DiagramError::NotFrobenius);
        }
        Ok(FrobeniusCircleDiagram { ell, circles })
    }

    /// Validates circles given by explicit start and mark, as read from a file.
    pub fn from_marked(ell: usize, marked: &[(Circle, usize)]) -> Result<Self, DiagramError> {
        if ell == 0 {
            return Err(DiagramError::ZeroEll);
        }
        let mut circles = Vec::with_capacity(marked.len());
        for &(c, mark) in marked {
            if mark >= c.len {
                return Err(DiagramError::MarkRange { mark, len: c.len });
            }
            if (c.start + mark) % ell != 0 {
                return Err(DiagramError::MarkNotAtZero {
                    start: c.start,
                    mark,
                });
            }
            circles.push(FrobeniusCircle { len: c.len, mark });
        }
        FrobeniusCircleDiagram::new(ell, circles)
    }

    pub fn empty(ell: usize) -> Self {
        FrobeniusCircleDiagram {
            ell,
            circles: Vec::new(),
        }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Circles ordered by strictly decreasing arm (and leg).
    pub fn circles(&self) -> &[FrobeniusCircle] {
        &self.circles
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    pub fn frobenius(&self) -> FrobeniusPartition {
        FrobeniusPartition::new(
            self.circles
                .iter()
                .map(FrobeniusCircle::following)
                .collect(),
            self.circles
                .iter()
                .map(FrobeniusCircle::preceding)
                .collect(),
        )
        .expect("validated on construction")
    }

    /// The underlying unmarked diagram.
    pub fn underlying(&self) -> CircleDiagram {
        let circles = self
            .circles
            .iter()
            .map(|c| Circle {
                start: c.start(self.ell),
                len: c.len,
            })
            .collect();
        CircleDiagram::new(self.ell, circles).expect("starts are reduced mod ell")
    }

    /// Dimension vector of the cyclic part (framing 0).
    pub fn dimension(&self) -> DimensionVector {
        self.underlying().dimension()
    }
}

/// `C(λ, ε)`: the i-th circle starts at `ε_i` and has length `λ_i`.
pub fn diagram_of_coloured_partition(
    lambda: &Partition,
    colours: &[usize],
    ell: usize,
) -> Result<CircleDiagram, DiagramError> {
    if colours.len() != lambda.len() {
        return Err(DiagramError::ColourCount {
            parts: lambda.len(),
            colours: colours.len(),
        });
    }
    if let Some(&colour) = colours.iter().find(|&&c| c >= ell) {
        return Err(DiagramError::ColourRange { colour, ell });
    }
    let circles = lambda
        .parts()
        .iter()
        .zip(colours)
        .map(|(&len, &start)| Circle { start, len })
        .collect();
    CircleDiagram::new(ell, circles)
}

/// One circle per Frobenius hook, marked at the hinge.
pub fn frobenius_diagram_of_partition(lambda: &Partition, ell: usize) -> FrobeniusCircleDiagram {
    let f = lambda.frobenius();
    let circles = f
        .legs()
        .iter()
        .zip(f.arms())
        .map(|(&a, &b)| FrobeniusCircle {
            len: a + b + 1,
            mark: b,
        })
        .collect();
    FrobeniusCircleDiagram::new(ell, circles).expect("hooks of a partition are Frobenius")
}

pub fn partition_of_frobenius_diagram(c: &FrobeniusCircleDiagram) -> Partition {
    c.frobenius().to_partition()
}

/// Number of position-0 vertices on the longest circle.
pub fn weight_of_diagram(c: &FrobeniusCircleDiagram) -> usize {
    c.circles
        .iter()
        .max_by_key(|x| x.len)
        .map_or(0, |x| dim_u(x.start(c.ell), x.len, c.ell).main[0])
}

/// Which circles [`bounded_circle_diagrams`] admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircleFilter {
    /// Circles passing through position 0 at most `x` times.
    VertexZero,
    /// Circles of length at most `x`.
    Length,
}

/// All circle diagrams of total dimension `d` (framing ignored) whose circles pass the filter.
pub fn bounded_circle_diagrams(
    ell: usize,
    x: usize,
    d: &DimensionVector,
    filter: CircleFilter,
) -> Vec<CircleDiagram> {
    assert_eq!(d.ell(), ell, "dimension vector has the wrong length");
    let total = d.total();
    let mut kinds = Vec::new();
    for len in (1..=total).rev() {
        for start in 0..ell {
            let keep = match filter {
                CircleFilter::VertexZero => in_u_set(start, len, ell, x),
                CircleFilter::Length => len <= x,
            };
            if keep {
                kinds.push(Circle { start, len });
            }
        }
    }
    let dims: Vec<Vec<usize>> = kinds
        .iter()
        .map(|c| dim_u(c.start, c.len, ell).main)
        .collect();
    let mut out = Vec::new();
    tile(
        &kinds,
        &dims,
        0,
        d.main.clone(),
        &mut Vec::new(),
        &mut |cs| {
            out.push(CircleDiagram {
                ell,
                circles: cs.to_vec(),
            })
        },
    );
    out
}

fn tile(
    kinds: &[Circle],
    dims: &[Vec<usize>],
    from: usize,
    rest: Vec<usize>,
    chosen: &mut Vec<Circle>,
    emit: &mut dyn FnMut(&[Circle]),
) {
    if rest.iter().all(|&r| r == 0) {
        emit(chosen);
        return;
    }
    for k in from..kinds.len() {
        let next: Option<Vec<usize>> = rest
            .iter()
            .zip(&dims[k])
            .map(|(r, d)| r.checked_sub(*d))
            .collect();
        if let Some(next) = next {
            chosen.push(kinds[k]);
            tile(kinds, dims, k, next, chosen, emit);
            chosen.pop();
        }
    }
}

/// JSON form of a diagram: every circle with its start, length and optional mark.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub ell: usize,
    pub circles: Vec<CircleJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleJson {
    pub start: usize,
    pub len: usize,
    pub mark: Option<usize>,
}

impl DiagramJson {
    /// Marked circles first (in Frobenius order), then the plain ones.
    pub fn from_parts(frob: &FrobeniusCircleDiagram, plain: &CircleDiagram) -> Self {
        assert_eq!(frob.ell(), plain.ell(), "diagrams of different ell");
        let mut circles: Vec<CircleJson> = frob
            .circles()
            .iter()
            .map(|c| CircleJson {
                start: c.start(frob.ell()),
                len: c.len,
                mark: Some(c.mark),
            })
            .collect();
        circles.extend(plain.circles().iter().map(|c| CircleJson {
            start: c.start,
            len: c.len,
            mark: None,
        }));
        DiagramJson {
            ell: plain.ell(),
            circles,
        }
    }

    pub fn into_parts(&self) -> Result<(FrobeniusCircleDiagram, CircleDiagram), DiagramError> {
        let mut marked = Vec::new();
        let mut plain = Vec::new();
        for c in &self.circles {
            if c.len == 0 {
                return Err(DiagramError::EmptyCircle);
            }
            if c.start >= self.ell.max(1) {
                return Err(DiagramError::StartRange {
                    start: c.start,
                    ell: self.ell,
                });
            }
            let circle = Circle {
                start: c.start,
                len: c.len,
            };
            match c.mark {
                Some(m) => marked.push((circle, m)),
                None => plain.push(circle),
            }
        }
        Ok((
            FrobeniusCircleDiagram::from_marked(self.ell, &marked)?,
            CircleDiagram::new(self.ell, plain)?,
        ))
    }
}

/// Graphviz source: one node per vertex, arrows along circles, marked vertices
/// boxed, one cluster per position.
pub fn to_dot(json: &DiagramJson) -> String {
    let ell = json.ell;
    let mut by_pos: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut edges = Vec::new();
    for (i, c) in json.circles.iter().enumerate() {
        for k in 0..c.len {
            let shape = if c.mark == Some(k) { "box" } else { "circle" };
            by_pos
                .entry((c.start + k) % ell)
                .or_default()
                .push(format!("c{i}_{k} [shape={shape}, label=\"\"];"));
            if k + 1 < c.len {
                edges.push(format!("c{i}_{k} -> c{i}_{};", k + 1));
            }
        }
    }
    let mut out = String::new();
    writeln!(out, "digraph circles {{").unwrap();
    writeln!(out, "  label=\"ell={ell}\";").unwrap();
    for pos in 0..ell {
        writeln!(out, "  subgraph cluster_{pos} {{").unwrap();
        writeln!(out, "    label=\"{pos}\";").unwrap();
        for node in by_pos.get(&pos).into_iter().flatten() {
            writeln!(out, "    {node}").unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for e in edges {
        writeln!(out, "  {e}").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

/// Reads back the output of [`to_dot`].
pub fn from_dot(src: &str) -> Result<DiagramJson, DiagramError> {
    let bad = |m: &str| DiagramError::Malformed(m.to_string());
    let mut ell = None;
    let mut cluster: Option<usize> = None;
    // circle index -> vertex index -> (position, marked)
    let mut verts: BTreeMap<usize, BTreeMap<usize, (usize, bool)>> = BTreeMap::new();
    for line in src.lines().map(str::trim) {
        if let Some(rest) = line.strip_prefix("label=\"ell=") {
            ell = Some(
                rest.trim_end_matches("\";")
                    .parse::<usize>()
                    .map_err(|_| bad("ell"))?,
            );
        } else if let Some(rest) = line.strip_prefix("subgraph cluster_") {
            cluster = Some(
                rest.trim_end_matches('{')
                    .trim()
                    .parse()
                    .map_err(|_| bad("cluster"))?,
            );
        } else if line.starts_with('c') && !line.contains("->") {
            let (name, attrs) = line.split_once(' ').ok_or_else(|| bad("node"))?;
            let (ci, k) = parse_node(name).ok_or_else(|| bad("node name"))?;
            let pos = cluster.ok_or_else(|| bad("node outside cluster"))?;
            verts
                .entry(ci)
                .or_default()
                .insert(k, (pos, attrs.contains("shape=box")));
        }
    }
    let ell = ell.ok_or_else(|| bad("missing ell"))?;
    let mut circles = Vec::new();
    for (_, vs) in verts {
        let len = vs.len();
        if vs.keys().copied().ne(0..len) {
            return Err(bad("gap in circle"));
        }
        let start = vs[&0].0;
        if vs.iter().any(|(&k, &(p, _))| p != (start + k) % ell) {
            return Err(bad("vertex in the wrong cluster"));
        }
        let mark = vs.iter().find(|(_, &(_, m))| m).map(|(&k, _)| k);
        circles.push(CircleJson { start, len, mark });
    }
    Ok(DiagramJson { ell, circles })
}

fn parse_node(name: &str) -> Option<(usize, usize)> {
    let (i, k) = name.strip_prefix('c')?.split_once('_')?;
    Some((i.parse().ok()?, k.parse().ok()?))
}

/// Terminal rendering: one line per circle listing the positions of its vertices,
/// with the marked vertex in brackets.
pub fn to_ascii(json: &DiagramJson) -> String {
    let mut out = String::new();
    writeln!(out, "ell = {}", json.ell).unwrap();
    for (i, c) in json.circles.iter().enumerate() {
        let verts: Vec<String> = (0..c.len)
            .map(|k| {
                let p = (c.start + k) % json.ell;
                if c.mark == Some(k) {
                    format!("[{p}]")
                } else {
                    p.to_string()
                }
            })
            .collect();
        let tag = match c.mark {
            Some(m) => format!("  mark s={}", c.len - m),
            None => String::new(),
        };
        writeln!(
            out,
            "circle {}: len {}  {}{}",
            i + 1,
            c.len,
            verts.join(" -> "),
            tag
        )
        .unwrap();
    }
    out
}
