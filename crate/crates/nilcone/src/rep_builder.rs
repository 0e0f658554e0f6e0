//! Explicit representations of the framed cyclic quiver over the rationals,
//! built from every normal form: `U(i, N)`, `M_λ`, Achar–Henderson normal
//! bases and Johnson's coloured Jordan bases.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{format_rational, parse_rational, rat, Rational, RationalMatrix};
use crate::orbit_maps::{OrbitMapError, StripedBipartition};
use crate::partitions::Partition;
use crate::residues::{DimensionVector, OrbitLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("map {arrow} should be {rows}x{cols}, got {got_rows}x{got_cols}")]
    MapShape {
        arrow: usize,
        rows: usize,
        cols: usize,
        got_rows: usize,
        got_cols: usize,
    },
    #[error("expected {expected} arrow maps, got {got}")]
    MapCount { expected: usize, got: usize },
    #[error("framing vector should have length {expected}, got {got}")]
    FramingLength { expected: usize, got: usize },
    #[error("framing dimension must be 0 or 1, got {0}")]
    FramingDimension(usize),
    #[error("cycle map at vertex 0 is not nilpotent: its power {power} is nonzero")]
    NotNilpotent { power: usize },
    #[error("both summands carry a framing")]
    TwoFramed,
    #[error("representations have different ell ({0} and {1})")]
    EllMismatch(usize, usize),
    #[error("ell must be positive")]
    ZeroEll,
    #[error("bad rational {0:?}")]
    BadRational(String),
    #[error("ragged matrix for arrow {0}")]
    Ragged(usize),
    #[error(transparent)]
    Label(#[from] OrbitMapError),
}

/// A representation of the cyclic quiver with arrows `φ_i : i → i+1`, plus an
/// optional one-dimensional framing `∞ → 0` given by a vector at vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    ell: usize,
    dims: DimensionVector,
    maps: Vec<RationalMatrix>,
    framing_vector: Vec<Rational>,
}

impl QuiverRep {
    /// Checks shapes and the framing; nilpotency is checked separately by
    /// [`QuiverRep::check_nilpotent`].
    pub fn new(
        dims: DimensionVector,
        maps: Vec<RationalMatrix>,
        framing_vector: Vec<Rational>,
    ) -> Result<Self, RepError> {
        let ell = dims.ell();
        if ell == 0 {
            return Err(RepError::ZeroEll);
        }
        if dims.framing > 1 {
            return Err(RepError::FramingDimension(dims.framing));
        }
        if maps.len() != ell {
            return Err(RepError::MapCount {
                expected: ell,
                got: maps.len(),
            });
        }
        for (arrow, m) in maps.iter().enumerate() {
            let (rows, cols) = (dims.main[(arrow + 1) % ell], dims.main[arrow]);
            if (m.rows(), m.cols()) != (rows, cols) {
                return Err(RepError::MapShape {
                    arrow,
                    rows,
                    cols,
                    got_rows: m.rows(),
                    got_cols: m.cols(),
                });
            }
        }
        let expected = if dims.framing == 1 { dims.main[0] } else { 0 };
        if framing_vector.len() != expected {
            return Err(RepError::FramingLength {
                expected,
                got: framing_vector.len(),
            });
        }
        Ok(QuiverRep {
            ell,
            dims,
            maps,
            framing_vector,
        })
    }

    /// The zero representation, framed or not.
    pub fn zero(ell: usize, framing: usize) -> Self {
        let dims = DimensionVector {
            framing,
            ..DimensionVector::zero(ell)
        };
        QuiverRep {
            ell,
            dims,
            maps: vec![RationalMatrix::zeros(0, 0); ell],
            framing_vector: vec![],
        }
    }

    /// `ℓ = 1` representation `(v, X)`; framed when `v` is given.
    pub fn from_jordan(x: RationalMatrix, v: Option<Vec<Rational>>) -> Result<Self, RepError> {
        let n = x.rows();
        let framing = usize::from(v.is_some());
        QuiverRep::new(
            DimensionVector {
                framing,
                main: vec![n],
            },
            vec![x],
            v.unwrap_or_default(),
        )
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.dims
    }

    pub fn maps(&self) -> &[RationalMatrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &RationalMatrix {
        &self.maps[arrow % self.ell]
    }

    pub fn framing_vector(&self) -> &[Rational] {
        &self.framing_vector
    }

    pub fn is_framed(&self) -> bool {
        self.dims.framing == 1
    }

    /// Composite of `len` consecutive arrows starting at `vertex`.
    pub fn path_map(&self, vertex: usize, len: usize) -> RationalMatrix {
        let start = vertex % self.ell;
        (0..len).fold(RationalMatrix::identity(self.dims.main[start]), |acc, k| {
            self.map(start + k).mul(&acc)
        })
    }

    /// `φ_{v-1} ∘ … ∘ φ_v` at `vertex`.
    pub fn cycle_map(&self, vertex: usize) -> RationalMatrix {
        self.path_map(vertex, self.ell)
    }

    /// Smallest `k` with `(cycle map at 0)^k = 0`.
    pub fn nilpotency_degree(&self) -> Option<usize> {
        let c = self.cycle_map(0);
        let n = c.rows();
        let mut p = RationalMatrix::identity(n);
        for k in 0..=n {
            if p.is_zero() {
                return Some(k);
            }
            p = p.mul(&c);
        }
        None
    }

    pub fn check_nilpotent(&self) -> Result<(), RepError> {
        match self.nilpotency_degree() {
            Some(_) => Ok(()),
            None => Err(RepError::NotNilpotent {
                power: self.dims.main[0],
            }),
        }
    }

    /// Whether the `x`-th power of the cycle map vanishes at vertex 0.
    pub fn satisfies_relation(&self, x: usize) -> bool {
        self.nilpotency_degree().is_some_and(|d| d <= x)
    }

    /// The restriction forgetting the framing.
    pub fn unframed(&self) -> QuiverRep {
        QuiverRep {
            ell: self.ell,
            dims: DimensionVector {
                framing: 0,
                ..self.dims.clone()
            },
            maps: self.maps.clone(),
            framing_vector: vec![],
        }
    }

    /// `(g_{i+1} φ_i g_i^{-1}, g_0 v)` for invertible `g_i`, and the framing scaled by `scale`.
    pub fn base_change(&self, g: &[RationalMatrix], scale: &Rational) -> QuiverRep {
        assert_eq!(g.len(), self.ell, "one matrix per vertex");
        let inv: Vec<RationalMatrix> = g
            .iter()
            .map(|m| m.inverse().expect("base change must be invertible"))
            .collect();
        let maps = (0..self.ell)
            .map(|i| g[(i + 1) % self.ell].mul(&self.maps[i]).mul(&inv[i]))
            .collect();
        let framing_vector = if self.is_framed() {
            g[0].apply(&self.framing_vector)
                .into_iter()
                .map(|x| x * scale)
                .collect()
        } else {
            vec![]
        };
        QuiverRep {
            ell: self.ell,
            dims: self.dims.clone(),
            maps,
            framing_vector,
        }
    }

    /// A base change by random invertible matrices with small integer entries.
    pub fn random_base_change<R: Rng>(&self, rng: &mut R) -> QuiverRep {
        let g: Vec<RationalMatrix> = self
            .dims
            .main
            .iter()
            .map(|&n| random_invertible(n, rng))
            .collect();
        let mut scale = 0;
        while scale == 0 {
            scale = rng.gen_range(-3i64..=3);
        }
        self.base_change(&g, &rat(scale))
    }
}

/// A random `n × n` matrix of determinant `±1`: a permuted product of unit
/// lower and upper triangular factors with entries in `-2..=2`. Its inverse is
/// integral, so conjugating keeps integer maps integer.
pub fn random_invertible<R: Rng>(n: usize, rng: &mut R) -> RationalMatrix {
    let lower = RationalMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Greater => rat(rng.gen_range(-2i64..=2)),
        std::cmp::Ordering::Equal => rat(1),
        std::cmp::Ordering::Less => rat(0),
    });
    let upper = RationalMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => rat(rng.gen_range(-2i64..=2)),
        std::cmp::Ordering::Equal => rat(if rng.gen_bool(0.5) { 1 } else { -1 }),
        std::cmp::Ordering::Greater => rat(0),
    });
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let p = RationalMatrix::from_fn(n, n, |i, j| rat(i64::from(perm[i] == j)));
    p.mul(&lower).mul(&upper)
}

/// One chain `v_0 → v_1 → … → v_{len-1}` starting at vertex `start`, with
/// the framing vector hitting `v_mark` when a mark is given.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chain {
    pub start: usize,
    pub len: usize,
    pub mark: Option<usize>,
}

/// Direct sum of chains: the normal form every builder reduces to.
pub fn from_chains(ell: usize, chains: &[Chain], framed: bool) -> QuiverRep {
    assert!(ell >= 1, "ell must be positive");
    // (vertex, local index) of every chain vertex, in chain order.
    let mut main = vec![0; ell];
    let slots: Vec<Vec<(usize, usize)>> = chains
        .iter()
        .map(|c| {
            (0..c.len)
                .map(|k| {
                    let v = (c.start + k) % ell;
                    main[v] += 1;
                    (v, main[v] - 1)
                })
                .collect()
        })
        .collect();
    let mut maps: Vec<RationalMatrix> = (0..ell)
        .map(|i| RationalMatrix::zeros(main[(i + 1) % ell], main[i]))
        .collect();
    let mut framing_vector = if framed {
        vec![Rational::zero(); main[0]]
    } else {
        vec![]
    };
    for (c, chain) in chains.iter().enumerate() {
        for k in 0..chain.len {
            let (v, idx) = slots[c][k];
            if k + 1 < chain.len {
                let (_, next) = slots[c][k + 1];
                maps[v].set(next, idx, Rational::one());
            }
            if chain.mark == Some(k) {
                assert!(
                    framed && v == 0,
                    "marks sit at vertex 0 of a framed representation"
                );
                framing_vector[idx] = Rational::one();
            }
        }
    }
    let dims = DimensionVector {
        framing: usize::from(framed),
        main,
    };
    QuiverRep::new(dims, maps, framing_vector).expect("chain shapes are consistent")
}

/// `U(i, N)`: basis `v_k` at vertex `i + k`, maps `v_k ↦ v_{k+1}`.
pub fn build_u(start: usize, len: usize, ell: usize) -> QuiverRep {
    assert!(
        start < ell && len >= 1,
        "U(i, N) needs 0 <= i < ell and N >= 1"
    );
    from_chains(
        ell,
        &[Chain {
            start,
            len,
            mark: None,
        }],
        false,
    )
}

/// `M_λ = ⊕ U(-b_i, p_i)` with framing vector `Σ v_{b_i}`.
pub fn build_m(lambda: &Partition, ell: usize) -> QuiverRep {
    let f = lambda.frobenius();
    let chains: Vec<Chain> = f
        .legs()
        .iter()
        .zip(f.arms())
        .map(|(&a, &b)| Chain {
            start: (ell - b % ell) % ell,
            len: a + b + 1,
            mark: Some(b),
        })
        .collect();
    from_chains(ell, &chains, true)
}

/// Jordan basis with `X v_{i,j} = v_{i,j-1}` of type `μ + ν` and framing
/// vector `Σ v_{i,μ_i}` (`ℓ = 1`).
pub fn build_ah(mu: &Partition, nu: &Partition) -> QuiverRep {
    let k = mu.len().max(nu.len());
    let chains: Vec<Chain> = (0..k)
        .map(|i| {
            let (m, n) = (mu.part(i), nu.part(i));
            // v_{i,j} is chain index λ_i - j.
            Chain {
                start: 0,
                len: m + n,
                mark: (m > 0).then_some(n),
            }
        })
        .collect();
    from_chains(1, &chains, true)
}

/// Coloured Jordan basis of type `(λ, ε)` with framing vector `Σ v_{i,ν_i}`
/// (terms with `ν_i ≤ 0` vanish).
pub fn build_johnson(s: &StripedBipartition, ell: usize) -> Result<QuiverRep, RepError> {
    s.validate(ell)?;
    let chains: Vec<Chain> = (0..s.lambda.len())
        .map(|i| {
            let len = s.lambda.part(i);
            let nu = s.nu[i];
            Chain {
                start: s.epsilon[i],
                len,
                mark: (nu > 0).then(|| len - nu as usize),
            }
        })
        .collect();
    Ok(from_chains(ell, &chains, true))
}

/// Canonical representative `M_λ ⊕ ⨁ U(i, ν^(i)_j)` of an orbit label.
pub fn build_label(label: &OrbitLabel) -> QuiverRep {
    let ell = label.ell();
    label
        .nu
        .components()
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.parts().iter().map(move |&n| (i, n)))
        .fold(build_m(&label.lambda, ell), |acc, (i, n)| {
            direct_sum(&acc, &build_u(i, n, ell)).expect("only M_λ is framed")
        })
}

/// Block sum; the framing vector comes from whichever summand is framed.
pub fn direct_sum(m: &QuiverRep, n: &QuiverRep) -> Result<QuiverRep, RepError> {
    if m.ell != n.ell {
        return Err(RepError::EllMismatch(m.ell, n.ell));
    }
    if m.is_framed() && n.is_framed() {
        return Err(RepError::TwoFramed);
    }
    let ell = m.ell;
    let main: Vec<usize> = m
        .dims
        .main
        .iter()
        .zip(&n.dims.main)
        .map(|(a, b)| a + b)
        .collect();
    let framing = m.dims.framing.max(n.dims.framing);
    let maps = (0..ell).map(|i| m.maps[i].block_diag(&n.maps[i])).collect();
    let framing_vector = if framing == 0 {
        vec![]
    } else {
        let pad = |r: &QuiverRep| {
            if r.is_framed() {
                r.framing_vector.clone()
            } else {
                vec![Rational::zero(); r.dims.main[0]]
            }
        };
        pad(m).into_iter().chain(pad(n)).collect()
    };
    QuiverRep::new(DimensionVector { framing, main }, maps, framing_vector)
}

/// JSON form with rationals written as `"p/q"` or `"p"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverRepJson {
    pub ell: usize,
    pub dims: DimensionVector,
    pub maps: Vec<Vec<Vec<String>>>,
    pub framing_vector: Vec<String>,
}

impl From<&QuiverRep> for QuiverRepJson {
    fn from(r: &QuiverRep) -> Self {
        QuiverRepJson {
            ell: r.ell,
            dims: r.dims.clone(),
            maps: r
                .maps
                .iter()
                .map(|m| {
                    m.to_rows()
                        .iter()
                        .map(|row| row.iter().map(format_rational).collect())
                        .collect()
                })
                .collect(),
            framing_vector: r.framing_vector.iter().map(format_rational).collect(),
        }
    }
}

impl TryFrom<QuiverRepJson> for QuiverRep {
    type Error = RepError;

    fn try_from(j: QuiverRepJson) -> Result<Self, RepError> {
        if j.dims.ell() != j.ell {
            return Err(RepError::MapCount {
                expected: j.ell,
                got: j.dims.ell(),
            });
        }
        let parse = |s: &String| parse_rational(s).ok_or_else(|| RepError::BadRational(s.clone()));
        let mut maps = Vec::with_capacity(j.maps.len());
        for (arrow, m) in j.maps.iter().enumerate() {
            let cols = j.dims.main.get(arrow).copied().unwrap_or(0);
            let rows: Vec<Vec<Rational>> = m
                .iter()
                .map(|row| row.iter().map(parse).collect::<Result<_, _>>())
                .collect::<Result<_, _>>()?;
            // An empty row list carries no column count; trust the dims.
            let cols = rows.first().map_or(cols, Vec::len);
            maps.push(RationalMatrix::from_rows(rows, cols).ok_or(RepError::Ragged(arrow))?);
        }
        let v = j
            .framing_vector
            .iter()
            .map(parse)
            .collect::<Result<_, _>>()?;
        QuiverRep::new(j.dims, maps, v)
    }
}

impl QuiverRep {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&QuiverRepJson::from(self)).expect("plain data serialises")
    }
}
