//! Jordan types, centralizers, Hom spaces and the Krull–Remak–Schmidt
//! decomposition of nilpotent framed cyclic-quiver representations.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circle_diagrams::{Circle, CircleDiagram, FrobeniusCircleDiagram};
use crate::exec::Exec;
use crate::linalg::{is_zero_vector, rat, Rational, RationalMatrix};
use crate::orbit_maps::{label_of_diagrams, psi_label};
use crate::partitions::{Bipartition, Multipartition, Partition};
use crate::rep_builder::{build_label, QuiverRep, RepError};
use crate::residues::{DimensionVector, OrbitLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("negative multiplicity for U({start}, {len}); input is not nilpotent")]
    NegativeMultiplicity { start: usize, len: usize },
    #[error("no orbit label matched a representation of dimension {0}")]
    NoLabelMatched(DimensionVector),
    #[error("representation must be framed")]
    Unframed,
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// `λ` with `λ^t_j = rank X^{j-1} - rank X^j`.
pub fn jordan_type(x: &RationalMatrix) -> Result<Partition, DecomposeError> {
    if !x.is_square() {
        return Err(DecomposeError::NotSquare);
    }
    let n = x.rows();
    let mut ranks = vec![n];
    let mut p = RationalMatrix::identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        if ranks.len() > n {
            return Err(DecomposeError::NotNilpotent);
        }
        p = p.mul(x);
        ranks.push(p.rank());
    }
    let columns: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(Partition::new(columns)
        .map_err(|_| DecomposeError::NotNilpotent)?
        .transpose())
}

/// Basis of `{C : XC = CX}`.
pub fn centralizer_basis(x: &RationalMatrix) -> Result<Vec<RationalMatrix>, DecomposeError> {
    if !x.is_square() {
        return Err(DecomposeError::NotSquare);
    }
    let n = x.rows();
    // Unknown C[r][c] sits at r * n + c; equation (XC - CX)[i][j] = 0.
    let sys = RationalMatrix::from_fn(n * n, n * n, |eq, var| {
        let (i, j) = (eq / n, eq % n);
        let (r, c) = (var / n, var % n);
        let mut v = Rational::zero();
        if c == j {
            v += x.get(i, r);
        }
        if r == i {
            v -= x.get(c, j);
        }
        v
    });
    Ok(sys
        .kernel()
        .into_iter()
        .map(|k| RationalMatrix::from_fn(n, n, |r, c| k[r * n + c].clone()))
        .collect())
}

/// Columns spanning the same space as `vectors`, independent.
fn span_basis(vectors: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return vec![];
    }
    let m = RationalMatrix::from_columns(vectors, dim);
    m.independent_columns()
        .into_iter()
        .map(|c| vectors[c].clone())
        .collect()
}

/// Matrix of `X` on the invariant subspace spanned by `basis`, and on the quotient.
fn restrict_and_quotient(
    x: &RationalMatrix,
    basis: &[Vec<Rational>],
) -> (RationalMatrix, RationalMatrix) {
    let n = x.rows();
    let k = basis.len();
    // Extend to a basis of V with standard vectors.
    let mut full: Vec<Vec<Rational>> = basis.to_vec();
    let mut cands = full.clone();
    for e in 0..n {
        let mut v = vec![Rational::zero(); n];
        v[e] = rat(1);
        cands.push(v);
    }
    full = span_basis(&cands, n);
    debug_assert_eq!(full.len(), n);
    debug_assert_eq!(&full[..k], basis);
    let p = RationalMatrix::from_columns(&full, n);
    let y = p.inverse().expect("basis of V").mul(x).mul(&p);
    let sub = RationalMatrix::from_fn(k, k, |r, c| y.get(r, c).clone());
    let quo = RationalMatrix::from_fn(n - k, n - k, |r, c| y.get(k + r, k + c).clone());
    (sub, quo)
}

/// Jordan chains of a nilpotent `x`, longest first. Each chain runs
/// `X^{k-1}h, …, Xh, h` from the bottom of the block up to its head `h`.
pub fn jordan_chains(x: &RationalMatrix) -> Result<Vec<Vec<Vec<Rational>>>, DecomposeError> {
    if !x.is_square() {
        return Err(DecomposeError::NotSquare);
    }
    let n = x.rows();
    let mut kernels = vec![Vec::new()];
    let mut p = RationalMatrix::identity(n);
    while kernels.last().expect("nonempty").len() < n {
        if kernels.len() > n {
            return Err(DecomposeError::NotNilpotent);
        }
        p = p.mul(x);
        kernels.push(p.kernel());
    }
    let mut chains: Vec<Vec<Vec<Rational>>> = Vec::new();
    for k in (1..kernels.len()).rev() {
        // Heads of length-k chains complete K_{k-1} plus the longer chains to K_k.
        let covered: Vec<Vec<Rational>> = kernels[k - 1]
            .iter()
            .cloned()
            .chain(chains.iter().map(|c| c[k - 1].clone()))
            .collect();
        let mut cands = covered.clone();
        cands.extend(kernels[k].iter().cloned());
        let idx = RationalMatrix::from_columns(&cands, n).independent_columns();
        for &i in idx.iter().filter(|&&i| i >= covered.len()) {
            let mut chain = vec![cands[i].clone()];
            for _ in 1..k {
                let next = x.apply(chain.last().expect("nonempty"));
                chain.push(next);
            }
            chain.reverse();
            chains.push(chain);
        }
    }
    Ok(chains)
}

/// Achar–Henderson invariant `(μ; ν)` of `(v, X)`: the Jordan types of `X`
/// on `W = Z(X)·v` and on `V / W`, paired row by row.
///
/// Works in a Jordan basis, where `Z(X)` is spanned by the module maps
/// sending the head of one block to a vector of another block.
pub fn ah_invariant(v: &[Rational], x: &RationalMatrix) -> Result<Bipartition, DecomposeError> {
    let lambda = jordan_type(x)?;
    let n = x.rows();
    let chains = jordan_chains(x)?;
    let cols: Vec<Vec<Rational>> = chains.iter().flatten().cloned().collect();
    let p = RationalMatrix::from_columns(&cols, n);
    let p_inv = p.inverse().expect("Jordan chains form a basis");
    let coords = p_inv.apply(v);
    let j = p_inv.mul(x).mul(&p);
    let mut blocks = Vec::new();
    let mut off = 0;
    for c in &chains {
        blocks.push((off, c.len()));
        off += c.len();
    }
    // Block s has basis e_1, …, e_a with X e_i = e_{i-1}. The map sending e_a
    // into the target's e_h sends e_{a-i} to e_{h-i}.
    let mut orbit = Vec::new();
    for &(os, a) in &blocks {
        for &(ot, b) in &blocks {
            for h in 1..=a.min(b) {
                let mut w = vec![Rational::zero(); n];
                for i in 0..h {
                    w[ot + h - i - 1] = coords[os + a - i - 1].clone();
                }
                if !is_zero_vector(&w) {
                    orbit.push(w);
                }
            }
        }
    }
    let w = span_basis(&orbit, n);
    let (sub, quo) = restrict_and_quotient(&j, &w);
    let mu = jordan_type(&sub)?;
    let nu = jordan_type(&quo)?;
    let k = lambda.len();
    debug_assert!(
        (0..k).all(|i| mu.part(i) + nu.part(i) == lambda.part(i)),
        "normal form pairing"
    );
    Ok(Bipartition::new(mu, nu))
}

/// Rank of the composite of `len` arrows from `vertex` (the dimension when `len = 0`).
fn path_rank(m: &QuiverRep, vertex: usize, len: usize) -> usize {
    m.path_map(vertex, len).rank()
}

/// Multiplicities of `U(i, N)` in the unframed part, grouped by start vertex.
pub fn cyclic_multiplicities(m: &QuiverRep) -> Result<Multipartition, DecomposeError> {
    let ell = m.ell();
    let total = m.dims().total();
    let mut ranks: HashMap<(usize, usize), usize> = HashMap::new();
    let mut r = |i: usize, len: usize| -> usize {
        *ranks.entry((i % ell, len)).or_insert_with(|| {
            if len > total {
                0
            } else {
                path_rank(m, i % ell, len)
            }
        })
    };
    if r(0, total + 1) != 0 {
        return Err(DecomposeError::NotNilpotent);
    }
    let mut rows = vec![Vec::new(); ell];
    for (i, row) in rows.iter_mut().enumerate() {
        let prev = (i + ell - 1) % ell;
        for len in 1..=total {
            let m = r(i, len - 1) as i64 - r(i, len) as i64 - r(prev, len) as i64
                + r(prev, len + 1) as i64;
            if m < 0 {
                return Err(DecomposeError::NegativeMultiplicity { start: i, len });
            }
            row.extend(std::iter::repeat_n(len, m as usize));
        }
    }
    Ok(Multipartition::new(
        rows.into_iter().map(Partition::from_unsorted).collect(),
    ))
}

/// Linear system whose kernel is `Hom(M, N)`, over the quiver with the
/// framing vertex included. Unknowns: one block per vertex, `∞` last.
fn hom_system(m: &QuiverRep, n: &QuiverRep) -> (RationalMatrix, Vec<(usize, usize, usize)>) {
    let ell = m.ell();
    let mut blocks = Vec::new();
    let mut off = 0;
    for v in 0..ell {
        let (r, c) = (n.dims().main[v], m.dims().main[v]);
        blocks.push((off, r, c));
        off += r * c;
    }
    let (fr, fc) = (n.dims().framing, m.dims().framing);
    blocks.push((off, fr, fc));
    off += fr * fc;
    let unknowns = off;

    let mut eqs: Vec<Vec<(usize, Rational)>> = Vec::new();
    // f_{t} A - B f_{s} = 0 for an arrow s → t with maps A on M and B on N.
    let mut arrow = |s: usize, t: usize, a: &RationalMatrix, b: &RationalMatrix| {
        let (os, rs, cs) = blocks[s];
        let (ot, rt, ct) = blocks[t];
        for i in 0..rt {
            for j in 0..cs {
                let mut row = Vec::new();
                for k in 0..ct {
                    let x = a.get(k, j);
                    if !x.is_zero() {
                        row.push((ot + i * ct + k, x.clone()));
                    }
                }
                for k in 0..rs {
                    let y = b.get(i, k);
                    if !y.is_zero() {
                        row.push((os + k * cs + j, -y.clone()));
                    }
                }
                if !row.is_empty() {
                    eqs.push(row);
                }
            }
        }
    };
    for v in 0..ell {
        arrow(v, (v + 1) % ell, m.map(v), n.map(v));
    }
    let column = |r: &QuiverRep| {
        RationalMatrix::from_fn(r.dims().main[0], r.dims().framing, |i, _| {
            r.framing_vector()[i].clone()
        })
    };
    arrow(ell, 0, &column(m), &column(n));

    let mut sys = RationalMatrix::zeros(eqs.len(), unknowns);
    for (r, row) in eqs.into_iter().enumerate() {
        for (c, x) in row {
            let cur = sys.get(r, c).clone();
            sys.set(r, c, cur + x);
        }
    }
    (sys, blocks)
}

/// `dim Hom(M, N)` over the framed quiver (framing vertex included).
pub fn hom_dim(m: &QuiverRep, n: &QuiverRep) -> usize {
    assert_eq!(m.ell(), n.ell(), "representations of different ell");
    let (sys, _) = hom_system(m, n);
    sys.cols() - sys.rank()
}

/// `dim Hom` of the underlying cyclic-quiver representations.
pub fn hom_dim_unframed(m: &QuiverRep, n: &QuiverRep) -> usize {
    hom_dim(&m.unframed(), &n.unframed())
}

/// Whether a random element of `Hom(M, N)` is invertible at every vertex,
/// the framing vertex included. A `true` answer certifies `M ≅ N`.
pub fn find_isomorphism<R: Rng>(m: &QuiverRep, n: &QuiverRep, rng: &mut R, tries: usize) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    let (sys, blocks) = hom_system(m, n);
    let basis = sys.kernel();
    if basis.is_empty() {
        return m.dims().total() + m.dims().framing == 0;
    }
    (0..tries).any(|_| {
        let coeffs: Vec<Rational> = basis
            .iter()
            .map(|_| rat(rng.gen_range(-20i64..=20)))
            .collect();
        let f: Vec<Rational> = (0..sys.cols())
            .map(|c| {
                basis
                    .iter()
                    .zip(&coeffs)
                    .fold(Rational::zero(), |acc, (b, k)| acc + &b[c] * k)
            })
            .collect();
        blocks.iter().all(|&(off, r, c)| {
            r == 0
                || RationalMatrix::from_fn(r, c, |i, j| f[off + i * c + j].clone()).is_invertible()
        })
    })
}

/// The label `(λ; ν)` of `M ≅ M_λ ⊕ ⨁ U(i, ν^(i)_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    #[serde(rename = "lambda")]
    pub framed_part: Option<Partition>,
    #[serde(rename = "nu")]
    pub plain_parts: Multipartition,
}

impl Decomposition {
    pub fn label(&self) -> Option<OrbitLabel> {
        self.framed_part
            .clone()
            .map(|l| OrbitLabel::new(l, self.plain_parts.clone()))
    }

    /// Readable list of summands.
    pub fn summands(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(l) = &self.framed_part {
            out.push(format!("M_{l}"));
        }
        for (i, p) in self.plain_parts.components().iter().enumerate() {
            for n in p.parts() {
                out.push(format!("U({i},{n})"));
            }
        }
        out
    }
}

impl From<OrbitLabel> for Decomposition {
    fn from(l: OrbitLabel) -> Self {
        Decomposition {
            framed_part: Some(l.lambda),
            plain_parts: l.nu,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Achar–Henderson invariant and Ψ at ℓ = 1, candidate matching otherwise.
    #[default]
    Auto,
    /// Candidate matching for every ℓ.
    Candidates,
}

type Candidate = (OrbitLabel, Arc<QuiverRep>);
type CandidateMemo = HashMap<DimensionVector, HashMap<Multipartition, Arc<Vec<Candidate>>>>;

/// Decomposes framed representations; candidate lists are memoized per
/// dimension vector and cyclic type.
pub struct Decomposer {
    strategy: Strategy,
    exec: Exec,
    seed: u64,
    memo: Mutex<CandidateMemo>,
}

impl Default for Decomposer {
    fn default() -> Self {
        Decomposer::new(Strategy::Auto, Exec::default())
    }
}

/// Multiset of circles (start, length) of a cyclic type.
fn circles_of(nu: &Multipartition) -> BTreeMap<Circle, usize> {
    let mut out = BTreeMap::new();
    for (start, p) in nu.components().iter().enumerate() {
        for &len in p.parts() {
            *out.entry(Circle { start, len }).or_insert(0) += 1;
        }
    }
    out
}

/// Labels `(λ; ν)` with `M_λ ⊕ ⨁ U` of unframed type `plain`: some circles
/// get a mark at a position-0 vertex and become the hooks of `λ`.
pub fn labels_with_cyclic_type(plain: &Multipartition) -> Vec<OrbitLabel> {
    fn go(
        ell: usize,
        circles: &[Circle],
        marked: &mut Vec<(Circle, usize)>,
        rest: &mut Vec<Circle>,
        out: &mut BTreeSet<OrbitLabel>,
    ) {
        let Some((&c, tail)) = circles.split_first() else {
            if let Ok(cf) = FrobeniusCircleDiagram::from_marked(ell, marked) {
                let c = CircleDiagram::new(ell, rest.clone())
                    .expect("starts come from a multipartition");
                out.insert(label_of_diagrams(&cf, &c));
            }
            return;
        };
        rest.push(c);
        go(ell, tail, marked, rest, out);
        rest.pop();
        for mark in (0..c.len).filter(|m| (c.start + m) % ell == 0) {
            // Arms and legs of a Frobenius partition are distinct.
            if marked
                .iter()
                .any(|&(d, b)| b == mark || d.len - b == c.len - mark)
            {
                continue;
            }
            marked.push((c, mark));
            go(ell, tail, marked, rest, out);
            marked.pop();
        }
    }
    let circles: Vec<Circle> = circles_of(plain)
        .into_iter()
        .flat_map(|(c, k)| std::iter::repeat_n(c, k))
        .collect();
    let mut out = BTreeSet::new();
    go(
        plain.ell(),
        &circles,
        &mut Vec::new(),
        &mut Vec::new(),
        &mut out,
    );
    out.into_iter().collect()
}

impl Decomposer {
    pub fn new(strategy: Strategy, exec: Exec) -> Self {
        Decomposer {
            strategy,
            exec,
            seed: 0x5eed,
            memo: Mutex::new(HashMap::new()),
        }
    }

    fn candidates(&self, dims: &DimensionVector, plain: &Multipartition) -> Arc<Vec<Candidate>> {
        let cached = self
            .memo
            .lock()
            .expect("memo lock")
            .get(dims)
            .and_then(|m| m.get(plain))
            .cloned();
        if let Some(c) = cached {
            return c;
        }
        let labels: Vec<OrbitLabel> = labels_with_cyclic_type(plain)
            .into_iter()
            .filter(|l| &l.dimension() == dims)
            .collect();
        let built = Arc::new(
            self.exec
                .map(&labels, |l| (l.clone(), Arc::new(build_label(l)))),
        );
        self.memo
            .lock()
            .expect("memo lock")
            .entry(dims.clone())
            .or_default()
            .insert(plain.clone(), Arc::clone(&built));
        built
    }

    pub fn decompose(&self, m: &QuiverRep) -> Result<Decomposition, DecomposeError> {
        let plain = cyclic_multiplicities(&m.unframed())?;
        if !m.is_framed() {
            return Ok(Decomposition {
                framed_part: None,
                plain_parts: plain,
            });
        }
        if is_zero_vector(m.framing_vector()) {
            return Ok(Decomposition {
                framed_part: Some(Partition::empty()),
                plain_parts: plain,
            });
        }
        if m.ell() == 1 && self.strategy == Strategy::Auto {
            let b = ah_invariant(m.framing_vector(), m.map(0))?;
            let label = psi_label(&b.first, &b.second).expect("AH invariant is a bipartition");
            return Ok(label.into());
        }
        let candidates = self.candidates(m.dims(), &plain);
        let self_hom = hom_dim(m, m);
        let seed = self.seed;
        self.exec
            .find_first(&candidates, |(label, rep)| {
                if hom_dim(rep, rep) != self_hom {
                    return None;
                }
                if hom_dim(rep, m) != self_hom {
                    return None;
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                find_isomorphism(rep, m, &mut rng, 4).then(|| label.clone())
            })
            .map(Decomposition::from)
            .ok_or_else(|| DecomposeError::NoLabelMatched(m.dims().clone()))
    }
}

/// [`Decomposer::decompose`] with a fresh default decomposer.
pub fn decompose_enhanced(m: &QuiverRep) -> Result<Decomposition, DecomposeError> {
    Decomposer::default().decompose(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partitions::enumerate_bipartitions;
    use crate::rep_builder::{build_ah, build_m, build_u, direct_sum, random_invertible};

    fn jordan(blocks: &[usize]) -> RationalMatrix {
        let n: usize = blocks.iter().sum();
        let mut x = RationalMatrix::zeros(n, n);
        let mut off = 0;
        for &b in blocks {
            for k in 1..b {
                x.set(off + k - 1, off + k, rat(1));
            }
            off += b;
        }
        x
    }

    #[test]
    fn jordan_type_examples() {
        assert_eq!(jordan_type(&jordan(&[3, 1])).unwrap(), part![3, 1]);
        assert_eq!(
            jordan_type(&RationalMatrix::zeros(4, 4)).unwrap(),
            part![1, 1, 1, 1]
        );
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = random_invertible(6, &mut rng);
        let x = g.mul(&jordan(&[4, 2])).mul(&g.inverse().unwrap());
        assert_eq!(jordan_type(&x).unwrap(), part![4, 2]);
        assert_eq!(
            jordan_type(&RationalMatrix::identity(2)),
            Err(DecomposeError::NotNilpotent)
        );
    }

    #[test]
    fn centralizer_dimensions() {
        assert_eq!(centralizer_basis(&jordan(&[5])).unwrap().len(), 5);
        assert_eq!(
            centralizer_basis(&RationalMatrix::zeros(3, 3))
                .unwrap()
                .len(),
            9
        );
        assert_eq!(centralizer_basis(&jordan(&[2, 1])).unwrap().len(), 5);
    }

    #[test]
    fn ah_invariant_examples() {
        let zero = vec![rat(0); 3];
        assert_eq!(
            ah_invariant(&zero, &jordan(&[3])).unwrap(),
            Bipartition::new(part![], part![3])
        );
        let mut v = vec![rat(0); 6];
        v[1] = rat(1);
        v[5] = rat(1);
        assert_eq!(
            ah_invariant(&v, &jordan(&[5, 1])).unwrap(),
            Bipartition::new(part![2, 1], part![3])
        );
    }

    #[test]
    fn ah_invariant_inverts_build_ah() {
        for n in 0..=6 {
            for b in enumerate_bipartitions(n).unwrap() {
                let r = build_ah(&b.first, &b.second);
                assert_eq!(ah_invariant(r.framing_vector(), r.map(0)).unwrap(), b);
            }
        }
    }

    #[test]
    fn jordan_chains_give_the_jordan_type() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_invertible(7, &mut rng);
        let x = g.mul(&jordan(&[3, 3, 1])).mul(&g.inverse().unwrap());
        let chains = jordan_chains(&x).unwrap();
        assert_eq!(
            chains.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![3, 3, 1]
        );
        for c in &chains {
            assert!(is_zero_vector(&x.apply(&c[0])));
            for w in c.windows(2) {
                assert_eq!(x.apply(&w[1]), w[0]);
            }
        }
    }

    #[test]
    fn orbit_span_matches_the_centralizer() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for blocks in [vec![4, 2, 1], vec![3, 3], vec![2, 2, 1, 1]] {
            let n: usize = blocks.iter().sum();
            let g = random_invertible(n, &mut rng);
            let x = g.mul(&jordan(&blocks)).mul(&g.inverse().unwrap());
            for _ in 0..4 {
                let v: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-1i64..=1))).collect();
                let orbit: Vec<_> = centralizer_basis(&x)
                    .unwrap()
                    .iter()
                    .map(|c| c.apply(&v))
                    .collect();
                let w = span_basis(&orbit, n);
                let (sub, quo) = restrict_and_quotient(&x, &w);
                let slow = Bipartition::new(jordan_type(&sub).unwrap(), jordan_type(&quo).unwrap());
                assert_eq!(ah_invariant(&v, &x).unwrap(), slow, "{blocks:?} {v:?}");
            }
        }
    }

    #[test]
    fn multiplicities_of_sums() {
        let u = build_u(1, 3, 2);
        assert_eq!(
            cyclic_multiplicities(&u).unwrap(),
            Multipartition::new(vec![part![], part![3]])
        );
        let s = direct_sum(&build_u(0, 2, 2), &build_u(1, 1, 2)).unwrap();
        assert_eq!(
            cyclic_multiplicities(&s).unwrap(),
            Multipartition::new(vec![part![2], part![1]])
        );
    }

    #[test]
    fn hom_dims() {
        assert_eq!(hom_dim(&build_u(0, 1, 1), &build_u(0, 1, 1)), 1);
        assert_eq!(hom_dim(&build_u(0, 2, 1), &build_u(0, 1, 1)), 1);
        let m = build_u(1, 3, 3);
        let mm = direct_sum(&m, &m).unwrap();
        assert_eq!(hom_dim(&m, &mm), 2 * hom_dim(&m, &m));
    }

    #[test]
    fn decompose_sum_with_plain_part() {
        let r = direct_sum(&build_m(&part![4, 2], 1), &build_u(0, 3, 1)).unwrap();
        let d = Decomposer::new(Strategy::Candidates, Exec::Sequential)
            .decompose(&r)
            .unwrap();
        assert_eq!(d.framed_part, Some(part![4, 2]));
        assert_eq!(d.plain_parts, Multipartition::new(vec![part![3]]));
        assert_eq!(decompose_enhanced(&r).unwrap(), d);
    }

    #[test]
    fn decompose_zero_framing() {
        let r = crate::rep_builder::build_label(&OrbitLabel::new(
            part![],
            Multipartition::new(vec![part![3]]),
        ));
        let d = decompose_enhanced(&r).unwrap();
        assert_eq!(d.framed_part, Some(part![]));
        assert_eq!(d.plain_parts, Multipartition::new(vec![part![3]]));
    }

    #[test]
    fn cyclic_type_candidates_contain_the_label() {
        use crate::residues::enumerate_q;
        for (n, ell) in [(3, 1), (2, 2), (2, 3)] {
            for label in enumerate_q(n, ell, Exec::Sequential) {
                let plain = cyclic_multiplicities(&build_label(&label).unframed()).unwrap();
                let found = labels_with_cyclic_type(&plain);
                assert!(found.contains(&label), "{label}");
                for other in &found {
                    let p = cyclic_multiplicities(&build_label(other).unframed()).unwrap();
                    assert_eq!(p, plain);
                }
            }
        }
    }
}
