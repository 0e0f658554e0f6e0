//! Translations between orbit labels: the Achar–Henderson bipartitions and the
//! map Ψ at ℓ = 1, Johnson's striped ℓ-bipartitions and Ψ_ℓ, and the
//! diagram/label correspondence.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circle_diagrams::{
    diagram_of_coloured_partition, frobenius_diagram_of_partition, partition_of_frobenius_diagram,
    Circle, CircleDiagram, DiagramError, FrobeniusCircleDiagram,
};
use crate::exec::Exec;
use crate::partitions::{
    enumerate_bipartitions, partitions, Bipartition, FrobeniusPartition, Multipartition, Partition,
    PartitionError,
};
use crate::residues::{DimensionVector, OrbitLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitMapError {
    #[error("({eta}; {zeta}) has no preimage under Ψ")]
    NoPreimage { eta: Partition, zeta: Partition },
    #[error("row {row}: {reason}")]
    NotStriped { row: usize, reason: String },
    #[error("lambda, epsilon and nu have lengths {lambda}, {epsilon}, {nu}")]
    LengthMismatch {
        lambda: usize,
        epsilon: usize,
        nu: usize,
    },
    #[error("label has {got} components, expected ell = {ell}")]
    WrongEll { got: usize, ell: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// An ℓ-coloured partition `(λ, ε)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColouredPartition {
    pub lambda: Partition,
    pub epsilon: Vec<usize>,
}

impl ColouredPartition {
    pub fn new(lambda: Partition, epsilon: Vec<usize>, ell: usize) -> Result<Self, OrbitMapError> {
        if epsilon.len() != lambda.len() {
            return Err(OrbitMapError::LengthMismatch {
                lambda: lambda.len(),
                epsilon: epsilon.len(),
                nu: epsilon.len(),
            });
        }
        if let Some(row) = epsilon.iter().position(|&e| e >= ell) {
            return Err(OrbitMapError::NotStriped {
                row: row + 1,
                reason: format!("colour {} is not below ell = {ell}", epsilon[row]),
            });
        }
        Ok(ColouredPartition { lambda, epsilon })
    }

    /// Colour `ε_i + [λ_i − j]` of box `(i, j)`, 1-based.
    pub fn colour(&self, i: usize, j: usize, ell: usize) -> usize {
        (self.epsilon[i - 1] + self.lambda.part(i - 1) - j) % ell
    }

    pub fn diagram(&self, ell: usize) -> CircleDiagram {
        diagram_of_coloured_partition(&self.lambda, &self.epsilon, ell)
            .expect("validated on construction")
    }
}

/// Box count by colour. Equals the dimension vector of the coloured Jordan type.
pub fn signature(cp: &ColouredPartition, ell: usize) -> DimensionVector {
    let mut d = DimensionVector::zero(ell);
    for (i, &len) in cp.lambda.parts().iter().enumerate() {
        for j in 1..=len {
            d.main[cp.colour(i + 1, j, ell)] += 1;
        }
    }
    d
}

fn padded(p: &Partition, k: usize) -> Vec<usize> {
    (0..k).map(|i| p.part(i)).collect()
}

/// Row-wise sum `μ + ν`, padded to a common length.
fn row_sum(mu: &Partition, nu: &Partition) -> Vec<usize> {
    let k = mu.len().max(nu.len());
    (0..k).map(|i| mu.part(i) + nu.part(i)).collect()
}

/// Removable rows (1-based) of a bipartition `(μ; ν)`.
///
/// Rows are removed one at a time, re-testing (a) `μ_i = μ_{i+1}`,
/// (b) `ν_{i-1} = ν_i`, (c) `i = k, μ_k = 0` on what is left after each removal.
pub fn removable_rows(mu: &Partition, nu: &Partition) -> BTreeSet<usize> {
    let k = row_sum(mu, nu).len();
    let mut rows: Vec<(usize, usize, usize)> =
        (0..k).map(|i| (i + 1, mu.part(i), nu.part(i))).collect();
    let mut removed = BTreeSet::new();
    loop {
        let hit = (0..rows.len()).find(|&i| {
            let next_mu = rows.get(i + 1).map_or(0, |r| r.1);
            rows[i].1 == next_mu || (i >= 1 && rows[i - 1].2 == rows[i].2)
        });
        match hit {
            Some(i) => {
                removed.insert(rows.remove(i).0);
            }
            None => return removed,
        }
    }
}

/// Ψ: `(μ; ν) ↦ (η, ζ)` with `ζ` the removable rows of `μ + ν` and `η` the
/// Frobenius partition `(μ̂ − 1, ν̂)` of the remaining rows.
pub fn psi(mu: &Partition, nu: &Partition) -> Result<(Partition, Partition), OrbitMapError> {
    let lambda = row_sum(mu, nu);
    let re = removable_rows(mu, nu);
    let k = lambda.len();
    let (m, n) = (padded(mu, k), padded(nu, k));
    let zeta = Partition::new(re.iter().map(|&i| lambda[i - 1]).collect())?;
    let keep: Vec<usize> = (1..=k).filter(|i| !re.contains(i)).collect();
    let legs = keep.iter().map(|&i| m[i - 1] - 1).collect();
    let arms = keep.iter().map(|&i| n[i - 1]).collect();
    let eta = FrobeniusPartition::new(legs, arms)
        .expect("remaining rows of Ψ form a Frobenius partition")
        .to_partition();
    debug_assert_eq!(eta.size() + zeta.size(), mu.size() + nu.size());
    Ok((eta, zeta))
}

/// Ψ as an ℓ = 1 orbit label `(η; (ζ))`.
pub fn psi_label(mu: &Partition, nu: &Partition) -> Result<OrbitLabel, OrbitMapError> {
    let (eta, zeta) = psi(mu, nu)?;
    Ok(OrbitLabel::new(eta, Multipartition::new(vec![zeta])))
}

/// Inverse of Ψ by search over the bipartitions of `|η| + |ζ|`.
pub fn psi_inverse(eta: &Partition, zeta: &Partition) -> Result<Bipartition, OrbitMapError> {
    let n = eta.size() + zeta.size();
    enumerate_bipartitions(n)?
        .into_iter()
        .find(|b| psi(&b.first, &b.second).is_ok_and(|(e, z)| &e == eta && &z == zeta))
        .ok_or_else(|| OrbitMapError::NoPreimage {
            eta: eta.clone(),
            zeta: zeta.clone(),
        })
}

/// Johnson's label `(λ, ε, ν)`. `nu[i]` is the marking function: the framing
/// vector has component `v_{i, nu_i}` in row `i` (zero when `nu_i ≤ 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StripedBipartition {
    pub lambda: Partition,
    pub epsilon: Vec<usize>,
    pub nu: Vec<i64>,
}

impl StripedBipartition {
    /// Validates the marking constraint and the three striped conditions.
    pub fn new(
        lambda: Partition,
        epsilon: Vec<usize>,
        nu: Vec<i64>,
        ell: usize,
    ) -> Result<Self, OrbitMapError> {
        let s = StripedBipartition {
            lambda,
            epsilon,
            nu,
        };
        s.validate(ell)?;
        Ok(s)
    }

    pub fn validate(&self, ell: usize) -> Result<(), OrbitMapError> {
        let k = self.lambda.len();
        if self.epsilon.len() != k || self.nu.len() != k {
            return Err(OrbitMapError::LengthMismatch {
                lambda: k,
                epsilon: self.epsilon.len(),
                nu: self.nu.len(),
            });
        }
        let l = ell as i64;
        let fail = |row: usize, reason: String| {
            Err(OrbitMapError::NotStriped {
                row: row + 1,
                reason,
            })
        };
        let mu = self.mu();
        for i in 0..k {
            if self.epsilon[i] >= ell {
                return fail(
                    i,
                    format!("colour {} is not below ell = {ell}", self.epsilon[i]),
                );
            }
            if mu[i] < 0 {
                return fail(i, format!("mark {} exceeds the row length", self.nu[i]));
            }
            if (self.epsilon[i] as i64 + mu[i]).rem_euclid(l) != 0 {
                return fail(i, "marked box is not in colour 0".into());
            }
            if self.nu[i] <= -l {
                return fail(i, format!("mark {} is not above -ell", self.nu[i]));
            }
            for j in i + 1..k {
                if self.nu[j] >= self.nu[i] + l || mu[j] >= mu[i] + l {
                    return fail(
                        j,
                        format!("marks of rows {} and {} are not striped", i + 1, j + 1),
                    );
                }
            }
        }
        Ok(())
    }

    /// `μ_i = λ_i − ν_i`: how far below the top of row `i` the mark sits.
    pub fn mu(&self) -> Vec<i64> {
        self.lambda
            .parts()
            .iter()
            .zip(&self.nu)
            .map(|(&l, &n)| l as i64 - n)
            .collect()
    }

    pub fn coloured(&self) -> ColouredPartition {
        ColouredPartition {
            lambda: self.lambda.clone(),
            epsilon: self.epsilon.clone(),
        }
    }

    pub fn signature(&self, ell: usize) -> DimensionVector {
        signature(&self.coloured(), ell)
    }

    /// The ℓ = 1 bipartition with the same normal form: `(max(ν, 0); λ − max(ν, 0))`.
    pub fn to_bipartition(&self) -> Bipartition {
        let pos: Vec<usize> = self.nu.iter().map(|&n| n.max(0) as usize).collect();
        let rest = self
            .lambda
            .parts()
            .iter()
            .zip(&pos)
            .map(|(l, p)| l - p)
            .collect();
        Bipartition::new(
            Partition::from_unsorted(pos),
            Partition::from_unsorted(rest),
        )
    }

    /// The striped bipartition at ℓ = 1 with `ν = μ` (the positions of the marks).
    pub fn from_bipartition(b: &Bipartition) -> Result<Self, OrbitMapError> {
        let lambda = Partition::new(row_sum(&b.first, &b.second))?;
        let nu = (0..lambda.len()).map(|i| b.first.part(i) as i64).collect();
        StripedBipartition::new(lambda.clone(), vec![0; lambda.len()], nu, 1)
    }
}

/// Removable rows (1-based) of a striped bipartition:
/// (a) `ν_i ≤ 0`; (b) a later row with `ν_j ≥ ν_i` and different `(λ, ε)`;
/// (c) an earlier row with `μ_j ≤ μ_i`.
pub fn removable_rows_cyclic(s: &StripedBipartition) -> BTreeSet<usize> {
    let k = s.lambda.len();
    let mu = s.mu();
    let row = |i: usize| (s.lambda.part(i), s.epsilon[i]);
    (0..k)
        .filter(|&i| {
            s.nu[i] <= 0
                || (i + 1..k).any(|j| s.nu[j] >= s.nu[i] && row(i) != row(j))
                || (0..i).any(|j| mu[j] <= mu[i])
        })
        .map(|i| i + 1)
        .collect()
}

/// Ψ_ℓ: removable rows become plain circles `C(λ̂, ε̂)`, every other row a
/// circle of length `λ_i` starting at `ε_i` and marked `μ_i` steps in.
pub fn psi_ell(
    s: &StripedBipartition,
    ell: usize,
) -> Result<(FrobeniusCircleDiagram, CircleDiagram), OrbitMapError> {
    s.validate(ell)?;
    let re = removable_rows_cyclic(s);
    let mu = s.mu();
    let mut plain = Vec::new();
    let mut marked = Vec::new();
    for (i, &depth) in mu.iter().enumerate() {
        let circle = Circle {
            start: s.epsilon[i],
            len: s.lambda.part(i),
        };
        if re.contains(&(i + 1)) {
            plain.push(circle);
        } else {
            marked.push((circle, depth as usize));
        }
    }
    Ok((
        FrobeniusCircleDiagram::from_marked(ell, &marked)?,
        CircleDiagram::new(ell, plain)?,
    ))
}

/// `(λ; ν)` with `λ` read off the marked circles and `ν^(i)` the lengths of the
/// plain circles starting at `i`.
pub fn label_of_diagrams(cf: &FrobeniusCircleDiagram, c: &CircleDiagram) -> OrbitLabel {
    assert_eq!(cf.ell(), c.ell(), "diagrams of different ell");
    let mut rows = vec![Vec::new(); c.ell()];
    for circle in c.circles() {
        rows[circle.start].push(circle.len);
    }
    let nu = rows.into_iter().map(Partition::from_unsorted).collect();
    OrbitLabel::new(partition_of_frobenius_diagram(cf), Multipartition::new(nu))
}

pub fn diagrams_of_label(label: &OrbitLabel) -> (FrobeniusCircleDiagram, CircleDiagram) {
    let ell = label.ell();
    let circles = label
        .nu
        .components()
        .iter()
        .enumerate()
        .flat_map(|(start, p)| p.parts().iter().map(move |&len| Circle { start, len }))
        .collect();
    (
        frobenius_diagram_of_partition(&label.lambda, ell),
        CircleDiagram::new(ell, circles).expect("starts are below ell"),
    )
}

/// Ψ_ℓ followed by the diagram reading.
pub fn striped_to_label(s: &StripedBipartition, ell: usize) -> Result<OrbitLabel, OrbitMapError> {
    let (cf, c) = psi_ell(s, ell)?;
    Ok(label_of_diagrams(&cf, &c))
}

/// Inverse of [`striped_to_label`] by search over the striped bipartitions of
/// the label's dimension.
pub fn label_to_striped(label: &OrbitLabel) -> Result<StripedBipartition, OrbitMapError> {
    let ell = label.ell();
    let d = label.dimension();
    let (cf, c) = diagrams_of_label(label);
    enumerate_striped(ell, &DimensionVector { framing: 0, ..d }, Exec::Sequential)
        .into_iter()
        .find(|s| psi_ell(s, ell).is_ok_and(|(f, p)| f == cf && p == c))
        .ok_or_else(|| OrbitMapError::NoPreimage {
            eta: label.lambda.clone(),
            zeta: Partition::from_unsorted(
                label
                    .nu
                    .components()
                    .iter()
                    .flat_map(|p| p.parts().to_vec())
                    .collect(),
            ),
        })
}

/// Colourings of `λ` with signature `xi`, colours weakly increasing along rows
/// of equal length (reordering such rows gives an isomorphic representation).
fn colourings(lambda: &Partition, xi: &DimensionVector) -> Vec<Vec<usize>> {
    fn go(
        lambda: &Partition,
        ell: usize,
        i: usize,
        rest: &mut Vec<usize>,
        eps: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == lambda.len() {
            if rest.iter().all(|&r| r == 0) {
                out.push(eps.clone());
            }
            return;
        }
        let len = lambda.part(i);
        let from = if i > 0 && lambda.part(i - 1) == len {
            eps[i - 1]
        } else {
            0
        };
        for e in from..ell {
            let colours: Vec<usize> = (0..len).map(|t| (e + t) % ell).collect();
            if fits(&colours, rest) {
                colours.iter().for_each(|&c| rest[c] -= 1);
                eps.push(e);
                go(lambda, ell, i + 1, rest, eps, out);
                eps.pop();
                colours.iter().for_each(|&c| rest[c] += 1);
            }
        }
    }
    fn fits(colours: &[usize], rest: &[usize]) -> bool {
        let mut need = vec![0; rest.len()];
        colours.iter().for_each(|&c| need[c] += 1);
        need.iter().zip(rest).all(|(n, r)| n <= r)
    }
    let mut out = Vec::new();
    go(
        lambda,
        xi.ell(),
        0,
        &mut xi.main.clone(),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Marking functions making `(λ, ε, ν)` striped.
fn markings(lambda: &Partition, eps: &[usize], ell: usize) -> Vec<Vec<i64>> {
    let l = ell as i64;
    let choices: Vec<Vec<i64>> = (0..lambda.len())
        .map(|i| {
            let len = lambda.part(i) as i64;
            (1 - l..=len)
                .filter(|&n| (eps[i] as i64 + len - n).rem_euclid(l) == 0)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut nu = Vec::with_capacity(lambda.len());
    fn go(
        lambda: &Partition,
        l: i64,
        choices: &[Vec<i64>],
        nu: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        let j = nu.len();
        if j == choices.len() {
            out.push(nu.clone());
            return;
        }
        let mu_j = |n: i64| lambda.part(j) as i64 - n;
        for &n in &choices[j] {
            let ok = (0..j).all(|i| n < nu[i] + l && mu_j(n) < lambda.part(i) as i64 - nu[i] + l);
            if ok {
                nu.push(n);
                go(lambda, l, choices, nu, out);
                nu.pop();
            }
        }
    }
    go(lambda, l, &choices, &mut nu, &mut out);
    out
}

/// All striped ℓ-bipartitions of signature `xi`, rows of equal length in
/// weakly increasing colour.
pub fn enumerate_striped(ell: usize, xi: &DimensionVector, exec: Exec) -> Vec<StripedBipartition> {
    assert_eq!(xi.ell(), ell, "signature has the wrong length");
    let shapes = partitions(xi.total());
    exec.map(&shapes, |lambda| {
        let mut found = Vec::new();
        for eps in colourings(lambda, xi) {
            for nu in markings(lambda, &eps, ell) {
                found.push(StripedBipartition {
                    lambda: lambda.clone(),
                    epsilon: eps.clone(),
                    nu,
                });
            }
        }
        found
    })
    .into_iter()
    .flatten()
    .collect()
}
