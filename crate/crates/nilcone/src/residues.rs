//! Root-lattice arithmetic for the cyclic quiver: residues, dimension vectors,
//! the label set Q(n, ℓ) and ℓ-cores/quotients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exec::Exec;
use crate::partitions::{partitions, Multipartition, Partition};

/// Dimension vector of a framed cyclic-quiver representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimensionVector {
    pub framing: usize,
    pub main: Vec<usize>,
}

impl DimensionVector {
    pub fn zero(ell: usize) -> Self {
        assert!(ell >= 1, "ell must be positive");
        DimensionVector {
            framing: 0,
            main: vec![0; ell],
        }
    }

    /// `n·δ` with the given framing dimension.
    pub fn multiple_of_delta(n: usize, ell: usize, framing: usize) -> Self {
        DimensionVector {
            framing,
            main: vec![n; ell],
        }
    }

    pub fn ell(&self) -> usize {
        self.main.len()
    }

    /// Total dimension of the cyclic part.
    pub fn total(&self) -> usize {
        self.main.iter().sum()
    }

    /// Cyclic shift `σ^i`, moving coordinate `j` to `j + i`.
    pub fn shifted(&self, i: usize) -> Self {
        let ell = self.ell();
        let mut main = vec![0; ell];
        for (j, &d) in self.main.iter().enumerate() {
            main[(j + i) % ell] = d;
        }
        DimensionVector {
            framing: self.framing,
            main,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.ell(),
            other.ell(),
            "dimension vectors of different ell"
        );
        DimensionVector {
            framing: self.framing + other.framing,
            main: self
                .main
                .iter()
                .zip(&other.main)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise `self ≤ other`, framing included.
    pub fn fits_in(&self, other: &Self) -> bool {
        self.framing <= other.framing
            && self.ell() == other.ell()
            && self.main.iter().zip(&other.main).all(|(a, b)| a <= b)
    }

    /// Componentwise difference, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if !other.fits_in(self) {
            return None;
        }
        Some(DimensionVector {
            framing: self.framing - other.framing,
            main: self
                .main
                .iter()
                .zip(&other.main)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let main: Vec<String> = self.main.iter().map(|d| d.to_string()).collect();
        write!(f, "({}; {})", self.framing, main.join(","))
    }
}

/// Count of boxes of `λ` in each content class mod ℓ.
pub fn residue(lambda: &Partition, ell: usize) -> DimensionVector {
    let mut d = DimensionVector::zero(ell);
    for c in lambda.contents() {
        d.main[c.rem_euclid(ell as i64) as usize] += 1;
    }
    d
}

/// `Σ_i σ^i res_ℓ(ν^(i))`.
pub fn shifted_residue(nu: &Multipartition) -> DimensionVector {
    let ell = nu.ell();
    nu.components()
        .iter()
        .enumerate()
        .fold(DimensionVector::zero(ell), |acc, (i, p)| {
            acc.add(&row_residue(p, ell).shifted(i))
        })
}

/// `Σ_j res_ℓ((p_j))`: each row counted as a one-row partition, so that
/// `σ^i` of it is the dimension of `⊕_j U(i, p_j)`.
pub fn row_residue(p: &Partition, ell: usize) -> DimensionVector {
    p.parts()
        .iter()
        .fold(DimensionVector::zero(ell), |acc, &n| {
            acc.add(&dim_u(0, n, ell))
        })
}

/// Dimension vector of the string module `U(i, N)`.
pub fn dim_u(start: usize, len: usize, ell: usize) -> DimensionVector {
    let mut d = DimensionVector::zero(ell);
    for k in 0..len {
        d.main[(start + k) % ell] += 1;
    }
    d
}

/// Residue of the framed summand `M_λ`: boxes counted by negated content,
/// which is `res_ℓ(λ^t)`.
///
/// `M_λ` restricts to `⊕ U(-b_i, p_i)`, whose i-th chain covers the positions
/// `-b_i ..= a_i`, the contents of the i-th hook with the sign reversed.
pub fn framed_residue(lambda: &Partition, ell: usize) -> DimensionVector {
    let mut d = DimensionVector::zero(ell);
    for c in lambda.contents() {
        d.main[(-c).rem_euclid(ell as i64) as usize] += 1;
    }
    d
}

/// Dimension vector `(1; res_ℓ(λ^t))` of the framed indecomposable `M_λ`.
pub fn dim_m(lambda: &Partition, ell: usize) -> DimensionVector {
    DimensionVector {
        framing: 1,
        ..framed_residue(lambda, ell)
    }
}

/// Whether `U(i, N)` passes through vertex 0 at most `x` times.
pub fn in_u_set(start: usize, len: usize, ell: usize, x: usize) -> bool {
    dim_u(start, len, ell).main[0] <= x
}

/// An orbit label `(λ; ν)`: a framed partition plus an ℓ-multipartition of plain summands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub lambda: Partition,
    pub nu: Multipartition,
}

impl OrbitLabel {
    pub fn new(lambda: Partition, nu: Multipartition) -> Self {
        OrbitLabel { lambda, nu }
    }

    pub fn ell(&self) -> usize {
        self.nu.ell()
    }

    /// `(1; res(λ^t) + sres(ν))`.
    pub fn dimension(&self) -> DimensionVector {
        dim_m(&self.lambda, self.ell()).add(&shifted_residue(&self.nu))
    }

    /// Whether the residue equation places this label in `Q(n, ℓ)`.
    pub fn is_in_q(&self, n: usize) -> bool {
        self.dimension() == DimensionVector::multiple_of_delta(n, self.ell(), 1)
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ell() == 1 {
            write!(f, "({};{})", self.lambda, self.nu.component(0))
        } else {
            write!(f, "({};{})", self.lambda, self.nu)
        }
    }
}

/// Partitions of every size up to `max`, indexed by size.
pub(crate) fn partitions_up_to(max: usize) -> Vec<Vec<Partition>> {
    (0..=max).map(partitions).collect()
}

/// All multipartitions `ν` with `sres_ℓ(ν) = target` (framing of `target` is ignored).
pub fn multipartitions_with_shifted_residue(target: &DimensionVector) -> Vec<Multipartition> {
    let table = partitions_up_to(target.total());
    let mut out = Vec::new();
    fill_deficit(&table, target.main.clone(), 0, &mut Vec::new(), &mut out);
    out
}

fn fill_deficit(
    table: &[Vec<Partition>],
    deficit: Vec<usize>,
    comp: usize,
    prefix: &mut Vec<Partition>,
    out: &mut Vec<Multipartition>,
) {
    let ell = deficit.len();
    if comp == ell {
        if deficit.iter().all(|&d| d == 0) {
            out.push(Multipartition::new(prefix.clone()));
        }
        return;
    }
    let budget: usize = deficit.iter().sum();
    for size in (0..=budget).rev() {
        for p in &table[size] {
            let r = row_residue(p, ell).shifted(comp);
            let Some(rest) = sub_main(&deficit, &r.main) else {
                continue;
            };
            prefix.push(p.clone());
            fill_deficit(table, rest, comp + 1, prefix, out);
            prefix.pop();
        }
    }
}

fn sub_main(a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

/// All labels `(λ; ν)` whose total dimension is `target`, which must have framing 1.
pub fn labels_with_dimension(target: &DimensionVector, exec: Exec) -> Vec<OrbitLabel> {
    assert_eq!(target.framing, 1, "labels carry exactly one framed summand");
    let ell = target.ell();
    let lambdas: Vec<Partition> = (0..=target.total())
        .rev()
        .flat_map(partitions)
        .filter(|l| {
            framed_residue(l, ell)
                .main
                .iter()
                .zip(&target.main)
                .all(|(a, b)| a <= b)
        })
        .collect();
    let per_lambda = exec.map(&lambdas, |lambda| {
        let deficit = DimensionVector {
            framing: 0,
            main: sub_main(&target.main, &framed_residue(lambda, ell).main)
                .expect("filtered above"),
        };
        multipartitions_with_shifted_residue(&deficit)
            .into_iter()
            .map(|nu| OrbitLabel::new(lambda.clone(), nu))
            .collect::<Vec<_>>()
    });
    per_lambda.into_iter().flatten().collect()
}

/// The label set `Q(n, ℓ)`.
pub fn enumerate_q(n: usize, ell: usize, exec: Exec) -> Vec<OrbitLabel> {
    labels_with_dimension(&DimensionVector::multiple_of_delta(n, ell, 1), exec)
}

/// ℓ-core and ℓ-quotient via beta-numbers on an abacus with ℓ runners.
///
/// The number of beads is rounded up to a multiple of ℓ, so runner `j` always
/// holds the beads congruent to `j` and feeds quotient component `j`.
pub fn ell_quotient_core(lambda: &Partition, ell: usize) -> (Partition, Multipartition) {
    assert!(ell >= 1, "ell must be positive");
    let beads = lambda.len().div_ceil(ell) * ell;
    let betas: Vec<usize> = (0..beads).map(|i| lambda.part(i) + beads - 1 - i).collect();
    let mut runners: Vec<Vec<usize>> = vec![Vec::new(); ell];
    for &b in &betas {
        runners[b % ell].push(b / ell);
    }
    let mut quotient = Vec::with_capacity(ell);
    let mut core_betas = Vec::with_capacity(beads);
    for (j, positions) in runners.iter_mut().enumerate() {
        positions.sort_unstable();
        let parts = positions
            .iter()
            .enumerate()
            .map(|(below, &pos)| pos - below)
            .collect();
        quotient.push(Partition::from_unsorted(parts));
        core_betas.extend((0..positions.len()).map(|pos| pos * ell + j));
    }
    (
        partition_from_betas(core_betas),
        Multipartition::new(quotient),
    )
}

/// Inverse of [`ell_quotient_core`].
pub fn from_core_quotient(core: &Partition, quotient: &Multipartition) -> Partition {
    let ell = quotient.ell();
    // every runner then carries at least |quotient| beads
    let beads = (core.len() + ell * quotient.size()).div_ceil(ell).max(1) * ell;
    let betas: Vec<usize> = (0..beads).map(|i| core.part(i) + beads - 1 - i).collect();
    let mut runners: Vec<Vec<usize>> = vec![Vec::new(); ell];
    for &b in &betas {
        runners[b % ell].push(b / ell);
    }
    let mut out = Vec::with_capacity(beads);
    for (j, positions) in runners.iter_mut().enumerate() {
        positions.sort_unstable();
        let c = positions.len();
        let q = quotient.component(j);
        // the t-th highest bead moves up by the t-th part of the quotient
        for (t, &pos) in positions.iter().rev().enumerate() {
            out.push((pos + q.part(t)) * ell + j);
        }
        debug_assert!(q.len() <= c, "not enough beads on runner {j}");
    }
    partition_from_betas(out)
}

fn partition_from_betas(mut betas: Vec<usize>) -> Partition {
    betas.sort_unstable_by(|a, b| b.cmp(a));
    let r = betas.len();
    Partition::from_unsorted(
        betas
            .iter()
            .enumerate()
            .map(|(i, &b)| b + i + 1 - r)
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn mp(v: Vec<Partition>) -> Multipartition {
        Multipartition::new(v)
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(&part![2, 1], 2).main, vec![1, 2]);
        assert_eq!(residue(&part![7, 5, 3, 2, 1], 1).main, vec![18]);
        assert_eq!(residue(&part![], 3).main, vec![0, 0, 0]);
        assert_eq!(residue(&part![6, 4, 4, 2], 4).main, vec![4, 5, 4, 3]);
    }

    #[test]
    fn shifted_residue_examples() {
        assert_eq!(
            shifted_residue(&mp(vec![part![1], part![]])).main,
            vec![1, 0]
        );
        assert_eq!(
            shifted_residue(&mp(vec![part![], part![1]])).main,
            vec![0, 1]
        );
        assert_eq!(
            shifted_residue(&mp(vec![part![2], part![1]])).main,
            vec![1, 2]
        );
        assert_eq!(
            shifted_residue(&mp(vec![part![1, 1], part![]])).main,
            vec![2, 0]
        );
    }

    #[test]
    fn dim_u_examples() {
        for ell in 1..6 {
            assert_eq!(dim_u(0, ell, ell).main, vec![1; ell]);
        }
        assert_eq!(dim_u(2, 10, 4).main, vec![2, 2, 3, 3]);
        assert_eq!(dim_u(0, 1, 3).main, vec![1, 0, 0]);
    }

    #[test]
    fn dim_m_examples() {
        assert_eq!(dim_m(&part![1], 2).to_string(), "(1; 1,0)");
        assert_eq!(dim_m(&part![7, 5, 3, 2, 1], 1).to_string(), "(1; 18)");
        assert_eq!(dim_m(&part![2, 1], 2).to_string(), "(1; 1,2)");
        assert_eq!(dim_m(&part![6, 4, 4, 2], 4).main, vec![4, 3, 4, 5]);
        for lambda in partitions(8) {
            assert_eq!(framed_residue(&lambda, 3), residue(&lambda.transpose(), 3));
        }
    }

    #[test]
    fn u_set_examples() {
        assert!(in_u_set(2, 10, 4, 2));
        assert!(!in_u_set(2, 10, 4, 1));
        assert!(in_u_set(0, 1, 5, 1));
        for ell in 1..5 {
            for x in 1..4 {
                assert!(!in_u_set(0, ell * x + 1, ell, x));
            }
        }
    }

    #[test]
    fn q_small_cases() {
        let q = enumerate_q(1, 1, Exec::Sequential);
        assert_eq!(q.len(), 2);
        assert_eq!(q[0], OrbitLabel::new(part![1], mp(vec![part![]])));
        assert_eq!(q[1], OrbitLabel::new(part![], mp(vec![part![1]])));
        assert_eq!(enumerate_q(3, 1, Exec::Sequential).len(), 10);
        assert_eq!(enumerate_q(0, 2, Exec::Sequential).len(), 1);
        for label in enumerate_q(1, 2, Exec::Sequential) {
            assert!(label.is_in_q(1));
        }
    }

    #[test]
    fn q_matches_brute_force() {
        for (n, ell) in [(1, 2), (2, 2), (1, 3), (2, 3)] {
            let fast = enumerate_q(n, ell, Exec::Sequential);
            let mut brute = Vec::new();
            for a in 0..=n * ell {
                for lambda in partitions(a) {
                    for nu in
                        crate::partitions::enumerate_multipartitions(n * ell - a, ell).unwrap()
                    {
                        let l = OrbitLabel::new(lambda.clone(), nu);
                        if l.is_in_q(n) {
                            brute.push(l);
                        }
                    }
                }
            }
            let mut f = fast.clone();
            f.sort();
            brute.sort();
            assert_eq!(f, brute, "n={n} ell={ell}");
        }
    }

    #[test]
    fn core_quotient_examples() {
        let (core, quot) = ell_quotient_core(&part![1], 2);
        assert_eq!(core, part![1]);
        assert!(quot.is_empty());
        let (core, quot) = ell_quotient_core(&part![2], 2);
        assert_eq!(core, part![]);
        assert_eq!(quot.size(), 1);
        for ell in 1..6 {
            assert_eq!(ell_quotient_core(&part![ell], ell).0, part![]);
        }
    }

    #[test]
    fn core_quotient_roundtrip() {
        for ell in 1..5 {
            for n in 0..10 {
                for lambda in partitions(n) {
                    let (core, quot) = ell_quotient_core(&lambda, ell);
                    assert_eq!(core.size() + ell * quot.size(), n);
                    assert_eq!(from_core_quotient(&core, &quot), lambda, "ell={ell}");
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            DimensionVector::multiple_of_delta(2, 3, 1).to_string(),
            "(1; 2,2,2)"
        );
        let l = OrbitLabel::new(part![1, 1], mp(vec![part![1]]));
        assert_eq!(l.to_string(), "([1,1];[1])");
    }
}
