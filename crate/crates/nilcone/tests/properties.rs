use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nilcone::circle_diagrams::{frobenius_diagram_of_partition, partition_of_frobenius_diagram};
use nilcone::decomposer::{cyclic_multiplicities, jordan_type};
use nilcone::linalg::{rat, RationalMatrix};
use nilcone::orbit_maps::{label_to_striped, psi_inverse, psi_label, striped_to_label};
use nilcone::partitions::{Multipartition, Partition};
use nilcone::rep_builder::{build_m, build_u, direct_sum, random_invertible};
use nilcone::rep_type::{tits_form, CoveringWindow};
use nilcone::residues::{ell_quotient_core, enumerate_q, from_core_quotient};
use nilcone::Exec;

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn jordan(blocks: &Partition) -> RationalMatrix {
    let n = blocks.size();
    let mut x = RationalMatrix::zeros(n, n);
    let mut off = 0;
    for &b in blocks.parts() {
        for k in 1..b {
            x.set(off + k - 1, off + k, rat(1));
        }
        off += b;
    }
    x
}

proptest! {
    #[test]
    fn transpose_is_an_involution(p in partition(8, 8)) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().size(), p.size());
    }

    #[test]
    fn frobenius_coordinates_roundtrip(p in partition(8, 8)) {
        prop_assert_eq!(p.frobenius().to_partition(), p.clone());
        prop_assert_eq!(p.frobenius().hook_sizes().size(), p.size());
    }

    #[test]
    fn frobenius_diagrams_roundtrip(p in partition(7, 7), ell in 1usize..=5) {
        let c = frobenius_diagram_of_partition(&p, ell);
        prop_assert_eq!(partition_of_frobenius_diagram(&c), p);
    }

    #[test]
    fn core_and_quotient_determine_the_partition(p in partition(7, 7), ell in 1usize..=4) {
        let (core, quotient) = ell_quotient_core(&p, ell);
        prop_assert_eq!(core.size() + ell * quotient.size(), p.size());
        prop_assert_eq!(from_core_quotient(&core, &quotient), p);
    }

    #[test]
    fn psi_is_invertible(mu in partition(4, 4), nu in partition(4, 4)) {
        let label = psi_label(&mu, &nu).unwrap();
        prop_assert_eq!(label.lambda.size() + label.nu.size(), mu.size() + nu.size());
        let back = psi_inverse(&label.lambda, label.nu.component(0)).unwrap();
        prop_assert_eq!(back.first, mu);
        prop_assert_eq!(back.second, nu);
    }

    #[test]
    fn jordan_type_survives_conjugation(blocks in partition(4, 4), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_invertible(blocks.size(), &mut rng);
        let x = g.mul(&jordan(&blocks)).mul(&g.inverse().unwrap());
        prop_assert_eq!(jordan_type(&x).unwrap(), blocks);
    }

    #[test]
    fn cyclic_multiplicities_are_additive(
        ell in 1usize..=3,
        lambda in partition(3, 3),
        strings in prop::collection::vec((0usize..3, 1usize..=4), 0..=3),
        seed in any::<u64>(),
    ) {
        let mut rep = build_m(&lambda, ell).unframed();
        let mut rows = vec![Vec::new(); ell];
        for (start, len) in strings {
            rep = direct_sum(&rep, &build_u(start % ell, len, ell)).unwrap();
            rows[start % ell].push(len);
        }
        let expected = Multipartition::new(rows.into_iter().map(Partition::from_unsorted).collect());
        let base = cyclic_multiplicities(&build_m(&lambda, ell).unframed()).unwrap();
        let got = cyclic_multiplicities(&rep).unwrap();
        for i in 0..ell {
            let mut want: Vec<usize> = base.component(i).parts().to_vec();
            want.extend(expected.component(i).parts());
            prop_assert_eq!(got.component(i), &Partition::from_unsorted(want));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(cyclic_multiplicities(&rep.random_base_change(&mut rng)).unwrap(), got);
    }

    #[test]
    fn tits_form_is_quadratic(
        ell in 1usize..=4,
        x in 1usize..=3,
        a in prop::collection::vec(-3i64..=3, 12),
        b in prop::collection::vec(-3i64..=3, 12),
    ) {
        let w = CoveringWindow::new(ell, x, 6, 1).unwrap();
        let n = w.vertex_count();
        let (a, b) = (&a[..n], &b[..n]);
        let sum: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
        let diff: Vec<i64> = a.iter().zip(b).map(|(p, q)| p - q).collect();
        let q = |d: &[i64]| tits_form(&w, d).unwrap();
        prop_assert_eq!(q(&sum) + q(&diff), 2 * q(a) + 2 * q(b));
        let twice: Vec<i64> = a.iter().map(|p| 2 * p).collect();
        prop_assert_eq!(q(&twice), 4 * q(a));
    }
}

#[test]
fn striped_translation_roundtrips_on_q() {
    for (n, ell) in [(2, 2), (1, 3), (2, 3), (1, 4)] {
        for label in enumerate_q(n, ell, Exec::Sequential) {
            let s = label_to_striped(&label).unwrap();
            assert_eq!(striped_to_label(&s, ell).unwrap(), label);
        }
    }
}

#[cfg(feature = "parallel")]
#[test]
fn parallel_enumeration_matches_sequential() {
    for (n, ell) in [(4, 1), (2, 2), (2, 3)] {
        assert_eq!(
            enumerate_q(n, ell, Exec::Sequential),
            enumerate_q(n, ell, Exec::Parallel)
        );
    }
}
