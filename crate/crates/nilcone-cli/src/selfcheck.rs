//! `selfcheck`: the library's bijections and decomposition oracles at one `(n, ℓ)`.

use std::collections::BTreeSet;

use nilcone::decomposer::{Decomposer, Strategy};
use nilcone::orbit_maps::{enumerate_striped, psi_inverse, psi_label, striped_to_label};
use nilcone::partitions::{
    enumerate_bipartitions, enumerate_multipartitions, partitions, Multipartition,
};
use nilcone::rep_builder::{build_ah, build_johnson, build_label};
use nilcone::residues::{ell_quotient_core, enumerate_q, DimensionVector, OrbitLabel};
use nilcone::Exec;

use crate::error::CliError;

/// Largest `n·ℓ` accepted.
const MAX_BOXES: usize = 12;

type Suite = Result<String, String>;

fn check(ok: bool, pass: String, fail: String) -> Suite {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn label_set(n: usize, ell: usize, q: &[OrbitLabel]) -> Suite {
    let xi = DimensionVector::multiple_of_delta(n, ell, 0);
    let striped = enumerate_striped(ell, &xi, Exec::default()).len();
    let mut ok = striped == q.len();
    let mut detail = format!("|Q| = {}, striped = {striped}", q.len());
    if ell == 1 {
        let bip = enumerate_bipartitions(n).map_err(|e| e.to_string())?.len();
        ok &= bip == q.len();
        detail.push_str(&format!(", bipartitions = {bip}"));
    }
    check(ok, detail.clone(), detail)
}

fn dimensions(n: usize, ell: usize, q: &[OrbitLabel]) -> Suite {
    let target = DimensionVector::multiple_of_delta(n, ell, 1);
    let bad: Vec<_> = q
        .iter()
        .filter(|l| l.dimension() != target || build_label(l).dims() != &target)
        .collect();
    check(
        bad.is_empty(),
        format!("{} labels of dimension {target}", q.len()),
        format!(
            "first bad label {}",
            bad.first().map_or(String::new(), |l| l.to_string())
        ),
    )
}

fn translation(n: usize, ell: usize, q: &[OrbitLabel]) -> Suite {
    let xi = DimensionVector::multiple_of_delta(n, ell, 0);
    let striped = enumerate_striped(ell, &xi, Exec::default());
    let mut images = BTreeSet::new();
    for s in &striped {
        images.insert(striped_to_label(s, ell).map_err(|e| format!("{s:?}: {e}"))?);
    }
    let expected: BTreeSet<_> = q.iter().cloned().collect();
    if images != expected || images.len() != striped.len() {
        return Err(format!(
            "striped images: {} distinct of {}, Q has {}",
            images.len(),
            striped.len(),
            q.len()
        ));
    }
    if ell == 1 {
        for b in enumerate_bipartitions(n).map_err(|e| e.to_string())? {
            let l = psi_label(&b.first, &b.second).map_err(|e| e.to_string())?;
            let back = psi_inverse(&l.lambda, l.nu.component(0)).map_err(|e| e.to_string())?;
            if back != b || !expected.contains(&l) {
                return Err(format!("Ψ roundtrip fails at {b}"));
            }
        }
    }
    Ok(format!(
        "{} striped bipartitions map bijectively onto Q",
        striped.len()
    ))
}

fn decomposition(n: usize, ell: usize) -> Suite {
    let decomposer = Decomposer::new(Strategy::Candidates, Exec::default());
    let xi = DimensionVector::multiple_of_delta(n, ell, 0);
    let striped = enumerate_striped(ell, &xi, Exec::default());
    for s in &striped {
        let rep = build_johnson(s, ell).map_err(|e| e.to_string())?;
        let got = decomposer
            .decompose(&rep)
            .map_err(|e| e.to_string())?
            .label();
        let want = striped_to_label(s, ell).map_err(|e| e.to_string())?;
        if got.as_ref() != Some(&want) {
            return Err(format!("{s:?} decomposes to {got:?}, expected {want}"));
        }
    }
    let mut count = striped.len();
    if ell == 1 {
        for b in enumerate_bipartitions(n).map_err(|e| e.to_string())? {
            let got = decomposer
                .decompose(&build_ah(&b.first, &b.second))
                .map_err(|e| e.to_string())?
                .label();
            let want = psi_label(&b.first, &b.second).map_err(|e| e.to_string())?;
            if got.as_ref() != Some(&want) {
                return Err(format!(
                    "normal form of {b} decomposes to {got:?}, expected {want}"
                ));
            }
        }
        count += enumerate_bipartitions(n).map_err(|e| e.to_string())?.len();
    }
    Ok(format!("{count} normal forms decompose to their labels"))
}

fn trivial_core(n: usize, ell: usize, q: &[OrbitLabel]) -> Suite {
    let framed: BTreeSet<_> = q
        .iter()
        .filter(|l| l.nu.is_empty())
        .map(|l| l.lambda.clone())
        .collect();
    let cores: BTreeSet<_> = partitions(n * ell)
        .into_iter()
        .filter(|p| ell_quotient_core(p, ell).0.is_empty())
        .collect();
    if framed != cores {
        return Err(format!(
            "{} labels (λ;∅) but {} partitions with trivial core",
            framed.len(),
            cores.len()
        ));
    }
    let quotients: BTreeSet<Multipartition> =
        framed.iter().map(|p| ell_quotient_core(p, ell).1).collect();
    let expected: BTreeSet<_> = enumerate_multipartitions(n, ell)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    check(
        quotients == expected && quotients.len() == framed.len(),
        format!(
            "{} partitions ↔ {}-multipartitions of {n}",
            framed.len(),
            ell
        ),
        "quotient map is not a bijection".to_string(),
    )
}

pub fn run(n: usize, ell: usize) -> Result<(), CliError> {
    if n * ell > MAX_BOXES {
        return Err(CliError::Invalid(format!(
            "selfcheck needs n·ell ≤ {MAX_BOXES}"
        )));
    }
    let q = enumerate_q(n, ell, Exec::default());
    let suites: [(&str, Suite); 5] = [
        ("label-set", label_set(n, ell, &q)),
        ("dimensions", dimensions(n, ell, &q)),
        ("translation", translation(n, ell, &q)),
        ("decomposition", decomposition(n, ell)),
        ("trivial-core", trivial_core(n, ell, &q)),
    ];
    let mut failed = 0;
    for (name, result) in suites {
        match result {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        return Err(CliError::Internal(format!("{failed} suites failed")));
    }
    Ok(())
}
