//! `translate`: every format goes through the orbit label.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use nilcone::orbit_maps::{
    label_to_striped, psi_inverse, psi_label, striped_to_label, StripedBipartition,
};
use nilcone::partitions::Partition;
use nilcone::residues::OrbitLabel;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LabelFormat {
    /// `{"mu":[…],"nu":[…]}`, ell = 1.
    Ah,
    /// `{"ell":ℓ,"lambda":[…],"epsilon":[…],"nu":[…]}`.
    Johnson,
    /// `{"lambda":[…],"nu":[[…],…]}`.
    Label,
}

#[derive(Serialize, Deserialize)]
struct AhJson {
    mu: Partition,
    nu: Partition,
}

#[derive(Serialize, Deserialize)]
struct JohnsonJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ell: Option<usize>,
    lambda: Partition,
    epsilon: Vec<usize>,
    nu: Vec<i64>,
}

fn parse<'a, T: Deserialize<'a>>(src: &'a str) -> Result<T, CliError> {
    serde_json::from_str(src).map_err(CliError::invalid)
}

fn read_label(
    from: LabelFormat,
    src: &str,
    ell_flag: Option<usize>,
) -> Result<OrbitLabel, CliError> {
    match from {
        LabelFormat::Ah => {
            let j: AhJson = parse(src)?;
            psi_label(&j.mu, &j.nu).map_err(CliError::invalid)
        }
        LabelFormat::Johnson => {
            let j: JohnsonJson = parse(src)?;
            let ell = match (j.ell, ell_flag) {
                (Some(a), Some(b)) if a != b => {
                    return Err(CliError::Invalid(format!(
                        "input has ell = {a} but --ell {b} was given"
                    )))
                }
                (Some(e), _) | (None, Some(e)) => e,
                (None, None) => {
                    return Err(CliError::invalid(
                        "striped input needs ell (field or --ell)",
                    ))
                }
            };
            if ell == 0 {
                return Err(CliError::invalid("ell must be positive"));
            }
            let s = StripedBipartition::new(j.lambda, j.epsilon, j.nu, ell)
                .map_err(CliError::invalid)?;
            striped_to_label(&s, ell).map_err(CliError::invalid)
        }
        LabelFormat::Label => {
            let label: OrbitLabel = parse(src)?;
            if label.ell() == 0 {
                return Err(CliError::invalid(
                    "label needs at least one component in nu",
                ));
            }
            Ok(label)
        }
    }
}

fn write_label(to: LabelFormat, label: &OrbitLabel) -> Result<String, CliError> {
    let json = match to {
        LabelFormat::Ah => {
            if label.ell() != 1 {
                return Err(CliError::Invalid(format!(
                    "{label} has ell = {}, bipartitions need ell = 1",
                    label.ell()
                )));
            }
            let b = psi_inverse(&label.lambda, label.nu.component(0)).map_err(CliError::invalid)?;
            serde_json::to_string(&AhJson {
                mu: b.first,
                nu: b.second,
            })
        }
        LabelFormat::Johnson => {
            let s = label_to_striped(label).map_err(CliError::invalid)?;
            serde_json::to_string(&JohnsonJson {
                ell: Some(label.ell()),
                lambda: s.lambda,
                epsilon: s.epsilon,
                nu: s.nu,
            })
        }
        LabelFormat::Label => serde_json::to_string(label),
    };
    json.map_err(CliError::internal)
}

pub fn run(
    from: LabelFormat,
    to: LabelFormat,
    src: &str,
    ell: Option<usize>,
) -> Result<String, CliError> {
    let label = read_label(from, src, ell)?;
    write_label(to, &label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nilcone::orbit_maps::enumerate_striped;
    use nilcone::partitions::enumerate_bipartitions;
    use nilcone::residues::DimensionVector;
    use nilcone::Exec;

    #[test]
    fn table_rows() {
        let out = run(
            LabelFormat::Ah,
            LabelFormat::Label,
            r#"{"mu":[2,1],"nu":[]}"#,
            None,
        )
        .unwrap();
        assert_eq!(out, r#"{"lambda":[1,1],"nu":[[1]]}"#);
        let out = run(
            LabelFormat::Label,
            LabelFormat::Ah,
            r#"{"lambda":[],"nu":[[3]]}"#,
            None,
        )
        .unwrap();
        assert_eq!(out, r#"{"mu":[],"nu":[3]}"#);
    }

    #[test]
    fn johnson_needs_ell() {
        let src = r#"{"lambda":[1],"epsilon":[0],"nu":[1]}"#;
        assert!(matches!(
            run(LabelFormat::Johnson, LabelFormat::Label, src, None),
            Err(CliError::Invalid(_))
        ));
        assert!(run(LabelFormat::Johnson, LabelFormat::Label, src, Some(1)).is_ok());
    }

    #[test]
    fn roundtrip_through_johnson() {
        let src = r#"{"lambda":[2],"nu":[[],[]]}"#;
        let j = run(LabelFormat::Label, LabelFormat::Johnson, src, None).unwrap();
        assert_eq!(
            run(LabelFormat::Johnson, LabelFormat::Label, &j, None).unwrap(),
            src
        );
    }

    #[test]
    fn ah_roundtrips_up_to_five() {
        for n in 0..=5 {
            for b in enumerate_bipartitions(n).unwrap() {
                let src = serde_json::to_string(&AhJson {
                    mu: b.first,
                    nu: b.second,
                })
                .unwrap();
                let label = run(LabelFormat::Ah, LabelFormat::Label, &src, None).unwrap();
                assert_eq!(
                    run(LabelFormat::Label, LabelFormat::Ah, &label, None).unwrap(),
                    src
                );
                let j = run(LabelFormat::Ah, LabelFormat::Johnson, &src, None).unwrap();
                assert_eq!(
                    run(LabelFormat::Johnson, LabelFormat::Ah, &j, None).unwrap(),
                    src
                );
            }
        }
    }

    #[test]
    fn johnson_roundtrips_up_to_signature_two() {
        for ell in 1..=3usize {
            for code in 0..3usize.pow(ell as u32) {
                let main = (0..ell).map(|i| code / 3usize.pow(i as u32) % 3).collect();
                let xi = DimensionVector { framing: 0, main };
                for s in enumerate_striped(ell, &xi, Exec::Sequential) {
                    let src = serde_json::to_string(&JohnsonJson {
                        ell: Some(ell),
                        lambda: s.lambda,
                        epsilon: s.epsilon,
                        nu: s.nu,
                    })
                    .unwrap();
                    let label = run(LabelFormat::Johnson, LabelFormat::Label, &src, None).unwrap();
                    assert_eq!(
                        run(LabelFormat::Label, LabelFormat::Johnson, &label, None).unwrap(),
                        src
                    );
                    let again = run(LabelFormat::Label, LabelFormat::Label, &label, None).unwrap();
                    assert_eq!(again, label);
                }
            }
        }
    }
}
