//! `render`: Young diagrams and circle diagrams as text, DOT or ytableau source.

use std::fmt::Write;

use clap::ValueEnum;

use nilcone::circle_diagrams::{
    frobenius_diagram_of_partition, from_dot, partition_of_frobenius_diagram, to_ascii, to_dot,
    CircleDiagram, DiagramJson,
};
use nilcone::partitions::Partition;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RenderFormat {
    Ascii,
    Dot,
    LatexYtableau,
}

/// Box entries: the residue of `(i, j)` in the framed orientation, with the
/// diagonal boxes labelled `s_1, s_2, …`; empty without `ell`.
fn entries(lambda: &Partition, ell: Option<usize>) -> Vec<Vec<Option<String>>> {
    (0..lambda.len())
        .map(|i| {
            (0..lambda.part(i))
                .map(|j| {
                    let ell = ell?;
                    Some(if i == j {
                        format!("s{}", i + 1)
                    } else {
                        ((i as i64 - j as i64).rem_euclid(ell as i64)).to_string()
                    })
                })
                .collect()
        })
        .collect()
}

fn young_ascii(lambda: &Partition, ell: Option<usize>) -> String {
    if lambda.is_empty() {
        return "(empty)\n".to_string();
    }
    let cells = entries(lambda, ell);
    let width = cells
        .iter()
        .flatten()
        .flatten()
        .map(String::len)
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for row in cells {
        for cell in row {
            let text = cell.unwrap_or_default();
            write!(out, "[{text:>width$}]").unwrap();
        }
        out.push('\n');
    }
    out
}

fn young_latex(lambda: &Partition, ell: Option<usize>) -> String {
    if ell.is_none() {
        let rows: Vec<String> = lambda.parts().iter().map(ToString::to_string).collect();
        return format!(
            "\\ydiagram{{{}}}\n",
            if rows.is_empty() {
                "0".into()
            } else {
                rows.join(",")
            }
        );
    }
    let mut out = String::from("\\begin{ytableau}\n");
    let cells = entries(lambda, ell);
    let last = cells.len().saturating_sub(1);
    for (i, row) in cells.into_iter().enumerate() {
        let row: Vec<String> = row
            .into_iter()
            .map(|c| {
                let c = c.unwrap_or_default();
                match c.strip_prefix('s') {
                    Some(k) => format!("\\boxed{{s_{{{k}}}}}"),
                    None => c,
                }
            })
            .collect();
        let end = if i == last { "" } else { " \\\\" };
        writeln!(out, "{}{end}", row.join(" & ")).unwrap();
    }
    out.push_str("\\end{ytableau}\n");
    out
}

pub fn partition(src: &str, format: RenderFormat, ell: Option<usize>) -> Result<String, CliError> {
    let lambda: Partition = src.parse().map_err(CliError::invalid)?;
    Ok(match format {
        RenderFormat::Ascii => young_ascii(&lambda, ell),
        RenderFormat::LatexYtableau => young_latex(&lambda, ell),
        RenderFormat::Dot => {
            let ell = ell.unwrap_or(1);
            let frob = frobenius_diagram_of_partition(&lambda, ell);
            to_dot(&DiagramJson::from_parts(&frob, &CircleDiagram::empty(ell)))
        }
    })
}

/// Reads a diagram from JSON or from DOT produced by [`to_dot`].
fn read_diagram(src: &str) -> Result<DiagramJson, CliError> {
    let json = if src.trim_start().starts_with("digraph") {
        from_dot(src).map_err(CliError::invalid)?
    } else {
        serde_json::from_str(src).map_err(CliError::invalid)?
    };
    if json.ell == 0 {
        return Err(CliError::invalid("ell must be positive"));
    }
    json.into_parts().map_err(CliError::invalid)?;
    Ok(json)
}

pub fn diagram(src: &str, format: RenderFormat) -> Result<String, CliError> {
    let json = read_diagram(src)?;
    Ok(match format {
        RenderFormat::Ascii => to_ascii(&json),
        RenderFormat::Dot => to_dot(&json),
        RenderFormat::LatexYtableau => {
            let (frob, plain) = json.into_parts().map_err(CliError::invalid)?;
            let mut out = young_latex(&partition_of_frobenius_diagram(&frob), Some(json.ell));
            for c in plain.circles() {
                let colours: Vec<String> = (0..c.len)
                    .map(|k| ((c.start + k) % json.ell).to_string())
                    .collect();
                writeln!(
                    out,
                    "\\begin{{ytableau}}\n{}\n\\end{{ytableau}}",
                    colours.join(" & ")
                )
                .unwrap();
            }
            out
        }
    })
}
