pub mod gen;
pub mod report;
pub mod stats;
pub mod verify;

use chromastat::graph::{parse_auto, InputFormat};
use chromastat::{generate_family, FamilySpec, Graph};
use serde::Serialize;

use crate::output::CliError;
use crate::SourceArgs;

/// Where a graph came from, echoed in the results.
#[derive(Debug, Serialize)]
pub struct GraphSource {
    pub kind: &'static str,
    pub name: String,
    pub format: Option<InputFormat>,
    /// Added to internal indices to recover the labels used in the input.
    pub label_offset: usize,
}

pub fn family_spec(family: chromastat::Family, n: Option<usize>, parts: &[usize]) -> Result<FamilySpec, CliError> {
    FamilySpec::from_parts(family, n, parts).map_err(CliError::input)
}

pub fn load_graph(source: &SourceArgs) -> Result<(Graph, GraphSource), CliError> {
    match (&source.input, source.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
            let (graph, format) = parse_auto(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            Ok((
                graph,
                GraphSource {
                    kind: "file",
                    name: path.display().to_string(),
                    format: Some(format),
                    label_offset: format.label_offset(),
                },
            ))
        }
        (None, Some(family)) => {
            let spec = family_spec(family, source.n, &source.parts)?;
            let graph = generate_family(&spec).map_err(CliError::input)?;
            Ok((
                graph,
                GraphSource {
                    kind: "family",
                    name: spec.to_string(),
                    format: None,
                    label_offset: 0,
                },
            ))
        }
        _ => Err(CliError::input("exactly one of --input or --family is required")),
    }
}
