use chromastat::generate_family;
use chromastat::graph::{write_dimacs, write_edge_list};

use super::family_spec;
use crate::output::CliError;
use crate::{GenArgs, GraphFormat, Outcome};

pub fn run(args: &GenArgs) -> Result<Outcome, CliError> {
    let spec = family_spec(args.family, args.n, &args.parts)?;
    let graph = generate_family(&spec).map_err(CliError::input)?;
    let text = match args.format {
        GraphFormat::Dimacs => write_dimacs(&graph),
        GraphFormat::EdgeList => write_edge_list(&graph),
    };
    match &args.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome {
                rendered: String::new(),
                exit: 0,
            })
        }
        None => Ok(Outcome {
            rendered: text,
            exit: 0,
        }),
    }
}
