use crate::error::CliError;
use asc_core::graph::{build_family, parse_edge_list, parse_graph6, FamilySpec};
use asc_core::{Graph, ParseError};
use std::io::Read;
use std::path::Path;

/// Reads `-` as stdin, an existing path as its contents, and anything else as
/// literal text.
pub fn read_source(input: &str) -> Result<(String, String), CliError> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::failure(format!("cannot read stdin: {e}")))?;
        return Ok(("stdin".into(), text));
    }
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)
            .map_err(|e| CliError::failure(format!("cannot read {input}: {e}")))?;
        return Ok((input.into(), text));
    }
    Ok((input.into(), input.into()))
}

/// Edge lists start with an `n m` header; everything else is graph6.
pub fn parse_graph_text(text: &str) -> Result<Graph, ParseError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    let is_edge_list = first.is_some_and(|l| {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok())
    });
    if is_edge_list {
        parse_edge_list(text)
    } else {
        parse_graph6(text.trim())
    }
}

pub fn load_graph(
    input: Option<&str>,
    family: Option<&FamilySpec>,
) -> Result<(String, Graph), CliError> {
    match (input, family) {
        (_, Some(spec)) => Ok((spec.to_string(), build_family(spec)?)),
        (Some(input), None) => {
            let (label, text) = read_source(input)?;
            Ok((label, parse_graph_text(&text)?))
        }
        (None, None) => Err(CliError::failure("no input graph given")),
    }
}
