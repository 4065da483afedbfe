use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use randic_core::graph6::parse_graph6_stream;
use randic_core::Graph;

/// Where graphs come from. Without `--g6` or `--input`, graph6 lines are
/// read from standard input.
#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// A single graph in graph6.
    #[arg(long, conflicts_with = "input")]
    pub g6: Option<String>,
    /// File of graph6 lines (or an edge list with --edges).
    #[arg(long, short = 'i')]
    pub input: Option<PathBuf>,
    /// Read the input as an `n m` edge list instead of graph6.
    #[arg(long)]
    pub edges: bool,
}

impl InputArgs {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        let text = match (&self.g6, &self.input) {
            (Some(s), _) => {
                if self.edges {
                    bail!("--edges cannot be combined with --g6");
                }
                s.clone()
            }
            (None, Some(path)) => std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?,
            (None, None) => {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).context("reading standard input")?;
                buf
            }
        };
        let graphs = if self.edges {
            vec![Graph::parse_edge_list(&text)?]
        } else {
            parse_graph6_stream(&text)?
        };
        if graphs.is_empty() {
            bail!("no graphs on input");
        }
        Ok(graphs)
    }
}
