//! Loading automata from a directory and resolving expressions against
//! them.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use thiserror::Error;

use crate::automata::{parse_automaton, WeightedAutomaton};
use crate::error::Error;
use crate::expressions::{parse_expression, Expression};

#[derive(Debug, Error)]
pub enum WorkspaceError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("duplicate automaton `{name}` declared in {first} and {second}")]
    DuplicateAutomaton {
        name: String,
        first: String,
        second: String,
    },
}

/// Automata collected from `.aut` files, addressed by declared name.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    automata: BTreeMap<String, Arc<WeightedAutomaton>>,
    origins: BTreeMap<String, String>,
}

impl Workspace {
    pub fn new() -> Workspace {
        Workspace::default()
    }

    /// Reads every `*.aut` file of `dir` (sorted by file name) into a
    /// validated workspace.
    pub fn load_dir(dir: &Path) -> Result<Workspace, Error> {
        let io_err = |path: &Path, source| WorkspaceError::Io { path: path.to_path_buf(), source };
        let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(|e| io_err(dir, e))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|ext| ext == "aut"))
            .collect();
        files.sort();
        let mut ws = Workspace::new();
        for path in files {
            let text = std::fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
            ws.add_automaton_text(&text, &path.display().to_string())?;
        }
        Ok(ws)
    }

    pub fn add_automaton_text(&mut self, text: &str, origin: &str) -> Result<(), Error> {
        let automaton = parse_automaton(text, origin)?;
        if let Some(first) = self.origins.get(&automaton.name) {
            return Err(WorkspaceError::DuplicateAutomaton {
                name: automaton.name.clone(),
                first: first.clone(),
                second: origin.to_string(),
            }
            .into());
        }
        self.origins.insert(automaton.name.clone(), origin.to_string());
        self.automata.insert(automaton.name.clone(), Arc::new(automaton));
        Ok(())
    }

    pub fn automata(&self) -> &BTreeMap<String, Arc<WeightedAutomaton>> {
        &self.automata
    }

    pub fn names(&self) -> Vec<String> {
        self.automata.keys().cloned().collect()
    }

    pub fn get(&self, name: &str) -> Option<&Arc<WeightedAutomaton>> {
        self.automata.get(name)
    }

    pub fn parse_expression_text(&self, text: &str, origin: &str) -> Result<Expression, Error> {
        Ok(parse_expression(text, &self.automata, origin)?)
    }

    pub fn parse_expression_file(&self, path: &Path) -> Result<Expression, Error> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::Workspace(WorkspaceError::Io { path: path.to_path_buf(), source: e })
        })?;
        self.parse_expression_text(&text, &path.display().to_string())
    }
}
