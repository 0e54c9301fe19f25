//! TOML run configuration. The schema mirrors the subcommand flags, one table
//! per subcommand with the same key names; command-line flags override file
//! values.

use std::path::Path;

pub struct FileConfig {
    root: toml::Table,
}

pub fn load(path: Option<&Path>) -> Result<FileConfig, String> {
    let root = match path {
        None => toml::Table::new(),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read config {}: {}", p.display(), e))?;
            text.parse::<toml::Table>()
                .map_err(|e| format!("cannot parse config {}: {}", p.display(), e))?
        }
    };
    Ok(FileConfig { root })
}

impl FileConfig {
    pub fn threads(&self) -> Option<usize> {
        self.root
            .get("threads")
            .and_then(|v| v.as_integer())
            .and_then(|v| usize::try_from(v).ok())
    }

    fn section(&self, name: &str) -> Option<&toml::Table> {
        self.root.get(name).and_then(|v| v.as_table())
    }

    pub fn fill_u64(&self, slot: &mut Option<u64>, section: &str, key: &str) {
        if slot.is_none() {
            *slot = self
                .section(section)
                .and_then(|t| t.get(key))
                .and_then(|v| v.as_integer())
                .and_then(|v| u64::try_from(v).ok());
        }
    }

    pub fn fill_string(&self, slot: &mut Option<String>, section: &str, key: &str) {
        if slot.is_none() {
            *slot = self
                .section(section)
                .and_then(|t| t.get(key))
                .and_then(|v| match v {
                    toml::Value::String(s) => Some(s.clone()),
                    toml::Value::Integer(i) => Some(i.to_string()),
                    _ => None,
                });
        }
    }

    pub fn fill_strings(&self, slot: &mut Vec<String>, section: &str, key: &str) {
        if slot.is_empty() {
            if let Some(arr) = self
                .section(section)
                .and_then(|t| t.get(key))
                .and_then(|v| v.as_array())
            {
                *slot = arr
                    .iter()
                    .filter_map(|v| v.as_str().map(String::from))
                    .collect();
            }
        }
    }
}
