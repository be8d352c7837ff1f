use std::path::Path;

use serde::Deserialize;

pub const DEFAULT_MAX_BOXES: usize = 10;

/// Optional TOML configuration. Every key may be omitted.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub max_boxes: Option<usize>,
    pub format: Option<String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_gives_defaults() {
        let c: Config = toml::from_str("").unwrap();
        assert_eq!(c.max_boxes, None);
        let c: Config = toml::from_str("max_boxes = 12").unwrap();
        assert_eq!(c.max_boxes, Some(12));
    }
}
