use std::env;
use std::fs;
use std::path::PathBuf;

/// Defaults read from a key=value file; command-line flags override
/// every entry.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Config {
    pub space: Option<String>,
    pub format: Option<String>,
}

/// $EQQ_CONFIG wins, then $XDG_CONFIG_HOME/eqq/config, then
/// ~/.config/eqq/config.
pub fn config_path() -> Option<PathBuf> {
    if let Ok(p) = env::var("EQQ_CONFIG") {
        if !p.is_empty() {
            return Some(PathBuf::from(p));
        }
    }
    if let Ok(x) = env::var("XDG_CONFIG_HOME") {
        if !x.is_empty() {
            return Some(PathBuf::from(x).join("eqq").join("config"));
        }
    }
    env::var("HOME")
        .ok()
        .map(|h| PathBuf::from(h).join(".config").join("eqq").join("config"))
}

/// A missing or unreadable file is the empty config.
pub fn load() -> Config {
    match config_path().map(fs::read_to_string) {
        Some(Ok(text)) => parse(&text),
        _ => Config::default(),
    }
}

/// Blank lines and # comments are skipped; unknown keys are ignored so
/// configs stay forward-compatible.
pub fn parse(text: &str) -> Config {
    let mut out = Config::default();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            continue;
        };
        let value = value.trim().to_string();
        match key.trim() {
            "space" => out.space = Some(value),
            "format" => out.format = Some(value),
            _ => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_skips_noise() {
        let cfg = parse(
            "# defaults\n\
             space = quadric:3\n\
             \n\
             format=json\n\
             color = always\n\
             not a key value line\n",
        );
        assert_eq!(cfg.space.as_deref(), Some("quadric:3"));
        assert_eq!(cfg.format.as_deref(), Some("json"));
    }

    #[test]
    fn empty_input_is_default() {
        assert_eq!(parse(""), Config::default());
        assert_eq!(parse("# just a comment\n"), Config::default());
    }

    #[test]
    fn last_assignment_wins() {
        let cfg = parse("space=grass\nspace=proj:2|2\n");
        assert_eq!(cfg.space.as_deref(), Some("proj:2|2"));
    }
}
