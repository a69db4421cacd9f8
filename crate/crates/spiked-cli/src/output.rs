use crate::{CliError, Common};
use serde_json::{json, Value};
use std::fs;
use std::path::{Path, PathBuf};

pub fn config_echo(command: &str, c: &Common) -> Value {
    json!({
        "command": command,
        "family": c.family.clone().unwrap_or_else(|| "crown".into()),
        "n": c.n,
        "decorate": c.decorate,
        "mark": c.mark,
        "seed": c.seed,
        "kmax": c.kmax,
        "strict": c.strict,
    })
}

fn target(dir: &Path, name: &str) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir)?;
    Ok(dir.join(name))
}

/// Writes `value` with the run configuration embedded under `config`.
pub fn write_json(dir: &Path, name: &str, config: &Value, mut value: Value) -> Result<PathBuf, CliError> {
    if let Value::Object(map) = &mut value {
        map.insert("config".into(), config.clone());
    }
    let path = target(dir, name)?;
    fs::write(&path, serde_json::to_string_pretty(&value)? + "\n")?;
    Ok(path)
}

pub fn write_text(dir: &Path, name: &str, text: &str) -> Result<PathBuf, CliError> {
    let path = target(dir, name)?;
    fs::write(&path, text)?;
    Ok(path)
}
