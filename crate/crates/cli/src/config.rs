//! Run files: a TOML document whose keys mirror the command-line flags.
//!
//! ```toml
//! command = "index"
//! seed = 7
//! format = "json"
//! args = []            # positional arguments
//!
//! [index]
//! model = "sphere2"
//! t = [0.1, 0.5, 1.0]
//! lmax = 40
//! ```
//!
//! The file is expanded into an argument list; flags given on the command
//! line after `--config FILE` are appended and take precedence.

use std::ffi::OsString;
use std::path::Path;

use anyhow::{bail, Context};
use toml::{Table, Value};

const GLOBAL_KEYS: [&str; 5] = ["seed", "format", "tol", "allow_loose", "threads"];

/// Splits `--config FILE` out of the raw arguments and expands the file.
/// Returns the arguments unchanged when no config is given.
pub fn expand_args(raw: Vec<OsString>) -> anyhow::Result<Vec<OsString>> {
    let mut rest = Vec::with_capacity(raw.len());
    let mut path: Option<OsString> = None;
    let mut it = raw.into_iter();
    if let Some(bin) = it.next() {
        rest.push(bin);
    }
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            path = Some(it.next().context("--config needs a file")?);
        } else if let Some(p) = s.strip_prefix("--config=") {
            path = Some(p.into());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else { return Ok(rest) };
    let text = std::fs::read_to_string(Path::new(&path))
        .with_context(|| format!("reading config {}", path.to_string_lossy()))?;
    let mut args = config_args(&text).with_context(|| format!("in config {}", path.to_string_lossy()))?;
    let mut out = vec![rest.remove(0)];
    out.append(&mut args);
    out.extend(rest);
    Ok(out)
}

/// Argument list (without the program name) described by a config file.
pub fn config_args(text: &str) -> anyhow::Result<Vec<OsString>> {
    let table: Table = text.parse()?;
    let command = match table.get("command") {
        Some(Value::String(c)) => c.clone(),
        Some(_) => bail!("`command` must be a string"),
        None => bail!("missing `command`"),
    };
    let mut out: Vec<OsString> = Vec::new();
    for (k, v) in &table {
        match k.as_str() {
            "command" | "args" => {}
            k if k == command => {}
            k if GLOBAL_KEYS.contains(&k) => push_flag(&mut out, k, v)?,
            other => bail!("unknown key `{other}`"),
        }
    }
    out.push(command.clone().into());
    if let Some(args) = table.get("args") {
        let Value::Array(items) = args else { bail!("`args` must be an array") };
        for v in items {
            out.push(scalar(v)?.into());
        }
    }
    if let Some(section) = table.get(&command) {
        let Value::Table(flags) = section else { bail!("`[{command}]` must be a table") };
        for (k, v) in flags {
            push_flag(&mut out, k, v)?;
        }
    }
    Ok(out)
}

fn push_flag(out: &mut Vec<OsString>, key: &str, v: &Value) -> anyhow::Result<()> {
    let flag = format!("--{}", key.replace('_', "-"));
    match v {
        Value::Boolean(true) => out.push(flag.into()),
        Value::Boolean(false) => {}
        Value::Array(items) => {
            let parts = items.iter().map(scalar).collect::<anyhow::Result<Vec<_>>>()?;
            out.push(format!("{flag}={}", parts.join(",")).into());
        }
        v => out.push(format!("{flag}={}", scalar(v)?).into()),
    }
    Ok(())
}

fn scalar(v: &Value) -> anyhow::Result<String> {
    Ok(match v {
        Value::String(s) => s.clone(),
        Value::Integer(i) => i.to_string(),
        Value::Float(f) => f.to_string(),
        Value::Boolean(b) => b.to_string(),
        other => bail!("unsupported value {other}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands_sections_and_globals() {
        let text = r#"
            command = "index"
            seed = 7
            [index]
            model = "sphere2"
            t = [0.1, 0.5]
            lmax = 12
        "#;
        let args: Vec<String> = config_args(text).unwrap().into_iter().map(|a| a.into_string().unwrap()).collect();
        assert_eq!(args, ["--seed=7", "index", "--lmax=12", "--model=sphere2", "--t=0.1,0.5"]);
    }

    #[test]
    fn positional_args() {
        let args = config_args("command = \"classify\"\nargs = [0, 8]\n").unwrap();
        assert_eq!(args, ["classify", "0", "8"]);
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(config_args("command = \"classify\"\nbogus = 1\n").is_err());
        assert!(config_args("seed = 1\n").is_err());
    }
}
