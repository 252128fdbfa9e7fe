//! Line-delimited JSON with 1-based line numbers in errors.

use std::io::{BufRead, Write};

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};

/// Parses one value per non-blank line.
pub fn read<T: DeserializeOwned, R: BufRead>(reader: R) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for (n, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|source| Error::Json { line: n + 1, source })?);
    }
    Ok(out)
}

pub fn from_str<T: DeserializeOwned>(text: &str) -> Result<Vec<T>> {
    read(text.as_bytes())
}

pub fn write<T: Serialize, W: Write>(mut writer: W, values: &[T]) -> Result<()> {
    for v in values {
        serde_json::to_writer(&mut writer, v).map_err(|source| Error::Json { line: 0, source })?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}

pub fn to_string<T: Serialize>(values: &[T]) -> Result<String> {
    let mut buf = Vec::new();
    write(&mut buf, values)?;
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}
