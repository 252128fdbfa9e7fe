//! Importers from each corpus's released TSV into [`ParaphrasePair`]s.
//!
//! Only rows marked as paraphrases are kept; rows with a blank side are
//! skipped. Ids are prefixed with the corpus name.

use std::io::{BufRead, Read};

use super::{ParaphrasePair, Source};
use crate::error::{Error, Result};

/// Normalized interchange: `id<TAB>input_text<TAB>target_text[<TAB>source]`,
/// no header, blank lines ignored.
pub fn import_tsv<R: BufRead>(reader: R, default_source: Source) -> Result<Vec<ParaphrasePair>> {
    let mut out = Vec::new();
    for (n, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        let tsv_err = |message: String| Error::Tsv { line: n + 1, message };
        let source = match cols.len() {
            3 => default_source,
            4 => {
                serde_json::from_value(cols[3].into()).map_err(|_| tsv_err(format!("unknown source `{}`", cols[3])))?
            }
            k => return Err(tsv_err(format!("expected 3 or 4 columns, found {k}"))),
        };
        let pair = ParaphrasePair::new(cols[0].into(), cols[1].into(), cols[2].into(), source)
            .map_err(|e| tsv_err(e.to_string()))?;
        out.push(pair);
    }
    Ok(out)
}

/// PAWS `id sentence1 sentence2 label` with a header row.
pub fn import_paws<R: Read>(reader: R) -> Result<Vec<ParaphrasePair>> {
    import_columns(reader, false, Source::Paws, &["id", "sentence1", "sentence2", "label"], |c| {
        (format!("paws-{}", c[0]), c[3] == "1")
    })
}

/// MRPC `Quality #1 ID #2 ID #1 String #2 String` with a header row.
pub fn import_mrpc<R: Read>(reader: R) -> Result<Vec<ParaphrasePair>> {
    import_columns(reader, false, Source::Mrpc, &["#1 ID", "#2 ID", "#1 String", "#2 String", "Quality"], |c| {
        (format!("mrpc-{}-{}", c[0], c[1]), c[4] == "1")
    })
}

/// Quora question pairs, `id qid1 qid2 question1 question2 is_duplicate`,
/// with quoted fields.
pub fn import_quora<R: Read>(reader: R) -> Result<Vec<ParaphrasePair>> {
    import_columns(reader, true, Source::Quora, &["id", "question1", "question2", "is_duplicate"], |c| {
        (format!("quora-{}", c[0]), c[3] == "1")
    })
}

/// Reads the named columns; the two text columns are the ones just before
/// the last. `keep` maps the selected columns to an id and a paraphrase flag.
fn import_columns<R: Read>(
    reader: R,
    quoted: bool,
    source: Source,
    columns: &[&str],
    keep: impl Fn(&[&str]) -> (String, bool),
) -> Result<Vec<ParaphrasePair>> {
    let mut rdr = csv::ReaderBuilder::new().delimiter(b'\t').quoting(quoted).flexible(false).from_reader(reader);
    let headers = rdr.headers().map_err(csv_error)?.clone();
    let index: Vec<usize> = columns
        .iter()
        .map(|name| {
            headers
                .iter()
                .position(|h| h.trim_start_matches('\u{feff}').trim() == *name)
                .ok_or_else(|| Error::Tsv { line: 1, message: format!("missing column `{name}`") })
        })
        .collect::<Result<_>>()?;
    let (text_a, text_b) = (columns.len() - 3, columns.len() - 2);

    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(csv_error)?;
        let cells: Vec<&str> = index.iter().map(|&i| row.get(i).unwrap_or_default()).collect();
        let (id, is_paraphrase) = keep(&cells);
        if !is_paraphrase {
            continue;
        }
        if let Ok(p) = ParaphrasePair::new(id, cells[text_a].into(), cells[text_b].into(), source) {
            out.push(p);
        }
    }
    Ok(out)
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    Error::Tsv { line, message: e.to_string() }
}
