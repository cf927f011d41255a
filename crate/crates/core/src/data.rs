//! Embedded data files: CHEVIE root orderings, printed string tables,
//! elementary-orbit tables and the special-case registry.
//!
//! Every file is checked against a SHA-256 manifest when loaded. Setting
//! `ORBITKIT_DATA` to a directory replaces the embedded copies; that
//! directory must carry its own `MANIFEST.sha256`.

use std::borrow::Cow;
use std::collections::HashMap;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystemSpec};

/// Environment variable naming an override data directory.
pub const DATA_ENV: &str = "ORBITKIT_DATA";

const MANIFEST: &str = include_str!("../data/MANIFEST.sha256");

const EMBEDDED: &[(&str, &str)] = &[
    ("chevie/A2.txt", include_str!("../data/chevie/A2.txt")),
    ("chevie/A3.txt", include_str!("../data/chevie/A3.txt")),
    ("chevie/A4.txt", include_str!("../data/chevie/A4.txt")),
    ("chevie/A5.txt", include_str!("../data/chevie/A5.txt")),
    ("chevie/A6.txt", include_str!("../data/chevie/A6.txt")),
    ("chevie/A7.txt", include_str!("../data/chevie/A7.txt")),
    ("chevie/B2.txt", include_str!("../data/chevie/B2.txt")),
    ("chevie/B3.txt", include_str!("../data/chevie/B3.txt")),
    ("chevie/B4.txt", include_str!("../data/chevie/B4.txt")),
    ("chevie/B5.txt", include_str!("../data/chevie/B5.txt")),
    ("chevie/B6.txt", include_str!("../data/chevie/B6.txt")),
    ("chevie/B7.txt", include_str!("../data/chevie/B7.txt")),
    ("chevie/C2.txt", include_str!("../data/chevie/C2.txt")),
    ("chevie/C3.txt", include_str!("../data/chevie/C3.txt")),
    ("chevie/C4.txt", include_str!("../data/chevie/C4.txt")),
    ("chevie/C5.txt", include_str!("../data/chevie/C5.txt")),
    ("chevie/C6.txt", include_str!("../data/chevie/C6.txt")),
    ("chevie/C7.txt", include_str!("../data/chevie/C7.txt")),
    ("chevie/D4.txt", include_str!("../data/chevie/D4.txt")),
    ("chevie/D5.txt", include_str!("../data/chevie/D5.txt")),
    ("chevie/D6.txt", include_str!("../data/chevie/D6.txt")),
    ("chevie/D7.txt", include_str!("../data/chevie/D7.txt")),
    ("chevie/D8.txt", include_str!("../data/chevie/D8.txt")),
    ("elementary.txt", include_str!("../data/elementary.txt")),
    ("elementary_extensive.txt", include_str!("../data/elementary_extensive.txt")),
    ("registry.json", include_str!("../data/registry.json")),
    ("tables/dim2/A2.txt", include_str!("../data/tables/dim2/A2.txt")),
    ("tables/dim2/A3.txt", include_str!("../data/tables/dim2/A3.txt")),
    ("tables/dim2/B2.txt", include_str!("../data/tables/dim2/B2.txt")),
    ("tables/dim2/B3.txt", include_str!("../data/tables/dim2/B3.txt")),
    ("tables/dim2/C3.txt", include_str!("../data/tables/dim2/C3.txt")),
    ("tables/dim2/D4.txt", include_str!("../data/tables/dim2/D4.txt")),
    ("tables/dim4/A2.txt", include_str!("../data/tables/dim4/A2.txt")),
    ("tables/dim4/A3.txt", include_str!("../data/tables/dim4/A3.txt")),
    ("tables/dim4/A4.txt", include_str!("../data/tables/dim4/A4.txt")),
    ("tables/dim4/A5.txt", include_str!("../data/tables/dim4/A5.txt")),
    ("tables/dim4/B2.txt", include_str!("../data/tables/dim4/B2.txt")),
    ("tables/dim4/B3.txt", include_str!("../data/tables/dim4/B3.txt")),
    ("tables/dim4/B4.txt", include_str!("../data/tables/dim4/B4.txt")),
    ("tables/dim4/B5.txt", include_str!("../data/tables/dim4/B5.txt")),
    ("tables/dim4/C2.txt", include_str!("../data/tables/dim4/C2.txt")),
    ("tables/dim4/C3.txt", include_str!("../data/tables/dim4/C3.txt")),
    ("tables/dim4/C4.txt", include_str!("../data/tables/dim4/C4.txt")),
    ("tables/dim4/C5.txt", include_str!("../data/tables/dim4/C5.txt")),
    ("tables/dim4/D4.txt", include_str!("../data/tables/dim4/D4.txt")),
    ("tables/dim4/D5.txt", include_str!("../data/tables/dim4/D5.txt")),
    ("tables/dim4/D6.txt", include_str!("../data/tables/dim4/D6.txt")),
    ("tables/dim6/A2.txt", include_str!("../data/tables/dim6/A2.txt")),
    ("tables/dim6/A3.txt", include_str!("../data/tables/dim6/A3.txt")),
    ("tables/dim6/A4.txt", include_str!("../data/tables/dim6/A4.txt")),
    ("tables/dim6/A5.txt", include_str!("../data/tables/dim6/A5.txt")),
    ("tables/dim6/A6.txt", include_str!("../data/tables/dim6/A6.txt")),
    ("tables/dim6/A7.txt", include_str!("../data/tables/dim6/A7.txt")),
    ("tables/dim6/B2.txt", include_str!("../data/tables/dim6/B2.txt")),
    ("tables/dim6/B3.txt", include_str!("../data/tables/dim6/B3.txt")),
    ("tables/dim6/B4.txt", include_str!("../data/tables/dim6/B4.txt")),
    ("tables/dim6/B5.txt", include_str!("../data/tables/dim6/B5.txt")),
    ("tables/dim6/B6.txt", include_str!("../data/tables/dim6/B6.txt")),
    ("tables/dim6/B7.txt", include_str!("../data/tables/dim6/B7.txt")),
    ("tables/dim6/C2.txt", include_str!("../data/tables/dim6/C2.txt")),
    ("tables/dim6/C3.txt", include_str!("../data/tables/dim6/C3.txt")),
    ("tables/dim6/C4.txt", include_str!("../data/tables/dim6/C4.txt")),
    ("tables/dim6/C5.txt", include_str!("../data/tables/dim6/C5.txt")),
    ("tables/dim6/C6.txt", include_str!("../data/tables/dim6/C6.txt")),
    ("tables/dim6/C7.txt", include_str!("../data/tables/dim6/C7.txt")),
    ("tables/dim6/D4.txt", include_str!("../data/tables/dim6/D4.txt")),
    ("tables/dim6/D5.txt", include_str!("../data/tables/dim6/D5.txt")),
    ("tables/dim6/D6.txt", include_str!("../data/tables/dim6/D6.txt")),
    ("tables/dim6/D7.txt", include_str!("../data/tables/dim6/D7.txt")),
    ("tables/dim6/D8.txt", include_str!("../data/tables/dim6/D8.txt")),
];

fn parse_manifest(text: &str) -> HashMap<String, String> {
    text.lines()
        .filter_map(|l| {
            let mut it = l.split_whitespace();
            let sum = it.next()?;
            let path = it.next()?;
            Some((path.trim_start_matches('*').to_string(), sum.to_lowercase()))
        })
        .collect()
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn verify(path: &str, content: &str, manifest: &HashMap<String, String>) -> Result<()> {
    match manifest.get(path) {
        Some(sum) if *sum == sha256_hex(content.as_bytes()) => Ok(()),
        Some(_) => Err(Error::Checksum(path.to_string())),
        None => Err(Error::Data(format!("{path} missing from manifest"))),
    }
}

/// The override directory, if `ORBITKIT_DATA` is set.
pub fn override_dir() -> Option<PathBuf> {
    std::env::var_os(DATA_ENV).map(PathBuf::from)
}

/// Load a data file by its path relative to the data root, verifying its checksum.
pub fn load(path: &str) -> Result<Cow<'static, str>> {
    if let Some(dir) = override_dir() {
        let manifest = std::fs::read_to_string(dir.join("MANIFEST.sha256"))?;
        let content = std::fs::read_to_string(dir.join(path))?;
        verify(path, &content, &parse_manifest(&manifest))?;
        return Ok(Cow::Owned(content));
    }
    let content = EMBEDDED
        .iter()
        .find(|(p, _)| *p == path)
        .map(|(_, c)| *c)
        .ok_or_else(|| Error::Data(format!("no embedded file {path}")))?;
    verify(path, content, &parse_manifest(MANIFEST))?;
    Ok(Cow::Borrowed(content))
}

/// Like [`load`], but a missing file yields `None`.
pub fn try_load(path: &str) -> Result<Option<Cow<'static, str>>> {
    match load(path) {
        Ok(c) => Ok(Some(c)),
        Err(Error::Data(_)) => Ok(None),
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(e),
    }
}

/// Paths of all embedded files.
pub fn embedded_paths() -> impl Iterator<Item = &'static str> {
    EMBEDDED.iter().map(|(p, _)| *p)
}

/// Text of the CHEVIE ordering for a system, if tabulated.
pub fn chevie_table(spec: RootSystemSpec) -> Result<Option<Cow<'static, str>>> {
    try_load(&format!("chevie/{}.txt", spec.name()))
}

/// Printed classification strings for `(spec, dim)`, padded with `I` to full length.
///
/// C_2 has no table of its own; it shares the B_2 layout.
pub fn paper_strings(spec: RootSystemSpec, dim: usize) -> Result<Option<Vec<String>>> {
    let lookup = if spec.family == Family::C && spec.rank == 2 {
        RootSystemSpec { family: Family::B, rank: 2 }
    } else {
        spec
    };
    let Some(text) = try_load(&format!("tables/dim{dim}/{}.txt", lookup.name()))? else {
        return Ok(None);
    };
    let len = spec.num_positive_roots();
    let mut out = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if line.len() > len {
            return Err(Error::Data(format!("string {line} longer than {len}")));
        }
        out.push(format!("{line:I<len$}"));
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_covers_embedded_files() {
        let m = parse_manifest(MANIFEST);
        assert_eq!(m.len(), EMBEDDED.len());
        for (p, c) in EMBEDDED {
            verify(p, c, &m).unwrap();
        }
    }

    #[test]
    fn tampered_content_is_rejected() {
        let m = parse_manifest(MANIFEST);
        assert!(matches!(verify("chevie/A2.txt", "A 2\n", &m), Err(Error::Checksum(_))));
    }
}
