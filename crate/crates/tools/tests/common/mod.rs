#![allow(dead_code)]

use std::path::{Path, PathBuf};

use ehrhart_core::HalfSpaceSpec;
use ehrhart_tools::{parse_polytope_file, ParseOptions};

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "poly"))
        .collect();
    files.sort();
    files
}

/// The negative examples: not Delzant, not simple.
pub const BROKEN: [&str; 2] = ["triangle_det2", "square_pyramid"];

pub fn load(path: &Path) -> HalfSpaceSpec {
    let text = std::fs::read_to_string(path).unwrap();
    parse_polytope_file(&text, ParseOptions::default()).unwrap()
}

pub fn delzant_files() -> Vec<PathBuf> {
    corpus_files()
        .into_iter()
        .filter(|p| !BROKEN.contains(&p.file_stem().unwrap().to_str().unwrap()))
        .collect()
}

pub fn corpus_file(name: &str) -> PathBuf {
    corpus_dir().join(format!("{name}.poly"))
}
