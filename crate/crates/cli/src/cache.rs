//! On-disk memo of imaginary quadratic class numbers.
//!
//! When `NEWFORM_CACHE_DIR` is set, `class_numbers.txt` in that directory is
//! read before a command runs and rewritten afterwards. Each line is
//! `d=h` for a negative fundamental discriminant `d`; blank lines and lines
//! starting with `#` are ignored.

use std::fs;
use std::io;
use std::path::PathBuf;

use newform_trace::quadratic::{cached_class_numbers, preload_class_numbers};

pub const ENV_VAR: &str = "NEWFORM_CACHE_DIR";
const FILE_NAME: &str = "class_numbers.txt";

fn cache_path() -> Option<PathBuf> {
    std::env::var_os(ENV_VAR).map(|dir| PathBuf::from(dir).join(FILE_NAME))
}

pub fn parse(text: &str) -> Vec<(i64, u64)> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .filter_map(|line| {
            let (d, h) = line.split_once('=')?;
            Some((d.trim().parse().ok()?, h.trim().parse().ok()?))
        })
        .collect()
}

pub fn render(entries: &[(i64, u64)]) -> String {
    let mut out = String::from("# class numbers h(d) of imaginary quadratic fields, d=h\n");
    for (d, h) in entries {
        out.push_str(&format!("{d}={h}\n"));
    }
    out
}

pub fn load() -> io::Result<()> {
    let Some(path) = cache_path() else {
        return Ok(());
    };
    match fs::read_to_string(&path) {
        Ok(text) => {
            preload_class_numbers(parse(&text));
            Ok(())
        }
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(()),
        Err(e) => Err(e),
    }
}

pub fn store() -> io::Result<()> {
    let Some(path) = cache_path() else {
        return Ok(());
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, render(&cached_class_numbers()))
}
