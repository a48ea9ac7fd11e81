//! Corpus persistence and the process-wide corpus cache.
//!
//! On disk a corpus directory holds `index.txt` with one line
//! `order=N mode=M count=K` per stored corpus, and one `sgp_N_<hash>.sgp`
//! file per canonical table. Iso and equiv corpora of the same order share
//! files where their representatives coincide.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::{enumerate_semigroups, SmallsemiError};
use crate::algebra::{canonical_form, parse_sgp, table_hash, to_sgp, CanonicalMode, FiniteSemigroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub order: usize,
    pub mode: CanonicalMode,
    pub entries: Vec<FiniteSemigroup>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub order: usize,
    pub mode: String,
    pub count: usize,
}

impl Corpus {
    pub fn summary(&self) -> CorpusSummary {
        CorpusSummary { order: self.order, mode: self.mode.to_string(), count: self.entries.len() }
    }
}

const INDEX: &str = "index.txt";

fn io_err(path: &Path, source: std::io::Error) -> SmallsemiError {
    SmallsemiError::Io { path: path.display().to_string(), message: source.to_string() }
}

fn entry_path(dir: &Path, s: &FiniteSemigroup) -> PathBuf {
    let bytes: Vec<u8> = s.table().iter().map(|&c| c as u8).collect();
    let hash = table_hash(&bytes);
    dir.join(format!("sgp_{}_{hash}.sgp", s.order()))
}

/// Index lines as `(order, mode, count)`.
pub fn read_index(dir: &Path) -> Result<Vec<(usize, CanonicalMode, usize)>, SmallsemiError> {
    let path = dir.join(INDEX);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(io_err(&path, e)),
    };
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad =
            || SmallsemiError::Corpus(format!("{}:{}: malformed index line `{line}`", path.display(), lineno + 1));
        let mut order = None;
        let mut mode = None;
        let mut count = None;
        for field in line.split_whitespace() {
            let (key, value) = field.split_once('=').ok_or_else(bad)?;
            match key {
                "order" => order = Some(value.parse().map_err(|_| bad())?),
                "mode" => mode = Some(value.parse().map_err(|_| bad())?),
                "count" => count = Some(value.parse().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        match (order, mode, count) {
            (Some(o), Some(m), Some(c)) => out.push((o, m, c)),
            _ => return Err(bad()),
        }
    }
    Ok(out)
}

pub fn save_corpus(corpus: &Corpus, dir: &Path) -> Result<(), SmallsemiError> {
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    for s in &corpus.entries {
        let path = entry_path(dir, s);
        fs::write(&path, to_sgp(s)).map_err(|e| io_err(&path, e))?;
    }
    let mut index = read_index(dir)?;
    index.retain(|&(o, m, _)| !(o == corpus.order && m == corpus.mode));
    index.push((corpus.order, corpus.mode, corpus.entries.len()));
    index.sort_by_key(|&(o, m, _)| (o, m.as_str()));
    let text: String = index.iter().map(|(o, m, c)| format!("order={o} mode={m} count={c}\n")).collect();
    let path = dir.join(INDEX);
    fs::write(&path, text).map_err(|e| io_err(&path, e))
}

/// Loads a stored corpus, or `None` when the index has no line for it.
pub fn load_corpus(dir: &Path, order: usize, mode: CanonicalMode) -> Result<Option<Corpus>, SmallsemiError> {
    let Some(&(_, _, count)) = read_index(dir)?.iter().find(|&&(o, m, _)| o == order && m == mode) else {
        return Ok(None);
    };
    let prefix = format!("sgp_{order}_");
    let mut entries = Vec::new();
    for item in fs::read_dir(dir).map_err(|e| io_err(dir, e))? {
        let path = item.map_err(|e| io_err(dir, e))?.path();
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
        if !name.starts_with(&prefix) || !name.ends_with(".sgp") {
            continue;
        }
        let text = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
        let s = parse_sgp(&text).map_err(|e| SmallsemiError::Corpus(format!("{}: {e}", path.display())))?;
        let canon = canonical_form(&s, mode)?;
        if canon.bytes().iter().map(|&b| usize::from(b)).eq(s.table().iter().copied()) {
            entries.push(s);
        }
    }
    entries.sort_by(|a, b| a.table().cmp(b.table()));
    if entries.len() != count {
        return Err(SmallsemiError::Corpus(format!(
            "{}: index says {count} semigroups of order {order} ({mode}), found {}",
            dir.display(),
            entries.len()
        )));
    }
    Ok(Some(Corpus { order, mode, entries }))
}

type Cache = Mutex<HashMap<(usize, CanonicalMode), Arc<Corpus>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Where batteries get their corpora: memory first, then the directory if
/// one is given, then fresh enumeration (saved back to the directory).
#[derive(Clone, Debug, Default)]
pub struct CorpusSource {
    pub dir: Option<PathBuf>,
}

impl CorpusSource {
    pub fn in_memory() -> Self {
        CorpusSource { dir: None }
    }

    pub fn on_disk(dir: impl Into<PathBuf>) -> Self {
        CorpusSource { dir: Some(dir.into()) }
    }

    pub fn get(&self, order: usize, mode: CanonicalMode) -> Result<Arc<Corpus>, SmallsemiError> {
        if let Some(c) = cache().lock().expect("corpus cache").get(&(order, mode)) {
            return Ok(Arc::clone(c));
        }
        let corpus = match &self.dir {
            Some(dir) => match load_corpus(dir, order, mode)? {
                Some(c) => c,
                None => {
                    let c = enumerate_semigroups(order, mode)?;
                    save_corpus(&c, dir)?;
                    c
                }
            },
            None => enumerate_semigroups(order, mode)?,
        };
        let corpus = Arc::new(corpus);
        cache().lock().expect("corpus cache").insert((order, mode), Arc::clone(&corpus));
        Ok(corpus)
    }

    /// Every iso-mode entry of order `1..=max_order`, smallest order first.
    pub fn up_to(&self, max_order: usize) -> Result<Vec<FiniteSemigroup>, SmallsemiError> {
        let mut out = Vec::new();
        for n in 1..=max_order {
            out.extend(self.get(n, CanonicalMode::Isomorphism)?.entries.iter().cloned());
        }
        Ok(out)
    }
}
