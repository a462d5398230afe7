use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

use super::{partitions_of, Partition, PartitionError};

const CACHE_VERSION: u32 = 1;

type Memo = HashMap<(Vec<u32>, Vec<u32>), i64>;

fn to_beta(parts: &[u32]) -> Vec<u32> {
    let l = parts.len() as u32;
    parts.iter().enumerate().map(|(i, &p)| p + l - 1 - i as u32).collect()
}

fn from_beta(mut beta: Vec<u32>) -> Vec<u32> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len() as u32;
    beta.iter()
        .enumerate()
        .map(|(i, &b)| b - (l - 1 - i as u32))
        .filter(|&p| p > 0)
        .collect()
}

/// Murnaghan–Nakayama on beta-sets: a rim hook of length `k` is a bead
/// sliding from `b` to `b - k`, signed by the beads it jumps.
fn mn(shape: &[u32], cycles: &[u32], memo: &mut Memo) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return i64::from(shape.is_empty());
    };
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = to_beta(shape);
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut next = beta.clone();
        next[i] = b - k;
        let v = mn(&from_beta(next), rest, memo);
        total += if jumped % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// `chi_nu(mu)`, the character of the irreducible `nu` on cycle type `mu`.
pub fn character(nu: &Partition, mu: &Partition) -> Result<i64, PartitionError> {
    if nu.size() != mu.size() {
        return Err(PartitionError::SizeMismatch(nu.size(), mu.size()));
    }
    Ok(mn(nu.parts(), mu.parts(), &mut Memo::new()))
}

/// All characters of the symmetric group on `n` letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn compute(n: u32) -> Self {
        let partitions = partitions_of(n);
        let mut memo = Memo::new();
        let values = partitions
            .iter()
            .map(|nu| partitions.iter().map(|mu| mn(nu.parts(), mu.parts(), &mut memo)).collect())
            .collect();
        Self::assemble(n, partitions, values)
    }

    fn assemble(n: u32, partitions: Vec<Partition>, values: Vec<Vec<i64>>) -> Self {
        let index = partitions.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        CharacterTable { n, partitions, index, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Partitions of `n` in the order used for rows and columns.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `chi_nu(mu)`; panics if either partition has the wrong size.
    pub fn get(&self, nu: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[nu]][self.index[mu]]
    }

    pub fn by_index(&self, nu: usize, mu: usize) -> i64 {
        self.values[nu][mu]
    }

    pub fn file_name(n: u32) -> String {
        format!("characters-v{CACHE_VERSION}-n{n}.json")
    }

    fn to_map(&self) -> BTreeMap<String, i64> {
        let mut map = BTreeMap::new();
        for (i, nu) in self.partitions.iter().enumerate() {
            for (j, mu) in self.partitions.iter().enumerate() {
                map.insert(format!("{}|{}", nu.key(), mu.key()), self.values[i][j]);
            }
        }
        map
    }

    fn from_map(n: u32, map: &BTreeMap<String, i64>) -> Option<Self> {
        let partitions = partitions_of(n);
        let mut values = Vec::with_capacity(partitions.len());
        for nu in &partitions {
            let row: Option<Vec<i64>> =
                partitions.iter().map(|mu| map.get(&format!("{}|{}", nu.key(), mu.key())).copied()).collect();
            values.push(row?);
        }
        (map.len() == partitions.len() * partitions.len()).then(|| Self::assemble(n, partitions, values))
    }

    /// Reads the table for `n` from `dir`, computing and writing it if the
    /// file is missing or unreadable.
    pub fn load_or_compute(n: u32, dir: &Path) -> Result<Self, PartitionError> {
        let path = dir.join(Self::file_name(n));
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Some(t) = serde_json::from_str(&text).ok().and_then(|m| Self::from_map(n, &m)) {
                return Ok(t);
            }
        }
        let table = Self::compute(n);
        table.write(dir)?;
        Ok(table)
    }

    /// Writes the cache file via a temporary file and rename, so concurrent
    /// writers never expose a partial file.
    pub fn write(&self, dir: &Path) -> Result<(), PartitionError> {
        let err = |e: std::io::Error| PartitionError::Cache(format!("{}: {e}", dir.display()));
        std::fs::create_dir_all(dir).map_err(err)?;
        let text = serde_json::to_string(&self.to_map()).expect("map of strings to integers serializes");
        let path = dir.join(Self::file_name(self.n));
        let tmp = dir.join(format!("{}.{}.{:?}.tmp", Self::file_name(self.n), std::process::id(), std::thread::current().id()));
        std::fs::write(&tmp, text).map_err(err)?;
        std::fs::rename(&tmp, &path).map_err(err)
    }
}

static TABLES: OnceLock<RwLock<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
static CACHE_DIR: RwLock<Option<PathBuf>> = RwLock::new(None);

/// Directory for the on-disk character cache used by [`character_table`];
/// `None` keeps tables in memory only.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.write().unwrap() = dir;
}

/// Shared, memoized character table for `n`.
///
/// Disk cache failures are not fatal here; the table is recomputed.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().unwrap().get(&n) {
        return t.clone();
    }
    let dir = CACHE_DIR.read().unwrap().clone();
    let table = match dir {
        Some(d) => CharacterTable::load_or_compute(n, &d).unwrap_or_else(|_| CharacterTable::compute(n)),
        None => CharacterTable::compute(n),
    };
    let table = Arc::new(table);
    tables.write().unwrap().entry(n).or_insert(table).clone()
}
