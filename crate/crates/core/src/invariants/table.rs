use std::fmt::Display;
use std::ops::AddAssign;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::WalkPowers;
use crate::scalar::Semiring;

/// The Mersenne prime `2^61 - 1`.
pub const DEFAULT_MODULUS: u64 = (1 << 61) - 1;

/// Closed-walk counts `d[k][i] = (A^k)_ii` for `k = 1..=kmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable<T> {
    n: usize,
    kmax: usize,
    /// `d[k - 1][i]`
    d: Vec<Vec<T>>,
}

impl<T> InvariantTable<T> {
    /// Builds a table from rows indexed by power (`rows[k - 1][i]`).
    pub fn from_rows(n: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        for row in &rows {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    actual: row.len(),
                });
            }
        }
        Ok(InvariantTable {
            n,
            kmax: rows.len(),
            d: rows,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }

    /// `(A^k)_ii` for `1 <= k <= kmax`.
    pub fn get(&self, k: usize, i: usize) -> &T {
        &self.d[k - 1][i]
    }

    /// Values of all vertices at power `k`.
    pub fn power(&self, k: usize) -> &[T] {
        &self.d[k - 1]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.d
    }

    /// The table restricted to powers `1..=kmax`.
    pub fn truncated(&self, kmax: usize) -> Self
    where
        T: Clone,
    {
        InvariantTable {
            n: self.n,
            kmax: kmax.min(self.kmax),
            d: self.d[..kmax.min(self.kmax)].to_vec(),
        }
    }
}

impl<T: Clone> InvariantTable<T> {
    /// `(d[1][i], ..., d[kmax][i])`.
    pub fn vertex_vector(&self, i: usize) -> Vec<T> {
        self.d.iter().map(|row| row[i].clone()).collect()
    }

    pub fn vertex_vectors(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| self.vertex_vector(i)).collect()
    }
}

/// Exact diagonal walk table of `g` up to power `kmax`.
pub fn walk_diagonal_table<T>(g: &Graph, kmax: usize) -> Result<InvariantTable<T>>
where
    T: Semiring + for<'a> AddAssign<&'a T> + Send + Sync,
{
    if kmax == 0 {
        return Err(Error::InvalidArgument("kmax must be at least 1".into()));
    }
    let n = g.n();
    let d = WalkPowers::<T>::new(g)
        .take(kmax)
        .map(|m| (0..n).map(|i| m[i * n + i].clone()).collect())
        .collect();
    Ok(InvariantTable { n, kmax, d })
}

/// Walk table with every entry reduced modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularTable {
    modulus: u64,
    table: InvariantTable<u64>,
}

impl ModularTable {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn table(&self) -> &InvariantTable<u64> {
        &self.table
    }
}

/// Same walk counts as [`walk_diagonal_table`], computed entirely in
/// `Z / modulus`.
pub fn walk_diagonal_table_mod(g: &Graph, kmax: usize, modulus: u64) -> Result<ModularTable> {
    if modulus < 2 {
        return Err(Error::InvalidArgument(format!(
            "modulus must be at least 2, got {modulus}"
        )));
    }
    if kmax == 0 {
        return Err(Error::InvalidArgument("kmax must be at least 1".into()));
    }
    let n = g.n();
    let m = modulus as u128;
    let neighbors: Vec<Vec<usize>> = (0..n).map(|i| g.neighbors(i).collect()).collect();
    let mut cur = vec![0u64; n * n];
    for (i, j) in g.edges() {
        cur[i * n + j] = 1 % modulus;
        cur[j * n + i] = 1 % modulus;
    }
    let mut d = Vec::with_capacity(kmax);
    d.push((0..n).map(|i| cur[i * n + i]).collect::<Vec<u64>>());
    for _ in 1..kmax {
        let mut next = vec![0u64; n * n];
        if n > 0 {
            next.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
                let src = &cur[i * n..(i + 1) * n];
                for (j, out) in row.iter_mut().enumerate() {
                    // n terms below 2^64 fit in u128 for any n <= 2^16
                    let s: u128 = neighbors[j].iter().map(|&l| src[l] as u128).sum();
                    *out = (s % m) as u64;
                }
            });
        }
        d.push((0..n).map(|i| next[i * n + i]).collect());
        cur = next;
    }
    Ok(ModularTable {
        modulus,
        table: InvariantTable { n, kmax, d },
    })
}

#[derive(Serialize, Deserialize)]
struct Header {
    n: usize,
    kmax: usize,
    modulus: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    header: Header,
    d: Vec<Vec<String>>,
}

fn to_json<T: Display>(t: &InvariantTable<T>, modulus: Option<u64>) -> TableJson {
    TableJson {
        header: Header {
            n: t.n,
            kmax: t.kmax,
            modulus: modulus.map(|m| m.to_string()),
        },
        d: t.d
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect(),
    }
}

fn from_json<T: FromStr>(j: TableJson) -> std::result::Result<InvariantTable<T>, String> {
    if j.d.len() != j.header.kmax {
        return Err(format!(
            "header kmax {} but {} rows",
            j.header.kmax,
            j.d.len()
        ));
    }
    let rows =
        j.d.into_iter()
            .map(|row| {
                row.iter()
                    .map(|s| {
                        s.parse::<T>()
                            .map_err(|_| format!("`{s}` is not a valid entry"))
                    })
                    .collect::<std::result::Result<Vec<T>, String>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
    InvariantTable::from_rows(j.header.n, rows).map_err(|e| e.to_string())
}

/// `{"header": {"n", "kmax", "modulus": null}, "d": [[..], ..]}` with one
/// row per power and entries as decimal strings.
impl<T: Display> Serialize for InvariantTable<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        to_json(self, None).serialize(s)
    }
}

impl<'de, T: FromStr> Deserialize<'de> for InvariantTable<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableJson::deserialize(d)?;
        if j.header.modulus.is_some() {
            return Err(serde::de::Error::custom(
                "expected an exact table, found a modular one",
            ));
        }
        from_json(j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for ModularTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        to_json(&self.table, Some(self.modulus)).serialize(s)
    }
}
