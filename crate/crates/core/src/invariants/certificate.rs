use std::fmt::Display;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::InvariantTable;
use crate::graph::Permutation;

/// Per-vertex walk vectors in ascending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<T> {
    rows: Vec<Vec<T>>,
    /// `order[pos]` is the original vertex whose vector sits at `rows[pos]`.
    order: Permutation,
}

impl<T> Certificate<T> {
    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn order(&self) -> &Permutation {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn kmax(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

/// Sorts the table's vertex vectors; ties keep ascending vertex order.
pub fn certificate<T: Ord + Clone>(t: &InvariantTable<T>) -> Certificate<T> {
    let vectors = t.vertex_vectors();
    let mut order: Vec<usize> = (0..t.n()).collect();
    order.sort_by(|&a, &b| vectors[a].cmp(&vectors[b]));
    let rows = order.iter().map(|&i| vectors[i].clone()).collect();
    Certificate {
        rows,
        order: Permutation::new(order).expect("sorted indices form a permutation"),
    }
}

/// Where two certificates first disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mismatch", rename_all = "snake_case")]
pub enum Difference {
    /// Vertex counts or `kmax` differ.
    Shape,
    /// First differing sorted row, and the first differing power (1-based)
    /// within it.
    Row { row: usize, power: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateComparison {
    Equal,
    Distinct(Difference),
}

impl CertificateComparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, CertificateComparison::Equal)
    }
}

pub fn compare_certificates<T: PartialEq>(
    a: &Certificate<T>,
    b: &Certificate<T>,
) -> CertificateComparison {
    if a.n() != b.n() || a.kmax() != b.kmax() {
        return CertificateComparison::Distinct(Difference::Shape);
    }
    for (row, (ra, rb)) in a.rows.iter().zip(&b.rows).enumerate() {
        if let Some(k) = ra.iter().zip(rb).position(|(x, y)| x != y) {
            return CertificateComparison::Distinct(Difference::Row { row, power: k + 1 });
        }
    }
    CertificateComparison::Equal
}

/// `{"rows": [[..], ..], "order": [..]}`, entries as decimal strings.
impl<T: Display> Serialize for Certificate<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let mut st = s.serialize_struct("Certificate", 2)?;
        st.serialize_field("rows", &rows)?;
        st.serialize_field("order", self.order.as_slice())?;
        st.end()
    }
}
