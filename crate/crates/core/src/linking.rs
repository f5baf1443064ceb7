//! Linking numbers of oriented plats, used as an invariant when checking
//! that moves do not change the link.

use serde::Serialize;

use crate::braid::BraidLetter;
use crate::error::{Error, Result};
use crate::plat::{OrientedPlat, StrandDirection};

/// Pairwise linking numbers between components, labeled as in the
/// plat's [`ComponentPartition`](crate::plat::ComponentPartition).
/// The diagonal is zero: self-crossings are not counted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkingMatrix {
    mu: usize,
    #[serde(rename = "lk")]
    entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn zero(mu: usize) -> Self {
        Self {
            mu,
            entries: vec![vec![0; mu]; mu],
        }
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Entry for one-based components `j`, `k`.
    pub fn get(&self, j: usize, k: usize) -> i64 {
        self.entries[j - 1][k - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.mu).all(|j| (0..self.mu).all(|k| self.entries[j][k] == self.entries[k][j]))
    }

    /// Reads the matrix in another labeling: entry `(j, k)` of the result
    /// is entry `(map[j], map[k])` of `self` (one-based labels).
    pub fn relabeled(&self, map: &[usize]) -> Self {
        let entries = map
            .iter()
            .map(|&a| map.iter().map(|&b| self.entries[a - 1][b - 1]).collect())
            .collect();
        Self { mu: map.len(), entries }
    }

    /// The matrix after reversing the orientation of one component.
    pub fn reversed_component(&self, component: usize) -> Self {
        let mut out = self.clone();
        let c = component - 1;
        for k in 0..self.mu {
            if k != c {
                out.entries[c][k] = -out.entries[c][k];
                out.entries[k][c] = -out.entries[k][c];
            }
        }
        out
    }
}

/// Sign of a crossing given the directions of the strands in the left and
/// right columns just above it.
pub fn crossing_sign(letter: BraidLetter, left: StrandDirection, right: StrandDirection) -> i64 {
    letter.sign.value() * left.factor() * right.factor()
}

pub fn linking_matrix(oriented: &OrientedPlat) -> Result<LinkingMatrix> {
    let plat = oriented.plat();
    let partition = oriented.partition();
    let mu = partition.mu();
    let component = |start_column: usize| partition.top_components()[start_column / 2] - 1;

    // occupant[c] is the top column where the strand now in column c began
    let mut occupant: Vec<usize> = (0..plat.strand_count()).collect();
    let mut acc = vec![vec![0i64; mu]; mu];
    for &letter in plat.word().letters() {
        let (l, r) = (letter.index - 1, letter.index);
        let (sl, sr) = (occupant[l], occupant[r]);
        let (cl, cr) = (component(sl), component(sr));
        if cl != cr {
            let s = crossing_sign(
                letter,
                oriented.strand_direction(sl + 1),
                oriented.strand_direction(sr + 1),
            );
            acc[cl][cr] += s;
            acc[cr][cl] += s;
        }
        occupant.swap(l, r);
    }
    for (j, row) in acc.iter_mut().enumerate() {
        for (k, v) in row.iter_mut().enumerate() {
            if *v % 2 != 0 {
                return Err(Error::Internal(format!(
                    "odd crossing sum {v} between components {} and {}",
                    j + 1,
                    k + 1
                )));
            }
            *v /= 2;
        }
    }
    Ok(LinkingMatrix { mu, entries: acc })
}
