//! Built-in example plats.

use platcover::{PlatPresentation, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub strands: usize,
    pub word: &'static [i64],
    pub expected_mu: usize,
    /// Linking matrix under the default orientation.
    pub expected_lk: Option<&'static [&'static [i64]]>,
}

impl CatalogEntry {
    pub fn plat(&self) -> Result<PlatPresentation> {
        PlatPresentation::from_signed(self.strands, self.word)
    }
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "unlink2",
        description: "two-component unlink, empty braid on 4 strands",
        strands: 4,
        word: &[],
        expected_mu: 2,
        expected_lk: Some(&[&[0, 0], &[0, 0]]),
    },
    CatalogEntry {
        name: "hopf",
        description: "Hopf link as the 4-plat of σ₂²",
        strands: 4,
        word: &[2, 2],
        expected_mu: 2,
        expected_lk: Some(&[&[0, -1], &[-1, 0]]),
    },
    CatalogEntry {
        name: "trefoil",
        description: "trefoil knot as the 4-plat of σ₂³",
        strands: 4,
        word: &[2, 2, 2],
        expected_mu: 1,
        expected_lk: Some(&[&[0]]),
    },
    CatalogEntry {
        name: "parity1",
        description: "unlink drawn with a twisted first cap; violates the parity condition",
        strands: 4,
        word: &[1],
        expected_mu: 2,
        expected_lk: Some(&[&[0, 0], &[0, 0]]),
    },
    CatalogEntry {
        name: "chain3",
        description: "three-component chain, 6-plat of σ₂²σ₄²",
        strands: 6,
        word: &[2, 2, 4, 4],
        expected_mu: 3,
        expected_lk: Some(&[&[0, -1, 0], &[-1, 0, -1], &[0, -1, 0]]),
    },
];

pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use platcover::{components, default_orientation, linking_matrix};

    #[test]
    fn entries_match_their_expected_invariants() {
        for entry in CATALOG {
            let plat = entry.plat().unwrap();
            assert_eq!(components(&plat).mu(), entry.expected_mu, "{}", entry.name);
            if let Some(lk) = entry.expected_lk {
                let m = linking_matrix(&default_orientation(&plat)).unwrap();
                let rows: Vec<&[i64]> = m.rows().iter().map(Vec::as_slice).collect();
                assert_eq!(rows, lk, "{}", entry.name);
            }
        }
    }

    #[test]
    fn names_are_unique() {
        for (i, a) in CATALOG.iter().enumerate() {
            assert!(CATALOG[i + 1..].iter().all(|b| b.name != a.name));
        }
        assert!(lookup("hopf").is_some());
        assert!(lookup("nope").is_none());
    }
}
