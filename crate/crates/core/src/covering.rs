//! Branched cyclic coverings: monodromy weights, the hierarchy of cyclic
//! covering classes, surface covers of the sphere branched over weighted
//! points, and the genus and bridge-number bounds derived from them.
//!
//! A `p`-fold cyclic covering sends the meridian of a branch locus with
//! weight `c` to `(1 2 … p)^c`. Weights live in `Z_p ∖ {0}` and are stored
//! as their representatives in `1..p`.

use std::collections::VecDeque;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::plat::{is_condition1, is_condition2, ComponentPartition, PlatPresentation};

fn check_degree(p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidCovering(format!("covering degree {p} is below 2")));
    }
    Ok(())
}

fn reduce_weights(p: u64, weights: &[i64]) -> Result<Vec<u64>> {
    weights
        .iter()
        .map(|&w| {
            let c = w.rem_euclid(p as i64) as u64;
            if c == 0 {
                Err(Error::InvalidCovering(format!("weight {w} is zero mod {p}")))
            } else {
                Ok(c)
            }
        })
        .collect()
}

fn gcd_all(p: u64, weights: &[u64]) -> u64 {
    weights.iter().fold(p, |g, &c| g.gcd(&c))
}

/// Degree and per-component weights of a cyclic covering of a link.
///
/// The weights must generate `Z_p`, otherwise the covering would not be
/// connected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonodromyAssignment {
    p: u64,
    weights: Vec<u64>,
}

impl MonodromyAssignment {
    pub fn new(p: u64, weights: &[i64]) -> Result<Self> {
        check_degree(p)?;
        if weights.is_empty() {
            return Err(Error::InvalidCovering("no component weights".into()));
        }
        let weights = reduce_weights(p, weights)?;
        if gcd_all(p, &weights) != 1 {
            return Err(Error::InvalidCovering(format!(
                "weights {weights:?} do not generate Z_{p}"
            )));
        }
        Ok(Self { p, weights })
    }

    pub fn degree(&self) -> u64 {
        self.p
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn component_count(&self) -> usize {
        self.weights.len()
    }

    /// Multiplies every weight by `unit`, giving an equivalent covering.
    pub fn rescaled(&self, unit: u64) -> Result<Self> {
        if unit.gcd(&self.p) != 1 {
            return Err(Error::InvalidCovering(format!("{unit} is not a unit mod {}", self.p)));
        }
        let weights: Vec<i64> = self.weights.iter().map(|&c| ((c * unit) % self.p) as i64).collect();
        Self::new(self.p, &weights)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoveringClassification {
    pub strictly_cyclic: bool,
    pub almost_strictly_cyclic: bool,
    pub meridian_cyclic: bool,
    pub singly_cyclic: bool,
    pub monodromy_cyclic: bool,
}

impl CoveringClassification {
    pub fn flags(&self) -> [bool; 5] {
        [
            self.strictly_cyclic,
            self.almost_strictly_cyclic,
            self.meridian_cyclic,
            self.singly_cyclic,
            self.monodromy_cyclic,
        ]
    }

    /// Name of the finest class the covering belongs to.
    pub fn finest(&self) -> &'static str {
        if self.strictly_cyclic {
            "strictly-cyclic"
        } else if self.almost_strictly_cyclic {
            "almost-strictly-cyclic"
        } else if self.meridian_cyclic {
            "meridian-cyclic"
        } else if self.singly_cyclic {
            "singly-cyclic"
        } else if self.monodromy_cyclic {
            "monodromy-cyclic"
        } else {
            "none"
        }
    }

    /// `strictly ⇒ almost ⇒ meridian ⇒ singly ⇒ monodromy`.
    pub fn chain_holds(&self) -> bool {
        self.flags().windows(2).all(|w| !w[0] || w[1])
    }
}

/// All five flags are reported; for the meridian and singly-cyclic tests
/// the gcd is taken against the covering degree `p`.
pub fn classify(a: &MonodromyAssignment) -> CoveringClassification {
    let p = a.p;
    let c = &a.weights;
    let first = c[0];
    CoveringClassification {
        strictly_cyclic: c.iter().all(|&x| x == first),
        almost_strictly_cyclic: c.iter().all(|&x| x == first || x == p - first),
        meridian_cyclic: c.iter().all(|&x| x.gcd(&p) == 1),
        singly_cyclic: c.iter().any(|&x| x.gcd(&p) == 1),
        monodromy_cyclic: gcd_all(p, c) == 1,
    }
}

/// Weighted branch points of a `p`-fold cyclic cover of the sphere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchData {
    p: u64,
    weights: Vec<u64>,
}

impl BranchData {
    /// Requires the weights to generate `Z_p` and to sum to zero mod `p`.
    pub fn new(p: u64, weights: &[i64]) -> Result<Self> {
        let b = Self::new_unchecked(p, weights)?;
        if !b.generates() {
            return Err(Error::InvalidCovering(format!(
                "branch weights {:?} do not generate Z_{p}",
                b.weights
            )));
        }
        if !b.is_balanced() {
            return Err(Error::InvalidCovering(format!(
                "branch weights {:?} do not sum to 0 mod {p}",
                b.weights
            )));
        }
        Ok(b)
    }

    /// Skips the generation and zero-sum checks; weights must still be
    /// nonzero mod `p`.
    pub fn new_unchecked(p: u64, weights: &[i64]) -> Result<Self> {
        check_degree(p)?;
        Ok(Self {
            p,
            weights: reduce_weights(p, weights)?,
        })
    }

    pub fn degree(&self) -> u64 {
        self.p
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn point_count(&self) -> usize {
        self.weights.len()
    }

    pub fn generates(&self) -> bool {
        gcd_all(self.p, &self.weights) == 1
    }

    pub fn is_balanced(&self) -> bool {
        self.weights.iter().sum::<u64>() % self.p == 0
    }
}

/// The image of each branch point's meridian in the symmetric group on
/// the `p` sheets (zero-based).
pub fn monodromy_rep(b: &BranchData) -> Vec<Permutation> {
    b.weights
        .iter()
        .map(|&c| Permutation::cycle_power(b.p as usize, c as usize))
        .collect()
}

fn orbit_of_first_sheet(gens: &[Permutation], size: usize) -> Vec<bool> {
    let mut seen = vec![false; size];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Whether the monodromy group acts transitively on the sheets.
pub fn is_connected_cover(b: &BranchData) -> bool {
    let orbit = orbit_of_first_sheet(&monodromy_rep(b), b.p as usize);
    let transitive = orbit.iter().all(|&x| x);
    assert_eq!(transitive, b.generates(), "orbit test disagrees with gcd test");
    transitive
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceCoveringReport {
    pub chi: i64,
    pub genus: i64,
    pub fiber_sizes: Vec<u64>,
    pub connected: bool,
}

/// Euler characteristic and genus of the covering surface,
/// `χ = 2p − Np + Σ gcd(p, c_k)`.
///
/// The result is cross-checked against `p(2 − N) + Σ_k #cycles(m_k)`
/// computed from the monodromy permutations.
pub fn euler_characteristic(b: &BranchData) -> Result<SurfaceCoveringReport> {
    if !b.generates() || !b.is_balanced() {
        return Err(Error::Precondition(format!(
            "branch data {:?} over Z_{} is not admissible",
            b.weights, b.p
        )));
    }
    let p = b.p as i64;
    let n = b.weights.len() as i64;
    let fiber_sizes: Vec<u64> = b.weights.iter().map(|&c| c.gcd(&b.p)).collect();
    let chi = 2 * p - n * p + fiber_sizes.iter().sum::<u64>() as i64;

    let cycles: usize = monodromy_rep(b).iter().map(Permutation::cycle_count).sum();
    let oracle = p * (2 - n) + cycles as i64;
    if chi != oracle {
        return Err(Error::Internal(format!(
            "chi {chi} disagrees with cycle count {oracle}"
        )));
    }
    if chi % 2 != 0 || chi > 2 {
        return Err(Error::Internal(format!(
            "chi {chi} is not the Euler characteristic of a closed surface"
        )));
    }
    Ok(SurfaceCoveringReport {
        chi,
        genus: (2 - chi) / 2,
        fiber_sizes,
        connected: is_connected_cover(b),
    })
}

/// Branch points `A_1, B_1, …, A_b, B_b` on the boundary sphere of the top
/// ball of a special plat, weighted `c` and `p − c` by the component of
/// the corresponding top arc.
pub fn branch_data_from_special_plat(
    plat: &PlatPresentation,
    partition: &ComponentPartition,
    a: &MonodromyAssignment,
) -> Result<BranchData> {
    if !is_condition1(plat, partition) || !is_condition2(plat) {
        return Err(Error::Precondition(format!("plat {plat} is not special")));
    }
    if a.component_count() != partition.mu() {
        return Err(Error::SizeMismatch {
            expected: partition.mu(),
            actual: a.component_count(),
        });
    }
    let weights: Vec<i64> = partition
        .top_components()
        .iter()
        .flat_map(|&j| {
            let c = a.weights[j - 1];
            [c as i64, (a.p - c) as i64]
        })
        .collect();
    BranchData::new(a.p, &weights)
}

/// Genus `1 − p + bp − Σ gcd(p, c_h)` of the Heegaard surface built from a
/// `2b`-plat whose top arcs carry the given weights.
pub fn heegaard_genus(p: u64, top_arc_weights: &[i64]) -> Result<i64> {
    check_degree(p)?;
    let weights = reduce_weights(p, top_arc_weights)?;
    let b = weights.len() as i64;
    let pi = p as i64;
    let fixed: u64 = weights.iter().map(|&c| c.gcd(&p)).sum();
    Ok(1 - pi + b * pi - fixed as i64)
}

/// `(b − 1)(p − 1)`.
pub fn genus_bound(bridges: u64, p: u64) -> Result<u64> {
    check_degree(p)?;
    if bridges == 0 {
        return Err(Error::Precondition("bridge number must be at least 1".into()));
    }
    Ok((bridges - 1) * (p - 1))
}

/// Largest proper divisor of `p`.
pub fn p_star(p: u64) -> Result<u64> {
    check_degree(p)?;
    let smallest = (2..)
        .take_while(|d| d * d <= p)
        .find(|d| p.is_multiple_of(*d))
        .unwrap_or(p);
    Ok(p / smallest)
}

/// `⌊(p − 1 + g) / (p − p*)⌋`, an upper bound on the bridge number of a
/// link whose `p`-fold cyclic cover has (weakly `p`-symmetric) genus `g`.
pub fn bridge_bound(p: u64, genus: u64) -> Result<u64> {
    let star = p_star(p)?;
    let bound = (p - 1 + genus) / (p - star);
    if star == 1 {
        debug_assert_eq!(bound, 1 + genus / (p - 1));
    }
    Ok(bound)
}

/// Whether a permutation of the branch points preserves their weights,
/// which is when a sphere homeomorphism inducing it lifts to the cover.
/// `point_perm` acts on zero-based point indices.
pub fn lift_check(point_perm: &Permutation, b: &BranchData) -> Result<bool> {
    if point_perm.size() != b.point_count() {
        return Err(Error::SizeMismatch {
            expected: b.point_count(),
            actual: point_perm.size(),
        });
    }
    Ok((0..b.point_count()).all(|k| b.weights[point_perm.apply(k)] == b.weights[k]))
}

/// With meridian-cyclic weights spread over `b` top arcs, the Heegaard
/// genus is `(b − 1)(p − 1)` and the bridge bound recovers at least `b`
/// (exactly `b` for prime `p`).
pub fn round_trip_check(bridges: u64, p: u64, a: &MonodromyAssignment) -> Result<bool> {
    if a.degree() != p {
        return Err(Error::Precondition(format!(
            "assignment has degree {}, expected {p}",
            a.degree()
        )));
    }
    if !classify(a).meridian_cyclic {
        return Err(Error::Precondition("weights are not all units mod p".into()));
    }
    if (a.component_count() as u64) > bridges {
        return Err(Error::Precondition(format!(
            "{} components cannot fit on {bridges} bridges",
            a.component_count()
        )));
    }
    let weights: Vec<i64> = a
        .weights
        .iter()
        .cycle()
        .take(bridges as usize)
        .map(|&c| c as i64)
        .collect();
    let genus = heegaard_genus(p, &weights)?;
    if genus as u64 != genus_bound(bridges, p)? {
        return Ok(false);
    }
    let bound = bridge_bound(p, genus as u64)?;
    let prime = p_star(p)? == 1;
    Ok(if prime { bound == bridges } else { bound >= bridges })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assignment(p: u64, c: &[i64]) -> MonodromyAssignment {
        MonodromyAssignment::new(p, c).unwrap()
    }

    #[test]
    fn assignment_validation() {
        assert!(MonodromyAssignment::new(1, &[1]).is_err());
        assert!(MonodromyAssignment::new(5, &[]).is_err());
        assert!(MonodromyAssignment::new(5, &[5]).is_err());
        assert!(MonodromyAssignment::new(6, &[2, 4]).is_err());
        assert_eq!(assignment(5, &[-1, 7]).weights(), &[4, 2]);
    }

    #[test]
    fn classify_examples() {
        let all = classify(&assignment(5, &[2, 2, 2]));
        assert_eq!(all.flags(), [true; 5]);

        let c = classify(&assignment(6, &[1, 5]));
        assert_eq!(c.flags(), [false, true, true, true, true]);

        let c = classify(&assignment(6, &[2, 3]));
        assert_eq!(c.flags(), [false, false, false, false, true]);
        assert_eq!(c.finest(), "monodromy-cyclic");
    }

    #[test]
    fn monodromy_examples() {
        let reps = monodromy_rep(&BranchData::new(3, &[1, 2]).unwrap());
        assert_eq!(reps[0].to_string(), "(1 2 3)");
        assert_eq!(reps[1].to_string(), "(1 3 2)");
        assert!(reps[0].then(&reps[1]).is_identity());

        let reps = monodromy_rep(&BranchData::new(2, &[1, 1, 1, 1]).unwrap());
        assert!(reps.iter().all(|r| r.to_string() == "(1 2)"));

        let reps = monodromy_rep(&BranchData::new_unchecked(4, &[2, 2]).unwrap());
        assert!(reps.iter().all(|r| r.cycle_count() == 2));
    }

    #[test]
    fn product_is_identity_iff_balanced() {
        for weights in [[1, 2, 3], [1, 1, 1], [2, 2, 1], [3, 3, 4]] {
            let b = BranchData::new_unchecked(5, &weights).unwrap();
            let product = monodromy_rep(&b)
                .iter()
                .fold(Permutation::identity(5), |acc, m| acc.then(m));
            assert_eq!(product.is_identity(), b.is_balanced(), "{weights:?}");
        }
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected_cover(&BranchData::new(2, &[1, 1]).unwrap()));
        assert!(!is_connected_cover(&BranchData::new_unchecked(4, &[2, 2]).unwrap()));
        assert!(is_connected_cover(&BranchData::new(6, &[2, 3, 4, 3]).unwrap()));
    }

    #[test]
    fn branch_data_rejects_inadmissible() {
        assert!(BranchData::new(4, &[2, 2]).is_err());
        assert!(BranchData::new(3, &[1, 1]).is_err());
        assert!(BranchData::new(3, &[1, 3]).is_err());
        assert!(BranchData::new_unchecked(4, &[2, 2]).is_ok());
    }

    #[test]
    fn euler_characteristic_examples() {
        let r = euler_characteristic(&BranchData::new(2, &[1, 1]).unwrap()).unwrap();
        assert_eq!((r.chi, r.genus), (2, 0));
        let r = euler_characteristic(&BranchData::new(2, &[1, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!((r.chi, r.genus), (0, 1));
        let r = euler_characteristic(&BranchData::new(3, &[1, 1, 2, 2]).unwrap()).unwrap();
        assert_eq!((r.chi, r.genus), (-2, 2));
        assert_eq!(r.fiber_sizes, vec![1; 4]);
        assert!(r.connected);

        let bad = BranchData::new_unchecked(4, &[2, 2]).unwrap();
        assert!(matches!(euler_characteristic(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn heegaard_genus_examples() {
        assert_eq!(heegaard_genus(2, &[1, 1]).unwrap(), 1);
        assert_eq!(heegaard_genus(3, &[1, 1]).unwrap(), 2);
        assert_eq!(heegaard_genus(2, &[1, 1, 1]).unwrap(), 2);
        assert!(heegaard_genus(3, &[3]).is_err());
    }

    #[test]
    fn bound_examples() {
        assert_eq!(genus_bound(2, 2).unwrap(), 1);
        assert_eq!(genus_bound(1, 7).unwrap(), 0);
        assert_eq!(genus_bound(3, 2).unwrap(), 2);
        assert!(genus_bound(0, 2).is_err());

        assert_eq!(p_star(7).unwrap(), 1);
        assert_eq!(p_star(12).unwrap(), 6);
        assert_eq!(p_star(9).unwrap(), 3);
        assert!(p_star(1).is_err());

        assert_eq!(bridge_bound(4, 3).unwrap(), 3);
        assert_eq!(bridge_bound(2, 2).unwrap(), 3);
        for p in [2, 3, 5, 7, 11] {
            assert_eq!(bridge_bound(p, 0).unwrap(), 1);
        }
    }

    #[test]
    fn lift_examples() {
        let b = BranchData::new(4, &[1, 3, 3, 1]).unwrap();
        assert!(lift_check(&Permutation::identity(4), &b).unwrap());
        let reverse = Permutation::from_one_based(&[4, 3, 2, 1]).unwrap();
        assert!(lift_check(&reverse, &b).unwrap());
        let swap12 = Permutation::from_one_based(&[2, 1, 3, 4]).unwrap();
        assert!(!lift_check(&swap12, &b).unwrap());
        let swap23 = Permutation::from_one_based(&[1, 3, 2, 4]).unwrap();
        assert!(lift_check(&swap23, &b).unwrap());
        assert!(lift_check(&Permutation::identity(3), &b).is_err());
    }

    #[test]
    fn round_trip_examples() {
        assert!(round_trip_check(2, 3, &assignment(3, &[1])).unwrap());
        assert!(round_trip_check(4, 5, &assignment(5, &[1])).unwrap());
        assert!(round_trip_check(2, 4, &assignment(4, &[1])).unwrap());
        assert_eq!(bridge_bound(4, 3).unwrap(), 3);
        assert!(round_trip_check(2, 4, &assignment(4, &[2, 1])).is_err());
        assert!(round_trip_check(1, 4, &assignment(4, &[1, 3])).is_err());
    }
}
