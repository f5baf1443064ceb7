//! Report structures for each command, serialized as JSON (field order is
//! declaration order) or rendered as plain text.

use std::fmt::Write as _;

use anyhow::Result;
use serde::Serialize;

use platcover::covering::{
    branch_data_from_special_plat, bridge_bound, classify, euler_characteristic, genus_bound, heegaard_genus,
    lift_check, p_star, BranchData,
};
use platcover::plat::{is_special, specialize, OrientedPlat};
use platcover::{
    components, default_orientation, exists_orientation_condition2prime, is_condition1, is_condition2, linking_matrix,
    orient, preserves_parity_classes, ArcDirection, CoveringClassification, Error, LinkingMatrix, MoveRecord,
    Permutation,
};

use crate::catalog::CatalogEntry;
use crate::input::{CoveringFile, NamedPlat, PlatFile};

/// Shown whenever the cyclic-class flags are reported.
pub const GCD_NOTE: &str = "meridian-cyclic and singly-cyclic test gcd(p, c_j) against the covering degree p";

pub trait Report: Serialize {
    fn text(&self) -> String;
}

#[derive(Debug, Clone, Serialize)]
pub struct Conditions {
    pub c1: bool,
    pub c2: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentsReport {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrientationReport {
    pub top: Vec<ArcDirection>,
    pub bottom: Vec<ArcDirection>,
    pub strands: Vec<platcover::StrandDirection>,
}

impl From<&OrientedPlat> for OrientationReport {
    fn from(o: &OrientedPlat) -> Self {
        Self {
            top: o.top_directions().to_vec(),
            bottom: o.bottom_directions().to_vec(),
            strands: o.strand_directions().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InfoReport {
    pub plat: PlatFile,
    pub mu: usize,
    pub n_j: Vec<usize>,
    pub components: ComponentsReport,
    pub permutation: String,
    pub parity_preserved: bool,
    pub conditions: Conditions,
    pub condition2prime_exists: bool,
    pub special: bool,
    pub orientation: OrientationReport,
    pub linking: LinkingMatrix,
}

pub fn info(input: &NamedPlat, seeds: Option<&[ArcDirection]>) -> Result<InfoReport> {
    let plat = &input.plat;
    let partition = components(plat);
    let oriented = match seeds {
        Some(s) => orient(plat, &partition, s)?,
        None => default_orientation(plat),
    };
    let perm = plat.permutation();
    let conditions = Conditions {
        c1: is_condition1(plat, &partition),
        c2: is_condition2(plat),
    };
    Ok(InfoReport {
        plat: PlatFile::from_plat(plat, input.name.clone()),
        mu: partition.mu(),
        n_j: partition.arc_counts().to_vec(),
        components: ComponentsReport {
            top: partition.top_components().to_vec(),
            bottom: partition.bottom_components().to_vec(),
        },
        permutation: perm.to_string(),
        parity_preserved: preserves_parity_classes(&perm),
        special: conditions.c1 && conditions.c2,
        conditions,
        condition2prime_exists: exists_orientation_condition2prime(plat),
        orientation: OrientationReport::from(&oriented),
        linking: linking_matrix(&oriented)?,
    })
}

fn plat_label(p: &PlatFile) -> String {
    let word: Vec<String> = p.word.iter().map(i64::to_string).collect();
    match &p.name {
        Some(name) => format!("{name}: [{}] on {} strands", word.join(" "), p.strands),
        None => format!("[{}] on {} strands", word.join(" "), p.strands),
    }
}

fn matrix_text(m: &LinkingMatrix) -> String {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|v| format!("{v:>3}")).collect::<String>())
        .collect::<Vec<_>>()
        .join("\n")
}

impl Report for InfoReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "plat:        {}", plat_label(&self.plat));
        let _ = writeln!(s, "components:  {}", self.mu);
        let _ = writeln!(s, "n_j:         {:?}", self.n_j);
        let _ = writeln!(s, "top arcs:    {:?}", self.components.top);
        let _ = writeln!(s, "bottom arcs: {:?}", self.components.bottom);
        let _ = writeln!(
            s,
            "permutation: {} (parity preserved: {})",
            self.permutation, self.parity_preserved
        );
        let _ = writeln!(
            s,
            "conditions:  (1) {}, (2) {}, (2') attainable {}",
            self.conditions.c1, self.conditions.c2, self.condition2prime_exists
        );
        let _ = writeln!(s, "special:     {}", self.special);
        let _ = writeln!(s, "linking matrix:\n{}", matrix_text(&self.linking));
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Invariants {
    pub mu: usize,
    pub n_j: Vec<usize>,
    pub lk: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantTable {
    pub before: Invariants,
    pub after: Invariants,
    pub preserved: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecializeReport {
    pub input: PlatFile,
    pub output: PlatFile,
    pub trace: Vec<MoveRecord>,
    pub mu: usize,
    pub n_j: Vec<usize>,
    pub conditions: Conditions,
    pub invariants: InvariantTable,
}

fn invariants_of(o: &OrientedPlat) -> Result<Invariants> {
    Ok(Invariants {
        mu: o.partition().mu(),
        n_j: o.partition().arc_counts().to_vec(),
        lk: linking_matrix(o)?.rows().to_vec(),
    })
}

pub fn specialize_report(input: &NamedPlat) -> Result<SpecializeReport> {
    let s = specialize(&input.plat)?;
    let before = invariants_of(&default_orientation(&input.plat))?;
    let after = invariants_of(&s.oriented)?;
    let partition = s.oriented.partition();
    let preserved = before == after;
    if !preserved {
        return Err(Error::Internal("invariant table mismatch after specialization".into()).into());
    }
    Ok(SpecializeReport {
        input: PlatFile::from_plat(&input.plat, input.name.clone()),
        output: PlatFile::from_plat(&s.plat, input.name.clone()),
        trace: s.trace.clone(),
        mu: partition.mu(),
        n_j: partition.arc_counts().to_vec(),
        conditions: Conditions {
            c1: is_condition1(&s.plat, partition),
            c2: is_condition2(&s.plat),
        },
        invariants: InvariantTable {
            before,
            after,
            preserved,
        },
    })
}

impl Report for SpecializeReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "input:   {}", plat_label(&self.input));
        let _ = writeln!(s, "output:  {}", plat_label(&self.output));
        let moves: Vec<String> = self.trace.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            s,
            "trace:   {}",
            if moves.is_empty() {
                "(none)".to_string()
            } else {
                moves.join(" ")
            }
        );
        let _ = writeln!(s, "conditions: (1) {}, (2) {}", self.conditions.c1, self.conditions.c2);
        let _ = writeln!(s, "           before        after");
        let _ = writeln!(
            s,
            "mu         {:<13} {}",
            self.invariants.before.mu, self.invariants.after.mu
        );
        let before = format!("{:?}", self.invariants.before.n_j);
        let _ = writeln!(s, "n_j        {before:<13} {:?}", self.invariants.after.n_j);
        let before = format!("{:?}", self.invariants.before.lk);
        let _ = writeln!(s, "lk         {before:<13} {:?}", self.invariants.after.lk);
        let _ = writeln!(s, "preserved: {}", self.invariants.preserved);
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub p: u64,
    pub weights: Vec<u64>,
    pub classification: CoveringClassification,
    pub finest: &'static str,
    pub notes: Vec<&'static str>,
}

pub fn classify_report(covering: &CoveringFile) -> Result<ClassifyReport> {
    let a = covering.assignment()?;
    let classification = classify(&a);
    Ok(ClassifyReport {
        p: a.degree(),
        weights: a.weights().to_vec(),
        classification,
        finest: classification.finest(),
        notes: vec![GCD_NOTE],
    })
}

fn classification_text(s: &mut String, c: &CoveringClassification) {
    let _ = writeln!(s, "strictly-cyclic:        {}", c.strictly_cyclic);
    let _ = writeln!(s, "almost-strictly-cyclic: {}", c.almost_strictly_cyclic);
    let _ = writeln!(s, "meridian-cyclic:        {}", c.meridian_cyclic);
    let _ = writeln!(s, "singly-cyclic:          {}", c.singly_cyclic);
    let _ = writeln!(s, "monodromy-cyclic:       {}", c.monodromy_cyclic);
}

impl Report for ClassifyReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "p = {}, weights = {:?}", self.p, self.weights);
        classification_text(&mut s, &self.classification);
        let _ = writeln!(s, "finest class: {}", self.finest);
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Bounds {
    pub genus_bound: u64,
    pub bridge_bound: u64,
    pub p_star: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverReport {
    pub plat: PlatFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
    pub trace: Vec<MoveRecord>,
    pub special_plat: PlatFile,
    pub p: u64,
    pub weights: Vec<u64>,
    pub classification: CoveringClassification,
    pub finest: &'static str,
    pub branch_data: BranchData,
    pub connected: bool,
    pub fiber_sizes: Vec<u64>,
    pub chi: i64,
    pub genus: i64,
    pub bounds: Bounds,
    pub lift_check: bool,
    pub notes: Vec<&'static str>,
}

/// Full covering pipeline on a plat: specialize if needed, place the
/// branch points, and evaluate the genus and bounds.
pub fn cover_report(input: &NamedPlat, covering: &CoveringFile, auto_specialize: bool) -> Result<CoverReport> {
    let a = covering.assignment()?;
    let original = &input.plat;
    let (special, trace, notice) = if is_special(original) {
        (original.clone(), Vec::new(), None)
    } else if auto_specialize {
        let s = specialize(original)?;
        let notice = format!(
            "input plat is not special; specialized with {} move(s) before building the covering",
            s.trace.len()
        );
        (s.plat, s.trace, Some(notice))
    } else {
        return Err(Error::Precondition(format!("plat {original} is not special (--no-specialize given)")).into());
    };
    let partition = components(&special);
    if a.component_count() != partition.mu() {
        return Err(Error::SizeMismatch {
            expected: partition.mu(),
            actual: a.component_count(),
        }
        .into());
    }
    let branch = branch_data_from_special_plat(&special, &partition, &a)?;
    let surface = euler_characteristic(&branch)?;
    let top_weights: Vec<i64> = partition
        .top_components()
        .iter()
        .map(|&j| a.weights()[j - 1] as i64)
        .collect();
    let genus = heegaard_genus(a.degree(), &top_weights)?;
    if genus != surface.genus {
        return Err(Error::Internal(format!(
            "genus {genus} from the bridge formula disagrees with {} from the Euler characteristic",
            surface.genus
        ))
        .into());
    }
    let bridges = special.arc_count() as u64;
    let bounds = Bounds {
        genus_bound: genus_bound(bridges, a.degree())?,
        bridge_bound: bridge_bound(a.degree(), genus as u64)?,
        p_star: p_star(a.degree())?,
    };
    let lifts = lift_check(&special.permutation(), &branch)?;
    let classification = classify(&a);
    Ok(CoverReport {
        plat: PlatFile::from_plat(original, input.name.clone()),
        notice,
        trace,
        special_plat: PlatFile::from_plat(&special, input.name.clone()),
        p: a.degree(),
        weights: a.weights().to_vec(),
        classification,
        finest: classification.finest(),
        connected: surface.connected,
        fiber_sizes: surface.fiber_sizes,
        branch_data: branch,
        chi: surface.chi,
        genus,
        bounds,
        lift_check: lifts,
        notes: vec![GCD_NOTE],
    })
}

impl Report for CoverReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "plat:          {}", plat_label(&self.plat));
        if let Some(n) = &self.notice {
            let _ = writeln!(s, "notice:        {n}");
        }
        let _ = writeln!(s, "special plat:  {}", plat_label(&self.special_plat));
        let _ = writeln!(s, "covering:      p = {}, weights = {:?}", self.p, self.weights);
        classification_text(&mut s, &self.classification);
        let _ = writeln!(s, "branch points: {:?}", self.branch_data.weights());
        let _ = writeln!(s, "fiber sizes:   {:?}", self.fiber_sizes);
        let _ = writeln!(s, "connected:     {}", self.connected);
        let _ = writeln!(s, "chi:           {}", self.chi);
        let _ = writeln!(s, "genus:         {}", self.genus);
        let _ = writeln!(s, "genus bound:   {}", self.bounds.genus_bound);
        let _ = writeln!(
            s,
            "bridge bound:  {} (p* = {})",
            self.bounds.bridge_bound, self.bounds.p_star
        );
        let _ = writeln!(s, "gluing lifts:  {}", self.lift_check);
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub p: u64,
    pub p_star: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bridges: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bridge_bound: Option<u64>,
}

pub fn bounds_report(p: u64, bridges: Option<u64>, genus: Option<u64>) -> Result<BoundsReport> {
    Ok(BoundsReport {
        p,
        p_star: p_star(p)?,
        bridges,
        genus_bound: bridges.map(|b| genus_bound(b, p)).transpose()?,
        genus,
        bridge_bound: genus.map(|g| bridge_bound(p, g)).transpose()?,
    })
}

impl Report for BoundsReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "p = {}, p* = {}", self.p, self.p_star);
        if let (Some(b), Some(g)) = (self.bridges, self.genus_bound) {
            let _ = writeln!(s, "genus bound for {b} bridges: {g}");
        }
        if let (Some(g), Some(b)) = (self.genus, self.bridge_bound) {
            let _ = writeln!(s, "bridge bound for genus {g}: {b}");
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftReport {
    pub p: u64,
    pub weights: Vec<u64>,
    pub permutation: Vec<usize>,
    pub lifts: bool,
}

/// `perm` is given one-based, as on the command line.
pub fn lift_report(p: u64, weights: &[i64], perm: &[usize]) -> Result<LiftReport> {
    let branch = BranchData::new(p, weights)?;
    let permutation = Permutation::from_one_based(perm)?;
    Ok(LiftReport {
        p,
        weights: branch.weights().to_vec(),
        permutation: perm.to_vec(),
        lifts: lift_check(&permutation, &branch)?,
    })
}

impl Report for LiftReport {
    fn text(&self) -> String {
        format!(
            "weights {:?} under {:?}: {}\n",
            self.weights,
            self.permutation,
            if self.lifts { "lifts" } else { "does not lift" }
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogListing {
    pub name: &'static str,
    pub description: &'static str,
    pub strands: usize,
    pub word: &'static [i64],
    pub expected_mu: usize,
}

impl From<&CatalogEntry> for CatalogListing {
    fn from(e: &CatalogEntry) -> Self {
        Self {
            name: e.name,
            description: e.description,
            strands: e.strands,
            word: e.word,
            expected_mu: e.expected_mu,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct CatalogReport(pub Vec<CatalogListing>);

impl Report for CatalogReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for e in &self.0 {
            let word: Vec<String> = e.word.iter().map(i64::to_string).collect();
            let _ = writeln!(
                s,
                "{:<10} {:>2} strands  [{}]  {}",
                e.name,
                e.strands,
                word.join(" "),
                e.description
            );
        }
        s
    }
}

impl Report for CatalogListing {
    fn text(&self) -> String {
        let word: Vec<String> = self.word.iter().map(i64::to_string).collect();
        format!(
            "{}\n  {}\n  strands: {}\n  word: [{}]\n  components: {}\n",
            self.name,
            self.description,
            self.strands,
            word.join(" "),
            self.expected_mu
        )
    }
}

pub fn render<R: Report>(report: &R, json: bool) -> Result<String> {
    if json {
        let mut out = serde_json::to_string_pretty(report)?;
        out.push('\n');
        Ok(out)
    } else {
        Ok(report.text())
    }
}
