//! Plat closures: a braid word on `2n` strands capped by `n` top arcs and
//! `n` bottom arcs, each joining columns `2i-1` and `2i`.
//!
//! Columns and arcs are one-based in the public API, matching the usual
//! pictures (`A_i`, `B_i` at the top, `A'_i`, `B'_i` at the bottom).

use std::fmt;

use serde::{Serialize, Serializer};

use crate::braid::{parse_braid, preserves_parity_classes, BraidLetter, BraidWord, EndpointPermutation, Sign};
use crate::error::{Error, Result};
use crate::linking::linking_matrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlatPresentation {
    word: BraidWord,
}

impl PlatPresentation {
    pub fn new(word: BraidWord) -> Self {
        Self { word }
    }

    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        Ok(Self::new(parse_braid(text, strands)?))
    }

    pub fn from_signed(strands: usize, values: &[i64]) -> Result<Self> {
        Ok(Self::new(BraidWord::from_signed(strands, values)?))
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn strand_count(&self) -> usize {
        self.word.strand_count()
    }

    /// Number of top arcs, which equals the number of bottom arcs.
    pub fn arc_count(&self) -> usize {
        self.word.strand_count() / 2
    }

    pub fn permutation(&self) -> EndpointPermutation {
        self.word.permutation()
    }
}

impl fmt::Display for PlatPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] on {} strands", self.word, self.strand_count())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcKind {
    Top,
    Bottom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcRef {
    pub kind: ArcKind,
    pub index: usize,
}

impl ArcRef {
    pub fn top(index: usize) -> Self {
        Self {
            kind: ArcKind::Top,
            index,
        }
    }

    pub fn bottom(index: usize) -> Self {
        Self {
            kind: ArcKind::Bottom,
            index,
        }
    }
}

impl fmt::Display for ArcRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ArcKind::Top => write!(f, "α{}", self.index),
            ArcKind::Bottom => write!(f, "α'{}", self.index),
        }
    }
}

/// Link components of a plat, labeled `1..=mu` in order of their
/// smallest top-arc index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    mu: usize,
    top: Vec<usize>,
    bottom: Vec<usize>,
    counts: Vec<usize>,
}

impl ComponentPartition {
    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Component of an arc; `None` if the arc index is out of range.
    pub fn component_of(&self, arc: ArcRef) -> Option<usize> {
        let side = match arc.kind {
            ArcKind::Top => &self.top,
            ArcKind::Bottom => &self.bottom,
        };
        arc.index.checked_sub(1).and_then(|i| side.get(i)).copied()
    }

    /// Component id of each top arc, in arc order.
    pub fn top_components(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom_components(&self) -> &[usize] {
        &self.bottom
    }

    /// `n_j`: number of top arcs (equivalently bottom arcs) per component.
    pub fn arc_counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn top_arcs_of(&self, component: usize) -> impl Iterator<Item = usize> + '_ {
        arcs_with(&self.top, component)
    }

    pub fn bottom_arcs_of(&self, component: usize) -> impl Iterator<Item = usize> + '_ {
        arcs_with(&self.bottom, component)
    }
}

fn arcs_with(side: &[usize], component: usize) -> impl Iterator<Item = usize> + '_ {
    side.iter()
        .enumerate()
        .filter(move |(_, &c)| c == component)
        .map(|(i, _)| i + 1)
}

/// Top arc forward: `A_i → B_i`. Bottom arc forward: `B'_i → A'_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcDirection {
    Forward,
    Backward,
}

impl ArcDirection {
    pub fn reversed(self) -> Self {
        match self {
            ArcDirection::Forward => ArcDirection::Backward,
            ArcDirection::Backward => ArcDirection::Forward,
        }
    }
}

impl Serialize for ArcDirection {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            ArcDirection::Forward => "forward",
            ArcDirection::Backward => "backward",
        })
    }
}

/// Direction of travel along a braid strand: descending runs from the top
/// arcs (t = 0) to the bottom arcs (t = 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrandDirection {
    Descending,
    Ascending,
}

impl StrandDirection {
    pub fn reversed(self) -> Self {
        match self {
            StrandDirection::Descending => StrandDirection::Ascending,
            StrandDirection::Ascending => StrandDirection::Descending,
        }
    }

    /// `+1` for descending, `-1` for ascending.
    pub fn factor(self) -> i64 {
        match self {
            StrandDirection::Descending => 1,
            StrandDirection::Ascending => -1,
        }
    }
}

impl Serialize for StrandDirection {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            StrandDirection::Descending => "descending",
            StrandDirection::Ascending => "ascending",
        })
    }
}

/// A plat with a direction on every arc and strand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedPlat {
    plat: PlatPresentation,
    partition: ComponentPartition,
    top: Vec<ArcDirection>,
    bottom: Vec<ArcDirection>,
    strands: Vec<StrandDirection>,
}

impl OrientedPlat {
    pub fn plat(&self) -> &PlatPresentation {
        &self.plat
    }

    pub fn partition(&self) -> &ComponentPartition {
        &self.partition
    }

    pub fn direction(&self, arc: ArcRef) -> ArcDirection {
        match arc.kind {
            ArcKind::Top => self.top[arc.index - 1],
            ArcKind::Bottom => self.bottom[arc.index - 1],
        }
    }

    pub fn top_directions(&self) -> &[ArcDirection] {
        &self.top
    }

    pub fn bottom_directions(&self) -> &[ArcDirection] {
        &self.bottom
    }

    /// Direction of the strand that starts at top column `column` (one-based).
    pub fn strand_direction(&self, column: usize) -> StrandDirection {
        self.strands[column - 1]
    }

    pub fn strand_directions(&self) -> &[StrandDirection] {
        &self.strands
    }

    /// Reverses every arc and strand of one component.
    pub fn reverse_component(&self, component: usize) -> OrientedPlat {
        let mut out = self.clone();
        for (i, &c) in self.partition.top.iter().enumerate() {
            if c == component {
                out.top[i] = out.top[i].reversed();
                out.strands[2 * i] = out.strands[2 * i].reversed();
                out.strands[2 * i + 1] = out.strands[2 * i + 1].reversed();
            }
        }
        for (i, &c) in self.partition.bottom.iter().enumerate() {
            if c == component {
                out.bottom[i] = out.bottom[i].reversed();
            }
        }
        out
    }

    /// Checks the local matching rule at every arc endpoint: a strand
    /// leaving an arc end descends (top) or ascends (bottom) exactly when
    /// the arc's direction says it should.
    pub fn is_consistent(&self) -> bool {
        let inv = self.plat.permutation().inverse();
        let top_ok = self.top.iter().enumerate().all(|(i, &d)| {
            let (a, b) = (2 * i, 2 * i + 1);
            // forward: arrive at A from below, leave B downward
            let expect_b = match d {
                ArcDirection::Forward => StrandDirection::Descending,
                ArcDirection::Backward => StrandDirection::Ascending,
            };
            self.strands[b] == expect_b && self.strands[a] == expect_b.reversed()
        });
        let bottom_ok = self.bottom.iter().enumerate().all(|(m, &d)| {
            let (a, b) = (inv.apply(2 * m), inv.apply(2 * m + 1));
            // forward: arrive at B' from above, leave A' upward
            let expect_b = match d {
                ArcDirection::Forward => StrandDirection::Descending,
                ArcDirection::Backward => StrandDirection::Ascending,
            };
            self.strands[b] == expect_b && self.strands[a] == expect_b.reversed()
        });
        top_ok && bottom_ok
    }
}

/// Arcs and strands visited while going once around a component.
struct Walk {
    top: Vec<(usize, ArcDirection)>,
    bottom: Vec<(usize, ArcDirection)>,
    strands: Vec<(usize, StrandDirection)>,
}

/// Walks the component through zero-based top arc `start`, traversing it
/// in direction `dir`. Returns everything met along the way.
fn walk(perm: &EndpointPermutation, inv: &EndpointPermutation, start: usize, dir: ArcDirection) -> Walk {
    let mut out = Walk {
        top: vec![(start, dir)],
        bottom: Vec::new(),
        strands: Vec::new(),
    };
    let mut column = match dir {
        ArcDirection::Forward => 2 * start + 1,
        ArcDirection::Backward => 2 * start,
    };
    loop {
        out.strands.push((column, StrandDirection::Descending));
        let entry = perm.apply(column);
        let bottom_dir = if entry % 2 == 1 {
            ArcDirection::Forward
        } else {
            ArcDirection::Backward
        };
        out.bottom.push((entry / 2, bottom_dir));
        let up = inv.apply(entry ^ 1);
        out.strands.push((up, StrandDirection::Ascending));
        let arc = up / 2;
        let top_dir = if up.is_multiple_of(2) {
            ArcDirection::Forward
        } else {
            ArcDirection::Backward
        };
        if arc == start {
            debug_assert_eq!(top_dir, dir);
            break;
        }
        out.top.push((arc, top_dir));
        column = up ^ 1;
    }
    out
}

/// Splits the plat closure into link components.
pub fn components(plat: &PlatPresentation) -> ComponentPartition {
    let n = plat.arc_count();
    let perm = plat.permutation();
    let inv = perm.inverse();
    let mut top = vec![0; n];
    let mut bottom = vec![0; n];
    let mut mu = 0;
    for start in 0..n {
        if top[start] != 0 {
            continue;
        }
        mu += 1;
        let w = walk(&perm, &inv, start, ArcDirection::Forward);
        for (i, _) in w.top {
            top[i] = mu;
        }
        for (i, _) in w.bottom {
            bottom[i] = mu;
        }
    }
    let mut counts = vec![0; mu];
    for &c in &top {
        counts[c - 1] += 1;
    }
    let mut bottom_counts = vec![0; mu];
    for &c in &bottom {
        bottom_counts[c - 1] += 1;
    }
    assert_eq!(
        counts, bottom_counts,
        "component with unequal top and bottom arc counts"
    );
    ComponentPartition {
        mu,
        top,
        bottom,
        counts,
    }
}

/// Arcs grouped into consecutive per-component blocks, in the same order
/// on top and bottom.
pub fn is_condition1(_plat: &PlatPresentation, partition: &ComponentPartition) -> bool {
    // canonical ids are ordered by first top arc, so blocks in order means
    // the top labels never decrease
    partition.top.windows(2).all(|w| w[0] <= w[1]) && partition.top == partition.bottom
}

/// The braid permutation keeps odd and even columns apart.
pub fn is_condition2(plat: &PlatPresentation) -> bool {
    preserves_parity_classes(&plat.permutation())
}

pub fn is_special(plat: &PlatPresentation) -> bool {
    is_condition1(plat, &components(plat)) && is_condition2(plat)
}

/// Orients every component so that its lowest top arc has the direction
/// given by `seeds[j - 1]`.
pub fn orient(plat: &PlatPresentation, partition: &ComponentPartition, seeds: &[ArcDirection]) -> Result<OrientedPlat> {
    if seeds.len() != partition.mu {
        return Err(Error::SizeMismatch {
            expected: partition.mu,
            actual: seeds.len(),
        });
    }
    let n = plat.arc_count();
    let perm = plat.permutation();
    let inv = perm.inverse();
    let mut top = vec![ArcDirection::Forward; n];
    let mut bottom = vec![ArcDirection::Forward; n];
    let mut strands = vec![StrandDirection::Descending; 2 * n];
    for (j, &seed) in seeds.iter().enumerate() {
        let start = partition.top_arcs_of(j + 1).next().expect("component without top arcs") - 1;
        let w = walk(&perm, &inv, start, seed);
        for (i, d) in w.top {
            top[i] = d;
        }
        for (i, d) in w.bottom {
            bottom[i] = d;
        }
        for (i, d) in w.strands {
            strands[i] = d;
        }
    }
    Ok(OrientedPlat {
        plat: plat.clone(),
        partition: partition.clone(),
        top,
        bottom,
        strands,
    })
}

/// Orientation with the lowest top arc of each component forward.
pub fn default_orientation(plat: &PlatPresentation) -> OrientedPlat {
    let partition = components(plat);
    let seeds = vec![ArcDirection::Forward; partition.mu];
    orient(plat, &partition, &seeds).expect("seed count matches by construction")
}

/// Every top arc runs `A_i → B_i` and every bottom arc `B'_i → A'_i`.
pub fn is_condition2prime(oriented: &OrientedPlat) -> bool {
    oriented
        .top
        .iter()
        .chain(oriented.bottom.iter())
        .all(|&d| d == ArcDirection::Forward)
}

/// Whether some orientation of the link satisfies [`is_condition2prime`].
///
/// Components orient independently, so it suffices to check that under
/// the default orientation each component is either all forward or all
/// backward.
pub fn exists_orientation_condition2prime(plat: &PlatPresentation) -> bool {
    let oriented = default_orientation(plat);
    let p = &oriented.partition;
    (1..=p.mu).all(|j| {
        let dirs: Vec<ArcDirection> = p
            .top_arcs_of(j)
            .map(|i| oriented.top[i - 1])
            .chain(p.bottom_arcs_of(j).map(|i| oriented.bottom[i - 1]))
            .collect();
        dirs.iter().all(|&d| d == dirs[0])
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// Exchange of top caps `i`, `i + 1`.
    I,
    /// Exchange of bottom caps `i`, `i + 1`.
    IPrime,
    /// Half twist absorbed into top cap `i`.
    II,
    /// Half twist absorbed into bottom cap `i`.
    IIPrime,
}

impl MoveKind {
    pub fn label(self) -> &'static str {
        match self {
            MoveKind::I => "I",
            MoveKind::IPrime => "I'",
            MoveKind::II => "II",
            MoveKind::IIPrime => "II'",
        }
    }

    pub fn from_label(label: &str) -> Option<MoveKind> {
        match label {
            "I" => Some(MoveKind::I),
            "I'" => Some(MoveKind::IPrime),
            "II" => Some(MoveKind::II),
            "II'" => Some(MoveKind::IIPrime),
            _ => None,
        }
    }

    /// Moves acting at the top of the word.
    pub fn is_top(self) -> bool {
        matches!(self, MoveKind::I | MoveKind::II)
    }
}

impl Serialize for MoveKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MoveRecord {
    #[serde(rename = "move")]
    pub kind: MoveKind,
    pub i: usize,
    pub sign: Sign,
}

impl MoveRecord {
    pub fn exchange_top(i: usize) -> Self {
        Self {
            kind: MoveKind::I,
            i,
            sign: Sign::Positive,
        }
    }

    pub fn exchange_bottom(i: usize) -> Self {
        Self {
            kind: MoveKind::IPrime,
            i,
            sign: Sign::Positive,
        }
    }

    pub fn twist_top(i: usize, sign: Sign) -> Self {
        Self {
            kind: MoveKind::II,
            i,
            sign,
        }
    }

    pub fn twist_bottom(i: usize, sign: Sign) -> Self {
        Self {
            kind: MoveKind::IIPrime,
            i,
            sign,
        }
    }

    /// The letters the move inserts.
    pub fn letters(&self) -> Vec<BraidLetter> {
        let i = self.i;
        match self.kind {
            MoveKind::I | MoveKind::IPrime => vec![
                BraidLetter::positive(2 * i),
                BraidLetter::positive(2 * i - 1),
                BraidLetter::positive(2 * i + 1),
                BraidLetter::positive(2 * i),
            ],
            MoveKind::II | MoveKind::IIPrime => vec![BraidLetter::new(2 * i - 1, self.sign)],
        }
    }
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MoveKind::I | MoveKind::IPrime => write!(f, "{}({})", self.kind.label(), self.i),
            MoveKind::II | MoveKind::IIPrime => {
                write!(f, "{}({}, {})", self.kind.label(), self.i, self.sign.value())
            }
        }
    }
}

pub fn apply_move(plat: &PlatPresentation, m: &MoveRecord) -> Result<PlatPresentation> {
    let n = plat.arc_count();
    let limit = match m.kind {
        MoveKind::I | MoveKind::IPrime => n.saturating_sub(1),
        MoveKind::II | MoveKind::IIPrime => n,
    };
    if m.i == 0 || m.i > limit {
        return Err(Error::MoveOutOfRange {
            kind: m.kind.label(),
            index: m.i,
            arcs: n,
        });
    }
    let letters = m.letters();
    let word = if m.kind.is_top() {
        plat.word.prepend(&letters)?
    } else {
        plat.word.append(&letters)?
    };
    Ok(PlatPresentation::new(word))
}

/// Replays a move trace from `plat`.
pub fn replay(plat: &PlatPresentation, trace: &[MoveRecord]) -> Result<PlatPresentation> {
    trace.iter().try_fold(plat.clone(), |p, m| apply_move(&p, m))
}

/// Maps each component of `before` to the component of `after` that
/// contains the same physical arcs. Moves at the top leave the bottom arcs
/// alone and vice versa, so those arcs pin the correspondence.
pub fn component_correspondence(
    before: &ComponentPartition,
    kind: MoveKind,
    after: &ComponentPartition,
) -> Result<Vec<usize>> {
    if before.mu != after.mu {
        return Err(Error::Internal(format!(
            "component count changed from {} to {}",
            before.mu, after.mu
        )));
    }
    let (old, new) = if kind.is_top() {
        (&before.bottom, &after.bottom)
    } else {
        (&before.top, &after.top)
    };
    let mut map = vec![0; before.mu];
    for (&o, &n) in old.iter().zip(new) {
        if map[o - 1] == 0 {
            map[o - 1] = n;
        } else if map[o - 1] != n {
            return Err(Error::Internal(format!("component {o} split across the move")));
        }
    }
    let mut seen = map.clone();
    seen.sort_unstable();
    if seen != (1..=after.mu).collect::<Vec<_>>() {
        return Err(Error::Internal("components merged across the move".into()));
    }
    Ok(map)
}

/// Orients `after` (the result of applying `kind` to `before.plat()`) so
/// that the arcs the move did not touch keep their directions.
pub fn transport_orientation(before: &OrientedPlat, kind: MoveKind, after: &PlatPresentation) -> Result<OrientedPlat> {
    let partition = components(after);
    let map = component_correspondence(&before.partition, kind, &partition)?;
    let mut seeds = vec![ArcDirection::Forward; partition.mu];
    let probe = orient(after, &partition, &seeds)?;
    for (old, &new) in map.iter().enumerate() {
        let (old_side, new_side) = if kind.is_top() {
            (&before.bottom, &probe.bottom)
        } else {
            (&before.top, &probe.top)
        };
        let old_comp = if kind.is_top() {
            &before.partition.bottom
        } else {
            &before.partition.top
        };
        let k = old_comp
            .iter()
            .position(|&c| c == old + 1)
            .expect("every component has arcs on both sides");
        if old_side[k] != new_side[k] {
            seeds[new - 1] = ArcDirection::Backward;
        }
    }
    let out = orient(after, &partition, &seeds)?;
    let (old_side, new_side) = if kind.is_top() {
        (&before.bottom, &out.bottom)
    } else {
        (&before.top, &out.top)
    };
    if old_side != new_side {
        return Err(Error::Internal(
            "orientation of untouched arcs could not be preserved".into(),
        ));
    }
    Ok(out)
}

/// Applies a move and checks that the link did not change: same number of
/// components, same arc counts per component, and the same linking matrix
/// under the transported orientation. Returns the transported orientation.
pub fn apply_move_checked(before: &OrientedPlat, m: &MoveRecord) -> Result<OrientedPlat> {
    let after = apply_move(&before.plat, m)?;
    let oriented = transport_orientation(before, m.kind, &after)?;
    let map = component_correspondence(&before.partition, m.kind, &oriented.partition)?;
    for (old, &new) in map.iter().enumerate() {
        if before.partition.counts[old] != oriented.partition.counts[new - 1] {
            return Err(Error::Internal(format!(
                "{m} changed the arc count of component {}",
                old + 1
            )));
        }
    }
    let lk_before = linking_matrix(before)?;
    let lk_after = linking_matrix(&oriented)?.relabeled(&map);
    if lk_before != lk_after {
        return Err(Error::Internal(format!("{m} changed the linking matrix")));
    }
    Ok(oriented)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    pub plat: PlatPresentation,
    pub trace: Vec<MoveRecord>,
    /// The output plat oriented to agree with the default orientation of
    /// the input, so invariants can be compared entry by entry.
    pub oriented: OrientedPlat,
}

/// Sign for a twist inserted next to `neighbor`: cancel it when it is a
/// twist of the same cap, otherwise `-1`.
fn twist_sign(neighbor: Option<&BraidLetter>, index: usize) -> Sign {
    match neighbor {
        Some(l) if l.index == index => -l.sign,
        _ => Sign::Negative,
    }
}

/// Picks, per component, whichever of its two orientations needs fewer
/// twists to make every arc forward; on a tie, the one needing fewer
/// bottom twists.
fn cheapest_orientation(oriented: &OrientedPlat) -> OrientedPlat {
    let p = oriented.partition.clone();
    let mut out = oriented.clone();
    for j in 1..=p.mu {
        let k = p.counts[j - 1];
        let t = p
            .top_arcs_of(j)
            .filter(|&i| oriented.top[i - 1] == ArcDirection::Backward)
            .count();
        let u = p
            .bottom_arcs_of(j)
            .filter(|&i| oriented.bottom[i - 1] == ArcDirection::Backward)
            .count();
        let keep = t + u;
        let flip = 2 * k - keep;
        if flip < keep || (flip == keep && k - u < u) {
            out = out.reverse_component(j);
        }
    }
    out
}

/// Turns any plat into a special plat of the same link using exchange and
/// twist moves. Every move is checked against the link invariants as it is
/// applied; any mismatch is reported as [`Error::Internal`].
pub fn specialize(plat: &PlatPresentation) -> Result<Specialization> {
    let n = plat.arc_count();
    let start = default_orientation(plat);
    let mut current = start.clone();
    let mut trace = Vec::new();

    let mut step = |current: &mut OrientedPlat, m: MoveRecord| -> Result<()> {
        *current = apply_move_checked(current, &m)?;
        trace.push(m);
        Ok(())
    };

    // bubble sort top arcs, then bottom arcs, by initial component label
    let mut labels = start.partition.top.clone();
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            if labels[i] > labels[i + 1] {
                step(&mut current, MoveRecord::exchange_top(i + 1))?;
                labels.swap(i, i + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    let mut labels = start.partition.bottom.clone();
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            if labels[i] > labels[i + 1] {
                step(&mut current, MoveRecord::exchange_bottom(i + 1))?;
                labels.swap(i, i + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    if !is_condition1(&current.plat, &current.partition) {
        return Err(Error::Internal(
            "exchange moves did not group the arcs by component".into(),
        ));
    }

    let target = cheapest_orientation(&default_orientation(&current.plat));
    for i in 1..=n {
        if target.top[i - 1] == ArcDirection::Backward {
            let sign = twist_sign(current.plat.word.letters().first(), 2 * i - 1);
            step(&mut current, MoveRecord::twist_top(i, sign))?;
        }
    }
    for i in 1..=n {
        if target.bottom[i - 1] == ArcDirection::Backward {
            let sign = twist_sign(current.plat.word.letters().last(), 2 * i - 1);
            step(&mut current, MoveRecord::twist_bottom(i, sign))?;
        }
    }

    let out = current.plat.clone();
    let partition = &current.partition;
    if !is_condition1(&out, partition) || !is_condition2(&out) {
        return Err(Error::Internal(format!("specialized plat {out} is not special")));
    }
    if partition.mu != start.partition.mu || partition.counts != start.partition.counts {
        return Err(Error::Internal(
            "component structure changed during specialization".into(),
        ));
    }
    if linking_matrix(&current)? != linking_matrix(&start)? {
        return Err(Error::Internal("linking matrix changed during specialization".into()));
    }
    if replay(plat, &trace)? != out {
        return Err(Error::Internal("move trace does not replay to the output".into()));
    }
    Ok(Specialization {
        plat: out,
        trace,
        oriented: current,
    })
}
