//! Framed oriented links as Morse event lists, and the renormalized
//! Hennings–Kauffman–Radford invariant.
//!
//! Events are read bottom to top. A cup opens two strands, a cap closes
//! two, a crossing swaps two adjacent strands. A virtual event swaps
//! strands without any crossing data (it carries no bead and no sign).

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::contract::{contract, Network, Piece};
use crate::double::{pure, DrinfeldDouble};
use crate::hopf::{Element, Functional, HopfAlgebra, Tensor};
use crate::scalar::Scalar;
use crate::{integrals, linalg, Error, Result};

/// Direction of travel around an extremum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rotation {
    Ccw,
    Cw,
}

impl Rotation {
    pub fn flip(self) -> Rotation {
        match self {
            Rotation::Ccw => Rotation::Cw,
            Rotation::Cw => Rotation::Ccw,
        }
    }
}

/// Crossing type: the sign and the vertical direction of the over strand.
///
/// Encoded as two letters, e.g. `"pn"` is a positive crossing whose over
/// strand points down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrossingKind {
    pub positive: bool,
    pub over_up: bool,
}

impl CrossingKind {
    pub fn code(self) -> &'static str {
        match (self.positive, self.over_up) {
            (true, true) => "pp",
            (true, false) => "pn",
            (false, true) => "np",
            (false, false) => "nn",
        }
    }

    pub fn parse(s: &str) -> Option<CrossingKind> {
        let b = s.as_bytes();
        if b.len() != 2 {
            return None;
        }
        let bit = |c: u8| match c {
            b'p' => Some(true),
            b'n' => Some(false),
            _ => None,
        };
        Some(CrossingKind { positive: bit(b[0])?, over_up: bit(b[1])? })
    }

    /// Kind of a crossing given the strand directions at `at` and `at + 1`
    /// just below it and which of them passes over.
    pub fn from_strands(left_up: bool, right_up: bool, left_over: bool) -> CrossingKind {
        let over_up = if left_over { left_up } else { right_up };
        let positive = if left_up == right_up { left_over } else { !left_over };
        CrossingKind { positive, over_up }
    }

    /// Which strand is over, given the directions below the crossing; `None`
    /// when the kind cannot occur with those directions.
    fn left_over(self, left_up: bool, right_up: bool) -> Option<bool> {
        let left_over = if left_up == right_up {
            if self.over_up != left_up {
                return None;
            }
            self.positive
        } else {
            left_up == self.over_up
        };
        (CrossingKind::from_strands(left_up, right_up, left_over) == self).then_some(left_over)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinkEvent {
    Cup { at: usize, orient: Rotation },
    Cap { at: usize, orient: Rotation },
    Cross { at: usize, kind: CrossingKind },
    Virtual { at: usize },
}

/// Location on the wire at `slot` directly above event `event`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Basepoint {
    pub component: usize,
    pub event: usize,
    pub slot: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Wire {
    component: usize,
    up: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseLinkDiagram {
    events: Vec<LinkEvent>,
    basepoints: Vec<Basepoint>,
    /// `gaps[e][s]`: the wire at slot `s` above event `e`.
    gaps: Vec<Vec<Wire>>,
    orientations: Vec<Rotation>,
    /// Crossing number of each event (virtual events excluded).
    crossing_ids: Vec<Option<usize>>,
    /// For each crossing event: whether the strand from the left slot is over.
    left_over: Vec<Option<bool>>,
}

fn malformed(index: usize, reason: &str) -> Error {
    Error::MalformedEvents { index, reason: reason.to_string() }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl MorseLinkDiagram {
    /// Validates the events and base points and traces the components.
    pub fn new(events: Vec<LinkEvent>, basepoints: Vec<Basepoint>) -> Result<MorseLinkDiagram> {
        // Pass 1: arcs (one per cup) and orientations, merged at caps.
        let mut parent: Vec<usize> = Vec::new();
        let mut first_cup: Vec<usize> = Vec::new();
        let mut cup_rot: Vec<Rotation> = Vec::new();
        let mut raw: Vec<Vec<(usize, bool)>> = Vec::with_capacity(events.len());
        let mut left_over = vec![None; events.len()];
        let mut crossing_ids = vec![None; events.len()];
        let mut width: Vec<(usize, bool)> = Vec::new();
        let mut n_cross = 0;
        for (i, ev) in events.iter().enumerate() {
            match *ev {
                LinkEvent::Cup { at, orient } => {
                    if at > width.len() {
                        return Err(malformed(i, "cup position outside the current width"));
                    }
                    let arc = parent.len();
                    parent.push(arc);
                    first_cup.push(i);
                    cup_rot.push(orient);
                    // Counterclockwise travels right along the bottom: left strand points down.
                    let left_up = orient == Rotation::Cw;
                    width.splice(at..at, [(arc, left_up), (arc, !left_up)]);
                }
                LinkEvent::Cap { at, orient } => {
                    if at + 1 >= width.len() {
                        return Err(malformed(i, "cap position outside the current width"));
                    }
                    let ((a, lu), (b, ru)) = (width[at], width[at + 1]);
                    if lu == ru {
                        return Err(malformed(i, "cap joins strands of the same direction"));
                    }
                    // Clockwise travels right along the top: left strand points up.
                    if lu != (orient == Rotation::Cw) {
                        return Err(malformed(i, "cap orientation does not match its strands"));
                    }
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        let (lo, hi) = if first_cup[ra] <= first_cup[rb] { (ra, rb) } else { (rb, ra) };
                        parent[hi] = lo;
                    }
                    width.drain(at..at + 2);
                }
                LinkEvent::Cross { at, kind } => {
                    if at + 1 >= width.len() {
                        return Err(malformed(i, "crossing position outside the current width"));
                    }
                    let lo = kind
                        .left_over(width[at].1, width[at + 1].1)
                        .ok_or_else(|| malformed(i, "crossing kind does not match strand directions"))?;
                    left_over[i] = Some(lo);
                    crossing_ids[i] = Some(n_cross);
                    n_cross += 1;
                    width.swap(at, at + 1);
                }
                LinkEvent::Virtual { at } => {
                    if at + 1 >= width.len() {
                        return Err(malformed(i, "virtual crossing outside the current width"));
                    }
                    width.swap(at, at + 1);
                }
            }
            raw.push(width.clone());
        }
        if !width.is_empty() {
            return Err(malformed(events.len().saturating_sub(1), "strands left open at the top"));
        }

        // Components numbered by their first cup.
        let mut comp_of_root = BTreeMap::new();
        let mut orientations = Vec::new();
        for arc in 0..parent.len() {
            let root = find(&mut parent, arc);
            if !comp_of_root.contains_key(&root) {
                comp_of_root.insert(root, orientations.len());
                orientations.push(cup_rot[root]);
            }
        }
        let gaps: Vec<Vec<Wire>> = raw
            .into_iter()
            .map(|g| {
                g.into_iter().map(|(arc, up)| Wire { component: comp_of_root[&find(&mut parent, arc)], up }).collect()
            })
            .collect();

        let n = orientations.len();
        if basepoints.len() != n {
            return Err(Error::BasepointError(alloc::format!("{} base points for {} components", basepoints.len(), n)));
        }
        let mut seen = vec![false; n];
        for bp in &basepoints {
            let wire = gaps.get(bp.event).and_then(|g| g.get(bp.slot)).ok_or_else(|| {
                Error::BasepointError(alloc::format!("no wire at event {} slot {}", bp.event, bp.slot))
            })?;
            if wire.component != bp.component {
                return Err(Error::BasepointError(alloc::format!(
                    "wire at event {} slot {} belongs to component {}, not {}",
                    bp.event,
                    bp.slot,
                    wire.component,
                    bp.component
                )));
            }
            if core::mem::replace(&mut seen[bp.component], true) {
                return Err(Error::BasepointError(alloc::format!(
                    "component {} has more than one base point",
                    bp.component
                )));
            }
        }
        Ok(MorseLinkDiagram { events, basepoints, gaps, orientations, crossing_ids, left_over })
    }

    pub fn empty() -> MorseLinkDiagram {
        MorseLinkDiagram::new(Vec::new(), Vec::new()).expect("empty diagram")
    }

    pub fn events(&self) -> &[LinkEvent] {
        &self.events
    }

    pub fn basepoints(&self) -> &[Basepoint] {
        &self.basepoints
    }

    pub fn n_components(&self) -> usize {
        self.orientations.len()
    }

    /// Rotation of the first cup of each component.
    pub fn orientations(&self) -> &[Rotation] {
        &self.orientations
    }

    pub fn n_crossings(&self) -> usize {
        self.crossing_ids.iter().flatten().count()
    }

    /// Component and direction of the wire at `slot` above `event`.
    pub fn wire(&self, event: usize, slot: usize) -> Option<(usize, bool)> {
        self.gaps.get(event)?.get(slot).map(|w| (w.component, w.up))
    }

    fn below(&self, event: usize) -> &[Wire] {
        if event == 0 {
            &[]
        } else {
            &self.gaps[event - 1]
        }
    }

    /// One step along the orientation; emits the bead met on the way.
    fn step(&self, state: (usize, usize, bool), beads: &mut Vec<Bead>) -> (usize, usize, bool) {
        let (gap, pos, up) = state;
        if up {
            let e = gap + 1;
            match self.events[e] {
                LinkEvent::Cup { at, .. } => (e, if pos >= at { pos + 2 } else { pos }, true),
                LinkEvent::Cap { at, .. } => {
                    if pos == at {
                        beads.push(Bead::Pivot(1));
                        (gap, at + 1, false)
                    } else if pos == at + 1 {
                        (gap, at, false)
                    } else {
                        (e, if pos > at + 1 { pos - 2 } else { pos }, true)
                    }
                }
                LinkEvent::Cross { at, .. } | LinkEvent::Virtual { at } => {
                    if pos == at {
                        self.crossing_bead(e, true, true, beads);
                        (e, at + 1, true)
                    } else if pos == at + 1 {
                        self.crossing_bead(e, false, true, beads);
                        (e, at, true)
                    } else {
                        (e, pos, true)
                    }
                }
            }
        } else {
            let lower = gap.wrapping_sub(1);
            match self.events[gap] {
                LinkEvent::Cup { at, .. } => {
                    if pos == at {
                        beads.push(Bead::Pivot(-1));
                        (gap, at + 1, true)
                    } else if pos == at + 1 {
                        (gap, at, true)
                    } else {
                        (lower, if pos > at + 1 { pos - 2 } else { pos }, false)
                    }
                }
                LinkEvent::Cap { at, .. } => (lower, if pos >= at { pos + 2 } else { pos }, false),
                LinkEvent::Cross { at, .. } | LinkEvent::Virtual { at } => {
                    if pos == at {
                        self.crossing_bead(gap, false, false, beads);
                        (lower, at + 1, false)
                    } else if pos == at + 1 {
                        self.crossing_bead(gap, true, false, beads);
                        (lower, at, false)
                    } else {
                        (lower, pos, false)
                    }
                }
            }
        }
    }

    // Crossing c. Bead table, with R = Σ r ⊗ s and R⁻¹ = Σ S(r) ⊗ s:
    // when the over strand runs from lower left to upper right the over
    // strand carries r and the under strand s; when it runs from lower
    // right to upper left it carries S(r), the under strand s. A strand
    // pointing down carries S of its bead. The eight cases:
    //   over ↗ up,   under up   (+): r,     s
    //   over ↗ up,   under down (−): r,     S(s)
    //   over ↗ down, under up   (−): S(r),  s
    //   over ↗ down, under down (+): S(r),  S(s)
    //   over ↖ up,   under up   (−): S(r),  s
    //   over ↖ up,   under down (+): S(r),  S(s)
    //   over ↖ down, under up   (+): S²(r), s
    //   over ↖ down, under down (−): S²(r), S(s)
    fn crossing_bead(&self, event: usize, rising_line: bool, up: bool, beads: &mut Vec<Bead>) {
        let Some(crossing) = self.crossing_ids[event] else { return };
        let over = self.left_over[event] == Some(rising_line);
        let down = u8::from(!up);
        beads.push(if over {
            Bead::Over { crossing, power: down + u8::from(!rising_line) }
        } else {
            Bead::Under { crossing, power: down }
        });
    }

    fn walk(&self, component: usize, mut visit: impl FnMut((usize, usize, bool), &mut Vec<Bead>)) -> Vec<Bead> {
        let bp = self.basepoints.iter().find(|b| b.component == component).expect("validated");
        let start = (bp.event, bp.slot, self.gaps[bp.event][bp.slot].up);
        let mut beads = Vec::new();
        let mut state = start;
        loop {
            visit(state, &mut beads);
            state = self.step(state, &mut beads);
            if state == start {
                return beads;
            }
        }
    }

    /// Beads of one component from its base point, in order of travel.
    pub fn bead_word(&self, component: usize) -> Vec<Bead> {
        self.walk(component, |_, _| {})
    }

    /// Wire segments `(event, slot)` of a component in order of travel,
    /// starting at its base point. Each is a valid base point location.
    pub fn segments(&self, component: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        self.walk(component, |(g, p, _), _| out.push((g, p)));
        out.dedup();
        out
    }

    pub fn with_basepoints(&self, basepoints: Vec<Basepoint>) -> Result<MorseLinkDiagram> {
        MorseLinkDiagram::new(self.events.clone(), basepoints)
    }

    /// Linking matrix (writhe on the diagonal) and its signature.
    pub fn linking(&self) -> LinkingData {
        let n = self.n_components();
        let mut twice = vec![vec![0i64; n]; n];
        for (e, ev) in self.events.iter().enumerate() {
            if let (LinkEvent::Cross { at, kind }, Some(_)) = (ev, self.crossing_ids[e]) {
                let w = self.below(e);
                let (a, b) = (w[*at].component, w[*at + 1].component);
                let sign = if kind.positive { 1 } else { -1 };
                if a == b {
                    twice[a][a] += 2 * sign;
                } else {
                    twice[a][b] += sign;
                    twice[b][a] += sign;
                }
            }
        }
        let matrix: Vec<Vec<i64>> = twice.into_iter().map(|row| row.into_iter().map(|x| x / 2).collect()).collect();
        let signature = linalg::signature(&matrix);
        LinkingData { matrix, signature }
    }

    /// Same link with one component's orientation reversed.
    pub fn reverse_component(&self, component: usize) -> Result<MorseLinkDiagram> {
        let mut events = self.events.clone();
        for (e, ev) in events.iter_mut().enumerate() {
            let w = self.below(e);
            match ev {
                LinkEvent::Cup { at, orient } => {
                    if self.gaps[e][*at].component == component {
                        *orient = orient.flip();
                    }
                }
                LinkEvent::Cap { at, orient } => {
                    if w[*at].component == component {
                        *orient = orient.flip();
                    }
                }
                LinkEvent::Cross { at, .. } => {
                    let flip = |x: &Wire| x.up != (x.component == component);
                    let left_over = self.left_over[e].expect("crossing");
                    *ev = LinkEvent::Cross {
                        at: *at,
                        kind: CrossingKind::from_strands(flip(&w[*at]), flip(&w[*at + 1]), left_over),
                    };
                }
                LinkEvent::Virtual { .. } => {}
            }
        }
        MorseLinkDiagram::new(events, self.basepoints.clone())
    }

    /// Inserts a zigzag (a cap and a cup) on the wire at `slot` above `event`.
    pub fn insert_zigzag(&self, event: usize, slot: usize) -> Result<MorseLinkDiagram> {
        let (_, up) = self.wire(event, slot).ok_or(Error::Invalid("no wire to bend".to_string()))?;
        let (cup, cap) = if up { (Rotation::Ccw, Rotation::Cw) } else { (Rotation::Cw, Rotation::Ccw) };
        self.splice(event, &[LinkEvent::Cup { at: slot + 1, orient: cup }, LinkEvent::Cap { at: slot, orient: cap }])
    }

    /// Inserts a canceling pair of crossings on the wires at `slot` and
    /// `slot + 1` above `event`; `left_over` picks the strand passing over.
    pub fn insert_r2(&self, event: usize, slot: usize, left_over: bool) -> Result<MorseLinkDiagram> {
        let g = self.gaps.get(event).ok_or(Error::Invalid("event out of range".to_string()))?;
        if slot + 1 >= g.len() {
            return Err(Error::Invalid("need two adjacent wires".to_string()));
        }
        let (l, r) = (g[slot].up, g[slot + 1].up);
        let first = CrossingKind::from_strands(l, r, left_over);
        let second = CrossingKind::from_strands(r, l, !left_over);
        self.splice(event, &[LinkEvent::Cross { at: slot, kind: first }, LinkEvent::Cross { at: slot, kind: second }])
    }

    fn splice(&self, event: usize, new: &[LinkEvent]) -> Result<MorseLinkDiagram> {
        let mut events = self.events.clone();
        events.splice(event + 1..event + 1, new.iter().copied());
        let basepoints = self
            .basepoints
            .iter()
            .map(|b| Basepoint { event: if b.event > event { b.event + new.len() } else { b.event }, ..*b })
            .collect();
        MorseLinkDiagram::new(events, basepoints)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingData {
    pub matrix: Vec<Vec<i64>>,
    pub signature: i64,
}

/// A bead on a component. `Over`/`Under` refer to the two legs of the
/// R-matrix at a crossing: `Over` is `S^power(r)`, `Under` is `S^power(s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bead {
    Pivot(i8),
    Over { crossing: usize, power: u8 },
    Under { crossing: usize, power: u8 },
}

impl Bead {
    pub fn crossing(self) -> Option<usize> {
        match self {
            Bead::Pivot(_) => None,
            Bead::Over { crossing, .. } | Bead::Under { crossing, .. } => Some(crossing),
        }
    }
}

/// Ribbon Hopf algebra with a factored R-matrix and a normalized μ.
#[derive(Clone, Debug)]
pub struct RibbonData {
    pub algebra: HopfAlgebra,
    /// R = Σ_t r_t ⊗ s_t.
    pub r_terms: Vec<(Element, Element)>,
    pub mu: Functional,
    pub g: Element,
    pub theta: Element,
}

impl RibbonData {
    /// Ribbon data of a quasitriangular algebra with pivot; μ is the
    /// symmetrized integral, rescaled so that δ·δ' = 1.
    pub fn new(h: &HopfAlgebra, r: &Tensor) -> Result<RibbonData> {
        let g = h.pivot().ok_or(Error::MissingPivot)?;
        let mu = integrals::integral_data(h)?.mu.ok_or(Error::NotSpherical("no symmetrized integral"))?;
        let r_terms = r.terms().map(|(idx, c)| (h.basis(idx[0]).scale(c), h.basis(idx[1]))).collect();
        let theta = integrals::ribbon_element(h, r)?;
        RibbonData { algebra: h.clone(), r_terms, mu, g, theta }.normalized()
    }

    /// Ribbon data of D(H): R^D = Σ (ε ⊗ e_i) ⊗ (e_i* ⊗ 1), μ^D = Λ ⊗ μ.
    /// No rescaling is needed here; a product δ·δ' other than 1 is an error.
    pub fn from_double(d: &DrinfeldDouble) -> Result<RibbonData> {
        let h = &d.base;
        let n = h.dim();
        let field = h.field();
        let eps = h.counit_coeffs();
        let one = h.unit_coeffs();
        let r_terms = (0..n)
            .map(|i| {
                let mut dual = vec![field.zero(); n];
                dual[i] = field.one();
                (pure(&d.algebra, n, eps, h.basis(i).coeffs()), pure(&d.algebra, n, &dual, one))
            })
            .collect();
        let rd = RibbonData {
            algebra: d.algebra.clone(),
            r_terms,
            mu: d.mu_d.clone(),
            g: d.g_d.clone(),
            theta: d.theta.clone(),
        };
        let (a, b) = rd.delta()?;
        if !(&a * &b).is_one() {
            return Err(Error::UnnormalizedIntegral);
        }
        Ok(rd)
    }

    /// (δ, δ') = (μ(gθ), μ(g⁻¹θ⁻¹)).
    pub fn delta(&self) -> Result<(Scalar, Scalar)> {
        let h = &self.algebra;
        let g_inv = h.inverse(&self.g)?;
        let theta_inv = h.inverse(&self.theta)?;
        let a = h.apply_functional(&self.mu, &h.multiply(&self.g, &self.theta)?)?;
        let b = h.apply_functional(&self.mu, &h.multiply(&g_inv, &theta_inv)?)?;
        if (&a * &b).is_zero() {
            return Err(Error::NotNondegenerate);
        }
        Ok((a, b))
    }

    /// Rescales μ so that δ·δ' = 1, using an exact square root.
    pub fn normalized(mut self) -> Result<RibbonData> {
        let (a, b) = self.delta()?;
        let p = &a * &b;
        if !p.is_one() {
            let t = p.inv()?.sqrt().ok_or(Error::UnnormalizedIntegral)?;
            self.mu = self.mu.scale(&t);
        }
        Ok(self)
    }
}

/// PT(D) as a sum over crossing assignments of per-component bead words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalBead {
    pub words: Vec<Vec<Bead>>,
    pub n_crossings: usize,
}

pub fn total_bead(diagram: &MorseLinkDiagram) -> TotalBead {
    TotalBead {
        words: (0..diagram.n_components()).map(|c| diagram.bead_word(c)).collect(),
        n_crossings: diagram.n_crossings(),
    }
}

/// Σ over crossing assignments of Π_i μ(P_i), without the δ^{−s} factor.
pub fn evaluate_total_bead(tb: &TotalBead, rd: &RibbonData) -> Result<Scalar> {
    let h = &rd.algebra;
    let pow = |x: &Element, p: i64| h.antipode_power(x, p).map(|y| y.coeffs().to_vec());
    // Tables 0..3: S^p(r_t); tables 3..5: S^p(s_t).
    let mut tables = vec![Vec::new(); 5];
    for (r, s) in &rd.r_terms {
        for p in 0..3 {
            tables[p].push(pow(r, p as i64)?);
        }
        for p in 0..2 {
            tables[3 + p].push(pow(s, p as i64)?);
        }
    }
    let words = tb
        .words
        .iter()
        .map(|w| {
            w.iter()
                .map(|b| match *b {
                    Bead::Pivot(e) => Piece::Fixed(usize::from(e < 0)),
                    Bead::Over { crossing, power } => Piece::Var { var: crossing, table: power as usize },
                    Bead::Under { crossing, power } => Piece::Var { var: crossing, table: 3 + power as usize },
                })
                .collect()
        })
        .collect();
    let net = Network {
        algebra: h,
        trace: rd.mu.coeffs(),
        fixed: vec![rd.g.coeffs().to_vec(), h.inverse(&rd.g)?.coeffs().to_vec()],
        tables,
        n_terms: vec![rd.r_terms.len(); tb.n_crossings],
        weights: vec![None; tb.n_crossings],
        words,
    };
    Ok(contract(&net))
}

/// δ^{−s} Σ Π_i μ(P_i).
pub fn hkr_invariant(diagram: &MorseLinkDiagram, rd: &RibbonData) -> Result<Scalar> {
    let (delta, _) = rd.delta()?;
    let s = diagram.linking().signature;
    let sum = evaluate_total_bead(&total_bead(diagram), rd)?;
    Ok(&delta.pow(-s)? * &sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;
    use crate::zoo;

    fn cup(at: usize, o: Rotation) -> LinkEvent {
        LinkEvent::Cup { at, orient: o }
    }
    fn cap(at: usize, o: Rotation) -> LinkEvent {
        LinkEvent::Cap { at, orient: o }
    }
    fn cross(at: usize, code: &str) -> LinkEvent {
        LinkEvent::Cross { at, kind: CrossingKind::parse(code).unwrap() }
    }
    fn bp(component: usize, event: usize, slot: usize) -> Basepoint {
        Basepoint { component, event, slot }
    }

    fn unknot() -> MorseLinkDiagram {
        MorseLinkDiagram::new(vec![cup(0, Rotation::Ccw), cap(0, Rotation::Ccw)], vec![bp(0, 0, 0)]).unwrap()
    }

    /// Kink whose crossing is positive: left strand down, right up, right over.
    pub(crate) fn positive_kink() -> MorseLinkDiagram {
        MorseLinkDiagram::new(vec![cup(0, Rotation::Ccw), cross(0, "pp"), cap(0, Rotation::Cw)], vec![bp(0, 0, 1)])
            .unwrap()
    }

    fn hopf_link() -> MorseLinkDiagram {
        // Two circles side by side, then the inner strands cross twice.
        MorseLinkDiagram::new(
            vec![
                cup(0, Rotation::Ccw),
                cup(2, Rotation::Ccw),
                cross(1, "pn"),
                cross(1, "pp"),
                cap(2, Rotation::Ccw),
                cap(0, Rotation::Ccw),
            ],
            vec![bp(0, 1, 0), bp(1, 1, 3)],
        )
        .unwrap()
    }

    fn z2_double() -> RibbonData {
        let h = zoo::cyclic_group_algebra(2, &Field::Rational).unwrap();
        RibbonData::from_double(&DrinfeldDouble::new(&h).unwrap()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(MorseLinkDiagram::empty().n_components(), 0);
        assert_eq!(unknot().n_components(), 1);
        let bad = MorseLinkDiagram::new(vec![cup(0, Rotation::Ccw), cap(0, Rotation::Cw)], vec![bp(0, 0, 0)]);
        assert!(matches!(bad, Err(Error::MalformedEvents { index: 1, .. })));
        let open = MorseLinkDiagram::new(vec![cup(0, Rotation::Ccw)], vec![]);
        assert!(matches!(open, Err(Error::MalformedEvents { .. })));
        let nobp = MorseLinkDiagram::new(vec![cup(0, Rotation::Ccw), cap(0, Rotation::Ccw)], vec![]);
        assert!(matches!(nobp, Err(Error::BasepointError(_))));
        let wrong = MorseLinkDiagram::new(vec![cup(0, Rotation::Ccw), cap(0, Rotation::Ccw)], vec![bp(0, 0, 2)]);
        assert!(matches!(wrong, Err(Error::BasepointError(_))));
        let inconsistent =
            MorseLinkDiagram::new(vec![cup(0, Rotation::Ccw), cross(0, "np"), cap(0, Rotation::Cw)], vec![bp(0, 0, 0)]);
        assert!(matches!(inconsistent, Err(Error::MalformedEvents { index: 1, .. })));
    }

    #[test]
    fn kind_roundtrip() {
        for l in [true, false] {
            for r in [true, false] {
                for o in [true, false] {
                    let k = CrossingKind::from_strands(l, r, o);
                    assert_eq!(k.left_over(l, r), Some(o));
                    assert_eq!(CrossingKind::parse(k.code()), Some(k));
                }
            }
        }
    }

    #[test]
    fn linking_examples() {
        assert_eq!(positive_kink().linking(), LinkingData { matrix: vec![vec![1]], signature: 1 });
        let unlink = MorseLinkDiagram::new(
            vec![cup(0, Rotation::Ccw), cup(2, Rotation::Cw), cap(2, Rotation::Cw), cap(0, Rotation::Ccw)],
            vec![bp(0, 0, 0), bp(1, 1, 2)],
        )
        .unwrap();
        assert_eq!(unlink.linking(), LinkingData { matrix: vec![vec![0, 0], vec![0, 0]], signature: 0 });
        let l = hopf_link().linking();
        assert_eq!(l.matrix, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(l.signature, 0);
    }

    #[test]
    fn unknot_bead_is_trivial() {
        let tb = total_bead(&unknot());
        assert_eq!(tb.words, vec![vec![Bead::Pivot(-1)]]);
        let cw = MorseLinkDiagram::new(vec![cup(0, Rotation::Cw), cap(0, Rotation::Cw)], vec![bp(0, 0, 0)]).unwrap();
        assert_eq!(total_bead(&cw).words, vec![vec![Bead::Pivot(1)]]);
    }

    #[test]
    fn kink_gives_delta() {
        let rd = z2_double();
        let (delta, _) = rd.delta().unwrap();
        let sum = evaluate_total_bead(&total_bead(&positive_kink()), &rd).unwrap();
        assert_eq!(sum, delta);
        assert!(hkr_invariant(&positive_kink(), &rd).unwrap().is_one());
    }

    #[test]
    fn empty_and_unknot_values() {
        let rd = z2_double();
        assert!(hkr_invariant(&MorseLinkDiagram::empty(), &rd).unwrap().is_one());
        // μ^D(1) for D(k[Z/2]) equals the order of the group.
        assert_eq!(hkr_invariant(&unknot(), &rd).unwrap(), Field::Rational.from_int(2));
    }

    #[test]
    fn moves_preserve_value() {
        let h = zoo::GroupTable::symmetric3();
        let rd = RibbonData::from_double(
            &DrinfeldDouble::build(&zoo::group_algebra(&h, &Field::Rational).unwrap()).unwrap(),
        )
        .unwrap();
        let d = hopf_link();
        let base = hkr_invariant(&d, &rd).unwrap();
        assert_eq!(hkr_invariant(&d.insert_zigzag(1, 1).unwrap(), &rd).unwrap(), base);
        assert_eq!(hkr_invariant(&d.insert_r2(1, 0, true).unwrap(), &rd).unwrap(), base);
        assert_eq!(hkr_invariant(&d.reverse_component(1).unwrap(), &rd).unwrap(), base);
        for (e, s) in d.segments(0) {
            let moved = d.with_basepoints(vec![bp(0, e, s), d.basepoints()[1]]).unwrap();
            assert_eq!(hkr_invariant(&moved, &rd).unwrap(), base);
        }
    }

    #[test]
    fn hopf_link_is_sphere() {
        let s3 = zoo::GroupTable::symmetric3();
        for h in [
            zoo::cyclic_group_algebra(2, &Field::Rational).unwrap(),
            zoo::group_algebra(&s3, &Field::Rational).unwrap(),
        ] {
            let rd = RibbonData::from_double(&DrinfeldDouble::build(&h).unwrap()).unwrap();
            assert!(hkr_invariant(&hopf_link(), &rd).unwrap().is_one());
        }
    }

    #[test]
    fn kink_over_quantum_double() {
        let q = zoo::small_quantum_sl2(2, &Field::cyclotomic(4).one()).unwrap();
        let rd = RibbonData::from_double(&DrinfeldDouble::build(&q.algebra).unwrap()).unwrap();
        let (delta, _) = rd.delta().unwrap();
        assert_eq!(evaluate_total_bead(&total_bead(&positive_kink()), &rd).unwrap(), delta);
        assert!(hkr_invariant(&hopf_link(), &rd).unwrap().is_one());
    }
}
