//! Flat virtual Heegaard diagrams in planar-projected form, the F″
//! evaluation, combinatorial moves and the conversion to surgery links.
//!
//! Each β curve is a cyclic word of events. α curves are horizontal and
//! oriented left to right; `slot` counts crossings on α from the left,
//! starting at 1. `d = 0` marks a crossing where β points up relative to
//! α, `d = 1` one where it points down. Extrema record the horizontal
//! direction of travel. A γ event marks a passage of β through handle
//! `gamma`; such diagrams are not flat until [`FlatHeegaardDiagram::flatten`]
//! has been applied.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::contract::{contract, Network, Piece};
use crate::hkr::{Basepoint, CrossingKind, LinkEvent, MorseLinkDiagram, Rotation};
use crate::hopf::HopfAlgebra;
use crate::scalar::Scalar;
use crate::{integrals, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Travel {
    Right,
    Left,
}

impl Travel {
    pub fn flip(self) -> Travel {
        match self {
            Travel::Right => Travel::Left,
            Travel::Left => Travel::Right,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeegaardEvent {
    Cross { alpha: usize, slot: usize, d: u8 },
    Max(Travel),
    Min(Travel),
    Gamma { gamma: usize, order: usize, dir: Travel },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatHeegaardDiagram {
    genus: usize,
    beta: Vec<Vec<HeegaardEvent>>,
    /// Per β curve, the gap before this event index.
    basepoints: Vec<usize>,
    /// Per α curve, `(component, event)` of each slot in slot order.
    alpha_slots: Vec<Vec<(usize, usize)>>,
}

fn exact_range(mut v: Vec<usize>) -> bool {
    v.sort_unstable();
    v.iter().enumerate().all(|(i, x)| *x == i + 1)
}

impl FlatHeegaardDiagram {
    pub fn new(genus: usize, beta: Vec<Vec<HeegaardEvent>>, basepoints: Vec<usize>) -> Result<FlatHeegaardDiagram> {
        let mut slots: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); genus];
        let mut orders: Vec<Vec<usize>> = vec![Vec::new(); genus];
        for (c, word) in beta.iter().enumerate() {
            for (e, ev) in word.iter().enumerate() {
                match *ev {
                    HeegaardEvent::Cross { alpha, slot, d } => {
                        if alpha >= genus || slot == 0 {
                            return Err(Error::SlotMismatch(format!(
                                "beta {c} event {e}: no slot {slot} on alpha {alpha}"
                            )));
                        }
                        if d > 1 {
                            return Err(Error::Invalid(format!("beta {c} event {e}: d must be 0 or 1")));
                        }
                        slots[alpha].push((slot, c, e));
                    }
                    HeegaardEvent::Gamma { gamma, order, .. } => {
                        if gamma >= genus {
                            return Err(Error::NonAdjacentCrossing(gamma));
                        }
                        orders[gamma].push(order);
                    }
                    _ => {}
                }
            }
            let extrema: Vec<bool> = word
                .iter()
                .filter_map(|ev| match ev {
                    HeegaardEvent::Max(_) => Some(true),
                    HeegaardEvent::Min(_) => Some(false),
                    _ => None,
                })
                .collect();
            let k = extrema.len();
            if (0..k).any(|i| extrema[i] == extrema[(i + 1) % k]) || k % 2 == 1 {
                return Err(Error::UnbalancedExtrema(c));
            }
        }
        let mut alpha_slots = Vec::with_capacity(genus);
        for (a, mut s) in slots.into_iter().enumerate() {
            if !exact_range(s.iter().map(|x| x.0).collect()) {
                return Err(Error::SlotMismatch(format!("slots on alpha {a} are not exactly 1..{}", s.len())));
            }
            s.sort_unstable();
            alpha_slots.push(s.into_iter().map(|(_, c, e)| (c, e)).collect());
        }
        for (g, o) in orders.into_iter().enumerate() {
            if !exact_range(o) {
                return Err(Error::NonAdjacentCrossing(g));
            }
        }
        if basepoints.len() != beta.len() {
            return Err(Error::BasepointError(format!(
                "{} base points for {} beta curves",
                basepoints.len(),
                beta.len()
            )));
        }
        for (c, (b, word)) in basepoints.iter().zip(&beta).enumerate() {
            if *b >= word.len().max(1) {
                return Err(Error::BasepointError(format!("beta {c} has no gap {b}")));
            }
        }
        Ok(FlatHeegaardDiagram { genus, beta, basepoints, alpha_slots })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn beta(&self) -> &[Vec<HeegaardEvent>] {
        &self.beta
    }

    pub fn basepoints(&self) -> &[usize] {
        &self.basepoints
    }

    /// `(component, event)` at each slot of α curve `alpha`, left to right.
    pub fn alpha_slots(&self, alpha: usize) -> &[(usize, usize)] {
        &self.alpha_slots[alpha]
    }

    pub fn is_flat(&self) -> bool {
        self.beta.iter().flatten().all(|e| !matches!(e, HeegaardEvent::Gamma { .. }))
    }

    /// Vertical direction of β curve `c` in the gap before event `pos`
    /// (up when the curve has no extrema).
    pub fn rising_at(&self, c: usize, pos: usize) -> bool {
        let word = &self.beta[c];
        (0..word.len())
            .map(|i| &word[(pos + i) % word.len()])
            .find_map(|ev| match ev {
                HeegaardEvent::Max(_) => Some(true),
                HeegaardEvent::Min(_) => Some(false),
                _ => None,
            })
            .unwrap_or(true)
    }

    fn rebuild(&self, beta: Vec<Vec<HeegaardEvent>>, basepoints: Vec<usize>) -> Result<FlatHeegaardDiagram> {
        FlatHeegaardDiagram::new(self.genus, beta, basepoints)
    }

    fn insert(&self, c: usize, pos: usize, events: &[HeegaardEvent]) -> Result<FlatHeegaardDiagram> {
        let mut beta = self.beta.clone();
        let word = beta.get_mut(c).ok_or_else(|| Error::Invalid(format!("no beta curve {c}")))?;
        if pos > word.len() {
            return Err(Error::Invalid(format!("beta {c} has no gap {pos}")));
        }
        word.splice(pos..pos, events.iter().copied());
        let mut bps = self.basepoints.clone();
        if bps[c] > pos {
            bps[c] += events.len();
        }
        self.rebuild(beta, bps)
    }

    fn shift_slots(beta: &mut [Vec<HeegaardEvent>], alpha: usize, from: usize, by: usize) {
        for ev in beta.iter_mut().flatten() {
            if let HeegaardEvent::Cross { alpha: a, slot, .. } = ev {
                if *a == alpha && *slot >= from {
                    *slot += by;
                }
            }
        }
    }

    /// Reverses the orientation of β curve `c`.
    pub fn reverse_beta(&self, c: usize) -> Result<FlatHeegaardDiagram> {
        let mut beta = self.beta.clone();
        let word = beta.get_mut(c).ok_or_else(|| Error::Invalid(format!("no beta curve {c}")))?;
        word.reverse();
        for ev in word.iter_mut() {
            *ev = match *ev {
                HeegaardEvent::Cross { alpha, slot, d } => HeegaardEvent::Cross { alpha, slot, d: 1 - d },
                HeegaardEvent::Max(t) => HeegaardEvent::Max(t.flip()),
                HeegaardEvent::Min(t) => HeegaardEvent::Min(t.flip()),
                HeegaardEvent::Gamma { gamma, order, dir } => HeegaardEvent::Gamma { gamma, order, dir: dir.flip() },
            };
        }
        let mut bps = self.basepoints.clone();
        let n = word.len().max(1);
        bps[c] = (n - bps[c]) % n;
        self.rebuild(beta, bps)
    }

    /// Reverses α curve `alpha`: slots are renumbered from the right and
    /// every `d` flips. A crossing whose bead changes from `S(x)` to `x`
    /// is wrapped in a pair of extrema carrying g⁻¹ before and g after,
    /// which accounts for `S²` being conjugation by the pivot.
    pub fn reverse_alpha(&self, alpha: usize) -> Result<FlatHeegaardDiagram> {
        let m = self.alpha_slots.get(alpha).ok_or_else(|| Error::Invalid(format!("no alpha curve {alpha}")))?.len();
        let mut beta = Vec::with_capacity(self.beta.len());
        let mut bps = Vec::with_capacity(self.beta.len());
        for (c, word) in self.beta.iter().enumerate() {
            let mut out = Vec::with_capacity(word.len());
            let mut bp = 0;
            for (e, ev) in word.iter().enumerate() {
                if e == self.basepoints[c] {
                    bp = out.len();
                }
                match *ev {
                    HeegaardEvent::Cross { alpha: a, slot, d } if a == alpha => {
                        let flipped = HeegaardEvent::Cross { alpha, slot: m - slot + 1, d: 1 - d };
                        if d == 1 {
                            if self.rising_at(c, e) {
                                out.extend([
                                    HeegaardEvent::Max(Travel::Left),
                                    HeegaardEvent::Min(Travel::Right),
                                    flipped,
                                    HeegaardEvent::Max(Travel::Right),
                                    HeegaardEvent::Min(Travel::Left),
                                ]);
                            } else {
                                out.extend([
                                    HeegaardEvent::Min(Travel::Right),
                                    flipped,
                                    HeegaardEvent::Max(Travel::Right),
                                ]);
                            }
                        } else {
                            out.push(flipped);
                        }
                    }
                    other => out.push(other),
                }
            }
            beta.push(out);
            bps.push(bp);
        }
        self.rebuild(beta, bps)
    }

    /// Inserts, before event `pos` of β curve `c`, a finger of β pushed
    /// across α curve `alpha`, creating slots `slot` and `slot + 1`.
    pub fn insert_r2(
        &self,
        c: usize,
        pos: usize,
        alpha: usize,
        slot: usize,
        right: bool,
    ) -> Result<FlatHeegaardDiagram> {
        let m = self.alpha_slots.get(alpha).ok_or_else(|| Error::Invalid(format!("no alpha curve {alpha}")))?.len();
        if slot == 0 || slot > m + 1 {
            return Err(Error::SlotMismatch(format!("cannot insert at slot {slot} of alpha {alpha}")));
        }
        let up = c < self.beta.len() && self.rising_at(c, pos);
        let cross = |s: usize, d: u8| HeegaardEvent::Cross { alpha, slot: s, d };
        let t = if right { Travel::Right } else { Travel::Left };
        let (first, second) = if right { (slot, slot + 1) } else { (slot + 1, slot) };
        let events = if up {
            [cross(first, 0), HeegaardEvent::Max(t), cross(second, 1), HeegaardEvent::Min(t)]
        } else {
            [cross(first, 1), HeegaardEvent::Min(t), cross(second, 0), HeegaardEvent::Max(t)]
        };
        let mut shifted = self.clone();
        Self::shift_slots(&mut shifted.beta, alpha, slot, 2);
        shifted.insert(c, pos, &events)
    }

    /// Inserts a canceling max/min pair before event `pos` of β curve `c`.
    pub fn insert_extremum_pair(&self, c: usize, pos: usize, travel: Travel) -> Result<FlatHeegaardDiagram> {
        let up = c < self.beta.len() && self.rising_at(c, pos);
        let events = if up {
            [HeegaardEvent::Max(travel), HeegaardEvent::Min(travel)]
        } else {
            [HeegaardEvent::Min(travel), HeegaardEvent::Max(travel)]
        };
        self.insert(c, pos, &events)
    }

    /// Moves the base point of β curve `c` past one event.
    pub fn shift_basepoint(&self, c: usize) -> Result<FlatHeegaardDiagram> {
        let mut bps = self.basepoints.clone();
        let n = self.beta.get(c).ok_or_else(|| Error::Invalid(format!("no beta curve {c}")))?.len().max(1);
        bps[c] = (bps[c] + 1) % n;
        self.rebuild(self.beta.clone(), bps)
    }

    /// Removes every γ passage. Sliding β over α_i next to the point
    /// α_i ∩ γ_i only creates β–β crossings, which carry no data here,
    /// so each removal leaves the α crossings and extrema untouched.
    pub fn flatten(&self) -> Result<FlatHeegaardDiagram> {
        let mut beta = Vec::with_capacity(self.beta.len());
        let mut bps = Vec::with_capacity(self.beta.len());
        for (c, word) in self.beta.iter().enumerate() {
            let keep = |ev: &HeegaardEvent| !matches!(ev, HeegaardEvent::Gamma { .. });
            let before = word[..self.basepoints[c].min(word.len())].iter().filter(|e| !keep(e)).count();
            let out: Vec<HeegaardEvent> = word.iter().copied().filter(keep).collect();
            let bp = self.basepoints[c] - before;
            bps.push(if bp >= out.len().max(1) { 0 } else { bp });
            beta.push(out);
        }
        self.rebuild(beta, bps)
    }

    /// Surgery link of a diagram in normal form: β curve `i` passes once
    /// through handle `i` and nowhere else.
    ///
    /// The passage becomes a strand under every β strand crossing α_i,
    /// in slot order; each α crossing becomes a crossing of that strand
    /// with the β strand above it. Strands are routed with virtual
    /// crossings, one crossing per vertical pass, so the bead word of
    /// every component matches the F″ word of its β curve.
    pub fn to_surgery_link(&self) -> Result<MorseLinkDiagram> {
        let g = self.genus;
        if self.beta.len() != g {
            return Err(Error::NotNormalForm(format!("{} beta curves for genus {g}", self.beta.len())));
        }
        let mut d = self.clone();
        for c in 0..g {
            let gammas: Vec<(usize, usize, Travel)> = d.beta[c]
                .iter()
                .enumerate()
                .filter_map(|(e, ev)| match *ev {
                    HeegaardEvent::Gamma { gamma, dir, .. } => Some((e, gamma, dir)),
                    _ => None,
                })
                .collect();
            match gammas.as_slice() {
                [(_, gamma, dir)] if *gamma == c => {
                    if *dir == Travel::Left {
                        d = d.reverse_beta(c)?;
                    }
                }
                _ => return Err(Error::NotNormalForm(format!("beta {c} must pass exactly once through handle {c}"))),
            }
        }

        let mut passes: Vec<Pass> = Vec::new();
        let mut turns: Vec<Turn> = Vec::new();
        let mut first_pass = Vec::with_capacity(g);
        for c in 0..g {
            let word = &d.beta[c];
            let gpos = word.iter().position(|e| matches!(e, HeegaardEvent::Gamma { .. })).expect("checked");
            let mut b = PassBuilder::new(c, passes.len());
            for k in 1..word.len() {
                match word[(gpos + k) % word.len()] {
                    HeegaardEvent::Cross { alpha, slot, d } => b.role(Role::Over(alpha, slot), d == 0)?,
                    HeegaardEvent::Max(t) => b.turn(true, t)?,
                    HeegaardEvent::Min(t) => b.turn(false, t)?,
                    HeegaardEvent::Gamma { .. } => unreachable!(),
                }
            }
            let m = d.alpha_slots[c].len();
            if m == 0 && !b.current().up {
                return Err(Error::NotNormalForm(format!("beta {c} must point up through handle {c}")));
            }
            for h in 1..=m {
                b.role(Role::Under(c, h), true)?;
            }
            first_pass.push(passes.len());
            let (p, t) = b.close();
            passes.extend(p);
            turns.extend(t);
        }

        // Bottom: one cup per minimum.
        let mut events = Vec::new();
        let mut slots: Vec<usize> = Vec::new();
        for t in turns.iter().filter(|t| !t.is_max) {
            let (l, r, orient) = match t.travel {
                Travel::Right => (t.from, t.to, Rotation::Ccw),
                Travel::Left => (t.to, t.from, Rotation::Cw),
            };
            events.push(LinkEvent::Cup { at: slots.len(), orient });
            slots.extend([l, r]);
        }
        let mut basepoints: Vec<Option<Basepoint>> = vec![None; g];
        for (c, p) in first_pass.iter().enumerate() {
            if passes[*p].role.is_none() {
                let slot = slots.iter().position(|x| x == p).expect("pass opened by a cup");
                basepoints[c] = Some(Basepoint { component: c, event: events.len() - 1, slot });
            }
        }

        // Middle: the crossings, in order of (alpha, slot).
        let mut crossings: BTreeMap<(usize, usize), (Option<usize>, Option<usize>)> = BTreeMap::new();
        for (i, p) in passes.iter().enumerate() {
            match p.role {
                Some(Role::Over(a, h)) => crossings.entry((a, h)).or_default().0 = Some(i),
                Some(Role::Under(a, h)) => crossings.entry((a, h)).or_default().1 = Some(i),
                None => {}
            }
        }
        for ((a, h), pair) in crossings {
            let (Some(over), Some(under)) = pair else {
                return Err(Error::NotNormalForm(format!("slot {h} of alpha {a} has no partner")));
            };
            let u = slots.iter().position(|x| *x == under).expect("open");
            let mut o = slots.iter().position(|x| *x == over).expect("open");
            let target = if o > u { u + 1 } else { u };
            while o > target {
                events.push(LinkEvent::Virtual { at: o - 1 });
                slots.swap(o - 1, o);
                o -= 1;
            }
            while o < target {
                events.push(LinkEvent::Virtual { at: o });
                slots.swap(o, o + 1);
                o += 1;
            }
            let at = o - 1;
            let kind = CrossingKind::from_strands(true, passes[over].up, false);
            events.push(LinkEvent::Cross { at, kind });
            slots.swap(at, at + 1);
            let c = passes[under].component;
            if first_pass[c] == under {
                basepoints[c] = Some(Basepoint { component: c, event: events.len() - 1, slot: at + 1 });
            }
        }

        // Top: one cap per maximum.
        for t in turns.iter().filter(|t| t.is_max) {
            let (l, r, orient) = match t.travel {
                Travel::Right => (t.from, t.to, Rotation::Cw),
                Travel::Left => (t.to, t.from, Rotation::Ccw),
            };
            let li = slots.iter().position(|x| *x == l).expect("open");
            let mut ri = slots.iter().position(|x| *x == r).expect("open");
            let target = if ri > li { li + 1 } else { li };
            while ri > target {
                events.push(LinkEvent::Virtual { at: ri - 1 });
                slots.swap(ri - 1, ri);
                ri -= 1;
            }
            while ri < target {
                events.push(LinkEvent::Virtual { at: ri });
                slots.swap(ri, ri + 1);
                ri += 1;
            }
            let at = ri - 1;
            events.push(LinkEvent::Cap { at, orient });
            slots.drain(at..at + 2);
        }
        MorseLinkDiagram::new(events, basepoints.into_iter().map(|b| b.expect("placed")).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    Over(usize, usize),
    Under(usize, usize),
}

#[derive(Clone, Copy, Debug)]
struct Pass {
    component: usize,
    up: bool,
    role: Option<Role>,
}

#[derive(Clone, Copy, Debug)]
struct Turn {
    is_max: bool,
    travel: Travel,
    from: usize,
    to: usize,
}

/// Cuts one β curve into vertical passes with at most one crossing each.
struct PassBuilder {
    component: usize,
    offset: usize,
    passes: Vec<Pass>,
    turns: Vec<(bool, Travel)>,
}

impl PassBuilder {
    fn new(component: usize, offset: usize) -> PassBuilder {
        let mut b = PassBuilder {
            component,
            offset,
            passes: vec![Pass { component, up: true, role: None }],
            turns: Vec::new(),
        };
        // Keeps the first pass free for the last under-crossing.
        b.push_turn(Travel::Left);
        b.push_turn(Travel::Left);
        b
    }

    fn current(&self) -> &Pass {
        self.passes.last().expect("nonempty")
    }

    fn push_turn(&mut self, travel: Travel) {
        let up = self.current().up;
        self.turns.push((up, travel));
        self.passes.push(Pass { component: self.component, up: !up, role: None });
    }

    fn turn(&mut self, is_max: bool, travel: Travel) -> Result<()> {
        if self.current().up != is_max {
            return Err(Error::NotNormalForm(format!(
                "beta {}: extremum against the direction of travel",
                self.component
            )));
        }
        self.push_turn(travel);
        Ok(())
    }

    fn role(&mut self, role: Role, up: bool) -> Result<()> {
        if self.current().up != up {
            return Err(Error::NotNormalForm(format!(
                "beta {}: crossing direction disagrees with the extrema",
                self.component
            )));
        }
        if self.current().role.is_some() {
            self.push_turn(Travel::Left);
            self.push_turn(Travel::Left);
        }
        self.passes.last_mut().expect("nonempty").role = Some(role);
        Ok(())
    }

    fn close(mut self) -> (Vec<Pass>, Vec<Turn>) {
        let last = self.passes.pop().expect("nonempty");
        self.passes[0].role = last.role;
        let k = self.passes.len();
        let turns = self
            .turns
            .iter()
            .enumerate()
            .map(|(i, (is_max, travel))| Turn {
                is_max: *is_max,
                travel: *travel,
                from: self.offset + i,
                to: self.offset + (i + 1) % k,
            })
            .collect();
        (self.passes, turns)
    }
}

/// F″_H = ε(Λ)^v Π_i μ(P_i) with λ(Λ) = 1 and μ the symmetrized integral.
pub fn f_double_prime(diagram: &FlatHeegaardDiagram, h: &HopfAlgebra) -> Result<Scalar> {
    if !diagram.is_flat() {
        return Err(Error::NotFlat);
    }
    let data = integrals::integral_data(h)?;
    let mu = data.mu.ok_or(Error::NotSpherical("no symmetrized integral"))?;
    if !h.apply_functional(&data.lambda, &data.cointegral)?.is_one() {
        return Err(Error::UnnormalizedIntegral);
    }
    let g = h.pivot().ok_or(Error::MissingPivot)?;
    let n = h.dim();
    let basis: [Vec<Vec<Scalar>>; 2] = [
        (0..n).map(|j| h.basis(j).coeffs().to_vec()).collect(),
        (0..n).map(|j| h.antipode(&h.basis(j)).map(|x| x.coeffs().to_vec())).collect::<Result<_>>()?,
    ];

    let mut terms: Vec<Vec<Vec<usize>>> = Vec::with_capacity(diagram.genus);
    let mut weights = Vec::with_capacity(diagram.genus);
    let mut v = 0u32;
    for a in 0..diagram.genus {
        let m = diagram.alpha_slots[a].len();
        if m == 0 {
            v += 1;
            terms.push(Vec::new());
            weights.push(None);
            continue;
        }
        let t = h.iterated_comultiply(&data.cointegral, m)?;
        let (idx, w): (Vec<Vec<usize>>, Vec<Scalar>) = t.terms().map(|(i, c)| (i.to_vec(), c.clone())).unzip();
        terms.push(idx);
        weights.push(Some(w));
    }

    let mut table_ids: BTreeMap<(usize, usize, u8), usize> = BTreeMap::new();
    let mut tables: Vec<Vec<Vec<Scalar>>> = Vec::new();
    let mut words = Vec::with_capacity(diagram.beta.len());
    for (c, word) in diagram.beta.iter().enumerate() {
        let start = diagram.basepoints[c];
        let mut pieces = Vec::new();
        for k in 0..word.len() {
            match word[(start + k) % word.len()] {
                HeegaardEvent::Cross { alpha, slot, d } => {
                    let table = *table_ids.entry((alpha, slot, d)).or_insert_with(|| {
                        tables.push(terms[alpha].iter().map(|idx| basis[d as usize][idx[slot - 1]].clone()).collect());
                        tables.len() - 1
                    });
                    pieces.push(Piece::Var { var: alpha, table });
                }
                HeegaardEvent::Max(Travel::Right) => pieces.push(Piece::Fixed(0)),
                HeegaardEvent::Min(Travel::Right) => pieces.push(Piece::Fixed(1)),
                _ => {}
            }
        }
        words.push(pieces);
    }
    let net = Network {
        algebra: h,
        trace: mu.coeffs(),
        fixed: vec![g.coeffs().to_vec(), h.inverse(&g)?.coeffs().to_vec()],
        tables,
        n_terms: terms.iter().map(Vec::len).collect(),
        weights,
        words,
    };
    let eps = h.apply_functional(&h.counit(), &data.cointegral)?;
    Ok(&eps.pow(v as i64)? * &contract(&net))
}

fn cross(alpha: usize, slot: usize, d: u8) -> HeegaardEvent {
    HeegaardEvent::Cross { alpha, slot, d }
}

fn passage(gamma: usize) -> HeegaardEvent {
    HeegaardEvent::Gamma { gamma, order: 1, dir: Travel::Right }
}

/// Genus-1 diagram of the lens space L(p, 1): β passes once through the
/// handle and then coils `p` times over α, crossing it downward at slots
/// p, p − 1, ..., 1. The surgery link is the p-framed unknot.
pub fn lens_space(p: usize) -> Result<FlatHeegaardDiagram> {
    if p == 0 {
        return Err(Error::Invalid(String::from("lens space needs p >= 1")));
    }
    let mut word = vec![passage(0)];
    for k in 0..p {
        word.push(HeegaardEvent::Max(Travel::Left));
        word.push(cross(0, p - k, 1));
        word.push(HeegaardEvent::Min(if k + 1 == p { Travel::Left } else { Travel::Right }));
    }
    FlatHeegaardDiagram::new(1, vec![word], vec![1])
}

/// Genus-1 diagram of S³, the case p = 1 of [`lens_space`].
pub fn standard_sphere() -> FlatHeegaardDiagram {
    lens_space(1).expect("p = 1")
}

/// Two-curve genus-2 diagram in normal form with five α crossings:
/// β₁ meets α₂ (up) and α₁ (down), β₂ meets α₂ twice and α₁ once, all up.
/// Its linking matrix is [[1, −1], [−1, −2]].
pub fn genus_two_example() -> FlatHeegaardDiagram {
    use HeegaardEvent::{Max, Min};
    use Travel::{Left, Right};
    FlatHeegaardDiagram::new(
        2,
        vec![
            vec![passage(0), cross(1, 1, 0), Max(Right), cross(0, 1, 1), Min(Left), Max(Right), Min(Left)],
            vec![passage(1), cross(1, 3, 0), Max(Right), Min(Left), cross(1, 2, 0), cross(0, 2, 0)],
        ],
        vec![1, 1],
    )
    .expect("well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::DrinfeldDouble;
    use crate::hkr::{hkr_invariant, total_bead, Bead, RibbonData};
    use crate::scalar::Field;
    use crate::zoo;

    fn z2() -> HopfAlgebra {
        zoo::cyclic_group_algebra(2, &Field::Rational).unwrap()
    }

    fn z(n: i64) -> Scalar {
        Field::Rational.from_int(n)
    }

    #[test]
    fn validation_errors() {
        let dup = FlatHeegaardDiagram::new(1, vec![vec![cross(0, 1, 0), cross(0, 1, 1)]], vec![0]);
        assert!(matches!(dup, Err(Error::SlotMismatch(_))));
        let gap = FlatHeegaardDiagram::new(1, vec![vec![cross(0, 2, 0)]], vec![0]);
        assert!(matches!(gap, Err(Error::SlotMismatch(_))));
        let unbalanced = FlatHeegaardDiagram::new(1, vec![vec![HeegaardEvent::Max(Travel::Left)]], vec![0]);
        assert!(matches!(unbalanced, Err(Error::UnbalancedExtrema(0))));
        let two_max = FlatHeegaardDiagram::new(
            0,
            vec![vec![
                HeegaardEvent::Max(Travel::Left),
                HeegaardEvent::Max(Travel::Left),
                HeegaardEvent::Min(Travel::Left),
                HeegaardEvent::Min(Travel::Left),
            ]],
            vec![0],
        );
        assert!(matches!(two_max, Err(Error::UnbalancedExtrema(0))));
        let bp = FlatHeegaardDiagram::new(1, vec![vec![cross(0, 1, 0)]], vec![]);
        assert!(matches!(bp, Err(Error::BasepointError(_))));
        assert!(genus_two_example().flatten().unwrap().is_flat());
        assert!(matches!(f_double_prime(&genus_two_example(), &z2()), Err(Error::NotFlat)));
    }

    #[test]
    fn sphere_gives_one() {
        let s3 = standard_sphere().flatten().unwrap();
        assert!(f_double_prime(&s3, &z2()).unwrap().is_one());
        let s3g = zoo::GroupTable::symmetric3();
        assert!(f_double_prime(&s3, &zoo::group_algebra(&s3g, &Field::Rational).unwrap()).unwrap().is_one());
    }

    #[test]
    fn lens_spaces_count_homomorphisms() {
        let s3g = zoo::GroupTable::symmetric3();
        let s3 = zoo::group_algebra(&s3g, &Field::Rational).unwrap();
        // Elements of order dividing p: Z/2 has 2 for p = 2; S3 has 4 for p = 2, 3 for p = 3.
        assert_eq!(f_double_prime(&lens_space(2).unwrap().flatten().unwrap(), &z2()).unwrap(), z(2));
        assert_eq!(f_double_prime(&lens_space(2).unwrap().flatten().unwrap(), &s3).unwrap(), z(4));
        assert_eq!(f_double_prime(&lens_space(3).unwrap().flatten().unwrap(), &s3).unwrap(), z(3));
    }

    #[test]
    fn surgery_links() {
        for p in 1..=3 {
            let link = lens_space(p).unwrap().to_surgery_link().unwrap();
            assert_eq!(link.n_components(), 1);
            assert_eq!(link.linking().matrix, vec![vec![p as i64]]);
        }
        let link = genus_two_example().to_surgery_link().unwrap();
        assert_eq!(link.linking().matrix, vec![vec![1, -1], vec![-1, -2]]);
        assert_eq!(link.n_crossings(), 5);
    }

    #[test]
    fn bead_words_follow_the_diagram() {
        let link = genus_two_example().to_surgery_link().unwrap();
        let tb = total_bead(&link);
        // Crossings are numbered in (alpha, slot) order: (0,1) (0,2) (1,1) (1,2) (1,3).
        let over = |crossing, power| Bead::Over { crossing, power };
        let under = |crossing| Bead::Under { crossing, power: 0 };
        let strip = |w: &[Bead]| -> Vec<Bead> {
            let mut out: Vec<Bead> = Vec::new();
            for b in w {
                match (out.last(), b) {
                    (Some(Bead::Pivot(x)), Bead::Pivot(y)) if x + y == 0 => {
                        out.pop();
                    }
                    _ => out.push(*b),
                }
            }
            out
        };
        assert_eq!(
            strip(&tb.words[0]),
            vec![over(2, 1), Bead::Pivot(1), over(0, 2), Bead::Pivot(1), under(0), under(1)]
        );
        assert_eq!(
            strip(&tb.words[1]),
            vec![over(4, 1), Bead::Pivot(1), over(3, 1), over(1, 1), under(2), under(3), under(4)]
        );
    }

    #[test]
    fn main_identity_on_small_cases() {
        let s3g = zoo::GroupTable::symmetric3();
        for h in [z2(), zoo::group_algebra(&s3g, &Field::Rational).unwrap()] {
            let rd = RibbonData::from_double(&DrinfeldDouble::build(&h).unwrap()).unwrap();
            for d in [standard_sphere(), lens_space(2).unwrap(), lens_space(3).unwrap(), genus_two_example()] {
                let f = f_double_prime(&d.flatten().unwrap(), &h).unwrap();
                let k = hkr_invariant(&d.to_surgery_link().unwrap(), &rd).unwrap();
                assert_eq!(f, k);
            }
        }
    }

    #[test]
    fn moves_preserve_f() {
        let h = zoo::small_quantum_sl2(2, &Field::cyclotomic(4).one()).unwrap().algebra;
        let d = genus_two_example().flatten().unwrap();
        let base = f_double_prime(&d, &h).unwrap();
        let same = |x: FlatHeegaardDiagram| assert_eq!(f_double_prime(&x, &h).unwrap(), base);
        same(d.reverse_beta(0).unwrap());
        same(d.reverse_beta(1).unwrap());
        same(d.reverse_alpha(0).unwrap());
        same(d.reverse_alpha(1).unwrap());
        same(d.insert_r2(0, 2, 0, 1, true).unwrap());
        same(d.insert_r2(1, 3, 1, 2, false).unwrap());
        same(d.insert_extremum_pair(1, 0, Travel::Right).unwrap());
        let mut x = d.clone();
        for _ in 0..6 {
            x = x.shift_basepoint(0).unwrap();
            same(x.clone());
        }
    }
}
