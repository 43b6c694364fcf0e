//! Exact discharging audits.
//!
//! Every vertex and every traced face starts with charge `d(x) - 4`. A rule
//! set moves charge between elements (and, for [`RuleSet::T7`], a bank)
//! without creating or destroying any. For a connected plane graph the total
//! is therefore always `-8`.
//!
//! Transfers are counted per incidence: a vertex that appears twice on the
//! boundary walk of a face gives (or receives) twice.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::embedding::{find_kites, EmbeddedGraph, VertexId};
use crate::structure::{
    find_light_edge, find_light_four_face, find_triple_triangle_center, find_two_alternating_cycle,
};

/// One of the four discharging arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleSet {
    /// Light edge with `d(u) <= 4` and sum at most `delta + 2`, for `delta >= 7`.
    T4,
    /// The three configurations for maximum degree 6.
    L5,
    /// Light edge of sum at most 8 for maximum degree 5.
    L6D5,
    /// Light edge of sum at most `delta + 1` or a 2-alternating cycle, for `delta >= 9`.
    T7,
}

impl RuleSet {
    pub const ALL: [RuleSet; 4] = [RuleSet::T4, RuleSet::L5, RuleSet::L6D5, RuleSet::T7];
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleSet::T4 => "T4",
            RuleSet::L5 => "L5",
            RuleSet::L6D5 => "L6_D5",
            RuleSet::T7 => "T7",
        })
    }
}

impl FromStr for RuleSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "t4" => Ok(RuleSet::T4),
            "l5" => Ok(RuleSet::L5),
            "l6" | "l6_d5" => Ok(RuleSet::L6D5),
            "t7" => Ok(RuleSet::T7),
            _ => Err(format!("unknown rule set {s:?} (expected t4, l5, l6 or t7)")),
        }
    }
}

/// An element that can hold charge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(VertexId),
    Face(usize),
    Bank,
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v {v}"),
            Element::Face(id) => write!(f, "f {id}"),
            Element::Bank => f.write_str("bank"),
        }
    }
}

/// Charge on every vertex and traced face, plus the bank when the rule set
/// has one. Face indices follow [`EmbeddedGraph::faces`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeState {
    pub vertex: Vec<Rational64>,
    pub face: Vec<Rational64>,
    pub bank: Option<Rational64>,
}

impl ChargeState {
    pub fn total(&self) -> Rational64 {
        let v: Rational64 = self.vertex.iter().sum();
        let f: Rational64 = self.face.iter().sum();
        v + f + self.bank.unwrap_or_else(Rational64::zero)
    }

    pub fn get(&self, x: Element) -> Option<Rational64> {
        match x {
            Element::Vertex(v) => self.vertex.get(v).copied(),
            Element::Face(f) => self.face.get(f).copied(),
            Element::Bank => self.bank,
        }
    }

    fn elements(&self) -> impl Iterator<Item = (Element, Rational64)> + '_ {
        let vs = self.vertex.iter().enumerate().map(|(v, &c)| (Element::Vertex(v), c));
        let fs = self.face.iter().enumerate().map(|(f, &c)| (Element::Face(f), c));
        vs.chain(fs).chain(self.bank.map(|b| (Element::Bank, b)))
    }

    pub fn negatives(&self) -> Vec<Element> {
        self.elements().filter(|(_, c)| c.is_negative()).map(|(x, _)| x).collect()
    }

    pub fn has_positive(&self) -> bool {
        self.elements().any(|(_, c)| c.is_positive())
    }
}

fn ratio(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn degree_charge(d: usize) -> Rational64 {
    Rational64::from_integer(d as i64 - 4)
}

/// `d(x) - 4` on every vertex and face; bank 0 for [`RuleSet::T7`].
pub fn initial_charges(g: &EmbeddedGraph, ruleset: RuleSet) -> ChargeState {
    ChargeState {
        vertex: (0..g.vertex_count()).map(|v| degree_charge(g.degree(v))).collect(),
        face: g.faces().iter().map(|f| degree_charge(f.degree())).collect(),
        bank: (ruleset == RuleSet::T7).then(Rational64::zero),
    }
}

/// Charges after one simultaneous application of every rule in `ruleset`.
pub fn apply_rules(g: &EmbeddedGraph, ruleset: RuleSet) -> ChargeState {
    let mut s = initial_charges(g, ruleset);
    let delta = g.max_degree();
    let deg = |v: VertexId| g.degree(v);
    let faces = g.faces();
    let half = ratio(1, 2);
    let third = ratio(1, 3);
    let sixth = ratio(1, 6);

    let move_charge = |s: &mut ChargeState, from: Element, to: Element, amount: Rational64| {
        for (x, sign) in [(from, -1i64), (to, 1)] {
            let slot = match x {
                Element::Vertex(v) => &mut s.vertex[v],
                Element::Face(f) => &mut s.face[f],
                Element::Bank => s.bank.as_mut().expect("rule set without a bank"),
            };
            *slot += amount * sign;
        }
    };

    // Per-vertex flag: lies on some face of degree at least 5.
    let mut on_large_face = vec![false; g.vertex_count()];
    for f in faces.iter().filter(|f| f.degree() >= 5) {
        for v in f.vertices() {
            on_large_face[v] = true;
        }
    }

    for f in faces {
        let fe = Element::Face(f.id);
        if f.degree() == 3 {
            let has_low = f.vertices().any(|v| deg(v) == 3 || deg(v) == 4);
            for v in f.vertices() {
                let give = match ruleset {
                    RuleSet::T4 | RuleSet::L6D5 | RuleSet::T7 => (deg(v) >= 5).then_some(half),
                    RuleSet::L5 => match deg(v) {
                        5 => Some(half),
                        6 if has_low => Some(half),
                        6 => Some(third),
                        _ => None,
                    },
                };
                if let Some(amount) = give {
                    move_charge(&mut s, Element::Vertex(v), fe, amount);
                }
            }
        }
        if ruleset == RuleSet::L5 && f.degree() >= 5 {
            for v in f.vertices().filter(|&v| deg(v) == 3) {
                move_charge(&mut s, fe, Element::Vertex(v), half);
            }
        }
    }

    for v in 0..g.vertex_count() {
        let ve = Element::Vertex(v);
        match ruleset {
            RuleSet::T4 if deg(v) == delta => {
                for &u in g.neighbors(v).iter().filter(|&&u| deg(u) == 3) {
                    move_charge(&mut s, ve, Element::Vertex(u), third);
                }
            }
            RuleSet::L5 if deg(v) == 6 => {
                for &u in g.neighbors(v).iter().filter(|&&u| deg(u) == 3) {
                    let amount = if on_large_face[u] { sixth } else { third };
                    move_charge(&mut s, ve, Element::Vertex(u), amount);
                }
            }
            RuleSet::T7 => {
                if deg(v) + 1 >= delta && delta >= 1 {
                    for &u in g.neighbors(v).iter().filter(|&&u| deg(u) == 2 || deg(u) == 3) {
                        move_charge(&mut s, ve, Element::Vertex(u), third);
                    }
                }
                if deg(v) == delta {
                    move_charge(&mut s, ve, Element::Bank, ratio(4, 3));
                }
                if deg(v) == 2 {
                    move_charge(&mut s, Element::Bank, ve, ratio(4, 3));
                }
            }
            _ => {}
        }
    }
    s
}

/// One hypothesis of the minimal-counterexample argument behind a rule set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Precondition {
    pub name: String,
    pub holds: bool,
}

/// Final charges of a rule set together with the counterexample hypotheses
/// it relies on.
///
/// When every precondition holds on a plane graph, the total of `-8` forces
/// some negative charge, which means the matching finder should have
/// succeeded; such a report points at a bug.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub ruleset: RuleSet,
    pub charges: ChargeState,
    pub total: Rational64,
    pub negatives: Vec<Element>,
    pub strictly_positive: bool,
    pub preconditions: Vec<Precondition>,
}

impl AuditReport {
    pub fn failed_preconditions(&self) -> impl Iterator<Item = &Precondition> {
        self.preconditions.iter().filter(|p| !p.holds)
    }

    /// One-line digest: rule set, total, negative count and failed
    /// preconditions.
    pub fn summary(&self) -> String {
        let failed: Vec<&str> = self.failed_preconditions().map(|p| p.name.as_str()).collect();
        format!(
            "audit {}: total = {}, {} negative element(s), failed preconditions: {}",
            self.ruleset,
            fmt_ratio(self.total),
            self.negatives.len(),
            if failed.is_empty() { "none".to_string() } else { failed.join(", ") }
        )
    }
}

fn fmt_ratio(r: Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rules {}", self.ruleset)?;
        for (v, c) in self.charges.vertex.iter().enumerate() {
            writeln!(f, "charge v {v} = {}", fmt_ratio(*c))?;
        }
        for (id, c) in self.charges.face.iter().enumerate() {
            writeln!(f, "charge f {id} = {}", fmt_ratio(*c))?;
        }
        if let Some(b) = self.charges.bank {
            writeln!(f, "bank = {}", fmt_ratio(b))?;
        }
        writeln!(f, "total = {}", fmt_ratio(self.total))?;
        let negs: Vec<String> = self.negatives.iter().map(Element::to_string).collect();
        writeln!(f, "negatives: {}", if negs.is_empty() { "none".into() } else { negs.join(", ") })?;
        writeln!(f, "strictly_positive: {}", if self.strictly_positive { "yes" } else { "no" })?;
        let pre: Vec<String> =
            self.preconditions.iter().map(|p| format!("{}={}", p.name, if p.holds { "ok" } else { "fails" })).collect();
        writeln!(f, "preconditions: {}", pre.join(", "))
    }
}

fn precondition(name: impl Into<String>, holds: bool) -> Precondition {
    Precondition { name: name.into(), holds }
}

fn counterexample_preconditions(g: &EmbeddedGraph, ruleset: RuleSet) -> Vec<Precondition> {
    let delta = g.max_degree();
    let min_deg = g.min_degree();
    let mut out = vec![precondition("kite_free", find_kites(g).is_empty())];
    match ruleset {
        RuleSet::T4 => {
            out.push(precondition("delta>=7", delta >= 7));
            out.push(precondition("min_degree>=3", min_deg >= 3));
            let threes_ok = (0..g.vertex_count())
                .filter(|&v| g.degree(v) == 3)
                .all(|v| g.neighbors(v).iter().all(|&u| g.degree(u) == delta));
            out.push(precondition("3-vertices_adjacent_only_to_delta", threes_ok));
            out.push(precondition("no_light_edge(delta+2,4)", find_light_edge(g, delta + 2, 4).is_none()));
        }
        RuleSet::L5 => {
            out.push(precondition("delta=6", delta == 6));
            out.push(precondition("no_edge_sum<=8", find_light_edge(g, 8, usize::MAX).is_none()));
            out.push(precondition("no_light_4-face", find_light_four_face(g).is_none()));
            out.push(precondition("no_triple_triangle_center", find_triple_triangle_center(g).is_none()));
        }
        RuleSet::L6D5 => {
            out.push(precondition("delta=5", delta == 5));
            out.push(precondition("no_edge_sum<=8", find_light_edge(g, 8, usize::MAX).is_none()));
        }
        RuleSet::T7 => {
            out.push(precondition("delta>=9", delta >= 9));
            out.push(precondition("min_degree>=2", min_deg >= 2));
            out.push(precondition("no_light_edge(delta+1,4)", find_light_edge(g, delta + 1, 4).is_none()));
            out.push(precondition("no_2-alternating_cycle", find_two_alternating_cycle(g).is_none()));
        }
    }
    out
}

/// Applies `ruleset` and reports final charges, negative elements and which
/// counterexample preconditions hold on `g`.
pub fn audit(g: &EmbeddedGraph, ruleset: RuleSet) -> AuditReport {
    let charges = apply_rules(g, ruleset);
    AuditReport {
        ruleset,
        total: charges.total(),
        negatives: charges.negatives(),
        strictly_positive: charges.has_positive(),
        preconditions: counterexample_preconditions(g, ruleset),
        charges,
    }
}
