//! Annular planar diagrams for the four closure types of a braid word,
//! their resolutions into circles, and elementary diagram invariants.
//!
//! Geometry conventions, fixed once and exercised by the golden tables:
//!
//! * The annular axis puncture sits left of the braid box; strands are
//!   numbered from the puncture outwards. Return arcs run
//!   counterclockwise around the puncture and cross the reference ray
//!   (from the puncture to infinity, opposite the box) exactly once.
//! * Each crossing stores its four incident edge ends in
//!   counterclockwise order with the under-strand in slots 0 and 2.
//!   The 0-smoothing joins slots (0,1) and (2,3), the 1-smoothing
//!   joins (0,3) and (1,2); for a positive braid letter the 0-smoothing
//!   is the identity braid.
//! * A clasp closure joins the two rightmost strands: their braid
//!   bottoms are capped into each other, their return arcs likewise,
//!   and the cap clasps the cup with two crossings of one sign.
//! * Augmentation inserts the axis as an unknotted circle straddling
//!   the band of return arcs, passing under every strand on the side
//!   it meets first and over every strand on the other side.

use alloc::string::String;
use alloc::vec::Vec;

use crate::braid::BraidWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClosureKind {
    Braid,
    Clasp,
    AugmentedBraid,
    AugmentedClasp,
}

impl ClosureKind {
    pub fn is_clasp(self) -> bool {
        matches!(self, ClosureKind::Clasp | ClosureKind::AugmentedClasp)
    }

    pub fn is_augmented(self) -> bool {
        matches!(self, ClosureKind::AugmentedBraid | ClosureKind::AugmentedClasp)
    }

    pub fn label(self) -> &'static str {
        match self {
            ClosureKind::Braid => "braid",
            ClosureKind::Clasp => "clasp",
            ClosureKind::AugmentedBraid => "augmented-braid",
            ClosureKind::AugmentedClasp => "augmented-clasp",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    ClaspNeedsTwoStrands,
    SameComponent,
    NoSuchComponent(usize),
    Malformed(String),
}

impl core::fmt::Display for DiagramError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DiagramError::ClaspNeedsTwoStrands => {
                write!(f, "clasp closures need at least 2 strands")
            }
            DiagramError::SameComponent => write!(f, "components must differ"),
            DiagramError::NoSuchComponent(k) => write!(f, "no component {}", k),
            DiagramError::Malformed(m) => write!(f, "malformed diagram: {}", m),
        }
    }
}

/// One end of an edge: a crossing slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlotRef {
    pub crossing: usize,
    pub slot: u8,
}

/// A diagram arc between two crossing slots. `from -> to` is the
/// canonical direction (the component orientation with all flags +1);
/// `ray` is the signed number of reference-ray crossings when the edge
/// is traversed canonically.
#[derive(Clone, Debug)]
pub struct Edge {
    pub from: SlotRef,
    pub to: SlotRef,
    pub ray: i32,
    pub component: usize,
}

/// Crossing as the CCW slot table (edge ids). Slots 0 and 2 carry the
/// under-strand.
#[derive(Clone, Debug)]
pub struct Crossing {
    pub slot_edge: [usize; 4],
}

/// A crossingless circle.
#[derive(Clone, Debug)]
pub struct FreeLoop {
    pub winding: i32,
    pub component: usize,
}

#[derive(Clone, Debug)]
pub struct Component {
    /// Edge ids in traversal order (empty for a free loop component).
    pub cycle: Vec<usize>,
    /// +1 canonical, -1 reversed.
    pub orientation: i8,
    pub is_axis: bool,
}

#[derive(Clone, Debug)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    edges: Vec<Edge>,
    free_loops: Vec<FreeLoop>,
    components: Vec<Component>,
}

/// A complete resolution: one circle partition of the diagram.
#[derive(Clone, Debug)]
pub struct ResolvedState {
    /// Circle index per edge.
    pub edge_circle: Vec<usize>,
    /// Winding (in -1..=1) per circle; free-loop circles come last.
    pub windings: Vec<i32>,
}

impl ResolvedState {
    pub fn circle_count(&self) -> usize {
        self.windings.len()
    }

    pub fn essential(&self, circle: usize) -> bool {
        self.windings[circle] != 0
    }

    pub fn essential_count(&self) -> usize {
        self.windings.iter().filter(|w| **w != 0).count()
    }
}

// ---------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------

/// Netlist node: a crossing slot or an anonymous junction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Node {
    Slot(usize, u8),
    Junction(usize),
}

/// Directed wire with its signed ray count.
struct Wire {
    a: Node,
    b: Node,
    ray: i32,
}

struct Builder {
    crossing_count: usize,
    junction_count: usize,
    wires: Vec<Wire>,
}

impl Builder {
    fn new() -> Self {
        Self { crossing_count: 0, junction_count: 0, wires: Vec::new() }
    }

    fn crossing(&mut self) -> usize {
        self.crossing_count += 1;
        self.crossing_count - 1
    }

    fn junction(&mut self) -> Node {
        self.junction_count += 1;
        Node::Junction(self.junction_count - 1)
    }

    fn wire(&mut self, a: Node, b: Node, ray: i32) {
        self.wires.push(Wire { a, b, ray });
    }

    /// Contract junctions into edges and free loops.
    fn finish(self) -> (Vec<Crossing>, Vec<Edge>, Vec<i32>) {
        // incidence: per node the list of (wire, end) pairs
        let mut incidence: alloc::collections::BTreeMap<Node, Vec<(usize, u8)>> =
            Default::default();
        for (w, wire) in self.wires.iter().enumerate() {
            incidence.entry(wire.a).or_default().push((w, 0));
            incidence.entry(wire.b).or_default().push((w, 1));
        }
        for (node, inc) in &incidence {
            match node {
                Node::Slot(..) => assert_eq!(inc.len(), 1, "slot must have one wire"),
                Node::Junction(..) => assert_eq!(inc.len(), 2, "junction must have two wires"),
            }
        }
        let mut used = alloc::vec![false; self.wires.len()];
        let mut raw_edges: Vec<(SlotRef, SlotRef, i32, usize)> = Vec::new();
        // walk from every slot terminal
        for c in 0..self.crossing_count {
            for s in 0..4u8 {
                let start = Node::Slot(c, s);
                let Some(inc) = incidence.get(&start) else {
                    panic!("unwired slot {:?}", start)
                };
                let (w0, end0) = inc[0];
                if used[w0] {
                    continue;
                }
                // traverse to the other slot
                let mut ray = 0i32;
                let mut min_wire = usize::MAX;
                let mut min_wire_forward = true;
                let mut cur_wire = w0;
                let mut cur_end = end0;
                let terminal: SlotRef;
                loop {
                    used[cur_wire] = true;
                    let wire = &self.wires[cur_wire];
                    let forward = cur_end == 0;
                    ray += if forward { wire.ray } else { -wire.ray };
                    if cur_wire < min_wire {
                        min_wire = cur_wire;
                        min_wire_forward = forward;
                    }
                    let next_node = if forward { wire.b } else { wire.a };
                    match next_node {
                        Node::Slot(c2, s2) => {
                            terminal = SlotRef { crossing: c2, slot: s2 };
                            break;
                        }
                        Node::Junction(_) => {
                            let inc2 = &incidence[&next_node];
                            let (nw, ne) = if (inc2[0].0, inc2[0].1) == (cur_wire, 1 - cur_end) {
                                inc2[1]
                            } else {
                                inc2[0]
                            };
                            cur_wire = nw;
                            cur_end = ne;
                        }
                    }
                }
                // orient the edge along its smallest wire's direction
                let (from, to, ray) = if min_wire_forward {
                    (SlotRef { crossing: c, slot: s }, terminal, ray)
                } else {
                    (terminal, SlotRef { crossing: c, slot: s }, -ray)
                };
                raw_edges.push((from, to, ray, min_wire));
            }
        }
        // leftover wires form crossingless loops
        let mut loops = Vec::new();
        for w0 in 0..self.wires.len() {
            if used[w0] {
                continue;
            }
            let mut winding = 0i32;
            let mut cur_wire = w0;
            let mut cur_end = 0u8;
            loop {
                used[cur_wire] = true;
                let wire = &self.wires[cur_wire];
                let forward = cur_end == 0;
                winding += if forward { wire.ray } else { -wire.ray };
                let next_node = if forward { wire.b } else { wire.a };
                let inc2 = &incidence[&next_node];
                let (nw, ne) = if (inc2[0].0, inc2[0].1) == (cur_wire, 1 - cur_end) {
                    inc2[1]
                } else {
                    inc2[0]
                };
                if nw == w0 && ne == 0 {
                    break;
                }
                cur_wire = nw;
                cur_end = ne;
            }
            loops.push(winding);
        }
        // assign edge ids by smallest wire id for determinism
        raw_edges.sort_by_key(|&(_, _, _, w)| w);
        let mut crossings =
            alloc::vec![Crossing { slot_edge: [usize::MAX; 4] }; self.crossing_count];
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (id, (from, to, ray, _)) in raw_edges.into_iter().enumerate() {
            crossings[from.crossing].slot_edge[from.slot as usize] = id;
            crossings[to.crossing].slot_edge[to.slot as usize] = id;
            edges.push(Edge { from, to, ray, component: usize::MAX });
        }
        (crossings, edges, loops)
    }
}

fn slot(crossing: usize, slot: u8) -> Node {
    Node::Slot(crossing, slot)
}

impl PlanarDiagram {
    /// Build the chosen closure of a braid word. `axis_ccw = false`
    /// reverses the axis component of augmented closures.
    pub fn closure(
        w: &BraidWord,
        kind: ClosureKind,
        axis_ccw: bool,
    ) -> Result<Self, DiagramError> {
        let n = w.strand_count();
        if kind.is_clasp() && n < 2 {
            return Err(DiagramError::ClaspNeedsTwoStrands);
        }
        let mut b = Builder::new();
        // 1. braid letters
        let mut pending_out: Vec<Option<Node>> = alloc::vec![None; n];
        let mut first_in: Vec<Option<Node>> = alloc::vec![None; n];
        let mut hook_in = |b: &mut Builder,
                           pending_out: &mut Vec<Option<Node>>,
                           first_in: &mut Vec<Option<Node>>,
                           p: usize,
                           node: Node| {
            if let Some(prev) = pending_out[p].take() {
                b.wire(prev, node, 0);
            } else {
                first_in[p] = Some(node);
            }
        };
        for &(index, sign) in w.letters() {
            let l = index - 1;
            let r = index;
            let c = b.crossing();
            if sign > 0 {
                // slots: (in_left, out_left, out_right, in_right)
                hook_in(&mut b, &mut pending_out, &mut first_in, l, slot(c, 0));
                hook_in(&mut b, &mut pending_out, &mut first_in, r, slot(c, 3));
                pending_out[l] = Some(slot(c, 1));
                pending_out[r] = Some(slot(c, 2));
            } else {
                // slots: (in_right, in_left, out_left, out_right)
                hook_in(&mut b, &mut pending_out, &mut first_in, r, slot(c, 0));
                hook_in(&mut b, &mut pending_out, &mut first_in, l, slot(c, 1));
                pending_out[l] = Some(slot(c, 2));
                pending_out[r] = Some(slot(c, 3));
            }
        }
        // virtual pass-through for untouched strands
        for p in 0..n {
            if pending_out[p].is_none() {
                let top = b.junction();
                let bot = b.junction();
                b.wire(top, bot, 0); // straight strand, oriented downwards
                first_in[p] = Some(top);
                pending_out[p] = Some(bot);
            }
        }
        let bot: Vec<Node> = pending_out.into_iter().map(Option::unwrap).collect();
        let top: Vec<Node> = first_in.into_iter().map(Option::unwrap).collect();

        // 2. clasp template between the two rightmost strands
        // band terminal pairs: (start of return, its target at the box top)
        let mut band: Vec<(Node, Node)> = Vec::new();
        if kind.is_clasp() {
            for p in 0..n - 2 {
                band.push((bot[p], top[p]));
            }
            let lc = b.crossing();
            let rc = b.crossing();
            // variant: cup over cap at the left crossing, cap over cup
            // at the right one; under-strand occupies slots 0 and 2.
            // left crossing slots:  (cap_in, cup_to_return, cap_valley, cup_peak)
            // right crossing slots: (cup_peak, cap_valley, cup_to_return, cap_to_box)
            b.wire(bot[n - 2], slot(lc, 0), 0); // cap left flank, downwards
            b.wire(slot(lc, 2), slot(rc, 1), 0); // cap valley
            b.wire(slot(rc, 3), bot[n - 1], 0); // cap right flank, up into the box
            b.wire(slot(lc, 3), slot(rc, 0), 0); // cup peak
            band.push((slot(lc, 1), top[n - 2]));
            band.push((slot(rc, 2), top[n - 1]));
        } else {
            for p in 0..n {
                band.push((bot[p], top[p]));
            }
        }

        // 3. returns around the annulus, with or without the axis
        if !kind.is_augmented() {
            for (start, target) in band {
                b.wire(start, target, 1);
            }
        } else {
            let side1: Vec<usize> = (0..n).map(|_| b.crossing()).collect();
            let side2: Vec<usize> = (0..n).map(|_| b.crossing()).collect();
            for (r, (start, target)) in band.into_iter().enumerate() {
                // side1 slots: (axis_in, band_in, axis_out, band_mid)
                // side2 slots: (band_mid, axis_in, band_out, axis_out)
                b.wire(start, slot(side1[r], 1), 0);
                b.wire(slot(side1[r], 3), slot(side2[r], 0), 1);
                b.wire(slot(side2[r], 2), target, 0);
            }
            // the axis circle, counterclockwise around its own centre
            b.wire(slot(side1[0], 2), slot(side2[0], 1), 1); // inner cap
            for r in 0..n - 1 {
                b.wire(slot(side2[r], 3), slot(side2[r + 1], 1), 0);
            }
            b.wire(slot(side2[n - 1], 3), slot(side1[n - 1], 0), -1); // outer cap
            for r in (0..n - 1).rev() {
                b.wire(slot(side1[r + 1], 2), slot(side1[r], 0), 0);
            }
        }

        let axis_first_crossing = if kind.is_augmented() {
            Some(w.letters().len() + if kind.is_clasp() { 2 } else { 0 })
        } else {
            None
        };
        let (crossings, edges, loops) = b.finish();
        let mut d = PlanarDiagram {
            crossings,
            edges,
            free_loops: loops.into_iter().map(|w| FreeLoop { winding: w, component: 0 }).collect(),
            components: Vec::new(),
        };
        d.trace_components(axis_first_crossing);
        if kind.is_augmented() && !axis_ccw {
            let axis = d.axis_component().unwrap();
            d.reverse_component(axis)?;
        }
        Ok(d)
    }

    /// Add a split crossingless circle with the given winding.
    pub fn with_extra_loop(mut self, winding: i32) -> Self {
        let comp = self.components.len();
        self.components.push(Component { cycle: Vec::new(), orientation: 1, is_axis: false });
        self.free_loops.push(FreeLoop { winding, component: comp });
        self
    }

    /// Orient every component along its smallest edge and record the
    /// traversal cycles. `axis_first_crossing` is the id of the first
    /// axis crossing in augmented diagrams (slot 2 carries the inner
    /// cap of the axis circle).
    fn trace_components(&mut self, axis_first_crossing: Option<usize>) {
        let mut comp_of_edge = alloc::vec![usize::MAX; self.edges.len()];
        let mut components: Vec<Component> = Vec::new();
        for start in 0..self.edges.len() {
            if comp_of_edge[start] != usize::MAX {
                continue;
            }
            let comp = components.len();
            let mut cycle = Vec::new();
            // traverse following the start edge's canonical direction
            let mut edge = start;
            let mut forward = true;
            loop {
                comp_of_edge[edge] = comp;
                if !forward {
                    // flip the stored direction to match the traversal
                    let e = &mut self.edges[edge];
                    core::mem::swap(&mut e.from, &mut e.to);
                    e.ray = -e.ray;
                }
                cycle.push(edge);
                let head = self.edges[edge].to;
                let partner = (head.slot + 2) % 4;
                let next = self.crossings[head.crossing].slot_edge[partner as usize];
                if next == start {
                    break;
                }
                forward = self.edges[next].from
                    == SlotRef { crossing: head.crossing, slot: partner };
                edge = next;
            }
            components.push(Component { cycle, orientation: 1, is_axis: false });
        }
        for (e, &c) in comp_of_edge.iter().enumerate() {
            self.edges[e].component = c;
        }
        if let Some(first) = axis_first_crossing {
            let cap_edge = self.crossings[first].slot_edge[2];
            let axis_comp = comp_of_edge[cap_edge];
            components[axis_comp].is_axis = true;
        }
        for fl in &mut self.free_loops {
            fl.component = components.len();
            components.push(Component { cycle: Vec::new(), orientation: 1, is_axis: false });
        }
        self.components = components;
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn free_loops(&self) -> &[FreeLoop] {
        &self.free_loops
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn axis_component(&self) -> Option<usize> {
        self.components.iter().position(|c| c.is_axis)
    }

    /// Sign of a crossing under the current component orientations.
    pub fn crossing_sign(&self, c: usize) -> i8 {
        let cr = &self.crossings[c];
        let under_in = &self.edges[cr.slot_edge[0]];
        let over_in = &self.edges[cr.slot_edge[1]];
        let u = if under_in.to == (SlotRef { crossing: c, slot: 0 }) { 1i8 } else { -1 };
        let o = if over_in.to == (SlotRef { crossing: c, slot: 1 }) { 1i8 } else { -1 };
        let fu = self.components[under_in.component].orientation;
        let fo = self.components[over_in.component].orientation;
        -u * o * fu * fo
    }

    /// `(n_plus, n_minus)` of the oriented diagram.
    pub fn signed_crossing_counts(&self) -> (usize, usize) {
        let mut plus = 0;
        let mut minus = 0;
        for c in 0..self.crossings.len() {
            if self.crossing_sign(c) > 0 {
                plus += 1;
            } else {
                minus += 1;
            }
        }
        (plus, minus)
    }

    pub fn writhe(&self) -> i64 {
        let (p, m) = self.signed_crossing_counts();
        p as i64 - m as i64
    }

    /// Flip the orientation flag of one component.
    pub fn reverse_component(&mut self, k: usize) -> Result<(), DiagramError> {
        let comp =
            self.components.get_mut(k).ok_or(DiagramError::NoSuchComponent(k))?;
        comp.orientation = -comp.orientation;
        Ok(())
    }

    /// Mirror image: every crossing swaps over- and under-strand.
    pub fn mirror(&self) -> Self {
        let mut out = self.clone();
        for c in 0..out.crossings.len() {
            let s = out.crossings[c].slot_edge;
            out.crossings[c].slot_edge = [s[1], s[2], s[3], s[0]];
            // slot indices stored inside edges must follow
        }
        for e in out.edges.iter_mut() {
            e.from.slot = (e.from.slot + 3) % 4;
            e.to.slot = (e.to.slot + 3) % 4;
        }
        out
    }

    /// Half the signed count of crossings between two components.
    pub fn linking_number(&self, c1: usize, c2: usize) -> Result<i64, DiagramError> {
        if c1 == c2 {
            return Err(DiagramError::SameComponent);
        }
        if c1 >= self.components.len() || c2 >= self.components.len() {
            return Err(DiagramError::NoSuchComponent(c1.max(c2)));
        }
        let mut sum = 0i64;
        for c in 0..self.crossings.len() {
            let cr = &self.crossings[c];
            let cu = self.edges[cr.slot_edge[0]].component;
            let co = self.edges[cr.slot_edge[1]].component;
            if (cu == c1 && co == c2) || (cu == c2 && co == c1) {
                sum += self.crossing_sign(c) as i64;
            }
        }
        Ok(sum / 2)
    }

    /// Pairwise linking number table.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let m = self.components.len();
        let mut table = alloc::vec![alloc::vec![0i64; m]; m];
        for c1 in 0..m {
            for c2 in 0..m {
                if c1 != c2 {
                    table[c1][c2] = self.linking_number(c1, c2).unwrap();
                }
            }
        }
        table
    }

    /// Resolve every crossing by the corresponding bit of `state`
    /// (bit c = 1 means the 1-smoothing at crossing c).
    pub fn resolve(&self, state: u64) -> ResolvedState {
        debug_assert!(self.crossings.len() <= 64);
        let mut edge_circle = alloc::vec![usize::MAX; self.edges.len()];
        let mut windings = Vec::new();
        for start in 0..self.edges.len() {
            if edge_circle[start] != usize::MAX {
                continue;
            }
            let circle = windings.len();
            let mut winding = 0i32;
            let mut edge = start;
            let mut forward = true;
            loop {
                edge_circle[edge] = circle;
                let e = &self.edges[edge];
                winding += if forward { e.ray } else { -e.ray };
                let arrive = if forward { e.to } else { e.from };
                let one = state >> arrive.crossing & 1 == 1;
                let partner = match (arrive.slot, one) {
                    (0, false) => 1,
                    (1, false) => 0,
                    (2, false) => 3,
                    (3, false) => 2,
                    (0, true) => 3,
                    (3, true) => 0,
                    (1, true) => 2,
                    (2, true) => 1,
                    _ => unreachable!(),
                };
                let next =
                    self.crossings[arrive.crossing].slot_edge[partner as usize];
                if next == start {
                    break;
                }
                forward = self.edges[next].from
                    == SlotRef { crossing: arrive.crossing, slot: partner };
                edge = next;
            }
            debug_assert!(winding.abs() <= 1, "resolution circle winding out of range");
            windings.push(winding);
        }
        for fl in &self.free_loops {
            windings.push(fl.winding);
        }
        ResolvedState { edge_circle, windings }
    }
}
