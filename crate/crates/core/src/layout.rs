//! Coupling maps, the heavy-hex Eagle graph and SWAP-free placements.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::library::{CompositeKind, LibraryGate};

/// Undirected device connectivity. Edges are stored as `[lo, hi]`, sorted
/// and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMap", into = "RawMap")]
pub struct CouplingMap {
    name: String,
    num_qubits: usize,
    edges: Vec<[usize; 2]>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawMap {
    name: String,
    num_qubits: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawMap> for CouplingMap {
    type Error = Error;

    fn try_from(raw: RawMap) -> Result<CouplingMap> {
        CouplingMap::new(raw.name, raw.num_qubits, &raw.edges)
    }
}

impl From<CouplingMap> for RawMap {
    fn from(m: CouplingMap) -> RawMap {
        RawMap { name: m.name, num_qubits: m.num_qubits, edges: m.edges }
    }
}

impl CouplingMap {
    pub fn new(name: impl Into<String>, num_qubits: usize, edges: &[[usize; 2]]) -> Result<CouplingMap> {
        if num_qubits == 0 {
            return Err(Error::InvalidMap("no qubits".into()));
        }
        let mut set = BTreeSet::new();
        for &[a, b] in edges {
            if a >= num_qubits || b >= num_qubits {
                return Err(Error::InvalidMap(format!("edge ({a}, {b}) is outside 0..{num_qubits}")));
            }
            if a == b {
                return Err(Error::InvalidMap(format!("self-loop on {a}")));
            }
            set.insert([a.min(b), a.max(b)]);
        }
        let edges: Vec<[usize; 2]> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); num_qubits];
        for &[a, b] in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for n in &mut adj {
            n.sort_unstable();
        }
        Ok(CouplingMap { name: name.into(), num_qubits, edges, adj })
    }

    pub fn from_json(text: &str) -> Result<CouplingMap> {
        Ok(serde_json::from_str(text)?)
    }

    /// Pretty JSON with one edge per line.
    pub fn to_json(&self) -> String {
        let name = serde_json::to_string(&self.name).expect("string serializes");
        let edges: Vec<String> = self.edges.iter().map(|[a, b]| format!("    [{a}, {b}]")).collect();
        format!(
            "{{\n  \"name\": {name},\n  \"num_qubits\": {},\n  \"edges\": [\n{}\n  ]\n}}",
            self.num_qubits,
            edges.join(",\n")
        )
    }

    pub fn load(path: impl AsRef<Path>) -> Result<CouplingMap> {
        CouplingMap::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(std::fs::write(path, self.to_json() + "\n")?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn neighbors(&self, q: usize) -> &[usize] {
        &self.adj[q]
    }

    pub fn degree(&self, q: usize) -> usize {
        self.adj[q].len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a < self.num_qubits && self.adj[a].binary_search(&b).is_ok()
    }

    /// BFS path from `a` to `b`, both ends included. Ties follow neighbor
    /// order, so the result is deterministic.
    pub fn shortest_path(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        for q in [a, b] {
            if q >= self.num_qubits {
                return Err(Error::QubitOutOfRange { index: q, width: self.num_qubits });
            }
        }
        let mut prev = vec![usize::MAX; self.num_qubits];
        prev[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                let mut path = vec![b];
                let mut v = b;
                while v != a {
                    v = prev[v];
                    path.push(v);
                }
                path.reverse();
                return Ok(path);
            }
            for &v in &self.adj[u] {
                if prev[v] == usize::MAX {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        Err(Error::Disconnected(a, b))
    }

    pub fn distance(&self, a: usize, b: usize) -> Result<usize> {
        Ok(self.shortest_path(a, b)?.len() - 1)
    }

    pub fn is_connected(&self) -> bool {
        (1..self.num_qubits).all(|q| self.shortest_path(0, q).is_ok())
    }
}

/// 127-qubit heavy-hex lattice of the Eagle processor family.
///
/// Seven rows of data qubits joined by four bridge qubits per gap. Bridges
/// sit at columns 0, 4, 8, 12 or 2, 6, 10, 14, alternating gap by gap. The
/// last row starts at column 1.
pub fn heavy_hex_eagle() -> CouplingMap {
    // (first column, length) per row.
    const ROWS: [(usize, usize); 7] = [(0, 14), (0, 15), (0, 15), (0, 15), (0, 15), (0, 15), (1, 14)];
    let mut edges = Vec::new();
    let mut next = 0;
    let mut row_ids: Vec<BTreeMap<usize, usize>> = Vec::new();
    let mut bridges: Vec<Vec<(usize, usize)>> = Vec::new();
    for (r, &(first, len)) in ROWS.iter().enumerate() {
        let ids: BTreeMap<usize, usize> = (0..len).map(|k| (first + k, next + k)).collect();
        next += len;
        for k in 1..len {
            edges.push([ids[&(first + k - 1)], ids[&(first + k)]]);
        }
        row_ids.push(ids);
        if r + 1 < ROWS.len() {
            let cols = if r % 2 == 0 { [0, 4, 8, 12] } else { [2, 6, 10, 14] };
            bridges.push(cols.iter().map(|&c| (c, next + cols.iter().position(|&x| x == c).unwrap())).collect());
            next += 4;
        }
    }
    for (r, gap) in bridges.iter().enumerate() {
        for &(col, id) in gap {
            edges.push([row_ids[r][&col], id]);
            edges.push([id, row_ids[r + 1][&col]]);
        }
    }
    CouplingMap::new("heavy_hex_eagle", next, &edges).expect("generated map is valid")
}

/// The `ibm_brisbane` coupling graph.
pub fn brisbane() -> CouplingMap {
    let mut m = heavy_hex_eagle();
    m.name = "ibm_brisbane".into();
    m
}

/// Seven qubits forming an "I": a three-qubit top bar, a bridge, and a
/// three-qubit bottom bar whose middle touches the bridge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IShape {
    pub top: [usize; 3],
    pub stem: usize,
    pub bottom: [usize; 3],
}

impl IShape {
    pub fn validate(&self, map: &CouplingMap) -> Result<()> {
        let distinct: BTreeSet<usize> = self.qubits().into_iter().collect();
        if distinct.len() != 7 {
            return Err(Error::InvalidPlacement("I-shape qubits must be distinct".into()));
        }
        let needed = [
            (self.top[0], self.top[1]),
            (self.top[1], self.top[2]),
            (self.top[1], self.stem),
            (self.stem, self.bottom[1]),
            (self.bottom[0], self.bottom[1]),
            (self.bottom[1], self.bottom[2]),
        ];
        for (a, b) in needed {
            if !map.adjacent(a, b) {
                return Err(Error::InvalidPlacement(format!("I-shape needs edge ({a}, {b})")));
            }
        }
        Ok(())
    }

    pub fn qubits(&self) -> [usize; 7] {
        let [a, b, c] = self.top;
        let [d, e, f] = self.bottom;
        [a, b, c, self.stem, d, e, f]
    }
}

/// The I-shape on `ibm_brisbane` used by every library placement.
pub fn ishape_brisbane() -> IShape {
    IShape { top: [61, 62, 63], stem: 72, bottom: [80, 81, 82] }
}

/// Logical label to physical qubit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub gate: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub device: String,
    pub assignment: BTreeMap<String, usize>,
}

impl Placement {
    pub fn from_json(text: &str) -> Result<Placement> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("placement serializes")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Placement> {
        Placement::from_json(&std::fs::read_to_string(path)?)
    }

    /// Physical qubit of each circuit qubit, in circuit order. Checks that
    /// every qubit is covered, the assignment is injective and in range.
    pub fn physical(&self, circuit: &Circuit, map: &CouplingMap) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(circuit.width());
        for q in 0..circuit.width() {
            let label = circuit.label(q);
            let &p = self.assignment.get(label).ok_or_else(|| Error::UncoveredQubit(label.to_string()))?;
            if p >= map.num_qubits() {
                return Err(Error::InvalidPlacement(format!("{label} -> {p} is outside the device")));
            }
            if out.contains(&p) {
                return Err(Error::InvalidPlacement(format!("physical qubit {p} is assigned twice")));
            }
            out.push(p);
        }
        Ok(out)
    }
}

/// Slot names on an [`IShape`]: 0..3 top, 3 stem, 4..7 bottom.
fn slots_for(gate: LibraryGate, circuit: &Circuit) -> Vec<(&'static str, usize)> {
    use CompositeKind::*;
    match gate {
        LibraryGate::Boolean(_) => vec![("c1", 0), ("t", 1), ("c2", 2)],
        LibraryGate::TwoBit(_) => vec![],
        LibraryGate::Composite(k) | LibraryGate::CompositeOracle(k) => match k {
            And4 => vec![("c1", 0), ("anc", 1), ("c2", 2), ("t", 3), ("c3", 5)],
            And5 | Pos5 | Sop5 => {
                vec![("c1", 0), ("anc1", 1), ("c2", 2), ("t", 3), ("c3", 4), ("anc2", 5), ("c4", 6)]
            }
            Fredkin3 => vec![("c", 0), ("t2", 1), ("t1", 2)],
            Fredkin4 => vec![("c1", 0), ("anc", 1), ("c2", 2), ("t2", 3), ("t1", 5)],
            Csx3 | CsxDg3 => vec![("c1", 0), ("anc", 1), ("c2", 2), ("t", 3)],
            Miller3 => vec![("b", 0), ("a", 1), ("c", 2)],
        },
        LibraryGate::Standard(_) => {
            if circuit.index_of("c1").is_some() && circuit.index_of("t").is_some() && circuit.width() == 3 {
                vec![("c1", 0), ("t", 1), ("c2", 2)]
            } else {
                vec![]
            }
        }
    }
}

/// Assigns `gate` to `shape`. Gates without a dedicated table fill the
/// slots in circuit order along top, stem, bottom.
pub fn place(gate: LibraryGate, name: &str, shape: &IShape, device: &str) -> Result<Placement> {
    let circuit = gate.build();
    let slots = shape.qubits();
    if circuit.width() > slots.len() {
        return Err(Error::DoesNotFit {
            gate: name.to_string(),
            reason: format!("{} qubits but the I-shape has {}", circuit.width(), slots.len()),
        });
    }
    let table = slots_for(gate, &circuit);
    let assignment = if table.is_empty() {
        let order = [0, 1, 2, 3, 5, 4, 6];
        (0..circuit.width()).map(|q| (circuit.label(q).to_string(), slots[order[q]])).collect()
    } else {
        table.into_iter().map(|(l, s)| (l.to_string(), slots[s])).collect()
    };
    Ok(Placement { gate: name.to_string(), device: device.to_string(), assignment })
}

/// Placement of the n-bit AND (n = 3, 4, 5) on `shape`.
pub fn place_and(n: usize, shape: &IShape) -> Result<Placement> {
    let name = match n {
        3 => "and3",
        4 => "and4",
        5 => "and5",
        _ => {
            return Err(Error::DoesNotFit {
                gate: format!("and{n}"),
                reason: "an I-shape hosts 3- to 5-bit gates".into(),
            })
        }
    };
    place(LibraryGate::by_name(name)?, name, shape, "")
}

/// A two-qubit gate whose physical qubits are not coupled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub gate: String,
    pub physical: [usize; 2],
}

/// Every two-qubit gate that would need routing under `placement`.
pub fn verify_no_swap(circuit: &Circuit, placement: &Placement, map: &CouplingMap) -> Result<Vec<Violation>> {
    let phys = placement.physical(circuit, map)?;
    Ok(circuit
        .gates()
        .iter()
        .enumerate()
        .filter(|(_, g)| g.is_two_qubit())
        .filter_map(|(i, g)| {
            let (a, b) = (phys[g.qubits()[0]], phys[g.qubits()[1]]);
            (!map.adjacent(a, b)).then(|| Violation { index: i, gate: g.to_string(), physical: [a, b] })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eagle_shape() {
        let m = heavy_hex_eagle();
        assert_eq!(m.num_qubits(), 127);
        assert_eq!(m.edges().len(), 144);
        assert!(m.is_connected());
        assert!((0..127).all(|q| (1..=3).contains(&m.degree(q))));
        for [a, b, c] in [[0, 14, 18], [20, 33, 39], [62, 72, 81], [108, 112, 126], [96, 109, 114]] {
            assert!(m.adjacent(a, b) && m.adjacent(b, c), "{a}-{b}-{c}");
        }
        assert!(!m.adjacent(13, 14));
    }

    #[test]
    fn ishape_is_valid() {
        ishape_brisbane().validate(&brisbane()).unwrap();
        let bad = IShape { top: [61, 62, 64], ..ishape_brisbane() };
        assert!(bad.validate(&brisbane()).is_err());
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let m = brisbane();
        assert_eq!(CouplingMap::from_json(&m.to_json()).unwrap(), m);
        let bad = r#"{"name": "x", "num_qubits": 2, "edges": [[0, 2]]}"#;
        assert!(CouplingMap::from_json(bad).is_err());
        let looped = r#"{"name": "x", "num_qubits": 2, "edges": [[1, 1]]}"#;
        assert!(CouplingMap::from_json(looped).is_err());
    }

    #[test]
    fn paths() {
        let m = brisbane();
        assert_eq!(m.shortest_path(61, 63).unwrap(), vec![61, 62, 63]);
        assert_eq!(m.distance(62, 81).unwrap(), 2);
        let split = CouplingMap::new("split", 4, &[[0, 1], [2, 3]]).unwrap();
        assert!(matches!(split.shortest_path(0, 3), Err(Error::Disconnected(0, 3))));
    }

    #[test]
    fn and_placements() {
        let sh = ishape_brisbane();
        let p5 = place_and(5, &sh).unwrap();
        assert_eq!(p5.assignment["t"], 72);
        assert_eq!(p5.assignment["anc1"], 62);
        let p3 = place_and(3, &sh).unwrap();
        assert_eq!((p3.assignment["c1"], p3.assignment["t"], p3.assignment["c2"]), (61, 62, 63));
        assert!(matches!(place_and(6, &sh), Err(Error::DoesNotFit { .. })));
        let bare = Placement::from_json(r#"{"assignment": {"c1": 61, "t": 62, "c2": 63}}"#).unwrap();
        assert_eq!(bare.assignment, p3.assignment);
    }

    #[test]
    fn placement_rejects_duplicates() {
        let gate = LibraryGate::by_name("and3").unwrap();
        let mut p = place(gate, "and3", &ishape_brisbane(), "ibm_brisbane").unwrap();
        p.assignment.insert("c2".into(), 61);
        assert!(p.physical(&gate.build(), &brisbane()).is_err());
        p.assignment.remove("c2");
        assert!(matches!(p.physical(&gate.build(), &brisbane()), Err(Error::UncoveredQubit(_))));
    }
}
