//! Finite lattices of normal forms, point posets and the finite
//! Birkhoff/Stone round trip.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write;

use super::{DLatticePresentation, LatticePoint, LatticeTerm, Masks};
use crate::error::{Error, Result};

const MAX_MODELS: usize = 4096;
const MAX_ELEMENTS: usize = 2000;
const MAX_DOWNSET_POINTS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn empty(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = BitSet::empty(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn union(&self, o: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&o.0).map(|(a, b)| a | b).collect())
    }

    fn intersection(&self, o: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, o: &BitSet) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

/// The finite lattice presented by a relations-mode presentation, one
/// canonical normal-form term per element.
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    elements: Vec<LatticeTerm>,
    exts: Vec<BitSet>,
}

impl FiniteLattice {
    /// Enumerate elements as the sets of points where they hold, closed
    /// under union and intersection starting from the generators.
    pub fn enumerate(l: &DLatticePresentation) -> Result<FiniteLattice> {
        let models = l.model_masks()?.to_vec();
        let m = models.len();
        if m > MAX_MODELS {
            return Err(Error::Capacity {
                what: "points for lattice enumeration",
                limit: MAX_MODELS,
                got: m,
            });
        }
        let mut seeds = vec![BitSet::empty(m), BitSet::full(m)];
        for g in l.generators() {
            let c = l.compile(&LatticeTerm::gen(g))?;
            let mut b = BitSet::empty(m);
            for (i, &v) in models.iter().enumerate() {
                if c.eval(v) {
                    b.insert(i);
                }
            }
            seeds.push(b);
        }
        let mut known: Vec<BitSet> = Vec::new();
        let mut seen: HashSet<BitSet> = HashSet::new();
        let mut queue: VecDeque<BitSet> = VecDeque::new();
        for s in seeds {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            for y in &known {
                for z in [x.union(y), x.intersection(y)] {
                    if seen.insert(z.clone()) {
                        if seen.len() > MAX_ELEMENTS {
                            return Err(Error::Capacity {
                                what: "lattice elements",
                                limit: MAX_ELEMENTS,
                                got: seen.len(),
                            });
                        }
                        queue.push_back(z);
                    }
                }
            }
            known.push(x);
        }
        let mut pairs: Vec<(BitSet, LatticeTerm)> = known
            .into_iter()
            .map(|e| {
                let t = canonical_term(l, &models, &e);
                (e, t)
            })
            .collect();
        pairs.sort_by(|a, b| a.0.count().cmp(&b.0.count()).then_with(|| a.1.cmp(&b.1)));
        let (exts, elements) = pairs.into_iter().unzip();
        Ok(FiniteLattice { elements, exts })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[LatticeTerm] {
        &self.elements
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.exts[i].is_subset(&self.exts[j])
    }

    /// Covering pairs `(lower, upper)` of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for j in 0..n {
            let below: Vec<usize> = (0..n).filter(|&i| i != j && self.leq(i, j)).collect();
            for &i in &below {
                if !below.iter().any(|&k| k != i && self.leq(i, k)) {
                    out.push((i, j));
                }
            }
        }
        out.sort();
        out
    }

    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = self.elements.iter().map(|t| t.to_string()).collect();
        hasse_dot("lattice", &labels, &self.covers())
    }
}

/// The join over minimal points of the conjunction of their true generators.
fn canonical_term(l: &DLatticePresentation, models: &[u64], ext: &BitSet) -> LatticeTerm {
    let members: Vec<u64> = (0..models.len())
        .filter(|&i| ext.contains(i))
        .map(|i| models[i])
        .collect();
    let minimal = members
        .iter()
        .filter(|&&v| !members.iter().any(|&u| u != v && u & !v == 0));
    let clauses = minimal.map(|&v| {
        l.mask_to_point(v)
            .true_set()
            .into_iter()
            .map(str::to_string)
            .collect::<BTreeSet<_>>()
    });
    LatticeTerm::from_clauses(clauses).normalize()
}

/// Points under the specialization order: `x ⊑ y` iff every generator true
/// at `y` is true at `x`. Lattice elements correspond to down-sets.
#[derive(Debug, Clone)]
pub struct PointPoset {
    pub points: Vec<LatticePoint>,
    masks: Vec<u64>,
}

impl PointPoset {
    pub fn new(l: &DLatticePresentation) -> Result<PointPoset> {
        let masks = l.model_masks()?.to_vec();
        let points = masks.iter().map(|&v| l.mask_to_point(v)).collect();
        Ok(PointPoset { points, masks })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `x ⊑ y`.
    pub fn below(&self, x: usize, y: usize) -> bool {
        self.masks[y] & !self.masks[x] == 0
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for y in 0..n {
            let below: Vec<usize> = (0..n).filter(|&x| x != y && self.below(x, y)).collect();
            for &x in &below {
                if !below.iter().any(|&k| k != x && self.below(x, k)) {
                    out.push((x, y));
                }
            }
        }
        out.sort();
        out
    }

    /// Every down-closed subset, as membership vectors (brute force).
    pub fn down_sets(&self) -> Result<Vec<Vec<bool>>> {
        let n = self.len();
        if n > MAX_DOWNSET_POINTS {
            return Err(Error::Capacity {
                what: "points for down-set enumeration",
                limit: MAX_DOWNSET_POINTS,
                got: n,
            });
        }
        let mut out = Vec::new();
        for s in 0u64..(1u64 << n) {
            let member = |i: usize| s & (1 << i) != 0;
            let closed = (0..n).all(|x| {
                !member(x) || (0..n).all(|y| !self.below(y, x) || member(y))
            });
            if closed {
                out.push((0..n).map(member).collect());
            }
        }
        Ok(out)
    }

    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = self
            .points
            .iter()
            .map(|p| {
                p.valuation
                    .values()
                    .map(|&b| if b { '1' } else { '0' })
                    .collect()
            })
            .collect();
        hasse_dot("points", &labels, &self.covers())
    }
}

fn hasse_dot(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph {} {{", name);
    let _ = writeln!(s, "  rankdir=BT;");
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(s, "  n{} [label=\"{}\"];", i, l.replace('"', "\\\""));
    }
    for (a, b) in edges {
        let _ = writeln!(s, "  n{} -> n{};", a, b);
    }
    s.push_str("}\n");
    s
}

/// Finite Stone/Birkhoff check: the lattice generated by the generators
/// under meet and join is order-isomorphic, via `t ↦ {points where t holds}`,
/// to the lattice of down-sets of the point poset.
pub fn birkhoff_roundtrip(l: &DLatticePresentation) -> Result<bool> {
    let poset = PointPoset::new(l)?;
    let down = poset.down_sets()?;
    let down_index: HashMap<Vec<bool>, usize> =
        down.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
    let ext = |m: &Masks| -> Vec<bool> { poset.masks.iter().map(|&v| m.eval(v)).collect() };

    // term closure on compiled clauses, deduplicated by extension
    let mut compiled: Vec<Masks> = Vec::new();
    let mut class_ext: HashSet<Vec<bool>> = HashSet::new();
    let mut queue: VecDeque<Masks> = VecDeque::new();
    let mut seeds = vec![LatticeTerm::bottom(), LatticeTerm::top()];
    seeds.extend(l.generators().iter().map(|g| LatticeTerm::gen(g)));
    for s in seeds {
        let m = l.compile(&s)?;
        if class_ext.insert(ext(&m)) {
            queue.push_back(m);
        }
    }
    while let Some(t) = queue.pop_front() {
        for c in &compiled {
            for u in [t.and(c), t.or(c)] {
                if class_ext.insert(ext(&u)) {
                    if class_ext.len() > MAX_ELEMENTS {
                        return Err(Error::Capacity {
                            what: "lattice elements",
                            limit: MAX_ELEMENTS,
                            got: class_ext.len(),
                        });
                    }
                    queue.push_back(u);
                }
            }
        }
        compiled.push(t);
    }
    let classes: Vec<LatticeTerm> = compiled.iter().map(|m| l.decompile(m)).collect();
    let ext = |t: &LatticeTerm| -> Vec<bool> { poset.points.iter().map(|p| p.eval(t)).collect() };
    // every element lands on a down-set, and every down-set is hit
    let mut hit = vec![false; down.len()];
    for c in &classes {
        match down_index.get(&ext(c)) {
            Some(&i) => hit[i] = true,
            None => return Ok(false),
        }
    }
    if hit.iter().any(|h| !h) {
        return Ok(false);
    }
    // order is preserved and reflected
    let on_points: Vec<Vec<bool>> = classes.iter().map(ext).collect();
    let on_models = classes.iter().map(|c| l.extension(c)).collect::<Result<Vec<_>>>()?;
    for (ea, ma) in on_points.iter().zip(&on_models) {
        for (eb, mb) in on_points.iter().zip(&on_models) {
            let subset = ea.iter().zip(eb).all(|(x, y)| !x || *y);
            let entailed = ma.iter().zip(mb).all(|(x, y)| x & !y == 0);
            if entailed != subset {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free(n: usize) -> DLatticePresentation {
        let names: Vec<String> = ["a", "b", "c", "d"][..n].iter().map(|s| s.to_string()).collect();
        DLatticePresentation::new(names, vec![]).unwrap()
    }

    #[test]
    fn free_lattice_sizes_are_dedekind_numbers() {
        // bounded free distributive lattices: 2, 3, 6, 20, 168
        for (n, size) in [(0, 2), (1, 3), (2, 6), (3, 20), (4, 168)] {
            assert_eq!(FiniteLattice::enumerate(&free(n)).unwrap().len(), size);
        }
    }

    #[test]
    fn chain_dot() {
        let l = FiniteLattice::enumerate(&free(1)).unwrap();
        let dot = l.to_dot();
        assert_eq!(dot.matches("label=").count(), 3);
        assert_eq!(dot.matches("->").count(), 2);
    }

    #[test]
    fn trivial_lattice_has_one_element() {
        let l = DLatticePresentation::new(
            vec!["a".into()],
            vec![(LatticeTerm::top(), LatticeTerm::bottom())],
        )
        .unwrap();
        assert_eq!(FiniteLattice::enumerate(&l).unwrap().len(), 1);
        assert!(birkhoff_roundtrip(&l).unwrap());
    }

    #[test]
    fn roundtrip_on_free_lattices() {
        for n in 0..=3 {
            assert!(birkhoff_roundtrip(&free(n)).unwrap());
        }
    }

    #[test]
    fn point_poset_of_a_chain() {
        let p = PointPoset::new(&free(1)).unwrap();
        assert_eq!(p.down_sets().unwrap().len(), 3);
        assert_eq!(p.covers(), vec![(1, 0)]);
    }
}
