//! Finite groups stored as explicit Cayley tables.
//!
//! Every constructor goes through [`Group::from_cayley`], which checks the
//! group axioms and computes the conjugacy-class partition. Element ordering
//! is fixed per constructor so that character tables built on top of a group
//! are reproducible byte for byte.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported group order.
pub const MAX_ORDER: usize = 512;

/// Orders up to this are checked for associativity on every triple.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 32;
const SAMPLED_ASSOC_TRIPLES: usize = 10_000;

/// Groups the library knows how to build by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedGroup {
    S3,
    Q8,
    V4,
    D4,
}

impl NamedGroup {
    pub fn label(self) -> &'static str {
        match self {
            NamedGroup::S3 => "S3",
            NamedGroup::Q8 => "Q8",
            NamedGroup::V4 => "V4",
            NamedGroup::D4 => "D4",
        }
    }

    /// D4 is outside the original catalog and only used as an extra
    /// nonabelian target; reports flag it.
    pub fn is_exploratory(self) -> bool {
        matches!(self, NamedGroup::D4)
    }
}

/// How a group was produced. Character-table computation dispatches on this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    /// Direct product of cyclic groups with these factor orders, elements in
    /// row-major mixed-radix order. A cyclic group has a single factor.
    Abelian(Vec<usize>),
    Named(NamedGroup),
    /// Loaded from a Cayley table that matches no constructor.
    Loaded,
}

#[derive(Debug, Clone)]
pub struct Group {
    name: String,
    order: usize,
    cayley: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    labels: Vec<String>,
    structure: Structure,
}

impl Group {
    /// Builds a group from a Cayley table, verifying closure, identity,
    /// inverses and associativity, then computing conjugacy classes.
    pub fn from_cayley(name: &str, cayley: Vec<Vec<usize>>, identity: usize) -> Result<Group> {
        let n = cayley.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        if identity >= n {
            return Err(Error::InvalidCayley(format!(
                "identity index {identity} out of range"
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in cayley.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCayley(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidCayley(format!(
                    "row {i} contains out-of-range entry {bad}"
                )));
            }
            flat.extend_from_slice(row);
        }
        let at = |a: usize, b: usize| flat[a * n + b];

        for x in 0..n {
            if at(identity, x) != x || at(x, identity) != x {
                return Err(Error::InvalidCayley(format!(
                    "element {identity} is not a two-sided identity (fails at {x})"
                )));
            }
        }

        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            let b = (0..n).find(|&b| at(a, b) == identity).ok_or_else(|| {
                Error::InvalidCayley(format!("element {a} has no right inverse"))
            })?;
            if at(b, a) != identity {
                return Err(Error::InvalidCayley(format!(
                    "right inverse {b} of {a} is not a left inverse"
                )));
            }
            inverse[a] = b;
        }

        let assoc_fails = |a: usize, b: usize, c: usize| at(at(a, b), c) != at(a, at(b, c));
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if assoc_fails(a, b, c) {
                            return Err(Error::InvalidCayley(format!(
                                "not associative at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if assoc_fails(a, b, c) {
                    return Err(Error::InvalidCayley(format!(
                        "not associative at ({a}, {b}, {c})"
                    )));
                }
            }
        }

        let mut group = Group {
            name: name.to_string(),
            order: n,
            cayley: flat,
            identity,
            inverse,
            class_of: Vec::new(),
            classes: Vec::new(),
            labels: (0..n).map(|i| i.to_string()).collect(),
            structure: Structure::Loaded,
        };
        group.classes = group.conjugacy_classes();
        group.class_of = vec![0; n];
        for (c, members) in group.classes.iter().enumerate() {
            for &x in members {
                group.class_of[x] = c;
            }
        }
        Ok(group)
    }

    fn from_elements<T: PartialEq>(
        name: &str,
        elements: &[T],
        mul: impl Fn(&T, &T) -> T,
    ) -> Result<Group> {
        let index = |t: &T| elements.iter().position(|e| e == t);
        let mut cayley = vec![vec![0; elements.len()]; elements.len()];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                cayley[i][j] = index(&mul(a, b)).ok_or_else(|| {
                    Error::InvalidCayley(format!("product of {i} and {j} leaves the element set"))
                })?;
            }
        }
        Group::from_cayley(name, cayley, 0)
    }

    /// The cyclic group Z_n on {0, …, n−1} under addition mod n.
    pub fn cyclic(n: usize) -> Result<Group> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        let cayley = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        let mut g = Group::from_cayley(&format!("Z{n}"), cayley, 0)?;
        g.structure = Structure::Abelian(vec![n]);
        Ok(g)
    }

    /// Direct product Z_{m1} × … × Z_{mk}, elements encoded row-major.
    pub fn abelian(factors: &[usize]) -> Result<Group> {
        if factors.is_empty() {
            return Err(Error::InvalidInput("empty factor list".into()));
        }
        if factors.contains(&0) {
            return Err(Error::InvalidInput("factor orders must be positive".into()));
        }
        let n = factors
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m).filter(|&p| p <= MAX_ORDER))
            .ok_or(Error::InvalidOrder(usize::MAX))?;
        let digits = |mut x: usize| {
            let mut d = vec![0; factors.len()];
            for (slot, &m) in d.iter_mut().zip(factors).rev() {
                *slot = x % m;
                x /= m;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().zip(factors).fold(0, |acc, (&v, &m)| acc * m + v);
        let cayley = (0..n)
            .map(|i| {
                let di = digits(i);
                (0..n)
                    .map(|j| {
                        let sum: Vec<usize> = di
                            .iter()
                            .zip(digits(j))
                            .zip(factors)
                            .map(|((&a, b), &m)| (a + b) % m)
                            .collect();
                        encode(&sum)
                    })
                    .collect()
            })
            .collect();
        let name = factors
            .iter()
            .map(|m| format!("Z{m}"))
            .collect::<Vec<_>>()
            .join("x");
        let mut g = Group::from_cayley(&name, cayley, 0)?;
        g.labels = if factors.len() == 1 {
            (0..n).map(|i| i.to_string()).collect()
        } else {
            (0..n)
                .map(|i| {
                    let d: Vec<String> = digits(i).iter().map(|v| v.to_string()).collect();
                    format!("({})", d.join(","))
                })
                .collect()
        };
        g.structure = Structure::Abelian(factors.to_vec());
        Ok(g)
    }

    pub fn named(which: NamedGroup) -> Result<Group> {
        let mut g = match which {
            NamedGroup::S3 => {
                // Permutations of {0,1,2}; the product applies the right factor first.
                let elems: [[usize; 3]; 6] = [
                    [0, 1, 2],
                    [1, 0, 2],
                    [2, 1, 0],
                    [0, 2, 1],
                    [1, 2, 0],
                    [2, 0, 1],
                ];
                let mut g = Group::from_elements("S3", &elems, |a, b| {
                    [a[b[0]], a[b[1]], a[b[2]]]
                })?;
                g.labels = ["I", "(12)", "(13)", "(23)", "(123)", "(132)"]
                    .map(String::from)
                    .to_vec();
                g
            }
            NamedGroup::Q8 => {
                // (sign, unit) with unit 0..4 = 1, i, j, k.
                let elems: Vec<(i8, u8)> = (0..4u8).flat_map(|u| [(1, u), (-1, u)]).collect();
                let mut g = Group::from_elements("Q8", &elems, |&(sa, ua), &(sb, ub)| {
                    let (s, u) = quaternion_unit_product(ua, ub);
                    (sa * sb * s, u)
                })?;
                g.labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
                    .map(String::from)
                    .to_vec();
                g
            }
            NamedGroup::V4 => {
                let mut g = Group::abelian(&[2, 2])?;
                g.name = "V4".into();
                g
            }
            NamedGroup::D4 => {
                // s^b r^a with index 4b + a; r^a s = s r^{-a}.
                let elems: Vec<(u8, u8)> =
                    (0..2u8).flat_map(|b| (0..4u8).map(move |a| (b, a))).collect();
                let mut g = Group::from_elements("D4", &elems, |&(b1, a1), &(b2, a2)| {
                    let a1 = if b2 == 1 { (4 - a1) % 4 } else { a1 };
                    ((b1 + b2) % 2, (a1 + a2) % 4)
                })?;
                g.labels = ["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"]
                    .map(String::from)
                    .to_vec();
                g
            }
        };
        if which != NamedGroup::V4 {
            g.structure = Structure::Named(which);
        }
        Ok(g)
    }

    /// Parses a group label: `Z<n>`, `Z<a>xZ<b>...`, or a catalog name.
    pub fn from_label(label: &str) -> Result<Group> {
        let trimmed = label.trim();
        match trimmed.to_ascii_uppercase().as_str() {
            "S3" => return Group::named(NamedGroup::S3),
            "Q8" => return Group::named(NamedGroup::Q8),
            "V4" => return Group::named(NamedGroup::V4),
            "D4" => return Group::named(NamedGroup::D4),
            _ => {}
        }
        let unknown = || Error::UnknownGroup(label.to_string());
        let factors = trimmed
            .split(['x', 'X'])
            .map(|part| {
                part.strip_prefix(['Z', 'z'])
                    .and_then(|digits| digits.parse::<usize>().ok())
                    .ok_or_else(unknown)
            })
            .collect::<Result<Vec<usize>>>()?;
        match factors.as_slice() {
            [n] => Group::cyclic(*n),
            _ => Group::abelian(&factors),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn named_kind(&self) -> Option<NamedGroup> {
        match self.structure {
            Structure::Named(k) => Some(k),
            _ if self.name == "V4" => Some(NamedGroup::V4),
            _ => None,
        }
    }

    /// Product `a·b` without bounds checking beyond the slice index.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b]
    }

    pub fn multiply(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.op(a, b))
    }

    pub fn inverse(&self, a: usize) -> Result<usize> {
        self.check_index(a)?;
        Ok(self.inverse[a])
    }

    pub fn check_index(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        self.cayley.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Orbits under conjugation: the identity's class first, then classes in
    /// order of their smallest member; members sorted ascending.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        let starts = std::iter::once(self.identity).chain((0..n).filter(|&x| x != self.identity));
        for x in starts {
            if seen[x] {
                continue;
            }
            let mut members: Vec<usize> = (0..n)
                .map(|h| self.op(self.op(h, x), self.inverse[h]))
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                seen[m] = true;
            }
            classes.push(members);
        }
        classes
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn element_label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Order of the element `x`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.op(y, x);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1u64, |acc, x| crate::cplx::lcm(acc, self.element_order(x) as u64))
            as usize
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            name: self.name.clone(),
            order: self.order,
            cayley: self.cayley_rows(),
            identity: self.identity,
        }
    }

    /// Loads a group from its file form. Conjugacy classes are always
    /// recomputed. A table identical to a known constructor's output inherits
    /// that constructor's structure (and with it, its character table path).
    pub fn from_file(file: GroupFile) -> Result<Group> {
        if file.order != file.cayley.len() {
            return Err(Error::InvalidCayley(format!(
                "declared order {} but table has {} rows",
                file.order,
                file.cayley.len()
            )));
        }
        let loaded = Group::from_cayley(&file.name, file.cayley, file.identity)?;
        if let Ok(known) = Group::from_label(&file.name) {
            if known.cayley == loaded.cayley && known.identity == loaded.identity {
                return Ok(known);
            }
        }
        Ok(loaded)
    }

    pub fn from_json(text: &str) -> Result<Group> {
        Group::from_file(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("group file serializes")
    }
}

fn quaternion_unit_product(a: u8, b: u8) -> (i8, u8) {
    // units: 0 = 1, 1 = i, 2 = j, 3 = k
    match (a, b) {
        (0, u) | (u, 0) => (1, u),
        (x, y) if x == y => (-1, 0),
        (1, 2) => (1, 3),
        (2, 3) => (1, 1),
        (3, 1) => (1, 2),
        (2, 1) => (-1, 3),
        (3, 2) => (-1, 1),
        (1, 3) => (-1, 2),
        _ => unreachable!("quaternion units are 0..4"),
    }
}

/// On-disk group format. Conjugacy classes are deliberately absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub order: usize,
    pub cayley: Vec<Vec<usize>>,
    pub identity: usize,
}
