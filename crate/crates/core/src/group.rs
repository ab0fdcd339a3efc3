//! Uniform enumeration machinery for finite groups given by generators —
//! permutations, matrices over GF(q), and automorphisms of an enumerated
//! group — with conjugacy classes, centralizer orders, normal structure,
//! quotients, and automorphism coset representatives.
//!
//! Everything is exhaustive: groups are enumerated breadth-first up to a
//! cap, so no stabilizer-chain machinery is needed at desk scale.
//! Element numbering is deterministic (BFS discovery order from the sorted
//! generator list), which makes serialized groups and witness indices
//! reproducible across runs.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith;
use crate::gf::FieldSpec;
use crate::{Error, Result};

/// Default enumeration cap for group closure.
pub const DEFAULT_CAP: u64 = 2_000_000;
/// Default cap for automorphism-group searches.
pub const DEFAULT_AUT_CAP: u64 = 10_000;

// ---------------------------------------------------------------- elements

/// A group element: a permutation of {0..n−1} (stored 0-based; all textual
/// forms are 1-based) or an invertible n×n matrix over GF(p^f) with packed
/// entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elt {
    Perm(Vec<u32>),
    Mat { field: Arc<FieldSpec>, n: u32, data: Vec<u64> },
}

/// The shared shape of all elements of one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EltKind {
    Perm { degree: u32 },
    Mat { field: Arc<FieldSpec>, n: u32 },
}

impl EltKind {
    pub fn identity(&self) -> Elt {
        match self {
            EltKind::Perm { degree } => Elt::Perm((0..*degree).collect()),
            EltKind::Mat { field, n } => {
                Elt::Mat { field: field.clone(), n: *n, data: mat_identity(*n as usize) }
            }
        }
    }
}

impl Elt {
    pub fn kind(&self) -> EltKind {
        match self {
            Elt::Perm(v) => EltKind::Perm { degree: v.len() as u32 },
            Elt::Mat { field, n, .. } => EltKind::Mat { field: field.clone(), n: *n },
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Elt::Perm(v) => v.iter().enumerate().all(|(i, &x)| x as usize == i),
            Elt::Mat { n, data, .. } => *data == mat_identity(*n as usize),
        }
    }

    /// Product; both operands must share a kind (guaranteed inside a group).
    pub fn mul(&self, other: &Elt) -> Elt {
        match (self, other) {
            (Elt::Perm(a), Elt::Perm(b)) => {
                assert_eq!(a.len(), b.len(), "degree mismatch");
                Elt::Perm(a.iter().map(|&i| b[i as usize]).collect())
            }
            (Elt::Mat { field, n, data: a }, Elt::Mat { data: b, .. }) => Elt::Mat {
                field: field.clone(),
                n: *n,
                data: mat_mul(field, *n as usize, a, b),
            },
            _ => panic!("kind mismatch in element product"),
        }
    }

    pub fn inv(&self) -> Elt {
        match self {
            Elt::Perm(a) => {
                let mut out = vec![0u32; a.len()];
                for (i, &x) in a.iter().enumerate() {
                    out[x as usize] = i as u32;
                }
                Elt::Perm(out)
            }
            Elt::Mat { field, n, data } => Elt::Mat {
                field: field.clone(),
                n: *n,
                data: mat_inv(field, *n as usize, data).expect("group element must be invertible"),
            },
        }
    }

    /// Least k ≥ 1 with self^k = identity. Permutations use the cycle type;
    /// matrices iterate (orders in this crate's domain are small).
    pub fn order(&self) -> u64 {
        match self {
            Elt::Perm(a) => perm_order(a),
            Elt::Mat { .. } => {
                let mut acc = self.clone();
                let mut k = 1u64;
                while !acc.is_identity() {
                    acc = acc.mul(self);
                    k += 1;
                    assert!(k < 100_000_000, "runaway order computation");
                }
                k
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Elt {
        let mut acc = self.kind().identity();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

fn perm_order(a: &[u32]) -> u64 {
    let mut seen = vec![false; a.len()];
    let mut ord = 1u64;
    for start in 0..a.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut cur = start;
        loop {
            seen[cur] = true;
            len += 1;
            cur = a[cur] as usize;
            if cur == start {
                break;
            }
        }
        ord = arith::lcm(ord, len);
    }
    ord
}

impl PartialOrd for Elt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Elt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Elt::Perm(a), Elt::Perm(b)) => a.cmp(b),
            (Elt::Mat { n: na, field: fa, data: a }, Elt::Mat { n: nb, field: fb, data: b }) => {
                (na, fa.q, &fa.modulus, a).cmp(&(nb, fb.q, &fb.modulus, b))
            }
            (Elt::Perm(_), Elt::Mat { .. }) => Ordering::Less,
            (Elt::Mat { .. }, Elt::Perm(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elt::Perm(a) => write!(f, "{}", perm_cycles_string(a)),
            Elt::Mat { n, data, .. } => {
                let n = *n as usize;
                let rows: Vec<String> = (0..n)
                    .map(|i| {
                        let row: Vec<String> =
                            data[i * n..(i + 1) * n].iter().map(u64::to_string).collect();
                        format!("[{}]", row.join(" "))
                    })
                    .collect();
                write!(f, "[{}]", rows.join(" "))
            }
        }
    }
}

// ------------------------------------------------------- matrix primitives

pub(crate) fn mat_identity(n: usize) -> Vec<u64> {
    let mut m = vec![0u64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn mat_mul(field: &FieldSpec, n: usize, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = field.add(out[i * n + j], field.mul(aik, b[k * n + j]));
            }
        }
    }
    out
}

/// Gauss–Jordan inverse; None when singular.
fn mat_inv(field: &FieldSpec, n: usize, a: &[u64]) -> Option<Vec<u64>> {
    let mut m = a.to_vec();
    let mut inv = mat_identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r * n + col] != 0)?;
        if pivot != col {
            for j in 0..n {
                m.swap(col * n + j, pivot * n + j);
                inv.swap(col * n + j, pivot * n + j);
            }
        }
        let scale = field.inv(m[col * n + col]).ok()?;
        for j in 0..n {
            m[col * n + j] = field.mul(m[col * n + j], scale);
            inv[col * n + j] = field.mul(inv[col * n + j], scale);
        }
        for r in 0..n {
            if r == col || m[r * n + col] == 0 {
                continue;
            }
            let c = m[r * n + col];
            for j in 0..n {
                m[r * n + j] = field.sub(m[r * n + j], field.mul(c, m[col * n + j]));
                inv[r * n + j] = field.sub(inv[r * n + j], field.mul(c, inv[col * n + j]));
            }
        }
    }
    Some(inv)
}

// --------------------------------------------------------------- the group

struct ClassData {
    /// (least element index in class, class size)
    classes: Vec<(usize, usize)>,
    class_of: Vec<u32>,
}

/// A fully enumerated finite group. Immutable after closure; the class and
/// order caches fill idempotently, so concurrent reads are safe.
pub struct FiniteGroup {
    pub kind: EltKind,
    /// Sorted, deduplicated generating list used for the BFS.
    pub generators: Vec<Elt>,
    /// Index → element; identity at index 0.
    pub elements: Vec<Elt>,
    index: HashMap<Elt, u32>,
    /// BFS provenance: elements[i] = elements[parents[i].0] · generators[parents[i].1].
    parents: Vec<(u32, u32)>,
    /// Right-multiplication table by generators: edges[i·k + t] = index(elements[i]·g_t).
    edges: Vec<u32>,
    classes: OnceLock<ClassData>,
    orders: OnceLock<Vec<u64>>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            kind: self.kind.clone(),
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            parents: self.parents.clone(),
            edges: self.edges.clone(),
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {}, {} generators)", self.order(), self.generators.len())
    }
}

/// Breadth-first product closure of the generators, deterministic
/// numbering, identity at index 0. Empty input yields the trivial group.
pub fn closure(mut generators: Vec<Elt>, cap: u64) -> Result<FiniteGroup> {
    if generators.is_empty() {
        generators.push(Elt::Perm(vec![0]));
    }
    let kind = generators[0].kind();
    for g in &generators {
        if g.kind() != kind {
            return Err(Error::KindMismatch("generators must share one kind and ambient".into()));
        }
        if let Elt::Mat { field, n, data } = g {
            if mat_inv(field, *n as usize, data).is_none() {
                return Err(Error::HypothesisViolated("singular matrix generator".into()));
            }
        }
    }
    generators.sort();
    generators.dedup();
    generators.retain(|g| !g.is_identity());
    if generators.is_empty() {
        generators.push(kind.identity());
    }
    let k = generators.len();

    let identity = kind.identity();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Elt, u32> = HashMap::new();
    index.insert(identity, 0);
    let mut parents = vec![(0u32, u32::MAX)];
    let mut edges: Vec<u32> = Vec::new();
    let mut head = 0usize;
    while head < elements.len() {
        for (t, g) in generators.iter().enumerate() {
            let prod = elements[head].mul(g);
            let next = match index.get(&prod) {
                Some(&i) => i,
                None => {
                    let i = elements.len() as u32;
                    if i as u64 >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    index.insert(prod.clone(), i);
                    elements.push(prod);
                    parents.push((head as u32, t as u32));
                    i
                }
            };
            edges.push(next);
            debug_assert_eq!(edges.len(), head * k + t + 1);
        }
        head += 1;
    }
    Ok(FiniteGroup {
        kind,
        generators,
        elements,
        index,
        parents,
        edges,
        classes: OnceLock::new(),
        orders: OnceLock::new(),
    })
}

impl FiniteGroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn index_of(&self, e: &Elt) -> Option<usize> {
        self.index.get(e).map(|&i| i as usize)
    }

    pub fn contains(&self, e: &Elt) -> bool {
        self.index.contains_key(e)
    }

    /// Index of elements[i]·elements[j].
    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        let prod = self.elements[i].mul(&self.elements[j]);
        self.index[&prod] as usize
    }

    /// Index of elements[i]·generators[t], via the cached BFS edges.
    pub fn gen_mul_idx(&self, i: usize, t: usize) -> usize {
        self.edges[i * self.generators.len() + t] as usize
    }

    pub fn inv_idx(&self, i: usize) -> usize {
        self.index[&self.elements[i].inv()] as usize
    }

    /// Orders of all elements, computed once. Permutations use cycle types;
    /// matrices reduce the group order prime by prime.
    pub fn orders(&self) -> &[u64] {
        self.orders.get_or_init(|| match &self.kind {
            EltKind::Perm { .. } => self
                .elements
                .iter()
                .map(|e| match e {
                    Elt::Perm(a) => perm_order(a),
                    _ => unreachable!(),
                })
                .collect(),
            EltKind::Mat { .. } => {
                let m = self.order();
                let fac = arith::factor(m);
                self.elements
                    .iter()
                    .map(|e| {
                        let mut ord = m;
                        for &(r, _) in &fac {
                            while ord % r == 0 && e.pow(ord / r).is_identity() {
                                ord /= r;
                            }
                        }
                        ord
                    })
                    .collect()
            }
        })
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.orders()[i]
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.elements.len();
            let k = self.generators.len();
            let ginv: Vec<Elt> = self.generators.iter().map(Elt::inv).collect();
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for start in 0..n {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let id = classes.len() as u32;
                class_of[start] = id;
                let mut queue = vec![start];
                let mut size = 1usize;
                while let Some(x) = queue.pop() {
                    for t in 0..k {
                        // y = g_t⁻¹ · (x·g_t)
                        let xg = self.gen_mul_idx(x, t);
                        let y_elt = ginv[t].mul(&self.elements[xg]);
                        let y = self.index[&y_elt] as usize;
                        if class_of[y] == u32::MAX {
                            class_of[y] = id;
                            size += 1;
                            queue.push(y);
                        }
                    }
                }
                classes.push((start, size));
            }
            debug_assert_eq!(classes.iter().map(|c| c.1).sum::<usize>(), n);
            ClassData { classes, class_of }
        })
    }

    /// (least-index representative, size) per conjugacy class, in order of
    /// representative index.
    pub fn conjugacy_classes(&self) -> Vec<(usize, usize)> {
        self.class_data().classes.clone()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_data().class_of[i] as usize
    }

    pub fn class_size(&self, i: usize) -> usize {
        let cd = self.class_data();
        cd.classes[cd.class_of[i] as usize].1
    }

    /// |C_G(x)| = |G| / |x^G|.
    pub fn centralizer_order(&self, x: &Elt) -> Result<u64> {
        let i = self.index_of(x).ok_or(Error::NotMember)?;
        Ok(self.centralizer_order_idx(i))
    }

    pub fn centralizer_order_idx(&self, i: usize) -> u64 {
        self.order() / self.class_size(i) as u64
    }

    /// Number of elements with class size 1.
    pub fn center_size(&self) -> usize {
        self.class_data().classes.iter().filter(|c| c.1 == 1).count()
    }

    /// Sorted index set of the least normal subgroup containing the seeds.
    pub fn normal_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let n = self.elements.len();
        let mut in_h = vec![false; n];
        in_h[0] = true;
        let mut members = vec![0usize];
        let mut hgens: Vec<usize> = Vec::new();
        let mut pending: Vec<usize> = seeds.to_vec();
        let ginv: Vec<Elt> = self.generators.iter().map(Elt::inv).collect();
        loop {
            // absorb pending generators and re-close the subgroup
            let mut grew = false;
            while let Some(g) = pending.pop() {
                if in_h[g] {
                    continue;
                }
                hgens.push(g);
                in_h[g] = true;
                members.push(g);
                grew = true;
            }
            if grew {
                let mut head = 0;
                while head < members.len() {
                    let m = members[head];
                    head += 1;
                    for &t in &hgens {
                        let q = self.mul_idx(m, t);
                        if !in_h[q] {
                            in_h[q] = true;
                            members.push(q);
                        }
                    }
                }
            }
            // conjugate every member by every group generator
            let mut new_pending = Vec::new();
            for &m in &members {
                for (t, gi) in ginv.iter().enumerate() {
                    let mg = self.gen_mul_idx(m, t);
                    let y_elt = gi.mul(&self.elements[mg]);
                    let y = self.index[&y_elt] as usize;
                    if !in_h[y] {
                        new_pending.push(y);
                    }
                }
            }
            if new_pending.is_empty() {
                break;
            }
            pending = new_pending;
        }
        members.sort_unstable();
        members
    }

    /// Verifies N is a normal subgroup, then returns the quotient as a
    /// permutation group acting on the right cosets of N. Cosets are
    /// labelled by their least-index representative, ascending, so the
    /// quotient identity corresponds to N itself.
    pub fn quotient(&self, nset: &[usize]) -> Result<FiniteGroup> {
        let n = self.elements.len();
        let mut in_n = vec![false; n];
        for &i in nset {
            in_n[i] = true;
        }
        if !in_n[0] {
            return Err(Error::NotNormal);
        }
        // subgroup: closed under products
        for &a in nset {
            for &b in nset {
                if !in_n[self.mul_idx(a, b)] {
                    return Err(Error::NotNormal);
                }
            }
        }
        // normality: generator conjugates stay inside
        let ginv: Vec<Elt> = self.generators.iter().map(Elt::inv).collect();
        for &m in nset {
            for (t, gi) in ginv.iter().enumerate() {
                let mg = self.gen_mul_idx(m, t);
                let y = self.index[&gi.mul(&self.elements[mg])] as usize;
                if !in_n[y] {
                    return Err(Error::NotNormal);
                }
            }
        }
        // colour cosets Ng by least representative
        let mut coset = vec![u32::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..n {
            if coset[i] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(i);
            for &m in nset {
                coset[self.mul_idx(m, i)] = id;
            }
        }
        let deg = reps.len();
        let mut perms: Vec<Elt> = Vec::new();
        for t in 0..self.generators.len() {
            let images: Vec<u32> =
                (0..deg).map(|c| coset[self.gen_mul_idx(reps[c], t)]).collect();
            perms.push(Elt::Perm(images));
        }
        let q = closure(perms, n as u64 + 1)?;
        debug_assert_eq!(q.order() * nset.len() as u64, self.order());
        Ok(q)
    }

    /// Re-enumerates the subgroup on the given (closed) index set, with a
    /// greedily chosen small generating list.
    pub fn subgroup_from_indices(&self, idxs: &[usize]) -> Result<FiniteGroup> {
        let n = self.elements.len();
        let mut have = vec![false; n];
        have[0] = true;
        let mut members = vec![0usize];
        let mut gens: Vec<usize> = Vec::new();
        for &i in idxs {
            if have[i] {
                continue;
            }
            gens.push(i);
            have[i] = true;
            members.push(i);
            let mut head = 0;
            while head < members.len() {
                let m = members[head];
                head += 1;
                for &t in &gens {
                    let q = self.mul_idx(m, t);
                    if !have[q] {
                        have[q] = true;
                        members.push(q);
                    }
                }
            }
        }
        closure(gens.iter().map(|&i| self.elements[i].clone()).collect(), self.order() + 1)
    }

    /// True iff nontrivial and the normal closure of every nonidentity
    /// class representative is the whole group.
    pub fn is_simple(&self) -> bool {
        if self.order() == 1 {
            return false;
        }
        self.conjugacy_classes()
            .iter()
            .filter(|&&(rep, _)| rep != 0)
            .all(|&(rep, _)| self.normal_closure(&[rep]).len() as u64 == self.order())
    }

    /// Jordan–Hölder factors as concrete re-enumerated groups (each
    /// verified simple). Splits at the smallest proper nontrivial normal
    /// closure of a single class representative.
    pub fn composition_factors(&self) -> Result<Vec<FiniteGroup>> {
        if self.order() == 1 {
            return Ok(vec![]);
        }
        let mut best: Option<Vec<usize>> = None;
        for (rep, _) in self.conjugacy_classes() {
            if rep == 0 {
                continue;
            }
            let nc = self.normal_closure(&[rep]);
            if (nc.len() as u64) < self.order()
                && best.as_ref().map_or(true, |b| nc.len() < b.len())
            {
                best = Some(nc);
            }
        }
        match best {
            None => Ok(vec![self.clone()]),
            Some(nset) => {
                let sub = self.subgroup_from_indices(&nset)?;
                let quo = self.quotient(&nset)?;
                let mut out = sub.composition_factors()?;
                out.extend(quo.composition_factors()?);
                Ok(out)
            }
        }
    }

    /// Cosmetic name for a simple group, identified by order (order 20160
    /// disambiguated by the presence of an element of order 15).
    pub fn simple_name(&self) -> Option<String> {
        let name = match self.order() {
            2 => "C2",
            3 => "C3",
            5 => "C5",
            7 => "C7",
            60 => "Alt5",
            168 => "L2(7)",
            360 => "Alt6",
            504 => "L2(8)",
            660 => "L2(11)",
            1092 => "L2(13)",
            2520 => "Alt7",
            20160 => {
                if self.orders().contains(&15) {
                    "Alt8"
                } else {
                    "L3(4)"
                }
            }
            p if arith::is_prime(p) => return Some(format!("C{p}")),
            _ => return None,
        };
        Some(name.to_string())
    }
}

// --------------------------------------------------------- automorphisms

/// An automorphism of an enumerated group, stored as a permutation of its
/// element index set; verified in full on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutElt {
    pub map: Vec<u32>,
}

impl AutElt {
    pub fn identity(n: usize) -> AutElt {
        AutElt { map: (0..n as u32).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| x as usize == i)
    }
}

/// Result of the automorphism search: |Inn| plus one representative per
/// coset of Inn in Aut (the identity coset first).
pub struct AutData {
    pub inn_order: u64,
    pub outer_reps: Vec<AutElt>,
}

impl AutData {
    pub fn out_order(&self) -> u64 {
        self.outer_reps.len() as u64
    }
    pub fn aut_order(&self) -> u64 {
        self.inn_order * self.out_order()
    }
}

impl FiniteGroup {
    /// Coset representatives of Inn(S) in Aut(S), for a centerless group,
    /// by exhaustive backtracking over class-compatible generator images.
    pub fn automorphism_group(&self, aut_cap: u64) -> Result<AutData> {
        let n = self.elements.len();
        if n as u64 > aut_cap {
            return Err(Error::CapExceeded(aut_cap));
        }
        if self.center_size() != 1 {
            return Err(Error::CenterNontrivial);
        }
        let orders = self.orders().to_vec();
        let cd = self.class_data();
        let key = |i: usize| (orders[i], cd.classes[cd.class_of[i] as usize].1);
        let k = self.generators.len();
        let gen_idx: Vec<usize> =
            self.generators.iter().map(|g| self.index[g] as usize).collect();

        // candidate images: first generator over class representatives only
        // (every Inn-coset contains such a representative), the rest over
        // all invariant-compatible elements
        let mut cands: Vec<Vec<usize>> = Vec::with_capacity(k);
        cands.push(
            cd.classes
                .iter()
                .map(|&(rep, _)| rep)
                .filter(|&r| key(r) == key(gen_idx[0]))
                .collect(),
        );
        for &g in gen_idx.iter().skip(1) {
            cands.push((0..n).filter(|&i| key(i) == key(g)).collect());
        }
        // invariant keys of pairwise generator products, for pruning
        let pair_key: Vec<Vec<(u64, usize)>> = (0..k)
            .map(|i| (0..k).map(|j| key(self.mul_idx(gen_idx[i], gen_idx[j]))).collect())
            .collect();

        let mut reps: Vec<AutElt> = vec![AutElt::identity(n)];
        let mut images: Vec<usize> = Vec::with_capacity(k);
        self.aut_dfs(&mut images, &cands, &pair_key, &key, &gen_idx, &mut reps);
        Ok(AutData { inn_order: self.order(), outer_reps: reps })
    }

    #[allow(clippy::too_many_arguments)]
    fn aut_dfs(
        &self,
        images: &mut Vec<usize>,
        cands: &[Vec<usize>],
        pair_key: &[Vec<(u64, usize)>],
        key: &dyn Fn(usize) -> (u64, usize),
        gen_idx: &[usize],
        reps: &mut Vec<AutElt>,
    ) {
        let depth = images.len();
        if depth == cands.len() {
            if let Some(map) = self.verify_automorphism(images) {
                if !reps.iter().any(|r| self.inner_equivalent(&map, &r.map, gen_idx)) {
                    reps.push(AutElt { map });
                }
            }
            return;
        }
        'cand: for &c in &cands[depth] {
            for (i, &prev) in images.iter().enumerate() {
                if key(self.mul_idx(prev, c)) != pair_key[i][depth]
                    || key(self.mul_idx(c, prev)) != pair_key[depth][i]
                {
                    continue 'cand;
                }
            }
            images.push(c);
            self.aut_dfs(images, cands, pair_key, key, gen_idx, reps);
            images.pop();
        }
    }

    /// Replays the BFS with substituted generator images; returns the index
    /// permutation iff it is a verified bijective homomorphism.
    fn verify_automorphism(&self, gen_images: &[usize]) -> Option<Vec<u32>> {
        let n = self.elements.len();
        let k = self.generators.len();
        let mut pi = vec![u32::MAX; n];
        let mut hit = vec![false; n];
        pi[0] = 0;
        hit[0] = true;
        for i in 1..n {
            let (par, t) = self.parents[i];
            let img = self.mul_idx(pi[par as usize] as usize, gen_images[t as usize]);
            if hit[img] {
                return None; // not injective
            }
            hit[img] = true;
            pi[i] = img as u32;
        }
        // homomorphism on every (element, generator) edge
        for i in 0..n {
            for (t, &gi) in gen_images.iter().enumerate().take(k) {
                if pi[self.gen_mul_idx(i, t)] as usize != self.mul_idx(pi[i] as usize, gi) {
                    return None;
                }
            }
        }
        Some(pi)
    }

    /// True iff a and b lie in the same Inn-coset: some s conjugates the
    /// b-images of all generators onto the a-images.
    fn inner_equivalent(&self, a: &[u32], b: &[u32], gen_idx: &[usize]) -> bool {
        let n = self.elements.len();
        (0..n).any(|s| {
            let sinv = self.inv_idx(s);
            gen_idx.iter().all(|&g| {
                let target = a[g] as usize;
                let conj = self.mul_idx(self.mul_idx(sinv, b[g] as usize), s);
                conj == target
            })
        })
    }
}

/// Streams the p-power-order elements of the coset S·γ in Aut(S): for each
/// s ∈ S it forms inn_s ∘ γ and, when its order is a power of p, emits
/// (s index, order, number of fixed points of the automorphism on S).
/// The fixed-point count is |C_S(x)| for the coset element x.
pub fn coset_p_elements(
    s: &FiniteGroup,
    gamma: &AutElt,
    p: u64,
) -> Vec<(usize, u64, u64)> {
    let n = s.elements.len();
    let gen_idx: Vec<usize> = s.generators.iter().map(|g| s.index_of(g).unwrap()).collect();
    let mut out = Vec::new();
    for si in 0..n {
        let sinv = s.inv_idx(si);
        let apply = |a: usize| s.mul_idx(s.mul_idx(sinv, gamma.map[a] as usize), si);
        let mut ord = 1u64;
        for &g in &gen_idx {
            let mut len = 1u64;
            let mut cur = apply(g);
            while cur != g {
                cur = apply(cur);
                len += 1;
            }
            ord = arith::lcm(ord, len);
        }
        if arith::is_p_power(ord, p) {
            let fix = (0..n).filter(|&a| apply(a) == a).count() as u64;
            out.push((si, ord, fix));
        }
    }
    out
}

// ------------------------------------------------------------ coset slices

/// The coset N·g inside some ambient group, streamed lazily.
pub struct CosetSlice<'a> {
    pub n: &'a FiniteGroup,
    pub g: Elt,
}

impl<'a> CosetSlice<'a> {
    pub fn new(n: &'a FiniteGroup, g: Elt) -> Result<CosetSlice<'a>> {
        if g.kind() != n.kind {
            return Err(Error::IncompatibleMultiplier);
        }
        Ok(CosetSlice { n, g })
    }

    pub fn len(&self) -> u64 {
        self.n.order()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = Elt> + '_ {
        self.n.elements.iter().map(move |e| e.mul(&self.g))
    }
}

// ----------------------------------------------------------- serialization

/// Cycle notation, 1-based; identity prints as "()".
pub fn perm_cycles_string(images: &[u32]) -> String {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || images[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut cur = start;
        loop {
            seen[cur] = true;
            out.push_str(&(cur + 1).to_string());
            cur = images[cur] as usize;
            if cur == start {
                break;
            }
            out.push(' ');
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses 1-based cycle notation into an image array of the given degree.
pub fn parse_perm_cycles(degree: u32, s: &str) -> Result<Vec<u32>> {
    let mut images: Vec<u32> = (0..degree).collect();
    let mut moved = vec![false; degree as usize];
    let mut chars = s.char_indices().peekable();
    while let Some(&(off, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c != '(' {
            return Err(Error::Parse { offset: off, msg: "expected '('".into() });
        }
        chars.next();
        let mut cycle: Vec<u32> = Vec::new();
        loop {
            while matches!(chars.peek(), Some(&(_, c)) if c.is_whitespace() || c == ',') {
                chars.next();
            }
            match chars.peek() {
                Some(&(_, ')')) => {
                    chars.next();
                    break;
                }
                Some(&(off, c)) if c.is_ascii_digit() => {
                    let mut v: u64 = 0;
                    while matches!(chars.peek(), Some(&(_, c)) if c.is_ascii_digit()) {
                        v = v * 10 + (chars.next().unwrap().1 as u64 - '0' as u64);
                    }
                    if v == 0 || v > degree as u64 {
                        return Err(Error::Parse {
                            offset: off,
                            msg: format!("point {v} out of range 1..{degree}"),
                        });
                    }
                    cycle.push(v as u32 - 1);
                }
                Some(&(off, _)) => {
                    return Err(Error::Parse { offset: off, msg: "expected digit or ')'".into() })
                }
                None => {
                    return Err(Error::Parse { offset: s.len(), msg: "unclosed cycle".into() })
                }
            }
        }
        for w in 0..cycle.len() {
            let from = cycle[w] as usize;
            let to = cycle[(w + 1) % cycle.len()];
            if cycle.len() > 1 {
                if moved[from] {
                    return Err(Error::Parse {
                        offset: 0,
                        msg: format!("point {} repeated across cycles", from + 1),
                    });
                }
                moved[from] = true;
                images[from] = to;
            }
        }
    }
    Ok(images)
}

impl FiniteGroup {
    /// Group file: header "PERM n" or "MAT n GF p f c0..cf", one generator
    /// per line (1-based cycles / row-major packed entries).
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        match &self.kind {
            EltKind::Perm { degree } => out.push_str(&format!("PERM {degree}\n")),
            EltKind::Mat { field, n } => out.push_str(&format!("MAT {n} {}\n", field.header())),
        }
        for g in &self.generators {
            match g {
                Elt::Perm(a) => out.push_str(&perm_cycles_string(a)),
                Elt::Mat { data, .. } => {
                    let row: Vec<String> = data.iter().map(u64::to_string).collect();
                    out.push_str(&row.join(" "));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Parses a group file and re-encloses it.
pub fn parse_group(text: &str, cap: u64) -> Result<FiniteGroup> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or(Error::Parse { offset: 0, msg: "empty group file".into() })?;
    let mut it = header.split_whitespace();
    let tag = it.next().unwrap_or("");
    let mut gens: Vec<Elt> = Vec::new();
    match tag {
        "PERM" => {
            let degree: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(Error::Parse { offset: 0, msg: "invalid PERM degree".into() })?;
            for line in lines {
                gens.push(Elt::Perm(parse_perm_cycles(degree, line)?));
            }
            if gens.is_empty() {
                gens.push(Elt::Perm((0..degree).collect()));
            }
        }
        "MAT" => {
            let n: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(Error::Parse { offset: 0, msg: "invalid MAT dimension".into() })?;
            let rest: Vec<&str> = it.collect();
            let field = FieldSpec::parse_header(&rest.join(" "))?;
            for line in lines {
                let data: Vec<u64> = line
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<u64>().map_err(|_| Error::Parse {
                            offset: 0,
                            msg: "invalid matrix entry".into(),
                        })
                    })
                    .collect::<Result<_>>()?;
                if data.len() != (n * n) as usize || data.iter().any(|&e| e >= field.q) {
                    return Err(Error::Parse {
                        offset: 0,
                        msg: format!("matrix line must hold {} entries below {}", n * n, field.q),
                    });
                }
                gens.push(Elt::Mat { field: field.clone(), n, data });
            }
            if gens.is_empty() {
                gens.push(Elt::Mat { field, n, data: mat_identity(n as usize) });
            }
        }
        _ => return Err(Error::Parse { offset: 0, msg: "expected PERM or MAT header".into() }),
    }
    closure(gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn perm(degree: u32, cycles: &str) -> Elt {
        Elt::Perm(parse_perm_cycles(degree, cycles).unwrap())
    }

    fn sym(n: u32) -> FiniteGroup {
        closure(vec![perm(n, "(1 2)"), Elt::Perm((0..n).map(|i| (i + 1) % n).collect())], DEFAULT_CAP)
            .unwrap()
    }

    fn alt5() -> FiniteGroup {
        closure(vec![perm(5, "(1 2 3)"), perm(5, "(1 2 3 4 5)")], DEFAULT_CAP).unwrap()
    }

    fn gl2_3() -> FiniteGroup {
        let f3 = FieldSpec::make(3, 1).unwrap();
        let m = |data: Vec<u64>| Elt::Mat { field: f3.clone(), n: 2, data };
        closure(
            vec![m(vec![1, 1, 0, 1]), m(vec![1, 0, 1, 1]), m(vec![2, 0, 0, 1])],
            DEFAULT_CAP,
        )
        .unwrap()
    }

    #[test]
    fn closure_basics() {
        assert_eq!(sym(3).order(), 6);
        assert_eq!(gl2_3().order(), 48);
        assert_eq!(closure(vec![], DEFAULT_CAP).unwrap().order(), 1);
        // idempotence with identical numbering
        let g = sym(3);
        let again = closure(g.elements.clone(), DEFAULT_CAP).unwrap();
        assert_eq!(again.order(), 6);
    }

    #[test]
    fn closure_cap() {
        match closure(vec![perm(7, "(1 2)"), perm(7, "(1 2 3 4 5 6 7)")], 100) {
            Err(Error::CapExceeded(100)) => {}
            other => panic!("expected CapExceeded, got {other:?}"),
        }
    }

    #[test]
    fn element_orders() {
        let g = sym(5);
        assert_eq!(g.element_order(0), 1);
        let five = g.index_of(&perm(5, "(1 2 3 4 5)")).unwrap();
        assert_eq!(g.element_order(five), 5);
        let gl = gl2_3();
        let neg = gl.index_of(&Elt::Mat {
            field: FieldSpec::make(3, 1).unwrap(),
            n: 2,
            data: vec![2, 0, 0, 2],
        });
        assert_eq!(gl.element_order(neg.unwrap()), 2);
    }

    #[test]
    fn classes_and_centralizers() {
        let mut sizes: Vec<usize> = sym(3).conjugacy_classes().iter().map(|c| c.1).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        let a5 = alt5();
        let mut sizes: Vec<usize> = a5.conjugacy_classes().iter().map(|c| c.1).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        assert_eq!(a5.centralizer_order(&perm(5, "(1 2)(3 4)")).unwrap(), 4);
        assert_eq!(a5.centralizer_order(&perm(5, "(1 2 3)")).unwrap(), 3);
        assert_eq!(a5.centralizer_order(&perm(5, "()")).unwrap(), 60);
        assert!(matches!(a5.centralizer_order(&perm(5, "(1 2)")), Err(Error::NotMember)));
    }

    #[test]
    fn normal_closures() {
        let s3 = sym(3);
        let c3 = s3.index_of(&perm(3, "(1 2 3)")).unwrap();
        assert_eq!(s3.normal_closure(&[c3]).len(), 3);

        let s4 = sym(4);
        let dt = s4.index_of(&perm(4, "(1 2)(3 4)")).unwrap();
        assert_eq!(s4.normal_closure(&[dt]).len(), 4);
        assert_eq!(s4.normal_closure(&[0]).len(), 1);
    }

    #[test]
    fn quotients() {
        let s3 = sym(3);
        let c3 = s3.index_of(&perm(3, "(1 2 3)")).unwrap();
        let n = s3.normal_closure(&[c3]);
        assert_eq!(s3.quotient(&n).unwrap().order(), 2);
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(s3.quotient(&all).unwrap().order(), 1);

        let gl = gl2_3();
        let f3 = FieldSpec::make(3, 1).unwrap();
        let z = gl
            .index_of(&Elt::Mat { field: f3, n: 2, data: vec![2, 0, 0, 2] })
            .unwrap();
        let center = gl.normal_closure(&[z]);
        assert_eq!(center.len(), 2);
        assert_eq!(gl.quotient(&center).unwrap().order(), 24);

        // a non-normal subgroup is rejected
        let s4 = sym(4);
        let t = s4.index_of(&perm(4, "(1 2)")).unwrap();
        let tinv = s4.inv_idx(t);
        assert_eq!(t, tinv);
        assert!(matches!(s4.quotient(&[0, t]), Err(Error::NotNormal)));
    }

    #[test]
    fn composition_series() {
        let mut orders: Vec<u64> =
            sym(5).composition_factors().unwrap().iter().map(|f| f.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 60]);

        let mut orders: Vec<u64> =
            sym(4).composition_factors().unwrap().iter().map(|f| f.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 2, 2, 3]);

        let factors = alt5().composition_factors().unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].order(), 60);
        assert!(factors[0].is_simple());
        assert_eq!(factors[0].simple_name().as_deref(), Some("Alt5"));
        for f in sym(4).composition_factors().unwrap() {
            assert!(f.is_simple());
        }
    }

    #[test]
    fn automorphisms_alt5() {
        let a5 = alt5();
        let aut = a5.automorphism_group(DEFAULT_AUT_CAP).unwrap();
        assert_eq!(aut.inn_order, 60);
        assert_eq!(aut.out_order(), 2);
        assert!(aut.outer_reps[0].is_identity());
        assert!(!aut.outer_reps[1].is_identity());
    }

    #[test]
    fn automorphisms_alt6() {
        let a6 = closure(vec![perm(6, "(1 2 3)"), perm(6, "(2 3 4 5 6)")], DEFAULT_CAP).unwrap();
        assert_eq!(a6.order(), 360);
        let aut = a6.automorphism_group(DEFAULT_AUT_CAP).unwrap();
        assert_eq!(aut.out_order(), 4);
    }

    #[test]
    fn automorphisms_reject_center() {
        let c4 = closure(vec![perm(4, "(1 2 3 4)")], DEFAULT_CAP).unwrap();
        assert!(matches!(
            c4.automorphism_group(DEFAULT_AUT_CAP),
            Err(Error::CenterNontrivial)
        ));
        assert!(matches!(alt5().automorphism_group(10), Err(Error::CapExceeded(10))));
    }

    #[test]
    fn coset_streams_alt5() {
        let a5 = alt5();
        let aut = a5.automorphism_group(DEFAULT_AUT_CAP).unwrap();
        let id = &aut.outer_reps[0];
        let outer = &aut.outer_reps[1];

        let five = coset_p_elements(&a5, id, 5);
        assert_eq!(five.iter().map(|e| e.2).min(), Some(5));

        let three_outer = coset_p_elements(&a5, outer, 3);
        assert!(three_outer.is_empty());

        let two = coset_p_elements(&a5, id, 2);
        assert!(two.iter().any(|&(s, o, f)| s == 0 && o == 1 && f == 60));
        // order-2 inner automorphisms fix exactly the centralizer, size 4
        assert_eq!(two.iter().filter(|e| e.1 == 2).map(|e| e.2).min(), Some(4));
    }

    #[test]
    fn coset_slice() {
        let s3 = sym(3);
        let a3 = closure(vec![perm(3, "(1 2 3)")], DEFAULT_CAP).unwrap();
        let slice = CosetSlice::new(&a3, perm(3, "(1 2)")).unwrap();
        assert_eq!(slice.len(), 3);
        for e in slice.iter() {
            assert!(!a3.contains(&e));
            assert!(s3.contains(&e));
        }
        assert!(matches!(
            CosetSlice::new(&a3, perm(4, "(1 2)")),
            Err(Error::IncompatibleMultiplier)
        ));
    }

    #[test]
    fn serialization_round_trip() {
        for g in [sym(4), alt5(), gl2_3()] {
            let text = g.serialize();
            let again = parse_group(&text, DEFAULT_CAP).unwrap();
            assert_eq!(again.order(), g.order());
            assert_eq!(again.kind, g.kind);
        }
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(perm_cycles_string(&[1, 0, 2, 3]), "(1 2)");
        assert_eq!(perm_cycles_string(&[0, 1]), "()");
        let p = parse_perm_cycles(5, "(1 2)(3 4 5)").unwrap();
        assert_eq!(perm_cycles_string(&p), "(1 2)(3 4 5)");
        assert!(parse_perm_cycles(3, "(1 4)").is_err());
        assert!(parse_perm_cycles(3, "(1 2)(2 3)").is_err());
    }
}
